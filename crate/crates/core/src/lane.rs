//! Fixed 32-byte operand lanes. Every value that enters a signature or an
//! XOR mask is first normalized to a [`Lane32`], so the `||` and `⊕`
//! operations are defined over a single width.

use crate::errors::CodecError;

pub const LANE_BYTES: usize = 32;

/// A 32-byte fixed-width operand. Shorter semantic values are
/// right-zero-padded; how many bytes are meaningful is a property of the
/// field, not of the lane.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lane32(pub [u8; LANE_BYTES]);

impl Lane32 {
    pub const ZERO: Lane32 = Lane32([0u8; LANE_BYTES]);

    pub fn as_bytes(&self) -> &[u8; LANE_BYTES] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self, CodecError> {
        let bytes = hex::decode(s).map_err(|_| CodecError::Malformed("bad hex lane"))?;
        pad_lane(&bytes)
    }

    /// Strip trailing zero bytes; the recovery rule for password lanes,
    /// which forbid interior zeros.
    pub fn unpad_trailing(&self) -> &[u8] {
        let end = self
            .0
            .iter()
            .rposition(|&b| b != 0)
            .map_or(0, |i| i + 1);
        &self.0[..end]
    }

    /// First `n` bytes; the recovery rule for fixed-width fields such as
    /// the 6-byte hardware address.
    pub fn prefix(&self, n: usize) -> &[u8] {
        &self.0[..n]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    pub fn zeroize(&mut self) {
        self.0 = [0u8; LANE_BYTES];
    }
}

impl std::fmt::Debug for Lane32 {
    fmt_impl!();
}

macro_rules! fmt_impl {
    () => {
        fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
            write!(f, "Lane32({})", self.to_hex())
        }
    };
}
use fmt_impl;

impl From<[u8; LANE_BYTES]> for Lane32 {
    fn from(bytes: [u8; LANE_BYTES]) -> Self {
        Lane32(bytes)
    }
}

/// Zero-pad `value` into a lane. Inputs longer than 32 bytes are an
/// encoding error, never truncated.
pub fn pad_lane(value: &[u8]) -> Result<Lane32, CodecError> {
    if value.len() > LANE_BYTES {
        return Err(CodecError::OverLength(value.len()));
    }
    let mut out = [0u8; LANE_BYTES];
    out[..value.len()].copy_from_slice(value);
    Ok(Lane32(out))
}

/// Bytewise XOR fold of `operands` over `base`. Applying the same
/// operands twice recovers `base`.
pub fn xor_mask(base: Lane32, operands: &[Lane32]) -> Lane32 {
    let mut out = base.0;
    for op in operands {
        for (o, b) in out.iter_mut().zip(op.0.iter()) {
            *o ^= b;
        }
    }
    Lane32(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pad_mac_address() {
        let lane = pad_lane(&[0x8c, 0x70, 0x5a, 0x41, 0x49, 0xbc]).unwrap();
        assert_eq!(lane.prefix(6), &[0x8c, 0x70, 0x5a, 0x41, 0x49, 0xbc]);
        assert!(lane.0[6..].iter().all(|&b| b == 0));
    }

    #[test]
    fn pad_full_lane_is_identity() {
        let bytes = [0xabu8; LANE_BYTES];
        assert_eq!(pad_lane(&bytes).unwrap().0, bytes);
    }

    #[test]
    fn pad_over_length_errors() {
        assert_eq!(pad_lane(&[0u8; 33]), Err(CodecError::OverLength(33)));
    }

    #[test]
    fn mask_identity_and_involution() {
        let base = pad_lane(b"a password").unwrap();
        assert_eq!(xor_mask(base, &[Lane32::ZERO, Lane32::ZERO]), base);
        let ops = [pad_lane(b"x").unwrap(), pad_lane(&[7u8; 32]).unwrap()];
        let masked = xor_mask(base, &ops);
        assert_ne!(masked, base);
        assert_eq!(xor_mask(masked, &ops), base);
    }

    #[test]
    fn unpad_strips_trailing_zeros_only() {
        let lane = pad_lane(b"pw").unwrap();
        assert_eq!(lane.unpad_trailing(), b"pw");
        assert_eq!(Lane32::ZERO.unpad_trailing(), b"");
    }
}
