use thiserror::Error;

/// Encoding/decoding failures in the lane and message layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("value of {0} bytes exceeds the 32-byte lane")]
    OverLength(usize),
    #[error("malformed message: {0}")]
    Malformed(&'static str),
    #[error("message kind {got:#04x} does not match expected {expected:#04x}")]
    KindMismatch { expected: u8, got: u8 },
    #[error("buffer length {got} does not match schema length {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

/// Failures in the public-key layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CryptoError {
    #[error("integrity tag mismatch")]
    Tag,
    #[error("invalid key: {0}")]
    Key(&'static str),
    #[error("envelope too short")]
    Envelope,
}

/// Device probe failures.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DeviceError {
    #[error("no network interface available")]
    NoInterface,
    #[error("probe failed: {0}")]
    Probe(String),
}

/// Store loading/persistence failures.
#[derive(Debug, Error)]
pub enum StoreError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("corrupt store line {line}: {reason}")]
    Corrupt { line: usize, reason: String },
    #[error("duplicate identity {0}")]
    DuplicateIdentity(String),
    #[error("unknown identity {0}")]
    UnknownIdentity(String),
    #[error("already revoked: {0}")]
    AlreadyRevoked(String),
}

/// Client-side state machine failures.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum StateError {
    #[error("profile holds no unconsumed one-time password")]
    OtpMissing,
    #[error("profile is not registered")]
    NotRegistered,
    #[error("password rejected by lane policy: {0}")]
    PasswordPolicy(&'static str),
    #[error("old password does not match profile")]
    WrongPassword,
    #[error("unknown revocation reason index {0}")]
    UnknownReason(usize),
    #[error("no protocol run pending")]
    NoRunPending,
}

/// The individual checks an entity performs, in the order the protocol
/// prescribes them. Rejections carry the first check that failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Freshness,
    NonceReplay,
    UnknownPeer,
    Decrypt,
    Malformed,
    OtpUnknown,
    MacSig,
    PseudonymUnknown,
    IdentityUnlinked,
    Revoked,
    PwMismatch,
    SigMismatch,
    ReasonUnknown,
    RoleMismatch,
    SessionMissing,
    AckNonce,
}

impl CheckKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckKind::Freshness => "freshness",
            CheckKind::NonceReplay => "nonce-replay",
            CheckKind::UnknownPeer => "unknown-peer",
            CheckKind::Decrypt => "decrypt",
            CheckKind::Malformed => "malformed",
            CheckKind::OtpUnknown => "otp-unknown",
            CheckKind::MacSig => "mac-sig",
            CheckKind::PseudonymUnknown => "pseudonym-unknown",
            CheckKind::IdentityUnlinked => "identity-unlinked",
            CheckKind::Revoked => "revoked",
            CheckKind::PwMismatch => "pw-mismatch",
            CheckKind::SigMismatch => "sig-mismatch",
            CheckKind::ReasonUnknown => "reason-unknown",
            CheckKind::RoleMismatch => "role-mismatch",
            CheckKind::SessionMissing => "session-missing",
            CheckKind::AckNonce => "ack-nonce",
        }
    }
}

impl std::fmt::Display for CheckKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A typed rejection. The peer only sees a discarded connection; the type
/// is for logs and the harness.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("rejected: {check}")]
pub struct Rejection {
    pub check: CheckKind,
}

impl Rejection {
    pub fn new(check: CheckKind) -> Self {
        Rejection { check }
    }
}
