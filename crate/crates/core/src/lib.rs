//! Core building blocks for the RAMHU mutual-authentication scheme: the
//! PHOTON-256 sponge hash used for every signature, an ECIES-style
//! public-key layer over a 256-bit prime curve, the fixed-lane wire codec
//! with its XOR-mask algebra, the three protocol entities (client, central
//! server, attributes server) and the persistent stores behind them.

pub mod attributes_server;
pub mod central_server;
pub mod client;
pub mod clock;
pub mod device;
pub mod ecies;
pub mod errors;
pub mod keyfile;
pub mod lane;
pub mod photon;
pub mod profile;
pub mod stores;
pub mod tape;
pub mod wire;

pub use clock::{Clock, LogicalClock, SystemClock};
pub use errors::{CheckKind, Rejection};
pub use lane::{xor_mask, Lane32};
pub use photon::{photon_hash, Digest256};
