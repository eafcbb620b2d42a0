//! Counter-based RNG streams.
//!
//! Every unit of work (an ACO trial, a chain) gets its own ChaCha stream keyed
//! by the master seed and a stream id, so results do not depend on which
//! thread runs what or in which order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

/// Stream-id namespaces.
pub const ACO_STREAMS: u64 = 0;
pub const CHAIN_STREAMS: u64 = 1 << 40;

pub fn stream(master: u64, id: u64) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(id);
    rng
}
