//! Seeded random streams. Every consumer draws from ChaCha8 seeded with the
//! run seed and a fixed stream id, so streams never overlap and adding a new
//! consumer never perturbs the others.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const STREAM_DISORDER: u64 = 1;
pub const STREAM_SIDEBAND_PHASES: u64 = 2;
pub const STREAM_INITIAL_STATE: u64 = 3;

pub fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(id);
    r
}
