//! Named sub-stream seeding.
//!
//! Every run derives its generators from one root seed fanned out by stream
//! label, so adding a regime or reordering draws in one stream never
//! perturbs another stream's sequence.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// FNV-1a over bytes. Fixed here so stream derivation is stable across
/// platforms and library versions.
pub(crate) fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Deterministic generator for `(root, label)`.
pub fn substream(root: u64, label: &str) -> ChaCha12Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&root.to_le_bytes());
    let h1 = fnv1a(label.as_bytes());
    key[8..16].copy_from_slice(&h1.to_le_bytes());
    let mut salted = label.as_bytes().to_vec();
    salted.extend_from_slice(&root.to_le_bytes());
    let h2 = fnv1a(&salted);
    key[16..24].copy_from_slice(&h2.to_le_bytes());
    key[24..32].copy_from_slice(&h1.wrapping_mul(h2 | 1).to_le_bytes());
    ChaCha12Rng::from_seed(key)
}

/// Derived u64 seed for handing a whole sub-run (e.g. one training run) its
/// own root.
pub fn subseed(root: u64, label: &str) -> u64 {
    let mut bytes = label.as_bytes().to_vec();
    bytes.extend_from_slice(&root.to_le_bytes());
    fnv1a(&bytes)
}
