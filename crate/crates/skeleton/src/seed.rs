//! Deterministic sub-seed derivation.
//!
//! Every stochastic component of the workspace draws its RNG seed as
//! `derive(global_seed, component_name)`, so one global seed reproduces a
//! whole pipeline while components stay decorrelated. The mix is a fixed
//! FNV-1a fold finished with a splitmix64 round; it never changes between
//! releases, which keeps archived outputs reproducible.

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derive the sub-seed for `component` from a global seed.
pub fn derive(global_seed: u64, component: &str) -> u64 {
    let mut h = FNV_OFFSET ^ global_seed;
    for byte in component.as_bytes() {
        h = (h ^ u64::from(*byte)).wrapping_mul(FNV_PRIME);
    }
    splitmix64(h)
}

/// Derive an indexed sub-seed, for components instantiated many times
/// (per-clip generation seeds and the like).
pub fn derive_indexed(global_seed: u64, component: &str, index: u64) -> u64 {
    splitmix64(derive(global_seed, component) ^ splitmix64(index))
}
