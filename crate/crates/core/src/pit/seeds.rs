/// The SplitMix64 finalizer.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of trial `trial` in stream `stream` (the automaton size `K` for the
/// NFA tester):
///
/// `splitmix64(splitmix64(master ^ splitmix64(stream)) ^ trial)`
///
/// Every trial is seeded independently, so running trials in any order or
/// concurrently gives the same results.
pub fn trial_seed(master: u64, stream: u64, trial: u64) -> u64 {
    splitmix64(splitmix64(master ^ splitmix64(stream)) ^ trial)
}
