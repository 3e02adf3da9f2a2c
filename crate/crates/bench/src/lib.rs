//! Inputs shared by the kernel benchmarks.

use ttstar_core::lie::CartanVector;
use ttstar_core::rational::frac;
use ttstar_core::toda_params::{self, KParams, MParams, StokesParams};

/// Generic symmetric `m` of rank `n` with evenly spaced entries of step 1/(2n+2).
pub fn spread_m(n: usize) -> MParams {
    let den = 2 * (n as i64 + 1);
    let entries = (0..=n)
        .map(|i| frac(n as i64 - 2 * i as i64, 2 * den))
        .collect();
    MParams::new(CartanVector::new(entries).expect("antisymmetric entries have zero trace"))
}

pub fn spread_stokes(n: usize) -> StokesParams {
    toda_params::stokes_from_m(&spread_m(n)).expect("generic m has Stokes data")
}

/// `k = (1, 2, …, n+1)`.
pub fn ramp_k(n: usize) -> KParams {
    KParams::from_integers(&(1..=n as i64 + 1).collect::<Vec<_>>()).expect("positive exponents")
}
