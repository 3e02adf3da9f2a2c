//! Special elements of `SU(n+1)` at level `k` and characters evaluated on them.
//!
//! For `Λ ∈ P_k` the special element is `t_Λ = exp(2πi ζ_Λ)` with
//! `ζ_Λ = (Λ+ρ)/(k+n+1)`. A representation lies in the level-`k` fusion ideal
//! when its character vanishes at every `t_Λ`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{self, CartanVector};
use crate::poly;
use crate::rational::{self, int, Rational};
use crate::rep_map::{self, AffineDominantWeight};
use crate::toda_params::{self, complex_list, KParams};

/// Below this `|Vandermonde|` the bialternant is refused.
pub const VANDERMONDE_GUARD: f64 = 1e-10;
/// `|χ| <` this counts as vanishing.
pub const VANISHING_TOL: f64 = 1e-8;

/// Diagonal entries `x_0, …, x_n` of a special element.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecialElement {
    #[serde(with = "complex_list")]
    pub x: Vec<Complex64>,
}

impl SpecialElement {
    pub fn rank(&self) -> usize {
        self.x.len() - 1
    }
}

/// `ζ_Λ = (Λ+ρ)/(k+n+1)`.
pub fn zeta(w: &AffineDominantWeight) -> Result<CartanVector> {
    let n = w.rank();
    let shifted = w.weight().add(&lie::rho(n)?)?;
    Ok(shifted.scale(&Rational::new(
        1.into(),
        (w.level() as i64 + n as i64 + 1).into(),
    )))
}

pub fn special_element(w: &AffineDominantWeight) -> Result<SpecialElement> {
    let z = zeta(w)?;
    let x = z
        .entries()
        .iter()
        .map(|q| Complex64::from_polar(1.0, 2.0 * PI * rational::to_f64(&rational::fract(q))))
        .collect();
    Ok(SpecialElement { x })
}

/// Exact check of `ζ_Λ = (m+ρ)/(n+1)` for integer exponents.
pub fn verify_zeta_identity(kp: &KParams) -> Result<bool> {
    let w = rep_map::weight_from_k(kp)?;
    let m = toda_params::m_from_k(kp)?;
    Ok(zeta(&w)? == toda_params::monodromy_exponent(&m)?)
}

/// Partition `λ_j = v_{j+1} + … + v_n` (`λ_n = 0`) attached to `Σ v_i ε_i`.
pub fn partition_of(mu: &[u64]) -> Vec<u64> {
    let mut lambda = vec![0u64; mu.len() + 1];
    for j in (0..mu.len()).rev() {
        lambda[j] = lambda[j + 1] + mu[j];
    }
    lambda
}

/// Character of the irreducible representation with highest weight
/// `Σ mu_i ε_i`, evaluated at `diag(x)` as the bialternant
/// `det(x_j^{λ_i+n-i}) / det(x_j^{n-i})`.
pub fn character_value(mu: &[u64], t: &SpecialElement) -> Result<Complex64> {
    let n = t.rank();
    if mu.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: mu.len(),
        });
    }
    let lambda = partition_of(mu);
    let alternant = |shift: &dyn Fn(usize) -> u64| {
        let rows = (0..=n)
            .map(|i| {
                t.x.iter()
                    .map(|x| x.powu((shift(i) + (n - i) as u64) as u32))
                    .collect()
            })
            .collect();
        poly::determinant(rows)
    };
    let denominator = alternant(&|_| 0);
    if denominator.norm() < VANDERMONDE_GUARD {
        return Err(Error::SingularDenominator(denominator.norm()));
    }
    Ok(alternant(&|i| lambda[i]) / denominator)
}

/// Character of `mu` at every special element of level `k`, in the order of
/// [`lie::dominant_weights_of_level`].
pub fn character_table(
    mu: &[u64],
    n: usize,
    k: u64,
) -> Result<Vec<(AffineDominantWeight, SpecialElement, Complex64)>> {
    lie::dominant_weights_of_level(n, k)
        .into_iter()
        .map(|v| {
            let w = AffineDominantWeight::new(v, k)?;
            let t = special_element(&w)?;
            let chi = character_value(mu, &t)?;
            Ok((w, t, chi))
        })
        .collect()
}

pub fn in_fusion_ideal(mu: &[u64], n: usize, k: u64) -> Result<bool> {
    Ok(character_table(mu, n, k)?
        .iter()
        .all(|(_, _, chi)| chi.norm() < VANISHING_TOL))
}

/// Dimension of the representation `Σ mu_i ε_i` by the Weyl dimension formula,
/// used as a sanity bound in tests and self-checks.
pub fn weyl_dimension(mu: &[u64]) -> Rational {
    let lambda = partition_of(mu);
    let n = mu.len();
    let mut num = int(1);
    for i in 0..=n {
        for j in i + 1..=n {
            let a = lambda[i] as i64 - lambda[j] as i64 + (j - i) as i64;
            num *= Rational::new(a.into(), ((j - i) as i64).into());
        }
    }
    num
}
