//! Root and weight data for `sl(n+1)`, exact over the rationals.
//!
//! Elements of the diagonal Cartan subalgebra are stored as their
//! `n+1` diagonal entries ([`CartanVector`]). The simple roots are
//! `α_i(h) = h_{i-1} - h_i` for `i = 1..=n`, and the basic weights `ε_i` are
//! the dual basis, `α_i(ε_j) = δ_ij`. Coordinates with respect to the `ε_i`
//! are carried by [`EpsilonCoefficients`].
//!
//! The bilinear form is `B(x, y) = tr(xy) = Σ x_i y_i`, and the Weyl alcove is
//! `A = { Σ v_i ε_i : v_i ≥ 0, Σ v_i ≤ 1 }`.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, frac, int, Rational};

/// Trace-zero diagonal matrix of size `n+1` with rational entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CartanVectorRepr", into = "CartanVectorRepr")]
pub struct CartanVector {
    entries: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct CartanVectorRepr(#[serde(with = "rational::serde_vec")] Vec<Rational>);

impl TryFrom<CartanVectorRepr> for CartanVector {
    type Error = Error;
    fn try_from(r: CartanVectorRepr) -> Result<Self> {
        CartanVector::new(r.0)
    }
}

impl From<CartanVector> for CartanVectorRepr {
    fn from(v: CartanVector) -> Self {
        CartanVectorRepr(v.entries)
    }
}

impl CartanVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::ZeroRank);
        }
        let trace: Rational = entries.iter().sum();
        if !trace.is_zero() {
            return Err(Error::NonZeroTrace(rational::format(&trace)));
        }
        Ok(CartanVector { entries })
    }

    pub fn zero(n: usize) -> Self {
        CartanVector {
            entries: vec![Rational::zero(); n + 1],
        }
    }

    /// Rank `n`; the vector has `n + 1` entries.
    pub fn rank(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Entry `h_i` with the index read modulo `n + 1`.
    pub fn cyclic(&self, i: isize) -> &Rational {
        let len = self.entries.len() as isize;
        &self.entries[i.rem_euclid(len) as usize]
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(rational::to_f64).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CartanVector {
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(CartanVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(CartanVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// `α_i(h) = h_{i-1} - h_i` for `1 ≤ i ≤ n`.
    pub fn simple_root(&self, i: usize) -> Result<Rational> {
        let n = self.rank();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Ok(&self.entries[i - 1] - &self.entries[i])
    }

    pub fn epsilon_coefficients(&self) -> EpsilonCoefficients {
        let coeffs = (1..=self.rank())
            .map(|i| &self.entries[i - 1] - &self.entries[i])
            .collect();
        EpsilonCoefficients { coeffs }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.entries.len() != other.entries.len() {
            return Err(Error::DimensionMismatch {
                expected: self.entries.len(),
                got: other.entries.len(),
            });
        }
        Ok(())
    }
}

/// Coordinates `v_1, …, v_n` of a Cartan vector in the basic-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EpsilonCoefficients {
    coeffs: Vec<Rational>,
}

impl EpsilonCoefficients {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroRank);
        }
        Ok(EpsilonCoefficients { coeffs })
    }

    pub fn from_integers(v: &[u64]) -> Result<Self> {
        Self::new(v.iter().map(|&x| int(x as i64)).collect())
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn sum(&self) -> Rational {
        self.coeffs.iter().sum()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    /// The coefficients as nonnegative integers, if they are.
    pub fn to_naturals(&self) -> Option<Vec<u64>> {
        self.coeffs
            .iter()
            .map(|c| rational::to_i64(c).and_then(|x| u64::try_from(x).ok()))
            .collect()
    }

    /// `Σ v_i ε_i` as a diagonal vector.
    pub fn to_cartan(&self) -> CartanVector {
        let n = self.rank();
        let dim = int(n as i64 + 1);
        // ε_i has 1 - i/(n+1) on entries 0..i and -i/(n+1) on entries i..=n.
        let shift: Rational = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(idx, v)| v * int(idx as i64 + 1))
            .sum::<Rational>()
            / dim;
        let mut entries = Vec::with_capacity(n + 1);
        let mut tail: Rational = self.sum();
        for j in 0..=n {
            entries.push(&tail - &shift);
            if j < n {
                tail -= &self.coeffs[j];
            }
        }
        CartanVector { entries }
    }
}

/// `ρ = diag(n/2, n/2 - 1, …, -n/2)`.
pub fn rho(n: usize) -> Result<CartanVector> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let entries = (0..=n).map(|j| frac(n as i64 - 2 * j as i64, 2)).collect();
    Ok(CartanVector { entries })
}

/// Basic weight `ε_i`, `1 ≤ i ≤ n`.
pub fn epsilon(n: usize, i: usize) -> Result<CartanVector> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let dim = n as i64 + 1;
    let top = frac(dim - i as i64, dim);
    let bottom = frac(-(i as i64), dim);
    let entries = (0..=n)
        .map(|j| if j < i { top.clone() } else { bottom.clone() })
        .collect();
    Ok(CartanVector { entries })
}

/// `B(x, y) = tr(xy)`.
pub fn bilinear_form(x: &CartanVector, y: &CartanVector) -> Result<Rational> {
    x.check_rank(y)?;
    Ok(x.entries.iter().zip(&y.entries).map(|(a, b)| a * b).sum())
}

pub fn norm_squared(x: &CartanVector) -> Rational {
    x.entries.iter().map(|a| a * a).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlcovePosition {
    Interior,
    Boundary,
    Outside,
}

pub fn alcove_classify(x: &CartanVector) -> AlcovePosition {
    let v = x.epsilon_coefficients();
    let sum = v.sum();
    let one = rational::one();
    if v.coeffs.iter().any(Signed::is_negative) || sum > one {
        AlcovePosition::Outside
    } else if v.coeffs.iter().all(Signed::is_positive) && sum < one {
        AlcovePosition::Interior
    } else {
        AlcovePosition::Boundary
    }
}

/// All dominant weights of level `k`: integer `v` with `v_i ≥ 0`, `Σ v_i ≤ k`,
/// in lexicographic order. There are `binomial(n+k, n)` of them.
pub fn dominant_weights_of_level(n: usize, k: u64) -> Vec<Vec<u64>> {
    fn fill(prefix: &mut Vec<u64>, left: usize, budget: u64, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=budget {
            prefix.push(v);
            fill(prefix, left - 1, budget - v, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        fill(&mut Vec::with_capacity(n), n, k, &mut out);
    }
    out
}

/// Identification of an alcove point `v` whose `(k+n+1)`-multiple is a
/// dominant weight with the shifted weight `(k+n+1)·v ∈ P_k + ρ`.
pub fn alcove_to_shifted_weight(v: &CartanVector, k: u64) -> Result<CartanVector> {
    if alcove_classify(v) != AlcovePosition::Interior {
        return Err(Error::Precondition(
            "point is not in the interior of the alcove".into(),
        ));
    }
    let scaled = v.scale(&int(k as i64 + v.rank() as i64 + 1));
    if !scaled.epsilon_coefficients().is_integral() {
        return Err(Error::Precondition(format!(
            "{}-multiple of the point is not an integral weight",
            k as usize + v.rank() + 1
        )));
    }
    Ok(scaled)
}

/// Checks `P_k + ρ = P_+ ∩ (k+n+1)·Å` by building both sides independently.
///
/// The left side shifts the level-`k` enumeration by `ρ`; the right side scans
/// every integral weight with `v_i ≥ 0`, `Σ v_i ≤ k+n+1` and keeps those whose
/// rescaling lands in the open alcove.
pub fn verify_shifted_level_identity(n: usize, k: u64) -> Result<bool> {
    let rho = rho(n)?;
    let mut lhs = BTreeSet::new();
    for v in dominant_weights_of_level(n, k) {
        let w = EpsilonCoefficients::from_integers(&v)?
            .to_cartan()
            .add(&rho)?;
        lhs.insert(w);
    }

    let bound = k + n as u64 + 1;
    let inv = frac(1, bound as i64);
    let mut rhs = BTreeSet::new();
    let mut v = vec![0u64; n];
    loop {
        let w = EpsilonCoefficients::from_integers(&v)?.to_cartan();
        if alcove_classify(&w.scale(&inv)) == AlcovePosition::Interior {
            rhs.insert(w);
        }
        // odometer over the closed simplex Σ v_i ≤ bound
        let mut pos = 0;
        while pos < n && v.iter().sum::<u64>() == bound {
            v[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
        v[pos] += 1;
    }
    Ok(lhs == rhs)
}
