//! Exponents `k`, asymptotic data `m` and Stokes parameters `s`.
//!
//! The exponents `k_0, …, k_n ≥ -1` of the holomorphic form determine the
//! total `N = n + 1 + Σ k_i`, and `m` is obtained by balancing them:
//!
//! ```text
//! m_{i-1} - m_i + 1 = (n+1)/N · (k_i + 1)      (indices mod n+1)
//! N/(n+1) · (m + ρ) = ρ + Σ_{i≥1} k_i ε_i
//! ```
//!
//! The root-of-monodromy matrix is conjugate to `exp(2πi (m+ρ)/(n+1))`, and the
//! Stokes parameter `s_i` is the `i`-th elementary symmetric function of its
//! eigenvalues.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{self, CartanVector, EpsilonCoefficients};
use crate::poly;
use crate::rational::{self, int, Rational};

/// Exponents `k_0, …, k_n` with `k_i ≥ -1` and `N > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "KParamsRepr", into = "KParamsRepr")]
pub struct KParams {
    k: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct KParamsRepr {
    n: usize,
    #[serde(with = "rational::serde_vec")]
    k: Vec<Rational>,
}

impl TryFrom<KParamsRepr> for KParams {
    type Error = Error;
    fn try_from(r: KParamsRepr) -> Result<Self> {
        if r.k.len() != r.n + 1 {
            return Err(Error::DimensionMismatch {
                expected: r.n + 1,
                got: r.k.len(),
            });
        }
        KParams::new(r.k)
    }
}

impl From<KParams> for KParamsRepr {
    fn from(kp: KParams) -> Self {
        KParamsRepr {
            n: kp.rank(),
            k: kp.k,
        }
    }
}

impl KParams {
    pub fn new(k: Vec<Rational>) -> Result<Self> {
        if k.len() < 2 {
            return Err(Error::ZeroRank);
        }
        let kp = KParams { k };
        if let Some((index, value)) = kp.k.iter().enumerate().find(|(_, v)| **v < int(-1)) {
            return Err(Error::ExponentBelowMinusOne {
                index,
                value: rational::format(value),
            });
        }
        let total = kp.total();
        if !total.is_positive() {
            return Err(Error::NonPositiveTotal(rational::format(&total)));
        }
        Ok(kp)
    }

    pub fn from_integers(k: &[i64]) -> Result<Self> {
        Self::new(k.iter().map(|&x| int(x)).collect())
    }

    pub fn rank(&self) -> usize {
        self.k.len() - 1
    }

    pub fn values(&self) -> &[Rational] {
        &self.k
    }

    /// `N = n + 1 + Σ k_i`.
    pub fn total(&self) -> Rational {
        int(self.k.len() as i64) + self.k.iter().sum::<Rational>()
    }

    /// `k_i ≥ -1` for all `i` and `N > 0`.
    pub fn is_admissible(&self) -> bool {
        self.k.iter().all(|v| *v >= int(-1)) && self.total().is_positive()
    }

    /// `k_i = k_{n-i+1}` for `i = 1..=n`.
    pub fn is_tt_symmetric(&self) -> bool {
        let n = self.rank();
        (1..=n).all(|i| self.k[i] == self.k[n + 1 - i])
    }

    /// All entries are nonnegative integers.
    pub fn naturals(&self) -> Option<Vec<u64>> {
        self.k
            .iter()
            .map(|v| rational::to_i64(v).and_then(|x| u64::try_from(x).ok()))
            .collect()
    }
}

/// Asymptotic data `m`, a trace-zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MParams {
    pub m: CartanVector,
}

impl MParams {
    pub fn new(m: CartanVector) -> Self {
        MParams { m }
    }

    pub fn rank(&self) -> usize {
        self.m.rank()
    }

    /// `m_{i-1} - m_i + 1` for `i = 0..=n`, indices mod `n+1`.
    pub fn wall_values(&self) -> Vec<Rational> {
        let n1 = self.m.entries().len() as isize;
        (0..n1)
            .map(|i| self.m.cyclic(i - 1) - self.m.cyclic(i) + int(1))
            .collect()
    }

    /// `m_i + m_{n-i} = 0` for all `i`.
    pub fn is_tt_symmetric(&self) -> bool {
        let e = self.m.entries();
        let n = e.len() - 1;
        (0..=n).all(|i| (&e[i] + &e[n - i]).is_zero())
    }
}

/// Stokes parameters `s_1, …, s_n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StokesParams {
    #[serde(with = "complex_list")]
    pub s: Vec<Complex64>,
}

impl StokesParams {
    pub fn new(s: Vec<Complex64>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::ZeroRank);
        }
        Ok(StokesParams { s })
    }

    pub fn from_real(s: &[f64]) -> Result<Self> {
        Self::new(s.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn rank(&self) -> usize {
        self.s.len()
    }

    pub fn max_distance(&self, other: &StokesParams) -> f64 {
        if self.s.len() != other.s.len() {
            return f64::INFINITY;
        }
        self.s
            .iter()
            .zip(&other.s)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// `{"re": …, "im": …}` encoding of complex numbers.
pub mod complex_list {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct ReIm {
        re: f64,
        im: f64,
    }

    pub fn serialize<S: Serializer>(v: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
        let list: Vec<ReIm> = v.iter().map(|z| ReIm { re: z.re, im: z.im }).collect();
        list.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Complex64>, D::Error> {
        let list = Vec::<ReIm>::deserialize(d)?;
        Ok(list
            .into_iter()
            .map(|z| Complex64::new(z.re, z.im))
            .collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeStatus {
    pub member: bool,
    pub generic: bool,
    pub symmetric: bool,
}

/// `m = ((n+1)/N)(ρ + Σ_{i≥1} k_i ε_i) - ρ`.
pub fn m_from_k(kp: &KParams) -> Result<MParams> {
    let total = kp.total();
    if !total.is_positive() {
        return Err(Error::NonPositiveTotal(rational::format(&total)));
    }
    let n = kp.rank();
    let rho = lie::rho(n)?;
    let lambda = EpsilonCoefficients::new(kp.k[1..].to_vec())?.to_cartan();
    let scale = int(n as i64 + 1) / total;
    let m = rho.add(&lambda)?.scale(&scale).sub(&rho)?;
    Ok(MParams { m })
}

/// `k_i = (N/(n+1))(m_{i-1} - m_i + 1) - 1`. The result is not required to be
/// admissible; see [`KParams::is_admissible`].
pub fn k_from_m(m: &MParams, total: &Rational) -> Result<KParams> {
    if !total.is_positive() {
        return Err(Error::NonPositiveTotal(rational::format(total)));
    }
    let scale = total / int(m.rank() as i64 + 1);
    let k = m
        .wall_values()
        .into_iter()
        .map(|w| w * &scale - int(1))
        .collect();
    Ok(KParams { k })
}

pub fn polytope_status(m: &MParams) -> PolytopeStatus {
    let walls = m.wall_values();
    PolytopeStatus {
        member: walls.iter().all(|w| !w.is_negative()),
        generic: walls.iter().all(Signed::is_positive),
        symmetric: m.is_tt_symmetric(),
    }
}

/// `(m + ρ)/(n+1)`, the exponent of the diagonalised root of monodromy.
pub fn monodromy_exponent(m: &MParams) -> Result<CartanVector> {
    let n = m.rank();
    Ok(m.m
        .add(&lie::rho(n)?)?
        .scale(&Rational::new(1.into(), (n as i64 + 1).into())))
}

/// `λ_j = exp(2πi (m_j + ρ_j)/(n+1))`.
pub fn monodromy_eigenvalues(m: &MParams) -> Result<Vec<Complex64>> {
    let c = monodromy_exponent(m)?;
    Ok(c.entries()
        .iter()
        .map(|x| unit_phase(rational::to_f64(&rational::fract(x))))
        .collect())
}

fn unit_phase(turns: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * turns)
}

/// `s_i = e_i(λ_0, …, λ_n)` for `i = 1..=n`.
pub fn stokes_from_m(m: &MParams) -> Result<StokesParams> {
    let lambdas = monodromy_eigenvalues(m)?;
    let e = poly::elementary_symmetric(&lambdas);
    StokesParams::new(e[1..lambdas.len()].to_vec())
}

/// Same as [`stokes_from_m`] for floating-point `m` (trace zero assumed).
pub fn stokes_from_m_values(m: &[f64]) -> Result<StokesParams> {
    if m.len() < 2 {
        return Err(Error::ZeroRank);
    }
    let n = m.len() - 1;
    let lambdas: Vec<Complex64> = m
        .iter()
        .enumerate()
        .map(|(j, mj)| {
            let rho_j = n as f64 / 2.0 - j as f64;
            unit_phase((mj + rho_j) / (n as f64 + 1.0))
        })
        .collect();
    let e = poly::elementary_symmetric(&lambdas);
    StokesParams::new(e[1..=n].to_vec())
}

/// Monic characteristic polynomial `x^{n+1} - s_1 x^n + s_2 x^{n-1} - … +
/// (-1)^{n+1}`, coefficients in descending powers.
pub fn char_poly_from_stokes(s: &StokesParams) -> Vec<Complex64> {
    let n = s.rank();
    let mut coeffs = Vec::with_capacity(n + 2);
    coeffs.push(Complex64::new(1.0, 0.0));
    for (i, si) in s.s.iter().enumerate() {
        coeffs.push(if i % 2 == 0 { -si } else { *si });
    }
    coeffs.push(Complex64::new(
        if n.is_multiple_of(2) { -1.0 } else { 1.0 },
        0.0,
    ));
    coeffs
}

/// Minimum separation of eigenvalues below which the inversion is refused.
pub const REPEATED_ROOT_TOL: f64 = 1e-6;
/// Largest tolerated first-order error bound of a computed eigenvalue.
pub const ROOT_CONDITION_TOL: f64 = 1e-10;
const UNIT_CIRCLE_TOL: f64 = 1e-7;

/// Recovers `m` from Stokes parameters whose eigenvalues are distinct.
///
/// The eigenvalues `exp(2πi c_j)` must lie on the unit circle with product 1.
/// Their phases are ordered so that `c` is strictly decreasing with
/// `c_0 - c_n < 1` and trace zero, which is the unique representative in the
/// open alcove; then `m = (n+1) c - ρ`.
pub fn m_from_stokes(s: &StokesParams) -> Result<Vec<f64>> {
    let n = s.rank();
    let coeffs = char_poly_from_stokes(s);
    let roots = poly::roots(&coeffs)?;
    // A k-fold root comes back split by about ε^{1/k}, so separation alone
    // cannot detect it; the error bound blows up on such clusters.
    let sep = poly::min_pairwise_distance(&roots);
    let worst_bound = roots
        .iter()
        .map(|&r| poly::root_error_bound(&coeffs, r))
        .fold(0.0, f64::max);
    if sep < REPEATED_ROOT_TOL || !(worst_bound <= ROOT_CONDITION_TOL) {
        return Err(Error::RepeatedRoots(sep));
    }
    if let Some(r) = roots
        .iter()
        .find(|r| (r.norm() - 1.0).abs() > UNIT_CIRCLE_TOL)
    {
        return Err(Error::AlcovePlacement(format!(
            "eigenvalue {r} is off the unit circle"
        )));
    }

    let mut phases: Vec<f64> = roots
        .iter()
        .map(|r| {
            let t = (r.arg() / (2.0 * PI)).rem_euclid(1.0);
            if t >= 1.0 {
                0.0
            } else {
                t
            }
        })
        .collect();
    phases.sort_by(|a, b| b.total_cmp(a));

    let sum: f64 = phases.iter().sum();
    let sum_int = sum.round();
    if (sum - sum_int).abs() > 1e-7 {
        return Err(Error::AlcovePlacement(format!(
            "eigenvalue product is not 1 (phase sum {sum})"
        )));
    }
    let dim = n as i64 + 1;
    let sum_int = sum_int as i64;
    let rotate = sum_int.rem_euclid(dim) as usize;
    let offset = ((rotate as i64 - sum_int) / dim) as f64;

    let mut c: Vec<f64> = phases[rotate..]
        .iter()
        .map(|p| p + offset)
        .chain(phases[..rotate].iter().map(|p| p + offset - 1.0))
        .collect();
    let mean = c.iter().sum::<f64>() / dim as f64;
    for x in c.iter_mut() {
        *x -= mean;
    }

    let gaps_ok = c.windows(2).all(|w| w[0] - w[1] > 0.0);
    if !gaps_ok || c[0] - c[n] >= 1.0 {
        return Err(Error::AlcovePlacement(
            "phases do not determine an interior alcove point".into(),
        ));
    }

    Ok(c.iter()
        .enumerate()
        .map(|(j, cj)| dim as f64 * cj - (n as f64 / 2.0 - j as f64))
        .collect())
}
