//! Integer exponents `k` and affine dominant weights `(Λ, k)`.
//!
//! For `k_0, …, k_n ∈ Z≥0` the label is `Λ = Σ_{i≥1} k_i ε_i` at level
//! `k = Σ_i k_i = N - (n+1)`. The alcove point `(m+ρ)/(n+1)` built from the
//! same exponents is `(Λ+ρ)/(k+n+1)`.

use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{self, AlcovePosition, CartanVector, EpsilonCoefficients};
use crate::rational::{self, int, Rational};
use crate::toda_params::{self, KParams, MParams};

/// Dominant weight `Λ = Σ v_i ε_i` of `sl(n+1)` together with a level `k ≥ Σ v_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WeightRepr", into = "WeightRepr")]
pub struct AffineDominantWeight {
    v: Vec<u64>,
    level: u64,
}

#[derive(Serialize, Deserialize)]
struct WeightRepr {
    n: usize,
    v: Vec<u64>,
    level: u64,
}

impl TryFrom<WeightRepr> for AffineDominantWeight {
    type Error = Error;
    fn try_from(r: WeightRepr) -> Result<Self> {
        if r.v.len() != r.n {
            return Err(Error::DimensionMismatch {
                expected: r.n,
                got: r.v.len(),
            });
        }
        AffineDominantWeight::new(r.v, r.level)
    }
}

impl From<AffineDominantWeight> for WeightRepr {
    fn from(w: AffineDominantWeight) -> Self {
        WeightRepr {
            n: w.v.len(),
            v: w.v,
            level: w.level,
        }
    }
}

impl AffineDominantWeight {
    pub fn new(v: Vec<u64>, level: u64) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::ZeroRank);
        }
        let sum: u64 = v.iter().sum();
        if sum > level {
            return Err(Error::LevelViolation { sum, level });
        }
        Ok(AffineDominantWeight { v, level })
    }

    pub fn rank(&self) -> usize {
        self.v.len()
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.v
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// `Λ` as a diagonal vector.
    pub fn weight(&self) -> CartanVector {
        EpsilonCoefficients::from_integers(&self.v)
            .expect("rank checked at construction")
            .to_cartan()
    }
}

pub fn weight_from_k(kp: &KParams) -> Result<AffineDominantWeight> {
    let k = natural_exponents(kp)?;
    let level = k.iter().sum();
    AffineDominantWeight::new(k[1..].to_vec(), level)
}

pub fn k_from_weight(w: &AffineDominantWeight) -> Result<KParams> {
    let sum: u64 = w.v.iter().sum();
    if sum > w.level {
        return Err(Error::LevelViolation {
            sum,
            level: w.level,
        });
    }
    let mut k = Vec::with_capacity(w.rank() + 1);
    k.push(int((w.level - sum) as i64));
    k.extend(w.v.iter().map(|&x| int(x as i64)));
    KParams::new(k)
}

fn natural_exponents(kp: &KParams) -> Result<Vec<u64>> {
    kp.values()
        .iter()
        .enumerate()
        .map(|(index, value)| {
            rational::to_i64(value)
                .and_then(|x| u64::try_from(x).ok())
                .ok_or_else(|| Error::NonIntegralExponent {
                    index,
                    value: rational::format(value),
                })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainTheoremCheck {
    /// `(m+ρ)/(n+1)` lies in the open alcove and on the level-`k` grid.
    pub alcove_ok: bool,
    /// Its rescaling by `k+n+1` is `Σ_{i≥1} k_i ε_i + ρ`.
    pub theta_ok: bool,
    pub alcove_point: CartanVector,
}

/// Exact check that integer exponents land on the alcove point of the
/// corresponding dominant weight.
pub fn verify_main_theorem(kp: &KParams) -> Result<MainTheoremCheck> {
    let k = natural_exponents(kp)?;
    let n = kp.rank();
    let level: u64 = k.iter().sum();
    let m = toda_params::m_from_k(kp)?;
    let point = toda_params::monodromy_exponent(&m)?;

    let interior = lie::alcove_classify(&point) == AlcovePosition::Interior;
    let on_grid = point
        .scale(&int((level + n as u64 + 1) as i64))
        .epsilon_coefficients()
        .is_integral();
    let alcove_ok = interior && on_grid;

    let theta_ok = match lie::alcove_to_shifted_weight(&point, level) {
        Ok(image) => {
            let target = EpsilonCoefficients::from_integers(&k[1..])?
                .to_cartan()
                .add(&lie::rho(n)?)?;
            image == target
        }
        Err(_) => false,
    };

    Ok(MainTheoremCheck {
        alcove_ok,
        theta_ok,
        alcove_point: point,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MClassification {
    pub generic: bool,
    pub rational: bool,
    /// Smallest `N` making every `k_i` a nonnegative integer.
    #[serde(with = "opt_rational")]
    pub total: Option<Rational>,
    pub representation: Option<AffineDominantWeight>,
    /// Set when `m` is generic but no realisation was found below the search cap.
    pub search_exhausted: bool,
}

mod opt_rational {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        q: &Option<Rational>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_some(&rational::format(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| rational::parse(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Looks for integer exponents realising `m`.
///
/// With `g_i = (m_{i-1} - m_i + 1)/(n+1)` we need `N g_i` to be positive
/// integers; the smallest such `N` is the lcm of the denominators of the
/// `g_i`. The search is capped at `denominator(m)·(n+1)·64`.
pub fn classify_m(m: &MParams) -> MClassification {
    let status = toda_params::polytope_status(m);
    let dim = int(m.rank() as i64 + 1);
    let mut result = MClassification {
        generic: status.generic,
        rational: true,
        total: None,
        representation: None,
        search_exhausted: false,
    };
    if !status.generic {
        return result;
    }

    let shares: Vec<Rational> = m.wall_values().into_iter().map(|w| w / &dim).collect();
    let needed = shares
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, g| acc.lcm(g.denom()));
    let m_denom =
        m.m.entries()
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let cap = m_denom * num_bigint::BigInt::from(m.rank() as i64 + 1) * 64;
    if needed > cap {
        result.search_exhausted = true;
        return result;
    }

    let total = Rational::from_integer(needed);
    let kp = toda_params::k_from_m(m, &total).expect("total is positive");
    debug_assert!(kp
        .values()
        .iter()
        .all(|v| v.is_integer() && !v.is_negative()));
    result.representation = weight_from_k(&kp).ok();
    result.total = Some(total);
    result
}
