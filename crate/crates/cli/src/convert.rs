//! Conversions between exponents `k`, asymptotic data `m`, Stokes numbers `s`
//! and affine dominant weights.

use std::f64::consts::PI;

use anyhow::{anyhow, bail, ensure, Context, Result};
use clap::ValueEnum;
use num_complex::Complex64;
use serde_json::{json, Map, Value};
use ttstar_core::lie::CartanVector;
use ttstar_core::rational::{self, int, Rational};
use ttstar_core::rep_map::{self, AffineDominantWeight};
use ttstar_core::toda_params::{self, KParams, MParams, StokesParams};

use crate::input::{self, Values};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    K,
    M,
    S,
    Weight,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Approx(f64),
}

impl Scalar {
    fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(q) => rational::to_f64(q),
            Scalar::Approx(x) => *x,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Scalar::Exact(q) => json!(rational::format(q)),
            Scalar::Approx(x) => json!(x),
        }
    }

    fn from_json(v: &Value) -> Result<Self> {
        match input::values_from_json(&json!([v]))? {
            Values::Exact(mut q) => Ok(Scalar::Exact(q.remove(0))),
            Values::Approx(x) => Ok(Scalar::Approx(x[0])),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Data {
    K(Values),
    M { m: Values, total: Option<Scalar> },
    S(Vec<Complex64>),
    Weight(AffineDominantWeight),
}

/// Raw flag values that may describe any of the four kinds.
#[derive(Clone, Debug, Default)]
pub struct Sources {
    pub k: Option<String>,
    pub m: Option<String>,
    pub s: Option<String>,
    pub v: Option<String>,
    pub level: Option<u64>,
    pub total: Option<String>,
    pub input: Option<Value>,
}

impl Sources {
    pub fn total(&self) -> Result<Option<Scalar>> {
        match &self.total {
            Some(t) => Ok(Some(Scalar::Exact(rational::parse(t)?))),
            None => Ok(None),
        }
    }
}

impl Data {
    pub fn rank(&self) -> usize {
        match self {
            Data::K(v) | Data::M { m: v, .. } => v.len().saturating_sub(1),
            Data::S(s) => s.len(),
            Data::Weight(w) => w.rank(),
        }
    }

    /// Reads data of the given kind from `--input` JSON or from flags, then
    /// validates it.
    pub fn read(kind: Kind, src: &Sources) -> Result<Data> {
        let data = match &src.input {
            Some(obj) => Self::from_json(kind, obj, src)?,
            None => Self::from_flags(kind, src)?,
        };
        data.validate()?;
        Ok(data)
    }

    fn from_flags(kind: Kind, src: &Sources) -> Result<Data> {
        let missing = |flag: &str| anyhow!("--{flag} is required for this input kind");
        Ok(match kind {
            Kind::K => Data::K(Values::Exact(input::parse_list(
                src.k.as_deref().ok_or_else(|| missing("k"))?,
            )?)),
            Kind::M => Data::M {
                m: Values::Exact(input::parse_list(
                    src.m.as_deref().ok_or_else(|| missing("m"))?,
                )?),
                total: src.total()?,
            },
            Kind::S => Data::S(input::parse_complex_list(
                src.s.as_deref().ok_or_else(|| missing("s"))?,
            )?),
            Kind::Weight => {
                let v = input::parse_naturals(src.v.as_deref().ok_or_else(|| missing("v"))?)?;
                Data::Weight(AffineDominantWeight::new(
                    v,
                    src.level.ok_or_else(|| missing("level"))?,
                )?)
            }
        })
    }

    fn from_json(kind: Kind, obj: &Value, src: &Sources) -> Result<Data> {
        let field = |key: &str| {
            obj.get(key)
                .ok_or_else(|| anyhow!("input JSON has no \"{key}\" field"))
        };
        let data = match kind {
            Kind::K => Data::K(input::values_from_json(field("k")?)?),
            Kind::M => {
                let total = match obj.get("N") {
                    Some(t) => Some(Scalar::from_json(t)?),
                    None => src.total()?,
                };
                Data::M {
                    m: input::values_from_json(field("m")?)?,
                    total,
                }
            }
            Kind::S => Data::S(input::complex_from_json(field("s")?)?),
            Kind::Weight => Data::Weight(
                serde_json::from_value(obj.clone())
                    .context("input JSON is not a weight {n, v, level}")?,
            ),
        };
        if let Some(n) = obj.get("n") {
            let n = n
                .as_u64()
                .ok_or_else(|| anyhow!("\"n\" must be a nonnegative integer"))?;
            ensure!(
                n as usize == data.rank(),
                "\"n\" is {n} but the data has rank {}",
                data.rank()
            );
        }
        Ok(data)
    }

    fn validate(&self) -> Result<()> {
        match self {
            Data::K(Values::Exact(k)) => {
                KParams::new(k.clone())?;
            }
            Data::K(Values::Approx(k)) => {
                ensure!(k.len() >= 2, ttstar_core::Error::ZeroRank);
                ensure!(
                    k.iter().all(|x| x.is_finite() && *x >= -1.0),
                    "every k_i must be at least -1"
                );
                ensure!(
                    k.len() as f64 + k.iter().sum::<f64>() > 0.0,
                    "N = n+1+Σk_i must be positive"
                );
            }
            Data::M { m, total } => {
                match m {
                    Values::Exact(q) => {
                        CartanVector::new(q.clone())?;
                    }
                    Values::Approx(x) => {
                        ensure!(x.len() >= 2, ttstar_core::Error::ZeroRank);
                        ensure!(x.iter().all(|v| v.is_finite()), "m has non-finite entries");
                        let trace: f64 = x.iter().sum();
                        ensure!(trace.abs() < 1e-9, "m must have zero trace, got {trace}");
                    }
                }
                if let Some(t) = total {
                    ensure!(t.to_f64() > 0.0, "N must be positive");
                }
            }
            Data::S(s) => {
                ensure!(!s.is_empty(), ttstar_core::Error::ZeroRank);
                ensure!(
                    s.iter().all(|z| z.is_finite()),
                    "Stokes numbers must be finite"
                );
            }
            Data::Weight(_) => {}
        }
        Ok(())
    }

    pub fn is_tt_symmetric(&self) -> Result<bool> {
        Ok(match self {
            Data::K(Values::Exact(k)) => KParams::new(k.clone())?.is_tt_symmetric(),
            Data::K(Values::Approx(k)) => {
                let n = k.len() - 1;
                (1..=n).all(|i| (k[i] - k[n + 1 - i]).abs() < 1e-9)
            }
            Data::M {
                m: Values::Exact(q),
                ..
            } => MParams::new(CartanVector::new(q.clone())?).is_tt_symmetric(),
            Data::M {
                m: Values::Approx(x),
                ..
            } => {
                let n = x.len() - 1;
                (0..=n).all(|i| (x[i] + x[n - i]).abs() < 1e-9)
            }
            Data::S(s) => {
                let n = s.len();
                s.iter().all(|z| z.im.abs() < 1e-9)
                    && (0..n).all(|i| (s[i] - s[n - 1 - i]).norm() < 1e-9)
            }
            Data::Weight(w) => {
                KParams::new(rep_map::k_from_weight(w)?.values().to_vec())?.is_tt_symmetric()
            }
        })
    }

    pub fn convert(&self, to: Kind, total: Option<Scalar>) -> Result<Data> {
        match to {
            Kind::K => self.to_k(total),
            Kind::M => self.to_m(total),
            Kind::S => self.to_s(),
            Kind::Weight => self.to_weight(),
        }
    }

    fn to_k(&self, total: Option<Scalar>) -> Result<Data> {
        match self {
            Data::K(_) => Ok(self.clone()),
            Data::Weight(w) => Ok(Data::K(Values::Exact(
                rep_map::k_from_weight(w)?.values().to_vec(),
            ))),
            Data::S(_) => self.to_m(total)?.to_k(None),
            Data::M { m, total: own } => {
                let total = own.clone().or(total).ok_or_else(|| {
                    anyhow!("converting m to k needs the total N (--N or \"N\" in the input)")
                })?;
                match (m, &total) {
                    (Values::Exact(q), Scalar::Exact(t)) => {
                        let mp = MParams::new(CartanVector::new(q.clone())?);
                        let kp = toda_params::k_from_m(&mp, t)?;
                        Ok(Data::K(Values::Exact(
                            KParams::new(kp.values().to_vec())?.values().to_vec(),
                        )))
                    }
                    _ => {
                        let k = Data::K(Values::Approx(k_from_m_f64(&m.to_f64(), total.to_f64())));
                        k.validate()?;
                        Ok(k)
                    }
                }
            }
        }
    }

    fn to_m(&self, total: Option<Scalar>) -> Result<Data> {
        match self {
            Data::M { .. } => Ok(self.clone()),
            Data::K(Values::Exact(k)) => {
                let kp = KParams::new(k.clone())?;
                let m = toda_params::m_from_k(&kp)?;
                Ok(Data::M {
                    m: Values::Exact(m.m.entries().to_vec()),
                    total: Some(Scalar::Exact(kp.total())),
                })
            }
            Data::K(Values::Approx(k)) => {
                let (m, big) = m_from_k_f64(k);
                Ok(Data::M {
                    m: Values::Approx(m),
                    total: Some(Scalar::Approx(big)),
                })
            }
            Data::Weight(_) => self.to_k(None)?.to_m(None),
            Data::S(s) => {
                let m = toda_params::m_from_stokes(&StokesParams::new(s.clone())?)?;
                Ok(Data::M {
                    m: Values::Approx(m),
                    total,
                })
            }
        }
    }

    fn to_s(&self) -> Result<Data> {
        match self {
            Data::S(_) => Ok(self.clone()),
            Data::M {
                m: Values::Exact(q),
                ..
            } => {
                let s = toda_params::stokes_from_m(&MParams::new(CartanVector::new(q.clone())?))?;
                Ok(Data::S(s.s))
            }
            Data::M {
                m: Values::Approx(x),
                ..
            } => Ok(Data::S(toda_params::stokes_from_m_values(x)?.s)),
            _ => self.to_m(None)?.to_s(),
        }
    }

    fn to_weight(&self) -> Result<Data> {
        match self {
            Data::Weight(_) => Ok(self.clone()),
            Data::K(Values::Exact(k)) => Ok(Data::Weight(rep_map::weight_from_k(&KParams::new(
                k.clone(),
            )?)?)),
            Data::K(Values::Approx(_)) => {
                bail!("a dominant weight needs exact integer exponents; pass k as integers or \"p/q\" strings")
            }
            _ => self.to_k(None)?.to_weight(),
        }
    }

    /// Coefficients of the characteristic polynomial of the Stokes data, in
    /// descending powers.
    pub fn char_poly(&self) -> Result<Vec<Complex64>> {
        match self {
            Data::S(s) => Ok(toda_params::char_poly_from_stokes(&StokesParams::new(
                s.clone(),
            )?)),
            _ => self.to_s()?.char_poly(),
        }
    }

    /// Eigenvalues `exp(2πi (m_j+ρ_j)/(n+1))` of the root of monodromy.
    pub fn eigenvalues(&self) -> Result<Vec<Complex64>> {
        match self.to_m(None)? {
            Data::M {
                m: Values::Exact(q),
                ..
            } => Ok(toda_params::monodromy_eigenvalues(&MParams::new(
                CartanVector::new(q)?,
            ))?),
            Data::M {
                m: Values::Approx(x),
                ..
            } => {
                let n = x.len() - 1;
                Ok(x.iter()
                    .enumerate()
                    .map(|(j, mj)| {
                        let rho = n as f64 / 2.0 - j as f64;
                        Complex64::from_polar(1.0, 2.0 * PI * (mj + rho) / (n + 1) as f64)
                    })
                    .collect())
            }
            _ => unreachable!("to_m returns m data"),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("n".into(), json!(self.rank()));
        match self {
            Data::K(k) => {
                out.insert("k".into(), k.to_json());
                let big = match k {
                    Values::Exact(q) => {
                        Scalar::Exact(int(q.len() as i64) + q.iter().sum::<Rational>())
                    }
                    Values::Approx(x) => Scalar::Approx(x.len() as f64 + x.iter().sum::<f64>()),
                };
                out.insert("N".into(), big.to_json());
            }
            Data::M { m, total } => {
                out.insert("m".into(), m.to_json());
                if let Some(t) = total {
                    out.insert("N".into(), t.to_json());
                }
            }
            Data::S(s) => {
                out.insert("s".into(), input::complex_to_json(s));
            }
            Data::Weight(w) => {
                out.insert("v".into(), json!(w.coefficients()));
                out.insert("level".into(), json!(w.level()));
            }
        }
        Value::Object(out)
    }
}

/// Float version of `m = ((n+1)/N)(ρ + Σ k_i ε_i) - ρ`, built from the walls.
pub fn m_from_k_f64(k: &[f64]) -> (Vec<f64>, f64) {
    let dim = k.len() as f64;
    let big = dim + k.iter().sum::<f64>();
    let mut m = vec![0.0; k.len()];
    for i in 1..k.len() {
        // m_{i-1} - m_i + 1 = (n+1)/N (k_i + 1)
        m[i] = m[i - 1] + 1.0 - dim / big * (k[i] + 1.0);
    }
    let mean = m.iter().sum::<f64>() / dim;
    (m.iter().map(|x| x - mean).collect(), big)
}

pub fn k_from_m_f64(m: &[f64], total: f64) -> Vec<f64> {
    let len = m.len();
    (0..len)
        .map(|i| total / len as f64 * (m[(i + len - 1) % len] - m[i] + 1.0) - 1.0)
        .collect()
}

/// Checks `Data::rank` against an explicit `--n`.
pub fn check_rank(data: &Data, n: Option<usize>) -> Result<()> {
    if let Some(n) = n {
        ensure!(
            data.rank() == n,
            "--n is {n} but the data has rank {}",
            data.rank()
        );
    }
    Ok(())
}

pub fn exact_m(data: &Data) -> Option<MParams> {
    match data {
        Data::M {
            m: Values::Exact(q),
            ..
        } => CartanVector::new(q.clone()).ok().map(MParams::new),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_paths_match_exact_ones() {
        let k = [2.0, 0.0, 1.0, -1.0];
        let (m, big) = m_from_k_f64(&k);
        let exact =
            toda_params::m_from_k(&KParams::from_integers(&[2, 0, 1, -1]).unwrap()).unwrap();
        for (a, b) in m.iter().zip(exact.m.to_f64()) {
            assert!((a - b).abs() < 1e-14);
        }
        let back = k_from_m_f64(&m, big);
        for (a, b) in back.iter().zip(k) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
