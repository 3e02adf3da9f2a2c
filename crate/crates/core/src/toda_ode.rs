//! Radial integrator for the periodic tt*-Toda system
//! `2 (w_i)_{t t̄} = -e^{2(w_{i+1}-w_i)} + e^{2(w_i-w_{i-1})}`, `w_{i+n+1} = w_i`.
//!
//! For radial `w = w(r)`, `r = |t|`, the operator `∂_t ∂_t̄` is a quarter of the
//! polar Laplacian, `w_{t t̄} = (w'' + w'/r)/4`, so the system becomes
//!
//! ```text
//! w_i'' = -w_i'/r + 2(-e^{2(w_{i+1}-w_i)} + e^{2(w_i-w_{i-1})})
//! ```
//!
//! The exponential terms telescope, so `(r Σ w_i')' = 0`; trajectories started
//! with zero traces keep them. The subspace `w_i + w_{n-i} = 0` is invariant.
//!
//! Near `r = 0` the solution behaves as `w ~ -m log r`; [`init_asymptotic`]
//! builds a starting state from that leading term. The constant correction
//! of the global solution is not known here and defaults to zero.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::toda_params::MParams;

/// Largest exponent argument accepted before a step is declared a blow-up.
pub const EXP_LIMIT: f64 = 600.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TodaState {
    pub r: f64,
    pub w: Vec<f64>,
    pub wprime: Vec<f64>,
}

impl TodaState {
    pub fn new(r: f64, w: Vec<f64>, wprime: Vec<f64>) -> Result<Self> {
        if w.len() < 2 {
            return Err(Error::ZeroRank);
        }
        if wprime.len() != w.len() {
            return Err(Error::DimensionMismatch {
                expected: w.len(),
                got: wprime.len(),
            });
        }
        if !(r > 0.0) {
            return Err(Error::NonPositiveRadius(r));
        }
        Ok(TodaState { r, w, wprime })
    }

    pub fn rank(&self) -> usize {
        self.w.len() - 1
    }

    /// Largest `|w_i + w_{n-i}|`.
    pub fn symmetry_defect(&self) -> f64 {
        let n = self.rank();
        (0..=n)
            .map(|i| (self.w[i] + self.w[n - i]).abs())
            .fold(0.0, f64::max)
    }

    fn sup_distance(&self, other: &TodaState) -> f64 {
        self.w
            .iter()
            .zip(&other.w)
            .chain(self.wprime.iter().zip(&other.wprime))
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    fn is_regular(&self) -> bool {
        let len = self.w.len();
        self.w.iter().chain(&self.wprime).all(|x| x.is_finite())
            && (0..len).all(|i| (2.0 * (self.w[(i + 1) % len] - self.w[i])).abs() <= EXP_LIMIT)
    }
}

/// Exponential coupling `-e^{2(w_{i+1}-w_i)} + e^{2(w_i-w_{i-1})}`.
fn coupling(w: &[f64], i: usize) -> f64 {
    let len = w.len();
    let next = w[(i + 1) % len];
    let prev = w[(i + len - 1) % len];
    -(2.0 * (next - w[i])).exp() + (2.0 * (w[i] - prev)).exp()
}

/// Second derivatives `w''` at the given state.
pub fn radial_rhs(s: &TodaState) -> Result<Vec<f64>> {
    if !(s.r > 0.0) {
        return Err(Error::NonPositiveRadius(s.r));
    }
    Ok(second_derivative(s.r, &s.w, &s.wprime))
}

fn second_derivative(r: f64, w: &[f64], wprime: &[f64]) -> Vec<f64> {
    (0..w.len())
        .map(|i| -wprime[i] / r + 2.0 * coupling(w, i))
        .collect()
}

/// `w = -m ln ε + shift`, `w' = -m/ε` at `r = ε`.
pub fn init_asymptotic(m: &[f64], epsilon: f64, shift: Option<&[f64]>) -> Result<TodaState> {
    if !(epsilon > 0.0) {
        return Err(Error::NonPositiveRadius(epsilon));
    }
    if m.len() < 2 {
        return Err(Error::ZeroRank);
    }
    if let Some(sh) = shift {
        if sh.len() != m.len() {
            return Err(Error::DimensionMismatch {
                expected: m.len(),
                got: sh.len(),
            });
        }
    }
    let log = epsilon.ln();
    let w = m
        .iter()
        .enumerate()
        .map(|(i, mi)| -mi * log + shift.map_or(0.0, |s| s[i]))
        .collect();
    let wprime = m.iter().map(|mi| -mi / epsilon).collect();
    TodaState::new(epsilon, w, wprime)
}

pub fn init_from_params(m: &MParams, epsilon: f64, shift: Option<&[f64]>) -> Result<TodaState> {
    init_asymptotic(&m.m.to_f64(), epsilon, shift)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StepPolicy {
    /// Classical RK4 with `steps` equal steps.
    Fixed { steps: usize },
    /// Repeated RK4 runs, doubling the step count from `initial_steps` until two
    /// successive end states differ by less than `tol` in the sup norm.
    Adaptive {
        tol: f64,
        initial_steps: usize,
        max_doublings: usize,
    },
}

impl StepPolicy {
    pub fn adaptive(tol: f64) -> Self {
        StepPolicy::Adaptive {
            tol,
            initial_steps: 64,
            max_doublings: 14,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryMeta {
    pub m: Option<Vec<f64>>,
    pub policy: StepPolicy,
    pub steps: usize,
    pub blow_up: bool,
    pub last_valid_r: f64,
    /// For the adaptive policy: whether the refinement criterion was met.
    pub converged: Option<bool>,
    /// Sup-norm difference between the last two refinements.
    pub refinement_error: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TodaTrajectory {
    pub samples: Vec<TodaState>,
    pub meta: TrajectoryMeta,
}

impl TodaTrajectory {
    pub fn last(&self) -> &TodaState {
        self.samples
            .last()
            .expect("trajectory holds the initial state")
    }

    /// Writes `r, w_0…w_n, w'_0…w'_n` rows.
    pub fn write_csv<W: std::io::Write>(&self, mut out: W) -> std::io::Result<()> {
        let len = self.samples[0].w.len();
        let mut header = vec!["r".to_string()];
        header.extend((0..len).map(|i| format!("w_{i}")));
        header.extend((0..len).map(|i| format!("wprime_{i}")));
        writeln!(out, "{}", header.join(","))?;
        for s in &self.samples {
            let mut row = vec![format!("{:e}", s.r)];
            row.extend(s.w.iter().chain(&s.wprime).map(|x| format!("{x:e}")));
            writeln!(out, "{}", row.join(","))?;
        }
        Ok(())
    }
}

fn rk4_step(s: &TodaState, h: f64) -> TodaState {
    let len = s.w.len();
    let eval = |r: f64, w: &[f64], v: &[f64]| (v.to_vec(), second_derivative(r, w, v));
    let offset = |base: &[f64], d: &[f64], c: f64| -> Vec<f64> {
        base.iter().zip(d).map(|(b, x)| b + c * x).collect()
    };

    let (k1w, k1v) = eval(s.r, &s.w, &s.wprime);
    let (k2w, k2v) = eval(
        s.r + h / 2.0,
        &offset(&s.w, &k1w, h / 2.0),
        &offset(&s.wprime, &k1v, h / 2.0),
    );
    let (k3w, k3v) = eval(
        s.r + h / 2.0,
        &offset(&s.w, &k2w, h / 2.0),
        &offset(&s.wprime, &k2v, h / 2.0),
    );
    let (k4w, k4v) = eval(s.r + h, &offset(&s.w, &k3w, h), &offset(&s.wprime, &k3v, h));

    let combine = |base: &[f64], a: &[f64], b: &[f64], c: &[f64], d: &[f64]| -> Vec<f64> {
        (0..len)
            .map(|i| base[i] + h / 6.0 * (a[i] + 2.0 * b[i] + 2.0 * c[i] + d[i]))
            .collect()
    };
    TodaState {
        r: s.r + h,
        w: combine(&s.w, &k1w, &k2w, &k3w, &k4w),
        wprime: combine(&s.wprime, &k1v, &k2v, &k3v, &k4v),
    }
}

fn run_fixed(s0: &TodaState, r_end: f64, steps: usize) -> (Vec<TodaState>, bool) {
    let h = (r_end - s0.r) / steps as f64;
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push(s0.clone());
    for j in 1..=steps {
        let mut next = rk4_step(samples.last().unwrap(), h);
        if j == steps {
            next.r = r_end;
        }
        if !next.is_regular() || !(next.r > 0.0) {
            return (samples, true);
        }
        samples.push(next);
    }
    (samples, false)
}

/// Integrates from `s0` to `r_end`. Both directions are allowed as long as
/// the radius stays positive; samples are monotone in `r`.
///
/// Blow-up (non-finite values or an exponent argument beyond [`EXP_LIMIT`])
/// truncates the trajectory and sets `meta.blow_up`.
pub fn integrate(s0: &TodaState, r_end: f64, policy: &StepPolicy) -> Result<TodaTrajectory> {
    if !(s0.r > 0.0) {
        return Err(Error::NonPositiveRadius(s0.r));
    }
    if !(r_end > 0.0) {
        return Err(Error::NonPositiveRadius(r_end));
    }
    if r_end == s0.r {
        return Err(Error::Precondition("end radius equals start radius".into()));
    }

    let (samples, blow_up, steps, converged, refinement_error) = match *policy {
        StepPolicy::Fixed { steps } => {
            if steps == 0 {
                return Err(Error::Precondition("step count must be positive".into()));
            }
            let (samples, blow_up) = run_fixed(s0, r_end, steps);
            (samples, blow_up, steps, None, None)
        }
        StepPolicy::Adaptive {
            tol,
            initial_steps,
            max_doublings,
        } => {
            if !(tol > 0.0) || initial_steps == 0 {
                return Err(Error::Precondition(
                    "adaptive policy needs tol > 0 and initial_steps > 0".into(),
                ));
            }
            let mut steps = initial_steps;
            let (mut samples, mut blow_up) = run_fixed(s0, r_end, steps);
            let mut converged = false;
            let mut diff = f64::INFINITY;
            for _ in 0..max_doublings {
                if blow_up {
                    break;
                }
                let finer_steps = steps * 2;
                let (finer, finer_blow_up) = run_fixed(s0, r_end, finer_steps);
                diff = if finer_blow_up {
                    f64::INFINITY
                } else {
                    finer.last().unwrap().sup_distance(samples.last().unwrap())
                };
                samples = finer;
                blow_up = finer_blow_up;
                steps = finer_steps;
                if diff < tol {
                    converged = true;
                    break;
                }
            }
            (samples, blow_up, steps, Some(converged), Some(diff))
        }
    };

    let last_valid_r = samples.last().unwrap().r;
    Ok(TodaTrajectory {
        samples,
        meta: TrajectoryMeta {
            m: None,
            policy: policy.clone(),
            steps,
            blow_up,
            last_valid_r,
            converged,
            refinement_error,
        },
    })
}
