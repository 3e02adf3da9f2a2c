//! Invariant suite run by `ttstar selfcheck`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::fusion;
use crate::lie::{self, CartanVector};
use crate::minimal_models as mm;
use crate::rational::{frac, int, Rational};
use crate::rep_map;
use crate::toda_ode::{self, StepPolicy, TodaState};
use crate::toda_params::{self, KParams, MParams};
use crate::Result;

pub const DEFAULT_SEED: u64 = 20_240_617;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) -> CheckResult {
    match f() {
        Ok((passed, detail)) => CheckResult {
            name,
            passed,
            detail,
        },
        Err(e) => CheckResult {
            name,
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

/// Integer exponent tuples of length `n+1` with sum at most `max_sum`.
pub fn natural_tuples(n: usize, max_sum: u64) -> Vec<Vec<i64>> {
    (0..=max_sum)
        .flat_map(|s| mm::compositions(n + 1, s))
        .map(|k| k.into_iter().map(|x| x as i64).collect())
        .collect()
}

/// Random rational in `[lo, hi)` with denominator below `max_den`.
pub fn random_rational(rng: &mut impl Rng, lo: i64, hi: i64, max_den: i64) -> Rational {
    let q = rng.gen_range(1..max_den);
    let p = rng.gen_range(lo * q..hi * q);
    frac(p, q)
}

/// Random trace-zero, tt*-symmetric, generic rational `m` of rank `n`.
pub fn random_generic_symmetric_m(rng: &mut impl Rng, n: usize) -> MParams {
    loop {
        let mut entries = vec![int(0); n + 1];
        for i in 0..n.div_ceil(2) {
            let x = random_rational(rng, -1, 1, 13);
            entries[n - i] = -x.clone();
            entries[i] = x;
        }
        let m =
            MParams::new(CartanVector::new(entries).expect("symmetric entries have zero trace"));
        let walls = m.wall_values();
        let min_wall = walls.iter().min().unwrap().clone();
        if min_wall > frac(1, 20) {
            return m;
        }
    }
}

pub fn run(seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    out.push(check("basic weights are dual to simple roots", || {
        for n in 1..=6 {
            for j in 1..=n {
                let e = lie::epsilon(n, j)?;
                for i in 1..=n {
                    if e.simple_root(i)? != if i == j { int(1) } else { int(0) } {
                        return Ok((false, format!("n={n} i={i} j={j}")));
                    }
                }
            }
        }
        Ok((true, "n ≤ 6".into()))
    }));

    out.push(check("rho norm closed form", || {
        for n in 1..=10usize {
            let n64 = n as i64;
            if lie::norm_squared(&lie::rho(n)?) != frac(n64 * (n64 + 1) * (n64 + 2), 12) {
                return Ok((false, format!("n={n}")));
            }
        }
        Ok((true, "n ≤ 10".into()))
    }));

    out.push(check("shifted level identity", || {
        for n in 1..=3 {
            for k in 0..=4 {
                if !lie::verify_shifted_level_identity(n, k)? {
                    return Ok((false, format!("n={n} k={k}")));
                }
            }
        }
        Ok((true, "n ≤ 3, k ≤ 4".into()))
    }));

    out.push(check("k -> m -> k exact round trip", || {
        for _ in 0..200 {
            let n = rng.gen_range(1..=6);
            let k: Vec<Rational> = (0..=n)
                .map(|_| random_rational(&mut rng, -1, 4, 9))
                .collect();
            let kp = KParams::new(k)?;
            let back = toda_params::k_from_m(&toda_params::m_from_k(&kp)?, &kp.total())?;
            if back != kp {
                return Ok((false, format!("{kp:?}")));
            }
        }
        Ok((true, "200 random tuples".into()))
    }));

    out.push(check("m -> s -> m numeric round trip", || {
        let mut worst = 0.0f64;
        for _ in 0..50 {
            let n = rng.gen_range(1..=6);
            let m = random_generic_symmetric_m(&mut rng, n);
            let s = toda_params::stokes_from_m(&m)?;
            let back = toda_params::m_from_stokes(&s)?;
            for (a, b) in back.iter().zip(m.m.to_f64()) {
                worst = worst.max((a - b).abs());
            }
            let real = s.s.iter().all(|z| z.im.abs() < 1e-9);
            let palindromic = (0..n).all(|i| (s.s[i] - s.s[n - 1 - i]).norm() < 1e-9);
            if !real || !palindromic {
                return Ok((false, format!("symmetry failed for {m:?}")));
            }
        }
        Ok((worst < 1e-8, format!("max error {worst:e}")))
    }));

    out.push(check("Stokes numbers at m = -rho are binomial", || {
        for n in 1..=8 {
            let s = toda_params::stokes_from_m(&MParams::new(lie::rho(n)?.scale(&int(-1))))?;
            let mut binom = 1.0;
            for (i, si) in s.s.iter().enumerate() {
                binom = binom * (n + 1 - i) as f64 / (i + 1) as f64;
                if (si - Complex64::new(binom, 0.0)).norm() > 1e-9 {
                    return Ok((false, format!("n={n} i={}", i + 1)));
                }
            }
        }
        Ok((true, "n ≤ 8".into()))
    }));

    out.push(check(
        "integer exponents give alcove points and weights",
        || {
            for n in 1..=3 {
                for k in natural_tuples(n, 4) {
                    let kp = KParams::from_integers(&k)?;
                    let c = rep_map::verify_main_theorem(&kp)?;
                    if !(c.alcove_ok && c.theta_ok && fusion::verify_zeta_identity(&kp)?) {
                        return Ok((false, format!("k={k:?}")));
                    }
                }
            }
            Ok((true, "n ≤ 3, Σk ≤ 4".into()))
        },
    ));

    out.push(check("fusion ideal for SU(2)", || {
        for k in 1..=4u64 {
            if !fusion::in_fusion_ideal(&[k + 1], 1, k)? || fusion::in_fusion_ideal(&[0], 1, k)? {
                return Ok((false, format!("k={k}")));
            }
        }
        Ok((true, "k ≤ 4".into()))
    }));

    out.push(check("conformal dimensions agree four ways", || {
        for n in 1..=3usize {
            for big in n as u64 + 2..=12 {
                let Ok(c) = mm::ad_central_charge(n, big) else {
                    continue;
                };
                for v in lie::dominant_weights_of_level(n, big - n as u64 - 1) {
                    let d = mm::ad_conformal_dims(n, big, &v)?;
                    let ks = mm::kstring_of_weight(n, big, &v)?;
                    let m = toda_params::m_from_k(&ks.to_kparams()?)?;
                    let mu = mm::mu(&m, &int(big as i64));
                    let lhs = &c - int(24) * &d.from_m;
                    let rhs = int(n as i64) - int(12) * mu;
                    if !d.agree() || lhs != rhs || d.from_m > int(0) {
                        return Ok((false, format!("n={n} N={big} Λ={v:?}")));
                    }
                }
            }
        }
        Ok((true, "n ≤ 3, N ≤ 12 coprime".into()))
    }));

    out.push(check("necklace count matches closed form", || {
        for dim in 2..=6usize {
            for big in dim as u64..=14 {
                let c = mm::necklace_count(dim - 1, big);
                if c.formula_applies && int(c.enumerated as i64) != c.formula {
                    return Ok((false, format!("n+1={dim} N={big}")));
                }
            }
        }
        Ok((true, "n+1 ≤ 6, N ≤ 14".into()))
    }));

    out.push(check("radial Toda flow invariants", || {
        let s0 = TodaState::new(0.1, vec![0.0; 4], vec![0.0; 4])?;
        let traj = toda_ode::integrate(&s0, 10.0, &StepPolicy::Fixed { steps: 400 })?;
        let sup = traj
            .samples
            .iter()
            .flat_map(|s| s.w.iter())
            .fold(0.0f64, |a, x| a.max(x.abs()));
        let m = lie::rho(3)?.scale(&frac(-1, 5));
        let s0 = toda_ode::init_from_params(&MParams::new(m), 0.05, None)?;
        let traj = toda_ode::integrate(&s0, 0.8, &StepPolicy::Fixed { steps: 1000 })?;
        let mut worst = 0.0f64;
        for s in &traj.samples {
            worst = worst
                .max(s.w.iter().sum::<f64>().abs())
                .max(s.wprime.iter().sum::<f64>().abs())
                .max(s.symmetry_defect());
        }
        Ok((
            sup < 1e-12 && worst < 1e-8 && !traj.meta.blow_up,
            format!("stationary sup {sup:e}, invariant defect {worst:e}"),
        ))
    }));

    out
}
