//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails or runs over its time budget.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ttstar_core::fusion;
use ttstar_core::lie::{self, AlcovePosition, EpsilonCoefficients};
use ttstar_core::minimal_models::{self as mm, KString, MinimalModelSpec};
use ttstar_core::rational::{frac, int, Rational};
use ttstar_core::rep_map::{self, AffineDominantWeight};
use ttstar_core::selfcheck::{random_generic_symmetric_m, random_rational};
use ttstar_core::toda_ode::{self, StepPolicy, TodaState};
use ttstar_core::toda_params::{self, KParams, MParams};

type Outcome = Result<String, String>;
/// Name, time budget in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    format!("error: {err}")
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn binom_f64(a: usize, b: usize) -> f64 {
    (0..b).fold(1.0, |acc, i| acc * (a - i) as f64 / (i + 1) as f64)
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// k = (1,0,…,0) gives s_i = 1, and the characteristic polynomial times
/// (x+1) collapses to x^{n+2} ± 1.
fn unit_stokes_example() -> Outcome {
    for n in 1..=6usize {
        let mut k = vec![0i64; n + 1];
        k[0] = 1;
        let m = toda_params::m_from_k(&KParams::from_integers(&k).map_err(e)?).map_err(e)?;
        let s = toda_params::stokes_from_m(&m).map_err(e)?;
        ensure(s.s.len() == n, || {
            format!("n={n}: {} Stokes numbers", s.s.len())
        })?;
        for (i, si) in s.s.iter().enumerate() {
            ensure((si - c(1.0)).norm() < 1e-9, || {
                format!("n={n}: s_{} = {si}", i + 1)
            })?;
        }
        let p = toda_params::char_poly_from_stokes(&s);
        // p(x)·(x+1) in descending powers
        let mut prod = vec![c(0.0); p.len() + 1];
        for (j, a) in p.iter().enumerate() {
            prod[j] += a;
            prod[j + 1] += a;
        }
        let mut want = vec![c(0.0); n + 3];
        want[0] = c(1.0);
        want[n + 2] = if n % 2 == 0 { c(-1.0) } else { c(1.0) };
        for (got, w) in prod.iter().zip(&want) {
            ensure((got - w).norm() < 1e-9, || {
                format!("n={n}: (x+1)p(x) = {prod:?}")
            })?;
        }
    }
    Ok("n = 1..6".into())
}

fn projective_space_stokes() -> Outcome {
    for n in 1..=6usize {
        let mut k = vec![-1i64; n + 1];
        k[0] = 0;
        let m = toda_params::m_from_k(&KParams::from_integers(&k).map_err(e)?).map_err(e)?;
        let s = toda_params::stokes_from_m(&m).map_err(e)?;
        for (i, si) in s.s.iter().enumerate() {
            let want = binom_f64(n + 1, i + 1);
            ensure((si - c(want)).norm() < 1e-9, || {
                format!("n={n}: s_{} = {si}, want {want}", i + 1)
            })?;
        }
    }
    Ok("n = 1..6".into())
}

fn round_trips() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=6);
        let kp = loop {
            let k: Vec<Rational> = (0..=n)
                .map(|_| random_rational(&mut rng, -1, 5, 11))
                .collect();
            if let Ok(kp) = KParams::new(k) {
                break kp;
            }
        };
        let m = toda_params::m_from_k(&kp).map_err(e)?;
        // m has zero trace and reproduces the walls directly
        let scale = int(n as i64 + 1) / kp.total();
        for (i, w) in m.wall_values().iter().enumerate() {
            let want = &scale * (&kp.values()[i] + int(1));
            ensure(*w == want, || format!("wall {i} of {kp:?}"))?;
        }
        let back = toda_params::k_from_m(&m, &kp.total()).map_err(e)?;
        ensure(back == kp, || format!("k -> m -> k failed for {kp:?}"))?;
    }
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let m = random_generic_symmetric_m(&mut rng, n);
        let s = toda_params::stokes_from_m(&m).map_err(e)?;
        let back = toda_params::m_from_stokes(&s).map_err(e)?;
        for (a, b) in back.iter().zip(m.m.to_f64()) {
            worst = worst.max((a - b).abs());
        }
    }
    ensure(worst < 1e-8, || format!("m -> s -> m error {worst:e}"))?;
    Ok(format!(
        "1000 exact k round trips, 200 m round trips (max error {worst:.1e})"
    ))
}

/// Interior rational alcove points with denominator k+n+1, scaled up, are
/// exactly the shifted level-k weights.
fn level_set_identity() -> Outcome {
    for n in 1..=4usize {
        for k in 0..=5u64 {
            let bound = k + n as u64 + 1;
            // oracle in integer ε-coordinates: u_i ≥ 1 and Σ u_i < bound;
            // the scan covers the closed simplex Σ u_i ≤ bound, boundary included
            let mut want = BTreeSet::new();
            for v in lie::dominant_weights_of_level(n, k) {
                want.insert(v.iter().map(|x| x + 1).collect::<Vec<u64>>());
            }
            let mut got = BTreeSet::new();
            let mut u = vec![0u64; n];
            loop {
                let q: Vec<Rational> = u.iter().map(|&x| frac(x as i64, bound as i64)).collect();
                let v = EpsilonCoefficients::new(q).map_err(e)?.to_cartan();
                if lie::alcove_classify(&v) == AlcovePosition::Interior {
                    let shifted = lie::alcove_to_shifted_weight(&v, k).map_err(e)?;
                    got.insert(
                        shifted
                            .epsilon_coefficients()
                            .to_naturals()
                            .ok_or("non-integral")?,
                    );
                }
                let mut pos = 0;
                while pos < n && u.iter().sum::<u64>() == bound {
                    u[pos] = 0;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
                u[pos] += 1;
            }
            ensure(got == want, || format!("n={n} k={k}"))?;
            ensure(want.len() as f64 == binom_f64(n + k as usize, n), || {
                format!("|P_k| n={n} k={k}")
            })?;
            ensure(lie::verify_shifted_level_identity(n, k).map_err(e)?, || {
                format!("library check n={n} k={k}")
            })?;
        }
    }
    Ok("n ≤ 4, k ≤ 5".into())
}

fn integer_sweep() -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for n in 1..=3usize {
        for s in 0..=4u64 {
            for k in mm::compositions(n + 1, s) {
                out.push(k.into_iter().map(|x| x as i64).collect());
            }
        }
    }
    out
}

fn alcove_correspondence() -> Outcome {
    let sweep = integer_sweep();
    for k in &sweep {
        let kp = KParams::from_integers(k).map_err(e)?;
        let m = toda_params::m_from_k(&kp).map_err(e)?;
        // (m+ρ)/(n+1) should be the alcove point (Λ+ρ)/N with Λ = Σ_{i≥1} k_i ε_i
        let big = kp.total();
        let lambda: Vec<Rational> = k[1..].iter().map(|&x| int(x + 1) / &big).collect();
        let point = EpsilonCoefficients::new(lambda).map_err(e)?.to_cartan();
        let alcove = toda_params::monodromy_exponent(&m).map_err(e)?;
        ensure(alcove == point, || format!("k={k:?}: alcove point"))?;
        ensure(
            lie::alcove_classify(&alcove) == AlcovePosition::Interior,
            || format!("k={k:?}: not interior"),
        )?;
        let level = (k.iter().sum::<i64>()) as u64;
        let theta = lie::alcove_to_shifted_weight(&alcove, level).map_err(e)?;
        let want: Vec<Rational> = k[1..].iter().map(|&x| int(x + 1)).collect();
        ensure(
            theta.epsilon_coefficients().coeffs() == want.as_slice(),
            || format!("k={k:?}: θ image"),
        )?;
        let chk = rep_map::verify_main_theorem(&kp).map_err(e)?;
        ensure(chk.alcove_ok && chk.theta_ok, || {
            format!("k={k:?}: library check")
        })?;
    }
    Ok(format!("{} integer tuples, n ≤ 3, Σk ≤ 4", sweep.len()))
}

/// SU(2) character of spin j/2 at diag(e^{2πix}, e^{-2πix}) by direct sum.
fn su2_character(j: u64, x: f64) -> Complex64 {
    (0..=j)
        .map(|l| {
            Complex64::from_polar(
                1.0,
                2.0 * std::f64::consts::PI * x * (j as f64 - 2.0 * l as f64),
            )
        })
        .sum()
}

fn fusion_identity() -> Outcome {
    let sweep = integer_sweep();
    for k in &sweep {
        let kp = KParams::from_integers(k).map_err(e)?;
        let n = kp.rank();
        let m = toda_params::m_from_k(&kp).map_err(e)?;
        let w = rep_map::weight_from_k(&kp).map_err(e)?;
        let lhs = fusion::zeta(&w).map_err(e)?;
        let rhs =
            m.m.add(&lie::rho(n).map_err(e)?)
                .map_err(e)?
                .scale(&frac(1, n as i64 + 1));
        ensure(lhs == rhs, || format!("k={k:?}: ζ ≠ (m+ρ)/(n+1)"))?;
        ensure(fusion::verify_zeta_identity(&kp).map_err(e)?, || {
            format!("k={k:?}: library check")
        })?;
    }
    for level in 1..=4u64 {
        let mut worst = 0.0f64;
        let mut trivial_min = f64::INFINITY;
        for v in lie::dominant_weights_of_level(1, level) {
            let w = AffineDominantWeight::new(v.clone(), level).map_err(e)?;
            let t = fusion::special_element(&w).map_err(e)?;
            let x = (v[0] + 1) as f64 / (2 * (level + 2)) as f64;
            let chi = fusion::character_value(&[level + 1], &t).map_err(e)?;
            let oracle = su2_character(level + 1, x);
            ensure((chi - oracle).norm() < 1e-9, || {
                format!("k={level}: bialternant {chi} vs {oracle}")
            })?;
            worst = worst.max(chi.norm());
            trivial_min = trivial_min.min(fusion::character_value(&[0], &t).map_err(e)?.norm());
        }
        ensure(worst < 1e-8, || {
            format!("k={level}: χ_(k+1)ε₁ reaches {worst:e}")
        })?;
        ensure(trivial_min > 1e-8, || format!("k={level}: χ_0 vanishes"))?;
        ensure(
            fusion::in_fusion_ideal(&[level + 1], 1, level).map_err(e)?,
            || format!("k={level}"),
        )?;
        ensure(!fusion::in_fusion_ideal(&[0], 1, level).map_err(e)?, || {
            format!("k={level}")
        })?;
    }
    Ok(format!(
        "ζ identity on {} tuples; SU(2) ideal for k ≤ 4",
        sweep.len()
    ))
}

fn minimal_models() -> Outcome {
    let spec = MinimalModelSpec::new(1, 2, 5).map_err(e)?;
    let c = mm::central_charge(&spec);
    ensure(c == frac(-22, 5), || format!("c(1,2,5) = {c}"))?;
    let h = mm::ad_conformal_dims(1, 5, &[1]).map_err(e)?;
    ensure(h.agree() && h.from_m == frac(-1, 5), || {
        format!("h(1,5,ε₁) = {:?}", h)
    })?;
    let h_general = mm::conformal_dim(&spec, &[0], &[1]).map_err(e)?;
    ensure(h_general == frac(-1, 5), || {
        format!("general formula gives {h_general}")
    })?;

    let mut models = 0;
    let mut weights = 0;
    for n in 1..=3usize {
        let dim = n as u64 + 1;
        for big in dim + 1..=12 {
            if gcd(dim, big) != 1 {
                continue;
            }
            models += 1;
            let c = mm::ad_central_charge(n, big).map_err(e)?;
            for v in lie::dominant_weights_of_level(n, big - dim) {
                weights += 1;
                let d = mm::ad_conformal_dims(n, big, &v).map_err(e)?;
                ensure(d.agree(), || format!("n={n} N={big} Λ={v:?}: {d:?}"))?;
                let ks = mm::kstring_of_weight(n, big, &v).map_err(e)?;
                let m = toda_params::m_from_k(&ks.to_kparams().map_err(e)?).map_err(e)?;
                let mu = int(big as i64) / int(dim as i64)
                    * m.m.entries().iter().map(|x| x * x).sum::<Rational>();
                let lhs = &c - int(24) * &d.from_m;
                ensure(lhs == int(n as i64) - int(12) * mu, || {
                    format!("n={n} N={big} Λ={v:?}: c-24h")
                })?;
                ensure(!d.from_m.is_positive(), || {
                    format!("n={n} N={big} Λ={v:?}: h = {}", d.from_m)
                })?;
                if n == 1 {
                    // Virasoro (2, N): h_{1,s} = ((N-2s)² - (N-2)²)/(8N), s = v+1
                    let b = big as i64;
                    let s = v[0] as i64 + 1;
                    let want = frac((b - 2 * s).pow(2) - (b - 2).pow(2), 8 * b);
                    ensure(d.from_m == want, || {
                        format!("N={big} s={s}: {} vs {want}", d.from_m)
                    })?;
                }
            }
        }
    }
    Ok(format!("{models} models, {weights} weights"))
}

/// Orbit representatives of D/Z strings of length N with n+1 D's.
fn brute_force_orbits(dim: usize, big: usize) -> usize {
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for mask in 0u32..(1 << big) {
        if mask.count_ones() as usize != dim {
            continue;
        }
        let rot = |x: u32, r: usize| ((x << r) | (x >> (big - r))) & ((1u32 << big) - 1);
        let canon = (0..big).map(|r| rot(mask, r)).min().unwrap();
        if seen.insert(canon) {
            count += 1;
        }
    }
    count
}

fn necklaces() -> Outcome {
    let mut pairs = 0;
    for dim in 2..=6usize {
        for big in dim..=18usize {
            if gcd(dim as u64, big as u64) != 1 {
                continue;
            }
            pairs += 1;
            let oracle = brute_force_orbits(dim, big);
            let nc = mm::necklace_count(dim - 1, big as u64);
            ensure(nc.formula_applies, || {
                format!("n+1={dim} N={big}: formula flagged")
            })?;
            ensure(nc.enumerated == oracle, || {
                format!(
                    "n+1={dim} N={big}: enumerated {} vs brute force {oracle}",
                    nc.enumerated
                )
            })?;
            ensure(nc.formula == int(oracle as i64), || {
                format!("n+1={dim} N={big}: formula {} vs {oracle}", nc.formula)
            })?;
        }
    }
    let mut compared = 0usize;
    for dim in 2..=4usize {
        for big in dim as u64..=12 {
            let all: Vec<KString> = mm::compositions(dim, big - dim as u64)
                .into_iter()
                .map(|k| KString::new(k).unwrap())
                .collect();
            for a in &all {
                let orbit: BTreeSet<Vec<u64>> = (0..dim)
                    .map(|r| (0..dim).map(|i| a.values()[(i + r) % dim]).collect())
                    .collect();
                let sa = mm::operator_string(a, 0);
                for b in &all {
                    let same_orbit = orbit.contains(b.values());
                    let rotation = sa.is_rotation_of(&mm::operator_string(b, 0));
                    ensure(same_orbit == rotation, || format!("{a:?} vs {b:?}"))?;
                    compared += 1;
                }
            }
        }
    }
    Ok(format!(
        "{pairs} coprime pairs; {compared} operator-string comparisons"
    ))
}

fn final_state(s0: &TodaState, r_end: f64, steps: usize) -> Result<Vec<f64>, String> {
    let traj = toda_ode::integrate(s0, r_end, &StepPolicy::Fixed { steps }).map_err(e)?;
    ensure(!traj.meta.blow_up, || format!("blow-up with {steps} steps"))?;
    let last = traj.last();
    Ok(last.w.iter().chain(&last.wprime).copied().collect())
}

fn ode_properties() -> Outcome {
    let zero = TodaState::new(0.1, vec![0.0; 4], vec![0.0; 4]).map_err(e)?;
    let traj = toda_ode::integrate(&zero, 10.0, &StepPolicy::Fixed { steps: 500 }).map_err(e)?;
    let sup = traj
        .samples
        .iter()
        .flat_map(|s| s.w.iter().chain(&s.wprime))
        .fold(0.0f64, |a, x| a.max(x.abs()));
    ensure(sup < 1e-12, || format!("zero solution drifts to {sup:e}"))?;
    ensure((traj.last().r - 10.0).abs() < 1e-12, || {
        "did not reach r = 10".into()
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut defect = 0.0f64;
    for n in 1..=5 {
        let m = random_generic_symmetric_m(&mut rng, n).m.scale(&frac(1, 4));
        let s0 = toda_ode::init_from_params(&MParams::new(m), 0.05, None).map_err(e)?;
        let traj = toda_ode::integrate(&s0, 0.8, &StepPolicy::Fixed { steps: 1000 }).map_err(e)?;
        ensure(!traj.meta.blow_up, || format!("n={n}: blow-up"))?;
        for s in &traj.samples {
            defect = defect
                .max(s.w.iter().sum::<f64>().abs())
                .max(s.wprime.iter().sum::<f64>().abs())
                .max(s.symmetry_defect());
        }
    }
    ensure(defect < 1e-8, || format!("invariant defect {defect:e}"))?;

    let m = lie::rho(3).map_err(e)?.scale(&frac(-1, 5));
    let s0 = toda_ode::init_from_params(&MParams::new(m), 0.1, None).map_err(e)?;
    let coarse = final_state(&s0, 0.6, 40)?;
    let mid = final_state(&s0, 0.6, 80)?;
    let fine = final_state(&s0, 0.6, 160)?;
    let dist = |a: &[f64], b: &[f64]| {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    };
    let ratio = dist(&coarse, &mid) / dist(&mid, &fine);
    ensure((12.0..=20.0).contains(&ratio), || {
        format!("refinement ratio {ratio:.2}")
    })?;
    Ok(format!(
        "stationary sup {sup:.0e}, defect {defect:.1e}, refinement ratio {ratio:.2}"
    ))
}

fn rho_norm() -> Outcome {
    for n in 1..=10usize {
        let r = lie::rho(n).map_err(e)?;
        // independent: ρ_i = n/2 - i
        let direct: Rational = (0..=n)
            .map(|i| frac(n as i64 - 2 * i as i64, 2).pow(2))
            .sum();
        let nn = n as i64;
        let want = frac(nn * (nn + 1) * (nn + 2), 12);
        ensure(lie::norm_squared(&r) == want && direct == want, || {
            format!("n={n}")
        })?;
        ensure(!lie::bilinear_form(&r, &r).map_err(e)?.is_zero(), || {
            format!("n={n}")
        })?;
    }
    Ok("n ≤ 10".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "1 unit Stokes data for k = (1,0,…,0)",
            1,
            unit_stokes_example,
        ),
        (
            "2 projective space Stokes numbers",
            1,
            projective_space_stokes,
        ),
        ("3 k/m/s round trips", 10, round_trips),
        ("4 shifted level set identity", 5, level_set_identity),
        (
            "5 alcove and weight correspondence",
            5,
            alcove_correspondence,
        ),
        ("6 fusion identity and ideal", 5, fusion_identity),
        ("7 minimal model formulas", 30, minimal_models),
        ("8 necklace count and operator strings", 30, necklaces),
        ("9 radial Toda ODE properties", 10, ode_properties),
        ("10 norm of rho", 1, rho_norm),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        let (tag, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over budget")),
            (Err(d), _) => ("FAIL", d.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!(
            "{tag} criterion {name} ({:.3}s / {budget}s): {detail}",
            elapsed.as_secs_f64()
        );
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
