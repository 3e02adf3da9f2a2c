//! Subcommands other than `convert`.

use std::io::Write;
use std::path::Path;

use anyhow::{anyhow, bail, ensure, Context, Result};
use serde_json::{json, Value};
use ttstar_core::fusion;
use ttstar_core::lie;
use ttstar_core::minimal_models::{self as mm, MinimalModelSpec};
use ttstar_core::rational::{self, int};
use ttstar_core::rep_map::{self, AffineDominantWeight};
use ttstar_core::selfcheck;
use ttstar_core::toda_ode::{self, StepPolicy};
use ttstar_core::toda_params::{self, KParams};

use crate::convert::{self, Data, Kind, Sources};
use crate::input::{self, Values};

/// Picks the input kind from whichever of `--k`, `--m` (or JSON keys) is set.
fn k_or_m(src: &Sources) -> Result<Data> {
    let kind = match &src.input {
        Some(obj) if obj.get("m").is_some() => Kind::M,
        Some(obj) if obj.get("k").is_some() => Kind::K,
        Some(_) => bail!("input JSON needs a \"k\" or \"m\" field"),
        None if src.m.is_some() => Kind::M,
        None if src.k.is_some() => Kind::K,
        None => bail!("pass --k or --m"),
    };
    Data::read(kind, src)
}

pub fn stokes(src: &Sources, n: Option<usize>) -> Result<Value> {
    let data = k_or_m(src)?;
    convert::check_rank(&data, n)?;
    let m = data.convert(Kind::M, None)?;
    let s = data.convert(Kind::S, None)?;
    let mut out = json!({
        "n": data.rank(),
        "m": m.to_json()["m"],
        "s": s.to_json()["s"],
        "char_poly": input::complex_to_json(&data.char_poly()?),
        "eigenvalues": input::complex_to_json(&data.eigenvalues()?),
    });
    if let Some(mp) = convert::exact_m(&m) {
        out["polytope"] = serde_json::to_value(toda_params::polytope_status(&mp))?;
    }
    Ok(out)
}

pub fn weight(src: &Sources, n: Option<usize>) -> Result<Value> {
    if src.v.is_some() || src.input.as_ref().is_some_and(|o| o.get("v").is_some()) {
        let data = Data::read(Kind::Weight, src)?;
        convert::check_rank(&data, n)?;
        let Data::Weight(w) = &data else {
            unreachable!()
        };
        let kp = rep_map::k_from_weight(w)?;
        return Ok(json!({
            "weight": data.to_json(),
            "k": kp.values().iter().map(rational::format).collect::<Vec<_>>(),
            "theorem": rep_map::verify_main_theorem(&kp)?,
        }));
    }
    let data = k_or_m(src)?;
    convert::check_rank(&data, n)?;
    match &data {
        Data::K(Values::Exact(k)) => {
            let kp = KParams::new(k.clone())?;
            let w = rep_map::weight_from_k(&kp)?;
            Ok(json!({
                "k": data.to_json()["k"],
                "weight": {"n": w.rank(), "v": w.coefficients(), "level": w.level()},
                "theorem": rep_map::verify_main_theorem(&kp)?,
            }))
        }
        Data::M { .. } => {
            let mp = convert::exact_m(&data)
                .ok_or_else(|| anyhow!("classifying m needs exact entries"))?;
            Ok(json!({
                "m": data.to_json()["m"],
                "classification": rep_map::classify_m(&mp),
            }))
        }
        _ => bail!("a dominant weight needs exact integer exponents"),
    }
}

pub fn fusion(n: usize, level: u64, mu: Option<&str>) -> Result<Value> {
    ensure!(n >= 1, ttstar_core::Error::ZeroRank);
    let mut elements = Vec::new();
    for v in lie::dominant_weights_of_level(n, level) {
        let w = AffineDominantWeight::new(v, level)?;
        let zeta = fusion::zeta(&w)?;
        let t = fusion::special_element(&w)?;
        elements.push(json!({
            "v": w.coefficients(),
            "zeta": zeta,
            "t": input::complex_to_json(&t.x),
        }));
    }
    let mut out = json!({"n": n, "level": level, "special_elements": elements});
    if let Some(mu) = mu {
        let mu = input::parse_naturals(mu)?;
        ensure!(
            mu.len() == n,
            "--mu needs {n} coefficients, got {}",
            mu.len()
        );
        let table = fusion::character_table(&mu, n, level)?;
        let values: Vec<_> = table.iter().map(|(_, _, chi)| *chi).collect();
        out["character"] = json!({
            "mu": mu,
            "dimension": rational::format(&fusion::weyl_dimension(&mu)),
            "values": input::complex_to_json(&values),
            "in_fusion_ideal": values.iter().all(|z| z.norm() < fusion::VANISHING_TOL),
        });
    }
    Ok(out)
}

pub fn model(
    n: usize,
    total: Option<u64>,
    p: Option<u64>,
    p_prime: Option<u64>,
    csv_path: Option<&Path>,
) -> Result<Value> {
    match (total, p, p_prime) {
        (Some(big), None, None) => {
            let c = mm::ad_central_charge(n, big)?;
            let rows = mm::primaries_table(n, big)?;
            let mut primaries = Vec::new();
            for row in &rows {
                let mut v = serde_json::to_value(row)?;
                v["c_minus_24h"] = json!(rational::format(&(&c - int(24) * &row.h)));
                primaries.push(v);
            }
            if let Some(path) = csv_path {
                let mut w = csv::Writer::from_path(path)
                    .with_context(|| format!("creating {}", path.display()))?;
                w.write_record(["lambda", "kstring", "h", "c_minus_24h", "mu"])?;
                for row in &rows {
                    w.write_record([
                        join(&row.lambda),
                        join(row.kstring.values()),
                        rational::format(&row.h),
                        rational::format(&(&c - int(24) * &row.h)),
                        rational::format(&row.mu),
                    ])?;
                }
                w.flush()?;
            }
            Ok(json!({
                "n": n,
                "N": big,
                "c": rational::format(&c),
                "primaries": primaries,
                "h_nonpositive": mm::nonunitarity_scan(n, big)?,
            }))
        }
        (None, Some(p), Some(p_prime)) => {
            let spec = MinimalModelSpec::new(n, p, p_prime)?;
            let c = mm::central_charge(&spec);
            let rows = mm::weight_pairs_table(&spec)?;
            if let Some(path) = csv_path {
                let mut w = csv::Writer::from_path(path)
                    .with_context(|| format!("creating {}", path.display()))?;
                w.write_record(["lambda_plus", "lambda_minus", "h", "c_minus_24h"])?;
                for (plus, minus, h) in &rows {
                    w.write_record([
                        join(plus),
                        join(minus),
                        rational::format(h),
                        rational::format(&(&c - int(24) * h)),
                    ])?;
                }
                w.flush()?;
            }
            let table: Vec<_> = rows
                .iter()
                .map(|(plus, minus, h)| json!({"Λ+": plus, "Λ-": minus, "h": rational::format(h)}))
                .collect();
            Ok(json!({
                "n": n,
                "p": p,
                "p_prime": p_prime,
                "c": rational::format(&c),
                "weights": table,
            }))
        }
        _ => bail!("pass either --N or both --p and --p-prime"),
    }
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

pub fn necklaces(n: usize, total: u64, count: bool) -> Result<Value> {
    ensure!(n >= 1, ttstar_core::Error::ZeroRank);
    ensure!(total > n as u64, "N must be at least n+1 = {}", n + 1);
    if count {
        return Ok(serde_json::to_value(mm::necklace_count(n, total))?);
    }
    let reps: Vec<_> = mm::enumerate_primaries(n, total)
        .into_iter()
        .map(|ks| {
            json!({
                "kstring": ks.values(),
                "orbit_size": ks.orbit().len(),
                "operator_string": mm::operator_string(&ks, 0).to_string(),
            })
        })
        .collect();
    Ok(json!({"n": n, "N": total, "necklaces": reps}))
}

pub struct OdeArgs<'a> {
    pub epsilon: f64,
    pub r_end: f64,
    pub steps: Option<usize>,
    pub tol: Option<f64>,
    pub shift: Option<&'a str>,
}

pub fn ode(
    src: &Sources,
    n: Option<usize>,
    args: &OdeArgs,
    csv_out: &mut dyn Write,
) -> Result<Value> {
    let data = k_or_m(src)?;
    convert::check_rank(&data, n)?;
    let m = match data.convert(Kind::M, None)? {
        Data::M { m, .. } => m.to_f64(),
        _ => unreachable!(),
    };
    let shift = match args.shift {
        Some(s) => Some(
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<f64>()
                        .with_context(|| format!("bad shift entry {t:?}"))
                })
                .collect::<Result<Vec<_>>>()?,
        ),
        None => None,
    };
    let policy = match (args.steps, args.tol) {
        (Some(steps), None) => StepPolicy::Fixed { steps },
        (None, Some(tol)) => {
            ensure!(tol > 0.0, "--tol must be positive");
            StepPolicy::adaptive(tol)
        }
        (None, None) => StepPolicy::Fixed { steps: 1000 },
        (Some(_), Some(_)) => bail!("pass at most one of --steps and --tol"),
    };
    let s0 = toda_ode::init_asymptotic(&m, args.epsilon, shift.as_deref())?;
    let mut traj = toda_ode::integrate(&s0, args.r_end, &policy)?;
    traj.meta.m = Some(m);
    traj.write_csv(&mut *csv_out)?;
    Ok(serde_json::to_value(&traj.meta)?)
}

pub fn selfcheck(seed: u64) -> (Value, bool) {
    let results = selfcheck::run(seed);
    let passed = results.iter().all(|c| c.passed);
    (
        json!({"seed": seed, "passed": passed, "checks": results}),
        passed,
    )
}
