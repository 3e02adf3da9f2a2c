//! Parsing of list flags and JSON payloads.
//!
//! Exact values travel as `"p/q"` strings (or JSON integers); any other JSON
//! number marks the whole list as approximate.

use anyhow::{anyhow, bail, Context, Result};
use num_complex::Complex64;
use serde_json::{json, Value};
use ttstar_core::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq)]
pub enum Values {
    Exact(Vec<Rational>),
    Approx(Vec<f64>),
}

impl Values {
    pub fn len(&self) -> usize {
        match self {
            Values::Exact(v) => v.len(),
            Values::Approx(v) => v.len(),
        }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            Values::Exact(v) => v.iter().map(rational::to_f64).collect(),
            Values::Approx(v) => v.clone(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Values::Exact(v) => json!(v.iter().map(rational::format).collect::<Vec<_>>()),
            Values::Approx(v) => json!(v),
        }
    }
}

/// `"1/2,-1/2,0"` style flag values.
pub fn parse_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .map(|t| rational::parse(t).map_err(anyhow::Error::from))
        .collect()
}

pub fn parse_naturals(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .with_context(|| format!("expected a nonnegative integer, got {t:?}"))
        })
        .collect()
}

/// Stokes numbers from a flag: `a` or `a+bi` / `a-bi` entries.
pub fn parse_complex_list(s: &str) -> Result<Vec<Complex64>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<Complex64>()
                .ok()
                .or_else(|| t.parse::<f64>().ok().map(|x| Complex64::new(x, 0.0)))
                .ok_or_else(|| anyhow!("cannot parse Stokes number {t:?}"))
        })
        .collect()
}

pub fn values_from_json(v: &Value) -> Result<Values> {
    let items = v
        .as_array()
        .ok_or_else(|| anyhow!("expected a list, got {v}"))?;
    let mut exact = Vec::with_capacity(items.len());
    let mut approx = Vec::with_capacity(items.len());
    let mut all_exact = true;
    for item in items {
        match item {
            Value::String(s) => {
                let q = rational::parse(s)?;
                approx.push(rational::to_f64(&q));
                exact.push(q);
            }
            Value::Number(x) => {
                if let Some(i) = x.as_i64() {
                    exact.push(rational::int(i));
                } else {
                    all_exact = false;
                }
                approx.push(x.as_f64().ok_or_else(|| anyhow!("bad number {x}"))?);
            }
            other => bail!("expected a number or \"p/q\" string, got {other}"),
        }
    }
    Ok(if all_exact {
        Values::Exact(exact)
    } else {
        Values::Approx(approx)
    })
}

/// Stokes numbers as plain numbers or `{"re": …, "im": …}` objects.
pub fn complex_from_json(v: &Value) -> Result<Vec<Complex64>> {
    let items = v
        .as_array()
        .ok_or_else(|| anyhow!("expected a list, got {v}"))?;
    items
        .iter()
        .map(|item| match item {
            Value::Number(x) => Ok(Complex64::new(x.as_f64().unwrap_or(f64::NAN), 0.0)),
            Value::Object(o) => {
                let part = |key: &str| o.get(key).and_then(Value::as_f64).unwrap_or(0.0);
                if !o.contains_key("re") {
                    bail!("complex entry needs an \"re\" field: {item}");
                }
                Ok(Complex64::new(part("re"), part("im")))
            }
            other => bail!("expected a Stokes number, got {other}"),
        })
        .collect()
}

pub fn complex_to_json(v: &[Complex64]) -> Value {
    json!(v
        .iter()
        .map(|z| json!({"re": z.re, "im": z.im}))
        .collect::<Vec<_>>())
}

pub fn read_json(path: &std::path::Path) -> Result<Value> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}
