//! Small dense complex helpers: elementary symmetric functions, polynomial
//! roots and determinants. Sizes here are at most a dozen or so.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// `e_0, …, e_len` of the given values (`e_0 = 1`).
pub fn elementary_symmetric(values: &[Complex64]) -> Vec<Complex64> {
    let mut e = vec![Complex64::new(0.0, 0.0); values.len() + 1];
    e[0] = Complex64::new(1.0, 0.0);
    for (count, x) in values.iter().enumerate() {
        for j in (1..=count + 1).rev() {
            let prev = e[j - 1];
            e[j] += prev * x;
        }
    }
    e
}

/// Horner evaluation; `coeffs` in descending powers.
pub fn eval(coeffs: &[Complex64], x: Complex64) -> Complex64 {
    coeffs
        .iter()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
}

fn eval_with_derivative(coeffs: &[Complex64], x: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// Roots of a polynomial given in descending powers, by Aberth–Ehrlich
/// iteration followed by Newton polishing.
pub fn roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let lead = *coeffs.first().ok_or(Error::RootsNotConverged)?;
    if lead.norm() == 0.0 {
        return Err(Error::Precondition("leading coefficient is zero".into()));
    }
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let degree = monic.len() - 1;
    if degree == 0 {
        return Ok(Vec::new());
    }

    // Cauchy bound for the initial circle; the angular offset avoids
    // symmetric starts that stall on real or self-conjugate inputs.
    let radius = 1.0 + monic[1..].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..degree)
        .map(|j| {
            let angle = 2.0 * std::f64::consts::PI * j as f64 / degree as f64 + 0.4;
            Complex64::from_polar(0.5 * radius, angle)
        })
        .collect();

    // Stop a root once its residual is at the rounding level of the
    // evaluation; this keeps split multiple roots from wandering.
    let abs_coeffs: Vec<Complex64> = monic
        .iter()
        .map(|c| Complex64::new(c.norm(), 0.0))
        .collect();
    let tiny = |x: Complex64| {
        let scale = eval(&abs_coeffs, Complex64::new(x.norm(), 0.0)).re;
        eval(&monic, x).norm() <= 4.0 * f64::EPSILON * scale
    };
    let mut done = vec![false; degree];
    for _ in 0..1000 {
        if done.iter().all(|d| *d) {
            break;
        }
        for i in 0..degree {
            if done[i] {
                continue;
            }
            let (p, dp) = eval_with_derivative(&monic, z[i]);
            let ratio = p / dp;
            let repulsion: Complex64 = (0..degree)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
            }
            if !step.is_finite() || tiny(z[i]) || step.norm() <= 1e-16 * z[i].norm().max(1.0) {
                done[i] = true;
            }
        }
    }

    // Newton polish, keeping a step only when it lowers the residual.
    for root in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval_with_derivative(&monic, *root);
            let candidate = *root - p / dp;
            if !candidate.is_finite() || eval(&monic, candidate).norm() >= p.norm() {
                break;
            }
            *root = candidate;
        }
    }

    if !done.iter().all(|d| *d) {
        return Err(Error::RootsNotConverged);
    }
    Ok(z)
}

/// First-order forward error bound `4ε·Σ|c_j||z|^j / |p'(z)|` of a computed
/// simple root; large values flag multiple or nearly multiple roots.
pub fn root_error_bound(coeffs: &[Complex64], z: Complex64) -> f64 {
    let abs_coeffs: Vec<Complex64> = coeffs
        .iter()
        .map(|c| Complex64::new(c.norm(), 0.0))
        .collect();
    let scale = eval(&abs_coeffs, Complex64::new(z.norm(), 0.0)).re;
    let (_, dp) = eval_with_derivative(coeffs, z);
    4.0 * f64::EPSILON * scale / dp.norm()
}

pub fn min_pairwise_distance(values: &[Complex64]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            best = best.min((values[i] - values[j]).norm());
        }
    }
    best
}

/// Determinant by Gaussian elimination with partial pivoting; `rows` is
/// square and row-major.
pub fn determinant(mut rows: Vec<Vec<Complex64>>) -> Complex64 {
    let size = rows.len();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..size {
        let pivot = (col..size)
            .max_by(|&a, &b| rows[a][col].norm().total_cmp(&rows[b][col].norm()))
            .unwrap();
        if rows[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            rows.swap(pivot, col);
            det = -det;
        }
        let p = rows[col][col];
        det *= p;
        for r in col + 1..size {
            let factor = rows[r][col] / p;
            if factor.norm() == 0.0 {
                continue;
            }
            let (upper, lower) = rows.split_at_mut(r);
            for (x, y) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *x -= factor * y;
            }
        }
    }
    det
}
