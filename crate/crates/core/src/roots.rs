//! Simultaneous root finding (Aberth–Ehrlich) plus the containment and
//! tightness checks used to verify every disk bound empirically.

use crate::disk::Disk;
use crate::poly::Polynomial;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Scaled residual a solve must reach for `converged` to be set.
pub const RESIDUAL_LIMIT: f64 = 1e-10;

/// Computed zeros of a polynomial, sorted by (real, imaginary) part.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    /// All `n` roots, exact zeros from deflation included.
    #[serde(with = "complex_vec")]
    pub roots: Vec<Complex64>,
    /// Per-root `|p(r)| / Σ_j |a_j||r|^j` (backward-error scale).
    pub residuals: Vec<f64>,
    /// Aberth–Ehrlich iterations performed.
    pub iterations: usize,
    /// True when the step criterion was met and every scaled residual is
    /// at most [`RESIDUAL_LIMIT`].
    pub converged: bool,
}

mod complex_vec {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|z| [z.re, z.im])
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Complex64>, D::Error> {
        let pairs = Vec::<[f64; 2]>::deserialize(d)?;
        Ok(pairs.iter().map(|p| Complex64::new(p[0], p[1])).collect())
    }
}

/// Verdict of checking a root set against a disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Containment {
    Contained,
    Failed {
        worst: Complex64,
        excess: f64,
    },
    /// The solve did not converge; the bound is neither confirmed nor
    /// refuted.
    Inconclusive,
    Unchecked,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootsError {
    #[error("tightness is undefined for a zero-radius disk")]
    ZeroRadius,
}

/// Cauchy bound `1 + max_{j<n} |a_j| / |a_n|`; every zero of `p` has
/// modulus at most this.
pub fn cauchy_bound(p: &Polynomial) -> f64 {
    let a = p.coeffs();
    let n = p.degree();
    let max = a[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    1.0 + max / a[n].abs()
}

fn eval_scale(p: &Polynomial, r: f64) -> f64 {
    let mut scale = 0.0;
    let mut pow = 1.0;
    for &c in p.coeffs() {
        scale += c.abs() * pow;
        pow *= r;
    }
    scale
}

fn scaled_residual(p: &Polynomial, z: Complex64) -> f64 {
    let scale = eval_scale(p, z.norm());
    let value = p.eval(z).norm();
    if scale == 0.0 {
        value
    } else {
        value / scale
    }
}

fn lex_order(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.partial_cmp(&b.re)
        .unwrap_or(Ordering::Equal)
        .then(a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
}

/// Finds all `n` roots of `p` by simultaneous Aberth–Ehrlich iteration.
///
/// Exact zero roots (trailing zero low-order coefficients) are deflated
/// first and re-appended as exact zeros. The remaining approximations start
/// equally spaced on a circle of radius `0.9 ×` the Cauchy bound, rotated by
/// a fixed 0.4 rad so real-axis symmetry cannot stall the iteration, and are
/// updated until the largest relative step is at most `tol` or `max_iter` is
/// reached. Fully deterministic: identical inputs give identical output.
///
/// A solve that exhausts `max_iter` (multiple-root clusters converge only
/// linearly) returns the best iterate with `converged = false`; callers must
/// treat bound verification against it as inconclusive, not failed.
pub fn find_roots(p: &Polynomial, tol: f64, max_iter: usize) -> RootSet {
    let zero_count = p.coeffs().iter().take_while(|c| **c == 0.0).count();
    let mut roots = vec![Complex64::new(0.0, 0.0); zero_count];

    let deflated;
    let q = if zero_count == 0 {
        p
    } else {
        // leading coefficient is unchanged, so this cannot fail unless the
        // whole polynomial was z^n, which deflates to degree 0
        deflated = Polynomial::new(p.coeffs()[zero_count..].to_vec()).ok();
        match &deflated {
            Some(q) => q,
            None => {
                // p(z) = a_n z^n: all roots are exactly zero
                let residuals = vec![0.0; roots.len()];
                return RootSet {
                    roots,
                    residuals,
                    iterations: 0,
                    converged: true,
                };
            }
        }
    };

    let d = q.degree();
    let radius = 0.9 * cauchy_bound(q);
    let mut z: Vec<Complex64> = (0..d)
        .map(|i| {
            let angle = 2.0 * std::f64::consts::PI * i as f64 / d as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let mut iterations = 0;
    let mut steps_converged = false;
    'outer: for iter in 1..=max_iter {
        iterations = iter;
        let mut next = z.clone();
        let mut max_step = 0.0f64;
        for i in 0..d {
            let value = q.eval(z[i]);
            if value.norm() == 0.0 {
                continue;
            }
            let deriv = q.eval_deriv(z[i]);
            let newton = if deriv.norm() == 0.0 {
                // stationary point: nudge off it instead of dividing by zero
                Complex64::new(tol.max(1e-12), tol.max(1e-12))
            } else {
                value / deriv
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..d {
                if j != i {
                    let diff = z[i] - z[j];
                    if diff.norm() > 0.0 {
                        repulsion += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() == 0.0 {
                newton
            } else {
                newton / denom
            };
            if !step.re.is_finite() || !step.im.is_finite() {
                break 'outer;
            }
            next[i] = z[i] - step;
            max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
        }
        if next.iter().any(|w| !w.re.is_finite() || !w.im.is_finite()) {
            break;
        }
        z = next;
        if max_step <= tol {
            steps_converged = true;
            break;
        }
    }

    roots.extend(z);
    roots.sort_by(lex_order);

    let residuals: Vec<f64> = roots.iter().map(|&r| scaled_residual(p, r)).collect();
    let converged = steps_converged && residuals.iter().all(|&r| r <= RESIDUAL_LIMIT);
    RootSet {
        roots,
        residuals,
        iterations,
        converged,
    }
}

/// [`find_roots`] with the default `tol = 1e-13`, `max_iter = 1000`.
pub fn find_roots_default(p: &Polynomial) -> RootSet {
    find_roots(p, 1e-13, 1000)
}

/// Checks that every computed root lies in `d`, allowing a relative plus
/// absolute slack on the radius. Inconclusive unless the solve converged.
pub fn containment(rs: &RootSet, d: &Disk, rel_tol: f64, abs_tol: f64) -> Containment {
    if !rs.converged {
        return Containment::Inconclusive;
    }
    let mut worst: Option<(Complex64, f64)> = None;
    for &r in &rs.roots {
        let excess = (r - d.center).norm() - (d.radius * (1.0 + rel_tol) + abs_tol);
        if excess > 0.0 && worst.is_none_or(|(_, e)| excess > e) {
            worst = Some((r, excess));
        }
    }
    match worst {
        None => Containment::Contained,
        Some((worst, excess)) => Containment::Failed { worst, excess },
    }
}

/// [`containment`] with the default slacks `rel = 1e-9`, `abs = 1e-12`.
pub fn containment_default(rs: &RootSet, d: &Disk) -> Containment {
    containment(rs, d, 1e-9, 1e-12)
}

/// Farthest-root distance from the disk center divided by the radius;
/// ≤ 1 means contained, near 1 means the bound is sharp.
pub fn tightness(rs: &RootSet, d: &Disk) -> Result<f64, RootsError> {
    if d.radius <= 0.0 {
        return Err(RootsError::ZeroRadius);
    }
    let max_dist = rs
        .roots
        .iter()
        .map(|&r| (r - d.center).norm())
        .fold(0.0f64, f64::max);
    Ok(max_dist / d.radius)
}

/// Residuals of the two Vieta identities: `(|Σ r_i + a_{n−1}/a_n|,
/// |Π r_i − (−1)^n a_0/a_n|)`. Both are small for a sound solve.
pub fn vieta_check(p: &Polynomial, rs: &RootSet) -> (f64, f64) {
    let a = p.coeffs();
    let n = p.degree();
    let sum: Complex64 = rs.roots.iter().sum();
    let prod: Complex64 = rs.roots.iter().product();
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let sum_residual = (sum + a[n - 1] / a[n]).norm();
    let prod_residual = (prod - sign * a[0] / a[n]).norm();
    (sum_residual, prod_residual)
}
