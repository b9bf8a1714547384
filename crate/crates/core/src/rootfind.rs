//! Simultaneous root finding by Aberth–Ehrlich iteration.
//!
//! The iteration is written once over a [`Target`], which supplies the Newton
//! ratio `f/f'` and a scaled residual at a point. Three targets exist:
//!
//! * monomial coefficients, evaluated by Horner (reversed for `|z| > 1`);
//! * the Chebyshev polynomial `T_n`, evaluated by its three-term recurrence,
//!   which stays accurate where the monomial expansion of `T_n` cancels badly;
//! * the derivative of a polynomial known by its roots, evaluated through the
//!   logarithmic derivative `p'/p = sum 1/(z - r_j)`.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::poly::{check_finite, is_finite, CoefficientPolynomial, ComplexPoint};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 200;

const PHASE_OFFSET: f64 = 0.4;

/// Output of a simultaneous solve.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootSolveResult {
    pub roots: Vec<ComplexPoint>,
    pub residuals: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

impl RootSolveResult {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

struct Probe {
    /// `f/f'`; `None` once `f` is at its rounding-noise level.
    newton: Option<ComplexPoint>,
    residual: f64,
}

trait Target {
    fn degree(&self) -> usize;
    fn probe(&self, z: ComplexPoint) -> Probe;
}

fn aberth<T: Target>(
    target: &T,
    mut z: Vec<ComplexPoint>,
    tol: f64,
    max_iter: usize,
) -> RootSolveResult {
    let n = z.len();
    let mut done = vec![false; n];
    let mut iterations = 0;
    while iterations < max_iter && done.iter().any(|d| !d) {
        iterations += 1;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let Some(ratio) = target.probe(z[k]).newton else {
                done[k] = true;
                continue;
            };
            let mut repulsion = ComplexPoint::new(0.0, 0.0);
            for j in (0..n).filter(|&j| j != k) {
                let diff = z[k] - z[j];
                if diff.norm() > 0.0 {
                    repulsion += diff.inv();
                }
            }
            let denom = ComplexPoint::new(1.0, 0.0) - ratio * repulsion;
            let step = if denom.norm() > 0.0 {
                ratio / denom
            } else {
                ratio
            };
            if !is_finite(step) {
                // stationary point of f: kick off it deterministically
                let kick = ComplexPoint::from_polar(1e-3 * (1.0 + z[k].norm()), k as f64 + 1.0);
                z[k] += kick;
                continue;
            }
            z[k] -= step;
            if step.norm() <= 4.0 * f64::EPSILON * z[k].norm() || step.norm() == 0.0 {
                done[k] = true;
            }
        }
    }
    let residuals: Vec<f64> = z.iter().map(|&w| target.probe(w).residual).collect();
    let converged = residuals.iter().all(|&r| r <= tol);
    RootSolveResult {
        roots: z,
        residuals,
        iterations,
        converged,
    }
}

fn circle_guesses(center: ComplexPoint, radius: f64, n: usize) -> Vec<ComplexPoint> {
    (0..n)
        .map(|k| {
            center + ComplexPoint::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + PHASE_OFFSET)
        })
        .collect()
}

fn validate_solver_params(tol: f64, max_iter: usize) -> Result<()> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if max_iter == 0 {
        return Err(Error::InvalidInput("max_iter must be positive".into()));
    }
    Ok(())
}

struct MonomialTarget {
    /// normalized so the largest coefficient has modulus 1
    poly: CoefficientPolynomial,
    degree: usize,
}

impl Target for MonomialTarget {
    fn degree(&self) -> usize {
        self.degree
    }

    fn probe(&self, z: ComplexPoint) -> Probe {
        let n = self.degree as f64;
        let r = z.norm();
        let abs_sum = |t: f64, rev: bool| -> f64 {
            let cs = self.poly.coeffs();
            if rev {
                cs.iter().fold(0.0, |acc, c| acc * t + c.norm())
            } else {
                cs.iter().rev().fold(0.0, |acc, c| acc * t + c.norm())
            }
        };
        if r <= 1.0 {
            let (p, dp) = self.poly.eval_with_derivative(z);
            let residual = p.norm() / (1.0 + r).powf(n);
            let newton = if p.norm() <= 4.0 * f64::EPSILON * abs_sum(r, false) {
                None
            } else {
                Some(p / dp)
            };
            Probe { newton, residual }
        } else {
            // p(z) = z^n R(1/z), p'/p = w (n - w R'/R) with w = 1/z
            let w = z.inv();
            let (rv, drv) = self.poly.eval_reversed_with_derivative(w);
            let residual = rv.norm() * (r / (1.0 + r)).powf(n);
            let newton = if rv.norm() <= 4.0 * f64::EPSILON * abs_sum(1.0 / r, true) {
                None
            } else {
                let log_deriv = w * (n - w * drv / rv);
                Some(log_deriv.inv())
            };
            Probe { newton, residual }
        }
    }
}

/// Positive root of `|c_n| x^n = sum_{j<n} |c_j| x^j`: an upper bound on
/// every root modulus, never larger than `1 + max |c_j / c_n|`.
fn cauchy_radius(coeffs: &[ComplexPoint]) -> f64 {
    let n = coeffs.len() - 1;
    let lead = coeffs[n].norm();
    let a: Vec<f64> = coeffs[..n].iter().map(|c| c.norm() / lead).collect();
    let simple = 1.0 + a.iter().copied().fold(0.0, f64::max);
    if a.iter().all(|&x| x == 0.0) {
        return 0.0;
    }
    // g(x) = sum a_j x^(j-n) is decreasing in x; solve g(x) = 1
    let g = |x: f64| {
        let y = 1.0 / x;
        a.iter().fold(0.0, |acc, &aj| (acc + aj) * y)
    };
    let (mut lo, mut hi) = (0.0_f64, simple);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// All roots of a coefficient-form polynomial of degree at least 1.
///
/// Residuals are `|p(root)| / (max_j |c_j| * (1 + |root|)^deg)`.
pub fn solve(p: &CoefficientPolynomial, tol: f64, max_iter: usize) -> Result<RootSolveResult> {
    validate_solver_params(tol, max_iter)?;
    let degree = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::InvalidInput("root finding needs degree >= 1".into())),
    };
    let scale = p.max_coeff_norm();
    let normalized = CoefficientPolynomial::new(p.coeffs().iter().map(|c| c / scale).collect())?;
    let radius = cauchy_radius(normalized.coeffs()).max(f64::MIN_POSITIVE.sqrt());
    let target = MonomialTarget {
        poly: normalized,
        degree,
    };
    let guesses = circle_guesses(ComplexPoint::new(0.0, 0.0), radius, degree);
    let mut result = aberth(&target, guesses, tol, max_iter);
    if result.roots.iter().all(|z| is_finite(*z)) {
        compensated_polish(&target.poly, &mut result.roots);
        result.residuals = result
            .roots
            .iter()
            .map(|&w| target.probe(w).residual)
            .collect();
        result.converged = result.residuals.iter().all(|&r| r <= tol);
    }
    Ok(result)
}

/// A few Aberth sweeps with the value from compensated Horner, in `z` inside
/// the unit disk and in `1/z` outside. A step is kept only when it lowers
/// the value; the Aberth term keeps roots from merging.
fn compensated_polish(poly: &CoefficientPolynomial, roots: &mut [ComplexPoint]) {
    let mut done = vec![false; roots.len()];
    for _ in 0..6 {
        for k in 0..roots.len() {
            if done[k] {
                continue;
            }
            let inside = roots[k].norm() <= 1.0;
            let map = |z: ComplexPoint| if inside { z } else { z.inv() };
            let x = map(roots[k]);
            let value = poly.eval_compensated(x, !inside);
            if value.norm() == 0.0 {
                done[k] = true;
                continue;
            }
            let deriv = if inside {
                poly.eval_with_derivative(x).1
            } else {
                poly.eval_reversed_with_derivative(x).1
            };
            let pull: ComplexPoint = roots
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &w)| (x - map(w)).inv())
                .sum();
            let newton = value / deriv;
            let step = newton / (1.0 - newton * pull);
            let next = x - step;
            if !is_finite(next) {
                done[k] = true;
                continue;
            }
            if poly.eval_compensated(next, !inside).norm() >= value.norm() {
                done[k] = true;
                continue;
            }
            roots[k] = map(next);
            if step.norm() <= f64::EPSILON * next.norm() {
                done[k] = true;
            }
        }
    }
}

/// [`solve`] with the default tolerance and iteration cap.
pub fn solve_default(p: &CoefficientPolynomial) -> Result<RootSolveResult> {
    solve(p, DEFAULT_TOL, DEFAULT_MAX_ITER)
}

struct ChebyshevTarget {
    n: usize,
}

impl ChebyshevTarget {
    /// `(T_n(z), T_n'(z))`, using `T_n' = n U_{n-1}`.
    fn eval(&self, z: ComplexPoint) -> (ComplexPoint, ComplexPoint) {
        let one = ComplexPoint::new(1.0, 0.0);
        let (mut t0, mut t1) = (one, z);
        let (mut u0, mut u1) = (one, 2.0 * z);
        if self.n == 1 {
            return (z, one);
        }
        for _ in 1..self.n {
            let t2 = 2.0 * z * t1 - t0;
            t0 = t1;
            t1 = t2;
        }
        for _ in 1..self.n - 1 {
            let u2 = 2.0 * z * u1 - u0;
            u0 = u1;
            u1 = u2;
        }
        (t1, u1 * self.n as f64)
    }
}

impl Target for ChebyshevTarget {
    fn degree(&self) -> usize {
        self.n
    }

    fn probe(&self, z: ComplexPoint) -> Probe {
        let (t, dt) = self.eval(z);
        Probe {
            newton: (t.norm() > 0.0).then(|| t / dt),
            residual: t.norm(),
        }
    }
}

/// Roots of `T_n`, found by Aberth iteration on the three-term recurrence.
/// Residuals are the absolute values `|T_n(root)|`.
pub fn chebyshev_roots(n: usize, tol: f64, max_iter: usize) -> Result<RootSolveResult> {
    validate_solver_params(tol, max_iter)?;
    if n == 0 {
        return Err(Error::InvalidInput("T_0 has no roots".into()));
    }
    let target = ChebyshevTarget { n };
    let guesses = circle_guesses(ComplexPoint::new(0.0, 0.0), 1.5, n);
    Ok(aberth(&target, guesses, tol, max_iter))
}

struct CriticalTarget<'a> {
    roots: &'a [ComplexPoint],
}

impl CriticalTarget<'_> {
    /// Splits the sums at the root nearest `w`, so the Newton ratio of `p'`
    /// stays finite and accurate even when `w` sits on a root of `p`.
    fn split(&self, w: ComplexPoint) -> (ComplexPoint, ComplexPoint, ComplexPoint, f64) {
        let nearest = self
            .roots
            .iter()
            .enumerate()
            .map(|(j, r)| (j, (w - r).norm_sqr()))
            .fold(
                (0, f64::INFINITY),
                |best, cur| if cur.1 < best.1 { cur } else { best },
            )
            .0;
        let delta = w - self.roots[nearest];
        let mut a = ComplexPoint::new(0.0, 0.0);
        let mut b = ComplexPoint::new(0.0, 0.0);
        let mut abs_sum = 0.0;
        for (j, r) in self.roots.iter().enumerate() {
            if j == nearest {
                continue;
            }
            let inv = (w - r).inv();
            a += inv;
            b -= inv * inv;
            abs_sum += inv.norm();
        }
        (delta, a, b, abs_sum)
    }
}

impl Target for CriticalTarget<'_> {
    fn degree(&self) -> usize {
        self.roots.len() - 1
    }

    fn probe(&self, w: ComplexPoint) -> Probe {
        // with L = p'/p = u + A, L' = -u^2 + B, u = 1/delta:
        // p'/p'' = L / (L^2 + L') = (1 + A delta) / (2A + (A^2 + B) delta)
        let (delta, a, b, abs_sum) = self.split(w);
        let one = ComplexPoint::new(1.0, 0.0);
        let num = one + a * delta;
        let den = 2.0 * a + (a * a + b) * delta;
        // |L| / sum |1/(w - r_j)|, scaled by |delta| to stay finite
        let residual = num.norm() / (1.0 + abs_sum * delta.norm());
        let newton = (residual > f64::EPSILON).then(|| num / den);
        Probe { newton, residual }
    }
}

/// Zeros of `p'` for `p` given by its roots.
///
/// Residuals are the relative cancellation `|sum 1/(w - r_j)| / sum |1/(w - r_j)|`
/// of the logarithmic derivative at each returned point.
pub fn critical_points(
    roots: &[ComplexPoint],
    tol: f64,
    max_iter: usize,
) -> Result<RootSolveResult> {
    validate_solver_params(tol, max_iter)?;
    check_finite(roots, "roots")?;
    if roots.is_empty() {
        return Err(Error::InvalidInput(
            "critical points need at least one root".into(),
        ));
    }
    let target = CriticalTarget { roots };
    let degree = target.degree();
    if degree == 0 {
        return Ok(RootSolveResult {
            roots: Vec::new(),
            residuals: Vec::new(),
            iterations: 0,
            converged: true,
        });
    }
    let m = roots.len() as f64;
    let center = roots.iter().sum::<ComplexPoint>() / m;
    let spread = roots
        .iter()
        .map(|r| (r - center).norm())
        .fold(0.0, f64::max);
    let radius = if spread > 0.0 {
        spread
    } else {
        1e-3 * (1.0 + center.norm())
    };
    let guesses = circle_guesses(center, radius, degree);
    Ok(aberth(&target, guesses, tol, max_iter))
}

/// Outcome of Newton polishing.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Polished {
    pub root: ComplexPoint,
    /// set when `p'` vanished at an iterate; `root` is then the input
    pub derivative_vanished: bool,
}

/// Newton iteration from `approx`, stopping early once the residual stops
/// decreasing. Returns the best iterate seen.
pub fn polish(p: &CoefficientPolynomial, approx: ComplexPoint, steps: usize) -> Polished {
    let (mut value, _) = p.eval_with_derivative(approx);
    let mut best = approx;
    for _ in 0..steps {
        let (v, dv) = p.eval_with_derivative(best);
        if v.norm() == 0.0 {
            break;
        }
        if dv.norm() == 0.0 || !is_finite(dv) {
            return Polished {
                root: approx,
                derivative_vanished: true,
            };
        }
        let next = best - v / dv;
        let (nv, _) = p.eval_with_derivative(next);
        if !is_finite(nv) || nv.norm() >= value.norm() {
            break;
        }
        best = next;
        value = nv;
    }
    Polished {
        root: best,
        derivative_vanished: false,
    }
}
