//! Complex univariate polynomials in coefficient and root-factored form.
//!
//! Coefficients are stored in ascending-degree order: `coeffs[j]` multiplies
//! `z^j`. The zero polynomial is the empty coefficient list and has no degree.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point or value in the complex plane.
pub type ComplexPoint = Complex64;

/// Largest degree accepted by [`CoefficientPolynomial::chebyshev_t`] and
/// [`CoefficientPolynomial::from_roots`]. The leading coefficient of `T_512`
/// is `2^511`, comfortably inside the double range.
pub const MAX_EXPANSION_DEGREE: usize = 512;

pub(crate) fn is_finite(z: ComplexPoint) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// `a + b = s + e` exactly.
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    (s, (a - (s - v)) + (b - v))
}

/// `a * b = p + e` exactly, barring underflow.
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// `x * y = p + e + f` exactly, with `p` the rounded complex product.
fn two_prod_complex(
    x: ComplexPoint,
    y: ComplexPoint,
) -> (ComplexPoint, ComplexPoint, ComplexPoint) {
    let (z1, h1) = two_prod(x.re, y.re);
    let (z2, h2) = two_prod(x.im, y.im);
    let (z3, h3) = two_prod(x.re, y.im);
    let (z4, h4) = two_prod(x.im, y.re);
    let (z5, h5) = two_sum(z1, -z2);
    let (z6, h6) = two_sum(z3, z4);
    (
        ComplexPoint::new(z5, z6),
        ComplexPoint::new(h1 - h2, h3 + h4),
        ComplexPoint::new(h5, h6),
    )
}

/// Horner over coefficients given from the highest power down, with the
/// rounding error of every step accumulated and added back at the end.
fn comp_horner<'a>(
    coeffs: impl Iterator<Item = &'a ComplexPoint>,
    z: ComplexPoint,
) -> ComplexPoint {
    let zero = ComplexPoint::new(0.0, 0.0);
    let mut s = zero;
    let mut err = zero;
    for &c in coeffs {
        let (p, e1, e2) = two_prod_complex(s, z);
        let (re, b1) = two_sum(p.re, c.re);
        let (im, b2) = two_sum(p.im, c.im);
        s = ComplexPoint::new(re, im);
        err = err * z + (e1 + e2 + ComplexPoint::new(b1, b2));
    }
    s + err
}

pub(crate) fn check_finite(points: &[ComplexPoint], what: &str) -> Result<()> {
    match points.iter().position(|z| !is_finite(*z)) {
        Some(i) => Err(Error::InvalidInput(format!("{what}[{i}] is not finite"))),
        None => Ok(()),
    }
}

/// Polynomial in coefficient form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CoeffsWire", into = "CoeffsWire")]
pub struct CoefficientPolynomial {
    coeffs: Vec<ComplexPoint>,
}

#[derive(Serialize, Deserialize)]
struct CoeffsWire {
    coeffs: Vec<ComplexPoint>,
}

impl TryFrom<CoeffsWire> for CoefficientPolynomial {
    type Error = Error;

    fn try_from(w: CoeffsWire) -> Result<Self> {
        Self::new(w.coeffs)
    }
}

impl From<CoefficientPolynomial> for CoeffsWire {
    fn from(p: CoefficientPolynomial) -> Self {
        CoeffsWire { coeffs: p.coeffs }
    }
}

impl CoefficientPolynomial {
    /// Builds a polynomial from ascending-degree coefficients. Trailing exact
    /// zeros are dropped so the leading coefficient is nonzero.
    pub fn new(coeffs: Vec<ComplexPoint>) -> Result<Self> {
        check_finite(&coeffs, "coeffs")?;
        Ok(Self::from_vec_unchecked(coeffs))
    }

    fn from_vec_unchecked(mut coeffs: Vec<ComplexPoint>) -> Self {
        while coeffs
            .last()
            .is_some_and(|c| *c == ComplexPoint::new(0.0, 0.0))
        {
            coeffs.pop();
        }
        Self { coeffs }
    }

    fn checked(coeffs: Vec<ComplexPoint>, degree: usize) -> Result<Self> {
        if coeffs.iter().all(|c| is_finite(*c)) {
            Ok(Self::from_vec_unchecked(coeffs))
        } else {
            Err(Error::CoefficientOverflow { degree })
        }
    }

    /// Real coefficients, ascending degree.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| ComplexPoint::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: ComplexPoint) -> Self {
        Self::from_vec_unchecked(vec![c])
    }

    /// The monic linear factor `z - root`.
    pub fn linear(root: ComplexPoint) -> Self {
        Self::from_vec_unchecked(vec![-root, ComplexPoint::new(1.0, 0.0)])
    }

    pub fn coeffs(&self) -> &[ComplexPoint] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<ComplexPoint> {
        self.coeffs.last().copied()
    }

    /// Largest coefficient modulus; 0 for the zero polynomial.
    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation of `p(z)`.
    pub fn evaluate(&self, z: ComplexPoint) -> Result<ComplexPoint> {
        let v = self
            .coeffs
            .iter()
            .rev()
            .fold(ComplexPoint::new(0.0, 0.0), |acc, &c| acc * z + c);
        if is_finite(v) {
            Ok(v)
        } else {
            Err(Error::EvaluationOverflow)
        }
    }

    /// Simultaneous Horner evaluation of `p(z)` and `p'(z)`, unchecked.
    pub(crate) fn eval_with_derivative(&self, z: ComplexPoint) -> (ComplexPoint, ComplexPoint) {
        let zero = ComplexPoint::new(0.0, 0.0);
        let mut p = zero;
        let mut dp = zero;
        for &c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// Compensated Horner evaluation of `p(z)`, or of the reversed polynomial
    /// when `reversed`: the result is as accurate as plain Horner run in
    /// twice the working precision, then rounded.
    pub(crate) fn eval_compensated(&self, z: ComplexPoint, reversed: bool) -> ComplexPoint {
        if reversed {
            comp_horner(self.coeffs.iter(), z)
        } else {
            comp_horner(self.coeffs.iter().rev(), z)
        }
    }

    /// Horner evaluation of the reversed polynomial `z^n p(1/z)` and its
    /// derivative at `w`.
    pub(crate) fn eval_reversed_with_derivative(
        &self,
        w: ComplexPoint,
    ) -> (ComplexPoint, ComplexPoint) {
        let zero = ComplexPoint::new(0.0, 0.0);
        let mut p = zero;
        let mut dp = zero;
        for &c in self.coeffs.iter() {
            dp = dp * w + p;
            p = p * w + c;
        }
        (p, dp)
    }

    /// `p'(z)/p(z)`, evaluated through the reversed polynomial when `|z| > 1`
    /// so high-degree evaluation away from the origin does not overflow.
    /// Infinite when `p(z)` is exactly zero.
    pub fn log_derivative(&self, z: ComplexPoint) -> ComplexPoint {
        let Some(n) = self.degree() else {
            return ComplexPoint::new(f64::NAN, f64::NAN);
        };
        if z.norm() <= 1.0 {
            let (p, dp) = self.eval_with_derivative(z);
            if p.norm() == 0.0 {
                return ComplexPoint::new(f64::INFINITY, 0.0);
            }
            dp / p
        } else {
            let w = z.inv();
            let (r, dr) = self.eval_reversed_with_derivative(w);
            if r.norm() == 0.0 {
                return ComplexPoint::new(f64::INFINITY, 0.0);
            }
            w * (n as f64 - w * dr / r)
        }
    }

    /// Coefficient-wise derivative. Constants map to the zero polynomial.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| c * j as f64)
            .collect();
        Self::from_vec_unchecked(coeffs)
    }

    /// Expands `leading * prod (z - root)` by incremental convolution.
    pub fn from_roots(roots: &[ComplexPoint], leading: ComplexPoint) -> Result<Self> {
        if leading == ComplexPoint::new(0.0, 0.0) || !is_finite(leading) {
            return Err(Error::InvalidInput(
                "leading coefficient must be finite and nonzero".into(),
            ));
        }
        check_finite(roots, "roots")?;
        if roots.len() > MAX_EXPANSION_DEGREE {
            return Err(Error::UnsupportedDegree {
                degree: roots.len(),
                max: MAX_EXPANSION_DEGREE,
            });
        }
        let mut coeffs = Vec::with_capacity(roots.len() + 1);
        coeffs.push(leading);
        for &r in roots {
            // multiply by (z - r) in place
            coeffs.push(ComplexPoint::new(0.0, 0.0));
            for j in (0..coeffs.len()).rev() {
                let lower = if j > 0 {
                    coeffs[j - 1]
                } else {
                    ComplexPoint::new(0.0, 0.0)
                };
                coeffs[j] = lower - r * coeffs[j];
            }
        }
        Self::checked(coeffs, roots.len())
    }

    /// Coefficient convolution.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![ComplexPoint::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let degree = out.len() - 1;
        Self::checked(out, degree)
    }

    /// Chebyshev polynomial of the first kind, `T_n(cos t) = cos(n t)`, from
    /// the three-term recurrence.
    pub fn chebyshev_t(n: usize) -> Result<Self> {
        if n > MAX_EXPANSION_DEGREE {
            return Err(Error::UnsupportedDegree {
                degree: n,
                max: MAX_EXPANSION_DEGREE,
            });
        }
        let mut prev = vec![1.0_f64];
        if n == 0 {
            return Self::from_real(&prev);
        }
        let mut cur = vec![0.0, 1.0];
        for _ in 1..n {
            let mut next = vec![0.0; cur.len() + 1];
            for (j, &c) in cur.iter().enumerate() {
                next[j + 1] += 2.0 * c;
            }
            for (j, &c) in prev.iter().enumerate() {
                next[j] -= c;
            }
            prev = std::mem::replace(&mut cur, next);
        }
        Self::from_real(&cur)
    }

    /// Returns `q` with `q(z) = p(a z + b)`. The roots of `q` are `(root - b) / a`.
    pub fn affine_substitute(&self, a: ComplexPoint, b: ComplexPoint) -> Result<Self> {
        if a == ComplexPoint::new(0.0, 0.0) {
            return Err(Error::InvalidSubstitution);
        }
        if !is_finite(a) || !is_finite(b) {
            return Err(Error::InvalidInput(
                "substitution parameters must be finite".into(),
            ));
        }
        let Some(degree) = self.degree() else {
            return Ok(Self::zero());
        };
        // Horner over polynomials: q <- q * (a z + b) + c_j
        let mut q: Vec<ComplexPoint> = Vec::with_capacity(degree + 1);
        for &c in self.coeffs.iter().rev() {
            q.push(ComplexPoint::new(0.0, 0.0));
            for j in (0..q.len()).rev() {
                let shifted = if j > 0 {
                    q[j - 1] * a
                } else {
                    ComplexPoint::new(0.0, 0.0)
                };
                q[j] = shifted + q[j] * b;
            }
            q[0] += c;
        }
        Self::checked(q, degree)
    }
}

/// A complex number carried as `mantissa * 2^exponent`, for products whose
/// magnitude leaves the double range.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledComplex {
    pub mantissa: ComplexPoint,
    pub exponent: i64,
}

impl ScaledComplex {
    const RENORM_ABOVE: f64 = 1.157_920_892_373_162e77; // 2^256
    const RENORM_BELOW: f64 = 8.636_168_555_094_445e-78; // 2^-256

    pub fn new(mantissa: ComplexPoint) -> Self {
        let mut s = Self {
            mantissa,
            exponent: 0,
        };
        s.renormalize();
        s
    }

    fn renormalize(&mut self) {
        let n = self.mantissa.norm();
        if n == 0.0 || !n.is_finite() {
            return;
        }
        if !(Self::RENORM_BELOW..=Self::RENORM_ABOVE).contains(&n) {
            let e = n.log2().floor() as i32;
            self.mantissa *= 2f64.powi(-e);
            self.exponent += i64::from(e);
        }
    }

    pub fn mul(self, z: ComplexPoint) -> Self {
        let mut s = Self {
            mantissa: self.mantissa * z,
            exponent: self.exponent,
        };
        s.renormalize();
        s
    }

    /// `log2 |value|`; `-inf` for zero.
    pub fn log2_norm(&self) -> f64 {
        self.mantissa.norm().log2() + self.exponent as f64
    }

    /// Collapses to an ordinary complex number (may overflow to infinity or
    /// underflow to zero).
    pub fn to_complex(&self) -> ComplexPoint {
        let e = self.exponent.clamp(-2000, 2000) as i32;
        // split the power so neither factor leaves the range prematurely
        let half = e / 2;
        self.mantissa * 2f64.powi(half) * 2f64.powi(e - half)
    }
}

/// Polynomial stored as `leading * prod (z - root_j)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootFactoredPolynomial {
    pub leading: ComplexPoint,
    pub roots: Vec<ComplexPoint>,
}

impl RootFactoredPolynomial {
    pub fn new(leading: ComplexPoint, roots: Vec<ComplexPoint>) -> Result<Self> {
        if leading == ComplexPoint::new(0.0, 0.0) || !is_finite(leading) {
            return Err(Error::InvalidInput(
                "leading coefficient must be finite and nonzero".into(),
            ));
        }
        check_finite(&roots, "roots")?;
        Ok(Self { leading, roots })
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// Product evaluation with a running power-of-two rescaling.
    pub fn evaluate(&self, z: ComplexPoint) -> ScaledComplex {
        self.roots
            .iter()
            .fold(ScaledComplex::new(self.leading), |acc, &r| acc.mul(z - r))
    }

    pub fn to_coefficients(&self) -> Result<CoefficientPolynomial> {
        CoefficientPolynomial::from_roots(&self.roots, self.leading)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> ComplexPoint {
        ComplexPoint::new(re, im)
    }

    fn real_poly(cs: &[f64]) -> CoefficientPolynomial {
        CoefficientPolynomial::from_real(cs).unwrap()
    }

    #[test]
    fn evaluate_small_cases() {
        let p = real_poly(&[-1.0, 0.0, 1.0]);
        assert_eq!(p.evaluate(c(2.0, 0.0)).unwrap(), c(3.0, 0.0));
        assert_eq!(
            CoefficientPolynomial::zero().evaluate(c(5.0, 1.0)).unwrap(),
            c(0.0, 0.0)
        );
    }

    #[test]
    fn evaluate_reports_overflow() {
        let p = real_poly(&[0.0, 0.0, 1e300]);
        assert_eq!(p.evaluate(c(1e10, 0.0)), Err(Error::EvaluationOverflow));
    }

    #[test]
    fn compensated_horner_survives_cancellation() {
        // T_40 has exactly representable coefficients up to ~2e14
        let t = CoefficientPolynomial::chebyshev_t(40).unwrap();
        let mut plain: f64 = 0.0;
        for k in 0..=200 {
            let theta = PI * k as f64 / 200.0;
            let x = c(theta.cos(), 0.0);
            let want = (40.0 * theta).cos();
            assert!((t.eval_compensated(x, false).re - want).abs() <= 1e-10);
            plain = plain.max((t.evaluate(x).unwrap().re - want).abs());
        }
        assert!(plain > 1e-6);
        let r = t.eval_compensated(c(0.5, 0.0), true);
        let direct = c(0.5, 0.0).powi(40) * t.evaluate(c(2.0, 0.0)).unwrap();
        assert!((r - direct).norm() <= 1e-12 * direct.norm());
    }

    #[test]
    fn t30_vanishes_at_first_node() {
        let t = CoefficientPolynomial::chebyshev_t(30).unwrap();
        let v = t.evaluate(c((PI / 60.0).cos(), 0.0)).unwrap();
        assert!(v.norm() / t.max_coeff_norm() <= 1e-9);
    }

    #[test]
    fn root_form_small_cases() {
        let p = RootFactoredPolynomial::new(c(1.0, 0.0), vec![c(1.0, 0.0), c(-1.0, 0.0)]).unwrap();
        assert_eq!(p.evaluate(c(0.0, 0.0)).to_complex(), c(-1.0, 0.0));
        let k = RootFactoredPolynomial::new(c(2.0, 0.0), vec![]).unwrap();
        assert_eq!(k.evaluate(c(7.0, 0.0)).to_complex(), c(2.0, 0.0));
    }

    #[test]
    fn root_form_carries_exponent() {
        let p = RootFactoredPolynomial::new(c(1.0, 0.0), vec![c(0.5, 0.0); 300]).unwrap();
        let v = p.evaluate(c(2.0, 0.0));
        let expected = 300.0 * 1.5f64.log2();
        assert!((v.log2_norm() - expected).abs() < 1e-10);
        assert!((v.to_complex().re / 1.5f64.powi(300) - 1.0).abs() < 1e-12);

        // far outside the double range
        let big = RootFactoredPolynomial::new(c(1.0, 0.0), vec![c(0.0, 0.0); 3000]).unwrap();
        let v = big.evaluate(c(10.0, 0.0));
        assert!((v.log2_norm() - 3000.0 * 10f64.log2()).abs() < 1e-8);
        assert!(v.mantissa.norm().is_finite());
    }

    #[test]
    fn derivative_cases() {
        assert_eq!(
            real_poly(&[-1.0, 0.0, 1.0]).derivative(),
            real_poly(&[0.0, 2.0])
        );
        assert!(real_poly(&[5.0]).derivative().is_zero());
        assert!(CoefficientPolynomial::zero().derivative().is_zero());
    }

    #[test]
    fn chebyshev_derivative_is_n_times_u() {
        // U_4 by its own recurrence, independent of chebyshev_t
        fn u(n: usize, z: ComplexPoint) -> ComplexPoint {
            let (mut a, mut b) = (c(1.0, 0.0), 2.0 * z);
            if n == 0 {
                return a;
            }
            for _ in 1..n {
                let next = 2.0 * z * b - a;
                a = b;
                b = next;
            }
            b
        }
        let dt5 = CoefficientPolynomial::chebyshev_t(5).unwrap().derivative();
        for k in 0..20 {
            let z = c(-1.0 + 0.1 * k as f64, 0.37 * ((k * 7) % 5) as f64 - 0.7);
            let lhs = dt5.evaluate(z).unwrap();
            let rhs = 5.0 * u(4, z);
            assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm().max(1.0));
        }
    }

    #[test]
    fn from_roots_cases() {
        let p =
            CoefficientPolynomial::from_roots(&[c(1.0, 0.0), c(-1.0, 0.0)], c(1.0, 0.0)).unwrap();
        assert_eq!(p, real_poly(&[-1.0, 0.0, 1.0]));
        let k = CoefficientPolynomial::from_roots(&[], c(3.0, 0.0)).unwrap();
        assert_eq!(k, real_poly(&[3.0]));
        assert!(matches!(
            CoefficientPolynomial::from_roots(&[c(0.0, 0.0)], c(0.0, 0.0)),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn from_roots_matches_chebyshev_t30() {
        let nodes: Vec<_> = (1..=30)
            .map(|k| c(((2 * k - 1) as f64 * PI / 60.0).cos(), 0.0))
            .collect();
        let p = CoefficientPolynomial::from_roots(&nodes, c(2f64.powi(29), 0.0)).unwrap();
        let t = CoefficientPolynomial::chebyshev_t(30).unwrap();
        assert_eq!(p.degree(), Some(30));
        for (a, b) in p.coeffs().iter().zip(t.coeffs()) {
            // odd coefficients of T_30 vanish; compare against the overall scale there
            let scale = if b.norm() > 0.0 {
                b.norm()
            } else {
                t.max_coeff_norm()
            };
            assert!((a - b).norm() <= 1e-8 * scale, "{a} vs {b}");
        }
    }

    #[test]
    fn from_roots_overflow_is_reported() {
        let roots = vec![c(1e200, 0.0); 3];
        assert_eq!(
            CoefficientPolynomial::from_roots(&roots, c(1.0, 0.0)),
            Err(Error::CoefficientOverflow { degree: 3 })
        );
        let too_many = vec![c(0.0, 0.0); MAX_EXPANSION_DEGREE + 1];
        assert!(matches!(
            CoefficientPolynomial::from_roots(&too_many, c(1.0, 0.0)),
            Err(Error::UnsupportedDegree { .. })
        ));
    }

    #[test]
    fn multiply_cases() {
        let a = CoefficientPolynomial::linear(c(0.0, 1.0));
        let b = CoefficientPolynomial::linear(c(0.0, -1.0));
        assert_eq!(a.multiply(&b).unwrap(), real_poly(&[1.0, 0.0, 1.0]));
        let one = real_poly(&[1.0]);
        assert_eq!(a.multiply(&one).unwrap(), a);
    }

    #[test]
    fn multiply_is_an_evaluation_homomorphism() {
        let a = CoefficientPolynomial::linear(c(0.0, 1.0));
        let t = CoefficientPolynomial::chebyshev_t(30).unwrap();
        let g = a.multiply(&t).unwrap();
        assert_eq!(g.degree(), Some(31));
        // off the interval [-1, 1], where Horner on T_30 does not cancel
        for k in 0..10 {
            let z = ComplexPoint::from_polar(2.0, 0.61 * k as f64 + 0.2);
            let lhs = g.evaluate(z).unwrap();
            let rhs = a.evaluate(z).unwrap() * t.evaluate(z).unwrap();
            assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm());
        }
    }

    #[test]
    fn chebyshev_cases() {
        assert_eq!(
            CoefficientPolynomial::chebyshev_t(0).unwrap(),
            real_poly(&[1.0])
        );
        assert_eq!(
            CoefficientPolynomial::chebyshev_t(3).unwrap(),
            real_poly(&[0.0, -3.0, 0.0, 4.0])
        );
        let t10 = CoefficientPolynomial::chebyshev_t(10).unwrap();
        let v = t10.evaluate(c(0.3, 0.0)).unwrap();
        assert!((v.re - (10.0 * 0.3f64.acos()).cos()).abs() <= 1e-12);
        assert!(CoefficientPolynomial::chebyshev_t(512).is_ok());
        assert!(matches!(
            CoefficientPolynomial::chebyshev_t(513),
            Err(Error::UnsupportedDegree { degree: 513, .. })
        ));
    }

    #[test]
    fn affine_substitute_cases() {
        let z = real_poly(&[0.0, 1.0]);
        assert_eq!(
            z.affine_substitute(c(1.0, 0.0), c(0.0, 1.0)).unwrap(),
            CoefficientPolynomial::new(vec![c(0.0, 1.0), c(1.0, 0.0)]).unwrap()
        );
        let p = real_poly(&[-1.0, 0.0, 1.0]);
        assert_eq!(p.affine_substitute(c(1.0, 0.0), c(0.0, 0.0)).unwrap(), p);
        assert_eq!(
            p.affine_substitute(c(2.0, 0.0), c(1.0, 0.0)).unwrap(),
            real_poly(&[0.0, 4.0, 4.0])
        );
        assert_eq!(
            p.affine_substitute(c(0.0, 0.0), c(1.0, 0.0)),
            Err(Error::InvalidSubstitution)
        );
    }

    #[test]
    fn json_forms() {
        let p = real_poly(&[-1.0, 0.0, 1.0]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"coeffs":[[-1.0,0.0],[0.0,0.0],[1.0,0.0]]}"#);
        let back: CoefficientPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let trimmed: CoefficientPolynomial =
            serde_json::from_str(r#"{"coeffs":[[1,0],[0,0]]}"#).unwrap();
        assert_eq!(trimmed.degree(), Some(0));

        let r: RootFactoredPolynomial =
            serde_json::from_str(r#"{"leading":[2,0],"roots":[[1,0],[0,-1]]}"#).unwrap();
        assert_eq!(r.degree(), 2);
        assert_eq!(r.leading, c(2.0, 0.0));
    }
}
