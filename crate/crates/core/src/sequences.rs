//! Polynomial sequences: the Chebyshev counterexample and its strictly
//! convex variant, the two figure polynomials, and seeded random sequences
//! with a controlled number of outlying zeros.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::ConvexDomain;
use crate::poly::{CoefficientPolynomial, ComplexPoint};
use crate::rootfind::{self, RootSolveResult, DEFAULT_MAX_ITER, DEFAULT_TOL};

/// ε used to cap the counterexample shift `a_n` at `ε/2`.
pub const DEFAULT_COUNTEREXAMPLE_EPS: f64 = 0.05;

const MAX_REJECTION_DRAWS: usize = 10_000_000;

/// The open rectangle `(-2, 2) x (-4, 0)` of the Chebyshev counterexample.
pub fn counterexample_rectangle() -> ConvexDomain {
    ConvexDomain::rectangle(-2.0, 2.0, -4.0, 0.0).expect("static rectangle is valid")
}

/// The square with vertices `(±1, ±1)`.
pub fn figure2_square() -> ConvexDomain {
    ConvexDomain::rectangle(-1.0, 1.0, -1.0, 1.0).expect("static square is valid")
}

/// `cos((2k - 1) π / (2n))` for `k = 1..n`.
pub fn chebyshev_nodes(n: usize) -> Vec<ComplexPoint> {
    (1..=n)
        .map(|k| ComplexPoint::new(((2 * k - 1) as f64 * PI / (2 * n) as f64).cos(), 0.0))
        .collect()
}

/// Construction details carried with every instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceMetadata {
    pub kind: String,
    /// domain the construction targets
    pub domain: ConvexDomain,
    /// zeros placed in the domain by construction
    pub inner_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scale: Option<f64>,
    /// upward translation applied after scaling
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertical_offset: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// One member of a polynomial sequence, with its zeros known by construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratedInstance {
    pub n: usize,
    pub p: CoefficientPolynomial,
    pub roots: Vec<ComplexPoint>,
    pub a_n: Option<f64>,
    pub metadata: InstanceMetadata,
}

impl GeneratedInstance {
    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// Zeros of `p'`, solved from the known zeros of `p`.
    pub fn derivative_zeros(&self) -> Result<RootSolveResult> {
        rootfind::critical_points(&self.roots, DEFAULT_TOL, DEFAULT_MAX_ITER)
    }
}

/// Critical points of `(z - i) T_n(z)`, solved from its zeros.
pub fn chebyshev_product_critical_points(n: usize) -> Result<RootSolveResult> {
    let mut roots = chebyshev_nodes(n);
    roots.push(ComplexPoint::new(0.0, 1.0));
    rootfind::critical_points(&roots, DEFAULT_TOL, DEFAULT_MAX_ITER)
}

/// [`chebyshev_counterexample_capped`] with `a_n <= DEFAULT_COUNTEREXAMPLE_EPS / 2`.
pub fn chebyshev_counterexample(n: usize) -> Result<GeneratedInstance> {
    chebyshev_counterexample_capped(n, DEFAULT_COUNTEREXAMPLE_EPS)
}

/// `p(z) = g(z + i a_n)` with `g = (z - i) T_n`, where `a_n` is half the
/// smallest imaginary part among the critical points of `g` (capped at
/// `eps / 2`). The `n` real zeros of `T_n` move into the open rectangle
/// below the real axis while every critical point stays above it.
pub fn chebyshev_counterexample_capped(n: usize, eps: f64) -> Result<GeneratedInstance> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "counterexample needs n >= 2, got {n}"
        )));
    }
    if !(eps > 0.0) {
        return Err(Error::InvalidInput(format!(
            "eps must be positive, got {eps}"
        )));
    }
    let crit = chebyshev_product_critical_points(n)?;
    if !crit.converged {
        return Err(Error::ConstructionInvariant(format!(
            "critical points of (z - i) T_{n} did not converge"
        )));
    }
    let min_im = crit
        .roots
        .iter()
        .map(|w| w.im)
        .fold(f64::INFINITY, f64::min);
    if !(min_im > 0.0) {
        return Err(Error::ConstructionInvariant(format!(
            "critical point of (z - i) T_{n} with imaginary part {min_im} <= 0"
        )));
    }
    let a_n = (0.5 * min_im).min(0.5 * eps);
    let i = ComplexPoint::new(0.0, 1.0);
    let g = CoefficientPolynomial::linear(i).multiply(&CoefficientPolynomial::chebyshev_t(n)?)?;
    let p = g.affine_substitute(ComplexPoint::new(1.0, 0.0), i * a_n)?;
    let mut roots: Vec<ComplexPoint> = chebyshev_nodes(n)
        .into_iter()
        .map(|x| x - i * a_n)
        .collect();
    roots.push(i * (1.0 - a_n));
    Ok(GeneratedInstance {
        n,
        p,
        roots,
        a_n: Some(a_n),
        metadata: InstanceMetadata {
            kind: "chebyshev_counterexample".into(),
            domain: counterexample_rectangle(),
            inner_count: n,
            scale: None,
            vertical_offset: None,
            seed: None,
        },
    })
}

/// `z / scale + shift` for every root.
pub fn scale_and_translate(
    roots: &[ComplexPoint],
    scale: f64,
    shift: ComplexPoint,
) -> Vec<ComplexPoint> {
    roots.iter().map(|&r| r / scale + shift).collect()
}

/// The Chebyshev counterexample pushed into the unit disk: zeros are mapped
/// by `z -> z / M + i sqrt(1 - 1/M^2)`, so `[-1, 1]` lands on a chord of the
/// unit circle and the shifted zeros sit `a_n / M` below it.
///
/// With `M > 2 n^2` the critical points land above the circular cap and
/// outside the disk.
pub fn strict_convex_counterexample(n: usize, scale: f64) -> Result<GeneratedInstance> {
    if !(scale >= 2.0 && scale.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "scale must be >= 2, got {scale}"
        )));
    }
    let base = chebyshev_counterexample(n)?;
    let height = (1.0 - 1.0 / (scale * scale)).sqrt();
    let roots = scale_and_translate(&base.roots, scale, ComplexPoint::new(0.0, height));
    let disk = ConvexDomain::unit_disk();
    if let Some(k) = roots[..n].iter().position(|&z| !disk.contains(z, 0.0)) {
        return Err(Error::ConstructionInvariant(format!(
            "scaled zero {k} = {} is not inside the unit disk",
            roots[k]
        )));
    }
    let p = CoefficientPolynomial::from_roots(&roots, ComplexPoint::new(1.0, 0.0))?;
    Ok(GeneratedInstance {
        n,
        p,
        roots,
        a_n: base.a_n,
        metadata: InstanceMetadata {
            kind: "strict_convex_counterexample".into(),
            domain: disk,
            inner_count: n,
            scale: Some(scale),
            vertical_offset: Some(height),
            seed: None,
        },
    })
}

fn uniform_in_box(rng: &mut ChaCha8Rng, lo: ComplexPoint, hi: ComplexPoint) -> ComplexPoint {
    ComplexPoint::new(rng.gen_range(lo.re..hi.re), rng.gen_range(lo.im..hi.im))
}

/// `n` zeros: `n - outlier_count` uniform in `domain`, then `outlier_count`
/// uniform in the shell `{inner <= dist(z, domain) <= outer}`. Both are
/// rejection-sampled from bounding boxes with ChaCha8 seeded by `seed`.
pub fn random_outlier_sequence(
    n: usize,
    domain: &ConvexDomain,
    outlier_count: usize,
    shell: (f64, f64),
    seed: u64,
) -> Result<GeneratedInstance> {
    let (inner, outer) = shell;
    if !(inner >= 0.0 && outer > inner && outer.is_finite()) {
        return Err(Error::InvalidShell(format!(
            "need 0 <= inner < outer, got ({inner}, {outer})"
        )));
    }
    if n == 0 || outlier_count >= n {
        return Err(Error::InvalidInput(format!(
            "need 0 <= outlier_count < n, got {outlier_count} of {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = domain.bounding_box();
    let mut draw = |lo: ComplexPoint, hi: ComplexPoint, accept: &dyn Fn(ComplexPoint) -> bool| {
        for _ in 0..MAX_REJECTION_DRAWS {
            let z = uniform_in_box(&mut rng, lo, hi);
            if accept(z) {
                return Ok(z);
            }
        }
        Err(Error::InvalidShell(
            "rejection sampling found no admissible point".into(),
        ))
    };
    let mut roots = Vec::with_capacity(n);
    for _ in 0..n - outlier_count {
        roots.push(draw(lo, hi, &|z| domain.contains(z, 0.0))?);
    }
    let pad = ComplexPoint::new(outer, outer);
    for _ in 0..outlier_count {
        roots.push(draw(lo - pad, hi + pad, &|z| {
            let d = domain.distance_to(z);
            inner <= d && d <= outer
        })?);
    }
    let p = CoefficientPolynomial::from_roots(&roots, ComplexPoint::new(1.0, 0.0))?;
    Ok(GeneratedInstance {
        n,
        p,
        roots,
        a_n: None,
        metadata: InstanceMetadata {
            kind: "random_outlier".into(),
            domain: domain.clone(),
            inner_count: n - outlier_count,
            scale: None,
            vertical_offset: None,
            seed: Some(seed),
        },
    })
}

fn c(re: f64, im: f64) -> ComplexPoint {
    ComplexPoint::new(re, im)
}

/// `(z^10 - 1)(z - 3 + 2i)(z + 3 - 2i)(z - 1 + 5i)(z + 5)`.
pub fn figure2_left() -> Result<GeneratedInstance> {
    let mut base = vec![c(0.0, 0.0); 11];
    base[0] = c(-1.0, 0.0);
    base[10] = c(1.0, 0.0);
    let extra = [c(3.0, -2.0), c(-3.0, 2.0), c(1.0, -5.0), c(-5.0, 0.0)];
    let mut p = CoefficientPolynomial::new(base)?;
    for &r in &extra {
        p = p.multiply(&CoefficientPolynomial::linear(r))?;
    }
    let mut roots: Vec<ComplexPoint> = (0..10)
        .map(|k| ComplexPoint::from_polar(1.0, 2.0 * PI * k as f64 / 10.0))
        .collect();
    roots.extend_from_slice(&extra);
    Ok(GeneratedInstance {
        n: 14,
        p,
        roots,
        a_n: None,
        metadata: InstanceMetadata {
            kind: "figure2_left".into(),
            domain: ConvexDomain::disk(c(0.0, 0.0), 1.01)?,
            inner_count: 10,
            scale: None,
            vertical_offset: None,
            seed: None,
        },
    })
}

/// Seven equispaced zeros strictly inside each side of the square with
/// vertices `(±1, ±1)` (corners excluded), times
/// `(z - 3)(z + 2 - 2i)(z - 1 + i)(z + 2)`.
pub fn figure2_right() -> Result<GeneratedInstance> {
    let mut roots = Vec::with_capacity(32);
    for k in 1..=7 {
        let t = -1.0 + k as f64 / 4.0;
        roots.push(c(t, -1.0));
        roots.push(c(1.0, t));
        roots.push(c(-t, 1.0));
        roots.push(c(-1.0, -t));
    }
    roots.extend_from_slice(&[c(3.0, 0.0), c(-2.0, 2.0), c(1.0, -1.0), c(-2.0, 0.0)]);
    let p = CoefficientPolynomial::from_roots(&roots, c(1.0, 0.0))?;
    Ok(GeneratedInstance {
        n: 32,
        p,
        roots,
        a_n: None,
        metadata: InstanceMetadata {
            kind: "figure2_right".into(),
            domain: figure2_square(),
            inner_count: 28,
            scale: None,
            vertical_offset: None,
            seed: None,
        },
    })
}

/// How `M_n` grows with `n` in the strictly convex counterexample.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScaleSchedule {
    /// `M_n = c`
    Constant(f64),
    /// `M_n = c n^2`
    Quadratic(f64),
}

impl ScaleSchedule {
    pub fn at(&self, n: usize) -> f64 {
        match *self {
            Self::Constant(c) => c,
            Self::Quadratic(c) => c * (n * n) as f64,
        }
    }
}

/// Number of outlying zeros as a function of the degree.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutlierSchedule {
    /// `ceil(sqrt(n))`
    Sqrt,
    Fixed(usize),
    /// `ceil(f n)`
    Fraction(f64),
}

impl OutlierSchedule {
    pub fn at(&self, n: usize) -> usize {
        match *self {
            Self::Sqrt => (n as f64).sqrt().ceil() as usize,
            Self::Fixed(k) => k,
            Self::Fraction(f) => (f * n as f64).ceil() as usize,
        }
    }
}

fn default_eps() -> f64 {
    DEFAULT_COUNTEREXAMPLE_EPS
}

fn default_shell() -> (f64, f64) {
    (0.5, 1.5)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SequenceKind {
    ChebyshevCounterexample {
        #[serde(default = "default_eps")]
        eps: f64,
    },
    StrictConvexCounterexample {
        scale: ScaleSchedule,
    },
    RandomOutlier {
        domain: ConvexDomain,
        outliers: OutlierSchedule,
        #[serde(default = "default_shell")]
        shell: (f64, f64),
        #[serde(default)]
        seed: u64,
    },
    Figure2Left,
    Figure2Right,
}

/// A sequence family plus the degrees `n` to generate.
///
/// JSON: `{"kind": "random_outlier", "domain": {...}, "outliers": "sqrt",
/// "seed": 7, "n_values": [25, 50]}`; ranges use `n_min`/`n_max` instead.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SequenceSpec {
    #[serde(flatten)]
    pub kind: SequenceKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_min: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_values: Option<Vec<usize>>,
}

/// Per-degree seed: a fixed mix of the base seed and `n`.
pub fn instance_seed(seed: u64, n: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (n as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9)
}

impl SequenceSpec {
    pub fn new(kind: SequenceKind, n_min: usize, n_max: usize) -> Self {
        Self {
            kind,
            n_min: Some(n_min),
            n_max: Some(n_max),
            n_values: None,
        }
    }

    /// The degrees to generate, ascending. Figure kinds have a single member.
    pub fn ns(&self) -> Result<Vec<usize>> {
        match self.kind {
            SequenceKind::Figure2Left => return Ok(vec![14]),
            SequenceKind::Figure2Right => return Ok(vec![32]),
            _ => {}
        }
        let mut ns = match (&self.n_values, self.n_min, self.n_max) {
            (Some(v), _, _) => v.clone(),
            (None, Some(lo), Some(hi)) if lo <= hi => (lo..=hi).collect(),
            _ => {
                return Err(Error::InvalidInput(
                    "sequence needs n_values or n_min <= n_max".into(),
                ))
            }
        };
        ns.sort_unstable();
        ns.dedup();
        if ns.is_empty() {
            return Err(Error::InvalidInput("empty n range".into()));
        }
        Ok(ns)
    }

    /// Domain the family targets.
    pub fn domain(&self) -> ConvexDomain {
        match &self.kind {
            SequenceKind::ChebyshevCounterexample { .. } => counterexample_rectangle(),
            SequenceKind::StrictConvexCounterexample { .. } => ConvexDomain::unit_disk(),
            SequenceKind::RandomOutlier { domain, .. } => domain.clone(),
            SequenceKind::Figure2Left => ConvexDomain::Disk {
                center: c(0.0, 0.0),
                radius: 1.01,
            },
            SequenceKind::Figure2Right => figure2_square(),
        }
    }

    pub fn instance(&self, n: usize) -> Result<GeneratedInstance> {
        match &self.kind {
            SequenceKind::ChebyshevCounterexample { eps } => {
                chebyshev_counterexample_capped(n, *eps)
            }
            SequenceKind::StrictConvexCounterexample { scale } => {
                strict_convex_counterexample(n, scale.at(n))
            }
            SequenceKind::RandomOutlier {
                domain,
                outliers,
                shell,
                seed,
            } => {
                random_outlier_sequence(n, domain, outliers.at(n), *shell, instance_seed(*seed, n))
            }
            SequenceKind::Figure2Left => figure2_left(),
            SequenceKind::Figure2Right => figure2_right(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_in;

    #[test]
    fn counterexample_n2_by_quadratic_formula() {
        // g = (z - i)(2z^2 - 1) = 2z^3 - 2i z^2 - z + i, g' = 6z^2 - 4i z - 1
        let disc = ComplexPoint::new(0.0, -4.0).powi(2) + 24.0;
        let crit = [
            (ComplexPoint::new(0.0, 4.0) + disc.sqrt()) / 12.0,
            (ComplexPoint::new(0.0, 4.0) - disc.sqrt()) / 12.0,
        ];
        let min_im = crit.iter().map(|w| w.im).fold(f64::INFINITY, f64::min);
        assert!(min_im > 0.0);
        let inst = chebyshev_counterexample(2).unwrap();
        assert!((inst.a_n.unwrap() - (0.5 * min_im).min(0.025)).abs() < 1e-15);
        let o = counterexample_rectangle();
        assert_eq!(count_in(&inst.roots, &o, 0.0).count, 2);
        let dp = inst.derivative_zeros().unwrap();
        assert_eq!(count_in(&dp.roots, &o, 0.0).count, 0);
    }

    #[test]
    fn counterexample_shape() {
        let inst = chebyshev_counterexample(30).unwrap();
        assert_eq!(inst.degree(), 31);
        assert_eq!(inst.p.degree(), Some(31));
        let o = counterexample_rectangle();
        assert_eq!(count_in(&inst.roots, &o, 0.0).count, 30);
        // coefficient form agrees with the zeros up to the leading scalar
        let lead = inst.p.leading().unwrap();
        let rebuilt = CoefficientPolynomial::from_roots(&inst.roots, lead).unwrap();
        let scale = inst.p.max_coeff_norm();
        for (a, b) in inst.p.coeffs().iter().zip(rebuilt.coeffs()) {
            assert!((a - b).norm() <= 1e-9 * scale);
        }
        assert!(chebyshev_counterexample(1).is_err());
    }

    #[test]
    fn strict_convex_geometry() {
        let inst = strict_convex_counterexample(30, 10.0).unwrap();
        let disk = ConvexDomain::unit_disk();
        assert!(inst.roots[..30].iter().all(|&z| disk.contains(z, 0.0)));
        assert!(!disk.contains(inst.roots[30], 0.0));
        let dp = inst.derivative_zeros().unwrap();
        assert!(count_in(&dp.roots, &disk, 0.0).count < 30);

        let depth = |m: f64| {
            strict_convex_counterexample(30, m).unwrap().roots[..30]
                .iter()
                .map(|z| disk.distance_to(*z).max(-disk.signed_distance(*z)))
                .fold(0.0, f64::max)
        };
        assert!(depth(100.0) < depth(10.0));
        assert!(depth(100.0) < 1e-4);
        assert!(strict_convex_counterexample(30, 1.5).is_err());
    }

    #[test]
    fn strict_convex_with_large_scale_has_no_critical_points_in_disk() {
        let n = 4;
        let inst = strict_convex_counterexample(n, 4.0 * (n * n) as f64).unwrap();
        let dp = inst.derivative_zeros().unwrap();
        assert!(dp.converged);
        assert_eq!(
            count_in(&dp.roots, &ConvexDomain::unit_disk(), 0.0).count,
            0
        );
        assert_eq!(
            count_in(&inst.roots, &ConvexDomain::unit_disk(), 0.0).count,
            n
        );
    }

    #[test]
    fn scale_without_translation_is_plain_scaling() {
        let roots = chebyshev_nodes(7);
        let mapped = scale_and_translate(&roots, 10.0, c(0.0, 0.0));
        for (a, b) in roots.iter().zip(&mapped) {
            assert_eq!(a / 10.0, *b);
        }
    }

    #[test]
    fn random_outliers_are_reproducible_and_placed() {
        let d = ConvexDomain::unit_disk();
        let a = random_outlier_sequence(50, &d, 8, (0.5, 1.5), 42).unwrap();
        let b = random_outlier_sequence(50, &d, 8, (0.5, 1.5), 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(count_in(&a.roots, &d, 0.0).count, 42);
        for z in &a.roots[42..] {
            let dist = d.distance_to(*z);
            assert!((0.5..=1.5).contains(&dist));
        }
        let other = random_outlier_sequence(50, &d, 8, (0.5, 1.5), 43).unwrap();
        assert_ne!(a.roots, other.roots);
    }

    #[test]
    fn random_outlier_errors() {
        let d = ConvexDomain::unit_disk();
        assert!(matches!(
            random_outlier_sequence(10, &d, 2, (1.0, 0.5), 0),
            Err(Error::InvalidShell(_))
        ));
        assert!(matches!(
            random_outlier_sequence(10, &d, 2, (-0.1, 0.5), 0),
            Err(Error::InvalidShell(_))
        ));
        assert!(random_outlier_sequence(10, &d, 10, (0.5, 1.0), 0).is_err());
    }

    #[test]
    fn no_outliers_keeps_critical_points_near_domain() {
        let d = ConvexDomain::unit_disk();
        let inst = random_outlier_sequence(40, &d, 0, (0.5, 1.5), 3).unwrap();
        let dp = inst.derivative_zeros().unwrap();
        assert_eq!(count_in(&dp.roots, &d, 0.1).count, 39);
    }

    #[test]
    fn figure2_left_instance() {
        let f = figure2_left().unwrap();
        assert_eq!(f.p.degree(), Some(14));
        assert_eq!(f.roots.len(), 14);
        assert_eq!(f.p.evaluate(c(1.0, 0.0)).unwrap(), c(0.0, 0.0));
        for r in &f.roots {
            assert!(f.p.evaluate(*r).unwrap().norm() < 1e-8 * f.p.max_coeff_norm());
        }
    }

    #[test]
    fn figure2_right_instance() {
        let f = figure2_right().unwrap();
        assert_eq!(f.p.degree(), Some(32));
        assert!(f.roots.contains(&c(-0.75, -1.0)));
        let bottom: Vec<_> = (1..=7).map(|k| c(-1.0 + k as f64 / 4.0, -1.0)).collect();
        assert!(bottom.iter().all(|z| f.roots.contains(z)));
        let sq = figure2_square();
        let in_open = count_in(&f.roots[..28], &sq, 0.0);
        assert_eq!(
            in_open,
            crate::counting::ZeroCount {
                count: 0,
                grazing: 28
            }
        );
        assert_eq!(count_in(&f.roots[..28], &sq, 0.1).count, 28);
    }

    #[test]
    fn spec_json_and_ranges() {
        let s: SequenceSpec = serde_json::from_str(
            r#"{"kind":"random_outlier","domain":{"disk":{"center":[0,0],"radius":1}},
                "outliers":"sqrt","seed":7,"n_values":[100,25,50]}"#,
        )
        .unwrap();
        assert_eq!(s.ns().unwrap(), vec![25, 50, 100]);
        let s: SequenceSpec =
            serde_json::from_str(r#"{"kind":"chebyshev_counterexample","n_min":2,"n_max":5}"#)
                .unwrap();
        assert_eq!(s.ns().unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(s.kind, SequenceKind::ChebyshevCounterexample { eps: 0.05 });
        let s: SequenceSpec =
            serde_json::from_str(r#"{"kind":"strict_convex_counterexample","scale":{"quadratic":4},"n_min":3,"n_max":3}"#)
                .unwrap();
        assert_eq!(s.instance(3).unwrap().metadata.scale, Some(36.0));
        let bad: SequenceSpec =
            serde_json::from_str(r#"{"kind":"chebyshev_counterexample","n_min":5,"n_max":2}"#)
                .unwrap();
        assert!(bad.ns().is_err());
        let fig: SequenceSpec = serde_json::from_str(r#"{"kind":"figure2_left"}"#).unwrap();
        assert_eq!(fig.ns().unwrap(), vec![14]);
        assert_eq!(OutlierSchedule::Sqrt.at(200), 15);
    }
}
