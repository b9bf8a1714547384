//! Atomic measures, Cauchy transforms and the norm diagnostics used to watch
//! the outer part of a root-counting measure fade.
//!
//! Area integrals use the normalized measure `dA = dx dy / π`.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::counting::Contour;
use crate::error::{Error, Result};
use crate::geometry::{ConvexDomain, GRAZING_TOL};
use crate::poly::{check_finite, is_finite, ComplexPoint};
use crate::quadrature::gauss_legendre;

/// Poles closer than this to an evaluation point are rejected.
pub const POLE_CLEARANCE: f64 = 1e-13;

/// Circles closer than this to an outer root modulus are degenerate.
pub const RADIUS_CLEARANCE: f64 = 1e-6;

pub const MIN_CIRCLE_NODES: usize = 256;

const MAX_RADIUS_ATTEMPTS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    pub point: ComplexPoint,
    pub weight: f64,
}

/// Finite collection of weighted point masses.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AtomicMeasure {
    atoms: Vec<Atom>,
}

impl AtomicMeasure {
    pub fn new(atoms: Vec<Atom>) -> Result<Self> {
        for (i, a) in atoms.iter().enumerate() {
            if !is_finite(a.point) || !(a.weight > 0.0 && a.weight.is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "atom {i} needs a finite point and positive weight"
                )));
            }
        }
        Ok(Self { atoms })
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.weight).sum()
    }

    /// Same atoms with every weight multiplied by `t > 0`.
    pub fn scaled(&self, t: f64) -> Result<Self> {
        Self::new(
            self.atoms
                .iter()
                .map(|a| Atom {
                    point: a.point,
                    weight: a.weight * t,
                })
                .collect(),
        )
    }

    fn transform_unchecked(&self, z: ComplexPoint) -> ComplexPoint {
        self.atoms.iter().map(|a| a.weight / (z - a.point)).sum()
    }

    fn nearest_atom(&self, z: ComplexPoint) -> (usize, f64) {
        self.atoms
            .iter()
            .enumerate()
            .map(|(i, a)| (i, (z - a.point).norm()))
            .fold(
                (0, f64::INFINITY),
                |best, cur| if cur.1 < best.1 { cur } else { best },
            )
    }
}

/// Mass `1/m` at each of the `m` roots.
pub fn root_counting_measure(roots: &[ComplexPoint]) -> Result<AtomicMeasure> {
    if roots.is_empty() {
        return Err(Error::InvalidInput(
            "root-counting measure of an empty root list".into(),
        ));
    }
    let w = 1.0 / roots.len() as f64;
    AtomicMeasure::new(
        roots
            .iter()
            .map(|&point| Atom { point, weight: w })
            .collect(),
    )
}

/// `μ̂(z) = Σ w_k / (z - a_k)`.
pub fn cauchy_transform(mu: &AtomicMeasure, z: ComplexPoint) -> Result<ComplexPoint> {
    if !is_finite(z) {
        return Err(Error::InvalidInput(
            "evaluation point must be finite".into(),
        ));
    }
    let (_, distance) = mu.nearest_atom(z);
    if distance < POLE_CLEARANCE {
        return Err(Error::Pole { distance });
    }
    Ok(mu.transform_unchecked(z))
}

/// Roots split into those in `Ω_eps` (inner) and the rest (outer).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorSplit {
    pub inner_roots: Vec<ComplexPoint>,
    pub outer_roots: Vec<ComplexPoint>,
    pub k_n: usize,
    pub m_n: usize,
    /// roots within [`GRAZING_TOL`] of `∂Ω_eps`
    pub near_boundary: usize,
}

pub fn split_factor(
    roots: &[ComplexPoint],
    domain: &ConvexDomain,
    eps: f64,
) -> Result<FactorSplit> {
    if !(eps > 0.0) {
        return Err(Error::InvalidInput(format!(
            "eps must be positive, got {eps}"
        )));
    }
    check_finite(roots, "roots")?;
    let (inner_roots, outer_roots): (Vec<_>, Vec<_>) = roots
        .iter()
        .partition(|&&z| domain.in_eps_neighborhood(z, eps));
    let near_boundary = roots
        .iter()
        .filter(|&&z| domain.decision_margin(z, eps) <= GRAZING_TOL)
        .count();
    Ok(FactorSplit {
        k_n: inner_roots.len(),
        m_n: roots.len(),
        inner_roots,
        outer_roots,
        near_boundary,
    })
}

/// The two weighted parts of the root-counting transform.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Decomposition {
    /// `(1/m) Σ_all 1/(z - α)`
    pub total: ComplexPoint,
    /// `(k/m) ν̂(z)`
    pub inner: ComplexPoint,
    /// `((m - k)/m) ψ̂(z)`
    pub outer: ComplexPoint,
}

/// Evaluates the root-counting transform and its inner and outer parts at `z`.
pub fn decompose_transform(split: &FactorSplit, z: ComplexPoint) -> Result<Decomposition> {
    if split.m_n == 0 {
        return Err(Error::InvalidInput("empty split".into()));
    }
    let m = split.m_n as f64;
    let part = |roots: &[ComplexPoint]| -> Result<ComplexPoint> {
        if roots.is_empty() {
            return Ok(ComplexPoint::new(0.0, 0.0));
        }
        let nu = root_counting_measure(roots)?;
        Ok(cauchy_transform(&nu, z)? * (roots.len() as f64 / m))
    };
    let inner = part(&split.inner_roots)?;
    let outer = part(&split.outer_roots)?;
    let all: Vec<ComplexPoint> = split
        .inner_roots
        .iter()
        .chain(&split.outer_roots)
        .copied()
        .collect();
    let total = cauchy_transform(&root_counting_measure(&all)?, z)?;
    Ok(Decomposition {
        total,
        inner,
        outer,
    })
}

/// `(m_n - k_n) / m_n`, the total mass of the outer part.
pub fn outer_mass_ratio(split: &FactorSplit) -> f64 {
    if split.m_n == 0 {
        return 0.0;
    }
    (split.m_n - split.k_n) as f64 / split.m_n as f64
}

fn check_exponent(p: f64) -> Result<()> {
    if (1.0..2.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::UnsupportedExponent { p })
    }
}

/// `∫_{|ξ|<R} |ξ|^{-p} dA = 2 R^{2-p} / (2 - p)`.
pub fn area_bound_constant(p: f64, radius: f64) -> f64 {
    2.0 * radius.powf(2.0 - p) / (2.0 - p)
}

const SUBDIVISIONS: usize = 8;
const POLAR_ANGLES: usize = 32;
const POLAR_RADIAL: usize = 16;

/// Midpoint-rule value of `∫_K |μ̂|^p dA`.
///
/// Cells near an atom or crossing `∂K` are split `8 x 8`. The disk of radius
/// `2 * grid_step` around each atom is integrated in polar coordinates with
/// the radial substitution `r ∝ t^{1/(2-p)}`, which cancels the `r^{-p}`
/// singularity.
pub fn lp_area_norm(mu: &AtomicMeasure, k: &ConvexDomain, p: f64, grid_step: f64) -> Result<f64> {
    check_exponent(p)?;
    if !(grid_step > 0.0 && grid_step.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "grid_step must be positive, got {grid_step}"
        )));
    }
    if mu.atoms.is_empty() {
        return Ok(0.0);
    }
    let (lo, hi) = k.bounding_box();
    let nx = ((hi.re - lo.re) / grid_step).ceil().max(1.0) as usize;
    let ny = ((hi.im - lo.im) / grid_step).ceil().max(1.0) as usize;
    if nx * ny < 100 {
        return Err(Error::InvalidInput(format!(
            "grid_step {grid_step} leaves fewer than 100 cells over the domain"
        )));
    }
    let hx = (hi.re - lo.re) / nx as f64;
    let hy = (hi.im - lo.im) / ny as f64;
    let half_diag = 0.5 * hx.hypot(hy);
    let pole_radius = 2.0 * grid_step;
    let f = |z: ComplexPoint| mu.transform_unchecked(z).norm().powf(p);

    let mut total = 0.0;
    for i in 0..nx {
        for j in 0..ny {
            let mid = lo + ComplexPoint::new((i as f64 + 0.5) * hx, (j as f64 + 0.5) * hy);
            let sd = k.signed_distance(mid);
            if sd > half_diag {
                continue;
            }
            let (_, near) = mu.nearest_atom(mid);
            if sd < -half_diag && near > pole_radius + half_diag {
                total += f(mid) * hx * hy;
                continue;
            }
            let (sx, sy) = (hx / SUBDIVISIONS as f64, hy / SUBDIVISIONS as f64);
            let corner = mid - ComplexPoint::new(0.5 * hx, 0.5 * hy);
            for a in 0..SUBDIVISIONS {
                for b in 0..SUBDIVISIONS {
                    let z =
                        corner + ComplexPoint::new((a as f64 + 0.5) * sx, (b as f64 + 0.5) * sy);
                    if k.signed_distance(z) < 0.0 && mu.nearest_atom(z).1 >= pole_radius {
                        total += f(z) * sx * sy;
                    }
                }
            }
        }
    }

    // polar disks around the atoms; each point belongs to its nearest atom
    let alpha = 1.0 / (2.0 - p);
    let (gx, gw) = gauss_legendre(POLAR_RADIAL);
    let dtheta = 2.0 * PI / POLAR_ANGLES as f64;
    for (idx, atom) in mu.atoms.iter().enumerate() {
        for (x, w) in gx.iter().zip(&gw) {
            let t = 0.5 * (x + 1.0);
            let r = pole_radius * t.powf(alpha);
            let dr = pole_radius * alpha * t.powf(alpha - 1.0) * 0.5 * w;
            for q in 0..POLAR_ANGLES {
                let z = atom.point + ComplexPoint::from_polar(r, (q as f64 + 0.5) * dtheta);
                if k.signed_distance(z) >= 0.0 || mu.nearest_atom(z).0 != idx {
                    continue;
                }
                total += f(z) * r * dr * dtheta;
            }
        }
    }
    Ok(total / PI)
}

fn check_radius(outer: &[ComplexPoint], r: f64) -> Result<()> {
    match outer
        .iter()
        .find(|b| (b.norm() - r).abs() < RADIUS_CLEARANCE)
    {
        Some(_) => Err(Error::DegenerateRadius {
            radius: r,
            clearance: RADIUS_CLEARANCE,
        }),
        None => Ok(()),
    }
}

/// Trapezoidal value of `(1/m_n) ∮_{|z|=r} |Σ_k 1/(z - b_k)|^p ds`.
pub fn lp_circle_norm(
    outer: &[ComplexPoint],
    m_n: usize,
    r: f64,
    p: f64,
    nodes: usize,
) -> Result<f64> {
    check_exponent(p)?;
    check_finite(outer, "outer roots")?;
    if m_n == 0 || !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "need m_n >= 1 and r > 0, got {m_n} / {r}"
        )));
    }
    if nodes < MIN_CIRCLE_NODES {
        return Err(Error::InvalidInput(format!(
            "need at least {MIN_CIRCLE_NODES} nodes, got {nodes}"
        )));
    }
    if outer.is_empty() {
        return Ok(0.0);
    }
    check_radius(outer, r)?;
    let ds = 2.0 * PI * r / nodes as f64;
    let sum: f64 = (0..nodes)
        .map(|k| {
            let z = ComplexPoint::from_polar(r, 2.0 * PI * k as f64 / nodes as f64);
            outer
                .iter()
                .map(|b| (z - b).inv())
                .sum::<ComplexPoint>()
                .norm()
                .powf(p)
        })
        .sum();
    Ok(sum * ds / m_n as f64)
}

/// Offsets tried inside a radius cell, in order.
fn cell_offsets() -> impl Iterator<Item = f64> {
    // van der Corput sequence in base 2, starting from the midpoint
    (1..=MAX_RADIUS_ATTEMPTS as u32).map(|i| {
        let (mut x, mut denom, mut k) = (0.0, 1.0, i);
        while k > 0 {
            denom *= 2.0;
            x += (k & 1) as f64 / denom;
            k >>= 1;
        }
        x
    })
}

/// `count` radii in `(lo, hi)`, one per cell of a uniform grid, starting at
/// the cell midpoints. A radius within [`RADIUS_CLEARANCE`] of an outer root
/// modulus is moved elsewhere in its cell; after ten failed tries the cell is
/// reported as degenerate.
pub fn sample_radii(outer: &[ComplexPoint], lo: f64, hi: f64, count: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && hi > lo) || count == 0 {
        return Err(Error::InvalidInput(format!(
            "bad radius range ({lo}, {hi}) x {count}"
        )));
    }
    let width = (hi - lo) / count as f64;
    (0..count)
        .map(|j| {
            cell_offsets()
                .map(|off| lo + (j as f64 + off) * width)
                .find(|&r| check_radius(outer, r).is_ok())
                .ok_or(Error::DegenerateRadius {
                    radius: lo + (j as f64 + 0.5) * width,
                    clearance: RADIUS_CLEARANCE,
                })
        })
        .collect()
}

/// Nudges a requested radius off the outer root moduli: `r`, then
/// `r ± k * 10 * RADIUS_CLEARANCE`, at most ten candidates.
pub fn resolve_radius(outer: &[ComplexPoint], r: f64) -> Result<f64> {
    (0..MAX_RADIUS_ATTEMPTS)
        .map(|i| {
            let k = i.div_ceil(2) as f64;
            let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
            r + sign * k * 10.0 * RADIUS_CLEARANCE
        })
        .find(|&c| check_radius(outer, c).is_ok())
        .ok_or(Error::DegenerateRadius {
            radius: r,
            clearance: RADIUS_CLEARANCE,
        })
}

/// Sampled maximum of `|(1/m_n) Σ 1/(z - b_k)|` over the closure of `Ω_eps`:
/// a grid of step `grid_step` together with the boundary sampled at the same
/// arclength step.
pub fn sup_grid_norm_diff(
    outer: &[ComplexPoint],
    m_n: usize,
    domain: &ConvexDomain,
    eps: f64,
    grid_step: f64,
) -> Result<f64> {
    check_finite(outer, "outer roots")?;
    if m_n == 0 || !(eps > 0.0) || !(grid_step > 0.0 && grid_step.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "need m_n >= 1, eps > 0, grid_step > 0; got {m_n} / {eps} / {grid_step}"
        )));
    }
    if let Some(b) = outer.iter().find(|&&b| domain.distance_to(b) <= eps) {
        return Err(Error::AnalyticityViolated {
            distance: domain.distance_to(*b),
            eps,
        });
    }
    if outer.is_empty() {
        return Ok(0.0);
    }
    let g = |z: ComplexPoint| {
        outer
            .iter()
            .map(|b| (z - b).inv())
            .sum::<ComplexPoint>()
            .norm()
            / m_n as f64
    };
    let (lo, hi) = domain.bounding_box();
    let pad = ComplexPoint::new(eps, eps);
    let (lo, hi) = (lo - pad, hi + pad);
    let nx = ((hi.re - lo.re) / grid_step).ceil() as usize;
    let ny = ((hi.im - lo.im) / grid_step).ceil() as usize;
    let mut best: f64 = 0.0;
    for i in 0..=nx {
        for j in 0..=ny {
            let z = lo + ComplexPoint::new(i as f64 * grid_step, j as f64 * grid_step);
            if domain.distance_to(z) <= eps {
                best = best.max(g(z));
            }
        }
    }
    for z in Contour::offset_boundary(domain, eps).sample(grid_step) {
        best = best.max(g(z));
    }
    Ok(best)
}

/// Parameters echoed with each diagnostic value.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticParameters {
    pub r: Option<f64>,
    pub p: Option<f64>,
    pub eps: f64,
    pub nodes: Option<usize>,
}

/// One diagnostic value for one member of a sequence.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticRecord {
    pub n: usize,
    pub m_n: usize,
    pub k_n: usize,
    pub quantity_name: String,
    pub value: f64,
    pub parameters: DiagnosticParameters,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexPoint {
        ComplexPoint::new(re, im)
    }

    fn delta(z: ComplexPoint, w: f64) -> AtomicMeasure {
        AtomicMeasure::new(vec![Atom {
            point: z,
            weight: w,
        }])
        .unwrap()
    }

    #[test]
    fn root_counting_cases() {
        let mu = root_counting_measure(&[c(0.0, 0.0)]).unwrap();
        assert_eq!(
            mu.atoms(),
            &[Atom {
                point: c(0.0, 0.0),
                weight: 1.0
            }]
        );
        let mu = root_counting_measure(&[c(1.0, 0.0), c(-1.0, 0.0)]).unwrap();
        assert!(mu.atoms().iter().all(|a| a.weight == 0.5));
        let roots: Vec<_> = (0..31).map(|k| c(k as f64 * 0.1, 0.0)).collect();
        assert!((root_counting_measure(&roots).unwrap().total_mass() - 1.0).abs() < 1e-14);
        assert!(root_counting_measure(&[]).is_err());
    }

    #[test]
    fn cauchy_transform_cases() {
        assert_eq!(
            cauchy_transform(&delta(c(0.0, 0.0), 1.0), c(2.0, 0.0)).unwrap(),
            c(0.5, 0.0)
        );
        let mu = root_counting_measure(&[c(1.0, 0.0), c(-1.0, 0.0)]).unwrap();
        assert_eq!(cauchy_transform(&mu, c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert!(matches!(
            cauchy_transform(&mu, c(1.0, 0.0)),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn split_cases() {
        let d = ConvexDomain::unit_disk();
        let s = split_factor(&[c(0.0, 0.0), c(3.0, 0.0)], &d, 0.5).unwrap();
        assert_eq!(s.inner_roots, vec![c(0.0, 0.0)]);
        assert_eq!(s.outer_roots, vec![c(3.0, 0.0)]);
        assert_eq!((s.k_n, s.m_n), (1, 2));
        let s = split_factor(&[c(0.1, 0.0), c(0.0, 0.2)], &d, 0.5).unwrap();
        assert!(s.outer_roots.is_empty() && s.k_n == s.m_n);
        assert_eq!(outer_mass_ratio(&s), 0.0);
        // exactly at distance eps goes to outer, and is flagged
        let s = split_factor(&[c(1.5, 0.0)], &d, 0.5).unwrap();
        assert_eq!(s.outer_roots.len(), 1);
        assert_eq!(s.near_boundary, 1);
    }

    #[test]
    fn outer_mass_ratio_for_one_outlier() {
        let s = FactorSplit {
            inner_roots: vec![c(0.0, 0.0); 30],
            outer_roots: vec![c(5.0, 0.0)],
            k_n: 30,
            m_n: 31,
            near_boundary: 0,
        };
        assert_eq!(outer_mass_ratio(&s), 1.0 / 31.0);
    }

    #[test]
    fn sqrt_schedule_ratio_decreases() {
        let mut last = f64::INFINITY;
        for m in [25usize, 50, 100, 200, 400] {
            let outer = (m as f64).sqrt().ceil() as usize;
            let s = FactorSplit {
                inner_roots: vec![c(0.0, 0.0); m - outer],
                outer_roots: vec![c(5.0, 0.0); outer],
                k_n: m - outer,
                m_n: m,
                near_boundary: 0,
            };
            let r = outer_mass_ratio(&s);
            assert!((r * (m as f64).sqrt() - 1.0).abs() < 0.2);
            assert!(r < last);
            last = r;
        }
    }

    #[test]
    fn lp_area_of_point_mass() {
        let v = lp_area_norm(
            &delta(c(0.0, 0.0), 1.0),
            &ConvexDomain::unit_disk(),
            1.0,
            0.02,
        )
        .unwrap();
        assert!((v - 2.0).abs() <= 0.02 * 2.0, "{v}");
        // p = 1.5: (1/π) 2π ∫_0^1 r^{-0.5} dr = 4
        let v = lp_area_norm(
            &delta(c(0.0, 0.0), 1.0),
            &ConvexDomain::unit_disk(),
            1.5,
            0.02,
        )
        .unwrap();
        assert!((v - 4.0).abs() <= 0.02 * 4.0, "{v}");
    }

    #[test]
    fn lp_area_homogeneity() {
        let mu = AtomicMeasure::new(vec![
            Atom {
                point: c(0.3, 0.2),
                weight: 0.4,
            },
            Atom {
                point: c(-1.5, 0.5),
                weight: 0.6,
            },
        ])
        .unwrap();
        let k = ConvexDomain::unit_disk();
        for p in [1.0, 1.5] {
            let full = lp_area_norm(&mu, &k, p, 0.05).unwrap();
            let half = lp_area_norm(&mu.scaled(0.5).unwrap(), &k, p, 0.05).unwrap();
            assert!((half / full - 0.5f64.powf(p)).abs() < 1e-12);
        }
    }

    #[test]
    fn lp_area_rejects_bad_input() {
        let mu = delta(c(0.0, 0.0), 1.0);
        let k = ConvexDomain::unit_disk();
        assert!(matches!(
            lp_area_norm(&mu, &k, 2.0, 0.05),
            Err(Error::UnsupportedExponent { .. })
        ));
        assert!(matches!(
            lp_area_norm(&mu, &k, 0.5, 0.05),
            Err(Error::UnsupportedExponent { .. })
        ));
        assert!(lp_area_norm(&mu, &k, 1.0, 0.5).is_err());
    }

    #[test]
    fn lp_area_of_single_outer_pole_scales_like_one_over_m() {
        let k = ConvexDomain::unit_disk();
        let b = c(0.0, 1.3);
        let at = |m: usize| lp_area_norm(&delta(b, 1.0 / m as f64), &k, 1.0, 0.02).unwrap();
        let (v50, v100) = (at(51), at(101));
        assert!(v100 <= 0.5 * v50 * 1.25, "{v50} {v100}");
    }

    #[test]
    fn circle_norm_matches_dense_reference() {
        let outer = [c(3.0, 0.0)];
        let v = lp_circle_norm(&outer, 10, 1.0, 1.0, 1024).unwrap();
        // independent dense trapezoid of ∫_0^{2π} 1/|e^{iθ} - 3| dθ
        let n = 8192;
        let reference: f64 = (0..n)
            .map(|k| {
                let th = 2.0 * PI * k as f64 / n as f64;
                1.0 / (ComplexPoint::from_polar(1.0, th) - 3.0).norm()
            })
            .sum::<f64>()
            * (2.0 * PI / n as f64)
            / 10.0;
        assert!((v - reference).abs() <= 0.01 * reference);
        assert_eq!(lp_circle_norm(&[], 10, 1.0, 1.0, 1024).unwrap(), 0.0);
        assert!(lp_circle_norm(&outer, 10, 1.0, 1.0, 128).is_err());
        assert!(matches!(
            lp_circle_norm(&outer, 10, 3.0 + 1e-8, 1.0, 1024),
            Err(Error::DegenerateRadius { .. })
        ));
    }

    #[test]
    fn circle_norm_self_converges() {
        let outer = [c(1.3, 0.4), c(-0.2, 1.6)];
        for p in [1.0, 1.5] {
            let a = lp_circle_norm(&outer, 40, 1.1, p, 2048).unwrap();
            let b = lp_circle_norm(&outer, 40, 1.1, p, 4096).unwrap();
            assert!((a - b).abs() <= 0.005 * b);
        }
    }

    #[test]
    fn radius_sampling_avoids_outer_moduli() {
        let radii = sample_radii(&[c(1.15, 0.0)], 1.1, 1.2, 1).unwrap();
        assert_eq!(radii.len(), 1);
        assert!((radii[0] - 1.15).abs() >= RADIUS_CLEARANCE);
        assert_eq!(
            sample_radii(&[], 1.0, 2.0, 4).unwrap(),
            vec![1.125, 1.375, 1.625, 1.875]
        );
        let r = resolve_radius(&[c(0.0, 1.1)], 1.1).unwrap();
        assert!((r - 1.1).abs() >= RADIUS_CLEARANCE && (r - 1.1).abs() < 1e-4);
        assert_eq!(resolve_radius(&[], 1.1).unwrap(), 1.1);
    }

    #[test]
    fn sup_norm_of_single_pole() {
        let d = ConvexDomain::unit_disk();
        assert_eq!(sup_grid_norm_diff(&[], 10, &d, 0.1, 0.01).unwrap(), 0.0);
        let b = c(0.0, 2.0);
        // distance from b to the closure of Ω_0.1 is 0.9
        let v = sup_grid_norm_diff(&[b], 10, &d, 0.1, 0.01).unwrap();
        let exact = 1.0 / (10.0 * 0.9);
        assert!((v - exact).abs() <= 0.05 * exact);
        let sq = ConvexDomain::rectangle(-2.0, 2.0, -4.0, 0.0).unwrap();
        let v = sup_grid_norm_diff(&[c(0.5, 1.0)], 31, &sq, 0.05, 0.01).unwrap();
        let exact = 1.0 / (31.0 * 0.95);
        assert!((v - exact).abs() <= 0.05 * exact);
        assert!(matches!(
            sup_grid_norm_diff(&[c(1.05, 0.0)], 10, &d, 0.1, 0.01),
            Err(Error::AnalyticityViolated { .. })
        ));
    }

    #[test]
    fn decomposition_adds_up() {
        let roots = [c(0.1, 0.2), c(-0.5, 0.3), c(2.5, 0.0), c(0.0, -3.0)];
        let split = split_factor(&roots, &ConvexDomain::unit_disk(), 0.2).unwrap();
        let d = decompose_transform(&split, c(0.7, -0.4)).unwrap();
        assert!((d.total - (d.inner + d.outer)).norm() <= 1e-14 * d.total.norm());
    }
}
