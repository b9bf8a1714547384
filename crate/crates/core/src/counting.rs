//! Zero counts in domains and their ε-neighborhoods, ratio reports, and an
//! argument-principle counter that does not depend on the root finder.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{convex_hull, ConvexDomain, GRAZING_TOL};
use crate::poly::{is_finite, CoefficientPolynomial, ComplexPoint};
use crate::quadrature::gauss_legendre;

pub const DEFAULT_NODES_PER_UNIT: usize = 512;

/// Winding numbers must land this close to an integer.
pub const WINDING_TOL: f64 = 1e-3;

/// Zeros closer than this to the contour make the count ill-posed.
pub const CONTOUR_CLEARANCE: f64 = 1e-6;

const PANEL_NODES: usize = 16;

/// One piece of a closed counterclockwise contour.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ContourPiece {
    Segment {
        a: ComplexPoint,
        b: ComplexPoint,
    },
    Arc {
        center: ComplexPoint,
        radius: f64,
        start: f64,
        sweep: f64,
    },
}

impl ContourPiece {
    pub fn length(&self) -> f64 {
        match *self {
            Self::Segment { a, b } => (b - a).norm(),
            Self::Arc { radius, sweep, .. } => radius * sweep,
        }
    }

    /// Point and unit-speed tangent at arclength fraction `t` in `[0, 1]`.
    fn at(&self, t: f64) -> (ComplexPoint, ComplexPoint) {
        match *self {
            Self::Segment { a, b } => {
                let e = b - a;
                (a + e * t, e / e.norm())
            }
            Self::Arc {
                center,
                radius,
                start,
                sweep,
            } => {
                let dir = ComplexPoint::from_polar(1.0, start + sweep * t);
                (center + dir * radius, dir * ComplexPoint::new(0.0, 1.0))
            }
        }
    }

    fn is_full_circle(&self) -> bool {
        matches!(*self, Self::Arc { sweep, .. } if (sweep - 2.0 * PI).abs() < 1e-15)
    }
}

/// Closed counterclockwise contour: the level set `{z : dist(z, Ω) = t}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Contour {
    pub pieces: Vec<ContourPiece>,
}

impl Contour {
    /// Boundary of `Ω_t`. For `t = 0` this is `∂Ω`; for polygons with `t > 0`
    /// the edges are pushed out by `t` and joined by circular corner arcs.
    pub fn offset_boundary(domain: &ConvexDomain, t: f64) -> Self {
        let t = t.max(0.0);
        let pieces = match domain {
            ConvexDomain::Disk { center, radius } => vec![ContourPiece::Arc {
                center: *center,
                radius: radius + t,
                start: 0.0,
                sweep: 2.0 * PI,
            }],
            ConvexDomain::Polygon { vertices } => {
                let n = vertices.len();
                let normal = |i: usize| {
                    let e = vertices[(i + 1) % n] - vertices[i];
                    ComplexPoint::new(e.im, -e.re) / e.norm()
                };
                let mut pieces = Vec::with_capacity(2 * n);
                for i in 0..n {
                    let (a, b) = (vertices[i], vertices[(i + 1) % n]);
                    let nv = normal(i);
                    pieces.push(ContourPiece::Segment {
                        a: a + nv * t,
                        b: b + nv * t,
                    });
                    if t > 0.0 {
                        let next = normal((i + 1) % n);
                        let sweep = (next / nv).arg();
                        if sweep > 0.0 {
                            pieces.push(ContourPiece::Arc {
                                center: b,
                                radius: t,
                                start: nv.arg(),
                                sweep,
                            });
                        }
                    }
                }
                pieces
            }
        };
        Self { pieces }
    }

    pub fn length(&self) -> f64 {
        self.pieces.iter().map(ContourPiece::length).sum()
    }

    /// Quadrature nodes `(z_k, dz_k)` for `∮ f dz ≈ Σ f(z_k) dz_k`. Full
    /// circles use the trapezoidal rule; other pieces use 16-point
    /// Gauss–Legendre panels.
    pub fn quadrature(&self, nodes_per_unit: usize) -> Vec<(ComplexPoint, ComplexPoint)> {
        let npu = nodes_per_unit.max(1) as f64;
        let (gx, gw) = gauss_legendre(PANEL_NODES);
        let mut out = Vec::new();
        for piece in &self.pieces {
            let len = piece.length();
            if len == 0.0 {
                continue;
            }
            if piece.is_full_circle() {
                let n = ((len * npu).ceil() as usize).max(16);
                for k in 0..n {
                    let (z, tangent) = piece.at(k as f64 / n as f64);
                    out.push((z, tangent * (len / n as f64)));
                }
            } else {
                let panels = ((len * npu / PANEL_NODES as f64).ceil() as usize).max(1);
                let h = 1.0 / panels as f64;
                for j in 0..panels {
                    for (x, w) in gx.iter().zip(&gw) {
                        let t = h * (j as f64 + 0.5 * (x + 1.0));
                        let (z, tangent) = piece.at(t);
                        out.push((z, tangent * (0.5 * w * h * len)));
                    }
                }
            }
        }
        out
    }

    /// Points spaced at most `step` apart in arclength, including every
    /// piece's endpoints.
    pub fn sample(&self, step: f64) -> Vec<ComplexPoint> {
        let mut out = Vec::new();
        for piece in &self.pieces {
            let n = ((piece.length() / step).ceil() as usize).max(1);
            for k in 0..=n {
                out.push(piece.at(k as f64 / n as f64).0);
            }
        }
        out
    }
}

/// Result of a membership count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroCount {
    pub count: usize,
    /// points within [`GRAZING_TOL`] of the decision boundary
    pub grazing: usize,
}

/// Counts points in `Ω` (`eps = 0`) or in the open neighborhood `Ω_eps`.
pub fn count_in(points: &[ComplexPoint], domain: &ConvexDomain, eps: f64) -> ZeroCount {
    let eps = if eps > 0.0 { eps } else { 0.0 };
    let mut count = 0;
    let mut grazing = 0;
    for &z in points {
        let inside = if eps > 0.0 {
            domain.in_eps_neighborhood(z, eps)
        } else {
            domain.contains(z, 0.0)
        };
        count += usize::from(inside);
        grazing += usize::from(domain.decision_margin(z, eps) <= GRAZING_TOL);
    }
    ZeroCount { count, grazing }
}

/// Winding-number count and the quadrature diagnostics behind it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WindingCount {
    pub count: i64,
    /// `(1/2πi) ∮ p'/p dz` before rounding
    pub raw: ComplexPoint,
    /// distance of `raw` from the returned integer
    pub residual: f64,
    pub nodes_used: usize,
}

fn winding_integral(
    p: &CoefficientPolynomial,
    contour: &Contour,
    npu: usize,
) -> Result<(ComplexPoint, usize)> {
    let degree = p.degree().unwrap_or(0) as f64;
    let nodes = contour.quadrature(npu);
    let mut total = ComplexPoint::new(0.0, 0.0);
    for &(z, dz) in &nodes {
        let l = p.log_derivative(z);
        // |p'/p| <= deg / dist(z, zeros), so a large value pins a zero nearby
        if !is_finite(l) || degree / l.norm() < CONTOUR_CLEARANCE {
            return Err(Error::ContourTooClose {
                clearance: CONTOUR_CLEARANCE,
            });
        }
        total += l * dz;
    }
    Ok((total / ComplexPoint::new(0.0, 2.0 * PI), nodes.len()))
}

/// Zero count of `p` inside `∂Ω_eps` by the argument principle. A failed
/// integer check is retried once with four times the nodes.
pub fn argument_principle_count(
    p: &CoefficientPolynomial,
    domain: &ConvexDomain,
    eps: f64,
    nodes_per_unit: usize,
) -> Result<WindingCount> {
    if p.is_zero() {
        return Err(Error::InvalidInput(
            "argument principle needs a nonzero polynomial".into(),
        ));
    }
    if nodes_per_unit == 0 {
        return Err(Error::InvalidInput(
            "nodes_per_unit must be positive".into(),
        ));
    }
    let contour = Contour::offset_boundary(domain, eps);
    let mut last = None;
    for npu in [nodes_per_unit, 4 * nodes_per_unit] {
        let (raw, nodes_used) = winding_integral(p, &contour, npu)?;
        let count = raw.re.round();
        let residual = (raw - ComplexPoint::new(count, 0.0)).norm();
        if residual <= WINDING_TOL {
            return Ok(WindingCount {
                count: count as i64,
                raw,
                residual,
                nodes_used,
            });
        }
        last = Some(raw);
    }
    Err(Error::NonIntegerWinding {
        value: last.map_or(f64::NAN, |r| r.re),
        tolerance: WINDING_TOL,
    })
}

/// Zero counts for one member of a polynomial sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    /// zeros of `p_n` in Ω
    pub p_in: usize,
    /// zeros of `p_n'` in Ω
    pub dp_in: usize,
    /// zeros of `p_n'` in Ω_ε
    pub dp_in_eps: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Ratios {
    /// `dp_in / (m_n - 1)`
    pub problem: f64,
    /// `dp_in_eps / (m_n - 1)`
    pub theorem: f64,
}

/// Per-degree record of zero counts and the two derivative ratios.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub n: usize,
    pub m_n: usize,
    pub counts: Counts,
    pub ratios: Ratios,
    /// zeros within [`GRAZING_TOL`] of any counting boundary
    pub grazing: usize,
}

impl RatioReport {
    pub const CSV_HEADER: &'static str = "n,m_n,p_in,dp_in,dp_in_eps,problem,theorem,grazing";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            self.m_n,
            self.counts.p_in,
            self.counts.dp_in,
            self.counts.dp_in_eps,
            self.ratios.problem,
            self.ratios.theorem,
            self.grazing
        )
    }
}

pub fn ratio_report(
    p_roots: &[ComplexPoint],
    dp_roots: &[ComplexPoint],
    domain: &ConvexDomain,
    eps: f64,
    n: usize,
) -> Result<RatioReport> {
    let m_n = p_roots.len();
    if m_n < 2 {
        return Err(Error::InvalidInput(format!(
            "ratio report needs degree >= 2, got {m_n}"
        )));
    }
    if dp_roots.len() != m_n - 1 {
        return Err(Error::InvalidInput(format!(
            "expected {} derivative zeros, got {}",
            m_n - 1,
            dp_roots.len()
        )));
    }
    if !(eps > 0.0) {
        return Err(Error::InvalidInput(format!(
            "eps must be positive, got {eps}"
        )));
    }
    let p_in = count_in(p_roots, domain, 0.0);
    let dp_in = count_in(dp_roots, domain, 0.0);
    let dp_in_eps = count_in(dp_roots, domain, eps);
    let denom = (m_n - 1) as f64;
    Ok(RatioReport {
        n,
        m_n,
        counts: Counts {
            p_in: p_in.count,
            dp_in: dp_in.count,
            dp_in_eps: dp_in_eps.count,
        },
        ratios: Ratios {
            problem: dp_in.count as f64 / denom,
            theorem: dp_in_eps.count as f64 / denom,
        },
        grazing: p_in.grazing + dp_in.grazing + dp_in_eps.grazing,
    })
}

/// Shortfall `max(0, k_n - 1 - dp_in_eps)` of derivative zeros near Ω
/// relative to the `k_n - 1` critical points of the inner factor.
pub fn hurwitz_deficit(report: &RatioReport, k_n: usize) -> usize {
    k_n.saturating_sub(1)
        .saturating_sub(report.counts.dp_in_eps)
}

/// Every derivative zero lies in the convex hull of the zeros, grown by `tol`.
pub fn gauss_lucas_check(p_roots: &[ComplexPoint], dp_roots: &[ComplexPoint], tol: f64) -> bool {
    if p_roots.is_empty() {
        return dp_roots.is_empty();
    }
    match convex_hull(p_roots) {
        Ok(hull) => dp_roots.iter().all(|&w| hull.contains(w, tol)),
        Err(_) => false,
    }
}
