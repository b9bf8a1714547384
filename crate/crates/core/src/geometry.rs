//! Bounded convex domains, their ε-neighborhoods, and convex hulls.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::poly::{check_finite, is_finite, ComplexPoint};

/// Zeros within this distance of a counting boundary are reported as grazing.
pub const GRAZING_TOL: f64 = 1e-9;

const COLLINEAR_SLACK: f64 = 1e-12;

/// A bounded convex region with nonempty interior. Domains are open sets.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DomainWire", into = "DomainWire")]
pub enum ConvexDomain {
    Disk {
        center: ComplexPoint,
        radius: f64,
    },
    /// Counterclockwise vertices.
    Polygon {
        vertices: Vec<ComplexPoint>,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum DomainWire {
    Disk { center: ComplexPoint, radius: f64 },
    Polygon { vertices: Vec<ComplexPoint> },
}

impl TryFrom<DomainWire> for ConvexDomain {
    type Error = Error;

    fn try_from(w: DomainWire) -> Result<Self> {
        match w {
            DomainWire::Disk { center, radius } => Self::disk(center, radius),
            DomainWire::Polygon { vertices } => Self::polygon(vertices),
        }
    }
}

impl From<ConvexDomain> for DomainWire {
    fn from(d: ConvexDomain) -> Self {
        match d {
            ConvexDomain::Disk { center, radius } => DomainWire::Disk { center, radius },
            ConvexDomain::Polygon { vertices } => DomainWire::Polygon { vertices },
        }
    }
}

fn cross(a: ComplexPoint, b: ComplexPoint) -> f64 {
    a.re * b.im - a.im * b.re
}

fn segment_distance(a: ComplexPoint, b: ComplexPoint, z: ComplexPoint) -> f64 {
    let e = b - a;
    let len2 = e.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = (((z - a) * e.conj()).re / len2).clamp(0.0, 1.0);
    (z - (a + e * t)).norm()
}

/// Signed distance to the boundary of a convex counterclockwise polygon:
/// negative inside, zero on the boundary, positive outside.
fn polygon_signed_distance(vertices: &[ComplexPoint], z: ComplexPoint) -> f64 {
    let n = vertices.len();
    let edges = || (0..n).map(|i| (vertices[i], vertices[(i + 1) % n]));
    let mut inside_depth = f64::NEG_INFINITY;
    let mut outside = false;
    for (a, b) in edges() {
        let e = b - a;
        let s = -cross(e, z - a) / e.norm();
        if s >= 0.0 {
            outside = true;
            break;
        }
        inside_depth = inside_depth.max(s);
    }
    if outside {
        edges()
            .map(|(a, b)| segment_distance(a, b, z))
            .fold(f64::INFINITY, f64::min)
    } else {
        inside_depth
    }
}

impl ConvexDomain {
    pub fn disk(center: ComplexPoint, radius: f64) -> Result<Self> {
        if !is_finite(center) || !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidDomain(format!(
                "disk needs a finite center and positive radius, got {center} / {radius}"
            )));
        }
        Ok(Self::Disk { center, radius })
    }

    pub fn unit_disk() -> Self {
        Self::Disk {
            center: ComplexPoint::new(0.0, 0.0),
            radius: 1.0,
        }
    }

    /// Validates a convex polygon given by counterclockwise vertices.
    pub fn polygon(vertices: Vec<ComplexPoint>) -> Result<Self> {
        check_finite(&vertices, "vertices").map_err(|e| Error::InvalidDomain(e.to_string()))?;
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidDomain(format!(
                "polygon needs at least 3 vertices, got {n}"
            )));
        }
        let scale = vertices.iter().map(|v| v.norm()).fold(1.0, f64::max);
        let mut turning = 0.0;
        for i in 0..n {
            let e0 = vertices[(i + 1) % n] - vertices[i];
            let e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
            if e0.norm() == 0.0 {
                return Err(Error::InvalidDomain(format!(
                    "repeated vertex at index {i}"
                )));
            }
            if cross(e0, e1) < -COLLINEAR_SLACK * scale * scale {
                return Err(Error::InvalidDomain(format!(
                    "polygon is not convex and counterclockwise at vertex {}",
                    (i + 1) % n
                )));
            }
            turning += (e1 / e0).arg();
        }
        let area2: f64 = (0..n)
            .map(|i| cross(vertices[i], vertices[(i + 1) % n]))
            .sum();
        if area2 <= 0.0 || (turning - 2.0 * PI).abs() > 1e-6 {
            return Err(Error::InvalidDomain(
                "polygon must be simple, counterclockwise, with positive area".into(),
            ));
        }
        Ok(Self::Polygon { vertices })
    }

    /// The open rectangle `(x0, x1) x (y0, y1)`.
    pub fn rectangle(x0: f64, x1: f64, y0: f64, y1: f64) -> Result<Self> {
        if !(x0 < x1 && y0 < y1) {
            return Err(Error::InvalidDomain(
                "rectangle bounds must be increasing".into(),
            ));
        }
        Self::polygon(vec![
            ComplexPoint::new(x0, y0),
            ComplexPoint::new(x1, y0),
            ComplexPoint::new(x1, y1),
            ComplexPoint::new(x0, y1),
        ])
    }

    /// Negative inside, zero on the boundary, positive outside.
    pub fn signed_distance(&self, z: ComplexPoint) -> f64 {
        match self {
            Self::Disk { center, radius } => (z - center).norm() - radius,
            Self::Polygon { vertices } => polygon_signed_distance(vertices, z),
        }
    }

    /// Membership in the open domain shrunk by `boundary_tol` (grown when
    /// negative): signed distance `< -boundary_tol`.
    pub fn contains(&self, z: ComplexPoint, boundary_tol: f64) -> bool {
        self.signed_distance(z) < -boundary_tol
    }

    /// Euclidean distance to the closure; 0 inside.
    pub fn distance_to(&self, z: ComplexPoint) -> f64 {
        self.signed_distance(z).max(0.0)
    }

    /// Membership in the open ε-neighborhood. For disks this is exactly
    /// membership in the disk of radius `radius + eps`.
    pub fn in_eps_neighborhood(&self, z: ComplexPoint, eps: f64) -> bool {
        match self {
            Self::Disk { center, radius } => (z - center).norm() < radius + eps,
            Self::Polygon { .. } => self.distance_to(z) < eps,
        }
    }

    /// Distance from `z` to the membership decision boundary used for
    /// counting with the given `eps` (`eps = 0` counts in the domain itself).
    pub fn decision_margin(&self, z: ComplexPoint, eps: f64) -> f64 {
        if eps > 0.0 {
            match self {
                Self::Disk { center, radius } => ((z - center).norm() - (radius + eps)).abs(),
                Self::Polygon { .. } => (self.signed_distance(z) - eps).abs(),
            }
        } else {
            self.signed_distance(z).abs()
        }
    }

    /// Axis-aligned bounding box as (lower-left, upper-right).
    pub fn bounding_box(&self) -> (ComplexPoint, ComplexPoint) {
        match self {
            Self::Disk { center, radius } => (
                center - ComplexPoint::new(*radius, *radius),
                center + ComplexPoint::new(*radius, *radius),
            ),
            Self::Polygon { vertices } => {
                let (mut lo, mut hi) = (vertices[0], vertices[0]);
                for v in vertices {
                    lo = ComplexPoint::new(lo.re.min(v.re), lo.im.min(v.im));
                    hi = ComplexPoint::new(hi.re.max(v.re), hi.im.max(v.im));
                }
                (lo, hi)
            }
        }
    }
}

/// Counterclockwise convex hull. One vertex for a single point, two for a
/// segment.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HullResult {
    pub vertices: Vec<ComplexPoint>,
}

/// Andrew's monotone chain. Collinear boundary points are not vertices.
pub fn convex_hull(points: &[ComplexPoint]) -> Result<HullResult> {
    if points.is_empty() {
        return Err(Error::InvalidInput(
            "convex hull of an empty point set".into(),
        ));
    }
    check_finite(points, "points")?;
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup();
    if pts.len() < 3 {
        return Ok(HullResult { vertices: pts });
    }
    let mut hull: Vec<ComplexPoint> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &ComplexPoint>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2
                && cross(
                    hull[hull.len() - 1] - hull[hull.len() - 2],
                    p - hull[hull.len() - 2],
                ) <= 0.0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    if hull.len() < 3 {
        // all input points collinear: keep the two extremes
        hull = vec![pts[0], pts[pts.len() - 1]];
    }
    Ok(HullResult { vertices: hull })
}

impl HullResult {
    /// Signed distance to the closed hull (negative strictly inside a
    /// two-dimensional hull).
    pub fn signed_distance(&self, z: ComplexPoint) -> f64 {
        match self.vertices.as_slice() {
            [] => f64::INFINITY,
            [v] => (z - v).norm(),
            [a, b] => segment_distance(*a, *b, z),
            vs => polygon_signed_distance(vs, z),
        }
    }

    /// True iff `z` is within `tol` of the closed hull.
    pub fn contains(&self, z: ComplexPoint, tol: f64) -> bool {
        self.signed_distance(z) <= tol
    }
}

/// Free-function form of [`HullResult::contains`].
pub fn hull_contains(h: &HullResult, z: ComplexPoint, tol: f64) -> bool {
    h.contains(z, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexPoint {
        ComplexPoint::new(re, im)
    }

    fn unit_square() -> ConvexDomain {
        ConvexDomain::rectangle(0.0, 1.0, 0.0, 1.0).unwrap()
    }

    #[test]
    fn contains_cases() {
        let d = ConvexDomain::unit_disk();
        assert!(d.contains(c(0.0, 0.0), 0.0));
        assert!(!d.contains(c(1.0, 0.0), 0.0));
        let o = ConvexDomain::rectangle(-2.0, 2.0, -4.0, 0.0).unwrap();
        assert!(o.contains(c(0.0, -1.0), 0.0));
        assert!(!o.contains(c(0.0, 0.0), 0.0));
        assert!(!o.contains(c(0.5, 1e-12), 0.0));
        assert!(o.contains(c(0.5, -1e-12), 0.0));
        // positive tolerance shrinks, negative grows
        assert!(!d.contains(c(0.95, 0.0), 0.1));
        assert!(d.contains(c(1.05, 0.0), -0.1));
    }

    #[test]
    fn distance_cases() {
        assert_eq!(ConvexDomain::unit_disk().distance_to(c(2.0, 0.0)), 1.0);
        assert_eq!(unit_square().distance_to(c(2.0, 0.5)), 1.0);
        assert!((unit_square().distance_to(c(2.0, 2.0)) - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(unit_square().distance_to(c(0.5, 0.5)), 0.0);
        assert!((unit_square().signed_distance(c(0.5, 0.25)) + 0.25).abs() < 1e-15);
    }

    #[test]
    fn eps_neighborhood_cases() {
        let d = ConvexDomain::unit_disk();
        assert!(d.in_eps_neighborhood(c(1.05, 0.0), 0.1));
        assert!(!d.in_eps_neighborhood(c(1.1, 0.0), 0.1));
        let o = ConvexDomain::rectangle(-2.0, 2.0, -4.0, 0.0).unwrap();
        // a point just above the top edge, 1e-3 away
        assert!(o.in_eps_neighborhood(c(0.5, 1e-3), 0.01));
        assert!(!o.in_eps_neighborhood(c(0.5, 0.02), 0.01));
    }

    #[test]
    fn invalid_domains() {
        assert!(ConvexDomain::disk(c(0.0, 0.0), 0.0).is_err());
        assert!(ConvexDomain::disk(c(f64::NAN, 0.0), 1.0).is_err());
        // clockwise
        assert!(ConvexDomain::polygon(vec![c(0.0, 0.0), c(0.0, 1.0), c(1.0, 0.0)]).is_err());
        // non-convex
        assert!(
            ConvexDomain::polygon(vec![c(0.0, 0.0), c(2.0, 0.0), c(1.0, 0.2), c(1.0, 2.0)])
                .is_err()
        );
        assert!(ConvexDomain::polygon(vec![c(0.0, 0.0), c(1.0, 0.0)]).is_err());
        // collinear middle vertex is tolerated
        assert!(
            ConvexDomain::polygon(vec![c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(1.0, 1.0)]).is_ok()
        );
    }

    #[test]
    fn domain_json() {
        let d: ConvexDomain =
            serde_json::from_str(r#"{"disk":{"center":[0,0],"radius":1}}"#).unwrap();
        assert_eq!(d, ConvexDomain::unit_disk());
        let p: ConvexDomain =
            serde_json::from_str(r#"{"polygon":{"vertices":[[0,0],[1,0],[1,1],[0,1]]}}"#).unwrap();
        assert_eq!(p, unit_square());
        assert_eq!(
            serde_json::to_string(&ConvexDomain::unit_disk()).unwrap(),
            r#"{"disk":{"center":[0.0,0.0],"radius":1.0}}"#
        );
        assert!(
            serde_json::from_str::<ConvexDomain>(r#"{"disk":{"center":[0,0],"radius":-1}}"#)
                .is_err()
        );
    }

    #[test]
    fn hull_cases() {
        let h = convex_hull(&[c(0.0, 0.0)]).unwrap();
        assert_eq!(h.vertices, vec![c(0.0, 0.0)]);
        assert!(hull_contains(&h, c(0.0, 0.0), 0.0));

        let tri = convex_hull(&[c(-1.0, 0.0), c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        assert_eq!(tri.vertices.len(), 3);
        for v in [c(-1.0, 0.0), c(1.0, 0.0), c(0.0, 1.0)] {
            assert!(tri.vertices.contains(&v));
        }
        assert!(!hull_contains(&tri, c(0.0, -1.0), 0.0));

        let seg = convex_hull(&[c(-1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!(hull_contains(&seg, c(0.0, 0.0), 0.0));
        assert!(!hull_contains(&seg, c(0.0, 0.1), 0.0));
        assert!(hull_contains(&seg, c(0.0, 0.1), 0.1));

        let collinear = convex_hull(&[c(0.0, 0.0), c(1.0, 1.0), c(2.0, 2.0), c(0.5, 0.5)]).unwrap();
        assert_eq!(collinear.vertices, vec![c(0.0, 0.0), c(2.0, 2.0)]);

        let square = convex_hull(&[
            c(0.0, 0.0),
            c(1.0, 0.0),
            c(1.0, 1.0),
            c(0.0, 1.0),
            c(0.5, 0.0),
            c(0.5, 0.5),
        ])
        .unwrap();
        assert_eq!(square.vertices.len(), 4);
        assert!(hull_contains(&square, c(0.5, 0.0), 0.0));
        assert!(convex_hull(&[]).is_err());
    }
}
