#![allow(dead_code)]

use lucaslab::ComplexPoint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> ComplexPoint {
    ComplexPoint::new(re, im)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform in the disk `|z| < radius` via the square-root radial law.
pub fn uniform_disk(rng: &mut ChaCha8Rng, radius: f64) -> ComplexPoint {
    let r = radius * rng.gen::<f64>().sqrt();
    ComplexPoint::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
}

/// `count` points in the disk with pairwise separation at least `sep`.
pub fn separated_points(
    rng: &mut ChaCha8Rng,
    count: usize,
    radius: f64,
    sep: f64,
) -> Vec<ComplexPoint> {
    let mut pts: Vec<ComplexPoint> = Vec::with_capacity(count);
    while pts.len() < count {
        let z = uniform_disk(rng, radius);
        if pts.iter().all(|w| (z - w).norm() >= sep) {
            pts.push(z);
        }
    }
    pts
}

/// Hausdorff distance between two finite point sets.
pub fn hausdorff(a: &[ComplexPoint], b: &[ComplexPoint]) -> f64 {
    let one_way = |x: &[ComplexPoint], y: &[ComplexPoint]| {
        x.iter()
            .map(|p| {
                y.iter()
                    .map(|q| (p - q).norm())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}

/// Greedy one-to-one matching distance; equals the multiset distance when
/// the points are well separated relative to the errors.
pub fn matching_distance(a: &[ComplexPoint], b: &[ComplexPoint]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut used = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for p in a {
        let (k, d) = b
            .iter()
            .enumerate()
            .filter(|(k, _)| !used[*k])
            .map(|(k, q)| (k, (p - q).norm()))
            .min_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        used[k] = true;
        worst = worst.max(d);
    }
    worst
}
