#![allow(dead_code)]

use num_bigint::BigInt;
use polyhull_core::model::{integer, RawConstraint, RawRelation};
use polyhull_core::{
    optimize, ConstraintSystem, Direction, LpOutcome, Polyhedron, Rational, RationalPoint,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let den = rng.gen_range(1..=3);
    Rational::new(
        BigInt::from(rng.gen_range(-bound * den..=bound * den)),
        BigInt::from(den),
    )
}

pub fn random_point(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> RationalPoint {
    RationalPoint((0..n).map(|_| small_rational(rng, bound)).collect())
}

/// A point of `sys` picked by maximizing a random objective, if the LP is
/// bounded.
pub fn lp_point(sys: &ConstraintSystem, rng: &mut ChaCha8Rng) -> Option<RationalPoint> {
    let obj: Vec<Rational> = (0..sys.dim())
        .map(|_| integer(rng.gen_range(-3..=3)))
        .collect();
    match optimize(sys, &obj, Direction::Max).unwrap() {
        LpOutcome::Optimal { witness, .. } => Some(witness),
        _ => None,
    }
}

/// Points of `p`: LP vertices, midpoints between them and, if the set is
/// unbounded, nothing further.
pub fn points_in(p: &Polyhedron, rng: &mut ChaCha8Rng, count: usize) -> Vec<RationalPoint> {
    let Some(sys) = p.system() else {
        return Vec::new();
    };
    let mut pts: Vec<RationalPoint> = (0..count).filter_map(|_| lp_point(sys, rng)).collect();
    let half = Rational::new(1.into(), 2.into());
    let k = pts.len();
    for i in 1..k {
        let mid: Vec<Rational> = pts[i - 1]
            .iter()
            .zip(pts[i].iter())
            .map(|(a, b)| (a + b) * &half)
            .collect();
        pts.push(RationalPoint(mid));
    }
    pts
}

pub fn unit_row(n: usize, j: usize, rel: RawRelation, v: Rational) -> RawConstraint {
    let mut a = vec![integer(0); n];
    a[j] = integer(1);
    RawConstraint::new(a, rel, v)
}

pub fn random_halfspace(rng: &mut ChaCha8Rng, n: usize) -> RawConstraint {
    let a = (0..n).map(|_| integer(rng.gen_range(-4..=4))).collect();
    RawConstraint::new(a, RawRelation::Le, integer(rng.gen_range(-12..=12)))
}
