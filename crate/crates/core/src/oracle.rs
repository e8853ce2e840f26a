//! Instance generators and brute-force checkers.
//!
//! Nothing here goes through projection or the hull relaxation, so these can
//! be used to cross-check them.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lp::{is_satisfiable, optimize, Direction, LpOutcome};
use crate::model::{
    integer, ConstraintSystem, LinearConstraint, Normalized, Polyhedron, Rational, RationalPoint,
    RawConstraint, RawRelation, Relation, VarOrder,
};
use crate::{Error, Result};

/// Rejection-sampling budget of [`random_polyhedron`].
pub const MAX_ATTEMPTS: usize = 1000;

/// The two simplices `{Σ -xᵢ <= 1, xⱼ <= 0}` and `{Σ xᵢ <= 1, -xⱼ <= 0}`
/// over `x1..xn`, whose hull is the `n`-dimensional cross polytope.
///
/// Panics if `n` is zero.
pub fn cross_polytope_pair(n: usize) -> (Polyhedron, Polyhedron) {
    assert!(n >= 1, "cross polytope needs at least one dimension");
    let vars = VarOrder::numbered("x", n);
    let build = |sign: i64| {
        let mut rows = Vec::with_capacity(n + 1);
        rows.push(RawConstraint::ints(
            &alloc::vec![sign; n],
            RawRelation::Le,
            1,
        ));
        for j in 0..n {
            let mut a = alloc::vec![0; n];
            a[j] = -sign;
            rows.push(RawConstraint::ints(&a, RawRelation::Le, 0));
        }
        Polyhedron::from_raw(vars.clone(), &rows).expect("well-formed rows")
    };
    (build(-1), build(1))
}

/// A uniform product grid: every coordinate runs from `lo` to `hi` in steps
/// of `step`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub lo: Rational,
    pub hi: Rational,
    pub step: Rational,
}

impl GridSpec {
    /// Panics unless `lo <= hi` and `step > 0`.
    pub fn new(lo: Rational, hi: Rational, step: Rational) -> Self {
        assert!(lo <= hi, "empty grid range");
        assert!(step.is_positive(), "grid step must be positive");
        GridSpec { lo, hi, step }
    }

    pub fn ints(lo: i64, hi: i64) -> Self {
        GridSpec::new(integer(lo), integer(hi), integer(1))
    }

    fn axis(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        let mut v = self.lo.clone();
        while v <= self.hi {
            out.push(v.clone());
            v += &self.step;
        }
        out
    }
}

/// Every point of the `n`-dimensional grid, last coordinate varying fastest.
pub fn grid_points(g: &GridSpec, n: usize) -> impl Iterator<Item = RationalPoint> {
    let axis = g.axis();
    let mut idx = alloc::vec![0usize; n];
    let mut done = axis.is_empty();
    core::iter::from_fn(move || {
        if done {
            return None;
        }
        let p = RationalPoint(idx.iter().map(|&i| axis[i].clone()).collect());
        // advance the odometer
        done = true;
        for k in (0..n).rev() {
            idx[k] += 1;
            if idx[k] < axis.len() {
                done = false;
                break;
            }
            idx[k] = 0;
        }
        Some(p)
    })
}

/// Deterministic satisfiable system over `x1..xn` with `m` random rows
/// (coefficients in `[-5, 5]`, constants in `[-10, 10]`, about one row in
/// ten an equality), plus the box `-10 <= xᵢ <= 10` when `bounded`.
pub fn random_polyhedron(n: usize, m: usize, seed: u64, bounded: bool) -> Result<Polyhedron> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = VarOrder::numbered("x", n);
    for _ in 0..MAX_ATTEMPTS {
        let mut rows = Vec::with_capacity(m + 2 * n);
        for _ in 0..m {
            let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
            let b = rng.gen_range(-10..=10);
            let rel = if rng.gen_ratio(1, 10) {
                RawRelation::Eq
            } else {
                RawRelation::Le
            };
            rows.push(RawConstraint::ints(&a, rel, b));
        }
        if bounded {
            for j in 0..n {
                let mut a = alloc::vec![0; n];
                a[j] = 1;
                rows.push(RawConstraint::ints(&a, RawRelation::Le, 10));
                rows.push(RawConstraint::ints(&a, RawRelation::Ge, -10));
            }
        }
        let p = Polyhedron::from_raw(vars.clone(), &rows)?;
        if let Some(s) = p.system() {
            if is_satisfiable(s) {
                return Ok(p);
            }
        }
    }
    Err(Error::GenerationFailure(MAX_ATTEMPTS))
}

fn axis_bounded(sys: &ConstraintSystem) -> Result<bool> {
    for k in 0..sys.dim() {
        for sign in [1, -1] {
            let mut obj = alloc::vec![Rational::zero(); sys.dim()];
            obj[k] = integer(sign);
            if !matches!(
                optimize(sys, &obj, Direction::Max)?,
                LpOutcome::Optimal { .. }
            ) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Vertices of a bounded planar polygon: pairwise intersections of the
/// constraint lines that lie in the polygon.
fn vertices_2d(sys: &ConstraintSystem) -> Vec<(Rational, Rational)> {
    let lines: Vec<(Rational, Rational, Rational)> = sys
        .rows()
        .iter()
        .map(|r| {
            let a = r.rational_coeffs();
            (a[0].clone(), a[1].clone(), r.rational_rhs())
        })
        .collect();
    let mut out = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let (a1, b1, c1) = &lines[i];
            let (a2, b2, c2) = &lines[j];
            let det = a1 * b2 - b1 * a2;
            if det.is_zero() {
                continue;
            }
            let x = (c1 * b2 - b1 * c2) / &det;
            let y = (a1 * c2 - c1 * a2) / &det;
            let pt = [x, y];
            if sys.is_satisfied_by(&pt) {
                let [x, y] = pt;
                out.push((x, y));
            }
        }
    }
    out
}

fn cross(o: &(Rational, Rational), a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

fn dist2(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    let dx = &b.0 - &a.0;
    let dy = &b.1 - &a.1;
    &dx * &dx + &dy * &dy
}

fn row(a: Rational, b: Rational, rel: RawRelation, c: Rational) -> LinearConstraint {
    match crate::model::normalize(&RawConstraint::new(alloc::vec![a, b], rel, c)) {
        Normalized::Constraint(c) => c,
        other => panic!("degenerate facet {other:?}"),
    }
}

/// Facets of the convex hull of a finite planar point set. Degenerate sets
/// give equalities: a point gives two, a segment one plus two bounds.
fn hull_of_points(mut pts: Vec<(Rational, Rational)>) -> Vec<LinearConstraint> {
    pts.sort();
    pts.dedup();
    let p0 = pts[0].clone();
    if pts.len() == 1 {
        return alloc::vec![
            row(integer(1), integer(0), RawRelation::Eq, p0.0.clone()),
            row(integer(0), integer(1), RawRelation::Eq, p0.1),
        ];
    }
    let far = pts.last().expect("two points").clone();
    if pts.iter().all(|r| cross(&p0, &far, r).is_zero()) {
        // sorted order makes p0 and far the segment ends
        let dx = &far.0 - &p0.0;
        let dy = &far.1 - &p0.1;
        let on_line = &dy * &p0.0 - &dx * &p0.1;
        let lo = &dx * &p0.0 + &dy * &p0.1;
        let hi = &dx * &far.0 + &dy * &far.1;
        return alloc::vec![
            row(dy.clone(), -dx.clone(), RawRelation::Eq, on_line),
            row(dx.clone(), dy.clone(), RawRelation::Ge, lo),
            row(dx, dy, RawRelation::Le, hi),
        ];
    }
    // Jarvis march, counter-clockwise from the lowest-leftmost point
    let mut hull = Vec::new();
    let mut cur = p0.clone();
    loop {
        hull.push(cur.clone());
        let mut cand = if pts[0] == cur {
            pts[1].clone()
        } else {
            pts[0].clone()
        };
        for r in &pts {
            if *r == cur {
                continue;
            }
            let c = cross(&cur, &cand, r);
            if c.is_negative() || (c.is_zero() && dist2(&cur, r) > dist2(&cur, &cand)) {
                cand = r.clone();
            }
        }
        cur = cand;
        if cur == p0 {
            break;
        }
    }
    let k = hull.len();
    (0..k)
        .map(|i| {
            let p = &hull[i];
            let q = &hull[(i + 1) % k];
            let a = &q.1 - &p.1;
            let b = &p.0 - &q.0;
            let c = &a * &p.0 + &b * &p.1;
            row(a, b, RawRelation::Le, c)
        })
        .collect()
}

/// Closed hull of two bounded planar polyhedra by vertex enumeration and
/// gift wrapping. Labelled with `p1`'s variable names.
pub fn hull_2d_vertex_oracle(p1: &Polyhedron, p2: &Polyhedron) -> Result<Polyhedron> {
    Error::check_dim(2, p1.dim())?;
    Error::check_dim(2, p2.dim())?;
    let mut pts = Vec::new();
    for p in [p1, p2] {
        let sys = p.system().ok_or(Error::EmptyOperand)?;
        if !is_satisfiable(sys) {
            return Err(Error::EmptyOperand);
        }
        if !axis_bounded(sys)? {
            return Err(Error::UnboundedOperand);
        }
        pts.extend(vertices_2d(sys));
    }
    let rows = hull_of_points(pts);
    Polyhedron::new(
        p1.vars().clone(),
        ConstraintSystem::from_constraints(2, rows)?.canonical(),
    )
}

/// `true` for rows with integer data `±1` on every coefficient and constant
/// `1`: the facet shape of a cross polytope.
pub fn is_cross_polytope_facet(c: &LinearConstraint) -> bool {
    c.rel() == Relation::Le
        && *c.rhs() == BigInt::from(1)
        && c.coeffs().iter().all(|a| a.abs() == BigInt::from(1))
}
