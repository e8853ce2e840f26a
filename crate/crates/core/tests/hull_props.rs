mod common;

use common::*;
use polyhull_core::lp::includes;
use polyhull_core::model::rational;
use polyhull_core::oracle::{hull_2d_vertex_oracle, random_polyhedron};
use polyhull_core::{
    convex_hull_closure, entails, hull_many, normalize, recession_cone, set_equal, Polyhedron,
    Rational, RationalPoint,
};

/// Random operands: boxed up to dimension 2, otherwise unbounded with more
/// rows.
fn pair(seed: u64, n: usize) -> (Polyhedron, Polyhedron) {
    let bounded = n <= 2;
    let k = if bounded { 3 } else { 5 };
    let m1 = 1 + (seed as usize % k);
    let m2 = 1 + (seed as usize / k % k);
    (
        random_polyhedron(n, m1, 2 * seed, bounded).unwrap(),
        random_polyhedron(n, m2, 2 * seed + 1, bounded).unwrap(),
    )
}

fn mix(p: &[Rational], q: &[Rational], lambda: &Rational) -> RationalPoint {
    let one = rational(1, 1);
    RationalPoint(
        p.iter()
            .zip(q)
            .map(|(a, b)| a * lambda + b * (&one - lambda))
            .collect(),
    )
}

#[test]
fn operands_entail_every_hull_row() {
    for seed in 0..40u64 {
        let (p1, p2) = pair(seed, 1 + seed as usize % 4);
        let h = convex_hull_closure(&p1, &p2).unwrap();
        for c in h.system().unwrap().rows() {
            assert!(entails(p1.system().unwrap(), c).unwrap(), "seed {seed}");
            assert!(entails(p2.system().unwrap(), c).unwrap(), "seed {seed}");
        }
        assert!(includes(&h, &p1).unwrap() && includes(&h, &p2).unwrap());
    }
}

#[test]
fn sampled_points_and_mixtures() {
    let lambdas = [
        rational(0, 1),
        rational(1, 4),
        rational(1, 2),
        rational(3, 4),
        rational(1, 1),
    ];
    for seed in 0..30u64 {
        let mut r = rng(seed);
        let (p1, p2) = pair(seed, 2 + seed as usize % 2);
        let h = convex_hull_closure(&p1, &p2).unwrap();
        let a = points_in(&p1, &mut r, 3);
        let b = points_in(&p2, &mut r, 3);
        for x in a.iter().chain(&b) {
            assert!(h.satisfies(x).unwrap());
        }
        for x in &a {
            for y in &b {
                for l in &lambdas {
                    assert!(h.satisfies(&mix(x, y, l)).unwrap(), "seed {seed}");
                }
            }
        }
    }
}

#[test]
fn smallest_common_halfspaces() {
    for seed in 0..30u64 {
        let mut r = rng(seed + 1000);
        let (p1, p2) = pair(seed, 2 + seed as usize % 2);
        let h = convex_hull_closure(&p1, &p2).unwrap();
        for _ in 0..10 {
            let Some(c) = normalize(&random_halfspace(&mut r, p1.dim())).constraint() else {
                continue;
            };
            let both = entails(p1.system().unwrap(), &c).unwrap()
                && entails(p2.system().unwrap(), &c).unwrap();
            if both {
                assert!(entails(h.system().unwrap(), &c).unwrap(), "seed {seed}");
            }
        }
    }
}

#[test]
fn algebraic_laws() {
    for seed in 0..20u64 {
        let (a, b) = pair(seed, 2 + seed as usize % 2);
        let c = random_polyhedron(a.dim(), 3, 500 + seed, false).unwrap();
        let ab = convex_hull_closure(&a, &b).unwrap();
        assert!(set_equal(&ab, &convex_hull_closure(&b, &a).unwrap()).unwrap());
        assert!(set_equal(&convex_hull_closure(&a, &a).unwrap(), &a).unwrap());
        let left = convex_hull_closure(&ab, &c).unwrap();
        let right = convex_hull_closure(&a, &convex_hull_closure(&b, &c).unwrap()).unwrap();
        assert!(set_equal(&left, &right).unwrap(), "seed {seed}");
        assert_eq!(hull_many(&[a.clone(), b.clone(), c.clone()]).unwrap(), left);
    }
}

#[test]
fn recession_directions_extend_second_operand() {
    for seed in 0..40u64 {
        let mut r = rng(seed + 77);
        let n = 2 + seed as usize % 2;
        let (p1, p2) = pair(seed, n);
        let h = convex_hull_closure(&p1, &p2).unwrap();
        let cone = recession_cone(&p1).unwrap();
        let cone_sys = cone.system().unwrap();
        // directions: cone points found by LP over the cone cut by a box
        let mut dirs = Vec::new();
        let mut boxed = cone_sys.clone();
        for j in 0..n {
            for rel in [
                polyhull_core::RawRelation::Le,
                polyhull_core::RawRelation::Ge,
            ] {
                let v = if rel == polyhull_core::RawRelation::Le {
                    3
                } else {
                    -3
                };
                let row = normalize(&unit_row(n, j, rel, rational(v, 1)))
                    .constraint()
                    .unwrap();
                boxed.push(row).unwrap();
            }
        }
        for _ in 0..4 {
            dirs.extend(lp_point(&boxed, &mut r));
        }
        let pts = points_in(&p2, &mut r, 3);
        for d in &dirs {
            assert!(cone.satisfies(d).unwrap());
            for lam in [1, 2, 4] {
                for p in &pts {
                    let moved: Vec<Rational> = p
                        .iter()
                        .zip(d.iter())
                        .map(|(x, y)| x + y * rational(lam, 1))
                        .collect();
                    assert!(h.satisfies(&moved).unwrap(), "seed {seed}");
                }
            }
        }
    }
}

#[test]
fn matches_planar_vertex_oracle() {
    for seed in 0..30u64 {
        let (p1, p2) = pair(seed, 2);
        let h = convex_hull_closure(&p1, &p2).unwrap();
        let o = hull_2d_vertex_oracle(&p1, &p2).unwrap();
        assert!(set_equal(&h, &o).unwrap(), "seed {seed}");
    }
}

#[test]
fn closure_point_of_the_strip_example() {
    let vars = polyhull_core::VarOrder::new(["x", "y"]).unwrap();
    let r = |a: &[i64], rel, b| polyhull_core::RawConstraint::ints(a, rel, b);
    use polyhull_core::RawRelation::*;
    let p1 = Polyhedron::from_raw(vars.clone(), &[r(&[1, 0], Eq, 0), r(&[0, 1], Eq, 1)]).unwrap();
    let p2 = Polyhedron::from_raw(vars, &[r(&[1, 0], Ge, 0), r(&[1, -1], Eq, 0)]).unwrap();
    let h = convex_hull_closure(&p1, &p2).unwrap();
    assert!(h.satisfies(&RationalPoint::from_ints(&[1, 2])).unwrap());
    assert!(!h.satisfies(&RationalPoint::from_ints(&[-1, 0])).unwrap());
}
