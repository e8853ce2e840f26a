mod common;

use common::*;
use polyhull_core::lp::includes;
use polyhull_core::model::RawRelation;
use polyhull_core::oracle::{grid_points, random_polyhedron, GridSpec};
use polyhull_core::projection::{eliminate_plan, project_system, EliminationPlan};
use polyhull_core::{is_satisfiable, project, set_equal, ConstraintSystem, Polyhedron, VarOrder};
use rand::seq::SliceRandom;
use rand::Rng;

fn random_subset(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    let k = rng.gen_range(1..=n);
    let mut keep = idx[..k].to_vec();
    keep.sort_unstable();
    keep
}

fn names(p: &Polyhedron, keep: &[usize]) -> Vec<String> {
    keep.iter().map(|&k| p.vars().name(k).to_string()).collect()
}

fn bound_system(
    p: &Polyhedron,
    keep: &[usize],
    point: &[polyhull_core::Rational],
) -> Option<ConstraintSystem> {
    let n = p.dim();
    let raws: Vec<_> = keep
        .iter()
        .zip(point)
        .map(|(&k, v)| unit_row(n, k, RawRelation::Eq, v.clone()))
        .collect();
    let bind = ConstraintSystem::from_raw(n, &raws).unwrap()?;
    Some(p.system().unwrap().and(&bind).unwrap())
}

#[test]
fn membership_matches_lifted_satisfiability() {
    for seed in 0..60u64 {
        let mut r = rng(seed);
        let n = 1 + (seed as usize % 4);
        let m = r.gen_range(1..=7);
        let p = random_polyhedron(n, m, seed, seed % 2 == 0).unwrap();
        let keep = random_subset(&mut r, n);
        let q = project(&p, &names(&p, &keep)).unwrap();
        let mut pts: Vec<_> = points_in(&p, &mut r, 4)
            .into_iter()
            .map(|x| keep.iter().map(|&k| x[k].clone()).collect::<Vec<_>>())
            .collect();
        pts.extend((0..16).map(|_| random_point(&mut r, keep.len(), 6).0));
        for pt in pts {
            let lifted = bound_system(&p, &keep, &pt).is_some_and(|s| is_satisfiable(&s));
            assert_eq!(
                q.satisfies(&pt).unwrap(),
                lifted,
                "seed {seed} point {pt:?}"
            );
        }
    }
}

#[test]
fn membership_on_grid() {
    let g = GridSpec::ints(-2, 2);
    for seed in 100..115u64 {
        let p = random_polyhedron(3, 4, seed, false).unwrap();
        let keep = [0, 2];
        let q = project(&p, &names(&p, &keep)).unwrap();
        for pt in grid_points(&g, 2) {
            let lifted = bound_system(&p, &keep, &pt).is_some_and(|s| is_satisfiable(&s));
            assert_eq!(q.satisfies(&pt).unwrap(), lifted, "seed {seed}");
        }
    }
}

#[test]
fn monotone_under_inclusion() {
    for seed in 0..30u64 {
        let q = random_polyhedron(3, 3, seed, false).unwrap();
        let mut r = rng(seed);
        // P = Q plus one more row, kept only if still satisfiable
        let mut sys = q.system().unwrap().clone();
        let extra = random_halfspace(&mut r, 3);
        let Some(more) = ConstraintSystem::from_raw(3, [&extra]).unwrap() else {
            continue;
        };
        sys = sys.and(&more).unwrap();
        let p = Polyhedron::new(q.vars().clone(), sys).unwrap();
        assert!(includes(&q, &p).unwrap());
        let keep = ["x1", "x3"];
        let pp = project(&p, &keep).unwrap();
        let qq = project(&q, &keep).unwrap();
        assert!(includes(&qq, &pp).unwrap(), "seed {seed}");
    }
}

#[test]
fn idempotent() {
    for seed in 0..30u64 {
        let p = random_polyhedron(4, 5, seed, seed % 3 == 0).unwrap();
        let once = project(&p, &["x2", "x4"]).unwrap();
        let twice = project(&once, &["x2", "x4"]).unwrap();
        assert!(set_equal(&once, &twice).unwrap());
        assert_eq!(once, twice);
    }
}

#[test]
fn order_does_not_matter() {
    for seed in 0..30u64 {
        let mut r = rng(seed + 7);
        let n = 4;
        let p = random_polyhedron(n, 5, seed, false).unwrap();
        let sys = p.system().unwrap();
        let keep = random_subset(&mut r, n);
        let mut rest: Vec<usize> = (0..n).filter(|d| !keep.contains(d)).collect();
        let vars = VarOrder::new(names(&p, &keep)).unwrap();
        let mut results = Vec::new();
        for _ in 0..3 {
            rest.shuffle(&mut r);
            let plan = EliminationPlan {
                keep: keep.clone(),
                order: rest.clone(),
            };
            let out = eliminate_plan(sys, &plan).map(|s| s.restricted(&keep));
            results.push(Polyhedron::from_option(vars.clone(), out).unwrap());
        }
        let greedy =
            Polyhedron::from_option(vars.clone(), project_system(sys, &keep, false).unwrap())
                .unwrap();
        for q in &results {
            assert!(set_equal(q, &greedy).unwrap(), "seed {seed}");
        }
    }
}

#[test]
fn unsatisfiable_projects_to_empty() {
    let vars = VarOrder::numbered("x", 3);
    let raws = [
        polyhull_core::RawConstraint::ints(&[1, 1, 0], RawRelation::Le, 0),
        polyhull_core::RawConstraint::ints(&[1, 1, 0], RawRelation::Ge, 1),
        polyhull_core::RawConstraint::ints(&[0, 0, 1], RawRelation::Ge, 0),
    ];
    let p = Polyhedron::from_raw(vars, &raws).unwrap();
    for onto in [&["x3"][..], &["x1", "x2"], &["x1", "x2", "x3"]] {
        assert!(project(&p, onto).unwrap().is_marked_empty());
    }
}
