//! Projection by variable elimination.
//!
//! A dimension covered by an equality is removed by substituting that
//! equality into every other row. Otherwise Fourier-Motzkin combines each
//! row with a positive coefficient on the dimension with each row with a
//! negative one. After every step, trivial rows and duplicates are dropped
//! and parallel inequalities keep only the tightest. LP minimization runs at
//! the end, and in between whenever an intermediate system grows large.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::lp::{drop_parallel, is_satisfiable, minimize_system};
use crate::model::{ConstraintSystem, LinearConstraint, Normalized, Polyhedron, VarOrder};
use crate::{Error, Result};

/// Which dimensions survive and the order in which the others go.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationPlan {
    pub keep: Vec<usize>,
    pub order: Vec<usize>,
}

/// Combine `row` with `pivot` so that the coefficient on `dim` cancels.
/// `row` is scaled by a positive factor; `pivot` by whatever is needed, so
/// the pivot must be an equality unless the signs on `dim` are opposite.
fn combine(row: &LinearConstraint, pivot: &LinearConstraint, dim: usize) -> Normalized {
    let cr = row.coeff(dim);
    let cp = pivot.coeff(dim);
    let (row_scale, pivot_scale) = if cp.is_negative() {
        (-cp, cr.clone())
    } else {
        (cp.clone(), -cr)
    };
    let coeffs = row
        .coeffs()
        .iter()
        .zip(pivot.coeffs())
        .map(|(a, b)| a * &row_scale + b * &pivot_scale)
        .collect();
    let rhs = row.rhs() * &row_scale + pivot.rhs() * &pivot_scale;
    let rel = if row.is_equality() && pivot.is_equality() {
        crate::model::Relation::Eq
    } else {
        crate::model::Relation::Le
    };
    LinearConstraint::from_integers(coeffs, rel, rhs)
}

fn nonzeros(c: &LinearConstraint) -> usize {
    c.coeffs().iter().filter(|a| !a.is_zero()).count()
}

/// Collect normalized rows, dropping trivial and duplicate ones. `None` if
/// any row is trivially false.
fn collect_rows<I>(dim: usize, rows: I) -> Option<ConstraintSystem>
where
    I: IntoIterator<Item = Normalized>,
{
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in rows {
        match r {
            Normalized::Constraint(c) => {
                if seen.insert(c.clone()) {
                    out.push(c);
                }
            }
            Normalized::TriviallyTrue => {}
            Normalized::TriviallyFalse => return None,
        }
    }
    let out = drop_parallel(out);
    Some(ConstraintSystem::from_constraints(dim, out).expect("rows share the system dimension"))
}

/// Eliminate one dimension. The result keeps the dimension count but has a
/// zero coefficient on `dim` in every row; `None` means a contradiction
/// surfaced.
///
/// Panics if `dim` is out of range.
pub fn eliminate_one(sys: &ConstraintSystem, dim: usize) -> Option<ConstraintSystem> {
    assert!(dim < sys.dim(), "dimension {dim} out of range");
    let rows = sys.rows();
    let pivot = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| r.is_equality() && !r.coeff(dim).is_zero())
        .min_by_key(|(i, r)| (nonzeros(r), *i))
        .map(|(i, _)| i);

    if let Some(p) = pivot {
        let pivot = &rows[p];
        let out = rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != p)
            .map(|(_, r)| {
                if r.coeff(dim).is_zero() {
                    Normalized::Constraint(r.clone())
                } else {
                    combine(r, pivot, dim)
                }
            });
        return collect_rows(sys.dim(), out);
    }

    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut out = Vec::new();
    for r in rows {
        let c = r.coeff(dim);
        if c.is_positive() {
            pos.push(r);
        } else if c.is_negative() {
            neg.push(r);
        } else {
            out.push(Normalized::Constraint(r.clone()));
        }
    }
    for p in &pos {
        for q in &neg {
            out.push(combine(p, q, dim));
        }
    }
    collect_rows(sys.dim(), out)
}

/// Occurrence counts `(positive, negative)` of `dim` among the inequalities,
/// or `None` when an equality covers it.
fn occurrences(sys: &ConstraintSystem, dim: usize) -> Option<(usize, usize)> {
    let mut pos = 0;
    let mut neg = 0;
    for r in sys.rows() {
        let c: &BigInt = r.coeff(dim);
        if c.is_zero() {
            continue;
        }
        if r.is_equality() {
            return None;
        }
        if c.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    Some((pos, neg))
}

/// Greedy choice: an equality-covered dimension if any, else the one with
/// the smallest `pos * neg - pos - neg`; ties go to the lowest index.
fn next_dim(sys: &ConstraintSystem, candidates: &[usize]) -> usize {
    let mut best: Option<(bool, i64, usize)> = None;
    for &d in candidates {
        let key = match occurrences(sys, d) {
            None => (false, 0, d),
            Some((p, n)) => (true, (p * n) as i64 - p as i64 - n as i64, d),
        };
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    best.expect("at least one candidate").2
}

fn complement(dim: usize, keep: &[usize]) -> Vec<usize> {
    (0..dim).filter(|d| !keep.contains(d)).collect()
}

/// Intermediate systems larger than this are minimized before the next
/// elimination.
const PRUNE_ROWS: usize = 32;

fn eliminate_greedy(
    sys: &ConstraintSystem,
    keep: &[usize],
    mut trace: Option<&mut Vec<usize>>,
) -> Option<ConstraintSystem> {
    let mut remaining = complement(sys.dim(), keep);
    let mut cur = sys.clone();
    while !remaining.is_empty() {
        let d = next_dim(&cur, &remaining);
        remaining.retain(|&r| r != d);
        if let Some(t) = trace.as_deref_mut() {
            t.push(d);
        }
        match eliminate_one(&cur, d) {
            Some(next) if next.len() > PRUNE_ROWS && !remaining.is_empty() => {
                cur = minimize_system(&next).unwrap_or(next);
            }
            Some(next) => cur = next,
            None => {
                if let Some(t) = trace {
                    t.extend(remaining);
                }
                return None;
            }
        }
    }
    Some(cur)
}

/// The elimination order the greedy heuristic takes for this system.
pub fn choose_order(sys: &ConstraintSystem, keep: &[usize]) -> EliminationPlan {
    let mut order = Vec::new();
    let _ = eliminate_greedy(sys, keep, Some(&mut order));
    EliminationPlan {
        keep: keep.to_vec(),
        order,
    }
}

/// Run an explicit plan. The result still spans all dimensions, with zero
/// coefficients on the eliminated ones.
pub fn eliminate_plan(sys: &ConstraintSystem, plan: &EliminationPlan) -> Option<ConstraintSystem> {
    let mut cur = sys.clone();
    for &d in &plan.order {
        cur = eliminate_one(&cur, d)?;
    }
    Some(cur)
}

/// Project onto the named variables, in the given order, without the final
/// redundancy removal.
pub fn project_raw<S: AsRef<str>>(p: &Polyhedron, onto: &[S]) -> Result<Polyhedron> {
    project_with(p, onto, false)
}

/// Projection of `p` onto the named variables, in the given order. The
/// result is minimized and canonically sorted; an unsatisfiable input gives
/// the empty polyhedron.
pub fn project<S: AsRef<str>>(p: &Polyhedron, onto: &[S]) -> Result<Polyhedron> {
    project_with(p, onto, true)
}

fn project_with<S: AsRef<str>>(p: &Polyhedron, onto: &[S], minimize: bool) -> Result<Polyhedron> {
    let keep = p.vars().indices_of(onto)?;
    let vars = VarOrder::new(onto.iter().map(|s| s.as_ref()))?;
    let Some(sys) = p.system() else {
        return Ok(Polyhedron::empty(vars));
    };
    Polyhedron::from_option(vars, project_system(sys, &keep, minimize)?)
}

/// Project a bare system onto `keep` (in that order). `Ok(None)` when the
/// system is unsatisfiable.
pub fn project_system(
    sys: &ConstraintSystem,
    keep: &[usize],
    minimize: bool,
) -> Result<Option<ConstraintSystem>> {
    if let Some(&bad) = keep.iter().find(|&&k| k >= sys.dim()) {
        return Err(Error::Dimension {
            expected: sys.dim(),
            found: bad + 1,
        });
    }
    if !is_satisfiable(sys) {
        return Ok(None);
    }
    let Some(eliminated) = eliminate_greedy(sys, keep, None) else {
        return Ok(None);
    };
    let restricted = eliminated.restricted(keep);
    Ok(Some(if minimize {
        minimize_system(&restricted)?
    } else {
        restricted.canonical()
    }))
}
