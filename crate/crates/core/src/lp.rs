//! Exact linear programming over the rationals and the polyhedral queries
//! built on it: satisfiability, entailment, set equality and redundancy
//! removal.
//!
//! The solver is a dictionary-form simplex with Bland's rule. Free variables
//! are split as `x = u - v` with `u, v >= 0`, every equality is split into
//! two inequalities, and each inequality's slack starts basic. When some
//! constant is negative, phase one adds a single auxiliary variable to every
//! row and drives it to zero.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::model::{
    dot, ConstraintSystem, LinearConstraint, Normalized, Polyhedron, Rational, RationalPoint,
    Relation,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Max,
    Min,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    /// The optimum and a point of the system attaining it.
    Optimal {
        value: Rational,
        witness: RationalPoint,
    },
    Unbounded,
    Infeasible,
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

/// Simplex dictionary: each basic variable is `rhs + Σ coef · nonbasic`,
/// and the objective (maximized) is `obj_const + Σ obj · nonbasic`.
struct Dictionary {
    basic: Vec<usize>,
    nonbasic: Vec<usize>,
    rhs: Vec<Rational>,
    coef: Vec<Vec<Rational>>,
    obj: Vec<Rational>,
    obj_const: Rational,
}

enum Phase {
    Optimal,
    /// Column `e` can grow without bound.
    Unbounded(usize),
    /// The objective passed the cutoff.
    Exceeded,
}

impl Dictionary {
    /// Exchange the basic variable of row `r` with the nonbasic variable of
    /// column `e`.
    fn pivot(&mut self, r: usize, e: usize) {
        let a = self.coef[r][e].clone();
        let mut row = core::mem::take(&mut self.coef[r]);
        let inv = Rational::one() / &a;
        for (j, v) in row.iter_mut().enumerate() {
            if j == e {
                *v = inv.clone();
            } else if !v.is_zero() {
                *v = -(&*v / &a);
            }
        }
        let row_rhs = -(&self.rhs[r] / &a);

        let substitute = |coef: &mut Vec<Rational>, rhs: &mut Rational| {
            let f = core::mem::take(&mut coef[e]);
            if f.is_zero() {
                return;
            }
            for (j, (v, w)) in coef.iter_mut().zip(&row).enumerate() {
                if j == e {
                    *v = &f * w;
                } else if !w.is_zero() {
                    *v += &f * w;
                }
            }
            *rhs += &f * &row_rhs;
        };
        for (i, (coef, rhs)) in self.coef.iter_mut().zip(self.rhs.iter_mut()).enumerate() {
            if i != r {
                substitute(coef, rhs);
            }
        }
        substitute(&mut self.obj, &mut self.obj_const);

        self.coef[r] = row;
        self.rhs[r] = row_rhs;
        core::mem::swap(&mut self.basic[r], &mut self.nonbasic[e]);
    }

    /// Maximize the objective with Bland's rule.
    fn run(&mut self) -> Phase {
        self.run_until(None)
    }

    /// Maximize, stopping early once the objective exceeds `cutoff`.
    fn run_until(&mut self, cutoff: Option<&Rational>) -> Phase {
        loop {
            if cutoff.is_some_and(|c| self.obj_const > *c) {
                return Phase::Exceeded;
            }
            let enter = (0..self.nonbasic.len())
                .filter(|&j| self.obj[j].is_positive())
                .min_by_key(|&j| self.nonbasic[j]);
            let Some(e) = enter else {
                return Phase::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.basic.len() {
                let c = &self.coef[i][e];
                if !c.is_negative() {
                    continue;
                }
                let ratio = -(&self.rhs[i] / c);
                let better = match &leave {
                    None => true,
                    Some((l, best)) => {
                        ratio < *best || (ratio == *best && self.basic[i] < self.basic[*l])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, e),
                None => return Phase::Unbounded(e),
            }
        }
    }

    /// Install `costs` (indexed by variable) as the objective, expressed over
    /// the current nonbasic variables.
    fn set_objective(&mut self, costs: &[Rational]) {
        let mut obj: Vec<Rational> = self.nonbasic.iter().map(|&v| costs[v].clone()).collect();
        let mut k = Rational::zero();
        for (i, &b) in self.basic.iter().enumerate() {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            k += cb * &self.rhs[i];
            for (o, v) in obj.iter_mut().zip(&self.coef[i]) {
                if !v.is_zero() {
                    *o += cb * v;
                }
            }
        }
        self.obj = obj;
        self.obj_const = k;
    }

    fn value_of(&self, var: usize) -> Rational {
        match self.basic.iter().position(|&b| b == var) {
            Some(i) => self.rhs[i].clone(),
            None => Rational::zero(),
        }
    }
}

/// Dimensions with a nonzero coefficient in some row.
fn used_dims(sys: &ConstraintSystem) -> Vec<bool> {
    let mut used = alloc::vec![false; sys.dim()];
    for r in sys.rows() {
        for (u, a) in used.iter_mut().zip(r.coeffs()) {
            *u |= !a.is_zero();
        }
    }
    used
}

/// Whether the objective moves along a dimension no row mentions.
fn objective_escapes(sys: &ConstraintSystem, objective: &[Rational]) -> bool {
    used_dims(sys)
        .iter()
        .zip(objective)
        .any(|(u, c)| !u && !c.is_zero())
}

/// A feasible dictionary for `sys`, or `None` when the system is
/// infeasible. Variables `0..n` and `n..2n` are the positive and negative
/// parts of `x`; `2n..` are slacks. Dimensions no row mentions get no
/// column.
fn feasible_dictionary(sys: &ConstraintSystem) -> Option<Dictionary> {
    let n = sys.dim();
    let used = used_dims(sys);
    let columns: Vec<usize> = (0..n).filter(|&k| used[k]).collect();
    let cols = columns.len();
    let ineqs: Vec<LinearConstraint> = sys
        .rows()
        .iter()
        .flat_map(|r| r.as_inequalities())
        .collect();
    let m = ineqs.len();
    let aux = 2 * n + m;
    let needs_aux = ineqs.iter().any(|r| r.rhs().is_negative());

    let width = 2 * cols + usize::from(needs_aux);
    let mut coef = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for r in &ineqs {
        // s = b - a·u + a·v (+ x0)
        let mut row = alloc::vec![Rational::zero(); width];
        for (j, &k) in columns.iter().enumerate() {
            let a = r.coeff(k);
            if a.is_zero() {
                continue;
            }
            let a = Rational::from_integer(a.clone());
            row[cols + j] = a.clone();
            row[j] = -a;
        }
        if needs_aux {
            row[2 * cols] = Rational::one();
        }
        coef.push(row);
        rhs.push(Rational::from_integer(r.rhs().clone()));
    }
    let mut nonbasic: Vec<usize> = columns
        .iter()
        .copied()
        .chain(columns.iter().map(|k| n + k))
        .collect();
    if needs_aux {
        nonbasic.push(aux);
    }
    let mut d = Dictionary {
        basic: (2 * n..2 * n + m).collect(),
        nonbasic,
        rhs,
        coef,
        obj: Vec::new(),
        obj_const: Rational::zero(),
    };
    if needs_aux {
        let mut costs = alloc::vec![Rational::zero(); aux + 1];
        costs[aux] = -Rational::one();
        d.set_objective(&costs);
        // x0 enters against the most violated row, making the dictionary feasible
        let worst = (0..m)
            .min_by(|&i, &j| d.rhs[i].cmp(&d.rhs[j]).then(d.basic[i].cmp(&d.basic[j])))
            .expect("a negative row exists");
        d.pivot(worst, 2 * cols);
        // maximizing -x0 is bounded by zero
        let _ = d.run();
        if d.obj_const.is_negative() {
            return None;
        }
        if let Some(r) = d.basic.iter().position(|&b| b == aux) {
            let e = (0..d.nonbasic.len())
                .find(|&j| !d.coef[r][j].is_zero())
                .expect("x0 row has a nonbasic entry");
            d.pivot(r, e);
        }
        let col = d
            .nonbasic
            .iter()
            .position(|&v| v == aux)
            .expect("x0 is nonbasic");
        d.nonbasic.remove(col);
        for row in d.coef.iter_mut() {
            row.remove(col);
        }
    }
    Some(d)
}

/// True iff the system has a rational solution.
pub fn is_satisfiable(sys: &ConstraintSystem) -> bool {
    feasible_dictionary(sys).is_some()
}

fn objective_dictionary(
    sys: &ConstraintSystem,
    objective: &[Rational],
    direction: Direction,
) -> Option<Dictionary> {
    let n = sys.dim();
    let mut d = feasible_dictionary(sys)?;
    let mut costs = alloc::vec![Rational::zero(); 2 * n + d.basic.len()];
    for (k, c) in objective.iter().enumerate() {
        let c = match direction {
            Direction::Max => c.clone(),
            Direction::Min => -c.clone(),
        };
        costs[n + k] = -c.clone();
        costs[k] = c;
    }
    d.set_objective(&costs);
    Some(d)
}

/// Optimize `objective · x` over the system.
pub fn optimize(
    sys: &ConstraintSystem,
    objective: &[Rational],
    direction: Direction,
) -> Result<LpOutcome> {
    Error::check_dim(sys.dim(), objective.len())?;
    let n = sys.dim();
    let Some(mut d) = objective_dictionary(sys, objective, direction) else {
        return Ok(LpOutcome::Infeasible);
    };
    if objective_escapes(sys, objective) {
        return Ok(LpOutcome::Unbounded);
    }
    match d.run() {
        Phase::Unbounded(_) => return Ok(LpOutcome::Unbounded),
        Phase::Exceeded => unreachable!("no cutoff"),
        Phase::Optimal => {}
    }
    let witness: Vec<Rational> = (0..n).map(|k| d.value_of(k) - d.value_of(n + k)).collect();
    let value = dot(objective, &witness);
    Ok(LpOutcome::Optimal {
        value,
        witness: RationalPoint(witness),
    })
}

/// Whether `objective · x <= bound` on every point (vacuously when
/// infeasible).
fn bounded_by(sys: &ConstraintSystem, objective: &[Rational], bound: &Rational) -> bool {
    let Some(mut d) = objective_dictionary(sys, objective, Direction::Max) else {
        return true;
    };
    if objective_escapes(sys, objective) {
        return false;
    }
    match d.run_until(Some(bound)) {
        Phase::Optimal => d.obj_const <= *bound,
        Phase::Unbounded(_) | Phase::Exceeded => false,
    }
}

/// True iff every point of `sys` satisfies `c`. An unbounded objective
/// means "not entailed".
pub fn entails(sys: &ConstraintSystem, c: &LinearConstraint) -> Result<bool> {
    Error::check_dim(sys.dim(), c.dim())?;
    let a = c.rational_coeffs();
    let b = c.rational_rhs();
    if !bounded_by(sys, &a, &b) {
        return Ok(false);
    }
    if c.rel() == Relation::Le {
        return Ok(true);
    }
    let neg: Vec<Rational> = a.iter().map(|v| -v).collect();
    Ok(bounded_by(sys, &neg, &-b))
}

fn entails_all(sys: &ConstraintSystem, other: &ConstraintSystem) -> Result<bool> {
    for c in other.rows() {
        if !entails(sys, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff the system (or marker) denotes the empty set.
pub fn is_empty(p: &Polyhedron) -> bool {
    match p.system() {
        Some(s) => !is_satisfiable(s),
        None => true,
    }
}

/// Inclusion `p ⊆ q` of two polyhedra of equal dimension.
pub fn includes(q: &Polyhedron, p: &Polyhedron) -> Result<bool> {
    Error::check_dim(p.dim(), q.dim())?;
    let Some(ps) = p.system() else {
        return Ok(true);
    };
    if !is_satisfiable(ps) {
        return Ok(true);
    }
    match q.system() {
        None => Ok(false),
        Some(qs) => entails_all(ps, qs),
    }
}

/// Denotational equality of two polyhedra.
pub fn set_equal(p: &Polyhedron, q: &Polyhedron) -> Result<bool> {
    Error::check_dim(p.dim(), q.dim())?;
    Ok(includes(q, p)? && includes(p, q)?)
}

/// Equality rows in reduced row-echelon form over the rationals, each row
/// `(coeffs, rhs)` having coefficient 1 at its pivot column.
pub(crate) fn echelon(
    dim: usize,
    eqs: &[LinearConstraint],
) -> Option<Vec<(usize, Vec<Rational>, Rational)>> {
    let mut rows: Vec<(Vec<Rational>, Rational)> = eqs
        .iter()
        .map(|e| (e.rational_coeffs(), e.rational_rhs()))
        .collect();
    let mut out: Vec<(usize, Vec<Rational>, Rational)> = Vec::new();
    for col in 0..dim {
        let Some(pos) = rows.iter().position(|(a, _)| !a[col].is_zero()) else {
            continue;
        };
        let (mut a, mut b) = rows.swap_remove(pos);
        let p = a[col].clone();
        for v in a.iter_mut() {
            *v /= &p;
        }
        b /= &p;
        let reduce = |row: &mut Vec<Rational>, rhs: &mut Rational| {
            let f = row[col].clone();
            if f.is_zero() {
                return;
            }
            for (v, w) in row.iter_mut().zip(&a) {
                *v -= &f * w;
            }
            *rhs -= &f * &b;
        };
        for (ra, rb) in rows.iter_mut() {
            reduce(ra, rb);
        }
        for (_, oa, ob) in out.iter_mut() {
            reduce(oa, ob);
        }
        out.push((col, a, b));
    }
    // leftover rows are 0 = b
    if rows.iter().any(|(_, b)| !b.is_zero()) {
        return None;
    }
    Some(out)
}

pub(crate) fn integer_row(coeffs: &[Rational], rel: Relation, rhs: &Rational) -> Normalized {
    let raw = crate::model::RawConstraint::new(
        coeffs.to_vec(),
        match rel {
            Relation::Le => crate::model::RawRelation::Le,
            Relation::Eq => crate::model::RawRelation::Eq,
        },
        rhs.clone(),
    );
    crate::model::normalize(&raw)
}

/// Keep only the tightest of positively parallel inequalities; equalities
/// pass through unchanged. First occurrences keep their position.
pub(crate) fn drop_parallel(rows: Vec<LinearConstraint>) -> Vec<LinearConstraint> {
    let mut best: BTreeMap<Vec<BigInt>, usize> = BTreeMap::new();
    let mut out: Vec<Option<LinearConstraint>> = Vec::with_capacity(rows.len());
    for r in rows {
        if r.is_equality() {
            out.push(Some(r));
            continue;
        }
        let (dir, bound) = direction_and_bound(&r);
        match best.get(&dir) {
            Some(&i) => {
                let kept = out[i].as_ref().expect("kept row");
                if bound < direction_and_bound(kept).1 {
                    out[i] = Some(r);
                }
            }
            None => {
                best.insert(dir, out.len());
                out.push(Some(r));
            }
        }
    }
    out.into_iter().flatten().collect()
}

/// Primitive coefficient direction and the bound along it.
fn direction_and_bound(r: &LinearConstraint) -> (Vec<BigInt>, Rational) {
    let g = r.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let dir = r.coeffs().iter().map(|c| c / &g).collect();
    (dir, Rational::new(r.rhs().clone(), g))
}

/// A point satisfying `eqs` and every row of `ineqs` strictly, found by
/// maximizing `t` subject to `a·x + t <= b` for each inequality and `t <= 1`.
fn interior_point(
    dim: usize,
    eqs: &[LinearConstraint],
    ineqs: &[LinearConstraint],
) -> Result<Option<Vec<Rational>>> {
    let lift = |r: &LinearConstraint, t: i64| {
        let mut coeffs = r.coeffs().to_vec();
        coeffs.push(BigInt::from(t));
        LinearConstraint::from_integers(coeffs, r.rel(), r.rhs().clone())
            .constraint()
            .expect("nonzero row")
    };
    let mut t_bound = alloc::vec![BigInt::zero(); dim];
    t_bound.push(BigInt::one());
    let rows = eqs
        .iter()
        .map(|r| lift(r, 0))
        .chain(ineqs.iter().map(|r| lift(r, 1)))
        .chain(LinearConstraint::from_integers(t_bound, Relation::Le, BigInt::one()).constraint());
    let lifted = ConstraintSystem::from_constraints(dim + 1, rows)?;
    let mut objective = alloc::vec![Rational::zero(); dim + 1];
    objective[dim] = Rational::one();
    Ok(match optimize(&lifted, &objective, Direction::Max)? {
        LpOutcome::Optimal { value, mut witness } if value.is_positive() => {
            witness.0.truncate(dim);
            Some(witness.0)
        }
        _ => None,
    })
}

/// Split `ineqs` into rows tight on all of `sys` (implicit equalities) and
/// the rest. A row slack at the running average of LP witnesses needs no LP
/// of its own.
fn split_implicit(
    sys: &ConstraintSystem,
    ineqs: Vec<LinearConstraint>,
) -> Result<(Vec<LinearConstraint>, Vec<LinearConstraint>)> {
    let mut tight_rows = Vec::new();
    let mut slack_rows = Vec::new();
    let mut sum: Option<Vec<Rational>> = None;
    let mut count = 0i64;
    for r in ineqs {
        if let Some(s) = &sum {
            let avg: Vec<Rational> = s
                .iter()
                .map(|v| v / Rational::from_integer(count.into()))
                .collect();
            if r.lhs_at(&avg) < r.rational_rhs() {
                slack_rows.push(r);
                continue;
            }
        }
        match optimize(sys, &r.rational_coeffs(), Direction::Min)? {
            LpOutcome::Optimal { value, .. } if value == r.rational_rhs() => tight_rows.push(r),
            outcome => {
                if let LpOutcome::Optimal { witness, .. } = outcome {
                    count += 1;
                    match &mut sum {
                        Some(s) => s.iter_mut().zip(witness.iter()).for_each(|(a, b)| *a += b),
                        None => sum = Some(witness.0),
                    }
                }
                slack_rows.push(r);
            }
        }
    }
    Ok((tight_rows, slack_rows))
}

/// Dictionary for `a·y <= s` over the given rows, all `s` positive, so the
/// origin is a feasible start. Structural variable `j` is column
/// `columns[j]` of `y`, split as `u_j - v_j`.
struct Centred<'a> {
    columns: &'a [usize],
    dict: Dictionary,
}

impl<'a> Centred<'a> {
    fn new(columns: &'a [usize], rows: &[(&[Rational], &Rational)]) -> Self {
        let cols = columns.len();
        let mut coef = Vec::with_capacity(rows.len());
        let mut rhs = Vec::with_capacity(rows.len());
        for (a, s) in rows {
            // slack = s - a·u + a·v
            let mut row = alloc::vec![Rational::zero(); 2 * cols];
            for (j, &k) in columns.iter().enumerate() {
                if !a[k].is_zero() {
                    row[j] = -a[k].clone();
                    row[cols + j] = a[k].clone();
                }
            }
            coef.push(row);
            rhs.push((*s).clone());
        }
        let dict = Dictionary {
            basic: (2 * cols..2 * cols + rows.len()).collect(),
            nonbasic: (0..2 * cols).collect(),
            rhs,
            coef,
            obj: alloc::vec![Rational::zero(); 2 * cols],
            obj_const: Rational::zero(),
        };
        Centred { columns, dict }
    }

    /// A point `y` of the rows with `objective · y > bound`, or `None` if
    /// the rows entail `objective · y <= bound`. Starts from the basis the
    /// previous call ended in.
    fn exceed(&mut self, objective: &[Rational], bound: &Rational) -> Option<Vec<Rational>> {
        let cols = self.columns.len();
        let d = &mut self.dict;
        let mut costs = alloc::vec![Rational::zero(); 2 * cols + d.basic.len()];
        for (j, &k) in self.columns.iter().enumerate() {
            costs[j] = objective[k].clone();
            costs[cols + j] = -objective[k].clone();
        }
        d.set_objective(&costs);
        let mut values = alloc::vec![Rational::zero(); 2 * cols + d.basic.len()];
        match d.run_until(Some(bound)) {
            Phase::Optimal => return None,
            Phase::Exceeded => {}
            Phase::Unbounded(e) => {
                // walk along column e far enough to pass the bound
                let t = (bound - &d.obj_const) / &d.obj[e] + Rational::one();
                for (i, &b) in d.basic.iter().enumerate() {
                    values[b] = &d.rhs[i] + &d.coef[i][e] * &t;
                }
                values[d.nonbasic[e]] = t;
                return Some(self.point(&values));
            }
        }
        for (i, &b) in d.basic.iter().enumerate() {
            values[b] = d.rhs[i].clone();
        }
        Some(self.point(&values))
    }

    fn point(&self, values: &[Rational]) -> Vec<Rational> {
        let cols = self.columns.len();
        let dim = self.columns.last().map_or(0, |&k| k + 1);
        let mut y = alloc::vec![Rational::zero(); dim];
        for (j, &k) in self.columns.iter().enumerate() {
            y[k] = &values[j] - &values[cols + j];
        }
        y
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Unknown,
    Redundant,
    Needed,
}

/// Irredundant subset of a full-dimensional inequality system with strictly
/// interior point `z` (Clarkson's method). Each candidate is tested against
/// the rows already known to be needed; a failed test yields a point outside
/// it, and the first row crossed on the segment from `z` to that point is
/// needed. The tests run in coordinates centred on `z`, where the origin is
/// feasible, and each one starts from the basis the previous one ended in.
fn irredundant(dim: usize, rows: &[LinearConstraint], z: &[Rational]) -> Result<Vec<bool>> {
    let mut status = alloc::vec![Status::Unknown; rows.len()];
    let mut needed: Vec<usize> = Vec::new();
    let slack: Vec<Rational> = rows
        .iter()
        .map(|r| r.rational_rhs() - r.lhs_at(z))
        .collect();
    let coeffs: Vec<Vec<Rational>> = rows.iter().map(LinearConstraint::rational_coeffs).collect();
    let columns: Vec<usize> = (0..dim)
        .filter(|&k| coeffs.iter().any(|a| !a[k].is_zero()))
        .collect();
    let centred = |needed: &[usize]| {
        let test: Vec<(&[Rational], &Rational)> = needed
            .iter()
            .map(|&j| (&coeffs[j][..], &slack[j]))
            .collect();
        Centred::new(&columns, &test)
    };
    let mut lp = centred(&needed);
    for i in 0..rows.len() {
        while status[i] == Status::Unknown {
            let Some(mut step) = lp.exceed(&coeffs[i], &slack[i]) else {
                status[i] = Status::Redundant;
                break;
            };
            step.resize(dim, Rational::zero());
            let mut first: Option<(Rational, Vec<usize>)> = None;
            for j in 0..rows.len() {
                if status[j] == Status::Redundant {
                    continue;
                }
                let rate = dot(&coeffs[j], &step);
                if !rate.is_positive() {
                    continue;
                }
                let t = &slack[j] / rate;
                match &mut first {
                    Some((best, hits)) if t == *best => hits.push(j),
                    Some((best, _)) if t > *best => {}
                    _ => first = Some((t, alloc::vec![j])),
                }
            }
            let (_, hits) = first.expect("candidate row is crossed");
            if let [h] = hits[..] {
                status[h] = Status::Needed;
                needed.push(h);
                lp = centred(&needed);
                continue;
            }
            // degenerate crossing: decide against every other live row
            let others = rows
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i && status[j] != Status::Redundant)
                .map(|(_, c)| c.clone());
            let rest = ConstraintSystem::from_constraints(dim, others)?;
            if entails(&rest, &rows[i])? {
                status[i] = Status::Redundant;
            } else {
                status[i] = Status::Needed;
                needed.push(i);
                lp = centred(&needed);
            }
        }
    }
    Ok(status.into_iter().map(|s| s == Status::Needed).collect())
}

/// An irredundant system denoting the same set.
///
/// Implicit equalities are made explicit and kept in reduced echelon form;
/// the remaining inequalities are rewritten over the non-pivot variables,
/// where they describe a full-dimensional set, so their irredundant subset
/// is unique. The result is sorted canonically.
pub fn minimize_system(sys: &ConstraintSystem) -> Result<ConstraintSystem> {
    if !is_satisfiable(sys) {
        return Err(Error::UnsatisfiableInput);
    }
    let dim = sys.dim();
    let mut eqs: Vec<LinearConstraint> = Vec::new();
    let mut ineqs: Vec<LinearConstraint> = Vec::new();
    for r in sys.rows() {
        if r.is_equality() {
            eqs.push(r.clone());
        } else {
            ineqs.push(r.clone());
        }
    }

    let strict = if ineqs.is_empty() || interior_point(dim, &eqs, &ineqs)?.is_some() {
        ineqs
    } else {
        let (tight, slack) = split_implicit(sys, ineqs)?;
        for r in tight {
            let eq =
                LinearConstraint::from_integers(r.coeffs().to_vec(), Relation::Eq, r.rhs().clone());
            eqs.extend(eq.constraint());
        }
        slack
    };

    let basis = echelon(dim, &eqs).ok_or(Error::UnsatisfiableInput)?;
    let mut eq_rows = Vec::with_capacity(basis.len());
    for (_, a, b) in &basis {
        if let Normalized::Constraint(c) = integer_row(a, Relation::Eq, b) {
            eq_rows.push(c);
        }
    }

    let mut reduced = Vec::with_capacity(strict.len());
    for r in &strict {
        let mut a = r.rational_coeffs();
        let mut b = r.rational_rhs();
        for (pivot, ea, eb) in &basis {
            let f = a[*pivot].clone();
            if f.is_zero() {
                continue;
            }
            for (v, w) in a.iter_mut().zip(ea) {
                *v -= &f * w;
            }
            b -= &f * eb;
        }
        match integer_row(&a, Relation::Le, &b) {
            Normalized::Constraint(c) => reduced.push(c),
            Normalized::TriviallyTrue => {}
            Normalized::TriviallyFalse => return Err(Error::UnsatisfiableInput),
        }
    }
    let mut reduced = drop_parallel(reduced);
    reduced.sort();

    let kept = if reduced.len() <= 1 {
        alloc::vec![true; reduced.len()]
    } else {
        let z = interior_point(dim, &[], &reduced)?.expect("no implicit equalities remain");
        irredundant(dim, &reduced, &z)?
    };
    let rows = eq_rows.into_iter().chain(
        reduced
            .into_iter()
            .zip(kept)
            .filter(|(_, k)| *k)
            .map(|(c, _)| c),
    );
    Ok(ConstraintSystem::from_constraints(dim, rows)?.canonical())
}
