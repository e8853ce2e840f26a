//! Closure of the convex hull of two polyhedra, computed entirely on
//! constraints.
//!
//! For `P1 = {A1 x <= B1}` and `P2 = {A2 x <= B2}` over `n` variables the
//! relaxation lives in `3n + 2` dimensions laid out as
//! `[z (n) | y1 (n) | y2 (n) | σ1 | σ2]`:
//!
//! ```text
//! A1 y1 <= σ1 B1      A2 y2 <= σ2 B2
//! z = y1 + y2         σ1 + σ2 = 1        σ1 >= 0, σ2 >= 0
//! ```
//!
//! Projecting onto `z` yields `cl(conv(P1 ∪ P2))`. At `σ1 = 0` the first
//! block reads `A1 y1 <= 0`, i.e. `y1` ranges over the recession cone of
//! `P1`, which is what makes the result closed. Dropping the `σ >= 0` rows
//! gives a strictly weaker (wrong) relaxation; it is kept reachable for
//! comparison.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::lp::{is_empty, minimize_system};
use crate::model::{ConstraintSystem, LinearConstraint, Polyhedron, Relation};
use crate::projection::project_system;
use crate::{Error, Result};

/// Where each source dimension lands in an enlarged space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub target_dim: usize,
    pub map: Vec<usize>,
}

impl Embedding {
    /// Source dimension `i` goes to `offset + i`.
    pub fn shifted(source_dim: usize, offset: usize, target_dim: usize) -> Self {
        Embedding {
            target_dim,
            map: (offset..offset + source_dim).collect(),
        }
    }
}

/// Dimension layout of a relaxation over `n` variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Layout {
    pub n: usize,
}

impl Layout {
    pub fn dim(self) -> usize {
        3 * self.n + 2
    }
    pub fn z(self, i: usize) -> usize {
        i
    }
    pub fn y1(self, i: usize) -> usize {
        self.n + i
    }
    pub fn y2(self, i: usize) -> usize {
        2 * self.n + i
    }
    pub fn sigma1(self) -> usize {
        3 * self.n
    }
    pub fn sigma2(self) -> usize {
        3 * self.n + 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelaxationSystem {
    pub system: ConstraintSystem,
    pub layout: Layout,
    pub include_sigma_bounds: bool,
}

/// Embed each row `a·x REL b` as `a·y - b·σ REL 0`: the constant moves onto
/// the σ column, variable coefficients are untouched.
pub fn scale_system(
    sys: &ConstraintSystem,
    sigma_dim: usize,
    embed: &Embedding,
) -> Vec<LinearConstraint> {
    assert_eq!(
        embed.map.len(),
        sys.dim(),
        "embedding covers every source dimension"
    );
    assert!(
        !embed.map.contains(&sigma_dim),
        "σ must lie outside the embedded range"
    );
    sys.rows()
        .iter()
        .map(|r| {
            let mut coeffs = r.embedded(&embed.map, embed.target_dim).coeffs().to_vec();
            coeffs[sigma_dim] = -r.rhs();
            LinearConstraint::from_integers(coeffs, r.rel(), BigInt::zero())
                .constraint()
                .expect("variable coefficients are nonzero")
        })
        .collect()
}

fn unit_row(dim: usize, entries: &[(usize, i64)], rel: Relation, rhs: i64) -> LinearConstraint {
    let mut coeffs = alloc::vec![BigInt::zero(); dim];
    for &(i, v) in entries {
        coeffs[i] = BigInt::from(v);
    }
    LinearConstraint::from_integers(coeffs, rel, BigInt::from(rhs))
        .constraint()
        .expect("nonzero row")
}

/// The lifted system whose projection onto `z` is the closed hull.
pub fn build_relaxation(
    p1: &Polyhedron,
    p2: &Polyhedron,
    include_sigma_bounds: bool,
) -> Result<RelaxationSystem> {
    Error::check_dim(p1.dim(), p2.dim())?;
    let (Some(s1), Some(s2)) = (p1.system(), p2.system()) else {
        return Err(Error::EmptyOperand);
    };
    let layout = Layout { n: p1.dim() };
    let dim = layout.dim();
    let mut rows = scale_system(
        s1,
        layout.sigma1(),
        &Embedding::shifted(layout.n, layout.y1(0), dim),
    );
    rows.extend(scale_system(
        s2,
        layout.sigma2(),
        &Embedding::shifted(layout.n, layout.y2(0), dim),
    ));
    for i in 0..layout.n {
        rows.push(unit_row(
            dim,
            &[(layout.z(i), 1), (layout.y1(i), -1), (layout.y2(i), -1)],
            Relation::Eq,
            0,
        ));
    }
    rows.push(unit_row(
        dim,
        &[(layout.sigma1(), 1), (layout.sigma2(), 1)],
        Relation::Eq,
        1,
    ));
    if include_sigma_bounds {
        rows.push(unit_row(dim, &[(layout.sigma1(), -1)], Relation::Le, 0));
        rows.push(unit_row(dim, &[(layout.sigma2(), -1)], Relation::Le, 0));
    }
    Ok(RelaxationSystem {
        system: ConstraintSystem::from_constraints(dim, rows)?,
        layout,
        include_sigma_bounds,
    })
}

/// Project a relaxation onto its `z` block.
pub fn project_relaxation(
    relax: &RelaxationSystem,
    minimize: bool,
) -> Result<Option<ConstraintSystem>> {
    let keep: Vec<usize> = (0..relax.layout.n).map(|i| relax.layout.z(i)).collect();
    project_system(&relax.system, &keep, minimize)
}

/// `cl(conv(P1 ∪ P2))`, labelled with `p1`'s variable names and minimized.
/// An empty operand is the identity.
pub fn convex_hull_closure(p1: &Polyhedron, p2: &Polyhedron) -> Result<Polyhedron> {
    hull_with(p1, p2, true)
}

/// As [`convex_hull_closure`], but without the final redundancy removal.
pub fn convex_hull_closure_raw(p1: &Polyhedron, p2: &Polyhedron) -> Result<Polyhedron> {
    hull_with(p1, p2, false)
}

fn hull_with(p1: &Polyhedron, p2: &Polyhedron, minimize: bool) -> Result<Polyhedron> {
    Error::check_dim(p1.dim(), p2.dim())?;
    let vars = p1.vars().clone();
    let finish = |s: &ConstraintSystem| -> Result<Polyhedron> {
        let s = if minimize {
            minimize_system(s)?
        } else {
            s.clone().canonical()
        };
        Polyhedron::new(vars.clone(), s)
    };
    match (is_empty(p1), is_empty(p2)) {
        (true, true) => return Ok(Polyhedron::empty(vars)),
        (true, false) => return finish(p2.system().expect("nonempty")),
        (false, true) => return finish(p1.system().expect("nonempty")),
        (false, false) => {}
    }
    let relax = build_relaxation(p1, p2, true)?;
    Polyhedron::from_option(vars, project_relaxation(&relax, minimize)?)
}

/// Left fold of [`convex_hull_closure`].
pub fn hull_many(ps: &[Polyhedron]) -> Result<Polyhedron> {
    hull_many_with(ps, true)
}

pub fn hull_many_raw(ps: &[Polyhedron]) -> Result<Polyhedron> {
    hull_many_with(ps, false)
}

fn hull_many_with(ps: &[Polyhedron], minimize: bool) -> Result<Polyhedron> {
    let (first, rest) = ps.split_first().ok_or(Error::EmptyList)?;
    for p in rest {
        Error::check_dim(first.dim(), p.dim())?;
    }
    if rest.is_empty() {
        return hull_with(first, &Polyhedron::empty(first.vars().clone()), minimize);
    }
    let mut acc = first.clone();
    for p in rest {
        acc = hull_with(&acc, p, minimize)?;
    }
    Ok(acc)
}

/// `0⁺P = {d | A d <= 0}`: every row with its constant set to zero.
pub fn recession_cone(p: &Polyhedron) -> Result<Polyhedron> {
    if is_empty(p) {
        return Err(Error::EmptyOperand);
    }
    let sys = p.system().expect("nonempty");
    let rows = sys.rows().iter().map(LinearConstraint::homogenized);
    let cone = ConstraintSystem::from_constraints(sys.dim(), rows)?.canonical();
    Polyhedron::new(p.vars().clone(), cone)
}
