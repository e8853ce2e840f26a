//! Value types: rationals, variable orders, normalized constraints,
//! constraint systems and polyhedra.
//!
//! Variables are positional. A [`VarOrder`] attaches names to positions and
//! is only consulted at the I/O boundary; every algorithm works on dimension
//! indices.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Deref;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`; panics when `den` is zero.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Ordered list of distinct variable names. Position `i` is dimension `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarOrder {
    names: Vec<String>,
}

impl VarOrder {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(VarOrder { names })
    }

    /// `prefix1, prefix2, ..., prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        let mut names = Vec::with_capacity(n);
        for i in 1..=n {
            let mut name = String::from(prefix);
            name.push_str(&i.to_string());
            names.push(name);
        }
        VarOrder { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Positions of `names` in this order, rejecting unknown and repeated
    /// names.
    pub fn indices_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            let idx = self
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.into()))?;
            if out.contains(&idx) {
                return Err(Error::DuplicateVariable(name.into()));
            }
            out.push(idx);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Le,
    Eq,
}

/// Relations accepted before normalization. `Ge` never survives
/// [`normalize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RawRelation {
    Le,
    Eq,
    Ge,
}

/// A flattened but not yet normalized constraint `coeffs · x REL rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawConstraint {
    pub coeffs: Vec<Rational>,
    pub rel: RawRelation,
    pub rhs: Rational,
}

impl RawConstraint {
    pub fn new(coeffs: Vec<Rational>, rel: RawRelation, rhs: Rational) -> Self {
        RawConstraint { coeffs, rel, rhs }
    }

    pub fn ints(coeffs: &[i64], rel: RawRelation, rhs: i64) -> Self {
        RawConstraint {
            coeffs: coeffs.iter().map(|&c| integer(c)).collect(),
            rel,
            rhs: integer(rhs),
        }
    }

    pub fn is_satisfied_by(&self, point: &[Rational]) -> bool {
        let lhs = dot(&self.coeffs, point);
        match self.rel {
            RawRelation::Le => lhs <= self.rhs,
            RawRelation::Eq => lhs == self.rhs,
            RawRelation::Ge => lhs >= self.rhs,
        }
    }
}

/// Result of normalizing a raw constraint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalized {
    Constraint(LinearConstraint),
    TriviallyTrue,
    TriviallyFalse,
}

impl Normalized {
    pub fn constraint(self) -> Option<LinearConstraint> {
        match self {
            Normalized::Constraint(c) => Some(c),
            _ => None,
        }
    }
}

/// Bring a raw constraint to canonical form: `Ge` flipped to `Le`, all
/// numbers scaled to integers with overall gcd 1, and the leading nonzero
/// coefficient of an equality made positive.
pub fn normalize(raw: &RawConstraint) -> Normalized {
    let negate = raw.rel == RawRelation::Ge;
    let rel = match raw.rel {
        RawRelation::Eq => Relation::Eq,
        RawRelation::Le | RawRelation::Ge => Relation::Le,
    };
    let mut denom = BigInt::one();
    for q in raw.coeffs.iter().chain(core::iter::once(&raw.rhs)) {
        denom = denom.lcm(q.denom());
    }
    let scale = |q: &Rational| {
        let v = q.numer() * (&denom / q.denom());
        if negate {
            -v
        } else {
            v
        }
    };
    let coeffs: Vec<BigInt> = raw.coeffs.iter().map(scale).collect();
    let rhs = scale(&raw.rhs);
    LinearConstraint::from_integers(coeffs, rel, rhs)
}

/// Normalized linear constraint `coeffs · x REL rhs` with integer data.
///
/// Invariants: at least one coefficient is nonzero; gcd of all coefficients
/// and the rhs is 1; for `Eq` the first nonzero coefficient is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearConstraint {
    coeffs: Vec<BigInt>,
    rel: Relation,
    rhs: BigInt,
}

impl LinearConstraint {
    /// Canonicalize integer data. Total: all-zero rows resolve to
    /// `TriviallyTrue`/`TriviallyFalse`.
    pub fn from_integers(mut coeffs: Vec<BigInt>, rel: Relation, mut rhs: BigInt) -> Normalized {
        if coeffs.iter().all(Zero::is_zero) {
            let holds = match rel {
                Relation::Le => !rhs.is_negative(),
                Relation::Eq => rhs.is_zero(),
            };
            return if holds {
                Normalized::TriviallyTrue
            } else {
                Normalized::TriviallyFalse
            };
        }
        let mut g = rhs.abs();
        for c in &coeffs {
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in coeffs.iter_mut() {
                *c /= &g;
            }
            rhs /= &g;
        }
        if rel == Relation::Eq && leading(&coeffs).is_negative() {
            for c in coeffs.iter_mut() {
                *c = -&*c;
            }
            rhs = -rhs;
        }
        Normalized::Constraint(LinearConstraint { coeffs, rel, rhs })
    }

    /// Convenience for literal data; panics if the row is trivial.
    pub fn ints(coeffs: &[i64], rel: RawRelation, rhs: i64) -> Self {
        normalize(&RawConstraint::ints(coeffs, rel, rhs))
            .constraint()
            .expect("trivial constraint literal")
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn rel(&self) -> Relation {
        self.rel
    }

    pub fn rhs(&self) -> &BigInt {
        &self.rhs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_equality(&self) -> bool {
        self.rel == Relation::Eq
    }

    pub fn coeff(&self, index: usize) -> &BigInt {
        &self.coeffs[index]
    }

    pub fn rational_coeffs(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .cloned()
            .map(Rational::from_integer)
            .collect()
    }

    pub fn rational_rhs(&self) -> Rational {
        Rational::from_integer(self.rhs.clone())
    }

    pub fn lhs_at(&self, point: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .zip(point)
            .fold(Rational::zero(), |acc, (a, x)| acc + x * a)
    }

    pub fn is_satisfied_by(&self, point: &[Rational]) -> bool {
        let lhs = self.lhs_at(point);
        let rhs = self.rational_rhs();
        match self.rel {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    /// Same row with its constant replaced by zero.
    pub fn homogenized(&self) -> LinearConstraint {
        match LinearConstraint::from_integers(self.coeffs.clone(), self.rel, BigInt::zero()) {
            Normalized::Constraint(c) => c,
            // nonzero coefficients survive homogenization
            _ => unreachable!(),
        }
    }

    /// `coeffs · x ≥ rhs` written as a normalized `Le` row; `None` for
    /// equalities.
    pub fn reversed(&self) -> Option<LinearConstraint> {
        if self.is_equality() {
            return None;
        }
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        LinearConstraint::from_integers(coeffs, Relation::Le, -&self.rhs).constraint()
    }

    /// Split into `Le` rows: itself, or both halves of an equality.
    pub fn as_inequalities(&self) -> Vec<LinearConstraint> {
        match self.rel {
            Relation::Le => alloc::vec![self.clone()],
            Relation::Eq => {
                let le = LinearConstraint {
                    coeffs: self.coeffs.clone(),
                    rel: Relation::Le,
                    rhs: self.rhs.clone(),
                };
                let ge = le.reversed().expect("inequality");
                alloc::vec![le, ge]
            }
        }
    }

    /// Copy of this row with coefficients placed at `embed[i]` in a space of
    /// `target_dim` dimensions.
    pub fn embedded(&self, embed: &[usize], target_dim: usize) -> LinearConstraint {
        debug_assert_eq!(embed.len(), self.dim());
        let mut coeffs = alloc::vec![BigInt::zero(); target_dim];
        for (c, &to) in self.coeffs.iter().zip(embed) {
            coeffs[to] = c.clone();
        }
        LinearConstraint {
            coeffs,
            rel: self.rel,
            rhs: self.rhs.clone(),
        }
    }

    /// The row as it is printed: `Le` rows whose leading coefficient is
    /// negative read as `≥` after negation.
    pub fn display_form(&self) -> (Vec<BigInt>, DisplayRel, BigInt) {
        match self.rel {
            Relation::Eq => (self.coeffs.clone(), DisplayRel::Eq, self.rhs.clone()),
            Relation::Le if leading(&self.coeffs).is_negative() => (
                self.coeffs.iter().map(|c| -c).collect(),
                DisplayRel::Ge,
                -&self.rhs,
            ),
            Relation::Le => (self.coeffs.clone(), DisplayRel::Le, self.rhs.clone()),
        }
    }
}

/// Relation symbol used when a constraint is rendered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DisplayRel {
    Eq,
    Le,
    Ge,
}

impl DisplayRel {
    pub fn symbol(self) -> &'static str {
        match self {
            DisplayRel::Eq => "=",
            DisplayRel::Le => "<=",
            DisplayRel::Ge => ">=",
        }
    }
}

fn leading(coeffs: &[BigInt]) -> &BigInt {
    coeffs
        .iter()
        .find(|c| !c.is_zero())
        .expect("nonzero coefficient")
}

impl Ord for LinearConstraint {
    /// Canonical output order: by first variable used, then number of
    /// variables, then the printed coefficients (descending), then `=`,
    /// `<=`, `>=`, then the constant.
    fn cmp(&self, other: &Self) -> Ordering {
        let (da, ra, ba) = self.display_form();
        let (db, rb, bb) = other.display_form();
        let first = |d: &[BigInt]| d.iter().position(|c| !c.is_zero());
        let nnz = |d: &[BigInt]| d.iter().filter(|c| !c.is_zero()).count();
        first(&da)
            .cmp(&first(&db))
            .then_with(|| nnz(&da).cmp(&nnz(&db)))
            .then_with(|| db.cmp(&da))
            .then_with(|| ra.cmp(&rb))
            .then_with(|| ba.cmp(&bb))
    }
}

impl PartialOrd for LinearConstraint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Conjunction of normalized constraints over `dim` dimensions. Row order
/// carries no meaning. An empty row list denotes the whole space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConstraintSystem {
    dim: usize,
    rows: Vec<LinearConstraint>,
}

impl ConstraintSystem {
    pub fn new(dim: usize) -> Self {
        ConstraintSystem {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn from_constraints<I>(dim: usize, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = LinearConstraint>,
    {
        let mut sys = ConstraintSystem::new(dim);
        for row in rows {
            sys.push(row)?;
        }
        Ok(sys)
    }

    /// Normalize raw rows. `Ok(None)` when some row is trivially false.
    pub fn from_raw<'a, I>(dim: usize, raws: I) -> Result<Option<Self>>
    where
        I: IntoIterator<Item = &'a RawConstraint>,
    {
        let mut sys = ConstraintSystem::new(dim);
        for raw in raws {
            Error::check_dim(dim, raw.coeffs.len())?;
            match normalize(raw) {
                Normalized::Constraint(c) => sys.rows.push(c),
                Normalized::TriviallyTrue => {}
                Normalized::TriviallyFalse => return Ok(None),
            }
        }
        Ok(Some(sys))
    }

    pub fn push(&mut self, row: LinearConstraint) -> Result<()> {
        Error::check_dim(self.dim, row.dim())?;
        self.rows.push(row);
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[LinearConstraint] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<LinearConstraint> {
        self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// No rows at all, i.e. the whole space.
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_satisfied_by(&self, point: &[Rational]) -> bool {
        self.rows.iter().all(|c| c.is_satisfied_by(point))
    }

    /// Rows sorted canonically with exact duplicates removed.
    pub fn canonical(mut self) -> Self {
        self.rows.sort();
        self.rows.dedup();
        self
    }

    /// Conjunction of two systems of equal dimension.
    pub fn and(&self, other: &ConstraintSystem) -> Result<Self> {
        Error::check_dim(self.dim, other.dim)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(ConstraintSystem {
            dim: self.dim,
            rows,
        })
    }

    /// Keep dimensions `keep` (in that order) and drop the rest. Every row
    /// must have zero coefficients on the dropped dimensions.
    pub fn restricted(&self, keep: &[usize]) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                debug_assert!((0..self.dim)
                    .filter(|d| !keep.contains(d))
                    .all(|d| r.coeff(d).is_zero()));
                LinearConstraint {
                    coeffs: keep.iter().map(|&k| r.coeff(k).clone()).collect(),
                    rel: r.rel,
                    rhs: r.rhs.clone(),
                }
            })
            .collect();
        ConstraintSystem {
            dim: keep.len(),
            rows,
        }
    }
}

/// A concrete point, one rational per dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint(pub Vec<Rational>);

impl RationalPoint {
    pub fn from_ints(coords: &[i64]) -> Self {
        RationalPoint(coords.iter().map(|&c| integer(c)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        RationalPoint(alloc::vec![Rational::zero(); dim])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }
}

impl Deref for RationalPoint {
    type Target = [Rational];

    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl From<Vec<Rational>> for RationalPoint {
    fn from(v: Vec<Rational>) -> Self {
        RationalPoint(v)
    }
}

/// A closed polyhedron: a constraint system read over an ordered variable
/// list, or the canonical empty value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polyhedron {
    vars: VarOrder,
    system: Option<ConstraintSystem>,
}

impl Polyhedron {
    pub fn new(vars: VarOrder, system: ConstraintSystem) -> Result<Self> {
        Error::check_dim(vars.len(), system.dim())?;
        Ok(Polyhedron {
            vars,
            system: Some(system),
        })
    }

    pub fn empty(vars: VarOrder) -> Self {
        Polyhedron { vars, system: None }
    }

    pub fn universe(vars: VarOrder) -> Self {
        let dim = vars.len();
        Polyhedron {
            vars,
            system: Some(ConstraintSystem::new(dim)),
        }
    }

    /// `None` becomes the empty polyhedron.
    pub fn from_option(vars: VarOrder, system: Option<ConstraintSystem>) -> Result<Self> {
        match system {
            Some(s) => Polyhedron::new(vars, s),
            None => Ok(Polyhedron::empty(vars)),
        }
    }

    pub fn from_raw(vars: VarOrder, raws: &[RawConstraint]) -> Result<Self> {
        let sys = ConstraintSystem::from_raw(vars.len(), raws)?;
        Polyhedron::from_option(vars, sys)
    }

    pub fn vars(&self) -> &VarOrder {
        &self.vars
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    /// The constraint rows, or `None` for the empty value.
    pub fn system(&self) -> Option<&ConstraintSystem> {
        self.system.as_ref()
    }

    /// True for the canonical empty value only; an unsatisfiable system that
    /// has not been checked yet is not marked.
    pub fn is_marked_empty(&self) -> bool {
        self.system.is_none()
    }

    /// Exact membership. The empty value contains nothing.
    pub fn satisfies(&self, point: &[Rational]) -> Result<bool> {
        Error::check_dim(self.dim(), point.len())?;
        Ok(match &self.system {
            Some(s) => s.is_satisfied_by(point),
            None => false,
        })
    }

    /// Same coefficient data under new variable names.
    pub fn rename(&self, fresh: VarOrder) -> Result<Self> {
        Error::check_dim(self.dim(), fresh.len())?;
        Ok(Polyhedron {
            vars: fresh,
            system: self.system.clone(),
        })
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn grid(lo: i64, hi: i64, den: i64, n: usize) -> Vec<Vec<Rational>> {
        let axis: Vec<Rational> = (lo * den..=hi * den).map(|k| rational(k, den)).collect();
        let mut pts: Vec<Vec<Rational>> = vec![vec![]];
        for _ in 0..n {
            pts = pts
                .into_iter()
                .flat_map(|p| {
                    axis.iter().map(move |a| {
                        let mut q = p.clone();
                        q.push(a.clone());
                        q
                    })
                })
                .collect();
        }
        pts
    }

    #[test]
    fn ge_flips_to_le() {
        // x + 2 >= 1 + y  ~  x - y >= -1
        let raw = RawConstraint::ints(&[1, -1], RawRelation::Ge, -1);
        let c = normalize(&raw).constraint().unwrap();
        assert_eq!(c, LinearConstraint::ints(&[-1, 1], RawRelation::Le, 1));
        assert_eq!(c.coeffs(), &[BigInt::from(-1), BigInt::from(1)]);
        assert_eq!(c.rel(), Relation::Le);
        assert_eq!(c.rhs(), &BigInt::from(1));
    }

    #[test]
    fn zero_rows_resolve() {
        let t = RawConstraint::ints(&[0, 0], RawRelation::Le, 0);
        assert_eq!(normalize(&t), Normalized::TriviallyTrue);
        let f = RawConstraint::ints(&[0], RawRelation::Le, -1);
        assert_eq!(normalize(&f), Normalized::TriviallyFalse);
        let f = RawConstraint::ints(&[0], RawRelation::Eq, 2);
        assert_eq!(normalize(&f), Normalized::TriviallyFalse);
        let t = RawConstraint::ints(&[0], RawRelation::Ge, -3);
        assert_eq!(normalize(&t), Normalized::TriviallyTrue);
    }

    #[test]
    fn fractions_scale_to_integers() {
        let raw = RawConstraint::new(vec![rational(1, 2)], RawRelation::Le, rational(3, 4));
        let c = normalize(&raw).constraint().unwrap();
        assert_eq!(c, LinearConstraint::ints(&[2], RawRelation::Le, 3));
        // same halfline on a grid of quarters
        for p in grid(-3, 3, 4, 1) {
            assert_eq!(raw.is_satisfied_by(&p), c.is_satisfied_by(&p));
        }
    }

    #[test]
    fn equality_leading_positive() {
        let c = LinearConstraint::ints(&[0, -2, 4], RawRelation::Eq, 6);
        assert_eq!(c.coeffs(), &[0.into(), 1.into(), BigInt::from(-2)]);
        assert_eq!(c.rhs(), &BigInt::from(-3));
    }

    #[test]
    fn membership_examples() {
        let vars = VarOrder::new(["x", "y"]).unwrap();
        let p1 = Polyhedron::from_raw(
            vars.clone(),
            &[
                RawConstraint::ints(&[1, 0], RawRelation::Eq, 0),
                RawConstraint::ints(&[0, 1], RawRelation::Eq, 1),
            ],
        )
        .unwrap();
        assert!(p1.satisfies(&RationalPoint::from_ints(&[0, 1])).unwrap());
        assert!(!p1.satisfies(&RationalPoint::from_ints(&[0, 0])).unwrap());

        let empty = Polyhedron::empty(vars.clone());
        assert!(!empty.satisfies(&RationalPoint::from_ints(&[0, 1])).unwrap());

        // 0 <= x, x <= y, y <= x + 1
        let strip = Polyhedron::from_raw(
            vars,
            &[
                RawConstraint::ints(&[1, 0], RawRelation::Ge, 0),
                RawConstraint::ints(&[1, -1], RawRelation::Le, 0),
                RawConstraint::ints(&[-1, 1], RawRelation::Le, 1),
            ],
        )
        .unwrap();
        assert!(strip.satisfies(&RationalPoint::from_ints(&[1, 2])).unwrap());
        assert_eq!(
            strip.satisfies(&RationalPoint::from_ints(&[1])),
            Err(Error::Dimension {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn trivially_false_row_empties_polyhedron() {
        let vars = VarOrder::new(["x"]).unwrap();
        let p = Polyhedron::from_raw(
            vars,
            &[
                RawConstraint::ints(&[1], RawRelation::Le, 3),
                RawConstraint::ints(&[0], RawRelation::Ge, 1),
            ],
        )
        .unwrap();
        assert!(p.is_marked_empty());
    }

    #[test]
    fn rename_relabels_only() {
        let p = Polyhedron::from_raw(
            VarOrder::new(["x", "y"]).unwrap(),
            &[RawConstraint::ints(&[1, 1], RawRelation::Le, 1)],
        )
        .unwrap();
        let q = p.rename(VarOrder::new(["u", "v"]).unwrap()).unwrap();
        assert_eq!(q.vars().names(), ["u", "v"]);
        assert_eq!(q.system(), p.system());
        let back = q.rename(p.vars().clone()).unwrap();
        assert_eq!(back, p);
        assert!(p.rename(VarOrder::new(["u"]).unwrap()).is_err());
    }

    #[test]
    fn var_order_rejects_duplicates() {
        assert_eq!(
            VarOrder::new(["x", "y", "x"]),
            Err(Error::DuplicateVariable("x".into()))
        );
        let v = VarOrder::new(["a", "b", "c"]).unwrap();
        assert_eq!(v.indices_of(&["c", "a"]).unwrap(), vec![2, 0]);
        assert_eq!(
            v.indices_of(&["d"]),
            Err(Error::UnknownVariable("d".into()))
        );
    }

    #[test]
    fn canonical_order_matches_printed_form() {
        // x >= 0, x - y <= 0, x - y >= -1
        let a = LinearConstraint::ints(&[-1, 1], RawRelation::Le, 1);
        let b = LinearConstraint::ints(&[1, -1], RawRelation::Le, 0);
        let c = LinearConstraint::ints(&[1, 0], RawRelation::Ge, 0);
        let sys = ConstraintSystem::from_constraints(2, vec![a.clone(), b.clone(), c.clone()])
            .unwrap()
            .canonical();
        assert_eq!(sys.rows(), &[c, b, a]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn raw_strategy() -> impl Strategy<Value = RawConstraint> {
            let q = (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rational(n, d));
            (
                proptest::collection::vec(q.clone(), 2),
                prop_oneof![
                    Just(RawRelation::Le),
                    Just(RawRelation::Eq),
                    Just(RawRelation::Ge)
                ],
                q,
            )
                .prop_map(|(coeffs, rel, rhs)| RawConstraint::new(coeffs, rel, rhs))
        }

        fn raw_of(c: &LinearConstraint) -> RawConstraint {
            RawConstraint::new(
                c.rational_coeffs(),
                match c.rel() {
                    Relation::Le => RawRelation::Le,
                    Relation::Eq => RawRelation::Eq,
                },
                c.rational_rhs(),
            )
        }

        proptest! {
            #[test]
            fn normalize_is_idempotent(raw in raw_strategy()) {
                if let Normalized::Constraint(c) = normalize(&raw) {
                    prop_assert_eq!(normalize(&raw_of(&c)), Normalized::Constraint(c));
                }
            }

            #[test]
            fn normalize_preserves_membership(raw in raw_strategy()) {
                let n = normalize(&raw);
                for p in grid(-2, 2, 2, 2) {
                    let expected = raw.is_satisfied_by(&p);
                    let got = match &n {
                        Normalized::Constraint(c) => c.is_satisfied_by(&p),
                        Normalized::TriviallyTrue => true,
                        Normalized::TriviallyFalse => false,
                    };
                    prop_assert_eq!(expected, got);
                }
            }

            #[test]
            fn membership_ignores_row_order(
                raws in proptest::collection::vec(raw_strategy(), 1..6),
                seed in 0usize..720,
            ) {
                let vars = VarOrder::new(["x", "y"]).unwrap();
                let a = Polyhedron::from_raw(vars.clone(), &raws).unwrap();
                let mut shuffled = raws.clone();
                let len = shuffled.len();
                shuffled.rotate_left(seed % len);
                shuffled.swap(0, seed % len);
                let b = Polyhedron::from_raw(vars, &shuffled).unwrap();
                for p in grid(-2, 2, 1, 2) {
                    prop_assert_eq!(a.satisfies(&p).unwrap(), b.satisfies(&p).unwrap());
                }
            }

            #[test]
            fn rename_preserves_membership(raws in proptest::collection::vec(raw_strategy(), 1..5)) {
                let p = Polyhedron::from_raw(VarOrder::new(["x", "y"]).unwrap(), &raws).unwrap();
                let q = p.rename(VarOrder::new(["y", "x"]).unwrap()).unwrap();
                for pt in grid(-2, 2, 1, 2) {
                    prop_assert_eq!(p.satisfies(&pt).unwrap(), q.satisfies(&pt).unwrap());
                }
            }
        }
    }
}
