//! Data model for multi-objective binary optimization instances.
//!
//! An [`Instance`] minimizes `p` linear objectives (rows of an
//! [`ObjectiveMatrix`]) over the binary vectors satisfying a list of
//! [`LinearConstraint`]s; no constraints means `X = {0,1}^n`. Objective-space
//! values are [`Point`]s with exact 128-bit coordinates — any sum of `i64`
//! coefficients over fewer than 2^63 binary variables fits.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// Sign classification of a coefficient vector, derived from its entries.
///
/// A vector with any zero entry is `ContainsZero`; otherwise a vector with
/// any negative entry is `Mixed` (this includes all-negative vectors, which
/// take the same signed contraction path); otherwise `AllPositive`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignClass {
    AllPositive,
    Mixed,
    ContainsZero,
}

/// One objective's integer coefficients.
///
/// Sortedness is *not* an invariant: sorting is an explicit preprocessing
/// step of the contraction driver, which also records how to undo it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoefficientVector {
    coeffs: Vec<i64>,
}

impl CoefficientVector {
    /// Wraps a non-empty coefficient list.
    pub fn new(coeffs: Vec<i64>) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 1 by construction
    }

    /// Recomputes the sign class from the entries.
    pub fn sign_class(&self) -> SignClass {
        if self.coeffs.iter().any(|&c| c == 0) {
            SignClass::ContainsZero
        } else if self.coeffs.iter().any(|&c| c < 0) {
            SignClass::Mixed
        } else {
            SignClass::AllPositive
        }
    }

    /// Sum of absolute values, exact.
    pub fn sum_abs(&self) -> i128 {
        self.coeffs.iter().map(|&c| (c as i128).abs()).sum()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> i64 {
        self.coeffs
            .iter()
            .map(|&c| c.unsigned_abs())
            .max()
            .expect("non-empty") as i64
    }

    /// Objective value `c·x` for a binary assignment, exact.
    pub fn value_of(&self, x: &[u8]) -> Result<i128, Error> {
        if x.len() != self.coeffs.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coeffs.len(),
                got: x.len(),
            });
        }
        Ok(self
            .coeffs
            .iter()
            .zip(x)
            .filter(|(_, &xi)| xi != 0)
            .map(|(&c, _)| c as i128)
            .sum())
    }
}

impl TryFrom<Vec<i64>> for CoefficientVector {
    type Error = Error;

    fn try_from(coeffs: Vec<i64>) -> Result<Self, Error> {
        Self::new(coeffs)
    }
}

/// The objective coefficient matrix: one [`CoefficientVector`] row per
/// objective, all of equal length `n`.
///
/// Single-objective matrices are permitted; the contraction is valid for
/// single-objective problems as well.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectiveMatrix {
    rows: Vec<CoefficientVector>,
}

impl ObjectiveMatrix {
    pub fn new(rows: Vec<CoefficientVector>) -> Result<Self, Error> {
        let first = rows.first().ok_or(Error::EmptyInput)?;
        let n = first.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[CoefficientVector] {
        &self.rows
    }

    /// Number of variables `n`.
    pub fn nvars(&self) -> usize {
        self.rows[0].len()
    }

    /// Number of objectives `p`.
    pub fn nobjs(&self) -> usize {
        self.rows.len()
    }

    /// Image of a binary assignment under all objectives.
    pub fn evaluate(&self, x: &[u8]) -> Result<Point, Error> {
        let values = self
            .rows
            .iter()
            .map(|row| row.value_of(x))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Point::new(values))
    }
}

/// Comparison sense of a linear constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintSense {
    Le,
    Ge,
    Eq,
}

impl fmt::Display for ConstraintSense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintSense::Le => write!(f, "le"),
            ConstraintSense::Ge => write!(f, "ge"),
            ConstraintSense::Eq => write!(f, "eq"),
        }
    }
}

/// A linear feasibility constraint `coeffs · x  (≤ | = | ≥)  rhs` over the
/// binary variables. Encodes feasible sets such as knapsack capacities or
/// assignment rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<i64>,
    pub sense: ConstraintSense,
    pub rhs: i64,
}

impl LinearConstraint {
    pub fn new(coeffs: Vec<i64>, sense: ConstraintSense, rhs: i64) -> Self {
        Self { coeffs, sense, rhs }
    }

    /// Whether a binary assignment satisfies the constraint.
    pub fn satisfied_by(&self, x: &[u8]) -> bool {
        let lhs: i128 = self
            .coeffs
            .iter()
            .zip(x)
            .filter(|(_, &xi)| xi != 0)
            .map(|(&c, _)| c as i128)
            .sum();
        match self.sense {
            ConstraintSense::Le => lhs <= self.rhs as i128,
            ConstraintSense::Ge => lhs >= self.rhs as i128,
            ConstraintSense::Eq => lhs == self.rhs as i128,
        }
    }
}

/// A multi-objective binary optimization instance:
/// `min { Cx : x ∈ X ⊆ {0,1}^n }` with `C` the objective matrix and `X` cut
/// out by the linear constraints (empty list ⇒ the full hypercube).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    name: String,
    objectives: ObjectiveMatrix,
    constraints: Vec<LinearConstraint>,
}

impl Instance {
    pub fn new(
        name: impl Into<String>,
        objectives: ObjectiveMatrix,
        constraints: Vec<LinearConstraint>,
    ) -> Result<Self, Error> {
        let n = objectives.nvars();
        for con in &constraints {
            if con.coeffs.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: con.coeffs.len(),
                });
            }
        }
        Ok(Self {
            name: name.into(),
            objectives,
            constraints,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn objectives(&self) -> &ObjectiveMatrix {
        &self.objectives
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn nvars(&self) -> usize {
        self.objectives.nvars()
    }

    pub fn nobjs(&self) -> usize {
        self.objectives.nobjs()
    }

    /// Whether a binary assignment lies in the feasible set.
    pub fn is_feasible(&self, x: &[u8]) -> bool {
        self.constraints.iter().all(|c| c.satisfied_by(x))
    }
}

/// A point in the objective space, `y = f(x)`.
///
/// The derived ordering is plain lexicographic and exists only so points can
/// be stored canonically; it has nothing to do with dominance.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    values: Vec<i128>,
}

impl Point {
    pub fn new(values: Vec<i128>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[i128] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// One non-dominated point together with every efficient solution attaining
/// it. Distinct solutions can share a point, hence the grouping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParetoEntry {
    pub point: Point,
    pub solutions: Vec<Vec<u8>>,
}

/// The non-dominated set `Y_N` paired with the efficient set `X_E`.
///
/// Invariants (maintained by [`crate::enumeration::pareto_front`]): points
/// are pairwise distinct, no point dominates another, and entries are sorted
/// by point in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParetoSet {
    entries: Vec<ParetoEntry>,
}

impl ParetoSet {
    pub(crate) fn from_entries(entries: Vec<ParetoEntry>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[ParetoEntry] {
        &self.entries
    }

    /// Number of non-dominated points.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = &Point> {
        self.entries.iter().map(|e| &e.point)
    }

    /// All efficient solutions, flattened, in entry order.
    pub fn solutions(&self) -> impl Iterator<Item = &Vec<u8>> {
        self.entries.iter().flat_map(|e| e.solutions.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn sign_class_classification() {
        let v = |c: Vec<i64>| CoefficientVector::new(c).unwrap();
        assert_eq!(v(vec![1, 2, 3]).sign_class(), SignClass::AllPositive);
        assert_eq!(v(vec![-3, 5]).sign_class(), SignClass::Mixed);
        assert_eq!(v(vec![-4, -2]).sign_class(), SignClass::Mixed);
        assert_eq!(v(vec![5, 0, 3]).sign_class(), SignClass::ContainsZero);
        assert_eq!(v(vec![0, -1]).sign_class(), SignClass::ContainsZero);
    }

    #[test]
    fn empty_vector_rejected() {
        assert_eq!(CoefficientVector::new(vec![]), Err(Error::EmptyInput));
    }

    #[test]
    fn matrix_rejects_ragged_rows() {
        let rows = vec![
            CoefficientVector::new(vec![1, 2]).unwrap(),
            CoefficientVector::new(vec![1, 2, 3]).unwrap(),
        ];
        assert!(matches!(
            ObjectiveMatrix::new(rows),
            Err(Error::DimensionMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn instance_checks_constraint_width() {
        let m = ObjectiveMatrix::new(vec![CoefficientVector::new(vec![1, 2]).unwrap()]).unwrap();
        let con = LinearConstraint::new(vec![1, 1, 1], ConstraintSense::Ge, 1);
        assert!(Instance::new("bad", m, vec![con]).is_err());
    }

    #[test]
    fn constraint_evaluation() {
        let con = LinearConstraint::new(vec![2, 3], ConstraintSense::Le, 2);
        assert!(con.satisfied_by(&[0, 0]));
        assert!(con.satisfied_by(&[1, 0]));
        assert!(!con.satisfied_by(&[0, 1]));
        assert!(!con.satisfied_by(&[1, 1]));
    }

    #[test]
    fn objective_value_is_exact() {
        let v = CoefficientVector::new(vec![i64::MAX, i64::MAX]).unwrap();
        assert_eq!(v.value_of(&[1, 1]).unwrap(), 2 * (i64::MAX as i128));
    }
}
