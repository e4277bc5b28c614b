//! Commutative algebras given by structure constants, and the axis machinery
//! on top of them.

mod axis;
mod family;
mod fusion;

use std::fmt;

use thiserror::Error;

use crate::fields::{Field, FieldError, Scalar};
use crate::linalg::{row_basis, solve, LinalgError, Matrix, Vector};

pub use axis::{axis_report, axis_reports, decompose, miyamoto, projection, AxisReport, Decomposition, FusionViolation, Miyamoto, Verdict};
pub use family::{axis_family, AxisDecompositionData, AxisFamily, FamilyShape};
pub use fusion::{Eigen, FusionLaw};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid fusion law: {0}")]
    InvalidFusionLaw(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("adjoint is not semisimple")]
    NotSemisimple,
    #[error("adjoint has eigenvalues outside the fusion set")]
    SpectrumOutsideFusionSet,
    #[error("projection needs a primitive axis: {0}")]
    DecompositionUnavailable(String),
    #[error("subspace is not closed under multiplication")]
    SubspaceNotClosed,
    #[error("generator {index} is not an axis: {reason}")]
    AxisCheckFailed { index: usize, reason: String },
    #[error("no period found within window {0}")]
    PeriodNotDetected(usize),
    #[error("alpha is not invertible")]
    AlphaNotInvertible,
    #[error("the construction needs a Monster-type law with beta")]
    NotMonsterType,
    #[error("eigenvector formula failed: {0}")]
    MembershipFailed(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A finite-dimensional commutative algebra.
///
/// Products of basis vectors are stored once per unordered pair, which makes
/// commutativity structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    names: Vec<String>,
    // products[tri(i, j)] = e_i e_j for i <= j
    products: Vec<Vector>,
}

fn tri(i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    j * (j + 1) / 2 + i
}

impl Algebra {
    /// Builds an algebra from `product(i, j)` for `i <= j`.
    pub fn from_fn<F>(field: &Field, names: Vec<String>, mut product: F) -> Result<Algebra, AlgebraError>
    where
        F: FnMut(usize, usize) -> Vector,
    {
        let n = names.len();
        let mut products = Vec::with_capacity(n * (n + 1) / 2);
        for j in 0..n {
            for i in 0..=j {
                let v = product(i, j);
                if v.len() != n {
                    return Err(AlgebraError::InvalidAlgebra(format!(
                        "product {},{} has length {}, expected {n}",
                        names[i],
                        names[j],
                        v.len()
                    )));
                }
                if v.field() != field {
                    return Err(AlgebraError::InvalidAlgebra(format!(
                        "product {},{} lives in {}, expected {field}",
                        names[i],
                        names[j],
                        v.field()
                    )));
                }
                products.push(v);
            }
        }
        Ok(Algebra { field: field.clone(), names, products })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::unit(&self.field, self.dim(), i)
    }

    /// `e_i e_j`.
    pub fn product(&self, i: usize, j: usize) -> &Vector {
        &self.products[tri(i, j)]
    }

    /// Element from coefficients on the basis.
    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<Vector, AlgebraError> {
        if coeffs.len() != self.dim() {
            return Err(AlgebraError::InvalidAlgebra(format!(
                "{} coefficients for dimension {}",
                coeffs.len(),
                self.dim()
            )));
        }
        Ok(Vector::new(&self.field, coeffs)?)
    }

    fn check(&self, x: &Vector) -> Result<(), AlgebraError> {
        if x.field() != &self.field {
            return Err(LinalgError::DescriptorMismatch(self.field.to_string(), x.field().to_string()).into());
        }
        if x.len() != self.dim() {
            return Err(LinalgError::DimensionMismatch(format!("vector of length {} in dimension {}", x.len(), self.dim())).into());
        }
        Ok(())
    }

    /// Bilinear extension of the product table.
    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        let n = self.dim();
        let mut acc: Vec<Scalar> = vec![self.field.zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for (k, p) in self.product(i, j).entries().iter().enumerate() {
                    if !p.is_zero() {
                        acc[k] = &acc[k] + &(&c * p);
                    }
                }
            }
        }
        Ok(Vector::new(&self.field, acc)?)
    }

    /// Matrix of `x -> a x`.
    pub fn adjoint(&self, a: &Vector) -> Result<Matrix, AlgebraError> {
        self.check(a)?;
        let cols: Vec<Vector> = (0..self.dim())
            .map(|j| self.multiply(a, &self.basis(j)))
            .collect::<Result<_, _>>()?;
        Ok(Matrix::from_columns(&self.field, self.dim(), &cols)?)
    }

    /// Whether `m` respects the product on basis pairs.
    pub fn is_automorphism(&self, m: &Matrix) -> bool {
        let images: Vec<Vector> = (0..self.dim()).map(|i| m.column(i)).collect();
        (0..self.dim()).all(|j| {
            (0..=j).all(|i| {
                let lhs = m.mul_vec(self.product(i, j)).expect("square matrix");
                let rhs = self.multiply(&images[i], &images[j]).expect("same algebra");
                lhs == rhs
            })
        })
    }

    /// The smallest subalgebra containing `generators`, as a reduced-echelon basis.
    pub fn subalgebra_closure(&self, generators: &[Vector]) -> Result<Vec<Vector>, AlgebraError> {
        for g in generators {
            self.check(g)?;
        }
        let n = self.dim();
        let mut basis = row_basis(&self.field, n, generators);
        loop {
            let mut next = basis.clone();
            for (i, x) in basis.iter().enumerate() {
                for y in &basis[i..] {
                    next.push(self.multiply(x, y)?);
                }
            }
            let grown = row_basis(&self.field, n, &next);
            if grown.len() == basis.len() {
                return Ok(basis);
            }
            basis = grown;
        }
    }

    /// The identity element of a product-closed subspace, if one exists.
    pub fn identity_of(&self, basis: &[Vector]) -> Result<Option<Vector>, AlgebraError> {
        for b in basis {
            self.check(b)?;
        }
        let n = self.dim();
        let m = basis.len();
        let span = row_basis(&self.field, n, basis);
        let mut products = vec![vec![]; m];
        for j in 0..m {
            for k in 0..m {
                let p = self.multiply(&basis[k], &basis[j])?;
                let mut with = span.clone();
                with.push(p.clone());
                if row_basis(&self.field, n, &with).len() != span.len() {
                    return Err(AlgebraError::SubspaceNotClosed);
                }
                products[j].push(p);
            }
        }
        if m == 0 {
            return Ok(Some(Vector::zero(&self.field, n)));
        }
        // sum_k c_k (b_k b_j) = b_j for every j, stacked.
        let mut system = Matrix::zero(&self.field, n * m, m);
        let mut rhs = Vec::with_capacity(n * m);
        for j in 0..m {
            for r in 0..n {
                for k in 0..m {
                    system.set(j * n + r, k, products[j][k][r].clone());
                }
                rhs.push(basis[j][r].clone());
            }
        }
        let rhs = Vector::new(&self.field, rhs)?;
        match solve(&system, &rhs) {
            Ok(c) => Ok(Some(Vector::combination(&self.field, n, c.entries(), basis))),
            Err(LinalgError::NoSolution) => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    /// Human-readable form of `x` in terms of the basis names.
    pub fn describe(&self, x: &Vector) -> String {
        let terms: Vec<String> = x
            .entries()
            .iter()
            .zip(&self.names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| if c.is_one() { n.clone() } else { format!("({c})*{n}") })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra of dimension {} over {}", self.dim(), self.field)?;
        for j in 0..self.dim() {
            for i in 0..=j {
                writeln!(f, "  {} * {} = {}", self.names[i], self.names[j], self.describe(self.product(i, j)))?;
            }
        }
        Ok(())
    }
}
