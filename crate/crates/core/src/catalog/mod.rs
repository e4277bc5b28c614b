//! Built-in algebras: 2B, 3C(eta) and 6A(alpha, beta) with
//! beta = -alpha^2/(4(2 alpha - 1)).
//!
//! The 2B and 3C tables follow the usual Norton-Sakuma conventions.

use thiserror::Error;

use crate::algebra::{axis_family, Algebra, AlgebraError, AxisFamily, FusionLaw};
use crate::axet::AxetKind;
use crate::fields::{Field, FieldError, Scalar};
use crate::linalg::Vector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub const NAMES: [&str; 3] = ["2B", "3C", "6A"];

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub constraints: String,
    pub algebra: Algebra,
    /// Basis indices of the designated axes.
    pub axes: Vec<usize>,
    pub law: FusionLaw,
    /// Basis indices of the axes playing `a_0` and `a_1`.
    pub generators: (usize, usize),
    pub expected: AxetKind,
}

impl CatalogEntry {
    pub fn axis(&self, i: usize) -> Vector {
        self.algebra.basis(self.axes[i])
    }

    pub fn axis_vectors(&self) -> Vec<Vector> {
        self.axes.iter().map(|&i| self.algebra.basis(i)).collect()
    }

    /// The family generated by the designated generator pair.
    pub fn family(&self) -> Result<AxisFamily, AlgebraError> {
        let window = match self.expected {
            AxetKind::Regular(n) => 2 * n,
            AxetKind::Skew(k) => 8 * k,
            AxetKind::Abstract => 64,
        };
        let (g0, g1) = self.generators;
        axis_family(&self.algebra, &self.algebra.basis(g0), &self.algebra.basis(g1), &self.law, window)
    }
}

fn vector(field: &Field, n: usize, terms: &[(usize, Scalar)]) -> Vector {
    let mut v = vec![field.zero(); n];
    for (i, c) in terms {
        v[*i] = &v[*i] + c;
    }
    Vector::new(field, v).expect("same field")
}

/// Two orthogonal idempotents `a`, `b` with `ab = 0`.
pub fn build_2b(law: &FusionLaw) -> CatalogEntry {
    let f = law.alpha().field().clone();
    let names = vec!["a".to_string(), "b".to_string()];
    let algebra = Algebra::from_fn(&f, names, |i, j| {
        if i == j {
            vector(&f, 2, &[(i, f.one())])
        } else {
            Vector::zero(&f, 2)
        }
    })
    .expect("well-formed table");
    CatalogEntry {
        name: "2B".into(),
        constraints: "characteristic not 2".into(),
        algebra,
        axes: vec![0, 1],
        law: law.clone(),
        generators: (0, 1),
        expected: AxetKind::Regular(2),
    }
}

/// 2B over `base(alpha, beta)` with the generic law `M(alpha, beta)`.
pub fn build_2b_generic(base: &Field) -> Result<CatalogEntry, CatalogError> {
    let f = Field::function(base, &["alpha", "beta"])?;
    let law = FusionLaw::monster(f.var("alpha")?, f.var("beta")?)?;
    Ok(build_2b(&law))
}

/// 3C(eta): basis `a, b, c` with `ab = eta/2 (a + b - c)` and its cyclic images.
pub fn build_3c(eta: &Scalar) -> Result<CatalogEntry, CatalogError> {
    let f = eta.field().clone();
    let law = FusionLaw::jordan(eta.clone()).map_err(|e| CatalogError::InvalidParameter(format!("eta = {eta}: {e}")))?;
    let h = eta.try_div(&f.int(2))?;
    let names = vec!["a".to_string(), "b".to_string(), "c".to_string()];
    let algebra = Algebra::from_fn(&f, names, |i, j| {
        if i == j {
            return vector(&f, 3, &[(i, f.one())]);
        }
        let k = 3 - i - j;
        vector(&f, 3, &[(i, h.clone()), (j, h.clone()), (k, -h.clone())])
    })?;
    Ok(CatalogEntry {
        name: "3C".into(),
        constraints: "eta not in {0, 1}; eta != -1 for the identity".into(),
        algebra,
        axes: vec![0, 1, 2],
        law,
        generators: (0, 1),
        expected: AxetKind::Regular(3),
    })
}

/// 3C over `base(eta)`.
pub fn build_3c_generic(base: &Field) -> Result<CatalogEntry, CatalogError> {
    let f = Field::function(base, &["eta"])?;
    build_3c(&f.var("eta")?)
}

/// `(a + b + c)/(eta + 1)`, the identity of 3C(eta).
pub fn identity_3c(entry: &CatalogEntry) -> Result<Vector, CatalogError> {
    let eta = entry.law.alpha();
    let f = eta.field();
    let s = eta + &f.one();
    if s.is_zero() {
        return Err(CatalogError::InvalidParameter("eta = -1 has no identity".into()));
    }
    let c = s.inv()?;
    Ok(vector(f, 3, &[(0, c.clone()), (1, c.clone()), (2, c)]))
}

/// Position of `b_i` in the 6A basis; indices are taken mod 6 into `-2..=3`.
pub fn b6(i: i64) -> usize {
    (i + 2).rem_euclid(6) as usize
}

pub const C6: usize = 6;
pub const Z6: usize = 7;

/// `-alpha^2/(4(2 alpha - 1))`.
pub fn beta_6a(alpha: &Scalar) -> Result<Scalar, CatalogError> {
    let f = alpha.field();
    let den = &f.int(4) * &(&(&f.int(2) * alpha) - &f.one());
    if den.is_zero() {
        return Err(CatalogError::InvalidParameter(format!("alpha = {alpha}: 2*alpha - 1 vanishes, beta undefined")));
    }
    Ok((-(alpha * alpha)).try_div(&den)?)
}

/// 6A(alpha) with basis `b_-2, ..., b_3, c, z`.
pub fn build_6a(alpha: &Scalar) -> Result<CatalogEntry, CatalogError> {
    let f = alpha.field().clone();
    let beta = beta_6a(alpha)?;
    let bad = |what: &str| Err(CatalogError::InvalidParameter(format!("alpha = {alpha}: {what}")));
    if alpha.is_zero() {
        return bad("alpha = 0");
    }
    if alpha.is_one() {
        return bad("alpha = 1");
    }
    if beta.is_one() {
        return bad("beta = 1");
    }
    if &beta == alpha {
        return bad("beta = alpha (alpha = 4/9)");
    }
    let law = FusionLaw::monster(alpha.clone(), beta.clone())?;

    let a = alpha.clone();
    let int = |n: i64| f.int(n);
    let gamma = a.try_div(&(&int(8) * &(&(&int(2) * &a) - &f.one())))?;
    let half_beta = beta.try_div(&int(2))?;
    let quarter_a = a.try_div(&int(4))?;
    let half_a = a.try_div(&int(2))?;
    let g2 = &(&int(2) * &gamma) * &(&(&int(3) * &a) - &f.one());
    let g5 = -(&gamma * &(&(&int(5) * &a) - &int(2)));
    let gz = &(&int(2) * &gamma) * &(&(&int(3) * &a) - &int(2));
    let zz = &(&(&int(2) * &gamma).try_div(&a)? * &(&a + &int(2))) * &(&(&int(3) * &a) - &int(2));

    let names: Vec<String> = (-2..=3).map(|i| format!("b_{i}")).chain(["c".to_string(), "z".to_string()]).collect();
    let n = 8;
    let label = |p: usize| p as i64 - 2;
    let algebra = Algebra::from_fn(&f, names, |p, q| {
        let v = |terms: &[(usize, Scalar)]| vector(&f, n, terms);
        match (p < 6, q < 6) {
            (true, true) => {
                let (i, j) = (label(p), label(q));
                let d = (j - i).rem_euclid(6);
                // orient the pair so the formula is in terms of b_i b_{i+d}, d <= 3
                let (i, d) = if d > 3 { (j, 6 - d) } else { (i, d) };
                let b = |k: i64| b6(i + k);
                match d {
                    0 => v(&[(b(0), f.one())]),
                    1 => {
                        let m = -half_beta.clone();
                        v(&[
                            (b(0), half_beta.clone()),
                            (b(1), half_beta.clone()),
                            (b(2), m.clone()),
                            (b(3), m.clone()),
                            (b(-1), m.clone()),
                            (b(-2), m),
                            (C6, half_beta.clone()),
                            (Z6, half_beta.clone()),
                        ])
                    }
                    2 => v(&[(b(0), quarter_a.clone()), (b(2), quarter_a.clone()), (b(4), g2.clone()), (Z6, g5.clone())]),
                    _ => v(&[(b(0), half_a.clone()), (b(3), half_a.clone()), (C6, -half_a.clone())]),
                }
            }
            (true, false) => {
                let i = label(p);
                if q == C6 {
                    v(&[(b6(i), half_a.clone()), (C6, half_a.clone()), (b6(i + 3), -half_a.clone())])
                } else {
                    v(&[
                        (b6(i), &int(2) * &gz),
                        (b6(i - 2), -gz.clone()),
                        (b6(i + 2), -gz.clone()),
                        (Z6, gz.clone()),
                    ])
                }
            }
            _ => match (p, q) {
                (C6, C6) => v(&[(C6, f.one())]),
                (C6, Z6) => Vector::zero(&f, n),
                _ => v(&[(Z6, zz.clone())]),
            },
        }
    })?;
    Ok(CatalogEntry {
        name: "6A".into(),
        constraints: "alpha not in {0, 1, 1/2, 4/9}; beta = -alpha^2/(4(2alpha-1)) not in {0, 1}".into(),
        algebra,
        axes: (0..6).collect(),
        law,
        generators: (b6(0), b6(1)),
        expected: AxetKind::Regular(6),
    })
}

/// 6A over `base(alpha)`.
pub fn build_6a_generic(base: &Field) -> Result<CatalogEntry, CatalogError> {
    let f = Field::function(base, &["alpha"])?;
    build_6a(&f.var("alpha")?)
}

/// Builds a catalog entry by name. A missing parameter means the generic
/// construction over `base` adjoined with the parameter.
pub fn build(name: &str, base: &Field, parameter: Option<&Scalar>) -> Result<CatalogEntry, CatalogError> {
    match (name, parameter) {
        ("2B", None) => build_2b_generic(base),
        ("2B", Some(_)) => Err(CatalogError::InvalidParameter("2B takes no parameter".into())),
        ("3C", None) => build_3c_generic(base),
        ("3C", Some(eta)) => build_3c(eta),
        ("6A", None) => build_6a_generic(base),
        ("6A", Some(alpha)) => build_6a(alpha),
        _ => Err(CatalogError::UnknownEntry(name.to_string())),
    }
}

#[cfg(test)]
mod tests;
