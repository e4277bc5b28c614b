use std::fmt;

use rayon::prelude::*;

use super::{Algebra, AlgebraError, Eigen, FusionLaw};
use crate::fields::Scalar;
use crate::linalg::{nullspace, span_membership, Matrix, Membership, Vector};

/// Eigenspace decomposition of a semisimple idempotent.
#[derive(Clone, Debug)]
pub struct Decomposition {
    axis: Vector,
    law: FusionLaw,
    parts: Vec<(Eigen, Vec<Vector>)>,
    // columns are the eigenvectors of `parts`, concatenated in order
    basis: Matrix,
    inverse: Matrix,
}

impl Decomposition {
    pub fn axis(&self) -> &Vector {
        &self.axis
    }

    pub fn law(&self) -> &FusionLaw {
        &self.law
    }

    pub fn part(&self, e: Eigen) -> &[Vector] {
        self.parts
            .iter()
            .find(|(x, _)| *x == e)
            .map(|(_, v)| v.as_slice())
            .unwrap_or(&[])
    }

    pub fn parts(&self) -> &[(Eigen, Vec<Vector>)] {
        &self.parts
    }

    pub fn dims(&self) -> Vec<(Eigen, usize)> {
        self.parts.iter().map(|(e, v)| (*e, v.len())).collect()
    }

    pub fn is_primitive(&self) -> bool {
        self.part(Eigen::One).len() == 1
    }

    /// Matrix whose columns are the eigenvectors.
    pub fn eigenbasis(&self) -> &Matrix {
        &self.basis
    }

    /// Coordinates of `x` in the eigenbasis.
    pub fn coordinates(&self, x: &Vector) -> Result<Vector, AlgebraError> {
        Ok(self.inverse.mul_vec(x)?)
    }

    fn offset(&self, e: Eigen) -> (usize, usize) {
        let mut start = 0;
        for (x, v) in &self.parts {
            if *x == e {
                return (start, v.len());
            }
            start += v.len();
        }
        (start, 0)
    }

    /// The `e`-eigencomponent of `x`.
    pub fn component(&self, x: &Vector, e: Eigen) -> Result<Vector, AlgebraError> {
        let coords = self.coordinates(x)?;
        let (start, len) = self.offset(e);
        let f = x.field();
        Ok(Vector::combination(f, x.len(), &coords.entries()[start..start + len], self.part(e)))
    }

    /// The projection map: coefficient of the axis in `x`.
    pub fn projection(&self, x: &Vector) -> Result<Scalar, AlgebraError> {
        if !self.is_primitive() {
            return Err(AlgebraError::DecompositionUnavailable(format!(
                "1-eigenspace has dimension {}",
                self.part(Eigen::One).len()
            )));
        }
        let coords = self.coordinates(x)?;
        let (start, _) = self.offset(Eigen::One);
        Ok(coords[start].clone())
    }
}

/// `lambda_a(x)` for the axis behind `dec`.
pub fn projection(dec: &Decomposition, x: &Vector) -> Result<Scalar, AlgebraError> {
    dec.projection(x)
}

fn product_of_shifts(ad: &Matrix, law: &FusionLaw) -> Matrix {
    law.eigenvalues()
        .into_iter()
        .map(|e| ad.shift(&law.value(e)))
        .reduce(|acc, m| acc.mul(&m).expect("square"))
        .expect("law has eigenvalues")
}

pub fn decompose(alg: &Algebra, a: &Vector, law: &FusionLaw) -> Result<Decomposition, AlgebraError> {
    if law.alpha().field() != alg.field() {
        return Err(AlgebraError::InvalidFusionLaw(format!(
            "law over {} used with an algebra over {}",
            law.alpha().field(),
            alg.field()
        )));
    }
    if &alg.multiply(a, a)? != a {
        return Err(AlgebraError::NotIdempotent);
    }
    let n = alg.dim();
    let ad = alg.adjoint(a)?;
    let mut parts = Vec::new();
    for e in law.eigenvalues() {
        let mut space = nullspace(&ad.shift(&law.value(e)));
        if e == Eigen::One && space.len() == 1 && !a.is_zero() {
            space = vec![a.clone()];
        }
        parts.push((e, space));
    }
    let total: usize = parts.iter().map(|(_, v)| v.len()).sum();
    if total != n {
        let p = product_of_shifts(&ad, law);
        let generalized = nullspace(&p.pow(n as u32)).len();
        return Err(if generalized < n {
            AlgebraError::SpectrumOutsideFusionSet
        } else {
            AlgebraError::NotSemisimple
        });
    }
    debug_assert!(product_of_shifts(&ad, law).is_zero());
    let columns: Vec<Vector> = parts.iter().flat_map(|(_, v)| v.iter().cloned()).collect();
    let basis = Matrix::from_columns(alg.field(), n, &columns)?;
    let inverse = basis.inverse().expect("eigenvectors for distinct eigenvalues are independent");
    Ok(Decomposition { axis: a.clone(), law: law.clone(), parts, basis, inverse })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    NotEvaluated(String),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Fail(why) => write!(f, "fail: {why}"),
            Verdict::NotEvaluated(why) => write!(f, "not evaluated: {why}"),
        }
    }
}

/// A product of eigenvectors that leaves the space allowed by the fusion law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionViolation {
    pub left: Eigen,
    pub right: Eigen,
    pub left_index: usize,
    pub right_index: usize,
    pub allowed: Vec<Eigen>,
    pub product: Vector,
    /// A functional vanishing on the allowed space but not on `product`.
    pub certificate: Vector,
}

#[derive(Clone, Debug)]
pub struct AxisReport {
    pub a1: Verdict,
    pub a2: Verdict,
    pub a3: Verdict,
    pub a4: Verdict,
    pub dims: Vec<(Eigen, usize)>,
    pub violations: Vec<FusionViolation>,
    pub decomposition: Option<Decomposition>,
}

impl AxisReport {
    pub fn is_pass(&self) -> bool {
        self.a1.is_pass() && self.a2.is_pass() && self.a3.is_pass() && self.a4.is_pass()
    }

    /// Passes everything except possibly primitivity.
    pub fn is_axis_without_a4(&self) -> bool {
        self.a1.is_pass() && self.a2.is_pass() && self.a3.is_pass()
    }

    pub fn verdicts(&self) -> [(&'static str, &Verdict); 4] {
        [("A1", &self.a1), ("A2", &self.a2), ("A3", &self.a3), ("A4", &self.a4)]
    }
}

fn fusion_violations(alg: &Algebra, dec: &Decomposition) -> Result<Vec<FusionViolation>, AlgebraError> {
    let law = dec.law();
    let eig = law.eigenvalues();
    let mut jobs = Vec::new();
    for (x, &l) in eig.iter().enumerate() {
        for &r in &eig[x..] {
            let (lv, rv) = (dec.part(l), dec.part(r));
            for i in 0..lv.len() {
                let from = if l == r { i } else { 0 };
                for j in from..rv.len() {
                    jobs.push((l, r, i, j));
                }
            }
        }
    }
    let results: Vec<Result<Option<FusionViolation>, AlgebraError>> = jobs
        .par_iter()
        .map(|&(l, r, i, j)| {
            let p = alg.multiply(&dec.part(l)[i], &dec.part(r)[j])?;
            let allowed = law.fuse(l, r);
            let coords = dec.coordinates(&p)?;
            let clean = dec.parts().iter().all(|(e, _)| {
                allowed.contains(e) || {
                    let (s, len) = dec.offset(*e);
                    coords.entries()[s..s + len].iter().all(Scalar::is_zero)
                }
            });
            if clean {
                return Ok(None);
            }
            let span: Vec<Vector> = allowed.iter().flat_map(|e| dec.part(*e).iter().cloned()).collect();
            let certificate = match span_membership(&span, &p)? {
                Membership::NotInSpan { certificate } => certificate,
                Membership::InSpan(_) => unreachable!("coordinates and span membership disagree"),
            };
            Ok(Some(FusionViolation { left: l, right: r, left_index: i, right_index: j, allowed, product: p, certificate }))
        })
        .collect();
    let mut out = Vec::new();
    for r in results {
        if let Some(v) = r? {
            out.push(v);
        }
    }
    Ok(out)
}

/// Checks A1 through A4 for `a`. Failures are verdicts; only malformed input is an error.
pub fn axis_report(alg: &Algebra, a: &Vector, law: &FusionLaw) -> Result<AxisReport, AlgebraError> {
    let skip = |why: &str| Verdict::NotEvaluated(why.to_string());
    let mut report = AxisReport {
        a1: Verdict::Pass,
        a2: skip("needs A1"),
        a3: skip("needs A2"),
        a4: skip("needs A2"),
        dims: vec![],
        violations: vec![],
        decomposition: None,
    };
    let dec = match decompose(alg, a, law) {
        Ok(d) => d,
        Err(AlgebraError::NotIdempotent) => {
            report.a1 = Verdict::Fail("a^2 != a".into());
            return Ok(report);
        }
        Err(AlgebraError::NotSemisimple) => {
            report.a2 = Verdict::Fail("adjoint is not semisimple".into());
            return Ok(report);
        }
        Err(AlgebraError::SpectrumOutsideFusionSet) => {
            report.a2 = Verdict::Fail("adjoint has eigenvalues outside the fusion set".into());
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    report.a2 = Verdict::Pass;
    report.dims = dec.dims();
    report.violations = fusion_violations(alg, &dec)?;
    report.a3 = if report.violations.is_empty() {
        Verdict::Pass
    } else {
        let v = &report.violations[0];
        Verdict::Fail(format!(
            "{} violating products, first in {} * {}",
            report.violations.len(),
            v.left,
            v.right
        ))
    };
    report.a4 = if dec.is_primitive() {
        Verdict::Pass
    } else {
        Verdict::Fail(format!("1-eigenspace has dimension {}", dec.part(Eigen::One).len()))
    };
    report.decomposition = Some(dec);
    Ok(report)
}

/// Reports for several axes, computed in parallel and returned in input order.
pub fn axis_reports(alg: &Algebra, axes: &[Vector], law: &FusionLaw) -> Result<Vec<AxisReport>, AlgebraError> {
    axes.par_iter().map(|a| axis_report(alg, a, law)).collect()
}

#[derive(Clone, Debug)]
pub struct Miyamoto {
    pub matrix: Matrix,
    pub is_automorphism: bool,
    pub is_involution: bool,
}

/// The map negating the odd part of the grading: the beta part for
/// `M(alpha, beta)`, the eta part for Jordan type `J(eta)`.
pub fn miyamoto(alg: &Algebra, dec: &Decomposition) -> Miyamoto {
    let f = alg.field();
    let n = alg.dim();
    let odd = if dec.law().is_monster() { Eigen::Beta } else { Eigen::Alpha };
    let mut diag = Matrix::zero(f, n, n);
    let mut k = 0;
    for (e, v) in dec.parts() {
        let sign = if *e == odd { -f.one() } else { f.one() };
        for _ in v {
            diag.set(k, k, sign.clone());
            k += 1;
        }
    }
    let matrix = dec.eigenbasis().mul(&diag).and_then(|m| m.mul(&dec.inverse)).expect("square");
    let is_involution = matrix.mul(&matrix).expect("square").is_identity();
    let is_automorphism = alg.is_automorphism(&matrix);
    Miyamoto { matrix, is_automorphism, is_involution }
}
