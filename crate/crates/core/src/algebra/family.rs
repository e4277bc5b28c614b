use std::collections::HashMap;
use std::sync::Mutex;

use super::axis::{axis_report, axis_reports, miyamoto, AxisReport, Decomposition};
use super::{Algebra, AlgebraError, Eigen, FusionLaw};
use crate::axet::{AxetKind, C2Axet};
use crate::fields::Scalar;
use crate::linalg::{span_membership, Matrix, Vector};

/// Shape of the sequence `a_i` read off from repeated axes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyShape {
    /// `a_i` are pairwise distinct for `0 <= i < n`.
    Regular(usize),
    /// Period `4k`; even axes repeat after `2k`.
    Skew(usize),
    Abstract { period: usize },
}

/// The axes `a_i` generated from `(a_0, a_1)` by `rho = tau_0 tau_1`.
#[derive(Debug)]
pub struct AxisFamily {
    algebra: Algebra,
    law: FusionLaw,
    tau0: Matrix,
    tau1: Matrix,
    rho: Matrix,
    period: usize,
    // a_0 .. a_{period-1}
    axes: Vec<Vector>,
    // index of the first occurrence of each axis
    representative: Vec<usize>,
    shape: FamilyShape,
    axet: C2Axet,
    decompositions: HashMap<usize, Decomposition>,
    s_cache: Mutex<HashMap<(i64, usize), Vector>>,
}

#[derive(Clone, Debug)]
pub struct AxisDecompositionData {
    pub index: i64,
    pub lambda: Scalar,
    pub gamma: Scalar,
    pub epsilon: Scalar,
    pub u: Vector,
    pub v: Vector,
    pub w: Vector,
}

fn require_axis(report: &AxisReport, index: usize) -> Result<Decomposition, AlgebraError> {
    if !report.is_pass() {
        let reason = report
            .verdicts()
            .iter()
            .find(|(_, v)| !v.is_pass())
            .map(|(name, v)| format!("{name} {v}"))
            .unwrap_or_default();
        return Err(AlgebraError::AxisCheckFailed { index, reason });
    }
    Ok(report.decomposition.clone().expect("passing report has a decomposition"))
}

/// Builds the family and detects its period within `window` steps.
pub fn axis_family(
    alg: &Algebra,
    a0: &Vector,
    a1: &Vector,
    law: &FusionLaw,
    window: usize,
) -> Result<AxisFamily, AlgebraError> {
    let d0 = require_axis(&axis_report(alg, a0, law)?, 0)?;
    let d1 = require_axis(&axis_report(alg, a1, law)?, 1)?;
    let tau0 = miyamoto(alg, &d0).matrix;
    let tau1 = miyamoto(alg, &d1).matrix;
    let rho = tau1.mul(&tau0)?;

    // a_{2i} = rho^i a_0, a_{2i+1} = rho^i a_1
    let mut seq = vec![a0.clone(), a1.clone()];
    let period = loop {
        let m = seq.len();
        if m >= 3 && seq[m - 2] == *a0 && seq[m - 1] == *a1 {
            break m - 2;
        }
        if m > window + 2 {
            return Err(AlgebraError::PeriodNotDetected(window));
        }
        let next = rho.mul_vec(&seq[m - 2])?;
        seq.push(next);
    };
    seq.truncate(period);
    let axes = seq;

    let representative: Vec<usize> =
        (0..period).map(|i| axes.iter().position(|x| *x == axes[i]).expect("present")).collect();
    let mut distinct: Vec<usize> = representative.clone();
    distinct.sort_unstable();
    distinct.dedup();

    let shape = {
        let evens: Vec<usize> = (0..period).step_by(2).map(|i| representative[i]).collect();
        let odds: Vec<usize> = (1..period).step_by(2).map(|i| representative[i]).collect();
        let count = |v: &[usize]| {
            let mut v = v.to_vec();
            v.sort_unstable();
            v.dedup();
            v.len()
        };
        if distinct.len() == period {
            FamilyShape::Regular(period)
        } else if period % 4 == 0
            && count(&evens) == period / 4
            && count(&odds) == period / 2
            && evens.iter().all(|e| !odds.contains(e))
        {
            FamilyShape::Skew(period / 4)
        } else {
            FamilyShape::Abstract { period }
        }
    };

    let mut decompositions = HashMap::new();
    decompositions.insert(0, d0);
    if representative[1 % period] == 1 {
        decompositions.insert(1, d1);
    }
    let rest: Vec<usize> = distinct.iter().copied().filter(|i| !decompositions.contains_key(i)).collect();
    let reports = axis_reports(alg, &rest.iter().map(|&i| axes[i].clone()).collect::<Vec<_>>(), law)?;
    for (i, r) in rest.into_iter().zip(reports) {
        decompositions.insert(i, require_axis(&r, i)?);
    }

    // induced axet on the distinct axes: tau_i(a_j) = a_{2i-j}
    let p = period as i64;
    let point = |j: i64| distinct.binary_search(&representative[j.rem_euclid(p) as usize]).expect("distinct");
    let tau: Vec<Vec<usize>> = distinct
        .iter()
        .map(|&i| distinct.iter().map(|&j| point(2 * i as i64 - j as i64)).collect())
        .collect();
    let kind = match shape {
        FamilyShape::Regular(n) => AxetKind::Regular(n),
        FamilyShape::Skew(k) => AxetKind::Skew(k),
        FamilyShape::Abstract { .. } => AxetKind::Abstract,
    };
    let labels = distinct.iter().map(|&i| i as i64).collect();
    let axet = C2Axet::from_table(tau, Some(labels), kind).expect("well-formed tau table");

    Ok(AxisFamily {
        algebra: alg.clone(),
        law: law.clone(),
        tau0,
        tau1,
        rho,
        period,
        axes,
        representative,
        shape,
        axet,
        decompositions,
        s_cache: Mutex::new(HashMap::new()),
    })
}

impl AxisFamily {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn law(&self) -> &FusionLaw {
        &self.law
    }

    pub fn rho(&self) -> &Matrix {
        &self.rho
    }

    pub fn tau0(&self) -> &Matrix {
        &self.tau0
    }

    pub fn tau1(&self) -> &Matrix {
        &self.tau1
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn shape(&self) -> FamilyShape {
        self.shape
    }

    pub fn axet(&self) -> &C2Axet {
        &self.axet
    }

    fn slot(&self, i: i64) -> usize {
        self.representative[i.rem_euclid(self.period as i64) as usize]
    }

    /// `a_i` for any integer `i`.
    pub fn axis(&self, i: i64) -> &Vector {
        &self.axes[self.slot(i)]
    }

    /// Number of distinct axes.
    pub fn distinct_axes(&self) -> usize {
        self.decompositions.len()
    }

    pub fn decomposition(&self, i: i64) -> &Decomposition {
        &self.decompositions[&self.slot(i)]
    }

    /// Miyamoto involution of `a_i`.
    pub fn tau(&self, i: i64) -> Matrix {
        miyamoto(&self.algebra, self.decomposition(i)).matrix
    }

    /// Multiplicative order of `rho` as a matrix.
    pub fn rho_order(&self) -> usize {
        let mut m = self.rho.clone();
        let mut k = 1;
        while !m.is_identity() {
            m = m.mul(&self.rho).expect("square");
            k += 1;
        }
        k
    }

    /// Order of the group generated by `tau_0` and `tau_1`.
    pub fn group_order(&self) -> usize {
        let mut elements = vec![Matrix::identity(self.algebra.field(), self.algebra.dim())];
        let mut i = 0;
        while i < elements.len() {
            for g in [&self.tau0, &self.tau1] {
                let h = elements[i].mul(g).expect("square");
                if !elements.contains(&h) {
                    elements.push(h);
                }
            }
            i += 1;
        }
        elements.len()
    }

    /// `lambda_i`, the projection of `a_i` onto `a_0`.
    pub fn lambda(&self, i: i64) -> Result<Scalar, AlgebraError> {
        self.decomposition(0).projection(self.axis(i))
    }

    fn beta(&self) -> Result<Scalar, AlgebraError> {
        self.law.beta().cloned().ok_or(AlgebraError::NotMonsterType)
    }

    /// `s_{i,r} = a_i a_{i+r} - beta (a_i + a_{i+r})`.
    pub fn s_vector(&self, i: i64, r: usize) -> Result<Vector, AlgebraError> {
        let key = (i.rem_euclid(self.period as i64), r % self.period);
        if let Some(v) = self.s_cache.lock().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let beta = self.beta()?;
        let x = self.axis(i);
        let y = self.axis(i + r as i64);
        let s = self.algebra.multiply(x, y)?.sub(&x.add(y).scale(&beta));
        self.s_cache.lock().expect("cache lock").insert(key, s.clone());
        Ok(s)
    }

    /// Decomposes `a_i` against `a_0` by the closed eigenvector formulas and checks them.
    pub fn eigenvector_check(&self, i: i64) -> Result<AxisDecompositionData, AlgebraError> {
        let f = self.algebra.field();
        let alpha = self.law.alpha().clone();
        let beta = self.beta()?;
        let alpha_inv = alpha.inv().map_err(|_| AlgebraError::AlphaNotInvertible)?;
        let half = f.int(2).inv()?;
        let d0 = self.decomposition(0);
        let a0 = self.axis(0);
        let (ai, ami) = (self.axis(i), self.axis(-i));
        let lambda = self.lambda(i)?;
        let gamma = &beta - &lambda;
        let epsilon = &(&(&f.one() - &alpha) * &lambda) - &beta;
        let s = self.s_vector(0, i.rem_euclid(self.period as i64) as usize)?;
        let sum = ai.add(ami);

        let u = a0
            .scale(&epsilon)
            .add(&sum.scale(&(&half * &(&alpha - &beta))))
            .sub(&s)
            .scale(&alpha_inv);
        let v = a0.scale(&gamma).add(&sum.scale(&(&half * &beta))).add(&s).scale(&alpha_inv);
        let w = ai.sub(ami).scale(&half);

        for (name, vec, e) in [("u", &u, Eigen::Zero), ("v", &v, Eigen::Alpha), ("w", &w, Eigen::Beta)] {
            if !span_membership(d0.part(e), vec)?.is_member() {
                return Err(AlgebraError::MembershipFailed(format!("{name}_{i} is not in the {e}-eigenspace of a_0")));
            }
        }
        let rebuilt = a0.scale(&lambda).add(&u).add(&v).add(&w);
        if &rebuilt != ai {
            return Err(AlgebraError::MembershipFailed(format!("reconstruction of a_{i} failed")));
        }
        Ok(AxisDecompositionData { index: i, lambda, gamma, epsilon, u, v, w })
    }
}
