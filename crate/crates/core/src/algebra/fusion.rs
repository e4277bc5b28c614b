use std::fmt;

use serde::Serialize;

use super::AlgebraError;
use crate::fields::Scalar;

/// Eigenvalue labels of the Monster-type fusion law, in processing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Eigen {
    One,
    Zero,
    Alpha,
    Beta,
}

impl Eigen {
    pub const ALL: [Eigen; 4] = [Eigen::One, Eigen::Zero, Eigen::Alpha, Eigen::Beta];
}

impl fmt::Display for Eigen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Eigen::One => "1",
            Eigen::Zero => "0",
            Eigen::Alpha => "alpha",
            Eigen::Beta => "beta",
        })
    }
}

/// The fusion law M(alpha, beta), or its Jordan-type restriction J(eta) to
/// `{1, 0, eta}` when `beta` is absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionLaw {
    alpha: Scalar,
    beta: Option<Scalar>,
}

impl FusionLaw {
    pub fn monster(alpha: Scalar, beta: Scalar) -> Result<FusionLaw, AlgebraError> {
        if alpha.field() != beta.field() {
            return Err(AlgebraError::InvalidFusionLaw(format!(
                "alpha in {} but beta in {}",
                alpha.field(),
                beta.field()
            )));
        }
        let law = FusionLaw { alpha, beta: Some(beta) };
        law.check_distinct()?;
        Ok(law)
    }

    pub fn jordan(eta: Scalar) -> Result<FusionLaw, AlgebraError> {
        let law = FusionLaw { alpha: eta, beta: None };
        law.check_distinct()?;
        Ok(law)
    }

    /// 1, 0, alpha (and beta) must be pairwise distinct in the working field.
    fn check_distinct(&self) -> Result<(), AlgebraError> {
        let values: Vec<(Eigen, Scalar)> = self.eigenvalues().into_iter().map(|e| (e, self.value(e))).collect();
        for (i, (ei, vi)) in values.iter().enumerate() {
            for (ej, vj) in &values[..i] {
                if vi == vj {
                    return Err(AlgebraError::InvalidFusionLaw(format!(
                        "eigenvalues {ej} and {ei} coincide ({vi})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_monster(&self) -> bool {
        self.beta.is_some()
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn beta(&self) -> Option<&Scalar> {
        self.beta.as_ref()
    }

    pub fn eigenvalues(&self) -> Vec<Eigen> {
        if self.beta.is_some() {
            Eigen::ALL.to_vec()
        } else {
            vec![Eigen::One, Eigen::Zero, Eigen::Alpha]
        }
    }

    pub fn value(&self, e: Eigen) -> Scalar {
        let f = self.alpha.field();
        match e {
            Eigen::One => f.one(),
            Eigen::Zero => f.zero(),
            Eigen::Alpha => self.alpha.clone(),
            Eigen::Beta => self.beta.clone().expect("beta is part of this law"),
        }
    }

    /// `a * b` from the fusion table.
    pub fn fuse(&self, a: Eigen, b: Eigen) -> Vec<Eigen> {
        use Eigen::*;
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        match (a, b) {
            (One, One) => vec![One],
            (One, Zero) => vec![],
            (One, x) | (Zero, x) if x == Alpha || x == Beta => vec![x],
            (Zero, Zero) => vec![Zero],
            (Alpha, Alpha) => vec![One, Zero],
            (Alpha, Beta) => vec![Beta],
            (Beta, Beta) => vec![One, Zero, Alpha],
            _ => unreachable!("pairs are ordered"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Field;

    #[test]
    fn table_matches_monster_law() {
        let f = Field::rationals();
        let law = FusionLaw::monster(f.rational(1, 4).unwrap(), f.rational(1, 32).unwrap()).unwrap();
        use Eigen::*;
        assert_eq!(law.fuse(Beta, Beta), vec![One, Zero, Alpha]);
        assert_eq!(law.fuse(Alpha, Alpha), vec![One, Zero]);
        assert_eq!(law.fuse(Zero, One), vec![]);
        assert_eq!(law.fuse(Beta, Zero), vec![Beta]);
        assert_eq!(law.fuse(Alpha, One), vec![Alpha]);
        assert_eq!(law.fuse(Beta, Alpha), vec![Beta]);
        for a in Eigen::ALL {
            for b in Eigen::ALL {
                assert_eq!(law.fuse(a, b), law.fuse(b, a));
            }
        }
    }

    #[test]
    fn rejects_degenerate_parameters() {
        let f = Field::rationals();
        assert!(FusionLaw::monster(f.one(), f.rational(1, 2).unwrap()).is_err());
        assert!(FusionLaw::monster(f.rational(1, 2).unwrap(), f.zero()).is_err());
        assert!(FusionLaw::monster(f.rational(1, 3).unwrap(), f.rational(1, 3).unwrap()).is_err());
        assert!(FusionLaw::jordan(f.zero()).is_err());
        assert!(FusionLaw::jordan(f.rational(-1, 1).unwrap()).is_ok());
    }
}
