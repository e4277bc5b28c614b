//! Reduced fractions of multivariate polynomials.

use super::base::{Base, BaseField};
use super::poly::Poly;

/// `num / den` with `gcd(num, den) = 1` and `den` monic in lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn from_poly(p: Poly) -> Self {
        let den = Poly::one(p.base(), p.nvars());
        RatFunc { num: p, den }
    }

    pub fn constant(c: Base, nvars: usize) -> Self {
        RatFunc::from_poly(Poly::constant(c, nvars))
    }

    /// `None` when `den` is zero.
    #[cfg(test)]
    pub fn new(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::from_poly(Poly::zero(num.base(), num.nvars()));
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = Poly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        let lc = den.leading().expect("nonzero denominator").1.clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.inv().expect("nonzero");
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn base(&self) -> BaseField {
        self.num.base()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return Self::normalized(self.num.add(&o.num), self.den.clone());
        }
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Self::normalized(num, self.den.mul(&o.den))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::from_poly(Poly::zero(self.base(), self.num.nvars()));
        }
        // Cross-cancel first so the products stay small.
        let g1 = Poly::gcd(&self.num, &o.den);
        let g2 = Poly::gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let lc = den.leading().expect("nonzero").1.clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.inv().expect("nonzero");
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalized(self.den.clone(), self.num.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_common_factor() {
        let b = BaseField::Rationals;
        let x = Poly::var(b, 1, 0);
        let one = Poly::one(b, 1);
        // (x^2 - 1) / (2x - 2) = (x + 1) / 2 -> den monic: (x/2 + 1/2) / 1
        let num = x.mul(&x).sub(&one);
        let den = x.scale(&b.int(2)).sub(&one.scale(&b.int(2)));
        let r = RatFunc::new(num, den).unwrap();
        assert!(r.den().is_one());
        let half = b.one().mul(&b.int(2).inv().unwrap());
        assert_eq!(r.num(), &x.scale(&half).add(&Poly::constant(half, 1)));
    }

    #[test]
    fn zero_denominator_rejected() {
        let b = BaseField::Prime(7);
        assert!(RatFunc::new(Poly::one(b, 1), Poly::zero(b, 1)).is_none());
    }
}
