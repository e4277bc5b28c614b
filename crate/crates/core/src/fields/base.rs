//! Prime-field and rational scalars used as the ground layer of the field tower.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Ground field of a tower: either the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum BaseField {
    Rationals,
    Prime(u64),
}

/// An element of a [`BaseField`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Base {
    Q(BigRational),
    P { v: u64, p: u64 },
}

impl BaseField {
    pub fn zero(self) -> Base {
        self.int(0)
    }

    pub fn one(self) -> Base {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Base {
        match self {
            BaseField::Rationals => Base::Q(BigRational::from_integer(n.into())),
            BaseField::Prime(p) => Base::P { v: reduce_i128(n as i128, p), p },
        }
    }

    pub fn big_int(self, n: &BigInt) -> Base {
        match self {
            BaseField::Rationals => Base::Q(BigRational::from_integer(n.clone())),
            BaseField::Prime(p) => Base::P { v: reduce_big(n, p), p },
        }
    }

    /// Maps a rational into this field; `None` when the denominator vanishes mod p.
    pub fn rational(self, q: &BigRational) -> Option<Base> {
        match self {
            BaseField::Rationals => Some(Base::Q(q.clone())),
            BaseField::Prime(p) => {
                let num = reduce_big(q.numer(), p);
                let den = reduce_big(q.denom(), p);
                if den == 0 {
                    return None;
                }
                Some(Base::P { v: mul_mod(num, inv_mod(den, p), p), p })
            }
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            BaseField::Rationals => 0,
            BaseField::Prime(p) => p,
        }
    }
}

impl Base {
    pub fn field(&self) -> BaseField {
        match self {
            Base::Q(_) => BaseField::Rationals,
            Base::P { p, .. } => BaseField::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Base::Q(q) => q.is_zero(),
            Base::P { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Base::Q(q) => q.is_one(),
            Base::P { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, o: &Base) -> Base {
        match (self, o) {
            (Base::Q(a), Base::Q(b)) => Base::Q(a + b),
            (Base::P { v: a, p }, Base::P { v: b, .. }) => {
                Base::P { v: ((*a as u128 + *b as u128) % *p as u128) as u64, p: *p }
            }
            _ => unreachable!("base field mismatch"),
        }
    }

    pub fn neg(&self) -> Base {
        match self {
            Base::Q(a) => Base::Q(-a),
            Base::P { v, p } => Base::P { v: if *v == 0 { 0 } else { p - v }, p: *p },
        }
    }

    pub fn sub(&self, o: &Base) -> Base {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Base) -> Base {
        match (self, o) {
            (Base::Q(a), Base::Q(b)) => Base::Q(a * b),
            (Base::P { v: a, p }, Base::P { v: b, .. }) => Base::P { v: mul_mod(*a, *b, *p), p: *p },
            _ => unreachable!("base field mismatch"),
        }
    }

    pub fn inv(&self) -> Option<Base> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Base::Q(a) => Base::Q(a.recip()),
            Base::P { v, p } => Base::P { v: inv_mod(*v, *p), p: *p },
        })
    }

    pub fn pow(&self, mut e: u64) -> Base {
        let mut acc = self.field().one();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// Whether this element is a square in its own field.
    pub fn is_square(&self) -> bool {
        match self {
            Base::Q(q) => {
                !q.is_negative() && is_perfect_square(q.numer()) && is_perfect_square(q.denom())
            }
            Base::P { v, p } => *v == 0 || pow_mod(*v, (p - 1) / 2, *p) == 1,
        }
    }

    /// Sign used by the printer: negative rationals print with a leading minus.
    pub fn is_negative(&self) -> bool {
        match self {
            Base::Q(q) => q.is_negative(),
            Base::P { .. } => false,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Base::Q(q) => Some(q),
            Base::P { .. } => None,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Base::P { v, .. } => write!(f, "{v}"),
        }
    }
}

fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

pub(crate) fn reduce_i128(n: i128, p: u64) -> u64 {
    n.rem_euclid(p as i128) as u64
}

pub(crate) fn reduce_big(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    debug_assert!(r.sign() != Sign::Minus);
    r.to_u64().expect("residue fits in u64")
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let e = (a as i128).extended_gcd(&(p as i128));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(p as i128) as u64
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}
