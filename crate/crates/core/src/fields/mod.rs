//! Exact scalars for the field tower: Q, F_p, one quadratic extension, and
//! rational function fields in named indeterminates.
//!
//! Every [`Scalar`] carries its [`Field`] descriptor. Values are kept in a
//! canonical form, so structural equality is field equality:
//!
//! * rationals are reduced fractions,
//! * prime-field residues lie in `[0, p)`,
//! * `a + b*sqrt(d)` stores the pair `(a, b)` over the base,
//! * rational functions are `num/den` with `gcd(num, den) = 1` and `den`
//!   monic for the lexicographic order given by the variable list.
//!
//! The arithmetic operators on `&Scalar` panic on a descriptor mismatch;
//! [`arith`] and the `try_*` methods report it as [`FieldError`] instead.

mod base;
mod intfactor;
mod poly;
mod ratfunc;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use base::{Base, BaseField};
use poly::Poly;
use ratfunc::RatFunc;

pub use base::is_prime_u64;
pub use intfactor::{divisors, factor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("descriptor mismatch: {left} vs {right}")]
    DescriptorMismatch { left: String, right: String },
    #[error("pole at specialization: denominator {denominator} vanishes")]
    PoleAtSpecialization { denominator: String },
    #[error("input is identically zero")]
    ZeroInput,
    #[error("invalid field descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no assignment for variable `{0}`")]
    MissingAssignment(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// The shape of a field descriptor.
#[derive(Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    Prime(u64),
    /// `base(sqrt(d))`, with `base` the rationals or a prime field.
    Quadratic { base: Field, d: Scalar },
    /// `base(x_1, ..., x_n)`, with `base` the rationals or a prime field.
    Function { base: Field, variables: Vec<String> },
}

/// A shared, immutable field descriptor.
#[derive(Clone, Debug, Hash)]
pub struct Field(Arc<FieldKind>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Field {}

impl Field {
    pub fn rationals() -> Field {
        Field(Arc::new(FieldKind::Rationals))
    }

    /// The prime field F_p; `p` must be an odd prime.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if p == 2 {
            return Err(FieldError::InvalidDescriptor("characteristic 2 is excluded".into()));
        }
        if !is_prime_u64(p) || p >= 1 << 62 {
            return Err(FieldError::InvalidDescriptor(format!("{p} is not a supported prime")));
        }
        Ok(Field(Arc::new(FieldKind::Prime(p))))
    }

    /// `base(sqrt(d))`; `d` must be a non-square of `base`.
    pub fn quadratic(base: &Field, d: &Scalar) -> Result<Field, FieldError> {
        if !base.is_ground() {
            return Err(FieldError::InvalidDescriptor(
                "quadratic extensions are only supported over Q or F_p".into(),
            ));
        }
        if d.field() != base {
            return Err(mismatch(base, d.field()));
        }
        if d.ground().is_square() {
            return Err(FieldError::InvalidDescriptor(format!("{d} is a square in {base}")));
        }
        Ok(Field(Arc::new(FieldKind::Quadratic { base: base.clone(), d: d.clone() })))
    }

    /// Rational function field over Q or F_p in distinct, non-empty variable names.
    pub fn function<S: AsRef<str>>(base: &Field, variables: &[S]) -> Result<Field, FieldError> {
        if !base.is_ground() {
            return Err(FieldError::InvalidDescriptor(
                "function fields are only supported over Q or F_p".into(),
            ));
        }
        let variables: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
        if variables.is_empty() {
            return Err(FieldError::InvalidDescriptor("function field needs a variable".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            let ok = !v.is_empty()
                && v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                && v != "sqrt";
            if !ok {
                return Err(FieldError::InvalidDescriptor(format!("bad variable name `{v}`")));
            }
            if variables[..i].contains(v) {
                return Err(FieldError::InvalidDescriptor(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Field(Arc::new(FieldKind::Function { base: base.clone(), variables })))
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    fn is_ground(&self) -> bool {
        matches!(*self.0, FieldKind::Rationals | FieldKind::Prime(_))
    }

    fn ground(&self) -> BaseField {
        match &*self.0 {
            FieldKind::Rationals => BaseField::Rationals,
            FieldKind::Prime(p) => BaseField::Prime(*p),
            FieldKind::Quadratic { base, .. } | FieldKind::Function { base, .. } => base.ground(),
        }
    }

    /// The field one level down (itself for Q and F_p).
    pub fn base(&self) -> &Field {
        match &*self.0 {
            FieldKind::Quadratic { base, .. } | FieldKind::Function { base, .. } => base,
            _ => self,
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.ground().characteristic()
    }

    pub fn variables(&self) -> &[String] {
        match &*self.0 {
            FieldKind::Function { variables, .. } => variables,
            _ => &[],
        }
    }

    fn nvars(&self) -> usize {
        self.variables().len()
    }

    fn from_base(&self, b: Base) -> Scalar {
        let repr = match &*self.0 {
            FieldKind::Rationals | FieldKind::Prime(_) => Repr::Base(b),
            FieldKind::Quadratic { .. } => Repr::Quad(b, self.ground().zero()),
            FieldKind::Function { .. } => Repr::Func(RatFunc::constant(b, self.nvars())),
        };
        Scalar { field: self.clone(), repr }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        self.from_base(self.ground().int(n))
    }

    pub fn big_int(&self, n: &BigInt) -> Scalar {
        self.from_base(self.ground().big_int(n))
    }

    /// The image of a rational; fails if its denominator vanishes in this characteristic.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar, FieldError> {
        self.ground().rational(q).map(|b| self.from_base(b)).ok_or(FieldError::DivisionByZero)
    }

    pub fn rational(&self, num: i64, den: i64) -> Result<Scalar, FieldError> {
        if den == 0 {
            return Err(FieldError::DivisionByZero);
        }
        self.from_rational(&BigRational::new(num.into(), den.into()))
    }

    /// The indeterminate `name` of a function field.
    pub fn var(&self, name: &str) -> Result<Scalar, FieldError> {
        let idx = self
            .variables()
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| FieldError::UnknownVariable(name.to_string()))?;
        let p = Poly::var(self.ground(), self.nvars(), idx);
        Ok(Scalar { field: self.clone(), repr: Repr::Func(RatFunc::from_poly(p)) })
    }

    /// `sqrt(d)` in a quadratic extension.
    pub fn sqrt_d(&self) -> Result<Scalar, FieldError> {
        match &*self.0 {
            FieldKind::Quadratic { .. } => {
                let g = self.ground();
                Ok(Scalar { field: self.clone(), repr: Repr::Quad(g.zero(), g.one()) })
            }
            _ => Err(FieldError::Unsupported(format!("{self} has no distinguished square root"))),
        }
    }

    /// The radicand of a quadratic extension.
    pub fn radicand(&self) -> Option<&Scalar> {
        match &*self.0 {
            FieldKind::Quadratic { d, .. } => Some(d),
            _ => None,
        }
    }

    /// Maps an element of the ground field of `from` into `self`, which must
    /// share that ground field or be F_p over a rational ground.
    fn embed_ground(&self, b: &Base) -> Result<Scalar, FieldError> {
        match (b, self.ground()) {
            (Base::Q(q), BaseField::Prime(_)) => self.from_rational(q).map_err(|_| {
                FieldError::PoleAtSpecialization { denominator: q.denom().to_string() }
            }),
            (_, g) if g == b.field() => Ok(self.from_base(b.clone())),
            _ => Err(FieldError::DescriptorMismatch {
                left: format!("{:?}", b.field()),
                right: self.to_string(),
            }),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "GF({p})"),
            FieldKind::Quadratic { base, d } => write!(f, "{base}(sqrt({d}))"),
            FieldKind::Function { base, variables } => write!(f, "{base}({})", variables.join(", ")),
        }
    }
}

fn mismatch(a: &Field, b: &Field) -> FieldError {
    FieldError::DescriptorMismatch { left: a.to_string(), right: b.to_string() }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Base(Base),
    /// `a + b*sqrt(d)`
    Quad(Base, Base),
    Func(RatFunc),
}

/// An element of an exact field, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: Field,
    repr: Repr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic.
pub fn arith(op: ArithOp, x: &Scalar, y: &Scalar) -> Result<Scalar, FieldError> {
    match op {
        ArithOp::Add => x.try_add(y),
        ArithOp::Sub => x.try_sub(y),
        ArithOp::Mul => x.try_mul(y),
        ArithOp::Div => x.try_div(y),
    }
}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    fn ground(&self) -> &Base {
        match &self.repr {
            Repr::Base(b) => b,
            _ => panic!("not a ground-field scalar"),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Base(b) => b.is_zero(),
            Repr::Quad(a, b) => a.is_zero() && b.is_zero(),
            Repr::Func(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Base(b) => b.is_one(),
            Repr::Quad(a, b) => a.is_one() && b.is_zero(),
            Repr::Func(r) => r.is_one(),
        }
    }

    fn check(&self, o: &Scalar) -> Result<(), FieldError> {
        if self.field == o.field {
            Ok(())
        } else {
            Err(mismatch(&self.field, &o.field))
        }
    }

    fn with(&self, repr: Repr) -> Scalar {
        Scalar { field: self.field.clone(), repr }
    }

    pub fn try_add(&self, o: &Scalar) -> Result<Scalar, FieldError> {
        self.check(o)?;
        Ok(self.with(match (&self.repr, &o.repr) {
            (Repr::Base(a), Repr::Base(b)) => Repr::Base(a.add(b)),
            (Repr::Quad(a, b), Repr::Quad(c, d)) => Repr::Quad(a.add(c), b.add(d)),
            (Repr::Func(a), Repr::Func(b)) => Repr::Func(a.add(b)),
            _ => unreachable!("representation follows descriptor"),
        }))
    }

    pub fn try_sub(&self, o: &Scalar) -> Result<Scalar, FieldError> {
        self.try_add(&o.neg_ref())
    }

    pub fn try_mul(&self, o: &Scalar) -> Result<Scalar, FieldError> {
        self.check(o)?;
        Ok(self.with(match (&self.repr, &o.repr) {
            (Repr::Base(a), Repr::Base(b)) => Repr::Base(a.mul(b)),
            (Repr::Quad(a, b), Repr::Quad(c, e)) => {
                let d = self.field.radicand().expect("quadratic field").ground();
                Repr::Quad(a.mul(c).add(&b.mul(e).mul(d)), a.mul(e).add(&b.mul(c)))
            }
            (Repr::Func(a), Repr::Func(b)) => Repr::Func(a.mul(b)),
            _ => unreachable!("representation follows descriptor"),
        }))
    }

    pub fn try_div(&self, o: &Scalar) -> Result<Scalar, FieldError> {
        self.check(o)?;
        self.try_mul(&o.inv()?)
    }

    fn neg_ref(&self) -> Scalar {
        self.with(match &self.repr {
            Repr::Base(a) => Repr::Base(a.neg()),
            Repr::Quad(a, b) => Repr::Quad(a.neg(), b.neg()),
            Repr::Func(r) => Repr::Func(r.neg()),
        })
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.with(match &self.repr {
            Repr::Base(a) => Repr::Base(a.inv().expect("nonzero")),
            Repr::Quad(a, b) => {
                // (a - b sqrt d) / (a^2 - b^2 d)
                let d = self.field.radicand().expect("quadratic field").ground();
                let norm = a.mul(a).sub(&b.mul(b).mul(d));
                let ni = norm.inv().expect("d is not a square");
                Repr::Quad(a.mul(&ni), b.neg().mul(&ni))
            }
            Repr::Func(r) => Repr::Func(r.inv().expect("nonzero")),
        }))
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = self.field.one();
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i64) -> Result<Scalar, FieldError> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e < 0 {
            p.inv()
        } else {
            Ok(p)
        }
    }

    /// The value as a rational, if this is an element of Q or a constant of a
    /// rational quadratic or function field.
    pub fn to_rational(&self) -> Option<BigRational> {
        match &self.repr {
            Repr::Base(b) => b.as_rational().cloned(),
            Repr::Quad(a, b) if b.is_zero() => a.as_rational().cloned(),
            Repr::Func(r) if r.den().is_constant() => {
                let n = r.num().constant_value()?;
                let d = r.den().constant_value()?;
                Some(n.as_rational()?.clone() / d.as_rational()?.clone())
            }
            _ => None,
        }
    }

    /// Residue in `[0, p)` for prime-field scalars.
    pub fn to_residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Base(Base::P { v, .. }) => Some(*v),
            _ => None,
        }
    }

    /// `(a, b)` with `self = a + b*sqrt(d)`, as base-field scalars.
    pub fn quadratic_parts(&self) -> Option<(Scalar, Scalar)> {
        match &self.repr {
            Repr::Quad(a, b) => {
                let base = self.field.base();
                Some((base.from_base(a.clone()), base.from_base(b.clone())))
            }
            _ => None,
        }
    }

    /// Numerator and denominator of a rational function, each as an element of
    /// the same function field.
    pub fn numerator_denominator(&self) -> Option<(Scalar, Scalar)> {
        match &self.repr {
            Repr::Func(r) => Some((
                self.with(Repr::Func(RatFunc::from_poly(r.num().clone()))),
                self.with(Repr::Func(RatFunc::from_poly(r.den().clone()))),
            )),
            _ => None,
        }
    }

    /// Roots in the ground field of the numerator, when the numerator involves
    /// only `var`. Rational roots over Q; exhaustive search over small F_p.
    pub fn numerator_roots(&self, var: &str) -> Result<Vec<Scalar>, FieldError> {
        let Repr::Func(r) = &self.repr else {
            return Err(FieldError::Unsupported("root extraction needs a function field".into()));
        };
        let idx = self
            .field
            .variables()
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| FieldError::UnknownVariable(var.to_string()))?;
        if r.is_zero() {
            return Err(FieldError::ZeroInput);
        }
        let roots = r
            .num()
            .univariate_roots(idx)
            .ok_or_else(|| FieldError::Unsupported(format!("numerator is not univariate in {var}")))?;
        let base = self.field.base();
        Ok(roots.into_iter().map(|b| base.from_base(b)).collect())
    }

    /// Substitutes every indeterminate of a function-field scalar.
    ///
    /// All assigned values must share one target field: the base field, or
    /// F_p when the base is Q.
    pub fn specialize(&self, assignments: &BTreeMap<String, Scalar>) -> Result<Scalar, FieldError> {
        let Repr::Func(r) = &self.repr else {
            return Err(FieldError::Unsupported(format!("{} is not a function field", self.field)));
        };
        let vars = self.field.variables();
        let mut values = Vec::with_capacity(vars.len());
        for v in vars {
            values.push(assignments.get(v).ok_or_else(|| FieldError::MissingAssignment(v.clone()))?);
        }
        let target = values[0].field().clone();
        if let Some(bad) = values.iter().find(|v| v.field() != &target) {
            return Err(mismatch(&target, bad.field()));
        }
        let eval = |p: &Poly| -> Result<Scalar, FieldError> {
            let mut acc = target.zero();
            for (m, c) in p.terms() {
                let mut t = target.embed_ground(c)?;
                for (x, &e) in values.iter().zip(m) {
                    if e > 0 {
                        t = &t * &x.pow(e);
                    }
                }
                acc = &acc + &t;
            }
            Ok(acc)
        };
        let den = eval(r.den()).map_err(|e| match e {
            FieldError::PoleAtSpecialization { .. } => FieldError::PoleAtSpecialization {
                denominator: self.den_string(),
            },
            e => e,
        })?;
        if den.is_zero() {
            return Err(FieldError::PoleAtSpecialization { denominator: self.den_string() });
        }
        let num = eval(r.num())?;
        num.try_div(&den)
    }

    fn den_string(&self) -> String {
        match &self.repr {
            Repr::Func(r) => PolyDisplay(r.den(), self.field.variables()).to_string(),
            _ => "1".into(),
        }
    }
}

struct PolyDisplay<'a>(&'a Poly, &'a [String]);

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(self.1, f)
    }
}

impl fmt::Display for Scalar {
    /// Canonical text; it re-parses to the same scalar with [`crate::io::parse_scalar`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Base(b) => write!(f, "{b}"),
            Repr::Quad(a, b) => {
                let d = self.field.radicand().expect("quadratic field");
                if b.is_zero() {
                    return write!(f, "{a}");
                }
                let (neg, abs) = if b.is_negative() { (true, b.neg()) } else { (false, b.clone()) };
                let root = if abs.is_one() { format!("sqrt({d})") } else { format!("{abs}*sqrt({d})") };
                match (a.is_zero(), neg) {
                    (true, false) => write!(f, "{root}"),
                    (true, true) => write!(f, "-{root}"),
                    (false, false) => write!(f, "{a} + {root}"),
                    (false, true) => write!(f, "{a} - {root}"),
                }
            }
            Repr::Func(r) => {
                let vars = self.field.variables();
                let num = PolyDisplay(r.num(), vars).to_string();
                if r.den().is_one() {
                    return write!(f, "{num}");
                }
                let den = PolyDisplay(r.den(), vars).to_string();
                if r.num().terms().count() > 1 {
                    write!(f, "({num})/({den})")
                } else {
                    write!(f, "{num}/({den})")
                }
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$try(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

/// Evidence that an element of Q or Q(sqrt d) vanishes only in certain
/// characteristics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharConstraints {
    /// `a` for `x = a/c`, or `a^2 - b^2 d` for `x = (a + b sqrt d)/c` with
    /// integers `a, b, c` (numerator taken when `d` is not an integer).
    pub evidence: BigInt,
    /// Prime factorization of `|evidence|`, increasing primes.
    pub factorization: Vec<(BigInt, u32)>,
}

impl CharConstraints {
    pub fn primes(&self) -> Vec<BigInt> {
        self.factorization.iter().map(|(p, _)| p.clone()).collect()
    }

    pub fn allows(&self, p: u64) -> bool {
        self.factorization.iter().any(|(q, _)| *q == BigInt::from(p))
    }
}

/// Primes `p` in which `x` may vanish. In the quadratic case the value is
/// squared away, so the prime set is a necessary condition, not a vanishing
/// claim. Characteristic 2 is reported when it divides the evidence.
pub fn char_constraints(x: &Scalar) -> Result<CharConstraints, FieldError> {
    if x.is_zero() {
        return Err(FieldError::ZeroInput);
    }
    let evidence = match (&x.repr, x.field.kind()) {
        (Repr::Base(Base::Q(q)), _) => q.numer().clone(),
        (Repr::Quad(Base::Q(a), Base::Q(b)), FieldKind::Quadratic { d, .. }) => {
            if b.is_zero() {
                a.numer().clone()
            } else {
                let c = a.denom().lcm(b.denom());
                let ai = (a * BigRational::from_integer(c.clone())).to_integer();
                let bi = (b * BigRational::from_integer(c)).to_integer();
                let d = d.to_rational().expect("rational radicand");
                let norm = BigRational::from_integer(&ai * &ai) - BigRational::from_integer(&bi * &bi) * d;
                norm.numer().clone()
            }
        }
        _ => {
            return Err(FieldError::Unsupported(format!(
                "characteristic constraints need Q or Q(sqrt d), got {}",
                x.field
            )))
        }
    };
    debug_assert!(!evidence.is_zero());
    let factorization = if evidence.magnitude().is_one() { Vec::new() } else { factor(&evidence) };
    Ok(CharConstraints { evidence, factorization })
}
