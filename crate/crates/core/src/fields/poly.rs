//! Sparse multivariate polynomials over a ground field, in lexicographic order.
//!
//! Variable 0 is the most significant. Canonical rational functions need a
//! gcd; it is computed recursively on the first variable that occurs, with
//! a primitive pseudo-remainder sequence and content taken over the
//! remaining variables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::base::{Base, BaseField};
use super::intfactor::divisors;

pub(crate) type Mono = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Poly {
    base: BaseField,
    nvars: usize,
    terms: BTreeMap<Mono, Base>,
}

fn mono_divides(d: &Mono, m: &Mono) -> bool {
    d.iter().zip(m).all(|(a, b)| a <= b)
}

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn mono_div(m: &Mono, d: &Mono) -> Mono {
    m.iter().zip(d).map(|(x, y)| x - y).collect()
}

impl Poly {
    pub fn zero(base: BaseField, nvars: usize) -> Self {
        Poly { base, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(c: Base, nvars: usize) -> Self {
        let base = c.field();
        let mut p = Poly::zero(base, nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(base: BaseField, nvars: usize) -> Self {
        Poly::constant(base.one(), nvars)
    }

    pub fn var(base: BaseField, nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        let mut p = Poly::zero(base, nvars);
        p.terms.insert(m, base.one());
        p
    }

    pub fn base(&self) -> BaseField {
        self.base
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Base)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().all(|m| m.iter().all(|&e| e == 0)))
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.terms.values().all(Base::is_one) && !self.is_zero()
    }

    pub fn constant_value(&self) -> Option<Base> {
        if self.is_zero() {
            Some(self.base.zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<(&Mono, &Base)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Mono, c: Base) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// `self -= c * x^m * other`, in place.
    fn sub_scaled_shifted(&mut self, other: &Poly, m: &Mono, c: &Base) {
        let nc = c.neg();
        for (om, oc) in &other.terms {
            self.add_term(mono_mul(om, m), oc.mul(&nc));
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Poly {
        Poly {
            base: self.base,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.neg());
        }
        r
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut r = Poly::zero(self.base, self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(mono_mul(m1, m2), c1.mul(c2));
            }
        }
        r
    }

    pub fn scale(&self, c: &Base) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.base, self.nvars);
        }
        Poly {
            base: self.base,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x.mul(c))).collect(),
        }
    }

    #[cfg(test)]
    pub fn pow(&self, mut e: u32) -> Poly {
        let mut acc = Poly::one(self.base, self.nvars);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    /// Scales so that the lex-leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, lc)) if !lc.is_one() => self.scale(&lc.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m[v]).max().unwrap_or(0)
    }

    pub fn is_univariate_in(&self, v: usize) -> bool {
        self.terms.keys().all(|m| m.iter().enumerate().all(|(i, &e)| i == v || e == 0))
    }

    /// Coefficient polynomials of `x_v^k` for `k = 0..=deg`.
    fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let deg = self.degree_in(v) as usize;
        let mut out = vec![Poly::zero(self.base, self.nvars); deg + 1];
        for (m, c) in &self.terms {
            let k = m[v] as usize;
            let mut mm = m.clone();
            mm[v] = 0;
            out[k].terms.insert(mm, c.clone());
        }
        out
    }

    fn lead_coeff_in(&self, v: usize) -> Poly {
        let deg = self.degree_in(v);
        let mut out = Poly::zero(self.base, self.nvars);
        for (m, c) in &self.terms {
            if m[v] == deg {
                let mut mm = m.clone();
                mm[v] = 0;
                out.terms.insert(mm, c.clone());
            }
        }
        out
    }

    fn shift(&self, v: usize, k: u32) -> Poly {
        Poly {
            base: self.base,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut mm = m.clone();
                    mm[v] += k;
                    (mm, c.clone())
                })
                .collect(),
        }
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (lm_d, lc_d) = d.leading()?;
        let lm_d = lm_d.clone();
        let inv = lc_d.inv()?;
        let mut r = self.clone();
        let mut q = Poly::zero(self.base, self.nvars);
        while let Some((lm, lc)) = r.leading() {
            if !mono_divides(&lm_d, lm) {
                return None;
            }
            let m = mono_div(lm, &lm_d);
            let c = lc.mul(&inv);
            r.sub_scaled_shifted(d, &m, &c);
            q.add_term(m, c);
        }
        Some(q)
    }

    fn prem(&self, b: &Poly, v: usize) -> Poly {
        let db = b.degree_in(v);
        let lcb = b.lead_coeff_in(v);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(v) >= db {
            let dr = r.degree_in(v);
            let lcr = r.lead_coeff_in(v);
            r = lcb.mul(&r).sub(&lcr.mul(b).shift(v, dr - db));
        }
        r
    }

    fn content_in(&self, v: usize) -> Poly {
        let mut g = Poly::zero(self.base, self.nvars);
        for c in self.coeffs_in(v).into_iter().filter(|c| !c.is_zero()) {
            g = Poly::gcd(&g, &c);
            if g.is_constant() {
                break;
            }
        }
        g
    }

    fn primitive_in(&self, v: usize) -> Poly {
        let c = self.content_in(v);
        self.div_exact(&c).expect("content divides").monic()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return Poly::one(a.base, a.nvars);
        }
        let v = (0..a.nvars)
            .find(|&i| a.degree_in(i) > 0 || b.degree_in(i) > 0)
            .expect("non-constant polynomial has a variable");
        if a.degree_in(v) == 0 {
            return Poly::gcd(a, &b.content_in(v));
        }
        if b.degree_in(v) == 0 {
            return Poly::gcd(&a.content_in(v), b);
        }
        if a.nvars == 1 || (a.is_univariate_in(v) && b.is_univariate_in(v)) {
            return univariate_gcd(a, b);
        }
        let ca = a.content_in(v);
        let cb = b.content_in(v);
        let mut p = a.div_exact(&ca).expect("content divides").monic();
        let mut q = b.div_exact(&cb).expect("content divides").monic();
        if p.degree_in(v) < q.degree_in(v) {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() {
            let r = p.prem(&q, v);
            p = q;
            q = if r.is_zero() { r } else { r.primitive_in(v) };
        }
        Poly::gcd(&ca, &cb).mul(&p).monic()
    }

    pub fn eval(&self, point: &[Base]) -> Base {
        let mut acc = self.base.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                if e > 0 {
                    t = t.mul(&x.pow(e as u64));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Roots in the ground field of a polynomial in variable `v` only.
    ///
    /// Over the rationals, candidates come from the rational root theorem.
    /// Over F_p the field is scanned, so this is refused for large p.
    pub fn univariate_roots(&self, v: usize) -> Option<Vec<Base>> {
        if !self.is_univariate_in(v) || self.is_zero() {
            return None;
        }
        let point = |x: &Base| {
            let mut pt = vec![self.base.zero(); self.nvars];
            pt[v] = x.clone();
            pt
        };
        match self.base {
            BaseField::Prime(p) => {
                if p > 1 << 20 {
                    return None;
                }
                Some(
                    (0..p as i64)
                        .map(|x| self.base.int(x))
                        .filter(|x| self.eval(&point(x)).is_zero())
                        .collect(),
                )
            }
            BaseField::Rationals => {
                // Integer coefficients, low degree first.
                let deg = self.degree_in(v) as usize;
                let mut coeffs = vec![BigRational::zero(); deg + 1];
                for (m, c) in &self.terms {
                    coeffs[m[v] as usize] = c.as_rational().expect("rational base").clone();
                }
                let lcm = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
                let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
                let low = ints.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
                let mut roots: Vec<BigRational> = Vec::new();
                if low > 0 {
                    roots.push(BigRational::zero());
                }
                let (c0, cn) = (ints[low].abs(), ints[deg].abs());
                if low < deg {
                    for num in divisors(&c0) {
                        for den in divisors(&cn) {
                            for s in [1, -1] {
                                let cand = BigRational::new(&num * BigInt::from(s), den.clone());
                                let val = Base::Q(cand.clone());
                                if self.eval(&point(&val)).is_zero() && !roots.contains(&cand) {
                                    roots.push(cand);
                                }
                            }
                        }
                    }
                }
                roots.sort();
                Some(roots.into_iter().map(Base::Q).collect())
            }
        }
    }

    pub(crate) fn fmt_with(&self, names: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Euclid's algorithm with monic remainders; both inputs use one variable only.
fn univariate_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut p = a.monic();
    let mut q = b.monic();
    while !q.is_zero() {
        let r = rem_univariate(&p, &q);
        p = q;
        q = r.monic();
    }
    p
}

fn rem_univariate(a: &Poly, b: &Poly) -> Poly {
    let (lm_b, lc_b) = b.leading().expect("nonzero divisor");
    let lm_b = lm_b.clone();
    let inv = lc_b.inv().expect("nonzero");
    let mut r = a.clone();
    loop {
        let Some((lm, lc)) = r.leading() else { break };
        if !mono_divides(&lm_b, lm) {
            break;
        }
        let m = mono_div(lm, &lm_b);
        let c = lc.mul(&inv);
        r.sub_scaled_shifted(b, &m, &c);
    }
    r
}
