//! Trial-division factorization of the small integers that show up as evidence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Prime factorization of `|n|` as `(prime, exponent)` pairs in increasing order.
/// `n` must be nonzero.
pub fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    out
}

/// Positive divisors of `|n|`, increasing; `divisors(0)` is empty.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return Vec::new();
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factor(n) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup_by(|a, b| a == b);
    debug_assert!(divs.iter().all(|d| n.is_multiple_of(d)));
    divs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_768() {
        let f = factor(&BigInt::from(768));
        assert_eq!(f, vec![(BigInt::from(2), 8), (BigInt::from(3), 1)]);
    }

    #[test]
    fn divisors_of_12() {
        let d: Vec<i64> = divisors(&BigInt::from(-12)).iter().map(|d| d.try_into().unwrap()).collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
    }
}
