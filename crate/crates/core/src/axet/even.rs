//! Label-level replay of the contradiction for skew axets `X'(q+2q)` with `q`
//! a power of two.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use super::{skew_canonical, AxetError};

/// A formal identity `sum c_j a_j = 0` over canonical labels of `X'(k+2k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelIdentity {
    k: usize,
    terms: BTreeMap<i64, i64>,
}

impl LabelIdentity {
    pub fn zero(k: usize) -> LabelIdentity {
        LabelIdentity { k, terms: BTreeMap::new() }
    }

    /// `sum a_lhs = sum a_rhs`.
    pub fn equation(k: usize, lhs: &[i64], rhs: &[i64]) -> LabelIdentity {
        let mut id = LabelIdentity::zero(k);
        for &j in lhs {
            id.add_term(j, 1);
        }
        for &j in rhs {
            id.add_term(j, -1);
        }
        id
    }

    fn add_term(&mut self, j: i64, c: i64) {
        let key = skew_canonical(j, self.k);
        let e = self.terms.entry(key).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, i64> {
        &self.terms
    }

    pub fn is_trivial(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, o: &LabelIdentity) -> LabelIdentity {
        let mut out = self.clone();
        for (&j, &c) in &o.terms {
            out.add_term(j, -c);
        }
        out
    }

    /// Image under `tau_i`, which sends `a_j` to `a_{2i-j}`.
    pub fn apply_tau(&self, i: i64) -> LabelIdentity {
        let mut out = LabelIdentity::zero(self.k);
        for (&j, &c) in &self.terms {
            out.add_term(2 * i - j, c);
        }
        out
    }

    /// Divides every coefficient by their common divisor, making the first positive.
    pub fn primitive(&self) -> (i64, LabelIdentity) {
        let g = self.terms.values().fold(0i64, |g, c| g.gcd(c));
        if g == 0 {
            return (1, self.clone());
        }
        let sign = if self.terms.values().next().copied().unwrap_or(1) < 0 { -1 } else { 1 };
        let d = g * sign;
        let terms = self.terms.iter().map(|(&j, &c)| (j, c / d)).collect();
        (d, LabelIdentity { k: self.k, terms })
    }
}

impl fmt::Display for LabelIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |positive: bool| {
            let parts: Vec<String> = self
                .terms
                .iter()
                .filter(|(_, &c)| (c > 0) == positive)
                .map(|(j, c)| {
                    let c = c.abs();
                    if c == 1 {
                        format!("a_{j}")
                    } else {
                        format!("{c}a_{j}")
                    }
                })
                .collect();
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(" + ")
            }
        };
        write!(f, "{} = {}", side(true), side(false))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub identity: LabelIdentity,
    pub justification: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenCaseTrace {
    pub q: u64,
    pub steps: Vec<TraceStep>,
    /// Canonical labels of `a_{-1}` and `a_{2q-1}`.
    pub labels: (i64, i64),
    pub contradiction: bool,
}

/// `a_t + a_{-t} = a_{2q-t} + a_{-(2q-t)}`, valid for odd `t` in an algebra with axet `X'(q+2q)`.
fn symmetric_sum_identity(q: i64, t: i64) -> LabelIdentity {
    LabelIdentity::equation(q as usize, &[t, -t], &[2 * q - t, -(2 * q - t)])
}

/// Replays the label manipulations that force `a_{-1} = a_{2q-1}` and checks
/// whether the two labels name distinct points of `X'(q+2q)`.
pub fn even_case_trace(q: u64) -> Result<EvenCaseTrace, AxetError> {
    if q < 2 || !q.is_power_of_two() {
        return Err(AxetError::InvalidParameter(format!("q = {q} must be a power of two, at least 2")));
    }
    let qi = q as i64;
    let mut steps = Vec::new();
    let first = symmetric_sum_identity(qi, qi - 1);
    steps.push(TraceStep {
        identity: first.clone(),
        justification: format!("symmetric-sum identity at t = q - 1 = {}", qi - 1),
    });
    let moved = first.apply_tau(qi / 2);
    steps.push(TraceStep {
        identity: moved.clone(),
        justification: format!("apply tau_{} (a_j -> a_{{{q}-j}})", qi / 2),
    });
    let second = symmetric_sum_identity(qi, 1);
    steps.push(TraceStep { identity: second.clone(), justification: "symmetric-sum identity at t = 1".into() });
    let diff = moved.sub(&second);
    steps.push(TraceStep { identity: diff.clone(), justification: "difference of the two previous identities".into() });
    let (factor, reduced) = diff.primitive();
    steps.push(TraceStep {
        identity: reduced.clone(),
        justification: format!("divide by {factor}, invertible as the characteristic is not 2"),
    });

    let labels = (skew_canonical(-1, q as usize), skew_canonical(2 * qi - 1, q as usize));
    let expected = LabelIdentity::equation(q as usize, &[-1], &[2 * qi - 1]);
    let matches = reduced == expected || reduced == LabelIdentity::zero(q as usize).sub(&expected);
    let contradiction = matches && labels.0 != labels.1 && labels.0.is_odd() && labels.1.is_odd();
    Ok(EvenCaseTrace { q, steps, labels, contradiction })
}
