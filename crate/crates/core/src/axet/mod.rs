//! Finite C2-axets: point sets with one involution per point.
//!
//! Points are indices `0..size`. For the regular axet `X(n)` point `j` carries
//! label `j`; for the skew axet `X'(k+2k)` points carry their canonical labels
//! (even labels mod `2k`, odd labels mod `4k`) in increasing order.

mod even;

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

pub use even::{even_case_trace, EvenCaseTrace, LabelIdentity, TraceStep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxetError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid tau table: {0}")]
    InvalidTable(String),
    #[error("point {0} out of range")]
    InvalidPoint(usize),
    #[error("axet is not generated by any pair of points")]
    NotTwoGenerated,
    #[error("no witness l with l*{t} = {target} mod {modulus}")]
    NoWitness { t: u64, target: u64, modulus: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxetKind {
    Regular(usize),
    Skew(usize),
    Abstract,
}

impl fmt::Display for AxetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxetKind::Regular(n) => write!(f, "X({n})"),
            AxetKind::Skew(k) => write!(f, "X'({k}+{})", 2 * k),
            AxetKind::Abstract => f.write_str("abstract"),
        }
    }
}

/// Canonical label of `a_j` in `X'(k+2k)`.
pub fn skew_canonical(j: i64, k: usize) -> i64 {
    let k = k as i64;
    if j.is_even() {
        j.rem_euclid(2 * k)
    } else {
        j.rem_euclid(4 * k)
    }
}

/// A label of the skew axet `X'(k+2k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SkewLabel {
    pub j: i64,
    pub k: usize,
}

impl SkewLabel {
    pub fn canonical(&self) -> i64 {
        skew_canonical(self.j, self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C2Axet {
    kind: AxetKind,
    // tau[x][y] = image of y under tau_x
    tau: Vec<Vec<usize>>,
    labels: Option<Vec<i64>>,
}

impl C2Axet {
    pub fn regular(n: usize) -> Result<C2Axet, AxetError> {
        if n < 2 {
            return Err(AxetError::InvalidParameter(format!("X(n) needs n >= 2, got {n}")));
        }
        let tau = (0..n).map(|i| (0..n).map(|j| (2 * i + 2 * n - j) % n).collect()).collect();
        Ok(C2Axet { kind: AxetKind::Regular(n), tau, labels: Some((0..n as i64).collect()) })
    }

    pub fn skew(k: usize) -> Result<C2Axet, AxetError> {
        if k < 1 {
            return Err(AxetError::InvalidParameter("X'(k+2k) needs k >= 1".into()));
        }
        let mut labels: Vec<i64> = (0..2 * k as i64).step_by(2).chain((1..4 * k as i64).step_by(2)).collect();
        labels.sort_unstable();
        let index = |l: i64| labels.binary_search(&skew_canonical(l, k)).expect("canonical label");
        let tau = labels
            .iter()
            .map(|&i| labels.iter().map(|&j| index(2 * i - j)).collect())
            .collect();
        Ok(C2Axet { kind: AxetKind::Skew(k), tau, labels: Some(labels) })
    }

    /// An axet from an explicit table; `tau[x][y]` is the image of `y` under `tau_x`.
    pub fn from_table(tau: Vec<Vec<usize>>, labels: Option<Vec<i64>>, kind: AxetKind) -> Result<C2Axet, AxetError> {
        let n = tau.len();
        if n == 0 {
            return Err(AxetError::InvalidTable("no points".into()));
        }
        for (x, row) in tau.iter().enumerate() {
            if row.len() != n {
                return Err(AxetError::InvalidTable(format!("row {x} has length {}, expected {n}", row.len())));
            }
            let image: BTreeSet<usize> = row.iter().copied().collect();
            if image.len() != n || row.iter().any(|&y| y >= n) {
                return Err(AxetError::InvalidTable(format!("row {x} is not a permutation")));
            }
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(AxetError::InvalidTable(format!("{} labels for {n} points", l.len())));
            }
        }
        Ok(C2Axet { kind, tau, labels })
    }

    pub fn size(&self) -> usize {
        self.tau.len()
    }

    pub fn kind(&self) -> AxetKind {
        self.kind
    }

    pub fn labels(&self) -> Option<&[i64]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> Option<i64> {
        self.labels.as_ref().map(|l| l[x])
    }

    pub fn tau_table(&self) -> &[Vec<usize>] {
        &self.tau
    }

    /// Image of `y` under `tau_x`.
    pub fn tau_apply(&self, x: usize, y: usize) -> Result<usize, AxetError> {
        let n = self.size();
        if x >= n {
            return Err(AxetError::InvalidPoint(x));
        }
        if y >= n {
            return Err(AxetError::InvalidPoint(y));
        }
        Ok(self.tau[x][y])
    }

    /// The point carrying `a_j`, reducing `j` by the axet's label arithmetic.
    pub fn point_of_label(&self, j: i64) -> Option<usize> {
        let canon = match self.kind {
            AxetKind::Regular(n) => j.rem_euclid(n as i64),
            AxetKind::Skew(k) => skew_canonical(j, k),
            AxetKind::Abstract => j,
        };
        self.labels.as_ref()?.iter().position(|&l| l == canon)
    }

    /// Violations of the axet axioms, empty when all hold.
    pub fn check_axioms(&self) -> Vec<String> {
        let n = self.size();
        let mut out = Vec::new();
        for x in 0..n {
            if self.tau[x][x] != x {
                out.push(format!("tau_{x} moves {x}"));
            }
            for y in 0..n {
                if self.tau[x][self.tau[x][y]] != y {
                    out.push(format!("tau_{x} squared moves {y}"));
                }
                let z = self.tau[x][y];
                // tau_{tau_x(y)} = tau_x tau_y tau_x
                for w in 0..n {
                    if self.tau[z][w] != self.tau[x][self.tau[y][self.tau[x][w]]] {
                        out.push(format!("tau_{z} is not the conjugate of tau_{y} by tau_{x}"));
                        break;
                    }
                }
            }
        }
        out
    }

    /// The smallest subset containing `z` and closed under `tau_y` for its members.
    pub fn closure(&self, z: &[usize]) -> Result<SubAxet, AxetError> {
        if z.is_empty() {
            return Err(AxetError::InvalidParameter("closure of an empty set".into()));
        }
        let n = self.size();
        if let Some(&bad) = z.iter().find(|&&x| x >= n) {
            return Err(AxetError::InvalidPoint(bad));
        }
        let mut set: BTreeSet<usize> = z.iter().copied().collect();
        let mut frontier: Vec<usize> = set.iter().copied().collect();
        while !frontier.is_empty() {
            let current: Vec<usize> = set.iter().copied().collect();
            let mut added = Vec::new();
            for &y in &current {
                for &x in &current {
                    // only pairs touching the frontier can produce new points
                    if !frontier.contains(&x) && !frontier.contains(&y) {
                        continue;
                    }
                    for p in [self.tau[y][x], self.tau[x][y]] {
                        if set.insert(p) {
                            added.push(p);
                        }
                    }
                }
            }
            frontier = added;
        }
        let points: Vec<usize> = set.into_iter().collect();
        let pos = |p: usize| points.binary_search(&p).expect("closed set");
        let tau = points
            .iter()
            .map(|&x| points.iter().map(|&y| pos(self.tau[x][y])).collect())
            .collect();
        let labels = self.labels.as_ref().map(|l| points.iter().map(|&p| l[p]).collect());
        let axet = C2Axet { kind: AxetKind::Abstract, tau, labels };
        Ok(SubAxet { points, axet })
    }

    /// The first pair, in index order, that generates the whole axet.
    pub fn generating_pair(&self) -> Option<(usize, usize)> {
        let n = self.size();
        if n == 1 {
            return Some((0, 0));
        }
        (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.closure(&[x, y]).map(|c| c.points.len() == n).unwrap_or(false))
    }

    /// Decides regular versus skew by walking the dihedral sequence of a generating pair.
    pub fn classify_2gen(&self) -> Result<AxetKind, AxetError> {
        let (x, y) = self.generating_pair().ok_or(AxetError::NotTwoGenerated)?;
        Ok(self.classify_from(x, y))
    }

    /// Classification using `(x, y)` as `(a_0, a_1)`; the pair must generate the axet.
    pub fn classify_from(&self, x: usize, y: usize) -> AxetKind {
        let n = self.size();
        let seq = self.dihedral_sequence(x, y);
        let period = seq.len();
        let evens: BTreeSet<usize> = seq.iter().step_by(2).copied().collect();
        let odds: BTreeSet<usize> = seq.iter().skip(1).step_by(2).copied().collect();
        let distinct = evens.union(&odds).count();
        if distinct != n {
            return AxetKind::Abstract;
        }
        if distinct == period {
            return AxetKind::Regular(period);
        }
        if period % 4 == 0 && evens.is_disjoint(&odds) {
            let k = period / 4;
            let (e, o) = (evens.len(), odds.len());
            if (e == k && o == 2 * k) || (e == 2 * k && o == k) {
                return AxetKind::Skew(k);
            }
        }
        AxetKind::Abstract
    }

    /// `s_0 = x, s_1 = y, s_{j+1} = tau_{s_j}(s_{j-1})`, truncated to one period.
    pub fn dihedral_sequence(&self, x: usize, y: usize) -> Vec<usize> {
        let mut seq = vec![x, y];
        loop {
            let m = seq.len();
            let next = self.tau[seq[m - 1]][seq[m - 2]];
            if seq[m - 1] == x && next == y {
                seq.pop();
                return seq;
            }
            seq.push(next);
        }
    }
}

/// A closed subset together with its induced axet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubAxet {
    /// Indices of the points in the parent axet, increasing.
    pub points: Vec<usize>,
    pub axet: C2Axet,
}

/// Point counts of `X'(k+2k)`: total, even-labelled, odd-labelled.
pub fn skew_census(k: usize) -> Result<(usize, usize, usize), AxetError> {
    let x = C2Axet::skew(k)?;
    let labels = x.labels().expect("skew axets carry labels");
    let even = labels.iter().filter(|l| l.is_even()).count();
    Ok((x.size(), even, x.size() - even))
}

/// `l` in `[0, 4q)` with `l*t = 2q - t (mod 4q)`, for `q` a power of two and `t` odd.
pub fn congruence_witness(q: u64, t: u64) -> Result<u64, AxetError> {
    if q == 0 || !q.is_power_of_two() {
        return Err(AxetError::InvalidParameter(format!("q = {q} is not a power of two")));
    }
    if t.is_even() {
        return Err(AxetError::InvalidParameter(format!("t = {t} is not odd")));
    }
    let m = 4 * q as i128;
    let target = (2 * q as i128 - t as i128).rem_euclid(m);
    let e = (t as i128).extended_gcd(&m);
    let no_witness = AxetError::NoWitness { t, target: target as u64, modulus: m as u64 };
    if e.gcd != 1 {
        return Err(no_witness);
    }
    let l = (target * e.x).rem_euclid(m);
    if (l * t as i128).rem_euclid(m) != target {
        return Err(no_witness);
    }
    Ok(l as u64)
}
