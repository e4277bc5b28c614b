//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Runs without the libtest harness so the verdict lines always reach the
//! console.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use axial_core::algebra::{axis_reports, decompose};
use axial_core::axet::{congruence_witness, even_case_trace, AxetKind, C2Axet};
use axial_core::catalog::{self, b6, build_6a, build_6a_generic};
use axial_core::io::{parse_algebra, parse_scalar, serialize_algebra, AlgebraDocument, IoError};
use axial_core::linalg::{Matrix, Vector};
use axial_core::replicate;
use axial_core::{char_constraints, Field, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn q() -> Field {
    Field::rationals()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!("{what} took {t:.2?}, over {limit:?}"));
    }
    Ok(())
}

fn c1_six_a_axiality() -> Outcome {
    let start = Instant::now();
    let entry = build_6a_generic(&q()).map_err(|e| e.to_string())?;
    let reports = axis_reports(&entry.algebra, &entry.axis_vectors(), &entry.law).map_err(|e| e.to_string())?;
    ensure!(reports.len() == 6, "expected six axes");
    for (i, r) in reports.iter().enumerate() {
        ensure!(r.is_pass(), "axis {} fails: {:?}", entry.algebra.names()[entry.axes[i]], r.verdicts());
        ensure!(r.violations.is_empty(), "axis {i} has fusion violations");
    }
    let fam = entry.family().map_err(|e| e.to_string())?;
    ensure!(fam.axet().kind() == AxetKind::Regular(6), "induced axet is {}", fam.axet().kind());
    ensure!(fam.axet().check_axioms().is_empty(), "induced axet breaks the axioms");
    let rho = fam.rho_order();
    let group = fam.group_order();
    // rho = tau_1 tau_0 shifts a_i to a_(i+2), so it has order 3 on six axes;
    // order 6 belongs to the dihedral group <tau_0, tau_1>.
    ensure!(rho == 3 && group == 6, "rho order {rho}, group order {group}");
    within(start, Duration::from_secs(60), "criterion 1")?;
    Ok("6 axes pass A1-A4 with 0 violations; X(6); |rho| = 3, |<tau_0, tau_1>| = 6 (criterion text says rho has order 6)".into())
}

fn c2_residual_anchors() -> Outcome {
    let report = replicate::lemma_6a(None).map_err(|e| e.to_string())?;
    ensure!(report.passed(), "{}", report.render_text(false));
    let f = Field::function(&q(), &["alpha"]).map_err(|e| e.to_string())?;
    let a = f.var("alpha").unwrap();
    let value = |check: &str, label: &str| -> Result<String, String> {
        report
            .check(check)
            .and_then(|c| c.witnesses.iter().find(|w| w.label == label))
            .map(|w| w.value.clone())
            .ok_or_else(|| format!("missing {check}/{label}"))
    };
    let coeff = parse_scalar(&value("b_2-coefficient of R equals +-(beta - alpha/4)", "coefficient")?, &f)
        .map_err(|e| e.to_string())?;
    // oracle: beta - alpha/4 = -alpha(3 alpha - 1)/(4(2 alpha - 1)), up to sign
    let two_a_minus_1 = &(&f.int(2) * &a) - &f.one();
    let oracle = -(&a * &(&(&f.int(3) * &a) - &f.one())).try_div(&(&f.int(4) * &two_a_minus_1)).unwrap();
    ensure!(coeff == oracle || coeff == -oracle.clone(), "b_2 coefficient {coeff} differs from {oracle}");
    let (num, _) = coeff.numerator_denominator().unwrap();
    let eval = |x: Scalar| num.specialize(&BTreeMap::from([("alpha".to_string(), x)])).unwrap();
    ensure!(eval(q().zero()).is_zero() && eval(q().rational(1, 3).unwrap()).is_zero(), "0 or 1/3 is not a root");
    ensure!(!eval(q().one()).is_zero() && !eval(q().int(-1)).is_zero(), "numerator vanishes too often");
    let at_third = value("at alpha = 1/3 the b_-2-coefficient of R has magnitude 1/18", "value at 1/3")?;
    let x = parse_scalar(&at_third, &q()).map_err(|e| e.to_string())?;
    ensure!(x.to_rational().map(|r| r.abs()) == Some(BigRational::new(1.into(), 18.into())), "magnitude {x}");
    // independent form: alpha^2/2 - 2(3 alpha - 1) gamma at alpha = 1/3
    let t = q().rational(1, 3).unwrap();
    let gamma = t.try_div(&(&q().int(8) * &(&(&q().int(2) * &t) - &q().one()))).unwrap();
    let cross = &(&(&t * &t) * &q().rational(1, 2).unwrap()) - &(&(&q().int(2) * &(&(&q().int(3) * &t) - &q().one())) * &gamma);
    ensure!(cross == q().rational(1, 18).unwrap(), "cross-check gives {cross}");
    Ok(format!("b_2 coefficient {coeff}, roots {{0, 1/3}}; |b_-2 coefficient at 1/3| = 1/18"))
}

fn trial_division(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn c3_quotient_anchors() -> Outcome {
    let report = replicate::lemma_6a_quot().map_err(|e| e.to_string())?;
    ensure!(report.passed(), "{}", report.render_text(false));
    let norm = 131u64 * 131 - 13 * 13 * 97;
    ensure!(norm == 768 && trial_division(norm) == vec![(2, 8), (3, 1)], "norm {norm}");
    let f = Field::quadratic(&q(), &q().int(97)).unwrap();
    let alpha = parse_scalar("(1+sqrt(97))/24", &f).unwrap();
    let beta = catalog::beta_6a(&alpha).unwrap();
    let cc = char_constraints(&(&(&alpha + &beta) - &f.one())).unwrap();
    ensure!(cc.evidence == BigInt::from(768), "evidence {}", cc.evidence);
    let two_thirds = q().rational(2, 3).unwrap();
    let c1 = char_constraints(&(&(&two_thirds + &catalog::beta_6a(&two_thirds).unwrap()) - &q().one())).unwrap();
    ensure!(c1.primes() == vec![BigInt::from(2)], "case 1 primes {:?}", c1.primes());
    let case3 = (2i64 - 4 - 1).rem_euclid(11);
    ensure!(case3 == 8, "case 3 residue {case3}");
    let f11 = Field::prime(11).unwrap();
    let v = &(&f11.int(2) + &catalog::beta_6a(&f11.int(2)).unwrap()) - &f11.one();
    ensure!(v.to_residue() == Some(8), "case 3 in F_11 is {v}");
    Ok("768 = 2^8 * 3; case 1 forces {2}; case 3 is 8 != 0 in F_11".into())
}

fn c4_census() -> Outcome {
    let start = Instant::now();
    for k in 1..=64usize {
        let x = C2Axet::skew(k).map_err(|e| e.to_string())?;
        ensure!(x.size() == 3 * k, "k = {k}: size {}", x.size());
        let labels = x.labels().ok_or("skew axets carry labels")?;
        let even = labels.iter().filter(|l| l.rem_euclid(2) == 0).count();
        ensure!(even == k && labels.len() - even == 2 * k, "k = {k}: {even} even labels");
        let all = x.closure(&[x.point_of_label(0).unwrap(), x.point_of_label(1).unwrap()]).unwrap();
        ensure!(all.points.len() == x.size(), "k = {k}: a_0, a_1 generate {} points", all.points.len());
    }
    within(start, Duration::from_secs(5), "criterion 4")?;
    Ok(format!("k = 1..64 in {:.2?}", start.elapsed()))
}

fn c5_even_reduction() -> Outcome {
    let mut count = 0;
    for k in 1..=64usize {
        for n in 0..=6 {
            let q = 1usize << n;
            if k % q != 0 || (k / q) % 2 == 0 {
                continue;
            }
            let m = (k / q) as i64;
            let x = C2Axet::skew(k).unwrap();
            let sub = x.closure(&[x.point_of_label(0).unwrap(), x.point_of_label(m).unwrap()]).unwrap();
            ensure!(sub.points.len() == 3 * q, "k = {k}, m = {m}: {} points", sub.points.len());
            let kind = sub.axet.classify_2gen().map_err(|e| e.to_string())?;
            ensure!(kind == AxetKind::Skew(q), "k = {k}, m = {m}: {kind}");
            count += 1;
        }
    }
    Ok(format!("{count} decompositions k = m q checked"))
}

/// Closure by label arithmetic: tau_i(a_j) = a_(2i - j), evens mod 2k, odds mod 4k.
fn label_closure(k: i64, start: &[i64]) -> BTreeSet<i64> {
    let canon = |j: i64| if j.rem_euclid(2) == 0 { j.rem_euclid(2 * k) } else { j.rem_euclid(4 * k) };
    let mut set: BTreeSet<i64> = start.iter().map(|&j| canon(j)).collect();
    loop {
        let next: BTreeSet<i64> =
            set.iter().flat_map(|&i| set.iter().map(move |&j| canon(2 * i - j))).chain(set.iter().copied()).collect();
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

fn c6_odd_k() -> Outcome {
    let mut count = 0;
    for k in (1..=31i64).step_by(2) {
        let x = C2Axet::skew(k as usize).unwrap();
        let pt = |j: i64| x.point_of_label(j).unwrap();
        for m in (1..4 * k).step_by(2) {
            let sub = x.closure(&[pt(m), pt(m + k)]).unwrap();
            ensure!(sub.points.len() == 3, "k = {k}, m = {m}: {} points", sub.points.len());
            let oracle = label_closure(k, &[m, m + k]);
            let got: BTreeSet<i64> = sub.points.iter().map(|&p| x.label(p).unwrap()).collect();
            ensure!(got == oracle, "k = {k}, m = {m}: {got:?} vs {oracle:?}");
            ensure!(sub.axet.classify_2gen() == Ok(AxetKind::Skew(1)), "k = {k}, m = {m}: not X'(1+2)");
            let c = pt(m + k);
            ensure!(
                x.tau_apply(pt(m), c).unwrap() == c && x.tau_apply(pt(m + 2 * k), c).unwrap() == c,
                "k = {k}, m = {m}: a_(m+k) moved"
            );
            count += 1;
        }
    }
    Ok(format!("{count} pairs (k, m) checked"))
}

fn c7_witnesses() -> Outcome {
    let start = Instant::now();
    let mut count = 0u64;
    for n in 0..=10 {
        let q = 1u64 << n;
        let m = 4 * q;
        for t in (1..m).step_by(2) {
            let l = congruence_witness(q, t).map_err(|e| format!("q = {q}, t = {t}: {e}"))?;
            ensure!(l < m && (l * t) % m == (2 * q + m - t) % m, "q = {q}, t = {t}: l = {l}");
            count += 1;
        }
    }
    within(start, Duration::from_secs(5), "criterion 7")?;
    Ok(format!("{count} witnesses verified in {:.2?}", start.elapsed()))
}

fn c8_power_of_two() -> Outcome {
    for q in [2u64, 4, 8, 16] {
        let t = even_case_trace(q).map_err(|e| e.to_string())?;
        let m = 4 * q as i64;
        let (x, y) = t.labels;
        ensure!(t.contradiction, "q = {q}: no contradiction");
        ensure!(x % 2 != 0 && y % 2 != 0 && x.rem_euclid(m) != y.rem_euclid(m), "q = {q}: labels {x}, {y}");
        ensure!((x, y) == (m - 1, 2 * q as i64 - 1), "q = {q}: labels {x}, {y}");
    }
    Ok("q = 2, 4, 8, 16 reach a_-1 = a_(2q-1)".into())
}

fn c9_family_lemmas() -> Outcome {
    let report = replicate::family_lemmas().map_err(|e| e.to_string())?;
    ensure!(report.passed(), "{}", report.render_text(false));
    let entry = build_6a_generic(&q()).unwrap();
    let fam = entry.family().map_err(|e| e.to_string())?;
    let alg = fam.algebra();
    let f = alg.field();
    let alpha = fam.law().alpha().clone();
    let beta = fam.law().beta().unwrap().clone();
    let a0 = fam.axis(0).clone();
    let ad = alg.adjoint(&a0).unwrap();
    let s = |i: i64, r: i64| {
        let (x, y) = (fam.axis(i), fam.axis(i + r));
        alg.multiply(x, y).unwrap().sub(&x.add(y).scale(&beta))
    };
    // projection onto the 1-eigenspace as a polynomial in ad
    let proj = |v: &Vector| {
        let mut w = v.clone();
        for mu in [f.zero(), alpha.clone(), beta.clone()] {
            let num = ad.mul_vec(&w).unwrap().sub(&w.scale(&mu));
            w = num.scale(&(&f.one() - &mu).inv().unwrap());
        }
        w
    };
    let lambda_of = |v: &Vector| -> Scalar {
        let w = proj(v);
        let k = (0..w.len()).find(|&k| !a0[k].is_zero()).unwrap();
        w[k].try_div(&a0[k]).unwrap()
    };
    for r in 1..=3i64 {
        for i in 0..6i64 {
            let v = s(i, r);
            ensure!(fam.tau(i).mul_vec(&v).unwrap() == v, "tau_{i} moves s_({i},{r})");
            ensure!(fam.tau(i + r).mul_vec(&v).unwrap() == v, "tau_{} moves s_({i},{r})", i + r);
            ensure!(s(i + r, r) == v, "s_({i},{r}) != s_({},{r})", i + r);
        }
        let lr = lambda_of(fam.axis(r));
        let rhs = &(&(&f.one() - &beta) * &lr) - &beta;
        ensure!(lambda_of(&s(0, r)) == rhs, "projection identity fails at r = {r}");
    }
    for i in 1..=3i64 {
        let d = fam.eigenvector_check(i).map_err(|e| e.to_string())?;
        ensure!(ad.mul_vec(&d.u).unwrap().is_zero(), "u_{i} not in the 0-space");
        ensure!(ad.mul_vec(&d.v).unwrap() == d.v.scale(&alpha), "v_{i} not in the alpha-space");
        ensure!(ad.mul_vec(&d.w).unwrap() == d.w.scale(&beta), "w_{i} not in the beta-space");
        ensure!(a0.scale(&d.lambda).add(&d.u).add(&d.v).add(&d.w) == *fam.axis(i), "a_{i} not rebuilt");
        ensure!(d.lambda == lambda_of(fam.axis(i)), "lambda_{i} disagrees with the oracle");
    }
    Ok("s-invariance, s-periodicity, eigenvector formulas and projection identity for r, i in {1,2,3}".into())
}

/// Dense polynomial over Q, lowest degree first.
#[derive(Clone, Debug, PartialEq)]
struct QPoly(Vec<BigRational>);

impl QPoly {
    fn trim(mut self) -> QPoly {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }
    fn add(&self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        QPoly((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect()).trim()
    }
    fn mul(&self, o: &QPoly) -> QPoly {
        if self.0.is_empty() || o.0.is_empty() {
            return QPoly(vec![]);
        }
        let mut out = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly(out).trim()
    }
    fn neg(&self) -> QPoly {
        QPoly(self.0.iter().map(|x| -x).collect())
    }
    fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }
    /// Exact division by (x - r), assuming r is a root.
    fn deflate(&self, r: &BigRational) -> QPoly {
        let n = self.0.len();
        let mut q = vec![BigRational::zero(); n - 1];
        q[n - 2] = self.0[n - 1].clone();
        for i in (0..n - 2).rev() {
            q[i] = &self.0[i + 1] + &q[i + 1] * r;
        }
        QPoly(q).trim()
    }
    fn multiplicity(&self, r: &BigRational) -> usize {
        let mut p = self.clone();
        let mut m = 0;
        while !p.0.is_empty() && p.eval(r).is_zero() {
            p = p.deflate(r);
            m += 1;
        }
        m
    }
}

/// det(x I - A) by cofactor expansion along the first row.
fn char_poly(a: &[Vec<BigRational>]) -> QPoly {
    let n = a.len();
    let entry = |r: usize, c: usize| {
        let mut p = vec![-a[r][c].clone()];
        if r == c {
            p.push(BigRational::one());
        }
        QPoly(p).trim()
    };
    fn det(rows: &[usize], cols: &[usize], entry: &dyn Fn(usize, usize) -> QPoly) -> QPoly {
        if rows.is_empty() {
            return QPoly(vec![BigRational::one()]);
        }
        let mut acc = QPoly(vec![]);
        for (k, &c) in cols.iter().enumerate() {
            let e = entry(rows[0], c);
            if e.0.is_empty() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = e.mul(&det(&rows[1..], &rest, entry));
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.add(&term.neg()) };
        }
        acc
    }
    let idx: Vec<usize> = (0..n).collect();
    det(&idx, &idx, &entry)
}

fn rational_matrix(m: &Matrix) -> Vec<Vec<BigRational>> {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.get(r, c).to_rational().unwrap()).collect()).collect()
}

fn c10_oracle() -> Outcome {
    let generic = build_6a_generic(&q()).unwrap();
    let gen_reports = axis_reports(&generic.algebra, &generic.axis_vectors(), &generic.law).unwrap();
    let gen_dims = decompose(&generic.algebra, &generic.algebra.basis(b6(0)), &generic.law).unwrap().dims();
    let excluded = [(0, 1), (1, 1), (1, 2), (4, 9)];
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a);
    let mut done = Vec::new();
    while done.len() < 10 {
        let (n, d) = (rng.gen_range(-40i64..=40), rng.gen_range(1i64..=40));
        let r = BigRational::new(n.into(), d.into());
        if excluded.iter().any(|&(a, b)| r == BigRational::new(a.into(), b.into())) || done.contains(&r) {
            continue;
        }
        let alpha = q().from_rational(&r).unwrap();
        let Ok(entry) = build_6a(&alpha) else { continue };
        let law = &entry.law;
        let b0 = entry.algebra.basis(b6(0));
        let dec = decompose(&entry.algebra, &b0, law).map_err(|e| format!("alpha = {r}: {e}"))?;
        let cp = char_poly(&rational_matrix(&entry.algebra.adjoint(&b0).unwrap()));
        let mut total = 0;
        for (e, dim) in dec.dims() {
            let mu = law.value(e).to_rational().unwrap();
            let m = cp.multiplicity(&mu);
            ensure!(m == dim, "alpha = {r}: eigenvalue {e} has multiplicity {m}, eigenspace dimension {dim}");
            total += m;
        }
        ensure!(total == 8, "alpha = {r}: spectrum leaves the fusion set");
        ensure!(dec.dims() == gen_dims, "alpha = {r}: dimensions {:?} differ from generic", dec.dims());
        let reports = axis_reports(&entry.algebra, &entry.axis_vectors(), law).unwrap();
        for (a, b) in reports.iter().zip(&gen_reports) {
            ensure!(a.is_pass() == b.is_pass() && a.violations.len() == b.violations.len(), "alpha = {r}: verdicts differ");
        }
        done.push(r);
    }
    let list: Vec<String> = done.iter().map(|r| r.to_string()).collect();
    Ok(format!("alpha in {{{}}}", list.join(", ")))
}

fn mutate(doc: &Value, kind: usize, rng: &mut ChaCha8Rng) -> (String, &'static str) {
    let mut v = doc.clone();
    let dim = v["dim"].as_u64().unwrap() as usize;
    let (i, j) = {
        let i = rng.gen_range(0..dim - 1);
        (i, rng.gen_range(i + 1..dim))
    };
    let key = format!("{i},{j}");
    let products = v["products"].as_object_mut().unwrap();
    let expect = match kind {
        0 => {
            products.remove(&key);
            "$.products"
        }
        1 => {
            products[&key].as_array_mut().unwrap().pop();
            "$.products"
        }
        2 => {
            products[&key].as_array_mut().unwrap().push(json!("0"));
            "$.products"
        }
        3 => {
            let x = products.remove(&key).unwrap();
            products.insert(format!("{j},{i}"), x);
            "$.products"
        }
        4 => {
            products[&key][rng.gen_range(0..dim)] = json!("1/+");
            "$.products"
        }
        5 => {
            products[&key][rng.gen_range(0..dim)] = json!("gamma");
            "$.products"
        }
        6 => {
            v["dim"] = json!(dim + 1);
            "$"
        }
        7 => {
            v["axes"].as_array_mut().unwrap().push(json!(dim + rng.gen_range(0..5)));
            "$.axes"
        }
        8 => {
            v.as_object_mut().unwrap().remove("fusion");
            "$.fusion"
        }
        _ => {
            let text = serde_json::to_string_pretty(&v).unwrap();
            let dup = text.replacen("\"dim\":", "\"dim\": 1,\n  \"dim\":", 1);
            return (dup, "line");
        }
    };
    (serde_json::to_string_pretty(&v).unwrap(), expect)
}

fn c11_io() -> Outcome {
    let f7 = Field::prime(7).unwrap();
    let entries = vec![
        catalog::build_2b_generic(&q()),
        catalog::build_3c_generic(&q()),
        build_6a_generic(&q()),
        build_6a_generic(&f7),
        build_6a(&q().rational(1, 4).unwrap()),
        catalog::build_3c(&q().rational(1, 3).unwrap()),
    ];
    let mut docs = Vec::new();
    for e in entries {
        let e = e.map_err(|e| e.to_string())?;
        let doc = AlgebraDocument::from(&e);
        let text = serialize_algebra(&doc);
        let back = parse_algebra(&text).map_err(|err| format!("{}: {err}", e.name))?;
        ensure!(back == doc, "{} does not round-trip", e.name);
        docs.push(serde_json::from_str::<Value>(&text).unwrap());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut rejected = 0;
    for n in 0..50 {
        let doc = &docs[n % docs.len()];
        let (text, expect) = mutate(doc, n % 10, &mut rng);
        match parse_algebra(&text) {
            Ok(_) => return Err(format!("mutation {n} (kind {}) was accepted", n % 10)),
            Err(e) => {
                let loc = e.location();
                let located = match &e {
                    IoError::Schema { path, .. } => path.starts_with(expect),
                    IoError::Json { line, .. } => *line > 0 && expect == "line",
                    _ => false,
                };
                ensure!(located, "mutation {n}: error {e} located at {loc:?}, expected {expect}");
                rejected += 1;
            }
        }
    }
    Ok(format!("6 exports round-trip; {rejected}/50 mutations rejected with locations"))
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("6A axiality over Q(alpha)", c1_six_a_axiality),
        ("6A residual anchors", c2_residual_anchors),
        ("6A quotient arithmetic", c3_quotient_anchors),
        ("skew axet census", c4_census),
        ("even reduction subaxets", c5_even_reduction),
        ("odd k subaxets", c6_odd_k),
        ("congruence witnesses", c7_witnesses),
        ("power-of-2 label contradiction", c8_power_of_two),
        ("6A family identities", c9_family_lemmas),
        ("oracle equivalence at random alpha", c10_oracle),
        ("io round-trip and mutation corpus", c11_io),
    ];
    let mut failed = 0;
    for (n, (title, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {title} ({secs:.1}s): {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {title} ({secs:.1}s): {why}", n + 1);
            }
        }
    }
    println!("acceptance: {} of 11 criteria pass", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
