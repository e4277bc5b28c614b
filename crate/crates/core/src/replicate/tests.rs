use super::*;

use crate::io::parse_scalar;

fn witness<'a>(r: &'a Report, check: &str, label: &str) -> &'a str {
    let c = r.check(check).unwrap_or_else(|| panic!("no check {check:?}"));
    &c.witnesses.iter().find(|w| w.label == label).unwrap_or_else(|| panic!("no witness {label:?}")).value
}

#[test]
fn quotient_cases() {
    let r = lemma_6a_quot().unwrap();
    assert!(r.passed(), "{}", r.render_text(false));
    assert_eq!(r.checks.len(), 4);
    let case2 = "case 2a: alpha = (1 + sqrt(97))/24 forces characteristic 2 or 3";
    assert_eq!(witness(&r, case2, "factorization"), "2^8 * 3");
    assert_eq!(witness(&r, case2, "norm"), "17161 - 16393 = 768");
    let case3 = "case 3: alpha = 2 in F_11 gives alpha + beta - 1 != 0";
    assert_eq!(witness(&r, case3, "alpha + beta - 1 in F_11"), "8");
    assert_eq!(witness(&r, "case 1: alpha = 2/3 forces characteristic 2", "primes"), "2");
}

#[test]
fn residual_anchors() {
    let r = lemma_6a(None).unwrap();
    assert!(r.passed(), "{}", r.render_text(false));
    let f = Field::function(&Field::rationals(), &["alpha"]).unwrap();
    // beta - alpha/4 reduced by hand
    let oracle = parse_scalar("-alpha*(3*alpha-1)/(4*(2*alpha-1))", &f).unwrap();
    let coeff = witness(&r, "b_2-coefficient of R equals +-(beta - alpha/4)", "coefficient");
    assert_eq!(parse_scalar(coeff, &f).unwrap(), oracle);
    assert_eq!(witness(&r, "numerator roots of the b_2-coefficient are exactly {0, 1/3}", "roots"), "0, 1/3");
    assert_eq!(witness(&r, "at alpha = 1/3 the b_-2-coefficient of R has magnitude 1/18", "value at 1/3"), "1/18");
}

#[test]
fn residual_in_odd_characteristic() {
    let r = lemma_6a(Some(7)).unwrap();
    assert!(r.passed(), "{}", r.render_text(false));
    // beta(1/3) = 1/12 = 1 in F_11, so 6A(1/3) is excluded there
    assert!(lemma_6a(Some(11)).is_err());
    assert!(lemma_6a(Some(2)).is_err());
}

#[test]
fn axet_census() {
    let r = axets(6).unwrap();
    assert!(r.passed(), "{}", r.render_text(false));
    assert_eq!(witness(&r, "k = 6 = 3 * 2: closure(a_0, a_3) is X'(2+4)", "points"), "6");
    assert_eq!(witness(&r, "k = 6 = 3 * 2: closure(a_0, a_3) is X'(2+4)", "kind"), "X'(2+4)");
    assert_eq!(witness(&r, "k = 1: census and generation", "closure(a_0, a_1)"), "3");
    assert!(r.check("k = 3: closure(a_m, a_(m+3)) is X'(1+2) with a_(m+3) fixed, all odd m").unwrap().passed);
    assert!(axets(1).is_err());
}

#[test]
fn even_case_report() {
    let r = even_case(8).unwrap();
    assert!(r.passed(), "{}", r.render_text(false));
    let pairs = witness(&r, "q = 4: witnesses l with l t = 2q - t (mod 16) for all odd t", "t->l");
    assert!(pairs.split(' ').any(|p| p == "3->7"));
    assert_eq!(witness(&r, "q = 2: trace reaches a_-1 = a_(2q-1) with distinct labels", "labels"), "7 vs 3 (mod 8)");
    assert!(even_case(6).is_err());
    assert!(even_case(1).is_err());
}

#[test]
fn family_report() {
    let r = family_lemmas().unwrap();
    assert!(r.passed(), "{}", r.render_text(false));
    assert_eq!(r.checks.len(), 13);
}

#[test]
fn renderings_agree_and_repeat() {
    let a = even_case(4).unwrap();
    let b = even_case(4).unwrap();
    assert_eq!(a.render_text(false), b.render_text(false));
    let j = a.to_json();
    assert_eq!(j["status"], "pass");
    let checks = j["checks"].as_array().unwrap();
    assert_eq!(checks.len(), a.checks.len());
    for (c, v) in a.checks.iter().zip(checks) {
        assert_eq!(v["passed"].as_bool().unwrap(), c.passed);
        assert_eq!(v["name"], c.name.as_str());
    }
    let colored = a.render_text(true);
    assert!(colored.contains("\x1b[32mPASS"));
    assert!(!a.render_text(false).contains('\x1b'));
}

#[test]
fn failing_checks_fail_the_report() {
    let mut r = Report::new("x", "y");
    r.push(Check::new("fine", true));
    assert!(r.passed());
    r.push(Check::new("broken", false).with("why", 1));
    assert!(!r.passed());
    assert!(r.render_text(false).ends_with("overall: FAIL\n"));
    assert_eq!(r.to_json()["status"], "fail");
}
