//! Frozen values computed independently of this crate (by hand or by a
//! separate enumeration script), checked against both the closed forms and
//! the enumerator.

use std::sync::Arc;

use rs_cwe::codes::{encode, enumerate_codewords, DEFAULT_CODEWORD_BUDGET};
use rs_cwe::counts::{count, m_cardinality, CountQuery, Domain, Quadratic};
use rs_cwe::cwe::{closed_form_for, cwe_bruteforce, cwe_equal, weight_distribution, CweComparison};
use rs_cwe::cyclo::{gauss_sum, quadratic_sum};
use rs_cwe::{CodeSpec, CwePolynomial, CyclotomicInt, Error, EvalKind, ExponentVector, FieldContext, FieldElement, MessagePoly};

fn el(c: u32) -> FieldElement {
    FieldElement::from_code(c)
}

fn spec(p: u64, m: u32, k: usize, kind: EvalKind, extended: bool) -> CodeSpec {
    CodeSpec::from_kind(Arc::new(FieldContext::new(p, m).unwrap()), k, &kind, extended).unwrap()
}

fn terms(cwe: &CwePolynomial) -> Vec<(Vec<u32>, u64)> {
    cwe.terms().map(|(e, c)| (e.exps().to_vec(), c)).collect()
}

fn check_frozen(spec: CodeSpec, expected: &[(&[u32], u64)]) {
    let expected: Vec<(Vec<u32>, u64)> = expected.iter().map(|(e, c)| (e.to_vec(), *c)).collect();
    assert_eq!(terms(&cwe_bruteforce(&spec, DEFAULT_CODEWORD_BUDGET).unwrap()), expected);
    assert_eq!(terms(&closed_form_for(&spec).unwrap()), expected);
}

#[test]
fn gf2_dimension2() {
    check_frozen(spec(2, 1, 2, EvalKind::Custom(vec![el(0), el(1)]), false), &[(&[0, 2], 1), (&[1, 1], 2), (&[2, 0], 1)]);
    check_frozen(spec(2, 1, 2, EvalKind::Custom(vec![el(0), el(1)]), true), &[(&[1, 2], 3), (&[3, 0], 1)]);
}

#[test]
fn gf3_dimension2() {
    check_frozen(
        spec(3, 1, 2, EvalKind::Full, false),
        &[(&[0, 0, 3], 1), (&[0, 3, 0], 1), (&[1, 1, 1], 6), (&[3, 0, 0], 1)],
    );
    check_frozen(
        spec(3, 1, 2, EvalKind::Full, true),
        &[(&[1, 0, 3], 1), (&[1, 1, 2], 3), (&[1, 2, 1], 3), (&[1, 3, 0], 1), (&[4, 0, 0], 1)],
    );
}

#[test]
fn gf3_dimension3_extended() {
    check_frozen(
        spec(3, 1, 3, EvalKind::Full, true),
        &[(&[0, 2, 2], 6), (&[1, 0, 3], 4), (&[1, 3, 0], 4), (&[2, 1, 1], 12), (&[4, 0, 0], 1)],
    );
}

#[test]
fn gf4_dimension3_full() {
    check_frozen(
        spec(2, 2, 3, EvalKind::Full, false),
        &[
            (&[0, 0, 0, 4], 1),
            (&[0, 0, 2, 2], 6),
            (&[0, 0, 4, 0], 1),
            (&[0, 2, 0, 2], 6),
            (&[0, 2, 2, 0], 6),
            (&[0, 4, 0, 0], 1),
            (&[1, 1, 1, 1], 24),
            (&[2, 0, 0, 2], 6),
            (&[2, 0, 2, 0], 6),
            (&[2, 2, 0, 0], 6),
            (&[4, 0, 0, 0], 1),
        ],
    );
}

#[test]
fn gf4_dimension3_without_zero_extended() {
    check_frozen(
        spec(2, 2, 3, EvalKind::Punctured(el(0)), true),
        &[
            (&[0, 0, 1, 3], 1),
            (&[0, 0, 2, 2], 2),
            (&[0, 0, 3, 1], 1),
            (&[0, 1, 0, 3], 1),
            (&[0, 1, 1, 2], 3),
            (&[0, 1, 2, 1], 3),
            (&[0, 1, 3, 0], 1),
            (&[0, 2, 0, 2], 2),
            (&[0, 2, 1, 1], 3),
            (&[0, 2, 2, 0], 2),
            (&[0, 3, 0, 1], 1),
            (&[0, 3, 1, 0], 1),
            (&[1, 0, 0, 3], 2),
            (&[1, 0, 1, 2], 2),
            (&[1, 0, 2, 1], 2),
            (&[1, 0, 3, 0], 2),
            (&[1, 1, 0, 2], 2),
            (&[1, 1, 1, 1], 6),
            (&[1, 1, 2, 0], 2),
            (&[1, 2, 0, 1], 2),
            (&[1, 2, 1, 0], 2),
            (&[1, 3, 0, 0], 2),
            (&[2, 0, 0, 2], 1),
            (&[2, 0, 1, 1], 5),
            (&[2, 0, 2, 0], 1),
            (&[2, 1, 0, 1], 5),
            (&[2, 1, 1, 0], 5),
            (&[2, 2, 0, 0], 1),
            (&[4, 0, 0, 0], 1),
        ],
    );
}

#[test]
fn gf5_without_two_does_not_depend_on_the_removed_point() {
    let s2 = spec(5, 1, 3, EvalKind::Punctured(el(2)), false);
    let brute = cwe_bruteforce(&s2, DEFAULT_CODEWORD_BUDGET).unwrap();
    assert_eq!(brute.num_terms(), 40);
    assert_eq!(brute.coefficient(&ExponentVector::new(vec![1, 1, 1, 1, 0])), 4);
    assert_eq!(brute.coefficient(&ExponentVector::new(vec![2, 2, 0, 0, 0])), 2);
    let s0 = spec(5, 1, 3, EvalKind::Punctured(el(0)), false);
    assert!(cwe_equal(&brute, &closed_form_for(&s0).unwrap()).unwrap().is_equal());
    assert!(cwe_equal(&brute, &closed_form_for(&s2).unwrap()).unwrap().is_equal());
}

#[test]
fn gf7_without_three_extended() {
    let s = spec(7, 1, 3, EvalKind::Punctured(el(3)), true);
    let brute = cwe_bruteforce(&s, DEFAULT_CODEWORD_BUDGET).unwrap();
    assert_eq!(cwe_equal(&brute, &closed_form_for(&s).unwrap()).unwrap(), CweComparison::Equal);
}

fn binomial(n: u64, k: u64) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Weight distribution of an `[n, k]` MDS code over GF(q).
fn mds_weights(q: u64, n: u64, k: u64) -> Vec<u64> {
    let d = n - k + 1;
    let mut a = vec![0u64; n as usize + 1];
    a[0] = 1;
    for w in d..=n {
        let s: i128 = (0..=w - d)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * binomial(w, j) * ((q as i128).pow((w - d + 1 - j) as u32) - 1)
            })
            .sum();
        a[w as usize] = (binomial(n, w) * s) as u64;
    }
    a
}

#[test]
fn weight_distributions_match_mds_formula() {
    for (p, m) in [(2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (2, 4)] {
        let ctx = Arc::new(FieldContext::new(p, m).unwrap());
        let q = ctx.q() as u64;
        for k in [2, 3] {
            for extended in [false, true] {
                for kind in [EvalKind::Full, EvalKind::Punctured(el(1))] {
                    if k == 3 && q < 4 && matches!(kind, EvalKind::Punctured(_)) {
                        continue;
                    }
                    let s = CodeSpec::from_kind(ctx.clone(), k, &kind, extended).unwrap();
                    let wd = weight_distribution(&closed_form_for(&s).unwrap());
                    assert_eq!(wd.0, mds_weights(q, s.length() as u64, k as u64), "q={q} k={k} {kind:?} ext={extended}");
                }
            }
        }
    }
}

#[test]
fn gf2_weight_distribution() {
    let s = spec(2, 1, 2, EvalKind::Custom(vec![el(0), el(1)]), false);
    assert_eq!(weight_distribution(&cwe_bruteforce(&s, 16).unwrap()).0, vec![1, 2, 1]);
}

#[test]
fn field_examples() {
    let gf4 = FieldContext::new(2, 2).unwrap();
    assert_eq!(gf4.modulus(), &[1, 1, 1]);
    assert_eq!(gf4.mul(el(2), el(2)), el(3));
    assert_eq!(gf4.trace(el(2)), 1);
    assert_eq!(gf4.trace(el(1)), 0);
    // x^2 + 1 is the smallest monic irreducible quadratic over F_3.
    assert_eq!(FieldContext::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
    let gf5 = FieldContext::new(5, 1).unwrap();
    assert_eq!(gf5.quadratic_character(el(4)).unwrap(), 1);
    assert_eq!(gf5.quadratic_character(el(2)).unwrap(), -1);
    assert!(matches!(gf4.inv(FieldElement::ZERO), Err(Error::DivisionByZero)));
    assert!(matches!(FieldContext::new(4, 1), Err(Error::InvalidPrime(4))));
}

#[test]
fn cyclotomic_examples() {
    let gf3 = FieldContext::new(3, 1).unwrap();
    let g = gauss_sum(&gf3).unwrap();
    // zeta - zeta^2 = 1 + 2 zeta in the basis {1, zeta}.
    assert_eq!(g, CyclotomicInt::from_exponent_counts(3, &[0, 1, -1]));
    assert_eq!(g.mul(&g).unwrap(), CyclotomicInt::from_int(3, -3));
    let g5 = gauss_sum(&FieldContext::new(5, 1).unwrap()).unwrap();
    assert_eq!(g5.mul(&g5).unwrap(), CyclotomicInt::from_int(5, 5));
    assert_eq!(CyclotomicInt::root_power(3, 2), CyclotomicInt::from_exponent_counts(3, &[-1, -1, 0]));
    // x^2 + 1 over F_3 takes the values 1, 2, 2.
    let s = quadratic_sum(&gf3, el(1), el(0), el(1)).unwrap();
    assert_eq!(s, CyclotomicInt::from_exponent_counts(3, &[0, 1, 2]));
    let (re, im) = g.complex_embedding();
    assert!(re.abs() < 1e-9 && (im - 3f64.sqrt()).abs() < 1e-9);
}

#[test]
fn count_examples() {
    let q = |ctx: &FieldContext, a: [u32; 3], rho: u32, domain: Domain| {
        count(ctx, &CountQuery { poly: Quadratic::new(el(a[0]), el(a[1]), el(a[2])), rho: el(rho), domain }).unwrap()
    };
    let gf3 = FieldContext::new(3, 1).unwrap();
    let gf4 = FieldContext::new(2, 2).unwrap();
    let gf5 = FieldContext::new(5, 1).unwrap();
    assert_eq!(q(&gf3, [1, 0, 0], 1, Domain::FullField), 2);
    assert_eq!(q(&gf3, [1, 0, 0], 1, Domain::Punctured(el(1))), 1);
    assert_eq!(q(&gf3, [1, 0, 0], 2, Domain::FullField), 0);
    assert_eq!(q(&gf4, [1, 1, 0], 0, Domain::FullField), 2);
    assert_eq!(q(&gf4, [0, 0, 3], 3, Domain::FullField), 4);
    assert_eq!(q(&gf4, [0, 0, 3], 3, Domain::Punctured(el(2))), 3);
    assert_eq!(q(&gf5, [1, 0, 0], 4, Domain::Punctured(el(2))), 1);
    assert_eq!(m_cardinality(&gf3, el(0), el(1), el(0), el(2)).unwrap(), 0);
    assert_eq!(m_cardinality(&gf3, el(0), el(1), el(0), el(1)).unwrap(), 2);
    assert_eq!(m_cardinality(&gf3, el(0), el(1), el(2), el(2)).unwrap(), 1);
}

#[test]
fn encoding_examples() {
    let s = spec(2, 1, 2, EvalKind::Custom(vec![el(0), el(1)]), false);
    assert_eq!(encode(&s, &MessagePoly(vec![el(0), el(1)])).unwrap().0, vec![el(0), el(1)]);
    let e = spec(2, 1, 2, EvalKind::Custom(vec![el(0), el(1)]), true);
    assert_eq!(encode(&e, &MessagePoly(vec![el(0), el(1)])).unwrap().0, vec![el(0), el(1), el(1)]);
    let mut words: Vec<Vec<u32>> = enumerate_codewords(&s, 4).unwrap().map(|w| w.0.iter().map(|x| x.code()).collect()).collect();
    words.sort();
    assert_eq!(words, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    assert!(matches!(enumerate_codewords(&s, 3), Err(Error::SizeLimit { .. })));
}
