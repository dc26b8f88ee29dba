//! Complete weight enumerators.
//!
//! A CWE over GF(q) is a polynomial in the `q` variables `w_ρ`, one per field
//! element, indexed by element code. Each monomial is stored as its exponent
//! vector; like monomials are always merged, so two enumerators are equal
//! exactly when their term maps are.

mod closed_form;

pub use closed_form::{closed_form_for, cwe_k3_fullfield, cwe_k3_punctured, cwe_rs2};

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::codes::{enumerate_slice, CodeSpec, Codeword};
use crate::error::{Error, Result};
use crate::gf::FieldElement;

/// `exps[i]` is the exponent of `w_ρ` for the element with code `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }

    /// The composition of a codeword: how often each element occurs.
    pub fn of_codeword(q: usize, word: &Codeword) -> Self {
        let mut exps = vec![0u32; q];
        for x in word.symbols() {
            exps[x.code() as usize] += 1;
        }
        ExponentVector(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn exponent_of(&self, x: FieldElement) -> u32 {
        self.0[x.code() as usize]
    }
}

/// Accumulates one monomial factor by factor.
#[derive(Clone, Debug)]
pub(crate) struct Monomial(Vec<u32>);

impl Monomial {
    pub(crate) fn one(q: usize) -> Self {
        Monomial(vec![0; q])
    }

    pub(crate) fn times(mut self, x: FieldElement, power: u32) -> Self {
        self.0[x.code() as usize] += power;
        self
    }

    pub(crate) fn mul_by(&mut self, x: FieldElement, power: u32) {
        self.0[x.code() as usize] += power;
    }

    pub(crate) fn finish(self) -> ExponentVector {
        ExponentVector(self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CwePolynomial {
    q: usize,
    n: usize,
    terms: BTreeMap<ExponentVector, u64>,
}

impl CwePolynomial {
    /// The zero polynomial in `q` variables, homogeneous of degree `n`.
    pub fn new(q: usize, n: usize) -> Self {
        CwePolynomial {
            q,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Code length, the common degree of every monomial.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `coeff · w^exps`, merging with an existing monomial.
    pub fn add_term(&mut self, exps: ExponentVector, coeff: u64) -> Result<()> {
        if exps.0.len() != self.q {
            return Err(Error::ShapeMismatch(format!(
                "exponent vector has {} entries, expected {}",
                exps.0.len(),
                self.q
            )));
        }
        if exps.degree() != self.n as u64 {
            return Err(Error::ShapeMismatch(format!(
                "monomial has degree {}, expected {}",
                exps.degree(),
                self.n
            )));
        }
        if coeff > 0 {
            *self.terms.entry(exps).or_insert(0) += coeff;
        }
        Ok(())
    }

    pub(crate) fn add_monomial(&mut self, mono: Monomial, coeff: u64) -> Result<()> {
        self.add_term(mono.finish(), coeff)
    }

    /// Terms in lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, u64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coefficient(&self, exps: &ExponentVector) -> u64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all coefficients; the number of codewords.
    pub fn mass(&self) -> u128 {
        self.terms.values().map(|&c| c as u128).sum()
    }

    /// Adds every term of `other` into `self`.
    pub fn merge(&mut self, other: CwePolynomial) -> Result<()> {
        if (self.q, self.n) != (other.q, other.n) {
            return Err(shape_mismatch(self, &other));
        }
        for (e, c) in other.terms {
            *self.terms.entry(e).or_insert(0) += c;
        }
        Ok(())
    }
}

fn shape_mismatch(a: &CwePolynomial, b: &CwePolynomial) -> Error {
    Error::ShapeMismatch(format!(
        "(q, n) = ({}, {}) vs ({}, {})",
        a.q, a.n, b.q, b.n
    ))
}

/// CWE by enumerating and tallying every codeword. The `q` slices fixed by
/// the leading message coefficient are tallied in parallel.
pub fn cwe_bruteforce(spec: &CodeSpec, budget: u64) -> Result<CwePolynomial> {
    let ctx = spec.field();
    let q = ctx.q() as usize;
    let n = spec.length();
    let leads: Vec<FieldElement> = ctx.elements().collect();
    let partials = leads
        .par_iter()
        .map(|&lead| {
            let mut local: BTreeMap<ExponentVector, u64> = BTreeMap::new();
            for word in enumerate_slice(spec, lead, budget)? {
                *local.entry(ExponentVector::of_codeword(q, &word)).or_insert(0) += 1;
            }
            Ok(CwePolynomial { q, n, terms: local })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total = CwePolynomial::new(q, n);
    for part in partials {
        total.merge(part)?;
    }
    Ok(total)
}

/// `(A_0, ..., A_n)`: number of codewords of each Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution(pub Vec<u64>);

impl WeightDistribution {
    /// Smallest positive weight with a nonzero count.
    pub fn min_positive_weight(&self) -> Option<usize> {
        self.0.iter().enumerate().skip(1).find(|(_, &a)| a > 0).map(|(i, _)| i)
    }

    pub fn total(&self) -> u128 {
        self.0.iter().map(|&a| a as u128).sum()
    }
}

/// Projects onto the weight distribution via the exponent of `w_0`.
pub fn weight_distribution(cwe: &CwePolynomial) -> WeightDistribution {
    let mut a = vec![0u64; cwe.n + 1];
    for (e, c) in cwe.terms() {
        let zeros = e.exponent_of(FieldElement::ZERO) as usize;
        a[cwe.n - zeros] += c;
    }
    WeightDistribution(a)
}

/// Outcome of [`cwe_equal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CweComparison {
    Equal,
    /// The lexicographically smallest exponent vector where the two differ.
    Differ {
        exps: ExponentVector,
        left: u64,
        right: u64,
    },
}

impl CweComparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, CweComparison::Equal)
    }
}

pub fn cwe_equal(a: &CwePolynomial, b: &CwePolynomial) -> Result<CweComparison> {
    if (a.q, a.n) != (b.q, b.n) {
        return Err(shape_mismatch(a, b));
    }
    let first = a
        .terms
        .keys()
        .chain(b.terms.keys())
        .filter(|e| a.coefficient(e) != b.coefficient(e))
        .min();
    Ok(match first {
        None => CweComparison::Equal,
        Some(e) => CweComparison::Differ {
            exps: e.clone(),
            left: a.coefficient(e),
            right: b.coefficient(e),
        },
    })
}
