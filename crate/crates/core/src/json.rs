//! Canonical JSON form of an enumerator together with the code it belongs to:
//!
//! ```text
//! {"p":2,"m":1,"k":2,"n":2,"extended":false,"alpha":[0,1],"terms":[{"e":[0,2],"c":1},...]}
//! ```
//!
//! Keys appear in that fixed order, `n` is the code length, and `terms` is
//! sorted lexicographically by `e`. Output has no insignificant whitespace,
//! so equal records serialize to identical bytes.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::codes::CodeSpec;
use crate::cwe::{CwePolynomial, ExponentVector};
use crate::error::{Error, Result};
use crate::gf::is_prime;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CweRecord {
    pub p: u32,
    pub m: u32,
    pub k: usize,
    pub extended: bool,
    /// Evaluation points by element code.
    pub alpha: Vec<u32>,
    pub cwe: CwePolynomial,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    e: Vec<u32>,
    c: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RecordJson {
    p: u64,
    m: u32,
    k: usize,
    n: usize,
    extended: bool,
    alpha: Vec<u64>,
    terms: Vec<TermJson>,
}

impl CweRecord {
    pub fn new(spec: &CodeSpec, cwe: CwePolynomial) -> Self {
        let ctx = spec.field();
        CweRecord {
            p: ctx.p(),
            m: ctx.m(),
            k: spec.k(),
            extended: spec.is_extended(),
            alpha: spec.alpha().iter().map(|x| x.code()).collect(),
            cwe,
        }
    }

    pub fn to_json(&self) -> String {
        let doc = RecordJson {
            p: self.p as u64,
            m: self.m,
            k: self.k,
            n: self.cwe.n(),
            extended: self.extended,
            alpha: self.alpha.iter().map(|&a| a as u64).collect(),
            terms: self
                .cwe
                .terms()
                .map(|(e, c)| TermJson { e: e.exps().to_vec(), c })
                .collect(),
        };
        serde_json::to_string(&doc).expect("plain data always serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: RecordJson =
            serde_json::from_str(text).map_err(|e| Error::parse("$", e.to_string()))?;

        if !is_prime(doc.p) {
            return Err(Error::parse("p", format!("{} is not prime", doc.p)));
        }
        if doc.m == 0 {
            return Err(Error::parse("m", "must be at least 1"));
        }
        let q = (doc.p as u128)
            .checked_pow(doc.m)
            .filter(|&q| q <= u32::MAX as u128)
            .ok_or_else(|| Error::parse("m", "field order overflows"))? as u64;

        let mut seen = HashSet::new();
        for (i, &a) in doc.alpha.iter().enumerate() {
            if a >= q {
                return Err(Error::parse(format!("alpha[{i}]"), format!("{a} is not below q = {q}")));
            }
            if !seen.insert(a) {
                return Err(Error::parse(format!("alpha[{i}]"), format!("duplicate point {a}")));
            }
        }
        let length = doc.alpha.len() + usize::from(doc.extended);
        if doc.n != length {
            return Err(Error::parse(
                "n",
                format!("{} does not match {} evaluation points (extended: {})", doc.n, doc.alpha.len(), doc.extended),
            ));
        }
        if doc.k == 0 || doc.k > doc.alpha.len() {
            return Err(Error::parse("k", format!("{} is outside 1..={}", doc.k, doc.alpha.len())));
        }

        let mut cwe = CwePolynomial::new(q as usize, doc.n);
        let mut previous: Option<&Vec<u32>> = None;
        for (i, term) in doc.terms.iter().enumerate() {
            let path = format!("terms[{i}]");
            if term.e.len() as u64 != q {
                return Err(Error::parse(
                    format!("{path}.e"),
                    format!("has {} entries, expected {q}", term.e.len()),
                ));
            }
            let degree: u64 = term.e.iter().map(|&x| x as u64).sum();
            if degree != doc.n as u64 {
                return Err(Error::parse(format!("{path}.e"), format!("sums to {degree}, expected {}", doc.n)));
            }
            if term.c == 0 {
                return Err(Error::parse(format!("{path}.c"), "coefficients must be positive"));
            }
            if previous.is_some_and(|prev| prev >= &term.e) {
                return Err(Error::parse(path, "terms must be strictly increasing in e"));
            }
            previous = Some(&term.e);
            cwe.add_term(ExponentVector::new(term.e.clone()), term.c)?;
        }

        Ok(CweRecord {
            p: doc.p as u32,
            m: doc.m,
            k: doc.k,
            extended: doc.extended,
            alpha: doc.alpha.iter().map(|&a| a as u32).collect(),
            cwe,
        })
    }

    /// One line per monomial, `c * w[i]^t ...`, in the JSON term order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let kind = if self.extended { "ERS" } else { "RS" };
        let alpha: Vec<String> = self.alpha.iter().map(u32::to_string).collect();
        let _ = writeln!(
            s,
            "# {kind}_{}(alpha) over GF({}^{}), length {}, alpha = [{}]",
            self.k,
            self.p,
            self.m,
            self.cwe.n(),
            alpha.join(",")
        );
        for (e, c) in self.cwe.terms() {
            let factors: Vec<String> = e
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &t)| t > 0)
                .map(|(i, t)| format!("w[{i}]^{t}"))
                .collect();
            let _ = writeln!(s, "{c} * {}", factors.join(" "));
        }
        s
    }
}
