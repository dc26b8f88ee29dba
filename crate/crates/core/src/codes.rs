//! Reed-Solomon and extended Reed-Solomon codes given by evaluation points.
//!
//! A message `f_0 + f_1 x + ... + f_{k-1} x^{k-1}` is sent to
//! `(f(α_1), ..., f(α_n))`; the extended code appends `f_{k-1}` as a last
//! coordinate.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{FieldContext, FieldElement};

/// Default cap on the number of codewords enumerated, `2^24`.
pub const DEFAULT_CODEWORD_BUDGET: u64 = 1 << 24;

/// Choice of evaluation points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalKind {
    Full,
    Punctured(FieldElement),
    Primitive,
    Standard,
    Custom(Vec<FieldElement>),
}

impl EvalKind {
    /// Parses `full`, `primitive`, `standard`, `punctured:<code>` or
    /// `custom:<code>,<code>,...`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::parse("eval", msg);
        let parse_code = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map(FieldElement::from_code)
                .map_err(|_| bad(format!("not an element code: {t:?}")))
        };
        match s {
            "full" => Ok(EvalKind::Full),
            "primitive" => Ok(EvalKind::Primitive),
            "standard" => Ok(EvalKind::Standard),
            _ => {
                if let Some(rest) = s.strip_prefix("punctured:") {
                    Ok(EvalKind::Punctured(parse_code(rest)?))
                } else if let Some(rest) = s.strip_prefix("custom:") {
                    let list = rest.split(',').map(parse_code).collect::<Result<Vec<_>>>()?;
                    Ok(EvalKind::Custom(list))
                } else {
                    Err(bad(format!("unknown evaluation set {s:?}")))
                }
            }
        }
    }
}

/// Evaluation points in the order the code uses them.
pub fn make_eval_set(ctx: &FieldContext, kind: &EvalKind) -> Result<Vec<FieldElement>> {
    let points: Vec<FieldElement> = match kind {
        EvalKind::Full | EvalKind::Standard => ctx.elements().collect(),
        EvalKind::Primitive => ctx.nonzero_elements().collect(),
        EvalKind::Punctured(beta) => {
            ctx.check(*beta)?;
            ctx.elements().filter(|x| x != beta).collect()
        }
        EvalKind::Custom(list) => list.clone(),
    };
    check_distinct(ctx, &points)?;
    Ok(points)
}

fn check_distinct(ctx: &FieldContext, points: &[FieldElement]) -> Result<()> {
    let mut seen = HashSet::with_capacity(points.len());
    for &x in points {
        ctx.check(x)?;
        if !seen.insert(x) {
            return Err(Error::DuplicateEvaluationPoint(x.code()));
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct CodeSpec {
    ctx: Arc<FieldContext>,
    k: usize,
    alpha: Vec<FieldElement>,
    extended: bool,
}

impl CodeSpec {
    pub fn new(
        ctx: Arc<FieldContext>,
        k: usize,
        alpha: Vec<FieldElement>,
        extended: bool,
    ) -> Result<Self> {
        check_distinct(&ctx, &alpha)?;
        let n = alpha.len();
        if k == 0 {
            return Err(Error::ParameterOutOfRange("dimension k must be at least 1".into()));
        }
        if k > n {
            return Err(Error::ParameterOutOfRange(format!(
                "dimension k = {k} exceeds the number of evaluation points n = {n}"
            )));
        }
        Ok(CodeSpec { ctx, k, alpha, extended })
    }

    pub fn from_kind(ctx: Arc<FieldContext>, k: usize, kind: &EvalKind, extended: bool) -> Result<Self> {
        let alpha = make_eval_set(&ctx, kind)?;
        Self::new(ctx, k, alpha, extended)
    }

    pub fn field(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn field_arc(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn alpha(&self) -> &[FieldElement] {
        &self.alpha
    }

    pub fn is_extended(&self) -> bool {
        self.extended
    }

    /// Codeword length: `n`, or `n + 1` for the extended code.
    pub fn length(&self) -> usize {
        self.alpha.len() + usize::from(self.extended)
    }

    /// `q^k`, saturating.
    pub fn size(&self) -> u128 {
        (self.ctx.q() as u128).saturating_pow(self.k as u32)
    }

    /// Singleton bound `length - k + 1`, attained by every code built here.
    pub fn min_distance(&self) -> usize {
        self.length() - self.k + 1
    }
}

/// Coefficients `(f_0, ..., f_{k-1})` of a message polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MessagePoly(pub Vec<FieldElement>);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword(pub Vec<FieldElement>);

impl Codeword {
    pub fn symbols(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|x| !x.is_zero()).count()
    }
}

pub fn encode(spec: &CodeSpec, msg: &MessagePoly) -> Result<Codeword> {
    if msg.0.len() != spec.k {
        return Err(Error::DimensionMismatch {
            expected: spec.k,
            got: msg.0.len(),
        });
    }
    for &c in &msg.0 {
        spec.ctx.check(c)?;
    }
    Ok(encode_unchecked(spec, &msg.0))
}

fn encode_unchecked(spec: &CodeSpec, coeffs: &[FieldElement]) -> Codeword {
    let ctx = &*spec.ctx;
    let mut symbols = Vec::with_capacity(spec.length());
    for &x in &spec.alpha {
        let v = coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| ctx.add(ctx.mul(acc, x), c));
        symbols.push(v);
    }
    if spec.extended {
        symbols.push(coeffs[spec.k - 1]);
    }
    Codeword(symbols)
}

fn check_budget(spec: &CodeSpec, budget: u64) -> Result<()> {
    let size = spec.size();
    if size > budget as u128 {
        return Err(Error::SizeLimit {
            what: "codeword count q^k",
            value: size,
            limit: budget as u128,
        });
    }
    Ok(())
}

/// Every codeword, one per message, with messages in lexicographic order of
/// `(f_0, ..., f_{k-1})` by element code.
pub fn enumerate_codewords(spec: &CodeSpec, budget: u64) -> Result<Codewords<'_>> {
    check_budget(spec, budget)?;
    Ok(Codewords::new(spec, None))
}

/// The codewords whose leading coefficient `f_{k-1}` equals `lead`. The `q`
/// slices partition the code.
pub fn enumerate_slice(spec: &CodeSpec, lead: FieldElement, budget: u64) -> Result<Codewords<'_>> {
    check_budget(spec, budget)?;
    spec.ctx.check(lead)?;
    Ok(Codewords::new(spec, Some(lead)))
}

/// Iterator over codewords driven by an odometer on the message.
pub struct Codewords<'a> {
    spec: &'a CodeSpec,
    coeffs: Vec<u32>,
    /// Number of leading positions that vary (all `k`, or `k - 1` for a slice).
    free: usize,
    done: bool,
}

impl<'a> Codewords<'a> {
    fn new(spec: &'a CodeSpec, lead: Option<FieldElement>) -> Self {
        let mut coeffs = vec![0u32; spec.k];
        let free = match lead {
            Some(l) => {
                coeffs[spec.k - 1] = l.code();
                spec.k - 1
            }
            None => spec.k,
        };
        Codewords {
            spec,
            coeffs,
            free,
            done: false,
        }
    }

    pub fn message(&self) -> MessagePoly {
        MessagePoly(self.coeffs.iter().map(|&c| FieldElement::from_code(c)).collect())
    }
}

impl Iterator for Codewords<'_> {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.done {
            return None;
        }
        let msg: Vec<FieldElement> = self.coeffs.iter().map(|&c| FieldElement::from_code(c)).collect();
        let word = encode_unchecked(self.spec, &msg);
        // f_0 is the most significant digit.
        let q = self.spec.ctx.q();
        let mut i = self.free;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.coeffs[i] += 1;
            if self.coeffs[i] < q {
                break;
            }
            self.coeffs[i] = 0;
        }
        Some(word)
    }
}
