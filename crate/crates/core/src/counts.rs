//! How many points of a domain a polynomial of degree at most two sends to a
//! given value.
//!
//! Each closed form has an enumeration oracle next to it. The closed forms
//! are what the dimension-3 enumerators are built from; the oracles exist so
//! the two can be compared on every argument of a small field.

use crate::error::{Error, Result};
use crate::gf::{FieldContext, FieldElement};

/// `a2 x^2 + a1 x + a0`; `a2` may be zero for the linear case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Quadratic {
    pub a2: FieldElement,
    pub a1: FieldElement,
    pub a0: FieldElement,
}

impl Quadratic {
    pub fn new(a2: FieldElement, a1: FieldElement, a0: FieldElement) -> Self {
        Quadratic { a2, a1, a0 }
    }

    pub fn eval(&self, ctx: &FieldContext, x: FieldElement) -> FieldElement {
        ctx.add(ctx.mul(ctx.add(ctx.mul(self.a2, x), self.a1), x), self.a0)
    }

    /// The value at the vertex, `(4 a2)^(-1) (4 a0 a2 - a1^2)`; odd `p`, `a2 != 0`.
    pub fn vertex_value(&self, ctx: &FieldContext) -> Result<FieldElement> {
        if ctx.p() == 2 {
            return Err(Error::CharacteristicTwo);
        }
        let four = ctx.from_int(4);
        let four_a2 = ctx.mul(four, self.a2);
        let num = ctx.sub(ctx.mul(ctx.mul(four, self.a0), self.a2), ctx.mul(self.a1, self.a1));
        ctx.div(num, four_a2).map_err(|_| Error::DegenerateQuadratic)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    FullField,
    /// The field with one point removed.
    Punctured(FieldElement),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CountQuery {
    pub poly: Quadratic,
    pub rho: FieldElement,
    pub domain: Domain,
}

impl CountQuery {
    fn check(&self, ctx: &FieldContext) -> Result<()> {
        let Quadratic { a2, a1, a0 } = self.poly;
        for x in [a2, a1, a0, self.rho] {
            ctx.check(x)?;
        }
        if let Domain::Punctured(beta) = self.domain {
            ctx.check(beta)?;
        }
        Ok(())
    }
}

/// Number of `x` in the domain with `poly(x) = rho`, by iteration.
pub fn count_oracle(ctx: &FieldContext, query: &CountQuery) -> u64 {
    ctx.elements()
        .filter(|&x| match query.domain {
            Domain::FullField => true,
            Domain::Punctured(beta) => x != beta,
        })
        .filter(|&x| query.poly.eval(ctx, x) == query.rho)
        .count() as u64
}

/// Closed-form count for either domain.
pub fn count(ctx: &FieldContext, query: &CountQuery) -> Result<u64> {
    query.check(ctx)?;
    match query.domain {
        Domain::FullField => count_full_field(ctx, query.poly, query.rho),
        Domain::Punctured(beta) => count_punctured(ctx, query.poly, query.rho, beta),
    }
}

fn eta(ctx: &FieldContext, x: FieldElement) -> i64 {
    ctx.quadratic_character(x).expect("odd characteristic") as i64
}

/// `Tr(a2 a1^(-2) (rho - a0))` for characteristic two.
fn char2_trace_test(ctx: &FieldContext, poly: Quadratic, rho: FieldElement) -> Result<u32> {
    let a1_sq_inv = ctx.inv(ctx.mul(poly.a1, poly.a1))?;
    Ok(ctx.trace(ctx.mul(ctx.mul(poly.a2, a1_sq_inv), ctx.sub(rho, poly.a0))))
}

/// Closed-form count over the whole field.
pub fn count_full_field(ctx: &FieldContext, poly: Quadratic, rho: FieldElement) -> Result<u64> {
    let q = ctx.q() as u64;
    if poly.a2.is_zero() {
        return Ok(match (poly.a1.is_zero(), rho == poly.a0) {
            (true, true) => q,
            (true, false) => 0,
            (false, _) => 1,
        });
    }
    if ctx.p() == 2 {
        if poly.a1.is_zero() {
            return Ok(1);
        }
        return Ok(if char2_trace_test(ctx, poly, rho)? == 0 { 2 } else { 0 });
    }
    let vertex = poly.vertex_value(ctx)?;
    if rho == vertex {
        Ok(1)
    } else {
        Ok((1 + eta(ctx, poly.a2) * eta(ctx, ctx.sub(rho, vertex))) as u64)
    }
}

/// Closed-form count over the field with `beta` removed.
pub fn count_punctured(
    ctx: &FieldContext,
    poly: Quadratic,
    rho: FieldElement,
    beta: FieldElement,
) -> Result<u64> {
    let q = ctx.q() as u64;
    let at_beta = poly.eval(ctx, beta);
    let hits_beta = rho == at_beta;
    if poly.a2.is_zero() {
        return Ok(match (poly.a1.is_zero(), rho == poly.a0) {
            (true, true) => q - 1,
            (true, false) => 0,
            (false, _) => u64::from(!hits_beta),
        });
    }
    if ctx.p() == 2 {
        if poly.a1.is_zero() {
            return Ok(u64::from(!hits_beta));
        }
        if hits_beta {
            return Ok(1);
        }
        return Ok(if char2_trace_test(ctx, poly, rho)? == 0 { 2 } else { 0 });
    }
    let vertex = poly.vertex_value(ctx)?;
    let twist = eta(ctx, poly.a2) * eta(ctx, ctx.sub(rho, vertex));
    Ok(match (rho == vertex, hits_beta) {
        (true, true) => 0,
        (true, false) => 1,
        (false, true) => twist as u64,
        (false, false) => (1 + twist) as u64,
    })
}

fn check_m_args(ctx: &FieldContext, gamma2: FieldElement) -> Result<()> {
    if ctx.p() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    if gamma2.is_zero() {
        return Err(Error::DegenerateQuadratic);
    }
    Ok(())
}

/// Number of `(a0, a1, a2)` with `a2 = γ2`, vertex value `γ1` and value `γ0`
/// at `beta`, in closed form.
pub fn m_cardinality(
    ctx: &FieldContext,
    beta: FieldElement,
    gamma2: FieldElement,
    gamma1: FieldElement,
    gamma0: FieldElement,
) -> Result<u64> {
    check_m_args(ctx, gamma2)?;
    for x in [beta, gamma2, gamma1, gamma0] {
        ctx.check(x)?;
    }
    if gamma0 == gamma1 {
        return Ok(1);
    }
    Ok(match eta(ctx, gamma2) * eta(ctx, ctx.sub(gamma0, gamma1)) {
        1 => 2,
        _ => 0,
    })
}

/// The same count by enumerating `a1`; `a2` and `a0` are then forced.
pub fn m_oracle(
    ctx: &FieldContext,
    beta: FieldElement,
    gamma2: FieldElement,
    gamma1: FieldElement,
    gamma0: FieldElement,
) -> Result<u64> {
    check_m_args(ctx, gamma2)?;
    let beta_sq = ctx.mul(beta, beta);
    let mut hits = 0;
    for a1 in ctx.elements() {
        let a0 = ctx.sub(ctx.sub(gamma0, ctx.mul(gamma2, beta_sq)), ctx.mul(beta, a1));
        if Quadratic::new(gamma2, a1, a0).vertex_value(ctx)? == gamma1 {
            hits += 1;
        }
    }
    Ok(hits)
}
