//! Exact arithmetic in the cyclotomic integers Z[ζ_p] and the character sums
//! built from them.
//!
//! Values are kept in the power basis `1, ζ, ..., ζ^(p-2)`. Any intermediate
//! vector of length `p` is brought back to that basis with
//! `ζ^(p-1) = -(1 + ζ + ... + ζ^(p-2))`, which makes the representation a
//! unique normal form and equality a plain vector comparison.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gf::{FieldContext, FieldElement};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    p: u32,
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[ζ_{}]{:?}", self.p, self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

impl CyclotomicInt {
    /// Reduces a length-`p` vector over `1, ζ, ..., ζ^(p-1)` to the power basis.
    fn from_full(p: u32, mut full: Vec<BigInt>) -> Self {
        debug_assert_eq!(full.len(), p as usize);
        let top = full.pop().unwrap_or_default();
        if !top.is_zero() {
            for c in full.iter_mut() {
                *c -= &top;
            }
        }
        CyclotomicInt { p, coeffs: full }
    }

    fn to_full(&self) -> Vec<BigInt> {
        let mut full = self.coeffs.clone();
        full.push(BigInt::zero());
        full
    }

    /// `Σ_t counts[t] ζ^t` for `t` in `0..p`.
    pub fn from_exponent_counts(p: u32, counts: &[i64]) -> Self {
        assert_eq!(counts.len(), p as usize, "need one count per p-th root of unity");
        Self::from_full(p, counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Power-basis coefficients; fails unless exactly `p - 1` are given.
    pub fn from_coeffs(p: u32, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != p as usize - 1 {
            return Err(Error::ShapeMismatch(format!(
                "Z[ζ_{p}] needs {} coefficients, got {}",
                p - 1,
                coeffs.len()
            )));
        }
        Ok(CyclotomicInt { p, coeffs })
    }

    pub fn zero(p: u32) -> Self {
        CyclotomicInt {
            p,
            coeffs: vec![BigInt::zero(); p as usize - 1],
        }
    }

    pub fn from_int(p: u32, n: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(p);
        z.coeffs[0] = n.into();
        z
    }

    pub fn one(p: u32) -> Self {
        Self::from_int(p, 1)
    }

    /// `ζ_p^(t mod p)`.
    pub fn root_power(p: u32, t: i64) -> Self {
        let mut full = vec![BigInt::zero(); p as usize];
        full[t.rem_euclid(p as i64) as usize] = BigInt::from(1);
        Self::from_full(p, full)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::MixedCyclotomicOrder(self.p, other.p))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CyclotomicInt { p: self.p, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CyclotomicInt { p: self.p, coeffs })
    }

    pub fn neg(&self) -> Self {
        CyclotomicInt {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Product, computed modulo `x^p - 1` and then reduced.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let p = self.p as usize;
        let mut full = vec![BigInt::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    full[(i + j) % p] += a * b;
                }
            }
        }
        Ok(Self::from_full(self.p, full))
    }

    pub fn scale(&self, k: i64) -> Self {
        CyclotomicInt {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Complex conjugation, `ζ -> ζ^(-1)`.
    pub fn conj(&self) -> Self {
        let p = self.p as usize;
        let full = self.to_full();
        let mut out = vec![BigInt::zero(); p];
        for (i, c) in full.into_iter().enumerate() {
            out[(p - i) % p] = c;
        }
        Self::from_full(self.p, out)
    }

    /// Value at `ζ_p = e^(2πi/p)` in double precision.
    pub fn complex_embedding(&self) -> (f64, f64) {
        let p = self.p as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (i, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let angle = 2.0 * PI * i as f64 / p;
            (re + c * angle.cos(), im + c * angle.sin())
        })
    }
}

fn exponent_counts(ctx: &FieldContext) -> Vec<i64> {
    vec![0; ctx.p() as usize]
}

/// `Σ_{x ∈ set} ζ_p^{Tr(bx)}`.
pub fn additive_char_sum<I>(ctx: &FieldContext, b: FieldElement, set: I) -> CyclotomicInt
where
    I: IntoIterator<Item = FieldElement>,
{
    let mut counts = exponent_counts(ctx);
    for x in set {
        counts[ctx.trace(ctx.mul(b, x)) as usize] += 1;
    }
    CyclotomicInt::from_exponent_counts(ctx.p(), &counts)
}

/// The quadratic Gauss sum `Σ_x η(x) ζ_p^{Tr(x)}` over the whole field.
pub fn gauss_sum(ctx: &FieldContext) -> Result<CyclotomicInt> {
    let mut counts = exponent_counts(ctx);
    for x in ctx.nonzero_elements() {
        counts[ctx.trace(x) as usize] += ctx.quadratic_character(x)? as i64;
    }
    Ok(CyclotomicInt::from_exponent_counts(ctx.p(), &counts))
}

/// `Σ_c ζ_p^{Tr(a2 c^2 + a1 c + a0)}` by direct summation.
pub fn quadratic_sum(
    ctx: &FieldContext,
    a2: FieldElement,
    a1: FieldElement,
    a0: FieldElement,
) -> Result<CyclotomicInt> {
    if ctx.p() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    if a2.is_zero() {
        return Err(Error::DegenerateQuadratic);
    }
    let mut counts = exponent_counts(ctx);
    for c in ctx.elements() {
        let v = ctx.add(ctx.mul(ctx.add(ctx.mul(a2, c), a1), c), a0);
        counts[ctx.trace(v) as usize] += 1;
    }
    Ok(CyclotomicInt::from_exponent_counts(ctx.p(), &counts))
}

/// Completing-the-square evaluation of the same sum:
/// `G · η(a2) · ζ_p^{Tr(a0 - a1^2 (4 a2)^(-1))}`.
pub fn quadratic_sum_closed_form(
    ctx: &FieldContext,
    a2: FieldElement,
    a1: FieldElement,
    a0: FieldElement,
) -> Result<CyclotomicInt> {
    if ctx.p() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    if a2.is_zero() {
        return Err(Error::DegenerateQuadratic);
    }
    let four_a2 = ctx.mul(ctx.from_int(4), a2);
    let shift = ctx.mul(ctx.mul(a1, a1), ctx.inv(four_a2)?);
    let phase = CyclotomicInt::root_power(ctx.p(), ctx.trace(ctx.sub(a0, shift)) as i64);
    let g = gauss_sum(ctx)?.scale(ctx.quadratic_character(a2)? as i64);
    g.mul(&phase)
}

/// `(-1)^(m-1) · i^((p-1)^2 m / 4) · p^(m/2)` as a complex number, for odd `p`.
pub fn gauss_sum_closed_form(p: u32, m: u32) -> (f64, f64) {
    let sign = if (m - 1).is_multiple_of(2) { 1.0 } else { -1.0 };
    let quarter_turns = ((p as u64 - 1).pow(2) * m as u64 / 4) % 4;
    let (re, im) = match quarter_turns {
        0 => (1.0, 0.0),
        1 => (0.0, 1.0),
        2 => (-1.0, 0.0),
        _ => (0.0, -1.0),
    };
    let magnitude = (p as f64).powf(m as f64 / 2.0);
    (sign * re * magnitude, sign * im * magnitude)
}
