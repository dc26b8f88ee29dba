//! The finite field GF(p^m) as F_p[x] modulo a canonical irreducible
//! polynomial.
//!
//! An element is the residue class of `c_0 + c_1 x + ... + c_{m-1} x^{m-1}`
//! and is encoded as the integer `sum c_i p^i`. The prime subfield occupies
//! codes `0..p`, code 0 is zero and code 1 is one. The modulus is the monic
//! irreducible of degree `m` whose low coefficients encode to the smallest
//! integer, so two contexts built from the same `(p, m)` agree exactly.

pub(crate) mod poly;

use std::fmt;

use crate::error::{Error, Result};

/// Default bound on the field order `q = p^m`.
pub const DEFAULT_MAX_ORDER: u32 = 4096;

/// An element of a [`FieldContext`], stored by its canonical code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps a raw code without checking it against any field; use
    /// [`FieldContext::element`] for a checked conversion.
    #[inline]
    pub const fn from_code(code: u32) -> Self {
        FieldElement(code)
    }

    #[inline]
    pub fn code(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Immutable description of GF(p^m) together with its multiplication tables.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldContext {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, coefficients `c_0..=c_m`.
    modulus: Vec<u32>,
    /// `exp[i]` is the code of `g^i` for the primitive element `g`, `i < q - 1`.
    exp: Vec<u32>,
    /// Discrete logarithm base `g`; entry 0 is unused.
    log: Vec<u32>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl FieldContext {
    /// Builds GF(p^m) with the default order bound.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        Self::with_limit(p, m, DEFAULT_MAX_ORDER)
    }

    pub fn with_limit(p: u64, m: u32, max_order: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        if m == 0 {
            return Err(Error::ParameterOutOfRange("m must be at least 1".into()));
        }
        let q = (p as u128).checked_pow(m).unwrap_or(u128::MAX);
        if q > max_order as u128 {
            return Err(Error::SizeLimit {
                what: "field order p^m",
                value: q,
                limit: max_order as u128,
            });
        }
        let p = p as u32;
        let q = q as u32;
        let modulus = canonical_modulus(p, m);
        let mut ctx = FieldContext {
            p,
            m,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        ctx.build_tables();
        Ok(ctx)
    }

    fn build_tables(&mut self) {
        let order = (self.q - 1) as u64;
        let factors = prime_factors(order);
        let generator = (1..self.q)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| self.pow_slow(g, order / r) != 1)
            })
            .expect("the multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; self.q as usize];
        let mut cur = 1u32;
        for i in 0..order as u32 {
            exp.push(cur);
            log[cur as usize] = i;
            cur = self.mul_poly(cur, generator);
        }
        debug_assert_eq!(cur, 1);
        self.exp = exp;
        self.log = log;
    }

    fn pow_slow(&self, x: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_poly(acc, base);
            }
            base = self.mul_poly(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Field order `p^m`.
    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Coefficients `c_0..=c_m` of the monic modulus.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn element(&self, code: u64) -> Result<FieldElement> {
        if code < self.q as u64 {
            Ok(FieldElement(code as u32))
        } else {
            Err(Error::ElementOutOfRange { code, q: self.q })
        }
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    /// Coefficient vector `(c_0, ..., c_{m-1})` of an element.
    pub fn digits(&self, x: FieldElement) -> Vec<u32> {
        let mut code = x.0;
        (0..self.m)
            .map(|_| {
                let d = code % self.p;
                code /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> FieldElement {
        let code = digits
            .iter()
            .rev()
            .fold(0u32, |acc, &d| acc * self.p + d % self.p);
        FieldElement(code)
    }

    /// All elements in ascending code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.q).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.q).map(FieldElement)
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        x.0 < self.q
    }

    fn combine_digits(&self, a: u32, b: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.m {
            out += f(a % self.p, b % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.p;
        if p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        FieldElement(self.combine_digits(a.0, b.0, |x, y| (x + y) % p))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.p;
        if p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        FieldElement(self.combine_digits(a.0, b.0, |x, y| (x + p - y) % p))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.sub(FieldElement::ZERO, a)
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let order = self.q - 1;
        let s = self.log[a.0 as usize] + self.log[b.0 as usize];
        let s = if s >= order { s - order } else { s };
        FieldElement(self.exp[s as usize])
    }

    /// Multiplication by direct polynomial product and reduction, without
    /// the log tables.
    pub fn mul_reference(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul_poly(a.0, b.0))
    }

    fn mul_poly(&self, a: u32, b: u32) -> u32 {
        let da = self.digits(FieldElement(a));
        let db = self.digits(FieldElement(b));
        let prod = poly::mul_mod(&da, &db, &self.modulus, self.p);
        self.from_digits(&prod).0
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let order = self.q - 1;
        let l = self.log[a.0 as usize];
        Ok(FieldElement(self.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply exponentiation; `x^0 = 1` including `0^0`.
    pub fn pow(&self, x: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = FieldElement::ONE;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Absolute trace `x + x^p + ... + x^(p^(m-1))`, returned as an integer
    /// in `[0, p)`.
    pub fn trace(&self, x: FieldElement) -> u32 {
        let mut acc = FieldElement::ZERO;
        let mut cur = x;
        for _ in 0..self.m {
            acc = self.add(acc, cur);
            cur = self.pow(cur, self.p as u64);
        }
        debug_assert!(acc.0 < self.p, "trace left the prime subfield");
        acc.0
    }

    /// The quadratic character, `eta(0) = 0`, evaluated as `x^((q-1)/2)`.
    pub fn quadratic_character(&self, x: FieldElement) -> Result<i8> {
        if self.p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if x.is_zero() {
            return Ok(0);
        }
        let r = self.pow(x, ((self.q - 1) / 2) as u64);
        if r == FieldElement::ONE {
            Ok(1)
        } else {
            debug_assert_eq!(r, self.neg(FieldElement::ONE));
            Ok(-1)
        }
    }

    /// Fails with [`Error::ElementOutOfRange`] unless `x` belongs to this field.
    pub fn check(&self, x: FieldElement) -> Result<FieldElement> {
        self.element(x.0 as u64)
    }
}

/// Smallest-code monic irreducible polynomial of degree `m` over F_p.
fn canonical_modulus(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    for code in 0..count {
        let mut f = Vec::with_capacity(m as usize + 1);
        let mut c = code;
        for _ in 0..m {
            f.push((c % p as u64) as u32);
            c /= p as u64;
        }
        f.push(1);
        if poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}
