//! Dense polynomials over the prime field F_p, used only to pick the field
//! modulus and as the slow reference path for multiplication.
//!
//! Coefficient vectors are little-endian (`c[i]` multiplies `x^i`) and kept
//! trimmed: no trailing zeros, the zero polynomial is the empty vector.

pub(crate) type FpPoly = Vec<u32>;

pub(crate) fn trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let p64 = p as u64;
    let mut acc = 1u64;
    let mut b = base as u64 % p64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p64;
        }
        b = b * b % p64;
        exp >>= 1;
    }
    acc as u32
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Remainder of `a` divided by a nonzero `b`.
pub(crate) fn rem(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(a.to_vec());
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &c) in b.iter().enumerate() {
            let t = (factor as u64 * c as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> FpPoly {
    rem(&mul(a, b, p), modulus, p)
}

pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// `x^(p^i) mod f` for `i = 1..=count`, by repeated p-th powering.
fn frobenius_orbit(f: &[u32], p: u32, count: usize) -> Vec<FpPoly> {
    let mut out = Vec::with_capacity(count);
    let mut cur: FpPoly = rem(&[0, 1], f, p);
    for _ in 0..count {
        let mut acc: FpPoly = vec![1];
        let mut base = cur.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &base, f, p);
            }
            base = mul_mod(&base, &base, f, p);
            e >>= 1;
        }
        cur = acc;
        out.push(cur.clone());
    }
    out
}

/// Irreducibility of a monic `f` of degree `m >= 1`: no factor of degree
/// `d <= m/2`, i.e. `gcd(f, x^(p^d) - x) = 1` for all such `d` (the `d = 1`
/// case is the root test).
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let f = trim(f.to_vec());
    let m = f.len().saturating_sub(1);
    if m == 0 {
        return false;
    }
    if m == 1 {
        return true;
    }
    // Fast reject on roots before the gcd ladder.
    let has_root = (0..p).any(|x| {
        let mut acc = 0u64;
        for &c in f.iter().rev() {
            acc = (acc * x as u64 + c as u64) % p as u64;
        }
        acc == 0
    });
    if has_root {
        return false;
    }
    frobenius_orbit(&f, p, m / 2).iter().all(|xp| {
        let g = gcd(&f, &sub(xp, &[0, 1], p), p);
        g.len() == 1
    })
}
