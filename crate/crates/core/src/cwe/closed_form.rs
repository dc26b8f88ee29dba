//! Closed-form complete weight enumerators for dimensions 2 and 3.
//!
//! Each builder walks the parameter sets of its formula (the `γ`'s and the
//! sign `ε`), writes every product as an exponent vector and merges like
//! monomials. Nothing is derived from codewords here; the brute-force tally
//! in the parent module is the independent check.
//!
//! Notation below: `q = p^m`, `η` the quadratic character, `K` the kernel of
//! the absolute trace (only used for `p = 2`).

use std::collections::HashSet;

use super::{CwePolynomial, Monomial};
use crate::codes::{make_eval_set, CodeSpec, EvalKind};
use crate::error::{Error, Result};
use crate::gf::{FieldContext, FieldElement};

fn halve(x: u64) -> Result<u64> {
    if x.is_multiple_of(2) {
        Ok(x / 2)
    } else {
        Err(Error::NonIntegralCoefficient(x))
    }
}

struct Builder<'a> {
    ctx: &'a FieldContext,
    q: usize,
    out: CwePolynomial,
}

impl<'a> Builder<'a> {
    fn new(ctx: &'a FieldContext, length: usize) -> Self {
        let q = ctx.q() as usize;
        Builder {
            ctx,
            q,
            out: CwePolynomial::new(q, length),
        }
    }

    fn one(&self) -> Monomial {
        Monomial::one(self.q)
    }

    fn eta(&self, x: FieldElement) -> i32 {
        self.ctx.quadratic_character(x).expect("odd characteristic") as i32
    }

    /// `Π_{ρ ∉ skip} w_ρ`.
    fn all_except(&self, skip: &[FieldElement]) -> Monomial {
        let mut mono = self.one();
        for rho in self.ctx.elements().filter(|r| !skip.contains(r)) {
            mono.mul_by(rho, 1);
        }
        mono
    }

    /// `Π_{ρ ∉ skip ∪ {γ1}} w_ρ^{1 + ε η(ρ - γ1)}`; every exponent is 0 or 2.
    fn twisted(&self, mut mono: Monomial, gamma1: FieldElement, eps: i32, skip: &[FieldElement]) -> Monomial {
        for rho in self.ctx.elements() {
            if rho == gamma1 || skip.contains(&rho) {
                continue;
            }
            let e = 1 + eps * self.eta(self.ctx.sub(rho, gamma1));
            mono.mul_by(rho, e as u32);
        }
        mono
    }

    /// `Π_{σ ∈ K, σ ∉ skip} w_{γ1 σ + γ0}^2`.
    fn kernel_squares(
        &self,
        mut mono: Monomial,
        kernel: &[FieldElement],
        gamma1: FieldElement,
        gamma0: FieldElement,
        skip_zero: bool,
    ) -> Monomial {
        for &sigma in kernel {
            if skip_zero && sigma.is_zero() {
                continue;
            }
            mono.mul_by(self.ctx.add(self.ctx.mul(gamma1, sigma), gamma0), 2);
        }
        mono
    }

    fn push(&mut self, mono: Monomial, coeff: u64) -> Result<()> {
        self.out.add_monomial(mono, coeff)
    }

    fn finish(self) -> CwePolynomial {
        self.out
    }
}

fn trace_kernel(ctx: &FieldContext) -> Vec<FieldElement> {
    ctx.elements().filter(|&x| ctx.trace(x) == 0).collect()
}

/// Signs `ε` with the elements of `F*` on which `η = ε`.
fn by_character(ctx: &FieldContext) -> [(i32, Vec<FieldElement>); 2] {
    let class = |eps: i8| {
        ctx.nonzero_elements()
            .filter(|&x| ctx.quadratic_character(x) == Ok(eps))
            .collect::<Vec<_>>()
    };
    [(-1, class(-1)), (1, class(1))]
}

/// Dimension 2 over any `n >= 2` distinct evaluation points.
///
/// RS: `Σ_ρ w_ρ^n + Σ_{γ0} Σ_{γ1 ≠ 0} Π_i w_{γ0 + γ1 α_i}`.
/// ERS: constants gain `w_0`, the other terms gain `w_{γ1}`.
pub fn cwe_rs2(ctx: &FieldContext, alpha: &[FieldElement], extended: bool) -> Result<CwePolynomial> {
    let alpha = make_eval_set(ctx, &EvalKind::Custom(alpha.to_vec()))?;
    let n = alpha.len();
    if n < 2 {
        return Err(Error::ParameterOutOfRange(format!("dimension 2 needs n >= 2, got {n}")));
    }
    let mut b = Builder::new(ctx, n + usize::from(extended));
    for rho in ctx.elements() {
        let mut mono = b.one().times(rho, n as u32);
        if extended {
            mono.mul_by(FieldElement::ZERO, 1);
        }
        b.push(mono, 1)?;
    }
    for gamma0 in ctx.elements() {
        for gamma1 in ctx.nonzero_elements() {
            let mut mono = b.one();
            for &a in &alpha {
                mono.mul_by(ctx.add(gamma0, ctx.mul(gamma1, a)), 1);
            }
            if extended {
                mono.mul_by(gamma1, 1);
            }
            b.push(mono, 1)?;
        }
    }
    Ok(b.finish())
}

/// Dimension 3 with the whole field as evaluation set, `q >= 3`.
pub fn cwe_k3_fullfield(ctx: &FieldContext, extended: bool) -> Result<CwePolynomial> {
    let q = ctx.q() as u64;
    if q < 3 {
        return Err(Error::ParameterOutOfRange(format!("full-field dimension 3 needs q >= 3, got {q}")));
    }
    let length = q as usize + usize::from(extended);
    let mut b = Builder::new(ctx, length);
    let zero = FieldElement::ZERO;
    let ext = |mono: Monomial| if extended { mono.times(zero, 1) } else { mono };

    // Constant messages.
    for rho in ctx.elements() {
        b.push(ext(b.one().times(rho, q as u32)), 1)?;
    }

    if ctx.p() == 2 {
        let kernel = trace_kernel(ctx);
        if !extended {
            // a2 = 0 with a1 ≠ 0, and a1 = 0 with a2 ≠ 0: both are permutations.
            b.push(b.all_except(&[]), (q - 1) * 2 * q)?;
            for gamma1 in ctx.nonzero_elements() {
                for gamma0 in ctx.elements() {
                    let mono = b.kernel_squares(b.one(), &kernel, gamma1, gamma0, false);
                    b.push(mono, q - 1)?;
                }
            }
        } else {
            b.push(b.all_except(&[]).times(zero, 1), (q - 1) * q)?;
            for gamma2 in ctx.nonzero_elements() {
                b.push(b.all_except(&[]).times(gamma2, 1), q)?;
            }
            for gamma2 in ctx.nonzero_elements() {
                for gamma1 in ctx.nonzero_elements() {
                    for gamma0 in ctx.elements() {
                        let mono = b.kernel_squares(b.one().times(gamma2, 1), &kernel, gamma1, gamma0, false);
                        b.push(mono, 1)?;
                    }
                }
            }
        }
        return Ok(b.finish());
    }

    b.push(ext(b.all_except(&[])), (q - 1) * q)?;
    if !extended {
        let coeff = halve((q - 1) * q)?;
        for eps in [-1, 1] {
            for gamma1 in ctx.elements() {
                let mono = b.twisted(b.one().times(gamma1, 1), gamma1, eps, &[]);
                b.push(mono, coeff)?;
            }
        }
    } else {
        for gamma2 in ctx.nonzero_elements() {
            let eps = b.eta(gamma2);
            for gamma1 in ctx.elements() {
                let mono = b.twisted(b.one().times(gamma2, 1).times(gamma1, 1), gamma1, eps, &[]);
                b.push(mono, q)?;
            }
        }
    }
    Ok(b.finish())
}

/// Dimension 3 with evaluation set `F \ {β}`, `q >= 4`. The result does not
/// depend on `β`.
pub fn cwe_k3_punctured(ctx: &FieldContext, beta: FieldElement, extended: bool) -> Result<CwePolynomial> {
    ctx.check(beta)?;
    let q = ctx.q() as u64;
    if q < 4 {
        return Err(Error::ParameterOutOfRange(format!("punctured dimension 3 needs q >= 4, got {q}")));
    }
    let length = (q - 1) as usize + usize::from(extended);
    let mut b = Builder::new(ctx, length);
    let zero = FieldElement::ZERO;
    let ext = |mono: Monomial| if extended { mono.times(zero, 1) } else { mono };

    for rho in ctx.elements() {
        b.push(ext(b.one().times(rho, (q - 1) as u32)), 1)?;
    }

    if ctx.p() == 2 {
        let kernel = trace_kernel(ctx);
        if !extended {
            for gamma in ctx.elements() {
                b.push(b.all_except(&[gamma]), 2 * (q - 1))?;
            }
            for gamma1 in ctx.nonzero_elements() {
                for gamma0 in ctx.elements() {
                    let mono = b.kernel_squares(b.one().times(gamma0, 1), &kernel, gamma1, gamma0, true);
                    b.push(mono, q - 1)?;
                }
            }
        } else {
            for gamma1 in ctx.elements() {
                b.push(b.all_except(&[gamma1]).times(zero, 1), q - 1)?;
            }
            for gamma2 in ctx.nonzero_elements() {
                for gamma1 in ctx.elements() {
                    b.push(b.all_except(&[gamma1]).times(gamma2, 1), 1)?;
                }
            }
            for gamma2 in ctx.nonzero_elements() {
                for gamma1 in ctx.nonzero_elements() {
                    for gamma0 in ctx.elements() {
                        let head = b.one().times(gamma2, 1).times(gamma0, 1);
                        let mono = b.kernel_squares(head, &kernel, gamma1, gamma0, true);
                        b.push(mono, 1)?;
                    }
                }
            }
        }
        return Ok(b.finish());
    }

    for gamma in ctx.elements() {
        b.push(ext(b.all_except(&[gamma])), q - 1)?;
    }
    let classes = by_character(ctx);
    if !extended {
        let coeff = halve(q - 1)?;
        for eps in [-1, 1] {
            for gamma1 in ctx.elements() {
                b.push(b.twisted(b.one(), gamma1, eps, &[]), coeff)?;
            }
        }
        for (eps, class) in &classes {
            for gamma1 in ctx.elements() {
                for &gamma0 in class {
                    let other = ctx.add(gamma0, gamma1);
                    let head = b.one().times(gamma1, 1).times(other, 1);
                    b.push(b.twisted(head, gamma1, *eps, &[other]), q - 1)?;
                }
            }
        }
    } else {
        for gamma2 in ctx.nonzero_elements() {
            let eps = b.eta(gamma2);
            for gamma1 in ctx.elements() {
                b.push(b.twisted(b.one().times(gamma2, 1), gamma1, eps, &[]), 1)?;
            }
        }
        for (eps, class) in &classes {
            for &gamma2 in class {
                for gamma1 in ctx.elements() {
                    for &gamma0 in class {
                        let other = ctx.add(gamma0, gamma1);
                        let head = b.one().times(gamma2, 1).times(gamma1, 1).times(other, 1);
                        b.push(b.twisted(head, gamma1, *eps, &[other]), 2)?;
                    }
                }
            }
        }
    }
    Ok(b.finish())
}

/// Picks the closed form that applies to `spec`: dimension 2 for any
/// evaluation set, dimension 3 when the evaluation set is the whole field or
/// the field minus one point (in any order).
pub fn closed_form_for(spec: &CodeSpec) -> Result<CwePolynomial> {
    let ctx = spec.field();
    let q = ctx.q() as usize;
    match spec.k() {
        2 => cwe_rs2(ctx, spec.alpha(), spec.is_extended()),
        3 => {
            let present: HashSet<FieldElement> = spec.alpha().iter().copied().collect();
            if present.len() == q {
                cwe_k3_fullfield(ctx, spec.is_extended())
            } else if present.len() + 1 == q {
                let beta = ctx
                    .elements()
                    .find(|x| !present.contains(x))
                    .expect("exactly one element is missing");
                cwe_k3_punctured(ctx, beta, spec.is_extended())
            } else {
                Err(Error::ParameterOutOfRange(format!(
                    "no closed form for dimension 3 with {} of {q} evaluation points",
                    present.len()
                )))
            }
        }
        k => Err(Error::ParameterOutOfRange(format!(
            "closed forms exist only for dimensions 2 and 3, got {k}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::codes::DEFAULT_CODEWORD_BUDGET;
    use crate::cwe::{cwe_bruteforce, cwe_equal, ExponentVector};

    fn brute(p: u64, m: u32, k: usize, kind: EvalKind, extended: bool) -> CwePolynomial {
        let f = Arc::new(FieldContext::new(p, m).unwrap());
        let spec = CodeSpec::from_kind(f, k, &kind, extended).unwrap();
        cwe_bruteforce(&spec, DEFAULT_CODEWORD_BUDGET).unwrap()
    }

    fn assert_same(a: &CwePolynomial, b: &CwePolynomial) {
        let cmp = cwe_equal(a, b).unwrap();
        assert!(cmp.is_equal(), "{cmp:?}");
    }

    #[test]
    fn rs2_gf2_examples() {
        let f = FieldContext::new(2, 1).unwrap();
        let alpha = [FieldElement::ZERO, FieldElement::ONE];
        let rs = cwe_rs2(&f, &alpha, false).unwrap();
        let terms: Vec<_> = rs.terms().map(|(e, c)| (e.exps().to_vec(), c)).collect();
        assert_eq!(terms, vec![(vec![0, 2], 1), (vec![1, 1], 2), (vec![2, 0], 1)]);
        // ERS: constants give w0^3 and w0 w1^2; f = x and f = 1 + x each
        // give w1 · (w0 w1).
        let ers = cwe_rs2(&f, &alpha, true).unwrap();
        let terms: Vec<_> = ers.terms().map(|(e, c)| (e.exps().to_vec(), c)).collect();
        assert_eq!(terms, vec![(vec![1, 2], 3), (vec![3, 0], 1)]);
        assert_same(&ers, &brute(2, 1, 2, EvalKind::Custom(alpha.to_vec()), true));
        assert!(cwe_rs2(&f, &alpha[..1], false).is_err());
    }

    #[test]
    fn rs2_constant_block_present() {
        let f = FieldContext::new(5, 1).unwrap();
        let alpha: Vec<_> = f.elements().take(3).collect();
        let rs = cwe_rs2(&f, &alpha, false).unwrap();
        for rho in f.elements() {
            let mut e = vec![0; 5];
            e[rho.code() as usize] = 3;
            assert_eq!(rs.coefficient(&ExponentVector::new(e)), 1);
        }
    }

    #[test]
    fn k3_fullfield_small() {
        for (p, m) in [(3, 1), (2, 2), (5, 1), (2, 3)] {
            let f = FieldContext::new(p, m).unwrap();
            for extended in [false, true] {
                let formula = cwe_k3_fullfield(&f, extended).unwrap();
                assert_eq!(formula.mass(), (f.q() as u128).pow(3));
                assert_same(&formula, &brute(p, m, 3, EvalKind::Full, extended));
            }
        }
        assert!(cwe_k3_fullfield(&FieldContext::new(2, 1).unwrap(), false).is_err());
    }

    #[test]
    fn k3_punctured_small() {
        for (p, m, beta) in [(2, 2, 0), (2, 2, 3), (5, 1, 0), (5, 1, 2), (7, 1, 3)] {
            let f = FieldContext::new(p, m).unwrap();
            let beta = f.element(beta).unwrap();
            for extended in [false, true] {
                let formula = cwe_k3_punctured(&f, beta, extended).unwrap();
                assert_same(&formula, &brute(p, m, 3, EvalKind::Punctured(beta), extended));
            }
        }
        let g3 = FieldContext::new(3, 1).unwrap();
        assert!(cwe_k3_punctured(&g3, FieldElement::ZERO, false).is_err());
    }

    #[test]
    fn odd_extended_fullfield_constant_coefficient_is_one() {
        // q = 5 so that no nonconstant message shares these exponents.
        let f = FieldContext::new(5, 1).unwrap();
        let cwe = cwe_k3_fullfield(&f, true).unwrap();
        for rho in f.elements() {
            let mut e = vec![0u32; 5];
            e[rho.code() as usize] += 5;
            e[0] += 1;
            assert_eq!(cwe.coefficient(&ExponentVector::new(e)), 1);
        }
    }

    #[test]
    fn dispatcher() {
        let f = Arc::new(FieldContext::new(5, 1).unwrap());
        let mut rev: Vec<_> = f.elements().collect();
        rev.reverse();
        let spec = CodeSpec::new(f.clone(), 3, rev, false).unwrap();
        assert_same(&closed_form_for(&spec).unwrap(), &cwe_k3_fullfield(&f, false).unwrap());
        let spec = CodeSpec::from_kind(f.clone(), 3, &EvalKind::Primitive, true).unwrap();
        assert_same(
            &closed_form_for(&spec).unwrap(),
            &cwe_k3_punctured(&f, FieldElement::ZERO, true).unwrap(),
        );
        let spec = CodeSpec::from_kind(f.clone(), 3, &EvalKind::Custom(f.elements().take(3).collect()), false)
            .unwrap();
        assert!(closed_form_for(&spec).is_err());
        let spec = CodeSpec::from_kind(f, 4, &EvalKind::Full, false).unwrap();
        assert!(closed_form_for(&spec).is_err());
    }

    #[test]
    fn halving_rejects_odd() {
        assert_eq!(halve(6), Ok(3));
        assert_eq!(halve(7), Err(Error::NonIntegralCoefficient(7)));
    }
}
