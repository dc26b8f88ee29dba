//! Python bindings: fields, enumerators (brute force and closed form),
//! character sums and solution counts.

use std::sync::Arc;

use pyo3::exceptions::{PyOverflowError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use rs_cwe::codes::{CodeSpec, EvalKind, DEFAULT_CODEWORD_BUDGET};
use rs_cwe::counts::{self, CountQuery, Domain, Quadratic};
use rs_cwe::cwe::{self, CweComparison};
use rs_cwe::{cyclo, errata, CweRecord, Error, FieldContext, FieldElement};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::SizeLimit { .. } => PyOverflowError::new_err(e.to_string()),
        Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// GF(p^m) with elements passed as integer codes.
#[pyclass(name = "Field", frozen)]
struct PyField {
    ctx: Arc<FieldContext>,
}

impl PyField {
    fn el(&self, code: u64) -> PyResult<FieldElement> {
        self.ctx.element(code).map_err(to_py)
    }
}

#[pymethods]
impl PyField {
    #[new]
    fn new(p: u64, m: u32) -> PyResult<Self> {
        Ok(PyField {
            ctx: Arc::new(FieldContext::new(p, m).map_err(to_py)?),
        })
    }

    #[getter]
    fn p(&self) -> u32 {
        self.ctx.p()
    }

    #[getter]
    fn m(&self) -> u32 {
        self.ctx.m()
    }

    #[getter]
    fn q(&self) -> u32 {
        self.ctx.q()
    }

    #[getter]
    fn modulus(&self) -> Vec<u32> {
        self.ctx.modulus().to_vec()
    }

    fn elements(&self) -> Vec<u32> {
        self.ctx.elements().map(FieldElement::code).collect()
    }

    fn add(&self, a: u64, b: u64) -> PyResult<u32> {
        Ok(self.ctx.add(self.el(a)?, self.el(b)?).code())
    }

    fn sub(&self, a: u64, b: u64) -> PyResult<u32> {
        Ok(self.ctx.sub(self.el(a)?, self.el(b)?).code())
    }

    fn mul(&self, a: u64, b: u64) -> PyResult<u32> {
        Ok(self.ctx.mul(self.el(a)?, self.el(b)?).code())
    }

    fn neg(&self, a: u64) -> PyResult<u32> {
        Ok(self.ctx.neg(self.el(a)?).code())
    }

    fn inv(&self, a: u64) -> PyResult<u32> {
        Ok(self.ctx.inv(self.el(a)?).map_err(to_py)?.code())
    }

    fn pow(&self, a: u64, e: u64) -> PyResult<u32> {
        Ok(self.ctx.pow(self.el(a)?, e).code())
    }

    fn trace(&self, a: u64) -> PyResult<u32> {
        Ok(self.ctx.trace(self.el(a)?))
    }

    /// Quadratic character; raises for characteristic 2.
    fn eta(&self, a: u64) -> PyResult<i8> {
        self.ctx.quadratic_character(self.el(a)?).map_err(to_py)
    }

    /// Power-basis coefficients of the quadratic Gauss sum in Z[zeta_p].
    fn gauss_sum(&self) -> PyResult<Vec<i64>> {
        let g = cyclo::gauss_sum(&self.ctx).map_err(to_py)?;
        Ok(g.coeffs().iter().map(|c| i64::try_from(c).expect("|coefficient| <= q")).collect())
    }

    /// The Gauss sum evaluated at zeta_p = exp(2 pi i / p).
    fn gauss_sum_complex(&self) -> PyResult<(f64, f64)> {
        Ok(cyclo::gauss_sum(&self.ctx).map_err(to_py)?.complex_embedding())
    }

    /// `(closed_form, oracle)` counts of x with a2 x^2 + a1 x + a0 = rho,
    /// over the field or the field minus `beta`.
    #[pyo3(signature = (a2, a1, a0, rho, beta=None))]
    fn count(&self, a2: u64, a1: u64, a0: u64, rho: u64, beta: Option<u64>) -> PyResult<(u64, u64)> {
        let domain = match beta {
            Some(b) => Domain::Punctured(self.el(b)?),
            None => Domain::FullField,
        };
        let query = CountQuery {
            poly: Quadratic::new(self.el(a2)?, self.el(a1)?, self.el(a0)?),
            rho: self.el(rho)?,
            domain,
        };
        let closed = counts::count(&self.ctx, &query).map_err(to_py)?;
        Ok((closed, counts::count_oracle(&self.ctx, &query)))
    }

    fn __repr__(&self) -> String {
        format!("Field(p={}, m={}, modulus={:?})", self.ctx.p(), self.ctx.m(), self.ctx.modulus())
    }
}

/// A complete weight enumerator together with its code parameters.
#[pyclass(name = "Cwe", frozen)]
struct PyCwe {
    record: CweRecord,
}

#[pymethods]
impl PyCwe {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyCwe {
            record: CweRecord::from_json(text).map_err(to_py)?,
        })
    }

    fn to_json(&self) -> String {
        self.record.to_json()
    }

    fn to_text(&self) -> String {
        self.record.to_text()
    }

    /// `[(exponents, coefficient), ...]` sorted by exponent vector.
    fn terms(&self) -> Vec<(Vec<u32>, u64)> {
        self.record.cwe.terms().map(|(e, c)| (e.exps().to_vec(), c)).collect()
    }

    fn weight_distribution(&self) -> Vec<u64> {
        cwe::weight_distribution(&self.record.cwe).0
    }

    fn mass(&self) -> u128 {
        self.record.cwe.mass()
    }

    #[getter]
    fn q(&self) -> usize {
        self.record.cwe.q()
    }

    #[getter]
    fn n(&self) -> usize {
        self.record.cwe.n()
    }

    fn __len__(&self) -> usize {
        self.record.cwe.num_terms()
    }

    fn __eq__(&self, other: &PyCwe) -> bool {
        self.record == other.record
    }

    fn __repr__(&self) -> String {
        format!(
            "Cwe(p={}, m={}, k={}, n={}, extended={}, terms={})",
            self.record.p,
            self.record.m,
            self.record.k,
            self.record.cwe.n(),
            self.record.extended,
            self.record.cwe.num_terms()
        )
    }
}

fn spec(p: u64, m: u32, k: usize, eval: &str, extended: bool) -> PyResult<CodeSpec> {
    let ctx = Arc::new(FieldContext::new(p, m).map_err(to_py)?);
    let kind = EvalKind::parse(eval).map_err(to_py)?;
    CodeSpec::from_kind(ctx, k, &kind, extended).map_err(to_py)
}

/// Enumerator by tallying every codeword.
#[pyfunction]
#[pyo3(signature = (p, m, k, eval="full", extended=false, budget=None))]
fn bruteforce(p: u64, m: u32, k: usize, eval: &str, extended: bool, budget: Option<u64>) -> PyResult<PyCwe> {
    let spec = spec(p, m, k, eval, extended)?;
    let cwe = cwe::cwe_bruteforce(&spec, budget.unwrap_or(DEFAULT_CODEWORD_BUDGET)).map_err(to_py)?;
    Ok(PyCwe {
        record: CweRecord::new(&spec, cwe),
    })
}

/// Enumerator from the dimension-2/3 closed forms.
#[pyfunction]
#[pyo3(signature = (p, m, k, eval="full", extended=false))]
fn closed_form(p: u64, m: u32, k: usize, eval: &str, extended: bool) -> PyResult<PyCwe> {
    let spec = spec(p, m, k, eval, extended)?;
    let cwe = cwe::closed_form_for(&spec).map_err(to_py)?;
    Ok(PyCwe {
        record: CweRecord::new(&spec, cwe),
    })
}

/// `(equal, detail)`; detail names the first differing term.
#[pyfunction]
#[pyo3(signature = (p, m, k, eval="full", extended=false, budget=None))]
fn compare(
    p: u64,
    m: u32,
    k: usize,
    eval: &str,
    extended: bool,
    budget: Option<u64>,
) -> PyResult<(bool, Option<String>)> {
    let spec = spec(p, m, k, eval, extended)?;
    let brute = cwe::cwe_bruteforce(&spec, budget.unwrap_or(DEFAULT_CODEWORD_BUDGET)).map_err(to_py)?;
    let formula = cwe::closed_form_for(&spec).map_err(to_py)?;
    Ok(match cwe::cwe_equal(&brute, &formula).map_err(to_py)? {
        CweComparison::Equal => (true, None),
        CweComparison::Differ { exps, left, right } => (
            false,
            Some(format!("e = {:?}: brute force {left}, closed form {right}", exps.exps())),
        ),
    })
}

/// Corrections to the published closed forms, as `(family, printed, implemented, reason)`.
#[pyfunction]
fn corrections() -> Vec<(&'static str, &'static str, &'static str, &'static str)> {
    errata::ERRATA
        .iter()
        .map(|e| (e.family, e.printed, e.implemented, e.reason))
        .collect()
}

#[pymodule]
fn rs_cwe_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyField>()?;
    m.add_class::<PyCwe>()?;
    m.add_function(wrap_pyfunction!(bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    m.add_function(wrap_pyfunction!(corrections, m)?)?;
    Ok(())
}
