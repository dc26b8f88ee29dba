//! Places where the published closed forms are not what the builders in
//! [`crate::cwe`] implement, each with the configuration that demonstrates
//! the implemented version against exhaustive enumeration.

#[derive(Clone, Copy, Debug)]
pub struct Erratum {
    /// Which enumerator the correction belongs to.
    pub family: &'static str,
    pub printed: &'static str,
    pub implemented: &'static str,
    pub reason: &'static str,
    /// `(p, m, k, eval, extended)` of a code on which the implemented
    /// formula is checked when the ledger is printed.
    pub probe: (u64, u32, usize, &'static str, bool),
}

pub const ERRATA: &[Erratum] = &[
    Erratum {
        family: "ERS, k = 2, any evaluation set",
        printed: "constant messages contribute sum_rho w_rho^n",
        implemented: "sum_rho w_0 w_rho^n",
        reason: "a constant message has f_1 = 0 in the appended coordinate; \
                 without w_0 the monomial has degree n instead of the code length n + 1",
        probe: (3, 1, 2, "standard", true),
    },
    Erratum {
        family: "ERS, k = 3, full field, odd p",
        printed: "leading term q * sum_rho w_0 w_rho^q",
        implemented: "sum_rho w_0 w_rho^q (coefficient 1)",
        reason: "exactly q messages are constant, one per rho; with the factor q the \
                 coefficients add up to q^3 + q^2 - q instead of q^3, and the \
                 characteristic-2 counterpart already carries coefficient 1",
        probe: (3, 1, 3, "full", true),
    },
    Erratum {
        family: "RS, k = 3, full field, odd p (derivation step)",
        printed: "exponent 1 + eta(gamma_2) eta(rho - gamma)",
        implemented: "exponent 1 + eta(gamma_2) eta(rho - gamma_1)",
        reason: "gamma is not bound at that point; gamma_1 is the vertex value and the final statement uses it",
        probe: (5, 1, 3, "full", false),
    },
    Erratum {
        family: "RS, k = 3, field minus one point, p = 2",
        printed: "first term sum_rho w_rho^q",
        implemented: "sum_rho w_rho^(q-1)",
        reason: "codewords have length q - 1; the first line of the derivation already has q - 1",
        probe: (2, 2, 3, "punctured:0", false),
    },
    Erratum {
        family: "RS, k = 3, field minus one point, p = 2",
        printed: "second term 2(q - 1) prod_{rho in F} w_rho",
        implemented: "2(q - 1) sum_gamma prod_{rho != gamma} w_rho",
        reason: "messages with exactly one of a_2, a_1 nonzero hit every value once on F, \
                 so on F minus beta they miss exactly one value gamma, 2(q - 1) messages per gamma; \
                 the printed product has degree q and total coefficient 2(q - 1) instead of 2q(q - 1)",
        probe: (2, 3, 3, "punctured:5", false),
    },
];
