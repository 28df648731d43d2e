//! The cross-validation suite: every producer checked against every claim.
//!
//! [`verify_all`] builds one baseline runs triangle by the integer
//! recurrence, then runs a fixed list of named checks against it — the other
//! four `R(n,k)` methods, the brute-force oracles, the derivative-polynomial
//! tower, and the classical identities. Results come back as a
//! [`VerificationReport`]; a disagreement is a report entry carrying the
//! first failing cell, never a panic.
//!
//! The suite can deliberately sabotage itself: [`VerifyConfig::fault`]
//! plants an off-by-one in one baseline cell, and a healthy suite must then
//! fail with that exact cell named in `first_failure`. This keeps the
//! comparisons honest — a check that cannot catch a planted error is not
//! checking anything.

use std::cell::Cell;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::derivpoly::{self, DerivPolyFamily};
use crate::error::{Error, Result};
use crate::oracle;
use crate::poly::IntPolynomial;
use crate::report::{Check, VerificationReport};
use crate::runs;
use crate::sequences::{self, factorial};
use crate::table::TriangularTable;

/// Row index at which the Canfield–Wilf leading-term ratio is pinned.
pub const CANFIELD_WILF_N: usize = 40;

/// A deliberate off-by-one planted in the baseline table at cell `(n, k)`,
/// used to prove the suite catches and localizes disagreements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fault {
    pub n: usize,
    pub k: usize,
}

/// Configuration for [`verify_all`].
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Largest row covered by the formula-vs-formula checks.
    pub n_max: usize,
    /// Largest row compared against brute-force enumeration.
    pub oracle_max: usize,
    /// Enumeration cap the oracle comparisons must respect.
    pub oracle_cap: usize,
    /// Run only these checks (all when `None`); names from [`check_names`].
    pub checks: Option<Vec<String>>,
    /// Corrupt one baseline cell before comparing.
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 15,
            oracle_max: 8,
            oracle_cap: oracle::DEFAULT_ENUMERATION_CAP,
            checks: None,
            fault: None,
        }
    }
}

/// Runs the selected checks and collects a report.
///
/// Errors only on unusable configuration (rows below 2, an oracle range
/// above the cap, an unknown check name, a fault outside the triangle);
/// mathematical disagreements are *report entries*, and the caller decides
/// what a failed report is worth.
pub fn verify_all(config: &VerifyConfig) -> Result<VerificationReport> {
    if config.n_max < 2 {
        return Err(Error::Domain("verify_all requires n_max >= 2".into()));
    }
    if config.oracle_max > config.oracle_cap {
        return Err(Error::CapExceeded {
            n: config.oracle_max,
            cap: config.oracle_cap,
        });
    }
    if let Some(filter) = &config.checks {
        for name in filter {
            if !CHECKS.iter().any(|(known, _)| known == name) {
                return Err(Error::Domain(format!(
                    "unknown check {name:?}; known checks: {}",
                    check_names().join(", ")
                )));
            }
        }
    }
    if let Some(fault) = config.fault {
        let ok = fault.n >= 2 && fault.n <= config.n_max && fault.k >= 1 && fault.k < fault.n;
        if !ok {
            return Err(Error::Domain(format!(
                "fault cell ({}, {}) outside the triangle for n_max = {}",
                fault.n, fault.k, config.n_max
            )));
        }
    }

    let ctx = Ctx::build(config);
    let selected = |name: &str| {
        config
            .checks
            .as_ref()
            .is_none_or(|filter| filter.iter().any(|want| want == name))
    };
    let checks = CHECKS
        .iter()
        .filter(|(name, _)| selected(name))
        .map(|(name, run)| run(&ctx, name))
        .collect();
    Ok(VerificationReport::from_checks(checks))
}

/// The stable names accepted by [`VerifyConfig::checks`], in report order.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(name, _)| *name).collect()
}

type CheckFn = fn(&Ctx, &str) -> Check;

const CHECKS: &[(&str, CheckFn)] = &[
    ("recurrence-vs-oracle", check_runs_oracle),
    ("eulerian-vs-oracle", check_eulerian_oracle),
    ("poly-recurrence-vs-recurrence", check_poly_recurrence),
    ("theorem-vs-recurrence", check_theorem),
    ("explicit-vs-recurrence", check_explicit),
    ("stanley-vs-recurrence", check_stanley),
    ("row-sums", check_row_sums),
    ("boundary-laws", check_boundary),
    ("knuth-identity", check_knuth),
    ("derivative-parity", check_parity),
    ("derivative-top-coefficient", check_top_coefficient),
    ("derivative-closed-form", check_closed_form),
    ("cvijovic-expansion", check_cvijovic),
    ("companion-signs", check_companion_signs),
    ("bona-ehrenborg", check_bona_ehrenborg),
    ("canfield-wilf-k2", check_canfield_wilf_k2),
    ("canfield-wilf-ratio", check_canfield_wilf_ratio),
    ("exactness-tripwires", check_tripwires),
];

/// Everything the checks share: the (possibly faulted) baseline, the
/// derivative-polynomial family, the tangent table, and a counter of
/// exactness-tripwire errors observed so far.
struct Ctx {
    n_max: usize,
    /// Top row actually compared against enumeration (0 disables).
    oracle_n: usize,
    oracle_cap: usize,
    baseline: TriangularTable,
    family: DerivPolyFamily,
    tangent: TriangularTable,
    tripwires: Cell<usize>,
}

impl Ctx {
    fn build(config: &VerifyConfig) -> Ctx {
        let honest = runs::r_table_recurrence(config.n_max);
        let mut rows: Vec<Vec<BigInt>> = (2..=config.n_max)
            .map(|n| honest.row(n).expect("row in range").to_vec())
            .collect();
        if let Some(fault) = config.fault {
            rows[fault.n - 2][fault.k - 1] += 1;
        }
        Ctx {
            n_max: config.n_max,
            oracle_n: config.n_max.min(config.oracle_max),
            oracle_cap: config.oracle_cap,
            baseline: TriangularTable::new(2, 1, rows),
            family: derivpoly::derivative_polys(config.n_max),
            tangent: sequences::tangent_numbers(config.n_max + 1),
            tripwires: Cell::new(0),
        }
    }

    /// Converts an `Error` into a failed check, counting tripwires.
    fn fail_from_error(&self, name: &str, range: String, at: String, e: Error) -> Check {
        if e.is_tripwire() {
            self.tripwires.set(self.tripwires.get() + 1);
        }
        Check::fail(name, range, at, e.to_string())
    }

    /// The baseline row as the polynomial `Σ_k R(n,k) x^k`.
    fn baseline_poly(&self, n: usize) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero()];
        coeffs.extend(self.baseline.row(n).expect("row in range").iter().cloned());
        IntPolynomial::from_coeffs(coeffs)
    }

    /// `"N cells"` for the triangle rows `2..=n_top`, singular-safe.
    fn cells(&self, n_top: usize) -> String {
        let count: usize = (2..=n_top).map(|n| n - 1).sum();
        format!("{count} cell{}", if count == 1 { "" } else { "s" })
    }
}

/// First power at which two polynomials disagree, with both coefficients.
fn first_coeff_mismatch(a: &IntPolynomial, b: &IntPolynomial) -> Option<(usize, BigInt, BigInt)> {
    let top = a.coeffs().len().max(b.coeffs().len());
    (0..top).find_map(|k| {
        let (x, y) = (a.coeff(k), b.coeff(k));
        if x == y {
            None
        } else {
            Some((k, x, y))
        }
    })
}

fn check_runs_oracle(ctx: &Ctx, name: &str) -> Check {
    if ctx.oracle_n < 2 {
        return Check::skipped(
            name,
            "-".into(),
            "oracle range ends below the smallest runs row (n = 2)".into(),
        );
    }
    let range = format!("n = 2..={}", ctx.oracle_n);
    let counted = match oracle::runs_triangle_oracle_capped(ctx.oracle_n, ctx.oracle_cap) {
        Ok(table) => table,
        Err(e) => return ctx.fail_from_error(name, range, "-".into(), e),
    };
    for (n, row) in counted.rows() {
        let expected = ctx.baseline.row(n).expect("row in range");
        for (i, (fast, slow)) in expected.iter().zip(row).enumerate() {
            if fast != slow {
                return Check::fail(
                    name,
                    range,
                    format!("({n}, {})", i + 1),
                    format!("recurrence gives {fast}, enumeration counts {slow}"),
                );
            }
        }
    }
    Check::pass(
        name,
        range,
        format!("{} match exhaustive enumeration", ctx.cells(ctx.oracle_n)),
    )
}

fn check_eulerian_oracle(ctx: &Ctx, name: &str) -> Check {
    if ctx.oracle_n < 1 {
        return Check::skipped(name, "-".into(), "oracle range is empty".into());
    }
    let range = format!("n = 1..={}", ctx.oracle_n);
    let counted = match oracle::eulerian_triangle_oracle_capped(ctx.oracle_n, ctx.oracle_cap) {
        Ok(table) => table,
        Err(e) => return ctx.fail_from_error(name, range, "-".into(), e),
    };
    for (n, row) in counted.rows() {
        let poly = match sequences::eulerian_poly_frobenius(n) {
            Ok(poly) => poly,
            Err(e) => return ctx.fail_from_error(name, range.clone(), format!("n = {n}"), e),
        };
        for (i, slow) in row.iter().enumerate() {
            let fast = poly.coeff(i + 1);
            if &fast != slow {
                return Check::fail(
                    name,
                    range,
                    format!("({n}, {})", i + 1),
                    format!("Frobenius formula gives {fast}, descent enumeration counts {slow}"),
                );
            }
        }
    }
    Check::pass(name, range, "Frobenius rows match descent enumeration".into())
}

fn check_poly_recurrence(ctx: &Ctx, name: &str) -> Check {
    let range = format!("n = 2..={}", ctx.n_max);
    for n in 2..=ctx.n_max {
        let produced = runs::r_poly_recurrence(n).poly;
        if let Some((k, want, got)) = first_coeff_mismatch(&ctx.baseline_poly(n), &produced) {
            return Check::fail(
                name,
                range,
                format!("({n}, {k})"),
                format!("integer recurrence gives {want}, polynomial recurrence gives {got}"),
            );
        }
    }
    Check::pass(
        name,
        range,
        format!("{} agree across both recurrences", ctx.cells(ctx.n_max)),
    )
}

fn check_theorem(ctx: &Ctx, name: &str) -> Check {
    let range = format!("n = 2..={}", ctx.n_max);
    for n in 2..=ctx.n_max {
        let produced = match runs::r_poly_theorem_with(&ctx.family, n) {
            Ok(result) => result.poly,
            Err(e) => return ctx.fail_from_error(name, range, format!("n = {n}"), e),
        };
        if let Some((k, want, got)) = first_coeff_mismatch(&ctx.baseline_poly(n), &produced) {
            return Check::fail(
                name,
                range,
                format!("({n}, {k})"),
                format!("recurrence gives {want}, basis expansion gives {got}"),
            );
        }
    }
    Check::pass(
        name,
        range,
        format!(
            "{} agree with the (x+1)/(x−1) basis expansion; all 2^(n-1) divisions exact",
            ctx.cells(ctx.n_max)
        ),
    )
}

fn check_explicit(ctx: &Ctx, name: &str) -> Check {
    let range = format!("n = 2..={}", ctx.n_max);
    for n in 2..=ctx.n_max {
        for s in 1..n {
            let produced = match runs::r_explicit_with(&ctx.family, n, s) {
                Ok(value) => value,
                Err(e) => return ctx.fail_from_error(name, range, format!("({n}, {s})"), e),
            };
            let expected = ctx.baseline.get(n, s).expect("cell in range");
            if expected != &produced {
                return Check::fail(
                    name,
                    range,
                    format!("({n}, {s})"),
                    format!("recurrence gives {expected}, explicit formula gives {produced}"),
                );
            }
        }
    }
    Check::pass(
        name,
        range,
        format!("{} agree with the explicit formula", ctx.cells(ctx.n_max)),
    )
}

fn check_stanley(ctx: &Ctx, name: &str) -> Check {
    let range = format!("n = 2..={}", ctx.n_max);
    for n in 2..=ctx.n_max {
        for k in 1..n {
            let produced = match runs::r_stanley(n, k) {
                Ok(value) => value,
                Err(e) => return ctx.fail_from_error(name, range, format!("({n}, {k})"), e),
            };
            let expected = ctx.baseline.get(n, k).expect("cell in range");
            if expected != &produced {
                return Check::fail(
                    name,
                    range,
                    format!("({n}, {k})"),
                    format!("recurrence gives {expected}, Stanley's formula gives {produced}"),
                );
            }
        }
    }
    Check::pass(
        name,
        range,
        format!(
            "{} agree with Stanley's formula; every value integral",
            ctx.cells(ctx.n_max)
        ),
    )
}

fn check_row_sums(ctx: &Ctx, name: &str) -> Check {
    let range = format!("n = 2..={}", ctx.n_max);
    for (n, row) in ctx.baseline.rows() {
        let sum: BigInt = row.iter().sum();
        let expected = factorial(n);
        if sum != expected {
            return Check::fail(
                name,
                range,
                format!("n = {n}"),
                format!("row sums to {sum}, expected {n}! = {expected}"),
            );
        }
    }
    Check::pass(name, range, "every row sums to n!".into())
}

fn check_boundary(ctx: &Ctx, name: &str) -> Check {
    if ctx.n_max < 3 {
        return Check::skipped(name, "-".into(), "boundary laws start at n = 3".into());
    }
    let range = format!("n = 3..={}", ctx.n_max);
    for n in 3..=ctx.n_max {
        let first = ctx.baseline.get(n, 1).expect("cell in range");
        if first != &BigInt::from(2) {
            return Check::fail(
                name,
                range,
                format!("({n}, 1)"),
                format!("R({n},1) = {first}, expected 2 (the two monotone permutations)"),
            );
        }
        let last = ctx.baseline.get(n, n - 1).expect("cell in range");
        if !last.is_positive() {
            return Check::fail(
                name,
                range,
                format!("({n}, {})", n - 1),
                format!("R({n},{}) = {last} is not positive", n - 1),
            );
        }
    }
    Check::pass(name, range, "R(n,1) = 2 and R(n,n−1) > 0 throughout".into())
}

fn check_knuth(ctx: &Ctx, name: &str) -> Check {
    let range = format!("n = 2..={}", ctx.n_max);
    for n in 2..=ctx.n_max {
        let residual = match runs::knuth_identity_residual(n) {
            Ok(poly) => poly,
            Err(e) => return ctx.fail_from_error(name, range, format!("n = {n}"), e),
        };
        if !residual.is_zero() {
            let degree = residual.degree().expect("nonzero polynomial has a degree");
            return Check::fail(
                name,
                range,
                format!("n = {n}"),
                format!("cleared identity leaves a nonzero residual of degree {degree}"),
            );
        }
    }
    Check::pass(
        name,
        range,
        "runs and Eulerian rows satisfy the cleared substitution identity".into(),
    )
}

fn check_parity(ctx: &Ctx, name: &str) -> Check {
    let range = format!("n = 0..={}", ctx.n_max);
    for (n, row) in ctx.family.p_table().rows() {
        for (j, coefficient) in row.iter().enumerate() {
            if !coefficient.is_zero() && j % 2 != (n + 1) % 2 {
                return Check::fail(
                    name,
                    range,
                    format!("({n}, {j})"),
                    format!("p({n},{j}) = {coefficient} breaks the j ≡ n+1 (mod 2) support"),
                );
            }
        }
    }
    Check::pass(name, range, "P_n is supported on powers of parity n+1".into())
}

fn check_top_coefficient(ctx: &Ctx, name: &str) -> Check {
    let range = format!("n = 0..={}", ctx.n_max);
    for n in 0..=ctx.n_max {
        let leading = ctx.family.p(n, n + 1);
        let expected = factorial(n);
        if leading != expected {
            return Check::fail(
                name,
                range,
                format!("({n}, {})", n + 1),
                format!("leading coefficient is {leading}, expected {n}! = {expected}"),
            );
        }
    }
    Check::pass(name, range, "leading coefficient of P_n is n!".into())
}

fn check_closed_form(ctx: &Ctx, name: &str) -> Check {
    let range = format!("n = 1..={}", ctx.n_max);
    for n in 1..=ctx.n_max {
        for k in 0..=(n + 1) / 2 {
            let closed = match derivpoly::p_coeff_closed_form(n, k) {
                Ok(value) => value,
                Err(e) => return ctx.fail_from_error(name, range, format!("({n}, {k})"), e),
            };
            let recurrence = ctx.family.p(n, n + 1 - 2 * k);
            if closed != recurrence {
                return Check::fail(
                    name,
                    range,
                    format!("({n}, {k})"),
                    format!(
                        "Stirling closed form gives {closed} for p({n},{}), recurrence gives {recurrence} (k counts from the leading coefficient)",
                        n + 1 - 2 * k
                    ),
                );
            }
        }
    }
    Check::pass(
        name,
        range,
        "Stirling-sum closed form reproduces every nonzero p(n,·)".into(),
    )
}

fn check_cvijovic(ctx: &Ctx, name: &str) -> Check {
    let range = format!("n = 1..={}", ctx.n_max);
    for n in 1..=ctx.n_max {
        let produced = match derivpoly::cvijovic_poly_with(&ctx.tangent, n) {
            Ok(poly) => poly,
            Err(e) => return ctx.fail_from_error(name, range, format!("n = {n}"), e),
        };
        if let Some((j, want, got)) = first_coeff_mismatch(ctx.family.poly(n), &produced) {
            return Check::fail(
                name,
                range,
                format!("({n}, {j})"),
                format!("recurrence gives {want}, tangent-number expansion gives {got}"),
            );
        }
    }
    Check::pass(
        name,
        range,
        "tangent-number expansion reproduces P_n; all 1/k divisions exact".into(),
    )
}

fn check_companion_signs(ctx: &Ctx, name: &str) -> Check {
    let range = format!("n = 1..={}", ctx.n_max);
    for n in 1..=ctx.n_max {
        let produced = match derivpoly::a_poly(n) {
            Ok(poly) => poly,
            Err(e) => return ctx.fail_from_error(name, range, format!("n = {n}"), e),
        };
        // Expected: coefficient of y^(n+1-2k) is (−1)^k p(n, n+1−2k).
        let mut coeffs = vec![BigInt::zero(); n + 2];
        for (j, slot) in coeffs.iter_mut().enumerate() {
            if j % 2 == (n + 1) % 2 {
                let k = (n + 1 - j) / 2;
                let p = ctx.family.p(n, j);
                *slot = if k % 2 == 0 { p } else { -p };
            }
        }
        let expected = IntPolynomial::from_coeffs(coeffs);
        if let Some((j, want, got)) = first_coeff_mismatch(&expected, &produced) {
            return Check::fail(
                name,
                range,
                format!("({n}, {j})"),
                format!("signed p-values predict {want} for the y^{j} coefficient, expansion gives {got}"),
            );
        }
    }
    Check::pass(
        name,
        range,
        "a_n coefficients are the alternating-sign p(n,·) values".into(),
    )
}

fn check_bona_ehrenborg(ctx: &Ctx, name: &str) -> Check {
    if ctx.n_max < 3 {
        return Check::skipped(name, "-".into(), "multiplicity bound starts at n = 3".into());
    }
    let range = format!("n = 3..={}", ctx.n_max);
    let mut strict_excess: Vec<usize> = Vec::new();
    for n in 3..=ctx.n_max {
        let multiplicity = match runs::bona_ehrenborg_multiplicity(n) {
            Ok(m) => m,
            Err(e) => return ctx.fail_from_error(name, range, format!("n = {n}"), e),
        };
        let bound = runs::bona_ehrenborg_bound(n);
        if multiplicity < bound {
            return Check::fail(
                name,
                range,
                format!("n = {n}"),
                format!("(x+1)-multiplicity {multiplicity} is below the bound ⌊n/2⌋−1 = {bound}"),
            );
        }
        if multiplicity > bound {
            strict_excess.push(n);
        }
    }
    let detail = if strict_excess.is_empty() {
        "multiplicity ≥ ⌊n/2⌋−1 everywhere; equality observed at every n".to_string()
    } else {
        format!(
            "multiplicity ≥ ⌊n/2⌋−1 everywhere; strictly above the bound at n ∈ {strict_excess:?}"
        )
    };
    Check::pass(name, range, detail)
}

fn check_canfield_wilf_k2(ctx: &Ctx, name: &str) -> Check {
    if ctx.n_max < 3 {
        return Check::skipped(name, "-".into(), "k = 2 needs n ≥ 3".into());
    }
    let range = format!("n = 3..={}", ctx.n_max);
    for n in 3..=ctx.n_max {
        let remainder = match runs::canfield_wilf_check(n, 2) {
            Ok(value) => value,
            Err(e) => return ctx.fail_from_error(name, range, format!("({n}, 2)"), e),
        };
        if !remainder.is_zero() {
            return Check::fail(
                name,
                range,
                format!("({n}, 2)"),
                format!("R({n},2) − (2^{n} − 4) = {remainder}, expected exactly 0"),
            );
        }
    }
    Check::pass(name, range, "R(n,2) = 2^n − 4 exactly".into())
}

fn check_canfield_wilf_ratio(ctx: &Ctx, name: &str) -> Check {
    let range = format!("n = {CANFIELD_WILF_N}, k ∈ {{3, 4}}");
    let tolerance = BigRational::new(BigInt::one(), BigInt::from(1000));
    let mut seen: Vec<String> = Vec::new();
    for k in [3usize, 4] {
        let ratio = match runs::canfield_wilf_ratio(CANFIELD_WILF_N, k) {
            Ok(value) => value,
            Err(e) => {
                return ctx.fail_from_error(name, range, format!("({CANFIELD_WILF_N}, {k})"), e)
            }
        };
        let deviation = (&ratio - BigRational::one()).abs();
        if deviation > tolerance {
            return Check::fail(
                name,
                range,
                format!("({CANFIELD_WILF_N}, {k})"),
                format!(
                    "R(n,{k})·2^{}/{}^n = {:.6} deviates from 1 by more than 10^-3",
                    k - 2,
                    k,
                    ratio.to_f64().unwrap_or(f64::NAN)
                ),
            );
        }
        seen.push(format!("k={k}: {:.6}", ratio.to_f64().unwrap_or(f64::NAN)));
    }
    Check::pass(
        name,
        range,
        format!(
            "leading-term ratios within [1−10⁻³, 1+10⁻³] ({})",
            seen.join(", ")
        ),
    )
}

fn check_tripwires(ctx: &Ctx, name: &str) -> Check {
    let count = ctx.tripwires.get();
    let range = "all preceding checks in this run".to_string();
    if count == 0 {
        Check::pass(
            name,
            range,
            "no NonDivisible/InexactDivision/NonInteger errors escaped any formula".into(),
        )
    } else {
        Check::fail(
            name,
            range,
            "(see failing checks above)".into(),
            format!("{count} exactness tripwire(s) fired"),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn small_config() -> VerifyConfig {
        VerifyConfig {
            n_max: 8,
            oracle_max: 5,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn clean_run_passes_every_check() {
        let report = verify_all(&small_config()).unwrap();
        assert!(report.overall);
        assert_eq!(report.checks.len(), CHECKS.len());
        assert!(report.checks.iter().all(|c| c.status == Status::Pass));
    }

    #[test]
    fn planted_fault_is_caught_and_localized() {
        let config = VerifyConfig {
            fault: Some(Fault { n: 6, k: 3 }),
            ..small_config()
        };
        let report = verify_all(&config).unwrap();
        assert!(!report.overall);

        let poly_check = report
            .checks
            .iter()
            .find(|c| c.name == "poly-recurrence-vs-recurrence")
            .unwrap();
        assert_eq!(poly_check.status, Status::Fail);
        assert_eq!(poly_check.first_failure.as_deref(), Some("(6, 3)"));

        // The fault corrupts only the baseline table, so identities that
        // never consult it still hold.
        for name in ["knuth-identity", "cvijovic-expansion", "exactness-tripwires"] {
            let check = report.checks.iter().find(|c| c.name == name).unwrap();
            assert_eq!(check.status, Status::Pass, "{name}");
        }
        // Row sums catch the same corruption on their own.
        let sums = report.checks.iter().find(|c| c.name == "row-sums").unwrap();
        assert_eq!(sums.first_failure.as_deref(), Some("n = 6"));
    }

    #[test]
    fn fault_on_a_boundary_cell_trips_the_boundary_law() {
        let config = VerifyConfig {
            fault: Some(Fault { n: 5, k: 1 }),
            ..small_config()
        };
        let report = verify_all(&config).unwrap();
        let boundary = report
            .checks
            .iter()
            .find(|c| c.name == "boundary-laws")
            .unwrap();
        assert_eq!(boundary.status, Status::Fail);
        assert_eq!(boundary.first_failure.as_deref(), Some("(5, 1)"));
    }

    #[test]
    fn filter_selects_named_checks_in_declaration_order() {
        let config = VerifyConfig {
            checks: Some(vec!["row-sums".into(), "recurrence-vs-oracle".into()]),
            ..small_config()
        };
        let report = verify_all(&config).unwrap();
        let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["recurrence-vs-oracle", "row-sums"]);
        assert!(report.overall);
    }

    #[test]
    fn config_errors() {
        let unknown = VerifyConfig {
            checks: Some(vec!["no-such-check".into()]),
            ..small_config()
        };
        assert!(matches!(verify_all(&unknown), Err(Error::Domain(_))));

        let over_cap = VerifyConfig {
            oracle_max: 25,
            ..small_config()
        };
        assert!(matches!(verify_all(&over_cap), Err(Error::CapExceeded { .. })));

        let bad_fault = VerifyConfig {
            fault: Some(Fault { n: 9, k: 1 }),
            ..small_config()
        };
        assert!(matches!(verify_all(&bad_fault), Err(Error::Domain(_))));
    }

    #[test]
    fn tiny_configuration_passes() {
        let config = VerifyConfig {
            n_max: 3,
            oracle_max: 2,
            ..VerifyConfig::default()
        };
        let report = verify_all(&config).unwrap();
        assert!(report.overall, "n_max = 3 runs a one-cell oracle comparison");
    }

    #[test]
    fn check_names_are_unique() {
        let names = check_names();
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(names.len(), sorted.len());
    }
}
