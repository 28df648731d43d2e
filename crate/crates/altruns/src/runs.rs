//! The number `R(n,k)` of permutations of `[n]` with `k` alternating runs,
//! by five independent methods, plus the classical identity and divisibility
//! checks tied to these numbers.
//!
//! The five producers, every pair of which the verification suite compares
//! cellwise:
//!
//! 1. [`r_table_recurrence`] — André's recurrence
//!    `R(n,k) = k·R(n−1,k) + 2·R(n−1,k−1) + (n−k)·R(n−1,k−2)`.
//! 2. [`r_poly_recurrence`] — the induced polynomial recurrence
//!    `R_{n+2}(x) = x(nx+2)R_{n+1}(x) + x(1−x²)R_{n+1}′(x)`.
//! 3. [`r_poly_theorem`] — the expansion of `R_n(x)` over the basis
//!    `(x+1)^{n−k−1}(x−1)^k` with derivative-polynomial coefficients.
//! 4. [`r_explicit`] — the fully explicit coefficient formula obtained from
//!    that expansion through the `E(n,k,s)` coefficients.
//! 5. [`r_stanley`] — Stanley's double-sum formula.
//!
//! A sixth, [`crate::oracle::runs_triangle_oracle`], counts directly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::derivpoly::{self, DerivPolyFamily};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::sequences::{binomial, eulerian_poly_frobenius};
use crate::table::TriangularTable;

/// The runs triangle: row `n ≥ 2` holds `R(n,1)..R(n,n−1)`.
///
/// The seed cell `R(1,0) = 1` exists only inside the recurrence; public rows
/// start at `n = 2` so the `k = 0` convention never leaks out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunsTriangle {
    table: TriangularTable,
}

impl RunsTriangle {
    pub fn table(&self) -> &TriangularTable {
        &self.table
    }

    /// Largest row index, or `None` if the triangle is empty (`n_max = 1`).
    pub fn n_max(&self) -> Option<usize> {
        self.table.n_max()
    }

    /// Row `n`: the values `R(n,1)..R(n,n−1)`, for `n ≥ 2`.
    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        self.table.row(n)
    }

    /// `R(n,k)`.
    pub fn get(&self, n: usize, k: usize) -> Option<&BigInt> {
        self.table.get(n, k)
    }
}

/// The generating polynomial `R_n(x) = Σ_k R(n,k) x^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunsPoly {
    pub n: usize,
    pub poly: IntPolynomial,
}

impl RunsPoly {
    /// The coefficient row `R(n,1)..R(n,n−1)`; meaningful for `n ≥ 2`.
    pub fn coefficient_row(&self) -> Vec<BigInt> {
        (1..self.n).map(|k| self.poly.coeff(k)).collect()
    }
}

/// Builds rows `2..=n_max` of the runs triangle by André's recurrence from
/// the seed `R(1,0) = 1`.
///
/// ```
/// use altruns::runs::r_table_recurrence;
/// use num_bigint::BigInt;
/// let triangle = r_table_recurrence(5);
/// assert_eq!(triangle.row(5).unwrap(), [2, 28, 58, 32].map(BigInt::from));
/// ```
pub fn r_table_recurrence(n_max: usize) -> RunsTriangle {
    assert!(n_max >= 1);
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    // Working row for n-1, indexed from k = 0; row 1 is the seed [1].
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    for n in 2..=n_max {
        let at = |k: i64| -> BigInt {
            if k < 0 || k as usize >= prev.len() {
                BigInt::zero()
            } else {
                prev[k as usize].clone()
            }
        };
        let mut row_from_zero = vec![BigInt::zero()]; // R(n,0) = 0 for n >= 2
        for k in 1..=(n - 1) as i64 {
            let value = BigInt::from(k) * at(k)
                + BigInt::from(2) * at(k - 1)
                + BigInt::from(n as i64 - k) * at(k - 2);
            row_from_zero.push(value);
        }
        rows.push(row_from_zero[1..].to_vec());
        prev = row_from_zero;
    }
    RunsTriangle {
        table: TriangularTable::new(2, 1, rows),
    }
}

/// `R_n(x)` by the polynomial recurrence, from the initial values
/// `R_1(x) = 1`, `R_2(x) = 2x`, `R_3(x) = 2x + 4x²`.
pub fn r_poly_recurrence(n: usize) -> RunsPoly {
    assert!(n >= 1);
    let initial = [
        IntPolynomial::one(),
        IntPolynomial::from(vec![0, 2]),
        IntPolynomial::from(vec![0, 2, 4]),
    ];
    if n <= 3 {
        return RunsPoly {
            n,
            poly: initial[n - 1].clone(),
        };
    }
    let mut current = initial[2].clone();
    for m in 3..n {
        // current = R_{m+1} from R_m with the recurrence written at n = m-1.
        let scale = IntPolynomial::from(vec![0, 2, (m - 1) as i64]); // x((m-1)x + 2)
        let kernel = IntPolynomial::from(vec![0, 1, 0, -1]); // x(1 - x^2)
        current = &(&scale * &current) + &(&kernel * &current.derivative());
    }
    RunsPoly { n, poly: current }
}

/// `R_n(x)` from the derivative-polynomial expansion
/// `R_n(x) = 2^{1−n} Σ_{k=0}^{⌊(n+1)/2⌋} p(n,n−2k+1)(x+1)^{n−k−1}(x−1)^k`.
///
/// The `2^{n−1}` division is exact whenever the coefficients are consistent;
/// a [`Error::NonDivisible`] escape means the identity was violated.
pub fn r_poly_theorem(n: usize) -> Result<RunsPoly> {
    if n < 2 {
        return Err(Error::Domain("r_poly_theorem requires n >= 2".into()));
    }
    r_poly_theorem_with(&derivpoly::derivative_polys(n), n)
}

/// As [`r_poly_theorem`], reusing a derivative-polynomial family built to at
/// least `n`.
pub fn r_poly_theorem_with(family: &DerivPolyFamily, n: usize) -> Result<RunsPoly> {
    assert!(n >= 2 && family.n_max() >= n);
    let mut sum = IntPolynomial::zero();
    for k in 0..=(n + 1) / 2 {
        let coefficient = family.p(n, n + 1 - 2 * k);
        let plus = IntPolynomial::shifted_power(1, n - k - 1);
        let minus = IntPolynomial::shifted_power(-1, k);
        sum = &sum + &(&plus * &minus).scale(&coefficient);
    }
    let poly = sum.exact_div_pow2(n - 1)?;
    Ok(RunsPoly { n, poly })
}

/// `E(n,k,s)`: the coefficient of `x^s` in `(x+1)^{n−k−1}(x−1)^k`, by the
/// signed binomial sum `Σ_{j=0}^{min(k,s)} (−1)^{k−j} C(n−k−1,s−j) C(k,j)`.
pub fn e_coeff(n: usize, k: usize, s: usize) -> BigInt {
    let mut sum = BigInt::zero();
    for j in 0..=k.min(s) {
        let term = binomial(n as i64 - k as i64 - 1, s as i64 - j as i64)
            * binomial(k as i64, j as i64);
        if (k - j) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// `R(n,s)` by the explicit formula
/// `R(n,s) = 2^{1−n} Σ_{k=0}^{⌊(n+1)/2⌋} p(n,n−2k+1) E(n,k,s)`.
pub fn r_explicit(n: usize, s: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::Domain("r_explicit requires n >= 2".into()));
    }
    r_explicit_with(&derivpoly::derivative_polys(n), n, s)
}

/// As [`r_explicit`], reusing a derivative-polynomial family.
pub fn r_explicit_with(family: &DerivPolyFamily, n: usize, s: usize) -> Result<BigInt> {
    if n < 2 || s < 1 || s > n - 1 {
        return Err(Error::Domain(format!(
            "r_explicit requires n >= 2 and 1 <= s <= n-1, got ({n},{s})"
        )));
    }
    let mut sum = BigInt::zero();
    for k in 0..=(n + 1) / 2 {
        sum += family.p(n, n + 1 - 2 * k) * e_coeff(n, k, s);
    }
    let divisor = BigInt::one() << (n - 1);
    let (q, r) = num_integer::Integer::div_rem(&sum, &divisor);
    if !r.is_zero() {
        return Err(Error::NonDivisible {
            index: s,
            exponent: n - 1,
        });
    }
    Ok(q)
}

/// `R(n,k)` by Stanley's formula
/// `Σ_{i=0}^k 2^{1−i} (−1)^{k−i} z_{k−i} Σ (−2)^m C(i−m,(i+r)/2) C(n,m) rⁿ`,
/// where `z_0 = 2`, all other `z_i = 4`, and the inner sum ranges over
/// integers `r, m ≥ 0` with `r + 2m ≤ i` and `r ≡ i (mod 2)`.
///
/// Everything is computed in exact rationals; integrality is asserted once at
/// the end and a failure surfaces as [`Error::NonInteger`].
pub fn r_stanley(n: usize, k: usize) -> Result<BigInt> {
    if n < 2 || k < 1 || k > n - 1 {
        return Err(Error::Domain(format!(
            "r_stanley requires n >= 2 and 1 <= k <= n-1, got ({n},{k})"
        )));
    }
    let mut total = BigRational::zero();
    for i in 0..=k {
        let z = if k == i { BigInt::from(2) } else { BigInt::from(4) };
        // 1/2^(i-1): at i = 0 this is a factor of 2.
        let scale = if i >= 1 {
            BigRational::new(BigInt::one(), BigInt::one() << (i - 1))
        } else {
            BigRational::from_integer(BigInt::from(2))
        };
        let sign_positive = (k - i) % 2 == 0;

        let mut inner = BigInt::zero();
        // r >= 0 of the same parity as i; the r = 0 terms vanish since n >= 2.
        let mut r = if i % 2 == 0 { 2 } else { 1 };
        while r <= i {
            for m in 0..=(i - r) / 2 {
                let term = binomial((i - m) as i64, ((i + r) / 2) as i64)
                    * binomial(n as i64, m as i64)
                    * BigInt::from(r).pow(n as u32);
                let negate = m % 2 == 1; // sign of (-2)^m
                let term = term << m; // magnitude of (-2)^m
                if negate {
                    inner -= term;
                } else {
                    inner += term;
                }
            }
            r += 2;
        }

        let contribution = scale * BigRational::from_integer(z * inner);
        if sign_positive {
            total += contribution;
        } else {
            total -= contribution;
        }
    }
    if !total.denom().is_one() {
        return Err(Error::NonInteger {
            context: format!("r_stanley({n},{k})"),
            value: total.to_string(),
        });
    }
    Ok(total.numer().clone())
}

/// Residual of the David–Barton/Knuth identity in a formal indeterminate `w`.
///
/// The identity relates `R_n(x)` to the Eulerian polynomial through the
/// substitution `w² = (1−x)/(1+x)`. Clearing denominators with
/// `x = (1−w²)/(1+w²)` and multiplying both sides by `(1+w²)^{n−1}` turns it
/// into the polynomial identity
///
/// `Σ_{s=1}^{n−1} R(n,s)(1−w²)^s(1+w²)^{n−1−s}
///    = Σ_{k=1}^{n} A(n,k)(1−w)^k(1+w)^{n+1−k}`,
///
/// and this function returns left minus right. The zero polynomial certifies
/// the identity at that `n`; a nonzero residual is a verification failure,
/// not an error.
pub fn knuth_identity_residual(n: usize) -> Result<IntPolynomial> {
    if n < 2 {
        return Err(Error::Domain("knuth_identity_residual requires n >= 2".into()));
    }
    let r_poly = r_poly_recurrence(n).poly;
    let a_poly = eulerian_poly_frobenius(n)?;

    let one_minus_w2 = IntPolynomial::from(vec![1, 0, -1]);
    let one_plus_w2 = IntPolynomial::from(vec![1, 0, 1]);
    let one_minus_w = IntPolynomial::from(vec![1, -1]);
    let one_plus_w = IntPolynomial::from(vec![1, 1]);

    let mut lhs = IntPolynomial::zero();
    for s in 1..=n - 1 {
        let term = &one_minus_w2.pow(s) * &one_plus_w2.pow(n - 1 - s);
        lhs = &lhs + &term.scale(&r_poly.coeff(s));
    }
    let mut rhs = IntPolynomial::zero();
    for k in 1..=n {
        let term = &one_minus_w.pow(k) * &one_plus_w.pow(n + 1 - k);
        rhs = &rhs + &term.scale(&a_poly.coeff(k));
    }
    Ok(&lhs - &rhs)
}

/// Multiplicity of the zero `x = −1` in `R_n(x)`, for `n ≥ 3`.
///
/// It is always at least `⌊n/2⌋ − 1`; callers that care whether equality
/// holds compare against [`bona_ehrenborg_bound`].
pub fn bona_ehrenborg_multiplicity(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::Domain("bona_ehrenborg_multiplicity requires n >= 3".into()));
    }
    r_poly_recurrence(n).poly.root_multiplicity_at_minus_one()
}

/// The guaranteed lower bound `⌊n/2⌋ − 1` on that multiplicity.
pub fn bona_ehrenborg_bound(n: usize) -> usize {
    n / 2 - 1
}

/// Remainder of the Canfield–Wilf leading behavior
/// `R(n,k) = k^n/2^{k−2} − (k−1)^n/2^{k−4} + ψ₂(n,k)(k−2)^n + …`.
///
/// For `k ≥ 3` this returns the normalized remainder
/// `(R(n,k) − k^n/2^{k−2} + (k−1)^n/2^{k−4}) / (k−2)^n`, which for fixed `k`
/// grows at most polynomially in `n`. For `k = 2` the expansion terminates
/// after the two explicit terms, giving `R(n,2) = 2^n − 4` exactly, and the
/// returned remainder `R(n,2) − 2^n + 4` must be zero.
pub fn canfield_wilf_check(n: usize, k: usize) -> Result<BigRational> {
    if k < 2 {
        return Err(Error::Domain("canfield_wilf_check requires k >= 2".into()));
    }
    if n < 2 || k > n - 1 {
        return Err(Error::Domain(format!(
            "canfield_wilf_check requires 2 <= k <= n-1, got ({n},{k})"
        )));
    }
    let r = BigRational::from_integer(
        r_table_recurrence(n).get(n, k).cloned().expect("cell in range"),
    );
    let first = pow_ratio(k, n) / pow2_rational(k as i64 - 2);
    let second = pow_ratio(k - 1, n) / pow2_rational(k as i64 - 4);
    let remainder = r - first + second;
    if k == 2 {
        return Ok(remainder);
    }
    Ok(remainder / pow_ratio(k - 2, n))
}

/// The leading-term ratio `R(n,k) · 2^{k−2} / k^n` as an exact rational;
/// it approaches 1 as `n` grows with `k` fixed.
pub fn canfield_wilf_ratio(n: usize, k: usize) -> Result<BigRational> {
    if n < 2 || k < 2 || k > n - 1 {
        return Err(Error::Domain(format!(
            "canfield_wilf_ratio requires 2 <= k <= n-1, got ({n},{k})"
        )));
    }
    let r = BigRational::from_integer(
        r_table_recurrence(n).get(n, k).cloned().expect("cell in range"),
    );
    Ok(r * pow2_rational(k as i64 - 2) / pow_ratio(k, n))
}

fn pow_ratio(base: usize, e: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(base).pow(e as u32))
}

fn pow2_rational(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::one() << e)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e))
    }
}
