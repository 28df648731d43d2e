//! Classical number triangles consumed by the rest of the crate: binomial
//! coefficients, Stirling numbers of the second kind, Eulerian polynomials,
//! and tangent numbers of order k.
//!
//! Stirling numbers come from the alternating-sum closed form
//! `S(n,k) = (1/k!) Σ_r (−1)^{k−r} C(k,r) r^n`, Eulerian polynomials from the
//! Frobenius expansion `A_n(x) = Σ_i i! S(n,i) x^i (1−x)^{n−i}`, and tangent
//! numbers from k-fold products of the tan series. The standard recurrences
//! are deliberately not used as producers here; they serve as independent
//! cross-checks in the verification suite.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::egf::EgfSeries;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::table::TriangularTable;
use crate::derivpoly;

/// `n!` as a `BigInt`.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Exact binomial coefficient with the convention `C(n,k) = 0` when `k < 0`
/// or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k) as u64;
    let mut acc = BigInt::one();
    for j in 1..=k {
        // The running product after j steps is C(n-k+j, j), so the division
        // is exact at every step.
        acc = acc * BigInt::from(n as u64 - k + j) / BigInt::from(j);
    }
    acc
}

/// Stirling number of the second kind via the alternating closed form.
///
/// The trailing `1/k!` division is exact for genuine Stirling numbers; an
/// inexact division is reported as a tripwire error.
pub fn stirling2(n: usize, k: usize) -> Result<BigInt> {
    let mut sum = BigInt::zero();
    for r in 0..=k {
        let term = binomial(k as i64, r as i64) * BigInt::from(r).pow(n);
        if (k - r) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let (q, rem) = sum.div_rem(&factorial(k));
    if !rem.is_zero() {
        return Err(Error::InexactDivision {
            context: format!("stirling2({n},{k}): sum not divisible by {k}!"),
        });
    }
    Ok(q)
}

/// Eulerian polynomial `A_n(x) = Σ_{i=1}^n i! S(n,i) x^i (1−x)^{n−i}`.
///
/// The coefficient of `x^k` counts permutations of `[n]` with `k−1` descents;
/// the constant term is zero and the coefficients sum to `n!`.
///
/// ```
/// use altruns::sequences::eulerian_poly_frobenius;
/// use altruns::poly::IntPolynomial;
/// assert_eq!(eulerian_poly_frobenius(3).unwrap(), IntPolynomial::from(vec![0, 1, 4, 1]));
/// ```
pub fn eulerian_poly_frobenius(n: usize) -> Result<IntPolynomial> {
    if n < 1 {
        return Err(Error::Domain("eulerian_poly_frobenius requires n >= 1".into()));
    }
    let mut acc = IntPolynomial::zero();
    for i in 1..=n {
        let weight = factorial(i) * stirling2(n, i)?;
        // (1-x)^m = (-1)^m (x-1)^m
        let mut factor = IntPolynomial::shifted_power(-1, n - i);
        if (n - i) % 2 == 1 {
            factor = -&factor;
        }
        let term = IntPolynomial::monomial(weight, i);
        acc = &acc + &(&term * &factor);
    }
    Ok(acc)
}

/// The tan series truncated at `order`, in the `t^n/n!` basis.
///
/// Coefficient `n` is the n-th derivative of tan at 0, which is the constant
/// term of the n-th derivative polynomial; the series is exact.
pub fn tan_egf(order: usize) -> EgfSeries {
    let family = derivpoly::derivative_polys(order);
    let coeffs = (0..=order)
        .map(|n| BigRational::from_integer(family.poly(n).coeff(0)))
        .collect();
    EgfSeries::from_coeffs(coeffs)
}

/// Tangent numbers of order k: `T(n,k)` is `n!` times the Taylor coefficient
/// of `t^n` in `tan^k t`, for `1 ≤ k ≤ n ≤ n_max`.
///
/// Powers are built by repeated series products; `T(n,k) = 0` for `n < k` and
/// `T(k,k) = k!`.
pub fn tangent_numbers(n_max: usize) -> TriangularTable {
    assert!(n_max >= 1, "tangent_numbers requires n_max >= 1");
    let tan = tan_egf(n_max);
    let mut rows: Vec<Vec<BigInt>> = (1..=n_max).map(Vec::with_capacity).collect();
    let mut power = tan.clone();
    for k in 1..=n_max {
        for n in k..=n_max {
            let c = power.coeff(n);
            assert!(
                c.denom().is_one(),
                "tangent number T({n},{k}) came out non-integral: {c}"
            );
            rows[n - 1].push(c.numer().clone());
        }
        if k < n_max {
            power = power.mul(&tan).expect("orders agree by construction");
        }
    }
    TriangularTable::new(1, 1, rows)
}
