//! Derivative polynomials of the tangent.
//!
//! `P_n` is defined by `P_n(tan θ) = dⁿ/dθⁿ tan θ`, so `P_0(x) = x` and
//! `P_{n+1}(x) = (1 + x²) P_n′(x)`. The coefficient triangle `p(n,k)` (the
//! coefficient of `x^k` in `P_n`) vanishes unless `k ≡ n+1 (mod 2)` and obeys
//! the recurrence `p(n,k) = (k+1)p(n−1,k+1) + (k−1)p(n−1,k−1)`.
//!
//! Three further routes to the same numbers live here and are cross-checked
//! against the recurrence by the verification suite: a closed form in terms
//! of Stirling numbers, the companion polynomials `a_n(y)` whose coefficients
//! are signed `p(n,·)` values, and Cvijović's tangent-number representation
//! `P_n(x) = T(n,1) + Σ_{k=1}^{n+1} T(n+1,k) x^k / k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::sequences::{binomial, factorial, stirling2, tangent_numbers};
use crate::table::TriangularTable;

/// The polynomials `P_0..P_N` together with their coefficient triangle.
#[derive(Debug, Clone)]
pub struct DerivPolyFamily {
    polys: Vec<IntPolynomial>,
    p_table: TriangularTable,
}

impl DerivPolyFamily {
    /// Highest index `N` in the family.
    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }

    /// `P_n(x)`.
    pub fn poly(&self, n: usize) -> &IntPolynomial {
        &self.polys[n]
    }

    pub fn polys(&self) -> &[IntPolynomial] {
        &self.polys
    }

    /// The triangle `p(n,k)` for `0 ≤ k ≤ n+1`; row `n` has length `n+2`.
    pub fn p_table(&self) -> &TriangularTable {
        &self.p_table
    }

    /// `p(n,k)`, zero outside `0 ≤ k ≤ n+1`.
    pub fn p(&self, n: usize, k: usize) -> BigInt {
        self.p_table
            .get(n, k)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }
}

/// Builds `P_0..P_{n_max}` by the recurrence `P_{n+1} = (1+x²) P_n′` and
/// extracts the `p(n,k)` triangle from the coefficients.
///
/// ```
/// use altruns::derivpoly::derivative_polys;
/// use altruns::poly::IntPolynomial;
/// let family = derivative_polys(4);
/// assert_eq!(family.poly(4), &IntPolynomial::from(vec![0, 16, 0, 40, 0, 24]));
/// ```
pub fn derivative_polys(n_max: usize) -> DerivPolyFamily {
    let one_plus_x2 = IntPolynomial::from(vec![1, 0, 1]);
    let mut polys = Vec::with_capacity(n_max + 1);
    polys.push(IntPolynomial::from(vec![0, 1])); // P_0 = x
    for n in 0..n_max {
        let next = &one_plus_x2 * &polys[n].derivative();
        polys.push(next);
    }
    let rows = polys
        .iter()
        .enumerate()
        .map(|(n, p)| {
            // deg P_n = n+1, so row n has the full k = 0..=n+1 range.
            (0..=n + 1).map(|k| p.coeff(k)).collect()
        })
        .collect();
    DerivPolyFamily {
        polys,
        p_table: TriangularTable::new(0, 0, rows),
    }
}

/// One step of the coefficient recurrence: row `n` of the `p` triangle from
/// row `n−1`. Entries outside a row are zero.
pub fn p_recurrence_step(prev_row: &[BigInt], n: usize) -> Vec<BigInt> {
    assert!(n >= 1, "row 0 is the seed");
    assert_eq!(prev_row.len(), n + 1, "row {} must have length {}", n - 1, n + 1);
    let at = |k: i64| -> BigInt {
        if k < 0 || k as usize >= prev_row.len() {
            BigInt::zero()
        } else {
            prev_row[k as usize].clone()
        }
    };
    (0..=n as i64 + 1)
        .map(|k| BigInt::from(k + 1) * at(k + 1) + BigInt::from(k - 1) * at(k - 1))
        .collect()
}

/// Closed form for `p(n, n−2k+1)` as a Stirling-number sum:
/// `Σ_{i=1}^n i! S(n,i) 2^{n−i} (−1)^{i−n+k} [C(i,n−2k) − C(i,n−2k+1)]`.
///
/// `k` indexes the nonzero coefficients from the top: `k = 0` gives the
/// leading coefficient `p(n,n+1)`, valid for `0 ≤ k ≤ ⌊(n+1)/2⌋`.
pub fn p_coeff_closed_form(n: usize, k: usize) -> Result<BigInt> {
    if n < 1 || k > (n + 1) / 2 {
        return Err(Error::Domain(format!(
            "p_coeff_closed_form: need n >= 1 and k <= floor((n+1)/2), got ({n},{k})"
        )));
    }
    let lower = n as i64 - 2 * k as i64;
    let mut sum = BigInt::zero();
    for i in 1..=n {
        let magnitude = factorial(i)
            * stirling2(n, i)?
            * (BigInt::one() << (n - i))
            * (binomial(i as i64, lower) - binomial(i as i64, lower + 1));
        // (-1)^(i-n+k) by parity of i+n+k.
        if (i + n + k) % 2 == 0 {
            sum += magnitude;
        } else {
            sum -= magnitude;
        }
    }
    Ok(sum)
}

/// Companion polynomial `a_n(y) = (y+1) Σ_{i=1}^n i! S(n,i) 2^{n−i} (y−1)^i`,
/// expanded exactly.
///
/// Its coefficients are the `p(n,·)` values with alternating signs:
/// the coefficient of `y^{n−2k+1}` equals `(−1)^k p(n, n−2k+1)`.
pub fn a_poly(n: usize) -> Result<IntPolynomial> {
    if n < 1 {
        return Err(Error::Domain("a_poly requires n >= 1".into()));
    }
    let mut sum = IntPolynomial::zero();
    for i in 1..=n {
        let weight = factorial(i) * stirling2(n, i)? * (BigInt::one() << (n - i));
        let term = IntPolynomial::shifted_power(-1, i).scale(&weight);
        sum = &sum + &term;
    }
    Ok(&IntPolynomial::shifted_power(1, 1) * &sum)
}

/// `P_n(x)` rebuilt from tangent numbers:
/// `T(n,1) + Σ_{k=1}^{n+1} T(n+1,k) x^k / k`, each division exact.
pub fn cvijovic_poly(n: usize) -> Result<IntPolynomial> {
    if n < 1 {
        return Err(Error::Domain("cvijovic_poly requires n >= 1".into()));
    }
    cvijovic_poly_with(&tangent_numbers(n + 1), n)
}

/// As [`cvijovic_poly`], reusing a tangent-number table built to at least
/// order `n+1`.
pub fn cvijovic_poly_with(tangent: &TriangularTable, n: usize) -> Result<IntPolynomial> {
    assert!(n >= 1 && tangent.n_max().is_some_and(|m| m > n));
    let mut coeffs = Vec::with_capacity(n + 2);
    coeffs.push(tangent.get(n, 1).cloned().expect("T(n,1) in range"));
    for k in 1..=n + 1 {
        let t = tangent.get(n + 1, k).expect("T(n+1,k) in range");
        let (q, r) = t.div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::InexactDivision {
                context: format!("cvijovic_poly({n}): T({},{k}) not divisible by {k}", n + 1),
            });
        }
        coeffs.push(q);
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// Reference values for `P_1..P_4` used across the test and verification
/// suites: `1+x²`, `2x+2x³`, `2+8x²+6x⁴`, `16x+40x³+24x⁵`.
pub fn listed_derivative_polys() -> Vec<IntPolynomial> {
    vec![
        IntPolynomial::from(vec![1, 0, 1]),
        IntPolynomial::from(vec![0, 2, 0, 2]),
        IntPolynomial::from(vec![2, 0, 8, 0, 6]),
        IntPolynomial::from(vec![0, 16, 0, 40, 0, 24]),
    ]
}

/// Reference values for `a_1..a_4`: `−1+y²`, `−2y+2y³`, `2−8y²+6y⁴`,
/// `16y−40y³+24y⁵`.
pub fn listed_companion_polys() -> Vec<IntPolynomial> {
    vec![
        IntPolynomial::from(vec![-1, 0, 1]),
        IntPolynomial::from(vec![0, -2, 0, 2]),
        IntPolynomial::from(vec![2, 0, -8, 0, 6]),
        IntPolynomial::from(vec![0, 16, 0, -40, 0, 24]),
    ]
}
