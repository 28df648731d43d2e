//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficients are stored in ascending order of exponent (`coeffs[i]` is the
//! coefficient of `x^i`) with trailing zeros trimmed, so structural equality
//! is polynomial equality and the zero polynomial is the empty vector. All
//! arithmetic is exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A dense polynomial with `BigInt` coefficients, ascending exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// The zero polynomial (empty coefficient vector).
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// The monomial `c · x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPolynomial { coeffs }
    }

    /// `(x + sign)^m` by binomial expansion, `sign ∈ {+1, −1}`.
    ///
    /// ```
    /// use altruns::poly::IntPolynomial;
    /// assert_eq!(
    ///     IntPolynomial::shifted_power(-1, 2),
    ///     IntPolynomial::from(vec![1, -2, 1]),
    /// );
    /// ```
    pub fn shifted_power(sign: i8, m: usize) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        // Pascal row m, with alternating signs when sign = -1: the
        // coefficient of x^i is C(m, i) * sign^(m - i).
        let mut coeffs = Vec::with_capacity(m + 1);
        let mut c = BigInt::one();
        for i in 0..=m {
            let s = if sign == -1 && (m - i) % 2 == 1 {
                -&c
            } else {
                c.clone()
            };
            coeffs.push(s);
            if i < m {
                c = c * BigInt::from(m - i) / BigInt::from(i + 1);
            }
        }
        IntPolynomial { coeffs }
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Evaluates at an integer point by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, e: usize) -> Self {
        let mut result = IntPolynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Coefficientwise exact division by `2^e`.
    ///
    /// Errors with [`Error::NonDivisible`] on the first odd remainder; the
    /// callers rely on this as a correctness tripwire.
    pub fn exact_div_pow2(&self, e: usize) -> Result<Self> {
        let divisor = BigInt::one() << e;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (index, c) in self.coeffs.iter().enumerate() {
            let (q, r) = num_integer::Integer::div_rem(c, &divisor);
            if !r.is_zero() {
                return Err(Error::NonDivisible { index, exponent: e });
            }
            coeffs.push(q);
        }
        Ok(IntPolynomial { coeffs })
    }

    /// Largest `m` such that `(x+1)^m` divides `self` exactly, by repeated
    /// synthetic division at the root −1.
    pub fn root_multiplicity_at_minus_one(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut current = self.coeffs.clone();
        let mut multiplicity = 0;
        loop {
            if current.len() == 1 {
                // nonzero constant: no factor of (x+1) left
                return Ok(multiplicity);
            }
            // Synthetic division by (x + 1); the remainder is the value at -1.
            let mut quotient = vec![BigInt::zero(); current.len() - 1];
            let mut carry = BigInt::zero();
            for i in (0..current.len()).rev() {
                let b = &current[i] + &carry;
                if i == 0 {
                    if !b.is_zero() {
                        return Ok(multiplicity);
                    }
                } else {
                    carry = -&b;
                    quotient[i - 1] = b;
                }
            }
            current = quotient;
            multiplicity += 1;
        }
    }

    /// Renders ascending powers with explicit signs, e.g. `2x + 12x^2 + 10x^3`.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if mag.is_one() && k > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var_part = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            out.push_str(&coeff_part);
            out.push_str(&var_part);
        }
        out
    }
}

impl From<Vec<i64>> for IntPolynomial {
    fn from(coeffs: Vec<i64>) -> Self {
        IntPolynomial::from_coeffs(coeffs.into_iter().map(BigInt::from).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("x"))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize_with(self.coeffs.len().max(rhs.coeffs.len()), BigInt::zero);
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    /// Exact convolution product.
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        // Leading coefficients are nonzero products over an integral domain;
        // no trimming needed, but from_coeffs keeps the invariant anyway.
        IntPolynomial::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
