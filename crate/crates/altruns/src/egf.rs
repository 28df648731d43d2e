//! Truncated exponential generating functions over exact rationals.
//!
//! Coefficients live in the `t^n/n!` basis: entry `n` of a series is `n!`
//! times the ordinary Taylor coefficient of `t^n`. Products are therefore
//! binomial convolutions. The truncation order is explicit and must agree
//! between operands.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A series truncated at an explicit order, coefficients in the `t^n/n!` basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<BigRational>,
}

impl EgfSeries {
    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        EgfSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    /// The constant series 1 truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Builds a series from coefficients; the order is `len − 1`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least the order-0 coefficient");
        EgfSeries { coeffs }
    }

    /// Truncation order `N`; coefficients `0..=N` are stored.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^n/n!`.
    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    /// All coefficients, ascending.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Binomial-convolution product truncated to the common order:
    /// coefficient `n` of the result is `Σ_j C(n,j)·a_j·b_{n−j}`.
    pub fn mul(&self, rhs: &EgfSeries) -> Result<EgfSeries> {
        if self.order() != rhs.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: rhs.order(),
            });
        }
        let order = self.order();
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (n, out) in coeffs.iter_mut().enumerate() {
            // Walk the binomial row C(n, j) multiplicatively.
            let mut binom = BigInt::one();
            let mut acc = BigRational::zero();
            for j in 0..=n {
                let term = self.coeffs[j].clone() * &rhs.coeffs[n - j];
                acc += term * BigRational::from_integer(binom.clone());
                if j < n {
                    binom = binom * BigInt::from(n - j) / BigInt::from(j + 1);
                }
            }
            *out = acc;
        }
        Ok(EgfSeries { coeffs })
    }
}
