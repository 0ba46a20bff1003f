//! Truncated formal power series with exact integer coefficients.

use num_bigint::BigInt;
use num_traits::Zero;

/// `Σ coeffs[k] xᵏ`, known modulo `x^len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Series { coeffs }
    }

    pub fn constant(c: BigInt, len: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); len];
        if len > 0 {
            coeffs[0] = c;
        }
        Series { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Series) -> Series {
        let len = self.len().min(other.len());
        Series::new(
            (0..len)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        )
    }

    pub fn sub(&self, other: &Series) -> Series {
        let len = self.len().min(other.len());
        Series::new(
            (0..len)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        )
    }

    pub fn mul(&self, other: &Series) -> Series {
        let len = self.len().min(other.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        Series::new(out)
    }

    /// Formal derivative; the result is known to one order less.
    pub fn derivative(&self) -> Series {
        Series::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Multiplication by `x^k`; the result is known to `k` more orders.
    pub fn shift(&self, k: usize) -> Series {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series::new(coeffs)
    }
}
