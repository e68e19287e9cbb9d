//! Truncated power series in t with [`MultiPoly`] coefficients.
//!
//! A series of order N keeps exactly the coefficients of t^0..t^N and all
//! arithmetic silently discards higher degrees. Division requires the
//! divisor to have constant term 1, which keeps everything in integer
//! arithmetic; every divisor in this crate satisfies that.

use std::fmt;

use crate::error::Error;
use crate::poly::MultiPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<MultiPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![MultiPoly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = MultiPoly::one();
        s
    }

    /// Build from the coefficients of t^0..t^N.
    pub fn from_coeffs(coeffs: Vec<MultiPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least the t^0 coefficient");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, degree: usize) -> &MultiPoly {
        &self.coeffs[degree]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, degree: usize, value: MultiPoly) {
        self.coeffs[degree] = value;
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order());
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order());
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order());
        let n = self.order();
        let mut coeffs = vec![MultiPoly::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j].add_assign(&(&self.coeffs[i] * &rhs.coeffs[j]));
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| c * p).collect() }
    }

    /// Multiply by t^k, dropping what overflows the order.
    pub fn shift_up(&self, k: usize) -> TruncatedSeries {
        let n = self.order();
        let mut coeffs = vec![MultiPoly::zero(); n + 1];
        if k <= n {
            coeffs[k..].clone_from_slice(&self.coeffs[..=n - k]);
        }
        TruncatedSeries { coeffs }
    }

    /// 1 / self; the constant term must be the constant polynomial 1.
    pub fn reciprocal(&self) -> Result<TruncatedSeries, Error> {
        TruncatedSeries::one(self.order()).divide(self)
    }

    /// self / divisor by long division; the divisor's constant term must be
    /// the constant polynomial 1, which keeps all coefficients integral.
    pub fn divide(&self, divisor: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
        assert_eq!(self.order(), divisor.order());
        if !divisor.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let n = self.order();
        let mut out: Vec<MultiPoly> = Vec::with_capacity(n + 1);
        for d in 0..=n {
            let mut c = self.coeffs[d].clone();
            for j in 1..=d {
                if divisor.coeffs[j].is_zero() {
                    continue;
                }
                c = &c - &(&divisor.coeffs[j] * &out[d - j]);
            }
            out.push(c);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn pow(&self, e: u32) -> TruncatedSeries {
        let mut out = TruncatedSeries::one(self.order());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Apply a coefficient-wise map (e.g. a variable substitution).
    pub fn map_coeffs(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "order": self.order(),
            "coefficients": self.coeffs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// One line per t-degree: `t^<n>: <poly>`.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, c) in self.coeffs.iter().enumerate() {
            if d > 0 {
                f.write_str("\n")?;
            }
            write!(f, "t^{d}: {c}")?;
        }
        Ok(())
    }
}
