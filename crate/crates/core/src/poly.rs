//! Exact integer multivariate polynomials in the five statistic variables
//! x, y, z, v, q (tracking arec, erec, rar, exc, inv).
//!
//! Coefficients are arbitrary-precision integers; no floating point is used
//! anywhere. Terms are kept in graded lexicographic order (total degree
//! first, then x-major within a degree), which fixes every text and JSON
//! rendering bit-exactly.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The five polynomial variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
    Z,
    V,
    Q,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::X, Var::Y, Var::Z, Var::V, Var::Q];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["x", "y", "z", "v", "q"][self.index()]
    }
}

/// Exponent vector over (x, y, z, v, q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u16; 5]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 5]);

    pub fn var(v: Var) -> Self {
        let mut e = [0; 5];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn checked_mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0u16; 5];
        for ((out, &a), &b) in e.iter_mut().zip(&self.0).zip(&other.0) {
            *out = a.checked_add(b).expect("exponent overflow");
        }
        Monomial(e)
    }

    /// Factor string without coefficient; "1" for the constant monomial.
    pub fn factors(&self) -> String {
        if self.degree() == 0 {
            return "1".to_string();
        }
        let mut out = String::new();
        for v in Var::ALL {
            let e = self.0[v.index()];
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('·');
            }
            out.push_str(v.name());
            if e >= 2 {
                out.push_str(&format!("^{e}"));
            }
        }
        out
    }
}

/// Graded lexicographic: lower total degree first, x-major within a degree.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with integer coefficients; zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut p = MultiPoly::default();
        if c != 0 {
            p.terms.insert(Monomial::ONE, BigInt::from(c));
        }
        p
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::from_monomial(Monomial::var(v), 1)
    }

    pub fn from_monomial(m: Monomial, c: i64) -> Self {
        MultiPoly::from_monomial_big(m, BigInt::from(c))
    }

    pub fn from_monomial_big(m: Monomial, c: BigInt) -> Self {
        let mut p = MultiPoly::default();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        let mut out = MultiPoly::default();
        if !c.is_zero() {
            for (m, coeff) in &self.terms {
                out.terms.insert(*m, coeff * c);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&Monomial::ONE).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Add `c` times the monomial in place.
    pub fn add_monomial(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_assign(&mut self, other: &MultiPoly) {
        for (m, c) in &other.terms {
            let entry = self.terms.entry(*m).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                self.terms.remove(m);
            }
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Substitute 1 for each of the given variables.
    pub fn substitute_one(&self, vars: &[Var]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut e = m.0;
            for v in vars {
                e[v.index()] = 0;
            }
            let entry = out.terms.entry(Monomial(e)).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(&Monomial(e));
            }
        }
        out
    }

    /// The value at x = y = z = v = q = 1.
    pub fn sum_of_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Ordered (factors, coefficient) pairs mirroring the term map.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    serde_json::Value::Array(vec![
                        serde_json::Value::String(m.factors()),
                        serde_json::Value::String(c.to_string()),
                    ])
                })
                .collect(),
        )
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            let entry = out.terms.entry(*m).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                out.terms.remove(m);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            out.terms.insert(*m, -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.checked_mul(mb);
                let entry = out.terms.entry(m).or_insert_with(BigInt::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    out.terms.remove(&m);
                }
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", m.factors())?;
            } else {
                write!(f, "{mag}·{}", m.factors())?;
            }
        }
        Ok(())
    }
}
