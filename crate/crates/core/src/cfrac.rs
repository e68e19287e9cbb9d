//! Continued-fraction generating functions and their brute-force oracles.
//!
//! The five-variable generating function
//!
//! ```text
//! F(x,y,z,v,q;t) = sum_n t^n sum_{sigma in S_n}
//!                  x^arec y^erec z^rar v^exc q^inv
//! ```
//!
//! has the Stieltjes expansion (at z = 1)
//!
//! ```text
//! F(x,y,1,v,q;t) = 1/(1 - a1 t/(1 - a2 t/(1 - ...)))
//! a_{2k-1} = q^{k-1} (x + q + ... + q^{k-1})
//! a_{2k}   = q^k v (y + q + ... + q^{k-1})
//! ```
//!
//! and the z-dependence enters either through the correction
//! `F = F1 / (1 + x(1-z) t F1)` or, equivalently, through the contracted
//! Jacobi fraction with head gamma_0 = x z. Both routes are implemented
//! and cross-checked against direct enumeration.
//!
//! The same machinery expands the one-variable fraction with
//! `a_{2k-1} = k, a_{2k} = y + k - 1`, whose coefficients enumerate
//! S_n by the count of the catalog pattern Nr3, and the succession
//! polynomials S_n(x) with their ordinary and exponential generating
//! function identities.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::enumerate::{sweep_fold, SweepOptions};
use crate::error::Error;
use crate::mesh::{catalog, MeshPattern, PatternName};
use crate::perm::Permutation;
use crate::poly::{Monomial, MultiPoly, Var};
use crate::series::TruncatedSeries;

/// A total generator `k -> coefficient polynomial`. Stieltjes coefficients
/// are indexed from 1; contracted Jacobi coefficients gamma from 0 and
/// beta from 1.
#[derive(Clone)]
pub struct CoefficientRule {
    f: Arc<dyn Fn(usize) -> MultiPoly + Send + Sync>,
}

impl CoefficientRule {
    pub fn from_fn(f: impl Fn(usize) -> MultiPoly + Send + Sync + 'static) -> Self {
        CoefficientRule { f: Arc::new(f) }
    }

    pub fn at(&self, k: usize) -> MultiPoly {
        (self.f)(k)
    }

    /// Same rule with the value at one index replaced.
    pub fn with_value_at(&self, index: usize, value: MultiPoly) -> Self {
        let inner = self.clone();
        CoefficientRule::from_fn(move |k| {
            if k == index {
                value.clone()
            } else {
                inner.at(k)
            }
        })
    }
}

/// x + q + q^2 + ... + q^{k-1}.
fn x_plus_geometric(first: Var, k: usize) -> MultiPoly {
    let mut p = MultiPoly::var(first);
    for i in 1..k {
        p.add_monomial(Monomial([0, 0, 0, 0, i as u16]), 1);
    }
    p
}

fn q_power(e: usize) -> MultiPoly {
    MultiPoly::from_monomial(Monomial([0, 0, 0, 0, e as u16]), 1)
}

/// The five-variable Stieltjes coefficients:
/// `a_{2k-1} = q^{k-1}(x + q + ... + q^{k-1})`,
/// `a_{2k} = q^k v (y + q + ... + q^{k-1})`.
pub fn dkz_alpha() -> CoefficientRule {
    CoefficientRule::from_fn(|j| {
        assert!(j >= 1, "Stieltjes coefficients are indexed from 1");
        if j % 2 == 1 {
            let k = j.div_ceil(2);
            &q_power(k - 1) * &x_plus_geometric(Var::X, k)
        } else {
            let k = j / 2;
            let head = &q_power(k) * &MultiPoly::var(Var::V);
            &head * &x_plus_geometric(Var::Y, k)
        }
    })
}

/// The one-variable coefficients `a_{2k-1} = k`, `a_{2k} = y + k - 1`;
/// equal to [`dkz_alpha`] at x = v = q = 1.
pub fn conjecture_alpha() -> CoefficientRule {
    CoefficientRule::from_fn(|j| {
        assert!(j >= 1, "Stieltjes coefficients are indexed from 1");
        if j % 2 == 1 {
            MultiPoly::constant(j.div_ceil(2) as i64)
        } else {
            let mut p = MultiPoly::var(Var::Y);
            p.add_monomial(Monomial::ONE, (j / 2) as i64 - 1);
            p
        }
    })
}

/// Evaluate the depth-limited Stieltjes fraction
/// `1/(1 - a1 t/(1 - a2 t/(1 - ... a_depth t)))` to the given order.
pub fn sfraction_series_depth(rule: &CoefficientRule, order: usize, depth: usize) -> TruncatedSeries {
    let mut level = TruncatedSeries::one(order);
    for j in (1..=depth).rev() {
        let tail = level.mul_poly(&rule.at(j)).shift_up(1);
        level = TruncatedSeries::one(order)
            .sub(&tail)
            .reciprocal()
            .expect("fraction level has constant term 1");
    }
    level
}

/// Stieltjes expansion exact through t^order: coefficient j first affects
/// degree j, so depth = order suffices.
pub fn sfraction_series(rule: &CoefficientRule, order: usize) -> TruncatedSeries {
    sfraction_series_depth(rule, order, order)
}

/// Evaluate the Jacobi fraction
/// `1/(1 - g0 t - b1 t^2/(1 - g1 t - b2 t^2/(...)))` to the given order,
/// with depth order/2 + 1.
pub fn jfraction_series(gamma: &CoefficientRule, beta: &CoefficientRule, order: usize) -> TruncatedSeries {
    jfraction_series_depth(gamma, beta, order, order / 2 + 1)
}

pub fn jfraction_series_depth(
    gamma: &CoefficientRule,
    beta: &CoefficientRule,
    order: usize,
    depth: usize,
) -> TruncatedSeries {
    let mut level = TruncatedSeries::one(order);
    for j in (0..=depth).rev() {
        let linear = TruncatedSeries::one(order).mul_poly(&gamma.at(j)).shift_up(1);
        let tail = level.mul_poly(&beta.at(j + 1)).shift_up(2);
        level = TruncatedSeries::one(order)
            .sub(&linear)
            .sub(&tail)
            .reciprocal()
            .expect("fraction level has constant term 1");
    }
    level
}

/// Contract a Stieltjes rule to Jacobi rules: `gamma_0 = a_1`,
/// `gamma_n = a_{2n} + a_{2n+1}`, `beta_n = a_{2n-1} a_{2n}`. The
/// contracted fraction equals the Stieltjes fraction identically; the
/// z-carrying head `gamma_0 = x z` is obtained with
/// [`CoefficientRule::with_value_at`].
pub fn contract_s_to_j(rule: &CoefficientRule) -> (CoefficientRule, CoefficientRule) {
    let r1 = rule.clone();
    let gamma = CoefficientRule::from_fn(move |n| {
        if n == 0 {
            r1.at(1)
        } else {
            &r1.at(2 * n) + &r1.at(2 * n + 1)
        }
    });
    let r2 = rule.clone();
    let beta = CoefficientRule::from_fn(move |n| {
        assert!(n >= 1, "beta coefficients are indexed from 1");
        &r2.at(2 * n - 1) * &r2.at(2 * n)
    });
    (gamma, beta)
}

/// Reinstate the rar-variable z: `F = F1 / (1 + x(1-z) t F1)` where F1 is
/// the series at z = 1.
pub fn apply_z_correction(f1: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
    let x = MultiPoly::var(Var::X);
    let xz = &x * &MultiPoly::var(Var::Z);
    let head = &x - &xz;
    let denom = TruncatedSeries::one(f1.order()).add(&f1.mul_poly(&head).shift_up(1));
    f1.divide(&denom)
}

/// The Jacobi route to the full five-variable series: contracted dkz
/// coefficients with head gamma_0 = x z.
pub fn dkz_jfraction_series(order: usize) -> TruncatedSeries {
    let (gamma, beta) = contract_s_to_j(&dkz_alpha());
    let xz = &MultiPoly::var(Var::X) * &MultiPoly::var(Var::Z);
    jfraction_series(&gamma.with_value_at(0, xz), &beta, order)
}

/// Direct enumeration of `sum_sigma x^arec y^erec z^rar v^exc q^inv`
/// for every n <= order.
pub fn brute_force_f(order: usize, opts: &SweepOptions) -> Result<TruncatedSeries, Error> {
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        coeffs.push(sweep_fold(
            n,
            opts,
            MultiPoly::zero,
            |acc, p| {
                let m = Monomial([
                    p.arec() as u16,
                    p.erec() as u16,
                    p.rar() as u16,
                    p.exc() as u16,
                    p.inv() as u16,
                ]);
                acc.add_monomial(m, 1);
            },
            |mut a, b| {
                a.add_assign(&b);
                a
            },
        )?);
    }
    Ok(TruncatedSeries::from_coeffs(coeffs))
}

/// Direct enumeration of `sum_pi y^{p(pi)}` for every n <= order.
pub fn brute_force_pattern_series(
    pattern: &MeshPattern,
    order: usize,
    opts: &SweepOptions,
) -> Result<TruncatedSeries, Error> {
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        coeffs.push(sweep_fold(
            n,
            opts,
            MultiPoly::zero,
            |acc, p| {
                acc.add_monomial(Monomial([0, pattern.count(p) as u16, 0, 0, 0]), 1);
            },
            |mut a, b| {
                a.add_assign(&b);
                a
            },
        )?);
    }
    Ok(TruncatedSeries::from_coeffs(coeffs))
}

/// `c_n = x (x+q) (x+q+q^2) ... (x+q+...+q^{n-1})`; the specialization
/// F(x,1,1,1,q;t) of the full series.
pub fn rising_product_series(order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut product = MultiPoly::one();
    for n in 0..=order {
        if n > 0 {
            product = &product * &x_plus_geometric(Var::X, n);
        }
        coeffs.push(product.clone());
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// Succession polynomials `S_n(x) = sum_pi x^{Nr14(pi)}` for n = 0..=order,
/// counted through the mesh pattern.
pub fn succession_polys(order: usize, opts: &SweepOptions) -> Result<Vec<MultiPoly>, Error> {
    let nr14 = catalog(PatternName::Nr14);
    (0..=order)
        .map(|n| {
            sweep_fold(
                n,
                opts,
                MultiPoly::zero,
                |acc, p: &Permutation| {
                    acc.add_monomial(Monomial([nr14.count(p) as u16, 0, 0, 0, 0]), 1);
                },
                |mut a, b| {
                    a.add_assign(&b);
                    a
                },
            )
        })
        .collect()
}

/// Right-hand side of the ordinary generating function identity:
/// `sum_n n! t^n / (1 - (x-1) t)^n` through t^order.
pub fn succession_ogf_rhs(order: usize) -> TruncatedSeries {
    let mut x_minus_1 = MultiPoly::var(Var::X);
    x_minus_1.add_monomial(Monomial::ONE, -1);
    // D = 1 - (x-1) t
    let mut d = TruncatedSeries::one(order);
    d.set_coeff(1, &MultiPoly::zero() - &x_minus_1);
    let mut rhs = TruncatedSeries::zero(order);
    let mut factorial = BigInt::from(1);
    for n in 0..=order {
        if n > 0 {
            factorial *= n as i64;
        }
        let term = d
            .pow(n as u32)
            .reciprocal()
            .expect("denominator has constant term 1")
            .shift_up(n);
        rhs = rhs.add(&term.mul_poly(&MultiPoly::from_monomial_big(Monomial::ONE, factorial.clone())));
    }
    rhs
}

/// Does `sum_n S_n(x) t^n = sum_n n! t^n/(1-(x-1)t)^n` hold through
/// t^order?
pub fn ogf_check(order: usize, opts: &SweepOptions) -> Result<bool, Error> {
    let polys = succession_polys(order, opts)?;
    let lhs = TruncatedSeries::from_coeffs(polys);
    Ok(lhs == succession_ogf_rhs(order))
}

/// Does `n! [t^n] e^{(x-1)t}/(1-t)^2 = S_{n+1}(x)` hold for every
/// n <= order? Factorials are cleared so the check stays integral:
/// `S_{n+1}(x) = sum_{j=0}^{n} (n!/j!) (n+1-j) (x-1)^j`.
pub fn egf_check(order: usize, opts: &SweepOptions) -> Result<bool, Error> {
    let polys = succession_polys(order + 1, opts)?;
    let mut x_minus_1 = MultiPoly::var(Var::X);
    x_minus_1.add_monomial(Monomial::ONE, -1);
    for n in 0..=order {
        let mut rhs = MultiPoly::zero();
        for j in 0..=n {
            // n!/j! * (n+1-j)
            let mut scale = BigInt::from(n as i64 + 1 - j as i64);
            for m in j + 1..=n {
                scale *= m as i64;
            }
            rhs.add_assign(&x_minus_1.pow(j as u32).scale(&scale));
        }
        if polys[n + 1] != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> SweepOptions {
        SweepOptions::default()
    }

    #[test]
    fn dkz_alpha_examples() {
        let alpha = dkz_alpha();
        assert_eq!(alpha.at(1).to_string(), "x");
        assert_eq!(alpha.at(2).to_string(), "y·v·q");
        assert_eq!(alpha.at(3).to_string(), "x·q + q^2");
        assert_eq!(alpha.at(6).to_string(), "y·v·q^3 + v·q^4 + v·q^5");
    }

    #[test]
    fn conjecture_alpha_examples() {
        let alpha = conjecture_alpha();
        assert_eq!(alpha.at(1).to_string(), "1");
        assert_eq!(alpha.at(2).to_string(), "y");
        assert_eq!(alpha.at(3).to_string(), "2");
        assert_eq!(alpha.at(4).to_string(), "1 + y");
        assert_eq!(alpha.at(6).to_string(), "2 + y");
    }

    #[test]
    fn conjecture_is_dkz_at_ones() {
        let dkz = dkz_alpha();
        let conj = conjecture_alpha();
        for k in 1..=20 {
            assert_eq!(
                dkz.at(k).substitute_one(&[Var::X, Var::V, Var::Q]),
                conj.at(k),
                "alpha_{k}"
            );
        }
    }

    #[test]
    fn sfraction_small_orders() {
        let conj = conjecture_alpha();
        assert_eq!(sfraction_series(&conj, 0).to_string(), "t^0: 1");
        assert_eq!(sfraction_series(&conj, 1).to_string(), "t^0: 1\nt^1: 1");
        assert_eq!(sfraction_series(&conj, 2).to_string(), "t^0: 1\nt^1: 1\nt^2: 1 + y");
    }

    #[test]
    fn sfraction_depth_is_stable() {
        for rule in [dkz_alpha(), conjecture_alpha()] {
            let base = sfraction_series_depth(&rule, 6, 6);
            let deeper = sfraction_series_depth(&rule, 6, 8);
            assert_eq!(base, deeper);
        }
    }

    #[test]
    fn contraction_matches_sfraction() {
        for rule in [dkz_alpha(), conjecture_alpha()] {
            let (gamma, beta) = contract_s_to_j(&rule);
            for order in 0..=7 {
                assert_eq!(
                    jfraction_series(&gamma, &beta, order),
                    sfraction_series(&rule, order),
                    "order {order}"
                );
            }
        }
    }

    #[test]
    fn jfraction_degenerate_rules() {
        let zero = CoefficientRule::from_fn(|_| MultiPoly::zero());
        assert_eq!(jfraction_series(&zero, &zero, 4), crate::series::TruncatedSeries::one(4));

        // gamma only: 1/(1 - x t) is geometric in x t
        let gamma = CoefficientRule::from_fn(|_| MultiPoly::var(Var::X));
        let s = jfraction_series(&gamma, &zero, 3);
        assert_eq!(s.to_string(), "t^0: 1\nt^1: x\nt^2: x^2\nt^3: x^3");
    }

    #[test]
    fn contraction_examples() {
        let (gamma, beta) = contract_s_to_j(&dkz_alpha());
        assert_eq!(beta.at(1).to_string(), "x·y·v·q");
        assert_eq!(gamma.at(1).to_string(), "x·q + q^2 + y·v·q");
    }

    #[test]
    fn z_correction_small() {
        let f1 = sfraction_series(&dkz_alpha(), 3);
        let corrected = apply_z_correction(&f1).unwrap();
        assert_eq!(corrected.coeff(0).to_string(), "1");
        assert_eq!(corrected.coeff(1).to_string(), "x·z");
        // the correction vanishes at z = 1
        assert_eq!(corrected.map_coeffs(|c| c.substitute_one(&[Var::Z])), f1);
    }

    #[test]
    fn brute_force_f_small_coefficients() {
        let f = brute_force_f(3, &opts()).unwrap();
        assert_eq!(f.coeff(0).to_string(), "1");
        assert_eq!(f.coeff(1).to_string(), "x·z");
        assert_eq!(f.coeff(2).to_string(), "x^2·z^2 + x·y·v·q");
        assert_eq!(f.coeff(2).sum_of_coefficients(), num_bigint::BigInt::from(2));
        assert_eq!(
            f.coeff(2).substitute_one(&[Var::Y, Var::Z, Var::V, Var::Q]).to_string(),
            "x + x^2"
        );
    }

    #[test]
    fn theorem_pipeline_matches_enumeration_small() {
        let order = 5;
        let corrected = apply_z_correction(&sfraction_series(&dkz_alpha(), order)).unwrap();
        let brute = brute_force_f(order, &opts()).unwrap();
        assert_eq!(corrected, brute);
        assert_eq!(dkz_jfraction_series(order), brute);
    }

    #[test]
    fn conjecture_matches_pattern_series_small() {
        let order = 5;
        let cf = sfraction_series(&conjecture_alpha(), order);
        let brute =
            brute_force_pattern_series(&catalog(PatternName::Nr3), order, &opts()).unwrap();
        assert_eq!(cf, brute);
        assert_eq!(brute.coeff(2).to_string(), "1 + y");
        assert_eq!(brute.coeff(3).to_string(), "1 + 4·y + y^2");
    }

    #[test]
    fn rising_product_examples() {
        let s = rising_product_series(2);
        assert_eq!(s.coeff(0).to_string(), "1");
        assert_eq!(s.coeff(1).to_string(), "x");
        assert_eq!(s.coeff(2).to_string(), "x^2 + x·q");
    }

    #[test]
    fn specialization_ladder_small() {
        let brute = brute_force_f(5, &opts()).unwrap();
        let no_yzv = brute.map_coeffs(|c| c.substitute_one(&[Var::Y, Var::Z, Var::V]));
        let rising = rising_product_series(5);
        assert_eq!(no_yzv, rising);
        assert_eq!(
            no_yzv.map_coeffs(|c| c.substitute_one(&[Var::Q])),
            rising.map_coeffs(|c| c.substitute_one(&[Var::Q]))
        );
    }

    #[test]
    fn succession_poly_examples() {
        let polys = succession_polys(3, &opts()).unwrap();
        assert_eq!(polys[0].to_string(), "1");
        assert_eq!(polys[1].to_string(), "1");
        assert_eq!(polys[2].to_string(), "1 + x");
        assert_eq!(polys[3].to_string(), "3 + 2·x + x^2");
        assert_eq!(polys[2].sum_of_coefficients(), num_bigint::BigInt::from(2));
    }

    #[test]
    fn generating_function_checks_small() {
        assert!(ogf_check(5, &opts()).unwrap());
        assert!(egf_check(5, &opts()).unwrap());
    }

    #[test]
    fn factorial_sanity() {
        let f = brute_force_f(5, &opts()).unwrap();
        for n in 0..=5 {
            assert_eq!(
                f.coeff(n).sum_of_coefficients(),
                num_bigint::BigInt::from(crate::factorial(n).unwrap()),
            );
        }
    }
}
