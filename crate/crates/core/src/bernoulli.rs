//! Bernoulli numbers and polynomials.
//!
//! Convention: `sum B_n x^n / n! = x e^x / (e^x - 1)`, so `B_1 = +1/2` and
//! `B_n = B_n(1)` where `sum B_n(a) x^n / n! = x e^{ax} / (e^x - 1)`. Nothing
//! in this crate uses the `B_1 = -1/2` convention.

use std::collections::BTreeMap;
use std::sync::{OnceLock, RwLock};

use num_traits::One;

use crate::arith::{factorial_q, Rational};
use crate::poly::Poly;
use crate::series::{exp_t, expm1, lift, Series1};

#[derive(Default)]
struct Tables {
    numbers: Vec<Rational>,
    polys: Vec<Poly>,
}

/// Memoized Bernoulli numbers and polynomials, grown on demand.
///
/// Readers share a lock-guarded table; growth recomputes the defining series
/// to a larger order under the write lock, so every reader sees a consistent
/// prefix. A cache may carry overrides of individual numbers, which is how the
/// verification suite is mutation-tested.
pub struct BernoulliCache {
    tables: RwLock<Tables>,
    overrides: BTreeMap<usize, Rational>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            tables: RwLock::new(Tables::default()),
            overrides: BTreeMap::new(),
        }
    }

    /// A cache with entries `0..=bound` computed up front.
    pub fn with_bound(bound: usize) -> Self {
        let cache = Self::new();
        cache.ensure(bound);
        cache
    }

    /// Process-wide shared cache.
    pub fn global() -> &'static BernoulliCache {
        static CACHE: OnceLock<BernoulliCache> = OnceLock::new();
        CACHE.get_or_init(|| BernoulliCache::with_bound(24))
    }

    /// A fresh cache whose `B_n` is shifted by `delta`. Polynomials are untouched.
    pub fn with_perturbation(n: usize, delta: Rational) -> Self {
        let mut cache = Self::new();
        let perturbed = cache.number(n) + delta;
        cache.overrides.insert(n, perturbed);
        cache
    }

    pub fn is_perturbed(&self) -> bool {
        !self.overrides.is_empty()
    }

    fn ensure(&self, n: usize) {
        if self.tables.read().unwrap().numbers.len() > n {
            return;
        }
        let mut tables = self.tables.write().unwrap();
        if tables.numbers.len() > n {
            return;
        }
        let bound = (n + 1).max(2 * tables.numbers.len()).max(16);
        *tables = compute(bound);
    }

    pub fn number(&self, n: usize) -> Rational {
        if let Some(q) = self.overrides.get(&n) {
            return q.clone();
        }
        self.ensure(n);
        self.tables.read().unwrap().numbers[n].clone()
    }

    /// `B_n / n!`, the weight appearing in every composition sum.
    pub fn weight(&self, n: usize) -> Rational {
        self.number(n) / factorial_q(n)
    }

    pub fn polynomial(&self, n: usize) -> Poly {
        self.ensure(n);
        self.tables.read().unwrap().polys[n].clone()
    }

    /// `B_n(a) / n!`.
    pub fn poly_weight(&self, n: usize) -> Poly {
        self.polynomial(n)
            .scale(&(Rational::one() / factorial_q(n)))
    }
}

/// Expands `x/(e^x - 1)` once and multiplies by `e^x` and `e^{ax}`.
fn compute(bound: usize) -> Tables {
    let order = bound - 1;
    let base = expm1(order + 1)
        .shift_down(1)
        .and_then(|s| s.reciprocal())
        .expect("(e^x - 1)/x has constant term 1");
    let numbers_egf = &base * &exp_t(order);
    let a = Poly::var('a');
    let e_ax = Series1::from_fn(order, |k| {
        a.pow(k).scale(&(Rational::one() / factorial_q(k)))
    });
    let polys_egf = &lift(&base) * &e_ax;
    Tables {
        numbers: (0..=order)
            .map(|n| numbers_egf.coeff(n) * factorial_q(n))
            .collect(),
        polys: (0..=order)
            .map(|n| polys_egf.coeff(n).scale(&factorial_q(n)).with_variable('a'))
            .collect(),
    }
}

pub fn bernoulli_number(n: usize) -> Rational {
    BernoulliCache::global().number(n)
}

pub fn bernoulli_polynomial(n: usize) -> Poly {
    BernoulliCache::global().polynomial(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, sign};
    use num_traits::Zero;

    #[test]
    fn numbers() {
        assert_eq!(bernoulli_number(0), rat(1, 1));
        assert_eq!(bernoulli_number(1), rat(1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn polynomials() {
        assert_eq!(bernoulli_polynomial(0), Poly::one());
        assert_eq!(
            bernoulli_polynomial(1),
            Poly::from_ratios('a', &[(-1, 2), (1, 1)])
        );
        assert_eq!(bernoulli_polynomial(2).eval(&rat(1, 1)), rat(1, 6));
        assert_eq!(
            bernoulli_polynomial(2),
            Poly::from_ratios('a', &[(1, 6), (-1, 1), (1, 1)])
        );
    }

    #[test]
    fn odd_numbers_vanish() {
        for k in 1..20 {
            assert!(bernoulli_number(2 * k + 1).is_zero(), "B_{}", 2 * k + 1);
        }
    }

    #[test]
    fn polynomial_endpoints_and_shape() {
        for n in 0..30 {
            let p = bernoulli_polynomial(n);
            assert_eq!(p.degree(), Some(n));
            assert_eq!(p.coeff(n), rat(1, 1));
            assert_eq!(p.eval(&int(1)), bernoulli_number(n));
            assert_eq!(p.eval(&int(0)), sign(n) * bernoulli_number(n));
            // B_n'(a) = n B_{n-1}(a)
            if n > 0 {
                assert_eq!(
                    p.derivative(),
                    bernoulli_polynomial(n - 1).scale(&int(n as i64))
                );
            }
        }
    }

    #[test]
    fn cache_grows_past_initial_bound() {
        let cache = BernoulliCache::with_bound(4);
        assert_eq!(cache.number(40), bernoulli_number(40));
        assert_eq!(cache.number(2), rat(1, 6));
    }

    #[test]
    fn perturbation_only_touches_one_entry() {
        let cache = BernoulliCache::with_perturbation(2, rat(1, 1_000_000));
        assert!(cache.is_perturbed());
        assert_eq!(cache.number(2), rat(1, 6) + rat(1, 1_000_000));
        assert_eq!(cache.number(4), rat(-1, 30));
        assert!(!BernoulliCache::global().is_perturbed());
    }

    #[test]
    fn concurrent_readers_agree() {
        let cache = BernoulliCache::new();
        std::thread::scope(|s| {
            for k in 0..8 {
                let cache = &cache;
                s.spawn(move || {
                    for n in (0..60).rev().skip(k) {
                        assert_eq!(cache.number(n), bernoulli_number(n));
                    }
                });
            }
        });
    }
}
