//! Main term of the expansion of the multiple zeta function at the origin.
//!
//! For small `(ε_1, …, ε_r)` the value `ζ(ε_1, …, ε_r)` equals
//! `Σ_d C^(d) ∏_{d_j = 1} (ε_{j+1}+⋯+ε_r)/(ε_j+⋯+ε_r)` plus a remainder of
//! order `max |ε_j|`. Only that degree-zero main term is computed here; nothing
//! in this module evaluates ζ itself or says anything about the remainder.
//!
//! The expansion also assumes each `|ε_k / (ε_j+⋯+ε_r)|` is small. That is a
//! regime condition, not something a single rational point can be checked
//! against, so it is not enforced. Only the exact non-vanishing hypotheses are.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::Rational;
use crate::bernoulli::BernoulliCache;
use crate::error::{Error, Result};
use crate::index_sets::{coefficient_c, coefficient_c_eval, enumerate, IndexFamily};
use crate::verify::MAX_R;

/// `(ε_1, …, ε_r)` with every entry and every tail sum `ε_j + ⋯ + ε_r` nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EpsilonVector {
    #[serde(with = "crate::arith::serde_rational::vec")]
    entries: Vec<Rational>,
}

impl EpsilonVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        let r = entries.len();
        if r == 0 {
            return Err(Error::Domain("need at least one ε".into()));
        }
        if r > MAX_R {
            return Err(Error::Parameter(format!(
                "r = {r} exceeds the supported limit {MAX_R}"
            )));
        }
        if let Some(j) = entries.iter().position(Zero::is_zero) {
            return Err(Error::Domain(format!(
                "hypothesis ε_j ≠ 0 violated: ε_{} = 0",
                j + 1
            )));
        }
        let mut tail = Rational::zero();
        for j in (0..r).rev() {
            tail += &entries[j];
            if tail.is_zero() && j + 1 < r {
                let terms: Vec<String> = (j + 1..=r).map(|k| format!("ε_{k}")).collect();
                return Err(Error::Domain(format!(
                    "hypothesis ε_j + ⋯ + ε_r ≠ 0 violated: {} = 0",
                    terms.join("+")
                )));
            }
        }
        Ok(EpsilonVector { entries })
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scaled(&self, lambda: &Rational) -> Result<Self> {
        EpsilonVector::new(self.entries.iter().map(|e| e * lambda).collect())
    }

    /// `(ε_{j+1}+⋯+ε_r)/(ε_j+⋯+ε_r)` for `j = 1..r-1`.
    pub fn tail_ratios(&self) -> Vec<Rational> {
        let r = self.len();
        let mut tails = vec![Rational::zero(); r + 1];
        for j in (0..r).rev() {
            tails[j] = &tails[j + 1] + &self.entries[j];
        }
        (0..r.saturating_sub(1))
            .map(|j| &tails[j + 1] / &tails[j])
            .collect()
    }
}

fn weighted_sum(
    eps: &EpsilonVector,
    mut coeff: impl FnMut(Vec<u8>) -> Result<Rational>,
) -> Result<Rational> {
    let ratios = eps.tail_ratios();
    let len = ratios.len();
    let mut total = Rational::zero();
    for mask in 0..1u32 << len {
        let d: Vec<u8> = (0..len).map(|j| ((mask >> j) & 1) as u8).collect();
        let weight = d
            .iter()
            .zip(&ratios)
            .filter(|(dj, _)| **dj == 1)
            .fold(Rational::one(), |acc, (_, q)| acc * q);
        total += coeff(d)? * weight;
    }
    Ok(total)
}

/// Main term at `ε` for the Euler–Zagier function.
pub fn main_term(eps: &EpsilonVector, bern: &BernoulliCache) -> Result<Rational> {
    weighted_sum(eps, |d| {
        Ok(coefficient_c(&enumerate(&IndexFamily::D { d })?, bern))
    })
}

/// Main term at `ε` for the Hurwitz function with shifts `a_1, …, a_r`.
pub fn main_term_hurwitz(
    eps: &EpsilonVector,
    a: &[Rational],
    bern: &BernoulliCache,
) -> Result<Rational> {
    if a.len() != eps.len() {
        return Err(Error::Parameter(format!(
            "expected {} shifts a_j, got {}",
            eps.len(),
            a.len()
        )));
    }
    weighted_sum(eps, |d| {
        coefficient_c_eval(&enumerate(&IndexFamily::D { d })?, a, bern)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn eps(v: &[(i64, i64)]) -> EpsilonVector {
        EpsilonVector::new(v.iter().map(|&(p, q)| rat(p, q)).collect()).unwrap()
    }

    #[test]
    fn small_cases() {
        let b = BernoulliCache::global();
        assert_eq!(main_term(&eps(&[(5, 1)]), b).unwrap(), rat(-1, 2));
        assert_eq!(main_term(&eps(&[(1, 1), (1, 1)]), b).unwrap(), rat(3, 8));
        assert_eq!(
            main_term(&eps(&[(1, 1), (1, 1), (1, 1)]), b).unwrap(),
            rat(-5, 16)
        );
    }

    #[test]
    fn two_variable_closed_form() {
        let b = BernoulliCache::global();
        for (e1, e2) in [((2, 1), (3, 1)), ((-1, 2), (7, 3)), ((5, 1), (-2, 1))] {
            let e = eps(&[e1, e2]);
            let (x, y) = (&e.entries()[0], &e.entries()[1]);
            let expected = rat(1, 3) + rat(1, 12) * y / (x + y);
            assert_eq!(main_term(&e, b).unwrap(), expected);
        }
    }

    #[test]
    fn equal_entries_use_simple_ratios() {
        let e = eps(&[(3, 2); 4]);
        assert_eq!(e.tail_ratios(), vec![rat(3, 4), rat(2, 3), rat(1, 2)]);
    }

    #[test]
    fn hypotheses_are_named() {
        let zero = EpsilonVector::new(vec![int(1), int(0)])
            .unwrap_err()
            .to_string();
        assert!(zero.contains("ε_2 = 0"), "{zero}");
        let tail = EpsilonVector::new(vec![int(1), int(-1)])
            .unwrap_err()
            .to_string();
        assert!(tail.contains("ε_1+ε_2 = 0"), "{tail}");
        let inner = EpsilonVector::new(vec![int(4), int(2), int(-2)])
            .unwrap_err()
            .to_string();
        assert!(inner.contains("ε_2+ε_3 = 0"), "{inner}");
        assert!(EpsilonVector::new(vec![]).is_err());
    }

    #[test]
    fn hurwitz_specializations() {
        let b = BernoulliCache::global();
        for r in 1..=5 {
            let e =
                EpsilonVector::new((1..=r as i64).map(|j| rat(j * j - 3, j)).collect()).unwrap();
            let ones = vec![int(1); r];
            assert_eq!(
                main_term_hurwitz(&e, &ones, b).unwrap(),
                main_term(&e, b).unwrap(),
                "r={r}"
            );
        }
        assert_eq!(
            main_term_hurwitz(&eps(&[(7, 3)]), &[int(0)], b).unwrap(),
            rat(1, 2)
        );
        assert!(main_term_hurwitz(&eps(&[(1, 1)]), &[int(0), int(1)], b).is_err());
    }

    #[test]
    fn scale_invariance() {
        let b = BernoulliCache::global();
        let e = eps(&[(1, 3), (-2, 5), (4, 1)]);
        let base = main_term(&e, b).unwrap();
        for lambda in [rat(-1, 1), rat(7, 2), rat(-3, 11)] {
            assert_eq!(main_term(&e.scaled(&lambda).unwrap(), b).unwrap(), base);
        }
    }
}
