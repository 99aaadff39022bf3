//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::arith::{self, factorial_q, int, Rational};
use crate::error::Error;

/// A polynomial `c_0 + c_1 v + ... + c_d v^d` in a named variable `v`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector. The variable name is metadata: constants combine freely with
/// anything, but adding or multiplying two non-constant polynomials in
/// different variables is a programming error and panics.
#[derive(Clone, Debug)]
pub struct Poly {
    coeffs: Vec<Rational>,
    var: char,
}

impl Poly {
    pub const DEFAULT_VAR: char = 'a';

    pub fn new(var: char, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs, var }
    }

    pub fn constant(var: char, c: Rational) -> Self {
        Poly::new(var, vec![c])
    }

    /// The polynomial `v` itself.
    pub fn var(var: char) -> Self {
        Poly::new(var, vec![Rational::zero(), Rational::one()])
    }

    pub fn monomial(var: char, c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(var, coeffs)
    }

    /// Builds from small integer numerator/denominator pairs, lowest degree first.
    pub fn from_ratios(var: char, coeffs: &[(i64, i64)]) -> Self {
        Poly::new(var, coeffs.iter().map(|&(p, q)| arith::rat(p, q)).collect())
    }

    pub fn from_coeff_strings<S: AsRef<str>>(var: char, coeffs: &[S]) -> Result<Self, Error> {
        let coeffs = coeffs
            .iter()
            .map(|s| arith::parse(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(var, coeffs))
    }

    pub fn variable(&self) -> char {
        self.var
    }

    pub fn with_variable(mut self, var: char) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The constant value if the polynomial has degree at most 0.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.coeff(0))
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, q: &Rational) -> Poly {
        Poly::new(self.var, self.coeffs.iter().map(|c| c * q).collect())
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * int(k as i64))
            .collect();
        Poly::new(self.var, coeffs)
    }

    /// Exact value of the integral over `[0, 1]`, i.e. `sum c_k / (k + 1)`.
    pub fn integrate_01(&self) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c / int(k as i64 + 1))
            .sum()
    }

    /// Substitutes `inner` for the variable; the result lives in `inner`'s variable.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let zero = Poly::new(inner.var, vec![]);
        self.coeffs.iter().rev().fold(zero, |acc, c| {
            &(&acc * inner) + &Poly::constant(inner.var, c.clone())
        })
    }

    /// `p(v + shift)`.
    pub fn shift(&self, shift: &Rational) -> Poly {
        self.compose(&Poly::new(self.var, vec![shift.clone(), Rational::one()]))
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::constant(self.var, Rational::one()), |acc, _| {
            &acc * self
        })
    }

    fn joint_var(&self, other: &Poly) -> char {
        match (self.is_constant(), other.is_constant()) {
            (false, false) => {
                assert_eq!(
                    self.var, other.var,
                    "cannot combine polynomials in different variables"
                );
                self.var
            }
            (true, false) => other.var,
            _ => self.var,
        }
    }
}

/// `binom(t, m) = t (t - 1) ... (t - m + 1) / m!` as a polynomial in `t`.
pub fn binomial_poly(m: usize) -> Poly {
    let rising = (0..m).fold(Poly::constant('t', Rational::one()), |acc, j| {
        &acc * &Poly::new('t', vec![int(-(j as i64)), Rational::one()])
    });
    rising.scale(&(Rational::one() / factorial_q(m)))
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.is_constant() || self.var == other.var)
    }
}

impl Eq for Poly {}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let var = self.joint_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(var, (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let var = self.joint_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(var, (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        let var = self.joint_var(rhs);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::new(var, vec![]);
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(var, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_by_value {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_by_value!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::new(Poly::DEFAULT_VAR, vec![])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(Poly::DEFAULT_VAR, Rational::one())
    }
}

impl fmt::Display for Poly {
    /// Highest degree first, e.g. `3/2*a^2 - 3/2*a + 1/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{}", self.var, k)?,
            }
        }
        Ok(())
    }
}

/// Serializes as the coefficient array, lowest degree first, entries `"p/q"`.
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn p(coeffs: &[(i64, i64)]) -> Poly {
        Poly::from_ratios('a', coeffs)
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            p(&[(0, 1), (0, 1), (1, 1)]).derivative(),
            p(&[(0, 1), (2, 1)])
        );
        assert!(Poly::zero().derivative().is_zero());
        let lambda3 = p(&[(1, 3), (-3, 2), (3, 2)]);
        assert_eq!(lambda3.derivative(), p(&[(-3, 2), (3, 1)]));
    }

    #[test]
    fn integrate_examples() {
        assert_eq!(Poly::one().integrate_01(), rat(1, 1));
        assert_eq!(binomial_poly(2).integrate_01(), rat(-1, 12));
        assert_eq!(Poly::monomial('t', rat(1, 1), 3).integrate_01(), rat(1, 4));
    }

    #[test]
    fn binomial_poly_examples() {
        assert_eq!(binomial_poly(0), Poly::constant('t', rat(1, 1)));
        assert_eq!(binomial_poly(1), Poly::var('t'));
        // Falling factorial t(t-1)(t-2) = t^3 - 3t^2 + 2t, expanded by hand.
        assert_eq!(
            binomial_poly(3),
            Poly::from_ratios('t', &[(0, 1), (2, 6), (-3, 6), (1, 6)])
        );
    }

    #[test]
    fn binomial_poly_values_on_integers() {
        for m in 0..10 {
            let b = binomial_poly(m);
            assert_eq!(b.degree(), Some(m));
            assert_eq!(b.eval(&int(m as i64)), rat(1, 1));
            for k in 0..m {
                assert!(b.eval(&int(k as i64)).is_zero(), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn shift_and_compose() {
        // (x + 1)^2 at x = t - 1 is t^2.
        let sq = p(&[(1, 1), (2, 1), (1, 1)]).with_variable('x');
        assert_eq!(sq.shift(&rat(-1, 1)), Poly::monomial('x', rat(1, 1), 2));
        let inner = Poly::from_ratios('t', &[(-1, 1), (1, 1)]);
        assert_eq!(sq.compose(&inner), Poly::monomial('t', rat(1, 1), 2));
    }

    #[test]
    fn display() {
        assert_eq!(
            p(&[(1, 3), (-3, 2), (3, 2)]).to_string(),
            "3/2*a^2 - 3/2*a + 1/3"
        );
        assert_eq!(p(&[(1, 2), (-1, 1)]).to_string(), "-a + 1/2");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn json_is_low_to_high() {
        let s = serde_json::to_string(&p(&[(1, 2), (-1, 1)])).unwrap();
        assert_eq!(s, r#"["1/2","-1"]"#);
    }

    #[test]
    #[should_panic(expected = "different variables")]
    fn mixing_variables_panics() {
        let _ = &Poly::var('a') + &Poly::var('t');
    }

    #[test]
    fn constants_mix_with_any_variable() {
        let c = Poly::constant('t', rat(2, 1));
        assert_eq!((&c * &Poly::var('a')).variable(), 'a');
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-20i64..20, 1i64..9), 0..7).prop_map(|cs| p(&cs))
    }

    proptest! {
        #[test]
        fn integral_of_derivative(q in small_poly()) {
            let lhs = q.derivative().integrate_01();
            let rhs = q.eval(&rat(1, 1)) - q.eval(&rat(0, 1));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn degree_is_additive(x in small_poly(), y in small_poly()) {
            prop_assume!(!x.is_zero() && !y.is_zero());
            prop_assert_eq!((&x * &y).degree(), Some(x.degree().unwrap() + y.degree().unwrap()));
        }

        #[test]
        fn derivative_drops_degree(q in small_poly()) {
            if let Some(d) = q.degree().filter(|&d| d > 0) {
                prop_assert_eq!(q.derivative().degree(), Some(d - 1));
            }
        }

        #[test]
        fn eval_is_a_ring_map(x in small_poly(), y in small_poly(), at in (-9i64..9, 1i64..5)) {
            let at = rat(at.0, at.1);
            prop_assert_eq!((&x * &y).eval(&at), x.eval(&at) * y.eval(&at));
            prop_assert_eq!((&x - &y).eval(&at), x.eval(&at) - y.eval(&at));
        }
    }
}
