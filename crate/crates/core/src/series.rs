//! Truncated formal power series in one and two variables.
//!
//! A [`Series1`] of order `N` carries exact coefficients of `t^0 ..= t^N`.
//! A [`Series2`] of order `T` carries exact coefficients of `x^m y^n` for
//! every `m + n <= T` (total-degree truncation); entries outside that triangle
//! are stored as zero and reported as unknown when serialized. Total degree is
//! what the `(x - y)` substitution preserves, which is why it is used here.
//!
//! Every result carries the minimum order of its operands.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::Value;

use crate::arith::{binomial, factorial_q, int, Rational};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Exact coefficient ring for series: [`Rational`] or [`Poly`].
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(q: Rational) -> Self;
    fn scale(&self, q: &Rational) -> Self;
    /// Multiplicative inverse when `self` is a unit of the ring.
    fn try_inverse(&self) -> Option<Self>;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn to_json(&self) -> Value;
}

impl Ring for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl Ring for Poly {
    fn from_rational(q: Rational) -> Self {
        Poly::constant(Poly::DEFAULT_VAR, q)
    }
    fn scale(&self, q: &Rational) -> Self {
        Poly::scale(self, q)
    }
    /// Units of `Q[a]` are the nonzero constants.
    fn try_inverse(&self) -> Option<Self> {
        let c = self.as_constant()?;
        (!c.is_zero()).then(|| Poly::constant(self.variable(), c.recip()))
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("polynomial serializes")
    }
}

/// Truncated univariate series `c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series1<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series1<R> {
    /// Pads with zeros or truncates `coeffs` to exactly `order + 1` terms.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Series1 { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        Series1 {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![], order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![R::one()], order)
    }

    /// The series `t`.
    pub fn var(order: usize) -> Self {
        Self::new(vec![R::zero(), R::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(
            self.coeffs[..=order.min(self.order())].to_vec(),
            order.min(self.order()),
        )
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Series1<S> {
        Series1 {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.map(|c| c.scale(q))
    }

    pub fn mul_coeff(&self, r: &R) -> Self {
        self.map(|c| c.mul_ref(r))
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let coeffs = (1..=n)
            .map(|k| self.coeffs[k].scale(&int(k as i64)))
            .collect();
        Self::new(coeffs, n.saturating_sub(1))
    }

    /// Antiderivative with zero constant term; gains one order.
    pub fn integral(&self) -> Self {
        let mut coeffs = vec![R::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale(&(Rational::one() / int(k as i64 + 1)))),
        );
        Self::new(coeffs, self.order() + 1)
    }

    /// Multiplies by `t^k`; gains `k` orders.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs, self.order() + k)
    }

    /// Divides by `t^k`; the low `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::Parameter(format!(
                "cannot divide a series of order {} by t^{k}",
                self.order()
            )));
        }
        if let Some(j) = (0..k).find(|&j| !self.coeffs[j].is_zero()) {
            return Err(Error::Domain(format!(
                "series is not divisible by t^{k}: coefficient of t^{j} is nonzero"
            )));
        }
        Ok(Self::new(self.coeffs[k..].to_vec(), self.order() - k))
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| &acc * self)
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv = self.coeffs[0].try_inverse().ok_or_else(|| {
            Error::Domain(format!(
                "reciprocal needs a unit constant term, got {:?}",
                self.coeffs[0]
            ))
        })?;
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(inv.clone());
        for k in 1..=n {
            let acc = (1..=k).fold(R::zero(), |acc, j| {
                acc.add_ref(&self.coeffs[j].mul_ref(&out[k - j]))
            });
            out.push(-acc.mul_ref(&inv));
        }
        Ok(Series1 { coeffs: out })
    }

    fn require_zero_constant(&self, what: &str) -> Result<()> {
        if self.coeffs[0].is_zero() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "{what} needs a zero constant term, got {:?}",
                self.coeffs[0]
            )))
        }
    }

    /// `exp(self)`; the constant term must be zero.
    pub fn exp(&self) -> Result<Self> {
        self.require_zero_constant("exp")?;
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(R::one());
        // e' = g' e, so n e_n = sum_{k=1}^n k g_k e_{n-k}.
        for m in 1..=n {
            let acc = (1..=m).fold(R::zero(), |acc, k| {
                acc.add_ref(&self.coeffs[k].scale(&int(k as i64)).mul_ref(&out[m - k]))
            });
            out.push(acc.scale(&(Rational::one() / int(m as i64))));
        }
        Ok(Series1 { coeffs: out })
    }

    /// `log(self)`; the constant term must be one.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain(format!(
                "log needs constant term 1, got {:?}",
                self.coeffs[0]
            )));
        }
        let quotient = &self.derivative() * &self.reciprocal()?;
        Ok(quotient.integral().truncate(self.order()))
    }

    /// `self(inner(t))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        inner.require_zero_constant("composition")?;
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] = acc.coeffs[0].add_ref(c);
        }
        Ok(acc)
    }

    fn check_revertible(&self) -> Result<R> {
        if self.order() == 0 {
            return Err(Error::Parameter("reversion needs order >= 1".into()));
        }
        self.require_zero_constant("reversion")?;
        self.coeffs[1].try_inverse().ok_or_else(|| {
            Error::Domain(format!(
                "reversion needs a unit linear coefficient, got {:?}",
                self.coeffs[1]
            ))
        })
    }

    /// Compositional inverse `g` with `self(g(t)) = t`, by Newton iteration
    /// `g <- g - (f(g) - t) / f'(g)`, doubling the known precision each step.
    pub fn reversion(&self) -> Result<Self> {
        let lead_inv = self.check_revertible()?;
        let n = self.order();
        // The padded top coefficient of f' only ever meets terms of f(g) - t of
        // valuation >= 2, so it never reaches degree <= n.
        let deriv = Self::new(self.derivative().coeffs, n);
        let mut g = Self::new(vec![R::zero(), lead_inv], 1);
        let mut known = 1;
        while known < n {
            let next = (2 * known).min(n);
            let g_ext = Self::new(g.coeffs, next);
            let residual = &self.truncate(next).compose(&g_ext)? - &Self::var(next);
            let slope = deriv.truncate(next).compose(&g_ext)?;
            g = &g_ext - &(&residual * &slope.reciprocal()?);
            known = next;
        }
        Ok(Self::new(g.coeffs, n))
    }

    /// Compositional inverse by term-wise Lagrange inversion:
    /// `[t^k] g = (1/k) [z^{k-1}] (z / f(z))^k`.
    pub fn reversion_lagrange(&self) -> Result<Self> {
        self.check_revertible()?;
        let n = self.order();
        let ratio = self.shift_down(1)?.reciprocal()?;
        let mut coeffs = vec![R::zero()];
        let mut power = Series1::<R>::one(n - 1);
        for k in 1..=n {
            power = &power * &ratio;
            coeffs.push(power.coeffs[k - 1].scale(&(Rational::one() / int(k as i64))));
        }
        Ok(Series1 { coeffs })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(Ring::to_json).collect())
    }
}

impl<'a, R: Ring> Add<&'a Series1<R>> for &'a Series1<R> {
    type Output = Series1<R>;
    fn add(self, rhs: &'a Series1<R>) -> Series1<R> {
        let n = self.order().min(rhs.order());
        Series1::from_fn(n, |k| self.coeffs[k].add_ref(&rhs.coeffs[k]))
    }
}

impl<'a, R: Ring> Sub<&'a Series1<R>> for &'a Series1<R> {
    type Output = Series1<R>;
    fn sub(self, rhs: &'a Series1<R>) -> Series1<R> {
        let n = self.order().min(rhs.order());
        Series1::from_fn(n, |k| self.coeffs[k].clone() - rhs.coeffs[k].clone())
    }
}

impl<'a, R: Ring> Mul<&'a Series1<R>> for &'a Series1<R> {
    type Output = Series1<R>;
    fn mul(self, rhs: &'a Series1<R>) -> Series1<R> {
        let n = self.order().min(rhs.order());
        let mut out = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Series1 { coeffs: out }
    }
}

impl<R: Ring> Neg for &Series1<R> {
    type Output = Series1<R>;
    fn neg(self) -> Series1<R> {
        self.map(|c| -c.clone())
    }
}

/// `log(1 + t) = sum_{m>=1} (-1)^{m-1} t^m / m`.
pub fn log1p(order: usize) -> Series1<Rational> {
    Series1::from_fn(order, |m| match m {
        0 => Rational::zero(),
        _ => crate::arith::sign(m - 1) / int(m as i64),
    })
}

/// `e^t`.
pub fn exp_t(order: usize) -> Series1<Rational> {
    Series1::from_fn(order, |k| Rational::one() / factorial_q(k))
}

/// `e^t - 1`.
pub fn expm1(order: usize) -> Series1<Rational> {
    Series1::from_fn(order, |k| match k {
        0 => Rational::zero(),
        _ => Rational::one() / factorial_q(k),
    })
}

/// `t / log(1 + t)`.
pub fn x_over_log1p(order: usize) -> Series1<Rational> {
    log1p(order + 1)
        .shift_down(1)
        .and_then(|s| s.reciprocal())
        .expect("log(1+t)/t has constant term 1")
}

/// Lifts a rational series to polynomial coefficients.
pub fn lift(s: &Series1<Rational>) -> Series1<Poly> {
    s.map(|c| Poly::constant(Poly::DEFAULT_VAR, c.clone()))
}

/// Truncated bivariate series, total-degree order `T`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series2<R> {
    order: usize,
    // c[m][n] is the coefficient of x^m y^n; zero whenever m + n > order.
    c: Vec<Vec<R>>,
}

impl<R: Ring> Series2<R> {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let c = (0..=order)
            .map(|m| {
                (0..=order)
                    .map(|n| if m + n <= order { f(m, n) } else { R::zero() })
                    .collect()
            })
            .collect();
        Series2 { order, c }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_, _| R::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |m, n| if m + n == 0 { R::one() } else { R::zero() })
    }

    /// Embeds `s(x)`; `s` must be known to at least `order`.
    pub fn from_x(s: &Series1<R>, order: usize) -> Self {
        assert!(
            s.order() >= order,
            "series in x too short for order {order}"
        );
        Self::from_fn(order, |m, n| if n == 0 { s.coeff(m) } else { R::zero() })
    }

    /// Embeds `s(y)`; `s` must be known to at least `order`.
    pub fn from_y(s: &Series1<R>, order: usize) -> Self {
        assert!(
            s.order() >= order,
            "series in y too short for order {order}"
        );
        Self::from_fn(order, |m, n| if m == 0 { s.coeff(n) } else { R::zero() })
    }

    pub fn x(order: usize) -> Self {
        Self::from_fn(order, |m, n| {
            if (m, n) == (1, 0) {
                R::one()
            } else {
                R::zero()
            }
        })
    }

    pub fn y(order: usize) -> Self {
        Self::from_fn(order, |m, n| {
            if (m, n) == (0, 1) {
                R::one()
            } else {
                R::zero()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `x^m y^n`; panics outside the known triangle.
    pub fn coeff(&self, m: usize, n: usize) -> &R {
        assert!(
            m + n <= self.order,
            "coefficient x^{m} y^{n} beyond total order {}",
            self.order
        );
        &self.c[m][n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self::from_fn(order, |m, n| self.c[m][n].clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Series2<S> {
        Series2::from_fn(self.order, |m, n| f(&self.c[m][n]))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.map(|c| c.scale(q))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |m, n| self.c[n][m].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Substitutes `y -> x - y`. The map is an involution, so it serves both to
    /// move into coordinates `(u, v) = (x, x - y)` and back.
    pub fn shear(&self) -> Self {
        let mut out = Self::zero(self.order);
        for m in 0..=self.order {
            for n in 0..=self.order - m {
                let a = &self.c[m][n];
                if a.is_zero() {
                    continue;
                }
                // x^m (x - y)^n = sum_k C(n,k) (-1)^k x^{m+n-k} y^k
                for k in 0..=n {
                    let w = Rational::from_integer(binomial(n, k)) * crate::arith::sign(k);
                    let slot = &mut out.c[m + n - k][k];
                    *slot = slot.add_ref(&a.scale(&w));
                }
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv = self.c[0][0].try_inverse().ok_or_else(|| {
            Error::Domain(format!(
                "reciprocal needs a unit constant term, got {:?}",
                self.c[0][0]
            ))
        })?;
        let mut out = Self::zero(self.order);
        out.c[0][0] = inv.clone();
        for d in 1..=self.order {
            for m in 0..=d {
                let n = d - m;
                let mut acc = R::zero();
                for i in 0..=m {
                    for j in 0..=n {
                        if i + j == 0 || self.c[i][j].is_zero() {
                            continue;
                        }
                        acc = acc.add_ref(&self.c[i][j].mul_ref(&out.c[m - i][n - j]));
                    }
                }
                out.c[m][n] = -acc.mul_ref(&inv);
            }
        }
        Ok(out)
    }

    /// Drops the `y^0` column and lowers every `y` power by one.
    fn divide_by_y(&self) -> Self {
        Self::from_fn(self.order - 1, |m, n| self.c[m][n + 1].clone())
    }

    fn check_y_divisible(&self, role: &str) -> Result<()> {
        match (0..=self.order).find(|&m| !self.c[m][0].is_zero()) {
            None => Ok(()),
            Some(m) => Err(Error::Domain(format!(
                "{role} is not divisible by (x - y): after y -> x - y the coefficient \
                 of x^{m} y^0 is {:?}",
                self.c[m][0]
            ))),
        }
    }

    /// `num / den` where both vanish on the diagonal `x = y`.
    ///
    /// Both are moved to `(u, v) = (x, x - y)`, divided by `v` there, and the
    /// quotient is moved back. The result has order one less than the inputs
    /// and is re-multiplied against `den` before being returned.
    pub fn divide_exact_xy(num: &Self, den: &Self) -> Result<Self> {
        let order = num.order.min(den.order);
        if order == 0 {
            return Err(Error::Parameter("(x - y) division needs order >= 1".into()));
        }
        let (num, den) = (num.truncate(order), den.truncate(order));
        let num_uv = num.shear();
        let den_uv = den.shear();
        num_uv.check_y_divisible("numerator")?;
        den_uv.check_y_divisible("denominator")?;
        let den_reduced = den_uv.divide_by_y();
        if den_reduced.c[0][0].try_inverse().is_none() {
            return Err(Error::Domain(
                "denominator / (x - y) has a non-unit constant term".into(),
            ));
        }
        let quotient = (&num_uv.divide_by_y() * &den_reduced.reciprocal()?).shear();
        if &quotient * &den != num.truncate(order - 1) {
            return Err(Error::Domain(
                "quotient * denominator does not reproduce the numerator".into(),
            ));
        }
        Ok(quotient)
    }

    /// Row `m` is the `x`-degree; entries beyond the total order are `null`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..=self.order)
                .map(|m| {
                    Value::Array(
                        (0..=self.order)
                            .map(|n| {
                                if m + n <= self.order {
                                    self.c[m][n].to_json()
                                } else {
                                    Value::Null
                                }
                            })
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

impl<'a, R: Ring> Add<&'a Series2<R>> for &'a Series2<R> {
    type Output = Series2<R>;
    fn add(self, rhs: &'a Series2<R>) -> Series2<R> {
        let t = self.order.min(rhs.order);
        Series2::from_fn(t, |m, n| self.c[m][n].add_ref(&rhs.c[m][n]))
    }
}

impl<'a, R: Ring> Sub<&'a Series2<R>> for &'a Series2<R> {
    type Output = Series2<R>;
    fn sub(self, rhs: &'a Series2<R>) -> Series2<R> {
        let t = self.order.min(rhs.order);
        Series2::from_fn(t, |m, n| self.c[m][n].clone() - rhs.c[m][n].clone())
    }
}

impl<'a, R: Ring> Mul<&'a Series2<R>> for &'a Series2<R> {
    type Output = Series2<R>;
    fn mul(self, rhs: &'a Series2<R>) -> Series2<R> {
        let t = self.order.min(rhs.order);
        let mut out = Series2::<R>::zero(t);
        for i in 0..=t {
            for j in 0..=t - i {
                let a = &self.c[i][j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..=t - i - j {
                    for l in 0..=t - i - j - k {
                        let b = &rhs.c[k][l];
                        if b.is_zero() {
                            continue;
                        }
                        let slot: &mut R = &mut out.c[i + k][j + l];
                        *slot = slot.add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        out
    }
}

impl<R: Ring> Neg for &Series2<R> {
    type Output = Series2<R>;
    fn neg(self) -> Series2<R> {
        self.map(|c| -c.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn q(coeffs: &[(i64, i64)], order: usize) -> Series1<Rational> {
        Series1::new(coeffs.iter().map(|&(p, d)| rat(p, d)).collect(), order)
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(
            Series1::<Rational>::one(4).reciprocal().unwrap(),
            Series1::one(4)
        );
        assert_eq!(
            q(&[(1, 1), (1, 1)], 3).reciprocal().unwrap(),
            q(&[(1, 1), (-1, 1), (1, 1), (-1, 1)], 3)
        );
        let gregory = log1p(6).shift_down(1).unwrap().reciprocal().unwrap();
        assert_eq!(
            gregory,
            q(
                &[(1, 1), (1, 2), (-1, 12), (1, 24), (-19, 720), (3, 160)],
                5
            )
        );
        assert!(matches!(
            q(&[(0, 1), (1, 1)], 3).reciprocal(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn poly_reciprocal_needs_constant_unit() {
        let s = Series1::new(vec![Poly::var('a'), Poly::one()], 3);
        assert!(matches!(s.reciprocal(), Err(Error::Domain(_))));
    }

    #[test]
    fn log_exp_examples() {
        assert_eq!(log1p(3), q(&[(0, 1), (1, 1), (-1, 2), (1, 3)], 3));
        assert_eq!(log1p(8).exp().unwrap(), q(&[(1, 1), (1, 1)], 8));
        assert_eq!(Series1::<Rational>::zero(5).exp().unwrap(), Series1::one(5));
        assert_eq!(q(&[(1, 1), (1, 1)], 8).log().unwrap(), log1p(8));
        assert!(matches!(
            Series1::<Rational>::one(3).exp(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn reversion_examples() {
        assert_eq!(expm1(10).reversion().unwrap(), log1p(10));
        assert_eq!(
            Series1::<Rational>::var(6).reversion().unwrap(),
            Series1::var(6)
        );
        assert!(matches!(
            q(&[(1, 1), (1, 1)], 4).reversion(),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            q(&[(0, 1), (0, 1), (1, 1)], 4).reversion(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn reversion_of_shifted_exponential_gives_lambda2() {
        let order = 4;
        let a = Poly::var('a');
        let e_minus_at = Series1::from_fn(order, |k| {
            (-&a).pow(k).scale(&(Rational::one() / factorial_q(k)))
        });
        let f = &e_minus_at * &lift(&expm1(order));
        let l = f.reversion().unwrap();
        assert_eq!(l.coeff(1), Poly::one());
        assert_eq!(l.coeff(2), Poly::from_ratios('a', &[(-1, 2), (1, 1)]));
        assert_eq!(l, f.reversion_lagrange().unwrap());
    }

    #[test]
    fn divide_exact_examples() {
        let t = 6;
        let (x, y) = (Series2::<Rational>::x(t), Series2::<Rational>::y(t));
        let diff = &x - &y;
        assert_eq!(
            Series2::divide_exact_xy(&diff, &diff).unwrap(),
            Series2::one(t - 1)
        );
        let sq = &(&x * &x) - &(&y * &y);
        assert_eq!(
            Series2::divide_exact_xy(&sq, &diff).unwrap(),
            (&x + &y).truncate(t - 1)
        );
        let err = Series2::divide_exact_xy(&x, &diff).unwrap_err();
        assert!(err.to_string().contains("x^1 y^0"), "{err}");
    }

    #[test]
    fn gregory_generating_function_entry() {
        let t = 5;
        let lx = Series2::from_x(&log1p(t), t);
        let ly = Series2::from_y(&log1p(t), t);
        let (x, y) = (Series2::x(t), Series2::y(t));
        let num = &(&y * &(&lx * &lx)) - &(&x * &(&ly * &ly));
        let g = Series2::divide_exact_xy(&num, &(&lx - &ly)).unwrap();
        assert_eq!(g.coeff(2, 2), &rat(1, 12));
        assert!(g.is_symmetric());
    }

    #[test]
    fn shear_is_an_involution() {
        let s = Series2::from_fn(7, |m, n| rat((m * 3 + n) as i64 - 5, (n + 1) as i64));
        assert_eq!(s.shear().shear(), s);
    }

    #[test]
    fn bivariate_reciprocal() {
        let t = 6;
        let s = &Series2::<Rational>::one(t) + &(&Series2::x(t) + &Series2::y(t));
        assert_eq!(&s * &s.reciprocal().unwrap(), Series2::one(t));
    }

    #[test]
    fn json_matrix_marks_unknown_entries() {
        let v = Series2::<Rational>::x(1).to_json();
        assert_eq!(v.to_string(), r#"[["0","0"],["1",null]]"#);
    }

    fn admissible(order: usize) -> impl Strategy<Value = Series1<Rational>> {
        (
            (1i64..7, 1i64..5),
            prop::collection::vec((-6i64..7, 1i64..6), order - 1),
        )
            .prop_map(move |(lead, rest)| {
                let mut cs = vec![rat(0, 1), rat(lead.0, lead.1)];
                cs.extend(rest.into_iter().map(|(p, d)| rat(p, d)));
                Series1::new(cs, order)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn reversion_is_an_involution(s in admissible(12)) {
            let r = s.reversion().unwrap();
            prop_assert_eq!(r.reversion().unwrap(), s.clone());
            prop_assert_eq!(s.compose(&r).unwrap(), Series1::var(12));
        }

        #[test]
        fn newton_agrees_with_lagrange(s in admissible(10)) {
            prop_assert_eq!(s.reversion().unwrap(), s.reversion_lagrange().unwrap());
        }

        #[test]
        fn product_with_reciprocal_is_one(s in admissible(9)) {
            let u = &Series1::one(9) + &s;
            prop_assert_eq!(&u * &u.reciprocal().unwrap(), Series1::one(9));
        }
    }
}
