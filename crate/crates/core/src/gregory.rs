//! Gregory-type coefficient families.
//!
//! The bivariate families are all built from one univariate "logarithm" `l`:
//! `l(x) = log(1 + x)` for the numeric coefficients, and
//! `l(x) = -L(a, -x)` for the polynomial ones, where `L(a, t)` is the
//! compositional inverse of `e^{-at}(e^t - 1)`. The generating series are
//!
//! ```text
//! G(x, y)      = (y l(x)^2 - x l(y)^2) / (l(x) - l(y))
//! G1(x, y)     = (y l(x) - x l(y)) / (l(x) - l(y))
//! Gtilde(x, y) = G1(x, y) * (l(x)/x + l(y)/y - 1) = sum Gtilde_{m,n+1} x^m y^n
//! ```
//!
//! Each division by `l(x) - l(y)` goes through [`Series2::divide_exact_xy`].
//! The alternate routes (sum-product, integrals) exist to cross-check these.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{factorial_q, int, sign, Rational};
use crate::error::{Error, Result};
use crate::poly::{binomial_poly, Poly};
use crate::series::{expm1, lift, log1p, x_over_log1p, Ring, Series1, Series2};
use crate::stirling::stirling1_polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    Classical,
    G,
    Gtilde,
    G1,
    Gpoly,
    GtildePoly,
    Lambda,
}

/// A rectangular block of a coefficient family, rows `m`, columns `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct GregoryTable<T> {
    pub family: Family,
    pub first_row: usize,
    pub first_col: usize,
    rows: Vec<Vec<T>>,
}

impl<T: Clone> GregoryTable<T> {
    pub fn from_fn(
        family: Family,
        rows: std::ops::RangeInclusive<usize>,
        cols: std::ops::RangeInclusive<usize>,
        mut f: impl FnMut(usize, usize) -> T,
    ) -> Self {
        let (first_row, first_col) = (*rows.start(), *cols.start());
        let rows = rows
            .map(|m| cols.clone().map(|n| f(m, n)).collect())
            .collect();
        GregoryTable {
            family,
            first_row,
            first_col,
            rows,
        }
    }

    pub fn get(&self, m: usize, n: usize) -> &T {
        assert!(
            m >= self.first_row
                && n >= self.first_col
                && m <= self.last_row()
                && n <= self.last_col(),
            "({m}, {n}) outside the {:?} table",
            self.family
        );
        &self.rows[m - self.first_row][n - self.first_col]
    }

    pub fn last_row(&self) -> usize {
        self.first_row + self.rows.len() - 1
    }

    pub fn last_col(&self) -> usize {
        self.first_col + self.rows.first().map_or(0, Vec::len) - 1
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn map<S: Clone>(&self, f: impl Fn(&T) -> S) -> GregoryTable<S> {
        GregoryTable {
            family: self.family,
            first_row: self.first_row,
            first_col: self.first_col,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }
}

impl GregoryTable<Poly> {
    pub fn eval(&self, at: &Rational) -> GregoryTable<Rational> {
        self.map(|p| p.eval(at))
    }
}

/// `l(x)` and `l(y)` embedded at total order `order`.
fn log_pair<R: Ring>(ell: &Series1<R>, order: usize) -> (Series2<R>, Series2<R>) {
    (Series2::from_x(ell, order), Series2::from_y(ell, order))
}

/// `G(x, y)` to total order `order`; `ell` must be known to `order + 1`.
pub fn gregory_series<R: Ring>(ell: &Series1<R>, order: usize) -> Result<Series2<R>> {
    let t = order + 1;
    let (lx, ly) = log_pair(ell, t);
    let (x, y) = (Series2::x(t), Series2::y(t));
    let num = &(&y * &(&lx * &lx)) - &(&x * &(&ly * &ly));
    Series2::divide_exact_xy(&num, &(&lx - &ly))
}

/// `G1(x, y)` to total order `order`; `ell` must be known to `order + 1`.
pub fn g1_series<R: Ring>(ell: &Series1<R>, order: usize) -> Result<Series2<R>> {
    let t = order + 1;
    let (lx, ly) = log_pair(ell, t);
    let (x, y) = (Series2::x(t), Series2::y(t));
    let num = &(&y * &lx) - &(&x * &ly);
    Series2::divide_exact_xy(&num, &(&lx - &ly))
}

/// `Gtilde(x, y) = sum Gtilde_{m,n+1} x^m y^n` to total order `order`.
pub fn gtilde_series<R: Ring>(ell: &Series1<R>, order: usize) -> Result<Series2<R>> {
    let g1 = g1_series(ell, order)?;
    let ell_over = ell.truncate(order + 1).shift_down(1)?;
    let (ex, ey) = log_pair(&ell_over, order);
    let factor = &(&ex + &ey) - &Series2::one(order);
    Ok(&g1 * &factor)
}

/// `G_0 ..= G_n` from `x / log(1 + x)`.
pub fn classical_gregory(n: usize) -> Vec<Rational> {
    x_over_log1p(n).coeffs().to_vec()
}

/// `G_{m,n}` for `0 <= m <= rows`, `0 <= n <= cols`.
pub fn generalized_gregory(rows: usize, cols: usize) -> GregoryTable<Rational> {
    let order = rows + cols;
    let g = gregory_series(&log1p(order + 1), order).expect("log(1+x) is admissible");
    GregoryTable::from_fn(Family::G, 0..=rows, 0..=cols, |m, n| g.coeff(m, n).clone())
}

fn gtilde_from_series<R: Ring>(
    family: Family,
    ell: &Series1<R>,
    g: &Series2<R>,
    rows: usize,
    cols: usize,
) -> Result<GregoryTable<R>> {
    let order = rows + cols - 1;
    let gt = gtilde_series(ell, order)?;
    Ok(GregoryTable::from_fn(family, 1..=rows, 1..=cols, |m, n| {
        if n == 1 {
            g.coeff(m, 1).clone()
        } else {
            gt.coeff(m, n - 1).clone()
        }
    }))
}

/// `Gtilde_{m,n}` for `1 <= m <= rows`, `1 <= n <= cols`, from the generating series.
/// The `n = 1` column is `G_{m,1}`.
pub fn gtilde(rows: usize, cols: usize) -> GregoryTable<Rational> {
    let order = rows + cols;
    let ell = log1p(order + 1);
    let g = gregory_series(&ell, order).expect("log(1+x) is admissible");
    gtilde_from_series(Family::Gtilde, &ell, &g, rows.max(1), cols.max(1)).expect("admissible")
}

/// `Gtilde_{m,n} = G_{m,n} + sum_{j=0}^{m-2} G_{n-1,j+2} G_{m-j-1,2}`, read off a
/// `G` table that must cover indices up to `max(rows, cols)`.
pub fn gtilde_sum_product<T: Ring>(
    g: &GregoryTable<T>,
    family: Family,
    rows: usize,
    cols: usize,
) -> GregoryTable<T> {
    GregoryTable::from_fn(family, 1..=rows, 1..=cols, |m, n| {
        (0..m.saturating_sub(1)).fold(g.get(m, n).clone(), |acc, j| {
            acc.add_ref(&g.get(n - 1, j + 2).mul_ref(g.get(m - j - 1, 2)))
        })
    })
}

/// `G^{(1)}_{m,n}` for `0 <= m <= rows`, `0 <= n <= cols`.
pub fn g1(rows: usize, cols: usize) -> GregoryTable<Rational> {
    let order = rows + cols;
    let s = g1_series(&log1p(order + 1), order).expect("log(1+x) is admissible");
    GregoryTable::from_fn(Family::G1, 0..=rows, 0..=cols, |m, n| s.coeff(m, n).clone())
}

/// `[n; k]_{t-1}` as a polynomial in `t`.
fn stirling1_shifted(n: usize, k: usize) -> Poly {
    stirling1_polynomial(n, k).compose(&Poly::new('t', vec![int(-1), Rational::one()]))
}

/// `G_{m,n} = 2 (-1)^{n-1} / n! * int_0^1 binom(t, m) [n; 2]_{t-1} dt`.
pub fn gregory_integral(m: usize, n: usize) -> Result<Rational> {
    if m < 1 || n < 2 {
        return Err(Error::Parameter(format!(
            "integral formula needs m >= 1 and n >= 2, got ({m}, {n})"
        )));
    }
    let integrand = &binomial_poly(m) * &stirling1_shifted(n, 2);
    Ok(int(2) * sign(n - 1) / factorial_q(n) * integrand.integrate_01())
}

/// `G^{(1)}_{m,n} = (-1)^n / n! * int_0^1 binom(t, m) [n; 1]_{t-1} dt`.
pub fn g1_integral(m: usize, n: usize) -> Result<Rational> {
    if m < 1 || n < 1 {
        return Err(Error::Parameter(format!(
            "integral formula needs m, n >= 1, got ({m}, {n})"
        )));
    }
    let integrand = &binomial_poly(m) * &stirling1_shifted(n, 1);
    Ok(sign(n) / factorial_q(n) * integrand.integrate_01())
}

/// `L(a, t) = sum lambda_n(a) t^n`, the inverse of `e^{-at}(e^t - 1)`.
pub fn l_series(order: usize) -> Series1<Poly> {
    let a = Poly::var('a');
    let e_minus_at = Series1::from_fn(order, |k| {
        (-&a).pow(k).scale(&(Rational::one() / factorial_q(k)))
    });
    let f = &e_minus_at * &lift(&expm1(order));
    f.reversion()
        .expect("e^{-at}(e^t - 1) has unit linear coefficient")
        .map(|p| p.clone().with_variable('a'))
}

/// `lambda_1(a), ..., lambda_n(a)`; entry `k` holds `lambda_{k+1}`.
pub fn lambda_polys(n: usize) -> Vec<Poly> {
    let l = l_series(n.max(1));
    (1..=n).map(|k| l.coeff(k)).collect()
}

/// `-L(a, -x) = sum (-1)^{n-1} lambda_n(a) x^n`.
pub fn hurwitz_log(order: usize) -> Series1<Poly> {
    let l = l_series(order.max(1)).truncate(order);
    Series1::from_fn(order, |n| match n {
        0 => Poly::zero(),
        _ => l.coeff(n).scale(&sign(n - 1)),
    })
}

/// `G_{m,n}(a)` for `0 <= m <= rows`, `0 <= n <= cols`.
pub fn generalized_gregory_poly(rows: usize, cols: usize) -> GregoryTable<Poly> {
    let order = rows + cols;
    let g = gregory_series(&hurwitz_log(order + 1), order).expect("-L(a,-x) is admissible");
    GregoryTable::from_fn(Family::Gpoly, 0..=rows, 0..=cols, |m, n| {
        g.coeff(m, n).clone().with_variable('a')
    })
}

/// `Gtilde_{m,n}(a)` for `1 <= m <= rows`, `1 <= n <= cols`, from the generating series.
pub fn gtilde_poly(rows: usize, cols: usize) -> GregoryTable<Poly> {
    let order = rows + cols;
    let ell = hurwitz_log(order + 1);
    let g = gregory_series(&ell, order).expect("-L(a,-x) is admissible");
    gtilde_from_series(Family::GtildePoly, &ell, &g, rows.max(1), cols.max(1))
        .expect("admissible")
        .map(|p| p.clone().with_variable('a'))
}

#[cfg(test)]
impl<T> GregoryTable<T> {
    fn with_family(mut self, family: Family) -> Self {
        self.family = family;
        self
    }
}
