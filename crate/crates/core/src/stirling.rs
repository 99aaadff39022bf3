//! Stirling polynomials of the first kind and Stirling numbers of the second kind.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::arith::{int, Rational};
use crate::poly::Poly;

/// Row-wise memo for a triangular recurrence, grown under a write lock.
struct Triangle<T> {
    rows: RwLock<Vec<Vec<T>>>,
    next_row: fn(&[T], usize) -> Vec<T>,
}

impl<T: Clone> Triangle<T> {
    fn new(first: Vec<T>, next_row: fn(&[T], usize) -> Vec<T>) -> Self {
        Triangle {
            rows: RwLock::new(vec![first]),
            next_row,
        }
    }

    fn get(&self, n: usize, m: usize) -> T {
        if self.rows.read().unwrap().len() <= n {
            let mut rows = self.rows.write().unwrap();
            while rows.len() <= n {
                let k = rows.len() - 1;
                let row = (self.next_row)(&rows[k], k);
                rows.push(row);
            }
        }
        self.rows.read().unwrap()[n][m].clone()
    }
}

/// `[n+1; m]_x = [n; m-1]_x + (x + n) [n; m]_x`, row `n` has entries `0..=n`.
fn stirling1_next(row: &[Poly], n: usize) -> Vec<Poly> {
    let shift = Poly::new('x', vec![int(n as i64), Rational::one()]);
    let zero = Poly::new('x', vec![]);
    (0..=n + 1)
        .map(|m| {
            let left = if m > 0 {
                row[m - 1].clone()
            } else {
                zero.clone()
            };
            let stay = row.get(m).map_or_else(|| zero.clone(), |p| &shift * p);
            &left + &stay
        })
        .collect()
}

/// `S(n+1, m) = S(n, m-1) + m S(n, m)`.
fn stirling2_next(row: &[Rational], n: usize) -> Vec<Rational> {
    (0..=n + 1)
        .map(|m| {
            let left = if m > 0 {
                row[m - 1].clone()
            } else {
                Rational::zero()
            };
            let stay = row
                .get(m)
                .map_or_else(Rational::zero, |s| s * int(m as i64));
            left + stay
        })
        .collect()
}

fn first_kind() -> &'static Triangle<Poly> {
    static T: OnceLock<Triangle<Poly>> = OnceLock::new();
    T.get_or_init(|| Triangle::new(vec![Poly::constant('x', Rational::one())], stirling1_next))
}

fn second_kind() -> &'static Triangle<Rational> {
    static T: OnceLock<Triangle<Rational>> = OnceLock::new();
    T.get_or_init(|| Triangle::new(vec![Rational::one()], stirling2_next))
}

/// Coefficient of `y^m` in `(x+y)(x+y+1)...(x+y+n-1)`, a polynomial in `x`.
/// Zero when `m > n`.
pub fn stirling1_polynomial(n: usize, m: usize) -> Poly {
    if m > n {
        return Poly::new('x', vec![]);
    }
    first_kind().get(n, m)
}

/// Stirling number of the second kind; zero when `m > n`.
pub fn stirling2_number(n: usize, m: usize) -> Rational {
    if m > n {
        return Rational::zero();
    }
    second_kind().get(n, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factorial_q, rat};
    use crate::series::{lift, log1p, Series1};

    fn x(coeffs: &[i64]) -> Poly {
        Poly::new('x', coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn first_kind_table() {
        assert_eq!(stirling1_polynomial(0, 0), x(&[1]));
        assert_eq!(stirling1_polynomial(2, 1), x(&[1, 2]));
        assert_eq!(stirling1_polynomial(4, 2), x(&[11, 18, 6]));
        assert_eq!(stirling1_polynomial(4, 0), x(&[0, 6, 11, 6, 1]));
        assert_eq!(stirling1_polynomial(4, 1), x(&[6, 22, 18, 4]));
        assert_eq!(stirling1_polynomial(3, 2), x(&[3, 3]));
        assert!(stirling1_polynomial(2, 3).is_zero());
    }

    #[test]
    fn second_kind_values() {
        assert_eq!(stirling2_number(0, 0), rat(1, 1));
        assert_eq!(stirling2_number(3, 2), rat(3, 1));
        assert_eq!(stirling2_number(4, 2), rat(7, 1));
        assert_eq!(stirling2_number(5, 3), rat(25, 1));
        assert!(stirling2_number(4, 0).is_zero());
        assert!(stirling2_number(0, 3).is_zero());
    }

    #[test]
    fn first_kind_recursion_as_polynomials() {
        for n in 0..14 {
            for m in 1..=n + 1 {
                let lhs = stirling1_polynomial(n + 1, m);
                let rhs = &stirling1_polynomial(n, m - 1)
                    + &(&x(&[n as i64, 1]) * &stirling1_polynomial(n, m));
                assert_eq!(lhs, rhs, "n={n} m={m}");
            }
        }
    }

    /// `(1-t)^{-x} (-1)^m log^m(1-t) / m! = sum [n; m]_x t^n / n!`, with `x` symbolic.
    #[test]
    fn first_kind_generating_series() {
        let order = 10;
        let minus_log = -&log1p(order)
            .compose(&Series1::from_fn(order, |k| match k {
                1 => rat(-1, 1),
                _ => rat(0, 1),
            }))
            .unwrap();
        let xs = Poly::var('x');
        let base = lift(&minus_log).mul_coeff(&xs).exp().unwrap();
        let mut power = Series1::<Poly>::one(order);
        for m in 0..=order {
            let s = (&base * &power).scale(&(rat(1, 1) / factorial_q(m)));
            for n in 0..=order {
                let expected = stirling1_polynomial(n, m);
                assert_eq!(
                    s.coeff(n).scale(&factorial_q(n)).with_variable('x'),
                    expected,
                    "n={n} m={m}"
                );
            }
            power = &power * &lift(&minus_log);
        }
    }

    /// `(e^t - 1)^m / m! = sum S(n, m) t^n / n!`.
    #[test]
    fn second_kind_generating_series() {
        let order = 12;
        let e1 = crate::series::expm1(order);
        let mut power = Series1::<Rational>::one(order);
        for m in 0..=order {
            for n in 0..=order {
                let c = power.coeff(n) * factorial_q(n) / factorial_q(m);
                assert_eq!(c, stirling2_number(n, m), "n={n} m={m}");
            }
            power = &power * &e1;
        }
    }
}
