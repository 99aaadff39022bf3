//! Registry of exact identity checks.
//!
//! Each check sweeps a parameter range, compares two independently computed
//! exact values at every point, and stops at the first disagreement. There is
//! no tolerance anywhere: values are rationals or rational polynomials and are
//! compared with `==`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{factorial_q, int, rat, sign, Rational};
use crate::bernoulli::BernoulliCache;
use crate::error::{Error, Result};
use crate::gregory::{
    classical_gregory, g1, g1_integral, generalized_gregory, generalized_gregory_poly,
    gregory_integral, gtilde, gtilde_poly, gtilde_sum_product, lambda_polys, Family,
};
use crate::index_sets::{
    coefficient_c, coefficient_c_eval, coefficient_c_partial_poly, coefficient_c_poly, enumerate,
    CompositionSet, IndexFamily,
};
use crate::poly::Poly;
use crate::stirling::stirling2_number;

/// Largest `r` accepted by enumeration-backed checks.
pub const MAX_R: usize = 8;
/// Largest univariate series order, and largest Gregory table index.
pub const MAX_ORDER: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CheckId {
    #[serde(rename = "INIT_C1R")]
    InitC1r,
    #[serde(rename = "DECOMP")]
    Decomp,
    #[serde(rename = "SYM")]
    Sym,
    #[serde(rename = "UNION")]
    Union,
    #[serde(rename = "PROD")]
    Prod,
    #[serde(rename = "REC")]
    Rec,
    #[serde(rename = "C_EQ_G")]
    CEqG,
    #[serde(rename = "GTILDE_SYM")]
    GtildeSym,
    #[serde(rename = "INT_G")]
    IntG,
    #[serde(rename = "INT_G1")]
    IntG1,
    #[serde(rename = "ST2_ID")]
    St2Id,
    #[serde(rename = "CONV_ID")]
    ConvId,
    #[serde(rename = "COR_G")]
    CorG,
    #[serde(rename = "REC_A")]
    RecA,
    #[serde(rename = "LAMBDA_REC")]
    LambdaRec,
    #[serde(rename = "DCADL")]
    Dcadl,
    #[serde(rename = "INIT_A")]
    InitA,
    #[serde(rename = "C_EQ_G_A")]
    CEqGA,
}

impl CheckId {
    pub const ALL: [CheckId; 18] = [
        CheckId::InitC1r,
        CheckId::Decomp,
        CheckId::Sym,
        CheckId::Union,
        CheckId::Prod,
        CheckId::Rec,
        CheckId::CEqG,
        CheckId::GtildeSym,
        CheckId::IntG,
        CheckId::IntG1,
        CheckId::St2Id,
        CheckId::ConvId,
        CheckId::CorG,
        CheckId::RecA,
        CheckId::LambdaRec,
        CheckId::Dcadl,
        CheckId::InitA,
        CheckId::CEqGA,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::InitC1r => "INIT_C1R",
            CheckId::Decomp => "DECOMP",
            CheckId::Sym => "SYM",
            CheckId::Union => "UNION",
            CheckId::Prod => "PROD",
            CheckId::Rec => "REC",
            CheckId::CEqG => "C_EQ_G",
            CheckId::GtildeSym => "GTILDE_SYM",
            CheckId::IntG => "INT_G",
            CheckId::IntG1 => "INT_G1",
            CheckId::St2Id => "ST2_ID",
            CheckId::ConvId => "CONV_ID",
            CheckId::CorG => "COR_G",
            CheckId::RecA => "REC_A",
            CheckId::LambdaRec => "LAMBDA_REC",
            CheckId::Dcadl => "DCADL",
            CheckId::InitA => "INIT_A",
            CheckId::CEqGA => "C_EQ_G_A",
        }
    }

    /// The identity being checked, in plain notation.
    pub fn description(self) -> &'static str {
        match self {
            CheckId::InitC1r => "C_{1,r} = (-1)^r/(r+1)",
            CheckId::Decomp => "C^(..,d_{l-1},0,1,d_{l+2},..) = C^(d_1..d_{l-1}) C^(1,d_{l+2},..)",
            CheckId::Sym => "C_{i+1,r} = C_{r-i+1,r}, tail reversal is a bijection",
            CheckId::Union => {
                "S_{i,k,r} = S_{i,k-1,r} + S0_{i,k-1,r}; C_{i,r} = C_{i,i,r} + sum C0_{i,k,r}"
            }
            CheckId::Prod => "C0_{i,k,r} = C_{i,k} C_{r-k,r-k}",
            CheckId::Rec => "recurrence for C_{i+1,r}",
            CheckId::CEqG => "C_{i,r} (enumeration) = G_{i,r-i+2} (series)",
            CheckId::GtildeSym => {
                "Gtilde series = sum-product; Gtilde_{m,n} = Gtilde_{n-1,m+1}, numeric and in a"
            }
            CheckId::IntG => "G_{m,n} = 2(-1)^{n-1}/n! int binom(t,m) [n;2]_{t-1} dt",
            CheckId::IntG1 => "G1_{m,n} = (-1)^n/n! int binom(t,m) [n;1]_{t-1} dt",
            CheckId::St2Id => "sum k!S(m,k) l!S(n,l) G_{k,l} = 1 - m!n!/(m+n-1)!",
            CheckId::ConvId => "sum (-1)^{k+l} G_{k,l}/(m-k+n-l+1) = 1/(m+n-1) - 1/(mn)",
            CheckId::CorG => "sum l!S(n,l) G_l = 1/(n+1); sum (-1)^l G_l/(n-l+1) = [n=0]",
            CheckId::RecA => "recurrence for C_{i+1,r}(a) as polynomials",
            CheckId::LambdaRec => {
                "lambda_n' = sum k lambda_{n-k} lambda_k; lambda_n(0), lambda_n(1), lambda_1"
            }
            CheckId::Dcadl => {
                "d/da_l C_{1,r}(a_1..a_r) = -sum_k C_{1,k-1} C_{1,r-k}; diagonal corollary"
            }
            CheckId::InitA => "C_{1,r}(a) = G_{1,r+1}(a) = (-1)^r lambda_{r+1}(a)",
            CheckId::CEqGA => "C_{i,r}(a) (enumeration) = G_{i,r-i+2}(a) (series)",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// Upper ends of the swept ranges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// `r` for numeric enumeration checks.
    pub max_r: usize,
    /// `r` for polynomial (Hurwitz) enumeration checks.
    pub max_r_poly: usize,
    /// `r` for the partial-derivative check.
    pub max_r_partial: usize,
    /// `m, n` for the integral formulas.
    pub max_mn_integral: usize,
    /// `m, n` for the Stirling / convolution identities and Gtilde symmetry.
    pub max_mn_identity: usize,
    /// `n` for univariate-series checks.
    pub max_n_series: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
}

impl Profile {
    pub fn bounds(self) -> Bounds {
        match self {
            Profile::Quick => Bounds {
                max_r: 6,
                max_r_poly: 4,
                max_r_partial: 4,
                max_mn_integral: 6,
                max_mn_identity: 8,
                max_n_series: 10,
            },
            Profile::Full => Bounds {
                max_r: 8,
                max_r_poly: 6,
                max_r_partial: 5,
                max_mn_integral: 8,
                max_mn_identity: 10,
                max_n_series: 14,
            },
        }
    }
}

impl FromStr for Profile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            other => Err(Error::Parameter(format!("unknown profile {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check_id: CheckId,
    pub range: String,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

type Outcome = std::result::Result<(), Counterexample>;

fn ensure_eq<T: PartialEq + fmt::Display>(
    lhs: &T,
    rhs: &T,
    params: impl FnOnce() -> String,
) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Counterexample {
            params: params(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }
}

fn ensure_sets(
    lhs: &CompositionSet,
    rhs: &CompositionSet,
    params: impl FnOnce() -> String,
) -> Outcome {
    if lhs.same_members(rhs) {
        Ok(())
    } else {
        let show = |s: &CompositionSet| {
            format!(
                "{:?}",
                s.iter().map(|c| c.parts().to_vec()).collect::<Vec<_>>()
            )
        };
        Err(Counterexample {
            params: params(),
            lhs: show(lhs),
            rhs: show(rhs),
        })
    }
}

fn set(family: IndexFamily) -> CompositionSet {
    enumerate(&family).expect("check ranges only build valid families")
}

/// `C_{i,r}` for `1 <= i <= r <= max_r`, by enumeration; `c[r][i]`.
fn c_table(max_r: usize, bern: &BernoulliCache) -> Vec<Vec<Rational>> {
    (0..=max_r)
        .map(|r| {
            (0..=r)
                .map(|i| match i {
                    0 => Rational::zero(),
                    _ => coefficient_c(&set(IndexFamily::primitive(i, r)), bern),
                })
                .collect()
        })
        .collect()
}

/// `C_{i,r}(a)` by enumeration; `c[r][i]`.
fn c_poly_table(max_r: usize, bern: &BernoulliCache) -> Vec<Vec<Poly>> {
    (0..=max_r)
        .map(|r| {
            (0..=r)
                .map(|i| match i {
                    0 => Poly::zero(),
                    _ => coefficient_c_poly(&set(IndexFamily::primitive(i, r)), bern),
                })
                .collect()
        })
        .collect()
}

fn d_vectors(len: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..1u32 << len).map(move |mask| (0..len).map(|j| ((mask >> j) & 1) as u8).collect())
}

fn check_init_c1r(b: &Bounds, bern: &BernoulliCache) -> Outcome {
    for r in 1..=b.max_r {
        let c = coefficient_c(&set(IndexFamily::primitive(1, r)), bern);
        ensure_eq(&c, &(sign(r) / int(r as i64 + 1)), || format!("r={r}"))?;
    }
    Ok(())
}

fn check_decomp(b: &Bounds, bern: &BernoulliCache) -> Outcome {
    let mut memo: HashMap<Vec<u8>, Rational> = HashMap::new();
    let mut c = |d: Vec<u8>| -> Rational {
        memo.entry(d.clone())
            .or_insert_with(|| coefficient_c(&set(IndexFamily::D { d }), bern))
            .clone()
    };
    for r in 3..=b.max_r {
        for d in d_vectors(r - 1) {
            // 1-based split point l with d_l = 0 and d_{l+1} = 1, 0 < l < r - 1.
            for l in 1..r - 1 {
                if d[l - 1] != 0 || d[l] != 1 {
                    continue;
                }
                let left = d[..l - 1].to_vec();
                let mut right = vec![1u8];
                right.extend_from_slice(&d[l + 1..]);
                let lhs = c(d.clone());
                let rhs = c(left) * c(right);
                ensure_eq(&lhs, &rhs, || format!("r={r} d={d:?} l={l}"))?;
            }
        }
    }
    Ok(())
}

fn check_sym(b: &Bounds, bern: &BernoulliCache) -> Outcome {
    for r in 2..=b.max_r {
        for i in 1..r {
            let from = set(IndexFamily::Ikr { i: i + 1, k: r, r });
            let to = set(IndexFamily::Ikr {
                i: r - i + 1,
                k: r,
                r,
            });
            let mut perm = vec![0];
            perm.extend((1..r).rev());
            let image = from.permute(&perm).expect("valid permutation");
            ensure_sets(&image, &to, || format!("tail reversal, r={r} i={i}"))?;
            let (lhs, rhs) = (coefficient_c(&from, bern), coefficient_c(&to, bern));
            ensure_eq(&lhs, &rhs, || format!("r={r} i={i}"))?;
        }
    }
    Ok(())
}

fn check_union(b: &Bounds, bern: &BernoulliCache) -> Outcome {
    for r in 1..=b.max_r {
        for i in 1..=r {
            for k in i + 1..=r {
                let whole = set(IndexFamily::Ikr { i, k, r });
                let a = set(IndexFamily::Ikr { i, k: k - 1, r });
                let z = set(IndexFamily::Ikr0 { i, k: k - 1, r });
                if let Some(c) = a.iter().find(|c| z.contains(c)) {
                    return Err(Counterexample {
                        params: format!("disjointness, i={i} k={k} r={r}"),
                        lhs: format!("{:?}", c.parts()),
                        rhs: "in both parts".into(),
                    });
                }
                let union = CompositionSet::from_members(r, a.iter().chain(z.iter()).cloned())
                    .expect("common length");
                ensure_sets(&union, &whole, || format!("union, i={i} k={k} r={r}"))?;
            }
            let lhs = coefficient_c(&set(IndexFamily::primitive(i, r)), bern);
            let rhs = (i..r).fold(
                coefficient_c(&set(IndexFamily::Ikr { i, k: i, r }), bern),
                |acc, k| acc + coefficient_c(&set(IndexFamily::Ikr0 { i, k, r }), bern),
            );
            ensure_eq(&lhs, &rhs, || format!("i={i} r={r}"))?;
        }
    }
    Ok(())
}

fn check_prod(b: &Bounds, bern: &BernoulliCache) -> Outcome {
    let c = c_table(b.max_r, bern);
    for r in 2..=b.max_r {
        for k in 1..r {
            for i in 1..=k {
                let lhs = coefficient_c(&set(IndexFamily::Ikr0 { i, k, r }), bern);
                let rhs = &c[k][i] * &c[r - k][r - k];
                ensure_eq(&lhs, &rhs, || format!("i={i} k={k} r={r}"))?;
            }
        }
    }
    Ok(())
}

/// Right-hand side of the `C_{i+1,r}` recurrence over any coefficient table.
fn recurrence_rhs<T: crate::series::Ring>(c: &[Vec<T>], i: usize, r: usize) -> T {
    let plus = (r - i + 1..r).fold(c[r][i].clone(), |acc, k| {
        acc.add_ref(&c[k][r - i + 1].mul_ref(&c[r - k][r - k]))
    });
    (i..r).fold(plus, |acc, k| acc - c[k][i].mul_ref(&c[r - k][r - k]))
}

fn check_rec(b: &Bounds, bern: &BernoulliCache) -> Outcome {
    let c = c_table(b.max_r, bern);
    for r in 2..=b.max_r {
        for i in 1..r {
            ensure_eq(&c[r][i + 1], &recurrence_rhs(&c, i, r), || {
                format!("i={i} r={r}")
            })?;
        }
    }
    Ok(())
}

fn check_c_eq_g(b: &Bounds, bern: &BernoulliCache) -> Outcome {
    let c = c_table(b.max_r, bern);
    let g = generalized_gregory(b.max_r, b.max_r + 1);
    for r in 1..=b.max_r {
        for i in 1..=r {
            ensure_eq(&c[r][i], g.get(i, r - i + 2), || format!("i={i} r={r}"))?;
        }
    }
    Ok(())
}

fn check_gtilde_sym(b: &Bounds, _bern: &BernoulliCache) -> Outcome {
    let k = b.max_mn_identity;
    let series = gtilde(k + 1, k + 1);
    let g = generalized_gregory(k + 1, k + 1);
    let sum_product = gtilde_sum_product(&g, Family::Gtilde, k + 1, k + 1);
    for m in 1..=k + 1 {
        for n in 1..=k + 1 {
            ensure_eq(series.get(m, n), sum_product.get(m, n), || {
                format!("series vs sum-product, m={m} n={n}")
            })?;
        }
    }
    for m in 1..=k {
        for n in 2..=k {
            ensure_eq(series.get(m, n), series.get(n - 1, m + 1), || {
                format!("m={m} n={n}")
            })?;
        }
    }
    let kp = b.max_r_poly;
    let series = gtilde_poly(kp + 1, kp + 1);
    let g = generalized_gregory_poly(kp + 1, kp + 1);
    let sum_product = gtilde_sum_product(&g, Family::GtildePoly, kp + 1, kp + 1);
    for m in 1..=kp + 1 {
        for n in 1..=kp + 1 {
            ensure_eq(series.get(m, n), sum_product.get(m, n), || {
                format!("series vs sum-product in a, m={m} n={n}")
            })?;
        }
    }
    for m in 1..=kp {
        for n in 2..=kp {
            ensure_eq(series.get(m, n), series.get(n - 1, m + 1), || {
                format!("in a, m={m} n={n}")
            })?;
        }
    }
    Ok(())
}

fn check_int_g(b: &Bounds, _bern: &BernoulliCache) -> Outcome {
    let k = b.max_mn_integral;
    let g = generalized_gregory(k, k);
    for m in 1..=k {
        for n in 2..=k {
            let lhs = gregory_integral(m, n).expect("m >= 1, n >= 2");
            ensure_eq(&lhs, g.get(m, n), || format!("m={m} n={n}"))?;
        }
    }
    Ok(())
}

fn check_int_g1(b: &Bounds, _bern: &BernoulliCache) -> Outcome {
    let k = b.max_mn_integral;
    let g = g1(k, k);
    for m in 1..=k {
        for n in 1..=k {
            let lhs = g1_integral(m, n).expect("m, n >= 1");
            ensure_eq(&lhs, g.get(m, n), || format!("m={m} n={n}"))?;
        }
    }
    Ok(())
}

fn check_st2_id(b: &Bounds, _bern: &BernoulliCache) -> Outcome {
    let k = b.max_mn_identity;
    let g = generalized_gregory(k, k);
    let weight = |m: usize, j: usize| factorial_q(j) * stirling2_number(m, j);
    for m in 2..=k {
        for n in 2..=k {
            let mut lhs = Rational::zero();
            for kk in 2..=m {
                for l in 2..=n {
                    lhs += weight(m, kk) * weight(n, l) * g.get(kk, l);
                }
            }
            let rhs = Rational::one() - factorial_q(m) * factorial_q(n) / factorial_q(m + n - 1);
            ensure_eq(&lhs, &rhs, || format!("m={m} n={n}"))?;
        }
    }
    Ok(())
}

fn check_conv_id(b: &Bounds, _bern: &BernoulliCache) -> Outcome {
    let k = b.max_mn_identity;
    let g = generalized_gregory(k, k);
    for m in 2..=k {
        for n in 2..=k {
            let mut lhs = Rational::zero();
            for kk in 2..=m {
                for l in 2..=n {
                    lhs += sign(kk + l) * g.get(kk, l) / int((m - kk + n - l + 1) as i64);
                }
            }
            let rhs = rat(1, (m + n - 1) as i64) - rat(1, (m * n) as i64);
            ensure_eq(&lhs, &rhs, || format!("m={m} n={n}"))?;
        }
    }
    Ok(())
}

fn check_cor_g(b: &Bounds, _bern: &BernoulliCache) -> Outcome {
    let n_max = b.max_n_series;
    let g = classical_gregory(n_max);
    for n in 0..=n_max {
        let lhs: Rational = (0..=n)
            .map(|l| factorial_q(l) * stirling2_number(n, l) * &g[l])
            .sum();
        ensure_eq(&lhs, &rat(1, n as i64 + 1), || {
            format!("Stirling sum, n={n}")
        })?;
        let lhs: Rational = (0..=n)
            .map(|l| sign(l) * &g[l] / int((n - l + 1) as i64))
            .sum();
        let delta = if n == 0 {
            Rational::one()
        } else {
            Rational::zero()
        };
        ensure_eq(&lhs, &delta, || format!("convolution, n={n}"))?;
    }
    Ok(())
}

fn check_rec_a(b: &Bounds, bern: &BernoulliCache) -> Outcome {
    let c = c_poly_table(b.max_r_poly, bern);
    for r in 2..=b.max_r_poly {
        for i in 1..r {
            ensure_eq(&c[r][i + 1], &recurrence_rhs(&c, i, r), || {
                format!("i={i} r={r}")
            })?;
        }
    }
    Ok(())
}

fn check_lambda_rec(b: &Bounds, _bern: &BernoulliCache) -> Outcome {
    let n_max = b.max_n_series;
    let lam = lambda_polys(n_max);
    let at = |n: usize| &lam[n - 1];
    ensure_eq(at(1), &Poly::constant('a', Rational::one()), || {
        "lambda_1".into()
    })?;
    for n in 1..=n_max {
        let rhs = (1..n).fold(Poly::new('a', vec![]), |acc, k| {
            &acc + &(at(n - k) * at(k)).scale(&int(k as i64))
        });
        ensure_eq(&at(n).derivative(), &rhs, || format!("derivative, n={n}"))?;
        ensure_eq(&at(n).eval(&int(0)), &(sign(n - 1) / int(n as i64)), || {
            format!("a=0, n={n}")
        })?;
        ensure_eq(&at(n).eval(&int(1)), &rat(1, n as i64), || {
            format!("a=1, n={n}")
        })?;
    }
    Ok(())
}

/// Fixed rational anchor points for the multivariate derivative identity.
pub const DCADL_ANCHORS: [(i64, i64); 8] = [
    (2, 3),
    (-1, 5),
    (7, 4),
    (0, 1),
    (5, 2),
    (-3, 7),
    (1, 1),
    (11, 6),
];

fn check_dcadl(b: &Bounds, bern: &BernoulliCache) -> Outcome {
    let s = |r: usize| set(IndexFamily::Sr { r });
    for r in 1..=b.max_r_partial {
        for shift in 0..3 {
            let point: Vec<Rational> = (0..r)
                .map(|j| {
                    let (p, q) = DCADL_ANCHORS[(j + 3 * shift + r) % DCADL_ANCHORS.len()];
                    rat(p, q)
                })
                .collect();
            let without = |slots: &[Rational], l: usize| -> Vec<Rational> {
                slots
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j + 1 != l)
                    .map(|(_, q)| q.clone())
                    .collect()
            };
            for l in 1..=r {
                let lhs = coefficient_c_partial_poly(&s(r), l, &without(&point, l), bern)
                    .expect("slot in range")
                    .derivative();
                let mut rhs = Poly::new('a', vec![]);
                for k in l..=r {
                    let head = if k > l {
                        coefficient_c_partial_poly(&s(k - 1), l, &without(&point[..k - 1], l), bern)
                            .expect("slot in range")
                    } else {
                        let v =
                            coefficient_c_eval(&s(k - 1), &point[..k - 1], bern).expect("length");
                        Poly::constant('a', v)
                    };
                    let tail = coefficient_c_eval(&s(r - k), &point[k..], bern).expect("length");
                    rhs = &rhs - &head.scale(&tail);
                }
                ensure_eq(&lhs, &rhs, || {
                    let pt: Vec<String> = point.iter().map(|q| q.to_string()).collect();
                    format!("r={r} l={l} anchor=({})", pt.join(", "))
                })?;
            }
        }
        let c = |j: usize| coefficient_c_poly(&s(j), bern);
        let lhs = c(r).derivative();
        let rhs = (1..=r).fold(Poly::new('a', vec![]), |acc, k| {
            &acc - &(&c(r - k) * &c(k - 1)).scale(&int(k as i64))
        });
        ensure_eq(&lhs, &rhs, || format!("diagonal, r={r}"))?;
    }
    Ok(())
}

fn check_init_a(b: &Bounds, bern: &BernoulliCache) -> Outcome {
    let r_max = b.max_r_poly;
    let g = generalized_gregory_poly(1, r_max + 1);
    let lam = lambda_polys(r_max + 1);
    for r in 1..=r_max {
        let c = coefficient_c_poly(&set(IndexFamily::Sr { r }), bern);
        ensure_eq(&c, g.get(1, r + 1), || {
            format!("enumeration vs series, r={r}")
        })?;
        ensure_eq(g.get(1, r + 1), &lam[r].scale(&sign(r)), || {
            format!("series vs lambda, r={r}")
        })?;
    }
    Ok(())
}

fn check_c_eq_g_a(b: &Bounds, bern: &BernoulliCache) -> Outcome {
    let c = c_poly_table(b.max_r_poly, bern);
    let g = generalized_gregory_poly(b.max_r_poly, b.max_r_poly + 1);
    for r in 1..=b.max_r_poly {
        for i in 1..=r {
            ensure_eq(&c[r][i], g.get(i, r - i + 2), || format!("i={i} r={r}"))?;
        }
    }
    Ok(())
}

fn range_of(id: CheckId, b: &Bounds) -> String {
    match id {
        CheckId::InitC1r
        | CheckId::Decomp
        | CheckId::Sym
        | CheckId::Union
        | CheckId::Prod
        | CheckId::Rec
        | CheckId::CEqG => format!("r <= {}", b.max_r),
        CheckId::RecA | CheckId::InitA | CheckId::CEqGA => format!("r <= {}", b.max_r_poly),
        CheckId::Dcadl => format!("r <= {}", b.max_r_partial),
        CheckId::IntG | CheckId::IntG1 => format!("m, n <= {}", b.max_mn_integral),
        CheckId::St2Id | CheckId::ConvId => format!("m, n <= {}", b.max_mn_identity),
        CheckId::GtildeSym => format!("m, n <= {} (in a: {})", b.max_mn_identity, b.max_r_poly),
        CheckId::CorG | CheckId::LambdaRec => format!("n <= {}", b.max_n_series),
    }
}

fn validate(b: &Bounds) -> Result<()> {
    let too_big = |what: &str, v: usize, max: usize| {
        Err(Error::Parameter(format!(
            "{what} = {v} exceeds the supported limit {max}"
        )))
    };
    for (what, v) in [
        ("max_r", b.max_r),
        ("max_r_poly", b.max_r_poly),
        ("max_r_partial", b.max_r_partial),
    ] {
        if v > MAX_R {
            return too_big(what, v, MAX_R);
        }
    }
    for (what, v) in [
        ("max_mn_integral", b.max_mn_integral),
        ("max_mn_identity", b.max_mn_identity),
        ("max_n_series", b.max_n_series),
    ] {
        if v > MAX_ORDER {
            return too_big(what, v, MAX_ORDER);
        }
    }
    Ok(())
}

/// Runs one check over `bounds` with the given Bernoulli source.
pub fn run_check(id: CheckId, bounds: &Bounds, bern: &BernoulliCache) -> Result<CheckReport> {
    validate(bounds)?;
    let start = Instant::now();
    let outcome = match id {
        CheckId::InitC1r => check_init_c1r(bounds, bern),
        CheckId::Decomp => check_decomp(bounds, bern),
        CheckId::Sym => check_sym(bounds, bern),
        CheckId::Union => check_union(bounds, bern),
        CheckId::Prod => check_prod(bounds, bern),
        CheckId::Rec => check_rec(bounds, bern),
        CheckId::CEqG => check_c_eq_g(bounds, bern),
        CheckId::GtildeSym => check_gtilde_sym(bounds, bern),
        CheckId::IntG => check_int_g(bounds, bern),
        CheckId::IntG1 => check_int_g1(bounds, bern),
        CheckId::St2Id => check_st2_id(bounds, bern),
        CheckId::ConvId => check_conv_id(bounds, bern),
        CheckId::CorG => check_cor_g(bounds, bern),
        CheckId::RecA => check_rec_a(bounds, bern),
        CheckId::LambdaRec => check_lambda_rec(bounds, bern),
        CheckId::Dcadl => check_dcadl(bounds, bern),
        CheckId::InitA => check_init_a(bounds, bern),
        CheckId::CEqGA => check_c_eq_g_a(bounds, bern),
    };
    Ok(CheckReport {
        check_id: id,
        range: range_of(id, bounds),
        passed: outcome.is_ok(),
        counterexample: outcome.err(),
        elapsed: start.elapsed(),
    })
}

/// Runs every registered check in registry order, handing each report to
/// `sink` as soon as it is produced.
pub fn run_all_with(
    profile: Profile,
    bern: &BernoulliCache,
    mut sink: impl FnMut(&CheckReport),
) -> Vec<CheckReport> {
    let bounds = profile.bounds();
    CheckId::ALL
        .iter()
        .map(|&id| {
            let report = run_check(id, &bounds, bern).expect("profile bounds are within limits");
            sink(&report);
            report
        })
        .collect()
}

pub fn run_all(profile: Profile, bern: &BernoulliCache) -> Vec<CheckReport> {
    run_all_with(profile, bern, |_| {})
}
