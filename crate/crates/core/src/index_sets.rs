//! Constrained composition sets and their Bernoulli-weighted sums.
//!
//! Every family is a set of tuples `(n_1, ..., n_r)` of non-negative integers
//! with a fixed total, cut out by inequalities on prefix sums
//! `P_j = n_1 + ... + n_j`. Suffix conditions `n_{j+1} + ... + n_r <= c` are
//! rewritten as `P_j >= total - c`, so enumeration is a single backtracking
//! pass with a lower and upper bound per prefix.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{sign, Rational};
use crate::bernoulli::BernoulliCache;
use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Parameters of one composition family. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "UPPERCASE")]
pub enum IndexFamily {
    /// `S^{(d_1, ..., d_{r-1})}`: `d_j = 0` asks `n_{j+1}+...+n_r <= r-j`,
    /// `d_j = 1` asks `n_1+...+n_j < j`. The empty vector gives `{(1)}`.
    D { d: Vec<u8> },
    /// `S_{i,k,r}`.
    Ikr { i: usize, k: usize, r: usize },
    /// `S^0_{i,k,r}`: as `S_{i,k,r}` but with `n_{k+1}+...+n_r = r-k`.
    Ikr0 { i: usize, k: usize, r: usize },
    /// `S-bar_{k,r}`: total `r - 1`.
    Bar { k: usize, r: usize },
    /// `S_r = S_{1,r,r}`. `r = 0` gives `{()}`, whose sum is the empty product 1.
    Sr { r: usize },
}

impl IndexFamily {
    /// `S^{(1,...,1,0,...,0)}` with `i - 1` ones, the set behind `C_{i,r}`.
    pub fn primitive(i: usize, r: usize) -> Self {
        assert!(1 <= i && i <= r, "primitive index needs 1 <= i <= r");
        let mut d = vec![1u8; i - 1];
        d.resize(r - 1, 0);
        IndexFamily::D { d }
    }

    pub fn r(&self) -> usize {
        match self {
            IndexFamily::D { d } => d.len() + 1,
            IndexFamily::Ikr { r, .. }
            | IndexFamily::Ikr0 { r, .. }
            | IndexFamily::Bar { r, .. }
            | IndexFamily::Sr { r } => *r,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Parameter(msg));
        match *self {
            IndexFamily::D { ref d } => match d.iter().find(|&&x| x > 1) {
                Some(x) => bad(format!("d-vector entries must be 0 or 1, got {x}")),
                None => Ok(()),
            },
            IndexFamily::Ikr { i, k, r } | IndexFamily::Ikr0 { i, k, r } => {
                if 1 <= i && i <= k && k <= r {
                    Ok(())
                } else {
                    bad(format!(
                        "need 1 <= i <= k <= r, got (i, k, r) = ({i}, {k}, {r})"
                    ))
                }
            }
            IndexFamily::Bar { k, r } => {
                if 1 <= k && k <= r {
                    Ok(())
                } else {
                    bad(format!("need 1 <= k <= r, got (k, r) = ({k}, {r})"))
                }
            }
            IndexFamily::Sr { .. } => Ok(()),
        }
    }

    fn total(&self) -> usize {
        match self {
            IndexFamily::Bar { r, .. } => r - 1,
            other => other.r(),
        }
    }

    /// Inclusive bounds `(lo, hi)` on `P_j` for `j = 1..r-1`, as `i64` so that
    /// "strictly less than 0" is representable.
    fn prefix_bounds(&self) -> Vec<(i64, i64)> {
        let r = self.r() as i64;
        let total = self.total() as i64;
        let at_least = |lo: i64| (lo, total);
        let at_most = |hi: i64| (0, hi);
        (1..r)
            .map(|j| match *self {
                IndexFamily::D { ref d } => match d[j as usize - 1] {
                    0 => at_least(j),
                    _ => at_most(j - 1),
                },
                IndexFamily::Ikr { i, k, .. } | IndexFamily::Ikr0 { i, k, .. } => {
                    let (i, k) = (i as i64, k as i64);
                    let zero_variant = matches!(self, IndexFamily::Ikr0 { .. });
                    if j < i {
                        at_most(j - 1)
                    } else if j < k {
                        at_least(j)
                    } else if j == k {
                        if zero_variant {
                            (k, k)
                        } else {
                            at_least(k + 1)
                        }
                    } else {
                        at_least(j + 1)
                    }
                }
                IndexFamily::Bar { k, .. } => {
                    // suffix <= r-j-1 (j < k) or <= r-j (j >= k), with total r-1
                    if j < k as i64 {
                        at_least(j)
                    } else {
                        at_least(j - 1)
                    }
                }
                IndexFamily::Sr { .. } => at_least(j),
            })
            .collect()
    }
}

impl fmt::Display for IndexFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexFamily::D { d } => {
                let ds: Vec<String> = d.iter().map(u8::to_string).collect();
                write!(f, "S^({})", ds.join(","))
            }
            IndexFamily::Ikr { i, k, r } => write!(f, "S_{{{i},{k},{r}}}"),
            IndexFamily::Ikr0 { i, k, r } => write!(f, "S0_{{{i},{k},{r}}}"),
            IndexFamily::Bar { k, r } => write!(f, "Sbar_{{{k},{r}}}"),
            IndexFamily::Sr { r } => write!(f, "S_{r}"),
        }
    }
}

/// A finite set of compositions of common length, lexicographically sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionSet {
    /// `None` for sets assembled directly (products, permutations).
    pub family: Option<IndexFamily>,
    pub r: usize,
    pub members: Vec<Composition>,
}

impl CompositionSet {
    pub fn from_members(r: usize, members: impl IntoIterator<Item = Composition>) -> Result<Self> {
        let mut members: Vec<Composition> = members.into_iter().collect();
        if let Some(c) = members.iter().find(|c| c.len() != r) {
            return Err(Error::Parameter(format!(
                "composition {:?} does not have length {r}",
                c.parts()
            )));
        }
        members.sort();
        members.dedup();
        Ok(CompositionSet {
            family: None,
            r,
            members,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, c: &Composition) -> bool {
        self.members.binary_search(c).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Composition> {
        self.members.iter()
    }

    /// Same members, ignoring provenance.
    pub fn same_members(&self, other: &CompositionSet) -> bool {
        self.r == other.r && self.members == other.members
    }

    /// Cartesian product by concatenation.
    pub fn product(&self, other: &CompositionSet) -> CompositionSet {
        let members = self.members.iter().flat_map(|a| {
            other
                .members
                .iter()
                .map(move |b| Composition(a.0.iter().chain(b.0.iter()).copied().collect()))
        });
        CompositionSet::from_members(self.r + other.r, members).expect("lengths add up")
    }

    /// Applies `(n_1, ..., n_r) -> (n_{p(1)}, ..., n_{p(r)})` with a 0-based permutation.
    pub fn permute(&self, perm: &[usize]) -> Result<CompositionSet> {
        let mut seen = vec![false; self.r];
        if perm.len() != self.r
            || !perm
                .iter()
                .all(|&p| p < self.r && !std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::Parameter(format!(
                "{perm:?} is not a permutation of 0..{}",
                self.r
            )));
        }
        let members = self
            .members
            .iter()
            .map(|c| Composition(perm.iter().map(|&p| c.0[p]).collect()));
        CompositionSet::from_members(self.r, members)
    }
}

/// All members of the family, in lexicographic order.
pub fn enumerate(family: &IndexFamily) -> Result<CompositionSet> {
    family.validate()?;
    let r = family.r();
    let total = family.total();
    let bounds = family.prefix_bounds();
    let mut members = Vec::new();
    if r == 0 {
        members.push(Composition(vec![]));
    } else {
        let mut parts = Vec::with_capacity(r);
        backtrack(&bounds, r, total, 0, &mut parts, &mut members);
    }
    Ok(CompositionSet {
        family: Some(family.clone()),
        r,
        members,
    })
}

fn backtrack(
    bounds: &[(i64, i64)],
    r: usize,
    total: usize,
    prefix: usize,
    parts: &mut Vec<usize>,
    out: &mut Vec<Composition>,
) {
    let j = parts.len();
    if j + 1 == r {
        parts.push(total - prefix);
        out.push(Composition(parts.clone()));
        parts.pop();
        return;
    }
    let (lo, hi) = bounds[j];
    for next in 0..=total - prefix {
        let p = (prefix + next) as i64;
        if p > hi {
            break;
        }
        if p < lo {
            continue;
        }
        parts.push(next);
        backtrack(bounds, r, total, prefix + next, parts, out);
        parts.pop();
    }
}

fn weights(bern: &BernoulliCache, set: &CompositionSet) -> Vec<Rational> {
    let max = set
        .iter()
        .flat_map(|c| c.0.iter().copied())
        .max()
        .unwrap_or(0);
    (0..=max).map(|n| bern.weight(n)).collect()
}

/// `C(S) = (-1)^r sum_{n in S} prod_j B_{n_j} / n_j!`; zero for the empty set.
pub fn coefficient_c(set: &CompositionSet, bern: &BernoulliCache) -> Rational {
    let w = weights(bern, set);
    let sum: Rational = set
        .iter()
        .map(|c| c.0.iter().fold(Rational::one(), |acc, &n| acc * &w[n]))
        .sum();
    sign(set.r) * sum
}

/// `C(S)(a, ..., a)` as a polynomial in `a`.
pub fn coefficient_c_poly(set: &CompositionSet, bern: &BernoulliCache) -> Poly {
    let max = set
        .iter()
        .flat_map(|c| c.0.iter().copied())
        .max()
        .unwrap_or(0);
    let w: Vec<Poly> = (0..=max).map(|n| bern.poly_weight(n)).collect();
    let one = Poly::constant('a', Rational::one());
    let sum = set.iter().fold(Poly::new('a', vec![]), |acc, c| {
        &acc + &c.0.iter().fold(one.clone(), |p, &n| &p * &w[n])
    });
    sum.scale(&sign(set.r)).with_variable('a')
}

/// `C(S)(a_1, ..., a_r)` at a rational point.
pub fn coefficient_c_eval(
    set: &CompositionSet,
    a: &[Rational],
    bern: &BernoulliCache,
) -> Result<Rational> {
    if a.len() != set.r {
        return Err(Error::Parameter(format!(
            "expected {} evaluation points, got {}",
            set.r,
            a.len()
        )));
    }
    let max = set
        .iter()
        .flat_map(|c| c.0.iter().copied())
        .max()
        .unwrap_or(0);
    // table[slot][n] = B_n(a_slot) / n!
    let table: Vec<Vec<Rational>> = a
        .iter()
        .map(|at| (0..=max).map(|n| bern.poly_weight(n).eval(at)).collect())
        .collect();
    let sum: Rational = set
        .iter()
        .map(|c| {
            c.0.iter()
                .enumerate()
                .fold(Rational::one(), |acc, (slot, &n)| acc * &table[slot][n])
        })
        .sum();
    Ok(sign(set.r) * sum)
}

/// `C(S)(a_1, ..., a_r)` as a polynomial in the single slot `a_l` (1-based),
/// every other slot fixed to `others` in order.
pub fn coefficient_c_partial_poly(
    set: &CompositionSet,
    l: usize,
    others: &[Rational],
    bern: &BernoulliCache,
) -> Result<Poly> {
    if l == 0 || l > set.r {
        return Err(Error::Parameter(format!("slot {l} outside 1..={}", set.r)));
    }
    if others.len() + 1 != set.r {
        return Err(Error::Parameter(format!(
            "expected {} fixed points, got {}",
            set.r - 1,
            others.len()
        )));
    }
    let max = set
        .iter()
        .flat_map(|c| c.0.iter().copied())
        .max()
        .unwrap_or(0);
    let fixed: Vec<Vec<Rational>> = others
        .iter()
        .map(|at| (0..=max).map(|n| bern.poly_weight(n).eval(at)).collect())
        .collect();
    let symbolic: Vec<Poly> = (0..=max).map(|n| bern.poly_weight(n)).collect();
    let mut sum = Poly::new('a', vec![]);
    for c in set.iter() {
        let mut scalar = Rational::one();
        for (slot, &n) in c.0.iter().enumerate() {
            match slot.cmp(&(l - 1)) {
                std::cmp::Ordering::Less => scalar *= &fixed[slot][n],
                std::cmp::Ordering::Greater => scalar *= &fixed[slot - 1][n],
                std::cmp::Ordering::Equal => {}
            }
        }
        if !scalar.is_zero() {
            sum = &sum + &symbolic[c.0[l - 1]].scale(&scalar);
        }
    }
    Ok(sum.scale(&sign(set.r)).with_variable('a'))
}

/// `C_{i,r}` by enumeration.
pub fn c_ir(i: usize, r: usize, bern: &BernoulliCache) -> Rational {
    let set = enumerate(&IndexFamily::primitive(i, r)).expect("valid primitive index");
    coefficient_c(&set, bern)
}

/// `C_{i,r}(a)` by enumeration; `C_{1,0}(a) = 1`.
pub fn c_ir_poly(i: usize, r: usize, bern: &BernoulliCache) -> Poly {
    if r == 0 {
        return Poly::constant('a', Rational::one());
    }
    let set = enumerate(&IndexFamily::primitive(i, r)).expect("valid primitive index");
    coefficient_c_poly(&set, bern)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binomial, int, rat};
    use num_bigint::BigInt;

    fn comps(v: &[&[usize]]) -> Vec<Composition> {
        v.iter().map(|c| Composition(c.to_vec())).collect()
    }

    fn bern() -> &'static BernoulliCache {
        BernoulliCache::global()
    }

    fn d(ds: &[u8]) -> IndexFamily {
        IndexFamily::D { d: ds.to_vec() }
    }

    /// Filters all weak compositions directly against the written-out inequalities.
    fn brute_force(family: &IndexFamily) -> Vec<Composition> {
        let r = family.r();
        let total = family.total();
        let mut all = vec![vec![]];
        for _ in 0..r {
            all = all
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    (0..=total).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        let suffix = |n: &[usize], j: usize| n[j..].iter().sum::<usize>() as i64;
        let prefix = |n: &[usize], j: usize| n[..j].iter().sum::<usize>() as i64;
        let keep = |n: &[usize]| -> bool {
            if n.iter().sum::<usize>() != total {
                return false;
            }
            let ri = r as i64;
            match family {
                IndexFamily::D { d } => (1..r).all(|j| match d[j - 1] {
                    0 => suffix(n, j) <= ri - j as i64,
                    _ => prefix(n, j) < j as i64,
                }),
                IndexFamily::Ikr { i, k, .. } | IndexFamily::Ikr0 { i, k, .. } => {
                    let zero = matches!(family, IndexFamily::Ikr0 { .. });
                    (1..*i).all(|j| prefix(n, j) < j as i64)
                        && (*i..*k).all(|j| suffix(n, j) <= ri - j as i64)
                        && (*k >= r
                            || if zero {
                                suffix(n, *k) == ri - *k as i64
                            } else {
                                suffix(n, *k) < ri - *k as i64
                            })
                        && (*k + 1..r).all(|j| suffix(n, j) < ri - j as i64)
                }
                IndexFamily::Bar { k, .. } => {
                    (1..*k).all(|j| suffix(n, j) < ri - j as i64)
                        && (*k..r).all(|j| suffix(n, j) <= ri - j as i64)
                }
                IndexFamily::Sr { .. } => (1..r).all(|j| suffix(n, j) <= ri - j as i64),
            }
        };
        let mut out: Vec<Composition> = all
            .into_iter()
            .filter(|n| keep(n))
            .map(Composition)
            .collect();
        out.sort();
        out
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate(&d(&[1])).unwrap().members, comps(&[&[0, 2]]));
        assert_eq!(
            enumerate(&d(&[0])).unwrap().members,
            comps(&[&[1, 1], &[2, 0]])
        );
        assert_eq!(enumerate(&d(&[])).unwrap().members, comps(&[&[1]]));
        assert_eq!(
            enumerate(&IndexFamily::Sr { r: 1 }).unwrap().members,
            comps(&[&[1]])
        );
        assert_eq!(
            enumerate(&IndexFamily::Ikr0 { i: 1, k: 1, r: 2 })
                .unwrap()
                .members,
            comps(&[&[1, 1]])
        );
        assert_eq!(
            enumerate(&IndexFamily::Sr { r: 0 }).unwrap().members,
            comps(&[&[]])
        );
    }

    #[test]
    fn enumerate_rejects_bad_parameters() {
        for bad in [
            IndexFamily::Ikr { i: 3, k: 2, r: 4 },
            IndexFamily::Ikr0 { i: 1, k: 5, r: 4 },
            IndexFamily::Ikr { i: 0, k: 1, r: 1 },
            IndexFamily::Bar { k: 0, r: 3 },
            IndexFamily::D { d: vec![0, 2] },
        ] {
            assert!(
                matches!(enumerate(&bad), Err(Error::Parameter(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for r in 1..=6 {
            for mask in 0..(1u32 << (r - 1)) {
                let fam = d(&(0..r - 1)
                    .map(|j| ((mask >> j) & 1) as u8)
                    .collect::<Vec<_>>());
                assert_eq!(enumerate(&fam).unwrap().members, brute_force(&fam), "{fam}");
            }
            for i in 1..=r {
                for k in i..=r {
                    for fam in [IndexFamily::Ikr { i, k, r }, IndexFamily::Ikr0 { i, k, r }] {
                        assert_eq!(enumerate(&fam).unwrap().members, brute_force(&fam), "{fam}");
                    }
                }
            }
            for k in 1..=r {
                let fam = IndexFamily::Bar { k, r };
                assert_eq!(enumerate(&fam).unwrap().members, brute_force(&fam), "{fam}");
            }
            let fam = IndexFamily::Sr { r };
            assert_eq!(enumerate(&fam).unwrap().members, brute_force(&fam), "{fam}");
        }
    }

    #[test]
    fn primitive_sets_coincide_with_ikr() {
        for r in 1..=7 {
            for i in 1..=r {
                let a = enumerate(&IndexFamily::primitive(i, r)).unwrap();
                let b = enumerate(&IndexFamily::Ikr { i, k: r, r }).unwrap();
                assert!(a.same_members(&b), "i={i} r={r}");
            }
        }
    }

    #[test]
    fn d_sets_partition_all_weak_compositions() {
        for r in 1..=8usize {
            let count: usize = (0..(1u32 << (r - 1)))
                .map(|mask| {
                    let ds: Vec<u8> = (0..r - 1).map(|j| ((mask >> j) & 1) as u8).collect();
                    enumerate(&d(&ds)).unwrap().len()
                })
                .sum();
            assert_eq!(BigInt::from(count), binomial(2 * r - 1, r - 1), "r={r}");
        }
    }

    #[test]
    fn disjoint_union() {
        for r in 2..=8 {
            for i in 1..r {
                for k in i + 1..=r {
                    let whole = enumerate(&IndexFamily::Ikr { i, k, r }).unwrap();
                    let a = enumerate(&IndexFamily::Ikr { i, k: k - 1, r }).unwrap();
                    let b = enumerate(&IndexFamily::Ikr0 { i, k: k - 1, r }).unwrap();
                    assert!(a.iter().all(|c| !b.contains(c)));
                    let union = CompositionSet::from_members(
                        r,
                        a.members.iter().chain(&b.members).cloned(),
                    )
                    .unwrap();
                    assert!(union.same_members(&whole), "i={i} k={k} r={r}");
                }
            }
        }
    }

    #[test]
    fn tail_reversal_bijection() {
        for r in 2..=8 {
            for i in 1..r {
                let from = enumerate(&IndexFamily::Ikr { i: i + 1, k: r, r }).unwrap();
                let to = enumerate(&IndexFamily::Ikr {
                    i: r - i + 1,
                    k: r,
                    r,
                })
                .unwrap();
                let mut perm = vec![0];
                perm.extend((1..r).rev());
                assert!(
                    from.permute(&perm).unwrap().same_members(&to),
                    "i={i} r={r}"
                );
            }
        }
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(
            coefficient_c(&enumerate(&d(&[])).unwrap(), bern()),
            rat(-1, 2)
        );
        assert_eq!(
            coefficient_c(&enumerate(&d(&[1])).unwrap(), bern()),
            rat(1, 12)
        );
        assert_eq!(
            coefficient_c(&enumerate(&d(&[1, 0, 0, 0, 0, 0])).unwrap(), bern()),
            rat(-275, 24192)
        );
        let empty = CompositionSet::from_members(3, vec![]).unwrap();
        assert!(coefficient_c(&empty, bern()).is_zero());
    }

    #[test]
    fn poly_coefficient_examples() {
        let s0 = enumerate(&d(&[])).unwrap();
        assert_eq!(
            coefficient_c_poly(&s0, bern()),
            Poly::from_ratios('a', &[(1, 2), (-1, 1)])
        );
        let s1 = enumerate(&d(&[1])).unwrap();
        assert_eq!(
            coefficient_c_poly(&s1, bern()),
            Poly::from_ratios('a', &[(1, 12), (-1, 2), (1, 2)])
        );
        let s3 = enumerate(&IndexFamily::Ikr { i: 1, k: 3, r: 3 }).unwrap();
        assert_eq!(
            coefficient_c_poly(&s3, bern()),
            Poly::from_ratios('a', &[(1, 4), (-11, 6), (4, 1), (-8, 3)])
        );
    }

    #[test]
    fn poly_at_one_is_numeric() {
        for r in 1..=6 {
            for i in 1..=r {
                let s = enumerate(&IndexFamily::primitive(i, r)).unwrap();
                assert_eq!(
                    coefficient_c_poly(&s, bern()).eval(&int(1)),
                    coefficient_c(&s, bern())
                );
            }
        }
    }

    #[test]
    fn eval_examples() {
        let s1 = enumerate(&d(&[1])).unwrap();
        assert_eq!(
            coefficient_c_eval(&s1, &[int(1), int(1)], bern()).unwrap(),
            rat(1, 12)
        );
        assert_eq!(
            coefficient_c_eval(&s1, &[rat(1, 2), rat(1, 2)], bern()).unwrap(),
            rat(-1, 24)
        );
        let s0 = enumerate(&d(&[])).unwrap();
        assert_eq!(
            coefficient_c_eval(&s0, &[int(0)], bern()).unwrap(),
            rat(1, 2)
        );
        assert!(coefficient_c_eval(&s1, &[int(1)], bern()).is_err());
    }

    #[test]
    fn partial_poly() {
        let s0 = enumerate(&d(&[])).unwrap();
        assert_eq!(
            coefficient_c_partial_poly(&s0, 1, &[], bern()).unwrap(),
            coefficient_c_poly(&s0, bern())
        );
        let s = enumerate(&IndexFamily::Ikr { i: 1, k: 2, r: 2 }).unwrap();
        let p = coefficient_c_partial_poly(&s, 1, &[int(0)], bern()).unwrap();
        assert_eq!(p.degree(), Some(2));
        // Slot evaluation agrees with full multivariate evaluation.
        for at in [rat(2, 3), rat(-1, 5), rat(7, 4)] {
            assert_eq!(
                p.eval(&at),
                coefficient_c_eval(&s, &[at.clone(), int(0)], bern()).unwrap()
            );
        }
        assert!(coefficient_c_partial_poly(&s, 3, &[int(0)], bern()).is_err());
        assert!(coefficient_c_partial_poly(&s, 1, &[], bern()).is_err());
    }

    #[test]
    fn permutation_and_product_invariance() {
        let a = enumerate(&d(&[1, 0, 1])).unwrap();
        let b = enumerate(&IndexFamily::Bar { k: 2, r: 3 }).unwrap();
        let perm = [2, 0, 3, 1];
        assert_eq!(
            coefficient_c(&a.permute(&perm).unwrap(), bern()),
            coefficient_c(&a, bern())
        );
        assert_eq!(
            coefficient_c(&a.product(&b), bern()),
            coefficient_c(&a, bern()) * coefficient_c(&b, bern())
        );
        assert!(a.permute(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn json_shape() {
        let s = enumerate(&d(&[1])).unwrap();
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v["members"], serde_json::json!([[0, 2]]));
        assert_eq!(v["family"]["tag"], "D");
        let back: CompositionSet = serde_json::from_value(v).unwrap();
        assert_eq!(back, s);
    }
}
