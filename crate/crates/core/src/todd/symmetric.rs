//! Symmetric polynomials in `m` variables, stored in the monomial basis.
//!
//! A symmetric polynomial is determined by its coefficients on exponent vectors
//! sorted in non-increasing order (partitions padded to length `m`), so only
//! those are kept.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type Partition = Vec<u32>;

/// Partitions of `n` with at most `parts` parts, padded with zeros.
pub(crate) fn partitions(n: u32, parts: usize) -> Vec<Partition> {
    fn go(rem: u32, max: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            let mut p = cur.clone();
            p.resize(parts, 0);
            out.push(p);
            return;
        }
        if cur.len() == parts {
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            go(rem - part, part, parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, parts, &mut Vec::new(), &mut out);
    out
}

fn subsets(m: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, size, &mut Vec::new(), &mut out);
    out
}

/// Degree-`k` part of `∏_{i=1}^{m} Q(x_i)`, where `series[d]` is the
/// coefficient of `x^d` in `Q`.
///
/// The coefficient of `x_1^{λ_1} ... x_m^{λ_m}` in the product is
/// `∏_i series[λ_i]`.
pub(crate) fn truncated_product(
    series: &[BigRational],
    k: usize,
    m: usize,
) -> BTreeMap<Partition, BigRational> {
    partitions(k as u32, m)
        .into_iter()
        .map(|lambda| {
            let coef = lambda
                .iter()
                .fold(BigRational::one(), |acc, &d| acc * &series[d as usize]);
            (lambda, coef)
        })
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// Multiplies a homogeneous symmetric polynomial of degree `degree` by `e_j`.
fn times_elementary(
    f: &BTreeMap<Partition, BigInt>,
    degree: u32,
    j: usize,
    m: usize,
) -> BTreeMap<Partition, BigInt> {
    let subs = subsets(m, j);
    let mut out = BTreeMap::new();
    for mu in partitions(degree + j as u32, m) {
        let mut acc = BigInt::zero();
        for s in &subs {
            if s.iter().any(|&i| mu[i] == 0) {
                continue;
            }
            let mut nu = mu.clone();
            for &i in s {
                nu[i] -= 1;
            }
            nu.sort_unstable_by(|a, b| b.cmp(a));
            if let Some(c) = f.get(&nu) {
                acc += c;
            }
        }
        if !acc.is_zero() {
            out.insert(mu, acc);
        }
    }
    out
}

/// `∏_j e_j^{exps[j-1]}` in the monomial basis.
fn elementary_product(exps: &[u32], m: usize) -> BTreeMap<Partition, BigInt> {
    let mut f = BTreeMap::new();
    f.insert(vec![0; m], BigInt::one());
    let mut degree = 0u32;
    for (idx, &e) in exps.iter().enumerate() {
        let j = idx + 1;
        for _ in 0..e {
            f = times_elementary(&f, degree, j, m);
            degree += j as u32;
        }
    }
    f
}

/// Rewrites a symmetric polynomial in elementary symmetric polynomials by
/// repeatedly cancelling the lexicographically leading monomial `x^λ` with
/// `c · e_1^{λ_1-λ_2} e_2^{λ_2-λ_3} ... e_m^{λ_m}`.
///
/// Returns `(exponents of e_1..e_m, coefficient)` pairs.
pub(crate) fn reduce_to_elementary(
    mut f: BTreeMap<Partition, BigRational>,
    m: usize,
) -> Vec<(Vec<u32>, BigRational)> {
    let mut out = Vec::new();
    while let Some((lambda, coef)) = f.last_key_value().map(|(l, c)| (l.clone(), c.clone())) {
        let exps: Vec<u32> = (0..m)
            .map(|i| lambda[i] - lambda.get(i + 1).copied().unwrap_or(0))
            .collect();
        for (mu, v) in elementary_product(&exps, m) {
            let entry = f.entry(mu).or_insert_with(BigRational::zero);
            *entry -= &coef * BigRational::from_integer(v);
        }
        f.retain(|_, c| !c.is_zero());
        debug_assert!(!f.contains_key(&lambda));
        out.push((exps, coef));
    }
    out
}
