//! Second route to `T_k`: `log ∏ Q(x_i) = Σ_n l_n p_n` with `l_n` the
//! coefficients of `log Q`, power sums rewritten through Newton's identities,
//! then exponentiated.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{todd_series, ChernMonomial, RationalSeries, ToddConfig, ToddError, ToddPolynomial};

type ChernPoly = BTreeMap<Vec<u32>, BigRational>;

fn weight(exps: &[u32]) -> usize {
    exps.iter()
        .enumerate()
        .map(|(i, &e)| (i + 1) * e as usize)
        .sum()
}

fn mul(a: &ChernPoly, b: &ChernPoly, max_weight: usize) -> ChernPoly {
    let mut out = ChernPoly::new();
    for (ea, ca) in a {
        let wa = weight(ea);
        for (eb, cb) in b {
            if wa + weight(eb) > max_weight {
                continue;
            }
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn add_scaled(acc: &mut ChernPoly, p: &ChernPoly, s: &BigRational) {
    for (e, c) in p {
        *acc.entry(e.clone()).or_insert_with(BigRational::zero) += c * s;
    }
    acc.retain(|_, c| !c.is_zero());
}

fn chern_class(i: usize, k: usize) -> ChernPoly {
    let mut e = vec![0; k];
    e[i - 1] = 1;
    ChernPoly::from([(e, BigRational::one())])
}

/// Coefficients of `log Q(x)` up to `x^k` via `(log Q)' = Q' / Q`.
fn log_series(q: &RationalSeries) -> Vec<BigRational> {
    let k = q.order();
    let inv = q.inverse();
    let deriv: Vec<BigRational> = (1..=k)
        .map(|i| q.coefficient(i) * BigRational::from_integer(BigInt::from(i)))
        .collect();
    let mut out = vec![BigRational::zero(); k + 1];
    for n in 1..=k {
        // coefficient of x^{n-1} in Q' * Q^{-1}
        let mut c = BigRational::zero();
        for i in 0..n {
            c += &deriv[i] * inv.coefficient(n - 1 - i);
        }
        out[n] = c / BigRational::from_integer(BigInt::from(n));
    }
    out
}

pub fn todd_polynomial_newton(k: usize) -> Result<ToddPolynomial, ToddError> {
    ToddConfig::default().check_grade(k)?;
    let logq = log_series(&todd_series(k));

    // power sums p_1..p_k in elementary classes
    let mut power: Vec<ChernPoly> = vec![ChernPoly::new()];
    for n in 1..=k {
        let mut p = ChernPoly::new();
        for i in 1..n {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            let term = mul(&chern_class(i, k), &power[n - i], k);
            add_scaled(&mut p, &term, &BigRational::from_integer(sign.into()));
        }
        let sign = if n % 2 == 1 { 1 } else { -1 };
        add_scaled(
            &mut p,
            &chern_class(n, k),
            &BigRational::from_integer(BigInt::from(sign * n as i64)),
        );
        power.push(p);
    }

    let mut log_total = ChernPoly::new();
    for n in 1..=k {
        add_scaled(&mut log_total, &power[n], &logq[n]);
    }

    // exp, truncated at weight k
    let mut result = ChernPoly::from([(vec![0; k], BigRational::one())]);
    let mut pow = result.clone();
    let mut fact = BigInt::one();
    for j in 1..=k {
        pow = mul(&pow, &log_total, k);
        fact *= BigInt::from(j);
        add_scaled(
            &mut result,
            &pow,
            &BigRational::new(BigInt::one(), fact.clone()),
        );
    }

    Ok(ToddPolynomial::from_terms(
        k,
        result
            .into_iter()
            .filter(|(e, _)| weight(e) == k)
            .map(|(e, c)| (ChernMonomial(e), c)),
    ))
}
