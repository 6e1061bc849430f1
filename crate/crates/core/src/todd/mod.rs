//! The Todd multiplicative sequence.
//!
//! Everything here is exact: the characteristic series `x / (1 - e^{-x})` is
//! obtained by inverting `(1 - e^{-x}) / x` over the rationals, and the grade-`k`
//! polynomial `T_k(c_1, ..., c_k)` is obtained by expanding `∏ Q(x_i)` and
//! rewriting the symmetric result in elementary symmetric polynomials.

mod newton;
mod symmetric;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use newton::todd_polynomial_newton;

/// Grade ceiling used by [`todd_polynomial`].
pub const DEFAULT_MAX_GRADE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToddError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported grade {grade}: maximum is {max}")]
    UnsupportedGrade { grade: usize, max: usize },
}

/// Truncated power series with exact rational coefficients.
///
/// `coefficients[i]` is the coefficient of `x^i`; the series is known up to
/// and including `x^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coefficients: Vec<BigRational>,
}

impl RationalSeries {
    pub fn new(coefficients: Vec<BigRational>) -> Self {
        assert!(!coefficients.is_empty(), "a series needs a constant term");
        RationalSeries { coefficients }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> &BigRational {
        &self.coefficients[i]
    }

    /// Multiplicative inverse, truncated at the same order.
    ///
    /// Panics if the constant term vanishes.
    pub fn inverse(&self) -> RationalSeries {
        let d0 = &self.coefficients[0];
        assert!(
            !d0.is_zero(),
            "series with zero constant term is not invertible"
        );
        let n = self.order();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        out.push(d0.recip());
        for i in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=i {
                acc += &self.coefficients[j] * &out[i - j];
            }
            out.push(-acc / d0);
        }
        RationalSeries { coefficients: out }
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// The series `Q(x) = x / (1 - e^{-x})` truncated at `x^order`.
pub fn todd_series(order: usize) -> RationalSeries {
    // (1 - e^{-x}) / x = sum_n (-1)^n x^n / (n+1)!
    let denominator = (0..=order)
        .map(|n| {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            BigRational::new(BigInt::from(sign), factorial(n + 1))
        })
        .collect();
    RationalSeries::new(denominator).inverse()
}

/// Bernoulli number `B_k` in the unsigned convention `B_1 = 1/6, B_2 = 1/30, ...`,
/// read off from `Q(x)`: the coefficient of `x^{2k}` is `(-1)^{k-1} B_k / (2k)!`.
pub fn bernoulli(k: i64) -> Result<BigRational, ToddError> {
    if k < 1 {
        return Err(ToddError::InvalidArgument(format!(
            "Bernoulli index must be positive, got {k}"
        )));
    }
    let k = k as usize;
    let coef = todd_series(2 * k).coefficient(2 * k).clone();
    let scaled = coef * BigRational::from_integer(factorial(2 * k));
    Ok(if k % 2 == 1 { scaled } else { -scaled })
}

/// Monomial `c_1^{e_1} c_2^{e_2} ... c_k^{e_k}` in formal Chern classes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChernMonomial(Vec<u32>);

impl ChernMonomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        ChernMonomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// `Σ i·e_i`, with `c_i` of weight `i`.
    pub fn weighted_degree(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| (i + 1) * e as usize)
            .sum()
    }

    fn evaluate(&self, values: &[BigInt]) -> BigInt {
        self.0
            .iter()
            .zip(values)
            .fold(BigInt::one(), |acc, (&e, v)| {
                acc * num_traits::pow(v.clone(), e as usize)
            })
    }
}

impl fmt::Display for ChernMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "c{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Integer Chern numbers `(c_1[X], ..., c_k[X])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernVector(Vec<BigInt>);

impl ChernVector {
    pub fn new<T: Into<BigInt>>(values: impl IntoIterator<Item = T>) -> Self {
        ChernVector(values.into_iter().map(Into::into).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[BigInt] {
        &self.0
    }

    /// Chern classes of complex projective `n`-space, `c_i = C(n+1, i)`.
    pub fn projective_space(n: usize) -> Self {
        let mut values = Vec::with_capacity(n);
        let mut binom = BigInt::one();
        for i in 1..=n {
            binom = binom * BigInt::from(n + 2 - i) / BigInt::from(i);
            values.push(binom.clone());
        }
        ChernVector(values)
    }
}

/// Homogeneous polynomial of weighted degree `grade` in `c_1, ..., c_grade`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToddPolynomial {
    grade: usize,
    terms: BTreeMap<ChernMonomial, BigRational>,
}

impl ToddPolynomial {
    /// Builds a polynomial from raw terms, dropping zero coefficients.
    ///
    /// Panics if a monomial has the wrong length or weighted degree.
    pub fn from_terms(
        grade: usize,
        terms: impl IntoIterator<Item = (ChernMonomial, BigRational)>,
    ) -> Self {
        let mut map: BTreeMap<ChernMonomial, BigRational> = BTreeMap::new();
        for (mono, coef) in terms {
            assert_eq!(mono.0.len(), grade, "monomial length must equal the grade");
            assert_eq!(mono.weighted_degree(), grade, "monomial of wrong weight");
            *map.entry(mono).or_insert_with(BigRational::zero) += coef;
        }
        map.retain(|_, c| !c.is_zero());
        ToddPolynomial { grade, terms: map }
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn terms(&self) -> &BTreeMap<ChernMonomial, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigRational {
        self.terms
            .get(&ChernMonomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Terms in reverse-lexicographic order of exponent sequences.
    pub fn sorted_terms(&self) -> impl Iterator<Item = (&ChernMonomial, &BigRational)> {
        self.terms.iter().rev()
    }
}

impl fmt::Display for ToddPolynomial {
    /// `coef*c1^e1*c2^e2...` joined by `+`/`-`, coefficients as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (mono, coef)) in self.sorted_terms().enumerate() {
            if coef.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{}*{}", coef.abs(), mono)?;
        }
        Ok(())
    }
}

/// Grade bound for the multiplicative-sequence expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ToddConfig {
    pub max_grade: usize,
}

impl Default for ToddConfig {
    fn default() -> Self {
        ToddConfig {
            max_grade: DEFAULT_MAX_GRADE,
        }
    }
}

impl ToddConfig {
    pub fn todd_polynomial(&self, k: usize) -> Result<ToddPolynomial, ToddError> {
        self.todd_polynomial_with_variables(k, k)
    }

    /// Expands `∏_{i=1}^{m} Q(x_i)` in `m ≥ k` formal roots and reduces the
    /// degree-`k` part to elementary symmetric polynomials.
    pub fn todd_polynomial_with_variables(
        &self,
        k: usize,
        variables: usize,
    ) -> Result<ToddPolynomial, ToddError> {
        self.check_grade(k)?;
        if variables < k {
            return Err(ToddError::InvalidArgument(format!(
                "need at least {k} formal roots for grade {k}, got {variables}"
            )));
        }
        let series = todd_series(k);
        let product = symmetric::truncated_product(series.coefficients(), k, variables);
        let terms = symmetric::reduce_to_elementary(product, variables)
            .into_iter()
            .map(|(exps, coef)| {
                let mut exps = exps;
                exps.truncate(k);
                (ChernMonomial(exps), coef)
            });
        Ok(ToddPolynomial::from_terms(k, terms))
    }

    fn check_grade(&self, k: usize) -> Result<(), ToddError> {
        if k == 0 {
            return Err(ToddError::InvalidArgument(
                "grade must be at least 1".into(),
            ));
        }
        if k > self.max_grade {
            return Err(ToddError::UnsupportedGrade {
                grade: k,
                max: self.max_grade,
            });
        }
        Ok(())
    }
}

/// `T_k` with the default grade ceiling.
pub fn todd_polynomial(k: usize) -> Result<ToddPolynomial, ToddError> {
    ToddConfig::default().todd_polynomial(k)
}

/// Substitutes integer Chern numbers into `poly`.
pub fn evaluate_genus(
    poly: &ToddPolynomial,
    chern: &ChernVector,
) -> Result<BigRational, ToddError> {
    if chern.len() != poly.grade {
        return Err(ToddError::InvalidArgument(format!(
            "Chern vector has length {}, polynomial has grade {}",
            chern.len(),
            poly.grade
        )));
    }
    Ok(poly
        .terms
        .iter()
        .map(|(mono, coef)| coef * BigRational::from_integer(mono.evaluate(&chern.0)))
        .fold(BigRational::zero(), |acc, t| acc + t))
}

/// Grade-2 Todd genus in relative Chern numbers: `(c_1^2 + c_2) / 12`.
pub fn todd_relative_surface(c1_sq: i64, c2: i64) -> BigRational {
    BigRational::new(BigInt::from(c1_sq) + BigInt::from(c2), BigInt::from(12))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Long division of x by 1 - e^{-x} = x - x^2/2 + x^3/6 - ...; independent of
    /// `RationalSeries::inverse`.
    fn long_division_oracle(order: usize) -> Vec<BigRational> {
        // divisor coefficients d_n of x^{n+1}
        let d: Vec<BigRational> = (0..=order + 1)
            .map(|n| {
                let s = if n % 2 == 0 { 1 } else { -1 };
                BigRational::new(s.into(), factorial(n + 1))
            })
            .collect();
        // remainder starts as x (index shift: remainder[n] is coefficient of x^{n+1})
        let mut rem = vec![BigRational::zero(); order + 2];
        rem[0] = BigRational::one();
        let mut quot = Vec::new();
        for i in 0..=order {
            let c = rem[i].clone() / &d[0];
            for j in 0..d.len() {
                if i + j < rem.len() {
                    let t = &c * &d[j];
                    rem[i + j] -= t;
                }
            }
            quot.push(c);
        }
        quot
    }

    #[test]
    fn series_matches_long_division() {
        for order in 0..12 {
            assert_eq!(
                todd_series(order).coefficients(),
                &long_division_oracle(order)[..]
            );
        }
    }

    #[test]
    fn series_examples() {
        assert_eq!(todd_series(0).coefficients(), &[q(1, 1)]);
        assert_eq!(todd_series(1).coefficients(), &[q(1, 1), q(1, 2)]);
        assert_eq!(
            todd_series(4).coefficients(),
            &[q(1, 1), q(1, 2), q(1, 12), q(0, 1), q(-1, 720)]
        );
        assert_eq!(todd_series(7).order(), 7);
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(1).unwrap(), q(1, 6));
        assert_eq!(bernoulli(2).unwrap(), q(1, 30));
        assert_eq!(bernoulli(3).unwrap(), q(1, 42));
        assert!(matches!(bernoulli(0), Err(ToddError::InvalidArgument(_))));
        assert!(matches!(bernoulli(-3), Err(ToddError::InvalidArgument(_))));
    }

    /// Signed Bernoulli numbers from sum_{j=0}^{n} C(n+1, j) b_j = 0.
    #[test]
    fn bernoulli_agrees_with_recurrence() {
        let n_max = 16;
        let mut b: Vec<BigRational> = vec![BigRational::one()];
        for n in 1..=n_max {
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one();
            for j in 0..n {
                acc += BigRational::from_integer(binom.clone()) * &b[j];
                binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
        }
        for k in 1..=8usize {
            assert_eq!(bernoulli(k as i64).unwrap(), b[2 * k].abs(), "k = {k}");
        }
    }

    #[test]
    fn low_grade_polynomials() {
        let t1 = todd_polynomial(1).unwrap();
        assert_eq!(t1.to_string(), "1/2*c1");
        let t2 = todd_polynomial(2).unwrap();
        assert_eq!(t2.to_string(), "1/12*c1^2+1/12*c2");
        let t3 = todd_polynomial(3).unwrap();
        assert_eq!(t3.to_string(), "1/24*c1*c2");
        assert!(t3.coefficient(&[3, 0, 0]).is_zero());
        let t4 = todd_polynomial(4).unwrap();
        assert_eq!(t4.coefficient(&[0, 0, 0, 1]), q(-1, 720));
        assert_eq!(t4.coefficient(&[1, 0, 1, 0]), q(1, 720));
        assert_eq!(t4.coefficient(&[0, 2, 0, 0]), q(3, 720));
        assert_eq!(t4.coefficient(&[2, 1, 0, 0]), q(4, 720));
        assert_eq!(t4.coefficient(&[4, 0, 0, 0]), q(-1, 720));
        assert_eq!(t4.terms().len(), 5);
    }

    #[test]
    fn grade_bounds() {
        assert!(matches!(
            todd_polynomial(0),
            Err(ToddError::InvalidArgument(_))
        ));
        assert_eq!(
            todd_polynomial(9),
            Err(ToddError::UnsupportedGrade { grade: 9, max: 8 })
        );
        let wide = ToddConfig { max_grade: 9 };
        assert_eq!(wide.todd_polynomial(9).unwrap().grade(), 9);
        assert!(ToddConfig::default()
            .todd_polynomial_with_variables(3, 2)
            .is_err());
    }

    #[test]
    fn genus_examples() {
        let t2 = todd_polynomial(2).unwrap();
        assert_eq!(
            evaluate_genus(&t2, &ChernVector::new([3, 3])).unwrap(),
            q(1, 1)
        );
        for chi in [0i64, 1, 9, 21, -4] {
            assert_eq!(
                evaluate_genus(&t2, &ChernVector::new([0, chi])).unwrap(),
                q(chi, 12)
            );
        }
        let t1 = todd_polynomial(1).unwrap();
        assert_eq!(
            evaluate_genus(&t1, &ChernVector::new([2])).unwrap(),
            q(1, 1)
        );
        assert!(evaluate_genus(&t2, &ChernVector::new([1])).is_err());
    }

    #[test]
    fn relative_surface() {
        assert_eq!(todd_relative_surface(0, 0), q(0, 1));
        assert_eq!(todd_relative_surface(0, 9), q(3, 4));
        assert_eq!(todd_relative_surface(9, 3), q(1, 1));
    }

    #[test]
    fn projective_space_chern_classes() {
        assert_eq!(ChernVector::projective_space(2), ChernVector::new([3, 3]));
        assert_eq!(
            ChernVector::projective_space(3),
            ChernVector::new([4, 6, 4])
        );
    }

    #[test]
    fn projective_normalization() {
        for n in 1..=6 {
            let t = todd_polynomial(n).unwrap();
            let v = evaluate_genus(&t, &ChernVector::projective_space(n)).unwrap();
            assert_eq!(v, q(1, 1), "n = {n}");
        }
    }

    #[test]
    fn stability_in_number_of_roots() {
        let cfg = ToddConfig::default();
        for k in 1..=6 {
            let base = cfg.todd_polynomial_with_variables(k, k).unwrap();
            for m in k + 1..=k + 2 {
                assert_eq!(cfg.todd_polynomial_with_variables(k, m).unwrap(), base);
            }
        }
    }

    #[test]
    fn elimination_agrees_with_newton() {
        for k in 1..=DEFAULT_MAX_GRADE {
            assert_eq!(
                todd_polynomial(k).unwrap(),
                todd_polynomial_newton(k).unwrap(),
                "k = {k}"
            );
        }
    }

    #[test]
    fn pure_c1_coefficient_is_series_coefficient() {
        let series = todd_series(6);
        for k in 1..=6 {
            let mut exps = vec![0u32; k];
            exps[0] = k as u32;
            assert_eq!(
                todd_polynomial(k).unwrap().coefficient(&exps),
                *series.coefficient(k)
            );
        }
    }

    #[test]
    fn coefficients_nonzero_and_homogeneous() {
        for k in 1..=DEFAULT_MAX_GRADE {
            let t = todd_polynomial(k).unwrap();
            for (mono, coef) in t.terms() {
                assert!(!coef.is_zero());
                assert_eq!(mono.weighted_degree(), k);
            }
        }
    }
}
