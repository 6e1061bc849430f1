//! Brieskorn–Pham germs `x^a + y^b + z^c = 0`.
//!
//! Orientation: the link is the boundary of its resolution, so the Milnor
//! fibre of `(2,3,5)` carries the negative definite `E_8` form (`σ = -8`).

use num_integer::Integer;
use thiserror::Error;

use crate::frames::{self, Z12, Z16, Z24};
use crate::plumbing::{PlumbingError, PlumbingGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrieskornError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not-homology-sphere: exponents {0:?} are not pairwise coprime")]
    NotHomologySphere([u64; 3]),
    #[error("internal-inconsistency: {0}")]
    InternalInconsistency(String),
}

impl From<PlumbingError> for BrieskornError {
    fn from(e: PlumbingError) -> Self {
        BrieskornError::InternalInconsistency(e.to_string())
    }
}

/// Exponents `a ≤ b ≤ c`, each at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentTriple([u64; 3]);

impl ExponentTriple {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self, BrieskornError> {
        let mut e = [a, b, c];
        if let Some(bad) = e.iter().find(|&&x| x < 2) {
            return Err(BrieskornError::InvalidArgument(format!(
                "exponents must be at least 2, got {bad}"
            )));
        }
        e.sort_unstable();
        Ok(ExponentTriple([e[0] as u64, e[1] as u64, e[2] as u64]))
    }

    pub fn exponents(&self) -> [u64; 3] {
        self.0
    }

    pub fn pairwise_coprime(&self) -> bool {
        let [a, b, c] = self.0;
        a.gcd(&b) == 1 && a.gcd(&c) == 1 && b.gcd(&c) == 1
    }

    pub fn label(&self) -> String {
        let [a, b, c] = self.0;
        format!("L({a},{b},{c})")
    }

    /// Numerators over the common denominator `abc`: `s = (i·bc + j·ac + k·ab) / abc`.
    fn scaled(&self) -> (u128, [u128; 3]) {
        let [a, b, c] = self.0.map(u128::from);
        (a * b * c, [b * c, a * c, a * b])
    }
}

/// `(a-1)(b-1)(c-1)`.
pub fn milnor_number(t: &ExponentTriple) -> u64 {
    let [a, b, c] = t.0;
    (a - 1) * (b - 1) * (c - 1)
}

/// `#{(i,j,k) ≥ 1 : i/a + j/b + k/c < 1}`.
pub fn geometric_genus(t: &ExponentTriple) -> u64 {
    let [a, b, _] = t.0;
    let (n, [wa, wb, wc]) = t.scaled();
    let mut count = 0u64;
    for i in 1..a as u128 {
        for j in 1..b as u128 {
            let partial = i * wa + j * wb;
            if partial >= n {
                break;
            }
            // k ≥ 1 with partial + k·wc < n
            count += ((n - partial - 1) / wc) as u64;
        }
    }
    count
}

/// Signature of the Milnor fibre from the spectrum-type lattice count over
/// `1 ≤ i < a, 1 ≤ j < b, 1 ≤ k < c`: `+1` for `s ∈ (0,1) ∪ (2,3)`,
/// `-1` for `s ∈ (1,2)`, integral `s` contributes nothing.
pub fn signature(t: &ExponentTriple) -> i64 {
    let [a, b, c] = t.0;
    let (n, [wa, wb, wc]) = t.scaled();
    let mut sigma = 0i64;
    for i in 1..a as u128 {
        for j in 1..b as u128 {
            for k in 1..c as u128 {
                let s = i * wa + j * wb + k * wc;
                if s % n == 0 {
                    continue;
                }
                match s / n {
                    0 | 2 => sigma += 1,
                    1 => sigma -= 1,
                    _ => unreachable!("s < 3"),
                }
            }
        }
    }
    sigma
}

/// Hirzebruch–Jung expansion `p/q = k_1 - 1/(k_2 - 1/(... - 1/k_s))`, `k_i ≥ 2`.
pub fn neg_continued_fraction(p: u64, q: u64) -> Result<Vec<u64>, BrieskornError> {
    if q == 0 || p <= q || p.gcd(&q) != 1 {
        return Err(BrieskornError::InvalidArgument(format!(
            "need p > q ≥ 1 coprime, got p = {p}, q = {q}"
        )));
    }
    let (mut p, mut q) = (p, q);
    let mut out = Vec::new();
    while q > 0 {
        let k = p.div_ceil(q);
        out.push(k);
        (p, q) = (q, k * q - p);
    }
    Ok(out)
}

/// Star-shaped plumbing of the Seifert-fibred link of a Brieskorn homology
/// sphere.
///
/// With `n = abc`, the Seifert invariants `β_i ∈ (0, a_i)` solve
/// `β_i · (n / a_i) ≡ -1 (mod a_i)`, and the central weight `-b_0` satisfies
/// `b_0·n - Σ β_i·n/a_i = 1`, i.e. orbifold Euler number `-1/n`. Each arm is the
/// negative continued fraction of `a_i / β_i`.
pub fn seifert_graph(t: &ExponentTriple) -> Result<PlumbingGraph, BrieskornError> {
    if !t.pairwise_coprime() {
        return Err(BrieskornError::NotHomologySphere(t.0));
    }
    let n: i128 = t.0.iter().map(|&x| x as i128).product();
    let mut arms = Vec::with_capacity(3);
    let mut sum = 0i128;
    for &ai in &t.0 {
        let ai = ai as i128;
        let cofactor = n / ai;
        let inv = cofactor.extended_gcd(&ai).x.mod_floor(&ai);
        let beta = (-inv).mod_floor(&ai);
        debug_assert_eq!((beta * cofactor).mod_floor(&ai), ai - 1);
        sum += beta * cofactor;
        let arm = neg_continued_fraction(ai as u64, beta as u64)?;
        arms.push(arm.into_iter().map(|k| -(k as i64)).collect::<Vec<_>>());
    }
    let (b0, rem) = (1 + sum).div_rem(&n);
    if rem != 0 {
        return Err(BrieskornError::InternalInconsistency(format!(
            "central weight for {:?} is not integral",
            t.0
        )));
    }
    Ok(PlumbingGraph::star(-(b0 as i64), &arms)?)
}

/// `σ / 8` for a Brieskorn homology sphere.
pub fn casson(t: &ExponentTriple) -> Result<i64, BrieskornError> {
    if !t.pairwise_coprime() {
        return Err(BrieskornError::NotHomologySphere(t.0));
    }
    let sigma = signature(t);
    if sigma % 8 != 0 {
        return Err(BrieskornError::InternalInconsistency(format!(
            "signature {sigma} of {:?} is not divisible by 8",
            t.0
        )));
    }
    Ok(sigma / 8)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityProfile {
    pub mu: u64,
    pub p_g: u64,
    pub sigma: i64,
    pub chi: u64,
    pub ehat: i64,
    pub e_r: Z24,
    pub e_c: Z12,
    pub rochlin: Z16,
    pub casson: Option<i64>,
}

pub fn profile(t: &ExponentTriple) -> SingularityProfile {
    let mu = milnor_number(t);
    let sigma = signature(t);
    let ehat = frames::ehat(&frames::canonical_frame(t.label(), mu)).expect("Milnor-based frame");
    let bundle = frames::reduce(ehat);
    SingularityProfile {
        mu,
        p_g: geometric_genus(t),
        sigma,
        chi: mu + 1,
        ehat,
        e_r: bundle.e_r,
        e_c: bundle.e_c,
        rochlin: frames::rochlin(sigma),
        casson: casson(t).ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plumbing::{
        canonical_cycle, determinant, intersection_matrix, is_negative_definite, laufer_chi,
    };
    use num_bigint::BigInt;
    use num_traits::Signed;

    fn t(a: i64, b: i64, c: i64) -> ExponentTriple {
        ExponentTriple::new(a, b, c).unwrap()
    }

    /// Size of the monomial basis `x^i y^j z^k`, `i ≤ a-2, ...` of the Jacobian algebra.
    fn jacobian_basis_size(t: &ExponentTriple) -> u64 {
        let [a, b, c] = t.exponents();
        let mut n = 0;
        for _ in 0..=a - 2 {
            for _ in 0..=b - 2 {
                for _ in 0..=c - 2 {
                    n += 1;
                }
            }
        }
        n
    }

    /// Direct rational comparison over a generous box.
    fn genus_oracle(t: &ExponentTriple) -> u64 {
        let [a, b, c] = t.exponents().map(|x| x as i64);
        let mut n = 0;
        for i in 1..=a {
            for j in 1..=b {
                for k in 1..=c {
                    let s = num_rational::Ratio::new(i, a)
                        + num_rational::Ratio::new(j, b)
                        + num_rational::Ratio::new(k, c);
                    if s < num_rational::Ratio::from_integer(1) {
                        n += 1;
                    }
                }
            }
        }
        n
    }

    fn coprime_sweep() -> Vec<ExponentTriple> {
        let mut out = Vec::new();
        for a in 2..=25 {
            for b in a + 1..=25 {
                for c in b + 1..=25 {
                    let tr = t(a, b, c);
                    if tr.pairwise_coprime() {
                        out.push(tr);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn triple_validation() {
        assert_eq!(t(5, 2, 3).exponents(), [2, 3, 5]);
        assert!(matches!(
            ExponentTriple::new(1, 3, 5),
            Err(BrieskornError::InvalidArgument(_))
        ));
    }

    #[test]
    fn milnor_examples() {
        for (tr, mu) in [(t(2, 2, 2), 1), (t(2, 3, 5), 8), (t(2, 3, 7), 12)] {
            assert_eq!(milnor_number(&tr), mu);
            assert_eq!(jacobian_basis_size(&tr), mu);
        }
    }

    #[test]
    fn genus_examples() {
        assert_eq!(geometric_genus(&t(2, 2, 2)), 0);
        assert_eq!(geometric_genus(&t(2, 3, 5)), 0);
        assert_eq!(geometric_genus(&t(2, 3, 7)), 1);
        assert_eq!(geometric_genus(&t(2, 3, 11)), 1);
        for a in 2..=7 {
            for b in a..=9 {
                for c in b..=11 {
                    let tr = t(a, b, c);
                    assert_eq!(geometric_genus(&tr), genus_oracle(&tr), "{tr:?}");
                }
            }
        }
    }

    #[test]
    fn signature_examples() {
        assert_eq!(signature(&t(2, 2, 2)), -1);
        assert_eq!(signature(&t(2, 3, 5)), -8);
        assert_eq!(signature(&t(2, 3, 11)), -16);
        assert_eq!(signature(&t(2, 3, 7)), -8);
    }

    #[test]
    fn continued_fraction_examples() {
        assert_eq!(neg_continued_fraction(3, 1).unwrap(), vec![3]);
        assert_eq!(neg_continued_fraction(5, 2).unwrap(), vec![3, 2]);
        assert_eq!(neg_continued_fraction(7, 5).unwrap(), vec![2, 2, 3]);
        assert!(neg_continued_fraction(4, 2).is_err());
        assert!(neg_continued_fraction(2, 3).is_err());
        assert!(neg_continued_fraction(3, 0).is_err());
    }

    #[test]
    fn continued_fraction_evaluates_back() {
        for p in 2u64..40 {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let ks = neg_continued_fraction(p, q).unwrap();
                assert!(ks.iter().all(|&k| k >= 2));
                // evaluate from the right as num/den
                let (mut num, mut den) = (*ks.last().unwrap() as i64, 1i64);
                for &k in ks.iter().rev().skip(1) {
                    (num, den) = (k as i64 * num - den, num);
                }
                assert_eq!((num, den), (p as i64, q as i64));
            }
        }
    }

    #[test]
    fn seifert_examples() {
        let e8 = seifert_graph(&t(2, 3, 5)).unwrap();
        assert_eq!(e8, PlumbingGraph::e8());

        let g = seifert_graph(&t(2, 3, 7)).unwrap();
        let weights: Vec<i64> = g.vertices().iter().map(|v| v.weight).collect();
        assert_eq!(weights, vec![-1, -2, -3, -7]);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3)]);
        let k = canonical_cycle(&g).unwrap();
        assert!(k.integral);
        assert_eq!(
            k.k_squared,
            num_rational::BigRational::from_integer((-4).into())
        );

        assert_eq!(
            seifert_graph(&t(2, 3, 4)),
            Err(BrieskornError::NotHomologySphere([2, 3, 4]))
        );
    }

    #[test]
    fn casson_examples() {
        assert_eq!(casson(&t(2, 3, 5)), Ok(-1));
        assert_eq!(casson(&t(2, 3, 7)), Ok(-1));
        assert_eq!(casson(&t(2, 3, 11)), Ok(-2));
        assert_eq!(
            casson(&t(2, 2, 2)),
            Err(BrieskornError::NotHomologySphere([2, 2, 2]))
        );
    }

    #[test]
    fn profile_examples() {
        let p = profile(&t(2, 3, 5));
        assert_eq!((p.mu, p.p_g, p.sigma, p.chi, p.ehat), (8, 0, -8, 9, 9));
        assert_eq!((p.e_r.value(), p.e_c.value(), p.rochlin.value()), (9, 9, 8));
        assert_eq!(p.casson, Some(-1));

        let p = profile(&t(2, 2, 2));
        assert_eq!((p.mu, p.p_g, p.sigma, p.chi, p.ehat), (1, 0, -1, 2, 2));
        assert_eq!(
            (p.e_r.value(), p.e_c.value(), p.rochlin.value()),
            (2, 2, 15)
        );
        assert_eq!(p.casson, None);

        let p = profile(&t(2, 3, 11));
        assert_eq!((p.mu, p.p_g, p.sigma, p.chi, p.ehat), (20, 1, -16, 21, 21));
        assert_eq!(
            (p.e_r.value(), p.e_c.value(), p.rochlin.value()),
            (21, 9, 0)
        );
        assert_eq!(p.casson, Some(-2));
    }

    #[test]
    fn invariants_are_symmetric() {
        let base = profile(&t(2, 3, 7));
        for (a, b, c) in [(3, 2, 7), (7, 3, 2), (7, 2, 3), (2, 7, 3), (3, 7, 2)] {
            assert_eq!(profile(&t(a, b, c)), base);
        }
    }

    #[test]
    fn coprime_sweep_cross_checks() {
        let sweep = coprime_sweep();
        assert!(sweep.len() > 100);
        for tr in sweep {
            let mu = milnor_number(&tr);
            let pg = geometric_genus(&tr);
            let sigma = signature(&tr);
            assert_eq!(sigma, 4 * pg as i64 - mu as i64, "{tr:?}");
            assert_eq!(sigma % 8, 0);

            let g = seifert_graph(&tr).unwrap();
            let m = intersection_matrix(&g);
            assert!(is_negative_definite(&m), "{tr:?}");
            assert_eq!(determinant(&m).abs(), BigInt::from(1), "{tr:?}");
            assert!(canonical_cycle(&g).unwrap().integral);
            assert_eq!(laufer_chi(&g, pg), Ok(mu as i64 + 1), "{tr:?}");
        }
    }
}
