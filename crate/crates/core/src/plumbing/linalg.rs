//! Exact integer/rational linear algebra on small dense matrices.
//!
//! Determinants and solves use Bareiss fraction-free elimination; every
//! intermediate division is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn to_big(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Determinant by Bareiss elimination with row pivoting.
pub fn bareiss_determinant(mut a: IntMatrix) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Leading principal minors `det(a[..k][..k])`, `k = 1..=n`.
///
/// Without pivoting the Bareiss pivots are exactly these minors. A vanishing
/// pivot stops that shortcut; the remaining minors are then computed directly.
pub fn leading_principal_minors(a: &IntMatrix) -> Vec<BigInt> {
    let n = a.len();
    let mut m = a.clone();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = m[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            for size in k + 2..=n {
                let sub = a[..size].iter().map(|r| r[..size].to_vec()).collect();
                minors.push(bareiss_determinant(sub));
            }
            return minors;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &pivot - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = pivot;
    }
    minors
}

/// Sylvester's criterion: `(-1)^k · minor_k > 0` for every `k`.
pub fn negative_definite_by_minors(a: &IntMatrix) -> bool {
    leading_principal_minors(a)
        .iter()
        .enumerate()
        .all(|(k, minor)| {
            if k % 2 == 0 {
                minor.is_negative()
            } else {
                minor.is_positive()
            }
        })
}

/// Square-root-free Cholesky (`LDLᵀ`) of `-a` over the rationals; `a` is
/// negative definite iff every pivot of `-a` is positive.
pub fn negative_definite_by_cholesky(a: &IntMatrix) -> bool {
    let n = a.len();
    let neg: Vec<Vec<BigRational>> = a
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(-x)).collect())
        .collect();
    let mut l = vec![vec![BigRational::zero(); n]; n];
    let mut d: Vec<BigRational> = Vec::with_capacity(n);
    for k in 0..n {
        let mut dk = neg[k][k].clone();
        for j in 0..k {
            dk -= &l[k][j] * &l[k][j] * &d[j];
        }
        if !dk.is_positive() {
            return false;
        }
        for i in k + 1..n {
            let mut v = neg[i][k].clone();
            for j in 0..k {
                v -= &l[i][j] * &l[k][j] * &d[j];
            }
            l[i][k] = v / &dk;
        }
        d.push(dk);
    }
    true
}

/// Solves `a·x = b` by fraction-free elimination.
///
/// Returns `(numerators, det)` with `x_i = numerators[i] / det`; the numerators
/// are the entries of `adj(a)·b`. `None` if `a` is singular.
pub fn solve_fraction_free(a: &IntMatrix, b: &[BigInt]) -> Option<(Vec<BigInt>, BigInt)> {
    let n = a.len();
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let i = (k + 1..n).find(|&i| !m[i][k].is_zero())?;
            m.swap(k, i);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    // m is upper triangular with m[n-1][n-1] = ±det(a)
    let det_signed = m[n - 1][n - 1].clone();
    let mut y = vec![BigInt::zero(); n];
    for i in (0..n).rev() {
        let mut acc = &det_signed * &m[i][n];
        for j in i + 1..n {
            acc -= &m[i][j] * &y[j];
        }
        y[i] = acc / &m[i][i];
    }
    // y = det_signed · x; normalize to the true determinant
    let det = if negate { -det_signed } else { det_signed };
    if negate {
        for v in &mut y {
            *v = -&*v;
        }
    }
    Some((y, det))
}

/// Cramer's rule with one determinant per unknown.
pub fn solve_cramer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    let det = bareiss_determinant(a.clone());
    if det.is_zero() {
        return None;
    }
    Some(
        (0..a.len())
            .map(|col| {
                let replaced: IntMatrix = a
                    .iter()
                    .zip(b)
                    .map(|(row, bi)| {
                        let mut r = row.clone();
                        r[col] = bi.clone();
                        r
                    })
                    .collect();
                BigRational::new(bareiss_determinant(replaced), det.clone())
            })
            .collect(),
    )
}

/// Gaussian elimination over the rationals.
pub fn solve_rational(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            row.iter()
                .chain(std::iter::once(bi))
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, p);
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &m[k][k];
            for j in k..=n {
                let t = &f * &m[k][j];
                m[i][j] -= t;
            }
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = m[i][n].clone();
        for j in i + 1..n {
            acc -= &m[i][j] * &x[j];
        }
        x[i] = acc / &m[i][i];
    }
    Some(x)
}

pub fn quadratic_form(a: &IntMatrix, x: &[BigRational]) -> BigRational {
    let mut acc = BigRational::zero();
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !v.is_zero() {
                acc += &x[i] * BigRational::from_integer(v.clone()) * &x[j];
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(rows: &[&[i64]]) -> IntMatrix {
        to_big(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    /// Laplace expansion along the first row.
    fn cofactor_det(a: &[Vec<i64>]) -> i128 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        let mut acc = 0i128;
        for col in 0..n {
            let minor: Vec<Vec<i64>> = a[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != col)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if col % 2 == 0 { 1 } else { -1 };
            acc += sign * a[0][col] as i128 * cofactor_det(&minor);
        }
        acc
    }

    #[test]
    fn small_determinants() {
        assert_eq!(bareiss_determinant(big(&[&[-2]])), BigInt::from(-2));
        assert_eq!(
            bareiss_determinant(big(&[&[-2, 1], &[1, -2]])),
            BigInt::from(3)
        );
        assert_eq!(
            bareiss_determinant(big(&[&[0, 1], &[1, 0]])),
            BigInt::from(-1)
        );
        assert_eq!(
            bareiss_determinant(big(&[&[1, 2], &[2, 4]])),
            BigInt::zero()
        );
        assert_eq!(bareiss_determinant(vec![]), BigInt::one());
    }

    #[test]
    fn zero_leading_minor_falls_back() {
        let a = big(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 2]]);
        let minors = leading_principal_minors(&a);
        assert_eq!(
            minors,
            vec![BigInt::from(0), BigInt::from(-1), BigInt::from(-2)]
        );
    }

    #[test]
    fn definiteness_examples() {
        assert!(negative_definite_by_minors(&big(&[&[-2]])));
        assert!(!negative_definite_by_minors(&big(&[&[1]])));
        assert!(negative_definite_by_cholesky(&big(&[&[-2]])));
        assert!(!negative_definite_by_cholesky(&big(&[&[1]])));
        let semidef = big(&[&[-1, 1], &[1, -1]]);
        assert!(!negative_definite_by_minors(&semidef));
        assert!(!negative_definite_by_cholesky(&semidef));
    }

    fn symmetric_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=6).prop_flat_map(|n| {
            proptest::collection::vec(-9i64..=9, n * n).prop_map(move |v| {
                let mut m = vec![vec![0; n]; n];
                for i in 0..n {
                    for j in i..n {
                        m[i][j] = v[i * n + j];
                        m[j][i] = v[i * n + j];
                    }
                }
                m
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn bareiss_matches_cofactor_expansion(m in symmetric_matrix()) {
            prop_assert_eq!(bareiss_determinant(to_big(&m)), BigInt::from(cofactor_det(&m)));
        }

        #[test]
        fn definiteness_routes_agree(m in symmetric_matrix()) {
            let a = to_big(&m);
            prop_assert_eq!(negative_definite_by_minors(&a), negative_definite_by_cholesky(&a));
        }

        #[test]
        fn solve_routes_agree(m in symmetric_matrix(), seed in proptest::collection::vec(-9i64..=9, 6)) {
            let a = to_big(&m);
            let b: Vec<BigInt> = seed[..m.len()].iter().map(|&x| BigInt::from(x)).collect();
            let cramer = solve_cramer(&a, &b);
            let gauss = solve_rational(&a, &b);
            let ff = solve_fraction_free(&a, &b).map(|(num, det)| {
                num.into_iter().map(|n| BigRational::new(n, det.clone())).collect::<Vec<_>>()
            });
            prop_assert_eq!(&cramer, &gauss);
            prop_assert_eq!(&cramer, &ff);
            if let Some((_, det)) = solve_fraction_free(&a, &b) {
                prop_assert_eq!(det, bareiss_determinant(a.clone()));
            }
        }
    }
}
