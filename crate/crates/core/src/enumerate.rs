//! Bounded sweeps over weight vectors and genus vectors of a fixed graph.
//!
//! Both sweeps are embarrassingly parallel; counts are aggregated
//! commutatively and solution lists are emitted in lexicographic order, so the
//! results do not depend on how the work is split.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::plumbing::{
    self, adjunction_rhs, canonical_cycle, intersection_matrix, is_negative_definite,
    PlumbingError, PlumbingGraph,
};

/// Largest box an exhaustive sweep will visit.
pub const EXHAUSTIVE_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error(
        "too-large-use-sampling: {size} vectors exceed the exhaustive limit {EXHAUSTIVE_LIMIT}"
    )]
    TooLargeUseSampling { size: u128 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Plumbing(#[from] PlumbingError),
    #[error("internal-inconsistency: {0}")]
    InternalInconsistency(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSweepReport {
    pub vertex_count: usize,
    pub bound: u64,
    pub mode: SweepMode,
    pub total: u64,
    pub negative_definite: u64,
    /// Tested vectors with `w_i ≤ -(deg(i) + 1)` everywhere.
    pub dominant: u64,
    pub dominant_negative_definite: u64,
}

impl WeightSweepReport {
    pub fn fraction(&self) -> BigRational {
        if self.total == 0 {
            return BigRational::zero();
        }
        BigRational::new(self.negative_definite.into(), self.total.into())
    }
}

#[derive(Debug, Default, Clone, Copy)]
struct Tally {
    total: u64,
    negative_definite: u64,
    dominant: u64,
    dominant_negative_definite: u64,
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        Tally {
            total: self.total + o.total,
            negative_definite: self.negative_definite + o.negative_definite,
            dominant: self.dominant + o.dominant,
            dominant_negative_definite: self.dominant_negative_definite
                + o.dominant_negative_definite,
        }
    }
}

fn tally_one(topology: &PlumbingGraph, degrees: &[i64], weights: &[i64]) -> Tally {
    let nd = is_negative_definite(&intersection_matrix(&topology.with_weights(weights)));
    let dominant = weights.iter().zip(degrees).all(|(&w, &d)| w <= -(d + 1));
    Tally {
        total: 1,
        negative_definite: nd as u64,
        dominant: dominant as u64,
        dominant_negative_definite: (dominant && nd) as u64,
    }
}

/// Tests weight vectors in `{-N, ..., -1}^r` on the topology of `topology`
/// (its own weights are ignored).
pub fn sweep_weights(
    topology: &PlumbingGraph,
    bound: u64,
    mode: SweepMode,
) -> Result<WeightSweepReport, EnumerateError> {
    if bound == 0 {
        return Err(EnumerateError::InvalidArgument(
            "weight bound must be positive".into(),
        ));
    }
    let r = topology.vertex_count();
    let degrees: Vec<i64> = (0..r).map(|i| topology.degree(i) as i64).collect();

    let tally = match mode {
        SweepMode::Exhaustive => {
            let size = (bound as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
            if size > EXHAUSTIVE_LIMIT {
                return Err(EnumerateError::TooLargeUseSampling { size });
            }
            (0..size as u64)
                .into_par_iter()
                .map(|mut index| {
                    let mut weights = vec![0i64; r];
                    for w in weights.iter_mut().rev() {
                        *w = -((index % bound) as i64) - 1;
                        index /= bound;
                    }
                    tally_one(topology, &degrees, &weights)
                })
                .reduce(Tally::default, Tally::merge)
        }
        SweepMode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let draws: Vec<Vec<i64>> = (0..samples)
                .map(|_| (0..r).map(|_| -rng.gen_range(1..=bound as i64)).collect())
                .collect();
            draws
                .par_iter()
                .map(|w| tally_one(topology, &degrees, w))
                .reduce(Tally::default, Tally::merge)
        }
    };

    Ok(WeightSweepReport {
        vertex_count: r,
        bound,
        mode,
        total: tally.total,
        negative_definite: tally.negative_definite,
        dominant: tally.dominant,
        dominant_negative_definite: tally.dominant_negative_definite,
    })
}

/// Numerically Gorenstein genus vectors in the box `{0, ..., g_max}^r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusSolutionSet {
    pub graph: PlumbingGraph,
    pub g_max: u32,
    pub solutions: Vec<Vec<u32>>,
    pub lattice_period: BigInt,
}

/// Integrality of `K = I⁻¹ (b₀ + 2g)` only depends on `adj(I)·(b₀ + 2g) mod det`,
/// which is affine in `g`; the box is swept with that residue test and every
/// hit is then re-solved exactly.
pub fn gorenstein_genera(
    graph: &PlumbingGraph,
    g_max: u32,
) -> Result<GenusSolutionSet, EnumerateError> {
    let r = graph.vertex_count();
    let size = (g_max as u128 + 1)
        .checked_pow(r as u32)
        .unwrap_or(u128::MAX);
    if size > EXHAUSTIVE_LIMIT {
        return Err(EnumerateError::TooLargeUseSampling { size });
    }

    let base = graph.with_genera(&vec![0; r]);
    let m = plumbing::linalg::to_big(intersection_matrix(&base).rows());
    let det = plumbing::determinant(&intersection_matrix(&base));
    if det.is_zero() {
        return Err(PlumbingError::SingularIntersectionForm.into());
    }
    let period = det.abs();
    let modulus = period
        .to_i128()
        .ok_or_else(|| EnumerateError::InvalidArgument("determinant too large".into()))?;

    let reduce = |v: &BigInt| {
        v.mod_floor(&period)
            .to_i128()
            .expect("residue below modulus")
    };
    let solve = |rhs: &[BigInt]| -> Result<Vec<i128>, EnumerateError> {
        let (num, d) = plumbing::linalg::solve_fraction_free(&m, rhs)
            .ok_or(PlumbingError::SingularIntersectionForm)?;
        debug_assert_eq!(d.abs(), period);
        // numerators are adj·rhs up to the sign of det; divisibility is sign-blind
        Ok(num.iter().map(reduce).collect())
    };

    let offset = solve(&adjunction_rhs(&base))?;
    // column i: adj·(2 e_i)
    let columns: Vec<Vec<i128>> = (0..r)
        .map(|i| {
            let mut e = vec![BigInt::zero(); r];
            e[i] = BigInt::from(2);
            solve(&e)
        })
        .collect::<Result<_, _>>()?;

    let side = g_max as u64 + 1;
    let first_axis: Vec<Vec<Vec<u32>>> = (0..side)
        .into_par_iter()
        .map(|g0| {
            let mut found = Vec::new();
            let mut g = vec![0u32; r];
            g[0] = g0 as u32;
            loop {
                let integral = (0..r).all(|row| {
                    let acc = g.iter().zip(&columns).fold(offset[row], |acc, (&gi, col)| {
                        (acc + gi as i128 * col[row]) % modulus
                    });
                    acc == 0
                });
                if integral {
                    found.push(g.clone());
                }
                // odometer over coordinates 1..r, last fastest
                let mut pos = r;
                loop {
                    if pos <= 1 {
                        return found;
                    }
                    pos -= 1;
                    if g[pos] < g_max {
                        g[pos] += 1;
                        break;
                    }
                    g[pos] = 0;
                }
            }
        })
        .collect();
    let solutions: Vec<Vec<u32>> = first_axis.into_iter().flatten().collect();

    for g in &solutions {
        let k = canonical_cycle(&graph.with_genera(g))?;
        if !k.integral {
            return Err(EnumerateError::InternalInconsistency(format!(
                "genus vector {g:?} passed the residue test but K is not integral"
            )));
        }
    }

    Ok(GenusSolutionSet {
        graph: graph.clone(),
        g_max,
        solutions,
        lattice_period: period,
    })
}
