//! SU(2)-frames on a link as a ℤ-torsor, the Ê-invariant, and its reductions.
//!
//! Frame classes are symbolic: a class is its integer offset from the base
//! frame induced by a trivialization of the Milnor fibre's tangent bundle.
//! Twisting by a map of degree `n` to SU(2) moves the offset by `n`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("incomparable-frames: {left} vs {right}")]
    IncomparableFrames { left: String, right: String },
    #[error("ehat-undefined: frame is not measured against the Milnor-fibre base frame")]
    EhatUndefined,
    #[error("invalid-todd-value: 12·Td = {0} is not an integer")]
    InvalidToddValue(BigRational),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not-characteristic: signature {sigma} and C² = {c_sq} differ mod 8")]
    NotCharacteristic { sigma: i64, c_sq: i64 },
}

/// Residue class in `ℤ/M`, stored as its representative in `0..M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue<const M: u32>(u32);

pub type Z24 = Residue<24>;
pub type Z16 = Residue<16>;
pub type Z12 = Residue<12>;

impl<const M: u32> Residue<M> {
    pub fn new(value: i64) -> Self {
        Residue(value.rem_euclid(M as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    /// Reduction `ℤ/M → ℤ/N`; panics unless `N` divides `M`.
    pub fn reduce<const N: u32>(self) -> Residue<N> {
        assert_eq!(M % N, 0, "{N} does not divide {M}");
        Residue(self.0 % N)
    }
}

impl<const M: u32> fmt::Display for Residue<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basepoint {
    /// Offsets are measured from the frame induced by the Milnor fibre.
    MilnorBase,
    /// Offsets relative to an arbitrary reference frame.
    Abstract,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrameClass {
    pub manifold: String,
    pub offset: i64,
    pub basepoint: Basepoint,
}

impl FrameClass {
    /// The base frame `β` itself: offset zero.
    pub fn milnor_base(manifold: impl Into<String>) -> Self {
        FrameClass {
            manifold: manifold.into(),
            offset: 0,
            basepoint: Basepoint::MilnorBase,
        }
    }

    pub fn abstract_frame(manifold: impl Into<String>, offset: i64) -> Self {
        FrameClass {
            manifold: manifold.into(),
            offset,
            basepoint: Basepoint::Abstract,
        }
    }
}

/// Twists `f` by a degree-`n` map.
pub fn act(f: &FrameClass, n: i64) -> FrameClass {
    FrameClass {
        offset: f.offset + n,
        ..f.clone()
    }
}

/// The unique `n` with `act(g, n) = f`.
pub fn diff(f: &FrameClass, g: &FrameClass) -> Result<i64, FrameError> {
    if f.manifold != g.manifold || f.basepoint != g.basepoint {
        return Err(FrameError::IncomparableFrames {
            left: format!("{} ({:?})", f.manifold, f.basepoint),
            right: format!("{} ({:?})", g.manifold, g.basepoint),
        });
    }
    Ok(f.offset - g.offset)
}

/// The canonical frame of a smoothable Gorenstein germ with Milnor number `mu`:
/// each of the `μ + 1` cells of the Milnor fibre contributes one unit of degree.
pub fn canonical_frame(manifold: impl Into<String>, mu: u64) -> FrameClass {
    act(&FrameClass::milnor_base(manifold), mu as i64 + 1)
}

pub fn ehat(f: &FrameClass) -> Result<i64, FrameError> {
    match f.basepoint {
        Basepoint::MilnorBase => Ok(f.offset),
        Basepoint::Abstract => Err(FrameError::EhatUndefined),
    }
}

/// `Ê` together with its images in `ℤ₂₄` and `ℤ₁₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InvariantBundle {
    pub ehat: i64,
    pub e_r: Z24,
    pub e_c: Z12,
}

pub fn reduce(ehat: i64) -> InvariantBundle {
    InvariantBundle {
        ehat,
        e_r: Residue::new(ehat),
        e_c: Residue::new(ehat),
    }
}

/// `e_R = 12·(Td + Arf) mod 24`.
pub fn e_r_from_td_arf(td: &BigRational, arf: u8) -> Result<Z24, FrameError> {
    if arf > 1 {
        return Err(FrameError::InvalidArgument(format!(
            "Arf invariant must be 0 or 1, got {arf}"
        )));
    }
    let twelve_td = td * BigRational::from_integer(BigInt::from(12));
    if !twelve_td.is_integer() {
        return Err(FrameError::InvalidToddValue(twelve_td));
    }
    let v = (twelve_td.to_integer() + 12 * arf as i64).mod_floor(&BigInt::from(24));
    Ok(Residue::new(v.to_i64().expect("residue fits")))
}

/// `(c_1² + c_2) mod 12`.
pub fn e_c_from_chern(c1_sq: i64, c2: i64) -> Z12 {
    Residue::new(c1_sq.rem_euclid(12) + c2.rem_euclid(12))
}

pub fn rochlin(sigma: i64) -> Z16 {
    Residue::new(sigma)
}

/// `(σ, (σ - C²)/8)` for a characteristic surface `C`.
pub fn characteristic_pair(sigma: i64, c_sq: i64) -> Result<(i64, i64), FrameError> {
    let d = sigma - c_sq;
    if d.rem_euclid(8) != 0 {
        return Err(FrameError::NotCharacteristic { sigma, c_sq });
    }
    Ok((sigma, d / 8))
}
