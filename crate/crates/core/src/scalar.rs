//! Scalar abstraction and numerical tolerances.
//!
//! All floating-point machinery in this crate is generic over [`Real`], which
//! is implemented for `f32` and `f64`. Combinatorial quantities (distances,
//! walk counts, intersection arrays) stay in exact integer arithmetic.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar usable by the spectral and polynomial code.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Sum + Debug + Display + LowerExp + Default + Send + Sync + 'static
{
    /// Tolerances tuned to the precision of the type.
    fn default_tolerances() -> Tolerances<Self>;
}

impl Real for f64 {
    fn default_tolerances() -> Tolerances<f64> {
        Tolerances {
            group: 1e-8,
            mult: 1e-8,
            num: 1e-7,
            pdr: 1e-7,
            walk: 1e-6,
            orth: 1e-8,
            perron: 1e-9,
            walk_cap: 12,
        }
    }
}

impl Real for f32 {
    fn default_tolerances() -> Tolerances<f32> {
        Tolerances {
            group: 1e-3,
            mult: 1e-4,
            num: 1e-3,
            pdr: 1e-3,
            walk: 1e-3,
            orth: 1e-3,
            perron: 1e-4,
            walk_cap: 8,
        }
    }
}

/// Converts an `f64` literal into `T`.
#[inline]
pub fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("f64 literal representable in scalar type")
}

/// Converts a count into `T`.
#[inline]
pub fn count<T: Real>(k: usize) -> T {
    T::from_usize(k).expect("count representable in scalar type")
}

/// Numerical tolerances used across the crate.
///
/// `group` and `pdr` are relative to `max(1, λ0)`, `walk` is relative to
/// `max(1, λ0^l)`, and `orth` is relative to the norms involved. The rest are
/// absolute.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances<T> {
    /// Eigenvalue grouping threshold.
    pub group: T,
    /// Local multiplicities below this are clamped to zero.
    pub mult: T,
    /// Matrix identities (idempotent algebra, Perron equation).
    pub num: T,
    /// Pseudo-regularity and polynomial column comparisons.
    pub pdr: T,
    /// Spectral walk-count identities.
    pub walk: T,
    /// Orthogonality, normalization and recurrence of predistance polynomials.
    pub orth: T,
    /// Equalities between Perron entries and their closed forms.
    pub perron: T,
    /// Largest walk length accepted by spectral walk counting.
    pub walk_cap: u32,
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        T::default_tolerances()
    }
}

impl<T: Real> Tolerances<T> {
    pub fn group_threshold(&self, lambda0: T) -> T {
        self.group * lambda0.max(T::one())
    }

    pub fn pdr_threshold(&self, lambda0: T) -> T {
        self.pdr * lambda0.max(T::one())
    }

    pub fn walk_threshold(&self, lambda0: T, l: u32) -> T {
        self.walk * lambda0.abs().powi(l as i32).max(T::one())
    }
}
