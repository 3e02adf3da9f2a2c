//! Computational dictionary between tt*-Toda solution data, Stokes parameters,
//! positive energy representation labels of affine `sl(n+1)` and the
//! conformal field theory data attached to them.
//!
//! The crate is organised bottom-up:
//!
//! * [`lie`]: exact type-A root and weight machinery (Cartan vectors, basic
//!   weights, the Weyl alcove, dominant weights of a given level).
//! * [`toda_params`]: exponents `k`, asymptotic data `m`, monodromy
//!   eigenvalues and Stokes parameters `s`.
//! * [`rep_map`]: integer exponents to affine dominant weights `(Λ, k)`.
//! * [`fusion`]: special elements `t_Λ`, characters evaluated on them and the
//!   fusion-ideal membership test.
//! * [`minimal_models`]: central charges, conformal dimensions, the centre
//!   action and necklace enumeration of primaries.
//! * [`toda_ode`]: radial integrator for the Toda system with invariant
//!   monitors.
//!
//! Everything on the lattice side is exact ([`Rational`] is an arbitrary
//! precision rational); Stokes data, characters and trajectories are `f64`.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fusion;
pub mod lie;
pub mod minimal_models;
pub mod poly;
pub mod rational;
pub mod rep_map;
pub mod selfcheck;
pub mod toda_ode;
pub mod toda_params;

pub use error::{Error, Result};
pub use fusion::SpecialElement;
pub use lie::{AlcovePosition, CartanVector, EpsilonCoefficients};
pub use minimal_models::{KString, MinimalModelSpec, OperatorString};
pub use num_complex::Complex64;
pub use rational::Rational;
pub use rep_map::AffineDominantWeight;
pub use toda_ode::{StepPolicy, TodaState, TodaTrajectory};
pub use toda_params::{KParams, MParams, StokesParams};
