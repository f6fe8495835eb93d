//! Numerics for the Taylor/Fourier coefficients of powers of a Blaschke factor.
//!
//! For `λ` in the unit disk, the Blaschke factor `b_λ(z) = (z − λ)/(1 − λ̄z)` is
//! a disk automorphism, unimodular on the unit circle. This crate computes the
//! coefficients of `b_λ(z)^n = Σ_k ĉ(k) z^k` three independent ways (exact
//! big-rational convolution, FFT sampling of the circle, and adaptive quadrature
//! of the oscillatory phase integral), evaluates the large-`n` asymptotic laws
//! that govern `ĉ(k)` in each of the eight `k`-bands between exponential decay,
//! Airy-type transition, and oscillatory decay, and builds strongly annular
//! coefficient sequences out of shifted, weighted blocks `ĉ` of `b_{1/2}^N`.
//!
//! The crate is `no_std`-compatible (requires `alloc`); disable the default
//! `std` feature to use it in that configuration. Float transcendentals then
//! come from `libm`.
//!
//! Modules:
//!
//! * [`param`] — domain parameters (`λ`, queries `(n, k)`), phase reduction to real `λ`
//! * [`region`] — the region classifier for `k ∈ [0, ∞)`
//! * [`saddle`] — stationary points of `Φ_a(z) = log(z^{−a} b_λ(z))`, the phase
//!   `h(φ)`, and the cubic-normal-form parameters `γ²`, `γ³`, `Δ`, `η`
//! * [`airy`] — real Airy function `Ai` with its two limiting approximations
//! * [`exact`] — the three coefficient oracles and the duality identity check
//! * [`asym`] — per-region asymptotic formulas, dispatch, and error sweeps
//! * [`norms`] — `ℓ^p` norms, paired-min norms, and scaling-exponent fits
//! * [`annular`] — strongly annular constructions and their verification

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub(crate) mod math;

pub mod airy;
pub mod annular;
pub mod asym;
pub mod exact;
pub mod fit;
pub mod logspace;
pub mod norms;
pub mod param;
pub mod region;
pub mod saddle;

pub use logspace::LogValue;
pub use param::{BlaschkeParam, CoeffQuery, Lambda, ParamError};
pub use region::{Region, RegionLabel, Thresholds};
