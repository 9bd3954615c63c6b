//! GL(1) harmonic analysis attached to automorphic L-functions.
//!
//! The crate provides, over k = ℚ:
//! - exact Mellin-side arithmetic in z = q^{-s} ([`qseries`]) on cyclotomic
//!   scalars ([`exact`]);
//! - p-adic characters, conductors, and Gauss sums ([`localfield`]);
//! - non-Archimedean Schwartz functions in Mellin coordinates, basic
//!   functions, γ-factors, and the Fourier operator ([`mellin_na`]);
//! - the Archimedean closed integrand family with Γ-factor identities and
//!   independent quadrature ([`mellin_arch`]);
//! - a catalog of representation descriptors: Dirichlet characters, the
//!   weight-12 level-1 cusp form, symmetric-power transfers ([`repdata`]);
//! - adelic theta series with certified truncation, the global Fourier
//!   operator, Poisson-summation checks, and global zeta integrals
//!   ([`theta_global`]);
//! - completed-L evaluation on the critical line and zero location
//!   ([`zeros`]).

pub mod acceptance;
pub mod exact;
pub mod localfield;
pub mod mellin_arch;
pub mod mellin_na;
pub mod qseries;
pub mod repdata;
pub mod theta_global;
pub mod zeros;

pub use exact::{CRat, Cyclo, QRat, Turn};
