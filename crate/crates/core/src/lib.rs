//! Engineering of self-assembled spin chains from 1-D trapping potentials.
//!
//! The pipeline implemented here starts from a trapping potential inside a
//! hard-wall box, solves the single-particle Schrödinger problem in a sine
//! basis ([`spectral`]), turns the lowest-lying states into the geometric
//! exchange coefficients of an effective Heisenberg chain ([`geomcoeff`]),
//! propagates a single spin excitation through that chain ([`spinchain`]),
//! tunes the potential shape for near-perfect end-to-end state transfer
//! ([`calibrate`]), and quantifies how robust the transfer is against
//! potential noise and tilts ([`ensemble`]).
//!
//! Units everywhere: lengths in the trap length scale `ℓ`, energies in
//! `ε = ħ²/(2mℓ²)`, times in `ħ/ε`. In these units the stationary
//! Schrödinger equation reads `−ψ″ + Vψ = Eψ` and the exchange
//! coefficients carry units `ℓ⁻³`.

pub mod calibrate;
pub mod ensemble;
pub mod geomcoeff;
pub mod grid;
pub mod linalg;
pub mod potentials;
pub mod spectral;
pub mod spinchain;

use std::fmt;
use std::iter::Sum;

/// Scalar type for all numerics in this crate: `f32` or `f64`.
///
/// Everything is generic over this so the whole pipeline can be driven in
/// either precision; the concrete aliases below pin the `f64` instantiation
/// used by the command-line tools and the test suites.
pub trait Float:
    num_traits::Float
    + num_traits::FloatConst
    + num_traits::NumAssign
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + ndarray::ScalarOperand
    + Sum
    + fmt::Debug
    + fmt::Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Lossy cast from any primitive; panics only for values outside the
    /// target range, which never occurs for the literals used here.
    fn cast<U: num_traits::NumCast>(x: U) -> Self {
        num_traits::NumCast::from(x).expect("numeric cast")
    }

    fn to_f64(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).expect("finite scalar")
    }
}

impl Float for f32 {}
impl Float for f64 {}

/// Errors produced by the solver pipeline.
///
/// Numeric payloads are carried as `f64` regardless of the working
/// precision; they are for diagnostics only.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid potential spec: {0}")]
    InvalidSpec(String),

    #[error(
        "grid too coarse for n_basis = {n_basis}: need at least {needed} points \
         (8 per half-period of the highest basis mode), got {got}"
    )]
    GridTooCoarse {
        n_basis: usize,
        needed: usize,
        got: usize,
    },

    #[error("eigensolver failed to converge at index {index}: off-diagonal residual {residual:e}")]
    Eigensolver { index: usize, residual: f64 },

    #[error(
        "coefficient computation did not converge: max relative change {change:e} \
         between n_basis {coarse} and {fine} (tolerance {tol:e})"
    )]
    Convergence {
        change: f64,
        coarse: usize,
        fine: usize,
        tol: f64,
    },

    #[error(
        "bracket ({lo}, {hi}) does not straddle the target: beta(lo) = {beta_lo}, beta(hi) = {beta_hi}"
    )]
    BadBracket {
        lo: f64,
        hi: f64,
        beta_lo: f64,
        beta_hi: f64,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("degenerate data: {0}")]
    DegenerateData(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// FNV-1a 64-bit hash; stable across platforms and releases, used for the
/// provenance hashes embedded in output files.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

pub use grid::{Grid, GridRule};
pub use potentials::{PotentialSpec, PotentialTerm};
pub use spectral::{SineBasis, SolverSettings, SpectralSolution};

/// Concrete `f64` instantiations of the main pipeline types.
pub type PotentialSpec64 = potentials::PotentialSpec<f64>;
pub type PotentialTerm64 = potentials::PotentialTerm<f64>;
pub type Grid64 = grid::Grid<f64>;
pub type SpectralSolution64 = spectral::SpectralSolution<f64>;
pub type GeometricCoefficients64 = geomcoeff::GeometricCoefficients<f64>;
pub type SpinChainModel64 = spinchain::SpinChainModel<f64>;
pub type TransferSummary64 = spinchain::TransferSummary<f64>;
pub type EnsembleStats64 = ensemble::EnsembleStats<f64>;
