//! Koopman composition operators on finite G-spaces, numerical Schur
//! machinery, and the deep ridgelet transform.
//!
//! The crate is organized around a small tower of concepts:
//!
//! * [`group`] — finite groups as Cayley tables, group actions on finite
//!   point sets, and invariant (counting) measures.
//! * [`space`] — complex L² spaces over finite measure spaces: weighted
//!   inner products, norms, orthonormalization.
//! * [`koopman`] — the composition operator `K_g[ψ] = ψ∘g` as an explicit
//!   unitary matrix family acting from the right, plus the single-layer
//!   network equation and its exact pseudo-inverse.
//! * [`schur`] — commutant computation, invariant-subspace decomposition,
//!   and irreducibility certificates via commutant dimension.
//! * [`ridgelet`] — the ridgelet analysis/synthesis pair for the Koopman
//!   family: the transform `R_ψ[f](g) = ⟨f, K_g[ψ]⟩`, the network
//!   `DNN[γ;ψ] = Σ_g γ(g)·ψ∘g`, admissibility constants, and the
//!   `DNN∘R = c_ψ·id` reconstruction identity on irreducible subspaces.
//! * [`wavelet`] — the continuous counterpart on the `ax+b` group: a
//!   quadrature continuous wavelet transform with admissibility estimation
//!   and approximate reconstruction.
//!
//! Everything in the finite-group modules is exact up to floating-point
//! roundoff; the wavelet module is approximate by nature and carries its
//! own error model.
//!
//! The crate is `no_std`-compatible (`alloc` required): disable default
//! features and enable `libm` instead of `std`.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("deep-ridgelet requires either the `std` or the `libm` feature");

pub mod error;
pub mod group;
mod linalg;
pub mod koopman;
pub mod ridgelet;
pub mod schur;
pub mod space;
pub mod tol;
pub mod wavelet;

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex<f64>;

// Matrix types appear in public signatures; re-export the crates so
// downstream users don't need to pin matching versions.
pub use nalgebra;
pub use num_complex;

pub use error::Error;
pub use group::{FiniteGroup, GAction, InvariantMeasure, Side};
pub use koopman::{dual_action, KoopmanRep};
pub use ridgelet::{
    admissibility_constant, adjointness_gap, commuting_certificate, composition_matrix,
    dnn_apply, intertwining_gaps, reconstruct, ridgelet_transform, schur_scalar_gap,
    AdmissiblePair, RidgeletCoefficients,
};
pub use schur::{
    compute_commutant, decompose_invariant, is_irreducible, subreps_equivalent, CommutantBasis,
    Subspace,
};
pub use space::{gram_schmidt, inner_product, norm, FieldFunction};
pub use tol::Tolerances;
pub use wavelet::{
    admissibility_affine, gaussian_bump, gaussian_packet, mexican_hat, reconstruction_error, wavelet_reconstruct,
    wavelet_transform, Admissibility, AffineGrid, SampledSignal, SignalGrid,
};
