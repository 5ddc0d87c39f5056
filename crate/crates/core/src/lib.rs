//! Exact-arithmetic toolkit for the dyadic Weil representation in the
//! Schrödinger model, the minimal type of the metaplectic double cover of
//! `Sp_2n(Q_2)`, and the resulting unequal-parameter affine Hecke algebra.
//!
//! Everything is computed over exact scalar domains: rational numbers for
//! group elements and lattices, cyclotomic numbers for character and function
//! values. There is no floating point anywhere; every identity that the
//! verification suites assert is an exact equality.
//!
//! The crate is organised as a stack:
//!
//! * [`cyclotomic`] - the scalar field `Q(zeta_M)` and exact linear algebra,
//! * [`dyadic`] - rationals viewed inside `Q_p`: valuations, fractional
//!   parts, additive characters,
//! * [`schwartz`] - Schwartz–Bruhat functions on `Q_p^n` with an exact
//!   Fourier transform,
//! * [`chevalley`] - the type-`C_n` root system and symplectic Chevalley
//!   generator matrices,
//! * [`weil`] - the Heisenberg group, the Weil operators for the generators,
//!   and a compiler from generator words to operators,
//! * [`finite`] - finite symplectic/orthogonal groups over `F_2` and the
//!   index bookkeeping behind the Hecke parameters,
//! * [`weyl`] - the affine Weyl group of type `C~_n` as exact affine maps,
//! * [`hecke`] - the unequal-parameter affine Hecke algebra with its trace,
//!   star, and type-B presentation,
//! * [`suites`] / [`report`] - the named verification suites and the
//!   machine-readable reports emitted by the CLI.
//!
//! Batch checks (randomised identity sweeps, Gram matrices, closures) run
//! data-parallel through [`batch`] when the default `parallel` feature is
//! enabled, and fall back to sequential iteration otherwise.

pub mod batch;
pub mod chevalley;
pub mod cyclotomic;
pub mod dyadic;
pub mod finite;
pub mod hecke;
pub mod linalg;
pub mod matrix;
pub mod report;
pub mod schwartz;
pub mod suites;
pub mod weil;
pub mod weyl;

pub use cyclotomic::{CycMatrix, Cyclotomic, Rat};
pub use dyadic::AdditiveCharacter;
pub use schwartz::{CharacterData, SchwartzFunction};
