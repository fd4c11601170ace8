//! Exact construction of the kernel operator `K` for a finite list of
//! elements `f_1, ..., f_k` of a coefficient algebra `A` equipped with an
//! endomorphism `D`, and factorization of any operator annihilating those
//! elements as `L = Q * K`.
//!
//! The pieces, bottom-up:
//! - [`algebra`]: the coefficient-algebra interface ([`Algebra`]) with the
//!   endomorphism and its twist data `D * f = p_f * D + q_f`.
//! - [`algebras`]: four built-in exact algebras (rational functions with
//!   `d/dx`, quaternionic rational functions with `d/dx`, rational functions
//!   with a shift-plus-scalar difference operator, and the group ring of the
//!   cyclic group of order five with the automorphism `r -> r^2`).
//! - [`ncmatrix`]: matrices over a noncommutative algebra and two-sided inversion.
//! - [`operator`]: the operator ring in left normal form `sum a_i * D^i`.
//! - [`factorization`]: the kernel context (`Phi`, dual operators `P_i`, `K`,
//!   the `D-hat` spanning family) and the factorization routines.
//! - [`text`]: the element/operator expression grammar and canonical printing.

pub mod algebra;
pub mod algebras;
pub mod error;
pub mod factorization;
mod intpoly;
pub mod ncmatrix;
pub mod operator;
pub mod poly;
pub mod sample;
pub mod text;

pub use algebra::{Algebra, AlgebraTag, TwistPair};
pub use error::{Error, KernelViolation, Result};
pub use factorization::{right_divide_monic, KernelContext};
pub use ncmatrix::NcMatrix;
pub use operator::{Operator, OperatorAlgebra};
