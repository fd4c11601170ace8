//! The built-in coefficient algebras.

pub mod difference;
pub mod differential;
pub mod group_ring;
pub mod quaternion;
pub mod rational_function;

pub use difference::DifferenceAlgebra;
pub use differential::RationalDifferentialAlgebra;
pub use group_ring::{GroupRingC5, GroupRingC5Element};
pub use quaternion::{Quaternion, QuaternionAlgebra};
pub use rational_function::{RationalFunction, Variable};
