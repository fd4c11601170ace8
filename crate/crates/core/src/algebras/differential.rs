//! `Q(x)` with `D = d/dx`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::rational_function::{RationalFunction, Variable};
use crate::algebra::{Algebra, AlgebraTag, TwistPair};
use crate::error::{Error, Result};

/// The field of rational functions in `x`, differentiated by `d/dx`.
/// By the product rule `D * f = f * D + f'`.
#[derive(Clone, Debug, Default)]
pub struct RationalDifferentialAlgebra;

impl RationalDifferentialAlgebra {
    pub fn new() -> Self {
        RationalDifferentialAlgebra
    }

    pub fn x(&self) -> RationalFunction {
        RationalFunction::var(Variable::X)
    }

    pub fn rational(&self, c: BigRational) -> RationalFunction {
        RationalFunction::constant(c, Variable::X)
    }
}

impl Algebra for RationalDifferentialAlgebra {
    type Elem = RationalFunction;

    fn tag(&self) -> AlgebraTag {
        AlgebraTag::new("qx")
    }

    fn zero(&self) -> RationalFunction {
        RationalFunction::zero(Variable::X)
    }

    fn one(&self) -> RationalFunction {
        RationalFunction::one(Variable::X)
    }

    fn from_int(&self, n: &BigInt) -> RationalFunction {
        RationalFunction::from_int(n.clone(), Variable::X)
    }

    fn is_zero(&self, a: &RationalFunction) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a + b
    }

    fn neg(&self, a: &RationalFunction) -> RationalFunction {
        -a
    }

    fn mul(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a * b
    }

    fn endo(&self, a: &RationalFunction) -> RationalFunction {
        a.derivative()
    }

    fn twist(&self, a: &RationalFunction) -> TwistPair<RationalFunction> {
        TwistPair {
            p: a.clone(),
            q: a.derivative(),
        }
    }

    fn try_invert(&self, a: &RationalFunction) -> Result<RationalFunction> {
        a.inverse().ok_or_else(|| Error::NotAUnit(a.to_string()))
    }

    fn check(&self, a: &RationalFunction) -> Result<()> {
        if a.variable() == Variable::X {
            Ok(())
        } else {
            Err(self.mismatch(format!("rational functions in {}", a.variable().name())))
        }
    }
}
