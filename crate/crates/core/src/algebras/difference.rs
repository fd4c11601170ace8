//! `Q(n)` with the difference operator `D g(n) = g(n + 1) + c g(n)`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::rational_function::{RationalFunction, Variable};
use crate::algebra::{Algebra, AlgebraTag, TwistPair};
use crate::error::{Error, Result};

/// Rational functions of the discrete variable `n`. The constant `c` is fixed
/// for the lifetime of the instance.
///
/// Twist: `D * f = f(n+1) * D + (c f(n) - c f(n+1))`.
#[derive(Clone, Debug)]
pub struct DifferenceAlgebra {
    c: BigRational,
}

impl DifferenceAlgebra {
    pub fn new(c: BigRational) -> Self {
        DifferenceAlgebra { c }
    }

    pub fn with_int(c: i64) -> Self {
        DifferenceAlgebra::new(BigRational::from_integer(c.into()))
    }

    pub fn c(&self) -> &BigRational {
        &self.c
    }

    pub fn n(&self) -> RationalFunction {
        RationalFunction::var(Variable::N)
    }

    pub fn rational(&self, c: BigRational) -> RationalFunction {
        RationalFunction::constant(c, Variable::N)
    }
}

impl Algebra for DifferenceAlgebra {
    type Elem = RationalFunction;

    fn tag(&self) -> AlgebraTag {
        AlgebraTag::new(format!("diff(c={})", self.c))
    }

    fn zero(&self) -> RationalFunction {
        RationalFunction::zero(Variable::N)
    }

    fn one(&self) -> RationalFunction {
        RationalFunction::one(Variable::N)
    }

    fn from_int(&self, n: &BigInt) -> RationalFunction {
        RationalFunction::from_int(n.clone(), Variable::N)
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
        &a.shift() + &a.scale(&self.c)
    }

    fn twist(&self, a: &RationalFunction) -> TwistPair<RationalFunction> {
        let shifted = a.shift();
        let q = &a.scale(&self.c) - &shifted.scale(&self.c);
        TwistPair { p: shifted, q }
    }

    fn try_invert(&self, a: &RationalFunction) -> Result<RationalFunction> {
        a.inverse().ok_or_else(|| Error::NotAUnit(a.to_string()))
    }

    fn check(&self, a: &RationalFunction) -> Result<()> {
        if a.variable() == Variable::N {
            Ok(())
        } else {
            Err(self.mismatch(format!("rational functions in {}", a.variable().name())))
        }
    }
}
