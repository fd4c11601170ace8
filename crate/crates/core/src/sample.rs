//! Random elements and operators of modest size, for randomized checks.

use num_rational::BigRational;
use rand::Rng;

use crate::algebra::Algebra;
use crate::algebras::{
    DifferenceAlgebra, GroupRingC5, GroupRingC5Element, Quaternion, QuaternionAlgebra,
    RationalDifferentialAlgebra, RationalFunction, Variable,
};
use crate::operator::{Operator, OperatorAlgebra};
use crate::poly::Poly;

pub trait Sample: Algebra {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
}

fn small_poly<R: Rng + ?Sized>(rng: &mut R, max_degree: usize) -> Poly {
    let degree = rng.random_range(0..=max_degree);
    Poly::new(
        (0..=degree)
            .map(|_| BigRational::from_integer(rng.random_range(-3i64..=3).into()))
            .collect(),
    )
}

/// Numerator of degree at most 2, denominator 1 or of degree 1.
pub fn rational_function<R: Rng + ?Sized>(rng: &mut R, var: Variable) -> RationalFunction {
    let num = small_poly(rng, 2);
    let den = if rng.random_bool(0.5) {
        Poly::one()
    } else {
        Poly::from_ints(&[rng.random_range(-3i64..=3), 1])
    };
    RationalFunction::new(num, den, var)
}

impl Sample for RationalDifferentialAlgebra {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> RationalFunction {
        rational_function(rng, Variable::X)
    }
}

impl Sample for DifferenceAlgebra {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> RationalFunction {
        rational_function(rng, Variable::N)
    }
}

impl Sample for QuaternionAlgebra {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Quaternion {
        let part = |rng: &mut R| {
            if rng.random_bool(0.4) {
                RationalFunction::zero(Variable::X)
            } else {
                rational_function(rng, Variable::X)
            }
        };
        let parts = [part(rng), part(rng), part(rng), part(rng)];
        let [a, b, c, d] = parts;
        Quaternion::new(a, b, c, d)
    }
}

impl Sample for GroupRingC5 {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> GroupRingC5Element {
        GroupRingC5Element::from_ints(std::array::from_fn(|_| rng.random_range(-2i64..=2)))
    }
}

/// Operator with representation degree at most `max_degree`.
pub fn operator<A: Sample, R: Rng + ?Sized>(
    ring: &OperatorAlgebra<A>,
    rng: &mut R,
    max_degree: usize,
) -> Operator<A::Elem> {
    let degree = rng.random_range(0..=max_degree);
    let coeffs = (0..=degree).map(|_| ring.base().sample(rng)).collect();
    ring.from_coeffs(coeffs).expect("sampled coefficients belong to the algebra")
}
