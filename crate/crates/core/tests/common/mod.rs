#![allow(dead_code)]

use opkernel::algebras::{
    DifferenceAlgebra, GroupRingC5, GroupRingC5Element, Quaternion, QuaternionAlgebra,
    RationalDifferentialAlgebra, RationalFunction, Variable,
};
use opkernel::poly::Poly;
use opkernel::sample::{self, Sample};
use opkernel::{Algebra, Error, KernelContext, OperatorAlgebra};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const CASES: usize = 100;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn qx() -> OperatorAlgebra<RationalDifferentialAlgebra> {
    OperatorAlgebra::new(RationalDifferentialAlgebra::new())
}

pub fn quat() -> OperatorAlgebra<QuaternionAlgebra> {
    OperatorAlgebra::new(QuaternionAlgebra::new())
}

pub fn diff(c: i64) -> OperatorAlgebra<DifferenceAlgebra> {
    OperatorAlgebra::new(DifferenceAlgebra::with_int(c))
}

pub fn c5() -> OperatorAlgebra<GroupRingC5> {
    OperatorAlgebra::new(GroupRingC5::new())
}

/// Random kernel lists of length 1 or 2 whose Phi inverts.
pub fn random_contexts<'a, A: Sample, R: Rng>(
    ring: &'a OperatorAlgebra<A>,
    rng: &mut R,
    count: usize,
) -> Vec<KernelContext<'a, A>> {
    random_contexts_with(ring, rng, count, |rng| ring.base().sample(rng))
}

/// As [`random_contexts`], drawing kernel elements from `sample`.
pub fn random_contexts_with<'a, A: Algebra, R: Rng>(
    ring: &'a OperatorAlgebra<A>,
    rng: &mut R,
    count: usize,
    mut sample: impl FnMut(&mut R) -> A::Elem,
) -> Vec<KernelContext<'a, A>> {
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 50 * count, "too few invertible kernels sampled");
        let k = rng.random_range(1..=2);
        let kernel = (0..k).map(|_| sample(rng)).collect();
        match KernelContext::build(ring, kernel) {
            Ok(ctx) => out.push(ctx),
            Err(Error::NotInvertible(_)) => {}
            Err(e) => panic!("unexpected {e}"),
        }
    }
    out
}

/// Units `+-r^a (1 - r - r^4)^e` of the group ring.
pub fn random_c5_unit(rng: &mut impl Rng) -> GroupRingC5Element {
    let alg = GroupRingC5::new();
    let base = GroupRingC5Element::from_ints([1, -1, 0, 0, -1]);
    let mut u = alg.r_pow(rng.random_range(0..5));
    for _ in 0..rng.random_range(0..=2) {
        u = alg.mul(&u, &base);
    }
    if rng.random_bool(0.5) {
        u = alg.neg(&u);
    }
    u
}

pub fn c5_contexts<'a>(ring: &'a OperatorAlgebra<GroupRingC5>, rng: &mut impl Rng, count: usize) -> Vec<KernelContext<'a, GroupRingC5>> {
    (0..count)
        .map(|_| KernelContext::build(ring, vec![random_c5_unit(rng)]).expect("units give invertible Phi"))
        .collect()
}

pub fn random_operator<A: Sample>(ring: &OperatorAlgebra<A>, rng: &mut impl Rng, max_degree: usize) -> opkernel::Operator<A::Elem> {
    sample::operator(ring, rng, max_degree)
}

/// Quaternions whose components are zero or `c * x^e` with `e <= 2`. Generic
/// samples give kernel operators with denominators of degree near twenty,
/// which makes degree-five products slow without testing anything new.
pub fn sparse_quaternion(rng: &mut impl Rng) -> Quaternion {
    let mut part = || {
        if rng.random_bool(0.5) {
            RationalFunction::zero(Variable::X)
        } else {
            let mut coeffs = vec![0; rng.random_range(0..=2) + 1];
            *coeffs.last_mut().unwrap() = [-2, -1, 1, 2, 3][rng.random_range(0..5)];
            RationalFunction::from_poly(Poly::from_ints(&coeffs), Variable::X)
        }
    };
    Quaternion::new(part(), part(), part(), part())
}
