mod common;

use common::{
    c5, c5_contexts, diff, qx, quat, random_contexts, random_contexts_with, rng,
    sparse_quaternion, CASES,
};
use opkernel::algebras::{RationalDifferentialAlgebra, RationalFunction, Variable};
use opkernel::poly::Poly;
use opkernel::sample::Sample;
use opkernel::{right_divide_monic, Algebra, Error, KernelContext, Operator, OperatorAlgebra};
use rand::Rng;

/// Everything a single context must satisfy, checked against a few random
/// operators drawn from `rng`.
fn check_context<A: Sample, R: Rng>(ctx: &KernelContext<'_, A>, rng: &mut R) {
    check_context_with(ctx, rng, |rng| ctx.ring().base().sample(rng));
}

/// As [`check_context`], with operator coefficients and targets drawn from
/// `sample`.
fn check_context_with<A: Algebra, R: Rng>(
    ctx: &KernelContext<'_, A>,
    rng: &mut R,
    mut sample: impl FnMut(&mut R) -> A::Elem,
) {
    let ring = ctx.ring();
    let alg = ring.base();
    let k = ctx.k();
    let f = ctx.kernel();

    // Phi inverts on both sides.
    assert!(ctx.phi().mul(alg, ctx.phi_inv()).unwrap().is_identity(alg));
    assert!(ctx.phi_inv().mul(alg, ctx.phi()).unwrap().is_identity(alg));

    // Duality and the kernel.
    for (i, p) in ctx.duals().iter().enumerate() {
        assert!(p.in_filtration(k - 1));
        for (j, fj) in f.iter().enumerate() {
            let v = ring.apply(p, fj).unwrap();
            assert!(if i == j { alg.is_one(&v) } else { alg.is_zero(&v) }, "P_{}(f_{}) = {v}", i + 1, j + 1);
        }
    }
    let kop = ctx.kernel_operator();
    assert!(kop.in_filtration(k));
    for fi in f {
        assert!(alg.is_zero(&ring.apply(kop, fi).unwrap()), "K = {kop} on {fi}");
    }

    // Interpolation sends each f_i to its target.
    let targets: Vec<A::Elem> = (0..k).map(|_| sample(rng)).collect();
    let p_hat = ctx.interpolate(&targets).unwrap();
    assert!(p_hat.in_filtration(k - 1));
    for (fi, t) in f.iter().zip(&targets) {
        assert_eq!(&ring.apply(&p_hat, fi).unwrap(), t);
    }

    // Hat coefficients rebuild L, and the first k are L(f_i).
    let l = operator_from(ring, rng, 3, &mut sample);
    let hat = ctx.hat_coefficients(&l).unwrap();
    let rebuilt = hat.iter().enumerate().fold(ring.zero(), |acc, (i, a)| {
        ring.add(&acc, &ring.compose(&ring.constant(a.clone()), &ctx.dhat(i).unwrap()).unwrap())
            .unwrap()
    });
    assert!(ring.equals(&rebuilt, &l).unwrap());
    let by_apply = ctx.leading_coefficients_by_apply(&l).unwrap();
    assert_eq!(&hat[..k], &by_apply[..]);

    // Round trip through Q * K, checked against long division too.
    let q = operator_from(ring, rng, 3, &mut sample);
    let qk = ring.compose(&q, kop).unwrap();
    for fi in f {
        assert!(alg.is_zero(&ring.apply(&qk, fi).unwrap()));
    }
    let q2 = ctx.factorize(&qk).unwrap();
    assert!(ring.equals(&ring.compose(&q2, kop).unwrap(), &qk).unwrap());
    assert!(ring.equals(&q2, &q).unwrap(), "{q2} vs {q}");
    let (q3, rem) = right_divide_monic(ring, &qk, kop).unwrap();
    assert!(ring.is_zero_op(&rem));
    assert!(ring.equals(&ring.compose(&q3, kop).unwrap(), &qk).unwrap());

    // Factorization fails exactly when some L(f_i) is nonzero.
    match ctx.factorize(&l) {
        Ok(q) => {
            assert!(by_apply.iter().all(|v| alg.is_zero(v)));
            assert!(ring.equals(&ring.compose(&q, kop).unwrap(), &l).unwrap());
        }
        Err(Error::NotInKernel(bad)) => {
            assert!(!bad.is_empty());
            for v in &bad {
                assert!(!alg.is_zero(&by_apply[v.index - 1]));
            }
        }
        Err(e) => panic!("unexpected {e}"),
    }

    // R = R0 * K + 1 fixes every f_i, so it intertwines.
    let r0 = operator_from(ring, rng, 1, &mut sample);
    let r = ring.add(&ring.compose(&r0, kop).unwrap(), &ring.identity()).unwrap();
    let q = ctx.intertwiner(&r).unwrap();
    let kr = ring.compose(kop, &r).unwrap();
    assert!(ring.equals(&ring.compose(&q, kop).unwrap(), &kr).unwrap());
    // A random R intertwines iff K(R(f_i)) = 0 for all i.
    let r = operator_from(ring, rng, 1, &mut sample);
    let kr = ring.compose(kop, &r).unwrap();
    let maps_into_kernel = f
        .iter()
        .all(|fi| alg.is_zero(&ring.apply(kop, &ring.apply(&r, fi).unwrap()).unwrap()));
    match ctx.intertwiner(&r) {
        Ok(q) => {
            assert!(maps_into_kernel);
            assert!(ring.equals(&ring.compose(&q, kop).unwrap(), &kr).unwrap());
        }
        Err(Error::NotIntertwinable(_)) => assert!(!maps_into_kernel),
        Err(e) => panic!("unexpected {e}"),
    }

    // Below the kernel's degree only the zero operator kills every f_i.
    let low = if rng.random_bool(0.3) {
        ring.zero()
    } else {
        operator_from(ring, rng, k - 1, &mut sample)
    };
    assert_eq!(ctx.zero_on_low_filtration(&low).unwrap(), ring.is_zero_op(&low));
    let high = ring.add(&low, &ring.d_pow(k)).unwrap();
    assert!(matches!(ctx.zero_on_low_filtration(&high), Err(Error::DegreeTooHigh { .. })));
}

fn operator_from<A: Algebra, R: Rng>(
    ring: &OperatorAlgebra<A>,
    rng: &mut R,
    max_degree: usize,
    sample: &mut impl FnMut(&mut R) -> A::Elem,
) -> Operator<A::Elem> {
    let degree = rng.random_range(0..=max_degree);
    ring.from_coeffs((0..=degree).map(|_| sample(rng)).collect()).unwrap()
}

fn run<A: Sample>(ring: &OperatorAlgebra<A>, seed: u64) {
    let mut rng = rng(seed);
    for ctx in random_contexts(ring, &mut rng, CASES) {
        check_context(&ctx, &mut rng);
    }
}

#[test]
fn rational_differential_contexts() {
    run(&qx(), 201);
}

#[test]
fn quaternion_contexts() {
    let ring = quat();
    let mut rng = rng(202);
    for ctx in random_contexts_with(&ring, &mut rng, CASES, sparse_quaternion) {
        check_context_with(&ctx, &mut rng, sparse_quaternion);
    }
}

#[test]
fn difference_contexts() {
    for (c, seed) in [(0, 203), (1, 204), (-2, 205)] {
        run(&diff(c), seed);
    }
}

#[test]
fn group_ring_contexts() {
    let ring = c5();
    let mut rng = rng(206);
    for ctx in c5_contexts(&ring, &mut rng, CASES) {
        check_context(&ctx, &mut rng);
    }
}

fn monomial(c: i64, e: usize) -> RationalFunction {
    let mut coeffs = vec![0; e + 1];
    coeffs[e] = c;
    RationalFunction::from_poly(Poly::from_ints(&coeffs), Variable::X)
}

/// Euler-type kernels with closed forms for K.
#[test]
fn monomial_kernels_in_rational_functions() {
    let ring = qx();
    let alg: &RationalDifferentialAlgebra = ring.base();
    let x = alg.x();
    let inv = |r: &RationalFunction| r.inverse().unwrap();

    // (1, x): K = D^2.
    let ctx = KernelContext::build(&ring, vec![alg.one(), x.clone()]).unwrap();
    assert_eq!(ctx.kernel_operator(), &ring.d_pow(2));
    assert_eq!(ctx.duals()[0], ring.from_coeffs(vec![alg.one(), alg.neg(&x)]).unwrap());
    assert_eq!(ctx.duals()[1], ring.d_pow(1));

    // (x, x^2): x^2 y'' - 2x y' + 2y = 0, so K = D^2 - (2/x) D + 2/x^2.
    let ctx = KernelContext::build(&ring, vec![x.clone(), monomial(1, 2)]).unwrap();
    let two_over_x = alg.mul(&alg.from_int(&2.into()), &inv(&x));
    let expected = ring
        .from_coeffs(vec![alg.mul(&two_over_x, &inv(&x)), alg.neg(&two_over_x), alg.one()])
        .unwrap();
    assert_eq!(ctx.kernel_operator(), &expected);

    // Random pairs c x^a, d x^b with a != b. For f = (x^a, x^b) the kernel
    // operator is the Euler operator x^2 D^2 - (a + b - 1) x D + ab, made monic.
    let mut rng = rng(207);
    for _ in 0..CASES {
        let a = rng.random_range(0..6usize);
        let b = (a + rng.random_range(1..6usize)) % 7;
        let c = *[-3i64, -2, -1, 1, 2, 3].get(rng.random_range(0..6)).unwrap();
        let d = *[-3i64, -2, -1, 1, 2, 3].get(rng.random_range(0..6)).unwrap();
        let kernel = vec![monomial(c, a), monomial(d, b)];
        let ctx = KernelContext::build(&ring, kernel.clone()).unwrap();
        check_context(&ctx, &mut rng);
        let s = alg.from_int(&((a + b) as i64 - 1).into());
        let p = alg.from_int(&((a * b) as i64).into());
        let expected = ring
            .from_coeffs(vec![
                alg.mul(&p, &inv(&monomial(1, 2))),
                alg.neg(&alg.mul(&s, &inv(&x))),
                alg.one(),
            ])
            .unwrap();
        assert_eq!(ctx.kernel_operator(), &expected, "a={a} b={b}");
    }
}

#[test]
fn zero_kernel_element_is_not_invertible() {
    let ring = quat();
    assert!(matches!(
        KernelContext::build(&ring, vec![ring.base().zero()]),
        Err(Error::NotInvertible(_))
    ));
}

#[test]
fn dhat_cache_is_consistent_across_threads() {
    let ring = qx();
    let x = ring.base().x();
    let ctx = KernelContext::build(&ring, vec![x.clone(), ring.base().mul(&x, &x)]).unwrap();
    let results: Vec<Vec<Operator<RationalFunction>>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..4)
            .map(|t| {
                let ctx = &ctx;
                s.spawn(move || (0..8).map(|i| ctx.dhat((i + t) % 8).unwrap()).collect())
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    for (t, ops) in results.iter().enumerate() {
        for (i, op) in ops.iter().enumerate() {
            let idx = (i + t) % 8;
            let expected = if idx < 2 {
                ctx.duals()[idx].clone()
            } else {
                ring.compose(&ring.d_pow(idx - 2), ctx.kernel_operator()).unwrap()
            };
            assert_eq!(op, &expected);
        }
    }
}
