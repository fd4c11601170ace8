//! Integer polynomial kernels, coefficients low to high with no trailing
//! zeros. These back the rational-function arithmetic, where working with
//! primitive integer parts avoids normalizing a rational at every step.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type IntPoly = Vec<BigInt>;

pub(crate) fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn one() -> IntPoly {
    vec![BigInt::one()]
}

pub(crate) fn is_one(p: &[BigInt]) -> bool {
    p.len() == 1 && p[0].is_one()
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    trim(out)
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (o, s) in out.iter_mut().zip(b) {
        *o -= s;
    }
    trim(out)
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if is_one(a) {
        return b.to_vec();
    }
    if is_one(b) {
        return a.to_vec();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn scale(p: &[BigInt], c: &BigInt) -> IntPoly {
    if c.is_one() {
        return p.to_vec();
    }
    trim(p.iter().map(|x| x * c).collect())
}

pub(crate) fn derivative(p: &[BigInt]) -> IntPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect(),
    )
}

/// `p(t + 1)`.
pub(crate) fn shift_by_one(p: &[BigInt]) -> IntPoly {
    // Horner: acc = acc * (t + 1) + c.
    let mut acc: IntPoly = Vec::new();
    for c in p.iter().rev() {
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i] += a;
            next[i + 1] += a;
        }
        next[0] += c;
        acc = trim(next);
    }
    acc
}

/// Gcd of the coefficients, zero for the zero polynomial.
pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// `p / content(p)` with a positive leading coefficient, and the signed
/// content that was divided out.
pub(crate) fn primitive(p: IntPoly) -> (BigInt, IntPoly) {
    let Some(lead) = p.last() else {
        return (BigInt::zero(), p);
    };
    let mut g = content(&p);
    if lead.is_negative() {
        g = -g;
    }
    if g.is_one() {
        return (g, p);
    }
    let prim = p.into_iter().map(|c| c / &g).collect();
    (g, prim)
}

/// Exact quotient `a / b`; `b` must divide `a` over the integers.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if is_one(b) {
        return a.to_vec();
    }
    let lb = b.last().expect("division by the zero polynomial");
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        debug_assert!(rem.is_empty(), "inexact polynomial division");
        return Vec::new();
    }
    let mut quot = vec![BigInt::zero(); rem.len() + 1 - b.len()];
    while rem.len() >= b.len() {
        let top = rem.pop().expect("nonempty");
        let shift = rem.len() + 1 - b.len();
        let (c, r) = top.div_rem(lb);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        for (i, d) in b[..b.len() - 1].iter().enumerate() {
            rem[shift + i] -= &c * d;
        }
        quot[shift] = c;
        rem = trim(rem);
        if rem.len() < b.len() {
            debug_assert!(rem.is_empty(), "inexact polynomial division");
            break;
        }
    }
    trim(quot)
}

/// Remainder of `lc(b)^e * a` by `b`.
fn pseudo_remainder(mut a: IntPoly, b: &[BigInt]) -> IntPoly {
    let lb = b.last().expect("nonzero divisor");
    while a.len() >= b.len() {
        let la = a.pop().expect("nonempty");
        let shift = a.len() + 1 - b.len();
        for c in a.iter_mut() {
            *c *= lb;
        }
        for (i, d) in b[..b.len() - 1].iter().enumerate() {
            a[shift + i] -= &la * d;
        }
        a = trim(a);
    }
    a
}

/// Primitive gcd with a positive leading coefficient, by a primitive
/// pseudo-remainder sequence; `gcd(0, 0)` is empty.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if is_one(a) || is_one(b) {
        return one();
    }
    let (mut a, mut b) = (primitive(a.to_vec()).1, primitive(b.to_vec()).1);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return one();
        }
        let r = primitive(pseudo_remainder(a, &b)).1;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        trim(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn exact_division_inverts_multiplication() {
        let a = p(&[3, -1, 4, 1]);
        let b = p(&[-2, 5]);
        assert_eq!(div_exact(&mul(&a, &b), &b), a);
        assert_eq!(div_exact(&mul(&a, &b), &a), b);
    }

    #[test]
    fn gcd_and_primitive() {
        // 2(t + 1)(t - 2) and 6(t + 1)(t + 3)
        let a = mul(&p(&[2, 2]), &p(&[-2, 1]));
        let b = mul(&p(&[6, 6]), &p(&[3, 1]));
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
        assert_eq!(primitive(p(&[-4, 0, -6])), (BigInt::from(-2), p(&[2, 0, 3])));
        assert_eq!(gcd(&p(&[]), &p(&[0, -3])), p(&[0, 1]));
    }

    #[test]
    fn shift_and_derivative() {
        assert_eq!(shift_by_one(&p(&[0, 0, 1])), p(&[1, 2, 1]));
        assert_eq!(derivative(&p(&[5, 0, 3])), p(&[0, 6]));
    }
}
