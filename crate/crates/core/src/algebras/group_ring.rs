//! The integral group ring of the cyclic group of order five.

use std::fmt::{self, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Algebra, AlgebraTag, TwistPair};
use crate::error::{Error, Result};

/// `a_0 + a_1 r + a_2 r^2 + a_3 r^3 + a_4 r^4` with `r^5 = 1`. The basis is
/// free, so the coefficient array is the unique representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingC5Element {
    coeffs: [BigInt; 5],
}

impl GroupRingC5Element {
    pub fn new(coeffs: [BigInt; 5]) -> Self {
        GroupRingC5Element { coeffs }
    }

    pub fn from_ints(c: [i64; 5]) -> Self {
        GroupRingC5Element::new(c.map(BigInt::from))
    }

    /// `r^e`, exponent taken mod 5.
    pub fn generator_pow(e: usize) -> Self {
        let mut c = [0i64; 5];
        c[e % 5] = 1;
        GroupRingC5Element::from_ints(c)
    }

    pub fn constant(n: BigInt) -> Self {
        let mut c: [BigInt; 5] = Default::default();
        c[0] = n;
        GroupRingC5Element::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt; 5] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        GroupRingC5Element::new(std::array::from_fn(|t| &self.coeffs[t] + &rhs.coeffs[t]))
    }

    pub fn neg(&self) -> Self {
        GroupRingC5Element::new(self.coeffs.clone().map(|c| -c))
    }

    /// Cyclic convolution.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out: [BigInt; 5] = Default::default();
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.coeffs.iter().enumerate() {
                out[(a + b) % 5] += x * y;
            }
        }
        GroupRingC5Element::new(out)
    }

    /// The automorphism induced by `r -> r^2`:
    /// `a + b r + c r^2 + d r^3 + e r^4 -> a + d r + b r^2 + e r^3 + c r^4`.
    pub fn permute(&self) -> Self {
        let mut out: [BigInt; 5] = Default::default();
        for (e, c) in self.coeffs.iter().enumerate() {
            out[(2 * e) % 5] = c.clone();
        }
        GroupRingC5Element::new(out)
    }

    /// Inverse by solving `(multiplication by self) y = 1` over the rationals
    /// and keeping the solution only when it is integral.
    pub fn inverse(&self) -> Option<Self> {
        // Column t of the multiplication matrix is self * r^t.
        let mut m: Vec<Vec<BigRational>> = (0..5)
            .map(|row| {
                (0..5)
                    .map(|col| BigRational::from_integer(self.coeffs[(row + 5 - col) % 5].clone()))
                    .collect()
            })
            .collect();
        let mut rhs: Vec<BigRational> = (0..5)
            .map(|t| if t == 0 { BigRational::one() } else { BigRational::zero() })
            .collect();
        let y = solve_square(&mut m, &mut rhs)?;
        if y.iter().all(|v| v.is_integer()) {
            Some(GroupRingC5Element::new(std::array::from_fn(|t| y[t].to_integer())))
        } else {
            None
        }
    }
}

/// Gauss-Jordan over `Q`; `None` when the matrix is singular.
fn solve_square(m: &mut [Vec<BigRational>], rhs: &mut [BigRational]) -> Option<Vec<BigRational>> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        rhs[col] *= &inv;
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in 0..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
            let delta = &factor * &rhs[col];
            rhs[r] -= delta;
        }
    }
    Some(rhs.to_vec())
}

impl Display for GroupRingC5Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let mono = match e {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{e}"),
            };
            let term = if e == 0 {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            match (out.is_empty(), c.is_negative()) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// `Z[C_5]` with `D` the order-four automorphism `r -> r^2`. Being
/// multiplicative, `D * f = D(f) * D`.
#[derive(Clone, Debug, Default)]
pub struct GroupRingC5;

impl GroupRingC5 {
    pub fn new() -> Self {
        GroupRingC5
    }

    pub fn r_pow(&self, e: usize) -> GroupRingC5Element {
        GroupRingC5Element::generator_pow(e)
    }
}

impl Algebra for GroupRingC5 {
    type Elem = GroupRingC5Element;

    fn tag(&self) -> AlgebraTag {
        AlgebraTag::new("c5")
    }

    fn zero(&self) -> GroupRingC5Element {
        GroupRingC5Element::constant(BigInt::zero())
    }

    fn one(&self) -> GroupRingC5Element {
        GroupRingC5Element::constant(BigInt::one())
    }

    fn from_int(&self, n: &BigInt) -> GroupRingC5Element {
        GroupRingC5Element::constant(n.clone())
    }

    fn is_zero(&self, a: &GroupRingC5Element) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &GroupRingC5Element, b: &GroupRingC5Element) -> GroupRingC5Element {
        a.add(b)
    }

    fn neg(&self, a: &GroupRingC5Element) -> GroupRingC5Element {
        a.neg()
    }

    fn mul(&self, a: &GroupRingC5Element, b: &GroupRingC5Element) -> GroupRingC5Element {
        a.mul(b)
    }

    fn endo(&self, a: &GroupRingC5Element) -> GroupRingC5Element {
        a.permute()
    }

    fn twist(&self, a: &GroupRingC5Element) -> TwistPair<GroupRingC5Element> {
        TwistPair {
            p: a.permute(),
            q: self.zero(),
        }
    }

    fn try_invert(&self, a: &GroupRingC5Element) -> Result<GroupRingC5Element> {
        a.inverse().ok_or_else(|| Error::NotAUnit(a.to_string()))
    }

    fn endo_period(&self) -> Option<usize> {
        Some(4)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_powers_multiply_mod_five() {
        for a in 0..5 {
            for b in 0..5 {
                let prod = GroupRingC5Element::generator_pow(a).mul(&GroupRingC5Element::generator_pow(b));
                assert_eq!(prod, GroupRingC5Element::generator_pow((a + b) % 5));
            }
        }
    }

    #[test]
    fn permutation_matches_coefficient_rule() {
        let x = GroupRingC5Element::from_ints([1, 2, 3, 4, 5]);
        // a + d r + b r^2 + e r^3 + c r^4
        assert_eq!(x.permute(), GroupRingC5Element::from_ints([1, 4, 2, 5, 3]));
        assert_eq!(GroupRingC5Element::generator_pow(2).permute(), GroupRingC5Element::generator_pow(4));
        assert_eq!(x.permute().permute().permute().permute(), x);
    }

    #[test]
    fn inverses() {
        let alg = GroupRingC5::new();
        assert_eq!(alg.try_invert(&alg.r_pow(2)).unwrap(), alg.r_pow(3));
        assert_eq!(alg.try_invert(&alg.r_pow(3)).unwrap(), alg.r_pow(2));
        assert_eq!(alg.try_invert(&alg.one()).unwrap(), alg.one());
        assert!(alg.try_invert(&alg.zero()).is_err());
    }

    #[test]
    fn one_plus_r_is_not_a_unit() {
        let x = GroupRingC5Element::from_ints([1, 1, 0, 0, 0]);
        assert!(x.inverse().is_none());
        // Exhaustive search over small coefficients finds no inverse either.
        let one = GroupRingC5Element::from_ints([1, 0, 0, 0, 0]);
        let range = -3i64..=3;
        for a in range.clone() {
            for b in range.clone() {
                for c in range.clone() {
                    for d in range.clone() {
                        for e in range.clone() {
                            let y = GroupRingC5Element::from_ints([a, b, c, d, e]);
                            assert_ne!(x.mul(&y), one);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn a_nontrivial_unit() {
        let u = GroupRingC5Element::from_ints([1, -1, 0, 0, -1]);
        let inv = u.inverse().expect("1 - r - r^4 is a unit");
        assert_eq!(u.mul(&inv), GroupRingC5Element::from_ints([1, 0, 0, 0, 0]));
    }

    #[test]
    fn display() {
        assert_eq!(GroupRingC5Element::from_ints([0, 0, 1, 1, 0]).to_string(), "r^2 + r^3");
        assert_eq!(GroupRingC5Element::from_ints([-1, 2, 0, 0, -1]).to_string(), "-1 + 2*r - r^4");
    }
}
