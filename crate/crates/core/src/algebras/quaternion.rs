//! Quaternions with coefficients in `Q(x)`, differentiated componentwise.

use std::fmt::{self, Display};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::rational_function::{RationalFunction, Variable};
use crate::algebra::{Algebra, AlgebraTag, TwistPair};
use crate::error::{Error, Result};

/// `a + b i + c j + d k` with `i^2 = j^2 = k^2 = ijk = -1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    parts: [RationalFunction; 4],
}

impl Quaternion {
    pub fn new(a: RationalFunction, b: RationalFunction, c: RationalFunction, d: RationalFunction) -> Self {
        Quaternion { parts: [a, b, c, d] }
    }

    pub fn scalar(a: RationalFunction) -> Self {
        let z = RationalFunction::zero(Variable::X);
        Quaternion::new(a, z.clone(), z.clone(), z)
    }

    pub fn zero() -> Self {
        Quaternion::scalar(RationalFunction::zero(Variable::X))
    }

    pub fn one() -> Self {
        Quaternion::scalar(RationalFunction::one(Variable::X))
    }

    pub fn i() -> Self {
        Quaternion::unit(1)
    }

    pub fn j() -> Self {
        Quaternion::unit(2)
    }

    pub fn k() -> Self {
        Quaternion::unit(3)
    }

    fn unit(slot: usize) -> Self {
        let mut q = Quaternion::zero();
        q.parts[slot] = RationalFunction::one(Variable::X);
        q
    }

    pub fn x() -> Self {
        Quaternion::scalar(RationalFunction::var(Variable::X))
    }

    /// Components `(a, b, c, d)`.
    pub fn parts(&self) -> &[RationalFunction; 4] {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(RationalFunction::is_zero)
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.parts;
        Quaternion::new(a.clone(), -b, -c, -d)
    }

    /// `q conj(q) = a^2 + b^2 + c^2 + d^2`.
    pub fn norm(&self) -> RationalFunction {
        self.parts
            .iter()
            .fold(RationalFunction::zero(Variable::X), |acc, p| &acc + &(p * p))
    }

    /// Multiplies every component by the central scalar `s`.
    pub fn scale(&self, s: &RationalFunction) -> Self {
        Quaternion {
            parts: self.parts.clone().map(|p| &p * s),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Quaternion {
            parts: std::array::from_fn(|t| &self.parts[t] + &rhs.parts[t]),
        }
    }

    pub fn neg(&self) -> Self {
        Quaternion {
            parts: self.parts.clone().map(|p| -&p),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let [a1, b1, c1, d1] = &self.parts;
        let [a2, b2, c2, d2] = &rhs.parts;
        let m = |x: &RationalFunction, y: &RationalFunction| x * y;
        let a = &(&m(a1, a2) - &m(b1, b2)) - &(&m(c1, c2) + &m(d1, d2));
        let b = &(&m(a1, b2) + &m(b1, a2)) + &(&m(c1, d2) - &m(d1, c2));
        let c = &(&m(a1, c2) - &m(b1, d2)) + &(&m(c1, a2) + &m(d1, b2));
        let d = &(&m(a1, d2) + &m(b1, c2)) + &(&m(d1, a2) - &m(c1, b2));
        Quaternion::new(a, b, c, d)
    }

    pub fn derivative(&self) -> Self {
        Quaternion {
            parts: self.parts.clone().map(|p| p.derivative()),
        }
    }

    /// `conj(q) * (q conj(q))^(-1)`; `None` only for zero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm().inverse()?;
        Some(self.conj().scale(&n))
    }
}

fn has_top_level_sum(s: &str) -> bool {
    let mut depth = 0i32;
    let bytes = s.as_bytes();
    for (idx, &ch) in bytes.iter().enumerate() {
        match ch {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && idx > 0 && bytes[idx - 1] == b' ' => return true,
            _ => {}
        }
    }
    false
}

impl Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (slot, part) in self.parts.iter().enumerate() {
            if part.is_zero() {
                continue;
            }
            let s = part.to_string();
            let term = match slot {
                0 => s,
                _ => {
                    let unit = ["", "i", "j", "k"][slot];
                    match s.as_str() {
                        "1" => unit.to_string(),
                        "-1" => format!("-{unit}"),
                        _ if has_top_level_sum(&s) => format!("({s})*{unit}"),
                        _ => format!("{s}*{unit}"),
                    }
                }
            };
            if out.is_empty() {
                out = term;
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// `Q(x)`-quaternions with `D = d/dx`; like the scalar case, `D * f = f * D + f'`.
#[derive(Clone, Debug, Default)]
pub struct QuaternionAlgebra;

impl QuaternionAlgebra {
    pub fn new() -> Self {
        QuaternionAlgebra
    }

    pub fn rational(&self, c: BigRational) -> Quaternion {
        Quaternion::scalar(RationalFunction::constant(c, Variable::X))
    }
}

impl Algebra for QuaternionAlgebra {
    type Elem = Quaternion;

    fn tag(&self) -> AlgebraTag {
        AlgebraTag::new("quat")
    }

    fn zero(&self) -> Quaternion {
        Quaternion::zero()
    }

    fn one(&self) -> Quaternion {
        Quaternion::one()
    }

    fn from_int(&self, n: &BigInt) -> Quaternion {
        Quaternion::scalar(RationalFunction::from_int(n.clone(), Variable::X))
    }

    fn is_zero(&self, a: &Quaternion) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        a.add(b)
    }

    fn neg(&self, a: &Quaternion) -> Quaternion {
        a.neg()
    }

    fn mul(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        a.mul(b)
    }

    fn endo(&self, a: &Quaternion) -> Quaternion {
        a.derivative()
    }

    fn twist(&self, a: &Quaternion) -> TwistPair<Quaternion> {
        TwistPair {
            p: a.clone(),
            q: a.derivative(),
        }
    }

    fn try_invert(&self, a: &Quaternion) -> Result<Quaternion> {
        a.inverse().ok_or_else(|| Error::NotAUnit(a.to_string()))
    }

    fn check(&self, a: &Quaternion) -> Result<()> {
        match a.parts.iter().find(|p| p.variable() != Variable::X) {
            Some(p) => Err(self.mismatch(format!("rational functions in {}", p.variable().name()))),
            None => Ok(()),
        }
    }
}
