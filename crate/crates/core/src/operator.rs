//! The operator ring generated by left multiplications and powers of `D`.
//!
//! Every operator is held in left normal form `sum_i a_i * D^i`, a dense
//! coefficient vector indexed by the power of `D`. Composition pushes `D`
//! past coefficients with the twist rule `D * a = p_a * D + q_a` until the
//! result is back in normal form.

use std::fmt::{self, Display};

use crate::algebra::{Algebra, AlgebraTag};
use crate::error::Result;

/// `sum_i coeffs[i] * D^i`, trailing zero coefficients stripped. The zero
/// operator has no coefficients and degree `None`, below every filtration
/// level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operator<E> {
    tag: AlgebraTag,
    coeffs: Vec<E>,
}

impl<E> Operator<E> {
    pub fn tag(&self) -> &AlgebraTag {
        &self.tag
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    /// Highest power of `D` with a nonzero coefficient in this representation.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Whether the representation lies in the filtration level spanned by
    /// `D^0, ..., D^n`.
    pub fn in_filtration(&self, n: usize) -> bool {
        self.degree().is_none_or(|d| d <= n)
    }
}

fn has_top_level_sum(s: &str) -> bool {
    let bytes = s.as_bytes();
    let mut depth = 0i32;
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

/// Canonical text, highest power first: `D^2 - (3/x)*D + 3/x^2`.
impl<E: Display> Display for Operator<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            let s = c.to_string();
            if s == "0" {
                continue;
            }
            let (negative, body) = if has_top_level_sum(&s) {
                (false, s)
            } else if let Some(rest) = s.strip_prefix('-') {
                (true, rest.to_string())
            } else {
                (false, s)
            };
            let d = match power {
                0 => String::new(),
                1 => "D".to_string(),
                _ => format!("D^{power}"),
            };
            let term = if power == 0 {
                body
            } else if body == "1" {
                d
            } else if has_top_level_sum(&body) || body.contains('/') {
                format!("({body})*{d}")
            } else {
                format!("{body}*{d}")
            };
            match (out.is_empty(), negative) {
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

/// Arithmetic on operators over one coefficient algebra.
#[derive(Clone, Debug)]
pub struct OperatorAlgebra<A> {
    alg: A,
}

impl<A: Algebra> OperatorAlgebra<A> {
    pub fn new(alg: A) -> Self {
        OperatorAlgebra { alg }
    }

    pub fn base(&self) -> &A {
        &self.alg
    }

    /// Builds an operator from coefficients `a_0, a_1, ...`, checking each
    /// belongs to the algebra.
    pub fn from_coeffs(&self, coeffs: Vec<A::Elem>) -> Result<Operator<A::Elem>> {
        coeffs.iter().try_for_each(|c| self.alg.check(c))?;
        Ok(self.normalize(coeffs))
    }

    fn normalize(&self, mut coeffs: Vec<A::Elem>) -> Operator<A::Elem> {
        while coeffs.last().is_some_and(|c| self.alg.is_zero(c)) {
            coeffs.pop();
        }
        Operator {
            tag: self.alg.tag(),
            coeffs,
        }
    }

    pub fn zero(&self) -> Operator<A::Elem> {
        self.normalize(Vec::new())
    }

    pub fn identity(&self) -> Operator<A::Elem> {
        self.constant(self.alg.one())
    }

    /// Left multiplication by `a`.
    pub fn constant(&self, a: A::Elem) -> Operator<A::Elem> {
        self.normalize(vec![a])
    }

    /// `a * D^power`.
    pub fn monomial(&self, a: A::Elem, power: usize) -> Operator<A::Elem> {
        let mut coeffs = vec![self.alg.zero(); power + 1];
        coeffs[power] = a;
        self.normalize(coeffs)
    }

    pub fn d_pow(&self, power: usize) -> Operator<A::Elem> {
        self.monomial(self.alg.one(), power)
    }

    /// Coefficient `i`, zero beyond the representation.
    pub fn coeff_or_zero(&self, op: &Operator<A::Elem>, i: usize) -> A::Elem {
        op.coeff(i).cloned().unwrap_or_else(|| self.alg.zero())
    }

    /// Checks that `op` was built over this algebra instance.
    pub fn check_operator(&self, op: &Operator<A::Elem>) -> Result<()> {
        if op.tag == self.alg.tag() {
            Ok(())
        } else {
            Err(self.alg.mismatch(&op.tag))
        }
    }

    /// `L(f) = sum_i a_i * D^i(f)`.
    pub fn apply(&self, op: &Operator<A::Elem>, f: &A::Elem) -> Result<A::Elem> {
        self.check_operator(op)?;
        self.alg.check(f)?;
        let mut acc = self.alg.zero();
        let mut power = f.clone();
        for (i, a) in op.coeffs.iter().enumerate() {
            if i > 0 {
                power = self.alg.endo(&power);
            }
            if !self.alg.is_zero(a) {
                acc = self.alg.add(&acc, &self.alg.mul(a, &power));
            }
        }
        Ok(acc)
    }

    pub fn add(&self, l1: &Operator<A::Elem>, l2: &Operator<A::Elem>) -> Result<Operator<A::Elem>> {
        self.check_operator(l1)?;
        self.check_operator(l2)?;
        let n = l1.coeffs.len().max(l2.coeffs.len());
        Ok(self.normalize(
            (0..n)
                .map(|i| match (l1.coeffs.get(i), l2.coeffs.get(i)) {
                    (Some(a), Some(b)) => self.alg.add(a, b),
                    (Some(a), None) | (None, Some(a)) => a.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        ))
    }

    pub fn neg(&self, l: &Operator<A::Elem>) -> Result<Operator<A::Elem>> {
        self.check_operator(l)?;
        Ok(self.normalize(l.coeffs.iter().map(|c| self.alg.neg(c)).collect()))
    }

    pub fn sub(&self, l1: &Operator<A::Elem>, l2: &Operator<A::Elem>) -> Result<Operator<A::Elem>> {
        self.add(l1, &self.neg(l2)?)
    }

    /// `a * L`: every coefficient multiplied on the left by `a`.
    pub fn scale_left(&self, a: &A::Elem, l: &Operator<A::Elem>) -> Result<Operator<A::Elem>> {
        self.alg.check(a)?;
        self.check_operator(l)?;
        Ok(self.normalize(l.coeffs.iter().map(|c| self.alg.mul(a, c)).collect()))
    }

    /// Powers `D^0 * b, D^1 * b, ..., D^max * b`, each in normal form.
    fn pushed_through(&self, b: &A::Elem, max: usize) -> Vec<Vec<A::Elem>> {
        let mut out = Vec::with_capacity(max + 1);
        let mut current = vec![b.clone()];
        for _ in 0..max {
            // D * sum c_t D^t = sum (p_{c_t} D^(t+1) + q_{c_t} D^t)
            let mut next = vec![self.alg.zero(); current.len() + 1];
            for (t, c) in current.iter().enumerate() {
                if self.alg.is_zero(c) {
                    continue;
                }
                let tw = self.alg.twist(c);
                next[t + 1] = self.alg.add(&next[t + 1], &tw.p);
                next[t] = self.alg.add(&next[t], &tw.q);
            }
            out.push(std::mem::replace(&mut current, next));
        }
        out.push(current);
        out
    }

    /// `L1 * L2` as composition, brought to normal form.
    pub fn compose(&self, l1: &Operator<A::Elem>, l2: &Operator<A::Elem>) -> Result<Operator<A::Elem>> {
        self.check_operator(l1)?;
        self.check_operator(l2)?;
        let (Some(m), Some(n)) = (l1.degree(), l2.degree()) else {
            return Ok(self.zero());
        };
        let mut out = vec![self.alg.zero(); m + n + 1];
        for (j, b) in l2.coeffs.iter().enumerate() {
            if self.alg.is_zero(b) {
                continue;
            }
            // a_i D^i b D^j = a_i (sum_t c_t D^t) D^j
            let pushed = self.pushed_through(b, m);
            for (i, a) in l1.coeffs.iter().enumerate() {
                if self.alg.is_zero(a) {
                    continue;
                }
                for (t, c) in pushed[i].iter().enumerate() {
                    if !self.alg.is_zero(c) {
                        out[t + j] = self.alg.add(&out[t + j], &self.alg.mul(a, c));
                    }
                }
            }
        }
        Ok(self.normalize(out))
    }

    pub fn pow(&self, l: &Operator<A::Elem>, e: u32) -> Result<Operator<A::Elem>> {
        (0..e).try_fold(self.identity(), |acc, _| self.compose(&acc, l))
    }

    /// Applies the algebra's exponent reduction (`D^(i+p) -> D^i` when `D^p`
    /// is the identity); other algebras return the operator unchanged.
    pub fn reduce(&self, l: &Operator<A::Elem>) -> Operator<A::Elem> {
        match self.alg.endo_period() {
            Some(p) if l.coeffs.len() > p => {
                let mut out = vec![self.alg.zero(); p];
                for (i, c) in l.coeffs.iter().enumerate() {
                    out[i % p] = self.alg.add(&out[i % p], c);
                }
                self.normalize(out)
            }
            _ => l.clone(),
        }
    }

    /// Equality of reduced representations.
    pub fn equals(&self, l1: &Operator<A::Elem>, l2: &Operator<A::Elem>) -> Result<bool> {
        self.check_operator(l1)?;
        self.check_operator(l2)?;
        Ok(self.reduce(l1).coeffs == self.reduce(l2).coeffs)
    }

    /// Whether `L` is the zero operator after reduction.
    pub fn is_zero_op(&self, l: &Operator<A::Elem>) -> bool {
        self.reduce(l).is_zero()
    }
}
