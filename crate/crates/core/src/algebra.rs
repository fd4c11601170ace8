//! The coefficient-algebra interface.
//!
//! An [`Algebra`] instance is one pair `(A, D)`: a unital associative algebra
//! together with a fixed additive endomorphism `D`. Every built-in algebra
//! satisfies the composition rule: for each `f` there are `p_f, q_f` with
//! `D(f g) = p_f D(g) + q_f g` for all `g`, returned by [`Algebra::twist`].

use std::fmt::{self, Debug, Display};
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Identifier of one algebra instance. Values and operators carrying
/// different tags never combine.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraTag(Arc<str>);

impl AlgebraTag {
    pub fn new(name: impl AsRef<str>) -> Self {
        AlgebraTag(Arc::from(name.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Debug for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraTag({})", self.0)
    }
}

/// The pair `(p, q)` with `D * f = p * D + q` as operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistPair<E> {
    pub p: E,
    pub q: E,
}

pub trait Algebra: Send + Sync {
    type Elem: Clone + PartialEq + Eq + Debug + Display + Send + Sync;

    fn tag(&self) -> AlgebraTag;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Product `a * b`; no commutativity is assumed anywhere.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// One application of the endomorphism `D`.
    fn endo(&self, a: &Self::Elem) -> Self::Elem;

    fn endo_pow(&self, a: &Self::Elem, n: usize) -> Self::Elem {
        (0..n).fold(a.clone(), |acc, _| self.endo(&acc))
    }

    fn twist(&self, a: &Self::Elem) -> TwistPair<Self::Elem>;

    /// Two-sided inverse, or [`Error::NotAUnit`].
    fn try_invert(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// `Some(p)` when `D^p` is the identity map and operator representations
    /// may reduce `D^(i+p)` to `D^i`.
    fn endo_period(&self) -> Option<usize> {
        None
    }

    /// Checks that `a` belongs to this algebra instance.
    fn check(&self, _a: &Self::Elem) -> Result<()> {
        Ok(())
    }

    fn mismatch(&self, other: impl Display) -> Error {
        Error::MixedAlgebras {
            left: self.tag().to_string(),
            right: other.to_string(),
        }
    }

    fn ring_add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    fn ring_mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    fn endo_apply(&self, a: &Self::Elem) -> Result<Self::Elem> {
        self.check(a)?;
        Ok(self.endo(a))
    }

    fn twist_checked(&self, a: &Self::Elem) -> Result<TwistPair<Self::Elem>> {
        self.check(a)?;
        Ok(self.twist(a))
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}
