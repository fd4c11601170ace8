//! Canonical rational functions in one variable over the rationals.

use std::fmt::{self, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::intpoly::{self, IntPoly};
use crate::poly::{format_int_terms, Poly};

/// The variable a rational function is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variable {
    X,
    N,
}

impl Variable {
    pub fn name(self) -> &'static str {
        match self {
            Variable::X => "x",
            Variable::N => "n",
        }
    }
}

/// `c * num / den` with `num`, `den` coprime primitive integer polynomials
/// with positive leading coefficients; zero is `0 * 0 / 1`. The form is
/// unique, so equality of values is equality of representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    c: BigRational,
    num: IntPoly,
    den: IntPoly,
    var: Variable,
}

fn split(p: &Poly) -> (BigRational, IntPoly) {
    p.primitive_part()
}

fn to_poly(c: &BigRational, p: &[BigInt]) -> Poly {
    Poly::new(p.iter().map(|x| c * BigRational::from_integer(x.clone())).collect())
}

impl RationalFunction {
    /// Canonicalizes `num / den`. Panics if `den` is zero.
    pub fn new(num: Poly, den: Poly, var: Variable) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let (cn, pn) = split(&num);
        let (cd, pd) = split(&den);
        RationalFunction::reduce(cn / cd, pn, pd, var)
    }

    /// `c * num / den` for primitive parts with positive leading
    /// coefficients, cancelling their gcd.
    fn reduce(c: BigRational, num: IntPoly, den: IntPoly, var: Variable) -> Self {
        if c.is_zero() || num.is_empty() {
            return RationalFunction::zero(var);
        }
        let g = intpoly::gcd(&num, &den);
        if intpoly::is_one(&g) {
            return RationalFunction { c, num, den, var };
        }
        RationalFunction {
            c,
            num: intpoly::div_exact(&num, &g),
            den: intpoly::div_exact(&den, &g),
            var,
        }
    }

    /// As [`RationalFunction::reduce`] for arbitrary integer polynomials.
    fn reduce_ints(c: BigRational, num: IntPoly, den: IntPoly, var: Variable) -> Self {
        let (cn, pn) = intpoly::primitive(num);
        if cn.is_zero() {
            return RationalFunction::zero(var);
        }
        let (cd, pd) = intpoly::primitive(den);
        RationalFunction::reduce(c * BigRational::new(cn, cd), pn, pd, var)
    }

    pub fn from_poly(p: Poly, var: Variable) -> Self {
        let (c, num) = split(&p);
        if c.is_zero() {
            return RationalFunction::zero(var);
        }
        RationalFunction { c, num, den: intpoly::one(), var }
    }

    pub fn zero(var: Variable) -> Self {
        RationalFunction {
            c: BigRational::zero(),
            num: Vec::new(),
            den: intpoly::one(),
            var,
        }
    }

    pub fn one(var: Variable) -> Self {
        RationalFunction::constant(BigRational::one(), var)
    }

    pub fn constant(c: BigRational, var: Variable) -> Self {
        if c.is_zero() {
            return RationalFunction::zero(var);
        }
        RationalFunction { c, num: intpoly::one(), den: intpoly::one(), var }
    }

    pub fn from_int(n: impl Into<BigInt>, var: Variable) -> Self {
        RationalFunction::constant(BigRational::from_integer(n.into()), var)
    }

    /// The variable itself.
    pub fn var(var: Variable) -> Self {
        RationalFunction::from_poly(Poly::from_ints(&[0, 1]), var)
    }

    pub fn variable(&self) -> Variable {
        self.var
    }

    /// Numerator over the monic denominator.
    pub fn numerator(&self) -> Poly {
        let lead = BigRational::from_integer(self.den.last().expect("nonzero").clone());
        to_poly(&(&self.c / lead), &self.num)
    }

    /// The monic denominator.
    pub fn denominator(&self) -> Poly {
        let lead = BigRational::from_integer(self.den.last().expect("nonzero").clone());
        to_poly(&lead.recip(), &self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.is_one() && intpoly::is_one(&self.num) && intpoly::is_one(&self.den)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if intpoly::is_one(&self.num) && intpoly::is_one(&self.den) {
            Some(self.c.clone())
        } else {
            None
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RationalFunction {
            c: self.c.recip(),
            num: self.den.clone(),
            den: self.num.clone(),
            var: self.var,
        })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return RationalFunction::zero(self.var);
        }
        RationalFunction {
            c: &self.c * c,
            ..self.clone()
        }
    }

    /// `(N/D)' = (N'D - N D') / D^2`.
    pub fn derivative(&self) -> Self {
        if intpoly::is_one(&self.den) {
            return RationalFunction::reduce_ints(self.c.clone(), intpoly::derivative(&self.num), intpoly::one(), self.var);
        }
        let top = intpoly::sub(
            &intpoly::mul(&intpoly::derivative(&self.num), &self.den),
            &intpoly::mul(&self.num, &intpoly::derivative(&self.den)),
        );
        let den = intpoly::mul(&self.den, &self.den);
        RationalFunction::reduce_ints(self.c.clone(), top, den, self.var)
    }

    /// Substitutes `t -> t + 1`. Content, leading coefficients and
    /// coprimality are all preserved.
    pub fn shift(&self) -> Self {
        RationalFunction {
            c: self.c.clone(),
            num: intpoly::shift_by_one(&self.num),
            den: intpoly::shift_by_one(&self.den),
            var: self.var,
        }
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, t: &BigRational) -> Option<BigRational> {
        let horner = |p: &[BigInt]| {
            p.iter()
                .rev()
                .fold(BigRational::zero(), |acc, c| acc * t + BigRational::from_integer(c.clone()))
        };
        let d = horner(&self.den);
        if d.is_zero() {
            None
        } else {
            Some(&self.c * horner(&self.num) / d)
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(RationalFunction::one(self.var), |acc, _| &acc * self)
    }

    fn assert_same_var(&self, other: &Self) {
        assert_eq!(
            self.var, other.var,
            "rational functions in different variables combined"
        );
    }
}

/// Text of a single `N/D` fraction with integer coefficients. The result
/// never contains a top-level binary `+`/`-`.
fn fraction_text(num: &[BigInt], den: &[BigInt], var: &str) -> String {
    let negative = num.last().is_some_and(Signed::is_negative);
    let num_abs: Vec<BigInt> = if negative {
        num.iter().map(|c| -c).collect()
    } else {
        num.to_vec()
    };
    let terms = |c: &[BigInt]| c.iter().filter(|x| !x.is_zero()).count();
    let n = format_int_terms(&num_abs, var);
    let n = if terms(&num_abs) > 1 { format!("({n})") } else { n };
    let d = format_int_terms(den, var);
    let d_is_bare_monomial = terms(den) == 1 && den.last().is_some_and(One::is_one);
    let d = if d_is_bare_monomial { d } else { format!("({d})") };
    format!("{}{n}/{d}", if negative { "-" } else { "" })
}

impl Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.var.name();
        if intpoly::is_one(&self.den) {
            return f.write_str(&to_poly(&self.c, &self.num).to_text(var));
        }
        let num = intpoly::scale(&self.num, self.c.numer());
        let den = intpoly::scale(&self.den, self.c.denom());
        f.write_str(&fraction_text(&num, &den, var))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.assert_same_var(rhs);
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Over the lcm of the denominators a common factor of the new
        // numerator and denominator can only come from their gcd.
        let g = intpoly::gcd(&self.den, &rhs.den);
        let (a, b) = (intpoly::div_exact(&self.den, &g), intpoly::div_exact(&rhs.den, &g));
        let (p1, q1) = (self.c.numer(), self.c.denom());
        let (p2, q2) = (rhs.c.numer(), rhs.c.denom());
        let num = intpoly::add(
            &intpoly::scale(&intpoly::mul(&self.num, &b), &(p1 * q2)),
            &intpoly::scale(&intpoly::mul(&rhs.num, &a), &(p2 * q1)),
        );
        let (cont, prim) = intpoly::primitive(num);
        if cont.is_zero() {
            return RationalFunction::zero(self.var);
        }
        let c = BigRational::new(cont, q1 * q2);
        let den = intpoly::mul(&self.den, &b);
        let h = intpoly::gcd(&prim, &g);
        if intpoly::is_one(&h) {
            return RationalFunction { c, num: prim, den, var: self.var };
        }
        RationalFunction {
            c,
            num: intpoly::div_exact(&prim, &h),
            den: intpoly::div_exact(&den, &h),
            var: self.var,
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            c: -&self.c,
            ..self.clone()
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.assert_same_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero(self.var);
        }
        // Cancel across before multiplying out; products of primitive
        // polynomials stay primitive.
        let g1 = intpoly::gcd(&self.num, &rhs.den);
        let g2 = intpoly::gcd(&rhs.num, &self.den);
        let num = intpoly::mul(&intpoly::div_exact(&self.num, &g1), &intpoly::div_exact(&rhs.num, &g2));
        let den = intpoly::mul(&intpoly::div_exact(&self.den, &g2), &intpoly::div_exact(&rhs.den, &g1));
        RationalFunction {
            c: &self.c * &rhs.c,
            num,
            den,
            var: self.var,
        }
    }
}
