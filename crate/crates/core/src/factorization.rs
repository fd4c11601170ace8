//! Operators determined by a finite list of kernel elements.
//!
//! Given `f_1, ..., f_k` whose matrix `Phi_{l,i} = D^(l-1)(f_i)` is
//! invertible, [`KernelContext`] holds:
//! - the dual operators `P_i = sum_l (Phi^-1)_{il} * D^(l-1)` with
//!   `P_i(f_j) = delta_ij`,
//! - the kernel operator `K = D^k - sum_i D^k(f_i) * P_i`, which annihilates
//!   every `f_i`,
//! - the spanning family `Dhat_i`, equal to `P_(i+1)` for `i < k` and to
//!   `D^(i-k) * K` for `i >= k`.
//!
//! An operator `L` annihilates every `f_i` exactly when `L = Q * K`; the
//! quotient `Q` is read off from the `Dhat` coefficients of `L`.

use std::sync::RwLock;

use crate::algebra::Algebra;
use crate::error::{Error, KernelViolation, Result};
use crate::ncmatrix::NcMatrix;
use crate::operator::{Operator, OperatorAlgebra};

pub struct KernelContext<'a, A: Algebra> {
    ring: &'a OperatorAlgebra<A>,
    kernel: Vec<A::Elem>,
    phi: NcMatrix<A::Elem>,
    phi_inv: NcMatrix<A::Elem>,
    duals: Vec<Operator<A::Elem>>,
    k_op: Operator<A::Elem>,
    /// `D^j * K` for `j = 0, 1, ...`, filled on demand.
    dhat_cache: RwLock<Vec<Operator<A::Elem>>>,
}

impl<'a, A: Algebra> KernelContext<'a, A> {
    /// Fails with [`Error::NotInvertible`] when `Phi` cannot be inverted.
    pub fn build(ring: &'a OperatorAlgebra<A>, kernel: Vec<A::Elem>) -> Result<Self> {
        let alg = ring.base();
        if kernel.is_empty() {
            return Err(Error::EmptyKernel);
        }
        kernel.iter().try_for_each(|f| alg.check(f))?;
        let k = kernel.len();

        // Column i holds f_i, D(f_i), ..., D^(k-1)(f_i); the extra power is the
        // interpolation target D^k(f_i).
        let columns: Vec<Vec<A::Elem>> = kernel
            .iter()
            .map(|f| {
                let mut col = Vec::with_capacity(k + 1);
                col.push(f.clone());
                for l in 1..=k {
                    col.push(alg.endo(&col[l - 1]));
                }
                col
            })
            .collect();
        let phi = NcMatrix::from_fn(k, k, |l, i| columns[i][l].clone())?;
        let phi_inv = phi.inverse(alg)?;

        let duals = (0..k)
            .map(|i| ring.from_coeffs(phi_inv.row(i).to_vec()))
            .collect::<Result<Vec<_>>>()?;
        let targets: Vec<A::Elem> = columns.iter().map(|col| col[k].clone()).collect();
        let p_hat = interpolate_with(ring, &duals, &targets)?;
        let k_op = ring.sub(&ring.d_pow(k), &p_hat)?;

        Ok(KernelContext {
            ring,
            kernel,
            phi,
            phi_inv,
            duals,
            dhat_cache: RwLock::new(vec![k_op.clone()]),
            k_op,
        })
    }

    pub fn ring(&self) -> &'a OperatorAlgebra<A> {
        self.ring
    }

    pub fn kernel(&self) -> &[A::Elem] {
        &self.kernel
    }

    pub fn k(&self) -> usize {
        self.kernel.len()
    }

    pub fn phi(&self) -> &NcMatrix<A::Elem> {
        &self.phi
    }

    pub fn phi_inv(&self) -> &NcMatrix<A::Elem> {
        &self.phi_inv
    }

    /// `P_1, ..., P_k`.
    pub fn duals(&self) -> &[Operator<A::Elem>] {
        &self.duals
    }

    pub fn kernel_operator(&self) -> &Operator<A::Elem> {
        &self.k_op
    }

    /// The `i`-th member of the `Dhat` spanning family (0-based).
    pub fn dhat(&self, i: usize) -> Result<Operator<A::Elem>> {
        let k = self.k();
        if i < k {
            return Ok(self.duals[i].clone());
        }
        let j = i - k;
        if let Some(op) = self.dhat_cache.read().expect("dhat cache poisoned").get(j) {
            return Ok(op.clone());
        }
        let mut cache = self.dhat_cache.write().expect("dhat cache poisoned");
        let d = self.ring.d_pow(1);
        while cache.len() <= j {
            let next = self.ring.compose(&d, cache.last().expect("cache starts with K"))?;
            cache.push(next);
        }
        Ok(cache[j].clone())
    }

    /// `P-hat = sum_i targets_i * P_i`, sending each `f_i` to `targets_i`.
    pub fn interpolate(&self, targets: &[A::Elem]) -> Result<Operator<A::Elem>> {
        if targets.len() != self.k() {
            return Err(Error::ShapeMismatch(format!(
                "{} targets for {} kernel elements",
                targets.len(),
                self.k()
            )));
        }
        interpolate_with(self.ring, &self.duals, targets)
    }

    /// Coefficients `a-hat_0, ..., a-hat_m` with `L = sum_i a-hat_i * Dhat_i`,
    /// where `m = max(deg L, k - 1)`.
    pub fn hat_coefficients(&self, l: &Operator<A::Elem>) -> Result<Vec<A::Elem>> {
        let alg = self.ring.base();
        let k = self.k();
        self.ring.check_operator(l)?;
        let m = l.degree().map_or(k - 1, |d| d.max(k - 1));
        let mut hat = vec![alg.zero(); m + 1];
        let mut rest = l.clone();
        // Peel the top term off with Dhat_top, whose leading coefficient is 1.
        for top in (k..=m).rev() {
            let a = self.ring.coeff_or_zero(&rest, top);
            if alg.is_zero(&a) {
                continue;
            }
            let term = self.ring.scale_left(&a, &self.dhat(top)?)?;
            rest = self.ring.sub(&rest, &term)?;
            if rest.degree().is_some_and(|d| d >= top) {
                return Err(Error::VerificationFailed(format!(
                    "D-hat_{top} does not have leading coefficient 1"
                )));
            }
            hat[top] = a;
        }
        // Base case: row vector (a_0 .. a_(k-1)) times column i of Phi.
        for (i, slot) in hat.iter_mut().take(k).enumerate() {
            *slot = (0..k).fold(alg.zero(), |acc, row| {
                alg.add(&acc, &alg.mul(&self.ring.coeff_or_zero(&rest, row), self.phi.get(row, i)))
            });
        }

        let rebuilt = hat.iter().enumerate().try_fold(self.ring.zero(), |acc, (i, a)| {
            if alg.is_zero(a) {
                return Ok(acc);
            }
            self.ring.add(&acc, &self.ring.scale_left(a, &self.dhat(i)?)?)
        })?;
        if !self.ring.equals(&rebuilt, l)? {
            return Err(Error::VerificationFailed(
                "D-hat expansion does not reconstruct the operator".into(),
            ));
        }
        Ok(hat)
    }

    /// `(L(f_1), ..., L(f_k))`, which equals the first `k` hat coefficients.
    pub fn leading_coefficients_by_apply(&self, l: &Operator<A::Elem>) -> Result<Vec<A::Elem>> {
        self.kernel.iter().map(|f| self.ring.apply(l, f)).collect()
    }

    fn violations(&self, l: &Operator<A::Elem>) -> Result<Vec<KernelViolation>> {
        let alg = self.ring.base();
        Ok(self
            .leading_coefficients_by_apply(l)?
            .into_iter()
            .zip(&self.kernel)
            .enumerate()
            .filter(|(_, (v, _))| !alg.is_zero(v))
            .map(|(i, (v, f))| KernelViolation {
                index: i + 1,
                element: f.to_string(),
                value: v.to_string(),
            })
            .collect())
    }

    /// `Q` with `L = Q * K`, for `L` annihilating every kernel element.
    pub fn factorize(&self, l: &Operator<A::Elem>) -> Result<Operator<A::Elem>> {
        let bad = self.violations(l)?;
        if !bad.is_empty() {
            return Err(Error::NotInKernel(bad));
        }
        let alg = self.ring.base();
        let k = self.k();
        let hat = self.hat_coefficients(l)?;
        if let Some(i) = hat.iter().take(k).position(|a| !alg.is_zero(a)) {
            return Err(Error::VerificationFailed(format!(
                "hat coefficient {i} is nonzero although L(f_{}) = 0",
                i + 1
            )));
        }
        let q = self.ring.from_coeffs(hat.into_iter().skip(k).collect())?;
        let product = self.ring.compose(&q, &self.k_op)?;
        if !self.ring.equals(&product, l)? {
            return Err(Error::VerificationFailed("Q * K differs from L".into()));
        }
        Ok(q)
    }

    /// `Q` with `K * R = Q * K`, for `R` mapping every `f_i` into `ker K`.
    pub fn intertwiner(&self, r: &Operator<A::Elem>) -> Result<Operator<A::Elem>> {
        let kr = self.ring.compose(&self.k_op, r)?;
        let bad = self.violations(&kr)?;
        if !bad.is_empty() {
            return Err(Error::NotIntertwinable(bad));
        }
        self.factorize(&kr)
    }

    /// For `L` in the filtration level `k - 1`: `true` iff `L(f_i) = 0` for
    /// all `i`, in which case `L` must be the zero operator.
    pub fn zero_on_low_filtration(&self, l: &Operator<A::Elem>) -> Result<bool> {
        let bound = self.k() - 1;
        if let Some(d) = l.degree().filter(|&d| d > bound) {
            return Err(Error::DegreeTooHigh { degree: d, bound });
        }
        if !self.violations(l)?.is_empty() {
            return Ok(false);
        }
        if self.ring.is_zero_op(l) {
            Ok(true)
        } else {
            Err(Error::CorollaryViolated(l.to_string()))
        }
    }
}

fn interpolate_with<A: Algebra>(
    ring: &OperatorAlgebra<A>,
    duals: &[Operator<A::Elem>],
    targets: &[A::Elem],
) -> Result<Operator<A::Elem>> {
    targets
        .iter()
        .zip(duals)
        .try_fold(ring.zero(), |acc, (t, p)| ring.add(&acc, &ring.scale_left(t, p)?))
}

/// Naive right long division `L = Q * K + R` with `deg R < deg K`.
///
/// Each step cancels the top term of the remainder with `c * D^t * K`, so the
/// leading coefficient of every `D^t * K` must be a unit.
pub fn right_divide_monic<A: Algebra>(
    ring: &OperatorAlgebra<A>,
    l: &Operator<A::Elem>,
    k: &Operator<A::Elem>,
) -> Result<(Operator<A::Elem>, Operator<A::Elem>)> {
    let alg = ring.base();
    let n = k
        .degree()
        .ok_or_else(|| Error::NotMonicizable("0".into()))?;
    alg.try_invert(&k.coeffs()[n])
        .map_err(|_| Error::NotMonicizable(k.coeffs()[n].to_string()))?;
    let mut quotient = ring.zero();
    ring.check_operator(l)?;
    ring.check_operator(k)?;
    let mut rem = l.clone();
    let mut shifted = vec![k.clone()];
    while let Some(deg) = rem.degree().filter(|&d| d >= n) {
        let t = deg - n;
        while shifted.len() <= t {
            let next = ring.compose(&ring.d_pow(1), shifted.last().expect("nonempty"))?;
            shifted.push(next);
        }
        let lead = ring.coeff_or_zero(&shifted[t], deg);
        let lead_inv = alg
            .try_invert(&lead)
            .map_err(|_| Error::NotMonicizable(lead.to_string()))?;
        let c = alg.mul(&rem.coeffs()[deg], &lead_inv);
        quotient = ring.add(&quotient, &ring.monomial(c.clone(), t))?;
        rem = ring.sub(&rem, &ring.scale_left(&c, &shifted[t])?)?;
    }
    Ok((quotient, rem))
}
