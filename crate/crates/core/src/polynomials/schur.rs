use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::generating::s_poly;
use super::sparse::{SparsePoly, Var};
use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};

/// Coefficients of a symmetric polynomial in the Schur basis `s_μ(y_0..y_{n−1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    pub n: usize,
    pub coefficients: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn coefficient(&self, mu: &Partition) -> BigInt {
        self.coefficients.get(mu).cloned().unwrap_or_default()
    }

    /// Rewrites a symmetric polynomial in `y_0..y_{n−1}` in the Schur basis by
    /// repeatedly removing the lexicographically largest monomial.
    pub fn from_symmetric(poly: &SparsePoly, n: usize) -> Result<Self> {
        let mut rest = poly.clone();
        let mut coefficients = BTreeMap::new();
        while let Some((mono, coeff)) = rest.leading_term() {
            let exps = mono.y_exponents();
            let decreasing = exps.windows(2).all(|w| w[0] >= w[1]);
            if !mono.x_exponents().is_empty() || exps.len() > n || !decreasing {
                return Err(Error::NotSymmetric(format!("leading monomial {mono} is not a partition")));
            }
            let mu = Partition::new(exps.iter().map(|&e| e as usize).collect())?;
            let coeff = coeff.clone();
            let s = s_poly(&SkewShape::straight(mu.clone()), n)?;
            rest = &rest - &s.scale(&coeff);
            coefficients.insert(mu, coeff);
        }
        Ok(SchurExpansion { n, coefficients })
    }
}

/// `s_λ(m + y_0, …, m + y_{n−1})` as a polynomial in `y`.
pub fn shifted_schur(lam: &Partition, n: usize, m: u64) -> Result<SparsePoly> {
    let s = s_poly(&SkewShape::straight(lam.clone()), n)?;
    let shift = SparsePoly::constant(BigInt::from(m));
    Ok(s.substitute(|v| match v {
        Var::Y(j) => Some(&shift + &SparsePoly::y(j)),
        Var::X(_) => None,
    }))
}

/// Schur expansion of `s_λ(m + y)`. Every `μ ⊆ λ` is listed, with zero
/// coefficients kept so callers can compare against a count for each `μ`.
pub fn schur_expand_shifted(lam: &Partition, n: usize, m: u64) -> Result<SchurExpansion> {
    let mut exp = SchurExpansion::from_symmetric(&shifted_schur(lam, n, m)?, n)?;
    for mu in lam.subpartitions() {
        exp.coefficients.entry(mu).or_insert_with(BigInt::zero);
    }
    Ok(exp)
}
