//! Closed-form counters. Each is exact; any division that should be exact
//! is checked and reported as [`Error::NonIntegral`] when it is not.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::determinant::bareiss;
use crate::error::{Error, Result};
use crate::shapes::{excited_diagrams, Partition, SkewShape};

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn exact_div(num: &BigInt, den: &BigInt, what: &'static str) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonIntegral { what, value: format!("{num}/{den}") })
    }
}

fn product_of_bounds(shape: &SkewShape, n: usize) -> Result<BigInt> {
    Ok(shape.content_factors(n)?.into_iter().map(BigInt::from).product())
}

/// `det( C(λ_i+n−i, μ_j+n−j) )` over `1 ≤ i, j ≤ ℓ(λ)`.
pub fn count_det(shape: &SkewShape, n: usize) -> Result<BigInt> {
    shape.check_rows(n)?;
    let l = shape.rows();
    let (lam, mu) = (shape.outer(), shape.inner());
    let m = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| binomial((lam.part(i) + n - i) as i64, (mu.part(j) + n - j) as i64))
                .collect()
        })
        .collect();
    Ok(bareiss(m))
}

/// `|LHT_{n,m}(λ/μ)| = m^{|λ/μ|} · count_det`.
pub fn count_lht(shape: &SkewShape, n: usize, m: u64) -> Result<BigInt> {
    Ok(BigInt::from(m).pow(shape.size() as u32) * count_det(shape, n)?)
}

/// `Π (n+c(x)) / Π h(x)` over the cells of a straight shape.
pub fn count_hook_content(lam: &Partition, n: usize) -> Result<BigInt> {
    let shape = SkewShape::straight(lam.clone());
    let num = product_of_bounds(&shape, n)?;
    let den: BigInt = hook_product(lam)?;
    exact_div(&num, &den, "hook-content quotient")
}

fn hook_product(lam: &Partition) -> Result<BigInt> {
    lam.cells().into_iter().map(|c| lam.hook(c).map(BigInt::from)).product()
}

/// `|SYT(λ/μ)|`: the hook length formula for straight shapes and the Aitken
/// determinant otherwise. Row `i` of Aitken's matrix is scaled by
/// `(λ_i+ℓ−i)!`, which turns every entry into a falling factorial.
pub fn count_syt(shape: &SkewShape) -> Result<BigInt> {
    let size = factorial(shape.size() as u64);
    if shape.inner().is_empty() {
        return exact_div(&size, &hook_product(shape.outer())?, "hook length quotient");
    }
    let l = shape.rows();
    let (lam, mu) = (shape.outer(), shape.inner());
    let top = |i: usize| (lam.part(i) + l - i) as i64;
    let m = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    let k = lam.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
                    if k < 0 {
                        BigInt::zero()
                    } else {
                        ((k + 1)..=top(i)).map(BigInt::from).product()
                    }
                })
                .collect()
        })
        .collect();
    let scale: BigInt = (1..=l).map(|i| factorial(top(i) as u64)).product();
    exact_div(&(size * bareiss(m)), &scale, "skew standard tableau count")
}

/// `m^{|λ/μ|} · Π (n+c(x)) · Σ_D Π_{x ∈ λ∖D} 1/h(x)` over excited diagrams `D`.
pub fn count_naruse(shape: &SkewShape, n: usize, m: u64) -> Result<BigInt> {
    shape.check_rows(n)?;
    let lam = shape.outer();
    let mut sum = BigRational::zero();
    for d in excited_diagrams(lam, shape.inner())? {
        let mut den = BigInt::one();
        for c in lam.cells() {
            if !d.cells.contains(&c) {
                den *= BigInt::from(lam.hook(c)?);
            }
        }
        sum += BigRational::new(BigInt::one(), den);
    }
    let total = sum * BigRational::from_integer(product_of_bounds(shape, n)?);
    if !total.is_integer() {
        return Err(Error::NonIntegral { what: "excited diagram sum", value: total.to_string() });
    }
    Ok(BigInt::from(m).pow(shape.size() as u32) * total.to_integer())
}

/// `Π (n + c(x))` over the cells of the shape.
pub fn content_product(shape: &SkewShape, n: usize) -> Result<BigInt> {
    product_of_bounds(shape, n)
}
