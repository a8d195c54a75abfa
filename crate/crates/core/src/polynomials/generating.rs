use num_bigint::BigInt;
use rayon::prelude::*;

use super::sparse::{Monomial, SparsePoly, Var, VarTruncation};
use crate::determinant::poly_determinant;
use crate::enumeration::{binomial, for_each_lht, for_each_ssct};
use crate::error::Result;
use crate::shapes::SkewShape;
use crate::tableaux::content_bound;

/// Complete homogeneous polynomial `h_k` in the listed variables.
///
/// `h_0 = 1`; with no variables `h_k = 0` for `k > 0`.
pub fn h_poly(k: usize, vars: &[Var]) -> SparsePoly {
    fn go(k: usize, vars: &[Var], acc: Monomial, out: &mut SparsePoly) {
        if k == 0 {
            out.add_term(acc, &BigInt::from(1));
            return;
        }
        let Some((&first, rest)) = vars.split_first() else {
            return;
        };
        // Choose how many times `first` occurs, then recurse on the rest.
        let mut m = acc;
        for e in 0..=k {
            go(k - e, rest, m.clone(), out);
            m = m.mul(&Monomial::var(first));
        }
    }
    let mut out = SparsePoly::zero();
    go(k, vars, Monomial::one(), &mut out);
    out
}

fn y_vars(count: usize) -> Vec<Var> {
    (0..count).map(Var::Y).collect()
}

/// `L^n_{λ/μ}(x)` summed over lecture hall tableaux whose floor values are
/// all below `p`, i.e. with `x_i := 0` for `i ≥ p`.
pub fn l_poly(shape: &SkewShape, n: usize, p: usize) -> Result<SparsePoly> {
    let cells = shape.cells();
    let bounds: Vec<u64> = cells.iter().map(|&c| content_bound(n, c)).collect();
    let mut out = SparsePoly::zero();
    let one = BigInt::from(1);
    for_each_lht(shape, n, p as u64, |entries| {
        let mut x = vec![0u32; p];
        for (v, b) in entries.iter().zip(&bounds) {
            x[(v / b) as usize] += 1;
        }
        out.add_term(Monomial::new(x, vec![]), &one);
    })?;
    Ok(out)
}

/// `S^n_{λ/μ}(y)`, the sum of `y^T` over semistandard n-content tableaux.
pub fn s_poly(shape: &SkewShape, n: usize) -> Result<SparsePoly> {
    let mut out = SparsePoly::zero();
    let one = BigInt::from(1);
    for_each_ssct(shape, n, |entries| {
        let top = entries.iter().copied().max().unwrap_or(0) as usize;
        let mut y = vec![0u32; top + 1];
        for &v in entries {
            y[v as usize] += 1;
        }
        out.add_term(Monomial::new(vec![], y), &one);
    })?;
    Ok(out)
}

/// The single-row series `L^N_{(k)}(x) = |x|^k · C(N+k−1, k)` under truncation `p`.
pub fn single_row_l(big_n: usize, k: usize, p: usize) -> SparsePoly {
    SparsePoly::x_sum(p)
        .pow(k as u32)
        .scale(&binomial((big_n + k) as i64 - 1, k as i64))
}

/// `λ_i − μ_j − i + j`, the row-length offset of a Jacobi–Trudi entry.
fn offset(shape: &SkewShape, i: usize, j: usize) -> i64 {
    shape.outer().part(i) as i64 - shape.inner().part(j) as i64 - i as i64 + j as i64
}

/// `det( L^{μ_j+n−j+1}_{(λ_i−μ_j−i+j)}(x) )` with the closed single-row form.
pub fn jacobi_trudi_l(shape: &SkewShape, n: usize, p: usize) -> Result<SparsePoly> {
    shape.check_rows(n)?;
    let l = shape.rows();
    let m: Vec<Vec<SparsePoly>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    let k = offset(shape, i, j);
                    if k < 0 {
                        SparsePoly::zero()
                    } else {
                        single_row_l(shape.inner().part(j) + n - j + 1, k as usize, p)
                    }
                })
                .collect()
        })
        .collect();
    Ok(poly_determinant(&m))
}

/// `det( h_{λ_i−μ_j−i+j}(y_0, …, y_{μ_j+n−j}) )`.
pub fn jacobi_trudi_s(shape: &SkewShape, n: usize) -> Result<SparsePoly> {
    shape.check_rows(n)?;
    let l = shape.rows();
    let m: Vec<Vec<SparsePoly>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    let k = offset(shape, i, j);
                    if k < 0 {
                        SparsePoly::zero()
                    } else {
                        h_poly(k as usize, &y_vars(shape.inner().part(j) + n - j + 1))
                    }
                })
                .collect()
        })
        .collect();
    Ok(poly_determinant(&m))
}

/// Outcome of comparing two expansions of the same quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: SparsePoly,
    pub rhs: SparsePoly,
    /// First monomial where the sides differ, with the two coefficients.
    pub witness: Option<(Monomial, BigInt, BigInt)>,
}

impl IdentityCheck {
    pub fn new(lhs: SparsePoly, rhs: SparsePoly) -> Self {
        let witness = lhs.first_difference(&rhs);
        IdentityCheck { lhs, rhs, witness }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

fn shift_y_by_x_sum(poly: &SparsePoly, p: usize) -> SparsePoly {
    let x = SparsePoly::x_sum(p);
    poly.substitute(|v| match v {
        Var::Y(j) => Some(&x + &SparsePoly::y(j)),
        Var::X(_) => None,
    })
}

/// Both sides of `S^n_{λ/μ}(|x| + y) = Σ_ν L^n_{λ/ν}(x) S^n_{ν/μ}(y)`.
///
/// The left side substitutes `y_j ↦ |x| + y_j` into the enumerated
/// `S^n_{λ/μ}`; the right side sums enumerated products over all `ν`.
/// Both sides are then truncated to `trunc`.
pub fn main_identity_sides(shape: &SkewShape, n: usize, trunc: VarTruncation) -> Result<(SparsePoly, SparsePoly)> {
    shape.check_rows(n)?;
    let lhs = shift_y_by_x_sum(&s_poly(shape, n)?, trunc.p).truncate(trunc);
    let terms: Vec<Result<SparsePoly>> = shape
        .intermediate_partitions()
        .into_par_iter()
        .map(|nu| {
            let upper = SkewShape::new(shape.outer().clone(), nu.clone())?;
            let lower = SkewShape::new(nu, shape.inner().clone())?;
            Ok(&l_poly(&upper, n, trunc.p)? * &s_poly(&lower, n)?)
        })
        .collect();
    let mut rhs = SparsePoly::zero();
    for t in terms {
        rhs += &t?;
    }
    Ok((lhs, rhs.truncate(trunc)))
}

/// Symbolic check of the skew Schur shift identity, with a witness on failure.
pub fn verify_main_identity(shape: &SkewShape, n: usize, trunc: VarTruncation) -> Result<IdentityCheck> {
    let (lhs, rhs) = main_identity_sides(shape, n, trunc)?;
    Ok(IdentityCheck::new(lhs, rhs))
}

/// Evaluates both sides of the main identity at an integer point.
pub fn verify_main_identity_at(
    shape: &SkewShape,
    n: usize,
    trunc: VarTruncation,
    xs: &[BigInt],
    ys: &[BigInt],
) -> Result<(BigInt, BigInt)> {
    let (lhs, rhs) = main_identity_sides(shape, n, trunc)?;
    Ok((lhs.evaluate(xs, ys), rhs.evaluate(xs, ys)))
}

/// Both sides of the per-entry convolution
/// `h_t(y_0+|x|, …, y_a+|x|) = Σ_k h_k(y_0..y_a) |x|^{t−k} C(a+t, t−k)`
/// with `a = μ_j+n−j` and `t = λ_i−μ_j−i+j` (indices 1-based).
pub fn entry_identity_sides(i: usize, j: usize, shape: &SkewShape, n: usize, p: usize) -> Result<(SparsePoly, SparsePoly)> {
    shape.check_rows(n)?;
    let t = offset(shape, i, j);
    if t < 0 {
        return Ok((SparsePoly::zero(), SparsePoly::zero()));
    }
    let t = t as usize;
    let a = shape.inner().part(j) + n - j;
    let vars = y_vars(a + 1);
    let lhs = shift_y_by_x_sum(&h_poly(t, &vars), p);
    let x = SparsePoly::x_sum(p);
    let rhs = (0..=t)
        .map(|k| {
            (&h_poly(k, &vars) * &x.pow((t - k) as u32)).scale(&binomial((a + t) as i64, (t - k) as i64))
        })
        .sum();
    Ok((lhs, rhs))
}

pub fn verify_entry_identity(i: usize, j: usize, shape: &SkewShape, n: usize, p: usize) -> Result<bool> {
    let (lhs, rhs) = entry_identity_sides(i, j, shape, n, p)?;
    Ok(lhs == rhs)
}
