use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::brute::{brute_count_lht, brute_count_ssct, enumerate_syt};
use super::formulas::{content_product, count_det, count_hook_content, count_lht, count_naruse, count_syt, factorial};
use crate::error::Result;
use crate::shapes::SkewShape;

/// Guards for brute-force enumeration inside [`count_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    /// Largest shape size for which brute force runs.
    pub max_cells: usize,
    /// Largest per-cell search width `m · max(n + c)`.
    pub max_width: u64,
    /// Largest number of tableaux brute force may visit, predicted from the determinant.
    pub max_count: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_cells: 8,
            max_width: 1_000_000,
            max_count: 10_000_000,
        }
    }
}

impl EnumerationLimits {
    pub fn allows(&self, shape: &SkewShape, n: usize, m: u64) -> Result<bool> {
        let width = m * shape.content_factors(n)?.into_iter().max().unwrap_or(0);
        if shape.size() > self.max_cells || width > self.max_width {
            return Ok(false);
        }
        Ok(count_lht(shape, n, m)? <= BigInt::from(self.max_count))
    }
}

/// Counts of `LHT_{n,m}(λ/μ)` by every applicable method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub shape: SkewShape,
    pub n: usize,
    pub m: u64,
    /// Method name to count. Rational values only appear when a formula
    /// fails to produce an integer.
    pub counts: BTreeMap<&'static str, BigRational>,
    pub skipped: Vec<&'static str>,
    pub agreement: bool,
}

#[derive(Serialize)]
struct CountReportJson<'a> {
    shape: &'a SkewShape,
    n: usize,
    m: u64,
    counts: BTreeMap<&'static str, String>,
    skipped: &'a [&'static str],
    agreement: bool,
}

impl CountReport {
    pub fn to_json(&self) -> serde_json::Value {
        let counts = self.counts.iter().map(|(k, v)| (*k, v.to_string())).collect();
        serde_json::to_value(CountReportJson {
            shape: &self.shape,
            n: self.n,
            m: self.m,
            counts,
            skipped: &self.skipped,
            agreement: self.agreement,
        })
        .expect("count report serializes")
    }

    pub fn count(&self, method: &str) -> Option<&BigRational> {
        self.counts.get(method)
    }
}

fn int(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

/// Runs every counter that applies and records whether they agree.
pub fn count_report(shape: &SkewShape, n: usize, m: u64, limits: EnumerationLimits) -> Result<CountReport> {
    let mut counts = BTreeMap::new();
    let mut skipped = Vec::new();
    let power = BigInt::from(m).pow(shape.size() as u32);

    if limits.allows(shape, n, m)? {
        counts.insert("brute_force", int(BigInt::from(brute_count_lht(shape, n, m)?)));
    } else {
        skipped.push("brute_force");
    }
    counts.insert("determinant", int(&power * count_det(shape, n)?));
    if shape.inner().is_empty() {
        counts.insert("hook_content", int(&power * count_hook_content(shape.outer(), n)?));
    } else {
        skipped.push("hook_content");
    }
    // |SYT| · Π(n+c) / |λ/μ|!, kept rational so a mismatch is visible.
    let syt = BigRational::new(count_syt(shape)? * content_product(shape, n)?, factorial(shape.size() as u64));
    counts.insert("syt_formula", syt * int(power.clone()));
    match count_naruse(shape, n, m) {
        Ok(v) => {
            counts.insert("naruse", int(v));
        }
        Err(crate::error::Error::NonIntegral { .. }) => {
            skipped.push("naruse");
        }
        Err(e) => return Err(e),
    }
    let mut values = counts.values();
    let first = values.next().cloned();
    let agreement = skipped.iter().all(|s| *s != "naruse") && values.all(|v| Some(v) == first.as_ref());
    Ok(CountReport {
        shape: shape.clone(),
        n,
        m,
        counts,
        skipped,
        agreement,
    })
}

/// The two sides of the probability identity
/// `|SSCT_n| / Π(n+c) = |SYT| / |λ/μ|!`, both from enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbabilityCheck {
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl ProbabilityCheck {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn verify_probability(shape: &SkewShape, n: usize) -> Result<ProbabilityCheck> {
    let ssct = BigInt::from(brute_count_ssct(shape, n)?);
    let syt = BigInt::from(enumerate_syt(shape).len());
    Ok(ProbabilityCheck {
        lhs: BigRational::new(ssct, content_product(shape, n)?),
        rhs: BigRational::new(syt, factorial(shape.size() as u64)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::from_parts(outer, inner).unwrap()
    }

    #[test]
    fn report_small() {
        let r = count_report(&shape(&[2, 1], &[]), 2, 1, EnumerationLimits::default()).unwrap();
        assert!(r.agreement);
        assert_eq!(r.counts.len(), 5);
        assert!(r.counts.values().all(|v| *v == int(BigInt::from(2))));
        let json = r.to_json();
        assert_eq!(json["counts"]["naruse"], "2");
        assert_eq!(json["agreement"], true);
    }

    #[test]
    fn report_empty() {
        let r = count_report(&SkewShape::empty(), 1, 1, EnumerationLimits::default()).unwrap();
        assert!(r.agreement);
        assert!(r.counts.values().all(|v| *v == int(BigInt::from(1))));
    }

    #[test]
    fn report_skips_brute_force_over_limit() {
        let s = shape(&[6, 6, 4, 3], &[3, 1]);
        let r = count_report(&s, 5, 2, EnumerationLimits::default()).unwrap();
        assert_eq!(r.skipped, vec!["brute_force", "hook_content"]);
        assert!(r.agreement);
    }

    #[test]
    fn probability_examples() {
        let one = verify_probability(&shape(&[1], &[]), 1).unwrap();
        assert!(one.equal());
        assert_eq!(one.lhs, int(BigInt::from(1)));
        let p = verify_probability(&shape(&[2, 1], &[]), 2).unwrap();
        assert_eq!(p.lhs, BigRational::new(2.into(), 6.into()));
        assert!(p.equal());
    }
}
