//! Brute-force enumerators, closed-form counters and the cross-checking report.

mod brute;
mod formulas;
mod report;

pub use brute::{
    brute_count_lht, brute_count_ssct, enumerate_ct, enumerate_extended_lht, enumerate_lht, enumerate_marked_ssct,
    enumerate_ssct, enumerate_st, enumerate_syt, for_each_lht, for_each_ssct, mark_alphabet,
};
pub use formulas::{
    binomial, content_product, count_det, count_hook_content, count_lht, count_naruse, count_syt, factorial,
};
pub use report::{count_report, verify_probability, CountReport, EnumerationLimits, ProbabilityCheck};
