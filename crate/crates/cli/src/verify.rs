//! Bounded identity sweeps behind `lhk verify`.

use anyhow::{bail, Result};
use clap::ValueEnum;
use lecture_hall::enumeration::{count_lht, verify_probability};
use lecture_hall::polynomials::{
    jacobi_trudi_l, jacobi_trudi_s, l_poly, s_poly, schur_expand_shifted, verify_main_identity, VarTruncation,
};
use lecture_hall::{Partition, SkewShape};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{Format, Identity, Status, VerifyArgs};

/// One point of a sweep. `m` and `p` are present only where the identity uses them.
struct Case {
    lambda: Partition,
    mu: Partition,
    n: usize,
    m: Option<u64>,
    p: Option<usize>,
}

struct Verdict {
    pass: bool,
    detail: Option<String>,
}

impl Case {
    fn shape(&self) -> SkewShape {
        SkewShape::new(self.lambda.clone(), self.mu.clone()).expect("sweep only builds contained pairs")
    }

    fn label(&self) -> String {
        let mut s = format!("λ={} μ={} n={}", self.lambda, self.mu, self.n);
        if let Some(m) = self.m {
            s += &format!(" m={m}");
        }
        if let Some(p) = self.p {
            s += &format!(" p={p}");
        }
        s
    }

    fn to_json(&self, v: &Verdict) -> Value {
        json!({
            "lambda": self.lambda,
            "mu": self.mu,
            "n": self.n,
            "m": self.m,
            "p": self.p,
            "pass": v.pass,
            "detail": v.detail,
        })
    }
}

fn cases(args: &VerifyArgs, max_n: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for lambda in Partition::all_up_to_size(args.max_size) {
        let inners = match args.identity {
            Identity::SchurShift => vec![Partition::empty()],
            _ => lambda.subpartitions(),
        };
        for mu in inners {
            for n in lambda.len().max(1)..=max_n {
                let (ms, p) = match args.identity {
                    Identity::Main | Identity::JacobiTrudi => (vec![None], Some(args.trunc_x)),
                    Identity::Probability => (vec![None], None),
                    Identity::SchurShift => ((1..=args.m).map(Some).collect(), None),
                };
                for m in ms {
                    out.push(Case {
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                        n,
                        m,
                        p,
                    });
                }
            }
        }
    }
    out
}

fn verdict(result: Result<Option<String>>) -> Verdict {
    match result {
        Ok(None) => Verdict { pass: true, detail: None },
        Ok(Some(d)) => Verdict { pass: false, detail: Some(d) },
        Err(e) => Verdict {
            pass: false,
            detail: Some(format!("error: {e:#}")),
        },
    }
}

fn check_main(case: &Case, args: &VerifyArgs, index: usize) -> Result<Option<String>> {
    let p = case.p.unwrap_or(args.trunc_x);
    let trunc = match args.trunc_y {
        Some(q) => VarTruncation::new(p, q),
        None => VarTruncation::x_only(p),
    };
    let check = verify_main_identity(&case.shape(), case.n, trunc)?;
    if let Some((mono, l, r)) = check.witness {
        return Ok(Some(format!("coefficient of {mono}: {l} vs {r}")));
    }
    // Seeded per case so results do not depend on scheduling.
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed.wrapping_add(index as u64));
    let ys_len = case.n + case.lambda.part(1);
    for _ in 0..args.spot_checks {
        let xs: Vec<BigInt> = (0..p).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
        let ys: Vec<BigInt> = (0..ys_len).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
        let (l, r) = (check.lhs.evaluate(&xs, &ys), check.rhs.evaluate(&xs, &ys));
        if l != r {
            return Ok(Some(format!("evaluation at x={xs:?} y={ys:?}: {l} vs {r}")));
        }
    }
    Ok(None)
}

fn check_jacobi_trudi(case: &Case) -> Result<Option<String>> {
    let shape = case.shape();
    let p = case.p.unwrap_or(1);
    if jacobi_trudi_l(&shape, case.n, p)? != l_poly(&shape, case.n, p)? {
        return Ok(Some("lecture hall determinant differs from enumeration".into()));
    }
    if jacobi_trudi_s(&shape, case.n)? != s_poly(&shape, case.n)? {
        return Ok(Some("content determinant differs from enumeration".into()));
    }
    Ok(None)
}

fn check_probability(case: &Case) -> Result<Option<String>> {
    let c = verify_probability(&case.shape(), case.n)?;
    Ok((!c.equal()).then(|| format!("{} vs {}", c.lhs, c.rhs)))
}

fn check_schur_shift(case: &Case) -> Result<Option<String>> {
    let m = case.m.unwrap_or(1);
    let exp = schur_expand_shifted(&case.lambda, case.n, m)?;
    for (mu, c) in &exp.coefficients {
        let expected = if case.lambda.contains(mu) {
            count_lht(&SkewShape::new(case.lambda.clone(), mu.clone())?, case.n, m)?
        } else {
            BigInt::from(0)
        };
        if *c != expected {
            return Ok(Some(format!("coefficient of s_{mu} is {c}, expected {expected}")));
        }
    }
    Ok(None)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Status> {
    if args.format == Format::Dot {
        bail!("--format dot only applies to `paths`");
    }
    if args.identity == Identity::SchurShift && args.m == 0 {
        bail!("schur-shift needs --m >= 1");
    }
    let max_n = args.max_n.unwrap_or(args.max_size.max(1));
    let cases = cases(args, max_n);
    let verdicts: Vec<Verdict> = cases
        .par_iter()
        .enumerate()
        .map(|(i, case)| {
            verdict(match args.identity {
                Identity::Main => check_main(case, args, i),
                Identity::JacobiTrudi => check_jacobi_trudi(case),
                Identity::Probability => check_probability(case),
                Identity::SchurShift => check_schur_shift(case),
            })
        })
        .collect();
    let failed = verdicts.iter().filter(|v| !v.pass).count();
    let passed = verdicts.len() - failed;
    let name = args.identity.to_possible_value().expect("no skipped variants").get_name().to_string();
    match args.format {
        Format::Json => {
            let doc = json!({
                "identity": name,
                "max_size": args.max_size,
                "max_n": max_n,
                "seed": args.seed,
                "cases": cases.iter().zip(&verdicts).map(|(c, v)| c.to_json(v)).collect::<Vec<_>>(),
                "passed": passed,
                "failed": failed,
            });
            out!("{}", serde_json::to_string_pretty(&doc)?);
        }
        _ => {
            for (c, v) in cases.iter().zip(&verdicts) {
                match &v.detail {
                    None => out!("PASS {name} {}", c.label()),
                    Some(d) => out!("FAIL {name} {}: {d}", c.label()),
                }
            }
            out!("{name}: {} cases, {passed} passed, {failed} failed", cases.len());
        }
    }
    Ok(if failed == 0 { Status::Ok } else { Status::Mismatch })
}
