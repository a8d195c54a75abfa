//! Sparse multivariate polynomials with big-integer coefficients in two
//! families of variables `x_0, x_1, …` and `y_0, y_1, …`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A variable `x_i` or `y_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(usize),
    Y(usize),
}

/// A monomial `x^a y^b`, stored as exponent vectors without trailing zeros.
///
/// The derived order is lexicographic with `x_0` most significant, then the
/// `y` exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    x: Vec<u32>,
    y: Vec<u32>,
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn new(mut x: Vec<u32>, mut y: Vec<u32>) -> Self {
        trim(&mut x);
        trim(&mut y);
        Monomial { x, y }
    }

    pub fn x(i: usize) -> Self {
        Monomial::var(Var::X(i))
    }

    pub fn y(j: usize) -> Self {
        Monomial::var(Var::Y(j))
    }

    pub fn var(v: Var) -> Self {
        let unit = |i: usize| {
            let mut e = vec![0; i + 1];
            e[i] = 1;
            e
        };
        match v {
            Var::X(i) => Monomial { x: unit(i), y: vec![] },
            Var::Y(j) => Monomial { x: vec![], y: unit(j) },
        }
    }

    pub fn x_exponents(&self) -> &[u32] {
        &self.x
    }

    pub fn y_exponents(&self) -> &[u32] {
        &self.y
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match v {
            Var::X(i) => self.x.get(i).copied().unwrap_or(0),
            Var::Y(j) => self.y.get(j).copied().unwrap_or(0),
        }
    }

    pub fn degree(&self) -> u32 {
        self.x.iter().chain(&self.y).sum()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_empty() && self.y.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let add = |a: &[u32], b: &[u32]| {
            let mut out = vec![0; a.len().max(b.len())];
            for (k, e) in a.iter().enumerate() {
                out[k] += e;
            }
            for (k, e) in b.iter().enumerate() {
                out[k] += e;
            }
            out
        };
        Monomial {
            x: add(&self.x, &other.x),
            y: add(&self.y, &other.y),
        }
    }

    /// `(variable, exponent)` pairs with positive exponent, `x` before `y`.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        let xs = self.x.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (Var::X(i), e));
        let ys = self.y.iter().enumerate().filter(|(_, &e)| e > 0).map(|(j, &e)| (Var::Y(j), e));
        xs.chain(ys)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors()
            .map(|(v, e)| {
                let name = match v {
                    Var::X(i) => format!("x{i}"),
                    Var::Y(j) => format!("y{j}"),
                };
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}

/// Setting `x_i := 0` for `i ≥ p` and `y_j := 0` for `j ≥ q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarTruncation {
    pub p: usize,
    pub q: usize,
}

impl VarTruncation {
    pub fn new(p: usize, q: usize) -> Self {
        VarTruncation { p, q }
    }

    /// Truncates only the `x` family.
    pub fn x_only(p: usize) -> Self {
        VarTruncation { p, q: usize::MAX }
    }

    pub fn keeps(&self, m: &Monomial) -> bool {
        m.x.len() <= self.p && m.y.len() <= self.q
    }
}

/// A polynomial with integer coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn one() -> Self {
        SparsePoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        SparsePoly::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        SparsePoly::from_monomial(Monomial::var(v))
    }

    pub fn x(i: usize) -> Self {
        SparsePoly::var(Var::X(i))
    }

    pub fn y(j: usize) -> Self {
        SparsePoly::var(Var::Y(j))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        SparsePoly::term(1, m)
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { terms }
    }

    /// `x_0 + … + x_{p−1}`, written `|x|` under truncation `p`.
    pub fn x_sum(p: usize) -> Self {
        (0..p).map(SparsePoly::x).fold(SparsePoly::zero(), |acc, v| &acc + &v)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The largest monomial in the order of [`Monomial`].
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> SparsePoly {
        let mut base = self.clone();
        let mut acc = SparsePoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces each variable `v` by `f(v)`, or leaves it when `f` returns `None`.
    pub fn substitute(&self, f: impl Fn(Var) -> Option<SparsePoly>) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let mut term = SparsePoly::constant(c.clone());
            let mut kept = Monomial::one();
            for (v, e) in m.factors() {
                match f(v) {
                    Some(p) => term = &term * &p.pow(e),
                    None => {
                        let mut single = Monomial::one();
                        for _ in 0..e {
                            single = single.mul(&Monomial::var(v));
                        }
                        kept = kept.mul(&single);
                    }
                }
            }
            out += &(&term * &SparsePoly::from_monomial(kept));
        }
        out
    }

    /// Drops every monomial that uses a variable outside the truncation.
    pub fn truncate(&self, t: VarTruncation) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| t.keeps(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Evaluates at integer points; variables past the given slices are zero.
    pub fn evaluate(&self, xs: &[BigInt], ys: &[BigInt]) -> BigInt {
        let zero = BigInt::zero();
        self.terms
            .iter()
            .map(|(m, c)| {
                m.factors().fold(c.clone(), |acc, (v, e)| {
                    let base = match v {
                        Var::X(i) => xs.get(i).unwrap_or(&zero),
                        Var::Y(j) => ys.get(j).unwrap_or(&zero),
                    };
                    acc * Pow::pow(base, e)
                })
            })
            .sum()
    }

    /// Sum of all coefficients (evaluation at all ones).
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// First monomial, in ascending order, whose coefficients differ.
    pub fn first_difference(&self, other: &SparsePoly) -> Option<(Monomial, BigInt, BigInt)> {
        let diff = self - other;
        diff.terms.iter().next().map(|(m, _)| (m.clone(), self.coefficient(m), other.coefficient(m)))
    }

    pub fn to_json(&self) -> Vec<PolyTermJson> {
        self.terms
            .iter()
            .map(|(m, c)| PolyTermJson {
                coeff: c.to_string(),
                xexp: m.x.clone(),
                yexp: m.y.clone(),
            })
            .collect()
    }

    pub fn from_json(terms: &[PolyTermJson]) -> Result<SparsePoly> {
        let mut out = SparsePoly::zero();
        for t in terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            out.add_term(Monomial::new(t.xexp.clone(), t.yexp.clone()), &c);
        }
        Ok(out)
    }
}

/// JSON record of one term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTermJson {
    pub coeff: String,
    pub xexp: Vec<u32>,
    pub yexp: Vec<u32>,
}

impl fmt::Display for SparsePoly {
    /// Canonical text form, terms in ascending monomial order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let body = if m.is_one() {
                c.abs().to_string()
            } else {
                format!("{} * {}", c.abs(), m)
            };
            match (k, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl AddAssign<&SparsePoly> for SparsePoly {
    fn add_assign(&mut self, rhs: &SparsePoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;

    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SparsePoly {
    type Output = SparsePoly;

    fn add(mut self, rhs: SparsePoly) -> SparsePoly {
        self += &rhs;
        self
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out += &-rhs;
        out
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Mul for SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: SparsePoly) -> SparsePoly {
        &self * &rhs
    }
}

impl std::iter::Sum for SparsePoly {
    fn sum<I: Iterator<Item = SparsePoly>>(iter: I) -> SparsePoly {
        iter.fold(SparsePoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_form_is_canonical() {
        let p = &(&SparsePoly::y(0) * &SparsePoly::y(0)) + &SparsePoly::constant(-3);
        let p = &p + &SparsePoly::term(2, Monomial::new(vec![4], vec![0, 1]));
        assert_eq!(p.to_string(), "-3 + 1 * y0^2 + 2 * x0^4 * y1");
        assert_eq!(SparsePoly::zero().to_string(), "0");
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = SparsePoly::x(1);
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &a).len(), 0);
    }

    #[test]
    fn substitution() {
        // y0^2 with y0 -> x0 + y0
        let p = SparsePoly::y(0).pow(2);
        let q = p.substitute(|v| match v {
            Var::Y(0) => Some(&SparsePoly::x(0) + &SparsePoly::y(0)),
            _ => None,
        });
        let expect = &(&SparsePoly::x(0).pow(2) + &SparsePoly::term(2, Monomial::new(vec![1], vec![1]))) + &SparsePoly::y(0).pow(2);
        assert_eq!(q, expect);
    }

    #[test]
    fn json_round_trip() {
        let p = &SparsePoly::term(-7, Monomial::new(vec![0, 2], vec![1])) + &SparsePoly::one();
        let back = SparsePoly::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
        assert_eq!(
            serde_json::to_string(&p.to_json()).unwrap(),
            r#"[{"coeff":"1","xexp":[],"yexp":[]},{"coeff":"-7","xexp":[0,2],"yexp":[1]}]"#
        );
    }

    fn small_poly() -> impl Strategy<Value = SparsePoly> {
        prop::collection::vec((-5i64..6, prop::collection::vec(0u32..3, 0..3), prop::collection::vec(0u32..3, 0..3)), 0..5)
            .prop_map(|ts| {
                ts.into_iter()
                    .map(|(c, x, y)| SparsePoly::term(c, Monomial::new(x, y)))
                    .sum()
            })
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_homomorphism(a in small_poly(), b in small_poly(), xs in prop::collection::vec(-3i64..4, 3), ys in prop::collection::vec(-3i64..4, 3)) {
            let xs: Vec<BigInt> = xs.into_iter().map(BigInt::from).collect();
            let ys: Vec<BigInt> = ys.into_iter().map(BigInt::from).collect();
            let ea = a.evaluate(&xs, &ys);
            let eb = b.evaluate(&xs, &ys);
            prop_assert_eq!((&a * &b).evaluate(&xs, &ys), &ea * &eb);
            prop_assert_eq!((&a + &b).evaluate(&xs, &ys), ea + eb);
        }

        #[test]
        fn multiplication_commutes_and_distributes(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
