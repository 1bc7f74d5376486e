//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Design notes:
//! - Terms live in a `BTreeMap` keyed by exponent vectors under graded
//!   lexicographic order, so iteration order, display order, and the notion
//!   of "leading term" are all deterministic.
//! - Zero coefficients are never stored; two polynomials are equal iff their
//!   term maps are structurally equal.
//! - Exponents are `u32` with checked arithmetic: overflow is a bug in the
//!   caller and fails loudly rather than wrapping.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_rational, is_negative, rat_int, Rational};

/// Exponent vector of a monomial, one entry per ring variable.
///
/// Ordered by total degree first, then lexicographically (`x1 > x2 > ...`),
/// i.e. graded lexicographic with the natural variable order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExpVec(pub Vec<u32>);

impl ExpVec {
    pub fn zero(arity: usize) -> Self {
        ExpVec(vec![0; arity])
    }

    /// Unit vector for the 1-based variable `index`.
    pub fn unit(arity: usize, index: usize) -> Self {
        let mut v = vec![0; arity];
        v[index - 1] = 1;
        ExpVec(v)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Every exponent multiplied by `k`; panics on overflow.
    pub fn scaled(&self, k: u32) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .map(|a| a.checked_mul(k).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise sum; panics on exponent overflow.
    pub fn add(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise difference, or `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &ExpVec) -> Option<ExpVec> {
        let mut v = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            v.push(a.checked_sub(*b)?);
        }
        Some(ExpVec(v))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Signed sum `Σ signs[i]·exp[i]`; the grading used throughout.
    pub fn weighted_sum(&self, signs: &[i64]) -> i64 {
        self.0
            .iter()
            .zip(signs)
            .map(|(&e, &s)| e as i64 * s)
            .sum()
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Maps ring indices to display names. The single-family ring prints every
/// variable as `x<i>`; the two-family ring prints indices `n+1..=2n` as
/// `y1..yn`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarNames {
    pub arity: usize,
    /// `Some(n)`: indices above `n` are the second family `y1..`.
    pub y_split: Option<usize>,
}

impl VarNames {
    pub fn x_only(arity: usize) -> Self {
        VarNames { arity, y_split: None }
    }

    pub fn xy(n: usize) -> Self {
        VarNames { arity: 2 * n, y_split: Some(n) }
    }

    pub fn name(&self, index: usize) -> String {
        match self.y_split {
            Some(n) if index > n => format!("y{}", index - n),
            _ => format!("x{index}"),
        }
    }

    /// Ring index for a parsed token family/number, e.g. (`y`, 2) with split 3 -> 5.
    pub fn index(&self, family: char, number: usize) -> Result<usize> {
        let index = match (family, self.y_split) {
            ('x', _) => number,
            ('y', Some(n)) => n + number,
            _ => {
                return Err(Error::Parse(format!(
                    "variable family `{family}` is not available in this ring"
                )))
            }
        };
        let limit = match self.y_split {
            Some(n) if family == 'x' => n,
            Some(n) => n, // y-family count
            None => self.arity,
        };
        if number == 0 || number > limit || index > self.arity {
            return Err(Error::IndexOutOfRange { index, arity: self.arity });
        }
        Ok(index)
    }
}

/// Sparse polynomial in `arity` commuting variables over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<ExpVec, Rational>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Polynomial::monomial(ExpVec::zero(arity), rat_int(1))
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Polynomial::monomial(ExpVec::zero(arity), c)
    }

    /// The variable `x<index>` (1-based).
    pub fn var(arity: usize, index: usize) -> Self {
        Polynomial::monomial(ExpVec::unit(arity, index), rat_int(1))
    }

    pub fn monomial(exps: ExpVec, coeff: Rational) -> Self {
        let arity = exps.arity();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Polynomial { arity, terms }
    }

    pub fn from_terms(arity: usize, entries: impl IntoIterator<Item = (ExpVec, Rational)>) -> Self {
        let mut p = Polynomial::zero(arity);
        for (e, c) in entries {
            p.add_term(e, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &ExpVec) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(|| rat_int(0))
    }

    /// Largest term in graded lexicographic order.
    pub fn leading(&self) -> Option<(&ExpVec, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(ExpVec::total_degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, exps: ExpVec, coeff: Rational) {
        assert_eq!(exps.arity(), self.arity, "term arity mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, q)| (e.clone(), q.clone() * c)).collect(),
        }
    }

    /// Rescale so the leading coefficient is 1. No-op on zero.
    pub fn normalize_leading(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Rational::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    /// Partial derivative with respect to the 1-based variable `index`.
    pub fn derivative(&self, index: usize) -> Polynomial {
        assert!(index >= 1 && index <= self.arity, "variable index out of range");
        let mut out = Polynomial::zero(self.arity);
        for (e, c) in &self.terms {
            let k = e.0[index - 1];
            if k == 0 {
                continue;
            }
            let mut v = e.clone();
            v.0[index - 1] = k - 1;
            out.add_term(v, c.clone() * rat_int(k as i64));
        }
        out
    }

    /// Multiply by the variable `x<index>`.
    pub fn mul_var(&self, index: usize) -> Polynomial {
        let unit = ExpVec::unit(self.arity, index);
        let mut out = Polynomial::zero(self.arity);
        for (e, c) in &self.terms {
            out.add_term(e.add(&unit), c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.arity);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Signed-degree of a grade-homogeneous polynomial under the given
    /// per-variable signs; errors if two terms disagree.
    pub fn grade(&self, signs: &[i64]) -> Result<i64> {
        assert_eq!(signs.len(), self.arity);
        let mut grade = None;
        for e in self.terms.keys() {
            let g = e.weighted_sum(signs);
            match grade {
                None => grade = Some(g),
                Some(first) if first != g => {
                    return Err(Error::MixedGrade { first, second: g })
                }
                _ => {}
            }
        }
        Ok(grade.unwrap_or(0))
    }

    /// Split into grade-homogeneous components keyed by grade.
    pub fn grade_split(&self, signs: &[i64]) -> BTreeMap<i64, Polynomial> {
        let mut out: BTreeMap<i64, Polynomial> = BTreeMap::new();
        for (e, c) in &self.terms {
            let g = e.weighted_sum(signs);
            out.entry(g)
                .or_insert_with(|| Polynomial::zero(self.arity))
                .add_term(e.clone(), c.clone());
        }
        out
    }

    /// Apply a per-monomial map and sum the results linearly.
    pub fn map_monomials(&self, mut f: impl FnMut(&ExpVec) -> Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.arity);
        for (e, c) in &self.terms {
            out = &out + &f(e).scale(c);
        }
        out
    }

    pub fn to_display(&self, names: VarNames) -> String {
        assert_eq!(names.arity, self.arity);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            push_term(&mut out, i == 0, c, &term_vars(e, names));
        }
        out
    }

    /// Parse the polynomial grammar, e.g. `1/3*x1^3*x3 + x1*x5`.
    pub fn parse(input: &str, names: VarNames) -> Result<Polynomial> {
        let mut p = Polynomial::zero(names.arity);
        for piece in split_terms(input)? {
            let (coeff, factors) = parse_factors(&piece)?;
            let mut exps = ExpVec::zero(names.arity);
            for (family, number, power) in factors {
                if family == 'd' {
                    return Err(Error::Parse(
                        "derivative token in polynomial context".to_string(),
                    ));
                }
                let idx = names.index(family, number)?;
                exps.0[idx - 1] = exps.0[idx - 1]
                    .checked_add(power)
                    .expect("exponent overflow");
            }
            p.add_term(exps, coeff);
        }
        Ok(p)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.arity, rhs.arity, "ring arity mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &rhs.neg()
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.arity, rhs.arity, "ring arity mismatch");
        let mut out = Polynomial::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.add(eb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl Polynomial {
    pub fn neg(&self) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_display(VarNames::x_only(self.arity)))
    }
}

// ---- shared term grammar helpers (also used by the operator parser) ----

/// Split `a - b + c` into signed pieces `a`, `-b`, `c`.
pub(crate) fn split_terms(input: &str) -> Result<Vec<String>> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty expression".to_string()));
    }
    let mut pieces = Vec::new();
    let mut current = String::new();
    for (i, ch) in trimmed.chars().enumerate() {
        match ch {
            '+' => {
                if !current.trim().is_empty() {
                    pieces.push(current.trim().to_string());
                }
                current = String::new();
            }
            '-' if i > 0 => {
                if !current.trim().is_empty() {
                    pieces.push(current.trim().to_string());
                }
                current = String::from("-");
            }
            _ => current.push(ch),
        }
    }
    if !current.trim().is_empty() {
        pieces.push(current.trim().to_string());
    }
    if pieces.is_empty() {
        return Err(Error::Parse(format!("no terms in `{input}`")));
    }
    Ok(pieces)
}

/// Parse one signed term into a coefficient and a list of `(family, index, power)`
/// variable factors. `family` is `x`, `y`, or `d`.
pub(crate) fn parse_factors(piece: &str) -> Result<(Rational, Vec<(char, usize, u32)>)> {
    let mut rest = piece.trim();
    let mut coeff = rat_int(1);
    if let Some(stripped) = rest.strip_prefix('-') {
        coeff = -coeff;
        rest = stripped.trim();
    }
    if rest.is_empty() {
        return Err(Error::Parse(format!("dangling sign in `{piece}`")));
    }
    let mut factors = Vec::new();
    for raw in rest.split('*') {
        let f = raw.trim();
        if f.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{piece}`")));
        }
        let first = f.chars().next().unwrap();
        if first.is_ascii_digit() {
            // rational factor `p` or `p/q`
            let (num, den) = match f.split_once('/') {
                None => (f, "1"),
                Some((n, d)) => (n.trim(), d.trim()),
            };
            let n: i64 = num
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator `{num}`")))?;
            let d: i64 = den
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator `{den}`")))?;
            if d == 0 {
                return Err(Error::Parse("zero denominator".to_string()));
            }
            coeff *= Rational::new(n.into(), d.into());
        } else if matches!(first, 'x' | 'y' | 'd') {
            let body = &f[1..];
            let (idx_str, pow_str) = match body.split_once('^') {
                None => (body, "1"),
                Some((i, p)) => (i.trim(), p.trim()),
            };
            let number: usize = idx_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index in `{f}`")))?;
            let power: u32 = pow_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{f}`")))?;
            factors.push((first, number, power));
        } else {
            return Err(Error::Parse(format!("unexpected factor `{f}`")));
        }
    }
    Ok((coeff, factors))
}

/// Format the variable part of a term, e.g. `x1^3*x3`.
pub(crate) fn term_vars(e: &ExpVec, names: VarNames) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.0.iter().enumerate() {
        if k == 0 {
            continue;
        }
        let name = names.name(i + 1);
        if k == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{k}"));
        }
    }
    parts.join("*")
}

/// Append one signed term (`coeff * vars`) to a display string.
pub(crate) fn push_term(out: &mut String, first: bool, coeff: &Rational, vars: &str) {
    let neg = is_negative(coeff);
    let mag = if neg { -coeff.clone() } else { coeff.clone() };
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let mag_one = mag.is_one();
    if vars.is_empty() {
        out.push_str(&fmt_rational(&mag));
    } else if mag_one {
        out.push_str(vars);
    } else {
        out.push_str(&fmt_rational(&mag));
        out.push('*');
        out.push_str(vars);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(s: &str, arity: usize) -> Polynomial {
        Polynomial::parse(s, VarNames::x_only(arity)).unwrap()
    }

    #[test]
    fn addition_cancels_and_prunes_zeros() {
        let a = p("x1 + x2", 2);
        let b = p("-1*x1", 2);
        assert_eq!(&a + &b, p("x2", 2));
        let zero = Polynomial::zero(2);
        assert_eq!(&a + &zero, a);
        // cancellation never leaves a zero-coefficient term behind
        let u = p("x1*x4 - x2*x3", 4);
        let fixed = &u + &p("x2*x3", 4);
        assert_eq!(fixed, p("x1*x4", 4));
        assert_eq!(fixed.num_terms(), 1);
    }

    #[test]
    fn multiplication_matches_hand_expansion() {
        let u = p("x1*x4 - x2*x3", 4);
        let sq = &u * &u;
        assert_eq!(sq, p("x1^2*x4^2 - 2*x1*x2*x3*x4 + x2^2*x3^2", 4));
        let x1 = Polynomial::var(2, 1);
        assert_eq!(&x1 * &x1, p("x1^2", 2));
        let one = Polynomial::one(4);
        assert_eq!(&u * &one, u);
    }

    #[test]
    fn naive_convolution_oracle() {
        // brute-force product over term lists, no canonicalization shortcuts
        let a = p("2*x1^2 - x2 + 1/3", 3);
        let b = p("x1*x3 - 3*x2^2 + 5", 3);
        let mut expect = Polynomial::zero(3);
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                expect.add_term(ea.add(eb), ca.clone() * cb.clone());
            }
        }
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn derivative_basics() {
        let f = p("x1^3*x2", 2);
        assert_eq!(f.derivative(1), p("3*x1^2*x2", 2));
        assert_eq!(f.derivative(2), p("x1^3", 2));
        let c = Polynomial::constant(2, rat(7, 2));
        assert_eq!(c.derivative(1), Polynomial::zero(2));
    }

    #[test]
    fn grade_and_degree() {
        // signs: variable 1 swapped (weight -1), others +1
        let signs = vec![-1i64, 1, 1, 1];
        let f = p("x2^3", 4);
        assert_eq!(f.grade(&signs).unwrap(), 3);
        let g = p("x1*x2", 4);
        assert_eq!(g.grade(&signs).unwrap(), 0);
        let mixed = p("x1 + x2", 4);
        assert!(matches!(mixed.grade(&signs), Err(Error::MixedGrade { .. })));
        assert_eq!(Polynomial::one(4).total_degree(), 0);
        assert_eq!(p("x1*x4 - x2*x3", 4).total_degree(), 2);
    }

    #[test]
    fn grlex_leading_term() {
        let f = p("x2^2 + x1*x2 + x1", 2);
        let (lead, _) = f.leading().unwrap();
        assert_eq!(lead, &ExpVec(vec![1, 1])); // degree 2, lex max
        assert_eq!(f.normalize_leading(), f);
        let g = p("2*x1*x2 + x1", 2);
        assert_eq!(g.normalize_leading(), p("x1*x2 + 1/2*x1", 2));
    }

    #[test]
    fn display_round_trip() {
        let cases = [
            "x1^2*x4^2 - 2*x1*x2*x3*x4 + x2^2*x3^2",
            "1/3*x1^3*x3 + x1*x5",
            "-x1 - 1",
            "0",
        ];
        for s in cases {
            let f = Polynomial::parse(s, VarNames::x_only(5)).unwrap();
            assert_eq!(
                Polynomial::parse(&f.to_display(VarNames::x_only(5)), VarNames::x_only(5))
                    .unwrap(),
                f
            );
        }
        assert_eq!(p("1/3*x1^3*x3 + x1*x5", 5).to_display(VarNames::x_only(5)),
                   "1/3*x1^3*x3 + x1*x5");
    }

    #[test]
    fn two_family_names() {
        let names = VarNames::xy(2);
        let f = Polynomial::parse("x1*y2 - x2*y1", names).unwrap();
        // y1, y2 live at ring indices 3, 4
        assert_eq!(f, p("x1*x4 - x2*x3", 4));
        assert_eq!(f.to_display(names), "x1*y2 - x2*y1");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Polynomial::parse("", VarNames::x_only(2)).is_err());
        assert!(Polynomial::parse("x0", VarNames::x_only(2)).is_err());
        assert!(Polynomial::parse("x3", VarNames::x_only(2)).is_err());
        assert!(Polynomial::parse("y1", VarNames::x_only(2)).is_err());
        assert!(Polynomial::parse("d1", VarNames::x_only(2)).is_err());
        assert!(Polynomial::parse("x1^", VarNames::x_only(2)).is_err());
        assert!(Polynomial::parse("1/0", VarNames::x_only(2)).is_err());
    }
}
