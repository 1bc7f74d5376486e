//! Polynomial-coefficient differential operators (the Weyl algebra).
//!
//! An operator is stored in normal order: a term map keyed by a pair of
//! exponent vectors `(mul, diff)` meaning `coeff · x^mul ∂^diff`, with all
//! multiplications written to the left of all derivatives. Composition
//! re-normalizes eagerly, so structural equality of term maps is equality
//! of operators.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{parse_factors, push_term, split_terms, term_vars, ExpVec, Polynomial, VarNames};
use crate::rational::{falling, rat_int, Rational};

/// Normal-ordered term key: multiply by `x^0`, then differentiate by `∂^1`.
pub type OpKey = (ExpVec, ExpVec);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylOperator {
    arity: usize,
    terms: BTreeMap<OpKey, Rational>,
}

impl WeylOperator {
    pub fn zero(arity: usize) -> Self {
        WeylOperator { arity, terms: BTreeMap::new() }
    }

    pub fn identity(arity: usize) -> Self {
        WeylOperator::term(ExpVec::zero(arity), ExpVec::zero(arity), rat_int(1))
    }

    /// Single normal-ordered term `coeff · x^mul ∂^diff`.
    pub fn term(mul: ExpVec, diff: ExpVec, coeff: Rational) -> Self {
        assert_eq!(mul.arity(), diff.arity());
        let arity = mul.arity();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((mul, diff), coeff);
        }
        WeylOperator { arity, terms }
    }

    /// Multiplication by the variable `x<index>` (1-based).
    pub fn mul_var(arity: usize, index: usize) -> Self {
        WeylOperator::term(ExpVec::unit(arity, index), ExpVec::zero(arity), rat_int(1))
    }

    /// The derivative `∂<index>` (1-based).
    pub fn deriv(arity: usize, index: usize) -> Self {
        WeylOperator::term(ExpVec::zero(arity), ExpVec::unit(arity, index), rat_int(1))
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        WeylOperator::term(ExpVec::zero(arity), ExpVec::zero(arity), c)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OpKey, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Highest total order of differentiation across terms.
    pub fn max_diff_order(&self) -> u32 {
        self.terms.keys().map(|(_, d)| d.total_degree()).max().unwrap_or(0)
    }

    /// Largest total-degree increase this operator can cause (per term:
    /// `|mul| - |diff|`, floored at each term).
    pub fn max_degree_shift(&self) -> i64 {
        self.terms
            .keys()
            .map(|(m, d)| m.total_degree() as i64 - d.total_degree() as i64)
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, key: OpKey, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn scale(&self, c: &Rational) -> WeylOperator {
        if c.is_zero() {
            return WeylOperator::zero(self.arity);
        }
        WeylOperator {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, q)| (k.clone(), q.clone() * c)).collect(),
        }
    }

    pub fn neg(&self) -> WeylOperator {
        self.scale(&rat_int(-1))
    }

    /// Apply to a polynomial. Exact; never truncates.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(self.arity, p.arity(), "ring arity mismatch");
        let mut out = Polynomial::zero(self.arity);
        for ((mul, diff), c) in &self.terms {
            for (alpha, q) in p.terms() {
                let Some(reduced) = alpha.checked_sub(diff) else {
                    continue;
                };
                // ∂^diff x^alpha = Π falling(alpha_v, diff_v) · x^(alpha-diff)
                let mut scalar = c.clone() * q.clone();
                for (a, d) in alpha.0.iter().zip(&diff.0) {
                    if *d > 0 {
                        scalar *= Rational::from(falling(*a, *d));
                    }
                }
                out.add_term(mul.add(&reduced), scalar);
            }
        }
        out
    }

    /// Operator product `self ∘ rhs` (apply `rhs` first), re-normal-ordered.
    pub fn compose(&self, rhs: &WeylOperator) -> WeylOperator {
        assert_eq!(self.arity, rhs.arity, "ring arity mismatch");
        let mut out = WeylOperator::zero(self.arity);
        for ((m1, d1), c1) in &self.terms {
            for ((m2, d2), c2) in &rhs.terms {
                // Normal-order ∂^d1 x^m2 = Σ_j Π C(d1,j) C(m2,j) j! x^(m2-j) ∂^(d1-j)
                let bound: Vec<u32> = d1
                    .0
                    .iter()
                    .zip(&m2.0)
                    .map(|(a, b)| (*a).min(*b))
                    .collect();
                for_each_multi_index(&bound, |j| {
                    let mut scalar = c1.clone() * c2.clone();
                    for v in 0..self.arity {
                        if j[v] > 0 {
                            scalar *= Rational::from(
                                crate::rational::binomial(d1.0[v], j[v])
                                    * crate::rational::binomial(m2.0[v], j[v])
                                    * crate::rational::factorial(j[v]),
                            );
                        }
                    }
                    let jv = ExpVec(j.to_vec());
                    let mul = m1.add(&m2.checked_sub(&jv).unwrap());
                    let diff = d2.add(&d1.checked_sub(&jv).unwrap());
                    out.add_term((mul, diff), scalar);
                });
            }
        }
        out
    }

    /// `[self, rhs] = self∘rhs - rhs∘self`.
    pub fn commutator(&self, rhs: &WeylOperator) -> WeylOperator {
        &self.compose(rhs) - &rhs.compose(self)
    }

    pub fn to_display(&self, names: VarNames) -> String {
        assert_eq!(names.arity, self.arity);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((mul, diff), c)) in self.terms.iter().rev().enumerate() {
            let mut vars = term_vars(mul, names);
            let dpart = diff_vars(diff);
            if !dpart.is_empty() {
                if !vars.is_empty() {
                    vars.push('*');
                }
                vars.push_str(&dpart);
            }
            push_term(&mut out, i == 0, c, &vars);
        }
        out
    }

    /// Parse the operator grammar, e.g. `-1*x1*x2 - d3*d4`. Factors may use
    /// `x<i>`/`y<i>` (multiplication) and `d<i>` (differentiation); each term
    /// denotes the normal-ordered product of its factors.
    pub fn parse(input: &str, names: VarNames) -> Result<WeylOperator> {
        let mut op = WeylOperator::zero(names.arity);
        for piece in split_terms(input)? {
            let (coeff, factors) = parse_factors(&piece)?;
            let mut mul = ExpVec::zero(names.arity);
            let mut diff = ExpVec::zero(names.arity);
            for (family, number, power) in factors {
                if family == 'd' {
                    if number == 0 || number > names.arity {
                        return Err(Error::IndexOutOfRange {
                            index: number,
                            arity: names.arity,
                        });
                    }
                    diff.0[number - 1] += power;
                } else {
                    let idx = names.index(family, number)?;
                    mul.0[idx - 1] += power;
                }
            }
            op.add_term((mul, diff), coeff);
        }
        Ok(op)
    }
}

impl std::ops::Add for &WeylOperator {
    type Output = WeylOperator;
    fn add(self, rhs: &WeylOperator) -> WeylOperator {
        assert_eq!(self.arity, rhs.arity, "ring arity mismatch");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &WeylOperator {
    type Output = WeylOperator;
    fn sub(self, rhs: &WeylOperator) -> WeylOperator {
        self + &rhs.neg()
    }
}

impl fmt::Display for WeylOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_display(VarNames::x_only(self.arity)))
    }
}

fn diff_vars(diff: &ExpVec) -> String {
    let mut parts = Vec::new();
    for (i, &k) in diff.0.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if k == 1 {
            parts.push(format!("d{}", i + 1));
        } else {
            parts.push(format!("d{}^{}", i + 1, k));
        }
    }
    parts.join("*")
}

/// Visit every multi-index `0 <= j <= bound` componentwise.
fn for_each_multi_index(bound: &[u32], mut visit: impl FnMut(&[u32])) {
    let mut j = vec![0u32; bound.len()];
    loop {
        visit(&j);
        let mut pos = 0;
        loop {
            if pos == bound.len() {
                return;
            }
            if j[pos] < bound[pos] {
                j[pos] += 1;
                break;
            }
            j[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str, arity: usize) -> WeylOperator {
        WeylOperator::parse(s, VarNames::x_only(arity)).unwrap()
    }

    fn poly(s: &str, arity: usize) -> Polynomial {
        Polynomial::parse(s, VarNames::x_only(arity)).unwrap()
    }

    #[test]
    fn apply_basic_actions() {
        // x1∂2 on x2^2
        assert_eq!(op("x1*d2", 2).apply(&poly("x2^2", 2)), poly("2*x1*x2", 2));
        // (-x1x2 - ∂3∂4) on x3x4
        assert_eq!(
            op("-1*x1*x2 - d3*d4", 4).apply(&poly("x3*x4", 4)),
            poly("-1*x1*x2*x3*x4 - 1", 4)
        );
        // (-x2∂1 - 1) on x1
        assert_eq!(op("-1*x2*d1 - 1", 2).apply(&poly("x1", 2)), poly("-x2 - x1", 2));
        // zero operator, zero polynomial
        assert_eq!(WeylOperator::zero(2).apply(&poly("x1", 2)), Polynomial::zero(2));
        assert_eq!(op("d1", 2).apply(&Polynomial::zero(2)), Polynomial::zero(2));
    }

    #[test]
    fn apply_is_linear() {
        let a = op("x1*d1 + d2^2", 2);
        let f = poly("x1^2*x2 - 3*x2^2", 2);
        let g = poly("x1 + 5", 2);
        assert_eq!(a.apply(&(&f + &g)), &a.apply(&f) + &a.apply(&g));
    }

    #[test]
    fn compose_normal_orders() {
        let d1 = WeylOperator::deriv(2, 1);
        let x1 = WeylOperator::mul_var(2, 1);
        // ∂1 ∘ x1 = x1∂1 + 1
        assert_eq!(d1.compose(&x1), op("x1*d1 + 1", 2));
        // x1 ∘ ∂1 = x1∂1 (already normal)
        assert_eq!(x1.compose(&d1), op("x1*d1", 2));
        // ∂1 ∘ x2 = x2∂1 (disjoint variables commute)
        assert_eq!(d1.compose(&WeylOperator::mul_var(2, 2)), op("x2*d1", 2));
        // identity is neutral
        let b = op("-1*x1*x2 - d1*d2", 2);
        assert_eq!(WeylOperator::identity(2).compose(&b), b);
        assert_eq!(b.compose(&WeylOperator::identity(2)), b);
        // higher order: ∂1^2 ∘ x1^2 = x1^2∂1^2 + 4x1∂1 + 2
        assert_eq!(
            op("d1^2", 1).compose(&op("x1^2", 1)),
            op("x1^2*d1^2 + 4*x1*d1 + 2", 1)
        );
    }

    #[test]
    fn compose_agrees_with_sequential_apply() {
        let a = op("x2*d1^2 - 2*d2", 2);
        let b = op("x1^2*d2 + x1", 2);
        let f = poly("x1^3*x2 + x2^3 - 4*x1", 2);
        assert_eq!(a.compose(&b).apply(&f), a.apply(&b.apply(&f)));
    }

    #[test]
    fn commutators() {
        let d1 = WeylOperator::deriv(2, 1);
        let x1 = WeylOperator::mul_var(2, 1);
        assert_eq!(d1.commutator(&x1), WeylOperator::identity(2));
        let a = op("x1*d2 - d1*d2", 2);
        assert!(a.commutator(&a).is_zero());
    }

    #[test]
    fn display_round_trip() {
        for s in ["-1*x1*x2 - d3*d4", "x1*d1 + 1", "d1^2", "5", "x2*d1"] {
            let a = op(s, 4);
            assert_eq!(op(&a.to_display(VarNames::x_only(4)), 4), a);
        }
        assert_eq!(op("-1*x1*x2 - d3*d4", 4).to_display(VarNames::x_only(4)),
                   "-x1*x2 - d3*d4");
    }

    #[test]
    fn distinct_normal_forms_are_distinguished_by_small_monomials() {
        // Operators equal as maps on low-degree monomials are structurally
        // equal; conversely a structural difference shows up on a monomial
        // of total degree at most the max diff order.
        let a = op("x1*d1 + 1", 2);
        let b = op("x1*d1", 2);
        let diff = &a - &b;
        let bound = diff.max_diff_order() + 2;
        let mut found = false;
        for i in 0..=bound {
            for j in 0..=bound.saturating_sub(i) {
                let m = Polynomial::monomial(ExpVec(vec![i, j]), rat_int(1));
                if a.apply(&m) != b.apply(&m) {
                    found = true;
                }
            }
        }
        assert!(found);
    }
}
