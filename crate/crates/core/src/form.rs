//! The symmetric bilinear form that makes transposition the adjoint of the
//! swapped action.
//!
//! Distinct monomials are orthogonal and
//! `(x^α | x^α) = (-1)^{Σ swapped exponents} · Π_v α_v!`.
//! Under this pairing the action satisfies `(ρ(g)·u | v) = (u | ρ(gᵗ)·v)`,
//! which [`adjoint_defects`] checks exhaustively on a degree window.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::lie::LieElement;
use crate::poly::{ExpVec, Polynomial};
use crate::rational::{factorial, rat_int, Rational};
use crate::rep::RepresentationContext;
use crate::slices::{SliceBasis, SliceSpec};

/// `(x^α | x^α)` — the only nonzero pairings are diagonal.
pub fn monomial_pairing(ctx: &RepresentationContext, alpha: &ExpVec) -> Rational {
    let mut value = BigInt::one();
    let mut swapped_degree = 0u32;
    for (v, &a) in alpha.0.iter().enumerate() {
        value *= factorial(a);
        if ctx.is_swapped_var(v + 1) {
            swapped_degree += a;
        }
    }
    if swapped_degree % 2 == 1 {
        value = -value;
    }
    Rational::from(value)
}

/// The form evaluated on two polynomials.
pub fn form(ctx: &RepresentationContext, p: &Polynomial, q: &Polynomial) -> Rational {
    let mut acc = rat_int(0);
    for (alpha, c) in p.terms() {
        let d = q.coeff(alpha);
        if !d.is_zero() {
            acc += c.clone() * d * monomial_pairing(ctx, alpha);
        }
    }
    acc
}

/// Diagonal Gram entries for the monomials of a slice.
pub fn gram_diagonal(ctx: &RepresentationContext, basis: &SliceBasis) -> Vec<Rational> {
    basis.monomials().iter().map(|m| monomial_pairing(ctx, m)).collect()
}

/// Check `(ρ(g)·u | v) = (u | ρ(gᵗ)·v)` for every pair of monomials of total
/// degree at most `max_degree` and every `g` in `elements`. Returns a
/// description of each failing triple; an empty list means the sweep passed.
///
/// Components of an image lying outside the degree window pair to zero with
/// every window monomial (the form is diagonal), so the window comparison is
/// exact.
pub fn adjoint_defects(
    ctx: &RepresentationContext,
    elements: &[LieElement],
    max_degree: i64,
    cap: usize,
) -> Result<Vec<String>> {
    let basis = SliceSpec::degree_at_most(ctx.ring_arity(), max_degree).enumerate(cap)?;
    let pair = gram_diagonal(ctx, &basis);
    let names = ctx.names();
    let mut defects = Vec::new();

    for g in elements {
        let op = ctx.rho(g)?;
        let op_t = ctx.rho(&g.transpose())?;

        // lhs[(i, j)] = (ρ(g) m_i | m_j), rhs[(i, j)] = (m_i | ρ(gᵗ) m_j)
        let mut lhs: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        let mut rhs: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (i, m) in basis.monomials().iter().enumerate() {
            let image = op.apply(&Polynomial::monomial(m.clone(), rat_int(1)));
            for (beta, c) in image.terms() {
                if let Some(j) = basis.position(beta) {
                    lhs.insert((i, j), c.clone() * &pair[j]);
                }
            }
        }
        for (j, m) in basis.monomials().iter().enumerate() {
            let image = op_t.apply(&Polynomial::monomial(m.clone(), rat_int(1)));
            for (beta, c) in image.terms() {
                if let Some(i) = basis.position(beta) {
                    rhs.insert((i, j), c.clone() * &pair[i]);
                }
            }
        }

        let keys: std::collections::BTreeSet<(usize, usize)> =
            lhs.keys().chain(rhs.keys()).copied().collect();
        for (i, j) in keys {
            let a = lhs.get(&(i, j)).cloned().unwrap_or_else(|| rat_int(0));
            let b = rhs.get(&(i, j)).cloned().unwrap_or_else(|| rat_int(0));
            if a != b {
                let u = Polynomial::monomial(basis.monomials()[i].clone(), rat_int(1));
                let v = Polynomial::monomial(basis.monomials()[j].clone(), rat_int(1));
                defects.push(format!(
                    "g={g}: (g.{} | {}) = {} but ({} | gᵗ.{}) = {}",
                    u.to_display(names),
                    v.to_display(names),
                    crate::rational::fmt_rational(&a),
                    u.to_display(names),
                    v.to_display(names),
                    crate::rational::fmt_rational(&b),
                ));
            }
        }
    }
    Ok(defects)
}
