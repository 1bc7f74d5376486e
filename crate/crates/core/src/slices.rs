//! Finite monomial slices of the polynomial ring.
//!
//! Checks over an infinite module reduce to exact linear algebra once they
//! are restricted to a slice: the set of monomials whose exponent vector
//! satisfies a list of integer-linear constraints (fixed swap grade, fixed or
//! bounded total degree, fixed auxiliary grading …). [`SliceSpec`] describes
//! such a slice, [`SliceSpec::enumerate`] lists its monomials — refusing
//! rather than looping if the constraints do not pin down a finite set — and
//! [`operator_matrix`] turns an operator between two slices into an exact
//! matrix.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::poly::{ExpVec, Polynomial};
use crate::rational::{rat_int, Rational};
use crate::rep::{RepresentationContext, VariableModel};
use crate::weyl::WeylOperator;

/// Default ceiling on the number of monomials a single slice may contain.
pub const DEFAULT_MONOMIAL_CAP: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintKind {
    Eq,
    Le,
}

/// `coeffs · α (kind) rhs` over exponent vectors `α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<i64>,
    pub kind: ConstraintKind,
    pub rhs: i64,
}

impl LinearConstraint {
    pub fn eq(coeffs: Vec<i64>, rhs: i64) -> Self {
        LinearConstraint { coeffs, kind: ConstraintKind::Eq, rhs }
    }

    pub fn le(coeffs: Vec<i64>, rhs: i64) -> Self {
        LinearConstraint { coeffs, kind: ConstraintKind::Le, rhs }
    }

    fn holds(&self, alpha: &ExpVec) -> bool {
        let lhs = alpha.weighted_sum(&self.coeffs);
        match self.kind {
            ConstraintKind::Eq => lhs == self.rhs,
            ConstraintKind::Le => lhs <= self.rhs,
        }
    }
}

/// A constrained monomial slice.
#[derive(Debug, Clone)]
pub struct SliceSpec {
    arity: usize,
    constraints: Vec<LinearConstraint>,
    label: String,
}

impl SliceSpec {
    pub fn new(arity: usize, label: impl Into<String>) -> Self {
        SliceSpec { arity, constraints: Vec::new(), label: label.into() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn push(mut self, c: LinearConstraint) -> Self {
        assert_eq!(c.coeffs.len(), self.arity, "constraint arity mismatch");
        self.constraints.push(c);
        self
    }

    /// All monomials of total degree at most `d`.
    pub fn degree_at_most(arity: usize, d: i64) -> Self {
        SliceSpec::new(arity, format!("deg<={d}"))
            .push(LinearConstraint::le(vec![1; arity], d))
    }

    /// All monomials of total degree exactly `d`.
    pub fn degree_exactly(arity: usize, d: i64) -> Self {
        SliceSpec::new(arity, format!("deg={d}"))
            .push(LinearConstraint::eq(vec![1; arity], d))
    }

    /// Swap grade `k`, total degree exactly `d`.
    pub fn a_grade_degree(ctx: &RepresentationContext, k: i64, d: i64) -> Self {
        let arity = ctx.ring_arity();
        SliceSpec::new(arity, format!("grade={k},deg={d}"))
            .push(LinearConstraint::eq(ctx.grade_signs(), k))
            .push(LinearConstraint::eq(vec![1; arity], d))
    }

    /// Swap grade `k`, total degree at most `max_d`.
    pub fn a_grade_region(ctx: &RepresentationContext, k: i64, max_d: i64) -> Self {
        let arity = ctx.ring_arity();
        SliceSpec::new(arity, format!("grade={k},deg<={max_d}"))
            .push(LinearConstraint::eq(ctx.grade_signs(), k))
            .push(LinearConstraint::le(vec![1; arity], max_d))
    }

    /// Swap grade `k`, auxiliary grading exactly `m`.
    pub fn a_grade_mu(ctx: &RepresentationContext, k: i64, m: i64) -> Result<Self> {
        Ok(SliceSpec::new(ctx.ring_arity(), format!("grade={k},mu={m}"))
            .push(LinearConstraint::eq(ctx.grade_signs(), k))
            .push(LinearConstraint::eq(ctx.mu_weights()?, m)))
    }

    /// Two-family slice: `x`-grade `l1`, `y`-degree `l2`.
    pub fn b_slice(ctx: &RepresentationContext, l1: i64, l2: i64) -> Result<Self> {
        assert_eq!(ctx.model(), VariableModel::Double);
        Ok(SliceSpec::new(ctx.ring_arity(), format!("xgrade={l1},ydeg={l2}"))
            .push(LinearConstraint::eq(ctx.grade_signs(), l1))
            .push(LinearConstraint::eq(ctx.y_degree_weights()?, l2)))
    }

    /// Two-family slice cut further by the auxiliary grading.
    pub fn b_slice_mu(ctx: &RepresentationContext, l1: i64, l2: i64, m: i64) -> Result<Self> {
        Ok(Self::b_slice(ctx, l1, l2)?
            .push(LinearConstraint::eq(ctx.mu_weights()?, m))
            .relabel(format!("xgrade={l1},ydeg={l2},mu={m}")))
    }

    /// Two-family slice cut by a total-degree bound instead.
    pub fn b_region(ctx: &RepresentationContext, l1: i64, l2: i64, max_d: i64) -> Result<Self> {
        let arity = ctx.ring_arity();
        Ok(Self::b_slice(ctx, l1, l2)?
            .push(LinearConstraint::le(vec![1; arity], max_d))
            .relabel(format!("xgrade={l1},ydeg={l2},deg<={max_d}")))
    }

    fn relabel(mut self, label: String) -> Self {
        self.label = label;
        self
    }

    /// Normalized `coeffs · α ≤ rhs` rows implied by the constraints, plus
    /// one round of pairwise sums. The sums are redundant as constraints but
    /// often supply the all-nonnegative rows the enumerator needs to bound a
    /// variable (e.g. a grade row and a grading row whose negative
    /// coefficients cancel).
    fn bounding_rows(&self) -> Vec<(Vec<i64>, i64)> {
        let mut rows: Vec<(Vec<i64>, i64)> = Vec::new();
        for c in &self.constraints {
            rows.push((c.coeffs.clone(), c.rhs));
            if c.kind == ConstraintKind::Eq {
                rows.push((c.coeffs.iter().map(|v| -v).collect(), -c.rhs));
            }
        }
        let base = rows.len();
        for i in 0..base {
            for j in i + 1..base {
                let sum: Vec<i64> =
                    rows[i].0.iter().zip(&rows[j].0).map(|(a, b)| a + b).collect();
                let rhs = rows[i].1 + rows[j].1;
                rows.push((sum, rhs));
            }
        }
        rows
    }

    /// List every monomial in the slice, sorted in graded lexicographic
    /// order. Fails with [`Error::SliceNotFinite`] if the constraints leave a
    /// direction unbounded and with [`Error::CapExceeded`] past `cap`.
    pub fn enumerate(&self, cap: usize) -> Result<SliceBasis> {
        let rows = self.bounding_rows();
        let mut assigned = vec![None::<u32>; self.arity];
        let mut found: Vec<ExpVec> = Vec::new();
        self.search(&rows, &mut assigned, &mut found, cap)?;
        found.sort();
        SliceBasis::from_monomials(self.arity, self.label.clone(), found)
    }

    fn search(
        &self,
        rows: &[(Vec<i64>, i64)],
        assigned: &mut Vec<Option<u32>>,
        found: &mut Vec<ExpVec>,
        cap: usize,
    ) -> Result<()> {
        // infeasibility pruning: a row whose unassigned coefficients are all
        // nonnegative already has its minimum on the assigned part
        for (coeffs, rhs) in rows {
            let mut minimum = 0i64;
            let mut lower_bounded = true;
            for (v, c) in coeffs.iter().enumerate() {
                match assigned[v] {
                    Some(a) => minimum += c * a as i64,
                    None => {
                        if *c < 0 {
                            lower_bounded = false;
                            break;
                        }
                    }
                }
            }
            if lower_bounded && minimum > *rhs {
                return Ok(());
            }
        }

        let Some(next) = self.pick_bounded_var(rows, assigned) else {
            if assigned.iter().all(|a| a.is_some()) {
                let alpha = ExpVec(assigned.iter().map(|a| a.unwrap()).collect());
                if self.constraints.iter().all(|c| c.holds(&alpha)) {
                    if found.len() >= cap {
                        return Err(Error::CapExceeded {
                            slice: self.label.clone(),
                            cap,
                        });
                    }
                    found.push(alpha);
                }
                return Ok(());
            }
            return Err(Error::SliceNotFinite(self.label.clone()));
        };

        let (var, bound) = next;
        for value in 0..=bound {
            assigned[var] = Some(value);
            self.search(rows, assigned, found, cap)?;
        }
        assigned[var] = None;
        Ok(())
    }

    /// Choose an unassigned variable some row can bound: the row needs a
    /// positive coefficient on it and nonnegative coefficients on every other
    /// unassigned variable. Returns the variable and its tightest bound.
    fn pick_bounded_var(
        &self,
        rows: &[(Vec<i64>, i64)],
        assigned: &[Option<u32>],
    ) -> Option<(usize, u32)> {
        let mut best: Option<(usize, u32)> = None;
        for (v, slot) in assigned.iter().enumerate() {
            if slot.is_some() {
                continue;
            }
            for (coeffs, rhs) in rows {
                if coeffs[v] <= 0 {
                    continue;
                }
                let mut rest_ok = true;
                let mut fixed = 0i64;
                for (w, c) in coeffs.iter().enumerate() {
                    match assigned[w] {
                        Some(a) => fixed += c * a as i64,
                        None => {
                            if w != v && *c < 0 {
                                rest_ok = false;
                                break;
                            }
                        }
                    }
                }
                if !rest_ok {
                    continue;
                }
                let room = rhs - fixed;
                let bound = if room < 0 { 0 } else { (room / coeffs[v]) as u32 };
                // an exhausted bound of 0 still assigns the variable
                match best {
                    Some((_, b)) if b <= bound => {}
                    _ => best = Some((v, bound)),
                }
            }
        }
        best
    }
}

/// The monomials of an enumerated slice, in graded lexicographic order, with
/// positions for coordinate conversion.
#[derive(Debug, Clone)]
pub struct SliceBasis {
    arity: usize,
    label: String,
    monomials: Vec<ExpVec>,
    index: BTreeMap<ExpVec, usize>,
}

impl SliceBasis {
    fn from_monomials(arity: usize, label: String, monomials: Vec<ExpVec>) -> Result<Self> {
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Ok(SliceBasis { arity, label, monomials, index })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[ExpVec] {
        &self.monomials
    }

    pub fn position(&self, alpha: &ExpVec) -> Option<usize> {
        self.index.get(alpha).copied()
    }

    /// Smallest total degree present, if any monomial exists.
    pub fn min_total_degree(&self) -> Option<u32> {
        self.monomials.iter().map(|m| m.total_degree()).min()
    }

    /// Coordinates of a polynomial supported on this slice.
    pub fn to_vec(&self, p: &Polynomial) -> Result<Vec<Rational>> {
        let mut out = vec![rat_int(0); self.dim()];
        for (alpha, c) in p.terms() {
            let Some(i) = self.position(alpha) else {
                return Err(Error::ImageEscapesSlice(format!(
                    "monomial with exponents {:?} is outside slice {}",
                    alpha.0, self.label
                )));
            };
            out[i] = c.clone();
        }
        Ok(out)
    }

    /// Rebuild a polynomial from slice coordinates.
    pub fn from_vec(&self, coords: &[Rational]) -> Polynomial {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        Polynomial::from_terms(
            self.arity,
            coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (self.monomials[i].clone(), c.clone())),
        )
    }
}

/// The matrix of `op` from one slice to another: column `j` holds the
/// codomain coordinates of `op` applied to the `j`-th domain monomial.
pub fn operator_matrix(
    op: &WeylOperator,
    domain: &SliceBasis,
    codomain: &SliceBasis,
) -> Result<ExactMatrix> {
    let mut m = ExactMatrix::zeros(codomain.dim(), domain.dim());
    for (j, alpha) in domain.monomials().iter().enumerate() {
        let image = op.apply(&Polynomial::monomial(alpha.clone(), rat_int(1)));
        let coords = codomain.to_vec(&image)?;
        for (i, c) in coords.into_iter().enumerate() {
            if !c.is_zero() {
                m.set(i, j, c);
            }
        }
    }
    Ok(m)
}

/// Kernel of `op` restricted to the domain slice, as polynomials with the
/// first nonzero coordinate normalized to 1.
pub fn kernel_of(
    op: &WeylOperator,
    domain: &SliceBasis,
    codomain: &SliceBasis,
) -> Result<Vec<Polynomial>> {
    let m = operator_matrix(op, domain, codomain)?;
    Ok(m.nullspace().into_iter().map(|v| domain.from_vec(&v)).collect())
}

/// Images of the domain monomials under `op`, in codomain coordinates
/// (spanning the image, not reduced to a basis).
pub fn image_vectors(
    op: &WeylOperator,
    domain: &SliceBasis,
    codomain: &SliceBasis,
) -> Result<Vec<Vec<Rational>>> {
    let mut out = Vec::with_capacity(domain.dim());
    for alpha in domain.monomials() {
        let image = op.apply(&Polynomial::monomial(alpha.clone(), rat_int(1)));
        out.push(codomain.to_vec(&image)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::AlgebraSpec;
    use crate::poly::VarNames;

    fn sp4(t: &[usize]) -> RepresentationContext {
        RepresentationContext::single(AlgebraSpec::parse("sp:4").unwrap(), t.iter().copied())
            .unwrap()
    }

    #[test]
    fn grade_degree_slice_counts() {
        let ctx = sp4(&[1, 2]);
        let basis = SliceSpec::a_grade_degree(&ctx, 0, 4).enumerate(1000).unwrap();
        assert_eq!(basis.dim(), 9);
        // grade-0 monomials of degree 2m always number (m+1)^2 here
        for m in 0..4i64 {
            let b = SliceSpec::a_grade_degree(&ctx, 0, 2 * m).enumerate(10_000).unwrap();
            assert_eq!(b.dim(), ((m + 1) * (m + 1)) as usize);
        }
        // odd degree cannot reach grade 0
        assert!(SliceSpec::a_grade_degree(&ctx, 0, 3).enumerate(1000).unwrap().is_empty());
    }

    #[test]
    fn region_slices_adds_lower_degrees() {
        let ctx = sp4(&[1, 2]);
        let region = SliceSpec::a_grade_region(&ctx, 0, 4).enumerate(1000).unwrap();
        // degrees 0, 2, 4 contribute 1 + 4 + 9
        assert_eq!(region.dim(), 14);
    }

    #[test]
    fn mu_slice_enumeration() {
        // pair 1 lower-swapped, pair 2 untouched: μ = (0,1,2,1)
        let so4 = RepresentationContext::single(AlgebraSpec::parse("so:4").unwrap(), [1])
            .unwrap();
        let basis = SliceSpec::a_grade_mu(&so4, -1, 2).unwrap().enumerate(1000).unwrap();
        let expect: Vec<ExpVec> = vec![
            ExpVec(vec![2, 0, 1, 0]),
            ExpVec(vec![3, 0, 0, 2]),
            ExpVec(vec![3, 1, 0, 1]),
            ExpVec(vec![3, 2, 0, 0]),
        ];
        let mut got = basis.monomials().to_vec();
        got.sort();
        let mut want = expect;
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn unbounded_slice_is_rejected() {
        let ctx = sp4(&[1, 2]);
        let spec = SliceSpec::new(4, "grade only")
            .push(LinearConstraint::eq(ctx.grade_signs(), 0));
        assert!(matches!(spec.enumerate(1000), Err(Error::SliceNotFinite(_))));
    }

    #[test]
    fn cap_is_enforced() {
        let ctx = sp4(&[1, 2]);
        let err = SliceSpec::a_grade_degree(&ctx, 0, 4).enumerate(5);
        assert!(matches!(err, Err(Error::CapExceeded { cap: 5, .. })));
    }

    #[test]
    fn two_family_slices() {
        let sl2 = RepresentationContext::double(AlgebraSpec::parse("sl:2").unwrap(), [1, 2])
            .unwrap();
        // x-grade -2, y-degree 1: x-monomials of degree 2 times y-monomials
        // of degree 1
        let basis = SliceSpec::b_slice(&sl2, -2, 1).unwrap().enumerate(1000).unwrap();
        assert_eq!(basis.dim(), 6);
        let region = SliceSpec::b_region(&sl2, -2, 1, 3).unwrap().enumerate(1000).unwrap();
        assert_eq!(region.dim(), 6);
    }

    #[test]
    fn coordinates_round_trip() {
        let ctx = sp4(&[1, 2]);
        let basis = SliceSpec::a_grade_degree(&ctx, 0, 2).enumerate(1000).unwrap();
        let names = VarNames::x_only(4);
        let p = Polynomial::parse("x1*x4 - x2*x3", names).unwrap();
        let v = basis.to_vec(&p).unwrap();
        assert_eq!(basis.from_vec(&v), p);
        let outside = Polynomial::parse("x1", names).unwrap();
        assert!(basis.to_vec(&outside).is_err());
    }

    #[test]
    fn matrix_and_kernel_of_a_degree_preserving_operator() {
        // fully swapped even orthogonal ring: Δ = -x1∂3 - x2∂4 preserves
        // degree and lowers grade by 2
        let so4 = RepresentationContext::single(AlgebraSpec::parse("so:4").unwrap(), [1, 2])
            .unwrap();
        let delta = so4.delta_operator().unwrap();
        let domain = SliceSpec::a_grade_degree(&so4, 0, 2).enumerate(1000).unwrap();
        let codomain = SliceSpec::a_grade_degree(&so4, -2, 2).enumerate(1000).unwrap();
        assert_eq!(domain.dim(), 4);
        assert_eq!(codomain.dim(), 3);
        let m = operator_matrix(&delta, &domain, &codomain).unwrap();
        assert_eq!(m.rank(), 3);
        let kernel = kernel_of(&delta, &domain, &codomain).unwrap();
        assert_eq!(kernel.len(), 1);
        let names = VarNames::x_only(4);
        assert_eq!(kernel[0], Polynomial::parse("x2*x3 - x1*x4", names).unwrap());
    }

    #[test]
    fn escaping_image_is_reported() {
        let so4 = RepresentationContext::single(AlgebraSpec::parse("so:4").unwrap(), [1, 2])
            .unwrap();
        let delta = so4.delta_operator().unwrap();
        let domain = SliceSpec::a_grade_degree(&so4, 0, 2).enumerate(1000).unwrap();
        // wrong codomain grade: images cannot be expressed there
        let codomain = SliceSpec::a_grade_degree(&so4, 0, 2).enumerate(1000).unwrap();
        assert!(matches!(
            operator_matrix(&delta, &domain, &codomain),
            Err(Error::ImageEscapesSlice(_))
        ));
    }
}
