//! Polynomial-ring realizations of the classical algebras under a
//! variable/derivative swap.
//!
//! A [`RepresentationContext`] fixes an algebra, a swap set `T`, and a ring
//! layout, and turns algebra elements into differential operators:
//!
//! - single-family ring `C[x_1..x_N]`: the matrix unit `E[i,j]` acts as
//!   `x_i ∂_j` when neither index is swapped, `-x_i x_j` when only the column
//!   is, `∂_i ∂_j` when only the row is, and `-x_j ∂_i - δ_ij` when both are;
//! - two-family ring `C[x_1..x_n, y_1..y_n]`: the same table on the
//!   `x`-family (only `x`-variables ever swap) plus `-y_j ∂_{y_i}`.
//!
//! The context also carries the gradings this action respects and the
//! degree-lowering/raising operator pair `Δ`/`η` where the family defines one.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::lie::{AlgebraFamily, AlgebraSpec, LieElement, WeightVector};
use crate::linalg::Subspace;
use crate::poly::{ExpVec, VarNames};
use crate::rational::{rat_int, Rational};
use crate::weyl::WeylOperator;

/// Which indices of the ring (or of the `x`-family) are "swapped": their
/// variable and derivative roles are exchanged relative to the canonical
/// action.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwapPartition {
    domain: usize,
    swapped: BTreeSet<usize>,
}

impl SwapPartition {
    /// `swapped` uses 1-based indices into `1..=domain`.
    pub fn new(domain: usize, swapped: impl IntoIterator<Item = usize>) -> Result<Self> {
        let swapped: BTreeSet<usize> = swapped.into_iter().collect();
        for &i in &swapped {
            if i == 0 || i > domain {
                return Err(Error::InvalidPartition(format!(
                    "swap index {i} out of range 1..={domain}"
                )));
            }
        }
        Ok(SwapPartition { domain, swapped })
    }

    /// No swapped indices: the canonical action.
    pub fn canonical(domain: usize) -> Self {
        SwapPartition { domain, swapped: BTreeSet::new() }
    }

    /// Every index swapped.
    pub fn full(domain: usize) -> Self {
        SwapPartition { domain, swapped: (1..=domain).collect() }
    }

    /// The contiguous block `lo..=hi`.
    pub fn block(domain: usize, lo: usize, hi: usize) -> Result<Self> {
        SwapPartition::new(domain, lo..=hi)
    }

    /// Parse a comma-separated 1-based index list; empty means canonical.
    pub fn parse(text: &str, domain: usize) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(SwapPartition::canonical(domain));
        }
        let mut swapped = Vec::new();
        for piece in trimmed.split(',') {
            let idx: usize = piece
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad swap index `{piece}`")))?;
            swapped.push(idx);
        }
        SwapPartition::new(domain, swapped)
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn contains(&self, index: usize) -> bool {
        self.swapped.contains(&index)
    }

    pub fn len(&self) -> usize {
        self.swapped.len()
    }

    pub fn is_empty(&self) -> bool {
        self.swapped.is_empty()
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.swapped.iter().copied()
    }
}

impl fmt::Display for SwapPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.swapped.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// How a swap set splits the variable pairs `(i, n+i)` of the orthogonal and
/// symplectic rings. Each bucket stores the base index `i` of the pair; for
/// the odd orthogonal ring the bases run over `2..=n+1` (index 1 is the
/// unpaired distinguished variable).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionProfile {
    pub s1: Vec<usize>,
    pub s2: Vec<usize>,
    pub t1: Vec<usize>,
    pub t2: Vec<usize>,
}

impl PartitionProfile {
    /// Classify pair bases `first_base..first_base+n-1`, pairing `i ↔ n+i`.
    pub fn classify(partition: &SwapPartition, n: usize, first_base: usize) -> Self {
        let mut profile = PartitionProfile {
            s1: Vec::new(),
            s2: Vec::new(),
            t1: Vec::new(),
            t2: Vec::new(),
        };
        for i in first_base..first_base + n {
            let lower = partition.contains(i);
            let upper = partition.contains(n + i);
            match (lower, upper) {
                (false, false) => profile.s1.push(i),
                (false, true) => profile.s2.push(i),
                (true, true) => profile.t1.push(i),
                (true, false) => profile.t2.push(i),
            }
        }
        profile
    }
}

/// Ring layout: one variable family, or the paired `x`/`y` families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariableModel {
    Single,
    Double,
}

/// A fixed realization: algebra, swap set, ring layout.
#[derive(Debug, Clone)]
pub struct RepresentationContext {
    spec: AlgebraSpec,
    partition: SwapPartition,
    model: VariableModel,
    span: Subspace,
}

impl RepresentationContext {
    pub fn new(spec: AlgebraSpec, partition: SwapPartition, model: VariableModel) -> Result<Self> {
        match model {
            VariableModel::Single => {
                if partition.domain() != spec.ambient_dim() {
                    return Err(Error::InvalidPartition(format!(
                        "swap set lives on 1..={}, but the ring has {} variables",
                        partition.domain(),
                        spec.ambient_dim()
                    )));
                }
                if spec.family == AlgebraFamily::SoOdd && partition.contains(1) {
                    return Err(Error::InvalidPartition(
                        "index 1 must stay unswapped for the odd orthogonal ring; \
                         swapping it gives an equivalent action"
                            .to_string(),
                    ));
                }
            }
            VariableModel::Double => {
                if !matches!(spec.family, AlgebraFamily::Sl | AlgebraFamily::Gl) {
                    return Err(Error::Unsupported(format!(
                        "the two-family ring is only defined for the general/special \
                         linear families, not {}",
                        spec.display_name()
                    )));
                }
                if partition.domain() != spec.n {
                    return Err(Error::InvalidPartition(format!(
                        "two-family swap set lives on 1..={}, got domain {}",
                        spec.n,
                        partition.domain()
                    )));
                }
            }
        }
        let dim = spec.ambient_dim();
        let mut span = Subspace::new(dim * dim);
        for b in spec.basis() {
            span.insert(b.flatten());
        }
        Ok(RepresentationContext { spec, partition, model, span })
    }

    /// Single-family context with swap indices given directly.
    pub fn single(spec: AlgebraSpec, swapped: impl IntoIterator<Item = usize>) -> Result<Self> {
        let partition = SwapPartition::new(spec.ambient_dim(), swapped)?;
        RepresentationContext::new(spec, partition, VariableModel::Single)
    }

    /// Two-family context with `x`-swap indices given directly.
    pub fn double(spec: AlgebraSpec, swapped: impl IntoIterator<Item = usize>) -> Result<Self> {
        let partition = SwapPartition::new(spec.n, swapped)?;
        RepresentationContext::new(spec, partition, VariableModel::Double)
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn partition(&self) -> &SwapPartition {
        &self.partition
    }

    pub fn model(&self) -> VariableModel {
        self.model
    }

    /// Number of ring variables.
    pub fn ring_arity(&self) -> usize {
        match self.model {
            VariableModel::Single => self.spec.ambient_dim(),
            VariableModel::Double => 2 * self.spec.n,
        }
    }

    pub fn names(&self) -> VarNames {
        match self.model {
            VariableModel::Single => VarNames::x_only(self.ring_arity()),
            VariableModel::Double => VarNames::xy(self.spec.n),
        }
    }

    /// Is the ring variable with this flat 1-based index swapped?
    pub fn is_swapped_var(&self, index: usize) -> bool {
        match self.model {
            VariableModel::Single => self.partition.contains(index),
            VariableModel::Double => index <= self.spec.n && self.partition.contains(index),
        }
    }

    pub fn describe(&self) -> String {
        let tag = match self.model {
            VariableModel::Single => "",
            VariableModel::Double => " (two-family ring)",
        };
        format!("{} T={}{}", self.spec.display_name(), self.partition, tag)
    }

    /// Pair-bucket classification of the swap set; only the paired rings
    /// (symplectic and orthogonal) have one.
    pub fn profile(&self) -> Result<PartitionProfile> {
        let first_base = match self.spec.family {
            AlgebraFamily::Sp | AlgebraFamily::SoEven => 1,
            AlgebraFamily::SoOdd => 2,
            _ => {
                return Err(Error::Unsupported(format!(
                    "{} has no paired-variable profile",
                    self.spec.display_name()
                )))
            }
        };
        Ok(PartitionProfile::classify(&self.partition, self.spec.n, first_base))
    }

    /// Matrix-unit action, before any membership checks.
    fn unit_operator(&self, i: usize, j: usize) -> WeylOperator {
        let arity = self.ring_arity();
        match self.model {
            VariableModel::Single => self.swap_table(arity, i, j),
            VariableModel::Double => {
                let n = self.spec.n;
                let x_part = self.swap_table(arity, i, j);
                let y_part = WeylOperator::term(
                    ExpVec::unit(arity, n + j),
                    ExpVec::unit(arity, n + i),
                    rat_int(-1),
                );
                &x_part + &y_part
            }
        }
    }

    /// The four-case table for `E[i,j]` on a single variable family.
    fn swap_table(&self, arity: usize, i: usize, j: usize) -> WeylOperator {
        let swapped = |v: usize| self.is_swapped_var(v);
        let e = |v: usize| ExpVec::unit(arity, v);
        let zero = ExpVec::zero(arity);
        match (swapped(i), swapped(j)) {
            // x_i ∂_j
            (false, false) => WeylOperator::term(e(i), e(j), rat_int(1)),
            // -x_i x_j
            (false, true) => WeylOperator::term(e(i).add(&e(j)), zero, rat_int(-1)),
            // ∂_i ∂_j
            (true, false) => WeylOperator::term(zero, e(i).add(&e(j)), rat_int(1)),
            // -x_j ∂_i - δ_ij
            (true, true) => {
                let main = WeylOperator::term(e(j), e(i), rat_int(-1));
                if i == j {
                    &main + &WeylOperator::constant(arity, rat_int(-1))
                } else {
                    main
                }
            }
        }
    }

    /// The differential-operator image of an algebra element.
    pub fn rho(&self, g: &LieElement) -> Result<WeylOperator> {
        if g.ambient() != self.spec.ambient_dim() {
            return Err(Error::ArityMismatch {
                expected: self.spec.ambient_dim(),
                found: g.ambient(),
            });
        }
        if !self.span.contains(&g.flatten()) {
            return Err(Error::NotInAlgebra);
        }
        let mut out = WeylOperator::zero(self.ring_arity());
        for (&(i, j), c) in g.entries() {
            out = &out + &self.unit_operator(i, j).scale(c);
        }
        Ok(out)
    }

    pub fn positive_operators(&self) -> Result<Vec<WeylOperator>> {
        self.spec.positive_root_vectors().iter().map(|v| self.rho(v)).collect()
    }

    pub fn negative_operators(&self) -> Result<Vec<WeylOperator>> {
        self.spec.negative_root_vectors().iter().map(|v| self.rho(v)).collect()
    }

    pub fn coroot_operators(&self) -> Result<Vec<WeylOperator>> {
        self.spec.coroots().iter().map(|v| self.rho(v)).collect()
    }

    /// Per-variable signs of the swap grading: `+1` unswapped, `-1` swapped,
    /// `0` for the `y`-family (which has its own degree grading).
    pub fn grade_signs(&self) -> Vec<i64> {
        let arity = self.ring_arity();
        (1..=arity)
            .map(|v| match self.model {
                VariableModel::Double if v > self.spec.n => 0,
                _ => {
                    if self.is_swapped_var(v) {
                        -1
                    } else {
                        1
                    }
                }
            })
            .collect()
    }

    /// Degree weights of the `y`-family (two-family ring only).
    pub fn y_degree_weights(&self) -> Result<Vec<i64>> {
        match self.model {
            VariableModel::Double => {
                let n = self.spec.n;
                Ok((1..=2 * n).map(|v| if v > n { 1 } else { 0 }).collect())
            }
            VariableModel::Single => Err(Error::Unsupported(
                "the single-family ring has no second-family degree".to_string(),
            )),
        }
    }

    /// Auxiliary nonnegative grading under which `Δ` lowers and `η` raises by
    /// exactly 2, used to cut finite slices when those operators are not
    /// degree-homogeneous. Defined only when no pair is fully swapped.
    pub fn mu_weights(&self) -> Result<Vec<i64>> {
        let arity = self.ring_arity();
        let mut mu = vec![0i64; arity];
        match self.model {
            VariableModel::Double => {
                let n = self.spec.n;
                for i in 1..=n {
                    if self.partition.contains(i) {
                        mu[i - 1] = 0;
                        mu[n + i - 1] = 2;
                    } else {
                        mu[i - 1] = 1;
                        mu[n + i - 1] = 1;
                    }
                }
            }
            VariableModel::Single => {
                let profile = self.profile()?;
                if !profile.t1.is_empty() {
                    return Err(Error::Unsupported(format!(
                        "no auxiliary grading once a pair is fully swapped \
                         (pair bases {:?})",
                        profile.t1
                    )));
                }
                let n = self.spec.n;
                if self.spec.family == AlgebraFamily::SoOdd {
                    mu[0] = 1;
                }
                for &i in &profile.s1 {
                    mu[i - 1] = 1;
                    mu[n + i - 1] = 1;
                }
                for &i in &profile.s2 {
                    mu[i - 1] = 2;
                    mu[n + i - 1] = 0;
                }
                for &i in &profile.t2 {
                    mu[i - 1] = 0;
                    mu[n + i - 1] = 2;
                }
            }
        }
        Ok(mu)
    }

    /// The grade-lowering operator `Δ` of the orthogonal and two-family
    /// realizations.
    pub fn delta_operator(&self) -> Result<WeylOperator> {
        self.laplace_pair().map(|(delta, _)| delta)
    }

    /// The grade-raising operator `η` dual to [`Self::delta_operator`].
    pub fn eta_operator(&self) -> Result<WeylOperator> {
        self.laplace_pair().map(|(_, eta)| eta)
    }

    fn laplace_pair(&self) -> Result<(WeylOperator, WeylOperator)> {
        let arity = self.ring_arity();
        let n = self.spec.n;
        let e = |v: usize| ExpVec::unit(arity, v);
        let zero = || ExpVec::zero(arity);
        let term = WeylOperator::term;
        match (self.model, self.spec.family) {
            (VariableModel::Single, AlgebraFamily::SoEven)
            | (VariableModel::Single, AlgebraFamily::SoOdd) => {
                let odd = self.spec.family == AlgebraFamily::SoOdd;
                let unit: Rational = rat_int(if odd { 2 } else { 1 });
                let profile = self.profile()?;
                let mut delta = WeylOperator::zero(arity);
                let mut eta = WeylOperator::zero(arity);
                if odd {
                    // ∂_1² and x_1² carry coefficient 1; the paired terms 2
                    let sq = e(1).add(&e(1));
                    delta = &delta + &term(zero(), sq.clone(), rat_int(1));
                    eta = &eta + &term(sq, zero(), rat_int(1));
                }
                for &i in &profile.s1 {
                    delta = &delta + &term(zero(), e(i).add(&e(n + i)), unit.clone());
                    eta = &eta + &term(e(i).add(&e(n + i)), zero(), unit.clone());
                }
                for &i in &profile.t1 {
                    delta = &delta + &term(e(i).add(&e(n + i)), zero(), unit.clone());
                    eta = &eta + &term(zero(), e(i).add(&e(n + i)), unit.clone());
                }
                for &i in &profile.s2 {
                    delta = &delta + &term(e(n + i), e(i), -unit.clone());
                    eta = &eta + &term(e(i), e(n + i), unit.clone());
                }
                for &i in &profile.t2 {
                    delta = &delta + &term(e(i), e(n + i), -unit.clone());
                    eta = &eta + &term(e(n + i), e(i), unit.clone());
                }
                Ok((delta, eta))
            }
            (VariableModel::Double, _) => {
                let mut delta = WeylOperator::zero(arity);
                let mut eta = WeylOperator::zero(arity);
                for i in 1..=n {
                    if self.partition.contains(i) {
                        delta = &delta + &term(e(i), e(n + i), rat_int(-1));
                        eta = &eta + &term(e(n + i), e(i), rat_int(1));
                    } else {
                        delta = &delta + &term(zero(), e(i).add(&e(n + i)), rat_int(1));
                        eta = &eta + &term(e(i).add(&e(n + i)), zero(), rat_int(1));
                    }
                }
                Ok((delta, eta))
            }
            _ => Err(Error::UnsupportedOperator {
                op: "Δ/η",
                family: self.spec.display_name(),
            }),
        }
    }

    /// Eigenvalue of the diagonal matrix unit `E[j,j]` on the monomial `x^α`.
    fn diagonal_eigenvalue(&self, j: usize, alpha: &ExpVec) -> Rational {
        match self.model {
            VariableModel::Single => {
                let a = alpha.0[j - 1] as i64;
                if self.partition.contains(j) {
                    rat_int(-a - 1)
                } else {
                    rat_int(a)
                }
            }
            VariableModel::Double => {
                let n = self.spec.n;
                let a = alpha.0[j - 1] as i64;
                let b = alpha.0[n + j - 1] as i64;
                let x_part = if self.partition.contains(j) { -a - 1 } else { a };
                rat_int(x_part - b)
            }
        }
    }

    /// Weight coordinates of a monomial: eigenvalues on the simple coroots.
    /// Every monomial is a weight vector since the Cartan acts diagonally.
    pub fn weight_of(&self, alpha: &ExpVec) -> WeightVector {
        let coords = self
            .spec
            .coroots()
            .iter()
            .map(|h| {
                let mut acc = rat_int(0);
                for (&(i, j), c) in h.entries() {
                    debug_assert_eq!(i, j, "coroots are diagonal");
                    acc += c.clone() * self.diagonal_eigenvalue(i, alpha);
                }
                acc
            })
            .collect();
        WeightVector(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn sp4(t: &[usize]) -> RepresentationContext {
        RepresentationContext::single(AlgebraSpec::parse("sp:4").unwrap(), t.iter().copied())
            .unwrap()
    }

    fn op(s: &str, arity: usize) -> WeylOperator {
        WeylOperator::parse(s, VarNames::x_only(arity)).unwrap()
    }

    #[test]
    fn partition_parsing_and_display() {
        let p = SwapPartition::parse("1,3", 4).unwrap();
        assert!(p.contains(1) && p.contains(3) && !p.contains(2));
        assert_eq!(p.to_string(), "{1,3}");
        assert_eq!(SwapPartition::parse("", 4).unwrap(), SwapPartition::canonical(4));
        assert_eq!(SwapPartition::canonical(4).to_string(), "{}");
        assert!(SwapPartition::parse("0", 4).is_err());
        assert!(SwapPartition::parse("5", 4).is_err());
        assert!(SwapPartition::parse("a", 4).is_err());
    }

    #[test]
    fn profile_buckets() {
        // T = {1,2} on the symplectic 4-ring: both pairs have only the lower
        // index swapped
        let ctx = sp4(&[1, 2]);
        let p = ctx.profile().unwrap();
        assert_eq!(p.t2, vec![1, 2]);
        assert!(p.s1.is_empty() && p.s2.is_empty() && p.t1.is_empty());
        // T = {1,3}: pair 1 fully swapped, pair 2 untouched
        let p = sp4(&[1, 3]).profile().unwrap();
        assert_eq!(p.t1, vec![1]);
        assert_eq!(p.s1, vec![2]);
        // odd orthogonal pairs are based at 2
        let so5 = RepresentationContext::single(
            AlgebraSpec::parse("so:5").unwrap(),
            [2, 3],
        )
        .unwrap();
        let p = so5.profile().unwrap();
        assert_eq!(p.t2, vec![2, 3]);
    }

    #[test]
    fn odd_ring_rejects_swapping_the_first_variable() {
        let err = RepresentationContext::single(AlgebraSpec::parse("so:5").unwrap(), [1, 2]);
        assert!(matches!(err, Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn single_family_action_table() {
        let ctx = sp4(&[1, 3]);
        let e = |i, j| LieElement::unit(4, i, j);
        // both unswapped: x_i ∂_j
        assert_eq!(ctx.rho(&e(2, 4)).unwrap(), op("x2*d4", 4));
        // column swapped: -x_i x_j
        assert_eq!(
            ctx.rho(&(&e(2, 1) - &e(3, 4))).unwrap(),
            op("-1*x1*x2 - d3*d4", 4)
        );
        // both swapped, off-diagonal: -x_j ∂_i
        assert_eq!(ctx.rho(&e(1, 3)).unwrap(), op("-1*x3*d1", 4));
        // row swapped: ∂_i ∂_j (first summand); column swapped: -x_i x_j (second)
        assert_eq!(
            ctx.rho(&(&e(3, 2) + &e(4, 1))).unwrap(),
            op("d2*d3 - x1*x4", 4)
        );
        // diagonal swapped: -x_i∂_i - 1; constants cancel in the difference
        let h = &e(1, 1) - &e(3, 3);
        assert_eq!(ctx.rho(&h).unwrap(), op("-1*x1*d1 + x3*d3", 4));
    }

    #[test]
    fn canonical_partition_gives_the_plain_action() {
        let gl3 = RepresentationContext::single(AlgebraSpec::parse("gl:3").unwrap(), [])
            .unwrap();
        let e12 = LieElement::unit(3, 1, 2);
        assert_eq!(gl3.rho(&e12).unwrap(), op("x1*d2", 3));
        let f = Polynomial::parse("x2^2", VarNames::x_only(3)).unwrap();
        assert_eq!(
            gl3.rho(&e12).unwrap().apply(&f),
            Polynomial::parse("2*x1*x2", VarNames::x_only(3)).unwrap()
        );
    }

    #[test]
    fn membership_is_enforced() {
        let ctx = sp4(&[1]);
        assert!(matches!(
            ctx.rho(&LieElement::unit(4, 1, 2)),
            Err(Error::NotInAlgebra)
        ));
        assert!(matches!(
            ctx.rho(&LieElement::unit(5, 1, 2)),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn two_family_action_adds_the_dual_term() {
        let sl3 = RepresentationContext::double(AlgebraSpec::parse("sl:3").unwrap(), [1, 2, 3])
            .unwrap();
        let names = VarNames::xy(3);
        let e12 = LieElement::unit(3, 1, 2);
        // x-part: -x_2 ∂_1 (both swapped, off-diagonal); y-part: -y_2 ∂_{y_1}
        let expect = WeylOperator::parse("-1*x2*d1 - 1*y2*d4", names).unwrap();
        assert_eq!(sl3.rho(&e12).unwrap(), expect);
        // diagonal element of sl(3)
        let h = &LieElement::unit(3, 1, 1) - &LieElement::unit(3, 2, 2);
        let expect =
            WeylOperator::parse("-1*x1*d1 + x2*d2 - 1*y1*d4 + y2*d5", names).unwrap();
        assert_eq!(sl3.rho(&h).unwrap(), expect);
    }

    #[test]
    fn gradings() {
        let ctx = sp4(&[1, 2]);
        assert_eq!(ctx.grade_signs(), vec![-1, -1, 1, 1]);
        let sl2 = RepresentationContext::double(AlgebraSpec::parse("sl:2").unwrap(), [1])
            .unwrap();
        assert_eq!(sl2.grade_signs(), vec![-1, 1, 0, 0]);
        assert_eq!(sl2.y_degree_weights().unwrap(), vec![0, 0, 1, 1]);
        assert_eq!(sl2.mu_weights().unwrap(), vec![0, 1, 2, 1]);
        // so(4), T = {1}: pair 1 is lower-swapped, pair 2 untouched
        let so4 = RepresentationContext::single(AlgebraSpec::parse("so:4").unwrap(), [1])
            .unwrap();
        assert_eq!(so4.mu_weights().unwrap(), vec![0, 1, 2, 1]);
        // fully swapped pair: no auxiliary grading
        assert!(sp4(&[1, 3]).mu_weights().is_err());
    }

    #[test]
    fn laplace_pair_fully_swapped_even_ring() {
        let so4 = RepresentationContext::single(
            AlgebraSpec::parse("so:4").unwrap(),
            [1, 2],
        )
        .unwrap();
        assert_eq!(so4.delta_operator().unwrap(), op("-1*x1*d3 - x2*d4", 4));
        assert_eq!(so4.eta_operator().unwrap(), op("x3*d1 + x4*d2", 4));
    }

    #[test]
    fn laplace_pair_mixed_even_ring() {
        // so(6), T = {1,2}: pairs 1,2 lower-swapped, pair 3 untouched
        let so6 = RepresentationContext::single(
            AlgebraSpec::parse("so:6").unwrap(),
            [1, 2],
        )
        .unwrap();
        assert_eq!(
            so6.delta_operator().unwrap(),
            op("d3*d6 - x1*d4 - x2*d5", 6)
        );
        assert_eq!(
            so6.eta_operator().unwrap(),
            op("x3*x6 + x4*d1 + x5*d2", 6)
        );
    }

    #[test]
    fn laplace_pair_odd_ring() {
        // so(5), T = {2,3}
        let so5 = RepresentationContext::single(
            AlgebraSpec::parse("so:5").unwrap(),
            [2, 3],
        )
        .unwrap();
        assert_eq!(
            so5.delta_operator().unwrap(),
            op("d1^2 - 2*x2*d4 - 2*x3*d5", 5)
        );
        assert_eq!(
            so5.eta_operator().unwrap(),
            op("x1^2 + 2*x4*d2 + 2*x5*d3", 5)
        );
    }

    #[test]
    fn laplace_pair_two_family_ring() {
        let names = VarNames::xy(2);
        let sl2 = RepresentationContext::double(AlgebraSpec::parse("sl:2").unwrap(), [1])
            .unwrap();
        assert_eq!(
            sl2.delta_operator().unwrap(),
            WeylOperator::parse("d2*d4 - x1*d3", names).unwrap()
        );
        assert_eq!(
            sl2.eta_operator().unwrap(),
            WeylOperator::parse("x2*y2 + y1*d1", names).unwrap()
        );
        // no such pair on the symplectic ring
        assert!(sp4(&[1]).delta_operator().is_err());
    }

    #[test]
    fn laplace_pair_commutes_with_the_action() {
        for t in [vec![1usize, 2], vec![1], vec![]] {
            let so4 = RepresentationContext::single(
                AlgebraSpec::parse("so:4").unwrap(),
                t.clone(),
            )
            .unwrap();
            let delta = so4.delta_operator().unwrap();
            let eta = so4.eta_operator().unwrap();
            for b in so4.spec().basis() {
                let r = so4.rho(&b).unwrap();
                assert!(delta.commutator(&r).is_zero(), "Δ fails on {b} with T={t:?}");
                assert!(eta.commutator(&r).is_zero(), "η fails on {b} with T={t:?}");
            }
        }
    }

    #[test]
    fn weights_of_known_vectors() {
        // T = {1}: x_2^k has weight (-(k+1), k)
        let ctx = sp4(&[1]);
        for k in 0..4i64 {
            let alpha = ExpVec(vec![0, k as u32, 0, 0]);
            assert_eq!(
                ctx.weight_of(&alpha),
                WeightVector(vec![rat_int(-k - 1), rat_int(k)])
            );
        }
        // T = {1,2}: x_4^k and x_2^k share the weight (k, -(k+1))
        let ctx = sp4(&[1, 2]);
        for k in 1..4i64 {
            let up = ExpVec(vec![0, 0, 0, k as u32]);
            let down = ExpVec(vec![0, k as u32, 0, 0]);
            let expect = WeightVector(vec![rat_int(k), rat_int(-k - 1)]);
            assert_eq!(ctx.weight_of(&up), expect);
            assert_eq!(ctx.weight_of(&down), expect);
        }
        // the grade-0 seeds 1 and x_1x_4 - x_2x_3 have weights -λ_2 and -2λ_2
        assert_eq!(
            ctx.weight_of(&ExpVec::zero(4)),
            WeightVector(vec![rat_int(0), rat_int(-1)])
        );
        assert_eq!(
            ctx.weight_of(&ExpVec(vec![1, 0, 0, 1])),
            WeightVector(vec![rat_int(0), rat_int(-2)])
        );
    }

    #[test]
    fn weight_matches_operator_eigenvalue() {
        // the diagonal rule agrees with actually applying the coroot operator
        let so5 = RepresentationContext::single(
            AlgebraSpec::parse("so:5").unwrap(),
            [2, 3],
        )
        .unwrap();
        let alpha = ExpVec(vec![2, 1, 0, 3, 1]);
        let mono = Polynomial::monomial(alpha.clone(), rat_int(1));
        let weight = so5.weight_of(&alpha);
        for (h, expect) in so5.coroot_operators().unwrap().iter().zip(&weight.0) {
            let image = h.apply(&mono);
            assert_eq!(image, mono.scale(expect));
        }
    }

    #[test]
    fn bracket_fidelity_spot_checks() {
        // [ρ(a), ρ(b)] = ρ([a,b]) across models and partitions
        let cases: Vec<RepresentationContext> = vec![
            sp4(&[1, 3]),
            sp4(&[]),
            RepresentationContext::single(AlgebraSpec::parse("so:5").unwrap(), [2, 4]).unwrap(),
            RepresentationContext::double(AlgebraSpec::parse("sl:3").unwrap(), [2]).unwrap(),
        ];
        for ctx in &cases {
            let basis = ctx.spec().basis();
            for a in &basis {
                for b in &basis {
                    let lhs = ctx.rho(a).unwrap().commutator(&ctx.rho(b).unwrap());
                    let rhs = ctx.rho(&a.bracket(b)).unwrap();
                    assert_eq!(lhs, rhs, "bracket mismatch in {}", ctx.describe());
                }
            }
        }
    }
}
