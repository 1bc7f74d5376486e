//! Module-level structure checks: direct-sum splittings of graded slices,
//! a triangular solver that rebuilds lowering-kernel elements from their
//! base monomials, reachability under the negative root operators, and two
//! operator identities the decompositions rest on.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{rank_of, sum_and_intersection, Subspace};
use crate::poly::{ExpVec, Polynomial};
use crate::rational::{rat_int, Rational};
use crate::rep::RepresentationContext;
use crate::slices::{image_vectors, operator_matrix, SliceBasis, SliceSpec};
use crate::weyl::WeylOperator;

/// Result of checking `slice = ker(op_k) ⊕ im(op_i)` on one graded slice.
#[derive(Debug, Clone)]
pub struct SplitReport {
    pub slice_dim: usize,
    pub kernel_dim: usize,
    pub image_rank: usize,
    pub intersection_dim: usize,
}

impl SplitReport {
    pub fn pass(&self) -> bool {
        self.kernel_dim + self.image_rank == self.slice_dim && self.intersection_dim == 0
    }

    pub fn summary(&self) -> String {
        format!(
            "dim {} = kernel {} + image {} (overlap {})",
            self.slice_dim, self.kernel_dim, self.image_rank, self.intersection_dim
        )
    }

    /// Serialize with the slice identity and dimension table; a failing
    /// split carries a witness line naming the defect.
    pub fn to_json(&self, case: &str, params: &BTreeMap<String, String>) -> String {
        let witness = if self.pass() {
            None
        } else if self.intersection_dim > 0 {
            Some(format!("kernel and image overlap in dimension {}", self.intersection_dim))
        } else {
            Some(format!(
                "kernel {} + image {} != slice dimension {}",
                self.kernel_dim, self.image_rank, self.slice_dim
            ))
        };
        let value = serde_json::json!({
            "case": case,
            "params": params,
            "dims": {
                "slice": self.slice_dim,
                "kernel": self.kernel_dim,
                "image": self.image_rank,
                "intersection": self.intersection_dim,
            },
            "verdict": if self.pass() { "pass" } else { "fail" },
            "witness": witness,
        });
        serde_json::to_string_pretty(&value).expect("report serialization cannot fail")
    }
}

/// Verify that a slice splits as the kernel of one operator plus the image
/// of another: `domain = ker(op_kernel: domain → kernel_codomain) ⊕
/// op_image(image_source)`.
pub fn slice_splits(
    op_kernel: &WeylOperator,
    op_image: &WeylOperator,
    domain: &SliceBasis,
    kernel_codomain: &SliceBasis,
    image_source: &SliceBasis,
) -> Result<SplitReport> {
    let kernel = operator_matrix(op_kernel, domain, kernel_codomain)?.nullspace();
    let image = image_vectors(op_image, image_source, domain)?;
    let dim = domain.dim();
    let image_rank = rank_of(dim, &image);
    let (_, intersection_dim) = sum_and_intersection(dim, &kernel, &image);
    Ok(SplitReport {
        slice_dim: dim,
        kernel_dim: kernel.len(),
        image_rank,
        intersection_dim,
    })
}

/// Monomial-wise right inverse of a second-order pure derivative term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialInverse {
    /// Inverse of `∂_a ∂_b` (`a ≠ b`).
    PairInverse { a: usize, b: usize },
    /// Inverse of `∂_v²`.
    SquareInverse { var: usize },
}

impl MonomialInverse {
    pub fn variables(&self) -> Vec<usize> {
        match self {
            MonomialInverse::PairInverse { a, b } => vec![*a, *b],
            MonomialInverse::SquareInverse { var } => vec![*var],
        }
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let arity = p.arity();
        let mut out = Polynomial::zero(arity);
        for (alpha, c) in p.terms() {
            match self {
                MonomialInverse::PairInverse { a, b } => {
                    let ea = alpha.0[a - 1] as i64;
                    let eb = alpha.0[b - 1] as i64;
                    let bumped = alpha.add(&ExpVec::unit(arity, *a)).add(&ExpVec::unit(arity, *b));
                    out.add_term(bumped, c.clone() / rat_int((ea + 1) * (eb + 1)));
                }
                MonomialInverse::SquareInverse { var } => {
                    let e = alpha.0[var - 1] as i64;
                    let bumped = alpha
                        .add(&ExpVec::unit(arity, *var))
                        .add(&ExpVec::unit(arity, *var));
                    out.add_term(bumped, c.clone() / rat_int((e + 1) * (e + 2)));
                }
            }
        }
        out
    }
}

/// A splitting `Δ = T1 + T2` where `T1` is a single second-order derivative
/// with a monomial-wise inverse: the ingredients of the triangular solver.
#[derive(Debug, Clone)]
pub struct FlagSolverConfig {
    pub t1: WeylOperator,
    pub t1_inverse: MonomialInverse,
    pub t2: WeylOperator,
}

/// Build the solver splitting for the realizations whose lowering operator
/// contains a pure second-order derivative: the even orthogonal ring with
/// the top pair unswapped, the odd orthogonal ring, and the two-family ring
/// with the top index unswapped.
pub fn flag_solver_config(ctx: &RepresentationContext) -> Result<FlagSolverConfig> {
    use crate::lie::AlgebraFamily;
    use crate::rep::VariableModel;
    let delta = ctx.delta_operator()?;
    let arity = ctx.ring_arity();
    let n = ctx.spec().n;
    let (t1, inverse) = match (ctx.model(), ctx.spec().family) {
        (VariableModel::Single, AlgebraFamily::SoEven) => {
            if ctx.is_swapped_var(n) || ctx.is_swapped_var(2 * n) {
                return Err(Error::BadSolverConfig(
                    "the top variable pair must be unswapped".to_string(),
                ));
            }
            let t1 = WeylOperator::term(
                ExpVec::zero(arity),
                ExpVec::unit(arity, n).add(&ExpVec::unit(arity, 2 * n)),
                rat_int(1),
            );
            (t1, MonomialInverse::PairInverse { a: n, b: 2 * n })
        }
        (VariableModel::Single, AlgebraFamily::SoOdd) => {
            let square = ExpVec::unit(arity, 1).add(&ExpVec::unit(arity, 1));
            let t1 = WeylOperator::term(ExpVec::zero(arity), square, rat_int(1));
            (t1, MonomialInverse::SquareInverse { var: 1 })
        }
        (VariableModel::Double, _) => {
            if ctx.is_swapped_var(n) {
                return Err(Error::BadSolverConfig(
                    "the top x-index must be unswapped".to_string(),
                ));
            }
            let t1 = WeylOperator::term(
                ExpVec::zero(arity),
                ExpVec::unit(arity, n).add(&ExpVec::unit(arity, 2 * n)),
                rat_int(1),
            );
            (t1, MonomialInverse::PairInverse { a: n, b: 2 * n })
        }
        _ => {
            return Err(Error::BadSolverConfig(format!(
                "no second-order derivative term in the lowering operator of {}",
                ctx.describe()
            )))
        }
    };
    let t2 = &delta - &t1;
    Ok(FlagSolverConfig { t1, t1_inverse: inverse, t2 })
}

/// Split a base monomial into the factor on the inverse's variables and the
/// complementary factor.
pub fn split_base_monomial(
    cfg: &FlagSolverConfig,
    alpha: &ExpVec,
) -> (Polynomial, Polynomial) {
    let arity = alpha.arity();
    let special = cfg.t1_inverse.variables();
    let mut h = ExpVec::zero(arity);
    let mut g = ExpVec::zero(arity);
    for (v, &e) in alpha.0.iter().enumerate() {
        if special.contains(&(v + 1)) {
            h.0[v] = e;
        } else {
            g.0[v] = e;
        }
    }
    (
        Polynomial::monomial(h, rat_int(1)),
        Polynomial::monomial(g, rat_int(1)),
    )
}

/// The triangular series `f = Σ_i (−T1⁻ T2)^i (h·g)`: the unique element of
/// `ker(T1 + T2)` with base term `h·g` modulo the image of `T1⁻`. Requires
/// `T1(h·g) = 0` and `g` free of the inverse's variables.
pub fn xu_solve(
    cfg: &FlagSolverConfig,
    h: &Polynomial,
    g: &Polynomial,
    degree_cap: u32,
) -> Result<Polynomial> {
    if !cfg.t1.apply(&(h * g)).is_zero() {
        return Err(Error::BadSolverConfig(
            "base term is not annihilated by the second-order part".to_string(),
        ));
    }
    for (alpha, _) in g.terms() {
        for v in cfg.t1_inverse.variables() {
            if alpha.0[v - 1] != 0 {
                return Err(Error::BadSolverConfig(format!(
                    "complementary factor touches variable {v}"
                )));
            }
        }
    }
    let mut term = h * g;
    let mut f = term.clone();
    loop {
        term = cfg.t1_inverse.apply(&cfg.t2.apply(&term)).neg();
        if term.is_zero() {
            return Ok(f);
        }
        if term.total_degree() > degree_cap {
            return Err(Error::NonTermination { cap: degree_cap as usize });
        }
        f = &f + &term;
    }
}

/// Degree-bucketed spans of homogeneous polynomials, used to saturate orbits
/// under degree-homogeneous operators. When the orbit is known to stay in one
/// grade, bucket coordinates can be restricted to that grade's slice, which
/// keeps the ambient dimensions small.
#[derive(Debug)]
pub struct DegreeBuckets {
    arity: usize,
    max_degree: u32,
    grade: Option<(Vec<i64>, i64)>,
    bases: BTreeMap<u32, SliceBasis>,
    spans: BTreeMap<u32, Subspace>,
}

impl DegreeBuckets {
    pub fn new(arity: usize, max_degree: u32) -> Self {
        DegreeBuckets {
            arity,
            max_degree,
            grade: None,
            bases: BTreeMap::new(),
            spans: BTreeMap::new(),
        }
    }

    /// Buckets whose coordinates live in the fixed-grade slice of each degree.
    pub fn new_graded(arity: usize, max_degree: u32, signs: Vec<i64>, grade: i64) -> Self {
        DegreeBuckets {
            arity,
            max_degree,
            grade: Some((signs, grade)),
            bases: BTreeMap::new(),
            spans: BTreeMap::new(),
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Degrees whose bucket currently holds a nonzero span.
    pub fn degrees(&self) -> Vec<u32> {
        self.spans
            .iter()
            .filter(|(_, s)| s.dim() > 0)
            .map(|(&d, _)| d)
            .collect()
    }

    pub fn bucket(&self, degree: u32) -> Option<&Subspace> {
        self.spans.get(&degree)
    }

    fn coords(&mut self, p: &Polynomial) -> Result<(u32, Vec<Rational>)> {
        let d = p.total_degree();
        if p.terms().any(|(a, _)| a.total_degree() != d) {
            return Err(Error::Unsupported(
                "degree buckets need degree-homogeneous polynomials".to_string(),
            ));
        }
        let arity = self.arity;
        if !self.bases.contains_key(&d) {
            let mut spec = SliceSpec::degree_exactly(arity, i64::from(d));
            if let Some((signs, grade)) = &self.grade {
                spec = spec.push(crate::slices::LinearConstraint::eq(signs.clone(), *grade));
            }
            let basis = spec.enumerate(usize::MAX)?;
            self.spans.insert(d, Subspace::new(basis.dim()));
            self.bases.insert(d, basis);
        }
        let v = self.bases[&d].to_vec(p)?;
        Ok((d, v))
    }

    /// Add a degree-homogeneous polynomial; `Ok(true)` if it enlarged the
    /// span of its bucket.
    pub fn insert(&mut self, p: &Polynomial) -> Result<bool> {
        if p.is_zero() {
            return Ok(false);
        }
        let (d, v) = self.coords(p)?;
        Ok(self.spans.get_mut(&d).unwrap().insert(v))
    }

    pub fn contains(&mut self, p: &Polynomial) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        if i64::from(p.total_degree()) > i64::from(self.max_degree) {
            return Err(Error::Unsupported(format!(
                "degree {} beyond the saturated bound {}",
                p.total_degree(),
                self.max_degree
            )));
        }
        let (d, v) = self.coords(p)?;
        Ok(self.spans[&d].contains(&v))
    }

    pub fn bucket_dim(&self, degree: u32) -> usize {
        self.spans.get(&degree).map(|s| s.dim()).unwrap_or(0)
    }
}

/// Saturate the span of a seed under repeated application of operators,
/// truncated at `max_degree`. Every generator term must be non-lowering in
/// degree, so nothing below the bound is ever produced from above it and the
/// truncation is exhaustive there. Images are split into their homogeneous
/// components before bucketing.
pub fn orbit_span(
    seed: &Polynomial,
    generators: &[WeylOperator],
    max_degree: u32,
) -> Result<DegreeBuckets> {
    let buckets = DegreeBuckets::new(seed.arity(), max_degree);
    saturate(buckets, seed, generators)
}

/// [`orbit_span`] with bucket coordinates restricted to one grade slice; use
/// when every generator preserves the seed's grade.
pub fn orbit_span_graded(
    seed: &Polynomial,
    generators: &[WeylOperator],
    max_degree: u32,
    signs: &[i64],
    grade: i64,
) -> Result<DegreeBuckets> {
    let buckets = DegreeBuckets::new_graded(seed.arity(), max_degree, signs.to_vec(), grade);
    saturate(buckets, seed, generators)
}

fn saturate(
    mut buckets: DegreeBuckets,
    seed: &Polynomial,
    generators: &[WeylOperator],
) -> Result<DegreeBuckets> {
    for g in generators {
        let lowers = g
            .terms()
            .any(|((m, d), _)| (m.total_degree() as i64) < d.total_degree() as i64);
        if lowers {
            return Err(Error::Unsupported(
                "orbit truncation needs non-lowering generators".to_string(),
            ));
        }
    }
    let arity = seed.arity();
    let max_degree = buckets.max_degree();
    let ones = vec![1i64; arity];
    let mut frontier = Vec::new();
    for (_, part) in seed.grade_split(&ones) {
        if part.total_degree() <= max_degree && buckets.insert(&part)? {
            frontier.push(part);
        }
    }
    while let Some(p) = frontier.pop() {
        for g in generators {
            for (_, part) in g.apply(&p).grade_split(&ones) {
                if part.total_degree() > max_degree {
                    continue;
                }
                if buckets.insert(&part)? {
                    frontier.push(part);
                }
            }
        }
    }
    Ok(buckets)
}

/// The closed-form expression of an arbitrary monomial as a scaled operator
/// word applied to a power of the first variable, on the symplectic 4-ring
/// with swap set `{1,3}`. Checks one exponent tuple; tuples whose implied
/// power is negative are outside the identity's range and rejected as
/// arguments.
pub fn power_word_identity(ctx: &RepresentationContext, exps: &ExpVec) -> Result<bool> {
    let [k1, k2, k3, k4] = [exps.0[0], exps.0[1], exps.0[2], exps.0[3]];
    let k = i64::from(k1) + i64::from(k3) - i64::from(k2) - i64::from(k4);
    if k < 0 {
        return Err(Error::Unsupported(
            "tuple outside the identity's range (negative seed power)".to_string(),
        ));
    }
    let e = |i, j| crate::lie::LieElement::unit(4, i, j);
    let lower = ctx.rho(&(&e(2, 1) - &e(3, 4)))?;
    let raise_13 = ctx.rho(&e(1, 3))?;
    let raise_42 = ctx.rho(&e(4, 2))?;

    let mut value = Polynomial::monomial(ExpVec::unit(4, 1).scaled(k as u32), rat_int(1));
    for _ in 0..k2 + k4 {
        value = lower.apply(&value);
    }
    for _ in 0..k3 {
        value = raise_13.apply(&value);
    }
    for _ in 0..k4 {
        value = raise_42.apply(&value);
    }

    let mut coeff = Rational::from(
        crate::rational::factorial(k1) * crate::rational::factorial(k2),
    ) / Rational::from(
        crate::rational::factorial(k1 + k3) * crate::rational::factorial(k2 + k4),
    );
    if (k2 + k3 + k4) % 2 == 1 {
        coeff = -coeff;
    }
    let expect = Polynomial::monomial(exps.clone(), rat_int(1));
    Ok(value.scale(&coeff) == expect)
}

/// The commutator of the lowering and raising operators on the odd
/// orthogonal ring with the whole block swapped equals the claimed
/// first-order operator.
pub fn lowering_raising_commutator_matches(ctx: &RepresentationContext) -> Result<bool> {
    let n = ctx.spec().n;
    let arity = ctx.ring_arity();
    let delta = ctx.delta_operator()?;
    let eta = ctx.eta_operator()?;
    let lhs = delta.commutator(&eta);

    let mut rhs = WeylOperator::term(
        ExpVec::unit(arity, 1),
        ExpVec::unit(arity, 1),
        rat_int(4),
    );
    for i in 1..=n {
        rhs = &rhs
            + &WeylOperator::term(
                ExpVec::unit(arity, n + i + 1),
                ExpVec::unit(arity, n + i + 1),
                rat_int(4),
            );
        rhs = &rhs
            + &WeylOperator::term(
                ExpVec::unit(arity, i + 1),
                ExpVec::unit(arity, i + 1),
                rat_int(-4),
            );
    }
    rhs = &rhs + &WeylOperator::constant(arity, rat_int(2));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{family_f3_23, family_f4_2, family_f5_4};
    use crate::lie::AlgebraSpec;
    use crate::poly::VarNames;

    #[test]
    fn slice_splitting_on_the_fully_swapped_even_ring() {
        // grade 0, degree 2: kernel of η plus image of Δ from grade 2
        let ctx = RepresentationContext::single(AlgebraSpec::parse("so:4").unwrap(), [1, 2])
            .unwrap();
        let eta = ctx.eta_operator().unwrap();
        let delta = ctx.delta_operator().unwrap();
        let domain = SliceSpec::a_grade_degree(&ctx, 0, 2).enumerate(10_000).unwrap();
        let up = SliceSpec::a_grade_degree(&ctx, 2, 2).enumerate(10_000).unwrap();
        let report = slice_splits(&eta, &delta, &domain, &up, &up).unwrap();
        assert!(report.pass(), "{}", report.summary());

        let mut params = BTreeMap::new();
        params.insert("k".to_string(), "0".to_string());
        params.insert("d".to_string(), "2".to_string());
        let json = report.to_json("so_even_case1", &params);
        for key in ["case", "params", "dims", "slice", "kernel", "image", "intersection", "verdict"]
        {
            assert!(json.contains(&format!("\"{key}\"")), "missing {key}");
        }
        let failing = SplitReport {
            slice_dim: 4,
            kernel_dim: 2,
            image_rank: 2,
            intersection_dim: 1,
        };
        assert!(failing.to_json("so_even_case1", &params).contains("witness"));
    }

    #[test]
    fn triangular_solver_reproduces_closed_forms() {
        // even orthogonal ring, top pair unswapped
        let ctx = RepresentationContext::single(AlgebraSpec::parse("so:6").unwrap(), [1, 2])
            .unwrap();
        let cfg = flag_solver_config(&ctx).unwrap();
        let delta = ctx.delta_operator().unwrap();
        for m in 0..=4i64 {
            for k in [-1i64, 0, 1] {
                let members = family_f3_23(&ctx, k, m, 100_000).unwrap();
                let slice = SliceSpec::a_grade_mu(&ctx, k, m).unwrap().enumerate(100_000).unwrap();
                let mut idx = 0;
                for alpha in slice.monomials() {
                    if alpha.0[2] != 0 && alpha.0[5] != 0 {
                        continue;
                    }
                    let (h, g) = split_base_monomial(&cfg, alpha);
                    let f = xu_solve(&cfg, &h, &g, 40).unwrap();
                    assert!(delta.apply(&f).is_zero());
                    assert_eq!(f, members[idx], "base {:?}", alpha.0);
                    idx += 1;
                }
                assert_eq!(idx, members.len());
            }
        }
    }

    #[test]
    fn triangular_solver_on_the_odd_ring() {
        let ctx = RepresentationContext::single(AlgebraSpec::parse("so:5").unwrap(), [2, 3])
            .unwrap();
        let cfg = flag_solver_config(&ctx).unwrap();
        let delta = ctx.delta_operator().unwrap();
        for m in 0..=3i64 {
            for k in [0i64, 1, 2] {
                let members = family_f4_2(&ctx, k, m, 100_000).unwrap();
                let slice = SliceSpec::a_grade_mu(&ctx, k, m).unwrap().enumerate(100_000).unwrap();
                let mut idx = 0;
                for alpha in slice.monomials() {
                    if alpha.0[0] > 1 {
                        continue;
                    }
                    let (h, g) = split_base_monomial(&cfg, alpha);
                    let f = xu_solve(&cfg, &h, &g, 40).unwrap();
                    assert!(delta.apply(&f).is_zero());
                    assert_eq!(f, members[idx], "base {:?}", alpha.0);
                    idx += 1;
                }
                assert_eq!(idx, members.len());
            }
        }
    }

    #[test]
    fn triangular_solver_on_the_two_family_ring() {
        let ctx = RepresentationContext::double(AlgebraSpec::parse("sl:3").unwrap(), [1, 2])
            .unwrap();
        let cfg = flag_solver_config(&ctx).unwrap();
        let delta = ctx.delta_operator().unwrap();
        for m in 0..=3i64 {
            let members = family_f5_4(&ctx, -1, 1, m, 100_000).unwrap();
            let slice = SliceSpec::b_slice_mu(&ctx, -1, 1, m)
                .unwrap()
                .enumerate(100_000)
                .unwrap();
            let mut idx = 0;
            for alpha in slice.monomials() {
                if alpha.0[2] != 0 && alpha.0[5] != 0 {
                    continue;
                }
                let (h, g) = split_base_monomial(&cfg, alpha);
                let f = xu_solve(&cfg, &h, &g, 40).unwrap();
                assert!(delta.apply(&f).is_zero());
                assert_eq!(f, members[idx], "base {:?}", alpha.0);
                idx += 1;
            }
            assert_eq!(idx, members.len());
        }
    }

    #[test]
    fn solver_rejects_bad_bases() {
        let ctx = RepresentationContext::single(AlgebraSpec::parse("so:6").unwrap(), [1, 2])
            .unwrap();
        let cfg = flag_solver_config(&ctx).unwrap();
        let names = VarNames::x_only(6);
        // x3 x6 is killed by neither factor split
        let h = Polynomial::parse("x3*x6", names).unwrap();
        let g = Polynomial::one(6);
        assert!(matches!(
            xu_solve(&cfg, &h, &g, 40),
            Err(Error::BadSolverConfig(_))
        ));
        let h = Polynomial::one(6);
        let g = Polynomial::parse("x3", names).unwrap();
        assert!(matches!(
            xu_solve(&cfg, &h, &g, 40),
            Err(Error::BadSolverConfig(_))
        ));
    }

    #[test]
    fn orbit_buckets_grow_and_answer_membership() {
        let ctx = RepresentationContext::single(AlgebraSpec::parse("sp:4").unwrap(), [1, 2])
            .unwrap();
        let gens = ctx.negative_operators().unwrap();
        let mut buckets = orbit_span(&Polynomial::one(4), &gens, 6).unwrap();
        // the grade-zero even-cross family lies in the orbit of 1
        for d in [0i64, 2, 4, 6] {
            for p in crate::families::family_f2_17(2, d) {
                assert!(buckets.contains(&p).unwrap(), "{}", p.to_display(ctx.names()));
            }
        }
        // the odd-cross complement does not meet it
        let u = crate::singular::cross_term(2, 1, 2);
        assert!(!buckets.contains(&u).unwrap());
    }

    #[test]
    fn power_word_identity_small_tuples() {
        let ctx = RepresentationContext::single(AlgebraSpec::parse("sp:4").unwrap(), [1, 3])
            .unwrap();
        for tuple in [
            vec![0u32, 0, 0, 0],
            vec![0, 0, 1, 0],
            vec![1, 1, 1, 1],
            vec![2, 1, 0, 1],
            vec![3, 0, 1, 2],
        ] {
            let exps = ExpVec(tuple.clone());
            assert!(power_word_identity(&ctx, &exps).unwrap(), "{tuple:?}");
        }
        // negative implied power is out of range
        assert!(power_word_identity(&ctx, &ExpVec(vec![0, 1, 0, 0])).is_err());
    }

    #[test]
    fn commutator_identity_on_odd_rings() {
        for spec in ["so:5", "so:7"] {
            let spec = AlgebraSpec::parse(spec).unwrap();
            let n = spec.n;
            let ctx = RepresentationContext::single(spec, 2..=n + 1).unwrap();
            assert!(lowering_raising_commutator_matches(&ctx).unwrap());
        }
    }
}
