//! Closed-form basis families for kernels and graded pieces of the swapped
//! actions.
//!
//! Three shapes appear:
//!
//! - **products** of pure powers and cross terms `u_ij`, subject to support
//!   constraints that keep the family independent (a cross term excludes
//!   later pure powers, and strictly nested cross-term pairs are excluded);
//! - **hybrid sums**: a symmetrized leading factor times cross-term products
//!   (the two grade-zero symplectic families, split by cross-term parity);
//! - **summed corrections** of a base monomial, one family member per
//!   admissible base, with the correction indexed by a multi-exponent `r`.
//!
//! Every constructor returns the members verbatim — base coefficient 1, no
//! normalization — so solver outputs can be compared against them exactly.

use crate::error::Result;
use crate::poly::{ExpVec, Polynomial};
use crate::rational::{binomial, factorial, rat_int, Rational};
use crate::rep::RepresentationContext;
use crate::singular::cross_term;
use crate::slices::{SliceBasis, SliceSpec};

/// Identifiers for the twelve families, used in reports and case wiring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    F2_17,
    F2_18,
    F3_12,
    F3_13,
    F3_23,
    F3_25,
    F4_2,
    F4_3,
    F5_1,
    F5_2,
    F5_4,
    F5_5,
}

impl FamilyId {
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyId::F2_17 => "F_2_17",
            FamilyId::F2_18 => "F_2_18",
            FamilyId::F3_12 => "F_3_12",
            FamilyId::F3_13 => "F_3_13",
            FamilyId::F3_23 => "F_3_23",
            FamilyId::F3_25 => "F_3_25",
            FamilyId::F4_2 => "F_4_2",
            FamilyId::F4_3 => "F_4_3",
            FamilyId::F5_1 => "F_5_1",
            FamilyId::F5_2 => "F_5_2",
            FamilyId::F5_4 => "F_5_4",
            FamilyId::F5_5 => "F_5_5",
        }
    }

    pub fn all() -> [FamilyId; 12] {
        [
            FamilyId::F2_17,
            FamilyId::F2_18,
            FamilyId::F3_12,
            FamilyId::F3_13,
            FamilyId::F3_23,
            FamilyId::F3_25,
            FamilyId::F4_2,
            FamilyId::F4_3,
            FamilyId::F5_1,
            FamilyId::F5_2,
            FamilyId::F5_4,
            FamilyId::F5_5,
        ]
    }
}

impl std::fmt::Display for FamilyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative terms.
pub(crate) fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Visit every multi-index `r` with `0 <= r[i] <= caps[i]`.
pub(crate) fn for_each_multi_index(caps: &[u32], f: &mut impl FnMut(&[u32])) {
    fn rec(caps: &[u32], current: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if current.len() == caps.len() {
            f(current);
            return;
        }
        for v in 0..=caps[current.len()] {
            current.push(v);
            rec(caps, current, f);
            current.pop();
        }
    }
    rec(caps, &mut Vec::new(), f);
}

/// Pairs `(i, j)` with `1 <= i < j <= n`, in lexicographic order.
fn index_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..=n {
            out.push((i, j));
        }
    }
    out
}

/// Support restrictions on product-family parameters: a used cross term
/// `u_ij` excludes pure powers with index beyond `j`, and two used cross
/// terms must not be strictly nested.
fn support_ok(pairs: &[(usize, usize)], pair_exps: &[u32], var_exps: &[u32]) -> bool {
    for (a, &(i, j)) in pairs.iter().enumerate() {
        if pair_exps[a] == 0 {
            continue;
        }
        if var_exps.iter().enumerate().any(|(t, &k)| t + 1 > j && k > 0) {
            return false;
        }
        for (b, &(i1, j1)) in pairs.iter().enumerate() {
            if pair_exps[b] > 0 && i < i1 && j1 < j {
                return false;
            }
        }
    }
    true
}

/// Product of cross terms `Π u_ij^{k_ij}` over the pair list.
fn cross_product(n: usize, pairs: &[(usize, usize)], pair_exps: &[u32]) -> Polynomial {
    let mut out = Polynomial::one(2 * n);
    for (a, &(i, j)) in pairs.iter().enumerate() {
        if pair_exps[a] > 0 {
            out = &out * &cross_term(n, i, j).pow(pair_exps[a]);
        }
    }
    out
}

/// Shared enumerator for the product families: pure powers drawn from
/// `var_offset + t`, `t = 1..n`, with `Σ k_t = power_sum` and
/// `Σ k_ij = cross_sum`.
fn product_family(
    n: usize,
    var_offset: usize,
    power_sum: u32,
    cross_sum: u32,
) -> Vec<Polynomial> {
    let arity = 2 * n;
    let pairs = index_pairs(n);
    let mut out = Vec::new();
    for pair_exps in compositions(cross_sum, pairs.len()) {
        for var_exps in compositions(power_sum, n) {
            if !support_ok(&pairs, &pair_exps, &var_exps) {
                continue;
            }
            let mut mono = ExpVec::zero(arity);
            for (t, &k) in var_exps.iter().enumerate() {
                mono = mono.add(&ExpVec::unit(arity, var_offset + t + 1).scaled(k));
            }
            let p = &Polynomial::monomial(mono, rat_int(1))
                * &cross_product(n, &pairs, &pair_exps);
            out.push(p);
        }
    }
    out
}

/// Raising-kernel products on the fully swapped even orthogonal ring:
/// grade `k >= 0`, total degree `d`.
pub fn family_f3_12(n: usize, k: i64, d: i64) -> Vec<Polynomial> {
    if k < 0 || d < k || (d - k) % 2 != 0 {
        return Vec::new();
    }
    product_family(n, n, k as u32, ((d - k) / 2) as u32)
}

/// Lowering-kernel products, mirror of [`family_f3_12`]: grade `k <= 0`.
pub fn family_f3_13(n: usize, k: i64, d: i64) -> Vec<Polynomial> {
    if k > 0 || d < -k || (d + k) % 2 != 0 {
        return Vec::new();
    }
    product_family(n, 0, (-k) as u32, ((d + k) / 2) as u32)
}

/// The symmetrized leading factor of the grade-zero symplectic families.
fn symplectic_leading(n: usize, var_exps: &[u32]) -> Polynomial {
    let arity = 2 * n;
    let half: u32 = var_exps.iter().sum::<u32>() / 2;
    let mut out = Polynomial::zero(arity);
    for r in compositions(half, n) {
        if r.iter().zip(var_exps).any(|(ri, k)| ri > k) {
            continue;
        }
        let mut coeff = Rational::from(factorial(half));
        let mut mono = ExpVec::zero(arity);
        for t in 0..n {
            coeff *= Rational::from(binomial(var_exps[t], r[t]));
            mono = mono
                .add(&ExpVec::unit(arity, t + 1).scaled(var_exps[t] - r[t]))
                .add(&ExpVec::unit(arity, n + t + 1).scaled(r[t]));
        }
        out.add_term(mono, coeff);
    }
    out
}

/// Grade-zero basis family of the fully swapped symplectic ring with an even
/// number of cross factors; total degree `d` (even).
pub fn family_f2_17(n: usize, d: i64) -> Vec<Polynomial> {
    symplectic_zero_grade(n, d, 0)
}

/// The odd-cross-factor complement of [`family_f2_17`].
pub fn family_f2_18(n: usize, d: i64) -> Vec<Polynomial> {
    symplectic_zero_grade(n, d, 1)
}

fn symplectic_zero_grade(n: usize, d: i64, cross_parity: u32) -> Vec<Polynomial> {
    let mut out = Vec::new();
    if d < 0 || d % 2 != 0 {
        return out;
    }
    let pairs = index_pairs(n);
    for cross_sum in 0..=(d / 2) as u32 {
        if cross_sum % 2 != cross_parity {
            continue;
        }
        let power_sum = d as u32 - 2 * cross_sum;
        // the leading factor needs an even power sum
        if power_sum % 2 != 0 {
            continue;
        }
        for pair_exps in compositions(cross_sum, pairs.len()) {
            for var_exps in compositions(power_sum, n) {
                if !support_ok(&pairs, &pair_exps, &var_exps) {
                    continue;
                }
                let p = &symplectic_leading(n, &var_exps)
                    * &cross_product(n, &pairs, &pair_exps);
                out.push(p);
            }
        }
    }
    out
}

/// Lowering-kernel products on the fully swapped two-family ring, slice
/// (`l1`, `l2`).
pub fn family_f5_1(n: usize, l1: i64, l2: i64) -> Vec<Polynomial> {
    if l2 < 0 || l1 + l2 > 0 {
        return Vec::new();
    }
    product_family(n, 0, (-l1 - l2) as u32, l2 as u32)
}

/// Raising-kernel products on the fully swapped two-family ring, slice
/// (`l1`, `l2`).
pub fn family_f5_2(n: usize, l1: i64, l2: i64) -> Vec<Polynomial> {
    if l1 > 0 || l1 + l2 < 0 {
        return Vec::new();
    }
    product_family(n, n, (l1 + l2) as u32, (-l1) as u32)
}

/// Enumerate the base monomials of a summed family: a graded slice filtered
/// by a support predicate.
fn filtered_bases(
    basis: &SliceBasis,
    keep: impl Fn(&ExpVec) -> bool,
) -> Vec<ExpVec> {
    basis.monomials().iter().filter(|m| keep(m)).cloned().collect()
}

/// Summed corrections on the even orthogonal ring with the last pair
/// unswapped (`T = {1..n-1}`): one member per base monomial in the
/// (grade `k`, grading `m`) slice with `α_n α_{2n} = 0`.
pub fn family_f3_23(
    ctx: &RepresentationContext,
    k: i64,
    m: i64,
    cap: usize,
) -> Result<Vec<Polynomial>> {
    let n = ctx.spec().n;
    let slice = SliceSpec::a_grade_mu(ctx, k, m)?.enumerate(cap)?;
    let bases = filtered_bases(&slice, |a| a.0[n - 1] == 0 || a.0[2 * n - 1] == 0);
    Ok(bases.into_iter().map(|a| f3_23_member(n, &a)).collect())
}

fn f3_23_member(n: usize, alpha: &ExpVec) -> Polynomial {
    let arity = 2 * n;
    let a_n = alpha.0[n - 1];
    let a_2n = alpha.0[2 * n - 1];
    let caps: Vec<u32> = (0..n - 1).map(|i| alpha.0[n + i]).collect();
    let mut out = Polynomial::zero(arity);
    for_each_multi_index(&caps, &mut |r| {
        let sum: u32 = r.iter().sum();
        let mut num = Rational::from(factorial(a_n) * factorial(a_2n) * factorial(sum));
        for (i, &ri) in r.iter().enumerate() {
            num *= Rational::from(binomial(alpha.0[n + i], ri));
        }
        let den = Rational::from(factorial(a_n + sum) * factorial(a_2n + sum));
        let mut exps = vec![0u32; arity];
        exps[n - 1] = a_n + sum;
        exps[2 * n - 1] = a_2n + sum;
        for i in 0..n - 1 {
            exps[i] = alpha.0[i] + r[i];
            exps[n + i] = alpha.0[n + i] - r[i];
        }
        out.add_term(ExpVec(exps), num / den);
    });
    out
}

/// Summed corrections on the even orthogonal ring with `T = {1..s}`,
/// `s < n-1`: unswapped pairs below the top also participate, with
/// alternating signs.
pub fn family_f3_25(
    ctx: &RepresentationContext,
    s: usize,
    k: i64,
    m: i64,
    cap: usize,
) -> Result<Vec<Polynomial>> {
    let n = ctx.spec().n;
    let slice = SliceSpec::a_grade_mu(ctx, k, m)?.enumerate(cap)?;
    let bases = filtered_bases(&slice, |a| a.0[n - 1] == 0 || a.0[2 * n - 1] == 0);
    Ok(bases.into_iter().map(|a| f3_25_member(n, s, &a)).collect())
}

fn f3_25_member(n: usize, s: usize, alpha: &ExpVec) -> Polynomial {
    let arity = 2 * n;
    let a_n = alpha.0[n - 1];
    let a_2n = alpha.0[2 * n - 1];
    // r_i ≤ α_{n+i} everywhere; the unswapped middle pairs also need r_j ≤ α_j
    let caps: Vec<u32> = (0..n - 1)
        .map(|i| {
            if i + 1 > s {
                alpha.0[n + i].min(alpha.0[i])
            } else {
                alpha.0[n + i]
            }
        })
        .collect();
    let mut out = Polynomial::zero(arity);
    for_each_multi_index(&caps, &mut |r| {
        let sum: u32 = r.iter().sum();
        let mut num = Rational::from(factorial(a_n) * factorial(a_2n) * factorial(sum));
        let mut middle_sum = 0u32;
        for (i, &ri) in r.iter().enumerate() {
            num *= Rational::from(binomial(alpha.0[n + i], ri));
            if i + 1 > s {
                num *= Rational::from(binomial(alpha.0[i], ri) * factorial(ri));
                middle_sum += ri;
            }
        }
        if middle_sum % 2 == 1 {
            num = -num;
        }
        let den = Rational::from(factorial(a_n + sum) * factorial(a_2n + sum));
        let mut exps = vec![0u32; arity];
        exps[n - 1] = a_n + sum;
        exps[2 * n - 1] = a_2n + sum;
        for i in 0..n - 1 {
            if i + 1 > s {
                exps[i] = alpha.0[i] - r[i];
            } else {
                exps[i] = alpha.0[i] + r[i];
            }
            exps[n + i] = alpha.0[n + i] - r[i];
        }
        out.add_term(ExpVec(exps), num / den);
    });
    out
}

/// Summed corrections on the odd orthogonal ring with the whole block
/// swapped (`T = {2..n+1}`): bases have distinguished exponent 0 or 1.
pub fn family_f4_2(
    ctx: &RepresentationContext,
    k: i64,
    m: i64,
    cap: usize,
) -> Result<Vec<Polynomial>> {
    let slice = SliceSpec::a_grade_mu(ctx, k, m)?.enumerate(cap)?;
    let bases = filtered_bases(&slice, |a| a.0[0] <= 1);
    let n = ctx.spec().n;
    Ok(bases.into_iter().map(|a| f4_23_member(n, n, &a)).collect())
}

/// Summed corrections on the odd orthogonal ring with `T = {2..s+1}`,
/// `s < n`.
pub fn family_f4_3(
    ctx: &RepresentationContext,
    s: usize,
    k: i64,
    m: i64,
    cap: usize,
) -> Result<Vec<Polynomial>> {
    let slice = SliceSpec::a_grade_mu(ctx, k, m)?.enumerate(cap)?;
    let bases = filtered_bases(&slice, |a| a.0[0] <= 1);
    let n = ctx.spec().n;
    Ok(bases.into_iter().map(|a| f4_23_member(n, s, &a)).collect())
}

/// Shared member shape for the odd orthogonal families; `s = n` gives the
/// fully swapped case (no unswapped pairs, no signs).
fn f4_23_member(n: usize, s: usize, alpha: &ExpVec) -> Polynomial {
    let arity = 2 * n + 1;
    let eps = alpha.0[0];
    // pair i (1-based) couples x_{i+1} and x_{n+i+1}
    let caps: Vec<u32> = (1..=n)
        .map(|i| {
            if i > s {
                alpha.0[n + i].min(alpha.0[i])
            } else {
                alpha.0[n + i]
            }
        })
        .collect();
    let mut out = Polynomial::zero(arity);
    for_each_multi_index(&caps, &mut |r| {
        let sum: u32 = r.iter().sum();
        let mut num = Rational::from(factorial(eps) * factorial(sum));
        num *= Rational::from(num_bigint::BigInt::from(2u32).pow(sum));
        let mut unswapped_sum = 0u32;
        for (idx, &ri) in r.iter().enumerate() {
            let i = idx + 1;
            num *= Rational::from(binomial(alpha.0[n + i], ri));
            if i > s {
                num *= Rational::from(binomial(alpha.0[i], ri) * factorial(ri));
                unswapped_sum += ri;
            }
        }
        if unswapped_sum % 2 == 1 {
            num = -num;
        }
        let den = Rational::from(factorial(eps + 2 * sum));
        let mut exps = vec![0u32; arity];
        exps[0] = eps + 2 * sum;
        for (idx, &ri) in r.iter().enumerate() {
            let i = idx + 1;
            if i > s {
                exps[i] = alpha.0[i] - ri;
            } else {
                exps[i] = alpha.0[i] + ri;
            }
            exps[n + i] = alpha.0[n + i] - ri;
        }
        out.add_term(ExpVec(exps), num / den);
    });
    out
}

/// Summed corrections on the two-family ring with `T = {1..n-1}`: one member
/// per base in the (`l1`, `l2`, grading `m`) slice with `α_n β_n = 0`.
pub fn family_f5_4(
    ctx: &RepresentationContext,
    l1: i64,
    l2: i64,
    m: i64,
    cap: usize,
) -> Result<Vec<Polynomial>> {
    let n = ctx.spec().n;
    let slice = SliceSpec::b_slice_mu(ctx, l1, l2, m)?.enumerate(cap)?;
    let bases = filtered_bases(&slice, |a| a.0[n - 1] == 0 || a.0[2 * n - 1] == 0);
    Ok(bases.into_iter().map(|a| f5_45_member(n, n - 1, &a)).collect())
}

/// Summed corrections on the two-family ring with `T = {1..s}`, `s < n-1`.
pub fn family_f5_5(
    ctx: &RepresentationContext,
    s: usize,
    l1: i64,
    l2: i64,
    m: i64,
    cap: usize,
) -> Result<Vec<Polynomial>> {
    let n = ctx.spec().n;
    let slice = SliceSpec::b_slice_mu(ctx, l1, l2, m)?.enumerate(cap)?;
    let bases = filtered_bases(&slice, |a| a.0[n - 1] == 0 || a.0[2 * n - 1] == 0);
    Ok(bases.into_iter().map(|a| f5_45_member(n, s, &a)).collect())
}

/// Shared member shape for the two-family summed families; `s = n-1` has no
/// unswapped middle variables and no signs.
fn f5_45_member(n: usize, s: usize, alpha: &ExpVec) -> Polynomial {
    let arity = 2 * n;
    let a_n = alpha.0[n - 1];
    let b_n = alpha.0[2 * n - 1];
    let caps: Vec<u32> = (0..n - 1)
        .map(|i| {
            if i + 1 > s {
                alpha.0[n + i].min(alpha.0[i])
            } else {
                alpha.0[n + i]
            }
        })
        .collect();
    let mut out = Polynomial::zero(arity);
    for_each_multi_index(&caps, &mut |r| {
        let sum: u32 = r.iter().sum();
        let mut num = Rational::from(factorial(a_n) * factorial(b_n) * factorial(sum));
        let mut middle_sum = 0u32;
        for (i, &ri) in r.iter().enumerate() {
            num *= Rational::from(binomial(alpha.0[n + i], ri));
            if i + 1 > s {
                num *= Rational::from(binomial(alpha.0[i], ri) * factorial(ri));
                middle_sum += ri;
            }
        }
        if middle_sum % 2 == 1 {
            num = -num;
        }
        let den = Rational::from(factorial(a_n + sum) * factorial(b_n + sum));
        let mut exps = vec![0u32; arity];
        exps[n - 1] = a_n + sum;
        exps[2 * n - 1] = b_n + sum;
        for i in 0..n - 1 {
            if i + 1 > s {
                exps[i] = alpha.0[i] - r[i];
            } else {
                exps[i] = alpha.0[i] + r[i];
            }
            exps[n + i] = alpha.0[n + i] - r[i];
        }
        out.add_term(ExpVec(exps), num / den);
    });
    out
}
