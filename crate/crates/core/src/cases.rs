//! Registry of the named verification cases: one row per (algebra family,
//! swap pattern) configuration with published claims, each carrying the
//! catalog anchor id its checks correspond to.

use crate::error::{Error, Result};
use crate::lie::AlgebraSpec;
use crate::rep::{RepresentationContext, SwapPartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseInfo {
    pub id: &'static str,
    /// What the case configures and checks, in plain terms.
    pub description: &'static str,
    /// Catalog anchor the case's claims are filed under.
    pub anchor: &'static str,
}

pub const CASES: &[CaseInfo] = &[
    CaseInfo {
        id: "canonical",
        description: "gl(3) with nothing swapped, plus the cross-algebra bracket and bilinear-form sweeps",
        anchor: "Lemmas 2.1/2.2",
    },
    CaseInfo {
        id: "sp4_case1",
        description: "sp(4) on 4 variables with T={1}: one singular line per grade",
        anchor: "Lemmas 2.3-2.5",
    },
    CaseInfo {
        id: "sp4_case2",
        description: "sp(4) with T={1,2}: squared dimension counts and the two grade-zero families",
        anchor: "Lemma 2.6/2.7",
    },
    CaseInfo {
        id: "sp4_case3",
        description: "sp(4) with T={1,3}: no singular vectors; every monomial is an operator word on a power of x1",
        anchor: "Theorem 2.10 a), Eq. (2.12)",
    },
    CaseInfo {
        id: "sp_full_swap",
        description: "sp(2n) with T={1..n}: singular pairs per grade, orbit membership of both grade-zero families, and the parity split",
        anchor: "Lemma 2.9, Theorem 2.10 e)-f)",
    },
    CaseInfo {
        id: "sp_partial_swap",
        description: "sp(2n) with T={1..t}, t<n: pure-power singular vectors on the boundary variables",
        anchor: "Theorem 2.10 b)",
    },
    CaseInfo {
        id: "so_even_case1",
        description: "so(2n) with T={1..n}: degree-preserving lowering/raising pair and per-degree slice splittings",
        anchor: "Lemma 3.2, Theorem 3.3",
    },
    CaseInfo {
        id: "so_even_case2a",
        description: "so(2n) with T={1..n-1}: summed kernel bases rebuilt by the triangular solver",
        anchor: "Theorem 3.4, Eq. (3.23)",
    },
    CaseInfo {
        id: "so_even_case2b",
        description: "so(6) with T={1}: deeper partial swap with alternating-sign kernel bases",
        anchor: "Theorem 3.5, Eq. (3.25)",
    },
    CaseInfo {
        id: "so_odd_case1",
        description: "so(2n+1) with the whole block swapped: distinguished first variable, square-term solver, commutator identity",
        anchor: "Lemma 4.1, Theorem 4.2, Eq. (4.10)",
    },
    CaseInfo {
        id: "so_odd_case2",
        description: "so(5) with T={2}: partial swap of the shifted block",
        anchor: "Theorem 4.3",
    },
    CaseInfo {
        id: "sl_double_case1",
        description: "sl(n) on the two-family ring with T={1..n}: cross-term singular vectors and homogeneous slice splittings",
        anchor: "Lemma 5.1, Theorem 5.2",
    },
    CaseInfo {
        id: "sl_double_case2",
        description: "sl(n) on the two-family ring with T={1..n-1}: summed singular vectors and kernel bases",
        anchor: "Lemma 5.3, Theorem 5.4",
    },
    CaseInfo {
        id: "sl_double_case3",
        description: "sl(3) on the two-family ring with T={1}: deep partial swap",
        anchor: "Theorem 5.5",
    },
];

pub fn find_case(id: &str) -> Result<&'static CaseInfo> {
    CASES
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCase(id.to_string()))
}

/// The default context a case id verifies, for `n` where the case is
/// n-parametric (ignored by the fixed-size cases).
pub fn case_context(id: &str, n: usize) -> Result<RepresentationContext> {
    let single = |spec: &str, swap: &[usize]| -> Result<RepresentationContext> {
        let spec = AlgebraSpec::parse(spec)?;
        RepresentationContext::single(spec, swap.iter().copied())
    };
    let double = |nn: usize, swap: &[usize]| -> Result<RepresentationContext> {
        let spec = AlgebraSpec::parse(&format!("sl:{nn}"))?;
        RepresentationContext::double(spec, swap.iter().copied())
    };
    let block = |lo: usize, hi: usize| -> Vec<usize> { (lo..=hi).collect() };
    match id {
        "canonical" => single("gl:3", &[]),
        "sp4_case1" => single("sp:4", &[1]),
        "sp4_case2" => single("sp:4", &[1, 2]),
        "sp4_case3" => single("sp:4", &[1, 3]),
        "sp_full_swap" => single(&format!("sp:{}", 2 * n), &block(1, n)),
        "sp_partial_swap" => single(&format!("sp:{}", 2 * n), &block(1, n - 1)),
        "so_even_case1" => single(&format!("so:{}", 2 * n), &block(1, n)),
        "so_even_case2a" => single(&format!("so:{}", 2 * n), &block(1, n - 1)),
        "so_even_case2b" => single("so:6", &[1]),
        "so_odd_case1" => single(&format!("so:{}", 2 * n + 1), &block(2, n + 1)),
        "so_odd_case2" => single("so:5", &[2]),
        "sl_double_case1" => double(n, &block(1, n)),
        "sl_double_case2" => double(n, &block(1, n - 1)),
        "sl_double_case3" => double(3, &[1]),
        other => Err(Error::UnknownCase(other.to_string())),
    }
}

/// Find the registered case matching an explicit context, if any.
pub fn case_for_context(ctx: &RepresentationContext) -> Option<&'static CaseInfo> {
    for info in CASES {
        for n in 2..=4usize {
            if let Ok(reference) = case_context(info.id, n) {
                if reference.spec() == ctx.spec()
                    && reference.partition() == ctx.partition()
                    && reference.model() == ctx.model()
                {
                    return Some(info);
                }
            }
        }
    }
    None
}

/// The partition a case id uses at a given `n`, without building the context.
pub fn case_partition(id: &str, n: usize) -> Result<SwapPartition> {
    Ok(case_context(id, n)?.partition().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_well_formed() {
        assert_eq!(CASES.len(), 14);
        let mut ids: Vec<_> = CASES.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 14, "case ids must be unique");
        assert!(find_case("sp4_case2").is_ok());
        assert!(find_case("nope").is_err());
    }

    #[test]
    fn contexts_build_for_small_ranks() {
        for info in CASES {
            for n in 2..=3 {
                let ctx = case_context(info.id, n).unwrap();
                assert!(ctx.ring_arity() >= 3, "{}", info.id);
            }
        }
    }

    #[test]
    fn context_lookup_round_trips() {
        let ctx = case_context("sp4_case2", 2).unwrap();
        assert_eq!(case_for_context(&ctx).unwrap().id, "sp4_case2");
        let ctx = case_context("sl_double_case1", 3).unwrap();
        assert_eq!(case_for_context(&ctx).unwrap().id, "sl_double_case1");
    }
}
