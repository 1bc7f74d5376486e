//! Classical matrix Lie algebras: spanning sets, brackets, Cartan subalgebras,
//! positive root vectors, and coroots.
//!
//! Elements live inside `gl(N)` for the ambient size `N` of each family and
//! are stored sparsely as rational combinations of matrix units `E[i,j]`
//! (1-based). The odd orthogonal family is realized with its distinguished
//! first coordinate, so its matrix units act on indices `1..=2n+1` with the
//! paired block occupying `2..=2n+1`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::rational::{rat_int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraFamily {
    /// All of `gl(n)`.
    Gl,
    /// Traceless matrices `sl(n)`.
    Sl,
    /// Symplectic `sp(2n)`.
    Sp,
    /// Even orthogonal `so(2n)` in the split (off-diagonal form) realization.
    SoEven,
    /// Odd orthogonal `so(2n+1)`, split realization with first coordinate
    /// distinguished.
    SoOdd,
}

/// A concrete classical algebra: a family plus its integer parameter.
///
/// For `Gl`/`Sl` the parameter is the matrix size; for the other families it
/// is the block size `n` (ambient `2n` or `2n+1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    pub family: AlgebraFamily,
    pub n: usize,
}

impl AlgebraSpec {
    pub fn new(family: AlgebraFamily, n: usize) -> Result<Self> {
        let min = match family {
            AlgebraFamily::Gl | AlgebraFamily::Sl => 2,
            AlgebraFamily::Sp | AlgebraFamily::SoOdd => 1,
            AlgebraFamily::SoEven => 2,
        };
        if n < min {
            return Err(Error::InvalidAlgebra(format!(
                "{family:?} needs parameter at least {min}, got {n}"
            )));
        }
        Ok(AlgebraSpec { family, n })
    }

    /// Parse names like `sp:4`, `so:7`, `sl:3`, `gl:4`, where the number is
    /// the matrix size (so `sp:4` means `sp(4)`, i.e. `n = 2`).
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || {
            Error::InvalidAlgebra(format!(
                "cannot parse algebra `{text}` (expected one of gl:<m>, sl:<m>, sp:<2n>, so:<m>)"
            ))
        };
        let (name, size) = text.split_once(':').ok_or_else(bad)?;
        let size: usize = size.trim().parse().map_err(|_| bad())?;
        let (family, n) = match name.trim() {
            "gl" => (AlgebraFamily::Gl, size),
            "sl" => (AlgebraFamily::Sl, size),
            "sp" => {
                if size % 2 != 0 || size == 0 {
                    return Err(Error::InvalidAlgebra(format!(
                        "sp size must be even and positive, got {size}"
                    )));
                }
                (AlgebraFamily::Sp, size / 2)
            }
            "so" => {
                if size % 2 == 0 {
                    (AlgebraFamily::SoEven, size / 2)
                } else {
                    (AlgebraFamily::SoOdd, size / 2)
                }
            }
            _ => return Err(bad()),
        };
        AlgebraSpec::new(family, n)
    }

    /// Size of the ambient matrices.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            AlgebraFamily::Gl | AlgebraFamily::Sl => self.n,
            AlgebraFamily::Sp | AlgebraFamily::SoEven => 2 * self.n,
            AlgebraFamily::SoOdd => 2 * self.n + 1,
        }
    }

    /// Dimension of the algebra itself.
    pub fn dim(&self) -> usize {
        let n = self.n;
        match self.family {
            AlgebraFamily::Gl => n * n,
            AlgebraFamily::Sl => n * n - 1,
            AlgebraFamily::Sp => n * (2 * n + 1),
            AlgebraFamily::SoEven => n * (2 * n - 1),
            AlgebraFamily::SoOdd => n * (2 * n + 1),
        }
    }

    /// Rank of the Cartan subalgebra used for weights.
    pub fn rank(&self) -> usize {
        match self.family {
            AlgebraFamily::Gl => self.n,
            AlgebraFamily::Sl => self.n - 1,
            _ => self.n,
        }
    }

    pub fn display_name(&self) -> String {
        let (name, size) = match self.family {
            AlgebraFamily::Gl => ("gl", self.n),
            AlgebraFamily::Sl => ("sl", self.n),
            AlgebraFamily::Sp => ("sp", 2 * self.n),
            AlgebraFamily::SoEven => ("so", 2 * self.n),
            AlgebraFamily::SoOdd => ("so", 2 * self.n + 1),
        };
        format!("{name}({size})")
    }

    /// A spanning set (in fact a basis) of the algebra inside `gl(N)`.
    pub fn basis(&self) -> Vec<LieElement> {
        let n = self.n;
        let e = |i, j| LieElement::unit(self.ambient_dim(), i, j);
        let mut out = Vec::with_capacity(self.dim());
        match self.family {
            AlgebraFamily::Gl => {
                for i in 1..=n {
                    for j in 1..=n {
                        out.push(e(i, j));
                    }
                }
            }
            AlgebraFamily::Sl => {
                for i in 1..=n {
                    for j in 1..=n {
                        if i != j {
                            out.push(e(i, j));
                        }
                    }
                }
                for i in 1..n {
                    out.push(&e(i, i) - &e(i + 1, i + 1));
                }
            }
            AlgebraFamily::Sp => {
                for i in 1..=n {
                    for j in 1..=n {
                        out.push(&e(i, j) - &e(n + j, n + i));
                    }
                }
                for i in 1..=n {
                    for j in i..=n {
                        out.push(&e(n + i, j) + &e(n + j, i));
                    }
                }
                for i in 1..=n {
                    for j in i..=n {
                        out.push(&e(i, n + j) + &e(j, n + i));
                    }
                }
            }
            AlgebraFamily::SoEven => {
                for i in 1..=n {
                    for j in 1..=n {
                        out.push(&e(i, j) - &e(n + j, n + i));
                    }
                }
                for i in 1..=n {
                    for j in i + 1..=n {
                        out.push(&e(i, n + j) - &e(j, n + i));
                        out.push(&e(n + j, i) - &e(n + i, j));
                    }
                }
            }
            AlgebraFamily::SoOdd => {
                for i in 1..=n {
                    for j in 1..=n {
                        out.push(&e(i + 1, j + 1) - &e(n + j + 1, n + i + 1));
                    }
                }
                for i in 1..=n {
                    for j in i + 1..=n {
                        out.push(&e(i + 1, n + j + 1) - &e(j + 1, n + i + 1));
                        out.push(&e(n + j + 1, i + 1) - &e(n + i + 1, j + 1));
                    }
                }
                for i in 1..=n {
                    out.push(&e(i + 1, 1) - &e(1, n + i + 1));
                    out.push(&e(1, i + 1) - &e(n + i + 1, 1));
                }
            }
        }
        debug_assert_eq!(out.len(), self.dim());
        out
    }

    /// The diagonal elements `a_i` used to express weights: `E[i,i]` for the
    /// general linear families and `E[i,i] - E[n+i,n+i]` (shifted by one for
    /// the odd orthogonal realization) otherwise. One per `i = 1..=n`.
    pub fn diagonal_basis(&self) -> Vec<LieElement> {
        let e = |i, j| LieElement::unit(self.ambient_dim(), i, j);
        let n = self.n;
        match self.family {
            AlgebraFamily::Gl | AlgebraFamily::Sl => (1..=n).map(|i| e(i, i)).collect(),
            AlgebraFamily::Sp | AlgebraFamily::SoEven => {
                (1..=n).map(|i| &e(i, i) - &e(n + i, n + i)).collect()
            }
            AlgebraFamily::SoOdd => {
                (1..=n).map(|i| &e(i + 1, i + 1) - &e(n + i + 1, n + i + 1)).collect()
            }
        }
    }

    /// Positive root vectors (raising operators), one per positive root.
    pub fn positive_root_vectors(&self) -> Vec<LieElement> {
        let n = self.n;
        let e = |i, j| LieElement::unit(self.ambient_dim(), i, j);
        let mut out = Vec::new();
        match self.family {
            AlgebraFamily::Gl | AlgebraFamily::Sl => {
                for i in 1..=n {
                    for j in i + 1..=n {
                        out.push(e(i, j));
                    }
                }
            }
            AlgebraFamily::Sp => {
                for i in 1..=n {
                    for j in i + 1..=n {
                        out.push(&e(i, j) - &e(n + j, n + i));
                        out.push(&e(i, n + j) + &e(j, n + i));
                    }
                }
                for i in 1..=n {
                    out.push(e(i, n + i));
                }
            }
            AlgebraFamily::SoEven => {
                for i in 1..=n {
                    for j in i + 1..=n {
                        out.push(&e(i, j) - &e(n + j, n + i));
                        out.push(&e(i, n + j) - &e(j, n + i));
                    }
                }
            }
            AlgebraFamily::SoOdd => {
                for i in 1..=n {
                    for j in i + 1..=n {
                        out.push(&e(i + 1, j + 1) - &e(n + j + 1, n + i + 1));
                        out.push(&e(i + 1, n + j + 1) - &e(j + 1, n + i + 1));
                    }
                }
                for i in 1..=n {
                    out.push(&e(i + 1, 1) - &e(1, n + i + 1));
                }
            }
        }
        out
    }

    /// Negative root vectors: transposes of the positive ones.
    pub fn negative_root_vectors(&self) -> Vec<LieElement> {
        self.positive_root_vectors().iter().map(LieElement::transpose).collect()
    }

    /// Simple coroots `h_1..h_rank`, expressed in the ambient matrix algebra.
    /// Weight coordinates of a weight vector are its eigenvalues on these.
    pub fn coroots(&self) -> Vec<LieElement> {
        let n = self.n;
        let a = self.diagonal_basis();
        let mut out = Vec::with_capacity(self.rank());
        match self.family {
            AlgebraFamily::Gl => out.extend(a.iter().cloned()),
            AlgebraFamily::Sl => {
                for i in 0..n - 1 {
                    out.push(&a[i] - &a[i + 1]);
                }
            }
            AlgebraFamily::Sp => {
                for i in 0..n - 1 {
                    out.push(&a[i] - &a[i + 1]);
                }
                out.push(a[n - 1].clone());
            }
            AlgebraFamily::SoEven => {
                for i in 0..n - 1 {
                    out.push(&a[i] - &a[i + 1]);
                }
                out.push(&a[n - 2] + &a[n - 1]);
            }
            AlgebraFamily::SoOdd => {
                for i in 0..n - 1 {
                    out.push(&a[i] - &a[i + 1]);
                }
                out.push(a[n - 1].scale(&rat_int(2)));
            }
        }
        out
    }

    /// Membership test against the span of [`AlgebraSpec::basis`].
    pub fn contains(&self, g: &LieElement) -> bool {
        let dim = self.ambient_dim();
        if g.ambient != dim {
            return false;
        }
        let mut span = Subspace::new(dim * dim);
        for b in self.basis() {
            span.insert(b.flatten());
        }
        span.contains(&g.flatten())
    }
}

/// A sparse element of `gl(N)`: a rational combination of matrix units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieElement {
    ambient: usize,
    /// `(row, col) -> coefficient`, 1-based, zero coefficients pruned.
    entries: BTreeMap<(usize, usize), Rational>,
}

impl LieElement {
    pub fn zero(ambient: usize) -> Self {
        LieElement { ambient, entries: BTreeMap::new() }
    }

    /// The matrix unit `E[i,j]` (1-based).
    pub fn unit(ambient: usize, i: usize, j: usize) -> Self {
        assert!(i >= 1 && i <= ambient && j >= 1 && j <= ambient, "matrix unit out of range");
        let mut entries = BTreeMap::new();
        entries.insert((i, j), rat_int(1));
        LieElement { ambient, entries }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.entries.iter()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(|| rat_int(0))
    }

    fn add_entry(&mut self, key: (usize, usize), c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry(key).or_insert_with(|| rat_int(0));
        *slot += c;
        if slot.is_zero() {
            self.entries.remove(&key);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LieElement::zero(self.ambient);
        }
        let entries = self.entries.iter().map(|(k, v)| (*k, v.clone() * c.clone())).collect();
        LieElement { ambient: self.ambient, entries }
    }

    pub fn transpose(&self) -> Self {
        let entries = self.entries.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect();
        LieElement { ambient: self.ambient, entries }
    }

    /// Matrix product.
    pub fn matmul(&self, other: &LieElement) -> LieElement {
        assert_eq!(self.ambient, other.ambient, "ambient size mismatch");
        let mut out = LieElement::zero(self.ambient);
        for (&(i, j), a) in &self.entries {
            for (&(k, l), b) in &other.entries {
                if j == k {
                    out.add_entry((i, l), a.clone() * b.clone());
                }
            }
        }
        out
    }

    /// Commutator `[self, other] = self·other - other·self`.
    pub fn bracket(&self, other: &LieElement) -> LieElement {
        &self.matmul(other) - &other.matmul(self)
    }

    pub fn trace(&self) -> Rational {
        let mut t = rat_int(0);
        for (&(i, j), v) in &self.entries {
            if i == j {
                t += v.clone();
            }
        }
        t
    }

    /// Flatten to a dense coordinate vector of length `ambient^2`
    /// (row-major), for span arithmetic.
    pub fn flatten(&self) -> Vec<Rational> {
        let n = self.ambient;
        let mut v = vec![rat_int(0); n * n];
        for (&(i, j), c) in &self.entries {
            v[(i - 1) * n + (j - 1)] = c.clone();
        }
        v
    }
}

impl std::ops::Add for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        assert_eq!(self.ambient, rhs.ambient, "ambient size mismatch");
        let mut out = self.clone();
        for (&k, v) in &rhs.entries {
            out.add_entry(k, v.clone());
        }
        out
    }
}

impl std::ops::Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        assert_eq!(self.ambient, rhs.ambient, "ambient size mismatch");
        let mut out = self.clone();
        for (&k, v) in &rhs.entries {
            out.add_entry(k, -v.clone());
        }
        out
    }
}

impl std::ops::Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        self.scale(&rat_int(-1))
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.entries {
            let mag = c.abs();
            if first {
                if c < &rat_int(0) {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < &rat_int(0) {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "E[{i},{j}]")?;
        }
        Ok(())
    }
}

/// Weight coordinates: eigenvalues on the simple coroots, in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(pub Vec<Rational>);

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp4() -> AlgebraSpec {
        AlgebraSpec::parse("sp:4").unwrap()
    }

    #[test]
    fn parse_names() {
        assert_eq!(sp4(), AlgebraSpec { family: AlgebraFamily::Sp, n: 2 });
        assert_eq!(
            AlgebraSpec::parse("so:6").unwrap(),
            AlgebraSpec { family: AlgebraFamily::SoEven, n: 3 }
        );
        assert_eq!(
            AlgebraSpec::parse("so:5").unwrap(),
            AlgebraSpec { family: AlgebraFamily::SoOdd, n: 2 }
        );
        assert_eq!(
            AlgebraSpec::parse("sl:3").unwrap(),
            AlgebraSpec { family: AlgebraFamily::Sl, n: 3 }
        );
        assert_eq!(
            AlgebraSpec::parse("gl:4").unwrap(),
            AlgebraSpec { family: AlgebraFamily::Gl, n: 4 }
        );
        assert!(AlgebraSpec::parse("sp:5").is_err());
        assert!(AlgebraSpec::parse("su:3").is_err());
        assert!(AlgebraSpec::parse("sp4").is_err());
        assert!(AlgebraSpec::parse("so:2").is_err()); // needs n >= 2
    }

    #[test]
    fn display_names() {
        assert_eq!(sp4().display_name(), "sp(4)");
        assert_eq!(AlgebraSpec::parse("so:7").unwrap().display_name(), "so(7)");
    }

    #[test]
    fn dims_and_basis_sizes() {
        for name in ["sp:4", "sp:6", "so:6", "so:8", "so:5", "so:7", "sl:3", "gl:4"] {
            let g = AlgebraSpec::parse(name).unwrap();
            assert_eq!(g.basis().len(), g.dim(), "{name}");
        }
        assert_eq!(sp4().dim(), 10);
        assert_eq!(AlgebraSpec::parse("so:6").unwrap().dim(), 15);
        assert_eq!(AlgebraSpec::parse("so:5").unwrap().dim(), 10);
        assert_eq!(AlgebraSpec::parse("sl:3").unwrap().dim(), 8);
    }

    #[test]
    fn basis_is_linearly_independent() {
        for name in ["sp:4", "so:6", "so:5", "sl:3", "gl:3"] {
            let g = AlgebraSpec::parse(name).unwrap();
            let d = g.ambient_dim();
            let mut span = Subspace::new(d * d);
            for b in g.basis() {
                assert!(span.insert(b.flatten()), "dependent spanning vector in {name}");
            }
        }
    }

    #[test]
    fn closed_under_bracket() {
        for name in ["sp:4", "so:6", "so:5", "sl:3", "gl:3"] {
            let g = AlgebraSpec::parse(name).unwrap();
            let basis = g.basis();
            for a in &basis {
                for b in &basis {
                    assert!(g.contains(&a.bracket(b)), "bracket escapes {name}");
                }
            }
        }
    }

    #[test]
    fn bracket_of_matrix_units() {
        // [E12, E21] = E11 - E22 in gl(2)
        let e12 = LieElement::unit(2, 1, 2);
        let e21 = LieElement::unit(2, 2, 1);
        let expect = &LieElement::unit(2, 1, 1) - &LieElement::unit(2, 2, 2);
        assert_eq!(e12.bracket(&e21), expect);
        assert!(e12.bracket(&e12).is_zero());
    }

    #[test]
    fn jacobi_identity_on_symplectic_spanning_set() {
        let g = sp4();
        let basis = g.basis();
        for a in basis.iter().take(4) {
            for b in basis.iter().skip(3).take(4) {
                for c in basis.iter().skip(6) {
                    let lhs = a.bracket(&b.bracket(c));
                    let mid = b.bracket(&c.bracket(a));
                    let rhs = c.bracket(&a.bracket(b));
                    assert!((&(&lhs + &mid) + &rhs).is_zero());
                }
            }
        }
    }

    #[test]
    fn symplectic_positive_vectors_are_the_expected_four() {
        let g = sp4();
        let e = |i, j| LieElement::unit(4, i, j);
        let expect = vec![
            &e(1, 2) - &e(4, 3),
            &e(1, 4) + &e(2, 3),
            e(1, 3),
            e(2, 4),
        ];
        let got = g.positive_root_vectors();
        assert_eq!(got.len(), 4);
        for v in &expect {
            assert!(got.contains(v), "missing {v}");
        }
    }

    #[test]
    fn odd_orthogonal_positive_count() {
        // so(5) has four positive roots
        assert_eq!(AlgebraSpec::parse("so:5").unwrap().positive_root_vectors().len(), 4);
        // so(7) has nine
        assert_eq!(AlgebraSpec::parse("so:7").unwrap().positive_root_vectors().len(), 9);
    }

    #[test]
    fn negatives_are_transposes_and_stay_inside() {
        for name in ["sp:4", "so:6", "so:5", "sl:3"] {
            let g = AlgebraSpec::parse(name).unwrap();
            for v in g.negative_root_vectors() {
                assert!(g.contains(&v), "negative vector escapes {name}");
            }
        }
    }

    #[test]
    fn coroot_conventions() {
        let e = |d, i, j| LieElement::unit(d, i, j);
        // sp(4): h1 = a1 - a2, h2 = a2
        let h = sp4().coroots();
        let a1 = &e(4, 1, 1) - &e(4, 3, 3);
        let a2 = &e(4, 2, 2) - &e(4, 4, 4);
        assert_eq!(h, vec![&a1 - &a2, a2.clone()]);
        // so(4): h1 = a1 - a2, h2 = a1 + a2
        let h = AlgebraSpec::parse("so:4").unwrap().coroots();
        let b1 = &e(4, 1, 1) - &e(4, 3, 3);
        let b2 = &e(4, 2, 2) - &e(4, 4, 4);
        assert_eq!(h, vec![&b1 - &b2, &b1 + &b2]);
        // so(5): h1 = a1 - a2, h2 = 2 a2 (indices shifted by the leading slot)
        let h = AlgebraSpec::parse("so:5").unwrap().coroots();
        let c1 = &e(5, 2, 2) - &e(5, 4, 4);
        let c2 = &e(5, 3, 3) - &e(5, 5, 5);
        assert_eq!(h, vec![&c1 - &c2, c2.scale(&rat_int(2))]);
        // sl(3): h_i = E[i,i] - E[i+1,i+1]
        let h = AlgebraSpec::parse("sl:3").unwrap().coroots();
        assert_eq!(h.len(), 2);
        assert_eq!(h[0], &e(3, 1, 1) - &e(3, 2, 2));
    }

    #[test]
    fn coroots_act_diagonally_under_bracket_with_positives() {
        // [h, x] must be a rational multiple of x for each positive root
        // vector x and each coroot h.
        for name in ["sp:4", "so:6", "so:5", "sl:3", "gl:3"] {
            let g = AlgebraSpec::parse(name).unwrap();
            for h in g.coroots() {
                for x in g.positive_root_vectors() {
                    let br = h.bracket(&x);
                    // br = c * x for some scalar c: check proportionality
                    let mut span = Subspace::new(g.ambient_dim() * g.ambient_dim());
                    span.insert(x.flatten());
                    assert!(span.contains(&br.flatten()), "[h,x] not proportional to x in {name}");
                }
            }
        }
    }

    #[test]
    fn membership_rejects_outsiders() {
        let g = sp4();
        assert!(!g.contains(&LieElement::unit(4, 1, 2)));
        assert!(g.contains(&(&LieElement::unit(4, 1, 2) - &LieElement::unit(4, 4, 3))));
        let sl3 = AlgebraSpec::parse("sl:3").unwrap();
        assert!(!sl3.contains(&LieElement::unit(3, 1, 1)));
        assert!(sl3.contains(&(&LieElement::unit(3, 1, 1) - &LieElement::unit(3, 3, 3))));
    }

    #[test]
    fn trace_and_transpose() {
        let x = &LieElement::unit(3, 1, 1) - &LieElement::unit(3, 2, 2);
        assert!(x.trace().is_zero());
        assert_eq!(LieElement::unit(3, 1, 2).transpose(), LieElement::unit(3, 2, 1));
    }
}
