//! Finite-dimensional Lie algebras over the rationals given by structure
//! constants `[e_l, e_m] = Σ_n a_{lm}^n e_n`.
//!
//! A [`LieAlgebra`] is validated on construction (antisymmetry and the Jacobi
//! identity), so every other operation may assume it is a genuine Lie algebra.

mod sl;
mod subspace;

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{axpy, is_zero_vector, zero_vector, Matrix, Rational, Vector};

pub use sl::{sl, sl_from_matrix, sl_to_matrix};
pub use subspace::Subspace;

/// Dense table of structure constants, not yet validated.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StructureConstants {
    dim: usize,
    data: Vec<Rational>,
}

impl StructureConstants {
    pub fn zero(dim: usize) -> Self {
        StructureConstants { dim, data: vec![Rational::zero(); dim * dim * dim] }
    }

    fn idx(&self, l: usize, m: usize, n: usize) -> usize {
        (l * self.dim + m) * self.dim + n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, l: usize, m: usize, n: usize) -> &Rational {
        &self.data[self.idx(l, m, n)]
    }

    pub fn set(&mut self, l: usize, m: usize, n: usize, value: Rational) {
        let i = self.idx(l, m, n);
        self.data[i] = value;
    }

    /// Table holding exactly the listed entries; antisymmetric partners are
    /// *not* implied.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let mut t = StructureConstants::zero(dim);
        for (l, m, n, a) in entries {
            let worst = *l.max(m).max(n);
            if worst >= dim {
                return Err(Error::DimensionMismatch { expected: dim, got: worst + 1 });
            }
            t.set(*l, *m, *n, a.clone());
        }
        Ok(t)
    }

    /// Table from entries with `l < m` only; `a_{ml}^n = -a_{lm}^n` is implied.
    pub fn from_upper_entries(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let mut t = StructureConstants::zero(dim);
        for (l, m, n, a) in entries {
            let worst = *l.max(m).max(n);
            if worst >= dim {
                return Err(Error::DimensionMismatch { expected: dim, got: worst + 1 });
            }
            if l >= m {
                return Err(Error::Parse(format!(
                    "structure constant ({l}, {m}, {n}) must have l < m"
                )));
            }
            t.set(*l, *m, *n, a.clone());
            t.set(*m, *l, *n, -a);
        }
        Ok(t)
    }

    /// Entries with `l < m` that are nonzero, in index order.
    pub fn upper_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for l in 0..self.dim {
            for m in l + 1..self.dim {
                for n in 0..self.dim {
                    let a = self.get(l, m, n);
                    if !a.is_zero() {
                        out.push((l, m, n, a.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn check_antisymmetry(&self) -> Result<()> {
        for l in 0..self.dim {
            for m in l..self.dim {
                for n in 0..self.dim {
                    let a = self.get(l, m, n);
                    let b = self.get(m, l, n);
                    if (l == m && !a.is_zero()) || &(a + b) != &Rational::zero() {
                        return Err(Error::NotAntisymmetric { l, m, n });
                    }
                }
            }
        }
        Ok(())
    }

    fn bracket_basis(&self, l: usize, m: usize) -> &[Rational] {
        let start = self.idx(l, m, 0);
        &self.data[start..start + self.dim]
    }

    fn bracket_vec_basis(&self, x: &[Rational], m: usize) -> Vector {
        let mut out = zero_vector(self.dim);
        for (l, c) in x.iter().enumerate() {
            axpy(&mut out, c, self.bracket_basis(l, m));
        }
        out
    }

    /// First basis triple where the Jacobi identity fails, if any.
    /// Assumes antisymmetry, so only `l < m < n` is inspected.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim;
        for l in 0..d {
            for m in l + 1..d {
                for n in m + 1..d {
                    let mut j = self.bracket_vec_basis(self.bracket_basis(l, m), n);
                    let b = self.bracket_vec_basis(self.bracket_basis(m, n), l);
                    let c = self.bracket_vec_basis(self.bracket_basis(n, l), m);
                    for k in 0..d {
                        j[k] += &b[k];
                        j[k] += &c[k];
                    }
                    if !is_zero_vector(&j) {
                        return Some((l, m, n));
                    }
                }
            }
        }
        None
    }

    pub fn check_jacobi(&self) -> bool {
        self.jacobi_violation().is_none()
    }
}

/// Killing-form invariants, used as a necessary condition for isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KillingInvariants {
    pub dim: usize,
    pub det: Rational,
    /// (positive, negative, zero) counts of a diagonalized Killing form.
    pub inertia: (usize, usize, usize),
}

impl KillingInvariants {
    /// Same dimension and inertia, and determinants differing by a rational
    /// square (basis changes multiply the determinant by `det(P)^2`).
    pub fn compatible(&self, other: &KillingInvariants) -> bool {
        if self.dim != other.dim || self.inertia != other.inertia {
            return false;
        }
        if self.det.is_zero() || other.det.is_zero() {
            return self.det.is_zero() && other.det.is_zero();
        }
        is_rational_square(&(&self.det / &other.det))
    }
}

fn is_rational_square(x: &Rational) -> bool {
    if x.is_negative() {
        return false;
    }
    let is_sq = |n: &num_bigint::BigInt| {
        let r = n.sqrt();
        &(&r * &r) == n
    };
    is_sq(x.numer()) && is_sq(x.denom())
}

/// A Lie algebra over the rationals with a validated structure-constant table.
#[derive(Clone)]
pub struct LieAlgebra {
    constants: StructureConstants,
    labels: Vec<String>,
    killing: OnceLock<Matrix>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.constants == other.constants
    }
}

impl Eq for LieAlgebra {}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieAlgebra")
            .field("dim", &self.dim())
            .field("labels", &self.labels)
            .field("constants", &self.constants.upper_entries())
            .finish()
    }
}

impl LieAlgebra {
    /// Validates antisymmetry and the Jacobi identity.
    pub fn new(constants: StructureConstants, labels: Option<Vec<String>>) -> Result<Self> {
        let dim = constants.dim();
        if dim == 0 {
            return Err(Error::Parse("Lie algebra dimension must be positive".into()));
        }
        let labels = match labels {
            Some(ls) if ls.len() != dim => {
                return Err(Error::DimensionMismatch { expected: dim, got: ls.len() })
            }
            Some(ls) => ls,
            None => (0..dim).map(|k| format!("x{k}")).collect(),
        };
        constants.check_antisymmetry()?;
        if let Some((l, m, n)) = constants.jacobi_violation() {
            return Err(Error::JacobiViolation { l, m, n });
        }
        Ok(LieAlgebra { constants, labels, killing: OnceLock::new() })
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra::new(StructureConstants::zero(dim), None).expect("zero bracket is a Lie algebra")
    }

    pub fn dim(&self) -> usize {
        self.constants.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn constant(&self, l: usize, m: usize, n: usize) -> &Rational {
        self.constants.get(l, m, n)
    }

    /// Basis element `e_k` as a coordinate vector.
    pub fn basis_vector(&self, k: usize) -> Vector {
        crate::exactmath::unit_vector(self.dim(), k)
    }

    pub fn check_jacobi(&self) -> bool {
        self.constants.check_jacobi()
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: v.len() });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim());
        for (m, ym) in y.iter().enumerate() {
            if ym.is_zero() {
                continue;
            }
            for (l, xl) in x.iter().enumerate() {
                if xl.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xl * ym), self.constants.bracket_basis(l, m));
            }
        }
        out
    }

    /// Matrix of `ad(x) = [x, ·]` acting on coordinate columns.
    pub fn ad(&self, x: &[Rational]) -> Result<Matrix> {
        self.check_len(x)?;
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for j in 0..d {
            let col = self.constants.bracket_vec_basis(x, j);
            for (i, c) in col.into_iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        Ok(m)
    }

    /// `κ_{lm} = tr(ad e_l ∘ ad e_m) = Σ_{p,q} a_{lp}^q a_{mq}^p`.
    pub fn killing_matrix(&self) -> &Matrix {
        self.killing.get_or_init(|| {
            let d = self.dim();
            let mut k = Matrix::zeros(d, d);
            for l in 0..d {
                for m in l..d {
                    let mut s = Rational::zero();
                    for p in 0..d {
                        for qq in 0..d {
                            let a = self.constants.get(l, p, qq);
                            if a.is_zero() {
                                continue;
                            }
                            let b = self.constants.get(m, qq, p);
                            if !b.is_zero() {
                                s += a * b;
                            }
                        }
                    }
                    k[(l, m)] = s.clone();
                    k[(m, l)] = s;
                }
            }
            k
        })
    }

    pub fn killing(&self, x: &[Rational], y: &[Rational]) -> Rational {
        crate::exactmath::dot(x, &self.killing_matrix().mul_vec(y))
    }

    pub fn killing_det(&self) -> Rational {
        self.killing_matrix().det()
    }

    pub fn is_semisimple(&self) -> bool {
        !self.killing_det().is_zero()
    }

    pub(crate) fn require_semisimple(&self) -> Result<()> {
        if self.is_semisimple() {
            Ok(())
        } else {
            Err(Error::NotSemisimple)
        }
    }

    pub fn killing_invariants(&self) -> KillingInvariants {
        KillingInvariants {
            dim: self.dim(),
            det: self.killing_det(),
            inertia: self.killing_matrix().inertia(),
        }
    }

    /// Span of all brackets `[v, w]` with `v ∈ a`, `w ∈ b`.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::with_capacity(a.dim() * b.dim());
        for x in a.basis() {
            for y in b.basis() {
                let z = self.bracket_unchecked(x, y);
                if !is_zero_vector(&z) {
                    vs.push(z);
                }
            }
        }
        Subspace::span(self.dim(), &vs).expect("brackets live in the algebra")
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains(&self.bracket_span(s, s))
    }

    /// `{x : κ(x, v) = 0 for all v ∈ V}`.
    pub fn orthogonal_complement(&self, v: &Subspace) -> Result<Subspace> {
        self.require_semisimple()?;
        self.check_ambient(v)?;
        Ok(self.orthogonal_complement_unchecked(v))
    }

    pub(crate) fn orthogonal_complement_unchecked(&self, v: &Subspace) -> Subspace {
        let d = self.dim();
        if v.is_zero() {
            return Subspace::whole(d);
        }
        let rows: Vec<Vector> = v.basis().iter().map(|b| self.killing_matrix().mul_vec(b)).collect();
        let ns = Matrix::from_rows(&rows, d).nullspace();
        Subspace::span(d, &ns).expect("nullspace vectors have the ambient length")
    }

    fn check_ambient(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: s.ambient_dim() });
        }
        Ok(())
    }

    /// Kernel of `ad(v)`.
    pub fn centralizer(&self, v: &[Rational]) -> Result<Subspace> {
        let ns = self.ad(v)?.nullspace();
        Subspace::span(self.dim(), &ns)
    }

    /// `{x ∈ S : [x, S] = 0}` for a subalgebra `S`.
    pub fn center_of(&self, s: &Subspace) -> Result<Subspace> {
        self.check_ambient(s)?;
        if !self.is_subalgebra(s) {
            return Err(Error::NotSubalgebra);
        }
        let d = self.dim();
        let k = s.dim();
        if k == 0 {
            return Ok(Subspace::zero(d));
        }
        // Σ_i c_i [s_i, s_j] = 0 for every j: stack the d-dimensional blocks.
        let mut rows = Vec::with_capacity(k * d);
        let brackets: Vec<Vec<Vector>> = s
            .basis()
            .iter()
            .map(|si| s.basis().iter().map(|sj| self.bracket_unchecked(si, sj)).collect())
            .collect();
        for j in 0..k {
            for coord in 0..d {
                rows.push((0..k).map(|i| brackets[i][j][coord].clone()).collect());
            }
        }
        let coeffs = Matrix::from_rows(&rows, k).nullspace();
        let vs: Vec<Vector> = coeffs
            .iter()
            .map(|c| {
                let mut x = zero_vector(d);
                for (ci, si) in c.iter().zip(s.basis()) {
                    axpy(&mut x, ci, si);
                }
                x
            })
            .collect();
        Subspace::span(d, &vs)
    }

    /// Whether the linear map `f` (acting on coordinate columns) satisfies
    /// `f[x, y] = [fx, y] + [x, fy]` on all basis pairs.
    pub fn is_derivation(&self, f: &Matrix) -> bool {
        let d = self.dim();
        if f.nrows() != d || f.ncols() != d {
            return false;
        }
        let images: Vec<Vector> = (0..d).map(|k| f.column(k)).collect();
        for l in 0..d {
            for m in l + 1..d {
                let lhs = f.mul_vec(self.constants.bracket_basis(l, m));
                let mut rhs = self.constants.bracket_vec_basis(&images[l], m);
                let e_l = self.basis_vector(l);
                let second = self.bracket_unchecked(&e_l, &images[m]);
                for (a, b) in rhs.iter_mut().zip(second) {
                    *a += b;
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        // f[x, x] = 0 = [fx, x] + [x, fx] holds automatically by antisymmetry.
        true
    }

    /// The unique `v` with `ad(v) = f` for a derivation `f` of a semisimple
    /// algebra.
    pub fn solve_inner_derivation(&self, f: &Matrix) -> Result<Vector> {
        let d = self.dim();
        if f.nrows() != d || f.ncols() != d {
            return Err(Error::DimensionMismatch { expected: d, got: f.nrows() });
        }
        self.require_semisimple()?;
        if !self.is_derivation(f) {
            return Err(Error::NotADerivation);
        }
        // ad(v)[i][j] = Σ_l v_l a_{lj}^i
        let mut a = Matrix::zeros(d * d, d);
        let mut rhs = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                for l in 0..d {
                    a[(i * d + j, l)] = self.constants.get(l, j, i).clone();
                }
                rhs.push(f[(i, j)].clone());
            }
        }
        a.solve(&rhs)
            .ok_or_else(|| Error::Inconsistent("derivation is not inner".into()))
    }

    /// The same algebra written in the basis given by the columns of `basis`
    /// (an invertible matrix): `[b_l, b_m] = Σ_n c_{lm}^n b_n`.
    pub fn change_basis(&self, basis: &Matrix) -> Result<LieAlgebra> {
        let d = self.dim();
        if basis.nrows() != d || basis.ncols() != d {
            return Err(Error::DimensionMismatch { expected: d, got: basis.nrows() });
        }
        let inv = basis
            .inverse()
            .ok_or_else(|| Error::Inconsistent("basis change is singular".into()))?;
        let cols: Vec<Vector> = (0..d).map(|k| basis.column(k)).collect();
        let mut t = StructureConstants::zero(d);
        for l in 0..d {
            for m in l + 1..d {
                let coords = inv.mul_vec(&self.bracket_unchecked(&cols[l], &cols[m]));
                for (n, c) in coords.into_iter().enumerate() {
                    t.set(m, l, n, -&c);
                    t.set(l, m, n, c);
                }
            }
        }
        LieAlgebra::new(t, None)
    }

    /// Basis indices whose adjoint matrix is diagonal (toral basis elements
    /// with their eigenvalues on the basis).
    pub fn diagonal_basis_elements(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&k| {
                let ad = self.ad(&self.basis_vector(k)).expect("basis vector has the right length");
                (0..self.dim()).all(|i| (0..self.dim()).all(|j| i == j || ad[(i, j)].is_zero()))
            })
            .collect()
    }

    /// Basis indices whose adjoint matrix is nilpotent.
    pub fn nilpotent_basis_elements(&self) -> Vec<usize> {
        let d = self.dim();
        (0..d)
            .filter(|&k| {
                let ad = self.ad(&self.basis_vector(k)).expect("basis vector has the right length");
                let mut p = ad.clone();
                for _ in 1..d {
                    p = p.mul(&ad);
                }
                p.is_zero()
            })
            .collect()
    }

    /// `exp(ad x)` for an ad-nilpotent `x`; an automorphism of the algebra.
    pub fn exp_ad(&self, x: &[Rational]) -> Result<Matrix> {
        let d = self.dim();
        let ad = self.ad(x)?;
        let mut term = Matrix::identity(d);
        let mut acc = Matrix::identity(d);
        for k in 1..=d {
            term = ad.mul(&term).scale(&Rational::from(k as i64).recip());
            if term.is_zero() {
                return Ok(acc);
            }
            acc = Matrix::from_rows(
                &(0..d)
                    .map(|i| (0..d).map(|j| &acc[(i, j)] + &term[(i, j)]).collect())
                    .collect::<Vec<Vector>>(),
                d,
            );
        }
        Err(Error::Unsupported("exp(ad x) requires ad-nilpotent x".into()))
    }
}

/// On-disk form: `l < m` entries only, antisymmetric partners implied.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LieAlgebraFile {
    pub dim: usize,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub constants: Vec<(usize, usize, usize, Rational)>,
}

impl LieAlgebraFile {
    pub fn build(self) -> Result<LieAlgebra> {
        let t = StructureConstants::from_upper_entries(self.dim, &self.constants)?;
        LieAlgebra::new(t, self.labels)
    }
}

impl Serialize for LieAlgebra {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LieAlgebraFile {
            dim: self.dim(),
            labels: Some(self.labels.clone()),
            constants: self.constants.upper_entries(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LieAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        LieAlgebraFile::deserialize(deserializer)?.build().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::q;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Rational::from(x)).collect()
    }

    // basis (h, e, f)
    const H: [i64; 3] = [1, 0, 0];
    const E: [i64; 3] = [0, 1, 0];
    const F: [i64; 3] = [0, 0, 1];

    #[test]
    fn sl2_relations() {
        let g = sl(2).unwrap();
        assert_eq!(g.bracket(&v(&H), &v(&E)).unwrap(), v(&[0, 2, 0]));
        assert_eq!(g.bracket(&v(&E), &v(&F)).unwrap(), v(&H));
        assert_eq!(g.bracket(&v(&H), &v(&F)).unwrap(), v(&[0, 0, -2]));
        let x = v(&[3, -1, 5]);
        assert!(is_zero_vector(&g.bracket(&x, &x).unwrap()));
        assert!(g.bracket(&v(&[1, 0]), &x).is_err());
    }

    #[test]
    fn construction_rejects_missing_antisymmetric_partner() {
        let t = StructureConstants::from_entries(3, &[(0, 1, 2, Rational::one())]).unwrap();
        assert!(matches!(LieAlgebra::new(t, None), Err(Error::NotAntisymmetric { .. })));
    }

    #[test]
    fn construction_rejects_jacobi_failure() {
        // [e0,e1] = e1, [e1,e2] = e0, [e0,e2] = 0 violates Jacobi
        let t = StructureConstants::from_upper_entries(
            3,
            &[(0, 1, 1, Rational::one()), (1, 2, 0, Rational::one())],
        )
        .unwrap();
        assert!(!t.check_jacobi());
        assert!(matches!(LieAlgebra::new(t, None), Err(Error::JacobiViolation { .. })));
    }

    #[test]
    fn abelian_is_jacobi_valid_but_not_semisimple() {
        let a = LieAlgebra::abelian(3);
        assert!(a.check_jacobi());
        assert!(a.killing_matrix().is_zero());
        assert!(!a.is_semisimple());
        assert!(matches!(a.orthogonal_complement(&Subspace::zero(3)), Err(Error::NotSemisimple)));
    }

    #[test]
    fn orthogonal_complements_in_sl2() {
        let g = sl(2).unwrap();
        let e = Subspace::span(3, &[v(&E)]).unwrap();
        assert_eq!(g.orthogonal_complement(&e).unwrap(), Subspace::span(3, &[v(&E), v(&H)]).unwrap());
        assert!(g.orthogonal_complement(&Subspace::zero(3)).unwrap().is_whole());
        assert!(g.orthogonal_complement(&Subspace::whole(3)).unwrap().is_zero());
    }

    #[test]
    fn centralizer_and_center() {
        let g = sl(2).unwrap();
        assert_eq!(g.centralizer(&v(&H)).unwrap(), Subspace::span(3, &[v(&H)]).unwrap());
        assert!(g.centralizer(&v(&[0, 0, 0])).unwrap().is_whole());
        let borel = Subspace::span(3, &[v(&H), v(&E)]).unwrap();
        // [h, e] = 2e: neither h nor e commutes with the whole Borel
        assert!(g.center_of(&borel).unwrap().is_zero());
        assert_eq!(g.bracket_span(&borel, &borel), Subspace::span(3, &[v(&E)]).unwrap());
        let not_sub = Subspace::span(3, &[v(&E), v(&F)]).unwrap();
        assert_eq!(g.center_of(&not_sub), Err(Error::NotSubalgebra));
        let cartan = Subspace::span(3, &[v(&H)]).unwrap();
        assert_eq!(g.center_of(&cartan).unwrap(), cartan);
    }

    #[test]
    fn inner_derivations() {
        let g = sl(2).unwrap();
        let f = Matrix::from_ints(&[&[0, 0, 0], &[0, 2, 0], &[0, 0, -2]]);
        assert_eq!(g.solve_inner_derivation(&f).unwrap(), v(&H));
        assert_eq!(g.solve_inner_derivation(&Matrix::zeros(3, 3)).unwrap(), v(&[0, 0, 0]));
        // transpose map h ↦ h, e ↦ f, f ↦ e
        let t = Matrix::from_ints(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        assert!(!g.is_derivation(&t));
        assert_eq!(g.solve_inner_derivation(&t), Err(Error::NotADerivation));
    }

    #[test]
    fn killing_invariants_survive_basis_change() {
        let g = sl(2).unwrap();
        let p = Matrix::from_rows(
            &[v(&[1, 1, 0]), v(&[0, 2, 0]), vec![q(1, 3), Rational::zero(), Rational::one()]],
            3,
        );
        let g2 = g.change_basis(&p).unwrap();
        assert!(g2.is_semisimple());
        assert!(g.killing_invariants().compatible(&g2.killing_invariants()));
        assert!(!g.killing_invariants().compatible(&LieAlgebra::abelian(3).killing_invariants()));
    }

    #[test]
    fn exp_ad_is_an_automorphism() {
        let g = sl(2).unwrap();
        let phi = g.exp_ad(&v(&[0, 3, 0])).unwrap();
        for l in 0..3 {
            for m in 0..3 {
                let lhs = phi.mul_vec(&g.bracket(&g.basis_vector(l), &g.basis_vector(m)).unwrap());
                let rhs = g.bracket(&phi.column(l), &phi.column(m)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(g.nilpotent_basis_elements(), vec![1, 2]);
        assert_eq!(g.diagonal_basis_elements(), vec![0]);
    }
}
