use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{Matrix, Rational, Vector};

/// A linear subspace of `Q^n`, stored by the rows of its reduced echelon
/// basis. Two subspaces are equal iff their echelon bases are identical.
/// Serialized as the list of echelon rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn whole(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|k| crate::exactmath::unit_vector(ambient_dim, k)).collect();
        Subspace { ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, got: bad.len() });
        }
        if vectors.is_empty() {
            return Ok(Subspace::zero(ambient_dim));
        }
        let (r, pivots) = Matrix::from_rows(vectors, ambient_dim).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace { ambient_dim, basis, pivots })
    }

    pub fn span_units(ambient_dim: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vector> = indices
            .iter()
            .map(|&k| crate::exactmath::unit_vector(ambient_dim, k))
            .collect();
        Subspace::span(ambient_dim, &vs).expect("unit vectors have the ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    /// Echelon basis rows.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after elimination against the echelon basis; zero
    /// exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for (a, b) in w.iter_mut().zip(row) {
                *a -= &c * b;
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient_dim && self.reduce(v).iter().all(Rational::is_zero)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.ambient_dim == self.ambient_dim && other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, &vs).expect("same ambient dimension")
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // x = Σ a_i u_i = Σ b_j w_j  ⇔  [U; -W]^T (a, b) = 0
        let n = self.ambient_dim;
        let k = self.dim();
        let mut cols: Vec<Vector> = self.basis.clone();
        cols.extend(other.basis.iter().map(|w| w.iter().map(|x| -x).collect::<Vector>()));
        if cols.is_empty() {
            return Subspace::zero(n);
        }
        let m = Matrix::from_columns(&cols, n);
        let vs: Vec<Vector> = m
            .nullspace()
            .into_iter()
            .map(|coef| {
                let mut x = crate::exactmath::zero_vector(n);
                for (c, u) in coef[..k].iter().zip(&self.basis) {
                    crate::exactmath::axpy(&mut x, c, u);
                }
                x
            })
            .collect();
        Subspace::span(n, &vs).expect("same ambient dimension")
    }

    /// Rows of this echelon basis whose pivots are not pivots of `inner`.
    /// When `inner ⊆ self` they span a complement of `inner` in `self`.
    pub fn echelon_complement(&self, inner: &Subspace) -> Vec<Vector> {
        self.basis
            .iter()
            .zip(&self.pivots)
            .filter(|(_, p)| !inner.pivots.contains(p))
            .map(|(row, _)| row.clone())
            .collect()
    }

    /// Rows spanning the linear functionals vanishing on the subspace.
    pub fn annihilator(&self) -> Vec<Vector> {
        if self.basis.is_empty() {
            return (0..self.ambient_dim)
                .map(|k| crate::exactmath::unit_vector(self.ambient_dim, k))
                .collect();
        }
        Matrix::from_rows(&self.basis, self.ambient_dim).nullspace()
    }
}

impl Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.basis.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vector> = Vec::deserialize(deserializer)?;
        let n = rows.first().map(Vec::len).ok_or_else(|| {
            serde::de::Error::custom("a subspace needs at least one row to fix its ambient dimension")
        })?;
        Subspace::span(n, &rows).map_err(serde::de::Error::custom)
    }
}
