//! Weighted flags `0 ⊊ V_{λ_1} ⊊ … ⊊ V_{λ_{t+1}} = g` inside a Lie algebra,
//! with the balanced / algebra / orthogonal predicates, the μ-weight of a flag
//! (by subspace brackets, by structure constants in an adapted basis, and by
//! the associated Lie tensor), and the graded limit along a flag.
//!
//! Integer indexing follows `V_m = V_{λ_{i(m)}}` with `i(m)` the largest index
//! such that `λ_{i(m)} ≤ m`, and `V_m = 0` below `λ_1`.

mod limit;
mod random;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{Matrix, Rational, Vector};
use crate::liecore::{LieAlgebra, Subspace};

pub use limit::{graded_limit, graded_limit_with_basis, limit_isomorphism, IsomorphismVerdict};
pub use random::random_flag;

/// Strictly increasing integer weights attached to a strictly increasing chain
/// of subspaces ending with the whole space.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct WeightedFlag {
    weights: Vec<i64>,
    steps: Vec<Subspace>,
}

#[derive(Deserialize)]
struct RawFlag {
    weights: Vec<i64>,
    steps: Vec<Vec<Vector>>,
}

impl<'de> Deserialize<'de> for WeightedFlag {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawFlag::deserialize(deserializer)?;
        let n = raw
            .steps
            .last()
            .and_then(|s| s.first())
            .map(Vec::len)
            .ok_or_else(|| serde::de::Error::custom("flag needs a nonempty last step"))?;
        let steps = raw
            .steps
            .iter()
            .map(|rows| Subspace::span(n, rows))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        WeightedFlag::new(raw.weights, steps).map_err(serde::de::Error::custom)
    }
}

impl WeightedFlag {
    pub fn new(weights: Vec<i64>, steps: Vec<Subspace>) -> Result<Self> {
        if weights.is_empty() || weights.len() != steps.len() {
            return Err(Error::InvalidFlag(format!(
                "{} weights for {} steps",
                weights.len(),
                steps.len()
            )));
        }
        if weights.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidFlag("weights must be strictly increasing".into()));
        }
        let n = steps[0].ambient_dim();
        if let Some(s) = steps.iter().find(|s| s.ambient_dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: s.ambient_dim() });
        }
        if steps[0].is_zero() {
            return Err(Error::InvalidFlag("first step must be nonzero".into()));
        }
        for w in steps.windows(2) {
            if !(w[1].contains(&w[0]) && w[1].dim() > w[0].dim()) {
                return Err(Error::InvalidFlag("steps must be strictly nested".into()));
            }
        }
        if !steps.last().is_some_and(Subspace::is_whole) {
            return Err(Error::InvalidFlag("last step must be the whole space".into()));
        }
        Ok(WeightedFlag { weights, steps })
    }

    /// One step, the whole space, weight 0.
    pub fn trivial(dim: usize) -> Self {
        WeightedFlag { weights: vec![0], steps: vec![Subspace::whole(dim)] }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn steps(&self) -> &[Subspace] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.steps[0].ambient_dim()
    }

    pub fn is_trivial(&self) -> bool {
        self.steps.len() == 1
    }

    /// Dimensions of the graded pieces `V_{λ_i} / V_{λ_{i-1}}`.
    pub fn piece_dims(&self) -> Vec<usize> {
        let mut prev = 0;
        self.steps
            .iter()
            .map(|s| {
                let d = s.dim() - prev;
                prev = s.dim();
                d
            })
            .collect()
    }

    /// Index `i(m)` of the step realizing `V_m`, or `None` when `m < λ_1`.
    pub fn index_at(&self, m: i64) -> Option<usize> {
        self.weights.iter().rposition(|&w| w <= m)
    }

    /// `V_m` under the integer-indexing convention.
    pub fn step_at(&self, m: i64) -> Subspace {
        match self.index_at(m) {
            Some(i) => self.steps[i].clone(),
            None => Subspace::zero(self.ambient_dim()),
        }
    }

    /// Step `k` counting from 1, with step 0 the zero subspace.
    fn step_or_zero(&self, k: usize) -> Subspace {
        if k == 0 {
            Subspace::zero(self.ambient_dim())
        } else {
            self.steps[k - 1].clone()
        }
    }

    /// Same steps, weights multiplied by `a > 0`.
    pub fn scaled(&self, a: i64) -> Result<Self> {
        if a <= 0 {
            return Err(Error::InvalidFlag("scale factor must be positive".into()));
        }
        Ok(WeightedFlag { weights: self.weights.iter().map(|w| w * a).collect(), steps: self.steps.clone() })
    }

    /// Same steps, weights shifted by `c`.
    pub fn shifted(&self, c: i64) -> Self {
        WeightedFlag { weights: self.weights.iter().map(|w| w + c).collect(), steps: self.steps.clone() }
    }

    /// Transport through a linear map given by an invertible matrix acting on
    /// coordinate columns.
    pub fn transform(&self, map: &Matrix) -> Result<Self> {
        let steps = self
            .steps
            .iter()
            .map(|s| {
                let imgs: Vec<Vector> = s.basis().iter().map(|v| map.mul_vec(v)).collect();
                Subspace::span(self.ambient_dim(), &imgs)
            })
            .collect::<Result<Vec<_>>>()?;
        WeightedFlag::new(self.weights.clone(), steps)
    }
}

/// A choice of complements `V_{λ_i} = V_{λ_{i-1}} ⊕ piece_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSplitting {
    flag: WeightedFlag,
    pieces: Vec<Vec<Vector>>,
}

impl GradedSplitting {
    /// Validates that the pieces reconstruct every step as a direct sum.
    pub fn new(flag: &WeightedFlag, pieces: Vec<Vec<Vector>>) -> Result<Self> {
        if pieces.len() != flag.len() {
            return Err(Error::InvalidFlag("one piece per step required".into()));
        }
        let n = flag.ambient_dim();
        let mut acc: Vec<Vector> = Vec::new();
        for (k, piece) in pieces.iter().enumerate() {
            acc.extend(piece.iter().cloned());
            let span = Subspace::span(n, &acc)?;
            if span.dim() != acc.len() || span != flag.steps[k] {
                return Err(Error::InvalidFlag(format!("piece {k} is not a complement")));
            }
        }
        Ok(GradedSplitting { flag: flag.clone(), pieces })
    }

    /// Complements taken from echelon rows of each step whose pivots are new.
    pub fn echelon(flag: &WeightedFlag) -> Self {
        let mut pieces = Vec::with_capacity(flag.len());
        for k in 0..flag.len() {
            let inner = flag.step_or_zero(k);
            pieces.push(flag.steps[k].echelon_complement(&inner));
        }
        GradedSplitting { flag: flag.clone(), pieces }
    }

    pub fn flag(&self) -> &WeightedFlag {
        &self.flag
    }

    pub fn pieces(&self) -> &[Vec<Vector>] {
        &self.pieces
    }

    /// Basis adapted to the flag (columns, piece by piece) together with the
    /// weight of each basis vector.
    pub fn adapted_basis(&self) -> (Matrix, Vec<i64>) {
        let n = self.flag.ambient_dim();
        let mut cols = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for (piece, &w) in self.pieces.iter().zip(&self.flag.weights) {
            for v in piece {
                cols.push(v.clone());
                weights.push(w);
            }
        }
        (Matrix::from_columns(&cols, n), weights)
    }

    /// Adapted basis rescaled (last vector only) to determinant 1, so the
    /// associated one-parameter subgroup lies in `SL`.
    pub fn unimodular_basis(&self) -> (Matrix, Vec<i64>) {
        let (mut b, w) = self.adapted_basis();
        let n = b.ncols();
        let det = b.det();
        let inv = det.recip();
        for i in 0..n {
            let v = &b[(i, n - 1)] * &inv;
            b[(i, n - 1)] = v;
        }
        (b, w)
    }
}

fn check_flag(g: &LieAlgebra, flag: &WeightedFlag) -> Result<()> {
    if flag.ambient_dim() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), got: flag.ambient_dim() });
    }
    Ok(())
}

/// `Σ λ_i · dim(V_{λ_i} / V_{λ_{i-1}}) = 0`.
pub fn is_balanced(flag: &WeightedFlag) -> bool {
    flag.weights
        .iter()
        .zip(flag.piece_dims())
        .map(|(&w, d)| w * d as i64)
        .sum::<i64>()
        == 0
}

/// `[V_{λ_i}, V_{λ_j}] ⊆ V_{λ_i + λ_j}` for all `i, j`.
pub fn is_algebra_filtration(g: &LieAlgebra, flag: &WeightedFlag) -> Result<bool> {
    check_flag(g, flag)?;
    let t = flag.len();
    for i in 0..t {
        for j in i..t {
            let br = g.bracket_span(&flag.steps[i], &flag.steps[j]);
            if !flag.step_at(flag.weights[i] + flag.weights[j]).contains(&br) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `V_m^⊥ = V_{-m-1}` for every integer `m` (Killing orthogonal).
pub fn is_orthogonal_filtration(g: &LieAlgebra, flag: &WeightedFlag) -> Result<bool> {
    check_flag(g, flag)?;
    g.orthogonal_complement(&Subspace::zero(g.dim()))?;
    let lo = flag.weights[0].min(-flag.weights[flag.len() - 1]) - 1;
    let hi = flag.weights[flag.len() - 1].max(-flag.weights[0]) + 1;
    // V_m changes only at the weights, so checking each m in [lo, hi] suffices.
    for m in lo..=hi {
        let perp = g.orthogonal_complement_unchecked(&flag.step_at(m));
        if perp != flag.step_at(-m - 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `min { λ_i + λ_j − λ_k : [V_{λ_i}, V_{λ_j}] ⊄ V_{λ_{k−1}} }` over all
/// triples, with `V_{λ_0} = 0`.
pub fn mu_bracket(g: &LieAlgebra, flag: &WeightedFlag) -> Result<i64> {
    check_flag(g, flag)?;
    let t = flag.len();
    let lower: Vec<Subspace> = (0..t).map(|k| flag.step_or_zero(k)).collect();
    let mut best: Option<i64> = None;
    for i in 0..t {
        for j in 0..t {
            let br = g.bracket_span(&flag.steps[i], &flag.steps[j]);
            if br.is_zero() {
                continue;
            }
            for (k, below) in lower.iter().enumerate() {
                if !below.contains(&br) {
                    let w = flag.weights[i] + flag.weights[j] - flag.weights[k];
                    best = Some(best.map_or(w, |b| b.min(w)));
                }
            }
        }
    }
    best.ok_or(Error::MuUndefined)
}

/// The same weight read off the structure constants in an adapted basis:
/// `min { w_l + w_m − w_n : a_{lm}^n ≠ 0 }`.
pub fn mu_coordinate(g: &LieAlgebra, split: &GradedSplitting) -> Result<i64> {
    check_flag(g, split.flag())?;
    let (basis, w) = split.adapted_basis();
    let h = g.change_basis(&basis)?;
    coordinate_weight(&h, &w).ok_or(Error::MuUndefined)
}

pub(crate) fn coordinate_weight(h: &LieAlgebra, w: &[i64]) -> Option<i64> {
    let d = h.dim();
    let mut best: Option<i64> = None;
    for l in 0..d {
        for m in 0..d {
            for n in 0..d {
                if !h.constant(l, m, n).is_zero() {
                    let x = w[l] + w[m] - w[n];
                    best = Some(best.map_or(x, |b| b.min(x)));
                }
            }
        }
    }
    best
}

/// μ of the Lie tensor `φ(u, v, w_1 ∧ … ∧ w_{r−1}) = vol([u, v] ∧ w_1 ∧ … ∧ w_{r−1})`:
/// the least total weight of a nonvanishing evaluation on adapted basis
/// vectors, re-centred by the total weight `Σ λ_i dim(gr_i)` of the volume
/// form so it is comparable with [`mu_bracket`].
pub fn mu_tensor(g: &LieAlgebra, flag: &WeightedFlag) -> Result<i64> {
    check_flag(g, flag)?;
    let split = GradedSplitting::echelon(flag);
    let (basis, w) = split.adapted_basis();
    let r = g.dim();
    let cols: Vec<Vector> = (0..r).map(|k| basis.column(k)).collect();
    let total: i64 = w.iter().sum();
    let mut best: Option<i64> = None;
    for a in 0..r {
        for b in 0..r {
            let z = g.bracket_unchecked(&cols[a], &cols[b]);
            if z.iter().all(Rational::is_zero) {
                continue;
            }
            for omit in 0..r {
                // wedge slots filled by every adapted basis vector except `omit`
                let weight = w[a] + w[b] + total - w[omit];
                if best.is_some_and(|x| weight >= x) {
                    continue;
                }
                let mut rows = Vec::with_capacity(r);
                rows.push(z.clone());
                rows.extend((0..r).filter(|&c| c != omit).map(|c| cols[c].clone()));
                if !Matrix::from_rows(&rows, r).det().is_zero() {
                    best = Some(weight);
                }
            }
        }
    }
    best.map(|m| m - total).ok_or(Error::MuUndefined)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::sl;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Rational::from(x)).collect()
    }

    fn span(vs: &[&[i64]]) -> Subspace {
        let rows: Vec<Vector> = vs.iter().map(|x| v(x)).collect();
        Subspace::span(rows[0].len(), &rows).unwrap()
    }

    // sl2 basis (h, e, f)
    fn borel(weights: [i64; 3]) -> WeightedFlag {
        WeightedFlag::new(
            weights.to_vec(),
            vec![span(&[&[0, 1, 0]]), span(&[&[0, 1, 0], &[1, 0, 0]]), Subspace::whole(3)],
        )
        .unwrap()
    }

    fn cartan_first() -> WeightedFlag {
        WeightedFlag::new(
            vec![-1, 0, 1],
            vec![span(&[&[1, 0, 0]]), span(&[&[1, 0, 0], &[0, 1, 0]]), Subspace::whole(3)],
        )
        .unwrap()
    }

    #[test]
    fn flag_validation() {
        let s = span(&[&[0, 1, 0]]);
        assert!(WeightedFlag::new(vec![0, 0], vec![s.clone(), Subspace::whole(3)]).is_err());
        assert!(WeightedFlag::new(vec![0], vec![s.clone()]).is_err());
        assert!(WeightedFlag::new(vec![0, 1], vec![s.clone(), s]).is_err());
        assert!(WeightedFlag::new(vec![0], vec![]).is_err());
    }

    #[test]
    fn integer_indexing() {
        let f = borel([-1, 0, 1]);
        assert!(f.step_at(-2).is_zero());
        assert_eq!(f.step_at(-1).dim(), 1);
        assert_eq!(f.step_at(0).dim(), 2);
        assert!(f.step_at(7).is_whole());
        let g = borel([-2, 0, 2]);
        assert_eq!(g.step_at(-1).dim(), 1);
        assert_eq!(g.step_at(1).dim(), 2);
    }

    #[test]
    fn balanced_examples() {
        assert!(is_balanced(&borel([-1, 0, 1])));
        assert!(!is_balanced(&borel([0, 1, 2])));
        assert!(is_balanced(&WeightedFlag::trivial(3)));
    }

    #[test]
    fn algebra_examples() {
        let g = sl(2).unwrap();
        assert!(is_algebra_filtration(&g, &borel([-1, 0, 1])).unwrap());
        assert!(!is_algebra_filtration(&g, &cartan_first()).unwrap());
        assert!(is_algebra_filtration(&g, &WeightedFlag::trivial(3)).unwrap());
    }

    #[test]
    fn orthogonal_examples() {
        let g = sl(2).unwrap();
        assert!(is_orthogonal_filtration(&g, &borel([-1, 0, 1])).unwrap());
        let h_only = WeightedFlag::new(vec![-1, 1], vec![span(&[&[1, 0, 0]]), Subspace::whole(3)]).unwrap();
        assert!(!is_orthogonal_filtration(&g, &h_only).unwrap());
        assert!(is_orthogonal_filtration(&g, &WeightedFlag::trivial(3)).unwrap());
        let abelian = LieAlgebra::abelian(3);
        assert_eq!(is_orthogonal_filtration(&abelian, &WeightedFlag::trivial(3)), Err(Error::NotSemisimple));
    }

    #[test]
    fn mu_examples() {
        let g = sl(2).unwrap();
        assert_eq!(mu_bracket(&g, &borel([-1, 0, 1])).unwrap(), 0);
        assert_eq!(mu_bracket(&g, &cartan_first()).unwrap(), -1);
        assert_eq!(mu_bracket(&g, &borel([-2, 0, 2])).unwrap(), 0);
        assert_eq!(mu_tensor(&g, &borel([-1, 0, 1])).unwrap(), 0);
        assert_eq!(mu_tensor(&g, &cartan_first()).unwrap(), -1);
        let split = GradedSplitting::echelon(&cartan_first());
        assert_eq!(mu_coordinate(&g, &split).unwrap(), -1);
        assert_eq!(mu_bracket(&LieAlgebra::abelian(3), &borel([-1, 0, 1])), Err(Error::MuUndefined));
        assert_eq!(mu_tensor(&LieAlgebra::abelian(3), &borel([-1, 0, 1])), Err(Error::MuUndefined));
    }

    #[test]
    fn splittings() {
        let f = borel([-1, 0, 1]);
        let e = GradedSplitting::echelon(&f);
        assert_eq!(e.pieces()[0], vec![v(&[0, 1, 0])]);
        assert_eq!(e.pieces()[1], vec![v(&[1, 0, 0])]);
        assert_eq!(e.pieces()[2], vec![v(&[0, 0, 1])]);
        let other = GradedSplitting::new(&f, vec![vec![v(&[0, 2, 0])], vec![v(&[1, 5, 0])], vec![v(&[3, 1, 1])]]);
        assert!(other.is_ok());
        let bad = GradedSplitting::new(&f, vec![vec![v(&[0, 2, 0])], vec![v(&[0, 1, 0])], vec![v(&[0, 0, 1])]]);
        assert!(bad.is_err());
        assert_eq!(e.unimodular_basis().0.det(), Rational::one());
    }
}
