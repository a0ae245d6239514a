//! Balanced algebra filtrations of a semisimple algebra versus integral
//! grading elements: a flag determines `v` with `ad(v) = −λ_i` on the `i`-th
//! graded piece, and `v` determines the flag through the eigenspaces of
//! `ad(v)`. The parabolic is the nonnegative part of the grading and the
//! character is `κ(v, ·)` on it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{zero_vector, Matrix, Rational, Vector};
use crate::filtration::{is_algebra_filtration, is_balanced, WeightedFlag};
use crate::liecore::{LieAlgebra, Subspace};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParabolicData {
    /// Grading element, Killing dual of the character.
    pub v: Vector,
    /// `(eigenvalue, eigenspace)` of `ad(v)`, eigenvalues increasing.
    pub eigengrading: Vec<(i64, Subspace)>,
    pub parabolic: Subspace,
    /// Values of `κ(v, ·)` on the echelon basis of the parabolic.
    pub character: Vector,
}

#[derive(Serialize)]
struct ParabolicJson<'a> {
    v: &'a Vector,
    eigenvalues: Vec<i64>,
    eigenspaces: Vec<&'a Subspace>,
    parabolic: &'a Subspace,
    character: &'a Vector,
}

impl Serialize for ParabolicData {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ParabolicJson {
            v: &self.v,
            eigenvalues: self.eigengrading.iter().map(|(a, _)| *a).collect(),
            eigenspaces: self.eigengrading.iter().map(|(_, s)| s).collect(),
            parabolic: &self.parabolic,
            character: &self.character,
        }
        .serialize(serializer)
    }
}

impl ParabolicData {
    /// Eigenvalue-0 part of the grading.
    pub fn levi(&self) -> Subspace {
        self.eigengrading
            .iter()
            .find(|(a, _)| *a == 0)
            .map(|(_, s)| s.clone())
            .unwrap_or_else(|| Subspace::zero(self.v.len()))
    }
}

fn require_balanced_algebra(g: &LieAlgebra, flag: &WeightedFlag) -> Result<()> {
    g.require_semisimple()?;
    if !is_balanced(flag) || !is_algebra_filtration(g, flag)? {
        return Err(Error::NotBalancedAlgebra);
    }
    Ok(())
}

/// Grading element of a balanced algebra filtration, its eigenspaces, the
/// parabolic `V_0` and the character `κ(v, ·)`.
pub fn parabolic_from_filtration(g: &LieAlgebra, flag: &WeightedFlag) -> Result<ParabolicData> {
    require_balanced_algebra(g, flag)?;
    let d = g.dim();
    // ad(x)·v ≡ λ_i·x mod V_{i−1} for x ∈ V_i
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    let mut below = Subspace::zero(d);
    for (step, &w) in flag.steps().iter().zip(flag.weights()) {
        let quotient = below.annihilator();
        for x in step.basis() {
            let adx = g.ad(x)?;
            for q in &quotient {
                let row: Vector = (0..d)
                    .map(|j| (0..d).fold(Rational::zero(), |acc, i| acc + &q[i] * &adx[(i, j)]))
                    .collect();
                let qx = q.iter().zip(x).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
                rows.push(row);
                rhs.push(qx * Rational::from(w));
            }
        }
        below = step.clone();
    }
    let candidate = Matrix::from_rows(&rows, d)
        .solve(&rhs)
        .ok_or_else(|| Error::Inconsistent("no grading element for the flag".into()))?;

    let ad = g.ad(&candidate)?;
    let mut eigengrading: Vec<(i64, Subspace)> = Vec::new();
    let mut basis_cols: Vec<Vector> = Vec::new();
    let mut diag: Vec<Rational> = Vec::new();
    for &w in flag.weights().iter().rev() {
        let space = eigenspace(&ad, -w);
        basis_cols.extend(space.basis().iter().cloned());
        diag.extend(std::iter::repeat(Rational::from(-w)).take(space.dim()));
        eigengrading.push((-w, space));
    }
    if basis_cols.len() != d {
        return Err(Error::Inconsistent("grading element is not diagonalizable".into()));
    }
    // f = B·diag(−λ)·B⁻¹, checked to be an inner derivation
    let b = Matrix::from_columns(&basis_cols, d);
    let mut dm = Matrix::zeros(d, d);
    for (i, x) in diag.into_iter().enumerate() {
        dm[(i, i)] = x;
    }
    let f = b.mul(&dm).mul(&b.inverse().expect("eigenvectors of distinct eigenvalues are independent"));
    if !g.is_derivation(&f) {
        return Err(Error::NotADerivation);
    }
    let v = g.solve_inner_derivation(&f)?;

    let parabolic = flag.step_at(0);
    let character = parabolic.basis().iter().map(|x| g.killing(&v, x)).collect();
    Ok(ParabolicData { v, eigengrading, parabolic, character })
}

fn eigenspace(ad: &Matrix, alpha: i64) -> Subspace {
    let d = ad.nrows();
    let mut m = ad.clone();
    for i in 0..d {
        m[(i, i)] -= &Rational::from(alpha);
    }
    Subspace::span(d, &m.nullspace()).expect("nullspace vectors have the ambient length")
}

/// Flag of the `ad(v)`-grading: steps are the sums of eigenspaces with
/// `−α ≤ λ`, weights the distinct values `−α`.
pub fn filtration_from_element(g: &LieAlgebra, v: &[Rational]) -> Result<WeightedFlag> {
    let d = g.dim();
    let ad = g.ad(v)?;
    let cp = ad.charpoly();
    // Gershgorin bound on eigenvalue size
    let bound = (0..d)
        .map(|i| (0..d).fold(Rational::zero(), |acc, j| acc + ad[(i, j)].abs()))
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    let bound = bound.ceil();
    let bound: i64 = bound.try_into().map_err(|_| Error::NotGradedIntegral)?;
    let mut pieces: Vec<(i64, Subspace)> = Vec::new();
    let mut total = 0;
    for alpha in (-bound..=bound).rev() {
        if cp.eval(&Rational::from(alpha)).is_zero() {
            let space = eigenspace(&ad, alpha);
            total += space.dim();
            pieces.push((-alpha, space));
        }
    }
    if total != d {
        return Err(Error::NotGradedIntegral);
    }
    let mut acc: Vec<Vector> = Vec::new();
    let mut weights = Vec::with_capacity(pieces.len());
    let mut steps = Vec::with_capacity(pieces.len());
    for (w, space) in pieces {
        acc.extend(space.basis().iter().cloned());
        weights.push(w);
        steps.push(Subspace::span(d, &acc)?);
    }
    WeightedFlag::new(weights, steps)
}

/// The `v` in `levi` orthogonal to `[levi, levi]` with `κ(v, x) = χ(x)` for
/// the echelon basis `x` of `q`; `chi` lists those values.
pub fn killing_dual(g: &LieAlgebra, q: &Subspace, levi: &Subspace, chi: &[Rational]) -> Result<Vector> {
    g.require_semisimple()?;
    let d = g.dim();
    if q.ambient_dim() != d || levi.ambient_dim() != d {
        return Err(Error::DimensionMismatch { expected: d, got: q.ambient_dim() });
    }
    if chi.len() != q.dim() {
        return Err(Error::DimensionMismatch { expected: q.dim(), got: chi.len() });
    }
    if !g.is_subalgebra(q) || !q.contains(levi) {
        return Err(Error::NotSubalgebra);
    }
    if chi.iter().all(Rational::is_zero) {
        return Ok(zero_vector(d));
    }
    let k = g.killing_matrix();
    let mut rows: Vec<Vector> = levi.annihilator();
    let mut rhs: Vec<Rational> = vec![Rational::zero(); rows.len()];
    for y in g.bracket_span(levi, levi).basis() {
        rows.push(k.mul_vec(y));
        rhs.push(Rational::zero());
    }
    for (x, c) in q.basis().iter().zip(chi) {
        rows.push(k.mul_vec(x));
        rhs.push(c.clone());
    }
    Matrix::from_rows(&rows, d).solve(&rhs).ok_or(Error::CharacterNotRepresentable)
}

/// Flag → grading element → flag reproduces the weights and echelon steps.
pub fn roundtrip_check(g: &LieAlgebra, flag: &WeightedFlag) -> Result<bool> {
    let data = parabolic_from_filtration(g, flag)?;
    Ok(filtration_from_element(g, &data.v)? == *flag)
}

/// Flags of the gradings by integer combinations (coefficients in `-1..=2`)
/// of the basis elements with diagonal adjoint action, deduplicated.
pub fn standard_algebra_flags(g: &LieAlgebra) -> Vec<WeightedFlag> {
    let toral = g.diagonal_basis_elements();
    let mut out: Vec<WeightedFlag> = Vec::new();
    let mut coeffs = vec![-1i64; toral.len()];
    loop {
        let mut v = zero_vector(g.dim());
        for (&k, &c) in toral.iter().zip(&coeffs) {
            v[k] = Rational::from(c);
        }
        if let Ok(f) = filtration_from_element(g, &v) {
            if !out.contains(&f) {
                out.push(f);
            }
        }
        // odometer over coefficient vectors
        let mut i = 0;
        while i < coeffs.len() && coeffs[i] == 2 {
            coeffs[i] = -1;
            i += 1;
        }
        if i == coeffs.len() {
            break;
        }
        coeffs[i] += 1;
    }
    out
}

/// Deterministic algebra flag in general position: a random integral toral
/// element conjugated by `exp(t·ad x)` for random ad-nilpotent basis
/// elements `x`.
pub fn random_algebra_flag(g: &LieAlgebra, seed: u64) -> Result<WeightedFlag> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let toral = g.diagonal_basis_elements();
    let nilpotent = g.nilpotent_basis_elements();
    let mut v = zero_vector(g.dim());
    for &k in &toral {
        v[k] = Rational::from(rng.gen_range(-2i64..=2));
    }
    for _ in 0..rng.gen_range(0..=3) {
        if nilpotent.is_empty() {
            break;
        }
        let x = g.basis_vector(nilpotent[rng.gen_range(0..nilpotent.len())]);
        let t = Rational::from(rng.gen_range(-2i64..=2));
        let tx: Vector = x.iter().map(|c| c * &t).collect();
        v = g.exp_ad(&tx)?.mul_vec(&v);
    }
    filtration_from_element(g, &v)
}
