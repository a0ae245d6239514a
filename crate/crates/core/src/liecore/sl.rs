use crate::error::{Error, Result};
use crate::exactmath::{zero_vector, Matrix, Rational, Vector};

use super::{LieAlgebra, StructureConstants};

/// Basis element of `sl(n)` as a matrix-unit description.
#[derive(Clone, Copy, Debug)]
enum SlBasis {
    /// `E_ii - E_{i+1,i+1}`
    Cartan(usize),
    /// `E_ij`, `i != j`
    Unit(usize, usize),
}

/// Ordering: `H_1..H_{n-1}`, then `E_ij` with `i < j`, then the transposes in
/// the same order. For `n = 2` this is `(h, e, f)`.
fn sl_basis(n: usize) -> Vec<SlBasis> {
    let mut b: Vec<SlBasis> = (0..n - 1).map(SlBasis::Cartan).collect();
    let upper: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    b.extend(upper.iter().map(|&(i, j)| SlBasis::Unit(i, j)));
    b.extend(upper.iter().map(|&(i, j)| SlBasis::Unit(j, i)));
    b
}

fn label(n: usize, b: SlBasis) -> String {
    match (n, b) {
        (2, SlBasis::Cartan(_)) => "h".into(),
        (2, SlBasis::Unit(0, 1)) => "e".into(),
        (2, SlBasis::Unit(_, _)) => "f".into(),
        (_, SlBasis::Cartan(i)) => format!("h{}", i + 1),
        (_, SlBasis::Unit(i, j)) => format!("e{}{}", i + 1, j + 1),
    }
}

fn basis_matrix(n: usize, b: SlBasis) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    match b {
        SlBasis::Cartan(i) => {
            m[(i, i)] = Rational::one();
            m[(i + 1, i + 1)] = Rational::from(-1);
        }
        SlBasis::Unit(i, j) => m[(i, j)] = Rational::one(),
    }
    m
}

/// Coordinates of a trace-free `n × n` matrix in the `sl(n)` basis.
pub fn sl_from_matrix(n: usize, m: &Matrix) -> Result<Vector> {
    if m.nrows() != n || m.ncols() != n {
        return Err(Error::DimensionMismatch { expected: n, got: m.nrows() });
    }
    if !m.trace().is_zero() {
        return Err(Error::Inconsistent("matrix is not trace-free".into()));
    }
    let basis = sl_basis(n);
    let mut v = zero_vector(basis.len());
    // diag(d) = Σ c_i H_i with c_i = d_1 + … + d_i
    let mut running = Rational::zero();
    for (k, b) in basis.iter().enumerate() {
        match *b {
            SlBasis::Cartan(i) => {
                running += &m[(i, i)];
                v[k] = running.clone();
            }
            SlBasis::Unit(i, j) => v[k] = m[(i, j)].clone(),
        }
    }
    Ok(v)
}

/// The matrix with the given `sl(n)` coordinates.
pub fn sl_to_matrix(n: usize, v: &[Rational]) -> Result<Matrix> {
    let basis = sl_basis(n);
    if v.len() != basis.len() {
        return Err(Error::DimensionMismatch { expected: basis.len(), got: v.len() });
    }
    let mut m = Matrix::zeros(n, n);
    for (c, b) in v.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        let bm = basis_matrix(n, b);
        for i in 0..n {
            for j in 0..n {
                if !bm[(i, j)].is_zero() {
                    m[(i, j)] += c * &bm[(i, j)];
                }
            }
        }
    }
    Ok(m)
}

/// `sl(n)` with structure constants taken from matrix commutators.
pub fn sl(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::Unsupported(format!("sl(n) needs n >= 2, got {n}")));
    }
    let basis = sl_basis(n);
    let d = basis.len();
    let mats: Vec<Matrix> = basis.iter().map(|&b| basis_matrix(n, b)).collect();
    let mut t = StructureConstants::zero(d);
    for l in 0..d {
        for m in l + 1..d {
            let comm = mats[l].mul(&mats[m]).sub(&mats[m].mul(&mats[l]));
            let coords = sl_from_matrix(n, &comm)?;
            for (k, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    t.set(m, l, k, -&c);
                    t.set(l, m, k, c);
                }
            }
        }
    }
    let labels = basis.iter().map(|&b| label(n, b)).collect();
    LieAlgebra::new(t, Some(labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_and_validity() {
        assert_eq!(sl(2).unwrap().dim(), 3);
        assert_eq!(sl(2).unwrap().labels(), ["h", "e", "f"]);
        let g3 = sl(3).unwrap();
        assert_eq!(g3.dim(), 8);
        assert!(g3.check_jacobi());
        assert!(sl(1).is_err());
    }

    #[test]
    fn matrix_coordinates_round_trip() {
        let m = Matrix::from_ints(&[&[2, 1, 0], &[3, -1, 4], &[0, 5, -1]]);
        let v = sl_from_matrix(3, &m).unwrap();
        assert_eq!(sl_to_matrix(3, &v).unwrap(), m);
        assert!(sl_from_matrix(3, &Matrix::identity(3)).is_err());
    }
}
