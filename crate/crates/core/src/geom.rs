//! Numerical intersection theory on polarized surfaces (and curves), and
//! Chern-character arithmetic on classes `(rank, c1, ch2)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{Poly, Rational};

/// Picard lattice with intersection pairing, canonical class, polarization
/// and `χ(O_X)`. Curves use a rank-1 lattice pairing `c1` with the point
/// class; their `K` is ignored and `chiO = 1 − g`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SurfaceModel {
    #[serde(rename = "rank")]
    picard_rank: usize,
    intersection: Vec<Vec<i64>>,
    #[serde(rename = "K")]
    k: Vec<i64>,
    #[serde(rename = "H")]
    h: Vec<i64>,
    #[serde(rename = "chiO")]
    chi_o: Rational,
    #[serde(default = "two")]
    dim: u8,
}

fn two() -> u8 {
    2
}

impl SurfaceModel {
    pub fn new(intersection: Vec<Vec<i64>>, k: Vec<i64>, h: Vec<i64>, chi_o: Rational) -> Result<Self> {
        let x = SurfaceModel { picard_rank: h.len(), intersection, k, h, chi_o, dim: 2 };
        x.validate()?;
        Ok(x)
    }

    /// Curve of genus `g` with polarization of degree `deg_h`.
    pub fn curve(genus: i64, deg_h: i64) -> Result<Self> {
        let x = SurfaceModel {
            picard_rank: 1,
            intersection: vec![vec![1]],
            k: vec![2 * genus - 2],
            h: vec![deg_h],
            chi_o: Rational::from(1 - genus),
            dim: 1,
        };
        x.validate()?;
        Ok(x)
    }

    /// Checks shape, symmetry and positivity of the polarization; needed
    /// after deserialization.
    pub fn validate(&self) -> Result<()> {
        let p = self.picard_rank;
        if p == 0 {
            return Err(Error::InvalidModel("Picard rank must be positive".into()));
        }
        for len in [self.intersection.len(), self.k.len(), self.h.len()] {
            if len != p {
                return Err(Error::DimensionMismatch { expected: p, got: len });
            }
        }
        if let Some(row) = self.intersection.iter().find(|r| r.len() != p) {
            return Err(Error::DimensionMismatch { expected: p, got: row.len() });
        }
        if (0..p).any(|i| (0..i).any(|j| self.intersection[i][j] != self.intersection[j][i])) {
            return Err(Error::InvalidModel("intersection matrix must be symmetric".into()));
        }
        if !matches!(self.dim, 1 | 2) {
            return Err(Error::Unsupported(format!("dimension {}", self.dim)));
        }
        let positive = if self.dim == 2 { self.pair_ints(&self.h, &self.h) > 0 } else { self.h[0] > 0 };
        if !positive {
            return Err(Error::InvalidModel("polarization must be positive".into()));
        }
        Ok(())
    }

    /// `P²` with the line class.
    pub fn p2() -> Self {
        SurfaceModel::new(vec![vec![1]], vec![-3], vec![1], Rational::one()).expect("valid model")
    }

    /// Blow-up of `P²` at a point, basis `(D, R)`, polarization `D + 2R`.
    pub fn blowup_p2() -> Self {
        SurfaceModel::new(vec![vec![-1, 1], vec![1, 0]], vec![-2, -3], vec![1, 2], Rational::one())
            .expect("valid model")
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn picard_rank(&self) -> usize {
        self.picard_rank
    }

    pub fn canonical(&self) -> &[i64] {
        &self.k
    }

    pub fn polarization(&self) -> &[i64] {
        &self.h
    }

    pub fn chi_o(&self) -> &Rational {
        &self.chi_o
    }

    fn pair_ints(&self, a: &[i64], b: &[i64]) -> i64 {
        (0..self.picard_rank)
            .map(|i| (0..self.picard_rank).map(|j| a[i] * self.intersection[i][j] * b[j]).sum::<i64>())
            .sum()
    }

    /// Intersection number of two rational classes.
    pub fn pairing(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..self.picard_rank {
            for j in 0..self.picard_rank {
                let m = self.intersection[i][j];
                if m != 0 {
                    acc += &a[i] * &b[j] * Rational::from(m);
                }
            }
        }
        acc
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    pub fn h_squared(&self) -> Rational {
        Rational::from(self.pair_ints(&self.h, &self.h))
    }

    pub fn k_dot_h(&self) -> Rational {
        Rational::from(self.pair_ints(&self.k, &self.h))
    }

    fn check_class(&self, f: &SheafClass) -> Result<()> {
        if f.c1.len() != self.picard_rank {
            return Err(Error::DimensionMismatch { expected: self.picard_rank, got: f.c1.len() });
        }
        if f.rank < 0 {
            return Err(Error::InvalidClass("negative rank".into()));
        }
        Ok(())
    }
}

/// Numerical class `(rank, c1, ch2)` of a coherent sheaf.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SheafClass {
    pub rank: i64,
    pub c1: Vec<Rational>,
    pub ch2: Rational,
    #[serde(default)]
    pub label: String,
}

impl SheafClass {
    pub fn new(rank: i64, c1: Vec<Rational>, ch2: Rational, label: impl Into<String>) -> Self {
        SheafClass { rank, c1, ch2, label: label.into() }
    }

    /// `O(c1)`, with `ch2 = c1²/2`.
    pub fn line_bundle(x: &SurfaceModel, c1: &[i64], label: impl Into<String>) -> Self {
        let c = SurfaceModel::ints(c1);
        let ch2 = if x.dim == 2 { x.pairing(&c, &c) * Rational::new(1, 2) } else { Rational::zero() };
        SheafClass::new(1, c, ch2, label)
    }

    /// Skyscraper of length `len`: rank 0, `c1 = 0`, `ch2 = len`.
    pub fn points(x: &SurfaceModel, len: i64) -> Self {
        SheafClass::new(0, vec![Rational::zero(); x.picard_rank], Rational::from(len), format!("O_Z({len})"))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Same `ch`, ignoring labels.
    pub fn same_class(&self, other: &SheafClass) -> bool {
        self.rank == other.rank && self.c1 == other.c1 && self.ch2 == other.ch2
    }
}

/// Riemann–Roch: `χ(F(m))` for a surface, `r·deg H·m + deg F + r(1−g)` for a curve.
pub fn hilbert_poly(x: &SurfaceModel, f: &SheafClass) -> Result<Poly> {
    x.check_class(f)?;
    let r = Rational::from(f.rank);
    let h = SurfaceModel::ints(&x.h);
    if x.dim == 1 {
        let deg = &f.c1[0] * Rational::from(x.intersection[0][0]);
        return Ok(Poly::new(vec![deg + &r * &x.chi_o, &r * Rational::from(x.h[0])]));
    }
    let k = SurfaceModel::ints(&x.k);
    let half = Rational::new(1, 2);
    let a2 = &r * x.h_squared() * &half;
    let a1 = x.pairing(&f.c1, &h) - &r * x.k_dot_h() * &half;
    let a0 = &f.ch2 - x.pairing(&k, &f.c1) * &half + &r * &x.chi_o;
    Ok(Poly::new(vec![a0, a1, a2]))
}

/// `c1 · H` (the degree of `c1` on a curve).
pub fn degree(x: &SurfaceModel, f: &SheafClass) -> Result<Rational> {
    x.check_class(f)?;
    if x.dim == 1 {
        return Ok(&f.c1[0] * Rational::from(x.intersection[0][0]));
    }
    Ok(x.pairing(&f.c1, &SurfaceModel::ints(&x.h)))
}

pub fn slope(x: &SurfaceModel, f: &SheafClass) -> Result<Rational> {
    if f.rank == 0 {
        return Err(Error::ZeroRank);
    }
    Ok(degree(x, f)? / Rational::from(f.rank))
}

/// `ch(a)·ch(b)` truncated at degree 2.
pub fn tensor_class(x: &SurfaceModel, a: &SheafClass, b: &SheafClass) -> Result<SheafClass> {
    x.check_class(a)?;
    x.check_class(b)?;
    let ra = Rational::from(a.rank);
    let rb = Rational::from(b.rank);
    let c1 = a.c1.iter().zip(&b.c1).map(|(p, q)| &ra * q + &rb * p).collect();
    let ch2 = &ra * &b.ch2 + &rb * &a.ch2 + x.pairing(&a.c1, &b.c1);
    Ok(SheafClass::new(a.rank * b.rank, c1, ch2, format!("{}⊗{}", a.label, b.label)))
}

/// `(r, −c1, ch2)`.
pub fn dual_class(a: &SheafClass) -> SheafClass {
    let label = match a.label.strip_suffix('^') {
        Some(inner) => inner.to_string(),
        None => format!("{}^", a.label),
    };
    SheafClass::new(a.rank, a.c1.iter().map(|c| -c).collect(), a.ch2.clone(), label)
}

/// `ch(a)·ch(a^∨) − 1`: rank `r² − 1`, `c1 = 0`.
pub fn end0_class(x: &SurfaceModel, a: &SheafClass) -> Result<SheafClass> {
    let mut e = tensor_class(x, a, &dual_class(a))?;
    e.rank -= 1;
    e.label = format!("End0({})", a.label);
    Ok(e)
}

/// Subtracts `len` points from `ch2` (twist by an ideal of colength `len`).
pub fn point_twist(a: &SheafClass, len: i64) -> SheafClass {
    SheafClass::new(a.rank, a.c1.clone(), &a.ch2 - Rational::from(len), format!("{}⊗I_{len}", a.label))
}

pub fn sum_class(classes: &[SheafClass]) -> Result<SheafClass> {
    let first = classes.first().ok_or(Error::EmptySummands)?;
    let mut acc = first.clone();
    for c in &classes[1..] {
        if c.c1.len() != acc.c1.len() {
            return Err(Error::DimensionMismatch { expected: acc.c1.len(), got: c.c1.len() });
        }
        acc.rank += c.rank;
        for (p, q) in acc.c1.iter_mut().zip(&c.c1) {
            *p += q;
        }
        acc.ch2 += &c.ch2;
    }
    acc.label = classes.iter().map(|c| c.label.as_str()).collect::<Vec<_>>().join("⊕");
    Ok(acc)
}

/// `a − b` in K-theory; the rank may not go negative.
pub fn difference_class(a: &SheafClass, b: &SheafClass) -> Result<SheafClass> {
    if a.c1.len() != b.c1.len() {
        return Err(Error::DimensionMismatch { expected: a.c1.len(), got: b.c1.len() });
    }
    if b.rank > a.rank {
        return Err(Error::InvalidClass("difference has negative rank".into()));
    }
    let c1 = a.c1.iter().zip(&b.c1).map(|(p, q)| p - q).collect();
    Ok(SheafClass::new(a.rank - b.rank, c1, &a.ch2 - &b.ch2, format!("{}−{}", a.label, b.label)))
}

pub fn c1_squared(x: &SurfaceModel, f: &SheafClass) -> Result<Rational> {
    x.check_class(f)?;
    Ok(x.pairing(&f.c1, &f.c1))
}

/// `c2 = c1²/2 − ch2`.
pub fn c2_from_ch(x: &SurfaceModel, f: &SheafClass) -> Result<Rational> {
    Ok(c1_squared(x, f)? * Rational::new(1, 2) - &f.ch2)
}

/// `ch2 = c1²/2 − c2`.
pub fn ch2_from_c2(x: &SurfaceModel, c1: &[Rational], c2: &Rational) -> Rational {
    x.pairing(c1, c1) * Rational::new(1, 2) - c2
}

/// Expected dimension `2r·c2 − (r−1)·c1² − r² + 1` of the moduli of stable
/// rank-`r` sheaves on `P²` (`4c2 − c1² − 3` in rank 2).
pub fn moduli_dim_gm(r: i64, c1: i64, c2: i64) -> Result<i64> {
    if r < 1 {
        return Err(Error::Unsupported(format!("rank {r}")));
    }
    Ok(2 * r * c2 - (r - 1) * c1 * c1 - r * r + 1)
}

/// Dimension `ℓ(r + 1)` of the Quot scheme of length-`ℓ` quotients of a
/// rank-`r` bundle on a surface, at a point supported on `ℓ` distinct points.
pub fn quot_dim(r: i64, len: i64) -> Result<i64> {
    if r < 1 || len < 0 {
        return Err(Error::Unsupported(format!("quot_dim({r}, {len})")));
    }
    Ok(len * (r + 1))
}
