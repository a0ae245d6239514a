//! Stability verdicts for numerical `g′`-sheaf models.
//!
//! A model is a sheaf class `E` on a polarized surface whose generic fiber
//! is a semisimple Lie algebra, together with a finite list of candidate
//! filtrations `E_{λ_1} ⊊ … ⊊ E_{λ_{t+1}} = E`. Each verdict is relative to
//! that candidate list: the engine never searches for further subsheaves.
//!
//! The tested quantity for a candidate is
//! `P_{E•} = Σ_{i≤t} (λ_{i+1} − λ_i)·(r·P_{E_{λ_i}} − r_{λ_i}·P_E)`,
//! compared with zero in the eventual-sign order.

mod deform;
mod scenarios;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{EventualSign, Poly, Rational};
use crate::filtration::{is_algebra_filtration, is_balanced, mu_bracket, WeightedFlag};
use crate::geom::{degree, hilbert_poly, slope, sum_class, SheafClass, SurfaceModel};
use crate::liecore::LieAlgebra;

pub use deform::{admissible_deformation, canonical_form, grad, grad_with_trace, s_equivalent, CanonicalForm};
pub use scenarios::{
    example1_report, example2_model, example2_report, example2_table, scenario_models, split_model,
    Example1Report, Example2Report, TableRow,
};

/// Candidate filtration: sub-object classes `E_{λ_i}` (last = total) and an
/// optional flag in the fiber Lie algebra with the same weights and ranks.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SheafFiltrationSpec {
    pub weights: Vec<i64>,
    pub classes: Vec<SheafClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fiber_flag: Option<WeightedFlag>,
}

impl SheafFiltrationSpec {
    pub fn validate(&self, total: &SheafClass) -> Result<()> {
        if self.classes.is_empty() || self.classes.len() != self.weights.len() {
            return Err(Error::InvalidModel(format!(
                "{} weights for {} classes",
                self.weights.len(),
                self.classes.len()
            )));
        }
        if self.weights.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidFlag("weights must be strictly increasing".into()));
        }
        let t = self.classes.len() - 1;
        for (i, c) in self.classes[..t].iter().enumerate() {
            if c.rank >= total.rank {
                return Err(Error::RankOverflow { step: i, rank: c.rank, total: total.rank });
            }
        }
        if self.classes.windows(2).any(|w| w[0].rank >= w[1].rank) {
            return Err(Error::InvalidModel("ranks must be strictly increasing".into()));
        }
        if !self.classes[t].same_class(total) {
            return Err(Error::InvalidModel("last class must equal the total".into()));
        }
        if let Some(flag) = &self.fiber_flag {
            if flag.weights() != self.weights.as_slice() {
                return Err(Error::InvalidModel("fiber flag weights differ from the filtration weights".into()));
            }
            let ranks: Vec<i64> = flag.steps().iter().map(|s| s.dim() as i64).collect();
            let expected: Vec<i64> = self.classes.iter().map(|c| c.rank).collect();
            if ranks != expected {
                return Err(Error::InvalidModel("fiber flag dimensions differ from the ranks".into()));
            }
        }
        Ok(())
    }

    /// Fiber flag present and a balanced algebra filtration.
    pub fn is_algebra_candidate(&self, fiber: &LieAlgebra) -> bool {
        self.fiber_flag
            .as_ref()
            .is_some_and(|f| is_balanced(f) && is_algebra_filtration(fiber, f).unwrap_or(false))
    }
}

/// Numerical `g′`-sheaf: total class, semisimple generic fiber, candidate
/// filtrations, the inert invariants `τ`, and (after a deformation) the
/// classes of the graded pieces.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GSheafModel {
    pub surface: SurfaceModel,
    pub total: SheafClass,
    pub fiber: LieAlgebra,
    #[serde(default)]
    pub candidates: Vec<SheafFiltrationSpec>,
    #[serde(default, rename = "tau")]
    pub invariants_tau: Vec<SheafClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pieces: Option<Vec<SheafClass>>,
}

impl GSheafModel {
    pub fn validate(&self) -> Result<()> {
        self.surface.validate()?;
        if self.total.rank != self.fiber.dim() as i64 {
            return Err(Error::InvalidModel(format!(
                "total rank {} differs from fiber dimension {}",
                self.total.rank,
                self.fiber.dim()
            )));
        }
        if !degree(&self.surface, &self.total)?.is_zero() {
            return Err(Error::InvalidModel("total class must have degree 0".into()));
        }
        if !self.fiber.is_semisimple() {
            return Err(Error::NotSemisimple);
        }
        for c in &self.candidates {
            c.validate(&self.total)?;
            if let Some(f) = &c.fiber_flag {
                if f.ambient_dim() != self.fiber.dim() {
                    return Err(Error::DimensionMismatch { expected: self.fiber.dim(), got: f.ambient_dim() });
                }
            }
        }
        if let Some(pieces) = &self.pieces {
            if !sum_class(pieces)?.same_class(&self.total) {
                return Err(Error::InvalidModel("graded pieces do not sum to the total".into()));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl Status {
    pub fn is_semistable(self) -> bool {
        self != Status::Unstable
    }

    fn from_sign(s: EventualSign) -> Self {
        match s {
            EventualSign::Negative => Status::Stable,
            EventualSign::Zero => Status::StrictlySemistable,
            EventualSign::Positive => Status::Unstable,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Stable => "stable",
            Status::StrictlySemistable => "semistable",
            Status::Unstable => "unstable",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StabilityVerdict {
    pub status: Status,
    /// Violating (Unstable) or equality-achieving (StrictlySemistable) candidate.
    pub certificate: Option<SheafFiltrationSpec>,
    /// Tested quantity of the certificate, or the extremal value if none.
    pub polynomial: Poly,
    /// Candidates outside the scope of the test.
    pub skipped: usize,
}

/// `Σ_{i≤t} (λ_{i+1} − λ_i)·(r·P_{E_{λ_i}} − r_{λ_i}·P_E)`.
pub fn filtration_hilbert(x: &SurfaceModel, spec: &SheafFiltrationSpec, total: &SheafClass) -> Result<Poly> {
    spec.validate(total)?;
    let p_total = hilbert_poly(x, total)?;
    let r = Rational::from(total.rank);
    let mut acc = Poly::zero();
    for i in 0..spec.classes.len() - 1 {
        let gap = Rational::from(spec.weights[i + 1] - spec.weights[i]);
        let p_i = hilbert_poly(x, &spec.classes[i])?;
        let term = p_i.scale(&r) - p_total.scale(&Rational::from(spec.classes[i].rank));
        acc = acc + term.scale(&gap);
    }
    Ok(acc)
}

/// Slope analogue: `Σ_{i≤t} (λ_{i+1} − λ_i)·(r·deg E_{λ_i} − r_{λ_i}·deg E)`.
pub fn filtration_degree(x: &SurfaceModel, spec: &SheafFiltrationSpec, total: &SheafClass) -> Result<Rational> {
    spec.validate(total)?;
    let d_total = degree(x, total)?;
    let r = Rational::from(total.rank);
    let mut acc = Rational::zero();
    for i in 0..spec.classes.len() - 1 {
        let gap = Rational::from(spec.weights[i + 1] - spec.weights[i]);
        let term = &r * degree(x, &spec.classes[i])? - Rational::from(spec.classes[i].rank) * &d_total;
        acc += gap * term;
    }
    Ok(acc)
}

/// Unstable if some value is eventually positive, Stable if all are
/// eventually negative; the certificate is the first extremal candidate.
fn classify(values: Vec<(&SheafFiltrationSpec, Poly)>, skipped: usize) -> StabilityVerdict {
    let mut best: Option<(&SheafFiltrationSpec, Poly)> = None;
    for (spec, p) in values {
        if best.as_ref().is_none_or(|(_, b)| p.eventual_cmp(b) == Ordering::Greater) {
            best = Some((spec, p));
        }
    }
    match best {
        None => StabilityVerdict { status: Status::Stable, certificate: None, polynomial: Poly::zero(), skipped },
        Some((spec, p)) => {
            let status = Status::from_sign(p.eventual_sign());
            let certificate = (status != Status::Stable).then(|| spec.clone());
            StabilityVerdict { status, certificate, polynomial: p, skipped }
        }
    }
}

/// Test over the candidates whose fiber flag is a balanced algebra filtration.
pub fn check_gsheaf(x: &SurfaceModel, model: &GSheafModel) -> Result<StabilityVerdict> {
    model.validate()?;
    let mut values = Vec::new();
    for spec in &model.candidates {
        if spec.is_algebra_candidate(&model.fiber) {
            values.push((spec, filtration_hilbert(x, spec, &model.total)?));
        }
    }
    let skipped = model.candidates.len() - values.len();
    Ok(classify(values, skipped))
}

/// `P_{E•} + μ·δ ⪯ 0` over every candidate with a balanced fiber flag, with
/// `μ` the bracket weight of the flag.
pub fn check_tensor(x: &SurfaceModel, model: &GSheafModel, delta: &Poly) -> Result<StabilityVerdict> {
    let expected = x.dim() as usize - 1;
    if delta.degree() != Some(expected) || !delta.leading().is_some_and(Rational::is_positive) {
        return Err(Error::BadDelta { expected });
    }
    model.validate()?;
    let mut values = Vec::new();
    for spec in &model.candidates {
        let Some(flag) = spec.fiber_flag.as_ref().filter(|f| is_balanced(f)) else {
            continue;
        };
        let mu = mu_bracket(&model.fiber, flag)?;
        let p = filtration_hilbert(x, spec, &model.total)? + delta.scale(&Rational::from(mu));
        values.push((spec, p));
    }
    let skipped = model.candidates.len() - values.len();
    Ok(classify(values, skipped))
}

/// [`check_gsheaf`] with degrees in place of Hilbert polynomials.
pub fn check_slope(x: &SurfaceModel, model: &GSheafModel) -> Result<StabilityVerdict> {
    model.validate()?;
    let mut values = Vec::new();
    for spec in &model.candidates {
        if spec.is_algebra_candidate(&model.fiber) {
            values.push((spec, Poly::constant(filtration_degree(x, spec, &model.total)?)));
        }
    }
    let skipped = model.candidates.len() - values.len();
    Ok(classify(values, skipped))
}

/// Gieseker test by one subsheaf: sign of `P_sub/r_sub − P_total/r_total`.
pub fn check_gieseker_pair(x: &SurfaceModel, total: &SheafClass, sub: &SheafClass) -> Result<StabilityVerdict> {
    if sub.rank <= 0 || sub.rank >= total.rank {
        return Err(Error::RankOverflow { step: 0, rank: sub.rank, total: total.rank });
    }
    let p = hilbert_poly(x, sub)?.scale(&Rational::from(sub.rank).recip())
        - hilbert_poly(x, total)?.scale(&Rational::from(total.rank).recip());
    let status = Status::from_sign(p.eventual_sign());
    let certificate = (status != Status::Stable).then(|| SheafFiltrationSpec {
        weights: vec![0, 1],
        classes: vec![sub.clone(), total.clone()],
        fiber_flag: None,
    });
    Ok(StabilityVerdict { status, certificate, polynomial: p, skipped: 0 })
}

/// Harder–Narasimhan filtration of `⊕ summands`: groups of equal slope in
/// decreasing slope order, steps the partial sums, weights `−r!·μ(group)`.
pub fn hn_filtration(x: &SurfaceModel, summands: &[SheafClass]) -> Result<SheafFiltrationSpec> {
    if summands.is_empty() {
        return Err(Error::EmptySummands);
    }
    let mut with_slope = summands
        .iter()
        .map(|s| slope(x, s).map(|m| (m, s.clone())))
        .collect::<Result<Vec<_>>>()?;
    with_slope.sort_by(|a, b| b.0.cmp(&a.0));
    let total_rank: i64 = summands.iter().map(|s| s.rank).sum();
    let factorial = (1..=total_rank)
        .try_fold(1i64, |acc, k| acc.checked_mul(k))
        .ok_or_else(|| Error::Unsupported(format!("rank {total_rank} too large")))?;

    let mut weights = Vec::new();
    let mut classes = Vec::new();
    let mut acc: Vec<SheafClass> = Vec::new();
    let mut i = 0;
    while i < with_slope.len() {
        let mu = with_slope[i].0.clone();
        let mut group = Vec::new();
        while i < with_slope.len() && with_slope[i].0 == mu {
            group.push(with_slope[i].1.clone());
            i += 1;
        }
        let group_class = sum_class(&group)?;
        let w = -(slope(x, &group_class)? * Rational::from(factorial));
        weights.push(w.to_i64().expect("r!·μ is an integer"));
        acc.push(group_class);
        classes.push(sum_class(&acc)?);
    }
    Ok(SheafFiltrationSpec { weights, classes, fiber_flag: None })
}

/// Vertices `(rank, degree)` of the polygon of a filtration, from the origin.
pub fn hn_polygon(x: &SurfaceModel, spec: &SheafFiltrationSpec) -> Result<Vec<(i64, Rational)>> {
    let mut out = vec![(0, Rational::zero())];
    for c in &spec.classes {
        out.push((c.rank, degree(x, c)?));
    }
    Ok(out)
}

/// Successive edge slopes strictly decrease.
pub fn is_strictly_convex(polygon: &[(i64, Rational)]) -> bool {
    let slopes: Vec<Rational> = polygon
        .windows(2)
        .map(|w| (&w[1].1 - &w[0].1) / Rational::from(w[1].0 - w[0].0))
        .collect();
    slopes.windows(2).all(|s| s[0] > s[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn proportional_step_gives_zero() {
        let x = SurfaceModel::p2();
        let o = SheafClass::line_bundle(&x, &[0], "O");
        let total = sum_class(&[o.clone(), o.clone()]).unwrap();
        let spec = SheafFiltrationSpec { weights: vec![-1, 1], classes: vec![o, total.clone()], fiber_flag: None };
        assert!(filtration_hilbert(&x, &spec, &total).unwrap().is_zero());
    }

    #[test]
    fn rank_checks() {
        let x = SurfaceModel::p2();
        let o = SheafClass::line_bundle(&x, &[0], "O");
        let total = sum_class(&[o.clone(), o.clone()]).unwrap();
        let bad = SheafFiltrationSpec {
            weights: vec![-1, 0, 1],
            classes: vec![o.clone(), total.clone(), total.clone()],
            fiber_flag: None,
        };
        assert!(matches!(filtration_hilbert(&x, &bad, &total), Err(Error::RankOverflow { .. })));
        assert!(check_gieseker_pair(&x, &total, &total).is_err());
    }

    #[test]
    fn hn_examples() {
        let p2 = SurfaceModel::p2();
        let sums: Vec<SheafClass> =
            [1, 0, -1].iter().map(|&d| SheafClass::line_bundle(&p2, &[d], format!("O({d})"))).collect();
        let hn = hn_filtration(&p2, &sums).unwrap();
        assert_eq!(hn.weights, vec![-6, 0, 6]);
        assert_eq!(hn.classes.iter().map(|c| c.rank).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert!(is_strictly_convex(&hn_polygon(&p2, &hn).unwrap()));

        let o = SheafClass::line_bundle(&p2, &[0], "O");
        let flat = hn_filtration(&p2, &[o.clone(), o.clone(), o]).unwrap();
        assert_eq!(flat.weights, vec![0]);
        assert_eq!(flat.classes.len(), 1);

        let x = SurfaceModel::blowup_p2();
        let pair = [SheafClass::line_bundle(&x, &[0, 1], "O(R)"), SheafClass::line_bundle(&x, &[0, -1], "O(-R)")];
        assert_eq!(hn_filtration(&x, &pair).unwrap().weights, vec![-2, 2]);
        assert_eq!(hn_filtration(&x, &[]), Err(Error::EmptySummands));
    }

    #[test]
    fn bad_delta() {
        let model = example2_model(4, -6).unwrap();
        let x = model.surface.clone();
        assert!(matches!(check_tensor(&x, &model, &Poly::from_ints(&[1])), Err(Error::BadDelta { expected: 1 })));
        assert!(check_tensor(&x, &model, &Poly::from_ints(&[0, -1])).is_err());
        assert!(check_tensor(&x, &model, &Poly::from_ints(&[0, 0, 1])).is_err());
    }
}
