use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{EventualSign, Rational};
use crate::filtration::{graded_limit_with_basis, GradedSplitting};

use super::{check_gsheaf, filtration_hilbert, GSheafModel, SheafFiltrationSpec, Status};
use crate::geom::difference_class;

/// Isomorphism proxy used by [`grad`]: multiset of graded-piece classes and
/// the fiber, either recognized as `sl2` (every 3-dimensional semisimple
/// algebra) or given by its structure constants.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CanonicalForm {
    pub pieces: Vec<(i64, Vec<Rational>, Rational)>,
    pub fiber: FiberForm,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FiberForm {
    Sl2,
    Constants(Vec<(usize, usize, usize, Rational)>),
}

pub fn canonical_form(model: &GSheafModel) -> CanonicalForm {
    let classes = model.pieces.clone().unwrap_or_else(|| vec![model.total.clone()]);
    let mut pieces: Vec<_> = classes.into_iter().map(|c| (c.rank, c.c1, c.ch2)).collect();
    pieces.sort();
    let fiber = if model.fiber.dim() == 3 && model.fiber.is_semisimple() {
        FiberForm::Sl2
    } else {
        FiberForm::Constants(model.fiber.constants().upper_entries())
    };
    CanonicalForm { pieces, fiber }
}

fn is_admissible(model: &GSheafModel, spec: &SheafFiltrationSpec) -> Result<bool> {
    Ok(spec.is_algebra_candidate(&model.fiber)
        && filtration_hilbert(&model.surface, spec, &model.total)?.eventual_sign() == EventualSign::Zero)
}

/// Passage to the associated graded object of an admissible filtration:
/// the fiber becomes the graded limit along its flag, the classes split
/// into the graded pieces, and the other candidates' flags are carried into
/// the new basis.
pub fn admissible_deformation(model: &GSheafModel, spec: &SheafFiltrationSpec) -> Result<GSheafModel> {
    model.validate()?;
    if !is_admissible(model, spec)? {
        return Err(Error::NotAdmissible);
    }
    let flag = spec.fiber_flag.as_ref().expect("algebra candidates carry a flag");
    let (fiber, basis) = graded_limit_with_basis(&model.fiber, flag, &GradedSplitting::echelon(flag))?;
    let to_new = basis.inverse().expect("adapted basis is invertible");
    let candidates = model
        .candidates
        .iter()
        .map(|c| {
            let fiber_flag = c.fiber_flag.as_ref().map(|f| f.transform(&to_new)).transpose()?;
            Ok(SheafFiltrationSpec { fiber_flag, ..c.clone() })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut pieces = vec![spec.classes[0].clone()];
    for w in spec.classes.windows(2) {
        pieces.push(difference_class(&w[1], &w[0])?);
    }
    Ok(GSheafModel {
        surface: model.surface.clone(),
        total: model.total.clone(),
        fiber,
        candidates,
        invariants_tau: model.invariants_tau.clone(),
        pieces: Some(pieces),
    })
}

/// [`grad`] together with the number of deformations performed.
pub fn grad_with_trace(model: &GSheafModel) -> Result<(GSheafModel, usize)> {
    if check_gsheaf(&model.surface, model)?.status == Status::Unstable {
        return Err(Error::Unstable);
    }
    let bound = model.fiber.dim() + 1;
    let mut current = model.clone();
    for iteration in 1..=bound {
        let mut next_spec = None;
        for spec in &current.candidates {
            if is_admissible(&current, spec)? {
                next_spec = Some(spec.clone());
                break;
            }
        }
        let Some(spec) = next_spec else {
            return Ok((current, iteration - 1));
        };
        let next = admissible_deformation(&current, &spec)?;
        if canonical_form(&next) == canonical_form(&current) {
            return Ok((next, iteration));
        }
        current = next;
    }
    Ok((current, bound))
}

/// Iterated admissible deformation until the canonical form stops changing
/// or no admissible candidate is left.
pub fn grad(model: &GSheafModel) -> Result<GSheafModel> {
    grad_with_trace(model).map(|(m, _)| m)
}

pub fn s_equivalent(a: &GSheafModel, b: &GSheafModel) -> Result<bool> {
    Ok(canonical_form(&grad(a)?) == canonical_form(&grad(b)?))
}
