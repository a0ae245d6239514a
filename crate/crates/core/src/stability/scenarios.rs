//! Worked scenarios: an `sl2`-sheaf on `P²` with `(r, c1, c2) = (2, 1, 2)`,
//! rank-2 bundles on the blow-up of `P²` at a point built from
//! `L = O(sR)`, `M = O(−cD + (c+s)R)` and a point, and split models.

use serde::Serialize;

use crate::error::Result;
use crate::exactmath::{Poly, Rational};
use crate::filtration::WeightedFlag;
use crate::geom::{
    c2_from_ch, ch2_from_c2, difference_class, dual_class, end0_class, hilbert_poly, moduli_dim_gm, point_twist,
    quot_dim, slope, sum_class, tensor_class, SheafClass, SurfaceModel,
};
use crate::liecore::{sl, LieAlgebra, Subspace};

use super::{check_gieseker_pair, check_gsheaf, filtration_hilbert, hn_filtration, GSheafModel, SheafFiltrationSpec, Status};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Example1Report {
    pub c2_ad_f: Rational,
    pub gm_moduli_dim: i64,
    pub quot_dim: i64,
    /// `c2` of the extension `0 → O → F → O(1)⊗I_p → 0`.
    pub extension_class_c2: Rational,
    pub declared_c2: Rational,
    pub discrepancy: Option<String>,
}

pub fn example1_report() -> Result<Example1Report> {
    let p2 = SurfaceModel::p2();
    let one = [Rational::one()];
    let declared_c2 = Rational::from(2);
    let f = SheafClass::new(2, one.to_vec(), ch2_from_c2(&p2, &one, &declared_c2), "F");
    let adf = end0_class(&p2, &f)?;
    let o = SheafClass::line_bundle(&p2, &[0], "O");
    let o1 = SheafClass::line_bundle(&p2, &[1], "O(1)");
    let extension = sum_class(&[o, point_twist(&o1, 1)])?;
    let extension_class_c2 = c2_from_ch(&p2, &extension)?;
    let discrepancy = (extension_class_c2 != declared_c2).then(|| {
        format!("extension class has c2 = {extension_class_c2}, declared c2 = {declared_c2}")
    });
    Ok(Example1Report {
        c2_ad_f: c2_from_ch(&p2, &adf)?,
        gm_moduli_dim: moduli_dim_gm(2, 1, 2)?,
        quot_dim: quot_dim(adf.rank, 4)?,
        extension_class_c2,
        declared_c2,
        discrepancy,
    })
}

/// `span(e) ⊂ span(e, h) ⊂ sl2` with weights `(−a, 0, a)`.
fn borel_flag(a: i64) -> WeightedFlag {
    WeightedFlag::new(
        vec![-a, 0, a],
        vec![Subspace::span_units(3, &[1]), Subspace::span_units(3, &[0, 1]), Subspace::whole(3)],
    )
    .expect("Borel flag is valid")
}

fn sl2() -> LieAlgebra {
    sl(2).expect("sl2 exists")
}

struct Example2Classes {
    x: SurfaceModel,
    l: SheafClass,
    f: SheafClass,
    e: SheafClass,
    principal: SheafFiltrationSpec,
}

fn example2_classes(c: i64, s: i64) -> Result<Example2Classes> {
    let x = SurfaceModel::blowup_p2();
    let l = SheafClass::line_bundle(&x, &[0, s], "L");
    let m = SheafClass::line_bundle(&x, &[-c, c + s], "M");
    let f = point_twist(&sum_class(&[l.clone(), m.clone()])?, 1).with_label("F");
    let e = end0_class(&x, &f)?.with_label("E");
    let e_low = tensor_class(&x, &dual_class(&m), &l)?.with_label("E_-1");
    // kernel of E → L^∨⊗M⊗I_Z with Z = p², length 3
    let lm = tensor_class(&x, &dual_class(&l), &m)?;
    let e_mid = point_twist(&difference_class(&e, &lm)?, -3).with_label("E_0");
    let principal = SheafFiltrationSpec {
        weights: vec![-1, 0, 1],
        classes: vec![e_low, e_mid, e.clone()],
        fiber_flag: Some(borel_flag(1)),
    };
    Ok(Example2Classes { x, l, f, e, principal })
}

/// The `sl2`-sheaf `End⁰(F)` with its parabolic filtration as sole candidate.
pub fn example2_model(c: i64, s: i64) -> Result<GSheafModel> {
    let k = example2_classes(c, s)?;
    let model = GSheafModel {
        surface: k.x,
        total: k.e,
        fiber: sl2(),
        candidates: vec![k.principal],
        invariants_tau: Vec::new(),
        pieces: None,
    };
    model.validate()?;
    Ok(model)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Example2Report {
    pub c: i64,
    pub s: i64,
    pub slope_f: Rational,
    /// `P_L − P_F/2`.
    pub gieseker_poly: Poly,
    /// Reference closed form `(3c² + (2s−1)c + 2)/2`.
    pub gieseker_reference: Rational,
    /// `gieseker_poly / gieseker_reference` when the latter is nonzero.
    pub gieseker_factor: Option<Rational>,
    pub gieseker_sign_agrees: bool,
    pub pe_poly: Poly,
    /// Reference closed form `3(3 − c)`.
    pub pe_reference: Rational,
    pub pe_agrees: bool,
    pub vb_verdict: Status,
    pub pb_verdict: Status,
}

pub fn example2_report(c: i64, s: i64) -> Result<Example2Report> {
    let k = example2_classes(c, s)?;
    let gieseker_poly = hilbert_poly(&k.x, &k.l)? - hilbert_poly(&k.x, &k.f)?.scale(&Rational::new(1, 2));
    let gieseker_reference = Rational::new(3 * c * c + (2 * s - 1) * c + 2, 2);
    let g0 = gieseker_poly.coeff(0);
    let gieseker_factor = (!gieseker_reference.is_zero()).then(|| &g0 / &gieseker_reference);
    let model = example2_model(c, s)?;
    let pe_poly = filtration_hilbert(&k.x, &k.principal, &k.e)?;
    let pe_reference = Rational::from(3 * (3 - c));
    Ok(Example2Report {
        c,
        s,
        slope_f: slope(&k.x, &k.f)?,
        gieseker_sign_agrees: gieseker_poly.degree().unwrap_or(0) == 0 && g0.signum() == gieseker_reference.signum(),
        gieseker_poly,
        gieseker_reference,
        gieseker_factor,
        pe_agrees: pe_poly == Poly::constant(pe_reference.clone()),
        pe_poly,
        pe_reference,
        vb_verdict: check_gieseker_pair(&k.x, &k.f, &k.l)?.status,
        pb_verdict: check_gsheaf(&model.surface, &model)?.status,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TableRow {
    pub c: i64,
    pub s: i64,
    pub vector: Status,
    pub principal: Status,
    pub reference_vector: Status,
    pub reference_principal: Status,
    pub vector_agrees: bool,
    pub principal_agrees: bool,
}

/// The seven reference rows, recomputed.
pub fn example2_table() -> Result<Vec<TableRow>> {
    use Status::*;
    let reference = [
        (-1, 4, Unstable, Unstable),
        (-1, 3, StrictlySemistable, Unstable),
        (-1, 2, Stable, Unstable),
        (3, -4, Unstable, StrictlySemistable),
        (3, -5, Stable, StrictlySemistable),
        (4, -5, Unstable, Stable),
        (4, -6, Stable, Stable),
    ];
    reference
        .iter()
        .map(|&(c, s, pv, pp)| {
            let r = example2_report(c, s)?;
            Ok(TableRow {
                c,
                s,
                vector: r.vb_verdict,
                principal: r.pb_verdict,
                reference_vector: pv,
                reference_principal: pp,
                vector_agrees: r.vb_verdict == pv,
                principal_agrees: r.pb_verdict == pp,
            })
        })
        .collect()
}

/// `End⁰(O ⊕ O(d))` on `P²`, with the Borel filtration and (for `d ≠ 0`)
/// the Harder–Narasimhan filtration as candidates.
pub fn split_model(d: i64) -> Result<GSheafModel> {
    let p2 = SurfaceModel::p2();
    let a = d.abs();
    let summands: Vec<SheafClass> =
        [a, 0, -a].iter().map(|&k| SheafClass::line_bundle(&p2, &[k], format!("O({k})"))).collect();
    let total = sum_class(&summands)?.with_label("E");
    let classes = vec![summands[0].clone(), sum_class(&summands[..2])?, total.clone()];
    let mut candidates =
        vec![SheafFiltrationSpec { weights: vec![-1, 0, 1], classes, fiber_flag: Some(borel_flag(1)) }];
    if a != 0 {
        let mut hn = hn_filtration(&p2, &summands)?;
        hn.fiber_flag = Some(borel_flag(hn.weights[2]));
        candidates.push(hn);
    }
    let model =
        GSheafModel { surface: p2, total, fiber: sl2(), candidates, invariants_tau: Vec::new(), pieces: None };
    model.validate()?;
    Ok(model)
}

/// Named models exercised by the suites: the table rows, further `c` values
/// and split models.
pub fn scenario_models() -> Result<Vec<(String, GSheafModel)>> {
    let mut out = Vec::new();
    for (c, s) in [(-1, 4), (-1, 3), (-1, 2), (3, -4), (3, -5), (4, -5), (4, -6), (0, 0), (2, 1), (5, -3)] {
        out.push((format!("example2(c={c}, s={s})"), example2_model(c, s)?));
    }
    for d in [0, 1, 2] {
        out.push((format!("split(d={d})"), split_model(d)?));
    }
    Ok(out)
}
