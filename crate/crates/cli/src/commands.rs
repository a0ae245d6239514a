use liesheaf::filtration::{
    graded_limit, is_algebra_filtration, is_balanced, is_orthogonal_filtration, limit_isomorphism, mu_bracket,
    mu_tensor, random_flag, GradedSplitting,
};
use liesheaf::io::{from_json, FlagFile, SplitSheafFile};
use liesheaf::liecore::LieAlgebraFile;
use liesheaf::parabolic::{filtration_from_element, parabolic_from_filtration, random_algebra_flag};
use liesheaf::stability::{
    check_gsheaf, check_slope, check_tensor, example1_report, example2_report, example2_table, grad_with_trace,
    hn_filtration, hn_polygon, is_strictly_convex,
};
use liesheaf::{sl, Error, GSheafModel, LieAlgebra, Poly, Rational, StabilityVerdict, WeightedFlag};
use serde_json::json;

use crate::report::{read, yes_no, CliError, CliResult, Report};
use crate::{Cli, Command};

pub fn run(cli: &Cli) -> CliResult<Report> {
    match cli.command {
        Command::LieCheck => lie_check(cli),
        Command::Killing => killing(cli),
        Command::FiltAnalyze => filt_analyze(cli),
        Command::ParabRoundtrip => parab_roundtrip(cli),
        Command::StabCheck => stab_check(cli),
        Command::Hn => hn(cli),
        Command::Grad => grad(cli),
        Command::Example1 => example1(),
        Command::Example2 => example2(cli),
        Command::Table => table(),
    }
}

fn input_text(cli: &Cli) -> CliResult<String> {
    let path = cli.input.as_ref().ok_or_else(|| CliError::Input("--input is required".into()))?;
    read(path)
}

fn vec_str(v: &[Rational]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn list<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn load_algebra(cli: &Cli) -> CliResult<LieAlgebra> {
    let file: LieAlgebraFile = from_json(&input_text(cli)?)?;
    Ok(file.build()?)
}

fn lie_check(cli: &Cli) -> CliResult<Report> {
    let g = load_algebra(cli)?;
    let semisimple = g.is_semisimple();
    let mut r = Report::new(json!({
        "dim": g.dim(),
        "antisymmetric": true,
        "jacobi": true,
        "semisimple": semisimple,
    }));
    r.line(format!("dim: {}", g.dim()))
        .line("antisymmetric: yes")
        .line("jacobi: yes")
        .line(format!("semisimple: {}", yes_no(semisimple)));
    Ok(r)
}

fn killing(cli: &Cli) -> CliResult<Report> {
    let g = load_algebra(cli)?;
    let k = g.killing_matrix();
    let det = g.killing_det();
    let (pos, neg, zero) = k.inertia();
    let rows = k.to_rows();
    let mut r = Report::new(json!({
        "killing": rows,
        "det": det,
        "inertia": [pos, neg, zero],
    }));
    for row in &rows {
        r.line(format!("[{}]", list(row)));
    }
    r.line(format!("det κ = {det}"));
    r.line(format!("inertia: +{pos} -{neg} 0x{zero}"));
    Ok(r)
}

/// Sole `sl(n)` of dimension `d`, if any.
fn sl_of_dim(d: usize) -> CliResult<LieAlgebra> {
    let n = (2..=16).find(|n| n * n - 1 == d).ok_or_else(|| {
        CliError::Input(format!("no algebra given and {d} is not the dimension of any sl(n)"))
    })?;
    Ok(sl(n)?)
}

fn extra_algebra(cli: &Cli) -> CliResult<Option<LieAlgebra>> {
    match &cli.algebra {
        Some(p) => {
            let file: LieAlgebraFile = from_json(&read(p)?)?;
            Ok(Some(file.build()?))
        }
        None => Ok(None),
    }
}

/// Flag from `--input`, or a seeded random one; the algebra comes from the
/// flag file, then `--algebra`, then `sl(n)` by dimension (`sl2` when random).
fn load_flag(cli: &Cli, algebra_flag: bool) -> CliResult<(LieAlgebra, WeightedFlag)> {
    if cli.input.is_none() {
        let seed = cli
            .seed
            .ok_or_else(|| CliError::Input("--input or --seed is required".into()))?;
        let g = match extra_algebra(cli)? {
            Some(g) => g,
            None => sl(2)?,
        };
        let flag = if algebra_flag { random_algebra_flag(&g, seed)? } else { random_flag(&g, seed) };
        return Ok((g, flag));
    }
    let file: FlagFile = from_json(&input_text(cli)?)?;
    let flag = file.build()?;
    let g = match (&file.algebra, extra_algebra(cli)?) {
        (Some(a), _) => a.clone().build()?,
        (None, Some(g)) => g,
        (None, None) => sl_of_dim(flag.ambient_dim())?,
    };
    if g.dim() != flag.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), got: flag.ambient_dim() }.into());
    }
    Ok((g, flag))
}

fn filt_analyze(cli: &Cli) -> CliResult<Report> {
    let (g, flag) = load_flag(cli, false)?;
    let balanced = is_balanced(&flag);
    let algebra = is_algebra_filtration(&g, &flag)?;
    let orthogonal = match is_orthogonal_filtration(&g, &flag) {
        Ok(b) => Some(b),
        Err(Error::NotSemisimple) => None,
        Err(e) => return Err(e.into()),
    };
    let undefined = |r: Result<i64, Error>| match r {
        Ok(m) => Ok(Some(m)),
        Err(Error::MuUndefined) => Ok(None),
        Err(e) => Err(e),
    };
    let mu = undefined(mu_bracket(&g, &flag))?;
    let mu_t = undefined(mu_tensor(&g, &flag))?;
    let show = |m: Option<i64>| m.map_or("undefined".to_string(), |m| m.to_string());
    let mut r = Report::new(json!({
        "flag": flag,
        "balanced": balanced,
        "algebra": algebra,
        "orthogonal": orthogonal,
        "mu_bracket": mu,
        "mu_tensor": mu_t,
    }));
    r.line(format!(
        "balanced: {}, algebra: {}, orthogonal: {}, μ = {}",
        yes_no(balanced),
        yes_no(algebra),
        orthogonal.map_or("n/a", yes_no),
        show(mu)
    ));
    r.line(format!("weights: {}", list(flag.weights())));
    r.line(format!("dims: {}", list(&flag.steps().iter().map(|s| s.dim()).collect::<Vec<_>>())));
    r.line(format!("mu_bracket: {}", show(mu)));
    r.line(format!("mu_tensor: {}", show(mu_t)));
    if balanced && mu.is_some_and(|m| m >= 0) {
        let lim = graded_limit(&g, &flag, &GradedSplitting::echelon(&flag))?;
        let verdict = limit_isomorphism(&g, &lim);
        r.line(format!("graded limit det κ: {}", lim.killing_det()));
        r.line(format!("graded limit: {verdict:?}").to_lowercase());
    }
    Ok(r)
}

fn parab_roundtrip(cli: &Cli) -> CliResult<Report> {
    let (g, flag) = load_flag(cli, true)?;
    let data = parabolic_from_filtration(&g, &flag)?;
    let back = filtration_from_element(&g, &data.v)?;
    let agrees = back == flag;
    let eig: Vec<i64> = data.eigengrading.iter().map(|(a, _)| *a).collect();
    let mut r = Report::new(json!({
        "flag": flag,
        "parabolic_data": data,
        "recovered": back,
        "roundtrip": agrees,
    }));
    r.line(format!("v: {}", vec_str(&data.v)))
        .line(format!("eigenvalues: {}", list(&eig)))
        .line(format!("parabolic dim: {}", data.parabolic.dim()))
        .line(format!("character: {}", vec_str(&data.character)))
        .line(format!("recovered weights: {}", list(back.weights())))
        .line(format!("roundtrip: {}", yes_no(agrees)));
    Ok(r)
}

fn load_model(cli: &Cli) -> CliResult<GSheafModel> {
    let model: GSheafModel = from_json(&input_text(cli)?)?;
    model.validate()?;
    Ok(model)
}

fn verdict_lines(r: &mut Report, name: &str, v: &StabilityVerdict) {
    r.line(format!("{name}: {}", v.status));
    r.line(format!("{name} polynomial: {}", v.polynomial));
    if let Some(c) = &v.certificate {
        let ranks: Vec<i64> = c.classes.iter().map(|k| k.rank).collect();
        r.line(format!("{name} certificate: weights [{}], ranks [{}]", list(&c.weights), list(&ranks)));
    }
    if v.skipped > 0 {
        r.line(format!("{name} skipped candidates: {}", v.skipped));
    }
}

fn stab_check(cli: &Cli) -> CliResult<Report> {
    let model = load_model(cli)?;
    let x = &model.surface;
    let delta = if x.dim() == 2 { Poly::from_ints(&[0, 1]) } else { Poly::from_ints(&[1]) };
    let gs = check_gsheaf(x, &model)?;
    let sl = check_slope(x, &model)?;
    let tn = check_tensor(x, &model, &delta)?;
    let mut r = Report::new(json!({ "gsheaf": gs, "slope": sl, "tensor": tn, "delta": delta }));
    verdict_lines(&mut r, "gsheaf", &gs);
    verdict_lines(&mut r, "slope", &sl);
    verdict_lines(&mut r, &format!("tensor(δ = {delta})"), &tn);
    Ok(r)
}

fn hn(cli: &Cli) -> CliResult<Report> {
    let file: SplitSheafFile = from_json(&input_text(cli)?)?;
    file.surface.validate()?;
    let spec = hn_filtration(&file.surface, &file.summands)?;
    let polygon = hn_polygon(&file.surface, &spec)?;
    let convex = is_strictly_convex(&polygon);
    let ranks: Vec<i64> = spec.classes.iter().map(|c| c.rank).collect();
    let mut r = Report::new(json!({ "filtration": spec, "polygon": polygon, "convex": convex }));
    r.line(format!("weights: {}", list(&spec.weights)))
        .line(format!("ranks: {}", list(&ranks)))
        .line(format!(
            "polygon: {}",
            polygon.iter().map(|(a, b)| format!("({a}, {b})")).collect::<Vec<_>>().join(" ")
        ))
        .line(format!("convex: {}", yes_no(convex)));
    Ok(r)
}

fn grad(cli: &Cli) -> CliResult<Report> {
    let model = load_model(cli)?;
    let (g, iterations) = grad_with_trace(&model)?;
    let verdict = limit_isomorphism(&model.fiber, &g.fiber);
    let det = g.fiber.killing_det();
    let mut r = Report::new(json!({
        "iterations": iterations,
        "model": g,
        "fiber_det": det,
        "fiber_isomorphism": verdict,
        "canonical_form": liesheaf::stability::canonical_form(&g),
    }));
    r.line(format!("iterations: {iterations}"));
    if let Some(p) = &g.pieces {
        let ranks: Vec<i64> = p.iter().map(|c| c.rank).collect();
        r.line(format!("graded pieces: {} (ranks {})", p.len(), list(&ranks)));
    } else {
        r.line("graded pieces: none");
    }
    r.line(format!("fiber det κ: {det}"));
    r.line(format!("fiber: {verdict:?}").to_lowercase());
    Ok(r)
}

fn example1() -> CliResult<Report> {
    let rep = example1_report()?;
    let mut r = Report::new(&rep);
    r.line(format!("c2(End0 F) = {}", rep.c2_ad_f))
        .line(format!("moduli dimension: {}", rep.gm_moduli_dim))
        .line(format!("quot dimension: {}", rep.quot_dim))
        .line(format!("extension class c2: {} (declared {})", rep.extension_class_c2, rep.declared_c2));
    if let Some(d) = &rep.discrepancy {
        r.line(format!("discrepancy: {d}"));
    }
    Ok(r)
}

fn example2(cli: &Cli) -> CliResult<Report> {
    let (Some(c), Some(s)) = (cli.c, cli.s) else {
        return Err(CliError::Input("example2 needs --c and --s".into()));
    };
    let rep = example2_report(c, s)?;
    let mut r = Report::new(&rep);
    r.line(format!("vector: {}, principal: {}", rep.vb_verdict, rep.pb_verdict))
        .line(format!("slope F: {}", rep.slope_f))
        .line(format!("gieseker constant: {} (closed form {})", rep.gieseker_poly, rep.gieseker_reference))
        .line(format!("P_E•: {} (closed form {})", rep.pe_poly, rep.pe_reference));
    Ok(r)
}

fn table() -> CliResult<Report> {
    let rows = example2_table()?;
    let mut r = Report::new(&rows);
    for row in &rows {
        let mark = |ok: bool| if ok { "agrees" } else { "differs" };
        r.line(format!(
            "({}, {}): vector {} (reference {}, {}), principal {} (reference {}, {})",
            row.c,
            row.s,
            row.vector,
            row.reference_vector,
            mark(row.vector_agrees),
            row.principal,
            row.reference_principal,
            mark(row.principal_agrees)
        ));
    }
    Ok(r)
}
