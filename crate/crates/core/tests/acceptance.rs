//! One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use liesheaf::exactmath::{Matrix, Poly, Rational};
use liesheaf::filtration::{
    graded_limit, is_algebra_filtration, is_balanced, is_orthogonal_filtration, limit_isomorphism, mu_bracket,
    mu_tensor, random_flag, GradedSplitting, IsomorphismVerdict,
};
use liesheaf::geom::{c2_from_ch, ch2_from_c2, degree, end0_class, hilbert_poly};
use liesheaf::parabolic::{
    filtration_from_element, parabolic_from_filtration, random_algebra_flag, roundtrip_check, standard_algebra_flags,
};
use liesheaf::stability::{
    check_gsheaf, check_slope, check_tensor, example1_report, example2_model, example2_report, example2_table,
    grad, grad_with_trace, hn_filtration, hn_polygon, is_strictly_convex, scenario_models, Status,
};
use liesheaf::{sl, LieAlgebra, SheafClass, SurfaceModel, WeightedFlag};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// sl2 and sl3 corpus: parabolic-generated, random algebra, random, and
/// shifted (unbalanced) flags.
fn corpus() -> Vec<(LieAlgebra, Vec<WeightedFlag>)> {
    [2usize, 3]
        .iter()
        .map(|&n| {
            let g = sl(n).unwrap();
            let mut flags = standard_algebra_flags(&g);
            for seed in 0..40 {
                flags.push(random_algebra_flag(&g, seed).unwrap());
                flags.push(random_flag(&g, 1000 + seed));
            }
            let shifted: Vec<WeightedFlag> = flags.iter().take(10).map(|f| f.shifted(1)).collect();
            flags.extend(shifted);
            (g, flags)
        })
        .collect()
}

fn killing_and_semisimplicity() -> Outcome {
    let g = sl(2).map_err(fail)?;
    let expected = Matrix::from_ints(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]);
    ensure!(*g.killing_matrix() == expected, "Killing matrix {:?}", g.killing_matrix());
    ensure!(g.killing_det() == q(-128), "det κ = {}", g.killing_det());
    for n in 2..=4 {
        ensure!(sl(n).map_err(fail)?.is_semisimple(), "sl({n}) not semisimple");
    }
    Ok("κ(sl2) = [[8,0,0],[0,0,4],[0,4,0]], det -128; sl2..sl4 semisimple".into())
}

fn mu_nonpositive() -> Outcome {
    let mut algebra = 0;
    let mut total = 0;
    for (n, count) in [(2usize, 500u64), (3, 200)] {
        let g = sl(n).map_err(fail)?;
        for seed in 0..count {
            let f = random_flag(&g, seed);
            ensure!(is_balanced(&f), "sl{n} seed {seed}: unbalanced flag");
            let mu = mu_bracket(&g, &f).map_err(fail)?;
            let alg = is_algebra_filtration(&g, &f).map_err(fail)?;
            ensure!(mu <= 0, "sl{n} seed {seed}: μ = {mu}");
            ensure!((mu == 0) == alg, "sl{n} seed {seed}: μ = {mu}, algebra = {alg}");
            algebra += alg as usize;
            total += 1;
        }
    }
    Ok(format!("{total} flags, {algebra} algebra flags with μ = 0"))
}

fn mu_routes_agree() -> Outcome {
    let g = sl(2).map_err(fail)?;
    for seed in 0..100 {
        let f = random_flag(&g, seed);
        let (b, t) = (mu_bracket(&g, &f).map_err(fail)?, mu_tensor(&g, &f).map_err(fail)?);
        ensure!(b == t, "seed {seed}: bracket {b}, tensor {t}");
    }
    Ok("100 sl2 flags, tensor weight = bracket weight".into())
}

fn self_orthogonality(corpus: &[(LieAlgebra, Vec<WeightedFlag>)]) -> Outcome {
    let (mut yes, mut no) = (0, 0);
    for (g, flags) in corpus {
        for (i, f) in flags.iter().enumerate() {
            let lhs = is_balanced(f) && is_algebra_filtration(g, f).map_err(fail)?;
            let rhs = is_orthogonal_filtration(g, f).map_err(fail)?;
            ensure!(lhs == rhs, "dim {} flag {i}: balanced∧algebra = {lhs}, orthogonal = {rhs}", g.dim());
            if lhs {
                yes += 1;
            } else {
                no += 1;
            }
        }
    }
    Ok(format!("{yes} orthogonal, {no} not"))
}

fn graded_limits(corpus: &[(LieAlgebra, Vec<WeightedFlag>)]) -> Outcome {
    let mut count = 0;
    for (g, flags) in corpus {
        for (i, f) in flags.iter().enumerate() {
            if !(is_balanced(f) && is_algebra_filtration(g, f).map_err(fail)?) {
                continue;
            }
            let lim = graded_limit(g, f, &GradedSplitting::echelon(f)).map_err(fail)?;
            ensure!(lim.check_jacobi(), "dim {} flag {i}: limit fails Jacobi", g.dim());
            ensure!(lim.is_semisimple(), "dim {} flag {i}: limit not semisimple", g.dim());
            ensure!(lim.killing_det() == g.killing_det(), "dim {} flag {i}: det {}", g.dim(), lim.killing_det());
            if g.dim() == 3 {
                let v = limit_isomorphism(g, &lim);
                ensure!(v == IsomorphismVerdict::Certified, "sl2 flag {i}: {v:?}");
            }
            count += 1;
        }
    }
    Ok(format!("{count} limits, det κ preserved"))
}

fn parabolic_round_trip() -> Outcome {
    let mut count = 0;
    for n in [2usize, 3] {
        let g = sl(n).map_err(fail)?;
        let mut flags = standard_algebra_flags(&g);
        flags.extend((0..40).map(|seed| random_algebra_flag(&g, seed).unwrap()));
        for (i, f) in flags.iter().enumerate() {
            ensure!(roundtrip_check(&g, f).map_err(fail)?, "sl{n} flag {i}: round trip failed");
            let data = parabolic_from_filtration(&g, f).map_err(fail)?;
            let recovered = filtration_from_element(&g, &data.v).map_err(fail)?;
            let mut weights = recovered.weights().to_vec();
            let mut negated: Vec<i64> = data.eigengrading.iter().map(|(a, _)| -a).collect();
            weights.sort_unstable();
            negated.sort_unstable();
            negated.dedup();
            ensure!(weights == negated, "sl{n} flag {i}: weights {weights:?}, −eigenvalues {negated:?}");
            count += 1;
        }
    }
    Ok(format!("{count} flags"))
}

fn riemann_roch() -> Outcome {
    let p2 = SurfaceModel::p2();
    let o = SheafClass::line_bundle(&p2, &[0], "O");
    let expected = Poly::new(vec![q(1), Rational::new(3, 2), Rational::new(1, 2)]);
    ensure!(hilbert_poly(&p2, &o).map_err(fail)? == expected, "P_O(P²) = {}", hilbert_poly(&p2, &o).unwrap());
    let x = SurfaceModel::blowup_p2();
    ensure!(x.h_squared() == q(3), "H² = {}", x.h_squared());
    ensure!(x.k_dot_h() == q(-5), "K·H = {}", x.k_dot_h());
    for a in -3..=3 {
        for b in -3..=3 {
            let l = SheafClass::line_bundle(&x, &[a, b], "L");
            ensure!(degree(&x, &l).map_err(fail)? == q(a + b), "deg O({a}D+{b}R)");
        }
    }
    for s in -7..=7 {
        let l = SheafClass::line_bundle(&x, &[0, s], "O(sR)");
        let p = hilbert_poly(&x, &l).map_err(fail)?;
        let expected = Poly::new(vec![q(s + 1), q(s) + Rational::new(5, 2), Rational::new(3, 2)]);
        ensure!(p == expected, "P_O({s}R) = {p}");
    }
    Ok("P²: (m+1)(m+2)/2; blow-up: H² = 3, K·H = -5, P_O(sR) for s in -7..=7".into())
}

fn example1() -> Outcome {
    let p2 = SurfaceModel::p2();
    let c1 = vec![q(1)];
    let f = SheafClass::new(2, c1.clone(), ch2_from_c2(&p2, &c1, &q(2)), "F");
    let e = end0_class(&p2, &f).map_err(fail)?;
    ensure!(e.c1 == vec![q(0)], "c1(End⁰F) = {:?}", e.c1);
    let c2 = c2_from_ch(&p2, &e).map_err(fail)?;
    ensure!(c2 == q(7), "c2(End⁰F) = {c2}");
    let r = example1_report().map_err(fail)?;
    ensure!(r.c2_ad_f == q(7), "report c2 = {}", r.c2_ad_f);
    ensure!(r.gm_moduli_dim == 4, "moduli dim {}", r.gm_moduli_dim);
    ensure!(r.quot_dim == 16, "quot dim {}", r.quot_dim);
    Ok("c1 = 0, c2 = 7, dim M = 4, dim Quot = 16".into())
}

fn example2_grid() -> Outcome {
    for c in -2..=5 {
        for s in -7..=5 {
            let r = example2_report(c, s).map_err(fail)?;
            ensure!(r.gieseker_poly.degree().unwrap_or(0) == 0, "c={c}, s={s}: P_L − P_F/2 = {}", r.gieseker_poly);
            ensure!(r.pe_poly.degree().unwrap_or(0) == 0, "c={c}, s={s}: P_E• = {}", r.pe_poly);
            let g = r.gieseker_poly.coeff(0).signum();
            let g_closed = (3 * c * c + (2 * s - 1) * c + 2).signum() as i32;
            ensure!(g == g_closed, "c={c}, s={s}: Gieseker sign {g}, closed form {g_closed}");
            let p = r.pe_poly.coeff(0).signum();
            ensure!(p == (3 - c).signum() as i32, "c={c}, s={s}: principal sign {p}");
        }
    }
    Ok("104 grid points, both polynomials constant with the closed-form signs".into())
}

fn table() -> Outcome {
    let rows = example2_table().map_err(fail)?;
    let mut flagged = Vec::new();
    for r in &rows {
        ensure!(r.principal_agrees, "({}, {}): principal {} vs reference {}", r.c, r.s, r.principal, r.reference_principal);
        if !r.vector_agrees {
            flagged.push((r.c, r.s, r.vector));
        }
    }
    let expected = vec![(-1, 4, Status::Stable), (-1, 2, Status::Unstable)];
    ensure!(flagged == expected, "flagged rows {flagged:?}");
    Ok("5 rows reproduced; (-1,4) computed stable, (-1,2) computed unstable, flagged".into())
}

fn delta_independence() -> Outcome {
    let deltas = [Poly::from_ints(&[0, 1]), Poly::from_ints(&[0, 2]), Poly::from_ints(&[5, 1])];
    let mut count = 0;
    for c in -2..=5 {
        for s in -7..=5 {
            let m = example2_model(c, s).map_err(fail)?;
            let base = check_gsheaf(&m.surface, &m).map_err(fail)?.status;
            for d in &deltas {
                let t = check_tensor(&m.surface, &m, d).map_err(fail)?.status;
                ensure!(t == base, "c={c}, s={s}, δ={d}: tensor {t}, principal {base}");
            }
            count += 1;
        }
    }
    Ok(format!("{count} models × δ ∈ {{m, 2m, m+5}}"))
}

fn harder_narasimhan() -> Outcome {
    let p2 = SurfaceModel::p2();
    let summands: Vec<SheafClass> = [1, 0, -1].iter().map(|&d| SheafClass::line_bundle(&p2, &[d], "L")).collect();
    let hn = hn_filtration(&p2, &summands).map_err(fail)?;
    ensure!(hn.weights == vec![-6, 0, 6], "weights {:?}", hn.weights);
    ensure!(is_strictly_convex(&hn_polygon(&p2, &hn).map_err(fail)?), "polygon not strictly convex");
    let models = scenario_models().map_err(fail)?;
    for (name, m) in &models {
        let slope = check_slope(&m.surface, m).map_err(fail)?.status;
        let gieseker = check_gsheaf(&m.surface, m).map_err(fail)?.status;
        ensure!(slope != Status::Stable || gieseker == Status::Stable, "{name}: slope-stable but {gieseker}");
        ensure!(!gieseker.is_semistable() || slope.is_semistable(), "{name}: {gieseker} but slope {slope}");
    }
    Ok(format!("weights (-6, 0, 6), convex; chain holds on {} models", models.len()))
}

fn grad_fixpoint() -> Outcome {
    let mut idempotent = 0;
    for (name, m) in scenario_models().map_err(fail)? {
        if !check_gsheaf(&m.surface, &m).map_err(fail)?.status.is_semistable() {
            continue;
        }
        let once = grad(&m).map_err(fail)?;
        ensure!(grad(&once).map_err(fail)? == once, "{name}: grad not idempotent");
        idempotent += 1;
    }
    let mut iters = Vec::new();
    for s in [-5, -4] {
        let (limit, n) = grad_with_trace(&example2_model(3, s).map_err(fail)?).map_err(fail)?;
        ensure!(n <= 3, "c=3, s={s}: {n} iterations");
        ensure!(limit.fiber.killing_det() == q(-128), "c=3, s={s}: det {}", limit.fiber.killing_det());
        iters.push(n);
    }
    Ok(format!("idempotent on {idempotent} models; c=3 fixpoint after {iters:?} iterations, det -128"))
}

fn run(n: u32, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
    });
    let elapsed = start.elapsed();
    let outcome = match (outcome, limit) {
        (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
        (o, _) => o,
    };
    let ok = outcome.is_ok();
    let detail = outcome.unwrap_or_else(|e| e);
    println!("{} [{n:>2}] {name}: {detail} ({elapsed:.2?})", if ok { "PASS" } else { "FAIL" });
    ok
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let corpus = corpus();
    let results = [
        run(1, "Killing form and semisimplicity", Some(secs(1)), killing_and_semisimplicity),
        run(2, "μ ≤ 0 with equality exactly on algebra flags", Some(secs(30)), mu_nonpositive),
        run(3, "tensor and bracket μ agree", Some(secs(60)), mu_routes_agree),
        run(4, "balanced algebra flags are exactly the orthogonal ones", None, || self_orthogonality(&corpus)),
        run(5, "graded limits", None, || graded_limits(&corpus)),
        run(6, "parabolic round trip", None, parabolic_round_trip),
        run(7, "Riemann–Roch", None, riemann_roch),
        run(8, "rank-2 sheaf on P²", None, example1),
        run(9, "blow-up grid signs", Some(secs(5)), example2_grid),
        run(10, "stability table", None, table),
        run(11, "δ-independence of tensor stability", None, delta_independence),
        run(12, "Harder–Narasimhan and implication chain", None, harder_narasimhan),
        run(13, "grad fixpoint and idempotence", None, grad_fixpoint),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
