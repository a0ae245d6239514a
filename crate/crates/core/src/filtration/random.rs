use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactmath::{Rational, Vector};
use crate::liecore::{LieAlgebra, Subspace};

use super::WeightedFlag;

/// Deterministic balanced flag of `g`: a random chain of echelon subspaces
/// spanned by sparse `{-1, 0, 1}` vectors, with integer weights shifted
/// (and scaled when needed) so that `Σ λ_i dim(gr_i) = 0`.
pub fn random_flag(g: &LieAlgebra, seed: u64) -> WeightedFlag {
    let n = g.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n == 1 {
        return WeightedFlag::trivial(1);
    }
    let t = rng.gen_range(2..=n.min(4));
    // strictly increasing dims ending at n
    let mut cuts: Vec<usize> = Vec::new();
    while cuts.len() < t - 1 {
        let c = rng.gen_range(1..n);
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.sort_unstable();
    cuts.push(n);

    let mut vectors: Vec<Vector> = Vec::new();
    let mut steps = Vec::with_capacity(t);
    for &target in &cuts {
        while vectors.len() < target {
            let cand: Vector = (0..n)
                .map(|_| match rng.gen_range(0..4) {
                    0 => Rational::one(),
                    1 => Rational::from(-1),
                    _ => Rational::zero(),
                })
                .collect();
            vectors.push(cand);
            let rank = Subspace::span(n, &vectors).expect("lengths match").dim();
            if rank < vectors.len() {
                vectors.pop();
            }
        }
        steps.push(Subspace::span(n, &vectors).expect("lengths match"));
    }

    let mut raw = Vec::with_capacity(t);
    let mut w = rng.gen_range(-3i64..=3);
    for _ in 0..t {
        raw.push(w);
        w += rng.gen_range(1..=3);
    }
    let mut prev = 0;
    let s: i64 = raw
        .iter()
        .zip(&cuts)
        .map(|(&w, &c)| {
            let d = (c - prev) as i64;
            prev = c;
            w * d
        })
        .sum();
    let r = n as i64;
    let weights: Vec<i64> = if s % r == 0 {
        raw.iter().map(|w| w - s / r).collect()
    } else {
        raw.iter().map(|w| r * w - s).collect()
    };
    WeightedFlag::new(weights, steps).expect("construction yields a valid flag")
}
