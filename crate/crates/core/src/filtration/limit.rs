use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::Matrix;
use crate::liecore::{LieAlgebra, StructureConstants};

use super::{check_flag, coordinate_weight, GradedSplitting, WeightedFlag};

/// Limit `t → 0` of the algebra conjugated by the one-parameter subgroup of
/// the flag: in the adapted basis, constants of weight 0 survive and constants
/// of positive weight vanish. Negative weights make the limit diverge.
pub fn graded_limit(g: &LieAlgebra, flag: &WeightedFlag, split: &GradedSplitting) -> Result<LieAlgebra> {
    graded_limit_with_basis(g, flag, split).map(|(h, _)| h)
}

/// [`graded_limit`] together with the unimodular adapted basis (columns) in
/// which the limit constants are expressed.
pub fn graded_limit_with_basis(
    g: &LieAlgebra,
    flag: &WeightedFlag,
    split: &GradedSplitting,
) -> Result<(LieAlgebra, Matrix)> {
    check_flag(g, flag)?;
    if split.flag() != flag {
        return Err(Error::InvalidFlag("splitting belongs to a different flag".into()));
    }
    let (basis, w) = split.unimodular_basis();
    let h = g.change_basis(&basis)?;
    if let Some(mu) = coordinate_weight(&h, &w) {
        if mu < 0 {
            return Err(Error::LimitDiverges(mu));
        }
    }
    let d = g.dim();
    let mut t = StructureConstants::zero(d);
    for l in 0..d {
        for m in 0..d {
            for n in 0..d {
                let c = h.constant(l, m, n);
                if !c.is_zero() && w[l] + w[m] == w[n] {
                    t.set(l, m, n, c.clone());
                }
            }
        }
    }
    Ok((LieAlgebra::new(t, Some(g.labels().to_vec()))?, basis))
}

/// How strongly a graded limit is known to be isomorphic to the original.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsomorphismVerdict {
    /// Both semisimple of dimension 3, hence both `sl2` over an algebraically
    /// closed field.
    Certified,
    /// Killing invariants agree; no isomorphism is constructed.
    Consistent,
    /// Killing invariants differ.
    Distinct,
}

pub fn limit_isomorphism(g: &LieAlgebra, limit: &LieAlgebra) -> IsomorphismVerdict {
    if !g.killing_invariants().compatible(&limit.killing_invariants()) {
        return IsomorphismVerdict::Distinct;
    }
    if g.dim() == 3 && g.is_semisimple() && limit.is_semisimple() {
        IsomorphismVerdict::Certified
    } else {
        IsomorphismVerdict::Consistent
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{Rational, Vector};
    use crate::liecore::{sl, Subspace};

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Rational::from(x)).collect()
    }

    fn borel() -> WeightedFlag {
        let e = Subspace::span_units(3, &[1]);
        let b = Subspace::span_units(3, &[0, 1]);
        WeightedFlag::new(vec![-1, 0, 1], vec![e, b, Subspace::whole(3)]).unwrap()
    }

    #[test]
    fn borel_limit_keeps_sl2() {
        let g = sl(2).unwrap();
        let f = borel();
        let lim = graded_limit(&g, &f, &GradedSplitting::echelon(&f)).unwrap();
        assert_eq!(lim.killing_det(), Rational::from(-128));
        assert!(lim.is_semisimple());
        assert_eq!(limit_isomorphism(&g, &lim), IsomorphismVerdict::Certified);
    }

    #[test]
    fn det_is_splitting_independent() {
        let g = sl(2).unwrap();
        let f = borel();
        let other = GradedSplitting::new(&f, vec![vec![v(&[0, 3, 0])], vec![v(&[1, 2, 0])], vec![v(&[1, -1, 1])]])
            .unwrap();
        let a = graded_limit(&g, &f, &GradedSplitting::echelon(&f)).unwrap();
        let b = graded_limit(&g, &f, &other).unwrap();
        assert_eq!(a.killing_det(), b.killing_det());
    }

    #[test]
    fn trivial_flag_is_identity() {
        let g = sl(3).unwrap();
        let f = WeightedFlag::trivial(8);
        let lim = graded_limit(&g, &f, &GradedSplitting::echelon(&f)).unwrap();
        assert_eq!(lim, g);
    }

    #[test]
    fn non_algebra_flag_diverges() {
        let g = sl(2).unwrap();
        let h = Subspace::span_units(3, &[0]);
        let he = Subspace::span_units(3, &[0, 1]);
        let f = WeightedFlag::new(vec![-1, 0, 1], vec![h, he, Subspace::whole(3)]).unwrap();
        assert_eq!(graded_limit(&g, &f, &GradedSplitting::echelon(&f)), Err(Error::LimitDiverges(-1)));
    }

    #[test]
    fn positive_mu_gives_abelian_limit() {
        // unbalanced: balanced flags of sl2 never have μ > 0
        let g = sl(2).unwrap();
        let f = WeightedFlag::trivial(3).shifted(5);
        let lim = graded_limit(&g, &f, &GradedSplitting::echelon(&f)).unwrap();
        assert!(!lim.is_semisimple());
        assert_eq!(limit_isomorphism(&g, &lim), IsomorphismVerdict::Distinct);
    }
}
