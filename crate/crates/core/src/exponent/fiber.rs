use serde::Serialize;

use crate::cohomology::{Cochain3, Solver2};
use crate::error::{Error, Result};
use crate::group::Subgroup;

fn restriction_trivial(omega: &Cochain3, sub: &Subgroup, cap: usize) -> Result<bool> {
    let r = omega.restrict(sub)?;
    Ok(Solver2::new(sub.group(), cap)?.solve(&r)?.is_witness())
}

/// Whether `(F, Γ)` carries fiber-functor data for `ω` in the
/// trivial-intersection case: `ω|_F` and `ω|_Γ` are coboundaries, `FΓ = G`
/// and `F ∩ Γ = {e}`.
pub fn fiber_functor_check(omega: &Cochain3, f: &Subgroup, gamma: &Subgroup, cap: usize) -> Result<bool> {
    if *f.parent().as_ref() != **omega.group() || *gamma.parent().as_ref() != **omega.group() {
        return Err(Error::GroupMismatch);
    }
    if !f.intersection_is_trivial(gamma) || !f.product_covers(gamma) {
        return Ok(false);
    }
    Ok(restriction_trivial(omega, gamma, cap)? && restriction_trivial(omega, f, cap)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeOutcome {
    pub class_order: u64,
    pub exp_g: u64,
    pub group_order: u64,
    /// Whether `e(ω)·exp G` divides `|G|`.
    pub divides: bool,
}

/// For `ω` trivial on both `F` and `Γ`, reports whether `e(ω)·exp G | |G|`.
pub fn question_probe(omega: &Cochain3, f: &Subgroup, gamma: &Subgroup, cap: usize) -> Result<ProbeOutcome> {
    if !restriction_trivial(omega, f, cap)? || !restriction_trivial(omega, gamma, cap)? {
        return Err(Error::Precondition("ω must restrict trivially to both subgroups".into()));
    }
    let grp = omega.group();
    let class_order = Solver2::new(grp, cap)?.class_order(omega)?;
    let exp_g = grp.exponent();
    let group_order = grp.order() as u64;
    Ok(ProbeOutcome { class_order, exp_g, group_order, divides: group_order.is_multiple_of(class_order * exp_g) })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cohomology::cyclic_standard_cocycle;
    use crate::group::{builtin_group, cyclic_quotients, make_cyclic, ElemId, GroupTable};
    use crate::phase::Phase;

    fn s3_factors(g: &Arc<GroupTable>) -> (Subgroup, Subgroup) {
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let c = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        (Subgroup::generated(g, [t]), Subgroup::generated(g, [c]))
    }

    #[test]
    fn trivial_cocycle_and_exact_factorization() {
        let g = Arc::new(builtin_group("s3").unwrap());
        let (f, gamma) = s3_factors(&g);
        assert!(fiber_functor_check(&Cochain3::zero(&g), &f, &gamma, 12).unwrap());
        let p = question_probe(&Cochain3::zero(&g), &f, &gamma, 12).unwrap();
        assert_eq!((p.class_order, p.divides), (1, true));
    }

    #[test]
    fn cyclic_with_itself_fails() {
        let g = Arc::new(make_cyclic(3));
        let w = cyclic_standard_cocycle(&g, Phase::new(1, 3)).unwrap();
        let full = Subgroup::generated(&g, [ElemId(1)]);
        assert!(!fiber_functor_check(&w, &full, &full, 12).unwrap());
    }

    #[test]
    fn inflated_sign_on_s3() {
        let g = Arc::new(builtin_group("s3").unwrap());
        let (f, gamma) = s3_factors(&g);
        let c2 = Arc::new(make_cyclic(2));
        let w = cyclic_standard_cocycle(&c2, Phase::new(1, 2)).unwrap().inflate(&g, &cyclic_quotients(&g, 2)[0]).unwrap();
        // Γ = ⟨c⟩ maps to the identity, F = ⟨t⟩ maps isomorphically onto C2
        assert!(w.restrict(&gamma).unwrap().is_zero());
        assert!(!fiber_functor_check(&w, &f, &gamma, 12).unwrap());
        assert!(question_probe(&w, &f, &gamma, 12).is_err());
    }
}
