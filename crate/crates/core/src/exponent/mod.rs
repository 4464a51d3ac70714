//! Exponent of the twisted double, computed three independent ways, and
//! the divisibility statements relating it to the group and the cocycle.

mod battery;
mod fiber;

use std::sync::Arc;

use serde::Serialize;

pub use battery::{theorem_battery, theorem_battery_in, BatteryOptions, CheckRecord, ElementRecord, ExponentReport};
pub use fiber::{fiber_functor_check, question_probe, ProbeOutcome};

use crate::cohomology::{cyclic_class_order, divisors, lcm_all, Cochain3};
use crate::double::{canonical_element, CanonicalKind, DoubleContext, Monomial};
use crate::error::{Error, Result};
use crate::group::ElemId;
use crate::phase::Phase;

/// `π_n(g) = Σ_{k=1}^{n-1} ω(g, g^k, g)`.
pub fn pi_n(omega: &Cochain3, g: ElemId, n: u64) -> Phase {
    let grp = omega.group();
    let mut acc = Phase::ZERO;
    let mut gk = g;
    for _ in 1..n {
        acc += omega.get([g, gk, g]);
        gk = grp.mul(gk, g);
    }
    acc
}

/// `π_n` as a table over the group.
pub fn pi_table(omega: &Cochain3, n: u64) -> Vec<Phase> {
    omega.group().elements().map(|g| pi_n(omega, g, n)).collect()
}

/// Whether `g ↦ π_n(g)` is a character.
pub fn pi_is_character(omega: &Cochain3, n: u64) -> bool {
    let grp = omega.group();
    let t = pi_table(omega, n);
    grp.elements().all(|a| grp.elements().all(|b| t[grp.mul(a, b).0] == t[a.0] + t[b.0]))
}

/// `e(ω_g)` for every element, in index order.
pub fn cyclic_class_orders(omega: &Cochain3) -> Vec<u64> {
    omega.group().elements().map(|g| cyclic_class_order(omega, g)).collect()
}

/// `exp_ω G = lcm_g e(ω_g)·|g|`.
pub fn exp_omega_modified(omega: &Cochain3) -> u64 {
    let grp = omega.group();
    lcm_all(grp.elements().map(|g| cyclic_class_order(omega, g) * grp.element_order(g)))
}

/// Smallest `n` with `exp G | n` and `π_n` a character, scanning the
/// divisors of `exp_ω G`.
pub fn exponent_via_pi(omega: &Cochain3) -> Result<u64> {
    let exp_g = omega.group().exponent();
    let bound = exp_omega_modified(omega);
    divisors(bound)
        .into_iter()
        .filter(|n| n.is_multiple_of(exp_g))
        .find(|&n| pi_is_character(omega, n))
        .ok_or_else(|| Error::TheoremViolation(format!("no divisor of exp_ω G = {bound} makes π_n a character")))
}

/// Smallest `N` with `v^N` group-like; every `N ≤ exp_ω G` is examined.
pub fn exponent_via_ribbon(ctx: &Arc<DoubleContext>) -> Result<u64> {
    let bound = exp_omega_modified(ctx.omega());
    let v = canonical_element(ctx, CanonicalKind::V)?;
    let mut acc: Monomial = v.clone();
    for n in 1..=bound {
        if acc.is_group_like() {
            return Ok(n);
        }
        acc = acc.mul(&v)?;
    }
    Err(Error::TheoremViolation(format!("no power v^N with N ≤ {bound} is group-like")))
}

/// Order of the monodromy `R₂₁R`, bounded by `exp_ω G`.
pub fn exponent_via_monodromy(ctx: &Arc<DoubleContext>) -> Result<u64> {
    let bound = exp_omega_modified(ctx.omega());
    canonical_element(ctx, CanonicalKind::R21R)?.order(bound).map_err(|e| match e {
        Error::BoundExceeded(b) => Error::TheoremViolation(format!("order of R21R exceeds exp_ω G = {b}")),
        other => other,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Routes {
    pub pi: u64,
    pub ribbon: u64,
    pub monodromy: u64,
}

impl Routes {
    pub fn agree(&self) -> bool {
        self.pi == self.ribbon && self.ribbon == self.monodromy
    }
}

/// Routes that fail report `0` and a message instead of aborting.
pub fn all_routes_lenient(ctx: &Arc<DoubleContext>) -> (Routes, Vec<String>) {
    let mut failures = Vec::new();
    let mut take = |name: &str, r: Result<u64>| match r {
        Ok(v) => v,
        Err(e) => {
            failures.push(format!("{name}: {e}"));
            0
        }
    };
    let routes = Routes {
        pi: take("pi", exponent_via_pi(ctx.omega())),
        ribbon: take("ribbon", exponent_via_ribbon(ctx)),
        monodromy: take("monodromy", exponent_via_monodromy(ctx)),
    };
    (routes, failures)
}

pub fn all_routes(ctx: &Arc<DoubleContext>) -> Result<Routes> {
    Ok(Routes {
        pi: exponent_via_pi(ctx.omega())?,
        ribbon: exponent_via_ribbon(ctx)?,
        monodromy: exponent_via_monodromy(ctx)?,
    })
}

/// Order of `β`, i.e. the lcm of the orders of `ω(g, g⁻¹, g)`.
pub fn beta_order(ctx: &Arc<DoubleContext>) -> Result<u64> {
    let beta = canonical_element(ctx, CanonicalKind::Beta)?;
    let bound = lcm_all(beta.terms().map(|(_, _, p)| p.order()));
    beta.order(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::cyclic_standard_cocycle;
    use crate::group::{direct_product, make_cyclic};

    fn cyclic(n: usize, k: i64) -> Cochain3 {
        let g = Arc::new(make_cyclic(n));
        cyclic_standard_cocycle(&g, Phase::new(k, n as i64)).unwrap()
    }

    #[test]
    fn pi_values() {
        let w = cyclic(3, 1);
        for g in w.group().elements() {
            assert!(pi_n(&w, g, 1).is_zero());
        }
        assert_eq!(pi_n(&w, ElemId(1), 3), Phase::new(1, 3));
        // recursion π_n = π_{n-1} + ω(g, g^{n-1}, g)
        let grp = w.group().clone();
        for g in grp.elements() {
            for n in 2..12 {
                assert_eq!(pi_n(&w, g, n), pi_n(&w, g, n - 1) + w.get([g, grp.pow(g, n - 1), g]));
            }
        }
    }

    #[test]
    fn cyclic_exponents() {
        let w = cyclic(3, 1);
        assert_eq!(exp_omega_modified(&w), 9);
        let ctx = DoubleContext::new(w).unwrap();
        assert_eq!(all_routes(&ctx).unwrap(), Routes { pi: 9, ribbon: 9, monodromy: 9 });
        let c2 = DoubleContext::new(cyclic(2, 1)).unwrap();
        assert_eq!(all_routes(&c2).unwrap(), Routes { pi: 2, ribbon: 2, monodromy: 2 });
        let triv = DoubleContext::new(cyclic(4, 0)).unwrap();
        assert_eq!(all_routes(&triv).unwrap(), Routes { pi: 4, ribbon: 4, monodromy: 4 });
    }

    #[test]
    fn inflated_modified_exponent() {
        let c3 = Arc::new(make_cyclic(3));
        let g = Arc::new(direct_product(&c3, &c3));
        let first: Vec<ElemId> = g.elements().map(|x| ElemId(x.0 / 3)).collect();
        let w = cyclic_standard_cocycle(&c3, Phase::new(1, 3)).unwrap().inflate(&g, &first).unwrap();
        // elements with nonzero first coordinate see the nontrivial class
        let expect = lcm_all(g.elements().map(|x| {
            let ord = g.element_order(x);
            if x.0 / 3 != 0 { 3 * ord } else { ord }
        }));
        assert_eq!(exp_omega_modified(&w), expect);
        assert_eq!(expect, 9);
    }

    #[test]
    fn beta_order_on_c3() {
        let ctx = DoubleContext::new(cyclic(3, 1)).unwrap();
        assert_eq!(beta_order(&ctx).unwrap(), 3);
    }
}
