//! Exact verification of the quasi-Hopf structure of `D^ω(G)` and of the
//! closed forms for its distinguished elements.

use std::sync::Arc;

use serde::Serialize;

use super::canonical::{canonical_element, CanonicalKind};
use super::context::DoubleContext;
use super::monomial::Monomial;
use crate::error::Result;
use crate::exponent::{exp_omega_modified, pi_n};
use crate::group::ElemId;
use crate::phase::Phase;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub holds: bool,
    /// First failure, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    /// Largest power examined by the power identities.
    pub power_bound: u64,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Suite {
    ctx: Arc<DoubleContext>,
    checks: Vec<AxiomCheck>,
}

impl Suite {
    /// Runs `f` over `items`; the first mismatch or error becomes the detail.
    fn check<I: std::fmt::Debug>(
        &mut self,
        name: &'static str,
        items: impl IntoIterator<Item = I>,
        mut f: impl FnMut(&I) -> Result<bool>,
    ) {
        let mut detail = None;
        for item in items {
            match f(&item) {
                Ok(true) => {}
                Ok(false) => {
                    detail = Some(format!("fails at {item:?}"));
                    break;
                }
                Err(e) => {
                    detail = Some(format!("{e} at {item:?}"));
                    break;
                }
            }
        }
        self.checks.push(AxiomCheck { name, holds: detail.is_none(), detail });
    }

    fn basis(&self) -> Vec<(ElemId, ElemId)> {
        let g = self.ctx.group();
        g.elements().flat_map(|a| g.elements().map(move |x| (a, x))).collect()
    }

    fn element(&self, kind: CanonicalKind) -> Monomial {
        canonical_element(&self.ctx, kind).expect("canonical elements exist for every context")
    }
}

/// Runs every identity on every basis element (and powers up to `exp_ω G`).
pub fn axiom_suite(ctx: &Arc<DoubleContext>) -> Result<AxiomReport> {
    let bound = exp_omega_modified(ctx.omega());
    axiom_suite_with_bound(ctx, bound)
}

pub fn axiom_suite_with_bound(ctx: &Arc<DoubleContext>, bound: u64) -> Result<AxiomReport> {
    let mut s = Suite { ctx: ctx.clone(), checks: Vec::new() };
    let grp = ctx.group().clone();
    let e = ElemId::IDENTITY;
    let one = Monomial::identity(ctx, 1)?;
    let beta = s.element(CanonicalKind::Beta);
    let beta_inv = beta.inverse()?;
    let u = s.element(CanonicalKind::U);
    let v = s.element(CanonicalKind::V);
    let v_inv = s.element(CanonicalKind::VInv);
    let phi = s.element(CanonicalKind::Phi);
    let phi_inv = s.element(CanonicalKind::PhiInv);
    let r = s.element(CanonicalKind::R);
    let r21 = s.element(CanonicalKind::R21);
    let r21r = s.element(CanonicalKind::R21R);
    let basis = s.basis();
    let zero1 = Monomial::zero(ctx, 1)?;
    let counit_times = |g: ElemId, m: &Monomial| if g.is_identity() { m.clone() } else { zero1.clone() };

    // (a) S(b₁)·b₂ = ε(b)·1 and b₁·β·S(b₂) = ε(b)·β
    s.check("antipode_left", basis.iter(), |&&(g, x)| {
        let lhs = Monomial::basis(ctx, g, x).delta_at(0)?.contract(1, |f| f[0].antipode()?.mul(&f[1]))?;
        Ok(lhs == counit_times(g, &one))
    });
    s.check("antipode_right", basis.iter(), |&&(g, x)| {
        let lhs =
            Monomial::basis(ctx, g, x).delta_at(0)?.contract(1, |f| f[0].mul(&beta)?.mul(&f[1].antipode()?))?;
        Ok(lhs == counit_times(g, &beta))
    });

    // (b) X¹·β·S(X²)·X³ = 1 and S(x¹)·x²·β·S(x³) = 1
    s.check("associator_antipode", [()], |_| {
        let lhs = phi.contract(1, |f| f[0].mul(&beta)?.mul(&f[1].antipode()?)?.mul(&f[2]))?;
        Ok(lhs == one)
    });
    s.check("associator_inverse_antipode", [()], |_| {
        let lhs = phi_inv.contract(1, |f| f[0].antipode()?.mul(&f[1])?.mul(&beta)?.mul(&f[2].antipode()?))?;
        Ok(lhs == one)
    });

    // (c) S²(b) = β⁻¹·b·β
    s.check("antipode_squared", basis.iter(), |&&(g, x)| {
        let b = Monomial::basis(ctx, g, x);
        Ok(b.antipode()?.antipode()? == beta_inv.mul(&b)?.mul(&beta)?)
    });

    // (d) φ·(Δ⊗id)Δ(b) = (id⊗Δ)Δ(b)·φ
    s.check("quasi_coassociativity", basis.iter(), |&&(g, x)| {
        let d = Monomial::basis(ctx, g, x).delta_at(0)?;
        Ok(phi.mul(&d.delta_at(0)?)? == d.delta_at(1)?.mul(&phi)?)
    });

    // (e) v = β·u
    s.check("ribbon_is_beta_u", [()], |_| Ok(v == beta.mul(&u)?));

    // (f) R_n = R·(id⊗S²)(R)⋯(id⊗S^{2(n−1)})(R) = Σ_g e_g ⊗ (gβ⁻¹)ⁿβⁿ
    let mut r_powers = Vec::with_capacity(bound as usize);
    {
        let mut twisted = r.clone();
        let mut rn = r.clone();
        r_powers.push(rn.clone());
        for _ in 2..=bound {
            twisted = twisted.antipode_at(1)?.antipode_at(1)?;
            rn = rn.mul(&twisted)?;
            r_powers.push(rn.clone());
        }
    }
    let gb: Vec<Monomial> = grp
        .elements()
        .map(|g| canonical_element(ctx, CanonicalKind::Group(g))?.mul(&beta_inv))
        .collect::<Result<_>>()?;
    s.check("r_power_closed_form", 1..=bound, |&n| {
        let beta_n = beta.pow(n);
        let mut closed = Monomial::zero(ctx, 2)?;
        for g in grp.elements() {
            let right = gb[g.0].pow(n).mul(&beta_n)?;
            closed.add_disjoint(&Monomial::basis(ctx, g, e).tensor(&right)?)?;
        }
        Ok(r_powers[n as usize - 1] == closed)
    });

    // (g) gⁿ = Σ_s [Σ_{k<n} θ_s(g^k, g)] e_s # gⁿ
    let pairs: Vec<(ElemId, u64)> = grp.elements().flat_map(|g| (1..=bound).map(move |n| (g, n))).collect();
    s.check("group_power_closed_form", pairs.iter(), |&&(g, n)| {
        let lhs = canonical_element(ctx, CanonicalKind::Group(g))?.pow(n);
        let gn = grp.pow(g, n);
        let rhs = Monomial::from_terms(
            ctx,
            1,
            grp.elements().map(|s| {
                let p: Phase = (1..n).map(|k| ctx.theta(s, grp.pow(g, k), g)).sum();
                (vec![s], vec![gn], p)
            }),
        )?;
        Ok(lhs == rhs)
    });

    // (h) u = m₂₁(id⊗S)(R) and uⁿ = m₂₁(id⊗S)(R_n)
    s.check("drinfeld_from_r", [()], |_| Ok(r.antipode_at(1)?.multiply_out(true)? == u));
    s.check("drinfeld_power_from_r_n", 1..=bound, |&n| {
        Ok(r_powers[n as usize - 1].antipode_at(1)?.multiply_out(true)? == u.pow(n))
    });

    s.check("ribbon_inverse", [()], |_| Ok(v.mul(&v_inv)?.is_identity() && v_inv.mul(&v)?.is_identity()));
    // v⁻ⁿ = Σ_g π_n(g) e_g # gⁿ
    s.check("ribbon_inverse_powers", 1..=bound, |&n| {
        let rhs = Monomial::from_terms(
            ctx,
            1,
            grp.elements().map(|g| (vec![g], vec![grp.pow(g, n)], pi_n(ctx.omega(), g, n))),
        )?;
        Ok(v_inv.pow(n) == rhs)
    });
    s.check("monodromy_direct", [()], |_| Ok(r21.mul(&r)? == r21r));
    s.check("ribbon_antipode", [()], |_| Ok(v.antipode()? == v));
    s.check("ribbon_counit", [()], |_| Ok(v.counit()? == Some(Phase::ZERO)));
    s.check("ribbon_central", basis.iter(), |&&(g, x)| {
        let b = Monomial::basis(ctx, g, x);
        Ok(v.mul(&b)? == b.mul(&v)?)
    });
    s.check("ribbon_coproduct", [()], |_| Ok(v.delta_at(0)? == v.tensor(&v)?.mul(&r21r.inverse()?)?));
    Ok(AxiomReport { power_bound: bound, checks: s.checks })
}
