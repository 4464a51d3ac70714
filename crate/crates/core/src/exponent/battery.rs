use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use super::{
    all_routes_lenient, beta_order, cyclic_class_orders, exp_omega_modified, fiber_functor_check, pi_is_character,
    pi_table, Routes,
};
use crate::cohomology::{lcm_all, normalize_cocycle, Cochain3, Solver2, DEFAULT_SOLVER_CAP};
use crate::double::DoubleContext;
use crate::error::{Error, Result};
use crate::group::Subgroup;

#[derive(Clone, Copy, Debug)]
pub struct BatteryOptions {
    /// Largest group order for which `e(ω)` is computed globally.
    pub solver_cap: usize,
}

impl Default for BatteryOptions {
    fn default() -> Self {
        BatteryOptions { solver_cap: DEFAULT_SOLVER_CAP }
    }
}

/// One claim evaluated on one instance. For divisibility claims
/// `divisor | dividend` is what was tested.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: &'static str,
    pub holds: bool,
    pub skipped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisor: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dividend: Option<u64>,
}

impl CheckRecord {
    pub(crate) fn divides(name: &'static str, divisor: u64, dividend: u64) -> Self {
        CheckRecord { name, holds: dividend.is_multiple_of(divisor), skipped: false, divisor: Some(divisor), dividend: Some(dividend) }
    }

    pub(crate) fn claim(name: &'static str, holds: bool) -> Self {
        CheckRecord { name, holds, skipped: false, divisor: None, dividend: None }
    }

    pub(crate) fn skipped(name: &'static str) -> Self {
        CheckRecord { name, holds: true, skipped: true, divisor: None, dividend: None }
    }

    /// A claim that was evaluated and came out false.
    pub fn is_counterexample(&self) -> bool {
        !self.skipped && !self.holds
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementRecord {
    pub element: String,
    pub order: u64,
    pub e_omega: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentReport {
    pub schema: u32,
    pub group_order: u64,
    pub exp_g: u64,
    pub beta_order: u64,
    pub beta_order_raw: u64,
    pub elements: Vec<ElementRecord>,
    pub exp_omega_g: u64,
    pub exp_double: u64,
    pub routes: Routes,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_omega_global: Option<u64>,
    pub fiber_data: bool,
    pub checks: Vec<CheckRecord>,
    /// Remarkable but non-failing observations.
    pub events: Vec<String>,
}

impl ExponentReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.is_counterexample())
    }

    pub fn all_pass(&self) -> bool {
        self.counterexamples().next().is_none()
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn primes(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Computes every exponent quantity for `(G, ω)` and evaluates each
/// divisibility and equality statement that applies to the instance.
/// With `fiber = Some((F, Γ))` the pair must carry fiber-functor data.
pub fn theorem_battery(
    omega: &Cochain3,
    fiber: Option<(&Subgroup, &Subgroup)>,
    opts: &BatteryOptions,
) -> Result<ExponentReport> {
    let ctx = DoubleContext::new(omega.clone())?;
    theorem_battery_in(&ctx, fiber, opts)
}

/// As [`theorem_battery`], for an already tabulated context.
pub fn theorem_battery_in(
    ctx: &Arc<DoubleContext>,
    fiber: Option<(&Subgroup, &Subgroup)>,
    opts: &BatteryOptions,
) -> Result<ExponentReport> {
    let omega = ctx.omega();
    let grp = omega.group().clone();
    let order = grp.order() as u64;
    let exp_g = grp.exponent();
    if let Some((f, gamma)) = fiber {
        if !fiber_functor_check(omega, f, gamma, opts.solver_cap)? {
            return Err(Error::Precondition("subgroups do not carry fiber-functor data".into()));
        }
    }
    let e_cyc = cyclic_class_orders(omega);
    let exp_omega = exp_omega_modified(omega);
    let (routes, route_failures) = all_routes_lenient(ctx);
    let exp_double = routes.monodromy.max(routes.pi).max(routes.ribbon);
    if exp_double == 0 {
        return Err(Error::TheoremViolation(format!("no exponent route terminated: {}", route_failures.join("; "))));
    }
    let exp_double = if routes.monodromy > 0 { routes.monodromy } else { exp_double };
    let e_global = if grp.order() <= opts.solver_cap {
        Some(Solver2::new(&grp, opts.solver_cap)?.class_order(omega)?)
    } else {
        None
    };
    let (normalized, _) = normalize_cocycle(omega, opts.solver_cap)?;
    let beta_norm = beta_order(&DoubleContext::new(normalized)?)?;
    let beta_raw = beta_order(ctx)?;

    let mut checks = Vec::new();
    let mut events = Vec::new();
    checks.push(CheckRecord::divides("exp_g_divides_exp_double", exp_g, exp_double));
    match e_global {
        Some(e) => {
            checks.push(CheckRecord::divides("exp_double_divides_e_omega_exp_g", exp_double, e * exp_g));
            checks.push(CheckRecord::divides("exp_omega_divides_e_omega_exp_g", exp_omega, e * exp_g));
        }
        None => {
            // each e(ω_g) divides e(ω), so their lcm times exp G divides e(ω)·exp G
            let lower = lcm_all(e_cyc.iter().copied()) * exp_g;
            checks.push(CheckRecord::divides("exp_double_divides_e_omega_exp_g", exp_double, lower));
            checks.push(CheckRecord::divides("exp_omega_divides_e_omega_exp_g", exp_omega, lower));
        }
    }
    checks.push(CheckRecord::divides("exp_double_divides_exp_g_squared", exp_double, exp_g * exp_g));
    checks.push(CheckRecord::claim("same_prime_divisors", primes(exp_double) == primes(order)));
    checks.push(CheckRecord::divides("exp_double_divides_exp_omega", exp_double, exp_omega));
    checks.push(CheckRecord::divides("exp_g_divides_exp_omega", exp_g, exp_omega));
    if order % 2 == 1 {
        checks.push(CheckRecord::claim("odd_order_equality", exp_double == exp_omega));
    } else {
        checks.push(CheckRecord::skipped("odd_order_equality"));
    }
    checks.push(CheckRecord::claim("routes_agree", route_failures.is_empty() && routes.agree()));
    checks.push(CheckRecord::divides("beta_order_divides_exp_g", beta_norm, exp_g));
    let pi_character = pi_is_character(omega, exp_double);
    checks.push(CheckRecord::claim("pi_exp_is_character", pi_character));
    let pi_zero = pi_table(omega, exp_double).iter().all(|p| p.is_zero());
    if pi_character && !pi_zero {
        events.push(format!("π_{exp_double} is a nonzero character"));
    }

    // e(ω_g) | [G : ⟨g⟩] for every g
    let index_condition =
        grp.elements().all(|g| (order / grp.element_order(g)).is_multiple_of(e_cyc[g.0]));
    let divides_order = order.is_multiple_of(exp_double);
    if index_condition {
        checks.push(CheckRecord::divides("index_condition_implies_divides_order", exp_double, order));
    } else {
        checks.push(CheckRecord::skipped("index_condition_implies_divides_order"));
    }
    if order % 2 == 1 && divides_order {
        checks.push(CheckRecord::claim("odd_divides_order_implies_index_condition", index_condition));
    } else {
        checks.push(CheckRecord::skipped("odd_divides_order_implies_index_condition"));
    }

    let fiber_sizes = fiber.map(|(f, gamma)| (f.order() as u64, gamma.order() as u64));
    match fiber_sizes {
        Some((nf, ng)) => {
            checks.push(CheckRecord::claim("fiber_pi_trivial", !pi_character || pi_zero));
            checks.push(CheckRecord::claim("fiber_equality", exp_double == exp_omega));
            checks.push(CheckRecord::claim("fiber_divides_order_iff_index_condition", divides_order == index_condition));
            let g = nf.gcd(&ng);
            checks.push(CheckRecord::divides("fiber_exp_double_divides_gcd_exp_g", exp_double, g * exp_g));
            match e_global {
                Some(e) => checks.push(CheckRecord::divides("fiber_e_omega_divides_gcd", e, g)),
                None => checks.push(CheckRecord::skipped("fiber_e_omega_divides_gcd")),
            }
        }
        None => {
            for name in [
                "fiber_pi_trivial",
                "fiber_equality",
                "fiber_divides_order_iff_index_condition",
                "fiber_exp_double_divides_gcd_exp_g",
                "fiber_e_omega_divides_gcd",
            ] {
                checks.push(CheckRecord::skipped(name));
            }
        }
    }
    let sq_gate = divides_order && (order % 2 == 1 || fiber.is_some());
    match (sq_gate, e_global) {
        (true, Some(e)) => checks.push(CheckRecord::claim(
            "e_omega_divides_index_squared",
            grp.elements().all(|g| {
                let idx = order / grp.element_order(g);
                (idx * idx).is_multiple_of(e)
            }),
        )),
        _ => checks.push(CheckRecord::skipped("e_omega_divides_index_squared")),
    }
    for f in route_failures {
        events.push(format!("route failure: {f}"));
    }
    let elements = grp
        .elements()
        .map(|g| ElementRecord { element: grp.name(g).to_string(), order: grp.element_order(g), e_omega: e_cyc[g.0] })
        .collect();
    Ok(ExponentReport {
        schema: 1,
        group_order: order,
        exp_g,
        beta_order: beta_norm,
        beta_order_raw: beta_raw,
        elements,
        exp_omega_g: exp_omega,
        exp_double,
        routes,
        e_omega_global: e_global,
        fiber_data: fiber.is_some(),
        checks,
        events,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::cyclic_standard_cocycle;
    use crate::group::{builtin_group, cyclic_quotients, make_cyclic};
    use crate::phase::Phase;

    #[test]
    fn cyclic_three() {
        let g = Arc::new(make_cyclic(3));
        let w = cyclic_standard_cocycle(&g, Phase::new(1, 3)).unwrap();
        let rep = theorem_battery(&w, None, &BatteryOptions::default()).unwrap();
        assert_eq!(rep.exp_double, 9);
        assert_eq!(rep.e_omega_global, Some(3));
        assert!(rep.all_pass(), "{:#?}", rep.checks);
        assert!(!rep.check("odd_order_equality").unwrap().skipped);
    }

    #[test]
    fn trivial_cocycle() {
        for name in ["s3", "d4", "c2xc4"] {
            let g = Arc::new(builtin_group(name).unwrap());
            let rep = theorem_battery(&Cochain3::zero(&g), None, &BatteryOptions::default()).unwrap();
            assert_eq!(rep.exp_double, g.exponent());
            assert!(rep.all_pass());
        }
    }

    #[test]
    fn inflated_d4() {
        let d4 = Arc::new(builtin_group("d4").unwrap());
        let c2 = Arc::new(make_cyclic(2));
        let base = cyclic_standard_cocycle(&c2, Phase::new(1, 2)).unwrap();
        for proj in cyclic_quotients(&d4, 2) {
            let rep = theorem_battery(&base.inflate(&d4, &proj).unwrap(), None, &BatteryOptions::default()).unwrap();
            assert!(16 % rep.exp_double == 0);
            assert!(rep.all_pass(), "{:#?}", rep.checks);
        }
    }

    #[test]
    fn fiber_data_is_validated() {
        let g = Arc::new(make_cyclic(3));
        let w = cyclic_standard_cocycle(&g, Phase::new(1, 3)).unwrap();
        let full = Subgroup::generated(&g, [crate::group::ElemId(1)]);
        let triv = Subgroup::generated(&g, []);
        let r = theorem_battery(&w, Some((&full, &triv)), &BatteryOptions::default());
        assert!(matches!(r, Err(Error::Precondition(_))));
    }
}
