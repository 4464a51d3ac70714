//! Runs the battery, the axiom suite and the optional extras on instances.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{h3_order, Cochain2, DEFAULT_H3_CAP, DEFAULT_SOLVER_CAP};
use crate::corpus::{Family, Instance};
use crate::double::{axiom_suite, AxiomReport, DoubleContext};
use crate::error::{Error, Result};
use crate::exponent::{
    all_routes_lenient, cyclic_class_orders, theorem_battery_in, BatteryOptions, CheckRecord, ExponentReport,
};
use crate::group::ElemId;
use crate::phase::Phase;

#[derive(Clone, Debug)]
pub struct AnalysisOptions {
    pub solver_cap: usize,
    pub h3_cap: usize,
    pub with_h3: bool,
    pub with_axioms: bool,
    /// Coboundary perturbations drawn per instance.
    pub invariance_samples: usize,
    /// Largest group order that gets perturbed.
    pub invariance_order_cap: usize,
    pub seed: u64,
    /// Perturbs one value of `θ` before the exponent routes run.
    pub fault_theta: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            solver_cap: DEFAULT_SOLVER_CAP,
            h3_cap: DEFAULT_H3_CAP,
            with_h3: false,
            with_axioms: true,
            invariance_samples: 0,
            invariance_order_cap: 9,
            seed: 0,
            fault_theta: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceReport {
    pub label: String,
    pub family: Family,
    #[serde(flatten)]
    pub exponent: ExponentReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axioms: Option<AxiomReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h3_order: Option<u64>,
    pub extra_checks: Vec<CheckRecord>,
}

impl InstanceReport {
    /// Names of every failed claim or axiom.
    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self.exponent.counterexamples().map(|c| c.name.to_string()).collect();
        out.extend(self.extra_checks.iter().filter(|c| c.is_counterexample()).map(|c| c.name.to_string()));
        if let Some(a) = &self.axioms {
            out.extend(a.failures().map(|c| format!("axiom:{}", c.name)));
        }
        out
    }

    pub fn passes(&self) -> bool {
        self.failures().is_empty()
    }
}

/// FNV-1a, so that per-instance seeds do not depend on corpus position.
fn label_hash(label: &str) -> u64 {
    label.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

fn fault_context(inst: &Instance) -> Arc<DoubleContext> {
    let g = inst.group();
    // θ_a(a⁻¹, a⁻¹) enters every power of the ribbon element at grade a
    let a = ElemId(g.order().min(2) - 1);
    let b = g.inv(a);
    DoubleContext::corrupt_theta(inst.omega.clone(), a, b, b, Phase::new(1, 2))
}

/// Whether `exp D^ω(G)` and every `e(ω_g)` survive `ω ↦ ω + dτ` for random
/// `τ` with denominators dividing `2|G|`.
pub fn invariance_check(inst: &Instance, reference: &ExponentReport, samples: usize, seed: u64) -> Result<CheckRecord> {
    let grp = inst.group();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ label_hash(&inst.label));
    let e_cyc = cyclic_class_orders(&inst.omega);
    for _ in 0..samples {
        let tau = Cochain2::random(grp, 2 * grp.order() as u64, &mut rng);
        let shifted = inst.omega.add(&tau.coboundary())?;
        let ctx = DoubleContext::new(shifted.clone())?;
        let (routes, failures) = all_routes_lenient(&ctx);
        let same = failures.is_empty()
            && routes.agree()
            && routes.pi == reference.exp_double
            && cyclic_class_orders(&shifted) == e_cyc;
        if !same {
            return Ok(CheckRecord::claim("invariance_under_coboundaries", false));
        }
    }
    Ok(CheckRecord::claim("invariance_under_coboundaries", true))
}

pub fn analyze(inst: &Instance, opts: &AnalysisOptions) -> Result<InstanceReport> {
    let ctx = if opts.fault_theta { fault_context(inst) } else { DoubleContext::new(inst.omega.clone())? };
    let battery_opts = BatteryOptions { solver_cap: opts.solver_cap };
    let exponent = theorem_battery_in(&ctx, inst.fiber_refs(), &battery_opts)?;
    let axioms = if opts.with_axioms { Some(axiom_suite(&ctx)?) } else { None };
    let h3 = if opts.with_h3 && inst.group().order() <= opts.h3_cap {
        Some(h3_order(inst.group(), opts.h3_cap)?)
    } else {
        None
    };
    let mut extra_checks = Vec::new();
    if opts.invariance_samples > 0 {
        if inst.group().order() <= opts.invariance_order_cap {
            extra_checks.push(invariance_check(inst, &exponent, opts.invariance_samples, opts.seed)?);
        } else {
            extra_checks.push(CheckRecord::skipped("invariance_under_coboundaries"));
        }
    }
    if let (Some(h), Some(e)) = (h3, exponent.e_omega_global) {
        extra_checks.push(CheckRecord::divides("e_omega_divides_h3_order", e, h));
    }
    Ok(InstanceReport { label: inst.label.clone(), family: inst.family, exponent, axioms, h3_order: h3, extra_checks })
}

/// Analyzes every instance on `jobs` threads; results keep the input order.
pub fn analyze_all(
    instances: &[Instance],
    opts: &AnalysisOptions,
    jobs: usize,
) -> Result<Vec<(String, Result<InstanceReport>)>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    Ok(pool.install(|| instances.par_iter().map(|i| (i.label.clone(), analyze(i, opts))).collect()))
}
