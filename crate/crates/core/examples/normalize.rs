//! Removes a coboundary from a cocycle so that every ω(g, g⁻¹, g) has order
//! dividing exp G, then certifies that nothing but a coboundary was removed.

use std::sync::Arc;

use dpr_exponent::cohomology::{cyclic_standard_cocycle, normalize_cocycle, Cochain2, Solver2, DEFAULT_SOLVER_CAP};
use dpr_exponent::double::DoubleContext;
use dpr_exponent::exponent::beta_order;
use dpr_exponent::group::make_cyclic;
use dpr_exponent::Phase;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> dpr_exponent::Result<()> {
    let g = Arc::new(make_cyclic(6));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let noise = Cochain2::random(&g, 12, &mut rng);
    let omega = cyclic_standard_cocycle(&g, Phase::new(1, 6))?.add(&noise.coboundary())?;
    let (normalized, f) = normalize_cocycle(&omega, DEFAULT_SOLVER_CAP)?;

    println!("β order before: {}", beta_order(&DoubleContext::new(omega.clone())?)?);
    println!("β order after:  {}  (exp G = {})", beta_order(&DoubleContext::new(normalized.clone())?)?, g.exponent());
    for x in g.elements() {
        let v = normalized.get([x, g.inv(x), x]);
        println!("  g = {}: ω̃(g, g⁻¹, g) = {v}, times exp G = {}", g.name(x), v.times(g.exponent() as i64));
    }
    println!("max denominator of f: {}", f.max_denominator());
    let cert = Solver2::new(&g, DEFAULT_SOLVER_CAP)?.solve(&omega.sub(&normalized)?)?;
    println!("ω − ω̃ is a coboundary: {}", cert.is_witness());
    Ok(())
}
