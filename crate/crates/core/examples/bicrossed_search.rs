//! Searches matched pairs C₂ ⋈ (C₂ × C₂) and their accepted extension data for
//! the largest exp D^ω(G) on a group of order 8.

use std::sync::Arc;

use dpr_exponent::bicrossed::{accepted_data_lattice, omega_from_sigma_tau, search_matched_pairs};
use dpr_exponent::double::DoubleContext;
use dpr_exponent::exponent::exponent_via_monodromy;
use dpr_exponent::group::{builtin_group, direct_product, make_cyclic};

fn main() -> dpr_exponent::Result<()> {
    let c2 = Arc::new(make_cyclic(2));
    let klein = Arc::new(direct_product(&make_cyclic(2), &make_cyclic(2)));
    let d4 = builtin_group("d4")?;
    let pairs = search_matched_pairs(&c2, &klein);
    println!("{} matched pairs", pairs.len());
    for (i, mp) in pairs.iter().enumerate() {
        let bic = mp.build()?;
        let kind = if bic.group.order_profile() == d4.order_profile() { "D4" } else if bic.group.is_abelian() { "abelian" } else { "other" };
        let lattice = accepted_data_lattice(&bic, 8)?;
        let data = lattice.enumerate(4096);
        let Some(data) = data else {
            println!("  pair {i} ({kind}): {} data, skipped", lattice.size());
            continue;
        };
        let mut best = 0;
        for d in &data {
            let ctx = DoubleContext::new(omega_from_sigma_tau(&bic, d)?)?;
            best = best.max(exponent_via_monodromy(&ctx)?);
        }
        println!("  pair {i} ({kind}): {} data, largest exp D = {best}", data.len());
    }
    Ok(())
}
