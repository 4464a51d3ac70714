//! exp D^ω(C_n) by the three routes for every standard cocycle on C_n.
//!
//!     cargo run --example cyclic_exponent -- 6

use std::sync::Arc;

use dpr_exponent::cohomology::cyclic_standard_cocycle;
use dpr_exponent::double::DoubleContext;
use dpr_exponent::exponent::all_routes;
use dpr_exponent::group::make_cyclic;
use dpr_exponent::Phase;

fn main() -> dpr_exponent::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let g = Arc::new(make_cyclic(n));
    println!("{:>6}  {:>5}  {:>6}  {:>6}  {:>9}", "zeta", "ord", "pi", "ribbon", "monodromy");
    for k in 0..n as i64 {
        let zeta = Phase::new(k, n as i64);
        let ctx = DoubleContext::new(cyclic_standard_cocycle(&g, zeta)?)?;
        let r = all_routes(&ctx)?;
        println!("{:>6}  {:>5}  {:>6}  {:>6}  {:>9}", zeta.to_string(), zeta.order(), r.pi, r.ribbon, r.monodromy);
    }
    Ok(())
}
