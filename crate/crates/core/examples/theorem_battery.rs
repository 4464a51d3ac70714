//! Every divisibility statement evaluated on one instance, with the exponent
//! quantities it was computed from.
//!
//!     cargo run --example theorem_battery -- bicrossed:d4:zero

use std::path::Path;

use dpr_exponent::corpus::{join_instance_args, parse_instance};
use dpr_exponent::exponent::{theorem_battery, BatteryOptions};

fn main() -> dpr_exponent::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let desc = join_instance_args(&args).pop().unwrap_or_else(|| "cyclic:9 zeta:1/3".into());
    let inst = parse_instance(&desc, Path::new("."))?;
    let r = theorem_battery(&inst.omega, inst.fiber_refs(), &BatteryOptions::default())?;
    println!("{}: |G| = {}, exp G = {}, exp_ω G = {}, exp D = {}", inst.label, r.group_order, r.exp_g, r.exp_omega_g, r.exp_double);
    for e in &r.elements {
        println!("  {:>8}  order {:>2}  e(ω_g) {}", e.element, e.order, e.e_omega);
    }
    for c in &r.checks {
        let status = match (c.skipped, c.holds) {
            (true, _) => "skipped",
            (false, true) => "holds",
            (false, false) => "COUNTEREXAMPLE",
        };
        match (c.divisor, c.dividend) {
            (Some(a), Some(b)) => println!("  {:<48} {status} ({a} | {b})", c.name),
            _ => println!("  {:<48} {status}", c.name),
        }
    }
    for e in &r.events {
        println!("  event: {e}");
    }
    Ok(())
}
