//! Checks the quasi-Hopf and ribbon identities of D^ω(G) for one instance.
//!
//!     cargo run --release --example axiom_suite -- inflated:d4:2:1/2

use std::path::Path;

use dpr_exponent::corpus::{join_instance_args, parse_instance};
use dpr_exponent::double::{axiom_suite, DoubleContext};

fn main() -> dpr_exponent::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let desc = join_instance_args(&args).pop().unwrap_or_else(|| "inflated:d4:2:1/2".into());
    let inst = parse_instance(&desc, Path::new("."))?;
    let ctx = DoubleContext::new(inst.omega.clone())?;
    let report = axiom_suite(&ctx)?;
    println!("{} (powers up to {})", inst.label, report.power_bound);
    for c in &report.checks {
        let mark = if c.holds { "ok" } else { "FAILED" };
        println!("  {:<28} {mark}", c.name);
        if let Some(d) = &c.detail {
            println!("      {d}");
        }
    }
    Ok(())
}
