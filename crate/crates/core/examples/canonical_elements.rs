//! Orders of the distinguished elements β, u, v and R₂₁R of D^ω(G).

use std::path::Path;

use dpr_exponent::corpus::{join_instance_args, parse_instance};
use dpr_exponent::double::{canonical_element, CanonicalKind, DoubleContext};
use dpr_exponent::exponent::exp_omega_modified;

fn main() -> dpr_exponent::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let desc = join_instance_args(&args).pop().unwrap_or_else(|| "cyclic:4 zeta:1/4".into());
    let inst = parse_instance(&desc, Path::new("."))?;
    let ctx = DoubleContext::new(inst.omega.clone())?;
    // every one of these orders divides exp_ω G squared
    let bound = exp_omega_modified(&inst.omega).pow(2);
    for kind in [CanonicalKind::Beta, CanonicalKind::U, CanonicalKind::V, CanonicalKind::R21R] {
        let m = canonical_element(&ctx, kind)?;
        println!("{:>5}: {} terms, order {}", kind.to_string(), m.len(), m.order(bound)?);
    }
    Ok(())
}
