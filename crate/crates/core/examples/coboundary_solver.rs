//! Exact solutions of dτ = ω via Smith normal form, and the obstruction
//! reported when ω is not a coboundary.

use std::sync::Arc;

use dpr_exponent::cohomology::{class_order, cyclic_standard_cocycle, Cochain2, CoboundaryCertificate, Solver2};
use dpr_exponent::group::builtin_group;
use dpr_exponent::Phase;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> dpr_exponent::Result<()> {
    let s3 = Arc::new(builtin_group("s3")?);
    let solver = Solver2::new(&s3, 12)?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let tau = Cochain2::random(&s3, 12, &mut rng);
    let target = tau.coboundary();
    match solver.solve(&target)? {
        CoboundaryCertificate::Witness(w) => println!("witness found, dw == target: {}", w.coboundary() == target),
        CoboundaryCertificate::Obstruction { row, value } => println!("unexpected obstruction at {row}: {value}"),
    }
    println!("torsion of the coboundary map on S3: {:?}", solver.torsion());

    let c4 = Arc::new(builtin_group("c4")?);
    let omega = cyclic_standard_cocycle(&c4, Phase::new(1, 4))?;
    match Solver2::new(&c4, 12)?.solve(&omega)? {
        CoboundaryCertificate::Witness(_) => println!("C4 generator is a coboundary?"),
        CoboundaryCertificate::Obstruction { row, value } => println!("C4, ζ = 1/4: obstruction in row {row}, value {value}"),
    }
    println!("class order of ζ = 1/4 on C4: {}", class_order(&omega, 12)?);
    println!("class order of ζ = 2/4 on C4: {}", class_order(&cyclic_standard_cocycle(&c4, Phase::new(1, 2))?, 12)?);
    Ok(())
}
