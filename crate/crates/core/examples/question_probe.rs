//! For ω trivial on both factors of an exact factorization, does
//! e(ω)·exp G divide |G|?

use dpr_exponent::bicrossed::{accepted_data_lattice, builtin_pair, omega_from_sigma_tau};
use dpr_exponent::exponent::question_probe;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> dpr_exponent::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for name in ["s3", "d4", "d4c", "c2xc4", "c2xc2xc2"] {
        let (mp, _, _) = builtin_pair(name)?;
        let bic = mp.build()?;
        let lattice = accepted_data_lattice(&bic, bic.group.order() as u64)?;
        for d in lattice.sample(&mut rng, 3) {
            let omega = omega_from_sigma_tau(&bic, &d)?;
            let p = question_probe(&omega, &bic.f_sub, &bic.gamma_sub, 12)?;
            println!(
                "{name:>9}: e(ω) = {}, exp G = {}, |G| = {}, divides: {}",
                p.class_order, p.exp_g, p.group_order, p.divides
            );
        }
    }
    Ok(())
}
