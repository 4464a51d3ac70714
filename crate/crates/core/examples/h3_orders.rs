//! |H³(G, C^×)| for the small groups within the default cap.

use dpr_exponent::cohomology::{h3_order, DEFAULT_H3_CAP};
use dpr_exponent::group::builtin_group;

fn main() -> dpr_exponent::Result<()> {
    for name in ["c1", "c2", "c3", "c4", "c5", "c6", "c2xc2", "c7", "c8", "c2xc4", "c2xc2xc2", "s3", "d4"] {
        let g = builtin_group(name)?;
        println!("{name:>9}  |G| = {}  |H³| = {}", g.order(), h3_order(&g, DEFAULT_H3_CAP)?);
    }
    Ok(())
}
