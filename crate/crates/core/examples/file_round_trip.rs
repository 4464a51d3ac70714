//! Writes group, cocycle and matched pair documents to a directory and reads
//! them back.
//!
//!     cargo run --example file_round_trip -- /tmp/dpr-files

use std::path::PathBuf;
use std::sync::Arc;

use dpr_exponent::bicrossed::builtin_pair;
use dpr_exponent::cohomology::cyclic_standard_cocycle;
use dpr_exponent::group::builtin_group;
use dpr_exponent::io::{load_cocycle, load_group, load_matched_pair, write_json, CocycleFile, CocycleKind, GroupFile, MatchedPairFile};
use dpr_exponent::Phase;

fn main() -> dpr_exponent::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("dpr-files"));
    std::fs::create_dir_all(&dir)?;

    let g = builtin_group("c6")?;
    write_json(&dir.join("c6.json"), &GroupFile::from_group(&g))?;
    let w = cyclic_standard_cocycle(&Arc::new(g.clone()), Phase::new(1, 6))?;
    // the group is referenced by file, relative to the cocycle document
    write_json(&dir.join("w.json"), &CocycleFile::from_cocycle(&w, "c6.json", CocycleKind::Cyclic))?;
    let (mp, f, gm) = builtin_pair("s3")?;
    write_json(&dir.join("s3-pair.json"), &MatchedPairFile::from_pair(&mp, f, gm))?;

    println!("group equal:   {}", load_group(&dir.join("c6.json"))? == g);
    println!("cocycle equal: {}", load_cocycle(&dir.join("w.json"))?.0 == w);
    println!("pair equal:    {}", load_matched_pair(&dir.join("s3-pair.json"))? == mp);
    println!("written to {}", dir.display());
    Ok(())
}
