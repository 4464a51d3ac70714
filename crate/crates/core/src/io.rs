//! JSON documents for groups, cocycles, matched pairs and extension data.
//!
//! Every document is written as pretty-printed JSON followed by a newline;
//! parsing and re-emitting a document reproduces it byte for byte.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bicrossed::{ExtensionDatum, MatchedPair};
use crate::cohomology::Cochain3;
use crate::error::{Error, Result};
use crate::group::{builtin_group, ElemId, GroupTable};
use crate::phase::Phase;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CocycleKind {
    Trivial,
    Cyclic,
    Inflated,
    Bicrossed,
    Raw,
}

pub type SparseEntry = (usize, usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleFile {
    pub group_ref: String,
    pub kind: CocycleKind,
    pub entries: Vec<SparseEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchedPairFile {
    #[serde(rename = "F_ref")]
    pub f_ref: String,
    #[serde(rename = "Gamma_ref", alias = "Γ_ref")]
    pub gamma_ref: String,
    #[serde(rename = "act_on_F")]
    pub act_on_f: Vec<Vec<usize>>,
    #[serde(rename = "act_on_Gamma", alias = "act_on_Γ")]
    pub act_on_gamma: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumFile {
    pub sigma: Vec<SparseEntry>,
    pub tau: Vec<SparseEntry>,
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    fs::write(path, to_json(value)?)?;
    Ok(())
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

impl GroupFile {
    pub fn from_group(g: &GroupTable) -> GroupFile {
        GroupFile { order: g.order(), table: g.table_rows(), names: Some(g.names().to_vec()) }
    }

    pub fn to_group(&self) -> Result<GroupTable> {
        if self.table.len() != self.order {
            return Err(Error::InvalidGroup(format!("order {} but {} rows", self.order, self.table.len())));
        }
        GroupTable::from_table(self.table.clone(), self.names.clone())
    }
}

fn sparse(entries: impl Iterator<Item = ([usize; 3], Phase)>) -> Vec<SparseEntry> {
    entries.map(|([a, b, c], p)| (a, b, c, p.to_string())).collect()
}

fn parse_sparse(entries: &[SparseEntry]) -> Result<Vec<([usize; 3], Phase)>> {
    entries.iter().map(|(a, b, c, p)| Ok(([*a, *b, *c], p.parse::<Phase>()?))).collect()
}

impl CocycleFile {
    pub fn from_cocycle(omega: &Cochain3, group_ref: &str, kind: CocycleKind) -> CocycleFile {
        let entries = sparse(omega.entries().map(|(args, p)| (args.map(|a| a.0), p)));
        CocycleFile { group_ref: group_ref.to_string(), kind, entries }
    }

    pub fn to_cocycle(&self, group: &Arc<GroupTable>) -> Result<Cochain3> {
        let entries = parse_sparse(&self.entries)?;
        Cochain3::from_entries(group, entries.into_iter().map(|(t, p)| (t.map(ElemId), p)))
    }
}

impl MatchedPairFile {
    pub fn from_pair(mp: &MatchedPair, f_ref: &str, gamma_ref: &str) -> MatchedPairFile {
        MatchedPairFile {
            f_ref: f_ref.to_string(),
            gamma_ref: gamma_ref.to_string(),
            act_on_f: mp.act_on_f().to_vec(),
            act_on_gamma: mp.act_on_gamma().to_vec(),
        }
    }
}

impl DatumFile {
    pub fn from_datum(d: &ExtensionDatum) -> DatumFile {
        DatumFile { sigma: sparse(d.sigma_entries()), tau: sparse(d.tau_entries()) }
    }

    pub fn to_datum(&self, nf: usize, ng: usize) -> Result<ExtensionDatum> {
        ExtensionDatum::from_entries(nf, ng, parse_sparse(&self.sigma)?, parse_sparse(&self.tau)?)
    }
}

/// A builtin group name, or a group file path relative to `base`.
pub fn resolve_group_ref(reference: &str, base: &Path) -> Result<GroupTable> {
    if let Ok(g) = builtin_group(reference) {
        return Ok(g);
    }
    let path: PathBuf = base.join(reference);
    if !path.exists() {
        return Err(Error::Parse(format!("group reference {reference:?} is neither builtin nor a file")));
    }
    read_json::<GroupFile>(&path)?.to_group()
}

fn base_dir(path: &Path) -> &Path {
    path.parent().unwrap_or(Path::new("."))
}

pub fn load_group(path: &Path) -> Result<GroupTable> {
    read_json::<GroupFile>(path)?.to_group()
}

pub fn load_cocycle(path: &Path) -> Result<(Cochain3, CocycleKind)> {
    let file: CocycleFile = read_json(path)?;
    let group = Arc::new(resolve_group_ref(&file.group_ref, base_dir(path))?);
    let omega = file.to_cocycle(&group)?;
    omega.ensure_cocycle()?;
    Ok((omega, file.kind))
}

pub fn load_matched_pair(path: &Path) -> Result<MatchedPair> {
    let file: MatchedPairFile = read_json(path)?;
    let base = base_dir(path);
    let f = Arc::new(resolve_group_ref(&file.f_ref, base)?);
    let gamma = Arc::new(resolve_group_ref(&file.gamma_ref, base)?);
    MatchedPair::new(f, gamma, file.act_on_f, file.act_on_gamma)
}

pub fn load_datum(path: &Path, nf: usize, ng: usize) -> Result<ExtensionDatum> {
    read_json::<DatumFile>(path)?.to_datum(nf, ng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::cyclic_standard_cocycle;
    use crate::group::make_cyclic;

    #[test]
    fn group_round_trip() {
        let g = builtin_group("s3").unwrap();
        let text = to_json(&GroupFile::from_group(&g)).unwrap();
        let back: GroupFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_group().unwrap(), g);
        assert_eq!(to_json(&back).unwrap(), text);
    }

    #[test]
    fn cocycle_entries_follow_the_closed_form() {
        let g = Arc::new(make_cyclic(3));
        let w = cyclic_standard_cocycle(&g, Phase::new(1, 3)).unwrap();
        let file = CocycleFile::from_cocycle(&w, "c3", CocycleKind::Cyclic);
        for (i, j, l, p) in &file.entries {
            assert!(i + j >= 3);
            assert_eq!(p.parse::<Phase>().unwrap(), Phase::new(*l as i64, 3));
        }
        let text = to_json(&file).unwrap();
        let back: CocycleFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_cocycle(&g).unwrap(), w);
        assert_eq!(to_json(&back).unwrap(), text);
    }

    #[test]
    fn pair_file_accepts_greek_aliases() {
        let text = r#"{"F_ref": "c2", "Γ_ref": "c3", "act_on_F": [[0,1],[0,1],[0,1]], "act_on_Γ": [[0,0],[1,2],[2,1]]}"#;
        let f: MatchedPairFile = serde_json::from_str(text).unwrap();
        assert_eq!(f.gamma_ref, "c3");
        assert_eq!(f.act_on_gamma[1], vec![1, 2]);
    }

    #[test]
    fn malformed_phase_is_a_parse_error() {
        let file = CocycleFile { group_ref: "c2".into(), kind: CocycleKind::Raw, entries: vec![(1, 1, 1, "x/2".into())] };
        let g = Arc::new(make_cyclic(2));
        assert!(matches!(file.to_cocycle(&g), Err(Error::Parse(_))));
    }
}
