//! Named instances `(G, ω)` and the default verification corpus.
//!
//! Instance syntax:
//!
//! * `cyclic:N zeta:p/q`: the standard cocycle on `C_N` (also `cyclic:N:p/q`;
//!   without a `zeta` the cocycle is trivial);
//! * `inflated:<group>:<q>:<zeta>[:<i>]`: the standard cocycle on `C_q` pulled
//!   back along the `i`-th surjection `G → C_q` with a new kernel (default 0);
//! * `trivial:<group>`;
//! * `bicrossed:<pair>:<datum>`: `ω(σ, τ)` on `F ⋈ Γ`, where `<pair>` is a
//!   builtin pair or a matched pair file and `<datum>` is `zero` or a datum file;
//! * a path ending in `.json`: a cocycle file;
//! * `A+B`: the pointwise sum of instances on the same group.

use std::path::Path;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bicrossed::{accepted_data_lattice, builtin_pair, omega_from_sigma_tau, ExtensionDatum, BUILTIN_PAIRS};
use crate::cohomology::{cyclic_standard_cocycle, Cochain3};
use crate::error::{Error, Result};
use crate::group::{builtin_group, cyclic_quotients, make_cyclic, ElemId, GroupTable, Subgroup};
use crate::io::{load_cocycle, load_datum, load_matched_pair, CocycleKind};
use crate::phase::Phase;

pub const FAMILIES: &[&str] = &["cyclic", "inflated", "trivial", "bicrossed"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Cyclic,
    Inflated,
    Trivial,
    Bicrossed,
    File,
    Sum,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub label: String,
    pub family: Family,
    pub omega: Cochain3,
    /// Subgroups `(F, Γ)` known to carry fiber-functor data.
    pub fiber: Option<(Subgroup, Subgroup)>,
    /// Builtin name of the group, when it has one.
    pub group_ref: Option<String>,
}

impl Instance {
    pub fn group(&self) -> &Arc<GroupTable> {
        self.omega.group()
    }

    pub fn kind(&self) -> CocycleKind {
        match self.family {
            Family::Cyclic => CocycleKind::Cyclic,
            Family::Inflated => CocycleKind::Inflated,
            Family::Trivial => CocycleKind::Trivial,
            Family::Bicrossed => CocycleKind::Bicrossed,
            Family::File | Family::Sum => CocycleKind::Raw,
        }
    }

    pub fn fiber_refs(&self) -> Option<(&Subgroup, &Subgroup)> {
        self.fiber.as_ref().map(|(f, g)| (f, g))
    }
}

/// Joins `cyclic:N` with a following `zeta:p/q` argument.
pub fn join_instance_args(args: &[String]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for a in args {
        match out.last_mut() {
            Some(prev) if a.starts_with("zeta:") && prev.starts_with("cyclic:") && !prev.contains("zeta:") => {
                prev.push(' ');
                prev.push_str(a);
            }
            _ => out.push(a.clone()),
        }
    }
    out
}

fn bad(desc: &str, why: &str) -> Error {
    Error::Parse(format!("instance `{desc}`: {why}"))
}

/// Parses one instance; relative file paths are taken relative to `base`.
pub fn parse_instance(desc: &str, base: &Path) -> Result<Instance> {
    let desc = desc.trim();
    if desc.contains('+') {
        let mut parts = desc.split('+').map(|p| parse_instance(p, base));
        let first = parts.next().expect("split yields a part")?;
        let mut omega = first.omega.clone();
        for p in parts {
            omega = omega.add(&p?.omega)?;
        }
        return Ok(Instance { label: desc.to_string(), family: Family::Sum, omega, fiber: None, group_ref: first.group_ref });
    }
    if let Some(rest) = desc.strip_prefix("cyclic:") {
        let (n, zeta) = match rest.split_once(" zeta:").or_else(|| rest.split_once(':')) {
            Some((n, z)) => (n, z.parse::<Phase>()?),
            None => (rest, Phase::ZERO),
        };
        let n: usize = n.trim().parse().map_err(|_| bad(desc, "bad order"))?;
        return cyclic_instance(n, zeta);
    }
    if let Some(rest) = desc.strip_prefix("inflated:") {
        let parts: Vec<&str> = rest.split(':').collect();
        if !(3..=4).contains(&parts.len()) {
            return Err(bad(desc, "expected inflated:<group>:<q>:<zeta>[:<i>]"));
        }
        let q: usize = parts[1].parse().map_err(|_| bad(desc, "bad quotient order"))?;
        let zeta: Phase = parts[2].parse()?;
        let i: usize = match parts.get(3) {
            Some(i) => i.parse().map_err(|_| bad(desc, "bad surjection index"))?,
            None => 0,
        };
        return inflated_instance(parts[0], q, zeta, i);
    }
    if let Some(name) = desc.strip_prefix("trivial:") {
        return trivial_instance(name);
    }
    if let Some(rest) = desc.strip_prefix("bicrossed:") {
        let (pair, datum) = rest.split_once(':').ok_or_else(|| bad(desc, "expected bicrossed:<pair>:<datum>"))?;
        let mp = match builtin_pair(pair) {
            Ok((mp, _, _)) => mp,
            Err(_) => load_matched_pair(&base.join(pair))?,
        };
        let (nf, ng) = (mp.f().order(), mp.gamma().order());
        let datum = if datum == "zero" { ExtensionDatum::zero(nf, ng) } else { load_datum(&base.join(datum), nf, ng)? };
        return bicrossed_instance(desc.to_string(), &mp, &datum);
    }
    if desc.ends_with(".json") {
        let (omega, _) = load_cocycle(&base.join(desc))?;
        return Ok(Instance { label: desc.to_string(), family: Family::File, omega, fiber: None, group_ref: None });
    }
    Err(bad(desc, "unrecognized syntax"))
}

pub fn cyclic_instance(n: usize, zeta: Phase) -> Result<Instance> {
    if n == 0 || n > crate::group::DEFAULT_ORDER_CAP {
        return Err(Error::Parse(format!("cyclic order {n} out of range")));
    }
    let g = Arc::new(make_cyclic(n));
    let omega = cyclic_standard_cocycle(&g, zeta)?;
    Ok(Instance {
        label: format!("cyclic:{n} zeta:{zeta}"),
        family: Family::Cyclic,
        omega,
        fiber: None,
        group_ref: Some(format!("c{n}")),
    })
}

/// Surjections `G → C_q`, keeping the first one for each kernel.
pub fn distinct_quotients(group: &GroupTable, q: usize) -> Vec<Vec<ElemId>> {
    let mut kernels: Vec<Vec<bool>> = Vec::new();
    let mut out = Vec::new();
    for map in cyclic_quotients(group, q) {
        let kernel: Vec<bool> = map.iter().map(|v| v.is_identity()).collect();
        if !kernels.contains(&kernel) {
            kernels.push(kernel);
            out.push(map);
        }
    }
    out
}

pub fn inflated_instance(name: &str, q: usize, zeta: Phase, i: usize) -> Result<Instance> {
    let g = Arc::new(builtin_group(name)?);
    let maps = distinct_quotients(&g, q);
    let proj = maps
        .get(i)
        .ok_or_else(|| Error::Parse(format!("{name} has {} cyclic quotients of order {q}", maps.len())))?;
    let base = cyclic_standard_cocycle(&Arc::new(make_cyclic(q)), zeta)?;
    let omega = base.inflate(&g, proj)?;
    let suffix = if i == 0 { String::new() } else { format!(":{i}") };
    Ok(Instance {
        label: format!("inflated:{name}:{q}:{zeta}{suffix}"),
        family: Family::Inflated,
        omega,
        fiber: None,
        group_ref: Some(name.to_string()),
    })
}

pub fn trivial_instance(name: &str) -> Result<Instance> {
    let g = Arc::new(builtin_group(name)?);
    Ok(Instance {
        label: format!("trivial:{name}"),
        family: Family::Trivial,
        omega: Cochain3::zero(&g),
        fiber: None,
        group_ref: Some(name.to_string()),
    })
}

pub fn bicrossed_instance(label: String, mp: &crate::bicrossed::MatchedPair, datum: &ExtensionDatum) -> Result<Instance> {
    let bic = mp.build()?;
    let omega = omega_from_sigma_tau(&bic, datum)?;
    omega.ensure_cocycle()?;
    Ok(Instance { label, family: Family::Bicrossed, omega, fiber: Some((bic.f_sub, bic.gamma_sub)), group_ref: None })
}

pub fn cyclic_family() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 1..=9 {
        for k in 0..n {
            out.push(cyclic_instance(n, Phase::new(k as i64, n as i64))?);
        }
    }
    Ok(out)
}

pub fn inflated_family() -> Result<Vec<Instance>> {
    // (group, quotient order, number of generators taken with every zeta)
    let plan: &[(&str, usize, usize)] = &[
        ("c2xc2", 2, 0),
        ("c2xc4", 2, 0),
        ("c2xc4", 4, 1),
        ("c3xc3", 3, 1),
        ("s3", 2, 0),
        ("d4", 2, 0),
        ("frob21", 3, 1),
        ("heis27", 3, 1),
    ];
    let mut out = Vec::new();
    for &(name, q, all_zeta) in plan {
        let g = builtin_group(name)?;
        let kernels = distinct_quotients(&g, q).len();
        // heis27 has four kernels; two keep the run short
        let kernels = if name == "heis27" { kernels.min(2) } else { kernels };
        for i in 0..kernels {
            let ks: Vec<i64> = if i < all_zeta { (1..q as i64).collect() } else { vec![1] };
            for k in ks {
                out.push(inflated_instance(name, q, Phase::new(k, q as i64), i)?);
            }
        }
    }
    for name in ["c2xc2", "c3xc3"] {
        let q = if name == "c2xc2" { 2 } else { 3 };
        let desc = format!("inflated:{name}:{q}:1/{q}+inflated:{name}:{q}:1/{q}:1");
        out.push(parse_instance(&desc, Path::new("."))?);
    }
    let desc = "inflated:c2xc4:4:1/4+inflated:c2xc4:2:1/2:1";
    out.push(parse_instance(desc, Path::new("."))?);
    Ok(out)
}

pub fn trivial_family() -> Result<Vec<Instance>> {
    ["s3", "d4", "c2xc2xc2", "c3xc3", "frob21"].iter().map(|n| trivial_instance(n)).collect()
}

/// For every builtin pair: the zero datum and `samples` seeded draws from the
/// data accepted modulo `|G|`.
pub fn bicrossed_family(seed: u64, samples: usize) -> Result<Vec<Instance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for name in BUILTIN_PAIRS {
        let (mp, _, _) = builtin_pair(name)?;
        let (nf, ng) = (mp.f().order(), mp.gamma().order());
        out.push(bicrossed_instance(format!("bicrossed:{name}:zero"), &mp, &ExtensionDatum::zero(nf, ng))?);
        let bic = mp.build()?;
        let lattice = accepted_data_lattice(&bic, (nf * ng) as u64)?;
        for (k, d) in lattice.sample(&mut rng, samples).into_iter().enumerate() {
            out.push(bicrossed_instance(format!("bicrossed:{name}:sample{k}"), &mp, &d)?);
        }
    }
    Ok(out)
}

pub fn family(name: &str, seed: u64) -> Result<Vec<Instance>> {
    match name {
        "cyclic" => cyclic_family(),
        "inflated" => inflated_family(),
        "trivial" => trivial_family(),
        "bicrossed" => bicrossed_family(seed, 2),
        "default" => default_corpus(seed),
        _ => Err(Error::Parse(format!("unknown family `{name}`"))),
    }
}

pub fn default_corpus(seed: u64) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for f in FAMILIES {
        out.extend(family(f, seed)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<Instance> {
        parse_instance(s, Path::new("."))
    }

    #[test]
    fn cyclic_syntax_variants() {
        let a = parse("cyclic:3 zeta:1/3").unwrap();
        let b = parse("cyclic:3:1/3").unwrap();
        assert_eq!(a.omega, b.omega);
        assert_eq!(a.label, "cyclic:3 zeta:1/3");
        assert!(parse("cyclic:3").unwrap().omega.is_zero());
        assert!(parse("cyclic:3 zeta:1/2").is_err());
        assert!(parse("cyclic:x").is_err());
        let args: Vec<String> = ["cyclic:3", "zeta:1/3", "trivial:s3"].map(String::from).to_vec();
        assert_eq!(join_instance_args(&args), vec!["cyclic:3 zeta:1/3".to_string(), "trivial:s3".to_string()]);
    }

    #[test]
    fn inflated_and_sums() {
        let d4 = builtin_group("d4").unwrap();
        assert_eq!(distinct_quotients(&d4, 2).len(), 3);
        let w = parse("inflated:d4:2:1/2:2").unwrap();
        assert_eq!(w.group().order(), 8);
        assert!(parse("inflated:d4:2:1/2:3").is_err());
        assert!(parse("inflated:s3:3:1/3").is_err());
        let s = parse("inflated:c2xc2:2:1/2+inflated:c2xc2:2:1/2:1").unwrap();
        assert!(s.omega.is_cocycle());
        assert_eq!(s.family, Family::Sum);
    }

    #[test]
    fn bicrossed_carries_fiber_data() {
        let i = parse("bicrossed:s3:zero").unwrap();
        assert!(i.omega.is_zero());
        let (f, g) = i.fiber_refs().unwrap();
        assert_eq!((f.order(), g.order()), (2, 3));
        assert!(parse("bicrossed:nope:zero").is_err());
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = bicrossed_family(7, 2).unwrap();
        let b = bicrossed_family(7, 2).unwrap();
        assert_eq!(a.len(), BUILTIN_PAIRS.len() * 3);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.label, y.label);
            assert_eq!(x.omega, y.omega);
        }
        assert_eq!(cyclic_family().unwrap().len(), 45);
        assert!(inflated_family().unwrap().iter().all(|i| i.omega.is_cocycle()));
    }
}
