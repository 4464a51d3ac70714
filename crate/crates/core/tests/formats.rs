use std::path::Path;

use dpr_exponent::bicrossed::{builtin_pair, BUILTIN_PAIRS};
use dpr_exponent::corpus::parse_instance;
use dpr_exponent::double::{canonical_element, CanonicalKind, DoubleContext, MonomialRecord};
use dpr_exponent::group::builtin_group;
use dpr_exponent::io::{
    load_cocycle, load_group, load_matched_pair, to_json, write_json, CocycleFile, CocycleKind, DatumFile, GroupFile,
    MatchedPairFile,
};

fn reemit<T>(text: &str) -> String
where
    T: serde::Serialize + for<'de> serde::Deserialize<'de>,
{
    to_json(&serde_json::from_str::<T>(text).unwrap()).unwrap()
}

#[test]
fn builtin_groups_round_trip_bit_exact() {
    for name in ["c1", "c6", "c2xc4", "s3", "d4", "frob21", "heis27"] {
        let text = to_json(&GroupFile::from_group(&builtin_group(name).unwrap())).unwrap();
        assert_eq!(reemit::<GroupFile>(&text), text, "{name}");
    }
}

#[test]
fn cocycles_round_trip_bit_exact() {
    for desc in ["cyclic:3 zeta:1/3", "inflated:d4:2:1/2:1", "trivial:s3", "cyclic:9 zeta:2/9"] {
        let inst = parse_instance(desc, Path::new(".")).unwrap();
        let file = CocycleFile::from_cocycle(&inst.omega, inst.group_ref.as_deref().unwrap(), inst.kind());
        let text = to_json(&file).unwrap();
        assert_eq!(reemit::<CocycleFile>(&text), text, "{desc}");
        let back = serde_json::from_str::<CocycleFile>(&text).unwrap().to_cocycle(inst.group()).unwrap();
        assert_eq!(back, inst.omega);
    }
}

#[test]
fn pairs_and_data_round_trip_bit_exact() {
    for name in BUILTIN_PAIRS {
        let (mp, f, g) = builtin_pair(name).unwrap();
        let text = to_json(&MatchedPairFile::from_pair(&mp, f, g)).unwrap();
        assert_eq!(reemit::<MatchedPairFile>(&text), text);
    }
    let inst = parse_instance("bicrossed:s3:zero", Path::new(".")).unwrap();
    assert!(inst.omega.is_zero());
    let text = "{\n  \"sigma\": [],\n  \"tau\": [\n    [\n      1,\n      1,\n      1,\n      \"1/3\"\n    ]\n  ]\n}\n";
    assert_eq!(reemit::<DatumFile>(text), text);
}

#[test]
fn files_reference_each_other_relatively() {
    let dir = tempfile::tempdir().unwrap();
    let sub = dir.path().join("groups");
    std::fs::create_dir(&sub).unwrap();
    let d4 = builtin_group("d4").unwrap();
    write_json(&sub.join("d4.json"), &GroupFile::from_group(&d4)).unwrap();
    let inst = parse_instance("inflated:d4:2:1/2", Path::new(".")).unwrap();
    write_json(&dir.path().join("w.json"), &CocycleFile::from_cocycle(&inst.omega, "groups/d4.json", CocycleKind::Inflated))
        .unwrap();
    let (w, kind) = load_cocycle(&dir.path().join("w.json")).unwrap();
    assert_eq!(w, inst.omega);
    assert_eq!(kind, CocycleKind::Inflated);
    assert_eq!(load_group(&sub.join("d4.json")).unwrap(), d4);

    let pair = r#"{"F_ref": "groups/d4.json", "Gamma_ref": "c1", "act_on_F": [[0,1,2,3,4,5,6,7]], "act_on_Gamma": [[0,0,0,0,0,0,0,0]]}"#;
    std::fs::write(dir.path().join("p.json"), pair).unwrap();
    let mp = load_matched_pair(&dir.path().join("p.json")).unwrap();
    assert_eq!(mp.build().unwrap().group.order(), 8);
}

#[test]
fn invalid_documents_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let bad_table = r#"{"order": 2, "table": [[0,1],[1,1]]}"#;
    std::fs::write(dir.path().join("g.json"), bad_table).unwrap();
    assert!(load_group(&dir.path().join("g.json")).is_err());
    // not a cocycle: a single nonzero value on C2 at (a,a,a) of 1/3
    let w = r#"{"group_ref": "c2", "kind": "raw", "entries": [[1,1,1,"1/3"]]}"#;
    std::fs::write(dir.path().join("w.json"), w).unwrap();
    assert!(load_cocycle(&dir.path().join("w.json")).is_err());
    let extra = r#"{"group_ref": "c2", "kind": "raw", "entries": [], "extra": 1}"#;
    assert!(serde_json::from_str::<CocycleFile>(extra).is_err());
}

#[test]
fn monomial_records_serialize() {
    let inst = parse_instance("cyclic:2 zeta:1/2", Path::new(".")).unwrap();
    let ctx = DoubleContext::new(inst.omega).unwrap();
    let beta = canonical_element(&ctx, CanonicalKind::Beta).unwrap();
    let recs = beta.to_records();
    let text = serde_json::to_string(&recs).unwrap();
    let back: Vec<MonomialRecord> = serde_json::from_str(&text).unwrap();
    assert_eq!(back, recs);
    assert_eq!(recs.len(), 2);
}
