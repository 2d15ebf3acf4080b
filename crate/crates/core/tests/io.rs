use std::fs;
use std::path::PathBuf;

use wha_core::builders::{build_group_algebra, GroupTable};
use wha_core::io::{AlgebraFile, GroupFile, GroupoidFile, ModulesFile};
use wha_core::wha::same_structure;
use wha_core::{Error, Field};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn corpus(suffix: &str) -> Vec<(String, String)> {
    let mut files: Vec<_> = fs::read_dir(data(""))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.to_string_lossy().ends_with(suffix))
        .map(|p| (p.display().to_string(), fs::read_to_string(&p).unwrap()))
        .collect();
    files.sort();
    assert!(!files.is_empty());
    files
}

#[test]
fn algebra_files_are_fixpoints() {
    for (name, text) in corpus(".alg.json") {
        let file = AlgebraFile::parse(&text).unwrap();
        let (h, r) = file.to_algebra().unwrap();
        let again = AlgebraFile::from_algebra(&h, r.as_ref());
        assert_eq!(again, file, "{name}");
        assert_eq!(again.to_json(), text, "{name}");
        let (h2, r2) = AlgebraFile::parse(&again.to_json()).unwrap().to_algebra().unwrap();
        assert!(same_structure(&h, &h2) && r == r2, "{name}");
    }
}

#[test]
fn table_and_module_files_are_fixpoints() {
    for (name, text) in corpus(".group.json") {
        let f = GroupFile::parse(&text).unwrap();
        f.table.validate().unwrap();
        assert_eq!(f.to_json(), text, "{name}");
    }
    for (name, text) in corpus(".groupoid.json") {
        let f = GroupoidFile::parse(&text).unwrap();
        f.table.validate().unwrap();
        assert_eq!(f.to_json(), text, "{name}");
    }
    for (name, text) in corpus(".modules.json") {
        let f = ModulesFile::parse(&text).unwrap();
        let again = ModulesFile::from_modules(&f.to_modules(&Field::rationals()).unwrap());
        assert_eq!(again.to_json(), text, "{name}");
    }
}

#[test]
fn cyclotomic_coefficients_round_trip() {
    let ex = build_group_algebra(&GroupTable::symmetric(3), &Field::cyclotomic(3)).unwrap();
    let r = ex.r.scale(&Field::cyclotomic(3).parse("1/2 - 3*z").unwrap());
    let file = AlgebraFile::from_algebra(&ex.algebra, Some(&r));
    let (_, back) = AlgebraFile::parse(&file.to_json()).unwrap().to_algebra().unwrap();
    assert_eq!(back, Some(r));
}

#[test]
fn malformed_files_are_parse_errors() {
    let text = fs::read_to_string(data("z2.alg.json")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let cases = [
        ("/mult/0/3", serde_json::json!("1/0")),
        ("/mult/0/2", serde_json::json!(7)),
        ("/unit/0/1", serde_json::json!("z")),
        ("/format_version", serde_json::json!(9)),
    ];
    for (ptr, bad) in cases {
        let old = v.pointer(ptr).unwrap().clone();
        *v.pointer_mut(ptr).unwrap() = bad;
        let res = AlgebraFile::parse(&v.to_string()).and_then(|f| f.to_algebra().map(|_| ()));
        assert!(matches!(res, Err(Error::Parse(_))), "{ptr}: {res:?}");
        *v.pointer_mut(ptr).unwrap() = old;
    }
    assert!(matches!(AlgebraFile::parse("{"), Err(Error::Parse(_))));
}
