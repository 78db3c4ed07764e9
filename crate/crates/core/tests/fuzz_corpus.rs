use std::fs;
use std::path::Path;

use bkit::wire;
use serde_json::Value;

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn roundtrip<T, P, S>(target: &str, parse: P, emit: S)
where
    T: PartialEq + std::fmt::Debug,
    P: Fn(&Value) -> bkit::Result<T>,
    S: Fn(&T) -> Value,
{
    let mut parsed = 0;
    for (name, text) in seeds(target) {
        let Ok(v) = wire::parse_document(&text) else { continue };
        if let Ok(x) = parse(&v) {
            assert_eq!(parse(&emit(&x)).unwrap(), x, "{target}/{name}");
            parsed += 1;
        }
    }
    assert!(parsed > 0, "{target}: no seed parses");
}

#[test]
fn document_seeds() {
    let ok = seeds("parse_document").iter().filter(|(_, t)| wire::parse_document(t).is_ok()).count();
    assert!(ok > 0);
    assert!(wire::parse_document(&seeds("parse_document").iter().find(|(n, _)| n == "truncated").unwrap().1).is_err());
}

#[test]
fn value_seeds_roundtrip() {
    roundtrip("parse_poly", wire::parse_poly, wire::poly_to_json);
    roundtrip("parse_matrix", wire::parse_matrix, wire::matrix_to_json);
    roundtrip("parse_module", wire::parse_module, wire::module_to_json);
    roundtrip("parse_form", wire::parse_form, wire::form_to_json);
    roundtrip("parse_block", wire::parse_block, wire::block_to_json);
    roundtrip("parse_decomposition", wire::parse_decomposition, wire::decomposition_to_json);
}

fn check_all(text: &str) {
    let Ok(v) = wire::parse_document(text) else { return };
    macro_rules! rt {
        ($p:path, $e:path) => {
            if let Ok(x) = $p(&v) {
                assert_eq!($p(&$e(&x)).unwrap(), x, "{text}");
            }
        };
    }
    rt!(wire::parse_poly, wire::poly_to_json);
    rt!(wire::parse_matrix, wire::matrix_to_json);
    rt!(wire::parse_module, wire::module_to_json);
    rt!(wire::parse_form, wire::form_to_json);
    rt!(wire::parse_block, wire::block_to_json);
    rt!(wire::parse_decomposition, wire::decomposition_to_json);
}

fn all_seeds() -> Vec<String> {
    ["parse_poly", "parse_matrix", "parse_module", "parse_form", "parse_block", "parse_decomposition"]
        .iter()
        .flat_map(|t| seeds(t).into_iter().map(|(_, s)| s))
        .collect()
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(2000))]

    #[test]
    fn mutated_seeds_roundtrip(pick in 0usize..64, edits in proptest::collection::vec((0usize..4096, proptest::sample::select(b"0123456789-/\"[],{}ab ".to_vec())), 1..4)) {
        let pool = all_seeds();
        let mut bytes = pool[pick % pool.len()].clone().into_bytes();
        for (at, c) in edits {
            let i = at % bytes.len();
            bytes[i] = c;
        }
        if let Ok(s) = String::from_utf8(bytes) {
            check_all(&s);
        }
    }
}
