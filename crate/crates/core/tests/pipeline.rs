mod common;

use bkit::decompose::{decompose, verify_decomposition, CanonicalBlock};
use bkit::form::pairing_from_matrix;
use bkit::iso::{isotest_forms, SearchBound, Verdict};
use bkit::realize::{direct_sum, realize_block, realize_form, realize_module, surgery_recipe};
use bkit::wire;
use bkit::{AlexanderModule, SymmetricPoly};
use common::*;

#[test]
fn module_to_blocks_and_back() {
    let m = AlexanderModule::new(vec![&lp(-1, &[1, -3, 1]).pow(2) * &one_plus_t(), one_plus_t()]).unwrap();
    assert!(m.classify().realizable);
    let a = realize_module(&m).unwrap();
    assert!(a.is_hermitian());
    let f = pairing_from_matrix(&a).unwrap();
    assert_eq!(f.module(), &m);
    let d = decompose(&f).unwrap();
    assert!(verify_decomposition(&f, &d).ok);
    let kinds: Vec<&str> = d.blocks.iter().map(|b| b.kind()).collect();
    assert_eq!(kinds.iter().filter(|k| **k == "hyperbolic").count(), 1);

    let back = direct_sum(&d.blocks.iter().map(|b| realize_block(b).unwrap()).collect::<Vec<_>>());
    let g = pairing_from_matrix(&back).unwrap();
    assert_eq!(g.module().factors(), m.factors());
    let report = isotest_forms(&f, &g, SearchBound::default()).unwrap();
    assert_ne!(report.verdict, Verdict::NotIso);
}

#[test]
fn realize_form_presents_the_same_pairing() {
    let a = realize_block(&CanonicalBlock::SymmetricCyclic { pi: lp(-1, &[1, -1, 1]), n: 2, p: SymmetricPoly::from_ints(&[3, 1]) }).unwrap();
    let f = pairing_from_matrix(&a).unwrap();
    let b = realize_form(&f).unwrap();
    let g = pairing_from_matrix(&b).unwrap();
    assert_eq!(g.module(), f.module());
    assert_eq!(isotest_forms(&f, &g, SearchBound::default()).unwrap().verdict, Verdict::Iso);
}

#[test]
fn wire_roundtrips() {
    let a = realize_block(&CanonicalBlock::HyperbolicPair { pi: lp(0, &[-2, 1]), n: 2 }).unwrap();
    assert_eq!(wire::parse_matrix(&wire::matrix_to_json(&a)).unwrap(), a);
    let f = pairing_from_matrix(&a).unwrap();
    let text = wire::form_to_json(&f).to_string();
    assert_eq!(wire::parse_form(&wire::parse_document(&text).unwrap()).unwrap(), f);
    let d = decompose(&f).unwrap();
    let again = wire::parse_decomposition(&wire::decomposition_to_json(&d)).unwrap();
    assert_eq!(again.blocks, d.blocks);
}

#[test]
fn surgery_recipe_rebuilds_the_matrix() {
    for seed in 0..20 {
        let mut r = rng(seed);
        let a = realize_block(&rand_block(&mut r)).unwrap();
        let recipe = surgery_recipe(&a).unwrap();
        assert_eq!(recipe.reconstruct(), a, "seed {seed}");
        assert!(recipe.admissible);
    }
}

#[test]
fn unrealizable_module_is_refused() {
    let m = AlexanderModule::new(vec![one_plus_t()]).unwrap();
    assert!(!m.classify().realizable);
    assert!(realize_module(&m).is_err());
}
