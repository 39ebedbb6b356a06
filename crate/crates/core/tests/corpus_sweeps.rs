mod common;

use centra_core::families::{make_family, semidirect_cyclic, FamilyKind};
use centra_core::verify::{analyze_corpus, verify, AnalysisCache, CorpusSpec, Outcome, Status, Theorem, Verdict};
use centra_core::{cent_count, classify_central_quotient, is_frobenius, three_cover_index, Limits, QuotientClass};
use common::{cent_count_all_pairs, corpus_groups};

#[test]
fn hashed_cent_count_matches_all_pairs_comparison() {
    let groups = corpus_groups(64);
    assert!(groups.len() >= 100, "only {} groups", groups.len());
    for (spec, g) in &groups {
        assert_eq!(cent_count(g), cent_count_all_pairs(&g.table_rows()), "{spec}");
    }
}

#[test]
fn no_three_cover_violations_up_to_48() {
    for (spec, g) in corpus_groups(48) {
        assert_eq!(three_cover_index(&g).unwrap(), vec![], "{spec}");
    }
}

#[test]
fn stated_centralizer_counts() {
    let cases = [
        (make_family(FamilyKind::Dihedral, 14).unwrap(), 9),
        (make_family(FamilyKind::Dihedral, 18).unwrap(), 11),
        (semidirect_cyclic(7, 3, 2).unwrap(), 9),
        (semidirect_cyclic(7, 6, 3).unwrap(), 9),
        (make_family(FamilyKind::Heisenberg, 7).unwrap(), 9),
    ];
    for (g, expected) in cases {
        assert_eq!(cent_count(&g), expected, "{}", g.name());
    }
}

#[test]
fn reference_classes() {
    let cases = [
        (make_family(FamilyKind::Dihedral, 14).unwrap(), QuotientClass::Q14),
        (semidirect_cyclic(7, 3, 2).unwrap(), QuotientClass::Q21),
        (semidirect_cyclic(7, 6, 3).unwrap(), QuotientClass::Q42),
        (make_family(FamilyKind::Heisenberg, 7).unwrap(), QuotientClass::Q49),
        (make_family(FamilyKind::Cyclic, 12).unwrap(), QuotientClass::Abelian),
        (make_family(FamilyKind::Symmetric, 4).unwrap(), QuotientClass::Other),
    ];
    for (g, expected) in cases {
        assert_eq!(classify_central_quotient(&g).unwrap(), expected, "{}", g.name());
    }
    let frob = is_frobenius(&semidirect_cyclic(7, 6, 3).unwrap()).unwrap().unwrap();
    assert_eq!((frob.kernel.size(), frob.complement.size()), (7, 6));
}

#[test]
fn witnesses_up_to_70_pass_both_statements() {
    let spec = CorpusSpec::up_to(70);
    for theorem in [Theorem::NineCentralizer, Theorem::PrimitiveNineCentralizer] {
        let report = verify(theorem, &spec, None).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        for witness in ["D14", "C7:C3(k=2)", "C7:C6(k=3)", "C5xD14"] {
            let record = report.records.iter().find(|r| r.spec == witness).unwrap();
            assert_eq!(record.cent_count, Some(9), "{witness}");
            assert_eq!(record.status, Status::Pass);
        }
        let d18 = report.records.iter().find(|r| r.spec == "D18").unwrap();
        assert_eq!(d18.cent_count, Some(11));
    }
}

#[test]
fn cached_and_fresh_analyses_agree() {
    let dir = tempfile::tempdir().unwrap();
    let spec = CorpusSpec::up_to(40);
    let limits = Limits::default();
    let (fresh, _) = analyze_corpus(&spec, &limits, None).unwrap();

    let mut cache = AnalysisCache::open(dir.path(), limits);
    let (first, _) = analyze_corpus(&spec, &limits, Some(&mut cache)).unwrap();
    cache.save().unwrap();
    assert_eq!(cache.len(), fresh.len());

    let mut reopened = AnalysisCache::open(dir.path(), limits);
    let (cached, _) = analyze_corpus(&spec, &limits, Some(&mut reopened)).unwrap();
    assert_eq!(first, fresh);
    assert_eq!(cached, fresh);
}

#[test]
fn proof_facts_hold_for_nine_centralizer_groups_up_to_100() {
    let (analyses, _) = analyze_corpus(&CorpusSpec::up_to(100), &Limits::default(), None).unwrap();
    let mut nine = 0;
    for a in &analyses {
        let Outcome::Analyzed(m) = &a.outcome else {
            panic!("{} skipped", a.spec);
        };
        if m.cent_count == 9 {
            nine += 1;
            let facts = m.facts.as_ref().unwrap();
            assert!(facts.failures().is_empty(), "{}: {:?}", a.spec, facts.failures());
        }
    }
    assert!(nine >= 4);
}
