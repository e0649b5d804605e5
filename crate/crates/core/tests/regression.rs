//! Values fixed by the first full run over the default corpus.

use supersol::catalog::{build_corpus, CorpusConfig};
use supersol::verify::{hunt_witnesses, sweep, SweepConfig, WitnessKind};

#[test]
fn default_corpus_sweep_totals() {
    let corpus = build_corpus(&CorpusConfig::default()).unwrap();
    assert_eq!(corpus.len(), 211);
    let r = sweep(&corpus, &SweepConfig::default());
    assert_eq!(r.pairs_examined, 1_530_121);
    assert_eq!(r.pairs_proper_join, 167_054);
    assert_eq!(r.pairs_with_hypotheses, 57_648);
    assert!(r.violations.is_empty());
    assert!(r.groups.iter().all(|g| g.error.is_none()));
    let keys: Vec<_> = r.witnesses.iter().map(|w| w.group_key.as_str()).collect();
    assert_eq!(keys, ["s3wrc2"]);
}

#[test]
fn hunt_finds_both_kinds_in_the_wreath_product() {
    let corpus = build_corpus(&CorpusConfig::default()).unwrap();
    let found = hunt_witnesses(&corpus, 0).unwrap();
    let summary: Vec<_> = found.iter().map(|w| (w.kind, w.group_key.as_str(), w.a_order, w.b_order)).collect();
    assert_eq!(
        summary,
        [
            (WitnessKind::GeneratedBySubnormal, "s3wrc2", 6, 6),
            (WitnessKind::ProductOfNormal, "s3wrc2", 36, 36),
        ]
    );
    assert!(found.iter().all(|w| w.unconditional_conclusions_hold));
}

#[test]
fn supersoluble_corpus_groups_have_normal_top_sylow_and_nilpotent_derived_subgroup() {
    let corpus = build_corpus(&CorpusConfig::default()).unwrap();
    let mut checked = 0;
    for g in corpus.iter().filter(|g| g.classify().supersoluble && g.order() > 1) {
        let p = *g.primes().last().unwrap();
        assert!(g.is_normal(&g.sylow(p)), "{}: Sylow {p}-subgroup not normal", g.name());
        assert!(g.classify_subgroup(&g.derived_subgroup()).unwrap().nilpotent, "{}", g.name());
        checked += 1;
    }
    assert!(checked > 150, "{checked}");
}
