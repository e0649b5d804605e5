//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use supersol::catalog::{build_corpus, make_symmetric, CorpusConfig};
use supersol::verify::{generation_vs_product_demo, sweep, verify_order_144_example, SweepConfig};
use supersol::{Formation, Group, Permutation};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn default_corpus() -> Result<Vec<Group>, String> {
    build_corpus(&CorpusConfig::default()).map_err(|e| e.to_string())
}

fn order_144_example() -> Outcome {
    let r = verify_order_144_example().map_err(|e| e.to_string())?;
    ensure(r.passed, format!("failing clauses: {:?}", r.failing_clauses()))?;
    ensure(
        (r.e_order, r.h_order, r.x_order) == (144, Some(72), Some(36)),
        format!("orders {} {:?} {:?}", r.e_order, r.h_order, r.x_order),
    )?;
    Ok(format!("{} clauses hold; {}", r.clauses.len(), r.identification))
}

fn generation_vs_product() -> Outcome {
    let d = generation_vs_product_demo().map_err(|e| e.to_string())?;
    ensure(d.passed, "demo did not pass")?;
    let dihedral = d.expected_witness[0].witness.as_ref().ok_or("no dihedral witness")?;
    let heisenberg = d.expected_witness[1].witness.as_ref().ok_or("no order-27 witness")?;
    ensure(dihedral.join_order == 8 && dihedral.product_set_size == 4, "dihedral witness sizes")?;
    ensure(heisenberg.join_order == 27 && heisenberg.product_set_size < 27, "order-27 witness sizes")?;
    Ok(format!("|XY| = {} in D8, {} in the order-27 group", dihedral.product_set_size, heisenberg.product_set_size))
}

fn theorem_sweep() -> Outcome {
    let start = Instant::now();
    let corpus = default_corpus()?;
    ensure(corpus.iter().any(|g| g.order() == 144), "order-144 group missing from corpus")?;
    let r = sweep(&corpus, &SweepConfig::default());
    ensure(r.groups.iter().all(|g| g.error.is_none()), "some groups could not be swept")?;
    ensure(r.pairs_with_hypotheses > 0, "no pair met the hypotheses")?;
    ensure(r.violations.is_empty(), r.summary())?;
    Ok(format!(
        "{} groups, {} pairs with hypotheses, 0 violations, {:.1?}",
        r.groups_examined,
        r.pairs_with_hypotheses,
        start.elapsed()
    ))
}

fn oracle_equivalence() -> Outcome {
    let corpus = default_corpus()?;
    let mut checked = 0;
    for g in corpus.iter().filter(|g| g.order() <= 200) {
        let by_maximal = g.is_supersoluble_by_maximal_subgroups().map_err(|e| e.to_string())?;
        ensure(g.is_supersoluble() == by_maximal, format!("{}: supersolubility oracles disagree", g.name()))?;
        ensure(
            g.is_nilpotent() == g.is_nilpotent_by_central_series(),
            format!("{}: nilpotency oracles disagree", g.name()),
        )?;
        let residual = g.formation_residual(Formation::Abelian).map_err(|e| e.to_string())?;
        ensure(residual == g.derived_subgroup(), format!("{}: abelian residual differs from G'", g.name()))?;
        checked += 1;
    }
    Ok(format!("{checked} groups"))
}

fn structure_identities() -> Outcome {
    let s4 = Group::generate(&make_symmetric(4).map_err(|e| e.to_string())?, Default::default()).map_err(|e| e.to_string())?;
    let s3 = Group::generate(&make_symmetric(3).map_err(|e| e.to_string())?, Default::default()).map_err(|e| e.to_string())?;
    let f = s4.fitting();
    ensure(f.order() == 4, format!("|F(S4)| = {}", f.order()))?;
    let residual = s4.formation_residual(Formation::AbelianSylows).map_err(|e| e.to_string())?;
    ensure(residual == f, format!("S4 residual has order {}", residual.order()))?;
    ensure(s3.fitting().order() == 3, format!("|F(S3)| = {}", s3.fitting().order()))?;
    let v: Vec<Permutation> = ["(1 2)(3 4)", "(1 3)(2 4)"].iter().map(|s| Permutation::parse(s, 4).unwrap()).collect();
    let v = s4.subgroup_from(&v).map_err(|e| e.to_string())?;
    ensure(v == f, "Klein subgroup differs from F(S4)")?;
    let q = s4.quotient(&v).map_err(|e| e.to_string())?;
    ensure(q.group.order() == 6 && !q.group.is_abelian(), "S4/V is not nonabelian of order 6")?;
    Ok("|F(S4)| = 4 = |S4 residual|, |F(S3)| = 3, S4/V nonabelian of order 6".into())
}

fn implication_chain() -> Outcome {
    let corpus = default_corpus()?;
    for g in &corpus {
        if let Some(broken) = g.classify().implication_violation() {
            return Err(format!("{}: {broken}", g.name()));
        }
    }
    Ok(format!("{} groups", corpus.len()))
}

fn determinism() -> Outcome {
    let corpus = default_corpus()?;
    let n = std::thread::available_parallelism().map_or(4, |n| n.get().max(2));
    let serial = sweep(&corpus, &SweepConfig { jobs: 1, ..Default::default() }).to_jsonl();
    let parallel = sweep(&corpus, &SweepConfig { jobs: n, ..Default::default() }).to_jsonl();
    ensure(serial == parallel, format!("reports differ between 1 and {n} workers"))?;
    Ok(format!("{} bytes identical at 1 and {n} workers", serial.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 order-144 example", order_144_example),
        ("2 generation vs product", generation_vs_product),
        ("3 theorem sweep", theorem_sweep),
        ("4 predicate oracle equivalence", oracle_equivalence),
        ("5 structure identities", structure_identities),
        ("6 report implication chain", implication_chain),
        ("7 sweep determinism", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
