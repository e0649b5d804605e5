//! Brute-force harness for groups generated by two subnormal supersoluble
//! subgroups.
//!
//! For every pair `(A, B)` of subnormal supersoluble subgroups with
//! `⟨A, B⟩ = G`, the harness asserts:
//!
//! * (a) `G` is metanilpotent and has a Sylow tower of supersoluble type;
//! * (b) if `G^𝒜` is nilpotent then `G` is supersoluble, where `𝒜` is the class
//!   of groups with abelian Sylow subgroups;
//! * (c) if `gcd(|A:A′|, |B:B′|) = 1` then `G` is supersoluble;
//! * (d) if `G′` is nilpotent then `G` is supersoluble;
//!
//! and the intermediate facts behind them:
//!
//! * (t1) for the largest prime `p`, `⟨A_p, B_p⟩ ≤ O_p(G)`;
//! * (t2) `A′, B′ ≤ F(G)`;
//! * (t3) the images of `A` and `B` generate `G/F(G)`, which is nilpotent;
//! * (t4) under (b) or (c): `AG′`, `BG′` are normal and supersoluble and
//!   `AG′·BG′ = G`;
//! * (t5) under (c): `|AF(G)/F(G)|` and `|BF(G)/F(G)|` are coprime.
//!
//! Failures are recorded in the verdict, never raised.

use std::collections::HashMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use log::warn;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::perm::gcd;
use crate::structure::{Formation, PropertyReport, QuotientGroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conclusions {
    pub metanilpotent: bool,
    pub sylow_tower: bool,
    pub supersoluble: bool,
    /// Whether one of (b), (c), (d) demands supersolubility.
    pub supersoluble_required: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofTrace {
    pub t1_sylow_join_in_op: bool,
    pub t2_derived_in_fitting: bool,
    pub t3_images_generate: bool,
    pub t3_quotient_nilpotent: bool,
    /// `None` when neither (b) nor (c) applies.
    pub t4_product_of_normal_supersoluble: Option<bool>,
    /// `None` when (c) does not apply.
    pub t5_coprime_images: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub group_key: String,
    pub group_order: usize,
    pub a_order: usize,
    pub b_order: usize,
    pub a_gens: Vec<String>,
    pub b_gens: Vec<String>,
    pub a_subnormal: bool,
    pub b_subnormal: bool,
    pub a_supersoluble: bool,
    pub b_supersoluble: bool,
    pub generates: bool,
    pub hypotheses_hold: bool,
    pub condition1: bool,
    pub condition2: bool,
    pub corollary_condition: bool,
    pub conclusions: Option<Conclusions>,
    pub proof_trace: Option<ProofTrace>,
    pub violation: Option<String>,
}

/// Per-group data shared by every pair.
struct GroupFacts {
    report: PropertyReport,
    fitting: Subgroup,
    fitting_quotient: QuotientGroup,
    derived: Subgroup,
    condition1: bool,
    corollary: bool,
    largest_prime: Option<usize>,
    o_p_largest: Subgroup,
}

impl GroupFacts {
    fn compute(g: &Group) -> Result<Self> {
        let fitting = g.fitting();
        let fitting_quotient = g.quotient(&fitting)?;
        let derived = g.derived_subgroup();
        let residual = g.formation_residual(Formation::AbelianSylows)?;
        let condition1 = g.classify_subgroup(&residual)?.nilpotent;
        let corollary = g.classify_subgroup(&derived)?.nilpotent;
        let largest_prime = g.primes().last().copied();
        let o_p_largest = largest_prime.map_or_else(|| g.trivial(), |p| g.o_p(p));
        Ok(GroupFacts {
            report: g.classify(),
            fitting,
            fitting_quotient,
            derived,
            condition1,
            corollary,
            largest_prime,
            o_p_largest,
        })
    }
}

/// Per-subgroup data shared by every pair containing it.
struct SubgroupFacts {
    subnormal: bool,
    supersoluble: bool,
    abelianization_index: usize,
    derived: Subgroup,
    sylow_largest: Subgroup,
}

impl SubgroupFacts {
    fn compute(g: &Group, gf: &GroupFacts, h: &Subgroup) -> Result<Self> {
        Ok(SubgroupFacts {
            subnormal: g.is_subnormal(h).is_subnormal,
            supersoluble: g.classify_subgroup(h)?.supersoluble,
            abelianization_index: g.abelianization_index(h),
            derived: g.derived_subgroup_of(h),
            sylow_largest: gf.largest_prime.map_or_else(|| g.trivial(), |p| g.sylow_in(p, h)),
        })
    }

    fn is_candidate(&self) -> bool {
        self.subnormal && self.supersoluble
    }
}

/// Lazily computed `HG′` facts, keyed by subgroup members.
#[derive(Default)]
struct ExtendedCache {
    by_members: HashMap<FixedBitSet, (Subgroup, bool)>,
}

impl ExtendedCache {
    /// `(HG′, HG′ normal and supersoluble)`.
    fn get(&mut self, g: &Group, gf: &GroupFacts, h: &Subgroup) -> Result<(Subgroup, bool)> {
        if let Some(v) = self.by_members.get(h.member_set()) {
            return Ok(v.clone());
        }
        let hg = g.join(h, &gf.derived)?;
        let ok = g.is_normal(&hg) && g.classify_subgroup(&hg)?.supersoluble;
        self.by_members.insert(h.member_set().clone(), (hg.clone(), ok));
        Ok((hg, ok))
    }
}

fn gen_strings(g: &Group, h: &Subgroup) -> Vec<String> {
    g.permutations_of(h).iter().map(|p| p.to_string()).collect()
}

fn evaluate(
    g: &Group,
    gf: &GroupFacts,
    cache: &mut ExtendedCache,
    (a, fa): (&Subgroup, &SubgroupFacts),
    (b, fb): (&Subgroup, &SubgroupFacts),
    generates: bool,
) -> Result<PairVerdict> {
    let hypotheses_hold = fa.is_candidate() && fb.is_candidate() && generates;
    let condition2 = gcd(fa.abelianization_index, fb.abelianization_index) == 1;
    let mut verdict = PairVerdict {
        group_key: g.name().to_string(),
        group_order: g.order(),
        a_order: a.order(),
        b_order: b.order(),
        a_gens: gen_strings(g, a),
        b_gens: gen_strings(g, b),
        a_subnormal: fa.subnormal,
        b_subnormal: fb.subnormal,
        a_supersoluble: fa.supersoluble,
        b_supersoluble: fb.supersoluble,
        generates,
        hypotheses_hold,
        condition1: gf.condition1,
        condition2,
        corollary_condition: gf.corollary,
        conclusions: None,
        proof_trace: None,
        violation: None,
    };
    if !hypotheses_hold {
        return Ok(verdict);
    }

    let report = &gf.report;
    let required = gf.condition1 || condition2 || gf.corollary;
    let conclusions = Conclusions {
        metanilpotent: report.metanilpotent,
        sylow_tower: report.sylow_tower_supersoluble,
        supersoluble: report.supersoluble,
        supersoluble_required: required,
    };

    let t1 = g.join(&fa.sylow_largest, &fb.sylow_largest)?.is_subgroup_of(&gf.o_p_largest);
    let t2 = fa.derived.is_subgroup_of(&gf.fitting) && fb.derived.is_subgroup_of(&gf.fitting);
    let q = &gf.fitting_quotient;
    let a_image = q.image(a);
    let b_image = q.image(b);
    let t3_generate = q.group.is_whole(&q.group.join(&a_image, &b_image)?);
    let t3_nilpotent = q.group.classify().nilpotent;
    let t4 = if gf.condition1 || condition2 {
        let (ag, ag_ok) = cache.get(g, gf, a)?;
        let (bg, bg_ok) = cache.get(g, gf, b)?;
        Some(ag_ok && bg_ok && g.product_set_size(&ag, &bg)? == g.order())
    } else {
        None
    };
    let t5 = condition2.then(|| gcd(a_image.order(), b_image.order()) == 1);
    let trace = ProofTrace {
        t1_sylow_join_in_op: t1,
        t2_derived_in_fitting: t2,
        t3_images_generate: t3_generate,
        t3_quotient_nilpotent: t3_nilpotent,
        t4_product_of_normal_supersoluble: t4,
        t5_coprime_images: t5,
    };

    let mut failed = Vec::new();
    if !conclusions.metanilpotent {
        failed.push("(a) metanilpotent");
    }
    if !conclusions.sylow_tower {
        failed.push("(a) sylow tower");
    }
    if gf.condition1 && !report.supersoluble {
        failed.push("(b) condition 1 without supersolubility");
    }
    if condition2 && !report.supersoluble {
        failed.push("(c) condition 2 without supersolubility");
    }
    if gf.corollary && !report.supersoluble {
        failed.push("(d) nilpotent derived subgroup without supersolubility");
    }
    if !t1 {
        failed.push("(t1)");
    }
    if !t2 {
        failed.push("(t2)");
    }
    if !t3_generate {
        failed.push("(t3) generation");
    }
    if !t3_nilpotent {
        failed.push("(t3) nilpotency");
    }
    if t4 == Some(false) {
        failed.push("(t4)");
    }
    if t5 == Some(false) {
        failed.push("(t5)");
    }
    verdict.violation = (!failed.is_empty()).then(|| failed.join("; "));
    verdict.conclusions = Some(conclusions);
    verdict.proof_trace = Some(trace);
    Ok(verdict)
}

/// Checks one triple `(G, A, B)`.
pub fn check_pair(g: &Group, a: &Subgroup, b: &Subgroup) -> Result<PairVerdict> {
    let generates = g.is_whole(&g.join(a, b)?);
    let gf = GroupFacts::compute(g)?;
    let fa = SubgroupFacts::compute(g, &gf, a)?;
    let fb = SubgroupFacts::compute(g, &gf, b)?;
    evaluate(g, &gf, &mut ExtendedCache::default(), (a, &fa), (b, &fb), generates)
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// Groups up to this order get every unordered subgroup pair; larger
    /// groups only pairs drawn from cyclic and normal subgroups.
    pub full_pairs_max_order: usize,
    /// Worker threads; 0 uses the global pool.
    pub jobs: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { full_pairs_max_order: 200, jobs: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub group_key: String,
    pub order: usize,
    pub report: PropertyReport,
    pub subgroups: usize,
    pub full_pairs: bool,
    pub candidates: usize,
    pub pairs_examined: usize,
    pub pairs_proper_join: usize,
    pub pairs_with_hypotheses: usize,
    pub violations: usize,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub group_key: String,
    pub order: usize,
    pub a_order: usize,
    pub b_order: usize,
    pub a_gens: Vec<String>,
    pub b_gens: Vec<String>,
    /// Metanilpotent with a Sylow tower of supersoluble type.
    pub unconditional_conclusions_hold: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// Nonsupersoluble `G = ⟨A, B⟩` with `A`, `B` subnormal and supersoluble.
    GeneratedBySubnormal,
    /// Nonsupersoluble `G = NM` with `N`, `M` normal and supersoluble.
    ProductOfNormal,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub groups_examined: usize,
    pub pairs_examined: usize,
    pub pairs_proper_join: usize,
    pub pairs_with_hypotheses: usize,
    pub groups: Vec<GroupSummary>,
    pub verdicts: Vec<PairVerdict>,
    pub violations: Vec<PairVerdict>,
    pub witnesses: Vec<Witness>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.groups.iter().all(|g| g.error.is_none())
    }

    /// One JSON record per line: group summaries, pair verdicts, witnesses,
    /// and a closing totals record.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        let mut line = |kind: &str, v: serde_json::Value| {
            let mut obj = serde_json::Map::new();
            obj.insert("record".into(), kind.into());
            if let serde_json::Value::Object(m) = v {
                obj.extend(m);
            }
            out.push_str(&serde_json::Value::Object(obj).to_string());
            out.push('\n');
        };
        for g in &self.groups {
            line("group", serde_json::to_value(g).unwrap());
        }
        for v in &self.verdicts {
            line("verdict", serde_json::to_value(v).unwrap());
        }
        for w in &self.witnesses {
            line("witness", serde_json::to_value(w).unwrap());
        }
        line(
            "totals",
            serde_json::json!({
                "groups_examined": self.groups_examined,
                "pairs_examined": self.pairs_examined,
                "pairs_proper_join": self.pairs_proper_join,
                "pairs_with_hypotheses": self.pairs_with_hypotheses,
                "violations": self.violations.len(),
                "witnesses": self.witnesses.len(),
            }),
        );
        out
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        writeln!(s, "groups examined:       {}", self.groups_examined).unwrap();
        writeln!(s, "pairs examined:        {}", self.pairs_examined).unwrap();
        writeln!(s, "candidate pairs with proper join: {}", self.pairs_proper_join).unwrap();
        writeln!(s, "pairs with hypotheses: {}", self.pairs_with_hypotheses).unwrap();
        writeln!(s, "violations:            {}", self.violations.len()).unwrap();
        writeln!(s, "witnesses:             {}", self.witnesses.len()).unwrap();
        for g in self.groups.iter().filter(|g| g.error.is_some()) {
            writeln!(s, "error in {}: {}", g.group_key, g.error.as_deref().unwrap_or_default()).unwrap();
        }
        for v in &self.violations {
            writeln!(
                s,
                "VIOLATION {} |A|={} |B|={}: {}",
                v.group_key,
                v.a_order,
                v.b_order,
                v.violation.as_deref().unwrap_or_default()
            )
            .unwrap();
        }
        s
    }
}

struct GroupSweep {
    summary: GroupSummary,
    verdicts: Vec<PairVerdict>,
    witness: Option<Witness>,
}

fn pair_pool(g: &Group, full: bool) -> Result<Vec<Subgroup>> {
    if full {
        return Ok(g.all_subgroups()?.as_ref().clone());
    }
    let mut pool = g.cyclic_subgroups();
    pool.push(g.trivial());
    pool.extend(g.normal_subgroups()?.iter().cloned());
    pool.sort_by(|a, b| a.canonical_cmp(b));
    pool.dedup();
    Ok(pool)
}

fn sweep_group(g: &Group, config: &SweepConfig) -> GroupSweep {
    let full = g.order() <= config.full_pairs_max_order;
    let mut summary = GroupSummary {
        group_key: g.name().to_string(),
        order: g.order(),
        report: g.classify(),
        subgroups: 0,
        full_pairs: full,
        candidates: 0,
        pairs_examined: 0,
        pairs_proper_join: 0,
        pairs_with_hypotheses: 0,
        violations: 0,
        error: None,
    };
    match sweep_group_inner(g, full, &mut summary) {
        Ok((verdicts, witness)) => GroupSweep { summary, verdicts, witness },
        Err(err) => {
            warn!("{}: {err}", g.name());
            summary.error = Some(err.to_string());
            GroupSweep { summary, verdicts: Vec::new(), witness: None }
        }
    }
}

fn sweep_group_inner(g: &Group, full: bool, summary: &mut GroupSummary) -> Result<(Vec<PairVerdict>, Option<Witness>)> {
    let gf = GroupFacts::compute(g)?;
    let pool = pair_pool(g, full)?;
    summary.subgroups = pool.len();
    summary.pairs_examined = pool.len() * (pool.len() + 1) / 2;
    let facts = pool.iter().map(|h| SubgroupFacts::compute(g, &gf, h)).collect::<Result<Vec<_>>>()?;
    let candidates: Vec<usize> = (0..pool.len()).filter(|&i| facts[i].is_candidate()).collect();
    summary.candidates = candidates.len();

    let mut cache = ExtendedCache::default();
    let mut verdicts = Vec::new();
    let mut witness = None;
    for (x, &i) in candidates.iter().enumerate() {
        for &j in &candidates[x..] {
            let (a, b) = (&pool[i], &pool[j]);
            if !g.is_whole(&g.join(a, b)?) {
                summary.pairs_proper_join += 1;
                continue;
            }
            let v = evaluate(g, &gf, &mut cache, (a, &facts[i]), (b, &facts[j]), true)?;
            summary.pairs_with_hypotheses += 1;
            if v.violation.is_some() {
                summary.violations += 1;
            }
            if witness.is_none() && !gf.report.supersoluble {
                witness = Some(Witness {
                    kind: WitnessKind::GeneratedBySubnormal,
                    group_key: g.name().to_string(),
                    order: g.order(),
                    a_order: a.order(),
                    b_order: b.order(),
                    a_gens: v.a_gens.clone(),
                    b_gens: v.b_gens.clone(),
                    unconditional_conclusions_hold: gf.report.metanilpotent && gf.report.sylow_tower_supersoluble,
                });
            }
            verdicts.push(v);
        }
    }
    Ok((verdicts, witness))
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(err) => {
            warn!("could not build a {jobs}-thread pool ({err}); using the global pool");
            f()
        }
    }
}

/// Runs [`check_pair`] logic over every qualifying pair of every group.
/// Output order follows `corpus` order, independent of `config.jobs`.
pub fn sweep(corpus: &[Group], config: &SweepConfig) -> SweepReport {
    let per_group: Vec<GroupSweep> = in_pool(config.jobs, || corpus.par_iter().map(|g| sweep_group(g, config)).collect());
    let mut report = SweepReport { groups_examined: corpus.len(), ..Default::default() };
    for gs in per_group {
        report.pairs_examined += gs.summary.pairs_examined;
        report.pairs_proper_join += gs.summary.pairs_proper_join;
        report.pairs_with_hypotheses += gs.summary.pairs_with_hypotheses;
        report.violations.extend(gs.verdicts.iter().filter(|v| v.violation.is_some()).cloned());
        report.verdicts.extend(gs.verdicts);
        report.witnesses.extend(gs.witness);
        report.groups.push(gs.summary);
    }
    report
}

/// Nonsupersoluble groups in the corpus that are generated by two subnormal
/// supersoluble subgroups, or are the product of two normal supersoluble
/// subgroups. At most one witness of each kind per group.
pub fn hunt_witnesses(corpus: &[Group], jobs: usize) -> Result<Vec<Witness>> {
    let found: Vec<Result<Vec<Witness>>> = in_pool(jobs, || corpus.par_iter().map(hunt_group).collect());
    let mut out = Vec::new();
    for w in found {
        out.extend(w?);
    }
    Ok(out)
}

fn hunt_group(g: &Group) -> Result<Vec<Witness>> {
    let report = g.classify();
    if report.supersoluble {
        return Ok(Vec::new());
    }
    let unconditional = report.metanilpotent && report.sylow_tower_supersoluble;
    let mut out = Vec::new();
    let witness = |kind, a: &Subgroup, b: &Subgroup| Witness {
        kind,
        group_key: g.name().to_string(),
        order: g.order(),
        a_order: a.order(),
        b_order: b.order(),
        a_gens: gen_strings(g, a),
        b_gens: gen_strings(g, b),
        unconditional_conclusions_hold: unconditional,
    };

    let subs = g.all_subgroups()?;
    let mut candidates = Vec::new();
    for h in subs.iter() {
        if g.is_subnormal(h).is_subnormal && g.classify_subgroup(h)?.supersoluble {
            candidates.push(h);
        }
    }
    'outer: for (x, a) in candidates.iter().enumerate() {
        for b in &candidates[x..] {
            if g.is_whole(&g.join(a, b)?) {
                out.push(witness(WitnessKind::GeneratedBySubnormal, a, b));
                break 'outer;
            }
        }
    }

    let normals = g.normal_subgroups()?;
    let mut supersoluble_normals = Vec::new();
    for n in normals.iter() {
        if g.classify_subgroup(n)?.supersoluble {
            supersoluble_normals.push(n);
        }
    }
    'outer2: for (x, n) in supersoluble_normals.iter().enumerate() {
        for m in &supersoluble_normals[x..] {
            if g.product_set_size(n, m)? == g.order() {
                out.push(witness(WitnessKind::ProductOfNormal, n, m));
                break 'outer2;
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Reproduction of the order-144 example: an index-2 nonsupersoluble `H`
/// and a supersoluble, non-normal, subnormal `X` of index 2 in `H` whose
/// normal closure is `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExampleReport {
    pub passed: bool,
    pub e_order: usize,
    pub h_order: Option<usize>,
    pub x_order: Option<usize>,
    pub e_generators: Vec<String>,
    pub h_generators: Vec<String>,
    pub x_generators: Vec<String>,
    pub clauses: Vec<Clause>,
    pub identification: String,
}

impl ExampleReport {
    pub fn failing_clauses(&self) -> Vec<&str> {
        self.clauses.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        for c in &self.clauses {
            writeln!(s, "[{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail).unwrap();
        }
        writeln!(s, "{}", self.identification).unwrap();
        writeln!(s, "{}", if self.passed { "all clauses verified" } else { "example NOT reproduced" }).unwrap();
        s
    }
}

fn clause(name: &str, passed: bool, detail: impl Into<String>) -> Clause {
    Clause { name: name.to_string(), passed, detail: detail.into() }
}

fn x_clauses(e: &Group, h: &Subgroup, x: &Subgroup) -> Result<Vec<Clause>> {
    let sn = e.is_subnormal(x);
    let closure = e.normal_closure(x);
    let supersoluble = e.classify_subgroup(x)?.supersoluble;
    Ok(vec![
        clause("|X| = 36", x.order() == 36, format!("|X| = {}", x.order())),
        clause("X <= H", x.is_subgroup_of(h), ""),
        clause("X supersoluble", supersoluble, ""),
        clause("X not normal in E", !e.is_normal(x), ""),
        clause("|H:X| = 2", x.is_subgroup_of(h) && h.order() == 2 * x.order(), format!("|H|/|X| = {}/{}", h.order(), x.order())),
        clause("X^E = H", closure == *h, format!("|X^E| = {}", closure.order())),
        clause(
            "X subnormal with defect 2",
            sn.is_subnormal && sn.defect == Some(2),
            format!("series {:?}", sn.descending_series),
        ),
    ])
}

pub fn verify_order_144_example() -> Result<ExampleReport> {
    let spec = catalog::make_order_144()?;
    let e = Group::generate(&spec, Default::default())?;
    let mut clauses = vec![clause("|E| = 144", e.order() == 144, format!("|E| = {}", e.order()))];
    let report = e.classify();
    clauses.push(clause("E not supersoluble", !report.supersoluble, ""));
    clauses.push(clause(
        "E metanilpotent with a Sylow tower of supersoluble type",
        report.metanilpotent && report.sylow_tower_supersoluble,
        "",
    ));

    let mut h_candidates = Vec::new();
    for h in e.normal_subgroups()?.iter().filter(|h| 2 * h.order() == e.order()) {
        if !e.classify_subgroup(h)?.supersoluble {
            h_candidates.push(h.clone());
        }
    }
    clauses.push(clause(
        "index-2 nonsupersoluble H with |H| = 72",
        !h_candidates.is_empty(),
        format!("{} candidate(s)", h_candidates.len()),
    ));

    let all = e.all_subgroups()?;
    let maximal = e.maximal_subgroups()?;
    let mut best: Option<(Subgroup, Subgroup, Vec<Clause>)> = None;
    for h in &h_candidates {
        for x in all.iter().filter(|x| x.order() == 36 && x.is_subgroup_of(h)) {
            let cs = x_clauses(&e, h, x)?;
            let score = cs.iter().filter(|c| c.passed).count();
            let better = best.as_ref().is_none_or(|(_, _, b)| score > b.iter().filter(|c| c.passed).count());
            if better {
                let done = score == cs.len();
                best = Some((h.clone(), x.clone(), cs));
                if done {
                    break;
                }
            }
        }
        if best.as_ref().is_some_and(|(_, _, cs)| cs.iter().all(|c| c.passed)) {
            break;
        }
    }

    let (h_order, x_order, h_generators, x_generators) = match &best {
        Some((h, x, cs)) => {
            clauses.push(clause("H maximal in E", maximal.contains(h), ""));
            clauses.extend(cs.iter().cloned());
            (Some(h.order()), Some(x.order()), gen_strings(&e, h), gen_strings(&e, x))
        }
        None => {
            clauses.push(clause("X found", false, "no order-36 subgroup inside any candidate H"));
            (h_candidates.first().map(|h| h.order()), None, Vec::new(), Vec::new())
        }
    };
    Ok(ExampleReport {
        passed: clauses.iter().all(|c| c.passed),
        e_order: e.order(),
        h_order,
        x_order,
        e_generators: spec.generators.iter().map(|p| p.to_string()).collect(),
        h_generators,
        x_generators,
        clauses,
        identification: "properties verified; ID not checked".into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductWitness {
    pub x_order: usize,
    pub y_order: usize,
    pub x_gens: Vec<String>,
    pub y_gens: Vec<String>,
    pub join_order: usize,
    pub product_set_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductDemo {
    pub group_key: String,
    pub order: usize,
    pub pairs_scanned: usize,
    pub witnesses_found: usize,
    /// First witness in canonical subgroup order.
    pub witness: Option<ProductWitness>,
}

/// Pairs of subnormal subgroups `X, Y` with `⟨X, Y⟩ = G` but `|XY| < |G|`.
pub fn product_demo(g: &Group) -> Result<ProductDemo> {
    let subs = g.all_subgroups()?;
    let subnormal: Vec<&Subgroup> = subs.iter().filter(|h| g.is_subnormal(h).is_subnormal).collect();
    let mut demo = ProductDemo {
        group_key: g.name().to_string(),
        order: g.order(),
        pairs_scanned: 0,
        witnesses_found: 0,
        witness: None,
    };
    for (i, x) in subnormal.iter().enumerate() {
        for y in &subnormal[i..] {
            demo.pairs_scanned += 1;
            let join = g.join(x, y)?;
            if !g.is_whole(&join) {
                continue;
            }
            let size = g.product_set_size(x, y)?;
            if size < g.order() {
                demo.witnesses_found += 1;
                if demo.witness.is_none() {
                    demo.witness = Some(ProductWitness {
                        x_order: x.order(),
                        y_order: y.order(),
                        x_gens: gen_strings(g, x),
                        y_gens: gen_strings(g, y),
                        join_order: join.order(),
                        product_set_size: size,
                    });
                }
            }
        }
    }
    Ok(demo)
}

/// The dihedral group of order 8 and the extraspecial group of order 27 and
/// exponent 3 both need a witness; cyclic groups must have none.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DemoReport {
    pub passed: bool,
    pub expected_witness: Vec<ProductDemo>,
    pub expected_none: Vec<ProductDemo>,
}

pub fn generation_vs_product_demo() -> Result<DemoReport> {
    let build = |spec| Group::generate(&spec, Default::default());
    let expected_witness = vec![
        product_demo(&build(catalog::make_dihedral(8)?)?)?,
        product_demo(&build(catalog::make_heisenberg(3)?)?)?,
    ];
    let expected_none = [6, 8, 9, 12]
        .into_iter()
        .map(|n| product_demo(&build(catalog::make_cyclic(n)?)?))
        .collect::<Result<Vec<_>>>()?;
    let passed = expected_witness.iter().all(|d| d.witness.is_some()) && expected_none.iter().all(|d| d.witness.is_none());
    if expected_witness.iter().any(|d| d.witness.is_none()) {
        return Err(Error::Verification("no generation-vs-product witness found".into()));
    }
    Ok(DemoReport { passed, expected_witness, expected_none })
}
