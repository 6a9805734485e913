//! Statement checkers: exhaustive verification of the sylowizer lemmas and
//! the two supersolubility theorems on a (group, sigma) pair, plus the
//! catalog runner that aggregates reports.
//!
//! Checkers instantiate every quantified object from the subgroup lattice
//! and assert the statement's conclusion. A counterexample report carries a
//! complete witness tuple; since the statements are proven theorems, any
//! counterexample flags a bug in the engine, which is the point of the
//! harness.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::GroupFile;
use crate::classify::is_supersoluble;
use crate::error::{Error, Result};
use crate::group::{Group, SubgroupRef};
use crate::lattice::{all_subgroups, SubgroupLattice};
use crate::sigma::{
    complete_hall_sets, hall_subgroups, is_sigma_full_of_sylow_type, o_upper_sigma,
    prime_divisors, Block, SigmaPartition, SigmaProfile,
};
use crate::sylowizer::{is_c_permutable, is_sigma_permutable, sylowizers, sylowizers_in};
use crate::classify::is_cyclic;
use crate::classify::is_nilpotent;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Statement {
    #[serde(rename = "L2.1")]
    Lemma21,
    #[serde(rename = "L2.2")]
    Lemma22,
    #[serde(rename = "L2.3")]
    Lemma23,
    #[serde(rename = "L2.4")]
    Lemma24,
    #[serde(rename = "T2.5")]
    Theorem25,
    #[serde(rename = "T2.6")]
    Theorem26,
}

impl Statement {
    pub const ALL: [Statement; 6] = [
        Statement::Lemma21,
        Statement::Lemma22,
        Statement::Lemma23,
        Statement::Lemma24,
        Statement::Theorem25,
        Statement::Theorem26,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Statement::Lemma21 => "L2.1",
            Statement::Lemma22 => "L2.2",
            Statement::Lemma23 => "L2.3",
            Statement::Lemma24 => "L2.4",
            Statement::Theorem25 => "T2.5",
            Statement::Theorem26 => "T2.6",
        }
    }

    pub fn parse(text: &str) -> Result<Statement> {
        Statement::ALL
            .iter()
            .copied()
            .find(|s| s.id() == text)
            .ok_or_else(|| Error::Parse(format!("unknown statement '{text}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "verified")]
    Verified,
    #[serde(rename = "hypothesis-not-met")]
    HypothesisNotMet,
    #[serde(rename = "counterexample")]
    Counterexample,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Stats {
    pub cases_checked: u64,
    pub non_vacuous: u64,
    pub sampled: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub statement: Statement,
    pub group: String,
    pub order: u64,
    pub sigma: String,
    pub status: Status,
    pub witness: Option<Value>,
    pub stats: Stats,
}

impl VerificationReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text_line(&self) -> String {
        let status = match self.status {
            Status::Verified => "verified",
            Status::HypothesisNotMet => "hypothesis-not-met",
            Status::Counterexample => "COUNTEREXAMPLE",
        };
        format!(
            "{:<5} {:<10} sigma={:<12} {:<20} cases={} non-vacuous={}{}",
            self.statement.id(),
            self.group,
            self.sigma,
            status,
            self.stats.cases_checked,
            self.stats.non_vacuous,
            if self.stats.sampled { " (sampled)" } else { "" }
        )
    }
}

/// A named group together with its lattice, shared by every checker.
pub struct GroupContext {
    pub name: String,
    pub group: Arc<Group>,
    pub lattice: SubgroupLattice,
}

impl GroupContext {
    pub fn new(name: &str, group: Arc<Group>) -> Result<GroupContext> {
        let lattice = all_subgroups(&group)?;
        Ok(GroupContext {
            name: name.to_string(),
            group,
            lattice,
        })
    }
}

fn describe(s: &SubgroupRef) -> Value {
    json!({ "order": s.order(), "generators": s.describe() })
}

fn report(
    ctx: &GroupContext,
    profile: &SigmaProfile,
    statement: Statement,
    status: Status,
    witness: Option<Value>,
    stats: Stats,
) -> VerificationReport {
    VerificationReport {
        statement,
        group: ctx.name.clone(),
        order: ctx.group.order(),
        sigma: profile.partition().to_string(),
        status,
        witness,
        stats,
    }
}

/// Sigma_i-subgroups of the lattice for one block, with deterministic
/// stride sampling once the lattice is larger than `scan_cap`.
fn sigma_subgroups<'a>(
    lattice: &'a SubgroupLattice,
    block: &Block,
    scan_cap: usize,
) -> (Vec<&'a SubgroupRef>, bool) {
    let all: Vec<&SubgroupRef> = lattice
        .subgroups()
        .iter()
        .filter(|h| block.is_sigma_number(h.order()))
        .collect();
    if lattice.len() <= scan_cap || all.len() <= scan_cap {
        return (all, false);
    }
    let stride = all.len().div_ceil(scan_cap);
    (all.into_iter().step_by(stride).collect(), true)
}

/// Lemma: for every sigma_i-subgroup `H`, every `K` with `H <= K <= G`, and
/// every sigma_i-sylowizer `T` of `H` in `K`, some sigma_i-sylowizer `S` of
/// `H` in `G` satisfies `T = S /\ K`.
pub fn check_lemma_2_1(
    ctx: &GroupContext,
    profile: &SigmaProfile,
    config: &RunConfig,
) -> VerificationReport {
    let lattice = &ctx.lattice;
    let mut stats = Stats::default();
    for block in profile.active_blocks() {
        let (subgroups, sampled) = sigma_subgroups(lattice, block, config.subgroup_scan_cap);
        stats.sampled |= sampled;
        for h in subgroups {
            let syl_g = sylowizers(lattice, h, block).expect("h is a sigma_i-subgroup");
            for k in lattice.subgroups_containing(h) {
                let syl_k =
                    sylowizers_in(lattice, k, h, block).expect("h is a sigma_i-subgroup of k");
                for t in &syl_k {
                    stats.cases_checked += 1;
                    if !h.is_trivial() {
                        stats.non_vacuous += 1;
                    }
                    let ok = syl_g
                        .iter()
                        .any(|s| &s.intersect(k).expect("same ambient") == t);
                    if !ok {
                        let witness = json!({
                            "block": block.to_string(),
                            "H": describe(h),
                            "K": describe(k),
                            "T": describe(t),
                            "sylowizers_in_G": syl_g.iter().map(describe).collect::<Vec<_>>(),
                        });
                        return report(
                            ctx,
                            profile,
                            Statement::Lemma21,
                            Status::Counterexample,
                            Some(witness),
                            stats,
                        );
                    }
                }
            }
        }
    }
    stats.cases_checked = stats.cases_checked.max(1); // vacuous quantification still counts
    report(ctx, profile, Statement::Lemma21, Status::Verified, None, stats)
}

/// Lemma: with `N` normal and `R` a Hall sigma_i-subgroup of `RN`, `S` is a
/// sigma_i-sylowizer of `R` in `G` iff `S/N` is one of `RN/N` in `G/N`.
/// Both directions are matched through the coset-action epimorphism.
pub fn check_lemma_2_2(ctx: &GroupContext, profile: &SigmaProfile) -> VerificationReport {
    let lattice = &ctx.lattice;
    let g = &ctx.group;
    let mut stats = Stats::default();
    for n in lattice.normal_subgroups() {
        let quotient = g.quotient(&n).expect("n is normal");
        let q_lattice = all_subgroups(&quotient.group).expect("quotient under cap");
        let proper = !n.is_trivial() && !n.is_whole_group();
        for block in profile.active_blocks() {
            for r in lattice.subgroups() {
                if !block.is_sigma_number(r.order()) {
                    continue;
                }
                let rn = r.join(&n).expect("same ambient");
                // hypothesis: R is a Hall sigma_i-subgroup of RN
                if prime_divisors(rn.order() / r.order())
                    .iter()
                    .any(|&p| block.contains(p))
                {
                    continue;
                }
                let syl_g = sylowizers(lattice, r, block).expect("sigma_i-subgroup");
                let rn_bar = quotient.image_of(&rn);
                let syl_q =
                    sylowizers(&q_lattice, &rn_bar, block).expect("image is a sigma_i-subgroup");
                // forward: each S maps onto a quotient sylowizer (and N <= S)
                for s in &syl_g {
                    stats.cases_checked += 1;
                    if proper {
                        stats.non_vacuous += 1;
                    }
                    let image = quotient.image_of(s);
                    if !n.is_subset_of(s) || !syl_q.contains(&image) {
                        let witness = json!({
                            "direction": "G-to-quotient",
                            "block": block.to_string(),
                            "N": describe(&n),
                            "R": describe(r),
                            "S": describe(s),
                        });
                        return report(
                            ctx,
                            profile,
                            Statement::Lemma22,
                            Status::Counterexample,
                            Some(witness),
                            stats,
                        );
                    }
                }
                // backward: each quotient sylowizer pulls back to one in G
                for s_bar in &syl_q {
                    stats.cases_checked += 1;
                    if proper {
                        stats.non_vacuous += 1;
                    }
                    let preimage = quotient.preimage_of(s_bar).expect("quotient subgroup");
                    if !syl_g.contains(&preimage) {
                        let witness = json!({
                            "direction": "quotient-to-G",
                            "block": block.to_string(),
                            "N": describe(&n),
                            "R": describe(r),
                            "S_bar": describe(s_bar),
                            "preimage": describe(&preimage),
                        });
                        return report(
                            ctx,
                            profile,
                            Statement::Lemma22,
                            Status::Counterexample,
                            Some(witness),
                            stats,
                        );
                    }
                }
            }
        }
    }
    stats.cases_checked = stats.cases_checked.max(1); // vacuous quantification still counts
    report(ctx, profile, Statement::Lemma22, Status::Verified, None, stats)
}

/// Lemma: in a sigma-full group, a sigma-permutable sigma_i-sylowizer `S` of
/// `R` satisfies `O^{sigma_i}(G) <= S`, equals the set-product
/// `R * O^{sigma_i}(G)`, and is the unique sylowizer of `R`.
pub fn check_lemma_2_3(ctx: &GroupContext, profile: &SigmaProfile) -> VerificationReport {
    let lattice = &ctx.lattice;
    let g = &ctx.group;
    let mut stats = Stats::default();
    // sigma-full: a Hall subgroup for every active block
    for block in profile.active_blocks() {
        if hall_subgroups(lattice, block).is_empty() {
            let witness = json!({ "kind": "not-sigma-full", "block": block.to_string() });
            return report(
                ctx,
                profile,
                Statement::Lemma23,
                Status::HypothesisNotMet,
                Some(witness),
                stats,
            );
        }
    }
    for block in profile.active_blocks() {
        let o_sigma = o_upper_sigma(g, block).expect("materialized");
        for r in lattice.subgroups() {
            if !block.is_sigma_number(r.order()) {
                continue;
            }
            let syl = sylowizers(lattice, r, block).expect("sigma_i-subgroup");
            for s in &syl {
                stats.cases_checked += 1;
                if !is_sigma_permutable(lattice, s, profile).expect("hall sets exist") {
                    continue;
                }
                stats.non_vacuous += 1;
                let product = r.product_set(&o_sigma).expect("same ambient");
                let holds = o_sigma.is_subset_of(s)
                    && product == s.element_indices()
                    && syl.len() == 1;
                if !holds {
                    let witness = json!({
                        "block": block.to_string(),
                        "R": describe(r),
                        "S": describe(s),
                        "O_sigma_i": describe(&o_sigma),
                        "sylowizer_count": syl.len(),
                    });
                    return report(
                        ctx,
                        profile,
                        Statement::Lemma23,
                        Status::Counterexample,
                        Some(witness),
                        stats,
                    );
                }
            }
        }
    }
    stats.cases_checked = stats.cases_checked.max(1); // vacuous quantification still counts
    report(ctx, profile, Statement::Lemma23, Status::Verified, None, stats)
}

/// Lemma: in a sigma-full group of Sylow type, a sigma_i-sylowizer `S` of
/// `R` is c-permutable with every Hall sigma_j-subgroup for all active j
/// iff `|G : S|` is a sigma_i-number. Both directions checked.
pub fn check_lemma_2_4(ctx: &GroupContext, profile: &SigmaProfile) -> VerificationReport {
    let lattice = &ctx.lattice;
    let g = &ctx.group;
    let mut stats = Stats::default();
    if !is_sigma_full_of_sylow_type(lattice, profile) {
        let witness = json!({ "kind": "not-sigma-full-of-sylow-type" });
        return report(
            ctx,
            profile,
            Statement::Lemma24,
            Status::HypothesisNotMet,
            Some(witness),
            stats,
        );
    }
    let halls: Vec<Vec<SubgroupRef>> = profile
        .active_blocks()
        .map(|b| hall_subgroups(lattice, b))
        .collect();
    for block in profile.active_blocks() {
        for r in lattice.subgroups() {
            if !block.is_sigma_number(r.order()) {
                continue;
            }
            for s in sylowizers(lattice, r, block).expect("sigma_i-subgroup") {
                stats.cases_checked += 1;
                if !s.is_whole_group() {
                    stats.non_vacuous += 1;
                }
                let lhs = halls.iter().flatten().all(|q| {
                    is_c_permutable(g, &s, q).expect("same ambient").0
                });
                let rhs = block.is_sigma_number(g.order() / s.order());
                if lhs != rhs {
                    let witness = json!({
                        "block": block.to_string(),
                        "R": describe(r),
                        "S": describe(&s),
                        "index": g.order() / s.order(),
                        "c_permutable_with_all_hall_members": lhs,
                        "index_is_sigma_i_number": rhs,
                    });
                    return report(
                        ctx,
                        profile,
                        Statement::Lemma24,
                        Status::Counterexample,
                        Some(witness),
                        stats,
                    );
                }
            }
        }
    }
    stats.cases_checked = stats.cases_checked.max(1); // vacuous quantification still counts
    report(ctx, profile, Statement::Lemma24, Status::Verified, None, stats)
}

/// Outcome of searching complete Hall sigma-sets for one satisfying every
/// hypothesis obligation of the supersolubility theorems.
struct HypothesisSearch {
    satisfied: Option<HallSetWitness>,
    first_failure: Option<Value>,
    cases_checked: u64,
    non_vacuous: u64,
}

struct HallSetWitness {
    hall_set: Vec<SubgroupRef>,
}

/// Search every complete Hall sigma-set for one whose members are nilpotent
/// and where each maximal subgroup of each listed non-cyclic target has a
/// sigma_i-sylowizer c-permutable with every member of the set. `targets`
/// selects, per active block, the subgroup whose maximal subgroups carry the
/// obligation (the Hall member itself for T2.5, its intersection with `E`
/// for T2.6), or `None` when the block carries no obligation.
fn search_hall_sets<F>(
    ctx: &GroupContext,
    profile: &SigmaProfile,
    target_of: F,
) -> HypothesisSearch
where
    F: Fn(usize, &SubgroupRef) -> Option<SubgroupRef>,
{
    let lattice = &ctx.lattice;
    let g = &ctx.group;
    let blocks: Vec<&Block> = profile.active_blocks().collect();
    let mut out = HypothesisSearch {
        satisfied: None,
        first_failure: None,
        cases_checked: 0,
        non_vacuous: 0,
    };
    'set: for hall_set in complete_hall_sets(lattice, profile) {
        for member in &hall_set {
            out.cases_checked += 1;
            if !is_nilpotent(member) {
                if out.first_failure.is_none() {
                    out.first_failure = Some(json!({
                        "kind": "non-nilpotent-hall-member",
                        "hall_member": describe(member),
                    }));
                }
                continue 'set;
            }
        }
        for (i, member) in hall_set.iter().enumerate() {
            let target = match target_of(i, member) {
                Some(t) => t,
                None => continue,
            };
            if is_cyclic(&target) {
                continue;
            }
            for m in lattice.maximal_subgroups_of(&target).expect("listed") {
                out.cases_checked += 1;
                out.non_vacuous += 1;
                let syl = sylowizers(lattice, &m, blocks[i]).expect("sigma_i-subgroup");
                let mut failures: Vec<Value> = Vec::new();
                let ok = syl.iter().any(|s| {
                    let failing = hall_set
                        .iter()
                        .find(|h| !is_c_permutable(g, s, h).expect("same ambient").0);
                    match failing {
                        None => true,
                        Some(h) => {
                            failures.push(json!({
                                "sylowizer": describe(s),
                                "index": g.order() / s.order(),
                                "fails_with": describe(h),
                            }));
                            false
                        }
                    }
                });
                if !ok {
                    if out.first_failure.is_none() {
                        out.first_failure = Some(json!({
                            "kind": "maximal-without-permutable-sylowizer",
                            "block": blocks[i].to_string(),
                            "hall_member": describe(member),
                            "target": describe(&target),
                            "maximal_subgroup": describe(&m),
                            "sylowizers": failures,
                        }));
                    }
                    continue 'set;
                }
            }
        }
        out.satisfied = Some(HallSetWitness { hall_set });
        return out;
    }
    out
}

fn conclude_supersoluble(
    ctx: &GroupContext,
    profile: &SigmaProfile,
    statement: Statement,
    witness: HallSetWitness,
    mut stats: Stats,
) -> VerificationReport {
    stats.cases_checked += 1;
    let (ok, cert) = is_supersoluble(&ctx.group, &ctx.lattice);
    let hall_json: Vec<Value> = witness.hall_set.iter().map(describe).collect();
    if ok {
        let cert = cert.expect("certificate accompanies a true verdict");
        let witness = json!({
            "hall_set": hall_json,
            "chief_factor_orders": cert.factor_orders,
        });
        report(ctx, profile, statement, Status::Verified, Some(witness), stats)
    } else {
        let witness = json!({
            "kind": "hypothesis-holds-but-conclusion-fails",
            "hall_set": hall_json,
        });
        report(
            ctx,
            profile,
            statement,
            Status::Counterexample,
            Some(witness),
            stats,
        )
    }
}

/// Theorem: a sigma-full group of Sylow type with a complete Hall sigma-set
/// of nilpotent members, where every maximal subgroup of every non-cyclic
/// member has a sylowizer c-permutable with the whole set, is supersoluble.
pub fn check_theorem_2_5(ctx: &GroupContext, profile: &SigmaProfile) -> VerificationReport {
    let mut stats = Stats::default();
    if !is_sigma_full_of_sylow_type(&ctx.lattice, profile) {
        let witness = json!({ "kind": "not-sigma-full-of-sylow-type" });
        return report(
            ctx,
            profile,
            Statement::Theorem25,
            Status::HypothesisNotMet,
            Some(witness),
            stats,
        );
    }
    let search = search_hall_sets(ctx, profile, |_, member| Some(member.clone()));
    stats.cases_checked = search.cases_checked;
    stats.non_vacuous = search.non_vacuous;
    match search.satisfied {
        Some(witness) => conclude_supersoluble(ctx, profile, Statement::Theorem25, witness, stats),
        None => report(
            ctx,
            profile,
            Statement::Theorem25,
            Status::HypothesisNotMet,
            search.first_failure,
            stats,
        ),
    }
}

/// Theorem instantiated at the supersoluble class: if `E` is normal with
/// `G/E` supersoluble and the sylowizer condition holds for the maximal
/// subgroups of every non-cyclic `H_i /\ E` over sigma(E), then `G` is
/// supersoluble.
pub fn check_theorem_2_6(
    ctx: &GroupContext,
    profile: &SigmaProfile,
    e: &SubgroupRef,
) -> Result<VerificationReport> {
    if !Arc::ptr_eq(e.ambient(), &ctx.group) {
        return Err(Error::AmbientMismatch);
    }
    if !e.is_normal() {
        return Err(Error::NotNormal);
    }
    let mut stats = Stats::default();
    // G/E in the class
    let quotient = ctx.group.quotient(e)?;
    let q_lattice = all_subgroups(&quotient.group)?;
    stats.cases_checked += 1;
    if !is_supersoluble(&quotient.group, &q_lattice).0 {
        let witness = json!({
            "kind": "quotient-not-supersoluble",
            "E": describe(e),
            "quotient_order": quotient.group.order(),
        });
        return Ok(report(
            ctx,
            profile,
            Statement::Theorem26,
            Status::HypothesisNotMet,
            Some(witness),
            stats,
        ));
    }
    if !is_sigma_full_of_sylow_type(&ctx.lattice, profile) {
        let witness = json!({ "kind": "not-sigma-full-of-sylow-type" });
        return Ok(report(
            ctx,
            profile,
            Statement::Theorem26,
            Status::HypothesisNotMet,
            Some(witness),
            stats,
        ));
    }
    let e_primes = prime_divisors(e.order());
    let blocks: Vec<Block> = profile.active_blocks().cloned().collect();
    let search = search_hall_sets(ctx, profile, |i, member| {
        // only blocks meeting pi(|E|) carry an obligation
        if !e_primes.iter().any(|&p| blocks[i].contains(p)) {
            return None;
        }
        Some(member.intersect(e).expect("same ambient"))
    });
    stats.cases_checked += search.cases_checked;
    stats.non_vacuous = search.non_vacuous;
    Ok(match search.satisfied {
        Some(witness) => {
            let mut rep =
                conclude_supersoluble(ctx, profile, Statement::Theorem26, witness, stats);
            if let Some(Value::Object(map)) = &mut rep.witness {
                map.insert("E".to_string(), describe(e));
            }
            rep
        }
        None => report(
            ctx,
            profile,
            Statement::Theorem26,
            Status::HypothesisNotMet,
            search.first_failure,
            stats,
        ),
    })
}

/// All set-partitions of `primes` into at most `max_blocks` explicit blocks,
/// in deterministic order. Includes the finest partition (classical Sylow
/// theory) and the coarsest (a single block).
pub fn sigma_family(primes: &BTreeSet<u64>, max_blocks: usize) -> Result<Vec<SigmaPartition>> {
    if max_blocks < 1 {
        return Err(Error::Invalid("max_blocks must be at least 1".into()));
    }
    let primes: Vec<u64> = primes.iter().copied().collect();
    let mut out = Vec::new();
    let mut blocks: Vec<BTreeSet<u64>> = Vec::new();
    fn recurse(
        primes: &[u64],
        i: usize,
        max_blocks: usize,
        blocks: &mut Vec<BTreeSet<u64>>,
        out: &mut Vec<SigmaPartition>,
    ) {
        if i == primes.len() {
            out.push(
                SigmaPartition::from_blocks(blocks.clone()).expect("blocks are disjoint primes"),
            );
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].insert(primes[i]);
            recurse(primes, i + 1, max_blocks, blocks, out);
            blocks[b].remove(&primes[i]);
        }
        if blocks.len() < max_blocks {
            blocks.push([primes[i]].into_iter().collect());
            recurse(primes, i + 1, max_blocks, blocks, out);
            blocks.pop();
        }
    }
    recurse(&primes, 0, max_blocks, &mut blocks, &mut out);
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub max_blocks: usize,
    pub statements: Vec<Statement>,
    /// L2.1 scans all sigma_i-subgroups while the lattice has at most this
    /// many subgroups; beyond it, subgroups are sampled by index stride.
    pub subgroup_scan_cap: usize,
    /// Generators (cycle notation, comma separated) of the normal subgroup
    /// `E` for T2.6. Defaults to the whole group.
    pub normal_e: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_blocks: 3,
            statements: Statement::ALL.to_vec(),
            subgroup_scan_cap: 60,
            normal_e: None,
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Summary {
    /// statement id -> status -> count
    pub counts: std::collections::BTreeMap<String, std::collections::BTreeMap<String, u64>>,
    pub skipped: Vec<String>,
}

impl Summary {
    pub fn counterexamples(&self) -> u64 {
        self.counts
            .values()
            .filter_map(|m| m.get("counterexample"))
            .sum()
    }
}

pub struct CatalogRun {
    pub reports: Vec<VerificationReport>,
    pub summary: Summary,
}

/// Run every configured checker for every catalog group and every
/// sigma-partition of its primes into at most `config.max_blocks` blocks.
/// Reports come back sorted by (group, sigma, statement), so parallel and
/// serial runs are byte-identical.
pub fn run_catalog(catalog: &[GroupFile], config: &RunConfig) -> CatalogRun {
    let mut skipped: Vec<String> = Vec::new();
    let mut contexts: Vec<(GroupContext, SubgroupRef)> = Vec::new();
    for file in catalog {
        let built = file.build().and_then(|g| {
            let ctx = GroupContext::new(&file.name, g)?;
            let e = match &config.normal_e {
                None => ctx.lattice.full_group().clone(),
                Some(text) => {
                    let e = parse_subgroup(&ctx.group, text)?;
                    if !e.is_normal() {
                        return Err(Error::NotNormal);
                    }
                    e
                }
            };
            Ok((ctx, e))
        });
        match built {
            Ok(pair) => contexts.push(pair),
            Err(err) => skipped.push(format!("{}: {err}", file.name)),
        }
    }
    let mut reports: Vec<VerificationReport> = contexts
        .par_iter()
        .flat_map_iter(|(ctx, e)| {
            let primes = prime_divisors(ctx.group.order());
            let partitions =
                sigma_family(&primes, config.max_blocks).expect("max_blocks >= 1");
            let mut out = Vec::new();
            for partition in partitions {
                let profile = SigmaProfile::new(ctx.group.order(), &partition);
                for statement in &config.statements {
                    out.push(match statement {
                        Statement::Lemma21 => check_lemma_2_1(ctx, &profile, config),
                        Statement::Lemma22 => check_lemma_2_2(ctx, &profile),
                        Statement::Lemma23 => check_lemma_2_3(ctx, &profile),
                        Statement::Lemma24 => check_lemma_2_4(ctx, &profile),
                        Statement::Theorem25 => check_theorem_2_5(ctx, &profile),
                        Statement::Theorem26 => check_theorem_2_6(ctx, &profile, e)
                            .expect("E validated at construction"),
                    });
                }
            }
            out
        })
        .collect();
    reports.sort_by(|a, b| {
        (a.group.as_str(), a.sigma.as_str(), a.statement)
            .cmp(&(b.group.as_str(), b.sigma.as_str(), b.statement))
    });
    let mut summary = Summary {
        skipped,
        ..Summary::default()
    };
    for r in &reports {
        let status = match r.status {
            Status::Verified => "verified",
            Status::HypothesisNotMet => "hypothesis-not-met",
            Status::Counterexample => "counterexample",
        };
        *summary
            .counts
            .entry(r.statement.id().to_string())
            .or_default()
            .entry(status.to_string())
            .or_default() += 1;
    }
    CatalogRun { reports, summary }
}

/// Parse a comma-separated list of cycle-notation generators into a
/// subgroup of `g`.
pub fn parse_subgroup(g: &Arc<Group>, text: &str) -> Result<SubgroupRef> {
    let mut gens = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        gens.push(crate::perm::Perm::parse(part, g.degree())?);
    }
    g.subgroup_from_generators(&gens)
}
