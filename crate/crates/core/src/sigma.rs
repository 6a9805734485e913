//! Partitions of the primes and the sigma-theoretic predicates built on
//! them: sigma_i-numbers, Hall sigma_i-subgroups, complete Hall sigma-sets,
//! sigma-fullness of Sylow type, and `O^{sigma_i}(G)`.
//!
//! A partition is stored as finitely many explicit prime blocks; every prime
//! not listed belongs to one implicit cofinite remainder block. Only the
//! intersection with `pi(|G|)` ever matters, so the remainder block is never
//! materialized.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Group, SubgroupRef};
use crate::lattice::SubgroupLattice;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Set of prime divisors of `n`.
pub fn prime_divisors(n: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut n = n;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.insert(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.insert(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n.is_multiple_of(p) {
        out *= p;
        n /= p;
    }
    out
}

/// One block of a sigma-partition: either an explicit finite prime set, or
/// the cofinite remainder (all primes outside the listed union).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    primes: BTreeSet<u64>,
    complement: bool,
}

impl Block {
    pub fn explicit(primes: BTreeSet<u64>) -> Block {
        Block {
            primes,
            complement: false,
        }
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.contains(&p) != self.complement
    }

    pub fn is_remainder(&self) -> bool {
        self.complement
    }

    /// True iff every prime divisor of `n` lies in this block.
    pub fn is_sigma_number(&self, n: u64) -> bool {
        prime_divisors(n).iter().all(|&p| self.contains(p))
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .primes
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        if self.complement {
            write!(f, "rest({body})")
        } else {
            write!(f, "{body}")
        }
    }
}

/// A partition of all primes: explicit disjoint blocks plus the implicit
/// remainder block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaPartition {
    blocks: Vec<BTreeSet<u64>>,
}

impl SigmaPartition {
    /// Parse the `|`-separated block grammar, e.g. `"2|3|5,7"`.
    pub fn parse(text: &str) -> Result<SigmaPartition> {
        let mut blocks = Vec::new();
        let mut seen: BTreeSet<u64> = BTreeSet::new();
        for part in text.split('|') {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::Parse("empty sigma block".into()));
            }
            let mut block = BTreeSet::new();
            for tok in part.split(',') {
                let tok = tok.trim();
                let p: u64 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad prime '{tok}'")))?;
                if !is_prime(p) {
                    return Err(Error::Parse(format!("{p} is not prime")));
                }
                if !seen.insert(p) {
                    return Err(Error::Parse(format!("prime {p} repeated across blocks")));
                }
                block.insert(p);
            }
            blocks.push(block);
        }
        Ok(SigmaPartition { blocks })
    }

    pub fn from_blocks(blocks: Vec<BTreeSet<u64>>) -> Result<SigmaPartition> {
        let mut seen = BTreeSet::new();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::Invalid("empty sigma block".into()));
            }
            for &p in b {
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                if !seen.insert(p) {
                    return Err(Error::Invalid(format!("prime {p} repeated across blocks")));
                }
            }
        }
        Ok(SigmaPartition { blocks })
    }

    pub fn explicit_blocks(&self) -> &[BTreeSet<u64>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> Block {
        Block::explicit(self.blocks[i].clone())
    }

    /// The implicit cofinite block of all unlisted primes.
    pub fn remainder_block(&self) -> Block {
        Block {
            primes: self.blocks.iter().flatten().copied().collect(),
            complement: true,
        }
    }

    /// The block containing `p`.
    pub fn block_of(&self, p: u64) -> Block {
        for b in &self.blocks {
            if b.contains(&p) {
                return Block::explicit(b.clone());
            }
        }
        self.remainder_block()
    }
}

impl fmt::Display for SigmaPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("|");
        write!(f, "{text}")
    }
}

/// `sigma(G)`: the blocks meeting `pi(|G|)`, each paired with that
/// intersection.
#[derive(Clone)]
pub struct SigmaProfile {
    partition: SigmaPartition,
    active: Vec<(Block, BTreeSet<u64>)>,
}

impl SigmaProfile {
    pub fn new(group_order: u64, partition: &SigmaPartition) -> SigmaProfile {
        let pi = prime_divisors(group_order);
        let mut active = Vec::new();
        for (i, b) in partition.explicit_blocks().iter().enumerate() {
            let inter: BTreeSet<u64> = pi.iter().copied().filter(|p| b.contains(p)).collect();
            if !inter.is_empty() {
                active.push((partition.block(i), inter));
            }
        }
        let rem = partition.remainder_block();
        let inter: BTreeSet<u64> = pi.iter().copied().filter(|&p| rem.contains(p)).collect();
        if !inter.is_empty() {
            active.push((rem, inter));
        }
        SigmaProfile {
            partition: partition.clone(),
            active,
        }
    }

    pub fn partition(&self) -> &SigmaPartition {
        &self.partition
    }

    /// Active blocks, in partition order (remainder last if active).
    pub fn active_blocks(&self) -> impl Iterator<Item = &Block> {
        self.active.iter().map(|(b, _)| b)
    }

    pub fn active_len(&self) -> usize {
        self.active.len()
    }

    /// `pi(|G|)` intersected with the `i`-th active block.
    pub fn active_primes(&self, i: usize) -> &BTreeSet<u64> {
        &self.active[i].1
    }
}

/// True iff every prime divisor of `n` lies in `block`.
pub fn is_sigma_i_number(n: u64, block: &Block) -> bool {
    block.is_sigma_number(n)
}

/// All listed subgroups that are Hall sigma_i-subgroups for `block`:
/// the order is a block-number and the index has no prime in the block.
pub fn hall_subgroups(lattice: &SubgroupLattice, block: &Block) -> Vec<SubgroupRef> {
    let g_order = lattice.ambient().order();
    lattice
        .subgroups()
        .iter()
        .filter(|h| {
            block.is_sigma_number(h.order())
                && !prime_divisors(g_order / h.order())
                    .iter()
                    .any(|&p| block.contains(p))
        })
        .cloned()
        .collect()
}

/// One Hall sigma_i-subgroup per active block, in active-block order.
pub type HallSet = Vec<SubgroupRef>;

/// All complete Hall sigma-sets: the Cartesian product of the per-block Hall
/// subgroup lists. Empty if some active block has none.
pub fn complete_hall_sets(lattice: &SubgroupLattice, profile: &SigmaProfile) -> Vec<HallSet> {
    let per_block: Vec<Vec<SubgroupRef>> = profile
        .active_blocks()
        .map(|b| hall_subgroups(lattice, b))
        .collect();
    if per_block.iter().any(|v| v.is_empty()) {
        return Vec::new();
    }
    let mut out: Vec<HallSet> = vec![Vec::new()];
    for options in &per_block {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for opt in options {
                let mut v = prefix.clone();
                v.push(opt.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// True iff for every active block: Hall subgroups exist, any two are
/// conjugate, and every sigma_i-subgroup lies in a conjugate of one.
pub fn is_sigma_full_of_sylow_type(lattice: &SubgroupLattice, profile: &SigmaProfile) -> bool {
    let g = lattice.ambient();
    let n = g.order() as u32;
    for block in profile.active_blocks() {
        let halls = hall_subgroups(lattice, block);
        let first = match halls.first() {
            None => return false,
            Some(h) => h,
        };
        // pairwise conjugacy (to the first suffices, by transitivity)
        for h in &halls[1..] {
            if !(0..n).any(|x| &first.conjugate_by_index(x) == h) {
                return false;
            }
        }
        // every sigma_i-subgroup lies in some conjugate of the first
        for s in lattice.subgroups() {
            if !block.is_sigma_number(s.order()) {
                continue;
            }
            if !(0..n).any(|x| s.conjugate_by_index(x).is_subset_of(first)) {
                return false;
            }
        }
    }
    true
}

/// `O^{sigma_i}(G)`: the smallest normal subgroup with sigma_i-group
/// quotient, computed as the normal closure of all elements whose order has
/// no prime in `block`.
pub fn o_upper_sigma(g: &Arc<Group>, block: &Block) -> Result<SubgroupRef> {
    let n = g.elements()?.len() as u32;
    let seed: Vec<u32> = (0..n)
        .filter(|&i| !prime_divisors(g.elem_order(i)).iter().any(|&p| block.contains(p)))
        .collect();
    let h = g.subgroup_from_indices(g.closure_indices(&seed));
    g.normal_closure(&h)
}

/// Cross-check route for [`o_upper_sigma`]: intersection of all normal
/// subgroups whose quotient order is a sigma_i-number.
pub fn o_upper_sigma_via_normals(lattice: &SubgroupLattice, block: &Block) -> SubgroupRef {
    let g_order = lattice.ambient().order();
    let mut acc = lattice.full_group().clone();
    for n in lattice.normal_subgroups() {
        if block.is_sigma_number(g_order / n.order()) {
            acc = acc.intersect(&n).expect("same ambient");
        }
    }
    acc
}
