//! Sigma_i-sylowizers and the permutability predicates built around them.
//!
//! A sigma_i-sylowizer of a sigma_i-subgroup `R` in `G` is a subgroup maximal
//! with respect to containing `R` as a Hall sigma_i-subgroup. Enumeration is
//! an exact lattice scan followed by a maximality filter.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Group, SubgroupRef};
use crate::lattice::SubgroupLattice;
use crate::perm::Perm;
use crate::sigma::{complete_hall_sets, prime_divisors, Block, SigmaProfile};

/// True iff `r <= s` holds with `r` a Hall sigma_i-subgroup of `s`:
/// `pi(|r|)` lies in the block and no prime of `|s : r|` does.
pub fn is_hall_in(s: &SubgroupRef, r: &SubgroupRef, block: &Block) -> Result<bool> {
    if !r.is_subset_of(s) {
        return Err(Error::NotASubgroup(r.describe()));
    }
    Ok(block.is_sigma_number(r.order())
        && !prime_divisors(s.order() / r.order())
            .iter()
            .any(|&p| block.contains(p)))
}

/// All sigma_i-sylowizers of `r` in the lattice's ambient group.
pub fn sylowizers(
    lattice: &SubgroupLattice,
    r: &SubgroupRef,
    block: &Block,
) -> Result<Vec<SubgroupRef>> {
    sylowizers_in(lattice, lattice.full_group(), r, block)
}

/// All sigma_i-sylowizers of `r` in the subgroup `k` (scanned over lattice
/// members contained in `k`).
pub fn sylowizers_in(
    lattice: &SubgroupLattice,
    k: &SubgroupRef,
    r: &SubgroupRef,
    block: &Block,
) -> Result<Vec<SubgroupRef>> {
    if !block.is_sigma_number(r.order()) {
        return Err(Error::NotSigmaSubgroup);
    }
    if !r.is_subset_of(k) {
        return Err(Error::NotASubgroup(r.describe()));
    }
    let candidates: Vec<&SubgroupRef> = lattice
        .subgroups()
        .iter()
        .filter(|s| {
            s.is_subset_of(k)
                && r.is_subset_of(s)
                && is_hall_in(s, r, block).expect("r <= s")
        })
        .collect();
    Ok(candidates
        .iter()
        .filter(|s| {
            !candidates
                .iter()
                .any(|t| t.order() > s.order() && s.is_subset_of(t))
        })
        .map(|s| (*s).clone())
        .collect())
}

/// Conditional permutability: true with a witness `x` iff `H T^x = T^x H`
/// for some `x` in `G`. The scan runs over right-coset representatives of
/// `N_G(T)`, since `T^x` only depends on the coset.
pub fn is_c_permutable(
    g: &Arc<Group>,
    h: &SubgroupRef,
    t: &SubgroupRef,
) -> Result<(bool, Option<Perm>)> {
    if !Arc::ptr_eq(g, h.ambient()) || !Arc::ptr_eq(g, t.ambient()) {
        return Err(Error::AmbientMismatch);
    }
    let n = g.elements()?.len() as u32;
    let normalizer = t.normalizer();
    let mut covered = vec![false; n as usize];
    for x in 0..n {
        if covered[x as usize] {
            continue;
        }
        for &m in normalizer.element_indices() {
            covered[g.mul(m, x) as usize] = true;
        }
        let tx = t.conjugate_by_index(x);
        if h.permutes_with(&tx)? {
            return Ok((true, Some(g.perm(x).clone())));
        }
    }
    Ok((false, None))
}

/// Sigma-permutability: `a` permutes with every conjugate of every member of
/// some complete Hall sigma-set of the ambient group. All complete Hall
/// sigma-sets are searched for a witnessing one.
pub fn is_sigma_permutable(
    lattice: &SubgroupLattice,
    a: &SubgroupRef,
    profile: &SigmaProfile,
) -> Result<bool> {
    let g = lattice.ambient();
    if !Arc::ptr_eq(g, a.ambient()) {
        return Err(Error::AmbientMismatch);
    }
    let sets = complete_hall_sets(lattice, profile);
    if sets.is_empty() {
        return Err(Error::NoCompleteHallSet);
    }
    let n = g.order() as u32;
    'set: for hall_set in &sets {
        for member in hall_set {
            let normalizer = member.normalizer();
            let mut covered = vec![false; n as usize];
            for x in 0..n {
                if covered[x as usize] {
                    continue;
                }
                for &m in normalizer.element_indices() {
                    covered[g.mul(m, x) as usize] = true;
                }
                if !a.permutes_with(&member.conjugate_by_index(x))? {
                    continue 'set;
                }
            }
        }
        return Ok(true);
    }
    Ok(false)
}
