//! Exhaustive subgroup lattices of materialized groups.
//!
//! Enumeration is by cyclic extension: seed with every cyclic subgroup, then
//! repeatedly close `<A, x>` for listed `A` and ambient `x` until fixpoint.
//! The finished list is sorted by (order, element indices), so everything
//! downstream is deterministic.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Group, SubgroupRef};

pub struct SubgroupLattice {
    ambient: Arc<Group>,
    subgroups: Vec<SubgroupRef>,
    by_elements: HashMap<Vec<u32>, usize>,
}

/// Enumerate every subgroup of `g`. Requires materialized elements.
pub fn all_subgroups(g: &Arc<Group>) -> Result<SubgroupLattice> {
    let n = g.elements()?.len() as u32;
    let mut sets: Vec<Vec<u32>> = Vec::new();
    let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
    let add = |sets: &mut Vec<Vec<u32>>, seen: &mut HashMap<Vec<u32>, usize>, s: Vec<u32>| {
        if !seen.contains_key(&s) {
            seen.insert(s.clone(), sets.len());
            sets.push(s);
        }
    };
    // all cyclic subgroups (includes the trivial one)
    for x in 0..n {
        add(&mut sets, &mut seen, g.closure_indices(&[x]));
    }
    // cyclic extension to fixpoint
    let mut i = 0;
    while i < sets.len() {
        for x in 0..n {
            if sets[i].binary_search(&x).is_ok() {
                continue;
            }
            let mut seed = sets[i].clone();
            seed.push(x);
            let ext = g.closure_indices(&seed);
            add(&mut sets, &mut seen, ext);
        }
        i += 1;
    }
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let subgroups: Vec<SubgroupRef> = sets
        .iter()
        .map(|s| g.subgroup_from_indices(s.clone()))
        .collect();
    let by_elements = sets
        .into_iter()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    Ok(SubgroupLattice {
        ambient: Arc::clone(g),
        subgroups,
        by_elements,
    })
}

impl SubgroupLattice {
    pub fn ambient(&self) -> &Arc<Group> {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[SubgroupRef] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &SubgroupRef {
        &self.subgroups[i]
    }

    pub fn index_of(&self, h: &SubgroupRef) -> Result<usize> {
        if !Arc::ptr_eq(&self.ambient, h.ambient()) {
            return Err(Error::AmbientMismatch);
        }
        self.by_elements
            .get(h.element_indices())
            .copied()
            .ok_or(Error::NotInLattice)
    }

    pub fn full_group(&self) -> &SubgroupRef {
        self.subgroups.last().expect("lattice is nonempty")
    }

    pub fn trivial(&self) -> &SubgroupRef {
        &self.subgroups[0]
    }

    /// All listed `K < H` with nothing listed strictly between.
    pub fn maximal_subgroups_of(&self, h: &SubgroupRef) -> Result<Vec<SubgroupRef>> {
        self.index_of(h)?;
        let below: Vec<&SubgroupRef> = self
            .subgroups
            .iter()
            .filter(|k| k.order() < h.order() && k.is_subset_of(h))
            .collect();
        Ok(below
            .iter()
            .filter(|k| {
                !below
                    .iter()
                    .any(|j| j.order() > k.order() && k.is_subset_of(j) && j.order() < h.order())
            })
            .map(|k| (*k).clone())
            .collect())
    }

    /// Subgroups fixed by conjugation by every ambient generator.
    pub fn normal_subgroups(&self) -> Vec<SubgroupRef> {
        self.subgroups
            .iter()
            .filter(|h| h.is_normal())
            .cloned()
            .collect()
    }

    /// Nontrivial normal subgroups minimal under containment.
    pub fn minimal_normal_subgroups(&self) -> Result<Vec<SubgroupRef>> {
        if self.ambient.order() == 1 {
            return Err(Error::TrivialGroup);
        }
        let normals: Vec<SubgroupRef> = self
            .normal_subgroups()
            .into_iter()
            .filter(|h| !h.is_trivial())
            .collect();
        Ok(normals
            .iter()
            .filter(|n| {
                !normals
                    .iter()
                    .any(|m| m.order() < n.order() && m.is_subset_of(n))
            })
            .cloned()
            .collect())
    }

    /// Intersection of all maximal subgroups of the ambient group.
    pub fn frattini(&self) -> SubgroupRef {
        let maxes = self
            .maximal_subgroups_of(self.full_group())
            .expect("full group is listed");
        let mut acc = self.full_group().clone();
        for m in &maxes {
            acc = acc.intersect(m).expect("same ambient");
        }
        acc
    }

    /// `N_G(H)`, returned as the listed lattice member.
    pub fn normalizer(&self, h: &SubgroupRef) -> Result<SubgroupRef> {
        self.index_of(h)?;
        let n = h.normalizer();
        let i = self.index_of(&n)?;
        Ok(self.subgroups[i].clone())
    }

    /// Listed subgroups contained in `h` (including `h`).
    pub fn subgroups_within<'a>(
        &'a self,
        h: &'a SubgroupRef,
    ) -> impl Iterator<Item = &'a SubgroupRef> {
        self.subgroups.iter().filter(move |k| k.is_subset_of(h))
    }

    /// Listed subgroups containing `h` (including `h`).
    pub fn subgroups_containing<'a>(
        &'a self,
        h: &'a SubgroupRef,
    ) -> impl Iterator<Item = &'a SubgroupRef> {
        self.subgroups.iter().filter(move |k| h.is_subset_of(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
    use std::collections::BTreeSet;

    fn p(text: &str, degree: usize) -> Perm {
        Perm::parse(text, degree).unwrap()
    }

    fn s4() -> Arc<Group> {
        Group::from_generators(vec![p("(1 2)", 4), p("(1 2 3 4)", 4)], 4).unwrap()
    }

    fn s3() -> Arc<Group> {
        Group::from_generators(vec![p("(1 2)", 3), p("(1 2 3)", 3)], 3).unwrap()
    }

    /// Independent oracle: closures (by plain permutation products) of all
    /// element subsets of size <= 3. Complete for groups whose subgroups are
    /// all 3-generated, which covers every group this oracle is run on.
    pub(crate) fn subgroup_count_oracle(g: &Arc<Group>) -> usize {
        let elems = g.elements().unwrap().to_vec();
        let n = elems.len();
        let mut found: BTreeSet<Vec<Perm>> = BTreeSet::new();
        let close = |gens: &[&Perm]| {
            let mut set: BTreeSet<Perm> = BTreeSet::new();
            set.insert(Perm::identity(g.degree()));
            let mut frontier: Vec<Perm> = vec![Perm::identity(g.degree())];
            while let Some(x) = frontier.pop() {
                for gp in gens {
                    let y = x.compose(gp).unwrap();
                    if set.insert(y.clone()) {
                        frontier.push(y);
                    }
                }
            }
            set.into_iter().collect::<Vec<Perm>>()
        };
        found.insert(close(&[]));
        for a in 0..n {
            found.insert(close(&[&elems[a]]));
            for b in a + 1..n {
                found.insert(close(&[&elems[a], &elems[b]]));
                for c in b + 1..n {
                    found.insert(close(&[&elems[a], &elems[b], &elems[c]]));
                }
            }
        }
        found.len()
    }

    #[test]
    fn counts_match_brute_force() {
        let g3 = s3();
        let l3 = all_subgroups(&g3).unwrap();
        assert_eq!(l3.len(), 6);
        assert_eq!(subgroup_count_oracle(&g3), 6);

        let g4 = s4();
        let l4 = all_subgroups(&g4).unwrap();
        assert_eq!(l4.len(), 30);
        assert_eq!(subgroup_count_oracle(&g4), 30);
    }

    #[test]
    fn prime_cyclic_has_two_subgroups() {
        let c5 = Group::from_generators(vec![p("(1 2 3 4 5)", 5)], 5).unwrap();
        assert_eq!(all_subgroups(&c5).unwrap().len(), 2);
    }

    #[test]
    fn lattice_is_closed_under_intersection_and_conjugation() {
        let g = s4();
        let l = all_subgroups(&g).unwrap();
        for a in l.subgroups() {
            for b in l.subgroups() {
                let i = a.intersect(b).unwrap();
                assert!(l.index_of(&i).is_ok());
            }
        }
        for h in l.subgroups() {
            for x in 0..g.order() as u32 {
                assert!(l.index_of(&h.conjugate_by_index(x)).is_ok());
            }
        }
    }

    #[test]
    fn maximal_subgroups_examples() {
        let g = s4();
        let l = all_subgroups(&g).unwrap();
        // maximal subgroups of S4 itself
        let mut orders: Vec<u64> = l
            .maximal_subgroups_of(l.full_group())
            .unwrap()
            .iter()
            .map(|m| m.order())
            .collect();
        orders.sort();
        assert_eq!(orders, vec![6, 6, 6, 6, 8, 8, 8, 12]);
        // maximal subgroups of a dihedral order-8 subgroup: three of order 4
        let d8 = g
            .subgroup_from_generators(&[p("(1 2 3 4)", 4), p("(1 3)", 4)])
            .unwrap();
        assert_eq!(d8.order(), 8);
        let maxes = l.maximal_subgroups_of(&d8).unwrap();
        assert_eq!(maxes.len(), 3);
        assert!(maxes.iter().all(|m| m.order() == 4));
        assert_eq!(
            maxes.iter().filter(|m| m.element_indices().iter().any(|&i| g.elem_order(i) == 4)).count(),
            1
        );
        // prime order: only the trivial subgroup
        let c3 = g.subgroup_from_generators(&[p("(1 2 3)", 4)]).unwrap();
        let m3 = l.maximal_subgroups_of(&c3).unwrap();
        assert_eq!(m3.len(), 1);
        assert!(m3[0].is_trivial());
    }

    #[test]
    fn normal_subgroup_examples() {
        let g = s4();
        let l = all_subgroups(&g).unwrap();
        let mut orders: Vec<u64> = l.normal_subgroups().iter().map(|h| h.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 4, 12, 24]);

        let g3 = s3();
        let l3 = all_subgroups(&g3).unwrap();
        let mut o3: Vec<u64> = l3.normal_subgroups().iter().map(|h| h.order()).collect();
        o3.sort();
        assert_eq!(o3, vec![1, 3, 6]);

        // abelian group: everything is normal
        let c12 = Group::from_generators(
            vec![p("(1 2 3 4 5 6 7 8 9 10 11 12)", 12)],
            12,
        )
        .unwrap();
        let l12 = all_subgroups(&c12).unwrap();
        assert_eq!(l12.normal_subgroups().len(), l12.len());
    }

    #[test]
    fn minimal_normal_subgroups_examples() {
        let g = s4();
        let l = all_subgroups(&g).unwrap();
        let mins = l.minimal_normal_subgroups().unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 4);

        let c6 = Group::from_generators(vec![p("(1 2 3 4 5 6)", 6)], 6).unwrap();
        let l6 = all_subgroups(&c6).unwrap();
        let mut o6: Vec<u64> = l6
            .minimal_normal_subgroups()
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        o6.sort();
        assert_eq!(o6, vec![2, 3]);

        // simple group: only itself
        let a5 = Group::from_generators(vec![p("(1 2 3)", 5), p("(3 4 5)", 5)], 5).unwrap();
        assert_eq!(a5.order(), 60);
        let l5 = all_subgroups(&a5).unwrap();
        let m5 = l5.minimal_normal_subgroups().unwrap();
        assert_eq!(m5.len(), 1);
        assert_eq!(m5[0].order(), 60);
    }

    #[test]
    fn minimal_normals_reject_trivial_group() {
        let t = Group::from_generators(vec![], 2).unwrap();
        let l = all_subgroups(&t).unwrap();
        assert_eq!(l.len(), 1);
        assert!(matches!(
            l.minimal_normal_subgroups(),
            Err(Error::TrivialGroup)
        ));
    }

    #[test]
    fn frattini_examples() {
        let l = all_subgroups(&s4()).unwrap();
        assert!(l.frattini().is_trivial());
        assert!(l.frattini().is_normal());

        let q8 = Group::from_generators(
            vec![
                p("(1 2 3 4)(5 6 7 8)", 8),
                p("(1 5 3 7)(2 8 4 6)", 8),
            ],
            8,
        )
        .unwrap();
        assert_eq!(q8.order(), 8);
        let lq = all_subgroups(&q8).unwrap();
        let f = lq.frattini();
        assert_eq!(f.order(), 2);
        assert!(f.is_normal());

        let c5 = Group::from_generators(vec![p("(1 2 3 4 5)", 5)], 5).unwrap();
        assert!(all_subgroups(&c5).unwrap().frattini().is_trivial());
    }

    #[test]
    fn normalizer_examples() {
        let g3 = s3();
        let l3 = all_subgroups(&g3).unwrap();
        let h = g3.subgroup_from_generators(&[p("(1 2)", 3)]).unwrap();
        assert_eq!(l3.normalizer(&h).unwrap(), h);
        let n = g3.subgroup_from_generators(&[p("(1 2 3)", 3)]).unwrap();
        assert!(l3.normalizer(&n).unwrap().is_whole_group());

        let g4 = s4();
        let l4 = all_subgroups(&g4).unwrap();
        let p3 = g4.subgroup_from_generators(&[p("(1 2 3)", 4)]).unwrap();
        assert_eq!(l4.normalizer(&p3).unwrap().order(), 6);
    }
}
