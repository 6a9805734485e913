//! Group-class predicates: cyclic, abelian, nilpotent, soluble,
//! supersoluble, p-nilpotent.
//!
//! Supersolubility is decided by chief-series construction; Huppert's
//! criterion (every maximal subgroup has prime index) is exposed as an
//! independent cross-check and asserted against it in tests.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Group, SubgroupRef};
use crate::lattice::SubgroupLattice;
use crate::sigma::{is_prime, p_part, prime_divisors};

/// A chief series `1 = N_0 < N_1 < ... < N_k = G` of normal subgroups with
/// no normal subgroup of `G` strictly between consecutive terms.
pub struct ChiefSeriesCertificate {
    pub series: Vec<SubgroupRef>,
    pub factor_orders: Vec<u64>,
}

/// True iff some element of `h` has order `|h|`.
pub fn is_cyclic(h: &SubgroupRef) -> bool {
    let g = h.ambient();
    h.element_indices()
        .iter()
        .any(|&i| g.elem_order(i) == h.order())
}

pub fn is_abelian(h: &SubgroupRef) -> bool {
    let g = h.ambient();
    let idx = h.element_indices();
    idx.iter()
        .all(|&a| idx.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

/// True iff `h` is the direct product of its Sylow subgroups, checked as:
/// for each prime `p` dividing `|h|`, the set of p-elements is closed under
/// multiplication (it is then the unique, normal Sylow p-subgroup).
pub fn is_nilpotent(h: &SubgroupRef) -> bool {
    let g = h.ambient();
    for p in prime_divisors(h.order()) {
        let p_elems: Vec<u32> = h
            .element_indices()
            .iter()
            .copied()
            .filter(|&i| {
                let o = g.elem_order(i);
                o == p_part(o, p)
            })
            .collect();
        let set: std::collections::BTreeSet<u32> = p_elems.iter().copied().collect();
        for &a in &p_elems {
            for &b in &p_elems {
                if !set.contains(&g.mul(a, b)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Derived subgroup of a subgroup: closure of all commutators.
fn derived_subgroup(h: &SubgroupRef) -> SubgroupRef {
    let g = h.ambient();
    let idx = h.element_indices();
    let mut comms: Vec<u32> = Vec::new();
    for &a in idx {
        for &b in idx {
            // [a,b] = a^-1 b^-1 a b
            comms.push(g.mul(g.mul(g.mul(g.inv(a), g.inv(b)), a), b));
        }
    }
    comms.sort();
    comms.dedup();
    g.subgroup_from_indices(g.closure_indices(&comms))
}

/// True iff the derived series reaches the trivial subgroup.
pub fn is_soluble(g: &Arc<Group>, _lattice: &SubgroupLattice) -> bool {
    let mut current = g.full_subgroup();
    loop {
        let next = derived_subgroup(&current);
        if next.is_trivial() {
            return true;
        }
        if next.order() == current.order() {
            return false;
        }
        current = next;
    }
}

/// Derived series of the whole group, down to the first repeat.
pub fn derived_series(g: &Arc<Group>) -> Vec<SubgroupRef> {
    let mut series = vec![g.full_subgroup()];
    loop {
        let next = derived_subgroup(series.last().expect("nonempty"));
        if next.order() == series.last().unwrap().order() {
            return series;
        }
        let done = next.is_trivial();
        series.push(next);
        if done {
            return series;
        }
    }
}

/// Build one chief series of the ambient group by repeatedly picking a
/// minimal normal overgroup of the current term.
pub fn chief_series(lattice: &SubgroupLattice) -> ChiefSeriesCertificate {
    let normals = lattice.normal_subgroups();
    let mut series = vec![lattice.trivial().clone()];
    let mut factor_orders = Vec::new();
    while !series.last().unwrap().is_whole_group() {
        let current = series.last().unwrap().clone();
        // smallest-order normal strictly containing `current`; nothing
        // normal fits strictly between it and `current`
        let next = normals
            .iter()
            .filter(|n| n.order() > current.order() && current.is_subset_of(n))
            .min_by_key(|n| (n.order(), n.element_indices().to_vec()))
            .expect("the whole group is normal")
            .clone();
        factor_orders.push(next.order() / current.order());
        series.push(next);
    }
    ChiefSeriesCertificate {
        series,
        factor_orders,
    }
}

/// Supersolubility via chief-series construction: all chief factors must
/// have prime order. Returns the witnessing series when true.
pub fn is_supersoluble(
    _g: &Arc<Group>,
    lattice: &SubgroupLattice,
) -> (bool, Option<ChiefSeriesCertificate>) {
    let cert = chief_series(lattice);
    if cert.factor_orders.iter().all(|&f| is_prime(f)) {
        (true, Some(cert))
    } else {
        (false, None)
    }
}

/// Huppert's criterion, the independent oracle for supersolubility:
/// every maximal subgroup of `G` has prime index.
pub fn huppert_criterion(lattice: &SubgroupLattice) -> bool {
    let g_order = lattice.ambient().order();
    if g_order == 1 {
        return true;
    }
    lattice
        .maximal_subgroups_of(lattice.full_group())
        .expect("full group is listed")
        .iter()
        .all(|m| is_prime(g_order / m.order()))
}

/// True iff `G` has a normal p-complement: a normal subgroup of order
/// `|G| / |G|_p`.
pub fn is_p_nilpotent(g: &Arc<Group>, lattice: &SubgroupLattice, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let target = g.order() / p_part(g.order(), p);
    Ok(lattice
        .normal_subgroups()
        .iter()
        .any(|n| n.order() == target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::all_subgroups;
    use crate::perm::Perm;

    fn p(text: &str, degree: usize) -> Perm {
        Perm::parse(text, degree).unwrap()
    }

    fn s3() -> Arc<Group> {
        Group::from_generators(vec![p("(1 2)", 3), p("(1 2 3)", 3)], 3).unwrap()
    }

    fn s4() -> Arc<Group> {
        Group::from_generators(vec![p("(1 2)", 4), p("(1 2 3 4)", 4)], 4).unwrap()
    }

    #[test]
    fn cyclic_examples() {
        let g = s4();
        assert!(is_cyclic(&g.trivial_subgroup()));
        let c4 = g.subgroup_from_generators(&[p("(1 2 3 4)", 4)]).unwrap();
        assert!(is_cyclic(&c4));
        let v4 = g
            .subgroup_from_generators(&[p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)])
            .unwrap();
        assert!(!is_cyclic(&v4)); // max element order 2 < 4
    }

    #[test]
    fn nilpotent_examples() {
        let g = s4();
        let d8 = g
            .subgroup_from_generators(&[p("(1 2 3 4)", 4), p("(1 3)", 4)])
            .unwrap();
        assert!(is_nilpotent(&d8)); // p-group
        let g3 = s3();
        assert!(!is_nilpotent(&g3.full_subgroup())); // Sylow-2 not normal
        let c6 = Group::from_generators(vec![p("(1 2 3 4 5 6)", 6)], 6).unwrap();
        assert!(is_nilpotent(&c6.full_subgroup())); // abelian
    }

    #[test]
    fn soluble_examples() {
        let g4 = s4();
        let l4 = all_subgroups(&g4).unwrap();
        assert!(is_soluble(&g4, &l4));
        let orders: Vec<u64> = derived_series(&g4).iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);

        let a5 = Group::from_generators(vec![p("(1 2 3)", 5), p("(3 4 5)", 5)], 5).unwrap();
        let l5 = all_subgroups(&a5).unwrap();
        assert!(!is_soluble(&a5, &l5)); // perfect

        let c6 = Group::from_generators(vec![p("(1 2 3 4 5 6)", 6)], 6).unwrap();
        let l6 = all_subgroups(&c6).unwrap();
        assert!(is_soluble(&c6, &l6));
    }

    #[test]
    fn supersoluble_examples() {
        let g3 = s3();
        let l3 = all_subgroups(&g3).unwrap();
        let (ok, cert) = is_supersoluble(&g3, &l3);
        assert!(ok);
        let cert = cert.unwrap();
        assert_eq!(cert.factor_orders, vec![3, 2]);

        let g4 = s4();
        let l4 = all_subgroups(&g4).unwrap();
        assert!(!is_supersoluble(&g4, &l4).0);
        assert!(!huppert_criterion(&l4)); // A4 has a maximal subgroup of index 4

        let c12 = Group::from_generators(
            vec![p("(1 2 3 4 5 6 7 8 9 10 11 12)", 12)],
            12,
        )
        .unwrap();
        let l12 = all_subgroups(&c12).unwrap();
        assert!(is_supersoluble(&c12, &l12).0);
    }

    #[test]
    fn certificate_is_sound() {
        let g3 = s3();
        let l3 = all_subgroups(&g3).unwrap();
        let (ok, cert) = is_supersoluble(&g3, &l3);
        assert!(ok);
        let cert = cert.unwrap();
        let product: u64 = cert.factor_orders.iter().product();
        assert_eq!(product, g3.order());
        for n in &cert.series {
            assert!(n.is_normal());
        }
        for f in &cert.factor_orders {
            assert!(is_prime(*f));
        }
    }

    #[test]
    fn chief_series_factors_are_chief() {
        let g4 = s4();
        let l4 = all_subgroups(&g4).unwrap();
        let cert = chief_series(&l4);
        let normals = l4.normal_subgroups();
        for w in cert.series.windows(2) {
            assert!(w[0].is_subset_of(&w[1]));
            assert!(!normals.iter().any(|n| {
                n.order() > w[0].order()
                    && n.order() < w[1].order()
                    && w[0].is_subset_of(n)
                    && n.is_subset_of(&w[1])
            }));
        }
    }

    #[test]
    fn p_nilpotent_examples() {
        let g3 = s3();
        let l3 = all_subgroups(&g3).unwrap();
        assert!(is_p_nilpotent(&g3, &l3, 2).unwrap()); // normal C3 complement
        let g4 = s4();
        let l4 = all_subgroups(&g4).unwrap();
        assert!(!is_p_nilpotent(&g4, &l4, 2).unwrap()); // no normal order-3 subgroup
        assert!(is_p_nilpotent(&g4, &l4, 5).unwrap()); // p does not divide |G|
        assert!(is_p_nilpotent(&g4, &l4, 4).is_err());
    }

    #[test]
    fn implication_chain_over_small_groups() {
        let groups = vec![
            s3(),
            s4(),
            Group::from_generators(vec![p("(1 2 3 4 5 6)", 6)], 6).unwrap(),
            Group::from_generators(
                vec![p("(1 2 3 4)(5 6 7 8)", 8), p("(1 5 3 7)(2 8 4 6)", 8)],
                8,
            )
            .unwrap(),
        ];
        for g in groups {
            let l = all_subgroups(&g).unwrap();
            let full = g.full_subgroup();
            let cyc = is_cyclic(&full);
            let ab = is_abelian(&full);
            let nil = is_nilpotent(&full);
            let ss = is_supersoluble(&g, &l).0;
            let sol = is_soluble(&g, &l);
            assert!(!cyc || ab);
            assert!(!ab || nil);
            assert!(!nil || ss);
            assert!(!ss || sol);
            // two supersolubility routes agree
            assert_eq!(ss, huppert_criterion(&l));
        }
    }
}
