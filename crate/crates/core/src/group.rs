//! Permutation groups backed by a stabilizer chain, with explicit element
//! materialization below a configurable order cap.
//!
//! Everything downstream (lattices, Hall subgroups, sylowizers, checkers)
//! works on materialized element sets; the chain provides exact order and
//! membership independently of the closure used for materialization.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default cap on the order of groups whose elements are materialized.
pub const DEFAULT_ORDER_CAP: u64 = 2000;

/// Materialization cap, overridable via `SYLOWIZER_ORDER_CAP`.
pub fn order_cap() -> u64 {
    std::env::var("SYLOWIZER_ORDER_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
}

/// One level of a stabilizer chain: a base point together with the
/// transversal of the fundamental orbit. `transversal[x]` maps `base` to `x`.
struct Level {
    base: usize,
    transversal: BTreeMap<usize, Perm>,
}

/// Stabilizer chain with deterministic base selection (smallest moved point
/// first). Order is the product of fundamental orbit sizes; membership is
/// decided by sifting.
pub struct StabChain {
    levels: Vec<Level>,
}

impl StabChain {
    fn build(generators: &[Perm], degree: usize) -> StabChain {
        let mut levels = Vec::new();
        let mut gens: Vec<Perm> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        gens.sort();
        gens.dedup();
        while !gens.is_empty() {
            // smallest point moved by some generator
            let base = (0..degree)
                .find(|&i| gens.iter().any(|g| g.apply(i) != i))
                .expect("non-identity generator moves a point");
            // BFS orbit in point order; rep[x](base) = x
            let mut transversal: BTreeMap<usize, Perm> = BTreeMap::new();
            transversal.insert(base, Perm::identity(degree));
            let mut frontier = vec![base];
            while let Some(p) = frontier.pop() {
                let rep = transversal[&p].clone();
                for g in &gens {
                    let q = g.apply(p);
                    if let std::collections::btree_map::Entry::Vacant(e) = transversal.entry(q) {
                        e.insert(rep.compose_raw(g));
                        frontier.push(q);
                    }
                }
            }
            // Schreier generators for the stabilizer of `base`
            let mut next: BTreeSet<Perm> = BTreeSet::new();
            for (&p, rep) in &transversal {
                for g in &gens {
                    let q = g.apply(p);
                    let s = rep
                        .compose_raw(g)
                        .compose_raw(&transversal[&q].inverse());
                    if !s.is_identity() {
                        next.insert(s);
                    }
                }
            }
            levels.push(Level { base, transversal });
            gens = next.into_iter().collect();
        }
        StabChain { levels }
    }

    pub fn order(&self) -> u64 {
        self.levels
            .iter()
            .map(|l| l.transversal.len() as u64)
            .product()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// True iff `p` sifts to the identity through the chain.
    pub fn contains(&self, p: &Perm) -> bool {
        let mut p = p.clone();
        for level in &self.levels {
            let x = p.apply(level.base);
            match level.transversal.get(&x) {
                None => return false,
                Some(rep) => p = p.compose_raw(&rep.inverse()),
            }
        }
        p.is_identity()
    }

    /// Enumerate all elements (unsorted).
    fn elements(&self, degree: usize) -> Vec<Perm> {
        let mut elems = vec![Perm::identity(degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.transversal.len());
            for s in &elems {
                for rep in level.transversal.values() {
                    next.push(s.compose_raw(rep));
                }
            }
            elems = next;
        }
        elems
    }
}

/// Element-level tables, present when `order <= cap`. Elements are sorted
/// lexicographically by image vector, so indices are deterministic.
struct Elements {
    perms: Vec<Perm>,
    index: HashMap<Perm, u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    elem_order: Vec<u64>,
    identity: u32,
}

/// A permutation group over a fixed degree. Immutable after construction.
pub struct Group {
    degree: usize,
    generators: Vec<Perm>,
    chain: StabChain,
    order: u64,
    elements: Option<Elements>,
}

impl Group {
    /// Build a group from generators. Elements are materialized when the
    /// order is at most [`order_cap`].
    pub fn from_generators(gens: Vec<Perm>, degree: usize) -> Result<Arc<Group>> {
        if degree == 0 {
            return Err(Error::Invalid("degree must be positive".into()));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let chain = StabChain::build(&gens, degree);
        let order = chain.order();
        let elements = if order <= order_cap() {
            let mut perms = chain.elements(degree);
            perms.sort();
            perms.dedup();
            debug_assert_eq!(perms.len() as u64, order);
            let n = perms.len();
            let index: HashMap<Perm, u32> = perms
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), i as u32))
                .collect();
            let mut mul = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    mul[a * n + b] = index[&perms[a].compose_raw(&perms[b])];
                }
            }
            let mut inv = vec![0u32; n];
            for a in 0..n {
                inv[a] = index[&perms[a].inverse()];
            }
            let elem_order: Vec<u64> = perms.iter().map(|p| p.order()).collect();
            let identity = index[&Perm::identity(degree)];
            Some(Elements {
                perms,
                index,
                mul,
                inv,
                elem_order,
                identity,
            })
        } else {
            None
        };
        Ok(Arc::new(Group {
            degree,
            generators: gens,
            chain,
            order,
            elements,
        }))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn is_materialized(&self) -> bool {
        self.elements.is_some()
    }

    /// Membership via chain sifting.
    pub fn contains(&self, p: &Perm) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        Ok(self.chain.contains(p))
    }

    /// All elements, sorted lexicographically by image vector.
    pub fn elements(&self) -> Result<&[Perm]> {
        match &self.elements {
            Some(e) => Ok(&e.perms),
            None => Err(Error::CapExceeded {
                order: self.order,
                cap: order_cap(),
            }),
        }
    }

    fn elems(&self) -> &Elements {
        self.elements
            .as_ref()
            .expect("group elements are not materialized (order above cap)")
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.elems().index.get(p).copied()
    }

    pub fn perm(&self, i: u32) -> &Perm {
        &self.elems().perms[i as usize]
    }

    #[inline]
    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        let e = self.elems();
        e.mul[a as usize * e.perms.len() + b as usize]
    }

    #[inline]
    pub(crate) fn inv(&self, a: u32) -> u32 {
        self.elems().inv[a as usize]
    }

    /// `x^g = g^-1 x g` at index level.
    #[inline]
    pub(crate) fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub(crate) fn elem_order(&self, i: u32) -> u64 {
        self.elems().elem_order[i as usize]
    }

    pub(crate) fn identity_idx(&self) -> u32 {
        self.elems().identity
    }

    /// Closure of a seed index set under multiplication (sorted result).
    pub(crate) fn closure_indices(&self, seed: &[u32]) -> Vec<u32> {
        let id = self.identity_idx();
        let mut set: BTreeSet<u32> = seed.iter().copied().collect();
        set.insert(id);
        let mut frontier: Vec<u32> = set.iter().copied().collect();
        while let Some(x) = frontier.pop() {
            for &s in seed {
                let y = self.mul(x, s);
                if set.insert(y) {
                    frontier.push(y);
                }
                let z = self.mul(x, self.inv(s));
                if set.insert(z) {
                    frontier.push(z);
                }
            }
        }
        set.into_iter().collect()
    }

    /// Greedy small generating set for a sorted element-index set.
    fn greedy_generators(&self, elements: &[u32]) -> Vec<Perm> {
        let mut gens: Vec<u32> = Vec::new();
        let mut closed: Vec<u32> = vec![self.identity_idx()];
        for &x in elements {
            if closed.binary_search(&x).is_err() {
                gens.push(x);
                closed = self.closure_indices(&gens);
                if closed.len() == elements.len() {
                    break;
                }
            }
        }
        gens.iter().map(|&i| self.perm(i).clone()).collect()
    }

    /// Subgroup generated by the given permutations.
    pub fn subgroup_from_generators(self: &Arc<Self>, gens: &[Perm]) -> Result<SubgroupRef> {
        let mut seed = Vec::new();
        for g in gens {
            if g.degree() != self.degree {
                return Err(Error::DegreeMismatch(self.degree, g.degree()));
            }
            match self.index_of(g) {
                Some(i) => seed.push(i),
                None => return Err(Error::NotASubgroup(g.to_string())),
            }
        }
        let elements = self.closure_indices(&seed);
        Ok(self.subgroup_from_indices(elements))
    }

    /// Wrap a sorted, closed element-index set as a subgroup.
    pub(crate) fn subgroup_from_indices(self: &Arc<Self>, elements: Vec<u32>) -> SubgroupRef {
        let generators = self.greedy_generators(&elements);
        SubgroupRef {
            ambient: Arc::clone(self),
            generators,
            elements,
        }
    }

    pub fn trivial_subgroup(self: &Arc<Self>) -> SubgroupRef {
        self.subgroup_from_indices(vec![self.identity_idx()])
    }

    pub fn full_subgroup(self: &Arc<Self>) -> SubgroupRef {
        let n = self.elems().perms.len() as u32;
        self.subgroup_from_indices((0..n).collect())
    }

    /// Smallest normal subgroup of `self` containing `h`: fixpoint of adding
    /// generator-conjugates.
    pub fn normal_closure(self: &Arc<Self>, h: &SubgroupRef) -> Result<SubgroupRef> {
        if !Arc::ptr_eq(self, &h.ambient) {
            return Err(Error::AmbientMismatch);
        }
        let gen_idx: Vec<u32> = self
            .generators
            .iter()
            .map(|g| self.index_of(g).expect("generator is an element"))
            .collect();
        let mut seed: BTreeSet<u32> = h.elements.iter().copied().collect();
        loop {
            let closed = self.closure_indices(&seed.iter().copied().collect::<Vec<_>>());
            let mut grew = false;
            for &x in &closed {
                for &g in &gen_idx {
                    if seed.insert(self.conj(x, g)) {
                        grew = true;
                    }
                }
            }
            for &x in &closed {
                seed.insert(x);
            }
            if !grew {
                return Ok(self.subgroup_from_indices(closed));
            }
        }
    }

    /// Permutation action of `self` on the right cosets of the normal
    /// subgroup `n`, together with the element-to-element epimorphism.
    pub fn quotient(self: &Arc<Self>, n: &SubgroupRef) -> Result<Quotient> {
        if !Arc::ptr_eq(self, &n.ambient) {
            return Err(Error::AmbientMismatch);
        }
        if !n.is_normal() {
            return Err(Error::NotNormal);
        }
        let size = self.elems().perms.len();
        let mut coset_of = vec![u32::MAX; size];
        let mut reps: Vec<u32> = Vec::new();
        for g in 0..size as u32 {
            if coset_of[g as usize] == u32::MAX {
                let c = reps.len() as u32;
                reps.push(g);
                for &x in &n.elements {
                    coset_of[self.mul(x, g) as usize] = c;
                }
            }
        }
        let num_cosets = reps.len();
        // action of g on cosets: N*rep -> N*(rep*g)
        let action = |g: u32| -> Perm {
            let images: Vec<u32> = reps
                .iter()
                .map(|&r| coset_of[self.mul(r, g) as usize])
                .collect();
            Perm::from_images(images).expect("coset action is a bijection")
        };
        let image_gens: Vec<Perm> = self
            .generators
            .iter()
            .map(|g| action(self.index_of(g).expect("generator is an element")))
            .collect();
        let qgroup = Group::from_generators(image_gens, num_cosets.max(1))?;
        let map: Vec<u32> = (0..size as u32)
            .map(|g| qgroup.index_of(&action(g)).expect("image is in the quotient"))
            .collect();
        Ok(Quotient {
            source: Arc::clone(self),
            group: qgroup,
            map,
        })
    }
}

/// A quotient `G/N`: the coset-action image together with the epimorphism.
pub struct Quotient {
    source: Arc<Group>,
    pub group: Arc<Group>,
    /// `map[i]` is the quotient element index of the `i`-th element of `G`.
    map: Vec<u32>,
}

impl Quotient {
    pub fn apply(&self, g: &Perm) -> Result<Perm> {
        let i = self
            .source
            .index_of(g)
            .ok_or_else(|| Error::NotASubgroup(g.to_string()))?;
        Ok(self.group.perm(self.map[i as usize]).clone())
    }

    pub fn image_index(&self, i: u32) -> u32 {
        self.map[i as usize]
    }

    /// Image of a subgroup of `G` as a subgroup of `G/N`.
    pub fn image_of(&self, h: &SubgroupRef) -> SubgroupRef {
        let mut idx: Vec<u32> = h.elements.iter().map(|&i| self.map[i as usize]).collect();
        idx.sort();
        idx.dedup();
        self.group.subgroup_from_indices(idx)
    }

    /// Full preimage of a subgroup of `G/N` as a subgroup of `G`.
    pub fn preimage_of(&self, h: &SubgroupRef) -> Result<SubgroupRef> {
        if !Arc::ptr_eq(&self.group, &h.ambient) {
            return Err(Error::AmbientMismatch);
        }
        let target: BTreeSet<u32> = h.elements.iter().copied().collect();
        let idx: Vec<u32> = (0..self.map.len() as u32)
            .filter(|&i| target.contains(&self.map[i as usize]))
            .collect();
        Ok(self.source.subgroup_from_indices(idx))
    }
}

/// A subgroup of an ambient [`Group`], with its element set materialized as
/// sorted ambient element indices.
#[derive(Clone)]
pub struct SubgroupRef {
    ambient: Arc<Group>,
    generators: Vec<Perm>,
    /// Sorted ambient element indices; closed under product and inverse.
    elements: Vec<u32>,
}

impl std::fmt::Debug for SubgroupRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubgroupRef(order {}, {})", self.order(), self.describe())
    }
}

impl PartialEq for SubgroupRef {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient) && self.elements == other.elements
    }
}
impl Eq for SubgroupRef {}

impl SubgroupRef {
    pub fn ambient(&self) -> &Arc<Group> {
        &self.ambient
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn element_indices(&self) -> &[u32] {
        &self.elements
    }

    pub fn element_perms(&self) -> Vec<Perm> {
        self.elements
            .iter()
            .map(|&i| self.ambient.perm(i).clone())
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole_group(&self) -> bool {
        self.order() == self.ambient.order()
    }

    pub fn contains_index(&self, i: u32) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    pub fn contains_perm(&self, p: &Perm) -> bool {
        self.ambient
            .index_of(p)
            .is_some_and(|i| self.contains_index(i))
    }

    pub fn is_subset_of(&self, other: &SubgroupRef) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient)
            && self.elements.iter().all(|i| other.contains_index(*i))
    }

    /// `H^g` for an ambient element index `g`.
    pub fn conjugate_by_index(&self, g: u32) -> SubgroupRef {
        let mut idx: Vec<u32> = self
            .elements
            .iter()
            .map(|&x| self.ambient.conj(x, g))
            .collect();
        idx.sort();
        self.ambient.subgroup_from_indices(idx)
    }

    pub fn is_normal(&self) -> bool {
        let gens: Vec<u32> = self
            .ambient
            .generators()
            .iter()
            .map(|g| self.ambient.index_of(g).expect("generator is an element"))
            .collect();
        gens.iter().all(|&g| {
            self.elements
                .iter()
                .all(|&x| self.contains_index(self.ambient.conj(x, g)))
        })
    }

    pub fn intersect(&self, other: &SubgroupRef) -> Result<SubgroupRef> {
        if !Arc::ptr_eq(&self.ambient, &other.ambient) {
            return Err(Error::AmbientMismatch);
        }
        let idx: Vec<u32> = self
            .elements
            .iter()
            .copied()
            .filter(|&i| other.contains_index(i))
            .collect();
        Ok(self.ambient.subgroup_from_indices(idx))
    }

    /// The set-product `AB` as a sorted index set (not necessarily a group).
    pub fn product_set(&self, other: &SubgroupRef) -> Result<Vec<u32>> {
        if !Arc::ptr_eq(&self.ambient, &other.ambient) {
            return Err(Error::AmbientMismatch);
        }
        let mut out: BTreeSet<u32> = BTreeSet::new();
        for &a in &self.elements {
            for &b in &other.elements {
                out.insert(self.ambient.mul(a, b));
            }
        }
        Ok(out.into_iter().collect())
    }

    /// True iff the set-products `AB` and `BA` coincide (equivalently, `AB`
    /// is a subgroup).
    pub fn permutes_with(&self, other: &SubgroupRef) -> Result<bool> {
        let ab = self.product_set(other)?;
        let ba = other.product_set(self)?;
        Ok(ab == ba)
    }

    /// The subgroup `<self, other>` generated by both element sets.
    pub fn join(&self, other: &SubgroupRef) -> Result<SubgroupRef> {
        if !Arc::ptr_eq(&self.ambient, &other.ambient) {
            return Err(Error::AmbientMismatch);
        }
        let mut seed = self.elements.clone();
        seed.extend_from_slice(&other.elements);
        Ok(self.ambient.subgroup_from_indices(
            self.ambient.closure_indices(&seed),
        ))
    }

    /// `N_G(H)` computed by an elementwise scan of the ambient group.
    pub fn normalizer(&self) -> SubgroupRef {
        let n = self.ambient.elems().perms.len() as u32;
        let idx: Vec<u32> = (0..n)
            .filter(|&g| {
                self.elements
                    .iter()
                    .all(|&x| self.contains_index(self.ambient.conj(x, g)))
            })
            .collect();
        self.ambient.subgroup_from_indices(idx)
    }

    /// Generators rendered in cycle notation, for reports.
    pub fn describe(&self) -> String {
        if self.generators.is_empty() {
            "()".to_string()
        } else {
            self.generators
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        }
    }
}
