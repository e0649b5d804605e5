//! Fully enumerated permutation groups.
//!
//! A [`Group`] stores its elements sorted lexicographically by image table, so
//! element index 0 is always the identity and every listing is deterministic.
//! Subgroups are bitsets over those indices together with a small generating
//! set; two subgroups are equal iff their element sets are equal.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::spec::GroupSpec;
use crate::structure::PropertyReport;

/// Groups up to this order get a precomputed multiplication table.
const TABLE_MAX_ORDER: usize = 2048;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// Enumeration caps. Exceeding one is an error, never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub order_cap: usize,
    pub subgroup_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { order_cap: 10_000, subgroup_cap: 20_000 }
    }
}

#[derive(Default)]
pub(crate) struct Cache {
    pub(crate) subgroups: OnceLock<Result<Arc<Vec<Subgroup>>>>,
    pub(crate) normal_subgroups: OnceLock<Result<Arc<Vec<Subgroup>>>>,
    pub(crate) derived: OnceLock<Subgroup>,
    pub(crate) fitting: OnceLock<Subgroup>,
    pub(crate) report: OnceLock<PropertyReport>,
}

pub struct Group {
    id: u64,
    spec: GroupSpec,
    limits: Limits,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    gens: Vec<u32>,
    inverse: Vec<u32>,
    table: Option<Vec<u32>>,
    pub(crate) cache: Cache,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.spec.name)
            .field("degree", &self.spec.degree)
            .field("order", &self.order())
            .finish()
    }
}

/// A subgroup of a specific parent [`Group`].
#[derive(Clone)]
pub struct Subgroup {
    group_id: u64,
    members: FixedBitSet,
    gens: Vec<u32>,
    order: usize,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group_id == other.group_id && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.group_id.hash(state);
        self.members.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens {:?})", self.order, self.gens)
    }
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Indices of a generating set inside the parent.
    pub fn generator_indices(&self) -> &[u32] {
        &self.gens
    }

    pub fn contains(&self, elem: u32) -> bool {
        self.members.contains(elem as usize)
    }

    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.ones().map(|i| i as u32)
    }

    pub fn member_set(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.group_id == other.group_id && self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Canonical order: by size, then lexicographically by member indices.
    pub fn canonical_cmp(&self, other: &Subgroup) -> std::cmp::Ordering {
        self.order.cmp(&other.order).then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

/// Enumerates `⟨spec.generators⟩` with default limits.
pub fn generate(spec: &GroupSpec) -> Result<Group> {
    Group::generate(spec, Limits::default())
}

impl Group {
    pub fn generate(spec: &GroupSpec, limits: Limits) -> Result<Group> {
        let degree = spec.degree;
        let identity = Permutation::identity(degree);
        let gens: Vec<&Permutation> = spec.generators.iter().filter(|g| !g.is_identity()).collect();
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.then_unchecked(g);
                if !seen.contains(&y) {
                    if seen.len() >= limits.order_cap {
                        return Err(Error::OrderCap { cap: limits.order_cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(Self::from_sorted_elements(spec.clone(), limits, elements))
    }

    fn from_sorted_elements(spec: GroupSpec, limits: Limits, elements: Vec<Permutation>) -> Group {
        let n = elements.len();
        let index: HashMap<Permutation, u32> =
            elements.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let mut gens: Vec<u32> = Vec::new();
        for i in spec.generators.iter().map(|g| index[g]) {
            if i != Self::IDENTITY && !gens.contains(&i) {
                gens.push(i);
            }
        }
        let table = (n <= TABLE_MAX_ORDER).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.then_unchecked(b)]);
                }
            }
            t
        });
        Group {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            spec,
            limits,
            elements,
            index,
            gens,
            inverse,
            table,
            cache: Cache::default(),
        }
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn degree(&self) -> usize {
        self.spec.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Non-identity generator indices (deduplicated).
    pub fn generator_indices(&self) -> &[u32] {
        &self.gens
    }

    pub const IDENTITY: u32 = 0;

    /// Index of `a` followed by `b`.
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => self.index[&self.elements[a as usize].then_unchecked(&self.elements[b as usize])],
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `x⁻¹ y⁻¹ x y`.
    #[inline]
    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        self.mul(self.inv(yx), xy)
    }

    pub fn element_order(&self, x: u32) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != Self::IDENTITY {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn whole(&self) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert_range(..);
        Subgroup { group_id: self.id, members, gens: self.gens.clone(), order: self.order() }
    }

    pub fn trivial(&self) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert(0);
        Subgroup { group_id: self.id, members, gens: Vec::new(), order: 1 }
    }

    pub fn is_whole(&self, h: &Subgroup) -> bool {
        h.group_id == self.id && h.order == self.order()
    }

    pub fn owns(&self, h: &Subgroup) -> Result<()> {
        if h.group_id == self.id { Ok(()) } else { Err(Error::ParentMismatch) }
    }

    /// `⟨gens⟩` for permutations that must already lie in the group.
    pub fn subgroup_from(&self, gens: &[Permutation]) -> Result<Subgroup> {
        let idx = gens
            .iter()
            .map(|g| self.index_of(g).ok_or_else(|| Error::NotAMember(g.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.closure(&idx))
    }

    /// `⟨gens⟩` for element indices.
    pub fn closure(&self, gens: &[u32]) -> Subgroup {
        self.closure_with(&self.trivial(), gens)
    }

    /// `⟨H, extra⟩`.
    pub fn closure_with(&self, h: &Subgroup, extra: &[u32]) -> Subgroup {
        debug_assert_eq!(h.group_id, self.id);
        let fresh: Vec<u32> = extra.iter().copied().filter(|&x| !h.contains(x)).collect();
        if fresh.is_empty() {
            return h.clone();
        }
        let mut gens = h.gens.clone();
        for &x in &fresh {
            if !gens.contains(&x) {
                gens.push(x);
            }
        }
        let mut members = h.members.clone();
        let mut queue: Vec<u32> = Vec::new();
        // H is closed under its own generators; only the new ones can leave it.
        for x in h.members.ones() {
            for &g in &fresh {
                let y = self.mul(x as u32, g);
                if !members.put(y as usize) {
                    queue.push(y);
                }
            }
        }
        while let Some(x) = queue.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !members.put(y as usize) {
                    queue.push(y);
                }
            }
        }
        let order = members.count_ones(..);
        Subgroup { group_id: self.id, members, gens, order }
    }

    /// Wraps a member set already known to be a subgroup, choosing a small
    /// generating set greedily (smallest index first).
    pub(crate) fn subgroup_of_members(&self, members: FixedBitSet) -> Subgroup {
        let target = members.count_ones(..);
        let mut current = self.trivial();
        for x in members.ones() {
            if current.order == target {
                break;
            }
            if !current.contains(x as u32) {
                current = self.closure_with(&current, &[x as u32]);
            }
        }
        debug_assert_eq!(current.members, members);
        current
    }

    pub fn intersection(&self, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
        self.owns(h)?;
        self.owns(k)?;
        let mut m = h.members.clone();
        m.intersect_with(&k.members);
        Ok(self.subgroup_of_members(m))
    }

    /// `g⁻¹ H g`.
    pub fn conjugate(&self, h: &Subgroup, g: u32) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        for x in h.members.ones() {
            members.insert(self.conj(x as u32, g) as usize);
        }
        let gens = h.gens.iter().map(|&x| self.conj(x, g)).collect();
        Subgroup { group_id: self.id, members, gens, order: h.order }
    }

    pub fn permutations_of(&self, h: &Subgroup) -> Vec<Permutation> {
        h.gens.iter().map(|&i| self.elements[i as usize].clone()).collect()
    }

    /// Re-enumerates a subgroup as a standalone group on the same points.
    pub fn promote(&self, h: &Subgroup, name: impl Into<String>) -> Result<Group> {
        self.owns(h)?;
        let spec = GroupSpec::new(name, self.degree(), self.permutations_of(h))?;
        let elements: Vec<Permutation> = h.members.ones().map(|i| self.elements[i].clone()).collect();
        // Member indices ascend, so the permutations are already sorted.
        Ok(Self::from_sorted_elements(spec, self.limits, elements))
    }

    /// Maps a subgroup of `inner` (a group whose elements all lie in `self`)
    /// back into `self`.
    pub fn lift(&self, inner: &Group, s: &Subgroup) -> Result<Subgroup> {
        inner.owns(s)?;
        let mut members = FixedBitSet::with_capacity(self.order());
        for i in s.members.ones() {
            let p = &inner.elements[i];
            let j = self.index_of(p).ok_or_else(|| Error::NotAMember(p.to_string()))?;
            members.insert(j as usize);
        }
        let gens = s.gens.iter().map(|&i| self.index[&inner.elements[i as usize]]).collect();
        Ok(Subgroup { group_id: self.id, members, gens, order: s.order })
    }

    /// Subgroup from an arbitrary member predicate; caller guarantees closure.
    pub(crate) fn subgroup_where(&self, pred: impl Fn(u32) -> bool) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        for i in 0..self.order() as u32 {
            if pred(i) {
                members.insert(i as usize);
            }
        }
        self.subgroup_of_members(members)
    }

    /// Checks closure under multiplication and inverse over every element pair.
    pub fn is_closed(&self, h: &Subgroup) -> bool {
        h.contains(Self::IDENTITY)
            && h.members().all(|x| h.contains(self.inv(x)) && h.members().all(|y| h.contains(self.mul(x, y))))
    }
}
