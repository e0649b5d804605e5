//! Subgroup lattice: joins, set products, full and normal subgroup
//! enumeration, normal closures and subnormality.

use std::collections::HashSet;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};

/// Outcome of the descending normal-closure series `G = G₀ ⊵ G₁ ⊵ …` with
/// `Gᵢ₊₁ = H^{Gᵢ}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubnormalVerdict {
    pub is_subnormal: bool,
    /// Series length minus one, when the series reaches `H`.
    pub defect: Option<usize>,
    /// Orders of `G₀, G₁, …` up to the fixpoint.
    pub descending_series: Vec<usize>,
}

impl Group {
    /// `⟨H, K⟩`.
    pub fn join(&self, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
        self.owns(h)?;
        self.owns(k)?;
        let (big, small) = if h.order() >= k.order() { (h, k) } else { (k, h) };
        Ok(self.closure_with(big, small.generator_indices()))
    }

    /// `|{hk : h ∈ H, k ∈ K}|`.
    pub fn product_set_size(&self, h: &Subgroup, k: &Subgroup) -> Result<usize> {
        self.owns(h)?;
        self.owns(k)?;
        let mut seen = FixedBitSet::with_capacity(self.order());
        for x in h.members() {
            for y in k.members() {
                seen.insert(self.mul(x, y) as usize);
            }
        }
        Ok(seen.count_ones(..))
    }

    /// One subgroup per distinct cyclic subgroup, in canonical order.
    pub fn cyclic_subgroups(&self) -> Vec<Subgroup> {
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut out = Vec::new();
        for x in 1..self.order() as u32 {
            let c = self.closure(&[x]);
            if seen.insert(c.member_set().clone()) {
                out.push(c);
            }
        }
        out.sort_by(|a, b| a.canonical_cmp(b));
        out
    }

    /// Every subgroup, in canonical order (cached).
    ///
    /// Starts from the cyclic subgroups and joins each newly found subgroup
    /// with every cyclic subgroup until nothing new appears. Every subgroup is
    /// the join of the cyclic subgroups it contains, so the fixpoint is the
    /// whole lattice.
    pub fn all_subgroups(&self) -> Result<Arc<Vec<Subgroup>>> {
        self.cache.subgroups.get_or_init(|| self.enumerate_subgroups().map(Arc::new)).clone()
    }

    fn enumerate_subgroups(&self) -> Result<Vec<Subgroup>> {
        let cap = self.limits().subgroup_cap;
        let cyclics = self.cyclic_subgroups();
        let mut known: HashSet<FixedBitSet> = HashSet::new();
        let mut all = vec![self.trivial()];
        known.insert(self.trivial().member_set().clone());
        for c in &cyclics {
            known.insert(c.member_set().clone());
            all.push(c.clone());
        }
        if all.len() > cap {
            return Err(Error::SubgroupCap { cap });
        }
        let mut frontier: Vec<Subgroup> = cyclics.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for c in &cyclics {
                    let g = c.generator_indices()[0];
                    if h.contains(g) {
                        continue;
                    }
                    let j = self.closure_with(h, &[g]);
                    if known.insert(j.member_set().clone()) {
                        all.push(j.clone());
                        next.push(j);
                        if all.len() > cap {
                            return Err(Error::SubgroupCap { cap });
                        }
                    }
                }
            }
            frontier = next;
        }
        all.sort_by(|a, b| a.canonical_cmp(b));
        Ok(all)
    }

    /// Every normal subgroup, in canonical order (cached).
    ///
    /// Normal closures of cyclic subgroups, closed under joins.
    pub fn normal_subgroups(&self) -> Result<Arc<Vec<Subgroup>>> {
        self.cache.normal_subgroups.get_or_init(|| self.enumerate_normal_subgroups().map(Arc::new)).clone()
    }

    fn enumerate_normal_subgroups(&self) -> Result<Vec<Subgroup>> {
        let cap = self.limits().subgroup_cap;
        let mut known: HashSet<FixedBitSet> = HashSet::new();
        let mut seeds = Vec::new();
        let mut covered = FixedBitSet::with_capacity(self.order());
        for x in 1..self.order() as u32 {
            // Conjugate elements have the same normal closure.
            if covered.contains(x as usize) {
                continue;
            }
            let n = self.normal_closure(&self.closure(&[x]));
            for y in 0..self.order() as u32 {
                covered.insert(self.conj(x, y) as usize);
            }
            if known.insert(n.member_set().clone()) {
                seeds.push(n);
            }
        }
        let mut all = vec![self.trivial()];
        known.insert(self.trivial().member_set().clone());
        all.extend(seeds.iter().cloned());
        let mut frontier = seeds.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for s in &seeds {
                    if s.is_subgroup_of(h) {
                        continue;
                    }
                    let j = self.closure_with(h, s.generator_indices());
                    if known.insert(j.member_set().clone()) {
                        all.push(j.clone());
                        next.push(j);
                        if all.len() > cap {
                            return Err(Error::SubgroupCap { cap });
                        }
                    }
                }
            }
            frontier = next;
        }
        all.sort_by(|a, b| a.canonical_cmp(b));
        Ok(all)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.is_normal_in(h, &self.whole())
    }

    /// Whether `ambient` normalizes `h`, tested on generators of both.
    pub fn is_normal_in(&self, h: &Subgroup, ambient: &Subgroup) -> bool {
        ambient
            .generator_indices()
            .iter()
            .all(|&g| h.generator_indices().iter().all(|&x| h.contains(self.conj(x, g))))
    }

    pub fn normal_closure(&self, h: &Subgroup) -> Subgroup {
        self.normal_closure_in(h, &self.whole())
    }

    /// Smallest subgroup containing `h` and normalized by `ambient`.
    pub fn normal_closure_in(&self, h: &Subgroup, ambient: &Subgroup) -> Subgroup {
        let mut n = h.clone();
        let mut done = 0;
        while done < n.generator_indices().len() {
            let x = n.generator_indices()[done];
            done += 1;
            for &g in ambient.generator_indices() {
                let c = self.conj(x, g);
                if !n.contains(c) {
                    n = self.closure_with(&n, &[c]);
                }
            }
        }
        n
    }

    pub fn is_subnormal(&self, h: &Subgroup) -> SubnormalVerdict {
        let mut current = self.whole();
        let mut series = vec![current.order()];
        loop {
            let next = self.normal_closure_in(h, &current);
            if next == current {
                break;
            }
            series.push(next.order());
            current = next;
        }
        let is_subnormal = current == *h;
        SubnormalVerdict {
            is_subnormal,
            defect: is_subnormal.then(|| series.len() - 1),
            descending_series: series,
        }
    }

    /// Subgroups with no proper subgroup strictly between them and `G`.
    pub fn maximal_subgroups(&self) -> Result<Vec<Subgroup>> {
        let all = self.all_subgroups()?;
        let proper: Vec<&Subgroup> = all.iter().filter(|h| !self.is_whole(h)).collect();
        Ok(proper
            .iter()
            .filter(|h| !proper.iter().any(|k| k.order() > h.order() && h.is_subgroup_of(k)))
            .map(|h| (*h).clone())
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate;
    use crate::perm::Permutation;
    use crate::spec::GroupSpec;

    fn grp(degree: usize, gens: &[&str]) -> Group {
        generate(&GroupSpec::from_cycles("t", degree, gens).unwrap()).unwrap()
    }

    fn sub(g: &Group, gens: &[&str]) -> Subgroup {
        let ps: Vec<Permutation> = gens.iter().map(|s| Permutation::parse(s, g.degree()).unwrap()).collect();
        g.subgroup_from(&ps).unwrap()
    }

    fn d8() -> Group {
        grp(4, &["(1 2 3 4)", "(1 3)"])
    }

    fn s3() -> Group {
        grp(3, &["(1 2 3)", "(1 2)"])
    }

    fn s4() -> Group {
        grp(4, &["(1 2 3 4)", "(1 2)"])
    }

    #[test]
    fn joins() {
        let g = d8();
        let h = sub(&g, &["(1 3)"]);
        assert_eq!(g.join(&h, &g.trivial()).unwrap(), h);
        assert_eq!(g.join(&h, &h).unwrap(), h);
        let k = sub(&g, &["(1 2)(3 4)"]);
        assert_eq!(g.join(&h, &k).unwrap().order(), 8);
    }

    #[test]
    fn set_products() {
        let g = d8();
        let h = sub(&g, &["(1 3)"]);
        let k = sub(&g, &["(1 2)(3 4)"]);
        assert_eq!(g.product_set_size(&h, &k).unwrap(), 4);
        assert_eq!(g.product_set_size(&h, &h).unwrap(), 2);
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(s3().all_subgroups().unwrap().len(), 6);
        assert_eq!(grp(5, &["(1 2 3 4 5)"]).all_subgroups().unwrap().len(), 2);
        assert_eq!(d8().all_subgroups().unwrap().len(), 10);
        assert_eq!(s4().all_subgroups().unwrap().len(), 30);
    }

    #[test]
    fn subgroup_cap_is_an_error() {
        let spec = GroupSpec::from_cycles("s4", 4, &["(1 2 3 4)", "(1 2)"]).unwrap();
        let g = Group::generate(&spec, crate::group::Limits { subgroup_cap: 10, ..Default::default() }).unwrap();
        assert_eq!(g.all_subgroups().unwrap_err(), Error::SubgroupCap { cap: 10 });
    }

    #[test]
    fn normal_subgroup_lists() {
        let orders = |g: &Group| g.normal_subgroups().unwrap().iter().map(|h| h.order()).collect::<Vec<_>>();
        assert_eq!(orders(&s3()), vec![1, 3, 6]);
        assert_eq!(orders(&s4()), vec![1, 4, 12, 24]);
        let c12 = grp(7, &["(1 2 3 4)(5 6 7)"]);
        assert_eq!(*c12.normal_subgroups().unwrap(), *c12.all_subgroups().unwrap());
    }

    #[test]
    fn normality() {
        let g = s3();
        assert!(g.is_normal(&g.trivial()));
        assert!(g.is_normal(&sub(&g, &["(1 2 3)"])));
        assert!(!g.is_normal(&sub(&g, &["(1 2)"])));
    }

    #[test]
    fn normal_closures() {
        let g = s3();
        let c3 = sub(&g, &["(1 2 3)"]);
        assert_eq!(g.normal_closure(&c3), c3);
        assert_eq!(g.normal_closure(&sub(&g, &["(1 2)"])).order(), 6);
    }

    #[test]
    fn subnormality() {
        let g = d8();
        for h in g.all_subgroups().unwrap().iter() {
            assert!(g.is_subnormal(h).is_subnormal);
        }
        let corner = sub(&g, &["(1 3)"]);
        let v = g.is_subnormal(&corner);
        assert_eq!(v.defect, Some(2));
        assert_eq!(v.descending_series, vec![8, 4, 2]);

        let s = s3();
        let v = s.is_subnormal(&sub(&s, &["(1 2)"]));
        assert!(!v.is_subnormal);
        assert_eq!(v.defect, None);
        assert_eq!(v.descending_series, vec![6]);
        assert_eq!(s.is_subnormal(&s.whole()).defect, Some(0));
        assert_eq!(s.is_subnormal(&sub(&s, &["(1 2 3)"])).defect, Some(1));
    }

    #[test]
    fn maximal_subgroups_of_s4() {
        let mut idx: Vec<usize> = s4().maximal_subgroups().unwrap().iter().map(|h| 24 / h.order()).collect();
        idx.sort();
        // A4, three D8, four S3
        assert_eq!(idx, vec![2, 3, 3, 3, 4, 4, 4, 4]);
    }
}
