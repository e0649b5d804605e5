//! Characteristic subgroups, series, Sylow subgroups, quotients and the
//! structural predicates reported by [`PropertyReport`].

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::perm::{p_part, prime_divisors, Permutation};
use crate::spec::GroupSpec;

/// Structural predicates of one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub order: usize,
    pub primes: Vec<usize>,
    pub abelian: bool,
    pub cyclic: bool,
    pub nilpotent: bool,
    pub soluble: bool,
    pub supersoluble: bool,
    pub metanilpotent: bool,
    pub sylow_tower_supersoluble: bool,
    /// Membership in the formation of groups whose Sylow subgroups are all abelian.
    pub abelian_sylows: bool,
}

impl PropertyReport {
    /// Implications every correct report satisfies; returns the first broken one.
    pub fn implication_violation(&self) -> Option<&'static str> {
        let chain = [
            (self.cyclic, self.abelian, "cyclic => abelian"),
            (self.abelian, self.nilpotent, "abelian => nilpotent"),
            (self.nilpotent, self.supersoluble, "nilpotent => supersoluble"),
            (self.supersoluble, self.soluble, "supersoluble => soluble"),
            (self.supersoluble, self.sylow_tower_supersoluble, "supersoluble => sylow tower"),
            (self.nilpotent, self.metanilpotent, "nilpotent => metanilpotent"),
            (self.abelian, self.abelian_sylows, "abelian => abelian sylows"),
        ];
        chain.into_iter().find(|(a, b, _)| *a && !*b).map(|(_, _, name)| name)
    }
}

/// `G/N` realized as the action of `G` on the right cosets of `N`.
#[derive(Debug)]
pub struct QuotientGroup {
    pub group: Group,
    /// Parent element index to quotient element index.
    pub projection: Vec<u32>,
}

impl QuotientGroup {
    pub fn project(&self, x: u32) -> u32 {
        self.projection[x as usize]
    }

    /// `HN/N` as a subgroup of the quotient.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<u32> = h.generator_indices().iter().map(|&x| self.project(x)).collect();
        self.group.closure(&gens)
    }
}

/// Group classes used for residuals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Formation {
    Abelian,
    Nilpotent,
    AbelianSylows,
}

impl Formation {
    pub fn contains(self, g: &Group) -> bool {
        match self {
            Formation::Abelian => g.is_abelian(),
            Formation::Nilpotent => g.is_nilpotent(),
            Formation::AbelianSylows => g.has_abelian_sylows(),
        }
    }
}

impl Group {
    pub fn primes(&self) -> Vec<usize> {
        prime_divisors(self.order())
    }

    fn is_p_element(&self, x: u32, p: usize) -> bool {
        let o = self.element_order(x);
        p_part(o, p) == o
    }

    /// `[H, K]`: normal closure in `⟨H, K⟩` of the generator commutators.
    pub fn commutator_subgroup(&self, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
        let ambient = self.join(h, k)?;
        let mut comms = Vec::new();
        for &x in h.generator_indices() {
            for &y in k.generator_indices() {
                comms.push(self.commutator(x, y));
            }
        }
        Ok(self.normal_closure_in(&self.closure(&comms), &ambient))
    }

    /// `G′` (cached).
    pub fn derived_subgroup(&self) -> Subgroup {
        self.cache.derived.get_or_init(|| self.derived_subgroup_of(&self.whole())).clone()
    }

    /// `H′` for a subgroup `H`.
    pub fn derived_subgroup_of(&self, h: &Subgroup) -> Subgroup {
        self.commutator_subgroup(h, h).expect("same parent")
    }

    /// `G ⊇ G′ ⊇ G″ ⊇ …` up to the first repeat.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let next = self.derived_subgroup_of(series.last().unwrap());
            if next == *series.last().unwrap() {
                return series;
            }
            series.push(next);
        }
    }

    /// `G ⊇ [G,G] ⊇ [G,[G,G]] ⊇ …` up to the first repeat.
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let whole = self.whole();
        let mut series = vec![whole.clone()];
        loop {
            let next = self.commutator_subgroup(&whole, series.last().unwrap()).expect("same parent");
            if next == *series.last().unwrap() {
                return series;
            }
            series.push(next);
        }
    }

    /// Elements of `ambient` that normalize `h`.
    pub fn normalizer_in(&self, h: &Subgroup, ambient: &Subgroup) -> Subgroup {
        let gens = h.generator_indices();
        self.subgroup_where(|g| ambient.contains(g) && gens.iter().all(|&x| h.contains(self.conj(x, g))))
    }

    pub fn sylow(&self, p: usize) -> Subgroup {
        self.sylow_in(p, &self.whole())
    }

    /// A Sylow `p`-subgroup of `ambient`, grown one step at a time inside
    /// the current normalizer using the smallest-index `p`-element not yet
    /// covered. Trivial when `p` does not divide `|ambient|`.
    pub fn sylow_in(&self, p: usize, ambient: &Subgroup) -> Subgroup {
        let target = p_part(ambient.order(), p);
        let mut sylow = self.trivial();
        while sylow.order() < target {
            let norm = self.normalizer_in(&sylow, ambient);
            let x = norm
                .members()
                .find(|&x| !sylow.contains(x) && self.is_p_element(x, p))
                .expect("a proper p-subgroup has a p-element in its normalizer outside it");
            sylow = self.closure_with(&sylow, &[x]);
        }
        sylow
    }

    /// `O_p(G)`: the core of a Sylow `p`-subgroup, computed by intersecting
    /// with generator conjugates until stable.
    pub fn o_p(&self, p: usize) -> Subgroup {
        let mut core = self.sylow(p);
        loop {
            let mut members = core.member_set().clone();
            for &g in self.generator_indices() {
                members.intersect_with(self.conjugate(&core, g).member_set());
            }
            if members == *core.member_set() {
                return core;
            }
            core = self.subgroup_of_members(members);
        }
    }

    /// `F(G)`, the product of all `O_p(G)` (cached).
    pub fn fitting(&self) -> Subgroup {
        self.cache
            .fitting
            .get_or_init(|| {
                self.primes().into_iter().fold(self.trivial(), |acc, p| self.join(&acc, &self.o_p(p)).expect("same parent"))
            })
            .clone()
    }

    pub fn quotient(&self, n: &Subgroup) -> Result<QuotientGroup> {
        self.owns(n)?;
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let size = self.order();
        let mut coset_of = vec![u32::MAX; size];
        let mut reps = Vec::new();
        for x in 0..size as u32 {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for y in n.members() {
                coset_of[self.mul(y, x) as usize] = c;
            }
        }
        let action = |g: u32| {
            let images = reps.iter().map(|&r| coset_of[self.mul(r, g) as usize]).collect();
            Permutation::from_images_unchecked(images)
        };
        let degree = reps.len();
        let gens = self.generator_indices().iter().map(|&g| action(g)).collect();
        let name = format!("{}/N{}", self.name(), n.order());
        let group = Group::generate(&GroupSpec::new(name, degree, gens)?, self.limits())?;
        let projection = (0..size as u32)
            .map(|x| group.index_of(&action(x)).expect("coset action image lies in the quotient"))
            .collect();
        Ok(QuotientGroup { group, projection })
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generator_indices();
        g.iter().all(|&x| g.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
    }

    pub(crate) fn subgroup_is_abelian(&self, h: &Subgroup) -> bool {
        let g = h.generator_indices();
        g.iter().all(|&x| g.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.order() == 1 || (0..self.order() as u32).any(|x| self.element_order(x) == self.order())
    }

    /// Every Sylow subgroup is normal.
    pub fn is_nilpotent(&self) -> bool {
        self.primes().into_iter().all(|p| self.is_normal(&self.sylow(p)))
    }

    /// Lower central series reaches the trivial subgroup.
    pub fn is_nilpotent_by_central_series(&self) -> bool {
        self.lower_central_series().last().unwrap().is_trivial()
    }

    pub fn is_soluble(&self) -> bool {
        self.derived_series().last().unwrap().is_trivial()
    }

    /// Recursive test: trivial, or some normal subgroup of prime order has a
    /// supersoluble quotient. Supersolubility passes to quotients, so the
    /// first prime-order normal subgroup found decides the question.
    pub fn is_supersoluble(&self) -> bool {
        if self.order() == 1 {
            return true;
        }
        let gens = self.generator_indices();
        for x in 1..self.order() as u32 {
            let o = self.element_order(x);
            if prime_divisors(o) != [o] {
                continue;
            }
            let c = self.closure(&[x]);
            if gens.iter().all(|&g| c.contains(self.conj(x, g))) {
                return self.quotient(&c).expect("normal").group.is_supersoluble();
            }
        }
        false
    }

    /// Every maximal subgroup has prime index.
    pub fn is_supersoluble_by_maximal_subgroups(&self) -> Result<bool> {
        Ok(self.maximal_subgroups()?.iter().all(|m| crate::perm::is_prime(self.order() / m.order())))
    }

    /// `G/F(G)` is nilpotent.
    pub fn is_metanilpotent(&self) -> bool {
        self.quotient(&self.fitting()).expect("F(G) is normal").group.is_nilpotent()
    }

    /// The Sylow subgroup for the largest prime is normal, and the quotient by
    /// it has the same property.
    pub fn has_sylow_tower(&self) -> bool {
        let Some(&p) = self.primes().last() else {
            return true;
        };
        let s = self.sylow(p);
        self.is_normal(&s) && self.quotient(&s).expect("normal").group.has_sylow_tower()
    }

    pub fn has_abelian_sylows(&self) -> bool {
        self.primes().into_iter().all(|p| self.subgroup_is_abelian(&self.sylow(p)))
    }

    /// All predicates (cached).
    pub fn classify(&self) -> PropertyReport {
        self.cache
            .report
            .get_or_init(|| PropertyReport {
                order: self.order(),
                primes: self.primes(),
                abelian: self.is_abelian(),
                cyclic: self.is_cyclic(),
                nilpotent: self.is_nilpotent(),
                soluble: self.is_soluble(),
                supersoluble: self.is_supersoluble(),
                metanilpotent: self.is_metanilpotent(),
                sylow_tower_supersoluble: self.has_sylow_tower(),
                abelian_sylows: self.has_abelian_sylows(),
            })
            .clone()
    }

    /// Classifies a subgroup as a group in its own right.
    pub fn classify_subgroup(&self, h: &Subgroup) -> Result<PropertyReport> {
        Ok(self.promote(h, format!("{}<{}>", self.name(), h.order()))?.classify())
    }

    /// Intersection of every normal `N` with `G/N` in the class, verified
    /// afterwards to itself have a quotient in the class.
    pub fn formation_residual(&self, class: Formation) -> Result<Subgroup> {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert_range(..);
        for n in self.normal_subgroups()?.iter() {
            if class.contains(&self.quotient(n)?.group) {
                members.intersect_with(n.member_set());
            }
        }
        let residual = self.subgroup_of_members(members);
        if !class.contains(&self.quotient(&residual)?.group) {
            return Err(Error::Verification(format!("{class:?} is not closed under the residual intersection")));
        }
        Ok(residual)
    }

    /// `|H : H′|`.
    pub fn abelianization_index(&self, h: &Subgroup) -> usize {
        h.order() / self.derived_subgroup_of(h).order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate;
    use crate::perm::Permutation;

    fn grp(degree: usize, gens: &[&str]) -> Group {
        generate(&GroupSpec::from_cycles("t", degree, gens).unwrap()).unwrap()
    }

    fn sub(g: &Group, gens: &[&str]) -> Subgroup {
        let ps: Vec<Permutation> = gens.iter().map(|s| Permutation::parse(s, g.degree()).unwrap()).collect();
        g.subgroup_from(&ps).unwrap()
    }

    fn s3() -> Group {
        grp(3, &["(1 2 3)", "(1 2)"])
    }
    fn s4() -> Group {
        grp(4, &["(1 2 3 4)", "(1 2)"])
    }
    fn d8() -> Group {
        grp(4, &["(1 2 3 4)", "(1 3)"])
    }
    fn a4() -> Group {
        grp(4, &["(1 2 3)", "(2 3 4)"])
    }

    fn orders(v: &[Subgroup]) -> Vec<usize> {
        v.iter().map(|h| h.order()).collect()
    }

    #[test]
    fn derived_subgroups() {
        let c6 = grp(5, &["(1 2)(3 4 5)"]);
        assert!(c6.derived_subgroup().is_trivial());
        assert_eq!(s3().derived_subgroup().order(), 3);
        let d = d8();
        let z = d.derived_subgroup();
        assert_eq!(z.order(), 2);
        assert!(z.contains(d.index_of(&Permutation::parse("(1 3)(2 4)", 4).unwrap()).unwrap()));
    }

    #[test]
    fn series() {
        let c6 = grp(5, &["(1 2)(3 4 5)"]);
        assert_eq!(orders(&c6.derived_series()), vec![6, 1]);
        assert_eq!(orders(&s4().derived_series()), vec![24, 12, 4, 1]);
        assert_eq!(orders(&s3().lower_central_series()), vec![6, 3]);
        assert_eq!(orders(&d8().lower_central_series()), vec![8, 2, 1]);
    }

    #[test]
    fn sylow_subgroups() {
        let g = s4();
        assert_eq!(g.sylow(2).order(), 8);
        assert_eq!(g.sylow(3).order(), 3);
        assert!(g.sylow(5).is_trivial());
        let s = s3();
        let p3 = s.sylow(3);
        assert_eq!(p3.order(), 3);
        assert!(s.is_normal(&p3));
    }

    #[test]
    fn o_p_and_fitting() {
        let d = d8();
        assert_eq!(d.o_p(2), d.whole());
        assert_eq!(s4().o_p(2).order(), 4);
        assert!(s3().o_p(2).is_trivial());
        assert_eq!(d.fitting(), d.whole());
        assert_eq!(s3().fitting().order(), 3);
        assert_eq!(s4().fitting().order(), 4);
    }

    #[test]
    fn quotients() {
        let g = s4();
        assert_eq!(g.quotient(&g.whole()).unwrap().group.order(), 1);
        assert_eq!(g.quotient(&g.trivial()).unwrap().group.order(), 24);
        let v = g.o_p(2);
        let q = g.quotient(&v).unwrap();
        assert_eq!(q.group.order(), 6);
        assert!(!q.group.is_abelian());
        assert_eq!(q.group.degree(), 6);
        assert_eq!(g.quotient(&g.sylow(3)).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn projection_is_a_homomorphism_with_the_right_kernel() {
        let g = s4();
        let v = g.o_p(2);
        let q = g.quotient(&v).unwrap();
        for x in 0..24 {
            for y in 0..24 {
                assert_eq!(q.project(g.mul(x, y)), q.group.mul(q.project(x), q.project(y)));
            }
            assert_eq!(q.project(x) == Group::IDENTITY, v.contains(x));
        }
    }

    #[test]
    fn classification() {
        let r = d8().classify();
        assert!(!r.abelian && r.nilpotent && r.supersoluble && !r.abelian_sylows);
        let r = a4().classify();
        assert!(r.soluble && !r.supersoluble && !r.sylow_tower_supersoluble);
        assert!(r.metanilpotent);
        let r = s4().classify();
        assert!(r.soluble && !r.supersoluble && !r.metanilpotent);
        let r = s3().classify();
        assert!(r.supersoluble && !r.nilpotent && r.metanilpotent && r.abelian_sylows);
        let a5 = grp(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        let r = a5.classify();
        assert_eq!(r.order, 60);
        assert!(!r.soluble && !r.supersoluble);
        assert!(grp(6, &["(1 2 3 4 5 6)"]).classify().cyclic);
        assert!(!grp(4, &["(1 2)", "(3 4)"]).classify().cyclic);
    }

    #[test]
    fn residuals() {
        let g = s4();
        assert_eq!(g.formation_residual(Formation::Abelian).unwrap(), g.derived_subgroup());
        let ra = g.formation_residual(Formation::AbelianSylows).unwrap();
        assert_eq!(ra, g.o_p(2));
        assert_eq!(g.formation_residual(Formation::Nilpotent).unwrap().order(), 12);
        let s = s3();
        assert!(s.formation_residual(Formation::AbelianSylows).unwrap().is_trivial());
    }

    #[test]
    fn abelianization_indices() {
        let c6 = grp(5, &["(1 2)(3 4 5)"]);
        assert_eq!(c6.abelianization_index(&c6.whole()), 6);
        let s = s3();
        assert_eq!(s.abelianization_index(&s.whole()), 2);
        let d = d8();
        assert_eq!(d.abelianization_index(&d.whole()), 4);
        let g = s4();
        assert_eq!(g.abelianization_index(&sub(&g, &["(1 2 3)", "(1 2)"])), 2);
    }
}
