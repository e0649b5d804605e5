//! Deterministic group constructors and the verification corpus.
//!
//! Nothing here is imported from external tables: every group is built from
//! elementary permutations and then checked against the properties it is
//! supposed to have.

use std::collections::HashSet;

use log::warn;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{Group, Limits, Subgroup};
use crate::perm::{is_prime, Permutation};
use crate::spec::GroupSpec;

/// Largest point count any constructor will produce.
pub const DEGREE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub key: String,
    pub params: Vec<usize>,
    pub spec: GroupSpec,
    pub expected_order: usize,
}

fn check_degree(degree: usize) -> Result<()> {
    if degree > DEGREE_CAP {
        return Err(Error::DegreeCap { degree, cap: DEGREE_CAP });
    }
    Ok(())
}

fn cycle(points: impl IntoIterator<Item = usize>, degree: usize) -> Permutation {
    let pts: Vec<usize> = points.into_iter().collect();
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (k, &p) in pts.iter().enumerate() {
        images[p] = pts[(k + 1) % pts.len()] as u32;
    }
    Permutation::from_images_unchecked(images)
}

/// `C_n` as an `n`-cycle on `n` points.
pub fn make_cyclic(n: usize) -> Result<GroupSpec> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic group needs n >= 1".into()));
    }
    check_degree(n)?;
    let gens = if n == 1 { vec![] } else { vec![cycle(0..n, n)] };
    GroupSpec::new(format!("cyclic({n})"), n, gens)
}

/// Dihedral group of the given order `2n`: rotations and reflections of an
/// `n`-gon. For order 4 the polygon action is not faithful, so the Klein
/// four-group is realized on 4 points instead.
pub fn make_dihedral(order: usize) -> Result<GroupSpec> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("dihedral order must be even and >= 4, got {order}")));
    }
    let n = order / 2;
    let name = format!("dihedral({order})");
    if n == 2 {
        return GroupSpec::from_cycles(name, 4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
    }
    check_degree(n)?;
    // i -> -i (mod n), fixing point 1
    let reflection = Permutation::from_images_unchecked((0..n).map(|i| ((n - i) % n) as u32).collect());
    GroupSpec::new(name, n, vec![cycle(0..n, n), reflection])
}

pub fn make_symmetric(n: usize) -> Result<GroupSpec> {
    if n == 0 {
        return Err(Error::InvalidParameter("symmetric group needs n >= 1".into()));
    }
    check_degree(n)?;
    let gens = match n {
        1 => vec![],
        2 => vec![cycle(0..2, 2)],
        _ => vec![cycle(0..n, n), cycle(0..2, n)],
    };
    GroupSpec::new(format!("symmetric({n})"), n, gens)
}

pub fn make_alternating(n: usize) -> Result<GroupSpec> {
    if n == 0 {
        return Err(Error::InvalidParameter("alternating group needs n >= 1".into()));
    }
    check_degree(n)?;
    let gens = match n {
        1 | 2 => vec![],
        3 => vec![cycle(0..3, 3)],
        _ if n % 2 == 1 => vec![cycle(0..3, n), cycle(0..n, n)],
        _ => vec![cycle(0..3, n), cycle(1..n, n)],
    };
    GroupSpec::new(format!("alternating({n})"), n, gens)
}

/// `G × H` acting on disjoint point sets: `G` on the first points, `H` after.
pub fn make_direct_product(g: &GroupSpec, h: &GroupSpec) -> Result<GroupSpec> {
    let degree = g.degree + h.degree;
    check_degree(degree)?;
    let mut gens: Vec<Permutation> = g.generators.iter().map(|p| p.shifted(0, degree)).collect();
    gens.extend(h.generators.iter().map(|p| p.shifted(g.degree, degree)));
    GroupSpec::new(format!("{}*{}", g.name, h.name), degree, gens)
}

/// `S₃ ≀ C₂` in its imprimitive action on two blocks `{1,2,3}`, `{4,5,6}`.
pub fn make_s3_wr_c2() -> GroupSpec {
    GroupSpec::from_cycles("s3wrc2", 6, &["(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)", "(1 4)(2 5)(3 6)"])
        .expect("static generators")
}

/// The base `S₃ × S₃` of [`make_s3_wr_c2`]: the block-preserving subgroup.
pub fn s3_wr_c2_base(g: &Group) -> Result<Subgroup> {
    let gens = ["(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"]
        .iter()
        .map(|s| Permutation::parse(s, g.degree()).map_err(Error::from))
        .collect::<Result<Vec<_>>>()?;
    g.subgroup_from(&gens)
}

/// Extraspecial group of order `p³` and exponent `p`, as the unitriangular
/// affine maps `(x, y) ↦ (x + a, y + b·x + c)` of `𝔽_p²`.
pub fn make_heisenberg(p: usize) -> Result<GroupSpec> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidParameter(format!("heisenberg needs an odd prime, got {p}")));
    }
    let degree = p * p;
    check_degree(degree)?;
    let point = |x: usize, y: usize| (x % p) + p * (y % p);
    let map = |f: &dyn Fn(usize, usize) -> usize| {
        let mut images = vec![0u32; degree];
        for x in 0..p {
            for y in 0..p {
                images[point(x, y)] = f(x, y) as u32;
            }
        }
        Permutation::from_images_unchecked(images)
    };
    let shift = map(&|x, y| point(x + 1, y));
    let shear = map(&|x, y| point(x, y + x));
    let spec = GroupSpec::new(format!("heisenberg({p})"), degree, vec![shift, shear])?;

    let g = Group::generate(&spec, Limits::default())?;
    if g.order() != p * p * p {
        return Err(Error::Verification(format!("heisenberg({p}) has order {}", g.order())));
    }
    if g.is_abelian() {
        return Err(Error::Verification(format!("heisenberg({p}) is abelian")));
    }
    if let Some(x) = (1..g.order() as u32).find(|&x| g.element_order(x) != p) {
        return Err(Error::Verification(format!("heisenberg({p}) has an element {} of order != p", g.element(x))));
    }
    Ok(spec)
}

/// Affine group of the plane over the field with three elements, on its
/// nine points `(x, y) ↦ 1 + x + 3y`.
pub fn make_affine_plane_f3() -> GroupSpec {
    let point = |x: usize, y: usize| (x % 3) + 3 * (y % 3);
    let map = |f: &dyn Fn(usize, usize) -> (usize, usize)| {
        let mut images = vec![0u32; 9];
        for x in 0..3 {
            for y in 0..3 {
                let (u, v) = f(x, y);
                images[point(x, y)] = point(u, v) as u32;
            }
        }
        Permutation::from_images_unchecked(images)
    };
    let gens = vec![
        map(&|x, y| (x + 1, y)),
        map(&|x, y| (x, y + 1)),
        // transvection and coordinate swap generate GL(2, 3)
        map(&|x, y| (x + y, y)),
        map(&|x, y| (y, x)),
    ];
    GroupSpec::new("agl(2,3)", 9, gens).expect("static generators")
}

/// Translations of the 3×3 affine plane extended by a Sylow 2-subgroup of
/// the affine group: order 144.
pub fn make_order_144() -> Result<GroupSpec> {
    let agl_spec = make_affine_plane_f3();
    let agl = Group::generate(&agl_spec, Limits::default())?;
    if agl.order() != 432 {
        return Err(Error::Verification(format!("affine plane group has order {}", agl.order())));
    }
    let sylow2 = agl.sylow(2);
    if sylow2.order() != 16 {
        return Err(Error::Verification(format!("Sylow 2-subgroup has order {}", sylow2.order())));
    }
    let mut gens: Vec<Permutation> = agl_spec.generators[..2].to_vec();
    gens.extend(agl.permutations_of(&sylow2));
    let spec = GroupSpec::new("order144", 9, gens)?;
    let e = Group::generate(&spec, Limits::default())?;
    if e.order() != 144 {
        return Err(Error::Verification(format!("extension has order {}", e.order())));
    }
    if !e.is_normal(&translations_of(&e)?) {
        return Err(Error::Verification("translations are not normal".into()));
    }
    Ok(spec)
}

/// The nine translations inside a group built by [`make_order_144`].
pub fn translations_of(e: &Group) -> Result<Subgroup> {
    let t = make_affine_plane_f3().generators[..2].to_vec();
    e.subgroup_from(&t)
}

/// Named family constructor, as used on the command line.
pub fn family(name: &str, param: Option<usize>) -> Result<GroupSpec> {
    let need = || param.ok_or_else(|| Error::InvalidParameter(format!("family `{name}` needs --param")));
    match name {
        "cyclic" => make_cyclic(need()?),
        "dihedral" => make_dihedral(need()?),
        "symmetric" => make_symmetric(need()?),
        "alternating" => make_alternating(need()?),
        "heisenberg" => make_heisenberg(need()?),
        "s3wrc2" | "wreath" => Ok(make_s3_wr_c2()),
        "order144" => make_order_144(),
        "agl23" => Ok(make_affine_plane_f3()),
        other => Err(Error::InvalidParameter(format!(
            "unknown family `{other}` (expected cyclic, dihedral, symmetric, alternating, heisenberg, s3wrc2, order144, agl23)"
        ))),
    }
}

/// Which families [`build_corpus`] includes, and the size limits it obeys.
#[derive(Debug, Clone)]
pub struct CorpusConfig {
    pub max_order: usize,
    /// Point cap for cyclic, dihedral, symmetric and alternating families and
    /// for direct products.
    pub max_degree: usize,
    pub cyclic: bool,
    pub dihedral: bool,
    pub symmetric: bool,
    pub alternating: bool,
    pub heisenberg: bool,
    pub wreath: bool,
    pub order144: bool,
    pub products: bool,
    pub quotients: bool,
    pub limits: Limits,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_order: 200,
            max_degree: 10,
            cyclic: true,
            dihedral: true,
            symmetric: true,
            alternating: true,
            heisenberg: true,
            wreath: true,
            order144: true,
            products: true,
            quotients: true,
            limits: Limits::default(),
        }
    }
}

impl CorpusConfig {
    /// Every family switched off.
    pub fn empty() -> Self {
        CorpusConfig {
            cyclic: false,
            dihedral: false,
            symmetric: false,
            alternating: false,
            heisenberg: false,
            wreath: false,
            order144: false,
            products: false,
            quotients: false,
            ..Default::default()
        }
    }
}

fn entry(key: String, params: Vec<usize>, spec: GroupSpec, expected_order: usize) -> CatalogEntry {
    let spec = GroupSpec { name: key.clone(), ..spec };
    CatalogEntry { key, params, spec, expected_order }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Family entries (no products or quotients) selected by `config`.
///
/// The order-72 wreath product and the order-144 extension are included
/// whenever their switches are on, regardless of `max_order`.
pub fn catalog_entries(config: &CorpusConfig) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    let d = config.max_degree.min(DEGREE_CAP);
    let fits = |order: usize| order <= config.max_order;
    if config.cyclic {
        for n in (1..=d).filter(|&n| fits(n)) {
            out.push(entry(format!("cyclic({n})"), vec![n], make_cyclic(n)?, n));
        }
    }
    if config.dihedral {
        for n in (2..=d).filter(|&n| fits(2 * n)) {
            out.push(entry(format!("dihedral({})", 2 * n), vec![2 * n], make_dihedral(2 * n)?, 2 * n));
        }
    }
    if config.symmetric {
        for n in (3..=d).filter(|&n| fits(factorial(n))) {
            out.push(entry(format!("symmetric({n})"), vec![n], make_symmetric(n)?, factorial(n)));
        }
    }
    if config.alternating {
        for n in (4..=d).filter(|&n| fits(factorial(n) / 2)) {
            out.push(entry(format!("alternating({n})"), vec![n], make_alternating(n)?, factorial(n) / 2));
        }
    }
    if config.heisenberg {
        for p in [3, 5].into_iter().filter(|&p| fits(p * p * p)) {
            out.push(entry(format!("heisenberg({p})"), vec![p], make_heisenberg(p)?, p * p * p));
        }
    }
    if config.wreath {
        out.push(entry("s3wrc2".into(), vec![], make_s3_wr_c2(), 72));
    }
    if config.order144 {
        out.push(entry("order144".into(), vec![], make_order_144()?, 144));
    }
    Ok(out)
}

/// Pairwise direct products of the small family entries (cyclic, dihedral,
/// symmetric, alternating), within the order and degree caps.
pub fn product_entries(base: &[CatalogEntry], config: &CorpusConfig) -> Result<Vec<CatalogEntry>> {
    let small: Vec<&CatalogEntry> = base
        .iter()
        .filter(|e| e.expected_order > 1)
        .filter(|e| ["cyclic(", "dihedral(", "symmetric(", "alternating("].iter().any(|f| e.key.starts_with(f)))
        .collect();
    let mut out = Vec::new();
    for (i, a) in small.iter().enumerate() {
        for b in &small[i..] {
            let order = a.expected_order * b.expected_order;
            if order > config.max_order || a.spec.degree + b.spec.degree > config.max_degree {
                continue;
            }
            let spec = make_direct_product(&a.spec, &b.spec)?;
            out.push(entry(spec.name.clone(), [a.params.clone(), b.params.clone()].concat(), spec, order));
        }
    }
    Ok(out)
}

/// Builds the corpus: family entries, direct products, then every proper
/// nontrivial quotient of those (orders within `max_order`). Entries with the
/// same degree and element set as an earlier entry are dropped; so are
/// entries that breach a cap, with a logged notice.
pub fn build_corpus(config: &CorpusConfig) -> Result<Vec<Group>> {
    let mut entries = catalog_entries(config)?;
    if config.products {
        let products = product_entries(&entries, config)?;
        entries.extend(products);
    }
    let built: Vec<Option<Group>> = entries
        .par_iter()
        .map(|e| match Group::generate(&e.spec, config.limits) {
            Ok(g) if g.order() == e.expected_order => Some(g),
            Ok(g) => panic!("catalog entry {} has order {} instead of {}", e.key, g.order(), e.expected_order),
            Err(err) => {
                warn!("skipping {}: {err}", e.key);
                None
            }
        })
        .collect();
    let mut seen: HashSet<(usize, Vec<Permutation>)> = HashSet::new();
    let mut groups: Vec<Group> = Vec::new();
    for g in built.into_iter().flatten() {
        if seen.insert((g.degree(), g.elements().to_vec())) {
            groups.push(g);
        }
    }
    if config.quotients {
        let quotients: Vec<Vec<Group>> = groups
            .par_iter()
            .map(|g| {
                let normals = match g.normal_subgroups() {
                    Ok(n) => n,
                    Err(err) => {
                        warn!("skipping quotients of {}: {err}", g.name());
                        return Vec::new();
                    }
                };
                let mut out = Vec::new();
                for (i, n) in normals.iter().enumerate() {
                    if n.is_trivial() || g.is_whole(n) || g.order() / n.order() > config.max_order {
                        continue;
                    }
                    match g.quotient(n) {
                        Ok(q) => {
                            let spec = GroupSpec { name: format!("{}/n{}", g.name(), i), ..q.group.spec().clone() };
                            match Group::generate(&spec, config.limits) {
                                Ok(qg) => out.push(qg),
                                Err(err) => warn!("skipping {}: {err}", spec.name),
                            }
                        }
                        Err(err) => warn!("skipping quotient {i} of {}: {err}", g.name()),
                    }
                }
                out
            })
            .collect();
        for q in quotients.into_iter().flatten() {
            if seen.insert((q.degree(), q.elements().to_vec())) {
                groups.push(q);
            }
        }
    }
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate;

    fn order(spec: &GroupSpec) -> usize {
        generate(spec).unwrap().order()
    }

    #[test]
    fn family_orders() {
        assert_eq!(order(&make_cyclic(1).unwrap()), 1);
        assert_eq!(order(&make_cyclic(7).unwrap()), 7);
        assert_eq!(order(&make_dihedral(4).unwrap()), 4);
        assert_eq!(order(&make_dihedral(8).unwrap()), 8);
        assert_eq!(order(&make_dihedral(14).unwrap()), 14);
        assert_eq!(order(&make_symmetric(1).unwrap()), 1);
        assert_eq!(order(&make_symmetric(4).unwrap()), 24);
        assert_eq!(order(&make_alternating(4).unwrap()), 12);
        assert_eq!(order(&make_alternating(5).unwrap()), 60);
        assert_eq!(order(&make_alternating(6).unwrap()), 360);
    }

    #[test]
    fn parameter_errors() {
        assert!(make_cyclic(0).is_err());
        assert!(make_dihedral(7).is_err());
        assert!(make_dihedral(2).is_err());
        assert!(make_heisenberg(2).is_err());
        assert!(make_heisenberg(9).is_err());
        assert!(matches!(make_symmetric(DEGREE_CAP + 1), Err(Error::DegreeCap { .. })));
        assert!(family("nope", None).is_err());
        assert!(family("cyclic", None).is_err());
    }

    #[test]
    fn direct_products() {
        let s3 = make_symmetric(3).unwrap();
        let p = make_direct_product(&s3, &s3).unwrap();
        assert_eq!(p.degree, 6);
        assert_eq!(order(&p), 36);
        assert_eq!(order(&make_direct_product(&s3, &make_cyclic(1).unwrap()).unwrap()), 6);
        let c2c3 = generate(&make_direct_product(&make_cyclic(2).unwrap(), &make_cyclic(3).unwrap()).unwrap()).unwrap();
        assert_eq!(c2c3.order(), 6);
        assert!(c2c3.is_abelian());
    }

    #[test]
    fn wreath_product() {
        let g = generate(&make_s3_wr_c2()).unwrap();
        assert_eq!(g.order(), 72);
        assert!(!g.classify().supersoluble);
        let base = s3_wr_c2_base(&g).unwrap();
        assert_eq!(base.order(), 36);
        assert!(g.classify_subgroup(&base).unwrap().supersoluble);
    }

    #[test]
    fn heisenberg_groups() {
        for p in [3, 5] {
            let g = generate(&make_heisenberg(p).unwrap()).unwrap();
            assert_eq!(g.order(), p * p * p);
            assert!(g.classify().nilpotent);
            let z = g.derived_subgroup();
            assert_eq!(z.order(), p);
            // derived subgroup = centre
            let centre = g.subgroup_where(|x| g.generator_indices().iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
            assert_eq!(z, centre);
        }
    }

    #[test]
    fn order_144_construction() {
        let e = generate(&make_order_144().unwrap()).unwrap();
        assert_eq!(e.order(), 144);
        let t = translations_of(&e).unwrap();
        assert_eq!(t.order(), 9);
        assert!(e.is_normal(&t));
        let r = e.classify();
        assert!(!r.supersoluble && r.metanilpotent && r.sylow_tower_supersoluble);
        let index2: Vec<_> = e.normal_subgroups().unwrap().iter().filter(|h| h.order() == 72).cloned().collect();
        assert!(index2.iter().any(|h| !e.classify_subgroup(h).unwrap().supersoluble));
    }

    #[test]
    fn deterministic_constructors() {
        assert_eq!(make_order_144().unwrap(), make_order_144().unwrap());
        let a = generate(&make_heisenberg(3).unwrap()).unwrap();
        let b = generate(&make_heisenberg(3).unwrap()).unwrap();
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn empty_corpus() {
        assert!(build_corpus(&CorpusConfig::empty()).unwrap().is_empty());
    }

    #[test]
    fn small_corpus_with_quotients() {
        let config = CorpusConfig { symmetric: true, max_degree: 4, quotients: true, ..CorpusConfig::empty() };
        let names: Vec<String> = build_corpus(&config).unwrap().iter().map(|g| g.name().to_string()).collect();
        assert_eq!(names, vec!["symmetric(3)", "symmetric(4)", "symmetric(3)/n1", "symmetric(4)/n1"]);
    }
}
