//! The tropical mirror pipeline.
//!
//! From a nef partition (or the monomial ideal of its canonical
//! degeneration) this computes the deformation polytope and its dual, the
//! tropical face co-complex by two independent routes, the mirror monomial
//! ideal in both of its forms, the deformation support, and the symbolic
//! first-order mirror family. Generic coefficients are never instantiated:
//! every test reduces to exact combinatorics of supports.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::Zero;

use crate::deformation::{candidate_points, hom_from_point, pt1_basis, PT1Basis};
use crate::error::{Error, Result};
use crate::lattice::{Int, LatticeVector, Rat, RationalVector};
use crate::polytope::Polytope;
use crate::srcomplex::{
    dualize_cocomplex, sphere_proxy_check, strata_subcomplex, CoComplex, EmbeddedComplex,
    MonomialIdeal,
};
use crate::toric::{ToricData, TorusDivisor};

/// A validated nef partition of the rays: blocks, block divisors, generator
/// monomials and section polytopes.
#[derive(Debug, Clone)]
pub struct NefPartition {
    pub blocks: Vec<BTreeSet<usize>>,
    pub block_divisors: Vec<TorusDivisor>,
    pub section_polytopes: Vec<Polytope>,
}

impl NefPartition {
    /// Validates blocks: disjoint, exhaustive, each block divisor Cartier
    /// and nef.
    pub fn from_blocks(blocks: Vec<BTreeSet<usize>>, t: &ToricData) -> Result<NefPartition> {
        let r = t.num_rays();
        let mut seen = BTreeSet::new();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidNefPartition("empty block".into()));
            }
            for &i in b {
                if i >= r {
                    return Err(Error::InvalidNefPartition(format!(
                        "ray index {} out of range",
                        i
                    )));
                }
                if !seen.insert(i) {
                    return Err(Error::InvalidNefPartition(format!(
                        "ray {} appears in two blocks",
                        i
                    )));
                }
            }
        }
        if seen.len() != r {
            return Err(Error::InvalidNefPartition(
                "blocks do not cover all rays".into(),
            ));
        }
        let mut divisors = Vec::new();
        let mut sections = Vec::new();
        for (j, b) in blocks.iter().enumerate() {
            let coeffs = LatticeVector(
                (0..r)
                    .map(|i| if b.contains(&i) { Int::from(1) } else { Int::zero() })
                    .collect(),
            );
            let divisor = TorusDivisor(coeffs);
            match t.is_nef(&divisor) {
                Ok(true) => {}
                Ok(false) => {
                    return Err(Error::InvalidNefPartition(format!("block {} is not nef", j)))
                }
                Err(Error::NotCartier(_)) => {
                    return Err(Error::InvalidNefPartition(format!(
                        "block {} is not Cartier",
                        j
                    )))
                }
                Err(e) => return Err(e),
            }
            sections.push(t.divisor_polytope(&divisor)?);
            divisors.push(divisor);
        }
        Ok(NefPartition {
            blocks,
            block_divisors: divisors,
            section_polytopes: sections,
        })
    }

    /// Reads the blocks off the generator supports of a reduced monomial
    /// ideal.
    pub fn from_ideal(i0: &MonomialIdeal, t: &ToricData) -> Result<NefPartition> {
        if !i0.is_squarefree() {
            return Err(Error::InvalidNefPartition(
                "ideal must be reduced (squarefree)".into(),
            ));
        }
        NefPartition::from_blocks(i0.supports(), t)
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The special-fiber ideal generated by the block monomials.
    pub fn ideal(&self, t: &ToricData) -> MonomialIdeal {
        MonomialIdeal::from_supports(t.num_rays(), &self.blocks)
            .expect("block supports are valid generators")
    }
}

/// The canonical monomial degeneration of a nef partition: generators
/// `m_j + t g_j` with symbolic general sections g_j supported off the ideal.
#[derive(Debug, Clone)]
pub struct Degeneration {
    pub partition: NefPartition,
    pub ideal: MonomialIdeal,
    /// Per block: the lattice points alpha of the section polytope whose
    /// shifted monomial avoids the ideal. Coefficients stay symbolic.
    pub supports: Vec<Vec<LatticeVector>>,
}

/// Builds the canonical degeneration; every block must keep a nonempty
/// section support.
pub fn canonical_degeneration(partition: NefPartition, t: &ToricData) -> Result<Degeneration> {
    let ideal = partition.ideal(t);
    let mut supports = Vec::new();
    for (j, poly) in partition.section_polytopes.iter().enumerate() {
        let gen = &ideal.generators()[j];
        let support: Vec<LatticeVector> = poly
            .lattice_points()
            .into_iter()
            .filter(|alpha| {
                let e = gen + &t.character_exponents(alpha);
                debug_assert!(e.0.iter().all(|v| v >= &Int::zero()));
                !ideal.contains_monomial(&e)
            })
            .collect();
        if support.is_empty() {
            return Err(Error::EmptySupport { block: j });
        }
        supports.push(support);
    }
    // Generator order in the reduced ideal is sorted; align supports with it.
    debug_assert_eq!(ideal.generators().len(), partition.blocks.len());
    Ok(Degeneration {
        partition,
        ideal,
        supports,
    })
}

/// The Groebner cone of special fiber weights in `R + N_R`, one inequality
/// `<alpha, w> + w_t >= 0` per support point, with the irredundant subset.
#[derive(Debug, Clone)]
pub struct GroebnerCone {
    pub ambient_dim: usize,
    pub inequalities: Vec<LatticeVector>,
    /// The inequalities that are facets of the cone: support points that
    /// are vertices of their convex hull.
    pub irredundant: Vec<LatticeVector>,
}

pub fn groebner_cone(d: &Degeneration, t: &ToricData) -> GroebnerCone {
    let mut alphas: Vec<LatticeVector> = d.supports.iter().flatten().cloned().collect();
    alphas.sort();
    alphas.dedup();
    let hull = Polytope::convex_hull_lattice(&alphas, t.dim());
    let vertex_set = hull.vertex_coords_set();
    let irredundant = alphas
        .iter()
        .filter(|a| vertex_set.contains(&a.to_rational()))
        .cloned()
        .collect();
    GroebnerCone {
        ambient_dim: t.dim(),
        inequalities: alphas,
        irredundant,
    }
}

/// The `w_t = 1` slice of the cone: the polytope of special fiber weights.
pub fn nabla_from_cone(cone: &GroebnerCone) -> Result<Polytope> {
    let ineqs: Vec<(LatticeVector, Rat)> = cone
        .inequalities
        .iter()
        .map(|a| (a.clone(), Rat::from(Int::from(1))))
        .collect();
    Polytope::from_inequalities(cone.ambient_dim, &ineqs, &[]).map_err(|e| match e {
        Error::Unbounded => Error::UnboundedSlice,
        other => other,
    })
}

/// The dual description: convex hull of all support points.
pub fn nabla_dual_from_hull(d: &Degeneration, t: &ToricData) -> Polytope {
    let alphas: Vec<LatticeVector> = d.supports.iter().flatten().cloned().collect();
    Polytope::convex_hull_lattice(&alphas, t.dim())
}

fn add_full_and_check_closure(
    accepted: BTreeSet<usize>,
    polytope: &Arc<Polytope>,
) -> Result<CoComplex> {
    let lattice = polytope.face_lattice();
    let mut faces = accepted;
    if !faces.is_empty() {
        faces.insert(lattice.id_of_full());
    }
    let cc = CoComplex {
        polytope: polytope.clone(),
        faces,
    };
    if !cc.is_closed_under_superfaces() {
        return Err(Error::NotFaceOfDelta(
            "accepted faces are not closed under superfaces".into(),
        ));
    }
    Ok(cc)
}

/// Tropical faces by the combinatorial route: a proper face G of the dual
/// deformation polytope is accepted when every section polytope meets it,
/// the Minkowski sum of the intersections is a face of Delta, and that face
/// is a stratum of the special fiber.
pub fn tropical_faces_combinatorial(
    d: &Degeneration,
    nabla_dual: &Arc<Polytope>,
    t: &ToricData,
) -> Result<CoComplex> {
    let strata = strata_subcomplex(&d.ideal, t)?;
    let delta = t.delta();
    let delta_lattice = delta.face_lattice();
    let lattice = nabla_dual.face_lattice();
    let mut accepted = BTreeSet::new();
    'faces: for id in lattice.proper_faces() {
        let g = nabla_dual.face_polytope(lattice.face(id));
        let mut sum: Option<Polytope> = None;
        for section in &d.partition.section_polytopes {
            let meet = g.intersect(section)?;
            if meet.is_empty_polytope() {
                continue 'faces;
            }
            sum = Some(match sum {
                None => meet,
                Some(s) => s.minkowski_sum(&meet)?,
            });
        }
        let q = sum.expect("at least one block");
        debug_assert!(q.vertices().iter().all(|v| delta.contains(v)));
        let face_id = delta.smallest_containing_face(q.vertices());
        let face = delta_lattice.face(face_id);
        let face_vertices: BTreeSet<RationalVector> = face
            .vertex_set
            .iter()
            .map(|&i| delta.vertices()[i].clone())
            .collect();
        if face_vertices != q.vertex_coords_set() {
            continue; // the sum is not a face of Delta
        }
        if strata.faces.contains(&face_id) {
            accepted.insert(id);
        }
    }
    add_full_and_check_closure(accepted, nabla_dual)
}

/// Tropical faces by the prevariety route: a proper face of the weight
/// polytope is accepted when, at the barycenter, every block's tropical
/// minimum is attained at least twice. Returns the duals as a co-complex.
pub fn tropical_faces_prevariety(
    d: &Degeneration,
    nabla: &Arc<Polytope>,
    nabla_dual: &Arc<Polytope>,
) -> Result<CoComplex> {
    let lattice = nabla.face_lattice();
    let dual_lattice = nabla_dual.face_lattice();
    let mut accepted = BTreeSet::new();
    for id in lattice.proper_faces() {
        let face = lattice.face(id);
        let pts: Vec<RationalVector> = face
            .vertex_set
            .iter()
            .map(|&i| nabla.vertices()[i].clone())
            .collect();
        let mut w = RationalVector::zeros(nabla.ambient_dim());
        for p in &pts {
            w = &w + p;
        }
        let count = Rat::from(Int::from(pts.len() as i64));
        let w = w.scale(&(Rat::from(Int::from(1)) / count));

        let tropical = d.supports.iter().all(|support| {
            // Value set {0} u {1 + <alpha, w>}; the minimum must be attained
            // at least twice. On the weight polytope all values are >= 0, so
            // this means some support term ties the monomial term at 0.
            let mut min = Rat::zero();
            let mut hits = 1usize;
            for alpha in support {
                let v = Rat::from(Int::from(1)) + alpha.dot_rat(&w);
                if v < min {
                    min = v;
                    hits = 1;
                } else if v == min {
                    hits += 1;
                }
            }
            hits >= 2
        });
        if tropical {
            let dual = nabla
                .dual_face(face)
                .expect("weight polytope has 0 interior");
            let dual_id = dual_lattice
                .face_by_vertices(&dual.vertex_set)
                .expect("dual face exists in the dual lattice");
            accepted.insert(dual_id);
        }
    }
    add_full_and_check_closure(accepted, nabla_dual)
}

/// Dualize the tropical co-complex back onto the weight polytope and check
/// the sphere proxies at the expected dimension.
pub fn special_fiber_tropical_complex(
    cc: &CoComplex,
    nabla: &Arc<Polytope>,
    expected_dim: i64,
) -> Result<EmbeddedComplex> {
    let tc = dualize_cocomplex(cc, nabla)?;
    let report = sphere_proxy_check(&tc)?;
    if report.dim != expected_dim {
        return Err(Error::SphereCheckFailed(format!(
            "tropical complex has dimension {}, expected {}",
            report.dim, expected_dim
        )));
    }
    if !report.passes() {
        return Err(Error::SphereCheckFailed(format!("{:?}", report)));
    }
    Ok(tc)
}

/// The mirror monomial ideal, computed in both of its forms.
///
/// Form (i): generators are the minimal variable subsets whose facet union
/// covers the support of the complex. Form (ii): intersection over the
/// complex's facets of the prime ideals of variables whose facet contains
/// them. The two must coincide.
pub fn mirror_ideal(tc: &EmbeddedComplex, mirror_toric: &ToricData) -> Result<MonomialIdeal> {
    if tc.equidimension().is_none() {
        return Err(Error::NotEquidimensional);
    }
    let r = mirror_toric.num_rays();
    assert!(r < 64, "too many mirror rays for subset enumeration");
    let lattice = tc.polytope.face_lattice();
    // Variables = rays of the mirror = facets of the weight polytope; the
    // tight facet set of a maximal face lists the variables whose facet
    // contains it.
    let tight_sets: Vec<BTreeSet<usize>> = tc
        .facets()
        .iter()
        .map(|&id| lattice.face(id).facet_set.clone())
        .collect();
    debug_assert!(tight_sets.iter().all(|s| !s.is_empty()));

    // Form (i): minimal transversals of the tight sets, by subset size.
    let mut masks: Vec<u64> = (0..(1u64 << r)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let mut transversals: Vec<BTreeSet<usize>> = Vec::new();
    for mask in masks {
        let s: BTreeSet<usize> = (0..r).filter(|&i| mask & (1 << i) != 0).collect();
        if transversals.iter().any(|g| g.is_subset(&s)) {
            continue;
        }
        if tight_sets.iter().all(|t| t.intersection(&s).next().is_some()) {
            transversals.push(s);
        }
    }
    let generators = MonomialIdeal::from_supports(r, &transversals)?;

    // Form (ii): intersection of the facet primes.
    let mut intersection: Vec<BTreeSet<usize>> = tight_sets[0]
        .iter()
        .map(|&v| [v].into_iter().collect())
        .collect();
    for tight in &tight_sets[1..] {
        let mut next: Vec<BTreeSet<usize>> = Vec::new();
        for a in &intersection {
            for &v in tight {
                let mut s = a.clone();
                s.insert(v);
                if !next.iter().any(|g| g.is_subset(&s)) {
                    next.retain(|g| !s.is_subset(g));
                    next.push(s);
                }
            }
        }
        intersection = next;
    }
    let intersected = MonomialIdeal::from_supports(r, &intersection)?;

    if generators != intersected {
        return Err(Error::FormsDisagree(format!(
            "{} covering generators vs {} intersection generators",
            generators.generators().len(),
            intersected.generators().len()
        )));
    }
    Ok(generators)
}

/// Lattice points of the union of the dual faces of the strata complex:
/// the deformation support of the mirror.
pub fn deformation_support_xi(i0: &MonomialIdeal, t: &ToricData) -> Result<Vec<LatticeVector>> {
    let strata = strata_subcomplex(i0, t)?;
    let p = t.fano();
    let lattice = strata.polytope.face_lattice();
    let points = p.lattice_points();
    let mut xi: Vec<LatticeVector> = Vec::new();
    for &id in &strata.faces {
        let face = lattice.face(id);
        if face.dim < 0 || face.dim == strata.polytope.dim() {
            continue;
        }
        // The dual face lives in the Fano polytope; its tight facets are
        // indexed by the strata face's vertices.
        for pt in &points {
            let q = pt.to_rational();
            let tight = face
                .vertex_set
                .iter()
                .all(|&f| p.facets()[f].eval(&q).is_zero());
            if tight {
                xi.push(pt.clone());
            }
        }
    }
    xi.sort();
    xi.dedup();
    Ok(xi)
}

/// One symbolic perturbation term of a mirror family generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerturbationTerm {
    pub alpha: LatticeVector,
    /// Symbol name of the generic coefficient, stable across generators.
    pub coefficient: String,
    /// Exponents of the image monomial in the mirror Cox variables.
    pub image: LatticeVector,
}

/// A generator of the first-order mirror family:
/// `base + s * sum of c_alpha * image_alpha`, with `s^2 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyGenerator {
    /// Exponents of the promoted generator monomial (Cartier class).
    pub base: LatticeVector,
    /// Index of the mirror ideal generator this was promoted from.
    pub source_generator: usize,
    /// Exponents of the monomial multiplier used in the promotion
    /// (zero when the generator class was already Cartier).
    pub multiplier: LatticeVector,
    /// Power k when promotion fell back to the k-th power (1 otherwise).
    pub power: u32,
    pub terms: Vec<PerturbationTerm>,
}

/// Promotions of one generator into the Picard-Cox ring: the generator
/// itself when Cartier, else all products with monomials of the smallest
/// total degree whose class is Cartier, else the smallest Cartier power.
fn promote_generator(
    g: &LatticeVector,
    j: usize,
    mirror_toric: &ToricData,
) -> Result<Vec<(LatticeVector, LatticeVector, u32)>> {
    let class = mirror_toric.degree(&TorusDivisor(g.clone()));
    if mirror_toric.is_class_cartier(&class) {
        let r = g.rank();
        return Ok(vec![(g.clone(), LatticeVector::zeros(r), 1)]);
    }
    let r = mirror_toric.num_rays();
    for total in 1..=6u32 {
        let mut found = Vec::new();
        let mut stack = vec![(Vec::<Int>::new(), total)];
        while let Some((prefix, rest)) = stack.pop() {
            if prefix.len() == r - 1 {
                let mut u = prefix.clone();
                u.push(Int::from(rest));
                let u = LatticeVector(u);
                let m = g + &u;
                if mirror_toric.is_class_cartier(&mirror_toric.degree(&TorusDivisor(m.clone()))) {
                    found.push((m, u, 1));
                }
                continue;
            }
            for take in 0..=rest {
                let mut p = prefix.clone();
                p.push(Int::from(take));
                stack.push((p, rest - take));
            }
        }
        if !found.is_empty() {
            found.sort();
            found.dedup();
            return Ok(found);
        }
    }
    if let Some(k) = mirror_toric.cartier_multiple(
        &mirror_toric.degree(&TorusDivisor(g.clone())),
        1000,
    ) {
        let base = g.scale(&Int::from(k));
        let multiplier = &base - g;
        return Ok(vec![(base, multiplier, k)]);
    }
    Err(Error::NoCartierMultiple(format!(
        "generator {} of the mirror ideal",
        j
    )))
}

/// The symbolic first-order mirror family over the deformation support.
///
/// Each ideal generator is promoted into the Picard-Cox ring; promoted
/// monomials divisible by another promoted monomial are redundant and
/// dropped, leaving the minimal Cartier generators.
pub fn mirror_family(
    i0m: &MonomialIdeal,
    xi: &[LatticeVector],
    mirror_toric: &ToricData,
) -> Result<Vec<FamilyGenerator>> {
    let directions: Vec<(usize, crate::deformation::DeformationDirection)> = xi
        .iter()
        .enumerate()
        .filter_map(|(idx, alpha)| hom_from_point(alpha, i0m, mirror_toric).map(|d| (idx, d)))
        .collect();

    let mut promoted: Vec<(LatticeVector, LatticeVector, u32, usize)> = Vec::new();
    for (j, gen) in i0m.generators().iter().enumerate() {
        for (base, mult, power) in promote_generator(gen, j, mirror_toric)? {
            promoted.push((base, mult, power, j));
        }
    }
    let divides = |a: &LatticeVector, b: &LatticeVector| a.0.iter().zip(&b.0).all(|(x, y)| x <= y);
    promoted.sort();
    promoted.dedup_by(|a, b| a.0 == b.0);
    let minimal: Vec<(LatticeVector, LatticeVector, u32, usize)> = promoted
        .iter()
        .filter(|(base, ..)| {
            !promoted
                .iter()
                .any(|(other, ..)| other != base && divides(other, base))
        })
        .cloned()
        .collect();

    let mut family = Vec::new();
    for (base, multiplier, power, j) in minimal {
        let mut terms = Vec::new();
        for (idx, dir) in &directions {
            if let Some(im) = &dir.images[j] {
                // Module action: phi(u * m) = u * phi(m); a power promotion
                // multiplies by m^{k-1} likewise.
                let image = &multiplier + im;
                if !i0m.contains_monomial(&image) {
                    terms.push(PerturbationTerm {
                        alpha: dir.alpha.clone(),
                        coefficient: format!("c{}", idx),
                        image,
                    });
                }
            }
        }
        family.push(FamilyGenerator {
            base,
            source_generator: j,
            multiplier,
            power,
            terms,
        });
    }
    family.sort_by(|a, b| a.base.cmp(&b.base));
    Ok(family)
}

/// Everything the pipeline produces.
#[derive(Debug)]
pub struct MirrorResult {
    pub toric: Arc<ToricData>,
    pub ideal: MonomialIdeal,
    pub strata: EmbeddedComplex,
    pub basis: PT1Basis,
    pub degeneration: Degeneration,
    pub nabla: Arc<Polytope>,
    pub nabla_dual: Arc<Polytope>,
    pub tropical_cocomplex: CoComplex,
    pub tropical_complex: EmbeddedComplex,
    pub mirror_toric: Arc<ToricData>,
    pub mirror_ideal: MonomialIdeal,
    /// The dual nef partition: mirror ray j belongs to block i when the
    /// corresponding deformation moved generator i.
    pub mirror_partition: Vec<BTreeSet<usize>>,
    pub xi: Vec<LatticeVector>,
    pub family: Vec<FamilyGenerator>,
}

/// A pipeline failure, labeled with the algorithm step that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineError {
    pub step: &'static str,
    pub error: Error,
}

impl std::fmt::Display for PipelineError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "step {}: {}", self.step, self.error)
    }
}

impl std::error::Error for PipelineError {}

fn at_step<T>(step: &'static str, r: Result<T>) -> std::result::Result<T, PipelineError> {
    r.map_err(|error| PipelineError { step, error })
}

/// Runs the whole construction from a special-fiber ideal.
pub fn run_pipeline(
    i0: &MonomialIdeal,
    toric: Arc<ToricData>,
) -> std::result::Result<MirrorResult, PipelineError> {
    const S0: &str = "0 (input validation)";
    const S1: &str = "1 (tangent basis)";
    const S2: &str = "2 (deformation hull)";
    const S3: &str = "3 (tropical faces)";
    const S4: &str = "4 (mirror ideal)";
    const S5: &str = "5 (mirror family)";

    let t = toric.as_ref();
    let partition = at_step(S0, NefPartition::from_ideal(i0, t))?;
    let ideal = partition.ideal(t);
    let strata = at_step(S0, strata_subcomplex(&ideal, t))?;
    let report = at_step(S0, sphere_proxy_check(&strata))?;
    if !report.passes() {
        return Err(PipelineError {
            step: S0,
            error: Error::SphereCheckFailed(format!("{:?}", report)),
        });
    }

    let basis = at_step(S1, pt1_basis(&ideal, t))?;
    let degeneration = at_step(S1, canonical_degeneration(partition, t))?;
    {
        // For a complete intersection the tangent directions are exactly the
        // union of the block supports.
        let mut from_supports: Vec<LatticeVector> =
            degeneration.supports.iter().flatten().cloned().collect();
        from_supports.sort();
        from_supports.dedup();
        if basis.alphas() != from_supports {
            return Err(PipelineError {
                step: S1,
                error: Error::ConsistencyFailure(
                    "tangent basis differs from degeneration supports".into(),
                ),
            });
        }
    }

    let nabla_dual = Arc::new(Polytope::convex_hull_lattice(&basis.alphas(), t.dim()));
    if !nabla_dual.is_reflexive() {
        return Err(PipelineError {
            step: S2,
            error: Error::ConsistencyFailure("deformation hull is not reflexive".into()),
        });
    }
    let nabla = Arc::new(at_step(S2, nabla_dual.polar_dual())?);
    let cone = groebner_cone(&degeneration, t);
    let nabla_h = at_step(S2, nabla_from_cone(&cone))?;
    if nabla_h.vertex_coords_set() != nabla.vertex_coords_set() {
        return Err(PipelineError {
            step: S2,
            error: Error::ConsistencyFailure(
                "cone slice and polar of the deformation hull disagree".into(),
            ),
        });
    }

    let cc = at_step(S3, tropical_faces_combinatorial(&degeneration, &nabla_dual, t))?;
    let cc_prev = at_step(
        S3,
        tropical_faces_prevariety(&degeneration, &nabla, &nabla_dual),
    )?;
    if cc.faces != cc_prev.faces {
        return Err(PipelineError {
            step: S3,
            error: Error::TropicalTestsDisagree(format!(
                "combinatorial {:?} vs prevariety {:?}",
                cc.fvector(),
                cc_prev.fvector()
            )),
        });
    }
    let expected_dim = t.dim() as i64 - degeneration.partition.num_blocks() as i64;
    let tropical_complex = at_step(S3, special_fiber_tropical_complex(&cc, &nabla, expected_dim))?;

    let mirror_toric = Arc::new(at_step(
        S4,
        ToricData::from_fano(nabla_dual.as_ref().clone()),
    )?);
    let mirror_ideal_ = at_step(S4, mirror_ideal(&tropical_complex, &mirror_toric))?;
    {
        // Strata of the mirror ideal on the weight polytope must reproduce
        // the tropical complex.
        let mirror_strata = at_step(S4, strata_subcomplex(&mirror_ideal_, &mirror_toric))?;
        let a = mirror_strata.facet_vertex_sets();
        let b = tropical_complex.facet_vertex_sets();
        if a != b {
            return Err(PipelineError {
                step: S4,
                error: Error::ConsistencyFailure(
                    "mirror ideal strata differ from the tropical complex".into(),
                ),
            });
        }
    }

    let xi = at_step(S5, deformation_support_xi(&ideal, t))?;
    let family = at_step(S5, mirror_family(&mirror_ideal_, &xi, &mirror_toric))?;

    Ok(MirrorResult {
        toric,
        ideal,
        strata,
        basis,
        degeneration,
        nabla,
        nabla_dual,
        tropical_cocomplex: cc,
        tropical_complex,
        mirror_toric,
        mirror_ideal: mirror_ideal_,
        xi,
        family,
    })
}

/// Runs the pipeline from explicit nef-partition blocks.
pub fn run_pipeline_from_blocks(
    blocks: Vec<BTreeSet<usize>>,
    toric: Arc<ToricData>,
) -> std::result::Result<MirrorResult, PipelineError> {
    let partition = at_step(
        "0 (input validation)",
        NefPartition::from_blocks(blocks, toric.as_ref()),
    )?;
    let ideal = partition.ideal(toric.as_ref());
    run_pipeline(&ideal, toric)
}

/// Convenience: candidate alphas for tests that need the raw search list.
pub fn candidate_alphas(i0: &MonomialIdeal, t: &ToricData) -> Result<Vec<LatticeVector>> {
    candidate_points(i0, t)
}
