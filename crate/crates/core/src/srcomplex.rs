//! Reduced monomial ideals and the complexes of polytope faces they carve
//! out.
//!
//! A complex stores face ids into the face lattice of its reference
//! polytope, never bare vertex subsets: the mirror-side polytopes have
//! non-simplicial faces. Dualization swaps vertex and tight-facet index
//! sets, including the empty face / full polytope pair.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Int, LatticeVector};
use crate::polytope::{FVector, Polytope};
use crate::toric::ToricData;

/// A monomial ideal given by exponent vectors, kept reduced: no generator
/// divides another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<LatticeVector>,
}

fn divides(a: &LatticeVector, b: &LatticeVector) -> bool {
    a.0.iter().zip(&b.0).all(|(x, y)| x <= y)
}

impl MonomialIdeal {
    /// Builds and reduces; exponents must be nonnegative.
    pub fn new(num_vars: usize, generators: Vec<LatticeVector>) -> Result<MonomialIdeal> {
        for g in &generators {
            if g.rank() != num_vars {
                return Err(Error::InvalidInput(format!(
                    "generator of length {} in a ring with {} variables",
                    g.rank(),
                    num_vars
                )));
            }
            if g.0.iter().any(|e| e.is_negative()) {
                return Err(Error::InvalidInput(
                    "negative exponent in ideal generator".into(),
                ));
            }
        }
        let mut gens: Vec<LatticeVector> = generators;
        gens.sort();
        gens.dedup();
        // If 1 is a generator the ideal is the unit ideal.
        if gens.iter().any(|g| g.is_zero()) {
            return Ok(MonomialIdeal {
                num_vars,
                generators: vec![LatticeVector::zeros(num_vars)],
            });
        }
        let reduced: Vec<LatticeVector> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        Ok(MonomialIdeal {
            num_vars,
            generators: reduced,
        })
    }

    pub fn from_supports(num_vars: usize, supports: &[BTreeSet<usize>]) -> Result<MonomialIdeal> {
        let gens = supports
            .iter()
            .map(|s| {
                LatticeVector(
                    (0..num_vars)
                        .map(|i| if s.contains(&i) { Int::one() } else { Int::zero() })
                        .collect(),
                )
            })
            .collect();
        MonomialIdeal::new(num_vars, gens)
    }

    pub fn unit(num_vars: usize) -> MonomialIdeal {
        MonomialIdeal {
            num_vars,
            generators: vec![LatticeVector::zeros(num_vars)],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_zero())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// All generators have 0/1 exponents.
    pub fn is_squarefree(&self) -> bool {
        self.generators
            .iter()
            .all(|g| g.0.iter().all(|e| e.is_zero() || e.is_one()))
    }

    /// Monomial membership: some generator divides the monomial.
    pub fn contains_monomial(&self, m: &LatticeVector) -> bool {
        assert_eq!(m.rank(), self.num_vars);
        self.generators.iter().any(|g| divides(g, m))
    }

    pub fn support(g: &LatticeVector) -> BTreeSet<usize> {
        (0..g.rank()).filter(|&i| !g[i].is_zero()).collect()
    }

    pub fn supports(&self) -> Vec<BTreeSet<usize>> {
        self.generators.iter().map(MonomialIdeal::support).collect()
    }
}

/// A set of faces of a reference polytope closed under taking subfaces.
#[derive(Debug, Clone)]
pub struct EmbeddedComplex {
    pub polytope: Arc<Polytope>,
    /// Face ids into `polytope.face_lattice()`.
    pub faces: BTreeSet<usize>,
}

/// A set of faces closed under taking superfaces (within the proper faces
/// plus the full polytope).
#[derive(Debug, Clone)]
pub struct CoComplex {
    pub polytope: Arc<Polytope>,
    pub faces: BTreeSet<usize>,
}

fn fvector_of(polytope: &Polytope, faces: &BTreeSet<usize>) -> FVector {
    let lattice = polytope.face_lattice();
    FVector::from_dims(
        faces.iter().map(|&id| lattice.face(id).dim),
        polytope.ambient_dim(),
    )
}

fn maximal_faces(polytope: &Polytope, faces: &BTreeSet<usize>) -> Vec<usize> {
    let lattice = polytope.face_lattice();
    faces
        .iter()
        .filter(|&&id| {
            !faces
                .iter()
                .any(|&other| other != id && lattice.contains(id, other))
        })
        .copied()
        .collect()
}

impl EmbeddedComplex {
    pub fn fvector(&self) -> FVector {
        fvector_of(&self.polytope, &self.faces)
    }

    /// Inclusion-maximal member faces.
    pub fn facets(&self) -> Vec<usize> {
        maximal_faces(&self.polytope, &self.faces)
    }

    /// Vertex index sets of the maximal faces, sorted.
    pub fn facet_vertex_sets(&self) -> Vec<BTreeSet<usize>> {
        let lattice = self.polytope.face_lattice();
        let mut sets: Vec<BTreeSet<usize>> = self
            .facets()
            .iter()
            .map(|&id| lattice.face(id).vertex_set.clone())
            .collect();
        sets.sort();
        sets
    }

    pub fn is_closed_under_subfaces(&self) -> bool {
        let lattice = self.polytope.face_lattice();
        (0..lattice.len()).all(|id| {
            !self
                .faces
                .iter()
                .any(|&big| lattice.contains(id, big) && !self.faces.contains(&id))
        })
    }

    /// Common dimension of the maximal faces, if equidimensional.
    pub fn equidimension(&self) -> Option<i64> {
        let lattice = self.polytope.face_lattice();
        let dims: BTreeSet<i64> = self
            .facets()
            .iter()
            .map(|&id| lattice.face(id).dim)
            .filter(|&d| d >= 0)
            .collect();
        if dims.len() == 1 {
            dims.into_iter().next()
        } else {
            None
        }
    }

    pub fn is_empty_complex(&self) -> bool {
        self.faces.is_empty()
    }
}

impl CoComplex {
    pub fn fvector(&self) -> FVector {
        fvector_of(&self.polytope, &self.faces)
    }

    /// Inclusion-minimal member faces.
    pub fn minimal_faces(&self) -> Vec<usize> {
        let lattice = self.polytope.face_lattice();
        self.faces
            .iter()
            .filter(|&&id| {
                !self
                    .faces
                    .iter()
                    .any(|&other| other != id && lattice.contains(other, id))
            })
            .copied()
            .collect()
    }

    pub fn is_closed_under_superfaces(&self) -> bool {
        let lattice = self.polytope.face_lattice();
        self.faces.iter().all(|&id| {
            (0..lattice.len())
                .filter(|&big| lattice.contains(id, big))
                .all(|big| self.faces.contains(&big))
        })
    }
}

/// Faces of the Fano polytope whose squarefree ray monomial avoids the
/// ideal; this is the Stanley-Reisner style complex of the special fiber.
pub fn ideal_to_complex(i0: &MonomialIdeal, t: &ToricData) -> Result<EmbeddedComplex> {
    if i0.num_vars() != t.num_rays() {
        return Err(Error::InvalidInput(
            "ideal variable count does not match ray count".into(),
        ));
    }
    if !i0.is_squarefree() {
        return Err(Error::InvalidInput(
            "ideal must be reduced (squarefree)".into(),
        ));
    }
    let supports = i0.supports();
    let polytope = t.fano().clone();
    let lattice = polytope.face_lattice();
    let faces: BTreeSet<usize> = (0..lattice.len())
        .filter(|&id| {
            let vs = &lattice.face(id).vertex_set;
            !supports.iter().any(|s| s.is_subset(vs))
        })
        .collect();
    let c = EmbeddedComplex { polytope, faces };
    debug_assert!(c.is_closed_under_subfaces());
    Ok(c)
}

/// The reduced monomial ideal of minimal non-faces; inverse of
/// `ideal_to_complex` on strata-closed inputs.
pub fn complex_to_ideal(c: &EmbeddedComplex, t: &ToricData) -> MonomialIdeal {
    let r = t.num_rays();
    assert!(r < 64, "variable count too large for subset enumeration");
    let member_sets: Vec<BTreeSet<usize>> = {
        let lattice = c.polytope.face_lattice();
        c.faces
            .iter()
            .map(|&id| lattice.face(id).vertex_set.clone())
            .collect()
    };
    let mut gens: Vec<BTreeSet<usize>> = Vec::new();
    for mask in 0u64..(1u64 << r) {
        let s: BTreeSet<usize> = (0..r).filter(|&i| mask & (1 << i) != 0).collect();
        if gens.iter().any(|g| g.is_subset(&s)) {
            continue;
        }
        let supported = member_sets.iter().any(|f| s.is_subset(f));
        if !supported {
            gens.push(s);
        }
    }
    // Mask order is not size order; prune non-minimal entries.
    let minimal: Vec<BTreeSet<usize>> = gens
        .iter()
        .filter(|g| !gens.iter().any(|h| *h != **g && h.is_subset(g)))
        .cloned()
        .collect();
    MonomialIdeal::from_supports(r, &minimal).expect("squarefree supports are valid")
}

/// Faces of the dual polytope whose toric strata lie in the vanishing locus
/// of the ideal: for every generator, some ray of the normal cone divides it.
pub fn strata_subcomplex(i0: &MonomialIdeal, t: &ToricData) -> Result<EmbeddedComplex> {
    if i0.num_vars() != t.num_rays() {
        return Err(Error::InvalidInput(
            "ideal variable count does not match ray count".into(),
        ));
    }
    let supports = i0.supports();
    let polytope = t.delta().clone();
    let lattice = polytope.face_lattice();
    let faces: BTreeSet<usize> = (0..lattice.len())
        .filter(|&id| {
            // Facets of Delta are indexed by the vertices (rays) of the Fano
            // polytope, so the tight facet set is the dual face's vertex set.
            let rays_of_normal_cone = &lattice.face(id).facet_set;
            supports
                .iter()
                .all(|s| s.intersection(rays_of_normal_cone).next().is_some())
        })
        .collect();
    let c = EmbeddedComplex { polytope, faces };
    debug_assert!(c.is_closed_under_subfaces());
    Ok(c)
}

/// Maps every member face to its dual face in the polar polytope.
/// Inclusion reverses, so a complex becomes a co-complex.
pub fn dualize_complex(c: &EmbeddedComplex, dual: &Arc<Polytope>) -> Result<CoComplex> {
    let faces = dual_face_ids(&c.polytope, &c.faces, dual)?;
    let cc = CoComplex {
        polytope: dual.clone(),
        faces,
    };
    debug_assert!(cc.is_closed_under_superfaces());
    Ok(cc)
}

/// Inverse direction: a co-complex dualizes back to a complex.
pub fn dualize_cocomplex(cc: &CoComplex, dual: &Arc<Polytope>) -> Result<EmbeddedComplex> {
    let faces = dual_face_ids(&cc.polytope, &cc.faces, dual)?;
    let c = EmbeddedComplex {
        polytope: dual.clone(),
        faces,
    };
    debug_assert!(c.is_closed_under_subfaces());
    Ok(c)
}

fn dual_face_ids(
    polytope: &Arc<Polytope>,
    faces: &BTreeSet<usize>,
    dual: &Arc<Polytope>,
) -> Result<BTreeSet<usize>> {
    let lattice = polytope.face_lattice();
    let dual_lattice = dual.face_lattice();
    faces
        .iter()
        .map(|&id| {
            let df = polytope.dual_face(lattice.face(id))?;
            dual_lattice
                .face_by_vertices(&df.vertex_set)
                .ok_or_else(|| {
                    Error::InvalidInput(
                        "dual polytope does not match the complex's reference polytope".into(),
                    )
                })
        })
        .collect()
}

/// Report of the checkable sphere conditions on an equidimensional complex.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SphereReport {
    pub dim: i64,
    pub euler_characteristic: i64,
    pub euler_ok: bool,
    pub pseudomanifold: bool,
    pub strongly_connected: bool,
    pub links_connected: bool,
}

impl SphereReport {
    pub fn passes(&self) -> bool {
        self.euler_ok && self.pseudomanifold && self.strongly_connected && self.links_connected
    }
}

/// Proxy checks for "is a d-sphere": Euler characteristic, the
/// pseudomanifold property, strong connectivity through ridges, and
/// connected vertex links (d >= 2). Homeomorphism itself is out of reach.
pub fn sphere_proxy_check(c: &EmbeddedComplex) -> Result<SphereReport> {
    let lattice = c.polytope.face_lattice();
    let facets = c.facets();
    let dims: BTreeSet<i64> = facets
        .iter()
        .map(|&id| lattice.face(id).dim)
        .filter(|&d| d >= 0)
        .collect();
    if dims.len() != 1 {
        return Err(Error::NotEquidimensional);
    }
    let d = dims.into_iter().next().unwrap();

    let fv = c.fvector();
    let mut euler = 0i64;
    for (slot, count) in fv.0.iter().enumerate() {
        if slot == 0 {
            continue; // empty face
        }
        let dim = slot as i64 - 1;
        euler += if dim % 2 == 0 { *count as i64 } else { -(*count as i64) };
    }
    let euler_ok = euler == 1 + if d % 2 == 0 { 1 } else { -1 };

    let ridges: Vec<usize> = c
        .faces
        .iter()
        .filter(|&&id| lattice.face(id).dim == d - 1)
        .copied()
        .collect();
    let top: Vec<usize> = facets
        .iter()
        .filter(|&&id| lattice.face(id).dim == d)
        .copied()
        .collect();
    let mut pseudomanifold = true;
    let mut ridge_facets: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &ridge in &ridges {
        let containing: Vec<usize> = top
            .iter()
            .filter(|&&f| lattice.contains(ridge, f))
            .copied()
            .collect();
        if containing.len() != 2 {
            pseudomanifold = false;
        }
        ridge_facets.insert(ridge, containing);
    }

    let strongly_connected = connected_through(&top, |a, b| {
        ridge_facets
            .values()
            .any(|fs| fs.contains(&a) && fs.contains(&b))
    });

    let links_connected = if d < 2 {
        true
    } else {
        let vertices: Vec<usize> = c
            .faces
            .iter()
            .filter(|&&id| lattice.face(id).dim == 0)
            .copied()
            .collect();
        vertices.iter().all(|&v| {
            let vset = &lattice.face(v).vertex_set;
            let star: Vec<usize> = top
                .iter()
                .filter(|&&f| vset.is_subset(&lattice.face(f).vertex_set))
                .copied()
                .collect();
            connected_through(&star, |a, b| {
                ridge_facets.iter().any(|(&r, fs)| {
                    fs.contains(&a)
                        && fs.contains(&b)
                        && vset.is_subset(&lattice.face(r).vertex_set)
                })
            })
        })
    };

    Ok(SphereReport {
        dim: d,
        euler_characteristic: euler,
        euler_ok,
        pseudomanifold,
        strongly_connected,
        links_connected,
    })
}

fn connected_through(nodes: &[usize], mut adjacent: impl FnMut(usize, usize) -> bool) -> bool {
    if nodes.is_empty() {
        return false;
    }
    let mut visited = BTreeSet::new();
    let mut stack = vec![nodes[0]];
    visited.insert(nodes[0]);
    while let Some(a) = stack.pop() {
        for &b in nodes {
            if !visited.contains(&b) && adjacent(a, b) {
                visited.insert(b);
                stack.push(b);
            }
        }
    }
    visited.len() == nodes.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::Polytope;

    fn p2() -> ToricData {
        let p = Polytope::convex_hull_lattice(
            &[
                LatticeVector::from_i64(&[-1, -1]),
                LatticeVector::from_i64(&[1, 0]),
                LatticeVector::from_i64(&[0, 1]),
            ],
            2,
        );
        ToricData::from_fano(p).unwrap()
    }

    fn p4() -> ToricData {
        let p = Polytope::convex_hull_lattice(
            &[
                LatticeVector::from_i64(&[-1, -1, -1, -1]),
                LatticeVector::from_i64(&[1, 0, 0, 0]),
                LatticeVector::from_i64(&[0, 1, 0, 0]),
                LatticeVector::from_i64(&[0, 0, 1, 0]),
                LatticeVector::from_i64(&[0, 0, 0, 1]),
            ],
            4,
        );
        ToricData::from_fano(p).unwrap()
    }

    fn k3_ideal() -> MonomialIdeal {
        MonomialIdeal::new(
            5,
            vec![
                LatticeVector::from_i64(&[1, 1, 0, 0, 0]),
                LatticeVector::from_i64(&[0, 0, 1, 1, 1]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn ideal_reduction() {
        let i = MonomialIdeal::new(
            2,
            vec![
                LatticeVector::from_i64(&[1, 0]),
                LatticeVector::from_i64(&[1, 1]),
                LatticeVector::from_i64(&[1, 0]),
            ],
        )
        .unwrap();
        assert_eq!(i.generators().len(), 1);
        let u = MonomialIdeal::new(
            2,
            vec![
                LatticeVector::from_i64(&[0, 0]),
                LatticeVector::from_i64(&[1, 1]),
            ],
        )
        .unwrap();
        assert!(u.is_unit());
        assert_eq!(u.generators().len(), 1);
    }

    #[test]
    fn k3_complex_matches_session() {
        let t = p4();
        let c = ideal_to_complex(&k3_ideal(), &t).unwrap();
        assert_eq!(c.fvector().0, vec![1, 5, 9, 6, 0, 0]);
        let expected: Vec<BTreeSet<usize>> = vec![
            [0, 2, 3].into_iter().collect(),
            [0, 2, 4].into_iter().collect(),
            [0, 3, 4].into_iter().collect(),
            [1, 2, 3].into_iter().collect(),
            [1, 2, 4].into_iter().collect(),
            [1, 3, 4].into_iter().collect(),
        ];
        assert_eq!(c.facet_vertex_sets(), expected);
    }

    #[test]
    fn triangle_boundary_complex() {
        let t = p2();
        let i = MonomialIdeal::new(3, vec![LatticeVector::from_i64(&[1, 1, 1])]).unwrap();
        let c = ideal_to_complex(&i, &t).unwrap();
        assert_eq!(c.fvector().0, vec![1, 3, 3, 0]);
        // Round trip.
        let back = complex_to_ideal(&c, &t);
        assert_eq!(&back, &i);
    }

    #[test]
    fn unit_ideal_empty_complex() {
        let t = p2();
        let c = ideal_to_complex(&MonomialIdeal::unit(3), &t).unwrap();
        assert!(c.is_empty_complex());
        let back = complex_to_ideal(&c, &t);
        assert!(back.is_unit());
    }

    #[test]
    fn k3_round_trip() {
        let t = p4();
        let i = k3_ideal();
        let c = ideal_to_complex(&i, &t).unwrap();
        let back = complex_to_ideal(&c, &t);
        assert_eq!(back, i);
    }

    #[test]
    fn strata_on_p2_single_variable() {
        let t = p2();
        // V(x0): one coordinate line; the strata complex is the facet of
        // Delta dual to ray 0, plus subfaces.
        let i = MonomialIdeal::new(3, vec![LatticeVector::from_i64(&[1, 0, 0])]).unwrap();
        let s = strata_subcomplex(&i, &t).unwrap();
        // One edge, its two vertices, and the empty face.
        assert_eq!(s.fvector().0, vec![1, 2, 1, 0]);
        let lattice = s.polytope.face_lattice();
        let max = s.facets();
        assert_eq!(max.len(), 1);
        assert!(lattice.face(max[0]).facet_set.contains(&0));
    }

    #[test]
    fn strata_full_boundary_for_product_ideal() {
        // <x0...x4> on projective 4-space: all proper faces of Delta.
        let t = p4();
        let i = MonomialIdeal::new(5, vec![LatticeVector::from_i64(&[1, 1, 1, 1, 1])]).unwrap();
        let s = strata_subcomplex(&i, &t).unwrap();
        assert_eq!(s.fvector().0, vec![1, 5, 10, 10, 5, 0]);
        let report = sphere_proxy_check(&s).unwrap();
        assert!(report.passes(), "boundary sphere must pass: {:?}", report);
    }

    #[test]
    fn k3_strata_is_2_sphere_with_reversed_counts() {
        let t = p4();
        let s = strata_subcomplex(&k3_ideal(), &t).unwrap();
        assert_eq!(s.fvector().0, vec![1, 5, 9, 6, 0, 0]);
        let report = sphere_proxy_check(&s).unwrap();
        assert!(report.passes(), "{:?}", report);
        assert_eq!(report.euler_characteristic, 2);
    }

    #[test]
    fn dualize_involution() {
        let t = p4();
        let c = ideal_to_complex(&k3_ideal(), &t).unwrap();
        let delta = t.delta().clone();
        let cc = dualize_complex(&c, &delta).unwrap();
        // Counts land on the complementary dimensions, with the trailing
        // slot for the full polytope (dual of the empty face).
        assert_eq!(cc.fvector().0, vec![0, 0, 6, 9, 5, 1]);
        let back = dualize_cocomplex(&cc, t.fano()).unwrap();
        assert_eq!(back.faces, c.faces);
    }

    #[test]
    fn sphere_check_behaviour() {
        let hexagon = Polytope::convex_hull_lattice(
            &[
                LatticeVector::from_i64(&[1, 0]),
                LatticeVector::from_i64(&[1, 1]),
                LatticeVector::from_i64(&[0, 1]),
                LatticeVector::from_i64(&[-1, 0]),
                LatticeVector::from_i64(&[-1, -1]),
                LatticeVector::from_i64(&[0, -1]),
            ],
            2,
        );
        let polytope = Arc::new(hexagon);
        let lattice = polytope.face_lattice();
        let all: BTreeSet<usize> = (0..lattice.len())
            .filter(|&i| lattice.face(i).dim <= 1)
            .collect();
        let full = EmbeddedComplex {
            polytope: polytope.clone(),
            faces: all,
        };
        let report = sphere_proxy_check(&full).unwrap();
        assert!(report.passes());

        // Removing an edge breaks the ridge-in-two-facets condition.
        let mut faces = full.faces.clone();
        let edges: Vec<usize> = lattice.faces_of_dim(1);
        faces.remove(&edges[0]);
        let broken = EmbeddedComplex {
            polytope: polytope.clone(),
            faces,
        };
        let report = sphere_proxy_check(&broken).unwrap();
        assert!(!report.pseudomanifold);
        assert!(!report.passes());
    }

    /// Two disjoint square boundaries on a cube: a pseudomanifold with the
    /// right Euler characteristic that fails connectivity.
    #[test]
    fn sphere_check_rejects_disconnected() {
        let cube = Polytope::convex_hull_lattice(
            &[
                LatticeVector::from_i64(&[1, 1, 1]),
                LatticeVector::from_i64(&[1, 1, -1]),
                LatticeVector::from_i64(&[1, -1, 1]),
                LatticeVector::from_i64(&[1, -1, -1]),
                LatticeVector::from_i64(&[-1, 1, 1]),
                LatticeVector::from_i64(&[-1, 1, -1]),
                LatticeVector::from_i64(&[-1, -1, 1]),
                LatticeVector::from_i64(&[-1, -1, -1]),
            ],
            3,
        );
        let polytope = Arc::new(cube);
        let lattice = polytope.face_lattice();
        // Faces lying in one of the two opposite facets x = 1 and x = -1,
        // of dimension at most 1: two disjoint 4-cycles.
        let top: BTreeSet<usize> = (0..4).collect();
        let bottom: BTreeSet<usize> = (4..8).collect();
        let faces: BTreeSet<usize> = (0..lattice.len())
            .filter(|&i| {
                let f = lattice.face(i);
                f.dim <= 1
                    && (f.vertex_set.is_subset(&top) || f.vertex_set.is_subset(&bottom))
            })
            .collect();
        let c = EmbeddedComplex { polytope, faces };
        let report = sphere_proxy_check(&c).unwrap();
        assert!(report.pseudomanifold);
        assert!(!report.strongly_connected);
        assert!(!report.passes());
    }

    #[test]
    fn simplex_boundary_passes_sphere_check() {
        let t = p4();
        let polytope = t.fano().clone();
        let lattice = polytope.face_lattice();
        let boundary: BTreeSet<usize> = (0..lattice.len())
            .filter(|&i| lattice.face(i).dim < 4)
            .collect();
        let c = EmbeddedComplex {
            polytope,
            faces: boundary,
        };
        let report = sphere_proxy_check(&c).unwrap();
        assert!(report.passes());
        assert_eq!(report.dim, 3);
    }
}
