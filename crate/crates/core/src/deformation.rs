//! Torus-invariant degree-0 first-order deformations of a reduced monomial
//! ideal.
//!
//! A character direction is a lattice point alpha together with the shifted
//! generator images x^{exp(m) + A alpha}, truncated to zero when the shift
//! leaves the positive orthant or lands in the ideal. A direction is kept
//! when the images are compatible with all pairwise lcm syzygies modulo the
//! ideal and at least one image is nonzero.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::srcomplex::MonomialIdeal;
use crate::toric::{ToricData, TorusDivisor};

/// One character deformation: the lattice point and the per-generator
/// images (`None` is the zero image).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationDirection {
    pub alpha: LatticeVector,
    pub images: Vec<Option<LatticeVector>>,
}

impl DeformationDirection {
    pub fn moved_generators(&self) -> Vec<usize> {
        (0..self.images.len())
            .filter(|&i| self.images[i].is_some())
            .collect()
    }
}

/// The torus-invariant basis of the degree-0 tangent space, one direction
/// per lattice point, alphas pairwise distinct and sorted.
#[derive(Debug, Clone)]
pub struct PT1Basis {
    pub directions: Vec<DeformationDirection>,
}

impl PT1Basis {
    pub fn alphas(&self) -> Vec<LatticeVector> {
        self.directions.iter().map(|d| d.alpha.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.directions.is_empty()
    }
}

/// All lattice points alpha with `A alpha + exp(m) >= 0` for at least one
/// generator m: the union of the section polytopes of the generator
/// divisors.
pub fn candidate_points(i0: &MonomialIdeal, t: &ToricData) -> Result<Vec<LatticeVector>> {
    let mut points = Vec::new();
    for g in i0.generators() {
        let poly = t
            .divisor_polytope(&TorusDivisor(g.clone()))
            .map_err(|e| match e {
                Error::Unbounded => Error::UnboundedCandidatePolytope,
                other => other,
            })?;
        points.extend(poly.lattice_points());
    }
    points.sort();
    points.dedup();
    Ok(points)
}

/// The character homomorphism attached to a lattice point, if it is nonzero
/// and compatible with all pairwise syzygies.
pub fn hom_from_point(
    alpha: &LatticeVector,
    i0: &MonomialIdeal,
    t: &ToricData,
) -> Option<DeformationDirection> {
    let shift = t.character_exponents(alpha);
    let images: Vec<Option<LatticeVector>> = i0
        .generators()
        .iter()
        .map(|g| {
            let e = g + &shift;
            if e.0.iter().any(|v| v.is_negative()) || i0.contains_monomial(&e) {
                None
            } else {
                Some(e)
            }
        })
        .collect();
    if images.iter().all(|im| im.is_none()) {
        return None;
    }
    // Pairwise Taylor syzygies: (lcm/m_i) * image_i == (lcm/m_j) * image_j
    // in S/I0. Each side is a single monomial or zero.
    let gens = i0.generators();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let lcm = LatticeVector(
                gens[i]
                    .0
                    .iter()
                    .zip(&gens[j].0)
                    .map(|(a, b)| a.max(b).clone())
                    .collect(),
            );
            let side = |k: usize| -> Option<LatticeVector> {
                let im = images[k].as_ref()?;
                let m = &(&lcm - &gens[k]) + im;
                if i0.contains_monomial(&m) {
                    None
                } else {
                    Some(m)
                }
            };
            if side(i) != side(j) {
                return None;
            }
        }
    }
    Some(DeformationDirection {
        alpha: alpha.clone(),
        images,
    })
}

/// Basis of the degree-0 deformations: all nonzero directions over the
/// candidate points. The ideal must be reduced and Pic-generated.
pub fn pt1_basis(i0: &MonomialIdeal, t: &ToricData) -> Result<PT1Basis> {
    if !i0.is_squarefree() {
        return Err(Error::InvalidInput(
            "ideal must be reduced (squarefree)".into(),
        ));
    }
    for g in i0.generators() {
        let class = t.degree(&TorusDivisor(g.clone()));
        if !t.is_class_cartier(&class) {
            return Err(Error::InvalidInput(
                "ideal is not Pic-generated: a generator class is not Cartier".into(),
            ));
        }
    }
    let directions = candidate_points(i0, t)?
        .iter()
        .filter_map(|alpha| hom_from_point(alpha, i0, t))
        .collect();
    Ok(PT1Basis { directions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::Polytope;

    fn toric(vertices: &[&[i64]], n: usize) -> ToricData {
        let pts: Vec<LatticeVector> =
            vertices.iter().map(|v| LatticeVector::from_i64(v)).collect();
        ToricData::from_fano(Polytope::convex_hull_lattice(&pts, n)).unwrap()
    }

    fn p2() -> ToricData {
        toric(&[&[-1, -1], &[1, 0], &[0, 1]], 2)
    }

    fn p4() -> ToricData {
        toric(
            &[
                &[-1, -1, -1, -1],
                &[1, 0, 0, 0],
                &[0, 1, 0, 0],
                &[0, 0, 1, 0],
                &[0, 0, 0, 1],
            ],
            4,
        )
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
    fn candidates_on_p2_anticanonical() {
        let t = p2();
        let i = MonomialIdeal::new(3, vec![LatticeVector::from_i64(&[1, 1, 1])]).unwrap();
        let c = candidate_points(&i, &t).unwrap();
        assert_eq!(c.len(), 10);
        // They are exactly the lattice points of the dual triangle.
        let delta = t.delta();
        assert!(c.iter().all(|p| delta.contains_lattice(p)));
    }

    #[test]
    fn candidates_on_k3_are_union_of_section_polytopes() {
        let t = p4();
        let c = candidate_points(&k3_ideal(), &t).unwrap();
        let d1 = t
            .divisor_polytope(&TorusDivisor::from_i64(&[1, 1, 0, 0, 0]))
            .unwrap();
        let d2 = t
            .divisor_polytope(&TorusDivisor::from_i64(&[0, 0, 1, 1, 1]))
            .unwrap();
        let mut union = d1.lattice_points();
        union.extend(d2.lattice_points());
        union.sort();
        union.dedup();
        assert_eq!(c, union);
    }

    #[test]
    fn single_generator_candidates() {
        let t = p2();
        let i = MonomialIdeal::new(3, vec![LatticeVector::from_i64(&[1, 0, 0])]).unwrap();
        let c = candidate_points(&i, &t).unwrap();
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn zero_point_gives_zero_map() {
        let t = p2();
        let i = MonomialIdeal::new(3, vec![LatticeVector::from_i64(&[1, 1, 1])]).unwrap();
        assert!(hom_from_point(&LatticeVector::from_i64(&[0, 0]), &i, &t).is_none());
    }

    #[test]
    fn k3_quadric_mover() {
        let t = p4();
        let i = k3_ideal();
        // alpha with A alpha = exponent(x2^2/(x0 x1)). Generators are kept
        // sorted, so the cubic x2 x3 x4 comes first and the quadric second.
        let alpha = LatticeVector::from_i64(&[-1, 2, 0, 0]);
        let d = hom_from_point(&alpha, &i, &t).expect("valid direction");
        assert_eq!(d.images[1], Some(LatticeVector::from_i64(&[0, 0, 2, 0, 0])));
        assert_eq!(d.images[0], None);
        assert_eq!(d.moved_generators(), vec![1]);
    }

    #[test]
    fn principal_ideal_direction() {
        let t = p2();
        let i = MonomialIdeal::new(3, vec![LatticeVector::from_i64(&[1, 1, 1])]).unwrap();
        // A alpha = (2,-1,-1): alpha = (-1,-1) for rays (-1,-1),(1,0),(0,1).
        let alpha = LatticeVector::from_i64(&[-1, -1]);
        let d = hom_from_point(&alpha, &i, &t).expect("valid direction");
        assert_eq!(d.images[0], Some(LatticeVector::from_i64(&[3, 0, 0])));
    }

    #[test]
    fn elliptic_basis_has_nine_directions() {
        let t = p2();
        let i = MonomialIdeal::new(3, vec![LatticeVector::from_i64(&[1, 1, 1])]).unwrap();
        let basis = pt1_basis(&i, &t).unwrap();
        assert_eq!(basis.len(), 9);
        // Injectivity: alphas pairwise distinct.
        let mut alphas = basis.alphas();
        alphas.dedup();
        assert_eq!(alphas.len(), 9);
        // The zero point is not among them.
        assert!(alphas.iter().all(|a| !a.is_zero()));
    }

    #[test]
    fn k3_basis_has_43_directions() {
        let t = p4();
        let basis = pt1_basis(&k3_ideal(), &t).unwrap();
        assert_eq!(basis.len(), 43);
        // 14 directions move the quadric generator, 29 move the cubic one
        // (sorted generator order: cubic first).
        let cubic = basis
            .directions
            .iter()
            .filter(|d| d.images[0].is_some())
            .count();
        let quadric = basis
            .directions
            .iter()
            .filter(|d| d.images[1].is_some())
            .count();
        assert_eq!((quadric, cubic), (14, 29));
        // No direction moves both generators at once here.
        assert!(basis
            .directions
            .iter()
            .all(|d| d.moved_generators().len() == 1));
    }

    #[test]
    fn quintic_basis_is_boundaryless_sections() {
        let t = p4();
        let i = MonomialIdeal::new(5, vec![LatticeVector::from_i64(&[1, 1, 1, 1, 1])]).unwrap();
        let basis = pt1_basis(&i, &t).unwrap();
        // 126 anticanonical sections, minus the single multiple of the
        // generator (alpha = 0).
        assert_eq!(basis.len(), 125);
    }
}
