//! Toric data attached to a Fano polytope.
//!
//! The fan is the face fan of the polytope; the Cox ring is graded by the
//! divisor class group, presented as the cokernel of the ray matrix acting
//! on the character lattice. Torsion is carried exactly through Smith normal
//! form, so class comparisons are never rank-only.

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    kernel_basis, smith_normal_form, solve_integer, Int, IntegerMatrix, LatticeVector, Rat,
    RationalVector, SmithDecomposition,
};
use crate::polytope::Polytope;
use crate::srcomplex::MonomialIdeal;

/// A torus-invariant Weil divisor, one integer coefficient per ray.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TorusDivisor(pub LatticeVector);

impl TorusDivisor {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        TorusDivisor(LatticeVector::from_i64(coeffs))
    }

    pub fn zero(rays: usize) -> Self {
        TorusDivisor(LatticeVector::zeros(rays))
    }
}

/// An element of the divisor class group: free part plus torsion part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DivisorClass {
    pub free: Vec<Int>,
    /// Residues modulo the elementary divisors greater than one, reduced to
    /// the range 0..d.
    pub torsion: Vec<Int>,
}

impl DivisorClass {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|v| v.is_zero()) && self.torsion.iter().all(|v| v.is_zero())
    }
}

/// A monomial in the Cox variables; Laurent exponents are permitted only
/// where a degree-0 shift is meant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoxMonomial {
    pub exponents: LatticeVector,
}

impl CoxMonomial {
    pub fn is_laurent(&self) -> bool {
        self.exponents.0.iter().any(|e| e.is_negative())
    }
}

/// Fan, grading and divisor machinery of the toric variety of a Fano
/// polytope.
#[derive(Debug)]
pub struct ToricData {
    fano: Arc<Polytope>,
    rays: Vec<LatticeVector>,
    ray_matrix: IntegerMatrix,
    max_cones: Vec<BTreeSet<usize>>,
    snf: SmithDecomposition,
    /// Indices i with elementary divisor > 1 (torsion rows of the SNF).
    torsion_rows: Vec<usize>,
    dual: OnceLock<Arc<Polytope>>,
}

impl ToricData {
    /// Builds the toric data of a Fano polytope: rays are the primitivized
    /// vertices in vertex order, maximal cones are the facets.
    pub fn from_fano(p: Polytope) -> Result<ToricData> {
        if !p.is_full_dimensional() {
            return Err(Error::NotFano("not full-dimensional".into()));
        }
        if !p.is_lattice_polytope() {
            return Err(Error::NotFano("vertices are not lattice points".into()));
        }
        let interior = p.interior_lattice_points();
        if interior.len() != 1 || !interior[0].is_zero() {
            return Err(Error::NotFano(
                "0 is not the unique interior lattice point".into(),
            ));
        }
        let rays: Vec<LatticeVector> = p
            .vertices()
            .iter()
            .map(|v| v.to_lattice().primitive())
            .collect();
        let n = p.ambient_dim();
        let ray_matrix = IntegerMatrix::from_rows(rays.clone(), n);
        let max_cones: Vec<BTreeSet<usize>> = (0..p.facets().len())
            .map(|f| p.facet_vertex_set(f))
            .collect();
        let snf = smith_normal_form(&ray_matrix);
        if snf.diagonal.len() < n || snf.diagonal.iter().take(n).any(|d| d.is_zero()) {
            return Err(Error::NotFano("ray matrix does not have full rank".into()));
        }
        let torsion_rows = (0..n)
            .filter(|&i| !snf.diagonal[i].is_one())
            .collect();
        Ok(ToricData {
            fano: Arc::new(p),
            rays,
            ray_matrix,
            max_cones,
            snf,
            torsion_rows,
            dual: OnceLock::new(),
        })
    }

    pub fn fano(&self) -> &Arc<Polytope> {
        &self.fano
    }

    /// The dual polytope (polytope of the anticanonical sections), cached.
    pub fn delta(&self) -> &Arc<Polytope> {
        self.dual.get_or_init(|| {
            Arc::new(
                self.fano
                    .polar_dual()
                    .expect("Fano polytope has 0 interior"),
            )
        })
    }

    pub fn dim(&self) -> usize {
        self.fano.ambient_dim()
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn ray_matrix(&self) -> &IntegerMatrix {
        &self.ray_matrix
    }

    pub fn max_cones(&self) -> &[BTreeSet<usize>] {
        &self.max_cones
    }

    /// Rank of the free part of the class group.
    pub fn class_rank(&self) -> usize {
        self.num_rays() - self.dim()
    }

    /// Elementary divisors greater than one.
    pub fn class_torsion(&self) -> Vec<Int> {
        self.torsion_rows
            .iter()
            .map(|&i| self.snf.diagonal[i].clone())
            .collect()
    }

    /// The image of the character lattice: exponent vector `A alpha`.
    pub fn character_exponents(&self, alpha: &LatticeVector) -> LatticeVector {
        self.ray_matrix.mul_vec(alpha)
    }

    /// Degree of a divisor in the presented cokernel.
    pub fn degree(&self, d: &TorusDivisor) -> DivisorClass {
        assert_eq!(d.0.rank(), self.num_rays(), "divisor length mismatch");
        let y = self.snf.left.mul_vec(&d.0);
        let n = self.dim();
        let free = y.0[n..].to_vec();
        let torsion = self
            .torsion_rows
            .iter()
            .map(|&i| {
                let m = &self.snf.diagonal[i];
                ((&y[i] % m) + m) % m
            })
            .collect();
        DivisorClass { free, torsion }
    }

    pub fn monomial_degree(&self, m: &CoxMonomial) -> DivisorClass {
        self.degree(&TorusDivisor(m.exponents.clone()))
    }

    /// Scales a class by an integer.
    pub fn scale_class(&self, c: &DivisorClass, k: &Int) -> DivisorClass {
        let free = c.free.iter().map(|v| v * k).collect();
        let torsion = self
            .torsion_rows
            .iter()
            .zip(&c.torsion)
            .map(|(&i, v)| {
                let m = &self.snf.diagonal[i];
                (((v * k) % m) + m) % m
            })
            .collect();
        DivisorClass { free, torsion }
    }

    /// A divisor representing the given class (inverse of `degree` up to
    /// linear equivalence).
    pub fn class_representative(&self, c: &DivisorClass) -> TorusDivisor {
        let n = self.dim();
        let r = self.num_rays();
        assert_eq!(c.free.len(), r - n, "free part length mismatch");
        assert_eq!(c.torsion.len(), self.torsion_rows.len());
        let mut y = vec![Int::zero(); r];
        for (slot, &row) in self.torsion_rows.iter().enumerate() {
            y[row] = c.torsion[slot].clone();
        }
        for (j, v) in c.free.iter().enumerate() {
            y[n + j] = v.clone();
        }
        let a = solve_integer(&self.snf.left, &LatticeVector(y))
            .expect("left SNF transform is unimodular");
        debug_assert_eq!(&self.degree(&TorusDivisor(a.clone())), c);
        TorusDivisor(a)
    }

    /// The anticanonical divisor: sum of all prime torus divisors.
    pub fn anticanonical(&self) -> TorusDivisor {
        TorusDivisor(LatticeVector(vec![Int::one(); self.num_rays()]))
    }

    /// Section polytope `{m : <m, ray> >= -a_ray}` of a divisor; may be
    /// empty or lower-dimensional, and unbounded input is an error.
    pub fn divisor_polytope(&self, d: &TorusDivisor) -> Result<Polytope> {
        assert_eq!(d.0.rank(), self.num_rays(), "divisor length mismatch");
        let ineqs: Vec<(LatticeVector, Rat)> = self
            .rays
            .iter()
            .zip(&d.0 .0)
            .map(|(r, a)| (r.clone(), Rat::from(a.clone())))
            .collect();
        Polytope::from_inequalities(self.dim(), &ineqs, &[])
    }

    /// Monomial basis of the sections of a divisor class: `x^{A alpha + a}`
    /// over the lattice points of the section polytope of the representative.
    pub fn sections_basis(
        &self,
        class: &DivisorClass,
        representative: &TorusDivisor,
    ) -> Result<Vec<CoxMonomial>> {
        if &self.degree(representative) != class {
            return Err(Error::InvalidInput(
                "representative does not have the stated class".into(),
            ));
        }
        let delta = self.divisor_polytope(representative)?;
        Ok(delta
            .lattice_points()
            .into_iter()
            .map(|alpha| CoxMonomial {
                exponents: &self.character_exponents(&alpha) + &representative.0,
            })
            .collect())
    }

    /// Cartier certificates: for each maximal cone the lattice point with
    /// `<m_sigma, ray> = -a_ray` on the cone's rays, if it exists.
    pub fn cartier_certificates(&self, d: &TorusDivisor) -> Vec<Option<LatticeVector>> {
        self.max_cones
            .iter()
            .map(|cone| {
                let rows: Vec<LatticeVector> =
                    cone.iter().map(|&r| self.rays[r].clone()).collect();
                let rhs = LatticeVector(cone.iter().map(|&r| -d.0[r].clone()).collect());
                solve_integer(&IntegerMatrix::from_rows(rows, self.dim()), &rhs)
            })
            .collect()
    }

    pub fn is_cartier(&self, d: &TorusDivisor) -> bool {
        self.cartier_certificates(d).iter().all(|c| c.is_some())
    }

    /// Nef test: Cartier and `<m_sigma, ray> >= -a_ray` globally.
    pub fn is_nef(&self, d: &TorusDivisor) -> Result<bool> {
        let certs = self.cartier_certificates(d);
        if certs.iter().any(|c| c.is_none()) {
            return Err(Error::NotCartier(format!("divisor {:?}", d.0 .0)));
        }
        for m in certs.into_iter().flatten() {
            for (r, a) in self.rays.iter().zip(&d.0 .0) {
                if m.dot(r) < -a.clone() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_class_cartier(&self, c: &DivisorClass) -> bool {
        self.is_cartier(&self.class_representative(c))
    }

    /// Smallest positive k with k*c Cartier, up to the bound.
    pub fn cartier_multiple(&self, c: &DivisorClass, bound: u32) -> Option<u32> {
        (1..=bound).find(|&k| self.is_class_cartier(&self.scale_class(c, &Int::from(k))))
    }

    /// Generators of the subgroup of Cartier divisor classes inside the
    /// class group. Computed as the projection of the integer kernel of the
    /// stacked per-cone Cartier conditions.
    pub fn picard_sublattice(&self) -> Vec<DivisorClass> {
        let r = self.num_rays();
        let n = self.dim();
        // Conditions per cone sigma on a in Z^rays: with U_s A_s V_s = D_s,
        // (U_s a_s)_i = 0 for rows past the diagonal, and = d_i * t for
        // torsion rows (auxiliary unknowns t).
        struct Row {
            coeffs: Vec<Int>,
            modulus: Option<Int>,
        }
        let mut rows: Vec<Row> = Vec::new();
        for cone in &self.max_cones {
            let ids: Vec<usize> = cone.iter().copied().collect();
            let mat = IntegerMatrix::from_rows(
                ids.iter().map(|&i| self.rays[i].clone()).collect(),
                n,
            );
            let s = smith_normal_form(&mat);
            let k = ids.len();
            for i in 0..k {
                let mut coeffs = vec![Int::zero(); r];
                for (j, &ray) in ids.iter().enumerate() {
                    coeffs[ray] = s.left.at(i, j).clone();
                }
                if i < n {
                    if s.diagonal[i].is_one() {
                        continue;
                    }
                    rows.push(Row {
                        coeffs,
                        modulus: Some(s.diagonal[i].clone()),
                    });
                } else {
                    rows.push(Row {
                        coeffs,
                        modulus: None,
                    });
                }
            }
        }
        let aux = rows.iter().filter(|r| r.modulus.is_some()).count();
        let mut big = IntegerMatrix::zeros(rows.len(), r + aux);
        let mut slot = 0;
        for (i, row) in rows.iter().enumerate() {
            for (j, c) in row.coeffs.iter().enumerate() {
                *big.at_mut(i, j) = c.clone();
            }
            if let Some(m) = &row.modulus {
                *big.at_mut(i, r + slot) = -m.clone();
                slot += 1;
            }
        }
        let kernel = kernel_basis(&big);
        let mut gens: Vec<DivisorClass> = Vec::new();
        for c in 0..kernel.cols {
            let a = LatticeVector(kernel.col(c).0[..r].to_vec());
            let class = self.degree(&TorusDivisor(a));
            if !class.is_zero() && !gens.contains(&class) {
                gens.push(class);
            }
        }
        gens.sort();
        gens
    }

    /// The irrelevant ideal: one squarefree generator per maximal cone,
    /// the product over rays outside that cone, reduced.
    pub fn irrelevant_ideal(&self) -> MonomialIdeal {
        let r = self.num_rays();
        let gens: Vec<LatticeVector> = self
            .max_cones
            .iter()
            .map(|cone| {
                LatticeVector(
                    (0..r)
                        .map(|i| if cone.contains(&i) { Int::zero() } else { Int::one() })
                        .collect(),
                )
            })
            .collect();
        MonomialIdeal::new(r, gens).expect("squarefree generators are valid")
    }

    /// Lift of a weight vector into the Cox weight space: `A w`.
    pub fn weight_lift(&self, w: &RationalVector) -> RationalVector {
        assert_eq!(w.rank(), self.dim(), "weight vector length mismatch");
        self.ray_matrix.mul_vec_rat(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::int;

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

    fn p112() -> ToricData {
        let p = Polytope::convex_hull_lattice(
            &[
                LatticeVector::from_i64(&[1, 0]),
                LatticeVector::from_i64(&[0, 1]),
                LatticeVector::from_i64(&[-1, -2]),
            ],
            2,
        );
        ToricData::from_fano(p).unwrap()
    }

    #[test]
    fn p2_class_group() {
        let t = p2();
        assert_eq!(t.num_rays(), 3);
        assert_eq!(t.class_rank(), 1);
        assert!(t.class_torsion().is_empty());
        // All three prime divisors have the same class, generating Z.
        let classes: Vec<DivisorClass> = (0..3)
            .map(|i| {
                let mut coeffs = vec![0i64; 3];
                coeffs[i] = 1;
                t.degree(&TorusDivisor::from_i64(&coeffs))
            })
            .collect();
        assert!(classes.iter().all(|c| c == &classes[0]));
        assert_eq!(classes[0].free.len(), 1);
        assert!(classes[0].free[0].clone().abs().is_one());
    }

    #[test]
    fn p4_from_fano() {
        let t = p4();
        assert_eq!(t.num_rays(), 5);
        assert_eq!(t.class_rank(), 1);
        assert!(t.class_torsion().is_empty());
        assert_eq!(t.max_cones().len(), 5);
        // deg o A = 0: characters have degree zero.
        let alpha = LatticeVector::from_i64(&[2, -1, 3, 5]);
        let e = t.character_exponents(&alpha);
        assert!(t.degree(&TorusDivisor(e)).is_zero());
    }

    #[test]
    fn rejects_non_fano() {
        // Unit square: 0 is not interior.
        let square = Polytope::convex_hull_lattice(
            &[
                LatticeVector::from_i64(&[0, 0]),
                LatticeVector::from_i64(&[1, 0]),
                LatticeVector::from_i64(&[0, 1]),
                LatticeVector::from_i64(&[1, 1]),
            ],
            2,
        );
        assert!(matches!(
            ToricData::from_fano(square),
            Err(Error::NotFano(_))
        ));
    }

    #[test]
    fn divisor_polytopes_on_p2_and_p4() {
        let t = p2();
        // One ray divisor: a unit triangle with 3 lattice points.
        let d = TorusDivisor::from_i64(&[1, 0, 0]);
        let tri = t.divisor_polytope(&d).unwrap();
        assert_eq!(tri.lattice_points().len(), 3);

        let t4 = p4();
        let antik = t4.divisor_polytope(&t4.anticanonical()).unwrap();
        assert_eq!(antik.lattice_points().len(), 126);
        // Quadric block of the K3 partition: 15 monomials.
        let e1 = TorusDivisor::from_i64(&[1, 1, 0, 0, 0]);
        let d1 = t4.divisor_polytope(&e1).unwrap();
        assert_eq!(d1.lattice_points().len(), 15);
        // Negative divisor: empty sections.
        let neg = TorusDivisor::from_i64(&[-1, 0, 0, 0, 0]);
        let e = t4.divisor_polytope(&neg).unwrap();
        assert!(e.is_empty_polytope());
    }

    #[test]
    fn anticanonical_polytope_is_polar_dual() {
        for t in [p2(), p4(), p112()] {
            let d = t.divisor_polytope(&t.anticanonical()).unwrap();
            assert_eq!(d.vertex_coords_set(), t.delta().vertex_coords_set());
        }
    }

    #[test]
    fn sections_counts() {
        let t = p2();
        let line = t.degree(&TorusDivisor::from_i64(&[1, 0, 0]));
        let basis = t
            .sections_basis(&line, &TorusDivisor::from_i64(&[1, 0, 0]))
            .unwrap();
        assert_eq!(basis.len(), 3);
        // Each section monomial has the right class.
        for m in &basis {
            assert_eq!(t.monomial_degree(m), line);
        }

        let t4 = p4();
        for (k, expect) in [(2i64, 15usize), (3, 35)] {
            let rep = TorusDivisor::from_i64(&[k, 0, 0, 0, 0]);
            let class = t4.degree(&rep);
            let basis = t4.sections_basis(&class, &rep).unwrap();
            assert_eq!(basis.len(), expect);
            assert!(basis.iter().all(|m| !m.is_laurent()));
        }
    }

    #[test]
    fn cartier_and_nef() {
        let t4 = p4();
        // Everything is Cartier on a smooth variety.
        let d = TorusDivisor::from_i64(&[3, -1, 2, 0, 5]);
        assert!(t4.is_cartier(&d));
        // -K on a reflexive input, with certificates the dual vertices.
        let antik = t4.anticanonical();
        let certs = t4.cartier_certificates(&antik);
        let dual_vertices = t4.delta().vertex_coords_set();
        for c in certs {
            let m = c.unwrap();
            assert!(dual_vertices.contains(&m.to_rational()));
        }
        assert!(t4.is_nef(&antik).unwrap());
        // Nef partition block on P4.
        assert!(t4.is_nef(&TorusDivisor::from_i64(&[1, 1, 0, 0, 0])).unwrap());
        // Negative divisor on P2 is Cartier but not nef.
        let t = p2();
        assert!(!t.is_nef(&TorusDivisor::from_i64(&[-1, 0, 0])).unwrap());
        // Zero divisor is nef.
        assert!(t.is_nef(&TorusDivisor::zero(3)).unwrap());
    }

    #[test]
    fn weighted_p112_cartier_index() {
        let t = p112();
        // D_0 (coefficient on the ray (1,0)) fails on the singular cone
        // spanned by (1,0) and (-1,-2).
        let d0 = TorusDivisor::from_i64(&[1, 0, 0]);
        assert!(!t.is_cartier(&d0));
        assert!(matches!(t.is_nef(&d0), Err(Error::NotCartier(_))));
        // Its double is Cartier.
        let c = t.degree(&d0);
        assert_eq!(t.cartier_multiple(&c, 10), Some(2));
        // The Picard sublattice has index 2: every generator is even, and
        // some generator is exactly twice the ample generator.
        let pic = t.picard_sublattice();
        assert!(!pic.is_empty());
        let two = int(2);
        assert!(pic.iter().all(|g| (&g.free[0] % &two).is_zero()));
        assert!(pic.iter().any(|g| g.free[0].clone().abs() == two));
    }

    #[test]
    fn picard_on_smooth_is_everything() {
        let t = p2();
        let pic = t.picard_sublattice();
        assert!(pic.iter().any(|g| g.free[0].clone().abs().is_one()));
    }

    #[test]
    fn irrelevant_ideals() {
        let t = p2();
        let b = t.irrelevant_ideal();
        // <x0, x1, x2> after reduction.
        assert_eq!(b.generators().len(), 3);
        assert!(b
            .generators()
            .iter()
            .all(|g| g.0.iter().cloned().sum::<Int>().is_one()));
        let t4 = p4();
        assert_eq!(t4.irrelevant_ideal().generators().len(), 5);
    }

    #[test]
    fn p1xp1_irrelevant_ideal() {
        let p = Polytope::convex_hull_lattice(
            &[
                LatticeVector::from_i64(&[1, 0]),
                LatticeVector::from_i64(&[-1, 0]),
                LatticeVector::from_i64(&[0, 1]),
                LatticeVector::from_i64(&[0, -1]),
            ],
            2,
        );
        let t = ToricData::from_fano(p).unwrap();
        let b = t.irrelevant_ideal();
        // Four mixed products x_i x_j over non-opposite pairs.
        assert_eq!(b.generators().len(), 4);
        for g in b.generators() {
            let supp: Vec<usize> = (0..4).filter(|&i| g.0[i].is_one()).collect();
            assert_eq!(supp.len(), 2);
            let sum = &t.rays()[supp[0]] + &t.rays()[supp[1]];
            assert!(!sum.is_zero(), "opposite rays cannot share a generator");
        }
    }

    #[test]
    fn weight_lift_examples() {
        let t = p2();
        let w = RationalVector::from_i64(&[1, 0]);
        let lifted = t.weight_lift(&w);
        // Rays ordered (-1,-1),(1,0),(0,1).
        assert_eq!(lifted, RationalVector::from_i64(&[-1, 1, 0]));
        assert_eq!(
            t.weight_lift(&RationalVector::from_i64(&[0, 0])),
            RationalVector::from_i64(&[0, 0, 0])
        );
    }
}
