//! Exact lattice and rational polytopes.
//!
//! Both representations are kept at all times: vertices and an irredundant
//! set of facet inequalities `<normal, x> >= -offset`, with explicit affine
//! span equations for lower-dimensional polytopes. Hulls are computed by the
//! double description method applied to the polar (after translating a
//! relative interior point to the origin), so the same exact engine powers
//! V-to-H, H-to-V, and polar duality.

mod dd;
mod faces;

pub use faces::{FVector, Face, FaceLattice};

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    kernel_basis, Int, IntegerMatrix, LatticeVector, Rat, RationalVector,
};

/// One facet inequality `<normal, x> >= -offset` with a primitive integer
/// normal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FacetIneq {
    pub normal: LatticeVector,
    pub offset: Rat,
}

impl FacetIneq {
    pub fn eval(&self, p: &RationalVector) -> Rat {
        self.normal.dot_rat(p) + &self.offset
    }
}

/// A bounded convex polytope with exact dual representations.
#[derive(Debug)]
pub struct Polytope {
    ambient: usize,
    /// Affine dimension; -1 for the empty polytope.
    dim: i64,
    vertices: Vec<RationalVector>,
    facets: Vec<FacetIneq>,
    /// Equations `<e, x> = c` cutting out the affine span (empty when
    /// full-dimensional).
    span_eqs: Vec<(LatticeVector, Rat)>,
    /// incidence[v][f]: vertex v is tight on facet f.
    incidence: Vec<Vec<bool>>,
    lattice: OnceLock<FaceLattice>,
}

impl Clone for Polytope {
    fn clone(&self) -> Self {
        Polytope {
            ambient: self.ambient,
            dim: self.dim,
            vertices: self.vertices.clone(),
            facets: self.facets.clone(),
            span_eqs: self.span_eqs.clone(),
            incidence: self.incidence.clone(),
            lattice: OnceLock::new(),
        }
    }
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.vertex_coords_set() == other.vertex_coords_set()
    }
}
impl Eq for Polytope {}

/// Chooses an affinely independent spanning subset of difference vectors and
/// the pivot coordinates making them triangular.
struct AffineBasis {
    base: RationalVector,
    dirs: Vec<RationalVector>,
    pivots: Vec<usize>,
}

fn affine_basis(points: &[RationalVector]) -> AffineBasis {
    let base = points[0].clone();
    let n = base.rank();
    let mut dirs: Vec<RationalVector> = Vec::new();
    // Echelon rows over Q with recorded pivot columns.
    let mut echelon: Vec<(usize, RationalVector)> = Vec::new();
    for p in &points[1..] {
        let mut v = p - &base;
        for (piv, row) in &echelon {
            if !v[*piv].is_zero() {
                let f = v[*piv].clone();
                v = RationalVector(
                    v.0.iter()
                        .zip(&row.0)
                        .map(|(a, b)| a - &(b * &f))
                        .collect(),
                );
            }
        }
        if let Some(piv) = (0..n).find(|&i| !v[i].is_zero()) {
            let lead = v[piv].clone();
            let row = RationalVector(v.0.iter().map(|a| a / &lead).collect());
            echelon.push((piv, row));
            dirs.push(p - &base);
        }
    }
    let pivots = echelon.iter().map(|(p, _)| *p).collect();
    AffineBasis { base, dirs, pivots }
}

/// Solves a square rational system exactly by Gaussian elimination.
fn solve_square(m: &[Vec<Rat>], rhs: &[Rat]) -> Vec<Rat> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut v = row.clone();
            v.push(r.clone());
            v
        })
        .collect();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular system in solve_square");
        a.swap(col, p);
        let inv = a[col][col].clone();
        for c in col..=n {
            a[col][c] = &a[col][c] / &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=n {
                    let v = &a[col][c] * &f;
                    a[r][c] = &a[r][c] - &v;
                }
            }
        }
    }
    (0..n).map(|r| a[r][n].clone()).collect()
}

impl AffineBasis {
    fn dim(&self) -> usize {
        self.dirs.len()
    }

    /// Coordinates of an ambient point in this basis; panics if the point is
    /// outside the affine span.
    fn coords(&self, p: &RationalVector) -> RationalVector {
        let d = self.dim();
        let diff = p - &self.base;
        let m: Vec<Vec<Rat>> = self
            .pivots
            .iter()
            .map(|&row| (0..d).map(|j| self.dirs[j][row].clone()).collect())
            .collect();
        let rhs: Vec<Rat> = self.pivots.iter().map(|&row| diff[row].clone()).collect();
        let x = RationalVector(solve_square(&m, &rhs));
        // The point must reconstruct exactly.
        let mut rec = self.base.clone();
        for j in 0..d {
            rec = &rec + &self.dirs[j].scale(&x[j]);
        }
        assert_eq!(&rec, p, "point outside affine span");
        x
    }

    /// Transports a linear functional on span coordinates to an ambient
    /// functional supported on the pivot coordinates:
    /// `<result, p - base> = <g, coords(p)>`.
    fn ambient_functional(&self, g: &RationalVector) -> RationalVector {
        let d = self.dim();
        // Solve M^T nu = g where M[k][j] = dirs[j][pivots[k]].
        let mt: Vec<Vec<Rat>> = (0..d)
            .map(|j| {
                self.pivots
                    .iter()
                    .map(|&row| self.dirs[j][row].clone())
                    .collect()
            })
            .collect();
        let nu_p = solve_square(&mt, &g.0);
        let n = self.base.rank();
        let mut nu = RationalVector::zeros(n);
        for (k, &row) in self.pivots.iter().enumerate() {
            nu.0[row] = nu_p[k].clone();
        }
        nu
    }
}

/// Scales a rational inequality `<nu, x> >= -offset` to a primitive integer
/// normal.
fn primitivize_ineq(nu: &RationalVector, offset: &Rat) -> FacetIneq {
    let lcm = nu
        .0
        .iter()
        .fold(Int::one(), |acc, e| acc.lcm(e.denom()));
    let ints: Vec<Int> = nu.0.iter().map(|e| e.numer() * (&lcm / e.denom())).collect();
    let content = ints.iter().fold(Int::zero(), |acc, e| acc.gcd(e));
    assert!(!content.is_zero(), "zero facet normal");
    let normal = LatticeVector(ints.iter().map(|e| e / &content).collect());
    let scale = Rat::new(lcm, content);
    FacetIneq {
        normal,
        offset: offset * &scale,
    }
}

/// Homogenizes `<a, x> >= -o` to an integer constraint on (x0, x).
fn homogenize(normal: &LatticeVector, offset: &Rat) -> LatticeVector {
    let d = offset.denom().clone();
    let mut v = Vec::with_capacity(normal.rank() + 1);
    v.push(offset.numer().clone());
    for e in &normal.0 {
        v.push(e * &d);
    }
    LatticeVector(v).primitive()
}

impl Polytope {
    /// The empty polytope in the given ambient space.
    pub fn empty(ambient: usize) -> Polytope {
        Polytope {
            ambient,
            dim: -1,
            vertices: Vec::new(),
            facets: Vec::new(),
            span_eqs: Vec::new(),
            incidence: Vec::new(),
            lattice: OnceLock::new(),
        }
    }

    /// Convex hull of a nonempty point set; the result's vertices are a
    /// subset of the input, in input order. Lower-dimensional hulls record
    /// their affine span.
    pub fn convex_hull(points: &[RationalVector], ambient: usize) -> Polytope {
        assert!(!points.is_empty(), "convex hull of an empty point set");
        let mut seen = BTreeSet::new();
        let points: Vec<RationalVector> = points
            .iter()
            .filter(|p| {
                assert_eq!(p.rank(), ambient, "point of wrong dimension");
                seen.insert((*p).clone())
            })
            .cloned()
            .collect();

        let basis = affine_basis(&points);
        let d = basis.dim();

        let span_eqs = if d < ambient {
            let mut bint = IntegerMatrix::zeros(ambient, d);
            for (j, dir) in basis.dirs.iter().enumerate() {
                let prim = dir.primitive_direction();
                for r in 0..ambient {
                    *bint.at_mut(r, j) = prim[r].clone();
                }
            }
            let k = kernel_basis(&bint.transpose());
            (0..k.cols)
                .map(|c| {
                    let e = k.col(c).primitive();
                    let val = e.dot_rat(&basis.base);
                    (e, val)
                })
                .collect()
        } else {
            Vec::new()
        };

        if d == 0 {
            return Polytope {
                ambient,
                dim: 0,
                vertices: vec![points[0].clone()],
                facets: Vec::new(),
                span_eqs,
                incidence: vec![Vec::new()],
                lattice: OnceLock::new(),
            };
        }

        let coords: Vec<RationalVector> = points.iter().map(|p| basis.coords(p)).collect();
        let count = Rat::from(Int::from(coords.len() as i64));
        let mut center = RationalVector::zeros(d);
        for q in &coords {
            center = &center + q;
        }
        center = center.scale(&(Rat::one() / &count));

        // Polar trick in span coordinates: vertices of {y : <q - c, y> <= 1}
        // are the facet normals of the hull. Homogenized constraint for a
        // point q is (1, -(q - c)) >= 0.
        let mut constraints: Vec<LatticeVector> = coords
            .iter()
            .map(|q| {
                let shifted = q - &center;
                let mut h = Vec::with_capacity(d + 1);
                h.push(Rat::one());
                for e in &shifted.0 {
                    h.push(-e.clone());
                }
                RationalVector(h).primitive_direction()
            })
            .collect();
        constraints.push({
            let mut v = vec![Int::zero(); d + 1];
            v[0] = Int::one();
            LatticeVector(v)
        });
        let out = dd::extreme_rays(d + 1, &constraints);
        assert!(out.lineality.is_empty(), "polar of hull must be pointed");

        let mut facets: Vec<FacetIneq> = Vec::new();
        for ray in &out.rays {
            assert!(ray[0].is_positive(), "polar of hull must be bounded");
            let x0 = Rat::from(ray.0[0].clone());
            let w = RationalVector(
                ray.0[1..]
                    .iter()
                    .map(|e| Rat::from(e.clone()) / &x0)
                    .collect(),
            );
            // Facet in span coordinates: <-w, y> >= -(1 + <w, c>).
            let g = RationalVector(w.0.iter().map(|e| -e).collect());
            let o_span = Rat::one() + w.dot(&center);
            let nu = basis.ambient_functional(&g);
            let offset = &o_span - &nu.dot(&basis.base);
            facets.push(primitivize_ineq(&nu, &offset));
        }
        facets.sort();
        facets.dedup();

        // Vertices: input points whose tight facet normals span the full
        // span dimension.
        let tight_matrix: Vec<Vec<bool>> = points
            .iter()
            .map(|p| facets.iter().map(|f| f.eval(p).is_zero()).collect())
            .collect();
        let mut vertex_ids = Vec::new();
        for (i, tight) in tight_matrix.iter().enumerate() {
            let tight_ids: Vec<usize> =
                (0..facets.len()).filter(|&f| tight[f]).collect();
            if tight_ids.len() < d {
                continue;
            }
            let rows: Vec<LatticeVector> = tight_ids
                .iter()
                .map(|&f| facets[f].normal.clone())
                .collect();
            let m = IntegerMatrix::from_rows(rows, ambient);
            // Rank within the span: normals modulo the span equations; test
            // rank of the stacked system [normals; span_eqs] minus eq rank.
            let rank = if span_eqs.is_empty() {
                m.rank()
            } else {
                let mut all_rows: Vec<LatticeVector> =
                    span_eqs.iter().map(|(e, _)| e.clone()).collect();
                let eq_rank =
                    IntegerMatrix::from_rows(all_rows.clone(), ambient).rank();
                all_rows.extend(tight_ids.iter().map(|&f| facets[f].normal.clone()));
                IntegerMatrix::from_rows(all_rows, ambient).rank() - eq_rank
            };
            if rank == d {
                vertex_ids.push(i);
            }
        }
        let vertices: Vec<RationalVector> =
            vertex_ids.iter().map(|&i| points[i].clone()).collect();
        let incidence: Vec<Vec<bool>> = vertex_ids
            .iter()
            .map(|&i| tight_matrix[i].clone())
            .collect();

        let p = Polytope {
            ambient,
            dim: d as i64,
            vertices,
            facets,
            span_eqs,
            incidence,
            lattice: OnceLock::new(),
        };
        p.debug_validate();
        p
    }

    pub fn convex_hull_lattice(points: &[LatticeVector], ambient: usize) -> Polytope {
        let pts: Vec<RationalVector> = points.iter().map(|p| p.to_rational()).collect();
        Polytope::convex_hull(&pts, ambient)
    }

    /// Solves an H-representation into a polytope. Fails with `Unbounded` if
    /// the solution set is a nonempty unbounded polyhedron; an empty solution
    /// set yields the empty polytope.
    pub fn from_inequalities(
        ambient: usize,
        ineqs: &[(LatticeVector, Rat)],
        eqs: &[(LatticeVector, Rat)],
    ) -> Result<Polytope> {
        let mut constraints: Vec<LatticeVector> = Vec::new();
        for (a, o) in ineqs {
            constraints.push(homogenize(a, o));
        }
        for (e, c) in eqs {
            constraints.push(homogenize(e, &-c.clone()));
            constraints.push(homogenize(&-e, c));
        }
        let mut x0 = vec![Int::zero(); ambient + 1];
        x0[0] = Int::one();
        constraints.push(LatticeVector(x0));

        let out = dd::extreme_rays(ambient + 1, &constraints);
        let mut vertices = Vec::new();
        let mut recession = false;
        for ray in &out.rays {
            if ray[0].is_positive() {
                let x0 = Rat::from(ray.0[0].clone());
                vertices.push(RationalVector(
                    ray.0[1..]
                        .iter()
                        .map(|e| Rat::from(e.clone()) / &x0)
                        .collect(),
                ));
            } else {
                recession = true;
            }
        }
        if vertices.is_empty() {
            return Ok(Polytope::empty(ambient));
        }
        if recession || !out.lineality.is_empty() {
            return Err(Error::Unbounded);
        }
        Ok(Polytope::convex_hull(&vertices, ambient))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn is_empty_polytope(&self) -> bool {
        self.dim < 0
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient as i64
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[FacetIneq] {
        &self.facets
    }

    pub fn span_equations(&self) -> &[(LatticeVector, Rat)] {
        &self.span_eqs
    }

    pub fn vertex_coords_set(&self) -> BTreeSet<RationalVector> {
        self.vertices.iter().cloned().collect()
    }

    pub fn vertex_tight_on(&self, v: usize, f: usize) -> bool {
        self.incidence[v][f]
    }

    /// Vertex indices tight on a facet.
    pub fn facet_vertex_set(&self, f: usize) -> BTreeSet<usize> {
        (0..self.vertices.len())
            .filter(|&v| self.incidence[v][f])
            .collect()
    }

    pub fn contains(&self, p: &RationalVector) -> bool {
        if self.is_empty_polytope() {
            return false;
        }
        self.span_eqs
            .iter()
            .all(|(e, c)| &e.dot_rat(p) == c)
            && self.facets.iter().all(|f| !f.eval(p).is_negative())
    }

    pub fn contains_lattice(&self, p: &LatticeVector) -> bool {
        self.contains(&p.to_rational())
    }

    /// Strict interior test; only full-dimensional polytopes have one.
    pub fn contains_interior(&self, p: &RationalVector) -> bool {
        self.is_full_dimensional() && self.facets.iter().all(|f| f.eval(p).is_positive())
    }

    pub fn is_lattice_polytope(&self) -> bool {
        self.vertices.iter().all(|v| v.is_integral())
    }

    /// Average of the vertices: an exact relative interior point.
    pub fn barycenter(&self) -> RationalVector {
        assert!(!self.is_empty_polytope(), "barycenter of empty polytope");
        let mut c = RationalVector::zeros(self.ambient);
        for v in &self.vertices {
            c = &c + v;
        }
        let count = Rat::from(Int::from(self.vertices.len() as i64));
        c.scale(&(Rat::one() / count))
    }

    /// All lattice points: integer bounding box filtered through the
    /// H-representation.
    pub fn lattice_points(&self) -> Vec<LatticeVector> {
        if self.is_empty_polytope() {
            return Vec::new();
        }
        let n = self.ambient;
        let mut lo = Vec::with_capacity(n);
        let mut hi = Vec::with_capacity(n);
        for i in 0..n {
            let mut mn = self.vertices[0][i].clone();
            let mut mx = mn.clone();
            for v in &self.vertices[1..] {
                if v[i] < mn {
                    mn = v[i].clone();
                }
                if v[i] > mx {
                    mx = v[i].clone();
                }
            }
            lo.push(mn.ceil().to_integer());
            hi.push(mx.floor().to_integer());
        }
        if (0..n).any(|i| lo[i] > hi[i]) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = lo.clone();
        'grid: loop {
            let p = LatticeVector(cur.clone());
            if self.contains_lattice(&p) {
                out.push(p);
            }
            for i in (0..n).rev() {
                if cur[i] < hi[i] {
                    cur[i] += 1;
                    for (j, c) in cur.iter_mut().enumerate().skip(i + 1) {
                        *c = lo[j].clone();
                    }
                    continue 'grid;
                }
            }
            break;
        }
        out.sort();
        out
    }

    /// Interior lattice points of a full-dimensional polytope.
    pub fn interior_lattice_points(&self) -> Vec<LatticeVector> {
        self.lattice_points()
            .into_iter()
            .filter(|p| self.contains_interior(&p.to_rational()))
            .collect()
    }

    /// Polar dual `{y : <y, x> >= -1 for all x in P}` with the index-preserving
    /// convention: vertex j of the dual is facet j of P scaled, facet i of the
    /// dual is vertex i of P.
    pub fn polar_dual(&self) -> Result<Polytope> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        if !self
            .facets
            .iter()
            .all(|f| f.offset.is_positive())
        {
            return Err(Error::OriginNotInterior);
        }
        let vertices: Vec<RationalVector> = self
            .facets
            .iter()
            .map(|f| {
                RationalVector(
                    f.normal
                        .0
                        .iter()
                        .map(|e| Rat::from(e.clone()) / &f.offset)
                        .collect(),
                )
            })
            .collect();
        let facets: Vec<FacetIneq> = self
            .vertices
            .iter()
            .map(|v| primitivize_ineq(v, &Rat::one()))
            .collect();
        let incidence: Vec<Vec<bool>> = (0..vertices.len())
            .map(|j| (0..facets.len()).map(|i| self.incidence[i][j]).collect())
            .collect();
        let dual = Polytope {
            ambient: self.ambient,
            dim: self.dim,
            vertices,
            facets,
            span_eqs: Vec::new(),
            incidence,
            lattice: OnceLock::new(),
        };
        dual.debug_validate();
        Ok(dual)
    }

    /// Reflexive: integral, 0 in the interior, and integral polar dual.
    pub fn is_reflexive(&self) -> bool {
        if !self.is_full_dimensional() || !self.is_lattice_polytope() {
            return false;
        }
        if !self.facets.iter().all(|f| f.offset.is_positive()) {
            return false;
        }
        self.facets.iter().all(|f| {
            f.normal
                .0
                .iter()
                .all(|e| (Rat::from(e.clone()) / &f.offset).denom().is_one())
        })
    }

    /// Minkowski sum via the hull of pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        if self.is_empty_polytope() || other.is_empty_polytope() {
            return Ok(Polytope::empty(self.ambient));
        }
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push(a + b);
            }
        }
        Ok(Polytope::convex_hull(&sums, self.ambient))
    }

    /// Intersection of two bounded polytopes.
    pub fn intersect(&self, other: &Polytope) -> Result<Polytope> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        if self.is_empty_polytope() || other.is_empty_polytope() {
            return Ok(Polytope::empty(self.ambient));
        }
        let ineqs: Vec<(LatticeVector, Rat)> = self
            .facets
            .iter()
            .chain(other.facets.iter())
            .map(|f| (f.normal.clone(), f.offset.clone()))
            .collect();
        let eqs: Vec<(LatticeVector, Rat)> = self
            .span_eqs
            .iter()
            .chain(other.span_eqs.iter())
            .cloned()
            .collect();
        Polytope::from_inequalities(self.ambient, &ineqs, &eqs)
    }

    /// The face lattice, computed once and cached.
    pub fn face_lattice(&self) -> &FaceLattice {
        self.lattice.get_or_init(|| {
            let facet_vertices: Vec<BTreeSet<usize>> = (0..self.facets.len())
                .map(|f| self.facet_vertex_set(f))
                .collect();
            FaceLattice::build(self.vertices.len(), &facet_vertices, self.dim, |vs| {
                self.vertex_subset_dim(vs)
            })
        })
    }

    /// Affine dimension of a subset of the vertex set.
    fn vertex_subset_dim(&self, vs: &BTreeSet<usize>) -> i64 {
        if vs.is_empty() {
            return -1;
        }
        let ids: Vec<usize> = vs.iter().copied().collect();
        let base = &self.vertices[ids[0]];
        let rows: Vec<LatticeVector> = ids[1..]
            .iter()
            .map(|&i| (&self.vertices[i] - base).primitive_direction())
            .collect();
        if rows.is_empty() {
            return 0;
        }
        IntegerMatrix::from_rows(rows, self.ambient).rank() as i64
    }

    /// The dual of a face under polar duality: vertex and tight-facet index
    /// sets swap. Valid whenever the polar dual exists.
    pub fn dual_face(&self, face: &Face) -> Result<Face> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        if !self.facets.iter().all(|f| f.offset.is_positive()) {
            return Err(Error::OriginNotInterior);
        }
        let dim = if face.dim == -1 {
            self.dim
        } else if face.dim == self.dim {
            -1
        } else {
            self.dim - 1 - face.dim
        };
        Ok(Face {
            dim,
            vertex_set: face.facet_set.clone(),
            facet_set: face.vertex_set.clone(),
        })
    }

    /// Hull of a face's vertices as a standalone polytope.
    pub fn face_polytope(&self, face: &Face) -> Polytope {
        if face.vertex_set.is_empty() {
            return Polytope::empty(self.ambient);
        }
        let pts: Vec<RationalVector> = face
            .vertex_set
            .iter()
            .map(|&i| self.vertices[i].clone())
            .collect();
        Polytope::convex_hull(&pts, self.ambient)
    }

    /// The smallest face containing all given points (which must lie in P):
    /// intersection of all facets tight on every point.
    pub fn smallest_containing_face(&self, points: &[RationalVector]) -> usize {
        debug_assert!(points.iter().all(|p| self.contains(p)));
        let lattice = self.face_lattice();
        let tight: BTreeSet<usize> = (0..self.facets.len())
            .filter(|&f| points.iter().all(|p| self.facets[f].eval(p).is_zero()))
            .collect();
        let mut vs: BTreeSet<usize> = (0..self.vertices.len()).collect();
        for &f in &tight {
            vs = vs.intersection(&self.facet_vertex_set(f)).cloned().collect();
        }
        lattice
            .face_by_vertices(&vs)
            .expect("closure of tight facets is a face")
    }

    /// F-vector of the full face lattice in the session convention.
    pub fn fvector(&self) -> FVector {
        FVector::from_dims(
            self.face_lattice().faces.iter().map(|f| f.dim),
            self.ambient,
        )
    }

    fn debug_validate(&self) {
        if cfg!(debug_assertions) {
            for v in &self.vertices {
                assert!(self.contains(v), "vertex violates H-representation");
            }
            for (f, facet) in self.facets.iter().enumerate() {
                let tight = self.facet_vertex_set(f);
                assert!(
                    !tight.is_empty(),
                    "facet {:?} tight on no vertex",
                    facet
                );
                assert_eq!(
                    self.vertex_subset_dim(&tight),
                    self.dim - 1,
                    "facet does not span dimension dim-1"
                );
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{int, rat};

    fn lp(points: &[&[i64]], ambient: usize) -> Polytope {
        let pts: Vec<LatticeVector> = points.iter().map(|p| LatticeVector::from_i64(p)).collect();
        Polytope::convex_hull_lattice(&pts, ambient)
    }

    #[test]
    fn unit_square_hull() {
        let p = lp(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]], 2);
        assert_eq!(p.dim(), 2);
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.facets().len(), 4);
        assert_eq!(p.fvector().0, vec![1, 4, 4, 1]);
    }

    #[test]
    fn hull_drops_interior_and_boundary_points() {
        let p = lp(
            &[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1], &[1, 0]],
            2,
        );
        assert_eq!(p.vertices().len(), 4);
        assert!(!p
            .vertex_coords_set()
            .contains(&RationalVector::from_i64(&[1, 1])));
        assert!(!p
            .vertex_coords_set()
            .contains(&RationalVector::from_i64(&[1, 0])));
    }

    #[test]
    fn lower_dimensional_hull() {
        // A segment inside the plane z = x + y.
        let p = lp(&[&[0, 0, 0], &[1, 1, 2], &[2, 2, 4]], 3);
        assert_eq!(p.dim(), 1);
        assert_eq!(p.vertices().len(), 2);
        assert_eq!(p.span_equations().len(), 2);
        assert!(p.contains(&RationalVector::from_i64(&[1, 1, 2])));
        assert!(!p.contains(&RationalVector::from_i64(&[1, 0, 1])));
        // Lattice points along the segment.
        assert_eq!(p.lattice_points().len(), 3);
    }

    #[test]
    fn point_hull() {
        let p = lp(&[&[3, 4]], 2);
        assert_eq!(p.dim(), 0);
        assert_eq!(p.lattice_points(), vec![LatticeVector::from_i64(&[3, 4])]);
        assert!(!p.contains(&RationalVector::from_i64(&[3, 5])));
    }

    #[test]
    fn cross_polytope_polar_is_cube() {
        let p = lp(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]], 2);
        let d = p.polar_dual().unwrap();
        let expect: BTreeSet<RationalVector> = [
            RationalVector::from_i64(&[1, 1]),
            RationalVector::from_i64(&[1, -1]),
            RationalVector::from_i64(&[-1, 1]),
            RationalVector::from_i64(&[-1, -1]),
        ]
        .into_iter()
        .collect();
        assert_eq!(d.vertex_coords_set(), expect);
        // Involution, index-preserving.
        let dd = d.polar_dual().unwrap();
        assert_eq!(dd.vertices(), p.vertices());
    }

    #[test]
    fn polar_dual_rejects_bad_inputs() {
        let square = lp(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]], 2);
        assert_eq!(square.polar_dual().unwrap_err(), Error::OriginNotInterior);
        let seg = lp(&[&[0, 0], &[1, 0]], 2);
        assert_eq!(seg.polar_dual().unwrap_err(), Error::NotFullDimensional);
    }

    #[test]
    fn p2_anticanonical_triangle_points() {
        let p = lp(&[&[2, -1], &[-1, 2], &[-1, -1]], 2);
        assert_eq!(p.lattice_points().len(), 10);
        assert_eq!(p.interior_lattice_points(), vec![LatticeVector::from_i64(&[0, 0])]);
        assert!(p.is_reflexive());
        // Hull of its lattice points is the triangle again.
        let hull = Polytope::convex_hull_lattice(&p.lattice_points(), 2);
        assert_eq!(hull.vertex_coords_set(), p.vertex_coords_set());
    }

    #[test]
    fn segment_lattice_points() {
        let p = lp(&[&[0], &[5]], 1);
        assert_eq!(p.lattice_points().len(), 6);
    }

    #[test]
    fn simplex_face_lattice() {
        let p = lp(
            &[
                &[1, 0, 0, 0],
                &[0, 1, 0, 0],
                &[0, 0, 1, 0],
                &[0, 0, 0, 1],
                &[-1, -1, -1, -1],
            ],
            4,
        );
        assert_eq!(p.fvector().0, vec![1, 5, 10, 10, 5, 1]);
        assert!(p.is_reflexive());
        // dual_face is an involution with complementary dimensions.
        let fl = p.face_lattice();
        let dual = p.polar_dual().unwrap();
        for f in &fl.faces {
            let df = p.dual_face(f).unwrap();
            if f.dim >= 0 && f.dim < p.dim() {
                assert_eq!(f.dim + df.dim, p.dim() - 1);
            }
            let back = dual.dual_face(&df).unwrap();
            assert_eq!(&back, f);
            // The dual face is an actual face of the dual polytope.
            assert!(dual.face_lattice().face_by_vertices(&df.vertex_set).is_some());
        }
    }

    #[test]
    fn minkowski_segments_make_square() {
        let a = lp(&[&[0, 0], &[1, 0]], 2);
        let b = lp(&[&[0, 0], &[0, 1]], 2);
        let sum = a.minkowski_sum(&b).unwrap();
        assert_eq!(sum.fvector().0, vec![1, 4, 4, 1]);
        // Identity element.
        let zero = lp(&[&[0, 0]], 2);
        let same = a.minkowski_sum(&zero).unwrap();
        assert_eq!(same.vertex_coords_set(), a.vertex_coords_set());
        // Commutative.
        let ba = b.minkowski_sum(&a).unwrap();
        assert_eq!(sum.vertex_coords_set(), ba.vertex_coords_set());
    }

    #[test]
    fn from_inequalities_square_and_unbounded() {
        // |x| <= 1, |y| <= 1.
        let ineqs = vec![
            (LatticeVector::from_i64(&[1, 0]), rat(1, 1)),
            (LatticeVector::from_i64(&[-1, 0]), rat(1, 1)),
            (LatticeVector::from_i64(&[0, 1]), rat(1, 1)),
            (LatticeVector::from_i64(&[0, -1]), rat(1, 1)),
        ];
        let p = Polytope::from_inequalities(2, &ineqs, &[]).unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert!(p.is_reflexive());

        let open = vec![(LatticeVector::from_i64(&[1, 0]), rat(1, 1))];
        assert_eq!(
            Polytope::from_inequalities(2, &open, &[]).unwrap_err(),
            Error::Unbounded
        );

        // x >= 1 and x <= 0: empty.
        let empty = vec![
            (LatticeVector::from_i64(&[1]), rat(-1, 1)),
            (LatticeVector::from_i64(&[-1]), rat(0, 1)),
        ];
        let e = Polytope::from_inequalities(1, &empty, &[]).unwrap();
        assert!(e.is_empty_polytope());
    }

    #[test]
    fn intersect_squares() {
        let a = lp(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]], 2);
        let b = lp(&[&[1, 1], &[3, 1], &[1, 3], &[3, 3]], 2);
        let c = a.intersect(&b).unwrap();
        let expect: BTreeSet<RationalVector> = [
            RationalVector::from_i64(&[1, 1]),
            RationalVector::from_i64(&[2, 1]),
            RationalVector::from_i64(&[1, 2]),
            RationalVector::from_i64(&[2, 2]),
        ]
        .into_iter()
        .collect();
        assert_eq!(c.vertex_coords_set(), expect);
    }

    #[test]
    fn smallest_containing_face_identifies_edges() {
        let p = lp(&[&[0, 0], &[2, 0], &[0, 2]], 2);
        // Midpoint of the bottom edge.
        let mid = RationalVector(vec![rat(1, 1), rat(0, 1)]);
        let id = p.smallest_containing_face(&[mid]);
        let face = p.face_lattice().face(id);
        assert_eq!(face.dim, 1);
        // A vertex is its own smallest face.
        let v = RationalVector::from_i64(&[0, 2]);
        let id = p.smallest_containing_face(&[v]);
        assert_eq!(p.face_lattice().face(id).dim, 0);
        // Interior point gives the whole polytope.
        let c = p.barycenter();
        let id = p.smallest_containing_face(&[c]);
        assert_eq!(p.face_lattice().face(id).dim, 2);
    }

    #[test]
    fn euler_relation_on_small_polytopes() {
        for p in [
            lp(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]], 2),
            lp(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]], 3),
            lp(
                &[&[1, 1, 1], &[1, 1, -1], &[1, -1, 1], &[1, -1, -1], &[-1, 1, 1],
                  &[-1, 1, -1], &[-1, -1, 1], &[-1, -1, -1]],
                3,
            ),
        ] {
            let fv = p.fvector();
            let mut sum = 0i64;
            for (i, c) in fv.0.iter().enumerate() {
                sum += if i % 2 == 0 { -(*c as i64) } else { *c as i64 };
            }
            // Alternating sum over dims -1..=n vanishes.
            assert_eq!(sum, 0, "Euler relation failed: {}", fv);
        }
    }

    #[test]
    fn rational_vertex_duality() {
        // Triangle whose dual has rational vertices.
        let p = lp(&[&[2, 0], &[0, 2], &[-1, -1]], 2);
        let d = p.polar_dual().unwrap();
        assert!(!d.is_lattice_polytope());
        let back = d.polar_dual().unwrap();
        assert_eq!(back.vertex_coords_set(), p.vertex_coords_set());
        assert!(!p.is_reflexive());
        assert_eq!(int(1), int(1));
    }
}
