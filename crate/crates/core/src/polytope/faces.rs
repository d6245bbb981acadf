//! Face lattices of polytopes and the F-vector convention.
//!
//! Faces are closures of intersections of facet vertex sets. A face is
//! identified both by its vertex index set and by the full set of facets
//! tight on it; dualization swaps the two, so face duality is a pure index
//! operation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// A single face of a polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Dimension in -1..=dim(P); -1 is the empty face.
    pub dim: i64,
    /// Indices of the vertices of P lying on the face.
    pub vertex_set: BTreeSet<usize>,
    /// Indices of all facets of P containing the face.
    pub facet_set: BTreeSet<usize>,
}

/// The graded face lattice of a polytope, empty face through the polytope
/// itself, ordered by (dimension, vertex set).
#[derive(Debug, Clone)]
pub struct FaceLattice {
    pub faces: Vec<Face>,
    /// Polytope dimension.
    pub dim: i64,
    index: BTreeMap<BTreeSet<usize>, usize>,
}

impl FaceLattice {
    /// Builds the lattice from vertex-facet incidence.
    ///
    /// `facet_vertices[f]` is the set of vertices tight on facet `f`;
    /// `face_dim` must return the affine dimension of a vertex subset.
    pub(crate) fn build(
        vertex_count: usize,
        facet_vertices: &[BTreeSet<usize>],
        dim: i64,
        mut face_dim: impl FnMut(&BTreeSet<usize>) -> i64,
    ) -> FaceLattice {
        let all: BTreeSet<usize> = (0..vertex_count).collect();
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut queue: VecDeque<BTreeSet<usize>> = VecDeque::new();
        seen.insert(all.clone());
        queue.push_back(all);
        seen.insert(BTreeSet::new());
        queue.push_back(BTreeSet::new());
        while let Some(w) = queue.pop_front() {
            for fv in facet_vertices {
                let meet: BTreeSet<usize> = w.intersection(fv).cloned().collect();
                if seen.insert(meet.clone()) {
                    queue.push_back(meet);
                }
            }
        }
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|vertex_set| {
                let facet_set: BTreeSet<usize> = facet_vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, fv)| vertex_set.is_subset(fv))
                    .map(|(f, _)| f)
                    .collect();
                let d = if vertex_set.is_empty() {
                    -1
                } else {
                    face_dim(&vertex_set)
                };
                Face {
                    dim: d,
                    vertex_set,
                    facet_set,
                }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.vertex_set).cmp(&(b.dim, &b.vertex_set)));
        let index = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.vertex_set.clone(), i))
            .collect();
        FaceLattice { faces, dim, index }
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    /// Looks a face up by its exact vertex index set.
    pub fn face_by_vertices(&self, vs: &BTreeSet<usize>) -> Option<usize> {
        self.index.get(vs).copied()
    }

    /// Face ids of a given dimension.
    pub fn faces_of_dim(&self, d: i64) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&i| self.faces[i].dim == d)
            .collect()
    }

    /// Ids of all proper nonempty faces (excludes the empty face and P).
    pub fn proper_faces(&self) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&i| self.faces[i].dim >= 0 && self.faces[i].dim < self.dim)
            .collect()
    }

    pub fn id_of_empty(&self) -> usize {
        self.face_by_vertices(&BTreeSet::new()).expect("empty face present")
    }

    pub fn id_of_full(&self) -> usize {
        (0..self.faces.len())
            .find(|&i| self.faces[i].dim == self.dim)
            .expect("full face present")
    }

    /// Containment: a <= b as faces.
    pub fn contains(&self, smaller: usize, larger: usize) -> bool {
        self.faces[smaller]
            .vertex_set
            .is_subset(&self.faces[larger].vertex_set)
    }
}

/// Face counts per dimension -1..=n, in the session output convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// Counts the dimensions of `dims` into slots -1..=ambient.
    pub fn from_dims<I: IntoIterator<Item = i64>>(dims: I, ambient: usize) -> FVector {
        let mut counts = vec![0u64; ambient + 2];
        for d in dims {
            let slot = (d + 1) as usize;
            assert!(slot < counts.len(), "face dimension out of range");
            counts[slot] += 1;
        }
        FVector(counts)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "}}")
    }
}
