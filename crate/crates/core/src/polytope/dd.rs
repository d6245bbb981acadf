//! Double description of polyhedral cones in exact integer arithmetic.
//!
//! Computes the extreme rays and the lineality space of a cone
//! `{x : <h, x> >= 0 for all h}` by inserting the constraints one at a time,
//! maintaining the minimal generating system throughout. Adjacency of rays is
//! decided combinatorially from zero sets (Fukuda-Prodon), so there are no
//! degenerate cases to special-case; everything is exact.

use num_traits::Zero;

use crate::lattice::{Int, LatticeVector};

/// Zero set of a ray over the constraints inserted so far.
#[derive(Debug, Clone, PartialEq, Eq)]
struct ZeroSet {
    blocks: Vec<u64>,
}

impl ZeroSet {
    fn new(capacity: usize) -> Self {
        ZeroSet {
            blocks: vec![0; capacity.div_ceil(64)],
        }
    }

    fn full(capacity: usize, upto: usize) -> Self {
        let mut z = Self::new(capacity);
        for i in 0..upto {
            z.insert(i);
        }
        z
    }

    fn insert(&mut self, i: usize) {
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    fn intersection(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn contains_all(&self, other: &ZeroSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & b == *b)
    }
}

#[derive(Debug, Clone)]
struct Ray {
    vector: LatticeVector,
    zero: ZeroSet,
}

/// Extreme rays and lineality basis of an intersection of halfspaces.
#[derive(Debug, Clone)]
pub struct DdOutput {
    /// Basis of the lineality space `{x : <h, x> = 0 for all h}`.
    pub lineality: Vec<LatticeVector>,
    /// Primitive generators of the extreme rays modulo lineality.
    pub rays: Vec<LatticeVector>,
}

/// Runs the double description method on `{x in R^dim : <h, x> >= 0}`.
pub fn extreme_rays(dim: usize, constraints: &[LatticeVector]) -> DdOutput {
    let m = constraints.len();
    let mut lineality: Vec<LatticeVector> = (0..dim)
        .map(|i| {
            let mut e = vec![Int::zero(); dim];
            e[i] = Int::from(1);
            LatticeVector(e)
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, h) in constraints.iter().enumerate() {
        assert_eq!(h.rank(), dim, "constraint of wrong dimension");
        let lin_vals: Vec<Int> = lineality.iter().map(|l| h.dot(l)).collect();
        if let Some(pos) = lin_vals.iter().position(|v| !v.is_zero()) {
            // The constraint cuts the lineality space: one lineality vector
            // becomes a ray, the rest are projected into the hyperplane.
            let mut pivot = lineality.remove(pos);
            let mut pv = lin_vals[pos].clone();
            if pv < Int::zero() {
                pivot = -&pivot;
                pv = -pv;
            }
            for (i, l) in lineality.iter_mut().enumerate() {
                let idx = if i < pos { i } else { i + 1 };
                if !lin_vals[idx].is_zero() {
                    *l = (&l.scale(&pv) - &pivot.scale(&lin_vals[idx])).primitive();
                }
            }
            for ray in rays.iter_mut() {
                let rv = h.dot(&ray.vector);
                if !rv.is_zero() {
                    ray.vector = (&ray.vector.scale(&pv) - &pivot.scale(&rv)).primitive();
                }
                ray.zero.insert(k);
            }
            rays.push(Ray {
                vector: pivot,
                zero: ZeroSet::full(m, k),
            });
        } else {
            let vals: Vec<Int> = rays.iter().map(|r| h.dot(&r.vector)).collect();
            let mut new_rays: Vec<Ray> = Vec::new();
            for (i, _) in rays.iter().enumerate().filter(|(i, _)| vals[*i] > Int::zero()) {
                for (j, _) in rays.iter().enumerate().filter(|(j, _)| vals[*j] < Int::zero()) {
                    let meet = rays[i].zero.intersection(&rays[j].zero);
                    let adjacent = !rays.iter().enumerate().any(|(t, r)| {
                        t != i && t != j && r.zero.contains_all(&meet)
                    });
                    if !adjacent {
                        continue;
                    }
                    // <h, w> = 0 with w a positive combination of both rays.
                    let w = (&rays[j].vector.scale(&vals[i])
                        - &rays[i].vector.scale(&vals[j]))
                        .primitive();
                    let mut zero = meet;
                    zero.insert(k);
                    new_rays.push(Ray { vector: w, zero });
                }
            }
            rays = rays
                .into_iter()
                .zip(vals)
                .filter(|(_, v)| *v >= Int::zero())
                .map(|(mut r, v)| {
                    if v.is_zero() {
                        r.zero.insert(k);
                    }
                    r
                })
                .collect();
            rays.extend(new_rays);
        }
    }

    DdOutput {
        lineality,
        rays: rays.into_iter().map(|r| r.vector).collect(),
    }
}
