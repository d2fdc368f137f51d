//! Finite matrix groups realised as permutation groups on a finite spanning
//! set of vectors.
//!
//! Every group in this crate (Coxeter groups acting on their roots, monomial
//! groups acting on the vectors ζ^k·e_i) permutes a finite set of points that
//! contains a basis. An element is then stored as the permutation of those
//! points, and its matrix is read off from the images of the basis points.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::classes::{self, ClassPartition};
use crate::error::{Error, Result};
use crate::exact::{lcm_u32, Cyclotomic, Matrix, Poly};

/// Image list of a permutation of points: `p[i]` is the image of point `i`.
pub type Perm = Vec<u16>;

/// Default upper bound on the number of enumerated group elements.
pub const DEFAULT_ELEMENT_BUDGET: usize = 1_000_000;

/// A finite set of vectors spanning V, closed under the group action.
#[derive(Debug)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<Cyclotomic>>,
    basis: Vec<usize>,
}

impl PointSet {
    /// `basis[j]` must be the index of the j-th coordinate vector among `points`.
    pub fn new(dim: usize, points: Vec<Vec<Cyclotomic>>, basis: Vec<usize>) -> Result<Self> {
        if basis.len() != dim || points.iter().any(|p| p.len() != dim) {
            return Err(Error::Shape("point set dimension".into()));
        }
        if points.len() > u16::MAX as usize {
            return Err(Error::Budget {
                what: "number of points".into(),
                limit: u16::MAX as usize,
            });
        }
        for (j, &b) in basis.iter().enumerate() {
            let unit = (0..dim).all(|i| points[b][i] == Cyclotomic::from_int((i == j) as i64));
            if !unit {
                return Err(Error::Invalid(
                    "basis point is not a coordinate vector".into(),
                ));
            }
        }
        Ok(PointSet { dim, points, basis })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &[Cyclotomic] {
        &self.points[i]
    }

    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    /// Matrix whose j-th column is the image of the j-th basis vector.
    pub fn matrix_of(&self, p: &[u16]) -> Matrix<Cyclotomic> {
        Matrix::from_fn(self.dim, self.dim, |i, j| {
            self.points[p[self.basis[j]] as usize][i].clone()
        })
    }

    /// Permutation of the points induced by a matrix, if it preserves the set.
    pub fn perm_of(&self, m: &Matrix<Cyclotomic>) -> Option<Perm> {
        let lookup: HashMap<&[Cyclotomic], usize> = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i))
            .collect();
        self.points
            .iter()
            .map(|p| {
                let img = m.mul_vec(p).ok()?;
                lookup.get(img.as_slice()).map(|&i| i as u16)
            })
            .collect()
    }
}

pub fn identity_perm(len: usize) -> Perm {
    (0..len as u16).collect()
}

/// (a·b)[i] = a[b[i]]: apply `b` first.
pub fn compose(a: &[u16], b: &[u16]) -> Perm {
    b.iter().map(|&i| a[i as usize]).collect()
}

pub fn invert(a: &[u16]) -> Perm {
    let mut out = vec![0u16; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j as usize] = i as u16;
    }
    out
}

pub fn perm_order(a: &[u16]) -> u32 {
    let mut seen = vec![false; a.len()];
    let mut order = 1;
    for start in 0..a.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = a[i] as usize;
            len += 1;
        }
        order = lcm_u32(order, len);
    }
    order
}

/// Matrix-level data attached to one conjugacy class.
#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub matrix: Matrix<Cyclotomic>,
    /// det(1 − x·g).
    pub det_one_minus_x: Poly<Cyclotomic>,
    pub det: Cyclotomic,
    pub trace: Cyclotomic,
    /// Dimension of the fixed space.
    pub fixed_dim: usize,
    pub order: u32,
}

/// A fully enumerated finite group acting on a [`PointSet`].
///
/// Elements are numbered in breadth-first order from the identity using right
/// multiplication by the generators in index order, so the stored word of each
/// element is its shortlex-minimal word and element 0 is the identity.
pub struct FiniteGroup {
    points: Arc<PointSet>,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    depth: Vec<u32>,
    parent: Vec<(u32, u8)>,
    classes: OnceLock<ClassPartition>,
    class_info: OnceLock<Vec<ClassInfo>>,
    matrices: OnceLock<Vec<Matrix<Cyclotomic>>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("dim", &self.dim())
            .field("order", &self.order())
            .field("generators", &self.gens.len())
            .finish()
    }
}

impl FiniteGroup {
    pub fn generate(points: Arc<PointSet>, gens: Vec<Perm>, budget: usize) -> Result<Self> {
        if gens.len() >= u8::MAX as usize {
            return Err(Error::Invalid("too many generators".into()));
        }
        if gens.iter().any(|g| g.len() != points.len()) {
            return Err(Error::Shape("generator permutation length".into()));
        }
        let id = identity_perm(points.len());
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0u32)]);
        let mut depth = vec![0u32];
        let mut parent = vec![(0u32, u8::MAX)];
        let mut head = 0;
        while head < elements.len() {
            for (s, g) in gens.iter().enumerate() {
                let next = compose(&elements[head], g);
                if index.contains_key(&next) {
                    continue;
                }
                if elements.len() >= budget {
                    return Err(Error::Budget {
                        what: "group order".into(),
                        limit: budget,
                    });
                }
                index.insert(next.clone(), elements.len() as u32);
                elements.push(next);
                depth.push(depth[head] + 1);
                parent.push((head as u32, s as u8));
            }
            head += 1;
        }
        Ok(FiniteGroup {
            points,
            gens,
            elements,
            index,
            depth,
            parent,
            classes: OnceLock::new(),
            class_info: OnceLock::new(),
            matrices: OnceLock::new(),
        })
    }

    /// The subgroup generated by `gens`, acting on the same points.
    pub fn subgroup(&self, gens: Vec<Perm>, budget: usize) -> Result<FiniteGroup> {
        FiniteGroup::generate(Arc::clone(&self.points), gens, budget)
    }

    pub fn points(&self) -> &Arc<PointSet> {
        &self.points
    }

    pub fn dim(&self) -> usize {
        self.points.dim()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    /// Index of the element equal to the given generator.
    pub fn generator_index(&self, s: usize) -> usize {
        self.index_of(&self.gens[s])
            .expect("generators are elements")
    }

    pub fn element(&self, i: usize) -> &[u16] {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &[u16]) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    /// Length of the shortest word in the generators.
    pub fn depth(&self, i: usize) -> u32 {
        self.depth[i]
    }

    /// Shortlex-minimal word in the generators (0-based generator indices).
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.depth[i] as usize);
        while i != 0 {
            let (p, s) = self.parent[i];
            w.push(s as usize);
            i = p as usize;
        }
        w.reverse();
        w
    }

    pub fn element_of_word(&self, word: &[usize]) -> Result<usize> {
        let mut p = identity_perm(self.points.len());
        for &s in word {
            let g = self
                .gens
                .get(s)
                .ok_or_else(|| Error::Invalid(format!("generator index {s} out of range")))?;
            p = compose(&p, g);
        }
        Ok(self.index_of(&p).expect("closed under generators"))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let p = compose(&self.elements[a], &self.elements[b]);
        self.index_of(&p).expect("closed under multiplication")
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.index_of(&invert(&self.elements[a]))
            .expect("closed under inversion")
    }

    /// g·x·g^{-1}
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        let gp = &self.elements[g];
        let p = compose(&compose(gp, &self.elements[x]), &invert(gp));
        self.index_of(&p).expect("closed under conjugation")
    }

    pub fn element_order(&self, i: usize) -> u32 {
        perm_order(&self.elements[i])
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u32 {
        self.classes().classes().iter().fold(1, |acc, c| {
            lcm_u32(acc, self.element_order(c.representative))
        })
    }

    pub fn matrix(&self, i: usize) -> Matrix<Cyclotomic> {
        self.points.matrix_of(&self.elements[i])
    }

    /// Matrices of all elements, materialised once.
    pub fn all_matrices(&self) -> &[Matrix<Cyclotomic>] {
        self.matrices
            .get_or_init(|| (0..self.order()).map(|i| self.matrix(i)).collect())
    }

    pub fn classes(&self) -> &ClassPartition {
        self.classes.get_or_init(|| classes::partition(self))
    }

    /// Matrix data per class, in class order.
    pub fn class_info(&self) -> &[ClassInfo] {
        self.class_info.get_or_init(|| {
            self.classes()
                .classes()
                .iter()
                .map(|c| {
                    let m = self.matrix(c.representative);
                    let n = m.rows();
                    let det_one_minus_x = m.det_one_minus_x().expect("square");
                    let det = m.det().expect("square");
                    let trace = m.trace().expect("square");
                    let moved = m.sub(&Matrix::identity(n)).expect("same shape").rank();
                    ClassInfo {
                        det_one_minus_x,
                        det,
                        trace,
                        fixed_dim: n - moved,
                        order: self.element_order(c.representative),
                        matrix: m,
                    }
                })
                .collect()
        })
    }

    /// Indices of all reflections (elements whose fixed space is a hyperplane).
    pub fn reflections(&self) -> Vec<usize> {
        let n = self.dim();
        let info = self.class_info();
        let mut out: Vec<usize> = self
            .classes()
            .classes()
            .iter()
            .zip(info)
            .filter(|(_, i)| i.fixed_dim + 1 == n)
            .flat_map(|(c, _)| c.members.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Reflecting hyperplanes, each keyed by the linear form cutting it out,
    /// scaled so its first nonzero coordinate is 1, and mapped to the
    /// reflections fixing it.
    pub fn hyperplanes(&self) -> Vec<(Vec<Cyclotomic>, Vec<usize>)> {
        let mut map: HashMap<Vec<Cyclotomic>, Vec<usize>> = HashMap::new();
        let mut order = Vec::new();
        for r in self.reflections() {
            let key = hyperplane_form(&self.matrix(r));
            let entry = map.entry(key.clone()).or_default();
            if entry.is_empty() {
                order.push(key);
            }
            entry.push(r);
        }
        order
            .into_iter()
            .map(|k| {
                let v = map.remove(&k).expect("present");
                (k, v)
            })
            .collect()
    }
}

/// Normalised linear form vanishing on the fixed hyperplane of a reflection.
pub fn hyperplane_form(r: &Matrix<Cyclotomic>) -> Vec<Cyclotomic> {
    let n = r.rows();
    let d = r.sub(&Matrix::identity(n)).expect("square");
    let row = (0..n)
        .map(|i| d.row(i).to_vec())
        .find(|row| row.iter().any(|c| !c.is_zero()))
        .expect("a reflection moves some vector");
    let lead = row
        .iter()
        .find(|c| !c.is_zero())
        .and_then(Cyclotomic::inv)
        .expect("nonzero entry");
    row.iter().map(|c| c * &lead).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// S3 permuting e1, e2, e3.
    fn s3() -> FiniteGroup {
        let pts = (0..3)
            .map(|j| {
                (0..3)
                    .map(|i| Cyclotomic::from_int((i == j) as i64))
                    .collect()
            })
            .collect();
        let ps = Arc::new(PointSet::new(3, pts, vec![0, 1, 2]).unwrap());
        FiniteGroup::generate(ps, vec![vec![1, 0, 2], vec![0, 2, 1]], 100).unwrap()
    }

    #[test]
    fn enumeration() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.exponent(), 6);
        assert_eq!(g.reflections().len(), 3);
        assert_eq!(g.hyperplanes().len(), 3);
        for i in 0..g.order() {
            assert_eq!(g.element_of_word(&g.word(i)).unwrap(), i);
            assert_eq!(g.mul(i, g.inverse(i)), 0);
        }
    }

    #[test]
    fn budget() {
        let pts = (0..3)
            .map(|j| {
                (0..3)
                    .map(|i| Cyclotomic::from_int((i == j) as i64))
                    .collect()
            })
            .collect();
        let ps = Arc::new(PointSet::new(3, pts, vec![0, 1, 2]).unwrap());
        let err = FiniteGroup::generate(ps, vec![vec![1, 0, 2], vec![0, 2, 1]], 5).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }
}
