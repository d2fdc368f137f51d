use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use super::matrix::{standard_cartan, CartanMatrix, CoxeterMatrix};
use crate::error::{invariant, Error, Result};
use crate::exact::{Cyclotomic, Matrix};
use crate::group::{compose, identity_perm, invert, FiniteGroup, Perm, PointSet};

/// Generator matrices of the reflection representation in the basis {α_s}.
#[derive(Clone, Debug)]
pub struct ReflectionRep {
    cartan: CartanMatrix,
    gens: Vec<Matrix<Cyclotomic>>,
}

impl ReflectionRep {
    pub fn generators(&self) -> &[Matrix<Cyclotomic>] {
        &self.gens
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    /// s(v) = v − (Σ_t c_st v_t)·α_s
    pub fn apply(&self, s: usize, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let c = self.cartan.matrix();
        let coeff = v
            .iter()
            .enumerate()
            .fold(Cyclotomic::zero(), |acc, (t, vt)| {
                if vt.is_zero() || c.get(s, t).is_zero() {
                    acc
                } else {
                    acc + c.get(s, t) * vt
                }
            });
        let mut out = v.to_vec();
        out[s] = &out[s] - &coeff;
        out
    }
}

/// Generator s maps α_t to α_t − c_st·α_s.
pub fn reflection_rep(cartan: &CartanMatrix) -> ReflectionRep {
    let n = cartan.rank();
    let gens = (0..n)
        .map(|s| {
            let mut m = Matrix::identity(n);
            for t in 0..n {
                let v = m.get(s, t) - cartan.get(s, t);
                m.set(s, t, v);
            }
            m
        })
        .collect();
    ReflectionRep {
        cartan: cartan.clone(),
        gens,
    }
}

/// Roots in α-coordinates: positive roots first (simple roots leading, then in
/// orbit discovery order), followed by their negatives in the same order.
#[derive(Clone, Debug)]
pub struct RootSystem {
    roots: Vec<Vec<Cyclotomic>>,
    positive: usize,
}

impl RootSystem {
    pub fn roots(&self) -> &[Vec<Cyclotomic>] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Number of positive roots, which equals the number of reflections.
    pub fn num_positive(&self) -> usize {
        self.positive
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.positive
    }

    pub fn negative_of(&self, i: usize) -> usize {
        (i + self.positive) % (2 * self.positive)
    }

    pub fn positive_roots(&self) -> &[Vec<Cyclotomic>] {
        &self.roots[..self.positive]
    }
}

fn sign_of_root(v: &[Cyclotomic]) -> Result<Ordering> {
    let mut sign = Ordering::Equal;
    for c in v {
        if c.is_zero() {
            continue;
        }
        let sc = c.real_sign()?;
        if sign == Ordering::Equal {
            sign = sc;
        } else if sign != sc {
            return Err(invariant("root with mixed-sign coordinates"));
        }
    }
    Ok(sign)
}

/// Orbit closure of the simple roots under the generators.
pub fn roots(rep: &ReflectionRep, limit: usize) -> Result<RootSystem> {
    let n = rep.rank();
    let mut found: Vec<Vec<Cyclotomic>> = (0..n)
        .map(|s| {
            (0..n)
                .map(|t| Cyclotomic::from_int((s == t) as i64))
                .collect()
        })
        .collect();
    let mut seen: HashMap<Vec<Cyclotomic>, usize> = found
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    let mut head = 0;
    while head < found.len() {
        for s in 0..n {
            let img = rep.apply(s, &found[head]);
            if !seen.contains_key(&img) {
                if found.len() >= limit {
                    return Err(Error::Budget {
                        what: "root count".into(),
                        limit,
                    });
                }
                seen.insert(img.clone(), found.len());
                found.push(img);
            }
        }
        head += 1;
    }
    let mut positive = Vec::new();
    for r in &found {
        match sign_of_root(r)? {
            Ordering::Greater => positive.push(r.clone()),
            Ordering::Less => {}
            Ordering::Equal => return Err(invariant("zero root")),
        }
    }
    if 2 * positive.len() != found.len() {
        return Err(invariant("roots are not split evenly by sign"));
    }
    let negatives: Vec<Vec<Cyclotomic>> = positive
        .iter()
        .map(|r| r.iter().map(|c| -c).collect())
        .collect();
    if negatives.iter().any(|r| !seen.contains_key(r)) {
        return Err(invariant("root system not closed under negation"));
    }
    let count = positive.len();
    positive.extend(negatives);
    Ok(RootSystem {
        roots: positive,
        positive: count,
    })
}

/// Element of a finite Coxeter group, stored as its permutation of the roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterElement {
    perm: Perm,
}

impl CoxeterElement {
    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    pub fn from_perm(perm: Perm) -> Self {
        CoxeterElement { perm }
    }
}

/// Coxeter matrix with Cartan matrix, reflection representation and roots.
#[derive(Debug)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    rep: ReflectionRep,
    roots: RootSystem,
    points: Arc<PointSet>,
    gens: Vec<Perm>,
}

/// Guard on the number of roots generated for a Coxeter system.
pub const DEFAULT_ROOT_LIMIT: usize = 100_000;

impl CoxeterSystem {
    /// Finite Coxeter system with the standard Cartan matrix.
    pub fn new(matrix: CoxeterMatrix) -> Result<Self> {
        let cartan = standard_cartan(&matrix)?;
        Self::with_cartan(matrix, cartan)
    }

    pub fn with_cartan(matrix: CoxeterMatrix, cartan: CartanMatrix) -> Result<Self> {
        if !super::matrix::is_finite(&matrix) {
            return Err(Error::NotFinite);
        }
        let rep = reflection_rep(&cartan);
        let roots = roots(&rep, DEFAULT_ROOT_LIMIT)?;
        let n = matrix.rank();
        let index: HashMap<&[Cyclotomic], usize> = roots
            .roots()
            .iter()
            .enumerate()
            .map(|(i, r)| (r.as_slice(), i))
            .collect();
        let gens = (0..n)
            .map(|s| {
                roots
                    .roots()
                    .iter()
                    .map(|r| index[rep.apply(s, r).as_slice()] as u16)
                    .collect()
            })
            .collect();
        let points = Arc::new(PointSet::new(n, roots.roots().to_vec(), (0..n).collect())?);
        Ok(CoxeterSystem {
            matrix,
            rep,
            roots,
            points,
            gens,
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn coxeter_matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn cartan(&self) -> &CartanMatrix {
        self.rep.cartan()
    }

    pub fn reflection_rep(&self) -> &ReflectionRep {
        &self.rep
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn points(&self) -> &Arc<PointSet> {
        &self.points
    }

    pub fn generator_perms(&self) -> &[Perm] {
        &self.gens
    }

    pub fn identity(&self) -> CoxeterElement {
        CoxeterElement {
            perm: identity_perm(self.roots.len()),
        }
    }

    pub fn generator(&self, s: usize) -> CoxeterElement {
        CoxeterElement {
            perm: self.gens[s].clone(),
        }
    }

    pub fn element_from_word(&self, word: &[usize]) -> Result<CoxeterElement> {
        let mut p = identity_perm(self.roots.len());
        for &s in word {
            let g = self
                .gens
                .get(s)
                .ok_or_else(|| Error::Invalid(format!("generator {s} out of range")))?;
            p = compose(&p, g);
        }
        Ok(CoxeterElement { perm: p })
    }

    pub fn mul(&self, a: &CoxeterElement, b: &CoxeterElement) -> CoxeterElement {
        CoxeterElement {
            perm: compose(&a.perm, &b.perm),
        }
    }

    pub fn inverse(&self, a: &CoxeterElement) -> CoxeterElement {
        CoxeterElement {
            perm: invert(&a.perm),
        }
    }

    pub fn matrix(&self, w: &CoxeterElement) -> Matrix<Cyclotomic> {
        self.points.matrix_of(&w.perm)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &CoxeterElement) -> usize {
        let n = self.roots.num_positive();
        w.perm[..n].iter().filter(|&&i| i as usize >= n).count()
    }

    /// Whether l(s·w) < l(w), i.e. w^{-1}(α_s) is negative.
    pub fn is_left_descent(&self, w: &CoxeterElement, s: usize) -> bool {
        let inv = invert(&w.perm);
        !self.roots.is_positive(inv[s] as usize)
    }

    /// Whether l(w·s) < l(w), i.e. w(α_s) is negative.
    pub fn is_right_descent(&self, w: &CoxeterElement, s: usize) -> bool {
        !self.roots.is_positive(w.perm[s] as usize)
    }

    /// Reduced word built by repeatedly stripping the smallest left descent.
    pub fn reduced_word(&self, w: &CoxeterElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        while let Some(s) = (0..self.rank()).find(|&s| self.is_left_descent(&cur, s)) {
            word.push(s);
            cur = self.mul(&self.generator(s), &cur);
        }
        word
    }

    /// The element sending every positive root to a negative one.
    pub fn longest_element(&self) -> CoxeterElement {
        let mut w = self.identity();
        while let Some(s) = (0..self.rank()).find(|&s| !self.is_right_descent(&w, s)) {
            w = self.mul(&w, &self.generator(s));
        }
        w
    }

    /// Enumerate the whole group, subject to `budget` elements.
    pub fn enumerate(&self, budget: usize) -> Result<FiniteGroup> {
        FiniteGroup::generate(Arc::clone(&self.points), self.gens.clone(), budget)
    }

    pub fn element_of_index(&self, g: &FiniteGroup, i: usize) -> CoxeterElement {
        CoxeterElement {
            perm: g.element(i).to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_basics() {
        let sys = CoxeterSystem::new(CoxeterMatrix::chain(&[3])).unwrap();
        assert_eq!(sys.root_system().len(), 6);
        let s1 = &sys.reflection_rep().generators()[0];
        let want = Matrix::from_rows(vec![
            vec![Cyclotomic::from_int(-1), Cyclotomic::from_int(1)],
            vec![Cyclotomic::zero(), Cyclotomic::one()],
        ])
        .unwrap();
        assert_eq!(*s1, want);
        assert_eq!(sys.matrix(&sys.generator(0)), want);
        let w0 = sys.longest_element();
        assert_eq!(sys.length(&w0), 3);
        assert_eq!(sys.reduced_word(&w0), vec![0, 1, 0]);
        let c = sys.element_from_word(&[0, 1]).unwrap();
        assert_eq!(sys.reduced_word(&c), vec![0, 1]);
        assert_eq!(sys.length(&sys.identity()), 0);
        assert!(sys.reduced_word(&sys.identity()).is_empty());
    }

    #[test]
    fn generators_are_reflections() {
        let sys = CoxeterSystem::new(CoxeterMatrix::chain(&[5, 3])).unwrap();
        let n = sys.rank();
        for g in sys.reflection_rep().generators() {
            assert_eq!(g.mul(g).unwrap(), Matrix::identity(n));
            let minus = g.eigenspace_basis(&Cyclotomic::from_int(-1)).unwrap();
            assert_eq!(minus.len(), 1);
        }
        assert_eq!(sys.root_system().len(), 30);
    }
}
