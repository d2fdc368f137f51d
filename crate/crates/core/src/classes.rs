//! Conjugacy classes, Geck–Pfeiffer descent, Carter's involution
//! decomposition and conjugacy of elements to their inverses.
//!
//! Lengths are the generator word lengths stored by [`FiniteGroup`], which
//! for a Coxeter group enumerated from its simple reflections is the Coxeter
//! length.

use std::collections::{HashMap, VecDeque};

use crate::error::{invariant, Result};
use crate::group::{compose, invert, FiniteGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    /// Canonical member: minimal length, then lexicographically smallest word.
    pub representative: usize,
    /// Sorted element indices.
    pub members: Vec<usize>,
    pub l_min: u32,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// The conjugacy classes of a group, sorted by (l_min, size, representative).
#[derive(Clone, Debug)]
pub struct ClassPartition {
    classes: Vec<ConjClass>,
    class_of: Vec<u32>,
}

impl ClassPartition {
    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjClass::size).collect()
    }
}

pub(crate) fn partition(g: &FiniteGroup) -> ClassPartition {
    let order = g.order();
    let conj_gens: Vec<(Vec<u16>, Vec<u16>)> = g
        .generators()
        .iter()
        .map(|s| (s.clone(), invert(s)))
        .collect();
    let mut assigned = vec![u32::MAX; order];
    let mut raw: Vec<ConjClass> = Vec::new();
    // Element indices follow shortlex order, so the first unassigned element
    // met in index order is the canonical representative of its class.
    for start in 0..order {
        if assigned[start] != u32::MAX {
            continue;
        }
        let id = raw.len() as u32;
        assigned[start] = id;
        let mut members = vec![start];
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for (s, s_inv) in &conj_gens {
                let p = compose(&compose(s, g.element(x)), s_inv);
                let y = g.index_of(&p).expect("closed under conjugation");
                if assigned[y] == u32::MAX {
                    assigned[y] = id;
                    members.push(y);
                    queue.push(y);
                }
            }
        }
        members.sort_unstable();
        raw.push(ConjClass {
            representative: start,
            l_min: g.depth(start),
            members,
        });
    }
    raw.sort_by_key(|c| (c.l_min, c.members.len(), c.representative));
    let mut class_of = vec![0u32; order];
    for (k, c) in raw.iter().enumerate() {
        for &m in &c.members {
            class_of[m] = k as u32;
        }
    }
    ClassPartition {
        classes: raw,
        class_of,
    }
}

pub fn conjugacy_classes(g: &FiniteGroup) -> &[ConjClass] {
    g.classes().classes()
}

/// One step x → s·x·s of a descent path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentStep {
    pub from: usize,
    pub generator: usize,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentPath {
    pub start: usize,
    pub steps: Vec<DescentStep>,
}

impl DescentPath {
    pub fn end(&self) -> usize {
        self.steps.last().map_or(self.start, |s| s.to)
    }
}

/// Path x = x_0 → x_1 → … → y with y of minimal length in its class, each step
/// a conjugation by a generator that does not increase the length.
pub fn gp_descent(g: &FiniteGroup, x: usize) -> Result<DescentPath> {
    let target = g.classes().classes()[g.classes().class_of(x)].l_min;
    let conj: Vec<(Vec<u16>, Vec<u16>)> = g
        .generators()
        .iter()
        .map(|s| (s.clone(), invert(s)))
        .collect();
    let mut prev: HashMap<usize, (usize, usize)> = HashMap::new();
    let mut queue = VecDeque::from([x]);
    prev.insert(x, (usize::MAX, usize::MAX));
    while let Some(y) = queue.pop_front() {
        if g.depth(y) == target {
            let mut steps = Vec::new();
            let mut cur = y;
            while cur != x {
                let (p, s) = prev[&cur];
                steps.push(DescentStep {
                    from: p,
                    generator: s,
                    to: cur,
                });
                cur = p;
            }
            steps.reverse();
            return Ok(DescentPath { start: x, steps });
        }
        for (s, (sp, sp_inv)) in conj.iter().enumerate() {
            let p = compose(&compose(sp, g.element(y)), sp_inv);
            let z = g.index_of(&p).expect("closed under conjugation");
            if g.depth(z) <= g.depth(y) && !prev.contains_key(&z) {
                prev.insert(z, (y, s));
                queue.push_back(z);
            }
        }
    }
    Err(invariant(format!(
        "no non-increasing conjugation path from element {x} reaches length {target}"
    )))
}

/// Involutions of a group (including the identity), ordered by length.
pub struct InvolutionSet {
    involutions: Vec<usize>,
}

impl InvolutionSet {
    pub fn new(g: &FiniteGroup) -> Self {
        let mut involutions: Vec<usize> = (0..g.order())
            .filter(|&i| g.element_order(i) <= 2)
            .collect();
        involutions.sort_by_key(|&i| (g.depth(i), i));
        InvolutionSet { involutions }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.involutions
    }

    /// w = x·y with x² = y² = 1; x is the first hit in order of length.
    pub fn carter_decomposition(&self, g: &FiniteGroup, w: usize) -> Result<(usize, usize)> {
        for &x in &self.involutions {
            let y = g.mul(x, w);
            if g.element_order(y) <= 2 {
                return Ok((x, y));
            }
        }
        Err(invariant(format!(
            "element {w} is not a product of two involutions"
        )))
    }
}

pub fn carter_decomposition(g: &FiniteGroup, w: usize) -> Result<(usize, usize)> {
    InvolutionSet::new(g).carter_decomposition(g, w)
}

/// Some g with g·w·g^{-1} = w^{-1}.
pub fn conjugate_to_inverse(g: &FiniteGroup, w: usize) -> Result<usize> {
    let target = g.inverse(w);
    (0..g.order())
        .find(|&c| g.conjugate(w, c) == target)
        .ok_or_else(|| invariant(format!("element {w} is not conjugate to its inverse")))
}

/// Checks that the minimal-length elements of a class form a single block
/// under the relation generated by length-preserving generator conjugation and
/// the length-additive conjugation relation x ~ y.
pub fn cmin_connected(g: &FiniteGroup, class: usize) -> bool {
    let c = &g.classes().classes()[class];
    let cmin: Vec<usize> = c
        .members
        .iter()
        .copied()
        .filter(|&m| g.depth(m) == c.l_min)
        .collect();
    let pos: HashMap<usize, usize> = cmin.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut parent: Vec<usize> = (0..cmin.len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    let join = |a: usize, b: usize, parent: &mut Vec<usize>| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    };
    for (i, &x) in cmin.iter().enumerate() {
        let lx = g.depth(x);
        for w in 0..g.order() {
            let lw = g.depth(w);
            let wx = g.mul(w, x);
            // w·x = y·w with l(wx) = l(w) + l(x).
            if g.depth(wx) == lw + lx {
                let y = g.mul(wx, g.inverse(w));
                if let Some(&j) = pos.get(&y) {
                    join(i, j, &mut parent);
                }
            }
            // x·w = w·y with l(wy) = l(w) + l(y).
            let y = g.mul(g.inverse(w), g.mul(x, w));
            if let Some(&j) = pos.get(&y) {
                if g.depth(g.mul(w, y)) == lw + g.depth(y) {
                    join(i, j, &mut parent);
                }
            }
        }
    }
    let root = find(&mut parent, 0);
    (0..cmin.len()).all(|i| find(&mut parent, i) == root)
}
