use std::fmt;
use std::str::FromStr;

use super::matrix::{is_finite, CoxeterMatrix};
use crate::error::{Error, Result};

/// Irreducible finite Coxeter type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H3,
    H4,
    /// Dihedral I₂(m), m ≥ 5.
    I2(u32),
}

impl FiniteType {
    pub fn rank(&self) -> usize {
        match *self {
            FiniteType::A(n) | FiniteType::B(n) | FiniteType::D(n) | FiniteType::E(n) => n,
            FiniteType::F4 | FiniteType::H4 => 4,
            FiniteType::H3 => 3,
            FiniteType::I2(_) => 2,
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            FiniteType::A(_) => "A",
            FiniteType::B(_) => "B",
            FiniteType::D(_) => "D",
            FiniteType::E(_) => "E",
            FiniteType::F4 => "F",
            FiniteType::H3 | FiniteType::H4 => "H",
            FiniteType::I2(_) => "I",
        }
    }

    /// Coxeter matrix with a fixed node labelling: chains for A, B (4 on the
    /// first edge), F (4 in the middle) and H (5 on the first edge); for D_n
    /// nodes 0 and 1 hang off node 2; for E_n node 1 hangs off node 3 of the
    /// chain 0-2-3-4-….
    pub fn coxeter_matrix(&self) -> CoxeterMatrix {
        match *self {
            FiniteType::A(n) => CoxeterMatrix::chain(&vec![3; n - 1]),
            FiniteType::B(n) => {
                let mut l = vec![3; n - 1];
                l[0] = 4;
                CoxeterMatrix::chain(&l)
            }
            FiniteType::F4 => CoxeterMatrix::chain(&[3, 4, 3]),
            FiniteType::H3 => CoxeterMatrix::chain(&[5, 3]),
            FiniteType::H4 => CoxeterMatrix::chain(&[5, 3, 3]),
            FiniteType::I2(m) => CoxeterMatrix::chain(&[m]),
            FiniteType::D(n) => {
                let mut edges = vec![(0, 2), (1, 2)];
                edges.extend((2..n - 1).map(|i| (i, i + 1)));
                from_edges(n, &edges)
            }
            FiniteType::E(n) => {
                let mut edges = vec![(0, 2), (1, 3)];
                edges.extend((2..n - 1).map(|i| (i, i + 1)));
                from_edges(n, &edges)
            }
        }
    }
}

fn from_edges(n: usize, edges: &[(usize, usize)]) -> CoxeterMatrix {
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    Some(if i == j {
                        1
                    } else if edges.contains(&(i, j)) || edges.contains(&(j, i)) {
                        3
                    } else {
                        2
                    })
                })
                .collect()
        })
        .collect();
    CoxeterMatrix::new(m).expect("valid by construction")
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::I2(m) => write!(f, "I2({m})"),
            t => write!(f, "{}{}", t.family(), t.rank()),
        }
    }
}

impl FromStr for FiniteType {
    type Err = Error;

    /// Accepts names such as `A3`, `B4`, `D5`, `E6`, `F4`, `H3`, `H4`, `G2`, `I2(5)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown Coxeter type {s:?}"));
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let m: u32 = rest.parse().map_err(|_| bad())?;
            return match m {
                0..=2 => Err(bad()),
                3 => Ok(FiniteType::A(2)),
                4 => Ok(FiniteType::B(2)),
                _ => Ok(FiniteType::I2(m)),
            };
        }
        let (fam, num) = s.split_at(1.min(s.len()));
        let n: usize = num.parse().map_err(|_| bad())?;
        let t = match (fam, n) {
            ("A", n) if n >= 1 => FiniteType::A(n),
            ("B", n) if n >= 2 => FiniteType::B(n),
            ("C", n) if n >= 2 => FiniteType::B(n),
            ("D", n) if n >= 4 => FiniteType::D(n),
            ("E", 6..=8) => FiniteType::E(n),
            ("F", 4) => FiniteType::F4,
            ("G", 2) => FiniteType::I2(6),
            ("H", 3) => FiniteType::H3,
            ("H", 4) => FiniteType::H4,
            _ => return Err(bad()),
        };
        Ok(t)
    }
}

/// Decompose a finite Coxeter matrix into irreducible types.
pub fn classify_finite_type(m: &CoxeterMatrix) -> Result<Vec<FiniteType>> {
    if !is_finite(m) {
        return Err(Error::NotFinite);
    }
    match_table_graphs(m)
        .ok_or_else(|| Error::Invariant("finite Coxeter matrix did not match a known graph".into()))
}

/// Match every connected component against the list of irreducible finite
/// Coxeter graphs by shape alone; `None` if some component is not on it.
pub fn match_table_graphs(m: &CoxeterMatrix) -> Option<Vec<FiniteType>> {
    m.components()
        .iter()
        .map(|c| match_component(&m.restrict(c)))
        .collect()
}

fn match_component(m: &CoxeterMatrix) -> Option<FiniteType> {
    let n = m.rank();
    if n == 1 {
        return Some(FiniteType::A(1));
    }
    if n == 2 {
        return match m.get(0, 1)? {
            3 => Some(FiniteType::A(2)),
            4 => Some(FiniteType::B(2)),
            k if k >= 5 => Some(FiniteType::I2(k)),
            _ => None,
        };
    }
    let mut edges = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            match m.get(s, t) {
                Some(2) => {}
                label => edges.push((s, t, label?)),
            }
        }
    }
    if edges.len() != n - 1 {
        return None;
    }
    let degree = |v: usize| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let heavy: Vec<&(usize, usize, u32)> = edges.iter().filter(|e| e.2 != 3).collect();
    let branch: Vec<usize> = (0..n).filter(|&v| degree(v) >= 3).collect();
    if heavy.is_empty() {
        if branch.is_empty() {
            return Some(FiniteType::A(n));
        }
        if branch.len() != 1 || degree(branch[0]) != 3 {
            return None;
        }
        let mut arms = arm_lengths(n, &edges, branch[0]);
        arms.sort_unstable();
        return match (arms[0], arms[1], arms[2]) {
            (1, 1, k) if k + 3 == n => Some(FiniteType::D(n)),
            (1, 2, 2) => Some(FiniteType::E(6)),
            (1, 2, 3) => Some(FiniteType::E(7)),
            (1, 2, 4) => Some(FiniteType::E(8)),
            _ => None,
        };
    }
    if heavy.len() != 1 || !branch.is_empty() {
        return None;
    }
    let (s, t, label) = *heavy[0];
    let at_end = degree(s) == 1 || degree(t) == 1;
    match label {
        4 if at_end => Some(FiniteType::B(n)),
        4 if n == 4 => Some(FiniteType::F4),
        5 if at_end && n == 3 => Some(FiniteType::H3),
        5 if at_end && n == 4 => Some(FiniteType::H4),
        _ => None,
    }
}

fn arm_lengths(n: usize, edges: &[(usize, usize, u32)], centre: usize) -> Vec<usize> {
    let neighbours = |v: usize| -> Vec<usize> {
        edges
            .iter()
            .filter_map(|e| {
                if e.0 == v {
                    Some(e.1)
                } else if e.1 == v {
                    Some(e.0)
                } else {
                    None
                }
            })
            .collect()
    };
    neighbours(centre)
        .into_iter()
        .map(|start| {
            let mut len = 1;
            let (mut prev, mut cur) = (centre, start);
            loop {
                let next: Vec<usize> = neighbours(cur).into_iter().filter(|&x| x != prev).collect();
                match next.as_slice() {
                    [x] if len < n => {
                        prev = cur;
                        cur = *x;
                        len += 1;
                    }
                    _ => break,
                }
            }
            len
        })
        .collect()
}
