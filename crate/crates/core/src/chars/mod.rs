//! Characters of S_n and G(d,1,n): partitions, the Murnaghan–Nakayama
//! recursion, induction, and the G(de,e,n) character counts and fake degrees.

mod imprim;
mod induce;
mod mn;

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::imprim::MonomialElement;

pub use imprim::{
    fake_degree_closed, fake_degree_closed_beta, fake_degree_imprim, imprim_character_degrees,
    irr_count_gdeen, shift_orbits, IrrCount, ShiftOrbit,
};
pub use induce::{induced_character, j_induce, JInduction};
pub use mn::{char_table, mn_value, mn_value_with, CharTableGd1n};

/// A partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The conjugate (transposed) partition.
    pub fn dual(&self) -> Self {
        let top = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=top)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// n(λ) = Σ (i − 1)·λ_i.
    pub fn n_invariant(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    /// All partitions of n in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                go(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Multiplicity of each part size, as (size, multiplicity).
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    /// `21`, `111`; parts ≥ 10 switch to dot separators (`10.2`); `-` is empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let sep = if self.0.iter().any(|&p| p >= 10) {
            "."
        } else {
            ""
        };
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(sep))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let bad = || Error::Parse(format!("bad partition {s:?}"));
        let parts: Vec<u32> = if s.contains('.') || s.contains(' ') {
            s.split(['.', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(bad());
        }
        Ok(Partition(parts))
    }
}

/// A d-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DPartition(Vec<Partition>);

/// Cycle types of G(d,1,n) are d-partitions as well.
pub type ClassParam = DPartition;

impl DPartition {
    pub fn new(parts: Vec<Partition>) -> Result<Self> {
        if parts.is_empty() {
            return Err(invalid("a d-partition needs d ≥ 1 components"));
        }
        Ok(DPartition(parts))
    }

    pub fn d(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.0[i]
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(Partition::weight).sum()
    }

    /// Cyclic shift π(α_0, …, α_{d−1}) = (α_1, …, α_{d−1}, α_0), applied k times.
    pub fn shift(&self, k: usize) -> Self {
        let d = self.d();
        DPartition((0..d).map(|i| self.0[(i + k) % d].clone()).collect())
    }

    pub(crate) fn with_component(&self, i: usize, p: Partition) -> Self {
        let mut v = self.0.clone();
        v[i] = p;
        DPartition(v)
    }

    /// Order of the centralizer of an element with this cycle type in
    /// G(d,1,n): ∏ (k·d)^{m_k} m_k! over the parts k of each component.
    pub fn centralizer_order(&self) -> u128 {
        let d = self.d() as u128;
        self.0
            .iter()
            .flat_map(Partition::multiplicities)
            .map(|(k, m)| {
                let fact: u128 = (1..=m as u128).product();
                (k as u128 * d).pow(m) * fact
            })
            .product()
    }
}

impl fmt::Display for DPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(Partition::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for DPartition {
    type Err = Error;

    /// `(21,-,1)`; a bare partition is read as a 1-partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s);
        let parts = body
            .split(',')
            .map(str::parse::<Partition>)
            .collect::<Result<Vec<_>>>()?;
        DPartition::new(parts)
    }
}

/// β-numbers of a partition with a chosen number m of entries (m at least the
/// number of parts; extra entries come from zero parts).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaSet {
    values: Vec<u32>,
}

impl BetaSet {
    /// S = (λ_1 + m − 1, λ_2 + m − 2, …, λ_m).
    pub fn new(p: &Partition, m: usize) -> Result<Self> {
        if m < p.len() {
            return Err(invalid(format!(
                "β-set of {p} needs at least {} entries",
                p.len()
            )));
        }
        let values = (0..m)
            .map(|i| p.parts().get(i).copied().unwrap_or(0) + (m - 1 - i) as u32)
            .collect();
        Ok(BetaSet { values })
    }

    pub fn of(p: &Partition) -> Self {
        Self::new(p, p.len()).expect("m equals the number of parts")
    }

    /// Strictly decreasing β-numbers.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// S ↦ (S + 1) ∪ {0}, which represents the same partition.
    pub fn shifted(&self) -> Self {
        let mut values: Vec<u32> = self.values.iter().map(|v| v + 1).collect();
        values.push(0);
        BetaSet { values }
    }

    pub fn partition(&self) -> Partition {
        let m = self.values.len();
        Partition::new(
            self.values
                .iter()
                .enumerate()
                .map(|(i, &b)| b - (m - 1 - i) as u32)
                .collect(),
        )
    }
}

/// All d-partitions of n: the weight of α_0 runs from n down to 0, each
/// component in reverse lexicographic order, then the remaining components.
pub fn d_partitions(d: usize, n: u32) -> Vec<DPartition> {
    fn go(d: usize, n: u32, cur: &mut Vec<Partition>, out: &mut Vec<DPartition>) {
        if cur.len() + 1 == d {
            for p in Partition::all(n) {
                cur.push(p);
                out.push(DPartition(cur.clone()));
                cur.pop();
            }
            return;
        }
        for k in (0..=n).rev() {
            for p in Partition::all(k) {
                cur.push(p);
                go(d, n - k, cur, out);
                cur.pop();
            }
        }
    }
    if d == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(d, n, &mut Vec::new(), &mut out);
    out
}

/// Cycle type of a monomial element of G(d,1,n): component t collects the
/// lengths of the cycles whose exponent sum is t modulo d.
pub fn class_param(g: &MonomialElement, d: u32) -> ClassParam {
    let n = g.rank();
    let mut comps = vec![Vec::new(); d as usize];
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let (mut len, mut sum, mut i) = (0u32, 0u64, start);
        while !seen[i] {
            seen[i] = true;
            sum += u64::from(g.exps[i]);
            len += 1;
            i = g.perm[i];
        }
        comps[(sum % u64::from(d)) as usize].push(len);
    }
    DPartition(comps.into_iter().map(Partition::new).collect())
}
