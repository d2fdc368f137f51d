use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::classify::FiniteType;
use super::matrix::{CartanMatrix, CoxeterMatrix};
use crate::error::{invalid, Error, Result};
use crate::exact::{Cyclotomic, Matrix};

/// Irreducible crystallographic root system type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrystalType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CrystalType {
    pub fn rank(&self) -> usize {
        match *self {
            CrystalType::A(n)
            | CrystalType::B(n)
            | CrystalType::C(n)
            | CrystalType::D(n)
            | CrystalType::E(n) => n,
            CrystalType::F4 => 4,
            CrystalType::G2 => 2,
        }
    }

    /// Underlying Coxeter type, with the same node labelling.
    pub fn coxeter_type(&self) -> FiniteType {
        match *self {
            CrystalType::A(n) => FiniteType::A(n),
            CrystalType::B(n) | CrystalType::C(n) => FiniteType::B(n),
            CrystalType::D(n) => FiniteType::D(n),
            CrystalType::E(n) => FiniteType::E(n),
            CrystalType::F4 => FiniteType::F4,
            CrystalType::G2 => FiniteType::I2(6),
        }
    }

    /// Integer Cartan matrix c_st = 2(α_s, α_t)/(α_s, α_s). For B_n node 0 is
    /// the short root, for C_n node 0 is long, for G₂ node 0 is long and for
    /// F₄ nodes 0, 1 are long.
    pub fn integer_cartan(&self) -> Vec<Vec<i64>> {
        let cox = self.coxeter_type().coxeter_matrix();
        let n = self.rank();
        let mut c = vec![vec![0i64; n]; n];
        for s in 0..n {
            for t in 0..n {
                c[s][t] = match cox.get(s, t) {
                    Some(1) => 2,
                    Some(2) => 0,
                    _ => -1,
                };
            }
        }
        match *self {
            CrystalType::B(_) => c[0][1] = -2,
            CrystalType::C(_) => c[1][0] = -2,
            CrystalType::G2 => c[1][0] = -3,
            CrystalType::F4 => c[2][1] = -2,
            _ => {}
        }
        c
    }

    pub fn cartan_matrix(&self) -> CartanMatrix {
        let c = self.integer_cartan();
        let n = self.rank();
        let m = Matrix::from_fn(n, n, |s, t| Cyclotomic::from_int(c[s][t]));
        CartanMatrix::new(m, &self.coxeter_matrix())
            .expect("crystallographic Cartan matrix is valid")
    }

    pub fn coxeter_matrix(&self) -> CoxeterMatrix {
        self.coxeter_type().coxeter_matrix()
    }

    /// Positive roots as integer coefficient vectors in the simple roots.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let c = self.integer_cartan();
        let n = self.rank();
        let simple: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut seen: HashSet<Vec<i64>> = simple.iter().cloned().collect();
        let mut out = simple.clone();
        let mut queue: VecDeque<Vec<i64>> = simple.into();
        while let Some(b) = queue.pop_front() {
            for i in 0..n {
                // s_i(β) = β − ⟨α_i^∨, β⟩ α_i.
                let pairing: i64 = (0..n).map(|j| c[i][j] * b[j]).sum();
                let mut r = b.clone();
                r[i] -= pairing;
                if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && seen.insert(r.clone()) {
                    out.push(r.clone());
                    queue.push_back(r);
                }
            }
        }
        out
    }

    /// Relative squared lengths |α_s|², scaled so the shortest is 1.
    pub fn squared_lengths(&self) -> Vec<i64> {
        let c = self.integer_cartan();
        let n = self.rank();
        // c_st |α_s|² = c_ts |α_t|² along the connected graph; the length
        // ratio of two roots is 1, 2 or 3, so starting from 6 stays integral.
        let mut len = vec![0i64; n];
        len[0] = 6;
        let mut changed = true;
        while changed {
            changed = false;
            for s in 0..n {
                for t in 0..n {
                    if len[s] != 0 && len[t] == 0 && c[s][t] != 0 {
                        len[t] = c[s][t] * len[s] / c[t][s];
                        changed = true;
                    }
                }
            }
        }
        let g = len.iter().fold(0i64, |a, &b| a.gcd(&b));
        len.iter().map(|l| l / g).collect()
    }

    /// Highest root: the unique positive root of maximal height.
    pub fn highest_root(&self) -> Vec<i64> {
        self.positive_roots()
            .into_iter()
            .max_by_key(|r| r.iter().sum::<i64>())
            .expect("nonempty root system")
    }
}

impl fmt::Display for CrystalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrystalType::A(n) => write!(f, "A{n}"),
            CrystalType::B(n) => write!(f, "B{n}"),
            CrystalType::C(n) => write!(f, "C{n}"),
            CrystalType::D(n) => write!(f, "D{n}"),
            CrystalType::E(n) => write!(f, "E{n}"),
            CrystalType::F4 => write!(f, "F4"),
            CrystalType::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for CrystalType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || invalid(format!("{s:?} is not a crystallographic type"));
        if s.len() < 2 {
            return Err(bad());
        }
        let (fam, num) = s.split_at(1);
        let n: usize = num.parse().map_err(|_| bad())?;
        Ok(match (fam, n) {
            ("A", n) if n >= 1 => CrystalType::A(n),
            ("B", n) if n >= 2 => CrystalType::B(n),
            ("C", n) if n >= 2 => CrystalType::C(n),
            ("D", n) if n >= 4 => CrystalType::D(n),
            ("E", 6..=8) => CrystalType::E(n),
            ("F", 4) => CrystalType::F4,
            ("G", 2) => CrystalType::G2,
            _ => return Err(bad()),
        })
    }
}

fn primes_dividing(values: impl IntoIterator<Item = i64>) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for v in values {
        let mut v = v.unsigned_abs();
        let mut p = 2;
        while p * p <= v {
            while v % p == 0 {
                out.insert(p);
                v /= p;
            }
            p += 1;
        }
        if v > 1 {
            out.insert(v);
        }
    }
    out
}

/// Bad primes divide a coefficient m_α of the highest root; torsion primes
/// divide a coefficient of the highest coroot, m_α·|α|²/|α̃|².
pub fn bad_and_torsion_primes(t: &CrystalType) -> (BTreeSet<u64>, BTreeSet<u64>) {
    let high = t.highest_root();
    let len = t.squared_lengths();
    let long = *len.iter().max().expect("nonempty");
    let dual: Vec<i64> = high.iter().zip(&len).map(|(m, l)| m * l / long).collect();
    (primes_dividing(high), primes_dividing(dual))
}

/// Parse a type name and compute its bad and torsion primes.
pub fn bad_and_torsion_primes_named(name: &str) -> Result<(BTreeSet<u64>, BTreeSet<u64>)> {
    let t: CrystalType = name.parse()?;
    Ok(bad_and_torsion_primes(&t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    #[test]
    fn root_counts() {
        for (t, n) in [
            (CrystalType::A(3), 6),
            (CrystalType::B(3), 9),
            (CrystalType::C(3), 9),
            (CrystalType::D(4), 12),
            (CrystalType::G2, 6),
            (CrystalType::F4, 24),
            (CrystalType::E(6), 36),
            (CrystalType::E(8), 120),
        ] {
            assert_eq!(t.positive_roots().len(), n, "{t}");
        }
    }

    #[test]
    fn examples() {
        assert_eq!(
            bad_and_torsion_primes(&CrystalType::A(4)),
            (set(&[]), set(&[]))
        );
        assert_eq!(
            bad_and_torsion_primes(&CrystalType::C(3)),
            (set(&[2]), set(&[]))
        );
        assert_eq!(
            bad_and_torsion_primes(&CrystalType::E(8)),
            (set(&[2, 3, 5]), set(&[2, 3, 5]))
        );
        assert!(bad_and_torsion_primes_named("H3").is_err());
    }
}
