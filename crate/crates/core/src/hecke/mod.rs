//! The two-parameter Iwahori–Hecke algebra of S_n, T_s² = u·T_1 + v·T_s,
//! with the Ocneanu trace and the HOMFLY-PT invariant of braid closures.

mod markov;
mod specialize;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::exact::{Ring, UvLaurent};

pub use markov::{markov_fuzz, random_braid, MarkovReport};
pub use specialize::{specialize, Specialization, Target};

/// A braid on `n` strands; letter i is the Artin generator s_i and −i its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n == 0 {
            return Err(invalid("a braid needs at least one strand"));
        }
        if let Some(&bad) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= n)
        {
            return Err(invalid(format!(
                "letter {bad} out of range for {n} strands"
            )));
        }
        Ok(BraidWord { n, letters })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// The underlying permutation of the strands.
    pub fn permutation(&self) -> Vec<u8> {
        let mut w: Vec<u8> = (0..self.n as u8).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            w.swap(i - 1, i);
        }
        w
    }

    /// Number of components of the closure: the cycles of the permutation.
    pub fn components(&self) -> usize {
        let w = self.permutation();
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = w[i] as usize;
            }
        }
        count
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// `"3: 1 -2 1"`.
    fn from_str(s: &str) -> Result<Self> {
        let (n, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("braid word {s:?} lacks \"n:\"")))?;
        let n = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count in {s:?}")))?;
        let letters = rest
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad letter {t:?}")))
            })
            .collect::<Result<_>>()?;
        BraidWord::new(n, letters)
    }
}

/// Σ c_w·T_w with permutations in one-line notation (0-based images).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Vec<u8>, UvLaurent>,
}

fn u() -> UvLaurent {
    UvLaurent::uv(1, 0)
}

fn v() -> UvLaurent {
    UvLaurent::uv(0, 1)
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// T_1.
    pub fn one(n: usize) -> Self {
        Self::basis((0..n as u8).collect())
    }

    /// T_w.
    pub fn basis(w: Vec<u8>) -> Self {
        let n = w.len();
        let mut terms = BTreeMap::new();
        terms.insert(w, UvLaurent::one());
        HeckeElement { n, terms }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &UvLaurent)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }

    pub fn coeff(&self, w: &[u8]) -> UvLaurent {
        self.terms.get(w).cloned().unwrap_or_else(UvLaurent::zero)
    }

    fn add_term(&mut self, w: Vec<u8>, c: UvLaurent) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(UvLaurent::zero);
        *slot = slot.plus(&c);
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &UvLaurent) -> Self {
        let mut out = Self::zero(self.n);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a.times(c));
        }
        out
    }

    /// h·T_{s_i}, or h·T_{s_i}⁻¹ with T_s⁻¹ = u⁻¹T_s − u⁻¹v·T_1.
    pub fn mul_by_generator(&self, i: usize, inverse: bool) -> Result<Self> {
        if i == 0 || i >= self.n {
            return Err(invalid(format!(
                "generator {i} out of range for {} strands",
                self.n
            )));
        }
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let mut ws = w.clone();
            ws.swap(i - 1, i);
            if w[i - 1] < w[i] {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(ws, c.times(&u()));
                out.add_term(w.clone(), c.times(&v()));
            }
        }
        if inverse {
            let u_inv = UvLaurent::uv(-1, 0);
            let minus_v_over_u = UvLaurent::uv(-1, 1).negated();
            return Ok(out.scale(&u_inv).add(&self.scale(&minus_v_over_u)));
        }
        Ok(out)
    }

    /// Product in the algebra: each T_w of `other` is applied through a
    /// reduced word of w.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(invalid("Hecke elements on different strand counts"));
        }
        let mut out = Self::zero(self.n);
        for (w, c) in &other.terms {
            let mut acc = self.scale(c);
            for i in reduced_word(w) {
                acc = acc.mul_by_generator(i, false)?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// The natural inclusion H(S_n) → H(S_{n+1}).
    pub fn include(&self) -> Self {
        let n = self.n as u8;
        HeckeElement {
            n: self.n + 1,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    let mut w = w.clone();
                    w.push(n);
                    (w, c.clone())
                })
                .collect(),
        }
    }
}

/// Generators (1-based) with w = s_{i_1}·…·s_{i_k} reduced.
pub fn reduced_word(w: &[u8]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut word = Vec::new();
    while let Some(i) = (1..w.len()).find(|&i| w[i - 1] > w[i]) {
        w.swap(i - 1, i);
        word.push(i);
    }
    word.reverse();
    word
}

/// Image of a braid word in the Hecke algebra, starting from T_1.
pub fn braid_to_hecke(b: &BraidWord) -> HeckeElement {
    let mut h = HeckeElement::one(b.n);
    for &l in &b.letters {
        h = h
            .mul_by_generator(l.unsigned_abs() as usize, l < 0)
            .expect("letters validated on construction");
    }
    h
}

/// The Ocneanu trace with τ(T_1) = v⁻¹(1 − u) per added strand and
/// τ_{n}(h·T_{s_{n−1}}) = τ_{n−1}(h), memoized on basis elements.
#[derive(Default)]
pub struct OcneanuTrace {
    cache: HashMap<Vec<u8>, UvLaurent>,
}

impl OcneanuTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn trace(&mut self, h: &HeckeElement) -> UvLaurent {
        h.terms.iter().fold(UvLaurent::zero(), |acc, (w, c)| {
            acc.plus(&c.times(&self.basis(w)))
        })
    }

    /// τ_n(T_w). If w fixes n it lies in S_{n−1} and the scaling rule
    /// applies. Otherwise carrying n to the last position gives
    /// w = x·s_{n−1}·y with x = w·s_p⋯s_{n−1}, y = s_{n−2}⋯s_p and lengths
    /// adding, so τ_n(T_w) = τ_{n−1}(T_x·T_y).
    fn basis(&mut self, w: &[u8]) -> UvLaurent {
        let n = w.len();
        if n <= 1 {
            return UvLaurent::one();
        }
        if let Some(v) = self.cache.get(w) {
            return v.clone();
        }
        let top = (n - 1) as u8;
        let value = if w[n - 1] == top {
            let scale = UvLaurent::uv(0, -1).minus(&UvLaurent::uv(1, -1));
            scale.times(&self.basis(&w[..n - 1]))
        } else {
            let p = w.iter().position(|&x| x == top).expect("permutation") + 1;
            let mut x = w.to_vec();
            for i in p..n {
                x.swap(i - 1, i);
            }
            x.pop();
            let mut h = HeckeElement::basis(x);
            for i in (p..n - 1).rev() {
                h = h.mul_by_generator(i, false).expect("index below n − 1");
            }
            self.trace(&h)
        };
        self.cache.insert(w.to_vec(), value.clone());
        value
    }
}

/// τ_n(h) with a fresh cache.
pub fn ocneanu_trace(h: &HeckeElement) -> UvLaurent {
    OcneanuTrace::new().trace(h)
}

/// X_L(u, v) of the closure of a braid, with its number of components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkInvariant {
    pub polynomial: UvLaurent,
    pub components: usize,
}

impl LinkInvariant {
    pub fn render(&self) -> String {
        self.polynomial.render_uv()
    }
}

pub fn homfly(b: &BraidWord) -> LinkInvariant {
    homfly_with(b, &mut OcneanuTrace::new())
}

/// [`homfly`] reusing a trace cache across calls.
pub fn homfly_with(b: &BraidWord, trace: &mut OcneanuTrace) -> LinkInvariant {
    LinkInvariant {
        polynomial: trace.trace(&braid_to_hecke(b)),
        components: b.components(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uv(a: i64, b: i64) -> UvLaurent {
        UvLaurent::uv(a, b)
    }

    #[test]
    fn quadratic_relation() {
        let b: BraidWord = "2: 1 1".parse().unwrap();
        let h = braid_to_hecke(&b);
        assert_eq!(h.coeff(&[0, 1]), uv(1, 0));
        assert_eq!(h.coeff(&[1, 0]), uv(0, 1));
        let h = braid_to_hecke(&"2: 1 1 1".parse().unwrap());
        assert_eq!(h.coeff(&[0, 1]), uv(1, 1));
        assert_eq!(h.coeff(&[1, 0]), uv(1, 0).plus(&uv(0, 2)));
        let h = braid_to_hecke(&"2: 1 -1".parse().unwrap());
        assert_eq!(h, HeckeElement::one(2));
        assert!("3: 3".parse::<BraidWord>().is_err());
        assert!("0:".parse::<BraidWord>().is_err());
    }

    #[test]
    fn traces() {
        assert_eq!(ocneanu_trace(&HeckeElement::one(1)), UvLaurent::one());
        assert_eq!(
            ocneanu_trace(&HeckeElement::one(2)),
            uv(0, -1).minus(&uv(1, -1))
        );
        assert_eq!(
            ocneanu_trace(&HeckeElement::basis(vec![1, 0])),
            UvLaurent::one()
        );
    }

    #[test]
    fn trefoil() {
        let x = homfly(&"2: 1 1 1".parse().unwrap());
        assert_eq!(x.render(), "2u-u^2+v^2");
        assert_eq!(x.components, 1);
        assert_eq!(homfly(&"1:".parse().unwrap()).polynomial, UvLaurent::one());
        assert_eq!(
            homfly(&"2: 1".parse().unwrap()).polynomial,
            UvLaurent::one()
        );
        let stab = homfly(&"3: 1 1 1 2".parse().unwrap());
        let conj = homfly(&"3: -2 1 1 1 2 2".parse().unwrap());
        assert_eq!(stab.polynomial, x.polynomial);
        assert_eq!(conj.polynomial, x.polynomial);
        // Without stabilization the third strand is a split unknot.
        let split = homfly(&"3: -2 1 1 1 2".parse().unwrap());
        assert_eq!(
            split.polynomial,
            x.polynomial.times(&uv(0, -1).minus(&uv(1, -1)))
        );
        assert_eq!(split.components, 2);
    }

    #[test]
    fn reduced_words() {
        let w = vec![2, 0, 1];
        let mut h = HeckeElement::one(3);
        for i in reduced_word(&w) {
            h = h.mul_by_generator(i, false).unwrap();
        }
        assert_eq!(h, HeckeElement::basis(w));
    }
}
