//! Invariant-theoretic data of finite reflection groups.

mod fake;
mod molien;
mod regular;
mod solomon;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, Poly, Rational};
use crate::group::FiniteGroup;
use crate::imprim::ImprimParams;

pub use fake::{
    b_invariant_and_gamma, fake_degree, palindrome_search, FakeDegrees, PalindromePair,
};
pub use molien::{degrees_from_molien, molien_series};
pub use regular::{exterior_power_character, regular_element_check, ExteriorPower, RegularVerdict};
pub use solomon::{
    is_well_generated, orlik_solomon_conditions, solomon_identities, OrlikSolomonReport,
    SolomonReport,
};

/// Degrees and codegrees, each sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeData {
    pub degrees: Vec<u32>,
    /// Signed: the trivial summand of a reducible group has codegree −1.
    pub codegrees: Vec<i32>,
}

impl DegreeData {
    pub fn new(mut degrees: Vec<u32>, mut codegrees: Vec<i32>) -> Result<Self> {
        if degrees.len() != codegrees.len() {
            return Err(Error::Invalid(
                "as many degrees as codegrees required".into(),
            ));
        }
        degrees.sort_unstable();
        codegrees.sort_unstable();
        if codegrees.iter().any(|&c| c < -1) {
            return Err(Error::Invalid("codegrees are at least −1".into()));
        }
        Ok(DegreeData { degrees, codegrees })
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// ∏ d_i.
    pub fn order(&self) -> BigUint {
        self.degrees.iter().map(|&d| BigUint::from(d)).product()
    }

    /// m_i = d_i − 1.
    pub fn exponents(&self) -> Vec<u32> {
        self.degrees.iter().map(|d| d - 1).collect()
    }

    /// m_i* = d_i* + 1.
    pub fn coexponents(&self) -> Vec<u32> {
        self.codegrees.iter().map(|&d| (d + 1) as u32).collect()
    }

    /// N = Σ m_i, the number of reflections.
    pub fn num_reflections(&self) -> u32 {
        self.exponents().iter().sum()
    }

    /// N* = Σ m_i*, the number of reflecting hyperplanes.
    pub fn num_hyperplanes(&self) -> u32 {
        self.coexponents().iter().sum()
    }

    /// Integers d that divide as many degrees as codegrees.
    pub fn regular_numbers(&self) -> Vec<u32> {
        let top = self.degrees.iter().copied().max().unwrap_or(0);
        (1..=top)
            .filter(|&d| {
                let a = self.degrees.iter().filter(|&&x| x % d == 0).count();
                let b = self
                    .codegrees
                    .iter()
                    .filter(|&&x| x % d as i32 == 0)
                    .count();
                a == b
            })
            .collect()
    }

    /// Degrees that are regular numbers and divide no other such degree.
    pub fn regular_degrees(&self) -> Vec<u32> {
        let reg = self.regular_numbers();
        let mut cand: Vec<u32> = self
            .degrees
            .iter()
            .copied()
            .filter(|d| reg.contains(d))
            .collect();
        cand.dedup();
        cand.iter()
            .copied()
            .filter(|&d| !cand.iter().any(|&e| e != d && e % d == 0))
            .collect()
    }
}

/// Regular numbers of a degree/codegree pair.
pub fn regular_numbers(dd: &DegreeData) -> Vec<u32> {
    dd.regular_numbers()
}

/// Degrees de, 2de, …, (n−1)de, nd of G(de,e,n); codegrees 0, de, …, (n−1)de
/// when d, e > 1, otherwise d_n − d_{n−i+1}. The natural S_n = G(1,1,n) is
/// reducible: its codegrees are −1 from the trivial summand and 0, …, n − 2
/// from the reflection representation.
pub fn degrees_closed_form(p: &ImprimParams) -> DegreeData {
    let n = p.n as u32;
    let m = p.m();
    let mut degrees: Vec<u32> = (1..n).map(|k| k * m).collect();
    degrees.push(n * p.d);
    degrees.sort_unstable();
    let codegrees: Vec<i32> = if p.is_natural_symmetric() {
        (-1..n as i32 - 1).collect()
    } else if p.d > 1 && p.e > 1 {
        (0..n).map(|k| (k * m) as i32).collect()
    } else {
        let top = *degrees.last().expect("n ≥ 1");
        degrees.iter().rev().map(|d| (top - d) as i32).collect()
    };
    DegreeData::new(degrees, codegrees).expect("same length")
}

/// ∏ (x^{d_i} − 1)/(x − 1).
pub fn poincare_polynomial(degrees: &[u32]) -> Poly<BigInt> {
    degrees.iter().fold(Poly::one(), |acc, &d| {
        acc.mul(&Poly::new(vec![BigInt::one(); d as usize]))
    })
}

/// A class function, one value per conjugacy class of a [`FiniteGroup`] in
/// its class order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(g: &FiniteGroup, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != g.classes().len() {
            return Err(Error::Shape(format!(
                "{} values for {} classes",
                values.len(),
                g.classes().len()
            )));
        }
        Ok(ClassFunction { values })
    }

    pub fn from_fn(g: &FiniteGroup, f: impl Fn(usize) -> Cyclotomic) -> Self {
        ClassFunction {
            values: (0..g.classes().len()).map(f).collect(),
        }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::from_fn(g, |_| Cyclotomic::one())
    }

    /// det_V.
    pub fn det(g: &FiniteGroup) -> Self {
        let info = g.class_info();
        Self::from_fn(g, |c| info[c].det.clone())
    }

    /// The character of V.
    pub fn reflection(g: &FiniteGroup) -> Self {
        let info = g.class_info();
        Self::from_fn(g, |c| info[c].trace.clone())
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at the identity (class 0).
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn conj(&self) -> Self {
        ClassFunction {
            values: self.values.iter().map(Cyclotomic::conj).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    /// ⟨χ, ψ⟩ = |W|⁻¹ Σ_w χ(w)·conj(ψ(w)).
    pub fn inner(&self, other: &Self, g: &FiniteGroup) -> Cyclotomic {
        let sum = g
            .classes()
            .classes()
            .iter()
            .zip(self.values.iter().zip(&other.values))
            .fold(Cyclotomic::zero(), |acc, (c, (a, b))| {
                acc + a * &b.conj() * Cyclotomic::from_int(c.size() as i64)
            });
        sum * Cyclotomic::from_rational(&Rational::new(1.into(), (g.order() as i64).into()))
    }

    pub fn is_irreducible(&self, g: &FiniteGroup) -> bool {
        self.inner(self, g).is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        let dd = degrees_closed_form(&ImprimParams::from_mpn(3, 1, 2).unwrap());
        assert_eq!(
            (dd.degrees.clone(), dd.codegrees.clone()),
            (vec![3, 6], vec![0, 3])
        );
        assert!(dd.regular_numbers().contains(&6));
        let dd = degrees_closed_form(&ImprimParams::from_mpn(4, 2, 2).unwrap());
        assert_eq!(
            (dd.degrees.clone(), dd.codegrees.clone()),
            (vec![4, 4], vec![0, 4])
        );
        let dd = degrees_closed_form(&ImprimParams::from_mpn(7, 7, 2).unwrap());
        assert_eq!(dd.degrees, vec![2, 7]);
        assert_eq!(
            dd.regular_numbers()
                .iter()
                .filter(|&&r| r == 2 || r == 7)
                .count(),
            2
        );
        let s4 = degrees_closed_form(&ImprimParams::from_mpn(1, 1, 4).unwrap());
        assert_eq!(
            (s4.degrees.clone(), s4.codegrees.clone()),
            (vec![1, 2, 3, 4], vec![-1, 0, 1, 2])
        );
        let s4 = DegreeData::new(vec![2, 3, 4], vec![0, 1, 2]).unwrap();
        let reg = s4.regular_numbers();
        assert!(reg.contains(&3) && reg.contains(&4));
    }

    #[test]
    fn poincare() {
        assert_eq!(
            poincare_polynomial(&[2, 3]),
            Poly::<BigInt>::from_ints(&[1, 2, 2, 1])
        );
        assert_eq!(poincare_polynomial(&[2]).coeffs().len(), 2);
    }
}
