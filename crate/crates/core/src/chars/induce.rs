use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, invariant, Result};
use crate::exact::{Cyclotomic, Poly, Rational};
use crate::group::FiniteGroup;
use crate::invariants::{b_invariant_and_gamma, ClassFunction};

/// Ind_H^G ψ for a subgroup `h` of `g` on the same point set.
///
/// Class fusion is read off element by element:
/// Ind ψ(C) = |G|/(|H|·|C|) Σ_{x ∈ H ∩ C} ψ(x).
pub fn induced_character(
    g: &FiniteGroup,
    h: &FiniteGroup,
    psi: &ClassFunction,
) -> Result<ClassFunction> {
    if psi.values().len() != h.classes().len() {
        return Err(invalid("ψ is not a class function on the subgroup"));
    }
    if !g.order().is_multiple_of(h.order()) {
        return Err(invalid("subgroup order does not divide the group order"));
    }
    let mut sums = vec![Cyclotomic::zero(); g.classes().len()];
    for x in 0..h.order() {
        let gx = g.index_of(h.element(x)).ok_or_else(|| {
            invalid("class fusion unavailable: subgroup element not in the group")
        })?;
        let c = g.classes().class_of(gx);
        sums[c] = &sums[c] + psi.value(h.classes().class_of(x));
    }
    let index = (g.order() / h.order()) as i64;
    let values = sums
        .into_iter()
        .zip(g.classes().classes())
        .map(|(s, c)| {
            s * Cyclotomic::from_rational(&Rational::new(
                BigInt::from(index),
                BigInt::from(c.size()),
            ))
        })
        .collect();
    ClassFunction::new(g, values)
}

/// Result of a j-induction: the distinguished constituent and the full
/// decomposition of the induced character as (character index, multiplicity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JInduction {
    pub chi: usize,
    pub b: usize,
    pub constituents: Vec<(usize, BigInt)>,
}

/// j_H^G(ψ): the unique constituent χ of Ind ψ with b_χ = b_ψ.
///
/// Requires γ_ψ = 1. `chars` must be the irreducible characters of `g` and
/// `fakes` their fake degrees; `psi_fake` is the fake degree of ψ for `h`.
/// Fails unless that constituent is unique, occurs once, has γ_χ = 1 and
/// every other constituent has a larger b.
pub fn j_induce(
    g: &FiniteGroup,
    h: &FiniteGroup,
    psi: &ClassFunction,
    psi_fake: &Poly<BigInt>,
    chars: &[ClassFunction],
    fakes: &[Poly<BigInt>],
) -> Result<JInduction> {
    if chars.len() != fakes.len() {
        return Err(invalid("one fake degree per character required"));
    }
    let (b_psi, gamma_psi) = b_invariant_and_gamma(psi_fake)?;
    if !gamma_psi.is_one() {
        return Err(invalid(format!(
            "γ_ψ = {gamma_psi}, j-induction needs γ_ψ = 1"
        )));
    }
    let ind = induced_character(g, h, psi)?;
    let mut constituents = Vec::new();
    for (i, chi) in chars.iter().enumerate() {
        let m = ind
            .inner(chi, g)
            .to_integer()
            .ok_or_else(|| invariant("multiplicity in Ind ψ is not an integer"))?;
        if !m.is_zero() {
            constituents.push((i, m));
        }
    }
    let mut hit = None;
    for (i, m) in &constituents {
        let (b, gamma) = b_invariant_and_gamma(&fakes[*i])?;
        if b < b_psi {
            return Err(invariant(format!(
                "constituent {i} has b = {b} below b_ψ = {b_psi}"
            )));
        }
        if b == b_psi {
            if hit.is_some() || !m.is_one() || !gamma.is_one() {
                return Err(invariant(format!(
                    "b_ψ = {b_psi} is not attained by a unique constituent with γ = 1"
                )));
            }
            hit = Some(*i);
        }
    }
    let chi = hit.ok_or_else(|| invariant(format!("no constituent of Ind ψ has b = {b_psi}")))?;
    Ok(JInduction {
        chi,
        b: b_psi,
        constituents,
    })
}
