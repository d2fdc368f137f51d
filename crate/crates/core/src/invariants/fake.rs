use num_bigint::BigInt;
use num_rational::BigRational;

use super::ClassFunction;
use crate::error::{invalid, invariant, Result};
use crate::exact::{Cyclotomic, Poly};
use crate::group::FiniteGroup;

/// Per-class polynomials ∏(x^{d_i} − 1)/conj(det(xw − 1)), shared by all fake
/// degree computations of one group.
pub struct FakeDegrees<'g> {
    group: &'g FiniteGroup,
    class_polys: Vec<Poly<Cyclotomic>>,
}

impl<'g> FakeDegrees<'g> {
    pub fn new(group: &'g FiniteGroup, degrees: &[u32]) -> Result<Self> {
        let n = group.dim();
        if degrees.len() != n {
            return Err(invalid("one degree per dimension required"));
        }
        let top = degrees.iter().fold(Poly::<Cyclotomic>::one(), |acc, &d| {
            let mut v = vec![Cyclotomic::zero(); d as usize + 1];
            v[0] = Cyclotomic::from_int(-1);
            v[d as usize] = Cyclotomic::one();
            acc.mul(&Poly::new(v))
        });
        let sign = Cyclotomic::from_int(if n.is_multiple_of(2) { 1 } else { -1 });
        let class_polys = group
            .class_info()
            .iter()
            .map(|info| {
                // det(xw − 1) = (−1)^n det(1 − xw).
                let den = info.det_one_minus_x.map(|c| c.conj() * &sign);
                top.exact_div(&den)
                    .ok_or_else(|| invariant("conj(det(xw − 1)) does not divide ∏(x^d − 1)"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FakeDegrees { group, class_polys })
    }

    /// R_χ = |W|⁻¹ Σ_w χ(w)·∏(x^{d_i} − 1)/conj(det(xw − 1)).
    pub fn of(&self, chi: &ClassFunction) -> Result<Poly<BigInt>> {
        let g = self.group;
        let mut acc = Poly::<Cyclotomic>::zero();
        for ((c, poly), val) in g
            .classes()
            .classes()
            .iter()
            .zip(&self.class_polys)
            .zip(chi.values())
        {
            if val.is_zero() {
                continue;
            }
            let w = val * Cyclotomic::from_int(c.size() as i64);
            acc = acc.add(&poly.scale(&w));
        }
        let order = BigRational::from_integer(BigInt::from(g.order()));
        let coeffs = acc
            .coeffs()
            .iter()
            .map(|c| {
                c.to_rational()
                    .map(|q| q / &order)
                    .filter(BigRational::is_integer)
                    .map(|q| q.to_integer())
                    .ok_or_else(|| {
                        invariant(format!("fake degree coefficient {c} is not an integer"))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }
}

/// Fake degree of one class function.
pub fn fake_degree(g: &FiniteGroup, chi: &ClassFunction, degrees: &[u32]) -> Result<Poly<BigInt>> {
    FakeDegrees::new(g, degrees)?.of(chi)
}

/// (b_χ, γ_χ): the order of vanishing at 0 and the coefficient there.
pub fn b_invariant_and_gamma(r: &Poly<BigInt>) -> Result<(usize, BigInt)> {
    r.lowest_term()
        .map(|(b, c)| (b, c.clone()))
        .ok_or_else(|| invalid("fake degree is zero"))
}

/// χ together with c = Σ_r (1 − χ(r)/χ(1)) and the character ψ satisfying
/// R_χ(x) = x^c·R_ψ(x⁻¹); ψ plays the role of δ(χ̄).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalindromePair {
    pub chi: usize,
    pub conjugate: usize,
    pub c: u64,
    pub partner: usize,
}

/// For every irreducible χ find ψ with R_ψ(x) = x^c·R_χ(x⁻¹).
pub fn palindrome_search(
    g: &FiniteGroup,
    chars: &[ClassFunction],
    fakes: &[Poly<BigInt>],
) -> Result<Vec<PalindromePair>> {
    if chars.len() != fakes.len() {
        return Err(invalid("one fake degree per character required"));
    }
    let info = g.class_info();
    let n = g.dim();
    let refl_classes: Vec<(usize, usize)> = g
        .classes()
        .classes()
        .iter()
        .enumerate()
        .filter(|(k, _)| info[*k].fixed_dim + 1 == n)
        .map(|(k, c)| (k, c.size()))
        .collect();
    let num_refl: usize = refl_classes.iter().map(|(_, s)| s).sum();
    let mut out = Vec::with_capacity(chars.len());
    for (i, chi) in chars.iter().enumerate() {
        let sum = refl_classes
            .iter()
            .fold(Cyclotomic::zero(), |acc, &(k, s)| {
                acc + chi.value(k) * Cyclotomic::from_int(s as i64)
            });
        let ratio = sum
            .checked_div(chi.degree())
            .ok_or_else(|| invalid("character of degree zero"))?;
        let c = (Cyclotomic::from_int(num_refl as i64) - ratio)
            .to_integer()
            .ok_or_else(|| {
                invariant(format!(
                    "c = Σ_r (1 − χ(r)/χ(1)) is not an integer for character {i}"
                ))
            })?;
        let c: u64 = c
            .try_into()
            .map_err(|_| invariant(format!("negative c for character {i}")))?;
        let deg = fakes[i].degree().unwrap_or(0);
        if (c as usize) < deg {
            return Err(invariant(format!(
                "c = {c} is below deg R_χ = {deg} for character {i}"
            )));
        }
        let target = fakes[i].reversed(c as usize);
        let partner = fakes
            .iter()
            .position(|f| *f == target)
            .ok_or_else(|| invariant(format!("no palindromic partner for character {i}")))?;
        let bar = chi.conj();
        let conjugate = chars
            .iter()
            .position(|psi| *psi == bar)
            .ok_or_else(|| invariant(format!("complex conjugate of character {i} missing")))?;
        out.push(PalindromePair {
            chi: i,
            conjugate,
            c,
            partner,
        });
    }
    Ok(out)
}
