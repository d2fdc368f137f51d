use std::fmt;

use num_bigint::BigInt;

use super::LinkInvariant;
use crate::error::{invariant, Result};
use crate::exact::{Laurent, Poly, Rational, Ring, UvLaurent};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// u = t², v = √t·(t − 1).
    Jones,
    /// u = 1, v = √t − 1/√t.
    Alexander,
    /// u = t², v = t·x.
    HomflyTx,
}

/// A specialized invariant. One-variable results are in t when every power
/// of s = √t is even, otherwise in s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialization {
    OneVar {
        var: &'static str,
        poly: Laurent<BigInt>,
    },
    /// Laurent in x with coefficients Laurent in t.
    TwoVar(UvLaurent),
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specialization::OneVar { var, poly } => f.write_str(&poly.render(var)),
            Specialization::TwoVar(p) => f.write_str(&p.render_two("t", "x")),
        }
    }
}

type L = Laurent<BigInt>;

fn to_poly(p: &L) -> (Poly<Rational>, i64) {
    let lo = p.min_exp().unwrap_or(0);
    let len = (p.max_exp().unwrap_or(0) - lo + 1) as usize;
    let mut coeffs = vec![<Rational as num_traits::Zero>::zero(); len];
    for (e, c) in p.terms() {
        coeffs[(e - lo) as usize] = Rational::from_integer(c.clone());
    }
    (Poly::new(coeffs), lo)
}

/// num/den in Z[s^{±1}], when the quotient is a Laurent polynomial.
fn laurent_div(num: &L, den: &L) -> Option<L> {
    if num.is_zero() {
        return Some(L::zero());
    }
    let (pn, ln) = to_poly(num);
    let (pd, ld) = to_poly(den);
    let q = pn.exact_div(&pd)?;
    let mut out = L::zero();
    for (k, c) in q.coeffs().iter().enumerate() {
        if !c.is_integer() {
            return None;
        }
        out = out.plus(&L::monomial(c.to_integer(), k as i64 + ln - ld));
    }
    Some(out)
}

/// Substitute u, v in Z[s^{±1}]; v⁻¹ is handled by clearing v-denominators
/// and dividing exactly at the end.
fn substitute_one(x: &UvLaurent, u: &L, v: &L) -> Result<L> {
    let shift = -x.min_exp().unwrap_or(0).min(0);
    let mut num = L::zero();
    let u_inv = laurent_div(&L::one(), u);
    for (b, inner) in x.terms() {
        let ub = inner.terms().fold(L::zero(), |acc, (a, c)| {
            let base = if a >= 0 {
                u.clone()
            } else {
                u_inv.clone().expect("u is a unit in both specializations")
            };
            let mut p = L::one();
            for _ in 0..a.unsigned_abs() {
                p = p.times(&base);
            }
            acc.plus(&p.scale(c))
        });
        let mut vp = L::one();
        for _ in 0..(b + shift) {
            vp = vp.times(v);
        }
        num = num.plus(&ub.times(&vp));
    }
    let mut den = L::one();
    for _ in 0..shift {
        den = den.times(v);
    }
    laurent_div(&num, &den)
        .ok_or_else(|| invariant("specialized invariant is not a Laurent polynomial"))
}

pub fn specialize(x: &LinkInvariant, target: Target) -> Result<Specialization> {
    let p = &x.polynomial;
    let s = |e: i64| L::monomial(BigInt::from(1), e);
    let one_var = |poly: L| match poly.halve_exponents() {
        Some(t) => Specialization::OneVar { var: "t", poly: t },
        None => Specialization::OneVar { var: "s", poly },
    };
    Ok(match target {
        Target::Jones => one_var(substitute_one(p, &s(4), &s(3).minus(&s(1)))?),
        Target::Alexander => one_var(substitute_one(p, &s(0), &s(1).minus(&s(-1)))?),
        Target::HomflyTx => {
            // u^a v^b ↦ t^{2a+b} x^b.
            let mut out = UvLaurent::zero();
            for (b, inner) in p.terms() {
                for (a, c) in inner.terms() {
                    out = out.plus(&UvLaurent::monomial(L::monomial(c.clone(), 2 * a + b), b));
                }
            }
            Specialization::TwoVar(out)
        }
    })
}
