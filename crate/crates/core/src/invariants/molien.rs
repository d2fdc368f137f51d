use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{invariant, Result};
use crate::exact::{cyclotomic_polynomial, Cyclotomic, Poly, Rational, RationalFunction};
use crate::group::FiniteGroup;

/// |W|⁻¹ Σ_w 1/det(1 − x·w), summed over classes and reduced.
///
/// Every det(1 − xw) divides (1 − x^E)^n with E the exponent of W, so the sum
/// is taken over that common denominator and the cyclotomic factors Φ_k
/// (k | E) are then cancelled one at a time.
pub fn molien_series(g: &FiniteGroup) -> Result<RationalFunction> {
    let n = g.dim();
    let e = g.exponent() as usize;
    let mut weights: HashMap<Poly<Cyclotomic>, i64> = HashMap::new();
    let mut order_seen = Vec::new();
    for (c, info) in g.classes().classes().iter().zip(g.class_info()) {
        let w = weights
            .entry(info.det_one_minus_x.clone())
            .or_insert_with(|| {
                order_seen.push(info.det_one_minus_x.clone());
                0
            });
        *w += c.size() as i64;
    }
    let mut base = vec![Cyclotomic::zero(); e + 1];
    base[0] = Cyclotomic::one();
    base[e] = Cyclotomic::from_int(-1);
    let common = Poly::new(base).pow(n as u32);
    let mut num = Poly::<Cyclotomic>::zero();
    for det in &order_seen {
        let q = common
            .exact_div(det)
            .ok_or_else(|| invariant("det(1 − xw) does not divide (1 − x^E)^n"))?;
        num = num.add(&q.scale(&Cyclotomic::from_int(weights[det])));
    }
    let inv_order = Rational::new(BigInt::one(), BigInt::from(g.order()));
    let mut num: Poly<Rational> = Poly::new(
        num.coeffs()
            .iter()
            .map(|c| {
                c.to_rational()
                    .map(|q| q * &inv_order)
                    .ok_or_else(|| invariant("Molien numerator is not rational"))
            })
            .collect::<Result<Vec<_>>>()?,
    );
    let mut den = Poly::<Rational>::one();
    for k in 1..=e {
        if !e.is_multiple_of(k) {
            continue;
        }
        let phi: Poly<Rational> = Poly::new(
            cyclotomic_polynomial(k as u32)
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        );
        let mut left = n;
        while left > 0 {
            match num.div_rem(&phi) {
                Some((q, r)) if r.is_zero() => {
                    num = q;
                    left -= 1;
                }
                _ => break,
            }
        }
        den = den.mul(&phi.pow(left as u32));
    }
    // (1 − x^E)^n = (−1)^n ∏_{k|E} Φ_k^n.
    if n % 2 == 1 {
        num = num.neg();
    }
    RationalFunction::new(num, den)
}

/// The multiset {d_i} with P = ∏ 1/(1 − x^{d_i}), read greedily from the
/// power series: the lowest positive-degree term of ∏ 1/(1 − x^{d_i}) is at
/// x^{d_1}, so it is divided out and the process repeats.
pub fn degrees_from_molien(p: &RationalFunction, rank: usize) -> Result<Vec<u32>> {
    let len = p.den().degree().unwrap_or(0) + 2;
    let mut series = p.series(len)?;
    if !series[0].is_one() {
        return Err(invariant("Molien series must start with 1"));
    }
    let mut degrees = Vec::new();
    for _ in 0..rank {
        let (k, c) = series
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| !c.is_zero())
            .ok_or_else(|| invariant("series exhausted before all degrees were found"))?;
        if !c.is_integer() || !c.is_positive() {
            return Err(invariant(format!(
                "coefficient {c} of x^{k} is not a positive integer; not a product of 1/(1 − x^d)"
            )));
        }
        degrees.push(k as u32);
        // Multiply by (1 − x^k).
        for i in (k..len).rev() {
            let t = series[i - k].clone();
            series[i] -= t;
        }
    }
    let mut prod = Poly::<Rational>::one();
    for &d in &degrees {
        let mut f = vec![Rational::zero(); d as usize + 1];
        f[0] = Rational::one();
        f[d as usize] = -Rational::one();
        prod = prod.mul(&Poly::new(f));
    }
    if !p.cross_eq(&RationalFunction::new(Poly::one(), prod)?) {
        return Err(invariant(format!(
            "Molien series is not ∏ 1/(1 − x^d) for the extracted degrees {degrees:?}"
        )));
    }
    Ok(degrees)
}
