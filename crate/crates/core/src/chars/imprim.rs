use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{d_partitions, BetaSet, DPartition, Partition};
use crate::error::{invalid, invariant, Result};
use crate::exact::{Poly, Rational};
use crate::imprim::ImprimParams;

/// An orbit of ⟨π^d⟩ on de-partitions, where π is the cyclic shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftOrbit {
    /// First member in canonical order.
    pub rep: DPartition,
    pub members: Vec<DPartition>,
    /// s_e(α): the order of the stabilizer of α in ⟨π^d⟩ (a group of order e).
    pub stabilizer: usize,
}

/// The orbits of ⟨π^d⟩ on the de-partitions of n, in canonical order of
/// their representatives.
pub fn shift_orbits(p: &ImprimParams) -> Vec<ShiftOrbit> {
    let (d, e) = (p.d as usize, p.e as usize);
    let all = d_partitions(d * e, p.n as u32);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for a in &all {
        if seen.contains(a) {
            continue;
        }
        let mut members = vec![a.clone()];
        let mut cur = a.shift(d);
        while &cur != a {
            members.push(cur.clone());
            cur = cur.shift(d);
        }
        seen.extend(members.iter().cloned());
        out.push(ShiftOrbit {
            rep: a.clone(),
            stabilizer: e / members.len(),
            members,
        });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrCount {
    /// Σ s_e(α) over orbits.
    pub total: usize,
    pub orbits: Vec<ShiftOrbit>,
}

/// Number of irreducible characters of G(de,e,n): each ⟨π^d⟩-orbit of a
/// de-partition α restricts to s_e(α) distinct irreducibles.
pub fn irr_count_gdeen(p: &ImprimParams) -> IrrCount {
    let orbits = shift_orbits(p);
    IrrCount {
        total: orbits.iter().map(|o| o.stabilizer).sum(),
        orbits,
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// f^λ by the hook length formula.
fn hook_dimension(p: &Partition) -> BigInt {
    let dual = p.dual();
    let mut hooks = BigInt::one();
    for (i, &row) in p.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as usize - j - 1;
            let leg = dual.parts()[j] as usize - i - 1;
            hooks *= arm + leg + 1;
        }
    }
    factorial(p.weight()) / hooks
}

/// χ_α(1) for G(d,1,n): n!/∏|α_i|! · ∏ f^{α_i}.
fn gd1n_degree(alpha: &DPartition) -> BigInt {
    alpha
        .components()
        .iter()
        .fold(factorial(alpha.weight()), |acc, c| {
            acc / factorial(c.weight()) * hook_dimension(c)
        })
}

/// Degrees of the irreducible characters of G(de,e,n), orbit by orbit: the
/// orbit of α contributes s_e(α) characters of degree χ_α(1)/s_e(α).
pub fn imprim_character_degrees(p: &ImprimParams) -> Result<Vec<(DPartition, BigInt)>> {
    let mut out = Vec::new();
    for o in shift_orbits(p) {
        let deg = gd1n_degree(&o.rep);
        let s = BigInt::from(o.stabilizer);
        let (q, r) = deg.div_rem(&s);
        if !r.is_zero() {
            return Err(invariant(format!(
                "s_e = {s} does not divide χ_{}(1) = {deg}",
                o.rep
            )));
        }
        for _ in 0..o.stabilizer {
            out.push((o.rep.clone(), q.clone()));
        }
    }
    Ok(out)
}

fn x_pow_minus_one(k: usize) -> Poly<Rational> {
    let mut v = vec![Rational::zero(); k + 1];
    v[0] = -Rational::one();
    v[k] = Rational::one();
    Poly::new(v)
}

fn binom3(m: usize) -> usize {
    if m < 3 {
        0
    } else {
        m * (m - 1) * (m - 2) / 6
    }
}

fn to_integer_poly(p: &Poly<Rational>) -> Result<Poly<BigInt>> {
    p.coeffs()
        .iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(invariant(format!(
                    "fake degree coefficient {c} is not an integer"
                )))
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(Poly::new)
}

/// The β-set formula for the fake degree of χ_α in G(d,1,n), for a chosen
/// β-set S_i of every component α_i:
///
/// R = ∏_{k=1}^{n} (x^{kd} − 1) · ∏_i Δ(S_i, x^d)·x^{i·n_i} / (Θ(S_i, x^d)·x^{d·C(m_i, 3)})
///
/// with Δ(S, x) = ∏_{λ' < λ} (x^λ − x^{λ'}), Θ(S, x) = ∏_{λ∈S} ∏_{h=1}^{λ} (x^h − 1),
/// n_i = |α_i| and m_i = |S_i|. The factor x^{d·C(m,3)} is the sum
/// d·(C(m−1,2) + C(m−2,2) + …).
pub fn fake_degree_closed_beta(betas: &[BetaSet], d: u32) -> Result<Poly<BigInt>> {
    if betas.len() != d as usize {
        return Err(invalid(format!("{} β-sets for d = {d}", betas.len())));
    }
    let d = d as usize;
    let parts: Vec<Partition> = betas.iter().map(BetaSet::partition).collect();
    let n: usize = parts.iter().map(|p| p.weight() as usize).sum();
    let mut num = (1..=n).fold(Poly::<Rational>::one(), |acc, k| {
        acc.mul(&x_pow_minus_one(k * d))
    });
    let mut den = Poly::<Rational>::one();
    for (i, (s, p)) in betas.iter().zip(&parts).enumerate() {
        let v = s.values();
        for (a, &hi) in v.iter().enumerate() {
            for &lo in &v[a + 1..] {
                // x^{d·hi} − x^{d·lo} = x^{d·lo}·(x^{d(hi−lo)} − 1).
                num = num.mul(&x_pow_minus_one(d * (hi - lo) as usize).shift(d * lo as usize));
            }
            for h in 1..=hi as usize {
                den = den.mul(&x_pow_minus_one(d * h));
            }
        }
        num = num.shift(i * p.weight() as usize);
        den = den.shift(d * binom3(v.len()));
    }
    let q = num
        .exact_div(&den)
        .ok_or_else(|| invariant("β-set formula does not give a polynomial"))?;
    to_integer_poly(&q)
}

/// [`fake_degree_closed_beta`] with the shortest β-sets.
pub fn fake_degree_closed(alpha: &DPartition) -> Result<Poly<BigInt>> {
    let betas: Vec<BetaSet> = alpha.components().iter().map(BetaSet::of).collect();
    fake_degree_closed_beta(&betas, alpha.d() as u32)
}

/// Fake degree of each constituent of χ_α restricted to G(de,e,n):
/// (x^{nd} − 1)/(x^{nde} − 1) · Σ R_β over the ⟨π^d⟩-orbit of α, R_β taken
/// in G(de,1,n).
pub fn fake_degree_imprim(p: &ImprimParams, alpha: &DPartition) -> Result<Poly<BigInt>> {
    let (d, e, n) = (p.d as usize, p.e as usize, p.n);
    if alpha.d() != d * e || alpha.weight() as usize != n {
        return Err(invalid(format!(
            "{alpha} is not a {}-partition of {n}",
            d * e
        )));
    }
    let orbit = shift_orbits(p)
        .into_iter()
        .find(|o| o.members.contains(alpha))
        .expect("every de-partition lies in an orbit");
    let mut sum = Poly::<Rational>::zero();
    for b in &orbit.members {
        sum = sum.add(&fake_degree_closed(b)?.map(|c| Rational::from_integer(c.clone())));
    }
    let q = sum
        .mul(&x_pow_minus_one(n * d))
        .exact_div(&x_pow_minus_one(n * d * e))
        .ok_or_else(|| {
            invariant(format!(
                "restricted fake degree of {alpha} is not a polynomial"
            ))
        })?;
    to_integer_poly(&q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(s: &str) -> DPartition {
        s.parse().unwrap()
    }

    #[test]
    fn counts() {
        let c = irr_count_gdeen(&ImprimParams::new(1, 2, 2).unwrap());
        assert_eq!(c.total, 4);
        let c = irr_count_gdeen(&ImprimParams::new(1, 3, 3).unwrap());
        let o = c.orbits.iter().find(|o| o.rep == dp("(1,1,1)")).unwrap();
        assert_eq!(o.stabilizer, 3);
        assert_eq!(
            irr_count_gdeen(&ImprimParams::new(3, 1, 2).unwrap()).total,
            9
        );
    }

    #[test]
    fn degrees() {
        let p = ImprimParams::new(1, 4, 2).unwrap();
        let mut got: Vec<BigInt> = imprim_character_degrees(&p)
            .unwrap()
            .into_iter()
            .map(|x| x.1)
            .collect();
        got.sort();
        assert_eq!(got, [1, 1, 1, 1, 2].map(BigInt::from));
    }

    #[test]
    fn closed_form() {
        assert_eq!(
            fake_degree_closed(&dp("21")).unwrap(),
            Poly::from_ints(&[0, 1, 1])
        );
        assert_eq!(
            fake_degree_closed(&dp("111")).unwrap(),
            Poly::from_ints(&[0, 0, 0, 1])
        );
        assert_eq!(
            fake_degree_closed(&dp("(-,1)")).unwrap(),
            Poly::from_ints(&[0, 1])
        );
        assert_eq!(
            fake_degree_closed(&dp("(1,1)")).unwrap(),
            Poly::from_ints(&[0, 1, 0, 1])
        );
        let a = dp("(21,1,-)");
        let plain = fake_degree_closed(&a).unwrap();
        let longer: Vec<BetaSet> = a
            .components()
            .iter()
            .map(|c| BetaSet::new(c, c.len() + 2).unwrap())
            .collect();
        assert_eq!(fake_degree_closed_beta(&longer, 3).unwrap(), plain);
        let p = ImprimParams::new(1, 2, 2).unwrap();
        assert_eq!(
            fake_degree_imprim(&p, &dp("(1,1)")).unwrap(),
            Poly::from_ints(&[0, 1])
        );
    }
}
