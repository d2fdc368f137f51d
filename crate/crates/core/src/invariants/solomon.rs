use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::DegreeData;
use crate::error::{invariant, Error, Result};
use crate::exact::{Cyclotomic, Poly};
use crate::group::FiniteGroup;

/// Both sides of Σ x^{k(w)} = ∏(x + m_i) and Σ det(w)·x^{k(w)} = ∏(x − m_i*),
/// where k(w) is the dimension of the fixed space of w.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolomonReport {
    pub fixed_space_sum: Poly<BigInt>,
    pub exponent_product: Poly<BigInt>,
    pub det_weighted_sum: Poly<BigInt>,
    /// Coexponents read off as the roots of `det_weighted_sum`.
    pub coexponents: Vec<u32>,
}

fn linear(c: i64) -> Poly<BigInt> {
    Poly::new(vec![BigInt::from(c), BigInt::one()])
}

/// Compute both Solomon identities for an enumerated group with known degrees.
pub fn solomon_identities(g: &FiniteGroup, degrees: &[u32]) -> Result<SolomonReport> {
    let n = g.dim();
    let mut plain = vec![BigInt::zero(); n + 1];
    let mut signed = vec![Cyclotomic::zero(); n + 1];
    for (c, info) in g.classes().classes().iter().zip(g.class_info()) {
        plain[info.fixed_dim] += BigInt::from(c.size());
        signed[info.fixed_dim] =
            &signed[info.fixed_dim] + &info.det * Cyclotomic::from_int(c.size() as i64);
    }
    let signed = signed
        .iter()
        .map(|c| {
            c.to_integer()
                .ok_or_else(|| invariant("Σ det(w) x^k(w) has a non-integer coefficient"))
        })
        .collect::<Result<Vec<_>>>()?;
    let fixed_space_sum = Poly::new(plain);
    let exponent_product = degrees
        .iter()
        .fold(Poly::one(), |acc, &d| acc.mul(&linear(i64::from(d) - 1)));
    if fixed_space_sum != exponent_product {
        return Err(invariant(format!(
            "Σ x^k(w) = {fixed_space_sum} but ∏(x + m_i) = {exponent_product}"
        )));
    }
    let det_weighted_sum = Poly::new(signed);
    let coexponents = integer_roots(&det_weighted_sum, g.order() as i64)?;
    Ok(SolomonReport {
        fixed_space_sum,
        exponent_product,
        det_weighted_sum,
        coexponents,
    })
}

/// Roots r ≥ 0 of a monic integer polynomial that splits as ∏(x − r_i).
fn integer_roots(p: &Poly<BigInt>, bound: i64) -> Result<Vec<u32>> {
    let as_rat = p.map(|c| num_rational::BigRational::from_integer(c.clone()));
    let mut rest = as_rat.clone();
    let mut roots = Vec::new();
    let mut r = 0i64;
    while rest.degree().unwrap_or(0) > 0 && r <= bound {
        let lin = Poly::new(vec![
            num_rational::BigRational::from_integer((-r).into()),
            num_rational::BigRational::one(),
        ]);
        match rest.div_rem(&lin) {
            Some((q, rem)) if rem.is_zero() => {
                roots.push(r as u32);
                rest = q;
            }
            _ => r += 1,
        }
    }
    if rest.degree() != Some(0) || !rest.coeff(0).is_one() {
        return Err(invariant(format!("{p} does not split as ∏(x − m_i*)")));
    }
    Ok(roots)
}

/// Truth values of the four equivalent conditions for well-generation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrlikSolomonReport {
    /// d_i + d*_{n−i+1} = d_n for all i.
    pub duality: bool,
    /// N + N* = n·d_n.
    pub count: bool,
    /// d_i* < d_n for all i.
    pub codegree_bound: bool,
    /// Generated by n reflections.
    pub well_generated: bool,
}

impl OrlikSolomonReport {
    pub fn consistent(&self) -> bool {
        self.duality == self.count
            && self.count == self.codegree_bound
            && self.codegree_bound == self.well_generated
    }
}

pub fn orlik_solomon_conditions(dd: &DegreeData, well_generated: bool) -> OrlikSolomonReport {
    let n = dd.rank();
    let top = *dd.degrees.last().unwrap_or(&0);
    let duality = (0..n).all(|i| dd.degrees[i] as i32 + dd.codegrees[n - 1 - i] == top as i32);
    let count = dd.num_reflections() + dd.num_hyperplanes() == n as u32 * top;
    let codegree_bound = dd.codegrees.iter().all(|&c| c < top as i32);
    OrlikSolomonReport {
        duality,
        count,
        codegree_bound,
        well_generated,
    }
}

/// Whether some dim(V) reflections generate the group, by exhaustive search
/// over sets of reflections (the first taken up to conjugacy). `budget` caps
/// the total number of elements generated during the search.
pub fn is_well_generated(g: &FiniteGroup, budget: usize) -> Result<bool> {
    let n = g.dim();
    let refl = g.reflections();
    let firsts: Vec<usize> = {
        let classes = g.classes();
        let mut seen = std::collections::BTreeSet::new();
        refl.iter()
            .copied()
            .filter(|&r| seen.insert(classes.class_of(r)))
            .collect()
    };
    let mut spent = 0usize;
    for &first in &firsts {
        let rest: Vec<usize> = refl.iter().copied().filter(|&r| r != first).collect();
        let mut pick = vec![first];
        if choose(g, &rest, 0, n, &mut pick, &mut spent, budget)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn choose(
    g: &FiniteGroup,
    pool: &[usize],
    from: usize,
    n: usize,
    pick: &mut Vec<usize>,
    spent: &mut usize,
    budget: usize,
) -> Result<bool> {
    if pick.len() == n {
        *spent += g.order();
        if *spent > budget {
            return Err(Error::Budget {
                what: "well-generation search".into(),
                limit: budget,
            });
        }
        let gens = pick.iter().map(|&r| g.element(r).to_vec()).collect();
        return Ok(g.subgroup(gens, g.order())?.order() == g.order());
    }
    for i in from..pool.len() {
        pick.push(pool[i]);
        let found = choose(g, pool, i + 1, n, pick, spent, budget)?;
        pick.pop();
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}
