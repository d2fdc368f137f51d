use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{class_param, d_partitions, BetaSet, ClassParam, DPartition, Partition};
use crate::error::{invalid, invariant, Result};
use crate::exact::{Cyclotomic, Rational};
use crate::imprim::ImprimGroup;
use crate::invariants::ClassFunction;

/// Rim hooks of length m in λ, as (λ minus the hook, leg length).
pub(crate) fn remove_rim_hooks(lambda: &Partition, m: u32) -> Vec<(Partition, u32)> {
    let beta = BetaSet::of(lambda);
    let vals = beta.values();
    let mut out = Vec::new();
    for (i, &b) in vals.iter().enumerate() {
        if b < m || vals.contains(&(b - m)) {
            continue;
        }
        let leg = vals.iter().filter(|&&c| c > b - m && c < b).count() as u32;
        let mut next = vals.to_vec();
        next[i] = b - m;
        next.sort_unstable_by(|a, b| b.cmp(a));
        out.push((BetaSet { values: next }.partition(), leg));
    }
    out
}

fn check_shapes(alpha: &DPartition, gamma: &ClassParam) -> Result<()> {
    if alpha.d() != gamma.d() {
        return Err(invalid(format!("{alpha} and {gamma} have different d")));
    }
    if alpha.weight() != gamma.weight() {
        return Err(invalid(format!(
            "{alpha} and {gamma} have different weights"
        )));
    }
    Ok(())
}

/// The highest-index nonempty component of γ and its largest part.
fn default_pick(gamma: &DPartition) -> (usize, usize) {
    let t = (0..gamma.d())
        .rev()
        .find(|&t| !gamma.component(t).is_empty())
        .expect("nonempty class parameter");
    (t, 0)
}

fn step(
    alpha: &DPartition,
    gamma: &DPartition,
    (t, idx): (usize, usize),
    mut recurse: impl FnMut(&DPartition, &DPartition) -> Cyclotomic,
) -> Cyclotomic {
    let d = alpha.d() as u32;
    let comp = gamma.component(t);
    let m = comp.parts()[idx];
    let mut rest = comp.parts().to_vec();
    rest.remove(idx);
    let gamma_next = gamma.with_component(t, Partition::new(rest));
    let mut acc = Cyclotomic::zero();
    for s in 0..alpha.d() {
        for (smaller, leg) in remove_rim_hooks(alpha.component(s), m) {
            let beta = alpha.with_component(s, smaller);
            let v = recurse(&beta, &gamma_next);
            if v.is_zero() {
                continue;
            }
            let zeta = Cyclotomic::root_of_unity(d, (s * t) as i64);
            let term = v * zeta;
            acc = if leg % 2 == 0 { acc + term } else { acc - term };
        }
    }
    acc
}

/// χ_α(γ) for the irreducible character α and cycle type γ of G(d,1,n).
///
/// Each step removes the largest part m of the highest-index nonempty
/// component γ_t and sums over the m-rim hooks of every α_s, weighted by
/// ζ_d^{s·t}·(−1)^{leg}.
pub fn mn_value(alpha: &DPartition, gamma: &ClassParam) -> Result<Cyclotomic> {
    check_shapes(alpha, gamma)?;
    Ok(Memo::default().value(alpha, gamma))
}

/// [`mn_value`] with the removed part chosen by `pick`, which returns a
/// component index and a position inside it. The value does not depend on
/// the choices; this entry point exists to check that.
pub fn mn_value_with(
    alpha: &DPartition,
    gamma: &ClassParam,
    pick: &mut dyn FnMut(&DPartition) -> (usize, usize),
) -> Result<Cyclotomic> {
    check_shapes(alpha, gamma)?;
    fn go(
        alpha: &DPartition,
        gamma: &DPartition,
        pick: &mut dyn FnMut(&DPartition) -> (usize, usize),
    ) -> Result<Cyclotomic> {
        if gamma.weight() == 0 {
            return Ok(Cyclotomic::one());
        }
        let (t, idx) = pick(gamma);
        if t >= gamma.d() || idx >= gamma.component(t).len() {
            return Err(invalid(format!(
                "pick ({t}, {idx}) is not a part of {gamma}"
            )));
        }
        let mut err = None;
        let v = step(alpha, gamma, (t, idx), |b, g| match go(b, g, pick) {
            Ok(v) => v,
            Err(e) => {
                err.get_or_insert(e);
                Cyclotomic::zero()
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(v),
        }
    }
    go(alpha, gamma, pick)
}

#[derive(Default)]
struct Memo {
    cache: HashMap<(DPartition, DPartition), Cyclotomic>,
}

impl Memo {
    fn value(&mut self, alpha: &DPartition, gamma: &DPartition) -> Cyclotomic {
        if gamma.weight() == 0 {
            return Cyclotomic::one();
        }
        let key = (alpha.clone(), gamma.clone());
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let v = step(alpha, gamma, default_pick(gamma), |b, g| self.value(b, g));
        self.cache.insert(key, v.clone());
        v
    }
}

/// The character table of G(d,1,n). Rows are irreducible characters and
/// columns are classes, both indexed by d-partitions in canonical order.
#[derive(Clone, Debug)]
pub struct CharTableGd1n {
    pub d: u32,
    pub n: u32,
    pub labels: Vec<DPartition>,
    pub values: Vec<Vec<Cyclotomic>>,
    pub centralizers: Vec<u128>,
}

impl CharTableGd1n {
    pub fn order(&self) -> BigUint {
        (1..=self.n).fold(BigUint::from(self.d).pow(self.n), |acc, k| acc * k)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &DPartition) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Column of the identity, cycle type ((1^n), −, …, −).
    pub fn identity_class(&self) -> usize {
        let mut comps = vec![Partition::empty(); self.d as usize];
        comps[0] = Partition::new(vec![1; self.n as usize]);
        self.index_of(&DPartition(comps))
            .expect("identity class present")
    }

    pub fn degrees(&self) -> Vec<BigInt> {
        let id = self.identity_class();
        self.values
            .iter()
            .map(|row| row[id].to_integer().expect("degrees are integers"))
            .collect()
    }

    pub fn class_size(&self, j: usize) -> BigUint {
        self.order() / BigUint::from(self.centralizers[j])
    }

    /// Σ_γ χ(γ)·conj(ψ(γ))/z_γ.
    pub fn inner(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        a.iter()
            .zip(b)
            .zip(&self.centralizers)
            .fold(Cyclotomic::zero(), |acc, ((x, y), &z)| {
                let w = Rational::new(BigInt::one(), BigInt::from(z));
                acc + x * &y.conj() * Cyclotomic::from_rational(&w)
            })
    }

    /// Row orthogonality and positive integral degrees.
    pub fn validate(&self) -> Result<()> {
        for (i, a) in self.values.iter().enumerate() {
            for (j, b) in self.values.iter().enumerate().skip(i) {
                let want = if i == j {
                    Cyclotomic::one()
                } else {
                    Cyclotomic::zero()
                };
                if self.inner(a, b) != want {
                    return Err(invariant(format!(
                        "rows {} and {} of the G({},1,{}) table are not orthonormal",
                        self.labels[i], self.labels[j], self.d, self.n
                    )));
                }
            }
        }
        let id = self.identity_class();
        for (row, label) in self.values.iter().zip(&self.labels) {
            match row[id].to_integer() {
                Some(v) if v > BigInt::zero() => {}
                _ => return Err(invariant(format!("χ_{label}(1) is not a positive integer"))),
            }
        }
        Ok(())
    }

    /// Each row as a class function on an enumerated G(d,1,n), using the
    /// cycle type of every class representative.
    pub fn class_functions_on(&self, g: &ImprimGroup) -> Result<Vec<ClassFunction>> {
        let p = g.params();
        if p.e != 1 || p.d != self.d || p.n != self.n as usize {
            return Err(invalid(format!("{p} is not G({},1,{})", self.d, self.n)));
        }
        let fg = g.group();
        let columns = fg
            .classes()
            .classes()
            .iter()
            .map(|c| {
                let gamma = class_param(&g.element(c.representative), self.d);
                self.index_of(&gamma)
                    .ok_or_else(|| invariant(format!("cycle type {gamma} not in the table")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.values
            .iter()
            .map(|row| ClassFunction::new(fg, columns.iter().map(|&j| row[j].clone()).collect()))
            .collect()
    }
}

/// The character table of G(d,1,n) by the Murnaghan–Nakayama recursion,
/// checked by [`CharTableGd1n::validate`].
pub fn char_table(d: u32, n: u32) -> Result<CharTableGd1n> {
    if d == 0 {
        return Err(invalid("d must be positive"));
    }
    let labels = d_partitions(d as usize, n);
    let mut memo = Memo::default();
    let values = labels
        .iter()
        .map(|a| labels.iter().map(|g| memo.value(a, g)).collect())
        .collect();
    let centralizers = labels.iter().map(DPartition::centralizer_order).collect();
    let table = CharTableGd1n {
        d,
        n,
        labels,
        values,
        centralizers,
    };
    table.validate()?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(s: &str) -> DPartition {
        s.parse().unwrap()
    }

    #[test]
    fn rim_hooks() {
        let hooks = |p: &str, m| -> Vec<(String, u32)> {
            remove_rim_hooks(&p.parse().unwrap(), m)
                .iter()
                .map(|(p, l)| (p.to_string(), *l))
                .collect()
        };
        assert!(hooks("21", 2).is_empty());
        assert_eq!(hooks("21", 3), [("-".to_string(), 1)]);
        assert_eq!(
            hooks("22", 2),
            [("11".to_string(), 1), ("2".to_string(), 0)]
        );
        assert_eq!(hooks("22", 3), [("1".to_string(), 1)]);
    }

    #[test]
    fn symmetric_values() {
        assert_eq!(mn_value(&dp("21"), &dp("21")).unwrap(), Cyclotomic::zero());
        assert_eq!(
            mn_value(&dp("21"), &dp("3")).unwrap(),
            Cyclotomic::from_int(-1)
        );
        assert_eq!(
            mn_value(&dp("21"), &dp("111")).unwrap(),
            Cyclotomic::from_int(2)
        );
        assert_eq!(
            mn_value(&dp("(1,1)"), &dp("(1,1)")).unwrap(),
            Cyclotomic::zero()
        );
        assert!(mn_value(&dp("(1,1)"), &dp("11")).is_err());
    }

    #[test]
    fn tables() {
        let s3 = char_table(1, 3).unwrap();
        assert_eq!(s3.degrees(), [1, 2, 1].map(BigInt::from));
        let b2 = char_table(2, 2).unwrap();
        assert_eq!(b2.degrees(), [1, 1, 2, 1, 1].map(BigInt::from));
        let g = char_table(3, 2).unwrap();
        let sum: BigInt = g.degrees().iter().map(|x| x * x).sum();
        assert_eq!(sum, BigInt::from(18));
    }

    #[test]
    fn removal_order() {
        let a = dp("(1,1)");
        let gamma = dp("(1,1)");
        let mut first =
            |g: &DPartition| ((0..g.d()).find(|&t| !g.component(t).is_empty()).unwrap(), 0);
        assert_eq!(
            mn_value_with(&a, &gamma, &mut first).unwrap(),
            mn_value(&a, &gamma).unwrap()
        );
    }
}
