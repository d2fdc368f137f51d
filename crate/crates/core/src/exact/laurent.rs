use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::poly::render_terms;
use super::ring::Ring;

/// Sparse Laurent polynomial in one variable; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent<R> {
    terms: BTreeMap<i64, R>,
}

/// Z[u^{±1}, v^{±1}] as Laurent polynomials in v whose coefficients are Laurent in u.
pub type UvLaurent = Laurent<Laurent<BigInt>>;

impl<R: Ring> Laurent<R> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: R, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms }
    }

    /// The variable itself raised to `e`.
    pub fn var(e: i64) -> Self {
        Self::monomial(R::one(), e)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &R)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> R {
        self.terms.get(&e).cloned().unwrap_or_else(R::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: i64, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().plus(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero();
        for (e, a) in &self.terms {
            out.add_term(*e, a.times(c));
        }
        out
    }

    /// Multiply by the variable raised to `k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute the variable by a Laurent polynomial `x` (with `x_inv` its inverse).
    pub fn substitute<S: Ring>(&self, x: &S, x_inv: &S, embed: impl Fn(&R) -> S) -> S {
        let mut out = S::zero();
        for (e, c) in &self.terms {
            let base = if *e >= 0 { x } else { x_inv };
            let mut p = S::one();
            for _ in 0..e.unsigned_abs() {
                p = p.times(base);
            }
            out = out.plus(&embed(c).times(&p));
        }
        out
    }

    /// Replace the variable by its square root's square: every exponent is halved,
    /// provided they are all even.
    pub fn halve_exponents(&self) -> Option<Self> {
        if self.terms.keys().any(|e| e % 2 != 0) {
            return None;
        }
        Some(Laurent {
            terms: self.terms.iter().map(|(e, c)| (e / 2, c.clone())).collect(),
        })
    }
}

impl<R: Ring> Ring for Laurent<R> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
    fn minus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.negated());
        }
        out
    }
    fn times(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                out.add_term(ea + eb, a.times(b));
            }
        }
        out
    }
    fn negated(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, c.negated())).collect(),
        }
    }
    fn from_int(n: i64) -> Self {
        Self::constant(R::from_int(n))
    }
}

impl<R: Ring + fmt::Display> Laurent<R> {
    /// Highest power first, e.g. `-t^4+t^3+t`.
    pub fn render(&self, var: &str) -> String {
        render_terms(
            self.terms.iter().rev().map(|(e, c)| (*e, c.to_string())),
            var,
        )
    }
}

impl UvLaurent {
    /// The monomial u^a v^b.
    pub fn uv(a: i64, b: i64) -> Self {
        Laurent::monomial(Laurent::var(a), b)
    }

    /// Monomials sorted by (v-exponent, u-exponent) ascending, e.g. `2u-u^2+v^2`.
    pub fn render_uv(&self) -> String {
        self.render_two("u", "v")
    }

    /// As [`Self::render_uv`] with the inner and outer variables renamed.
    pub fn render_two(&self, inner_var: &str, outer_var: &str) -> String {
        let mut out = String::new();
        for (b, inner) in self.terms() {
            for (a, c) in inner.terms() {
                let mut mono = String::new();
                for (var, e) in [(inner_var, a), (outer_var, b)] {
                    match e {
                        0 => {}
                        1 => mono.push_str(var),
                        _ => mono.push_str(&format!("{var}^{e}")),
                    }
                }
                let one = BigInt::from(1);
                let term = if mono.is_empty() {
                    c.to_string()
                } else if *c == one {
                    mono
                } else if *c == -one {
                    format!("-{mono}")
                } else {
                    format!("{c}{mono}")
                };
                if !out.is_empty() && !term.starts_with('-') {
                    out.push('+');
                }
                out.push_str(&term);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Laurent<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl<R: Ring> fmt::Debug for Laurent<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type L = Laurent<BigInt>;

    #[test]
    fn arithmetic() {
        let t = L::var(1);
        let ti = L::var(-1);
        assert!(t.times(&ti).is_one());
        let x = t.minus(&L::one()).plus(&ti);
        assert_eq!(x.render("t"), "t-1+t^-1");
        assert!(x.minus(&x).is_zero());
    }

    #[test]
    fn uv_render() {
        let x = UvLaurent::uv(1, 0)
            .times(&UvLaurent::from_int(2))
            .minus(&UvLaurent::uv(2, 0))
            .plus(&UvLaurent::uv(0, 2));
        assert_eq!(x.render_uv(), "2u-u^2+v^2");
        assert_eq!(UvLaurent::from_int(1).render_uv(), "1");
    }
}
