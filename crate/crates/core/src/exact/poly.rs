use std::fmt;

use super::ring::{Field, Ring};

/// Dense univariate polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// c·x^k
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&c| R::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Order of vanishing at 0 and the coefficient found there.
    pub fn lowest_term(&self) -> Option<(usize, &R)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::new(
            (0..len)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.plus(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(R::negated).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.times(x).plus(c))
    }

    /// Substitute x ↦ x^k.
    pub fn compose_power(&self, k: usize) -> Self {
        let mut v = vec![R::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Self::new(v)
    }

    /// Coefficients reversed relative to degree `deg`: x^deg·p(1/x).
    pub fn reversed(&self, deg: usize) -> Self {
        let mut v = vec![R::zero(); deg + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            assert!(i <= deg, "reversal degree below polynomial degree");
            v[deg - i] = c.clone();
        }
        Self::new(v)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Truncate to terms of degree < `len`.
    pub fn truncate(&self, len: usize) -> Self {
        Self::new(self.coeffs.iter().take(len).cloned().collect())
    }
}

impl<R: Field> Poly<R> {
    /// Division with remainder; `None` if the divisor is zero.
    pub fn div_rem(&self, rhs: &Self) -> Option<(Self, Self)> {
        let lead_inv = rhs.leading()?.inverse()?;
        let db = rhs.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Some((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![R::zero(); rem.len() - db];
        for i in (0..q.len()).rev() {
            let c = rem[i + db].times(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].minus(&c.times(b));
            }
            q[i] = c;
        }
        rem.truncate(db);
        Some((Self::new(q), Self::new(rem)))
    }

    /// Quotient when `rhs` divides `self` exactly.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(rhs)?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor (zero if both inputs vanish).
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.monic();
        let mut b = rhs.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// First `len` coefficients of the power series 1/self; needs a nonzero constant term.
    pub fn series_inverse(&self, len: usize) -> Option<Vec<R>> {
        let c0 = self.coeffs.first()?.inverse()?;
        let mut out: Vec<R> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = if k == 0 { R::one() } else { R::zero() };
            for j in 1..=k.min(self.coeffs.len().saturating_sub(1)) {
                acc = acc.minus(&self.coeffs[j].times(&out[k - j]));
            }
            out.push(acc.times(&c0));
        }
        Some(out)
    }
}

impl<R: Ring + fmt::Display> Poly<R> {
    /// Render with variable `var`, highest degree first, e.g. `x^3+2x-1`.
    pub fn render(&self, var: &str) -> String {
        render_terms(
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64, c.to_string())),
            var,
        )
    }
}

/// Shared term printer for polynomial displays. Terms arrive in print order.
pub(crate) fn render_terms(terms: impl Iterator<Item = (i64, String)>, var: &str) -> String {
    let mut out = String::new();
    for (e, c) in terms {
        let compound = c.contains(['+', '*', '/']) || c[1..].contains('-');
        let body = if e == 0 {
            c.clone()
        } else {
            let pow = if e == 1 {
                var.to_string()
            } else {
                format!("{var}^{e}")
            };
            if c == "1" {
                pow
            } else if c == "-1" {
                format!("-{pow}")
            } else if compound {
                format!("({c}){pow}")
            } else {
                format!("{c}{pow}")
            }
        };
        if !out.is_empty() && !body.starts_with('-') {
            out.push('+');
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<R: Ring + fmt::Display> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl<R: Ring + fmt::Display> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}
