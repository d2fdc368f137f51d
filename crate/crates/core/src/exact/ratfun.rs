use std::fmt;

use num_traits::Zero;

use super::poly::Poly;
use super::Rational;
use crate::error::{Error, Result};

/// Quotient of rational polynomials in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl RationalFunction {
    /// Reduce num/den by their gcd and make the denominator monic.
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(Poly::zero()));
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        Ok(Self::from_coprime(num, den))
    }

    /// Build from parts already known to be coprime; only rescales to a monic denominator.
    pub(crate) fn from_coprime(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        let lead = den.leading().expect("nonzero denominator").clone();
        if num.is_zero() {
            return Self::from_poly(Poly::zero());
        }
        let inv = lead.recip();
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: Poly<Rational>) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn den(&self) -> &Poly<Rational> {
        &self.den
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
        .expect("product of nonzero denominators")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("nonzero denominators")
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Self::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    /// Equality by cross-multiplication, independent of the stored form.
    pub fn cross_eq(&self, rhs: &Self) -> bool {
        self.num.mul(&rhs.den) == rhs.num.mul(&self.den)
    }

    /// Leading `len` coefficients of the power series expansion at 0.
    pub fn series(&self, len: usize) -> Result<Vec<Rational>> {
        let inv = self.den.series_inverse(len).ok_or(Error::DivisionByZero)?;
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.num.coeffs().iter().enumerate().take(len) {
            for (j, b) in inv.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Poly<Rational> {
        Poly::from_ints(v)
    }

    #[test]
    fn normalize() {
        let r = RationalFunction::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(r.num(), &p(&[1, 1]));
        assert_eq!(r.den(), &p(&[1]));
        let z = RationalFunction::new(p(&[]), p(&[1, 0, 0, 1])).unwrap();
        assert!(z.num().is_zero());
        assert_eq!(z.den(), &p(&[1]));
        assert!(RationalFunction::new(p(&[1]), p(&[])).is_err());
    }

    #[test]
    fn addition_reduces() {
        let a = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        let b = RationalFunction::new(p(&[1]), p(&[1, 1])).unwrap();
        let s = a.add(&b);
        let expected = RationalFunction::new(p(&[2]), p(&[1, 0, -1])).unwrap();
        assert_eq!(s, expected);
        assert!(s.cross_eq(&expected));
    }
}
