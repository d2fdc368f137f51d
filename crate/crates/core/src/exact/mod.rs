//! Exact arithmetic: rationals, cyclotomic numbers, polynomials, rational
//! functions and dense linear algebra.

mod cyclotomic;
mod laurent;
mod matrix;
mod poly;
mod ratfun;
mod real;
mod ring;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};
pub use laurent::{Laurent, UvLaurent};
pub use matrix::Matrix;
pub use poly::Poly;
pub use ratfun::RationalFunction;
pub use ring::{Field, Ring};

#[allow(unused_imports)]
pub(crate) use cyclotomic::{euler_phi, lcm_u32, prime_factors};

/// Arbitrary precision rational number.
pub type Rational = num_rational::BigRational;

/// Exact rational from an integer.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Exact rational p/q.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// Operation selector for [`cyclotomic_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn cyclotomic_arith(a: &Cyclotomic, b: &Cyclotomic, op: ArithOp) -> crate::Result<Cyclotomic> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b).ok_or(crate::Error::DivisionByZero)?,
    })
}
