use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Cyclotomic, Rational};
use crate::error::{invalid, Result};

impl Cyclotomic {
    /// Sign of a real cyclotomic number, decided exactly.
    ///
    /// Zero is recognised from the canonical form. Otherwise a double precision
    /// estimate is accepted when it clears a generous error bound, and failing
    /// that the value is enclosed in rational intervals of doubling precision
    /// until the enclosure excludes zero.
    pub fn real_sign(&self) -> Result<Ordering> {
        if !self.is_real() {
            return Err(invalid(format!("{self} is not real")));
        }
        if let Some(q) = self.to_rational() {
            return Ok(q.cmp(&Rational::zero()));
        }
        let (n, num, den) = self.raw_parts();
        let den_f = den.to_f64().unwrap_or(f64::INFINITY);
        let mut approx = 0.0;
        let mut mass = 0.0;
        for (j, c) in num.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN) / den_f;
            approx += c * (std::f64::consts::TAU * j as f64 / n as f64).cos();
            mass += c.abs();
        }
        if approx.is_finite() && approx.abs() > 1e-9 * (mass + 1.0) {
            return Ok(approx.partial_cmp(&0.0).expect("finite"));
        }
        let mut bits = 96;
        loop {
            let (lo, hi) = enclose(n, num, den, bits);
            if lo > Rational::zero() {
                return Ok(Ordering::Greater);
            }
            if hi < Rational::zero() {
                return Ok(Ordering::Less);
            }
            bits *= 2;
        }
    }

    /// Compare two real cyclotomic numbers.
    pub fn real_cmp(&self, other: &Self) -> Result<Ordering> {
        (self - other).real_sign()
    }
}

fn enclose(n: u32, num: &[BigInt], den: &BigInt, bits: u32) -> (Rational, Rational) {
    let pi = pi_bounds(bits);
    let mut lo = Rational::zero();
    let mut hi = Rational::zero();
    for (j, c) in num.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (cl, ch) = cos_two_pi_fraction(j as u32, n, &pi, bits);
        let c = Rational::from_integer(c.clone());
        if c.is_positive() {
            lo += &c * &cl;
            hi += &c * &ch;
        } else {
            lo += &c * &ch;
            hi += &c * &cl;
        }
    }
    let d = Rational::from_integer(den.clone());
    (lo / &d, hi / d)
}

fn round_down(x: &Rational, bits: u32) -> Rational {
    let scale = BigInt::from(1) << bits;
    let v = (x * Rational::from_integer(scale.clone()))
        .floor()
        .to_integer();
    Rational::new(v, scale)
}

fn round_up(x: &Rational, bits: u32) -> Rational {
    let scale = BigInt::from(1) << bits;
    let v = (x * Rational::from_integer(scale.clone()))
        .ceil()
        .to_integer();
    Rational::new(v, scale)
}

/// Enclosure of atan(1/q) from the alternating series.
fn atan_inv(q: i64, bits: u32) -> (Rational, Rational) {
    let eps = Rational::new(BigInt::from(1), BigInt::from(1) << (bits + 8));
    let q2 = BigInt::from(q * q);
    let mut power = BigInt::from(q);
    let mut sum = Rational::zero();
    let mut k = 0i64;
    loop {
        let term = Rational::new(BigInt::from(1), &power * BigInt::from(2 * k + 1));
        if term < eps {
            return (&sum - &term, sum + term);
        }
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &q2;
        k += 1;
    }
}

fn pi_bounds(bits: u32) -> (Rational, Rational) {
    let (a_lo, a_hi) = atan_inv(5, bits);
    let (b_lo, b_hi) = atan_inv(239, bits);
    let sixteen = Rational::from_integer(16.into());
    let four = Rational::from_integer(4.into());
    let lo = &sixteen * &a_lo - &four * &b_hi;
    let hi = &sixteen * &a_hi - &four * &b_lo;
    (round_down(&lo, bits), round_up(&hi, bits))
}

/// Enclosure of cos(2πj/n).
fn cos_two_pi_fraction(
    j: u32,
    n: u32,
    pi: &(Rational, Rational),
    bits: u32,
) -> (Rational, Rational) {
    let mut j = j % n;
    if 2 * j > n {
        j = n - j;
    }
    // θ = 2πj/n lies in [0, π], where cos is decreasing.
    let g = (2 * j).gcd(&n);
    let f = Rational::new(BigInt::from(2 * j / g), BigInt::from(n / g));
    let theta_lo = &f * &pi.0;
    let theta_hi = &f * &pi.1;
    let (lo, _) = cos_point(&theta_hi, bits);
    let (_, hi) = cos_point(&theta_lo, bits);
    (lo, hi)
}

/// Enclosure of cos θ for 0 <= θ <= 4 via Taylor series with Lagrange remainder.
fn cos_point(theta: &Rational, bits: u32) -> (Rational, Rational) {
    let eps = Rational::new(BigInt::from(1), BigInt::from(1) << (bits + 8));
    let t2 = theta * theta;
    let mut term = Rational::from_integer(1.into());
    let mut sum = Rational::zero();
    let mut k: i64 = 0;
    loop {
        sum += &term;
        k += 1;
        term = -(&term * &t2) / Rational::from_integer(BigInt::from((2 * k - 1) * (2 * k)));
        // |remainder| is bounded by the magnitude of the next term's θ^{2k}/(2k)!.
        let bound = term.abs();
        if bound < eps {
            return (
                round_down(&(&sum - &bound), bits),
                round_up(&(&sum + &bound), bits),
            );
        }
    }
}
