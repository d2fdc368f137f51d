use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::Matrix;
use super::Rational;

/// Element of the cyclotomic field Q(ζ_n), stored in the power basis of
/// Q[x]/(Φ_n) for the smallest conductor n that contains it.
///
/// Conductors congruent to 2 mod 4 are never stored, since Q(ζ_{2m}) = Q(ζ_m)
/// for odd m. Together with conductor minimisation this makes the stored form
/// canonical, so derived equality and hashing are field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    n: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

struct Conductor {
    phi: usize,
    /// `powers[k]` holds x^k mod Φ_n for 0 <= k < n.
    powers: Vec<Vec<i64>>,
    primes: Vec<u32>,
}

/// Data to test membership of an element of Q(ζ_n) in the subfield Q(ζ_m).
struct Embedding {
    stride: usize,
    pivots: Vec<usize>,
    adj: Vec<Vec<BigInt>>,
    det: BigInt,
}

type Cache<K, V> = OnceLock<RwLock<HashMap<K, Arc<V>>>>;

static CYCLO_POLYS: Cache<u32, Vec<i64>> = OnceLock::new();
static CONDUCTORS: Cache<u32, Conductor> = OnceLock::new();
static EMBEDDINGS: Cache<(u32, u32), Embedding> = OnceLock::new();

fn cached<K, V>(cache: &Cache<K, V>, key: K, build: impl FnOnce() -> V) -> Arc<V>
where
    K: std::hash::Hash + Eq + Copy,
{
    let lock = cache.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = lock.read().expect("cache poisoned").get(&key) {
        return Arc::clone(v);
    }
    let built = Arc::new(build());
    let mut guard = lock.write().expect("cache poisoned");
    Arc::clone(guard.entry(key).or_insert(built))
}

pub(crate) fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn euler_phi(n: u32) -> u32 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

pub(crate) fn lcm_u32(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

/// Coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "Φ_0 is undefined");
    cached(&CYCLO_POLYS, n, || {
        let mut poly = vec![0i64; n as usize + 1];
        poly[0] = -1;
        poly[n as usize] = 1;
        for d in 1..n {
            if n.is_multiple_of(d) {
                poly = divide_monic(&poly, &cyclotomic_polynomial(d));
            }
        }
        poly
    })
}

fn divide_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let dq = a.len() - 1 - db;
    let mut q = vec![0i64; dq + 1];
    for i in (0..=dq).rev() {
        let c = rem[i + db];
        q[i] = c;
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] = rem[i + j]
                .checked_sub(c.checked_mul(*bj).expect("cyclotomic coefficient overflow"))
                .expect("cyclotomic coefficient overflow");
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

fn conductor(n: u32) -> Arc<Conductor> {
    cached(&CONDUCTORS, n, || {
        let phi_poly = cyclotomic_polynomial(n);
        let phi = phi_poly.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        for k in 0..n as usize {
            if k < phi {
                let mut v = vec![0i64; phi];
                v[k] = 1;
                powers.push(v);
                continue;
            }
            let prev: &Vec<i64> = &powers[k - 1];
            let top = prev[phi - 1];
            let mut v = vec![0i64; phi];
            for i in (1..phi).rev() {
                v[i] = prev[i - 1];
            }
            for (i, c) in v.iter_mut().enumerate() {
                *c = c
                    .checked_sub(top.checked_mul(phi_poly[i]).expect("conductor too large"))
                    .expect("conductor too large");
            }
            powers.push(v);
        }
        Conductor {
            phi,
            powers,
            primes: prime_factors(n),
        }
    })
}

fn embedding(m: u32, n: u32) -> Arc<Embedding> {
    cached(&EMBEDDINGS, (m, n), || {
        let big = conductor(n);
        let small_phi = euler_phi(m) as usize;
        let stride = (n / m) as usize;
        let column = |i: usize| &big.powers[i * stride];
        // Pick rows of the embedding matrix greedily until they are independent.
        let mut pivots = Vec::new();
        let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::new();
        for r in 0..big.phi {
            let mut row: Vec<Rational> = (0..small_phi)
                .map(|i| Rational::from_integer(BigInt::from(column(i)[r])))
                .collect();
            for (lead, basis) in &echelon {
                if !row[*lead].is_zero() {
                    let f = &row[*lead] / &basis[*lead];
                    for (x, b) in row.iter_mut().zip(basis) {
                        *x -= &f * b;
                    }
                }
            }
            if let Some(lead) = row.iter().position(|x| !x.is_zero()) {
                echelon.push((lead, row));
                pivots.push(r);
                if pivots.len() == small_phi {
                    break;
                }
            }
        }
        assert_eq!(pivots.len(), small_phi, "embedding matrix lost rank");
        let square = Matrix::from_fn(small_phi, small_phi, |i, j| {
            Rational::from_integer(BigInt::from(column(j)[pivots[i]]))
        });
        let det = square.det().expect("square");
        let inv = square.inverse().expect("embedding submatrix is invertible");
        let adj = (0..small_phi)
            .map(|i| {
                (0..small_phi)
                    .map(|j| {
                        let v = inv.get(i, j) * &det;
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();
        Embedding {
            stride,
            pivots,
            adj,
            det: det.to_integer(),
        }
    })
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_bigint(BigInt::zero())
    }

    pub fn one() -> Self {
        Self::from_bigint(BigInt::one())
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Cyclotomic {
            n: 1,
            num: vec![v],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(q: &Rational) -> Self {
        Cyclotomic {
            n: 1,
            num: vec![q.numer().clone()],
            den: q.denom().clone(),
        }
    }

    /// ζ_n^k with ζ_n = exp(2πi/n).
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root of unity of order 0");
        let k = k.rem_euclid(n as i64) as u64;
        if n % 4 == 2 {
            // ζ_{2m} = -ζ_m^{(m+1)/2} for odd m.
            let m = n / 2;
            let e = (k * (m as u64).div_ceil(2)) % m as u64;
            let base = Self::root_of_unity(m, e as i64);
            return if k % 2 == 1 { -base } else { base };
        }
        if n == 1 {
            return Self::one();
        }
        let c = conductor(n);
        let num = c.powers[k as usize]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        Self::build(n, num, BigInt::one())
    }

    /// Σ_j coeffs[j]·ζ_n^j for an arbitrary sequence of rational coefficients.
    pub fn from_powers(n: u32, coeffs: &[Rational]) -> Self {
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Self::zero(), |acc, (j, c)| {
                acc + Self::root_of_unity(n, j as i64) * Self::from_rational(c)
            })
    }

    /// Conductor of the smallest cyclotomic field containing the element.
    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Coordinates in the power basis 1, ζ_n, …, ζ_n^{φ(n)-1}.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1 && self.num[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.num[0].is_one() && self.den.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        (self.n == 1).then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        (self.n == 1 && self.den.is_one()).then(|| self.num[0].clone())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|v| v.to_i64())
    }

    /// Image under the Galois automorphism ζ ↦ ζ^k; `k` must be coprime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        if self.n == 1 {
            return self.clone();
        }
        let n = self.n as i64;
        let k = k.rem_euclid(n);
        assert_eq!(
            k.gcd(&n),
            1,
            "Galois exponent {k} not coprime to conductor {n}"
        );
        let c = conductor(self.n);
        let mut out = vec![BigInt::zero(); c.phi];
        for (j, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let idx = ((j as i64 * k) % n) as usize;
            for (o, &p) in out.iter_mut().zip(&c.powers[idx]) {
                if p != 0 {
                    *o += a * p;
                }
            }
        }
        Cyclotomic {
            n: self.n,
            num: out,
            den: self.den.clone(),
        }
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn is_real(&self) -> bool {
        self.n == 1 || *self == self.conj()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.n == 1 {
            return Some(Cyclotomic {
                n: 1,
                num: vec![if self.num[0].is_negative() {
                    -self.den.clone()
                } else {
                    self.den.clone()
                }],
                den: self.num[0].abs(),
            });
        }
        // a^{-1} = (∏_{σ≠1} σ(a)) / N(a).
        let n = self.n as i64;
        let mut others = Self::one();
        for k in 2..n {
            if k.gcd(&n) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = (self * &others)
            .to_rational()
            .expect("field norm of a cyclotomic is rational");
        Some(&others * &Self::from_rational(&norm.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    /// If the element is a root of unity, its multiplicative order.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        let m = lcm_u32(2, self.n);
        (0..m)
            .find(|&k| Self::root_of_unity(m, k as i64) == *self)
            .map(|k| m / (k.gcd(&m)))
    }

    /// If the element is a root of unity ζ_m^k for the given `m`, return `k`.
    pub fn root_of_unity_exponent(&self, m: u32) -> Option<u32> {
        (0..m).find(|&k| Self::root_of_unity(m, k as i64) == *self)
    }

    /// Floating point approximation (re, im); for display and heuristics only.
    pub fn to_complex(&self) -> (f64, f64) {
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            let t = std::f64::consts::TAU * j as f64 / self.n as f64;
            re += c * t.cos();
            im += c * t.sin();
        }
        (re, im)
    }

    pub(crate) fn raw_parts(&self) -> (u32, &[BigInt], &BigInt) {
        (self.n, &self.num, &self.den)
    }

    fn build(n: u32, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut out = Cyclotomic { n, num, den };
        out.normalize_content();
        out.minimize();
        out
    }

    fn normalize_content(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            *self = Self::zero();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    fn minimize(&mut self) {
        'outer: while self.n > 1 {
            if self.num[1..].iter().all(Zero::is_zero) {
                self.num.truncate(1);
                self.n = 1;
                return;
            }
            let primes = conductor(self.n).primes.clone();
            for p in primes {
                let mut m = self.n / p;
                if m % 4 == 2 {
                    m /= 2;
                }
                if let Some(desc) = self.descend(m) {
                    *self = desc;
                    continue 'outer;
                }
            }
            break;
        }
    }

    fn descend(&self, m: u32) -> Option<Self> {
        let emb = embedding(m, self.n);
        let big = conductor(self.n);
        let y: Vec<BigInt> = emb
            .adj
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&emb.pivots)
                    .map(|(a, &p)| a * &self.num[p])
                    .sum()
            })
            .collect();
        for r in 0..big.phi {
            let mut acc = BigInt::zero();
            for (i, yi) in y.iter().enumerate() {
                let e = big.powers[i * emb.stride][r];
                if e != 0 {
                    acc += yi * e;
                }
            }
            if acc != &self.num[r] * &emb.det {
                return None;
            }
        }
        let mut out = Cyclotomic {
            n: m,
            num: y,
            den: &self.den * &emb.det,
        };
        out.normalize_content();
        Some(out)
    }

    fn lift(&self, target: u32) -> Vec<BigInt> {
        if self.n == target {
            return self.num.clone();
        }
        let c = conductor(target);
        let stride = (target / self.n) as usize;
        let mut out = vec![BigInt::zero(); c.phi];
        for (j, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(&c.powers[j * stride]) {
                if p != 0 {
                    *o += a * p;
                }
            }
        }
        out
    }

    fn add_impl(&self, rhs: &Self, negate: bool) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -rhs } else { rhs.clone() };
        }
        let n = lcm_u32(self.n, rhs.n);
        let a = self.lift(n);
        let b = rhs.lift(n);
        let num = a
            .iter()
            .zip(&b)
            .map(|(x, y)| {
                let r = y * &self.den;
                let l = x * &rhs.den;
                if negate {
                    l - r
                } else {
                    l + r
                }
            })
            .collect();
        Self::build(n, num, &self.den * &rhs.den)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.n == 1 || rhs.n == 1 {
            let (q, other) = if self.n == 1 {
                (self, rhs)
            } else {
                (rhs, self)
            };
            let num = other.num.iter().map(|c| c * &q.num[0]).collect();
            let mut out = Cyclotomic {
                n: other.n,
                num,
                den: &other.den * &q.den,
            };
            out.normalize_content();
            return out;
        }
        let n = lcm_u32(self.n, rhs.n);
        let c = conductor(n);
        let a = self.lift(n);
        let b = rhs.lift(n);
        let len = (2 * c.phi - 1).min(n as usize);
        let mut acc = vec![BigInt::zero(); len];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let mut k = i + j;
                if k >= n as usize {
                    k -= n as usize;
                }
                acc[k] += x * y;
            }
        }
        let mut num: Vec<BigInt> = vec![BigInt::zero(); c.phi];
        for (k, v) in acc.into_iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if k < c.phi {
                num[k] += v;
            } else {
                for (o, &p) in num.iter_mut().zip(&c.powers[k]) {
                    if p != 0 {
                        *o += &v * p;
                    }
                }
            }
        }
        Self::build(n, num, &self.den * &rhs.den)
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Self::from_rational(&q)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Terms are printed as `c*E(n)^j` with E(n) = exp(2πi/n).
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            return write!(f, "{}", fmt_rational(&self.num[0], &self.den));
        }
        let mut out = String::new();
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = BigRational::new(c.clone(), self.den.clone());
            let base = match j {
                0 => String::new(),
                1 => format!("E({})", self.n),
                _ => format!("E({})^{}", self.n, j),
            };
            let term = if base.is_empty() {
                fmt_rational(q.numer(), q.denom())
            } else if q.is_one() {
                base
            } else if q == -BigRational::one() {
                format!("-{base}")
            } else {
                format!("{}*{base}", fmt_rational(q.numer(), q.denom()))
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        f.write_str(&out)
    }
}

fn fmt_rational(n: &BigInt, d: &BigInt) -> String {
    if d.is_one() {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

impl super::ring::Ring for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Cyclotomic::is_one(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add_impl(rhs, false)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.add_impl(rhs, true)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl super::ring::Field for Cyclotomic {
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                $imp(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                $imp(&self, &rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                $imp(&self, rhs)
            }
        }
        impl $tr<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                $imp(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| a
    .add_impl(b, false));
forward_binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| a
    .add_impl(b, true));
forward_binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| a.mul_impl(b));

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn basic_identities() {
        assert_eq!(&z(4, 1) * &z(4, 1), Cyclotomic::from_int(-1));
        assert!((Cyclotomic::one() + z(3, 1) + z(3, 2)).is_zero());
        assert_eq!(z(5, 1).checked_div(&z(5, 2)).unwrap(), z(5, 4));
    }

    #[test]
    fn conductor_two_mod_four_is_folded() {
        let a = z(6, 1);
        assert_eq!(a.conductor(), 3);
        assert_eq!(a.pow(6), Cyclotomic::one());
        assert_eq!(a.pow(3), Cyclotomic::from_int(-1));
        assert_eq!(z(10, 5), Cyclotomic::from_int(-1));
    }

    #[test]
    fn subfield_demotion() {
        // ζ_8 + ζ_8^7 = √2 lives in Q(ζ_8), while ζ_12 + ζ_12^11 = √3 lives in Q(ζ_12).
        let r2 = z(8, 1) + z(8, 7);
        assert_eq!(r2.conductor(), 8);
        assert_eq!(&r2 * &r2, Cyclotomic::from_int(2));
        // ζ_15^5 = ζ_3 must demote.
        assert_eq!(z(15, 5).conductor(), 3);
        // i·i computed in Q(ζ_20) demotes to Q.
        let i20 = z(20, 5);
        assert_eq!(i20.conductor(), 4);
        let mixed = &(z(5, 1) + z(4, 1)) - &z(5, 1);
        assert_eq!(mixed, z(4, 1));
    }

    #[test]
    fn sqrt5_from_fifth_roots() {
        let s = Cyclotomic::from_int(1)
            + z(5, 1) * Cyclotomic::from_int(2)
            + z(5, 4) * Cyclotomic::from_int(2);
        assert_eq!(&s * &s, Cyclotomic::from_int(5));
        assert!(s.is_real());
    }

    #[test]
    fn inverse_and_galois() {
        let a = Cyclotomic::from_int(3) + z(7, 2) - z(7, 5);
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(z(9, 2).galois(2), z(9, 4));
        assert_eq!(z(12, 1).conj(), z(12, 11));
    }

    #[test]
    fn roots_of_unity_order() {
        assert_eq!(z(12, 3).root_of_unity_order(), Some(4));
        assert_eq!(z(5, 2).root_of_unity_order(), Some(5));
        assert_eq!((-z(3, 1)).root_of_unity_order(), Some(6));
        assert_eq!(Cyclotomic::from_int(2).root_of_unity_order(), None);
    }

    #[test]
    fn display() {
        assert_eq!(z(3, 1).to_string(), "E(3)");
        assert_eq!(z(3, 2).to_string(), "-1-E(3)");
        assert_eq!(
            Cyclotomic::from_rational(&Rational::new(1.into(), 2.into())).to_string(),
            "1/2"
        );
    }
}
