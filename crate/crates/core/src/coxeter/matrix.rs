use std::cmp::Ordering;
use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::exact::{Cyclotomic, Matrix};

/// Symmetric Coxeter matrix; `None` encodes m_st = ∞.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    m: Vec<Vec<Option<u32>>>,
}

impl CoxeterMatrix {
    pub fn new(m: Vec<Vec<Option<u32>>>) -> Result<Self> {
        let n = m.len();
        for (s, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(invalid("Coxeter matrix is not square"));
            }
            if row[s] != Some(1) {
                return Err(invalid(format!("diagonal entry m_{s}{s} must be 1")));
            }
            for (t, &e) in row.iter().enumerate() {
                if e != m[t][s] {
                    return Err(invalid(format!("asymmetric: m_{s}{t} != m_{t}{s}")));
                }
                if s != t && matches!(e, Some(v) if v < 2) {
                    return Err(invalid(format!("off-diagonal entry m_{s}{t} < 2")));
                }
            }
        }
        Ok(CoxeterMatrix { m })
    }

    /// From integer rows, with 0 standing for ∞.
    pub fn from_ints(rows: &[&[u32]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| (v != 0).then_some(v)).collect())
                .collect(),
        )
    }

    /// One row per line, entries separated by whitespace, `inf` for ∞.
    pub fn parse(text: &str) -> Result<Self> {
        let rows =
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| {
                    l.split_whitespace()
                        .map(|tok| match tok {
                            "inf" | "∞" | "infinity" => Ok(None),
                            _ => tok.parse::<u32>().map(Some).map_err(|_| {
                                Error::Parse(format!("bad Coxeter matrix entry {tok:?}"))
                            }),
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    /// Path graph with the given consecutive edge labels.
    pub fn chain(labels: &[u32]) -> Self {
        let n = labels.len() + 1;
        let mut m = vec![vec![Some(2); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Some(1);
        }
        for (i, &l) in labels.iter().enumerate() {
            m[i][i + 1] = Some(l);
            m[i + 1][i] = Some(l);
        }
        CoxeterMatrix { m }
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn get(&self, s: usize, t: usize) -> Option<u32> {
        self.m[s][t]
    }

    pub fn has_infinity(&self) -> bool {
        self.m.iter().flatten().any(Option::is_none)
    }

    /// Restriction to the generators in `subset`, in the given order.
    pub fn restrict(&self, subset: &[usize]) -> Self {
        CoxeterMatrix {
            m: subset
                .iter()
                .map(|&s| subset.iter().map(|&t| self.m[s][t]).collect())
                .collect(),
        }
    }

    /// Connected components of the Coxeter graph (edges where m_st != 2).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                let s = comp[i];
                for t in 0..n {
                    if !seen[t] && self.m[s][t] != Some(2) && s != t {
                        seen[t] = true;
                        comp.push(t);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.m {
            let cells: Vec<String> = row
                .iter()
                .map(|e| e.map_or_else(|| "inf".to_string(), |v| v.to_string()))
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// 2cos(π/m) = ζ_{2m} + ζ_{2m}^{-1}.
pub fn two_cos_pi_over(m: u32) -> Cyclotomic {
    Cyclotomic::root_of_unity(2 * m, 1) + Cyclotomic::root_of_unity(2 * m, -1)
}

/// Cartan matrix with entries in a real cyclotomic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    c: Matrix<Cyclotomic>,
}

impl CartanMatrix {
    /// Validate c_ss = 2, c_st ≤ 0, c_st = 0 ⇔ c_ts = 0 and
    /// c_st·c_ts = 4cos²(π/m_st) (at least 4 when m_st = ∞).
    pub fn new(c: Matrix<Cyclotomic>, cox: &CoxeterMatrix) -> Result<Self> {
        let n = cox.rank();
        if c.rows() != n || c.cols() != n {
            return Err(Error::Shape("Cartan matrix size".into()));
        }
        for s in 0..n {
            if *c.get(s, s) != Cyclotomic::from_int(2) {
                return Err(invalid(format!("c_{s}{s} must be 2")));
            }
            for t in 0..n {
                if s == t {
                    continue;
                }
                let (a, b) = (c.get(s, t), c.get(t, s));
                if a.real_sign()? == Ordering::Greater {
                    return Err(invalid(format!("c_{s}{t} must be non-positive")));
                }
                if a.is_zero() != b.is_zero() {
                    return Err(invalid(format!(
                        "c_{s}{t} and c_{t}{s} must vanish together"
                    )));
                }
                let prod = a * b;
                match cox.get(s, t) {
                    Some(m) => {
                        // 4cos²(π/m) = 2 + ζ_m + ζ_m^{-1}.
                        let want = Cyclotomic::from_int(2)
                            + Cyclotomic::root_of_unity(m, 1)
                            + Cyclotomic::root_of_unity(m, -1);
                        if prod != want {
                            return Err(invalid(format!("c_{s}{t}·c_{t}{s} != 4cos²(π/{m})")));
                        }
                    }
                    None => {
                        if prod.real_cmp(&Cyclotomic::from_int(4))? == Ordering::Less {
                            return Err(invalid(format!("c_{s}{t}·c_{t}{s} < 4 for m = ∞")));
                        }
                    }
                }
            }
        }
        Ok(CartanMatrix { c })
    }

    pub fn matrix(&self) -> &Matrix<Cyclotomic> {
        &self.c
    }

    pub fn get(&self, s: usize, t: usize) -> &Cyclotomic {
        self.c.get(s, t)
    }

    pub fn rank(&self) -> usize {
        self.c.rows()
    }
}

/// c_st = −2cos(π/m_st); undefined when some m_st is ∞.
pub fn standard_cartan(cox: &CoxeterMatrix) -> Result<CartanMatrix> {
    if cox.has_infinity() {
        return Err(invalid(
            "standard Cartan matrix needs finite m_st; supply entries",
        ));
    }
    let n = cox.rank();
    let c = Matrix::from_fn(n, n, |s, t| {
        if s == t {
            Cyclotomic::from_int(2)
        } else {
            -two_cos_pi_over(cox.get(s, t).expect("finite"))
        }
    });
    Ok(CartanMatrix { c })
}

/// Cartan matrix for a possibly infinite Coxeter matrix, using c_st = c_ts = −2 for m_st = ∞.
pub fn cartan_with_infinity(cox: &CoxeterMatrix) -> CartanMatrix {
    let n = cox.rank();
    let c = Matrix::from_fn(n, n, |s, t| {
        if s == t {
            Cyclotomic::from_int(2)
        } else {
            match cox.get(s, t) {
                Some(m) => -two_cos_pi_over(m),
                None => Cyclotomic::from_int(-2),
            }
        }
    });
    CartanMatrix { c }
}

/// Whether the bilinear form (−cos(π/m_st)) is positive definite, decided
/// exactly from the leading principal minors.
pub fn is_finite(cox: &CoxeterMatrix) -> bool {
    if cox.has_infinity() {
        return false;
    }
    let n = cox.rank();
    let half = Cyclotomic::from_rational(&crate::exact::ratio(1, 2));
    let gram = Matrix::from_fn(n, n, |s, t| {
        if s == t {
            Cyclotomic::one()
        } else {
            -(two_cos_pi_over(cox.get(s, t).expect("finite")) * &half)
        }
    });
    (1..=n).all(|k| {
        let minor = Matrix::from_fn(k, k, |i, j| gram.get(i, j).clone());
        let d = minor.det().expect("square");
        d.real_sign().expect("Gram minors are real") == Ordering::Greater
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(CoxeterMatrix::from_ints(&[&[1, 3], &[3, 1]]).is_ok());
        assert!(CoxeterMatrix::from_ints(&[&[1, 2], &[3, 1]]).is_err());
        assert!(CoxeterMatrix::from_ints(&[&[1, 0], &[0, 1]]).is_ok());
        assert!(CoxeterMatrix::from_ints(&[&[2, 3], &[3, 1]]).is_err());
        assert!(CoxeterMatrix::from_ints(&[&[1, 1], &[1, 1]]).is_err());
    }

    #[test]
    fn parse_roundtrip() {
        let m = CoxeterMatrix::parse("1 inf\ninf 1\n").unwrap();
        assert!(m.has_infinity());
        assert_eq!(CoxeterMatrix::parse(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn cartan_products() {
        let a2 = standard_cartan(&CoxeterMatrix::chain(&[3])).unwrap();
        assert_eq!(*a2.get(0, 1), Cyclotomic::from_int(-1));
        let b2 = standard_cartan(&CoxeterMatrix::chain(&[4])).unwrap();
        assert_eq!(b2.get(0, 1) * b2.get(1, 0), Cyclotomic::from_int(2));
        let i5 = standard_cartan(&CoxeterMatrix::chain(&[5])).unwrap();
        // (3 + √5)/2 with √5 = 1 + 2ζ_5 + 2ζ_5^4.
        let sqrt5 = Cyclotomic::one()
            + (Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4))
                * Cyclotomic::from_int(2);
        let want = (Cyclotomic::from_int(3) + sqrt5)
            * Cyclotomic::from_rational(&crate::exact::ratio(1, 2));
        assert_eq!(i5.get(0, 1) * i5.get(1, 0), want);
        assert!(standard_cartan(&CoxeterMatrix::from_ints(&[&[1, 0], &[0, 1]]).unwrap()).is_err());
    }

    #[test]
    fn cartan_validation() {
        let cox = CoxeterMatrix::chain(&[4]);
        let c = Matrix::from_rows(vec![
            vec![Cyclotomic::from_int(2), Cyclotomic::from_int(-2)],
            vec![Cyclotomic::from_int(-1), Cyclotomic::from_int(2)],
        ])
        .unwrap();
        assert!(CartanMatrix::new(c.clone(), &cox).is_ok());
        assert!(CartanMatrix::new(c, &CoxeterMatrix::chain(&[3])).is_err());
    }

    #[test]
    fn finiteness() {
        assert!(is_finite(&CoxeterMatrix::chain(&[5, 3])));
        assert!(!is_finite(
            &CoxeterMatrix::from_ints(&[&[1, 0], &[0, 1]]).unwrap()
        ));
        let a2_affine = CoxeterMatrix::from_ints(&[&[1, 3, 3], &[3, 1, 3], &[3, 3, 1]]).unwrap();
        assert!(!is_finite(&a2_affine));
        assert!(!is_finite(&CoxeterMatrix::chain(&[4, 4])));
        assert!(is_finite(&CoxeterMatrix::chain(&[3, 4, 3])));
        assert!(!is_finite(&CoxeterMatrix::chain(&[5, 3, 3, 3])));
    }
}
