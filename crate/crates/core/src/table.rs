//! Degrees, codegrees and character fields of the irreducible complex
//! reflection groups: the exceptional groups G4–G37 ship as a checksummed
//! data file, and the infinite series are computed from closed forms.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{invalid, Error, Result};
use crate::imprim::ImprimParams;
use crate::invariants::{degrees_closed_form, DegreeData};

const DATA: &str = include_str!("../data/shephard_todd.tsv");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShephardToddRecord {
    pub label: String,
    pub degrees: Vec<u32>,
    /// Listed codegrees, or reconstructed as d_n − d_{n−i+1} for
    /// well-generated groups.
    pub codegrees: Vec<i32>,
    pub well_generated: bool,
    /// Character field of the reflection representation.
    pub field: String,
    /// W/Z(W), exceptional groups only.
    pub quotient: Option<String>,
    /// Regular degrees that divide no other regular degree.
    pub regular_degrees: Vec<u32>,
}

impl ShephardToddRecord {
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn order(&self) -> BigUint {
        self.degrees.iter().map(|&d| BigUint::from(d)).product()
    }

    pub fn degree_data(&self) -> DegreeData {
        DegreeData::new(self.degrees.clone(), self.codegrees.clone())
            .expect("records hold one codegree per degree")
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn corrupt(msg: impl Into<String>) -> Error {
    Error::Parse(format!("corrupt table data: {}", msg.into()))
}

fn list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| corrupt(format!("bad number {t:?}")))
        })
        .collect()
}

fn reconstructed_codegrees(degrees: &[u32]) -> Vec<i32> {
    let top = *degrees.last().expect("nonempty degrees");
    let mut c: Vec<i32> = degrees.iter().rev().map(|d| (top - d) as i32).collect();
    c.sort_unstable();
    c
}

/// Parse table text: a `# sha256 <hex>` line covering the rest, a header
/// line, then one tab-separated record per line.
pub fn parse_table(text: &str) -> Result<Vec<ShephardToddRecord>> {
    let (first, body) = text.split_once('\n').ok_or_else(|| corrupt("empty"))?;
    let want = first
        .strip_prefix("# sha256 ")
        .ok_or_else(|| corrupt("missing checksum line"))?
        .trim();
    let got = sha256_hex(body.as_bytes());
    if got != want {
        return Err(corrupt(format!("checksum {got} does not match {want}")));
    }
    let mut lines = body.lines();
    lines.next().ok_or_else(|| corrupt("missing header"))?;
    lines
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let cols: Vec<&str> = line.split('\t').collect();
            let [label, degs, codegs, field, quotient, regular] = cols[..] else {
                return Err(corrupt(format!("expected 6 columns in {line:?}")));
            };
            let mut degrees = list(degs)?;
            degrees.sort_unstable();
            let well_generated = codegs == "*";
            let codegrees = if well_generated {
                reconstructed_codegrees(&degrees)
            } else {
                let mut c = list(codegs)?;
                c.sort_unstable();
                c
            };
            if codegrees.len() != degrees.len() {
                return Err(corrupt(format!("{label}: codegree count")));
            }
            Ok(ShephardToddRecord {
                label: label.to_string(),
                degrees,
                codegrees,
                well_generated,
                field: field.to_string(),
                quotient: Some(quotient.to_string()),
                regular_degrees: list(regular)?,
            })
        })
        .collect()
}

/// The bundled exceptional groups G4–G37, checksum-verified.
pub fn load_table() -> Result<Vec<ShephardToddRecord>> {
    parse_table(DATA)
}

/// Record of an irreducible member of an infinite series: `G(m,p,n)` or
/// `S<n>` for the symmetric group acting on its (n−1)-dimensional
/// reflection representation.
pub fn series_record(label: &str) -> Result<ShephardToddRecord> {
    let label = label.trim();
    if let Some(k) = label.strip_prefix('S') {
        let k: u32 = k
            .parse()
            .map_err(|_| Error::Parse(format!("bad label {label:?}")))?;
        if k < 2 {
            return Err(invalid("S_n needs n ≥ 2"));
        }
        let degrees: Vec<u32> = (2..=k).collect();
        return Ok(ShephardToddRecord {
            label: label.to_string(),
            codegrees: reconstructed_codegrees(&degrees),
            regular_degrees: if k == 2 { vec![2] } else { vec![k - 1, k] },
            degrees,
            well_generated: true,
            field: "Q".into(),
            quotient: None,
        });
    }
    let inner = label
        .strip_prefix("G(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("unknown label {label:?}")))?;
    let nums: Vec<u32> = inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad label {label:?}")))
        })
        .collect::<Result<_>>()?;
    let [m, p, n] = nums[..] else {
        return Err(Error::Parse(format!("expected G(m,p,n), got {label:?}")));
    };
    let params = ImprimParams::from_mpn(m, p, n as usize)?;
    if params.is_reducible() {
        return Err(invalid(format!("{params} is reducible")));
    }
    let dd = degrees_closed_form(&params);
    let (d, e) = (params.d, params.e);
    let regular_degrees = if d > 1 {
        vec![d * n]
    } else if e % n == 0 {
        vec![(n - 1) * e]
    } else {
        let mut v = vec![n, (n - 1) * e];
        v.sort_unstable();
        v
    };
    let field = if d == 1 && n == 2 {
        if m <= 4 || m == 6 {
            "Q".into()
        } else {
            format!("Q(ζ{m}+ζ{m}^-1)")
        }
    } else if m <= 2 {
        "Q".into()
    } else if m == 4 {
        "Q(i)".into()
    } else {
        format!("Q(ζ{m})")
    };
    Ok(ShephardToddRecord {
        label: params.to_string(),
        well_generated: d == 1 || e == 1,
        degrees: dd.degrees,
        codegrees: dd.codegrees,
        field,
        quotient: None,
        regular_degrees,
    })
}

/// Look up `G4`…`G37`, `G(m,p,n)` or `S<n>`.
pub fn lookup(label: &str) -> Result<ShephardToddRecord> {
    let label = label.trim();
    if label.starts_with("G(") || label.starts_with('S') {
        return series_record(label);
    }
    load_table()?
        .into_iter()
        .find(|r| r.label == label)
        .ok_or_else(|| invalid(format!("no table entry {label:?}")))
}
