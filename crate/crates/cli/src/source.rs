use std::path::Path;

use anyhow::{Context, Result};
use num_bigint::BigUint;
use reflgroup::coxeter::classify_finite_type;
use reflgroup::invariants::degrees_closed_form;
use reflgroup::{
    CoxeterMatrix, CoxeterSystem, DegreeData, FiniteGroup, FiniteType, ImprimGroup, ImprimParams,
};

use crate::commands::CliError;
use crate::GroupArg;

/// Type name, matrix file, or inline matrix with `;`-separated rows.
pub fn coxeter_matrix(spec: &str) -> Result<CoxeterMatrix> {
    let spec = spec.trim();
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
        return Ok(CoxeterMatrix::parse(&text)?);
    }
    if spec.contains(';') || spec.starts_with(|c: char| c.is_ascii_digit()) {
        return Ok(CoxeterMatrix::parse(&spec.replace(';', "\n"))?);
    }
    let t: FiniteType = spec.parse()?;
    Ok(t.coxeter_matrix())
}

pub fn coxeter_system(spec: &str) -> Result<CoxeterSystem> {
    Ok(CoxeterSystem::new(coxeter_matrix(spec)?)?)
}

/// Order of an irreducible finite Coxeter group.
pub fn type_order(t: FiniteType) -> BigUint {
    let fact = |n: usize| (1..=n as u64).map(BigUint::from).product::<BigUint>();
    match t {
        FiniteType::A(n) => fact(n + 1),
        FiniteType::B(n) => (BigUint::from(1u32) << n) * fact(n),
        FiniteType::D(n) => (BigUint::from(1u32) << (n - 1)) * fact(n),
        FiniteType::E(6) => 51_840u64.into(),
        FiniteType::E(7) => 2_903_040u64.into(),
        FiniteType::E(_) => 696_729_600u64.into(),
        FiniteType::F4 => 1_152u64.into(),
        FiniteType::H3 => 120u64.into(),
        FiniteType::H4 => 14_400u64.into(),
        FiniteType::I2(m) => BigUint::from(2 * m),
    }
}

pub fn finite_order(m: &CoxeterMatrix) -> Result<(Vec<FiniteType>, BigUint)> {
    let types = classify_finite_type(m)?;
    let order = types.iter().map(|&t| type_order(t)).product();
    Ok((types, order))
}

pub fn imprim_params(v: &[u32]) -> Result<ImprimParams> {
    let [m, p, n] = v[..] else {
        return Err(CliError::Usage("--imprim takes three numbers m p n".into()).into());
    };
    Ok(ImprimParams::from_mpn(m, p, n as usize)?)
}

/// A resolved group together with how to print its elements.
pub enum Source {
    Coxeter(FiniteGroup),
    Imprim(ImprimGroup),
}

impl Source {
    pub fn resolve(arg: &GroupArg, budget: usize) -> Result<Self> {
        if let Some(v) = &arg.imprim {
            return Ok(Source::Imprim(ImprimGroup::new(imprim_params(v)?, budget)?));
        }
        let spec = arg
            .spec
            .as_deref()
            .ok_or_else(|| CliError::Usage("a group is required".into()))?;
        Ok(Source::Coxeter(coxeter_system(spec)?.enumerate(budget)?))
    }

    pub fn group(&self) -> &FiniteGroup {
        match self {
            Source::Coxeter(group) => group,
            Source::Imprim(g) => g.group(),
        }
    }

    /// Printable element: a 1-based reduced word, or a monomial matrix.
    pub fn describe(&self, i: usize) -> String {
        match self {
            Source::Coxeter(group) => word_string(&group.word(i)),
            Source::Imprim(g) => g.element(i).to_string(),
        }
    }

    /// Degrees from the Molien series; codegrees from the closed form for
    /// G(m,p,n) and d_i − 2 for real groups.
    pub fn degree_data(&self, degrees: Vec<u32>) -> Result<DegreeData> {
        let codegrees = match self {
            Source::Imprim(g) => degrees_closed_form(g.params()).codegrees,
            Source::Coxeter(_) => degrees.iter().map(|&d| d as i32 - 2).collect(),
        };
        Ok(DegreeData::new(degrees, codegrees)?)
    }
}

pub fn word_string(w: &[usize]) -> String {
    if w.is_empty() {
        return "e".into();
    }
    w.iter()
        .map(|s| (s + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// 1-based letters to 0-based generator indices.
pub fn parse_word(letters: &[usize], rank: usize) -> Result<Vec<usize>> {
    letters
        .iter()
        .map(|&l| {
            if l == 0 || l > rank {
                Err(CliError::Usage(format!("letter {l} outside 1..={rank}")).into())
            } else {
                Ok(l - 1)
            }
        })
        .collect()
}

pub fn parse_word_str(s: &str, rank: usize) -> Result<Vec<usize>> {
    let letters = s
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty() && *t != "e")
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Usage(format!("bad letter {t:?}")))
        })
        .collect::<std::result::Result<Vec<usize>, _>>()?;
    parse_word(&letters, rank)
}
