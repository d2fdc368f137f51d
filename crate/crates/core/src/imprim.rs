//! The imprimitive reflection groups G(de,e,n) as monomial matrix groups.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{invalid, invariant, Error, Result};
use crate::exact::{Cyclotomic, Matrix};
use crate::group::{FiniteGroup, Perm, PointSet};

/// Parameters (d, e, n) of the group G(de, e, n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ImprimParams {
    pub d: u32,
    pub e: u32,
    pub n: usize,
}

impl ImprimParams {
    pub fn new(d: u32, e: u32, n: usize) -> Result<Self> {
        if d == 0 || e == 0 || n == 0 {
            return Err(invalid("G(de,e,n) needs d, e, n ≥ 1"));
        }
        Ok(ImprimParams { d, e, n })
    }

    /// Parameters for G(m, p, n); requires p | m.
    pub fn from_mpn(m: u32, p: u32, n: usize) -> Result<Self> {
        if p == 0 || m == 0 || !m.is_multiple_of(p) {
            return Err(invalid(format!("G({m},{p},{n}) needs p dividing m")));
        }
        Self::new(m / p, p, n)
    }

    /// The root-of-unity order de.
    pub fn m(&self) -> u32 {
        self.d * self.e
    }

    /// G(2,2,2) is the Klein four-group acting reducibly.
    pub fn is_reducible(&self) -> bool {
        self.m() == 1 || (self.m() == 2 && self.e == 2 && self.n == 2)
    }

    /// G(1,1,n): the symmetric group on n coordinates.
    pub fn is_natural_symmetric(&self) -> bool {
        self.m() == 1
    }

    /// G(de,de,n), the well-generated group contained in G(de,e,n).
    pub fn well_generated_subgroup(&self) -> ImprimParams {
        ImprimParams {
            d: 1,
            e: self.m(),
            n: self.n,
        }
    }
}

impl fmt::Display for ImprimParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{})", self.m(), self.e, self.n)
    }
}

/// Monomial matrix D·P: `g e_i = ζ^{exps[perm[i]]} e_{perm[i]}` with ζ = ζ_{de}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialElement {
    pub perm: Vec<usize>,
    pub exps: Vec<u32>,
}

impl MonomialElement {
    pub fn identity(n: usize) -> Self {
        MonomialElement {
            perm: (0..n).collect(),
            exps: vec![0; n],
        }
    }

    pub fn diagonal(exps: Vec<u32>) -> Self {
        MonomialElement {
            perm: (0..exps.len()).collect(),
            exps,
        }
    }

    /// Transposition of coordinates i and j.
    pub fn swap(n: usize, i: usize, j: usize) -> Self {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, j);
        MonomialElement {
            perm,
            exps: vec![0; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    fn validate(&self, m: u32) -> Result<()> {
        let n = self.perm.len();
        if self.exps.len() != n {
            return Err(invalid("permutation and exponent lengths differ"));
        }
        let mut seen = vec![false; n];
        for &p in &self.perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(invalid("not a permutation"));
            }
        }
        if let Some(&x) = self.exps.iter().find(|&&x| x >= m) {
            return Err(invalid(format!("exponent {x} not in [0, {m})")));
        }
        Ok(())
    }

    /// self·other as matrices.
    pub fn mul(&self, other: &Self, m: u32) -> Self {
        let n = self.rank();
        let mut exps = self.exps.clone();
        for i in 0..n {
            let j = self.perm[i];
            exps[j] = (exps[j] + other.exps[i]) % m;
        }
        let perm = other.perm.iter().map(|&i| self.perm[i]).collect();
        MonomialElement { perm, exps }
    }

    pub fn inverse(&self, m: u32) -> Self {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut exps = vec![0; n];
        for i in 0..n {
            let j = self.perm[i];
            perm[j] = i;
            exps[i] = (m - self.exps[j]) % m;
        }
        MonomialElement { perm, exps }
    }

    pub fn matrix(&self, m: u32) -> Matrix<Cyclotomic> {
        let n = self.rank();
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            let j = self.perm[i];
            out.set(j, i, Cyclotomic::root_of_unity(m, i64::from(self.exps[j])));
        }
        out
    }

    /// Action on the point ζ^k·e_i, numbered i·m + k.
    fn point_perm(&self, m: u32) -> Perm {
        let n = self.rank();
        let m = m as usize;
        let mut out = Vec::with_capacity(n * m);
        for i in 0..n {
            let j = self.perm[i];
            for k in 0..m {
                out.push((j * m + (k + self.exps[j] as usize) % m) as u16);
            }
        }
        out
    }
}

impl fmt::Display for MonomialElement {
    /// Cycle notation on 1..n, then the exponents: `(1 2);[1,0]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut cycles = String::new();
        for start in 0..n {
            if seen[start] || self.perm[start] == start {
                continue;
            }
            let mut c = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                c.push((i + 1).to_string());
                i = self.perm[i];
            }
            cycles.push_str(&format!("({})", c.join(" ")));
        }
        if cycles.is_empty() {
            cycles.push_str("()");
        }
        let exps: Vec<String> = self.exps.iter().map(u32::to_string).collect();
        write!(f, "{cycles};[{}]", exps.join(","))
    }
}

impl FromStr for MonomialElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("monomial element {s:?}: {why}"));
        let (cyc, ex) = s.split_once(';').ok_or_else(|| bad("missing ';'"))?;
        let ex = ex
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad("exponents must be bracketed"))?;
        let exps = if ex.trim().is_empty() {
            Vec::new()
        } else {
            ex.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| bad("bad exponent")))
                .collect::<Result<Vec<_>>>()?
        };
        let n = exps.len();
        let mut perm: Vec<usize> = (0..n).collect();
        for chunk in cyc.split(')') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let body = chunk.strip_prefix('(').ok_or_else(|| bad("bad cycle"))?;
            let pts = body
                .split_whitespace()
                .map(|t| match t.parse::<usize>() {
                    Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                    _ => Err(bad("cycle entry out of range")),
                })
                .collect::<Result<Vec<_>>>()?;
            for (k, &p) in pts.iter().enumerate() {
                perm[p] = pts[(k + 1) % pts.len()];
            }
        }
        let m = MonomialElement { perm, exps };
        m.validate(u32::MAX)?;
        Ok(m)
    }
}

/// Generators t₁^e, t₁⁻¹t₂t₁, t₂, …, t_n (t₁, …, t_n when e = 1), dropping
/// t₁^e when d = 1.
pub fn generators(p: &ImprimParams) -> Vec<MonomialElement> {
    let (m, n) = (p.m(), p.n);
    let mut out = Vec::new();
    if p.d > 1 {
        let mut exps = vec![0; n];
        exps[0] = p.e % m;
        out.push(MonomialElement::diagonal(exps));
    }
    if p.e > 1 && n >= 2 {
        let mut g = MonomialElement::swap(n, 0, 1);
        g.exps[0] = m - 1;
        g.exps[1] = 1;
        out.push(g);
    }
    out.extend((1..n).map(|i| MonomialElement::swap(n, i - 1, i)));
    out
}

/// d^n · e^{n−1} · n!
pub fn group_order(p: &ImprimParams) -> BigUint {
    let n = p.n as u32;
    let fact: BigUint = (1..=p.n as u64).map(BigUint::from).product();
    BigUint::from(p.d).pow(n) * BigUint::from(p.e).pow(n - 1) * fact
}

/// Σ exps ≡ 0 (mod e), after checking the element is well formed for G(de,e,n).
pub fn membership(g: &MonomialElement, p: &ImprimParams) -> Result<bool> {
    if g.rank() != p.n {
        return Err(invalid(format!(
            "element has rank {}, expected {}",
            g.rank(),
            p.n
        )));
    }
    g.validate(p.m())?;
    let sum: u64 = g.exps.iter().map(|&x| u64::from(x)).sum();
    Ok(sum.is_multiple_of(u64::from(p.e)))
}

/// All monomial matrices of rank n with de-th root entries that pass
/// [`membership`]; a brute-force cross-check of the generated group.
pub fn brute_force_members(p: &ImprimParams, budget: usize) -> Result<Vec<MonomialElement>> {
    let (m, n) = (p.m() as usize, p.n);
    let total = (1..=n)
        .product::<usize>()
        .saturating_mul(m.saturating_pow(n as u32));
    if total > budget {
        return Err(Error::Budget {
            what: "monomial matrices to scan".into(),
            limit: budget,
        });
    }
    let mut out = Vec::new();
    for perm in permutations(n) {
        for code in 0..m.pow(n as u32) {
            let exps: Vec<u32> = (0..n)
                .map(|i| ((code / m.pow(i as u32)) % m) as u32)
                .collect();
            let g = MonomialElement {
                perm: perm.clone(),
                exps,
            };
            if membership(&g, p)? {
                out.push(g);
            }
        }
    }
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// G(de,e,n) enumerated as a permutation group on the points ζ^k·e_i.
#[derive(Debug)]
pub struct ImprimGroup {
    params: ImprimParams,
    gens: Vec<MonomialElement>,
    group: FiniteGroup,
}

impl ImprimGroup {
    pub fn new(params: ImprimParams, budget: usize) -> Result<Self> {
        let m = params.m() as usize;
        let n = params.n;
        if n * m > u16::MAX as usize {
            return Err(Error::Budget {
                what: "points n·de".into(),
                limit: u16::MAX as usize,
            });
        }
        let order = group_order(&params);
        if order > BigUint::from(budget) {
            return Err(Error::Budget {
                what: format!("order of {params}"),
                limit: budget,
            });
        }
        let mut points = Vec::with_capacity(n * m);
        for i in 0..n {
            for k in 0..m {
                let mut v = vec![Cyclotomic::zero(); n];
                v[i] = Cyclotomic::root_of_unity(m as u32, k as i64);
                points.push(v);
            }
        }
        let basis = (0..n).map(|i| i * m).collect();
        let points = Arc::new(PointSet::new(n, points, basis)?);
        let gens = generators(&params);
        let perms = gens.iter().map(|g| g.point_perm(params.m())).collect();
        let group = FiniteGroup::generate(points, perms, budget)?;
        if BigUint::from(group.order()) != order {
            return Err(invariant(format!(
                "{params}: generated {} elements, expected {order}",
                group.order()
            )));
        }
        Ok(ImprimGroup {
            params,
            gens,
            group,
        })
    }

    pub fn params(&self) -> &ImprimParams {
        &self.params
    }

    pub fn generators(&self) -> &[MonomialElement] {
        &self.gens
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn into_group(self) -> FiniteGroup {
        self.group
    }

    pub fn element(&self, i: usize) -> MonomialElement {
        let m = self.params.m() as usize;
        let n = self.params.n;
        let p = self.group.element(i);
        let mut perm = vec![0; n];
        let mut exps = vec![0; n];
        for (i, slot) in perm.iter_mut().enumerate() {
            let img = p[i * m] as usize;
            *slot = img / m;
            exps[img / m] = (img % m) as u32;
        }
        MonomialElement { perm, exps }
    }

    pub fn index_of(&self, g: &MonomialElement) -> Option<usize> {
        if g.rank() != self.params.n || g.validate(self.params.m()).is_err() {
            return None;
        }
        self.group.index_of(&g.point_perm(self.params.m()))
    }
}

/// Reflections of a group and its number of reflecting hyperplanes N*.
pub fn reflections_and_hyperplanes(g: &FiniteGroup) -> (Vec<usize>, usize) {
    (g.reflections(), g.hyperplanes().len())
}

fn fixes(m: &Matrix<Cyclotomic>, v: &[Cyclotomic]) -> bool {
    m.mul_vec(v).map(|w| w == v).unwrap_or(false)
}

/// Pointwise stabilizer of the span of `basis`, computed by brute force and as
/// the closure of the reflections whose hyperplane contains the span. The two
/// must agree; a mismatch is reported as an invariant violation.
pub fn parabolic_subgroup(g: &FiniteGroup, basis: &[Vec<Cyclotomic>]) -> Result<Vec<usize>> {
    if basis.iter().any(|v| v.len() != g.dim()) {
        return Err(Error::Shape("subspace vector dimension".into()));
    }
    let mats = g.all_matrices();
    let brute: Vec<usize> = (0..g.order())
        .filter(|&i| basis.iter().all(|v| fixes(&mats[i], v)))
        .collect();
    let refl: Vec<usize> = g
        .reflections()
        .into_iter()
        .filter(|&r| basis.iter().all(|v| fixes(&mats[r], v)))
        .collect();
    let mut closure: HashSet<usize> = HashSet::from([0]);
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for &r in &refl {
            let y = g.mul(x, r);
            if closure.insert(y) {
                frontier.push(y);
            }
        }
    }
    let mut gen: Vec<usize> = closure.into_iter().collect();
    gen.sort_unstable();
    if gen != brute {
        return Err(invariant(format!(
            "stabilizer has {} elements but its reflections generate {}",
            brute.len(),
            gen.len()
        )));
    }
    Ok(brute)
}

/// For each hyperplane H the nontrivial eigenvalues of the reflections fixing
/// H are exactly the e_H − 1 nontrivial e_H-th roots of unity, where e_H is
/// the order of the pointwise stabilizer of H.
pub fn check_hyperplane_eigenvalues(g: &FiniteGroup) -> Result<()> {
    for (form, refls) in g.hyperplanes() {
        let e_h = refls.len() as u32 + 1;
        let mut seen = HashSet::new();
        for &r in &refls {
            let det = g.matrix(r).det()?;
            match det.root_of_unity_order() {
                Some(k) if k > 1 && e_h.is_multiple_of(k) => {}
                _ => {
                    return Err(invariant(format!(
                        "reflection {r} has eigenvalue {det} outside μ_{e_h}"
                    )))
                }
            }
            if !seen.insert(det) {
                return Err(invariant(format!(
                    "two reflections on hyperplane {form:?} share an eigenvalue"
                )));
            }
        }
    }
    Ok(())
}
