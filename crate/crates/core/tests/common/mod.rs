//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use reflgroup::exact::Ring;
use reflgroup::{FiniteGroup, ImprimParams, UvLaurent};

/// Irreducible G(de,e,n) (plus the natural S_n) with de ≤ `max_m`, n ≥ 2 and
/// order ≤ `max_order`, and the cyclic groups G(m,1,1) for 2 ≤ m ≤ `max_m`.
pub fn imprim_family(max_m: u32, max_order: u64) -> Vec<ImprimParams> {
    let mut out = Vec::new();
    for m in 2..=max_m {
        out.push(ImprimParams::from_mpn(m, 1, 1).unwrap());
    }
    for n in 2..=10usize {
        for m in 1..=max_m {
            for p in (1..=m).filter(|p| m % p == 0) {
                let d = u64::from(m / p);
                let e = u64::from(p);
                let order = d.pow(n as u32) * e.pow(n as u32 - 1) * (1..=n as u64).product::<u64>();
                if order > max_order {
                    continue;
                }
                let params = ImprimParams::from_mpn(m, p, n).unwrap();
                if params.is_reducible() && !params.is_natural_symmetric() {
                    continue;
                }
                out.push(params);
            }
        }
    }
    out
}

/// Permutation of {0..n} with the given cycle lengths.
pub fn perm_of_cycle_type(parts: &[u32]) -> Vec<usize> {
    let n: u32 = parts.iter().sum();
    let mut p: Vec<usize> = (0..n as usize).collect();
    let mut start = 0usize;
    for &k in parts {
        let k = k as usize;
        for i in 0..k {
            p[start + i] = start + (i + 1) % k;
        }
        start += k;
    }
    p
}

/// Trace of g on the permutation module of row tabloids of composition `c`:
/// the number of maps f: points → rows with fibres of sizes c and f∘g = f.
pub fn tabloid_trace(c: &[i64], g: &[usize]) -> i64 {
    if c.iter().any(|&x| x < 0) {
        return 0;
    }
    let n = g.len();
    if c.iter().sum::<i64>() != n as i64 {
        return 0;
    }
    let rows = c.len().max(1);
    let mut count = 0;
    let mut f = vec![0usize; n];
    loop {
        let mut sizes = vec![0i64; rows];
        for &r in &f {
            sizes[r] += 1;
        }
        if sizes == c && (0..n).all(|i| f[g[i]] == f[i]) {
            count += 1;
        }
        // Next map in base `rows`.
        let mut i = 0;
        while i < n && f[i] + 1 == rows {
            f[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        f[i] += 1;
    }
    count
}

fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    if k == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            // Inserting the largest value at `pos` adds len − pos inversions.
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// χ^λ(g) by the determinantal formula χ^λ = det[π^{(λ_i − i + j)}] over
/// permutation characters of Young subgroups.
pub fn sn_character(lambda: &[u32], cycle_type: &[u32]) -> i64 {
    let g = perm_of_cycle_type(cycle_type);
    let l = lambda.len();
    permutations(l)
        .into_iter()
        .map(|(sigma, sign)| {
            let comp: Vec<i64> = (0..l)
                .map(|i| i64::from(lambda[i]) - i as i64 + sigma[i] as i64)
                .collect();
            sign * tabloid_trace(&comp, &g)
        })
        .sum()
}

/// X for the closure of σ_1^k on two strands, expanding T^k = a_k + b_k·T
/// with T² = u + v·T, τ(1) = v⁻¹(1 − u) and τ(T) = 1.
pub fn two_strand_homfly(k: i64) -> UvLaurent {
    let u = UvLaurent::uv(1, 0);
    let v = UvLaurent::uv(0, 1);
    let (mut a, mut b) = (UvLaurent::one(), UvLaurent::zero());
    if k >= 0 {
        for _ in 0..k {
            let na = u.times(&b);
            let nb = a.plus(&v.times(&b));
            a = na;
            b = nb;
        }
    } else {
        // T⁻¹ = u⁻¹T − u⁻¹v.
        let ui = UvLaurent::uv(-1, 0);
        for _ in 0..-k {
            // (a + bT)(u⁻¹T − u⁻¹v) = (b − u⁻¹v·a) + u⁻¹a·T
            let na = b.minus(&ui.times(&v).times(&a));
            let nb = ui.times(&a);
            a = na;
            b = nb;
        }
    }
    let tau1 = UvLaurent::uv(0, -1).minus(&UvLaurent::uv(1, -1));
    a.times(&tau1).plus(&b)
}

/// Evaluate X(u, v) at real u, v.
pub fn eval_uv(x: &UvLaurent, u: f64, v: f64) -> f64 {
    x.terms()
        .map(|(b, inner)| {
            let ub: f64 = inner
                .terms()
                .map(|(a, c)| c.to_string().parse::<f64>().unwrap() * u.powi(a as i32))
                .sum();
            ub * v.powi(b as i32)
        })
        .sum()
}

/// Bruhat order as the transitive closure of y → y·t with t a reflection
/// and l(y·t) > l(y). Returns `leq[y][w]`.
pub fn bruhat_by_reflections(g: &FiniteGroup) -> Vec<Vec<bool>> {
    let n = g.order();
    let gens: Vec<usize> = (0..g.generators().len())
        .map(|s| g.generator_index(s))
        .collect();
    let mut refl = BTreeSet::new();
    for x in 0..n {
        for &s in &gens {
            refl.insert(g.conjugate(s, x));
        }
    }
    let mut leq = vec![vec![false; n]; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(g.depth(i)));
    for &y in &order {
        leq[y][y] = true;
        for &t in &refl {
            let z = g.mul(y, t);
            if g.depth(z) > g.depth(y) {
                let row = leq[z].clone();
                for (w, above) in row.into_iter().enumerate() {
                    if above {
                        leq[y][w] = true;
                    }
                }
            }
        }
    }
    leq
}
