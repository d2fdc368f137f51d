use rand::Rng;

use super::{homfly_with, BraidWord, LinkInvariant, OcneanuTrace};
use crate::error::{invariant, Result};

/// Stabilization stops at this many strands to keep traces cheap.
const MAX_STRANDS: usize = 6;

#[derive(Clone, Debug)]
pub struct MarkovReport {
    pub invariant: LinkInvariant,
    /// Every word visited, starting with the input.
    pub words: Vec<BraidWord>,
    pub conjugations: usize,
    pub stabilizations: usize,
    pub destabilizations: usize,
}

/// A random braid word with 1..=max_strands strands and at most `max_len` letters.
pub fn random_braid(rng: &mut impl Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let n = rng.random_range(1..=max_strands.max(1));
    let len = if n == 1 {
        0
    } else {
        rng.random_range(0..=max_len)
    };
    let letters = (0..len)
        .map(|_| {
            let i = rng.random_range(1..n as i32);
            if rng.random_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("letters drawn in range")
}

fn free_reduce(letters: Vec<i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Apply `moves` random Markov moves to `b`, recomputing X_L after each one.
/// Type (I) conjugates by a random generator or rotates the word; type (II)
/// appends s_n^{±1} on a new strand or removes such a final letter.
/// Any change of X_L is returned as an invariant error.
pub fn markov_fuzz(b: &BraidWord, moves: usize, rng: &mut impl Rng) -> Result<MarkovReport> {
    let mut trace = OcneanuTrace::new();
    let start = homfly_with(b, &mut trace);
    let mut report = MarkovReport {
        invariant: start.clone(),
        words: vec![b.clone()],
        conjugations: 0,
        stabilizations: 0,
        destabilizations: 0,
    };
    let mut cur = b.clone();
    for _ in 0..moves {
        let n = cur.n;
        let mut letters = cur.letters.clone();
        let top = (n - 1) as i32;
        let can_destab = n > 1
            && letters.last().map(|l| l.abs()) == Some(top)
            && letters.iter().filter(|l| l.abs() == top).count() == 1;
        let next_n = match rng.random_range(0..4) {
            0 if n > 1 => {
                let x = rng.random_range(1..n as i32) * if rng.random_bool(0.5) { 1 } else { -1 };
                letters.insert(0, -x);
                letters.push(x);
                report.conjugations += 1;
                n
            }
            1 if !letters.is_empty() => {
                letters.rotate_left(1);
                report.conjugations += 1;
                n
            }
            2 if can_destab => {
                letters.pop();
                report.destabilizations += 1;
                n - 1
            }
            _ if n < MAX_STRANDS => {
                letters.push(if rng.random_bool(0.5) {
                    n as i32
                } else {
                    -(n as i32)
                });
                report.stabilizations += 1;
                n + 1
            }
            _ => {
                let k = usize::from(!letters.is_empty());
                letters.rotate_left(k);
                report.conjugations += 1;
                n
            }
        };
        cur = BraidWord::new(next_n, free_reduce(letters))?;
        let x = homfly_with(&cur, &mut trace);
        if x.polynomial != start.polynomial {
            return Err(invariant(format!(
                "X_L changed from {} to {} at {cur}",
                start.render(),
                x.render()
            )));
        }
        report.words.push(cur.clone());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn identity_word_stays_trivial() {
        let mut rng = StdRng::seed_from_u64(7);
        let r = markov_fuzz(&"1:".parse().unwrap(), 100, &mut rng).unwrap();
        assert_eq!(r.invariant.render(), "1");
        assert_eq!(r.words.len(), 101);
    }

    #[test]
    fn random_words() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..10 {
            let b = random_braid(&mut rng, 3, 6);
            markov_fuzz(&b, 5, &mut rng).unwrap();
        }
    }
}
