use std::collections::BTreeSet;

use super::system::{CoxeterElement, CoxeterSystem};
use crate::error::{invalid, Result};

/// F(s_1⋯s_k) = f(s_1) ⋆ ⋯ ⋆ f(s_k) for a reduced word.
///
/// When `check` is given, the word is first verified to be reduced in that
/// system.
pub fn matsumoto_fold<M>(
    word: &[usize],
    unit: M,
    image: impl Fn(usize) -> M,
    op: impl Fn(&M, &M) -> M,
    check: Option<&CoxeterSystem>,
) -> Result<M> {
    if let Some(sys) = check {
        let w = sys.element_from_word(word)?;
        if sys.length(&w) != word.len() {
            return Err(invalid(format!("word {word:?} is not reduced")));
        }
    }
    Ok(word.iter().fold(unit, |acc, &s| op(&acc, &image(s))))
}

/// Set of generators occurring in a reduced expression of `w`.
pub fn support(sys: &CoxeterSystem, w: &CoxeterElement) -> BTreeSet<usize> {
    matsumoto_fold(
        &sys.reduced_word(w),
        BTreeSet::new(),
        |s| BTreeSet::from([s]),
        |a, b| a.union(b).copied().collect(),
        None,
    )
    .expect("unchecked fold cannot fail")
}

/// All elements obtained as subexpressions of `word`, via the product-of-sets monoid.
pub fn subexpressions(sys: &CoxeterSystem, word: &[usize]) -> BTreeSet<CoxeterElement> {
    let id = sys.identity();
    matsumoto_fold(
        word,
        BTreeSet::from([id.clone()]),
        |s| BTreeSet::from([id.clone(), sys.generator(s)]),
        |a, b| {
            a.iter()
                .flat_map(|x| b.iter().map(move |y| (x, y)))
                .map(|(x, y)| sys.mul(x, y))
                .collect()
        },
        None,
    )
    .expect("unchecked fold cannot fail")
}

/// y ≤ w in the Bruhat order: y is a subexpression of a reduced word of w.
pub fn bruhat_leq(sys: &CoxeterSystem, y: &CoxeterElement, w: &CoxeterElement) -> bool {
    if sys.length(y) > sys.length(w) {
        return false;
    }
    subexpressions(sys, &sys.reduced_word(w)).contains(y)
}

/// Every reduced word of `w`, in lexicographic order.
pub fn all_reduced_words(sys: &CoxeterSystem, w: &CoxeterElement) -> Vec<Vec<usize>> {
    if sys.length(w) == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for s in 0..sys.rank() {
        if sys.is_left_descent(w, s) {
            let rest = sys.mul(&sys.generator(s), w);
            for mut tail in all_reduced_words(sys, &rest) {
                tail.insert(0, s);
                out.push(tail);
            }
        }
    }
    out
}
