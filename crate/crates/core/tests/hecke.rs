mod common;

use proptest::prelude::*;
use reflgroup::exact::Ring;
use reflgroup::hecke::{
    braid_to_hecke, homfly, ocneanu_trace, reduced_word, specialize, BraidWord, HeckeElement,
    Specialization, Target,
};
use reflgroup::UvLaurent;

fn perm(n: usize) -> impl Strategy<Value = Vec<u8>> {
    Just((0..n as u8).collect::<Vec<u8>>()).prop_shuffle()
}

fn inversions(w: &[u8]) -> usize {
    (0..w.len())
        .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| w[i] > w[j])
        .count()
}

fn word_product(n: usize, word: &[usize]) -> HeckeElement {
    word.iter().fold(HeckeElement::one(n), |h, &i| {
        h.mul_by_generator(i, false).unwrap()
    })
}

fn braid() -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(|n| {
        let letter = (1..n as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        prop::collection::vec(letter, 0..7).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduced_words_give_basis_elements(w in (1usize..=5).prop_flat_map(perm)) {
        let word = reduced_word(&w);
        prop_assert_eq!(word.len(), inversions(&w));
        prop_assert_eq!(word_product(w.len(), &word), HeckeElement::basis(w));
    }

    #[test]
    fn trace_is_central((a, b) in (1usize..=4).prop_flat_map(|n| (perm(n), perm(n)))) {
        let x = HeckeElement::basis(a);
        let y = HeckeElement::basis(b);
        prop_assert_eq!(
            ocneanu_trace(&x.mul(&y).unwrap()),
            ocneanu_trace(&y.mul(&x).unwrap())
        );
    }

    #[test]
    fn adding_a_strand_scales_the_trace(w in (1usize..=4).prop_flat_map(perm)) {
        let h = HeckeElement::basis(w);
        let scale = UvLaurent::uv(0, -1).minus(&UvLaurent::uv(1, -1));
        prop_assert_eq!(ocneanu_trace(&h.include()), scale.times(&ocneanu_trace(&h)));
    }

    #[test]
    fn inverse_generators_cancel(b in braid()) {
        let n = b.strands();
        let mut letters = b.letters().to_vec();
        letters.extend(b.letters().iter().rev().map(|l| -l));
        let h = braid_to_hecke(&BraidWord::new(n, letters).unwrap());
        prop_assert_eq!(h, HeckeElement::one(n));
    }

    #[test]
    fn knots_have_integral_jones_powers(b in braid()) {
        let x = homfly(&b);
        let jones = specialize(&x, Target::Jones).unwrap();
        if x.components % 2 == 1 {
            match jones {
                Specialization::OneVar { var, .. } => prop_assert_eq!(var, "t"),
                other => prop_assert!(false, "unexpected {}", other),
            }
        }
    }
}

#[test]
fn two_strand_torus_links() {
    for k in -4i64..=5 {
        let b = BraidWord::new(
            2,
            vec![if k < 0 { -1 } else { 1 }; k.unsigned_abs() as usize],
        )
        .unwrap();
        assert_eq!(
            homfly(&b).polynomial,
            common::two_strand_homfly(k),
            "k = {k}"
        );
    }
}

#[test]
fn unknot_and_unlinks() {
    assert_eq!(homfly(&"1:".parse().unwrap()).polynomial, UvLaurent::one());
    let unlink = homfly(&BraidWord::new(3, vec![]).unwrap());
    assert_eq!(unlink.components, 3);
    let delta = UvLaurent::uv(0, -1).minus(&UvLaurent::uv(1, -1));
    assert_eq!(unlink.polynomial, delta.times(&delta));
    // Stabilized unknot on three strands.
    assert_eq!(
        homfly(&"3: 1 -2".parse().unwrap()).polynomial,
        UvLaurent::one()
    );
}

#[test]
fn figure_eight_is_amphichiral_under_jones() {
    let b: BraidWord = "3: 1 -2 1 -2".parse().unwrap();
    let Specialization::OneVar { poly, .. } = specialize(&homfly(&b), Target::Jones).unwrap()
    else {
        panic!("figure eight Jones is in t");
    };
    let text = poly.render("t");
    assert_eq!(text, "t^2-t+1-t^-1+t^-2");
}
