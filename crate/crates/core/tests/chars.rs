mod common;

use num_bigint::BigInt;
use reflgroup::chars::{
    char_table, fake_degree_closed, fake_degree_imprim, imprim_character_degrees, irr_count_gdeen,
    shift_orbits,
};
use reflgroup::invariants::{degrees_closed_form, poincare_polynomial};
use reflgroup::{ImprimGroup, ImprimParams, Partition, Poly};

fn small_family() -> Vec<ImprimParams> {
    common::imprim_family(6, 3_000)
}

#[test]
fn irreducibles_match_classes() {
    for p in small_family() {
        let g = ImprimGroup::new(p, 100_000).unwrap();
        let count = irr_count_gdeen(&p);
        assert_eq!(count.total, g.group().classes().len(), "{p}");
        let degrees = imprim_character_degrees(&p).unwrap();
        assert_eq!(degrees.len(), count.total, "{p}");
        let sum: BigInt = degrees.iter().map(|(_, d)| d * d).sum();
        assert_eq!(sum, BigInt::from(g.group().order()), "{p}");
    }
}

#[test]
fn fake_degrees_sum_to_the_coinvariant_series() {
    for p in small_family() {
        let mut total = Poly::<BigInt>::zero();
        for o in shift_orbits(&p) {
            let r = fake_degree_imprim(&p, &o.rep).unwrap();
            let per = imprim_character_degrees(&p)
                .unwrap()
                .into_iter()
                .find(|(a, _)| *a == o.rep)
                .unwrap()
                .1;
            assert_eq!(r.eval(&BigInt::from(1)), per, "{p}: R_{}(1)", o.rep);
            let weight = per * BigInt::from(o.stabilizer);
            total = total.add(&r.mul(&Poly::new(vec![weight])));
        }
        let degrees = degrees_closed_form(&p).degrees;
        assert_eq!(total, poincare_polynomial(&degrees), "{p}");
    }
}

#[test]
fn isomorphic_groups_share_character_degrees() {
    let sorted = |m, p, n| {
        let params = ImprimParams::from_mpn(m, p, n).unwrap();
        let mut d: Vec<BigInt> = imprim_character_degrees(&params)
            .unwrap()
            .into_iter()
            .map(|(_, d)| d)
            .collect();
        d.sort();
        d
    };
    assert_eq!(sorted(2, 1, 2), sorted(4, 4, 2));
    assert_eq!(sorted(2, 2, 3), sorted(1, 1, 4));
}

#[test]
fn symmetric_tables_match_the_determinantal_formula() {
    for n in 1..=6u32 {
        let t = char_table(1, n).unwrap();
        for lambda in Partition::all(n) {
            let alpha = reflgroup::DPartition::new(vec![lambda.clone()]).unwrap();
            let i = t.index_of(&alpha).unwrap();
            let r = fake_degree_closed(&alpha).unwrap();
            let deg = common::sn_character(lambda.parts(), &vec![1; n as usize]);
            assert_eq!(r.eval(&BigInt::from(1)), BigInt::from(deg), "{lambda:?}");
            assert_eq!(t.degrees()[i], BigInt::from(deg), "{lambda:?}");
        }
    }
}
