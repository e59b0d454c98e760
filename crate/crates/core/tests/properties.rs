use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use hookres_core::combinatorics::{partitions_of, Composition, Partition};
use hookres_core::genfunc::verify_upsilon;
use hookres_core::series::MultiSeries;
use hookres_core::tableaux::{
    conjugate_tableau, enumerate_st, enumerate_xi, is_row_standard, is_supertableau, Color, ColoredEntry, Tableau,
};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Every filling of `lengths` by entries of value `≤ weight`, filtered by
/// blue count and weight only.
fn all_fillings(lengths: &[usize], blue: usize, weight: u32) -> Vec<Tableau> {
    let cells: usize = lengths.iter().sum();
    let alphabet: Vec<ColoredEntry> =
        (0..=weight).flat_map(|v| [ColoredEntry::red(v), ColoredEntry::blue(v)]).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; cells];
    loop {
        let flat: Vec<ColoredEntry> = idx.iter().map(|&i| alphabet[i]).collect();
        let wt: u32 = flat.iter().map(|e| e.value).sum();
        let bl = flat.iter().filter(|e| e.is_blue()).count();
        if wt == weight && bl == blue {
            let mut rows = Vec::new();
            let mut k = 0;
            for &len in lengths {
                rows.push(flat[k..k + len].to_vec());
                k += len;
            }
            out.push(Tableau::new(rows));
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == cells {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < alphabet.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn as_set(v: Vec<Tableau>) -> BTreeSet<Tableau> {
    let n = v.len();
    let s: BTreeSet<Tableau> = v.into_iter().collect();
    assert_eq!(s.len(), n, "enumeration produced duplicates");
    s
}

#[test]
fn st_enumeration_matches_brute_force() {
    for n in 1..=4 {
        for shape in partitions_of(n) {
            for blue in 0..=2 {
                for weight in 0..=3 {
                    let fast = as_set(enumerate_st(&shape, blue, weight));
                    let slow: BTreeSet<Tableau> = all_fillings(shape.parts(), blue, weight)
                        .into_iter()
                        .filter(|t| is_supertableau(t).unwrap())
                        .collect();
                    assert_eq!(fast, slow, "shape ({shape}) b={blue} a={weight}");
                }
            }
        }
    }
}

#[test]
fn xi_enumeration_matches_brute_force() {
    for lengths in [vec![1], vec![2], vec![3], vec![1, 2], vec![2, 1], vec![0, 2], vec![1, 1, 1], vec![2, 2]] {
        for blue in 0..=2 {
            for weight in 0..=3 {
                let shape = Composition::new(lengths.iter().map(|&x| x as i64).collect());
                let fast = as_set(enumerate_xi(&shape, blue, weight));
                let slow: BTreeSet<Tableau> = all_fillings(&lengths, blue, weight)
                    .into_iter()
                    .filter(|t| is_row_standard(t, Color::Red))
                    .collect();
                assert_eq!(fast, slow, "shape {lengths:?} b={blue} a={weight}");
            }
        }
    }
}

#[test]
fn supertableaux_conjugate_into_xi() {
    for n in 1..=5 {
        for shape in partitions_of(n) {
            for blue in 0..=2 {
                for weight in 0..=4 {
                    let xi: BTreeSet<Tableau> =
                        enumerate_xi(&Composition::from(&shape.conjugate()), blue, weight).into_iter().collect();
                    for t in enumerate_st(&shape, blue, weight) {
                        let c = conjugate_tableau(&t).unwrap();
                        assert!(xi.contains(&c), "{t} conjugates to {c}, not in Xi");
                    }
                }
            }
        }
    }
}

#[test]
fn xi_members_are_red_row_standard_with_the_right_statistics() {
    for t in enumerate_xi(&Composition::new(vec![3, 1, 2]), 2, 4) {
        assert!(is_row_standard(&t, Color::Red));
        assert_eq!((t.bl(), t.wt()), (2, 4));
    }
}

fn entry() -> impl Strategy<Value = ColoredEntry> {
    (0u32..6, any::<bool>()).prop_map(|(v, b)| if b { ColoredEntry::blue(v) } else { ColoredEntry::red(v) })
}

fn partition_shaped_tableau() -> impl Strategy<Value = Tableau> {
    prop::collection::vec(1usize..5, 1..5)
        .prop_flat_map(|mut lens| {
            lens.sort_unstable_by(|a, b| b.cmp(a));
            lens.into_iter().map(|l| prop::collection::vec(entry(), l)).collect::<Vec<_>>()
        })
        .prop_map(Tableau::new)
}

fn sparse_series(bounds: Vec<u32>) -> impl Strategy<Value = MultiSeries> {
    let exps = bounds.iter().map(|&b| 0..=b).collect::<Vec<_>>();
    prop::collection::vec((exps, -4i64..=4), 0..8).prop_map(move |terms| {
        let mut s = MultiSeries::zero(bounds.clone());
        for (e, c) in terms {
            s.add_term(e, BigInt::from(c));
        }
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn conjugation_is_an_involution(t in partition_shaped_tableau()) {
        let c = conjugate_tableau(&t).unwrap();
        prop_assert_eq!(c.wt(), t.wt());
        prop_assert_eq!(c.bl(), t.bl());
        prop_assert_eq!(conjugate_tableau(&c).unwrap(), t);
    }

    #[test]
    fn text_form_round_trips(t in partition_shaped_tableau()) {
        prop_assert_eq!(t.to_string().parse::<Tableau>().unwrap(), t);
    }

    #[test]
    fn series_multiplication_is_commutative(
        x in sparse_series(vec![3, 2, 3]),
        y in sparse_series(vec![3, 2, 3]),
    ) {
        prop_assert_eq!(&x * &y, &y * &x);
    }

    #[test]
    fn series_multiplication_is_associative(
        x in sparse_series(vec![3, 2, 3]),
        y in sparse_series(vec![3, 2, 3]),
        z in sparse_series(vec![3, 2, 3]),
    ) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn series_multiplication_distributes(
        x in sparse_series(vec![2, 3]),
        y in sparse_series(vec![2, 3]),
        z in sparse_series(vec![2, 3]),
    ) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn upsilon_identity_on_random_series(
        f in sparse_series(vec![2, 3, 3, 3]),
        mu in prop::sample::select(vec![vec![], vec![1], vec![2], vec![1, 1], vec![2, 1], vec![3, 1], vec![1, 1, 1], vec![2, 1, 1]]),
    ) {
        prop_assert!(verify_upsilon(3, &f, &p(&mu)).unwrap());
    }
}
