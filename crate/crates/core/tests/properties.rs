use proptest::prelude::*;

use mahonian_core::bijections::{self, Bijection};
use mahonian_core::partitions::{
    canonical_word, mahonian_word, partition_from_mahonian, standard_arcs, SetPartition,
};
use mahonian_core::qpoly::{q_binom, q_fact, q_int, QPoly};
use mahonian_core::stats::{self, lehmer_code};
use mahonian_core::words::{self, is_consecutive, tail_permutation};
use mahonian_core::{Letter, Multiset, Word};

/// A shuffled word with full support, up to 12 letters long.
fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(1usize..=3, 1..=5)
        .prop_filter("at most 12 letters", |m| m.iter().sum::<usize>() <= 12)
        .prop_flat_map(|mults| {
            let sorted = Multiset::new(mults).sorted_word().into_vec();
            Just(sorted).prop_shuffle()
        })
        .prop_map(|v| Word::new(v).unwrap())
}

fn permutation() -> impl Strategy<Value = Vec<Letter>> {
    (1u32..=10).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
}

/// Random restricted growth string turned into a partition.
fn partition() -> impl Strategy<Value = SetPartition> {
    prop::collection::vec(0usize..12, 0..=12).prop_map(|choices| {
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for (i, c) in choices.into_iter().enumerate() {
            let j = c % (blocks.len() + 1);
            if j == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[j].push(i as u32 + 1);
        }
        SetPartition::new(blocks).unwrap()
    })
}

fn sorted(w: &[Letter]) -> Vec<Letter> {
    let mut v = w.to_vec();
    v.sort_unstable();
    v
}

proptest! {
    #[test]
    fn every_map_keeps_content(w in word()) {
        let n = w.len();
        for b in [
            Bijection::Foata,
            Bijection::FoataD(1 + n / 2),
            Bijection::HanZ,
            Bijection::PsiM,
            Bijection::Rawlings(1 + n / 3),
            Bijection::HanDen,
            Bijection::CszPhi,
        ] {
            prop_assert_eq!(sorted(&b.apply(&w)), sorted(&w), "{}", b);
        }
    }

    #[test]
    fn consecutive_tails_survive(w in word()) {
        let tail = tail_permutation(&w).unwrap();
        prop_assume!(is_consecutive(&tail));
        for b in Bijection::NAMES.iter().filter_map(|n| Bijection::from_name(n, Some(2)).ok()) {
            if b.preserves_consecutive_tails() {
                prop_assert_eq!(tail_permutation(&b.apply(&w)).unwrap(), tail.clone(), "{}", b);
            }
        }
    }

    #[test]
    fn transports_on_long_words(w in word()) {
        prop_assert_eq!(stats::inv(&bijections::foata(&w)), stats::maj(&w));
        prop_assert_eq!(stats::z_index(&bijections::han_z(&w)), stats::maj(&w));
        let d = stats::descents(&bijections::psi_m(&w));
        prop_assert_eq!((d.des, d.maj), (stats::mstc(&w), stats::inv(&w)));
        let (img, _) = bijections::han_den(&w);
        let (d, e) = (stats::descents(&img), stats::exc_den(&w));
        prop_assert_eq!((d.des, d.maj), (e.exc, e.den));
        for k in [1, 2, 3] {
            let f = bijections::foata_d(&w, k).unwrap();
            prop_assert_eq!(stats::inv(&f), stats::maj_d(&w, k).unwrap());
            let r = bijections::rawlings(&w, k).unwrap();
            prop_assert_eq!(stats::r_maj(&r, k).unwrap(), stats::inv(&w));
        }
    }

    #[test]
    fn mak_mad_against_csz(w in word()) {
        let m = stats::mak_mad(&w);
        let img = bijections::csz_phi(&w);
        let e = stats::exc_den(&img);
        prop_assert_eq!((m.des, m.mak, m.mad), (e.exc, e.den, stats::inv(&img)));
    }

    #[test]
    fn standardization_round_trip(w in word()) {
        let p = words::std(&w);
        prop_assert_eq!(words::istd(&w.content(), &p).unwrap(), w.clone());
        prop_assert_eq!(stats::inv(&p), stats::inv(&w));
        prop_assert_eq!(stats::descent_set(&p), stats::descent_set(&w));
    }

    #[test]
    fn degenerate_parameters(w in word()) {
        prop_assert_eq!(stats::maj_d(&w, 1).unwrap(), stats::maj(&w));
        prop_assert_eq!(stats::r_maj(&w, 1).unwrap(), stats::maj(&w));
        let n = w.len().max(2);
        prop_assert_eq!(stats::maj_d(&w, n).unwrap(), stats::inv(&w));
        prop_assert_eq!(stats::r_maj(&w, n).unwrap(), stats::inv(&w));
    }

    #[test]
    fn lehmer_code_sums_to_inv(p in permutation()) {
        let code = lehmer_code(&p).unwrap();
        prop_assert_eq!(code.sum(), stats::inv(&p));
        for (i, &c) in code.entries().iter().enumerate() {
            prop_assert!((c as usize) <= i);
        }
    }

    #[test]
    fn partitions_round_trip(p in partition()) {
        let w = mahonian_word(&p);
        prop_assert!(words::has_increasing_tail(&w) || p.n() == 0);
        prop_assert_eq!(partition_from_mahonian(&w).unwrap(), p.clone());
        let back: SetPartition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p.clone());
        prop_assert_eq!(standard_arcs(&p).arcs.len(), p.n() - p.num_blocks());
        let rgs = canonical_word(&p);
        let mut top = 0;
        for &x in rgs.iter() {
            prop_assert!(x <= top + 1);
            top = top.max(x);
        }
    }

    #[test]
    fn q_polynomials_specialize(n in 0usize..12, i in 0usize..12) {
        prop_assume!(i <= n);
        let b = q_binom(n, i).unwrap();
        prop_assert_eq!(&(&b * &(&q_fact(i) * &q_fact(n - i))), &q_fact(n));
        let choose = (0..i).fold(1i64, |acc, k| acc * (n - k) as i64 / (k as i64 + 1));
        prop_assert_eq!(b.eval_at_one(), choose);
        prop_assert_eq!(q_int(n).eval_at_one(), n as i64);
    }

    #[test]
    fn qpoly_ring_laws(a in prop::collection::vec(-5i64..5, 0..6),
                       b in prop::collection::vec(-5i64..5, 0..6),
                       c in prop::collection::vec(-5i64..5, 0..6)) {
        let (a, b, c) = (QPoly::new(a), QPoly::new(b), QPoly::new(c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
    }
}
