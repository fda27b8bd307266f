use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;
use snlie::grpalg::{omega, GroupAlgebraElement, Permutation};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    (0..(1..=n as u64).product::<u64>()).prop_map(move |r| Permutation::lehmer_unrank(r, n).unwrap())
}

fn element(n: usize, modulus: u32) -> impl Strategy<Value = GroupAlgebraElement> {
    prop::collection::vec((perm(n), -3i64..=3), 0..6).prop_map(move |terms| {
        GroupAlgebraElement::from_terms(n, modulus, terms.into_iter().map(|(g, c)| (g, BigInt::from(c))))
    })
}

#[test]
fn omega_support_and_square() {
    for n in 2..=8usize {
        let w = omega(n, 0).unwrap();
        assert_eq!(w.support_len(), 1 << (n - 1));
        assert!(w.terms().all(|(_, c)| c == &BigInt::one() || c == &-BigInt::one()));
        assert_eq!(w.coeff(&Permutation::identity(n)), BigInt::one());
        let square = w.multiply(&w).unwrap();
        assert_eq!(square, w.scale(&BigInt::from(n)));
        for p in [2, 3, 5, 7] {
            let wp = omega(n, p).unwrap();
            assert_eq!(wp, w.reduce(p));
            assert_eq!(wp.multiply(&wp).unwrap(), wp.scale(&BigInt::from(n)));
        }
    }
}

proptest! {
    #[test]
    fn lehmer_round_trip(g in perm(7)) {
        prop_assert_eq!(Permutation::lehmer_unrank(g.lehmer_rank(), 7).unwrap(), g);
    }

    #[test]
    fn reduced_word_multiplies_back(g in perm(6)) {
        let mut acc = Permutation::identity(6);
        for i in g.reduced_word() {
            acc = acc.compose(&Permutation::coxeter(i, 6)).unwrap();
        }
        prop_assert_eq!(acc, g);
    }

    #[test]
    fn multiplication_is_associative(a in element(4, 0), b in element(4, 0), c in element(4, 0)) {
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    /// Products commute with the embedding 𝔖_n ⊂ 𝔖_m.
    #[test]
    fn degree_stability(a in element(4, 3), b in element(4, 3)) {
        let prod = a.multiply(&b).unwrap().extend(6);
        prop_assert_eq!(prod, a.extend(6).multiply(&b.extend(6)).unwrap());
    }

    #[test]
    fn sign_is_a_homomorphism(g in perm(6), h in perm(6)) {
        prop_assert_eq!(g.compose(&h).unwrap().sign(), g.sign() * h.sign());
    }
}
