mod common;

use ckh2_core::ck::represent;
use ckh2_core::oracle::h2_dimension;
use ckh2_core::{
    bracket, check_jacobi, reverse, semidirect_split, structure_table, vector_representation, GeneratorPair,
    OmegaSequence,
};
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn brackets_are_antisymmetric(seq in common::sequence(2..=5)) {
        let pairs = GeneratorPair::all(seq.n());
        for &p in &pairs {
            for &q in &pairs {
                let pq = bracket(&seq, p, q).unwrap();
                let qp = bracket(&seq, q, p).unwrap();
                prop_assert_eq!(pq, qp.negated());
            }
        }
    }

    #[test]
    fn tables_satisfy_jacobi(seq in common::sequence(2..=6)) {
        prop_assert!(check_jacobi(&structure_table(&seq)).is_empty());
    }

    #[test]
    fn matrices_represent_the_bracket(seq in common::sequence(2..=4)) {
        let pairs = GeneratorPair::all(seq.n());
        for &p in &pairs {
            for &q in &pairs {
                let (mp, mq) = (vector_representation(&seq, p).unwrap(), vector_representation(&seq, q).unwrap());
                let commutator = mp.mul(&mq).sub(&mq.mul(&mp));
                prop_assert_eq!(commutator, represent(&seq, &bracket(&seq, p, q).unwrap()));
            }
        }
    }

    #[test]
    fn omega_products_compose(seq in common::sequence(2..=6)) {
        let n = seq.n();
        for a in 0..=n {
            for b in a..=n {
                for c in b..=n {
                    let whole = seq.omega_product(a, c).unwrap();
                    prop_assert_eq!(whole, seq.omega_product(a, b).unwrap() * seq.omega_product(b, c).unwrap());
                }
            }
        }
    }

    #[test]
    fn reversal_preserves_h2(seq in common::sequence(2..=4)) {
        let back = reverse(&seq);
        prop_assert_eq!(reverse(&back), seq.clone());
        prop_assert_eq!(h2_dimension(&structure_table(&seq)).unwrap(), h2_dimension(&structure_table(&back)).unwrap());
    }

    #[test]
    fn splits_partition_generators(seq in common::sequence(2..=6)) {
        let n = seq.n();
        let table = structure_table(&seq);
        for a in 1..=n {
            let split = semidirect_split(&seq, a);
            if !seq.is_zero_at(a) {
                prop_assert!(split.is_err());
                continue;
            }
            let s = split.unwrap();
            prop_assert_eq!(s.abelian_t.len(), a * (n + 1 - a));
            let mut all: Vec<GeneratorPair> = s.abelian_t.iter().chain(&s.left_sub).chain(&s.right_sub).copied().collect();
            all.sort();
            prop_assert_eq!(all, GeneratorPair::all(n));
            for &x in &s.abelian_t {
                for &y in &s.abelian_t {
                    prop_assert!(table.bracket(x.index(n), y.index(n)).is_zero());
                }
            }
            for &x in &s.left_sub {
                for &y in &s.right_sub {
                    prop_assert!(table.bracket(x.index(n), y.index(n)).is_zero());
                }
            }
        }
    }
}

#[test]
fn standardization_keeps_zero_pattern() {
    let seq: OmegaSequence = "0,-3/2,7,0".parse().unwrap();
    let std = seq.standardized();
    assert_eq!(std.to_string(), "0,-1,1,0");
    assert!(std.is_standardized());
    assert!(!seq.is_standardized());
    assert!(seq.omegas().iter().zip(std.omegas()).all(|(a, b)| a.is_zero() == b.is_zero()));
}
