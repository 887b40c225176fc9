mod common;

use ckh2_core::closed_form::{beta_conditions, cochain_template};
use ckh2_core::oracle::{is_coboundary, is_cocycle};
use ckh2_core::rational::int;
use ckh2_core::{
    classify_nontrivial, constraint_check, delta_sequence, derive_full_cochain, enumerate_basic, h2_dimension_formula,
    is_formula_consistent, reverse, solve_constraints, structure_table, BasicCoefficient, CoefficientKind,
    ExtensionAssignment, OmegaSequence,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The rule text, written out independently of the crate's own path:
/// a condition naming w_0 or w_{N+1} is simply not there.
fn rule_count(seq: &OmegaSequence) -> usize {
    let n = seq.n();
    let z = |i: usize| (1..=n).contains(&i) && seq.is_zero_at(i);
    let exists = |i: usize| (1..=n).contains(&i);
    let mut count = usize::from(z(2)) + usize::from(z(n - 1));
    count += 2 * (1..=n - 2).filter(|&p| z(p) && z(p + 2)).count();
    for p in 1..=n {
        for q in p + 2..=n {
            let mut conds: Vec<bool> = Vec::new();
            for i in [p - 1, q + 1] {
                if exists(i) {
                    conds.push(z(i));
                }
            }
            if q == p + 2 {
                conds.push(z(p) || z(p + 1));
                conds.push(z(p + 1) || z(p + 2));
            } else {
                conds.push(z(p + 1));
                conds.push(z(q - 1));
            }
            count += usize::from(conds.iter().all(|&c| c));
        }
    }
    count
}

#[test]
fn formula_matches_rules_through_n6() {
    for n in 2..=6 {
        for seq in common::standardized(n) {
            let formula = h2_dimension_formula(&seq);
            assert_eq!(classify_nontrivial(&seq).len(), formula, "{seq}");
            assert_eq!(rule_count(&seq), formula, "{seq}");
            assert_eq!(h2_dimension_formula(&reverse(&seq)), formula, "{seq}");
        }
    }
}

#[test]
fn formula_matches_oracle_through_n4() {
    for n in 2..=4 {
        for seq in common::standardized(n) {
            let c = is_formula_consistent(&seq);
            assert!(c.agree, "{seq}: formula {} oracle {}", c.formula, c.oracle);
        }
    }
}

#[test]
fn template_covers_each_slot_once() {
    for n in 2..=6 {
        let basic = enumerate_basic(n).unwrap();
        for c in &basic {
            let (l, r) = c.slot();
            let hits = cochain_template(n).iter().filter(|(p, q, t)| (*p, *q) == (l, r) && t.coefficient == *c).count();
            assert_eq!(hits, 1, "{c}");
        }
    }
}

#[test]
fn beta_conditions_use_existing_omegas() {
    for n in 3..=7 {
        for c in enumerate_basic(n).unwrap() {
            if let BasicCoefficient::Beta { p, q } = c {
                assert!(beta_conditions(n, p, q).iter().flatten().all(|&i| (1..=n).contains(&i)));
            }
        }
    }
}

#[test]
fn padding_reads_one() {
    let d = delta_sequence(&"1,0,2".parse().unwrap());
    assert_eq!([d.query(0), d.query(1), d.query(2), d.query(3), d.query(4), d.query(9)], [1, 0, 1, 0, 1, 1]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn random_rational_sequences_agree(seq in common::sequence(2..=5)) {
        let c = is_formula_consistent(&seq);
        prop_assert!(c.agree, "formula {} oracle {}", c.formula, c.oracle);
    }

    #[test]
    fn derived_cochains_are_cocycles(seq in common::sequence(3..=5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let assign = solve_constraints(&seq, |_| common::random_nonzero(&mut rng));
        prop_assert!(constraint_check(&seq, &assign).is_empty());
        let table = structure_table(&seq);
        prop_assert!(is_cocycle(&table, &derive_full_cochain(&seq, &assign).unwrap()));
    }

    #[test]
    fn type_one_is_exact(seq in common::sequence(2..=5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut assign = ExtensionAssignment::new();
        for c in enumerate_basic(seq.n()).unwrap() {
            if c.kind() == CoefficientKind::TypeI {
                assign.set(c, common::random_nonzero(&mut rng));
            }
        }
        let table = structure_table(&seq);
        prop_assert!(is_coboundary(&table, &derive_full_cochain(&seq, &assign).unwrap()));
    }

    #[test]
    fn named_classes_are_not_exact(seq in common::sequence(2..=4)) {
        let table = structure_table(&seq);
        for c in classify_nontrivial(&seq) {
            // a type II coefficient is nontrivial only when both of its divisors vanish,
            // so its unit assignment is valid on its own
            let cochain = derive_full_cochain(&seq, &ExtensionAssignment::unit(c)).unwrap();
            prop_assert!(is_cocycle(&table, &cochain));
            prop_assert!(!is_coboundary(&table, &cochain), "{}", c);
        }
    }
}

#[test]
fn unit_type_one_scaled() {
    let seq: OmegaSequence = "2,0,-1/3,1".parse().unwrap();
    let table = structure_table(&seq);
    for c in enumerate_basic(4).unwrap().into_iter().filter(|c| c.kind() == CoefficientKind::TypeI) {
        let a = ExtensionAssignment::new().with(c, int(-5));
        assert!(is_coboundary(&table, &derive_full_cochain(&seq, &a).unwrap()), "{c}");
    }
}
