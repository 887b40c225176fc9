#![allow(dead_code)]

use ckh2_core::rational::frac;
use ckh2_core::{OmegaSequence, Rational};
use proptest::prelude::*;
use rand::Rng;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-6i64..=-1, 1i64..=6], 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

/// Rationals with zeros at roughly the given rate, so contractions show up often.
pub fn sparse_rational() -> impl Strategy<Value = Rational> {
    prop_oneof![1 => Just(frac(0, 1)), 1 => nonzero_rational()]
}

pub fn sequence(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = OmegaSequence> {
    n.prop_flat_map(|n| proptest::collection::vec(sparse_rational(), n)).prop_map(|v| OmegaSequence::new(v).unwrap())
}

pub fn nonzero_sequence(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = OmegaSequence> {
    n.prop_flat_map(|n| proptest::collection::vec(nonzero_rational(), n)).prop_map(|v| OmegaSequence::new(v).unwrap())
}

/// Every sequence over {0, 1, -1} of length `n`.
pub fn standardized(n: usize) -> Vec<OmegaSequence> {
    let mut out = Vec::new();
    for code in 0..3usize.pow(n as u32) {
        let mut digits = vec![0i64; n];
        let mut c = code;
        for d in digits.iter_mut().rev() {
            *d = [0, 1, -1][c % 3];
            c /= 3;
        }
        out.push(OmegaSequence::from_ints(&digits).unwrap());
    }
    out
}

pub fn random_nonzero(rng: &mut impl Rng) -> Rational {
    let p = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
    frac(p, rng.gen_range(1..=5))
}
