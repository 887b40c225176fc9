//! One- and two-cochains with trivial real coefficients.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::ck::StructureTable;
use crate::rational::Rational;

/// Antisymmetric bilinear form on the generators, stored on canonical keys
/// `(i, j)`, `i < j`. `value(j, i) = -value(i, j)` and `value(i, i) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCochain {
    n_gens: usize,
    values: BTreeMap<(usize, usize), Rational>,
}

impl TwoCochain {
    pub fn zero(n_gens: usize) -> Self {
        Self { n_gens, values: BTreeMap::new() }
    }

    pub fn n_gens(&self) -> usize {
        self.n_gens
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Rational::zero(),
            Less => self.values.get(&(i, j)).cloned().unwrap_or_else(Rational::zero),
            Greater => self.values.get(&(j, i)).map(|v| -v).unwrap_or_else(Rational::zero),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i < self.n_gens && j < self.n_gens, "generator index out of range");
        assert!(i != j || v.is_zero(), "diagonal of a two-cochain is zero");
        if i == j {
            return;
        }
        let (key, v) = if i < j { ((i, j), v) } else { ((j, i), -v) };
        if v.is_zero() {
            self.values.remove(&key);
        } else {
            self.values.insert(key, v);
        }
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Rational) {
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Nonzero canonical entries in key order.
    pub fn support(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.values.iter()
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.n_gens);
        if !c.is_zero() {
            for (k, v) in &self.values {
                out.values.insert(*k, v * c);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n_gens, other.n_gens);
        let mut out = self.clone();
        for ((i, j), v) in &other.values {
            out.add_at(*i, *j, v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(&-Rational::one()))
    }

    /// Number of canonical keys, `n (n - 1) / 2`.
    pub fn key_count(n_gens: usize) -> usize {
        n_gens * n_gens.saturating_sub(1) / 2
    }

    /// Position of canonical key `(i, j)` in lexicographic key order.
    pub fn key_index(n_gens: usize, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < n_gens);
        i * n_gens - i * (i + 1) / 2 + (j - i - 1)
    }

    pub fn keys(n_gens: usize) -> impl Iterator<Item = (usize, usize)> {
        (0..n_gens).flat_map(move |i| ((i + 1)..n_gens).map(move |j| (i, j)))
    }

    /// Coordinates in canonical key order.
    pub fn to_vector(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); Self::key_count(self.n_gens)];
        for ((i, j), x) in &self.values {
            v[Self::key_index(self.n_gens, *i, *j)] = x.clone();
        }
        v
    }

    pub fn sparse_coordinates(&self) -> impl Iterator<Item = (usize, Rational)> + '_ {
        self.values.iter().map(|((i, j), v)| (Self::key_index(self.n_gens, *i, *j), v.clone()))
    }

    pub fn from_vector(n_gens: usize, v: &[Rational]) -> Self {
        assert_eq!(v.len(), Self::key_count(n_gens));
        let mut out = Self::zero(n_gens);
        for ((i, j), x) in Self::keys(n_gens).zip(v) {
            if !x.is_zero() {
                out.values.insert((i, j), x.clone());
            }
        }
        out
    }

    /// `alpha([x, y], z) + alpha([y, z], x) + alpha([z, x], y)` for generators `x, y, z`.
    pub fn cocycle_residual(&self, table: &StructureTable, x: usize, y: usize, z: usize) -> Rational {
        let mut acc = Rational::zero();
        for (p, q, r) in [(x, y, z), (y, z, x), (z, x, y)] {
            for (g, c) in table.bracket(p, q).iter() {
                acc += c * self.get(*g, r);
            }
        }
        acc
    }

    /// Generator triples on which the cocycle condition fails.
    pub fn cocycle_violations(&self, table: &StructureTable) -> Vec<(usize, usize, usize)> {
        assert_eq!(self.n_gens, table.dim());
        let n = self.n_gens;
        let mut bad = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    if !self.cocycle_residual(table, i, j, k).is_zero() {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }
}

/// Linear form on the generators; unset entries read as zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OneCochain {
    values: BTreeMap<usize, Rational>,
}

impl OneCochain {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_vector(v: &[Rational]) -> Self {
        let mut out = Self::zero();
        for (i, x) in v.iter().enumerate() {
            out.set(i, x.clone());
        }
        out
    }

    pub fn get(&self, i: usize) -> Rational {
        self.values.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, i: usize, v: Rational) {
        if v.is_zero() {
            self.values.remove(&i);
        } else {
            self.values.insert(i, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&usize, &Rational)> {
        self.values.iter()
    }

    /// `(delta mu)(x, y) = mu([x, y])`.
    pub fn coboundary(&self, table: &StructureTable) -> TwoCochain {
        let mut out = TwoCochain::zero(table.dim());
        for (&(i, j), comb) in table.entries() {
            let v = comb.iter().fold(Rational::zero(), |acc, (g, c)| acc + c * self.get(*g));
            out.set(i, j, v);
        }
        out
    }
}
