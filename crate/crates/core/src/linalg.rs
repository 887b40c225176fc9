//! Exact rank, kernel and linear solves over the rationals.
//!
//! Rows are cleared of denominators on entry and eliminated fraction-free:
//! reducing row `r` by pivot row `p` at column `c` forms
//! `(p_c / g) r - (r_c / g) p` with `g = gcd(p_c, r_c)`, then divides the
//! result by the gcd of its entries. Everything stays in `BigInt` until the
//! final back-substitution, which is the only place a division happens.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{common_denominator, Rational};

type IntRow = Vec<(usize, BigInt)>;

/// Sparse rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BTreeMap<usize, Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankAndKernel {
    pub rank: usize,
    /// One vector per free column, with a 1 in that column and 0 in the other free columns.
    pub kernel_basis: Vec<Vec<Rational>>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BTreeMap::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        assert!(j < self.cols, "column {j} out of range");
        self.entries[i].get(&j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i < self.rows && j < self.cols, "({i}, {j}) out of range");
        if v.is_zero() {
            self.entries[i].remove(&j);
        } else {
            self.entries[i].insert(j, v);
        }
    }

    /// Appends a row given as sparse `(column, value)` pairs.
    pub fn push_row(&mut self, row: impl IntoIterator<Item = (usize, Rational)>) {
        let mut map = BTreeMap::new();
        for (j, v) in row {
            assert!(j < self.cols, "column {j} out of range");
            if !v.is_zero() {
                map.insert(j, v);
            }
        }
        self.entries.push(map);
        self.rows += 1;
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries[i].iter().map(|(j, v)| (*j, v))
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.nonzero_count() == 0
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (i, row) in other.entries.iter().enumerate() {
            for (j, v) in row {
                let cur = out.get(i, *j);
                out.set(i, *j, cur + v);
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(&-Rational::one()))
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        if c.is_zero() {
            return out;
        }
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row {
                out.set(i, *j, v * c);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for (i, row) in self.entries.iter().enumerate() {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &other.entries[*k] {
                    *acc.entry(*j).or_insert_with(Rational::zero) += a * b;
                }
            }
            for (j, v) in acc {
                out.set(i, j, v);
            }
        }
        out
    }

    /// `self * v`.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        self.entries.iter().map(|row| row.iter().fold(Rational::zero(), |acc, (j, a)| acc + a * &v[*j])).collect()
    }

    fn echelon(&self) -> RowEchelon {
        let mut ech = RowEchelon::new(self.cols);
        for row in &self.entries {
            ech.insert(row.iter().map(|(j, v)| (*j, v.clone())));
        }
        ech
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Columns holding a pivot after elimination; the matching columns of
    /// `self` are linearly independent and span its column space.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.echelon().pivot_columns()
    }

    pub fn rank_and_kernel(&self) -> RankAndKernel {
        let ech = self.echelon();
        RankAndKernel { rank: ech.rank(), kernel_basis: ech.kernel_basis() }
    }

    /// Some `x` with `self * x = rhs` (free variables set to zero), or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(rhs.len(), self.rows, "rhs length must equal row count");
        let mut ech = RowEchelon::new(self.cols + 1);
        for (row, b) in self.entries.iter().zip(rhs) {
            let aug = row.iter().map(|(j, v)| (*j, v.clone())).chain(std::iter::once((self.cols, b.clone())));
            ech.insert(aug);
        }
        if ech.pivots.contains_key(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols + 1];
        x[self.cols] = -Rational::one();
        ech.back_substitute(&mut x);
        x.truncate(self.cols);
        Some(x)
    }
}

/// Incremental fraction-free row echelon form over the integers.
#[derive(Debug, Clone, Default)]
pub struct RowEchelon {
    cols: usize,
    rows: Vec<IntRow>,
    /// pivot column -> index into `rows`
    pivots: BTreeMap<usize, usize>,
}

impl RowEchelon {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new(), pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Adds a rational row; returns `true` if it was independent of the rows so far.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, Rational)>) -> bool {
        let residual = self.reduce(clear_denominators(row));
        match residual.first() {
            None => false,
            Some((lead, _)) => {
                self.pivots.insert(*lead, self.rows.len());
                self.rows.push(residual);
                true
            }
        }
    }

    /// Whether the row lies in the span of the inserted rows.
    pub fn contains(&self, row: impl IntoIterator<Item = (usize, Rational)>) -> bool {
        self.reduce(clear_denominators(row)).is_empty()
    }

    fn reduce(&self, mut row: IntRow) -> IntRow {
        // Only leading entries need eliminating: after each step the leading
        // column strictly increases, so the loop terminates.
        while let Some((lead, _)) = row.first() {
            let Some(&pidx) = self.pivots.get(lead) else { break };
            let pivot = &self.rows[pidx];
            let (pv, rv) = (&pivot[0].1, &row[0].1);
            let g = pv.gcd(rv);
            row = combine(&(pv / &g), &row, &(rv / &g), pivot);
            make_primitive(&mut row);
        }
        debug_assert!(row.iter().all(|(j, _)| *j < self.cols));
        row
    }

    /// Fills pivot variables of `x` from its free entries, in place.
    fn back_substitute(&self, x: &mut [Rational]) {
        for (&col, &ridx) in self.pivots.iter().rev() {
            let row = &self.rows[ridx];
            let mut acc = Rational::zero();
            for (j, v) in &row[1..] {
                if !x[*j].is_zero() {
                    acc += Rational::from_integer(v.clone()) * &x[*j];
                }
            }
            x[col] = -acc / Rational::from_integer(row[0].1.clone());
        }
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        (0..self.cols)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|free| {
                let mut x = vec![Rational::zero(); self.cols];
                x[free] = Rational::one();
                self.back_substitute(&mut x);
                x
            })
            .collect()
    }
}

fn clear_denominators(row: impl IntoIterator<Item = (usize, Rational)>) -> IntRow {
    let mut items: Vec<(usize, Rational)> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    items.sort_by_key(|(j, _)| *j);
    let den = common_denominator(items.iter().map(|(_, v)| v));
    let mut out: IntRow =
        items.into_iter().map(|(j, v)| (j, (v * Rational::from_integer(den.clone())).to_integer())).collect();
    // merge duplicate columns, if a caller supplied any
    out.dedup_by(|next, prev| {
        if next.0 == prev.0 {
            prev.1 += &next.1;
            true
        } else {
            false
        }
    });
    out.retain(|(_, v)| !v.is_zero());
    make_primitive(&mut out);
    out
}

/// `x * r - y * p` over sorted sparse rows.
fn combine(x: &BigInt, r: &IntRow, y: &BigInt, p: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let take_r = j >= p.len() || (i < r.len() && r[i].0 < p[j].0);
        let take_p = i >= r.len() || (j < p.len() && p[j].0 < r[i].0);
        let (col, v) = if take_r {
            i += 1;
            (r[i - 1].0, x * &r[i - 1].1)
        } else if take_p {
            j += 1;
            (p[j - 1].0, -(y * &p[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (r[i - 1].0, x * &r[i - 1].1 - y * &p[j - 1].1)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

fn make_primitive(row: &mut IntRow) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.abs();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    if first.1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}
