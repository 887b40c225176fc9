//! Brute-force second cohomology `H^2(g, R)` of any algebra given by a
//! [`StructureTable`].
//!
//! `Z^2` is the kernel of the linear system "cocycle residual = 0" over the
//! `n(n-1)/2` canonical cochain coordinates, one equation per generator
//! triple. `B^2` is the image of `mu -> delta mu`. Both are computed with
//! exact elimination, so the dimensions are exact integers.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::ck::{check_jacobi, GeneratorPair, StructureTable};
use crate::cochain::{OneCochain, TwoCochain};
use crate::error::Error;
use crate::linalg::{RationalMatrix, RowEchelon};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainSpace {
    pub dim: usize,
    pub basis: Vec<TwoCochain>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CohomologyDims {
    pub z2: usize,
    pub b2: usize,
    pub h2: usize,
}

fn require_lie(table: &StructureTable) -> Result<(), Error> {
    let bad = check_jacobi(table);
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::NotALieAlgebra(bad.len()))
    }
}

/// One row per generator triple `i < j < k`, columns indexed by canonical cochain keys.
pub fn cocycle_system(table: &StructureTable) -> RationalMatrix {
    let n = table.dim();
    let mut m = RationalMatrix::zeros(0, TwoCochain::key_count(n));
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                // sum over cyclic (x, y, z) of sum_g C^g_xy alpha(g, z)
                let mut row = TwoCochain::zero(n);
                for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                    for (g, c) in table.bracket(x, y).iter() {
                        if *g != z {
                            row.add_at(*g, z, c);
                        }
                    }
                }
                m.push_row(row.sparse_coordinates());
            }
        }
    }
    m
}

/// Rows indexed by canonical cochain keys, columns by generators:
/// `(delta mu)_{ij} = sum_g C^g_ij mu_g`.
pub fn coboundary_matrix(table: &StructureTable) -> RationalMatrix {
    let n = table.dim();
    let mut m = RationalMatrix::zeros(TwoCochain::key_count(n), n);
    for (&(i, j), comb) in table.entries() {
        let row = TwoCochain::key_index(n, i, j);
        for (g, c) in comb.iter() {
            m.set(row, *g, c.clone());
        }
    }
    m
}

pub fn cocycle_space(table: &StructureTable) -> Result<CochainSpace, Error> {
    require_lie(table)?;
    let n = table.dim();
    let kernel = cocycle_system(table).rank_and_kernel().kernel_basis;
    let basis: Vec<TwoCochain> = kernel.iter().map(|v| TwoCochain::from_vector(n, v)).collect();
    Ok(CochainSpace { dim: basis.len(), basis })
}

pub fn coboundary_space(table: &StructureTable) -> CochainSpace {
    let basis: Vec<TwoCochain> = coboundary_matrix(table)
        .pivot_columns()
        .into_iter()
        .map(|g| {
            let mut mu = OneCochain::zero();
            mu.set(g, Rational::from_integer(1.into()));
            mu.coboundary(table)
        })
        .collect();
    CochainSpace { dim: basis.len(), basis }
}

/// Dimensions of `Z^2`, `B^2` and `H^2`, from ranks alone.
pub fn dimensions(table: &StructureTable) -> Result<CohomologyDims, Error> {
    require_lie(table)?;
    let n = table.dim();
    let z2 = TwoCochain::key_count(n) - cocycle_system(table).rank();
    let b2 = coboundary_matrix(table).rank();
    debug_assert!(b2 <= z2);
    Ok(CohomologyDims { z2, b2, h2: z2 - b2 })
}

pub fn h2_dimension(table: &StructureTable) -> Result<usize, Error> {
    dimensions(table).map(|d| d.h2)
}

/// Cocycles completing a basis of `B^2` to a basis of `Z^2`, chosen greedily
/// from the `Z^2` kernel basis in canonical key order.
pub fn h2_representatives(table: &StructureTable) -> Result<Vec<TwoCochain>, Error> {
    let z2 = cocycle_space(table)?;
    let b2 = coboundary_space(table);
    let mut ech = RowEchelon::new(TwoCochain::key_count(table.dim()));
    for b in &b2.basis {
        ech.insert(b.sparse_coordinates());
    }
    Ok(z2.basis.into_iter().filter(|z| ech.insert(z.sparse_coordinates())).collect())
}

/// A one-cochain `mu` with `delta mu = cochain`, if there is one.
pub fn coboundary_preimage(table: &StructureTable, cochain: &TwoCochain) -> Option<OneCochain> {
    assert_eq!(cochain.n_gens(), table.dim());
    coboundary_matrix(table).solve(&cochain.to_vector()).map(|x| OneCochain::from_vector(&x))
}

pub fn is_coboundary(table: &StructureTable, cochain: &TwoCochain) -> bool {
    coboundary_preimage(table, cochain).is_some()
}

pub fn is_cocycle(table: &StructureTable, cochain: &TwoCochain) -> bool {
    cochain.cocycle_violations(table).is_empty()
}

/// Whether the listed cocycles stay independent modulo `B^2`.
pub fn independent_mod_coboundaries(table: &StructureTable, cocycles: &[TwoCochain]) -> bool {
    let b2 = coboundary_space(table);
    let mut ech = RowEchelon::new(TwoCochain::key_count(table.dim()));
    for b in &b2.basis {
        ech.insert(b.sparse_coordinates());
    }
    cocycles.iter().all(|c| ech.insert(c.sparse_coordinates()))
}

/// Number of cocycle equations of the CK algebra on `N + 1` indices,
/// grouped by how many distinct indices the three generators involve.
/// Entry `k` counts triples touching `k + 3` distinct indices.
pub fn jacobi_census(n: usize) -> [usize; 4] {
    let pairs = GeneratorPair::all(n);
    let mut counts = [0usize; 4];
    for (i, p) in pairs.iter().enumerate() {
        for (j, q) in pairs.iter().enumerate().skip(i + 1) {
            for r in pairs.iter().skip(j + 1) {
                let idx: BTreeSet<usize> = [p.a(), p.b(), q.a(), q.b(), r.a(), r.b()].into_iter().collect();
                counts[idx.len() - 3] += 1;
            }
        }
    }
    counts
}

/// Nonzero rows of a cocycle system, as a sanity figure for reports.
pub fn nontrivial_equation_count(table: &StructureTable) -> usize {
    let m = cocycle_system(table);
    (0..m.rows()).filter(|&r| m.row(r).any(|(_, v)| !v.is_zero())).count()
}
