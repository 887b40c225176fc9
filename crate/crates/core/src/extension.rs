//! Central extensions `g + R Xi` built from an assignment of basic coefficients.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::ck::{bracket_unchecked, structure_table, Generator, GeneratorPair, LinComb, OmegaSequence, StructureTable};
use crate::closed_form::{
    cochain_term, constraint_check, derive_unchecked, BasicCoefficient, CoefficientKind, ExtensionAssignment,
};
use crate::cochain::{OneCochain, TwoCochain};
use crate::error::Error;
use crate::notation::{GlyphStyle, Symbol};
use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone)]
pub struct ExtendedAlgebra {
    pub base: OmegaSequence,
    pub assignment: ExtensionAssignment,
    pub cochain: TwoCochain,
    /// CK generators in canonical order, then the central generator.
    pub table: StructureTable,
}

impl ExtendedAlgebra {
    pub fn central_index(&self) -> usize {
        self.table.dim() - 1
    }
}

/// Adjoins a central generator with brackets shifted by `cochain`.
pub fn extend_with_cochain(seq: &OmegaSequence, cochain: &TwoCochain) -> StructureTable {
    let base = structure_table(seq);
    let n = base.dim();
    assert_eq!(cochain.n_gens(), n);
    let mut gens = base.generators().to_vec();
    gens.push(Generator::Central);
    let mut table = StructureTable::abelian(gens);
    for i in 0..n {
        for j in (i + 1)..n {
            let mut comb = base.bracket(i, j);
            comb.add_term(n, cochain.get(i, j));
            table.set(i, j, comb);
        }
    }
    table
}

/// The extension for a valid assignment.
pub fn extend(seq: &OmegaSequence, assign: &ExtensionAssignment) -> Result<ExtendedAlgebra, Error> {
    let bad = constraint_check(seq, assign);
    if !bad.is_empty() {
        return Err(Error::Constraints(bad));
    }
    Ok(extend_unchecked(seq, assign))
}

/// Like [`extend`] but skips the constraint check; the result may fail Jacobi.
pub fn extend_unchecked(seq: &OmegaSequence, assign: &ExtensionAssignment) -> ExtendedAlgebra {
    let cochain = derive_unchecked(seq, assign);
    let table = extend_with_cochain(seq, &cochain);
    ExtendedAlgebra { base: seq.clone(), assignment: assign.clone(), cochain, table }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trivialization {
    /// Only nontrivial class coefficients remain.
    pub reduced: ExtensionAssignment,
    /// `mu` with `derive(original) - delta mu = derive(reduced)`.
    pub shifts: OneCochain,
}

/// Removes every coboundary part of a valid assignment by a generator shift
/// `Xi`-components `Omega -> Omega + mu(Omega) Xi`.
pub fn trivialize(seq: &OmegaSequence, assign: &ExtensionAssignment) -> Result<Trivialization, Error> {
    let bad = constraint_check(seq, assign);
    if !bad.is_empty() {
        return Err(Error::Constraints(bad));
    }
    let n = seq.n();
    let w = |i: usize| seq.omega(i).cloned().expect("index within 1..=N");
    let mut reduced = assign.clone();
    let mut shifts = OneCochain::zero();

    for (c, v) in assign.iter() {
        if let BasicCoefficient::Tau { a, c: d } = *c {
            shifts.set(GeneratorPair::of(a, d).index(n), -v.clone());
            reduced.set(*c, Rational::zero());
        }
    }

    // A shift of O_{k,k+1} moves alpha^F_k by w_k mu and alpha^L_k by w_{k+2} mu.
    for k in 0..n {
        let f = (k >= 1).then(|| (BasicCoefficient::AlphaF { p: k }, w(k)));
        let l = (k + 2 <= n).then(|| (BasicCoefficient::AlphaL { p: k }, w(k + 2)));
        let mu = [&f, &l]
            .into_iter()
            .flatten()
            .find(|(_, wk)| !wk.is_zero())
            .map(|(coef, wk)| assign.get(*coef) / wk)
            .unwrap_or_else(Rational::zero);
        if let (Some((fc, fw)), Some((lc, lw))) = (&f, &l) {
            if !fw.is_zero() && !lw.is_zero() {
                assert_eq!(assign.get(*fc) / fw, assign.get(*lc) / lw, "both shifts of position {k} must coincide");
            }
        }
        if mu.is_zero() {
            continue;
        }
        for (coef, wk) in [f, l].into_iter().flatten() {
            let shifted = reduced.get(coef) - &mu * wk;
            reduced.set(coef, shifted);
        }
        shifts.set(GeneratorPair::of(k, k + 1).index(n), mu);
    }
    debug_assert!(reduced.iter().all(|(c, _)| c.kind() != CoefficientKind::TypeI));
    Ok(Trivialization { reduced, shifts })
}

/// Drops type III classes that do not survive for the compact-group reading
/// of a standardized sequence: `beta_pq` needs `w_p <= 0` and `w_q <= 0`.
pub fn group_compactness_filter(
    seq: &OmegaSequence,
    nontrivial: &[BasicCoefficient],
) -> Result<Vec<BasicCoefficient>, Error> {
    if !seq.is_standardized() {
        return Err(Error::NotStandardized);
    }
    let positive = |i: usize| seq.omega(i).is_some_and(|w| w.is_positive());
    Ok(nontrivial
        .iter()
        .copied()
        .filter(|c| match *c {
            BasicCoefficient::Beta { p, q } => !positive(p) && !positive(q),
            _ => true,
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Notation {
    pub style: GlyphStyle,
    /// Print structure constants as `w` products instead of their values.
    pub symbolic_omegas: bool,
    /// Print central terms with coefficient names instead of values.
    pub symbolic_charges: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorRow {
    pub left: GeneratorPair,
    pub right: GeneratorPair,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorTable {
    pub style: GlyphStyle,
    pub rows: Vec<CommutatorRow>,
}

impl fmt::Display for CommutatorTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "[{}, {}] = {}", r.left.render(self.style), r.right.render(self.style), r.rhs)?;
        }
        Ok(())
    }
}

/// Structure constant of `[p, q]` (p < q) as `sign * w_span * target`.
fn structural_term(p: GeneratorPair, q: GeneratorPair) -> Option<(i8, (usize, usize), GeneratorPair)> {
    let (a, b, c, d) = (p.a(), p.b(), q.a(), q.b());
    if a == c {
        Some((1, (a, b), GeneratorPair::of(b, d)))
    } else if b == c {
        Some((-1, (a, a), GeneratorPair::of(a, d)))
    } else if b == d {
        Some((1, (c, b), GeneratorPair::of(a, c)))
    } else {
        None
    }
}

/// Joins factors with a magnitude: unit magnitudes are left out.
fn scaled_factors(magnitude: &Rational, factors: &[String]) -> String {
    let mut parts = Vec::new();
    if !magnitude.is_one() {
        parts.push(format_rational(magnitude));
    }
    parts.extend(factors.iter().filter(|s| !s.is_empty()).cloned());
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

fn join_signed(terms: &[(bool, String)]) -> String {
    let mut out = String::new();
    for (k, (neg, body)) in terms.iter().enumerate() {
        match (k, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(body);
    }
    out
}

/// All nonzero commutators `[P, Q]`, `P < Q`, of the extended algebra.
pub fn commutator_table(ext: &ExtendedAlgebra, notation: Notation) -> CommutatorTable {
    let seq = &ext.base;
    let n = seq.n();
    let style = notation.style;
    let xi = style.symbol(Symbol::Xi).to_string();
    let pairs = GeneratorPair::all(n);
    let mut rows = Vec::new();
    for (i, &p) in pairs.iter().enumerate() {
        for &q in &pairs[i + 1..] {
            let mut terms: Vec<(bool, String)> = Vec::new();
            if let Some((sign, (x, y), target)) = structural_term(p, q) {
                let gen = target.render(style);
                if notation.symbolic_omegas {
                    terms.push((sign < 0, scaled_factors(&Rational::one(), &[style.omega_product(x, y), gen])));
                } else {
                    let v: LinComb<GeneratorPair> = bracket_unchecked(seq, p, q);
                    let c = v.coefficient(&target);
                    if !c.is_zero() {
                        terms.push((c.is_negative(), scaled_factors(&c.abs(), &[gen])));
                    }
                }
            }
            if let Some(t) = cochain_term(p, q) {
                let charge = ext.assignment.get(t.coefficient);
                if !charge.is_zero() {
                    let (x, y) = t.omega_span;
                    let name = if notation.symbolic_charges { t.coefficient.render(style) } else { String::new() };
                    let value = if notation.symbolic_charges { Rational::one() } else { charge.clone() };
                    let signed = if t.sign < 0 { -value } else { value };
                    if notation.symbolic_omegas {
                        terms.push((
                            signed.is_negative(),
                            scaled_factors(&signed.abs(), &[style.omega_product(x, y), name, xi.clone()]),
                        ));
                    } else {
                        let total = signed * seq.omega_product(x, y).expect("span within 0..=N");
                        if !total.is_zero() {
                            terms.push((total.is_negative(), scaled_factors(&total.abs(), &[name, xi.clone()])));
                        }
                    }
                }
            }
            if !terms.is_empty() {
                rows.push(CommutatorRow { left: p, right: q, rhs: join_signed(&terms) });
            }
        }
    }
    CommutatorTable { style, rows }
}
