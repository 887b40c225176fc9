//! Closed-form description of every central extension of a CK algebra.
//!
//! A two-cocycle is determined by a small set of *basic* coefficients:
//!
//! * `tau_ac = alpha(O_{a,a+1}, O_{a+1,c})`, `c >= a + 2` (always coboundaries),
//! * `alpha^F_{p,p+1} = alpha(O_{p-1,p}, O_{p-1,p+1})`, `1 <= p <= N-1`,
//! * `alpha^L_{p,p+1} = alpha(O_{p,p+2}, O_{p+1,p+2})`, `0 <= p <= N-2`,
//! * `beta_pq = alpha(O_{p-1,p}, O_{q-1,q})`, `1 <= p`, `q >= p + 2`.
//!
//! Every other cocycle entry is `+-w_xy` times one of these; see
//! [`cochain_term`]. The basic coefficients are tied together by the
//! constraints checked in [`constraint_check`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::ck::{structure_table, GeneratorPair, OmegaSequence};
use crate::cochain::TwoCochain;
use crate::error::Error;
use crate::notation::{GlyphStyle, Symbol};
use crate::oracle;
use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientKind {
    TypeI,
    TypeIIF,
    TypeIIL,
    TypeIII,
}

/// A basic extension coefficient. Indices follow the subscripts of the
/// usual names, e.g. `AlphaF { p: 1 }` is `alpha^F_12`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasicCoefficient {
    Tau { a: usize, c: usize },
    AlphaF { p: usize },
    AlphaL { p: usize },
    Beta { p: usize, q: usize },
}

impl BasicCoefficient {
    pub fn kind(self) -> CoefficientKind {
        match self {
            Self::Tau { .. } => CoefficientKind::TypeI,
            Self::AlphaF { .. } => CoefficientKind::TypeIIF,
            Self::AlphaL { .. } => CoefficientKind::TypeIIL,
            Self::Beta { .. } => CoefficientKind::TypeIII,
        }
    }

    pub fn is_type_ii(self) -> bool {
        matches!(self, Self::AlphaF { .. } | Self::AlphaL { .. })
    }

    /// Sort key realizing the fixed report order: taus, then `alpha^L_01`,
    /// the `(alpha^F, alpha^L)` pairs by position, `alpha^F_{N-1,N}`, then betas.
    fn order_key(self) -> (u8, usize, u8, usize) {
        match self {
            Self::Tau { a, c } => (0, a, 0, c),
            Self::AlphaF { p } => (1, p, 0, 0),
            Self::AlphaL { p } => (1, p, 1, 0),
            Self::Beta { p, q } => (2, p, 0, q),
        }
    }

    pub fn exists_for(self, n: usize) -> bool {
        match self {
            Self::Tau { a, c } => c >= a + 2 && c <= n,
            Self::AlphaF { p } => p >= 1 && p < n,
            Self::AlphaL { p } => p + 2 <= n,
            Self::Beta { p, q } => p >= 1 && q >= p + 2 && q <= n,
        }
    }

    /// The cochain entry this coefficient names.
    pub fn slot(self) -> (GeneratorPair, GeneratorPair) {
        let gp = GeneratorPair::of;
        match self {
            Self::Tau { a, c } => (gp(a, a + 1), gp(a + 1, c)),
            Self::AlphaF { p } => (gp(p - 1, p), gp(p - 1, p + 1)),
            Self::AlphaL { p } => (gp(p, p + 2), gp(p + 1, p + 2)),
            Self::Beta { p, q } => (gp(p - 1, p), gp(q - 1, q)),
        }
    }

    pub fn render(self, style: GlyphStyle) -> String {
        match self {
            Self::Tau { a, c } => style.indexed(Symbol::Tau, &[a, c]),
            Self::AlphaF { p } => style.indexed(Symbol::AlphaF, &[p, p + 1]),
            Self::AlphaL { p } => style.indexed(Symbol::AlphaL, &[p, p + 1]),
            Self::Beta { p, q } => style.indexed(Symbol::Beta, &[p, q]),
        }
    }
}

impl Ord for BasicCoefficient {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for BasicCoefficient {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasicCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(GlyphStyle::Plain))
    }
}

/// All basic coefficients for `N`, in report order.
pub fn enumerate_basic(n: usize) -> Result<Vec<BasicCoefficient>, Error> {
    if n < 2 {
        return Err(Error::TooShort(n));
    }
    let mut out = Vec::new();
    for a in 0..=n - 2 {
        for c in a + 2..=n {
            out.push(BasicCoefficient::Tau { a, c });
        }
    }
    for p in 0..n {
        if p >= 1 {
            out.push(BasicCoefficient::AlphaF { p });
        }
        if p + 2 <= n {
            out.push(BasicCoefficient::AlphaL { p });
        }
    }
    for p in 1..=n {
        for q in p + 2..=n {
            out.push(BasicCoefficient::Beta { p, q });
        }
    }
    out.sort();
    Ok(out)
}

/// Values for (some of) the basic coefficients; absent ones are zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExtensionAssignment {
    values: BTreeMap<BasicCoefficient, Rational>,
}

impl ExtensionAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(c: BasicCoefficient) -> Self {
        let mut out = Self::new();
        out.set(c, Rational::one());
        out
    }

    /// Unit value on each listed coefficient.
    pub fn units(cs: &[BasicCoefficient]) -> Self {
        let mut out = Self::new();
        for &c in cs {
            out.set(c, Rational::one());
        }
        out
    }

    pub fn with(mut self, c: BasicCoefficient, v: Rational) -> Self {
        self.set(c, v);
        self
    }

    pub fn get(&self, c: BasicCoefficient) -> Rational {
        self.values.get(&c).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, c: BasicCoefficient, v: Rational) {
        if v.is_zero() {
            self.values.remove(&c);
        } else {
            self.values.insert(c, v);
        }
    }

    pub fn support(&self) -> Vec<BasicCoefficient> {
        self.values.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasicCoefficient, &Rational)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// The same assignment with every type I value dropped.
    pub fn without_taus(&self) -> Self {
        Self {
            values: self
                .values
                .iter()
                .filter(|(c, _)| c.kind() != CoefficientKind::TypeI)
                .map(|(c, v)| (*c, v.clone()))
                .collect(),
        }
    }
}

/// `delta_i = 1` iff `w_i = 0`. Indices outside `1..=N` read as 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSequence {
    deltas: Vec<u8>,
}

impl DeltaSequence {
    pub fn query(&self, i: usize) -> u8 {
        if i == 0 || i > self.deltas.len() {
            1
        } else {
            self.deltas[i - 1]
        }
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.deltas
    }
}

pub fn delta_sequence(seq: &OmegaSequence) -> DeltaSequence {
    DeltaSequence { deltas: seq.omegas().iter().map(|w| u8::from(w.is_zero())).collect() }
}

/// `dim H^2` from the zero pattern of `seq` alone:
///
/// ```text
/// d2 + d_{N-1} + 2 sum_{i=1}^{N-2} d_i d_{i+2}
///   + sum_{b=0}^{N-3} d_b d_{b+4} [d_{b+2} + d_{b+1} d_{b+3} - d_{b+1} d_{b+2} d_{b+3}]
///   + sum_{b=0}^{N-4} sum_{d=b+3}^{N-1} d_b d_{b+2} d_d d_{d+2}
/// ```
///
/// with `d_0 = 1` and `d_i = 1` for `i > N`. The two `beta` sums run over
/// `b` with the coefficients `beta_{b+1,b+3}` and `beta_{b+1,d+1}`; the
/// padding is what drops the conditions on the nonexistent `w_0`, `w_{N+1}`.
pub fn h2_dimension_formula(seq: &OmegaSequence) -> usize {
    let d = delta_sequence(seq);
    let n = seq.n();
    let q = |i: usize| usize::from(d.query(i));
    let mut total = q(2) + q(n - 1);
    total += 2 * (1..=n - 2).map(|i| q(i) * q(i + 2)).sum::<usize>();
    total += (0..n - 2)
        .map(|b| q(b) * q(b + 4) * (q(b + 2) + q(b + 1) * q(b + 3) - q(b + 1) * q(b + 2) * q(b + 3)))
        .sum::<usize>();
    if n >= 4 {
        for b in 0..=n - 4 {
            for j in b + 3..n {
                total += q(b) * q(b + 2) * q(j) * q(j + 2);
            }
        }
    }
    total
}

/// Indices of the `w` factors in each vanishing condition on a `beta`,
/// with conditions on `w_0` or `w_{N+1}` dropped.
pub fn beta_conditions(n: usize, p: usize, q: usize) -> Vec<Vec<usize>> {
    assert!(BasicCoefficient::Beta { p, q }.exists_for(n));
    let mut out = Vec::with_capacity(4);
    if p >= 2 {
        out.push(vec![p - 1]);
    }
    if q == p + 2 {
        out.push(vec![p, p + 1]);
        out.push(vec![p + 1, p + 2]);
    } else {
        out.push(vec![p + 1]);
        out.push(vec![q - 1]);
    }
    if q < n {
        out.push(vec![q + 1]);
    }
    out
}

fn omega_monomial(seq: &OmegaSequence, idx: &[usize]) -> Rational {
    idx.iter().fold(Rational::one(), |acc, &i| acc * seq.omega(i).expect("index within 1..=N"))
}

/// Whether `beta_pq` may be nonzero at all on this algebra.
pub fn beta_allowed(seq: &OmegaSequence, p: usize, q: usize) -> bool {
    beta_conditions(seq.n(), p, q).iter().all(|m| omega_monomial(seq, m).is_zero())
}

/// Basic coefficients giving nontrivial cohomology classes, in report order.
///
/// This walks the rules one coefficient at a time and is independent of
/// [`h2_dimension_formula`]; the two must agree in count.
pub fn classify_nontrivial(seq: &OmegaSequence) -> Vec<BasicCoefficient> {
    let n = seq.n();
    let zero = |i: usize| seq.is_zero_at(i);
    let mut out = Vec::new();
    if zero(2) {
        out.push(BasicCoefficient::AlphaL { p: 0 });
    }
    for p in 1..=n - 2 {
        if zero(p) && zero(p + 2) {
            out.push(BasicCoefficient::AlphaF { p });
            out.push(BasicCoefficient::AlphaL { p });
        }
    }
    if zero(n - 1) {
        out.push(BasicCoefficient::AlphaF { p: n - 1 });
    }
    for p in 1..=n {
        for q in p + 2..=n {
            if beta_allowed(seq, p, q) {
                out.push(BasicCoefficient::Beta { p, q });
            }
        }
    }
    out.sort();
    out
}

/// `(type II count, type III count)` of a coefficient list.
pub fn split_counts(cs: &[BasicCoefficient]) -> (usize, usize) {
    let ii = cs.iter().filter(|c| c.is_type_ii()).count();
    let iii = cs.iter().filter(|c| c.kind() == CoefficientKind::TypeIII).count();
    (ii, iii)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstraintViolation {
    /// `w_{p+2} alpha^F_{p,p+1} != w_p alpha^L_{p,p+1}`.
    TypeIIPair { p: usize, lhs: Rational, rhs: Rational },
    /// A vanishing condition `w... beta = 0` fails.
    TypeIII { p: usize, q: usize, multiplier: Vec<usize> },
    /// The coefficient does not exist for this `N`.
    OutOfRange(BasicCoefficient),
}

impl fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = GlyphStyle::Plain;
        match self {
            Self::TypeIIPair { p, lhs, rhs } => write!(
                f,
                "omega_{} alpha^F_{} = {} but omega_{} alpha^L_{} = {}",
                p + 2,
                s.subscript(&[*p, p + 1]).trim_start_matches('_'),
                format_rational(lhs),
                p,
                s.subscript(&[*p, p + 1]).trim_start_matches('_'),
                format_rational(rhs)
            ),
            Self::TypeIII { p, q, multiplier } => {
                let m: Vec<String> = multiplier.iter().map(|i| format!("omega_{i}")).collect();
                write!(f, "{} {} != 0", m.join(" "), BasicCoefficient::Beta { p: *p, q: *q })
            }
            Self::OutOfRange(c) => write!(f, "{c} does not exist for this N"),
        }
    }
}

/// Every constraint the assignment fails on `seq` (empty = a valid cocycle).
pub fn constraint_check(seq: &OmegaSequence, assign: &ExtensionAssignment) -> Vec<ConstraintViolation> {
    let n = seq.n();
    let mut out = Vec::new();
    for (c, _) in assign.iter() {
        if !c.exists_for(n) {
            out.push(ConstraintViolation::OutOfRange(*c));
        }
    }
    for p in 1..=n.saturating_sub(2) {
        let w = |i: usize| seq.omega(i).cloned().expect("index within 1..=N");
        let lhs = w(p + 2) * assign.get(BasicCoefficient::AlphaF { p });
        let rhs = w(p) * assign.get(BasicCoefficient::AlphaL { p });
        if lhs != rhs {
            out.push(ConstraintViolation::TypeIIPair { p, lhs, rhs });
        }
    }
    for p in 1..=n {
        for q in p + 2..=n {
            let beta = assign.get(BasicCoefficient::Beta { p, q });
            if beta.is_zero() {
                continue;
            }
            for m in beta_conditions(n, p, q) {
                if !omega_monomial(seq, &m).is_zero() {
                    out.push(ConstraintViolation::TypeIII { p, q, multiplier: m });
                }
            }
        }
    }
    out
}

/// One cochain entry `alpha(left, right) = sign * w_{span} * coefficient`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CochainTerm {
    pub sign: i8,
    /// `(x, y)` naming the product `w_xy`; `x == y` means 1.
    pub omega_span: (usize, usize),
    pub coefficient: BasicCoefficient,
}

/// How the entry `alpha(p, q)` of a general cocycle depends on the basic
/// coefficients; `None` where it is always zero. Requires `p < q`.
pub fn cochain_term(p: GeneratorPair, q: GeneratorPair) -> Option<CochainTerm> {
    assert!(p < q, "cochain_term expects canonically ordered pairs");
    let (a, b, c, d) = (p.a(), p.b(), q.a(), q.b());
    let term = |sign, omega_span, coefficient| Some(CochainTerm { sign, omega_span, coefficient });
    if b == c {
        // alpha(O_ab, O_bd) = tau_ad
        return term(1, (a, a), BasicCoefficient::Tau { a, c: d });
    }
    if a == c {
        // first index shared, b < d
        return if d == b + 1 {
            term(1, (a, b - 1), BasicCoefficient::AlphaF { p: b })
        } else {
            term(-1, (a, b), BasicCoefficient::Tau { a: b, c: d })
        };
    }
    if b == d {
        // last index shared: alpha(O_ab, O_cb), a < c < b
        return if c == a + 1 {
            term(1, (a + 2, b), BasicCoefficient::AlphaL { p: a })
        } else {
            term(-1, (c, b), BasicCoefficient::Tau { a, c })
        };
    }
    // four distinct indices, a < c
    if b < c {
        if b == a + 1 && d == c + 1 {
            return term(1, (0, 0), BasicCoefficient::Beta { p: a + 1, q: c + 1 });
        }
    } else if b < d && c == a + 1 && b == a + 2 && d == a + 3 {
        return term(-1, (a + 1, a + 2), BasicCoefficient::Beta { p: a + 1, q: a + 3 });
    }
    None
}

/// Every potentially nonzero entry of a general cocycle for `N`, in canonical key order.
pub fn cochain_template(n: usize) -> Vec<(GeneratorPair, GeneratorPair, CochainTerm)> {
    let pairs = GeneratorPair::all(n);
    let mut out = Vec::new();
    for (i, &p) in pairs.iter().enumerate() {
        for &q in &pairs[i + 1..] {
            if let Some(t) = cochain_term(p, q) {
                out.push((p, q, t));
            }
        }
    }
    out
}

pub(crate) fn evaluate_term(seq: &OmegaSequence, term: &CochainTerm, assign: &ExtensionAssignment) -> Rational {
    let v = assign.get(term.coefficient);
    if v.is_zero() {
        return v;
    }
    let w = seq.product_unchecked(term.omega_span.0, term.omega_span.1);
    let signed = if term.sign < 0 { -w } else { w };
    signed * v
}

/// Builds the cochain from the basic coefficients without checking constraints.
pub fn derive_unchecked(seq: &OmegaSequence, assign: &ExtensionAssignment) -> TwoCochain {
    let n = seq.n();
    let mut out = TwoCochain::zero(seq.dim());
    for (p, q, term) in cochain_template(n) {
        let v = evaluate_term(seq, &term, assign);
        if !v.is_zero() {
            out.set(p.index(n), q.index(n), v);
        }
    }
    out
}

/// The full two-cocycle determined by a valid assignment (type I values included).
pub fn derive_full_cochain(seq: &OmegaSequence, assign: &ExtensionAssignment) -> Result<TwoCochain, Error> {
    let bad = constraint_check(seq, assign);
    if !bad.is_empty() {
        return Err(Error::Constraints(bad));
    }
    Ok(derive_unchecked(seq, assign))
}

/// A valid assignment whose free parameters are taken from `draw`.
///
/// Coefficients the constraints pin down are computed (or set to zero);
/// `draw` is called once for every coefficient that is genuinely free.
pub fn solve_constraints(
    seq: &OmegaSequence,
    mut draw: impl FnMut(BasicCoefficient) -> Rational,
) -> ExtensionAssignment {
    let n = seq.n();
    let mut out = ExtensionAssignment::new();
    for c in enumerate_basic(n).expect("N >= 2 by construction") {
        match c {
            BasicCoefficient::Tau { .. } => out.set(c, draw(c)),
            BasicCoefficient::AlphaL { p: 0 } => out.set(c, draw(c)),
            BasicCoefficient::AlphaF { p } if p == n - 1 => out.set(c, draw(c)),
            BasicCoefficient::AlphaF { p } => {
                // pair p: w_{p+2} F = w_p L
                let (wp, wp2) = (seq.omega(p).unwrap().clone(), seq.omega(p + 2).unwrap().clone());
                let l = BasicCoefficient::AlphaL { p };
                if !wp.is_zero() {
                    let f = draw(c);
                    out.set(l, &wp2 * &f / &wp);
                    out.set(c, f);
                } else if !wp2.is_zero() {
                    out.set(c, Rational::zero());
                    out.set(l, draw(l));
                } else {
                    out.set(c, draw(c));
                    out.set(l, draw(l));
                }
            }
            BasicCoefficient::AlphaL { .. } => {} // set together with its alpha^F partner
            BasicCoefficient::Beta { p, q } => {
                if beta_allowed(seq, p, q) {
                    out.set(c, draw(c));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Consistency {
    pub formula: usize,
    pub oracle: usize,
    pub agree: bool,
}

/// Compares [`h2_dimension_formula`] with the brute-force oracle.
pub fn is_formula_consistent(seq: &OmegaSequence) -> Consistency {
    let formula = h2_dimension_formula(seq);
    let oracle = oracle::h2_dimension(&structure_table(seq)).expect("CK tables satisfy Jacobi");
    Consistency { formula, oracle, agree: formula == oracle }
}
