//! The Cayley-Klein family `so_{w1..wN}(N+1)`.
//!
//! An algebra in the family is fixed by its [`OmegaSequence`]. Generators are
//! labelled by ordered index pairs `(a, b)`, `0 <= a < b <= N`, and the only
//! nonzero brackets are the three patterns sharing one index:
//!
//! ```text
//! [O_ab, O_ac] = w_ab O_bc      [O_ab, O_bc] = -O_ac      [O_ac, O_bc] = w_bc O_ab      (a < b < c)
//! ```
//!
//! where `w_ab = w_{a+1} w_{a+2} ... w_b` and `w_aa = 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::linalg::RationalMatrix;
use crate::notation::{GlyphStyle, Symbol};
use crate::rational::{format_rational, int, parse_rational, sign, Rational};

/// The contraction parameters `w_1 .. w_N`, `N >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmegaSequence {
    omegas: Vec<Rational>,
}

impl OmegaSequence {
    pub fn new(omegas: Vec<Rational>) -> Result<Self, Error> {
        if omegas.len() < 2 {
            return Err(Error::TooShort(omegas.len()));
        }
        Ok(Self { omegas })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self, Error> {
        Self::new(values.iter().map(|&v| int(v)).collect())
    }

    /// `N`, the number of parameters. The algebra acts on `N + 1` coordinates.
    pub fn n(&self) -> usize {
        self.omegas.len()
    }

    pub fn omegas(&self) -> &[Rational] {
        &self.omegas
    }

    /// `w_i` for `1 <= i <= N`, `None` outside that range.
    pub fn omega(&self, i: usize) -> Option<&Rational> {
        if i == 0 {
            None
        } else {
            self.omegas.get(i - 1)
        }
    }

    pub fn is_zero_at(&self, i: usize) -> bool {
        self.omega(i).is_some_and(Zero::is_zero)
    }

    /// `w_ab = w_{a+1} ... w_b`, with `w_aa = 1`.
    pub fn omega_product(&self, a: usize, b: usize) -> Result<Rational, Error> {
        let n = self.n();
        for idx in [a, b] {
            if idx > n {
                return Err(Error::IndexOutOfRange { index: idx, max: n });
            }
        }
        if a > b {
            return Err(Error::ReversedProduct { a, b });
        }
        Ok(self.product_unchecked(a, b))
    }

    pub(crate) fn product_unchecked(&self, a: usize, b: usize) -> Rational {
        self.omegas[a..b].iter().fold(Rational::one(), |acc, w| acc * w)
    }

    /// Each entry replaced by its sign. Rescaling generators takes any
    /// sequence to this form without changing the algebra's isomorphism class.
    pub fn standardized(&self) -> Self {
        Self { omegas: self.omegas.iter().map(|w| int(i64::from(sign(w)))).collect() }
    }

    pub fn is_standardized(&self) -> bool {
        self.omegas.iter().all(|w| w.is_zero() || w.is_one() || *w == int(-1))
    }

    pub fn signs(&self) -> Vec<i8> {
        self.omegas.iter().map(sign).collect()
    }

    pub fn reversed(&self) -> Self {
        Self { omegas: self.omegas.iter().rev().cloned().collect() }
    }

    pub fn generators(&self) -> Vec<GeneratorPair> {
        GeneratorPair::all(self.n())
    }

    pub fn dim(&self) -> usize {
        let n = self.n();
        n * (n + 1) / 2
    }
}

impl FromStr for OmegaSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let omegas = s.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
        Self::new(omegas)
    }
}

impl fmt::Display for OmegaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.omegas.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Returns `(w_N, ..., w_1)`. The two algebras are isomorphic.
pub fn reverse(seq: &OmegaSequence) -> OmegaSequence {
    seq.reversed()
}

/// Label `(a, b)` of the generator `O_ab`, always with `a < b`.
///
/// The derived ordering is lexicographic, which is the canonical generator
/// order used everywhere in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorPair {
    a: usize,
    b: usize,
}

impl GeneratorPair {
    pub fn new(a: usize, b: usize) -> Result<Self, Error> {
        if a >= b {
            return Err(Error::Unordered { lo: a, hi: b });
        }
        Ok(Self { a, b })
    }

    pub(crate) const fn of(a: usize, b: usize) -> Self {
        debug_assert!(a < b);
        Self { a, b }
    }

    pub fn a(self) -> usize {
        self.a
    }

    pub fn b(self) -> usize {
        self.b
    }

    /// Every pair over indices `0..=n`, in canonical order.
    pub fn all(n: usize) -> Vec<Self> {
        (0..=n).flat_map(|a| ((a + 1)..=n).map(move |b| Self { a, b })).collect()
    }

    /// Position of this pair in [`GeneratorPair::all`]`(n)`.
    pub fn index(self, n: usize) -> usize {
        self.a * n - self.a * self.a.saturating_sub(1) / 2 + (self.b - self.a - 1)
    }

    pub fn is_consecutive(self) -> bool {
        self.b == self.a + 1
    }

    pub fn render(self, style: GlyphStyle) -> String {
        style.indexed(Symbol::Generator, &[self.a, self.b])
    }
}

impl fmt::Display for GeneratorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(GlyphStyle::Plain))
    }
}

/// Sparse rational linear combination `sum c_k X_k`, zero terms never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &Rational) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn negated(&self) -> Self {
        self.scaled(&-Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn map_keys<J: Ord + Clone>(&self, f: impl Fn(&K) -> J) -> LinComb<J> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }
}

/// A basis element of a (possibly centrally extended) CK algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Omega(GeneratorPair),
    /// The central generator `Xi` of an extension.
    Central,
}

impl Generator {
    pub fn render(self, style: GlyphStyle) -> String {
        match self {
            Generator::Omega(p) => p.render(style),
            Generator::Central => style.symbol(Symbol::Xi).to_string(),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(GlyphStyle::Plain))
    }
}

/// Structure constants of a finite-dimensional algebra over the listed
/// generators. Only canonically ordered keys `(i, j)`, `i < j`, are stored;
/// `[j, i] = -[i, j]` and `[i, i] = 0` are implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    generators: Vec<Generator>,
    entries: BTreeMap<(usize, usize), LinComb<usize>>,
}

impl StructureTable {
    /// The Abelian algebra on the given generators.
    pub fn abelian(generators: Vec<Generator>) -> Self {
        Self { generators, entries: BTreeMap::new() }
    }

    /// The Abelian algebra on the `N(N+1)/2` generators `O_ab`, `0 <= a < b <= N`.
    pub fn abelian_ck(n: usize) -> Self {
        Self::abelian(GeneratorPair::all(n).into_iter().map(Generator::Omega).collect())
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn index_of(&self, g: Generator) -> Option<usize> {
        self.generators.iter().position(|&x| x == g)
    }

    /// Sets `[i, j] = value` (and hence `[j, i] = -value`).
    pub fn set(&mut self, i: usize, j: usize, value: LinComb<usize>) {
        assert!(i != j, "bracket of a generator with itself is always zero");
        let (key, value) = if i < j { ((i, j), value) } else { ((j, i), value.negated()) };
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
    }

    pub fn bracket(&self, i: usize, j: usize) -> LinComb<usize> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => LinComb::zero(),
            Less => self.entries.get(&(i, j)).cloned().unwrap_or_default(),
            Greater => self.entries.get(&(j, i)).map(LinComb::negated).unwrap_or_default(),
        }
    }

    /// Nonzero canonical entries in key order.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &LinComb<usize>)> {
        self.entries.iter()
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    /// `[[i, j], k] + [[j, k], i] + [[k, i], j]`.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> LinComb<usize> {
        let mut out = LinComb::zero();
        for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (r, c) in self.bracket(x, y).iter() {
                out.add_scaled(&self.bracket(*r, z), c);
            }
        }
        out
    }
}

/// `[P, Q]` in the algebra of `seq`, as a combination of generator pairs.
pub fn bracket(seq: &OmegaSequence, p: GeneratorPair, q: GeneratorPair) -> Result<LinComb<GeneratorPair>, Error> {
    let n = seq.n();
    for g in [p, q] {
        if g.b > n {
            return Err(Error::MismatchedN { expected: n, found: g.b });
        }
    }
    Ok(bracket_unchecked(seq, p, q))
}

pub(crate) fn bracket_unchecked(seq: &OmegaSequence, p: GeneratorPair, q: GeneratorPair) -> LinComb<GeneratorPair> {
    if p == q {
        return LinComb::zero();
    }
    let (lo, hi, flip) = if p < q { (p, q, false) } else { (q, p, true) };
    let (a, b, c, d) = (lo.a, lo.b, hi.a, hi.b);
    let out = if a == c {
        // [O_ab, O_ad] = w_ab O_bd
        LinComb::term(GeneratorPair::of(b, d), seq.product_unchecked(a, b))
    } else if b == c {
        // [O_ab, O_bd] = -O_ad
        LinComb::term(GeneratorPair::of(a, d), -Rational::one())
    } else if b == d {
        // [O_ab, O_cb] with a < c < b: w_cb O_ac
        LinComb::term(GeneratorPair::of(a, c), seq.product_unchecked(c, b))
    } else {
        LinComb::zero()
    };
    if flip {
        out.negated()
    } else {
        out
    }
}

/// The full structure table of `so_{w1..wN}(N+1)` over the canonical generator order.
pub fn structure_table(seq: &OmegaSequence) -> StructureTable {
    let pairs = seq.generators();
    let n = seq.n();
    let mut table = StructureTable::abelian(pairs.iter().copied().map(Generator::Omega).collect());
    for (i, &p) in pairs.iter().enumerate() {
        for (j, &q) in pairs.iter().enumerate().skip(i + 1) {
            let value = bracket_unchecked(seq, p, q).map_keys(|g| g.index(n));
            if !value.is_zero() {
                table.entries.insert((i, j), value);
            }
        }
    }
    table
}

/// Every generator triple `(i, j, k)`, `i < j < k`, whose Jacobi residual is nonzero.
pub fn check_jacobi(table: &StructureTable) -> Vec<(usize, usize, usize)> {
    let n = table.dim();
    let mut bad = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if !table.jacobi_residual(i, j, k).is_zero() {
                    bad.push((i, j, k));
                }
            }
        }
    }
    bad
}

/// `-w_ab e_ab + e_ba` as an `(N+1) x (N+1)` matrix.
pub fn vector_representation(seq: &OmegaSequence, p: GeneratorPair) -> Result<RationalMatrix, Error> {
    let n = seq.n();
    if p.b > n {
        return Err(Error::MismatchedN { expected: n, found: p.b });
    }
    let mut m = RationalMatrix::zeros(n + 1, n + 1);
    m.set(p.a, p.b, -seq.product_unchecked(p.a, p.b));
    m.set(p.b, p.a, Rational::one());
    Ok(m)
}

/// Matrix of a combination of generators under [`vector_representation`].
pub fn represent(seq: &OmegaSequence, comb: &LinComb<GeneratorPair>) -> RationalMatrix {
    let size = seq.n() + 1;
    let mut m = RationalMatrix::zeros(size, size);
    for (g, c) in comb.iter() {
        let rep = vector_representation(seq, *g).expect("pair within range");
        m = m.add(&rep.scaled(c));
    }
    m
}

/// `t ⊙ (left ⊕ right)` decomposition induced by a vanishing `w_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemidirectSplit {
    pub position: usize,
    /// Abelian ideal `{O_ij : i < a <= j}`.
    pub abelian_t: Vec<GeneratorPair>,
    /// Both indices `< a`.
    pub left_sub: Vec<GeneratorPair>,
    /// Both indices `>= a`.
    pub right_sub: Vec<GeneratorPair>,
}

pub fn semidirect_split(seq: &OmegaSequence, a: usize) -> Result<SemidirectSplit, Error> {
    let n = seq.n();
    if a == 0 || a > n {
        return Err(Error::IndexOutOfRange { index: a, max: n });
    }
    if !seq.is_zero_at(a) {
        return Err(Error::NoSplit(a));
    }
    let mut split = SemidirectSplit { position: a, abelian_t: vec![], left_sub: vec![], right_sub: vec![] };
    for p in seq.generators() {
        if p.b < a {
            split.left_sub.push(p);
        } else if p.a >= a {
            split.right_sub.push(p);
        } else {
            split.abelian_t.push(p);
        }
    }
    Ok(split)
}

/// `(p, q)` for the quadratic form `diag(1, w_1, w_1 w_2, ...)` of a
/// sequence with no zero entries; normalized so that `p >= q`.
fn signature(signs: &[i8]) -> (usize, usize) {
    let mut running = 1i8;
    let (mut pos, mut neg) = (1usize, 0usize);
    for &s in signs {
        running *= s;
        if running > 0 {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    (pos.max(neg), pos.min(neg))
}

fn so_name(signs: &[i8]) -> (String, (usize, usize)) {
    let (p, q) = signature(signs);
    let name = if q == 0 { format!("so({p})") } else { format!("so({p},{q})") };
    (name, (p, q))
}

/// Name of a standardized sequence from a finite registry of patterns, or
/// `None` when the pattern is not in the registry.
///
/// Patterns with only trailing zeros are named after their reversal, which is
/// an isomorphic algebra.
pub fn identify(seq: &OmegaSequence) -> Result<Option<String>, Error> {
    if !seq.is_standardized() {
        return Err(Error::NotStandardized);
    }
    Ok(identify_signs(&seq.signs()))
}

fn identify_signs(s: &[i8]) -> Option<String> {
    let n = s.len();
    let zeros: Vec<usize> = (1..=n).filter(|&i| s[i - 1] == 0).collect();
    if zeros.is_empty() {
        return Some(so_name(s).0);
    }
    if zeros.len() == n {
        let mut name = format!("flag {}so(1)", "i".repeat(n));
        if n == 2 {
            name.push_str(" (1+1 Galilei)");
        }
        return Some(name);
    }
    let leading = s.iter().take_while(|&&x| x == 0).count();
    let trailing = s.iter().rev().take_while(|&&x| x == 0).count();
    let k = zeros.len();

    if leading == k || trailing == k {
        let rest: Vec<i8> = if leading == k { s[k..].to_vec() } else { s[..n - k].iter().rev().copied().collect() };
        let (so, (p, q)) = so_name(&rest);
        let mut name = format!("{}{}", "i".repeat(k), so);
        let alias = match k {
            1 if q == 0 => Some("Euclidean".to_string()),
            1 if (p, q) == (n - 1, 1) => Some(format!("{}+1 Poincare", n - 1)),
            2 if q == 0 => Some(format!("{}+1 Galilei", n - 1)),
            _ => None,
        };
        if let Some(alias) = alias {
            name.push_str(&format!(" ({alias})"));
        }
        return Some(name);
    }

    if n >= 3 && k == 2 && leading == 1 && trailing == 1 {
        let (so, (_, q)) = so_name(&s[1..n - 1]);
        let mut name = format!("ii'{so}");
        if q == 0 {
            name.push_str(&format!(" ({}+1 Carroll)", n - 1));
        }
        return Some(name);
    }

    if k == 1 {
        let a = zeros[0];
        let (left, _) = so_name(&s[..a - 1]);
        let (right, _) = so_name(&s[a..]);
        let mut name = format!("t_{}({left}+{right})", a * (n + 1 - a));
        let newton_hooke = if a == 2 && s[2..].iter().all(|&x| x == 1) {
            Some(s[0])
        } else if a == n - 1 && s[..n - 2].iter().all(|&x| x == 1) {
            Some(s[n - 1])
        } else {
            None
        };
        if let Some(w) = newton_hooke {
            let kind = if w > 0 { "oscillating" } else { "expanding" };
            name.push_str(&format!(" ({}+1 {kind} Newton-Hooke)", n - 1));
        }
        return Some(name);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn seq(v: &[i64]) -> OmegaSequence {
        OmegaSequence::from_ints(v).unwrap()
    }

    fn gp(a: usize, b: usize) -> GeneratorPair {
        GeneratorPair::new(a, b).unwrap()
    }

    #[test]
    fn omega_products() {
        assert_eq!(seq(&[1, 1, 1]).omega_product(0, 3).unwrap(), int(1));
        assert_eq!(seq(&[0, 1, -1]).omega_product(0, 2).unwrap(), int(0));
        let s = OmegaSequence::new(vec![int(-1), frac(1, 2), int(3)]).unwrap();
        assert_eq!(s.omega_product(1, 3).unwrap(), frac(3, 2));
        for a in 0..=3 {
            assert_eq!(s.omega_product(a, a).unwrap(), int(1));
        }
        assert!(matches!(s.omega_product(2, 1), Err(Error::ReversedProduct { .. })));
        assert!(matches!(s.omega_product(0, 4), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn short_sequences_rejected() {
        assert_eq!(OmegaSequence::from_ints(&[1]), Err(Error::TooShort(1)));
        assert!("1".parse::<OmegaSequence>().is_err());
        assert!("1,,2".parse::<OmegaSequence>().is_err());
    }

    #[test]
    fn parse_sequence() {
        let s: OmegaSequence = "0, -1, 1/2, 3".parse().unwrap();
        assert_eq!(s.n(), 4);
        assert_eq!(s.to_string(), "0,-1,1/2,3");
        assert_eq!(s.standardized().to_string(), "0,-1,1,1");
        assert!(!s.is_standardized());
        assert!(s.standardized().is_standardized());
    }

    #[test]
    fn pair_construction_and_index() {
        assert!(GeneratorPair::new(2, 2).is_err());
        assert!(GeneratorPair::new(3, 1).is_err());
        for n in 2..7 {
            for (i, p) in GeneratorPair::all(n).into_iter().enumerate() {
                assert_eq!(p.index(n), i);
            }
        }
    }

    #[test]
    fn bracket_patterns() {
        let s = OmegaSequence::new(vec![frac(2, 3), int(5)]).unwrap();
        assert_eq!(bracket(&s, gp(0, 1), gp(0, 2)).unwrap(), LinComb::term(gp(1, 2), frac(2, 3)));
        assert_eq!(bracket(&s, gp(0, 1), gp(1, 2)).unwrap(), LinComb::term(gp(0, 2), int(-1)));
        assert_eq!(bracket(&s, gp(0, 2), gp(1, 2)).unwrap(), LinComb::term(gp(0, 1), int(5)));
        let s4 = seq(&[1, 1, 1]);
        assert!(bracket(&s4, gp(0, 1), gp(2, 3)).unwrap().is_zero());
        assert!(matches!(bracket(&s, gp(0, 1), gp(2, 3)), Err(Error::MismatchedN { .. })));
    }

    #[test]
    fn so3_table() {
        let t = structure_table(&seq(&[1, 1]));
        assert_eq!(t.nonzero_count(), 3);
        let g = structure_table(&seq(&[0, 0]));
        assert_eq!(g.nonzero_count(), 1);
        // [O01, O12] = -O02
        assert_eq!(g.bracket(0, 2), LinComb::term(1, int(-1)));
    }

    #[test]
    fn flipped_sign_breaks_jacobi() {
        // in dimension 3 a single sign flip still gives a Lie algebra
        let mut t = structure_table(&seq(&[1, 1, 1]));
        assert!(check_jacobi(&t).is_empty());
        let v = t.bracket(0, 1);
        t.set(0, 1, v.negated());
        assert!(!check_jacobi(&t).is_empty());
        assert!(check_jacobi(&StructureTable::abelian_ck(3)).is_empty());
    }

    #[test]
    fn representation_examples() {
        let m = vector_representation(&seq(&[1, 1]), gp(0, 1)).unwrap();
        assert_eq!(m.get(0, 1), int(-1));
        assert_eq!(m.get(1, 0), int(1));
        assert_eq!(m.nonzero_count(), 2);
        let z = vector_representation(&seq(&[0, 1]), gp(0, 2)).unwrap();
        assert_eq!(z.nonzero_count(), 1);
        assert_eq!(z.get(2, 0), int(1));
    }

    #[test]
    fn reversal() {
        assert_eq!(reverse(&seq(&[0, -1, 1, 1])), seq(&[1, 1, -1, 0]));
        assert_eq!(reverse(&seq(&[0, 1, 0])), seq(&[0, 1, 0]));
        let s = seq(&[2, -3, 0]);
        assert_eq!(reverse(&reverse(&s)), s);
    }

    #[test]
    fn splits() {
        let s = semidirect_split(&seq(&[0, 1, 1]), 1).unwrap();
        assert_eq!(s.abelian_t, vec![gp(0, 1), gp(0, 2), gp(0, 3)]);
        assert!(s.left_sub.is_empty());
        assert_eq!(s.right_sub, vec![gp(1, 2), gp(1, 3), gp(2, 3)]);
        let s = semidirect_split(&seq(&[1, 0, 1, 1]), 2).unwrap();
        assert_eq!(s.abelian_t.len(), 6);
        let s = semidirect_split(&seq(&[1, 1, 0]), 3).unwrap();
        assert!(s.right_sub.is_empty());
        assert_eq!(s.abelian_t, vec![gp(0, 3), gp(1, 3), gp(2, 3)]);
        assert_eq!(semidirect_split(&seq(&[1, 1, 0]), 2), Err(Error::NoSplit(2)));
    }

    #[test]
    fn registry_names() {
        let name = |v: &[i64]| identify(&seq(v)).unwrap();
        assert_eq!(name(&[1, 1, 1, 1]).as_deref(), Some("so(5)"));
        assert_eq!(name(&[1, -1, 1]).as_deref(), Some("so(2,2)"));
        assert_eq!(name(&[0, 1, 1, 1]).as_deref(), Some("iso(4) (Euclidean)"));
        assert_eq!(name(&[0, -1, 1, 1]).as_deref(), Some("iso(3,1) (3+1 Poincare)"));
        assert_eq!(name(&[0, 0, 1, 1]).as_deref(), Some("iiso(3) (3+1 Galilei)"));
        assert_eq!(name(&[0, 0, 1]).as_deref(), Some("iiso(2) (2+1 Galilei)"));
        assert_eq!(name(&[1, 0, 0]).as_deref(), Some("iiso(2) (2+1 Galilei)"));
        assert_eq!(name(&[0, 1, 1, 0]).as_deref(), Some("ii'so(3) (3+1 Carroll)"));
        assert_eq!(name(&[0, 0, 0, 0]).as_deref(), Some("flag iiiiso(1)"));
        assert_eq!(name(&[0, 0]).as_deref(), Some("flag iiso(1) (1+1 Galilei)"));
        assert_eq!(name(&[1, 0, 1, 1]).as_deref(), Some("t_6(so(2)+so(3)) (3+1 oscillating Newton-Hooke)"));
        assert_eq!(name(&[-1, 0, 1, 1]).as_deref(), Some("t_6(so(1,1)+so(3)) (3+1 expanding Newton-Hooke)"));
        assert_eq!(name(&[0, 1, 0, 1]), None);
        assert_eq!(identify(&"1/2,1".parse().unwrap()), Err(Error::NotStandardized));
    }
}
