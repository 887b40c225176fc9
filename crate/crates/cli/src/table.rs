//! Nontrivial extensions grouped by zero pattern, reversed patterns sharing a row.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use ckh2_core::closed_form::split_counts;
use ckh2_core::notation::Symbol;
use ckh2_core::{classify_nontrivial, identify, BasicCoefficient, Error, GlyphStyle, OmegaSequence};

use crate::sweep::sequences;

pub const MAX_TABLE_N: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternEntry {
    /// `true` where the parameter vanishes.
    pub zeros: Vec<bool>,
    pub coefficients: Vec<BasicCoefficient>,
    pub names: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub contractions: usize,
    /// One pattern, or a pattern followed by its reverse.
    pub entries: Vec<PatternEntry>,
    pub type_ii: usize,
    pub type_iii: usize,
}

impl TableRow {
    pub fn dim_label(&self) -> String {
        format!("{}+{}", self.type_ii, self.type_iii)
    }
}

fn entry(n: usize, zeros: &[bool]) -> PatternEntry {
    let members: Vec<OmegaSequence> =
        sequences(n).into_iter().filter(|s| (1..=n).all(|i| s.is_zero_at(i) == zeros[i - 1])).collect();
    let coefficients = classify_nontrivial(&members[0]);
    let mut names = BTreeSet::new();
    for s in &members {
        // the classes depend on the zero pattern only
        assert_eq!(classify_nontrivial(s), coefficients, "{s}");
        if let Some(name) = identify(s).expect("standardized") {
            names.insert(name);
        }
    }
    PatternEntry { zeros: zeros.to_vec(), coefficients, names: names.into_iter().collect() }
}

pub fn build(n: usize) -> Result<Vec<TableRow>, Error> {
    if n < 2 {
        return Err(Error::TooShort(n));
    }
    if n > MAX_TABLE_N {
        return Err(Error::DisplayLimit { n, limit: MAX_TABLE_N });
    }
    let mut patterns: Vec<Vec<bool>> =
        (0..1usize << n).map(|m| (0..n).map(|i| m >> (n - 1 - i) & 1 == 1).collect()).collect();
    // fewer contractions first, then zeros further left first
    patterns.sort_by_key(|z| (z.iter().filter(|&&b| b).count(), z.iter().map(|&b| !b).collect::<Vec<_>>()));

    let mut seen = BTreeSet::new();
    let mut rows = Vec::new();
    for z in &patterns {
        if !seen.insert(z.clone()) {
            continue;
        }
        let mut entries = vec![entry(n, z)];
        let rev: Vec<bool> = z.iter().rev().copied().collect();
        if seen.insert(rev.clone()) {
            entries.push(entry(n, &rev));
        }
        let (type_ii, type_iii) = split_counts(&entries[0].coefficients);
        for e in &entries[1..] {
            assert_eq!(split_counts(&e.coefficients), (type_ii, type_iii));
        }
        rows.push(TableRow { contractions: z.iter().filter(|&&b| b).count(), entries, type_ii, type_iii });
    }
    Ok(rows)
}

pub fn pattern_label(zeros: &[bool], style: GlyphStyle) -> String {
    let parts: Vec<String> = zeros
        .iter()
        .enumerate()
        .map(|(i, &z)| if z { "0".to_string() } else { style.indexed(Symbol::Omega, &[i + 1]) })
        .collect();
    format!("({})", parts.join(","))
}

/// `[type II list;type III list]`, the semicolon only when both are present.
pub fn coefficient_label(cs: &[BasicCoefficient], style: GlyphStyle) -> String {
    let names = |pick: fn(&BasicCoefficient) -> bool| {
        cs.iter().filter(|c| pick(c)).map(|c| c.render(style)).collect::<Vec<_>>()
    };
    let ii = names(|c| c.is_type_ii());
    let iii = names(|c| !c.is_type_ii());
    match (ii.is_empty(), iii.is_empty()) {
        (true, true) => "[]".to_string(),
        (false, true) => format!("[{}]", ii.join(",")),
        (true, false) => format!("[{}]", iii.join(",")),
        (false, false) => format!("[{};{}]", ii.join(","), iii.join(",")),
    }
}

pub fn render(rows: &[TableRow], style: GlyphStyle) -> String {
    let mut out = String::new();
    let lines: Vec<(String, String, String)> = rows
        .iter()
        .map(|r| {
            let body: Vec<String> = r
                .entries
                .iter()
                .map(|e| format!("{} {}", pattern_label(&e.zeros, style), coefficient_label(&e.coefficients, style)))
                .collect();
            (r.contractions.to_string(), body.join(" or "), r.dim_label())
        })
        .collect();
    let width = lines.iter().map(|l| l.1.chars().count()).max().unwrap_or(0);
    let _ = writeln!(out, "#  {:<width$}  dim H2", "pattern [nontrivial classes]");
    for (row, (k, body, dim)) in rows.iter().zip(&lines) {
        let pad = width - body.chars().count();
        let _ = writeln!(out, "{k}  {body}{}  {dim}", " ".repeat(pad));
        let names: BTreeSet<&str> = row.entries.iter().flat_map(|e| e.names.iter().map(String::as_str)).collect();
        let names: Vec<&str> = names.into_iter().collect();
        if !names.is_empty() {
            let _ = writeln!(out, "   {}", names.join("; "));
        }
    }
    out
}
