//! Exhaustive sweep over the `3^N` standardized sequences.

use std::fmt::Write as _;

use ckh2_core::oracle;
use ckh2_core::{h2_dimension_formula, identify, structure_table, Error, OmegaSequence};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const DEFAULT_MAX_N: usize = 8;

/// Sweep ceiling, overridable through `CK_MAX_N`.
pub fn max_n() -> usize {
    std::env::var("CK_MAX_N").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_N)
}

/// Ternary counter over `(0, 1, -1)`, `w_1` most significant.
pub fn sequences(n: usize) -> Vec<OmegaSequence> {
    let total = 3usize.pow(n as u32);
    (0..total)
        .map(|code| {
            let mut digits = vec![0i64; n];
            let mut c = code;
            for d in digits.iter_mut().rev() {
                *d = [0, 1, -1][c % 3];
                c /= 3;
            }
            OmegaSequence::from_ints(&digits).expect("n >= 2")
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub omega: Vec<i8>,
    pub name: Option<String>,
    pub formula: usize,
    pub oracle: Option<usize>,
    pub agree: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub algebras: usize,
    pub max_dim: usize,
    pub checked: usize,
    pub agreements: usize,
    pub disagreements: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sweep {
    pub n: usize,
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

impl Sweep {
    pub fn all_agree(&self) -> bool {
        self.summary.disagreements == 0
    }
}

fn evaluate(seq: &OmegaSequence, with_oracle: bool) -> SweepRow {
    let formula = h2_dimension_formula(seq);
    let oracle = with_oracle.then(|| oracle::h2_dimension(&structure_table(seq)).expect("CK tables satisfy Jacobi"));
    SweepRow {
        omega: seq.signs(),
        name: identify(seq).expect("sweep sequences are standardized"),
        formula,
        oracle,
        agree: oracle.map(|o| o == formula),
    }
}

pub fn run(n: usize, with_oracle: bool, parallel: bool) -> Result<Sweep, Error> {
    if n < 2 {
        return Err(Error::TooShort(n));
    }
    let limit = max_n();
    if n > limit {
        return Err(Error::DisplayLimit { n, limit });
    }
    let seqs = sequences(n);
    // collect() on an indexed parallel iterator keeps input order
    let rows: Vec<SweepRow> = if parallel {
        seqs.par_iter().map(|s| evaluate(s, with_oracle)).collect()
    } else {
        seqs.iter().map(|s| evaluate(s, with_oracle)).collect()
    };
    let checked = rows.iter().filter(|r| r.agree.is_some()).count();
    let agreements = rows.iter().filter(|r| r.agree == Some(true)).count();
    let summary = SweepSummary {
        algebras: rows.len(),
        max_dim: rows.iter().map(|r| r.formula).max().unwrap_or(0),
        checked,
        agreements,
        disagreements: checked - agreements,
    };
    Ok(Sweep { n, rows, summary })
}

pub fn to_json(sweep: &Sweep) -> String {
    serde_json::to_string_pretty(sweep).expect("sweep serializes")
}

pub fn render_text(sweep: &Sweep) -> String {
    let mut out = String::new();
    let width = 3 * sweep.n;
    let _ = writeln!(out, "{:<width$}  {:>7}  {:>6}  {:<5}  name", "omega", "formula", "oracle", "agree");
    for r in &sweep.rows {
        let omega: Vec<String> = r.omega.iter().map(i8::to_string).collect();
        let oracle = r.oracle.map_or("-".to_string(), |o| o.to_string());
        let agree = match r.agree {
            Some(true) => "yes",
            Some(false) => "NO",
            None => "-",
        };
        let _ = writeln!(
            out,
            "{:<width$}  {:>7}  {:>6}  {:<5}  {}",
            omega.join(","),
            r.formula,
            oracle,
            agree,
            r.name.as_deref().unwrap_or("")
        );
    }
    let s = &sweep.summary;
    let _ = writeln!(
        out,
        "N={}: {} algebras, max dim H2 {}, {}/{} oracle checks agree",
        sweep.n, s.algebras, s.max_dim, s.agreements, s.checked
    );
    out
}
