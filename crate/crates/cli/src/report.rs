//! Single-algebra analysis and its JSON / text forms.

use std::fmt::Write as _;

use ckh2_core::oracle;
use ckh2_core::{
    classify_nontrivial, commutator_table, extend, format_rational, group_compactness_filter, h2_dimension_formula,
    identify, structure_table, Error, ExtensionAssignment, GlyphStyle, Notation, OmegaSequence,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub z2: usize,
    pub b2: usize,
    pub h2: usize,
    pub formula: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    /// Parameters as given, rationals as `"p/q"` strings.
    pub omega: Vec<String>,
    pub standardized: Vec<i8>,
    pub name: Option<String>,
    pub dims: Dims,
    pub agree: bool,
    pub generators: Vec<String>,
    /// Classes left by the compactness filter; a heuristic group-level count.
    pub group_generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brackets: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    pub brackets: bool,
    pub symbolic: bool,
    pub style: GlyphStyle,
}

pub fn analyze(seq: &OmegaSequence, opts: AnalyzeOptions) -> Result<AnalysisReport, Error> {
    let std = seq.standardized();
    let dims = oracle::dimensions(&structure_table(seq))?;
    let formula = h2_dimension_formula(seq);
    let classes = classify_nontrivial(seq);
    let kept = group_compactness_filter(&std, &classify_nontrivial(&std))?;
    let render = |cs: &[ckh2_core::BasicCoefficient]| cs.iter().map(|c| c.render(opts.style)).collect::<Vec<_>>();

    let brackets = if opts.brackets {
        let ext = extend(seq, &ExtensionAssignment::units(&classes))?;
        let notation = Notation { style: opts.style, symbolic_omegas: opts.symbolic, symbolic_charges: true };
        let table = commutator_table(&ext, notation);
        Some(table.to_string().lines().map(str::to_string).collect())
    } else {
        None
    };

    Ok(AnalysisReport {
        n: seq.n(),
        omega: seq.omegas().iter().map(format_rational).collect(),
        standardized: std.signs(),
        name: identify(&std)?,
        dims: Dims { z2: dims.z2, b2: dims.b2, h2: dims.h2, formula },
        agree: dims.h2 == formula,
        generators: render(&classes),
        group_generators: render(&kept),
        brackets,
    })
}

pub fn to_json(report: &AnalysisReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

pub fn from_json(text: &str) -> serde_json::Result<AnalysisReport> {
    serde_json::from_str(text)
}

pub fn render_text(report: &AnalysisReport, group_filter: bool) -> String {
    let mut out = String::new();
    let list = |v: &[String]| if v.is_empty() { "(none)".to_string() } else { v.join(", ") };
    let std: Vec<String> = report.standardized.iter().map(i8::to_string).collect();
    let _ = writeln!(out, "sequence      {}", report.omega.join(","));
    let _ = writeln!(out, "standardized  {}", std.join(","));
    let _ = writeln!(out, "name          {}", report.name.as_deref().unwrap_or("-"));
    let d = &report.dims;
    let _ = writeln!(out, "dim Z2 / B2   {} / {}", d.z2, d.b2);
    let verdict = if report.agree { "agree" } else { "DISAGREE" };
    let _ = writeln!(out, "dim H2        {} (oracle), {} (formula), {verdict}", d.h2, d.formula);
    let _ = writeln!(out, "classes       {}", list(&report.generators));
    if group_filter {
        let _ = writeln!(
            out,
            "group-level   {} (heuristic group-level count {})",
            list(&report.group_generators),
            report.group_generators.len()
        );
    }
    if let Some(rows) = &report.brackets {
        let _ = writeln!(out, "brackets");
        for r in rows {
            let _ = writeln!(out, "  {r}");
        }
    }
    out
}
