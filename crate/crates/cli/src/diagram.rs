//! Text picture of the triangular generator array.
//!
//! Row `a` holds `O_ab` for `b > a`. Each vanishing `w_z` splits off the
//! abelian block `{O_ij : i < z <= j}`, the top-right rectangle drawn with
//! `|` on its left edge and `-` below it. Nontrivial classes are listed
//! underneath as links between the generators they pair.

use std::fmt::Write as _;

use ckh2_core::notation::Symbol;
use ckh2_core::{classify_nontrivial, BasicCoefficient, Error, GeneratorPair, GlyphStyle, OmegaSequence};

pub const DISPLAY_LIMIT: usize = 9;

fn link(c: BasicCoefficient, style: GlyphStyle) -> String {
    let (l, r) = c.slot();
    let (l, r) = (l.render(style), r.render(style));
    match c {
        BasicCoefficient::AlphaF { .. } => format!("{l} -- {r} (row neighbours)"),
        BasicCoefficient::AlphaL { .. } => format!("{l} | {r} (column neighbours)"),
        BasicCoefficient::Beta { .. } => format!("{l} ~ {r} (long range)"),
        BasicCoefficient::Tau { .. } => format!("{l} . {r}"),
    }
}

pub fn render(seq: &OmegaSequence, style: GlyphStyle) -> Result<String, Error> {
    let n = seq.n();
    if n > DISPLAY_LIMIT {
        return Err(Error::DisplayLimit { n, limit: DISPLAY_LIMIT });
    }
    let splits: Vec<usize> = (1..=n).filter(|&z| seq.is_zero_at(z)).collect();
    let width = GeneratorPair::all(n).iter().map(|p| p.render(style).chars().count()).max().unwrap_or(0);
    // column b occupies one separator char followed by `width + 1` cell chars
    let vertical = |a: usize, b: usize| splits.iter().any(|&z| z == b && a < z);
    let below = |a: usize, b: usize| splits.iter().any(|&z| z == a + 1 && b >= z);

    let mut out = String::new();
    for a in 0..n {
        let mut line = String::new();
        for b in 1..=n {
            line.push(if vertical(a, b) { '|' } else { ' ' });
            let cell = if b > a { GeneratorPair::new(a, b)?.render(style) } else { String::new() };
            let pad = width + 1 - cell.chars().count();
            line.push_str(&cell);
            line.push_str(&" ".repeat(pad));
        }
        let _ = writeln!(out, "{}", line.trim_end());
        if (1..=n).any(|b| below(a, b)) {
            let mut rule = String::new();
            for b in 1..=n {
                let c = if below(a, b) { '-' } else { ' ' };
                rule.push(if below(a, b) && b > 1 && below(a, b - 1) { '-' } else { ' ' });
                rule.push_str(&c.to_string().repeat(width + 1));
            }
            let _ = writeln!(out, "{}", rule.trim_end());
        }
    }

    for &z in &splits {
        let _ = writeln!(
            out,
            "{} = 0: abelian block rows 0..{} x columns {}..{} (dim {})",
            style.indexed(Symbol::Omega, &[z]),
            z - 1,
            z,
            n,
            z * (n + 1 - z)
        );
    }
    let classes = classify_nontrivial(seq);
    if !classes.is_empty() {
        let _ = writeln!(out, "nontrivial extensions:");
        for c in classes {
            let _ = writeln!(out, "  {}: {}", c.render(style), link(c, style));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_triangle() {
        let text = render(&"1,1".parse().unwrap(), GlyphStyle::Plain).unwrap();
        assert_eq!(text, " Omega_01  Omega_02\n           Omega_12\n");
    }

    #[test]
    fn galilei_links() {
        let text = render(&"0,0,1".parse().unwrap(), GlyphStyle::Plain).unwrap();
        assert!(text.contains("alpha^L_01: Omega_02 | Omega_12"));
        assert!(text.contains("alpha^F_23: Omega_12 -- Omega_13"));
        assert!(text.contains("beta_13: Omega_01 ~ Omega_23"));
    }

    #[test]
    fn newton_hooke_block() {
        let text = render(&"1,0,1,1".parse().unwrap(), GlyphStyle::Plain).unwrap();
        assert!(text.contains("omega_2 = 0: abelian block rows 0..1 x columns 2..4 (dim 6)"));
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].contains("|Omega_02"));
        assert!(lines[1].contains("|Omega_12"));
        assert!(lines[2].trim_start().starts_with('-'));
        assert!(render(&"1,1,1,1,1,1,1,1,1,1".parse().unwrap(), GlyphStyle::Plain).is_err());
    }
}
