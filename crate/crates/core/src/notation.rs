//! Plain-ASCII and Unicode spellings of the symbols used in listings.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GlyphStyle {
    #[default]
    Plain,
    Unicode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    Omega,
    Generator,
    AlphaF,
    AlphaL,
    Beta,
    Tau,
    Xi,
}

impl GlyphStyle {
    pub fn symbol(self, s: Symbol) -> &'static str {
        match (self, s) {
            (GlyphStyle::Plain, Symbol::Omega) => "omega",
            (GlyphStyle::Plain, Symbol::Generator) => "Omega",
            (GlyphStyle::Plain, Symbol::AlphaF) => "alpha^F",
            (GlyphStyle::Plain, Symbol::AlphaL) => "alpha^L",
            (GlyphStyle::Plain, Symbol::Beta) => "beta",
            (GlyphStyle::Plain, Symbol::Tau) => "tau",
            (GlyphStyle::Plain, Symbol::Xi) => "Xi",
            (GlyphStyle::Unicode, Symbol::Omega) => "ω",
            (GlyphStyle::Unicode, Symbol::Generator) => "Ω",
            (GlyphStyle::Unicode, Symbol::AlphaF) => "α^F",
            (GlyphStyle::Unicode, Symbol::AlphaL) => "α^L",
            (GlyphStyle::Unicode, Symbol::Beta) => "β",
            (GlyphStyle::Unicode, Symbol::Tau) => "τ",
            (GlyphStyle::Unicode, Symbol::Xi) => "Ξ",
        }
    }

    /// Subscript for an index list. Single digits are run together ("01"),
    /// otherwise they are comma separated ("9,10").
    pub fn subscript(self, indices: &[usize]) -> String {
        let body = if indices.iter().all(|&i| i < 10) {
            indices.iter().map(|i| i.to_string()).collect::<String>()
        } else {
            indices.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
        };
        match self {
            GlyphStyle::Plain => format!("_{body}"),
            GlyphStyle::Unicode => body
                .chars()
                .map(|c| match c {
                    '0'..='9' => char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap(),
                    ',' => '‚',
                    other => other,
                })
                .collect(),
        }
    }

    pub fn indexed(self, s: Symbol, indices: &[usize]) -> String {
        format!("{}{}", self.symbol(s), self.subscript(indices))
    }

    /// Spelling of the product omega_{a+1} ... omega_b; empty for a == b.
    pub fn omega_product(self, a: usize, b: usize) -> String {
        ((a + 1)..=b).map(|k| self.indexed(Symbol::Omega, &[k])).collect::<Vec<_>>().join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subscripts() {
        assert_eq!(GlyphStyle::Plain.indexed(Symbol::Generator, &[0, 1]), "Omega_01");
        assert_eq!(GlyphStyle::Unicode.indexed(Symbol::Generator, &[0, 1]), "Ω₀₁");
        assert_eq!(GlyphStyle::Plain.indexed(Symbol::Beta, &[9, 11]), "beta_9,11");
        assert_eq!(GlyphStyle::Plain.omega_product(0, 2), "omega_1 omega_2");
        assert_eq!(GlyphStyle::Plain.omega_product(3, 3), "");
    }
}
