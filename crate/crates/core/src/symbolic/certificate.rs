use std::fmt;

use super::atom::SCombo;
use super::expr::parse_relations;
use super::relations::RelInstance;
use crate::error::Result;
use crate::series::ZPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertEntry {
    pub coeff: ZPoly,
    pub relation: RelInstance,
}

/// Ordered list of weighted relation instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub modulus: u32,
    pub entries: Vec<CertEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    pub residual: SCombo,
}

impl Certificate {
    pub fn empty(modulus: u32) -> Self {
        Certificate {
            modulus,
            entries: Vec::new(),
        }
    }

    /// Reads the text format: `[sign] coeff*Rn(args)` entries, whitespace insignificant.
    pub fn parse(text: &str, modulus: u32) -> Result<Self> {
        if text.trim().is_empty() || text.trim() == "0" {
            return Ok(Certificate::empty(modulus));
        }
        let entries = parse_relations(text, modulus)?
            .into_iter()
            .map(|(coeff, relation)| CertEntry { coeff, relation })
            .collect();
        Ok(Certificate { modulus, entries })
    }

    pub fn expand(&self) -> Result<SCombo> {
        let mut acc = SCombo::zero();
        for e in &self.entries {
            acc.add_combo(&e.relation.expand()?, &e.coeff);
        }
        Ok(acc)
    }

    /// Expands the certificate and compares it with `target`.
    pub fn check(&self, target: &SCombo) -> Result<Verdict> {
        let residual = self.expand()?.sub(target);
        Ok(Verdict {
            valid: residual.is_zero(),
            residual,
        })
    }
}

fn entry_text(coeff: &ZPoly, rel: &RelInstance, first: bool) -> String {
    let (neg, body) = match coeff.unit_sign() {
        Some(s) => (s < 0, rel.to_string()),
        None if coeff.len() == 1 => {
            let t = coeff.to_string();
            match t.strip_prefix('-') {
                Some(rest) => (true, format!("{rest}*{rel}")),
                None => (false, format!("{t}*{rel}")),
            }
        }
        None => (false, format!("({coeff})*{rel}")),
    };
    match (first, neg) {
        (true, false) => body,
        (true, true) => format!("-{body}"),
        (false, false) => format!("+ {body}"),
        (false, true) => format!("- {body}"),
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "0");
        }
        for (i, e) in self.entries.iter().enumerate() {
            writeln!(f, "{}", entry_text(&e.coeff, &e.relation, i == 0))?;
        }
        Ok(())
    }
}
