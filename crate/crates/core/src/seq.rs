//! Sequence emission in OEIS b-file and CSV form.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::denom::{d_formula, db_formula, db_quotient, dd_formula, dd_quotient};
use crate::error::{Error, Result};

/// Sequences this crate can emit.
///
/// `Ddq` is defined on odd indices only, `Dbq` on even indices only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceId {
    /// denom(B_n), A027642
    D,
    /// denom(B_n(x) − B_n), A195441
    Dd,
    /// denom(B_n(x)), A144845
    Db,
    /// DD_n / DD_{n+1} at odd n, A286516
    Ddq,
    /// DB_n / DB_{n+1} at even n, A286517
    Dbq,
}

impl SequenceId {
    pub const ALL: [SequenceId; 5] = [
        SequenceId::D,
        SequenceId::Dd,
        SequenceId::Db,
        SequenceId::Ddq,
        SequenceId::Dbq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceId::D => "D",
            SequenceId::Dd => "DD",
            SequenceId::Db => "DB",
            SequenceId::Ddq => "DDQ",
            SequenceId::Dbq => "DBQ",
        }
    }

    /// Whether index `n` belongs to the sequence's domain.
    pub fn defined_at(self, n: u64) -> bool {
        match self {
            SequenceId::Ddq => n % 2 == 1,
            SequenceId::Dbq => n >= 2 && n.is_multiple_of(2),
            _ => n >= 1,
        }
    }

    pub fn term(self, n: u64) -> Result<BigInt> {
        match self {
            SequenceId::D => Ok(d_formula(n)?.into_value()),
            SequenceId::Dd => Ok(dd_formula(n)?.into_value()),
            SequenceId::Db => Ok(db_formula(n)?.into_value()),
            SequenceId::Ddq => dd_quotient(n),
            SequenceId::Dbq => db_quotient(n),
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SequenceId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain(format!("unknown sequence id {s:?}; expected D, DD, DB, DDQ or DBQ")))
    }
}

/// Output layout for [`write_terms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqFormat {
    /// `index value` per line, no header.
    BFile,
    /// Header `n,a_n`, then `index,value` per line.
    Csv,
}

impl FromStr for SeqFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bfile" | "b-file" => Ok(SeqFormat::BFile),
            "csv" => Ok(SeqFormat::Csv),
            _ => Err(Error::domain(format!("unknown format {s:?}; expected csv or bfile"))),
        }
    }
}

/// Terms of a sequence over `from..=to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Terms {
    pub id: SequenceId,
    pub terms: Vec<(u64, BigInt)>,
    /// Indices in range skipped because they lie outside the domain.
    pub skipped: Vec<u64>,
}

pub fn terms(id: SequenceId, from: u64, to: u64) -> Result<Terms> {
    if from == 0 || from > to {
        return Err(Error::domain(format!("invalid range {from}..={to}; need 1 <= from <= to")));
    }
    let mut out = Terms {
        id,
        terms: Vec::new(),
        skipped: Vec::new(),
    };
    for n in from..=to {
        if id.defined_at(n) {
            out.terms.push((n, id.term(n)?));
        } else {
            out.skipped.push(n);
        }
    }
    Ok(out)
}

pub fn format_terms(terms: &[(u64, BigInt)], format: SeqFormat) -> String {
    let mut s = String::new();
    if format == SeqFormat::Csv {
        s.push_str("n,a_n\n");
    }
    let sep = match format {
        SeqFormat::BFile => ' ',
        SeqFormat::Csv => ',',
    };
    for (n, v) in terms {
        s.push_str(&format!("{n}{sep}{v}\n"));
    }
    s
}

/// Parses b-file text. Blank lines and `#` comments are ignored.
pub fn parse_bfile(text: &str) -> Result<Vec<(u64, BigInt)>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let parsed = match (parts.next(), parts.next(), parts.next()) {
            (Some(i), Some(v), None) => i.parse::<u64>().ok().zip(v.parse::<BigInt>().ok()),
            _ => None,
        };
        let pair = parsed.ok_or_else(|| {
            Error::domain(format!("malformed b-file line {}: {line:?}", lineno + 1))
        })?;
        out.push(pair);
    }
    Ok(out)
}
