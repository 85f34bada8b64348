//! The conflict table written by the algorithm, one record per iteration,
//! and its line-oriented text form.
//!
//! Trace lines (vertices 1-based, `#` starts a comment):
//!
//! ```text
//! +
//! S1 <xP> <xQ> <u>:<w> ...
//! S2 <xP> <xQ> <u>:<w> ...
//! M <xP> <xQ> <u>:<w> ...
//! QD X|V <xP> <xQ> <aux> <sigma>
//! QS <xP> <xQ> <sigma>
//! ```

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// How the second edge of a sequence conflict is located when the colored
/// vertex lies outside it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Encoding {
    /// `Q` is found among the edges avoiding `v` with the right overlap with
    /// `P`; `aux` is the position of `|P \ Q|` in the difference spectrum.
    ViaX,
    /// `Q` is found among the edges through a shared vertex `v'`; `aux` is
    /// the position of `v'` in `P \ {v}`.
    ViaSharedVertex,
}

/// One entry of the conflict table. Positions `x_p`, `x_q`, `aux` and
/// `sigma` are 1-based; `gamma` pairs are 0-based vertices `(u, γ(u))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConflictRecord {
    Plus,
    SetCase1 {
        x_p: usize,
        x_q: usize,
        gamma: Vec<(usize, usize)>,
    },
    SetCase2 {
        x_p: usize,
        x_q: usize,
        gamma: Vec<(usize, usize)>,
    },
    Multiset {
        x_p: usize,
        x_q: usize,
        gamma: Vec<(usize, usize)>,
    },
    SeqDisjoint {
        encoding: Encoding,
        x_p: usize,
        x_q: usize,
        aux: usize,
        sigma: usize,
    },
    SeqShared {
        x_p: usize,
        x_q: usize,
        sigma: usize,
    },
}

impl ConflictRecord {
    pub fn is_plus(&self) -> bool {
        matches!(self, ConflictRecord::Plus)
    }
}

fn write_gamma(out: &mut String, gamma: &[(usize, usize)]) {
    for (u, w) in gamma {
        let _ = write!(out, " {}:{}", u + 1, w + 1);
    }
}

impl fmt::Display for ConflictRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        match self {
            ConflictRecord::Plus => s.push('+'),
            ConflictRecord::SetCase1 { x_p, x_q, gamma }
            | ConflictRecord::SetCase2 { x_p, x_q, gamma }
            | ConflictRecord::Multiset { x_p, x_q, gamma } => {
                let tag = match self {
                    ConflictRecord::SetCase1 { .. } => "S1",
                    ConflictRecord::SetCase2 { .. } => "S2",
                    _ => "M",
                };
                let _ = write!(s, "{tag} {x_p} {x_q}");
                write_gamma(&mut s, gamma);
            }
            ConflictRecord::SeqDisjoint {
                encoding,
                x_p,
                x_q,
                aux,
                sigma,
            } => {
                let e = match encoding {
                    Encoding::ViaX => 'X',
                    Encoding::ViaSharedVertex => 'V',
                };
                let _ = write!(s, "QD {e} {x_p} {x_q} {aux} {sigma}");
            }
            ConflictRecord::SeqShared { x_p, x_q, sigma } => {
                let _ = write!(s, "QS {x_p} {x_q} {sigma}");
            }
        }
        f.write_str(&s)
    }
}

/// The table of records, one per executed iteration.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConflictLog {
    pub records: Vec<ConflictRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("trace line {line}: {message}")]
pub struct TraceError {
    pub line: usize,
    pub message: String,
}

impl ConflictLog {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Number of records other than `+`.
    pub fn conflicts(&self) -> usize {
        self.records.iter().filter(|r| !r.is_plus()).count()
    }

    pub fn to_trace(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let _ = writeln!(out, "{r}");
        }
        out
    }

    pub fn from_trace(text: &str) -> Result<Self, TraceError> {
        let mut records = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| TraceError {
                line: idx + 1,
                message,
            };
            records.push(parse_record(line).map_err(err)?);
        }
        Ok(Self { records })
    }
}

fn number(tok: Option<&str>, what: &str) -> Result<usize, String> {
    let tok = tok.ok_or_else(|| format!("missing {what}"))?;
    tok.parse().map_err(|_| format!("invalid {what} `{tok}`"))
}

fn positive(tok: Option<&str>, what: &str) -> Result<usize, String> {
    match number(tok, what)? {
        0 => Err(format!("{what} must be positive")),
        n => Ok(n),
    }
}

fn parse_record(line: &str) -> Result<ConflictRecord, String> {
    let mut toks = line.split_whitespace();
    let tag = toks.next().unwrap_or_default();
    let record = match tag {
        "+" => ConflictRecord::Plus,
        "S1" | "S2" | "M" => {
            let x_p = positive(toks.next(), "x_P")?;
            let x_q = positive(toks.next(), "x_Q")?;
            let mut gamma = Vec::new();
            for pair in toks.by_ref() {
                let (u, w) = pair
                    .split_once(':')
                    .ok_or_else(|| format!("bad pair `{pair}`"))?;
                gamma.push((
                    positive(Some(u), "vertex")? - 1,
                    positive(Some(w), "vertex")? - 1,
                ));
            }
            if gamma.is_empty() {
                return Err("empty mapping".into());
            }
            match tag {
                "S1" => ConflictRecord::SetCase1 { x_p, x_q, gamma },
                "S2" => ConflictRecord::SetCase2 { x_p, x_q, gamma },
                _ => ConflictRecord::Multiset { x_p, x_q, gamma },
            }
        }
        "QD" => {
            let encoding = match toks.next() {
                Some("X") => Encoding::ViaX,
                Some("V") => Encoding::ViaSharedVertex,
                other => return Err(format!("unknown encoding {other:?}")),
            };
            ConflictRecord::SeqDisjoint {
                encoding,
                x_p: positive(toks.next(), "x_P")?,
                x_q: positive(toks.next(), "x_Q")?,
                aux: positive(toks.next(), "aux")?,
                sigma: positive(toks.next(), "sigma")?,
            }
        }
        "QS" => ConflictRecord::SeqShared {
            x_p: positive(toks.next(), "x_P")?,
            x_q: positive(toks.next(), "x_Q")?,
            sigma: positive(toks.next(), "sigma")?,
        },
        other => return Err(format!("unknown record `{other}`")),
    };
    if let Some(extra) = toks.next() {
        return Err(format!("unexpected `{extra}`"));
    }
    Ok(record)
}
