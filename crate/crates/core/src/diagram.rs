//! Flat (virtual) link diagrams as region-incidence crossing lists.
//!
//! A diagram has regions `0..R` and a list of crossings. Each crossing
//! names the four regions around it in cyclic order; corner `c0` is the one
//! constrained by `c0 = [c1 c2 c3]`.
//!
//! File format, one record per line, `#` starts a comment:
//!
//! ```text
//! regions 2
//! crossing flat 0 1 1 1
//! crossing virtual 0 1 1 0
//! ```

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossingKind {
    Flat,
    Virtual,
}

impl CrossingKind {
    pub fn keyword(self) -> &'static str {
        match self {
            CrossingKind::Flat => "flat",
            CrossingKind::Virtual => "virtual",
        }
    }
}

impl fmt::Display for CrossingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub kind: CrossingKind,
    pub corners: [usize; 4],
}

impl Crossing {
    pub fn flat(corners: [usize; 4]) -> Self {
        Crossing {
            kind: CrossingKind::Flat,
            corners,
        }
    }

    pub fn virt(corners: [usize; 4]) -> Self {
        Crossing {
            kind: CrossingKind::Virtual,
            corners,
        }
    }

    /// `(c1,c2,c3,c0)` shifted `k` times.
    pub fn rotated(&self, k: usize) -> Self {
        let c = self.corners;
        Crossing {
            kind: self.kind,
            corners: std::array::from_fn(|i| c[(i + k) % 4]),
        }
    }

    /// `(c0,c3,c2,c1)`.
    pub fn reversed(&self) -> Self {
        let [c0, c1, c2, c3] = self.corners;
        Crossing {
            kind: self.kind,
            corners: [c0, c3, c2, c1],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub name: String,
    pub regions: usize,
    pub crossings: Vec<Crossing>,
}

impl Diagram {
    pub fn new(name: impl Into<String>, regions: usize, crossings: Vec<Crossing>) -> Self {
        Diagram {
            name: name.into(),
            regions,
            crossings,
        }
    }

    pub fn has_virtual(&self) -> bool {
        self.crossings.iter().any(|c| c.kind == CrossingKind::Virtual)
    }

    pub fn is_flat_only(&self) -> bool {
        !self.has_virtual()
    }

    /// Same diagram with every crossing re-encoded by `f`.
    pub fn map_crossings(&self, f: impl Fn(usize, &Crossing) -> Crossing) -> Diagram {
        Diagram {
            name: self.name.clone(),
            regions: self.regions,
            crossings: self.crossings.iter().enumerate().map(|(i, c)| f(i, c)).collect(),
        }
    }

    /// Regions of `other` are appended after those of `self`.
    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let shift = self.regions;
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| Crossing {
            kind: c.kind,
            corners: c.corners.map(|r| r + shift),
        }));
        Diagram {
            name: format!("{}+{}", self.name, other.name),
            regions: self.regions + other.regions,
            crossings,
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_diagram(self))
    }
}

/// Problems with a diagram; empty when it is valid.
pub fn validate(d: &Diagram) -> Vec<String> {
    let mut findings = Vec::new();
    if d.regions == 0 {
        findings.push("diagram has no regions".to_string());
    }
    for (i, c) in d.crossings.iter().enumerate() {
        for (k, &r) in c.corners.iter().enumerate() {
            if r >= d.regions {
                findings.push(format!(
                    "crossing {i}: corner c{k} = {r} is not a region (R = {})",
                    d.regions
                ));
            }
        }
    }
    findings
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch == ' ' || ch == '\t' {
            if let Some(s) = start.take() {
                out.push((&line[s..i], s + 1));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((&line[s..], s + 1));
    }
    out
}

fn parse_index(tok: &str, line: usize, col: usize, what: &str) -> Result<usize> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(line, col, format!("expected {what}, found `{tok}`")));
    }
    tok.parse()
        .map_err(|_| Error::parse(line, col, format!("{what} `{tok}` is too large")))
}

pub fn parse_diagram(text: &str, name: &str) -> Result<Diagram> {
    let mut regions: Option<usize> = None;
    let mut crossings = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let body = raw.split('#').next().unwrap_or("");
        let toks = tokens(body);
        let Some(&(head, head_col)) = toks.first() else {
            continue;
        };
        let Some(r) = regions else {
            if head != "regions" {
                return Err(Error::parse(
                    line,
                    head_col,
                    format!("expected `regions`, found `{head}`"),
                ));
            }
            let Some(&(tok, col)) = toks.get(1) else {
                return Err(Error::parse(line, body.trim_end().len() + 1, "missing region count"));
            };
            let r = parse_index(tok, line, col, "region count")?;
            if r == 0 {
                return Err(Error::parse(line, col, "region count must be positive"));
            }
            if let Some(&(extra, col)) = toks.get(2) {
                return Err(Error::parse(line, col, format!("unexpected `{extra}`")));
            }
            regions = Some(r);
            continue;
        };
        if head != "crossing" {
            return Err(Error::parse(
                line,
                head_col,
                format!("expected `crossing`, found `{head}`"),
            ));
        }
        let kind = match toks.get(1) {
            Some(&("flat", _)) => CrossingKind::Flat,
            Some(&("virtual", _)) => CrossingKind::Virtual,
            Some(&(other, col)) => {
                return Err(Error::parse(
                    line,
                    col,
                    format!("expected `flat` or `virtual`, found `{other}`"),
                ))
            }
            None => {
                return Err(Error::parse(line, body.trim_end().len() + 1, "missing crossing kind"))
            }
        };
        let mut corners = [0usize; 4];
        for (k, corner) in corners.iter_mut().enumerate() {
            let Some(&(tok, col)) = toks.get(2 + k) else {
                return Err(Error::parse(
                    line,
                    body.trim_end().len() + 1,
                    format!("missing corner c{k}"),
                ));
            };
            let v = parse_index(tok, line, col, "region index")?;
            if v >= r {
                return Err(Error::parse(
                    line,
                    col,
                    format!("region {v} out of range (R = {r})"),
                ));
            }
            *corner = v;
        }
        if let Some(&(extra, col)) = toks.get(6) {
            return Err(Error::parse(line, col, format!("unexpected `{extra}`")));
        }
        crossings.push(Crossing { kind, corners });
    }
    let Some(regions) = regions else {
        return Err(Error::parse(last_line.max(1), 1, "missing `regions` header"));
    };
    Ok(Diagram::new(name, regions, crossings))
}

pub fn format_diagram(d: &Diagram) -> String {
    let mut out = format!("regions {}\n", d.regions);
    for c in &d.crossings {
        let [c0, c1, c2, c3] = c.corners;
        out.push_str(&format!("crossing {} {c0} {c1} {c2} {c3}\n", c.kind));
    }
    out
}

pub const BUILTIN_NAMES: [&str; 4] = ["unlink2", "loop2", "kishino", "hopf_fv"];

pub fn builtin(name: &str) -> Result<Diagram> {
    let d = match name {
        "unlink2" => Diagram::new(name, 3, vec![]),
        "loop2" => Diagram::new(name, 2, vec![]),
        "kishino" => Diagram::new(name, 2, vec![Crossing::flat([0, 1, 1, 1]); 4]),
        "hopf_fv" => Diagram::new(
            name,
            4,
            vec![Crossing::flat([0, 1, 2, 3]), Crossing::virt([0, 1, 2, 3])],
        ),
        _ => return Err(Error::UnknownBuiltin(name.to_string())),
    };
    Ok(d)
}

/// Uniform random diagram with `1..=max_regions` regions and
/// `0..=max_crossings` crossings; virtual crossings only when allowed.
pub fn random_diagram<R: Rng + ?Sized>(
    rng: &mut R,
    max_regions: usize,
    max_crossings: usize,
    allow_virtual: bool,
) -> Diagram {
    let regions = rng.gen_range(1..=max_regions.max(1));
    let count = rng.gen_range(0..=max_crossings);
    let crossings = (0..count)
        .map(|_| Crossing {
            kind: if allow_virtual && rng.gen_bool(0.5) {
                CrossingKind::Virtual
            } else {
                CrossingKind::Flat
            },
            corners: std::array::from_fn(|_| rng.gen_range(0..regions)),
        })
        .collect();
    Diagram::new("random", regions, crossings)
}
