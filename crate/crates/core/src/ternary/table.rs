use std::fmt::Write as _;
use std::sync::OnceLock;

use super::TernaryOps;
use crate::error::{Error, Result};

/// A ternary operation on `{0..n-1}` stored as an `n x n x n` cube.
#[derive(Debug, Clone)]
pub struct TernaryTable {
    n: usize,
    cube: Vec<u32>,
    skew: OnceLock<std::result::Result<Vec<u32>, (usize, usize)>>,
}

impl PartialEq for TernaryTable {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.cube == other.cube
    }
}

impl Eq for TernaryTable {}

impl TernaryTable {
    pub fn new(n: usize, cube: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("empty carrier".into()));
        }
        if cube.len() != n * n * n {
            return Err(Error::Internal(format!(
                "cube has {} entries, expected {}",
                cube.len(),
                n * n * n
            )));
        }
        if let Some(v) = cube.iter().find(|&&v| v as usize >= n) {
            return Err(Error::Internal(format!("cube entry {v} out of range")));
        }
        Ok(TernaryTable {
            n,
            cube,
            skew: OnceLock::new(),
        })
    }

    pub fn from_fn(n: usize, op: impl Fn(usize, usize, usize) -> usize) -> Result<Self> {
        let mut cube = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    cube.push(op(x, y, z) as u32);
                }
            }
        }
        Self::new(n, cube)
    }

    pub fn from_ops(s: &dyn TernaryOps) -> Result<Self> {
        Self::from_fn(s.size(), |x, y, z| s.bracket(x, y, z))
    }

    pub fn get(&self, x: usize, y: usize, z: usize) -> usize {
        self.cube[(x * self.n + y) * self.n + z] as usize
    }

    pub fn cube(&self) -> &[u32] {
        &self.cube
    }

    /// Copy with a single entry replaced.
    pub fn with_entry(&self, x: usize, y: usize, z: usize, v: usize) -> Result<Self> {
        let mut cube = self.cube.clone();
        cube[(x * self.n + y) * self.n + z] = v as u32;
        Self::new(self.n, cube)
    }

    /// Installs a known skew map after checking `[x s(x) x] = x`.
    pub(crate) fn set_skew(&self, skew: Vec<usize>) -> Result<()> {
        for (x, &s) in skew.iter().enumerate() {
            if self.get(x, s, x) != x {
                return Err(Error::Internal(format!("{s} is not the skew of {x}")));
            }
        }
        let _ = self
            .skew
            .set(Ok(skew.into_iter().map(|s| s as u32).collect()));
        Ok(())
    }

    fn skew_map(&self) -> &std::result::Result<Vec<u32>, (usize, usize)> {
        self.skew.get_or_init(|| {
            let mut out = Vec::with_capacity(self.n);
            for x in 0..self.n {
                let sols: Vec<usize> = (0..self.n).filter(|&z| self.get(x, z, x) == x).collect();
                match sols.as_slice() {
                    [s] => out.push(*s as u32),
                    _ => return Err((x, sols.len())),
                }
            }
            Ok(out)
        })
    }

    /// The unique `z` with `[x z x] = x`.
    pub fn table_skew(&self, x: usize) -> Result<usize> {
        match self.skew_map() {
            Ok(s) => Ok(s[x] as usize),
            Err((e, count)) if *e == x => Err(Error::SkewUndefined {
                element: x,
                solutions: *count,
            }),
            Err(_) => {
                let count = (0..self.n).filter(|&z| self.get(x, z, x) == x).count();
                if count == 1 {
                    Ok((0..self.n).find(|&z| self.get(x, z, x) == x).unwrap())
                } else {
                    Err(Error::SkewUndefined {
                        element: x,
                        solutions: count,
                    })
                }
            }
        }
    }

    /// Parses the `ternary n` / `i j k v` table format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
            .filter(|(_, l)| !l.trim().is_empty());
        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, 1, "missing `ternary <n>` header"))?;
        let fields = tokens(header);
        let n = match fields.as_slice() {
            [("ternary", _), (num, col)] => num
                .parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::parse(hline, *col, format!("bad carrier size `{num}`")))?,
            [(word, col), ..] if *word != "ternary" => {
                return Err(Error::parse(hline, *col, format!("expected `ternary`, found `{word}`")))
            }
            _ => return Err(Error::parse(hline, 1, "expected `ternary <n>`")),
        };
        if n > 1 << 10 {
            return Err(Error::parse(hline, 9, format!("carrier size {n} is too large")));
        }
        let mut cube: Vec<Option<u32>> = vec![None; n * n * n];
        for (line, content) in lines {
            let fields = tokens(content);
            if fields.len() != 4 {
                let col = fields.get(4).map_or(1, |f| f.1);
                return Err(Error::parse(line, col, "expected `i j k v`"));
            }
            let mut vals = [0usize; 4];
            for (slot, (tok, col)) in vals.iter_mut().zip(&fields) {
                *slot = tok
                    .parse::<usize>()
                    .ok()
                    .filter(|&v| v < n)
                    .ok_or_else(|| {
                        Error::parse(line, *col, format!("`{tok}` is not an element of 0..{n}"))
                    })?;
            }
            let idx = (vals[0] * n + vals[1]) * n + vals[2];
            if cube[idx].is_some() {
                return Err(Error::parse(
                    line,
                    1,
                    format!("duplicate entry for ({} {} {})", vals[0], vals[1], vals[2]),
                ));
            }
            cube[idx] = Some(vals[3] as u32);
        }
        if let Some(missing) = cube.iter().position(Option::is_none) {
            let (x, y, z) = (missing / (n * n), missing / n % n, missing % n);
            return Err(Error::parse(
                text.lines().count().max(1),
                1,
                format!("missing entry for ({x} {y} {z})"),
            ));
        }
        Self::new(n, cube.into_iter().map(Option::unwrap).collect())
    }

    pub fn format(&self) -> String {
        let mut out = format!("ternary {}\n", self.n);
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    let _ = writeln!(out, "{x} {y} {z} {}", self.get(x, y, z));
                }
            }
        }
        out
    }
}

/// Whitespace-separated tokens with 1-based columns.
pub(crate) fn tokens(line: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((&line[s..i], s + 1));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((&line[s..], s + 1));
    }
    out
}

impl TernaryOps for TernaryTable {
    fn size(&self) -> usize {
        self.n
    }

    fn bracket(&self, x: usize, y: usize, z: usize) -> usize {
        self.get(x, y, z)
    }

    fn skew(&self, x: usize) -> Result<usize> {
        self.table_skew(x)
    }
}

/// True iff each of `[z a b] = c`, `[a z b] = c`, `[a b z] = c` is uniquely
/// solvable, i.e. every line of the cube is a permutation.
pub fn check_quasigroup(s: &dyn TernaryOps) -> bool {
    let n = s.size();
    let mut seen = vec![0usize; n];
    let mut stamp = 0usize;
    for a in 0..n {
        for b in 0..n {
            for pos in 0..3 {
                stamp += 1;
                for z in 0..n {
                    let v = match pos {
                        0 => s.bracket(z, a, b),
                        1 => s.bracket(a, z, b),
                        _ => s.bracket(a, b, z),
                    };
                    if seen[v] == stamp {
                        return false;
                    }
                    seen[v] = stamp;
                }
            }
        }
    }
    true
}
