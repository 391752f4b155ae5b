//! Textual group specs such as `Z4xZ2` or `Z6`.
//!
//! A spec is kept together with the order the user wrote its cyclic factors
//! in, so that coordinates typed against `Z2xZ4` can be mapped onto the
//! normalized `Z4xZ2` and back.

use super::group::{factorize, AbelianGroup, Element};
use crate::error::{Error, Result};

/// A group as written: cyclic moduli in user order plus the normalized group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    moduli: Vec<u64>,
    group: AbelianGroup,
    /// For each written factor, the normalized factor indices it splits into.
    slots: Vec<Vec<usize>>,
}

impl Presentation {
    pub fn new(moduli: &[u64]) -> Result<Self> {
        // (prime, exponent, written index) for every prime-power piece.
        let mut pieces = Vec::new();
        for (w, &n) in moduli.iter().enumerate() {
            if n == 0 {
                return Err(Error::InvalidGroup("modulus 0".into()));
            }
            for (p, k) in factorize(n) {
                pieces.push((p, k, w));
            }
        }
        pieces.sort_by_key(|&(p, k, _)| (p, std::cmp::Reverse(k)));
        let mut slots = vec![Vec::new(); moduli.len()];
        for (idx, &(_, _, w)) in pieces.iter().enumerate() {
            slots[w].push(idx);
        }
        let group = AbelianGroup::from_prime_powers(
            pieces.iter().map(|&(p, k, _)| p.pow(k)).collect(),
        )?;
        Ok(Presentation {
            moduli: moduli.to_vec(),
            group,
            slots,
        })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// Maps coordinates in written order to a normalized element.
    pub fn element(&self, written: &[u64]) -> Result<Element> {
        if written.len() != self.moduli.len()
            || written.iter().zip(&self.moduli).any(|(c, n)| c >= n)
        {
            return Err(Error::GroupMismatch {
                element: Element(written.to_vec()).to_string(),
                group: self.written_form(),
            });
        }
        let factors = self.group.factors();
        let mut coords = vec![0; factors.len()];
        for (w, idxs) in self.slots.iter().enumerate() {
            for &i in idxs {
                coords[i] = written[w] % factors[i];
            }
        }
        Ok(Element(coords))
    }

    /// Inverse of [`Presentation::element`], recombining by CRT.
    pub fn written_coords(&self, x: &Element) -> Vec<u64> {
        let factors = self.group.factors();
        self.slots
            .iter()
            .zip(&self.moduli)
            .map(|(idxs, &n)| {
                (0..n)
                    .find(|c| idxs.iter().all(|&i| c % factors[i] == x.0[i]))
                    .expect("CRT residue exists")
            })
            .collect()
    }

    pub fn written_form(&self) -> String {
        if self.moduli.is_empty() {
            return "Z1".into();
        }
        self.moduli
            .iter()
            .map(|n| format!("Z{n}"))
            .collect::<Vec<_>>()
            .join("x")
    }
}

pub(crate) struct Cursor<'a> {
    pub text: &'a str,
    pub pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    pub fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    pub fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(1, self.pos + 1, msg)
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(got) => Err(self.err(format!("expected `{c}`, found `{got}`"))),
            None => Err(self.err(format!("expected `{c}`, found end of input"))),
        }
    }

    pub fn uint(&mut self) -> Result<u64> {
        let start = self.pos;
        if self.peek() == Some('-') {
            return Err(self.err("negative numbers are not allowed"));
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(match self.peek() {
                Some(c) => format!("expected a number, found `{c}`"),
                None => "expected a number, found end of input".into(),
            }));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(1, start + 1, "number out of range"))
    }

    pub fn at_end(&self) -> bool {
        self.pos == self.text.len()
    }
}

pub(crate) fn parse_moduli(cur: &mut Cursor<'_>) -> Result<Vec<u64>> {
    let mut moduli = Vec::new();
    loop {
        cur.expect('Z')?;
        let at = cur.pos;
        let n = cur.uint()?;
        if n == 0 {
            return Err(Error::parse(1, at + 1, "modulus must be positive"));
        }
        moduli.push((n, at));
        if cur.peek() == Some('x') {
            cur.pos += 1;
        } else {
            break;
        }
    }
    if moduli.len() == 1 && moduli[0].0 == 1 {
        return Ok(Vec::new());
    }
    if let Some(&(_, at)) = moduli.iter().find(|(n, _)| *n == 1) {
        return Err(Error::parse(1, at + 1, "Z1 may only appear on its own"));
    }
    Ok(moduli.into_iter().map(|(n, _)| n).collect())
}

/// Parses a group spec such as `Z4xZ2`, keeping the written factor order.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut cur = Cursor::new(text);
    let moduli = parse_moduli(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.err(format!("unexpected `{}`", cur.peek().unwrap())));
    }
    Presentation::new(&moduli)
}

/// Parses a group spec into its normalized primary decomposition.
pub fn parse_group_spec(text: &str) -> Result<AbelianGroup> {
    parse_presentation(text).map(|p| p.group)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_factors() {
        assert_eq!(parse_group_spec("Z4xZ2").unwrap().factors(), &[4, 2]);
        assert_eq!(parse_group_spec("Z2xZ4").unwrap().factors(), &[4, 2]);
        assert_eq!(parse_group_spec("Z6").unwrap().factors(), &[2, 3]);
        assert_eq!(parse_group_spec("Z12xZ18").unwrap().factors(), &[4, 2, 9, 3]);
        let trivial = parse_group_spec("Z1").unwrap();
        assert_eq!(trivial.order(), 1);
        assert!(trivial.factors().is_empty());
        assert_eq!(parse_group_spec("Z2xZ4").unwrap().to_string(), "Z4xZ2");
    }

    #[test]
    fn rejects_bad_specs() {
        for (text, col) in [
            ("Z0", 2),
            ("Z-3", 2),
            ("Z", 2),
            ("Y4", 1),
            ("Z4x", 4),
            ("Z4 xZ2", 3),
            ("Z2xZ1", 5),
            ("Z4Z2", 3),
        ] {
            match parse_group_spec(text) {
                Err(Error::Parse { col: got, .. }) => assert_eq!(got, col, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn written_coordinates_round_trip() {
        let p = parse_presentation("Z2xZ4").unwrap();
        let x = p.element(&[1, 2]).unwrap();
        assert_eq!(x, Element(vec![2, 1]));
        assert_eq!(p.written_coords(&x), vec![1, 2]);

        let p = parse_presentation("Z6xZ2").unwrap();
        for c0 in 0..6 {
            for c1 in 0..2 {
                let x = p.element(&[c0, c1]).unwrap();
                assert_eq!(p.written_coords(&x), vec![c0, c1]);
            }
        }
        assert!(p.element(&[6, 0]).is_err());
    }
}
