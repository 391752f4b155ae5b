use std::fmt;

use super::table::TernaryTable;
use super::TernaryOps;
use crate::abelian::{parse_moduli, AbelianGroup, Cursor, Element, Presentation};
use crate::error::{Error, Result};

/// Default bound on carrier size for explicit tables.
pub const DEFAULT_TABLE_BOUND: usize = 64;

/// The knot-theoretic ternary group `T((A,+),a)`: `[xyz] = x - y + z + a`
/// with skew `x -> x + a`, where `a + a = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalKt {
    group: AbelianGroup,
    translation: Element,
}

impl CanonicalKt {
    /// Rejects translations of order greater than two.
    pub fn new(group: AbelianGroup, translation: Element) -> Result<Self> {
        let order = group.element_order(&translation)?;
        if order > 2 {
            return Err(Error::TranslationOrder {
                element: translation.to_string(),
                order,
            });
        }
        Ok(CanonicalKt { group, translation })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn translation(&self) -> &Element {
        &self.translation
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn is_idempotent(&self) -> bool {
        self.translation.is_zero()
    }

    /// `x - y + z + a`.
    pub fn eval(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        let d = self.group.sub(x, y)?;
        let s = self.group.add(&d, z)?;
        self.group.add(&s, &self.translation)
    }

    /// `x + a`.
    pub fn skew_of(&self, x: &Element) -> Result<Element> {
        self.group.add(x, &self.translation)
    }

    /// Explicit Cayley cube under lexicographic element enumeration.
    pub fn to_table(&self) -> Result<TernaryTable> {
        self.to_table_bounded(DEFAULT_TABLE_BOUND)
    }

    pub fn to_table_bounded(&self, bound: usize) -> Result<TernaryTable> {
        let n = self.group.order();
        if n > bound as u64 {
            return Err(Error::TooLarge {
                size: n as u128,
                bound: bound as u128,
            });
        }
        let n = n as usize;
        let els: Vec<Element> = self.group.elements().collect();
        let table = TernaryTable::from_fn(n, |x, y, z| {
            let v = self.eval(&els[x], &els[y], &els[z]).expect("same group");
            self.group.index_of(&v)
        })?;
        // Seed the skew cache from the closed form.
        table.set_skew((0..n).map(|x| self.skew_index(x)).collect())?;
        Ok(table)
    }

    /// `[xyz]` on enumeration indices without allocating.
    pub(crate) fn bracket_index(&self, mut x: usize, mut y: usize, mut z: usize) -> usize {
        let q = self.group.factors();
        let mut out = 0usize;
        let mut radix = 1usize;
        for i in (0..q.len()).rev() {
            let m = q[i] as usize;
            let (xi, yi, zi) = (x % m, y % m, z % m);
            x /= m;
            y /= m;
            z /= m;
            let v = (xi + (m - yi) + zi + self.translation.0[i] as usize) % m;
            out += v * radix;
            radix *= m;
        }
        out
    }

    fn skew_index(&self, x: usize) -> usize {
        // [x x x] = x + a
        self.bracket_index(x, x, x)
    }
}

impl TernaryOps for CanonicalKt {
    fn size(&self) -> usize {
        self.group.order() as usize
    }

    fn bracket(&self, x: usize, y: usize, z: usize) -> usize {
        self.bracket_index(x, y, z)
    }

    fn skew(&self, x: usize) -> Result<usize> {
        Ok(self.skew_index(x))
    }

    fn label(&self, x: usize) -> String {
        self.group.element_at(x).to_string()
    }
}

impl fmt::Display for CanonicalKt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.translation.0.as_slice() {
            [] => write!(f, "{}@0", self.group),
            [c] => write!(f, "{}@{c}", self.group),
            _ => write!(f, "{}@{}", self.group, self.translation),
        }
    }
}

/// Parses `Z2xZ4@(1,0)`, `Z4@2` or `Z1@0`. Coordinates follow the factor
/// order as written; the result is normalized.
pub fn parse_kt_spec(text: &str) -> Result<CanonicalKt> {
    let mut cur = Cursor::new(text);
    let moduli = parse_moduli(&mut cur)?;
    cur.expect('@')?;
    let elem_at = cur.pos;
    let mut coords = Vec::new();
    if cur.peek() == Some('(') {
        cur.pos += 1;
        if cur.peek() != Some(')') {
            loop {
                coords.push(cur.uint()?);
                match cur.peek() {
                    Some(',') => cur.pos += 1,
                    _ => break,
                }
            }
        }
        cur.expect(')')?;
    } else {
        coords.push(cur.uint()?);
    }
    if !cur.at_end() {
        return Err(cur.err(format!("unexpected `{}`", cur.peek().unwrap())));
    }
    // `Z1@0` names the only element of the trivial group.
    if moduli.is_empty() && coords == [0] {
        coords.clear();
    }
    let pres = Presentation::new(&moduli)?;
    if coords.len() != moduli.len() {
        return Err(Error::parse(
            1,
            elem_at + 1,
            format!(
                "element has {} coordinates, {} expects {}",
                coords.len(),
                pres.written_form(),
                moduli.len()
            ),
        ));
    }
    if let Some((c, n)) = coords.iter().zip(&moduli).find(|(c, n)| c >= n) {
        return Err(Error::parse(
            1,
            elem_at + 1,
            format!("coordinate {c} is out of range for Z{n}"),
        ));
    }
    let a = pres.element(&coords)?;
    CanonicalKt::new(pres.group().clone(), a)
}
