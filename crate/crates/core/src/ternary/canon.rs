use std::collections::HashMap;

use super::canonical::{parse_kt_spec, CanonicalKt};
use super::table::TernaryTable;
use super::TernaryOps;
use crate::abelian::{find_automorphism, identify_abelian, BinaryTable, Element};
use crate::error::{Error, Result};

/// A structure given either in canonical form or as an explicit table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Canonical(CanonicalKt),
    Table(TernaryTable),
}

impl Structure {
    /// A kt-spec such as `Z2xZ4@(1,0)`, otherwise the contents of a table file.
    pub fn parse(spec_or_table: &str) -> Result<Structure> {
        if spec_or_table.trim_start().starts_with("ternary") {
            TernaryTable::parse(spec_or_table).map(Structure::Table)
        } else {
            parse_kt_spec(spec_or_table).map(Structure::Canonical)
        }
    }

    pub fn ops(&self) -> &dyn TernaryOps {
        match self {
            Structure::Canonical(kt) => kt,
            Structure::Table(t) => t,
        }
    }

    /// Canonical form and the labeling of carrier indices by its elements.
    pub fn canonical_form(&self) -> Result<Canonicalized> {
        match self {
            Structure::Canonical(kt) => Ok(Canonicalized {
                kt: kt.clone(),
                labels: kt.group().elements().collect(),
            }),
            Structure::Table(t) => canonicalize(t),
        }
    }
}

impl TernaryOps for Structure {
    fn size(&self) -> usize {
        self.ops().size()
    }

    fn bracket(&self, x: usize, y: usize, z: usize) -> usize {
        self.ops().bracket(x, y, z)
    }

    fn skew(&self, x: usize) -> Result<usize> {
        self.ops().skew(x)
    }

    fn label(&self, x: usize) -> String {
        self.ops().label(x)
    }
}

#[derive(Debug, Clone)]
pub struct Canonicalized {
    pub kt: CanonicalKt,
    /// `labels[i]` is the group element carried by carrier element `i`.
    pub labels: Vec<Element>,
}

/// Recovers `T((A,+),a)` from a knot-theoretic table.
///
/// With `e = 0`, the retract `x + y = [x e' y]` at the skew `e'` of `e` is an
/// abelian group with neutral `e`, and the table must equal
/// `x - y + z + e'`. Failure of either step means the input is not
/// knot-theoretic.
pub fn canonicalize(t: &dyn TernaryOps) -> Result<Canonicalized> {
    let n = t.size();
    let not_kt = |why: String| Error::NotKnotTheoretic(why);
    let e = 0;
    let e_bar = t
        .skew(e)
        .map_err(|err| not_kt(format!("no skew for element 0 ({err})")))?;
    let plus = BinaryTable::from_fn(n, |x, y| t.bracket(x, e_bar, y));
    let id = identify_abelian(&plus).map_err(|err| not_kt(format!("retract: {err}")))?;
    if plus.neutral() != Some(e) {
        return Err(not_kt("retract neutral is not element 0".into()));
    }
    let a = id.labels[e_bar].clone();
    let kt = CanonicalKt::new(id.group.clone(), a).map_err(|err| not_kt(err.to_string()))?;

    let labels = id.labels;
    let index: Vec<usize> = labels.iter().map(|l| kt.group().index_of(l)).collect();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if index[t.bracket(x, y, z)] != kt.bracket_index(index[x], index[y], index[z]) {
                    return Err(not_kt(format!(
                        "[{x} {y} {z}] is not x - y + z + a in the retract"
                    )));
                }
            }
        }
    }
    Ok(Canonicalized { kt, labels })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoReport {
    pub isomorphic: bool,
    /// `witness[i]` is the image of carrier element `i` of the first structure.
    pub witness: Option<Vec<usize>>,
}

/// Decides isomorphism of two knot-theoretic structures.
///
/// The associated groups must have the same type, and some automorphism must
/// carry one translation to the other; a successful search yields a carrier
/// bijection that is checked to preserve the bracket.
pub fn iso_test(s1: &Structure, s2: &Structure) -> Result<IsoReport> {
    let c1 = s1.canonical_form()?;
    let c2 = s2.canonical_form()?;
    let no = IsoReport {
        isomorphic: false,
        witness: None,
    };
    if c1.kt.group() != c2.kt.group() {
        return Ok(no);
    }
    let g = c1.kt.group();
    let Some(h) = find_automorphism(g, c1.kt.translation(), c2.kt.translation()) else {
        return Ok(no);
    };
    let target: HashMap<&Element, usize> =
        c2.labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let witness: Vec<usize> = c1
        .labels
        .iter()
        .map(|l| target[&h.apply(g, l)])
        .collect();
    verify_homomorphism(s1.ops(), s2.ops(), &witness)?;
    Ok(IsoReport {
        isomorphic: true,
        witness: Some(witness),
    })
}

/// Checks that `map` is a bijection with `map([xyz]) = [map(x) map(y) map(z)]`.
pub fn verify_homomorphism(s1: &dyn TernaryOps, s2: &dyn TernaryOps, map: &[usize]) -> Result<()> {
    let n = s1.size();
    if map.len() != n || s2.size() != n {
        return Err(Error::Internal("witness has the wrong size".into()));
    }
    let mut hit = vec![false; n];
    for &v in map {
        if v >= n || std::mem::replace(&mut hit[v], true) {
            return Err(Error::Internal("witness is not a bijection".into()));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if map[s1.bracket(x, y, z)] != s2.bracket(map[x], map[y], map[z]) {
                    return Err(Error::Internal(format!(
                        "witness does not preserve [{x} {y} {z}]"
                    )));
                }
            }
        }
    }
    Ok(())
}
