use super::table::{check_quasigroup, TernaryTable};
use super::TernaryOps;
use crate::abelian::{identify_abelian, BinaryTable, Identified};
use crate::error::{Error, Result};

/// The binary retract `x * y = [x b y]`.
#[derive(Debug, Clone)]
pub struct Retract {
    pub base: usize,
    pub table: BinaryTable,
    pub neutral: usize,
    pub inverse: Vec<usize>,
    pub commutative: bool,
}

impl Retract {
    /// Isomorphism type of an abelian retract.
    pub fn abelian_type(&self) -> Result<Identified> {
        identify_abelian(&self.table)
    }
}

/// Retract of a ternary group at `b`.
///
/// Fails when the structure is not a quasigroup or the retract is not a
/// group, either of which rules out a ternary group.
pub fn retract(s: &dyn TernaryOps, b: usize) -> Result<Retract> {
    let n = s.size();
    if b >= n {
        return Err(Error::Internal(format!("element {b} outside carrier of size {n}")));
    }
    if !check_quasigroup(s) {
        return Err(Error::NotTernaryGroup("not a quasigroup".into()));
    }
    let table = BinaryTable::from_fn(n, |x, y| s.bracket(x, b, y));
    let neutral = table
        .neutral()
        .ok_or_else(|| Error::NotTernaryGroup("retract has no neutral element".into()))?;
    let mut inverse = Vec::with_capacity(n);
    let mut commutative = true;
    for x in 0..n {
        let inv = (0..n)
            .find(|&y| table.op(x, y) == neutral && table.op(y, x) == neutral)
            .ok_or_else(|| Error::NotTernaryGroup(format!("{x} has no inverse in the retract")))?;
        inverse.push(inv);
        for y in 0..n {
            commutative &= table.op(x, y) == table.op(y, x);
            let xy = table.op(x, y);
            for z in 0..n {
                if table.op(xy, z) != table.op(x, table.op(y, z)) {
                    return Err(Error::NotTernaryGroup(format!(
                        "retract is not associative at ({x},{y},{z})"
                    )));
                }
            }
        }
    }
    Ok(Retract {
        base: b,
        table,
        neutral,
        inverse,
        commutative,
    })
}

/// Table of the Mal'cev operation `P(x,y,z) = [x y' z]`.
pub fn derived_malcev(s: &dyn TernaryOps) -> Result<TernaryTable> {
    if !check_quasigroup(s) {
        return Err(Error::NotTernaryGroup("not a quasigroup".into()));
    }
    let n = s.size();
    let skew: Vec<usize> = (0..n).map(|x| s.skew(x)).collect::<Result<_>>()?;
    TernaryTable::from_fn(n, |x, y, z| s.bracket(x, skew[y], z))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatReport {
    /// `[ab<bcd>] = <a<abc>[<abc>cd]>` for all quadruples.
    pub compatible: bool,
    pub counterexample: Option<[usize; 4]>,
    /// `[<abc>cd] = <[ab<bcd>]<bcd>d>` for all quadruples.
    pub companion: bool,
    pub companion_counterexample: Option<[usize; 4]>,
}

/// Exhaustive compatibility check of a flat operation `[ ]` and a virtual
/// operation `< >` on one carrier. Counterexamples are lexicographically least.
pub fn compatible(flat: &dyn TernaryOps, virt: &dyn TernaryOps) -> Result<CompatReport> {
    let n = flat.size();
    if virt.size() != n {
        return Err(Error::CarrierMismatch(format!(
            "carriers have sizes {n} and {}",
            virt.size()
        )));
    }
    let f = |x, y, z| flat.bracket(x, y, z);
    let v = |x, y, z| virt.bracket(x, y, z);
    let mut counterexample = None;
    let mut companion_counterexample = None;
    'outer: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let abc_v = v(a, b, c);
                for d in 0..n {
                    let bcd_v = v(b, c, d);
                    if counterexample.is_none() {
                        let lhs = f(a, b, bcd_v);
                        let rhs = v(a, abc_v, f(abc_v, c, d));
                        if lhs != rhs {
                            counterexample = Some([a, b, c, d]);
                        }
                    }
                    if companion_counterexample.is_none() {
                        let lhs = f(abc_v, c, d);
                        let rhs = v(f(a, b, bcd_v), bcd_v, d);
                        if lhs != rhs {
                            companion_counterexample = Some([a, b, c, d]);
                        }
                    }
                    if counterexample.is_some() && companion_counterexample.is_some() {
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(CompatReport {
        compatible: counterexample.is_none(),
        counterexample,
        companion: companion_counterexample.is_none(),
        companion_counterexample,
    })
}
