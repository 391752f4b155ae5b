//! Region colorings of diagrams by knot-theoretic ternary groups.
//!
//! A coloring assigns a group element to every region so that
//! `c0 = [c1 c2 c3]` at each crossing, using the flat operation at flat
//! crossings and the virtual one at virtual crossings. With
//! `[xyz] = x - y + z + a` each relation is the linear equation
//! `c0 - c1 + c2 - c3 = a`, which gives a second, independent counter.

use std::collections::HashMap;
use std::fmt;

use crate::abelian::{gcd, smith_normal_form, AbelianGroup, Element, IntMatrix};
use crate::diagram::{validate, CrossingKind, Diagram};
use crate::error::{Error, Result};
use crate::ternary::{
    canonicalize, compatible, parse_kt_spec, CanonicalKt, TernaryOps, TernaryTable,
    DEFAULT_TABLE_BOUND,
};

pub const DEFAULT_BRUTE_BUDGET: u128 = 10_000_000;
pub const DEFAULT_COLORING_CAP: usize = 1 << 16;

/// Element indices of the carrier, one per region.
pub type Coloring = Vec<usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Brute,
    Affine,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Affine => "affine",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringReport {
    pub count: u128,
    pub colorings: Option<Vec<Coloring>>,
    pub method: Method,
}

/// `matrix * f = rhs` over the group, one row per crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringSystem {
    pub matrix: IntMatrix,
    pub rhs: Vec<Element>,
    pub group: AbelianGroup,
}

/// Checks the preconditions shared by every counter.
fn check_pair(d: &Diagram, flat: &CanonicalKt, virt: Option<&CanonicalKt>) -> Result<()> {
    let findings = validate(d);
    if !findings.is_empty() {
        return Err(Error::InvalidDiagram(findings.join("; ")));
    }
    if d.has_virtual() && virt.is_none() {
        return Err(Error::MissingVirtual);
    }
    if let Some(v) = virt {
        if v.group() != flat.group() {
            return Err(Error::CarrierMismatch(format!(
                "flat operation is on {}, virtual on {}",
                flat.group(),
                v.group()
            )));
        }
        if let Some(q) = compatible(flat, v)?.counterexample {
            return Err(Error::Incompatible(q));
        }
    }
    Ok(())
}

fn op_for<'a>(
    kind: CrossingKind,
    flat: &'a CanonicalKt,
    virt: Option<&'a CanonicalKt>,
) -> &'a CanonicalKt {
    match kind {
        CrossingKind::Flat => flat,
        CrossingKind::Virtual => virt.expect("checked by check_pair"),
    }
}

pub fn compile_system(
    d: &Diagram,
    flat: &CanonicalKt,
    virt: Option<&CanonicalKt>,
) -> Result<ColoringSystem> {
    check_pair(d, flat, virt)?;
    let mut matrix = IntMatrix::zeros(d.crossings.len(), d.regions);
    let mut rhs = Vec::with_capacity(d.crossings.len());
    for (row, c) in d.crossings.iter().enumerate() {
        for (k, &r) in c.corners.iter().enumerate() {
            matrix[(row, r)] += if k % 2 == 0 { 1 } else { -1 };
        }
        rhs.push(op_for(c.kind, flat, virt).translation().clone());
    }
    Ok(ColoringSystem {
        matrix,
        rhs,
        group: flat.group().clone(),
    })
}

/// Depth-first search over assignments in lexicographic order. Each crossing
/// is checked as soon as its last corner is colored.
struct Search<'a> {
    n: usize,
    checks: Vec<Vec<(usize, &'a CanonicalKt)>>,
    crossings: Vec<[usize; 4]>,
    f: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, region: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if region == self.f.len() {
            return visit(&self.f);
        }
        for x in 0..self.n {
            self.f[region] = x;
            let ok = self.checks[region].iter().all(|&(i, op)| {
                let [c0, c1, c2, c3] = self.crossings[i];
                self.f[c0] == op.bracket(self.f[c1], self.f[c2], self.f[c3])
            });
            if ok && !self.run(region + 1, visit) {
                return false;
            }
        }
        true
    }
}

fn search<'a>(
    d: &Diagram,
    flat: &'a CanonicalKt,
    virt: Option<&'a CanonicalKt>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    let mut checks = vec![Vec::new(); d.regions];
    for (i, c) in d.crossings.iter().enumerate() {
        let last = *c.corners.iter().max().expect("four corners");
        checks[last].push((i, op_for(c.kind, flat, virt)));
    }
    let mut s = Search {
        n: flat.size(),
        checks,
        crossings: d.crossings.iter().map(|c| c.corners).collect(),
        f: vec![0; d.regions],
    };
    s.run(0, visit);
}

fn assignment_space(d: &Diagram, flat: &CanonicalKt) -> u128 {
    (flat.order() as u128).saturating_pow(d.regions as u32)
}

/// Exact count by trying assignments and evaluating the bracket at every
/// crossing.
pub fn count_bruteforce(
    d: &Diagram,
    flat: &CanonicalKt,
    virt: Option<&CanonicalKt>,
    budget: u128,
) -> Result<ColoringReport> {
    check_pair(d, flat, virt)?;
    let needed = assignment_space(d, flat);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut count = 0u128;
    search(d, flat, virt, &mut |_| {
        count += 1;
        true
    });
    Ok(ColoringReport {
        count,
        colorings: None,
        method: Method::Brute,
    })
}

fn mod_i128(x: i128, d: u64) -> u64 {
    x.rem_euclid(d as i128) as u64
}

/// Exact count from the Smith normal form `U M V = S`, one cyclic factor
/// `Z_d` at a time.
pub fn count_affine(sys: &ColoringSystem) -> Result<ColoringReport> {
    let rows = sys.matrix.rows();
    let cols = sys.matrix.cols();
    let snf = smith_normal_form(&sys.matrix);
    let diag = snf.diagonal();
    let mut count: u128 = 1;
    let mul = |acc: u128, k: u64| acc.checked_mul(k as u128).ok_or(Error::CountOverflow);
    for (k, &d) in sys.group.factors().iter().enumerate() {
        let t: Vec<i128> = sys.rhs.iter().map(|e| e.0[k] as i128).collect();
        for i in 0..rows {
            let ut = snf
                .u
                .row(i)
                .iter()
                .zip(&t)
                .map(|(&u, &tj)| mod_i128(u as i128 * tj, d) as i128)
                .sum::<i128>();
            let ut = mod_i128(ut, d);
            if let Some(&s) = diag.get(i) {
                let g = gcd(s.unsigned_abs(), d);
                if !ut.is_multiple_of(g) {
                    count = 0;
                } else {
                    count = mul(count, g)?;
                }
            } else if ut != 0 {
                count = 0;
            }
        }
        for _ in rows..cols {
            count = mul(count, d)?;
        }
    }
    Ok(ColoringReport {
        count,
        colorings: None,
        method: Method::Affine,
    })
}

/// Count via the linear system.
pub fn count_colorings(
    d: &Diagram,
    flat: &CanonicalKt,
    virt: Option<&CanonicalKt>,
) -> Result<ColoringReport> {
    count_affine(&compile_system(d, flat, virt)?)
}

/// All colorings in lexicographic order; fails when there are more than `cap`.
pub fn enumerate_colorings(
    d: &Diagram,
    flat: &CanonicalKt,
    virt: Option<&CanonicalKt>,
    cap: usize,
) -> Result<Vec<Coloring>> {
    let count = count_colorings(d, flat, virt)?.count;
    if count > cap as u128 {
        return Err(Error::CapExceeded {
            count,
            cap: cap as u128,
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    search(d, flat, virt, &mut |f| {
        out.push(f.to_vec());
        true
    });
    if out.len() as u128 != count {
        return Err(Error::Internal(format!(
            "search found {} colorings, linear system {count}",
            out.len()
        )));
    }
    Ok(out)
}

/// The coloring set with the region-wise bracket.
#[derive(Debug, Clone)]
pub struct ColoringGroup {
    pub colorings: Vec<Coloring>,
    pub table: TernaryTable,
    pub kt: CanonicalKt,
}

/// Builds the ternary structure on the colorings of a flat-only diagram and
/// canonicalizes it.
pub fn coloring_group(d: &Diagram, flat: &CanonicalKt) -> Result<ColoringGroup> {
    if d.has_virtual() {
        return Err(Error::InvalidDiagram(
            "the coloring structure is defined for flat-only diagrams".into(),
        ));
    }
    let colorings = enumerate_colorings(d, flat, None, DEFAULT_TABLE_BOUND)?;
    if colorings.is_empty() {
        return Err(Error::EmptyColoringSet);
    }
    let index: HashMap<&[usize], usize> = colorings
        .iter()
        .enumerate()
        .map(|(i, c)| (c.as_slice(), i))
        .collect();
    let m = colorings.len();
    let mut cube = Vec::with_capacity(m * m * m);
    let mut scratch = vec![0usize; d.regions];
    for x in &colorings {
        for y in &colorings {
            for z in &colorings {
                for r in 0..d.regions {
                    scratch[r] = flat.bracket(x[r], y[r], z[r]);
                }
                let v = index.get(scratch.as_slice()).ok_or(Error::ClosureFailure)?;
                cube.push(*v as u32);
            }
        }
    }
    let table = TernaryTable::new(m, cube)?;
    let kt = canonicalize(&table)?.kt;
    Ok(ColoringGroup {
        colorings,
        table,
        kt,
    })
}

/// A catalog of `(flat, virtual)` operation pairs.
pub type Catalog = Vec<(CanonicalKt, Option<CanonicalKt>)>;

fn flat_catalog(specs: &[&str]) -> Catalog {
    specs
        .iter()
        .map(|s| (parse_kt_spec(s).expect("catalog spec"), None))
        .collect()
}

pub fn catalog_order2() -> Catalog {
    flat_catalog(&["Z2@0", "Z2@1"])
}

pub fn catalog_order4() -> Catalog {
    flat_catalog(&["Z4@0", "Z4@2", "Z2xZ2@(0,0)", "Z2xZ2@(1,1)"])
}

pub fn named_catalog(name: &str) -> Option<Catalog> {
    match name {
        "order2" => Some(catalog_order2()),
        "order4" => Some(catalog_order4()),
        _ => None,
    }
}

/// Coloring counts over a catalog, in catalog order.
pub fn invariant_vector(d: &Diagram, catalog: &Catalog) -> Result<Vec<u128>> {
    catalog
        .iter()
        .map(|(flat, virt)| Ok(count_colorings(d, flat, virt.as_ref())?.count))
        .collect()
}
