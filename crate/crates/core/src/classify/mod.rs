//! Isomorphism classes of knot-theoretic ternary groups of a given order.
//!
//! Every such group is `T((A,+),a)` with `2a = 0`, and two of them are
//! isomorphic exactly when the groups are and an automorphism carries one
//! translation to the other. Classes are therefore indexed by abelian group
//! types and `Aut`-orbits on 2-torsion.

mod table1;

pub use table1::{table1_compare, table1_row, AuditReport, AuditRow, TABLE1};

use crate::abelian::{
    aut_orbits_on_two_torsion, factorize, prime_power, AbelianGroup,
};
use crate::error::{Error, Result};
use crate::ternary::{iso_test, CanonicalKt, Structure, TernaryOps};

pub const DEFAULT_MAX_ORDER: u64 = 64;
pub const CLOSED_FORM_MAX_ORDER: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counts {
    pub all: u64,
    pub idempotent: u64,
    pub commutative: u64,
}

impl Counts {
    pub const fn new(all: u64, idempotent: u64, commutative: u64) -> Self {
        Counts {
            all,
            idempotent,
            commutative,
        }
    }
}

impl std::fmt::Display for Counts {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}/{}", self.all, self.idempotent, self.commutative)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub order: u64,
    pub representatives: Vec<CanonicalKt>,
    pub counts: Counts,
}

/// Partitions of `n` with parts in descending order, listed in reverse
/// lexicographic order (`[3]`, `[2,1]`, `[1,1,1]`).
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every abelian group of order `n` up to isomorphism, primes ascending and
/// each prime's partitions in reverse lexicographic order.
pub fn abelian_group_types(n: u64) -> Vec<AbelianGroup> {
    let mut types: Vec<Vec<u64>> = vec![Vec::new()];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for prefix in &types {
            for part in partitions(e) {
                let mut f = prefix.clone();
                f.extend(part.iter().map(|&k| p.pow(k)));
                next.push(f);
            }
        }
        types = next;
    }
    types
        .into_iter()
        .map(|f| AbelianGroup::from_prime_powers(f).expect("prime powers"))
        .collect()
}

fn check_order(n: u64, max: u64) -> Result<()> {
    if n == 0 || n > max {
        Err(Error::OrderOutOfRange { n, max })
    } else {
        Ok(())
    }
}

pub fn enumerate_kt(n: u64) -> Result<ClassificationReport> {
    enumerate_kt_bounded(n, DEFAULT_MAX_ORDER)
}

/// One representative `T(G, a)` per group type `G` of order `n` and per
/// `Aut(G)`-orbit of `a` on 2-torsion.
pub fn enumerate_kt_bounded(n: u64, max: u64) -> Result<ClassificationReport> {
    check_order(n, max)?;
    let mut representatives = Vec::new();
    let mut counts = Counts::new(0, 0, 0);
    for g in abelian_group_types(n) {
        for orbit in aut_orbits_on_two_torsion(&g) {
            let kt = CanonicalKt::new(g.clone(), orbit[0].clone())?;
            counts.all += 1;
            if kt.is_idempotent() {
                counts.idempotent += 1;
            }
            if g.is_elementary_two() {
                counts.commutative += 1;
            }
            representatives.push(kt);
        }
    }
    Ok(ClassificationReport {
        order: n,
        representatives,
        counts,
    })
}

fn partition_count(e: u32) -> u64 {
    partitions(e).len() as u64
}

/// Counts from the group-type formula: the idempotent count is the number of
/// abelian groups of order `n`; the total multiplies the odd part's group
/// count by, over 2-group types, one plus the number of distinct parts.
pub fn closed_form_counts(n: u64) -> Result<Counts> {
    check_order(n, CLOSED_FORM_MAX_ORDER)?;
    let fac = factorize(n);
    let idempotent: u64 = fac.iter().map(|&(_, e)| partition_count(e)).product();
    let odd: u64 = fac
        .iter()
        .filter(|&&(p, _)| p != 2)
        .map(|&(_, e)| partition_count(e))
        .product();
    let e2 = fac.iter().find(|&&(p, _)| p == 2).map_or(0, |&(_, e)| e);
    let two_part: u64 = partitions(e2)
        .iter()
        .map(|parts| {
            let mut distinct = parts.clone();
            distinct.dedup();
            1 + distinct.len() as u64
        })
        .sum();
    // The empty partition (odd n) contributes only the zero orbit.
    let two_part = if e2 == 0 { 1 } else { two_part };
    let commutative = match (n, prime_power(n)) {
        (1, _) => 1,
        (_, Some((2, _))) => 2,
        _ => 0,
    };
    Ok(Counts::new(odd * two_part, idempotent, commutative))
}

/// Independent classification: all candidates `T(G, a)` with `a` ranging
/// over the whole 2-torsion are merged into classes by pairwise `iso_test`.
/// Idempotence and commutativity are evaluated on the bracket directly.
pub fn classify_by_pairwise_iso(n: u64) -> Result<ClassificationReport> {
    check_order(n, DEFAULT_MAX_ORDER)?;
    let candidates: Vec<CanonicalKt> = abelian_group_types(n)
        .into_iter()
        .flat_map(|g| {
            g.two_torsion()
                .into_iter()
                .map(move |a| CanonicalKt::new(g.clone(), a).expect("2-torsion"))
        })
        .collect();
    let mut classes: Vec<CanonicalKt> = Vec::new();
    for cand in candidates {
        let s = Structure::Canonical(cand.clone());
        let mut known = false;
        for rep in &classes {
            if iso_test(&s, &Structure::Canonical(rep.clone()))?.isomorphic {
                known = true;
                break;
            }
        }
        if !known {
            classes.push(cand);
        }
    }
    let size = n as usize;
    let mut counts = Counts::new(classes.len() as u64, 0, 0);
    for kt in &classes {
        if (0..size).all(|x| kt.bracket(x, x, x) == x) {
            counts.idempotent += 1;
        }
        let commutative = (0..size).all(|x| {
            (0..size).all(|y| {
                (0..size).all(|z| {
                    let v = kt.bracket(x, y, z);
                    v == kt.bracket(y, x, z) && v == kt.bracket(x, z, y)
                })
            })
        });
        if commutative {
            counts.commutative += 1;
        }
    }
    Ok(ClassificationReport {
        order: n,
        representatives: classes,
        counts,
    })
}
