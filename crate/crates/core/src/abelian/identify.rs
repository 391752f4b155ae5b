//! Recognizing a finite abelian group given by its Cayley table.

use super::group::{factorize, AbelianGroup, Element};
use crate::error::{Error, Result};

/// A binary operation on `{0..n-1}` stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryTable {
    n: usize,
    table: Vec<usize>,
}

impl BinaryTable {
    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(op(x, y));
            }
        }
        BinaryTable { n, table }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    /// The two-sided neutral element, if any.
    pub fn neutral(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.op(e, x) == x && self.op(x, e) == x))
    }

    /// Verifies the abelian group axioms and returns the neutral element.
    pub fn check_abelian_group(&self) -> Result<usize> {
        let n = self.n;
        if n == 0 {
            return Err(Error::NotTernaryGroup("empty carrier".into()));
        }
        if let Some(bad) = self.table.iter().find(|&&v| v >= n) {
            return Err(Error::Internal(format!("table entry {bad} out of range")));
        }
        let e = self
            .neutral()
            .ok_or_else(|| Error::NotTernaryGroup("retract has no neutral element".into()))?;
        for x in 0..n {
            if !(0..n).any(|y| self.op(x, y) == e) {
                return Err(Error::NotTernaryGroup(format!("element {x} has no inverse")));
            }
            for y in 0..n {
                if self.op(x, y) != self.op(y, x) {
                    return Err(Error::NotTernaryGroup(format!(
                        "retract is not commutative at ({x},{y})"
                    )));
                }
                let xy = self.op(x, y);
                for z in 0..n {
                    if self.op(xy, z) != self.op(x, self.op(y, z)) {
                        return Err(Error::NotTernaryGroup(format!(
                            "retract is not associative at ({x},{y},{z})"
                        )));
                    }
                }
            }
        }
        Ok(e)
    }

    fn multiple(&self, e: usize, x: usize, k: u64) -> usize {
        (0..k).fold(e, |acc, _| self.op(acc, x))
    }

    fn order_of(&self, e: usize, x: usize) -> u64 {
        let mut acc = x;
        let mut k = 1;
        while acc != e {
            acc = self.op(acc, x);
            k += 1;
        }
        k
    }
}

/// An explicit isomorphism from a table group onto a normalized group.
#[derive(Debug, Clone)]
pub struct Identified {
    pub group: AbelianGroup,
    /// `labels[i]` is the normalized element carried by table element `i`.
    pub labels: Vec<Element>,
}

/// Determines the isomorphism type of an abelian group table and a labeling
/// of its elements by normalized coordinates.
pub fn identify_abelian(t: &BinaryTable) -> Result<Identified> {
    let e = t.check_abelian_group()?;
    let n = t.size();
    let orders: Vec<u64> = (0..n).map(|x| t.order_of(e, x)).collect();

    // Parts >= k of the p-type = log_p(|G[p^k]| / |G[p^(k-1)]|).
    let mut factors = Vec::new();
    for (p, exp) in factorize(n as u64) {
        let mut ge_k = Vec::new();
        let mut prev = 1usize;
        for k in 1..=exp {
            let pk = p.pow(k);
            let count = orders.iter().filter(|&&o| pk % o == 0).count();
            let mut ratio = count / prev;
            let mut parts = 0;
            while ratio > 1 {
                ratio /= p as usize;
                parts += 1;
            }
            ge_k.push(parts);
            prev = count;
        }
        // Conjugate back to a partition of exponents.
        let nparts = ge_k.first().copied().unwrap_or(0);
        for part in 0..nparts {
            let k = ge_k.iter().filter(|&&c| c > part).count() as u32;
            factors.push(p.pow(k));
        }
    }
    let group = AbelianGroup::from_prime_powers(factors)?;
    if group.order() != n as u64 {
        return Err(Error::Internal(format!(
            "type recognition produced {group} for a group of order {n}"
        )));
    }

    let basis = find_basis(t, e, &orders, group.factors())
        .ok_or_else(|| Error::Internal(format!("no basis of type {group} found")))?;

    let mut labels = vec![group.zero(); n];
    for x in group.elements() {
        let v = x
            .0
            .iter()
            .zip(&basis)
            .fold(e, |acc, (&c, &b)| t.op(acc, t.multiple(e, b, c)));
        labels[v] = x;
    }
    Ok(Identified { group, labels })
}

fn find_basis(t: &BinaryTable, e: usize, orders: &[u64], factors: &[u64]) -> Option<Vec<usize>> {
    fn go(
        t: &BinaryTable,
        e: usize,
        orders: &[u64],
        factors: &[u64],
        span: Vec<usize>,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let depth = chosen.len();
        if depth == factors.len() {
            return true;
        }
        let q = factors[depth];
        for cand in (0..t.size()).filter(|&x| orders[x] == q) {
            let mut next = Vec::with_capacity(span.len() * q as usize);
            let mut seen = vec![false; t.size()];
            let mut mult = e;
            let mut ok = true;
            'outer: for _ in 0..q {
                for &s in &span {
                    let v = t.op(s, mult);
                    if seen[v] {
                        ok = false;
                        break 'outer;
                    }
                    seen[v] = true;
                    next.push(v);
                }
                mult = t.op(mult, cand);
            }
            if !ok {
                continue;
            }
            chosen.push(cand);
            if go(t, e, orders, factors, next, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    go(t, e, orders, factors, vec![e], &mut chosen).then_some(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::abelian_group_types;

    #[test]
    fn recognizes_every_small_group() {
        for n in 1..=32 {
            for g in abelian_group_types(n) {
                let t = BinaryTable::from_fn(n as usize, |x, y| {
                    g.index_of(&g.add_unchecked(&g.element_at(x), &g.element_at(y)))
                });
                let id = identify_abelian(&t).unwrap();
                assert_eq!(id.group, g);
                // labels form an isomorphism
                for x in 0..n as usize {
                    for y in 0..n as usize {
                        assert_eq!(
                            id.labels[t.op(x, y)],
                            g.add_unchecked(&id.labels[x], &id.labels[y])
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_non_groups() {
        let t = BinaryTable::from_fn(3, |_, _| 0);
        assert!(identify_abelian(&t).is_err());
        // S3 is not abelian: permutations of 3 points in lexicographic order
        let perms = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let t = BinaryTable::from_fn(6, |x, y| {
            let c: Vec<usize> = (0..3).map(|i| perms[x][perms[y][i]]).collect();
            perms.iter().position(|p| p[..] == c[..]).unwrap()
        });
        assert!(matches!(
            identify_abelian(&t),
            Err(Error::NotTernaryGroup(_))
        ));
    }
}
