use std::fmt;

use crate::error::{Error, Result};

/// An element of an [`AbelianGroup`], one residue per primary factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub Vec<u64>);

impl Element {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A finite abelian group kept in primary decomposition.
///
/// Factors are prime powers sorted by prime ascending, then exponent
/// descending, so two groups are isomorphic exactly when their factor lists
/// are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<u64>,
    order: u64,
}

/// Splits `n >= 1` into `(p, k)` pairs with ascending primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Returns `(p, k)` when `q = p^k` with `k >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn factor_key(q: u64) -> (u64, std::cmp::Reverse<u32>) {
    let (p, k) = prime_power(q).expect("factors are prime powers");
    (p, std::cmp::Reverse(k))
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            factors: Vec::new(),
            order: 1,
        }
    }

    /// Builds a group from prime-power factors given in any order.
    pub fn from_prime_powers(mut factors: Vec<u64>) -> Result<Self> {
        for &q in &factors {
            if prime_power(q).is_none() {
                return Err(Error::InvalidGroup(format!("{q} is not a prime power")));
            }
        }
        factors.sort_by_key(|&q| factor_key(q));
        let order = factors
            .iter()
            .try_fold(1u64, |acc, &q| acc.checked_mul(q))
            .ok_or_else(|| Error::InvalidGroup("order overflows u64".into()))?;
        Ok(AbelianGroup { factors, order })
    }

    /// Builds the direct product of cyclic groups `Z_n` for each modulus,
    /// splitting each one into its prime-power parts.
    pub fn from_cyclic(moduli: &[u64]) -> Result<Self> {
        let mut factors = Vec::new();
        for &n in moduli {
            if n == 0 {
                return Err(Error::InvalidGroup("modulus 0".into()));
            }
            factors.extend(factorize(n).into_iter().map(|(p, k)| p.pow(k)));
        }
        Self::from_prime_powers(factors)
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// True for `Z_2^k`, including the trivial group.
    pub fn is_elementary_two(&self) -> bool {
        self.factors.iter().all(|&q| q == 2)
    }

    pub fn zero(&self) -> Element {
        Element(vec![0; self.factors.len()])
    }

    pub fn contains(&self, x: &Element) -> bool {
        x.0.len() == self.factors.len() && x.0.iter().zip(&self.factors).all(|(c, q)| c < q)
    }

    pub fn element(&self, coords: Vec<u64>) -> Result<Element> {
        let x = Element(coords);
        self.check(&x)?;
        Ok(x)
    }

    fn check(&self, x: &Element) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                element: x.to_string(),
                group: self.to_string(),
            })
        }
    }

    pub fn add(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.add_unchecked(x, y))
    }

    pub fn neg(&self, x: &Element) -> Result<Element> {
        self.check(x)?;
        Ok(self.neg_unchecked(x))
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.add_unchecked(x, &self.neg_unchecked(y)))
    }

    pub(crate) fn add_unchecked(&self, x: &Element, y: &Element) -> Element {
        Element(
            self.factors
                .iter()
                .zip(x.0.iter().zip(&y.0))
                .map(|(q, (a, b))| (a + b) % q)
                .collect(),
        )
    }

    pub(crate) fn neg_unchecked(&self, x: &Element) -> Element {
        Element(
            self.factors
                .iter()
                .zip(&x.0)
                .map(|(q, a)| (q - a) % q)
                .collect(),
        )
    }

    /// `k * x` for a possibly negative multiplier.
    pub fn scale(&self, k: i64, x: &Element) -> Result<Element> {
        self.check(x)?;
        Ok(Element(
            self.factors
                .iter()
                .zip(&x.0)
                .map(|(&q, &a)| {
                    let m = (k as i128).rem_euclid(q as i128) as u128;
                    ((m * a as u128) % q as u128) as u64
                })
                .collect(),
        ))
    }

    /// Least `m >= 1` with `m * x = 0`.
    pub fn element_order(&self, x: &Element) -> Result<u64> {
        self.check(x)?;
        Ok(self
            .factors
            .iter()
            .zip(&x.0)
            .map(|(&q, &a)| q / gcd(q, a))
            .fold(1, lcm))
    }

    /// Position of `x` in lexicographic enumeration (last coordinate fastest).
    pub fn index_of(&self, x: &Element) -> usize {
        x.0.iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&c, &q)| acc * q as usize + c as usize)
    }

    pub fn element_at(&self, mut index: usize) -> Element {
        let mut coords = vec![0; self.factors.len()];
        for (slot, &q) in coords.iter_mut().zip(&self.factors).rev() {
            *slot = (index % q as usize) as u64;
            index /= q as usize;
        }
        Element(coords)
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order as usize).map(move |i| self.element_at(i))
    }

    /// Elements with `x + x = 0`, in lexicographic order.
    pub fn two_torsion(&self) -> Vec<Element> {
        // Per factor the admissible residues are 0 and, for even q, q/2.
        let choices: Vec<Vec<u64>> = self
            .factors
            .iter()
            .map(|&q| if q % 2 == 0 { vec![0, q / 2] } else { vec![0] })
            .collect();
        let mut out = vec![Vec::new()];
        for opts in &choices {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u64>| {
                    opts.iter().map(move |&c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(Element).collect()
    }

    /// Divisibility chain `d1 | d2 | ...` with product equal to the order.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let mut by_prime: Vec<Vec<u64>> = Vec::new();
        let mut last_prime = 0;
        for &q in &self.factors {
            let (p, _) = prime_power(q).expect("prime power");
            if p != last_prime {
                by_prime.push(Vec::new());
                last_prime = p;
            }
            by_prime.last_mut().unwrap().push(q);
        }
        let len = by_prime.iter().map(Vec::len).max().unwrap_or(0);
        // The largest invariant factor collects the largest power of every prime.
        let mut out = vec![1u64; len];
        for powers in &by_prime {
            for (i, &q) in powers.iter().enumerate() {
                out[len - 1 - i] *= q;
            }
        }
        out
    }

    /// Indices of the factors that are powers of `p`.
    pub fn primary_indices(&self, p: u64) -> Vec<usize> {
        self.factors
            .iter()
            .enumerate()
            .filter(|(_, &q)| q % p == 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Distinct primes dividing the order, ascending.
    pub fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self
            .factors
            .iter()
            .map(|&q| prime_power(q).unwrap().0)
            .collect();
        ps.dedup();
        ps
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("Z1");
        }
        for (i, q) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "Z{q}")?;
        }
        Ok(())
    }
}
