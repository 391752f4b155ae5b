//! Orbits of `Aut(G)` on the 2-torsion of a finite abelian group.
//!
//! Automorphisms preserve primary components and 2-torsion lives in the
//! 2-part, so only automorphisms of the 2-part are ever applied. Two
//! independent routes are provided: a breadth-first closure under a
//! generating set of automorphisms, and a backtracking search for an
//! automorphism pinned to send `a` to `b`.

use std::collections::{BTreeSet, HashMap};

use super::group::{prime_power, AbelianGroup, Element};

/// A group automorphism given by the images of the standard generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    images: Vec<Element>,
}

impl Automorphism {
    pub fn identity(g: &AbelianGroup) -> Self {
        let images = (0..g.rank())
            .map(|i| {
                let mut x = g.zero();
                x.0[i] = 1;
                x
            })
            .collect();
        Automorphism { images }
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn apply(&self, g: &AbelianGroup, x: &Element) -> Element {
        let mut acc = g.zero();
        for (img, &c) in self.images.iter().zip(&x.0) {
            for _ in 0..c {
                acc = g.add_unchecked(&acc, img);
            }
        }
        acc
    }

    /// True when the map is a bijective homomorphism of `g`.
    pub fn is_automorphism(&self, g: &AbelianGroup) -> bool {
        if self.images.len() != g.rank() || !self.images.iter().all(|x| g.contains(x)) {
            return false;
        }
        // Each generator image must be killed by the generator's order.
        for (img, &q) in self.images.iter().zip(g.factors()) {
            if g.element_order(img).map_or(true, |o| q % o != 0) {
                return false;
            }
        }
        let image: BTreeSet<Element> = g.elements().map(|x| self.apply(g, &x)).collect();
        image.len() as u64 == g.order()
    }
}

/// Elementary automorphism of a 2-part acting on full coordinates.
#[derive(Debug, Clone, Copy)]
enum Move {
    Swap(usize, usize),
    Unit(usize, u64),
    /// `e_src -> e_src + t * e_dst`, i.e. `x_dst += t * x_src`.
    Transvection { src: usize, dst: usize, t: u64 },
}

impl Move {
    fn apply(self, g: &AbelianGroup, x: &Element) -> Element {
        let q = g.factors();
        let mut y = x.clone();
        match self {
            Move::Swap(i, j) => y.0.swap(i, j),
            Move::Unit(i, u) => y.0[i] = (x.0[i] * u) % q[i],
            Move::Transvection { src, dst, t } => {
                y.0[dst] = (x.0[dst] + (x.0[src] % q[dst]) * t) % q[dst];
            }
        }
        y
    }
}

/// Generating set for the automorphisms of the 2-part: swaps of equal
/// factors, unit multipliers, and transvections scaled to respect orders.
fn two_part_moves(g: &AbelianGroup) -> Vec<Move> {
    let idx = g.primary_indices(2);
    let q = g.factors();
    let mut moves = Vec::new();
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            if q[i] == q[j] {
                moves.push(Move::Swap(i, j));
            }
        }
        for u in (3..q[i]).step_by(2) {
            moves.push(Move::Unit(i, u));
        }
        for &j in &idx {
            if i != j {
                let t = if q[j] <= q[i] { 1 } else { q[j] / q[i] };
                moves.push(Move::Transvection { src: i, dst: j, t });
            }
        }
    }
    moves
}

fn sort_orbits(mut orbits: Vec<Vec<Element>>) -> Vec<Vec<Element>> {
    for orbit in &mut orbits {
        orbit.sort();
    }
    orbits.sort_by(|a, b| a[0].cmp(&b[0]));
    orbits
}

/// Partition of `two_torsion(g)` into `Aut(g)`-orbits, each sorted, ordered
/// by lexicographically least representative.
pub fn aut_orbits_on_two_torsion(g: &AbelianGroup) -> Vec<Vec<Element>> {
    let torsion = g.two_torsion();
    if g.primary_indices(2).iter().all(|&i| g.factors()[i] == 2) {
        // Elementary 2-part: Aut acts transitively on nonzero 2-torsion.
        let (zero, rest): (Vec<Element>, Vec<Element>) =
            torsion.into_iter().partition(Element::is_zero);
        let mut orbits = vec![zero];
        if !rest.is_empty() {
            orbits.push(rest);
        }
        return sort_orbits(orbits);
    }

    let moves = two_part_moves(g);
    let mut seen: HashMap<Element, usize> = HashMap::new();
    let mut orbits: Vec<Vec<Element>> = Vec::new();
    for start in &torsion {
        if seen.contains_key(start) {
            continue;
        }
        let id = orbits.len();
        seen.insert(start.clone(), id);
        let mut orbit = vec![start.clone()];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head].clone();
            head += 1;
            for m in &moves {
                let y = m.apply(g, &x);
                if !seen.contains_key(&y) {
                    seen.insert(y.clone(), id);
                    orbit.push(y);
                }
            }
        }
        orbits.push(orbit);
    }
    sort_orbits(orbits)
}

/// The same partition, computed by pairwise pinned automorphism search.
pub fn aut_orbits_by_search(g: &AbelianGroup) -> Vec<Vec<Element>> {
    let mut remaining = g.two_torsion();
    let mut orbits = Vec::new();
    while !remaining.is_empty() {
        let a = remaining.remove(0);
        let (same, rest): (Vec<Element>, Vec<Element>) = remaining
            .into_iter()
            .partition(|b| find_automorphism(g, &a, b).is_some());
        let mut orbit = vec![a];
        orbit.extend(same);
        orbits.push(orbit);
        remaining = rest;
    }
    sort_orbits(orbits)
}

/// Searches for an automorphism `h` of `g` with `h(a) = b`.
///
/// Each primary component is handled separately; on a component where `a`
/// and `b` agree the identity is used.
pub fn find_automorphism(g: &AbelianGroup, a: &Element, b: &Element) -> Option<Automorphism> {
    if !g.contains(a) || !g.contains(b) {
        return None;
    }
    let mut images = Automorphism::identity(g).images;
    for p in g.primes() {
        let idx = g.primary_indices(p);
        let pa: Vec<u64> = idx.iter().map(|&i| a.0[i]).collect();
        let pb: Vec<u64> = idx.iter().map(|&i| b.0[i]).collect();
        if pa == pb {
            continue;
        }
        let part = AbelianGroup::from_prime_powers(idx.iter().map(|&i| g.factors()[i]).collect())
            .expect("primary component");
        let local = PinnedSearch::new(&part, Element(pa), Element(pb)).run()?;
        for (k, &i) in idx.iter().enumerate() {
            let mut img = g.zero();
            for (l, &j) in idx.iter().enumerate() {
                img.0[j] = local[k].0[l];
            }
            images[i] = img;
        }
    }
    Some(Automorphism { images })
}

/// Backtracking over generator images of a primary group, requiring each
/// partial assignment to be injective on the span it generates.
struct PinnedSearch<'g> {
    g: &'g AbelianGroup,
    a: Element,
    b: Element,
    /// Generators in assignment order: support of `a` first.
    order: Vec<usize>,
    support_len: usize,
    candidates: Vec<Vec<Element>>,
    images: Vec<Option<Element>>,
}

impl<'g> PinnedSearch<'g> {
    fn new(g: &'g AbelianGroup, a: Element, b: Element) -> Self {
        let n = g.rank();
        let (mut order, rest): (Vec<usize>, Vec<usize>) = (0..n).partition(|&i| a.0[i] != 0);
        let support_len = order.len();
        order.extend(rest);
        let all: Vec<Element> = g.elements().collect();
        let candidates = g
            .factors()
            .iter()
            .map(|&q| {
                all.iter()
                    .filter(|x| g.element_order(x).unwrap() == q)
                    .cloned()
                    .collect()
            })
            .collect();
        PinnedSearch {
            g,
            a,
            b,
            order,
            support_len,
            candidates,
            images: vec![None; n],
        }
    }

    fn run(mut self) -> Option<Vec<Element>> {
        let mut span = vec![false; self.g.order() as usize];
        span[0] = true;
        if self.step(0, &span) {
            Some(self.images.into_iter().map(Option::unwrap).collect())
        } else {
            None
        }
    }

    fn step(&mut self, depth: usize, span: &[bool]) -> bool {
        if depth == self.support_len && !self.pin_holds() {
            return false;
        }
        if depth == self.order.len() {
            return true;
        }
        let gen = self.order[depth];
        let q = self.g.factors()[gen];
        for cand in self.candidates[gen].clone() {
            let Some(next) = self.extend_span(span, &cand, q) else {
                continue;
            };
            self.images[gen] = Some(cand);
            if self.step(depth + 1, &next) {
                return true;
            }
        }
        self.images[gen] = None;
        false
    }

    fn pin_holds(&self) -> bool {
        let mut acc = self.g.zero();
        for &i in &self.order[..self.support_len] {
            let img = self.images[i].as_ref().unwrap();
            for _ in 0..self.a.0[i] {
                acc = self.g.add_unchecked(&acc, img);
            }
        }
        acc == self.b
    }

    /// Span of the old span plus `x`, or `None` if it grows by less than `q`.
    fn extend_span(&self, span: &[bool], x: &Element, q: u64) -> Option<Vec<bool>> {
        let members: Vec<Element> = span
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| self.g.element_at(i))
            .collect();
        let mut next = vec![false; span.len()];
        let mut count = 0usize;
        let mut mult = self.g.zero();
        for _ in 0..q {
            for s in &members {
                let idx = self.g.index_of(&self.g.add_unchecked(s, &mult));
                if !next[idx] {
                    next[idx] = true;
                    count += 1;
                }
            }
            mult = self.g.add_unchecked(&mult, x);
        }
        (count == members.len() * q as usize).then_some(next)
    }
}

/// Number of `Aut(G)`-orbits on 2-torsion for a 2-group of the given type,
/// read off from exponents: one orbit for zero plus one per distinct part.
pub fn two_torsion_orbit_count(g: &AbelianGroup) -> usize {
    let mut exps: Vec<u32> = g
        .primary_indices(2)
        .iter()
        .map(|&i| prime_power(g.factors()[i]).unwrap().1)
        .collect();
    exps.dedup();
    1 + exps.len()
}
