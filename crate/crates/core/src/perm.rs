//! Permutations of `{0, .., n-1}` and explicitly listed permutation groups.
//!
//! Groups are stored as sorted element lists. Every group in this crate lives
//! inside `S_6` or `S_6 x S_6`, so closure and conjugacy are computed by plain
//! enumeration.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 256;

/// A bijection of `{0, .., n-1}` stored as its image sequence.
///
/// Composition follows function notation: `(p * q)(x) = p(q(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE, "degree {n} too large");
        Permutation {
            images: (0..n).map(|i| i as u8).collect(),
        }
    }

    pub fn from_images<I>(images: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let images: Vec<usize> = images.into_iter().collect();
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotABijection { degree: n, images });
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
    }

    /// Builds from a byte slice that is already known to be a bijection.
    pub(crate) fn from_bytes_unchecked(images: &[u8]) -> Self {
        debug_assert!(is_bijection(images));
        Permutation {
            images: images.to_vec(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub(crate) fn bytes(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn commutes(&self, other: &Permutation) -> bool {
        self.degree() == other.degree()
            && (0..self.degree()).all(|x| self.apply(other.apply(x)) == other.apply(self.apply(x)))
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut out = vec![0u8; self.degree()];
        for x in 0..self.degree() {
            out[g.apply(x)] = g.images[self.apply(x)];
        }
        Permutation { images: out }
    }

    /// Cycles with each cycle rotated to start at its minimum, ordered by
    /// their minima. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in non-increasing order (fixed points included).
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, lcm)
    }

    /// Parses `id` or a product of disjoint cycles such as `(1,4)(2,3)`.
    pub fn from_cycles(n: usize, text: &str) -> Result<Permutation> {
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(n));
        }
        let syntax = |reason: &str| Error::CycleSyntax {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        let mut images: Vec<usize> = (0..n).collect();
        if trimmed == "id" || trimmed.is_empty() {
            return Permutation::from_images(images);
        }
        let mut moved = vec![false; n];
        let mut rest = trimmed;
        while !rest.is_empty() {
            rest = rest.trim_start();
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| syntax("expected '('"))?;
            let close = body.find(')').ok_or_else(|| syntax("unclosed cycle"))?;
            let mut cycle = Vec::new();
            for tok in body[..close].split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(syntax("empty point"));
                }
                let p: usize = tok
                    .parse()
                    .map_err(|_| syntax(&format!("bad point {tok:?}")))?;
                if p >= n {
                    return Err(Error::PointOutOfRange { point: p, degree: n });
                }
                if moved[p] {
                    return Err(syntax(&format!("point {p} repeated")));
                }
                moved[p] = true;
                cycle.push(p);
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + 1) % cycle.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_images(images)
    }

    pub fn to_cycles(&self) -> String {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return "id".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            s.push_str(&parts.join(","));
            s.push(')');
        }
        s
    }
}

pub(crate) fn is_bijection(images: &[u8]) -> bool {
    let n = images.len();
    let mut seen = vec![false; n];
    for &x in images {
        let x = x as usize;
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycles())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self.to_cycles())
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked version.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("degree mismatch in permutation product")
    }
}

/// All permutations of degree `n` in lexicographic order of image sequences.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Permutation {
            images: current.clone(),
        });
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

/// An element type that can live in an explicitly listed group.
pub trait GroupElement: Clone + Ord + fmt::Debug {
    fn degree(&self) -> usize;
    fn identity_of(degree: usize) -> Self;
    /// `self ∘ other`.
    fn product(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
}

impl GroupElement for Permutation {
    fn degree(&self) -> usize {
        Permutation::degree(self)
    }
    fn identity_of(degree: usize) -> Self {
        Permutation::identity(degree)
    }
    fn product(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
}

/// Pairs acting componentwise, as in subgroups of `S(X) x S(X)`.
pub type PermPair = (Permutation, Permutation);

impl GroupElement for PermPair {
    fn degree(&self) -> usize {
        self.0.degree()
    }
    fn identity_of(degree: usize) -> Self {
        (Permutation::identity(degree), Permutation::identity(degree))
    }
    fn product(&self, other: &Self) -> Self {
        (&self.0 * &other.0, &self.1 * &other.1)
    }
    fn inv(&self) -> Self {
        (self.0.inverse(), self.1.inverse())
    }
}

/// A finite group given by generators and its full, sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group<E> {
    degree: usize,
    generators: Vec<E>,
    elements: Vec<E>,
}

pub type PermGroup = Group<Permutation>;
pub type PermPairGroup = Group<PermPair>;

impl<E: GroupElement> Group<E> {
    /// The subgroup generated by `generators`.
    pub fn closure(degree: usize, generators: Vec<E>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let id = E::identity_of(degree);
        let mut set = BTreeSet::new();
        set.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(e) = frontier.pop() {
            for g in &generators {
                let next = e.product(g);
                if set.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        Ok(Group {
            degree,
            generators,
            elements: set.into_iter().collect(),
        })
    }

    /// Wraps a sorted, closed element list and picks a small generating set
    /// greedily in element order.
    fn from_closed_elements(degree: usize, elements: Vec<E>) -> Self {
        let mut generators: Vec<E> = Vec::new();
        let mut span: BTreeSet<E> = BTreeSet::new();
        span.insert(E::identity_of(degree));
        for e in &elements {
            if span.contains(e) {
                continue;
            }
            generators.push(e.clone());
            let sub = Group::closure(degree, generators.clone()).expect("degrees agree");
            span = sub.elements.into_iter().collect();
            if span.len() == elements.len() {
                break;
            }
        }
        Group {
            degree,
            generators,
            elements,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn contains(&self, e: &E) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        commute_pairwise(&self.generators)
    }

    /// Conjugacy classes, each sorted with its minimal element (the
    /// representative) first; classes are ordered by representative.
    pub fn conjugacy_classes(&self) -> Vec<Vec<E>> {
        let mut assigned = vec![false; self.elements.len()];
        let inverses: Vec<E> = self.elements.iter().map(E::inv).collect();
        let mut classes = Vec::new();
        for (i, e) in self.elements.iter().enumerate() {
            if assigned[i] {
                continue;
            }
            let mut class = BTreeSet::new();
            for (g, g_inv) in self.elements.iter().zip(&inverses) {
                class.insert(g.product(e).product(g_inv));
            }
            for c in &class {
                let idx = self.elements.binary_search(c).expect("group is closed");
                assigned[idx] = true;
            }
            classes.push(class.into_iter().collect::<Vec<_>>());
        }
        classes
    }

    /// `{g ∈ G : g p = p g}`.
    pub fn centralizer(&self, p: &E) -> Result<Self> {
        if !self.contains(p) {
            return Err(Error::NotInGroup(format!("{p:?}")));
        }
        let elements: Vec<E> = self
            .elements
            .iter()
            .filter(|g| g.product(p) == p.product(g))
            .cloned()
            .collect();
        Ok(Group::from_closed_elements(self.degree, elements))
    }

    /// Checks closure under products and inverses, and that the identity and
    /// all generators are listed.
    pub fn is_closed(&self) -> bool {
        let id = E::identity_of(self.degree);
        self.contains(&id)
            && self.generators.iter().all(|g| self.contains(g))
            && self.elements.iter().all(|a| {
                self.contains(&a.inv()) && self.elements.iter().all(|b| self.contains(&a.product(b)))
            })
    }
}

impl PermGroup {
    pub fn symmetric(n: usize) -> PermGroup {
        let elements = all_permutations(n);
        let mut generators = Vec::new();
        if n >= 2 {
            let mut transposition: Vec<usize> = (0..n).collect();
            transposition.swap(0, 1);
            generators.push(Permutation::from_images(transposition).unwrap());
        }
        if n >= 3 {
            let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            generators.push(Permutation::from_images(cycle).unwrap());
        }
        Group {
            degree: n,
            generators,
            elements,
        }
    }
}

/// True when every pair in `items` commutes.
pub fn commute_pairwise<E: GroupElement>(items: &[E]) -> bool {
    items.iter().enumerate().all(|(i, a)| {
        items[i + 1..]
            .iter()
            .all(|b| a.product(b) == b.product(a))
    })
}
