//! Finite posets and lattices with precomputed meet/join tables.
//!
//! Elements are opaque ids `0..n`. A lattice is built either from a family
//! of sets ordered by inclusion ([`Lattice::from_sets`]) or from an
//! arbitrary order relation ([`Lattice::from_leq`]). Everything in this
//! module is independent of representation theory.

mod cjr;
mod kappa;
mod semidistributive;

pub use cjr::JoinRep;
pub use kappa::KappaOrbit;
pub use semidistributive::{SdLaw, SdWitness};

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("a poset needs at least one element")]
    Empty,
    #[error("order is not reflexive at element {0}")]
    NotReflexive(usize),
    #[error("order is not antisymmetric on elements {0} and {1}")]
    NotAntisymmetric(usize, usize),
    #[error("order is not transitive on {0} <= {1} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("elements {x} and {y} have no unique {kind}")]
    NotALattice { x: usize, y: usize, kind: BoundKind },
    #[error("element {0} is not completely join-irreducible")]
    NotCji(usize),
    #[error("element {0} is not completely meet-irreducible")]
    NotCmi(usize),
    #[error("kappa({element}) has no unique maximum; maximal candidates {candidates:?}")]
    NoUniqueMax { element: usize, candidates: Vec<usize> },
    #[error("kappa*({element}) has no unique minimum; minimal candidates {candidates:?}")]
    NoUniqueMin { element: usize, candidates: Vec<usize> },
    #[error("element {element} has no canonical join representation (lower cover {cover})")]
    NotJoinSemidistributive { element: usize, cover: usize },
    #[error("element {element} has no canonical meet representation (upper cover {cover})")]
    NotMeetSemidistributive { element: usize, cover: usize },
    #[error("kappa-bar undefined at element {element}: {source}")]
    KappaUndefined {
        element: usize,
        #[source]
        source: Box<LatticeError>,
    },
    #[error("kappa-bar is not a permutation: elements {0} and {1} share an image")]
    NotPermutation(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl core::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BoundKind::Meet => f.write_str("greatest lower bound"),
            BoundKind::Join => f.write_str("least upper bound"),
        }
    }
}

/// A finite partial order on `0..n`, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    leq: Vec<bool>,
}

impl FinitePoset {
    pub fn new(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<FinitePoset, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut table = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = leq(i, j);
            }
        }
        let le = |i: usize, j: usize| table[i * n + j];
        for i in 0..n {
            if !le(i, i) {
                return Err(LatticeError::NotReflexive(i));
            }
            for j in i + 1..n {
                if le(i, j) && le(j, i) {
                    return Err(LatticeError::NotAntisymmetric(i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !le(i, j) || i == j {
                    continue;
                }
                for k in 0..n {
                    if le(j, k) && !le(i, k) {
                        return Err(LatticeError::NotTransitive(i, j, k));
                    }
                }
            }
        }
        Ok(FinitePoset { n, leq: table })
    }

    /// The order generated by the given cover pairs `(lower, upper)`.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<FinitePoset, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut t = vec![false; n * n];
        for i in 0..n {
            t[i * n + i] = true;
        }
        for &(a, b) in covers {
            t[a * n + b] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if !t[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if t[k * n + j] {
                        t[i * n + j] = true;
                    }
                }
            }
        }
        FinitePoset::new(n, |i, j| t[i * n + j])
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n + j]
    }
}

/// A finite lattice with meet and join tables, Hasse diagram and optional
/// edge labels.
#[derive(Clone, Debug)]
pub struct Lattice {
    poset: FinitePoset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
    covers: Vec<(usize, usize)>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    labels: BTreeMap<(usize, usize), usize>,
}

impl Lattice {
    pub fn from_poset(poset: FinitePoset) -> Result<Lattice, LatticeError> {
        let n = poset.len();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let m = extremal_bound(&poset, x, y, BoundKind::Meet)?;
                let j = extremal_bound(&poset, x, y, BoundKind::Join)?;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
                join[x * n + y] = j;
                join[y * n + x] = j;
            }
        }
        let bottom = (0..n).find(|&b| (0..n).all(|x| poset.leq(b, x))).ok_or(LatticeError::Empty)?;
        let top = (0..n).find(|&t| (0..n).all(|x| poset.leq(x, t))).ok_or(LatticeError::Empty)?;
        let covers: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| {
                x != y && poset.leq(x, y) && !(0..n).any(|z| z != x && z != y && poset.leq(x, z) && poset.leq(z, y))
            })
            .collect();
        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for &(x, y) in &covers {
            lower_covers[y].push(x);
            upper_covers[x].push(y);
        }
        Ok(Lattice { poset, meet, join, bottom, top, covers, lower_covers, upper_covers, labels: BTreeMap::new() })
    }

    pub fn from_leq(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Lattice, LatticeError> {
        Lattice::from_poset(FinitePoset::new(n, leq)?)
    }

    /// Sets ordered by inclusion. Sets must be distinct.
    pub fn from_sets(sets: &[Bits]) -> Result<Lattice, LatticeError> {
        Lattice::from_leq(sets.len(), |i, j| sets[i].is_subset(sets[j]))
    }

    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Lattice, LatticeError> {
        Lattice::from_poset(FinitePoset::from_covers(n, covers)?)
    }

    /// The order-dual lattice on the same ids. Labels are carried over with
    /// reversed edges.
    pub fn dual(&self) -> Lattice {
        let n = self.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.poset.leq(j, i);
            }
        }
        Lattice {
            poset: FinitePoset { n, leq },
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
            covers: self.covers.iter().map(|&(a, b)| (b, a)).collect(),
            lower_covers: self.upper_covers.clone(),
            upper_covers: self.lower_covers.clone(),
            labels: self.labels.iter().map(|(&(a, b), &l)| ((b, a), l)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.leq(x, y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.poset.leq(x, y)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    /// Join of a family; the empty join is the bottom element.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, it: I) -> usize {
        it.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a family; the empty meet is the top element.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, it: I) -> usize {
        it.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Cover pairs `(lower, upper)`.
    pub fn cover_edges(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn is_cover(&self, lower: usize, upper: usize) -> bool {
        self.lower_covers[upper].contains(&lower)
    }

    /// Labels a cover edge. Panics if `(lower, upper)` is not a cover.
    pub fn set_label(&mut self, lower: usize, upper: usize, label: usize) {
        assert!(self.is_cover(lower, upper), "({lower}, {upper}) is not a cover");
        self.labels.insert((lower, upper), label);
    }

    pub fn label(&self, lower: usize, upper: usize) -> Option<usize> {
        self.labels.get(&(lower, upper)).copied()
    }

    pub fn edge_labels(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.labels
    }

    /// Elements below (or equal to) `x`.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&z| self.leq(z, x)).collect()
    }
}

fn extremal_bound(p: &FinitePoset, x: usize, y: usize, kind: BoundKind) -> Result<usize, LatticeError> {
    let n = p.len();
    let bounds: Vec<usize> = (0..n)
        .filter(|&z| match kind {
            BoundKind::Meet => p.leq(z, x) && p.leq(z, y),
            BoundKind::Join => p.leq(x, z) && p.leq(y, z),
        })
        .collect();
    let best = bounds.iter().copied().find(|&b| {
        bounds.iter().all(|&o| match kind {
            BoundKind::Meet => p.leq(o, b),
            BoundKind::Join => p.leq(b, o),
        })
    });
    best.ok_or(LatticeError::NotALattice { x, y, kind })
}

/// The lattice of positive divisors of `n` ordered by divisibility, together
/// with the integer carried by each element id.
pub fn divisor_lattice(n: u64) -> (Lattice, Vec<u64>) {
    assert!(n > 0);
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let l = Lattice::from_leq(divisors.len(), |i, j| divisors[j].is_multiple_of(divisors[i]))
        .expect("divisibility is a lattice order");
    (l, divisors)
}
