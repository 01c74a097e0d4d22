//! Torsion classes as bitsets over a [`Catalog`].
//!
//! A subcategory is the set of catalog indices of its indecomposables;
//! closures are bitset fixpoints driven by the catalog's trace, reject and
//! extension tables.

mod extending;
mod verify;
mod wide;

pub use extending::{
    check_minimal_coextending, check_minimal_extending, minimal_coextending, minimal_extending, Minimality,
};
pub use verify::{verify_theorems, Check, Report, Status, THEOREMS};
pub use wide::{
    alpha, alpha_by_definition, alpha_prime, perp_tau_wide, perp_tau_wide_right, beta, beta_prime, delta, epsilon,
    perp01_left, perp01_right, simple_objects, wide_check, wide_check_deep,
};

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::catalog::Catalog;
use crate::error::Error;
use crate::lattice::Lattice;
use crate::quiver::{trace, Rep};

/// A set of catalog indices; by construction closed under summands.
pub type Subcat = Bits;

/// Smallest torsion class containing `s`: alternate the Gen step with
/// extension middle terms of member pairs until nothing changes.
pub fn tors_closure(cat: &Catalog, s: Subcat) -> Subcat {
    closure(cat, s, |cat, acc, x| cat.is_in_gen(acc, x))
}

/// Smallest torsion-free class containing `s`.
pub fn torf_closure(cat: &Catalog, s: Subcat) -> Subcat {
    closure(cat, s, |cat, acc, x| cat.is_in_cogen(acc, x))
}

/// Extension closure only.
pub fn filt_closure(cat: &Catalog, s: Subcat) -> Subcat {
    closure(cat, s, |_, _, _| false)
}

fn closure(cat: &Catalog, s: Subcat, step: impl Fn(&Catalog, Subcat, usize) -> bool) -> Subcat {
    let mut acc = s;
    loop {
        let mut next = acc;
        for x in cat.all().difference(acc) {
            if step(cat, acc, x) {
                next.insert(x);
            }
        }
        for m in acc {
            for k in acc {
                next = next.union(cat.ext_summands(m, k));
            }
        }
        if next == acc {
            return acc;
        }
        acc = next;
    }
}

/// `Filt(Gen(M))`.
pub fn filt_gen(cat: &Catalog, m: usize) -> Subcat {
    tors_closure(cat, Bits::single(m))
}

/// `Filt(Cogen(M))`.
pub fn filt_cogen(cat: &Catalog, m: usize) -> Subcat {
    torf_closure(cat, Bits::single(m))
}

/// `⊥S`: indecomposables with no nonzero map into `S`.
pub fn perp_left(cat: &Catalog, s: Subcat) -> Subcat {
    (0..cat.len()).filter(|&x| s.iter().all(|y| cat.hom(x, y) == 0)).collect()
}

/// `S^⊥`: indecomposables with no nonzero map from `S`.
pub fn perp_right(cat: &Catalog, s: Subcat) -> Subcat {
    (0..cat.len()).filter(|&x| s.iter().all(|y| cat.hom(y, x) == 0)).collect()
}

/// `tM -> M -> M/tM` for the torsion class `t`: returns `(tM, M/tM)`.
pub fn canonical_sequence(cat: &Catalog, t: Subcat, m: &Rep) -> (Rep, Rep) {
    let spec = cat.spec();
    let gens: Vec<Rep> = t.iter().map(|i| cat.rep(i).clone()).collect();
    let tm = trace(spec, &gens, m);
    (m.restrict(spec, &tm), m.quotient(spec, &tm))
}

/// Pairwise Hom-orthogonal sets of bricks, in lexicographic order of their
/// sorted index lists.
pub fn semibricks(cat: &Catalog) -> Vec<Subcat> {
    let bricks: Vec<usize> = cat.bricks().iter().collect();
    let mut out = Vec::new();
    fn grow(cat: &Catalog, bricks: &[usize], from: usize, cur: Bits, out: &mut Vec<Bits>) {
        out.push(cur);
        for (k, &b) in bricks.iter().enumerate().skip(from) {
            if cur.iter().all(|c| cat.hom(b, c) == 0 && cat.hom(c, b) == 0) {
                grow(cat, bricks, k + 1, cur.with(b), out);
            }
        }
    }
    grow(cat, &bricks, 0, Bits::EMPTY, &mut out);
    out
}

/// `κ(𝒯_M) = ⊥M`, computed on the module side.
pub fn kappa_rep(cat: &Catalog, brick: usize) -> Subcat {
    perp_left(cat, Bits::single(brick))
}

/// `⋂ ⊥M_α` over the bricks of a semibrick.
pub fn kappa_bar_rep(cat: &Catalog, semibrick: Subcat) -> Subcat {
    perp_left(cat, semibrick)
}

/// Every subset fixed by [`tors_closure`]. Exponential; refuses catalogs
/// with more than 24 indecomposables.
pub fn torsion_classes_by_scan(cat: &Catalog) -> Result<Vec<Subcat>, Error> {
    let n = cat.len();
    if n > 24 {
        return Err(Error::CapExceeded { what: "subset scan", needed: 1u64 << n.min(63), cap: 1 << 24 });
    }
    let mut out = Vec::new();
    for bits in 0u128..(1u128 << n) {
        let s = Bits(bits);
        if tors_closure(cat, s) == s {
            out.push(s);
        }
    }
    Ok(out)
}

/// The lattice of torsion classes with its brick labelling.
#[derive(Debug, Clone)]
pub struct TorsLattice {
    lattice: Lattice,
    classes: Vec<Subcat>,
    semibricks: Vec<Subcat>,
}

impl TorsLattice {
    /// Enumerate and label.
    pub fn build(cat: &Catalog) -> Result<TorsLattice, Error> {
        let mut tl = enumerate_torsion_classes(cat)?;
        label_covers(cat, &mut tl)?;
        Ok(tl)
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, i: usize) -> Subcat {
        self.classes[i]
    }

    pub fn classes(&self) -> &[Subcat] {
        &self.classes
    }

    /// Bricks of the canonical join representation of element `i`.
    pub fn semibrick_of(&self, i: usize) -> Subcat {
        self.semibricks[i]
    }

    pub fn index_of(&self, s: Subcat) -> Option<usize> {
        self.classes.iter().position(|&c| c == s)
    }

    /// Brick labelling the cover `lower ⋖ upper`.
    pub fn label(&self, lower: usize, upper: usize) -> Option<usize> {
        self.lattice.label(lower, upper)
    }

    /// Labels of the lower covers of `x`.
    pub fn lower_labels(&self, x: usize) -> Subcat {
        self.lattice.lower_covers(x).iter().filter_map(|&y| self.label(y, x)).collect()
    }

    /// Labels of the upper covers of `x`.
    pub fn upper_labels(&self, x: usize) -> Subcat {
        self.lattice.upper_covers(x).iter().filter_map(|&y| self.label(x, y)).collect()
    }
}

/// Torsion classes as images of semibricks under `⋁ FiltGen`, ordered by
/// size and then by bit pattern.
pub fn enumerate_torsion_classes(cat: &Catalog) -> Result<TorsLattice, Error> {
    let mut pairs: Vec<(Subcat, Subcat)> = semibricks(cat).into_iter().map(|sb| (tors_closure(cat, sb), sb)).collect();
    pairs.sort_by_key(|&(t, sb)| (t.len(), t, sb));
    for w in pairs.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(Error::SemibrickCollision { first: w[0].1.iter().collect(), second: w[1].1.iter().collect() });
        }
    }
    let (classes, semibricks): (Vec<Subcat>, Vec<Subcat>) = pairs.into_iter().unzip();
    let lattice = Lattice::from_sets(&classes)?;
    Ok(TorsLattice { lattice, classes, semibricks })
}

/// Label each cover `𝒯 ⋖ 𝒮` by the unique brick `B ∈ 𝒮 \ 𝒯` with
/// `Hom(𝒯, B) = 0` and `Filt(𝒯 ∪ {B}) = 𝒮`.
pub fn label_covers(cat: &Catalog, tl: &mut TorsLattice) -> Result<(), Error> {
    let edges = tl.lattice.cover_edges().to_vec();
    for (lo, hi) in edges {
        let (t, s) = (tl.classes[lo], tl.classes[hi]);
        let mut found = vec![];
        for b in s.difference(t).intersection(cat.bricks()) {
            let hom_free = t.iter().all(|x| cat.hom(x, b) == 0);
            if hom_free && tors_closure(cat, t.with(b)) == s {
                found.push(b);
            }
        }
        match found[..] {
            [b] => tl.lattice.set_label(lo, hi, b),
            _ => return Err(Error::LabelNotUnique { lower: lo, upper: hi, count: found.len() }),
        }
    }
    Ok(())
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::error::Budget;
    use crate::quiver::fixtures as q;

    pub fn a2() -> Catalog {
        Catalog::enumerate(&q::a2(), &[1, 1], Budget::default()).unwrap()
    }

    pub fn a3() -> Catalog {
        Catalog::enumerate(&q::a3(), &[1, 1, 1], Budget::default()).unwrap()
    }

    pub fn d4() -> Catalog {
        Catalog::enumerate(&q::d4(), &[1, 2, 1, 1], Budget::default()).unwrap()
    }

    pub fn a4_rel() -> Catalog {
        Catalog::enumerate(&q::a4_rel(), &[1, 1, 1, 1], Budget::default()).unwrap()
    }

    pub fn idx(cat: &Catalog, names: &[&str]) -> Bits {
        names.iter().map(|n| cat.index_of_name(n).unwrap_or_else(|| panic!("no module {n}"))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn a2_closures() {
        let c = a2();
        assert_eq!(tors_closure(&c, idx(&c, &["S1"])), idx(&c, &["S1"]));
        assert_eq!(tors_closure(&c, idx(&c, &["P1"])), idx(&c, &["S1", "P1"]));
        assert_eq!(tors_closure(&c, Bits::EMPTY), Bits::EMPTY);
        assert_eq!(tors_closure(&c, idx(&c, &["S1", "S2"])), c.all());
        assert_eq!(filt_gen(&c, c.index_of_name("S2").unwrap()), idx(&c, &["S2"]));
        assert_eq!(filt_cogen(&c, c.index_of_name("S2").unwrap()), idx(&c, &["S2"]));
        assert_eq!(torf_closure(&c, idx(&c, &["P1"])), idx(&c, &["S2", "P1"]));
        assert_eq!(perp_left(&c, idx(&c, &["S2"])), idx(&c, &["S1", "P1"]));
        assert_eq!(perp_left(&c, idx(&c, &["S1"])), idx(&c, &["S2"]));
        assert_eq!(perp_left(&c, Bits::EMPTY), c.all());
    }

    #[test]
    fn a2_lattice_and_labels() {
        let c = a2();
        let tl = TorsLattice::build(&c).unwrap();
        assert_eq!(tl.len(), 5);
        assert_eq!(tl.lattice().cover_edges().len(), 5);
        let at = |names: &[&str]| tl.index_of(idx(&c, names)).unwrap();
        let name = |lo, hi| c.name(tl.label(lo, hi).unwrap());
        assert_eq!(name(at(&[]), at(&["S1"])), "S1");
        assert_eq!(name(at(&[]), at(&["S2"])), "S2");
        assert_eq!(name(at(&["S1"]), at(&["S1", "P1"])), "P1");
        assert_eq!(name(at(&["S1", "P1"]), at(&["S1", "S2", "P1"])), "S2");
        assert_eq!(name(at(&["S2"]), at(&["S1", "S2", "P1"])), "S1");
        assert_eq!(tl.semibrick_of(tl.lattice().top()), idx(&c, &["S1", "S2"]));
    }

    #[test]
    fn semibrick_counts_match_scan() {
        for c in [a2(), a3(), d4(), a4_rel()] {
            let tl = enumerate_torsion_classes(&c).unwrap();
            let mut scan = torsion_classes_by_scan(&c).unwrap();
            scan.sort_by_key(|t| (t.len(), *t));
            assert_eq!(tl.classes(), &scan[..]);
        }
    }

    #[test]
    fn canonical_sequence_on_p1() {
        let c = a2();
        let p1 = c.rep(c.index_of_name("P1").unwrap());
        let (tm, fm) = canonical_sequence(&c, idx(&c, &["S2"]), p1);
        assert_eq!(c.find(&tm).unwrap(), c.index_of_name("S2"));
        assert_eq!(c.find(&fm).unwrap(), c.index_of_name("S1"));
        let (tm, fm) = canonical_sequence(&c, c.all(), p1);
        assert_eq!(&tm, p1);
        assert!(fm.is_zero());
    }
}
