use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use super::{Lattice, LatticeError};

/// One cycle of the κ̄ permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaOrbit {
    /// `elements[i + 1] = κ̄(elements[i])`, cyclically.
    pub elements: Vec<usize>,
    /// Size of the canonical join representation of each element.
    pub joinand_counts: Vec<usize>,
}

impl KappaOrbit {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Mean number of canonical joinands over the orbit.
    pub fn average(&self) -> Ratio<i64> {
        let total: usize = self.joinand_counts.iter().sum();
        Ratio::new(total as i64, self.len() as i64)
    }
}

impl Lattice {
    /// Elements with exactly one lower cover.
    pub fn cji_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.lower_covers(x).len() == 1).collect()
    }

    /// Elements with exactly one upper cover.
    pub fn cmi_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.upper_covers(x).len() == 1).collect()
    }

    /// The largest `x` with `j_* <= x` and `j ≰ x`.
    pub fn kappa(&self, j: usize) -> Result<usize, LatticeError> {
        let &[lower] = self.lower_covers(j) else {
            return Err(LatticeError::NotCji(j));
        };
        let candidates: Vec<usize> = (0..self.len()).filter(|&x| self.leq(lower, x) && !self.leq(j, x)).collect();
        let maximal: Vec<usize> =
            candidates.iter().copied().filter(|&x| !candidates.iter().any(|&y| self.lt(x, y))).collect();
        match maximal[..] {
            [m] => Ok(m),
            _ => Err(LatticeError::NoUniqueMax { element: j, candidates: maximal }),
        }
    }

    /// The smallest `x` with `x <= m^*` and `x ≰ m`.
    pub fn kappa_star(&self, m: usize) -> Result<usize, LatticeError> {
        let &[upper] = self.upper_covers(m) else {
            return Err(LatticeError::NotCmi(m));
        };
        let candidates: Vec<usize> = (0..self.len()).filter(|&x| self.leq(x, upper) && !self.leq(x, m)).collect();
        let minimal: Vec<usize> =
            candidates.iter().copied().filter(|&x| !candidates.iter().any(|&y| self.lt(y, x))).collect();
        match minimal[..] {
            [x] => Ok(x),
            _ => Err(LatticeError::NoUniqueMin { element: m, candidates: minimal }),
        }
    }

    /// Meet of κ over the canonical joinands of `x`; the bottom maps to the top.
    pub fn kappa_bar(&self, x: usize) -> Result<usize, LatticeError> {
        let wrap = |e| LatticeError::KappaUndefined { element: x, source: Box::new(e) };
        let rep = self.cjr(x).map_err(wrap)?;
        let mut acc = self.top();
        for &j in &rep.joinands {
            acc = self.meet(acc, self.kappa(j).map_err(wrap)?);
        }
        Ok(acc)
    }

    /// κ̄ on every element, checked to be a permutation.
    pub fn kappa_bar_table(&self) -> Result<Vec<usize>, LatticeError> {
        let table = (0..self.len()).map(|x| self.kappa_bar(x)).collect::<Result<Vec<_>, _>>()?;
        let mut preimage = vec![usize::MAX; self.len()];
        for (x, &y) in table.iter().enumerate() {
            if preimage[y] != usize::MAX {
                return Err(LatticeError::NotPermutation(preimage[y], x));
            }
            preimage[y] = x;
        }
        Ok(table)
    }

    /// The cycles of κ̄, each starting at its smallest id, listed by that id.
    pub fn kappa_bar_orbits(&self) -> Result<Vec<KappaOrbit>, LatticeError> {
        let table = self.kappa_bar_table()?;
        let mut seen = vec![false; self.len()];
        let mut orbits = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut elements = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                elements.push(x);
                x = table[x];
            }
            let joinand_counts = elements.iter().map(|&e| self.cjr(e).map(|r| r.len())).collect::<Result<_, _>>()?;
            orbits.push(KappaOrbit { elements, joinand_counts });
        }
        Ok(orbits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::Bits;
    use crate::lattice::divisor_lattice;

    // tors of 1 -> 2 with members S1 = 0, P1 = 1, S2 = 2:
    // 0: {}, 1: {S1}, 2: {S2}, 3: {S1, P1}, 4: all
    fn tors_a2() -> Lattice {
        let sets = [
            Bits::EMPTY,
            Bits::from_indices([0]),
            Bits::from_indices([2]),
            Bits::from_indices([0, 1]),
            Bits::from_indices([0, 1, 2]),
        ];
        Lattice::from_sets(&sets).unwrap()
    }

    #[test]
    fn kappa_on_a2() {
        let l = tors_a2();
        assert_eq!(l.cji_elements(), [1, 2, 3]);
        assert_eq!(l.kappa(2).unwrap(), 3);
        assert_eq!(l.kappa(3).unwrap(), 1);
        assert_eq!(l.kappa(1).unwrap(), 2);
        assert_eq!(l.kappa_star(3).unwrap(), 2);
        assert_eq!(l.kappa_star(2).unwrap(), 1);
        assert_eq!(l.kappa(4), Err(LatticeError::NotCji(4)));
        assert_eq!(l.kappa_bar(4).unwrap(), 0);
        assert_eq!(l.kappa_bar(0).unwrap(), 4);
    }

    #[test]
    fn a2_orbits() {
        let l = tors_a2();
        let orbits = l.kappa_bar_orbits().unwrap();
        assert_eq!(orbits.len(), 2);
        assert_eq!(orbits[0].elements, [0, 4]);
        assert_eq!(orbits[0].joinand_counts, [0, 2]);
        assert_eq!(orbits[1].elements, [1, 2, 3]);
        for o in &orbits {
            assert_eq!(o.average(), Ratio::from_integer(1));
        }
    }

    #[test]
    fn chain_kappa_star() {
        let l = Lattice::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(l.kappa_star(1).unwrap(), 2);
        assert_eq!(l.kappa(1).unwrap(), 0);
    }

    #[test]
    fn singleton_orbit() {
        let l = Lattice::from_sets(&[Bits::EMPTY]).unwrap();
        assert!(l.cji_elements().is_empty());
        let orbits = l.kappa_bar_orbits().unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].average(), Ratio::from_integer(0));
    }

    #[test]
    fn divisor_cji_are_prime_powers() {
        let (l, d) = divisor_lattice(12);
        let cji: Vec<u64> = l.cji_elements().into_iter().map(|i| d[i]).collect();
        assert_eq!(cji, [2, 3, 4]);
        for j in l.cji_elements() {
            assert_eq!(l.kappa_star(l.kappa(j).unwrap()).unwrap(), j);
        }
    }

    #[test]
    fn m3_has_no_kappa() {
        let l = Lattice::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert!(matches!(l.kappa(1), Err(LatticeError::NoUniqueMax { element: 1, .. })));
        assert!(matches!(l.kappa_bar(4), Err(LatticeError::KappaUndefined { element: 4, .. })));
    }
}
