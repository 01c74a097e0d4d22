use alloc::vec::Vec;

use super::{Lattice, LatticeError};

/// A join (or, for [`Lattice::cmr`], meet) representation of `target`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JoinRep {
    /// Sorted, duplicate-free.
    pub joinands: Vec<usize>,
    pub target: usize,
}

impl JoinRep {
    fn new(mut joinands: Vec<usize>, target: usize) -> JoinRep {
        joinands.sort_unstable();
        joinands.dedup();
        JoinRep { joinands, target }
    }

    pub fn len(&self) -> usize {
        self.joinands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.joinands.is_empty()
    }

    /// True if every joinand is below some element of `other`.
    pub fn is_lower_than(&self, other: &JoinRep, l: &Lattice) -> bool {
        self.joinands.iter().all(|&a| other.joinands.iter().any(|&b| l.leq(a, b)))
    }

    /// True if the joinands join to the target and none can be dropped.
    pub fn is_irredundant(&self, l: &Lattice) -> bool {
        if l.join_all(self.joinands.iter().copied()) != self.target {
            return false;
        }
        (0..self.joinands.len()).all(|skip| {
            let rest = self.joinands.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &a)| a);
            l.join_all(rest) != self.target
        })
    }
}

impl Lattice {
    /// Canonical join representation of `x`.
    ///
    /// For each lower cover `y` of `x` the set `{z <= x : z ∨ y = x}` is
    /// meet-closed in a join-semidistributive lattice; its minimum is the
    /// canonical joinand attached to `y`.
    pub fn cjr(&self, x: usize) -> Result<JoinRep, LatticeError> {
        let mut joinands = Vec::with_capacity(self.lower_covers(x).len());
        for &y in self.lower_covers(x) {
            let m = self.meet_all((0..self.len()).filter(|&z| self.leq(z, x) && self.join(z, y) == x));
            if self.join(m, y) != x {
                return Err(LatticeError::NotJoinSemidistributive { element: x, cover: y });
            }
            joinands.push(m);
        }
        let rep = JoinRep::new(joinands, x);
        if rep.len() != self.lower_covers(x).len() || !rep.is_irredundant(self) {
            let cover = self.lower_covers(x)[0];
            return Err(LatticeError::NotJoinSemidistributive { element: x, cover });
        }
        Ok(rep)
    }

    /// Canonical meet representation of `x` (the `joinands` field holds the
    /// meetands).
    pub fn cmr(&self, x: usize) -> Result<JoinRep, LatticeError> {
        self.dual().cjr(x).map_err(|e| match e {
            LatticeError::NotJoinSemidistributive { element, cover } => {
                LatticeError::NotMeetSemidistributive { element, cover }
            }
            other => other,
        })
    }

    /// Canonical join representation straight from the definition: the
    /// unique lowest irredundant join representation, or `None` when there
    /// is no unique lowest one. Exponential; meant for small lattices.
    pub fn brute_force_cjr(&self, x: usize) -> Option<JoinRep> {
        let candidates: Vec<usize> = (0..self.len()).filter(|&z| z != self.bottom() && self.leq(z, x)).collect();
        let mut reps = Vec::new();
        if x == self.bottom() {
            reps.push(JoinRep::new(Vec::new(), x));
        } else {
            let mut chosen = Vec::new();
            self.collect_irredundant(x, &candidates, 0, &mut chosen, &mut reps);
        }
        reps.iter().find(|r| reps.iter().all(|o| r.is_lower_than(o, self))).cloned()
    }

    fn collect_irredundant(
        &self,
        x: usize,
        candidates: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<JoinRep>,
    ) {
        for i in start..candidates.len() {
            chosen.push(candidates[i]);
            let j = self.join_all(chosen.iter().copied());
            let irredundant = (0..chosen.len()).all(|skip| {
                let rest = chosen.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &a)| a);
                self.join_all(rest) != j
            });
            // supersets of a redundant set stay redundant, and supersets of a
            // set already joining to x are redundant
            if irredundant {
                if j == x {
                    out.push(JoinRep::new(chosen.clone(), x));
                } else {
                    self.collect_irredundant(x, candidates, i + 1, chosen, out);
                }
            }
            chosen.pop();
        }
    }

    /// Brute-force canonical meet representation, dual of [`Lattice::brute_force_cjr`].
    pub fn brute_force_cmr(&self, x: usize) -> Option<JoinRep> {
        self.dual().brute_force_cjr(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::divisor_lattice;
    use alloc::vec;

    #[test]
    fn divisor_cjr_is_primary_decomposition() {
        let (l, d) = divisor_lattice(60);
        let idx = |v: u64| d.iter().position(|&x| x == v).unwrap();
        let rep = l.cjr(idx(60)).unwrap();
        let mut vals: Vec<u64> = rep.joinands.iter().map(|&i| d[i]).collect();
        vals.sort();
        assert_eq!(vals, vec![3, 4, 5]);
        let (l12, d12) = divisor_lattice(12);
        let brute = l12.brute_force_cjr(d12.len() - 1).unwrap();
        let mut vals: Vec<u64> = brute.joinands.iter().map(|&i| d12[i]).collect();
        vals.sort();
        assert_eq!(vals, vec![3, 4]);
    }

    #[test]
    fn bottom_has_empty_cjr() {
        let (l, _) = divisor_lattice(12);
        assert!(l.cjr(l.bottom()).unwrap().is_empty());
        assert!(l.brute_force_cjr(l.bottom()).unwrap().is_empty());
        assert!(l.cmr(l.top()).unwrap().is_empty());
    }

    #[test]
    fn m3_top_has_no_canonical_join() {
        let l = Lattice::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert!(l.brute_force_cjr(4).is_none());
        assert!(matches!(l.cjr(4), Err(LatticeError::NotJoinSemidistributive { element: 4, .. })));
    }
}
