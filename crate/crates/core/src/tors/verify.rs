//! Mechanical checks of the structural statements relating the lattice of
//! torsion classes to bricks, perpendicular categories and wide
//! subcategories.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::Ratio;

use super::{
    alpha, alpha_by_definition, perp_tau_wide, perp_tau_wide_right, epsilon, filt_cogen, filt_gen, kappa_bar_rep,
    kappa_rep, minimal_coextending, minimal_extending, perp_left, perp_right, simple_objects, wide_check, Subcat,
    TorsLattice,
};
use crate::bits::Bits;
use crate::catalog::Catalog;
use crate::error::Error;
use crate::lattice::KappaOrbit;

/// Check names accepted by [`verify_theorems`].
pub const THEOREMS: &[&str] = &[
    "semidistributive",
    "cjr",
    "A",
    "kappa-tors",
    "labels",
    "left-perp",
    "left-perp-2",
    "simple-coext",
    "wide-many-perp",
    "D",
    "C",
    "E",
    "antiso",
    "perp-tau",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Hypotheses do not apply (e.g. a hereditary-only statement on a bound
    /// quiver algebra).
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Counterexamples (or the reason for skipping), human-readable.
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub indecomposables: usize,
    pub bricks: usize,
    pub torsion_classes: usize,
    pub checks: Vec<Check>,
    pub orbits: Vec<KappaOrbit>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Outcome of one check body: `None` when the hypotheses do not apply,
/// otherwise the list of witnesses (empty means pass).
type Outcome = Result<Option<Vec<String>>, Error>;

/// Runs the named checks (all of [`THEOREMS`] when `names` is empty).
/// Errors raised inside a check become failures carrying the error text.
///
/// `alpha_depth`: when set, `α` is computed from its definition with
/// sources ranging over sums of up to that many indecomposables;
/// otherwise from the canonical joinand bricks.
pub fn verify_theorems(cat: &Catalog, tl: &TorsLattice, names: &[&str], alpha_depth: Option<usize>) -> Report {
    let v = Verifier { cat, tl, alpha_depth };
    let selected: Vec<&str> = if names.is_empty() { THEOREMS.to_vec() } else { names.to_vec() };
    let mut checks = Vec::new();
    for name in selected {
        let outcome = match name {
            "semidistributive" => v.semidistributive(),
            "cjr" => v.cjr(),
            "A" => v.kappa_perp(),
            "kappa-tors" => v.kappa_tors(),
            "labels" => v.labels(),
            "left-perp" => v.left_perp(),
            "left-perp-2" => v.left_perp_2(),
            "simple-coext" => v.simple_coext(),
            "wide-many-perp" => v.wide_many_perp(),
            "D" => v.alpha_epsilon(),
            "C" => v.kappa_bar_squared(),
            "E" => v.orbit_average(),
            "antiso" => v.antiso(),
            "perp-tau" => v.perp_tau(),
            other => Ok(Some(alloc::vec![format!("unknown check `{other}`")])),
        };
        let (status, witnesses) = match outcome {
            Ok(None) => (Status::Skipped, alloc::vec![String::from("needs a hereditary algebra")]),
            Ok(Some(w)) if w.is_empty() => (Status::Pass, w),
            Ok(Some(w)) => (Status::Fail, w),
            Err(e) => (Status::Fail, alloc::vec![format!("{e}")]),
        };
        checks.push(Check { name: String::from(name), status, witnesses });
    }
    Report {
        indecomposables: cat.len(),
        bricks: cat.bricks().len(),
        torsion_classes: tl.len(),
        checks,
        orbits: tl.lattice().kappa_bar_orbits().unwrap_or_default(),
    }
}

struct Verifier<'a> {
    cat: &'a Catalog,
    tl: &'a TorsLattice,
    alpha_depth: Option<usize>,
}

impl Verifier<'_> {
    fn name(&self, s: Subcat) -> String {
        self.cat.subcat_name(s)
    }

    fn element(&self, s: Subcat) -> Result<usize, Error> {
        self.tl
            .index_of(s)
            .ok_or_else(|| Error::IncompleteCatalog(format!("{} is not a listed torsion class", self.name(s))))
    }

    fn alpha(&self, x: usize) -> Result<Subcat, Error> {
        match self.alpha_depth {
            Some(k) => alpha_by_definition(self.cat, self.tl.class(x), k),
            None => Ok(alpha(self.cat, self.tl, x)),
        }
    }

    fn hereditary(&self) -> bool {
        self.cat.spec().is_hereditary()
    }

    fn semidistributive(&self) -> Outcome {
        Ok(Some(match self.tl.lattice().semidistributivity_witness() {
            None => Vec::new(),
            Some(w) => alloc::vec![format!("{w:?}")],
        }))
    }

    /// The canonical joinands of each class are the `FiltGen` of its bricks.
    fn cjr(&self) -> Outcome {
        let l = self.tl.lattice();
        let mut out = Vec::new();
        for x in 0..l.len() {
            let rep = l.cjr(x)?;
            let want: Result<Vec<usize>, Error> =
                self.tl.semibrick_of(x).iter().map(|b| self.element(filt_gen(self.cat, b))).collect();
            let mut want = want?;
            want.sort_unstable();
            if rep.joinands != want {
                out.push(format!(
                    "{}: joinands {:?}, bricks give {:?}",
                    self.name(self.tl.class(x)),
                    rep.joinands,
                    want
                ));
            }
        }
        Ok(Some(out))
    }

    fn kappa_perp(&self) -> Outcome {
        let l = self.tl.lattice();
        let mut out = Vec::new();
        for b in self.cat.bricks() {
            let j = self.element(filt_gen(self.cat, b))?;
            let got = self.tl.class(l.kappa(j)?);
            let want = kappa_rep(self.cat, b);
            if got != want {
                out.push(format!("M = {}: κ gives {}, ⊥M = {}", self.cat.name(b), self.name(got), self.name(want)));
            }
        }
        let cji = l.cji_elements();
        let mut images = Vec::new();
        for &j in &cji {
            let k = l.kappa(j)?;
            if l.kappa_star(k)? != j {
                out.push(format!("κ*κ ≠ id at {}", self.name(self.tl.class(j))));
            }
            images.push(k);
        }
        images.sort_unstable();
        if images != l.cmi_elements() {
            out.push(String::from("κ is not a bijection from CJI onto CMI"));
        }
        Ok(Some(out))
    }

    fn kappa_tors(&self) -> Outcome {
        let l = self.tl.lattice();
        let mut out = Vec::new();
        for x in 0..l.len() {
            let got = self.tl.class(l.kappa_bar(x)?);
            let want = kappa_bar_rep(self.cat, self.tl.semibrick_of(x));
            if got != want {
                out.push(format!("{}: κ̄ = {}, ⋂⊥M = {}", self.name(self.tl.class(x)), self.name(got), self.name(want)));
            }
        }
        Ok(Some(out))
    }

    /// Lower labels of `𝒯` and upper labels of `κ̄(𝒯)` are both the
    /// canonical joinand bricks of `𝒯`.
    fn labels(&self) -> Outcome {
        let l = self.tl.lattice();
        let mut out = Vec::new();
        for x in 0..l.len() {
            let sb = self.tl.semibrick_of(x);
            let lower = self.tl.lower_labels(x);
            let upper = self.tl.upper_labels(l.kappa_bar(x)?);
            if lower != sb || upper != sb || l.lower_covers(x).len() != sb.len() {
                out.push(format!(
                    "{}: bricks {}, lower labels {}, upper labels of κ̄ {}",
                    self.name(self.tl.class(x)),
                    self.name(sb),
                    self.name(lower),
                    self.name(upper)
                ));
            }
        }
        Ok(Some(out))
    }

    /// `(⊥M)^⊥ = FiltCogen(M)` and `ME(⊥M) = {M}` for every brick.
    fn left_perp(&self) -> Outcome {
        let mut out = Vec::new();
        for b in self.cat.bricks() {
            let t = perp_left(self.cat, Bits::single(b));
            let f = perp_right(self.cat, t);
            if f != filt_cogen(self.cat, b) {
                out.push(format!("M = {}: (⊥M)^⊥ = {}", self.cat.name(b), self.name(f)));
            }
            let me = minimal_extending(self.cat, t)?;
            if me != Bits::single(b) {
                out.push(format!("M = {}: ME(⊥M) = {}", self.cat.name(b), self.name(me)));
            }
        }
        Ok(Some(out))
    }

    /// `ME(⋂⊥M_α) = {M_α}` for every semibrick.
    fn left_perp_2(&self) -> Outcome {
        let mut out = Vec::new();
        for x in 0..self.tl.len() {
            let sb = self.tl.semibrick_of(x);
            let me = minimal_extending(self.cat, perp_left(self.cat, sb))?;
            if me != sb {
                out.push(format!("semibrick {}: ME = {}", self.name(sb), self.name(me)));
            }
        }
        Ok(Some(out))
    }

    /// Simple objects of `α(𝒯)` are the minimal co-extending modules of
    /// `𝒯^⊥`, and are the canonical joinand bricks.
    fn simple_coext(&self) -> Outcome {
        let mut out = Vec::new();
        for x in 0..self.tl.len() {
            let t = self.tl.class(x);
            let simples = simple_objects(self.cat, self.alpha(x)?)?;
            let coext = minimal_coextending(self.cat, perp_right(self.cat, t))?;
            if simples != coext || simples != self.tl.semibrick_of(x) {
                out.push(format!(
                    "{}: simples {}, co-extending {}",
                    self.name(t),
                    self.name(simples),
                    self.name(coext)
                ));
            }
        }
        Ok(Some(out))
    }

    /// `α(⋂⊥M_i) = ⋂ α(⊥M_i)` for every semibrick.
    fn wide_many_perp(&self) -> Outcome {
        if !self.hereditary() {
            return Ok(None);
        }
        let mut out = Vec::new();
        for x in 0..self.tl.len() {
            let sb = self.tl.semibrick_of(x);
            let lhs = self.alpha(self.element(perp_left(self.cat, sb))?)?;
            let mut rhs = self.cat.all();
            for b in sb {
                rhs = rhs.intersection(self.alpha(self.element(kappa_rep(self.cat, b))?)?);
            }
            if lhs != rhs {
                out.push(format!("semibrick {}: {} vs {}", self.name(sb), self.name(lhs), self.name(rhs)));
            }
        }
        Ok(Some(out))
    }

    /// `α ∘ κ̄ = ε ∘ α`.
    fn alpha_epsilon(&self) -> Outcome {
        if !self.hereditary() {
            return Ok(None);
        }
        let l = self.tl.lattice();
        let mut out = Vec::new();
        for x in 0..l.len() {
            let lhs = self.alpha(l.kappa_bar(x)?)?;
            let rhs = epsilon(self.cat, self.alpha(x)?)?;
            if lhs != rhs {
                out.push(format!("{}: ακ̄ = {}, εα = {}", self.name(self.tl.class(x)), self.name(lhs), self.name(rhs)));
            }
        }
        Ok(Some(out))
    }

    /// If no canonical joinand brick is injective, the bricks of `κ̄²(𝒯)`
    /// are their `τ⁻¹` images.
    fn kappa_bar_squared(&self) -> Outcome {
        if !self.hereditary() {
            return Ok(None);
        }
        let l = self.tl.lattice();
        let mut out = Vec::new();
        for x in 0..l.len() {
            let sb = self.tl.semibrick_of(x);
            if sb.iter().any(|b| self.cat.is_injective(b)) {
                continue;
            }
            let want: Bits = sb.iter().filter_map(|b| self.cat.tau_inv(b)).collect();
            let got = self.tl.semibrick_of(l.kappa_bar(l.kappa_bar(x)?)?);
            if got != want {
                out.push(format!(
                    "{}: κ̄² bricks {}, τ⁻¹ gives {}",
                    self.name(self.tl.class(x)),
                    self.name(got),
                    self.name(want)
                ));
            }
        }
        Ok(Some(out))
    }

    /// Every κ̄-orbit averages `r/2` canonical joinands, `r` the rank.
    fn orbit_average(&self) -> Outcome {
        let half_rank = Ratio::new(self.cat.spec().vertex_count() as i64, 2);
        let mut out = Vec::new();
        for orbit in self.tl.lattice().kappa_bar_orbits()? {
            if orbit.average() != half_rank {
                out.push(format!("orbit {:?} averages {}", orbit.elements, orbit.average()));
            }
        }
        Ok(Some(out))
    }

    /// `𝒮 ⊆ 𝒯 ⇔ 𝒯^⊥ ⊆ 𝒮^⊥`.
    fn antiso(&self) -> Outcome {
        let mut out = Vec::new();
        let perps: Vec<Subcat> = self.tl.classes().iter().map(|&t| perp_right(self.cat, t)).collect();
        for (i, &s) in self.tl.classes().iter().enumerate() {
            for (j, &t) in self.tl.classes().iter().enumerate() {
                if s.is_subset(t) != perps[j].is_subset(perps[i]) {
                    out.push(format!("{} vs {}", self.name(s), self.name(t)));
                }
            }
        }
        Ok(Some(out))
    }

    /// `⊥M ∩ (τ⁻¹M)^⊥` and `M^⊥ ∩ ⊥τM` are wide, for every indecomposable
    /// and every pair of indecomposables.
    fn perp_tau(&self) -> Outcome {
        let n = self.cat.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let ms = Bits::from_indices([i, j]);
                for (side, w) in [("left", perp_tau_wide(self.cat, ms)), ("right", perp_tau_wide_right(self.cat, ms))] {
                    if !wide_check(self.cat, w) {
                        out.push(format!("{side} side for {}: {} is not wide", self.name(ms), self.name(w)));
                    }
                }
            }
        }
        Ok(Some(out))
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn a2_report_passes() {
        let c = a2();
        let tl = TorsLattice::build(&c).unwrap();
        let r = verify_theorems(&c, &tl, &[], Some(2));
        for check in &r.checks {
            assert_eq!(check.status, Status::Pass, "{}: {:?}", check.name, check.witnesses);
        }
        assert_eq!(r.orbits.len(), 2);
    }

    #[test]
    fn bound_quiver_skips_hereditary_checks() {
        let c = a4_rel();
        let tl = TorsLattice::build(&c).unwrap();
        let r = verify_theorems(&c, &tl, &["D", "C", "A", "wide-many-perp"], None);
        assert_eq!(r.check("D").unwrap().status, Status::Skipped);
        assert_eq!(r.check("wide-many-perp").unwrap().status, Status::Skipped);
        assert_eq!(r.check("C").unwrap().status, Status::Skipped);
        assert_eq!(r.check("A").unwrap().status, Status::Pass);
    }

    #[test]
    fn unknown_check_fails() {
        let c = a2();
        let tl = TorsLattice::build(&c).unwrap();
        let r = verify_theorems(&c, &tl, &["nope"], None);
        assert!(!r.all_passed());
    }

    #[test]
    fn many_perp_intersection_needs_hereditary() {
        // on the bound A4 quiver: α(⊥{S1,S2,S3}) = add(P4), yet the α(⊥S_i)
        // meet in 0
        let c = a4_rel();
        let tl = TorsLattice::build(&c).unwrap();
        let sb = idx(&c, &["S1", "S2", "S3"]);
        let lhs = crate::tors::alpha(&c, &tl, tl.index_of(perp_left(&c, sb)).unwrap());
        assert_eq!(lhs, idx(&c, &["P4"]));
        let mut rhs = c.all();
        for b in sb {
            rhs = rhs.intersection(crate::tors::alpha(&c, &tl, tl.index_of(kappa_rep(&c, b)).unwrap()));
        }
        assert!(rhs.is_empty());
    }
}
