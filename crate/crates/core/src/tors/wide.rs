//! Wide subcategories and the maps between them and torsion classes.

use alloc::vec::Vec;

use super::{filt_closure, perp_left, perp_right, torf_closure, tors_closure, Subcat, TorsLattice};
use crate::bits::Bits;
use crate::catalog::Catalog;
use crate::error::Error;
use crate::quiver::{ext_space, for_each_combination, hom_basis, Rep};

/// Closed under extension middle terms and under kernels and cokernels of
/// maps, tested on pairs of indecomposable members through the catalog
/// caches. [`wide_check_deep`] extends the test to direct sums.
pub fn wide_check(cat: &Catalog, s: Subcat) -> bool {
    s.iter().all(|i| s.iter().all(|j| cat.ext_summands(i, j).is_subset(s) && cat.map_summands(i, j).is_subset(s)))
}

/// Nonempty multisets of at most `k` members of `s`, as sorted index lists.
fn multisets(s: Subcat, k: usize) -> Vec<Vec<usize>> {
    let members: Vec<usize> = s.iter().collect();
    let mut out = Vec::new();
    fn grow(members: &[usize], from: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == k {
            return;
        }
        for i in from..members.len() {
            cur.push(members[i]);
            grow(members, i, k, cur, out);
            cur.pop();
        }
    }
    grow(&members, 0, k, &mut Vec::new(), &mut out);
    out
}

fn sum_of(cat: &Catalog, idx: &[usize]) -> Rep {
    Rep::direct_sum_all(cat.spec(), idx.iter().map(|&i| cat.rep(i)))
}

/// Calls `f(kernel summands, cokernel summands)` for every map `Y -> X`
/// until it returns `false`; the return value says whether it ran to the end.
fn for_each_map(cat: &Catalog, y: &Rep, x: &Rep, mut f: impl FnMut(Bits, Bits) -> bool) -> Result<bool, Error> {
    let spec = cat.spec();
    let fp = spec.fp();
    let basis = hom_basis(spec, y, x);
    let cap = cat.budget().hom;
    if !fp.pow_count(basis.len()).is_some_and(|c| c <= cap) {
        return Err(Error::HomTooLarge { dim: basis.len(), cap });
    }
    let mut failure = None;
    let mut completed = true;
    for_each_combination(&basis, fp, |g| {
        let ker = y.restrict(spec, &g.kernel(fp));
        let coker = x.quotient(spec, &g.image(fp));
        match (cat.decompose(&ker), cat.decompose(&coker)) {
            (Ok(k), Ok(c)) => {
                completed = f(k.summands(), c.summands());
                completed
            }
            (Err(e), _) | (_, Err(e)) => {
                failure = Some(e);
                false
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(completed),
    }
}

/// [`wide_check`] with kernels, cokernels and extensions computed for maps
/// and extensions between direct sums of up to `k` members.
pub fn wide_check_deep(cat: &Catalog, s: Subcat, k: usize) -> Result<bool, Error> {
    let spec = cat.spec();
    let sums: Vec<Rep> = multisets(s, k).iter().map(|m| sum_of(cat, m)).collect();
    for y in &sums {
        for x in &sums {
            if !for_each_map(cat, y, x, |ker, coker| ker.union(coker).is_subset(s))? {
                return Ok(false);
            }
            for mid in ext_space(spec, y, x).nonzero_middle_terms(spec, cat.budget().ext)? {
                if !cat.decompose(&mid)?.summands().is_subset(s) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `α(𝒯)` read off the lattice: the extension closure of the canonical
/// joinand bricks of element `x`.
pub fn alpha(cat: &Catalog, tl: &TorsLattice, x: usize) -> Subcat {
    filt_closure(cat, tl.semibrick_of(x))
}

/// `α(𝒯) = {X ∈ 𝒯 : ker g ∈ 𝒯 for all g: Y -> X with Y ∈ 𝒯}`, with `Y`
/// ranging over direct sums of up to `k` indecomposable members.
pub fn alpha_by_definition(cat: &Catalog, t: Subcat, k: usize) -> Result<Subcat, Error> {
    let sources: Vec<Rep> = multisets(t, k).iter().map(|m| sum_of(cat, m)).collect();
    let mut out = Bits::EMPTY;
    'x: for x in t {
        for y in &sources {
            if !for_each_map(cat, y, cat.rep(x), |ker, _| ker.is_subset(t))? {
                continue 'x;
            }
        }
        out.insert(x);
    }
    Ok(out)
}

/// `α′(ℱ) = {X ∈ ℱ : coker g ∈ ℱ for all g: X -> Y with Y ∈ ℱ}`.
pub fn alpha_prime(cat: &Catalog, f: Subcat, k: usize) -> Result<Subcat, Error> {
    let targets: Vec<Rep> = multisets(f, k).iter().map(|m| sum_of(cat, m)).collect();
    let mut out = Bits::EMPTY;
    'x: for x in f {
        for y in &targets {
            if !for_each_map(cat, cat.rep(x), y, |_, coker| coker.is_subset(f))? {
                continue 'x;
            }
        }
        out.insert(x);
    }
    Ok(out)
}

/// `β(𝒲) = Filt(Gen(𝒲))`.
pub fn beta(cat: &Catalog, w: Subcat) -> Result<Subcat, Error> {
    if !wide_check(cat, w) {
        return Err(Error::NotWide);
    }
    Ok(tors_closure(cat, w))
}

/// `β′(𝒲) = Filt(Cogen(𝒲))`.
pub fn beta_prime(cat: &Catalog, w: Subcat) -> Result<Subcat, Error> {
    if !wide_check(cat, w) {
        return Err(Error::NotWide);
    }
    Ok(torf_closure(cat, w))
}

/// `^{⊥0,1}S`: no Hom and no Ext¹ into `S`.
pub fn perp01_left(cat: &Catalog, s: Subcat) -> Subcat {
    (0..cat.len()).filter(|&x| s.iter().all(|w| cat.hom(x, w) == 0 && cat.ext(x, w) == 0)).collect()
}

/// `S^{⊥0,1}`: no Hom and no Ext¹ from `S`.
pub fn perp01_right(cat: &Catalog, s: Subcat) -> Subcat {
    (0..cat.len()).filter(|&x| s.iter().all(|w| cat.hom(w, x) == 0 && cat.ext(w, x) == 0)).collect()
}

/// `ε(𝒲) = ^{⊥0,1}𝒲`, for hereditary algebras.
pub fn epsilon(cat: &Catalog, w: Subcat) -> Result<Subcat, Error> {
    if !cat.spec().is_hereditary() {
        return Err(Error::NotHereditary);
    }
    Ok(perp01_left(cat, w))
}

/// `δ(𝒲) = 𝒲^{⊥0,1}`, for hereditary algebras.
pub fn delta(cat: &Catalog, w: Subcat) -> Result<Subcat, Error> {
    if !cat.spec().is_hereditary() {
        return Err(Error::NotHereditary);
    }
    Ok(perp01_right(cat, w))
}

/// Members of the wide subcategory `w` with no nonzero proper submodule
/// lying in `w`.
pub fn simple_objects(cat: &Catalog, w: Subcat) -> Result<Subcat, Error> {
    let spec = cat.spec();
    let mut out = Bits::EMPTY;
    'x: for x in w {
        let rep = cat.rep(x);
        for u in rep.submodules(spec, cat.budget().submodules)? {
            let dim: usize = u.iter().map(|s| s.dim()).sum();
            if dim == 0 || dim == rep.total_dim() {
                continue;
            }
            if cat.decompose(&rep.restrict(spec, &u))?.summands().is_subset(w) {
                continue 'x;
            }
        }
        out.insert(x);
    }
    Ok(out)
}

/// `⋂_{M ∈ ms} ⊥M ∩ (τ⁻¹M)^⊥`.
pub fn perp_tau_wide(cat: &Catalog, ms: Subcat) -> Subcat {
    let tau_inv: Bits = ms.iter().filter_map(|m| cat.tau_inv(m)).collect();
    perp_left(cat, ms).intersection(perp_right(cat, tau_inv))
}

/// `⋂_{M ∈ ms} M^⊥ ∩ ⊥(τM)`.
pub fn perp_tau_wide_right(cat: &Catalog, ms: Subcat) -> Subcat {
    let tau: Bits = ms.iter().filter_map(|m| cat.tau(m)).collect();
    perp_right(cat, ms).intersection(perp_left(cat, tau))
}
