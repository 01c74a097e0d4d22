use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{AlgebraSpec, Rep};
use crate::error::Error;
use crate::matrix::{Matrix, Subspace};

const MAX_PATH_LENGTH: usize = 24;

/// The bound path algebra `kQ/I` with a basis of standard paths.
///
/// `L` is the first length such that every path of length `L` lies in
/// `I + R^{L+1}`; by Nakayama this forces `R^L ⊆ I`, so the algebra is the
/// quotient of `kQ/R^{L+1}` by the image of `I`, which is finite.
#[derive(Debug, Clone)]
pub struct PathAlgebra {
    spec: AlgebraSpec,
    max_len: usize,
    /// All paths of length `<= max_len` per pair `from * n + to`, longest first.
    paths: Vec<Vec<Vec<usize>>>,
    index: BTreeMap<(usize, Vec<usize>), usize>,
    /// Standard-basis coordinates of every path, per pair.
    reduced: Vec<Vec<Vec<u32>>>,
    /// Indices into `paths` of the standard basis paths, per pair.
    standard: Vec<Vec<usize>>,
}

impl PathAlgebra {
    pub fn new(spec: &AlgebraSpec) -> Result<PathAlgebra, Error> {
        let fp = spec.fp();
        let n = spec.vertex_count();
        for len in 1..=MAX_PATH_LENGTH {
            let paths = all_paths(spec, len);
            let mut index = BTreeMap::new();
            for (pair, list) in paths.iter().enumerate() {
                for (i, p) in list.iter().enumerate() {
                    index.insert((pair / n.max(1), p.clone()), i);
                }
            }
            let ideal = ideal_spaces(spec, &paths, &index, len);
            let closed = paths.iter().zip(&ideal).all(|(list, sub)| {
                list.iter().enumerate().filter(|(_, p)| p.len() == len).all(|(i, _)| {
                    let mut e = vec![0u32; list.len()];
                    e[i] = 1;
                    sub.contains(&e, fp)
                })
            });
            if !closed {
                continue;
            }
            let reduced = paths
                .iter()
                .zip(&ideal)
                .map(|(list, sub)| {
                    (0..list.len())
                        .map(|i| {
                            let mut e = vec![0u32; list.len()];
                            e[i] = 1;
                            sub.quotient_coords(&e, fp)
                        })
                        .collect()
                })
                .collect();
            let standard = ideal.iter().map(Subspace::complement_indices).collect();
            return Ok(PathAlgebra { spec: spec.clone(), max_len: len, paths, index, reduced, standard });
        }
        Err(Error::NotFiniteDimensional(MAX_PATH_LENGTH))
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    fn pair(&self, from: usize, to: usize) -> usize {
        from * self.spec.vertex_count() + to
    }

    /// Standard basis paths from `from` to `to` (arrows in application order).
    pub fn basis(&self, from: usize, to: usize) -> Vec<&[usize]> {
        let pair = self.pair(from, to);
        self.standard[pair].iter().map(|&i| self.paths[pair][i].as_slice()).collect()
    }

    pub fn basis_len(&self, from: usize, to: usize) -> usize {
        self.standard[self.pair(from, to)].len()
    }

    pub fn dim(&self) -> usize {
        self.standard.iter().map(Vec::len).sum()
    }

    /// Length bound: every path of this length is zero in the algebra.
    pub fn loewy_bound(&self) -> usize {
        self.max_len
    }

    fn end_of(&self, from: usize, path: &[usize]) -> usize {
        path.last().map_or(from, |&a| self.spec.arrows()[a].target)
    }

    /// Coordinates of the path `first` then `second` (both starting where
    /// the previous ends) in the standard basis of its pair.
    fn compose(&self, from: usize, first: &[usize], second: &[usize]) -> Vec<u32> {
        let mid = self.end_of(from, first);
        let to = self.end_of(mid, second);
        let pair = self.pair(from, to);
        if first.len() + second.len() > self.max_len {
            return vec![0; self.standard[pair].len()];
        }
        let mut p = first.to_vec();
        p.extend_from_slice(second);
        let i = self.index[&(from, p)];
        self.reduced[pair][i].clone()
    }

    /// Indecomposable projective `P(v)`: `P(v)_w` has the basis of paths `v -> w`.
    pub fn projective(&self, v: usize) -> Rep {
        let spec = &self.spec;
        let n = spec.vertex_count();
        let dims = (0..n).map(|w| self.basis_len(v, w)).collect();
        let mats = spec
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let cols: Vec<Vec<u32>> =
                    self.basis(v, arrow.source).iter().map(|p| self.compose(v, p, &[a])).collect();
                Matrix::from_columns(self.basis_len(v, arrow.target), &cols)
            })
            .collect();
        Rep::new_unchecked(dims, mats)
    }

    /// Indecomposable injective `I(v)`: `I(v)_w` is dual to the paths `w -> v`.
    pub fn injective(&self, v: usize) -> Rep {
        let spec = &self.spec;
        let n = spec.vertex_count();
        let dims = (0..n).map(|w| self.basis_len(w, v)).collect();
        let mats = spec
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                // q -> q∘a from paths (target -> v) to paths (source -> v), transposed
                let cols: Vec<Vec<u32>> =
                    self.basis(arrow.target, v).iter().map(|q| self.compose(arrow.source, &[a], q)).collect();
                Matrix::from_columns(self.basis_len(arrow.source, v), &cols).transpose()
            })
            .collect();
        Rep::new_unchecked(dims, mats)
    }

    /// Projective cover `⊕ P(v_j) -> M`: the top generators `(v_j, m_j)`.
    fn top_generators(&self, m: &Rep) -> Vec<(usize, Vec<u32>)> {
        let rad = m.radical(&self.spec);
        let mut gens = Vec::new();
        for (v, r) in rad.iter().enumerate() {
            for c in r.complement_indices() {
                let mut e = vec![0u32; m.dims()[v]];
                e[c] = 1;
                gens.push((v, e));
            }
        }
        gens
    }

    /// True if the projective cover of `m` is an isomorphism.
    pub fn is_projective(&self, m: &Rep) -> bool {
        let gens = self.top_generators(m);
        let cover_dim: usize =
            gens.iter().map(|(v, _)| (0..m.dims().len()).map(|w| self.basis_len(*v, w)).sum::<usize>()).sum();
        cover_dim == m.total_dim()
    }

    /// `τM = ker ν(f)` for a minimal projective presentation
    /// `P1 -f-> P0 -> M -> 0`.
    pub fn tau(&self, m: &Rep) -> Rep {
        let spec = &self.spec;
        let fp = spec.fp();
        let n = spec.vertex_count();
        let gens0 = self.top_generators(m);

        // P0 and the cover map π
        let p0 = Rep::direct_sum_all(spec, gens0.iter().map(|(v, _)| self.projective(*v)).collect::<Vec<_>>().iter());
        let kernel: Vec<Subspace> = (0..n)
            .map(|u| {
                let cols: Vec<Vec<u32>> = gens0
                    .iter()
                    .flat_map(|(v, mv)| {
                        self.basis(*v, u).into_iter().map(move |p| {
                            if p.is_empty() {
                                mv.clone()
                            } else {
                                m.evaluate(p, fp).apply(mv, fp)
                            }
                        })
                    })
                    .collect();
                Subspace::kernel(&Matrix::from_columns(m.dims()[u], &cols), fp)
            })
            .collect();

        // top generators of the kernel, as elements of P0
        let mut gens1: Vec<(usize, Vec<u32>)> = Vec::new();
        for u in 0..n {
            let mut span = spec.arrows_into(u).fold(Subspace::zero(p0.dims()[u]), |acc, a| {
                acc.sum(&kernel[spec.arrows()[a].source].image_under(p0.mat(a), fp), fp)
            });
            for k in kernel[u].basis() {
                if !span.contains(&k, fp) {
                    span = span.sum(&Subspace::span(p0.dims()[u], [k.as_slice()], fp), fp);
                    gens1.push((u, k));
                }
            }
        }

        // ν(f): ⊕ I(u_i) -> ⊕ I(v_j)
        let i1 = Rep::direct_sum_all(spec, gens1.iter().map(|(u, _)| self.injective(*u)).collect::<Vec<_>>().iter());
        let nu: Vec<Matrix> = (0..n)
            .map(|x| {
                let rows: usize = gens0.iter().map(|(v, _)| self.basis_len(x, *v)).sum();
                let mut cols: Vec<Vec<u32>> = Vec::new();
                for (u, k) in &gens1 {
                    // the columns of block column i are the rows of L_λ for each j
                    let dim_u = self.basis_len(x, *u);
                    let mut block_cols = vec![Vec::with_capacity(rows); dim_u];
                    let mut at = 0;
                    for (v, _) in &gens0 {
                        let lam_len = self.basis_len(*v, *u);
                        let lam = &k[at..at + lam_len];
                        at += lam_len;
                        // L: paths(x -> v) -> paths(x -> u), q -> λ∘q
                        let l_cols: Vec<Vec<u32>> = self
                            .basis(x, *v)
                            .iter()
                            .map(|q| {
                                let mut acc = vec![0u32; dim_u];
                                for (t, path) in self.basis(*v, *u).iter().enumerate() {
                                    if lam[t] == 0 {
                                        continue;
                                    }
                                    for (a, b) in acc.iter_mut().zip(self.compose(x, q, path)) {
                                        *a = fp.add(*a, fp.mul(lam[t], b));
                                    }
                                }
                                acc
                            })
                            .collect();
                        // transpose: column r of the block is row r of L
                        for (r, col) in block_cols.iter_mut().enumerate() {
                            col.extend(l_cols.iter().map(|c| c[r]));
                        }
                    }
                    cols.extend(block_cols);
                }
                Matrix::from_columns(rows, &cols)
            })
            .collect();
        let ker: Vec<Subspace> = nu.iter().map(|f| Subspace::kernel(f, fp)).collect();
        debug_assert!(i1.is_stable(spec, &ker));
        i1.restrict(spec, &ker)
    }
}

/// All paths of length `<= max_len`, grouped by `(from, to)`, longest first.
fn all_paths(spec: &AlgebraSpec, max_len: usize) -> Vec<Vec<Vec<usize>>> {
    let n = spec.vertex_count();
    let mut out = vec![Vec::new(); n * n];
    for from in 0..n {
        let mut layer: Vec<(usize, Vec<usize>)> = vec![(from, Vec::new())];
        for _ in 0..=max_len {
            let mut next = Vec::new();
            for (end, p) in layer {
                for a in spec.arrows_from(end) {
                    let mut q = p.clone();
                    q.push(a);
                    next.push((spec.arrows()[a].target, q));
                }
                out[from * n + end].push(p);
            }
            layer = next;
        }
    }
    for list in &mut out {
        list.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    }
    out
}

/// Image of the ideal in `kQ/R^{max_len+1}`, per pair.
fn ideal_spaces(
    spec: &AlgebraSpec,
    paths: &[Vec<Vec<usize>>],
    index: &BTreeMap<(usize, Vec<usize>), usize>,
    max_len: usize,
) -> Vec<Subspace> {
    let fp = spec.fp();
    let n = spec.vertex_count();
    let mut gens: Vec<Vec<Vec<u32>>> = vec![Vec::new(); n * n];
    for rel in spec.relations() {
        for x in 0..n {
            for before in &paths[x * n + rel.source] {
                for y in 0..n {
                    for after in &paths[rel.target * n + y] {
                        let pair = x * n + y;
                        let mut v = vec![0u32; paths[pair].len()];
                        let mut any = false;
                        for (c, p) in &rel.terms {
                            if before.len() + p.len() + after.len() > max_len {
                                continue;
                            }
                            let mut full = before.clone();
                            full.extend_from_slice(p);
                            full.extend_from_slice(after);
                            let i = index[&(x, full)];
                            v[i] = fp.add(v[i], *c);
                            any = true;
                        }
                        if any {
                            gens[pair].push(v);
                        }
                    }
                }
            }
        }
    }
    gens.iter().zip(paths).map(|(g, list)| Subspace::span(list.len(), g.iter().map(|v| v.as_slice()), fp)).collect()
}

/// AR translation in both directions; `τ⁻¹M = D τ_{op} D M`.
#[derive(Debug, Clone)]
pub struct ArTranslation {
    algebra: PathAlgebra,
    opposite: PathAlgebra,
}

impl ArTranslation {
    pub fn new(spec: &AlgebraSpec) -> Result<ArTranslation, Error> {
        Ok(ArTranslation { algebra: PathAlgebra::new(spec)?, opposite: PathAlgebra::new(&spec.opposite())? })
    }

    pub fn algebra(&self) -> &PathAlgebra {
        &self.algebra
    }

    pub fn projective(&self, v: usize) -> Rep {
        self.algebra.projective(v)
    }

    pub fn injective(&self, v: usize) -> Rep {
        self.algebra.injective(v)
    }

    pub fn is_projective(&self, m: &Rep) -> bool {
        self.algebra.is_projective(m)
    }

    pub fn is_injective(&self, m: &Rep) -> bool {
        self.opposite.is_projective(&m.dual())
    }

    pub fn tau(&self, m: &Rep) -> Rep {
        self.algebra.tau(m)
    }

    pub fn tau_inv(&self, m: &Rep) -> Rep {
        self.opposite.tau(&m.dual()).dual()
    }

    /// `τ̄M = τM` unless `M = P(v)`, which goes to `I(v)`. `M` must be
    /// indecomposable.
    pub fn tau_bar(&self, m: &Rep) -> Result<Rep, Error> {
        let spec = self.algebra.spec();
        if !spec.is_hereditary() {
            return Err(Error::NotHereditary);
        }
        if self.is_projective(m) {
            let top = m.top_dims(spec);
            let v = top.iter().position(|&d| d > 0).expect("nonzero module");
            return Ok(self.injective(v));
        }
        Ok(self.tau(m))
    }

    /// `τ̄⁻¹M = τ⁻¹M` unless `M = I(v)`, which goes to `P(v)`.
    pub fn tau_bar_inv(&self, m: &Rep) -> Result<Rep, Error> {
        let spec = self.algebra.spec();
        if !spec.is_hereditary() {
            return Err(Error::NotHereditary);
        }
        if self.is_injective(m) {
            let soc = m.socle_dims(spec);
            let v = soc.iter().position(|&d| d > 0).expect("nonzero module");
            return Ok(self.projective(v));
        }
        Ok(self.tau_inv(m))
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{coxeter_matrix, hom_dim};
    use super::*;

    fn apply(phi: &[Vec<i64>], d: &[usize]) -> Vec<i64> {
        phi.iter().map(|row| row.iter().zip(d).map(|(a, &b)| a * b as i64).sum()).collect()
    }

    #[test]
    fn a2_projectives_and_tau() {
        let spec = a2();
        let ar = ArTranslation::new(&spec).unwrap();
        assert_eq!(ar.algebra().dim(), 3);
        assert_eq!(ar.projective(0).dims(), [1, 1]);
        assert_eq!(ar.projective(1).dims(), [0, 1]);
        assert_eq!(ar.injective(1).dims(), [1, 1]);
        assert_eq!(ar.injective(0).dims(), [1, 0]);
        let s1 = Rep::simple(&spec, 0);
        let s2 = Rep::simple(&spec, 1);
        assert_eq!(ar.tau(&s1), s2);
        assert!(ar.tau(&ar.projective(0)).is_zero());
        assert_eq!(ar.tau_inv(&s2), s1);
        assert!(ar.tau_inv(&s1).is_zero());
        assert_eq!(ar.tau_bar(&s2).unwrap().dims(), [1, 1]);
        assert_eq!(ar.tau_bar_inv(&s1).unwrap(), ar.projective(0));
    }

    #[test]
    fn projectives_and_injectives_are_modules() {
        for spec in [a3(), d4(), a4_rel(), kron_loop()] {
            let ar = ArTranslation::new(&spec).unwrap();
            for v in 0..spec.vertex_count() {
                let (p, i) = (ar.projective(v), ar.injective(v));
                assert_eq!(p.violated_relation(&spec), None);
                assert_eq!(i.violated_relation(&spec), None);
                assert!(ar.is_projective(&p));
                assert!(ar.is_injective(&i));
                assert_eq!(p.top_dims(&spec).iter().sum::<usize>(), 1);
                assert_eq!(i.socle_dims(&spec).iter().sum::<usize>(), 1);
            }
        }
    }

    #[test]
    fn kron_loop_algebra_dimension() {
        // e1, e2, ε1, ε2, α, α·ε2 = ε1·α
        let ar = ArTranslation::new(&kron_loop()).unwrap();
        assert_eq!(ar.algebra().dim(), 6);
    }

    #[test]
    fn tau_matches_coxeter_on_d4_simples() {
        let spec = d4();
        let ar = ArTranslation::new(&spec).unwrap();
        let phi = coxeter_matrix(&spec).unwrap();
        for v in 0..4 {
            let s = Rep::simple(&spec, v);
            if ar.is_projective(&s) {
                continue;
            }
            let t = ar.tau(&s);
            assert_eq!(t.violated_relation(&spec), None);
            let expect = apply(&phi, s.dims());
            assert_eq!(t.dims().iter().map(|&d| d as i64).collect::<Vec<_>>(), expect);
            assert_eq!(hom_dim(&spec, &t, &t), 1);
        }
    }
}
