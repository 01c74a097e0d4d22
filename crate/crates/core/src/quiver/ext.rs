use alloc::vec::Vec;

use super::{AlgebraSpec, Rep};
use crate::error::Error;
use crate::field::Fp;
use crate::matrix::{for_each_vector, Matrix, Subspace};

/// `Ext¹(M, N)`: classes of extensions `0 -> N -> X -> M -> 0`.
///
/// A cocycle is a tuple `η_a: M_i -> N_j` (one per arrow `a: i -> j`) such
/// that `X_a = [[N_a, η_a], [0, M_a]]` satisfies every relation.
#[derive(Debug, Clone)]
pub struct ExtClassSpace {
    /// `offset[a]..offset[a+1]` holds `η_a` row-major.
    offset: Vec<usize>,
    cocycles: Subspace,
    coboundaries: Subspace,
    /// Cocycles whose classes form a basis of `Ext¹`.
    representatives: Vec<Vec<u32>>,
    m: Rep,
    n: Rep,
}

impl ExtClassSpace {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn cocycle_dim(&self) -> usize {
        self.cocycles.dim()
    }

    pub fn coboundary_dim(&self) -> usize {
        self.coboundaries.dim()
    }

    pub fn cocycles(&self) -> &Subspace {
        &self.cocycles
    }

    pub fn coboundaries(&self) -> &Subspace {
        &self.coboundaries
    }

    /// Basis of `Ext¹` as cocycle vectors.
    pub fn class_basis(&self) -> &[Vec<u32>] {
        &self.representatives
    }

    /// Middle term `X` with `X_v = N_v ⊕ M_v`; `N` sits in the first
    /// coordinates.
    pub fn middle_term(&self, spec: &AlgebraSpec, cocycle: &[u32]) -> Rep {
        let dims: Vec<usize> = self.n.dims().iter().zip(self.m.dims()).map(|(a, b)| a + b).collect();
        let mats = spec
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let (nr, mc) = (self.n.dims()[arrow.target], self.m.dims()[arrow.source]);
                let eta = Matrix::from_data(nr, mc, cocycle[self.offset[a]..self.offset[a + 1]].to_vec());
                let low = Matrix::zeros(self.m.dims()[arrow.target], self.n.dims()[arrow.source]);
                Matrix::blocks(self.n.mat(a), &eta, &low, self.m.mat(a))
            })
            .collect();
        Rep::new_unchecked(dims, mats)
    }

    /// Middle terms of every nonzero class (one representative per class).
    pub fn nonzero_middle_terms(&self, spec: &AlgebraSpec, cap: u64) -> Result<Vec<Rep>, Error> {
        let fp = spec.fp();
        if !fp.pow_count(self.dim()).is_some_and(|n| n <= cap) {
            return Err(Error::ExtTooLarge { dim: self.dim(), cap });
        }
        let mut out = Vec::new();
        let len = self.offset[self.offset.len() - 1];
        for_each_vector(self.dim(), fp, |coeffs| {
            if coeffs.iter().any(|&c| c != 0) {
                let mut eta = alloc::vec![0u32; len];
                for (rep, &c) in self.representatives.iter().zip(coeffs) {
                    for (e, &r) in eta.iter_mut().zip(rep) {
                        *e = fp.add(*e, fp.mul(c, r));
                    }
                }
                out.push(self.middle_term(spec, &eta));
            }
            true
        });
        Ok(out)
    }
}

pub fn ext_space(spec: &AlgebraSpec, m: &Rep, n: &Rep) -> ExtClassSpace {
    let fp = spec.fp();
    let arrows = spec.arrows();
    let mut offset = Vec::with_capacity(arrows.len() + 1);
    offset.push(0);
    for arrow in arrows {
        let last = *offset.last().unwrap();
        offset.push(last + n.dims()[arrow.target] * m.dims()[arrow.source]);
    }
    let unknowns = offset[arrows.len()];

    // cocycle constraints: top-right block of every relation on X
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for rel in spec.relations() {
        let (nt, ms) = (n.dims()[rel.target], m.dims()[rel.source]);
        let mut block = alloc::vec![alloc::vec![0u32; unknowns]; nt * ms];
        for (coef, path) in &rel.terms {
            for (pos, &a) in path.iter().enumerate() {
                // N_{after} η_a M_{before}
                let left = chain(n, &path[pos + 1..], n.dims()[arrows[a].target], fp);
                let right = chain(m, &path[..pos], m.dims()[rel.source], fp);
                let (er, ec) = (n.dims()[arrows[a].target], m.dims()[arrows[a].source]);
                for (i, row) in block.iter_mut().enumerate() {
                    let (r0, c0) = (i / ms, i % ms);
                    for x in 0..er {
                        let l = left.get(r0, x);
                        if l == 0 {
                            continue;
                        }
                        for y in 0..ec {
                            let v = fp.mul(*coef, fp.mul(l, right.get(y, c0)));
                            let idx = offset[a] + x * ec + y;
                            row[idx] = fp.add(row[idx], v);
                        }
                    }
                }
            }
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|&x| x != 0)));
    }
    let cocycles = Subspace::kernel(&Matrix::from_rows(unknowns, &rows), fp);

    // coboundaries: η_a = f_j M_a - N_a f_i over all vertex maps f
    let mut images: Vec<Vec<u32>> = Vec::new();
    for v in 0..spec.vertex_count() {
        for r in 0..n.dims()[v] {
            for c in 0..m.dims()[v] {
                let mut eta = alloc::vec![0u32; unknowns];
                for (a, arrow) in arrows.iter().enumerate() {
                    let ec = m.dims()[arrow.source];
                    if arrow.target == v {
                        // f_j = E_{rc}: (E M_a)[r][y] = M_a[c][y]
                        for y in 0..ec {
                            let idx = offset[a] + r * ec + y;
                            eta[idx] = fp.add(eta[idx], m.mat(a).get(c, y));
                        }
                    }
                    if arrow.source == v {
                        // f_i = E_{rc}: (N_a E)[x][c] = N_a[x][r]
                        for x in 0..n.dims()[arrow.target] {
                            let idx = offset[a] + x * ec + c;
                            eta[idx] = fp.sub(eta[idx], n.mat(a).get(x, r));
                        }
                    }
                }
                images.push(eta);
            }
        }
    }
    let coboundaries = Subspace::span(unknowns, images.iter().map(|v| v.as_slice()), fp);
    debug_assert!(cocycles.contains_space(&coboundaries, fp));

    let mut span = coboundaries.clone();
    let mut representatives = Vec::new();
    for z in cocycles.basis() {
        if !span.contains(&z, fp) {
            span = span.sum(&Subspace::span(unknowns, [z.as_slice()], fp), fp);
            representatives.push(z);
        }
    }
    ExtClassSpace { offset, cocycles, coboundaries, representatives, m: m.clone(), n: n.clone() }
}

pub fn ext_dim(spec: &AlgebraSpec, m: &Rep, n: &Rep) -> usize {
    ext_space(spec, m, n).dim()
}

/// Product of the arrow matrices of `rep` along `path`; identity of size
/// `dim` for the empty path.
fn chain(rep: &Rep, path: &[usize], dim: usize, fp: Fp) -> Matrix {
    if path.is_empty() {
        Matrix::identity(dim)
    } else {
        rep.evaluate(path, fp)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::hom_dim;
    use super::*;
    use alloc::vec;

    #[test]
    fn a2_ext() {
        let spec = a2();
        let s1 = Rep::simple(&spec, 0);
        let s2 = Rep::simple(&spec, 1);
        let e = ext_space(&spec, &s1, &s2);
        assert_eq!(e.dim(), 1);
        let x = &e.nonzero_middle_terms(&spec, 16).unwrap()[0];
        assert_eq!(x.dims(), [1, 1]);
        assert_eq!(x.mat(0), &Matrix::from_data(1, 1, vec![1]));
        assert_eq!(ext_dim(&spec, &s2, &s1), 0);
        assert_eq!(ext_dim(&spec, &s1, &s1), 0);
        let split = e.middle_term(&spec, &[0]);
        assert_eq!(split, s2.direct_sum(&s1));
    }

    #[test]
    fn euler_form_on_d4_simples() {
        let spec = d4();
        for i in 0..4 {
            for j in 0..4 {
                let (si, sj) = (Rep::simple(&spec, i), Rep::simple(&spec, j));
                let arrows = spec.arrows().iter().filter(|a| a.source == i && a.target == j).count();
                let euler = (i == j) as i64 - arrows as i64;
                let lhs = hom_dim(&spec, &si, &sj) as i64 - ext_dim(&spec, &si, &sj) as i64;
                assert_eq!(lhs, euler);
            }
        }
    }

    #[test]
    fn relation_kills_extension() {
        // in k[4 -> 3 -> 2 -> 1]/(αβγ), Ext¹(4/3/2, S1) = 0 but Ext¹(S2, S1) = 1
        let spec = a4_rel();
        let one = || Matrix::from_data(1, 1, vec![1]);
        let z = |r, c| Matrix::zeros(r, c);
        let m432 = Rep::new(&spec, vec![0, 1, 1, 1], vec![one(), one(), z(0, 1)]).unwrap();
        assert_eq!(ext_dim(&spec, &m432, &Rep::simple(&spec, 0)), 0);
        assert_eq!(ext_dim(&spec, &Rep::simple(&spec, 1), &Rep::simple(&spec, 0)), 1);
        for x in
            ext_space(&spec, &Rep::simple(&spec, 2), &Rep::simple(&spec, 1)).nonzero_middle_terms(&spec, 16).unwrap()
        {
            assert_eq!(x.violated_relation(&spec), None);
        }
    }
}
