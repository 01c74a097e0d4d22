use alloc::vec::Vec;

use super::{AlgebraSpec, Morphism, Rep};
use crate::error::Error;
use crate::field::Fp;
use crate::matrix::{for_each_vector, Matrix, Subspace};

/// Basis of `Hom(m, n)`: solutions of `f_j M_a = N_a f_i` for every arrow
/// `a: i -> j`.
pub fn hom_basis(spec: &AlgebraSpec, m: &Rep, n: &Rep) -> Vec<Morphism> {
    let fp = spec.fp();
    let nv = spec.vertex_count();
    // unknown f_v is dim N_v x dim M_v, stored row-major at offset[v]
    let mut offset = Vec::with_capacity(nv + 1);
    offset.push(0);
    for v in 0..nv {
        offset.push(offset[v] + n.dims()[v] * m.dims()[v]);
    }
    let unknowns = offset[nv];
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (a, arrow) in spec.arrows().iter().enumerate() {
        let (i, j) = (arrow.source, arrow.target);
        let (ma, na) = (m.mat(a), n.mat(a));
        let (mi, mj, ni, nj) = (m.dims()[i], m.dims()[j], n.dims()[i], n.dims()[j]);
        for r in 0..nj {
            for c in 0..mi {
                let mut row = alloc::vec![0u32; unknowns];
                // (f_j M_a)[r][c] = sum_k f_j[r][k] M_a[k][c]
                for k in 0..mj {
                    let idx = offset[j] + r * mj + k;
                    row[idx] = fp.add(row[idx], ma.get(k, c));
                }
                // - (N_a f_i)[r][c] = - sum_k N_a[r][k] f_i[k][c]
                for k in 0..ni {
                    let idx = offset[i] + k * mi + c;
                    row[idx] = fp.sub(row[idx], na.get(r, k));
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(unknowns, &rows);
    system
        .nullspace(fp)
        .into_iter()
        .map(|v| Morphism {
            maps: (0..nv)
                .map(|w| Matrix::from_data(n.dims()[w], m.dims()[w], v[offset[w]..offset[w + 1]].to_vec()))
                .collect(),
        })
        .collect()
}

pub fn hom_dim(spec: &AlgebraSpec, m: &Rep, n: &Rep) -> usize {
    hom_basis(spec, m, n).len()
}

/// Calls `f` on every linear combination of `basis` (lexicographic in the
/// coefficients, zero first) until it returns `false`.
pub fn for_each_combination(basis: &[Morphism], fp: Fp, mut f: impl FnMut(&Morphism) -> bool) {
    let Some(first) = basis.first() else {
        return;
    };
    let zero = Morphism { maps: first.maps.iter().map(|m| Matrix::zeros(m.rows(), m.cols())).collect() };
    for_each_vector(basis.len(), fp, |coeffs| {
        let mut acc = zero.clone();
        for (b, &c) in basis.iter().zip(coeffs) {
            if c != 0 {
                acc = acc.add_scaled(b, c, fp);
            }
        }
        f(&acc)
    });
}

fn check_cap(dim: usize, fp: Fp, cap: u64) -> bool {
    fp.pow_count(dim).is_some_and(|n| n <= cap)
}

/// A brick has End a division ring: every nonzero endomorphism invertible.
pub fn is_brick(spec: &AlgebraSpec, m: &Rep, cap: u64) -> Result<bool, Error> {
    if m.is_zero() {
        return Ok(false);
    }
    let fp = spec.fp();
    let end = hom_basis(spec, m, m);
    if end.len() == 1 {
        return Ok(true);
    }
    if !check_cap(end.len(), fp, cap) {
        return Err(Error::EndTooLarge { dim: end.len(), cap });
    }
    let mut brick = true;
    for_each_combination(&end, fp, |f| {
        if !f.is_zero() && !f.is_invertible(fp) {
            brick = false;
        }
        brick
    });
    Ok(brick)
}

/// An endomorphism that is neither nilpotent nor invertible, if one exists.
/// Its Fitting decomposition splits `m`.
pub fn splitting_endomorphism(spec: &AlgebraSpec, m: &Rep, cap: u64) -> Result<Option<Morphism>, Error> {
    let fp = spec.fp();
    let end = hom_basis(spec, m, m);
    // basis elements first: on direct sums a projection is usually among them
    for f in &end {
        if !f.is_nilpotent(fp) && !f.is_invertible(fp) {
            return Ok(Some(f.clone()));
        }
    }
    if !check_cap(end.len(), fp, cap) {
        return Err(Error::EndTooLarge { dim: end.len(), cap });
    }
    let mut found = None;
    for_each_combination(&end, fp, |f| {
        if !f.is_nilpotent(fp) && !f.is_invertible(fp) {
            found = Some(f.clone());
        }
        found.is_none()
    });
    Ok(found)
}

/// Nonzero with local endomorphism ring.
pub fn is_indecomposable(spec: &AlgebraSpec, m: &Rep, cap: u64) -> Result<bool, Error> {
    Ok(!m.is_zero() && splitting_endomorphism(spec, m, cap)?.is_none())
}

/// Sum of the images of all maps from `generators` into `x`.
pub fn trace(spec: &AlgebraSpec, generators: &[Rep], x: &Rep) -> Vec<Subspace> {
    let fp = spec.fp();
    let mut spaces: Vec<Subspace> = x.dims().iter().map(|&d| Subspace::zero(d)).collect();
    for g in generators {
        for f in hom_basis(spec, g, x) {
            for (s, img) in spaces.iter_mut().zip(f.image(fp)) {
                *s = s.sum(&img, fp);
            }
        }
    }
    spaces
}

/// `x` is a quotient of a direct sum of copies of `generators`.
pub fn is_in_gen(spec: &AlgebraSpec, generators: &[Rep], x: &Rep) -> bool {
    trace(spec, generators, x).iter().all(Subspace::is_full)
}

/// Intersection of the kernels of all maps from `x` into `cogenerators`.
pub fn reject(spec: &AlgebraSpec, cogenerators: &[Rep], x: &Rep) -> Vec<Subspace> {
    let fp = spec.fp();
    let mut spaces: Vec<Subspace> = x.dims().iter().map(|&d| Subspace::full(d)).collect();
    for c in cogenerators {
        for f in hom_basis(spec, x, c) {
            for (s, ker) in spaces.iter_mut().zip(f.kernel(fp)) {
                *s = s.intersection(&ker, fp);
            }
        }
    }
    spaces
}

/// `x` embeds in a direct sum of copies of `cogenerators`.
pub fn is_in_cogen(spec: &AlgebraSpec, cogenerators: &[Rep], x: &Rep) -> bool {
    reject(spec, cogenerators, x).iter().all(Subspace::is_zero)
}
