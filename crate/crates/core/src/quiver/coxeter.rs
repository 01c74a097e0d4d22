//! Integer invariants of hereditary algebras, used as oracles for the
//! module-level computations.

use alloc::vec;
use alloc::vec::Vec;

use super::AlgebraSpec;
use crate::error::Error;

/// `⟨x, y⟩ = Σ x_i y_i − Σ_{a: i -> j} x_i y_j`.
pub fn euler_form(spec: &AlgebraSpec, x: &[usize], y: &[usize]) -> i64 {
    let diag: i64 = x.iter().zip(y).map(|(&a, &b)| (a * b) as i64).sum();
    let off: i64 = spec.arrows().iter().map(|a| (x[a.source] * y[a.target]) as i64).sum();
    diag - off
}

pub fn tits_form(spec: &AlgebraSpec, x: &[usize]) -> i64 {
    euler_form(spec, x, x)
}

/// Nonzero vectors `d <= bound` with `q(d) = 1`: for a Dynkin quiver, the
/// positive roots inside the box.
pub fn positive_roots(spec: &AlgebraSpec, bound: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut d = vec![0usize; bound.len()];
    loop {
        if d.iter().any(|&x| x > 0) && tits_form(spec, &d) == 1 {
            out.push(d.clone());
        }
        let mut i = 0;
        loop {
            if i == d.len() {
                return out;
            }
            if d[i] < bound[i] {
                d[i] += 1;
                break;
            }
            d[i] = 0;
            i += 1;
        }
    }
}

/// `Φ = −E⁻¹Eᵀ` with `E = I − A`, `A[i][j]` the number of arrows `i -> j`.
/// For non-projective indecomposable `M`, `dim τM = Φ · dim M`.
pub fn coxeter_matrix(spec: &AlgebraSpec) -> Result<Vec<Vec<i64>>, Error> {
    if !spec.is_hereditary() {
        return Err(Error::NotHereditary);
    }
    let n = spec.vertex_count();
    let mut adj = vec![vec![0i64; n]; n];
    for a in spec.arrows() {
        adj[a.source][a.target] += 1;
    }
    let mul = |x: &Vec<Vec<i64>>, y: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| x[i][k] * y[k][j]).sum()).collect()).collect()
    };
    // E⁻¹ = I + A + A² + ... since A is nilpotent on an acyclic quiver
    let mut inv = vec![vec![0i64; n]; n];
    let mut power: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    for _ in 0..=n {
        for i in 0..n {
            for j in 0..n {
                inv[i][j] += power[i][j];
            }
        }
        power = mul(&power, &adj);
    }
    let e_t: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64 - adj[j][i]).collect()).collect();
    Ok(mul(&inv, &e_t).into_iter().map(|row| row.into_iter().map(|x| -x).collect()).collect())
}
