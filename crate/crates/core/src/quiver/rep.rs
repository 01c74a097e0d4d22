use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::AlgebraSpec;
use crate::error::Error;
use crate::field::Fp;
use crate::matrix::{Matrix, Subspace};

/// A finite-dimensional representation: a vector space per vertex and a
/// matrix per arrow.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rep {
    dims: Vec<usize>,
    mats: Vec<Matrix>,
}

impl Rep {
    /// Checks shapes and relations.
    pub fn new(spec: &AlgebraSpec, dims: Vec<usize>, mats: Vec<Matrix>) -> Result<Rep, Error> {
        let rep = Rep::new_unchecked(dims, mats);
        rep.validate(spec)?;
        Ok(rep)
    }

    pub(crate) fn new_unchecked(dims: Vec<usize>, mats: Vec<Matrix>) -> Rep {
        Rep { dims, mats }
    }

    pub fn validate(&self, spec: &AlgebraSpec) -> Result<(), Error> {
        if self.dims.len() != spec.vertex_count() || self.mats.len() != spec.arrows().len() {
            return Err(Error::ShapeMismatch(format!(
                "{} vertices and {} arrows expected",
                spec.vertex_count(),
                spec.arrows().len()
            )));
        }
        for (a, arrow) in spec.arrows().iter().enumerate() {
            let want = (self.dims[arrow.target], self.dims[arrow.source]);
            if self.mats[a].shape() != want {
                return Err(Error::ShapeMismatch(format!(
                    "arrow {} should be {}x{}, got {}x{}",
                    arrow.name,
                    want.0,
                    want.1,
                    self.mats[a].rows(),
                    self.mats[a].cols()
                )));
            }
            if self.mats[a].data().iter().any(|&x| x >= spec.fp().p()) {
                return Err(Error::ShapeMismatch(format!("arrow {} has entries outside F_p", arrow.name)));
            }
        }
        match self.violated_relation(spec) {
            Some(r) => Err(Error::RelationViolated(r)),
            None => Ok(()),
        }
    }

    pub fn violated_relation(&self, spec: &AlgebraSpec) -> Option<usize> {
        let fp = spec.fp();
        spec.relations().iter().position(|rel| {
            let mut acc = Matrix::zeros(self.dims[rel.target], self.dims[rel.source]);
            for (c, path) in &rel.terms {
                acc = acc.add_scaled(&self.evaluate(path, fp), *c, fp);
            }
            !acc.is_zero()
        })
    }

    pub fn zero(spec: &AlgebraSpec) -> Rep {
        let dims = alloc::vec![0; spec.vertex_count()];
        let mats = spec.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Rep { dims, mats }
    }

    pub fn simple(spec: &AlgebraSpec, v: usize) -> Rep {
        let mut dims = alloc::vec![0; spec.vertex_count()];
        dims[v] = 1;
        let mats = spec.arrows().iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
        Rep { dims, mats }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn mat(&self, arrow: usize) -> &Matrix {
        &self.mats[arrow]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Dimension vector written as digits, e.g. `110`; entries above 9 are
    /// comma-separated.
    pub fn dim_string(&self) -> String {
        dim_string(&self.dims)
    }

    /// The matrix of a path (arrows in application order), `dim target x dim source`.
    pub fn evaluate(&self, path: &[usize], fp: Fp) -> Matrix {
        let mut acc = self.mats[path[0]].clone();
        for &a in &path[1..] {
            acc = self.mats[a].mul(&acc, fp);
        }
        acc
    }

    pub fn direct_sum(&self, other: &Rep) -> Rep {
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| Matrix::block_diag(a, b)).collect();
        Rep { dims, mats }
    }

    /// Direct sum of `reps`, or the zero rep of `spec` if empty.
    pub fn direct_sum_all<'a>(spec: &AlgebraSpec, reps: impl IntoIterator<Item = &'a Rep>) -> Rep {
        reps.into_iter().fold(Rep::zero(spec), |acc, r| acc.direct_sum(r))
    }

    /// The vector-space dual, a representation of the opposite quiver.
    pub fn dual(&self) -> Rep {
        Rep { dims: self.dims.clone(), mats: self.mats.iter().map(Matrix::transpose).collect() }
    }

    /// True if `spaces` (one per vertex) is closed under every arrow.
    pub fn is_stable(&self, spec: &AlgebraSpec, spaces: &[Subspace]) -> bool {
        let fp = spec.fp();
        spec.arrows().iter().enumerate().all(|(a, arrow)| {
            let img = spaces[arrow.source].image_under(&self.mats[a], fp);
            spaces[arrow.target].contains_space(&img, fp)
        })
    }

    /// The subrepresentation on `spaces`, in the RREF bases of the subspaces.
    pub fn restrict(&self, spec: &AlgebraSpec, spaces: &[Subspace]) -> Rep {
        let fp = spec.fp();
        let dims = spaces.iter().map(Subspace::dim).collect();
        let mats = spec
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let (src, tgt) = (&spaces[arrow.source], &spaces[arrow.target]);
                let cols: Vec<Vec<u32>> = src
                    .basis()
                    .iter()
                    .map(|b| tgt.coords(&self.mats[a].apply(b, fp), fp).expect("subspace is stable"))
                    .collect();
                Matrix::from_columns(tgt.dim(), &cols)
            })
            .collect();
        Rep { dims, mats }
    }

    /// The quotient by the stable subspaces `spaces`, in the basis of
    /// standard vectors complementary to each subspace.
    pub fn quotient(&self, spec: &AlgebraSpec, spaces: &[Subspace]) -> Rep {
        let fp = spec.fp();
        let dims = spaces.iter().map(|s| s.ambient() - s.dim()).collect();
        let mats = spec
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let (src, tgt) = (&spaces[arrow.source], &spaces[arrow.target]);
                let cols: Vec<Vec<u32>> = src
                    .complement_indices()
                    .into_iter()
                    .map(|c| tgt.quotient_coords(&self.mats[a].column(c), fp))
                    .collect();
                Matrix::from_columns(tgt.ambient() - tgt.dim(), &cols)
            })
            .collect();
        Rep { dims, mats }
    }

    /// Every subrepresentation, as stable subspace tuples.
    pub fn submodules(&self, spec: &AlgebraSpec, cap: u64) -> Result<Vec<Vec<Subspace>>, Error> {
        let fp = spec.fp();
        let per_vertex: Vec<Vec<Subspace>> = self.dims.iter().map(|&d| crate::matrix::all_subspaces(d, fp)).collect();
        let needed = per_vertex.iter().try_fold(1u64, |acc, s| acc.checked_mul(s.len() as u64));
        match needed {
            Some(n) if n <= cap => {}
            n => return Err(Error::CapExceeded { what: "submodule search", needed: n.unwrap_or(u64::MAX), cap }),
        }
        let mut out = Vec::new();
        let mut idx = alloc::vec![0usize; self.dims.len()];
        loop {
            let spaces: Vec<Subspace> = idx.iter().enumerate().map(|(v, &i)| per_vertex[v][i].clone()).collect();
            if self.is_stable(spec, &spaces) {
                out.push(spaces);
            }
            let mut v = 0;
            loop {
                if v == idx.len() {
                    return Ok(out);
                }
                idx[v] += 1;
                if idx[v] < per_vertex[v].len() {
                    break;
                }
                idx[v] = 0;
                v += 1;
            }
        }
    }

    /// `rad M`: the sum of the images of all arrows.
    pub fn radical(&self, spec: &AlgebraSpec) -> Vec<Subspace> {
        let fp = spec.fp();
        (0..self.dims.len())
            .map(|v| {
                spec.arrows_into(v).fold(Subspace::zero(self.dims[v]), |acc, a| {
                    acc.sum(&Subspace::column_space(&self.mats[a], fp), fp)
                })
            })
            .collect()
    }

    /// Dimension vector of `M / rad M`.
    pub fn top_dims(&self, spec: &AlgebraSpec) -> Vec<usize> {
        self.radical(spec).iter().zip(&self.dims).map(|(r, d)| d - r.dim()).collect()
    }

    /// Dimension vector of the socle, the common kernel of all arrows.
    pub fn socle_dims(&self, spec: &AlgebraSpec) -> Vec<usize> {
        let fp = spec.fp();
        (0..self.dims.len())
            .map(|v| {
                spec.arrows_from(v)
                    .fold(Subspace::full(self.dims[v]), |acc, a| {
                        acc.intersection(&Subspace::kernel(&self.mats[a], fp), fp)
                    })
                    .dim()
            })
            .collect()
    }
}

pub(crate) fn dim_string(dims: &[usize]) -> String {
    if dims.iter().all(|&d| d < 10) {
        dims.iter().map(|d| char::from(b'0' + *d as u8)).collect()
    } else {
        let parts: Vec<String> = dims.iter().map(|d| format!("{d}")).collect();
        parts.join(",")
    }
}

/// A homomorphism of representations: one linear map per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub maps: Vec<Matrix>,
}

impl Morphism {
    pub fn zero(source: &Rep, target: &Rep) -> Morphism {
        Morphism { maps: source.dims.iter().zip(&target.dims).map(|(&s, &t)| Matrix::zeros(t, s)).collect() }
    }

    pub fn identity(rep: &Rep) -> Morphism {
        Morphism { maps: rep.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_invertible(&self, fp: Fp) -> bool {
        self.maps.iter().all(|m| m.is_invertible(fp))
    }

    /// Only meaningful for endomorphisms.
    pub fn is_nilpotent(&self, fp: Fp) -> bool {
        self.maps.iter().all(|m| m.pow(m.rows(), fp).is_zero())
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Morphism, fp: Fp) -> Morphism {
        Morphism { maps: self.maps.iter().zip(&first.maps).map(|(g, f)| g.mul(f, fp)).collect() }
    }

    pub fn add_scaled(&self, other: &Morphism, s: u32, fp: Fp) -> Morphism {
        Morphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add_scaled(b, s, fp)).collect() }
    }

    pub fn pow(&self, k: usize, fp: Fp) -> Morphism {
        Morphism { maps: self.maps.iter().map(|m| m.pow(k, fp)).collect() }
    }

    pub fn kernel(&self, fp: Fp) -> Vec<Subspace> {
        self.maps.iter().map(|m| Subspace::kernel(m, fp)).collect()
    }

    pub fn image(&self, fp: Fp) -> Vec<Subspace> {
        self.maps.iter().map(|m| Subspace::column_space(m, fp)).collect()
    }

    /// Checks `f_j M_a = N_a f_i` for every arrow.
    pub fn is_homomorphism(&self, spec: &AlgebraSpec, source: &Rep, target: &Rep) -> bool {
        let fp = spec.fp();
        spec.arrows().iter().enumerate().all(|(a, arrow)| {
            self.maps[arrow.target].mul(source.mat(a), fp) == target.mat(a).mul(&self.maps[arrow.source], fp)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use alloc::vec;

    fn p1() -> Rep {
        Rep::new(&a2(), vec![1, 1], vec![Matrix::from_data(1, 1, vec![1])]).unwrap()
    }

    #[test]
    fn submodules_of_p1() {
        let spec = a2();
        let subs = p1().submodules(&spec, 1 << 10).unwrap();
        let dims: Vec<Vec<usize>> = subs.iter().map(|s| s.iter().map(Subspace::dim).collect()).collect();
        assert_eq!(dims, [vec![0, 0], vec![0, 1], vec![1, 1]]);
        let q = p1().quotient(&spec, &subs[1]);
        assert_eq!(q, Rep::simple(&spec, 0));
        assert_eq!(p1().restrict(&spec, &subs[1]), Rep::simple(&spec, 1));
    }

    #[test]
    fn relation_violation_is_caught() {
        let spec = a4_rel();
        let one = || Matrix::from_data(1, 1, vec![1]);
        let err = Rep::new(&spec, vec![1, 1, 1, 1], vec![one(), one(), one()]).unwrap_err();
        assert_eq!(err, Error::RelationViolated(0));
    }

    #[test]
    fn top_and_socle() {
        let spec = a2();
        assert_eq!(p1().top_dims(&spec), [1, 0]);
        assert_eq!(p1().socle_dims(&spec), [0, 1]);
        assert_eq!(p1().dim_string(), "11");
    }

    #[test]
    fn submodule_cap() {
        let spec = a2();
        let big = p1().direct_sum(&p1()).direct_sum(&p1());
        assert!(matches!(big.submodules(&spec, 10), Err(Error::CapExceeded { .. })));
    }
}
