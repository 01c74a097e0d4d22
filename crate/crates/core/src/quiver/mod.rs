//! Bound quivers over prime fields and their finite-dimensional
//! representations.
//!
//! Conventions: an arrow `a: i -> j` acts on a representation as a
//! `dim j x dim i` matrix applied on the left. Paths are stored as arrow
//! lists in the order the arrows are applied, so the path written `α·β·γ`
//! (γ first) is stored as `[γ, β, α]`.

mod coxeter;
mod ext;
mod hom;
mod path_algebra;
mod rep;

pub use coxeter::{coxeter_matrix, euler_form, positive_roots, tits_form};
pub use ext::{ext_dim, ext_space, ExtClassSpace};
pub use hom::{
    for_each_combination, hom_basis, hom_dim, is_brick, is_in_cogen, is_in_gen, is_indecomposable, reject,
    splitting_endomorphism, trace,
};
pub use path_algebra::{ArTranslation, PathAlgebra};
pub use rep::{Morphism, Rep};

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Fp;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A formal linear combination of parallel paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    /// `(coefficient, arrows in application order)`; coefficients are
    /// reduced mod p and nonzero.
    pub terms: Vec<(u32, Vec<usize>)>,
    pub source: usize,
    pub target: usize,
}

/// A quiver with admissible relations over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: Vec<Relation>,
    fp: Fp,
    hereditary: bool,
}

impl AlgebraSpec {
    /// Validates arrows and relations. Relation terms are given as
    /// `(coefficient, path)` with paths in application order; coefficients
    /// are reduced mod p and zero terms dropped.
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<Arrow>,
        relations: Vec<Vec<(i64, Vec<usize>)>>,
        fp: Fp,
    ) -> Result<AlgebraSpec, Error> {
        for a in &arrows {
            for v in [a.source, a.target] {
                if v >= vertices.len() {
                    return Err(Error::UndefinedVertex { arrow: a.name.clone(), vertex: v });
                }
            }
        }
        let mut rels = Vec::with_capacity(relations.len());
        for (ri, terms) in relations.into_iter().enumerate() {
            let mut ends = None;
            let mut kept: Vec<(u32, Vec<usize>)> = Vec::new();
            for (pi, (c, path)) in terms.into_iter().enumerate() {
                if path.len() < 2 {
                    return Err(Error::NonAdmissibleRelation { relation: ri, path: pi });
                }
                if path.windows(2).any(|w| arrows[w[0]].target != arrows[w[1]].source) {
                    return Err(Error::NonComposablePath { relation: ri, path: pi });
                }
                let e = (arrows[path[0]].source, arrows[*path.last().unwrap()].target);
                if *ends.get_or_insert(e) != e {
                    return Err(Error::NonParallelRelation { relation: ri });
                }
                let c = fp.reduce(c);
                if let Some(t) = kept.iter_mut().find(|t| t.1 == path) {
                    t.0 = fp.add(t.0, c);
                } else {
                    kept.push((c, path));
                }
            }
            kept.retain(|t| t.0 != 0);
            let Some((source, target)) = ends.filter(|_| !kept.is_empty()) else {
                return Err(Error::EmptyRelation { relation: ri });
            };
            rels.push(Relation { terms: kept, source, target });
        }
        let hereditary = rels.is_empty() && is_acyclic(vertices.len(), &arrows);
        Ok(AlgebraSpec { vertices, arrows, relations: rels, fp, hereditary })
    }

    /// Path algebra of a quiver without relations.
    pub fn path_algebra(vertices: Vec<String>, arrows: Vec<Arrow>, fp: Fp) -> Result<AlgebraSpec, Error> {
        AlgebraSpec::new(vertices, arrows, Vec::new(), fp)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }

    /// No relations and no oriented cycles.
    pub fn is_hereditary(&self) -> bool {
        self.hereditary
    }

    /// Same quiver and relations over a different prime field.
    pub fn with_field(&self, fp: Fp) -> Result<AlgebraSpec, Error> {
        let rels =
            self.relations.iter().map(|r| r.terms.iter().map(|(c, p)| (*c as i64, p.clone())).collect()).collect();
        AlgebraSpec::new(self.vertices.clone(), self.arrows.clone(), rels, fp)
    }

    /// Arrows reversed and relation paths read backwards. Representations
    /// of the opposite algebra are the duals of representations of `self`.
    pub fn opposite(&self) -> AlgebraSpec {
        let arrows =
            self.arrows.iter().map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source }).collect();
        let relations = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r.terms.iter().map(|(c, p)| (*c, p.iter().rev().copied().collect())).collect(),
                source: r.target,
                target: r.source,
            })
            .collect();
        AlgebraSpec { vertices: self.vertices.clone(), arrows, relations, fp: self.fp, hereditary: self.hereditary }
    }

    /// Arrows leaving `v`.
    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    /// Arrows entering `v`.
    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// Human-readable path, leftmost arrow applied last.
    pub fn path_name(&self, path: &[usize]) -> String {
        let mut s = String::new();
        for (i, &a) in path.iter().rev().enumerate() {
            if i > 0 {
                s.push('·');
            }
            s.push_str(&self.arrows[a].name);
        }
        s
    }
}

fn is_acyclic(n: usize, arrows: &[Arrow]) -> bool {
    let mut indeg = alloc::vec![0usize; n];
    for a in arrows {
        indeg[a.target] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for a in arrows.iter().filter(|a| a.source == v) {
            indeg[a.target] -= 1;
            if indeg[a.target] == 0 {
                stack.push(a.target);
            }
        }
    }
    seen == n
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn hereditary_flag() {
        assert!(a2().is_hereditary());
        assert!(!a4_rel().is_hereditary());
        assert!(!kron_loop().is_hereditary());
        assert!(a3().opposite().is_hereditary());
    }

    #[test]
    fn validation_errors() {
        let v = vec!["1".to_string(), "2".to_string()];
        let bad = vec![Arrow { name: "a".into(), source: 0, target: 2 }];
        assert!(matches!(AlgebraSpec::path_algebra(v.clone(), bad, f2()), Err(Error::UndefinedVertex { .. })));
        let arrows = vec![Arrow { name: "a".into(), source: 0, target: 1 }];
        let short = vec![vec![(1, vec![0])]];
        assert!(matches!(
            AlgebraSpec::new(v.clone(), arrows.clone(), short, f2()),
            Err(Error::NonAdmissibleRelation { .. })
        ));
        let broken = vec![vec![(1, vec![0, 0])]];
        assert!(matches!(AlgebraSpec::new(v.clone(), arrows, broken, f2()), Err(Error::NonComposablePath { .. })));
        let loops =
            vec![Arrow { name: "x".into(), source: 0, target: 0 }, Arrow { name: "y".into(), source: 1, target: 1 }];
        let skew = vec![vec![(1, vec![0, 0]), (1, vec![1, 1])]];
        assert!(matches!(AlgebraSpec::new(v, loops, skew, f2()), Err(Error::NonParallelRelation { .. })));
    }

    #[test]
    fn opposite_reverses_paths() {
        let a = a4_rel();
        let op = a.opposite();
        assert_eq!(op.relations()[0].terms[0].1, [2, 1, 0]);
        assert_eq!((op.relations()[0].source, op.relations()[0].target), (0, 3));
        assert_eq!(a.path_name(&[0, 1, 2]), "a·b·g");
    }
}
