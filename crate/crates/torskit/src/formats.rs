//! JSON, DOT and `lattice v1` encodings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use torskit_core::catalog::Catalog;
use torskit_core::tors::{Report, TorsLattice};
use torskit_core::{AlgebraSpec, Lattice, Matrix, Rep};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

/// `{dims: {vertex: n}, mats: {arrow: rows}}`, entries reduced mod p.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub dims: BTreeMap<String, usize>,
    pub mats: BTreeMap<String, Vec<Vec<u32>>>,
}

pub fn rep_to_json(spec: &AlgebraSpec, rep: &Rep) -> RepJson {
    let dims = spec.vertex_names().iter().cloned().zip(rep.dims().iter().copied()).collect();
    let mats = spec
        .arrows()
        .iter()
        .zip(rep.mats())
        .map(|(a, m)| (a.name.clone(), (0..m.rows()).map(|r| m.row(r).to_vec()).collect()))
        .collect();
    RepJson { dims, mats }
}

pub fn rep_from_json(spec: &AlgebraSpec, json: &RepJson) -> Result<Rep, FormatError> {
    let invalid = |m: String| FormatError::Invalid(m);
    let mut dims = Vec::with_capacity(spec.vertex_count());
    for v in spec.vertex_names() {
        dims.push(json.dims.get(v).copied().unwrap_or(0));
    }
    if let Some(k) = json.dims.keys().find(|k| spec.vertex_index(k).is_none()) {
        return Err(invalid(format!("unknown vertex `{k}`")));
    }
    if let Some(k) = json.mats.keys().find(|k| spec.arrow_index(k).is_none()) {
        return Err(invalid(format!("unknown arrow `{k}`")));
    }
    let fp = spec.fp();
    let mut mats = Vec::with_capacity(spec.arrows().len());
    for a in spec.arrows() {
        let (r, c) = (dims[a.target], dims[a.source]);
        let rows = json.mats.get(&a.name).cloned().unwrap_or_else(|| vec![vec![0; c]; r]);
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            return Err(invalid(format!("arrow `{}` needs a {r}x{c} matrix", a.name)));
        }
        let data = rows.into_iter().flatten().map(|x| fp.reduce(x as i64)).collect();
        mats.push(Matrix::from_data(r, c, data));
    }
    Rep::new(spec, dims, mats).map_err(|e| invalid(e.to_string()))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub index: usize,
    pub name: String,
    #[serde(flatten)]
    pub rep: RepJson,
    pub brick: bool,
    pub projective: bool,
    pub injective: bool,
    pub tau: Option<usize>,
    pub tau_inv: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogJson {
    pub field: u32,
    pub vertices: Vec<String>,
    pub dim_cap: Vec<usize>,
    pub entries: Vec<CatalogEntry>,
    /// `hom[i][j] = dim Hom(M_i, M_j)`
    pub hom: Vec<Vec<usize>>,
    /// `ext[i][j] = dim Ext¹(M_i, M_j)`
    pub ext: Vec<Vec<usize>>,
}

pub fn catalog_json(cat: &Catalog) -> CatalogJson {
    let n = cat.len();
    let spec = cat.spec();
    CatalogJson {
        field: spec.fp().p(),
        vertices: spec.vertex_names().to_vec(),
        dim_cap: cat.dim_cap().to_vec(),
        entries: (0..n)
            .map(|i| CatalogEntry {
                index: i,
                name: cat.name(i).to_string(),
                rep: rep_to_json(spec, cat.rep(i)),
                brick: cat.is_brick(i),
                projective: cat.is_projective(i),
                injective: cat.is_injective(i),
                tau: cat.tau(i),
                tau_inv: cat.tau_inv(i),
            })
            .collect(),
        hom: (0..n).map(|i| (0..n).map(|j| cat.hom(i, j)).collect()).collect(),
        ext: (0..n).map(|i| (0..n).map(|j| cat.ext(i, j)).collect()).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub id: usize,
    pub name: String,
    pub members: Vec<String>,
    /// Canonical joinand bricks.
    pub bricks: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverJson {
    pub lower: usize,
    pub upper: usize,
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub bottom: usize,
    pub top: usize,
    pub elements: Vec<ElementJson>,
    pub covers: Vec<CoverJson>,
}

/// Cover labels keyed by `(lower, upper)`.
pub type CoverLabels = BTreeMap<(usize, usize), String>;

impl LatticeJson {
    /// Rebuild the lattice from the cover list, labels attached.
    pub fn to_lattice(&self) -> Result<(Lattice, CoverLabels), FormatError> {
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|c| (c.lower, c.upper)).collect();
        let lattice =
            Lattice::from_covers(self.elements.len(), &covers).map_err(|e| FormatError::Invalid(e.to_string()))?;
        let labels = self.covers.iter().filter_map(|c| c.label.clone().map(|l| ((c.lower, c.upper), l))).collect();
        Ok((lattice, labels))
    }
}

fn names(cat: &Catalog, s: torskit_core::Bits) -> Vec<String> {
    s.iter().map(|i| cat.name(i).to_string()).collect()
}

pub fn tors_json(cat: &Catalog, tl: &TorsLattice) -> LatticeJson {
    let l = tl.lattice();
    LatticeJson {
        bottom: l.bottom(),
        top: l.top(),
        elements: (0..tl.len())
            .map(|i| ElementJson {
                id: i,
                name: cat.subcat_name(tl.class(i)),
                members: names(cat, tl.class(i)),
                bricks: names(cat, tl.semibrick_of(i)),
            })
            .collect(),
        covers: l
            .cover_edges()
            .iter()
            .map(|&(lo, hi)| CoverJson {
                lower: lo,
                upper: hi,
                label: tl.label(lo, hi).map(|b| cat.name(b).to_string()),
            })
            .collect(),
    }
}

/// `lattice v1`: `elem <id>`, `cover <lower> <upper>`, `label <lower> <upper> <text>`.
pub fn write_lattice_text(l: &Lattice, label: impl Fn(usize, usize) -> Option<String>) -> String {
    let mut out = String::from("lattice v1\n");
    for x in 0..l.len() {
        let _ = writeln!(out, "elem {x}");
    }
    for &(lo, hi) in l.cover_edges() {
        let _ = writeln!(out, "cover {lo} {hi}");
    }
    for &(lo, hi) in l.cover_edges() {
        if let Some(s) = label(lo, hi) {
            let _ = writeln!(out, "label {lo} {hi} {s}");
        }
    }
    out
}

/// A lattice read from `lattice v1` text. Element ids are arbitrary tokens,
/// numbered in order of appearance.
#[derive(Debug, Clone)]
pub struct LatticeText {
    pub ids: Vec<String>,
    pub lattice: Lattice,
    pub labels: CoverLabels,
}

pub fn read_lattice_text(text: &str) -> Result<LatticeText, FormatError> {
    let mut ids: Vec<String> = Vec::new();
    let mut covers = Vec::new();
    let mut labels = BTreeMap::new();
    let mut header = false;
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let toks: Vec<&str> = raw.split('#').next().unwrap_or("").split_whitespace().collect();
        let err = |msg: &str| FormatError::Syntax { line, msg: msg.to_string() };
        let find = |ids: &[String], s: &str| {
            ids.iter().position(|x| x == s).ok_or_else(|| err(&format!("unknown element `{s}`")))
        };
        match toks[..] {
            [] => {}
            ["lattice", "v1"] if !header && ids.is_empty() => header = true,
            ["elem", id] => {
                if ids.iter().any(|x| x == id) {
                    return Err(err("duplicate element"));
                }
                ids.push(id.to_string());
            }
            ["cover", a, b] => covers.push((find(&ids, a)?, find(&ids, b)?)),
            ["label", a, b, ref rest @ ..] if !rest.is_empty() => {
                labels.insert((find(&ids, a)?, find(&ids, b)?), rest.join(" "));
            }
            _ => return Err(err("expected `elem`, `cover` or `label`")),
        }
    }
    if !header {
        return Err(FormatError::Syntax { line: 1, msg: "missing `lattice v1` header".into() });
    }
    let lattice = Lattice::from_covers(ids.len(), &covers).map_err(|e| FormatError::Invalid(e.to_string()))?;
    for &(lo, hi) in labels.keys() {
        if !lattice.is_cover(lo, hi) {
            return Err(FormatError::Invalid(format!("label on non-cover {} -> {}", ids[lo], ids[hi])));
        }
    }
    Ok(LatticeText { ids, lattice, labels })
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram with the bottom element drawn lowest.
pub fn to_dot(
    name: &str,
    l: &Lattice,
    node_label: impl Fn(usize) -> String,
    edge_label: impl Fn(usize, usize) -> Option<String>,
) -> String {
    let mut out = format!("digraph \"{}\" {{\n  rankdir=BT;\n  node [shape=box];\n", dot_escape(name));
    for x in 0..l.len() {
        let _ = writeln!(out, "  n{x} [label=\"{}\"];", dot_escape(&node_label(x)));
    }
    for &(lo, hi) in l.cover_edges() {
        match edge_label(lo, hi) {
            Some(s) => {
                let _ = writeln!(out, "  n{lo} -> n{hi} [label=\"{}\"];", dot_escape(&s));
            }
            None => {
                let _ = writeln!(out, "  n{lo} -> n{hi};");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// DOT for a labelled tors lattice; edges carry the dimension vector of
/// their brick.
pub fn tors_dot(name: &str, cat: &Catalog, tl: &TorsLattice) -> String {
    to_dot(
        name,
        tl.lattice(),
        |x| cat.subcat_name(tl.class(x)),
        |lo, hi| tl.label(lo, hi).map(|b| cat.rep(b).dim_string()),
    )
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CountsJson {
    pub indecomposables: usize,
    pub bricks: usize,
    pub torsion_classes: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TheoremJson {
    pub name: String,
    pub status: String,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrbitJson {
    pub elements: Vec<String>,
    pub joinand_counts: Vec<usize>,
    /// Exact rational, `"p/q"` or `"p"`.
    pub average: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportJson {
    pub format: String,
    pub fixture: String,
    pub counts: CountsJson,
    pub theorems: Vec<TheoremJson>,
    pub orbits: Vec<OrbitJson>,
}

pub fn orbit_json(cat: &Catalog, tl: &TorsLattice, orbit: &torskit_core::KappaOrbit) -> OrbitJson {
    OrbitJson {
        elements: orbit.elements.iter().map(|&x| cat.subcat_name(tl.class(x))).collect(),
        joinand_counts: orbit.joinand_counts.clone(),
        average: orbit.average().to_string(),
    }
}

pub fn report_json(fixture: &str, cat: &Catalog, tl: &TorsLattice, report: &Report) -> ReportJson {
    ReportJson {
        format: "report v1".into(),
        fixture: fixture.into(),
        counts: CountsJson {
            indecomposables: report.indecomposables,
            bricks: report.bricks,
            torsion_classes: report.torsion_classes,
        },
        theorems: report
            .checks
            .iter()
            .map(|c| TheoremJson {
                name: c.name.clone(),
                status: c.status.as_str().into(),
                witnesses: c.witnesses.clone(),
            })
            .collect(),
        orbits: report.orbits.iter().map(|o| orbit_json(cat, tl, o)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_algebra;
    use torskit_core::Budget;

    fn a2() -> (Catalog, TorsLattice) {
        let f = parse_algebra("vertices 1 2\narrow a 1 2\n").unwrap();
        let cat = Catalog::enumerate(&f.spec, &[1, 1], Budget::default()).unwrap();
        let tl = TorsLattice::build(&cat).unwrap();
        (cat, tl)
    }

    #[test]
    fn rep_json_round_trip() {
        let (cat, _) = a2();
        for r in cat.reps() {
            let j = rep_to_json(cat.spec(), r);
            let text = serde_json::to_string(&j).unwrap();
            let back: RepJson = serde_json::from_str(&text).unwrap();
            assert_eq!(&rep_from_json(cat.spec(), &back).unwrap(), r);
        }
        let bad: RepJson = serde_json::from_str(r#"{"dims":{"1":1,"2":1},"mats":{"a":[[1,0]]}}"#).unwrap();
        assert!(rep_from_json(cat.spec(), &bad).is_err());
    }

    #[test]
    fn lattice_text_round_trip() {
        let (cat, tl) = a2();
        let text = write_lattice_text(tl.lattice(), |lo, hi| tl.label(lo, hi).map(|b| cat.name(b).to_string()));
        let back = read_lattice_text(&text).unwrap();
        assert_eq!(back.lattice.cover_edges(), tl.lattice().cover_edges());
        assert_eq!(back.labels.len(), 5);
        assert_eq!(back.lattice.kappa_bar_table().unwrap(), tl.lattice().kappa_bar_table().unwrap());
        assert!(read_lattice_text("elem a\n").is_err());
        assert!(matches!(read_lattice_text("lattice v1\ncover a b\n"), Err(FormatError::Syntax { line: 2, .. })));
    }

    #[test]
    fn dot_has_labelled_edges() {
        let (cat, tl) = a2();
        let dot = tors_dot("a2", &cat, &tl);
        assert_eq!(dot.matches(" -> ").count(), 5);
        assert_eq!(dot.matches("[label=\"11\"]").count(), 1);
        assert!(dot.contains("rankdir=BT"));
    }
}
