//! The `torskit` command line. [`run`] is the whole program minus process
//! plumbing, so tests can drive it in-process.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use torskit_core::catalog::Catalog;
use torskit_core::tors::{self, TorsLattice, THEOREMS};
use torskit_core::{Budget, Error as CoreError, Fp};

use crate::formats;
use crate::parse::{parse_algebra, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_FAILED: i32 = 4;

/// Environment variable holding a uniform budget for every cap.
pub const BUDGET_VAR: &str = "TORSKIT_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "torskit", version, about = "Torsion classes, κ-maps and wide subcategories of small algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
    Lattice,
}

#[derive(Debug, Args)]
struct Common {
    /// Algebra file (`algebra v1`).
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Override the field characteristic.
    #[arg(long)]
    field: Option<u32>,
    /// Per-vertex dimension cap, comma separated.
    #[arg(long, value_delimiter = ',')]
    dim_cap: Option<Vec<usize>>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Indecomposables with Hom/Ext tables and τ.
    Ind(Common),
    /// The labelled lattice of torsion classes.
    Tors(Common),
    /// κ of a brick's torsion class, or of a join-irreducible element.
    Kappa {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with = "element")]
        brick: Option<String>,
        #[arg(long)]
        element: Option<String>,
    },
    /// κ̄ of every element (or one).
    KappaBar {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        element: Option<String>,
    },
    /// Orbits of κ̄ with average canonical join size.
    Orbits(Common),
    /// α(𝒯) and its simple objects for every torsion class.
    Wide(Common),
    /// ε(α(𝒯)) for every torsion class (hereditary algebras).
    Epsilon {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        element: Option<String>,
    },
    /// Check structural statements on the fixture.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated check names; all when omitted.
        #[arg(long, value_delimiter = ',')]
        theorems: Option<Vec<String>>,
        /// Also compute α by definition over sums of this many indecomposables.
        #[arg(long)]
        alpha_depth: Option<usize>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(e) if is_budget_error(e) => EXIT_BUDGET,
            CliError::Core(_) | CliError::Failed(_) => EXIT_FAILED,
        }
    }
}

fn is_budget_error(e: &CoreError) -> bool {
    matches!(
        e,
        CoreError::BudgetExceeded { .. }
            | CoreError::CapExceeded { .. }
            | CoreError::EndTooLarge { .. }
            | CoreError::HomTooLarge { .. }
            | CoreError::ExtTooLarge { .. }
    )
}

/// Parse `TORSKIT_BUDGET`; `None` leaves the defaults.
pub fn budget_from_env(value: Option<&str>) -> Result<Budget, String> {
    match value {
        None => Ok(Budget::default()),
        Some(s) => s
            .trim()
            .parse::<u64>()
            .map(Budget::uniform)
            .map_err(|_| format!("{BUDGET_VAR} must be a non-negative integer, got `{s}`")),
    }
}

/// Run the CLI. `budget` is the raw value of `TORSKIT_BUDGET`, if set.
pub fn run<I, T>(args: I, budget: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let budget = match budget_from_env(budget) {
        Ok(b) => b,
        Err(msg) => {
            let _ = writeln!(err, "torskit: {msg}");
            return EXIT_USAGE;
        }
    };
    match execute(cli.command, budget, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "torskit: {e}");
            e.exit_code()
        }
    }
}

struct Loaded {
    fixture: String,
    cat: Catalog,
}

fn load(common: &Common, budget: Budget) -> Result<Loaded, CliError> {
    let path = common.input.display().to_string();
    let text = std::fs::read_to_string(&common.input).map_err(|source| CliError::Io { path: path.clone(), source })?;
    let file = parse_algebra(&text).map_err(|source| CliError::Parse { path: path.clone(), source })?;
    let mut spec = file.spec.clone();
    if let Some(p) = common.field {
        let fp = Fp::new(p).ok_or_else(|| CliError::Usage(format!("--field {p} is not a supported prime")))?;
        spec = spec.with_field(fp)?;
    }
    let dim_cap = match &common.dim_cap {
        Some(c) if c.len() != spec.vertex_count() => {
            return Err(CliError::Usage(format!(
                "--dim-cap lists {} entries for {} vertices",
                c.len(),
                spec.vertex_count()
            )))
        }
        Some(c) => c.clone(),
        None => file.dim_cap_or_default(),
    };
    let cat = Catalog::enumerate(&spec, &dim_cap, budget)?;
    let fixture = common.input.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or(path);
    Ok(Loaded { fixture, cat })
}

fn emit(common: &Common, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match &common.out {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => out.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialise");
    s.push('\n');
    s
}

fn unsupported(cmd: &str, f: Format) -> CliError {
    CliError::Usage(format!("`{cmd}` does not support --format {}", format_name(f)))
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Text => "text",
        Format::Dot => "dot",
        Format::Lattice => "lattice",
    }
}

/// An element given by numeric id or by its subcategory name.
fn resolve_element(cat: &Catalog, tl: &TorsLattice, s: &str) -> Result<usize, CliError> {
    if let Ok(i) = s.parse::<usize>() {
        return if i < tl.len() { Ok(i) } else { Err(CliError::Usage(format!("no element {i}"))) };
    }
    (0..tl.len())
        .find(|&i| cat.subcat_name(tl.class(i)) == s)
        .ok_or_else(|| CliError::Usage(format!("no torsion class named `{s}`")))
}

fn execute(command: Command, budget: Budget, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Ind(c) => {
            let l = load(&c, budget)?;
            let text = match c.format {
                Format::Json => to_json(&formats::catalog_json(&l.cat)),
                Format::Text => ind_text(&l.cat),
                f => return Err(unsupported("ind", f)),
            };
            emit(&c, &text, out)?;
        }
        Command::Tors(c) => {
            let l = load(&c, budget)?;
            let (cat, tl) = (&l.cat, TorsLattice::build(&l.cat)?);
            let text = match c.format {
                Format::Json => to_json(&formats::tors_json(cat, &tl)),
                Format::Dot => formats::tors_dot(&l.fixture, cat, &tl),
                Format::Lattice => formats::write_lattice_text(tl.lattice(), |lo, hi| {
                    tl.label(lo, hi).map(|b| cat.name(b).to_string())
                }),
                Format::Text => tors_text(cat, &tl),
            };
            emit(&c, &text, out)?;
        }
        Command::Kappa { common: c, brick, element } => {
            let l = load(&c, budget)?;
            let (cat, tl) = (&l.cat, TorsLattice::build(&l.cat)?);
            let lat = tl.lattice();
            let name = |x: usize| cat.subcat_name(tl.class(x));
            let entry = |b: usize| -> Result<serde_json::Value, CliError> {
                let j = tl
                    .index_of(tors::filt_gen(cat, b))
                    .ok_or_else(|| CliError::Failed(format!("FiltGen({}) is not a torsion class", cat.name(b))))?;
                let k = lat.kappa(j).map_err(|e| CliError::Failed(e.to_string()))?;
                Ok(json!({ "brick": cat.name(b), "element": name(j), "kappa": name(k) }))
            };
            let value = match (brick, element) {
                (Some(b), _) => {
                    let i = cat
                        .index_of_name(&b)
                        .filter(|&i| cat.is_brick(i))
                        .ok_or_else(|| CliError::Usage(format!("`{b}` is not a brick in the catalog")))?;
                    entry(i)?
                }
                (None, Some(e)) => {
                    let j = resolve_element(cat, &tl, &e)?;
                    let k =
                        lat.kappa(j).map_err(|_| CliError::Usage(format!("`{}` is not join-irreducible", name(j))))?;
                    json!({ "element": name(j), "kappa": name(k) })
                }
                (None, None) => serde_json::Value::Array(cat.bricks().iter().map(entry).collect::<Result<_, _>>()?),
            };
            let text = match c.format {
                Format::Json => to_json(&value),
                Format::Text => pairs_text(&value, &["brick", "element", "kappa"]),
                f => return Err(unsupported("kappa", f)),
            };
            emit(&c, &text, out)?;
        }
        Command::KappaBar { common: c, element } => {
            let l = load(&c, budget)?;
            let (cat, tl) = (&l.cat, TorsLattice::build(&l.cat)?);
            let table = tl.lattice().kappa_bar_table().map_err(|e| CliError::Failed(e.to_string()))?;
            let name = |x: usize| cat.subcat_name(tl.class(x));
            let row = |x: usize| json!({ "element": name(x), "kappa_bar": name(table[x]) });
            let value = match element {
                Some(e) => row(resolve_element(cat, &tl, &e)?),
                None => serde_json::Value::Array((0..tl.len()).map(row).collect()),
            };
            let text = match c.format {
                Format::Json => to_json(&value),
                Format::Text => pairs_text(&value, &["element", "kappa_bar"]),
                f => return Err(unsupported("kappa-bar", f)),
            };
            emit(&c, &text, out)?;
        }
        Command::Orbits(c) => {
            let l = load(&c, budget)?;
            let (cat, tl) = (&l.cat, TorsLattice::build(&l.cat)?);
            let orbits = tl.lattice().kappa_bar_orbits().map_err(|e| CliError::Failed(e.to_string()))?;
            let orbits: Vec<_> = orbits.iter().map(|o| formats::orbit_json(cat, &tl, o)).collect();
            let text = match c.format {
                Format::Json => to_json(&orbits),
                Format::Text => {
                    orbits.iter().map(|o| format!("{}  avg {}\n", o.elements.join(" -> "), o.average)).collect()
                }
                f => return Err(unsupported("orbits", f)),
            };
            emit(&c, &text, out)?;
        }
        Command::Wide(c) => {
            let l = load(&c, budget)?;
            let (cat, tl) = (&l.cat, TorsLattice::build(&l.cat)?);
            let mut rows = Vec::new();
            for x in 0..tl.len() {
                let w = tors::alpha(cat, &tl, x);
                let simples = tors::simple_objects(cat, w)?;
                rows.push(json!({
                    "element": cat.subcat_name(tl.class(x)),
                    "alpha": cat.subcat_name(w),
                    "simples": simples.iter().map(|i| cat.name(i)).collect::<Vec<_>>(),
                    "wide": tors::wide_check(cat, w),
                }));
            }
            let value = serde_json::Value::Array(rows);
            let text = match c.format {
                Format::Json => to_json(&value),
                Format::Text => pairs_text(&value, &["element", "alpha"]),
                f => return Err(unsupported("wide", f)),
            };
            emit(&c, &text, out)?;
        }
        Command::Epsilon { common: c, element } => {
            let l = load(&c, budget)?;
            let (cat, tl) = (&l.cat, TorsLattice::build(&l.cat)?);
            let row = |x: usize| -> Result<serde_json::Value, CliError> {
                let w = tors::alpha(cat, &tl, x);
                let e = tors::epsilon(cat, w)?;
                Ok(json!({
                    "element": cat.subcat_name(tl.class(x)),
                    "alpha": cat.subcat_name(w),
                    "epsilon": cat.subcat_name(e),
                }))
            };
            let value = match element {
                Some(e) => row(resolve_element(cat, &tl, &e)?)?,
                None => serde_json::Value::Array((0..tl.len()).map(row).collect::<Result<_, _>>()?),
            };
            let text = match c.format {
                Format::Json => to_json(&value),
                Format::Text => pairs_text(&value, &["element", "alpha", "epsilon"]),
                f => return Err(unsupported("epsilon", f)),
            };
            emit(&c, &text, out)?;
        }
        Command::Verify { common: c, theorems, alpha_depth } => {
            let names = theorems.unwrap_or_default();
            if let Some(bad) = names.iter().find(|n| !THEOREMS.contains(&n.as_str())) {
                return Err(CliError::Usage(format!("unknown check `{bad}`; known: {}", THEOREMS.join(", "))));
            }
            let l = load(&c, budget)?;
            let (cat, tl) = (&l.cat, TorsLattice::build(&l.cat)?);
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            let report = tors::verify_theorems(cat, &tl, &names, alpha_depth);
            let json = formats::report_json(&l.fixture, cat, &tl, &report);
            let text = match c.format {
                Format::Json => to_json(&json),
                Format::Text => {
                    let mut s = format!(
                        "{}: {} indecomposables, {} bricks, {} torsion classes\n",
                        json.fixture, json.counts.indecomposables, json.counts.bricks, json.counts.torsion_classes
                    );
                    for t in &json.theorems {
                        s.push_str(&format!("{:<16} {}\n", t.name, t.status));
                        for w in &t.witnesses {
                            s.push_str(&format!("    {w}\n"));
                        }
                    }
                    s
                }
                f => return Err(unsupported("verify", f)),
            };
            emit(&c, &text, out)?;
            if !report.all_passed() {
                return Ok(EXIT_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

fn ind_text(cat: &Catalog) -> String {
    let mut s = String::from("idx  name     dims     brick proj inj  tau\n");
    for i in 0..cat.len() {
        let flag = |b: bool| if b { "yes" } else { "no" };
        let tau = cat.tau(i).map_or("-".to_string(), |t| cat.name(t).to_string());
        s.push_str(&format!(
            "{:<4} {:<8} {:<8} {:<5} {:<4} {:<4} {}\n",
            i,
            cat.name(i),
            cat.rep(i).dim_string(),
            flag(cat.is_brick(i)),
            flag(cat.is_projective(i)),
            flag(cat.is_injective(i)),
            tau
        ));
    }
    s
}

fn tors_text(cat: &Catalog, tl: &TorsLattice) -> String {
    let mut s = String::new();
    for x in 0..tl.len() {
        s.push_str(&format!("{x:<3} {}\n", cat.subcat_name(tl.class(x))));
    }
    for &(lo, hi) in tl.lattice().cover_edges() {
        let label = tl.label(lo, hi).map_or("?", |b| cat.name(b));
        s.push_str(&format!("{lo} -> {hi}  {label}\n"));
    }
    s
}

/// One line per object, `key=value` for the listed keys present.
fn pairs_text(value: &serde_json::Value, keys: &[&str]) -> String {
    let rows: Vec<&serde_json::Value> = match value {
        serde_json::Value::Array(a) => a.iter().collect(),
        v => vec![v],
    };
    let mut s = String::new();
    for r in rows {
        let parts: Vec<String> =
            keys.iter().filter_map(|k| r.get(*k).and_then(|v| v.as_str()).map(|v| format!("{k}={v}"))).collect();
        s.push_str(&parts.join("  "));
        s.push('\n');
    }
    s
}
