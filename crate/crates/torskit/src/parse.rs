//! The `algebra v1` text format.
//!
//! ```text
//! algebra v1              # optional header
//! field 2                 # prime characteristic, default 2
//! vertices 1 2 3          # or one `vertex <name>` per line
//! arrow b 3 2             # name, source, target
//! arrow a 2 1
//! relation a·b            # terms `[c*]path` joined by + or -
//! dimcap 1 1 1            # per-vertex enumeration cap, declaration order
//! ```
//!
//! Paths are arrow names separated by `·` (or `.`), written as
//! compositions: the rightmost arrow is applied first. `#` starts a
//! comment.

use std::fmt::Write as _;

use torskit_core::{AlgebraSpec, Arrow, Error as CoreError, Fp};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: {msg}")]
    UndefinedArrow { line: usize, col: usize, msg: String },
    #[error("{line}: relation paths do not share source and target")]
    NonParallelRelation { line: usize },
    #[error("{line}: relation path is not composable")]
    NonComposablePath { line: usize },
    #[error("{line}: relation contains a path of length < 2")]
    NonAdmissibleRelation { line: usize },
    #[error("{line}: relation has no nonzero terms")]
    EmptyRelation { line: usize },
    #[error("{line}:{col}: {value} is not a supported prime")]
    NonPrimeField { line: usize, col: usize, value: String },
    #[error("{line}: dimcap lists {got} entries for {want} vertices")]
    DimCapLength { line: usize, got: usize, want: usize },
}

/// A parsed algebra file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub spec: AlgebraSpec,
    pub dim_cap: Option<Vec<usize>>,
}

impl AlgebraFile {
    /// The declared cap, or all ones.
    pub fn dim_cap_or_default(&self) -> Vec<usize> {
        self.dim_cap.clone().unwrap_or_else(|| vec![1; self.spec.vertex_count()])
    }
}

struct Token<'a> {
    text: &'a str,
    col: usize,
}

/// Whitespace-separated words with 1-based character columns.
fn words(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, c)) in line.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((i, col + 1)),
            (true, Some((s, sc))) => {
                out.push(Token { text: &line[s..i], col: sc });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((s, sc)) = start {
        out.push(Token { text: &line[s..], col: sc });
    }
    out
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

struct PendingArrow {
    line: usize,
    name: String,
    ends: [(String, usize); 2],
}

struct PendingRelation {
    line: usize,
    /// `(coefficient, arrow names as written, column of the term)`
    terms: Vec<(i64, Vec<(String, usize)>)>,
}

pub fn parse_algebra(text: &str) -> Result<AlgebraFile, ParseError> {
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<PendingArrow> = Vec::new();
    let mut relations: Vec<PendingRelation> = Vec::new();
    let mut field = None;
    let mut dim_cap: Option<(usize, Vec<usize>)> = None;
    let mut seen_content = false;

    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let body = strip_comment(raw);
        let toks = words(body);
        let Some(head) = toks.first() else { continue };
        let syntax = |col: usize, msg: &str| ParseError::Syntax { line, col, msg: msg.to_string() };
        let args = &toks[1..];
        match head.text {
            "algebra" => {
                if seen_content {
                    return Err(syntax(head.col, "header must come first"));
                }
                match args {
                    [v] if v.text == "v1" => {}
                    [v, ..] => return Err(syntax(v.col, "unsupported version, expected `v1`")),
                    [] => return Err(syntax(head.col + 7, "missing version")),
                }
            }
            "field" => {
                let [p] = args else { return Err(syntax(head.col, "expected `field <prime>`")) };
                let fp = p.text.parse::<u32>().ok().and_then(Fp::new).ok_or_else(|| ParseError::NonPrimeField {
                    line,
                    col: p.col,
                    value: p.text.to_string(),
                })?;
                field = Some(fp);
            }
            "vertex" | "vertices" => {
                if args.is_empty() || (head.text == "vertex" && args.len() != 1) {
                    return Err(syntax(head.col, "expected vertex names"));
                }
                for v in args {
                    if vertices.iter().any(|w| w == v.text) {
                        return Err(syntax(v.col, &format!("vertex `{}` declared twice", v.text)));
                    }
                    check_name(v.text).map_err(|m| syntax(v.col, m))?;
                    vertices.push(v.text.to_string());
                }
            }
            "arrow" => {
                let [name, s, t] = args else {
                    return Err(syntax(head.col, "expected `arrow <name> <source> <target>`"));
                };
                check_name(name.text).map_err(|m| syntax(name.col, m))?;
                if name.text.starts_with(|c: char| c.is_ascii_digit()) {
                    return Err(syntax(name.col, "arrow names may not start with a digit"));
                }
                if arrows.iter().any(|a| a.name == name.text) {
                    return Err(syntax(name.col, &format!("arrow `{}` declared twice", name.text)));
                }
                arrows.push(PendingArrow {
                    line,
                    name: name.text.to_string(),
                    ends: [(s.text.to_string(), s.col), (t.text.to_string(), t.col)],
                });
            }
            "relation" => {
                let rest_col = head.col + head.text.chars().count();
                let rest: String = body.chars().skip(rest_col - 1).collect();
                relations.push(parse_relation(line, rest_col, &rest)?);
            }
            "dimcap" => {
                let mut caps = Vec::new();
                for a in args {
                    caps.push(a.text.parse::<usize>().map_err(|_| syntax(a.col, "expected a nonnegative integer"))?);
                }
                dim_cap = Some((line, caps));
            }
            other => return Err(syntax(head.col, &format!("unknown directive `{other}`"))),
        }
        seen_content = true;
    }

    let fp = field.unwrap_or(Fp::new(2).expect("2 is prime"));
    let mut resolved = Vec::with_capacity(arrows.len());
    for a in &arrows {
        let mut ends = [0; 2];
        for (k, (v, col)) in a.ends.iter().enumerate() {
            ends[k] = vertices.iter().position(|w| w == v).ok_or_else(|| ParseError::UndefinedArrow {
                line: a.line,
                col: *col,
                msg: format!("arrow `{}` refers to undeclared vertex `{v}`", a.name),
            })?;
        }
        resolved.push(Arrow { name: a.name.clone(), source: ends[0], target: ends[1] });
    }
    let mut rels = Vec::with_capacity(relations.len());
    for r in &relations {
        let mut terms = Vec::new();
        for (c, names) in &r.terms {
            let mut path = Vec::new();
            // written as a composition: reverse into application order
            for (n, col) in names.iter().rev() {
                let i = resolved.iter().position(|a| &a.name == n).ok_or_else(|| ParseError::UndefinedArrow {
                    line: r.line,
                    col: *col,
                    msg: format!("undefined arrow `{n}`"),
                })?;
                path.push(i);
            }
            terms.push((*c, path));
        }
        rels.push(terms);
    }
    let spec = AlgebraSpec::new(vertices, resolved, rels, fp).map_err(|e| {
        let line_of = |i: usize| relations[i].line;
        match e {
            CoreError::NonParallelRelation { relation } => ParseError::NonParallelRelation { line: line_of(relation) },
            CoreError::NonComposablePath { relation, .. } => ParseError::NonComposablePath { line: line_of(relation) },
            CoreError::NonAdmissibleRelation { relation, .. } => {
                ParseError::NonAdmissibleRelation { line: line_of(relation) }
            }
            CoreError::EmptyRelation { relation } => ParseError::EmptyRelation { line: line_of(relation) },
            other => unreachable!("vertices were resolved above: {other}"),
        }
    })?;
    let dim_cap = match dim_cap {
        Some((line, caps)) if caps.len() != spec.vertex_count() => {
            return Err(ParseError::DimCapLength { line, got: caps.len(), want: spec.vertex_count() })
        }
        other => other.map(|(_, c)| c),
    };
    Ok(AlgebraFile { spec, dim_cap })
}

fn check_name(s: &str) -> Result<(), &'static str> {
    if s.chars().any(|c| matches!(c, '*' | '·' | '.' | '+' | '-')) {
        Err("names may not contain `*`, `·`, `.`, `+` or `-`")
    } else {
        Ok(())
    }
}

/// Terms `[sign] [coef *] a·b·c` separated by `+` / `-`.
fn parse_relation(line: usize, col0: usize, text: &str) -> Result<PendingRelation, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let syntax = |i: usize, msg: &str| ParseError::Syntax { line, col: col0 + i, msg: msg.to_string() };
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    let mut terms = Vec::new();
    loop {
        skip_ws(&mut i);
        let mut sign = 1i64;
        if terms.is_empty() {
            if i < chars.len() && chars[i] == '-' {
                sign = -1;
                i += 1;
            }
        } else {
            match chars.get(i) {
                Some('+') => i += 1,
                Some('-') => {
                    sign = -1;
                    i += 1
                }
                None => break,
                Some(_) => return Err(syntax(i, "expected `+` or `-` between terms")),
            }
        }
        skip_ws(&mut i);
        let mut coef = 1i64;
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        if i > start {
            let digits: String = chars[start..i].iter().collect();
            coef = digits.parse().map_err(|_| syntax(start, "coefficient out of range"))?;
            skip_ws(&mut i);
            if chars.get(i) != Some(&'*') {
                return Err(syntax(i, "expected `*` after coefficient"));
            }
            i += 1;
            skip_ws(&mut i);
        }
        let mut names = Vec::new();
        loop {
            let s = i;
            while i < chars.len() && !chars[i].is_whitespace() && !matches!(chars[i], '·' | '.' | '+' | '-' | '*') {
                i += 1;
            }
            if i == s {
                return Err(syntax(i, "expected an arrow name"));
            }
            names.push((chars[s..i].iter().collect::<String>(), col0 + s));
            if i < chars.len() && matches!(chars[i], '·' | '.') {
                i += 1;
            } else {
                break;
            }
        }
        terms.push((sign * coef, names));
    }
    if terms.is_empty() {
        return Err(syntax(0, "empty relation"));
    }
    Ok(PendingRelation { line, terms })
}

/// Canonical text for a spec: parses back to an equal spec.
pub fn write_algebra(spec: &AlgebraSpec, dim_cap: Option<&[usize]>) -> String {
    let mut out = String::from("algebra v1\n");
    let _ = writeln!(out, "field {}", spec.fp().p());
    let _ = writeln!(out, "vertices {}", spec.vertex_names().join(" "));
    for a in spec.arrows() {
        let names = spec.vertex_names();
        let _ = writeln!(out, "arrow {} {} {}", a.name, names[a.source], names[a.target]);
    }
    for r in spec.relations() {
        let terms: Vec<String> = r.terms.iter().map(|(c, p)| format!("{c}*{}", spec.path_name(p))).collect();
        let _ = writeln!(out, "relation {}", terms.join(" + "));
    }
    if let Some(caps) = dim_cap {
        let caps: Vec<String> = caps.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "dimcap {}", caps.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_minimal() {
        let f = parse_algebra("vertices 1 2\narrow a 1 2\nfield 2\n").unwrap();
        assert_eq!(f.spec.vertex_count(), 2);
        assert!(f.spec.is_hereditary());
        assert_eq!(f.spec.arrows()[0], Arrow { name: "a".into(), source: 0, target: 1 });
        assert_eq!(f.dim_cap_or_default(), [1, 1]);
    }

    #[test]
    fn relation_is_read_right_to_left() {
        let text = "algebra v1\nvertices 1 2 3 4\narrow γ 4 3\narrow β 3 2\narrow α 2 1\nrelation α·β·γ\n";
        let f = parse_algebra(text).unwrap();
        assert_eq!(f.spec.relations()[0].terms, [(1, vec![0, 1, 2])]);
        assert!(!f.spec.is_hereditary());
    }

    #[test]
    fn coefficients_and_signs() {
        let text = "field 3\nvertices 1 2\narrow e1 1 1\narrow e2 2 2\narrow a 2 1\n\
                    relation e1.e1\nrelation e2·e2\nrelation a·e2 - e1·a\nrelation -2*a·e2 + 2 * e1·a\n";
        let f = parse_algebra(text).unwrap();
        assert_eq!(f.spec.relations()[2].terms, [(1, vec![1, 2]), (2, vec![2, 0])]);
        assert_eq!(f.spec.relations()[3].terms, [(1, vec![1, 2]), (2, vec![2, 0])]);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_algebra("vertices 1 2\narrow a 1 3\n").unwrap_err();
        assert!(matches!(e, ParseError::UndefinedArrow { line: 2, col: 11, .. }), "{e}");
        let e = parse_algebra("vertices 1 2\narrow a 1 2\nrelation a·b\n").unwrap_err();
        assert!(matches!(e, ParseError::UndefinedArrow { line: 3, .. }), "{e}");
        let e = parse_algebra("field 4\n").unwrap_err();
        assert!(matches!(e, ParseError::NonPrimeField { line: 1, col: 7, .. }));
        let e = parse_algebra("vertices 1\nwibble\n").unwrap_err();
        assert_eq!(e.to_string(), "2:1: syntax error: unknown directive `wibble`");
        let e = parse_algebra("vertices 1 2\narrow a 1 2\nrelation a\n").unwrap_err();
        assert_eq!(e, ParseError::NonAdmissibleRelation { line: 3 });
        let e = parse_algebra("vertices 1 2\narrow a 1 2\narrow b 2 1\nrelation a·b + b·a\n").unwrap_err();
        assert_eq!(e, ParseError::NonParallelRelation { line: 4 });
        let e = parse_algebra("vertices 1 2\narrow a 1 2\ndimcap 1\n").unwrap_err();
        assert_eq!(e, ParseError::DimCapLength { line: 3, got: 1, want: 2 });
        let e = parse_algebra("vertices 1 2\narrow a 1 2\narrow b 1 2\nrelation 2 a·b\n").unwrap_err();
        assert!(matches!(e, ParseError::Syntax { line: 4, .. }));
    }

    #[test]
    fn writer_round_trips() {
        let text = "vertices 1 2\narrow e1 1 1\narrow e2 2 2\narrow a 2 1\n\
                    relation e1·e1\nrelation e2·e2\nrelation a·e2 - e1·a\ndimcap 2 2\n";
        let f = parse_algebra(text).unwrap();
        let g = parse_algebra(&write_algebra(&f.spec, f.dim_cap.as_deref())).unwrap();
        assert_eq!(f, g);
    }
}
