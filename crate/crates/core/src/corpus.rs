//! Presentations of the standard test algebras, and the corpus file format:
//! an algebra presentation followed by an optional `golden { ... }` block of
//! expected values, each tagged with where it comes from.

use std::path::Path;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::parse::{parse_algebra, parse_job};

fn header(field: &str, vertices: usize) -> String {
    format!("field {field}\nvertices {vertices}\n")
}

/// The spider quiver with `2n + 1` vertices: a long leg `1 -> 2 -> ... -> n`,
/// a second leg `1 -> n+1 -> ... -> 2n-1` where consecutive arrows compose
/// to zero, and two extra arrows `1 -> 2n`, `1 -> 2n+1`. Arrow `a_n` is
/// skipped so that the numbering of the second leg starts at `a_{n+1}`.
pub fn spider_text(n: usize, field: &str) -> String {
    assert!(n >= 3, "spider needs n >= 3");
    let mut s = header(field, 2 * n + 1);
    for i in 1..n {
        s += &format!("arrow a{i} : {i} -> {}\n", i + 1);
    }
    s += &format!("arrow a{} : 1 -> {}\n", n + 1, n + 1);
    for i in n + 2..2 * n {
        s += &format!("arrow a{i} : {} -> {i}\n", i - 1);
    }
    s += &format!("arrow a{} : 1 -> {}\n", 2 * n, 2 * n);
    s += &format!("arrow a{} : 1 -> {}\n", 2 * n + 1, 2 * n + 1);
    for i in n + 1..=2 * n - 2 {
        s += &format!("relation a{i}.a{}\n", i + 1);
    }
    s
}

/// Exterior algebra on `n` generators: one vertex, loops `x1..xn`,
/// `xi.xi = 0` and `xi.xj + xj.xi = 0`.
pub fn exterior_text(n: usize, field: &str) -> String {
    let mut s = header(field, 1);
    for i in 1..=n {
        s += &format!("arrow x{i} : 1 -> 1\n");
    }
    for i in 1..=n {
        s += &format!("relation x{i}.x{i}\n");
        for j in i + 1..=n {
            s += &format!("relation x{i}.x{j} + x{j}.x{i}\n");
        }
    }
    s
}

/// Linearly oriented `A_n`: `1 -> 2 -> ... -> n`.
pub fn linear_text(n: usize, field: &str) -> String {
    let mut s = header(field, n);
    for i in 1..n {
        s += &format!("arrow a{i} : {i} -> {}\n", i + 1);
    }
    s
}

/// Four vertices with a double arrow `2 => 1`, `3 -> 2`, `3 -> 4 -> 2` and
/// all paths of length two through vertex 2 killed, plus `lambda.alpha`.
pub fn four_vertex_text(field: &str) -> String {
    let mut s = header(field, 4);
    s += "arrow beta : 2 -> 1\narrow gamma : 2 -> 1\narrow delta : 3 -> 2\n";
    s += "arrow lambda : 3 -> 4\narrow alpha : 4 -> 2\n";
    s += "relation delta.gamma\nrelation delta.beta\nrelation lambda.alpha\n";
    s += "relation alpha.beta\nrelation alpha.gamma\n";
    s
}

/// `k[x]/(x^2)`.
pub fn dual_numbers_text(field: &str) -> String {
    header(field, 1) + "arrow x : 1 -> 1\nrelation x.x\n"
}

pub fn spider(n: usize, field: &str) -> Algebra {
    parse_algebra(&spider_text(n, field)).expect("spider presentation")
}

pub fn exterior(n: usize, field: &str) -> Algebra {
    parse_algebra(&exterior_text(n, field)).expect("exterior presentation")
}

pub fn linear(n: usize, field: &str) -> Algebra {
    parse_algebra(&linear_text(n, field)).expect("linear presentation")
}

pub fn four_vertex(field: &str) -> Algebra {
    parse_algebra(&four_vertex_text(field)).expect("four-vertex presentation")
}

pub fn dual_numbers(field: &str) -> Algebra {
    parse_algebra(&dual_numbers_text(field)).expect("dual numbers presentation")
}

/// Where a golden value comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Quoted from the literature.
    Cited,
    /// Produced once by an independent oracle and frozen.
    Oracle(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoldenValue {
    Int(i64),
    /// `inf` entries are `None`.
    List(Vec<Option<i64>>),
    /// `inf` in the file.
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenEntry {
    /// e.g. `loewy_length`, `pd_simple`, `bound 2,3,4,5`
    pub key: String,
    pub value: GoldenValue,
    pub provenance: Provenance,
    pub line: usize,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub source: String,
    pub algebra: Algebra,
    pub golden: Vec<GoldenEntry>,
    /// Free-form `note` lines from the golden block, echoed in reports.
    pub notes: Vec<String>,
}

fn parse_value(text: &str, line: usize) -> Result<GoldenValue> {
    let t = text.trim();
    let bad = |msg: &str| Error::Parse { line, col: 1, msg: msg.to_string() };
    if t == "inf" {
        return Ok(GoldenValue::Infinite);
    }
    if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let items = inner
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| match s.trim() {
                "inf" => Ok(None),
                x => x.parse::<i64>().map(Some).map_err(|_| bad("expected a list of integers or `inf`")),
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(GoldenValue::List(items));
    }
    t.parse::<i64>().map(GoldenValue::Int).map_err(|_| bad("expected an integer, a list or `inf`"))
}

impl std::fmt::Display for GoldenValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GoldenValue::Int(n) => write!(f, "{n}"),
            GoldenValue::Infinite => write!(f, "inf"),
            GoldenValue::List(xs) => {
                let items: Vec<String> = xs.iter().map(|x| x.map_or("inf".to_string(), |n| n.to_string())).collect();
                write!(f, "[{}]", items.join(", "))
            }
        }
    }
}

/// Splits a corpus file into the algebra presentation and its golden block.
pub fn parse_corpus_entry(name: &str, text: &str) -> Result<CorpusEntry> {
    let mut alg_lines = Vec::new();
    let mut golden = Vec::new();
    let mut notes = Vec::new();
    let mut in_golden = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if !in_golden {
            if trimmed.starts_with("golden") && trimmed.ends_with('{') {
                in_golden = true;
                alg_lines.push(String::new());
            } else {
                alg_lines.push(raw.to_string());
            }
            continue;
        }
        alg_lines.push(String::new());
        if trimmed == "}" {
            in_golden = false;
            continue;
        }
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(note) = trimmed.strip_prefix("note ") {
            notes.push(note.trim().trim_matches('"').to_string());
            continue;
        }
        let (body, tag) = match trimmed.split_once('#') {
            Some((b, t)) => (b.trim(), t.trim()),
            None => {
                return Err(Error::Parse { line, col: 1, msg: "golden value without a provenance tag".into() })
            }
        };
        let provenance = if tag == "cited" {
            Provenance::Cited
        } else if let Some(o) = tag.strip_prefix("oracle") {
            let o = o.trim();
            if o.is_empty() {
                return Err(Error::Parse { line, col: 1, msg: "oracle tag needs a name".into() });
            }
            Provenance::Oracle(o.to_string())
        } else {
            return Err(Error::Parse { line, col: 1, msg: format!("unknown provenance tag `{tag}`") });
        };
        let (key, value) = body
            .split_once('=')
            .ok_or_else(|| Error::Parse { line, col: 1, msg: "expected `key = value`".into() })?;
        golden.push(GoldenEntry {
            key: key.trim().to_string(),
            value: parse_value(value, line)?,
            provenance,
            line,
        });
    }
    if in_golden {
        return Err(Error::Parse { line: text.lines().count(), col: 1, msg: "unterminated golden block".into() });
    }
    let source = alg_lines.join("\n");
    let algebra = parse_job(&source)?.algebra;
    Ok(CorpusEntry { name: name.to_string(), source, algebra, golden, notes })
}

/// File extension of corpus entries.
pub const ENTRY_EXTENSION: &str = "alg";

/// Every `*.alg` file in `dir`, sorted by file name. The entry name is the
/// file stem.
pub fn load_corpus_dir(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let read = |p: &Path| std::fs::read_to_string(p).map_err(|e| Error::Invalid(format!("{}: {e}", p.display())));
    let listing = std::fs::read_dir(dir).map_err(|e| Error::Invalid(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<_> = listing
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == ENTRY_EXTENSION))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let name = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            parse_corpus_entry(&name, &read(p)?).map_err(|e| match e {
                Error::Parse { line, col, msg } => Error::Invalid(format!("{}:{line}:{col}: {msg}", p.display())),
                other => other,
            })
        })
        .collect()
}
