//! Text formats: algebra presentations, module literals, morphisms and
//! resolutions.
//!
//! ```text
//! field Q
//! vertices 2
//! arrow a : 1 -> 2
//! module S1 { dim = [1,0]; }
//! module P1 { dim = [1,1]; map a = [[1]]; }
//! morphism pi : P1 -> S1 { block 1 = [[1]]; }
//! ```

use num_bigint::BigInt;

use crate::algebra::{Algebra, AlgebraSpec, Arrow, Relation};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::homology::Resolution;
use crate::matrix::Matrix;
use crate::rep::{ModuleMap, Representation};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Sym(&'static str),
    Newline,
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

const SYMBOLS: [&str; 15] = ["->", ":", ",", ".", "*", "+", "-", "/", "{", "}", "[", "]", "=", ";", "!"];

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line_no = ln + 1;
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c.is_alphanumeric() || c == '_' || c == '\'' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Word(chars[start..i].iter().collect()),
                    line: line_no,
                    col: start + 1,
                });
                continue;
            }
            let rest: String = chars[i..].iter().take(2).collect();
            let Some(sym) = SYMBOLS.iter().find(|s| rest.starts_with(**s)) else {
                return Err(Error::Parse { line: line_no, col: i + 1, msg: format!("unexpected character `{c}`") });
            };
            out.push(Token { tok: Tok::Sym(sym), line: line_no, col: i + 1 });
            i += sym.chars().count();
        }
        out.push(Token { tok: Tok::Newline, line: line_no, col: chars.len() + 1 });
    }
    let last = out.last().map_or(1, |t| t.line + 1);
    out.push(Token { tok: Tok::Eof, line: last, col: 1 });
    Ok(out)
}

/// A named exact sequence `0 -> M_n -> ... -> M_0 -> X -> 0` given by its
/// terms and maps `maps[0]: M_0 -> X`, `maps[i]: M_i -> M_{i-1}`.
#[derive(Clone, Debug)]
pub struct ResolutionSpec {
    pub target: String,
    pub terms: Vec<String>,
    pub maps: Vec<String>,
}

/// Everything a job file may contain.
#[derive(Clone, Debug)]
pub struct Job {
    pub algebra: Algebra,
    pub modules: Vec<(String, Representation)>,
    pub morphisms: Vec<(String, ModuleMap)>,
    pub resolutions: Vec<(String, ResolutionSpec)>,
}

impl Job {
    pub fn module(&self, name: &str) -> Result<&Representation> {
        self.modules
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .ok_or_else(|| Error::Invalid(format!("no module named `{name}`")))
    }

    pub fn morphism(&self, name: &str) -> Result<&ModuleMap> {
        self.morphisms
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .ok_or_else(|| Error::Invalid(format!("no morphism named `{name}`")))
    }

    /// Assembles a named resolution and checks it is exact. `maps[0]` is the
    /// augmentation `terms[0] -> target`; `maps[i]` goes `terms[i] -> terms[i-1]`.
    pub fn resolution(&self, name: &str) -> Result<Resolution> {
        let spec = self
            .resolutions
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, r)| r)
            .ok_or_else(|| Error::Invalid(format!("no resolution named `{name}`")))?;
        let target = self.module(&spec.target)?;
        let terms: Vec<Representation> =
            spec.terms.iter().map(|t| self.module(t).cloned()).collect::<Result<_>>()?;
        let maps: Vec<ModuleMap> = spec.maps.iter().map(|m| self.morphism(m).cloned()).collect::<Result<_>>()?;
        if terms.is_empty() {
            return Err(Error::Invalid(format!("resolution `{name}` has no terms")));
        }
        for (i, f) in maps.iter().enumerate() {
            let to = if i == 0 { target } else { &terms[i - 1] };
            if f.source() != &terms[i] || f.target() != to {
                return Err(Error::Invalid(format!("map `{}` in resolution `{name}` has the wrong ends", spec.maps[i])));
            }
        }
        let res = Resolution {
            minimal: false,
            augmentation: maps[0].clone(),
            differentials: maps[1..].to_vec(),
            terms,
        };
        res.check()?;
        Ok(res)
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self) -> (usize, usize) {
        let t = &self.toks[self.pos];
        (t.line, t.col)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (line, col) = self.here();
        Err(Error::Parse { line, col, msg: msg.into() })
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn skip_newlines(&mut self) {
        while *self.peek() == Tok::Newline {
            self.bump();
        }
    }

    fn word(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Word(w) => {
                self.bump();
                Ok(w)
            }
            other => self.err(format!("expected a name, found {other:?}")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Tok::Word(w) if w == kw => {
                self.bump();
                Ok(())
            }
            other => {
                let o = other.clone();
                self.err(format!("expected `{kw}`, found {o:?}"))
            }
        }
    }

    fn sym(&mut self, s: &'static str) -> Result<()> {
        if *self.peek() == Tok::Sym(s) {
            self.bump();
            Ok(())
        } else {
            let o = self.peek().clone();
            self.err(format!("expected `{s}`, found {o:?}"))
        }
    }

    fn eat(&mut self, s: &'static str) -> bool {
        if *self.peek() == Tok::Sym(s) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn end_of_line(&mut self) -> Result<()> {
        match self.peek() {
            Tok::Newline | Tok::Eof => {
                self.skip_newlines();
                Ok(())
            }
            other => {
                let o = other.clone();
                self.err(format!("trailing input {o:?}"))
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let (line, col) = self.here();
        let w = self.word()?;
        w.parse().map_err(|_| Error::Parse { line, col, msg: format!("expected an integer, found `{w}`") })
    }

    fn scalar(&mut self, field: Field) -> Result<Scalar> {
        let (line, col) = self.here();
        let neg = self.eat("-");
        let num = self.integer()?;
        let den = if self.eat("/") { self.integer()? } else { BigInt::from(1) };
        let num = if neg { -num } else { num };
        field
            .from_fraction(&num, &den)
            .map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line, col, msg },
                other => other,
            })
    }

    fn matrix(&mut self, field: Field, rows: usize, cols: usize) -> Result<Matrix> {
        self.skip_newlines();
        self.sym("[")?;
        let mut data = Vec::new();
        self.skip_newlines();
        if !self.eat("]") {
            loop {
                self.skip_newlines();
                self.sym("[")?;
                let mut row = Vec::new();
                if !self.eat("]") {
                    loop {
                        row.push(self.scalar(field)?);
                        if self.eat("]") {
                            break;
                        }
                        self.sym(",")?;
                    }
                }
                data.push(row);
                self.skip_newlines();
                if self.eat("]") {
                    break;
                }
                self.sym(",")?;
            }
        }
        if data.len() != rows || data.iter().any(|r| r.len() != cols) {
            return self.err(format!("expected a {rows}x{cols} matrix"));
        }
        Ok(Matrix::from_rows(field, data, cols))
    }

    fn vertex(&mut self, names: &[String]) -> Result<usize> {
        let (line, col) = self.here();
        let w = self.word()?;
        names.iter().position(|n| *n == w).ok_or(Error::Parse {
            line,
            col,
            msg: format!("unknown vertex `{w}`"),
        })
    }

    fn relation(&mut self, field: Field, arrows: &[Arrow]) -> Result<Relation> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let sign_neg = if first {
                self.eat("-")
            } else if self.eat("+") {
                false
            } else if self.eat("-") {
                true
            } else {
                break;
            };
            first = false;
            // optional coefficient `c*` or `p/q*`
            let save = self.pos;
            let mut coeff = field.one();
            if let Tok::Word(w) = self.peek().clone() {
                if w.chars().all(|c| c.is_ascii_digit()) {
                    let c = self.scalar(field)?;
                    if self.eat("*") {
                        coeff = c;
                    } else {
                        self.pos = save;
                    }
                }
            }
            if sign_neg {
                coeff = -coeff;
            }
            let mut path = Vec::new();
            loop {
                let (line, col) = self.here();
                let w = self.word()?;
                let a = arrows.iter().position(|a| a.name == w).ok_or(Error::Parse {
                    line,
                    col,
                    msg: format!("unknown arrow `{w}`"),
                })?;
                path.push(a);
                if !self.eat(".") {
                    break;
                }
            }
            terms.push((coeff, path));
        }
        if terms.is_empty() {
            return self.err("empty relation");
        }
        Ok(Relation { terms })
    }

    fn algebra_spec(&mut self) -> Result<AlgebraSpec> {
        self.skip_newlines();
        let mut field = Field::Rationals;
        let mut vertices: Option<Vec<String>> = None;
        let mut arrows = Vec::new();
        let mut relations = Vec::new();
        let mut seen_field = false;
        loop {
            let Tok::Word(w) = self.peek().clone() else { break };
            match w.as_str() {
                "field" => {
                    if seen_field || vertices.is_some() {
                        return self.err("`field` must come first and only once");
                    }
                    self.bump();
                    let (line, col) = self.here();
                    let k = self.word()?;
                    field = match k.as_str() {
                        "Q" => Field::Rationals,
                        "F" => {
                            let p = self.integer()?;
                            let p: u64 = p.try_into().map_err(|_| Error::NotPrime(0))?;
                            Field::prime(p)?
                        }
                        _ => return Err(Error::Parse { line, col, msg: format!("unknown field `{k}`") }),
                    };
                    seen_field = true;
                }
                "vertices" => {
                    if vertices.is_some() {
                        return self.err("duplicate `vertices`");
                    }
                    self.bump();
                    let first = self.word()?;
                    let names = if *self.peek() == Tok::Sym(",") {
                        let mut v = vec![first];
                        while self.eat(",") {
                            v.push(self.word()?);
                        }
                        v
                    } else if let Ok(n) = first.parse::<usize>() {
                        (1..=n).map(|i| i.to_string()).collect()
                    } else {
                        vec![first]
                    };
                    for (i, v) in names.iter().enumerate() {
                        if names[..i].contains(v) {
                            return self.err(format!("duplicate vertex `{v}`"));
                        }
                    }
                    vertices = Some(names);
                }
                "arrow" => {
                    self.bump();
                    let Some(vs) = vertices.as_ref() else {
                        return self.err("`vertices` must precede arrows");
                    };
                    let name = self.word()?;
                    if arrows.iter().any(|a: &Arrow| a.name == name) {
                        return self.err(format!("duplicate arrow id `{name}`"));
                    }
                    self.sym(":")?;
                    let s = self.vertex(vs)?;
                    self.sym("->")?;
                    let t = self.vertex(vs)?;
                    arrows.push(Arrow { name, source: s, target: t });
                }
                "relation" => {
                    self.bump();
                    relations.push(self.relation(field, &arrows)?);
                }
                _ => break,
            }
            self.end_of_line()?;
        }
        let Some(vertices) = vertices else {
            return self.err("missing `vertices` declaration");
        };
        Ok(AlgebraSpec { field, vertices, arrows, relations })
    }

    fn module_block(&mut self, alg: &Algebra) -> Result<(String, Representation)> {
        self.keyword("module")?;
        let name = self.word()?;
        self.skip_newlines();
        self.sym("{")?;
        self.skip_newlines();
        self.keyword("dim")?;
        self.sym("=")?;
        self.sym("[")?;
        let mut dims = Vec::new();
        if !self.eat("]") {
            loop {
                let n = self.integer()?;
                dims.push(usize::try_from(n).map_err(|_| Error::Dimension("negative dimension".into()))?);
                if self.eat("]") {
                    break;
                }
                self.sym(",")?;
            }
        }
        if dims.len() != alg.num_vertices() {
            return self.err(format!("dimension vector needs {} entries", alg.num_vertices()));
        }
        self.sym(";")?;
        let field = alg.field();
        let mut maps: Vec<Matrix> = alg
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(field, dims[a.target], dims[a.source]))
            .collect();
        loop {
            self.skip_newlines();
            if self.eat("}") {
                break;
            }
            self.keyword("map")?;
            let (line, col) = self.here();
            let an = self.word()?;
            let a = alg.arrow_index(&an).map_err(|_| Error::Parse { line, col, msg: format!("unknown arrow `{an}`") })?;
            self.sym("=")?;
            let arr = &alg.arrows()[a];
            maps[a] = self.matrix(field, dims[arr.target], dims[arr.source])?;
            self.skip_newlines();
            self.sym(";")?;
        }
        let (line, col) = self.here();
        let m = Representation::new(alg.clone(), dims, maps).map_err(|e| Error::Parse {
            line,
            col,
            msg: format!("module `{name}`: {e}"),
        })?;
        Ok((name, m))
    }

    fn morphism_block(&mut self, alg: &Algebra, modules: &[(String, Representation)]) -> Result<(String, ModuleMap)> {
        self.keyword("morphism")?;
        let name = self.word()?;
        self.sym(":")?;
        let find = |p: &Parser, n: &str| -> Result<Representation> {
            modules
                .iter()
                .find(|(m, _)| m == n)
                .map(|(_, m)| m.clone())
                .ok_or_else(|| {
                    let (line, col) = p.here();
                    Error::Parse { line, col, msg: format!("unknown module `{n}`") }
                })
        };
        let sn = self.word()?;
        let src = find(self, &sn)?;
        self.sym("->")?;
        let tn = self.word()?;
        let tgt = find(self, &tn)?;
        self.skip_newlines();
        self.sym("{")?;
        let field = alg.field();
        let mut blocks: Vec<Matrix> = (0..alg.num_vertices())
            .map(|v| Matrix::zeros(field, tgt.dims()[v], src.dims()[v]))
            .collect();
        loop {
            self.skip_newlines();
            if self.eat("}") {
                break;
            }
            self.keyword("block")?;
            let names: Vec<String> = (0..alg.num_vertices()).map(|v| alg.vertex_name(v).to_string()).collect();
            let v = self.vertex(&names)?;
            self.sym("=")?;
            blocks[v] = self.matrix(field, tgt.dims()[v], src.dims()[v])?;
            self.skip_newlines();
            self.sym(";")?;
        }
        let (line, col) = self.here();
        let f = ModuleMap::new(src, tgt, blocks).map_err(|e| Error::Parse {
            line,
            col,
            msg: format!("morphism `{name}`: {e}"),
        })?;
        Ok((name, f))
    }

    fn name_list(&mut self) -> Result<Vec<String>> {
        self.sym("[")?;
        let mut out = Vec::new();
        if self.eat("]") {
            return Ok(out);
        }
        loop {
            out.push(self.word()?);
            if self.eat("]") {
                return Ok(out);
            }
            self.sym(",")?;
        }
    }

    fn resolution_block(&mut self) -> Result<(String, ResolutionSpec)> {
        self.keyword("resolution")?;
        let name = self.word()?;
        self.skip_newlines();
        self.sym("{")?;
        let mut target = None;
        let mut terms = None;
        let mut maps = None;
        loop {
            self.skip_newlines();
            if self.eat("}") {
                break;
            }
            let key = self.word()?;
            self.sym("=")?;
            match key.as_str() {
                "target" => target = Some(self.word()?),
                "terms" => terms = Some(self.name_list()?),
                "maps" => maps = Some(self.name_list()?),
                other => return self.err(format!("unknown resolution field `{other}`")),
            }
            self.sym(";")?;
        }
        match (target, terms, maps) {
            (Some(target), Some(terms), Some(maps)) if terms.len() == maps.len() => {
                Ok((name, ResolutionSpec { target, terms, maps }))
            }
            _ => self.err("resolution needs `target`, `terms` and `maps` of equal length"),
        }
    }
}

/// Parses an algebra presentation and builds it. Anything after the
/// presentation is rejected.
pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let spec = p.algebra_spec()?;
    p.skip_newlines();
    if *p.peek() != Tok::Eof {
        let o = p.peek().clone();
        return p.err(format!("unexpected {o:?}"));
    }
    spec.build()
}

/// Parses an algebra followed by module, morphism and resolution blocks.
pub fn parse_job(text: &str) -> Result<Job> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let spec = p.algebra_spec()?;
    let algebra = spec.build()?;
    let mut job = Job { algebra: algebra.clone(), modules: vec![], morphisms: vec![], resolutions: vec![] };
    loop {
        p.skip_newlines();
        match p.peek().clone() {
            Tok::Eof => break,
            Tok::Word(w) if w == "module" => {
                let (n, m) = p.module_block(&algebra)?;
                if job.modules.iter().any(|(x, _)| *x == n) {
                    return p.err(format!("duplicate module `{n}`"));
                }
                job.modules.push((n, m));
            }
            Tok::Word(w) if w == "morphism" => {
                let entry = p.morphism_block(&algebra, &job.modules)?;
                job.morphisms.push(entry);
            }
            Tok::Word(w) if w == "resolution" => {
                let entry = p.resolution_block()?;
                job.resolutions.push(entry);
            }
            other => return p.err(format!("unexpected {other:?}")),
        }
    }
    Ok(job)
}

/// Parses a single module literal over an already built algebra.
pub fn parse_module(alg: &Algebra, text: &str) -> Result<(String, Representation)> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    p.skip_newlines();
    let m = p.module_block(alg)?;
    p.skip_newlines();
    if *p.peek() != Tok::Eof {
        return p.err("trailing input after module");
    }
    Ok(m)
}

pub fn matrix_literal(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| format!("[{}]", m.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

pub fn module_literal(name: &str, m: &Representation) -> String {
    let alg = m.algebra();
    let dims = m.dims().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
    let mut out = format!("module {name} {{ dim = [{dims}];");
    for (a, arr) in alg.arrows().iter().enumerate() {
        let mat = m.arrow_map(a);
        if mat.is_zero() {
            continue;
        }
        out.push_str(&format!(" map {} = {};", arr.name, matrix_literal(mat)));
    }
    out.push_str(" }");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_byte_identical() {
        let text = "field Q\nvertices 3\narrow a : 1 -> 2\narrow b : 2 -> 3\nrelation a.b\n";
        let alg = parse_algebra(text).unwrap();
        assert_eq!(alg.to_text(), text);
        let named = "field F 3\nvertices x,y\narrow p : x -> y\narrow q : x -> y\n";
        let alg = parse_algebra(named).unwrap();
        assert_eq!(alg.to_text(), named);
        assert_eq!(parse_algebra(&alg.to_text()).unwrap().to_text(), named);
    }

    #[test]
    fn coefficients_and_signs() {
        let text = "field Q\nvertices 1\narrow x1 : 1 -> 1\narrow x2 : 1 -> 1\nrelation x1.x2 + x2.x1\nrelation x1.x1\nrelation -2*x2.x2\n";
        let alg = parse_algebra(text).unwrap();
        assert_eq!(alg.dim(), 4);
        assert_eq!(alg.to_text(), text);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_algebra("field Q\nvertices 2\narrow a : 1 -> 3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, col: 16, .. }), "{e:?}");
        let e = parse_algebra("field Q\nvertices 2\narrow a : 1 -> 2 junk\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        assert_eq!(parse_algebra("field F 4\nvertices 1\n").unwrap_err(), Error::NotPrime(4));
        let e = parse_algebra("field Q\nvertices 2\narrow a : 1 -> 2\nrelation a.b\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, col: 12, .. }));
    }

    #[test]
    fn module_blocks() {
        let text = "field Q\nvertices 2\narrow a : 1 -> 2\nmodule P1 {\n  dim = [1,1];\n  map a = [[1]];\n}\nmodule S1 { dim = [1,0]; }\nmorphism pi : P1 -> S1 { block 1 = [[1]]; }\n";
        let job = parse_job(text).unwrap();
        assert_eq!(job.modules.len(), 2);
        assert_eq!(job.morphisms.len(), 1);
        let with_res = format!("{text}module P2 {{ dim = [0,1]; }}\nmorphism i : P2 -> P1 {{ block 2 = [[1]]; }}\nresolution R {{ target = S1; terms = [P1, P2]; maps = [pi, i]; }}\n");
        let r = parse_job(&with_res).unwrap().resolution("R").unwrap();
        assert_eq!(r.length(), 1);
        let bad = with_res.replace("maps = [pi, i]", "maps = [i, pi]");
        assert!(parse_job(&bad).unwrap().resolution("R").is_err());
        let lit = module_literal("P1", job.module("P1").unwrap());
        assert_eq!(lit, "module P1 { dim = [1,1]; map a = [[1]]; }");
        let (_, again) = parse_module(&job.algebra, &lit).unwrap();
        assert_eq!(&again, job.module("P1").unwrap());
    }

    #[test]
    fn module_violating_relation_rejected() {
        let text = "field Q\nvertices 3\narrow a : 1 -> 2\narrow b : 2 -> 3\nrelation a.b\nmodule M { dim = [1,1,1]; map a = [[1]]; map b = [[1]]; }\n";
        assert!(parse_job(text).is_err());
    }
}
