//! Bound quiver algebras kQ/I with an explicit path basis.
//!
//! Paths compose left to right: for arrows `a: i -> j` and `b: j -> k` the
//! product `a.b` is a path from `i` to `k`. The ideal is handled by plain
//! linear algebra on the truncated path space, so relations need not be
//! monomial or homogeneous.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::RowSpace;

pub type Algebra = Arc<BoundQuiverAlgebra>;

/// A linear combination of basis paths, as `(basis index, coefficient)`.
type Combination = Vec<(usize, Scalar)>;

/// Default bound on the path length explored while searching for the
/// nilpotency degree.
pub const DEFAULT_LENGTH_CAP: usize = 64;
const MAX_PATHS: usize = 250_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A linear combination of parallel paths, each a list of arrow indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { source: v, target: v, arrows: vec![] }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Same as [`Path::is_trivial`]: a trivial path has no arrows.
    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    fn sort_key(&self) -> (usize, usize, &[usize]) {
        (self.arrows.len(), self.source, &self.arrows)
    }
}

/// The raw presentation of an algebra, before the basis is computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub field: Field,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

pub struct BoundQuiverAlgebra {
    spec: AlgebraSpec,
    basis: Vec<Path>,
    /// Normal forms of every path shorter than the nilpotency degree.
    normal_forms: HashMap<(usize, Vec<usize>), Combination>,
    mult: Vec<Vec<(usize, Scalar)>>,
    nilpotency: usize,
    opposite: OnceLock<Algebra>,
}

impl fmt::Debug for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundQuiverAlgebra")
            .field("vertices", &self.spec.vertices.len())
            .field("arrows", &self.spec.arrows.len())
            .field("dim", &self.basis.len())
            .field("nilpotency", &self.nilpotency)
            .finish()
    }
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for BoundQuiverAlgebra {}

fn paths_from(spec: &AlgebraSpec, out_arrows: &[Vec<usize>], max_len: usize) -> Result<Vec<Path>> {
    let mut all: Vec<Path> = (0..spec.vertices.len()).map(Path::trivial).collect();
    let mut frontier = all.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for &a in &out_arrows[p.target] {
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                next.push(Path { source: p.source, target: spec.arrows[a].target, arrows });
            }
        }
        if all.len() + next.len() > MAX_PATHS {
            return Err(Error::TooLarge(format!("more than {MAX_PATHS} paths of length <= {max_len}")));
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(all)
}

impl AlgebraSpec {
    fn validate(&self) -> Result<()> {
        let nv = self.vertices.len();
        for a in &self.arrows {
            if a.source >= nv || a.target >= nv {
                return Err(Error::UnknownVertex(a.name.clone()));
            }
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if self.arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::Invalid(format!("duplicate arrow id `{}`", a.name)));
            }
        }
        for (ri, r) in self.relations.iter().enumerate() {
            let mut ends = None;
            for (c, p) in &r.terms {
                if c.field() != self.field {
                    return Err(Error::Invalid("relation coefficient over the wrong field".into()));
                }
                if p.len() < 2 {
                    return Err(Error::NotAdmissible(2));
                }
                for w in p.windows(2) {
                    if self.arrows[w[0]].target != self.arrows[w[1]].source {
                        return Err(Error::NonParallelRelation(ri));
                    }
                }
                let e = (self.arrows[p[0]].source, self.arrows[*p.last().unwrap()].target);
                match ends {
                    None => ends = Some(e),
                    Some(x) if x != e => return Err(Error::NonParallelRelation(ri)),
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn build(self) -> Result<Algebra> {
        self.build_with_cap(DEFAULT_LENGTH_CAP)
    }

    /// Finds the least `N` such that every path of length `N` lies in the
    /// ideal, then reads off the quotient basis from the row-reduced span of
    /// all two-sided shifts of the relations.
    pub fn build_with_cap(self, cap: usize) -> Result<Algebra> {
        self.validate()?;
        let field = self.field;
        let nv = self.vertices.len();
        let mut out_arrows = vec![Vec::new(); nv];
        for (i, a) in self.arrows.iter().enumerate() {
            out_arrows[a.source].push(i);
        }
        for len in 1..=cap {
            let paths = paths_from(&self, &out_arrows, len)?;
            let n = paths.len();
            let index: HashMap<(usize, &[usize]), usize> =
                paths.iter().enumerate().map(|(k, p)| ((p.source, p.arrows.as_slice()), k)).collect();
            // column of path k is n - 1 - k, so pivots land on the largest paths
            let col = |k: usize| n - 1 - k;
            let mut span = RowSpace::new(n);
            for r in &self.relations {
                let Some((_, first)) = r.terms.first() else { continue };
                let rs = self.arrows[first[0]].source;
                let rt = self.arrows[*first.last().unwrap()].target;
                let minlen = r.terms.iter().map(|(_, p)| p.len()).min().unwrap();
                if minlen > len {
                    continue;
                }
                let room = len - minlen;
                let lefts: Vec<&Path> = paths.iter().filter(|p| p.target == rs && p.len() <= room).collect();
                let rights: Vec<&Path> = paths.iter().filter(|p| p.source == rt && p.len() <= room).collect();
                for p in &lefts {
                    for q in &rights {
                        if p.len() + q.len() > room {
                            continue;
                        }
                        let mut v = vec![field.zero(); n];
                        let mut any = false;
                        for (c, t) in &r.terms {
                            if p.len() + t.len() + q.len() > len {
                                continue;
                            }
                            let mut arrows = p.arrows.clone();
                            arrows.extend_from_slice(t);
                            arrows.extend_from_slice(&q.arrows);
                            let k = index[&(p.source, arrows.as_slice())];
                            v[col(k)] += c;
                            any = true;
                        }
                        if any {
                            span.insert(v);
                        }
                    }
                }
            }
            let top_in_ideal = paths.iter().enumerate().filter(|(_, p)| p.len() == len).all(|(k, _)| {
                let mut e = vec![field.zero(); n];
                e[col(k)] = field.one();
                span.contains(&e)
            });
            if !top_in_ideal {
                continue;
            }
            let pivots: std::collections::HashSet<usize> = span.pivots().iter().copied().collect();
            let basis_idx: Vec<usize> = (0..n).filter(|&k| !pivots.contains(&col(k))).collect();
            let basis: Vec<Path> = basis_idx.iter().map(|&k| paths[k].clone()).collect();
            let pos_of_col: HashMap<usize, usize> =
                basis_idx.iter().enumerate().map(|(b, &k)| (col(k), b)).collect();
            let mut normal_forms = HashMap::new();
            for (k, p) in paths.iter().enumerate() {
                if p.len() >= len {
                    continue;
                }
                let mut e = vec![field.zero(); n];
                e[col(k)] = field.one();
                span.reduce(&mut e);
                let nf: Vec<(usize, Scalar)> = e
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(c, x)| (pos_of_col[&c], x))
                    .collect();
                normal_forms.insert((p.source, p.arrows.clone()), nf);
            }
            let dim = basis.len();
            let mut mult = vec![Vec::new(); dim * dim];
            for (i, a) in basis.iter().enumerate() {
                for (j, b) in basis.iter().enumerate() {
                    if a.target != b.source || a.len() + b.len() >= len {
                        continue;
                    }
                    let mut arrows = a.arrows.clone();
                    arrows.extend_from_slice(&b.arrows);
                    let mut nf = normal_forms[&(a.source, arrows)].clone();
                    nf.sort_by_key(|(k, _)| *k);
                    mult[i * dim + j] = nf;
                }
            }
            return Ok(Arc::new(BoundQuiverAlgebra {
                spec: self,
                basis,
                normal_forms,
                mult,
                nilpotency: len,
                opposite: OnceLock::new(),
            }));
        }
        Err(Error::NotAdmissible(cap))
    }
}

impl BoundQuiverAlgebra {
    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn field(&self) -> Field {
        self.spec.field
    }

    pub fn num_vertices(&self) -> usize {
        self.spec.vertices.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.spec.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.spec
            .vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.spec.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.spec
            .arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn relations(&self) -> &[Relation] {
        &self.spec.relations
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// Least `N` with every path of length `N` in the ideal; this is the
    /// Loewy length of the regular module.
    pub fn nilpotency_degree(&self) -> usize {
        self.nilpotency
    }

    /// Normal form of a path given by its source and arrow list, as sparse
    /// coordinates in the path basis.
    pub fn path_normal_form(&self, source: usize, arrows: &[usize]) -> Vec<(usize, Scalar)> {
        if arrows.len() >= self.nilpotency {
            return vec![];
        }
        self.normal_forms
            .get(&(source, arrows.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.basis.iter().position(|b| b == p)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i * self.dim() + j]
    }

    /// Product of two elements given in basis coordinates.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>> {
        let d = self.dim();
        if a.len() != d || b.len() != d {
            return Err(Error::Dimension(format!("expected vectors of length {d}")));
        }
        let mut out = vec![self.field().zero(); d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &(&xy * c);
                }
            }
        }
        Ok(out)
    }

    pub fn unit(&self) -> Vec<Scalar> {
        self.basis
            .iter()
            .map(|p| if p.is_trivial() { self.field().one() } else { self.field().zero() })
            .collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field().zero(); self.dim()];
        v[i] = self.field().one();
        v
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e{}", self.vertex_name(p.source))
        } else {
            p.arrows.iter().map(|&a| self.spec.arrows[a].name.as_str()).collect::<Vec<_>>().join(".")
        }
    }

    /// Same vertices, reversed arrows and reversed relation paths.
    pub fn opposite(&self) -> Algebra {
        self.opposite
            .get_or_init(|| {
                let spec = AlgebraSpec {
                    field: self.spec.field,
                    vertices: self.spec.vertices.clone(),
                    arrows: self
                        .spec
                        .arrows
                        .iter()
                        .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                        .collect(),
                    relations: self
                        .spec
                        .relations
                        .iter()
                        .map(|r| Relation {
                            terms: r
                                .terms
                                .iter()
                                .map(|(c, p)| (c.clone(), p.iter().rev().copied().collect()))
                                .collect(),
                        })
                        .collect(),
                };
                spec.build_with_cap(self.nilpotency + 1).expect("opposite of an admissible presentation")
            })
            .clone()
    }

    /// Restriction to a vertex subset closed under paths between its members:
    /// the presentation of e·Λ·e for e the sum of the chosen idempotents.
    pub fn restrict(&self, keep: &[usize]) -> Result<Algebra> {
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let newidx: HashMap<usize, usize> = sorted.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        // every path between kept vertices must stay inside the kept set
        for p in &self.basis {
            if newidx.contains_key(&p.source) && newidx.contains_key(&p.target) {
                for &a in &p.arrows {
                    let v = self.spec.arrows[a].target;
                    if !newidx.contains_key(&v) {
                        return Err(Error::Invalid(format!(
                            "vertex subset is not path-convex: {} passes through {}",
                            self.path_name(p),
                            self.vertex_name(v)
                        )));
                    }
                }
            }
        }
        let arrow_map: Vec<Option<usize>> = {
            let mut next = 0;
            self.spec
                .arrows
                .iter()
                .map(|a| {
                    if newidx.contains_key(&a.source) && newidx.contains_key(&a.target) {
                        next += 1;
                        Some(next - 1)
                    } else {
                        None
                    }
                })
                .collect()
        };
        let spec = AlgebraSpec {
            field: self.spec.field,
            vertices: sorted.iter().map(|&v| self.spec.vertices[v].clone()).collect(),
            arrows: self
                .spec
                .arrows
                .iter()
                .filter(|a| newidx.contains_key(&a.source) && newidx.contains_key(&a.target))
                .map(|a| Arrow { name: a.name.clone(), source: newidx[&a.source], target: newidx[&a.target] })
                .collect(),
            relations: self
                .spec
                .relations
                .iter()
                .filter_map(|r| {
                    let terms: Option<Vec<_>> = r
                        .terms
                        .iter()
                        .map(|(c, p)| {
                            p.iter().map(|&a| arrow_map[a]).collect::<Option<Vec<_>>>().map(|q| (c.clone(), q))
                        })
                        .collect();
                    terms.map(|terms| Relation { terms })
                })
                .collect(),
        };
        spec.build_with_cap(self.nilpotency + 1)
    }

    /// Canonical text form; parsing it back and printing again is the identity.
    pub fn to_text(&self) -> String {
        self.spec.to_text()
    }
}

impl AlgebraSpec {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self.field {
            Field::Rationals => out.push_str("field Q\n"),
            Field::Prime(p) => out.push_str(&format!("field F {p}\n")),
        }
        let numeric = self.vertices.iter().enumerate().all(|(i, v)| *v == (i + 1).to_string());
        if numeric {
            out.push_str(&format!("vertices {}\n", self.vertices.len()));
        } else {
            out.push_str(&format!("vertices {}\n", self.vertices.join(",")));
        }
        for a in &self.arrows {
            out.push_str(&format!(
                "arrow {} : {} -> {}\n",
                a.name, self.vertices[a.source], self.vertices[a.target]
            ));
        }
        for r in &self.relations {
            out.push_str("relation ");
            for (k, (c, p)) in r.terms.iter().enumerate() {
                let path = p.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join(".");
                let (neg, mag) = match c.as_rational() {
                    Some(q) if q.is_negative() => (true, -c),
                    _ => (false, c.clone()),
                };
                if k == 0 {
                    if neg {
                        out.push('-');
                    }
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                if !mag.is_one() {
                    out.push_str(&format!("{mag}*"));
                }
                out.push_str(&path);
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_rel(terms: &[(i64, &[usize])]) -> Relation {
        let f = Field::Rationals;
        Relation { terms: terms.iter().map(|(c, p)| (f.from_i64(*c), p.to_vec())).collect() }
    }

    fn a2() -> Algebra {
        AlgebraSpec {
            field: Field::Rationals,
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![Arrow { name: "a".into(), source: 0, target: 1 }],
            relations: vec![],
        }
        .build()
        .unwrap()
    }

    fn exterior2() -> Algebra {
        AlgebraSpec {
            field: Field::Rationals,
            vertices: vec!["1".into()],
            arrows: vec![
                Arrow { name: "x1".into(), source: 0, target: 0 },
                Arrow { name: "x2".into(), source: 0, target: 0 },
            ],
            relations: vec![q_rel(&[(1, &[0, 1]), (1, &[1, 0])]), q_rel(&[(1, &[0, 0])]), q_rel(&[(1, &[1, 1])])],
        }
        .build()
        .unwrap()
    }

    #[test]
    fn a2_basis() {
        let a = a2();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.nilpotency_degree(), 2);
        let names: Vec<String> = a.basis().iter().map(|p| a.path_name(p)).collect();
        assert_eq!(names, vec!["e1", "e2", "a"]);
        let e1 = a.basis_vector(0);
        let arr = a.basis_vector(2);
        assert_eq!(a.multiply(&e1, &arr).unwrap(), arr);
        assert_eq!(a.multiply(&arr, &e1).unwrap(), vec![a.field().zero(); 3]);
    }

    #[test]
    fn exterior_anticommutes() {
        let a = exterior2();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.nilpotency_degree(), 3);
        let x1 = a.basis_vector(1);
        let x2 = a.basis_vector(2);
        let x1x2 = a.multiply(&x1, &x2).unwrap();
        let x2x1 = a.multiply(&x2, &x1).unwrap();
        let neg: Vec<Scalar> = x1x2.iter().map(|c| -c).collect();
        assert_eq!(x2x1, neg);
        assert!(!x1x2.iter().all(Scalar::is_zero));
    }

    #[test]
    fn non_parallel_rejected() {
        let spec = AlgebraSpec {
            field: Field::Rationals,
            vertices: vec!["1".into(), "2".into(), "3".into()],
            arrows: vec![
                Arrow { name: "a".into(), source: 0, target: 1 },
                Arrow { name: "b".into(), source: 1, target: 2 },
                Arrow { name: "c".into(), source: 1, target: 1 },
            ],
            relations: vec![q_rel(&[(1, &[0, 1]), (1, &[0, 2])])],
        };
        assert_eq!(spec.build().unwrap_err(), Error::NonParallelRelation(0));
    }

    #[test]
    fn loop_without_relations_is_not_admissible() {
        let spec = AlgebraSpec {
            field: Field::Rationals,
            vertices: vec!["1".into()],
            arrows: vec![Arrow { name: "x".into(), source: 0, target: 0 }],
            relations: vec![],
        };
        assert_eq!(spec.build_with_cap(8).unwrap_err(), Error::NotAdmissible(8));
    }

    #[test]
    fn non_homogeneous_relation_quotient() {
        // x^2 - x^3 generates the same ideal as x^2 in k[x]/(x^N) terms
        let spec = AlgebraSpec {
            field: Field::Rationals,
            vertices: vec!["1".into()],
            arrows: vec![Arrow { name: "x".into(), source: 0, target: 0 }],
            relations: vec![q_rel(&[(1, &[0, 0]), (-1, &[0, 0, 0])])],
        };
        let a = spec.build().unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.nilpotency_degree(), 2);
    }

    #[test]
    fn opposite_has_reversed_paths() {
        let a = a2();
        let op = a.opposite();
        assert_eq!(op.arrows()[0].source, 1);
        assert_eq!(op.dim(), 3);
    }

    #[test]
    fn associativity_on_exterior() {
        let a = exterior2();
        let d = a.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (x, y, z) = (a.basis_vector(i), a.basis_vector(j), a.basis_vector(k));
                    let l = a.multiply(&a.multiply(&x, &y).unwrap(), &z).unwrap();
                    let r = a.multiply(&x, &a.multiply(&y, &z).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }
}
