//! Filtration certificates: finite trees witnessing `M ∈ ⟨T⟩_n`.
//!
//! A leaf says its module is a summand of a sum of generator pieces. A
//! summand node says its module is a summand of its child's module. An
//! extension node carries a short exact sequence `0 -> U -> A -> V -> 0` with
//! certificates for `U` and `V`; its depth is the sum of theirs.

use serde_json::{json, Map, Value};

use crate::algebra::Algebra;
use crate::decompose::{is_in_add, AddGenerator, AddWitness, DecomposeConfig, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::homology::{cosyzygy_horseshoe, rotate_right, syzygy, Resolution, ShortExactSequence, SummandMaps};
use crate::matrix::Matrix;
use crate::parse::parse_algebra;
use crate::rep::{direct_sum_or_zero, sum_injections, ModuleMap, Representation};

#[derive(Clone, Debug)]
pub enum CertNode {
    /// `module` lies in `add T`. Without a witness the verifier decides
    /// membership itself.
    Leaf { module: Representation, witness: Option<AddWitness> },
    /// `retraction ∘ section = id` exhibits `module` as a summand of the
    /// child's module.
    Summand { module: Representation, section: ModuleMap, retraction: ModuleMap, child: Box<CertNode> },
    Extension { ses: ShortExactSequence, left: Box<CertNode>, right: Box<CertNode> },
}

impl CertNode {
    pub fn module(&self) -> &Representation {
        match self {
            CertNode::Leaf { module, .. } | CertNode::Summand { module, .. } => module,
            CertNode::Extension { ses, .. } => ses.middle(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            CertNode::Leaf { module, .. } => usize::from(!module.is_zero()),
            CertNode::Summand { child, .. } => child.depth(),
            CertNode::Extension { left, right, .. } => left.depth() + right.depth(),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            CertNode::Leaf { .. } => 1,
            CertNode::Summand { child, .. } => 1 + child.node_count(),
            CertNode::Extension { left, right, .. } => 1 + left.node_count() + right.node_count(),
        }
    }

    pub fn summand(module: &Representation, maps: SummandMaps, child: CertNode) -> CertNode {
        debug_assert!(maps.summand() == module);
        CertNode::Summand {
            module: module.clone(),
            section: maps.section,
            retraction: maps.retraction,
            child: Box::new(child),
        }
    }

    pub fn extension(ses: ShortExactSequence, left: CertNode, right: CertNode) -> CertNode {
        CertNode::Extension { ses, left: Box::new(left), right: Box::new(right) }
    }

    fn map_modules(&self, f: &mut dyn FnMut(&Representation) -> Result<Representation>, g: &mut dyn FnMut(&ModuleMap, &Representation, &Representation) -> ModuleMap) -> Result<CertNode> {
        Ok(match self {
            CertNode::Leaf { module, witness } => {
                let m = f(module)?;
                let witness = match witness {
                    None => None,
                    Some(w) => {
                        let t = f(w.section.target())?;
                        Some(AddWitness {
                            pieces: w.pieces.clone(),
                            section: g(&w.section, &m, &t),
                            retraction: g(&w.retraction, &t, &m),
                        })
                    }
                };
                CertNode::Leaf { module: m, witness }
            }
            CertNode::Summand { module, section, retraction, child } => {
                let c = child.map_modules(f, g)?;
                let m = f(module)?;
                CertNode::Summand {
                    section: g(section, &m, c.module()),
                    retraction: g(retraction, c.module(), &m),
                    module: m,
                    child: Box::new(c),
                }
            }
            CertNode::Extension { ses, left, right } => {
                let l = left.map_modules(f, g)?;
                let r = right.map_modules(f, g)?;
                let mid = f(ses.middle())?;
                let ses = ShortExactSequence { f: g(&ses.f, l.module(), &mid), g: g(&ses.g, &mid, r.module()) };
                CertNode::Extension { ses, left: Box::new(l), right: Box::new(r) }
            }
        })
    }
}

/// A certificate that the root module lies in `⟨T⟩_claimed_depth`, where `T`
/// is the direct sum of `generator`.
#[derive(Clone, Debug)]
pub struct FiltrationCertificate {
    pub generator: Vec<Representation>,
    pub root: CertNode,
    pub claimed_depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Slash-separated location, e.g. `root/summand/extension.right/leaf`.
    pub path: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    pub depth: usize,
    pub failure: Option<Failure>,
}

impl FiltrationCertificate {
    pub fn depth(&self) -> usize {
        self.root.depth()
    }

    pub fn algebra(&self) -> &Algebra {
        self.root.module().algebra()
    }

    /// Transport along restriction to a path-convex vertex subset, `M ↦ M e`.
    /// Restriction is exact, so the image is again a certificate.
    pub fn restrict(&self, keep: &[usize]) -> Result<FiltrationCertificate> {
        let sub = self.algebra().restrict(keep)?;
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut f = |m: &Representation| m.restrict(&sub, &sorted);
        let idx = sorted.clone();
        let mut g = |h: &ModuleMap, s: &Representation, t: &Representation| {
            ModuleMap::new_unchecked(s.clone(), t.clone(), idx.iter().map(|&v| h.block(v).clone()).collect())
        };
        let root = self.root.map_modules(&mut f, &mut g)?;
        let generator = self.generator.iter().map(|p| p.restrict(&sub, &sorted)).collect::<Result<Vec<_>>>()?;
        Ok(FiltrationCertificate { generator, root, claimed_depth: self.claimed_depth })
    }
}

struct Verifier<'a> {
    gen: &'a [Representation],
    alg: &'a Algebra,
}

type Check = std::result::Result<(), Failure>;

fn fail(path: &str, reason: impl Into<String>) -> Check {
    Err(Failure { path: path.to_string(), reason: reason.into() })
}

impl Verifier<'_> {
    fn shape(&self, h: &ModuleMap, s: &Representation, t: &Representation, what: &str) -> Result<()> {
        if h.source() != s || h.target() != t {
            return Err(Error::MalformedCertificate(format!("{what} does not connect the node's modules")));
        }
        for v in 0..self.alg.num_vertices() {
            let b = h.block(v);
            if b.rows() != t.dims()[v] || b.cols() != s.dims()[v] {
                return Err(Error::MalformedCertificate(format!("{what} has a badly shaped block at vertex {}", v + 1)));
            }
        }
        Ok(())
    }

    fn split_pair(&self, s: &ModuleMap, r: &ModuleMap, path: &str) -> Check {
        if s.check().is_err() {
            return fail(path, "section is not a module map");
        }
        if r.check().is_err() {
            return fail(path, "retraction is not a module map");
        }
        if !r.compose(s).is_identity() {
            return fail(path, "retraction after section is not the identity");
        }
        Ok(())
    }

    fn node(&self, node: &CertNode, path: &str) -> Result<Check> {
        if node.module().algebra() != self.alg {
            return Err(Error::AlgebraMismatch);
        }
        match node {
            CertNode::Leaf { module, witness } => {
                if module.is_zero() {
                    return Ok(Ok(()));
                }
                let path = format!("{path}/leaf");
                match witness {
                    None => {
                        if !is_in_add(module, self.gen, DEFAULT_SEED)? {
                            return Ok(fail(&path, "leaf fails add-membership"));
                        }
                    }
                    Some(w) => {
                        if let Some(&bad) = w.pieces.iter().find(|&&i| i >= self.gen.len()) {
                            return Err(Error::MalformedCertificate(format!("{path}: generator piece {bad} does not exist")));
                        }
                        let parts: Vec<Representation> = w.pieces.iter().map(|&i| self.gen[i].clone()).collect();
                        let sum = direct_sum_or_zero(self.alg, &parts);
                        self.shape(&w.section, module, &sum, "witness section")?;
                        self.shape(&w.retraction, &sum, module, "witness retraction")?;
                        if let Err(e) = self.split_pair(&w.section, &w.retraction, &path) {
                            return Ok(Err(Failure { reason: format!("leaf fails add-membership: {}", e.reason), ..e }));
                        }
                    }
                }
                Ok(Ok(()))
            }
            CertNode::Summand { module, section, retraction, child } => {
                let path = format!("{path}/summand");
                self.shape(section, module, child.module(), "summand section")?;
                self.shape(retraction, child.module(), module, "summand retraction")?;
                if let Err(e) = self.split_pair(section, retraction, &path) {
                    return Ok(Err(e));
                }
                self.node(child, &path)
            }
            CertNode::Extension { ses, left, right } => {
                let path = format!("{path}/extension");
                self.shape(&ses.f, left.module(), ses.middle(), "sequence monomorphism")?;
                self.shape(&ses.g, ses.middle(), right.module(), "sequence epimorphism")?;
                if let Err(e) = ses.check() {
                    return Ok(fail(&path, format!("sequence is not exact: {e}")));
                }
                if let Err(e) = self.node(left, &format!("{path}.left"))? {
                    return Ok(Err(e));
                }
                self.node(right, &format!("{path}.right"))
            }
        }
    }
}

/// Checks that `cert` witnesses `m ∈ ⟨T⟩_n` for `T` the sum of the
/// certificate's generator pieces. Malformed trees (dangling piece
/// references, maps between the wrong modules, mixed algebras) are errors;
/// a well-formed tree that fails a check gives an invalid verdict with the
/// location of the first failing node.
pub fn verify_filtration(cert: &FiltrationCertificate, m: &Representation, n: usize) -> Result<Verdict> {
    let alg = m.algebra();
    if cert.generator.iter().any(|p| p.algebra() != alg) {
        return Err(Error::AlgebraMismatch);
    }
    let depth = cert.root.depth();
    let verdict = |failure: Option<Failure>| Verdict { valid: failure.is_none(), depth, failure };
    if cert.root.module() != m {
        return Ok(verdict(Some(Failure { path: "root".into(), reason: "root module differs from the target module".into() })));
    }
    let v = Verifier { gen: &cert.generator, alg };
    if let Err(e) = v.node(&cert.root, "root")? {
        return Ok(verdict(Some(e)));
    }
    if depth > n {
        return Ok(verdict(Some(Failure {
            path: "root".into(),
            reason: format!("certificate depth {depth} exceeds the claimed {n}"),
        })));
    }
    Ok(verdict(None))
}

/// Builds the comb over an exact sequence `0 -> M_k -> ... -> M_0 -> X -> 0`:
/// `X ∈ ⟨M_0⟩_1 ⋄ ⟨Ω⁻¹M_1⟩_1 ⋄ ... ⋄ ⟨Ω⁻ᵏM_k⟩_1`. `leaf(i, Ω⁻ⁱM_i)` supplies
/// the certificate for each tooth.
pub fn comb_over(res: &Resolution, leaf: &mut dyn FnMut(usize, &Representation) -> Result<CertNode>) -> Result<CertNode> {
    let k = res.differentials.len();
    if k == 0 {
        let x = res.target();
        let inv = res
            .augmentation
            .inverse()
            .ok_or_else(|| Error::Exactness("a one-term resolution needs an isomorphism".into()))?;
        let maps = SummandMaps { section: inv, retraction: res.augmentation.clone() };
        return Ok(CertNode::summand(x, maps, leaf(0, &res.terms[0])?));
    }
    let seqs = res.split_sequences()?;
    let mut node = leaf(k, &syzygy(&res.terms[k], -(k as i64)))?;
    for i in (0..k).rev() {
        // 0 -> M_i -> E ⊕ K_i -> Ω⁻¹K_{i+1} -> 0, then i cosyzygy steps
        let mut ses = rotate_right(&seqs[i])?;
        let e = ses.middle().clone();
        let parts = [crate::homology::injective_envelope(seqs[i].left()).module().clone(), seqs[i].right().clone()];
        let (sum, inj, proj) = sum_injections(&parts);
        if sum != e {
            return Err(Error::Exactness("rotated middle term is not the expected sum".into()));
        }
        let mut y = SummandMaps { section: inj[1].clone(), retraction: proj[1].clone() };
        for _ in 0..i {
            (ses, y) = cosyzygy_horseshoe(&ses, &y)?;
        }
        if ses.right() != node.module() {
            return Err(Error::Exactness(format!("comb step {i} does not meet the certificate below it")));
        }
        let tooth = leaf(i, ses.left())?;
        let below = CertNode::extension(ses, tooth, node);
        let ki = y.summand().clone();
        node = CertNode::summand(&ki, y, below);
    }
    Ok(node)
}

/// Leaf for `m` with a witness against `gen`, or a plain leaf when `m` is one
/// of the pieces.
pub fn leaf_for(gen: &AddGenerator, m: &Representation, cfg: &DecomposeConfig) -> Result<CertNode> {
    let witness = gen
        .witness(m, cfg)?
        .ok_or_else(|| Error::Invalid("module is not in the additive closure of the generator".into()))?;
    Ok(CertNode::Leaf { module: m.clone(), witness: Some(witness) })
}

/// Any exact `0 -> M_k -> ... -> M_0 -> X -> 0` gives
/// `X ∈ ⟨⊕ Ω⁻ⁱM_i⟩_{k+1}`; the generator pieces are the `Ω⁻ⁱM_i`.
pub fn resolution_to_filtration(res: &Resolution) -> Result<FiltrationCertificate> {
    let k = res.differentials.len();
    let pieces: Vec<Representation> = (0..=k).map(|i| syzygy(&res.terms[i], -(i as i64))).collect();
    let gen = AddGenerator::new(pieces.clone());
    let cfg = DecomposeConfig::default();
    let root = comb_over(res, &mut |_, m| leaf_for(&gen, m, &cfg))?;
    Ok(FiltrationCertificate { generator: pieces, root, claimed_depth: k + 1 })
}

// ---------------------------------------------------------------- JSON

const FORMAT: &str = "extdim-certificate/1";

struct Writer {
    modules: Vec<Representation>,
    literals: Vec<Value>,
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect())).collect())
}

fn blocks_json(h: &ModuleMap) -> Value {
    Value::Array(h.blocks().iter().map(matrix_json).collect())
}

impl Writer {
    fn module(&mut self, m: &Representation) -> usize {
        if let Some(i) = self.modules.iter().position(|x| x == m) {
            return i;
        }
        self.modules.push(m.clone());
        self.literals.push(json!({
            "dims": m.dims(),
            "maps": m.arrow_maps().iter().map(matrix_json).collect::<Vec<_>>(),
        }));
        self.modules.len() - 1
    }

    fn node(&mut self, n: &CertNode) -> Value {
        match n {
            CertNode::Leaf { module, witness } => {
                let m = self.module(module);
                let w = match witness {
                    None => Value::Null,
                    Some(w) => json!({
                        "pieces": w.pieces,
                        "section": blocks_json(&w.section),
                        "retraction": blocks_json(&w.retraction),
                    }),
                };
                json!({ "leaf": { "module": m, "witness": w } })
            }
            CertNode::Summand { module, section, retraction, child } => {
                let m = self.module(module);
                let c = self.node(child);
                json!({ "summand": {
                    "module": m,
                    "section": blocks_json(section),
                    "retraction": blocks_json(retraction),
                    "child": c,
                } })
            }
            CertNode::Extension { ses, left, right } => {
                let m = self.module(ses.middle());
                let l = self.node(left);
                let r = self.node(right);
                json!({ "extension": {
                    "middle": m,
                    "mono": blocks_json(&ses.f),
                    "epi": blocks_json(&ses.g),
                    "left": l,
                    "right": r,
                } })
            }
        }
    }
}

impl FiltrationCertificate {
    pub fn to_json(&self) -> Value {
        let mut w = Writer { modules: Vec::new(), literals: Vec::new() };
        let gen: Vec<usize> = self.generator.iter().map(|p| w.module(p)).collect();
        let root = w.node(&self.root);
        json!({
            "format": FORMAT,
            "algebra": self.algebra().to_text(),
            "claimed_depth": self.claimed_depth,
            "generator": gen,
            "modules": w.literals,
            "root": root,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("json") + "\n"
    }

    pub fn from_json_str(text: &str) -> Result<FiltrationCertificate> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::MalformedCertificate(format!("not JSON: {e}")))?;
        Self::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<FiltrationCertificate> {
        let bad = |msg: &str| Error::MalformedCertificate(msg.to_string());
        let obj = v.as_object().ok_or_else(|| bad("top level must be an object"))?;
        if obj.get("format").and_then(Value::as_str) != Some(FORMAT) {
            return Err(bad("unknown certificate format"));
        }
        let alg = parse_algebra(obj.get("algebra").and_then(Value::as_str).ok_or_else(|| bad("missing algebra"))?)?;
        let claimed_depth = obj.get("claimed_depth").and_then(Value::as_u64).ok_or_else(|| bad("missing claimed_depth"))? as usize;
        let lits = obj.get("modules").and_then(Value::as_array).ok_or_else(|| bad("missing module table"))?;
        let modules = lits
            .iter()
            .enumerate()
            .map(|(i, l)| read_module(&alg, l).map_err(|e| Error::MalformedCertificate(format!("module #{i}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let mut r = Reader { alg: &alg, modules: &modules, generator: Vec::new() };
        r.generator = obj
            .get("generator")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing generator"))?
            .iter()
            .map(|i| r.module(i))
            .collect::<Result<Vec<_>>>()?;
        let root = r.node(obj.get("root").ok_or_else(|| bad("missing root"))?)?;
        Ok(FiltrationCertificate { generator: r.generator, root, claimed_depth })
    }
}

fn read_matrix(alg: &Algebra, v: &Value, rows: usize, cols: usize) -> Result<Matrix> {
    let bad = || Error::MalformedCertificate(format!("expected a {rows}x{cols} matrix of scalar strings"));
    let rs = v.as_array().ok_or_else(bad)?;
    if rs.len() != rows {
        return Err(bad());
    }
    let field = alg.field();
    let mut out = Vec::with_capacity(rows);
    for r in rs {
        let cs = r.as_array().ok_or_else(bad)?;
        if cs.len() != cols {
            return Err(bad());
        }
        out.push(cs.iter().map(|c| field.parse_scalar(c.as_str().ok_or_else(bad)?)).collect::<Result<Vec<_>>>()?);
    }
    Ok(Matrix::from_rows(field, out, cols))
}

fn read_module(alg: &Algebra, v: &Value) -> Result<Representation> {
    let bad = |msg: &str| Error::MalformedCertificate(msg.to_string());
    let dims: Vec<usize> = v
        .get("dims")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing dims"))?
        .iter()
        .map(|d| d.as_u64().map(|d| d as usize).ok_or_else(|| bad("dims must be integers")))
        .collect::<Result<_>>()?;
    if dims.len() != alg.num_vertices() {
        return Err(bad("dimension vector has the wrong length"));
    }
    let maps = v.get("maps").and_then(Value::as_array).ok_or_else(|| bad("missing maps"))?;
    if maps.len() != alg.arrows().len() {
        return Err(bad("one matrix per arrow is required"));
    }
    let mats = alg
        .arrows()
        .iter()
        .zip(maps)
        .map(|(a, m)| read_matrix(alg, m, dims[a.target], dims[a.source]))
        .collect::<Result<Vec<_>>>()?;
    Representation::new(alg.clone(), dims, mats)
}

struct Reader<'a> {
    alg: &'a Algebra,
    modules: &'a [Representation],
    generator: Vec<Representation>,
}

impl Reader<'_> {
    fn module(&self, v: &Value) -> Result<Representation> {
        let i = v.as_u64().ok_or_else(|| Error::MalformedCertificate("module reference must be an index".into()))? as usize;
        self.modules
            .get(i)
            .cloned()
            .ok_or_else(|| Error::MalformedCertificate(format!("dangling module reference {i}")))
    }

    /// Maps are read without the intertwining check; the verifier reports
    /// broken maps at their node.
    fn map(&self, v: &Value, s: &Representation, t: &Representation) -> Result<ModuleMap> {
        let bs = v.as_array().ok_or_else(|| Error::MalformedCertificate("map must be a list of blocks".into()))?;
        if bs.len() != self.alg.num_vertices() {
            return Err(Error::MalformedCertificate("map needs one block per vertex".into()));
        }
        let blocks = bs
            .iter()
            .enumerate()
            .map(|(i, b)| read_matrix(self.alg, b, t.dims()[i], s.dims()[i]))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleMap::new_unchecked(s.clone(), t.clone(), blocks))
    }

    fn piece_sum(&self, pieces: &[usize]) -> Result<Representation> {
        let parts = pieces
            .iter()
            .map(|&i| {
                self.generator
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::MalformedCertificate(format!("generator piece {i} does not exist")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(direct_sum_or_zero(self.alg, &parts))
    }

    fn field<'v>(&self, o: &'v Map<String, Value>, k: &str) -> Result<&'v Value> {
        o.get(k).ok_or_else(|| Error::MalformedCertificate(format!("node is missing `{k}`")))
    }

    fn node(&self, v: &Value) -> Result<CertNode> {
        let o = v.as_object().filter(|o| o.len() == 1).ok_or_else(|| Error::MalformedCertificate("node must have exactly one kind".into()))?;
        let (kind, body) = o.iter().next().expect("one entry");
        let body = body.as_object().ok_or_else(|| Error::MalformedCertificate("node body must be an object".into()))?;
        match kind.as_str() {
            "leaf" => {
                let module = self.module(self.field(body, "module")?)?;
                let witness = match self.field(body, "witness")? {
                    Value::Null => None,
                    w => {
                        let pieces: Vec<usize> = w
                            .get("pieces")
                            .and_then(Value::as_array)
                            .ok_or_else(|| Error::MalformedCertificate("witness needs pieces".into()))?
                            .iter()
                            .map(|p| p.as_u64().map(|p| p as usize).ok_or_else(|| Error::MalformedCertificate("piece must be an index".into())))
                            .collect::<Result<_>>()?;
                        let sum = self.piece_sum(&pieces)?;
                        let section = self.map(w.get("section").unwrap_or(&Value::Null), &module, &sum)?;
                        let retraction = self.map(w.get("retraction").unwrap_or(&Value::Null), &sum, &module)?;
                        Some(AddWitness { pieces, section, retraction })
                    }
                };
                Ok(CertNode::Leaf { module, witness })
            }
            "summand" => {
                let module = self.module(self.field(body, "module")?)?;
                let child = self.node(self.field(body, "child")?)?;
                let section = self.map(self.field(body, "section")?, &module, child.module())?;
                let retraction = self.map(self.field(body, "retraction")?, child.module(), &module)?;
                Ok(CertNode::Summand { module, section, retraction, child: Box::new(child) })
            }
            "extension" => {
                let middle = self.module(self.field(body, "middle")?)?;
                let left = self.node(self.field(body, "left")?)?;
                let right = self.node(self.field(body, "right")?)?;
                let f = self.map(self.field(body, "mono")?, left.module(), &middle)?;
                let g = self.map(self.field(body, "epi")?, &middle, right.module())?;
                Ok(CertNode::Extension { ses: ShortExactSequence { f, g }, left: Box::new(left), right: Box::new(right) })
            }
            other => Err(Error::MalformedCertificate(format!("unknown node kind `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{linear, spider};
    use crate::homology::minimal_projective_resolution;

    fn strip_witnesses(n: &CertNode) -> CertNode {
        match n {
            CertNode::Leaf { module, .. } => CertNode::Leaf { module: module.clone(), witness: None },
            CertNode::Summand { module, section, retraction, child } => CertNode::Summand {
                module: module.clone(),
                section: section.clone(),
                retraction: retraction.clone(),
                child: Box::new(strip_witnesses(child)),
            },
            CertNode::Extension { ses, left, right } => {
                CertNode::extension(ses.clone(), strip_witnesses(left), strip_witnesses(right))
            }
        }
    }

    #[test]
    fn projective_is_a_leaf_over_the_regular_module() {
        let a = linear(2, "Q");
        let p1 = Representation::projective(&a, 0).unwrap();
        let gen = AddGenerator::new(vec![Representation::regular(&a)]);
        let root = leaf_for(&gen, &p1, &DecomposeConfig::default()).unwrap();
        let cert = FiltrationCertificate { generator: gen.pieces().to_vec(), root, claimed_depth: 1 };
        let v = verify_filtration(&cert, &p1, 1).unwrap();
        assert!(v.valid, "{v:?}");
        assert_eq!(v.depth, 1);
    }

    #[test]
    fn two_step_comb_for_a_simple() {
        let a = linear(2, "Q");
        let s1 = Representation::simple(&a, 0).unwrap();
        let res = minimal_projective_resolution(&s1, 4);
        assert_eq!(res.terms.len(), 2);
        let cert = resolution_to_filtration(&res).unwrap();
        assert_eq!(cert.depth(), 2);
        assert!(verify_filtration(&cert, &s1, 2).unwrap().valid);
        // too deep for a claim of one layer
        let v = verify_filtration(&cert, &s1, 1).unwrap();
        assert!(!v.valid);
        assert!(v.failure.unwrap().reason.contains("exceeds"));
    }

    #[test]
    fn regular_generator_rejects_the_simple() {
        let a = linear(2, "Q");
        let s1 = Representation::simple(&a, 0).unwrap();
        let cert = resolution_to_filtration(&minimal_projective_resolution(&s1, 4)).unwrap();
        let bare = FiltrationCertificate {
            generator: vec![Representation::regular(&a)],
            root: strip_witnesses(&cert.root),
            claimed_depth: 2,
        };
        let v = verify_filtration(&bare, &s1, 2).unwrap();
        let f = v.failure.expect("must fail");
        assert_eq!(f.reason, "leaf fails add-membership");
        assert!(f.path.ends_with("extension.right/leaf"), "{}", f.path);
        let one = FiltrationCertificate { root: CertNode::Leaf { module: s1.clone(), witness: None }, ..bare };
        let v = verify_filtration(&one, &s1, 1).unwrap();
        assert_eq!(v.failure.unwrap().reason, "leaf fails add-membership");
    }

    #[test]
    fn json_round_trip_and_tamper_detection() {
        let a = spider(5, "Q");
        let s1 = Representation::simple(&a, 0).unwrap();
        let cert = resolution_to_filtration(&minimal_projective_resolution(&s1, 10)).unwrap();
        assert!(verify_filtration(&cert, &s1, cert.claimed_depth).unwrap().valid);
        let text = cert.to_json_string();
        let back = FiltrationCertificate::from_json_str(&text).unwrap();
        assert_eq!(back.to_json_string(), text);
        assert!(verify_filtration(&back, &s1, back.claimed_depth).unwrap().valid);

        let mut v: Value = serde_json::from_str(&text).unwrap();
        let section = v.pointer_mut("/root/summand/section").unwrap();
        let entry = section
            .as_array_mut()
            .unwrap()
            .iter_mut()
            .find(|b| !b.as_array().unwrap().is_empty())
            .unwrap()
            .pointer_mut("/0/0")
            .unwrap();
        *entry = Value::String(if entry.as_str() == Some("0") { "1".into() } else { "0".into() });
        let bad = FiltrationCertificate::from_json(&v).unwrap();
        let verdict = verify_filtration(&bad, &s1, bad.claimed_depth).unwrap();
        assert!(!verdict.valid);
        assert_eq!(verdict.failure.unwrap().path, "root/summand");
    }

    #[test]
    fn dangling_piece_is_malformed() {
        let a = linear(2, "Q");
        let p1 = Representation::projective(&a, 0).unwrap();
        let gen = AddGenerator::new(vec![p1.clone()]);
        let root = leaf_for(&gen, &p1, &DecomposeConfig::default()).unwrap();
        let cert = FiltrationCertificate { generator: vec![], root, claimed_depth: 1 };
        assert!(matches!(verify_filtration(&cert, &p1, 1), Err(Error::MalformedCertificate(_))));
    }

    #[test]
    fn restriction_keeps_certificates_valid() {
        let a = spider(5, "Q");
        let m = Representation::simple(&a, 0).unwrap();
        let cert = resolution_to_filtration(&minimal_projective_resolution(&m, 10)).unwrap();
        let keep = [0, 1, 2, 3, 4];
        let r = cert.restrict(&keep).unwrap();
        let target = r.root.module().clone();
        let v = verify_filtration(&r, &target, r.claimed_depth).unwrap();
        assert!(v.valid, "{v:?}");
    }
}
