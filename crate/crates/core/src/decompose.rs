//! Krull–Schmidt decomposition by Fitting splitting.
//!
//! A module is split as `ker g^N ⊕ im g^N` whenever some endomorphism `g`
//! is neither nilpotent nor invertible. A module is declared indecomposable
//! only with a certificate that its endomorphism ring is local:
//!
//! * over Q the trace form of `End(M)` acting on `M` has radical exactly
//!   `rad End(M)`, and the semisimple quotient is shown to be a field;
//! * over F_p a nilpotent ideal `J` is assembled from the radical parts of
//!   basis elements and all commutators, and `End(M)/J` is shown to be local
//!   because `x ↦ x^p - x` has only the scalars in its kernel.
//!
//! When neither a splitting nor a certificate is found within the trial
//! budget the decomposition fails with an explicit error.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{Matrix, RowSpace};
use crate::poly::{minimal_polynomial, Poly};
use crate::rep::{combination, end_space, hom_space, kernel, image, ModuleMap, Representation, Submodule};

pub const DEFAULT_SEED: u64 = 0xE3D1;

#[derive(Clone, Copy, Debug)]
pub struct DecomposeConfig {
    pub seed: u64,
    pub random_trials: usize,
}

impl Default for DecomposeConfig {
    fn default() -> Self {
        DecomposeConfig { seed: DEFAULT_SEED, random_trials: 64 }
    }
}

/// An indecomposable direct summand with its split inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Representation,
    pub inclusion: ModuleMap,
    pub projection: ModuleMap,
}

fn flatten(f: &ModuleMap) -> Vec<Scalar> {
    let mut out = Vec::new();
    for b in f.blocks() {
        for i in 0..b.rows() {
            out.extend_from_slice(b.row(i));
        }
    }
    out
}

fn map_pow(f: &ModuleMap, e: usize) -> ModuleMap {
    let blocks = f.blocks().iter().map(|b| b.pow(e)).collect();
    ModuleMap::new_unchecked(f.source().clone(), f.target().clone(), blocks)
}

fn eval_poly(p: &Poly, f: &ModuleMap) -> ModuleMap {
    let id = ModuleMap::identity(f.source());
    let mut acc = ModuleMap::zero(f.source(), f.source());
    for c in p.coeffs().iter().rev() {
        acc = acc.compose(f).add(&id.scale(c));
    }
    acc
}

fn minpoly(f: &ModuleMap) -> Poly {
    let m = f.source().clone();
    minimal_polynomial(m.field(), ModuleMap::identity(&m), f, |a, b| a.compose(b), flatten)
}

/// Fitting decomposition along `g`, when it is proper.
fn fitting(m: &Representation, g: &ModuleMap) -> Option<(Submodule, Submodule)> {
    let n = m.dim();
    let gn = map_pow(g, n);
    let r = gn.rank();
    if r == 0 || r == n {
        return None;
    }
    Some((kernel(&gn), image(&gn)))
}

/// Fitting on `g`, then on the shifts `g - λ` for roots of its minimal
/// polynomial, then on a distinct-degree part over prime fields.
fn try_element(m: &Representation, g: &ModuleMap) -> Option<(Submodule, Submodule)> {
    if let Some(s) = fitting(m, g) {
        return Some(s);
    }
    let mu = minpoly(g);
    if mu.degree().unwrap_or(0) < 2 {
        return None;
    }
    let id = ModuleMap::identity(m);
    for lambda in mu.roots() {
        if let Some(s) = fitting(m, &g.sub(&id.scale(&lambda))) {
            return Some(s);
        }
    }
    if let Field::Prime(_) = m.field() {
        let parts = mu.squarefree_part().distinct_degree_parts();
        if parts.len() >= 2 {
            if let Some(s) = fitting(m, &eval_poly(&parts[0], g)) {
                return Some(s);
            }
        }
    }
    None
}

enum Split {
    Local,
    Parts(Submodule, Submodule),
}

/// Subspace of `End(M)` given by flattened generators, closed to a two-sided
/// ideal.
fn ideal_closure(m: &Representation, basis: &[ModuleMap], gens: Vec<ModuleMap>) -> (RowSpace, Vec<ModuleMap>) {
    let flat_len: usize = m.dims().iter().map(|d| d * d).sum();
    let mut space = RowSpace::new(flat_len);
    let mut elems = Vec::new();
    let mut queue = Vec::new();
    for g in gens {
        if space.insert(flatten(&g)) {
            queue.push(g.clone());
            elems.push(g);
        }
    }
    while let Some(x) = queue.pop() {
        for b in basis {
            for y in [b.compose(&x), x.compose(b)] {
                if space.insert(flatten(&y)) {
                    queue.push(y.clone());
                    elems.push(y);
                }
            }
        }
    }
    (space, elems)
}

fn is_nilpotent_ideal(m: &Representation, j: &[ModuleMap]) -> bool {
    let flat_len: usize = m.dims().iter().map(|d| d * d).sum();
    let mut cur: Vec<ModuleMap> = j.to_vec();
    let mut prev_dim = usize::MAX;
    loop {
        if cur.is_empty() {
            return true;
        }
        if cur.len() >= prev_dim {
            return false;
        }
        prev_dim = cur.len();
        let mut space = RowSpace::new(flat_len);
        let mut next = Vec::new();
        for a in &cur {
            for b in j {
                let p = a.compose(b);
                if space.insert(flatten(&p)) {
                    next.push(p);
                }
            }
        }
        cur = next;
    }
}

fn reduce_mod(space: &RowSpace, f: &ModuleMap) -> Vec<Scalar> {
    let mut v = flatten(f);
    space.reduce(&mut v);
    v
}

/// Minimal polynomial of `x` in `End(M)/J`.
fn minpoly_mod(m: &Representation, j: &RowSpace, x: &ModuleMap) -> Poly {
    minimal_polynomial(m.field(), ModuleMap::identity(m), x, |a, b| a.compose(b), |f| reduce_mod(j, f))
}

struct Quotient {
    j_space: RowSpace,
    lifts: Vec<ModuleMap>,
}

fn quotient_by(basis: &[ModuleMap], j_space: RowSpace) -> Quotient {
    let mut space = j_space.clone();
    let lifts = basis.iter().filter(|b| space.insert(flatten(b))).cloned().collect();
    Quotient { j_space, lifts }
}

fn is_commutative(q: &Quotient) -> bool {
    for (i, a) in q.lifts.iter().enumerate() {
        for b in &q.lifts[i + 1..] {
            let c = a.compose(b).sub(&b.compose(a));
            if !reduce_mod(&q.j_space, &c).iter().all(Scalar::is_zero) {
                return false;
            }
        }
    }
    true
}

/// Given a zero divisor `z` of the semisimple quotient, look for a
/// neither-nilpotent-nor-invertible element among `z`, `z c` and `c z`.
fn split_from_zero_divisor(m: &Representation, q: &Quotient, z: &ModuleMap) -> Option<(Submodule, Submodule)> {
    if let Some(s) = try_element(m, z) {
        return Some(s);
    }
    for c in &q.lifts {
        for y in [z.compose(c), c.compose(z)] {
            if let Some(s) = try_element(m, &y) {
                return Some(s);
            }
        }
    }
    None
}

fn certify_rationals<R: Rng>(m: &Representation, basis: &[ModuleMap], rng: &mut R, trials: usize) -> Option<Split> {
    let field = m.field();
    let e = basis.len();
    // Gram matrix of the trace form
    let gram = Matrix::from_fn(field, e, e, |i, j| {
        basis[i].compose(&basis[j]).blocks().iter().fold(field.zero(), |acc, b| &acc + &b.trace())
    });
    let kern = gram.kernel();
    let flat_len: usize = m.dims().iter().map(|d| d * d).sum();
    let mut j_space = RowSpace::new(flat_len);
    for c in 0..kern.cols() {
        let f = combination(basis, &kern.column(c), m, m);
        j_space.insert(flatten(&f));
    }
    let q = quotient_by(basis, j_space);
    let k = q.lifts.len();
    if k == 1 {
        return Some(Split::Local);
    }
    let commutative = is_commutative(&q);
    let mut candidates: Vec<ModuleMap> = q.lifts.clone();
    for _ in 0..trials.min(16) {
        let coeffs: Vec<Scalar> = (0..k).map(|_| field.random(rng, 3)).collect();
        candidates.push(combination(&q.lifts, &coeffs, m, m));
    }
    for x in &candidates {
        let mu = minpoly_mod(m, &q.j_space, x);
        let deg = mu.degree().unwrap_or(0);
        if commutative && deg == k && mu.is_irreducible() == Some(true) {
            return Some(Split::Local);
        }
        if deg >= 2 {
            for lambda in mu.roots() {
                let z = x.sub(&ModuleMap::identity(m).scale(&lambda));
                if let Some((a, b)) = split_from_zero_divisor(m, &q, &z) {
                    return Some(Split::Parts(a, b));
                }
            }
        }
    }
    None
}

fn certify_prime(m: &Representation, basis: &[ModuleMap], p: u32) -> Option<Split> {
    let mut gens = Vec::new();
    for b in basis {
        let mu = minpoly(b);
        gens.push(eval_poly(&mu.squarefree_part(), b));
    }
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            gens.push(a.compose(b).sub(&b.compose(a)));
        }
    }
    let (j_space, j_elems) = ideal_closure(m, basis, gens);
    if !is_nilpotent_ideal(m, &j_elems) {
        for x in &j_elems {
            if let Some(s) = try_element(m, x) {
                return Some(Split::Parts(s.0, s.1));
            }
        }
        return None;
    }
    let q = quotient_by(basis, j_space);
    let k = q.lifts.len();
    if k == 1 {
        return Some(Split::Local);
    }
    // x ↦ x^p - x is linear on the commutative quotient
    let flat_len: usize = m.dims().iter().map(|d| d * d).sum();
    let cols: Vec<Vec<Scalar>> = q
        .lifts
        .iter()
        .map(|c| reduce_mod(&q.j_space, &map_pow(c, p as usize).sub(c)))
        .collect();
    let frob = Matrix::from_columns(m.field(), flat_len, &cols);
    let kern = frob.kernel();
    if kern.cols() == 1 {
        return Some(Split::Local);
    }
    for c in 0..kern.cols() {
        let z = combination(&q.lifts, &kern.column(c), m, m);
        if let Some(s) = try_element(m, &z) {
            return Some(Split::Parts(s.0, s.1));
        }
    }
    None
}

fn split_once<R: Rng>(m: &Representation, rng: &mut R, cfg: &DecomposeConfig) -> Result<Split> {
    if m.dim() <= 1 {
        return Ok(Split::Local);
    }
    let basis = end_space(m);
    if basis.len() == 1 {
        return Ok(Split::Local);
    }
    for b in &basis {
        if let Some((a, c)) = fitting(m, b) {
            return Ok(Split::Parts(a, c));
        }
    }
    for b in &basis {
        if let Some((a, c)) = try_element(m, b) {
            return Ok(Split::Parts(a, c));
        }
    }
    let cert = match m.field() {
        Field::Rationals => certify_rationals(m, &basis, rng, cfg.random_trials),
        Field::Prime(p) => certify_prime(m, &basis, p),
    };
    if let Some(s) = cert {
        return Ok(s);
    }
    let field = m.field();
    for _ in 0..cfg.random_trials {
        let coeffs: Vec<Scalar> = (0..basis.len()).map(|_| field.random(rng, 3)).collect();
        let g = combination(&basis, &coeffs, m, m);
        if let Some((a, c)) = try_element(m, &g) {
            return Ok(Split::Parts(a, c));
        }
    }
    Err(Error::InconclusiveDecomposition(cfg.random_trials))
}

fn split_rec<R: Rng>(m: &Representation, rng: &mut R, cfg: &DecomposeConfig, out: &mut Vec<(Representation, ModuleMap)>) -> Result<()> {
    // `out` collects (summand, inclusion into m)
    if m.is_zero() {
        return Ok(());
    }
    match split_once(m, rng, cfg)? {
        Split::Local => out.push((m.clone(), ModuleMap::identity(m))),
        Split::Parts(a, b) => {
            for part in [a, b] {
                let mut inner = Vec::new();
                split_rec(part.module(), rng, cfg, &mut inner)?;
                for (x, inc) in inner {
                    out.push((x, part.inclusion().compose(&inc)));
                }
            }
        }
    }
    Ok(())
}

/// Indecomposable summands with inclusions and projections; the inclusions
/// jointly give an isomorphism from their direct sum onto `m`.
pub fn decompose_summands(m: &Representation, cfg: &DecomposeConfig) -> Result<Vec<Summand>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut parts = Vec::new();
    split_rec(m, &mut rng, cfg, &mut parts)?;
    if parts.is_empty() {
        return Ok(vec![]);
    }
    let incs: Vec<ModuleMap> = parts.iter().map(|(_, i)| i.clone()).collect();
    let joined = ModuleMap::join(m, &incs);
    let inv = joined.inverse().ok_or_else(|| Error::Exactness("summand inclusions do not form a basis".into()))?;
    // split the inverse into the rows belonging to each summand
    let mut offs = vec![0usize; m.dims().len()];
    let mut out = Vec::new();
    for (x, inc) in parts {
        let blocks = (0..m.dims().len())
            .map(|v| {
                let b = inv.block(v).submatrix(offs[v], x.dims()[v], 0, m.dims()[v]);
                offs[v] += x.dims()[v];
                b
            })
            .collect();
        let projection = ModuleMap::new_unchecked(m.clone(), x.clone(), blocks);
        out.push(Summand { module: x, inclusion: inc, projection });
    }
    Ok(out)
}

/// Isomorphism between indecomposables, if any: some basis composite
/// `g ∘ f` is invertible exactly when they are isomorphic.
pub fn iso_indecomposable(x: &Representation, y: &Representation) -> Option<ModuleMap> {
    if x.dims() != y.dims() {
        return None;
    }
    if x == y {
        return Some(ModuleMap::identity(x));
    }
    let fs = hom_space(x, y).ok()?;
    if fs.is_empty() {
        return None;
    }
    for f in &fs {
        if f.is_iso() {
            return Some(f.clone());
        }
    }
    let gs = hom_space(y, x).ok()?;
    for f in &fs {
        for g in &gs {
            if g.compose(f).is_iso() {
                return Some(f.clone());
            }
        }
    }
    None
}

/// Groups indecomposable summands into isomorphism classes, keeping the
/// first representative of each class in order of appearance.
pub fn group_classes(summands: &[Representation]) -> Vec<(Representation, usize)> {
    let mut classes: Vec<(Representation, usize)> = Vec::new();
    'next: for s in summands {
        for (rep, mult) in classes.iter_mut() {
            if iso_indecomposable(rep, s).is_some() {
                *mult += 1;
                continue 'next;
            }
        }
        classes.push((s.clone(), 1));
    }
    classes
}

/// Indecomposable summands up to isomorphism, with multiplicities.
pub fn decompose(m: &Representation, seed: u64) -> Result<Vec<(Representation, usize)>> {
    let cfg = DecomposeConfig { seed, ..Default::default() };
    let parts = decompose_summands(m, &cfg)?;
    Ok(group_classes(&parts.into_iter().map(|s| s.module).collect::<Vec<_>>()))
}

/// An isomorphism `m -> n`, if the modules are isomorphic.
pub fn isomorphism(m: &Representation, n: &Representation, seed: u64) -> Result<Option<ModuleMap>> {
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m == n {
        return Ok(Some(ModuleMap::identity(m)));
    }
    // a random element of Hom(M, N) is usually an isomorphism when one exists
    let hs = hom_space(m, n)?;
    if hs.is_empty() {
        return Ok(if m.is_zero() { Some(ModuleMap::zero(m, n)) } else { None });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..4 {
        let coeffs: Vec<Scalar> = (0..hs.len()).map(|_| m.field().random(&mut rng, 5)).collect();
        let f = combination(&hs, &coeffs, m, n);
        if f.is_iso() {
            return Ok(Some(f));
        }
    }
    let cfg = DecomposeConfig { seed, ..Default::default() };
    let sm = decompose_summands(m, &cfg)?;
    let sn = decompose_summands(n, &cfg)?;
    if sm.len() != sn.len() {
        return Ok(None);
    }
    let mut used = vec![false; sn.len()];
    let mut acc = ModuleMap::zero(m, n);
    for x in &sm {
        let mut found = false;
        for (j, y) in sn.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(phi) = iso_indecomposable(&x.module, &y.module) {
                used[j] = true;
                acc = acc.add(&y.inclusion.compose(&phi).compose(&x.projection));
                found = true;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    Ok(Some(acc))
}

/// A generator given as a list of pieces. Its decomposition is computed on
/// first use and cached, so membership questions answered by a piece itself
/// never decompose anything.
#[derive(Clone, Debug)]
pub struct AddGenerator {
    pieces: Vec<Representation>,
    /// (piece index, summand of that piece)
    summands: std::cell::OnceCell<Vec<(usize, Summand)>>,
}

/// Witness that `M` is a direct summand of a direct sum of generator
/// pieces: `retraction ∘ section = id_M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AddWitness {
    pub pieces: Vec<usize>,
    pub section: ModuleMap,
    pub retraction: ModuleMap,
}

impl AddGenerator {
    pub fn new(pieces: Vec<Representation>) -> AddGenerator {
        AddGenerator { pieces, summands: std::cell::OnceCell::new() }
    }

    pub fn pieces(&self) -> &[Representation] {
        &self.pieces
    }

    fn summands(&self, cfg: &DecomposeConfig) -> Result<&[(usize, Summand)]> {
        if let Some(s) = self.summands.get() {
            return Ok(s);
        }
        let mut all = Vec::new();
        for (i, p) in self.pieces.iter().enumerate() {
            for s in decompose_summands(p, cfg)? {
                all.push((i, s));
            }
        }
        Ok(self.summands.get_or_init(|| all))
    }

    /// Non-isomorphic indecomposable summands of the generator.
    pub fn indecomposables(&self, cfg: &DecomposeConfig) -> Result<Vec<Representation>> {
        let mods: Vec<Representation> = self.summands(cfg)?.iter().map(|(_, s)| s.module.clone()).collect();
        Ok(group_classes(&mods).into_iter().map(|(r, _)| r).collect())
    }

    /// Sum of the listed pieces, the target of a witness section.
    pub fn sum_of(&self, alg: &crate::algebra::Algebra, idx: &[usize]) -> Representation {
        let parts: Vec<Representation> = idx.iter().map(|&i| self.pieces[i].clone()).collect();
        crate::rep::direct_sum_or_zero(alg, &parts)
    }

    pub fn witness(&self, m: &Representation, cfg: &DecomposeConfig) -> Result<Option<AddWitness>> {
        let alg = m.algebra().clone();
        if m.is_zero() {
            let z = Representation::zero(&alg);
            return Ok(Some(AddWitness {
                pieces: vec![],
                section: ModuleMap::zero(m, &z),
                retraction: ModuleMap::zero(&z, m),
            }));
        }
        if let Some(i) = self.pieces.iter().position(|p| p == m) {
            return Ok(Some(AddWitness {
                pieces: vec![i],
                section: ModuleMap::identity(m),
                retraction: ModuleMap::identity(m),
            }));
        }
        let parts = decompose_summands(m, cfg)?;
        let gen = self.summands(cfg)?;
        let mut sections = Vec::new();
        let mut retractions = Vec::new();
        let mut idx = Vec::new();
        for x in &parts {
            let mut hit = None;
            for (pi, y) in gen {
                if let Some(phi) = iso_indecomposable(&x.module, &y.module) {
                    hit = Some((*pi, y, phi));
                    break;
                }
            }
            let Some((pi, y, phi)) = hit else { return Ok(None) };
            let phi_inv = phi.inverse().expect("isomorphism");
            // M -> X -> Y -> piece, and back
            sections.push(y.inclusion.compose(&phi).compose(&x.projection));
            retractions.push(x.inclusion.compose(&phi_inv).compose(&y.projection));
            idx.push(pi);
        }
        let section = ModuleMap::stack(m, &sections);
        let retraction = ModuleMap::join(m, &retractions);
        Ok(Some(AddWitness { pieces: idx, section, retraction }))
    }
}

/// Whether every indecomposable summand of `m` is a summand of `t`.
pub fn is_in_add(m: &Representation, t: &[Representation], seed: u64) -> Result<bool> {
    let cfg = DecomposeConfig { seed, ..Default::default() };
    let g = AddGenerator::new(t.to_vec());
    Ok(g.witness(m, &cfg)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_algebra;
    use crate::rep::{direct_sum, radical};

    fn kronecker(field: &str) -> crate::algebra::Algebra {
        parse_algebra(&format!("field {field}\nvertices 2\narrow a : 1 -> 2\narrow b : 1 -> 2\n")).unwrap()
    }

    #[test]
    fn projective_sum_splits() {
        let alg = parse_algebra("field Q\nvertices 2\narrow a : 1 -> 2\n").unwrap();
        let p1 = Representation::projective(&alg, 0).unwrap();
        let m = direct_sum(&[p1.clone(), p1.clone()]);
        let d = decompose(&m, 1).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 2);
        assert!(iso_indecomposable(&d[0].0, &p1).is_some());
    }

    #[test]
    fn summand_maps_are_split() {
        let alg = parse_algebra("field Q\nvertices 3\narrow a : 1 -> 2\narrow b : 1 -> 3\n").unwrap();
        let p1 = Representation::projective(&alg, 0).unwrap();
        let r = radical(&p1).module().clone();
        let parts = decompose_summands(&r, &DecomposeConfig::default()).unwrap();
        assert_eq!(parts.len(), 2);
        for (i, x) in parts.iter().enumerate() {
            for (j, y) in parts.iter().enumerate() {
                let c = y.projection.compose(&x.inclusion);
                assert_eq!(c.is_identity(), i == j);
                if i != j {
                    assert!(c.is_zero());
                }
            }
        }
    }

    #[test]
    fn kronecker_field_endomorphisms_are_local() {
        // End = Q(sqrt 2): indecomposable although no eigenvalue is rational
        let alg = kronecker("Q");
        let f = alg.field();
        let id = Matrix::identity(f, 2);
        let a = Matrix::from_rows(f, vec![vec![f.zero(), f.from_i64(2)], vec![f.one(), f.zero()]], 2);
        let m = Representation::new(alg.clone(), vec![2, 2], vec![id, a]).unwrap();
        let d = decompose(&m, 7).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].0.dim(), 4);
        // over F_3, x^2 - 2 is irreducible too
        let alg3 = kronecker("F 3");
        let f3 = alg3.field();
        let a3 = Matrix::from_rows(f3, vec![vec![f3.zero(), f3.from_i64(2)], vec![f3.one(), f3.zero()]], 2);
        let m3 = Representation::new(alg3.clone(), vec![2, 2], vec![Matrix::identity(f3, 2), a3]).unwrap();
        assert_eq!(decompose(&m3, 7).unwrap().len(), 1);
        // over F_7, 2 = 3^2 so it splits
        let alg7 = kronecker("F 7");
        let f7 = alg7.field();
        let a7 = Matrix::from_rows(f7, vec![vec![f7.zero(), f7.from_i64(2)], vec![f7.one(), f7.zero()]], 2);
        let m7 = Representation::new(alg7.clone(), vec![2, 2], vec![Matrix::identity(f7, 2), a7]).unwrap();
        assert_eq!(decompose(&m7, 7).unwrap().len(), 2);
    }

    #[test]
    fn add_witness_retracts() {
        let alg = parse_algebra("field F 2\nvertices 2\narrow a : 1 -> 2\n").unwrap();
        let p1 = Representation::projective(&alg, 0).unwrap();
        let s2 = Representation::simple(&alg, 1).unwrap();
        let s1 = Representation::simple(&alg, 0).unwrap();
        let cfg = DecomposeConfig::default();
        let g = AddGenerator::new(vec![direct_sum(&[p1.clone(), s1.clone()])]);
        let m = direct_sum(&[s1.clone(), p1.clone(), s1.clone()]);
        let w = g.witness(&m, &cfg).unwrap().unwrap();
        assert!(w.retraction.compose(&w.section).is_identity());
        w.section.check().unwrap();
        w.retraction.check().unwrap();
        assert!(g.witness(&s2, &cfg).unwrap().is_none());
        assert!(!is_in_add(&s1, &[Representation::regular(&alg)], 0).unwrap());
    }
}
