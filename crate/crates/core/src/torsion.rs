//! The torsion pair `(T_S, F(S))` cut out by a set `S` of simples, its
//! torsion radical `t_S`, the radical layer length `ℓℓ^{t_S}`, and the
//! bound `dim mod Λ ≤ pd S + ℓℓ^{t_S}(Λ)` with a constructive certificate.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::certificate::{comb_over, leaf_for, CertNode, FiltrationCertificate};
use crate::decompose::{AddGenerator, DecomposeConfig};
use crate::error::{Error, Result};
use crate::homology::{
    cosyzygy_horseshoe, cosyzygy_summand, minimal_projective_resolution, simple_dimensions, syzygy,
    syzygy_horseshoe, PdResult, ShortExactSequence, SummandMaps,
};
use crate::matrix::Matrix;
use crate::rep::{loewy_length, radical, top_multiplicities, ModuleMap, Representation, Submodule};

/// A set of simples, named by vertex index (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSubset {
    members: Vec<usize>,
    num_vertices: usize,
    /// `pd S`, filled in by validation; `-1` for the empty set.
    pd: Option<i64>,
}

impl SimpleSubset {
    /// Unvalidated subset; enough for torsion computations.
    pub fn new(alg: &Algebra, members: &[usize]) -> Result<SimpleSubset> {
        let n = alg.num_vertices();
        if let Some(&v) = members.iter().find(|&&v| v >= n) {
            return Err(Error::UnknownVertex((v + 1).to_string()));
        }
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        Ok(SimpleSubset { members, num_vertices: n, pd: None })
    }

    pub fn empty(alg: &Algebra) -> SimpleSubset {
        SimpleSubset { members: vec![], num_vertices: alg.num_vertices(), pd: Some(-1) }
    }

    /// Subset whose members all have finite projective dimension according
    /// to `pd_simple`.
    pub fn validated(alg: &Algebra, members: &[usize], pd_simple: &[PdResult]) -> Result<SimpleSubset> {
        let mut s = SimpleSubset::new(alg, members)?;
        let mut pd = -1;
        for &v in &s.members {
            match pd_simple[v].finite() {
                Some(p) => pd = pd.max(p),
                None => return Err(Error::InfinitePd(v + 1)),
            }
        }
        s.pd = Some(pd);
        Ok(s)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// The simples outside `S`.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.num_vertices).filter(|&v| !self.contains(v)).collect()
    }

    pub fn pd(&self) -> Option<i64> {
        self.pd
    }

    /// 1-based labels, e.g. `{2,3,4,5}`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.members.iter().map(|v| (v + 1).to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// `t_S(M)`: the submodule generated by `M e_v` for every `v ∉ S`.
pub fn torsion_radical(s: &SimpleSubset, m: &Representation) -> Submodule {
    let field = m.field();
    let gens: Vec<Matrix> = (0..m.dims().len())
        .map(|v| {
            let d = m.dims()[v];
            if s.contains(v) {
                Matrix::zeros(field, d, 0)
            } else {
                Matrix::identity(field, d)
            }
        })
        .collect();
    let t = Submodule::generated(m, &gens);
    debug_assert!(check_torsion_pair(s, m, &t).is_ok());
    t
}

/// The two defining properties of `t_S(M)`: its top lies in `add S′` and
/// the quotient has no torsion left.
pub fn check_torsion_pair(s: &SimpleSubset, m: &Representation, t: &Submodule) -> Result<()> {
    let tops = top_multiplicities(t.module());
    if s.members().iter().any(|&v| tops[v] != 0) {
        return Err(Error::Exactness("torsion part has a top outside the complement".into()));
    }
    let (q, _) = t.quotient();
    if s.complement().iter().any(|&v| q.dims()[v] != 0) {
        return Err(Error::Exactness("torsion-free quotient still has torsion".into()));
    }
    debug_assert!(t.ambient() == m);
    Ok(())
}

/// `M / t_S(M)` with the projection.
pub fn torsion_free_quotient(s: &SimpleSubset, m: &Representation) -> (Representation, ModuleMap) {
    torsion_radical(s, m).quotient()
}

/// `0 -> t_S(M) -> M -> M/t_S(M) -> 0`.
pub fn torsion_sequence(s: &SimpleSubset, m: &Representation) -> ShortExactSequence {
    let t = torsion_radical(s, m);
    let (_, q) = t.quotient();
    ShortExactSequence { f: t.inclusion().clone(), g: q }
}

/// `F_t(M) = rad t_S(M)`, as a module in its own right.
pub fn radical_of_torsion(s: &SimpleSubset, m: &Representation) -> Representation {
    let t = torsion_radical(s, m);
    radical(t.module()).module().clone()
}

/// The chain `M_0 = M`, `M_{i+1} = rad t_S(M_i)` down to the first `M_i`
/// without torsion.
#[derive(Clone, Debug)]
pub struct LayerLengthTrace {
    pub stages: Vec<LayerStage>,
}

#[derive(Clone, Debug)]
pub struct LayerStage {
    pub module: Representation,
    pub torsion: Submodule,
}

impl LayerLengthTrace {
    pub fn length(&self) -> usize {
        self.stages.len() - 1
    }

    /// `(dim M_i, dim t_S(M_i))` for every stage.
    pub fn dimensions(&self) -> Vec<(usize, usize)> {
        self.stages.iter().map(|s| (s.module.dim(), s.torsion.dim())).collect()
    }
}

/// `ℓℓ^{t_S}(M)`: least `i` with `t_S(F_t^i M) = 0`.
pub fn layer_length(s: &SimpleSubset, m: &Representation) -> (usize, LayerLengthTrace) {
    let mut stages = Vec::new();
    let mut cur = m.clone();
    loop {
        let t = torsion_radical(s, &cur);
        let done = t.is_zero();
        let next = radical(t.module()).module().clone();
        stages.push(LayerStage { module: cur, torsion: t });
        if done {
            break;
        }
        cur = next;
    }
    let trace = LayerLengthTrace { stages };
    (trace.length(), trace)
}

/// Memoises `ℓℓ^{t_S}(P(v))` on `(v, S ∩ supp P(v))`.
pub struct LayerCache {
    projectives: Vec<Representation>,
    /// vertices where `P(v)` is nonzero; `ℓℓ^{t_S}(P(v))` only sees `S` there
    support: Vec<Vec<bool>>,
    memo: HashMap<(usize, Vec<usize>), usize>,
}

impl LayerCache {
    pub fn new(alg: &Algebra) -> LayerCache {
        let projectives: Vec<Representation> =
            (0..alg.num_vertices()).map(|v| Representation::projective(alg, v).expect("vertex in range")).collect();
        let support = projectives.iter().map(|p| p.dims().iter().map(|&d| d > 0).collect()).collect();
        LayerCache { projectives, support, memo: HashMap::new() }
    }

    pub fn projective(&mut self, s: &SimpleSubset, v: usize) -> usize {
        let key = (v, s.members().iter().copied().filter(|&w| self.support[v][w]).collect());
        if let Some(&l) = self.memo.get(&key) {
            return l;
        }
        let l = layer_length(s, &self.projectives[v]).0;
        self.memo.insert(key, l);
        l
    }

    /// `ℓℓ^{t_S}(Λ)`, the maximum over the indecomposable projectives.
    pub fn algebra(&mut self, s: &SimpleSubset) -> usize {
        (0..self.projectives.len()).map(|v| self.projective(s, v)).max().unwrap_or(0)
    }
}

/// `ℓℓ^{t_S}(P(v))` for every vertex.
pub fn projective_layer_lengths(alg: &Algebra, s: &SimpleSubset) -> Vec<usize> {
    let mut cache = LayerCache::new(alg);
    (0..alg.num_vertices()).map(|v| cache.projective(s, v)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetBound {
    /// 1-based vertex labels.
    pub members: Vec<usize>,
    #[serde(rename = "pd_S")]
    pub pd_s: i64,
    #[serde(rename = "ll_tS")]
    pub ll_ts: usize,
    pub bound: i64,
}

/// `pd S + ℓℓ^{t_S}(Λ)`; `S` must be validated.
pub fn thm319_bound(alg: &Algebra, s: &SimpleSubset) -> Result<SubsetBound> {
    thm319_bound_cached(&mut LayerCache::new(alg), s)
}

fn thm319_bound_cached(cache: &mut LayerCache, s: &SimpleSubset) -> Result<SubsetBound> {
    let pd_s = s.pd().ok_or_else(|| Error::Invalid(format!("subset {} has not been validated", s.label())))?;
    let ll = cache.algebra(s);
    Ok(SubsetBound { members: s.members().iter().map(|v| v + 1).collect(), pd_s, ll_ts: ll, bound: pd_s + ll as i64 })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubsetStrategy {
    /// All subsets of `S^{<∞}`, by size and then lexicographically.
    Exhaustive,
    /// Grow from `∅` one simple at a time, always taking the best addition.
    SingletonGreedy,
    /// Only `∅` and `S^{<∞}`.
    Endpoints,
    /// The endpoints plus the listed 0-based subset.
    Explicit(Vec<usize>),
}

/// Largest `|S^{<∞}|` searched exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 20;

#[derive(Clone, Debug)]
pub struct SubsetSearch {
    pub pd_simple: Vec<PdResult>,
    /// 0-based vertices whose simple has finite projective dimension.
    pub finite_pd: Vec<usize>,
    pub rows: Vec<SubsetBound>,
    pub best: usize,
    pub warning: Option<String>,
}

impl SubsetSearch {
    pub fn best(&self) -> &SubsetBound {
        &self.rows[self.best]
    }
}

fn subsets_by_size(items: &[usize]) -> Vec<Vec<usize>> {
    let n = items.len();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for k in 0..=n {
        // lexicographic k-combinations of positions
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(idx.iter().map(|&i| items[i]).collect());
            let mut i = k;
            while i > 0 && idx[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    out
}

/// Evaluates the bound over subsets chosen by `strategy`. `∅` and `S^{<∞}`
/// are always among them; the best is the first row with the least bound.
pub fn best_bound(alg: &Algebra, strategy: &SubsetStrategy, cutoff: usize) -> Result<SubsetSearch> {
    let pd_simple = simple_dimensions(alg, cutoff);
    let finite: Vec<usize> = (0..alg.num_vertices()).filter(|&v| pd_simple[v].finite().is_some()).collect();
    let mut cache = LayerCache::new(alg);
    let mut rows: Vec<SubsetBound> = Vec::new();
    let eval = |members: &[usize], rows: &mut Vec<SubsetBound>, cache: &mut LayerCache| -> Result<i64> {
        let s = SimpleSubset::validated(alg, members, &pd_simple)?;
        let b = thm319_bound_cached(cache, &s)?;
        let bound = b.bound;
        if !rows.iter().any(|r| r.members == b.members) {
            rows.push(b);
        }
        Ok(bound)
    };
    let mut warning = None;
    let mut strategy = strategy.clone();
    if strategy == SubsetStrategy::Exhaustive && finite.len() > EXHAUSTIVE_LIMIT {
        warning = Some(format!(
            "{} simples of finite projective dimension exceed the exhaustive limit {EXHAUSTIVE_LIMIT}; searched greedily",
            finite.len()
        ));
        strategy = SubsetStrategy::SingletonGreedy;
    }
    match &strategy {
        SubsetStrategy::Exhaustive => {
            for s in subsets_by_size(&finite) {
                eval(&s, &mut rows, &mut cache)?;
            }
        }
        SubsetStrategy::Endpoints => {
            eval(&[], &mut rows, &mut cache)?;
            eval(&finite, &mut rows, &mut cache)?;
        }
        SubsetStrategy::Explicit(members) => {
            eval(&[], &mut rows, &mut cache)?;
            eval(&finite, &mut rows, &mut cache)?;
            eval(members, &mut rows, &mut cache)?;
        }
        SubsetStrategy::SingletonGreedy => {
            let mut cur: Vec<usize> = Vec::new();
            let mut cur_bound = eval(&cur, &mut rows, &mut cache)?;
            loop {
                let mut best: Option<(i64, usize)> = None;
                for &v in finite.iter().filter(|v| !cur.contains(v)) {
                    let mut cand = cur.clone();
                    cand.push(v);
                    cand.sort_unstable();
                    let b = eval(&cand, &mut rows, &mut cache)?;
                    if best.is_none_or(|(bb, _)| b < bb) {
                        best = Some((b, v));
                    }
                }
                match best {
                    Some((b, v)) if b <= cur_bound => {
                        cur.push(v);
                        cur.sort_unstable();
                        cur_bound = b;
                    }
                    _ => break,
                }
            }
            eval(&finite, &mut rows, &mut cache)?;
        }
    }
    let best = (0..rows.len()).min_by_key(|&i| (rows[i].bound, i)).expect("at least one subset");
    Ok(SubsetSearch { pd_simple, finite_pd: finite, rows, best, warning })
}

/// The generator `T = ⊕_{i=0}^{α+1} Ω⁻ⁱΛ ⊕ Ω^{-α-2}Ω^{α+1}(Λ/rad Λ)` for
/// `α = pd S`, listed piece by piece.
pub fn thm319_generator(alg: &Algebra, alpha: i64) -> Vec<Representation> {
    let a1 = alpha + 1;
    let lam = Representation::regular(alg);
    let mut pieces: Vec<Representation> = (0..=a1).map(|i| syzygy(&lam, -i)).collect();
    let top = Representation::semisimple_top(alg);
    pieces.push(syzygy(&syzygy(&top, a1), -(a1 + 1)));
    pieces
}

/// Certificate that `M ∈ ⟨T⟩_{α+n+1}` for `T` from [`thm319_generator`],
/// `α = pd S`, `n = ℓℓ^{t_S}(Λ)`.
///
/// The top of the tree is the comb over the first `α+2` steps of the minimal
/// projective resolution. Its last tooth is `Ω^{-α-2}Ω^{α+2}M`, which is
/// carried over to `G(N)` for `N = Ω(t_S M)` and `G = Ω^{-α-2}Ω^{α+1}`, and
/// `G(N)` is then peeled layer by layer along
/// `0 -> rad t_S N -> t_S N -> top t_S N -> 0`.
pub fn thm319_certificate(s: &SimpleSubset, m: &Representation) -> Result<FiltrationCertificate> {
    let alg = m.algebra().clone();
    let alpha = s.pd().ok_or_else(|| Error::Invalid(format!("subset {} has not been validated", s.label())))?;
    let a1 = (alpha + 1) as usize;
    let n = LayerCache::new(&alg).algebra(s);
    let pieces = thm319_generator(&alg, alpha);
    let gen = AddGenerator::new(pieces.clone());
    let cfg = DecomposeConfig::default();
    let res = minimal_projective_resolution(m, a1);
    let k = res.differentials.len();
    let truncated = !res.minimal;
    let b = Builder { s, a1, gen: &gen, cfg: &cfg };
    let root = comb_over(&res, &mut |i, x| {
        if truncated && i == k {
            b.tail(m, x)
        } else {
            leaf_for(b.gen, x, b.cfg)
        }
    })?;
    let claimed = (alpha + n as i64 + 1).max(0) as usize;
    Ok(FiltrationCertificate { generator: pieces, root, claimed_depth: claimed })
}

struct Builder<'a> {
    s: &'a SimpleSubset,
    a1: usize,
    gen: &'a AddGenerator,
    cfg: &'a DecomposeConfig,
}

/// Splits the right end away when it vanishes: `Y | B'` with
/// `0 -> A -> B' -> 0 -> 0` gives `Y | A`.
fn collapse_right(ses: &ShortExactSequence, y: SummandMaps) -> Result<SummandMaps> {
    if !ses.right().is_zero() {
        return Err(Error::Exactness("expected the torsion-free end to vanish".into()));
    }
    let inv = ses.f.inverse().ok_or_else(|| Error::Exactness("monomorphism onto the middle is not invertible".into()))?;
    Ok(y.then(&SummandMaps { section: inv, retraction: ses.f.clone() }))
}

fn iterate(
    ses: ShortExactSequence,
    y: SummandMaps,
    times: usize,
    step: fn(&ShortExactSequence, &SummandMaps) -> Result<(ShortExactSequence, SummandMaps)>,
) -> Result<(ShortExactSequence, SummandMaps)> {
    let (mut ses, mut y) = (ses, y);
    for _ in 0..times {
        (ses, y) = step(&ses, &y)?;
    }
    Ok((ses, y))
}

impl Builder<'_> {
    /// `G(X) = Ω^{-α-2}Ω^{α+1}X`.
    fn g(&self, x: &Representation) -> Representation {
        syzygy(&syzygy(x, self.a1 as i64), -(self.a1 as i64 + 1))
    }

    /// Certificate for `x = Ω^{-α-2}Ω^{α+2}M`.
    fn tail(&self, m: &Representation, x: &Representation) -> Result<CertNode> {
        if x.is_zero() {
            return leaf_for(self.gen, x, self.cfg);
        }
        // Ω^{α+2}M | Ω^{α+2}t_S M, since the torsion-free quotient has pd ≤ α
        let ses = torsion_sequence(self.s, m);
        let tm = ses.left().clone();
        let (ses, y) = iterate(ses, SummandMaps::identity(m), self.a1 + 1, syzygy_horseshoe)?;
        let mut z = collapse_right(&ses, y)?;
        for _ in 0..=self.a1 {
            z = cosyzygy_summand(&z)?;
        }
        if z.summand() != x {
            return Err(Error::Exactness("tail does not match the last tooth of the comb".into()));
        }
        let n = syzygy(&tm, 1);
        debug_assert!(z.whole() == &self.g(&n));
        let child = self.layers(&n)?;
        Ok(CertNode::summand(x, z, child))
    }

    /// Certificate for `G(N)`, one layer of `t_S` at a time.
    fn layers(&self, n: &Representation) -> Result<CertNode> {
        let gn = self.g(n);
        if gn.is_zero() {
            return leaf_for(self.gen, &gn, self.cfg);
        }
        // Ω^{α+1}N | Ω^{α+1}t_S N
        let ses = torsion_sequence(self.s, n);
        let tn = ses.left().clone();
        let (ses, y) = iterate(ses, SummandMaps::identity(n), self.a1, syzygy_horseshoe)?;
        let z = collapse_right(&ses, y)?;
        // 0 -> rad t_S N -> t_S N -> top -> 0, pushed through Ω^{α+1}
        let rad = radical(&tn);
        let (_, q) = rad.quotient();
        let layer = ShortExactSequence { f: rad.inclusion().clone(), g: q };
        let f_mod = rad.module().clone();
        let (ses, y) = iterate(layer, SummandMaps::identity(&tn), self.a1, syzygy_horseshoe)?;
        let z = z.then(&y);
        // and back through Ω^{-α-2}
        let (ses, z) = iterate(ses, z, self.a1 + 1, cosyzygy_horseshoe)?;
        if z.summand() != &gn {
            return Err(Error::Exactness("layer step lost track of G(N)".into()));
        }
        let below = self.layers(&f_mod)?;
        if below.module() != ses.left() {
            return Err(Error::Exactness("layer step does not meet the next layer".into()));
        }
        let top = leaf_for(self.gen, ses.right(), self.cfg)?;
        Ok(CertNode::summand(&gn, z, CertNode::extension(ses, below, top)))
    }
}

/// `LL(Λ)`.
pub fn algebra_loewy_length(alg: &Algebra) -> usize {
    loewy_length(&Representation::regular(alg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_filtration;
    use crate::corpus::{exterior, four_vertex, linear, spider};
    use crate::homology::{default_cutoff, global_dimension};
    use crate::rep::hom_space;

    fn spider_subset(a: &Algebra, n: usize) -> SimpleSubset {
        let pd = simple_dimensions(a, default_cutoff(a));
        SimpleSubset::validated(a, &(1..n).collect::<Vec<_>>(), &pd).unwrap()
    }

    #[test]
    fn spider_torsion_of_projectives() {
        let a = spider(5, "Q");
        let s = spider_subset(&a, 5);
        let p1 = Representation::projective(&a, 0).unwrap();
        let p2 = Representation::projective(&a, 1).unwrap();
        assert!(torsion_radical(&s, &p1).is_whole());
        assert!(torsion_radical(&s, &p2).is_zero());
        assert_eq!(torsion_free_quotient(&s, &p2).0, p2);
        assert!(torsion_free_quotient(&s, &p1).0.is_zero());
    }

    #[test]
    fn spider_layer_lengths() {
        let a = spider(5, "Q");
        let s = spider_subset(&a, 5);
        assert_eq!(projective_layer_lengths(&a, &s), vec![2, 0, 0, 0, 0, 2, 2, 2, 1, 1, 1]);
        let b = thm319_bound(&a, &s).unwrap();
        assert_eq!((b.pd_s, b.ll_ts, b.bound), (1, 2, 3));
    }

    #[test]
    fn trivial_subsets() {
        let a = four_vertex("Q");
        let m = Representation::regular(&a);
        let none = SimpleSubset::empty(&a);
        let all = SimpleSubset::new(&a, &[0, 1, 2, 3]).unwrap();
        assert!(torsion_radical(&none, &m).is_whole());
        assert!(torsion_radical(&all, &m).is_zero());
        assert_eq!(layer_length(&none, &m).0, loewy_length(&m));
    }

    #[test]
    fn endpoint_bounds() {
        for a in [spider(5, "Q"), four_vertex("Q"), linear(3, "Q")] {
            let cutoff = default_cutoff(&a);
            let pd = simple_dimensions(&a, cutoff);
            let ll = algebra_loewy_length(&a) as i64;
            assert_eq!(thm319_bound(&a, &SimpleSubset::empty(&a)).unwrap().bound, ll - 1);
            let all: Vec<usize> = (0..a.num_vertices()).collect();
            let g = global_dimension(&a, cutoff).finite().unwrap();
            assert_eq!(thm319_bound(&a, &SimpleSubset::validated(&a, &all, &pd).unwrap()).unwrap().bound, g);
        }
    }

    #[test]
    fn exterior_search_is_forced_to_the_empty_set() {
        let a = exterior(2, "Q");
        let r = best_bound(&a, &SubsetStrategy::Exhaustive, default_cutoff(&a)).unwrap();
        assert!(r.finite_pd.is_empty());
        assert_eq!(r.best().bound, 2);
        assert!(SimpleSubset::validated(&a, &[0], &r.pd_simple).is_err());
    }

    #[test]
    fn search_orders() {
        assert_eq!(subsets_by_size(&[1, 2, 3]), vec![
            vec![],
            vec![1],
            vec![2],
            vec![3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
            vec![1, 2, 3]
        ]);
        let a = spider(5, "Q");
        let r = best_bound(&a, &SubsetStrategy::Explicit(vec![1, 2, 3, 4]), default_cutoff(&a)).unwrap();
        assert_eq!(r.rows.len(), 3);
        assert_eq!(r.best().bound, 3);
        let e = best_bound(&a, &SubsetStrategy::Endpoints, default_cutoff(&a)).unwrap();
        assert_eq!(e.rows.iter().map(|r| r.bound).collect::<Vec<_>>(), vec![4, 4]);
        let g = best_bound(&a, &SubsetStrategy::SingletonGreedy, default_cutoff(&a)).unwrap();
        assert!(g.best().bound <= 4);
    }

    #[test]
    fn torsion_pair_is_hom_orthogonal() {
        let a = spider(5, "Q");
        let s = spider_subset(&a, 5);
        for v in 0..a.num_vertices() {
            let p = Representation::projective(&a, v).unwrap();
            let t = torsion_radical(&s, &p);
            let (q, _) = t.quotient();
            for w in 0..a.num_vertices() {
                let x = torsion_radical(&s, &Representation::projective(&a, w).unwrap()).module().clone();
                assert!(hom_space(&x, &q).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn spider_certificate_for_the_first_simple() {
        let a = spider(5, "Q");
        let s = spider_subset(&a, 5);
        let m = Representation::simple(&a, 0).unwrap();
        let cert = thm319_certificate(&s, &m).unwrap();
        assert_eq!(cert.claimed_depth, 4);
        let v = verify_filtration(&cert, &m, 4).unwrap();
        assert!(v.valid, "{v:?}");
        assert!(v.depth <= 4);
    }

    #[test]
    fn projective_certificate_has_depth_one() {
        let a = spider(5, "Q");
        let s = spider_subset(&a, 5);
        let p = Representation::projective(&a, 0).unwrap();
        let cert = thm319_certificate(&s, &p).unwrap();
        let v = verify_filtration(&cert, &p, 1).unwrap();
        assert!(v.valid, "{v:?}");
    }

    #[test]
    fn empty_subset_certificates() {
        let a = four_vertex("Q");
        let s = SimpleSubset::empty(&a);
        for v in 0..4 {
            let m = Representation::simple(&a, v).unwrap();
            let cert = thm319_certificate(&s, &m).unwrap();
            let v = verify_filtration(&cert, &m, cert.claimed_depth).unwrap();
            assert!(v.valid, "{v:?}");
        }
    }
}
