//! Right modules as quiver representations.
//!
//! A module assigns a vector space to each vertex and, to each arrow
//! `a: i -> j`, a `dim_j x dim_i` matrix acting on column vectors. A path
//! `a.b` therefore acts by the matrix product `M_b * M_a`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Algebra, Path};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{Matrix, RowSpace, SparseEchelon};

#[derive(Clone)]
pub struct Representation {
    inner: Arc<RepData>,
}

struct RepData {
    alg: Algebra,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

fn same_algebra(a: &Algebra, b: &Algebra) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (same_algebra(&self.inner.alg, &other.inner.alg)
                && self.inner.dims == other.inner.dims
                && self.inner.maps == other.inner.maps)
    }
}

impl Eq for Representation {}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation{:?}", self.inner.dims)
    }
}

impl Representation {
    /// Checked constructor: shapes must match and every relation must act
    /// as zero.
    pub fn new(alg: Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Representation> {
        if dims.len() != alg.num_vertices() || maps.len() != alg.arrows().len() {
            return Err(Error::Dimension("dimension vector or arrow list has the wrong length".into()));
        }
        for (a, m) in alg.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::Dimension(format!(
                    "arrow `{}` needs a {}x{} matrix",
                    a.name, dims[a.target], dims[a.source]
                )));
            }
            if m.field() != alg.field() {
                return Err(Error::Invalid("matrix over the wrong field".into()));
            }
        }
        let rep = Representation::new_unchecked(alg, dims, maps);
        for (ri, r) in rep.algebra().relations().iter().enumerate() {
            let Some((_, p0)) = r.terms.first() else { continue };
            let s = rep.algebra().arrows()[p0[0]].source;
            let t = rep.algebra().arrows()[*p0.last().unwrap()].target;
            let mut acc = Matrix::zeros(rep.field(), rep.dims()[t], rep.dims()[s]);
            for (c, p) in &r.terms {
                acc = acc.add(&rep.path_action(p).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::RelationViolated(ri));
            }
        }
        Ok(rep)
    }

    pub(crate) fn new_unchecked(alg: Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Representation {
        Representation { inner: Arc::new(RepData { alg, dims, maps }) }
    }

    pub fn zero(alg: &Algebra) -> Representation {
        let dims = vec![0; alg.num_vertices()];
        let maps = alg.arrows().iter().map(|_| Matrix::zeros(alg.field(), 0, 0)).collect();
        Representation::new_unchecked(alg.clone(), dims, maps)
    }

    pub fn simple(alg: &Algebra, v: usize) -> Result<Representation> {
        if v >= alg.num_vertices() {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        let mut dims = vec![0; alg.num_vertices()];
        dims[v] = 1;
        let maps = alg
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(alg.field(), dims[a.target], dims[a.source]))
            .collect();
        Ok(Representation::new_unchecked(alg.clone(), dims, maps))
    }

    /// Basis paths from `from` to `to`, as indices into the algebra basis.
    fn paths_between(alg: &Algebra, from: Option<usize>, to: Option<usize>) -> Vec<Vec<usize>> {
        // grouped by the free endpoint
        let n = alg.num_vertices();
        let mut groups = vec![Vec::new(); n];
        for (k, p) in alg.basis().iter().enumerate() {
            match (from, to) {
                (Some(f), None) if p.source == f => groups[p.target].push(k),
                (None, Some(t)) if p.target == t => groups[p.source].push(k),
                _ => {}
            }
        }
        groups
    }

    /// The indecomposable projective `e_v Λ`: paths starting at `v`.
    pub fn projective(alg: &Algebra, v: usize) -> Result<Representation> {
        if v >= alg.num_vertices() {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        let groups = Self::paths_between(alg, Some(v), None);
        let local: std::collections::HashMap<usize, usize> = groups
            .iter()
            .flat_map(|g| g.iter().enumerate().map(|(i, &k)| (k, i)))
            .collect();
        let dims: Vec<usize> = groups.iter().map(Vec::len).collect();
        let field = alg.field();
        let maps = alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
                for (col, &k) in groups[a.source].iter().enumerate() {
                    let mut arrows = alg.basis()[k].arrows.clone();
                    arrows.push(ai);
                    for (b, c) in alg.path_normal_form(v, &arrows) {
                        m.set(local[&b], col, c);
                    }
                }
                m
            })
            .collect();
        Representation::new(alg.clone(), dims, maps)
    }

    /// The indecomposable injective `D(Λ e_v)`: duals of paths ending at `v`.
    pub fn injective(alg: &Algebra, v: usize) -> Result<Representation> {
        if v >= alg.num_vertices() {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        let groups = Self::paths_between(alg, None, Some(v));
        let local: std::collections::HashMap<usize, usize> = groups
            .iter()
            .flat_map(|g| g.iter().enumerate().map(|(i, &k)| (k, i)))
            .collect();
        let dims: Vec<usize> = groups.iter().map(Vec::len).collect();
        let field = alg.field();
        let maps = alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                // (phi . a)(q) = phi(a q) for q a path from a.target to v
                let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
                for (row, &k) in groups[a.target].iter().enumerate() {
                    let mut arrows = vec![ai];
                    arrows.extend_from_slice(&alg.basis()[k].arrows);
                    for (b, c) in alg.path_normal_form(a.source, &arrows) {
                        m.set(row, local[&b], c);
                    }
                }
                m
            })
            .collect();
        Representation::new(alg.clone(), dims, maps)
    }

    /// The regular module, the direct sum of all `P(v)` in vertex order.
    pub fn regular(alg: &Algebra) -> Representation {
        let parts: Vec<Representation> =
            (0..alg.num_vertices()).map(|v| Representation::projective(alg, v).unwrap()).collect();
        direct_sum(&parts)
    }

    /// `Λ / rad Λ`, the sum of all simples in vertex order.
    pub fn semisimple_top(alg: &Algebra) -> Representation {
        let parts: Vec<Representation> =
            (0..alg.num_vertices()).map(|v| Representation::simple(alg, v).unwrap()).collect();
        direct_sum(&parts)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.inner.alg
    }

    pub fn field(&self) -> Field {
        self.inner.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.inner.dims
    }

    pub fn dim(&self) -> usize {
        self.inner.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn arrow_map(&self, a: usize) -> &Matrix {
        &self.inner.maps[a]
    }

    pub fn arrow_maps(&self) -> &[Matrix] {
        &self.inner.maps
    }

    /// Offsets of the vertex blocks in the total basis.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims().len() + 1);
        let mut acc = 0;
        off.push(0);
        for &d in self.dims() {
            acc += d;
            off.push(acc);
        }
        off
    }

    /// Matrix of a composable arrow sequence, `M_{a_k} ... M_{a_1}`.
    pub fn path_action(&self, arrows: &[usize]) -> Matrix {
        let alg = self.algebra();
        let first = alg.arrows()[arrows[0]].source;
        let mut m = Matrix::identity(self.field(), self.dims()[first]);
        for &a in arrows {
            m = self.arrow_map(a).mul(&m);
        }
        m
    }

    /// Matrix of a basis path, including trivial paths.
    pub fn basis_path_action(&self, p: &Path) -> Matrix {
        if p.is_trivial() {
            Matrix::identity(self.field(), self.dims()[p.source])
        } else {
            self.path_action(&p.arrows)
        }
    }

    /// Vector space dual, a module over the opposite algebra `op`.
    pub fn dual(&self, op: &Algebra) -> Result<Representation> {
        let alg = self.algebra();
        let ok = op.num_vertices() == alg.num_vertices()
            && op.arrows().len() == alg.arrows().len()
            && op
                .arrows()
                .iter()
                .zip(alg.arrows())
                .all(|(x, y)| x.name == y.name && x.source == y.target && x.target == y.source);
        if !ok {
            return Err(Error::AlgebraMismatch);
        }
        Representation::new(op.clone(), self.dims().to_vec(), self.inner.maps.iter().map(Matrix::transpose).collect())
    }

    /// Restriction `M e` to a vertex subset, as a module over the restricted
    /// algebra `sub` (built by [`crate::algebra::BoundQuiverAlgebra::restrict`]).
    pub fn restrict(&self, sub: &Algebra, keep: &[usize]) -> Result<Representation> {
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let dims: Vec<usize> = sorted.iter().map(|&v| self.dims()[v]).collect();
        let mut maps = Vec::new();
        for a in sub.arrows() {
            let ai = self.algebra().arrow_index(&a.name)?;
            maps.push(self.arrow_map(ai).clone());
        }
        Representation::new(sub.clone(), dims, maps)
    }
}

/// Direct sum in the given order; vertex blocks are concatenated.
pub fn direct_sum(parts: &[Representation]) -> Representation {
    assert!(!parts.is_empty(), "direct sum of an empty list needs an algebra");
    let alg = parts[0].algebra().clone();
    let n = alg.num_vertices();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims()[v]).sum()).collect();
    let field = alg.field();
    let maps = (0..alg.arrows().len())
        .map(|a| {
            let blocks: Vec<&Matrix> = parts.iter().map(|p| p.arrow_map(a)).collect();
            Matrix::block_diag(field, &blocks)
        })
        .collect();
    Representation::new_unchecked(alg, dims, maps)
}

pub fn direct_sum_or_zero(alg: &Algebra, parts: &[Representation]) -> Representation {
    if parts.is_empty() {
        Representation::zero(alg)
    } else {
        direct_sum(parts)
    }
}

/// A homomorphism, one matrix per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleMap {
    source: Representation,
    target: Representation,
    blocks: Vec<Matrix>,
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleMap({:?} -> {:?}, {:?})", self.source, self.target, self.blocks)
    }
}

impl ModuleMap {
    pub fn new(source: Representation, target: Representation, blocks: Vec<Matrix>) -> Result<ModuleMap> {
        if !same_algebra(source.algebra(), target.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        if blocks.len() != source.dims().len() {
            return Err(Error::Dimension("one block per vertex expected".into()));
        }
        for (v, b) in blocks.iter().enumerate() {
            if b.rows() != target.dims()[v] || b.cols() != source.dims()[v] {
                return Err(Error::Dimension(format!("block at vertex {} has the wrong shape", v + 1)));
            }
        }
        let f = ModuleMap { source, target, blocks };
        for (ai, a) in f.source.algebra().arrows().iter().enumerate() {
            let lhs = f.target.arrow_map(ai).mul(&f.blocks[a.source]);
            let rhs = f.blocks[a.target].mul(f.source.arrow_map(ai));
            if lhs != rhs {
                return Err(Error::NotIntertwining(a.name.clone()));
            }
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Representation, target: Representation, blocks: Vec<Matrix>) -> ModuleMap {
        ModuleMap { source, target, blocks }
    }

    pub fn identity(m: &Representation) -> ModuleMap {
        let blocks = m.dims().iter().map(|&d| Matrix::identity(m.field(), d)).collect();
        ModuleMap::new_unchecked(m.clone(), m.clone(), blocks)
    }

    pub fn zero(source: &Representation, target: &Representation) -> ModuleMap {
        let blocks = source
            .dims()
            .iter()
            .zip(target.dims())
            .map(|(&s, &t)| Matrix::zeros(source.field(), t, s))
            .collect();
        ModuleMap::new_unchecked(source.clone(), target.clone(), blocks)
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &ModuleMap) -> ModuleMap {
        assert_eq!(rhs.target.dims(), self.source.dims(), "composition of incompatible maps");
        let blocks = self.blocks.iter().zip(&rhs.blocks).map(|(a, b)| a.mul(b)).collect();
        ModuleMap::new_unchecked(rhs.source.clone(), self.target.clone(), blocks)
    }

    pub fn add(&self, rhs: &ModuleMap) -> ModuleMap {
        let blocks = self.blocks.iter().zip(&rhs.blocks).map(|(a, b)| a.add(b)).collect();
        ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn sub(&self, rhs: &ModuleMap) -> ModuleMap {
        let blocks = self.blocks.iter().zip(&rhs.blocks).map(|(a, b)| a.sub(b)).collect();
        ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn scale(&self, s: &Scalar) -> ModuleMap {
        let blocks = self.blocks.iter().map(|a| a.scale(s)).collect();
        ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn neg(&self) -> ModuleMap {
        let blocks = self.blocks.iter().map(Matrix::neg).collect();
        ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    /// Same blocks, reinterpreted between modules with equal dimension
    /// vectors (used when two constructions produce equal modules).
    pub fn retarget(&self, source: &Representation, target: &Representation) -> Result<ModuleMap> {
        ModuleMap::new(source.clone(), target.clone(), self.blocks.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dims() == self.target.dims() && self.is_injective()
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(Matrix::is_identity)
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        let blocks: Option<Vec<Matrix>> = self.blocks.iter().map(Matrix::inverse).collect();
        Some(ModuleMap::new_unchecked(self.target.clone(), self.source.clone(), blocks?))
    }

    /// Whether the blocks intertwine the arrow actions.
    pub fn check(&self) -> Result<()> {
        ModuleMap::new(self.source.clone(), self.target.clone(), self.blocks.clone()).map(|_| ())
    }

    /// Block-diagonal matrix on the total spaces.
    pub fn total_matrix(&self) -> Matrix {
        let parts: Vec<&Matrix> = self.blocks.iter().collect();
        Matrix::block_diag(self.source.field(), &parts)
    }

    /// `⊕ f_i : ⊕ M_i -> ⊕ N_i`.
    pub fn direct_sum(parts: &[ModuleMap]) -> ModuleMap {
        let src = direct_sum(&parts.iter().map(|f| f.source.clone()).collect::<Vec<_>>());
        let tgt = direct_sum(&parts.iter().map(|f| f.target.clone()).collect::<Vec<_>>());
        let field = src.field();
        let blocks = (0..src.dims().len())
            .map(|v| Matrix::block_diag(field, &parts.iter().map(|f| &f.blocks[v]).collect::<Vec<_>>()))
            .collect();
        ModuleMap::new_unchecked(src, tgt, blocks)
    }

    /// `(f_1, ..., f_k)^T : M -> N_1 ⊕ ... ⊕ N_k`.
    pub fn stack(source: &Representation, parts: &[ModuleMap]) -> ModuleMap {
        let tgt = direct_sum_or_zero(source.algebra(), &parts.iter().map(|f| f.target.clone()).collect::<Vec<_>>());
        let field = source.field();
        let blocks = (0..source.dims().len())
            .map(|v| {
                let bs: Vec<&Matrix> = parts.iter().map(|f| &f.blocks[v]).collect();
                Matrix::vstack(field, source.dims()[v], &bs)
            })
            .collect();
        ModuleMap::new_unchecked(source.clone(), tgt, blocks)
    }

    /// `(f_1, ..., f_k) : M_1 ⊕ ... ⊕ M_k -> N`.
    pub fn join(target: &Representation, parts: &[ModuleMap]) -> ModuleMap {
        let src = direct_sum_or_zero(target.algebra(), &parts.iter().map(|f| f.source.clone()).collect::<Vec<_>>());
        let field = target.field();
        let blocks = (0..target.dims().len())
            .map(|v| {
                let bs: Vec<&Matrix> = parts.iter().map(|f| &f.blocks[v]).collect();
                Matrix::hstack(field, target.dims()[v], &bs)
            })
            .collect();
        ModuleMap::new_unchecked(src, target.clone(), blocks)
    }
}

/// Canonical inclusions and projections of a direct sum.
pub fn sum_injections(parts: &[Representation]) -> (Representation, Vec<ModuleMap>, Vec<ModuleMap>) {
    let sum = direct_sum(parts);
    let field = sum.field();
    let n = sum.dims().len();
    let mut inj = Vec::new();
    let mut proj = Vec::new();
    let mut off = vec![0usize; n];
    for p in parts {
        let mut ib = Vec::new();
        let mut pb = Vec::new();
        for v in 0..n {
            let d = p.dims()[v];
            let tot = sum.dims()[v];
            let mut i = Matrix::zeros(field, tot, d);
            let mut q = Matrix::zeros(field, d, tot);
            for k in 0..d {
                i.set(off[v] + k, k, field.one());
                q.set(k, off[v] + k, field.one());
            }
            ib.push(i);
            pb.push(q);
            off[v] += d;
        }
        inj.push(ModuleMap::new_unchecked(p.clone(), sum.clone(), ib));
        proj.push(ModuleMap::new_unchecked(sum.clone(), p.clone(), pb));
    }
    (sum, inj, proj)
}

/// A submodule, always carried with its inclusion map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    inclusion: ModuleMap,
}

impl Submodule {
    /// Builds the submodule spanned at each vertex by the columns of
    /// `bases[v]`, which must be independent and stable under the arrows.
    pub fn from_basis(ambient: &Representation, bases: Vec<Matrix>) -> Result<Submodule> {
        let alg = ambient.algebra();
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let mut maps = Vec::new();
        for (ai, a) in alg.arrows().iter().enumerate() {
            let img = ambient.arrow_map(ai).mul(&bases[a.source]);
            let x = bases[a.target]
                .solve(&img)
                .ok_or_else(|| Error::Invalid(format!("subspace is not stable under arrow `{}`", a.name)))?;
            maps.push(x);
        }
        let sub = Representation::new_unchecked(alg.clone(), dims, maps);
        Ok(Submodule { inclusion: ModuleMap::new_unchecked(sub, ambient.clone(), bases) })
    }

    /// Smallest submodule containing the columns of `gens[v]` at each vertex.
    pub fn generated(ambient: &Representation, gens: &[Matrix]) -> Submodule {
        let alg = ambient.algebra();
        let n = alg.num_vertices();
        let mut spaces: Vec<RowSpace> = (0..n).map(|v| RowSpace::new(ambient.dims()[v])).collect();
        let mut queue: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for v in 0..n {
            for c in 0..gens[v].cols() {
                let col = gens[v].column(c);
                if spaces[v].insert(col.clone()) {
                    queue.push((v, col));
                }
            }
        }
        let mut out_arrows = vec![Vec::new(); n];
        for (ai, a) in alg.arrows().iter().enumerate() {
            out_arrows[a.source].push(ai);
        }
        while let Some((v, x)) = queue.pop() {
            for &ai in &out_arrows[v] {
                let t = alg.arrows()[ai].target;
                let y = ambient.arrow_map(ai).mul_vec(&x);
                if spaces[t].insert(y.clone()) {
                    queue.push((t, y));
                }
            }
        }
        let bases = spaces
            .iter()
            .enumerate()
            .map(|(v, s)| Matrix::from_columns(ambient.field(), ambient.dims()[v], s.basis()))
            .collect();
        Submodule::from_basis(ambient, bases).expect("generated subspace is stable")
    }

    pub fn whole(m: &Representation) -> Submodule {
        Submodule { inclusion: ModuleMap::identity(m) }
    }

    pub fn zero_of(m: &Representation) -> Submodule {
        Submodule::from_basis(m, m.dims().iter().map(|&d| Matrix::zeros(m.field(), d, 0)).collect()).unwrap()
    }

    pub fn ambient(&self) -> &Representation {
        self.inclusion.target()
    }

    pub fn module(&self) -> &Representation {
        self.inclusion.source()
    }

    pub fn inclusion(&self) -> &ModuleMap {
        &self.inclusion
    }

    pub fn basis(&self, v: usize) -> &Matrix {
        self.inclusion.block(v)
    }

    pub fn dim(&self) -> usize {
        self.module().dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_whole(&self) -> bool {
        self.dim() == self.ambient().dim()
    }

    /// Quotient `ambient / self` and the projection onto it.
    pub fn quotient(&self) -> (Representation, ModuleMap) {
        cokernel(&self.inclusion)
    }

    pub fn contains(&self, other: &Submodule) -> bool {
        (0..self.ambient().dims().len()).all(|v| {
            let joint = Matrix::hstack(self.ambient().field(), self.ambient().dims()[v], &[self.basis(v), other.basis(v)]);
            joint.rank() == self.basis(v).cols()
        })
    }

    /// Image of a submodule of `f.source()` under `f`.
    pub fn image_under(&self, f: &ModuleMap) -> Submodule {
        let gens: Vec<Matrix> = (0..f.source().dims().len()).map(|v| f.block(v).mul(self.basis(v))).collect();
        Submodule::generated(f.target(), &gens)
    }

    /// Re-expresses a submodule of `self.module()` as a submodule of the ambient.
    pub fn lift(&self, inner: &Submodule) -> Submodule {
        let bases = (0..self.ambient().dims().len())
            .map(|v| self.basis(v).mul(inner.basis(v)))
            .collect();
        Submodule::from_basis(self.ambient(), bases).expect("lift of a submodule")
    }
}

pub fn kernel(f: &ModuleMap) -> Submodule {
    let bases = f.blocks().iter().map(Matrix::kernel).collect();
    Submodule::from_basis(f.source(), bases).expect("kernels are submodules")
}

pub fn image(f: &ModuleMap) -> Submodule {
    let bases = f.blocks().iter().map(Matrix::column_space).collect();
    Submodule::from_basis(f.target(), bases).expect("images are submodules")
}

/// Cokernel with projection. The quotient basis at each vertex is given by
/// unit vectors complementing the image, so the projection is a coordinate
/// map on the target.
pub fn cokernel(f: &ModuleMap) -> (Representation, ModuleMap) {
    let tgt = f.target();
    let field = tgt.field();
    let alg = tgt.algebra();
    let n = alg.num_vertices();
    let mut projs = Vec::with_capacity(n);
    let mut lifts = Vec::with_capacity(n);
    for v in 0..n {
        let img = f.block(v).column_space();
        let comp = img.complement_units();
        let d = tgt.dims()[v];
        let mut unit = Matrix::zeros(field, d, comp.len());
        for (j, &c) in comp.iter().enumerate() {
            unit.set(c, j, field.one());
        }
        let full = Matrix::hstack(field, d, &[&img, &unit]);
        let inv = full.inverse().expect("image plus complement is a basis");
        projs.push(inv.submatrix(img.cols(), comp.len(), 0, d));
        lifts.push(unit);
    }
    let dims: Vec<usize> = lifts.iter().map(Matrix::cols).collect();
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| projs[a.target].mul(tgt.arrow_map(ai)).mul(&lifts[a.source]))
        .collect();
    let q = Representation::new_unchecked(alg.clone(), dims, maps);
    (q.clone(), ModuleMap::new_unchecked(tgt.clone(), q, projs))
}

pub fn radical(m: &Representation) -> Submodule {
    let alg = m.algebra();
    let field = m.field();
    let mut gens: Vec<Vec<&Matrix>> = vec![Vec::new(); alg.num_vertices()];
    for (ai, a) in alg.arrows().iter().enumerate() {
        gens[a.target].push(m.arrow_map(ai));
    }
    let gens: Vec<Matrix> = gens
        .iter()
        .enumerate()
        .map(|(v, g)| if g.is_empty() { Matrix::zeros(field, m.dims()[v], 0) } else { Matrix::hstack(field, m.dims()[v], g) })
        .collect();
    Submodule::generated(m, &gens)
}

pub fn top(m: &Representation) -> (Representation, ModuleMap) {
    radical(m).quotient()
}

/// Joint kernel of all arrows leaving each vertex.
pub fn socle(m: &Representation) -> Submodule {
    let alg = m.algebra();
    let field = m.field();
    let bases = (0..alg.num_vertices())
        .map(|v| {
            let outs: Vec<&Matrix> = alg
                .arrows()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.source == v)
                .map(|(ai, _)| m.arrow_map(ai))
                .collect();
            if outs.is_empty() {
                Matrix::identity(field, m.dims()[v])
            } else {
                Matrix::vstack(field, m.dims()[v], &outs).kernel()
            }
        })
        .collect();
    Submodule::from_basis(m, bases).expect("socle is a submodule")
}

/// Least `n` with `rad^n M = 0`.
pub fn loewy_length(m: &Representation) -> usize {
    let mut cur = m.clone();
    let mut n = 0;
    while !cur.is_zero() {
        cur = radical(&cur).module().clone();
        n += 1;
    }
    n
}

/// Multiplicity of each simple in the top of `M`.
pub fn top_multiplicities(m: &Representation) -> Vec<usize> {
    let r = radical(m);
    (0..m.dims().len()).map(|v| m.dims()[v] - r.module().dims()[v]).collect()
}

/// A basis of `Hom(M, N)`, found by solving the intertwining equations.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<Vec<ModuleMap>> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let alg = m.algebra();
    let field = m.field();
    let nv = alg.num_vertices();
    let mut off = vec![0usize; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + n.dims()[v] * m.dims()[v];
    }
    let nunk = off[nv];
    if nunk == 0 {
        return Ok(vec![]);
    }
    // X_v[r][c] is unknown off[v] + r * m_v + c
    let idx = |v: usize, r: usize, c: usize| off[v] + r * m.dims()[v] + c;
    let mut se = SparseEchelon::new(field, nunk);
    for (ai, a) in alg.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let na = n.arrow_map(ai);
        let ma = m.arrow_map(ai);
        // (N_a X_s - X_t M_a)[i][j] = 0
        for i in 0..n.dims()[t] {
            for j in 0..m.dims()[s] {
                let mut row = Vec::new();
                for k in 0..n.dims()[s] {
                    let c = na.get(i, k);
                    if !c.is_zero() {
                        row.push((idx(s, k, j), c.clone()));
                    }
                }
                for l in 0..m.dims()[t] {
                    let c = ma.get(l, j);
                    if !c.is_zero() {
                        row.push((idx(t, i, l), -c));
                    }
                }
                if !row.is_empty() {
                    se.push(row);
                }
            }
        }
    }
    Ok(se
        .kernel()
        .into_iter()
        .map(|x| {
            let blocks = (0..nv)
                .map(|v| Matrix::from_fn(field, n.dims()[v], m.dims()[v], |r, c| x[idx(v, r, c)].clone()))
                .collect();
            ModuleMap::new_unchecked(m.clone(), n.clone(), blocks)
        })
        .collect())
}

pub fn end_space(m: &Representation) -> Vec<ModuleMap> {
    hom_space(m, m).expect("same algebra")
}

/// `Σ c_i f_i` for a non-empty basis.
pub fn combination(basis: &[ModuleMap], coeffs: &[Scalar], source: &Representation, target: &Representation) -> ModuleMap {
    let mut acc = ModuleMap::zero(source, target);
    for (f, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&f.scale(c));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_algebra;

    fn a2() -> Algebra {
        parse_algebra("field Q\nvertices 2\narrow a : 1 -> 2\n").unwrap()
    }

    fn ext2() -> Algebra {
        parse_algebra("field Q\nvertices 1\narrow x : 1 -> 1\narrow y : 1 -> 1\nrelation x.y + y.x\nrelation x.x\nrelation y.y\n")
            .unwrap()
    }

    #[test]
    fn projectives_and_injectives_of_a2() {
        let a = a2();
        let p1 = Representation::projective(&a, 0).unwrap();
        assert_eq!(p1.dims(), &[1, 1]);
        assert!(p1.arrow_map(0).is_identity());
        let i1 = Representation::injective(&a, 0).unwrap();
        assert_eq!(i1.dims(), &[1, 0]);
        let i2 = Representation::injective(&a, 1).unwrap();
        assert_eq!(i2.dims(), &[1, 1]);
        assert_eq!(i2, p1);
    }

    #[test]
    fn radical_top_socle() {
        let a = ext2();
        let r = Representation::regular(&a);
        assert_eq!(r.dim(), 4);
        assert_eq!(radical(&r).dim(), 3);
        assert_eq!(top(&r).0.dim(), 1);
        assert_eq!(socle(&r).dim(), 1);
        assert_eq!(loewy_length(&r), 3);
    }

    #[test]
    fn hom_from_projective_counts_vertex_dimension() {
        let a = a2();
        let p2 = Representation::projective(&a, 1).unwrap();
        let p1 = Representation::projective(&a, 0).unwrap();
        let n = direct_sum(&[p1.clone(), Representation::simple(&a, 0).unwrap()]);
        assert_eq!(hom_space(&p1, &n).unwrap().len(), n.dims()[0]);
        assert_eq!(hom_space(&p2, &n).unwrap().len(), n.dims()[1]);
        let s1 = Representation::simple(&a, 0).unwrap();
        let s2 = Representation::simple(&a, 1).unwrap();
        assert!(hom_space(&s1, &s2).unwrap().is_empty());
        for f in hom_space(&n, &n).unwrap() {
            f.check().unwrap();
        }
    }

    #[test]
    fn kernel_cokernel_rank_nullity() {
        let a = a2();
        let p1 = Representation::projective(&a, 0).unwrap();
        let s1 = Representation::simple(&a, 0).unwrap();
        let f = &hom_space(&p1, &s1).unwrap()[0];
        let k = kernel(f);
        assert_eq!(k.module().dims(), &[0, 1]);
        assert_eq!(k, radical(&p1));
        let (c, _) = cokernel(f);
        assert!(c.is_zero());
        let id = ModuleMap::identity(&p1);
        assert!(kernel(&id).is_zero());
        assert!(cokernel(&id).0.is_zero());
    }

    #[test]
    fn dual_of_projective_is_injective() {
        let a = a2();
        let op = a.opposite();
        let p = Representation::projective(&op, 1).unwrap();
        let d = p.dual(&a).unwrap();
        assert_eq!(d, Representation::injective(&a, 1).unwrap());
    }
}
