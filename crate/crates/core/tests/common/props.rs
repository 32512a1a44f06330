//! Invariants checked on seeded random modules. Each check returns a
//! description of the first violation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use extdim_core::certificate::{resolution_to_filtration, verify_filtration};
use extdim_core::corpus::CorpusEntry;
use extdim_core::decompose::{decompose, iso_indecomposable};
use extdim_core::homology::{
    default_cutoff, minimal_projective_resolution, omega, omega_inv, proj_dimension, rotate_ses, syzygy_sequence,
};
use extdim_core::random::{random_module, random_sum};
use extdim_core::rep::{direct_sum_or_zero, hom_space};
use extdim_core::torsion::{layer_length, radical_of_torsion, torsion_radical, torsion_sequence, SimpleSubset};
use extdim_core::{Algebra, Representation};

pub type Check = Result<(), String>;

/// Largest module built per algebra; keeps the larger corpus entries fast.
pub fn max_dim(alg: &Algebra) -> usize {
    if alg.num_vertices() == 1 {
        6
    } else {
        10
    }
}

pub struct Case {
    pub rng: ChaCha8Rng,
    pub m: Representation,
    pub s: SimpleSubset,
}

pub fn case(alg: &Algebra, seed: u64) -> Case {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = random_sum(&mut rng, alg, max_dim(alg));
    let members: Vec<usize> = (0..alg.num_vertices()).filter(|_| rng.gen_bool(0.5)).collect();
    let s = SimpleSubset::new(alg, &members).unwrap();
    Case { rng, m, s }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn torsion_idempotent(c: &mut Case) -> Check {
    let t = torsion_radical(&c.s, &c.m);
    let tt = torsion_radical(&c.s, t.module());
    ensure(tt.dim() == t.dim(), || format!("t(t M) has dim {} but t M has {}", tt.dim(), t.dim()))?;
    let (q, _) = t.quotient();
    let tq = torsion_radical(&c.s, &q);
    ensure(tq.is_zero(), || format!("t(M / t M) has dim {}", tq.dim()))
}

pub fn hom_orthogonal(c: &mut Case) -> Check {
    let alg = c.m.algebra().clone();
    let other = random_module(&mut c.rng, &alg, max_dim(&alg));
    let x = torsion_radical(&c.s, &c.m).module().clone();
    let y = torsion_radical(&c.s, &other).quotient().0;
    let homs = hom_space(&x, &y).map_err(|e| e.to_string())?;
    ensure(homs.is_empty(), || format!("{} nonzero maps from a torsion to a torsion-free module", homs.len()))
}

pub fn layer_shift(c: &mut Case) -> Check {
    let (n, _) = layer_length(&c.s, &c.m);
    let mut f = c.m.clone();
    for i in 0..=n {
        let (l, _) = layer_length(&c.s, &f);
        ensure(l == n - i, || format!("layer length {l} after {i} steps, expected {}", n - i))?;
        f = radical_of_torsion(&c.s, &f);
    }
    Ok(())
}

pub fn pd_of_sum_is_max(c: &mut Case) -> Check {
    let alg = c.m.algebra().clone();
    let n = random_module(&mut c.rng, &alg, max_dim(&alg));
    let cutoff = default_cutoff(&alg);
    let a = proj_dimension(&c.m, cutoff);
    let b = proj_dimension(&n, cutoff);
    let s = proj_dimension(&direct_sum_or_zero(&alg, &[c.m.clone(), n]), cutoff);
    let expect = a.max(b);
    ensure(s.finite() == expect.finite(), || format!("pd of the sum is {s}, parts {a} and {b}"))
}

pub fn omega_kills_projectives(c: &mut Case) -> Check {
    let alg = c.m.algebra().clone();
    let pick = |rng: &mut ChaCha8Rng, inj: bool| {
        let parts: Vec<Representation> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let v = rng.gen_range(0..alg.num_vertices());
                if inj {
                    Representation::injective(&alg, v).unwrap()
                } else {
                    Representation::projective(&alg, v).unwrap()
                }
            })
            .collect();
        direct_sum_or_zero(&alg, &parts)
    };
    let p = pick(&mut c.rng, false);
    ensure(omega(&p).is_zero(), || "Ω of a projective is nonzero".into())?;
    let i = pick(&mut c.rng, true);
    ensure(omega_inv(&i).is_zero(), || "Ω⁻¹ of an injective is nonzero".into())
}

pub fn rotations_exact(c: &mut Case) -> Check {
    let seqs = [syzygy_sequence(&c.m).1, torsion_sequence(&c.s, &c.m)];
    for ses in &seqs {
        let (l, r) = rotate_ses(ses).map_err(|e| e.to_string())?;
        l.check().map_err(|e| format!("left rotation: {e}"))?;
        r.check().map_err(|e| format!("right rotation: {e}"))?;
    }
    Ok(())
}

pub fn krull_schmidt_stable(c: &mut Case) -> Check {
    let a = decompose(&c.m, 1).map_err(|e| e.to_string())?;
    let b = decompose(&c.m, c.rng.gen()).map_err(|e| e.to_string())?;
    ensure(a.len() == b.len(), || format!("{} classes against {}", a.len(), b.len()))?;
    for (x, k) in &a {
        let hit = b.iter().any(|(y, l)| l == k && x.dims() == y.dims() && iso_indecomposable(x, y).is_some());
        ensure(hit, || format!("summand {:?} with multiplicity {k} not matched", x.dims()))?;
    }
    let total: usize = a.iter().map(|(x, k)| x.dim() * k).sum();
    ensure(total == c.m.dim(), || "summand dimensions do not add up".into())
}

/// Restriction to a random path-convex vertex set carries certificates to
/// certificates.
pub fn certificate_transport(c: &mut Case) -> Check {
    let alg = c.m.algebra().clone();
    let len = c.rng.gen_range(1..=3);
    let cert = resolution_to_filtration(&minimal_projective_resolution(&c.m, len)).map_err(|e| e.to_string())?;
    let keep = loop {
        let k: Vec<usize> = (0..alg.num_vertices()).filter(|_| c.rng.gen_bool(0.6)).collect();
        if !k.is_empty() && alg.restrict(&k).is_ok() {
            break k;
        }
    };
    let r = cert.restrict(&keep).map_err(|e| e.to_string())?;
    let v = verify_filtration(&r, r.root.module(), r.claimed_depth).map_err(|e| e.to_string())?;
    ensure(v.valid, || format!("restricted to {keep:?}: {:?}", v.failure))?;
    let expect: Vec<usize> = keep.iter().map(|&i| c.m.dims()[i]).collect();
    ensure(r.root.module().dims() == expect.as_slice(), || "restricted root has the wrong dimensions".into())
}

pub type Property = fn(&mut Case) -> Check;

pub const PROPERTIES: [(&str, Property); 8] = [
    ("torsion idempotence and quotient vanishing", torsion_idempotent),
    ("hom-orthogonality of the torsion pair", hom_orthogonal),
    ("layer length drops by one per step", layer_shift),
    ("pd of a sum is the max", pd_of_sum_is_max),
    ("syzygies kill projectives, cosyzygies kill injectives", omega_kills_projectives),
    ("rotated sequences are exact", rotations_exact),
    ("decomposition multisets agree across seeds", krull_schmidt_stable),
    ("certificates survive vertex restriction", certificate_transport),
];

pub const SUITE_SEEDS: [u64; 5] = [0xE3D1, 1, 2, 3, 4];

/// Runs every property on `cases` modules per seed; returns the failures.
pub fn run_suite(entries: &[CorpusEntry], cases: u32, seeds: &[u64]) -> Vec<String> {
    use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};
    let mut failures = Vec::new();
    for e in entries {
        for &seed in seeds {
            for (name, prop) in PROPERTIES {
                let config = Config {
                    cases,
                    rng_seed: RngSeed::Fixed(seed),
                    failure_persistence: None,
                    max_shrink_iters: 0,
                    ..Config::default()
                };
                let mut runner = TestRunner::new(config);
                let alg = &e.algebra;
                let res = runner.run(&proptest::num::u64::ANY, |s| {
                    prop(&mut case(alg, s)).map_err(|m| TestCaseError::fail(format!("module seed {s}: {m}")))
                });
                if let Err(err) = res {
                    failures.push(format!("{} / seed {seed} / {name}: {err}", e.name));
                }
            }
        }
    }
    failures
}
