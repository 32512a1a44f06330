//! Seeded random modules for property tests and benchmarks.

use rand::Rng;

use crate::algebra::Algebra;
use crate::field::Scalar;
use crate::matrix::Matrix;
use crate::rep::{direct_sum_or_zero, Representation, Submodule};

fn random_vector<R: Rng + ?Sized>(rng: &mut R, alg: &Algebra, len: usize) -> Vec<Scalar> {
    let f = alg.field();
    (0..len).map(|_| if rng.gen_bool(0.4) { f.zero() } else { f.random(rng, 3) }).collect()
}

/// A sum of one to three indecomposable projectives or injectives.
fn random_free<R: Rng + ?Sized>(rng: &mut R, alg: &Algebra, injective: bool) -> Representation {
    let n = alg.num_vertices();
    let count = rng.gen_range(1..=3);
    let parts: Vec<Representation> = (0..count)
        .map(|_| {
            let v = rng.gen_range(0..n);
            if injective {
                Representation::injective(alg, v).expect("vertex in range")
            } else {
                Representation::projective(alg, v).expect("vertex in range")
            }
        })
        .collect();
    direct_sum_or_zero(alg, &parts)
}

fn random_generators<R: Rng + ?Sized>(rng: &mut R, m: &Representation, count: usize) -> Vec<Matrix> {
    let alg = m.algebra();
    let field = m.field();
    let mut cols: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); alg.num_vertices()];
    for _ in 0..count {
        let live: Vec<usize> = (0..alg.num_vertices()).filter(|&v| m.dims()[v] > 0).collect();
        if live.is_empty() {
            break;
        }
        let v = live[rng.gen_range(0..live.len())];
        cols[v].push(random_vector(rng, alg, m.dims()[v]));
    }
    cols.iter().enumerate().map(|(v, c)| Matrix::from_columns(field, m.dims()[v], c)).collect()
}

/// A random module of total dimension at most `max_dim`: either a quotient
/// of a small projective or a submodule of a small injective, cut down by
/// random elements until it fits.
pub fn random_module<R: Rng + ?Sized>(rng: &mut R, alg: &Algebra, max_dim: usize) -> Representation {
    loop {
        let injective = rng.gen_bool(0.5);
        let free = random_free(rng, alg, injective);
        let mut kill = rng.gen_range(0..=2);
        for _ in 0..8 {
            let gens = random_generators(rng, &free, kill);
            let sub = Submodule::generated(&free, &gens);
            let m = if injective {
                // the generated submodule itself, grown until nonzero
                if sub.is_zero() {
                    kill += 1;
                    continue;
                }
                sub.module().clone()
            } else {
                sub.quotient().0
            };
            if m.dim() <= max_dim && !m.is_zero() {
                return m;
            }
            if injective {
                break;
            }
            kill += 1;
        }
    }
}

/// A direct sum of one or two random modules, still within `max_dim`.
pub fn random_sum<R: Rng + ?Sized>(rng: &mut R, alg: &Algebra, max_dim: usize) -> Representation {
    let a = random_module(rng, alg, max_dim);
    if a.dim() < max_dim && rng.gen_bool(0.5) {
        let b = random_module(rng, alg, max_dim - a.dim());
        return direct_sum_or_zero(alg, &[a, b]);
    }
    a
}
