#![allow(dead_code)] // not every test target uses every helper

//! Shared helpers for the integration suites: seeded random generation of
//! right Leibniz algebras over small prime fields.
//!
//! Uniform random structure-constant tensors of dimension 3 essentially
//! never satisfy the right identity, so the sampler draws sparse tensors
//! (high acceptance rate) and densifies by a random change of basis;
//! every candidate is still filtered through the identity check itself.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use leibniz_core::iso::change_of_basis;
use leibniz_core::{Algebra, FieldDesc, Fp, Matrix, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_sparse_tensor(rng: &mut ChaCha8Rng, p: u32, dim: usize) -> Algebra<Fp> {
    let field = FieldDesc::prime(p).unwrap();
    let mut sc = vec![Fp::zero(&field); dim * dim * dim];
    let nonzeros = if dim <= 2 {
        rng.gen_range(1..=dim * dim)
    } else {
        rng.gen_range(1..=4)
    };
    for _ in 0..nonzeros {
        let i = rng.gen_range(0..dim);
        let j = rng.gen_range(0..dim);
        let k = rng.gen_range(0..dim);
        sc[(i * dim + j) * dim + k] = Fp::new(p, rng.gen_range(1..p));
    }
    Algebra::from_structure_constants(field, dim, sc).unwrap()
}

pub fn random_invertible(rng: &mut ChaCha8Rng, p: u32, n: usize) -> Matrix<Fp> {
    let field = FieldDesc::prime(p).unwrap();
    loop {
        let m = Matrix::from_fn(field, n, n, |_, _| Fp::new(p, rng.gen_range(0..p)));
        if m.is_invertible() {
            return m;
        }
    }
}

/// `count` random right Leibniz algebras over F_p of dimension <= 3, each
/// verified by the identity check, roughly half densified by a random
/// change of basis.
pub fn random_right_leibniz(seed: u64, p: u32, count: usize) -> Vec<Algebra<Fp>> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let dim = if rng.gen_bool(0.3) { 2 } else { 3 };
        let candidate = random_sparse_tensor(&mut rng, p, dim);
        if !candidate.identity_flags().right_leibniz {
            continue;
        }
        let final_alg = if rng.gen_bool(0.5) {
            let t = random_invertible(&mut rng, p, dim);
            let moved = change_of_basis(&candidate, &t).unwrap();
            assert!(moved.identity_flags().right_leibniz);
            moved
        } else {
            candidate
        };
        out.push(final_alg);
    }
    out
}
