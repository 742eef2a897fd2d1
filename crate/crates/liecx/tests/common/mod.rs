//! Helpers shared by the integration-test targets: the decoded bundled
//! corpus and seeded generators for the randomized suites.
#![allow(dead_code)]

use std::sync::OnceLock;

use liecx::algebra_core::{block_matrix, Bracket};
use liecx::corpus::{bundled_corpus_dir, load_corpus, Corpus};
use liecx::exact_linalg::{frac, Mat, Rat};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The bundled corpus, decoded once per test binary.  Tests pin the
/// bundled directory instead of honouring `LIECX_CORPUS`, so a stray
/// environment variable cannot redirect the suite.
pub fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| load_corpus(&bundled_corpus_dir()).expect("bundled corpus loads"))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small random rational: numerator in [-6, 6], denominator in [1, 4].
pub fn rand_rat(rng: &mut ChaCha8Rng) -> Rat {
    frac(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

/// Random square matrix with small rational entries.
pub fn rand_mat(rng: &mut ChaCha8Rng, n: usize) -> Mat {
    Mat::from_rows((0..n).map(|_| (0..n).map(|_| rand_rat(rng)).collect()).collect())
}

/// Random invertible rational 4x4 matrix.
pub fn rand_gl4(rng: &mut ChaCha8Rng) -> Mat {
    loop {
        let m = rand_mat(rng, 4);
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// Random invertible element of the compatible group (commutes with J).
pub fn rand_block(rng: &mut ChaCha8Rng) -> Mat {
    loop {
        let a = rand_mat(rng, 2);
        let b = rand_mat(rng, 2);
        let g = block_matrix(&a, &b);
        if !g.det().is_zero() {
            return g;
        }
    }
}

/// Random default sample from the catalog.
pub fn rand_sample(rng: &mut ChaCha8Rng) -> &'static Bracket {
    let catalog = &corpus().catalog;
    &catalog[rng.gen_range(0..catalog.len())].bracket
}
