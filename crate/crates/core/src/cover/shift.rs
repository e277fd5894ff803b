use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::PrimeFieldElement;
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::verdict::{ensure, Verdict};

/// G = A·B⁻¹ - C and H = A - C·B generate the same ideal because
/// G·B = H and H·B⁻¹ = G. Checks both products for one triple; B must be
/// invertible.
pub fn shift_identities_hold<T: Ring>(a: &Matrix<T>, b: &Matrix<T>, c: &Matrix<T>) -> crate::Result<bool> {
    let b_inv = b.inverse()?;
    let g = a.mul(&b_inv).sub(c);
    let h = a.sub(&c.mul(b));
    Ok(g.mul(b) == h && h.mul(&b_inv) == g)
}

fn random_matrix<R: Rng>(p: u64, n: usize, rng: &mut R) -> Matrix<PrimeFieldElement> {
    Matrix::from_rows(
        (0..n)
            .map(|_| (0..n).map(|_| PrimeFieldElement::new(rng.gen_range(0..p) as i64, p)).collect())
            .collect(),
    )
}

/// Draws `samples` triples (A, B, C) of n×n matrices over 𝔽_p, resampling
/// singular B, and checks [`shift_identities_hold`] on each.
pub fn matrix_ideal_shift_check(p: u64, n: usize, samples: usize, seed: u64) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32));
    for i in 0..samples {
        let a = random_matrix(p, n, &mut rng);
        let c = random_matrix(p, n, &mut rng);
        let b = loop {
            let b = random_matrix(p, n, &mut rng);
            if !b.det().is_zero() {
                break b;
            }
        };
        ensure(shift_identities_hold(&a, &b, &c)?, || format!("sample {i} (n = {n}) breaks G·B = H"))?;
    }
    Ok(())
}
