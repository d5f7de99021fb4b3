//! Seeded random sampling of algebra objects.
//!
//! All randomized checks draw from ChaCha8 streams so that a seed gives the
//! same values on every platform. `trial_rng` derives an independent stream
//! per trial index, which keeps results independent of execution order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hmatrix::HMatrix;
use crate::hypercomplex::HNumber;
use crate::pauli::{AlgebraElement, Paravector};

pub type TrialRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TrialRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for trial `index` under `seed`.
pub fn trial_rng(seed: u64, index: u64) -> TrialRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(index.wrapping_add(1));
    r
}

pub fn rand_hnumber<R: Rng>(rng: &mut R, scale: f64) -> HNumber {
    HNumber::from_array(std::array::from_fn(|_| rng.gen_range(-scale..scale)))
}

pub fn rand_element<R: Rng>(rng: &mut R, scale: f64) -> AlgebraElement {
    AlgebraElement::new(std::array::from_fn(|_| rand_hnumber(rng, scale)))
}

pub fn rand_paravector<R: Rng>(rng: &mut R, scale: f64) -> Paravector {
    Paravector::new(std::array::from_fn(|_| rng.gen_range(-scale..scale)))
}

pub fn rand_hmatrix<R: Rng>(rng: &mut R, n: usize, scale: f64) -> HMatrix {
    HMatrix::from_row_major((0..n * n).map(|_| rand_hnumber(rng, scale)).collect()).expect("square by construction")
}

/// Uniformly distributed unit 3-vector.
pub fn rand_unit_vector<R: Rng>(rng: &mut R) -> [f64; 3] {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let n2 = v.iter().map(|c| c * c).sum::<f64>();
        if n2 > 1e-4 && n2 <= 1.0 {
            let n = n2.sqrt();
            return v.map(|c| c / n);
        }
    }
}
