#![allow(dead_code)]

use hypermoduli_core::arith::{rat, CycloElement, Rational};
use hypermoduli_core::forms::{BinaryForm, Matrix2};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const SEED: u64 = 0x5eed_a4a4;

pub fn rng() -> StdRng {
    StdRng::seed_from_u64(SEED)
}

pub fn rational(rng: &mut StdRng, bound: i64) -> Rational {
    rat(
        rng.gen_range(-bound..=bound),
        rng.gen_range(1..=bound.max(1)),
    )
}

pub fn nonzero_rational(rng: &mut StdRng, bound: i64) -> Rational {
    loop {
        let q = rational(rng, bound);
        if q != rat(0, 1) {
            return q;
        }
    }
}

pub fn cyclo(rng: &mut StdRng, bound: i64) -> CycloElement {
    CycloElement::new(
        rational(rng, bound),
        rational(rng, bound),
        rational(rng, bound),
        rational(rng, bound),
    )
}

pub fn form(rng: &mut StdRng, degree: usize, bound: i64) -> BinaryForm<Rational> {
    BinaryForm::new(degree, (0..=degree).map(|_| rational(rng, bound)).collect()).unwrap()
}

/// A matrix with small integer entries and nonzero determinant.
pub fn matrix(rng: &mut StdRng) -> Matrix2<Rational> {
    loop {
        let mut e = || rat(rng.gen_range(-3..=3), 1);
        let m = Matrix2::new(e(), e(), e(), e());
        if !m.det().is_zero() {
            return m;
        }
    }
}
