#![allow(dead_code)]

use dilogint::integrand::{IntegralKind, MonomialSum};
use dilogint::kinematics::Kinematics;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const REGRESSION_SEED: u64 = 0x5eed_0050;

/// One integral of the random regression set.
#[derive(Debug, Clone)]
pub struct Case {
    pub kin: Kinematics,
    pub kind: IntegralKind,
    pub f: MonomialSum,
}

/// Fifty random `(ξ, Λ, (m,n), yᵃzᵇ)` with a closed inner integral, so the
/// nested and one-dimensional oracles can be compared on every case.
pub fn regression_set() -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(REGRESSION_SEED);
    let kinds = [(0, 0), (1, 0), (2, 1), (1, 1)];
    (0..50)
        .map(|i| {
            let (m, n) = kinds[i % kinds.len()];
            let kin = loop {
                let xi = rng.gen_range(0.02..0.9);
                let lambda = 10f64.powf(rng.gen_range(-6.0..-2.0));
                if let Ok(k) = Kinematics::new(xi, lambda) {
                    break k;
                }
            };
            let a = rng.gen_range(-1..=2);
            // n > 0 only reduces for z-independent prefactors
            let b = if n == 0 { rng.gen_range(-1..=2) } else { 0 };
            let coeff = rng.gen_range(0.5..2.0);
            Case {
                kin,
                kind: IntegralKind::new(m, n).unwrap(),
                f: MonomialSum::monomial(coeff, a, b).unwrap(),
            }
        })
        .collect()
}

pub fn kin(xi: f64, lambda: f64) -> Kinematics {
    Kinematics::new(xi, lambda).unwrap()
}
