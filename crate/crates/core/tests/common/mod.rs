#![allow(dead_code)]

use g2_core::algebra::{exp_ad, rescaling_automorphism, weyl_as_automorphism, AlgElement, Automorphism};
use g2_core::roots::ROOTS;
use g2_core::scalar::FieldElement;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A product of one to four root exponentials with small rational parameters,
/// optionally followed by a Weyl lift or a rescaling.
pub fn random_automorphism(rng: &mut ChaCha8Rng) -> Automorphism {
    let mut g = Automorphism::identity();
    for _ in 0..rng.gen_range(1..=4) {
        let r = ROOTS[rng.gen_range(0..ROOTS.len())];
        let c = FieldElement::from_frac(rng.gen_range(-3..=3), rng.gen_range(1..=3));
        g = g.compose(&exp_ad(&c, &AlgElement::x(r)).unwrap());
    }
    match rng.gen_range(0..3) {
        0 => g.compose(&weyl_as_automorphism(ROOTS[rng.gen_range(0..ROOTS.len())])),
        1 => {
            let u = FieldElement::from_frac(rng.gen_range(1..=3), rng.gen_range(1..=2));
            let v = FieldElement::from_frac(-rng.gen_range(1..=3), 1);
            g.compose(&rescaling_automorphism(&u, &v).unwrap())
        }
        _ => g,
    }
}

/// The nilpotent orbit representatives with their orbit dimensions.
pub fn orbit_representatives() -> Vec<(AlgElement, usize)> {
    vec![
        (AlgElement::xr(0, 1), 6),
        (AlgElement::xr(1, 0), 8),
        (&AlgElement::xr(1, 0) + &AlgElement::xr(3, 2), 10),
        (&AlgElement::xr(1, 0) + &AlgElement::xr(0, 1), 12),
    ]
}

/// Jacobi identity over all ordered basis triples; returns the failing count.
pub fn jacobi_failures() -> usize {
    use g2_core::algebra::{bracket, DIM};
    let b: Vec<AlgElement> = (0..DIM).map(AlgElement::basis).collect();
    let mut bad = 0;
    for x in &b {
        for y in &b {
            for z in &b {
                let s = &(&bracket(x, &bracket(y, z)) + &bracket(y, &bracket(z, x))) + &bracket(z, &bracket(x, y));
                if !s.is_zero() {
                    bad += 1;
                }
            }
        }
    }
    bad
}
