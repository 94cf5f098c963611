//! Complex gamma function (Lanczos approximation).
//!
//! Kept independent of the `G_b` machinery on purpose: the classical
//! limit and the Barnes-lemma degenerations are checked against this
//! routine, so it must not share any code path with the quantum side.

use crate::C64;

use core::f64::consts::PI;

// Lanczos, g = 7, n = 9 (Godfrey/Pugh coefficients).
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `Gamma(z)` for complex `z`, accurate to roughly 1e-13 relative away
/// from the poles at the non-positive integers.
pub fn gamma(z: C64) -> C64 {
    if z.re < 0.5 {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
        let pi_z = C64::new(PI, 0.0) * z;
        return C64::new(PI, 0.0) / (pi_z.sin() * gamma(C64::new(1.0, 0.0) - z));
    }
    let z = z - 1.0;
    let mut acc = C64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += C64::new(c, 0.0) / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    let sqrt_two_pi = (2.0 * PI).sqrt();
    sqrt_two_pi * t.powc(z + 0.5) * (-t).exp() * acc
}

/// `ln Gamma` on the principal branch for `Re z > 0` (used for moduli).
pub fn ln_abs_gamma(z: C64) -> f64 {
    gamma(z).norm().ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_values() {
        for (n, expect) in [(1.0, 1.0), (2.0, 1.0), (3.0, 2.0), (4.0, 6.0), (5.0, 24.0)] {
            let g = gamma(C64::new(n, 0.0));
            assert!((g - C64::new(expect, 0.0)).norm() < 1e-12 * expect);
        }
    }

    #[test]
    fn half_integer() {
        let g = gamma(C64::new(0.5, 0.0));
        assert!((g.re - PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn complex_reflection() {
        // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
        for t in [0.3, 1.1, 2.7] {
            let g = gamma(C64::new(0.5, t));
            let expect = PI / (PI * t).cosh();
            assert!((g.norm_sqr() - expect).abs() < 1e-12 * expect);
        }
    }

    #[test]
    fn recurrence() {
        let z = C64::new(1.3, 0.4);
        let lhs = gamma(z + 1.0);
        let rhs = z * gamma(z);
        assert!((lhs - rhs).norm() < 1e-13 * rhs.norm());
    }
}
