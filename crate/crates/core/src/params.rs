//! The deformation datum shared by every evaluator.

use crate::error::{Error, Result};
use crate::C64;

use core::f64::consts::PI;

/// Immutable deformation parameters derived from `b`.
///
/// `q = e^{i pi b^2}`, `q_tilde = e^{i pi b^-2}`, `big_q = b + 1/b` and
/// `zeta = e^{i pi/4 + i pi (b^2 + b^-2)/12}` all sit on the unit circle
/// except `big_q >= 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BParams {
    pub b: f64,
    pub q: C64,
    pub q_tilde: C64,
    pub big_q: f64,
    pub zeta: C64,
}

/// Residue data for the simple pole of `1/G_b(Q+z)` at `z = nb + m/b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleInfo {
    /// Pole of `G_b` itself: `-nb - m/b`.
    pub location: C64,
    pub order: u32,
    pub n: u32,
    pub m: u32,
    /// `Res 1/G_b(Q+z)` at `z = nb + m/b`.
    pub residue: C64,
}

impl BParams {
    /// Builds the datum, rejecting `b` outside `(0,1)`.
    ///
    /// Returns a non-fatal warning message when `b^2` sits within `1e-3`
    /// of a rational `p/r` with `r <= 8`; the pole lattices `nb + m/b`
    /// nearly collide there and identity checks lose accuracy.
    pub fn new(b: f64) -> Result<(Self, Option<&'static str>)> {
        if !(b > 0.0 && b < 1.0) || !b.is_finite() {
            return Err(Error::Domain("b must lie in (0, 1)"));
        }
        let b2 = b * b;
        let mut warn = None;
        for r in 1..=8u32 {
            let scaled = b2 * r as f64;
            if (scaled - scaled.round()).abs() < 1e-3 {
                warn = Some("b^2 is within 1e-3 of a low-denominator rational; pole lattice nearly degenerate");
                break;
            }
        }
        let q = C64::from_polar(1.0, PI * b2);
        let q_tilde = C64::from_polar(1.0, PI / b2);
        let zeta = C64::from_polar(1.0, PI / 4.0 + PI * (b2 + 1.0 / b2) / 12.0);
        Ok((
            BParams {
                b,
                q,
                q_tilde,
                big_q: b + 1.0 / b,
                zeta,
            },
            warn,
        ))
    }

    /// As [`BParams::new`] but discarding the near-degeneracy warning.
    pub fn make(b: f64) -> Result<Self> {
        Ok(Self::new(b)?.0)
    }

    /// The dual datum with `b` replaced by `1/b`.
    ///
    /// Only meaningful as a code-path check (`b` is clamped to stay the
    /// canonical representative in `(0,1)` everywhere else); `G_b`, `S_b`
    /// are invariant under the swap.
    pub fn swapped(&self) -> Self {
        let b = 1.0 / self.b;
        let b2 = b * b;
        BParams {
            b,
            q: C64::from_polar(1.0, PI * b2),
            q_tilde: C64::from_polar(1.0, PI / b2),
            big_q: self.big_q,
            zeta: self.zeta,
        }
    }

    /// Distance from `z` to the nearest point of the pole lattice
    /// `{-nb - m/b : n, m >= 0}`.
    pub fn pole_distance(&self, z: C64) -> f64 {
        let b = self.b;
        let binv = 1.0 / b;
        if z.re > 0.5 * b.min(binv) {
            // lattice lives on (-inf, 0]
            return (z - C64::new(0.0, 0.0)).norm().max(z.re);
        }
        let mut best = f64::INFINITY;
        let nmax = ((-z.re) / b).ceil().max(0.0) as i64 + 2;
        for n in 0..=nmax {
            let re_left = -z.re - n as f64 * b;
            // given n, the closest m
            let m0 = (re_left * b).floor().max(0.0) as i64;
            for m in m0..=(m0 + 1) {
                if m < 0 {
                    continue;
                }
                let p = C64::new(-(n as f64) * b - m as f64 * binv, 0.0);
                best = best.min((z - p).norm());
            }
        }
        best
    }

    /// Exact product formula for `Res 1/G_b(Q+z)` at `z = nb + m/b`.
    pub fn residue_info(&self, n: u32, m: u32) -> PoleInfo {
        let mut prod = C64::new(1.0, 0.0);
        for k in 1..=n {
            prod /= C64::new(1.0, 0.0) - self.q.powu(2 * k);
        }
        for l in 1..=m {
            prod /= C64::new(1.0, 0.0) - self.q_tilde.powu(2 * l);
        }
        let loc = -(n as f64) * self.b - (m as f64) / self.b;
        PoleInfo {
            location: C64::new(loc, 0.0),
            order: 1,
            n,
            m,
            residue: -prod / (2.0 * PI),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_fields() {
        let (p, warn) = BParams::new(0.775).unwrap();
        assert!(warn.is_none());
        assert!((p.big_q - (0.775 + 1.0 / 0.775)).abs() < 1e-15);
        assert!((p.q.norm() - 1.0).abs() < 1e-15);
        assert!((p.q_tilde.norm() - 1.0).abs() < 1e-15);
        assert!((p.zeta.norm() - 1.0).abs() < 1e-15);
        assert!(p.big_q >= 2.0);
    }

    #[test]
    fn rejects_bad_b() {
        assert!(matches!(BParams::new(1.2), Err(Error::Domain(_))));
        assert!(matches!(BParams::new(0.0), Err(Error::Domain(_))));
        assert!(matches!(BParams::new(-0.3), Err(Error::Domain(_))));
    }

    #[test]
    fn warns_near_degenerate() {
        // b^2 = 0.5 exactly
        let (_, warn) = BParams::new(0.5f64.sqrt()).unwrap();
        assert!(warn.is_some());
        // default test value is safely irrational-ish
        assert!(BParams::new(0.775).unwrap().1.is_none());
    }

    #[test]
    fn residue_base_cases() {
        let p = BParams::make(0.775).unwrap();
        let r00 = p.residue_info(0, 0);
        assert!((r00.residue - C64::new(-1.0 / (2.0 * PI), 0.0)).norm() < 1e-15);
        let r10 = p.residue_info(1, 0);
        let expect = -(C64::new(1.0, 0.0) - p.q * p.q).inv() / (2.0 * PI);
        assert!((r10.residue - expect).norm() < 1e-15);
    }

    #[test]
    fn pole_distance_examples() {
        let p = BParams::make(0.775).unwrap();
        assert!(p.pole_distance(C64::new(0.0, 0.0)) < 1e-12);
        assert!(p.pole_distance(C64::new(-p.b, 0.0)) < 1e-12);
        // nearest lattice points to (-b/2, 0.3) are 0 and -b, both at
        // sqrt((b/2)^2 + 0.09)
        let d = p.pole_distance(C64::new(-p.b / 2.0, 0.3));
        let expect = ((p.b / 2.0) * (p.b / 2.0) + 0.09).sqrt();
        assert!((d - expect).abs() < 1e-12);
    }
}
