//! Core evaluators for `G_b`, `S_b` and `g_b` on all of C.
//!
//! The primitive is Ruijsenaars' integral
//! `G(a+,a-;w) = exp( i int_0^inf dy/y [ sin(2yw) / (2 sinh(a+ y) sinh(a- y)) - w/(a+ a- y) ] )`
//! valid for `|Im w| < (a+ + a-)/2`, with
//! `G_b(z) = G(b, 1/b; iz - iQ/2) e^{i pi z (z - Q)/2}`. Direct evaluation
//! is restricted to a band of width `b` around `Re z = Q/2` where the
//! integrand decays quickly; everywhere else the shift equation
//! `G_b(x + b^{+-1}) = (1 - e^{2 pi i b^{+-1} x}) G_b(x)` continues the
//! value in, `b`-steps first, then `1/b`-steps.

use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::numerics::{integrate_semi_infinite, QuadConfig};
use crate::params::BParams;
use crate::{c64, C64};
use alloc::vec::Vec;

use core::f64::consts::PI;

/// Near-pole guard: inside this distance of the lattice `-nb - m/b` the
/// evaluators return [`Error::PoleHit`] instead of a huge value.
pub const POLE_GUARD: f64 = 1e-8;

fn ruijsenaars_integrand(y: f64, w: C64, ap: f64, am: f64) -> C64 {
    if y < 1e-3 {
        // sin(2yw) = 2yw (1 - (2/3)w^2 y^2 + (2/15)w^4 y^4 - ...)
        // 2 sinh(a+ y) sinh(a- y) = 2 a+ a- y^2 (1 + p y^2 + r y^4 + ...)
        let p = (ap * ap + am * am) / 6.0;
        let r = ((ap + am).powi(6) - (ap - am).powi(6)) / (1440.0 * ap * am);
        let w2 = w * w;
        let c2 = -w2 * (2.0 / 3.0) - p;
        let c4 = w2 * w2 * (2.0 / 15.0) + w2 * (2.0 / 3.0) * p + (p * p - r);
        w / (ap * am) * (c2 + c4 * y * y)
    } else {
        ((2.0 * y * w).sin() / (2.0 * (ap * y).sinh() * (am * y).sinh()) - w / (ap * am * y)) / y
    }
}

/// Ruijsenaars' double-sine building block `G(a+, a-; w)`.
///
/// Requires `|Im w| < (a+ + a-)/2` (the strip of absolute convergence).
pub fn ruijsenaars_g(w: C64, a_plus: f64, a_minus: f64, cfg: &QuadConfig) -> Result<C64> {
    if !(a_plus > 0.0 && a_minus > 0.0) {
        return Err(Error::Domain("a_plus and a_minus must be positive"));
    }
    let strip = 0.5 * (a_plus + a_minus);
    if w.im.abs() >= strip {
        return Err(Error::StripViolation);
    }
    // decay rate of the sin-term: (a+ + a-) - 2|Im w|; pick y_max so the
    // dropped oscillatory part is ~1e-16, then the 1/y^2 tail exactly.
    let rate = (a_plus + a_minus) - 2.0 * w.im.abs();
    let y_max = (40.0 / rate).min(400.0);
    let tail = -w / (a_plus * a_minus * y_max);
    let mut f = |y: f64| ruijsenaars_integrand(y, w, a_plus, a_minus);
    let res = integrate_semi_infinite(&mut f, y_max, tail, cfg)?;
    Ok((res.value * c64(0.0, 1.0)).exp())
}

fn direct_gb(z: C64, p: &BParams, cfg: &QuadConfig) -> Result<(C64, f64)> {
    let w = c64(0.0, 1.0) * (z - 0.5 * p.big_q);
    let rate = (p.b + 1.0 / p.b) - 2.0 * w.im.abs();
    let y_max = (40.0 / rate).min(400.0);
    let tail = -w / y_max;
    let mut f = |y: f64| ruijsenaars_integrand(y, w, p.b, 1.0 / p.b);
    let res = integrate_semi_infinite(&mut f, y_max, tail, cfg)?;
    let g = (res.value * c64(0.0, 1.0)).exp();
    let pref = (c64(0.0, 0.5 * PI) * z * (z - p.big_q)).exp();
    // |delta e^{iI}| ~ |e^{iI}| |delta I|
    Ok((g * pref, res.err_estimate))
}

/// Number of (b, 1/b) shift steps used to reach the direct band.
fn continuation_steps(re: f64, p: &BParams) -> (i64, i64) {
    let center = 0.5 * p.big_q;
    let b = p.b;
    let binv = 1.0 / b;
    // minimal |n| + |m| with re + n b + m / b inside (center - b/2, center + b/2]
    let mut best = (0i64, 0i64);
    let mut best_cost = i64::MAX;
    let m_span = ((re - center).abs() * b).ceil() as i64 + 1;
    for m in -m_span..=m_span {
        let n = ((center - re - m as f64 * binv) / b).round() as i64;
        let landing = re + n as f64 * b + m as f64 * binv;
        if (landing - center).abs() <= 0.5 * b + 1e-12 {
            let cost = n.abs() + m.abs();
            if cost < best_cost {
                best_cost = cost;
                best = (n, m);
            }
        }
    }
    best
}

/// `G_b(z)` anywhere off the pole lattice.
pub fn gb(z: C64, p: &BParams, cfg: &QuadConfig) -> Result<C64> {
    Ok(gb_with_err(z, p, cfg)?.0)
}

/// `G_b(z)` together with the propagated quadrature error estimate of
/// the underlying exponent integral (relative error carries through the
/// shift-equation factors unchanged).
pub fn gb_with_err(z: C64, p: &BParams, cfg: &QuadConfig) -> Result<(C64, f64)> {
    if p.pole_distance(z) < POLE_GUARD {
        return Err(Error::PoleHit { re: z.re, im: z.im });
    }
    let (n, m) = continuation_steps(z.re, p);
    // shift b-steps first, then 1/b-steps: G_b evaluated at z + n b + m/b
    let zz = z + c64(n as f64 * p.b + m as f64 / p.b, 0.0);
    let (mut val, rel_err) = direct_gb(zz, p, cfg)?;
    // undo the 1/b-steps: G_b(x + 1/b) = (1 - e^{2 pi i x / b}) G_b(x)
    let binv = 1.0 / p.b;
    if m > 0 {
        // value at z + nb: divide factors downward
        for k in 1..=m {
            let x = zz - c64(k as f64 * binv, 0.0);
            val /= c64(1.0, 0.0) - (c64(0.0, 2.0 * PI * binv) * x).exp();
        }
    } else {
        for k in 0..(-m) {
            let x = zz + c64(k as f64 * binv, 0.0);
            val *= c64(1.0, 0.0) - (c64(0.0, 2.0 * PI * binv) * x).exp();
        }
    }
    let z_after_b = z + c64(n as f64 * p.b, 0.0);
    if n > 0 {
        for k in 1..=n {
            let x = z_after_b - c64(k as f64 * p.b, 0.0);
            val /= c64(1.0, 0.0) - (c64(0.0, 2.0 * PI * p.b) * x).exp();
        }
    } else {
        for k in 0..(-n) {
            let x = z_after_b + c64(k as f64 * p.b, 0.0);
            val *= c64(1.0, 0.0) - (c64(0.0, 2.0 * PI * p.b) * x).exp();
        }
    }
    Ok((val, val.norm() * rel_err))
}

/// `S_b(z) = e^{-i pi z (z-Q)/2} G_b(z)`.
pub fn sb(z: C64, p: &BParams, cfg: &QuadConfig) -> Result<C64> {
    Ok((c64(0.0, -0.5 * PI) * z * (z - p.big_q)).exp() * gb(z, p, cfg)?)
}

/// `g_b(x) = conj(zeta_b) / G_b(Q/2 + log(x) / (2 pi i b))`, principal
/// branch, cut on `(-inf, 0]`.
pub fn g_small(x: C64, p: &BParams, cfg: &QuadConfig) -> Result<C64> {
    if x.im == 0.0 && x.re <= 0.0 {
        return Err(Error::BranchCut);
    }
    let arg = 0.5 * p.big_q + x.ln() / (c64(0.0, 2.0 * PI * p.b));
    Ok(p.zeta.conj() / gb(arg, p, cfg)?)
}

/// Asymptotic envelope (safety factor 4) for `|G_b(s+ix) / G_b(t+ix)|`:
/// `~1` as `x -> +inf` and `~e^{2 pi x Re(t-s)}` as `x -> -inf`. Feeds
/// truncation-window choices for every integrand built from `G_b` ratios.
pub fn gb_ratio_tail_bound(s: C64, t: C64, x: f64, _p: &BParams) -> f64 {
    if x >= 0.0 {
        4.0
    } else {
        4.0 * (2.0 * PI * x * (t.re - s.re)).exp()
    }
}

/// One row of the classical-limit probe.
#[derive(Debug, Clone, Copy)]
pub struct ClassicalLimitRow {
    pub b: f64,
    /// `G_b(bx) / (sqrt(-i) |b| (1-q^2)^{x-1})`.
    pub ratio: C64,
    /// Relative deviation of `|ratio|` from `|Gamma(x)|`. The limit is
    /// stated for `b^2` tending to zero along the positive imaginary
    /// axis; for real `b` the ratio converges to `Gamma(x)` only in
    /// modulus (the phase stalls at a `b`-dependent constant), so the
    /// modulus is what the probe tracks.
    pub deviation: f64,
}

/// Evaluates `G_b(bx)` against the scaled Gamma function along a ladder
/// of decreasing `b`.
pub fn classical_limit_probe(x: C64, b_list: &[f64], cfg: &QuadConfig) -> Result<Vec<ClassicalLimitRow>> {
    let gamma_x = gamma(x);
    if !gamma_x.is_finite() || gamma_x.norm() == 0.0 {
        return Err(Error::Domain("Gamma(x) undefined at this x"));
    }
    let mut out = Vec::with_capacity(b_list.len());
    for &b in b_list {
        let p = BParams::make(b)?;
        let q2 = p.q * p.q;
        // sqrt(-i) = e^{-i pi/4}; principal power of (1 - q^2), whose
        // argument lies in (-pi/2, pi/2) for 0 < b^2 < 1.
        let pref = C64::from_polar(b, -PI / 4.0) * (c64(1.0, 0.0) - q2).powc(x - 1.0);
        let val = gb(b * x, &p, cfg)?;
        let ratio = val / pref;
        let deviation = (ratio.norm() - gamma_x.norm()).abs() / gamma_x.norm();
        out.push(ClassicalLimitRow { b, ratio, deviation });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> BParams {
        BParams::make(0.775).unwrap()
    }

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn ruijsenaars_at_zero() {
        let g = ruijsenaars_g(c64(0.0, 0.0), 0.775, 1.0 / 0.775, &cfg()).unwrap();
        assert!((g - c64(1.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn ruijsenaars_reflection() {
        // G(z) G(-z) = 1
        let z = c64(0.3, 0.2);
        let a = ruijsenaars_g(z, 0.775, 1.0 / 0.775, &cfg()).unwrap();
        let b = ruijsenaars_g(-z, 0.775, 1.0 / 0.775, &cfg()).unwrap();
        assert!((a * b - c64(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn ruijsenaars_swap_symmetric() {
        let z = c64(0.0, 0.1);
        let a = ruijsenaars_g(z, 0.775, 1.0 / 0.775, &cfg()).unwrap();
        let b = ruijsenaars_g(z, 1.0 / 0.775, 0.775, &cfg()).unwrap();
        assert!((a - b).norm() < 1e-13);
    }

    #[test]
    fn ruijsenaars_strip_violation() {
        let r = ruijsenaars_g(c64(0.0, 1.1), 0.775, 1.0 / 0.775, &cfg());
        assert!(matches!(r, Err(Error::StripViolation)));
    }

    #[test]
    fn gb_at_half_q() {
        let p = p();
        let v = gb(c64(0.5 * p.big_q, 0.0), &p, &cfg()).unwrap();
        let expect = (c64(0.0, -PI * p.big_q * p.big_q / 8.0)).exp();
        assert!((v - expect).norm() < 1e-12);
    }

    #[test]
    fn gb_unitarity_line() {
        let p = p();
        for t in [0.7, 2.3, -1.4] {
            let v = gb(c64(0.5 * p.big_q, t), &p, &cfg()).unwrap();
            assert!((v.norm() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn gb_at_b_is_minus_ib() {
        // exact consequence of the shift equation and the residue at 0
        let p = p();
        let v = gb(c64(p.b, 0.0), &p, &cfg()).unwrap();
        assert!((v - c64(0.0, -p.b)).norm() < 1e-11);
    }

    #[test]
    fn gb_pole_hit() {
        let p = p();
        let r = gb(c64(-p.b, 1e-12), &p, &cfg());
        assert!(matches!(r, Err(Error::PoleHit { .. })));
    }

    #[test]
    fn residue_scaling_near_zero() {
        // x G_b(x) -> 1/(2 pi), Richardson over x = 1e-3, 1e-4
        let p = p();
        let v1 = c64(1e-3, 0.0) * gb(c64(1e-3, 0.0), &p, &cfg()).unwrap();
        let v2 = c64(1e-4, 0.0) * gb(c64(1e-4, 0.0), &p, &cfg()).unwrap();
        let extrap = (v2 * 10.0 - v1) / 9.0;
        assert!((extrap - c64(1.0 / (2.0 * PI), 0.0)).norm() < 1e-5);
    }

    #[test]
    fn sb_reflection_and_value() {
        let p = p();
        let v = sb(c64(0.5 * p.big_q, 0.0), &p, &cfg()).unwrap();
        assert!((v - c64(1.0, 0.0)).norm() < 1e-12);
        let z = c64(0.4, 0.3);
        let a = sb(z, &p, &cfg()).unwrap();
        let b = sb(c64(p.big_q, 0.0) - z, &p, &cfg()).unwrap();
        assert!((a * b - c64(1.0, 0.0)).norm() < 1e-8);
        let m = sb(c64(0.5 * p.big_q, 1.1), &p, &cfg()).unwrap().norm();
        assert!((m - 1.0).abs() < 1e-10);
    }

    #[test]
    fn g_small_values() {
        let p = p();
        let v = g_small(c64(2.5, 0.0), &p, &cfg()).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-10);
        let v1 = g_small(c64(1.0, 0.0), &p, &cfg()).unwrap();
        let expect = p.zeta.conj() * (c64(0.0, PI * p.big_q * p.big_q / 8.0)).exp();
        assert!((v1 - expect).norm() < 1e-11);
        assert!(matches!(
            g_small(c64(-1.0, 0.0), &p, &cfg()),
            Err(Error::BranchCut)
        ));
    }

    #[test]
    fn asymptotic_constants() {
        let p = p();
        let z = c64(0.5 * p.big_q, 8.0);
        let v = gb(z, &p, &cfg()).unwrap();
        assert!((v - p.zeta.conj()).norm() < 1e-4);
        let z = c64(0.5 * p.big_q, -8.0);
        let v = gb(z, &p, &cfg()).unwrap();
        let pref = (c64(0.0, PI) * z * (z - p.big_q)).exp();
        assert!((v - p.zeta * pref).norm() / pref.norm() < 1e-4);
    }

    #[test]
    fn tail_bound_branches() {
        let p = p();
        assert_eq!(gb_ratio_tail_bound(c64(0.3, 0.0), c64(0.3, 0.0), 5.0, &p), 4.0);
        let b = gb_ratio_tail_bound(c64(0.2, 0.0), c64(0.5, 0.0), -3.0, &p);
        assert!((b - 4.0 * (2.0 * PI * -3.0 * 0.3).exp()).abs() < 1e-12);
    }
}
