//! The b-hypergeometric function `F_b` and the scalar kernel of the
//! fundamental matrix coefficient of the positive quantum group.

use crate::error::{Error, Result};
use crate::identities::qbinom;
use crate::numerics::QuadConfig;
use crate::params::BParams;
use crate::qdilog::gb;
use crate::{c64, C64};

use core::f64::consts::PI;

/// Arguments of `F_b(alpha, beta, gamma; z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FbArgs {
    pub alpha: C64,
    pub beta: C64,
    pub gamma: C64,
    /// `z` off `[0, inf)` is required so that `(-z)` avoids the cut of
    /// the principal power.
    pub z: C64,
}

/// The common `G_b` core shared by `F_b` and the 4-5 relation:
/// `G_b(alpha + i tau) G_b(beta + i tau) G_b(-i tau) / G_b(gamma + i tau)`.
pub fn hyper_kernel_core(
    alpha: C64,
    beta: C64,
    gamma: C64,
    tau: C64,
    p: &BParams,
    cfg: &QuadConfig,
) -> Result<C64> {
    let i = c64(0.0, 1.0);
    Ok(gb(alpha + i * tau, p, cfg)? * gb(beta + i * tau, p, cfg)? * gb(-i * tau, p, cfg)?
        / gb(gamma + i * tau, p, cfg)?)
}

/// Full `F_b` integrand, `(-z)^{i tau / b} e^{i pi tau^2}` times the core.
pub fn fb_integrand(args: &FbArgs, tau: C64, p: &BParams, cfg: &QuadConfig) -> Result<C64> {
    let minus_z = -args.z;
    if minus_z.im == 0.0 && minus_z.re <= 0.0 {
        return Err(Error::BranchCut);
    }
    let power = (c64(0.0, 1.0 / p.b) * tau * minus_z.ln()).exp();
    let gauss = (c64(0.0, PI) * tau * tau).exp();
    Ok(power * gauss * hyper_kernel_core(args.alpha, args.beta, args.gamma, tau, p, cfg)?)
}

/// `F_b(alpha, beta, gamma; z) = G_b(gamma)/(G_b(alpha) G_b(beta))
///   int_C (-z)^{i tau / b} e^{i pi tau^2} G_b(a+it)G_b(b+it)G_b(-it)/G_b(c+it) dt`
/// along a line separating the ascending poles of the numerator from the
/// descending string through `tau = 0`.
pub fn eval_fb(args: &FbArgs, p: &BParams, cfg: &QuadConfig) -> Result<C64> {
    Ok(eval_fb_diag(args, p, cfg)?.0)
}

/// As [`eval_fb`], also returning the quadrature diagnostics of the
/// contour integral.
pub fn eval_fb_diag(
    args: &FbArgs,
    p: &BParams,
    cfg: &QuadConfig,
) -> Result<(C64, crate::identities::QuadDiag)> {
    let minus_z = -args.z;
    if minus_z.im == 0.0 && minus_z.re <= 0.0 {
        return Err(Error::BranchCut);
    }
    let asc = args.alpha.re.min(args.beta.re);
    if !(asc > 0.0) {
        return Err(Error::PinchedContour);
    }
    let h = 0.5 * asc;
    let q_cap = p.big_q;
    let arg_mz = minus_z.im.atan2(minus_z.re);
    // modulus decay rates of the integrand on the line
    let rate_right = PI * q_cap + arg_mz / p.b;
    let rate_left = PI * (q_cap + 2.0 * (args.gamma.re - args.alpha.re - args.beta.re)) - arg_mz / p.b;
    if rate_right <= 0.0 || rate_left <= 0.0 {
        return Err(Error::ConvergenceViolation(
            "F_b integrand does not decay on a horizontal line for these arguments",
        ));
    }
    let integrand = |tau: C64| fb_integrand(args, tau, p, cfg);
    let (value, diag) = crate::identities::integrate_identity_line(integrand, h, rate_left, rate_right, cfg)?;
    let pref = gb(args.gamma, p, cfg)? / (gb(args.alpha, p, cfg)? * gb(args.beta, p, cfg)?);
    Ok((pref * value, diag))
}

/// Row/column labels of the fundamental-corepresentation kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TKernelArgs {
    /// Casimir spectral label; the weight sits on the unitarity line
    /// `l = -Q/2 + i lambda`.
    pub lambda: f64,
    /// Determinant character.
    pub t: f64,
    /// Row label.
    pub s: f64,
    /// Column label.
    pub alpha: f64,
}

/// Exponents of the operator monomial attached to the kernel, in the
/// order `(A, B, B-hat, A-hat)`: `i/b (t-s)`, `i/b (s+tau)`,
/// `i/b (alpha+tau)`, `i/b (t-tau)`. The monomial itself is metadata;
/// only the scalar factor is evaluated.
pub fn t_kernel_exponents(args: &TKernelArgs, tau: C64, p: &BParams) -> [C64; 4] {
    let i_over_b = c64(0.0, 1.0 / p.b);
    [
        i_over_b * (args.t - args.s),
        i_over_b * (args.s + tau),
        i_over_b * (args.alpha + tau),
        i_over_b * (args.t - tau),
    ]
}

/// Scalar factor of the matrix-coefficient integrand in the expanded
/// `G_b`-ratio form.
pub fn eval_t_kernel(args: &TKernelArgs, tau: C64, p: &BParams, cfg: &QuadConfig) -> Result<C64> {
    let i = c64(0.0, 1.0);
    let half_q = 0.5 * p.big_q;
    let lam = args.lambda;
    let s = args.s;
    let a = args.alpha;
    let g1 = gb(-i * tau - i * a, p, cfg)? * gb(c64(half_q, 0.0) + i * tau - i * lam, p, cfg)?
        / gb(c64(half_q, 0.0) - i * a - i * lam, p, cfg)?;
    let g2 = gb(-i * tau - i * s, p, cfg)? * gb(c64(half_q, 0.0) + i * s - i * lam, p, cfg)?
        / gb(c64(half_q, 0.0) - i * tau - i * lam, p, cfg)?;
    let phase = (c64(0.0, PI * (args.t - lam)) * (s + a + 2.0 * tau)).exp()
        * ((PI * p.big_q) * (s + tau)).exp();
    Ok(g1 * g2 * phase)
}

/// The same kernel through the q-binomial grouping
/// `(l + i alpha choose i tau + i alpha)_b (l + i tau choose i s + i tau)_b`
/// times the phases; equal to [`eval_t_kernel`] pointwise.
pub fn eval_t_kernel_binomial(
    args: &TKernelArgs,
    tau: C64,
    p: &BParams,
    cfg: &QuadConfig,
) -> Result<C64> {
    let i = c64(0.0, 1.0);
    let l = c64(-0.5 * p.big_q, args.lambda);
    let b1 = qbinom(l + i * args.alpha, i * tau + i * args.alpha, p, cfg)?;
    let b2 = qbinom(l + i * tau, c64(0.0, args.s) + i * tau, p, cfg)?;
    let phase = (c64(0.0, PI * (args.t - args.lambda)) * (args.s + args.alpha + 2.0 * tau)).exp()
        * ((PI * p.big_q) * (args.s + tau)).exp();
    Ok(b1 * b2 * phase)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> BParams {
        BParams::make(0.775).unwrap()
    }

    fn cfg() -> QuadConfig {
        QuadConfig {
            abs_tol: 1e-9,
            rel_tol: 1e-9,
            ..Default::default()
        }
    }

    #[test]
    fn fb_symmetric_in_first_two() {
        let p = p();
        let q = p.big_q;
        let a = FbArgs {
            alpha: c64(0.3 * q, 0.0),
            beta: c64(0.25 * q, 0.0),
            gamma: c64(0.7 * q, 0.0),
            z: c64(-0.5, 0.0),
        };
        let b = FbArgs {
            alpha: a.beta,
            beta: a.alpha,
            ..a
        };
        let va = eval_fb(&a, &p, &cfg()).unwrap();
        let vb = eval_fb(&b, &p, &cfg()).unwrap();
        assert!((va - vb).norm() < 1e-9 * va.norm());
    }

    #[test]
    fn fb_branch_cut() {
        let p = p();
        let a = FbArgs {
            alpha: c64(0.4, 0.0),
            beta: c64(0.4, 0.0),
            gamma: c64(1.2, 0.0),
            z: c64(0.5, 0.0),
        };
        assert!(matches!(eval_fb(&a, &p, &cfg()), Err(Error::BranchCut)));
    }

    #[test]
    fn z_ladder_converges() {
        let p = p();
        let q = p.big_q;
        let mk = |z: f64| FbArgs {
            alpha: c64(0.3 * q, 0.0),
            beta: c64(0.25 * q, 0.0),
            gamma: c64(0.7 * q, 0.0),
            z: c64(z, 0.0),
        };
        let v2 = eval_fb(&mk(-1e-2), &p, &cfg()).unwrap();
        let v3 = eval_fb(&mk(-1e-3), &p, &cfg()).unwrap();
        let v4 = eval_fb(&mk(-1e-4), &p, &cfg()).unwrap();
        assert!((v3 - v4).norm() < (v2 - v3).norm());
        // the empirical normalisation at z -> 0- stays finite
        assert!(v4.norm() < 1e3 && v4.norm() > 1e-6);
    }

    #[test]
    fn kernel_groupings_agree() {
        let p = p();
        let args = TKernelArgs {
            lambda: 0.0,
            t: 0.0,
            s: 0.0,
            alpha: 0.0,
        };
        let tau = c64(0.0, 0.1);
        let a = eval_t_kernel(&args, tau, &p, &cfg()).unwrap();
        let b = eval_t_kernel_binomial(&args, tau, &p, &cfg()).unwrap();
        assert!((a - b).norm() < 1e-9 * a.norm());
        assert!(a.is_finite());
        let args = TKernelArgs {
            lambda: 0.35,
            t: 0.6,
            s: 0.2,
            alpha: -0.4,
        };
        let tau = c64(0.13, 0.21);
        let a = eval_t_kernel(&args, tau, &p, &cfg()).unwrap();
        let b = eval_t_kernel_binomial(&args, tau, &p, &cfg()).unwrap();
        assert!((a - b).norm() < 1e-10 * a.norm());
    }

    #[test]
    fn kernel_phase_drops_at_t_equals_lambda() {
        let p = p();
        let args = TKernelArgs {
            lambda: 0.4,
            t: 0.4,
            s: 0.3,
            alpha: 0.1,
        };
        let tau = c64(0.05, 0.12);
        let with = eval_t_kernel(&args, tau, &p, &cfg()).unwrap();
        // recompute with the phase factor removed by hand
        let i = c64(0.0, 1.0);
        let half_q = 0.5 * p.big_q;
        let g1 = gb(-i * tau - i * args.alpha, &p, &cfg()).unwrap()
            * gb(c64(half_q, 0.0) + i * tau - i * args.lambda, &p, &cfg()).unwrap()
            / gb(c64(half_q, 0.0) - i * args.alpha - i * args.lambda, &p, &cfg()).unwrap();
        let g2 = gb(-i * tau - i * args.s, &p, &cfg()).unwrap()
            * gb(c64(half_q, 0.0) + i * args.s - i * args.lambda, &p, &cfg()).unwrap()
            / gb(c64(half_q, 0.0) - i * tau - i * args.lambda, &p, &cfg()).unwrap();
        let bare = g1 * g2 * ((PI * p.big_q) * (args.s + tau)).exp();
        assert!((with - bare).norm() < 1e-12 * bare.norm());
    }

    #[test]
    fn exponent_labels() {
        let p = p();
        let args = TKernelArgs {
            lambda: 0.4,
            t: 0.6,
            s: 0.2,
            alpha: -0.1,
        };
        let tau = c64(0.3, 0.0);
        let e = t_kernel_exponents(&args, tau, &p);
        let i_over_b = c64(0.0, 1.0 / p.b);
        assert_eq!(e[0], i_over_b * (args.t - args.s));
        assert_eq!(e[1], i_over_b * (args.s + tau));
        assert_eq!(e[2], i_over_b * (args.alpha + tau));
        assert_eq!(e[3], i_over_b * (args.t - tau));
    }
}
