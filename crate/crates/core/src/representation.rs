//! The principal series of `U_q(gl(2,R))` acting on the dense Gaussian
//! class, its Casimir spectral theory (eigenfunctions, Plancherel
//! density, eigenfunction transform), and the left/right regular
//! generator formulas.
//!
//! Shift convention, fixed once for the whole module:
//! `e^{2 pi b p_s} f(s) = f(s - ib)`, so `e^{-2 pi b p_s} f(s) = f(s + ib)`.

use crate::error::{Error, Result};
use crate::identities::{IdentityReport, QuadDiag};
use crate::numerics::{integrate_contour, IndentedContour, QuadConfig};
use crate::params::BParams;
use crate::qdilog::sb;
use crate::wfun::WFunction;
use crate::{c64, C64};
use alloc::vec::Vec;

use core::f64::consts::PI;

/// Generators of `U_q(gl(2,R))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    E,
    F,
    K,
    K0,
}

/// Which regular action a generator belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularSide {
    Left,
    Right,
}

fn coupling(p: &BParams) -> C64 {
    // i / (q - q^{-1}) = 1 / (2 sin(pi b^2)), positive real
    c64(0.0, 1.0) / (p.q - p.q.inv())
}

fn q_half(p: &BParams) -> C64 {
    C64::from_polar(1.0, 0.5 * PI * p.b * p.b)
}

/// Principal series action on a single-variable class function:
/// `K0 = e^{pi b t}`, `K = e^{-pi b s}`,
/// `E = (i/(q-q^-1)) (q^{1/2} e^{pi b (s-lambda)} + q^{-1/2} e^{-pi b (s-lambda)}) * [s -> s+ib]`,
/// `F = (i/(q-q^-1)) (q^{-1/2} e^{pi b (s+lambda)} + q^{1/2} e^{-pi b (s+lambda)}) * [s -> s-ib]`.
pub fn apply_generator(
    g: Generator,
    lambda: f64,
    t: f64,
    f: &WFunction,
    p: &BParams,
) -> Result<WFunction> {
    if f.nvars() != 1 {
        return Err(Error::Domain("principal series acts on one variable"));
    }
    let b = p.b;
    let c = coupling(p);
    let qh = q_half(p);
    Ok(match g {
        Generator::K0 => f.scale(c64((PI * b * t).exp(), 0.0)),
        Generator::K => f.mul_exp(0, c64(-PI * b, 0.0)),
        Generator::E => {
            let shifted = f.shift(0, c64(0.0, b));
            let plus = shifted
                .mul_exp(0, c64(PI * b, 0.0))
                .scale(c * qh * (-PI * b * lambda).exp());
            let minus = shifted
                .mul_exp(0, c64(-PI * b, 0.0))
                .scale(c * qh.conj() * (PI * b * lambda).exp());
            plus.add(&minus)
        }
        Generator::F => {
            let shifted = f.shift(0, c64(0.0, -b));
            let plus = shifted
                .mul_exp(0, c64(PI * b, 0.0))
                .scale(c * qh.conj() * (PI * b * lambda).exp());
            let minus = shifted
                .mul_exp(0, c64(-PI * b, 0.0))
                .scale(c * qh * (-PI * b * lambda).exp());
            plus.add(&minus)
        }
    })
}

/// The modular-dual generators: `b` replaced by `1/b` (`q` by `q_tilde`),
/// acting on the same class with shifts `s -> s -+ i/b`.
pub fn apply_dual_generator(
    g: Generator,
    lambda: f64,
    t: f64,
    f: &WFunction,
    p: &BParams,
) -> Result<WFunction> {
    if f.nvars() != 1 {
        return Err(Error::Domain("principal series acts on one variable"));
    }
    let bi = 1.0 / p.b;
    let c = c64(0.0, 1.0) / (p.q_tilde - p.q_tilde.inv());
    let qh = C64::from_polar(1.0, 0.5 * PI * bi * bi);
    Ok(match g {
        Generator::K0 => f.scale(c64((PI * bi * t).exp(), 0.0)),
        Generator::K => f.mul_exp(0, c64(-PI * bi, 0.0)),
        Generator::E => {
            let shifted = f.shift(0, c64(0.0, bi));
            let plus = shifted
                .mul_exp(0, c64(PI * bi, 0.0))
                .scale(c * qh * (-PI * bi * lambda).exp());
            let minus = shifted
                .mul_exp(0, c64(-PI * bi, 0.0))
                .scale(c * qh.conj() * (PI * bi * lambda).exp());
            plus.add(&minus)
        }
        Generator::F => {
            let shifted = f.shift(0, c64(0.0, -bi));
            let plus = shifted
                .mul_exp(0, c64(PI * bi, 0.0))
                .scale(c * qh.conj() * (PI * bi * lambda).exp());
            let minus = shifted
                .mul_exp(0, c64(-PI * bi, 0.0))
                .scale(c * qh * (-PI * bi * lambda).exp());
            plus.add(&minus)
        }
    })
}

/// Max over `sample_points` of `|(EF - FE - (K^2 - K^-2)/(q - q^-1)) f| / |f|`.
pub fn check_serre_relations(
    lambda: f64,
    t: f64,
    f: &WFunction,
    sample_points: &[f64],
    p: &BParams,
    tol: f64,
) -> Result<IdentityReport> {
    let ef = apply_generator(Generator::E, lambda, t, &apply_generator(Generator::F, lambda, t, f, p)?, p)?;
    let fe = apply_generator(Generator::F, lambda, t, &apply_generator(Generator::E, lambda, t, f, p)?, p)?;
    let comm = ef.sub(&fe);
    let k2 = f.mul_exp(0, c64(-2.0 * PI * p.b, 0.0));
    let km2 = f.mul_exp(0, c64(2.0 * PI * p.b, 0.0));
    let rhs = k2.sub(&km2).scale((p.q - p.q.inv()).inv());
    let mut worst = c64(0.0, 0.0);
    let mut worst_rel = 0.0f64;
    for &s in sample_points {
        let z = [c64(s, 0.0)];
        let fv = f.eval(&z);
        if fv.norm() == 0.0 {
            return Err(Error::Domain("sample point where f vanishes"));
        }
        let r = (comm.eval(&z) - rhs.eval(&z)) / fv.norm();
        if r.norm() > worst_rel {
            worst_rel = r.norm();
            worst = r;
        }
    }
    Ok(IdentityReport::new(
        "serre-ef-commutator",
        alloc::vec![("lambda", c64(lambda, 0.0)), ("t", c64(t, 0.0))],
        worst,
        c64(0.0, 0.0),
        tol,
        QuadDiag {
            evaluations: sample_points.len() as u64,
            err_estimate: 0.0,
        },
    ))
}

/// Pointwise ratio `(g1 g2 f) / (g2 g1 f)` maximal deviation from `expect`.
pub fn commutation_ratio_deviation(
    g1: Generator,
    g2: Generator,
    expect: C64,
    lambda: f64,
    t: f64,
    f: &WFunction,
    sample_points: &[f64],
    p: &BParams,
) -> Result<f64> {
    let a = apply_generator(g1, lambda, t, &apply_generator(g2, lambda, t, f, p)?, p)?;
    let b = apply_generator(g2, lambda, t, &apply_generator(g1, lambda, t, f, p)?, p)?;
    let mut worst = 0.0f64;
    for &s in sample_points {
        let z = [c64(s, 0.0)];
        let ratio = a.eval(&z) / b.eval(&z);
        worst = worst.max((ratio - expect).norm());
    }
    Ok(worst)
}

/// Applies the Casimir `C = FE + (q K^2 + q^{-1} K^{-2} - 2)/(q - q^{-1})^2`
/// and returns the mean and variance of `(C f)(s) / f(s)` over the
/// sample points. On a principal-series representation the variance is
/// pure roundoff.
pub fn casimir_apply(
    lambda: f64,
    t: f64,
    f: &WFunction,
    sample_points: &[f64],
    p: &BParams,
) -> Result<(C64, f64)> {
    let fe = apply_generator(Generator::F, lambda, t, &apply_generator(Generator::E, lambda, t, f, p)?, p)?;
    let denom = (p.q - p.q.inv()) * (p.q - p.q.inv());
    let k_part = f
        .mul_exp(0, c64(-2.0 * PI * p.b, 0.0))
        .scale(p.q / denom)
        .add(&f.mul_exp(0, c64(2.0 * PI * p.b, 0.0)).scale(p.q.inv() / denom))
        .add(&f.scale(-2.0 / denom));
    let cf = fe.add(&k_part);
    let mut ratios = Vec::with_capacity(sample_points.len());
    for &s in sample_points {
        let z = [c64(s, 0.0)];
        let fv = f.eval(&z);
        if fv.norm() == 0.0 {
            return Err(Error::Domain("sample point where f vanishes"));
        }
        ratios.push(cf.eval(&z) / fv);
    }
    let n = ratios.len() as f64;
    let mean = ratios.iter().sum::<C64>() / n;
    let var = ratios.iter().map(|r| (r - mean).norm_sqr()).sum::<f64>() / n;
    Ok((mean, var))
}

/// Casimir eigenfunction `Phi_lambda(x) = S_b(-ix + i lambda) S_b(-ix - i lambda)`.
pub fn eval_phi(lambda: f64, x: C64, p: &BParams, cfg: &QuadConfig) -> Result<C64> {
    let i = c64(0.0, 1.0);
    Ok(sb(-i * x + i * lambda, p, cfg)? * sb(-i * x - i * lambda, p, cfg)?)
}

/// Residual of the difference-operator eigenvalue equation
/// `Phi(x + ib) + (e^{2 pi b x} + e^{-2 pi b x}) Phi(x) = 2 cosh(2 pi b lambda) Phi(x)`,
/// relative to `|Phi(x)|`.
pub fn phi_eigen_residual(lambda: f64, x: C64, p: &BParams, cfg: &QuadConfig) -> Result<f64> {
    let phi = eval_phi(lambda, x, p, cfg)?;
    let phi_up = eval_phi(lambda, x + c64(0.0, p.b), p, cfg)?;
    let pot = (2.0 * PI * p.b * x).exp() + (-2.0 * PI * p.b * x).exp();
    let eig = 2.0 * (2.0 * PI * p.b * lambda).cosh();
    Ok((phi_up + pot * phi - eig * phi).norm() / phi.norm())
}

/// Plancherel density `|S_b(Q + 2 i lambda)|^2` in closed form,
/// `4 sinh(2 pi b lambda) sinh(2 pi lambda / b)` (the two shift
/// equations peel `Q = b + 1/b` off the argument, each producing a
/// `2 sinh` of twice the half-angle).
pub fn plancherel_density(lambda: f64, p: &BParams) -> Result<f64> {
    if lambda < 0.0 {
        return Err(Error::Domain("Plancherel density needs lambda >= 0"));
    }
    Ok(4.0 * (2.0 * PI * p.b * lambda).sinh() * (2.0 * PI * lambda / p.b).sinh())
}

/// Verification path: `|S_b(Q + 2 i lambda)|^2` by direct evaluation.
pub fn plancherel_density_via_sb(lambda: f64, p: &BParams, cfg: &QuadConfig) -> Result<f64> {
    Ok(sb(c64(p.big_q, 2.0 * lambda), p, cfg)?.norm_sqr())
}

/// Forward eigenfunction transform
/// `F(lambda) = int_{R - i0} f(x) / (S_b(Q - ix - i lambda) S_b(Q - ix + i lambda)) dx`,
/// the `R - i0` prescription realised as a straight line at height
/// `-min(b, 1/b)/8` (the kernel's real poles at `x = +-lambda` sit above it).
pub fn forward_transform(f: &WFunction, lambda: f64, p: &BParams, cfg: &QuadConfig) -> Result<C64> {
    if f.nvars() != 1 {
        return Err(Error::Domain("transform input must be single-variable"));
    }
    let i = c64(0.0, 1.0);
    let height = -p.b.min(1.0 / p.b) / 8.0;
    let half = f.decay_window(cfg.abs_tol) + lambda.abs() + 3.0;
    let q_cap = c64(p.big_q, 0.0);
    let mut failure: Option<Error> = None;
    let mut g = |x: C64| {
        let den = sb(q_cap - i * x - i * lambda, p, cfg)
            .and_then(|a| Ok(a * sb(q_cap - i * x + i * lambda, p, cfg)?));
        match den {
            Ok(d) => f.eval(&[x]) / d,
            Err(e) => {
                if failure.is_none() {
                    failure = Some(e);
                }
                c64(0.0, 0.0)
            }
        }
    };
    let res = integrate_contour(&mut g, &IndentedContour::line(height, (-half, half)), cfg)?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(res.value)
}

/// Inverse transform at one point,
/// `f(x) = int_0^inf Phi_lambda(x + i eps) e^{-2 pi x eps} F(lambda) dmu(lambda)`
/// with `dmu = |S_b(Q + 2 i lambda)|^2 dlambda`, truncated where the
/// measure-weighted integrand is negligible.
pub fn inverse_transform<S: Fn(f64) -> C64>(
    spectral: S,
    lambda_max: f64,
    x: f64,
    eps: f64,
    p: &BParams,
    cfg: &QuadConfig,
) -> Result<C64> {
    if !(eps > 0.0) {
        return Err(Error::Domain("inverse transform needs eps > 0"));
    }
    let damp = c64((-2.0 * PI * x * eps).exp(), 0.0);
    let mut failure: Option<Error> = None;
    let mut g = |l: C64| {
        let lam = l.re;
        if lam <= 0.0 {
            return c64(0.0, 0.0);
        }
        let mu = 4.0 * (2.0 * PI * p.b * lam).sinh() * (2.0 * PI * lam / p.b).sinh();
        match eval_phi(lam, c64(x, eps), p, cfg) {
            Ok(phi) => phi * damp * spectral(lam) * mu,
            Err(e) => {
                if failure.is_none() {
                    failure = Some(e);
                }
                c64(0.0, 0.0)
            }
        }
    };
    let res = integrate_contour(&mut g, &IndentedContour::line(0.0, (0.0, lambda_max)), cfg)?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(res.value)
}

/// Spectral-side samples on a uniform lambda grid with natural cubic
/// spline evaluation (the spectral function is smooth; the roughness of
/// the inverse integrand lives in the cheap eigenfunction factor).
#[derive(Debug, Clone)]
pub struct SpectralSamples {
    pub lambda0: f64,
    pub step: f64,
    pub values: Vec<C64>,
    second: Vec<C64>,
}

impl SpectralSamples {
    pub fn from_values(lambda0: f64, step: f64, values: Vec<C64>) -> Result<Self> {
        if values.len() < 4 || !(step > 0.0) {
            return Err(Error::Domain("spectral grid too small"));
        }
        // natural cubic spline second derivatives (Thomas algorithm)
        let n = values.len();
        let mut u = alloc::vec![c64(0.0, 0.0); n];
        let mut second = alloc::vec![c64(0.0, 0.0); n];
        for i in 1..n - 1 {
            let sig = 0.5;
            let den = sig * second[i - 1] + 2.0;
            second[i] = (sig - 1.0) / den;
            let d = (values[i + 1] - 2.0 * values[i] + values[i - 1]) * (3.0 / (step * step));
            u[i] = (d - sig * u[i - 1]) / den;
        }
        for i in (1..n - 1).rev() {
            let s = second[i];
            second[i] = s * second[i + 1] + u[i];
        }
        second[0] = c64(0.0, 0.0);
        second[n - 1] = c64(0.0, 0.0);
        Ok(SpectralSamples {
            lambda0,
            step,
            values,
            second,
        })
    }

    pub fn lambda_max(&self) -> f64 {
        self.lambda0 + self.step * (self.values.len() - 1) as f64
    }

    pub fn eval(&self, l: f64) -> C64 {
        let n = self.values.len();
        let mut t = (l - self.lambda0) / self.step;
        if t <= 0.0 {
            t = 0.0;
        }
        if t >= (n - 1) as f64 {
            t = (n - 1) as f64 - 1e-9;
        }
        let i = t.floor() as usize;
        let a = (i + 1) as f64 - t;
        let b = t - i as f64;
        a * self.values[i]
            + b * self.values[i + 1]
            + ((a * a * a - a) * self.second[i] + (b * b * b - b) * self.second[i + 1])
                * (self.step * self.step / 6.0)
    }
}

/// Regular-representation generator action on the four-variable class
/// (variable order `s1, t1, s2, t2`), in the pre-diagonalisation form
/// the construction produces: every term is an exponential multiplier
/// times an imaginary shift, the left side acting in `(s1, t1)`, the
/// right side in `(t2, t1)`, both multiplying by `e^{+- pi b s2 / 2}`.
pub fn apply_regular_generator(
    g: Generator,
    side: RegularSide,
    f: &WFunction,
    p: &BParams,
) -> Result<WFunction> {
    if f.nvars() != 4 {
        return Err(Error::Domain(
            "regular action needs the four-variable class (s1, t1, s2, t2)",
        ));
    }
    let b = p.b;
    let pb = PI * b;
    let c = coupling(p);
    let qh = q_half(p);
    let q = p.q;
    let ib = c64(0.0, b);
    // shared t1 block: e^{2 pi b t1} + e^{-2 pi b t1} + q e^{2 pi b t1} [t1 -> t1 + ib]
    let t1_block = |g0: &WFunction| -> WFunction {
        let a = g0.mul_exp(1, c64(2.0 * pb, 0.0));
        let bterm = g0.mul_exp(1, c64(-2.0 * pb, 0.0));
        let cterm = g0.shift(1, ib).mul_exp(1, c64(2.0 * pb, 0.0)).scale(q);
        a.add(&bterm).add(&cterm)
    };
    Ok(match (side, g) {
        (RegularSide::Left, Generator::K0) => f.mul_exp(2, c64(-0.5 * pb, 0.0)),
        (RegularSide::Left, Generator::K) => f.mul_exp(0, c64(pb, 0.0)),
        (RegularSide::Left, Generator::E) => f
            .shift(0, -ib)
            .mul_exp(0, c64(pb, 0.0))
            .mul_exp(2, c64(0.5 * pb, 0.0))
            .scale(c * qh.conj()),
        (RegularSide::Left, Generator::F) => {
            let base = f.shift(0, ib);
            let t1 = base.mul_exp(0, c64(pb, 0.0)).scale(qh);
            let t2 = base
                .mul_exp(0, c64(-3.0 * pb, 0.0))
                .scale(qh.conj() * q.inv());
            let t3 = t1_block(&base)
                .mul_exp(0, c64(-pb, 0.0))
                .scale(qh.conj());
            t1.add(&t2).add(&t3).mul_exp(2, c64(-0.5 * pb, 0.0)).scale(c)
        }
        (RegularSide::Right, Generator::K0) => f.mul_exp(2, c64(-0.5 * pb, 0.0)),
        (RegularSide::Right, Generator::K) => f.mul_exp(3, c64(pb, 0.0)),
        (RegularSide::Right, Generator::E) => {
            let base = f.shift(3, -ib);
            let t1 = base.mul_exp(3, c64(-pb, 0.0)).scale(qh);
            let t2 = base
                .mul_exp(3, c64(3.0 * pb, 0.0))
                .scale(qh.conj() * q.inv());
            let t3 = t1_block(&base)
                .mul_exp(3, c64(pb, 0.0))
                .scale(qh.conj());
            t1.add(&t2).add(&t3).mul_exp(2, c64(0.5 * pb, 0.0)).scale(c)
        }
        (RegularSide::Right, Generator::F) => f
            .shift(3, ib)
            .mul_exp(3, c64(-pb, 0.0))
            .mul_exp(2, c64(-0.5 * pb, 0.0))
            .scale(c * qh.conj()),
    })
}

/// The unitary multiplier intertwining `P_lambda` with `P_{-lambda}`.
///
/// The bare ratio `G_b(Q/2 + i lambda - ix)/G_b(Q/2 - i lambda - ix)`
/// switches the lambda-sign of the E/F coefficients only up to the
/// constant `e^{-+2 pi b lambda}`; the plane-wave factor `e^{-2 pi i
/// lambda x}` absorbs it (its imaginary shift produces exactly that
/// constant), giving
/// `T(x) = e^{-2 pi i lambda x} G_b(Q/2 + i lambda - ix)/G_b(Q/2 - i lambda - ix)`
/// with `pi_{-lambda}(g) T = T pi_{lambda}(g)` for all four generators.
/// Checked pointwise as the scalar identity
/// `coeff_g(s; -lambda) T(s + shift) = T(s) coeff_g(s; lambda)`.
pub fn intertwiner_consistency(
    lambda: f64,
    s: f64,
    p: &BParams,
    cfg: &QuadConfig,
) -> Result<f64> {
    let i = c64(0.0, 1.0);
    let t_mult = |x: C64| -> Result<C64> {
        let top = crate::qdilog::gb(c64(0.5 * p.big_q, 0.0) + i * lambda - i * x, p, cfg)?;
        let bot = crate::qdilog::gb(c64(0.5 * p.big_q, 0.0) - i * lambda - i * x, p, cfg)?;
        Ok((-2.0 * PI * lambda * i * x).exp() * top / bot)
    };
    let c = coupling(p);
    let qh = q_half(p);
    let e_coeff = |s: C64, lam: f64| {
        c * (qh * ((PI * p.b) * (s - lam)).exp() + qh.conj() * (-(PI * p.b) * (s - lam)).exp())
    };
    let f_coeff = |s: C64, lam: f64| {
        c * (qh.conj() * ((PI * p.b) * (s + lam)).exp() + qh * (-(PI * p.b) * (s + lam)).exp())
    };
    let s = c64(s, 0.0);
    let ib = c64(0.0, p.b);
    let mut worst = 0.0f64;
    // E: shift +ib
    let lhs = e_coeff(s, -lambda) * t_mult(s + ib)?;
    let rhs = t_mult(s)? * e_coeff(s, lambda);
    worst = worst.max((lhs - rhs).norm() / rhs.norm());
    // F: shift -ib
    let lhs = f_coeff(s, -lambda) * t_mult(s - ib)?;
    let rhs = t_mult(s)? * f_coeff(s, lambda);
    worst = worst.max((lhs - rhs).norm() / rhs.norm());
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> BParams {
        BParams::make(0.775).unwrap()
    }

    fn test_f() -> WFunction {
        WFunction::gaussian(c64(1.0, 0.0), c64(0.0, 0.0)).unwrap()
    }

    #[test]
    fn k_action_shifts_beta() {
        let p = p();
        let f = test_f();
        let kf = apply_generator(Generator::K, 0.4, 0.0, &f, &p).unwrap();
        for &s in &[-1.0, 0.4, 2.0] {
            let z = [c64(s, 0.0)];
            let expect = (-PI * p.b * s).exp();
            let ratio = kf.eval(&z) / f.eval(&z);
            assert!((ratio - c64(expect, 0.0)).norm() < 1e-13 * expect.max(1.0));
        }
    }

    #[test]
    fn ke_equals_q_ek() {
        let p = p();
        let f = test_f();
        let dev = commutation_ratio_deviation(
            Generator::K,
            Generator::E,
            p.q,
            0.4,
            0.0,
            &f,
            &[-1.0, 0.3, 2.0],
            &p,
        )
        .unwrap();
        assert!(dev < 1e-12, "dev = {dev}");
        let dev = commutation_ratio_deviation(
            Generator::K,
            Generator::F,
            p.q.inv(),
            0.4,
            0.0,
            &f,
            &[-1.0, 0.3, 2.0],
            &p,
        )
        .unwrap();
        assert!(dev < 1e-12, "dev = {dev}");
    }

    #[test]
    fn k0_commutes_and_scales() {
        let p = p();
        let f = test_f();
        let a = apply_generator(
            Generator::K0,
            0.4,
            0.7,
            &apply_generator(Generator::E, 0.4, 0.7, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        let b = apply_generator(
            Generator::E,
            0.4,
            0.7,
            &apply_generator(Generator::K0, 0.4, 0.7, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        let z = [c64(0.3, 0.0)];
        assert!((a.eval(&z) - b.eval(&z)).norm() < 1e-12 * a.eval(&z).norm());
    }

    #[test]
    fn serre_relation_roundoff() {
        let p = p();
        let f = test_f();
        let rep =
            check_serre_relations(0.4, 0.0, &f, &[-1.5, 0.0, 0.7, 2.1], &p, 1e-10).unwrap();
        assert!(rep.pass, "residual = {}", rep.abs_err);
        let rep = check_serre_relations(0.0, 0.3, &f, &[-1.5, 0.0, 0.7, 2.1], &p, 1e-10).unwrap();
        assert!(rep.pass);
    }

    #[test]
    fn casimir_scalar() {
        let p = p();
        let f = test_f();
        let pts: Vec<f64> = (0..10).map(|k| -2.0 + 0.45 * k as f64).collect();
        let (mean, var) = casimir_apply(0.4, 0.0, &f, &pts, &p).unwrap();
        assert!(var < 1e-10, "variance = {var}");
        // expected scalar (2 cosh(2 pi b lambda) + 2) / (2 sin(pi b^2))^2
        let s = (2.0 * (2.0 * PI * p.b * 0.4).cosh() + 2.0) / (2.0 * (PI * p.b * p.b).sin()).powi(2);
        assert!((mean - c64(s, 0.0)).norm() < 1e-9 * s);
        // t-independence and lambda-evenness
        let (mean_t, _) = casimir_apply(0.4, 1.3, &f, &pts, &p).unwrap();
        assert!((mean - mean_t).norm() < 1e-10 * mean.norm());
        let (mean_neg, _) = casimir_apply(-0.4, 0.0, &f, &pts, &p).unwrap();
        assert!((mean - mean_neg).norm() < 1e-10 * mean.norm());
    }

    #[test]
    fn phi_symmetric_and_eigen() {
        let p = p();
        let cfg = QuadConfig::default();
        let a = eval_phi(0.5, c64(0.3, 0.0), &p, &cfg).unwrap();
        let b = eval_phi(-0.5, c64(0.3, 0.0), &p, &cfg).unwrap();
        assert!((a - b).norm() < 1e-12 * a.norm());
        let r = phi_eigen_residual(0.5, c64(0.3, 0.0), &p, &cfg).unwrap();
        assert!(r < 1e-8, "residual = {r}");
    }

    #[test]
    fn plancherel_closed_form() {
        let p = p();
        let cfg = QuadConfig::default();
        assert_eq!(plancherel_density(0.0, &p).unwrap(), 0.0);
        let a = plancherel_density(0.7, &p).unwrap();
        let b = plancherel_density_via_sb(0.7, &p, &cfg).unwrap();
        assert!((a - b).abs() < 1e-8 * a.max(1.0));
        let mut prev = 0.0;
        for k in 1..=10 {
            let v = plancherel_density(0.3 * k as f64, &p).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn dual_generators_commute_with_k() {
        let p = p();
        let f = test_f();
        let kt = apply_dual_generator(Generator::K, 0.4, 0.0, &f, &p).unwrap();
        let k = apply_generator(Generator::K, 0.4, 0.0, &kt, &p).unwrap();
        let k2 = apply_dual_generator(
            Generator::K,
            0.4,
            0.0,
            &apply_generator(Generator::K, 0.4, 0.0, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        let z = [c64(0.7, 0.0)];
        assert!((k.eval(&z) - k2.eval(&z)).norm() < 1e-13 * k.eval(&z).norm());
    }

    #[test]
    fn dual_e_commutes_with_f() {
        // [E_tilde, F] = 0 on the class: the +-i/b and -+ib shifts pick
        // up opposite e^{i pi} factors that cancel
        let p = p();
        let f = test_f();
        let a = apply_dual_generator(
            Generator::E,
            0.4,
            0.0,
            &apply_generator(Generator::F, 0.4, 0.0, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        let b = apply_generator(
            Generator::F,
            0.4,
            0.0,
            &apply_dual_generator(Generator::E, 0.4, 0.0, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        for &s in &[-1.2, 0.5, 1.9] {
            let z = [c64(s, 0.0)];
            let fv = f.eval(&z).norm();
            assert!((a.eval(&z) - b.eval(&z)).norm() < 1e-10 * fv);
        }
    }

    fn test_f4() -> WFunction {
        let f = WFunction::gaussian_nd(
            &[c64(1.0, 0.0), c64(1.0, 0.0)],
            &[c64(0.0, 0.0), c64(0.0, 0.0)],
        )
        .unwrap();
        let g = WFunction::gaussian_nd(
            &[c64(1.0, 0.0), c64(1.0, 0.0)],
            &[c64(0.0, 0.0), c64(0.0, 0.0)],
        )
        .unwrap();
        f.tensor(&g)
    }

    fn eval4(w: &WFunction, pt: [f64; 4]) -> C64 {
        w.eval(&[
            c64(pt[0], 0.0),
            c64(pt[1], 0.0),
            c64(pt[2], 0.0),
            c64(pt[3], 0.0),
        ])
    }

    #[test]
    fn left_regular_relations() {
        let p = p();
        let f = test_f4();
        let pts = [
            [0.2, -0.4, 0.8, -0.1],
            [-0.7, 0.3, 0.1, 0.5],
            [1.1, 0.9, -0.6, 0.2],
        ];
        // K0 K = K K0
        let a = apply_regular_generator(
            Generator::K0,
            RegularSide::Left,
            &apply_regular_generator(Generator::K, RegularSide::Left, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        let b = apply_regular_generator(
            Generator::K,
            RegularSide::Left,
            &apply_regular_generator(Generator::K0, RegularSide::Left, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        for pt in pts {
            assert!((eval4(&a, pt) - eval4(&b, pt)).norm() < 1e-13);
        }
        // K E = q E K
        let ke = apply_regular_generator(
            Generator::K,
            RegularSide::Left,
            &apply_regular_generator(Generator::E, RegularSide::Left, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        let ek = apply_regular_generator(
            Generator::E,
            RegularSide::Left,
            &apply_regular_generator(Generator::K, RegularSide::Left, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        for pt in pts {
            let r = eval4(&ke, pt) / eval4(&ek, pt);
            assert!((r - p.q).norm() < 1e-12);
        }
        // [E, F] = (K^2 - K^-2)/(q - q^-1)
        let ef = apply_regular_generator(
            Generator::E,
            RegularSide::Left,
            &apply_regular_generator(Generator::F, RegularSide::Left, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        let fe = apply_regular_generator(
            Generator::F,
            RegularSide::Left,
            &apply_regular_generator(Generator::E, RegularSide::Left, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        let comm = ef.sub(&fe);
        let rhs = f
            .mul_exp(0, c64(2.0 * PI * p.b, 0.0))
            .sub(&f.mul_exp(0, c64(-2.0 * PI * p.b, 0.0)))
            .scale((p.q - p.q.inv()).inv());
        for pt in pts {
            let fv = eval4(&f, pt).norm();
            assert!(
                (eval4(&comm, pt) - eval4(&rhs, pt)).norm() < 1e-10 * fv,
                "left [E,F] mismatch at {pt:?}"
            );
        }
    }

    #[test]
    fn right_regular_relations_and_left_right_commute() {
        let p = p();
        let f = test_f4();
        let pts = [
            [0.2, -0.4, 0.8, -0.1],
            [-0.7, 0.3, 0.1, 0.5],
            [1.1, 0.9, -0.6, 0.2],
        ];
        // right-side [E, F] = (K^2 - K^-2)/(q - q^-1) with K = e^{pi b t2}
        let ef = apply_regular_generator(
            Generator::E,
            RegularSide::Right,
            &apply_regular_generator(Generator::F, RegularSide::Right, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        let fe = apply_regular_generator(
            Generator::F,
            RegularSide::Right,
            &apply_regular_generator(Generator::E, RegularSide::Right, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        let comm = ef.sub(&fe);
        let rhs = f
            .mul_exp(3, c64(2.0 * PI * p.b, 0.0))
            .sub(&f.mul_exp(3, c64(-2.0 * PI * p.b, 0.0)))
            .scale((p.q - p.q.inv()).inv());
        for pt in pts {
            let fv = eval4(&f, pt).norm();
            assert!(
                (eval4(&comm, pt) - eval4(&rhs, pt)).norm() < 1e-10 * fv,
                "right [E,F] mismatch at {pt:?}"
            );
        }
        // [E_left, F_right] = 0
        let a = apply_regular_generator(
            Generator::E,
            RegularSide::Left,
            &apply_regular_generator(Generator::F, RegularSide::Right, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        let b = apply_regular_generator(
            Generator::F,
            RegularSide::Right,
            &apply_regular_generator(Generator::E, RegularSide::Left, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        for pt in pts {
            let fv = eval4(&f, pt).norm();
            assert!((eval4(&a, pt) - eval4(&b, pt)).norm() < 1e-10 * fv);
        }
        // [F_left, E_right] = 0: both touch t1 through the same block
        let a = apply_regular_generator(
            Generator::F,
            RegularSide::Left,
            &apply_regular_generator(Generator::E, RegularSide::Right, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        let b = apply_regular_generator(
            Generator::E,
            RegularSide::Right,
            &apply_regular_generator(Generator::F, RegularSide::Left, &f, &p).unwrap(),
            &p,
        )
        .unwrap();
        for pt in pts {
            let fv = eval4(&f, pt).norm();
            assert!((eval4(&a, pt) - eval4(&b, pt)).norm() < 1e-10 * fv);
        }
    }
}
