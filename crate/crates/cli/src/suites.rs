//! Named verification suites and the threaded deterministic runner.
//!
//! Every suite turns into a list of [`IdentityReport`]s; the runner fans
//! suites out across worker threads (capped by `QDILOG_THREADS`) and
//! merges results in a fixed order, so identical config + seed give a
//! byte-identical report.

use qdilog::identities::{
    barnes_first_oracle, barnes_second_oracle, check_barnes_first, check_barnes_second,
    check_four_five, check_fourier_gb, check_six_nine, check_tau_beta, check_three_two,
    delta_limit_probe, qbinom, CheckConfig, IdentityReport, QuadDiag,
};
use qdilog::numerics::{mellin_transform, QuadConfig};
use qdilog::qalgebra::{
    coproduct_coassociative_on_generators, coproduct_respects_relations, determinant_grouplike,
    pairing_inductive_oracle, pairing_monomial, qfactorial_gb_consistency, reassociation_agrees,
    verify_minkowski_relations, AlgebraKind,
};
use qdilog::qdilog::{classical_limit_probe, g_small, gb, gb_with_err, sb};
use qdilog::representation::{
    apply_dual_generator, apply_generator, apply_regular_generator, casimir_apply,
    check_serre_relations, commutation_ratio_deviation, eval_phi, forward_transform,
    intertwiner_consistency, inverse_transform, phi_eigen_residual, plancherel_density,
    plancherel_density_via_sb, Generator, RegularSide, SpectralSamples,
};
use qdilog::wfun::{Poly, WFunction};
use qdilog::{c64, BParams, C64};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::VecDeque;
use std::f64::consts::PI;
use std::sync::Mutex;

pub struct SuiteContext {
    pub p: BParams,
    pub cfg: CheckConfig,
    pub seed: u64,
}

type SuiteFn = fn(&SuiteContext) -> Vec<IdentityReport>;

pub const SUITES: &[(&str, SuiteFn)] = &[
    ("gb-functional", suite_gb_functional),
    ("gb-reflection", suite_gb_reflection),
    ("gb-residue", suite_gb_residue),
    ("classical-limit", suite_classical_limit),
    ("fourier-gb", suite_fourier),
    ("qbinom", suite_qbinom),
    ("tau-beta", suite_tau_beta),
    ("four-five", suite_four_five),
    ("six-nine", suite_six_nine),
    ("three-two", suite_three_two),
    ("barnes", suite_barnes),
    ("delta-limit", suite_delta_limit),
    ("mellin", suite_mellin),
    ("serre", suite_serre),
    ("casimir", suite_casimir),
    ("eigenfunction", suite_eigenfunction),
    ("transform", suite_transform),
    ("regular", suite_regular),
    ("qalgebra", suite_qalgebra),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

fn report_scalar(name: &str, params: Vec<(&'static str, C64)>, residual: f64, tol: f64) -> IdentityReport {
    IdentityReport::new(
        name,
        params,
        c64(residual, 0.0),
        c64(0.0, 0.0),
        tol,
        QuadDiag {
            evaluations: 0,
            err_estimate: 0.0,
        },
    )
}

fn err_report(name: &str, e: &qdilog::Error) -> IdentityReport {
    let mut r = report_scalar(name, vec![], f64::INFINITY, 1.0);
    r.pass = false;
    r.name = format!("{name}!error[{e}]");
    r
}

fn random_strip_points(ctx: &SuiteContext, n: usize, salt: u64) -> Vec<C64> {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ salt);
    let q = ctx.p.big_q;
    let b = ctx.p.b;
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let re = rng.gen_range(0.1..(q - b - 0.1));
        let im = rng.gen_range(-1.5..1.5);
        let z = c64(re, im);
        if ctx.p.pole_distance(z) > 0.05 && ctx.p.pole_distance(z + b) > 0.05 {
            out.push(z);
        }
    }
    out
}

fn suite_gb_functional(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let quad = &ctx.cfg.quad;
    for (i, z) in random_strip_points(ctx, 24, 0x5e1f).into_iter().enumerate() {
        let r = (|| -> qdilog::Result<f64> {
            let g = gb(z, &ctx.p, quad)?;
            let gup = gb(z + ctx.p.b, &ctx.p, quad)?;
            let factor = c64(1.0, 0.0) - (c64(0.0, 2.0 * PI * ctx.p.b) * z).exp();
            Ok((gup - factor * g).norm() / g.norm())
        })();
        match r {
            Ok(res) => out.push(report_scalar(
                "gb-functional-b",
                vec![("z", z), ("index", c64(i as f64, 0.0))],
                res,
                1e-8,
            )),
            Err(e) => out.push(err_report("gb-functional-b", &e)),
        }
    }
    // 1/b-steps where the strip permits
    for (i, z) in random_strip_points(ctx, 8, 0xb1f).into_iter().enumerate() {
        let r = (|| -> qdilog::Result<f64> {
            let g = gb(z, &ctx.p, quad)?;
            let gup = gb(z + 1.0 / ctx.p.b, &ctx.p, quad)?;
            let factor = c64(1.0, 0.0) - (c64(0.0, 2.0 * PI / ctx.p.b) * z).exp();
            Ok((gup - factor * g).norm() / (factor * g).norm())
        })();
        match r {
            Ok(res) => out.push(report_scalar(
                "gb-functional-binv",
                vec![("z", z), ("index", c64(i as f64, 0.0))],
                res,
                1e-8,
            )),
            Err(e) => out.push(err_report("gb-functional-binv", &e)),
        }
    }
    out
}

fn suite_gb_reflection(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let quad = &ctx.cfg.quad;
    let p = &ctx.p;
    let q = p.big_q;
    for (i, z) in random_strip_points(ctx, 12, 0x7ef1).into_iter().enumerate() {
        let r = (|| -> qdilog::Result<(f64, f64, f64)> {
            let g = gb(z, p, quad)?;
            let gr = gb(c64(q, 0.0) - z, p, quad)?;
            let target = (c64(0.0, PI) * z * (z - q)).exp();
            let refl = (g * gr - target).norm() / target.norm();
            let gc = gb(c64(q, 0.0) - z.conj(), p, quad)?;
            let conj = (g.conj() * gc - c64(1.0, 0.0)).norm();
            // self-duality: evaluate with swapped parameter datum
            let swapped = gb(z, &p.swapped(), quad)?;
            let dual = (swapped - g).norm() / g.norm();
            Ok((refl, conj, dual))
        })();
        match r {
            Ok((refl, conj, dual)) => {
                out.push(report_scalar(
                    "gb-reflection",
                    vec![("z", z), ("index", c64(i as f64, 0.0))],
                    refl,
                    1e-8,
                ));
                out.push(report_scalar(
                    "gb-conjugation",
                    vec![("z", z), ("index", c64(i as f64, 0.0))],
                    conj,
                    1e-8,
                ));
                out.push(report_scalar(
                    "gb-self-duality",
                    vec![("z", z), ("index", c64(i as f64, 0.0))],
                    dual,
                    1e-10,
                ));
            }
            Err(e) => out.push(err_report("gb-reflection", &e)),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x0a17);
    for i in 0..8 {
        let x: f64 = rng.gen_range(-3.0..3.0);
        match gb(c64(0.5 * q, x), p, quad) {
            Ok(v) => out.push(report_scalar(
                "gb-unitarity",
                vec![("x", c64(x, 0.0)), ("index", c64(i as f64, 0.0))],
                (v.norm() - 1.0).abs(),
                1e-8,
            )),
            Err(e) => out.push(err_report("gb-unitarity", &e)),
        }
    }
    out
}

fn suite_gb_residue(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let p = &ctx.p;
    let quad = &ctx.cfg.quad;
    // x G_b(x) -> 1/(2 pi)
    let r = (|| -> qdilog::Result<f64> {
        let v1 = c64(1e-3, 0.0) * gb(c64(1e-3, 0.0), p, quad)?;
        let v2 = c64(1e-4, 0.0) * gb(c64(1e-4, 0.0), p, quad)?;
        let extrap = (v2 * 10.0 - v1) / 9.0;
        Ok((extrap - c64(0.5 / PI, 0.0)).norm())
    })();
    match r {
        Ok(res) => out.push(report_scalar("gb-residue-origin", vec![], res, 1e-5)),
        Err(e) => out.push(err_report("gb-residue-origin", &e)),
    }
    // residue_info(n, m) against numeric limits of (z - z0)/G_b(Q + z)
    for (n, m) in [(1u32, 0u32), (0, 1), (1, 1)] {
        let info = p.residue_info(n, m);
        let z0 = -info.location; // pole of 1/G_b(Q+z) at z = n b + m/b
        let r = (|| -> qdilog::Result<f64> {
            let probe = |d: f64| -> qdilog::Result<C64> {
                let z = z0 + c64(d, 0.0);
                Ok(c64(d, 0.0) / gb(c64(p.big_q, 0.0) + z, p, quad)?)
            };
            let v1 = probe(1e-3)?;
            let v2 = probe(1e-4)?;
            let extrap = (v2 * 10.0 - v1) / 9.0;
            Ok((extrap - info.residue).norm() / info.residue.norm())
        })();
        match r {
            Ok(res) => out.push(report_scalar(
                "gb-residue-lattice",
                vec![("n", c64(n as f64, 0.0)), ("m", c64(m as f64, 0.0))],
                res,
                1e-4,
            )),
            Err(e) => out.push(err_report("gb-residue-lattice", &e)),
        }
    }
    out
}

fn suite_classical_limit(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let ladder = [0.35, 0.25, 0.18];
    for (x, final_tol) in [(c64(1.3, 0.0), 1e-2), (c64(2.6, 0.4), 1e-1)] {
        match classical_limit_probe(x, &ladder, &ctx.cfg.quad) {
            Ok(rows) => {
                let decreasing = rows.windows(2).all(|w| w[1].deviation < w[0].deviation);
                let last = rows.last().unwrap().deviation;
                let mut rep = report_scalar(
                    "classical-limit",
                    vec![("x", x), ("final_deviation", c64(last, 0.0))],
                    last,
                    final_tol,
                );
                rep.pass = rep.pass && decreasing;
                out.push(rep);
            }
            Err(e) => out.push(err_report("classical-limit", &e)),
        }
    }
    out
}

fn suite_fourier(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for variant in 1..=4u8 {
        for r in [-1.0, 0.0, 0.5] {
            match check_fourier_gb(variant, r, &ctx.p, &ctx.cfg) {
                Ok(rep) => out.push(rep),
                Err(e) => out.push(err_report("fourier-gb", &e)),
            }
        }
    }
    out
}

fn suite_qbinom(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let p = &ctx.p;
    let quad = &ctx.cfg.quad;
    let t = c64(0.3, 0.45);
    let tau = c64(0.1, 0.2);
    let r = (|| -> qdilog::Result<f64> {
        let a = qbinom(t, tau, p, quad)?;
        let b = qbinom(t, t - tau, p, quad)?;
        Ok((a - b).norm() / a.norm())
    })();
    match r {
        Ok(res) => out.push(report_scalar("qbinom-symmetry", vec![("t", t), ("tau", tau)], res, 1e-9)),
        Err(e) => out.push(err_report("qbinom-symmetry", &e)),
    }
    let r = (|| -> qdilog::Result<f64> {
        let v = |tau: C64| -> qdilog::Result<C64> {
            Ok(-2.0 * PI * tau * qbinom(t, tau, p, quad)?)
        };
        let v1 = v(c64(0.0, 1e-3))?;
        let v2 = v(c64(0.0, 1e-4))?;
        let extrap = (v2 * 10.0 - v1) / 9.0;
        Ok((extrap - c64(1.0, 0.0)).norm())
    })();
    match r {
        Ok(res) => out.push(report_scalar("qbinom-residue-limit", vec![("t", t)], res, 1e-5)),
        Err(e) => out.push(err_report("qbinom-residue-limit", &e)),
    }
    // one quantum step: (t choose tau) at t = tau = ib reduces by the
    // shift equation to G_b(-ib)... both sides evaluated directly
    let r = (|| -> qdilog::Result<f64> {
        let t = c64(0.21, ctx.p.b);
        let tau = c64(0.07, ctx.p.b * 0.5);
        let direct = qbinom(t, tau, p, quad)?;
        // same value through the shift equation applied to G_b(tau - t)
        let shifted = gb(-tau, p, quad)?
            * (gb(tau - t + ctx.p.b, p, quad)?
                / (c64(1.0, 0.0) - (c64(0.0, 2.0 * PI * ctx.p.b) * (tau - t)).exp()))
            / gb(-t, p, quad)?;
        Ok((direct - shifted).norm() / direct.norm())
    })();
    match r {
        Ok(res) => out.push(report_scalar("qbinom-shift-step", vec![], res, 1e-8)),
        Err(e) => out.push(err_report("qbinom-shift-step", &e)),
    }
    out
}

fn grid5(q: f64, salt: u64, seed: u64, lo: f64, hi: f64, k: usize) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt);
    (0..5)
        .map(|_| (0..k).map(|_| q * rng.gen_range(lo..hi)).collect())
        .collect()
}

fn suite_tau_beta(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let q = ctx.p.big_q;
    let mut out = Vec::new();
    for pt in grid5(q, 0x7ab, ctx.seed, 0.15, 0.42, 2) {
        match check_tau_beta(c64(pt[0], 0.0), c64(pt[1], 0.0), &ctx.p, &ctx.cfg) {
            Ok(rep) => out.push(rep),
            Err(e) => out.push(err_report("tau-beta", &e)),
        }
    }
    // swap coherence on one pair
    match (
        check_tau_beta(c64(0.35 * q, 0.0), c64(0.22 * q, 0.0), &ctx.p, &ctx.cfg),
        check_tau_beta(c64(0.22 * q, 0.0), c64(0.35 * q, 0.0), &ctx.p, &ctx.cfg),
    ) {
        (Ok(a), Ok(b)) => out.push(report_scalar(
            "tau-beta-swap",
            vec![("alpha", c64(0.35 * q, 0.0)), ("beta", c64(0.22 * q, 0.0))],
            (a.lhs - b.lhs).norm() / b.lhs.norm(),
            2.0 * ctx.cfg.tol,
        )),
        (Err(e), _) | (_, Err(e)) => out.push(err_report("tau-beta-swap", &e)),
    }
    out
}

fn suite_four_five(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let q = ctx.p.big_q;
    let mut out = Vec::new();
    for pt in grid5(q, 0x45, ctx.seed, 0.12, 0.33, 3) {
        match check_four_five(c64(pt[0], 0.0), c64(pt[1], 0.0), c64(pt[2], 0.0), &ctx.p, &ctx.cfg) {
            Ok(rep) => out.push(rep),
            Err(e) => out.push(err_report("four-five", &e)),
        }
    }
    out
}

fn suite_six_nine(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let q = ctx.p.big_q;
    let mut out = Vec::new();
    for pt in grid5(q, 0x69, ctx.seed, 0.12, 0.3, 4) {
        match check_six_nine(
            c64(pt[0], 0.0),
            c64(pt[1], 0.0),
            c64(pt[2], 0.0),
            c64(pt[3], 0.0),
            &ctx.p,
            &ctx.cfg,
        ) {
            Ok(rep) => out.push(rep),
            Err(e) => out.push(err_report("six-nine", &e)),
        }
    }
    // continuity of the delta -> 0+ degeneration down to 0.02 Q
    let base = [0.25 * q, 0.2 * q, 0.22 * q];
    let mut values = Vec::new();
    for delta in [0.08 * q, 0.04 * q, 0.02 * q] {
        match check_six_nine(
            c64(base[0], 0.0),
            c64(base[1], 0.0),
            c64(base[2], 0.0),
            c64(delta, 0.0),
            &ctx.p,
            &ctx.cfg,
        ) {
            Ok(rep) => values.push((delta, rep.lhs, rep.rel_err)),
            Err(e) => {
                out.push(err_report("six-nine-degenerate", &e));
                return out;
            }
        }
    }
    let ok = values.iter().all(|v| v.2 < ctx.cfg.tol)
        && (values[2].1 - values[1].1).norm() < (values[1].1 - values[0].1).norm() * 4.0;
    out.push(report_scalar(
        "six-nine-degenerate",
        vec![("delta_last", c64(0.02 * q, 0.0))],
        if ok { 0.0 } else { 1.0 },
        0.5,
    ));
    out
}

fn suite_three_two(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let q = ctx.p.big_q;
    let mut out = Vec::new();
    // documented grid inside the straight-line window Re(a+b+c) < Q/2
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x32);
    for _ in 0..5 {
        let a = rng.gen_range(0.1..0.2) * q;
        let b = rng.gen_range(0.08..0.16) * q;
        let c = rng.gen_range(0.06..(0.46 - a / q - b / q).min(0.16)) * q;
        match check_three_two(c64(a, 0.0), c64(b, 0.0), c64(c, 0.0), &ctx.p, &ctx.cfg) {
            Ok(rep) => out.push(rep),
            Err(e) => out.push(err_report("three-two", &e)),
        }
    }
    // beta <-> gamma swap invariance
    match (
        check_three_two(c64(0.18 * q, 0.0), c64(0.12 * q, 0.0), c64(0.1 * q, 0.0), &ctx.p, &ctx.cfg),
        check_three_two(c64(0.18 * q, 0.0), c64(0.1 * q, 0.0), c64(0.12 * q, 0.0), &ctx.p, &ctx.cfg),
    ) {
        (Ok(a), Ok(b)) => out.push(report_scalar(
            "three-two-swap",
            vec![],
            (a.lhs - b.lhs).norm() / b.lhs.norm(),
            2.0 * ctx.cfg.tol,
        )),
        (Err(e), _) | (_, Err(e)) => out.push(err_report("three-two-swap", &e)),
    }
    out
}

fn suite_barnes(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    match barnes_first_oracle(c64(1.2, 0.0), c64(0.8, 0.0), c64(0.5, 0.0), &ctx.cfg) {
        Ok(rep) => out.push(rep),
        Err(e) => out.push(err_report("barnes-first-oracle", &e)),
    }
    match barnes_second_oracle(c64(0.9, 0.0), c64(0.7, 0.0), c64(0.6, 0.0), c64(0.4, 0.0), &ctx.cfg) {
        Ok(rep) => out.push(rep),
        Err(e) => out.push(err_report("barnes-second-oracle", &e)),
    }
    match check_barnes_first(c64(1.2, 0.0), c64(0.8, 0.0), c64(0.5, 0.0), &[0.35, 0.25], &ctx.cfg) {
        Ok(rows) => {
            let dec = rows[1].dev_product <= rows[0].dev_product + 1e-12
                && rows[1].dev_integral <= rows[0].dev_integral + 1e-12;
            let last = rows[1].dev_product.max(rows[1].dev_integral);
            let mut rep = report_scalar("barnes-first-scaled", vec![("b_last", c64(0.25, 0.0))], last, 5e-2);
            rep.pass = rep.pass && dec;
            out.push(rep);
        }
        Err(e) => out.push(err_report("barnes-first-scaled", &e)),
    }
    match check_barnes_second(
        c64(0.9, 0.0),
        c64(0.7, 0.0),
        c64(0.6, 0.0),
        c64(0.4, 0.0),
        &[0.35, 0.25],
        &ctx.cfg,
    ) {
        Ok(rows) => {
            let dec = rows[1].dev_product <= rows[0].dev_product + 1e-12
                && rows[1].dev_integral <= rows[0].dev_integral + 1e-12;
            let last = rows[1].dev_product.max(rows[1].dev_integral);
            let mut rep = report_scalar("barnes-second-scaled", vec![("b_last", c64(0.25, 0.0))], last, 5e-2);
            rep.pass = rep.pass && dec;
            out.push(rep);
        }
        Err(e) => out.push(err_report("barnes-second-scaled", &e)),
    }
    out
}

fn suite_delta_limit(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let eps = [0.08, 0.04, 0.02, 0.01, 0.005];
    let f = WFunction::gaussian(c64(1.0, 0.0), c64(0.0, 0.0)).unwrap();
    let g = WFunction::gaussian(c64(1.0, 0.0), c64(1.0, 0.0)).unwrap();
    for (label, fun, variant, target, tol) in [
        ("delta-v1-gauss", &f, 1u8, c64(1.0, 0.0), 1e-3),
        ("delta-v2-gauss", &f, 2, c64(1.0, 0.0), 1e-3),
        (
            "delta-v3-gauss-drift",
            &g,
            3,
            -ctx.p.q * ctx.p.q * g.eval(&[c64(0.0, 0.0)]) + g.eval(&[c64(0.0, -ctx.p.b)]),
            5e-3,
        ),
    ] {
        match delta_limit_probe(fun, &eps, variant, &ctx.p, &ctx.cfg) {
            Ok((_, extrap)) => out.push(report_scalar(
                label,
                vec![("target", target)],
                (extrap - target).norm(),
                tol,
            )),
            Err(e) => out.push(err_report(label, &e)),
        }
    }
    // odd function: value 0
    let odd = f.mul_poly(&Poly::monomial(1, 0, 1, c64(1.0, 0.0)));
    match delta_limit_probe(&odd, &eps, 1, &ctx.p, &ctx.cfg) {
        Ok((_, extrap)) => out.push(report_scalar("delta-v1-odd", vec![], extrap.norm(), 1e-3)),
        Err(e) => out.push(err_report("delta-v1-odd", &e)),
    }
    out
}

fn suite_mellin(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let quad = &ctx.cfg.quad;
    let expf = |x: f64| c64((-x).exp(), 0.0);
    match mellin_transform(expf, (0.0, f64::INFINITY), c64(2.0, 0.0), quad) {
        Ok(r) => out.push(report_scalar(
            "mellin-gamma2",
            vec![("s", c64(2.0, 0.0))],
            (r.value - c64(1.0, 0.0)).norm(),
            1e-10,
        )),
        Err(e) => out.push(err_report("mellin-gamma2", &e)),
    }
    // Parseval for e^{-x}: int_0^inf e^{-2x} = 1/2 vs (1/2pi) int |Gamma(1/2+it)|^2 dt
    let r = (|| -> qdilog::Result<f64> {
        let mut failure: Option<qdilog::Error> = None;
        let mut g = |t: qdilog::C64| -> qdilog::C64 {
            let s = c64(0.5, t.re);
            match mellin_transform(expf, (0.0, f64::INFINITY), s, quad) {
                Ok(v) => c64(v.value.norm_sqr(), 0.0),
                Err(e) => {
                    if failure.is_none() {
                        failure = Some(e);
                    }
                    c64(0.0, 0.0)
                }
            }
        };
        let contour = qdilog::numerics::IndentedContour::line(0.0, (-14.0, 14.0));
        let total = qdilog::numerics::integrate_contour(&mut g, &contour, quad)?;
        if let Some(e) = failure {
            return Err(e);
        }
        Ok((total.value.re / (2.0 * PI) - 0.5).abs())
    })();
    match r {
        Ok(res) => out.push(report_scalar("mellin-parseval", vec![], res, 1e-6)),
        Err(e) => out.push(err_report("mellin-parseval", &e)),
    }
    out
}

fn sample_points() -> Vec<f64> {
    vec![-1.5, -0.6, 0.0, 0.7, 1.4, 2.1]
}

fn test_functions() -> Vec<WFunction> {
    let f1 = WFunction::gaussian(c64(1.0, 0.0), c64(0.0, 0.0)).unwrap();
    let f2 = WFunction::gaussian(c64(0.7, 0.2), c64(0.3, -0.1)).unwrap();
    let f3 = WFunction::gaussian(c64(1.3, 0.0), c64(0.0, 0.5))
        .unwrap()
        .mul_poly(&Poly::monomial(1, 0, 2, c64(1.0, 0.0)))
        .add(&WFunction::gaussian(c64(1.3, 0.0), c64(0.0, 0.5)).unwrap().scale(c64(0.5, 0.0)));
    vec![f1, f2, f3]
}

fn suite_serre(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let pts = sample_points();
    for (fi, f) in test_functions().iter().enumerate() {
        for lambda in [0.4, 0.9] {
            match check_serre_relations(lambda, 0.3, f, &pts, &ctx.p, 1e-10) {
                Ok(mut rep) => {
                    rep.params.push(("f_index", c64(fi as f64, 0.0)));
                    out.push(rep);
                }
                Err(e) => out.push(err_report("serre-ef-commutator", &e)),
            }
            for (name, g1, g2, expect) in [
                ("serre-ke", Generator::K, Generator::E, ctx.p.q),
                ("serre-kf", Generator::K, Generator::F, ctx.p.q.inv()),
            ] {
                match commutation_ratio_deviation(g1, g2, expect, lambda, 0.3, f, &pts, &ctx.p) {
                    Ok(dev) => out.push(report_scalar(
                        name,
                        vec![("lambda", c64(lambda, 0.0)), ("f_index", c64(fi as f64, 0.0))],
                        dev,
                        1e-10,
                    )),
                    Err(e) => out.push(err_report(name, &e)),
                }
            }
        }
    }
    out
}

fn suite_casimir(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let pts = sample_points();
    let fs = test_functions();
    for (fi, f) in fs.iter().enumerate() {
        match casimir_apply(0.4, 0.0, f, &pts, &ctx.p) {
            Ok((_, var)) => out.push(report_scalar(
                "casimir-scalar-variance",
                vec![("f_index", c64(fi as f64, 0.0)), ("lambda", c64(0.4, 0.0))],
                var,
                1e-10,
            )),
            Err(e) => out.push(err_report("casimir-scalar-variance", &e)),
        }
    }
    let r = (|| -> qdilog::Result<(f64, f64)> {
        let f = &fs[0];
        let (m0, _) = casimir_apply(0.4, 0.0, f, &pts, &ctx.p)?;
        let (mt, _) = casimir_apply(0.4, 1.7, f, &pts, &ctx.p)?;
        let (mneg, _) = casimir_apply(-0.4, 0.0, f, &pts, &ctx.p)?;
        Ok(((m0 - mt).norm() / m0.norm(), (m0 - mneg).norm() / m0.norm()))
    })();
    match r {
        Ok((t_dev, even_dev)) => {
            out.push(report_scalar("casimir-t-independent", vec![], t_dev, 1e-10));
            out.push(report_scalar("casimir-lambda-even", vec![], even_dev, 1e-10));
        }
        Err(e) => out.push(err_report("casimir-invariance", &e)),
    }
    // intertwiner consistency probe for P_lambda ~ P_{-lambda}
    for s in [-0.8, 0.3, 1.1] {
        match intertwiner_consistency(0.45, s, &ctx.p, &ctx.cfg.quad) {
            Ok(dev) => out.push(report_scalar(
                "intertwiner-probe",
                vec![("s", c64(s, 0.0))],
                dev,
                1e-8,
            )),
            Err(e) => out.push(err_report("intertwiner-probe", &e)),
        }
    }
    out
}

fn suite_eigenfunction(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let quad = &ctx.cfg.quad;
    for lambda in [0.2, 0.5, 0.8, 1.2, 1.6] {
        let mut worst = 0.0f64;
        let mut failed = None;
        for k in 0..8 {
            let x = c64(-1.413 + 0.4 * k as f64, 0.0);
            match phi_eigen_residual(lambda, x, &ctx.p, quad) {
                Ok(r) => worst = worst.max(r),
                Err(e) => failed = Some(e),
            }
        }
        match failed {
            None => out.push(report_scalar(
                "phi-eigenvalue",
                vec![("lambda", c64(lambda, 0.0))],
                worst,
                1e-8,
            )),
            Some(e) => out.push(err_report("phi-eigenvalue", &e)),
        }
    }
    for k in 1..=10 {
        let lambda = 0.2 * k as f64;
        let r = (|| -> qdilog::Result<f64> {
            let a = plancherel_density(lambda, &ctx.p)?;
            let v = plancherel_density_via_sb(lambda, &ctx.p, quad)?;
            Ok((a - v).abs() / a.max(1.0))
        })();
        match r {
            Ok(res) => out.push(report_scalar(
                "plancherel-identity",
                vec![("lambda", c64(lambda, 0.0))],
                res,
                1e-8,
            )),
            Err(e) => out.push(err_report("plancherel-identity", &e)),
        }
    }
    out
}

/// Coarse transform checks for the CLI registry (the full-budget version
/// lives in the acceptance suite): intertwining on a small lambda grid
/// and a reduced-grid round trip.
fn suite_transform(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let p = &ctx.p;
    let quad = QuadConfig {
        abs_tol: 1e-7,
        rel_tol: 1e-7,
        ..Default::default()
    };
    let f = WFunction::gaussian(c64(1.0, 0.0), c64(0.2, 0.0)).unwrap();
    // intertwining: Phi(C f) = 2 cosh(2 pi b lambda) Phi(f)
    let cf = f
        .mul_exp(0, c64(2.0 * PI * p.b, 0.0))
        .add(&f.mul_exp(0, c64(-2.0 * PI * p.b, 0.0)))
        .add(&f.shift(0, c64(0.0, p.b)));
    let mut worst = 0.0f64;
    let mut failure = None;
    for lambda in [0.3, 0.7, 1.1] {
        match (
            forward_transform(&f, lambda, p, &quad),
            forward_transform(&cf, lambda, p, &quad),
        ) {
            (Ok(ff), Ok(fcf)) => {
                let eig = 2.0 * (2.0 * PI * p.b * lambda).cosh();
                worst = worst.max((fcf - eig * ff).norm() / (eig * ff.norm()).max(1e-12));
            }
            (Err(e), _) | (_, Err(e)) => failure = Some(e),
        }
    }
    match failure {
        None => out.push(report_scalar("transform-intertwining", vec![], worst, 1e-3)),
        Some(e) => out.push(err_report("transform-intertwining", &e)),
    }
    // reduced round trip on a coarse grid
    match round_trip_error(&f, p, &quad, 16, 2.8, 0.05) {
        Ok(err) => out.push(report_scalar("transform-round-trip", vec![], err, 1e-2)),
        Err(e) => out.push(err_report("transform-round-trip", &e)),
    }
    out
}

/// Relative L^2 error of `Phi^{-1}(Phi(f))` against `f` on a uniform
/// x-grid, with the spectral function sampled once and splined.
pub fn round_trip_error(
    f: &WFunction,
    p: &BParams,
    quad: &QuadConfig,
    nx: usize,
    lambda_max: f64,
    eps: f64,
) -> qdilog::Result<f64> {
    let nl = (lambda_max / 0.035).ceil() as usize;
    let step = lambda_max / nl as f64;
    let mut values = Vec::with_capacity(nl + 1);
    for k in 0..=nl {
        let lambda = (k as f64 * step).max(1e-9);
        values.push(forward_transform(f, lambda, p, quad)?);
    }
    let spline = SpectralSamples::from_values(0.0, step, values)?;
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..nx {
        let x = -2.0 + 4.0 * (i as f64 + 0.5) / nx as f64;
        let lo = inverse_transform(|l| spline.eval(l), lambda_max, x, eps, p, quad)?;
        let hi = inverse_transform(|l| spline.eval(l), lambda_max, x, eps / 2.0, p, quad)?;
        let rec = 2.0 * hi - lo;
        let truth = f.eval(&[c64(x, 0.0)]);
        num += (rec - truth).norm_sqr();
        den += truth.norm_sqr();
    }
    Ok((num / den).sqrt())
}

fn suite_regular(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let p = &ctx.p;
    let g2 = WFunction::gaussian_nd(&[c64(1.0, 0.0), c64(1.0, 0.0)], &[c64(0.0, 0.0), c64(0.0, 0.0)])
        .unwrap();
    let f = g2.tensor(&g2);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x4e9);
    let pts: Vec<[f64; 4]> = (0..10)
        .map(|_| {
            [
                rng.gen_range(-1.2..1.2),
                rng.gen_range(-1.2..1.2),
                rng.gen_range(-1.2..1.2),
                rng.gen_range(-1.2..1.2),
            ]
        })
        .collect();
    let eval4 = |w: &WFunction, pt: &[f64; 4]| {
        w.eval(&[c64(pt[0], 0.0), c64(pt[1], 0.0), c64(pt[2], 0.0), c64(pt[3], 0.0)])
    };
    for side in [RegularSide::Left, RegularSide::Right] {
        let name = match side {
            RegularSide::Left => "regular-left-ef",
            RegularSide::Right => "regular-right-ef",
        };
        let r = (|| -> qdilog::Result<f64> {
            let ef = apply_regular_generator(Generator::E, side, &apply_regular_generator(Generator::F, side, &f, p)?, p)?;
            let fe = apply_regular_generator(Generator::F, side, &apply_regular_generator(Generator::E, side, &f, p)?, p)?;
            let comm = ef.sub(&fe);
            let kvar = match side {
                RegularSide::Left => 0,
                RegularSide::Right => 3,
            };
            let sign = match side {
                RegularSide::Left => 1.0,
                RegularSide::Right => 1.0,
            };
            let rhs = f
                .mul_exp(kvar, c64(2.0 * PI * p.b * sign, 0.0))
                .sub(&f.mul_exp(kvar, c64(-2.0 * PI * p.b * sign, 0.0)))
                .scale((p.q - p.q.inv()).inv());
            let mut worst = 0.0f64;
            for pt in &pts {
                let fv = eval4(&f, pt).norm();
                worst = worst.max((eval4(&comm, pt) - eval4(&rhs, pt)).norm() / fv);
            }
            Ok(worst)
        })();
        match r {
            Ok(res) => out.push(report_scalar(name, vec![], res, 1e-10)),
            Err(e) => out.push(err_report(name, &e)),
        }
        // K E = q E K on each side
        let name2 = match side {
            RegularSide::Left => "regular-left-ke",
            RegularSide::Right => "regular-right-ke",
        };
        let r = (|| -> qdilog::Result<f64> {
            let ke = apply_regular_generator(Generator::K, side, &apply_regular_generator(Generator::E, side, &f, p)?, p)?;
            let ek = apply_regular_generator(Generator::E, side, &apply_regular_generator(Generator::K, side, &f, p)?, p)?;
            let mut worst = 0.0f64;
            for pt in &pts {
                let ratio = eval4(&ke, pt) / eval4(&ek, pt);
                worst = worst.max((ratio - p.q).norm());
            }
            Ok(worst)
        })();
        match r {
            Ok(res) => out.push(report_scalar(name2, vec![], res, 1e-10)),
            Err(e) => out.push(err_report(name2, &e)),
        }
    }
    // left and right actions commute
    for (name, gl, gr) in [
        ("regular-commute-el-fr", Generator::E, Generator::F),
        ("regular-commute-fl-er", Generator::F, Generator::E),
        ("regular-commute-fl-fr", Generator::F, Generator::F),
    ] {
        let r = (|| -> qdilog::Result<f64> {
            let a = apply_regular_generator(gl, RegularSide::Left, &apply_regular_generator(gr, RegularSide::Right, &f, p)?, p)?;
            let b = apply_regular_generator(gr, RegularSide::Right, &apply_regular_generator(gl, RegularSide::Left, &f, p)?, p)?;
            let mut worst = 0.0f64;
            for pt in &pts {
                let fv = eval4(&f, pt).norm();
                worst = worst.max((eval4(&a, pt) - eval4(&b, pt)).norm() / fv);
            }
            Ok(worst)
        })();
        match r {
            Ok(res) => out.push(report_scalar(name, vec![], res, 1e-10)),
            Err(e) => out.push(err_report(name, &e)),
        }
    }
    // dual generators on the principal series: K-tilde multiplication and
    // the cross-commutation probe
    let f1 = WFunction::gaussian(c64(1.0, 0.0), c64(0.0, 0.0)).unwrap();
    let r = (|| -> qdilog::Result<f64> {
        let a = apply_dual_generator(Generator::E, 0.4, 0.0, &apply_generator(Generator::F, 0.4, 0.0, &f1, p)?, p)?;
        let b = apply_generator(Generator::F, 0.4, 0.0, &apply_dual_generator(Generator::E, 0.4, 0.0, &f1, p)?, p)?;
        let mut worst = 0.0f64;
        for s in [-1.1, 0.4, 1.7] {
            let z = [c64(s, 0.0)];
            worst = worst.max((a.eval(&z) - b.eval(&z)).norm() / f1.eval(&z).norm());
        }
        Ok(worst)
    })();
    match r {
        Ok(res) => out.push(report_scalar("dual-cross-commutation", vec![], res, 1e-10)),
        Err(e) => out.push(err_report("dual-cross-commutation", &e)),
    }
    out
}

fn suite_qalgebra(ctx: &SuiteContext) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for (name, ok) in verify_minkowski_relations() {
        out.push(report_scalar(
            &format!("minkowski[{name}]"),
            vec![],
            if ok { 0.0 } else { 1.0 },
            0.5,
        ));
    }
    for (name, ok) in coproduct_respects_relations() {
        out.push(report_scalar(
            &format!("coproduct-relation[{name}]"),
            vec![],
            if ok { 0.0 } else { 1.0 },
            0.5,
        ));
    }
    out.push(report_scalar(
        "coproduct-coassociative",
        vec![],
        if coproduct_coassociative_on_generators() { 0.0 } else { 1.0 },
        0.5,
    ));
    out.push(report_scalar(
        "determinant-grouplike",
        vec![],
        if determinant_grouplike() { 0.0 } else { 1.0 },
        0.5,
    ));
    // rewriting confluence on seeded random words
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0xc0f);
    let mut all_ok = true;
    for _ in 0..60 {
        let kind = match rng.gen_range(0..3) {
            0 => AlgebraKind::Gauss,
            1 => AlgebraKind::UqGl2,
            _ => AlgebraKind::ZMatrix,
        };
        let word = |rng: &mut ChaCha8Rng| -> Vec<(usize, i32)> {
            let len = rng.gen_range(1..=3);
            (0..len)
                .map(|_| {
                    let g = rng.gen_range(0..kind.ngens());
                    let e = if kind.invertible()[g] {
                        [-2, -1, 1, 2][rng.gen_range(0..4)]
                    } else {
                        rng.gen_range(1..=2)
                    };
                    (g, e)
                })
                .collect()
        };
        let (w1, w2, w3) = (word(&mut rng), word(&mut rng), word(&mut rng));
        if !reassociation_agrees(kind, &w1, &w2, &w3) {
            all_ok = false;
        }
    }
    out.push(report_scalar(
        "rewriting-confluence",
        vec![],
        if all_ok { 0.0 } else { 1.0 },
        0.5,
    ));
    // pairing closed form against the inductive oracle
    let mut pairing_ok = true;
    for l in 0..=2i32 {
        for m in 0..=2u32 {
            for n in 0..=2u32 {
                for lp in 0..=1i32 {
                    let cap_l = n as i32 + lp + 1;
                    let closed = pairing_monomial(0, l, m, n, cap_l, m, n, lp);
                    match pairing_inductive_oracle(0, l, m, n, cap_l, m, n, lp) {
                        Ok(oracle) => {
                            if closed != oracle {
                                pairing_ok = false;
                            }
                        }
                        Err(_) => pairing_ok = false,
                    }
                }
            }
        }
    }
    out.push(report_scalar(
        "pairing-closed-vs-oracle",
        vec![],
        if pairing_ok { 0.0 } else { 1.0 },
        0.5,
    ));
    for n in 1..=3u32 {
        match qfactorial_gb_consistency(n, &ctx.p, &ctx.cfg.quad) {
            Ok(err) => out.push(report_scalar(
                "qfactorial-gb-substitution",
                vec![("n", c64(n as f64, 0.0))],
                err,
                1e-8,
            )),
            Err(e) => out.push(err_report("qfactorial-gb-substitution", &e)),
        }
    }
    out
}

/// Runs the selected suites across worker threads; deterministic merge.
pub fn run_suites(names: &[&str], ctx: &SuiteContext) -> Result<Vec<IdentityReport>, String> {
    let jobs: Vec<(usize, &str, SuiteFn)> = names
        .iter()
        .map(|n| {
            SUITES
                .iter()
                .position(|(s, _)| s == n)
                .map(|i| (i, SUITES[i].0, SUITES[i].1))
                .ok_or_else(|| format!("unknown suite '{n}'"))
        })
        .collect::<Result<_, _>>()?;
    let threads = std::env::var("QDILOG_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
        .min(jobs.len().max(1));
    let queue: Mutex<VecDeque<(usize, SuiteFn)>> =
        Mutex::new(jobs.iter().map(|&(_, _, f)| f).enumerate().collect());
    let results: Mutex<Vec<(usize, Vec<IdentityReport>)>> = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let job = queue.lock().unwrap().pop_front();
                let Some((idx, f)) = job else { break };
                let reports = f(ctx);
                results.lock().unwrap().push((idx, reports));
            });
        }
    });
    let mut results = results.into_inner().unwrap();
    results.sort_by_key(|(i, _)| *i);
    Ok(results.into_iter().flat_map(|(_, r)| r).collect())
}
