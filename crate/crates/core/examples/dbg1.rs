use qdilog::c64;
use qdilog::identities::{check_fourier_gb, qbinom, CheckConfig};
use qdilog::numerics::{gauss_tail_upper, QuadConfig};
use qdilog::qalgebra::{pairing_inductive_oracle, pairing_monomial, qfactorial_gb_consistency};
use qdilog::BParams;

fn main() {
    let p = BParams::make(0.775).unwrap();
    let cfg = CheckConfig {
        quad: QuadConfig {
            abs_tol: 1e-9,
            rel_tol: 1e-9,
            ..Default::default()
        },
        tol: 1e-6,
    };
    match check_fourier_gb(1, 0.0, &p, &cfg) {
        Ok(rep) => println!("fourier1: lhs={:?} rhs={:?} rel={}", rep.lhs, rep.rhs, rep.rel_err),
        Err(e) => println!("fourier1 err: {e}"),
    }
    match check_fourier_gb(2, 0.0, &p, &cfg) {
        Ok(rep) => println!("fourier2: lhs={:?} rhs={:?} rel={}", rep.lhs, rep.rhs, rep.rel_err),
        Err(e) => println!("fourier2 err: {e}"),
    }
    let a2 = c64(0.0, -core::f64::consts::PI);
    let a1 = c64(0.0, 2.0 * core::f64::consts::PI * 0.3);
    let t1 = gauss_tail_upper(a2, a1, c64(0.0, 0.0), c64(8.0, 0.0));
    let t2 = gauss_tail_upper(a2, a1, c64(0.0, 0.0), c64(9.5, 0.0));
    println!("tails: {t1:?} {t2:?}");
    let t = c64(0.3, 0.45);
    let v1 = qbinom(t, c64(0.0, 1e-3), &p, &cfg.quad).unwrap();
    let v2 = qbinom(t, c64(0.0, 1e-4), &p, &cfg.quad).unwrap();
    println!("qbinom near zero: {v1:?} {v2:?} extrap {:?}", (v2 * 10.0 - v1) / 9.0);
    let v = pairing_monomial(0, 0, 2, 0, 0, 2, 0, 0);
    match pairing_inductive_oracle(0, 0, 2, 0, 0, 2, 0, 0) {
        Ok(o) => {
            println!("closed: {}", v.render());
            println!("oracle: {}", o.render());
        }
        Err(e) => println!("oracle err: {e}"),
    }
    for n in 1..=3u32 {
        match qfactorial_gb_consistency(n, &p, &QuadConfig::default()) {
            Ok(e) => println!("qfact n={n}: err {e:.3e}"),
            Err(e) => println!("qfact n={n}: {e}"),
        }
    }
    let a = qdilog::representation::plancherel_density(0.7, &p).unwrap();
    let b = qdilog::representation::plancherel_density_via_sb(0.7, &p, &QuadConfig::default()).unwrap();
    println!("plancherel: closed {a} via sb {b} diff {}", (a - b).abs());
}
