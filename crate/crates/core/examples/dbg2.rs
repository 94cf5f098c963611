use qdilog::c64;
use qdilog::numerics::{gauss_tail_upper, integrate_contour, IndentSide, Indentation, IndentedContour, QuadConfig};
use qdilog::qdilog::gb;
use qdilog::BParams;
use qdilog::C64;

fn variant1(p: &BParams, x_fresnel: f64, t_exp: f64, radius: f64, tol: f64) -> C64 {
    let q_cap = p.big_q;
    let i = c64(0.0, 1.0);
    let cfg = QuadConfig { abs_tol: tol, rel_tol: tol, max_subdivisions: 20000, ..Default::default() };
    let mut f = |t: C64| {
        let g = gb(c64(q_cap, 0.0) + i * t, p, &cfg).unwrap();
        (c64(0.0, -core::f64::consts::PI) * t * t).exp() / g
    };
    let contour = IndentedContour {
        height: 0.0,
        indentations: vec![Indentation { center: c64(0.0, 0.0), radius, side: IndentSide::Above }],
        window: (-t_exp, x_fresnel),
    };
    let res = integrate_contour(&mut f, &contour, &cfg).unwrap();
    let tail = p.zeta * gauss_tail_upper(c64(0.0, -core::f64::consts::PI), c64(0.0, 0.0), c64(0.0, 0.0), c64(x_fresnel, 0.0));
    res.value + tail
}

fn main() {
    let p = BParams::make(0.775).unwrap();
    let rhs = p.zeta.conj() / gb(c64(0.5 * p.big_q, 0.0), &p, &QuadConfig::default()).unwrap();
    println!("rhs = {rhs:?}");
    for (x, t, r, tol) in [
        (7.0, 3.8, 0.0969, 1e-9),
        (10.0, 3.8, 0.0969, 1e-9),
        (14.0, 3.8, 0.0969, 1e-9),
        (7.0, 6.0, 0.0969, 1e-9),
        (7.0, 3.8, 0.05, 1e-9),
        (7.0, 3.8, 0.0969, 1e-11),
        (10.0, 6.0, 0.0969, 1e-12),
        (16.0, 8.0, 0.0969, 1e-12),
    ] {
        let v = variant1(&p, x, t, r, tol);
        println!("X={x:5.1} T={t:4.1} r={r:.4} tol={tol:.0e}: lhs={v:?} rel={:.3e}", (v - rhs).norm() / rhs.norm());
    }
}
