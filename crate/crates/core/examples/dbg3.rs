use qdilog::c64;
use qdilog::numerics::{gauss_tail_upper, integrate_contour, IndentedContour, QuadConfig};
use qdilog::qdilog::gb;
use qdilog::BParams;
use qdilog::C64;
use core::f64::consts::PI;

fn main() {
    let p = BParams::make(0.775).unwrap();
    let cfg = QuadConfig { abs_tol: 1e-12, rel_tol: 1e-12, max_subdivisions: 40000, ..Default::default() };
    // pure Fresnel: numeric int_7^16 e^{-i pi t^2} dt vs series tails
    let mut f = |t: C64| (c64(0.0, -PI) * t * t).exp();
    let num = integrate_contour(&mut f, &IndentedContour::line(0.0, (7.0, 16.0)), &cfg).unwrap();
    let tails = gauss_tail_upper(c64(0.0, -PI), c64(0.0, 0.0), c64(0.0, 0.0), c64(7.0, 0.0))
        - gauss_tail_upper(c64(0.0, -PI), c64(0.0, 0.0), c64(0.0, 0.0), c64(16.0, 0.0));
    println!("pure fresnel: num {:?} (err est {:.1e}, evals {})", num.value, num.err_estimate, num.evaluations);
    println!("tails diff:   {:?}", tails);
    println!("difference:   {:.3e}", (num.value - tails).norm());
    // with the G_b factor
    let mut g = |t: C64| {
        let gv = gb(c64(p.big_q, 0.0) + c64(0.0, 1.0) * t, &p, &cfg).unwrap();
        (c64(0.0, -PI) * t * t).exp() / gv
    };
    let num2 = integrate_contour(&mut g, &IndentedContour::line(0.0, (7.0, 16.0)), &cfg).unwrap();
    let model = p.zeta * tails;
    println!("with G_b: num {:?}", num2.value);
    println!("model:    {:?}", model);
    println!("difference: {:.3e}", (num2.value - model).norm());
    // direct check of the asymptotic constant
    for t in [5.0, 7.0, 10.0, 14.0] {
        let gv = gb(c64(p.big_q, t), &p, &cfg).unwrap();
        println!("t={t:5.1}: |G_b(Q+it) - zeta_bar| = {:.3e}", (gv - p.zeta.conj()).norm());
    }
}
