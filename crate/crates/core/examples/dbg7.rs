use qdilog::c64;
use qdilog::numerics::QuadConfig;
use qdilog::representation::{forward_transform, inverse_transform, SpectralSamples};
use qdilog::wfun::WFunction;
use qdilog::BParams;

fn round_trip(p: &BParams, quad: &QuadConfig, nx: usize, lmax: f64, lstep: f64, eps: f64) -> f64 {
    let f = WFunction::gaussian(c64(1.0, 0.0), c64(0.2, 0.0)).unwrap();
    let nl = (lmax / lstep).ceil() as usize;
    let step = lmax / nl as f64;
    let values: Vec<_> = (0..=nl)
        .map(|k| forward_transform(&f, (k as f64 * step).max(1e-9), p, quad).unwrap())
        .collect();
    let spline = SpectralSamples::from_values(0.0, step, values).unwrap();
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..nx {
        let x = -2.0 + 4.0 * (i as f64 + 0.5) / nx as f64;
        let lo = inverse_transform(|l| spline.eval(l), lmax, x, eps, p, quad).unwrap();
        let hi = inverse_transform(|l| spline.eval(l), lmax, x, eps / 2.0, p, quad).unwrap();
        let rec = 2.0 * hi - lo;
        let truth = f.eval(&[c64(x, 0.0)]);
        num += (rec - truth).norm_sqr();
        den += truth.norm_sqr();
    }
    (num / den).sqrt()
}

fn main() {
    let p = BParams::make(0.775).unwrap();
    let q7 = QuadConfig { abs_tol: 1e-7, rel_tol: 1e-7, ..Default::default() };
    let q9 = QuadConfig { abs_tol: 1e-9, rel_tol: 1e-9, ..Default::default() };
    let t0 = std::time::Instant::now();
    println!("coarse: {:.4e} ({:?})", round_trip(&p, &q7, 8, 2.8, 0.035, 0.05), t0.elapsed());
    let t0 = std::time::Instant::now();
    println!("eps/2:  {:.4e} ({:?})", round_trip(&p, &q7, 8, 2.8, 0.035, 0.025), t0.elapsed());
    let t0 = std::time::Instant::now();
    println!("deep:   {:.4e} ({:?})", round_trip(&p, &q9, 8, 3.4, 0.02, 0.02), t0.elapsed());
}
