use qdilog::c64;
use qdilog::identities::{delta_limit_probe, CheckConfig};
use qdilog::wfun::WFunction;
use qdilog::BParams;

fn main() {
    let p = BParams::make(0.775).unwrap();
    let cfg = CheckConfig::default();
    let f = WFunction::gaussian(c64(1.0, 0.0), c64(0.0, 0.0)).unwrap();
    for variant in [1u8, 2, 3] {
        let target = match variant {
            1 | 2 => c64(1.0, 0.0),
            _ => -p.q * p.q * f.eval(&[c64(0.0, 0.0)]) + f.eval(&[c64(0.0, -p.b)]),
        };
        println!("variant {variant}, target {target:?}");
        let eps = [0.08, 0.04, 0.02, 0.01, 0.005];
        let (rows, extrap) = delta_limit_probe(&f, &eps, variant, &p, &cfg).unwrap();
        for (e, v) in &rows {
            println!("  eps={e:7.4}: {v:?} (dev {:.3e})", (v - target).norm());
        }
        println!("  extrap: {extrap:?} dev {:.3e}", (extrap - target).norm());
    }
}
