use qdilog::c64;
use qdilog::identities::{delta_limit_probe, CheckConfig};
use qdilog::numerics::QuadConfig;
use qdilog::qalgebra::poly::{normal_order, AlgebraKind, NCPoly};
use qdilog::qalgebra::{pairing_inductive_oracle, pairing_monomial, reassociation_agrees};
use qdilog::qdilog::gb;
use qdilog::wfun::WFunction;
use qdilog::BParams;
use std::f64::consts::PI;

fn main() {
    let p = BParams::make(0.775).unwrap();
    let cfg = CheckConfig::default();
    // delta variant 1 epsilon scan
    let f = WFunction::gaussian(c64(1.0, 0.0), c64(0.0, 0.0)).unwrap();
    let eps = [0.2, 0.1, 0.05, 0.025, 0.0125];
    let (rows, extrap) = delta_limit_probe(&f, &eps, 1, &p, &cfg).unwrap();
    for (e, v) in &rows {
        println!("v1 eps={e:7.4}: {v:?}  (dev from 1: {:.4e})", (v - c64(1.0,0.0)).norm());
    }
    println!("v1 extrap: {extrap:?}");
    let (rows, extrap) = delta_limit_probe(&f, &eps, 3, &p, &cfg).unwrap();
    let target = -p.q * p.q * f.eval(&[c64(0.0, 0.0)]) + f.eval(&[c64(0.0, -p.b)]);
    for (e, v) in &rows {
        println!("v3 eps={e:7.4}: {v:?} (dev: {:.4e})", (v - target).norm());
    }
    println!("v3 extrap: {extrap:?} target {target:?}");

    // pairing grid mismatches
    for l in 0..=2i32 {
        for m in 0..=2u32 {
            for n in 0..=2u32 {
                for lp in 0..=1i32 {
                    let cap_l = n as i32 + lp + 1;
                    let closed = pairing_monomial(0, l, m, n, cap_l, m, n, lp);
                    let oracle = pairing_inductive_oracle(0, l, m, n, cap_l, m, n, lp).unwrap();
                    if closed != oracle {
                        println!("MISMATCH l={l} m={m} n={n} L={cap_l} L'={lp}");
                        println!("  closed: {}", closed.render());
                        println!("  oracle: {}", oracle.render());
                    }
                }
            }
        }
    }

    // confluence hunt: brute force small words
    'outer: for kind in [AlgebraKind::Gauss, AlgebraKind::UqGl2, AlgebraKind::ZMatrix] {
        let n = kind.ngens();
        let mut words: Vec<Vec<(usize, i32)>> = vec![];
        for g1 in 0..n {
            for e1 in [-1i32, 1, 2] {
                if e1 < 0 && !kind.invertible()[g1] { continue; }
                for g2 in 0..n {
                    for e2 in [-1i32, 1] {
                        if e2 < 0 && !kind.invertible()[g2] { continue; }
                        words.push(vec![(g1, e1), (g2, e2)]);
                    }
                }
            }
        }
        for w1 in words.iter().take(40) {
            for w2 in words.iter().take(40) {
                for w3 in words.iter().step_by(7).take(12) {
                    if !reassociation_agrees(kind, w1, w2, w3) {
                        println!("CONFLUENCE FAIL {kind:?}: {w1:?} {w2:?} {w3:?}");
                        let p1 = normal_order(kind, w1).unwrap();
                        let p2 = normal_order(kind, w2).unwrap();
                        let p3 = normal_order(kind, w3).unwrap();
                        let left = p1.mul(&p2).mul(&p3);
                        let right = p1.mul(&p2.mul(&p3));
                        println!("left:  {}", left.render());
                        println!("right: {}", right.render());
                        continue 'outer;
                    }
                }
            }
        }
        println!("{kind:?}: confluence ok on brute set");
    }

    // intertwiner sign conventions
    let quad = QuadConfig::default();
    let lambda = 0.45;
    let s = 0.3;
    let i = c64(0.0, 1.0);
    let m = |x: qdilog::C64, sgn: f64| {
        let top = gb(c64(0.5 * p.big_q, 0.0) + i * (sgn * lambda) - i * x, &p, &quad).unwrap();
        let bot = gb(c64(0.5 * p.big_q, 0.0) - i * (sgn * lambda) - i * x, &p, &quad).unwrap();
        top / bot
    };
    let qh = qdilog::C64::from_polar(1.0, 0.5 * PI * p.b * p.b);
    let cc = c64(0.0, 1.0) / (p.q - p.q.inv());
    let e_coeff = |s: qdilog::C64, lam: f64| {
        cc * (qh * ((PI * p.b) * (s - lam)).exp() + qh.conj() * (-(PI * p.b) * (s - lam)).exp())
    };
    let sv = c64(s, 0.0);
    let ib = c64(0.0, p.b);
    for (name, lhs, rhs) in [
        ("A: cE(l) M(s+ib) = M(s) cE(-l)", e_coeff(sv, lambda) * m(sv + ib, 1.0), m(sv, 1.0) * e_coeff(sv, -lambda)),
        ("B: cE(-l) M(s+ib) = M(s) cE(l)", e_coeff(sv, -lambda) * m(sv + ib, 1.0), m(sv, 1.0) * e_coeff(sv, lambda)),
        ("C: cE(l) M(s-ib) = M(s) cE(-l)", e_coeff(sv, lambda) * m(sv - ib, 1.0), m(sv, 1.0) * e_coeff(sv, -lambda)),
    ] {
        println!("{name}: rel dev {:.3e}", (lhs - rhs).norm() / rhs.norm());
    }
}
