use qdilog::qalgebra::{pairing_inductive_oracle, pairing_monomial};

fn main() {
    // scan small cases, find minimal mismatches
    let mut count = 0;
    for l in 0..=2i32 {
        for m in 0..=2u32 {
            for n in 0..=2u32 {
                for lp in 0..=1i32 {
                    for extra in 0..=1i32 {
                        let cap_l = n as i32 + lp + extra;
                        let closed = pairing_monomial(0, l, m, n, cap_l, m, n, lp);
                        let oracle = pairing_inductive_oracle(0, l, m, n, cap_l, m, n, lp).unwrap();
                        if closed != oracle && count < 8 {
                            println!("MISMATCH l={l} m={m} n={n} L={cap_l} L'={lp}");
                            println!("  closed: {}", closed.render());
                            println!("  oracle: {}", oracle.render());
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    // K-recursion probe on the oracle: P(l)/P(l-1) should be q^{(m+L'-L)/2}
    for (m, n, cap_l, lp) in [(1u32, 1u32, 2i32, 0i32), (1, 1, 3, 1), (2, 2, 4, 0)] {
        println!("-- m={m} n={n} L={cap_l} L'={lp}");
        for l in 0..=2i32 {
            let o = pairing_inductive_oracle(0, l, m, n, cap_l, m, n, lp).unwrap();
            println!("   l={l}: oracle = {}", o.render());
        }
    }
}
