//! The Hopf pairing between the enveloping side `{K0, K, E, F}` and the
//! quantum-group side, in two independent ways: the closed-form monomial
//! formula, and an inductive oracle that knows only the generator table
//! and the two coproducts. Their agreement is the correctness check for
//! both.
//!
//! Pairing axioms: `<a, xy> = <Delta(a), x (x) y>` and
//! `<ab, x> = <a (x) b, Delta(x)>`, legs matched in order.

use super::coeff::{QCoeff, QLaurent};
use super::poly::{AlgebraKind, NCPoly, NCTensor, Word};
use crate::error::{Error, Result};
use crate::numerics::QuadConfig;
use crate::params::BParams;
use crate::qdilog::gb;
use crate::{c64, C64};
use alloc::collections::BTreeMap;

/// Largest per-generator exponent accepted by the oracle (combinatorial
/// blow-up guard).
pub const ORACLE_DEGREE_LIMIT: i32 = 4;

/// Closed form for
/// `< K0^{l0} K^l E^m F^n , A^{L} B^{m'} Bh^{n'} Ah^{L'} >`:
/// `q^{-l0 (L + m' + n' + L')/2} c^{m - n}
///  q^{l (m + L' - L)/2 + m L + n L'} [n]_q! [m]_q!` when `m = m'` and
/// `n = n'`, zero otherwise.
///
/// Both the `c`-exponent (`m - n`, one factor per E/F-leg) and the
/// absence of an `m n` cross-term in the `q`-power are forced by the
/// pairing axioms together with the generator table and the two
/// coproducts; the inductive oracle derives every value from those
/// ingredients alone and is the ground truth this formula is checked
/// against (hand-verified at `<EF, A^2 B Bh>` = q^2).
pub fn pairing_monomial(
    l0: i32,
    l: i32,
    m: u32,
    n: u32,
    cap_l: i32,
    m_p: u32,
    n_p: u32,
    cap_l_p: i32,
) -> QCoeff {
    if m != m_p || n != n_p {
        return QCoeff::zero();
    }
    let (mi, ni) = (m as i32, n as i32);
    let q_half_exp = -l0 * (cap_l + mi + ni + cap_l_p)
        + l * (mi + cap_l_p - cap_l)
        + 2 * (mi * cap_l + ni * cap_l_p);
    let c_exp = mi - ni;
    let base = QLaurent::monomial(q_half_exp, c_exp, 1);
    let fact = QLaurent::q_factorial(n).mul(&QLaurent::q_factorial(m));
    QCoeff::from_laurent(base.mul(&fact))
}

/// Pairing of a grouplike element `K0^{a} K^{l}` with one z-generator.
fn grouplike_single(a: i32, l: i32, zg: usize, zexp: i32) -> QCoeff {
    // diagonal table: <K0, z11> = <K0, z22> = q^{-1/2}, <K, z11> = q^{-1/2},
    // <K, z22> = q^{1/2}, <K0, N> = q^{-1}, <K, N> = 1; inverses invert.
    let q_half = match zg {
        0 => -a - l,
        3 => -a + l,
        4 => -2 * a,
        _ => return QCoeff::zero(),
    };
    QCoeff::from_laurent(QLaurent::monomial(q_half * zexp.signum(), 0, 1))
}

#[derive(Default)]
struct PairingCache {
    /// `(u-word, z-word) -> value`
    pairs: BTreeMap<(Word, Word), QCoeff>,
    /// `u-word -> Delta_U(u)`
    coproducts: BTreeMap<Word, NCTensor>,
}

/// Coproduct on the enveloping side: `K0, K` grouplike,
/// `Delta(E) = K0^{-1} K^{-1} (x) E + E (x) K0 K`,
/// `Delta(F) = K0 K^{-1} (x) F + F (x) K0^{-1} K`.
fn u_coproduct_gen(g: usize) -> NCTensor {
    let k = AlgebraKind::UqGl2;
    let mut t = NCTensor::zero(k, 2);
    let w = |k0: i32, kk: i32, e: i32, f: i32| alloc::vec![k0, kk, e, f];
    match g {
        0 => t.insert(alloc::vec![w(1, 0, 0, 0), w(1, 0, 0, 0)], QCoeff::one()),
        1 => t.insert(alloc::vec![w(0, 1, 0, 0), w(0, 1, 0, 0)], QCoeff::one()),
        2 => {
            t.insert(alloc::vec![w(-1, -1, 0, 0), w(0, 0, 1, 0)], QCoeff::one());
            t.insert(alloc::vec![w(0, 0, 1, 0), w(1, 1, 0, 0)], QCoeff::one());
        }
        _ => {
            t.insert(alloc::vec![w(1, -1, 0, 0), w(0, 0, 0, 1)], QCoeff::one());
            t.insert(alloc::vec![w(0, 0, 0, 1), w(-1, 1, 0, 0)], QCoeff::one());
        }
    }
    t
}

fn u_coproduct(cache: &mut PairingCache, u: &Word) -> NCTensor {
    if let Some(t) = cache.coproducts.get(u) {
        return t.clone();
    }
    let k = AlgebraKind::UqGl2;
    let mut acc = NCTensor::one(k, 2);
    for (g, &e) in u.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if e < 0 {
            // grouplike inverses
            let mut t = NCTensor::zero(k, 2);
            let mut w = alloc::vec![0; 4];
            w[g] = e;
            t.insert(alloc::vec![w.clone(), w], QCoeff::one());
            acc = acc.mul(&t);
        } else {
            let dg = u_coproduct_gen(g);
            for _ in 0..e {
                acc = acc.mul(&dg);
            }
        }
    }
    cache.coproducts.insert(u.clone(), acc.clone());
    acc
}

/// Counit on the enveloping side.
fn u_counit(u: &Word) -> QCoeff {
    if u[2] == 0 && u[3] == 0 {
        QCoeff::one()
    } else {
        QCoeff::zero()
    }
}

/// `<u-monomial, single z-generator^{sign}>`, peeling the enveloping
/// side against the matrix coproduct.
fn pair_u_with_single(cache: &mut PairingCache, u: &Word, zg: usize, zexp: i32) -> QCoeff {
    debug_assert!(zexp == 1 || zexp == -1);
    if u[2] == 0 && u[3] == 0 {
        return grouplike_single(u[0], u[1], zg, zexp);
    }
    if u[2] < 0 || u[3] < 0 {
        return QCoeff::zero();
    }
    // single E or F unit: the generator table is the base case
    if u[0] == 0 && u[1] == 0 {
        if u[2] == 1 && u[3] == 0 {
            return if zg == 2 && zexp == 1 {
                QCoeff::from_laurent(QLaurent::monomial(0, 1, 1)) // <E, z21> = c
            } else {
                QCoeff::zero()
            };
        }
        if u[2] == 0 && u[3] == 1 {
            return if zg == 1 && zexp == 1 {
                QCoeff::from_laurent(QLaurent::monomial(0, -1, 1)) // <F, z12> = 1/c
            } else {
                QCoeff::zero()
            };
        }
    }
    // peel the leftmost unit h from u = h u'
    let (hg, mut rest) = {
        let mut hg = None;
        let mut rest = u.clone();
        for g in 0..4 {
            if u[g] != 0 {
                hg = Some((g, u[g].signum()));
                rest[g] -= u[g].signum();
                break;
            }
        }
        (hg.unwrap(), rest)
    };
    let (g, sign) = hg;
    // <h u', zg> = sum <h, zg_(1)> <u', zg_(2)>
    let mut acc = QCoeff::zero();
    let mut hword = alloc::vec![0; 4];
    hword[g] = sign;
    if zg == 4 {
        // N^{+-1} grouplike
        let a = pair_u_with_single(cache, &hword, 4, zexp);
        if !a.is_zero() {
            let b = pair_u_with_single(cache, &rest, 4, zexp);
            acc = acc.add(&a.mul(&b));
        }
        return acc;
    }
    let legs: &[(usize, usize)] = match zg {
        0 => &[(0, 0), (1, 2)],
        1 => &[(0, 1), (1, 3)],
        2 => &[(2, 0), (3, 2)],
        _ => &[(2, 1), (3, 3)],
    };
    for &(g1, g2) in legs {
        let a = pair_u_with_single(cache, &hword, g1, 1);
        if a.is_zero() {
            continue;
        }
        let b = pair_u_with_single(cache, &mut rest, g2, 1);
        if b.is_zero() {
            continue;
        }
        acc = acc.add(&a.mul(&b));
    }
    acc
}

/// `<u-word, z-word>` by peeling the z side against `Delta_U`.
fn pair_words(cache: &mut PairingCache, u: &Word, z: &Word) -> QCoeff {
    if let Some(v) = cache.pairs.get(&(u.clone(), z.clone())) {
        return v.clone();
    }
    // leftmost single z-generator
    let mut first = None;
    for g in 0..5 {
        if z[g] != 0 {
            first = Some((g, z[g].signum()));
            break;
        }
    }
    let value = match first {
        None => u_counit(u),
        Some((zg, sign)) => {
            let mut rest = z.clone();
            rest[zg] -= sign;
            let rest_empty = rest.iter().all(|&e| e == 0);
            let du = u_coproduct(cache, u);
            let mut acc = QCoeff::zero();
            for (legs, c) in &du.terms {
                let a = pair_u_with_single(cache, &legs[0], zg, sign);
                if a.is_zero() {
                    continue;
                }
                let b = if rest_empty {
                    u_counit(&legs[1])
                } else {
                    pair_words(cache, &legs[1], &rest)
                };
                if b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(&b).mul(c));
            }
            acc
        }
    };
    cache.pairs.insert((u.clone(), z.clone()), value.clone());
    value
}

/// Inductive pairing oracle
/// `< K0^{l0} K^l E^m F^n , A^{L} B^{m'} Bh^{n'} Ah^{L'} >`, computed
/// purely from the generator table and the coproducts.
///
/// The mixed monomial is first rewritten through the triangular
/// decomposition into the z-generators,
/// `A^L B^{m'} Bh^{n'} Ah^{L'} = q^{2 m' L'} z11^{L-n'-L'} z12^{n'} z21^{m'} N^{L'}`,
/// which requires `L >= n' + L'` (the z-coproduct is polynomial only in
/// non-negative powers of the matrix entries).
pub fn pairing_inductive_oracle(
    l0: i32,
    l: i32,
    m: u32,
    n: u32,
    cap_l: i32,
    m_p: u32,
    n_p: u32,
    cap_l_p: i32,
) -> Result<QCoeff> {
    let degs = [
        l0.abs(),
        l.abs(),
        m as i32,
        n as i32,
        cap_l.abs(),
        m_p as i32,
        n_p as i32,
        cap_l_p.abs(),
    ];
    if degs.iter().any(|&d| d > ORACLE_DEGREE_LIMIT) {
        return Err(Error::DegreeLimit);
    }
    if cap_l < n_p as i32 + cap_l_p {
        return Err(Error::DegreeLimit);
    }
    let u: Word = alloc::vec![l0, l, m as i32, n as i32];
    let z: Word = alloc::vec![
        cap_l - n_p as i32 - cap_l_p,
        n_p as i32,
        m_p as i32,
        0,
        cap_l_p
    ];
    let mut cache = PairingCache::default();
    let raw = pair_words(&mut cache, &u, &z);
    Ok(raw.mul_laurent(&QLaurent::monomial(4 * m_p as i32 * cap_l_p, 0, 1)))
}

/// Pairing of arbitrary polynomials (enveloping side in `{K0,K,E,F}`,
/// quantum-group side in the z-generators), linear in both slots.
pub fn pairing_poly(u: &NCPoly, z: &NCPoly) -> Result<QCoeff> {
    debug_assert_eq!(u.kind, AlgebraKind::UqGl2);
    debug_assert_eq!(z.kind, AlgebraKind::ZMatrix);
    let mut cache = PairingCache::default();
    let mut acc = QCoeff::zero();
    for (uw, uc) in &u.terms {
        for (zw, zc) in &z.terms {
            if uw.iter().chain(zw.iter()).any(|&e| e.abs() > ORACLE_DEGREE_LIMIT + 4) {
                return Err(Error::DegreeLimit);
            }
            let v = pair_words(&mut cache, uw, zw);
            acc = acc.add(&v.mul(uc).mul(zc));
        }
    }
    Ok(acc)
}

/// Numerical consistency of the continuous substitution
/// `[n]_q! -> G_b(Q + i tau)/(1 - q^2)^{i tau / b}` at the integer
/// points `tau = -i n b`: the limit of the regularised ratio, times the
/// phase `q^{-n(n-1)/2}`, reproduces the exact `[n]_q!`. Returns the
/// relative error.
pub fn qfactorial_gb_consistency(n: u32, p: &BParams, cfg: &QuadConfig) -> Result<f64> {
    let q_cap = p.big_q;
    let one_m_q2 = c64(1.0, 0.0) - p.q * p.q;
    // the substitution hits the zero of G_b at Q; regularise by a real
    // offset and extrapolate three rungs to second order
    let ratio_at = |eps: f64| -> Result<C64> {
        let top = gb(c64(q_cap + eps + n as f64 * p.b, 0.0), p, cfg)?;
        let bot = gb(c64(q_cap + eps, 0.0), p, cfg)?;
        Ok(top / (bot * one_m_q2.powu(n)))
    };
    let e0 = 4e-4;
    let r1 = ratio_at(e0)?;
    let r2 = ratio_at(e0 / 2.0)?;
    let r3 = ratio_at(e0 / 4.0)?;
    let s1 = 2.0 * r2 - r1;
    let s2 = 2.0 * r3 - r2;
    let limit = (4.0 * s2 - s1) / 3.0;
    let phase = C64::from_polar(1.0, -PI_B2(p) * (n * (n.saturating_sub(1))) as f64 / 2.0);
    let candidate = phase * limit;
    let qh = C64::from_polar(1.0, 0.5 * core::f64::consts::PI * p.b * p.b);
    let exact = QLaurent::q_factorial(n).eval(qh, c64(1.0, 0.0));
    Ok((candidate - exact).norm() / exact.norm().max(1e-30))
}

#[allow(non_snake_case)]
fn PI_B2(p: &BParams) -> f64 {
    core::f64::consts::PI * p.b * p.b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_table_entries() {
        // <K, A> = q^{-1/2}
        let v = pairing_monomial(0, 1, 0, 0, 1, 0, 0, 0);
        assert_eq!(v.num, QLaurent::monomial(-1, 0, 1));
        let o = pairing_inductive_oracle(0, 1, 0, 0, 1, 0, 0, 0).unwrap();
        assert_eq!(v, o);
        // <E, B> = c
        let v = pairing_monomial(0, 0, 1, 0, 0, 1, 0, 0);
        assert_eq!(v.num, QLaurent::monomial(0, 1, 1));
        let o = pairing_inductive_oracle(0, 0, 1, 0, 0, 1, 0, 0).unwrap();
        assert_eq!(v, o);
        // degree mismatch vanishes
        assert!(pairing_monomial(0, 0, 2, 0, 0, 1, 0, 0).is_zero());
        assert!(pairing_inductive_oracle(0, 0, 2, 0, 0, 1, 0, 0).unwrap().is_zero());
    }

    #[test]
    fn counit_normalisation() {
        let v = pairing_inductive_oracle(0, 0, 0, 0, 0, 0, 0, 0).unwrap();
        assert_eq!(v, QCoeff::one());
    }

    #[test]
    fn ke_against_ab() {
        // <K E, A B> = c q (hand derivation via both axioms)
        let v = pairing_monomial(0, 1, 1, 0, 1, 1, 0, 0);
        assert_eq!(v.num, QLaurent::monomial(2, 1, 1));
        let o = pairing_inductive_oracle(0, 1, 1, 0, 1, 1, 0, 0).unwrap();
        assert_eq!(v, o);
    }

    #[test]
    fn e2_against_b2() {
        // <E^2, B^2> / <E, B>^2 = [2]_q! c^2 ... check full coefficient
        let v = pairing_monomial(0, 0, 2, 0, 0, 2, 0, 0);
        let o = pairing_inductive_oracle(0, 0, 2, 0, 0, 2, 0, 0).unwrap();
        assert_eq!(v, o);
        // c^2 [2]_q!
        let expect = QLaurent::monomial(0, 2, 1).mul(&QLaurent::q_factorial(2));
        assert_eq!(v.num, expect);
    }

    #[test]
    fn oracle_degree_guard() {
        assert!(matches!(
            pairing_inductive_oracle(0, 0, 5, 5, 0, 5, 5, 0),
            Err(Error::DegreeLimit)
        ));
        // unsupported triangular conversion: L < n' + L'
        assert!(matches!(
            pairing_inductive_oracle(0, 0, 0, 1, 0, 0, 1, 0),
            Err(Error::DegreeLimit)
        ));
    }

    #[test]
    fn qfactorial_substitution() {
        let p = BParams::make(0.775).unwrap();
        let cfg = QuadConfig::default();
        for n in 1..=3 {
            let err = qfactorial_gb_consistency(n, &p, &cfg).unwrap();
            assert!(err < 1e-8, "n = {n}: err = {err}");
        }
    }
}
