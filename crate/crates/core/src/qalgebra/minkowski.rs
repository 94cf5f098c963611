//! The split quantum Minkowski / positive quantum-group relations,
//! verified exactly through the triangular decomposition
//! `z11 = A, z12 = A Bh, z21 = B, z22 = B Bh + Ah`, and the matrix
//! coproduct on the z-generators with its Hopf consistency checks.

use super::coeff::{QCoeff, QLaurent};
use super::poly::{normal_order_seq, AlgebraKind, NCPoly, NCTensor, Word};
use alloc::vec::Vec;

/// The z-generators as elements of the triangular-decomposition algebra.
pub fn z_in_gauss() -> [NCPoly; 4] {
    let k = AlgebraKind::Gauss;
    let z11 = NCPoly::monomial(k, &[1, 0, 0, 0], QCoeff::one()).unwrap();
    let z12 = NCPoly::monomial(k, &[1, 0, 1, 0], QCoeff::one()).unwrap();
    let z21 = NCPoly::monomial(k, &[0, 1, 0, 0], QCoeff::one()).unwrap();
    let z22 = NCPoly::monomial(k, &[0, 1, 1, 0], QCoeff::one())
        .unwrap()
        .add(&NCPoly::monomial(k, &[0, 0, 0, 1], QCoeff::one()).unwrap());
    [z11, z12, z21, z22]
}

/// Determinant `N = z11 z22 - z12 z21` in the decomposition algebra.
pub fn determinant_in_gauss() -> NCPoly {
    let [z11, z12, z21, z22] = z_in_gauss();
    z11.mul(&z22).sub(&z12.mul(&z21))
}

fn q_pow(k_half: i32) -> QCoeff {
    QCoeff::from_laurent(QLaurent::monomial(k_half, 0, 1))
}

/// Verifies, exactly, the six commutation relations, both determinant
/// expressions, and the four `N z_ij` rules. Failures are reported by
/// name, never thrown.
pub fn verify_minkowski_relations() -> Vec<(&'static str, bool)> {
    let [z11, z12, z21, z22] = z_in_gauss();
    let q2 = q_pow(4);
    let qm2 = q_pow(-4);
    let comm = |a: &NCPoly, b: &NCPoly| a.mul(b).sub(&b.mul(a));
    let n = determinant_in_gauss();
    let n_alt = z22.mul(&z11).sub(&z21.mul(&z12));
    let a_ahat = NCPoly::monomial(AlgebraKind::Gauss, &[1, 0, 0, 1], QCoeff::one()).unwrap();
    alloc::vec![
        ("[z11, z12] = 0", comm(&z11, &z12).is_zero()),
        ("[z21, z22] = 0", comm(&z21, &z22).is_zero()),
        (
            "[z11, z22] = [z12, z21]",
            comm(&z11, &z22).sub(&comm(&z12, &z21)).is_zero()
        ),
        (
            "z11 z21 = q^2 z21 z11",
            z11.mul(&z21).sub(&z21.mul(&z11).scale(&q2)).is_zero()
        ),
        (
            "z12 z22 = q^2 z22 z12",
            z12.mul(&z22).sub(&z22.mul(&z12).scale(&q2)).is_zero()
        ),
        (
            "z12 z21 = q^2 z21 z12",
            z12.mul(&z21).sub(&z21.mul(&z12).scale(&q2)).is_zero()
        ),
        ("N = A Ah", n.sub(&a_ahat).is_zero()),
        ("N = z22 z11 - z21 z12", n.sub(&n_alt).is_zero()),
        ("N z11 = z11 N", n.mul(&z11).sub(&z11.mul(&n)).is_zero()),
        (
            "N z12 = q^{-2} z12 N",
            n.mul(&z12).sub(&z12.mul(&n).scale(&qm2)).is_zero()
        ),
        (
            "N z21 = q^2 z21 N",
            n.mul(&z21).sub(&z21.mul(&n).scale(&q2)).is_zero()
        ),
        ("N z22 = z22 N", n.mul(&z22).sub(&z22.mul(&n)).is_zero()),
    ]
}

fn z_gen(g: usize) -> Word {
    let mut w = alloc::vec![0; 5];
    w[g] = 1;
    w
}

/// Matrix coproduct on a single z-algebra generator (`z11..z22, N^{+-1}`).
fn coproduct_gen(g: usize, exp_sign: i32) -> NCTensor {
    let k = AlgebraKind::ZMatrix;
    let mut t = NCTensor::zero(k, 2);
    match g {
        0 => {
            t.insert(alloc::vec![z_gen(0), z_gen(0)], QCoeff::one());
            t.insert(alloc::vec![z_gen(1), z_gen(2)], QCoeff::one());
        }
        1 => {
            t.insert(alloc::vec![z_gen(0), z_gen(1)], QCoeff::one());
            t.insert(alloc::vec![z_gen(1), z_gen(3)], QCoeff::one());
        }
        2 => {
            t.insert(alloc::vec![z_gen(2), z_gen(0)], QCoeff::one());
            t.insert(alloc::vec![z_gen(3), z_gen(2)], QCoeff::one());
        }
        3 => {
            t.insert(alloc::vec![z_gen(2), z_gen(1)], QCoeff::one());
            t.insert(alloc::vec![z_gen(3), z_gen(3)], QCoeff::one());
        }
        _ => {
            // N is grouplike, as is its inverse
            let mut w = alloc::vec![0; 5];
            w[4] = exp_sign;
            t.insert(alloc::vec![w.clone(), w], QCoeff::one());
        }
    }
    t
}

/// Multiplicative extension of the matrix coproduct to a z-polynomial.
pub fn coproduct(x: &NCPoly) -> NCTensor {
    debug_assert_eq!(x.kind, AlgebraKind::ZMatrix);
    let mut out = NCTensor::zero(AlgebraKind::ZMatrix, 2);
    for (w, c) in &x.terms {
        let mut acc = NCTensor::one(AlgebraKind::ZMatrix, 2);
        for (g, &e) in w.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let dg = coproduct_gen(g, if e >= 0 { 1 } else { -1 });
            for _ in 0..e.unsigned_abs() {
                acc = acc.mul(&dg);
            }
        }
        for (legs, v) in acc.terms {
            out.insert(legs, v.mul(c));
        }
    }
    out
}

/// Applies the coproduct to one leg of a rank-2 tensor, producing the
/// rank-3 tensor needed for the coassociativity check.
pub fn coproduct_on_leg(t: &NCTensor, leg: usize) -> NCTensor {
    debug_assert_eq!(t.rank, 2);
    let mut out = NCTensor::zero(AlgebraKind::ZMatrix, 3);
    for (legs, c) in &t.terms {
        let fixed = legs[1 - leg].clone();
        let expanded = coproduct(&NCPoly::monomial(AlgebraKind::ZMatrix, &legs[leg], QCoeff::one()).unwrap());
        for (two, v) in expanded.terms {
            let new_legs = if leg == 0 {
                alloc::vec![two[0].clone(), two[1].clone(), fixed.clone()]
            } else {
                alloc::vec![fixed.clone(), two[0].clone(), two[1].clone()]
            };
            out.insert(new_legs, v.mul(c));
        }
    }
    out
}

/// The six defining relations as z-algebra `LHS - RHS` polynomials.
pub fn z_relation_differences() -> Vec<(&'static str, NCPoly)> {
    let k = AlgebraKind::ZMatrix;
    let g = |i: usize| NCPoly::generator(k, i, 1).unwrap();
    let (z11, z12, z21, z22) = (g(0), g(1), g(2), g(3));
    let q2 = q_pow(4);
    let comm = |a: &NCPoly, b: &NCPoly| a.mul(b).sub(&b.mul(a));
    alloc::vec![
        ("[z11, z12]", comm(&z11, &z12)),
        ("[z21, z22]", comm(&z21, &z22)),
        ("[z11, z22] - [z12, z21]", comm(&z11, &z22).sub(&comm(&z12, &z21))),
        ("z11 z21 - q^2 z21 z11", z11.mul(&z21).sub(&z21.mul(&z11).scale(&q2))),
        ("z12 z22 - q^2 z22 z12", z12.mul(&z22).sub(&z22.mul(&z12).scale(&q2))),
        ("z12 z21 - q^2 z21 z12", z12.mul(&z21).sub(&z21.mul(&z12).scale(&q2))),
    ]
}

/// `Delta` respects every defining relation: `Delta(LHS - RHS) = 0`.
pub fn coproduct_respects_relations() -> Vec<(&'static str, bool)> {
    z_relation_differences()
        .into_iter()
        .map(|(name, d)| (name, coproduct(&d).is_zero()))
        .collect()
}

/// `Delta` is coassociative on the generators.
pub fn coproduct_coassociative_on_generators() -> bool {
    for g in 0..4 {
        let d = coproduct_gen(g, 1);
        let left = coproduct_on_leg(&d, 0);
        let right = coproduct_on_leg(&d, 1);
        if !left.sub(&right).is_zero() {
            return false;
        }
    }
    true
}

/// `Delta(N) = N (x) N` computed from the defining polynomial.
pub fn determinant_grouplike() -> bool {
    let k = AlgebraKind::ZMatrix;
    let g = |i: usize| NCPoly::generator(k, i, 1).unwrap();
    let n_poly = g(0).mul(&g(3)).sub(&g(1).mul(&g(2)));
    let dn = coproduct(&n_poly);
    let nn = {
        let mut t = NCTensor::zero(k, 2);
        // N (x) N with N expressed through the z generators
        for (wa, ca) in &n_poly.terms {
            for (wb, cb) in &n_poly.terms {
                t.insert(alloc::vec![wa.clone(), wb.clone()], ca.mul(cb));
            }
        }
        t
    };
    dn.sub(&nn).is_zero()
}

/// Homomorphism spot check `Delta(z11 z21) = Delta(z11) Delta(z21)`.
pub fn coproduct_homomorphism_example() -> bool {
    let k = AlgebraKind::ZMatrix;
    let z11 = NCPoly::generator(k, 0, 1).unwrap();
    let z21 = NCPoly::generator(k, 2, 1).unwrap();
    let prod = z11.mul(&z21);
    coproduct(&prod)
        .sub(&coproduct(&z11).mul(&coproduct(&z21)))
        .is_zero()
}

/// Random-word confluence material: re-associating a triple product must
/// give the same normal form.
pub fn reassociation_agrees(kind: AlgebraKind, w1: &[(usize, i32)], w2: &[(usize, i32)], w3: &[(usize, i32)]) -> bool {
    let p1 = normal_order_seq(kind, QCoeff::one(), w1.to_vec());
    let p2 = normal_order_seq(kind, QCoeff::one(), w2.to_vec());
    let p3 = normal_order_seq(kind, QCoeff::one(), w3.to_vec());
    let left = p1.mul(&p2).mul(&p3);
    let right = p1.mul(&p2.mul(&p3));
    left.sub(&right).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_minkowski_relations_hold() {
        for (name, ok) in verify_minkowski_relations() {
            assert!(ok, "relation failed: {name}");
        }
    }

    #[test]
    fn coproduct_is_hopf_consistent() {
        for (name, ok) in coproduct_respects_relations() {
            assert!(ok, "Delta broke relation {name}");
        }
        assert!(coproduct_coassociative_on_generators());
        assert!(determinant_grouplike());
        assert!(coproduct_homomorphism_example());
        // Delta(1) = 1 (x) 1
        let one = NCPoly::one(AlgebraKind::ZMatrix);
        assert_eq!(coproduct(&one), NCTensor::one(AlgebraKind::ZMatrix, 2));
    }
}
