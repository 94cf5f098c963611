//! Noncommutative Laurent polynomials over an ordered generator list,
//! with normal ordering driven by a per-algebra swap table. All three
//! presentations used here are PBW: adjacent out-of-order generator
//! pairs rewrite to a `q`-power times the ordered pair, plus (in two
//! cases) lower-order terms.

use super::coeff::{QCoeff, QLaurent};
use crate::error::{Error, Result};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

/// Which presentation a polynomial lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    /// `[A, B, Bh, Ah]`: `AB = q^2 BA`, `Ah Bh = q^{-2} Bh Ah`, the two
    /// pairs mutually commuting; `A`, `Ah` invertible.
    Gauss,
    /// `[K0, K, E, F]`: `K0` central, `KE = qEK`, `KF = q^{-1}FK`,
    /// `EF - FE = (K^2 - K^{-2})/(q - q^{-1})`; `K0`, `K` invertible.
    UqGl2,
    /// `[z11, z12, z21, z22, N]`: the 2x2 quantum-matrix relations with
    /// central-up-to-q-powers determinant generator `N` (invertible).
    ZMatrix,
}

impl AlgebraKind {
    pub fn ngens(self) -> usize {
        match self {
            AlgebraKind::Gauss | AlgebraKind::UqGl2 => 4,
            AlgebraKind::ZMatrix => 5,
        }
    }

    pub fn names(self) -> &'static [&'static str] {
        match self {
            AlgebraKind::Gauss => &["A", "B", "Bh", "Ah"],
            AlgebraKind::UqGl2 => &["K0", "K", "E", "F"],
            AlgebraKind::ZMatrix => &["z11", "z12", "z21", "z22", "N"],
        }
    }

    pub fn invertible(self) -> &'static [bool] {
        match self {
            AlgebraKind::Gauss => &[true, false, false, true],
            AlgebraKind::UqGl2 => &[true, true, false, false],
            AlgebraKind::ZMatrix => &[false, false, false, false, true],
        }
    }

    /// Rewrite rule for the out-of-order adjacent pair `g_hi g_lo`
    /// (single units, `hi > lo`): `g_hi g_lo = q^{k/2} g_lo g_hi (+ lower)`.
    fn swap(self, hi: usize, lo: usize) -> Swap {
        match self {
            AlgebraKind::Gauss => match (hi, lo) {
                (1, 0) => Swap::QPower(-4), // B A = q^{-2} A B
                (3, 2) => Swap::QPower(-4), // Ah Bh = q^{-2} Bh Ah
                _ => Swap::Commute,
            },
            AlgebraKind::UqGl2 => match (hi, lo) {
                (2, 1) => Swap::QPower(-2), // E K = q^{-1} K E
                (3, 1) => Swap::QPower(2),  // F K = q K F
                (3, 2) => Swap::EfRule,     // F E = E F - (K^2 - K^{-2})/(q-q^{-1})
                _ => Swap::Commute,
            },
            AlgebraKind::ZMatrix => match (hi, lo) {
                (2, 0) => Swap::QPower(-4), // z21 z11 = q^{-2} z11 z21
                (2, 1) => Swap::QPower(-4), // z21 z12 = q^{-2} z12 z21
                (3, 0) => Swap::Z22Z11,     // z22 z11 = z11 z22 - (1 - q^{-2}) z12 z21
                (3, 1) => Swap::QPower(-4), // z22 z12 = q^{-2} z12 z22
                (4, 1) => Swap::QPower(-4), // N z12 = q^{-2} z12 N
                (4, 2) => Swap::QPower(4),  // N z21 = q^2 z21 N
                _ => Swap::Commute,
            },
        }
    }
}

enum Swap {
    Commute,
    /// `g_hi g_lo = q^{k/2} g_lo g_hi`, applying to whole powers as
    /// `q^{k a b / 2}`.
    QPower(i32),
    /// `F E = E F - (K^2 - K^{-2})/(q - q^{-1})` (single units).
    EfRule,
    /// `z22 z11 = z11 z22 + (q^{-2} - 1) z12 z21` (single units).
    Z22Z11,
}

/// A normal-form word: exponent vector over the algebra's generators.
pub type Word = Vec<i32>;

fn word_render(kind: AlgebraKind, w: &Word) -> String {
    let mut s = String::new();
    let mut any = false;
    for (g, &e) in w.iter().enumerate() {
        if e != 0 {
            if any {
                s.push(' ');
            }
            let _ = write!(s, "{}^{{{e}}}", kind.names()[g]);
            any = true;
        }
    }
    if !any {
        s.push('1');
    }
    s
}

/// A finite sum of coefficient-weighted normal words.
#[derive(Debug, Clone, PartialEq)]
pub struct NCPoly {
    pub kind: AlgebraKind,
    pub terms: BTreeMap<Word, QCoeff>,
}

impl NCPoly {
    pub fn zero(kind: AlgebraKind) -> Self {
        NCPoly {
            kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(kind: AlgebraKind) -> Self {
        let mut t = BTreeMap::new();
        t.insert(alloc::vec![0; kind.ngens()], QCoeff::one());
        NCPoly { kind, terms: t }
    }

    pub fn generator(kind: AlgebraKind, g: usize, exp: i32) -> Result<Self> {
        if exp < 0 && !kind.invertible()[g] {
            return Err(Error::Domain("negative exponent on a non-invertible generator"));
        }
        let mut w = alloc::vec![0; kind.ngens()];
        w[g] = exp;
        let mut t = BTreeMap::new();
        t.insert(w, QCoeff::one());
        Ok(NCPoly { kind, terms: t })
    }

    pub fn monomial(kind: AlgebraKind, word: &[i32], coeff: QCoeff) -> Result<Self> {
        for (g, &e) in word.iter().enumerate() {
            if e < 0 && !kind.invertible()[g] {
                return Err(Error::Domain("negative exponent on a non-invertible generator"));
            }
        }
        let mut t = BTreeMap::new();
        if !coeff.is_zero() {
            t.insert(word.to_vec(), coeff);
        }
        Ok(NCPoly { kind, terms: t })
    }

    fn insert(&mut self, w: Word, c: QCoeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.kind, other.kind);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&QCoeff::one().neg()))
    }

    pub fn scale(&self, c: &QCoeff) -> Self {
        let mut out = NCPoly::zero(self.kind);
        for (w, v) in &self.terms {
            out.insert(w.clone(), v.mul(c));
        }
        out
    }

    pub fn scale_laurent(&self, c: &QLaurent) -> Self {
        let mut out = NCPoly::zero(self.kind);
        for (w, v) in &self.terms {
            out.insert(w.clone(), v.mul_laurent(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.kind, other.kind);
        let mut out = NCPoly::zero(self.kind);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let prod = mul_words(self.kind, wa, wb);
                let c = ca.mul(cb);
                for (w, v) in prod.terms {
                    out.insert(w, v.mul(&c));
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = NCPoly::one(self.kind);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Canonical rendering, terms in word order.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                s.push_str("  +  ");
            }
            let _ = write!(s, "[{}] {}", c.render(), word_render(self.kind, w));
            first = false;
        }
        s
    }
}

/// Normal-orders the product of two normal words.
fn mul_words(kind: AlgebraKind, a: &Word, b: &Word) -> NCPoly {
    // build the concatenated generator sequence
    let mut seq: Vec<(usize, i32)> = Vec::new();
    for (g, &e) in a.iter().enumerate() {
        if e != 0 {
            seq.push((g, e));
        }
    }
    for (g, &e) in b.iter().enumerate() {
        if e != 0 {
            seq.push((g, e));
        }
    }
    normal_order_seq(kind, QCoeff::one(), seq)
}

/// Normal-orders an arbitrary generator sequence (exponents may be
/// negative only on invertible generators).
pub fn normal_order_seq(kind: AlgebraKind, coeff: QCoeff, seq: Vec<(usize, i32)>) -> NCPoly {
    let mut out = NCPoly::zero(kind);
    let mut work: Vec<(QCoeff, Vec<(usize, i32)>)> = alloc::vec![(coeff, seq)];
    while let Some((c, mut seq)) = work.pop() {
        // drop zero exponents, merge adjacent equal generators; step
        // back after every removal so newly adjacent pairs are seen
        let mut i = 0;
        while i < seq.len() {
            if seq[i].1 == 0 {
                seq.remove(i);
                i = i.saturating_sub(1);
                continue;
            }
            if i + 1 < seq.len() && seq[i].0 == seq[i + 1].0 {
                seq[i].1 += seq[i + 1].1;
                seq.remove(i + 1);
                i = i.saturating_sub(1);
                continue;
            }
            i += 1;
        }
        // find the first out-of-order adjacent pair
        let mut pos = None;
        for i in 0..seq.len().saturating_sub(1) {
            if seq[i].0 > seq[i + 1].0 {
                pos = Some(i);
                break;
            }
        }
        let Some(i) = pos else {
            let mut w = alloc::vec![0; kind.ngens()];
            for (g, e) in seq {
                w[g] += e;
            }
            out.insert(w, c);
            continue;
        };
        let (hi, ehi) = seq[i];
        let (lo, elo) = seq[i + 1];
        match kind.swap(hi, lo) {
            Swap::Commute => {
                seq[i] = (lo, elo);
                seq[i + 1] = (hi, ehi);
                work.push((c, seq));
            }
            Swap::QPower(k) => {
                seq[i] = (lo, elo);
                seq[i + 1] = (hi, ehi);
                let factor = QLaurent::monomial(k * ehi * elo, 0, 1);
                work.push((c.mul_laurent(&factor), seq));
            }
            Swap::EfRule => {
                // peel one F past one E:
                // ... F^{ehi} E^{elo} ... with F^{ehi-1} (F E) E^{elo-1}
                // F E = E F - (K^2 - K^{-2})/(q - q^{-1})
                let mut head: Vec<(usize, i32)> = seq[..i].to_vec();
                head.push((hi, ehi - 1));
                let tail: Vec<(usize, i32)> = seq[i + 2..].to_vec();
                // branch 1: E F
                let mut s1 = head.clone();
                s1.push((lo, 1));
                s1.push((hi, 1));
                s1.push((lo, elo - 1));
                s1.extend_from_slice(&tail);
                work.push((c.clone(), s1));
                // branch 2: -(K^2 - K^{-2})/(q - q^{-1}) (K is gen 1)
                for (kexp, sign) in [(2i32, 1i64), (-2i32, -1i64)] {
                    let mut s2 = head.clone();
                    s2.push((1, kexp));
                    s2.push((lo, elo - 1));
                    s2.extend_from_slice(&tail);
                    let scale = QCoeff {
                        num: QLaurent::from_int(-sign),
                        den_pow: 1,
                    };
                    work.push((c.mul(&scale), s2));
                }
            }
            Swap::Z22Z11 => {
                // z22 z11 = z11 z22 + (q^{-2} - 1) z12 z21
                let mut head: Vec<(usize, i32)> = seq[..i].to_vec();
                head.push((hi, ehi - 1));
                let tail: Vec<(usize, i32)> = seq[i + 2..].to_vec();
                let mut s1 = head.clone();
                s1.push((lo, 1));
                s1.push((hi, 1));
                s1.push((lo, elo - 1));
                s1.extend_from_slice(&tail);
                work.push((c.clone(), s1));
                let mut s2 = head.clone();
                s2.push((1, 1)); // z12
                s2.push((2, 1)); // z21
                s2.push((lo, elo - 1));
                s2.extend_from_slice(&tail);
                let mut lower = QLaurent::monomial(-4, 0, 1); // q^{-2}
                lower = lower.sub(&QLaurent::one());
                work.push((c.mul_laurent(&lower), s2));
            }
        }
    }
    out
}

/// Public entry point: normal-order a word given as a generator
/// sequence.
pub fn normal_order(kind: AlgebraKind, seq: &[(usize, i32)]) -> Result<NCPoly> {
    for &(g, e) in seq {
        if g >= kind.ngens() {
            return Err(Error::Domain("generator index out of range"));
        }
        if e < 0 && !kind.invertible()[g] {
            return Err(Error::Domain("negative exponent on a non-invertible generator"));
        }
    }
    Ok(normal_order_seq(kind, QCoeff::one(), seq.to_vec()))
}

/// A sum of pure tensors of normal words, all legs in the same algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct NCTensor {
    pub kind: AlgebraKind,
    pub rank: usize,
    pub terms: BTreeMap<Vec<Word>, QCoeff>,
}

impl NCTensor {
    pub fn zero(kind: AlgebraKind, rank: usize) -> Self {
        NCTensor {
            kind,
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(kind: AlgebraKind, rank: usize) -> Self {
        let mut t = BTreeMap::new();
        t.insert(alloc::vec![alloc::vec![0; kind.ngens()]; rank], QCoeff::one());
        NCTensor {
            kind,
            rank,
            terms: t,
        }
    }

    pub fn insert(&mut self, legs: Vec<Word>, c: QCoeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.insert(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.insert(l.clone(), c.neg());
        }
        out
    }

    /// Leg-wise product, normal-ordering every leg.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = NCTensor::zero(self.kind, self.rank);
        for (la, ca) in &self.terms {
            for (lb, cb) in &other.terms {
                // multiply leg by leg; each leg product is an NCPoly
                let mut partial: Vec<(Vec<Word>, QCoeff)> =
                    alloc::vec![(Vec::new(), ca.mul(cb))];
                for leg in 0..self.rank {
                    let prod = mul_words(self.kind, &la[leg], &lb[leg]);
                    let mut next = Vec::new();
                    for (legs, c) in &partial {
                        for (w, v) in &prod.terms {
                            let mut nl = legs.clone();
                            nl.push(w.clone());
                            next.push((nl, c.mul(v)));
                        }
                    }
                    partial = next;
                }
                for (legs, c) in partial {
                    out.insert(legs, c);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ba_reorders() {
        // B A -> q^{-2} A B
        let p = normal_order(AlgebraKind::Gauss, &[(1, 1), (0, 1)]).unwrap();
        assert_eq!(p.terms.len(), 1);
        let (w, c) = p.terms.iter().next().unwrap();
        assert_eq!(w, &alloc::vec![1, 1, 0, 0]);
        assert_eq!(c.num, QLaurent::monomial(-4, 0, 1));
    }

    #[test]
    fn hatted_pair() {
        // Ah Bh -> q^{-2} Bh Ah ... wait: stored as exponents, check coeff
        let p = normal_order(AlgebraKind::Gauss, &[(3, 1), (2, 1)]).unwrap();
        let (w, c) = p.terms.iter().next().unwrap();
        assert_eq!(w, &alloc::vec![0, 0, 1, 1]);
        assert_eq!(c.num, QLaurent::monomial(-4, 0, 1));
    }

    #[test]
    fn empty_word_is_one() {
        let p = normal_order(AlgebraKind::Gauss, &[]).unwrap();
        assert_eq!(p, NCPoly::one(AlgebraKind::Gauss));
    }

    #[test]
    fn fe_rule() {
        // F E = E F - (K^2 - K^{-2})/(q - q^{-1})
        let p = normal_order(AlgebraKind::UqGl2, &[(3, 1), (2, 1)]).unwrap();
        assert_eq!(p.terms.len(), 3);
        let ef = alloc::vec![0, 0, 1, 1];
        assert_eq!(p.terms.get(&ef), Some(&QCoeff::one()));
        let k2 = alloc::vec![0, 2, 0, 0];
        let minus_inv_d = QCoeff {
            num: QLaurent::from_int(-1),
            den_pow: 1,
        };
        assert_eq!(p.terms.get(&k2), Some(&minus_inv_d));
    }

    #[test]
    fn associativity_spot() {
        // (F E) E == F (E E) in UqGl2
        let fe = normal_order(AlgebraKind::UqGl2, &[(3, 1), (2, 1)]).unwrap();
        let e = NCPoly::generator(AlgebraKind::UqGl2, 2, 1).unwrap();
        let left = fe.mul(&e);
        let right = normal_order(AlgebraKind::UqGl2, &[(3, 1), (2, 2)]).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn negative_exponent_guard() {
        assert!(normal_order(AlgebraKind::Gauss, &[(1, -1)]).is_err());
        assert!(normal_order(AlgebraKind::Gauss, &[(0, -2)]).is_ok());
    }
}
