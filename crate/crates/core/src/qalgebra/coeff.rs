//! Exact coefficient ring `Z[q^{1/2}, q^{-1/2}, c, c^{-1}]`, localised
//! at `q - q^{-1}` (needed once: the EF commutation rewrite).

use crate::{c64, C64};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

/// Laurent polynomial in `q^{1/2}` and `c` with integer coefficients.
/// Keys are `(exponent of q in half-units, exponent of c)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct QLaurent {
    pub terms: BTreeMap<(i32, i32), i64>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(q_half: i32, c_exp: i32, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert((q_half, c_exp), coeff);
        }
        QLaurent { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, 0, n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, &v) in &other.terms {
            let e = out.terms.entry(k).or_insert(0);
            *e += v;
            if *e == 0 {
                out.terms.remove(&k);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(&k, &v)| (k, -v)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = QLaurent::zero();
        for (&(qa, ca), &va) in &self.terms {
            for (&(qb, cb), &vb) in &other.terms {
                let k = (qa + qb, ca + cb);
                let e = out.terms.entry(k).or_insert(0);
                *e += va * vb;
                if *e == 0 {
                    out.terms.remove(&k);
                }
            }
        }
        out
    }

    /// `q - q^{-1}` (exponents `+-2` in half-units).
    pub fn q_minus_q_inv() -> Self {
        let mut t = QLaurent::zero();
        t.terms.insert((2, 0), 1);
        t.terms.insert((-2, 0), -1);
        t
    }

    /// Symmetric q-integer `[k]_q = (q^k - q^{-k})/(q - q^{-1})`.
    pub fn q_int(k: u32) -> Self {
        let mut t = QLaurent::zero();
        let k = k as i32;
        let mut e = -(k - 1);
        while e <= k - 1 {
            t.terms.insert((2 * e, 0), 1);
            e += 2;
        }
        t
    }

    /// `[n]_q! = prod_{k=1}^n [k]_q`.
    pub fn q_factorial(n: u32) -> Self {
        let mut acc = QLaurent::one();
        for k in 1..=n {
            acc = acc.mul(&Self::q_int(k));
        }
        acc
    }

    /// Numerical evaluation at `q^{1/2} = qh`, `c = cv`.
    pub fn eval(&self, qh: C64, cv: C64) -> C64 {
        let mut acc = c64(0.0, 0.0);
        for (&(qe, ce), &v) in &self.terms {
            acc += qh.powi(qe) * cv.powi(ce) * v as f64;
        }
        acc
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        let mut first = true;
        for (&(qe, ce), &v) in &self.terms {
            if !first {
                let _ = write!(s, " {} ", if v >= 0 { "+" } else { "-" });
            } else if v < 0 {
                s.push('-');
            }
            let a = v.abs();
            let mut wrote = false;
            if a != 1 || (qe == 0 && ce == 0) {
                let _ = write!(s, "{a}");
                wrote = true;
            }
            if qe != 0 {
                if wrote {
                    s.push(' ');
                }
                if qe % 2 == 0 {
                    let _ = write!(s, "q^{{{}}}", qe / 2);
                } else {
                    let _ = write!(s, "q^{{{qe}/2}}");
                }
                wrote = true;
            }
            if ce != 0 {
                if wrote {
                    s.push(' ');
                }
                let _ = write!(s, "c^{{{ce}}}");
            }
            first = false;
        }
        s
    }
}

/// Element of the localisation: `num / (q - q^{-1})^{den_pow}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QCoeff {
    pub num: QLaurent,
    pub den_pow: u32,
}

impl QCoeff {
    pub fn zero() -> Self {
        QCoeff::default()
    }

    pub fn one() -> Self {
        QCoeff {
            num: QLaurent::one(),
            den_pow: 0,
        }
    }

    pub fn from_laurent(num: QLaurent) -> Self {
        QCoeff { num, den_pow: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn raised(&self, extra: u32) -> QLaurent {
        let d = QLaurent::q_minus_q_inv();
        let mut n = self.num.clone();
        for _ in 0..extra {
            n = n.mul(&d);
        }
        n
    }

    pub fn add(&self, other: &Self) -> Self {
        let den = self.den_pow.max(other.den_pow);
        QCoeff {
            num: self.raised(den - self.den_pow).add(&other.raised(den - other.den_pow)),
            den_pow: den,
        }
        .reduced()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QCoeff {
            num: self.num.neg(),
            den_pow: self.den_pow,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        QCoeff {
            num: self.num.mul(&other.num),
            den_pow: self.den_pow + other.den_pow,
        }
        .reduced()
    }

    pub fn mul_laurent(&self, other: &QLaurent) -> Self {
        QCoeff {
            num: self.num.mul(other),
            den_pow: self.den_pow,
        }
        .reduced()
    }

    /// Cancels full powers of `q - q^{-1}` out of the numerator.
    pub fn reduced(&self) -> Self {
        if self.num.is_zero() {
            return QCoeff::zero();
        }
        let mut out = self.clone();
        while out.den_pow > 0 {
            match divide_by_q_minus_q_inv(&out.num) {
                Some(q) => {
                    out.num = q;
                    out.den_pow -= 1;
                }
                None => break,
            }
        }
        out
    }

    pub fn eval(&self, qh: C64, cv: C64) -> C64 {
        let q = qh * qh;
        let d = q - q.inv();
        self.num.eval(qh, cv) / d.powu(self.den_pow)
    }

    pub fn render(&self) -> String {
        if self.den_pow == 0 {
            self.num.render()
        } else {
            let mut s = String::from("(");
            s.push_str(&self.num.render());
            let _ = write!(s, ") / (q - q^{{-1}})^{}", self.den_pow);
            s
        }
    }
}

/// Exact division of a Laurent polynomial by `q - q^{-1}` if possible.
fn divide_by_q_minus_q_inv(p: &QLaurent) -> Option<QLaurent> {
    // group by c-exponent; divide each x-polynomial (x = q^{1/2}) by
    // x^2 - x^{-2}, i.e. multiply by x^2 and divide by x^4 - 1.
    let mut by_c: BTreeMap<i32, BTreeMap<i32, i64>> = BTreeMap::new();
    for (&(qe, ce), &v) in &p.terms {
        by_c.entry(ce).or_default().insert(qe + 2, v);
    }
    let mut out = QLaurent::zero();
    for (ce, poly) in by_c {
        // divide poly (in x-exponents) by x^4 - 1, descending
        let mut work: BTreeMap<i32, i64> = poly;
        let mut quot: Vec<(i32, i64)> = Vec::new();
        while let Some((&e, &v)) = work.iter().next_back() {
            if v == 0 {
                work.remove(&e);
                continue;
            }
            let lo = *work.keys().next().unwrap();
            if e - lo < 4 {
                return None; // nonzero remainder of degree-span < 4
            }
            quot.push((e - 4, v));
            // subtract v * (x^4 - 1) * x^{e-4} = v x^e - v x^{e-4}
            let entry = work.entry(e).or_insert(0);
            *entry -= v;
            if *entry == 0 {
                work.remove(&e);
            }
            let entry = work.entry(e - 4).or_insert(0);
            *entry += v;
            if *entry == 0 {
                work.remove(&(e - 4));
            }
        }
        for (e, v) in quot {
            let k = (e, ce);
            let entry = out.terms.entry(k).or_insert(0);
            *entry += v;
            if *entry == 0 {
                out.terms.remove(&k);
            }
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_int_values() {
        // [2]_q = q + q^{-1}
        let t = QLaurent::q_int(2);
        assert_eq!(t.terms.get(&(2, 0)), Some(&1));
        assert_eq!(t.terms.get(&(-2, 0)), Some(&1));
        // [1]_q = 1
        assert_eq!(QLaurent::q_int(1), QLaurent::one());
    }

    #[test]
    fn factorial_matches_product_numerically() {
        let qh = C64::from_polar(1.0, 0.3);
        let f3 = QLaurent::q_factorial(3).eval(qh, c64(1.0, 0.0));
        let q = qh * qh;
        let d = q - q.inv();
        let qi = |k: i32| (q.powi(k) - q.powi(-k)) / d;
        let expect = qi(1) * qi(2) * qi(3);
        assert!((f3 - expect).norm() < 1e-12);
    }

    #[test]
    fn localisation_reduces() {
        // (q - q^{-1}) [2]_q / (q - q^{-1}) reduces to [2]_q
        let a = QCoeff {
            num: QLaurent::q_minus_q_inv().mul(&QLaurent::q_int(2)),
            den_pow: 1,
        }
        .reduced();
        assert_eq!(a.den_pow, 0);
        assert_eq!(a.num, QLaurent::q_int(2));
        // (q^2 - q^{-2}) / (q - q^{-1}) = [2]_q
        let mut top = QLaurent::zero();
        top.terms.insert((4, 0), 1);
        top.terms.insert((-4, 0), -1);
        let a = QCoeff { num: top, den_pow: 1 }.reduced();
        assert_eq!(a.den_pow, 0);
        assert_eq!(a.num, QLaurent::q_int(2));
    }

    #[test]
    fn irreducible_stays() {
        let a = QCoeff {
            num: QLaurent::one(),
            den_pow: 1,
        }
        .reduced();
        assert_eq!(a.den_pow, 1);
    }
}
