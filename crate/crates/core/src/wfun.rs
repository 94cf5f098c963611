//! The dense class of test functions: finite sums of
//! `coeff * exp(-alpha x^2 + beta x) * P(x)` in one or several variables
//! (diagonal Gaussian part, `Re alpha > 0` in every variable).
//!
//! The class is exactly closed under addition, scalar multiples,
//! polynomial multiples, multiplication by `e^{c x_v}` and complex
//! shifts `x_v -> x_v + delta`, which is what makes shift-operator
//! representations exactly computable on it.

use crate::error::{Error, Result};
use crate::{c64, C64};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// Multivariate polynomial with complex coefficients, keyed by exponent
/// vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    pub terms: BTreeMap<Vec<u32>, C64>,
    nvars: usize,
}

impl Poly {
    pub fn constant(nvars: usize, c: C64) -> Self {
        let mut terms = BTreeMap::new();
        if c != c64(0.0, 0.0) {
            terms.insert(alloc::vec![0u32; nvars], c);
        }
        Poly { terms, nvars }
    }

    pub fn monomial(nvars: usize, var: usize, power: u32, c: C64) -> Self {
        let mut expo = alloc::vec![0u32; nvars];
        expo[var] = power;
        let mut terms = BTreeMap::new();
        terms.insert(expo, c);
        Poly { terms, nvars }
    }

    fn add_term(&mut self, expo: Vec<u32>, c: C64) {
        let entry = self.terms.entry(expo).or_insert(c64(0.0, 0.0));
        *entry += c;
        if *entry == c64(0.0, 0.0) {
            // keep the map minimal; exact zeros appear from symmetric sums
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly {
            terms: BTreeMap::new(),
            nvars: self.nvars,
        };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let expo: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(expo, *ca * *cb);
            }
        }
        out
    }

    /// Substitute `x_var -> x_var + delta` (binomial expansion).
    pub fn shifted(&self, var: usize, delta: C64) -> Poly {
        let mut out = Poly {
            terms: BTreeMap::new(),
            nvars: self.nvars,
        };
        for (expo, c) in &self.terms {
            let k = expo[var];
            // (x + delta)^k = sum_j C(k,j) delta^{k-j} x^j
            let mut binom = 1.0f64;
            let mut dpow = c64(1.0, 0.0); // delta^{k-j} built downward
            // iterate j from k down to 0, tracking delta power upward
            for j in (0..=k).rev() {
                let mut e = expo.clone();
                e[var] = j;
                out.add_term(e, *c * dpow * binom);
                if j > 0 {
                    // advance binom C(k, j-1) = C(k,j) * j / (k-j+1)
                    binom = binom * j as f64 / (k - j + 1) as f64;
                    dpow *= delta;
                }
            }
        }
        out
    }

    pub fn eval(&self, z: &[C64]) -> C64 {
        let mut acc = c64(0.0, 0.0);
        for (expo, c) in &self.terms {
            let mut m = *c;
            for (v, &e) in expo.iter().enumerate() {
                for _ in 0..e {
                    m *= z[v];
                }
            }
            acc += m;
        }
        acc
    }

    pub fn max_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn degree(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }
}

/// One Gaussian term `coeff * prod_v exp(-alpha_v x_v^2 + beta_v x_v) * poly`.
#[derive(Debug, Clone, PartialEq)]
pub struct WTerm {
    pub coeff: C64,
    pub alpha: Vec<C64>,
    pub beta: Vec<C64>,
    pub poly: Poly,
}

/// An exact element of the dense class.
#[derive(Debug, Clone, PartialEq)]
pub struct WFunction {
    nvars: usize,
    terms: Vec<WTerm>,
}

impl WFunction {
    /// `exp(-alpha x^2 + beta x)` in one variable.
    pub fn gaussian(alpha: C64, beta: C64) -> Result<Self> {
        Self::gaussian_nd(&[alpha], &[beta])
    }

    /// Product Gaussian over several variables.
    pub fn gaussian_nd(alpha: &[C64], beta: &[C64]) -> Result<Self> {
        if alpha.len() != beta.len() || alpha.is_empty() {
            return Err(Error::Domain("alpha/beta length mismatch"));
        }
        if alpha.iter().any(|a| !(a.re > 0.0)) {
            return Err(Error::Domain("every Gaussian exponent needs Re(alpha) > 0"));
        }
        let n = alpha.len();
        Ok(WFunction {
            nvars: n,
            terms: alloc::vec![WTerm {
                coeff: c64(1.0, 0.0),
                alpha: alpha.to_vec(),
                beta: beta.to_vec(),
                poly: Poly::constant(n, c64(1.0, 0.0)),
            }],
        })
    }

    pub fn zero(nvars: usize) -> Self {
        WFunction {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[WTerm] {
        &self.terms
    }

    /// Every term keeps Gaussian decay in every variable.
    pub fn class_ok(&self) -> bool {
        self.terms
            .iter()
            .all(|t| t.alpha.iter().all(|a| a.re > 0.0))
    }

    /// Tensor product: variables of `other` appended after `self`'s.
    pub fn tensor(&self, other: &WFunction) -> WFunction {
        let n = self.nvars + other.nvars;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for ta in &self.terms {
            for tb in &other.terms {
                let mut alpha = ta.alpha.clone();
                alpha.extend_from_slice(&tb.alpha);
                let mut beta = ta.beta.clone();
                beta.extend_from_slice(&tb.beta);
                let mut poly = Poly {
                    terms: BTreeMap::new(),
                    nvars: n,
                };
                for (ea, ca) in &ta.poly.terms {
                    for (eb, cb) in &tb.poly.terms {
                        let mut e = ea.clone();
                        e.extend_from_slice(eb);
                        poly.add_term(e, *ca * *cb);
                    }
                }
                terms.push(WTerm {
                    coeff: ta.coeff * tb.coeff,
                    alpha,
                    beta,
                    poly,
                });
            }
        }
        WFunction { nvars: n, terms }
    }

    pub fn scale(&self, c: C64) -> WFunction {
        let mut out = self.clone();
        for t in &mut out.terms {
            t.coeff *= c;
        }
        out
    }

    pub fn add(&self, other: &WFunction) -> WFunction {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        'outer: for t in &other.terms {
            for s in &mut out.terms {
                if s.alpha == t.alpha && s.beta == t.beta && s.poly == t.poly {
                    s.coeff += t.coeff;
                    continue 'outer;
                }
            }
            out.terms.push(t.clone());
        }
        out.terms.retain(|t| t.coeff != c64(0.0, 0.0));
        out
    }

    pub fn sub(&self, other: &WFunction) -> WFunction {
        self.add(&other.scale(c64(-1.0, 0.0)))
    }

    /// Multiplication by `e^{c x_var}`: shifts the linear exponent.
    pub fn mul_exp(&self, var: usize, c: C64) -> WFunction {
        let mut out = self.clone();
        for t in &mut out.terms {
            t.beta[var] += c;
        }
        out
    }

    /// Multiplication by a polynomial in one variable.
    pub fn mul_poly(&self, poly: &Poly) -> WFunction {
        let mut out = self.clone();
        for t in &mut out.terms {
            t.poly = t.poly.mul(poly);
        }
        out
    }

    /// Exact complex shift `x_var -> x_var + delta`.
    ///
    /// `exp(-a (x+d)^2 + b (x+d)) = exp(-a d^2 + b d) exp(-a x^2 + (b - 2 a d) x)`.
    pub fn shift(&self, var: usize, delta: C64) -> WFunction {
        let mut out = self.clone();
        for t in &mut out.terms {
            let a = t.alpha[var];
            let b = t.beta[var];
            t.coeff *= (-a * delta * delta + b * delta).exp();
            t.beta[var] = b - 2.0 * a * delta;
            t.poly = t.poly.shifted(var, delta);
        }
        out
    }

    pub fn eval(&self, z: &[C64]) -> C64 {
        debug_assert_eq!(z.len(), self.nvars);
        let mut acc = c64(0.0, 0.0);
        for t in &self.terms {
            let mut e = c64(0.0, 0.0);
            for v in 0..self.nvars {
                e += -t.alpha[v] * z[v] * z[v] + t.beta[v] * z[v];
            }
            acc += t.coeff * e.exp() * t.poly.eval(z);
        }
        acc
    }

    /// Half-width `T` such that `|f|` is below `tol/10` outside
    /// `[-T, T]` in every variable (coarse envelope bound).
    pub fn decay_window(&self, tol: f64) -> f64 {
        let mut t_max: f64 = 4.0;
        for t in &self.terms {
            for v in 0..self.nvars {
                let a = t.alpha[v].re;
                let b = t.beta[v].norm();
                let deg = t.poly.degree(v) as f64;
                let badge = (t.coeff.norm() * (1.0 + t.poly.max_coeff()) + 1.0).ln()
                    + (10.0 / tol).ln()
                    + deg * 4.0;
                let disc = (b * b + 4.0 * a * badge.max(1.0)).sqrt();
                t_max = t_max.max((b + disc) / (2.0 * a));
            }
        }
        t_max.min(60.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_matches_pointwise() {
        let f = WFunction::gaussian(c64(1.0, 0.0), c64(0.3, -0.2)).unwrap();
        let g = f
            .mul_poly(&Poly::monomial(1, 0, 2, c64(1.0, 0.0)))
            .shift(0, c64(0.0, 0.775));
        for s in [-1.5, 0.2, 2.4] {
            let z = c64(s, 0.0);
            let direct = {
                let zz = z + c64(0.0, 0.775);
                (-zz * zz + c64(0.3, -0.2) * zz).exp() * zz * zz
            };
            assert!((g.eval(&[z]) - direct).norm() < 1e-12 * direct.norm().max(1.0));
        }
    }

    #[test]
    fn class_closure_under_ops() {
        let f = WFunction::gaussian(c64(0.7, 0.1), c64(0.0, 0.0)).unwrap();
        let g = f
            .shift(0, c64(0.4, -1.3))
            .mul_exp(0, c64(-2.0, 0.5))
            .mul_poly(&Poly::monomial(1, 0, 3, c64(2.0, 0.0)))
            .add(&f);
        assert!(g.class_ok());
    }

    #[test]
    fn rejects_bad_alpha() {
        assert!(WFunction::gaussian(c64(-0.2, 0.4), c64(0.0, 0.0)).is_err());
    }

    #[test]
    fn tensor_eval() {
        let f = WFunction::gaussian(c64(1.0, 0.0), c64(0.0, 0.0)).unwrap();
        let g = WFunction::gaussian(c64(2.0, 0.0), c64(1.0, 0.0)).unwrap();
        let fg = f.tensor(&g);
        assert_eq!(fg.nvars(), 2);
        let z = [c64(0.3, 0.0), c64(-0.4, 0.0)];
        let expect = f.eval(&[z[0]]) * g.eval(&[z[1]]);
        assert!((fg.eval(&z) - expect).norm() < 1e-14);
    }

    #[test]
    fn exact_cancellation() {
        let f = WFunction::gaussian(c64(1.0, 0.0), c64(0.2, 0.0)).unwrap();
        let d = f.sub(&f);
        assert_eq!(d.terms().len(), 0);
    }
}
