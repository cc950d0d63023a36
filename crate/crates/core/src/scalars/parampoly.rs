//! Multivariate polynomials over `F_p` in the conjugacy-class parameters
//! `c_1, ..., c_{p-1}` (one variable per class of reflections).
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors in lex order;
//! no zero coefficients are ever stored. The ring supports the exact
//! division needed by fraction-free (Bareiss) elimination and evaluation
//! at points of any extension field.

use super::{Field, Ring};
use alloc::vec;
use alloc::vec::Vec;
use alloc::{collections::BTreeMap, string::String};
use core::fmt::Write;

pub type Exponents = Vec<u16>;

/// A polynomial in the class parameters; see [`ParamRing`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamPoly {
    /// Exponent vector -> nonzero coefficient in `F_p`.
    pub terms: BTreeMap<Exponents, u64>,
}

impl ParamPoly {
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    /// Max degree in any single variable.
    pub fn max_var_degree(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|e| e.iter().map(|&x| x as u32))
            .max()
            .unwrap_or(0)
    }
}

/// The polynomial ring `F_p[c_1, ..., c_nvars]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamRing {
    pub p: u64,
    pub nvars: usize,
}

impl ParamRing {
    /// The parameter ring of `H_{t,c}(GL_2(F_p))`: one variable per
    /// reflection class, `nvars = p - 1`.
    pub fn new(p: u64) -> Self {
        ParamRing {
            p,
            nvars: (p - 1) as usize,
        }
    }

    pub fn with_vars(p: u64, nvars: usize) -> Self {
        ParamRing { p, nvars }
    }

    /// The variable `c_lambda`, `1 <= lambda <= nvars`.
    pub fn var(&self, lambda: u64) -> ParamPoly {
        assert!(lambda >= 1 && (lambda as usize) <= self.nvars);
        let mut e = vec![0u16; self.nvars];
        e[lambda as usize - 1] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, 1);
        ParamPoly { terms }
    }

    pub fn constant(&self, v: u64) -> ParamPoly {
        let mut terms = BTreeMap::new();
        if v % self.p != 0 {
            terms.insert(vec![0u16; self.nvars], v % self.p);
        }
        ParamPoly { terms }
    }

    pub fn scale(&self, a: &ParamPoly, s: u64) -> ParamPoly {
        let s = s % self.p;
        if s == 0 {
            return self.zero();
        }
        ParamPoly {
            terms: a
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * s % self.p))
                .collect(),
        }
    }

    /// Evaluate at a point of a field `F` containing `F_p`; `point[i]` is
    /// the value of variable `i + 1`.
    pub fn eval<F: Field>(&self, a: &ParamPoly, field: &F, point: &[F::Elem]) -> F::Elem {
        debug_assert_eq!(point.len(), self.nvars);
        let mut acc = field.zero();
        for (e, c) in &a.terms {
            let mut term = field.from_u64(*c);
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = field.mul(&term, &field.pow(&point[i], exp as u64));
                }
            }
            acc = field.add(&acc, &term);
        }
        acc
    }

    fn lead<'a>(&self, a: &'a ParamPoly) -> Option<(&'a Exponents, u64)> {
        a.terms.iter().next_back().map(|(e, c)| (e, *c))
    }

    /// Human-readable rendering (`c1^2*c2 + 2`), deterministic term order.
    pub fn render(&self, a: &ParamPoly) -> String {
        if a.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (idx, (e, c)) in a.terms.iter().rev().enumerate() {
            if idx > 0 {
                out.push_str(" + ");
            }
            let is_const = e.iter().all(|&x| x == 0);
            if *c != 1 || is_const {
                let _ = write!(out, "{c}");
                if !is_const {
                    out.push('*');
                }
            }
            let mut first = true;
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if !first {
                    out.push('*');
                }
                first = false;
                let _ = write!(out, "c{}", i + 1);
                if exp > 1 {
                    let _ = write!(out, "^{exp}");
                }
            }
        }
        out
    }
}

impl Ring for ParamRing {
    type Elem = ParamPoly;

    fn zero(&self) -> ParamPoly {
        ParamPoly {
            terms: BTreeMap::new(),
        }
    }

    fn one(&self) -> ParamPoly {
        self.constant(1)
    }

    fn add(&self, a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
        let mut terms = a.terms.clone();
        for (e, c) in &b.terms {
            let entry = terms.entry(e.clone()).or_insert(0);
            *entry = (*entry + c) % self.p;
            if *entry == 0 {
                terms.remove(e);
            }
        }
        ParamPoly { terms }
    }

    fn sub(&self, a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &ParamPoly) -> ParamPoly {
        ParamPoly {
            terms: a
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), self.p - c))
                .collect(),
        }
    }

    fn mul(&self, a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
        let mut terms: BTreeMap<Exponents, u64> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponents = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                let c = ca * cb % self.p;
                let entry = terms.entry(e).or_insert(0);
                *entry = (*entry + c) % self.p;
            }
        }
        terms.retain(|_, c| *c != 0);
        ParamPoly { terms }
    }

    fn is_zero(&self, a: &ParamPoly) -> bool {
        a.terms.is_empty()
    }

    fn try_inv(&self, a: &ParamPoly) -> Option<ParamPoly> {
        let (e, c) = self.lead(a)?;
        if !e.iter().all(|&x| x == 0) {
            return None;
        }
        let fp = super::FpField::new(self.p);
        Some(self.constant(fp.try_inv(&c)?))
    }

    /// Exact multivariate division in lex order. Returns `None` unless `b`
    /// divides `a` exactly; the quotient is unique because the ring is a
    /// domain.
    fn exact_div(&self, a: &ParamPoly, b: &ParamPoly) -> Option<ParamPoly> {
        let (lb_e, lb_c) = self.lead(b)?;
        let lb_e = lb_e.clone();
        let fp = super::FpField::new(self.p);
        let lb_inv = fp.try_inv(&lb_c)?;
        let mut rem = a.clone();
        let mut quo = self.zero();
        while let Some((lr_e, lr_c)) = self.lead(&rem) {
            let mut qe = Vec::with_capacity(self.nvars);
            for (x, y) in lr_e.iter().zip(lb_e.iter()) {
                if x < y {
                    return None;
                }
                qe.push(x - y);
            }
            let qc = lr_c * lb_inv % self.p;
            let mut qterm = self.zero();
            qterm.terms.insert(qe, qc);
            quo = self.add(&quo, &qterm);
            rem = self.sub(&rem, &self.mul(&qterm, b));
        }
        Some(quo)
    }

    fn from_u64(&self, n: u64) -> ParamPoly {
        self.constant(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ExtField;

    #[test]
    fn product_and_exact_division() {
        let r = ParamRing::new(5);
        let c1 = r.var(1);
        let c2 = r.var(2);
        // (c1 + c2)(c1 - c2) = c1^2 - c2^2
        let s = r.add(&c1, &c2);
        let d = r.sub(&c1, &c2);
        let prod = r.mul(&s, &d);
        let sq = r.sub(&r.mul(&c1, &c1), &r.mul(&c2, &c2));
        assert_eq!(prod, sq);
        assert_eq!(r.exact_div(&prod, &s), Some(d.clone()));
        // c1 + 1 does not divide c1^2 - c2^2.
        let nd = r.add(&c1, &r.one());
        assert_eq!(r.exact_div(&prod, &nd), None);
    }

    #[test]
    fn evaluation_matches_direct_substitution() {
        let r = ParamRing::new(3);
        let f = ExtField::new(3, 2);
        // 2*c1^2*c2 + c2 at c1 = x, c2 = 2
        let poly = r.add(
            &r.scale(&r.mul(&r.mul(&r.var(1), &r.var(1)), &r.var(2)), 2),
            &r.var(2),
        );
        let x = f.pack(&[0, 1]);
        let two = f.from_fp(2);
        let got = r.eval(&poly, &f, &[x, two]);
        // 2*x^2*2 + 2 = 4*(-1) + 2 = -2 = 1
        assert_eq!(got, f.from_fp(1));
    }

    #[test]
    fn render_is_stable() {
        let r = ParamRing::new(3);
        let poly = r.add(&r.mul(&r.var(1), &r.var(2)), &r.constant(2));
        assert_eq!(r.render(&poly), "c1*c2 + 2");
    }
}
