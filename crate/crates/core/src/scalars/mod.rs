//! Exact coefficient arithmetic and generic-rank linear algebra.
//!
//! Three coefficient rings cover everything the rest of the crate needs:
//! the prime field `F_p` ([`FpField`]), extension fields `F_{p^k}`
//! ([`ExtField`], with elements packed into a single `u64`), and the
//! polynomial ring `F_p[c_1, ..., c_{p-1}]` in the conjugacy-class
//! parameters ([`ParamRing`]). All three implement [`Ring`], so the matrix
//! and polynomial code is written once.

pub mod backend;
pub mod extfield;
pub mod fp;
pub mod matrix;
pub mod parampoly;
pub mod unipoly;

pub use backend::{GenericBackend, KernelBasis, KernelResult, RankResult};
pub use extfield::ExtField;
pub use fp::{FpElem, FpField};
pub use matrix::Matrix;
pub use parampoly::{ParamPoly, ParamRing};

use crate::error::AlgError;
use alloc::format;
use alloc::vec::Vec;
use core::fmt::Debug;

/// A commutative ring with enough structure for exact linear algebra.
///
/// Rings are passed around as objects (the `symbolica`/`feanor-math` idiom)
/// because elements of `F_p` or `F_{p^k}` are plain `u64`s that do not know
/// their own modulus.
pub trait Ring: Clone {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Multiplicative inverse, when `a` is a unit.
    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Exact quotient `a / b`, when `b` divides `a` exactly.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    fn from_u64(&self, n: u64) -> Self::Elem;

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// Marker for rings in which every nonzero element is a unit.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        self.try_inv(a).expect("inverse of zero")
    }
}

/// Power sum `sum_{b in F_p} b^N`.
///
/// Equals `-1` exactly when `(p-1) | N` and `N > 0`, and `0` otherwise
/// (with the convention `0^0 = 1`, the `N = 0` sum is `p = 0`).
pub fn power_sum(p: u64, n: u64) -> FpElem {
    let value = if n > 0 && n % (p - 1) == 0 { p - 1 } else { 0 };
    FpElem { value, p }
}

/// The coefficient scalar of the artifact: an element of `F_p`, of an
/// extension `F_{p^k}`, or a polynomial in the class parameters `c_lambda`.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Prime(FpElem),
    Ext { field: ExtField, value: u128 },
    Poly { ring: ParamRing, value: ParamPoly },
}

/// Arithmetic operation selector for [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked ring/field arithmetic on [`Scalar`]s.
///
/// Operands must share a ring; division requires a nonzero divisor (and, in
/// the polynomial ring, exact divisibility).
pub fn field_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, AlgError> {
    match (a, b) {
        (Scalar::Prime(x), Scalar::Prime(y)) => {
            if x.p != y.p {
                return Err(AlgError::ModulusMismatch);
            }
            let f = FpField::new(x.p);
            let value = apply_ring_op(&f, &x.value, &y.value, op)?;
            Ok(Scalar::Prime(FpElem { value, p: x.p }))
        }
        (Scalar::Ext { field: fa, value: x }, Scalar::Ext { field: fb, value: y }) => {
            if fa != fb {
                return Err(AlgError::ModulusMismatch);
            }
            let value = apply_ring_op(fa, x, y, op)?;
            Ok(Scalar::Ext {
                field: fa.clone(),
                value,
            })
        }
        (Scalar::Poly { ring: ra, value: x }, Scalar::Poly { ring: rb, value: y }) => {
            if ra != rb {
                return Err(AlgError::ModulusMismatch);
            }
            let value = apply_ring_op(ra, x, y, op)?;
            Ok(Scalar::Poly {
                ring: ra.clone(),
                value,
            })
        }
        _ => Err(AlgError::ModulusMismatch),
    }
}

fn apply_ring_op<R: Ring>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
    op: ArithOp,
) -> Result<R::Elem, AlgError> {
    Ok(match op {
        ArithOp::Add => ring.add(a, b),
        ArithOp::Sub => ring.sub(a, b),
        ArithOp::Mul => ring.mul(a, b),
        ArithOp::Div => {
            if ring.is_zero(b) {
                return Err(AlgError::DivisionByZero);
            }
            ring.exact_div(a, b).ok_or_else(|| {
                AlgError::InexactDivision(format!("{:?} does not divide {:?}", b, a))
            })?
        }
    })
}

/// Dot product over an arbitrary ring.
pub fn dot<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> R::Elem {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = ring.zero();
    for (x, y) in a.iter().zip(b.iter()) {
        acc = ring.add(&acc, &ring.mul(x, y));
    }
    acc
}

/// All monomial exponent pairs `(a, b)` with `a + b = n`, ordered with the
/// `x1`-exponent descending. This is the basis order used everywhere.
pub fn degree_monomials(n: usize) -> Vec<(usize, usize)> {
    (0..=n).map(|m| (n - m, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_sum_law_exhaustive() {
        // Oracle: direct enumeration of sum_{b in F_p} b^n.
        for p in [3u64, 5, 7] {
            for n in 0..=(4 * (p - 1)) {
                let mut s = 0u64;
                for b in 0..p {
                    let mut t = 1u64 % p;
                    for _ in 0..n {
                        t = t * b % p;
                    }
                    s = (s + t) % p;
                }
                assert_eq!(power_sum(p, n).value, s, "p={p} n={n}");
                let expect = if n > 0 && n % (p - 1) == 0 { p - 1 } else { 0 };
                assert_eq!(s, expect);
            }
        }
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum(3, 2).value, 2);
        assert_eq!(power_sum(5, 3).value, 0);
        assert_eq!(power_sum(7, 0).value, 0);
    }

    #[test]
    fn field_arith_examples() {
        let two3 = Scalar::Prime(FpElem::new(2, 3));
        let got = field_arith(&two3, &two3, ArithOp::Mul).unwrap();
        assert_eq!(got, Scalar::Prime(FpElem::new(1, 3)));

        let two5 = Scalar::Prime(FpElem::new(2, 5));
        let one5 = Scalar::Prime(FpElem::new(1, 5));
        let inv = field_arith(&one5, &two5, ArithOp::Div).unwrap();
        assert_eq!(inv, Scalar::Prime(FpElem::new(3, 5)));

        assert_eq!(
            field_arith(&two3, &two5, ArithOp::Add),
            Err(AlgError::ModulusMismatch)
        );
        let zero5 = Scalar::Prime(FpElem::new(0, 5));
        assert_eq!(
            field_arith(&two5, &zero5, ArithOp::Div),
            Err(AlgError::DivisionByZero)
        );
    }

    #[test]
    fn param_add_then_sub_roundtrip() {
        let ring = ParamRing::new(3);
        let c1 = ring.var(1);
        let c2 = ring.var(2);
        let sum = ring.add(&c1, &c2);
        let back = ring.sub(&sum, &c2);
        assert_eq!(back, c1);
    }
}
