//! Extension fields `F_{p^k}` with elements packed into a single `u128`.
//!
//! An element `sum d_i x^i` (digits `d_i` in `F_p`, `k <= 16`) is stored as
//! sixteen base-256 lanes of a `u128`, digit `i` in byte `i`. Addition and
//! subtraction are three-instruction SWAR operations; multiplication unpacks
//! to bytes, runs schoolbook convolution, and folds with the precomputed
//! reduction row of the modulus. Zero is represented by `0`, so `is_zero`
//! is a plain comparison.
//!
//! The modulus is always the lexicographically least monic irreducible
//! polynomial of its degree, so field elements are bit-exact reproducible
//! across runs and implementations.

use super::fp::FpField;
use super::unipoly;
use super::{Field, Ring};
use crate::rng::Stream;
use alloc::vec::Vec;

const LOW: u128 = 0x0101_0101_0101_0101_0101_0101_0101_0101;
const HIGH: u128 = LOW << 7;

/// The field `F_{p^k}`, `k <= 16`, over an odd prime `p <= 251`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    pub p: u64,
    pub k: usize,
    /// Monic modulus, ascending coefficients, length `k + 1`.
    pub modulus: Vec<u64>,
    /// `x^k = reduction` (the negated low part of the modulus).
    reduction: [u8; 16],
    /// `p^k`, the field order.
    pub order: u64,
}

impl ExtField {
    /// `F_{p^k}` with the lexicographically least irreducible modulus.
    pub fn new(p: u64, k: usize) -> Self {
        assert!(p >= 3 && p <= 127, "p out of supported range");
        assert!(k >= 1 && k <= 16, "extension degree out of range");
        let fp = FpField::new(p);
        let modulus = unipoly::least_irreducible(&fp, k);
        let mut reduction = [0u8; 16];
        for i in 0..k {
            reduction[i] = fp.neg(&modulus[i]) as u8;
        }
        let order = p.checked_pow(k as u32).expect("field order overflows u64");
        ExtField {
            p,
            k,
            modulus,
            reduction,
            order,
        }
    }

    #[inline]
    pub fn from_fp(&self, a: u64) -> u128 {
        debug_assert!(a < self.p);
        a as u128
    }

    /// Pack digit slice (ascending, length <= k) into an element.
    pub fn pack(&self, digits: &[u64]) -> u128 {
        debug_assert!(digits.len() <= self.k);
        let mut out = 0u128;
        for (i, d) in digits.iter().enumerate() {
            debug_assert!(*d < self.p);
            out |= (*d as u128) << (8 * i);
        }
        out
    }

    pub fn digits(&self, a: u128) -> Vec<u64> {
        (0..self.k).map(|i| ((a >> (8 * i)) & 0xff) as u64).collect()
    }

    /// Bijection between elements and `0..order`, ordered lexicographically
    /// by digit string (most significant digit first).
    pub fn from_index(&self, mut idx: u64) -> u128 {
        debug_assert!(idx < self.order);
        let mut digits = [0u64; 16];
        for i in 0..self.k {
            digits[i] = idx % self.p;
            idx /= self.p;
        }
        self.pack(&digits[..self.k])
    }

    pub fn to_index(&self, a: u128) -> u64 {
        let mut idx = 0u64;
        for i in (0..self.k).rev() {
            idx = idx * self.p + ((a >> (8 * i)) & 0xff) as u64;
        }
        idx
    }

    /// Subtract `p` from every lane that reached it.
    #[inline]
    fn normalize(&self, s: u128) -> u128 {
        // Lanes are < 2p <= 254, so adding (128 - p) flags lanes >= p in
        // the high bit without cross-lane carries.
        let flags = (s + (128 - self.p as u128) * LOW) & HIGH;
        s - (flags >> 7) * self.p as u128
    }

    /// Uniform random element.
    pub fn sample(&self, stream: &mut Stream) -> u128 {
        self.from_index(stream.below(self.order))
    }

    /// Uniform random nonzero element.
    pub fn sample_nonzero(&self, stream: &mut Stream) -> u128 {
        self.from_index(stream.nonzero_below(self.order))
    }

    fn mul_impl(&self, a: u128, b: u128) -> u128 {
        if a == 0 || b == 0 {
            return 0;
        }
        let (p, k) = (self.p as u32, self.k);
        let ab = a.to_le_bytes();
        let bb = b.to_le_bytes();
        let mut prod = [0u32; 31];
        for i in 0..k {
            let x = ab[i] as u32;
            if x == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] += x * bb[j] as u32;
            }
        }
        // Fold x^(k+t) = x^t * reduction for t from high to low.
        for t in (k..=2 * k - 2).rev() {
            let c = prod[t] % p;
            if c != 0 {
                for (i, r) in self.reduction.iter().enumerate().take(k) {
                    prod[t - k + i] += c * *r as u32;
                }
            }
            prod[t] = 0;
        }
        let mut out = 0u128;
        for i in 0..k {
            out |= ((prod[i] % p) as u128) << (8 * i);
        }
        out
    }

    /// Square root, if one exists (Tonelli-Shanks; `order` is odd times a
    /// power of two since `p` is odd).
    pub fn sqrt(&self, a: u128) -> Option<u128> {
        if a == 0 {
            return Some(0);
        }
        let q = self.order;
        if self.pow(&a, (q - 1) / 2) != self.one() {
            return None;
        }
        if q % 4 == 3 {
            return Some(self.pow(&a, (q + 1) / 4));
        }
        let mut m = q - 1;
        let mut s = 0u32;
        while m % 2 == 0 {
            m /= 2;
            s += 1;
        }
        // Deterministic nonresidue search in index order.
        let mut z = 0u128;
        for idx in 2..q {
            let cand = self.from_index(idx);
            if self.pow(&cand, (q - 1) / 2) != self.one() && cand != self.zero() {
                z = cand;
                break;
            }
        }
        let mut c = self.pow(&z, m);
        let mut t = self.pow(&a, m);
        let mut r = self.pow(&a, (m + 1) / 2);
        let mut e = s;
        while t != self.one() {
            let mut t2 = t;
            let mut i = 0;
            while t2 != self.one() {
                t2 = self.mul(&t2, &t2);
                i += 1;
                if i == e {
                    return None;
                }
            }
            let mut b = c;
            for _ in 0..e - i - 1 {
                b = self.mul(&b, &b);
            }
            r = self.mul(&r, &b);
            c = self.mul(&b, &b);
            t = self.mul(&t, &c);
            e = i;
        }
        Some(r)
    }

    /// The multiplicative order of `a`, given nonzero `a`.
    pub fn mult_order(&self, a: u128) -> u64 {
        let mut n = self.order - 1;
        for q in factorize(self.order - 1) {
            while n % q == 0 && self.pow(&a, n / q) == self.one() {
                n /= q;
            }
        }
        n
    }

    /// Smallest (in index order) generator of the cyclic group `F_{p^k}^x`.
    pub fn generator(&self) -> u128 {
        for idx in 1..self.order {
            let cand = self.from_index(idx);
            if self.mult_order(cand) == self.order - 1 {
                return cand;
            }
        }
        unreachable!("multiplicative group is cyclic")
    }

    /// A root in this field of a monic degree-2 polynomial over `F_p`
    /// (coefficients `[b, a, 1]` meaning `x^2 + a x + b`). Requires `2 | k`
    /// when the quadratic is irreducible over `F_p`. The smaller root in
    /// index order is returned, making embeddings deterministic.
    pub fn quadratic_root(&self, b: u64, a: u64) -> Option<u128> {
        let fp = FpField::new(self.p);
        let half = fp.try_inv(&2).unwrap();
        // x = (-a +- sqrt(a^2 - 4b)) / 2
        let four = 4 % self.p;
        let disc = fp.sub(&fp.mul(&a, &a), &fp.mul(&four, &b));
        let d = self.sqrt(self.from_fp(disc))?;
        let neg_a = self.from_fp(fp.neg(&a));
        let h = self.from_fp(half);
        let r1 = self.mul(&self.add(&neg_a, &d), &h);
        let r2 = self.mul(&self.sub(&neg_a, &d), &h);
        Some(if self.to_index(r1) <= self.to_index(r2) { r1 } else { r2 })
    }
}

impl Ring for ExtField {
    type Elem = u128;

    #[inline]
    fn zero(&self) -> u128 {
        0
    }
    #[inline]
    fn one(&self) -> u128 {
        1
    }
    #[inline]
    fn add(&self, a: &u128, b: &u128) -> u128 {
        self.normalize(a + b)
    }
    #[inline]
    fn sub(&self, a: &u128, b: &u128) -> u128 {
        // a - b + p per lane, then normalize.
        self.normalize(a + self.p as u128 * LOW_K(self.k) - b)
    }
    #[inline]
    fn neg(&self, a: &u128) -> u128 {
        self.normalize(self.p as u128 * LOW_K(self.k) - a)
    }
    #[inline]
    fn mul(&self, a: &u128, b: &u128) -> u128 {
        self.mul_impl(*a, *b)
    }
    #[inline]
    fn is_zero(&self, a: &u128) -> bool {
        *a == 0
    }

    fn try_inv(&self, a: &u128) -> Option<u128> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(a, self.order - 2))
        }
    }

    fn exact_div(&self, a: &u128, b: &u128) -> Option<u128> {
        self.try_inv(b).map(|bi| self.mul(a, &bi))
    }

    fn from_u64(&self, n: u64) -> u128 {
        self.from_fp(n % self.p)
    }
}

impl Field for ExtField {}

#[allow(non_snake_case)]
#[inline]
fn LOW_K(k: usize) -> u128 {
    if k == 16 {
        LOW
    } else {
        LOW & ((1u128 << (8 * k)) - 1)
    }
}

fn factorize(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f9_arithmetic_matches_polynomial_model() {
        let f = ExtField::new(3, 2);
        assert_eq!(f.modulus, alloc::vec![1, 0, 1]); // x^2 + 1
        let x = f.pack(&[0, 1]);
        // x^2 = -1 = 2
        assert_eq!(f.mul(&x, &x), f.from_fp(2));
        // Exhaustive field axioms on all 9 elements.
        for i in 0..9 {
            let a = f.from_index(i);
            assert_eq!(f.to_index(a), i);
            for j in 0..9 {
                let b = f.from_index(j);
                assert_eq!(f.add(&a, &b), f.add(&b, &a));
                assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
                assert_eq!(f.sub(&f.add(&a, &b), &b), a);
                if b != 0 {
                    let q = f.exact_div(&a, &b).unwrap();
                    assert_eq!(f.mul(&q, &b), a);
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_prime_subfield() {
        for (p, k) in [(3u64, 4usize), (5, 3), (7, 2)] {
            let f = ExtField::new(p, k);
            for a in 0..p {
                let e = f.from_fp(a);
                assert_eq!(f.pow(&e, p), e);
            }
        }
    }

    #[test]
    fn sqrt_roundtrip() {
        let f = ExtField::new(5, 4);
        let mut stream = Stream::new(1, 0);
        for _ in 0..50 {
            let a = f.sample(&mut stream);
            let sq = f.mul(&a, &a);
            let r = f.sqrt(sq).expect("square must have a root");
            assert_eq!(f.mul(&r, &r), sq);
        }
    }

    #[test]
    fn generator_has_full_order() {
        let f = ExtField::new(7, 2);
        let g = f.generator();
        assert_eq!(f.mult_order(g), 48);
    }

    #[test]
    fn quadratic_root_embeds_f_p2() {
        // Root of the F_9 modulus x^2 + 1 inside F_{3^4}.
        let big = ExtField::new(3, 4);
        let r = big.quadratic_root(1, 0).unwrap();
        assert_eq!(big.mul(&r, &r), big.from_fp(2));
    }

    #[test]
    fn large_degree_field_sane() {
        let f = ExtField::new(3, 16);
        let mut stream = Stream::new(9, 9);
        let a = f.sample(&mut stream);
        let b = f.sample_nonzero(&mut stream);
        let ab = f.mul(&a, &b);
        assert_eq!(f.exact_div(&ab, &b), Some(a));
        assert_eq!(f.pow(&b, f.order - 1), f.one());
    }
}
