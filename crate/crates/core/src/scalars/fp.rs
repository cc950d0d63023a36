//! The prime field `F_p`.
//!
//! Elements are stored as raw `u64` residues; the [`FpField`] ring object
//! carries the modulus. [`FpElem`] is the self-describing wrapper used at
//! API boundaries where mixing moduli must be detected.

use super::{Field, Ring};

/// An element of `F_p` together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FpElem {
    pub value: u64,
    pub p: u64,
}

impl FpElem {
    pub fn new(value: u64, p: u64) -> Self {
        assert!(p >= 3 && is_prime(p), "modulus must be an odd prime >= 3");
        FpElem { value: value % p, p }
    }
}

/// The field `F_p` as a ring object. Elements are `u64` in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpField {
    pub p: u64,
}

impl FpField {
    /// Build `F_p`. Panics when `p` is not prime; the rest of the crate
    /// additionally requires `p` odd, which callers validate at their
    /// entry points.
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && is_prime(p), "modulus must be prime");
        FpField { p }
    }

    #[inline]
    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

impl Ring for FpField {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }
    #[inline]
    fn one(&self) -> u64 {
        1 % self.p
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        // p stays far below 2^32 in this crate, so no widening is needed.
        a * b % self.p
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn try_inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    fn exact_div(&self, a: &u64, b: &u64) -> Option<u64> {
        self.try_inv(b).map(|bi| self.mul(a, &bi))
    }

    #[inline]
    fn from_u64(&self, n: u64) -> u64 {
        n % self.p
    }
}

impl Field for FpField {}

/// Deterministic Miller-Rabin, valid for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_two_in_f5() {
        let f = FpField::new(5);
        assert_eq!(f.try_inv(&2), Some(3));
    }

    #[test]
    fn field_axioms_small() {
        for p in [3u64, 5, 7] {
            let f = FpField::new(p);
            for a in 0..p {
                for b in 0..p {
                    assert_eq!(f.add(&a, &b), (a + b) % p);
                    assert_eq!(f.mul(&a, &b), a * b % p);
                    assert_eq!(f.add(&f.sub(&a, &b), &b), a);
                    if b != 0 {
                        let q = f.exact_div(&a, &b).unwrap();
                        assert_eq!(f.mul(&q, &b), a);
                    }
                }
            }
        }
    }

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(3) && is_prime(7) && is_prime(10_000_019));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(91));
    }
}
