//! Univariate polynomial arithmetic over `F_p`, just enough to construct
//! and verify the irreducible moduli that define extension fields.
//!
//! Coefficients are ascending dense `Vec<u64>` with no trailing zeros.

use super::fp::FpField;
use super::Ring;
use alloc::vec;
use alloc::vec::Vec;

pub fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn deg(a: &[u64]) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub fn mul(f: &FpField, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(out)
}

/// Remainder of `a` modulo monic `m`.
pub fn rem_monic(f: &FpField, a: &[u64], m: &[u64]) -> Vec<u64> {
    let md = m.len() - 1;
    debug_assert_eq!(m[md], 1, "modulus must be monic");
    let mut r: Vec<u64> = a.to_vec();
    while r.len() > md {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - md;
        if lead != 0 {
            for (i, c) in m.iter().enumerate().take(md) {
                let t = f.mul(&lead, c);
                r[shift + i] = f.sub(&r[shift + i], &t);
            }
        }
        r.pop();
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

pub fn gcd(f: &FpField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let lead = *y.last().unwrap();
        let li = f.try_inv(&lead).unwrap();
        let monic: Vec<u64> = y.iter().map(|c| f.mul(c, &li)).collect();
        let r = rem_monic(f, &x, &monic);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().copied() {
        let li = f.try_inv(&l).unwrap();
        x = x.iter().map(|c| f.mul(c, &li)).collect();
    }
    x
}

/// `x^(p^e) mod m` by repeated Frobenius, for monic `m`.
pub fn x_pow_p_iterated(f: &FpField, m: &[u64], e: u32) -> Vec<u64> {
    let mut acc = vec![0, 1]; // x
    for _ in 0..e {
        acc = pow_mod(f, &acc, f.p, m);
    }
    acc
}

pub fn pow_mod(f: &FpField, a: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut base = rem_monic(f, a, m);
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = rem_monic(f, &mul(f, &acc, &base), m);
        }
        base = rem_monic(f, &mul(f, &base, &base), m);
        e >>= 1;
    }
    acc
}

/// Irreducibility over `F_p` by the standard Frobenius criterion:
/// `x^(p^k) = x (mod m)` and `gcd(x^(p^(k/q)) - x, m) = 1` for every prime
/// `q | k`.
pub fn is_irreducible(f: &FpField, m: &[u64]) -> bool {
    let k = (m.len() - 1) as u32;
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let frob_k = x_pow_p_iterated(f, m, k);
    let x = vec![0u64, 1];
    if trim_sub(f, &frob_k, &x) != Vec::<u64>::new() {
        return false;
    }
    for q in prime_divisors(k) {
        let frob = x_pow_p_iterated(f, m, k / q);
        let diff = trim_sub(f, &frob, &x);
        let g = gcd(f, &diff, m);
        if deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

fn trim_sub(f: &FpField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = f.sub(&x, &y);
    }
    trim(out)
}

fn prime_divisors(mut k: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= k {
        if k % d == 0 {
            out.push(d);
            while k % d == 0 {
                k /= d;
            }
        }
        d += 1;
    }
    if k > 1 {
        out.push(k);
    }
    out
}

/// The lexicographically least monic irreducible polynomial of degree `k`
/// over `F_p`: among `x^k + a_{k-1} x^{k-1} + ... + a_0`, minimize the digit
/// string `(a_{k-1}, ..., a_0)` read as a base-`p` integer. Chosen this way
/// for bit-exact reproducibility across implementations.
pub fn least_irreducible(f: &FpField, k: usize) -> Vec<u64> {
    let p = f.p;
    let total = p.checked_pow(k as u32).expect("field too large");
    for code in 0..total {
        let mut m = vec![0u64; k + 1];
        m[k] = 1;
        let mut c = code;
        for i in (0..k).rev() {
            m[i] = c % p;
            c /= p;
        }
        if is_irreducible(f, &m) {
            return m;
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_quadratics_mod3() {
        let f = FpField::new(3);
        // x^2 + 1 is irreducible mod 3; x^2 + 2 = (x-1)(x+1) is not.
        assert!(is_irreducible(&f, &[1, 0, 1]));
        assert!(!is_irreducible(&f, &[2, 0, 1]));
        assert_eq!(least_irreducible(&f, 2), vec![1, 0, 1]);
    }

    #[test]
    fn least_irreducible_is_irreducible_for_crate_degrees() {
        for p in [3u64, 5, 7] {
            let f = FpField::new(p);
            for k in [1usize, 2, 3, 4, 6] {
                let m = least_irreducible(&f, k);
                assert_eq!(m.len(), k + 1);
                assert!(is_irreducible(&f, &m), "p={p} k={k}");
            }
        }
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let f = FpField::new(5);
        let g = gcd(&f, &[1, 1], &[2, 0, 1]);
        assert_eq!(deg(&g), Some(0));
    }
}
