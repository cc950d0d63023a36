//! `GL_2(F_p)`, its actions on `h` and `h*`, and the parametrized
//! enumeration of reflection conjugacy classes.
//!
//! A reflection is stored as the pair `alpha (x) alpha_vee` with
//! `(alpha, alpha_vee) != 1` rather than as a matrix, because every Dunkl
//! operator summand consumes `alpha` and `alpha_vee` directly. The class
//! label is `lambda = 1 - (alpha_vee, alpha)`, equal to `det(s)^{-1}`.

use crate::error::AlgError;
use crate::scalars::{ExtField, FpField, Ring};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

/// An element of `GL_2(F_p)` as the matrix of its action on `h` in the
/// tautological basis `y1, y2` (columns are images of basis vectors).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupElement {
    pub p: u64,
    pub m: [[u64; 2]; 2],
}

impl GroupElement {
    pub fn new(p: u64, m: [[u64; 2]; 2]) -> Result<Self, AlgError> {
        let g = GroupElement {
            p,
            m: [[m[0][0] % p, m[0][1] % p], [m[1][0] % p, m[1][1] % p]],
        };
        if g.det() == 0 {
            return Err(AlgError::InvalidInput(format!(
                "matrix {:?} is singular mod {p}",
                m
            )));
        }
        Ok(g)
    }

    pub fn identity(p: u64) -> Self {
        GroupElement { p, m: [[1, 0], [0, 1]] }
    }

    pub fn det(&self) -> u64 {
        let f = FpField::new(self.p);
        f.sub(
            &f.mul(&self.m[0][0], &self.m[1][1]),
            &f.mul(&self.m[0][1], &self.m[1][0]),
        )
    }

    pub fn trace(&self) -> u64 {
        (self.m[0][0] + self.m[1][1]) % self.p
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        let f = FpField::new(self.p);
        let mut m = [[0u64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    m[i][j] = f.add(&m[i][j], &f.mul(&self.m[i][k], &other.m[k][j]));
                }
            }
        }
        GroupElement { p: self.p, m }
    }

    pub fn inverse(&self) -> GroupElement {
        let f = FpField::new(self.p);
        let di = f.try_inv(&self.det()).expect("group element is invertible");
        let m = [
            [f.mul(&self.m[1][1], &di), f.mul(&f.neg(&self.m[0][1]), &di)],
            [f.mul(&f.neg(&self.m[1][0]), &di), f.mul(&self.m[0][0], &di)],
        ];
        GroupElement { p: self.p, m }
    }

    pub fn transpose(&self) -> GroupElement {
        GroupElement {
            p: self.p,
            m: [[self.m[0][0], self.m[1][0]], [self.m[0][1], self.m[1][1]]],
        }
    }

    /// Matrix of the action on `h*` written in `x1, x2`: `(g^t)^{-1}`.
    pub fn act_on_hstar_matrix(&self) -> GroupElement {
        self.transpose().inverse()
    }

    /// `g . y` for a coordinate vector `y` in `h`.
    pub fn apply(&self, y: &[u64; 2]) -> [u64; 2] {
        let f = FpField::new(self.p);
        [
            f.add(&f.mul(&self.m[0][0], &y[0]), &f.mul(&self.m[0][1], &y[1])),
            f.add(&f.mul(&self.m[1][0], &y[0]), &f.mul(&self.m[1][1], &y[1])),
        ]
    }

    pub fn conjugate_by(&self, g: &GroupElement) -> GroupElement {
        g.mul(self).mul(&g.inverse())
    }

    /// `rank(1 - g)` on `h`.
    pub fn rank_one_minus(&self) -> usize {
        let f = FpField::new(self.p);
        let a = f.sub(&1, &self.m[0][0]);
        let b = f.neg(&self.m[0][1]);
        let c = f.neg(&self.m[1][0]);
        let d = f.sub(&1, &self.m[1][1]);
        let det = f.sub(&f.mul(&a, &d), &f.mul(&b, &c));
        if det != 0 {
            2
        } else if a != 0 || b != 0 || c != 0 || d != 0 {
            1
        } else {
            0
        }
    }

    /// p-regular means the order is coprime to p: for `GL_2`, scalar or
    /// distinct eigenvalues (nonzero discriminant).
    pub fn is_p_regular(&self) -> bool {
        let f = FpField::new(self.p);
        if self.m[0][1] == 0 && self.m[1][0] == 0 && self.m[0][0] == self.m[1][1] {
            return true;
        }
        let t = self.trace();
        let four = 4 % self.p;
        let disc = f.sub(&f.mul(&t, &t), &f.mul(&four, &self.det()));
        disc != 0
    }

    /// Eigenvalues of the `h`-action in `F_{p^2}`, deterministic order.
    /// Rejects elements that are not p-regular.
    pub fn eigenvalues(&self, ext2: &ExtField) -> Result<(u128, u128), AlgError> {
        debug_assert_eq!(ext2.p, self.p);
        debug_assert_eq!(ext2.k, 2);
        if !self.is_p_regular() {
            return Err(AlgError::NonPRegular);
        }
        let f = FpField::new(self.p);
        let t = self.trace();
        let d = self.det();
        // x^2 - t x + d = 0
        let root = ext2
            .quadratic_root(d, f.neg(&t))
            .expect("quadratic always splits over F_{p^2}");
        let lam = root;
        let mu = ext2.sub(&ext2.from_fp(t), &lam);
        Ok((lam, mu))
    }
}

/// Generators of `GL_2(F_p)`: the two elementary unipotents and a
/// diagonal primitive-root torus element.
pub fn generators(p: u64) -> Vec<GroupElement> {
    let zeta = primitive_root(p);
    alloc::vec![
        GroupElement { p, m: [[1, 1], [0, 1]] },
        GroupElement { p, m: [[1, 0], [1, 1]] },
        GroupElement { p, m: [[zeta, 0], [0, 1]] },
    ]
}

/// Smallest primitive root mod p.
pub fn primitive_root(p: u64) -> u64 {
    let f = FpField::new(p);
    'cand: for g in 2..p {
        let mut n = p - 1;
        let mut divisors = Vec::new();
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                divisors.push(d);
                while n % d == 0 {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            divisors.push(n);
        }
        for q in divisors {
            if f.pow(&g, (p - 1) / q) == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("F_p^x is cyclic")
}

/// A reflection `alpha (x) alpha_vee` with `(alpha, alpha_vee) != 1`;
/// `alpha` lives in `h*` (coordinates in `x1, x2`), `alpha_vee` in `h`
/// (coordinates in `y1, y2`), and `lambda = 1 - (alpha_vee, alpha)` is the
/// conjugacy class label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reflection {
    pub p: u64,
    pub alpha: [u64; 2],
    pub alpha_vee: [u64; 2],
    pub lambda: u64,
}

impl Reflection {
    pub fn new(p: u64, alpha: [u64; 2], alpha_vee: [u64; 2]) -> Result<Self, AlgError> {
        let f = FpField::new(p);
        let pairing = f.add(
            &f.mul(&alpha[0], &alpha_vee[0]),
            &f.mul(&alpha[1], &alpha_vee[1]),
        );
        let lambda = f.sub(&1, &pairing);
        if lambda == 0 {
            return Err(AlgError::InvalidInput(format!(
                "(alpha, alpha_vee) = 1 does not define a reflection: {alpha:?}, {alpha_vee:?}"
            )));
        }
        if alpha == [0, 0] || alpha_vee == [0, 0] {
            return Err(AlgError::InvalidInput(
                "alpha and alpha_vee must be nonzero".into(),
            ));
        }
        Ok(Reflection { p, alpha, alpha_vee, lambda })
    }

    /// The matrix of the action on `h`: `y -> y + (y, alpha)/lambda * alpha_vee`,
    /// i.e. `I + alpha_vee alpha^t / lambda`.
    pub fn to_matrix(&self) -> GroupElement {
        let f = FpField::new(self.p);
        let li = f.try_inv(&self.lambda).unwrap();
        let mut m = [[0u64; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let outer = f.mul(&self.alpha_vee[i], &self.alpha[j]);
                *entry = f.add(&if i == j { 1 } else { 0 }, &f.mul(&outer, &li));
            }
        }
        GroupElement { p: self.p, m }
    }
}

/// All reflections of `GL_2(F_p)` bucketed by conjugacy class label, in
/// the standard parametrization order: the `(1, b) (x) (1-lambda-bd, d)`
/// family with `b` major and `d` minor, then the `(0, 1) (x) (a, 1-lambda)`
/// family.
pub fn enumerate_reflections(p: u64) -> BTreeMap<u64, Vec<Reflection>> {
    let f = FpField::new(p);
    let mut out = BTreeMap::new();
    for lambda in 1..p {
        let mut class = Vec::new();
        let one_minus = f.sub(&1, &lambda);
        for b in 0..p {
            for d in 0..p {
                if lambda == 1 && d == 0 {
                    continue;
                }
                let av0 = f.sub(&one_minus, &f.mul(&b, &d));
                let r = Reflection::new(p, [1, b], [av0, d]).expect("parametrized reflection");
                debug_assert_eq!(r.lambda, lambda);
                class.push(r);
            }
        }
        for a in 0..p {
            if lambda == 1 && a == 0 {
                continue;
            }
            let r = Reflection::new(p, [0, 1], [a, one_minus]).expect("parametrized reflection");
            debug_assert_eq!(r.lambda, lambda);
            class.push(r);
        }
        out.insert(lambda, class);
    }
    out
}

/// Every invertible 2x2 matrix over `F_p`, for brute-force oracles.
pub fn all_group_elements(p: u64) -> Vec<GroupElement> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if let Ok(g) = GroupElement::new(p, [[a, b], [c, d]]) {
                        out.push(g);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Stream;
    use std::collections::BTreeSet;

    /// Brute-force scan: reflections are exactly the elements with
    /// rank(1 - s) = 1, bucketed by det(s)^{-1}.
    fn brute_force_classes(p: u64) -> BTreeMap<u64, BTreeSet<GroupElement>> {
        let f = FpField::new(p);
        let mut out: BTreeMap<u64, BTreeSet<GroupElement>> = BTreeMap::new();
        for g in all_group_elements(p) {
            if g.rank_one_minus() == 1 {
                let lambda = f.try_inv(&g.det()).unwrap();
                out.entry(lambda).or_default().insert(g);
            }
        }
        out
    }

    #[test]
    fn class_sizes_p3_p5() {
        let r3 = enumerate_reflections(3);
        assert_eq!(r3[&2].len(), 12);
        assert_eq!(r3[&1].len(), 8);
        let r5 = enumerate_reflections(5);
        for l in [2u64, 3, 4] {
            assert_eq!(r5[&l].len(), 30);
        }
        assert_eq!(r5[&1].len(), 24);
    }

    #[test]
    fn enumeration_matches_brute_force_scan() {
        for p in [3u64, 5, 7] {
            let brute = brute_force_classes(p);
            let enumerated = enumerate_reflections(p);
            let mut total = 0;
            for (lambda, class) in &enumerated {
                let matrices: BTreeSet<GroupElement> =
                    class.iter().map(|r| r.to_matrix()).collect();
                assert_eq!(matrices.len(), class.len(), "distinct matrices");
                assert_eq!(&matrices, &brute[lambda], "p={p} lambda={lambda}");
                total += matrices.len();
            }
            let brute_total: usize = brute.values().map(BTreeSet::len).sum();
            assert_eq!(total, brute_total);
        }
    }

    #[test]
    fn reflection_matrix_examples() {
        // p=3, alpha = x1, alpha_vee = 2*y1 (lambda = 2) -> diag(2, 1) on h.
        let r = Reflection::new(3, [1, 0], [2, 0]).unwrap();
        assert_eq!(r.lambda, 2);
        assert_eq!(r.to_matrix().m, [[2, 0], [0, 1]]);

        // Unipotent: alpha = x2, alpha_vee = a*y1 -> [[1, a], [0, 1]].
        for a in 1..3 {
            let r = Reflection::new(3, [0, 1], [a, 0]).unwrap();
            assert_eq!(r.lambda, 1);
            assert_eq!(r.to_matrix().m, [[1, a], [0, 1]]);
        }

        // The identity is never produced.
        for (_, class) in enumerate_reflections(5) {
            for r in class {
                assert_ne!(r.to_matrix(), GroupElement::identity(5));
            }
        }
    }

    #[test]
    fn conjugation_preserves_class() {
        let f = FpField::new(5);
        let all = all_group_elements(5);
        let mut stream = Stream::new(11, 0);
        for (lambda, class) in enumerate_reflections(5) {
            let matrices: BTreeSet<GroupElement> = class.iter().map(|r| r.to_matrix()).collect();
            for r in class.iter().take(6) {
                for _ in 0..20 {
                    let g = &all[stream.below(all.len() as u64) as usize];
                    let conj = r.to_matrix().conjugate_by(g);
                    assert!(matrices.contains(&conj));
                    assert_eq!(f.try_inv(&conj.det()).unwrap(), lambda);
                }
            }
        }
    }

    #[test]
    fn hstar_action_matrix() {
        // identity -> identity; diag(a, b) -> diag(a^-1, b^-1)
        let id = GroupElement::identity(7);
        assert_eq!(id.act_on_hstar_matrix(), id);
        let f = FpField::new(7);
        let g = GroupElement::new(7, [[3, 0], [0, 5]]).unwrap();
        let gs = g.act_on_hstar_matrix();
        assert_eq!(gs.m[0][0], f.try_inv(&3).unwrap());
        assert_eq!(gs.m[1][1], f.try_inv(&5).unwrap());

        // Functoriality on random pairs: (gh)* = g* h*.
        let all = all_group_elements(5);
        let mut stream = Stream::new(3, 1);
        for _ in 0..10 {
            let g = &all[stream.below(all.len() as u64) as usize];
            let h = &all[stream.below(all.len() as u64) as usize];
            let lhs = g.mul(h).act_on_hstar_matrix();
            let rhs = g.act_on_hstar_matrix().mul(&h.act_on_hstar_matrix());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn lambda_equals_inverse_determinant() {
        for p in [3u64, 5] {
            let f = FpField::new(p);
            for (lambda, class) in enumerate_reflections(p) {
                for r in class {
                    let m = r.to_matrix();
                    assert_eq!(m.rank_one_minus(), 1);
                    assert_eq!(f.try_inv(&m.det()).unwrap(), lambda);
                }
            }
        }
    }

    #[test]
    fn eigenvalues_of_p_regular_elements() {
        let ext2 = ExtField::new(5, 2);
        let g = GroupElement::new(5, [[2, 0], [0, 3]]).unwrap();
        let (l, m) = g.eigenvalues(&ext2).unwrap();
        let vals = [ext2.to_index(l), ext2.to_index(m)];
        assert!(vals.contains(&ext2.to_index(ext2.from_fp(2))));
        assert!(vals.contains(&ext2.to_index(ext2.from_fp(3))));

        // Unipotent elements are rejected.
        let u = GroupElement::new(5, [[1, 1], [0, 1]]).unwrap();
        assert_eq!(u.eigenvalues(&ext2), Err(AlgError::NonPRegular));

        // A non-split torus element: eigenvalues satisfy the char poly.
        let ns = GroupElement::new(5, [[0, 3], [1, 1]]).unwrap();
        assert!(ns.is_p_regular());
        let (l, m) = ns.eigenvalues(&ext2).unwrap();
        assert_eq!(ext2.add(&l, &m), ext2.from_fp(ns.trace()));
        assert_eq!(ext2.mul(&l, &m), ext2.from_fp(ns.det()));
    }
}
