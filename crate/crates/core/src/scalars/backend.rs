//! Generic-rank linear algebra over the parameter ring.
//!
//! "Generic" means: the rank of a matrix of polynomials in the class
//! parameters `c_lambda` over the rational function field, i.e. the rank
//! attained on a Zariski-open set of parameter values.
//!
//! Two backends realize this. The `Exact` backend computes symbolically by
//! fraction-free elimination. The `Random` backend evaluates all
//! parameters at uniform points of `F_{p^k}` and takes the maximum rank
//! over several samples, a lower bound with quantified failure
//! probability.
//!
//! Both backends share a certification shortcut: any vector killed by
//! every coefficient matrix of the polynomial matrix lies in the kernel at
//! every parameter value, so when a single evaluation exhibits rank equal
//! to `cols - dim(common kernel)`, the generic kernel *equals* the common
//! kernel and the answer is exact regardless of backend. The kernels
//! appearing in this crate's module theory are spanned by parameter-free
//! vectors, so in practice the shortcut nearly always fires and even the
//! Random backend returns certified results.

use super::extfield::ExtField;
use super::fp::FpField;
use super::matrix::{self, Matrix};
use super::parampoly::{ParamPoly, ParamRing};
use super::Ring;
use crate::error::AlgError;
use crate::rng::{derive_seed, Stream};
use alloc::format;
use alloc::vec::Vec;

/// Backend selector for generic-rank computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendMode {
    /// Symbolic fraction-free elimination over the polynomial ring.
    Exact,
    /// Seeded random evaluation in `F_{p^k}`.
    Random,
}

/// Configuration for generic-rank computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenericBackend {
    pub mode: BackendMode,
    /// Extension degree `k` used for random evaluation.
    pub ext_degree: usize,
    /// Number of independent evaluation samples.
    pub samples: usize,
    /// Base seed; every derived stream mixes in a context tag.
    pub seed: u64,
}

impl GenericBackend {
    pub fn exact(seed: u64) -> Self {
        GenericBackend {
            mode: BackendMode::Exact,
            ext_degree: 16,
            samples: 3,
            seed,
        }
    }

    pub fn random(seed: u64) -> Self {
        GenericBackend {
            mode: BackendMode::Random,
            ext_degree: 16,
            samples: 3,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), AlgError> {
        if self.mode == BackendMode::Random {
            if self.ext_degree < 12 {
                return Err(AlgError::InvalidBackend(format!(
                    "random mode requires ext_degree >= 12, got {}",
                    self.ext_degree
                )));
            }
            if self.samples < 3 {
                return Err(AlgError::InvalidBackend(format!(
                    "random mode requires samples >= 3, got {}",
                    self.samples
                )));
            }
        }
        if self.ext_degree < 1 || self.ext_degree > 16 {
            return Err(AlgError::InvalidBackend(format!(
                "ext_degree must be in 1..=16, got {}",
                self.ext_degree
            )));
        }
        Ok(())
    }
}

/// Rank of a polynomial matrix at generic parameter values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankResult {
    pub rank: usize,
    /// Exact (proved), as opposed to a probabilistic lower bound.
    pub certified: bool,
    /// Random-mode samples disagreed; caller may escalate to Exact.
    pub warning: bool,
    pub seed: u64,
}

/// A kernel basis in whichever ring the backend produced it.
#[derive(Debug, Clone, PartialEq)]
pub enum KernelBasis {
    /// Parameter-free basis over `F_p`; columns are kernel vectors valid
    /// at every parameter value.
    Constant(Matrix<u64>),
    /// Basis over `F_{p^k}` at one evaluated parameter point.
    Evaluated { field: ExtField, basis: Matrix<u128> },
    /// Basis with polynomial entries over the function field.
    Symbolic(Matrix<ParamPoly>),
}

impl KernelBasis {
    pub fn dim(&self) -> usize {
        match self {
            KernelBasis::Constant(m) => m.cols,
            KernelBasis::Evaluated { basis, .. } => basis.cols,
            KernelBasis::Symbolic(m) => m.cols,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KernelResult {
    pub dim: usize,
    pub basis: KernelBasis,
    pub rank: RankResult,
}

/// A matrix whose entries are affine-linear in the class parameters:
/// `constant + sum_lambda c_lambda * parts[lambda - 1]`, all blocks over
/// `F_p`. Dunkl operator matrices have exactly this shape, and composing
/// with parameter-free projections preserves it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixPencil {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub constant: Matrix<u64>,
    pub parts: Vec<Matrix<u64>>,
}

impl MatrixPencil {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        let fp = FpField::new(p);
        let nparts = (p - 1) as usize;
        MatrixPencil {
            p,
            rows,
            cols,
            constant: matrix::zero(&fp, rows, cols),
            parts: (0..nparts).map(|_| matrix::zero(&fp, rows, cols)).collect(),
        }
    }

    /// Evaluate at `point[lambda - 1] = value of c_lambda` in `field`.
    pub fn eval(&self, field: &ExtField, point: &[u128]) -> Matrix<u128> {
        debug_assert_eq!(point.len(), self.parts.len());
        let mut out = self.constant.map(|&e| field.from_fp(e));
        for (part, s) in self.parts.iter().zip(point.iter()) {
            if field.is_zero(s) {
                continue;
            }
            for r in 0..self.rows {
                for c in 0..self.cols {
                    let e = *part.at(r, c);
                    if e != 0 {
                        let t = field.mul(s, &field.from_fp(e));
                        let cur = out.at(r, c);
                        out.set(r, c, field.add(cur, &t));
                    }
                }
            }
        }
        out
    }

    /// Materialize as a matrix of polynomials.
    pub fn to_symbolic(&self, ring: &ParamRing) -> Matrix<ParamPoly> {
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            let mut e = ring.constant(*self.constant.at(r, c));
            for (idx, part) in self.parts.iter().enumerate() {
                let coef = *part.at(r, c);
                if coef != 0 {
                    let t = ring.scale(&ring.var(idx as u64 + 1), coef);
                    e = ring.add(&e, &t);
                }
            }
            e
        })
    }

    /// Left-compose with a parameter-free matrix: `m * self`.
    pub fn compose_left(&self, m: &Matrix<u64>) -> MatrixPencil {
        let fp = FpField::new(self.p);
        MatrixPencil {
            p: self.p,
            rows: m.rows,
            cols: self.cols,
            constant: matrix::mat_mul(&fp, m, &self.constant),
            parts: self.parts.iter().map(|pt| matrix::mat_mul(&fp, m, pt)).collect(),
        }
    }

    /// Apply to a parameter-free vector, returning the constant component
    /// and one component per parameter. The image is
    /// `components.0 + sum c_lambda * components.1[lambda-1]`.
    pub fn apply_constant_vec(&self, v: &[u64]) -> (Vec<u64>, Vec<Vec<u64>>) {
        let fp = FpField::new(self.p);
        let constant = matrix::mat_vec(&fp, &self.constant, v);
        let parts = self.parts.iter().map(|pt| matrix::mat_vec(&fp, pt, v)).collect();
        (constant, parts)
    }

    pub fn vstack(&self, other: &MatrixPencil) -> MatrixPencil {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.p, other.p);
        MatrixPencil {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols,
            constant: self.constant.vstack(&other.constant),
            parts: self
                .parts
                .iter()
                .zip(other.parts.iter())
                .map(|(a, b)| a.vstack(b))
                .collect(),
        }
    }

    /// Vectors annihilated at *every* parameter value: the kernel of all
    /// coefficient blocks stacked over `F_p`.
    pub fn common_kernel(&self) -> Matrix<u64> {
        let fp = FpField::new(self.p);
        let mut stack = self.constant.clone();
        for part in &self.parts {
            stack = stack.vstack(part);
        }
        matrix::kernel_basis(&fp, &stack)
    }

    /// Largest entry degree in `c` (0 or 1 for a pencil).
    pub fn degree_bound(&self) -> u32 {
        if self.parts.iter().any(|m| (0..m.rows).any(|r| m.row(r).iter().any(|&e| e != 0))) {
            1
        } else {
            0
        }
    }
}

/// Extension degrees tried, cheapest first, when hunting for a
/// certifying evaluation point.
fn certificate_ladder(backend: &GenericBackend) -> Vec<usize> {
    let mut ladder = alloc::vec![1usize, 2, 4];
    if !ladder.contains(&backend.ext_degree) {
        ladder.push(backend.ext_degree);
    }
    ladder
}

fn sample_point(field: &ExtField, nvars: usize, stream: &mut Stream) -> Vec<u128> {
    (0..nvars).map(|_| field.sample(stream)).collect()
}

/// Kernel of a pencil at generic parameters.
///
/// Strategy: compute the common (parameter-free) kernel, then hunt for a
/// single evaluation whose rank matches `cols - dim(common)`. One such
/// point proves the generic kernel equals the common kernel, exactly.
/// When no point certifies, fall back per backend: symbolic elimination
/// (Exact) or max-of-samples evaluation (Random).
pub fn pencil_kernel(
    pencil: &MatrixPencil,
    backend: &GenericBackend,
    tag: u64,
) -> Result<KernelResult, AlgError> {
    backend.validate()?;
    let p = pencil.p;
    let nvars = pencil.parts.len();
    let common = pencil.common_kernel();
    let target = pencil.cols - common.cols;

    // Degenerate pencil: no parameter dependence at all.
    if pencil.degree_bound() == 0 && pencil.constant == matrix::zero(&FpField::new(p), pencil.rows, pencil.cols) {
        return Ok(KernelResult {
            dim: common.cols,
            basis: KernelBasis::Constant(common),
            rank: RankResult { rank: 0, certified: true, warning: false, seed: backend.seed },
        });
    }

    for (ki, k) in certificate_ladder(backend).into_iter().enumerate() {
        let field = ExtField::new(p, k);
        for attempt in 0..2u64 {
            let mut stream = Stream::new(backend.seed, derive_seed(tag, (ki as u64) << 8 | attempt));
            let point = sample_point(&field, nvars, &mut stream);
            let evaluated = pencil.eval(&field, &point);
            let r = matrix::rank(&field, &evaluated);
            debug_assert!(r <= target, "evaluation rank cannot exceed generic rank bound");
            if r == target {
                return Ok(KernelResult {
                    dim: common.cols,
                    basis: KernelBasis::Constant(common),
                    rank: RankResult { rank: target, certified: true, warning: false, seed: backend.seed },
                });
            }
        }
    }

    match backend.mode {
        BackendMode::Exact => {
            let ring = ParamRing::new(p);
            let sym = pencil.to_symbolic(&ring);
            let rank = matrix::bareiss_rank(&ring, &sym);
            if pencil.cols - rank == common.cols {
                Ok(KernelResult {
                    dim: common.cols,
                    basis: KernelBasis::Constant(common),
                    rank: RankResult { rank, certified: true, warning: false, seed: backend.seed },
                })
            } else {
                let basis = matrix::bareiss_kernel(&ring, &sym);
                Ok(KernelResult {
                    dim: basis.cols,
                    basis: KernelBasis::Symbolic(basis),
                    rank: RankResult { rank, certified: true, warning: false, seed: backend.seed },
                })
            }
        }
        BackendMode::Random => {
            let field = ExtField::new(p, backend.ext_degree);
            let mut best: Option<(usize, Matrix<u128>)> = None;
            let mut ranks = Vec::new();
            for s in 0..backend.samples {
                let mut stream = Stream::new(backend.seed, derive_seed(tag, sample_tag(s)));
                let point = sample_point(&field, nvars, &mut stream);
                let evaluated = pencil.eval(&field, &point);
                let r = matrix::rank(&field, &evaluated);
                ranks.push(r);
                if best.as_ref().map_or(true, |(br, _)| r > *br) {
                    best = Some((r, matrix::kernel_basis(&field, &evaluated)));
                }
            }
            let (rank, basis) = best.expect("samples >= 3");
            let warning = ranks.iter().any(|&r| r != rank);
            Ok(KernelResult {
                dim: basis.cols,
                basis: KernelBasis::Evaluated { field, basis },
                rank: RankResult { rank, certified: false, warning, seed: backend.seed },
            })
        }
    }
}

/// Stream tag for the s-th random-mode sample.
fn sample_tag(s: usize) -> u64 {
    0x5a5a_0000 + s as u64
}

/// Generic rank of an arbitrary polynomial matrix.
pub fn generic_rank(
    ring: &ParamRing,
    m: &Matrix<ParamPoly>,
    backend: &GenericBackend,
    tag: u64,
) -> Result<RankResult, AlgError> {
    backend.validate()?;
    match backend.mode {
        BackendMode::Exact => Ok(RankResult {
            rank: matrix::bareiss_rank(ring, m),
            certified: true,
            warning: false,
            seed: backend.seed,
        }),
        BackendMode::Random => {
            let field = ExtField::new(ring.p, backend.ext_degree);
            let mut ranks = Vec::new();
            for s in 0..backend.samples {
                let mut stream = Stream::new(backend.seed, derive_seed(tag, sample_tag(s)));
                let point = sample_point(&field, ring.nvars, &mut stream);
                let evaluated = m.map(|e| ring.eval(e, &field, &point));
                ranks.push(matrix::rank(&field, &evaluated));
            }
            let rank = *ranks.iter().max().unwrap();
            let warning = ranks.iter().any(|&r| r != rank);
            Ok(RankResult { rank, certified: false, warning, seed: backend.seed })
        }
    }
}

/// Generic kernel (dimension and basis) of an arbitrary polynomial matrix.
pub fn generic_kernel(
    ring: &ParamRing,
    m: &Matrix<ParamPoly>,
    backend: &GenericBackend,
    tag: u64,
) -> Result<KernelResult, AlgError> {
    backend.validate()?;
    match backend.mode {
        BackendMode::Exact => {
            let rank = matrix::bareiss_rank(ring, m);
            let basis = matrix::bareiss_kernel(ring, m);
            Ok(KernelResult {
                dim: basis.cols,
                basis: KernelBasis::Symbolic(basis),
                rank: RankResult { rank, certified: true, warning: false, seed: backend.seed },
            })
        }
        BackendMode::Random => {
            let field = ExtField::new(ring.p, backend.ext_degree);
            let mut best: Option<(usize, Matrix<u128>)> = None;
            let mut ranks = Vec::new();
            for s in 0..backend.samples {
                let mut stream = Stream::new(backend.seed, derive_seed(tag, sample_tag(s)));
                let point = sample_point(&field, ring.nvars, &mut stream);
                let evaluated = m.map(|e| ring.eval(e, &field, &point));
                let r = matrix::rank(&field, &evaluated);
                ranks.push(r);
                if best.as_ref().map_or(true, |(br, _)| r > *br) {
                    best = Some((r, matrix::kernel_basis(&field, &evaluated)));
                }
            }
            let (rank, basis) = best.expect("samples >= 3");
            let warning = ranks.iter().any(|&r| r != rank);
            Ok(KernelResult {
                dim: basis.cols,
                basis: KernelBasis::Evaluated { field, basis },
                rank: RankResult { rank, certified: false, warning, seed: backend.seed },
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn generic_rank_examples() {
        let ring = ParamRing::new(3);
        let z = matrix::zero(&ring, 3, 3);
        let backend = GenericBackend::exact(1);
        assert_eq!(generic_rank(&ring, &z, &backend, 0).unwrap().rank, 0);

        let id = matrix::identity(&ring, 2);
        assert_eq!(generic_rank(&ring, &id, &backend, 0).unwrap().rank, 2);

        // [[c1, c2], [c2, c1]]: determinant c1^2 - c2^2 is nonzero.
        let c1 = ring.var(1);
        let c2 = ring.var(2);
        let m = Matrix::from_rows(vec![
            vec![c1.clone(), c2.clone()],
            vec![c2.clone(), c1.clone()],
        ]);
        assert_eq!(generic_rank(&ring, &m, &backend, 0).unwrap().rank, 2);
        let det = matrix::bareiss_det(&ring, &m);
        assert!(!ring.is_zero(&det));

        let random = GenericBackend::random(7);
        let rr = generic_rank(&ring, &m, &random, 0).unwrap();
        assert_eq!(rr.rank, 2);
        assert!(!rr.warning);
    }

    #[test]
    fn random_backend_is_reproducible() {
        let ring = ParamRing::new(5);
        let m = Matrix::from_fn(4, 4, |r, c| {
            if (r + c) % 2 == 0 {
                ring.var(((r + c) % 4 + 1) as u64)
            } else {
                ring.constant((r * c) as u64)
            }
        });
        let b = GenericBackend::random(123);
        let r1 = generic_rank(&ring, &m, &b, 42).unwrap();
        let r2 = generic_rank(&ring, &m, &b, 42).unwrap();
        assert_eq!(r1, r2);
    }

    #[test]
    fn generic_kernel_symmetry_example() {
        // 1x2 matrix [c1, c1] -> kernel dim 1 spanned by (1, -1).
        let ring = ParamRing::new(3);
        let c1 = ring.var(1);
        let m = Matrix::from_rows(vec![vec![c1.clone(), c1.clone()]]);
        let res = generic_kernel(&ring, &m, &GenericBackend::exact(0), 0).unwrap();
        assert_eq!(res.dim, 1);
        let KernelBasis::Symbolic(basis) = res.basis else {
            panic!("exact backend returns symbolic basis")
        };
        let v = basis.col_vec(0);
        assert_eq!(ring.add(&v[0], &v[1]), ring.zero());
    }

    #[test]
    fn pencil_certificate_fires_on_constant_kernel() {
        // Pencil [c1 + c2, c1 + c2] has common kernel (1, -1) and generic
        // rank 1, so the shortcut must certify.
        let p = 5u64;
        let fp = FpField::new(p);
        let mut pencil = MatrixPencil::zero(p, 1, 2);
        pencil.parts[0] = Matrix::from_rows(vec![vec![1u64, 1]]);
        pencil.parts[1] = Matrix::from_rows(vec![vec![1u64, 1]]);
        let res = pencil_kernel(&pencil, &GenericBackend::exact(3), 5).unwrap();
        assert_eq!(res.dim, 1);
        assert!(res.rank.certified);
        let KernelBasis::Constant(basis) = res.basis else {
            panic!("expected constant kernel")
        };
        assert_eq!(basis.cols, 1);
        let v = basis.col_vec(0);
        assert_eq!(fp.add(&v[0], &v[1]), 0);
    }

    #[test]
    fn pencil_falls_back_when_kernel_is_parametric() {
        // [c1, c2] has no common kernel but generic kernel dim 1.
        let p = 3u64;
        let mut pencil = MatrixPencil::zero(p, 1, 2);
        pencil.parts[0] = Matrix::from_rows(vec![vec![1u64, 0]]);
        pencil.parts[1] = Matrix::from_rows(vec![vec![0u64, 1]]);
        let res = pencil_kernel(&pencil, &GenericBackend::exact(3), 5).unwrap();
        assert_eq!(res.dim, 1);
        assert!(matches!(res.basis, KernelBasis::Symbolic(_)));

        let res2 = pencil_kernel(&pencil, &GenericBackend::random(3), 5).unwrap();
        assert_eq!(res2.dim, 1);
        assert!(matches!(res2.basis, KernelBasis::Evaluated { .. }));
    }
}
