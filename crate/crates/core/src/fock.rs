//! Truncated two-mode Fock space and dense operators on it.
//!
//! Each mode keeps occupations `0..=N`, so the space has `(N+1)^2` states
//! ordered row-major: `(n_a, n_b) -> n_a (N+1) + n_b`. Algebraic identities
//! only hold away from the truncation boundary; [`projected_residual`]
//! measures them on the subspace of total occupation `<= N - margin`.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub const MIN_CUTOFF: usize = 2;

const HERMITIAN_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FockBasis {
    cutoff: usize,
}

impl FockBasis {
    pub fn new(cutoff: usize) -> Result<Self> {
        if cutoff < MIN_CUTOFF {
            return Err(Error::CutoffTooSmall { cutoff, required: MIN_CUTOFF });
        }
        Ok(Self { cutoff })
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dim(&self) -> usize {
        (self.cutoff + 1) * (self.cutoff + 1)
    }

    pub fn index(&self, n_a: usize, n_b: usize) -> usize {
        debug_assert!(n_a <= self.cutoff && n_b <= self.cutoff);
        n_a * (self.cutoff + 1) + n_b
    }

    pub fn occupations(&self, index: usize) -> (usize, usize) {
        (index / (self.cutoff + 1), index % (self.cutoff + 1))
    }

    pub fn total_occupation(&self, index: usize) -> usize {
        let (a, b) = self.occupations(index);
        a + b
    }

    /// Indices with total occupation `<= max_total`, in basis order.
    pub fn indices_up_to(&self, max_total: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.total_occupation(i) <= max_total)
            .collect()
    }

    /// Indices with even (`parity == 0`) or odd total occupation.
    pub fn parity_indices(&self, parity: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.total_occupation(i) % 2 == parity % 2)
            .collect()
    }

    fn projection_indices(&self, margin: usize) -> Result<Vec<usize>> {
        if margin == 0 || margin > self.cutoff {
            return Err(Error::MarginTooLarge { margin, cutoff: self.cutoff });
        }
        Ok(self.indices_up_to(self.cutoff - margin))
    }

    fn ensure_same(&self, other: &FockBasis) -> Result<()> {
        if self != other {
            return Err(Error::BasisMismatch { left: self.cutoff, right: other.cutoff });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    basis: FockBasis,
    entries: DMatrix<Complex64>,
    hermitian_hint: bool,
}

impl OperatorMatrix {
    pub fn zeros(basis: FockBasis) -> Self {
        let d = basis.dim();
        Self { basis, entries: DMatrix::zeros(d, d), hermitian_hint: false }
    }

    pub fn identity(basis: FockBasis) -> Self {
        let d = basis.dim();
        Self { basis, entries: DMatrix::identity(d, d), hermitian_hint: true }
    }

    /// Wraps a dense matrix; its dimension must match the basis.
    pub fn from_entries(basis: FockBasis, entries: DMatrix<Complex64>) -> Self {
        assert_eq!(entries.nrows(), basis.dim());
        assert_eq!(entries.ncols(), basis.dim());
        Self { basis, entries, hermitian_hint: false }
    }

    /// Standard truncated annihilator on the first mode.
    pub fn ladder_first(basis: FockBasis) -> Self {
        let mut m = Self::zeros(basis);
        let n = basis.cutoff();
        for na in 1..=n {
            for nb in 0..=n {
                let (to, from) = (basis.index(na - 1, nb), basis.index(na, nb));
                m.entries[(to, from)] = Complex64::new((na as f64).sqrt(), 0.0);
            }
        }
        m
    }

    /// Standard truncated annihilator on the second mode.
    pub fn ladder_second(basis: FockBasis) -> Self {
        let mut m = Self::zeros(basis);
        let n = basis.cutoff();
        for na in 0..=n {
            for nb in 1..=n {
                let (to, from) = (basis.index(na, nb - 1), basis.index(na, nb));
                m.entries[(to, from)] = Complex64::new((nb as f64).sqrt(), 0.0);
            }
        }
        m
    }

    pub fn basis(&self) -> FockBasis {
        self.basis
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn hermitian_hint(&self) -> bool {
        self.hermitian_hint
    }

    pub fn adjoint(&self) -> Self {
        Self {
            basis: self.basis,
            entries: self.entries.adjoint(),
            hermitian_hint: self.hermitian_hint,
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            basis: self.basis,
            entries: &self.entries * factor,
            hermitian_hint: self.hermitian_hint && factor.im == 0.0,
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// `max |M - M^dagger|` over all entries.
    pub fn hermiticity_defect(&self) -> f64 {
        let d = self.entries.nrows();
        let mut worst: f64 = 0.0;
        for j in 0..d {
            for i in 0..=j {
                let diff = self.entries[(i, j)] - self.entries[(j, i)].conj();
                worst = worst.max(diff.norm());
            }
        }
        worst
    }

    /// Sets the Hermitian flag after checking the defect is below `1e-12`.
    pub fn into_hermitian(mut self) -> Result<Self> {
        let defect = self.hermiticity_defect();
        if defect >= HERMITIAN_TOLERANCE {
            return Err(Error::NotHermitian { defect });
        }
        self.hermitian_hint = true;
        Ok(self)
    }

    /// `(M + M^dagger) / 2`.
    pub fn symmetrized(&self) -> Self {
        let entries = (&self.entries + self.entries.adjoint()) * Complex64::new(0.5, 0.0);
        Self { basis: self.basis, entries, hermitian_hint: true }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.basis.ensure_same(&other.basis)?;
        Ok(Self {
            basis: self.basis,
            entries: sparse_aware_product(&self.entries, &other.entries),
            hermitian_hint: false,
        })
    }

    /// `self += c u v` without forming the product separately.
    pub fn add_product(&mut self, c: f64, u: &Self, v: &Self) -> Result<()> {
        self.basis.ensure_same(&u.basis)?;
        self.basis.ensure_same(&v.basis)?;
        accumulate_product(&mut self.entries, Complex64::new(c, 0.0), &u.entries, &v.entries);
        self.hermitian_hint = false;
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.basis.ensure_same(&other.basis)?;
        Ok(Self {
            basis: self.basis,
            entries: &self.entries + &other.entries,
            hermitian_hint: self.hermitian_hint && other.hermitian_hint,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.basis.ensure_same(&other.basis)?;
        Ok(Self {
            basis: self.basis,
            entries: &self.entries - &other.entries,
            hermitian_hint: self.hermitian_hint && other.hermitian_hint,
        })
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        self.basis.ensure_same(&v.basis)?;
        let amplitudes = sparse_aware_matvec(&self.entries, &v.amplitudes);
        Ok(StateVector { basis: self.basis, amplitudes, normalized_hint: false })
    }

    /// Restriction to the given basis indices (rows and columns).
    pub fn submatrix(&self, indices: &[usize]) -> DMatrix<Complex64> {
        DMatrix::from_fn(indices.len(), indices.len(), |i, j| {
            self.entries[(indices[i], indices[j])]
        })
    }

    /// `exp(self) v`, evaluated by scaling the exponent until its norm is
    /// below 1/2 and applying the truncated Taylor series repeatedly.
    ///
    /// Intended for anti-Hermitian exponents, where every step is
    /// norm-preserving up to the series tolerance.
    pub fn exp_action(&self, v: &StateVector) -> Result<StateVector> {
        self.basis.ensure_same(&v.basis)?;
        let norm = one_norm(&self.entries);
        let mut steps: u32 = 0;
        while norm / f64::from(1u32 << steps.min(30)) > 0.5 {
            steps += 1;
        }
        let reps = 1u64 << steps;
        let factor = Complex64::new(1.0 / reps as f64, 0.0);
        let mut acc = v.amplitudes.clone();
        for _ in 0..reps {
            let mut term = acc.clone();
            let mut sum = acc.clone();
            for k in 1..64 {
                term = sparse_aware_matvec(&self.entries, &term) * (factor / k as f64);
                sum += &term;
                if term.norm() <= 1e-17 * sum.norm() {
                    break;
                }
            }
            acc = sum;
        }
        Ok(StateVector { basis: self.basis, amplitudes: acc, normalized_hint: false })
    }
}

impl Add for &OperatorMatrix {
    type Output = OperatorMatrix;

    /// Panics if the bases differ; use [`OperatorMatrix::checked_add`] otherwise.
    fn add(self, rhs: Self) -> OperatorMatrix {
        self.checked_add(rhs).expect("operator basis mismatch")
    }
}

impl Sub for &OperatorMatrix {
    type Output = OperatorMatrix;

    fn sub(self, rhs: Self) -> OperatorMatrix {
        self.checked_sub(rhs).expect("operator basis mismatch")
    }
}

impl Mul for &OperatorMatrix {
    type Output = OperatorMatrix;

    fn mul(self, rhs: Self) -> OperatorMatrix {
        self.checked_mul(rhs).expect("operator basis mismatch")
    }
}

impl Neg for &OperatorMatrix {
    type Output = OperatorMatrix;

    fn neg(self) -> OperatorMatrix {
        self.scale_real(-1.0)
    }
}

/// `u v - v u`.
pub fn commutator(u: &OperatorMatrix, v: &OperatorMatrix) -> Result<OperatorMatrix> {
    u.checked_mul(v)?.checked_sub(&v.checked_mul(u)?)
}

/// `||P (u - target) P||_inf / max(1, ||P target P||_inf)` where `P` projects
/// onto total occupation `<= N - margin` and `||.||_inf` is the maximum
/// absolute row sum.
pub fn projected_residual(u: &OperatorMatrix, target: &OperatorMatrix, margin: usize) -> Result<f64> {
    u.basis.ensure_same(&target.basis)?;
    let idx = u.basis.projection_indices(margin)?;
    let mut defect: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for &i in &idx {
        let mut row_defect = 0.0;
        let mut row_scale = 0.0;
        for &j in &idx {
            row_defect += (u.entries[(i, j)] - target.entries[(i, j)]).norm();
            row_scale += target.entries[(i, j)].norm();
        }
        defect = defect.max(row_defect);
        scale = scale.max(row_scale);
    }
    Ok(defect / scale.max(1.0))
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    basis: FockBasis,
    amplitudes: DVector<Complex64>,
    normalized_hint: bool,
}

impl StateVector {
    pub fn basis_state(basis: FockBasis, n_a: usize, n_b: usize) -> Self {
        let mut amplitudes = DVector::zeros(basis.dim());
        amplitudes[basis.index(n_a, n_b)] = Complex64::new(1.0, 0.0);
        Self { basis, amplitudes, normalized_hint: true }
    }

    pub fn vacuum(basis: FockBasis) -> Self {
        Self::basis_state(basis, 0, 0)
    }

    pub fn from_amplitudes(basis: FockBasis, amplitudes: DVector<Complex64>, normalized_hint: bool) -> Self {
        assert_eq!(amplitudes.len(), basis.dim());
        Self { basis, amplitudes, normalized_hint }
    }

    pub fn basis(&self) -> FockBasis {
        self.basis
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    pub fn amplitude(&self, n_a: usize, n_b: usize) -> Complex64 {
        self.amplitudes[self.basis.index(n_a, n_b)]
    }

    pub fn normalized_hint(&self) -> bool {
        self.normalized_hint
    }

    pub(crate) fn with_normalized_hint(mut self, hint: bool) -> Self {
        self.normalized_hint = hint;
        self
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        self.basis.ensure_same(&other.basis)?;
        Ok(self.amplitudes.dotc(&other.amplitudes))
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            basis: self.basis,
            amplitudes: &self.amplitudes * factor,
            normalized_hint: self.normalized_hint && (factor.norm() - 1.0).abs() < 1e-15,
        }
    }

    pub fn checked_sub(&self, other: &StateVector) -> Result<StateVector> {
        self.basis.ensure_same(&other.basis)?;
        Ok(Self {
            basis: self.basis,
            amplitudes: &self.amplitudes - &other.amplitudes,
            normalized_hint: false,
        })
    }

    /// Euclidean norm restricted to total occupation `<= N - margin`.
    pub fn projected_norm(&self, margin: usize) -> Result<f64> {
        let idx = self.basis.projection_indices(margin)?;
        Ok(idx.iter().map(|&i| self.amplitudes[i].norm_sqr()).sum::<f64>().sqrt())
    }
}

/// `||P (op - eigenvalue) v|| / (||P v|| max(1, |eigenvalue|))` on total
/// occupation `<= N - margin`: the defect of an eigen-relation away from the
/// truncation boundary.
pub fn eigen_residual(op: &OperatorMatrix, eigenvalue: Complex64, v: &StateVector, margin: usize) -> Result<f64> {
    let image = op.apply(v)?;
    let defect = image.checked_sub(&v.scale(eigenvalue))?;
    let denom = v.projected_norm(margin)? * eigenvalue.norm().max(1.0);
    Ok(defect.projected_norm(margin)? / denom)
}

fn one_norm(m: &DMatrix<Complex64>) -> f64 {
    m.column_iter()
        .map(|c| c.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Dense product that skips exact zeros of the right factor; ladder-built
/// operators have a handful of nonzeros per column.
fn sparse_aware_product(u: &DMatrix<Complex64>, v: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let mut out = DMatrix::zeros(u.nrows(), v.ncols());
    accumulate_product(&mut out, Complex64::new(1.0, 0.0), u, v);
    out
}

/// `out += c u v`, skipping exact zeros of `v`.
fn accumulate_product(out: &mut DMatrix<Complex64>, c: Complex64, u: &DMatrix<Complex64>, v: &DMatrix<Complex64>) {
    for j in 0..v.ncols() {
        for k in 0..v.nrows() {
            let s = v[(k, j)];
            if s == Complex64::new(0.0, 0.0) {
                continue;
            }
            let s = s * c;
            let src = u.column(k);
            let mut dst = out.column_mut(j);
            for (d, x) in dst.iter_mut().zip(src.iter()) {
                *d += x * s;
            }
        }
    }
}

fn sparse_aware_matvec(u: &DMatrix<Complex64>, v: &DVector<Complex64>) -> DVector<Complex64> {
    let mut out = DVector::zeros(u.nrows());
    for (k, &s) in v.iter().enumerate() {
        if s == Complex64::new(0.0, 0.0) {
            continue;
        }
        for (d, x) in out.iter_mut().zip(u.column(k).iter()) {
            *d += x * s;
        }
    }
    out
}
