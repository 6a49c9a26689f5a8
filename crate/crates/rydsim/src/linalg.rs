//! Thin LAPACK bindings for the dense eigenproblems used by the engine.
//!
//! Matrices are stored column-major in flat `Vec`s so they can be handed to
//! LAPACK without copies. Every matrix this crate diagonalizes is either
//! complex symmetric or real symmetric, for which row- and column-major
//! layouts coincide anyway.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

extern "C" {
    fn zgeev_(
        jobvl: *const u8,
        jobvr: *const u8,
        n: *const i32,
        a: *mut C64,
        lda: *const i32,
        w: *mut C64,
        vl: *mut C64,
        ldvl: *const i32,
        vr: *mut C64,
        ldvr: *const i32,
        work: *mut C64,
        lwork: *const i32,
        rwork: *mut f64,
        info: *mut i32,
    );

    fn dsyev_(
        jobz: *const u8,
        uplo: *const u8,
        n: *const i32,
        a: *mut f64,
        lda: *const i32,
        w: *mut f64,
        work: *mut f64,
        lwork: *const i32,
        info: *mut i32,
    );

    fn openblas_set_num_threads(n: i32);
}

/// Pin the BLAS thread pool. The engine parallelizes over scan points with
/// rayon, so per-call BLAS stays single-threaded and results stay
/// reproducible regardless of worker count.
pub fn set_blas_threads(n: usize) {
    unsafe { openblas_set_num_threads(n.max(1) as i32) };
}

/// Dense square complex matrix, column-major.
#[derive(Clone, Debug)]
pub struct CMatrix {
    pub n: usize,
    pub data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix { n, data: vec![C64::new(0.0, 0.0); n * n] }
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.data[col * self.n + row]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, v: C64) {
        self.data[col * self.n + row] = v;
    }

    /// Maximum row sum of absolute values (the induced infinity norm).
    pub fn norm_inf(&self) -> f64 {
        let n = self.n;
        let mut row_sums = vec![0.0f64; n];
        for col in 0..n {
            for row in 0..n {
                row_sums[row] += self.data[col * n + row].norm();
            }
        }
        row_sums.into_iter().fold(0.0, f64::max)
    }

    /// y = A x
    pub fn matvec(&self, x: &[C64], y: &mut [C64]) {
        let n = self.n;
        y.iter_mut().for_each(|v| *v = C64::new(0.0, 0.0));
        for col in 0..n {
            let xc = x[col];
            if xc == C64::new(0.0, 0.0) {
                continue;
            }
            let column = &self.data[col * n..(col + 1) * n];
            for (row, a) in column.iter().enumerate() {
                y[row] += a * xc;
            }
        }
    }
}

/// Eigendecomposition of a general complex matrix (right eigenvectors).
///
/// Consumes the matrix; LAPACK overwrites the input. Eigenvectors come back
/// unit-normalized in the Hermitian 2-norm, stored as columns.
pub fn eig_complex(mut a: CMatrix) -> Result<(Vec<C64>, CMatrix)> {
    let n = a.n;
    let ni = n as i32;
    let mut w = vec![C64::new(0.0, 0.0); n];
    let mut vr = CMatrix::zeros(n);
    let mut rwork = vec![0.0f64; 2 * n];
    let mut info = 0i32;

    // workspace query
    let mut query = [C64::new(0.0, 0.0)];
    let lwork_query = -1i32;
    unsafe {
        zgeev_(
            b"N".as_ptr(),
            b"V".as_ptr(),
            &ni,
            a.data.as_mut_ptr(),
            &ni,
            w.as_mut_ptr(),
            std::ptr::null_mut(),
            &1,
            vr.data.as_mut_ptr(),
            &ni,
            query.as_mut_ptr(),
            &lwork_query,
            rwork.as_mut_ptr(),
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Lapack { routine: "zgeev (workspace query)", info });
    }
    let lwork = query[0].re as i32;
    let mut work = vec![C64::new(0.0, 0.0); lwork as usize];
    unsafe {
        zgeev_(
            b"N".as_ptr(),
            b"V".as_ptr(),
            &ni,
            a.data.as_mut_ptr(),
            &ni,
            w.as_mut_ptr(),
            std::ptr::null_mut(),
            &1,
            vr.data.as_mut_ptr(),
            &ni,
            work.as_mut_ptr(),
            &lwork,
            rwork.as_mut_ptr(),
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Lapack { routine: "zgeev", info });
    }
    Ok((w, vr))
}

/// Eigendecomposition of a real symmetric matrix (ascending eigenvalues,
/// orthonormal eigenvectors as columns). `a` is column-major, fully filled.
pub fn eigh_real(mut a: Vec<f64>, n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    assert_eq!(a.len(), n * n);
    let ni = n as i32;
    let mut w = vec![0.0f64; n];
    let mut info = 0i32;
    let mut query = [0.0f64];
    let lwork_query = -1i32;
    unsafe {
        dsyev_(
            b"V".as_ptr(),
            b"L".as_ptr(),
            &ni,
            a.as_mut_ptr(),
            &ni,
            w.as_mut_ptr(),
            query.as_mut_ptr(),
            &lwork_query,
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Lapack { routine: "dsyev (workspace query)", info });
    }
    let lwork = query[0] as i32;
    let mut work = vec![0.0f64; lwork as usize];
    unsafe {
        dsyev_(
            b"V".as_ptr(),
            b"L".as_ptr(),
            &ni,
            a.as_mut_ptr(),
            &ni,
            w.as_mut_ptr(),
            work.as_mut_ptr(),
            &lwork,
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Lapack { routine: "dsyev", info });
    }
    Ok((w, a))
}

/// Kahan-compensated accumulator, used wherever sums must not depend on
/// accumulation order more than roundoff allows.
#[derive(Clone, Copy, Debug, Default)]
pub struct KahanSum {
    sum: f64,
    c: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}
