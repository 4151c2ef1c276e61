//! Small dense complex linear-algebra helpers shared across modules.

use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};

use crate::C64;

/// Kronecker product `a ⊗ b`.
pub(crate) fn kron(a: &DMatrix<C64>, b: &DMatrix<C64>) -> DMatrix<C64> {
    let (ra, ca) = a.shape();
    let (rb, cb) = b.shape();
    DMatrix::from_fn(ra * rb, ca * cb, |i, j| a[(i / rb, j / cb)] * b[(i % rb, j % cb)])
}

/// Orthonormal basis of the right null space of a tall (rows ≥ cols)
/// matrix: right singular vectors whose singular value is below
/// `rel_tol · σ_max`.
pub(crate) fn null_space(a: DMatrix<C64>, rel_tol: f64) -> Vec<DVector<C64>> {
    let cols = a.ncols();
    assert!(a.nrows() >= cols, "null_space expects a tall constraint stack");
    let svd = a.svd(false, true);
    let v_t = svd.v_t.expect("SVD without V");
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
    let thr = rel_tol * sigma_max;
    let mut out = Vec::new();
    for i in 0..cols {
        if svd.singular_values[i] <= thr {
            out.push(v_t.row(i).adjoint());
        }
    }
    out
}

/// Stacks the commutator constraints `vec(T·M_g − M_g·T) = 0` for a family
/// of same-size square matrices into one tall matrix (column-major vec
/// convention: `vec(T·M) = (Mᵀ ⊗ I)·vec(T)`, `vec(M·T) = (I ⊗ M)·vec(T)`).
pub(crate) fn commutator_stack(mats: &[&DMatrix<C64>]) -> DMatrix<C64> {
    let n = mats[0].nrows();
    let nn = n * n;
    let eye = DMatrix::<C64>::identity(n, n);
    let mut stack = DMatrix::<C64>::zeros(nn * mats.len(), nn);
    for (idx, m) in mats.iter().enumerate() {
        let block = kron(&m.transpose(), &eye) - kron(&eye, *m);
        stack.view_mut((idx * nn, 0), (nn, nn)).copy_from(&block);
    }
    stack
}

/// Reinterprets a column-major vectorized matrix as an n×n matrix.
pub(crate) fn unvec(v: &DVector<C64>, n: usize) -> DMatrix<C64> {
    DMatrix::from_column_slice(n, n, v.as_slice())
}
