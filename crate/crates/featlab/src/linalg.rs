//! Dense linear-algebra helpers backed by faer, exposed on nalgebra types.

use faer::Mat;
use nalgebra::{DMatrix, DVector};

fn to_faer(m: &DMatrix<f64>) -> Mat<f64> {
    Mat::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
}

/// Eigendecomposition of a symmetric matrix: eigenvalues ascending,
/// eigenvectors as matching columns.
pub fn sym_eigen(m: &DMatrix<f64>) -> (DVector<f64>, DMatrix<f64>) {
    let n = m.nrows();
    let f = to_faer(m);
    let evd = f
        .self_adjoint_eigen(faer::Side::Lower)
        .expect("symmetric eigendecomposition failed");
    let s = evd.S();
    let u = evd.U();
    let vals = DVector::from_fn(n, |i, _| s[i]);
    let vecs = DMatrix::from_fn(n, n, |i, j| u[(i, j)]);
    (vals, vecs)
}
