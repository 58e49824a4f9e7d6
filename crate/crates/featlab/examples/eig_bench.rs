use nalgebra::DMatrix;
use std::time::Instant;

fn main() {
    for &n in &[1024usize, 4096] {
        let k = DMatrix::from_fn(n, n, |i, j| {
            let (x, y) = (i as f64 / n as f64, j as f64 / n as f64);
            x.min(y) + if i == j { 1e-8 } else { 0.0 }
        });
        let t0 = Instant::now();
        let (vals, _vecs) = featlab::linalg::sym_eigen(&k);
        println!("faer n={n}: {:?}  lambda_max={:.4}", t0.elapsed(), vals[n - 1]);
        if n <= 1024 {
            let t0 = Instant::now();
            let se = k.clone().symmetric_eigen();
            println!("nalgebra n={n}: {:?}  lambda_max={:.4}", t0.elapsed(), se.eigenvalues.max());
        }
    }
}
