use nalgebra::DMatrix;
use std::time::Instant;

fn main() {
    for n in [256usize, 384, 512, 768, 1024] {
        let h = 2.0 * 12.0 / (n as f64 - 1.0);
        let a = DMatrix::from_fn(n, n, |i, j| {
            let x = -12.0 + i as f64 * h;
            let y = -12.0 + j as f64 * h;
            h * (-0.5 * (0.25 * (x + y).powi(2) / 4.0 + (x - y).powi(2))).exp()
        });
        let t0 = Instant::now();
        let sv = a.clone().singular_values();
        let t_sv = t0.elapsed();
        let t0 = Instant::now();
        let m = &a * a.transpose();
        let t_mm = t0.elapsed();
        let t0 = Instant::now();
        let ev = m.symmetric_eigenvalues();
        let t_ev = t0.elapsed();
        let s2: f64 = sv.iter().map(|s| s * s).sum();
        let e1: f64 = ev.iter().sum();
        println!(
            "n={n:5}  svd={t_sv:9.1?}  gemm={t_mm:9.1?}  eig={t_ev:9.1?}   sum(sv^2)={s2:.6}  sum(ev)={e1:.6}"
        );
    }
}
