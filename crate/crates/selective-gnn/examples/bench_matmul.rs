use ndarray::Array2;
use std::time::Instant;

fn main() {
    let n = 2708;
    let f = 1433;
    let h = 64;
    let x = Array2::<f64>::from_elem((n, f), 0.25);
    let w = Array2::<f64>::from_elem((f, h), 0.01);
    let t0 = Instant::now();
    let mut z = x.dot(&w);
    for _ in 0..9 {
        z = &z * 0.5;
        z = x.dot(&w);
    }
    let dt = t0.elapsed().as_secs_f64() / 10.0;
    println!("dgemm {}x{} * {}x{}: {:.1} ms/iter ({:.2} GFLOP/s)", n, f, f, h, dt * 1e3,
        (2.0 * n as f64 * f as f64 * h as f64) / dt / 1e9);
    println!("{}", z[[0, 0]]);
}
