use ndarray::Array2;
use ndarray_linalg::{Eig, Eigh, UPLO};
use num_complex::Complex64;
use std::time::Instant;

fn main() {
    println!("eigh(4) smallest ev = {}", relaxometer_core::probe::probe_eigh());
    println!("eig(3) = {}", relaxometer_core::probe::probe_eig());

    for &d in &[256usize, 512, 1024] {
        let a = Array2::<f64>::from_shape_fn((d, d), |(i, j)| ((i * 31 + j * 17) % 97) as f64 / 97.0);
        let sym = &a + &a.t();
        let t = Instant::now();
        let _ = sym.eigh(UPLO::Lower).unwrap();
        println!("dsyev  D={d}: {:?}", t.elapsed());
    }
    for &d in &[256usize, 512, 1000] {
        let a = Array2::<Complex64>::from_shape_fn((d, d), |(i, j)| {
            Complex64::new(((i * 31 + j * 17) % 97) as f64 / 97.0, ((i * 7 + j * 13) % 89) as f64 / 89.0)
        });
        let t = Instant::now();
        let _ = a.eig().unwrap();
        println!("zgeev  D={d}: {:?}", t.elapsed());
    }
    // matmul speed (ndarray default backend)
    for &d in &[512usize, 1024] {
        let a = Array2::<f64>::from_elem((d, d), 1.5);
        let t = Instant::now();
        let c = a.dot(&a);
        println!("dgemm-ish D={d}: {:?} (c[0,0]={})", t.elapsed(), c[[0, 0]]);
    }
    for &d in &[512usize, 1000] {
        let a = Array2::<Complex64>::from_elem((d, d), Complex64::new(0.5, 0.1));
        let t = Instant::now();
        let c = a.dot(&a);
        println!("zgemm-ish D={d}: {:?} (c[0,0]={})", t.elapsed(), c[[0, 0]]);
    }
}
