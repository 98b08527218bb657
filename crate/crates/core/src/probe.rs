use ndarray::Array2;
use ndarray_linalg::{Eig, Eigh, UPLO};
use num_complex::Complex64;

pub fn probe_eigh() -> f64 {
    let a = Array2::<f64>::eye(4);
    let (ev, _) = a.eigh(UPLO::Lower).unwrap();
    ev[0]
}

pub fn probe_eig() -> f64 {
    let a = Array2::<Complex64>::eye(3);
    let (ev, _) = a.eig().unwrap();
    ev[0].re
}
