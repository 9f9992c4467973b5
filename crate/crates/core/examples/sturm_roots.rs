//! Δ(λ) = det(λ·Q0 + Q1) and isolation of its real roots by Sturm sequences.

use quadpair::exact::{int_vec, isolate_real_roots, pencil_det_poly, Matrix};

fn main() -> quadpair::Result<()> {
    let q0 = Matrix::diagonal(&int_vec(&[1, 1, -1, -1]));
    let q1 = Matrix::symmetric(vec![int_vec(&[2, 1, 0, 0]), int_vec(&[1, 3, 0, 0]), int_vec(&[0, 0, 5, 1]), int_vec(&[0, 0, 1, -7])])?;
    let delta = pencil_det_poly(&q0, &q1)?;
    println!("Δ coefficients (low to high): {:?}", delta.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    println!("squarefree: {}", delta.is_squarefree());
    for iv in isolate_real_roots(&delta)? {
        println!("root in [{}, {}]", iv.lo, iv.hi);
    }
    Ok(())
}
