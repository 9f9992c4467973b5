//! Certified simultaneous block diagonalization and a real common zero.

use quadpair::exact::{int_vec, Matrix};
use quadpair::real_solution::{real_point, simultaneous_block_diag};

fn main() -> quadpair::Result<()> {
    let q0 = Matrix::symmetric(vec![
        int_vec(&[1, 1, 0, 0]),
        int_vec(&[1, -1, 0, 0]),
        int_vec(&[0, 0, 1, 0]),
        int_vec(&[0, 0, 0, -1]),
    ])?;
    let q1 = Matrix::symmetric(vec![
        int_vec(&[2, 0, 1, 0]),
        int_vec(&[0, 3, 0, 1]),
        int_vec(&[1, 0, -1, 0]),
        int_vec(&[0, 1, 0, 5]),
    ])?;
    let bd = simultaneous_block_diag(&q0, &q1)?;
    println!("real roots m = {}, blocks {:?}", bd.m, bd.blocks);
    println!("residual 2^{:.1}", bd.residual_log2);
    match real_point(&q0, &q1) {
        Ok(v) => println!("real zero ≈ {:?}", v.iter().map(|b| b.to_f64()).collect::<Vec<_>>()),
        Err(e) => println!("{e}"),
    }
    Ok(())
}
