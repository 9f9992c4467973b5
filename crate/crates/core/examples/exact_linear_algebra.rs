//! Exact determinant, inertia and kernel of a rational symmetric matrix.

use quadpair::exact::{det, inertia, int_vec, left_kernel, rat, Matrix};

fn main() -> quadpair::Result<()> {
    let q = Matrix::symmetric(vec![
        vec![rat(1, 2), rat(1, 1), rat(0, 1)],
        vec![rat(1, 1), rat(-3, 1), rat(2, 3)],
        vec![rat(0, 1), rat(2, 3), rat(5, 1)],
    ])?;
    println!("det = {}", det(&q));
    println!("inertia = {}", inertia(&q));

    let singular = Matrix::from_rows(vec![int_vec(&[1, 2]), int_vec(&[2, 4])])?;
    for v in left_kernel(&singular) {
        println!("kernel vector: {}", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
    }
    Ok(())
}
