//! Real solvability of a pair and a definite-member witness when it fails.

use quadpair::exact::{inertia, int_vec, Matrix};
use quadpair::pencil::{is_real_solvable, member};

fn main() -> quadpair::Result<()> {
    let q0 = Matrix::diagonal(&int_vec(&[1, 1, -1, -1]));
    let solvable = Matrix::diagonal(&int_vec(&[1, -2, 3, -4]));
    let r = is_real_solvable(&q0, &solvable)?;
    println!("diag(1,-2,3,-4): real-solvable = {}", r.solvable_over_r);

    let q0 = Matrix::diagonal(&int_vec(&[1, 1, -1]));
    let insolvable = Matrix::diagonal(&int_vec(&[1, 2, 5]));
    let r = is_real_solvable(&q0, &insolvable)?;
    if let Some(w) = r.definite_lambda {
        println!("diag(1,2,5): witness λ = {w}, inertia {}", inertia(&member(&q0, &insolvable, &w)));
    }
    Ok(())
}
