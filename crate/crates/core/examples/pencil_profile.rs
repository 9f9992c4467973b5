//! Hypothesis H and the signature profile of the pencil λ·Q0 + Q1.

use quadpair::exact::{int_vec, Matrix};
use quadpair::pencil::{check_hypothesis_h, find_balanced_lambda, format_profile, signature_profile};

fn main() -> quadpair::Result<()> {
    let q0 = Matrix::diagonal(&int_vec(&[1, 1, 1, -1, -1]));
    let q1 = Matrix::diagonal(&int_vec(&[1, -2, 3, 4, -5]));
    let h = check_hypothesis_h(&q0, &q1)?;
    println!("H holds: {}", h.holds);
    let prof = signature_profile(&q0, &q1)?;
    println!("{}", format_profile(&prof));
    println!("d values: {:?}", prof.d_values());
    let b = find_balanced_lambda(&q0, &q1)?;
    println!("balanced λ = {} with signature {}", b.lambda, b.signature);
    Ok(())
}
