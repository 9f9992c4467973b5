//! Rational common zero of two forms in 13 variables with a replayable
//! certificate.

use quadpair::exact::{int_vec, Matrix};
use quadpair::oracle::Oracle;
use quadpair::rational_solution::solve_pair;

fn main() -> quadpair::Result<()> {
    let q0 = Matrix::diagonal(&int_vec(&[1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1]));
    let q1 = Matrix::diagonal(&int_vec(&[1, 2, 3, 4, 5, 6, 7, -8, 9, -10, 11, -12, 13]));
    let cert = solve_pair(&q0, &q1, &Oracle::default(), 7)?;
    println!("x = ({})", cert.x.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "));
    println!("q0(x) = {}, q1(x) = {}", cert.residue0, cert.residue1);
    println!("stages: {:?}", cert.transcript.iter().map(|s| s.name.as_str()).collect::<Vec<_>>());
    println!("digest {}", cert.digest());
    assert_eq!(cert.replay()?, cert.x);
    Ok(())
}
