//! Delegating isotropic vector search to an external process.
//!
//! The stub below answers every request with `1 1 0 0 0` and is checked
//! exactly; a wrong answer is rejected.

use std::time::Duration;

use quadpair::exact::{int_vec, Matrix};
use quadpair::oracle::ExternalSolver;

fn main() -> quadpair::Result<()> {
    let q = Matrix::diagonal(&int_vec(&[1, -1, 2, 3, -5]));
    let good = ExternalSolver::new("cat > /dev/null; echo 1 1 0 0 0", Duration::from_secs(5));
    println!("stub answer: {:?}", good.solve(&q).map(|v| v.map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>())));
    let bad = ExternalSolver::new("cat > /dev/null; echo 1 0 0 0 0", Duration::from_secs(5));
    println!("wrong answer: {:?}", bad.solve(&q).err().map(|e| e.to_string()));
    Ok(())
}
