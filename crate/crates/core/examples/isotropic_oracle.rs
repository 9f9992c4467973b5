//! Built-in isotropic vector search for a single indefinite form.

use quadpair::exact::{evaluate_form, int_vec, Matrix};
use quadpair::oracle::Oracle;

fn main() -> quadpair::Result<()> {
    let oracle = Oracle::default();
    for d in [vec![1, 1, 1, -7, 3], vec![2, 3, -5, 7, -11, 13], vec![1, -2]] {
        let q = Matrix::diagonal(&int_vec(&d));
        match oracle.find(&q) {
            Ok(y) => {
                let s: Vec<String> = y.iter().map(|x| x.to_string()).collect();
                println!("{d:?}: y = ({}), q(y) = {}", s.join(", "), evaluate_form(&q, &y)?);
            }
            Err(e) => println!("{d:?}: {e}"),
        }
    }
    Ok(())
}
