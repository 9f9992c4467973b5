//! Splitting hyperbolic planes off a balanced form: Q ≅ H ⊕ … ⊕ H ⊕ Q₂.

use quadpair::exact::{congruence, int_vec, Matrix};
use quadpair::oracle::Oracle;
use quadpair::reduction::{hyperbolic_chain, reduce_qf};

fn main() -> quadpair::Result<()> {
    let q = Matrix::diagonal(&int_vec(&[1, -1, 3]));
    let r = reduce_qf(&q, &int_vec(&[1, 1, 0]))?;
    println!("reduce_qf with y = (1,1,0):\n{}", show(&r.q));

    let d: Vec<i64> = vec![2, 3, 5, 7, -1, -4, -6, -9, 11];
    let q = Matrix::diagonal(&int_vec(&d));
    let split = hyperbolic_chain(&q, &Oracle::default())?;
    println!("{} planes, remainder signature {}", split.planes, split.remainder);
    assert_eq!(congruence(&split.p, &q)?, split.q);
    println!("{}", show(&split.q));
    Ok(())
}

fn show(q: &quadpair::SymMatrix) -> String {
    q.to_rows().iter().map(|r| r.iter().map(|x| format!("{x:>6}")).collect::<String>()).collect::<Vec<_>>().join("\n")
}
