//! Instance generation, text round trip, solve and independent verification.

use quadpair::cli::{generate, verify_vector, CertificateFile, GenParams, Instance};
use quadpair::oracle::Oracle;
use quadpair::rational_solution::solve_pair;

fn main() -> quadpair::Result<()> {
    let mut p = GenParams::new(13, 5, 3);
    p.require_solvable = true;
    let inst = generate(&p)?;
    let text = inst.to_text();
    assert_eq!(Instance::parse(&text)?, inst);
    println!("{}", text.lines().take(5).collect::<Vec<_>>().join("\n"));

    let cert = solve_pair(&inst.q0, &inst.q1, &Oracle::default(), 0)?;
    let file = CertificateFile::from_certificate(&cert);
    print!("{}", file.to_text());
    let verdict = verify_vector(&inst, &file.vector()?)?;
    println!("{}", if verdict.pass { "PASS" } else { "FAIL" });
    Ok(())
}
