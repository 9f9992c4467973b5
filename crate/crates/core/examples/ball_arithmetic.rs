//! Certified midpoint-radius arithmetic with precision escalation.

use quadpair::ball::{PrecisionPolicy, RealBall};
use quadpair::exact::rat;
use quadpair::Error;

fn main() -> quadpair::Result<()> {
    let two = RealBall::from_i64(2, 128);
    let s = two.sqrt()?;
    println!("sqrt(2) ≈ {} ± 2^{:.1}", s.to_f64(), s.rad_log2());
    let back = s.square().sub_ball(&two);
    println!("sqrt(2)² − 2 contains 0: {}", back.contains_zero());

    // decide the sign of 10^-30 − 10^-30·(1 − 2^-200): needs more than 64 bits
    let tiny = rat(1, 10).pow(30);
    let policy = PrecisionPolicy::new(64, 4096, 2)?;
    let sign = policy.run(|prec| {
        let a = RealBall::from_rat_prec(&tiny, prec);
        let b = RealBall::from_rat_prec(&(tiny.clone() * (rat(1, 1) - rat(1, 2).pow(200))), prec);
        let d = a.sub_ball(&b);
        if d.contains_zero() {
            Err(Error::Uncertain(prec))
        } else {
            Ok((d.to_f64() > 0.0, prec))
        }
    })?;
    println!("positive: {} (decided at {} bits)", sign.0, sign.1);
    Ok(())
}
