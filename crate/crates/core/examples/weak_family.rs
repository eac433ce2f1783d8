//! The trinomials x^(2k+1) + 2x + 1: discriminants, the weak check and the
//! mod-4 obstruction.

use superirred::weak::{congruence_verify, trinomial, trinomial_disc, weak_check};
use superirred::Result;

fn main() -> Result<()> {
    for k in 2..=5 {
        println!("f_{k} = {}  disc = {}", trinomial(k)?, trinomial_disc(k)?);
    }

    let r = weak_check(2, 12)?;
    println!(
        "weak check k = 2, bound 12: {} quadratic, {} linear, {} counterexamples",
        r.quadratic_checked,
        r.linear_checked,
        r.counterexamples.len()
    );

    for k in 2..=4 {
        let c = congruence_verify(k)?;
        println!(
            "mod 4, k = {k}: {} vectors, {} candidates, {} violations",
            c.vectors_checked,
            c.candidates,
            c.violations.len()
        );
    }
    Ok(())
}
