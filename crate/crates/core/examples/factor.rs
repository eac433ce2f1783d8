//! Factor a few polynomials over ℚ and check the result multiplies back.
//!
//!     cargo run --example factor -- "x^8 - 1"

use superirred::cli::render_factorization;
use superirred::parse::parse_polynomial;
use superirred::{factor_over_rationals, Result};

fn main() -> Result<()> {
    let inputs: Vec<String> = match std::env::args().nth(1) {
        Some(arg) => vec![arg],
        None => ["x^4 + 4", "x^6 - 1", "6*x^4 + 5*x^3 - 5*x - 6", "x^4 + 1", "x^8 - 1"]
            .map(String::from)
            .to_vec(),
    };
    for text in inputs {
        let f = parse_polynomial(&text)?;
        let fac = factor_over_rationals(&f)?;
        assert_eq!(fac.expand(), f);
        println!("{text}\n  = {}", render_factorization(&fac));
    }
    Ok(())
}
