//! Certificates for binomials a*x^4 + b.

use superirred::certificates::{certify, diophantine_search};
use superirred::cli::render_certificate;
use superirred::parse::parse_polynomial;
use superirred::{Integer, Result};

fn main() -> Result<()> {
    for text in ["x^4 + 1", "x^4 + 2", "x^4 + 7", "x^4 + 6", "x^4 - 3", "x^4 + 3", "x^4 + 5", "x^4 + 4", "2*x^4 + 3"] {
        let f = parse_polynomial(text)?.to_int().expect("integral");
        let c = certify(&f, 10)?;
        c.verify()?;
        println!("{text}");
        print!("{}", render_certificate(&c));
    }

    for d in [3, 5, 15] {
        if let Some(t) = diophantine_search(&Integer::from(d), 50)? {
            println!("x^4 + {d}*y^4 = z^2: ({}, {}, {})", t.x, t.y, t.z);
        }
    }
    Ok(())
}
