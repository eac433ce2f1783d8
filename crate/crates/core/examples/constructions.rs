//! Each construction produces a substitution g and a verified divisor of f(g).

use superirred::cli::render_witness;
use superirred::constructions::{
    domain_substitution, even_split_substitution, field_substitution, naive_substitution, quartic_witness,
};
use superirred::parse::parse_polynomial;
use superirred::Result;

fn main() -> Result<()> {
    let f = parse_polynomial("x^3 + 2*x + 1")?;
    let fi = f.to_int().expect("integral");

    println!("naive, k = 1:");
    print!("{}", render_witness(&naive_substitution(&fi, 1)?));

    println!("field:");
    print!("{}", render_witness(&field_substitution(&f)?));

    // Integral substitution of degree d - 1.
    println!("domain:");
    let w = domain_substitution(&fi)?;
    assert!(w.integral_substitution().is_some());
    print!("{}", render_witness(&w));

    let q = parse_polynomial("x^4 + x^2 + 2*x + 3")?;
    println!("even split:");
    print!("{}", render_witness(&even_split_substitution(&q)?));

    println!("quartic criterion:");
    match quartic_witness(&q)? {
        Some(w) => print!("{}", render_witness(&w)),
        None => println!("  criterion vanishes"),
    }
    Ok(())
}
