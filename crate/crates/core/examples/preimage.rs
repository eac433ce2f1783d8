//! f(g) is reducible exactly when θ = g(t) has a solution t in ℚ(θ).

use superirred::numfield::{quadratic_preimage, FieldExt, NumberField};
use superirred::parse::parse_polynomial;
use num_traits::One;
use superirred::{factor_over_rationals, Rational, Result};

fn main() -> Result<()> {
    let f = parse_polynomial("x^4 + x^2 + 2*x + 3")?;
    let field = NumberField::new(f.to_int().expect("integral"))?;
    for g in ["-1/2*x^2 - 1/2*x - 3/2", "x^2 + x", "x^2 - 2"] {
        let g = parse_polynomial(g)?;
        let reducible = !factor_over_rationals(&f.compose(&g))?.is_irreducible();
        match quadratic_preimage(&field, &g)? {
            Some(t) => {
                assert_eq!(t.eval(&g), field.generator());
                println!("g = {g}: t = {}  (f(g) reducible: {reducible})", t.to_poly());
            }
            None => println!("g = {g}: no preimage  (f(g) reducible: {reducible})"),
        }
    }

    let x = field.from_coords(vec![Rational::one(), Rational::one()]);
    println!("norm(1 + θ) = {}", x.norm());
    Ok(())
}
