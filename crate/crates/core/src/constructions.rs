//! Explicit reducing substitutions.
//!
//! Each constructor returns a [`SubstitutionWitness`] that has already been
//! re-verified by exact multiplication: `f(g) = scalar · divisor · cofactor`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::is_irreducible_primitive;
use crate::poly::{as_string, Integer, IntPoly, RatPoly, Rational};

/// A substitution `g` together with a verified factorization of `f(g(x))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubstitutionWitness {
    pub target: RatPoly,
    pub substitution: RatPoly,
    pub divisor: IntPoly,
    pub cofactor: IntPoly,
    #[serde(with = "as_string")]
    pub scalar: Rational,
}

impl SubstitutionWitness {
    /// Builds the witness for `f(g)` from a claimed divisor, dividing exactly
    /// over ℤ after taking primitive parts.
    pub fn from_divisor(f: &RatPoly, g: &RatPoly, divisor: &IntPoly) -> Result<Self> {
        let composed = f.compose(g);
        if composed.is_zero() {
            return Err(Error::Postcondition("f(g) is zero".into()));
        }
        let divisor = divisor.primitive_part();
        if divisor.deg() < 1 {
            return Err(Error::Postcondition("divisor is constant".into()));
        }
        let (scalar, prim) = composed.primitive_split();
        let cofactor = prim.div_exact(&divisor).ok_or_else(|| {
            Error::Postcondition(format!("{divisor} does not divide f(g) = {composed}"))
        })?;
        let w = SubstitutionWitness {
            target: f.clone(),
            substitution: g.clone(),
            divisor,
            cofactor,
            scalar,
        };
        w.verify()?;
        Ok(w)
    }

    pub fn composed(&self) -> RatPoly {
        self.target.compose(&self.substitution)
    }

    /// Re-checks `scalar · divisor · cofactor = f(g)` and the degree bounds.
    pub fn verify(&self) -> Result<()> {
        let lhs = (&self.divisor * &self.cofactor).to_rat().scale(&self.scalar);
        let composed = self.composed();
        if lhs != composed {
            return Err(Error::Postcondition(format!(
                "witness does not reconstruct f(g) for g = {}",
                self.substitution
            )));
        }
        let d = self.divisor.deg();
        if d < 1 || d > composed.deg() {
            return Err(Error::Postcondition(format!("divisor degree {d} out of range")));
        }
        Ok(())
    }

    /// True when the factorization is nontrivial, i.e. both parts have
    /// positive degree.
    pub fn is_proper(&self) -> bool {
        self.divisor.deg() >= 1 && self.cofactor.deg() >= 1
    }

    /// The substitution as an integer polynomial, if integral.
    pub fn integral_substitution(&self) -> Option<IntPoly> {
        self.substitution.to_int()
    }

    /// Transports the witness along the scale transform: if `g` works for
    /// `f` then `a·g` works for `a^deg(f) · f(x/a)`.
    pub fn transport_scale(&self, a: &Rational) -> Result<Self> {
        let scaled = self.target.shift_scale(&Rational::zero(), a)?;
        let g = self.substitution.scale(a);
        SubstitutionWitness::from_divisor(&scaled, &g, &self.divisor)
    }
}

fn require_irreducible(f: &IntPoly) -> Result<()> {
    if f.is_primitive() && is_irreducible_primitive(f) {
        Ok(())
    } else {
        Err(Error::Reducible(f.to_string()))
    }
}

/// `g = x^k·f + x`; then `g ≡ x (mod f)` so `f` divides `f(g)`.
pub fn naive_substitution(f: &IntPoly, k: usize) -> Result<SubstitutionWitness> {
    if f.deg() < 1 {
        return Err(Error::ConstantPolynomial("naive substitution needs degree ≥ 1"));
    }
    let g = &(&IntPoly::monomial(Integer::one(), k) * f) + &IntPoly::x();
    if g.deg() < 1 {
        return Err(Error::Shape(format!("x^{k}·f + x is constant for f = {f}")));
    }
    SubstitutionWitness::from_divisor(&f.to_rat(), &g.to_rat(), f)
}

/// Monic `f` over ℚ with `f(0) ≠ 0`: with `h = x^d f(1/x)` and
/// `g = (1 - h)/x`, `h` divides `f(g)` and `deg g = d - 1`.
pub fn field_substitution(f: &RatPoly) -> Result<SubstitutionWitness> {
    let d = f.deg();
    if d < 2 {
        return Err(Error::WrongDegree { expected: "≥ 2".into(), got: d });
    }
    if !f.is_monic() {
        return Err(Error::NotMonic(f.to_string()));
    }
    if f.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    require_irreducible(&f.primitive_split().1)?;
    let h = f.reversal();
    let numer = &RatPoly::one() - &h;
    let g = RatPoly::new(numer.coeffs()[1..].to_vec());
    if g.deg() != d - 1 {
        return Err(Error::Postcondition(format!("deg g = {} ≠ {}", g.deg(), d - 1)));
    }
    SubstitutionWitness::from_divisor(f, &g, &h.primitive_split().1)
}

/// The integral construction over ℤ for irreducible `f` of degree `d ≥ 3`:
/// shift by `s = a_{d-1}/((d-1)a_d)`, build `H(x) = x^d f(1/x - s)` and
/// `G = -H/(a_d x) + 1/x - s`, then rescale `x → Ax` with
/// `A = (d-1)² a_d²`. The rescaled `G̃` has integer coefficients and
/// degree `d - 1`, and the primitive part of `H̃` divides `f(G̃)`.
pub fn domain_substitution(f: &IntPoly) -> Result<SubstitutionWitness> {
    let d = f.deg();
    if d < 3 {
        return Err(Error::WrongDegree { expected: "≥ 3".into(), got: d });
    }
    require_irreducible(f)?;
    let ad = Rational::from_integer(f.lc());
    let dm1 = Rational::from_integer(Integer::from(d - 1));
    let s = Rational::from_integer(f.coeff(d - 1)) / (&dm1 * &ad);

    // H(x) = Σ a_i x^(d-i) (1 - s x)^i
    let one_minus_sx = RatPoly::new(vec![Rational::one(), -s.clone()]);
    let mut h = RatPoly::zero();
    for i in 0..=d {
        let term = &RatPoly::monomial(Rational::from_integer(f.coeff(i)), d - i)
            * &one_minus_sx.pow(i as u32);
        h = &h + &term;
    }
    if h.coeff(0) != ad {
        return Err(Error::Postcondition("H(0) ≠ a_d".into()));
    }
    // G = (a_d - H)/(a_d x) - s
    let numer = &RatPoly::constant(ad.clone()) - &h;
    let shifted = RatPoly::new(numer.coeffs()[1..].to_vec()).scale(&ad.recip());
    let g = &shifted - &RatPoly::constant(s);

    let a = &dm1 * &dm1 * &ad * &ad;
    let ax = RatPoly::monomial(a, 1);
    let g_tilde = g.compose(&ax);
    let h_tilde = h.compose(&ax);
    let g_int = g_tilde
        .to_int()
        .ok_or_else(|| Error::Postcondition(format!("G̃ = {g_tilde} is not integral")))?;
    if g_int.deg() != d - 1 {
        return Err(Error::Postcondition(format!("deg G̃ = {} ≠ {}", g_int.deg(), d - 1)));
    }
    if h_tilde.deg() != d {
        return Err(Error::Postcondition(format!("deg H̃ = {} ≠ {d}", h_tilde.deg())));
    }
    let w = SubstitutionWitness::from_divisor(&f.to_rat(), &g_tilde, &h_tilde.primitive_split().1)?;
    if !w.scalar.is_integer() {
        return Err(Error::Postcondition("factorization is not over ℤ".into()));
    }
    Ok(w)
}

/// `f = a·x + F(x²)` of degree `2N ≥ 4` with `a ≠ 0`: the substitution
/// `g = -F/a` sends `α²` to `α`, so `f(g)` has the degree-`2N` factor
/// `F(t)² - a²t` (the polynomial with `f(x)·f(-x) = P(x²)`).
pub fn even_split_substitution(f: &RatPoly) -> Result<SubstitutionWitness> {
    let n2 = f.deg();
    if n2 < 4 || n2 % 2 == 1 {
        return Err(Error::Shape(format!("degree must be even and ≥ 4, got {n2}")));
    }
    let a = f.coeff(1);
    if a.is_zero() {
        return Err(Error::Shape("linear coefficient is zero".into()));
    }
    if let Some(i) = (3..n2).step_by(2).find(|&i| !f.coeff(i).is_zero()) {
        return Err(Error::Shape(format!("coefficient of x^{i} is nonzero")));
    }
    let big_f = RatPoly::new((0..=n2 / 2).map(|i| f.coeff(2 * i)).collect());
    let g = big_f.scale(&(-a.recip()));
    let divisor = &(&big_f * &big_f) - &RatPoly::monomial(&a * &a, 1);
    SubstitutionWitness::from_divisor(f, &g, &divisor.primitive_split().1)
}

/// `8c - 4ab + a³` for monic `x⁴ + ax³ + bx² + cx + d`: eight times the
/// linear coefficient after depressing the cubic term.
pub fn quartic_criterion(f: &RatPoly) -> Rational {
    let (a, b, c) = (f.coeff(3), f.coeff(2), f.coeff(1));
    Rational::from_integer(8.into()) * &c - Rational::from_integer(4.into()) * &a * &b + &a * &a * &a
}

/// Monic irreducible quartic: when the criterion is nonzero, depress by
/// `x → x - a/4`, split the depressed polynomial, and shift the substitution
/// back. `None` means the criterion does not apply.
pub fn quartic_witness(f: &RatPoly) -> Result<Option<SubstitutionWitness>> {
    if f.deg() != 4 {
        return Err(Error::WrongDegree { expected: "4".into(), got: f.deg() });
    }
    if !f.is_monic() {
        return Err(Error::NotMonic(f.to_string()));
    }
    require_irreducible(&f.primitive_split().1)?;
    if quartic_criterion(f).is_zero() {
        return Ok(None);
    }
    let shift = f.coeff(3) / Rational::from_integer(4.into());
    let depressed = f.shift_scale(&-shift.clone(), &Rational::one())?;
    let inner = even_split_substitution(&depressed)?;
    let g = &inner.substitution - &RatPoly::constant(shift);
    SubstitutionWitness::from_divisor(f, &g, &inner.divisor).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn naive_linear() {
        let w = naive_substitution(&ip(&[1, 1]), 1).unwrap();
        assert_eq!(w.substitution, rp(&[0, 2, 1]));
        assert_eq!(w.divisor, ip(&[1, 1]));
        assert_eq!(w.cofactor, ip(&[1, 1]));
    }

    #[test]
    fn naive_quadratic_k0() {
        let w = naive_substitution(&ip(&[1, 0, 1]), 0).unwrap();
        assert_eq!(w.substitution, rp(&[1, 1, 1]));
        assert_eq!(w.divisor, ip(&[1, 0, 1]));
        assert_eq!(w.cofactor, ip(&[2, 2, 1]));
        assert!(w.is_proper());
    }

    #[test]
    fn naive_nonprimitive_target() {
        let w = naive_substitution(&ip(&[4, 6, 2]), 2).unwrap();
        assert_eq!(w.substitution.deg(), 4);
        w.verify().unwrap();
    }

    #[test]
    fn field_cubic() {
        let w = field_substitution(&rp(&[1, 2, 0, 1])).unwrap();
        assert_eq!(w.substitution, rp(&[0, -2, -1]));
        assert_eq!(w.divisor, ip(&[1, 0, 2, 1]));
        assert!(w.is_proper());
    }

    #[test]
    fn field_quadratic_is_degenerate() {
        let w = field_substitution(&rp(&[1, 0, 1])).unwrap();
        assert_eq!(w.substitution, rp(&[0, -1]));
        assert_eq!(w.divisor, ip(&[1, 0, 1]));
        assert!(!w.is_proper());
    }

    #[test]
    fn field_errors() {
        assert!(matches!(field_substitution(&rp(&[1, 2, 0, 2])), Err(Error::NotMonic(_))));
        assert_eq!(field_substitution(&rp(&[0, 2, 0, 1])), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn domain_monic_cubic() {
        let w = domain_substitution(&ip(&[1, 2, 0, 1])).unwrap();
        assert_eq!(w.integral_substitution(), Some(ip(&[0, -8, -16])));
        assert_eq!(w.divisor.deg(), 3);
        assert!(w.scalar.is_integer());
    }

    #[test]
    fn domain_nonmonic_cubic() {
        let w = domain_substitution(&ip(&[1, 1, 0, 2])).unwrap();
        let g = w.integral_substitution().unwrap();
        assert_eq!(g.deg(), 2);
        assert_eq!(w.divisor.deg(), 3);
        assert!(w.is_proper());
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(domain_substitution(&ip(&[1, 0, 1])), Err(Error::WrongDegree { .. })));
        assert!(matches!(domain_substitution(&ip(&[-1, 0, 0, 1])), Err(Error::Reducible(_))));
    }

    #[test]
    fn even_split_examples() {
        let w = even_split_substitution(&rp(&[3, 2, 1, 0, 1])).unwrap();
        assert_eq!(w.substitution, RatPoly::new(vec![rat(-3, 2), rat(-1, 2), rat(-1, 2)]));
        assert_eq!(w.divisor.deg(), 4);
        assert_eq!(w.cofactor.deg(), 4);
        let w = even_split_substitution(&rp(&[7, 2, 0, 0, 4, 0, 1])).unwrap();
        assert_eq!(w.substitution, RatPoly::new(vec![rat(-7, 2), rat(0, 1), rat(-2, 1), rat(-1, 2)]));
        assert_eq!(w.divisor.deg(), 6);
        assert!(matches!(even_split_substitution(&rp(&[1, 0, 0, 0, 1])), Err(Error::Shape(_))));
        assert!(matches!(even_split_substitution(&rp(&[1, 1, 0, 1, 1])), Err(Error::Shape(_))));
    }

    #[test]
    fn quartic_examples() {
        let f = rp(&[3, 2, 1, 0, 1]);
        assert_eq!(quartic_criterion(&f), rat(16, 1));
        let w = quartic_witness(&f).unwrap().unwrap();
        assert_eq!(w.substitution, RatPoly::new(vec![rat(-3, 2), rat(-1, 2), rat(-1, 2)]));

        assert_eq!(quartic_witness(&rp(&[1, 0, 0, 0, 1])).unwrap(), None);

        let f = rp(&[1, 2, 0, 4, 1]);
        assert_eq!(quartic_criterion(&f), rat(80, 1));
        let w = quartic_witness(&f).unwrap().unwrap();
        assert!(w.is_proper());
        assert!(!crate::factor::is_irreducible_over_rationals(&w.composed()).unwrap());
    }

    #[test]
    fn scale_transport() {
        let w = even_split_substitution(&rp(&[3, 2, 1, 0, 1])).unwrap();
        let t = w.transport_scale(&rat(3, 1)).unwrap();
        assert_eq!(t.target, rp(&[243, 54, 9, 0, 1]));
        assert!(t.is_proper());
        let _ = int(0);
    }
}
