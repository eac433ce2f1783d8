//! Arithmetic in `ℚ(α) = ℚ[x]/(f)` for a monic irreducible integer modulus.
//!
//! Elements are stored by their power-basis coordinates in `1, α, …, α^(d-1)`.
//! Square roots are found by factoring `t² - u` over `ℚ(α)` with the norm
//! method: shift by a multiple of `α` until the norm down to `ℚ` is
//! squarefree, factor that norm over `ℚ`, and pull linear factors back with a
//! gcd in `ℚ(α)[t]`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factor::{factor_over_rationals, is_irreducible_primitive};
use crate::poly::{IntPoly, RatPoly, Rational};

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct NumberField {
    modulus: IntPoly,
    modulus_rat: RatPoly,
}

impl NumberField {
    pub fn new(modulus: IntPoly) -> Result<Arc<Self>> {
        if modulus.deg() < 1 {
            return Err(Error::ConstantPolynomial("number field modulus"));
        }
        if !modulus.is_monic() {
            return Err(Error::NotMonic(modulus.to_string()));
        }
        if !is_irreducible_primitive(&modulus) {
            return Err(Error::Reducible(modulus.to_string()));
        }
        let modulus_rat = modulus.to_rat();
        Ok(Arc::new(NumberField { modulus, modulus_rat }))
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }
}

#[derive(Clone, Debug)]
pub struct NumberFieldElement {
    field: Arc<NumberField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for NumberFieldElement {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for NumberFieldElement {}

fn same_field(a: &Arc<NumberField>, b: &Arc<NumberField>) -> bool {
    Arc::ptr_eq(a, b) || a.modulus == b.modulus
}

/// Builds elements of a field.
pub trait FieldExt {
    fn element(&self, poly: &RatPoly) -> NumberFieldElement;
    #[allow(clippy::wrong_self_convention)]
    fn from_coords(&self, coords: Vec<Rational>) -> NumberFieldElement;
    fn scalar(&self, r: Rational) -> NumberFieldElement;
    fn generator(&self) -> NumberFieldElement;
}

impl FieldExt for Arc<NumberField> {
    /// Reduces `poly(α)` to canonical power-basis form.
    fn element(&self, poly: &RatPoly) -> NumberFieldElement {
        let r = poly.rem(&self.modulus_rat);
        let d = self.degree();
        let coeffs = (0..d).map(|i| r.coeff(i)).collect();
        NumberFieldElement { field: Arc::clone(self), coeffs }
    }

    fn from_coords(&self, coords: Vec<Rational>) -> NumberFieldElement {
        self.element(&RatPoly::new(coords))
    }

    fn scalar(&self, r: Rational) -> NumberFieldElement {
        self.element(&RatPoly::constant(r))
    }

    fn generator(&self) -> NumberFieldElement {
        self.element(&RatPoly::x())
    }
}

impl NumberFieldElement {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> RatPoly {
        RatPoly::new(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn field_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.field.element(&(&self.to_poly() * &other.to_poly())))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.field.element(&(&self.to_poly() + &other.to_poly())))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.field.element(&(&self.to_poly() - &other.to_poly())))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.field.element(&self.to_poly().scale(r))
    }

    pub fn square(&self) -> Self {
        self.field_mul(self).expect("same field")
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = rat_xgcd(&self.to_poly(), &self.field.modulus_rat);
        debug_assert_eq!(g.deg(), 0);
        Some(self.field.element(&s.scale(&g.lc().recip())))
    }

    /// `N(u) = Res(modulus, U)`, the product of the conjugates.
    pub fn norm(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        self.field.modulus_rat.resultant(&self.to_poly())
    }

    /// A square root in `ℚ(α)` if one exists. Of the two roots `±γ`, the one
    /// with the lexicographically smaller coordinate sequence is returned.
    pub fn is_square(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let root = sqrt_by_norm(self)?;
        debug_assert_eq!(root.square(), *self);
        let neg = -&root;
        Some(if lex_cmp(&neg, &root) == Ordering::Less { neg } else { root })
    }

    /// Evaluates a rational polynomial at this element.
    pub fn eval(&self, g: &RatPoly) -> Self {
        let mut acc = self.field.scalar(Rational::zero());
        for c in g.coeffs().iter().rev() {
            acc = acc.field_mul(self).expect("same field");
            acc = acc.try_add(&self.field.scalar(c.clone())).expect("same field");
        }
        acc
    }
}

fn lex_cmp(a: &NumberFieldElement, b: &NumberFieldElement) -> Ordering {
    a.coeffs.cmp(&b.coeffs)
}

impl<'a> Add<&'a NumberFieldElement> for &'a NumberFieldElement {
    type Output = NumberFieldElement;
    fn add(self, rhs: &'a NumberFieldElement) -> NumberFieldElement {
        self.try_add(rhs).expect("elements of the same field")
    }
}

impl<'a> Sub<&'a NumberFieldElement> for &'a NumberFieldElement {
    type Output = NumberFieldElement;
    fn sub(self, rhs: &'a NumberFieldElement) -> NumberFieldElement {
        self.try_sub(rhs).expect("elements of the same field")
    }
}

impl<'a> std::ops::Mul<&'a NumberFieldElement> for &'a NumberFieldElement {
    type Output = NumberFieldElement;
    fn mul(self, rhs: &'a NumberFieldElement) -> NumberFieldElement {
        self.field_mul(rhs).expect("elements of the same field")
    }
}

impl Neg for &NumberFieldElement {
    type Output = NumberFieldElement;
    fn neg(self) -> NumberFieldElement {
        NumberFieldElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_poly().to_string().replace('x', "α");
        write!(f, "{s}")
    }
}

/// Extended Euclid over ℚ: `(g, s, t)` with `s·a + t·b = g`.
fn rat_xgcd(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (RatPoly::one(), RatPoly::zero());
    let (mut t0, mut t1) = (RatPoly::zero(), RatPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let s2 = &s0 - &(&q * &s1);
        s0 = std::mem::replace(&mut s1, s2);
        let t2 = &t0 - &(&q * &t1);
        t0 = std::mem::replace(&mut t1, t2);
    }
    (r0, s0, t0)
}

/// Shift sequence 0, 1, -1, 2, -2, …
fn shifts() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..).flat_map(|s| [s, -s]))
}

/// Lagrange interpolation through `(x_i, y_i)` over ℚ.
fn interpolate(points: &[(Rational, Rational)]) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (j, (xj, yj)) in points.iter().enumerate() {
        if yj.is_zero() {
            continue;
        }
        let mut basis = RatPoly::constant(yj.clone());
        for (i, (xi, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = (xj - xi).recip();
            basis = &basis * &RatPoly::new(vec![-xi * &denom, denom]);
        }
        acc = &acc + &basis;
    }
    acc
}

/// `Res_y(f(y), (t - s·y)² - U(y))` as a polynomial in `t`.
fn shifted_norm(u: &NumberFieldElement, s: i64) -> RatPoly {
    let field = u.field();
    let d = field.degree();
    let upoly = u.to_poly();
    let sy = RatPoly::monomial(Rational::from_integer(s.into()), 1);
    let points: Vec<_> = (0..=2 * d as i64)
        .map(|tj| {
            let t = Rational::from_integer(tj.into());
            let lin = &RatPoly::constant(t.clone()) - &sy;
            let h = &(&lin * &lin) - &upoly;
            (t, field.modulus_rat.resultant(&h))
        })
        .collect();
    interpolate(&points)
}

type FieldPoly = Vec<NumberFieldElement>;

fn fp_trim(mut a: FieldPoly) -> FieldPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn fp_rem(a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let inv = b[db].inverse().expect("nonzero leading coefficient");
    while r.len() > db {
        let top = r.last().unwrap();
        if top.is_zero() {
            r.pop();
            continue;
        }
        let q = top * &inv;
        let shift = r.len() - 1 - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &(&q * bc);
        }
        r.pop();
    }
    fp_trim(r)
}

fn fp_gcd(a: FieldPoly, b: FieldPoly) -> FieldPoly {
    let (mut a, mut b) = (fp_trim(a), fp_trim(b));
    while !b.is_empty() {
        let r = fp_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lc) = a.last().cloned() {
        let inv = lc.inverse().expect("nonzero");
        a = a.iter().map(|c| c * &inv).collect();
    }
    a
}

fn sqrt_by_norm(u: &NumberFieldElement) -> Option<NumberFieldElement> {
    let field = u.field();
    let d = field.degree();
    let alpha = field.generator();
    for s in shifts() {
        let norm = shifted_norm(u, s);
        if norm.gcd(&norm.derivative()).deg() > 0 {
            continue;
        }
        let fac = factor_over_rationals(&norm).expect("nonzero norm");
        let s_alpha = alpha.scale(&Rational::from_integer(s.into()));
        // (t - sα)² - u = t² - 2sα·t + (s²α² - u)
        let v: FieldPoly = vec![
            &s_alpha.square() - u,
            -&s_alpha.scale(&Rational::from_integer(2.into())),
            field.scalar(Rational::one()),
        ];
        for (g, _) in fac.factors.iter().filter(|(g, _)| g.deg() == d) {
            let lifted: FieldPoly = g.coeffs().iter().map(|c| field.scalar(Rational::from_integer(c.clone()))).collect();
            let h = fp_gcd(v.clone(), lifted);
            if h.len() == 2 {
                // h = t + h0, root r = -h0, γ = r - sα
                let root = -&h[0];
                let gamma = &root - &s_alpha;
                if gamma.square() == *u {
                    return Some(gamma);
                }
            }
        }
        return None;
    }
    unreachable!("shift sequence is infinite")
}

/// Solves `g(t) = α` in `ℚ(α)` for a quadratic `g` with rational
/// coefficients: `t₀ = (γ - c) / 2b` with `γ² = c² - 4b·d + 4b·α`.
pub fn quadratic_preimage(
    field: &Arc<NumberField>,
    g: &RatPoly,
) -> Result<Option<NumberFieldElement>> {
    if g.degree() != Some(2) {
        return Err(Error::WrongDegree { expected: "2".into(), got: g.deg() });
    }
    let (d, c, b) = (g.coeff(0), g.coeff(1), g.coeff(2));
    let four_b = &b * Rational::from_integer(4.into());
    let w = field.from_coords(vec![&c * &c - &four_b * &d, four_b.clone()]);
    let Some(gamma) = w.is_square() else {
        return Ok(None);
    };
    let two_b_inv = (&b * Rational::from_integer(2.into())).recip();
    let t0 = (&gamma - &field.scalar(c)).scale(&two_b_inv);
    let alpha = field.generator();
    if t0.eval(g) != alpha {
        return Err(Error::Postcondition(format!("g({t0}) ≠ α")));
    }
    Ok(Some(t0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn field(c: &[i64]) -> Arc<NumberField> {
        NumberField::new(IntPoly::from_i64s(c)).unwrap()
    }

    fn el(k: &Arc<NumberField>, c: &[i64]) -> NumberFieldElement {
        k.element(&RatPoly::from_ints(c))
    }

    #[test]
    fn field_mul_examples() {
        let k = field(&[1, 0, 0, 0, 1]);
        let a2 = el(&k, &[0, 0, 1]);
        assert_eq!(a2.field_mul(&a2).unwrap(), el(&k, &[-1]));
        let a1 = el(&k, &[1, 1]);
        assert_eq!(a1.square(), el(&k, &[1, 2, 1]));
        assert_eq!(el(&k, &[0, 0, 0, 1]).field_mul(&a2).unwrap(), el(&k, &[0, -1]));
    }

    #[test]
    fn field_mismatch() {
        let k = field(&[1, 0, 0, 0, 1]);
        let l = field(&[2, 0, 0, 0, 1]);
        assert_eq!(k.generator().field_mul(&l.generator()), Err(Error::FieldMismatch));
    }

    #[test]
    fn modulus_checks() {
        assert!(matches!(NumberField::new(IntPoly::from_i64s(&[4, 0, 0, 0, 1])), Err(Error::Reducible(_))));
        assert!(matches!(NumberField::new(IntPoly::from_i64s(&[1, 0, 2])), Err(Error::NotMonic(_))));
    }

    #[test]
    fn norm_examples() {
        let k = field(&[1, 0, 0, 0, 1]);
        assert_eq!(el(&k, &[2, 1]).norm(), rat(17, 1));
        assert_eq!(k.generator().norm(), rat(1, 1));
        assert_eq!(k.scalar(rat(3, 2)).norm(), rat(81, 16));
        assert_eq!(k.scalar(rat(0, 1)).norm(), rat(0, 1));
    }

    #[test]
    fn inverse_roundtrip() {
        let k = field(&[3, 2, 1, 0, 1]);
        let u = el(&k, &[1, -2, 0, 5]);
        let inv = u.inverse().unwrap();
        assert_eq!(&u * &inv, k.scalar(rat(1, 1)));
    }

    #[test]
    fn is_square_examples() {
        let k = field(&[1, 0, 0, 0, 1]);
        let a = k.generator();
        // ±α, lexicographically smaller coordinates first: -α < α
        assert_eq!(a.square().is_square(), Some(-&a));
        let minus_one = k.scalar(rat(-1, 1));
        let r = minus_one.is_square().unwrap();
        assert_eq!(r.square(), minus_one);
        assert!(r == el(&k, &[0, 0, 1]) || r == el(&k, &[0, 0, -1]));
        assert_eq!(a.is_square(), None);
        assert_eq!(k.scalar(rat(0, 1)).is_square(), Some(k.scalar(rat(0, 1))));
    }

    #[test]
    fn preimage_of_even_split_example() {
        let k = field(&[3, 2, 1, 0, 1]);
        let g = RatPoly::new(vec![rat(-3, 2), rat(-1, 2), rat(-1, 2)]);
        let t0 = quadratic_preimage(&k, &g).unwrap().unwrap();
        assert_eq!(t0.coords(), &[rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1)]);
    }

    #[test]
    fn preimage_absent_for_x4_plus_1() {
        let k = field(&[1, 0, 0, 0, 1]);
        assert_eq!(quadratic_preimage(&k, &RatPoly::from_ints(&[0, 0, 1])).unwrap(), None);
        assert!(matches!(
            quadratic_preimage(&k, &RatPoly::from_ints(&[0, 1])),
            Err(Error::WrongDegree { .. })
        ));
    }
}
