//! Dense univariate polynomials over arbitrary-precision integers and rationals.
//!
//! Coefficients are stored low degree first and the representation is always
//! trimmed, so the last stored coefficient is nonzero unless the polynomial is
//! zero (which stores nothing). All values are immutable once built.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Anything we can store as a polynomial coefficient.
pub trait Coeff:
    Clone + fmt::Debug + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + fmt::Debug + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type IntPoly = Poly<Integer>;
pub type RatPoly = Poly<Rational>;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; handy where the caller has
    /// already excluded zero.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn lc(&self) -> T {
        self.leading().cloned().unwrap_or_else(T::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn map<U: Coeff>(&self, f: impl FnMut(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.map(|a| a.clone() * c.clone())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `f(g(x))`, by Horner's scheme over polynomials.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let mut n = T::zero();
                for _ in 0..i {
                    n = n + T::one();
                }
                n * c.clone()
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicity of `0` as a root.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `f(-x)`.
    pub fn mirror(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }
}

impl<'a, T: Coeff> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, T: Coeff> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, T: Coeff> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        self.map(|c| -c.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Integer polynomials

impl IntPoly {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn to_rat(&self) -> RatPoly {
        self.map(|c| Rational::from_integer(c.clone()))
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> Integer {
        self.coeffs
            .iter()
            .fold(Integer::zero(), |acc, c| acc.gcd(c))
    }

    /// Splits `f` as content × primitive part. The primitive part has a
    /// positive leading coefficient; the content carries the sign.
    pub fn content_primitive(&self) -> Result<(Integer, IntPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("content"));
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        let prim = self.map(|a| a / &c);
        Ok((c, prim))
    }

    pub fn primitive_part(&self) -> IntPoly {
        match self.content_primitive() {
            Ok((_, p)) => p,
            Err(_) => IntPoly::zero(),
        }
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.content().is_one()
    }

    pub fn max_abs_coeff(&self) -> Integer {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Integer::zero)
    }

    /// Exact quotient `self / d` over the integers, or `None` when `d` does
    /// not divide `self` in `ℤ[x]`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.deg();
        if self.deg() < dd {
            return None;
        }
        let lc = d.lc();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Integer::zero(); self.deg() - dd + 1];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(IntPoly::new(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) · a mod b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.deg();
        if self.is_zero() || self.deg() < db {
            return self.clone();
        }
        let lc = b.lc();
        let mut rem = self.coeffs.clone();
        let mut extra = self.deg() - db + 1;
        while rem.len() > db && !rem.is_empty() {
            let top = rem.last().unwrap().clone();
            let shift = rem.len() - 1 - db;
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                rem[shift + j] -= &top * bc;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            extra -= 1;
        }
        let mut r = IntPoly::new(rem);
        if extra > 0 {
            r = r.scale(&num_traits::pow(lc, extra));
        }
        r
    }

    /// Resultant over ℤ by the subresultant polynomial remainder sequence.
    pub fn resultant(&self, other: &IntPoly) -> Integer {
        subresultant(self, other)
    }

    /// Gcd in ℤ[x] via primitive remainder sequences, normalized to positive
    /// leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part_signed_content();
        }
        if other.is_zero() {
            return self.primitive_part_signed_content();
        }
        let cont = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&cont)
    }

    fn primitive_part_signed_content(&self) -> IntPoly {
        if self.lc().is_negative() {
            -self
        } else {
            self.clone()
        }
    }
}

fn subresultant(a: &IntPoly, b: &IntPoly) -> Integer {
    if a.is_zero() || b.is_zero() {
        return Integer::zero();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut sign = Integer::one();
    if a.deg() < b.deg() {
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.deg() == 0 {
        return sign * num_traits::pow(b.lc(), a.deg());
    }
    let (ca, pa) = content_abs(&a);
    let (cb, pb) = content_abs(&b);
    let t = num_traits::pow(ca, b.deg()) * num_traits::pow(cb, a.deg());
    a = pa;
    b = pb;
    let mut g = Integer::one();
    let mut h = Integer::one();
    loop {
        let delta = a.deg() - b.deg();
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let divisor = &g * num_traits::pow(h.clone(), delta);
        b = r.map(|c| c / &divisor);
        g = a.lc();
        // h <- g^delta / h^(delta-1)
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
        if b.is_zero() {
            return Integer::zero();
        }
        if b.deg() == 0 {
            break;
        }
    }
    let da = a.deg();
    let hfinal = if da == 0 {
        h
    } else {
        num_traits::pow(b.lc(), da) / num_traits::pow(h, da - 1)
    };
    sign * t * hfinal
}

fn content_abs(p: &IntPoly) -> (Integer, IntPoly) {
    let c = p.content();
    (c.clone(), p.map(|a| a / &c))
}

// ---------------------------------------------------------------------------
// Rational polynomials

impl RatPoly {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        IntPoly::from_i64s(coeffs).to_rat()
    }

    /// Canonical split `self = scalar × primitive` with the primitive integer
    /// part having positive leading coefficient.
    pub fn primitive_split(&self) -> (Rational, IntPoly) {
        if self.is_zero() {
            return (Rational::zero(), IntPoly::zero());
        }
        let den = self
            .coeffs
            .iter()
            .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
        let ints = IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
                .collect(),
        );
        let (content, prim) = ints.content_primitive().expect("nonzero");
        (Rational::new(content, den), prim)
    }

    /// Returns the polynomial as an `IntPoly` if every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(IntPoly::new(self.coeffs.iter().map(|c| c.to_integer()).collect()))
        } else {
            None
        }
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
            None => RatPoly::zero(),
        }
    }

    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.deg() < d.deg() || self.is_zero() {
            return (RatPoly::zero(), self.clone());
        }
        let dd = d.deg();
        let inv = d.lc().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.deg() - dd + 1];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] * &inv;
            if q.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &q * dc;
            }
            quot[i] = q;
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        self.div_rem(d).1
    }

    /// Monic gcd over ℚ.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (_, a) = self.primitive_split();
        let (_, b) = other.primitive_split();
        a.gcd(&b).to_rat().monic()
    }

    /// `x^deg(f) · f(1/x)`.
    pub fn reversal(&self) -> RatPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        RatPoly::new(c)
    }

    /// `a^deg(f) · f((x + s) / a)`. With `s = 0` this is the scale transform
    /// under which superirreducibility is invariant.
    pub fn shift_scale(&self, s: &Rational, a: &Rational) -> Result<RatPoly> {
        if a.is_zero() {
            return Err(Error::ZeroScale);
        }
        let inner = RatPoly::new(vec![s / a, a.recip()]);
        let factor = num_traits::pow(a.clone(), self.deg());
        Ok(self.compose(&inner).scale(&factor))
    }

    /// Resultant over ℚ, computed on the integer primitive parts.
    pub fn resultant(&self, other: &RatPoly) -> Rational {
        if self.is_zero() || other.is_zero() {
            return Rational::zero();
        }
        let (cf, pf) = self.primitive_split();
        let (cg, pg) = other.primitive_split();
        let r = Rational::from_integer(pf.resultant(&pg));
        r * num_traits::pow(cf, other.deg()) * num_traits::pow(cg, self.deg())
    }

    /// `(-1)^(d(d-1)/2) · Res(f, f') / lc(f)`.
    pub fn discriminant(&self) -> Result<Rational> {
        let d = self.deg();
        if d < 1 {
            return Err(Error::ConstantPolynomial("discriminant needs degree ≥ 1"));
        }
        let r = self.resultant(&self.derivative()) / self.lc();
        Ok(if (d * (d - 1) / 2) % 2 == 1 { -r } else { r })
    }
}

// ---------------------------------------------------------------------------
// Rendering. The output is accepted by the expression parser.

fn fmt_terms<T, F>(coeffs: &[T], f: &mut fmt::Formatter<'_>, split: F) -> fmt::Result
where
    T: Coeff,
    F: Fn(&T) -> (bool, String, bool),
{
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (negative, mag, mag_is_one) = split(c);
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if negative { "-" } else { "+" })?;
        }
        first = false;
        let var = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        if i == 0 {
            write!(f, "{mag}")?;
        } else if mag_is_one {
            write!(f, "{var}")?;
        } else {
            write!(f, "{mag}*{var}")?;
        }
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(&self.coeffs, f, |c| (c.is_negative(), c.abs().to_string(), c.abs().is_one()))
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(&self.coeffs, f, |c| (c.is_negative(), c.abs().to_string(), c.abs().is_one()))
    }
}

// ---------------------------------------------------------------------------
// Serialization: coefficient lists as decimal strings, low degree first.

impl<T: Coeff + fmt::Display> serde::Serialize for Poly<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de, T> serde::Deserialize<'de> for Poly<T>
where
    T: Coeff + std::str::FromStr,
    T::Err: fmt::Display,
{
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|c| c.parse::<T>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

/// `#[serde(with = ...)]` adapter writing a number as its decimal string.
pub mod as_string {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(rp(&[1, 1]) * rp(&[-1, 1]), rp(&[-1, 0, 1]));
        assert_eq!(rp(&[1, 0, 1]) * rp(&[2, 2, 1]), rp(&[2, 2, 3, 2, 1]));
        let f = rp(&[3, 2, 1, 0, 1]);
        assert_eq!(&f * &RatPoly::one(), f);
    }

    #[test]
    fn compose_examples() {
        let f = rp(&[1, 0, 0, 0, 1]);
        assert_eq!(f.compose(&rp(&[0, 0, 1])), rp(&[1, 0, 0, 0, 0, 0, 0, 0, 1]));
        let f = rp(&[3, 2, 1, 0, 1]);
        assert_eq!(f.compose(&RatPoly::x()), f);
        let g = RatPoly::new(vec![rat(-3, 2), rat(-1, 2), rat(-1, 2)]);
        assert_eq!(f.compose(&g).degree(), Some(8));
    }

    #[test]
    fn content_primitive_examples() {
        let (c, p) = IntPoly::from_i64s(&[4, 0, 6]).content_primitive().unwrap();
        assert_eq!((c, p), (int(2), IntPoly::from_i64s(&[2, 0, 3])));
        let (c, p) = IntPoly::from_i64s(&[0, -3]).content_primitive().unwrap();
        assert_eq!((c, p), (int(-3), IntPoly::from_i64s(&[0, 1])));
        let (c, p) = IntPoly::from_i64s(&[5]).content_primitive().unwrap();
        assert_eq!((c, p), (int(5), IntPoly::one()));
        assert!(IntPoly::zero().content_primitive().is_err());
    }

    #[test]
    fn reversal_examples() {
        assert_eq!(rp(&[1, 2, 0, 1]).reversal(), rp(&[1, 0, 2, 1]));
        let f = rp(&[7, 0, 3, 1]);
        assert_eq!(f.reversal().coeff(0), rat(1, 1));
        assert_eq!(f.reversal().reversal(), f);
        // x^2 (x + 1) -> 1 + x, degree drops by the root-0 multiplicity
        assert_eq!(rp(&[0, 0, 1, 1]).reversal(), rp(&[1, 1]));
    }

    #[test]
    fn shift_scale_examples() {
        let one = rat(1, 1);
        let zero = rat(0, 1);
        assert_eq!(rp(&[0, 0, 1]).shift_scale(&one, &one).unwrap(), rp(&[1, 2, 1]));
        let f = rp(&[3, 2, 0, 0, 1]);
        assert_eq!(f.shift_scale(&zero, &rat(2, 1)).unwrap(), rp(&[48, 16, 0, 0, 1]));
        assert_eq!(f.shift_scale(&zero, &one).unwrap(), f);
        assert_eq!(f.shift_scale(&zero, &zero), Err(Error::ZeroScale));
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(rp(&[1, 0, 1]).resultant(&rp(&[0, 1])), rat(1, 1));
        // Res(x - 3, g) = g(3)
        let g = rp(&[5, -1, 2]);
        assert_eq!(rp(&[-3, 1]).resultant(&g), g.eval(&rat(3, 1)));
        assert_eq!(rp(&[1, 0, 0, 0, 1]).resultant(&rp(&[2, 1])), rat(17, 1));
    }

    #[test]
    fn discriminant_examples() {
        // b^2 - 4c with b = 3, c = -5
        assert_eq!(rp(&[-5, 3, 1]).discriminant().unwrap(), rat(29, 1));
        assert_eq!(rp(&[1, 2, 0, 1]).discriminant().unwrap(), rat(-59, 1));
        assert_eq!(rp(&[1, 2, 0, 0, 0, 1]).discriminant().unwrap(), rat(11317, 1));
        assert!(rp(&[4]).discriminant().is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(rp(&[1, 2, 0, 0, 1]).to_string(), "x^4 + 2*x + 1");
        assert_eq!(rp(&[0, -1]).to_string(), "-x");
        let g = RatPoly::new(vec![rat(-3, 2), rat(-1, 2), rat(-1, 2)]);
        assert_eq!(g.to_string(), "-1/2*x^2 - 1/2*x - 3/2");
        assert_eq!(RatPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_coefficients() {
        let g = RatPoly::new(vec![rat(-3, 2), rat(0, 1), rat(1, 1)]);
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"["-3/2","0","1"]"#);
        assert_eq!(serde_json::from_str::<RatPoly>(&text).unwrap(), g);
    }

    #[test]
    fn exact_division() {
        let a = IntPoly::from_i64s(&[2, -2, 1]);
        let b = IntPoly::from_i64s(&[2, 2, 1]);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a), Some(b));
        assert_eq!(p.div_exact(&IntPoly::from_i64s(&[1, 1])), None);
        assert_eq!(IntPoly::from_i64s(&[1, 2]).div_exact(&IntPoly::from_i64s(&[0, 2])), None);
    }

    #[test]
    fn integer_gcd() {
        let a = IntPoly::from_i64s(&[1, 1]);
        let b = IntPoly::from_i64s(&[-1, 1]);
        let c = IntPoly::from_i64s(&[3, 0, 1]);
        let g = (&a * &c).scale(&int(6)).gcd(&(&b * &c).scale(&int(4)));
        assert_eq!(g, c.scale(&int(2)));
    }
}
