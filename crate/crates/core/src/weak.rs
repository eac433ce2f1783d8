//! The trinomial family `f_k = x^{2k+1} + 2x + 1`: discriminants, squaring
//! in `ℤ[θ]/(f_k)`, the mod-4 obstruction, and bounded weak checks.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::is_irreducible_primitive;
use crate::poly::{as_string, Integer, IntPoly};

fn check_k(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must be at least 2, got {k}")));
    }
    Ok(())
}

/// `x^{2k+1} + 2x + 1` for `k ≥ 2`.
pub fn trinomial(k: u32) -> Result<IntPoly> {
    check_k(k)?;
    let n = 2 * k as usize + 1;
    let mut c = vec![Integer::zero(); n + 1];
    c[0] = Integer::one();
    c[1] = Integer::from(2);
    c[n] = Integer::one();
    Ok(IntPoly::new(c))
}

/// `(-1)^k ((2k+1)^{2k+1} + 2^{2k+1} (2k)^{2k})`.
pub fn trinomial_disc_closed_form(k: u32) -> Integer {
    let n = 2 * k + 1;
    let v = num_traits::pow(Integer::from(n), n as usize)
        + num_traits::pow(Integer::from(2), n as usize) * num_traits::pow(Integer::from(2 * k), 2 * k as usize);
    if k.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// The discriminant of `f_k`, computed both in closed form and by
/// resultants; the two must agree and be odd.
pub fn trinomial_disc(k: u32) -> Result<Integer> {
    let f = trinomial(k)?;
    let closed = trinomial_disc_closed_form(k);
    let disc = f.to_rat().discriminant()?;
    if !disc.is_integer() || disc.numer() != &closed {
        return Err(Error::DiscriminantMismatch { k, closed: closed.to_string(), resultant: disc.to_string() });
    }
    if num_integer::Integer::is_even(&closed) {
        return Err(Error::Postcondition(format!("discriminant of f_{k} is even")));
    }
    Ok(closed)
}

/// An element `Σ A_i θ^i` of `ℤ[θ]/(f_k)` in the power basis. Elements of
/// the ring of integers have the form `(Σ a_i θ^i)/m` with `m` odd, since
/// the discriminant is odd, so parity arguments run on these coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderElement {
    pub k: u32,
    pub coords: Vec<Integer>,
}

impl OrderElement {
    pub fn new(k: u32, coords: Vec<Integer>) -> Result<Self> {
        check_k(k)?;
        if coords.len() != 2 * k as usize + 1 {
            return Err(Error::InvalidArgument(format!(
                "expected {} coordinates, got {}",
                2 * k + 1,
                coords.len()
            )));
        }
        Ok(OrderElement { k, coords })
    }

    pub fn from_i64s(k: u32, coords: &[i64]) -> Result<Self> {
        Self::new(k, coords.iter().map(|&c| Integer::from(c)).collect())
    }

    /// `θ^e` reduced into the power basis.
    pub fn theta_power(k: u32, e: usize) -> Result<Self> {
        check_k(k)?;
        let n = 2 * k as usize + 1;
        let mut c = vec![Integer::zero(); e.max(n - 1) + 1];
        c[e] = Integer::one();
        reduce_powers(&mut c, k);
        c.truncate(n);
        Self::new(k, c)
    }
}

/// Rewrites `θ^{2k+j} = -2θ^j - θ^{j-1}` from the top down.
fn reduce_powers<T>(c: &mut [T], k: u32)
where
    T: Clone + for<'a> std::ops::SubAssign<&'a T> + for<'a> std::ops::AddAssign<&'a T> + Zero,
{
    let n = 2 * k as usize + 1;
    for e in (n..c.len()).rev() {
        let v = std::mem::replace(&mut c[e], T::zero());
        if v.is_zero() {
            continue;
        }
        let j = e - 2 * k as usize;
        c[j] -= &v;
        c[j] -= &v;
        c[j - 1] -= &v;
    }
}

/// The coordinates of `A²` in the power basis.
pub fn square_in_order(a: &OrderElement) -> OrderElement {
    let n = a.coords.len();
    let mut c = vec![Integer::zero(); 2 * n - 1];
    for (i, x) in a.coords.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in a.coords.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    reduce_powers(&mut c, a.k);
    c.truncate(n);
    OrderElement { k: a.k, coords: c }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceReport {
    pub k: u32,
    pub modulus: u32,
    pub vectors_checked: u64,
    /// Vectors whose square vanishes mod 4 beyond the linear term.
    pub candidates: u64,
    pub violations: Vec<Vec<u8>>,
}

impl CongruenceReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Squares a residue vector mod 4.
fn square_mod4(a: &[u8], k: u32) -> Vec<u8> {
    let n = a.len();
    let mut c = vec![0u8; 2 * n - 1];
    for i in 0..n {
        if a[i] == 0 {
            continue;
        }
        for j in 0..n {
            c[i + j] = (c[i + j] + a[i] * a[j]) & 3;
        }
    }
    let k2 = 2 * k as usize;
    for e in (n..c.len()).rev() {
        let v = c[e];
        if v == 0 {
            continue;
        }
        c[e] = 0;
        let j = e - k2;
        c[j] = (c[j] + 8 - 2 * v) & 3;
        c[j - 1] = (c[j - 1] + 4 - v) & 3;
    }
    c.truncate(n);
    c
}

fn digits(mut idx: u64, n: usize) -> Vec<u8> {
    (0..n)
        .map(|_| {
            let d = (idx & 3) as u8;
            idx >>= 2;
            d
        })
        .collect()
}

/// Enumerates primitive coordinate vectors mod 4. Whenever the square is
/// `≡ Mθ + N (mod 4)`, the linear coefficient must be even and the constant
/// odd, which together with `M | N` rules out any primitive solution.
pub fn congruence_verify(k: u32) -> Result<CongruenceReport> {
    congruence_verify_with(k, None)
}

pub fn congruence_verify_with(k: u32, jobs: Option<usize>) -> Result<CongruenceReport> {
    if !(2..=5).contains(&k) {
        return Err(Error::InvalidArgument(format!("congruence check supports 2 ≤ k ≤ 5, got {k}")));
    }
    let n = 2 * k as usize + 1;
    let total = 1u64 << (2 * n);
    let chunk = 1u64 << 12;
    let work = || {
        (0..total.div_ceil(chunk))
            .into_par_iter()
            .map(|c| {
                let mut checked = 0u64;
                let mut candidates = 0u64;
                let mut bad = Vec::new();
                for idx in c * chunk..((c + 1) * chunk).min(total) {
                    let a = digits(idx, n);
                    if a.iter().all(|d| d % 2 == 0) {
                        continue;
                    }
                    checked += 1;
                    let s = square_mod4(&a, k);
                    if s[2..].iter().any(|&d| d != 0) {
                        continue;
                    }
                    candidates += 1;
                    if !s[1].is_multiple_of(2) || s[0] % 2 != 1 {
                        bad.push(a);
                    }
                }
                (checked, candidates, bad)
            })
            .collect::<Vec<_>>()
    };
    let parts = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(work),
        None => work(),
    };
    let mut report = CongruenceReport { k, modulus: 4, vectors_checked: 0, candidates: 0, violations: Vec::new() };
    for (checked, candidates, bad) in parts {
        report.vectors_checked += checked;
        report.candidates += candidates;
        report.violations.extend(bad);
    }
    report.violations.sort();
    Ok(report)
}

/// A substitution `a·x^j + b` making `f_k` reducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakCounterexample {
    pub j: u32,
    #[serde(with = "as_string")]
    pub a: Integer,
    #[serde(with = "as_string")]
    pub b: Integer,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakReport {
    pub k: u32,
    pub bound: u64,
    pub quadratic_checked: u64,
    pub linear_checked: u64,
    pub counterexamples: Vec<WeakCounterexample>,
}

impl WeakReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks `f_k(a·x^j + b)` for `j ∈ {1, 2}`, `0 < |a| ≤ bound`, `|b| ≤ bound`.
pub fn weak_check(k: u32, bound: u64) -> Result<WeakReport> {
    let f = trinomial(k)?;
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be positive".into()));
    }
    let b = bound as i64;
    let a_values: Vec<i64> = (-b..=b).filter(|&a| a != 0).collect();
    let per_a: Vec<(u64, u64, Vec<WeakCounterexample>)> = a_values
        .par_iter()
        .map(|&a| {
            let mut bad = Vec::new();
            let (mut quad, mut lin) = (0, 0);
            for c in -b..=b {
                for j in [1u32, 2] {
                    let g = IntPoly::monomial(Integer::from(a), j as usize) + IntPoly::constant(Integer::from(c));
                    let composed = f.compose(&g).primitive_part();
                    if j == 1 {
                        lin += 1;
                    } else {
                        quad += 1;
                    }
                    if !is_irreducible_primitive(&composed) {
                        bad.push(WeakCounterexample { j, a: a.into(), b: c.into() });
                    }
                }
            }
            (quad, lin, bad)
        })
        .collect();
    let mut report = WeakReport { k, bound, quadratic_checked: 0, linear_checked: 0, counterexamples: Vec::new() };
    for (q, l, bad) in per_a {
        report.quadratic_checked += q;
        report.linear_checked += l;
        report.counterexamples.extend(bad);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    #[test]
    fn family_members() {
        assert_eq!(trinomial(2).unwrap(), IntPoly::from_i64s(&[1, 2, 0, 0, 0, 1]));
        assert_eq!(trinomial(3).unwrap().deg(), 7);
        assert!(trinomial(1).is_err());
    }

    #[test]
    fn discriminants() {
        assert_eq!(trinomial_disc(2).unwrap(), int(11317));
        for k in 2..=6 {
            trinomial_disc(k).unwrap();
        }
    }

    #[test]
    fn squares() {
        let one = OrderElement::from_i64s(2, &[1, 0, 0, 0, 0]).unwrap();
        assert_eq!(square_in_order(&one), one);
        let t3 = OrderElement::from_i64s(2, &[0, 0, 0, 1, 0]).unwrap();
        assert_eq!(square_in_order(&t3).coords, vec![int(0), int(-1), int(-2), int(0), int(0)]);
        let t4 = OrderElement::from_i64s(2, &[0, 0, 0, 0, 1]).unwrap();
        assert_eq!(square_in_order(&t4).coords, vec![int(0), int(0), int(0), int(-1), int(-2)]);
        assert_eq!(OrderElement::theta_power(2, 8).unwrap(), square_in_order(&t4));
        assert!(OrderElement::from_i64s(2, &[1, 0]).is_err());
    }

    #[test]
    fn mod4_squaring_agrees() {
        let a = OrderElement::from_i64s(3, &[3, 1, 0, 2, 1, 3, 1]).unwrap();
        let exact = square_in_order(&a);
        let fast = square_mod4(&[3, 1, 0, 2, 1, 3, 1], 3);
        let reduced: Vec<u8> = exact
            .coords
            .iter()
            .map(|c| u8::try_from(num_integer::Integer::mod_floor(c, &int(4))).unwrap())
            .collect();
        assert_eq!(reduced, fast);
    }

    #[test]
    fn congruence_k2() {
        let r = congruence_verify(2).unwrap();
        assert_eq!(r.vectors_checked, 992);
        assert!(r.passed(), "{:?}", r.violations);
        assert!(congruence_verify(1).is_err());
    }

    #[test]
    fn weak_small() {
        let r = weak_check(2, 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.quadratic_checked, 6 * 7);
        let f = trinomial(2).unwrap();
        let g = IntPoly::from_i64s(&[0, 0, 1]);
        assert!(is_irreducible_primitive(&f.compose(&g)));
    }
}
