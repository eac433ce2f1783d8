//! Superirreducibility certificates for binomials `a·x^{4k} + b`.
//!
//! The pipeline reduces to the monic-equivalent constant
//! `D = a^{4k-1}·b` modulo fourth powers (the scale transform
//! `x → x/a` preserves degree-2 superirreducibility over ℚ), then tries, in
//! order: residue-class rules for `X⁴ + D·Y⁴ = Z²`, Legendre's condition,
//! a small Diophantine search, and a bounded substitution search.

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::constructions::SubstitutionWitness;
use crate::error::{Error, Result};
use crate::factor::{factor_over_integers, is_prime_u64};
use crate::poly::{as_string, Integer, IntPoly, RatPoly, Rational};
use crate::search::{search_rational_witness, SearchOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Certified,
    Refuted,
    MethodInapplicable,
    Unknown,
}

/// Rules named after the fact they rest on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// `X⁴ + Y⁴ = Z²` has only trivial solutions.
    #[serde(rename = "X4_PLUS_Y4")]
    X4PlusY4,
    /// `X⁴ + 2Y⁴ = Z²` has only trivial solutions.
    #[serde(rename = "X4_PLUS_2Y4")]
    X4Plus2Y4,
    /// `D = p`, `p ≡ 7, 11 (mod 16)`.
    #[serde(rename = "PRIME_7_11_MOD16")]
    Prime7_11Mod16,
    /// `D = 2p`, `p ≡ ±3 (mod 8)`.
    #[serde(rename = "TWICE_PRIME_3_5_MOD8")]
    TwicePrime3_5Mod8,
    /// `D = 4p` or `D = -p`, `p ≡ ±3, -5 (mod 16)`.
    #[serde(rename = "FOUR_PRIME_OR_NEG_PRIME_MOD16")]
    FourPrimeOrNegPrimeMod16,
    /// Legendre's necessary condition for `a·x² + b·y² = z²` fails.
    #[serde(rename = "LEGENDRE")]
    Legendre,
    /// The binomial criterion for `x^n - c` decides reducibility.
    #[serde(rename = "BINOMIAL_CRITERION")]
    BinomialCriterion,
}

impl Rule {
    pub fn describe(self) -> &'static str {
        match self {
            Rule::X4PlusY4 => "X^4 + Y^4 = Z^2 has no nontrivial rational solutions",
            Rule::X4Plus2Y4 => "X^4 + 2Y^4 = Z^2 has no nontrivial rational solutions",
            Rule::Prime7_11Mod16 => "X^4 + pY^4 = Z^2 is trivial for primes p = 7, 11 mod 16",
            Rule::TwicePrime3_5Mod8 => "X^4 + 2pY^4 = Z^2 is trivial for primes p = 3, 5 mod 8",
            Rule::FourPrimeOrNegPrimeMod16 => {
                "X^4 + 4pY^4 = Z^2 and X^4 - pY^4 = Z^2 are trivial for primes p = 3, 11, 13 mod 16"
            }
            Rule::Legendre => "a x^2 + b y^2 = z^2 needs a square mod b and b square mod a",
            Rule::BinomialCriterion => {
                "x^n - c is reducible iff -4c is a fourth power or c is a p-th power, p | n"
            }
        }
    }
}

/// Which ring the certified statement is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scope {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Z")]
    Integers,
}

/// A nontrivial solution of `x⁴ + d·y⁴ = z²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiophantineTriple {
    #[serde(with = "as_string")]
    pub d: Integer,
    pub x: u64,
    pub y: u64,
    #[serde(with = "as_string")]
    pub z: Integer,
}

impl DiophantineTriple {
    pub fn verify(&self) -> bool {
        let x = Integer::from(self.x);
        let y = Integer::from(self.y);
        self.x != 0
            && self.y != 0
            && !self.z.is_zero()
            && x.pow(4) + &self.d * y.pow(4) == &self.z * &self.z
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diophantine: Option<DiophantineTriple>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub substitution: Option<SubstitutionWitness>,
}

/// Every bound a certificate run consulted; `None` when that stage did not run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub requested: u64,
    pub diophantine: Option<u64>,
    pub substitution_coeff: Option<u64>,
    pub substitution_denom: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub input: IntPoly,
    pub status: Status,
    pub rule: Option<Rule>,
    pub scope: Option<Scope>,
    /// Monic-equivalent constant `D`, fourth-power free.
    #[serde(with = "opt_string")]
    pub equivalent_d: Option<Integer>,
    pub witnesses: Witnesses,
    pub search_bounds: SearchBounds,
    pub references: Vec<String>,
}

mod opt_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::poly::Integer;

    pub fn serialize<S: Serializer>(v: &Option<Integer>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(n) => s.serialize_some(&n.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Integer>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| t.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}

impl Certificate {
    /// Checks the invariants tying status to evidence.
    pub fn verify(&self) -> Result<()> {
        let ok = match self.status {
            Status::Certified => self.rule.is_some(),
            Status::Refuted => match &self.witnesses.substitution {
                Some(w) => w.verify().is_ok() && w.is_proper() && w.target == self.input.to_rat(),
                None => false,
            },
            Status::MethodInapplicable => {
                self.witnesses.diophantine.as_ref().is_some_and(DiophantineTriple::verify)
            }
            Status::Unknown => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Postcondition(format!("{:?} certificate lacks its evidence", self.status)))
        }
    }
}

fn is_perfect_power(n: &Integer, e: u32) -> bool {
    if n.is_negative() {
        return e % 2 == 1 && is_perfect_power(&-n, e);
    }
    let r = n.nth_root(e);
    r.pow(e) == *n
}

fn is_rational_power(c: &Rational, e: u32) -> bool {
    is_perfect_power(c.numer(), e) && is_perfect_power(c.denom(), e)
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Irreducibility of `x^{4k} - c` over ℚ by the binomial criterion.
pub fn karpilovsky_irreducible(c: &Rational, k: u32) -> Result<bool> {
    if c.is_zero() {
        return Err(Error::InvalidArgument("c must be nonzero".into()));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let minus_4c = -Rational::from_integer(4.into()) * c;
    if !minus_4c.is_negative() && is_rational_power(&minus_4c, 4) {
        return Ok(false);
    }
    let powered = prime_divisors(4 * u64::from(k))
        .into_iter()
        .any(|p| is_rational_power(c, p as u32));
    Ok(!powered)
}

/// The residue-class rule matching `D`, if any; classes tried in order.
pub fn residue_rule(d: &Integer) -> Result<Option<Rule>> {
    if d.is_zero() {
        return Err(Error::InvalidArgument("D must be nonzero".into()));
    }
    let Some(v) = d.to_i64() else { return Ok(None) };
    let prime = |n: i64| n > 1 && is_prime_u64(n as u64);
    let m16 = |n: i64| n.rem_euclid(16);
    if v == 1 {
        return Ok(Some(Rule::X4PlusY4));
    }
    if v == 2 {
        return Ok(Some(Rule::X4Plus2Y4));
    }
    if prime(v) && matches!(m16(v), 7 | 11) {
        return Ok(Some(Rule::Prime7_11Mod16));
    }
    if v % 2 == 0 && prime(v / 2) && matches!((v / 2).rem_euclid(8), 3 | 5) {
        return Ok(Some(Rule::TwicePrime3_5Mod8));
    }
    let class = |p: i64| prime(p) && matches!(m16(p), 3 | 13 | 11);
    if (v % 4 == 0 && class(v / 4)) || (v < 0 && class(-v)) {
        return Ok(Some(Rule::FourPrimeOrNegPrimeMod16));
    }
    Ok(None)
}

fn exact_sqrt(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Smallest coprime `1 ≤ x, y ≤ bound` with `x⁴ + d·y⁴` a nonzero square,
/// ordered by `(max(x, y), x, y)`.
pub fn diophantine_search(d: &Integer, bound: u64) -> Result<Option<DiophantineTriple>> {
    if d.is_zero() {
        return Err(Error::InvalidArgument("D must be nonzero".into()));
    }
    for m in 1..=bound {
        let mut pairs: Vec<(u64, u64)> = (1..=m).map(|y| (m, y)).collect();
        pairs.extend((1..m).map(|x| (x, m)));
        pairs.sort_unstable();
        for (x, y) in pairs {
            if x.gcd(&y) != 1 {
                continue;
            }
            let v = Integer::from(x).pow(4) + d * Integer::from(y).pow(4);
            if v.is_zero() {
                continue;
            }
            if let Some(z) = exact_sqrt(&v) {
                return Ok(Some(DiophantineTriple { d: d.clone(), x, y, z }));
            }
        }
    }
    Ok(None)
}

/// Sign times the product of primes dividing `n` to an odd power.
fn squarefree_part(n: &Integer) -> Result<Integer> {
    let mut m = n
        .abs()
        .to_u64()
        .ok_or_else(|| Error::InvalidArgument(format!("{n} is too large to factor")))?;
    let mut out = 1u64;
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= p;
        }
        p += 1;
    }
    out *= m;
    let out = Integer::from(out);
    Ok(if n.is_negative() { -out } else { out })
}

/// Whether `a` is a square modulo `n > 0`, with `gcd(a, n) = 1`.
fn is_square_mod(a: &Integer, n: u64) -> bool {
    if n == 1 {
        return true;
    }
    let mut m = n;
    let mut twos = 0;
    while m.is_multiple_of(2) {
        m /= 2;
        twos += 1;
    }
    let a8 = a.mod_floor(&Integer::from(8)).to_u64().unwrap();
    let two_ok = match twos {
        0 | 1 => true,
        2 => a8 % 4 == 1,
        _ => a8 == 1,
    };
    two_ok
        && prime_divisors(m).into_iter().all(|p| {
            let r = a.mod_floor(&Integer::from(p));
            r.modpow(&Integer::from((p - 1) / 2), &Integer::from(p)).is_one()
        })
}

/// Legendre's necessary condition for nontrivial solutions of
/// `a·x² + b·y² = z²`, after reducing `a` and `b` to squarefree parts.
/// `false` means the equation has only the trivial solution.
pub fn legendre_necessary(a: &Integer, b: &Integer) -> Result<bool> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::InvalidArgument("coefficients must be nonzero".into()));
    }
    if !a.gcd(b).is_one() {
        return Err(Error::InvalidArgument(format!("gcd({a}, {b}) ≠ 1")));
    }
    let a = squarefree_part(a)?;
    let b = squarefree_part(b)?;
    let bn = b.abs().to_u64().expect("factored above");
    let an = a.abs().to_u64().expect("factored above");
    Ok(is_square_mod(&a, bn) && is_square_mod(&b, an))
}

/// `(a, b, k)` when `f = a·x^{4k} + b` with `a, b ≠ 0`.
pub fn binomial_shape(f: &IntPoly) -> Result<(Integer, Integer, u32)> {
    let n = f.deg();
    let inner_zero = (1..n).all(|i| f.coeff(i).is_zero());
    if n == 0 || !n.is_multiple_of(4) || !inner_zero || f.coeff(0).is_zero() {
        return Err(Error::Shape(format!("{f} is not of the form a*x^(4k) + b")));
    }
    Ok((f.lc(), f.coeff(0), (n / 4) as u32))
}

/// Strips fourth powers from `n`.
fn fourth_power_free(n: &Integer) -> Result<Integer> {
    let mut m = n
        .abs()
        .to_u64()
        .ok_or_else(|| Error::InvalidArgument(format!("{n} is too large to factor")))?;
    let mut out = 1u64;
    for p in prime_divisors(m) {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        out *= p.pow(e % 4);
    }
    let out = Integer::from(out);
    Ok(if n.is_negative() { -out } else { out })
}

fn refuted(f: &IntPoly, mut cert: Certificate) -> Result<Certificate> {
    let fac = factor_over_integers(f)?;
    let divisor = &fac.factors[0].0;
    let w = SubstitutionWitness::from_divisor(&f.to_rat(), &RatPoly::x(), divisor)?;
    cert.status = Status::Refuted;
    cert.rule = Some(Rule::BinomialCriterion);
    cert.references.push(Rule::BinomialCriterion.describe().into());
    cert.witnesses.substitution = Some(w);
    Ok(cert)
}

fn certified(mut cert: Certificate, rule: Rule, scope: Scope) -> Certificate {
    cert.status = Status::Certified;
    cert.rule = Some(rule);
    cert.scope = Some(scope);
    cert.references.push(rule.describe().into());
    cert
}

/// Substitution-search box used by [`certify`].
const WITNESS_COEFF_CAP: u64 = 6;
const WITNESS_DENOM_CAP: u64 = 2;

/// Runs the certificate pipeline on `a·x^{4k} + b`.
pub fn certify(f: &IntPoly, search_bound: u64) -> Result<Certificate> {
    certify_with(f, search_bound, &SearchOptions::default())
}

pub fn certify_with(f: &IntPoly, search_bound: u64, opts: &SearchOptions) -> Result<Certificate> {
    if search_bound == 0 {
        return Err(Error::InvalidArgument("search bound must be positive".into()));
    }
    let (a, b, k) = binomial_shape(f)?;
    if !f.is_primitive() {
        return Err(Error::InvalidArgument(format!("{f} is not primitive")));
    }
    let mut cert = Certificate {
        input: f.clone(),
        status: Status::Unknown,
        rule: None,
        scope: None,
        equivalent_d: None,
        witnesses: Witnesses::default(),
        search_bounds: SearchBounds { requested: search_bound, ..Default::default() },
        references: Vec::new(),
    };

    let c = -Rational::new(b.clone(), a.clone());
    let criterion = karpilovsky_irreducible(&c, k)?;
    let oracle = factor_over_integers(f)?.is_irreducible();
    if criterion != oracle {
        return Err(Error::Postcondition(format!(
            "binomial criterion and factorizer disagree on {f}"
        )));
    }
    if !oracle {
        return refuted(f, cert);
    }

    // a^{4k-1} b ≡ a³ b modulo fourth powers
    let d = fourth_power_free(&(a.pow(3) * &b))?;
    cert.equivalent_d = Some(d.clone());

    if let Some(rule) = residue_rule(&d)? {
        // the repeated-root branch g = r(sx - t)² needs x^{8k} + D·R^{4k} irreducible
        if karpilovsky_irreducible(&Rational::from_integer(-d.clone()), 2 * k)? {
            return Ok(certified(cert, rule, Scope::Rationals));
        }
    }

    let (la, lb) = if a.is_negative() { (-a.clone(), -b.clone()) } else { (a.clone(), b.clone()) };
    if la.gcd(&lb).is_one() && !legendre_necessary(&la, &lb)? {
        return Ok(certified(cert, Rule::Legendre, Scope::Integers));
    }

    cert.search_bounds.diophantine = Some(search_bound);
    if let Some(t) = diophantine_search(&d, search_bound)? {
        cert.status = Status::MethodInapplicable;
        cert.references.push(format!("x^4 + ({d})y^4 = z^2 has a nontrivial solution"));
        cert.witnesses.diophantine = Some(t);
        return Ok(cert);
    }

    let coeff = search_bound.min(WITNESS_COEFF_CAP);
    let denom = search_bound.min(WITNESS_DENOM_CAP);
    cert.search_bounds.substitution_coeff = Some(coeff);
    cert.search_bounds.substitution_denom = Some(denom);
    let report = search_rational_witness(&f.to_rat(), coeff, denom, opts)?;
    if let Some(w) = report.witnesses.into_iter().next() {
        cert.status = Status::Refuted;
        cert.witnesses.substitution = Some(w);
    }
    Ok(cert)
}
