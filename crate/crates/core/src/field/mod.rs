//! Exact coefficient fields.
//!
//! A [`Field`] is a cheap, clonable descriptor for one of
//!
//! * the rationals `Q` (arbitrary precision),
//! * a prime field `F_p` with `p < 2^31`,
//! * an extension `F_{p^k}` presented as `F_p[a]/(m(a))` for a monic
//!   irreducible `m`.
//!
//! Elements are [`Scalar`] values. All arithmetic goes through the field so
//! that the characteristic is fixed per computation; feeding a scalar from a
//! different field is a logic error caught by [`Field::contains`].

pub(crate) mod table;
pub(crate) mod upoly;

pub use table::{Embedding, TableField};

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use upoly::{inv_mod, mulmod};

/// Largest supported characteristic (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Rational,
    Prime(u64),
    /// `modulus` is monic, low degree first, of length `k + 1`.
    Extension { p: u64, modulus: Vec<u64> },
}

/// A coefficient field descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Field(Arc<Kind>);

/// An exact field element. The variant always matches the owning field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(BigRational),
    Modular(u64),
    /// Coefficients of `c_0 + c_1 a + ... + c_{k-1} a^{k-1}`; always length `k`.
    Extension(Vec<u64>),
}

impl Field {
    pub fn rationals() -> Self {
        Field(Arc::new(Kind::Rational))
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_PRIME || !upoly::is_prime(p) {
            return Err(Error::FieldDescriptor(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field(Arc::new(Kind::Prime(p))))
    }

    /// `F_p[a]/(modulus)`; the modulus must be monic and irreducible.
    pub fn extension(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if p >= MAX_PRIME || !upoly::is_prime(p) {
            return Err(Error::FieldDescriptor(format!("{p} is not a prime below 2^31")));
        }
        let modulus: Vec<u64> = modulus.into_iter().map(|c| c % p).collect();
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::FieldDescriptor("modulus must be monic of degree >= 1".into()));
        }
        if modulus.len() == 2 {
            return Field::prime(p);
        }
        if !upoly::is_irreducible(&modulus, p) {
            return Err(Error::FieldDescriptor(format!(
                "modulus {} is reducible over F{p}",
                format_upoly(&modulus, 'x')
            )));
        }
        Ok(Field(Arc::new(Kind::Extension { p, modulus })))
    }

    /// `F_{p^k}` with the canonical table-derived modulus.
    pub fn galois(p: u64, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::FieldDescriptor("extension degree must be >= 1".into()));
        }
        if k == 1 {
            return Field::prime(p);
        }
        if p >= MAX_PRIME || !upoly::is_prime(p) {
            return Err(Error::FieldDescriptor(format!("{p} is not a prime below 2^31")));
        }
        if (p as f64).powi(k as i32) > 2f64.powi(62) {
            return Err(Error::FieldDescriptor(format!("F{p}^{k} is too large")));
        }
        Field::extension(p, upoly::default_modulus(p, k))
    }

    /// Parses `Q`, `F5`, `F25` or `F25:x^2+x+2`.
    pub fn parse(desc: &str) -> Result<Self> {
        let desc = desc.trim();
        if desc == "Q" {
            return Ok(Field::rationals());
        }
        let body = desc
            .strip_prefix('F')
            .ok_or_else(|| Error::FieldDescriptor(format!("`{desc}`: expected Q or F<q>")))?;
        let (order, modulus) = match body.split_once(':') {
            Some((o, m)) => (o, Some(m)),
            None => (body, None),
        };
        let q: u64 = order
            .trim()
            .parse()
            .map_err(|_| Error::FieldDescriptor(format!("`{desc}`: bad field order")))?;
        let (p, k) = prime_power(q)
            .ok_or_else(|| Error::FieldDescriptor(format!("{q} is not a prime power")))?;
        match modulus {
            None => Field::galois(p, k),
            Some(m) => {
                let coeffs = parse_upoly(m, p)?;
                if coeffs.len() != k + 1 {
                    return Err(Error::FieldDescriptor(format!(
                        "modulus degree {} does not match F{q} (expected {k})",
                        coeffs.len().saturating_sub(1)
                    )));
                }
                if k == 1 {
                    return Err(Error::FieldDescriptor("prime fields take no modulus".into()));
                }
                Field::extension(p, coeffs)
            }
        }
    }

    /// 0 for `Q`.
    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            Kind::Rational => 0,
            Kind::Prime(p) => *p,
            Kind::Extension { p, .. } => *p,
        }
    }

    /// Degree over the prime field (1 for `Q` and `F_p`).
    pub fn degree(&self) -> usize {
        match &*self.0 {
            Kind::Extension { modulus, .. } => modulus.len() - 1,
            _ => 1,
        }
    }

    /// Number of elements, `None` for `Q` or when it does not fit in a `u64`.
    pub fn order(&self) -> Option<u64> {
        match &*self.0 {
            Kind::Rational => None,
            Kind::Prime(p) => Some(*p),
            Kind::Extension { p, modulus } => p.checked_pow((modulus.len() - 1) as u32),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(&*self.0, Kind::Rational)
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(&*self.0, Kind::Prime(_))
    }

    /// The modulus of an extension field, low degree first.
    pub fn modulus(&self) -> Option<&[u64]> {
        match &*self.0 {
            Kind::Extension { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match &*self.0 {
            Kind::Rational => Scalar::Rational(BigRational::zero()),
            Kind::Prime(_) => Scalar::Modular(0),
            Kind::Extension { modulus, .. } => Scalar::Extension(vec![0; modulus.len() - 1]),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match &*self.0 {
            Kind::Rational => Scalar::Rational(BigRational::from_integer(n.into())),
            Kind::Prime(p) => Scalar::Modular(n.rem_euclid(*p as i64) as u64),
            Kind::Extension { p, modulus } => {
                let mut v = vec![0; modulus.len() - 1];
                v[0] = n.rem_euclid(*p as i64) as u64;
                Scalar::Extension(v)
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match &*self.0 {
            Kind::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Kind::Prime(p) | Kind::Extension { p, .. } => {
                let r = n.mod_floor(&BigInt::from(*p)).to_u64().unwrap();
                self.embed_prime(r)
            }
        }
    }

    /// Image of a rational number; fails when the denominator vanishes in
    /// the field.
    pub fn from_rational(&self, r: &BigRational) -> Result<Scalar> {
        if self.is_rational() {
            return Ok(Scalar::Rational(r.clone()));
        }
        let num = self.from_bigint(r.numer());
        let den = self.from_bigint(r.denom());
        self.inv(&den)
            .map(|d| self.mul(&num, &d))
            .ok_or_else(|| invalid_coefficient(&r.to_string(), self))
    }

    /// The image of an integer `0 <= c < p` of the prime subfield.
    pub fn embed_prime(&self, c: u64) -> Scalar {
        match &*self.0 {
            Kind::Rational => Scalar::Rational(BigRational::from_integer(c.into())),
            Kind::Prime(p) => Scalar::Modular(c % p),
            Kind::Extension { p, modulus } => {
                let mut v = vec![0; modulus.len() - 1];
                v[0] = c % p;
                Scalar::Extension(v)
            }
        }
    }

    /// The generator `a` of an extension field.
    pub fn generator(&self) -> Option<Scalar> {
        match &*self.0 {
            Kind::Extension { modulus, .. } => {
                let mut v = vec![0; modulus.len() - 1];
                v[1] = 1;
                Some(Scalar::Extension(v))
            }
            _ => None,
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (&*self.0, s) {
            (Kind::Rational, Scalar::Rational(_)) => true,
            (Kind::Prime(p), Scalar::Modular(v)) => v < p,
            (Kind::Extension { p, modulus }, Scalar::Extension(v)) => {
                v.len() == modulus.len() - 1 && v.iter().all(|c| c < p)
            }
            _ => false,
        }
    }

    pub fn is_zero(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular(v) => *v == 0,
            Scalar::Extension(v) => v.iter().all(|&c| c == 0),
        }
    }

    pub fn is_one(&self, s: &Scalar) -> bool {
        *s == self.one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&*self.0, a, b) {
            (Kind::Rational, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Kind::Prime(p), Scalar::Modular(x), Scalar::Modular(y)) => {
                Scalar::Modular((x + y) % p)
            }
            (Kind::Extension { p, .. }, Scalar::Extension(x), Scalar::Extension(y)) => {
                Scalar::Extension(x.iter().zip(y).map(|(u, v)| (u + v) % p).collect())
            }
            _ => panic!("scalar does not belong to field {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (&*self.0, a) {
            (Kind::Rational, Scalar::Rational(x)) => Scalar::Rational(-x),
            (Kind::Prime(p), Scalar::Modular(x)) => Scalar::Modular((p - x) % p),
            (Kind::Extension { p, .. }, Scalar::Extension(x)) => {
                Scalar::Extension(x.iter().map(|u| (p - u) % p).collect())
            }
            _ => panic!("scalar does not belong to field {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&*self.0, a, b) {
            (Kind::Rational, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Kind::Prime(p), Scalar::Modular(x), Scalar::Modular(y)) => {
                Scalar::Modular(mulmod(*x, *y, *p))
            }
            (Kind::Extension { p, modulus }, Scalar::Extension(x), Scalar::Extension(y)) => {
                Scalar::Extension(ext_mul(x, y, modulus, *p))
            }
            _ => panic!("scalar does not belong to field {self}"),
        }
    }

    pub fn pow(&self, a: &Scalar, mut exp: u64) -> Scalar {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        match (&*self.0, a) {
            (Kind::Rational, Scalar::Rational(x)) => Some(Scalar::Rational(x.recip())),
            (Kind::Prime(p), Scalar::Modular(x)) => inv_mod(*x, *p).map(Scalar::Modular),
            (Kind::Extension { p, modulus }, Scalar::Extension(x)) => {
                let k = (modulus.len() - 1) as u32;
                let q = (*p as u128).pow(k);
                // a^(q-2) by square-and-multiply on u128 exponents
                let mut acc = self.one();
                let mut base = Scalar::Extension(x.clone());
                let mut e = q - 2;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = self.mul(&acc, &base);
                    }
                    base = self.mul(&base, &base);
                    e >>= 1;
                }
                Some(acc)
            }
            _ => panic!("scalar does not belong to field {self}"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    /// Uniform element of a finite field; an integer in `[-8, 8]` over `Q`.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match &*self.0 {
            Kind::Rational => self.from_i64(rng.gen_range(-8..=8)),
            Kind::Prime(p) => Scalar::Modular(rng.gen_range(0..*p)),
            Kind::Extension { p, modulus } => {
                Scalar::Extension((0..modulus.len() - 1).map(|_| rng.gen_range(0..*p)).collect())
            }
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        loop {
            let s = self.random(rng);
            if !self.is_zero(&s) {
                return s;
            }
        }
    }

    /// All elements of a finite field in a fixed order (zero first).
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        let q = self.order()?;
        if q > 1 << 20 {
            return None;
        }
        Some((0..q).map(|code| self.decode(code)).collect())
    }

    /// Element with base-`p` digit expansion `code` (constant term least
    /// significant). Inverse of [`Field::encode`].
    pub fn decode(&self, mut code: u64) -> Scalar {
        match &*self.0 {
            Kind::Rational => self.from_i64(code as i64),
            Kind::Prime(p) => Scalar::Modular(code % p),
            Kind::Extension { p, modulus } => {
                let mut v = vec![0; modulus.len() - 1];
                for c in v.iter_mut() {
                    *c = code % p;
                    code /= p;
                }
                Scalar::Extension(v)
            }
        }
    }

    /// Base-`p` digit code of a finite-field element.
    pub fn encode(&self, s: &Scalar) -> Option<u64> {
        match (&*self.0, s) {
            (Kind::Prime(_), Scalar::Modular(v)) => Some(*v),
            (Kind::Extension { p, .. }, Scalar::Extension(v)) => {
                Some(v.iter().rev().fold(0u64, |acc, &c| acc * p + c))
            }
            _ => None,
        }
    }

    /// Renders a scalar: `3/2` over `Q`, `4` over `F5`, `2*a+1` in extensions.
    pub fn format(&self, s: &Scalar) -> String {
        match s {
            Scalar::Rational(r) => r.to_string(),
            Scalar::Modular(v) => v.to_string(),
            Scalar::Extension(v) => format_upoly(v, 'a'),
        }
    }

    /// Parses a standalone coefficient: an integer, `p/q`, or (in an
    /// extension) a polynomial in the generator `a`.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let t = text.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if let Some(Kind::Extension { p, modulus }) = Some(&*self.0) {
            if t.contains('a') {
                let coeffs = parse_upoly_var(t, *p, 'a')?;
                if coeffs.len() > modulus.len() - 1 {
                    return Err(invalid_coefficient(t, self));
                }
                let mut v = vec![0; modulus.len() - 1];
                v[..coeffs.len()].copy_from_slice(&coeffs);
                return Ok(Scalar::Extension(v));
            }
        }
        let r = parse_rational(t).ok_or_else(|| invalid_coefficient(t, self))?;
        if !self.is_rational() && !r.is_integer() {
            return Err(invalid_coefficient(t, self));
        }
        self.from_rational(&r)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Kind::Rational => write!(f, "Q"),
            Kind::Prime(p) => write!(f, "F{p}"),
            Kind::Extension { p, modulus } => {
                let q = (*p as u128).pow((modulus.len() - 1) as u32);
                write!(f, "F{q}:{}", format_upoly(modulus, 'x'))
            }
        }
    }
}

impl FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Field::parse(s)
    }
}

fn invalid_coefficient(t: &str, field: &Field) -> Error {
    Error::InvalidInput(format!("coefficient `{t}` is not an element of {field}"))
}

fn ext_mul(x: &[u64], y: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * k - 1];
    for (i, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in y.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mulmod(a, b, p)) % p;
        }
    }
    for i in (k..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for (j, &m) in modulus.iter().enumerate().take(k) {
            let t = mulmod(c, m, p);
            prod[i - k + j] = (prod[i - k + j] + p - t) % p;
        }
    }
    prod.truncate(k);
    prod
}

pub(crate) fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let p = upoly::prime_factors(q);
    if p.len() != 1 {
        return None;
    }
    let p = p[0];
    let mut k = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        k += 1;
    }
    Some((p, k))
}

fn parse_rational(t: &str) -> Option<BigRational> {
    let t = t.trim();
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(t.parse().ok()?)),
    }
}

fn parse_upoly(t: &str, p: u64) -> Result<Vec<u64>> {
    parse_upoly_var(t, p, 'x')
}

/// Parses `c_k*v^k + ... + c_0` with integer coefficients mod `p`.
fn parse_upoly_var(t: &str, p: u64, var: char) -> Result<Vec<u64>> {
    let err = |m: &str| Error::FieldDescriptor(format!("`{t}`: {m}"));
    let s: String = t.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err("empty polynomial"));
    }
    let mut coeffs: Vec<u64> = Vec::new();
    let mut rest = s.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            rest = r;
            sign = -1;
        } else if !first {
            return Err(err("expected + or -"));
        }
        first = false;
        let end = rest[1.min(rest.len())..]
            .find(['+', '-'])
            .map(|i| i + 1)
            .unwrap_or(rest.len());
        let term = &rest[..end];
        rest = &rest[end..];
        let (coef, power) = match term.find(var) {
            None => (term, 0usize),
            Some(i) => {
                let c = term[..i].trim_end_matches('*');
                let e = &term[i + 1..];
                let e = if e.is_empty() {
                    1
                } else {
                    e.strip_prefix('^')
                        .and_then(|x| x.parse().ok())
                        .ok_or_else(|| err("bad exponent"))?
                };
                (c, e)
            }
        };
        let c: i64 = if coef.is_empty() {
            1
        } else {
            coef.parse().map_err(|_| err("bad coefficient"))?
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        let v = (sign * c).rem_euclid(p as i64) as u64;
        coeffs[power] = (coeffs[power] + v) % p;
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    Ok(coeffs)
}

fn format_upoly(c: &[u64], var: char) -> String {
    let mut parts = Vec::new();
    for (i, &v) in c.iter().enumerate().rev() {
        if v == 0 {
            continue;
        }
        let s = match (i, v) {
            (0, v) => v.to_string(),
            (1, 1) => var.to_string(),
            (1, v) => format!("{v}*{var}"),
            (i, 1) => format!("{var}^{i}"),
            (i, v) => format!("{v}*{var}^{i}"),
        };
        parts.push(s);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

impl Scalar {
    /// The rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Whether the rendered form needs parentheses inside a product.
    pub(crate) fn is_compound(&self) -> bool {
        match self {
            Scalar::Extension(v) => v.iter().skip(1).any(|&c| c != 0),
            _ => false,
        }
    }

    pub(crate) fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }
}
