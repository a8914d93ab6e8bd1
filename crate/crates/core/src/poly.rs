//! Sparse homogeneous polynomials in `X_0..X_N`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use crate::error::{invalid, Error, Result};
use crate::field::{Field, Scalar};

/// Exponent vector `(λ_0, ..., λ_N)`.
///
/// The derived ordering is graded reverse lexicographic: higher total degree
/// first, then the monomial with the smaller exponent in the last differing
/// variable is the larger one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// `X_i^e`.
    pub fn power(nvars: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        Monomial(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    /// `Σ α_i λ_i`.
    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum()
    }

    /// Lexicographic comparison (`X_0 > X_1 > ...`), used as an alternative
    /// tiebreak.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials of degree `degree` in `nvars` variables, grevlex descending.
pub fn monomials(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fill(&mut cur, 0, degree, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn fill(cur: &mut Vec<u32>, i: usize, rest: u32, out: &mut Vec<Monomial>) {
    if cur.is_empty() {
        if rest == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    if i + 1 == cur.len() {
        cur[i] = rest;
        out.push(Monomial(cur.clone()));
        return;
    }
    for e in (0..=rest).rev() {
        cur[i] = e;
        fill(cur, i + 1, rest - e, out);
    }
    cur[i] = 0;
}

/// `binom(n + d - 1, d)`: the number of degree-`d` monomials in `n` variables.
pub fn count_monomials(nvars: usize, degree: u32) -> u64 {
    if nvars == 0 {
        return u64::from(degree == 0);
    }
    let k = (nvars - 1) as u64;
    let n = degree as u64 + k;
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// A homogeneous form with coefficients in a [`Field`].
///
/// Stored sparsely; every stored coefficient is nonzero. The zero form still
/// carries a degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogPolynomial {
    field: Field,
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, Scalar>,
}

impl HomogPolynomial {
    pub fn zero(field: &Field, nvars: usize, degree: u32) -> Self {
        HomogPolynomial { field: field.clone(), nvars, degree, terms: BTreeMap::new() }
    }

    /// `coef * X^exps`.
    pub fn monomial(field: &Field, m: Monomial, coef: Scalar) -> Self {
        let mut p = HomogPolynomial::zero(field, m.nvars(), m.degree());
        if !field.is_zero(&coef) {
            p.terms.insert(m, coef);
        }
        p
    }

    pub fn variable(field: &Field, nvars: usize, i: usize) -> Self {
        HomogPolynomial::monomial(field, Monomial::power(nvars, i, 1), field.one())
    }

    /// Builds a form from terms, summing repeated monomials.
    pub fn from_terms<I>(field: &Field, nvars: usize, degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut p = HomogPolynomial::zero(field, nvars, degree);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: m.nvars() });
            }
            if m.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: m.degree() });
            }
            if !field.contains(&c) {
                return Err(invalid(format!("coefficient is not an element of {field}")));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !self.field.is_zero(&c) {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = self.field.add(o.get(), &c);
                if self.field.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in grevlex-descending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Largest monomial in grevlex order.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    fn check_compatible(&self, other: &HomogPolynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &HomogPolynomial) -> Result<HomogPolynomial> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HomogPolynomial) -> Result<HomogPolynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HomogPolynomial {
        self.map_terms(|c| self.field.neg(c))
    }

    pub fn scale(&self, s: &Scalar) -> HomogPolynomial {
        if self.field.is_zero(s) {
            return HomogPolynomial::zero(&self.field, self.nvars, self.degree);
        }
        self.map_terms(|c| self.field.mul(c, s))
    }

    fn map_terms(&self, f: impl Fn(&Scalar) -> Scalar) -> HomogPolynomial {
        let mut out = HomogPolynomial::zero(&self.field, self.nvars, self.degree);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn mul(&self, other: &HomogPolynomial) -> Result<HomogPolynomial> {
        self.check_compatible(other)?;
        let mut out = HomogPolynomial::zero(&self.field, self.nvars, self.degree + other.degree);
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                out.add_term(m.mul(n), self.field.mul(a, b));
            }
        }
        Ok(out)
    }

    /// Product with a monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> HomogPolynomial {
        let mut out = HomogPolynomial::zero(&self.field, self.nvars, self.degree + m.degree());
        for (n, c) in &self.terms {
            out.terms.insert(n.mul(m), c.clone());
        }
        out
    }

    /// `M·self` for every monomial `M` of degree `degree - deg(self)`, in
    /// grevlex-descending order of `M`. Empty when `degree` is too small.
    pub fn multiples(&self, degree: u32) -> Vec<HomogPolynomial> {
        if degree < self.degree {
            return Vec::new();
        }
        monomials(self.nvars, degree - self.degree).iter().map(|m| self.mul_monomial(m)).collect()
    }

    pub fn pow(&self, e: u32) -> HomogPolynomial {
        let mut acc = HomogPolynomial::monomial(&self.field, Monomial::one(self.nvars), self.field.one());
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Formal partial derivative with respect to `X_j`.
    pub fn derivative(&self, j: usize) -> Result<HomogPolynomial> {
        if j >= self.nvars {
            return Err(invalid(format!("variable index {j} out of range for {} variables", self.nvars)));
        }
        let mut out = HomogPolynomial::zero(&self.field, self.nvars, self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.0[j];
            if e == 0 {
                continue;
            }
            let mut n = m.0.clone();
            n[j] -= 1;
            out.add_term(Monomial(n), self.field.mul(c, &self.field.from_i64(e as i64)));
        }
        Ok(out)
    }

    /// Value at a point of the field.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: point.len() });
        }
        let f = &self.field;
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = f.mul(&t, &f.pow(x, e as u64));
                }
            }
            acc = f.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Composes with linear forms: `X_i ↦ images[i]`. All images must share
    /// one ring and have degree 1.
    pub fn substitute(&self, images: &[HomogPolynomial]) -> Result<HomogPolynomial> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: images.len() });
        }
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let field = images.first().map(|p| p.field.clone()).unwrap_or_else(|| self.field.clone());
        for im in images {
            if im.degree != 1 || im.nvars != target || im.field != field {
                return Err(invalid("substitution images must be linear forms in one ring"));
            }
        }
        // powers[i][e] = images[i]^e
        let mut powers: Vec<Vec<HomogPolynomial>> = Vec::with_capacity(self.nvars);
        for (i, im) in images.iter().enumerate() {
            let maxe = self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0);
            let mut v = vec![HomogPolynomial::monomial(&field, Monomial::one(target), field.one())];
            for e in 1..=maxe as usize {
                let next = v[e - 1].mul(im)?;
                v.push(next);
            }
            powers.push(v);
        }
        let mut out = HomogPolynomial::zero(&field, target, self.degree);
        for (m, c) in &self.terms {
            let c = if field == self.field {
                c.clone()
            } else {
                return Err(Error::FieldMismatch {
                    left: self.field.to_string(),
                    right: field.to_string(),
                });
            };
            let mut t = HomogPolynomial::monomial(&field, Monomial::one(target), c);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[i][e as usize])?;
                }
            }
            for (n, s) in t.terms {
                out.add_term(n, s);
            }
        }
        Ok(out)
    }

    /// Sets the listed variables to zero (the number of variables is kept).
    pub fn restrict_zero(&self, vars: &[usize]) -> HomogPolynomial {
        let mut out = HomogPolynomial::zero(&self.field, self.nvars, self.degree);
        for (m, c) in &self.terms {
            if vars.iter().all(|&v| m.0[v] == 0) {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// The restriction to `{X_0 = ... = X_{v-1} = 0}`, written in the
    /// remaining variables `X_v, ..., X_N` (renumbered from 0).
    pub fn restrict_to_tail(&self, v: usize) -> HomogPolynomial {
        let mut out = HomogPolynomial::zero(&self.field, self.nvars - v, self.degree);
        for (m, c) in &self.terms {
            if m.0[..v].iter().all(|&e| e == 0) {
                out.terms.insert(Monomial(m.0[v..].to_vec()), c.clone());
            }
        }
        out
    }

    /// Renames variables: `X_i ↦ X_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> HomogPolynomial {
        let mut out = HomogPolynomial::zero(&self.field, self.nvars, self.degree);
        for (m, c) in &self.terms {
            let mut n = vec![0; self.nvars];
            for (i, &e) in m.0.iter().enumerate() {
                n[perm[i]] = e;
            }
            out.terms.insert(Monomial(n), c.clone());
        }
        out
    }

    /// Applies a coefficient map into another field.
    pub fn map_field(&self, target: &Field, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<HomogPolynomial> {
        let mut out = HomogPolynomial::zero(target, self.nvars, self.degree);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Reduces a rational form modulo the characteristic of `target`.
    pub fn reduce(&self, target: &Field) -> Result<HomogPolynomial> {
        if &self.field == target {
            return Ok(self.clone());
        }
        if !self.field.is_rational() {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: target.to_string(),
            });
        }
        self.map_field(target, |c| target.from_rational(c.as_rational().expect("rational")))
    }

    /// A form with every coefficient drawn uniformly (so some may vanish).
    pub fn random<R: Rng + ?Sized>(field: &Field, nvars: usize, degree: u32, rng: &mut R) -> Self {
        let mut p = HomogPolynomial::zero(field, nvars, degree);
        for m in monomials(nvars, degree) {
            p.add_term(m, field.random(rng));
        }
        p
    }

    /// A random form supported on the given monomials.
    pub fn random_supported<R: Rng + ?Sized>(
        field: &Field,
        nvars: usize,
        degree: u32,
        support: &[Monomial],
        rng: &mut R,
    ) -> Self {
        let mut p = HomogPolynomial::zero(field, nvars, degree);
        for m in support {
            p.add_term(m.clone(), field.random(rng));
        }
        p
    }

    /// Parses the text grammar, e.g. `3*x0^2*x1 - x2^3` or `1/2*x0 + (a+1)*x1`.
    pub fn parse(text: &str, nvars: usize, field: &Field) -> Result<Self> {
        Parser { src: text, pos: 0, nvars, field }.polynomial()
    }
}

impl fmt::Display for HomogPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let negative = c.is_negative_rational();
            let c = if negative { self.field.neg(c) } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let constant = m.degree() == 0;
            let text = self.field.format(&c);
            let text = if c.is_compound() { format!("({text})") } else { text };
            if constant {
                write!(f, "{text}")?;
            } else if self.field.is_one(&c) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{text}*{m}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    nvars: usize,
    field: &'a Field,
}

impl Parser<'_> {
    fn err(&self, at: usize, msg: impl Into<String>) -> Error {
        let column = self.src[..at.min(self.src.len())].chars().count() + 1;
        Error::Parse { column, message: msg.into() }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn polynomial(&mut self) -> Result<HomogPolynomial> {
        let mut degree: Option<(u32, usize)> = None;
        let mut terms: Vec<(Monomial, Scalar)> = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.err(0, "empty polynomial"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let Some(c) = self.peek() else { break };
            let mut negative = false;
            if c == '+' || c == '-' {
                negative = c == '-';
                self.pos += 1;
                self.skip_ws();
            } else if !first {
                return Err(self.err(self.pos, format!("expected `+` or `-`, found `{c}`")));
            }
            first = false;
            let start = self.pos;
            let (m, coef) = self.term()?;
            match degree {
                None => degree = Some((m.degree(), start)),
                Some((d, _)) if d != m.degree() => {
                    return Err(self.err(
                        start,
                        format!("term of degree {} in a polynomial of degree {d}", m.degree()),
                    ))
                }
                _ => {}
            }
            let coef = if negative { self.field.neg(&coef) } else { coef };
            terms.push((m, coef));
        }
        let d = degree.map(|(d, _)| d).unwrap_or(0);
        HomogPolynomial::from_terms(self.field, self.nvars, d, terms)
    }

    fn term(&mut self) -> Result<(Monomial, Scalar)> {
        let mut exps = vec![0u32; self.nvars];
        let mut coef = self.field.one();
        loop {
            self.skip_ws();
            let start = self.pos;
            match self.peek() {
                Some('x') | Some('X') => {
                    self.pos += 1;
                    let idx = self.digits();
                    if idx.is_empty() {
                        return Err(self.err(start, "expected a variable index after `x`"));
                    }
                    let i: usize = idx.parse().map_err(|_| self.err(start, "variable index too large"))?;
                    if i >= self.nvars {
                        return Err(self.err(
                            start,
                            format!("unknown variable x{i} (only x0..x{} exist)", self.nvars.saturating_sub(1)),
                        ));
                    }
                    self.skip_ws();
                    let mut e = 1u32;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        self.skip_ws();
                        let at = self.pos;
                        let ds = self.digits();
                        if ds.is_empty() {
                            return Err(self.err(at, "expected an exponent after `^`"));
                        }
                        e = ds.parse().map_err(|_| self.err(at, "exponent too large"))?;
                    }
                    exps[i] += e;
                }
                Some(c) if c.is_ascii_digit() => {
                    let num = self.digits().to_string();
                    let mut text = num;
                    self.skip_ws();
                    if self.peek() == Some('/') {
                        self.pos += 1;
                        self.skip_ws();
                        let at = self.pos;
                        let den = self.digits();
                        if den.is_empty() {
                            return Err(self.err(at, "expected a denominator after `/`"));
                        }
                        if den.parse::<BigInt>().map(|d| d.is_zero()).unwrap_or(true) {
                            return Err(self.err(at, "zero denominator"));
                        }
                        text = format!("{text}/{den}");
                    }
                    let s = self
                        .field
                        .parse_scalar(&text)
                        .map_err(|e| self.err(start, e.to_string()))?;
                    coef = self.field.mul(&coef, &s);
                }
                Some('(') => {
                    let close = self.src[self.pos..]
                        .find(')')
                        .ok_or_else(|| self.err(start, "unclosed `(`"))?;
                    let inner = &self.src[self.pos + 1..self.pos + close];
                    let s = self
                        .field
                        .parse_scalar(inner)
                        .map_err(|e| self.err(start, e.to_string()))?;
                    self.pos += close + 1;
                    coef = self.field.mul(&coef, &s);
                }
                Some(c) => return Err(self.err(start, format!("unexpected `{c}`"))),
                None => return Err(self.err(start, "unexpected end of input")),
            }
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                }
                Some(c) if c == 'x' || c == 'X' || c == '(' || c.is_ascii_digit() => {}
                _ => break,
            }
        }
        Ok((Monomial(exps), coef))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn parse_examples() {
        let p = HomogPolynomial::parse("x0^2 + 2*x1*x2", 3, &q()).unwrap();
        assert_eq!(p.degree(), 2);
        assert_eq!(p.len(), 2);
        let z = HomogPolynomial::parse("0", 4, &Field::prime(5).unwrap()).unwrap();
        assert!(z.is_zero());
        let c = HomogPolynomial::parse("x0*x1 - x1*x0", 2, &q()).unwrap();
        assert!(c.is_zero());
        assert_eq!(c.degree(), 2);
    }

    #[test]
    fn parse_errors_carry_columns() {
        let e = HomogPolynomial::parse("x0^2 + x1", 2, &q()).unwrap_err();
        assert_eq!(e, Error::Parse { column: 8, message: "term of degree 1 in a polynomial of degree 2".into() });
        let e = HomogPolynomial::parse("x0 + x3", 2, &q()).unwrap_err();
        assert!(matches!(e, Error::Parse { column: 6, .. }));
        let e = HomogPolynomial::parse("1/2*x0", 2, &Field::prime(5).unwrap()).unwrap_err();
        assert!(matches!(e, Error::Parse { column: 1, .. }));
    }

    #[test]
    fn print_round_trip() {
        for (text, field) in [
            ("3*x0^2*x1 - x2^3", q()),
            ("-1/2*x0 + x1", q()),
            ("4*x0*x1 + x1^2", Field::prime(5).unwrap()),
            ("(2*a+1)*x0^2 + 3*x1^2", Field::parse("F25:x^2+x+2").unwrap()),
        ] {
            let p = HomogPolynomial::parse(text, 3, &field).unwrap();
            assert_eq!(p.to_string(), text);
        }
    }

    #[test]
    fn arithmetic_examples() {
        let f = q();
        let a = HomogPolynomial::parse("x0 + x1", 2, &f).unwrap();
        let b = HomogPolynomial::parse("x0 - x1", 2, &f).unwrap();
        assert_eq!(a.mul(&b).unwrap().to_string(), "x0^2 - x1^2");
        assert!(a.add(&a.scale(&f.from_i64(-1))).unwrap().is_zero());
        let f2 = Field::prime(2).unwrap();
        let s = HomogPolynomial::parse("x0 + x1", 2, &f2).unwrap();
        assert_eq!(s.pow(2).to_string(), "x0^2 + x1^2");
        assert!(a.add(&a.mul(&a).unwrap()).is_err());
    }

    #[test]
    fn derivative_examples() {
        let p = HomogPolynomial::parse("x0^2*x1", 2, &q()).unwrap();
        assert_eq!(p.derivative(0).unwrap().to_string(), "2*x0*x1");
        let f5 = Field::prime(5).unwrap();
        let p = HomogPolynomial::parse("x0^5", 2, &f5).unwrap();
        assert!(p.derivative(0).unwrap().is_zero());
        let p = HomogPolynomial::parse("x0^3", 2, &q()).unwrap();
        assert!(p.derivative(1).unwrap().is_zero());
        assert!(p.derivative(2).is_err());
    }

    #[test]
    fn monomial_listing_is_grevlex_descending() {
        let ms = monomials(3, 2);
        assert_eq!(ms.len(), 6);
        let text: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        assert_eq!(text, ["x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x2^2"]);
        assert_eq!(count_monomials(4, 3), 20);
    }

    #[test]
    fn substitution_composes() {
        let f = q();
        let p = HomogPolynomial::parse("x0*x1", 2, &f).unwrap();
        let y0 = HomogPolynomial::parse("x0 + x1", 2, &f).unwrap();
        let y1 = HomogPolynomial::parse("x0 - x1", 2, &f).unwrap();
        assert_eq!(p.substitute(&[y0, y1]).unwrap().to_string(), "x0^2 - x1^2");
    }
}
