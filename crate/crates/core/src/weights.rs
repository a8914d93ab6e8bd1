//! Diagonal one-parameter subgroups: α-degrees, leading forms and the
//! singularity profile `s(F)`, `v_s(F)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::{HomogPolynomial, Monomial};

/// Integer weights `α_0 <= ... <= α_N`, not all zero, summing to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    /// Validates without modifying.
    pub fn new(alphas: Vec<i64>) -> Result<Self> {
        if alphas.is_empty() {
            return Err(Error::InvalidWeight("empty weight vector".into()));
        }
        if let Some(i) = alphas.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::InvalidWeight(format!(
                "not nondecreasing: α_{i} = {} > α_{} = {}",
                alphas[i],
                i + 1,
                alphas[i + 1]
            )));
        }
        if alphas.iter().all(|&a| a == 0) {
            return Err(Error::InvalidWeight("all weights are zero".into()));
        }
        let sum: i64 = alphas.iter().sum();
        if sum != 0 {
            return Err(Error::InvalidWeight(format!("weights sum to {sum}, not 0")));
        }
        Ok(WeightVector(alphas))
    }

    /// Sorts and shifts an arbitrary tuple to sum zero. Tuples whose sum is
    /// not divisible by the length are rejected.
    pub fn normalize(mut raw: Vec<i64>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::InvalidWeight("empty weight vector".into()));
        }
        raw.sort_unstable();
        let n = raw.len() as i64;
        let sum: i64 = raw.iter().sum();
        if sum % n != 0 {
            return Err(Error::InvalidWeight(format!(
                "sum {sum} is not divisible by {n}; scale the weights by {n} first"
            )));
        }
        let shift = sum / n;
        WeightVector::new(raw.into_iter().map(|a| a - shift).collect())
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// `N + 1`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    /// `max |α_i|`.
    pub fn height(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).max().unwrap_or(0)
    }

    /// Coordinatewise multiple by a positive integer.
    pub fn scaled(&self, m: i64) -> Result<Self> {
        if m <= 0 {
            return Err(Error::InvalidWeight("scale factor must be positive".into()));
        }
        Ok(WeightVector(self.0.iter().map(|a| a * m).collect()))
    }

    /// All weight vectors of the given length with `|α_i| <= height`, in
    /// lexicographic order.
    pub fn enumerate(len: usize, height: i64) -> Vec<WeightVector> {
        let mut out = Vec::new();
        if len == 0 || height <= 0 {
            return out;
        }
        let mut cur = Vec::with_capacity(len);
        enumerate_sorted(len, height, -height, 0, &mut cur, &mut out);
        out
    }
}

fn enumerate_sorted(len: usize, h: i64, lo: i64, sum: i64, cur: &mut Vec<i64>, out: &mut Vec<WeightVector>) {
    let left = (len - cur.len()) as i64;
    if left == 0 {
        if sum == 0 && cur.iter().any(|&a| a != 0) {
            out.push(WeightVector(cur.clone()));
        }
        return;
    }
    for a in lo..=h {
        // remaining entries are all >= a and <= h
        if sum + a * left > 0 {
            break;
        }
        if sum + a + h * (left - 1) < 0 {
            continue;
        }
        cur.push(a);
        enumerate_sorted(len, h, a, sum + a, cur, out);
        cur.pop();
    }
}

/// All integer vectors (any order) with `|w_i| <= height`, sum zero and not
/// all zero: the sorted weight vectors composed with every coordinate
/// permutation.
pub fn all_weightings(len: usize, height: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if len == 0 || height <= 0 {
        return out;
    }
    let mut cur = Vec::with_capacity(len);
    fn rec(len: usize, h: i64, sum: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let left = (len - cur.len()) as i64;
        if left == 0 {
            if sum == 0 && cur.iter().any(|&a| a != 0) {
                out.push(cur.clone());
            }
            return;
        }
        for a in -h..=h {
            let s = sum + a;
            if s.abs() > h * (left - 1) {
                continue;
            }
            cur.push(a);
            rec(len, h, s, cur, out);
            cur.pop();
        }
    }
    rec(len, height, 0, &mut cur, &mut out);
    out
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for WeightVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let alphas = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidWeight(format!("`{}` is not an integer", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        WeightVector::new(alphas)
    }
}

/// An α-degree; `NegInfinity` is the degree of the zero form and compares
/// below every integer.
/// Bounds for sweeps over weight vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchParams {
    /// Largest `|α_i|` tried.
    pub height: i64,
    /// Stop after this many candidates.
    pub max_evaluations: Option<u64>,
}

impl SearchParams {
    pub fn new(height: i64) -> Self {
        SearchParams { height, max_evaluations: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlphaDegree {
    NegInfinity,
    Finite(i64),
}

impl AlphaDegree {
    pub fn finite(self) -> Option<i64> {
        match self {
            AlphaDegree::Finite(v) => Some(v),
            AlphaDegree::NegInfinity => None,
        }
    }
}

impl fmt::Display for AlphaDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaDegree::NegInfinity => write!(f, "-inf"),
            AlphaDegree::Finite(v) => write!(f, "{v}"),
        }
    }
}

fn check_len(alpha: &WeightVector, f: &HomogPolynomial) -> Result<()> {
    if alpha.len() != f.nvars() {
        return Err(Error::DimensionMismatch { expected: f.nvars(), found: alpha.len() });
    }
    Ok(())
}

/// Maximum of `Σ w_i λ_i` over the monomials of `f`, for arbitrary weights.
pub fn weighted_degree(weights: &[i64], f: &HomogPolynomial) -> AlphaDegree {
    f.terms()
        .map(|(m, _)| m.weighted_degree(weights))
        .max()
        .map_or(AlphaDegree::NegInfinity, AlphaDegree::Finite)
}

pub fn alpha_degree(alpha: &WeightVector, f: &HomogPolynomial) -> Result<AlphaDegree> {
    check_len(alpha, f)?;
    Ok(weighted_degree(alpha.as_slice(), f))
}

/// `F^α`: the terms of maximal α-degree.
pub fn leading_form(alpha: &WeightVector, f: &HomogPolynomial) -> Result<HomogPolynomial> {
    check_len(alpha, f)?;
    let Some(top) = alpha_degree(alpha, f)?.finite() else {
        return Err(Error::ZeroPolynomial);
    };
    let terms = f
        .terms()
        .filter(|(m, _)| m.weighted_degree(alpha.as_slice()) == top)
        .map(|(m, c)| (m.clone(), c.clone()));
    HomogPolynomial::from_terms(f.field(), f.nvars(), f.degree(), terms)
}

/// `s(F)` together with `v_0(F), ..., v_{s(F)}(F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityProfile {
    pub s: i64,
    pub v: Vec<usize>,
    /// `deg_α(F)` the profile was computed from.
    pub alpha_degree: i64,
    pub degree: u32,
}

impl SingularityProfile {
    /// `Σ_t α_{v_t}`.
    pub fn alpha_sum(&self, alpha: &WeightVector) -> i64 {
        self.v.iter().map(|&v| alpha.get(v)).sum()
    }
}

fn rhs(alpha: &[i64], d: u32, u: usize, v: usize) -> i64 {
    alpha[u] + (d as i64 - 1) * alpha[v]
}

pub fn singularity_profile(alpha: &WeightVector, f: &HomogPolynomial) -> Result<SingularityProfile> {
    check_len(alpha, f)?;
    let d = f.degree();
    if d < 2 {
        return Err(Error::InvalidInput(format!("singularity profile needs degree >= 2, got {d}")));
    }
    let deg = alpha_degree(alpha, f)?.finite().ok_or(Error::ZeroPolynomial)?;
    Ok(profile_from_degree(alpha, deg, d))
}

/// The profile as a function of `deg_α(F)` and `d` alone.
pub fn profile_from_degree(alpha: &WeightVector, deg: i64, d: u32) -> SingularityProfile {
    let a = alpha.as_slice();
    let n = a.len() as i64 - 1;
    let holds = |s: i64| -> bool {
        let total = n - s - 1;
        (0..=total).all(|u| rhs(a, d, u as usize, (total - u) as usize) <= deg)
    };
    let s = (-1..n).find(|&s| holds(s)).unwrap_or(n - 1);
    let mut v = Vec::new();
    for t in 0..=s {
        let t = t as usize;
        let n = n as usize;
        let best = (0..=n - t).rev().find(|&vv| deg < rhs(a, d, n - vv - t, vv));
        v.push(best.expect("v_s(F) exists for s <= s(F)"));
    }
    SingularityProfile { s, v, alpha_degree: deg, degree: d }
}

/// The hypothesis of the singular-dimension lemma: `deg_α(F) < α_u + (d-1)α_v`.
pub fn singdeg_predicate(alpha: &WeightVector, f: &HomogPolynomial, u: usize, v: usize, s: usize) -> Result<bool> {
    check_len(alpha, f)?;
    let n = alpha.len() - 1;
    if u + v + s != n {
        return Err(Error::InvalidInput(format!("need u + v + s = N = {n}, got {u} + {v} + {s}")));
    }
    match alpha_degree(alpha, f)? {
        AlphaDegree::NegInfinity => Err(Error::ZeroPolynomial),
        AlphaDegree::Finite(deg) => Ok(deg < rhs(alpha.as_slice(), f.degree(), u, v)),
    }
}

/// Outcome of the three lower bounds on `deg_α(F)` attached to a profile.
/// `None` marks a bound that does not apply to this profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaChain {
    /// `s(F) = -1` ⇒ `deg_α(F) >= 0`, strictly when `d >= 3`.
    pub smooth_bound: Option<bool>,
    /// `s(F) >= 0` ⇒ `deg_α(F)/d >= -(Σ_t α_{v_t})/(N - s(F))`.
    pub singular_bound: Option<bool>,
    /// `s(F) >= 0` ⇒ `α_{v_s(F)} + (Σ_t α_{v_t})/(N - s(F)) > 0`.
    pub positivity: Option<bool>,
}

impl LemmaChain {
    pub fn all_hold(&self) -> bool {
        [self.smooth_bound, self.singular_bound, self.positivity]
            .iter()
            .all(|x| x.unwrap_or(true))
    }
}

pub fn lemma_chain(alpha: &WeightVector, profile: &SingularityProfile) -> LemmaChain {
    let n = alpha.len() as i64 - 1;
    let deg = profile.alpha_degree;
    let d = profile.degree as i64;
    if profile.s < 0 {
        let ok = if d >= 3 { deg > 0 } else { deg >= 0 };
        return LemmaChain { smooth_bound: Some(ok), singular_bound: None, positivity: None };
    }
    let sum = profile.alpha_sum(alpha);
    let m = n - profile.s;
    let last = alpha.get(*profile.v.last().expect("nonempty"));
    LemmaChain {
        smooth_bound: None,
        singular_bound: Some(deg * m >= -d * sum),
        positivity: Some(last * m + sum > 0),
    }
}

/// Re-derives the profile by brute force and compares.
pub fn profile_is_consistent(alpha: &WeightVector, p: &SingularityProfile) -> bool {
    let a = alpha.as_slice();
    let n = a.len() as i64 - 1;
    let (deg, d) = (p.alpha_degree, p.degree);
    let cond = |s: i64| {
        let total = n - s - 1;
        let mut ok = true;
        for u in 0..=total {
            for v in 0..=total {
                if u + v == total && deg < rhs(a, d, u as usize, v as usize) {
                    ok = false;
                }
            }
        }
        ok
    };
    if !cond(p.s) || (p.s > -1 && cond(p.s - 1)) {
        return false;
    }
    if p.v.len() as i64 != p.s + 1 {
        return false;
    }
    for (t, &v) in p.v.iter().enumerate() {
        let n = n as usize;
        if v > n - t || deg >= rhs(a, d, n - v - t, v) {
            return false;
        }
        if (v + 1..=n - t).any(|w| deg < rhs(a, d, n - w - t, w)) {
            return false;
        }
        // v_t >= (N + s - 2t)/2 and strict decrease
        if (2 * v as i64) < n as i64 + p.s - 2 * t as i64 {
            return false;
        }
        if t > 0 && p.v[t - 1] < v + 1 {
            return false;
        }
    }
    true
}

/// `deg_α` of a single monomial.
pub fn monomial_degree(alpha: &WeightVector, m: &Monomial) -> i64 {
    m.weighted_degree(alpha.as_slice())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn w(v: &[i64]) -> WeightVector {
        WeightVector::new(v.to_vec()).unwrap()
    }

    fn poly(t: &str, n: usize) -> HomogPolynomial {
        HomogPolynomial::parse(t, n, &Field::rationals()).unwrap()
    }

    #[test]
    fn validation_names_the_invariant() {
        assert!(matches!(WeightVector::new(vec![1, -1]), Err(Error::InvalidWeight(m)) if m.contains("nondecreasing")));
        assert!(matches!(WeightVector::new(vec![0, 0]), Err(Error::InvalidWeight(m)) if m.contains("zero")));
        assert!(matches!(WeightVector::new(vec![-1, 2]), Err(Error::InvalidWeight(m)) if m.contains("sum")));
        assert_eq!(WeightVector::normalize(vec![3, 1, 2]).unwrap(), w(&[-1, 0, 1]));
        assert!(WeightVector::normalize(vec![0, 0, 1]).is_err());
        assert_eq!("-1,0,0,1".parse::<WeightVector>().unwrap(), w(&[-1, 0, 0, 1]));
    }

    #[test]
    fn alpha_degree_examples() {
        let a = w(&[-1, 0, 0, 1]);
        let f = poly("x0*x1*x3 + x0^3", 4);
        assert_eq!(alpha_degree(&a, &f).unwrap(), AlphaDegree::Finite(0));
        assert_eq!(leading_form(&a, &f).unwrap().to_string(), "x0*x1*x3");
        let z = HomogPolynomial::zero(&Field::rationals(), 4, 3);
        assert_eq!(alpha_degree(&a, &z).unwrap(), AlphaDegree::NegInfinity);
        assert!(leading_form(&a, &z).is_err());
        let b = w(&[-1, 0, 1]);
        assert_eq!(alpha_degree(&b, &poly("x1^4", 3)).unwrap(), AlphaDegree::Finite(0));
        let q = poly("x0*x2 + x1^2", 3);
        assert_eq!(leading_form(&b, &q).unwrap(), q);
        assert!(AlphaDegree::NegInfinity < AlphaDegree::Finite(i64::MIN));
    }

    #[test]
    fn profile_examples() {
        let a = w(&[-2, 1, 1]);
        let p = singularity_profile(&a, &poly("x0^2", 3)).unwrap();
        assert_eq!((p.s, p.v.clone()), (1, vec![2, 1]));
        assert!(profile_is_consistent(&a, &p));
        let b = w(&[-1, 0, 1]);
        let p = singularity_profile(&b, &poly("x0*x2 + x1^2", 3)).unwrap();
        assert_eq!((p.s, p.v.clone()), (-1, vec![]));
        assert!(singularity_profile(&b, &poly("x0", 3)).is_err());
    }

    #[test]
    fn singdeg_examples() {
        let a = w(&[-2, 1, 1]);
        assert!(singdeg_predicate(&a, &poly("x0^2", 3), 0, 1, 1).unwrap());
        let b = w(&[-1, 0, 1]);
        assert!(!singdeg_predicate(&b, &poly("x0*x2 + x1^2", 3), 0, 2, 0).unwrap());
        assert!(singdeg_predicate(&b, &poly("x0*x2 + x1^2", 3), 1, 1, 1).is_err());
    }

    #[test]
    fn enumeration_is_canonical() {
        let all = WeightVector::enumerate(3, 1);
        let text: Vec<String> = all.iter().map(|a| a.to_string()).collect();
        assert_eq!(text, ["-1,0,1"]);
        let all = WeightVector::enumerate(4, 2);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
        assert!(all.iter().all(|a| WeightVector::new(a.as_slice().to_vec()).is_ok()));
        assert!(WeightVector::enumerate(4, 0).is_empty());
        // brute-force count
        let mut count = 0;
        for a in -2..=2i64 {
            for b in a..=2 {
                for c in b..=2 {
                    for d in c..=2 {
                        if a + b + c + d == 0 && (a, b, c, d) != (0, 0, 0, 0) {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(all.len(), count);
        assert_eq!(all_weightings(3, 1).len(), 6);
    }
}
