//! Hilbert–Mumford weights on the space of pairs (hypersurface of degree
//! `d1`, codimension `c - 1` system of degree-`d2` forms modulo it), its
//! ample cone, and the numerical conditions for stability of smooth
//! complete intersections.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{forms_rank, forms_relations};
use crate::poly::{monomials, HomogPolynomial};
use crate::weights::{alpha_degree, leading_form, SearchParams, WeightVector};

/// A point `[F_1, F_2, ..., F_c]`: the form `F_1` of degree `d1` and forms
/// `F_2..F_c` of degree `d2 > d1` whose classes modulo the multiples of
/// `F_1` are independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CIPoint {
    f1: HomogPolynomial,
    fs: Vec<HomogPolynomial>,
}

impl CIPoint {
    pub fn new(f1: HomogPolynomial, fs: Vec<HomogPolynomial>) -> Result<Self> {
        if f1.is_zero() {
            return Err(Error::InvalidInput("F1 must be nonzero".into()));
        }
        let Some(first) = fs.first() else {
            return Err(Error::InvalidInput("a point needs c >= 2 forms".into()));
        };
        let d2 = first.degree();
        if f1.degree() >= d2 {
            return Err(Error::InvalidInput(format!("need d1 < d2, got d1 = {}, d2 = {d2}", f1.degree())));
        }
        for g in &fs {
            if g.field() != f1.field() {
                return Err(Error::FieldMismatch { left: f1.field().to_string(), right: g.field().to_string() });
            }
            if g.nvars() != f1.nvars() {
                return Err(Error::DimensionMismatch { expected: f1.nvars(), found: g.nvars() });
            }
            if g.degree() != d2 {
                return Err(Error::DegreeMismatch { left: d2, right: g.degree() });
            }
        }
        if !independent_modulo(&f1, &fs)? {
            return Err(Error::InvalidInput(
                "F2..Fc must be linearly independent modulo the multiples of F1".into(),
            ));
        }
        Ok(CIPoint { f1, fs })
    }

    pub fn f1(&self) -> &HomogPolynomial {
        &self.f1
    }
    pub fn fs(&self) -> &[HomogPolynomial] {
        &self.fs
    }
    pub fn codimension(&self) -> usize {
        self.fs.len() + 1
    }
    pub fn nvars(&self) -> usize {
        self.f1.nvars()
    }
    pub fn d1(&self) -> u32 {
        self.f1.degree()
    }
    pub fn d2(&self) -> u32 {
        self.fs[0].degree()
    }

    /// All `c` forms in order.
    pub fn equations(&self) -> Vec<HomogPolynomial> {
        let mut v = vec![self.f1.clone()];
        v.extend(self.fs.iter().cloned());
        v
    }

    /// Whether `other` is the same point: proportional `F_1` and equal span
    /// of `F_2..F_c` together with the multiples of `F_1`.
    pub fn same_point(&self, other: &CIPoint) -> Result<bool> {
        if self.fs.len() != other.fs.len() || self.f1.degree() != other.f1.degree() {
            return Ok(false);
        }
        if forms_rank(&[self.f1.clone(), other.f1.clone()])? != 1 {
            return Ok(false);
        }
        let ideal = self.f1.multiples(self.d2());
        let mut a = ideal.clone();
        a.extend(self.fs.iter().cloned());
        let mut ab = a.clone();
        ab.extend(other.fs.iter().cloned());
        let ra = forms_rank(&a)?;
        Ok(ra == forms_rank(&ab)? && ra == ideal_rank_with(&ideal, &other.fs)?)
    }
}

fn ideal_rank_with(ideal: &[HomogPolynomial], fs: &[HomogPolynomial]) -> Result<usize> {
    let mut v = ideal.to_vec();
    v.extend(fs.iter().cloned());
    forms_rank(&v)
}

/// Whether the classes of `fs` modulo the degree-`d2` multiples of `f1` are
/// linearly independent.
pub fn independent_modulo(f1: &HomogPolynomial, fs: &[HomogPolynomial]) -> Result<bool> {
    if f1.is_zero() {
        return Ok(false);
    }
    let Some(first) = fs.first() else { return Ok(true) };
    let ideal = f1.multiples(first.degree());
    Ok(ideal_rank_with(&ideal, fs)? == ideal.len() + fs.len())
}

/// A line bundle `O(l1, l2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Linearization {
    pub l1: i64,
    pub l2: i64,
}

impl Linearization {
    pub fn new(l1: i64, l2: i64) -> Self {
        Linearization { l1, l2 }
    }
}

impl fmt::Display for Linearization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O({}, {})", self.l1, self.l2)
    }
}

fn deg(alpha: &WeightVector, f: &HomogPolynomial) -> Result<i64> {
    alpha_degree(alpha, f)?.finite().ok_or(Error::ZeroPolynomial)
}

/// Replaces `F_2..F_c` by representatives `Φ_i` of the same point whose
/// α-leading forms are independent modulo the multiples of `F_1^α`.
///
/// While some combination of leading forms of equal α-degree lies in the
/// multiples of `F_1^α`, the lowest-index form taking part is replaced by
/// that combination with the matching multiple of `F_1` subtracted, which
/// strictly lowers its α-degree.
pub fn normalize_equations(alpha: &WeightVector, p: &CIPoint) -> Result<CIPoint> {
    let field = p.f1.field();
    let lead1 = leading_form(alpha, &p.f1)?;
    let d2 = p.d2();
    let mults = monomials(p.nvars(), d2 - p.d1());
    let lifted: Vec<HomogPolynomial> = mults.iter().map(|m| lead1.mul_monomial(m)).collect();
    let lifted_deg: Vec<i64> = lifted.iter().map(|g| deg(alpha, g)).collect::<Result<_>>()?;
    let mut phis = p.fs.clone();
    'outer: loop {
        let degs: Vec<i64> = phis.iter().map(|f| deg(alpha, f)).collect::<Result<_>>()?;
        let mut levels = degs.clone();
        levels.sort_unstable_by(|a, b| b.cmp(a));
        levels.dedup();
        for delta in levels {
            let ideal_part: Vec<usize> = (0..lifted.len()).filter(|&t| lifted_deg[t] == delta).collect();
            let members: Vec<usize> = (0..phis.len()).filter(|&i| degs[i] == delta).collect();
            let mut forms: Vec<HomogPolynomial> = ideal_part.iter().map(|&t| lifted[t].clone()).collect();
            for &i in &members {
                forms.push(leading_form(alpha, &phis[i])?);
            }
            let rels = forms_relations(&forms)?;
            let Some(rel) = rels.first() else { continue };
            let (mu, lam) = rel.split_at(ideal_part.len());
            let k = lam.iter().position(|x| !field.is_zero(x)).expect("multiples of F1 are independent");
            let j = members[k];
            let scale = field.inv(&lam[k]).expect("nonzero");
            let mut next = HomogPolynomial::zero(field, p.nvars(), d2);
            for (&i, l) in members.iter().zip(lam) {
                if !field.is_zero(l) {
                    next = next.add(&phis[i].scale(&field.mul(l, &scale)))?;
                }
            }
            for (&t, m) in ideal_part.iter().zip(mu) {
                if !field.is_zero(m) {
                    next = next.add(&p.f1.mul_monomial(&mults[t]).scale(&field.mul(m, &scale)))?;
                }
            }
            debug_assert!(deg(alpha, &next)? < delta);
            phis[j] = next;
            continue 'outer;
        }
        break;
    }
    Ok(CIPoint { f1: p.f1.clone(), fs: phis })
}

/// The three properties a normalization must have, re-derived by rank
/// computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalizationCheck {
    /// The representatives describe the same point.
    pub same_point: bool,
    /// `deg_α(Φ_i) <= deg_α(F_i)` for each `i`.
    pub degrees_not_increased: bool,
    /// `[F_1^α, Φ_2^α, ..., Φ_c^α]` is again a point.
    pub leading_forms_independent: bool,
}

impl NormalizationCheck {
    pub fn all_hold(&self) -> bool {
        self.same_point && self.degrees_not_increased && self.leading_forms_independent
    }
}

pub fn verify_normalization(alpha: &WeightVector, original: &CIPoint, normalized: &CIPoint) -> Result<NormalizationCheck> {
    let same_point = original.same_point(normalized)?;
    let mut degrees_not_increased = true;
    for (f, phi) in original.fs.iter().zip(&normalized.fs) {
        if deg(alpha, phi)? > deg(alpha, f)? {
            degrees_not_increased = false;
        }
    }
    let lead1 = leading_form(alpha, &normalized.f1)?;
    let leads = normalized.fs.iter().map(|f| leading_form(alpha, f)).collect::<Result<Vec<_>>>()?;
    let leading_forms_independent = independent_modulo(&lead1, &leads)?;
    Ok(NormalizationCheck { same_point, degrees_not_increased, leading_forms_independent })
}

/// `μ^{O(l1,l2)}(P, ρ_α) = l1·deg_α(F_1) + l2·Σ deg_α(Φ_i)` with the `Φ_i`
/// from [`normalize_equations`].
pub fn mu_grass(alpha: &WeightVector, p: &CIPoint, l: Linearization) -> Result<i64> {
    let normal = normalize_equations(alpha, p)?;
    mu_of_normalized(alpha, &normal, l)
}

fn mu_of_normalized(alpha: &WeightVector, normal: &CIPoint, l: Linearization) -> Result<i64> {
    let mut total = l.l1 * deg(alpha, &normal.f1)?;
    for f in &normal.fs {
        total += l.l2 * deg(alpha, f)?;
    }
    Ok(total)
}

fn check_degrees(c: u64, d1: u64, d2: u64) -> Result<()> {
    if c < 2 {
        return Err(Error::InvalidInput(format!("need c >= 2, got {c}")));
    }
    if d1 < 2 || d1 >= d2 {
        return Err(Error::InvalidInput(format!("need 2 <= d1 < d2, got d1 = {d1}, d2 = {d2}")));
    }
    Ok(())
}

/// `(c - 1)(d2 - d1) + 1`, the slope bounding the ample cone.
pub fn ample_threshold(c: u64, d1: u64, d2: u64) -> u64 {
    (c - 1) * (d2 - d1) + 1
}

/// `O(l1, l2)` is ample iff `l2 > 0` and `l1 / l2 > (c - 1)(d2 - d1) + 1`.
pub fn is_ample(l: Linearization, c: u64, d1: u64, d2: u64) -> Result<bool> {
    check_degrees(c, d1, d2)?;
    Ok(ample_big(&BigInt::from(l.l1), &BigInt::from(l.l2), c, d1, d2))
}

fn ample_big(l1: &BigInt, l2: &BigInt, c: u64, d1: u64, d2: u64) -> bool {
    *l2 > BigInt::zero() && *l1 > l2 * BigInt::from(ample_threshold(c, d1, d2))
}

fn check_range(n: u64, c: u64, d1: u64, d2: u64) -> Result<()> {
    check_degrees(c, d1, d2)?;
    if c + 1 > n {
        return Err(Error::InvalidInput(format!("need 2 <= c <= N - 1, got c = {c}, N = {n}")));
    }
    Ok(())
}

/// `d2 (N - c + 2) > d1 ((c - 1)(d2 - d1) + 1)`.
pub fn stability_condition(n: u64, c: u64, d1: u64, d2: u64) -> Result<bool> {
    check_range(n, c, d1, d2)?;
    Ok(d2 * (n - c + 2) > d1 * ample_threshold(c, d1, d2))
}

/// The Fano-range inequality `N + 1 >= (c - 1) d2 + d1`.
pub fn fano_implies_condition(n: u64, c: u64, d1: u64, d2: u64) -> Result<bool> {
    check_degrees(c, d1, d2)?;
    Ok(n + 1 >= (c - 1) * d2 + d1)
}

/// The inequalities a linearization must satisfy for the positivity
/// argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Requirement {
    /// `l2 > 0` and `l1 / l2 > (c - 1)(d2 - d1) + 1`.
    Ample,
    /// `(N + 1) l1 d1 > l1 d1 + (c - 1) l2 d2`.
    FirstBound,
    /// `(N + 1) l2 d2 > l1 d1 + (c - 1) l2 d2`.
    SecondBound,
}

impl Requirement {
    pub const ALL: [Requirement; 3] = [Requirement::Ample, Requirement::FirstBound, Requirement::SecondBound];

    pub fn name(self) -> &'static str {
        match self {
            Requirement::Ample => "ample",
            Requirement::FirstBound => "first_bound",
            Requirement::SecondBound => "second_bound",
        }
    }

    /// `lhs - rhs` of the (strict) inequality.
    fn margin(self, n: i128, c: i128, d1: i128, d2: i128, l1: i128, l2: i128) -> i128 {
        match self {
            Requirement::Ample => l1 - l2 * ((c - 1) * (d2 - d1) + 1),
            Requirement::FirstBound => (n + 1) * l1 * d1 - (l1 * d1 + (c - 1) * l2 * d2),
            Requirement::SecondBound => (n + 1) * l2 * d2 - (l1 * d1 + (c - 1) * l2 * d2),
        }
    }
}

/// Outcome of [`choose_linearization`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizationChoice {
    pub k: u64,
    pub linearization: Linearization,
    /// Which requirements hold at this `k`.
    pub holds: Vec<(Requirement, bool)>,
    /// The least `k >= 1` at which all requirements hold, if any.
    pub least_k: Option<u64>,
    /// Requirements that fail for every large `k`.
    pub failing_in_limit: Vec<Requirement>,
}

impl LinearizationChoice {
    pub fn all_hold(&self) -> bool {
        self.holds.iter().all(|(_, ok)| *ok)
    }
}

/// `L = (k d2 (N + 2 - c) - 1, k d1)`.
pub fn linearization_for(n: u64, c: u64, d1: u64, d2: u64, k: u64) -> Linearization {
    Linearization::new((k * d2 * (n + 2 - c)) as i64 - 1, (k * d1) as i64)
}

/// Evaluates the linearization `(k d2 (N + 2 - c) - 1, k d1)` at `k` (the
/// least valid `k` when `None`), together with the least valid `k`.
///
/// Every requirement is affine in `k`, so its solution set among `k >= 1` is
/// an interval and the least valid `k` is exact.
pub fn choose_linearization(n: u64, c: u64, d1: u64, d2: u64, k: Option<u64>) -> Result<LinearizationChoice> {
    check_range(n, c, d1, d2)?;
    let (ni, ci, d1i, d2i) = (n as i128, c as i128, d1 as i128, d2 as i128);
    let margin = |r: Requirement, k: i128| {
        let l1 = k * d2i * (ni + 2 - ci) - 1;
        let l2 = k * d1i;
        r.margin(ni, ci, d1i, d2i, l1, l2)
    };
    let mut lower: i128 = 1;
    let mut upper: Option<i128> = None;
    let mut failing_in_limit = Vec::new();
    for r in Requirement::ALL {
        let b = margin(r, 0);
        let a = margin(r, 1) - b;
        // holds iff a k + b > 0
        if a > 0 {
            lower = lower.max((-b).div_euclid(a) + 1);
        } else if a == 0 {
            if b <= 0 {
                failing_in_limit.push(r);
                upper = Some(0);
            }
        } else {
            failing_in_limit.push(r);
            // a k + b > 0 iff k <= (b - 1) / -a
            let last = (b - 1).div_euclid(-a);
            upper = Some(upper.map_or(last, |u| u.min(last)));
        }
    }
    // l2 > 0 is automatic for k >= 1
    let least_k = match upper {
        Some(u) if u < lower => None,
        _ => Some(lower as u64),
    };
    let k = match k {
        Some(k) if k >= 1 => k,
        Some(_) => return Err(Error::InvalidInput("k must be positive".into())),
        None => least_k.unwrap_or(1),
    };
    let linearization = linearization_for(n, c, d1, d2, k);
    let holds = Requirement::ALL.iter().map(|&r| (r, margin(r, k as i128) > 0)).collect();
    Ok(LinearizationChoice { k, linearization, holds, least_k, failing_in_limit })
}

/// The class `(l1, l2)` of the discriminant divisor for `c = 2`:
/// `l1 = d2 Σ_{i=1}^{N} i e1^{i-1} e2^{N-i}`, `l2 = d1 Σ_{i=1}^{N} i e2^{i-1} e1^{N-i}`
/// with `e_i = d_i - 1`.
pub fn discriminant_class_c2(n: u64, d1: u64, d2: u64) -> Result<(BigInt, BigInt)> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("need N >= 2, got {n}")));
    }
    if d1 < 2 || d1 > d2 {
        return Err(Error::InvalidInput(format!("need 2 <= d1 <= d2, got d1 = {d1}, d2 = {d2}")));
    }
    let (e1, e2) = (BigInt::from(d1 - 1), BigInt::from(d2 - 1));
    let weighted = |a: &BigInt, b: &BigInt| -> BigInt {
        (1..=n)
            .map(|i| BigInt::from(i) * num_traits::pow(a.clone(), (i - 1) as usize) * num_traits::pow(b.clone(), (n - i) as usize))
            .sum()
    };
    Ok((BigInt::from(d2) * weighted(&e1, &e2), BigInt::from(d1) * weighted(&e2, &e1)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantCheck {
    pub l1: BigInt,
    pub l2: BigInt,
    /// `l1 / l2 <= d2 / d1`.
    pub below_degree_ratio: bool,
    /// `d2 / d1 <= d2 - d1 + 1`.
    pub degree_ratio_below_threshold: bool,
    pub ample: bool,
}

/// Evaluates the discriminant class and the chain showing it is not ample.
pub fn never_ample_check(n: u64, d1: u64, d2: u64) -> Result<DiscriminantCheck> {
    check_degrees(2, d1, d2)?;
    let (l1, l2) = discriminant_class_c2(n, d1, d2)?;
    let below_degree_ratio = &l1 * BigInt::from(d1) <= &l2 * BigInt::from(d2);
    let degree_ratio_below_threshold = d2 <= d1 * (d2 - d1 + 1);
    let ample = ample_big(&l1, &l2, 2, d1, d2);
    Ok(DiscriminantCheck { l1, l2, below_degree_ratio, degree_ratio_below_threshold, ample })
}

/// Result of a destabilizer search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Destabilizer {
    /// `μ <= 0` at this weight vector.
    Found { alpha: WeightVector, mu: i64 },
    /// Every candidate was tested.
    Exhausted { tested: u64 },
    /// The evaluation budget ran out before the candidates did.
    BudgetExhausted { tested: u64 },
}

/// Looks for `α` with `μ(α, P, L) <= 0` among nondecreasing sum-zero
/// vectors of height at most `params.height`, in canonical order. The first
/// hit in that order is returned regardless of scheduling.
pub fn find_destabilizer(p: &CIPoint, l: Linearization, params: &SearchParams) -> Result<Destabilizer> {
    let candidates = WeightVector::enumerate(p.nvars(), params.height);
    let total = candidates.len() as u64;
    let limit = params.max_evaluations.map_or(total, |b| b.min(total));
    let results: Vec<Option<Result<i64>>> = candidates[..limit as usize]
        .par_iter()
        .map(|a| match mu_grass(a, p, l) {
            Ok(mu) if mu <= 0 => Some(Ok(mu)),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        })
        .collect();
    for (a, r) in candidates.iter().zip(results) {
        match r {
            Some(Ok(mu)) => return Ok(Destabilizer::Found { alpha: a.clone(), mu }),
            Some(Err(e)) => return Err(e),
            None => {}
        }
    }
    if limit < total {
        Ok(Destabilizer::BudgetExhausted { tested: limit })
    } else {
        Ok(Destabilizer::Exhausted { tested: total })
    }
}

/// `Σ_i deg_α(F_i)` weighted by `(l1, l2, ..., l2)` without normalizing:
/// an upper bound for [`mu_grass`].
pub fn mu_upper_bound(alpha: &WeightVector, p: &CIPoint, l: Linearization) -> Result<i64> {
    mu_of_normalized(alpha, p, l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn poly(t: &str, n: usize, f: &Field) -> HomogPolynomial {
        HomogPolynomial::parse(t, n, f).unwrap()
    }

    fn w(v: &[i64]) -> WeightVector {
        WeightVector::new(v.to_vec()).unwrap()
    }

    fn cone_point(f: &Field) -> CIPoint {
        CIPoint::new(poly("x0*x1", 4, f), vec![poly("x0*x1*x3 + x0^3", 4, f)]).unwrap()
    }

    #[test]
    fn normalization_example() {
        let f = Field::rationals();
        let p = cone_point(&f);
        let a = w(&[-1, 0, 0, 1]);
        let q = normalize_equations(&a, &p).unwrap();
        assert_eq!(q.fs()[0], poly("x0^3", 4, &f));
        assert!(verify_normalization(&a, &p, &q).unwrap().all_hold());
        assert_eq!(mu_grass(&a, &p, Linearization::new(5, 7)).unwrap(), -5 - 21);
        assert_eq!(mu_grass(&a, &p, Linearization::new(1, 0)).unwrap(), -1);
    }

    #[test]
    fn normalization_fixed_points() {
        let f = Field::prime(7).unwrap();
        let p = CIPoint::new(poly("x0*x1", 4, &f), vec![poly("x2^3 + x3^3", 4, &f)]).unwrap();
        let a = w(&[-1, 0, 0, 1]);
        assert_eq!(normalize_equations(&a, &p).unwrap(), p);
    }

    #[test]
    fn normalization_matches_brute_force_over_f3() {
        // every representative λ F2 + Q F1 with Q a linear form over F_3
        let f = Field::prime(3).unwrap();
        let p = CIPoint::new(poly("x0*x1 + x2^2", 3, &f), vec![poly("x2^3 + x1*x2^2 + x0*x1*x2", 3, &f)]).unwrap();
        for a in WeightVector::enumerate(3, 2) {
            let best = normalize_equations(&a, &p).unwrap();
            let got = deg(&a, &best.fs()[0]).unwrap();
            let elems = f.elements().unwrap();
            let mut min = i64::MAX;
            for c0 in &elems {
                for c1 in &elems {
                    for c2 in &elems {
                        let q = HomogPolynomial::from_terms(
                            &f,
                            3,
                            1,
                            [(0, c0), (1, c1), (2, c2)]
                                .into_iter()
                                .map(|(i, c)| (crate::poly::Monomial::power(3, i, 1), c.clone())),
                        )
                        .unwrap();
                        for lam in elems.iter().filter(|x| !f.is_zero(x)) {
                            let rep = p.fs()[0].scale(lam).add(&q.mul(p.f1()).unwrap()).unwrap();
                            min = min.min(deg(&a, &rep).unwrap());
                        }
                    }
                }
            }
            assert_eq!(got, min, "alpha {a}");
        }
    }

    #[test]
    fn rejects_dependent_forms() {
        let f = Field::prime(5).unwrap();
        assert!(CIPoint::new(poly("x0^2", 3, &f), vec![poly("x0^2*x1", 3, &f)]).is_err());
        assert!(CIPoint::new(poly("x0^2", 3, &f), vec![poly("x1^3", 3, &f), poly("2*x1^3 + x0^3", 3, &f)]).is_err());
        assert!(CIPoint::new(poly("x0^3", 3, &f), vec![poly("x1^2", 3, &f)]).is_err());
    }

    #[test]
    fn ample_examples() {
        assert!(is_ample(Linearization::new(3, 1), 2, 2, 3).unwrap());
        assert!(!is_ample(Linearization::new(2, 1), 2, 2, 3).unwrap());
        assert!(is_ample(Linearization::new(5, 2), 2, 2, 3).unwrap());
        assert!(!is_ample(Linearization::new(5, 0), 2, 2, 3).unwrap());
        assert!(!is_ample(Linearization::new(-5, -1), 2, 2, 3).unwrap());
    }

    #[test]
    fn stability_examples() {
        assert!(stability_condition(3, 2, 2, 3).unwrap());
        assert!(stability_condition(5, 4, 2, 3).unwrap());
        assert!(stability_condition(3, 3, 2, 3).is_err());
        let ch = choose_linearization(3, 2, 2, 3, Some(1)).unwrap();
        assert_eq!(ch.linearization, Linearization::new(8, 2));
        assert!(ch.all_hold());
        assert_eq!(ch.least_k, Some(1));
        assert!(ch.failing_in_limit.is_empty());
    }

    #[test]
    fn chooser_reports_failure_in_the_limit() {
        // d2 (N - c + 2) = 15 = d1 ((c - 1)(d2 - d1) + 1)
        let n = 4;
        let (c, d1, d2) = (3, 3, 5);
        assert!(!stability_condition(n, c, d1, d2).unwrap());
        let ch = choose_linearization(n, c, d1, d2, None).unwrap();
        assert_eq!(ch.least_k, None);
        assert!(ch.failing_in_limit.contains(&Requirement::Ample));
    }

    #[test]
    fn fano_examples() {
        assert!(!fano_implies_condition(3, 2, 2, 3).unwrap());
        assert!(fano_implies_condition(5, 2, 2, 3).unwrap());
        assert!(stability_condition(5, 2, 2, 3).unwrap());
        assert!(fano_implies_condition(6, 2, 3, 4).unwrap());
    }

    #[test]
    fn discriminant_examples() {
        let (l1, l2) = discriminant_class_c2(3, 2, 3).unwrap();
        assert_eq!((l1, l2), (BigInt::from(33), BigInt::from(34)));
        let ch = never_ample_check(3, 2, 3).unwrap();
        assert!(ch.below_degree_ratio && ch.degree_ratio_below_threshold && !ch.ample);
        let (a, b) = discriminant_class_c2(4, 3, 3).unwrap();
        assert_eq!(a, b);
        assert!(discriminant_class_c2(1, 2, 3).is_err());
    }

    #[test]
    fn destabilizer_search() {
        let f = Field::prime(5).unwrap();
        let p = cone_point(&f);
        // mu_grass at (-1,0,0,1) is -l1 - 3 l2
        match find_destabilizer(&p, Linearization::new(8, 2), &SearchParams::new(1)).unwrap() {
            Destabilizer::Found { alpha, mu } => {
                assert!(mu <= 0);
                assert_eq!(mu_grass(&alpha, &p, Linearization::new(8, 2)).unwrap(), mu);
            }
            other => panic!("expected a destabilizer, got {other:?}"),
        }
        assert_eq!(
            find_destabilizer(&p, Linearization::new(8, 2), &SearchParams::new(0)).unwrap(),
            Destabilizer::Exhausted { tested: 0 }
        );
        let limited = SearchParams { height: 3, max_evaluations: Some(1) };
        let q = CIPoint::new(poly("x0^2 + x1^2 + x2^2 + x3^2", 4, &f), vec![poly("x0^3 + x1^3 + x2^3 + x3^3", 4, &f)])
            .unwrap();
        assert!(matches!(
            find_destabilizer(&q, Linearization::new(8, 2), &limited).unwrap(),
            Destabilizer::BudgetExhausted { tested: 1 }
        ));
    }
}
