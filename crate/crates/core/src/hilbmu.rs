//! Weights of Hilbert points: graded pieces of a complete intersection's
//! ideal, their minimum-weight bases, and the Koszul upper bound with its
//! leading coefficient in `l`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::CISystem;
use crate::linalg::{row_reduce_in, LinearSubspace};
use crate::poly::{monomials, Monomial};
use crate::weights::{all_weightings, alpha_degree, weighted_degree, AlphaDegree, SearchParams, WeightVector};

/// `H^0(I_Z(l))`: the span of `M·F_i` over monomials `M` of degree `l - d_i`.
pub fn ideal_piece(sys: &CISystem, l: u32) -> Result<LinearSubspace> {
    let gens: Vec<_> = sys.equations().iter().flat_map(|f| f.multiples(l)).collect();
    row_reduce_in(sys.field(), sys.nvars(), l, &gens, None)
}

/// `binom(top, n)` with `0` for negative `top`.
pub fn truncated_binomial(top: i64, n: u64) -> BigInt {
    if top < 0 {
        return BigInt::zero();
    }
    binomial(BigInt::from(top), BigInt::from(n))
}

/// Columns ordered by decreasing α-degree; ties broken by grevlex, or by lex
/// when `lex_ties` is set.
pub fn weight_order(alpha: &WeightVector, nvars: usize, degree: u32, lex_ties: bool) -> Vec<Monomial> {
    let mut order = monomials(nvars, degree);
    if lex_ties {
        order.sort_by(|a, b| b.cmp_lex(a));
    }
    order.sort_by_key(|m| std::cmp::Reverse(m.weighted_degree(alpha.as_slice())));
    order
}

/// A basis of least total α-degree.
#[derive(Clone, Debug)]
pub struct MinWeightBasis {
    /// Reduced over [`weight_order`]: each row's α-degree is that of its
    /// pivot monomial.
    pub subspace: LinearSubspace,
    /// α-degrees of the basis elements, in row order.
    pub degrees: Vec<i64>,
    pub mu: i64,
}

/// Row reduction with columns sorted by decreasing α-degree puts the
/// α-leading monomial of every row at its pivot. The pivot monomials are
/// then the leading monomials of the whole subspace, and the sum of their
/// α-degrees is the least achievable.
pub fn min_weight_basis(alpha: &WeightVector, v: &LinearSubspace) -> Result<MinWeightBasis> {
    min_weight_basis_with(alpha, v, false)
}

/// The zero subspace has the empty basis and `mu = 0`.
pub fn min_weight_basis_with(alpha: &WeightVector, v: &LinearSubspace, lex_ties: bool) -> Result<MinWeightBasis> {
    if alpha.len() != v.nvars() {
        return Err(Error::DimensionMismatch { expected: v.nvars(), found: alpha.len() });
    }
    let subspace = v.reordered(weight_order(alpha, v.nvars(), v.degree(), lex_ties))?;
    let degrees: Vec<i64> = subspace
        .pivot_monomials()
        .iter()
        .map(|m| m.weighted_degree(alpha.as_slice()))
        .collect();
    let mu = degrees.iter().sum();
    Ok(MinWeightBasis { subspace, degrees, mu })
}

/// The Koszul upper bound on the Hilbert-point weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulBoundReport {
    pub l: u32,
    /// `Σ_{I ∌ i} (-1)^{c-1-|I|} binom(N + l - Σ_{j∉I} d_j, N)` for each `i`.
    pub per_equation_coefficients: Vec<BigInt>,
    pub alpha_degrees: Vec<i64>,
    pub bound: BigInt,
    /// `l >= Σ d_i - N`, where every binomial is in its polynomial range.
    pub large_l: bool,
}

/// Coefficient of `deg_α(F_i)` in the bound.
pub fn koszul_coefficient(n: usize, degrees: &[u32], i: usize, l: u32) -> BigInt {
    let c = degrees.len();
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << c) {
        if mask & (1 << i) != 0 {
            continue;
        }
        let size = mask.count_ones() as usize;
        let outside: i64 = (0..c).filter(|j| mask & (1 << j) == 0).map(|j| degrees[j] as i64).sum();
        let term = truncated_binomial(n as i64 + l as i64 - outside, n as u64);
        if (c - 1 - size).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn finite_degrees(alpha: &WeightVector, sys: &CISystem) -> Result<Vec<i64>> {
    sys.equations()
        .iter()
        .map(|f| alpha_degree(alpha, f)?.finite().ok_or(Error::ZeroPolynomial))
        .collect()
}

pub fn koszul_bound(alpha: &WeightVector, sys: &CISystem, l: u32) -> Result<KoszulBoundReport> {
    let degrees = sys.degrees();
    let n = sys.ambient_dimension();
    let alpha_degrees = finite_degrees(alpha, sys)?;
    let per_equation_coefficients: Vec<BigInt> =
        (0..degrees.len()).map(|i| koszul_coefficient(n, &degrees, i, l)).collect();
    let bound = alpha_degrees
        .iter()
        .zip(&per_equation_coefficients)
        .map(|(&a, k)| BigInt::from(a) * k)
        .sum();
    let large_l = l as i64 >= degrees.iter().map(|&d| d as i64).sum::<i64>() - n as i64;
    Ok(KoszulBoundReport { l, per_equation_coefficients, alpha_degrees, bound, large_l })
}

/// `d_1 ... d_c / (N - c + 1)! · Σ deg_α(F_i) / d_i`.
pub fn asymptotic_coefficient(alpha: &WeightVector, sys: &CISystem) -> Result<BigRational> {
    let degs = finite_degrees(alpha, sys)?;
    let ds = sys.degrees();
    let prod: BigInt = ds.iter().map(|&d| BigInt::from(d)).product();
    let e = sys.ambient_dimension() - sys.codimension() + 1;
    let fact: BigInt = (1..=e as u64).map(BigInt::from).product();
    let sum: BigRational = degs
        .iter()
        .zip(&ds)
        .map(|(&a, &d)| BigRational::new(BigInt::from(a), BigInt::from(d)))
        .sum();
    Ok(BigRational::new(prod, fact) * sum)
}

/// The Hilbert function of a complete intersection with the given degrees:
/// `Σ_I (-1)^{|I|} binom(N + l - Σ_{i∈I} d_i, N)`.
pub fn ci_hilbert_function(n: usize, degrees: &[u32], l: u32) -> BigInt {
    let c = degrees.len();
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << c) {
        let inside: i64 = (0..c).filter(|j| mask & (1 << j) != 0).map(|j| degrees[j] as i64).sum();
        let term = truncated_binomial(n as i64 + l as i64 - inside, n as u64);
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Coefficients (constant term first) of the polynomial of degree
/// `< points.len()` through the given points.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Vec<BigRational> {
    let n = points.len();
    // Newton divided differences
    let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &points[i].0 - &points[i - level].0;
            dd[i] = num / den;
        }
    }
    let mut coeffs = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // coeffs = coeffs * (x - x_i) + dd[i]
        let xi = &points[i].0;
        let mut next = vec![BigRational::zero(); n];
        for k in 0..n {
            if coeffs[k].is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += &coeffs[k];
            }
            next[k] -= &coeffs[k] * xi;
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}

/// The Koszul bound as a polynomial in `l`, fitted on `N + 1` values in the
/// large-`l` range and checked on one more.
pub fn koszul_polynomial(alpha: &WeightVector, sys: &CISystem) -> Result<Vec<BigRational>> {
    let n = sys.ambient_dimension();
    let start = (sys.degrees().iter().sum::<u32>() as i64 - n as i64).max(0) as u32;
    let mut pts = Vec::new();
    for l in start..=start + n as u32 + 1 {
        let b = koszul_bound(alpha, sys, l)?.bound;
        pts.push((BigRational::from_integer(BigInt::from(l)), BigRational::from_integer(b)));
    }
    let (fit, check) = pts.split_at(n + 1);
    let coeffs = interpolate(fit);
    let (x, y) = &check[0];
    let mut value = BigRational::zero();
    for c in coeffs.iter().rev() {
        value = value * x + c;
    }
    if &value != y {
        return Err(Error::InvalidInput("the Koszul bound is not polynomial in l on this range".into()));
    }
    Ok(coeffs)
}

/// Verdict of the necessary condition `Σ deg_α(F_i) / d_i >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HilbertVerdict {
    /// Some weighting of the coordinates gives a negative sum.
    Violated { weights: Vec<i64>, lhs: BigRational },
    Consistent { tested: u64 },
    BudgetExhausted { tested: u64 },
}

/// `Σ deg_w(F_i) / d_i` for an arbitrary integer weighting `w` of the
/// coordinates.
pub fn hilbert_lhs(weights: &[i64], sys: &CISystem) -> Result<BigRational> {
    if weights.len() != sys.nvars() {
        return Err(Error::DimensionMismatch { expected: sys.nvars(), found: weights.len() });
    }
    let mut total = BigRational::zero();
    for f in sys.equations() {
        match weighted_degree(weights, f) {
            AlphaDegree::Finite(a) => total += BigRational::new(BigInt::from(a), BigInt::from(f.degree())),
            AlphaDegree::NegInfinity => return Err(Error::ZeroPolynomial),
        }
    }
    Ok(total)
}

/// Sweeps every sum-zero weighting of the coordinates with entries bounded
/// by the height (nondecreasing vectors composed with every coordinate
/// permutation). A violation is a genuine obstruction; `Consistent` only
/// speaks for the tested weightings.
pub fn hilbert_necessary_check(sys: &CISystem, params: &SearchParams) -> Result<HilbertVerdict> {
    let candidates = all_weightings(sys.nvars(), params.height);
    let total = candidates.len() as u64;
    let limit = params.max_evaluations.map_or(total, |b| b.min(total));
    for w in &candidates[..limit as usize] {
        let lhs = hilbert_lhs(w, sys)?;
        if lhs.is_negative() {
            return Ok(HilbertVerdict::Violated { weights: w.clone(), lhs });
        }
    }
    if limit < total {
        Ok(HilbertVerdict::BudgetExhausted { tested: limit })
    } else {
        Ok(HilbertVerdict::Consistent { tested: total })
    }
}

/// Coefficient of `l^power` in a polynomial given by its coefficients.
pub fn coefficient_of(coeffs: &[BigRational], power: usize) -> BigRational {
    coeffs.get(power).cloned().unwrap_or_else(BigRational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::HomogPolynomial;

    fn sys(texts: &[&str], n: usize, f: &Field) -> CISystem {
        CISystem::new(texts.iter().map(|t| HomogPolynomial::parse(t, n, f).unwrap()).collect()).unwrap()
    }

    fn w(v: &[i64]) -> WeightVector {
        WeightVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ideal_piece_ranks() {
        let q = Field::rationals();
        let s = sys(&["x0^2 + x1^2 + x2^2"], 3, &q);
        assert_eq!(ideal_piece(&s, 2).unwrap().rank(), 1);
        assert_eq!(ideal_piece(&s, 4).unwrap().rank(), 6);
        assert_eq!(ideal_piece(&s, 1).unwrap().rank(), 0);
        let f5 = Field::prime(5).unwrap();
        let s = sys(&["x0^2 + x1*x2", "x1^3 + x2^3 + x3^3"], 4, &f5);
        // binom(6,3) + binom(5,3) - 1
        assert_eq!(ideal_piece(&s, 5).unwrap().rank(), 20 + 10 - 1);
        for l in 1..8 {
            let expected = truncated_binomial(3 + l as i64, 3) - ci_hilbert_function(3, &[2, 3], l);
            assert_eq!(BigInt::from(ideal_piece(&s, l).unwrap().rank()), expected, "l = {l}");
        }
    }

    #[test]
    fn min_weight_examples() {
        let f3 = Field::prime(3).unwrap();
        let lin = row_reduce_in(
            &f3,
            2,
            1,
            &[HomogPolynomial::parse("x0", 2, &f3).unwrap(), HomogPolynomial::parse("x1", 2, &f3).unwrap()],
            None,
        )
        .unwrap();
        assert_eq!(min_weight_basis(&w(&[-1, 1]), &lin).unwrap().mu, 0);
        let q = Field::rationals();
        let s = sys(&["x0^2 + x1^2 + x2^2"], 3, &q);
        let v = ideal_piece(&s, 2).unwrap();
        let mb = min_weight_basis(&w(&[-1, 0, 1]), &v).unwrap();
        assert_eq!(mb.mu, 2);
        assert_eq!(min_weight_basis(&w(&[-1, 0, 1]), &ideal_piece(&s, 1).unwrap()).unwrap().mu, 0);
    }

    #[test]
    fn tie_order_does_not_matter() {
        let f5 = Field::prime(5).unwrap();
        let s = sys(&["x0*x1 + x2^2 + x3^2", "x0^3 + x1*x2*x3 + x3^3"], 4, &f5);
        let v = ideal_piece(&s, 4).unwrap();
        for a in WeightVector::enumerate(4, 2) {
            let g = min_weight_basis_with(&a, &v, false).unwrap().mu;
            let l = min_weight_basis_with(&a, &v, true).unwrap().mu;
            assert_eq!(g, l, "alpha {a}");
        }
    }

    #[test]
    fn koszul_examples() {
        let q = Field::rationals();
        // c = 1: deg_α(F) · binom(N + l - d, N)
        let s = sys(&["x0^2 + x1^2 + x2^2"], 3, &q);
        let r = koszul_bound(&w(&[-1, 0, 1]), &s, 4).unwrap();
        assert_eq!(r.bound, BigInt::from(2 * 6));
        assert!(r.large_l);
        // c = 2, N = 3, d = (2, 3), l = 6, by direct subset sums
        let s = sys(&["x0^2 + x1^2", "x2^3 + x3^3"], 4, &q);
        let r = koszul_bound(&w(&[-1, -1, 1, 1]), &s, 6).unwrap();
        // i = 1: I = {} gives -binom(3+6-5,3) = -4, I = {2} gives binom(3+6-2,3) = 35
        // i = 2: I = {} gives -4, I = {1} gives binom(3+6-3,3) = 20
        assert_eq!(r.per_equation_coefficients, vec![BigInt::from(31), BigInt::from(16)]);
        assert_eq!(r.alpha_degrees, vec![-2, 3]);
        assert_eq!(r.bound, BigInt::from(-62 + 48));
        let s = sys(&["x0*x2 + x1^2"], 3, &q);
        assert_eq!(koszul_bound(&w(&[-1, 0, 1]), &s, 5).unwrap().bound, BigInt::zero());
    }

    #[test]
    fn asymptotic_examples() {
        let q = Field::rationals();
        // deg_α = (2, 3) with d = (2, 3)
        let s = sys(&["x3^2", "x3^3"], 4, &q);
        let a = w(&[-1, -1, 1, 1]);
        assert_eq!(asymptotic_coefficient(&a, &s).unwrap(), BigRational::from_integer(BigInt::from(6)));
        let coeffs = koszul_polynomial(&a, &s).unwrap();
        assert_eq!(coeffs.len(), 4);
        assert_eq!(coefficient_of(&coeffs, 2), BigRational::from_integer(BigInt::from(6)));
        assert!(coefficient_of(&coeffs, 3).is_zero());
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let f = |x: i64| BigRational::from_integer(BigInt::from(2 * x * x * x - x + 7));
        let pts: Vec<_> = (3..7).map(|x| (BigRational::from_integer(BigInt::from(x)), f(x))).collect();
        let c = interpolate(&pts);
        let ints: Vec<BigRational> = [7, -1, 0, 2].iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect();
        assert_eq!(c, ints);
    }

    #[test]
    fn necessary_check_examples() {
        let f5 = Field::prime(5).unwrap();
        let fermat = sys(&["x0^2 + x1^2 + x2^2 + x3^2", "x0^3 + x1^3 + x2^3 + x3^3"], 4, &f5);
        assert!(matches!(
            hilbert_necessary_check(&fermat, &SearchParams::new(2)).unwrap(),
            HilbertVerdict::Consistent { .. }
        ));
        assert_eq!(
            hilbert_necessary_check(&fermat, &SearchParams::new(0)).unwrap(),
            HilbertVerdict::Consistent { tested: 0 }
        );
        let double_line = sys(&["x0^2"], 3, &f5);
        match hilbert_necessary_check(&double_line, &SearchParams::new(1)).unwrap() {
            HilbertVerdict::Violated { weights, lhs } => {
                assert!(lhs.is_negative());
                assert_eq!(hilbert_lhs(&weights, &double_line).unwrap(), lhs);
            }
            other => panic!("expected a violation, got {other:?}"),
        }
    }
}
