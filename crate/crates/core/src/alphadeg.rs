//! The lower bound `Σ k_i deg_α(F_i) / d_i >= 0` for smooth complete
//! intersections: exact checks, the systems showing the hypothesis on the
//! `k_i` cannot be weakened, and a seeded fuzzer that hunts for
//! counterexamples.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::{find_common_zero, smoothness_check, CISystem, SmoothnessStatus, StrategyParams};
use crate::grassmu::{normalize_equations, verify_normalization, CIPoint};
use crate::poly::{monomials, HomogPolynomial, Monomial};
use crate::weights::{
    alpha_degree, lemma_chain, profile_from_degree, profile_is_consistent, AlphaDegree, SingularityProfile,
    WeightVector,
};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Coefficients `k_1, ..., k_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KVector(pub Vec<BigRational>);

impl KVector {
    pub fn from_integers(ks: &[i64]) -> Self {
        KVector(ks.iter().map(|&k| rat(k)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> BigRational {
        self.0.iter().sum()
    }
}

impl fmt::Display for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl std::str::FromStr for KVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let ks = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigRational>()
                    .map_err(|_| Error::InvalidInput(format!("`{}` is not a rational number", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        if ks.is_empty() {
            return Err(Error::InvalidInput("empty k vector".into()));
        }
        Ok(KVector(ks))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HypothesisCheck {
    /// `min k_i >= Σ k_i / (N + 1)`.
    pub holds: bool,
    /// `min k_i > Σ k_i / (N + 1)`.
    pub strict: bool,
}

pub fn check_hypothesis(k: &KVector, n: usize) -> Result<HypothesisCheck> {
    let Some(min) = k.0.iter().min() else {
        return Err(Error::InvalidInput("need c >= 1 coefficients".into()));
    };
    let lhs = min * rat(n as i64 + 1);
    let sum = k.sum();
    Ok(HypothesisCheck { holds: lhs >= sum, strict: lhs > sum })
}

/// `Σ k_i deg_α(F_i) / d_i`, exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityReport {
    pub lhs: BigRational,
    /// `lhs >= 0`.
    pub satisfied: bool,
    /// `lhs > 0`.
    pub strict: bool,
    /// `(deg_α(F_i), d_i)`.
    pub per_equation: Vec<(i64, u32)>,
}

impl InequalityReport {
    pub fn recompute(&self, k: &KVector) -> BigRational {
        lhs_of(k, &self.per_equation)
    }
}

fn lhs_of(k: &KVector, per_equation: &[(i64, u32)]) -> BigRational {
    k.0.iter()
        .zip(per_equation)
        .map(|(k, &(a, d))| k * BigRational::new(BigInt::from(a), BigInt::from(d)))
        .sum()
}

pub fn check_inequality(k: &KVector, alpha: &WeightVector, sys: &CISystem) -> Result<InequalityReport> {
    if k.len() != sys.codimension() {
        return Err(Error::DimensionMismatch { expected: sys.codimension(), found: k.len() });
    }
    let mut per_equation = Vec::new();
    for f in sys.equations() {
        match alpha_degree(alpha, f)? {
            AlphaDegree::Finite(a) => per_equation.push((a, f.degree())),
            AlphaDegree::NegInfinity => return Err(Error::ZeroPolynomial),
        }
    }
    Ok(report_from(k, per_equation))
}

fn report_from(k: &KVector, per_equation: Vec<(i64, u32)>) -> InequalityReport {
    let lhs = lhs_of(k, &per_equation);
    InequalityReport { satisfied: !lhs.is_negative(), strict: lhs.is_positive(), lhs, per_equation }
}

/// A smooth system together with the weight vector making one index
/// dominate.
#[derive(Clone, Debug)]
pub struct Witness {
    pub alpha: WeightVector,
    pub system: CISystem,
    /// Draws used before a smooth system came up.
    pub attempts: u32,
    pub seed: u64,
}

/// `N k_j - Σ_{i≠j} k_i`, the left-hand side on the system from
/// [`witness_outside_region`] (with `j` 1-based).
pub fn outside_lhs(k: &KVector, j: usize, n: usize) -> BigRational {
    let mut total = BigRational::zero();
    for (i, ki) in k.0.iter().enumerate() {
        if i + 1 == j {
            total += ki * rat(n as i64);
        } else {
            total -= ki;
        }
    }
    total
}

/// Attempts made by [`witness_outside_region`] before giving up.
pub const WITNESS_ATTEMPTS: u32 = 64;

/// `α = (-1, ..., -1, N)` and a smooth system where every `F_i`, `i ≠ j`,
/// omits `X_N` and `F_j` contains `X_N^{d_j}`. Then `deg_α(F_i) = -d_i`
/// for `i ≠ j` and `deg_α(F_j) = N d_j`. `j` is 1-based. Random draws are
/// repeated until the smoothness check says smooth.
pub fn witness_outside_region(
    n: usize,
    degrees: &[u32],
    j: usize,
    field: &Field,
    seed: u64,
    strategy: &StrategyParams,
) -> Result<Witness> {
    let c = degrees.len();
    if c == 0 || c + 1 > n {
        return Err(Error::InvalidInput(format!("need 1 <= c <= N - 1, got c = {c}, N = {n}")));
    }
    if j == 0 || j > c {
        return Err(Error::InvalidInput(format!("need 1 <= j <= c = {c}, got {j}")));
    }
    if field.is_rational() {
        return Err(Error::Unsupported("witnesses are drawn over finite fields".into()));
    }
    let mut alpha = vec![-1i64; n + 1];
    alpha[n] = n as i64;
    let alpha = WeightVector::new(alpha)?;
    let nvars = n + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=WITNESS_ATTEMPTS {
        let mut eqs = Vec::with_capacity(c);
        for (i, &d) in degrees.iter().enumerate() {
            if i + 1 == j {
                let mut f = HomogPolynomial::random(field, nvars, d, &mut rng);
                let top = Monomial::power(nvars, n, d);
                let lead = HomogPolynomial::monomial(field, top.clone(), field.random_nonzero(&mut rng));
                f = f.sub(&HomogPolynomial::monomial(field, top, f.coefficient(&Monomial::power(nvars, n, d))))?;
                eqs.push(f.add(&lead)?);
            } else {
                let support: Vec<Monomial> =
                    monomials(nvars, d).into_iter().filter(|m| m.exponents()[n] == 0).collect();
                eqs.push(HomogPolynomial::random_supported(field, nvars, d, &support, &mut rng));
            }
        }
        if eqs.iter().any(|f| f.is_zero()) {
            continue;
        }
        let sys = CISystem::new(eqs)?;
        if smoothness_check(&sys, strategy)?.status == SmoothnessStatus::Smooth {
            return Ok(Witness { alpha, system: sys, attempts: attempt, seed });
        }
    }
    Err(Error::BudgetExhausted(format!(
        "no smooth system in {WITNESS_ATTEMPTS} draws (seed {seed})"
    )))
}

/// `α = (-1, 0, ..., 0, 1)` and `F = X_0 X_N + X_1^2 + ... + X_{N-1}^2`:
/// smooth with `deg_α(F) = 0`.
pub fn quadric_equality_witness(n: usize, field: &Field, strategy: &StrategyParams) -> Result<Witness> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("need N >= 2, got {n}")));
    }
    if field.characteristic() == 2 {
        return Err(Error::Unsupported("the quadric witness needs characteristic other than 2".into()));
    }
    let nvars = n + 1;
    let mut alpha = vec![0i64; nvars];
    alpha[0] = -1;
    alpha[n] = 1;
    let alpha = WeightVector::new(alpha)?;
    let mut exps = vec![0u32; nvars];
    exps[0] = 1;
    exps[n] = 1;
    let mut terms = vec![(Monomial::new(exps), field.one())];
    for i in 1..n {
        terms.push((Monomial::power(nvars, i, 2), field.one()));
    }
    let f = HomogPolynomial::from_terms(field, nvars, 2, terms)?;
    let system = CISystem::new(vec![f])?;
    if smoothness_check(&system, strategy)?.status != SmoothnessStatus::Smooth {
        return Err(Error::InvalidInput(format!("the quadric is not certified smooth over {field}")));
    }
    Ok(Witness { alpha, system, attempts: 1, seed: 0 })
}

/// Settings for [`theorem_fuzz`].
#[derive(Clone, Debug)]
pub struct FuzzParams {
    pub field: Field,
    pub n: usize,
    pub degrees: Vec<u32>,
    /// Largest `|α_i|`.
    pub height: i64,
    pub trials: u64,
    pub seed: u64,
    /// Random `k` vectors drawn per trial, on top of the fixed ones.
    pub random_ks: usize,
    pub strategy: StrategyParams,
}

impl FuzzParams {
    pub fn new(field: Field, n: usize, degrees: Vec<u32>) -> Self {
        FuzzParams {
            field,
            n,
            degrees,
            height: 3,
            trials: 100,
            seed: 0,
            random_ks: 4,
            strategy: StrategyParams::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// `lhs < 0` although the hypothesis holds.
    Inequality,
    /// `lhs = 0` under the strict hypothesis, outside `c = 1, d_1 = 2`.
    Strictness,
    /// One of the single-equation bounds failed.
    LemmaChain,
    /// The profile disagrees with brute-force enumeration.
    Profile,
    /// The replayed point selection produced an index violating its bound,
    /// or found no nonvanishing equation at a singular point.
    Minoration,
    /// A normalization failed its postconditions.
    Normalization,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::Inequality => "inequality",
            ViolationKind::Strictness => "strictness",
            ViolationKind::LemmaChain => "lemma_chain",
            ViolationKind::Profile => "profile",
            ViolationKind::Minoration => "minoration",
            ViolationKind::Normalization => "normalization",
        }
    }
}

/// Everything needed to reproduce a failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub kind: ViolationKind,
    pub trial: u64,
    pub seed: u64,
    pub system: Vec<String>,
    pub alpha: WeightVector,
    pub k: Option<KVector>,
    pub lhs: Option<BigRational>,
}

/// Counters from a fuzz run. Every field is a plain count except the list
/// of counterexamples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FuzzStats {
    pub trials: u64,
    pub smooth: u64,
    pub filtered_singular: u64,
    pub filtered_undetermined: u64,
    pub alphas: u64,
    pub inequality_checks: u64,
    pub strict_checks: u64,
    /// `lhs = 0` under the strict hypothesis in the excluded case.
    pub excluded_equalities: u64,
    pub lemma_checks: u64,
    pub minoration_checks: u64,
    /// Point selections abandoned because no point turned up.
    pub minoration_unverifiable: u64,
    pub normalization_checks: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl FuzzStats {
    fn absorb(&mut self, o: FuzzStats) {
        self.trials += o.trials;
        self.smooth += o.smooth;
        self.filtered_singular += o.filtered_singular;
        self.filtered_undetermined += o.filtered_undetermined;
        self.alphas += o.alphas;
        self.inequality_checks += o.inequality_checks;
        self.strict_checks += o.strict_checks;
        self.excluded_equalities += o.excluded_equalities;
        self.lemma_checks += o.lemma_checks;
        self.minoration_checks += o.minoration_checks;
        self.minoration_unverifiable += o.minoration_unverifiable;
        self.normalization_checks += o.normalization_checks;
        self.counterexamples.extend(o.counterexamples);
    }

    pub fn violations(&self, kind: ViolationKind) -> usize {
        self.counterexamples.iter().filter(|c| c.kind == kind).count()
    }
}

/// `k` vectors satisfying the hypothesis: all ones, the boundary points
/// with one `k_j` at its least allowed value, and random rationals with
/// denominators at most 4, each pushed onto the boundary when that keeps
/// the hypothesis.
pub fn sample_ks<R: Rng + ?Sized>(c: usize, n: usize, random: usize, rng: &mut R) -> Vec<KVector> {
    let mut out = vec![KVector::from_integers(&vec![1; c])];
    if c > 1 {
        for j in 0..c {
            // k_j (N + 1) = k_j + (c - 1) N  when the others are N
            let mut ks = vec![n as i64; c];
            ks[j] = c as i64 - 1;
            out.push(KVector::from_integers(&ks));
        }
    }
    let mut attempts = 0;
    let mut drawn = 0;
    while drawn < random && attempts < 50 * (random + 1) {
        attempts += 1;
        let den = rng.gen_range(1..=4i64);
        let ks: Vec<BigRational> = (0..c).map(|_| BigRational::new(BigInt::from(rng.gen_range(1..=8i64)), BigInt::from(den))).collect();
        let mut k = KVector(ks);
        if !check_hypothesis(&k, n).map(|h| h.holds).unwrap_or(false) {
            continue;
        }
        if c > 1 && rng.gen_bool(0.5) {
            let j = (0..c).min_by(|&a, &b| k.0[a].cmp(&k.0[b])).expect("nonempty");
            let rest: BigRational = k.0.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, x)| x).sum();
            let mut pushed = k.clone();
            pushed.0[j] = rest / rat(n as i64);
            if check_hypothesis(&pushed, n).map(|h| h.holds).unwrap_or(false) {
                k = pushed;
            }
        }
        out.push(k);
        drawn += 1;
    }
    out
}

/// Draws a system: dense on even trials, truncated to monomials of low
/// α-degree for a random weight vector on odd ones.
fn draw_system(p: &FuzzParams, trial: u64, rng: &mut ChaCha8Rng, alphas: &[WeightVector]) -> Result<Option<CISystem>> {
    let nvars = p.n + 1;
    let mut eqs = Vec::new();
    if trial.is_multiple_of(2) || alphas.is_empty() {
        for &d in &p.degrees {
            eqs.push(HomogPolynomial::random(&p.field, nvars, d, rng));
        }
    } else {
        let a = alphas.choose(rng).expect("nonempty");
        for &d in &p.degrees {
            let all = monomials(nvars, d);
            let degs: Vec<i64> = all.iter().map(|m| m.weighted_degree(a.as_slice())).collect();
            let (lo, hi) = (*degs.iter().min().expect("nonempty"), *degs.iter().max().expect("nonempty"));
            let cut = rng.gen_range(lo..=hi);
            let support: Vec<Monomial> =
                all.into_iter().zip(&degs).filter(|(_, &g)| g <= cut).map(|(m, _)| m).collect();
            eqs.push(HomogPolynomial::random_supported(&p.field, nvars, d, &support, rng));
        }
    }
    if eqs.iter().any(|f| f.is_zero()) {
        return Ok(None);
    }
    Ok(Some(CISystem::new(eqs)?))
}

/// Replays the selection of indices `j_0, ..., j_{s(F_l)}` for one `α`,
/// returning the number of bounds checked, whether a point was missing,
/// and any failure.
struct Replay<'a> {
    sys: &'a CISystem,
    strategy: StrategyParams,
    memo: HashMap<(usize, usize, Vec<usize>), Option<Option<usize>>>,
}

impl Replay<'_> {
    /// The next index for `(l, v, chosen)`: `Some(Some(j))` when a point was
    /// found and `F_j` is the first equation not vanishing there,
    /// `Some(None)` when every equation vanishes there, `None` when no
    /// point was found.
    fn next_index(&mut self, l: usize, v: usize, chosen: &[usize]) -> Result<Option<Option<usize>>> {
        let key = (l, v, chosen.to_vec());
        if let Some(r) = self.memo.get(&key) {
            return Ok(*r);
        }
        let eqs = self.sys.equations();
        let fl = &eqs[l];
        let mut forms = vec![fl.restrict_to_tail(v)];
        for i in 0..fl.nvars() {
            forms.push(fl.derivative(i)?.restrict_to_tail(v));
        }
        for &j in chosen {
            forms.push(eqs[j].restrict_to_tail(v));
        }
        let nvars = fl.nvars() - v;
        let result = find_common_zero(&forms, nvars, &self.strategy)?.map(|point| (0..eqs.len())
                    .filter(|j| !chosen.contains(j))
                    .find(|&j| !point.field.is_zero(&point.evaluate(&eqs[j].restrict_to_tail(v)))));
        self.memo.insert(key, result);
        Ok(result)
    }
}

/// Index `l` with `s(F_l) >= 0` maximizing `Σ_t α_{v_t(F_l)} / (N - s(F_l))`
/// (smallest index on ties).
fn chosen_equation(alpha: &WeightVector, profiles: &[SingularityProfile]) -> Option<usize> {
    let n = alpha.len() as i64 - 1;
    let mut best: Option<(usize, BigRational)> = None;
    for (i, p) in profiles.iter().enumerate() {
        if p.s < 0 {
            continue;
        }
        let val = BigRational::new(BigInt::from(p.alpha_sum(alpha)), BigInt::from(n - p.s));
        if best.as_ref().is_none_or(|(_, b)| val > *b) {
            best = Some((i, val));
        }
    }
    best.map(|(i, _)| i)
}

fn run_trial(p: &FuzzParams, trial: u64, alphas: &[WeightVector]) -> Result<FuzzStats> {
    let mut stats = FuzzStats { trials: 1, ..FuzzStats::default() };
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    rng.set_stream(trial);
    let Some(sys) = draw_system(p, trial, &mut rng, alphas)? else {
        stats.filtered_singular += 1;
        return Ok(stats);
    };
    match smoothness_check(&sys, &p.strategy)?.status {
        SmoothnessStatus::Smooth => stats.smooth += 1,
        SmoothnessStatus::Singular => {
            stats.filtered_singular += 1;
            return Ok(stats);
        }
        SmoothnessStatus::Undetermined => {
            stats.filtered_undetermined += 1;
            return Ok(stats);
        }
    }
    let c = sys.codimension();
    let n = p.n;
    let ks = sample_ks(c, n, p.random_ks, &mut rng);
    let excluded = c == 1 && p.degrees[0] == 2;
    let text: Vec<String> = sys.equations().iter().map(|f| f.to_string()).collect();
    let point = match (sys.equations().first(), sys.equations().get(1)) {
        (Some(f1), Some(f2)) if f1.degree() < f2.degree() && sys.equations()[1..].iter().all(|g| g.degree() == f2.degree()) => {
            CIPoint::new(f1.clone(), sys.equations()[1..].to_vec()).ok()
        }
        _ => None,
    };
    let mut replay = Replay { sys: &sys, strategy: p.strategy.clone(), memo: HashMap::new() };
    let record = |stats: &mut FuzzStats, kind, alpha: &WeightVector, k: Option<&KVector>, lhs: Option<BigRational>| {
        stats.counterexamples.push(Counterexample {
            kind,
            trial,
            seed: p.seed,
            system: text.clone(),
            alpha: alpha.clone(),
            k: k.cloned(),
            lhs,
        });
    };

    for alpha in alphas {
        stats.alphas += 1;
        let per: Vec<(i64, u32)> = sys
            .equations()
            .iter()
            .map(|f| (alpha_degree(alpha, f).ok().and_then(|d| d.finite()).expect("nonzero"), f.degree()))
            .collect();
        for k in &ks {
            let hyp = check_hypothesis(k, n)?;
            if !hyp.holds {
                continue;
            }
            let rep = report_from(k, per.clone());
            stats.inequality_checks += 1;
            if !rep.satisfied {
                record(&mut stats, ViolationKind::Inequality, alpha, Some(k), Some(rep.lhs.clone()));
            }
            if hyp.strict {
                stats.strict_checks += 1;
                if !rep.strict {
                    if excluded {
                        stats.excluded_equalities += 1;
                    } else {
                        record(&mut stats, ViolationKind::Strictness, alpha, Some(k), Some(rep.lhs.clone()));
                    }
                }
            }
        }

        let profiles: Vec<SingularityProfile> =
            per.iter().map(|&(deg, d)| profile_from_degree(alpha, deg, d)).collect();
        for prof in &profiles {
            stats.lemma_checks += 1;
            if !profile_is_consistent(alpha, prof) {
                record(&mut stats, ViolationKind::Profile, alpha, None, None);
            }
            if !lemma_chain(alpha, prof).all_hold() {
                record(&mut stats, ViolationKind::LemmaChain, alpha, None, None);
            }
        }

        if let Some(l) = chosen_equation(alpha, &profiles) {
            let prof = &profiles[l];
            let mut chosen: Vec<usize> = Vec::new();
            for s in 0..=prof.s as usize {
                let v = prof.v[s];
                match replay.next_index(l, v, &chosen)? {
                    None => {
                        stats.minoration_unverifiable += 1;
                        break;
                    }
                    Some(None) => {
                        record(&mut stats, ViolationKind::Minoration, alpha, None, None);
                        break;
                    }
                    Some(Some(j)) => {
                        stats.minoration_checks += 1;
                        let (deg, d) = per[j];
                        if deg < d as i64 * alpha.get(v) {
                            record(&mut stats, ViolationKind::Minoration, alpha, None, None);
                        }
                        chosen.push(j);
                    }
                }
            }
        }

        if let Some(pt) = &point {
            stats.normalization_checks += 1;
            let normal = normalize_equations(alpha, pt)?;
            if !verify_normalization(alpha, pt, &normal)?.all_hold() {
                record(&mut stats, ViolationKind::Normalization, alpha, None, None);
            }
        }
    }
    Ok(stats)
}

/// Draws `trials` systems, keeps the ones certified smooth and checks the
/// inequality (weak and strict forms), the single-equation bounds and a
/// replay of the point-selection argument for every weight vector of height
/// at most `params.height`. Trials are seeded independently, so the result
/// does not depend on scheduling.
pub fn theorem_fuzz(params: &FuzzParams) -> Result<FuzzStats> {
    if params.degrees.is_empty() || params.degrees.len() > params.n {
        return Err(Error::InvalidInput(format!(
            "need 1 <= c <= N, got c = {}, N = {}",
            params.degrees.len(),
            params.n
        )));
    }
    if params.field.is_rational() {
        return Err(Error::Unsupported("fuzzing runs over finite fields".into()));
    }
    let alphas = WeightVector::enumerate(params.n + 1, params.height);
    let per_trial: Vec<Result<FuzzStats>> =
        (0..params.trials).into_par_iter().map(|t| run_trial(params, t, &alphas)).collect();
    let mut total = FuzzStats::default();
    for s in per_trial {
        total.absorb(s?);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(v: &[i64]) -> KVector {
        KVector::from_integers(v)
    }

    #[test]
    fn hypothesis_examples() {
        assert_eq!(check_hypothesis(&k(&[1, 1]), 3).unwrap(), HypothesisCheck { holds: true, strict: true });
        assert_eq!(check_hypothesis(&k(&[1, 3]), 3).unwrap(), HypothesisCheck { holds: true, strict: false });
        assert_eq!(check_hypothesis(&k(&[1, 4]), 3).unwrap(), HypothesisCheck { holds: false, strict: false });
        let half: KVector = "1/2,3/4".parse().unwrap();
        assert!(check_hypothesis(&half, 3).unwrap().strict);
    }

    #[test]
    fn inequality_on_fermat() {
        let f5 = Field::prime(5).unwrap();
        let sys = CISystem::new(vec![
            HomogPolynomial::parse("x0^2 + x1^2 + x2^2 + x3^2", 4, &f5).unwrap(),
            HomogPolynomial::parse("x0^3 + x1^3 + x2^3 + x3^3", 4, &f5).unwrap(),
        ])
        .unwrap();
        let a = WeightVector::new(vec![-1, 0, 0, 1]).unwrap();
        let r = check_inequality(&k(&[1, 1]), &a, &sys).unwrap();
        assert_eq!(r.lhs, rat(2));
        assert!(r.satisfied && r.strict);
        assert_eq!(r.recompute(&k(&[1, 1])), r.lhs);
        assert!(check_inequality(&k(&[1]), &a, &sys).is_err());
    }

    #[test]
    fn outside_witness_examples() {
        let f7 = Field::prime(7).unwrap();
        let st = StrategyParams::default();
        let w = witness_outside_region(3, &[2, 3], 1, &f7, 11, &st).unwrap();
        let r = check_inequality(&k(&[1, 4]), &w.alpha, &w.system).unwrap();
        assert_eq!(r.per_equation, vec![(6, 2), (-3, 3)]);
        assert_eq!(r.lhs, rat(-1));
        assert_eq!(r.lhs, outside_lhs(&k(&[1, 4]), 1, 3));
        assert_eq!(check_inequality(&k(&[1, 1]), &w.alpha, &w.system).unwrap().lhs, rat(2));
        let w = witness_outside_region(3, &[2, 3], 2, &f7, 11, &st).unwrap();
        let r = check_inequality(&k(&[3, 1]), &w.alpha, &w.system).unwrap();
        assert_eq!(r.per_equation, vec![(-2, 2), (9, 3)]);
        assert_eq!(r.lhs, rat(0));
        assert!(witness_outside_region(3, &[2, 3, 3], 1, &f7, 0, &st).is_err());
    }

    #[test]
    fn quadric_examples() {
        let st = StrategyParams::default();
        for (n, p) in [(2, 5), (3, 7)] {
            let f = Field::prime(p).unwrap();
            let w = quadric_equality_witness(n, &f, &st).unwrap();
            let r = check_inequality(&k(&[1]), &w.alpha, &w.system).unwrap();
            assert_eq!(r.lhs, rat(0));
            assert!(r.satisfied && !r.strict);
        }
        assert!(quadric_equality_witness(2, &Field::prime(2).unwrap(), &st).is_err());
    }

    #[test]
    fn sampled_ks_satisfy_the_hypothesis() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let ks = sample_ks(2, 3, 10, &mut rng);
        assert!(ks.len() >= 3);
        assert!(ks.iter().all(|k| check_hypothesis(k, 3).unwrap().holds));
        assert!(ks.iter().any(|k| !check_hypothesis(k, 3).unwrap().strict));
    }

    #[test]
    fn small_fuzz_run_is_clean_and_deterministic() {
        let mut p = FuzzParams::new(Field::prime(5).unwrap(), 3, vec![2, 3]);
        p.trials = 12;
        p.height = 2;
        p.seed = 7;
        let a = theorem_fuzz(&p).unwrap();
        assert!(a.smooth > 0);
        assert!(a.counterexamples.is_empty(), "{:?}", a.counterexamples);
        assert_eq!(a, theorem_fuzz(&p).unwrap());

        let mut q = FuzzParams::new(Field::prime(5).unwrap(), 2, vec![2]);
        q.trials = 8;
        q.height = 2;
        let b = theorem_fuzz(&q).unwrap();
        assert!(b.counterexamples.is_empty(), "{:?}", b.counterexamples);
    }
}
