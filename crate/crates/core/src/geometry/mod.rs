//! Complete intersections in `P^N` and desk-scale geometry over finite
//! fields: smoothness by the Jacobian criterion, codimension checks and
//! dimension estimates for singular loci.
//!
//! Two complementary tools are used throughout. Exhaustive enumeration over
//! `F_{q^k}` finds witnesses; the Macaulay-matrix test in [`certificate`]
//! settles emptiness over the algebraic closure.

pub mod certificate;
mod points;

pub use certificate::{emptiness, macaulay_bound, CertificateLimits, Emptiness};
pub use points::{projective_count, Witness};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, TableField};
use crate::linalg::scalar_rank;
use crate::poly::HomogPolynomial;
use points::{PointQuery, Search};

/// `c` homogeneous equations in `N + 1` variables with nondecreasing degrees
/// `d_1 <= ... <= d_c`, each at least 2, and `1 <= c <= N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CISystem {
    equations: Vec<HomogPolynomial>,
}

impl CISystem {
    pub fn new(equations: Vec<HomogPolynomial>) -> Result<Self> {
        let first = equations
            .first()
            .ok_or_else(|| Error::InvalidInput("a system needs at least one equation".into()))?;
        let (field, nvars) = (first.field().clone(), first.nvars());
        let n = nvars as i64 - 1;
        if equations.len() as i64 > n {
            return Err(Error::InvalidInput(format!(
                "codimension {} exceeds the ambient dimension {n}",
                equations.len()
            )));
        }
        for (i, f) in equations.iter().enumerate() {
            if f.field() != &field {
                return Err(Error::FieldMismatch { left: field.to_string(), right: f.field().to_string() });
            }
            if f.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: f.nvars() });
            }
            if f.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            if f.degree() < 2 {
                return Err(Error::InvalidInput(format!("equation {} has degree {} < 2", i + 1, f.degree())));
            }
        }
        if let Some(i) = equations.windows(2).position(|w| w[0].degree() > w[1].degree()) {
            return Err(Error::InvalidInput(format!(
                "degrees must be nondecreasing (d_{} = {} > d_{} = {})",
                i + 1,
                equations[i].degree(),
                i + 2,
                equations[i + 1].degree()
            )));
        }
        Ok(CISystem { equations })
    }

    pub fn equations(&self) -> &[HomogPolynomial] {
        &self.equations
    }

    pub fn field(&self) -> &Field {
        self.equations[0].field()
    }

    pub fn nvars(&self) -> usize {
        self.equations[0].nvars()
    }

    /// `N`.
    pub fn ambient_dimension(&self) -> usize {
        self.nvars() - 1
    }

    pub fn codimension(&self) -> usize {
        self.equations.len()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.equations.iter().map(|f| f.degree()).collect()
    }

    /// Reduces a rational system modulo `p`.
    pub fn reduce(&self, p: u64) -> Result<CISystem> {
        let target = Field::prime(p)?;
        let eqs = self
            .equations
            .iter()
            .map(|f| f.reduce(&target))
            .collect::<Result<Vec<_>>>()?;
        if eqs.iter().zip(&self.equations).any(|(a, b)| a.is_zero() && !b.is_zero()) {
            return Err(Error::InvalidInput(format!("an equation vanishes modulo {p}")));
        }
        CISystem::new(eqs)
    }
}

/// Budgets and seeds for the geometric checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyParams {
    /// Largest `k` for enumeration over `F_{q^k}`.
    pub max_extension: u32,
    /// Largest degree for the emptiness certificate; defaults to `Σ d_i + N`.
    pub degree_bound: Option<u32>,
    pub seed: u64,
    /// Prime used to reduce rational input.
    pub prime: u64,
    /// Independent slices per dimension test.
    pub retries: u32,
    /// Largest number of points enumerated in one pass.
    pub point_cap: u64,
    /// Largest Macaulay matrix width.
    pub column_cap: u64,
}

impl Default for StrategyParams {
    fn default() -> Self {
        StrategyParams {
            max_extension: 3,
            degree_bound: None,
            seed: 0,
            prime: 10007,
            retries: 3,
            point_cap: 10_000_000,
            column_cap: 2500,
        }
    }
}

impl StrategyParams {
    fn limits(&self, degrees: &[u32], n: usize) -> CertificateLimits {
        CertificateLimits {
            degree_bound: self.degree_bound.unwrap_or(degrees.iter().sum::<u32>() + n as u32),
            column_cap: self.column_cap,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmoothnessStatus {
    Smooth,
    Singular,
    Undetermined,
}

/// Which test settled a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decider {
    /// A singular point was found over `F_{q^k}`.
    Enumeration { k: u32 },
    /// The singular-locus ideal contains every form of this degree.
    Certificate { degree: u32 },
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyReport {
    pub decided_by: Decider,
    /// The field the computation ran over.
    pub field: String,
    /// Set when rational input was reduced modulo a prime.
    pub reduced_mod: Option<u64>,
    /// Extension degrees fully enumerated without finding a point.
    pub searched: Vec<u32>,
    /// Extension degrees skipped because of the point cap.
    pub skipped: Vec<u32>,
    /// The certificate proved the singular locus nonempty over the closure.
    pub certified_nonempty: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothnessVerdict {
    pub status: SmoothnessStatus,
    pub witness: Option<Witness>,
    pub report: StrategyReport,
}

/// Forms whose common zeros are the singular points of the intersection:
/// the equations and every maximal minor of the Jacobian matrix.
pub fn singular_locus_generators(sys: &CISystem) -> Vec<HomogPolynomial> {
    let mut gens = sys.equations.clone();
    gens.extend(jacobian_minors(&jacobian(sys.equations())));
    gens
}

/// Rows of partial derivatives, one row per form.
pub fn jacobian(forms: &[HomogPolynomial]) -> Vec<Vec<HomogPolynomial>> {
    forms
        .iter()
        .map(|f| (0..f.nvars()).map(|j| f.derivative(j).expect("index in range")).collect())
        .collect()
}

/// All maximal minors of a `c × (N+1)` matrix of forms (nonzero ones only).
pub fn jacobian_minors(jac: &[Vec<HomogPolynomial>]) -> Vec<HomogPolynomial> {
    let c = jac.len();
    if c == 0 {
        return Vec::new();
    }
    let ncols = jac[0].len();
    let mut out = Vec::new();
    let mut cols = Vec::with_capacity(c);
    subsets(ncols, c, 0, &mut cols, &mut |cols| {
        let m = minor(jac, cols);
        if !m.is_zero() {
            out.push(m);
        }
    });
    out
}

fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in start..n {
        if n - i < k - cur.len() {
            break;
        }
        cur.push(i);
        subsets(n, k, i + 1, cur, f);
        cur.pop();
    }
}

/// Laplace expansion along the first row.
fn minor(jac: &[Vec<HomogPolynomial>], cols: &[usize]) -> HomogPolynomial {
    let rows = &jac[..cols.len()];
    if cols.len() == 1 {
        return rows[0][cols[0]].clone();
    }
    let field = rows[0][0].field().clone();
    let mut acc: Option<HomogPolynomial> = None;
    for (pos, &col) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != col).collect();
        let sub = minor(&jac[1..], &rest);
        let mut term = rows[0][col].mul(&sub).expect("same ring");
        if pos % 2 == 1 {
            term = term.neg();
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term).expect("same degree"),
        });
    }
    let out = acc.expect("nonempty");
    debug_assert_eq!(out.field(), &field);
    out
}

/// The system over a finite field (rational input is reduced modulo
/// `strategy.prime`).
fn working_system(sys: &CISystem, strategy: &StrategyParams) -> Result<(CISystem, Option<u64>)> {
    if sys.field().is_rational() {
        Ok((sys.reduce(strategy.prime)?, Some(strategy.prime)))
    } else {
        Ok((sys.clone(), None))
    }
}

/// Decides smoothness of the intersection over the algebraic closure of the
/// (reduced) coefficient field.
///
/// Order of attack: enumerate base-field points, try the emptiness
/// certificate, then enumerate extension fields up to
/// `strategy.max_extension`.
pub fn smoothness_check(sys: &CISystem, strategy: &StrategyParams) -> Result<SmoothnessVerdict> {
    let (work, reduced_mod) = working_system(sys, strategy)?;
    let field = work.field().clone();
    let eqs = work.equations();
    let jac = jacobian(eqs);
    let mut report = StrategyReport {
        decided_by: Decider::None,
        field: field.to_string(),
        reduced_mod,
        searched: Vec::new(),
        skipped: Vec::new(),
        certified_nonempty: false,
    };
    let query = PointQuery { zeros: eqs, jacobian: Some(&jac) };
    let enumerate = |k: u32, report: &mut StrategyReport| -> Result<Option<Witness>> {
        match points::search(&field, k as usize, strategy.point_cap, &query, work.nvars())? {
            Search::Found(w) => {
                report.decided_by = Decider::Enumeration { k };
                Ok(Some(w))
            }
            Search::NotFound => {
                report.searched.push(k);
                Ok(None)
            }
            Search::Skipped => {
                report.skipped.push(k);
                Ok(None)
            }
        }
    };
    let singular = |w: Witness, report: StrategyReport| SmoothnessVerdict {
        status: SmoothnessStatus::Singular,
        witness: Some(w),
        report,
    };

    if strategy.max_extension >= 1 {
        if let Some(w) = enumerate(1, &mut report)? {
            return Ok(singular(w, report));
        }
    }
    let mut gens = eqs.to_vec();
    gens.extend(jacobian_minors(&jac));
    let limits = strategy.limits(&work.degrees(), work.ambient_dimension());
    match emptiness(&gens, work.nvars(), limits)? {
        Emptiness::Empty { degree } => {
            report.decided_by = Decider::Certificate { degree };
            return Ok(SmoothnessVerdict { status: SmoothnessStatus::Smooth, witness: None, report });
        }
        Emptiness::Nonempty => report.certified_nonempty = true,
        Emptiness::Unknown => {}
    }
    for k in 2..=strategy.max_extension {
        if let Some(w) = enumerate(k, &mut report)? {
            return Ok(singular(w, report));
        }
    }
    Ok(SmoothnessVerdict { status: SmoothnessStatus::Undetermined, witness: None, report })
}

/// First common zero of `forms` over `F_{q^k}` for `k = 1, ..., max_extension`
/// (skipping fields over the point cap).
pub fn find_common_zero(forms: &[HomogPolynomial], nvars: usize, strategy: &StrategyParams) -> Result<Option<Witness>> {
    let Some(first) = forms.first() else {
        return Err(Error::InvalidInput("no forms given".into()));
    };
    let query = PointQuery { zeros: forms, jacobian: None };
    for k in 1..=strategy.max_extension {
        if let Search::Found(w) = points::search(first.field(), k as usize, strategy.point_cap, &query, nvars)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Re-checks a witness: every equation vanishes and the Jacobian has rank
/// below `c` there.
pub fn verify_witness(sys: &CISystem, w: &Witness, strategy: &StrategyParams) -> Result<bool> {
    let (work, _) = working_system(sys, strategy)?;
    let f = &w.field;
    if w.coordinates.iter().all(|x| f.is_zero(x)) {
        return Ok(false);
    }
    if !work.equations().iter().all(|e| f.is_zero(&w.evaluate(e))) {
        return Ok(false);
    }
    let rows: Vec<Vec<_>> = jacobian(work.equations())
        .iter()
        .map(|r| r.iter().map(|p| w.evaluate(p)).collect())
        .collect();
    Ok(scalar_rank(f, work.nvars(), &rows) < work.codimension())
}

/// Three-valued answer for heuristic checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tri {
    True,
    False,
    Undetermined,
}

/// A field with at least `min_order` elements containing `base`, and the
/// base forms mapped into it.
struct SliceField {
    field: Field,
    table: Option<TableField>,
}

impl SliceField {
    fn new(base: &Field, min_order: u64) -> Result<Self> {
        let p = base.characteristic();
        let m = base.degree();
        let big_enough = |k: usize| (p as f64).powi(k as i32) >= min_order as f64;
        if base.is_prime_field() && big_enough(1) {
            return Ok(SliceField { field: base.clone(), table: None });
        }
        let mut k = m;
        while !big_enough(k) {
            k += m;
        }
        let table = TableField::new(p, k)?;
        Ok(SliceField { field: table.field().clone(), table: Some(table) })
    }

    fn map(&self, f: &HomogPolynomial) -> Result<HomogPolynomial> {
        match &self.table {
            None => Ok(f.clone()),
            Some(t) => {
                let e = t.embedding(f.field())?;
                f.map_field(&self.field, |c| Ok(t.to_scalar(e.map(t, c))))
            }
        }
    }
}

/// Smallest field order used for random slices.
const SLICE_ORDER: u64 = 1000;

/// Whether the zero locus of `forms` meets `r` random linear subspaces of
/// dimension `dim` (`dim = -1` is never nonempty). Returns the number of
/// nonempty slices and whether any slice was undecided.
fn slices_nonempty(
    forms: &[HomogPolynomial],
    nvars: usize,
    dim: i64,
    strategy: &StrategyParams,
    stream: u64,
) -> Result<(u32, bool)> {
    if dim < 0 {
        return Ok((0, false));
    }
    let base = forms[0].field().clone();
    let slice = SliceField::new(&base, SLICE_ORDER)?;
    let mapped: Vec<HomogPolynomial> = forms.iter().map(|f| slice.map(f)).collect::<Result<_>>()?;
    let m = dim as usize + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(strategy.seed);
    let mut nonempty = 0;
    let mut undecided = false;
    for r in 0..strategy.retries {
        rng.set_stream(stream.wrapping_mul(1 << 16) + r as u64);
        let images = random_parametrization(&slice.field, nvars, m, &mut rng);
        let pulled: Vec<HomogPolynomial> = mapped.iter().map(|f| f.substitute(&images)).collect::<Result<_>>()?;
        let degrees: Vec<u32> = pulled.iter().map(|f| f.degree()).collect();
        let limits = CertificateLimits {
            degree_bound: strategy
                .degree_bound
                .unwrap_or(degrees.iter().sum::<u32>() + m as u32),
            column_cap: strategy.column_cap,
        };
        match emptiness(&pulled, m, limits)? {
            Emptiness::Empty { .. } => {}
            Emptiness::Nonempty => nonempty += 1,
            Emptiness::Unknown => undecided = true,
        }
    }
    Ok((nonempty, undecided))
}

/// An injective linear map `P^{m-1} → P^{nvars-1}` as `nvars` linear forms
/// in `m` variables.
fn random_parametrization(field: &Field, nvars: usize, m: usize, rng: &mut ChaCha8Rng) -> Vec<HomogPolynomial> {
    loop {
        let matrix: Vec<Vec<_>> = (0..nvars).map(|_| (0..m).map(|_| field.random(rng)).collect()).collect();
        if scalar_rank(field, m, &matrix) < m {
            continue;
        }
        return matrix
            .iter()
            .map(|row| {
                let terms = row
                    .iter()
                    .enumerate()
                    .map(|(j, c)| (crate::poly::Monomial::power(m, j, 1), c.clone()));
                HomogPolynomial::from_terms(field, m, 1, terms).expect("linear form")
            })
            .collect();
    }
}

/// Whether the equations cut out a locus of dimension exactly `N - c`.
///
/// The locus is sliced by `N - c + 1` random hyperplanes; an empty slice
/// proves the dimension is at most `N - c` (so exactly `N - c`). If every
/// retry is nonempty the answer is `False`, which is a heuristic verdict.
pub fn is_complete_intersection(sys: &CISystem, strategy: &StrategyParams) -> Result<Tri> {
    let (work, _) = working_system(sys, strategy)?;
    let n = work.ambient_dimension() as i64;
    let c = work.codimension() as i64;
    let (nonempty, undecided) = slices_nonempty(work.equations(), work.nvars(), c - 1, strategy, 1)?;
    Ok(if nonempty < strategy.retries && !undecided {
        Tri::True
    } else if nonempty == strategy.retries {
        Tri::False
    } else if nonempty + (undecided as u32) < strategy.retries {
        // some slice was certified empty
        Tri::True
    } else {
        let _ = n;
        Tri::Undetermined
    })
}

/// Estimate of `dim(Sing ∩ {X_0 = ... = X_{v-1} = 0})`, or `-1` when that
/// set is empty.
///
/// The set is cut by `k` random hyperplanes for increasing `k`; the result
/// is the largest `k` for which every retry stays nonempty. An empty slice
/// proves the dimension is below `k`, so the value never underestimates the
/// true dimension; equality holds for generic slices.
pub fn singular_section_dimension(sys: &CISystem, v: usize, strategy: &StrategyParams) -> Result<i64> {
    let (work, _) = working_system(sys, strategy)?;
    let nvars = work.nvars();
    if v > nvars - 1 {
        return Err(Error::InvalidInput(format!("v = {v} exceeds N = {}", nvars - 1)));
    }
    // restrict to {X_0 = ... = X_{v-1} = 0} ≅ P^{N-v}
    let keep = nvars - v;
    let field = work.field().clone();
    let images: Vec<HomogPolynomial> = (0..nvars)
        .map(|i| {
            if i < v {
                HomogPolynomial::zero(&field, keep, 1)
            } else {
                HomogPolynomial::variable(&field, keep, i - v)
            }
        })
        .collect();
    let gens: Vec<HomogPolynomial> = singular_locus_generators(&work)
        .iter()
        .map(|g| g.substitute(&images))
        .collect::<Result<_>>()?;
    let gens: Vec<HomogPolynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    let ambient = keep as i64 - 1;
    if gens.is_empty() {
        return Ok(ambient);
    }
    let mut best = -1;
    for k in 0..=ambient {
        let (nonempty, _) = slices_nonempty(&gens, keep, ambient - k, strategy, 100 + k as u64)?;
        if nonempty == strategy.retries {
            best = k;
        } else {
            break;
        }
    }
    Ok(best)
}
