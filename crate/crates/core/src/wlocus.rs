//! The locus `W` of tuples `(<F1>, <G_2, ..., G_c>)` where the ideal of `F1`
//! meets the span of the `G_i`: the generic division identity behind it and
//! a pointwise membership test.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{determinant, forms_rank, Echelon, MonomialIndex};
use crate::poly::{monomials, HomogPolynomial, Monomial};

/// Variables of `Z[X_s, a_L, b^{(i)}_M]`: `N + 1` variables `X_s`, one `a_L`
/// per monomial of degree `d1` and, for each of `copies` forms `g^{(i)}`, one
/// `b^{(i)}_M` per monomial of degree `d2`. Monomials are listed in grevlex
/// order, descending, so `a_{X_0^{d1}}` and `b^{(i)}_{X_0^{d2}}` come first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericRing {
    pub n: usize,
    pub d1: u32,
    pub d2: u32,
    pub copies: usize,
    f_monomials: Vec<Monomial>,
    g_monomials: Vec<Monomial>,
}

/// Bounds on the symbolic computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeGuard {
    pub max_n: usize,
    pub max_d2: u32,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard { max_n: 3, max_d2: 4 }
    }
}

impl GenericRing {
    pub fn new(n: usize, d1: u32, d2: u32, copies: usize, guard: SizeGuard) -> Result<Self> {
        if n < 1 || d1 < 1 || d1 > d2 || copies < 1 {
            return Err(Error::InvalidInput(format!(
                "need N >= 1, 1 <= d1 <= d2 and at least one form g, got N = {n}, d1 = {d1}, d2 = {d2}"
            )));
        }
        if n > guard.max_n || d2 > guard.max_d2 {
            return Err(Error::BudgetExhausted(format!(
                "symbolic division limited to N <= {}, d2 <= {} (got N = {n}, d2 = {d2})",
                guard.max_n, guard.max_d2
            )));
        }
        Ok(GenericRing {
            n,
            d1,
            d2,
            copies,
            f_monomials: monomials(n + 1, d1),
            g_monomials: monomials(n + 1, d2),
        })
    }

    fn nx(&self) -> usize {
        self.n + 1
    }

    fn na(&self) -> usize {
        self.f_monomials.len()
    }

    pub fn nvars(&self) -> usize {
        self.nx() + self.na() + self.copies * self.g_monomials.len()
    }

    pub fn f_monomials(&self) -> &[Monomial] {
        &self.f_monomials
    }

    pub fn g_monomials(&self) -> &[Monomial] {
        &self.g_monomials
    }

    fn var(&self, idx: usize) -> GenericRingElement {
        let mut e = vec![0; self.nvars()];
        e[idx] = 1;
        self.term(e, BigInt::one())
    }

    fn term(&self, exps: Vec<u32>, c: BigInt) -> GenericRingElement {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        GenericRingElement { parts: self.parts(), terms }
    }

    fn parts(&self) -> [usize; 2] {
        [self.nx(), self.nx() + self.na()]
    }

    pub fn zero(&self) -> GenericRingElement {
        GenericRingElement { parts: self.parts(), terms: BTreeMap::new() }
    }

    pub fn x(&self, s: usize) -> GenericRingElement {
        self.var(s)
    }

    /// `X^m` for a monomial in the `X` variables.
    pub fn x_monomial(&self, m: &Monomial) -> GenericRingElement {
        let mut e = vec![0; self.nvars()];
        e[..self.nx()].copy_from_slice(m.exponents());
        self.term(e, BigInt::one())
    }

    pub fn a(&self, l: usize) -> GenericRingElement {
        self.var(self.nx() + l)
    }

    /// Index of `a_{X_0^{d1}}` among the ring variables.
    pub fn a0_index(&self) -> usize {
        self.nx()
    }

    pub fn b(&self, copy: usize, m: usize) -> GenericRingElement {
        self.var(self.b_index(copy, m))
    }

    fn b_index(&self, copy: usize, m: usize) -> usize {
        self.nx() + self.na() + copy * self.g_monomials.len() + m
    }

    /// `f = Σ a_L L`.
    pub fn f(&self) -> GenericRingElement {
        let mut out = self.zero();
        for (l, m) in self.f_monomials.iter().enumerate() {
            out = out.add(&self.a(l).mul(&self.x_monomial(m)));
        }
        out
    }

    /// `g^{(copy)} = Σ b_M M`.
    pub fn g(&self, copy: usize) -> GenericRingElement {
        let mut out = self.zero();
        for (i, m) in self.g_monomials.iter().enumerate() {
            out = out.add(&self.b(copy, i).mul(&self.x_monomial(m)));
        }
        out
    }
}

/// A polynomial with integer coefficients in the variables of a
/// [`GenericRing`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericRingElement {
    /// Boundaries between the `X`, `a` and `b` blocks.
    parts: [usize; 2],
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl GenericRingElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn insert(&mut self, e: Vec<u32>, c: BigInt) {
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &GenericRingElement) -> GenericRingElement {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> GenericRingElement {
        GenericRingElement { parts: self.parts, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &GenericRingElement) -> GenericRingElement {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &GenericRingElement) -> GenericRingElement {
        let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        GenericRingElement { parts: self.parts, terms: acc }
    }

    /// `self^e`; `self^0` of the zero element is zero.
    pub fn pow(&self, e: u32) -> GenericRingElement {
        let Some(arity) = self.terms.keys().next().map(|k| k.len()) else {
            return self.clone();
        };
        let mut out = GenericRingElement { parts: self.parts, terms: BTreeMap::new() };
        out.terms.insert(vec![0; arity], BigInt::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    fn tridegree_of(&self, e: &[u32]) -> (u32, u32, u32) {
        let [x, a] = self.parts;
        (e[..x].iter().sum(), e[x..a].iter().sum(), e[a..].iter().sum())
    }

    /// The distinct tridegrees (degree in `X`, in `a`, in `b`) of the terms.
    pub fn tridegrees(&self) -> Vec<(u32, u32, u32)> {
        let mut out: Vec<_> = self.terms.keys().map(|e| self.tridegree_of(e)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Whether every term has tridegree `t` (vacuously true for zero).
    pub fn is_trihomogeneous(&self, t: (u32, u32, u32)) -> bool {
        self.terms.keys().all(|e| self.tridegree_of(e) == t)
    }

    /// Least exponent of variable `idx` over the terms (`None` for zero).
    pub fn valuation(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[idx]).min()
    }

    /// Splits off the terms whose exponent of `X_0` equals `e`, returning
    /// them with `X_0^e` removed, and the rest.
    fn split_x0(&self, e: u32) -> (GenericRingElement, GenericRingElement) {
        let mut h = GenericRingElement { parts: self.parts, terms: BTreeMap::new() };
        let mut rest = h.clone();
        for (exps, c) in &self.terms {
            if exps[0] == e {
                let mut q = exps.clone();
                q[0] = 0;
                h.terms.insert(q, c.clone());
            } else {
                rest.terms.insert(exps.clone(), c.clone());
            }
        }
        (h, rest)
    }
}

impl fmt::Display for GenericRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let [x, a] = self.parts;
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = if i < x {
                    format!("X{i}")
                } else if i < a {
                    format!("a{}", i - x)
                } else {
                    format!("b{}", i - a)
                };
                factors.push(if k == 1 { name } else { format!("{name}^{k}") });
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let body = match (factors.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => factors.join("*"),
                (false, false) => format!("{mag}*{}", factors.join("*")),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, " {sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// `q_j` and `r_j` with `a_{X_0^{d1}}^j g = q_j f + r_j`.
#[derive(Clone, Debug)]
pub struct DivisionIdentity {
    pub ring: GenericRing,
    pub j: u32,
    pub q: GenericRingElement,
    pub r: GenericRingElement,
}

/// Runs the recursion on `g^{(copy)}` up to step `j`: `q_0 = 0`, `r_0 = g`,
/// and at each step the terms `X_0^{d2-i} h` of `r_i` are rewritten through
/// `a_{X_0^{d1}} X_0^{d1} = f - f'`.
fn divide(ring: &GenericRing, copy: usize, j: u32) -> (GenericRingElement, GenericRingElement) {
    let a0 = ring.a(0);
    let f = ring.f();
    let f_rest = f.sub(&a0.mul(&ring.x_monomial(&Monomial::power(ring.nx(), 0, ring.d1))));
    let mut q = ring.zero();
    let mut r = ring.g(copy);
    for i in 0..j {
        let (h, rest) = r.split_x0(ring.d2 - i);
        let shift = ring.x_monomial(&Monomial::power(ring.nx(), 0, ring.d2 - ring.d1 - i)).mul(&h);
        q = a0.mul(&q).add(&shift);
        r = a0.mul(&rest).sub(&shift.mul(&f_rest));
    }
    (q, r)
}

fn check_j(d1: u32, d2: u32, j: u32) -> Result<()> {
    if j > d2 - d1 + 1 {
        return Err(Error::InvalidInput(format!("need 0 <= j <= d2 - d1 + 1 = {}, got {j}", d2 - d1 + 1)));
    }
    Ok(())
}

pub fn division_identity(n: usize, d1: u32, d2: u32, j: u32) -> Result<DivisionIdentity> {
    division_identity_with(n, d1, d2, j, SizeGuard::default())
}

pub fn division_identity_with(n: usize, d1: u32, d2: u32, j: u32, guard: SizeGuard) -> Result<DivisionIdentity> {
    let ring = GenericRing::new(n, d1, d2, 1, guard)?;
    check_j(d1, d2, j)?;
    let (q, r) = divide(&ring, 0, j);
    Ok(DivisionIdentity { ring, j, q, r })
}

/// The properties a division identity should have, each checked
/// independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    /// `a_{X_0^{d1}}^j g - q_j f - r_j` expands to zero.
    pub identity: bool,
    /// `q_j` has tridegree `(d2-d1, j-1, 1)` (or is zero) and `r_j` has
    /// `(d2, j, 1)`.
    pub tridegrees: bool,
    /// No term of `r_j` is divisible by `X_0^{d2+1-j}`.
    pub x0_excluded: bool,
    /// For `j >= 1`, every term of `r_j` contains `a_{X_0^{d1}}` or
    /// `b_{X_0^{d2}}`.
    pub divisible: bool,
}

impl IdentityCheck {
    pub fn all_hold(&self) -> bool {
        self.identity && self.tridegrees && self.x0_excluded && self.divisible
    }
}

impl DivisionIdentity {
    pub fn verify(&self) -> IdentityCheck {
        let ring = &self.ring;
        let (d1, d2, j) = (ring.d1, ring.d2, self.j);
        let lhs = ring.a(0).pow(j).mul(&ring.g(0));
        let rhs = self.q.mul(&ring.f()).add(&self.r);
        let q_ok = self.q.is_zero() || (j >= 1 && self.q.is_trihomogeneous((d2 - d1, j - 1, 1)));
        let r_ok = self.r.is_trihomogeneous((d2, j, 1));
        let x0_excluded = self.r.terms().all(|(e, _)| e[0] < d2 + 1 - j);
        let a0 = ring.a0_index();
        let b0 = ring.b_index(0, 0);
        let divisible = j == 0 || self.r.terms().all(|(e, _)| e[a0] > 0 || e[b0] > 0);
        IdentityCheck { identity: lhs == rhs, tridegrees: q_ok && r_ok, x0_excluded, divisible }
    }
}

/// Substitutes the coefficients of `f1` for the `a_L` and those of `gs[i]`
/// for the `b^{(i)}_M`, leaving a form in the `X_s`.
pub fn specialize(
    ring: &GenericRing,
    elem: &GenericRingElement,
    f1: &HomogPolynomial,
    gs: &[HomogPolynomial],
) -> Result<HomogPolynomial> {
    let field = f1.field();
    let nx = ring.nx();
    if f1.nvars() != nx || f1.degree() != ring.d1 || gs.len() != ring.copies {
        return Err(Error::InvalidInput("forms do not match the generic ring".into()));
    }
    if gs.iter().any(|g| g.nvars() != nx || g.degree() != ring.d2) {
        return Err(Error::InvalidInput("forms do not match the generic ring".into()));
    }
    let mut values: Vec<Scalar> = ring.f_monomials.iter().map(|m| f1.coefficient(m)).collect();
    for g in gs {
        values.extend(ring.g_monomials.iter().map(|m| g.coefficient(m)));
    }
    let mut by_monomial: BTreeMap<Monomial, Scalar> = BTreeMap::new();
    let mut degree = None;
    for (e, c) in elem.terms() {
        let x = Monomial::new(e[..nx].to_vec());
        if *degree.get_or_insert(x.degree()) != x.degree() {
            return Err(Error::InvalidInput("element is not homogeneous in X".into()));
        }
        let mut v = field.from_bigint(c);
        for (i, &k) in e[nx..].iter().enumerate() {
            if k > 0 {
                v = field.mul(&v, &field.pow(&values[i], k as u64));
            }
        }
        let slot = by_monomial.entry(x).or_insert_with(|| field.zero());
        *slot = field.add(slot, &v);
    }
    HomogPolynomial::from_terms(field, nx, degree.unwrap_or(ring.d2), by_monomial)
}

/// The `c-1` generic remainders `r^{(i)}_{d2-d1+1}` and the determinant of
/// their coefficients on the given monomials.
pub fn generic_determinant(
    n: usize,
    d1: u32,
    d2: u32,
    c: usize,
    columns: &[Monomial],
    guard: SizeGuard,
) -> Result<GenericRingElement> {
    if c < 2 || columns.len() != c - 1 {
        return Err(Error::InvalidInput(format!("need c >= 2 and c - 1 columns, got c = {c}, {}", columns.len())));
    }
    let ring = GenericRing::new(n, d1, d2, c - 1, guard)?;
    let nx = ring.nx();
    let j = d2 - d1 + 1;
    let mut matrix = Vec::new();
    for copy in 0..c - 1 {
        let (_, r) = divide(&ring, copy, j);
        let row: Vec<GenericRingElement> = columns
            .iter()
            .map(|m| {
                let mut out = ring.zero();
                for (e, coef) in r.terms() {
                    if &e[..nx] == m.exponents() {
                        let mut k = e.to_vec();
                        k[..nx].iter_mut().for_each(|x| *x = 0);
                        out.insert(k, coef.clone());
                    }
                }
                out
            })
            .collect();
        matrix.push(row);
    }
    Ok(cofactor_determinant(&ring, &matrix))
}

fn cofactor_determinant(ring: &GenericRing, m: &[Vec<GenericRingElement>]) -> GenericRingElement {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut out = ring.zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<GenericRingElement>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != col).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = m[0][col].mul(&cofactor_determinant(ring, &minor));
        out = if col % 2 == 0 { out.add(&term) } else { out.sub(&term) };
    }
    out
}

/// Monomials of degree `d2` whose exponent of `X_0` is below `d1`: a basis of
/// a complement of `(F1)_{d2}` once `F1` has coefficient 1 at `X_0^{d1}`.
pub fn remainder_monomials(nvars: usize, d1: u32, d2: u32) -> Vec<Monomial> {
    monomials(nvars, d2).into_iter().filter(|m| m.exponents()[0] < d1).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WMembership {
    pub in_w: bool,
    /// Determinant of the remainder coefficients on `columns`, zero when no
    /// full selection exists.
    pub det_value: Scalar,
    /// The coordinate `t` swapped with `X_0`.
    pub coordinate: usize,
    /// Remainders of the `G_i`, in the swapped coordinates.
    pub remainders: Vec<HomogPolynomial>,
    /// Monomials `M_j` picked by pivoting, when the remainders are
    /// independent.
    pub columns: Vec<Monomial>,
}

fn validate(f1: &HomogPolynomial, gs: &[HomogPolynomial]) -> Result<()> {
    if f1.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if gs.is_empty() {
        return Err(Error::InvalidInput("need at least one form G".into()));
    }
    for g in gs {
        if g.field() != f1.field() {
            return Err(Error::FieldMismatch { left: f1.field().to_string(), right: g.field().to_string() });
        }
        if g.nvars() != f1.nvars() {
            return Err(Error::DimensionMismatch { expected: f1.nvars(), found: g.nvars() });
        }
        if g.degree() != gs[0].degree() {
            return Err(Error::DegreeMismatch { left: gs[0].degree(), right: g.degree() });
        }
    }
    if f1.degree() > gs[0].degree() || f1.degree() == 0 {
        return Err(Error::InvalidInput(format!(
            "need 1 <= d1 <= d2, got d1 = {}, d2 = {}",
            f1.degree(),
            gs[0].degree()
        )));
    }
    Ok(())
}

/// Reduction of `g` by `f` (coefficient 1 at `X_0^{d1}`) following the
/// recursion of [`division_identity`] with `a_{X_0^{d1}} = 1`.
fn reduce_by(f: &HomogPolynomial, g: &HomogPolynomial) -> Result<HomogPolynomial> {
    let nvars = f.nvars();
    let (d1, d2) = (f.degree(), g.degree());
    let top = Monomial::power(nvars, 0, d1);
    let f_rest = f.sub(&HomogPolynomial::monomial(f.field(), top, f.field().one()))?;
    let mut r = g.clone();
    for i in 0..=d2 - d1 {
        let e = d2 - i;
        let mut h = Vec::new();
        let mut rest = Vec::new();
        for (m, c) in r.terms() {
            if m.exponents()[0] == e {
                let mut k = m.exponents().to_vec();
                k[0] = 0;
                h.push((Monomial::new(k), c.clone()));
            } else {
                rest.push((m.clone(), c.clone()));
            }
        }
        let h = HomogPolynomial::from_terms(f.field(), nvars, d2 - e, h)?;
        let shift = h.mul_monomial(&Monomial::power(nvars, 0, d2 - d1 - i));
        r = HomogPolynomial::from_terms(f.field(), nvars, d2, rest)?.sub(&shift.mul(&f_rest)?)?;
    }
    Ok(r)
}

/// Decides whether `(F1)_{d2}` meets the span of the `G_i` (or the `G_i`
/// are dependent) through the remainders of the `G_i` modulo `F1`.
///
/// ```
/// use cistab::{Field, HomogPolynomial};
/// use cistab::wlocus::w_membership;
///
/// let f5 = Field::prime(5).unwrap();
/// let f1 = HomogPolynomial::parse("x0^2", 3, &f5).unwrap();
/// let g = HomogPolynomial::parse("x1^3", 3, &f5).unwrap();
/// let w = w_membership(&f1, &[g]).unwrap();
/// assert!(!w.in_w);
/// assert!(!f5.is_zero(&w.det_value));
/// ```
pub fn w_membership(f1: &HomogPolynomial, gs: &[HomogPolynomial]) -> Result<WMembership> {
    validate(f1, gs)?;
    let field = f1.field();
    let nvars = f1.nvars();
    let (d1, d2) = (f1.degree(), gs[0].degree());
    let Some(t) = (0..nvars).find(|&t| !field.is_zero(&f1.coefficient(&Monomial::power(nvars, t, d1)))) else {
        return Err(Error::Unsupported(
            "F1 has no pure-power term X_t^d1; a general change of coordinates is not attempted".into(),
        ));
    };
    let mut perm: Vec<usize> = (0..nvars).collect();
    perm.swap(0, t);
    let lead = field.inv(&f1.coefficient(&Monomial::power(nvars, t, d1))).expect("nonzero");
    let f = f1.permute(&perm).scale(&lead);
    let remainders = gs.iter().map(|g| reduce_by(&f, &g.permute(&perm))).collect::<Result<Vec<_>>>()?;

    let cols = remainder_monomials(nvars, d1, d2);
    let index = MonomialIndex::new(cols.clone());
    let rows = remainders.iter().map(|r| index.row(r)).collect::<Result<Vec<_>>>()?;
    let mut ech = Echelon::new(field, cols.len());
    for row in &rows {
        ech.insert(row.clone());
    }
    let in_w = ech.rank() < gs.len();
    let (columns, det_value) = if in_w {
        (Vec::new(), field.zero())
    } else {
        let mut piv = ech.pivots().to_vec();
        piv.sort_unstable();
        let sub: Vec<Vec<Scalar>> = rows.iter().map(|r| piv.iter().map(|&p| r[p].clone()).collect()).collect();
        (piv.iter().map(|&p| cols[p].clone()).collect(), determinant(field, &sub))
    };
    Ok(WMembership { in_w, det_value, coordinate: t, remainders, columns })
}

/// `dim((F1)_{d2} ∩ span(G_i))`, computed from ranks of the two spans.
pub fn span_intersection_dimension(f1: &HomogPolynomial, gs: &[HomogPolynomial]) -> Result<usize> {
    validate(f1, gs)?;
    let ideal = f1.multiples(gs[0].degree());
    let a = forms_rank(&ideal)?;
    let b = forms_rank(gs)?;
    let mut all = ideal;
    all.extend(gs.iter().cloned());
    Ok(a + b - forms_rank(&all)?)
}

/// The direct definition: the spans meet, or the `G_i` are dependent.
pub fn w_membership_direct(f1: &HomogPolynomial, gs: &[HomogPolynomial]) -> Result<bool> {
    Ok(span_intersection_dimension(f1, gs)? > 0 || forms_rank(gs)? < gs.len())
}

/// Whether the generic determinant on the first `c-1` remainder monomials
/// is divisible by `a_{X_0^{d1}}^{c-2}`.
pub fn a0_divides_generic_determinant(n: usize, d1: u32, d2: u32, c: usize, guard: SizeGuard) -> Result<bool> {
    let cols = remainder_monomials(n + 1, d1, d2);
    if cols.len() < c - 1 {
        return Err(Error::InvalidInput(format!(
            "only {} remainder monomials, need c - 1 = {}",
            cols.len(),
            c - 1
        )));
    }
    let ring = GenericRing::new(n, d1, d2, c - 1, guard)?;
    let p = generic_determinant(n, d1, d2, c, &cols[..c - 1], guard)?;
    Ok(p.valuation(ring.a0_index()).is_none_or(|v| v as usize >= c - 2))
}
