//! Dense row reduction over exact fields.
//!
//! [`Arith`] abstracts the coefficient arithmetic so that the same
//! elimination code runs on big rationals, on `u64` residues and on table
//! handles for small extension fields.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar, TableField};
use crate::poly::{monomials, HomogPolynomial, Monomial};

pub trait Arith: Sync {
    type E: Clone + PartialEq + Send + Sync + fmt::Debug;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// Panics on zero.
    fn inv(&self, a: &Self::E) -> Self::E;

    /// `row[i] -= c * pivot[i]` for `i >= start`.
    fn axpy(&self, row: &mut [Self::E], c: &Self::E, pivot: &[Self::E], start: usize) {
        for (r, p) in row[start..].iter_mut().zip(&pivot[start..]) {
            if !self.is_zero(p) {
                *r = self.sub(r, &self.mul(c, p));
            }
        }
    }

    fn scale(&self, row: &mut [Self::E], c: &Self::E, start: usize) {
        for r in row[start..].iter_mut() {
            *r = self.mul(r, c);
        }
    }
}

impl Arith for Field {
    type E = Scalar;
    fn zero(&self) -> Scalar {
        Field::zero(self)
    }
    fn one(&self) -> Scalar {
        Field::one(self)
    }
    fn is_zero(&self, a: &Scalar) -> bool {
        Field::is_zero(self, a)
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        Field::add(self, a, b)
    }
    fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        Field::sub(self, a, b)
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        Field::mul(self, a, b)
    }
    fn neg(&self, a: &Scalar) -> Scalar {
        Field::neg(self, a)
    }
    fn inv(&self, a: &Scalar) -> Scalar {
        Field::inv(self, a).expect("inverse of zero")
    }
}

/// `F_p` on plain residues.
#[derive(Clone, Copy, Debug)]
pub struct PrimeArith {
    p: u64,
}

impl PrimeArith {
    pub fn new(p: u64) -> Self {
        PrimeArith { p }
    }
}

impl Arith for PrimeArith {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        crate::field::upoly::inv_mod(*a, self.p).expect("inverse of zero")
    }
    fn axpy(&self, row: &mut [u64], c: &u64, pivot: &[u64], start: usize) {
        let p = self.p;
        let m = p - c;
        for (r, &q) in row[start..].iter_mut().zip(&pivot[start..]) {
            if q != 0 {
                *r = (*r + m * q) % p;
            }
        }
    }
    fn scale(&self, row: &mut [u64], c: &u64, start: usize) {
        for r in row[start..].iter_mut() {
            *r = *r * c % self.p;
        }
    }
}

impl Arith for TableField {
    type E = u32;
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        TableField::add(self, *a, *b)
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        TableField::sub(self, *a, *b)
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        TableField::mul(self, *a, *b)
    }
    fn neg(&self, a: &u32) -> u32 {
        TableField::neg(self, *a)
    }
    fn inv(&self, a: &u32) -> u32 {
        TableField::inv(self, *a)
    }
}

/// Incremental echelon form. Rows keep insertion order; each row is zero in
/// the pivot columns of the rows inserted before it and has pivot 1.
pub struct Echelon<'a, A: Arith> {
    arith: &'a A,
    ncols: usize,
    rows: Vec<Vec<A::E>>,
    pivots: Vec<usize>,
}

impl<'a, A: Arith> Echelon<'a, A> {
    pub fn new(arith: &'a A, ncols: usize) -> Self {
        Echelon { arith, ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the stored rows in place.
    pub fn reduce(&self, v: &mut [A::E]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !self.arith.is_zero(&v[p]) {
                let c = v[p].clone();
                self.arith.axpy(v, &c, row, p);
            }
        }
    }

    /// Adds `v` to the span; returns its pivot column when it was independent.
    pub fn insert(&mut self, mut v: Vec<A::E>) -> Option<usize> {
        debug_assert_eq!(v.len(), self.ncols);
        self.reduce(&mut v);
        let p = v.iter().position(|x| !self.arith.is_zero(x))?;
        let inv = self.arith.inv(&v[p]);
        self.arith.scale(&mut v, &inv, p);
        self.rows.push(v);
        self.pivots.push(p);
        Some(p)
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &[A::E]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.arith.is_zero(x))
    }

    /// Reduced row echelon form: rows sorted by pivot, pivot columns cleared.
    pub fn into_rref(self) -> (Vec<Vec<A::E>>, Vec<usize>) {
        let arith = self.arith;
        let mut pairs: Vec<(usize, Vec<A::E>)> = self.pivots.into_iter().zip(self.rows).collect();
        pairs.sort_by_key(|(p, _)| *p);
        let (pivots, mut rows): (Vec<usize>, Vec<Vec<A::E>>) = pairs.into_iter().unzip();
        for i in (0..rows.len()).rev() {
            let p = pivots[i];
            let (above, below) = rows.split_at_mut(i);
            let pivot_row = &below[0];
            for row in above.iter_mut() {
                if !arith.is_zero(&row[p]) {
                    let c = row[p].clone();
                    arith.axpy(row, &c, pivot_row, p);
                }
            }
        }
        (rows, pivots)
    }
}

/// Rank of a list of vectors.
pub fn rank<A: Arith>(arith: &A, ncols: usize, rows: impl IntoIterator<Item = Vec<A::E>>) -> usize {
    let mut e = Echelon::new(arith, ncols);
    for r in rows {
        e.insert(r);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

/// A basis of the linear relations `Σ λ_i v_i = 0`.
pub fn relations<A: Arith>(arith: &A, ncols: usize, vectors: &[Vec<A::E>]) -> Vec<Vec<A::E>> {
    let m = vectors.len();
    let mut rows: Vec<(Vec<A::E>, Vec<A::E>)> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let mut v = v.clone();
        let mut combo = vec![arith.zero(); m];
        combo[i] = arith.one();
        for ((row, rc), &p) in rows.iter().zip(&pivots) {
            if !arith.is_zero(&v[p]) {
                let c = v[p].clone();
                arith.axpy(&mut v, &c, row, p);
                arith.axpy(&mut combo, &c, rc, 0);
            }
        }
        match v.iter().position(|x| !arith.is_zero(x)) {
            None => out.push(combo),
            Some(p) => {
                let inv = arith.inv(&v[p]);
                arith.scale(&mut v, &inv, p);
                arith.scale(&mut combo, &inv, 0);
                rows.push((v, combo));
                pivots.push(p);
            }
        }
    }
    debug_assert!(ncols == 0 || vectors.iter().all(|v| v.len() == ncols));
    out
}

/// Determinant of a square matrix.
pub fn determinant<A: Arith>(arith: &A, matrix: &[Vec<A::E>]) -> A::E {
    let n = matrix.len();
    let mut a: Vec<Vec<A::E>> = matrix.to_vec();
    let mut det = arith.one();
    for col in 0..n {
        let Some(r) = (col..n).find(|&r| !arith.is_zero(&a[r][col])) else {
            return arith.zero();
        };
        if r != col {
            a.swap(r, col);
            det = arith.neg(&det);
        }
        det = arith.mul(&det, &a[col][col]);
        let inv = arith.inv(&a[col][col]);
        let (top, bottom) = a.split_at_mut(col + 1);
        let pivot = &top[col];
        for row in bottom.iter_mut() {
            if !arith.is_zero(&row[col]) {
                let c = arith.mul(&row[col], &inv);
                arith.axpy(row, &c, pivot, col);
            }
        }
    }
    det
}

/// Runs `f` on an arithmetic suited to `field`: `u64` residues for prime
/// fields, the generic scalar arithmetic otherwise.
pub(crate) fn scalar_rows_rref(field: &Field, ncols: usize, rows: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    if field.is_prime_field() {
        let a = PrimeArith::new(field.characteristic());
        let mut e = Echelon::new(&a, ncols);
        for r in rows {
            e.insert(r.iter().map(modular).collect());
        }
        let (rows, pivots) = e.into_rref();
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(Scalar::Modular).collect())
            .collect();
        (rows, pivots)
    } else {
        let mut e = Echelon::new(field, ncols);
        for r in rows {
            e.insert(r);
        }
        e.into_rref()
    }
}

pub(crate) fn scalar_relations(field: &Field, ncols: usize, vectors: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if field.is_prime_field() {
        let a = PrimeArith::new(field.characteristic());
        let vs: Vec<Vec<u64>> = vectors.iter().map(|v| v.iter().map(modular).collect()).collect();
        relations(&a, ncols, &vs)
            .into_iter()
            .map(|r| r.into_iter().map(Scalar::Modular).collect())
            .collect()
    } else {
        relations(field, ncols, vectors)
    }
}

pub(crate) fn scalar_rank(field: &Field, ncols: usize, rows: &[Vec<Scalar>]) -> usize {
    if field.is_prime_field() {
        let a = PrimeArith::new(field.characteristic());
        rank(&a, ncols, rows.iter().map(|r| r.iter().map(modular).collect()))
    } else {
        rank(field, ncols, rows.iter().cloned())
    }
}

fn modular(s: &Scalar) -> u64 {
    match s {
        Scalar::Modular(v) => *v,
        _ => unreachable!("prime-field scalar expected"),
    }
}

/// Dimension of the span of forms of one degree.
pub fn forms_rank(forms: &[HomogPolynomial]) -> Result<usize> {
    let Some(first) = forms.first() else { return Ok(0) };
    let index = MonomialIndex::grevlex(first.nvars(), first.degree());
    let rows = forms.iter().map(|f| index.row(f)).collect::<Result<Vec<_>>>()?;
    Ok(scalar_rank(first.field(), index.len(), &rows))
}

/// Basis of the relations `Σ λ_i f_i = 0` among forms of one degree.
pub fn forms_relations(forms: &[HomogPolynomial]) -> Result<Vec<Vec<Scalar>>> {
    let Some(first) = forms.first() else { return Ok(Vec::new()) };
    let index = MonomialIndex::grevlex(first.nvars(), first.degree());
    let rows = forms.iter().map(|f| index.row(f)).collect::<Result<Vec<_>>>()?;
    Ok(scalar_relations(first.field(), index.len(), &rows))
}

/// Coefficient vectors of forms over an explicit monomial order.
#[derive(Clone, Debug)]
pub struct MonomialIndex {
    order: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialIndex {
    pub fn new(order: Vec<Monomial>) -> Self {
        let index = order.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialIndex { order, index }
    }

    /// All degree-`degree` monomials, grevlex descending.
    pub fn grevlex(nvars: usize, degree: u32) -> Self {
        MonomialIndex::new(monomials(nvars, degree))
    }

    pub fn order(&self) -> &[Monomial] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn row(&self, p: &HomogPolynomial) -> Result<Vec<Scalar>> {
        let mut v = vec![p.field().zero(); self.order.len()];
        for (m, c) in p.terms() {
            let i = self
                .position(m)
                .ok_or_else(|| Error::InvalidInput(format!("monomial {m} missing from the column order")))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn polynomial(&self, field: &Field, nvars: usize, degree: u32, row: &[Scalar]) -> HomogPolynomial {
        let terms = self
            .order
            .iter()
            .zip(row)
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(m, c)| (m.clone(), c.clone()));
        HomogPolynomial::from_terms(field, nvars, degree, terms).expect("consistent row")
    }
}

/// A subspace of the degree-`l` forms, stored as a reduced row echelon
/// matrix over an explicit monomial order.
#[derive(Clone, Debug)]
pub struct LinearSubspace {
    field: Field,
    nvars: usize,
    degree: u32,
    columns: MonomialIndex,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl LinearSubspace {
    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn degree(&self) -> u32 {
        self.degree
    }
    pub fn monomial_order(&self) -> &[Monomial] {
        self.columns.order()
    }
    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Pivot monomials, one per basis row.
    pub fn pivot_monomials(&self) -> Vec<&Monomial> {
        self.pivots.iter().map(|&p| &self.columns.order()[p]).collect()
    }

    /// The rows as forms.
    pub fn basis(&self) -> Vec<HomogPolynomial> {
        self.rows
            .iter()
            .map(|r| self.columns.polynomial(&self.field, self.nvars, self.degree, r))
            .collect()
    }

    pub fn contains(&self, p: &HomogPolynomial) -> Result<bool> {
        let mut v = self.columns.row(p)?;
        let f = &self.field;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&v[piv]) {
                let c = v[piv].clone();
                Arith::axpy(f, &mut v, &c, row, piv);
            }
        }
        Ok(v.iter().all(|x| f.is_zero(x)))
    }

    /// Re-reduces the stored rows over another column order.
    pub fn reordered(&self, order: Vec<Monomial>) -> Result<LinearSubspace> {
        row_reduce_in(&self.field, self.nvars, self.degree, &self.basis(), Some(order))
    }

    /// Checks the echelon invariants.
    pub fn is_reduced(&self) -> bool {
        let f = &self.field;
        self.pivots.windows(2).all(|w| w[0] < w[1])
            && self.rows.iter().zip(&self.pivots).enumerate().all(|(i, (r, &p))| {
                f.is_one(&r[p])
                    && r[..p].iter().all(|x| f.is_zero(x))
                    && self
                        .rows
                        .iter()
                        .enumerate()
                        .all(|(j, other)| j == i || f.is_zero(&other[p]))
            })
    }
}

/// Row-reduces forms of equal degree over the grevlex order, or over
/// `order` when given.
pub fn row_reduce(polys: &[HomogPolynomial], order: Option<Vec<Monomial>>) -> Result<LinearSubspace> {
    let first = polys
        .first()
        .ok_or_else(|| Error::InvalidInput("row_reduce needs at least one form".into()))?;
    row_reduce_in(first.field(), first.nvars(), first.degree(), polys, order)
}

/// As [`row_reduce`], with the ambient ring given explicitly (so an empty
/// list is allowed).
pub fn row_reduce_in(
    field: &Field,
    nvars: usize,
    degree: u32,
    polys: &[HomogPolynomial],
    order: Option<Vec<Monomial>>,
) -> Result<LinearSubspace> {
    for p in polys {
        if p.field() != field {
            return Err(Error::FieldMismatch { left: field.to_string(), right: p.field().to_string() });
        }
        if p.nvars() != nvars {
            return Err(Error::DimensionMismatch { expected: nvars, found: p.nvars() });
        }
        if p.degree() != degree {
            return Err(Error::DegreeMismatch { left: degree, right: p.degree() });
        }
    }
    let columns = match order {
        Some(o) => {
            let expected = monomials(nvars, degree).len();
            if o.len() != expected || o.iter().any(|m| m.nvars() != nvars || m.degree() != degree) {
                return Err(Error::InvalidInput("column order must list every monomial of the degree once".into()));
            }
            let idx = MonomialIndex::new(o);
            if idx.index.len() != expected {
                return Err(Error::InvalidInput("column order repeats a monomial".into()));
            }
            idx
        }
        None => MonomialIndex::grevlex(nvars, degree),
    };
    let rows: Vec<Vec<Scalar>> = polys.iter().map(|p| columns.row(p)).collect::<Result<_>>()?;
    let (rows, pivots) = scalar_rows_rref(field, columns.len(), rows);
    Ok(LinearSubspace { field: field.clone(), nvars, degree, columns, rows, pivots })
}
