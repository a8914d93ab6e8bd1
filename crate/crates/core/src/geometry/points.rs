//! Exhaustive search for points of `P^N(F_{q^k})`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Embedding, Field, Scalar, TableField};
use crate::poly::HomogPolynomial;

/// A point over a finite extension of the base field, self-contained enough
/// to be re-verified: the coordinates live in `field` and `base_root` is the
/// image of the base field generator (for extension base fields).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub field: Field,
    pub coordinates: Vec<Scalar>,
    pub base_root: Option<Scalar>,
}

impl Witness {
    /// Maps a base-field coefficient into the witness field.
    pub fn embed(&self, s: &Scalar) -> Scalar {
        let f = &self.field;
        match s {
            Scalar::Modular(v) => f.embed_prime(*v),
            Scalar::Extension(v) => {
                let r = self.base_root.as_ref().expect("extension base needs a root");
                let mut acc = f.zero();
                for &c in v.iter().rev() {
                    acc = f.add(&f.mul(&acc, r), &f.embed_prime(c));
                }
                acc
            }
            Scalar::Rational(_) => panic!("reduce rational forms before evaluating"),
        }
    }

    /// Value of a base-field form at the point.
    pub fn evaluate(&self, p: &HomogPolynomial) -> Scalar {
        let q = p.map_field(&self.field, |c| Ok(self.embed(c))).expect("embedding");
        q.evaluate(&self.coordinates).expect("dimension")
    }

    pub fn format(&self) -> String {
        let parts: Vec<String> = self.coordinates.iter().map(|c| self.field.format(c)).collect();
        format!("[{}]", parts.join(":"))
    }
}

/// A form compiled to table handles.
struct Compiled {
    terms: Vec<(u32, Vec<u32>)>,
}

impl Compiled {
    fn new(t: &TableField, e: &Embedding, p: &HomogPolynomial) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| (e.map(t, c), m.exponents().to_vec()))
            .filter(|(c, _)| *c != 0)
            .collect();
        Compiled { terms }
    }

    #[inline]
    fn eval(&self, t: &TableField, x: &[u32]) -> u32 {
        let n = t.order() - 1;
        let mut acc = 0u32;
        'terms: for (c, exps) in &self.terms {
            let mut log = (*c - 1) as u64;
            for (&xi, &e) in x.iter().zip(exps) {
                if e == 0 {
                    continue;
                }
                if xi == 0 {
                    continue 'terms;
                }
                log += (xi - 1) as u64 * e as u64;
            }
            acc = t.add(acc, (log % n) as u32 + 1);
        }
        acc
    }
}

/// What a point must satisfy.
pub(crate) struct PointQuery<'a> {
    /// Forms that must vanish.
    pub zeros: &'a [HomogPolynomial],
    /// Jacobian rows (one row of partials per equation) whose rank must
    /// drop below the number of rows.
    pub jacobian: Option<&'a [Vec<HomogPolynomial>]>,
}

/// Number of points of `P^{nvars-1}(F_q)`, if it fits in a `u64`.
pub fn projective_count(q: u64, nvars: usize) -> Option<u64> {
    let mut total: u64 = 0;
    let mut block: u64 = 1;
    for _ in 0..nvars {
        total = total.checked_add(block)?;
        block = block.checked_mul(q)?;
    }
    Some(total)
}

/// Outcome of one enumeration pass.
pub(crate) enum Search {
    Found(Witness),
    NotFound,
    /// Too many points for the cap.
    Skipped,
}

/// Looks for a point over `F_{q^k}` (where `F_q` is the base field of the
/// forms). The first point in the canonical order is returned, so results
/// do not depend on thread scheduling.
pub(crate) fn search(base: &Field, k: usize, cap: u64, query: &PointQuery<'_>, nvars: usize) -> Result<Search> {
    if base.is_rational() {
        return Err(Error::Unsupported("point enumeration needs a finite field".into()));
    }
    let p = base.characteristic();
    let total_degree = base.degree() * k;
    let Some(q) = p.checked_pow(total_degree as u32) else {
        return Ok(Search::Skipped);
    };
    match projective_count(q, nvars) {
        Some(c) if c <= cap && q <= crate::field::table::MAX_TABLE => {}
        _ => return Ok(Search::Skipped),
    }
    if nvars > 16 {
        return Ok(Search::Skipped);
    }
    let t = TableField::new(p, total_degree)?;
    let emb = t.embedding(base)?;
    let zeros: Vec<Compiled> = query.zeros.iter().map(|f| Compiled::new(&t, &emb, f)).collect();
    let jac: Option<Vec<Vec<Compiled>>> = query
        .jacobian
        .map(|rows| rows.iter().map(|r| r.iter().map(|f| Compiled::new(&t, &emb, f)).collect()).collect());

    // block i: coordinates 0..i are zero, coordinate i is 1
    let mut offsets = Vec::with_capacity(nvars + 1);
    let mut acc = 0u64;
    for i in 0..nvars {
        offsets.push(acc);
        acc += q.pow((nvars - 1 - i) as u32);
    }
    offsets.push(acc);
    let total = acc;

    let decode = |idx: u64, out: &mut [u32; 16]| {
        let i = offsets.partition_point(|&o| o <= idx) - 1;
        let mut r = idx - offsets[i];
        for x in out.iter_mut().take(i) {
            *x = 0;
        }
        out[i] = 1;
        for j in (i + 1..nvars).rev() {
            out[j] = t.from_code(r % q);
            r /= q;
        }
    };

    let test = |idx: u64| -> bool {
        let mut buf = [0u32; 16];
        decode(idx, &mut buf);
        let x = &buf[..nvars];
        if !zeros.iter().all(|f| f.eval(&t, x) == 0) {
            return false;
        }
        match &jac {
            None => true,
            Some(rows) => {
                let mut m: Vec<Vec<u32>> =
                    rows.iter().map(|r| r.iter().map(|f| f.eval(&t, x)).collect()).collect();
                table_rank(&t, &mut m) < rows.len()
            }
        }
    };

    let found = (0..total as usize).into_par_iter().with_min_len(4096).find_first(|&i| test(i as u64));
    Ok(match found {
        None => Search::NotFound,
        Some(idx) => {
            let idx = idx as u64;
            let mut buf = [0u32; 16];
            decode(idx, &mut buf);
            Search::Found(Witness {
                field: t.field().clone(),
                coordinates: buf[..nvars].iter().map(|&h| t.to_scalar(h)).collect(),
                base_root: emb.root().map(|h| t.to_scalar(h)),
            })
        }
    })
}

fn table_rank(t: &TableField, m: &mut [Vec<u32>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(r) = (rank..rows).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, r);
        let inv = t.inv(m[rank][col]);
        for j in col..cols {
            m[rank][j] = t.mul(m[rank][j], inv);
        }
        for r2 in 0..rows {
            if r2 != rank && m[r2][col] != 0 {
                let c = m[r2][col];
                for j in col..cols {
                    let v = t.mul(c, m[rank][j]);
                    m[r2][j] = t.sub(m[r2][j], v);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
