//! Emptiness of projective zero loci over the algebraic closure, decided by
//! ranks of Macaulay matrices.
//!
//! A homogeneous ideal `I = (g_1, ..., g_m)` in `n + 1` variables has no
//! projective zero iff `I_D` is the whole degree-`D` piece for some `D`,
//! and then this already happens at
//! `D = Σ_{j <= n+1} (e_j - 1) + 1` where `e_1 >= e_2 >= ...` are the
//! generator degrees. Ranks do not change under field extension, so the
//! computation over the coefficient field speaks for its closure.

use std::collections::HashMap;

use crate::error::Result;
use crate::field::{Embedding, Field, Scalar, TableField};
use crate::linalg::{Arith, Echelon, PrimeArith};
use crate::poly::{count_monomials, monomials, HomogPolynomial, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emptiness {
    /// The ideal contains every form of this degree.
    Empty { degree: u32 },
    /// Certified nonempty: rank deficiency at the Macaulay bound, or fewer
    /// equations than variables.
    Nonempty,
    /// Column cap or degree bound reached first.
    Unknown,
}

/// Budget knobs for [`emptiness`].
#[derive(Clone, Copy, Debug)]
pub struct CertificateLimits {
    pub degree_bound: u32,
    pub column_cap: u64,
}

/// The Macaulay bound for the given generator degrees and variable count.
pub fn macaulay_bound(degrees: &[u32], nvars: usize) -> Option<u32> {
    let mut ds = degrees.to_vec();
    ds.sort_unstable_by(|a, b| b.cmp(a));
    if ds.len() < nvars {
        return None;
    }
    Some(ds[..nvars].iter().map(|d| d.saturating_sub(1)).sum::<u32>() + 1)
}

/// Arithmetic used for elimination over a finite field.
pub(crate) enum Elim {
    Prime(PrimeArith),
    Table(Box<TableField>, Embedding),
    Generic(Field),
}

impl Elim {
    pub(crate) fn for_field(field: &Field) -> Result<Elim> {
        if field.is_prime_field() {
            return Ok(Elim::Prime(PrimeArith::new(field.characteristic())));
        }
        if let Some(q) = field.order() {
            if q <= 1 << 16 {
                let t = TableField::new(field.characteristic(), field.degree())?;
                let e = t.embedding(field)?;
                return Ok(Elim::Table(Box::new(t), e));
            }
        }
        Ok(Elim::Generic(field.clone()))
    }
}

/// Whether the ideal generated by `gens` contains all forms of degree `d`.
pub(crate) fn contains_full_degree(elim: &Elim, gens: &[HomogPolynomial], nvars: usize, d: u32) -> bool {
    match elim {
        Elim::Prime(a) => full_rank(a, modular, gens, nvars, d),
        Elim::Table(t, e) => full_rank(t.as_ref(), |s| e.map(t, s), gens, nvars, d),
        Elim::Generic(f) => full_rank(f, |s| s.clone(), gens, nvars, d),
    }
}

fn modular(s: &Scalar) -> u64 {
    match s {
        Scalar::Modular(v) => *v,
        _ => unreachable!("prime-field scalar expected"),
    }
}

fn full_rank<A: Arith>(
    arith: &A,
    conv: impl Fn(&Scalar) -> A::E,
    gens: &[HomogPolynomial],
    nvars: usize,
    d: u32,
) -> bool {
    let cols = monomials(nvars, d);
    let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut ech = Echelon::new(arith, cols.len());
    let mut usable: Vec<&HomogPolynomial> = gens.iter().filter(|g| !g.is_zero() && g.degree() <= d).collect();
    usable.sort_by_key(|g| std::cmp::Reverse(g.degree()));
    for g in usable {
        let coeffs: Vec<(&Monomial, A::E)> = g.terms().map(|(m, c)| (m, conv(c))).collect();
        for mult in monomials(nvars, d - g.degree()) {
            let mut row = vec![arith.zero(); cols.len()];
            for (m, c) in &coeffs {
                row[index[&m.mul(&mult)]] = c.clone();
            }
            ech.insert(row);
            if ech.is_full() {
                return true;
            }
        }
    }
    ech.is_full()
}

/// Decides whether `gens` have a common projective zero over the algebraic
/// closure, within the given limits.
pub fn emptiness(gens: &[HomogPolynomial], nvars: usize, limits: CertificateLimits) -> Result<Emptiness> {
    let gens: Vec<HomogPolynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.iter().any(|g| g.degree() == 0) {
        // a nonzero constant
        return Ok(Emptiness::Empty { degree: 0 });
    }
    if gens.len() < nvars {
        return Ok(Emptiness::Nonempty);
    }
    let field = gens[0].field().clone();
    let elim = Elim::for_field(&field)?;
    let degrees: Vec<u32> = gens.iter().map(|g| g.degree()).collect();
    let mac = macaulay_bound(&degrees, nvars).expect("enough generators");
    let start = *degrees.iter().min().expect("nonempty");
    let top = limits.degree_bound.min(mac);
    for d in start..=top {
        if count_monomials(nvars, d) > limits.column_cap {
            return Ok(Emptiness::Unknown);
        }
        if contains_full_degree(&elim, &gens, nvars, d) {
            return Ok(Emptiness::Empty { degree: d });
        }
    }
    if top == mac {
        return Ok(Emptiness::Nonempty);
    }
    // the bound stopped us early; a single test at the Macaulay degree still
    // settles the question when it fits
    if count_monomials(nvars, mac) <= limits.column_cap {
        if contains_full_degree(&elim, &gens, nvars, mac) {
            return Ok(Emptiness::Empty { degree: mac });
        }
        return Ok(Emptiness::Nonempty);
    }
    Ok(Emptiness::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(texts: &[&str], n: usize, f: &Field) -> Vec<HomogPolynomial> {
        texts.iter().map(|t| HomogPolynomial::parse(t, n, f).unwrap()).collect()
    }

    const LIM: CertificateLimits = CertificateLimits { degree_bound: 20, column_cap: 5000 };

    #[test]
    fn coordinate_powers_are_empty() {
        let f = Field::prime(5).unwrap();
        let g = ps(&["x0^2", "x1^3", "x2^2"], 3, &f);
        assert_eq!(macaulay_bound(&[2, 3, 2], 3), Some(5));
        assert_eq!(emptiness(&g, 3, LIM).unwrap(), Emptiness::Empty { degree: 5 });
    }

    #[test]
    fn common_zero_is_detected() {
        let f = Field::prime(7).unwrap();
        // [0:0:1] is a common zero
        let g = ps(&["x0^2", "x0*x1", "x1^2 + x0*x2"], 3, &f);
        assert_eq!(emptiness(&g, 3, LIM).unwrap(), Emptiness::Nonempty);
        // fewer equations than variables
        assert_eq!(emptiness(&g[..2], 3, LIM).unwrap(), Emptiness::Nonempty);
    }

    #[test]
    fn zero_only_over_an_extension() {
        // x0^2 + x1^2 = 0 has no root in F_3 but does in F_9
        let f = Field::prime(3).unwrap();
        let g = ps(&["x0^2 + x1^2", "x2^2", "x0*x2"], 3, &f);
        assert_eq!(emptiness(&g, 3, LIM).unwrap(), Emptiness::Nonempty);
        let g = ps(&["x0^2 + x1^2", "x0*x1", "x2"], 3, &f);
        assert!(matches!(emptiness(&g, 3, LIM).unwrap(), Emptiness::Empty { .. }));
    }
}
