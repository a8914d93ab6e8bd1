use cistab::geometry::{singular_section_dimension, CISystem, StrategyParams};
use cistab::grassmu::{
    choose_linearization, is_ample, mu_grass, normalize_equations, verify_normalization, CIPoint, Linearization,
};
use cistab::hilbmu::{ideal_piece, koszul_bound, min_weight_basis};
use cistab::linalg::row_reduce;
use cistab::weights::{
    alpha_degree, leading_form, lemma_chain, profile_is_consistent, singdeg_predicate, singularity_profile,
    AlphaDegree, WeightVector,
};
use cistab::wlocus::{w_membership, w_membership_direct};
use cistab::{Error, Field, HomogPolynomial};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn field(p: u64) -> Field {
    if p == 0 {
        Field::rationals()
    } else {
        Field::prime(p).unwrap()
    }
}

fn any_alpha(len: usize, height: i64, pick: usize) -> WeightVector {
    let all = WeightVector::enumerate(len, height);
    all[pick % all.len()].clone()
}

fn nonzero(field: &Field, nvars: usize, d: u32, r: &mut ChaCha8Rng) -> HomogPolynomial {
    loop {
        let f = HomogPolynomial::random(field, nvars, d, r);
        if !f.is_zero() {
            return f;
        }
    }
}

/// A point `(F1, F2..Fc)` with `F2..Fc` independent modulo `F1`.
fn ci_point(field: &Field, nvars: usize, c: usize, d1: u32, d2: u32, r: &mut ChaCha8Rng) -> CIPoint {
    loop {
        let f1 = nonzero(field, nvars, d1, r);
        let fs = (1..c).map(|_| HomogPolynomial::random(field, nvars, d2, r)).collect();
        if let Ok(p) = CIPoint::new(f1, fs) {
            return p;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_relation(seed: u64, p in prop::sample::select(vec![0u64, 7, 11]), nvars in 2usize..4, d in 1u32..4) {
        let f = field(p);
        let poly = HomogPolynomial::random(&f, nvars, d, &mut rng(seed));
        let mut sum = HomogPolynomial::zero(&f, nvars, d);
        for i in 0..nvars {
            let xi = HomogPolynomial::variable(&f, nvars, i);
            sum = sum.add(&xi.mul(&poly.derivative(i).unwrap()).unwrap()).unwrap();
        }
        prop_assert_eq!(sum, poly.scale(&f.from_i64(d as i64)));
    }

    #[test]
    fn print_then_parse(seed: u64, p in prop::sample::select(vec![0u64, 5, 13]), nvars in 1usize..5, d in 0u32..4) {
        let f = field(p);
        let poly = HomogPolynomial::random(&f, nvars, d, &mut rng(seed));
        if !poly.is_zero() {
            let back = HomogPolynomial::parse(&poly.to_string(), nvars, &f).unwrap();
            prop_assert_eq!(back, poly);
        }
    }

    #[test]
    fn row_reduce_is_idempotent(seed: u64, count in 1usize..6) {
        let f = field(5);
        let mut r = rng(seed);
        let polys: Vec<_> = (0..count).map(|_| HomogPolynomial::random(&f, 3, 2, &mut r)).collect();
        let once = row_reduce(&polys, None).unwrap();
        let twice = row_reduce(&once.basis(), None).unwrap();
        prop_assert!(once.is_reduced());
        prop_assert_eq!(once.rows(), twice.rows());
        prop_assert_eq!(once.pivots(), twice.pivots());
        for p in &polys {
            prop_assert!(once.contains(p).unwrap());
        }
    }

    #[test]
    fn alpha_degree_is_multiplicative(seed: u64, p in prop::sample::select(vec![0u64, 3, 7]), pick: usize, d1 in 1u32..4, d2 in 1u32..4) {
        let f = field(p);
        let mut r = rng(seed);
        let a = nonzero(&f, 4, d1, &mut r);
        let b = nonzero(&f, 4, d2, &mut r);
        let alpha = any_alpha(4, 3, pick);
        let (da, db) = (alpha_degree(&alpha, &a).unwrap(), alpha_degree(&alpha, &b).unwrap());
        let prod = a.mul(&b).unwrap();
        match (da, db) {
            (AlphaDegree::Finite(x), AlphaDegree::Finite(y)) => {
                prop_assert_eq!(alpha_degree(&alpha, &prod).unwrap(), AlphaDegree::Finite(x + y));
            }
            _ => prop_assert!(false, "nonzero forms have finite degree"),
        }
        let lead = leading_form(&alpha, &a).unwrap().mul(&leading_form(&alpha, &b).unwrap()).unwrap();
        prop_assert_eq!(leading_form(&alpha, &prod).unwrap(), lead);
        let s = f.from_i64(2);
        prop_assert_eq!(alpha_degree(&alpha, &a.scale(&s)).unwrap(), da);
    }

    #[test]
    fn profiles_are_consistent_and_bounds_hold(seed: u64, pick: usize, nvars in 3usize..6, d in 2u32..5, sparse: bool) {
        let f = field(7);
        let mut r = rng(seed);
        let alpha = any_alpha(nvars, 3, pick);
        let poly = if sparse {
            // a few monomials, so low α-degrees and s(F) >= 0 show up
            let mons = cistab::poly::monomials(nvars, d);
            let support: Vec<_> = (0..3).map(|_| mons[r.gen_range(0..mons.len())].clone()).collect();
            HomogPolynomial::random_supported(&f, nvars, d, &support, &mut r)
        } else {
            HomogPolynomial::random(&f, nvars, d, &mut r)
        };
        if !poly.is_zero() {
            let prof = singularity_profile(&alpha, &poly).unwrap();
            prop_assert!(profile_is_consistent(&alpha, &prof));
            prop_assert!(lemma_chain(&alpha, &prof).all_hold());
            let n = nvars as i64 - 1;
            for (t, &v) in prof.v.iter().enumerate() {
                prop_assert!(2 * v as i64 >= n + prof.s - 2 * t as i64);
                if t > 0 {
                    prop_assert!(prof.v[t - 1] > v);
                }
            }
        }
    }

    #[test]
    fn normalization_postconditions_and_mu_invariance(seed: u64, pick: usize, c in 2usize..4, l1 in 1i64..20, l2 in 1i64..20) {
        let f = field(5);
        let mut r = rng(seed);
        let p = ci_point(&f, 4, c, 2, 3, &mut r);
        let alpha = any_alpha(4, 3, pick);
        let normal = normalize_equations(&alpha, &p).unwrap();
        prop_assert!(verify_normalization(&alpha, &p, &normal).unwrap().all_hold());
        let l = Linearization::new(l1, l2);
        let mu = mu_grass(&alpha, &p, l).unwrap();

        // another basis of the same point: rescale F1, mix the others and add multiples of F1
        let f1 = p.f1().scale(&f.random_nonzero(&mut r));
        let mut fs = Vec::new();
        for i in 0..c - 1 {
            let mut g = p.fs()[i].scale(&f.random_nonzero(&mut r));
            for (j, h) in p.fs().iter().enumerate() {
                if j > i {
                    g = g.add(&h.scale(&f.random(&mut r))).unwrap();
                }
            }
            let lin = HomogPolynomial::random(&f, 4, 1, &mut r);
            fs.push(g.add(&p.f1().mul(&lin).unwrap()).unwrap());
        }
        let q = CIPoint::new(f1, fs).unwrap();
        prop_assert!(q.same_point(&p).unwrap());
        prop_assert_eq!(mu_grass(&alpha, &q, l).unwrap(), mu);
    }

    #[test]
    fn mu_scales_with_alpha(seed: u64, pick: usize, m in 1i64..5) {
        let f = field(5);
        let p = ci_point(&f, 4, 2, 2, 3, &mut rng(seed));
        let alpha = any_alpha(4, 2, pick);
        let l = Linearization::new(8, 2);
        prop_assert_eq!(
            mu_grass(&alpha.scaled(m).unwrap(), &p, l).unwrap(),
            m * mu_grass(&alpha, &p, l).unwrap()
        );
    }

    #[test]
    fn ample_matches_inequality(l1 in -50i64..200, l2 in -5i64..20, c in 2u64..5, d1 in 2u64..5, extra in 1u64..4) {
        let d2 = d1 + extra;
        let expected = l2 > 0 && l1 > l2 * ((c as i64 - 1) * (d2 - d1) as i64 + 1);
        prop_assert_eq!(is_ample(Linearization::new(l1, l2), c, d1, d2).unwrap(), expected);
    }

    #[test]
    fn least_k_is_least(n in 3u64..10, c in 2u64..9, d1 in 2u64..6, extra in 1u64..5) {
        prop_assume!(c < n);
        let d2 = d1 + extra;
        let choice = choose_linearization(n, c, d1, d2, None).unwrap();
        if let Some(k) = choice.least_k {
            prop_assert!(choice.all_hold());
            if k > 1 {
                prop_assert!(!choose_linearization(n, c, d1, d2, Some(k - 1)).unwrap().all_hold());
            }
            prop_assert!(choose_linearization(n, c, d1, d2, Some(k + 7)).unwrap().all_hold() || !choice.failing_in_limit.is_empty());
        } else {
            for k in 1..50 {
                prop_assert!(!choose_linearization(n, c, d1, d2, Some(k)).unwrap().all_hold());
            }
        }
    }

    #[test]
    fn w_membership_matches_spans(seed: u64, c in 2usize..4, nvars in 2usize..4) {
        let f = field(3);
        let mut r = rng(seed);
        let f1 = nonzero(&f, nvars, 2, &mut r);
        let gs: Vec<_> = (1..c).map(|_| HomogPolynomial::random(&f, nvars, 3, &mut r)).collect();
        match w_membership(&f1, &gs) {
            Ok(w) => {
                prop_assert_eq!(w.in_w, w_membership_direct(&f1, &gs).unwrap());
                prop_assert_eq!(w.in_w, f.is_zero(&w.det_value));
            }
            Err(Error::Unsupported(_)) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn koszul_bound_dominates(seed: u64, pick: usize, extra in 0u32..3) {
        let f = field(5);
        let mut r = rng(seed);
        let sys = CISystem::new(vec![nonzero(&f, 4, 2, &mut r), nonzero(&f, 4, 2, &mut r)]).unwrap();
        let alpha = any_alpha(4, 2, pick);
        let l = 1 + extra; // Σd - N = 1
        let piece = ideal_piece(&sys, l).unwrap();
        let mu = min_weight_basis(&alpha, &piece).unwrap().mu;
        prop_assert!(num_bigint::BigInt::from(mu) <= koszul_bound(&alpha, &sys, l).unwrap().bound);
    }

    #[test]
    fn singular_dimension_bound_agrees(seed: u64, pick: usize) {
        let f = field(5);
        let mut r = rng(seed);
        let alpha = any_alpha(3, 2, pick);
        let mons = cistab::poly::monomials(3, 2);
        let support: Vec<_> = (0..2).map(|_| mons[r.gen_range(0..mons.len())].clone()).collect();
        let poly = HomogPolynomial::random_supported(&f, 3, 2, &support, &mut r);
        prop_assume!(!poly.is_zero());
        let sys = CISystem::new(vec![poly.clone()]).unwrap();
        let st = StrategyParams::default();
        for s in 0..2usize {
            for v in 0..=2 - s {
                let u = 2 - s - v;
                if singdeg_predicate(&alpha, &poly, u, v, s).unwrap() {
                    prop_assert!(singular_section_dimension(&sys, v, &st).unwrap() >= s as i64);
                }
            }
        }
    }
}
