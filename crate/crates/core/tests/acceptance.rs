//! Acceptance suite: runs every criterion with exact arithmetic and prints
//! one PASS/FAIL line each. Exits nonzero if any fails.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cistab::alphadeg::{
    check_hypothesis, check_inequality, outside_lhs, quadric_equality_witness, theorem_fuzz, witness_outside_region,
    FuzzParams, KVector,
};
use cistab::geometry::{smoothness_check, CISystem, SmoothnessStatus, StrategyParams};
use cistab::grassmu::{
    choose_linearization, fano_implies_condition, is_ample, mu_grass, never_ample_check, normalize_equations,
    stability_condition, verify_normalization, CIPoint, Linearization,
};
use cistab::hilbmu::{
    asymptotic_coefficient, coefficient_of, ideal_piece, koszul_bound, koszul_polynomial, min_weight_basis,
};
use cistab::linalg::{forms_rank, row_reduce};
use cistab::weights::{alpha_degree, AlphaDegree, WeightVector};
use cistab::wlocus::{division_identity, w_membership, w_membership_direct};
use cistab::{Error, Field, HomogPolynomial};

struct Outcome {
    pass: bool,
    detail: String,
    millis: u128,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into(), millis: 0 }
}

fn timed(run: impl FnOnce() -> Outcome) -> Outcome {
    let t = Instant::now();
    let mut o = run();
    o.millis = t.elapsed().as_millis();
    o
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn f(p: u64) -> Field {
    Field::prime(p).unwrap()
}

fn finite(alpha: &WeightVector, p: &HomogPolynomial) -> i64 {
    match alpha_degree(alpha, p).unwrap() {
        AlphaDegree::Finite(a) => a,
        AlphaDegree::NegInfinity => panic!("zero form"),
    }
}

const CONFIGS: [(usize, &[u32]); 4] = [(3, &[3]), (3, &[2, 3]), (4, &[2, 2]), (4, &[2, 2, 2])];

fn fuzz_suite() -> Outcome {
    let mut smooth = 0;
    let mut checks = 0;
    let mut strict = 0;
    let mut normalizations = 0;
    let mut bad = Vec::new();
    let mut configs: Vec<(usize, Vec<u32>)> = CONFIGS.iter().map(|(n, d)| (*n, d.to_vec())).collect();
    // the excluded case, where equality is allowed
    configs.push((3, vec![2]));
    for p in [5, 7] {
        for (n, degrees) in &configs {
            let mut params = FuzzParams::new(f(p), *n, degrees.clone());
            params.height = 3;
            params.trials = 120;
            params.seed = 1000 + p;
            let s = theorem_fuzz(&params).unwrap();
            smooth += s.smooth;
            checks += s.inequality_checks;
            strict += s.strict_checks;
            normalizations += s.normalization_checks;
            for cx in &s.counterexamples {
                bad.push(format!("{:?} F{p} N={n} d={degrees:?} trial {} α={}", cx.kind, cx.trial, cx.alpha));
            }
        }
    }
    let pass = smooth >= 500 && bad.is_empty();
    outcome(
        pass,
        format!(
            "{smooth} smooth systems, {checks} inequality checks, {strict} strict checks, {normalizations} normalizations, {} violations{}",
            bad.len(),
            bad.first().map(|b| format!(" (first: {b})")).unwrap_or_default()
        ),
    )
}

fn k_grid(c: usize) -> Vec<KVector> {
    let values = [rat(1, 3), rat(1, 2), rat(1, 1), rat(3, 2), rat(2, 1), rat(3, 1), rat(5, 1), rat(9, 1)];
    let mut out = vec![Vec::new()];
    for _ in 0..c {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<BigRational>| {
                values.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(KVector).collect()
}

fn optimality_suite() -> Outcome {
    let st = StrategyParams::default();
    let mut checked = 0;
    let mut negatives = 0;
    let mut failures = Vec::new();
    for (n, degrees) in CONFIGS {
        let c = degrees.len();
        let grid = k_grid(c);
        for j in 1..=c {
            let w = match witness_outside_region(n, degrees, j, &f(7), 17, &st) {
                Ok(w) => w,
                Err(e) => {
                    failures.push(format!("N={n} d={degrees:?} j={j}: {e}"));
                    continue;
                }
            };
            for k in &grid {
                checked += 1;
                let lhs = check_inequality(k, &w.alpha, &w.system).unwrap().lhs;
                if lhs != outside_lhs(k, j, n) {
                    failures.push(format!("N={n} d={degrees:?} j={j} k={k}: lhs {lhs}"));
                }
                // when k_j is the coefficient violating the hypothesis, the witness for j goes negative
                let sum = k.sum();
                let violating = k.0[j - 1].clone() * BigInt::from(n as u64 + 1) < sum;
                if !check_hypothesis(k, n).unwrap().holds && violating {
                    negatives += 1;
                    if !lhs.is_negative() {
                        failures.push(format!("N={n} d={degrees:?} j={j} k={k}: lhs {lhs} not negative"));
                    }
                }
            }
        }
    }
    outcome(
        failures.is_empty() && negatives > 0,
        format!("{checked} exact evaluations, {negatives} outside the region, {} failures{}", failures.len(),
            failures.first().map(|x| format!(" (first: {x})")).unwrap_or_default()),
    )
}

fn quadric_suite() -> Outcome {
    let st = StrategyParams::default();
    let mut bad = Vec::new();
    for n in [2, 3, 4] {
        for p in [5, 7] {
            match quadric_equality_witness(n, &f(p), &st) {
                Ok(w) => {
                    let smooth = smoothness_check(&w.system, &st).unwrap().status == SmoothnessStatus::Smooth;
                    let deg = finite(&w.alpha, &w.system.equations()[0]);
                    if !smooth || deg != 0 {
                        bad.push(format!("N={n} F{p}: smooth={smooth} deg={deg}"));
                    }
                }
                Err(e) => bad.push(format!("N={n} F{p}: {e}")),
            }
        }
    }
    outcome(bad.is_empty(), format!("6 quadrics, {} failures {}", bad.len(), bad.join("; ")))
}

fn ample_suite() -> Outcome {
    let mut grid = 0;
    let mut mismatch = 0;
    for l1 in 0..25i64 {
        for l2 in 0..5i64 {
            for c in 2..6u64 {
                for d1 in 2..7u64 {
                    for d2 in d1 + 1..=8 {
                        grid += 1;
                        let expected = l2 > 0 && l1 as i128 > l2 as i128 * ((c as i128 - 1) * (d2 - d1) as i128 + 1);
                        if is_ample(Linearization::new(l1, l2), c, d1, d2).unwrap() != expected {
                            mismatch += 1;
                        }
                    }
                }
            }
        }
    }
    let instance = stability_condition(3, 2, 2, 3).unwrap();
    let mut chain = 0;
    let mut counter = 0;
    for n in 3..=12u64 {
        for c in 2..n {
            for d1 in 2..8u64 {
                for d2 in d1 + 1..=8 {
                    if fano_implies_condition(n, c, d1, d2).unwrap() {
                        chain += 1;
                        if !stability_condition(n, c, d1, d2).unwrap() {
                            counter += 1;
                        }
                    }
                }
            }
        }
    }
    outcome(
        grid >= 10_000 && mismatch == 0 && instance && counter == 0,
        format!("{grid} grid points, {mismatch} mismatches; condition(3,2,2,3) = {instance}; {chain} Fano cases, {counter} counterexamples"),
    )
}

fn discriminant_suite() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in 3..=8u64 {
        for d1 in 2..=6u64 {
            for d2 in d1 + 1..=6 {
                cases += 1;
                let d = never_ample_check(n, d1, d2).unwrap();
                if !(d.below_degree_ratio && d.degree_ratio_below_threshold && !d.ample) {
                    bad.push(format!("N={n} d=({d1},{d2}) class=({},{})", d.l1, d.l2));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{cases} cases, {} exceptions {}", bad.len(), bad.join("; ")))
}

fn hilbert_suite() -> Outcome {
    let shapes: [(usize, &[u32]); 4] = [(2, &[2]), (2, &[3]), (3, &[2, 2]), (3, &[2, 3])];
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut systems = 0;
    let mut comparisons = 0;
    let mut bad = Vec::new();
    while systems < 100 {
        let (n, degrees) = shapes[systems % shapes.len()];
        let eqs: Vec<_> = degrees.iter().map(|&d| HomogPolynomial::random(&f(5), n + 1, d, &mut rng)).collect();
        if eqs.iter().any(|e| e.is_zero()) {
            continue;
        }
        let sys = CISystem::new(eqs).unwrap();
        if degrees.windows(2).all(|w| w[0] == w[1]) && forms_rank(sys.equations()).unwrap() < degrees.len() {
            continue;
        }
        systems += 1;
        let alphas = WeightVector::enumerate(n + 1, 2);
        let alpha = &alphas[rng.gen_range(0..alphas.len())];
        let start = (degrees.iter().sum::<u32>() as i64 - n as i64).max(0) as u32;
        for l in start..=start + 4 {
            comparisons += 1;
            let mu = min_weight_basis(alpha, &ideal_piece(&sys, l).unwrap()).unwrap().mu;
            let bound = koszul_bound(alpha, &sys, l).unwrap().bound;
            if BigInt::from(mu) > bound {
                bad.push(format!("{} α={alpha} l={l}: mu {mu} > bound {bound}", sys.equations()[0]));
            }
        }
        let coeffs = koszul_polynomial(alpha, &sys).unwrap();
        let e = n - degrees.len() + 1;
        let lead = coefficient_of(&coeffs, e);
        let higher_vanish = (e + 1..coeffs.len()).all(|i| coefficient_of(&coeffs, i).is_zero());
        if lead != asymptotic_coefficient(alpha, &sys).unwrap() || !higher_vanish {
            bad.push(format!("α={alpha}: leading coefficient {lead}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{systems} systems, {comparisons} bound comparisons, {} failures {}", bad.len(), bad.first().cloned().unwrap_or_default()),
    )
}

/// Least total α-degree over all bases of the span of `basis`, by
/// enumerating every vector and every independent tuple.
fn brute_force_mu(field: &Field, alpha: &WeightVector, basis: &[HomogPolynomial]) -> i64 {
    let elems = field.elements().unwrap();
    let r = basis.len();
    let mut vectors: Vec<(HomogPolynomial, i64)> = Vec::new();
    let total = elems.len().pow(r as u32);
    for code in 1..total {
        let mut v = HomogPolynomial::zero(field, basis[0].nvars(), basis[0].degree());
        let mut c = code;
        for b in basis {
            v = v.add(&b.scale(&elems[c % elems.len()])).unwrap();
            c /= elems.len();
        }
        if !v.is_zero() {
            let d = finite(alpha, &v);
            vectors.push((v, d));
        }
    }
    vectors.sort_by_key(|(_, d)| *d);
    let mut best = i64::MAX;
    let idx: Vec<usize> = (0..vectors.len()).collect();
    combos(&idx, r, &mut Vec::new(), &mut |pick| {
        let s: i64 = pick.iter().map(|&i| vectors[i].1).sum();
        if s < best {
            let forms: Vec<_> = pick.iter().map(|&i| vectors[i].0.clone()).collect();
            if forms_rank(&forms).unwrap() == r {
                best = s;
            }
        }
    });
    best
}

fn combos(idx: &[usize], r: usize, cur: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if cur.len() == r {
        visit(cur);
        return;
    }
    let start = cur.last().map_or(0, |&l| l + 1);
    for i in start..idx.len() {
        cur.push(idx[i]);
        combos(idx, r, cur, visit);
        cur.pop();
    }
}

fn basis_oracle_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cases = 0;
    let mut bad = 0;
    for p in [2, 3] {
        let field = f(p);
        for _ in 0..40 {
            let dim = rng.gen_range(1..=3);
            let gens: Vec<_> = (0..dim).map(|_| HomogPolynomial::random(&field, 3, 2, &mut rng)).collect();
            let v = row_reduce(&gens, None).unwrap();
            if v.is_zero() {
                continue;
            }
            let alphas = WeightVector::enumerate(3, 3);
            let alpha = &alphas[rng.gen_range(0..alphas.len())];
            cases += 1;
            if min_weight_basis(alpha, &v).unwrap().mu != brute_force_mu(&field, alpha, &v.basis()) {
                bad += 1;
            }
        }
    }
    outcome(bad == 0 && cases > 0, format!("{cases} subspaces over F2/F3, {bad} mismatches"))
}

fn division_suite() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in 1..=2 {
        for d2 in 2..=4 {
            for d1 in 1..d2 {
                for j in 0..=d2 - d1 + 1 {
                    cases += 1;
                    let id = division_identity(n, d1, d2, j).unwrap();
                    if !id.verify().all_hold() {
                        bad.push(format!("N={n} d1={d1} d2={d2} j={j}: {:?}", id.verify()));
                    }
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{cases} identities, {} failures {}", bad.len(), bad.join("; ")))
}

fn membership_suite() -> Outcome {
    let field = f(3);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut configs = 0;
    let mut members = 0;
    let mut disagreements = 0;
    for n in 1..=3usize {
        for c in [2usize, 3] {
            configs += 1;
            let mut done = 0;
            while done < 1000 {
                let nvars = n + 1;
                let f1 = HomogPolynomial::random(&field, nvars, 2, &mut rng);
                let mut gs: Vec<_> = (1..c).map(|_| HomogPolynomial::random(&field, nvars, 3, &mut rng)).collect();
                if rng.gen_bool(0.3) {
                    // force a combination of the G_i into the ideal of F1
                    let lin = HomogPolynomial::random(&field, nvars, 1, &mut rng);
                    let mut g = f1.mul(&lin).unwrap();
                    for h in &gs[1..] {
                        g = g.add(&h.scale(&field.random(&mut rng))).unwrap();
                    }
                    gs[0] = g;
                }
                match w_membership(&f1, &gs) {
                    Ok(w) => {
                        done += 1;
                        members += w.in_w as u32;
                        let direct = w_membership_direct(&f1, &gs).unwrap();
                        if w.in_w != direct || w.in_w != field.is_zero(&w.det_value) {
                            disagreements += 1;
                        }
                    }
                    Err(Error::Unsupported(_)) | Err(Error::ZeroPolynomial) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
    outcome(
        disagreements == 0,
        format!("{configs} configurations x 1000 samples, {members} in W, {disagreements} disagreements"),
    )
}

/// Smooth `(3, 2, (2, 3))` points, seeded.
fn smooth_points(count: usize, seed: u64) -> Vec<CIPoint> {
    let st = StrategyParams::default();
    let field = f(5);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let f1 = HomogPolynomial::random(&field, 4, 2, &mut rng);
        let f2 = HomogPolynomial::random(&field, 4, 3, &mut rng);
        let Ok(p) = CIPoint::new(f1.clone(), vec![f2.clone()]) else { continue };
        let sys = CISystem::new(vec![f1, f2]).unwrap();
        if smoothness_check(&sys, &st).unwrap().status == SmoothnessStatus::Smooth {
            out.push(p);
        }
    }
    out
}

fn rerepresent(p: &CIPoint, rng: &mut ChaCha8Rng) -> CIPoint {
    let field = p.f1().field().clone();
    let f1 = p.f1().scale(&field.random_nonzero(rng));
    let lin = HomogPolynomial::random(&field, p.nvars(), p.d2() - p.d1(), rng);
    let g = p.fs()[0].scale(&field.random_nonzero(rng)).add(&p.f1().mul(&lin).unwrap()).unwrap();
    CIPoint::new(f1, vec![g]).unwrap()
}

fn normalization_suite(points: &[CIPoint], fuzz_normalizations: &Outcome) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let alphas = WeightVector::enumerate(4, 3);
    let l = Linearization::new(8, 2);
    let mut postconditions = 0;
    let mut reps = 0;
    let mut bad = 0;
    for p in points {
        for alpha in &alphas {
            postconditions += 1;
            let normal = normalize_equations(alpha, p).unwrap();
            if !verify_normalization(alpha, p, &normal).unwrap().all_hold() {
                bad += 1;
            }
        }
        for _ in 0..100 {
            reps += 1;
            let q = rerepresent(p, &mut rng);
            let alpha = &alphas[rng.gen_range(0..alphas.len())];
            if !q.same_point(p).unwrap() || mu_grass(alpha, &q, l).unwrap() != mu_grass(alpha, p, l).unwrap() {
                bad += 1;
            }
        }
    }
    outcome(
        bad == 0 && fuzz_normalizations.pass,
        format!(
            "{postconditions} normalizations on smooth points, {reps} re-representations, {bad} failures; fuzz suite: {}",
            if fuzz_normalizations.pass { "clean" } else { "see criterion 1" }
        ),
    )
}

fn stability_suite(points: &[CIPoint]) -> Outcome {
    let choice = choose_linearization(3, 2, 2, 3, None).unwrap();
    let l = choice.linearization;
    let alphas = WeightVector::enumerate(4, 3);
    let mut evaluations = 0;
    let mut bad = Vec::new();
    for p in points {
        for alpha in &alphas {
            evaluations += 1;
            let mu = mu_grass(alpha, p, l).unwrap();
            if mu <= 0 {
                bad.push(format!("α={alpha} mu={mu}"));
            }
        }
    }
    outcome(
        bad.is_empty() && choice.all_hold() && points.len() >= 100,
        format!(
            "L = {l} (k = {}), {} smooth points x {} weights = {evaluations} values, {} non-positive",
            choice.k,
            points.len(),
            alphas.len(),
            bad.len()
        ),
    )
}

fn main() {
    let start = Instant::now();
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    let fuzz = timed(fuzz_suite);
    let fuzz_normal = outcome(fuzz.pass, "");
    results.push((1, "alpha-degree inequality fuzz", fuzz));
    results.push((2, "optimality of the hypothesis", timed(optimality_suite)));
    results.push((3, "quadric equality case", timed(quadric_suite)));
    results.push((4, "ample cone and stability condition", timed(ample_suite)));
    results.push((5, "discriminant class never ample", timed(discriminant_suite)));
    results.push((6, "Hilbert mu bound and asymptotics", timed(hilbert_suite)));
    results.push((7, "minimum-weight basis oracle", timed(basis_oracle_suite)));
    results.push((8, "division identity", timed(division_suite)));
    results.push((9, "W membership oracle", timed(membership_suite)));
    let points = smooth_points(100, 11);
    results.push((10, "normalization", timed(|| normalization_suite(&points, &fuzz_normal))));
    results.push((11, "positivity of mu on smooth points", timed(|| stability_suite(&points))));
    results.sort_by_key(|r| r.0);

    let mut failed = 0;
    for (i, name, o) in &results {
        if !o.pass {
            failed += 1;
        }
        println!("criterion {i:>2} [{}] {name}: {} ({} ms)", if o.pass { "PASS" } else { "FAIL" }, o.detail.trim_end(), o.millis);
    }
    println!("acceptance: {} of {} criteria pass in {} ms", results.len() - failed, results.len(), start.elapsed().as_millis());
    if failed > 0 {
        std::process::exit(1);
    }
}
