use std::io::Write;
use std::path::Path;

use cistab::alphadeg::{
    check_hypothesis, check_inequality, outside_lhs, quadric_equality_witness, theorem_fuzz, witness_outside_region,
    FuzzParams, KVector,
};
use cistab::geometry::{
    is_complete_intersection, smoothness_check, CISystem, Decider, SmoothnessStatus, StrategyParams, Tri,
};
use cistab::grassmu::{
    choose_linearization, find_destabilizer, is_ample, mu_grass, never_ample_check, normalize_equations,
    stability_condition, ample_threshold, CIPoint, Destabilizer, Linearization,
};
use cistab::hilbmu::{
    asymptotic_coefficient, hilbert_necessary_check, ideal_piece, koszul_bound, min_weight_basis, HilbertVerdict,
};
use cistab::weights::{alpha_degree, SearchParams, WeightVector};
use cistab::wlocus::{division_identity, w_membership, w_membership_direct};
use cistab::Field;

use crate::error::{CliError, CliResult};
use crate::input::{read_system, SystemFile};
use crate::output::Record;
use crate::{AlphadegCommand, Cli, Command, Global, WitnessMode};

fn strategy(g: &Global) -> StrategyParams {
    StrategyParams {
        max_extension: g.max_extension,
        degree_bound: g.degree_bound,
        seed: g.seed,
        prime: g.prime,
        ..StrategyParams::default()
    }
}

fn system(g: &Global, path: &Path) -> CliResult<(SystemFile, CISystem)> {
    let file = read_system(path, g.field.as_deref())?;
    let sys = CISystem::new(file.forms.clone())?;
    Ok((file, sys))
}

fn point(g: &Global, path: &Path) -> CliResult<CIPoint> {
    let file = read_system(path, g.field.as_deref())?;
    let mut forms = file.forms.into_iter();
    let f1 = forms.next().expect("nonempty");
    Ok(CIPoint::new(f1, forms.collect())?)
}

fn weight(text: &str) -> CliResult<WeightVector> {
    Ok(text.parse::<WeightVector>()?)
}

fn finite_field(g: &Global) -> CliResult<Field> {
    Ok(Field::parse(g.field.as_deref().unwrap_or("F5"))?)
}

fn degrees(text: &str) -> CliResult<Vec<u32>> {
    text.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| CliError::Input(format!("`{}` is not a degree", t.trim()))))
        .collect()
}

fn tri(t: Tri) -> &'static str {
    match t {
        Tri::True => "true",
        Tri::False => "false",
        Tri::Undetermined => "undetermined",
    }
}

fn status(s: SmoothnessStatus) -> &'static str {
    match s {
        SmoothnessStatus::Smooth => "smooth",
        SmoothnessStatus::Singular => "singular",
        SmoothnessStatus::Undetermined => "undetermined",
    }
}

fn decider(d: &Decider) -> String {
    match d {
        Decider::Enumeration { k } => format!("enumeration k={k}"),
        Decider::Certificate { degree } => format!("certificate D={degree}"),
        Decider::None => "none".into(),
    }
}

/// Runs one command, returning the exit code.
pub fn run(cli: &Cli, out: &mut impl Write) -> CliResult<i32> {
    let g = &cli.global;
    let m = g.machine;
    let mut code = 0;
    let records = match &cli.command {
        Command::Parse { file } => {
            let (f, sys) = system(g, file)?;
            vec![Record::new("parse")
                .put("N", f.n)
                .put("field", f.field.to_string())
                .put("c", sys.codimension())
                .put("degrees", sys.degrees())
                .list("equation", sys.equations())]
        }
        Command::Smooth { file } => {
            let (_, sys) = system(g, file)?;
            let v = smoothness_check(&sys, &strategy(g))?;
            vec![Record::new("smooth")
                .put("status", status(v.status))
                .put("decided_by", decider(&v.report.decided_by))
                .put("witness", v.witness.as_ref().map(|w| w.format()))
                .put("field", v.report.field.clone())
                .put("reduced_mod", v.report.reduced_mod)
                .put("searched", v.report.searched.clone())
                .put("skipped", v.report.skipped.clone())]
        }
        Command::CiCheck { file } => {
            let (_, sys) = system(g, file)?;
            let t = is_complete_intersection(&sys, &strategy(g))?;
            vec![Record::new("ci-check").put("complete_intersection", tri(t))]
        }
        Command::MuGrass { alpha, l1, l2, file } => {
            let a = weight(alpha)?;
            let p = point(g, file)?;
            let l = Linearization::new(*l1, *l2);
            let mu = mu_grass(&a, &p, l)?;
            let normal = normalize_equations(&a, &p)?;
            vec![Record::new("mu-grass")
                .put("alpha", a.to_string())
                .put("linearization", l.to_string())
                .exact("mu", mu)
                .list("normalized", normal.equations())]
        }
        Command::Ample { c, d1, d2, l1, l2 } => {
            let ample = is_ample(Linearization::new(*l1, *l2), *c, *d1, *d2)?;
            vec![Record::new("ample").put("ample", ample).exact("threshold", ample_threshold(*c, *d1, *d2))]
        }
        Command::StabCond { n, c, d1, d2, k } => {
            let cond = stability_condition(*n, *c, *d1, *d2)?;
            let choice = choose_linearization(*n, *c, *d1, *d2, *k)?;
            let mut r = Record::new("stab-cond")
                .put("condition", cond)
                .put("k", choice.k)
                .put("linearization", choice.linearization.to_string())
                .put("all_hold", choice.all_hold());
            for (req, ok) in &choice.holds {
                r = r.put(req.name(), *ok);
            }
            vec![r
                .put("least_k", choice.least_k)
                .list("failing_in_limit", choice.failing_in_limit.iter().map(|q| q.name()))]
        }
        Command::DiscrC2 { n, d1, d2 } => {
            let d = never_ample_check(*n, *d1, *d2)?;
            vec![Record::new("discr-c2")
                .exact("l1", &d.l1)
                .exact("l2", &d.l2)
                .put("below_degree_ratio", d.below_degree_ratio)
                .put("degree_ratio_below_threshold", d.degree_ratio_below_threshold)
                .put("ample", d.ample)]
        }
        Command::Destab { height, l1, l2, budget, file } => {
            let p = point(g, file)?;
            let params = SearchParams { height: *height, max_evaluations: *budget };
            let r = Record::new("destab");
            vec![match find_destabilizer(&p, Linearization::new(*l1, *l2), &params)? {
                Destabilizer::Found { alpha, mu } => {
                    r.put("verdict", "destabilized").put("alpha", alpha.to_string()).exact("mu", mu)
                }
                Destabilizer::Exhausted { tested } => r.put("verdict", "none_found").put("tested", tested),
                Destabilizer::BudgetExhausted { tested } => {
                    code = 3;
                    r.put("verdict", "budget_exhausted").put("tested", tested)
                }
            }]
        }
        Command::HilbMu { alpha, l, file } => {
            let a = weight(alpha)?;
            let (_, sys) = system(g, file)?;
            let piece = ideal_piece(&sys, *l)?;
            let basis = min_weight_basis(&a, &piece)?;
            let bound = koszul_bound(&a, &sys, *l)?;
            vec![Record::new("hilb-mu")
                .put("alpha", a.to_string())
                .put("l", *l)
                .put("dimension", piece.rank())
                .exact("mu", basis.mu)
                .exact("bound", &bound.bound)
                .put("large_l", bound.large_l)
                .exact("asymptotic_coefficient", asymptotic_coefficient(&a, &sys)?)]
        }
        Command::HilbCheck { height, budget, file } => {
            let (_, sys) = system(g, file)?;
            let params = SearchParams { height: *height, max_evaluations: *budget };
            let r = Record::new("hilb-check");
            vec![match hilbert_necessary_check(&sys, &params)? {
                HilbertVerdict::Violated { weights, lhs } => r
                    .put("verdict", "violated")
                    .put("weights", weights.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(","))
                    .exact("lhs", lhs),
                HilbertVerdict::Consistent { tested } => r.put("verdict", "consistent").put("tested", tested),
                HilbertVerdict::BudgetExhausted { tested } => {
                    code = 3;
                    r.put("verdict", "budget_exhausted").put("tested", tested)
                }
            }]
        }
        Command::Alphadeg { command } => alphadeg(g, command)?,
        Command::Division { n, d1, d2, j, print } => {
            let d = division_identity(*n, *d1, *d2, *j)?;
            let check = d.verify();
            let mut r = Record::new("division")
                .put("N", *n)
                .put("d1", *d1)
                .put("d2", *d2)
                .put("j", *j)
                .put("identity", check.identity)
                .put("tridegrees", check.tridegrees)
                .put("x0_excluded", check.x0_excluded)
                .put("divisible", check.divisible)
                .put("q_terms", d.q.len())
                .put("r_terms", d.r.len());
            if *print {
                r = r.exact("q", &d.q).exact("r", &d.r);
            }
            vec![r]
        }
        Command::WMember { file } => {
            let f = read_system(file, g.field.as_deref())?;
            let (f1, gs) = f.forms.split_first().expect("nonempty");
            if gs.is_empty() {
                return Err(CliError::Input("w-member needs F1 followed by at least one G".into()));
            }
            let w = w_membership(f1, gs)?;
            let direct = w_membership_direct(f1, gs)?;
            vec![Record::new("w-member")
                .put("in_w", w.in_w)
                .put("det", f.field.format(&w.det_value))
                .put("coordinate", w.coordinate)
                .list("columns", &w.columns)
                .put("direct", direct)]
        }
    };
    for r in records {
        r.write(m, out)?;
    }
    Ok(code)
}

fn alphadeg(g: &Global, cmd: &AlphadegCommand) -> CliResult<Vec<Record>> {
    Ok(match cmd {
        AlphadegCommand::Check { k, alpha, file } => {
            let k: KVector = k.parse()?;
            let a = weight(alpha)?;
            let (f, sys) = system(g, file)?;
            let hyp = check_hypothesis(&k, f.n)?;
            let rep = check_inequality(&k, &a, &sys)?;
            vec![Record::new("alphadeg-check")
                .put("k", k.to_string())
                .put("alpha", a.to_string())
                .put("hypothesis", hyp.holds)
                .put("strict_hypothesis", hyp.strict)
                .list("alpha_degrees", rep.per_equation.iter().map(|(a, _)| a))
                .exact("lhs", &rep.lhs)
                .put("satisfied", rep.satisfied)
                .put("strict", rep.strict)]
        }
        AlphadegCommand::Witness { mode, n, c, degrees: degs, j, k } => {
            let field = Field::parse(g.field.as_deref().unwrap_or("F7"))?;
            let st = strategy(g);
            let (w, j) = match mode {
                WitnessMode::Outside => {
                    let degs = degrees(degs.as_deref().ok_or_else(|| CliError::Input("--degrees is required".into()))?)?;
                    if let Some(c) = c {
                        if *c != degs.len() {
                            return Err(CliError::Input(format!("--c {c} but {} degrees given", degs.len())));
                        }
                    }
                    let j = j.ok_or_else(|| CliError::Input("--j is required".into()))?;
                    (witness_outside_region(*n, &degs, j, &field, g.seed, &st)?, Some(j))
                }
                WitnessMode::Quadric => (quadric_equality_witness(*n, &field, &st)?, None),
            };
            let degs: Vec<i64> = w
                .system
                .equations()
                .iter()
                .map(|f| alpha_degree(&w.alpha, f).ok().and_then(|d| d.finite()).unwrap_or(i64::MIN))
                .collect();
            let mut r = Record::new("alphadeg-witness")
                .put("mode", if j.is_some() { "outside" } else { "quadric" })
                .put("field", field.to_string())
                .put("seed", w.seed)
                .put("attempts", w.attempts)
                .put("alpha", w.alpha.to_string())
                .put("alpha_degrees", degs)
                .list("equation", w.system.equations());
            if let Some(k) = k {
                let k: KVector = k.parse()?;
                let hyp = check_hypothesis(&k, *n)?;
                let rep = check_inequality(&k, &w.alpha, &w.system)?;
                r = r.put("k", k.to_string()).put("hypothesis", hyp.holds).exact("lhs", &rep.lhs);
                if let Some(j) = j {
                    r = r.exact("predicted_lhs", outside_lhs(&k, j, *n));
                }
            }
            vec![r]
        }
        AlphadegCommand::Fuzz { n, degrees: degs, trials, height } => {
            let mut p = FuzzParams::new(finite_field(g)?, *n, degrees(degs)?);
            p.trials = *trials;
            p.height = *height;
            p.seed = g.seed;
            p.strategy = strategy(g);
            let s = theorem_fuzz(&p)?;
            let mut out = Vec::new();
            for cx in &s.counterexamples {
                out.push(
                    Record::new("alphadeg-fuzz")
                        .put("record", "counterexample")
                        .put("kind", cx.kind.name())
                        .put("trial", cx.trial)
                        .put("seed", cx.seed)
                        .put("alpha", cx.alpha.to_string())
                        .put("k", cx.k.as_ref().map(|k| k.to_string()))
                        .put("lhs", cx.lhs.as_ref().map(|l| l.to_string()))
                        .list("equation", &cx.system),
                );
            }
            out.push(
                Record::new("alphadeg-fuzz")
                    .put("record", "summary")
                    .put("field", p.field.to_string())
                    .put("N", *n)
                    .put("degrees", p.degrees.clone())
                    .put("seed", p.seed)
                    .put("trials", s.trials)
                    .put("smooth", s.smooth)
                    .put("filtered_singular", s.filtered_singular)
                    .put("filtered_undetermined", s.filtered_undetermined)
                    .put("inequality_checks", s.inequality_checks)
                    .put("strict_checks", s.strict_checks)
                    .put("excluded_equalities", s.excluded_equalities)
                    .put("lemma_checks", s.lemma_checks)
                    .put("minoration_checks", s.minoration_checks)
                    .put("minoration_unverifiable", s.minoration_unverifiable)
                    .put("normalization_checks", s.normalization_checks)
                    .put("violations", s.counterexamples.len()),
            );
            out
        }
    })
}
