use qhyperboloid::algebra::{all_words, casimir_centrality_residuals, check_braided_commutativity, rep_consistency};
use qhyperboloid::algebra::{word_string, AlgebraConfig};
use qhyperboloid::braided::{check_almost_jacobi, check_generalized_lie, QLieBracket};
use qhyperboloid::involution::{
    check_extension_consistency, check_involution, check_odd_subalgebra, classify_involutions, even_part_witness,
    InvolutionCandidate,
};
use qhyperboloid::spin_reps::{
    braided_module_value, build_braided_rep, casimir_closed_form, casimir_value, relations_hold_with, theta_closed_form,
    verify_unicity,
};
use qhyperboloid::trace::{braided_trace, compare_trace_formula, select_convention, v_power};
use qhyperboloid::uq_modules::SpinModule;
use qhyperboloid::{CScalar, Matrix, QScalar, Result};
use rayon::prelude::*;

use crate::report::{Claim, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Reps,
    Algebra,
    Trace,
    Involutions,
}

type Task = Box<dyn Fn() -> Result<Claim> + Send + Sync>;

fn task(f: impl Fn() -> Result<Claim> + Send + Sync + 'static) -> Task {
    Box::new(f)
}

fn q() -> QScalar {
    QScalar::q()
}

fn r(n: i64) -> QScalar {
    QScalar::from_int(n)
}

fn rep_tasks(lmax: usize) -> Vec<Task> {
    let mut tasks = Vec::new();
    for l in 1..=lmax {
        tasks.push(task(move || {
            Ok(Claim::check(format!("reps.l{l}.uq-relations"), SpinModule::new(l).check_uq_relations(), "X, Y, H relations"))
        }));
        tasks.push(task(move || {
            Ok(Claim::check(format!("reps.l{l}.unicity"), verify_unicity(l), "one copy of V in End(U)"))
        }));
        tasks.push(task(move || {
            let rep = build_braided_rep(l, &r(2))?;
            let ok = rep.theta == theta_closed_form(l, &q()) && relations_hold_with(&rep.u, &rep.v, &rep.w, &q(), &rep.theta);
            Ok(Claim::check(format!("reps.l{l}.theta"), ok, format!("theta = {}", rep.theta)))
        }));
        tasks.push(task(move || {
            let rep = build_braided_rep(l, &r(2))?;
            let value = casimir_value(&rep)?;
            let ok = value == casimir_closed_form(l, &q());
            Ok(Claim::check(format!("reps.l{l}.casimir"), ok, format!("Casimir = {value}")))
        }));
        tasks.push(task(move || {
            let mut ok = true;
            for h in [r(2), QScalar::from_ratio(7, 3)] {
                let rep = build_braided_rep(l, &h)?;
                ok &= rep.rescaled_is_representation() && rep.rescaled_casimir()? == braided_module_value(l, &h, &q())?;
            }
            Ok(Claim::check(format!("reps.l{l}.rescaled"), ok, "rescaled triple is a representation with Casimir c_k"))
        }));
        tasks.push(task(move || {
            let ck = braided_module_value(l, &r(2), &QScalar::one())?;
            let li = l as i64;
            Ok(Claim::check(format!("reps.l{l}.classical-ck"), ck == r(4 * li * (li + 2)), format!("c_k(q=1, h=2) = {ck}")))
        }));
    }
    tasks.push(task(|| {
        let rep = build_braided_rep(1, &r(2))?;
        let qi = q().pow(-1);
        let ok = rep.u == Matrix::from_int_rows(&[&[0, 1], &[0, 0]])
            && rep.v == Matrix::diag(&[qi.clone(), -q()])
            && rep.w == Matrix::subdiag(&[qi]);
        Ok(Claim::check("reps.printed-l1", ok, "U, V, W for l = 1"))
    }));
    tasks.push(task(|| {
        let rep = build_braided_rep(2, &r(2))?;
        let b2 = &q() + &q().pow(-1);
        let q2 = q().pow(2);
        let u = Matrix::superdiag(&[q2.clone(), QScalar::one()]);
        let v = Matrix::diag(&[QScalar::one(), &QScalar::one() - &q2, -&q2]).scale(&b2);
        let w = Matrix::subdiag(&[QScalar::one(), QScalar::one()]);
        if rep.u != u || rep.v != v {
            return Ok(Claim::check("reps.printed-l2", false, "U or V differs from the printed matrices"));
        }
        if rep.w == w {
            return Ok(Claim::check("reps.printed-l2", true, "U, V, W for l = 2"));
        }
        let status = if rep.w == w.scale(&b2) { Status::Discrepancy } else { Status::Fail };
        Ok(Claim::new(
            "reps.printed-l2",
            status,
            "U and V match; printed W = subdiag(1, 1) but the construction gives (q+q^-1)·subdiag(1, 1), \
             which is the one satisfying the relations",
        ))
    }));
    tasks
}

fn algebra_tasks() -> Vec<Task> {
    let mut tasks = vec![
        task(|| {
            let env = AlgebraConfig::enveloping(&r(2));
            let quo = AlgebraConfig::quotient(&r(2), &r(5));
            let ok = env.check_confluence(3) && quo.check_confluence(3);
            Ok(Claim::check("algebra.confluence", ok, "all overlaps up to length 3 resolve in both modes"))
        }),
        task(|| {
            let env = AlgebraConfig::enveloping(&r(2));
            let quo = AlgebraConfig::quotient(&r(2), &r(5));
            let ok = (0..=6).all(|d| {
                env.graded_dimension(d) == (d + 1) * (d + 2) / 2 && (d == 0 || quo.graded_dimension(d) == 2 * d + 1)
            });
            Ok(Claim::check("algebra.graded-dimensions", ok, "(d+1)(d+2)/2 and 2d+1 for d <= 6"))
        }),
        task(|| {
            let ok = check_braided_commutativity(&r(5));
            let report = AlgebraConfig::quotient(&r(2), &r(5)).braided_commutativity_report();
            let witness = report.iter().find(|(_, good)| !good).map(|(w, _)| word_string(w));
            let note = match &witness {
                Some(w) => format!("holds at h = 0; fails at h = 2 on {w}"),
                None => "holds at h = 0; no counterexample at h = 2".into(),
            };
            Ok(Claim::check("algebra.braided-commutativity", ok && witness.is_some(), note))
        }),
        task(|| {
            let ok = AlgebraConfig::enveloping(&r(2)).uq_action_well_defined()
                && AlgebraConfig::quotient(&r(2), &r(5)).uq_action_well_defined();
            Ok(Claim::check("algebra.uq-action", ok, "relations span submodules"))
        }),
        task(|| {
            let res = casimir_centrality_residuals(&AlgebraConfig::enveloping(&r(2)));
            Ok(Claim::check("algebra.casimir-central", res.iter().all(|x| x.is_zero()), "C_q commutes with u, v, w"))
        }),
        task(|| {
            let ok = QLieBracket::new(&r(2)).is_module_morphism();
            Ok(Claim::check("algebra.bracket-morphism", ok, "bracket intertwines the action"))
        }),
        task(|| {
            let nu = check_almost_jacobi(&r(2), &q())?;
            let at_one = nu.compose(&QScalar::one())?;
            Ok(Claim::check("algebra.almost-jacobi", true, format!("common factor nu = {nu}; nu(1) = {at_one}")))
        }),
        task(|| {
            let mut ok = true;
            for l in 1..=2 {
                let rep = build_braided_rep(l, &r(2))?;
                let env = AlgebraConfig::enveloping(&r(2));
                let quo = AlgebraConfig::quotient(&r(2), &rep.rescaled_casimir()?);
                for w in (0..=3).flat_map(all_words) {
                    ok &= rep_consistency(&rep, &w, &env)? && rep_consistency(&rep, &w, &quo)?;
                }
            }
            Ok(Claim::check("algebra.rep-consistency", ok, "l <= 2, all words of length <= 3"))
        }),
    ];
    for (h, c) in [(2, 5), (1, 0), (0, 3)] {
        tasks.push(task(move || {
            let report = check_generalized_lie(&r(h), &r(c));
            let note = format!("dim K = {}; a {}, b {}, c {}", report.dim_k, report.a, report.b, report.c);
            Ok(Claim::check(format!("algebra.generalized-lie.h{h}-c{c}"), report.holds(), note))
        }));
    }
    tasks
}

fn trace_tasks(lmax: usize) -> Vec<Task> {
    let mut tasks: Vec<Task> = vec![task(|| {
        let mut values = Vec::new();
        let mut ok = true;
        for c in [1, 5] {
            for m in [0usize, 1, 2, 4] {
                let t = braided_trace(&v_power(m), &r(c), &QScalar::one(), m.max(1))?;
                let expected = if m % 2 == 1 { r(0) } else { &r(c).pow(m as i64 / 2) / &r(m as i64 + 1) };
                ok &= t == expected;
                values.push(format!("tr v^{m}(c={c}) = {t}"));
            }
        }
        Ok(Claim::check("trace.classical-values", ok, values.join(", ")))
    })];
    for m in [2usize, 4] {
        tasks.push(task(move || {
            let cmp = compare_trace_formula(m, &r(5))?;
            let id = format!("trace.closed-form.m{m}");
            if cmp.printed_matches() {
                return Ok(Claim::check(id, true, "printed formula matches the projection"));
            }
            if cmp.matching() == vec![(1, 1)] {
                return Ok(Claim::new(
                    id,
                    Status::Discrepancy,
                    "the projection matches the closed form with factor (q·sqrt c)^m; the printed exponent -m does not",
                ));
            }
            Ok(Claim::check(id, false, format!("no sign convention matches: {:?}", cmp.candidates)))
        }));
    }
    for l in 1..=lmax {
        tasks.push(task(move || {
            let conv = select_convention(l)?;
            Ok(Claim::check(format!("trace.quantum.l{l}"), true, format!("invariant convention Tr(M {})", conv.label())))
        }));
    }
    tasks
}

pub fn involution_label(j: &InvolutionCandidate) -> String {
    if *j == InvolutionCandidate::negative_identity() {
        "-id".into()
    } else if *j == InvolutionCandidate::split() {
        "diag(1,-1,1)".into()
    } else if *j == InvolutionCandidate::compact() {
        "antidiag".into()
    } else {
        format!("{:?}", j.j)
    }
}

fn vector(x: &[CScalar]) -> String {
    let parts: Vec<String> = x.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn involution_tasks() -> Vec<Task> {
    vec![
        task(|| {
            let h = r(2);
            let ok = check_involution(&InvolutionCandidate::negative_identity(), &h, &q())
                && check_involution(&InvolutionCandidate::split(), &h, &q())
                && !check_involution(&InvolutionCandidate::compact(), &h, &q());
            Ok(Claim::check("involutions.compatibility", ok, "-id and diag(1,-1,1) pass; antidiag fails for q != 1"))
        }),
        task(|| {
            let found = classify_involutions(&r(2), &q())?;
            let labels: Vec<String> = found.iter().map(involution_label).collect();
            let ok = found.len() == 2
                && found.contains(&InvolutionCandidate::negative_identity())
                && found.contains(&InvolutionCandidate::split());
            Ok(Claim::check(
                "involutions.classification",
                ok,
                format!("found {} involutions: {}", found.len(), labels.join(", ")),
            ))
        }),
        task(|| {
            let mut ok = true;
            for j in [InvolutionCandidate::negative_identity(), InvolutionCandidate::split()] {
                ok &= check_extension_consistency(&j, &r(2), &r(5), &q())?;
                ok &= check_odd_subalgebra(&j, &r(2), &q());
            }
            Ok(Claim::check("involutions.extension-and-odd-part", ok, "ideal is *-stable; odd part closes"))
        }),
        task(|| {
            let witness = even_part_witness(&InvolutionCandidate::split(), &r(2), &q());
            let note = match &witness {
                Some((a, b)) => format!("bracket of {} and {} is not even", vector(a), vector(b)),
                None => "even part closes".into(),
            };
            Ok(Claim::check("involutions.even-part-not-closed", witness.is_some(), note))
        }),
        task(|| {
            let lambda = InvolutionCandidate::circle(r(0), r(1));
            Ok(Claim::check(
                "involutions.complex-family",
                check_involution(&lambda, &r(2), &q()),
                "u* = i u, v* = -v, w* = -i w is compatible over C",
            ))
        }),
    ]
}

pub fn run(suite: Suite, lmax: usize, jobs: Option<usize>) -> Result<Vec<Claim>> {
    let mut tasks = Vec::new();
    if matches!(suite, Suite::All | Suite::Reps) {
        tasks.extend(rep_tasks(lmax));
    }
    if matches!(suite, Suite::All | Suite::Algebra) {
        tasks.extend(algebra_tasks());
    }
    if matches!(suite, Suite::All | Suite::Trace) {
        tasks.extend(trace_tasks(lmax));
    }
    if matches!(suite, Suite::All | Suite::Involutions) {
        tasks.extend(involution_tasks());
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| qhyperboloid::Error::InvalidParameter(e.to_string()))?;
    let claims = pool.install(|| {
        tasks
            .par_iter()
            .enumerate()
            .map(|(i, t)| t().unwrap_or_else(|e| Claim::check(format!("task-{i}"), false, format!("error: {e}"))))
            .collect()
    });
    Ok(claims)
}
