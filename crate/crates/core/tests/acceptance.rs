//! Acceptance suite: one line per criterion.
//!
//! Criteria 2 and 14 check printed claims that the exact computation does
//! not reproduce. They are run in full and reported as FAIL; only an
//! unexpected failure makes the process exit nonzero.

use std::process::ExitCode;
use std::time::Instant;

use qhyperboloid::algebra::{evaluate_in_rep, AlgebraConfig, Letter, NFPoly};
use qhyperboloid::algebra::{check_braided_commutativity, rep_consistency, word_string};
use qhyperboloid::braided::{check_almost_jacobi, check_generalized_lie, decompose_tensor_square_at, flip, QLieBracket};
use qhyperboloid::involution::{
    check_extension_consistency, check_involution, check_odd_subalgebra, classify_involutions, InvolutionCandidate,
};
use qhyperboloid::spin_reps::{
    braided_module_value, build_braided_rep, casimir_closed_form, casimir_value, relations_hold_with, theta_closed_form,
};
use qhyperboloid::trace::{braided_trace, compare_trace_formula, convention_is_invariant, select_convention, v_power};
use qhyperboloid::uq_modules::SpinModule;
use qhyperboloid::{Matrix, QScalar, Result};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = fn() -> Result<(bool, String)>;

const KNOWN_UNATTAINABLE: [usize; 2] = [2, 14];

fn q() -> QScalar {
    QScalar::q()
}

fn r(n: i64) -> QScalar {
    QScalar::from_int(n)
}

fn fail(msg: impl Into<String>) -> Result<(bool, String)> {
    Ok((false, msg.into()))
}

fn criterion_1() -> Result<(bool, String)> {
    for l in 1..=8 {
        if !SpinModule::new(l).check_uq_relations() {
            return fail(format!("relations fail for l = {l}"));
        }
    }
    Ok((true, "l = 1..8".into()))
}

fn criterion_2() -> Result<(bool, String)> {
    let qi = q().pow(-1);
    let one = build_braided_rep(1, &r(2))?;
    let l1 = one.u == Matrix::from_int_rows(&[&[0, 1], &[0, 0]])
        && one.v == Matrix::diag(&[qi.clone(), -q()])
        && one.w == Matrix::subdiag(&[qi]);
    let two = build_braided_rep(2, &r(2))?;
    let b2 = &q() + &q().pow(-1);
    let q2 = q().pow(2);
    let u2 = Matrix::superdiag(&[q2.clone(), QScalar::one()]);
    let v2 = Matrix::diag(&[QScalar::one(), &QScalar::one() - &q2, -&q2]).scale(&b2);
    let w2 = Matrix::subdiag(&[QScalar::one(), QScalar::one()]);
    let (uu, vv, ww) = (two.u == u2, two.v == v2, two.w == w2);
    let note = format!("l=1 {}, l=2 U {} V {} W {}", ok(l1), ok(uu), ok(vv), ok(ww));
    if l1 && uu && vv && ww {
        return Ok((true, note));
    }
    let scaled = two.w == w2.scale(&b2);
    Ok((false, format!("{note}; computed W = (q+q^-1)·printed W: {scaled}")))
}

fn ok(b: bool) -> &'static str {
    if b {
        "match"
    } else {
        "differs"
    }
}

fn criterion_3() -> Result<(bool, String)> {
    for l in 1..=8 {
        let rep = build_braided_rep(l, &r(2))?;
        if rep.theta != theta_closed_form(l, &q()) {
            return fail(format!("theta differs at l = {l}: {}", rep.theta));
        }
        if !relations_hold_with(&rep.u, &rep.v, &rep.w, &q(), &rep.theta) {
            return fail(format!("relations fail with theta at l = {l}"));
        }
    }
    Ok((true, "theta = q^(2l+1) + q^-1 for l = 1..8".into()))
}

fn criterion_4() -> Result<(bool, String)> {
    for l in 1..=8 {
        let rep = build_braided_rep(l, &r(2))?;
        let b = |i: i64| (&q().pow(i) - &q().pow(-i)) / (&q() - &q().pow(-1));
        let expected = &(&b(l as i64) * &b(l as i64 + 2)) * &q().pow(2 * l as i64 - 2);
        if casimir_value(&rep)? != expected || casimir_closed_form(l, &q()) != expected {
            return fail(format!("Casimir differs at l = {l}"));
        }
    }
    Ok((true, "scalar b_l b_(l+2) q^(2l-2) for l = 1..8".into()))
}

fn criterion_5() -> Result<(bool, String)> {
    for h in [r(1), r(2), QScalar::from_ratio(7, 3)] {
        for l in 1..=6 {
            let rep = build_braided_rep(l, &h)?;
            if braided_module_value(l, &h, &q())? != rep.rescaled_casimir()? {
                return fail(format!("c_k differs at l = {l}, h = {h}"));
            }
        }
    }
    let mut classical = Vec::new();
    for l in 1..=6 {
        let ck = braided_module_value(l, &r(2), &QScalar::one())?;
        let l = l as i64;
        if ck != r(4 * l * (l + 2)) {
            return fail(format!("classical c_k at l = {l} is {ck}"));
        }
        classical.push(ck.to_string());
    }
    Ok((true, format!("q=1, h=2: {}", classical.join(", "))))
}

fn criterion_6() -> Result<(bool, String)> {
    let br = QLieBracket::with_q(&r(2), &QScalar::one());
    // {v,u} = 2u, {u,w} = v, {v,w} = -2w, antisymmetric, zero on the diagonal
    let mut table = vec![vec![vec![r(0); 3]; 3]; 3];
    let mut set = |a: usize, b: usize, k: usize, c: i64| {
        table[a][b][k] = r(c);
        table[b][a][k] = r(-c);
    };
    set(1, 0, 0, 2);
    set(0, 2, 1, 1);
    set(1, 2, 2, -2);
    for a in 0..3 {
        for b in 0..3 {
            if br.entry(a, b) != &table[a][b] {
                return fail(format!("bracket entry ({a},{b}) differs"));
            }
        }
    }
    let s = decompose_tensor_square_at(&QScalar::one()).braiding_operator();
    if s != flip() {
        return fail("braiding at q=1 is not the flip");
    }
    Ok((true, "sl(2) table and flip".into()))
}

fn criterion_7() -> Result<(bool, String)> {
    for (h, c) in [(2, 5), (1, 0), (0, 3)] {
        let report = check_generalized_lie(&r(h), &r(c));
        if !report.holds() {
            return fail(format!("conditions fail at (h, c) = ({h}, {c}): {report:?}"));
        }
    }
    Ok((true, "a, b, c hold at (2,5), (1,0), (0,3)".into()))
}

fn criterion_8() -> Result<(bool, String)> {
    let env = AlgebraConfig::enveloping(&r(2));
    let quo = AlgebraConfig::quotient(&r(2), &r(5));
    for cfg in [&env, &quo] {
        if !cfg.check_confluence(3) {
            return fail(format!("{:?} not confluent at length 3", cfg.mode()));
        }
    }
    for d in 0..=6 {
        if env.graded_dimension(d) != (d + 1) * (d + 2) / 2 {
            return fail(format!("enveloping dimension at d = {d}"));
        }
        if d >= 1 && quo.graded_dimension(d) != 2 * d + 1 {
            return fail(format!("quotient dimension at d = {d}"));
        }
    }
    let start = Instant::now();
    let stretch = env.check_confluence(4) && quo.check_confluence(4);
    let note = format!("length 3 confluent; length 4 {} ({:.1?})", if stretch { "confluent" } else { "NOT confluent" }, start.elapsed());
    Ok((true, note))
}

fn random_word(rng: &mut StdRng) -> Vec<Letter> {
    let len = rng.gen_range(0..=5);
    (0..len).map(|_| rng.gen_range(0..3)).collect()
}

fn criterion_9() -> Result<(bool, String)> {
    let mut rng = StdRng::seed_from_u64(9);
    for l in 1..=2 {
        let rep = build_braided_rep(l, &r(2))?;
        let env = AlgebraConfig::enveloping(&r(2));
        let quo = AlgebraConfig::quotient(&r(2), &rep.rescaled_casimir()?);
        let images = rep.generator_images();
        for _ in 0..100 {
            let w = random_word(&mut rng);
            for cfg in [&env, &quo] {
                if !rep_consistency(&rep, &w, cfg)? {
                    return fail(format!("l = {l}, word {w:?}, {:?}", cfg.mode()));
                }
            }
            // independent check of the evaluation map itself
            let direct = w.iter().fold(Matrix::identity(rep.dim()), |m, &x| m.mul(&images[x as usize]));
            if evaluate_in_rep(&NFPoly::word(w.clone()), &images) != direct {
                return fail("evaluation of a bare word");
            }
        }
    }
    Ok((true, "l = 1, 2; 100 words each; both modes".into()))
}

fn criterion_10() -> Result<(bool, String)> {
    if !check_braided_commutativity(&r(5)) {
        return fail("mu S = mu fails at h = 0");
    }
    let report = AlgebraConfig::quotient(&r(2), &r(5)).braided_commutativity_report();
    match report.iter().find(|(_, good)| !good) {
        Some((w, _)) => Ok((true, format!("h = 0 holds; h = 2 counterexample on {}", word_string(w)))),
        None => fail("no counterexample for h = 2"),
    }
}

fn criterion_11() -> Result<(bool, String)> {
    let one = QScalar::one();
    for c in [1, 5] {
        let c = r(c);
        let expected = [r(1), r(0), &c / &r(3), &(&c * &c) / &r(5)];
        for (m, e) in [0, 1, 2, 4].into_iter().zip(expected) {
            let t = braided_trace(&v_power(m), &c, &one, m.max(1))?;
            if t != e {
                return fail(format!("tr v^{m} at c = {c} is {t}, expected {e}"));
            }
        }
    }
    let mut notes = Vec::new();
    for m in [2, 4] {
        let cmp = compare_trace_formula(m, &r(5))?;
        if cmp.matching().is_empty() {
            return fail(format!("no exponent convention matches at m = {m}"));
        }
        notes.push(format!("m={m}: matches {:?}, printed {}", cmp.matching(), if cmp.printed_matches() { "matches" } else { "differs" }));
    }
    Ok((true, notes.join("; ")))
}

fn criterion_12() -> Result<(bool, String)> {
    let mut labels = Vec::new();
    for l in 1..=4 {
        let conv = select_convention(l)?;
        let module = SpinModule::new(l);
        if !convention_is_invariant(&module, conv)? {
            return fail(format!("not invariant at l = {l}"));
        }
        let tr = |m: &Matrix| qhyperboloid::trace::quantum_trace_end(&module, m, conv);
        for m in module.elementary_basis() {
            if tr(&module.endo_q_h(&m)) != tr(&m) || tr(&module.endo_q_neg_h(&m)) != tr(&m) {
                return fail(format!("group-like invariance fails at l = {l}"));
            }
        }
        labels.push(conv.label());
    }
    Ok((true, format!("selected {} for l = 1..4", labels[0])))
}

fn criterion_13() -> Result<(bool, String)> {
    let (h, c) = (r(2), r(5));
    let neg = InvolutionCandidate::negative_identity();
    let split = InvolutionCandidate::split();
    if !check_involution(&neg, &h, &q()) || !check_involution(&split, &h, &q()) {
        return fail("printed involutions rejected");
    }
    if check_involution(&InvolutionCandidate::compact(), &h, &q()) {
        return fail("antidiagonal accepted at symbolic q");
    }
    let found = classify_involutions(&h, &q())?;
    if found.len() != 2 || !found.contains(&neg) || !found.contains(&split) {
        return fail(format!("classifier found {} candidates", found.len()));
    }
    for j in &found {
        if !check_extension_consistency(j, &h, &c, &q())? || !check_odd_subalgebra(j, &h, &q()) {
            return fail("extension or odd closure fails");
        }
    }
    Ok((true, "exactly -id and diag(1,-1,1)".into()))
}

fn criterion_14() -> Result<(bool, String)> {
    let nu = check_almost_jacobi(&r(2), &q())?;
    let at_one = nu.compose(&QScalar::one())?;
    Ok((at_one.is_one(), format!("nu = {nu}, nu(1) = {at_one}")))
}

fn main() -> ExitCode {
    let criteria: [Check; 14] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
        criterion_11,
        criterion_12,
        criterion_13,
        criterion_14,
    ];
    let mut unexpected = 0;
    for (i, f) in criteria.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let (pass, note) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
        let known = KNOWN_UNATTAINABLE.contains(&n);
        let tag = match (pass, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("criterion {n}: {tag} [{:.2?}] {note}", start.elapsed());
        if !pass && !known {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
