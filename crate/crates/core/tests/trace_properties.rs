use qhyperboloid::algebra::{AlgebraConfig, Mode, NFPoly};
use qhyperboloid::trace::{braided_trace, v_power, InvariantProjector};
use qhyperboloid::uq_modules::Generator;
use qhyperboloid::QScalar;

fn r(n: i64) -> QScalar {
    QScalar::from_int(n)
}

fn projector(c: i64) -> InvariantProjector {
    let cfg = AlgebraConfig::new(&QScalar::q(), &QScalar::zero(), &r(c), Mode::Quotient).unwrap();
    InvariantProjector::new(&cfg, 4).unwrap()
}

#[test]
fn trace_kills_the_nontrivial_components() {
    let p = projector(5);
    assert!(p.is_complete());
    for w in p.basis().to_vec() {
        let b = NFPoly::word(w);
        let rest = b.sub(&p.project(&b).unwrap());
        assert!(p.trace(&rest).unwrap().is_zero());
    }
}

#[test]
fn trace_is_ad_invariant() {
    let p = projector(3);
    let cfg = p.config().clone();
    for w in p.basis().to_vec() {
        let x = NFPoly::word(w);
        for g in Generator::ALL {
            let y = cfg.uq_act(g, &x);
            if y.degree().is_some_and(|d| d <= 4) {
                assert!(p.trace(&y).unwrap().is_zero(), "{g:?} {x}");
            }
        }
    }
}

#[test]
fn trace_of_v_power_is_homogeneous_in_c() {
    let q = QScalar::from_ratio(2, 3);
    for m in [2usize, 4, 6] {
        let values: Vec<QScalar> = [1, 2, 3, 7]
            .into_iter()
            .map(|c| &braided_trace(&v_power(m), &r(c), &q, m).unwrap() / &r(c).pow(m as i64 / 2))
            .collect();
        assert!(values.windows(2).all(|p| p[0] == p[1]), "m = {m}: {values:?}");
    }
}

#[test]
fn odd_powers_have_zero_trace() {
    for m in [1usize, 3, 5] {
        assert!(braided_trace(&v_power(m), &r(5), &QScalar::q(), m).unwrap().is_zero());
    }
}
