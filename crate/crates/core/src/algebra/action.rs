use super::{casimir_element, AlgebraConfig, Letter, Mode, NFPoly, Word, U, V, W};
use crate::braided::decompose_tensor_square_at;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qscalar::{qint_at, QScalar};
use crate::spin_reps::BraidedRep;
use crate::uq_modules::Generator;

fn weight(l: Letter) -> i64 {
    2 - 2 * l as i64
}

/// Image of a single letter under X or Y as `(letter, coefficient)`.
fn letter_image(g: Generator, l: Letter, q: &QScalar) -> Option<(Letter, QScalar)> {
    match (g, l) {
        (Generator::X, V) => Some((U, -qint_at(2, q))),
        (Generator::X, W) => Some((V, QScalar::one())),
        (Generator::Y, U) => Some((V, -QScalar::one())),
        (Generator::Y, V) => Some((W, qint_at(2, q))),
        _ => None,
    }
}

/// Action on a free-algebra element through the iterated coproduct,
/// without reducing.
pub fn uq_act_free(g: Generator, x: &NFPoly, q: &QScalar) -> NFPoly {
    let mut out = NFPoly::zero();
    for (w, c) in x.terms() {
        if g == Generator::H {
            let total: i64 = w.iter().map(|&l| weight(l)).sum();
            out.add_term(w.clone(), &(c * &QScalar::from_int(total)));
            continue;
        }
        for i in 0..w.len() {
            let Some((img, coeff)) = letter_image(g, w[i], q) else { continue };
            let exponent: i64 = match g {
                Generator::X => -w[..i].iter().map(|&l| weight(l)).sum::<i64>(),
                _ => w[i + 1..].iter().map(|&l| weight(l)).sum::<i64>(),
            };
            let mut nw: Word = w.clone();
            nw[i] = img;
            out.add_term(nw, &(&(c * &coeff) * &q.pow(exponent)));
        }
    }
    out
}

impl AlgebraConfig {
    /// Action of a U_q(sl(2)) generator on an algebra element.
    pub fn uq_act(&self, g: Generator, x: &NFPoly) -> NFPoly {
        self.reduce(&uq_act_free(g, x, &self.q))
    }

    /// Whether each generator maps each defining relation into the ideal.
    pub fn uq_action_well_defined(&self) -> bool {
        self.relations
            .iter()
            .all(|r| Generator::ALL.iter().all(|&g| self.reduce(&uq_act_free(g, r, &self.q)).is_zero()))
    }

    /// For each basis tensor `e_i ⊗ e_j`, whether `μ(S̃ t) = μ(t)`.
    pub fn braided_commutativity_report(&self) -> Vec<(Word, bool)> {
        let s = decompose_tensor_square_at(&self.q).braiding_operator();
        let mut out = Vec::with_capacity(9);
        for t in 0..9 {
            let direct = self.reduce_word(&[(t / 3) as Letter, (t % 3) as Letter]);
            let mut braided = NFPoly::zero();
            for k in 0..9 {
                let c = &s[(k, t)];
                if !c.is_zero() {
                    braided.add_scaled(&self.reduce_word(&[(k / 3) as Letter, (k % 3) as Letter]), c);
                }
            }
            out.push((vec![(t / 3) as Letter, (t % 3) as Letter], braided == direct));
        }
        out
    }
}

/// Braided commutativity of the quotient with `h = 0` for symbolic `q`.
pub fn check_braided_commutativity(c: &QScalar) -> bool {
    AlgebraConfig::quotient(&QScalar::zero(), c).braided_commutativity_report().iter().all(|(_, ok)| *ok)
}

/// Image of an element under `u, v, w -> images`.
pub fn evaluate_in_rep(x: &NFPoly, images: &[Matrix; 3]) -> Matrix {
    let n = images[0].rows();
    let mut acc = Matrix::zeros(n, n);
    for (w, c) in x.terms() {
        let m = w.iter().fold(Matrix::identity(n), |m, &l| m.mul(&images[l as usize]));
        acc = acc.add(&m.scale(c));
    }
    acc
}

/// Whether the matrix image of the normal form of `word` equals the
/// direct product of generator images along the word.
pub fn rep_consistency(rep: &BraidedRep, word: &[Letter], cfg: &AlgebraConfig) -> Result<bool> {
    if rep.q != *cfg.q() || rep.h != *cfg.h() {
        return Err(Error::InvalidParameter("representation and algebra use different q or h".into()));
    }
    if cfg.mode() == Mode::Quotient && *cfg.c() != rep.rescaled_casimir()? {
        return Err(Error::InvalidParameter("quotient constant differs from the module value".into()));
    }
    let images = rep.generator_images();
    let direct = evaluate_in_rep(&NFPoly::word(word.to_vec()), &images);
    Ok(evaluate_in_rep(&cfg.reduce_word(word), &images) == direct)
}

/// Normal forms of `C_q x - x C_q` for `x = u, v, w`.
pub fn casimir_centrality_residuals(cfg: &AlgebraConfig) -> [NFPoly; 3] {
    let cq = casimir_element(cfg.q());
    [U, V, W].map(|l| {
        let x = NFPoly::generator(l);
        cfg.reduce(&cq.concat(&x).sub(&x.concat(&cq)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{all_words, parse_word};
    use crate::spin_reps::build_braided_rep;

    fn r(n: i64) -> QScalar {
        QScalar::from_int(n)
    }

    #[test]
    fn action_examples() {
        let cfg = AlgebraConfig::enveloping(&r(2));
        let uv = NFPoly::word(parse_word("uv").unwrap());
        assert_eq!(cfg.uq_act(Generator::H, &uv), uv.scale(&r(2)));
        let yu = cfg.uq_act(Generator::Y, &NFPoly::generator(U));
        assert_eq!(yu, NFPoly::monomial(vec![V], -QScalar::one()));
        let quo = AlgebraConfig::quotient(&r(2), &r(5));
        let cq = casimir_element(quo.q());
        assert!(quo.uq_act(Generator::X, &cq).is_zero());
        assert!(quo.uq_act(Generator::Y, &cq).is_zero());
    }

    #[test]
    fn action_is_well_defined() {
        assert!(AlgebraConfig::enveloping(&r(2)).uq_action_well_defined());
        assert!(AlgebraConfig::quotient(&r(2), &r(5)).uq_action_well_defined());
        assert!(AlgebraConfig::quotient(&QScalar::zero(), &r(1)).uq_action_well_defined());
    }

    #[test]
    fn action_satisfies_uq_relations_on_low_degrees() {
        let cfg = AlgebraConfig::quotient(&r(1), &r(3));
        let q = cfg.q().clone();
        for w in cfg.normal_words_upto(3) {
            let x = NFPoly::word(w.clone());
            let act = |g, y: &NFPoly| cfg.uq_act(g, y);
            let hx = act(Generator::H, &act(Generator::X, &x)).sub(&act(Generator::X, &act(Generator::H, &x)));
            assert_eq!(hx, act(Generator::X, &x).scale(&r(2)));
            let xy = act(Generator::X, &act(Generator::Y, &x)).sub(&act(Generator::Y, &act(Generator::X, &x)));
            let wt: i64 = w.iter().map(|&l| weight(l)).sum();
            assert_eq!(xy, x.scale(&qint_at(wt, &q)));
        }
    }

    #[test]
    fn braided_commutativity() {
        assert!(check_braided_commutativity(&r(5)));
        let h2 = AlgebraConfig::quotient(&r(2), &r(5));
        let report = h2.braided_commutativity_report();
        let uv = report.iter().find(|(w, _)| *w == vec![U, V]).unwrap();
        assert!(!uv.1);
        assert!(report.iter().find(|(w, _)| *w == vec![U, U]).unwrap().1);
    }

    #[test]
    fn representation_consistency() {
        for l in 1..=2 {
            let rep = build_braided_rep(l, &r(2)).unwrap();
            let env = AlgebraConfig::enveloping(&r(2));
            let quo = AlgebraConfig::quotient(&r(2), &rep.rescaled_casimir().unwrap());
            for n in 0..=3 {
                for w in all_words(n) {
                    assert!(rep_consistency(&rep, &w, &env).unwrap());
                    assert!(rep_consistency(&rep, &w, &quo).unwrap());
                }
            }
        }
    }

    #[test]
    fn centrality_residuals_vanish_generically() {
        let res = casimir_centrality_residuals(&AlgebraConfig::enveloping(&r(2)));
        assert!(res.iter().all(NFPoly::is_zero), "{res:?}");
    }
}
