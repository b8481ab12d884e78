//! Spin-k almost representations of the q-Lie algebra inside End(U_k), the
//! braided Casimir value and the rescaled genuine representations.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qscalar::{qint_at, IntPoly, QScalar};
use crate::uq_modules::{EndoElement, Generator, SpinModule};

#[derive(Clone, Debug)]
pub struct BraidedRep {
    pub l: usize,
    pub q: QScalar,
    pub h: QScalar,
    pub u: EndoElement,
    pub v: EndoElement,
    pub w: EndoElement,
    pub theta: QScalar,
    pub nu: QScalar,
    pub casimir_scalar: QScalar,
    pub rescale: QScalar,
    module: SpinModule,
}

/// Left-hand sides of the three almost-representation relations for a
/// triple of matrices.
pub fn relation_sides(u: &Matrix, v: &Matrix, w: &Matrix, q: &QScalar) -> [Matrix; 3] {
    let q2 = q.pow(2);
    let first = u.mul(v).scale(&q2).sub(&v.mul(u));
    let second = u
        .commutator(w)
        .scale(&(&q.pow(3) + q))
        .add(&v.mul(v).scale(&(&QScalar::one() - &q2)));
    let third = w.mul(v).sub(&v.mul(w).scale(&q2));
    [first, second, third]
}

/// `(q^3+q)UW + V^2 + (q+q^-1)WU`.
pub fn casimir_matrix(u: &Matrix, v: &Matrix, w: &Matrix, q: &QScalar) -> Matrix {
    u.mul(w)
        .scale(&(&q.pow(3) + q))
        .add(&v.mul(v))
        .add(&w.mul(u).scale(&qint_at(2, q)))
}

/// Whether `(u, v, w)` satisfies the three relations with factor `theta`,
/// i.e. `first = -θu`, `second = θv`, `third = θw`.
pub fn relations_hold_with(u: &Matrix, v: &Matrix, w: &Matrix, q: &QScalar, theta: &QScalar) -> bool {
    let [a, b, c] = relation_sides(u, v, w, q);
    a == u.scale(&-theta.clone()) && b == v.scale(theta) && c == w.scale(theta)
}

/// `q^{2l+1} + q^{-1}`.
pub fn theta_closed_form(l: usize, q: &QScalar) -> QScalar {
    &q.pow(2 * l as i64 + 1) + &q.pow(-1)
}

/// Polynomial whose roots are exactly the zeros of θ for spin `l/2`:
/// `q·θ = q^{2l+2} + 1`.
pub fn theta_vanishing_polynomial(l: usize) -> IntPoly {
    IntPoly::monomial(1.into(), 2 * l + 2).add(&IntPoly::one())
}

/// The highest weight element `U = diag_+(q^{2(l-1)}, ..., q^2, 1)`.
pub fn highest_weight_element(l: usize, q: &QScalar) -> Matrix {
    let entries: Vec<QScalar> = (0..l).map(|i| q.pow(2 * (l - 1 - i) as i64)).collect();
    Matrix::superdiag(&entries)
}

pub fn build_braided_rep(l: usize, h: &QScalar) -> Result<BraidedRep> {
    build_braided_rep_at(l, h, &QScalar::q())
}

pub fn build_braided_rep_at(l: usize, h: &QScalar, q: &QScalar) -> Result<BraidedRep> {
    if l == 0 {
        return Err(Error::InvalidParameter("spin module must have l >= 1".into()));
    }
    if h.is_zero() {
        return Err(Error::InvalidParameter("h must be nonzero".into()));
    }
    let module = SpinModule::with_q(l, q);
    let u = highest_weight_element(l, q);
    let v = module.endo_action(Generator::Y, &u)?.neg();
    let w = module.endo_action(Generator::Y, &v)?.scale(&qint_at(2, q).inv()?);

    let first = relation_sides(&u, &v, &w, q)[0].clone();
    let theta = -(&first[(0, 1)] / &u[(0, 1)]);
    if !relations_hold_with(&u, &v, &w, q, &theta) {
        return Err(Error::InconsistentFactor(format!(
            "spin {l}/2 triple does not satisfy all relations with θ = {theta}"
        )));
    }
    let casimir_scalar = casimir_matrix(&u, &v, &w, q).scalar_value().ok_or(Error::NonScalar)?;
    let two_h = h * &QScalar::from_int(2);
    let rescale = two_h.checked_div(&theta)?;
    let nu = theta.checked_div(&two_h)?;
    Ok(BraidedRep { l, q: q.clone(), h: h.clone(), u, v, w, theta, nu, casimir_scalar, rescale, module })
}

impl BraidedRep {
    pub fn module(&self) -> &SpinModule {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.l + 1
    }

    /// `(rescale·U, rescale·V, rescale·W)`, a genuine representation.
    pub fn rescaled(&self) -> [Matrix; 3] {
        [&self.u, &self.v, &self.w].map(|m| m.scale(&self.rescale))
    }

    /// The images of `u`, `v`, `w` under the genuine representation, in
    /// basis order.
    pub fn generator_images(&self) -> [Matrix; 3] {
        self.rescaled()
    }

    /// Whether the rescaled triple satisfies the defining relations of the
    /// enveloping algebra for the stored `h` with factor exactly 1.
    pub fn rescaled_is_representation(&self) -> bool {
        let [u, v, w] = self.rescaled();
        relations_hold_with(&u, &v, &w, &self.q, &(&self.h * &QScalar::from_int(2)))
    }

    /// Casimir image of the rescaled triple.
    pub fn rescaled_casimir(&self) -> Result<QScalar> {
        let [u, v, w] = self.rescaled();
        casimir_matrix(&u, &v, &w, &self.q).scalar_value().ok_or(Error::NonScalar)
    }

    /// First-entry intermediates `(v_1, v_2)` computed from the
    /// Y-action entries: `v_1 = y_1 q^{l-2}`, `v_2 = y_2 q^{l-2} - y_1 q^l`.
    pub fn first_entry_intermediates(&self) -> (QScalar, QScalar) {
        let ys = self.module.y_entries();
        let y1 = ys[0].clone();
        let y2 = ys.get(1).cloned().unwrap_or_else(QScalar::zero);
        let l = self.l as i64;
        let v1 = &y1 * &self.q.pow(l - 2);
        let v2 = &(&y2 * &self.q.pow(l - 2)) - &(&y1 * &self.q.pow(l));
        (v1, v2)
    }

    /// Weights of U, V, W under the adjoint H-action, if each is a weight
    /// vector.
    pub fn weights(&self) -> Option<[i64; 3]> {
        let mut out = [0; 3];
        for (k, m) in [&self.u, &self.v, &self.w].into_iter().enumerate() {
            let hm = self.module.endo_action(Generator::H, m).ok()?;
            out[k] = [2, 0, -2].into_iter().find(|&wt| hm == m.scale(&QScalar::from_int(wt)))?;
        }
        Some(out)
    }
}

/// Scalar value of the braided Casimir on the almost representation.
pub fn casimir_value(rep: &BraidedRep) -> Result<QScalar> {
    casimir_matrix(&rep.u, &rep.v, &rep.w, &rep.q).scalar_value().ok_or(Error::NonScalar)
}

/// `b_l b_{l+2} q^{2l-2}`.
pub fn casimir_closed_form(l: usize, q: &QScalar) -> QScalar {
    let l = l as i64;
    &(&qint_at(l, q) * &qint_at(l + 2, q)) * &q.pow(2 * l - 2)
}

/// Closed form `c_k = b_l b_{l+2} q^{2l-2} (2h/θ)^2` of the Casimir on
/// the genuine spin `l/2` representation.
pub fn braided_module_value(l: usize, h: &QScalar, q: &QScalar) -> Result<QScalar> {
    let r = (h * &QScalar::from_int(2)).checked_div(&theta_closed_form(l, q))?;
    Ok(&casimir_closed_form(l, q) * &(&r * &r))
}

/// True iff End(U) holds exactly one highest weight vector of weight 2.
pub fn verify_unicity(l: usize) -> bool {
    SpinModule::new(l).highest_weight_space(2).len() == 1
}
