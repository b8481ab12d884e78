//! The adjoint module V = span(u, v, w), its tensor square, the braiding
//! operator and the q-Lie bracket.
//!
//! Coordinates on V⊗V use the index `3*i + j` for `e_i ⊗ e_j` with
//! `u = 0, v = 1, w = 2`; on V⊗V⊗V the index is `9*i + 3*j + k`.

mod bracket;
mod genlie;

pub use bracket::{check_almost_jacobi, qlie_bracket, QLieBracket};
pub use genlie::{check_generalized_lie, GenLieData, GenLieReport};

use crate::linalg::{Matrix, Vector};
use crate::qscalar::{qint_at, QScalar};
use crate::uq_modules::{uq_relations_hold, Generator};

pub const U: usize = 0;
pub const V: usize = 1;
pub const W: usize = 2;
pub const LABELS: [&str; 3] = ["u", "v", "w"];

pub fn pair(i: usize, j: usize) -> usize {
    3 * i + j
}

pub fn basis_vector(i: usize) -> Vector {
    let mut e = vec![QScalar::zero(); 3];
    e[i] = QScalar::one();
    e
}

/// Vector in a space of dimension `n` from `(index, coefficient)` pairs.
pub fn sparse(n: usize, entries: &[(usize, QScalar)]) -> Vector {
    let mut out = vec![QScalar::zero(); n];
    for (i, c) in entries {
        out[*i] += c;
    }
    out
}

/// Spin-1 module with basis (u, v, w) of weights (2, 0, -2).
#[derive(Clone, Debug)]
pub struct VModule {
    q: QScalar,
    x: Matrix,
    y: Matrix,
    h: Matrix,
    q_h: Matrix,
    q_neg_h: Matrix,
}

impl VModule {
    pub const WEIGHTS: [i64; 3] = [2, 0, -2];

    pub fn new() -> Self {
        Self::with_q(&QScalar::q())
    }

    pub fn with_q(q: &QScalar) -> Self {
        let b2 = qint_at(2, q);
        let z = QScalar::zero;
        let one = QScalar::one;
        let x = Matrix::from_rows(vec![
            vec![z(), -b2.clone(), z()],
            vec![z(), z(), one()],
            vec![z(), z(), z()],
        ]);
        let y = Matrix::from_rows(vec![
            vec![z(), z(), z()],
            vec![-one(), z(), z()],
            vec![z(), b2, z()],
        ]);
        let h = Matrix::diag(&Self::WEIGHTS.map(QScalar::from_int));
        let q_h = Matrix::diag(&Self::WEIGHTS.map(|k| q.pow(k)));
        let q_neg_h = Matrix::diag(&Self::WEIGHTS.map(|k| q.pow(-k)));
        Self { q: q.clone(), x, y, h, q_h, q_neg_h }
    }

    pub fn q(&self) -> &QScalar {
        &self.q
    }

    pub fn generator(&self, g: Generator) -> &Matrix {
        match g {
            Generator::X => &self.x,
            Generator::Y => &self.y,
            Generator::H => &self.h,
        }
    }

    pub fn q_h(&self) -> &Matrix {
        &self.q_h
    }

    pub fn q_neg_h(&self) -> &Matrix {
        &self.q_neg_h
    }

    pub fn act(&self, g: Generator, v: &[QScalar]) -> Vector {
        self.generator(g).mul_vec(v)
    }

    pub fn check_uq_relations(&self) -> bool {
        uq_relations_hold(&self.x, &self.y, &self.h, &Self::WEIGHTS, &self.q)
    }

    /// Action of a generator on V⊗V through the coproduct.
    pub fn tensor_action(&self, g: Generator) -> Matrix {
        let id = Matrix::identity(3);
        match g {
            Generator::X => self.x.kron(&id).add(&self.q_neg_h.kron(&self.x)),
            Generator::Y => id.kron(&self.y).add(&self.y.kron(&self.q_h)),
            Generator::H => self.h.kron(&id).add(&id.kron(&self.h)),
        }
    }

    /// Action of a generator on V⊗V⊗V through the iterated coproduct.
    pub fn triple_action(&self, g: Generator) -> Matrix {
        let id = Matrix::identity(3);
        let id9 = Matrix::identity(9);
        match g {
            Generator::X => self
                .x
                .kron(&id9)
                .add(&self.q_neg_h.kron(&self.x).kron(&id))
                .add(&self.q_neg_h.kron(&self.q_neg_h).kron(&self.x)),
            Generator::Y => id9
                .kron(&self.y)
                .add(&id.kron(&self.y).kron(&self.q_h))
                .add(&self.y.kron(&self.q_h).kron(&self.q_h)),
            Generator::H => self
                .h
                .kron(&id9)
                .add(&id.kron(&self.h).kron(&id))
                .add(&id9.kron(&self.h)),
        }
    }
}

impl Default for VModule {
    fn default() -> Self {
        Self::new()
    }
}

/// V⊗V split into its spin 0, 1 and 2 components.
#[derive(Clone, Debug)]
pub struct TensorSquare {
    module: VModule,
    spans: [Vec<Vector>; 3],
    projectors: [Matrix; 3],
}

impl TensorSquare {
    pub fn module(&self) -> &VModule {
        &self.module
    }

    /// Spanning vectors of the spin `s` component.
    pub fn span(&self, s: usize) -> &[Vector] {
        &self.spans[s]
    }

    pub fn projector(&self, s: usize) -> &Matrix {
        &self.projectors[s]
    }

    pub fn dims(&self) -> [usize; 3] {
        [self.spans[0].len(), self.spans[1].len(), self.spans[2].len()]
    }

    /// The braided transposition: +1 on the spin 0 and spin 2 parts, -1 on
    /// the spin 1 part.
    pub fn braiding_operator(&self) -> Matrix {
        self.projectors[0].sub(&self.projectors[1]).add(&self.projectors[2])
    }

    /// Whether `m` commutes with the coproduct action of X, Y and H.
    pub fn commutes_with_action(&self, m: &Matrix) -> bool {
        Generator::ALL.iter().all(|&g| {
            let a = self.module.tensor_action(g);
            a.mul(m) == m.mul(&a)
        })
    }

    /// Whether every span is mapped into itself by the coproduct action.
    pub fn spans_invariant(&self) -> bool {
        Generator::ALL.iter().all(|&g| {
            let a = self.module.tensor_action(g);
            (0..3).all(|s| {
                let p = &self.projectors[s];
                self.spans[s].iter().all(|x| {
                    let y = a.mul_vec(x);
                    p.mul_vec(&y) == y
                })
            })
        })
    }
}

/// The spin 0, 1, 2 spans of V⊗V as printed, in that order.
pub fn tensor_square_spans(q: &QScalar) -> [Vec<Vector>; 3] {
    let q2 = q.pow(2);
    let q4 = q.pow(4);
    let b2 = qint_at(2, q);
    let q3q = &q.pow(3) + q;
    let one = QScalar::one;
    let s = |e: &[(usize, QScalar)]| sparse(9, e);
    let (uu, uv, uw) = (pair(U, U), pair(U, V), pair(U, W));
    let (vu, vv, vw) = (pair(V, U), pair(V, V), pair(V, W));
    let (wu, wv, ww) = (pair(W, U), pair(W, V), pair(W, W));

    let v0 = vec![s(&[(uw, q3q.clone()), (vv, one()), (wu, b2.clone())])];
    let v1 = vec![
        s(&[(uv, q2.clone()), (vu, -one())]),
        s(&[(uw, q3q.clone()), (wu, -q3q.clone()), (vv, &one() - &q2)]),
        s(&[(vw, -q2.clone()), (wv, one())]),
    ];
    let v2 = vec![
        s(&[(uu, one())]),
        s(&[(uv, one()), (vu, q2.clone())]),
        s(&[(uw, one()), (vv, -q.clone()), (wu, q4)]),
        s(&[(vw, one()), (wv, q2)]),
        s(&[(ww, one())]),
    ];
    [v0, v1, v2]
}

/// Decompose V⊗V for generic `q`; projectors come from inverting the
/// change of basis to the printed spans.
pub fn decompose_tensor_square() -> TensorSquare {
    decompose_tensor_square_at(&QScalar::q())
}

/// Same as [`decompose_tensor_square`] with `q` specialised. Panics if the
/// spans degenerate at that value.
pub fn decompose_tensor_square_at(q: &QScalar) -> TensorSquare {
    let spans = tensor_square_spans(q);
    let all: Vec<Vector> = spans.iter().flatten().cloned().collect();
    let basis = Matrix::from_columns(9, &all);
    let inv = basis.inverse().expect("tensor square spans are independent for this q");
    let mut projectors = Vec::with_capacity(3);
    let mut start = 0;
    for span in &spans {
        let end = start + span.len();
        let block: Vec<QScalar> = (0..9)
            .map(|k| if (start..end).contains(&k) { QScalar::one() } else { QScalar::zero() })
            .collect();
        projectors.push(basis.mul(&Matrix::diag(&block)).mul(&inv));
        start = end;
    }
    let projectors: [Matrix; 3] = projectors.try_into().expect("three projectors");
    TensorSquare { module: VModule::with_q(q), spans, projectors }
}

/// The permutation `e_i ⊗ e_j -> e_j ⊗ e_i` on V⊗V.
pub fn flip() -> Matrix {
    Matrix::from_fn(9, 9, |r, c| {
        let (i, j) = (c / 3, c % 3);
        if r == pair(j, i) {
            QScalar::one()
        } else {
            QScalar::zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v_module_relations() {
        let m = VModule::new();
        assert!(m.check_uq_relations());
        let b2 = qint_at(2, &QScalar::q());
        assert_eq!(m.act(Generator::X, &basis_vector(V)), sparse(3, &[(U, -b2.clone())]));
        assert_eq!(m.act(Generator::Y, &basis_vector(V)), sparse(3, &[(W, b2)]));
        assert_eq!(m.act(Generator::Y, &basis_vector(U)), sparse(3, &[(V, -QScalar::one())]));
        assert!(m.act(Generator::X, &basis_vector(U)).iter().all(QScalar::is_zero));
    }

    #[test]
    fn coproduct_actions_satisfy_relations() {
        let m = VModule::new();
        let x = m.tensor_action(Generator::X);
        let y = m.tensor_action(Generator::Y);
        let h = m.tensor_action(Generator::H);
        let weights: Vec<i64> =
            (0..9).map(|k| VModule::WEIGHTS[k / 3] + VModule::WEIGHTS[k % 3]).collect();
        assert!(uq_relations_hold(&x, &y, &h, &weights, m.q()));
        let x3 = m.triple_action(Generator::X);
        let y3 = m.triple_action(Generator::Y);
        let h3 = m.triple_action(Generator::H);
        let w3: Vec<i64> = (0..27)
            .map(|k| VModule::WEIGHTS[k / 9] + VModule::WEIGHTS[(k / 3) % 3] + VModule::WEIGHTS[k % 3])
            .collect();
        assert!(uq_relations_hold(&x3, &y3, &h3, &w3, m.q()));
    }

    #[test]
    fn projectors_are_a_resolution_of_identity() {
        let t = decompose_tensor_square();
        assert_eq!(t.dims(), [1, 3, 5]);
        let mut sum = Matrix::zeros(9, 9);
        for s in 0..3 {
            let p = t.projector(s);
            assert_eq!(p.mul(p), *p);
            assert!(t.commutes_with_action(p));
            sum = sum.add(p);
        }
        assert_eq!(sum, Matrix::identity(9));
        assert!(t.spans_invariant());
    }

    #[test]
    fn highest_weight_vectors_are_killed_by_x() {
        let t = decompose_tensor_square();
        let x = t.module().tensor_action(Generator::X);
        assert!(x.mul_vec(&t.span(1)[0]).iter().all(QScalar::is_zero));
        assert!(x.mul_vec(&t.span(2)[0]).iter().all(QScalar::is_zero));
        assert!(x.mul_vec(&t.span(0)[0]).iter().all(QScalar::is_zero));
    }

    #[test]
    fn braiding_is_an_involutive_morphism() {
        let t = decompose_tensor_square();
        let s = t.braiding_operator();
        assert_eq!(s.mul(&s), Matrix::identity(9));
        assert!(t.commutes_with_action(&s));
        let hw = &t.span(1)[0];
        assert_eq!(s.mul_vec(hw), hw.iter().map(|c| -c).collect::<Vector>());
    }

    #[test]
    fn classical_limit_is_the_flip() {
        let t = decompose_tensor_square_at(&QScalar::one());
        assert_eq!(t.braiding_operator(), flip());
        let anti = Matrix::identity(9).sub(&flip()).scale(&QScalar::from_ratio(1, 2));
        assert_eq!(*t.projector(1), anti);
    }

    #[test]
    fn generic_braiding_is_not_the_flip() {
        assert_ne!(decompose_tensor_square().braiding_operator(), flip());
    }
}
