use super::{decompose_tensor_square_at, TensorSquare, U, V, W};
use crate::linalg::{Matrix, Vector};
use crate::qscalar::QScalar;

/// The pair of maps `α: I -> V`, `β: I -> k` on `I = V_1 ⊕ V_0`, extended
/// by zero on `V_2` so that both are defined on all of V⊗V.
#[derive(Clone, Debug)]
pub struct GenLieData {
    tensor: TensorSquare,
    h: QScalar,
    c: QScalar,
    alpha: Matrix,
    beta: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenLieReport {
    pub dim_k: usize,
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

impl GenLieReport {
    pub fn holds(&self) -> bool {
        self.a && self.b && self.c
    }
}

impl GenLieData {
    pub fn new(h: &QScalar, c: &QScalar, q: &QScalar) -> Self {
        let tensor = decompose_tensor_square_at(q);
        let all: Vec<Vector> = (0..3).flat_map(|s| tensor.span(s).to_vec()).collect();
        let inv = Matrix::from_columns(9, &all).inverse().expect("spans are independent");

        // Images of the span vectors in the order V_0, V_1 (three), V_2 (five).
        let two_h = h * &QScalar::from_int(2);
        let mut a_img = Matrix::zeros(3, 9);
        a_img[(U, 1)] = -two_h.clone();
        a_img[(V, 2)] = two_h.clone();
        a_img[(W, 3)] = two_h;
        let mut b_img = Matrix::zeros(1, 9);
        b_img[(0, 0)] = c.clone();

        Self { alpha: a_img.mul(&inv), beta: b_img.mul(&inv), tensor, h: h.clone(), c: c.clone() }
    }

    pub fn h(&self) -> &QScalar {
        &self.h
    }

    pub fn c(&self) -> &QScalar {
        &self.c
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn tensor(&self) -> &TensorSquare {
        &self.tensor
    }

    /// Basis of `(I⊗V) ∩ (V⊗I)` inside V⊗V⊗V.
    pub fn overlap(&self) -> Vec<Vector> {
        let id = Matrix::identity(3);
        let p2 = self.tensor.projector(2);
        Matrix::vstack(&[&p2.kron(&id), &id.kron(p2)]).nullspace()
    }

    pub fn check(&self) -> GenLieReport {
        let k = self.overlap();
        let dim_k = k.len();
        if dim_k == 0 {
            return GenLieReport { dim_k, a: true, b: true, c: true };
        }
        let id = Matrix::identity(3);
        let km = Matrix::from_columns(27, &k);
        let d = self.alpha.kron(&id).sub(&id.kron(&self.alpha));
        let dk = d.mul(&km);
        let a = self.tensor.projector(2).mul(&dk).is_zero();
        let b_term = self.beta.kron(&id).sub(&id.kron(&self.beta)).mul(&km);
        let b = self.alpha.mul(&dk).add(&b_term).is_zero();
        let c = self.beta.mul(&dk).is_zero();
        GenLieReport { dim_k, a, b, c }
    }
}

/// Verify the generalized Lie structure conditions for generic `q`.
pub fn check_generalized_lie(h: &QScalar, c: &QScalar) -> GenLieReport {
    GenLieData::new(h, c, &QScalar::q()).check()
}
