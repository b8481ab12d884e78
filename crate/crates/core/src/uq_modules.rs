//! Spin-k irreducible modules of U_q(sl(2)) and the induced action on
//! endomorphism spaces.
//!
//! Conventions for the Hopf structure:
//!
//! ```text
//! Δ(X) = X⊗1 + q^-H⊗X    Δ(Y) = 1⊗Y + Y⊗q^H    Δ(H) = H⊗1 + 1⊗H
//! γ(X) = -q^H X          γ(Y) = -Y q^-H         γ(H) = -H
//! ```
//!
//! so that `ρ_End(a) M = ρ(a_1) M ρ(γ(a_2))` becomes
//!
//! ```text
//! ρ_End(X) M = X M - q^-H M q^H X
//! ρ_End(H) M = H M - M H
//! ρ_End(Y) M = (Y M - M Y) q^-H
//! ```

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::qscalar::{qint_at, QScalar};

/// Endomorphisms of a spin module are plain square matrices.
pub type EndoElement = Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    X,
    Y,
    H,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::X, Generator::Y, Generator::H];
}

/// The three defining relations of U_q(sl(2)) for matrices `x`, `y`, `h`
/// where `h` is diagonal with the given integer weights.
pub fn uq_relations_hold(x: &Matrix, y: &Matrix, h: &Matrix, weights: &[i64], q: &QScalar) -> bool {
    let two = QScalar::from_int(2);
    let hx = h.commutator(x) == x.scale(&two);
    let hy = h.commutator(y) == y.scale(&-two);
    let rhs = Matrix::diag(&weights.iter().map(|&w| qint_at(w, q)).collect::<Vec<_>>());
    hx && hy && x.commutator(y) == rhs
}

#[derive(Clone, Debug)]
pub struct SpinModule {
    l: usize,
    q: QScalar,
    x: Matrix,
    y: Matrix,
    h: Matrix,
    weights: Vec<i64>,
    q_h: Matrix,
    q_neg_h: Matrix,
    y_entries: Vec<QScalar>,
}

impl SpinModule {
    /// Spin `l/2` module over Q(q) with symbolic `q`.
    pub fn new(l: usize) -> Self {
        Self::with_q(l, &QScalar::q())
    }

    /// Spin `l/2` module with the deformation parameter specialized to `q`.
    ///
    /// `ρ(X)` is the superdiagonal of ones, `ρ(H) = diag(l, l-2, …, -l)` and
    /// `ρ(Y)` is subdiagonal with `y_j = b_l + b_{l-2} + … + b_{l-2(j-1)}`,
    /// the solution of the triangular system forced by `[X,Y]`.
    pub fn with_q(l: usize, q: &QScalar) -> Self {
        let n = l + 1;
        let weights: Vec<i64> = (0..n).map(|j| l as i64 - 2 * j as i64).collect();
        let x = Matrix::superdiag(&vec![QScalar::one(); l]);
        let mut y_entries = Vec::with_capacity(l);
        let mut acc = QScalar::zero();
        for j in 0..l {
            acc += &qint_at(weights[j], q);
            y_entries.push(acc.clone());
        }
        let y = Matrix::subdiag(&y_entries);
        let h = Matrix::diag(&weights.iter().map(|&w| QScalar::from_int(w)).collect::<Vec<_>>());
        let q_h = Matrix::diag(&weights.iter().map(|&w| q.pow(w)).collect::<Vec<_>>());
        let q_neg_h = Matrix::diag(&weights.iter().map(|&w| q.pow(-w)).collect::<Vec<_>>());
        Self { l, q: q.clone(), x, y, h, weights, q_h, q_neg_h, y_entries }
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn dim(&self) -> usize {
        self.l + 1
    }

    pub fn q(&self) -> &QScalar {
        &self.q
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn y(&self) -> &Matrix {
        &self.y
    }

    pub fn h(&self) -> &Matrix {
        &self.h
    }

    pub fn q_h(&self) -> &Matrix {
        &self.q_h
    }

    pub fn q_neg_h(&self) -> &Matrix {
        &self.q_neg_h
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn y_entries(&self) -> &[QScalar] {
        &self.y_entries
    }

    pub fn generator(&self, g: Generator) -> &Matrix {
        match g {
            Generator::X => &self.x,
            Generator::Y => &self.y,
            Generator::H => &self.h,
        }
    }

    /// Replace one entry of `ρ(Y)`; used to build deliberately broken modules.
    pub fn with_y_entry(mut self, j: usize, value: QScalar) -> Self {
        self.y_entries[j] = value;
        self.y = Matrix::subdiag(&self.y_entries);
        self
    }

    /// `[H,X] = 2X`, `[H,Y] = -2Y` and `[X,Y] = (q^H - q^-H)/(q - q^-1)` as
    /// exact matrix identities. The right-hand side of the last relation is
    /// `diag(b_weight)`, which stays regular at `q = 1`.
    pub fn check_uq_relations(&self) -> bool {
        uq_relations_hold(&self.x, &self.y, &self.h, &self.weights, &self.q)
    }

    fn check_dim(&self, m: &Matrix) -> Result<()> {
        if m.rows() != self.dim() || m.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: format!("{0}x{0}", self.dim()),
                found: format!("{}x{}", m.rows(), m.cols()),
            });
        }
        Ok(())
    }

    /// `ρ_End(g) M`.
    pub fn endo_action(&self, g: Generator, m: &Matrix) -> Result<Matrix> {
        self.check_dim(m)?;
        Ok(match g {
            Generator::X => {
                let twisted = self.q_neg_h.mul(m).mul(&self.q_h).mul(&self.x);
                self.x.mul(m).sub(&twisted)
            }
            Generator::H => self.h.commutator(m),
            Generator::Y => self.y.commutator(m).mul(&self.q_neg_h),
        })
    }

    /// `ρ_End(q^-H) M = q^-H M q^H`.
    pub fn endo_q_neg_h(&self, m: &Matrix) -> Matrix {
        self.q_neg_h.mul(m).mul(&self.q_h)
    }

    /// `ρ_End(q^H) M = q^H M q^-H`.
    pub fn endo_q_h(&self, m: &Matrix) -> Matrix {
        self.q_h.mul(m).mul(&self.q_neg_h)
    }

    /// Compatibility of `ρ_End` with the matrix product, with the coproduct
    /// expanded for each generator:
    ///
    /// * X: `ρ_End(X)(M1 M2) = ρ_End(X)M1 · M2 + ρ_End(q^-H)M1 · ρ_End(X)M2`
    /// * Y: `ρ_End(Y)(M1 M2) = M1 · ρ_End(Y)M2 + ρ_End(Y)M1 · ρ_End(q^H)M2`
    /// * H: `ρ_End(H)(M1 M2) = ρ_End(H)M1 · M2 + M1 · ρ_End(H)M2`
    pub fn check_endo_multiplicativity(&self, g: Generator, m1: &Matrix, m2: &Matrix) -> Result<bool> {
        let lhs = self.endo_action(g, &m1.mul(m2))?;
        let a1 = self.endo_action(g, m1)?;
        let a2 = self.endo_action(g, m2)?;
        let rhs = match g {
            Generator::X => a1.mul(m2).add(&self.endo_q_neg_h(m1).mul(&a2)),
            Generator::Y => m1.mul(&a2).add(&a1.mul(&self.endo_q_h(m2))),
            Generator::H => a1.mul(m2).add(&m1.mul(&a2)),
        };
        Ok(lhs == rhs)
    }

    /// Elementary matrix `E_ij`.
    pub fn elementary(&self, i: usize, j: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |a, b| if a == i && b == j { QScalar::one() } else { QScalar::zero() })
    }

    pub fn elementary_basis(&self) -> Vec<Matrix> {
        let n = self.dim();
        (0..n * n).map(|k| self.elementary(k / n, k % n)).collect()
    }

    /// `ρ_End(g)` as an `n²×n²` matrix acting on row-major flattened
    /// endomorphisms.
    pub fn endo_operator(&self, g: Generator) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = self
            .elementary_basis()
            .iter()
            .map(|e| self.endo_action(g, e).expect("square").entries().to_vec())
            .collect();
        Matrix::from_columns(n * n, &cols)
    }

    /// Basis of `{M : ρ_End(X) M = 0, ρ_End(H) M = weight·M}`, the highest
    /// weight vectors of the given weight inside End(U).
    pub fn highest_weight_space(&self, weight: i64) -> Vec<Matrix> {
        let n = self.dim();
        let xop = self.endo_operator(Generator::X);
        let hop = self
            .endo_operator(Generator::H)
            .sub(&Matrix::scalar(n * n, &QScalar::from_int(weight)));
        let stacked = Matrix::vstack(&[&xop, &hop]);
        stacked
            .nullspace()
            .into_iter()
            .map(|v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::qint;

    fn q() -> QScalar {
        QScalar::q()
    }

    #[test]
    fn spin_half_matrices() {
        let m = SpinModule::new(1);
        assert_eq!(m.x(), &Matrix::from_int_rows(&[&[0, 1], &[0, 0]]));
        assert_eq!(m.y(), &Matrix::from_int_rows(&[&[0, 0], &[1, 0]]));
        assert_eq!(m.h(), &Matrix::from_int_rows(&[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn spin_one_lowering_entries() {
        let m = SpinModule::new(2);
        assert_eq!(m.y_entries(), &[qint(2), qint(2)]);
    }

    #[test]
    fn trivial_module() {
        let m = SpinModule::new(0);
        assert!(m.x().is_zero() && m.y().is_zero() && m.h().is_zero());
        assert_eq!(m.dim(), 1);
        assert!(m.check_uq_relations());
    }

    #[test]
    fn last_lowering_entry_telescopes_to_b_l() {
        for l in 1..=6 {
            let m = SpinModule::new(l);
            assert_eq!(m.y_entries()[l - 1], qint(l as i64));
        }
    }

    #[test]
    fn relations_hold_and_break_when_perturbed() {
        assert!(SpinModule::new(1).check_uq_relations());
        assert!(SpinModule::new(5).check_uq_relations());
        let m = SpinModule::new(3);
        let bumped = &m.y_entries()[1] + &QScalar::one();
        let broken = m.with_y_entry(1, bumped);
        assert!(!broken.check_uq_relations());
    }

    #[test]
    fn endo_action_on_spin_half_raising() {
        let m = SpinModule::new(1);
        let u = Matrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        assert_eq!(m.endo_action(Generator::H, &u).unwrap(), u.scale(&QScalar::from_int(2)));
        assert!(m.endo_action(Generator::X, &u).unwrap().is_zero());
        let expected = Matrix::diag(&[-q().pow(-1), q()]);
        assert_eq!(m.endo_action(Generator::Y, &u).unwrap(), expected);
    }

    #[test]
    fn endo_action_rejects_wrong_size() {
        let m = SpinModule::new(2);
        assert!(matches!(
            m.endo_action(Generator::X, &Matrix::identity(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn multiplicativity_on_identity() {
        let m = SpinModule::new(2);
        let id = Matrix::identity(3);
        assert!(m.check_endo_multiplicativity(Generator::X, &id, &id).unwrap());
        assert!(m.endo_action(Generator::X, &id).unwrap().is_zero());
    }

    #[test]
    fn multiplicativity_on_elementary_pairs() {
        let m = SpinModule::new(1);
        let basis = m.elementary_basis();
        for g in Generator::ALL {
            for a in &basis {
                for b in &basis {
                    assert!(m.check_endo_multiplicativity(g, a, b).unwrap(), "{g:?}");
                }
            }
        }
    }

    #[test]
    fn weight_two_highest_weight_space_is_a_line() {
        for l in 1..=3 {
            assert_eq!(SpinModule::new(l).highest_weight_space(2).len(), 1, "l = {l}");
        }
        assert!(SpinModule::new(0).highest_weight_space(2).is_empty());
    }
}
