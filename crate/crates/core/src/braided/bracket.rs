use super::{sparse, VModule, U, V, W};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::qscalar::{qint_at, QScalar};
use crate::uq_modules::Generator;

/// The q-Lie bracket on V for a fixed `h`, as a table of structure
/// constants with `M = 2h/(1+q^4)`.
#[derive(Clone, Debug)]
pub struct QLieBracket {
    q: QScalar,
    h: QScalar,
    m: QScalar,
    table: Vec<Vec<Vector>>,
}

impl QLieBracket {
    pub fn new(h: &QScalar) -> Self {
        Self::with_q(h, &QScalar::q())
    }

    pub fn with_q(h: &QScalar, q: &QScalar) -> Self {
        let q2 = q.pow(2);
        let m = (h * &QScalar::from_int(2)) / (&QScalar::one() + &q.pow(4));
        let mb = &m / &qint_at(2, q);
        let e = |i: usize, c: QScalar| sparse(3, &[(i, c)]);
        let zero = vec![QScalar::zero(); 3];
        let table = vec![
            vec![zero.clone(), e(U, -(&q2 * &m)), e(V, mb.clone())],
            vec![e(U, m.clone()), e(V, &(&QScalar::one() - &q2) * &m), e(W, -(&q2 * &m))],
            vec![e(V, -mb), e(W, m.clone()), zero],
        ];
        Self { q: q.clone(), h: h.clone(), m, table }
    }

    pub fn q(&self) -> &QScalar {
        &self.q
    }

    pub fn h(&self) -> &QScalar {
        &self.h
    }

    /// `M = 2h(1+q^4)^-1`.
    pub fn m(&self) -> &QScalar {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    pub fn bracket(&self, a: &[QScalar], b: &[QScalar]) -> Vector {
        let mut out = vec![QScalar::zero(); 3];
        for i in 0..3 {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                if b[j].is_zero() {
                    continue;
                }
                let c = &a[i] * &b[j];
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    *o += &(&c * t);
                }
            }
        }
        out
    }

    /// The bracket as a linear map V⊗V -> V (3×9).
    pub fn matrix(&self) -> Matrix {
        Matrix::from_fn(3, 9, |r, c| self.table[c / 3][c % 3][r].clone())
    }

    /// Left adjoint operator `x -> [z, x]`.
    pub fn rho(&self, z: &[QScalar]) -> Matrix {
        let cols: Vec<Vector> =
            (0..3).map(|j| self.bracket(z, &super::basis_vector(j))).collect();
        Matrix::from_columns(3, &cols)
    }

    /// Whether the bracket intertwines the coproduct action on V⊗V with
    /// the action on V.
    pub fn is_module_morphism(&self) -> bool {
        let module = VModule::with_q(&self.q);
        let b = self.matrix();
        Generator::ALL
            .iter()
            .all(|&g| b.mul(&module.tensor_action(g)) == module.generator(g).mul(&b))
    }

    /// The three left-hand sides and the matching `±2h ρ(·)` right-hand
    /// sides of the adjoint almost-representation identities.
    pub fn jacobi_sides(&self) -> [(Matrix, Matrix); 3] {
        let q = &self.q;
        let q2 = q.pow(2);
        let [ru, rv, rw] = [U, V, W].map(|i| self.rho(&super::basis_vector(i)));
        let two_h = &self.h * &QScalar::from_int(2);
        let first = ru.mul(&rv).scale(&q2).sub(&rv.mul(&ru));
        let second = ru
            .commutator(&rw)
            .scale(&(&q.pow(3) + q))
            .add(&rv.mul(&rv).scale(&(&QScalar::one() - &q2)));
        let third = rw.mul(&rv).sub(&rv.mul(&rw).scale(&q2));
        [
            (first, ru.scale(&-two_h.clone())),
            (second, rv.scale(&two_h)),
            (third, rw.scale(&two_h)),
        ]
    }

    /// Whether all identities hold with the factor `nu`, entry by entry.
    pub fn almost_jacobi_holds(&self, nu: &QScalar) -> bool {
        self.jacobi_sides().iter().all(|(lhs, rhs)| *lhs == rhs.scale(nu))
    }
}

pub fn qlie_bracket(a: &[QScalar], b: &[QScalar], h: &QScalar) -> Vector {
    QLieBracket::new(h).bracket(a, b)
}

/// Find the common factor `ν` with which the left adjoint map of the
/// bracket satisfies the almost-representation identities.
pub fn check_almost_jacobi(h: &QScalar, q: &QScalar) -> Result<QScalar> {
    if h.is_zero() {
        return Err(Error::InvalidParameter("h must be nonzero".into()));
    }
    let br = QLieBracket::with_q(h, q);
    let sides = br.jacobi_sides();
    let nu = sides
        .iter()
        .flat_map(|(l, r)| l.entries().iter().zip(r.entries()))
        .find(|(_, r)| !r.is_zero())
        .map(|(l, r)| l / r)
        .ok_or_else(|| Error::InconsistentFactor("right-hand sides vanish".into()))?;
    if br.almost_jacobi_holds(&nu) {
        Ok(nu)
    } else {
        Err(Error::InconsistentFactor(format!("no common factor; first candidate {nu}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::basis_vector;

    fn e(i: usize) -> Vector {
        basis_vector(i)
    }

    #[test]
    fn table_entries() {
        let h = QScalar::from_int(2);
        let br = QLieBracket::new(&h);
        let m = br.m().clone();
        assert_eq!(m, QScalar::from_int(4) / (&QScalar::one() + &QScalar::q().pow(4)));
        assert!(qlie_bracket(&e(U), &e(U), &h).iter().all(QScalar::is_zero));
        let uw = qlie_bracket(&e(U), &e(W), &h);
        assert_eq!(uw, sparse(3, &[(V, &m / &crate::qscalar::qint(2))]));
        assert_eq!(br.entry(W, V), &sparse(3, &[(W, m)]));
    }

    #[test]
    fn classical_table() {
        let br = QLieBracket::with_q(&QScalar::from_int(2), &QScalar::one());
        let two = QScalar::from_int(2);
        assert_eq!(br.bracket(&e(V), &e(U)), sparse(3, &[(U, two.clone())]));
        assert_eq!(br.bracket(&e(U), &e(W)), sparse(3, &[(V, QScalar::one())]));
        assert_eq!(br.bracket(&e(V), &e(W)), sparse(3, &[(W, -two)]));
        for i in 0..3 {
            for j in 0..3 {
                let a = br.bracket(&e(i), &e(j));
                let b = br.bracket(&e(j), &e(i));
                assert!(a.iter().zip(&b).all(|(x, y)| (x + y).is_zero()));
            }
        }
    }

    #[test]
    fn antisymmetry_fails_generically() {
        let br = QLieBracket::new(&QScalar::from_int(2));
        let s: Vector =
            br.bracket(&e(U), &e(V)).iter().zip(br.bracket(&e(V), &e(U))).map(|(a, b)| a + &b).collect();
        let expected = &(&QScalar::one() - &QScalar::q().pow(2)) * br.m();
        assert_eq!(s, sparse(3, &[(U, expected)]));
        assert!(!s[U].is_zero());
    }

    #[test]
    fn bracket_is_a_module_morphism() {
        assert!(QLieBracket::new(&QScalar::from_int(3)).is_module_morphism());
        assert!(QLieBracket::new(&QScalar::from_ratio(-1, 2)).is_module_morphism());
    }

    #[test]
    fn bracket_is_alpha_extended_by_zero() {
        let h = QScalar::from_ratio(5, 3);
        let br = QLieBracket::new(&h);
        let t = crate::braided::decompose_tensor_square();
        assert!(br.matrix().mul(t.projector(2)).is_zero());
        assert!(br.matrix().mul(t.projector(0)).is_zero());
        let hw = &t.span(1)[0];
        let two_h = &h * &QScalar::from_int(2);
        assert_eq!(br.matrix().mul_vec(hw), sparse(3, &[(U, -two_h)]));
    }

    #[test]
    fn almost_jacobi_factor() {
        let q = QScalar::q();
        let nu = check_almost_jacobi(&QScalar::from_int(2), &q).unwrap();
        let expected = (&(&q.pow(4) - &q.pow(2)) + &QScalar::one()) / (&q.pow(4) + &QScalar::one());
        assert_eq!(nu, expected);
        assert_eq!(check_almost_jacobi(&QScalar::from_ratio(7, 3), &q).unwrap(), expected);
        let classical = check_almost_jacobi(&QScalar::from_int(2), &QScalar::one()).unwrap();
        assert_eq!(classical, QScalar::from_ratio(1, 2));
        assert!(check_almost_jacobi(&QScalar::zero(), &q).is_err());
    }

    #[test]
    fn wrong_factor_is_rejected() {
        let br = QLieBracket::new(&QScalar::from_int(2));
        assert!(!br.almost_jacobi_holds(&QScalar::one()));
    }
}
