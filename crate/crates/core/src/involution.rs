//! Antilinear involutions of V ⊗ C compatible with the q-Lie bracket,
//! `[a*, b*] = -[a, b]*`, and their extension to the quotient algebra.
//!
//! `q`, `h` and `c` are real, so conjugation fixes every `QScalar` and only
//! touches the imaginary part of a `CScalar`. Because the structure
//! constants are real, the compatibility condition is polynomial in the
//! nine entries of `J` (no conjugates), and conjugation enters only through
//! involutivity. Over C the compatible involutions with `q != 1` form the
//! circle `u* = λu, v* = -v, w* = conj(λ)w`, `|λ| = 1`. The classifier
//! works with real coefficients and returns the points `λ = ±1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::{AlgebraConfig, Mode, NFPoly};
use crate::braided::{decompose_tensor_square_at, QLieBracket};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qscalar::{CScalar, IntPoly, QScalar};

pub type CVector = Vec<CScalar>;

/// Rows are the images of u, v, w: `e_a* = Σ_k J[a][k] e_k`, extended
/// antilinearly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvolutionCandidate {
    pub j: [[CScalar; 3]; 3],
}

impl InvolutionCandidate {
    pub fn from_real(m: &Matrix) -> Self {
        let j = std::array::from_fn(|a| std::array::from_fn(|k| CScalar::real(m[(a, k)].clone())));
        Self { j }
    }

    fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Self { j: rows.map(|r| r.map(CScalar::from_int)) }
    }

    /// `a* = -conj(a)`.
    pub fn negative_identity() -> Self {
        Self::from_ints([[-1, 0, 0], [0, -1, 0], [0, 0, -1]])
    }

    /// `u* = u, v* = -v, w* = w`.
    pub fn split() -> Self {
        Self::from_ints([[1, 0, 0], [0, -1, 0], [0, 0, 1]])
    }

    /// `u* = w, v* = v, w* = u`, the classical compact form.
    pub fn compact() -> Self {
        Self::from_ints([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    }

    /// `u* = λu, v* = -v, w* = conj(λ)w` with `λ = re + i·im`.
    pub fn circle(re: QScalar, im: QScalar) -> Self {
        let lambda = CScalar::new(re, im);
        let z = CScalar::zero;
        Self { j: [[lambda.clone(), z(), z()], [z(), CScalar::from_int(-1), z()], [z(), z(), lambda.conj()]] }
    }

    pub fn is_real(&self) -> bool {
        self.j.iter().flatten().all(CScalar::is_real)
    }

    pub fn real_matrix(&self) -> Option<Matrix> {
        self.is_real().then(|| Matrix::from_fn(3, 3, |a, k| self.j[a][k].re.clone()))
    }

    pub fn apply(&self, x: &[CScalar]) -> CVector {
        let mut out = vec![CScalar::zero(); 3];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let c = xi.conj();
            for k in 0..3 {
                out[k] = &out[k] + &(&c * &self.j[i][k]);
            }
        }
        out
    }

    /// `(x*)* = x` on the basis, i.e. `conj(J)·J = id`.
    pub fn is_involutive(&self) -> bool {
        (0..3).all(|k| self.apply(&self.apply(&basis(k))) == basis(k))
    }
}

fn basis(k: usize) -> CVector {
    let mut e = vec![CScalar::zero(); 3];
    e[k] = CScalar::one();
    e
}

fn neg_c(x: &[CScalar]) -> CVector {
    x.iter().map(|c| -c).collect()
}

/// Complex-bilinear extension of the real bracket.
pub fn complex_bracket(br: &QLieBracket, a: &[CScalar], b: &[CScalar]) -> CVector {
    let re = |x: &[CScalar]| x.iter().map(|c| c.re.clone()).collect::<Vec<_>>();
    let im = |x: &[CScalar]| x.iter().map(|c| c.im.clone()).collect::<Vec<_>>();
    let (ar, ai, br_, bi) = (re(a), im(a), re(b), im(b));
    let rr = br.bracket(&ar, &br_);
    let ii = br.bracket(&ai, &bi);
    let ri = br.bracket(&ar, &bi);
    let ir = br.bracket(&ai, &br_);
    (0..3).map(|k| CScalar::new(&rr[k] - &ii[k], &ri[k] + &ir[k])).collect()
}

fn real_coeffs(v: &[QScalar]) -> CVector {
    v.iter().cloned().map(CScalar::real).collect()
}

/// Compatibility with the bracket for all nine basis pairs, plus
/// involutivity.
pub fn check_involution(jc: &InvolutionCandidate, h: &QScalar, q: &QScalar) -> bool {
    let br = QLieBracket::with_q(h, q);
    let compatible = (0..3).all(|a| {
        (0..3).all(|b| {
            let lhs = complex_bracket(&br, &jc.apply(&basis(a)), &jc.apply(&basis(b)));
            let rhs = neg_c(&jc.apply(&real_coeffs(br.entry(a, b))));
            lhs == rhs
        })
    });
    compatible && jc.is_involutive()
}

/// Polynomial in the nine entries of `J` (index `3a + k`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct MPoly {
    terms: BTreeMap<[u8; 9], QScalar>,
}

impl MPoly {
    fn constant(c: QScalar) -> Self {
        let mut p = Self::default();
        p.add_term([0; 9], c);
        p
    }

    fn var(i: usize) -> Self {
        let mut e = [0; 9];
        e[i] = 1;
        let mut p = Self::default();
        p.add_term(e, QScalar::one());
        p
    }

    fn add_term(&mut self, e: [u8; 9], c: QScalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    fn scale(&self, s: &QScalar) -> MPoly {
        let mut out = MPoly::default();
        for (e, c) in &self.terms {
            out.add_term(*e, c * s);
        }
        out
    }

    fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = std::array::from_fn(|i| ea[i] + eb[i]);
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn substitute(&self, i: usize, value: &QScalar) -> MPoly {
        let mut out = MPoly::default();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let k = e2[i];
            e2[i] = 0;
            out.add_term(e2, c * &value.pow(k as i64));
        }
        out
    }

    fn variables(&self) -> Vec<usize> {
        (0..9).filter(|&i| self.terms.keys().any(|e| e[i] > 0)).collect()
    }

    /// Coefficients in ascending powers when only variable `i` occurs.
    fn univariate(&self) -> Option<(usize, Vec<QScalar>)> {
        let vars = self.variables();
        let [i] = vars.as_slice() else { return None };
        let deg = self.terms.keys().map(|e| e[*i] as usize).max().unwrap_or(0);
        let mut coeffs = vec![QScalar::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[e[*i] as usize] = c.clone();
        }
        Some((*i, coeffs))
    }
}

fn square_root_int(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Square root of an integer polynomial that is a perfect square.
fn poly_square_root(p: &IntPoly) -> Option<IntPoly> {
    if p.is_zero() {
        return Some(IntPoly::zero());
    }
    let low = p.low_order();
    if low % 2 != 0 {
        return None;
    }
    let p = p.shift_down(low);
    let d = p.degree()?;
    if d % 2 != 0 {
        return None;
    }
    let n = d / 2;
    let c = p.coeffs();
    let lead = square_root_int(&c[d])?;
    let two_lead = &lead * 2;
    let mut r = vec![BigInt::from(0); n + 1];
    r[n] = lead;
    for k in 1..=n {
        let idx = d - k;
        let mut s: BigInt = c[idx].clone();
        for i in (n - k + 1)..=n {
            if idx >= i && idx - i > n - k && idx - i <= n {
                s -= &r[i] * &r[idx - i];
            }
        }
        if !Zero::is_zero(&(&s % &two_lead)) {
            return None;
        }
        r[n - k] = s / &two_lead;
    }
    let root = IntPoly::from_coeffs(r);
    (root.mul(&root) == p).then(|| root.shift_up(low / 2))
}

/// Exact square root in Q(q), when one exists.
fn square_root(x: &QScalar) -> Option<QScalar> {
    if x.is_zero() {
        return Some(QScalar::zero());
    }
    if x.shift() % 2 != 0 {
        return None;
    }
    let num = poly_square_root(x.numerator())?;
    let den = poly_square_root(x.denominator())?;
    QScalar::from_parts(num, x.shift() / 2, den).ok()
}

/// Roots in Q(q) of a polynomial of degree at most 2.
fn roots(coeffs: &[QScalar]) -> Result<Vec<QScalar>> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(QScalar::is_zero) {
        c.pop();
    }
    match c.len() {
        0 | 1 => Ok(Vec::new()),
        2 => Ok(vec![-(&c[0] / &c[1])]),
        3 => {
            let disc = &(&c[1] * &c[1]) - &(&(&c[0] * &c[2]) * &QScalar::from_int(4));
            let s = square_root(&disc)
                .ok_or_else(|| Error::Unsolved(format!("discriminant {disc} is not a square")))?;
            let two_a = &c[2] * &QScalar::from_int(2);
            let mut out = vec![&(-&c[1] + &s) / &two_a];
            let other = &(-&c[1] - &s) / &two_a;
            if other != out[0] {
                out.push(other);
            }
            Ok(out)
        }
        n => Err(Error::Unsolved(format!("degree {} equation", n - 1))),
    }
}

/// Pair order of the classification argument: uu, ww, vv, wu, uv, wv,
/// then the remaining pairs.
const PAIR_ORDER: [(usize, usize); 9] =
    [(0, 0), (2, 2), (1, 1), (2, 0), (0, 1), (2, 1), (0, 2), (1, 0), (1, 2)];

fn compatibility_equations(br: &QLieBracket) -> Vec<MPoly> {
    let rows: Vec<Vec<MPoly>> = (0..3).map(|a| (0..3).map(|k| MPoly::var(3 * a + k)).collect()).collect();
    let mut eqs = Vec::new();
    for (a, b) in PAIR_ORDER {
        for k in 0..3 {
            // [J_a, J_b]_k + Σ_m c^{ab}_m J_{m,k} = 0
            let mut e = MPoly::default();
            for i in 0..3 {
                for j in 0..3 {
                    let t = &br.entry(i, j)[k];
                    if !t.is_zero() {
                        e = e.add(&rows[a][i].mul(&rows[b][j]).scale(t));
                    }
                }
            }
            for (m, cm) in br.entry(a, b).iter().enumerate() {
                if !cm.is_zero() {
                    e = e.add(&rows[m][k].scale(cm));
                }
            }
            eqs.push(e);
        }
    }
    eqs
}

/// `J·J = id` for real `J`.
fn real_involutivity_equations() -> Vec<MPoly> {
    let mut eqs = Vec::new();
    for a in 0..3 {
        for k in 0..3 {
            let mut e = MPoly::constant(if a == k { -QScalar::one() } else { QScalar::zero() });
            for m in 0..3 {
                e = e.add(&MPoly::var(3 * a + m).mul(&MPoly::var(3 * m + k)));
            }
            eqs.push(e);
        }
    }
    eqs
}

type Assignment = [Option<QScalar>; 9];

fn singular_row(assign: &Assignment) -> bool {
    (0..3).any(|a| (0..3).all(|k| assign[3 * a + k].as_ref().is_some_and(QScalar::is_zero)))
}

fn search(eqs: &[MPoly], assign: Assignment, stage2: bool, out: &mut Vec<Assignment>) -> Result<()> {
    if singular_row(&assign) {
        return Ok(());
    }
    if eqs.iter().any(|e| !e.is_zero() && e.variables().is_empty()) {
        return Ok(());
    }
    if let Some((var, coeffs)) = eqs.iter().find_map(MPoly::univariate) {
        for root in roots(&coeffs)? {
            let next: Vec<MPoly> = eqs.iter().map(|e| e.substitute(var, &root)).collect();
            let mut a = assign.clone();
            a[var] = Some(root);
            search(&next, a, stage2, out)?;
        }
        return Ok(());
    }
    let open = eqs.iter().any(|e| !e.is_zero()) || assign.iter().any(Option::is_none);
    if !open {
        out.push(assign);
        return Ok(());
    }
    if stage2 {
        return Err(Error::Unsolved("constraints leave free parameters".into()));
    }
    let mut extended = eqs.to_vec();
    for mut e in real_involutivity_equations() {
        for (i, v) in assign.iter().enumerate() {
            if let Some(v) = v {
                e = e.substitute(i, v);
            }
        }
        extended.push(e);
    }
    search(&extended, assign, true, out)
}

/// All real-coefficient involutions compatible with the bracket for a
/// fixed `h != 0` and `q` with `1 - q^2 != 0`.
pub fn classify_involutions(h: &QScalar, q: &QScalar) -> Result<Vec<InvolutionCandidate>> {
    if h.is_zero() {
        return Err(Error::Degenerate("h = 0 makes the bracket vanish".into()));
    }
    if (&QScalar::one() - &q.pow(2)).is_zero() {
        return Err(Error::Degenerate(
            "the factor 1 - q^2 vanishes, so [x, x] = 0 and the first constraints are empty".into(),
        ));
    }
    let br = QLieBracket::with_q(h, q);
    let mut found = Vec::new();
    search(&compatibility_equations(&br), Default::default(), false, &mut found)?;
    let mut out: Vec<InvolutionCandidate> = Vec::new();
    for a in found {
        let m = Matrix::from_fn(3, 3, |r, k| a[3 * r + k].clone().expect("fully assigned"));
        let cand = InvolutionCandidate::from_real(&m);
        if check_involution(&cand, h, q) && !out.contains(&cand) {
            out.push(cand);
        }
    }
    Ok(out)
}

/// Whether `μ(*⊗*)S̃` maps every defining relation of the quotient into
/// the ideal, for a real compatible involution.
pub fn check_extension_consistency(jc: &InvolutionCandidate, h: &QScalar, c: &QScalar, q: &QScalar) -> Result<bool> {
    if !check_involution(jc, h, q) {
        return Err(Error::InvalidParameter("candidate is not a compatible involution".into()));
    }
    let j = jc
        .real_matrix()
        .ok_or_else(|| Error::InvalidParameter("extension is only checked for real involutions".into()))?;
    let cfg = AlgebraConfig::new(q, h, c, Mode::Quotient)?;
    let s = decompose_tensor_square_at(q).braiding_operator();
    let star = |l: usize| NFPoly::from_terms((0..3).map(|k| (vec![k as u8], j[(l, k)].clone())));
    for rel in cfg.relations() {
        let mut image = NFPoly::zero();
        for (w, t) in rel.terms() {
            match w.len() {
                0 => image.add_term(Vec::new(), t),
                1 => image.add_scaled(&star(w[0] as usize), t),
                2 => {
                    let col = 3 * w[0] as usize + w[1] as usize;
                    for k in 0..9 {
                        let sk = &s[(k, col)];
                        if !sk.is_zero() {
                            image.add_scaled(&star(k / 3).concat(&star(k % 3)), &(t * sk));
                        }
                    }
                }
                _ => return Err(Error::InvalidParameter("relations have degree at most 2".into())),
            }
        }
        if !cfg.reduce(&image).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The antilinear map as a real 6×6 matrix on `(re, im)` coordinates.
fn realification(jc: &InvolutionCandidate) -> Matrix {
    let mut m = Matrix::zeros(6, 6);
    for k in 0..3 {
        for t in 0..3 {
            let (jr, ji) = (&jc.j[k][t].re, &jc.j[k][t].im);
            m[(t, k)] = jr.clone();
            m[(t, 3 + k)] = ji.clone();
            m[(3 + t, k)] = ji.clone();
            m[(3 + t, 3 + k)] = -jr;
        }
    }
    m
}

/// Real basis of `{z : z* = sign·z}`.
pub fn eigen_basis(jc: &InvolutionCandidate, sign: i64) -> Vec<CVector> {
    let m = realification(jc).sub(&Matrix::scalar(6, &QScalar::from_int(sign)));
    m.nullspace()
        .into_iter()
        .map(|v| (0..3).map(|k| CScalar::new(v[k].clone(), v[3 + k].clone())).collect())
        .collect()
}

fn closure_witness(jc: &InvolutionCandidate, h: &QScalar, q: &QScalar, sign: i64) -> Option<(CVector, CVector)> {
    let br = QLieBracket::with_q(h, q);
    let part = eigen_basis(jc, sign);
    for a in &part {
        for b in &part {
            let x = complex_bracket(&br, a, b);
            let image = jc.apply(&x);
            let expected = if sign < 0 { neg_c(&x) } else { x.clone() };
            if image != expected {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// The odd part `z* = -z` is closed under the bracket.
pub fn check_odd_subalgebra(jc: &InvolutionCandidate, h: &QScalar, q: &QScalar) -> bool {
    closure_witness(jc, h, q, -1).is_none()
}

/// A pair of even elements whose bracket is not even, if any.
pub fn even_part_witness(jc: &InvolutionCandidate, h: &QScalar, q: &QScalar) -> Option<(CVector, CVector)> {
    closure_witness(jc, h, q, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QScalar {
        QScalar::q()
    }

    fn r(n: i64) -> QScalar {
        QScalar::from_int(n)
    }

    #[test]
    fn printed_involutions_pass() {
        assert!(check_involution(&InvolutionCandidate::negative_identity(), &r(2), &q()));
        assert!(check_involution(&InvolutionCandidate::split(), &r(2), &q()));
        assert!(!check_involution(&InvolutionCandidate::compact(), &r(2), &q()));
    }

    #[test]
    fn compact_form_is_classical() {
        assert!(check_involution(&InvolutionCandidate::compact(), &r(2), &QScalar::one()));
    }

    #[test]
    fn circle_family() {
        assert!(check_involution(&InvolutionCandidate::circle(r(0), r(1)), &r(2), &q()));
        let (a, b) = (QScalar::from_ratio(3, 5), QScalar::from_ratio(4, 5));
        assert!(check_involution(&InvolutionCandidate::circle(a, b), &r(2), &q()));
        // |λ| != 1 is compatible but not involutive.
        assert!(!check_involution(&InvolutionCandidate::circle(r(2), r(0)), &r(2), &q()));
    }

    #[test]
    fn classification() {
        for h in [r(2), QScalar::from_ratio(-3, 7)] {
            let found = classify_involutions(&h, &q()).unwrap();
            assert_eq!(found.len(), 2);
            assert!(found.contains(&InvolutionCandidate::negative_identity()));
            assert!(found.contains(&InvolutionCandidate::split()));
        }
        let sampled = classify_involutions(&r(1), &QScalar::from_ratio(1, 2)).unwrap();
        assert_eq!(sampled.len(), 2);
        assert!(matches!(classify_involutions(&r(2), &QScalar::one()), Err(Error::Degenerate(_))));
        assert!(classify_involutions(&QScalar::zero(), &q()).is_err());
    }

    #[test]
    fn extension_is_consistent() {
        let split = InvolutionCandidate::split();
        assert!(check_extension_consistency(&split, &r(2), &r(5), &q()).unwrap());
        let neg = InvolutionCandidate::negative_identity();
        assert!(check_extension_consistency(&neg, &r(0), &r(1), &q()).unwrap());
        assert!(check_extension_consistency(&InvolutionCandidate::compact(), &r(2), &r(5), &q()).is_err());
    }

    #[test]
    fn odd_elements_form_a_subalgebra() {
        for j in [InvolutionCandidate::negative_identity(), InvolutionCandidate::split()] {
            assert_eq!(eigen_basis(&j, -1).len(), 3);
            assert!(check_odd_subalgebra(&j, &r(2), &q()));
        }
        assert!(even_part_witness(&InvolutionCandidate::split(), &r(2), &q()).is_some());
    }

    #[test]
    fn square_roots() {
        assert_eq!(square_root(&QScalar::from_ratio(9, 4)), Some(QScalar::from_ratio(3, 2)));
        assert_eq!(square_root(&QScalar::q().pow(2)), Some(QScalar::q()));
        assert_eq!(square_root(&r(2)), None);
        let x = &(&q() - &r(1)) / &(&q().pow(2) + &r(3));
        assert_eq!(square_root(&(&x * &x)).map(|s| &s * &s), Some(&x * &x));
        assert_eq!(square_root(&q().pow(3)), None);
        assert_eq!(roots(&[r(-1), r(0), r(1)]).unwrap().len(), 2);
    }
}
