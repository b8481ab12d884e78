use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::QScalar;
use crate::error::Result;

/// Element of Q(q) ⊗ C, stored as a pair `re + i·im`. The parameter `q` is
/// treated as real, so conjugation fixes `re` and negates `im`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CScalar {
    pub re: QScalar,
    pub im: QScalar,
}

impl CScalar {
    pub fn new(re: QScalar, im: QScalar) -> Self {
        Self { re, im }
    }

    pub fn real(re: QScalar) -> Self {
        Self { re, im: QScalar::zero() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(QScalar::one())
    }

    pub fn i() -> Self {
        Self { re: QScalar::zero(), im: QScalar::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(QScalar::from_int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|^2 = re^2 + im^2`.
    pub fn norm_sqr(&self) -> QScalar {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm_sqr().inv()?;
        Ok(Self { re: &self.re * &n, im: -(&self.im * &n) })
    }

    pub fn scale(&self, s: &QScalar) -> Self {
        Self { re: &self.re * s, im: &self.im * s }
    }
}

impl Add for &CScalar {
    type Output = CScalar;
    fn add(self, rhs: &CScalar) -> CScalar {
        CScalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &CScalar {
    type Output = CScalar;
    fn sub(self, rhs: &CScalar) -> CScalar {
        CScalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &CScalar {
    type Output = CScalar;
    fn mul(self, rhs: &CScalar) -> CScalar {
        CScalar {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Neg for &CScalar {
    type Output = CScalar;
    fn neg(self) -> CScalar {
        CScalar { re: -&self.re, im: -&self.im }
    }
}

impl fmt::Display for CScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "i*({})", self.im),
            (false, false) => write!(f, "{} + i*({})", self.re, self.im),
        }
    }
}

impl fmt::Debug for CScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CScalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_and_inverse() {
        let z = CScalar::new(QScalar::q(), QScalar::from_int(2));
        assert_eq!(z.conj().conj(), z);
        let w = &z * &z.inv().unwrap();
        assert_eq!(w, CScalar::one());
        assert_eq!(&CScalar::i() * &CScalar::i(), CScalar::from_int(-1));
        assert_eq!((&z * &z.conj()).im, QScalar::zero());
    }
}
