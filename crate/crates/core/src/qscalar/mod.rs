//! Exact arithmetic in the rational function field Q(q).
//!
//! A [`QScalar`] is stored as `num(q) * q^shift / den(q)` with integer
//! polynomials `num` and `den`. The representation is canonical:
//!
//! * `den` has a nonzero constant term and a positive leading coefficient,
//! * `num` has a nonzero constant term (all powers of `q` live in `shift`),
//! * `num` and `den` are coprime over Q and their integer contents are coprime.
//!
//! Equality of values is therefore structural equality.

mod complex;
mod parse;
mod poly;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use complex::CScalar;
pub use parse::parse_rational;
pub use poly::IntPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: IntPoly,
    shift: i64,
    den: IntPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field operation dispatch; division by zero is reported as an error.
pub fn arith(a: &QScalar, b: &QScalar, op: ArithOp) -> Result<QScalar> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.checked_div(b),
    }
}

/// The q-integer `b_i = (q^i - q^-i) / (q - q^-1)` as a Laurent polynomial in
/// the indeterminate.
pub fn qint(i: i64) -> QScalar {
    qint_at(i, &QScalar::q())
}

/// The q-integer evaluated at a given value of the deformation parameter.
/// Uses the expanded form `q^(i-1) + q^(i-3) + ... + q^(1-i)`, which stays
/// regular at `q = 1`.
pub fn qint_at(i: i64, q: &QScalar) -> QScalar {
    if i == 0 {
        return QScalar::zero();
    }
    let n = i.abs();
    let mut acc = QScalar::zero();
    for k in 0..n {
        acc += &q.pow(n - 1 - 2 * k);
    }
    if i < 0 {
        -acc
    } else {
        acc
    }
}

impl QScalar {
    pub fn zero() -> Self {
        Self { num: IntPoly::zero(), shift: 0, den: IntPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self { num: IntPoly::one(), shift: 1, den: IntPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        Self { num: IntPoly::constant(n), shift: 0, den: IntPoly::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::canonical(
            IntPoly::constant(r.numer().clone()),
            0,
            IntPoly::constant(r.denom().clone()),
        )
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(&BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Laurent polynomial `sum_k coeffs[k] q^(low + k)`.
    pub fn laurent(coeffs: &[i64], low: i64) -> Self {
        Self::canonical(IntPoly::from_i64s(coeffs), low, IntPoly::one())
    }

    /// Build `num * q^shift / den` and bring it to canonical form.
    pub fn from_parts(num: IntPoly, shift: i64, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, shift, den))
    }

    fn canonical(num: IntPoly, shift: i64, den: IntPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let kn = num.low_order();
        let kd = den.low_order();
        let mut num = if kn > 0 { num.shift_down(kn) } else { num };
        let mut den = if kd > 0 { den.shift_down(kd) } else { den };
        let shift = shift + kn as i64 - kd as i64;
        if !den.is_constant() {
            let g = num.gcd(&den);
            if !g.is_constant() {
                num = num.exact_div(&g);
                den = den.exact_div(&g);
            }
        }
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        if den.lead().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Self { num, shift, den }
    }

    /// Idempotent re-normalization; every constructor already returns the
    /// canonical form, so this is only useful for tests and external parts.
    pub fn canonicalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.shift, self.den.clone())
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the value does not depend on `q`.
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.shift == 0 && self.num.is_constant() && self.den.is_constant())
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial
    /// with integer coefficients.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if !self.is_constant() {
            return None;
        }
        Some(BigRational::new(self.num.coeffs()[0].clone(), self.den.coeffs()[0].clone()))
    }

    pub fn weight(&self) -> usize {
        self.num.weight() + self.den.weight()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), -self.shift, self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert (and fail on zero).
    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return Self::one();
        }
        if self.num.is_one() && self.den.is_one() {
            // pure power of q
            return Self { num: IntPoly::one(), shift: self.shift * e, den: IntPoly::one() };
        }
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Exact value at `q = q0`.
    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational> {
        if q0.is_zero() {
            return Err(Error::ZeroPoint);
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole(q0.to_string()));
        }
        let n = self.num.eval(q0);
        let p = pow_rational(q0, self.shift);
        Ok(n * p / d)
    }

    /// Specialize `q` to a rational value, keeping the result as a constant
    /// scalar.
    pub fn substitute(&self, q0: &BigRational) -> Result<Self> {
        self.eval_at(q0).map(|r| Self::from_rational(&r))
    }

    /// Substitute an arbitrary scalar for `q`.
    pub fn compose(&self, q: &Self) -> Result<Self> {
        let n = eval_poly_at(&self.num, q);
        let d = eval_poly_at(&self.den, q);
        if d.is_zero() {
            return Err(Error::Pole(q.to_string()));
        }
        if q.is_zero() && self.shift < 0 {
            return Err(Error::ZeroPoint);
        }
        Ok(&(&n * &q.pow(self.shift)) * &d.inv()?)
    }
}

fn eval_poly_at(p: &IntPoly, q: &QScalar) -> QScalar {
    let mut acc = QScalar::zero();
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * q) + &QScalar::from_bigint(c.clone());
    }
    acc
}

fn pow_rational(x: &BigRational, e: i64) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

impl Default for QScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<&BigRational> for QScalar {
    fn from(r: &BigRational) -> Self {
        Self::from_rational(r)
    }
}

fn add_impl(a: &QScalar, b: &QScalar) -> QScalar {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let m = a.shift.min(b.shift);
    let an = a.num.shift_up((a.shift - m) as usize);
    let bn = b.num.shift_up((b.shift - m) as usize);
    if a.den == b.den {
        QScalar::canonical(an.add(&bn), m, a.den.clone())
    } else {
        let num = an.mul(&b.den).add(&bn.mul(&a.den));
        QScalar::canonical(num, m, a.den.mul(&b.den))
    }
}

fn mul_impl(a: &QScalar, b: &QScalar) -> QScalar {
    if a.is_zero() || b.is_zero() {
        return QScalar::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        // product of Laurent polynomials is already canonical up to sign/content
        let num = a.num.mul(&b.num);
        return QScalar { num, shift: a.shift + b.shift, den: IntPoly::one() };
    }
    QScalar::canonical(a.num.mul(&b.num), a.shift + b.shift, a.den.mul(&b.den))
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar { num: self.num.neg(), shift: self.shift, den: self.den.clone() }
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&QScalar> for &QScalar {
            type Output = QScalar;
            fn $method(self, rhs: &QScalar) -> QScalar {
                $body(self, rhs)
            }
        }
        impl $trait<QScalar> for QScalar {
            type Output = QScalar;
            fn $method(self, rhs: QScalar) -> QScalar {
                $body(&self, &rhs)
            }
        }
        impl $trait<&QScalar> for QScalar {
            type Output = QScalar;
            fn $method(self, rhs: &QScalar) -> QScalar {
                $body(&self, rhs)
            }
        }
        impl $trait<QScalar> for &QScalar {
            type Output = QScalar;
            fn $method(self, rhs: QScalar) -> QScalar {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, |a: &QScalar, b: &QScalar| add_impl(a, &-b));
forward_binop!(Mul, mul, mul_impl);
// Panics on a zero divisor, like integer division; use `checked_div` for a
// fallible version.
forward_binop!(Div, div, |a: &QScalar, b: &QScalar| a
    .checked_div(b)
    .expect("QScalar division by zero"));

impl AddAssign<&QScalar> for QScalar {
    fn add_assign(&mut self, rhs: &QScalar) {
        *self = add_impl(self, rhs);
    }
}

impl SubAssign<&QScalar> for QScalar {
    fn sub_assign(&mut self, rhs: &QScalar) {
        *self = add_impl(self, &-rhs);
    }
}

impl MulAssign<&QScalar> for QScalar {
    fn mul_assign(&mut self, rhs: &QScalar) {
        *self = mul_impl(self, rhs);
    }
}

impl std::iter::Sum for QScalar {
    fn sum<I: Iterator<Item = QScalar>>(iter: I) -> Self {
        iter.fold(QScalar::zero(), |acc, x| &acc + &x)
    }
}

fn render_laurent(p: &IntPoly, shift: i64) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let e = i as i64 + shift;
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let qpart = match e {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{e}"),
        };
        if qpart.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&qpart);
        } else {
            out.push_str(&format!("{mag}*{qpart}"));
        }
    }
    out
}

fn term_count(p: &IntPoly) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = render_laurent(&self.num, self.shift);
        if self.den.is_one() {
            return f.write_str(&num);
        }
        let num = if term_count(&self.num) > 1 { format!("({num})") } else { num };
        let den = render_laurent(&self.den, 0);
        if self.den.is_constant() {
            write!(f, "{num}/{den}")
        } else {
            write!(f, "{num}/({den})")
        }
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QScalar({self})")
    }
}

impl std::str::FromStr for QScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_qscalar(s)
    }
}
