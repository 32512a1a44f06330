//! Exact ground fields: the rationals and prime fields F_p.
//!
//! Every scalar carries enough information to do arithmetic on its own; the
//! [`Field`] value is needed only to manufacture constants (zero, one, small
//! integers) and random elements.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    /// Residue `value` modulo `p`, always reduced into `0..p`.
    P(u32, u32),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::P(n.rem_euclid(p as i64) as u32, p),
        }
    }

    /// A fraction `num/den` mapped into the field; fails when `den` vanishes.
    pub fn from_fraction(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::Parse {
                line: 0,
                col: 0,
                msg: "zero denominator".into(),
            });
        }
        match self {
            Field::Rationals => Ok(Scalar::Q(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let pm = BigInt::from(p);
                let n = ((num % &pm) + &pm) % &pm;
                let d = ((den % &pm) + &pm) % &pm;
                if d.is_zero() {
                    return Err(Error::Parse {
                        line: 0,
                        col: 0,
                        msg: format!("denominator divisible by the characteristic {p}"),
                    });
                }
                let n = Scalar::P(n.to_u32().unwrap(), p);
                let d = Scalar::P(d.to_u32().unwrap(), p);
                Ok(n * d.inv())
            }
        }
    }

    /// Parses `a`, `-a` or `a/b` with integer `a`, `b`.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let bad = || Error::Parse {
            line: 0,
            col: 0,
            msg: format!("bad scalar literal `{text}`"),
        };
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        self.from_fraction(&num, &den)
    }

    /// Random element; over the rationals a small integer in `[-range, range]`.
    pub fn random<R: Rng + ?Sized>(self, rng: &mut R, range: i64) -> Scalar {
        match self {
            Field::Rationals => self.from_i64(rng.gen_range(-range..=range)),
            Field::Prime(p) => Scalar::P(rng.gen_range(0..p), p),
        }
    }

    /// Every element of a prime field, in increasing residue order.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some((0..p).map(|v| Scalar::P(v, p)).collect()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F {p}"),
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::P(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::P(v, _) => *v == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rationals,
            Scalar::P(_, p) => Field::Prime(*p),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(q) => {
                assert!(!q.is_zero(), "inverse of zero");
                Scalar::Q(q.recip())
            }
            Scalar::P(v, p) => {
                assert!(*v != 0, "inverse of zero");
                Scalar::P(mod_pow(*v as u64, *p as u64 - 2, *p as u64) as u32, *p)
            }
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::P(..) => None,
        }
    }

    /// `self - a * b`, the inner step of every elimination loop.
    pub fn sub_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (Scalar::P(v, p), Scalar::P(x, _), Scalar::P(y, _)) => {
                let pp = *p as u64;
                let prod = (*x as u64) * (*y as u64) % pp;
                *v = ((*v as u64 + pp - prod) % pp) as u32;
            }
            (Scalar::Q(v), Scalar::Q(x), Scalar::Q(y)) => {
                *v -= x * y;
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::P(v, _) => write!(f, "{v}"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $qop:tt, $pop:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a $qop b),
                    (Scalar::P(a, p), Scalar::P(b, q)) => {
                        debug_assert_eq!(p, q, "mixed prime fields");
                        let f: fn(u64, u64, u64) -> u64 = $pop;
                        Scalar::P(f(*a as u64, *b as u64, *p as u64) as u32, *p)
                    }
                    _ => panic!("mixed-field arithmetic"),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, +, |a, b, p| (a + b) % p);
binop!(Sub, sub, -, |a, b, p| (a + p - b) % p);
binop!(Mul, mul, *, |a, b, p| a * b % p);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::P(a, p) => Scalar::P((*p - *a) % *p, *p),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => *a += b,
            (Scalar::P(a, p), Scalar::P(b, _)) => *a = ((*a as u64 + *b as u64) % *p as u64) as u32,
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => *a -= b,
            (Scalar::P(a, p), Scalar::P(b, _)) => {
                *a = ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(&a + &b, f.from_i64(1));
        assert_eq!(&a - &b, f.from_i64(5));
        assert_eq!(&a * &b, f.from_i64(1));
        assert_eq!(a.inv(), b);
        assert_eq!(-f.from_i64(2), f.from_i64(5));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
    }

    #[test]
    fn parse_fractions() {
        let q = Field::Rationals;
        assert_eq!(q.parse_scalar("-3/6").unwrap().to_string(), "-1/2");
        let f5 = Field::Prime(5);
        assert_eq!(f5.parse_scalar("1/2").unwrap(), f5.from_i64(3));
        assert!(f5.parse_scalar("1/5").is_err());
        assert!(q.parse_scalar("x").is_err());
    }
}
