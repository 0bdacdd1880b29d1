//! Exact scalar fields: the rationals and prime fields.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact field of characteristic 0 or a prime `p`.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    /// 0 for the rationals, `p` for `F_p`.
    fn characteristic() -> u64;
    /// Integer value, when the element is (the image of) a small integer.
    fn to_i64(&self) -> Option<i64>;
    /// Parse `"a"` or `"a/b"`.
    fn parse(s: &str) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
}

/// Exact rational number.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Add for Rational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Rational(self.0 + o.0)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, o: Self) {
        self.0 += o.0;
    }
}

impl Sub for Rational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Rational(self.0 - o.0)
    }
}

impl Mul for Rational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Rational(self.0 * o.0)
    }
}

impl Neg for Rational {
    type Output = Self;
    fn neg(self) -> Self {
        Rational(-self.0)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn from_i64(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
    fn characteristic() -> u64 {
        0
    }
    fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }
    fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((a, b)) => {
                let a: BigInt = a.trim().parse().ok()?;
                let b: BigInt = b.trim().parse().ok()?;
                if b.is_zero() {
                    return None;
                }
                Some(Rational(BigRational::new(a, b)))
            }
            None => Some(Rational(BigRational::from_integer(s.parse().ok()?))),
        }
    }
}

/// Element of the prime field `F_P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u128;
        let mut acc: u128 = 1;
        let p = P as u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp(acc as u64)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp(((self.0 as u128 + o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
    fn characteristic() -> u64 {
        P
    }
    fn to_i64(&self) -> Option<i64> {
        // symmetric representative
        let v = self.0 as i64;
        if self.0 > P / 2 {
            Some(v - P as i64)
        } else {
            Some(v)
        }
    }
    fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((a, b)) => {
                let a = Fp::<P>::new(a.trim().parse::<i64>().ok()?);
                let b = Fp::<P>::new(b.trim().parse::<i64>().ok()?);
                a.div(&b)
            }
            None => Some(Fp::new(s.parse::<i64>().ok()?)),
        }
    }
}

/// Characteristics accepted at runtime (CLI `--char`).
pub const SUPPORTED_PRIMES: &[u64] = &[7, 11, 13, 17, 19, 23, 29, 31, 101, 1009, 10007, 2147483647];

/// Run `$body` with the type alias `$F` bound to the field of characteristic `$p`.
///
/// Evaluates to `Err(p)` when the characteristic is not supported.
#[macro_export]
macro_rules! with_field {
    ($p:expr, $F:ident => $body:expr) => {{
        match $p {
            0 => {
                type $F = $crate::field::Rational;
                Ok($body)
            }
            7 => {
                type $F = $crate::field::Fp<7>;
                Ok($body)
            }
            11 => {
                type $F = $crate::field::Fp<11>;
                Ok($body)
            }
            13 => {
                type $F = $crate::field::Fp<13>;
                Ok($body)
            }
            17 => {
                type $F = $crate::field::Fp<17>;
                Ok($body)
            }
            19 => {
                type $F = $crate::field::Fp<19>;
                Ok($body)
            }
            23 => {
                type $F = $crate::field::Fp<23>;
                Ok($body)
            }
            29 => {
                type $F = $crate::field::Fp<29>;
                Ok($body)
            }
            31 => {
                type $F = $crate::field::Fp<31>;
                Ok($body)
            }
            101 => {
                type $F = $crate::field::Fp<101>;
                Ok($body)
            }
            1009 => {
                type $F = $crate::field::Fp<1009>;
                Ok($body)
            }
            10007 => {
                type $F = $crate::field::Fp<10007>;
                Ok($body)
            }
            2147483647 => {
                type $F = $crate::field::Fp<2147483647>;
                Ok($body)
            }
            other => Err(other),
        }
    }};
}

impl num_traits::Zero for Rational {
    fn zero() -> Self {
        <Rational as Field>::zero()
    }
    fn is_zero(&self) -> bool {
        Field::is_zero(self)
    }
}

impl num_traits::One for Rational {
    fn one() -> Self {
        <Rational as Field>::one()
    }
}

impl<const P: u64> num_traits::Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> num_traits::One for Fp<P> {
    fn one() -> Self {
        <Fp<P> as Field>::one()
    }
}
