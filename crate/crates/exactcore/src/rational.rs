//! `Q`: exact rationals with an `i64` fast path and a `BigRational` fallback.
//!
//! Canonical form: denominator positive, fraction reduced, and the small
//! variant is used whenever both parts fit in an `i64`. Equality and hashing
//! are therefore structural.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Q {
    S(i64, i64),
    B(Box<BigRational>),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Q {
    pub const ZERO: Q = Q::S(0, 1);
    pub const ONE: Q = Q::S(1, 1);

    pub fn int(n: i64) -> Q {
        Q::S(n, 1)
    }

    /// `n/d`; panics on `d == 0`.
    pub fn new(n: i64, d: i64) -> Q {
        assert!(d != 0, "zero denominator");
        Q::from_i128(n as i128, d as i128)
    }

    pub fn from_i128(n: i128, d: i128) -> Q {
        debug_assert!(d != 0);
        if n == 0 {
            return Q::ZERO;
        }
        let g = gcd_u128(n.unsigned_abs(), d.unsigned_abs()) as i128;
        let (mut n, mut d) = (n / g, d / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        if n > i64::MIN as i128 && n <= i64::MAX as i128 && d <= i64::MAX as i128 {
            Q::S(n as i64, d as i64)
        } else {
            Q::B(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))
        }
    }

    pub fn from_big(r: BigRational) -> Q {
        // BigRational arithmetic keeps values reduced with positive denominator.
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Q::S(n, d);
            }
        }
        Q::B(Box::new(r))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Q::S(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Q::B(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Q::S(n, _) => BigInt::from(*n),
            Q::B(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Q::S(_, d) => BigInt::from(*d),
            Q::B(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Q::S(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Q::S(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Q::S(_, d) => *d == 1,
            Q::B(b) => b.is_integer(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Q::S(n, _) => n.signum() as i32,
            Q::B(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn abs(&self) -> Q {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Option<Q> {
        match self {
            Q::S(0, _) => None,
            Q::S(n, d) => Some(Q::from_i128(*d as i128, *n as i128)),
            Q::B(b) => Some(Q::from_big(b.recip())),
        }
    }

    pub fn pow(&self, e: u32) -> Q {
        let mut acc = Q::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Integer value if this is an integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Q::S(n, 1) => Some(*n),
            _ => None,
        }
    }

    /// Rough size measure used for pivot selection.
    pub fn height(&self) -> u64 {
        match self {
            Q::S(n, d) => n.unsigned_abs().max(*d as u64),
            Q::B(b) => {
                let bits = b.numer().bits().max(b.denom().bits());
                u64::MAX / 2 + bits
            }
        }
    }

    fn binop(a: &Q, b: &Q, op: char) -> Q {
        if let (Q::S(an, ad), Q::S(bn, bd)) = (a, b) {
            let (an, ad, bn, bd) = (*an as i128, *ad as i128, *bn as i128, *bd as i128);
            return match op {
                '+' => {
                    if ad == bd {
                        Q::from_i128(an + bn, ad)
                    } else {
                        Q::from_i128(an * bd + bn * ad, ad * bd)
                    }
                }
                '-' => {
                    if ad == bd {
                        Q::from_i128(an - bn, ad)
                    } else {
                        Q::from_i128(an * bd - bn * ad, ad * bd)
                    }
                }
                '*' => Q::from_i128(an * bn, ad * bd),
                '/' => {
                    assert!(bn != 0, "division by zero");
                    Q::from_i128(an * bd, ad * bn)
                }
                _ => unreachable!(),
            };
        }
        let (x, y) = (a.to_big(), b.to_big());
        Q::from_big(match op {
            '+' => x + y,
            '-' => x - y,
            '*' => x * y,
            '/' => {
                assert!(!y.is_zero(), "division by zero");
                x / y
            }
            _ => unreachable!(),
        })
    }

    /// Least common multiple of denominators, as a rational integer.
    pub fn denom_lcm<'a>(it: impl IntoIterator<Item = &'a Q>) -> BigInt {
        let mut l = BigInt::one();
        for q in it {
            let d = q.denom();
            if !d.is_one() {
                l = l.lcm(&d);
            }
        }
        l
    }
}

impl Default for Q {
    fn default() -> Self {
        Q::ZERO
    }
}

impl From<i64> for Q {
    fn from(n: i64) -> Q {
        Q::int(n)
    }
}

impl From<i32> for Q {
    fn from(n: i32) -> Q {
        Q::int(n as i64)
    }
}

impl From<BigInt> for Q {
    fn from(n: BigInt) -> Q {
        Q::from_big(BigRational::from_integer(n))
    }
}

impl PartialOrd for Q {
    fn partial_cmp(&self, other: &Q) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Q {
    fn cmp(&self, other: &Q) -> Ordering {
        match (self, other) {
            (Q::S(a, b), Q::S(c, d)) => ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128))),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

macro_rules! q_binop {
    ($tr:ident, $m:ident, $c:expr) => {
        impl<'a, 'b> $tr<&'b Q> for &'a Q {
            type Output = Q;
            fn $m(self, rhs: &'b Q) -> Q {
                Q::binop(self, rhs, $c)
            }
        }
        impl $tr<Q> for Q {
            type Output = Q;
            fn $m(self, rhs: Q) -> Q {
                Q::binop(&self, &rhs, $c)
            }
        }
        impl<'b> $tr<&'b Q> for Q {
            type Output = Q;
            fn $m(self, rhs: &'b Q) -> Q {
                Q::binop(&self, rhs, $c)
            }
        }
        impl<'a> $tr<Q> for &'a Q {
            type Output = Q;
            fn $m(self, rhs: Q) -> Q {
                Q::binop(self, &rhs, $c)
            }
        }
    };
}
q_binop!(Add, add, '+');
q_binop!(Sub, sub, '-');
q_binop!(Mul, mul, '*');
q_binop!(Div, div, '/');

impl AddAssign<&Q> for Q {
    fn add_assign(&mut self, rhs: &Q) {
        *self = Q::binop(self, rhs, '+');
    }
}
impl SubAssign<&Q> for Q {
    fn sub_assign(&mut self, rhs: &Q) {
        *self = Q::binop(self, rhs, '-');
    }
}
impl MulAssign<&Q> for Q {
    fn mul_assign(&mut self, rhs: &Q) {
        *self = Q::binop(self, rhs, '*');
    }
}

impl Neg for &Q {
    type Output = Q;
    fn neg(self) -> Q {
        match self {
            Q::S(n, d) => Q::from_i128(-(*n as i128), *d as i128),
            Q::B(b) => Q::from_big(-(**b).clone()),
        }
    }
}
impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        -&self
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::S(n, 1) => write!(f, "{n}"),
            Q::S(n, d) => write!(f, "{n}/{d}"),
            Q::B(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, thiserror::Error)]
#[error("cannot parse rational from {0:?}")]
pub struct ParseQError(pub String);

impl FromStr for Q {
    type Err = ParseQError;
    fn from_str(s: &str) -> Result<Q, ParseQError> {
        let err = || ParseQError(s.to_string());
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Q::from_big(BigRational::new(n, d)))
    }
}

#[derive(Serialize, Deserialize)]
struct QJson {
    num: String,
    den: String,
}

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QJson { num: self.numer().to_string(), den: self.denom().to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let j = QJson::deserialize(d)?;
        format!("{}/{}", j.num, j.den).parse().map_err(D::Error::custom)
    }
}

/// Shorthand constructor used throughout the workspace.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_small() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(q(0, -5), Q::ZERO);
        assert_eq!(format!("{}", q(-6, 4)), "-3/2");
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Q::int(i64::MAX);
        let s = &big + &big;
        assert!(matches!(s, Q::B(_)));
        let back = &s - &big;
        assert_eq!(back, big);
        assert!(matches!(back, Q::S(..)));
        let p = &s * &s;
        assert_eq!(&p / &s, s);
    }

    #[test]
    fn json_roundtrip() {
        let x = q(-7, 3);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"num":"-7","den":"3"}"#);
        let y: Q = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn parse() {
        assert_eq!("5/7".parse::<Q>().unwrap(), q(5, 7));
        assert_eq!("-4".parse::<Q>().unwrap(), Q::int(-4));
        assert!("1/0".parse::<Q>().is_err());
    }

    fn arb_q() -> impl Strategy<Value = Q> {
        (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Q::new(n, d))
    }

    proptest! {
        #[test]
        fn matches_bigrational(a in arb_q(), b in arb_q()) {
            let (x, y) = (a.to_big(), b.to_big());
            prop_assert_eq!((&a + &b).to_big(), &x + &y);
            prop_assert_eq!((&a - &b).to_big(), &x - &y);
            prop_assert_eq!((&a * &b).to_big(), &x * &y);
            if !b.is_zero() {
                prop_assert_eq!((&a / &b).to_big(), &x / &y);
            }
            prop_assert_eq!(a.cmp(&b), x.cmp(&y));
        }

        #[test]
        fn field_laws(a in arb_q(), b in arb_q(), c in arb_q()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
    }
}
