//! Exact rationals with an inline fast path.
//!
//! Values whose numerator and denominator fit in an `i64` are stored inline and
//! combined through `i128` intermediates; anything larger falls back to
//! [`BigRational`]. The representation is canonical: a value is `Small` exactly
//! when it fits, so structural equality is numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Q(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced, denominator > 0, both within `-i64::MAX..=i64::MAX`.
    Small(i64, i64),
    Big(BigRational),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn fits(v: i128) -> bool {
    v >= -(i64::MAX as i128) && v <= i64::MAX as i128
}

impl Q {
    pub fn zero() -> Self {
        Q(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Q(Repr::Small(1, 1))
    }

    pub fn from_int(v: i64) -> Self {
        if v == i64::MIN {
            return Q::from_big(BigRational::from_integer(BigInt::from(v)));
        }
        Q(Repr::Small(v, 1))
    }

    /// `num / den`; panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Q::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let (mut n, mut d) = if den < 0 { (-num, -den) } else { (num, den) };
        if n == 0 {
            return Q::zero();
        }
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        if fits(n) && fits(d) {
            Q(Repr::Small(n as i64, d as i64))
        } else {
            Q(Repr::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))
        }
    }

    pub fn from_big(r: BigRational) -> Self {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN && d != i64::MIN {
                return Q(Repr::Small(n, d));
            }
        }
        Q(Repr::Big(r))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn abs(&self) -> Q {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Q {
        match &self.0 {
            Repr::Small(0, _) => panic!("division by zero"),
            Repr::Small(n, d) => Q::from_i128(*d as i128, *n as i128),
            Repr::Big(r) => Q::from_big(r.recip()),
        }
    }

    /// Integer value if this is an integer small enough for `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    /// `self - a * b`, the inner step of every reduction.
    pub fn sub_mul(&self, a: &Q, b: &Q) -> Q {
        if let (Repr::Small(n0, d0), Repr::Small(n1, d1), Repr::Small(n2, d2)) =
            (&self.0, &a.0, &b.0)
        {
            // n1*n2 and d1*d2 fit i128; reduce before combining with self.
            let pn = *n1 as i128 * *n2 as i128;
            let pd = *d1 as i128 * *d2 as i128;
            let g = gcd_u128(pn.unsigned_abs(), pd as u128).max(1) as i128;
            let (pn, pd) = (pn / g, pd / g);
            if fits(pn) && fits(pd) {
                return Q(Repr::Small(*n0, *d0)) - Q(Repr::Small(pn as i64, pd as i64));
            }
        }
        self - &(a * b)
    }
}

impl Default for Q {
    fn default() -> Self {
        Q::zero()
    }
}

impl From<i64> for Q {
    fn from(v: i64) -> Self {
        Q::from_int(v)
    }
}

impl From<BigInt> for Q {
    fn from(v: BigInt) -> Self {
        Q::from_big(BigRational::from_integer(v))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $small:expr, $big:expr) => {
        impl<'a> $trait<&'a Q> for &'a Q {
            type Output = Q;
            fn $method(self, rhs: &'a Q) -> Q {
                match (&self.0, &rhs.0) {
                    (Repr::Small(a, b), Repr::Small(c, d)) => {
                        $small(*a as i128, *b as i128, *c as i128, *d as i128)
                    }
                    _ => Q::from_big($big(self.to_big(), rhs.to_big())),
                }
            }
        }
        impl $trait<Q> for Q {
            type Output = Q;
            fn $method(self, rhs: Q) -> Q {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Q> for Q {
            type Output = Q;
            fn $method(self, rhs: &'a Q) -> Q {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(
    Add,
    add,
    |a: i128, b: i128, c: i128, d: i128| {
        if b == d {
            Q::from_i128(a + c, b)
        } else {
            Q::from_i128(a * d + c * b, b * d)
        }
    },
    |x: BigRational, y: BigRational| x + y
);
binop!(
    Sub,
    sub,
    |a: i128, b: i128, c: i128, d: i128| {
        if b == d {
            Q::from_i128(a - c, b)
        } else {
            Q::from_i128(a * d - c * b, b * d)
        }
    },
    |x: BigRational, y: BigRational| x - y
);
binop!(
    Mul,
    mul,
    |a: i128, b: i128, c: i128, d: i128| Q::from_i128(a * c, b * d),
    |x: BigRational, y: BigRational| x * y
);
binop!(
    Div,
    div,
    |a: i128, b: i128, c: i128, d: i128| {
        assert!(c != 0, "division by zero");
        Q::from_i128(a * d, b * c)
    },
    |x: BigRational, y: BigRational| {
        assert!(!y.is_zero(), "division by zero");
        x / y
    }
);

impl Neg for &Q {
    type Output = Q;
    fn neg(self) -> Q {
        match &self.0 {
            Repr::Small(n, d) => Q(Repr::Small(-n, *d)),
            Repr::Big(r) => Q::from_big(-r.clone()),
        }
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        -&self
    }
}

impl PartialOrd for Q {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Q {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Q {
    type Err = String;

    /// Accepts `a` or `a/b` with optional sign on `a`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n = BigInt::from_str(n).map_err(|e| format!("bad numerator `{n}`: {e}"))?;
        let d = BigInt::from_str(d).map_err(|e| format!("bad denominator `{d}`: {e}"))?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Q::from_big(BigRational::new(n, d)))
    }
}

/// The positive factor `f` such that `f * values` are coprime integers
/// (1 for an all-zero input).
pub fn primitive_factor<'a>(values: impl IntoIterator<Item = &'a Q>) -> Q {
    let vals: Vec<&Q> = values.into_iter().collect();
    let mut g: u64 = 0;
    let mut small_ints = true;
    for v in &vals {
        match v.0 {
            Repr::Small(n, 1) => g = g.gcd(&n.unsigned_abs()),
            _ => {
                small_ints = false;
                break;
            }
        }
    }
    if small_ints {
        return if g <= 1 { Q::one() } else { Q::new(1, g as i64) };
    }
    let den = common_denominator(vals.iter().copied());
    let mut num = BigInt::zero();
    for v in &vals {
        num = num.gcd(&(v.numer() * (&den / v.denom())));
    }
    if num.is_zero() {
        return Q::one();
    }
    Q::from_big(BigRational::new(den, num))
}

/// Least common multiple of the denominators of `values`.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Q>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(&q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_small_and_big() {
        let big = Q::from_int(i64::MAX) * Q::from_int(4);
        let back = &big / &Q::from_int(4);
        assert_eq!(back, Q::from_int(i64::MAX));
        assert_eq!(Q::new(6, -4), Q::new(-3, 2));
        assert_eq!("12/-8".parse::<Q>().unwrap(), Q::new(-3, 2));
        assert_eq!(Q::from_int(i64::MIN).to_string(), i64::MIN.to_string());
    }

    #[test]
    fn sub_mul_matches_naive() {
        let a = Q::new(i64::MAX, 3);
        let b = Q::new(7, i64::MAX - 1);
        let c = Q::new(-5, 11);
        assert_eq!(c.sub_mul(&a, &b), &c - &(&a * &b));
    }

    fn arb_q() -> impl Strategy<Value = Q> {
        prop_oneof![
            (-50i64..50, 1i64..20).prop_map(|(n, d)| Q::new(n, d)),
            (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Q::new(n.max(-i64::MAX), d)),
        ]
    }

    proptest! {
        #[test]
        fn agrees_with_bigrational(a in arb_q(), b in arb_q()) {
            prop_assert_eq!((&a + &b).to_big(), a.to_big() + b.to_big());
            prop_assert_eq!((&a - &b).to_big(), a.to_big() - b.to_big());
            prop_assert_eq!((&a * &b).to_big(), a.to_big() * b.to_big());
            if !b.is_zero() {
                prop_assert_eq!((&a / &b).to_big(), a.to_big() / b.to_big());
            }
            prop_assert_eq!(a.cmp(&b), a.to_big().cmp(&b.to_big()));
        }
    }
}
