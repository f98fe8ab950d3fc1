//! Arbitrary-precision integer helpers: integer square root, decimal digit
//! counts, and a small exact rational type.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Result};

/// Returns `⌊√n⌋`.
///
/// Newton iteration from an initial guess above the root; the iterates decrease
/// monotonically until they stop, and a final correction pins the result to
/// `r² ≤ n < (r+1)²`.
pub fn integer_sqrt(n: &BigInt) -> Result<BigInt> {
    if n.is_negative() {
        return Err(domain(format!("integer_sqrt of negative value {n}")));
    }
    if n.is_zero() {
        return Ok(BigInt::zero());
    }
    if let Some(small) = n.to_u64() {
        return Ok(BigInt::from(small.isqrt()));
    }

    // 2^ceil(bits/2) >= sqrt(n)
    let shift = n.bits().div_ceil(2);
    let mut x = BigInt::one() << shift;
    loop {
        let next = (&x + n / &x) >> 1u32;
        if next >= x {
            break;
        }
        x = next;
    }
    while &x * &x > *n {
        x -= 1u32;
    }
    loop {
        let up = &x + 1u32;
        if &up * &up <= *n {
            x = up;
        } else {
            break;
        }
    }
    Ok(x)
}

/// `⌊log₁₀ n⌋`, i.e. one less than the number of decimal digits of `n`.
pub fn digit_count(n: &BigInt) -> Result<u32> {
    if !n.is_positive() {
        return Err(domain(format!("digit_count requires n >= 1, got {n}")));
    }
    Ok(digit_count_unchecked(n))
}

pub(crate) fn digit_count_unchecked(n: &BigInt) -> u32 {
    match n.to_u64() {
        Some(small) => small.ilog10(),
        None => {
            let len = n.magnitude().to_str_radix(10).len();
            (len - 1) as u32
        }
    }
}

/// `10^e` as a big integer.
pub fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), e as usize)
}

/// An exact fraction kept in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BigRational {
    num: BigInt,
    den: BigInt,
}

impl BigRational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(domain("rational with zero denominator"));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: BigInt, den: BigInt) -> Self {
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() || g.is_zero() {
            (num, den)
        } else {
            (num / &g, den / &g)
        };
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if num.is_zero() {
            den = BigInt::one();
        }
        BigRational { num, den }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        BigRational {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn abs(&self) -> Self {
        BigRational {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    /// Truncated decimal expansion `0.d₁d₂…d_digits` of a value in `(0, 1)`.
    pub fn decimal_expand(&self, digits: usize) -> Result<String> {
        decimal_expand(self, digits)
    }
}

impl fmt::Display for BigRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Exact comparison by cross-multiplication.
pub fn rational_cmp(l: &BigRational, r: &BigRational) -> Ordering {
    (&l.num * &r.den).cmp(&(&r.num * &l.den))
}

impl PartialOrd for BigRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigRational {
    fn cmp(&self, other: &Self) -> Ordering {
        rational_cmp(self, other)
    }
}

impl Add for &BigRational {
    type Output = BigRational;
    fn add(self, rhs: &BigRational) -> BigRational {
        BigRational::reduce(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &BigRational {
    type Output = BigRational;
    fn sub(self, rhs: &BigRational) -> BigRational {
        BigRational::reduce(
            &self.num * &rhs.den - &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &BigRational {
    type Output = BigRational;
    fn mul(self, rhs: &BigRational) -> BigRational {
        BigRational::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for BigRational {
    type Output = BigRational;
    fn neg(self) -> BigRational {
        BigRational {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BigRational {
            type Output = BigRational;
            fn $m(self, rhs: BigRational) -> BigRational {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Long division of `r`, truncated after `digits` digits. Never rounds.
pub fn decimal_expand(r: &BigRational, digits: usize) -> Result<String> {
    if digits == 0 {
        return Err(domain("decimal_expand needs at least one digit"));
    }
    if r.num.sign() != Sign::Plus || r.num >= r.den {
        return Err(domain(format!(
            "decimal_expand requires 0 < r < 1, got {r}"
        )));
    }
    let mut out = String::with_capacity(digits + 2);
    out.push_str("0.");
    let mut rem = r.num.clone();
    for _ in 0..digits {
        rem *= 10u32;
        let (d, next) = rem.div_rem(&r.den);
        // d is a single digit since rem < den before scaling
        out.push(char::from(b'0' + d.to_u8().expect("digit below ten")));
        rem = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n, d).unwrap()
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(integer_sqrt(&big(10)).unwrap(), big(3));
        assert_eq!(integer_sqrt(&big(0)).unwrap(), big(0));
        // schoolbook: 1109² = 1229881 <= 1232010 < 1232100 = 1110²
        let n = big(10 * 351 * 351);
        let mut r = 0i64;
        while (r + 1) * (r + 1) <= 1_232_010 {
            r += 1;
        }
        assert_eq!(r, 1109);
        assert_eq!(integer_sqrt(&n).unwrap(), big(r));
    }

    #[test]
    fn sqrt_rejects_negative() {
        assert!(matches!(
            integer_sqrt(&big(-1)),
            Err(crate::Error::Domain(_))
        ));
    }

    #[test]
    fn sqrt_large_perfect_squares() {
        let base = pow10(200) + 12345;
        let sq = &base * &base;
        assert_eq!(integer_sqrt(&sq).unwrap(), base);
        assert_eq!(integer_sqrt(&(&sq - 1)).unwrap(), &base - 1);
        assert_eq!(integer_sqrt(&(&sq + 1)).unwrap(), base);
    }

    #[test]
    fn digit_count_examples() {
        assert_eq!(digit_count(&big(783)).unwrap(), 2);
        assert_eq!(digit_count(&big(1)).unwrap(), 0);
        assert_eq!(digit_count(&big(29601)).unwrap(), 4);
        assert_eq!(digit_count(&pow10(30)).unwrap(), 30);
        assert_eq!(digit_count(&(pow10(30) - 1)).unwrap(), 29);
        assert!(digit_count(&big(0)).is_err());
        assert!(digit_count(&big(-5)).is_err());
    }

    #[test]
    fn decimal_expand_examples() {
        assert_eq!(decimal_expand(&rat(1, 3), 10).unwrap(), "0.3333333333");
        assert_eq!(decimal_expand(&rat(7, 22), 10).unwrap(), "0.3181818181");
        assert_eq!(decimal_expand(&rat(1, 2), 3).unwrap(), "0.500");
        assert_eq!(decimal_expand(&rat(2, 3), 4).unwrap(), "0.6666");
    }

    #[test]
    fn decimal_expand_rejects_out_of_range() {
        assert!(decimal_expand(&rat(0, 1), 3).is_err());
        assert!(decimal_expand(&rat(1, 1), 3).is_err());
        assert!(decimal_expand(&rat(-1, 3), 3).is_err());
        assert!(decimal_expand(&rat(5, 3), 3).is_err());
        assert!(decimal_expand(&rat(1, 3), 0).is_err());
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(rational_cmp(&rat(1, 3), &rat(7, 22)), Ordering::Greater);
        assert_eq!(rational_cmp(&rat(1, 2), &rat(1, 2)), Ordering::Equal);
        assert_eq!(rational_cmp(&rat(25, 79), &rat(37, 117)), Ordering::Greater);
    }

    #[test]
    fn normalizes_sign_and_gcd() {
        let r = rat(207, -621);
        assert_eq!(r.numer(), &big(-1));
        assert_eq!(r.denom(), &big(3));
        assert_eq!(rat(0, -7), rat(0, 1));
        assert!(BigRational::new(1, 0).is_err());
    }
}
