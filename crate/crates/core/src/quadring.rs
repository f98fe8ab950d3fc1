//! Exact arithmetic in `ℤ[√10]`.
//!
//! Elements are `a + b√10` with big-integer coordinates. The fundamental unit
//! is `ε = 3 + √10` (norm `-1`); its square `φ = 19 + 6√10` has norm `1` and
//! advances every solution strand by one step.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Result};
use crate::numeric::integer_sqrt;

/// An element `a + b√10` of `ℤ[√10]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn one() -> Self {
        QuadInt::new(1, 0)
    }

    /// `ε = 3 + √10`.
    pub fn epsilon() -> Self {
        QuadInt::new(3, 1)
    }

    /// `φ = ε² = 19 + 6√10`.
    pub fn phi() -> Self {
        QuadInt::new(19, 6)
    }

    pub fn conj(&self) -> Self {
        QuadInt {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// `a² - 10b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - 10u32 * &self.b * &self.b
    }

    /// Binary exponentiation.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = QuadInt::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies by `√10`: `(a + b√10)·√10 = 10b + a√10`.
    pub fn times_sqrt10(&self) -> Self {
        QuadInt {
            a: 10u32 * &self.b,
            b: self.a.clone(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        QuadInt {
            a: &self.a * k,
            b: &self.b * k,
        }
    }

    /// Exact sign of the real number `a + b√10`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.sign_cmp();
        let sb = self.b.sign_cmp();
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            // opposite signs: the larger magnitude wins, compared as a² vs 10b²
            _ => match (&self.a * &self.a).cmp(&(10u32 * &self.b * &self.b)) {
                Ordering::Greater => sa,
                Ordering::Less => sb,
                Ordering::Equal => unreachable!("√10 is irrational"),
            },
        }
    }

    /// Exact test of `|a + b√10| < bound`.
    pub fn abs_lt(&self, bound: &BigInt) -> bool {
        let below = self - &QuadInt::new(bound.clone(), 0);
        let above = self + &QuadInt::new(bound.clone(), 0);
        below.signum() == Ordering::Less && above.signum() == Ordering::Greater
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{}-{}√10", self.a, -&self.b)
        } else {
            write!(f, "{}+{}√10", self.a, self.b)
        }
    }
}

impl Mul for &QuadInt {
    type Output = QuadInt;
    fn mul(self, r: &QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a * &r.a + 10u32 * &self.b * &r.b,
            b: &self.a * &r.b + &self.b * &r.a,
        }
    }
}

impl Add for &QuadInt {
    type Output = QuadInt;
    fn add(self, r: &QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a + &r.a,
            b: &self.b + &r.b,
        }
    }
}

impl Sub for &QuadInt {
    type Output = QuadInt;
    fn sub(self, r: &QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a - &r.a,
            b: &self.b - &r.b,
        }
    }
}

impl Mul for QuadInt {
    type Output = QuadInt;
    fn mul(self, r: QuadInt) -> QuadInt {
        &self * &r
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt {
            a: -self.a,
            b: -self.b,
        }
    }
}

/// The real number `(p + q√10) / 40`.
///
/// Forty is the only denominator needed: `40·Aₖ` lies in `ℤ[√10]` for every
/// closed-form coefficient `Aₖ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledQuad {
    pub p: BigInt,
    pub q: BigInt,
}

impl ScaledQuad {
    pub const DENOMINATOR: u32 = 40;

    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        ScaledQuad {
            p: p.into(),
            q: q.into(),
        }
    }

    /// Reads `z / 40` for `z ∈ ℤ[√10]`.
    pub fn from_numerator(z: QuadInt) -> Self {
        ScaledQuad { p: z.a, q: z.b }
    }

    /// `⌊(p + q√10)/40⌋`, exactly.
    ///
    /// With `t = ⌊q√10⌋ = ⌊√(10q²)⌋` the fractional part of `q√10` is strictly
    /// inside `(0, 1)` for `q > 0`, so adding it to the integer `p + t` never
    /// reaches the next multiple of 40.
    pub fn floor(&self) -> Result<BigInt> {
        if self.q.is_negative() {
            return Err(domain(format!(
                "floor of (p + q√10)/40 needs q >= 0, got q = {}",
                self.q
            )));
        }
        let t = integer_sqrt(&(10u32 * &self.q * &self.q))?;
        Ok((&self.p + t).div_floor(&BigInt::from(Self::DENOMINATOR)))
    }
}

impl fmt::Display for ScaledQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}√10)/40", self.p, self.q)
    }
}

pub fn is_unit(z: &QuadInt) -> bool {
    z.norm().abs().is_one()
}
