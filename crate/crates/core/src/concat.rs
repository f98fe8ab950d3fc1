//! Decimal concatenation `a∘b = 10^(δ(b)+1)·a + b` and the identity
//! `(y+1)/(x+1) = (x∘(y+1)) / (y∘(x+1))`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{domain, Error, Result};
use crate::numeric::{digit_count_unchecked, pow10};

pub fn concatenate(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if !a.is_positive() || !b.is_positive() {
        return Err(domain(format!(
            "concatenation needs positive operands, got {a} and {b}"
        )));
    }
    Ok(a * pow10(digit_count_unchecked(b) + 1) + b)
}

fn check_pair(x: &BigInt, y: &BigInt) -> Result<()> {
    if y.is_zero() || x == y {
        return Err(Error::Degenerate {
            x: x.to_string(),
            y: y.to_string(),
        });
    }
    if y.is_negative() || x < y {
        return Err(domain(format!("need x > y >= 1, got x = {x}, y = {y}")));
    }
    Ok(())
}

/// Checks the concatenation identity by cross-multiplication.
pub fn identity_holds(x: &BigInt, y: &BigInt) -> Result<bool> {
    check_pair(x, y)?;
    let x1 = x + 1u32;
    let y1 = y + 1u32;
    let lhs = &y1 * concatenate(y, &x1)?;
    let rhs = &x1 * concatenate(x, &y1)?;
    Ok(lhs == rhs)
}

/// The equivalent arithmetic form: `x(x+1) = 10y(y+1)` and `δ(x+1) = δ(y+1) + 1`.
pub fn lemma1_check(x: &BigInt, y: &BigInt) -> Result<bool> {
    check_pair(x, y)?;
    let x1 = x + 1u32;
    let y1 = y + 1u32;
    if x * &x1 != 10u32 * y * &y1 {
        return Ok(false);
    }
    Ok(digit_count_unchecked(&x1) == digit_count_unchecked(&y1) + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: u64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn concatenation_examples() {
        assert_eq!(concatenate(&b(783), &b(56)).unwrap(), b(78356));
        assert_eq!(concatenate(&b(20), &b(7)).unwrap(), b(207));
        assert_eq!(concatenate(&b(1), &b(1)).unwrap(), b(11));
        assert_eq!(concatenate(&b(5), &b(100)).unwrap(), b(5100));
        assert!(concatenate(&b(0), &b(1)).is_err());
        assert!(concatenate(&BigInt::from(-3), &b(1)).is_err());
    }

    #[test]
    fn identity_examples() {
        assert!(identity_holds(&b(20), &b(6)).unwrap());
        assert!(identity_holds(&b(175), &b(55)).unwrap());
        // 7·(6∘22) = 7·622 = 4354 against 22·(21∘7) = 22·217 = 4774
        assert!(!identity_holds(&b(21), &b(6)).unwrap());
    }

    #[test]
    fn lemma_examples() {
        assert!(lemma1_check(&b(20), &b(6)).unwrap());
        assert!(!lemma1_check(&b(4), &b(1)).unwrap());
        assert!(!lemma1_check(&b(39), &b(12)).unwrap());
    }

    #[test]
    fn excluded_cases_get_their_own_error() {
        assert!(matches!(
            identity_holds(&b(5), &b(0)),
            Err(Error::Degenerate { .. })
        ));
        assert!(matches!(
            identity_holds(&b(5), &b(5)),
            Err(Error::Degenerate { .. })
        ));
        assert!(matches!(
            lemma1_check(&b(5), &b(5)),
            Err(Error::Degenerate { .. })
        ));
        assert!(matches!(
            identity_holds(&b(3), &b(5)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            identity_holds(&b(3), &BigInt::from(-2)),
            Err(Error::Domain(_))
        ));
    }
}
