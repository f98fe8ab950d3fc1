//! The sequence of all positive solutions of `x(x+1) = 10y(y+1)`.
//!
//! With `a = 2x+1`, `b = 2y+1` the equation becomes `a² - 10b² = -9`. The
//! solutions split into three strands; each strand is an orbit of
//! multiplication by `φ = 19 + 6√10`, which shifts the index by three:
//!
//! ```text
//! x_{n+3} = 19xₙ + 60yₙ + 39
//! y_{n+3} =  6xₙ + 19yₙ + 12
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{domain, Error, Result};
use crate::quadring::{QuadInt, ScaledQuad};

/// First three terms `(x₁,y₁), (x₂,y₂), (x₃,y₃)`.
pub const INITIAL: [(u32, u32); 3] = [(4, 1), (20, 6), (39, 12)];

/// First three odd solutions of `a² - 10b² = -9`.
pub const INITIAL_AB: [(u32, u32); 3] = [(9, 3), (41, 13), (79, 25)];

/// One term `(xₙ, yₙ)` of the solution sequence, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SolutionPair {
    pub index: u64,
    pub x: BigInt,
    pub y: BigInt,
}

impl SolutionPair {
    /// Builds a term after checking `x > y ≥ 1` and `x(x+1) = 10y(y+1)`.
    pub fn new(index: u64, x: BigInt, y: BigInt) -> Result<Self> {
        if index == 0 {
            return Err(domain("solution indices start at 1"));
        }
        let pair = SolutionPair { index, x, y };
        if !pair.satisfies_equation() || pair.y < BigInt::one() || pair.x <= pair.y {
            return Err(domain(format!(
                "({}, {}) is not a positive solution of x(x+1) = 10y(y+1)",
                pair.x, pair.y
            )));
        }
        Ok(pair)
    }

    /// Strand `k ∈ {1,2,3}` with `n = 3m + k`.
    pub fn strand(&self) -> u8 {
        ((self.index - 1) % 3 + 1) as u8
    }

    pub fn a(&self) -> BigInt {
        2u32 * &self.x + 1u32
    }

    pub fn b(&self) -> BigInt {
        2u32 * &self.y + 1u32
    }

    pub fn satisfies_equation(&self) -> bool {
        &self.x * (&self.x + 1u32) == 10u32 * &self.y * (&self.y + 1u32)
    }

    fn initial(index: u64) -> Self {
        let (x, y) = INITIAL[(index - 1) as usize];
        SolutionPair {
            index,
            x: x.into(),
            y: y.into(),
        }
    }

    /// The term three places further along the same strand.
    fn advance(&self) -> Self {
        SolutionPair {
            index: self.index + 3,
            x: 19u32 * &self.x + 60u32 * &self.y + 39u32,
            y: 6u32 * &self.x + 19u32 * &self.y + 12u32,
        }
    }
}

impl fmt::Display for SolutionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Term `n+1` from the window of terms `n-2, n-1, n`.
pub fn next_triple(window: &[SolutionPair; 3]) -> Result<SolutionPair> {
    let first = window[0].index;
    if first == 0 || window[1].index != first + 1 || window[2].index != first + 2 {
        return Err(Error::Usage(format!(
            "window indices {}, {}, {} are not consecutive",
            window[0].index, window[1].index, window[2].index
        )));
    }
    Ok(window[0].advance())
}

/// Unbounded iterator over the solution sequence, driven by the recurrence.
#[derive(Clone, Debug)]
pub struct Solutions {
    window: [SolutionPair; 3],
    emitted: u64,
}

impl Solutions {
    pub fn new() -> Self {
        Solutions {
            window: [
                SolutionPair::initial(1),
                SolutionPair::initial(2),
                SolutionPair::initial(3),
            ],
            emitted: 0,
        }
    }
}

impl Default for Solutions {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Solutions {
    type Item = SolutionPair;

    fn next(&mut self) -> Option<SolutionPair> {
        if self.emitted < 3 {
            self.emitted += 1;
            return Some(self.window[(self.emitted - 1) as usize].clone());
        }
        let next = self.window[0].advance();
        self.window.rotate_left(1);
        self.window[2] = next.clone();
        self.emitted += 1;
        Some(next)
    }
}

/// The first `count` terms.
pub fn stream(count: usize) -> Vec<SolutionPair> {
    Solutions::new().take(count).collect()
}

/// `40·Aₖ = (20yₖ + 10) + (2xₖ + 1)√10` for strand `k`.
pub fn closed_form_coefficient(k: u8) -> QuadInt {
    let (x, y) = INITIAL[(k - 1) as usize];
    QuadInt::new(20 * y + 10, 2 * x + 1)
}

/// `40·Bₖ = (20yₖ + 10) - (2xₖ + 1)√10`, the coefficient of the decaying mode.
pub fn decaying_coefficient(k: u8) -> QuadInt {
    closed_form_coefficient(k).conj()
}

/// Term `n` from the closed form `x = ⌊Aₖ√10·φᵐ⌋`, `y = ⌊Aₖ·φᵐ⌋`, `n = 3m + k`.
pub fn term_closed_form(n: u64) -> Result<SolutionPair> {
    if n == 0 {
        return Err(domain("term index must be at least 1"));
    }
    if n <= 3 {
        return Ok(SolutionPair::initial(n));
    }
    let m = (n - 1) / 3;
    let k = ((n - 1) % 3 + 1) as u8;
    let scaled = &closed_form_coefficient(k) * &QuadInt::phi().pow(m);
    let x = ScaledQuad::from_numerator(scaled.times_sqrt10()).floor()?;
    let y = ScaledQuad::from_numerator(scaled).floor()?;
    Ok(SolutionPair { index: n, x, y })
}

/// `40·Bₖ·√10·φ⁻ᵐ` and `40·Bₖ·φ⁻ᵐ` as elements of `ℤ[√10]`.
///
/// These are forty times the terms the closed form drops when it floors
/// (subtracted for `x`, added for `y`); both must stay below 20 in absolute
/// value. `φ⁻¹ = φ̄` since `N(φ) = 1`.
pub fn decaying_terms(k: u8, m: u64) -> (QuadInt, QuadInt) {
    let for_y = &decaying_coefficient(k) * &QuadInt::phi().conj().pow(m);
    (for_y.times_sqrt10(), for_y)
}

/// The first `count` odd positive solutions `(a, b)` of `a² - 10b² = -9`,
/// each strand advanced by multiplication with `φ`.
pub fn ab_stream(count: usize) -> Vec<(BigInt, BigInt)> {
    let phi = QuadInt::phi();
    let mut out: Vec<QuadInt> = Vec::with_capacity(count);
    for i in 0..count {
        let z = if i < 3 {
            let (a, b) = INITIAL_AB[i];
            QuadInt::new(a, b)
        } else {
            &out[i - 3] * &phi
        };
        out.push(z);
    }
    out.into_iter().map(|z| (z.a, z.b)).collect()
}

/// Recovers `(x, y)` from an odd pair `(a, b)`.
pub fn xy_from_ab(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt)> {
    let two = BigInt::from(2);
    let odd = |v: &BigInt| (v % &two).is_one();
    if !a.is_positive() || !b.is_positive() || !odd(a) || !odd(b) {
        return Err(domain(format!("({a}, {b}) is not a positive odd pair")));
    }
    Ok(((a - 1u32) / &two, (b - 1u32) / &two))
}
