//! Selecting the concatenating subset and checking the order structure of the
//! solution sequence.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{domain, Result};
use crate::numeric::{digit_count_unchecked, pow10, BigRational};
use crate::solver::{stream, SolutionPair};

/// A solution tagged with its digit counts and the reduced ratio `(y+1)/(x+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifiedTerm {
    pub pair: SolutionPair,
    pub in_c: bool,
    pub delta_x: u32,
    pub delta_y: u32,
    pub ratio: BigRational,
}

/// Classifies a term: it concatenates well iff `δ(x) = δ(y) + 1`.
///
/// # Panics
///
/// If `x+1` or `y+1` changes the digit count, which cannot happen for a
/// genuine solution (neither is ever a power of ten).
pub fn classify_term(p: &SolutionPair) -> ClassifiedTerm {
    let x1 = &p.x + 1u32;
    let y1 = &p.y + 1u32;
    let delta_x = digit_count_unchecked(&p.x);
    let delta_y = digit_count_unchecked(&p.y);
    assert_eq!(
        delta_x,
        digit_count_unchecked(&x1),
        "x+1 is a power of ten at n={}",
        p.index
    );
    assert_eq!(
        delta_y,
        digit_count_unchecked(&y1),
        "y+1 is a power of ten at n={}",
        p.index
    );
    let ratio = BigRational::new(y1, x1).expect("x+1 > 0");
    ClassifiedTerm {
        pair: p.clone(),
        in_c: delta_x == delta_y + 1,
        delta_x,
        delta_y,
        ratio,
    }
}

pub fn classify_all(terms: &[SolutionPair]) -> Vec<ClassifiedTerm> {
    terms.iter().map(classify_term).collect()
}

/// The first `count` members of the concatenating subset.
pub fn first_members(count: usize) -> Vec<ClassifiedTerm> {
    crate::solver::Solutions::new()
        .map(|p| classify_term(&p))
        .filter(|c| c.in_c)
        .take(count)
        .collect()
}

/// `γₙ = xₙ·yₙ₊₁ - xₙ₊₁·yₙ` over a stream starting at index 1.
pub fn gamma(n: usize, terms: &[SolutionPair]) -> Result<BigInt> {
    if n == 0 || n >= terms.len() {
        return Err(domain(format!(
            "gamma({n}) needs terms {n} and {} of a {}-term stream",
            n + 1,
            terms.len()
        )));
    }
    let (cur, next) = (&terms[n - 1], &terms[n]);
    Ok(&cur.x * &next.y - &next.x * &cur.y)
}

/// Comparison data between term `n` and term `n+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceRecord {
    pub index: u64,
    pub ratio: BigRational,
    /// Sign of `(yₙ₊₁+1)/(xₙ₊₁+1) - (yₙ+1)/(xₙ+1)`.
    pub ratio_step: Ordering,
    /// Sign of `yₙ₊₁/xₙ₊₁ - yₙ/xₙ`.
    pub slope_step: Ordering,
    /// Whether `10(yₙ+1)² > (xₙ+1)²`, i.e. the ratio sits above `1/√10`.
    pub above_limit: bool,
}

pub fn convergence_report(count: usize) -> Result<Vec<ConvergenceRecord>> {
    if count < 2 {
        return Err(domain("convergence_report needs at least two terms"));
    }
    Ok(convergence_records(&stream(count)))
}

pub fn convergence_records(terms: &[SolutionPair]) -> Vec<ConvergenceRecord> {
    terms
        .windows(2)
        .map(|w| {
            let (c, n) = (&w[0], &w[1]);
            let (cx1, cy1) = (&c.x + 1u32, &c.y + 1u32);
            let (nx1, ny1) = (&n.x + 1u32, &n.y + 1u32);
            ConvergenceRecord {
                index: c.index,
                ratio_step: (&ny1 * &cx1).cmp(&(&cy1 * &nx1)),
                slope_step: (&n.y * &c.x).cmp(&(&c.y * &n.x)),
                above_limit: 10u32 * &cy1 * &cy1 > &cx1 * &cx1,
                ratio: BigRational::new(cy1, cx1).expect("x+1 > 0"),
            }
        })
        .collect()
}

/// `|10(y+1)² - (x+1)²| / (x+1)²`, the relative distance of the squared
/// ratio `10·((y+1)/(x+1))²` from 1.
pub fn limit_gap(p: &SolutionPair) -> BigRational {
    let x1 = &p.x + 1u32;
    let y1 = &p.y + 1u32;
    let x1sq = &x1 * &x1;
    let diff = (10u32 * &y1 * &y1 - &x1sq).abs();
    BigRational::new(diff, x1sq).expect("x+1 > 0")
}

/// Whether the limit gap of `p` is below `10^-digits`.
pub fn limit_gap_below(p: &SolutionPair, digits: u32) -> bool {
    let gap = limit_gap(p);
    gap.numer() * pow10(digits) < *gap.denom()
}

/// Run lengths of consecutive non-members inside one strand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandRuns {
    pub strand: u8,
    pub runs: Vec<usize>,
}

impl StrandRuns {
    pub fn max_run(&self) -> usize {
        self.runs.iter().copied().max().unwrap_or(0)
    }
}

pub fn gap_runs(count: usize) -> Vec<StrandRuns> {
    strand_runs(&classify_all(&stream(count)))
}

/// Per strand, the lengths of the maximal runs of consecutive strand terms
/// outside the concatenating subset.
pub fn strand_runs(classified: &[ClassifiedTerm]) -> Vec<StrandRuns> {
    (1..=3u8)
        .map(|k| {
            let mut runs = Vec::new();
            let mut current = 0usize;
            for c in classified.iter().filter(|c| c.pair.strand() == k) {
                if c.in_c {
                    if current > 0 {
                        runs.push(current);
                    }
                    current = 0;
                } else {
                    current += 1;
                }
            }
            if current > 0 {
                runs.push(current);
            }
            StrandRuns { strand: k, runs }
        })
        .collect()
}

/// Members found among the classified terms, and the total looked at.
pub fn density(classified: &[ClassifiedTerm]) -> (usize, usize) {
    (
        classified.iter().filter(|c| c.in_c).count(),
        classified.len(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(n: u64, x: u64, y: u64) -> SolutionPair {
        SolutionPair::new(n, x.into(), y.into()).unwrap()
    }

    #[test]
    fn classify_examples() {
        let c = classify_term(&pair(2, 20, 6));
        assert!(c.in_c);
        assert_eq!(c.ratio, BigRational::new(1, 3).unwrap());

        let c = classify_term(&pair(1, 4, 1));
        assert!(!c.in_c);
        assert_eq!(c.ratio, BigRational::new(2, 5).unwrap());

        let c = classify_term(&pair(12, 2163720, 684228));
        assert!(c.in_c);
        assert_eq!(c.ratio, BigRational::new(949, 3001).unwrap());
        assert_eq!((c.delta_x, c.delta_y), (6, 5));
    }

    #[test]
    fn gamma_examples() {
        let s = stream(6);
        assert_eq!(gamma(1, &s).unwrap(), BigInt::from(4));
        assert_eq!(gamma(2, &s).unwrap(), BigInt::from(6));
        assert_eq!(gamma(3, &s).unwrap(), BigInt::from(45));
        // γ₄ = γ₁ + 6(x₂ - x₁) + 21(y₂ - y₁)
        let g4 = gamma(4, &s).unwrap();
        let shortcut = 4 + 6 * (20 - 4) + 21 * (6 - 1);
        assert_eq!(g4, BigInt::from(shortcut));
        assert!(gamma(6, &s).is_err());
        assert!(gamma(0, &s).is_err());
    }

    #[test]
    fn first_ratio_step_decreases() {
        let r = convergence_report(2).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].ratio, BigRational::new(2, 5).unwrap());
        assert_eq!(r[0].ratio_step, Ordering::Less);
        assert_eq!(r[0].slope_step, Ordering::Greater);
        assert!(convergence_report(1).is_err());
    }

    #[test]
    fn green_pattern_of_first_twelve() {
        let got: Vec<bool> = classify_all(&stream(12)).iter().map(|c| c.in_c).collect();
        let want = [
            false, true, false, true, false, true, false, true, false, true, true, true,
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn runs_in_first_26() {
        let runs = gap_runs(26);
        assert!(runs.iter().all(|r| r.max_run() <= 2));
        // terms 13 and 16 sit in strand 1 and are both outside the subset
        assert_eq!(runs[0].max_run(), 2);
    }
}
