//! Residues of the solution sequence modulo `m` and the arguments that rule
//! out `x+1` or `y+1` being a power of ten.
//!
//! The recurrence reduced mod `m` is an affine map whose linear part has
//! determinant `19² - 60·6 = 1`, so it is invertible and every residue orbit
//! is purely periodic.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{domain, Error, Result};
use crate::solver::{Solutions, INITIAL};

/// Hard cap on the number of recurrence states explored per modulus.
pub const STATE_CAP: usize = 1_000_000;

/// The residue sequence `(xₙ mod m, yₙ mod m)` and its minimal period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueOrbit {
    pub modulus: u64,
    /// `3·period` terms, starting at index 1.
    pub terms: Vec<(u64, u64)>,
    pub period: usize,
}

impl ResidueOrbit {
    /// The first full period.
    pub fn one_period(&self) -> &[(u64, u64)] {
        &self.terms[..self.period]
    }

    /// Residue pair of term `n` (1-based), for any `n ≥ 1`.
    pub fn term(&self, n: u64) -> (u64, u64) {
        self.terms[((n - 1) % self.period as u64) as usize]
    }

    /// 1-based positions within one period whose pair satisfies `pred`.
    pub fn positions<F>(&self, pred: F) -> Vec<usize>
    where
        F: Fn((u64, u64)) -> bool,
    {
        self.one_period()
            .iter()
            .enumerate()
            .filter(|(_, &t)| pred(t))
            .map(|(i, _)| i + 1)
            .collect()
    }
}

fn step(m: u64, (x, y): (u64, u64)) -> (u64, u64) {
    let (m, x, y) = (m as u128, x as u128, y as u128);
    (
        ((19 * x + 60 * y + 39) % m) as u64,
        ((6 * x + 19 * y + 12) % m) as u64,
    )
}

fn initial_mod(m: u64) -> [(u64, u64); 3] {
    INITIAL.map(|(x, y)| (x as u64 % m, y as u64 % m))
}

/// Residue orbit modulo `m`; the period is the first return of the full
/// three-term recurrence state.
pub fn residue_orbit(m: u64) -> Result<ResidueOrbit> {
    if m < 2 {
        return Err(domain(format!("modulus must be at least 2, got {m}")));
    }
    let start = initial_mod(m);
    let mut terms: Vec<(u64, u64)> = start.to_vec();
    let mut period = None;
    for shift in 1..=STATE_CAP {
        while terms.len() < shift + 3 {
            let t = step(m, terms[terms.len() - 3]);
            terms.push(t);
        }
        if terms[shift..shift + 3] == start {
            period = Some(shift);
            break;
        }
    }
    let period = period.ok_or(Error::CapExceeded {
        modulus: m,
        cap: STATE_CAP,
    })?;
    while terms.len() < 3 * period {
        let t = step(m, terms[terms.len() - 3]);
        terms.push(t);
    }
    terms.truncate(3 * period);
    debug_assert!((0..terms.len() - period).all(|i| terms[i] == terms[i + period]));
    Ok(ResidueOrbit {
        modulus: m,
        terms,
        period,
    })
}

/// Period of each strand `k = 1, 2, 3` under the affine map, counted in
/// strand steps (one step is three positions of the interleaved sequence).
pub fn strand_periods(m: u64) -> Result<[usize; 3]> {
    if m < 2 {
        return Err(domain(format!("modulus must be at least 2, got {m}")));
    }
    let mut out = [0usize; 3];
    for (k, start) in initial_mod(m).into_iter().enumerate() {
        let mut cur = step(m, start);
        let mut len = 1;
        while cur != start {
            cur = step(m, cur);
            len += 1;
            if len > STATE_CAP {
                return Err(Error::CapExceeded {
                    modulus: m,
                    cap: STATE_CAP,
                });
            }
        }
        out[k] = len;
    }
    Ok(out)
}

/// Residues of `2y(y+1)` mod 8 over all `y mod 8`.
pub fn mod8_residues() -> Vec<u64> {
    let mut r: Vec<u64> = (0..8u64).map(|y| 2 * y * (y + 1) % 8).collect();
    r.sort_unstable();
    r.dedup();
    r
}

/// `x ≡ 7 (mod 8)` would force `2y(y+1) ≡ 6·7 ≡ 2 (mod 8)`; this checks
/// exhaustively that no `y` does that.
pub fn mod8_obstruction() -> bool {
    (0..8u64).all(|y| 2 * y * (y + 1) % 8 != 2)
}

/// Whether `n ≡ g (mod m1)` and `n ≡ h (mod m2)` have a common solution.
pub fn crt_compatible(g: i64, m1: u64, h: i64, m2: u64) -> bool {
    let d = m1.gcd(&m2).max(1) as i64;
    g.rem_euclid(d) == h.rem_euclid(d)
}

/// True iff the decimal string of `n` is `1` followed by at least one zero.
pub fn is_power_of_ten(n: &BigInt) -> bool {
    let s = n.to_string();
    s.len() >= 2 && s.starts_with('1') && s[1..].bytes().all(|b| b == b'0')
}

/// Checks the first `count` terms: neither `x+1` nor `y+1` is a power of ten.
pub fn power10_exclusion(count: usize) -> bool {
    Solutions::new()
        .take(count)
        .all(|p| !is_power_of_ten(&(&p.x + 1u32)) && !is_power_of_ten(&(&p.y + 1u32)))
}
