//! Brute-force ground truth on machine integers.
//!
//! Nothing here touches the quadratic ring, the recurrence, or the big-integer
//! helpers of this crate, so agreement with the main pipeline is meaningful.

use num_integer::Roots;

/// Largest `y_max` for which `1 + 40y(y+1)` stays inside `u128`.
pub const MAX_Y: u64 = 1 << 60;

/// Largest `x_max` for which the cross-multiplied identity fits in `u128`.
pub const MAX_X: u64 = 1_000_000_000;

/// All `(x, y)` with `1 ≤ y ≤ y_max`, `x > y` and `x(x+1) = 10y(y+1)`, sorted by `y`.
///
/// For each `y`, the only candidate is `x = (√(1 + 40y(y+1)) - 1)/2`.
pub fn brute_solutions(y_max: u64) -> Vec<(u64, u64)> {
    assert!(y_max <= MAX_Y, "y_max {y_max} exceeds {MAX_Y}");
    let mut out = Vec::new();
    for y in 1..=y_max {
        let y = y as u128;
        let disc = 1 + 40 * y * (y + 1);
        let r = disc.sqrt();
        if r * r != disc {
            continue;
        }
        let x = (r - 1) / 2;
        if x > y && x * (x + 1) == 10 * y * (y + 1) {
            out.push((x as u64, y as u64));
        }
    }
    out
}

/// All `(x, y)` with `1 ≤ y < x ≤ x_max` satisfying the concatenation identity,
/// sorted lexicographically. Exhaustive over every pair.
pub fn brute_concat_identities(x_max: u64) -> Vec<(u64, u64)> {
    assert!(x_max <= MAX_X, "x_max {x_max} exceeds {MAX_X}");
    // every product below is at most about 10·x_max³
    if x_max <= U64_SAFE_X {
        scan_concat::<u64>(x_max)
    } else {
        scan_concat::<u128>(x_max)
    }
}

const U64_SAFE_X: u64 = 1_000_000;

fn scan_concat<T>(x_max: u64) -> Vec<(u64, u64)>
where
    T: Copy + PartialEq + From<u64> + std::ops::Add<Output = T> + std::ops::Mul<Output = T>,
{
    let one = T::from(1);
    let mut out = Vec::new();
    for xu in 2..=x_max {
        let x = T::from(xu);
        let x1 = x + one;
        let shift_x1 = T::from(ten_above(xu as u128 + 1) as u64);
        // y+1 ranges over [lo, hi) blocks sharing the same digit count
        let mut lo = 2u64;
        let mut shift_y1 = 10u64;
        while lo <= xu {
            let hi = shift_y1.min(xu + 1);
            let shift = T::from(shift_y1);
            let x_part = x * shift;
            for y1u in lo..hi {
                let y1 = T::from(y1u);
                let y = T::from(y1u - 1);
                // (y+1)·(y∘(x+1)) == (x+1)·(x∘(y+1))
                if y1 * (y * shift_x1 + x1) == x1 * (x_part + y1) {
                    out.push((xu, y1u - 1));
                }
            }
            lo = hi;
            shift_y1 = shift_y1.saturating_mul(10);
        }
    }
    out
}

/// Smallest power of ten strictly greater than `n`.
fn ten_above(n: u128) -> u128 {
    let mut p = 10;
    while p <= n {
        p *= 10;
    }
    p
}
