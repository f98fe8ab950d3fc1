use std::cmp::Ordering;

use catpell_core::classify::{classify_all, convergence_records, gamma, strand_runs};
use catpell_core::concat::{identity_holds, lemma1_check};
use catpell_core::modscan::{residue_orbit, strand_periods};
use catpell_core::numeric::digit_count;
use catpell_core::solver::{
    ab_stream, closed_form_coefficient, decaying_terms, stream, term_closed_form, xy_from_ab,
};
use catpell_core::{BigInt, QuadInt};
use num_integer::Integer;
use num_traits::ToPrimitive;

/// The first 26 terms with their membership flags.
const TABLE: [(u64, u64, bool); 26] = [
    (4, 1, false),
    (20, 6, true),
    (39, 12, false),
    (175, 55, true),
    (779, 246, false),
    (1500, 474, true),
    (6664, 2107, false),
    (29600, 9360, true),
    (56979, 18018, false),
    (253075, 80029, true),
    (1124039, 355452, true),
    (2163720, 684228, true),
    (9610204, 3039013, false),
    (42683900, 13497834, false),
    (82164399, 25982664, false),
    (364934695, 115402483, false),
    (1620864179, 512562258, true),
    (3120083460, 986657022, true),
    (13857908224, 4382255359, true),
    (61550154920, 19463867988, false),
    (118481007099, 37466984190, true),
    (526235577835, 166410301177, false),
    (2337285022799, 739114421304, true),
    (4499158186320, 1422758742216, false),
    (19983094049524, 6319209189385, true),
    (88755280711460, 28066884141582, false),
];

#[test]
fn table_terms_and_colouring() {
    let classified = classify_all(&stream(26));
    for (c, &(x, y, green)) in classified.iter().zip(TABLE.iter()) {
        assert_eq!((c.pair.x.to_u64(), c.pair.y.to_u64()), (Some(x), Some(y)));
        assert_eq!(c.in_c, green, "n={}", c.pair.index);
        let (bx, by) = (BigInt::from(x), BigInt::from(y));
        assert_eq!(identity_holds(&bx, &by).unwrap(), green);
        assert_eq!(lemma1_check(&bx, &by).unwrap(), green);
    }
}

#[test]
fn every_term_solves_the_equation() {
    for p in stream(300) {
        assert!(p.satisfies_equation(), "n={}", p.index);
        assert!(p.x > p.y && p.y >= BigInt::from(1));
        let (a, b) = (p.a(), p.b());
        assert!(a.is_odd() && b.is_odd());
        assert_eq!(&a * &a - 10 * &b * &b, BigInt::from(-9));
    }
}

#[test]
fn ab_stream_is_linked_to_xy_stream() {
    let xy = stream(200);
    let ab = ab_stream(200);
    for (p, (a, b)) in xy.iter().zip(ab.iter()) {
        assert_eq!((p.a(), p.b()), (a.clone(), b.clone()));
        assert_eq!(xy_from_ab(a, b).unwrap(), (p.x.clone(), p.y.clone()));
    }
}

#[test]
fn closed_form_matches_recurrence() {
    for p in stream(300) {
        assert_eq!(term_closed_form(p.index).unwrap(), p);
    }
}

#[test]
fn dropped_terms_stay_below_one_half() {
    let twenty = BigInt::from(20);
    for k in 1..=3u8 {
        for m in 0..=50u64 {
            let (for_x, for_y) = decaying_terms(k, m);
            assert!(for_x.abs_lt(&twenty), "k={k} m={m}");
            assert!(for_y.abs_lt(&twenty), "k={k} m={m}");
        }
    }
}

#[test]
fn growing_and_decaying_modes_sum_to_the_term() {
    // 40x + 20 = 40Aₖ√10·φᵐ - 40Bₖ√10·φ⁻ᵐ and 40y + 20 = 40Aₖ·φᵐ + 40Bₖ·φ⁻ᵐ,
    // with the irrational parts cancelling
    let terms = stream(90);
    for p in terms.iter().skip(3) {
        let m = (p.index - 1) / 3;
        let k = p.strand();
        let growing = &closed_form_coefficient(k) * &QuadInt::phi().pow(m);
        let (dx, dy) = decaying_terms(k, m);
        let sx = &growing.times_sqrt10() - &dx;
        let sy = &growing + &dy;
        assert_eq!(sx, QuadInt::new(40 * &p.x + 20, 0));
        assert_eq!(sy, QuadInt::new(40 * &p.y + 20, 0));
    }
}

#[test]
fn gamma_positive_and_ratios_monotone() {
    let terms = stream(501);
    for n in 1..=500 {
        assert!(gamma(n, &terms).unwrap() > BigInt::from(0), "n={n}");
    }
    for n in 4..=500 {
        let shortcut = gamma(n - 3, &terms).unwrap()
            + 6 * (&terms[n - 3].x - &terms[n - 4].x)
            + 21 * (&terms[n - 3].y - &terms[n - 4].y);
        assert_eq!(gamma(n, &terms).unwrap(), shortcut, "n={n}");
    }
    for r in convergence_records(&terms) {
        assert_eq!(r.ratio_step, Ordering::Less);
        assert_eq!(r.slope_step, Ordering::Greater);
        assert!(r.above_limit);
    }
}

#[test]
fn digit_structure_of_first_500() {
    for c in classify_all(&stream(500)) {
        let diff = c.delta_x - c.delta_y;
        assert!(diff == 0 || diff == 1);
        assert_eq!(c.in_c, diff == 1);
        assert_eq!(digit_count(&(&c.pair.x + 1)).unwrap(), c.delta_x);
        assert_eq!(digit_count(&(&c.pair.y + 1)).unwrap(), c.delta_y);
    }
}

#[test]
fn every_strand_window_of_three_hits_the_subset() {
    let classified = classify_all(&stream(900));
    for runs in strand_runs(&classified) {
        assert!(
            runs.max_run() <= 2,
            "strand {}: {:?}",
            runs.strand,
            runs.runs
        );
    }
    // at least N/9 members among the first N = 300
    let members = classified[..300].iter().filter(|c| c.in_c).count();
    assert!(members * 9 >= 300);
}

#[test]
fn orbits_agree_with_exact_stream() {
    let terms = stream(400);
    for m in [2u64, 3, 7, 8, 9, 10, 11, 16, 25, 37, 100] {
        let o = residue_orbit(m).unwrap();
        let bm = BigInt::from(m);
        let limit = (3 * o.period).min(terms.len());
        for p in &terms[..limit] {
            let want = (
                p.x.mod_floor(&bm).to_u64().unwrap(),
                p.y.mod_floor(&bm).to_u64().unwrap(),
            );
            assert_eq!(o.term(p.index), want, "m={m} n={}", p.index);
        }
    }
}

#[test]
fn orbit_period_divides_strand_lcm() {
    for m in 2..=100u64 {
        let o = residue_orbit(m).unwrap();
        let strands = strand_periods(m).unwrap();
        let lcm = strands.iter().fold(1usize, |acc, &p| acc.lcm(&(3 * p)));
        assert_eq!(lcm % o.period, 0, "m={m}");
        for i in 0..o.terms.len() - o.period {
            assert_eq!(o.terms[i], o.terms[i + o.period]);
        }
        for shorter in 1..o.period {
            assert!(o.terms[shorter..shorter + 3] != o.terms[..3], "m={m}");
        }
    }
    assert_eq!(residue_orbit(9).unwrap().period, 9);
    assert_eq!(residue_orbit(10).unwrap().period, 30);
}

#[test]
fn mod9_zero_positions() {
    let o = residue_orbit(9).unwrap();
    let pos = o.positions(|(_, y)| y == 0);
    assert!(!pos.is_empty());
    for n in pos {
        assert!(n % 9 == 0 || n % 9 == 8, "n={n}");
        let x = o.term(n as u64).0;
        assert!(x == 0 || x == 8);
    }
}

#[test]
fn mod10_nine_positions() {
    let o = residue_orbit(10).unwrap();
    assert!(o.positions(|t| t == (0, 9) || t == (9, 9)).is_empty());
    assert_eq!(o.positions(|t| t == (4, 9)), vec![19]);
    assert_eq!(o.positions(|t| t == (5, 9)), vec![10]);
}
