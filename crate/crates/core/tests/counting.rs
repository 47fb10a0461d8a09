//! Counting identities, cross-formula agreement, and agreement with the
//! exhaustive oracle.

use gridpart::counts::{
    self, closed_sum_h_even, closed_sum_r_odd, closed_sum_s_even_even, count_b, count_h, count_r,
    count_report, count_s, count_v,
};
use gridpart::{
    bell, fixed_count_recurrence, fixed_partition_count, generating, GridShape, InvolutionProfile,
    Oracle, SymmetryElement,
};
use num_bigint::BigInt;
use num_integer::Integer;

fn shape(m: usize, n: usize) -> GridShape {
    GridShape::new(m, n).unwrap()
}

fn c(t: usize, u: usize) -> BigInt {
    fixed_partition_count(InvolutionProfile::new(t, u)).unwrap()
}

fn shapes_up_to(cells: usize) -> impl Iterator<Item = GridShape> {
    (1..=cells).flat_map(move |m| (1..=cells / m).map(move |n| shape(m, n)))
}

#[test]
fn identity_profile_gives_bell_numbers() {
    for u in 0..=15 {
        assert_eq!(c(0, u), bell(u));
    }
}

#[test]
fn two_fixed_points_act_like_one_pair() {
    for t in 0..=7 {
        assert_eq!(c(t, 2), c(t + 1, 0), "t = {t}");
    }
}

#[test]
fn transpose_symmetry() {
    for m in 1..=6 {
        for n in 1..=6 {
            let s = shape(m, n);
            let t = s.transpose();
            assert_eq!(count_h(s).unwrap(), count_v(t).unwrap());
            assert_eq!(count_r(s).unwrap(), count_r(t).unwrap());
            assert_eq!(count_s(s).unwrap(), count_s(t).unwrap());
            assert_eq!(count_report(s).unwrap().l, count_report(t).unwrap().l);
        }
    }
}

#[test]
fn rotation_identities() {
    for a in 1..=3 {
        for b in 1..=3 {
            let ee = shape(2 * a, 2 * b);
            assert_eq!(count_r(ee).unwrap(), count_h(ee).unwrap());
            assert_eq!(
                count_r(shape(2 * a + 1, 2 * b)).unwrap(),
                count_h(shape(2 * b, 2 * a + 1)).unwrap()
            );
            let eo = shape(2 * a, 2 * b + 1);
            assert_eq!(count_r(eo).unwrap(), count_h(eo).unwrap());
        }
    }
}

#[test]
fn bounds_and_integrality_up_to_eight_by_eight() {
    for m in 1..=8 {
        for n in 1..=8 {
            let s = shape(m, n);
            // count_report itself fails if 4 does not divide B+H+V+R.
            let r = count_report(s).unwrap();
            let lo = r.h.clone().min(r.v.clone()).min(r.r.clone());
            let hi = r.h.clone().max(r.v.clone()).max(r.r.clone());
            assert!(r.s <= lo && hi <= r.b, "{s}");
            assert!(r.l <= r.b && r.s >= BigInt::from(1), "{s}");
            assert!((&r.b + &r.h + &r.v + &r.r).is_multiple_of(&BigInt::from(4)));
            // Orbit-by-orbit form of the average.
            let four = BigInt::from(4);
            let two = BigInt::from(2);
            let cls = &r.classes;
            assert_eq!(
                &cls.asymmetric
                    + (&cls.h_only + &cls.v_only + &cls.r_only) * &two
                    + &cls.fully * &four,
                &r.l * &four,
                "{s}"
            );
        }
    }
}

#[test]
fn closed_sums_agree_with_series() {
    for s in shapes_up_to(15) {
        let (m, n) = (s.rows(), s.cols());
        if m % 2 == 0 {
            assert_eq!(
                closed_sum_h_even(m / 2, n).unwrap(),
                count_h(s).unwrap(),
                "{s}"
            );
        }
        if m % 2 == 1 && n % 2 == 1 {
            assert_eq!(closed_sum_r_odd(m, n).unwrap(), count_r(s).unwrap(), "{s}");
        }
        if m % 2 == 0 && n % 2 == 0 {
            let k = m * n / 4;
            let series = generating::pairing_even_even(k)
                .unwrap()
                .egf_count(&[k])
                .unwrap();
            assert_eq!(closed_sum_s_even_even(m / 2, n / 2).unwrap(), series, "{s}");
        }
    }
}

#[test]
fn recurrence_agrees_with_series() {
    for points in 0..=15 {
        for t in 0..=points / 2 {
            let p = InvolutionProfile::new(t, points - 2 * t);
            assert_eq!(
                fixed_count_recurrence(p),
                fixed_partition_count(p).unwrap(),
                "{p:?}"
            );
        }
    }
}

#[test]
fn recurrence_and_series_agree_with_enumeration() {
    let oracle = Oracle::new();
    for points in 0..=12 {
        for t in 0..=points / 2 {
            let p = InvolutionProfile::new(t, points - 2 * t);
            let brute = oracle.count_for_profile(p).unwrap();
            assert_eq!(fixed_count_recurrence(p), brute, "{p:?}");
            assert_eq!(fixed_partition_count(p).unwrap(), brute, "{p:?}");
        }
    }
}

#[test]
fn formulas_agree_with_the_oracle() {
    let oracle = Oracle::new();
    for s in shapes_up_to(12) {
        let survey = oracle.survey(s).unwrap();
        assert_eq!(BigInt::from(survey.total), count_b(s));
        for g in SymmetryElement::ALL {
            let formula = counts::count_fixed(s, g).unwrap();
            assert_eq!(BigInt::from(survey.fixed_by(g)), formula, "{s} {g:?}");
        }
        assert_eq!(BigInt::from(survey.klein), count_s(s).unwrap(), "{s}");
        assert_eq!(
            BigInt::from(survey.orbits),
            count_report(s).unwrap().l,
            "{s}"
        );
        assert_eq!(survey.fixed.iter().sum::<u64>(), 4 * survey.orbits, "{s}");
    }
}

#[test]
fn separate_oracle_entry_points_agree_on_a_small_grid() {
    let oracle = Oracle::new().with_jobs(2);
    let s = shape(2, 4);
    assert_eq!(
        oracle.count_klein_invariant(s).unwrap(),
        count_s(s).unwrap()
    );
    assert_eq!(oracle.count_orbits(s).unwrap(), count_report(s).unwrap().l);
    for g in SymmetryElement::ALL {
        assert_eq!(
            oracle.count_invariant(s, g).unwrap(),
            counts::count_fixed(s, g).unwrap()
        );
    }
}

#[test]
fn enumeration_invariants() {
    let oracle = Oracle::new();
    for k in 0..=9 {
        let all: Vec<_> = oracle.enumerate_partitions(k).unwrap().collect();
        assert_eq!(BigInt::from(all.len()), bell(k));
        assert!(all.windows(2).all(|w| w[0].rgs() < w[1].rgs()));
        for p in &all {
            let mut max = None::<u8>;
            for &v in p.rgs() {
                assert!(v <= max.map_or(0, |m| m + 1));
                max = Some(max.map_or(v, |m| m.max(v)));
            }
        }
    }
}

/// Fifteen-cell values: the formula route and the independent recurrence
/// must both reproduce the frozen values.
#[test]
fn fifteen_cell_golden_values() {
    let golden = include_str!("golden/three_by_five.txt");
    let s = shape(3, 5);
    for line in golden
        .lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
    {
        let (key, value) = line.split_once('=').unwrap();
        let value: BigInt = value.trim().parse().unwrap();
        let (formula, recurrence) = match key.trim() {
            "H" => (count_h(s).unwrap(), Some(SymmetryElement::ReflectRows)),
            "V" => (count_v(s).unwrap(), Some(SymmetryElement::ReflectCols)),
            "R" => (count_r(s).unwrap(), Some(SymmetryElement::Rotate180)),
            "S" => (count_s(s).unwrap(), None),
            "L" => (count_report(s).unwrap().l, None),
            other => panic!("unknown key {other}"),
        };
        assert_eq!(formula, value, "{key}");
        if let Some(g) = recurrence {
            assert_eq!(
                fixed_count_recurrence(s.involution_profile(g)),
                value,
                "{key}"
            );
        }
    }
}
