//! Fixed-partition counts for each symmetry of a grid, the fully symmetric
//! count, and the orbit count obtained by averaging over the group.
//!
//! All reflection and rotation counts go through one function,
//! [`fixed_partition_count`], which depends only on the cycle type of the
//! symmetry acting on the cells.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::foundation::{bell, factorial, stirling2};
use crate::generating;
use crate::symmetry::{GridShape, InvolutionProfile, SymmetryElement};

/// Number of set partitions of a `2t + u` element set left unchanged by an
/// involution with `t` swapped pairs and `u` fixed points.
pub fn fixed_partition_count(profile: InvolutionProfile) -> Result<BigInt> {
    generating::involution(profile.pairs, profile.fixed)?.egf_count(&[profile.pairs, profile.fixed])
}

/// Partitions of the grid fixed by `g`.
pub fn count_fixed(shape: GridShape, g: SymmetryElement) -> Result<BigInt> {
    fixed_partition_count(shape.involution_profile(g))
}

/// All partitions of the grid.
pub fn count_b(shape: GridShape) -> BigInt {
    bell(shape.cells())
}

/// Partitions fixed by swapping row `i` with row `m-1-i`.
pub fn count_h(shape: GridShape) -> Result<BigInt> {
    count_fixed(shape, SymmetryElement::ReflectRows)
}

/// Partitions fixed by swapping column `j` with column `n-1-j`.
pub fn count_v(shape: GridShape) -> Result<BigInt> {
    count_fixed(shape, SymmetryElement::ReflectCols)
}

/// Partitions fixed by the half turn.
pub fn count_r(shape: GridShape) -> Result<BigInt> {
    count_fixed(shape, SymmetryElement::Rotate180)
}

/// Partitions fixed by every element of the group.
pub fn count_s(shape: GridShape) -> Result<BigInt> {
    let k = shape.klein_orbits();
    generating::klein(k.free, k.middle_row, k.middle_col, k.center)?.egf_count(&[
        k.free,
        k.middle_row,
        k.middle_col,
    ])
}

/// The fully symmetric count under the quadrant singleton / double-pair
/// model, dispatched on the parities of the dimensions (transposing
/// odd x even shapes first).
///
/// Matches [`count_s`] whenever the grid has at most two size-four cell
/// orbits and undercounts beyond that.
pub fn count_s_pairing_model(shape: GridShape) -> Result<BigInt> {
    let (m, n) = (shape.rows(), shape.cols());
    match (m % 2, n % 2) {
        (0, 0) => {
            let k = m * n / 4;
            generating::pairing_even_even(k)?.egf_count(&[k])
        }
        (0, 1) => {
            let (a, b) = (m / 2, n / 2);
            generating::pairing_even_odd(a, a * b)?.egf_count(&[a, a * b])
        }
        (1, 0) => count_s_pairing_model(shape.transpose()),
        _ => {
            let (a, b) = (m / 2, n / 2);
            generating::pairing_odd_odd(a, b, a * b)?.egf_count(&[a, b, a * b])
        }
    }
}

fn into_integer(value: BigRational, what: &str) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::Consistency(format!("{what} evaluated to {value}")))
    }
}

fn pow2(exp: i64) -> BigRational {
    let p = BigRational::from_integer(BigInt::one() << exp.unsigned_abs());
    if exp >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Double sum over letters `j` in the top half and swapped letter pairs `s`
/// for the row reflection of a `2m x n` grid.
pub fn closed_sum_h_even(m: usize, n: usize) -> Result<BigInt> {
    if m == 0 || n == 0 {
        return Err(Error::Domain(format!("closed_sum_h_even({m}, {n})")));
    }
    let k = m * n;
    let mut total = BigRational::zero();
    for j in 1..=k {
        let sj = stirling2(k, j);
        for s in 0..=j / 2 {
            let num = BigRational::from_integer(&sj * factorial(j)) * pow2(j as i64 - 3 * s as i64);
            total += num / BigRational::from_integer(factorial(s) * factorial(j - 2 * s));
        }
    }
    into_integer(total, "closed_sum_h_even")
}

/// Triple sum for the half turn of an odd `m x n` grid, with
/// `q = n*floor(m/2) + floor(n/2)` swapped cell pairs around the center.
pub fn closed_sum_r_odd(m: usize, n: usize) -> Result<BigInt> {
    if m.is_multiple_of(2) || n.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "closed_sum_r_odd needs odd dimensions, got {m}x{n}"
        )));
    }
    let q = n * (m / 2) + n / 2;
    if q == 0 {
        return Ok(BigInt::one());
    }
    let mut total = BigRational::zero();
    for i in 1..=q {
        let lead = stirling2(q, i) * factorial(i);
        for s in 0..=i / 2 {
            for r in 0..=(i - 2 * s) {
                let weight = (i - 2 * s + 1 - r) as i64;
                let den = factorial(s) * factorial(r) * factorial(i - 2 * s - r);
                total += BigRational::from_integer(&lead * weight) * pow2(-(s as i64))
                    / BigRational::from_integer(den);
            }
        }
    }
    into_integer(total, "closed_sum_r_odd")
}

/// Double sum over quadrant letters `j` and double pairs `s` for a
/// `2m x 2n` grid (five singleton placements, six double-pair placements).
pub fn closed_sum_s_even_even(m: usize, n: usize) -> Result<BigInt> {
    if m == 0 || n == 0 {
        return Err(Error::Domain(format!("closed_sum_s_even_even({m}, {n})")));
    }
    let k = m * n;
    let mut total = BigRational::zero();
    for j in 1..=k {
        let lead = stirling2(k, j) * factorial(j);
        for s in 0..=j / 2 {
            let num =
                &lead * BigInt::from(6).pow(s as u32) * BigInt::from(5).pow((j - 2 * s) as u32);
            let den = factorial(s) * factorial(j - 2 * s);
            total +=
                BigRational::from_integer(num) * pow2(-(s as i64)) / BigRational::from_integer(den);
        }
    }
    into_integer(total, "closed_sum_s_even_even")
}

/// How the partitions of a grid split by symmetry type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryClasses {
    pub h_only: BigInt,
    pub v_only: BigInt,
    pub r_only: BigInt,
    pub fully: BigInt,
    pub asymmetric: BigInt,
}

/// Every count for one grid shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub shape: GridShape,
    pub b: BigInt,
    pub h: BigInt,
    pub v: BigInt,
    pub r: BigInt,
    pub s: BigInt,
    /// Partitions up to symmetry.
    pub l: BigInt,
    /// Partitions fixed by no non-identity symmetry.
    pub c: BigInt,
    pub classes: SymmetryClasses,
}

impl CountReport {
    /// Assembles a report from the five primary counts, checking that the
    /// group average is integral and that no symmetry class is negative.
    pub fn from_counts(
        shape: GridShape,
        b: BigInt,
        h: BigInt,
        v: BigInt,
        r: BigInt,
        s: BigInt,
    ) -> Result<Self> {
        let (l, rem) = (&b + &h + &v + &r).div_rem(&BigInt::from(4));
        if !rem.is_zero() {
            return Err(Error::Consistency(format!(
                "{shape}: B+H+V+R = {} is not divisible by 4",
                &b + &h + &v + &r
            )));
        }
        let classes = SymmetryClasses {
            h_only: &h - &s,
            v_only: &v - &s,
            r_only: &r - &s,
            fully: s.clone(),
            asymmetric: &b - &h - &v - &r + &s * 2,
        };
        for (name, value) in [
            ("H-S", &classes.h_only),
            ("V-S", &classes.v_only),
            ("R-S", &classes.r_only),
            ("C", &classes.asymmetric),
        ] {
            if value.is_negative() {
                return Err(Error::Consistency(format!(
                    "{shape}: {name} = {value} is negative"
                )));
            }
        }
        Ok(Self {
            shape,
            c: classes.asymmetric.clone(),
            b,
            h,
            v,
            r,
            s,
            l,
            classes,
        })
    }
}

/// Computes every count for `shape`.
pub fn count_report(shape: GridShape) -> Result<CountReport> {
    CountReport::from_counts(
        shape,
        count_b(shape),
        count_h(shape)?,
        count_v(shape)?,
        count_r(shape)?,
        count_s(shape)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(m: usize, n: usize) -> GridShape {
        GridShape::new(m, n).unwrap()
    }

    fn big(v: u64) -> BigInt {
        BigInt::from(v)
    }

    fn c(t: usize, u: usize) -> BigInt {
        fixed_partition_count(InvolutionProfile::new(t, u)).unwrap()
    }

    #[test]
    fn fixed_partition_examples() {
        assert_eq!(c(0, 6), big(203));
        assert_eq!(c(1, 1), big(3));
        assert_eq!(c(2, 2), big(31));
        assert_eq!(c(3, 0), big(31));
        assert_eq!(c(0, 0), big(1));
    }

    #[test]
    fn per_element_examples() {
        assert_eq!(count_h(shape(2, 3)).unwrap(), big(31));
        assert_eq!(count_h(shape(2, 4)).unwrap(), big(164));
        assert_eq!(count_h(shape(2, 5)).unwrap(), big(999));
        assert_eq!(count_v(shape(3, 4)).unwrap(), big(6841));
        assert_eq!(count_r(shape(3, 5)).unwrap(), big(127_643));
        assert_eq!(count_v(shape(2, 3)).unwrap(), big(31));
        assert_eq!(count_h(shape(1, 1)).unwrap(), big(1));
        assert_eq!(count_b(shape(3, 1)), big(5));
        assert_eq!(count_b(shape(2, 3)), big(203));
    }

    #[test]
    fn corrected_table_entries() {
        assert_eq!(count_h(shape(3, 2)).unwrap(), big(31));
        assert_eq!(count_h(shape(3, 4)).unwrap(), big(14_325));
        assert_eq!(count_v(shape(3, 5)).unwrap(), big(199_157));
        assert_eq!(count_h(shape(3, 5)).unwrap(), c(5, 5));
    }

    #[test]
    fn fully_symmetric_examples() {
        assert_eq!(count_s(shape(2, 3)).unwrap(), big(13));
        assert_eq!(count_s(shape(3, 2)).unwrap(), big(13));
        assert_eq!(count_s(shape(2, 4)).unwrap(), big(36));
        assert_eq!(count_s(shape(2, 5)).unwrap(), big(107));
        assert_eq!(count_s(shape(3, 4)).unwrap(), big(469));
        assert_eq!(count_s(shape(1, 1)).unwrap(), big(1));
        assert_eq!(count_s(shape(3, 3)).unwrap(), big(79));
        assert_eq!(count_s(shape(1, 3)).unwrap(), big(3));
        assert_eq!(count_s(shape(3, 5)).unwrap(), big(3835));
    }

    #[test]
    fn pairing_model_agrees_up_to_two_free_orbits() {
        for (m, n) in [
            (2, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 3),
            (3, 5),
            (1, 7),
            (5, 3),
            (4, 3),
        ] {
            let s = shape(m, n);
            assert!(s.klein_orbits().free <= 2);
            assert_eq!(
                count_s_pairing_model(s).unwrap(),
                count_s(s).unwrap(),
                "{s}"
            );
        }
        // Three size-four orbits: the quadrant model misses block orbits
        // spread over three quadrant letters.
        assert_eq!(count_s_pairing_model(shape(2, 6)).unwrap(), big(313));
        assert_eq!(count_s(shape(2, 6)).unwrap(), big(319));
    }

    #[test]
    fn closed_sum_examples() {
        assert_eq!(closed_sum_h_even(1, 1).unwrap(), big(2));
        assert_eq!(closed_sum_h_even(1, 2).unwrap(), big(7));
        assert_eq!(closed_sum_h_even(1, 3).unwrap(), big(31));
        assert_eq!(closed_sum_r_odd(1, 1).unwrap(), big(1));
        assert_eq!(closed_sum_r_odd(3, 1).unwrap(), big(3));
        assert_eq!(closed_sum_r_odd(3, 5).unwrap(), big(127_643));
        assert!(matches!(closed_sum_r_odd(2, 3), Err(Error::Domain(_))));
        assert_eq!(closed_sum_s_even_even(1, 1).unwrap(), big(5));
        assert_eq!(closed_sum_s_even_even(1, 2).unwrap(), big(36));
        assert_eq!(
            closed_sum_s_even_even(1, 3).unwrap(),
            count_s_pairing_model(shape(2, 6)).unwrap()
        );
    }

    #[test]
    fn report_examples() {
        let r = count_report(shape(3, 1)).unwrap();
        assert_eq!(
            [&r.b, &r.h, &r.v, &r.r, &r.s, &r.l, &r.c],
            [
                &big(5),
                &big(3),
                &big(5),
                &big(3),
                &big(3),
                &big(4),
                &big(0)
            ]
        );
        let r = count_report(shape(1, 1)).unwrap();
        assert_eq!([&r.b, &r.l, &r.c], [&big(1), &big(1), &big(0)]);
        let r = count_report(shape(2, 3)).unwrap();
        assert_eq!(
            [&r.b, &r.h, &r.v, &r.r, &r.s, &r.l, &r.c],
            [
                &big(203),
                &big(31),
                &big(31),
                &big(31),
                &big(13),
                &big(74),
                &big(136)
            ]
        );
    }

    #[test]
    fn integrality_tripwire() {
        let err =
            CountReport::from_counts(shape(2, 3), big(203), big(31), big(12), big(31), big(13))
                .unwrap_err();
        assert!(matches!(err, Error::Consistency(ref msg) if msg.contains("277")));
        let err = CountReport::from_counts(shape(2, 3), big(4), big(5), big(5), big(2), big(4))
            .unwrap_err();
        assert!(matches!(err, Error::Consistency(_)));
    }
}
