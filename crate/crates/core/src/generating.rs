//! Exponential generating functions for the fixed-partition counts.
//!
//! Each builder returns the truncated series; the count for a given set of
//! exponents is its factorial-scaled coefficient
//! ([`TruncatedSeries::egf_count`]).

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;
use crate::series::{SeriesSpace, TruncatedSeries};

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Sum of `scale * exp(weights . vars)` terms plus a constant.
fn exp_sum(
    space: &Arc<SeriesSpace>,
    terms: &[(&[i64], BigRational)],
    constant: BigRational,
) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::constant(space, constant);
    for (weights, scale) in terms {
        acc = acc.add(&TruncatedSeries::exp_atom(space, weights, scale.clone())?)?;
    }
    Ok(acc)
}

/// `exp(e^t - 1)`: Bell numbers.
pub fn bell(order: usize) -> Result<TruncatedSeries> {
    let sp = SeriesSpace::new([("t", order)])?;
    exp_sum(&sp, &[(&[1], q(1, 1))], q(-1, 1))?.exp()
}

/// `(e^t - 1)^k / k!`: Stirling numbers of the second kind with `k` blocks.
pub fn stirling(order: usize, blocks: usize) -> Result<TruncatedSeries> {
    let sp = SeriesSpace::new([("t", order)])?;
    let base = exp_sum(&sp, &[(&[1], q(1, 1))], q(-1, 1))?;
    let mut acc = TruncatedSeries::one(&sp);
    for k in 1..=blocks {
        acc = acc.mul(&base)?.scale(&q(1, k as i64));
    }
    Ok(acc)
}

/// `exp((e^t + 3)(e^t - 1) / 2)`: partitions fixed by an involution with
/// `t` swapped pairs and no fixed points.
pub fn reflection_even(order: usize) -> Result<TruncatedSeries> {
    let sp = SeriesSpace::new([("t", order)])?;
    exp_sum(&sp, &[(&[2], q(1, 2)), (&[1], q(1, 1))], q(-3, 2))?.exp()
}

/// `exp(e^(x+y) + e^(2y)/2 - 3/2)` over `[y, x]`: partitions fixed by an
/// involution with `y`-degree swapped pairs and `x`-degree fixed points.
pub fn involution(pairs: usize, fixed: usize) -> Result<TruncatedSeries> {
    let sp = SeriesSpace::new([("y", pairs), ("x", fixed)])?;
    exp_sum(&sp, &[(&[1, 1], q(1, 1)), (&[2, 0], q(1, 2))], q(-3, 2))?.exp()
}

/// `exp(2e^t - 2 + t + (e^t - 1)^2 / 2)`: the half-turn of an odd x odd
/// grid, with `t` counting swapped cell pairs around the fixed center.
pub fn rotation_odd(order: usize) -> Result<TruncatedSeries> {
    let sp = SeriesSpace::new([("t", order)])?;
    let em1 = exp_sum(&sp, &[(&[1], q(1, 1))], q(-1, 1))?;
    let exponent = exp_sum(&sp, &[(&[1], q(2, 1))], q(-2, 1))?
        .add(&if order >= 1 {
            TruncatedSeries::monomial(&sp, &[1], q(1, 1))?
        } else {
            TruncatedSeries::zero(&sp)
        })?
        .add(&em1.mul(&em1)?.scale(&q(1, 2)))?;
    exponent.exp()
}

/// `exp(5(e^t - 1) + 3(e^t - 1)^2)`: even x even fully symmetric grids under
/// the singleton / double-pair quadrant model, `t` counting quadrant cells.
///
/// Agrees with [`klein`] up to `t^2` and falls short from `t^3` on, since
/// the quadrant model never lets one block orbit touch three or more
/// distinct quadrant letters.
pub fn pairing_even_even(order: usize) -> Result<TruncatedSeries> {
    let sp = SeriesSpace::new([("t", order)])?;
    let em1 = exp_sum(&sp, &[(&[1], q(1, 1))], q(-1, 1))?;
    em1.scale(&q(5, 1))
        .add(&em1.mul(&em1)?.scale(&q(3, 1)))?
        .exp()
}

/// `exp((e^x(2e^y - 4) + e^(2x)(e^(2y) + 5) - 4) / 2)` over `[y, x]`: the
/// quadrant model for a `2a x (2b+1)` grid, `y` counting the `a` cells on
/// the upper half of the middle column and `x` the `ab` quadrant cells.
pub fn pairing_even_odd(middle: usize, quadrant: usize) -> Result<TruncatedSeries> {
    let sp = SeriesSpace::new([("y", middle), ("x", quadrant)])?;
    exp_sum(
        &sp,
        &[
            (&[0, 1], q(-2, 1)),
            (&[1, 1], q(1, 1)),
            (&[2, 2], q(1, 2)),
            (&[0, 2], q(5, 2)),
        ],
        q(-2, 1),
    )?
    .exp()
}

/// `exp(l + x + y) * exp(2e^(2l) + e^(2l+2x)/2 + e^(2l+2y)/2 + e^(l+x+y)
/// - 2e^l - 2)` over `[y, x, l]`: the quadrant model for a
/// `(2a+1) x (2b+1)` grid with `y^a x^b l^(ab)`.
pub fn pairing_odd_odd(
    middle_col: usize,
    middle_row: usize,
    quadrant: usize,
) -> Result<TruncatedSeries> {
    let sp = SeriesSpace::new([("y", middle_col), ("x", middle_row), ("l", quadrant)])?;
    let inner = exp_sum(
        &sp,
        &[
            (&[0, 0, 2], q(2, 1)),
            (&[0, 2, 2], q(1, 2)),
            (&[2, 0, 2], q(1, 2)),
            (&[1, 1, 1], q(1, 1)),
            (&[0, 0, 1], q(-2, 1)),
        ],
        q(-2, 1),
    )?
    .exp()?;
    TruncatedSeries::exp_atom(&sp, &[1, 1, 1], q(1, 1))?.mul(&inner)
}

/// Partitions fixed by the whole four-element group, over `[l, x, y]` where
/// `l` counts size-four cell orbits, `x` mirrored pairs on the middle row and
/// `y` mirrored pairs on the middle column. With `center` the series is
/// multiplied by `e^(l+x+y)`, accounting for the single cell fixed by every
/// element.
///
/// The exponent sums, over each subgroup `K` of the group, the block orbits
/// whose blocks have stabilizer `K`: such a block meets each cell orbit it
/// touches in one `K`-orbit, so a set of `k` eligible cell orbits yields
/// `[G:K]^(k-1)` block orbits. This gives
/// `(e^(l+x+y) - 1) + (e^(2l+2x) - 1)/2 + (e^(2l+2y) - 1)/2 + (e^(2l) - 1)/2
/// + (e^(4l) - 1)/4`.
pub fn klein(
    free: usize,
    middle_row: usize,
    middle_col: usize,
    center: bool,
) -> Result<TruncatedSeries> {
    let sp = SeriesSpace::new([("l", free), ("x", middle_row), ("y", middle_col)])?;
    let body = exp_sum(
        &sp,
        &[
            (&[1, 1, 1], q(1, 1)),
            (&[2, 2, 0], q(1, 2)),
            (&[2, 0, 2], q(1, 2)),
            (&[2, 0, 0], q(1, 2)),
            (&[4, 0, 0], q(1, 4)),
        ],
        q(-11, 4),
    )?
    .exp()?;
    if center {
        TruncatedSeries::exp_atom(&sp, &[1, 1, 1], q(1, 1))?.mul(&body)
    } else {
        Ok(body)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<BigInt> {
        s.egf_grid().unwrap().into_iter().map(|(_, v)| v).collect()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn bell_series() {
        assert_eq!(ints(&bell(6).unwrap()), big(&[1, 1, 2, 5, 15, 52, 203]));
    }

    #[test]
    fn reflection_series() {
        assert_eq!(
            ints(&reflection_even(6).unwrap()),
            big(&[1, 2, 7, 31, 164, 999, 6841])
        );
    }

    #[test]
    fn rotation_series_starts_at_one() {
        assert_eq!(ints(&rotation_odd(0).unwrap()), big(&[1]));
        assert_eq!(
            rotation_odd(7).unwrap().egf_count(&[7]).unwrap(),
            BigInt::from(127_643)
        );
    }

    #[test]
    fn quadrant_model_departs_at_third_order() {
        let pairing = pairing_even_even(3).unwrap();
        let exact = klein(3, 0, 0, false).unwrap();
        for k in 0..=2 {
            assert_eq!(
                pairing.egf_count(&[k]).unwrap(),
                exact.egf_count(&[k, 0, 0]).unwrap()
            );
        }
        assert_eq!(pairing.egf_count(&[3]).unwrap(), BigInt::from(313));
        assert_eq!(exact.egf_count(&[3, 0, 0]).unwrap(), BigInt::from(319));
    }
}
