//! Dense multivariate power series with exact rational coefficients,
//! truncated per variable.
//!
//! Every series lives in a [`SeriesSpace`] (ordered variable names plus an
//! inclusive maximum exponent per variable). Binary operations require both
//! operands to share the same space; there is no implicit alignment.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::foundation::factorial;

/// Maximum number of formal variables a space may carry.
pub const MAX_VARS: usize = 3;

/// Variables and truncation orders shared by a family of series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesSpace {
    vars: Vec<String>,
    orders: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
}

impl SeriesSpace {
    /// Builds a space from `(name, max exponent)` pairs, outermost first.
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, usize)>) -> Result<Arc<Self>> {
        let (vars, orders): (Vec<String>, Vec<usize>) =
            vars.into_iter().map(|(v, o)| (v.into(), o)).unzip();
        if vars.is_empty() || vars.len() > MAX_VARS {
            return Err(Error::Dimension(format!(
                "a series space needs 1 to {MAX_VARS} variables, got {}",
                vars.len()
            )));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Dimension(format!("duplicate variable `{v}`")));
            }
        }
        let mut strides = vec![1; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * (orders[i + 1] + 1);
        }
        let len = strides[0] * (orders[0] + 1);
        Ok(Arc::new(Self {
            vars,
            orders,
            strides,
            len,
        }))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    /// Number of stored coefficients.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn index(&self, exponents: &[usize]) -> Result<usize> {
        if exponents.len() != self.orders.len()
            || exponents.iter().zip(&self.orders).any(|(e, o)| e > o)
        {
            return Err(Error::Range {
                exponents: exponents.to_vec(),
                orders: self.orders.clone(),
            });
        }
        Ok(exponents
            .iter()
            .zip(&self.strides)
            .map(|(e, s)| e * s)
            .sum())
    }

    fn exponents(&self, mut index: usize) -> Vec<usize> {
        self.strides
            .iter()
            .map(|s| {
                let e = index / s;
                index %= s;
                e
            })
            .collect()
    }
}

/// A truncated power series over a [`SeriesSpace`].
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    space: Arc<SeriesSpace>,
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(space: &Arc<SeriesSpace>) -> Self {
        Self {
            space: Arc::clone(space),
            coeffs: vec![BigRational::zero(); space.len()],
        }
    }

    pub fn constant(space: &Arc<SeriesSpace>, value: BigRational) -> Self {
        let mut s = Self::zero(space);
        s.coeffs[0] = value;
        s
    }

    pub fn one(space: &Arc<SeriesSpace>) -> Self {
        Self::constant(space, BigRational::one())
    }

    /// `coeff * x^exponents`.
    pub fn monomial(
        space: &Arc<SeriesSpace>,
        exponents: &[usize],
        coeff: BigRational,
    ) -> Result<Self> {
        let mut s = Self::zero(space);
        let i = space.index(exponents)?;
        s.coeffs[i] = coeff;
        Ok(s)
    }

    /// `scale * exp(sum_i weights[i] * var_i)`, truncated.
    pub fn exp_atom(space: &Arc<SeriesSpace>, weights: &[i64], scale: BigRational) -> Result<Self> {
        if weights.len() != space.vars.len() {
            return Err(Error::Dimension(format!(
                "{} weights for {} variables",
                weights.len(),
                space.vars.len()
            )));
        }
        // Per-variable factors w^k / k!.
        let factors: Vec<Vec<BigRational>> = weights
            .iter()
            .zip(&space.orders)
            .map(|(&w, &order)| {
                let w = BigRational::from_integer(BigInt::from(w));
                let mut out = Vec::with_capacity(order + 1);
                out.push(BigRational::one());
                for k in 1..=order {
                    let next = &out[k - 1] * &w / BigRational::from_integer(BigInt::from(k));
                    out.push(next);
                }
                out
            })
            .collect();
        let coeffs = (0..space.len())
            .map(|i| {
                space
                    .exponents(i)
                    .iter()
                    .zip(&factors)
                    .fold(scale.clone(), |acc, (&e, f)| acc * &f[e])
            })
            .collect();
        Ok(Self {
            space: Arc::clone(space),
            coeffs,
        })
    }

    pub fn space(&self) -> &Arc<SeriesSpace> {
        &self.space
    }

    pub fn coeff(&self, exponents: &[usize]) -> Result<&BigRational> {
        Ok(&self.coeffs[self.space.index(exponents)?])
    }

    /// Coefficients in row-major exponent order (last variable fastest).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.space, &other.space) || self.space == other.space {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "series over {:?}/{:?} combined with {:?}/{:?}",
                self.space.vars, self.space.orders, other.space.vars, other.space.orders
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            space: Arc::clone(&self.space),
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            space: Arc::clone(&self.space),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let space = &self.space;
        let exps: Vec<Vec<usize>> = (0..space.len()).map(|i| space.exponents(i)).collect();
        let mut out = vec![BigRational::zero(); space.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                if exps[i]
                    .iter()
                    .zip(&exps[j])
                    .zip(&space.orders)
                    .all(|((x, y), o)| x + y <= *o)
                {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Self {
            space: Arc::clone(space),
            coeffs: out,
        })
    }

    /// `exp(self)`, truncated to the same orders.
    ///
    /// Uses the Euler-operator identity `D f = f * D g` for `f = exp(g)`,
    /// where `D` scales each monomial by its total degree. Coefficients are
    /// filled in index order, which visits every proper divisor monomial of
    /// `x^a` before `x^a` itself.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain(format!(
                "exp needs a zero constant term, found {}",
                self.coeffs[0]
            )));
        }
        let space = &self.space;
        let exps: Vec<Vec<usize>> = (0..space.len()).map(|i| space.exponents(i)).collect();
        let degree: Vec<usize> = exps.iter().map(|e| e.iter().sum()).collect();
        let support: Vec<usize> = (1..space.len())
            .filter(|&j| !self.coeffs[j].is_zero())
            .collect();

        let mut out = vec![BigRational::zero(); space.len()];
        out[0] = BigRational::one();
        for i in 1..space.len() {
            let mut acc = BigRational::zero();
            for &j in &support {
                if j > i || !exps[j].iter().zip(&exps[i]).all(|(b, a)| b <= a) {
                    continue;
                }
                let rest = &out[i - j];
                if rest.is_zero() {
                    continue;
                }
                acc += &self.coeffs[j] * rest * BigInt::from(degree[j]);
            }
            out[i] = acc / BigInt::from(degree[i]);
        }
        Ok(Self {
            space: Arc::clone(space),
            coeffs: out,
        })
    }

    /// `(prod_i exponents_i!) * [x^exponents] self`, which must be an integer.
    pub fn egf_count(&self, exponents: &[usize]) -> Result<BigInt> {
        let c = self.coeff(exponents)?;
        let scaled = exponents
            .iter()
            .fold(c.clone(), |acc, &e| acc * factorial(e));
        if !scaled.is_integer() {
            return Err(Error::Consistency(format!(
                "factorial-scaled coefficient at {exponents:?} is {scaled}, not an integer"
            )));
        }
        Ok(scaled.to_integer())
    }

    /// Factorial-scaled coefficients for every exponent tuple, in the same
    /// order as [`coeffs`](Self::coeffs).
    pub fn egf_grid(&self) -> Result<Vec<(Vec<usize>, BigInt)>> {
        (0..self.space.len())
            .map(|i| {
                let e = self.space.exponents(i);
                let v = self.egf_count(&e)?;
                Ok((e, v))
            })
            .collect()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            write!(f, "{}", c.abs())?;
            for (v, e) in self.space.vars.iter().zip(self.space.exponents(i)) {
                match e {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{e}")?,
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(")?;
        for (k, (v, o)) in self.space.vars.iter().zip(&self.space.orders).enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}^{}", o + 1)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn uni(order: usize) -> Arc<SeriesSpace> {
        SeriesSpace::new([("t", order)]).unwrap()
    }

    #[test]
    fn exp_atom_examples() {
        let s = TruncatedSeries::exp_atom(&uni(2), &[2], q(1, 2)).unwrap();
        assert_eq!(s.coeffs(), &[q(1, 2), q(1, 1), q(1, 1)]);

        let xy = SeriesSpace::new([("x", 1), ("y", 1)]).unwrap();
        let s = TruncatedSeries::exp_atom(&xy, &[1, 1], q(1, 1)).unwrap();
        assert_eq!(s.coeff(&[1, 1]).unwrap(), &q(1, 1));

        let s = TruncatedSeries::exp_atom(&uni(3), &[0], q(-3, 2)).unwrap();
        assert_eq!(s.coeffs(), &[q(-3, 2), q(0, 1), q(0, 1), q(0, 1)]);
    }

    #[test]
    fn ring_operations() {
        let sp = uni(2);
        let ex = TruncatedSeries::exp_atom(&sp, &[1], q(1, 1)).unwrap();
        let sq = ex.mul(&ex).unwrap();
        assert_eq!(sq.coeffs(), &[q(1, 1), q(2, 1), q(2, 1)]);
        assert!(ex.add(&ex.scale(&q(-1, 1))).unwrap().is_zero());
        assert!(ex.mul(&TruncatedSeries::zero(&sp)).unwrap().is_zero());
    }

    #[test]
    fn mismatched_spaces_are_rejected() {
        let a = TruncatedSeries::one(&uni(2));
        let b = TruncatedSeries::one(&uni(3));
        assert!(matches!(a.add(&b), Err(Error::Dimension(_))));
        let renamed = TruncatedSeries::one(&SeriesSpace::new([("x", 2)]).unwrap());
        assert!(matches!(a.mul(&renamed), Err(Error::Dimension(_))));
        // Same descriptor built twice is the same space.
        assert!(a.add(&TruncatedSeries::one(&uni(2))).is_ok());
    }

    #[test]
    fn space_construction_errors() {
        assert!(SeriesSpace::new(Vec::<(&str, usize)>::new()).is_err());
        assert!(SeriesSpace::new([("a", 1), ("b", 1), ("c", 1), ("d", 1)]).is_err());
        assert!(SeriesSpace::new([("a", 1), ("a", 2)]).is_err());
    }

    #[test]
    fn exp_examples() {
        let sp = uni(3);
        let mut t = TruncatedSeries::zero(&sp);
        t.coeffs[1] = q(1, 1);
        assert_eq!(
            t.exp().unwrap().coeffs(),
            &[q(1, 1), q(1, 1), q(1, 2), q(1, 6)]
        );

        let g = TruncatedSeries::exp_atom(&sp, &[1], q(1, 1))
            .unwrap()
            .add(&TruncatedSeries::exp_atom(&sp, &[2], q(1, 2)).unwrap())
            .unwrap()
            .add(&TruncatedSeries::constant(&sp, q(-3, 2)))
            .unwrap();
        assert_eq!(g.exp().unwrap().coeff(&[3]).unwrap(), &q(31, 6));

        let z = TruncatedSeries::zero(&sp);
        assert_eq!(z.exp().unwrap(), TruncatedSeries::one(&sp));
    }

    #[test]
    fn exp_rejects_nonzero_constant() {
        let one = TruncatedSeries::one(&uni(2));
        assert!(matches!(one.exp(), Err(Error::Domain(_))));
    }

    #[test]
    fn egf_count_checks() {
        let sp = uni(6);
        let g = TruncatedSeries::exp_atom(&sp, &[1], q(1, 1))
            .unwrap()
            .sub(&TruncatedSeries::one(&sp))
            .unwrap();
        assert_eq!(g.exp().unwrap().egf_count(&[6]).unwrap(), BigInt::from(203));
        assert!(matches!(g.egf_count(&[7]), Err(Error::Range { .. })));

        let half = TruncatedSeries::constant(&sp, q(1, 2));
        assert!(matches!(half.egf_count(&[0]), Err(Error::Consistency(_))));
    }

    #[test]
    fn involution_egf_examples() {
        let sp = SeriesSpace::new([("y", 2), ("x", 2)]).unwrap();
        let g = TruncatedSeries::exp_atom(&sp, &[1, 1], q(1, 1))
            .unwrap()
            .add(&TruncatedSeries::exp_atom(&sp, &[2, 0], q(1, 2)).unwrap())
            .unwrap()
            .add(&TruncatedSeries::constant(&sp, q(-3, 2)))
            .unwrap();
        let f = g.exp().unwrap();
        assert_eq!(f.egf_count(&[2, 2]).unwrap(), BigInt::from(31));
        assert_eq!(f.egf_count(&[0, 0]).unwrap(), BigInt::from(1));
    }

    #[test]
    fn display_is_readable() {
        let s = TruncatedSeries::exp_atom(&uni(2), &[-2], q(1, 1)).unwrap();
        assert_eq!(s.to_string(), "1 - 2*t + 2*t^2 + O(t^3)");
    }
}
