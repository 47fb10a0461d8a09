//! Named generating functions for the `series` command.

use std::fmt;
use std::str::FromStr;

use gridpart::{generating, Result, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesId {
    Bell,
    ReflectionEven,
    Involution,
    RotationOdd,
    PairingEvenEven,
    PairingEvenOdd,
    PairingOddOdd,
    Klein,
}

impl SeriesId {
    pub const ALL: [SeriesId; 8] = [
        SeriesId::Bell,
        SeriesId::ReflectionEven,
        SeriesId::Involution,
        SeriesId::RotationOdd,
        SeriesId::PairingEvenEven,
        SeriesId::PairingEvenOdd,
        SeriesId::PairingOddOdd,
        SeriesId::Klein,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SeriesId::Bell => "bell",
            SeriesId::ReflectionEven => "3.1",
            SeriesId::Involution => "3.2",
            SeriesId::RotationOdd => "4.1",
            SeriesId::PairingEvenEven => "5.1c",
            SeriesId::PairingEvenOdd => "5.2",
            SeriesId::PairingOddOdd => "5.3",
            SeriesId::Klein => "klein",
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            SeriesId::Involution | SeriesId::PairingEvenOdd => 2,
            SeriesId::PairingOddOdd | SeriesId::Klein => 3,
            _ => 1,
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            SeriesId::Bell => "exp(e^t - 1): Bell numbers",
            SeriesId::ReflectionEven => {
                "exp((e^t + 3)(e^t - 1)/2): partitions fixed by an involution with t swapped pairs"
            }
            SeriesId::Involution => {
                "exp(e^(x+y) + e^(2y)/2 - 3/2): partitions fixed by an involution, y = swapped pairs, x = fixed points"
            }
            SeriesId::RotationOdd => {
                "exp(2e^t - 2 + t + (e^t - 1)^2/2): half turn of an odd x odd grid, t = swapped pairs"
            }
            SeriesId::PairingEvenEven => {
                "corrected 5.1 series exp(5(e^t - 1) + 3(e^t - 1)^2), rebuilt term by term from the even x even double sum; quadrant pairing model, exact only up to t^2"
            }
            SeriesId::PairingEvenOdd => {
                "exp((e^x(2e^y - 4) + e^(2x)(e^(2y) + 5) - 4)/2): 2a x (2b+1) grid at y^a x^(ab); quadrant pairing model, exact only up to x^2"
            }
            SeriesId::PairingOddOdd => {
                "exp(l + x + y) exp(2e^(2l) + e^(2l+2x)/2 + e^(2l+2y)/2 + e^(l+x+y) - 2e^l - 2): (2a+1) x (2b+1) grid at y^a x^b l^(ab); quadrant pairing model, exact only up to l^2"
            }
            SeriesId::Klein => {
                "exp(l + x + y) exp(e^(l+x+y) + e^(2l+2x)/2 + e^(2l+2y)/2 + e^(2l)/2 + e^(4l)/4 - 11/4): fully symmetric partitions, l = size-four cell orbits, x = middle-row pairs, y = middle-column pairs, center cell present"
            }
        }
    }

    pub fn build(&self, orders: &[usize]) -> Result<TruncatedSeries> {
        match (self, orders) {
            (SeriesId::Bell, [t]) => generating::bell(*t),
            (SeriesId::ReflectionEven, [t]) => generating::reflection_even(*t),
            (SeriesId::Involution, [y, x]) => generating::involution(*y, *x),
            (SeriesId::RotationOdd, [t]) => generating::rotation_odd(*t),
            (SeriesId::PairingEvenEven, [t]) => generating::pairing_even_even(*t),
            (SeriesId::PairingEvenOdd, [y, x]) => generating::pairing_even_odd(*y, *x),
            (SeriesId::PairingOddOdd, [y, x, l]) => generating::pairing_odd_odd(*y, *x, *l),
            (SeriesId::Klein, [l, x, y]) => generating::klein(*l, *x, *y, true),
            _ => Err(gridpart::Error::Dimension(format!(
                "series {} takes {} orders, got {}",
                self.name(),
                self.arity(),
                orders.len()
            ))),
        }
    }
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SeriesId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = SeriesId::ALL.iter().map(|id| id.name()).collect();
                let hint = if s == "5.1" { " (use 5.1c)" } else { "" };
                format!(
                    "unknown series `{s}`{hint}; expected one of {}",
                    known.join(", ")
                )
            })
    }
}
