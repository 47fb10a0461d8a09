//! Three-way audit: formula value vs exhaustive oracle vs published value.

use std::fmt;

use gridpart::{counts, Error, GridShape, Oracle, SymmetryElement};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::fixture::{PaperFixture, Quantity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    /// Formula and oracle agree (and so does the published value, if any).
    Confirmed,
    /// Formula and oracle agree; the published value differs.
    PaperErratum,
    /// Formula and oracle disagree.
    FormulaBug,
    /// No oracle value (shape beyond the enumeration limit).
    FormulaOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Confirmed => "CONFIRMED",
            Status::PaperErratum => "PAPER_ERRATUM",
            Status::FormulaBug => "FORMULA_BUG",
            Status::FormulaOnly => "FORMULA_ONLY",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyFinding {
    pub shape: GridShape,
    pub quantity: Quantity,
    pub formula: BigInt,
    pub oracle: Option<BigInt>,
    pub paper: Option<BigInt>,
    pub status: Status,
}

impl VerifyFinding {
    pub fn classify(
        shape: GridShape,
        quantity: Quantity,
        formula: BigInt,
        oracle: Option<BigInt>,
        paper: Option<BigInt>,
    ) -> Self {
        let status = match (&oracle, &paper) {
            (None, _) => Status::FormulaOnly,
            (Some(o), _) if *o != formula => Status::FormulaBug,
            (Some(_), Some(p)) if *p != formula => Status::PaperErratum,
            _ => Status::Confirmed,
        };
        Self {
            shape,
            quantity,
            formula,
            oracle,
            paper,
            status,
        }
    }
}

/// A published row whose `B + H + V + R` is not divisible by four, so its
/// group average cannot be an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tripwire {
    pub shape: GridShape,
    pub sum: BigInt,
    pub remainder: BigInt,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub findings: Vec<VerifyFinding>,
    pub tripwires: Vec<Tripwire>,
}

impl VerifyReport {
    pub fn has_formula_bug(&self) -> bool {
        self.findings.iter().any(|f| f.status == Status::FormulaBug)
    }

    pub fn count(&self, status: Status) -> usize {
        self.findings.iter().filter(|f| f.status == status).count()
    }

    pub fn find(&self, shape: GridShape, quantity: Quantity) -> Option<&VerifyFinding> {
        self.findings
            .iter()
            .find(|f| f.shape == shape && f.quantity == quantity)
    }
}

/// Enumerations at least this large are announced to `progress`.
const PROGRESS_CELLS: usize = 10;

/// Every shape with at most `max_cells` cells, ordered by rows then columns.
pub fn shapes_up_to(max_cells: usize, include_squares: bool) -> Vec<GridShape> {
    let mut out = Vec::new();
    for m in 1..=max_cells {
        for n in 1..=max_cells / m {
            let s = GridShape::new(m, n).expect("positive dimensions");
            if include_squares || !s.is_square() {
                out.push(s);
            }
        }
    }
    out
}

fn formula_values(shape: GridShape) -> Result<[BigInt; 6], Error> {
    let r = counts::count_report(shape)?;
    Ok([r.b, r.h, r.v, r.r, r.s, r.l])
}

/// Runs the audit over all shapes with at most `max_cells` cells, plus
/// every published shape when `fixture` is given. `progress` receives one
/// line per oracle enumeration.
pub fn verify(
    max_cells: usize,
    fixture: Option<&PaperFixture>,
    oracle: &Oracle,
    mut progress: impl FnMut(&str),
) -> Result<VerifyReport, Error> {
    let mut shapes = shapes_up_to(max_cells, true);
    if let Some(f) = fixture {
        shapes.extend(f.shapes());
        shapes.sort();
        shapes.dedup();
    }

    let mut report = VerifyReport::default();
    for shape in shapes {
        let formula = formula_values(shape)?;
        let oracle_values = if shape.cells() <= max_cells && oracle.admits(shape.cells()) {
            if shape.cells() >= PROGRESS_CELLS {
                progress(&format!("enumerating {shape} ({} cells)", shape.cells()));
            }
            let sv = oracle.survey(shape)?;
            Some([
                sv.total,
                sv.fixed_by(SymmetryElement::ReflectRows),
                sv.fixed_by(SymmetryElement::ReflectCols),
                sv.fixed_by(SymmetryElement::Rotate180),
                sv.klein,
                sv.orbits,
            ])
        } else {
            None
        };
        for (k, q) in Quantity::ALL.into_iter().enumerate() {
            report.findings.push(VerifyFinding::classify(
                shape,
                q,
                formula[k].clone(),
                oracle_values.map(|v| BigInt::from(v[k])),
                fixture.and_then(|f| f.get(shape, q).cloned()),
            ));
        }
        if let Some(f) = fixture {
            if let Some(t) = tripwire(f, shape) {
                report.tripwires.push(t);
            }
        }
    }
    Ok(report)
}

/// Checks the integrality of the group average using the published H, V
/// and R of `shape` (B is always the Bell number).
pub fn tripwire(fixture: &PaperFixture, shape: GridShape) -> Option<Tripwire> {
    let h = fixture.get(shape, Quantity::H)?;
    let v = fixture.get(shape, Quantity::V)?;
    let r = fixture.get(shape, Quantity::R)?;
    let b = fixture
        .get(shape, Quantity::B)
        .cloned()
        .unwrap_or_else(|| counts::count_b(shape));
    let sum = b + h + v + r;
    let remainder = sum.mod_floor(&BigInt::from(4));
    (!remainder.is_zero()).then_some(Tripwire {
        shape,
        sum,
        remainder,
    })
}
