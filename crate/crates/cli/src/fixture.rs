//! Published reference values, shipped as a CSV data file.

use std::fmt;
use std::str::FromStr;

use gridpart::GridShape;
use num_bigint::BigInt;
use serde::Serialize;

const PUBLISHED: &str = include_str!("../data/published_values.csv");

/// A reported quantity for one grid shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Quantity {
    B,
    H,
    V,
    R,
    S,
    L,
}

impl Quantity {
    pub const ALL: [Quantity; 6] = [
        Quantity::B,
        Quantity::H,
        Quantity::V,
        Quantity::R,
        Quantity::S,
        Quantity::L,
    ];
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Quantity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.to_string() == s)
            .ok_or_else(|| format!("unknown quantity `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureEntry {
    pub shape: GridShape,
    pub quantity: Quantity,
    pub value: BigInt,
    pub source: String,
}

#[derive(Debug, Clone)]
pub struct PaperFixture {
    entries: Vec<FixtureEntry>,
}

impl PaperFixture {
    /// The bundled data file.
    pub fn published() -> Self {
        Self::parse(PUBLISHED).expect("bundled fixture is well formed")
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate().skip(1) {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.splitn(5, ',').collect();
            let [rows, cols, quantity, value, source] = fields[..] else {
                return Err(format!("line {}: expected 5 fields", lineno + 1));
            };
            let bad = |what: &str| format!("line {}: bad {what}", lineno + 1);
            let rows = rows.parse().map_err(|_| bad("rows"))?;
            let cols = cols.parse().map_err(|_| bad("cols"))?;
            entries.push(FixtureEntry {
                shape: GridShape::new(rows, cols).map_err(|e| e.to_string())?,
                quantity: quantity.parse()?,
                value: value.parse().map_err(|_| bad("value"))?,
                source: source.to_string(),
            });
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[FixtureEntry] {
        &self.entries
    }

    pub fn get(&self, shape: GridShape, quantity: Quantity) -> Option<&BigInt> {
        self.entries
            .iter()
            .find(|e| e.shape == shape && e.quantity == quantity)
            .map(|e| &e.value)
    }

    /// Distinct shapes, sorted by rows then columns.
    pub fn shapes(&self) -> Vec<GridShape> {
        let mut shapes: Vec<GridShape> = self.entries.iter().map(|e| e.shape).collect();
        shapes.sort();
        shapes.dedup();
        shapes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fixture_contents() {
        let f = PaperFixture::published();
        assert_eq!(f.entries().len(), 29);
        let table = f
            .entries()
            .iter()
            .filter(|e| e.shape != GridShape::new(3, 1).unwrap());
        assert_eq!(table.count(), 24);
        let s = GridShape::new(2, 3).unwrap();
        assert_eq!(f.get(s, Quantity::V), Some(&BigInt::from(12)));
        assert_eq!(f.get(s, Quantity::B), None);
        assert_eq!(f.shapes().len(), 7);
    }

    #[test]
    fn parse_errors() {
        assert!(PaperFixture::parse("h\n1,2,H\n").is_err());
        assert!(PaperFixture::parse("h\n0,2,H,1,x\n").is_err());
        assert!(PaperFixture::parse("h\n1,2,Q,1,x\n").is_err());
    }
}
