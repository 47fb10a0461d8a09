//! The m x n grid, the four rectangle symmetries, and the cycle data they
//! induce on the cells.

use std::fmt;

use crate::error::{Error, Result};

/// An m x n rectangle of cells, indexed row-major from zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridShape {
    rows: usize,
    cols: usize,
}

impl GridShape {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidShape { rows, cols });
        }
        Ok(Self { rows, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cells(&self) -> usize {
        self.rows * self.cols
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
        }
    }

    /// Squares carry extra (quarter-turn and diagonal) symmetry that the
    /// four-element group ignores.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn index(&self, row: usize, col: usize) -> usize {
        row * self.cols + col
    }

    /// Image of each cell under `g`: `perm[i]` is where cell `i` goes.
    pub fn cell_permutation(&self, g: SymmetryElement) -> Vec<usize> {
        let (m, n) = (self.rows, self.cols);
        let mut perm = Vec::with_capacity(self.cells());
        for i in 0..m {
            for j in 0..n {
                let (r, c) = match g {
                    SymmetryElement::Identity => (i, j),
                    SymmetryElement::ReflectRows => (m - 1 - i, j),
                    SymmetryElement::ReflectCols => (i, n - 1 - j),
                    SymmetryElement::Rotate180 => (m - 1 - i, n - 1 - j),
                };
                perm.push(self.index(r, c));
            }
        }
        perm
    }

    /// Swapped pairs and fixed cells of `g`, computed from the dimensions.
    pub fn involution_profile(&self, g: SymmetryElement) -> InvolutionProfile {
        let (m, n) = (self.rows, self.cols);
        let (pairs, fixed) = match g {
            SymmetryElement::Identity => (0, m * n),
            SymmetryElement::ReflectRows => (m / 2 * n, m % 2 * n),
            SymmetryElement::ReflectCols => (m * (n / 2), m * (n % 2)),
            SymmetryElement::Rotate180 => (m * n / 2, m * n % 2),
        };
        InvolutionProfile { pairs, fixed }
    }

    /// Orbits of the whole group on the cells, grouped by stabilizer.
    pub fn klein_orbits(&self) -> KleinOrbits {
        let (m, n) = (self.rows, self.cols);
        KleinOrbits {
            free: (m / 2) * (n / 2),
            middle_row: if m % 2 == 1 { n / 2 } else { 0 },
            middle_col: if n % 2 == 1 { m / 2 } else { 0 },
            center: m % 2 == 1 && n % 2 == 1,
        }
    }
}

impl fmt::Display for GridShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// An element of the Klein four-group acting on a rectangle.
///
/// `ReflectRows` swaps row `i` with row `m-1-i` (mirror across the
/// horizontal midline); `ReflectCols` swaps column `j` with `n-1-j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymmetryElement {
    Identity,
    ReflectRows,
    ReflectCols,
    Rotate180,
}

impl SymmetryElement {
    pub const ALL: [SymmetryElement; 4] = [
        SymmetryElement::Identity,
        SymmetryElement::ReflectRows,
        SymmetryElement::ReflectCols,
        SymmetryElement::Rotate180,
    ];

    /// The three non-identity elements.
    pub const NONTRIVIAL: [SymmetryElement; 3] = [
        SymmetryElement::ReflectRows,
        SymmetryElement::ReflectCols,
        SymmetryElement::Rotate180,
    ];

    pub fn compose(self, other: Self) -> Self {
        let bits = |g: Self| match g {
            Self::Identity => 0u8,
            Self::ReflectRows => 1,
            Self::ReflectCols => 2,
            Self::Rotate180 => 3,
        };
        match bits(self) ^ bits(other) {
            0 => Self::Identity,
            1 => Self::ReflectRows,
            2 => Self::ReflectCols,
            _ => Self::Rotate180,
        }
    }
}

/// Cycle type of an involution: `pairs` 2-cycles and `fixed` fixed points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InvolutionProfile {
    pub pairs: usize,
    pub fixed: usize,
}

impl InvolutionProfile {
    pub fn new(pairs: usize, fixed: usize) -> Self {
        Self { pairs, fixed }
    }

    /// Size of the underlying set, `2 * pairs + fixed`.
    pub fn points(&self) -> usize {
        2 * self.pairs + self.fixed
    }

    /// The cycle type read off an explicit permutation, or `None` if the
    /// permutation is not an involution.
    pub fn of_permutation(perm: &[usize]) -> Option<Self> {
        let mut pairs = 0;
        let mut fixed = 0;
        for (i, &j) in perm.iter().enumerate() {
            if perm.get(j) != Some(&i) {
                return None;
            }
            match i.cmp(&j) {
                std::cmp::Ordering::Equal => fixed += 1,
                std::cmp::Ordering::Less => pairs += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
        Some(Self { pairs, fixed })
    }
}

/// Cell orbits of the full group, by stabilizer: orbits of size four,
/// mirrored pairs on the middle row (fixed by `ReflectRows`), mirrored pairs
/// on the middle column (fixed by `ReflectCols`), and the center cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KleinOrbits {
    pub free: usize,
    pub middle_row: usize,
    pub middle_col: usize,
    pub center: bool,
}
