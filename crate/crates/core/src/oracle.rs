//! Ground truth by brute force: walk every set partition of the grid cells
//! as a restricted growth string and test each one directly.
//!
//! The walk is split by prefix into independent chunks whose subtotals are
//! summed, so results do not depend on the number of worker threads.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::Hash;
use std::ops::AddAssign;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::foundation::binomial;
use crate::symmetry::{GridShape, InvolutionProfile, SymmetryElement};

/// Default enumeration cap (Bell(12) = 4,213,597 partitions).
pub const DEFAULT_CAP: usize = 12;
/// Upper limit for the opt-in cap (Bell(15) = 1,382,958,545 partitions).
pub const HARD_CAP: usize = 15;

const PREFIX_LEN: usize = 7;
const NO_LABEL: u8 = u8::MAX;

/// A set partition in restricted-growth form: `rgs[i]` is the block of
/// element `i`, blocks numbered in order of first appearance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    rgs: Vec<u8>,
}

impl SetPartition {
    pub fn from_rgs(rgs: Vec<u8>) -> Result<Self> {
        let mut next = 0u8;
        for &v in &rgs {
            if v > next {
                return Err(Error::Domain(format!(
                    "{rgs:?} is not a restricted growth string"
                )));
            }
            if v == next {
                next = next
                    .checked_add(1)
                    .ok_or_else(|| Error::Domain("more than 255 blocks".to_string()))?;
            }
        }
        Ok(Self { rgs })
    }

    /// Canonical form of an arbitrary labelling.
    pub fn from_labels<T: Eq + Hash>(labels: &[T]) -> Self {
        let mut seen: HashMap<&T, u8> = HashMap::new();
        let rgs = labels
            .iter()
            .map(|l| {
                let n = seen.len() as u8;
                *seen.entry(l).or_insert(n)
            })
            .collect();
        Self { rgs }
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    pub fn len(&self) -> usize {
        self.rgs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rgs.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.rgs.iter().max().map_or(0, |&m| m as usize + 1)
    }
}

/// Moves `rgs` to its lexicographic successor, leaving the first `frozen`
/// positions alone. `maxes[i]` tracks `max(rgs[..=i])`.
fn advance(rgs: &mut [u8], maxes: &mut [u8], frozen: usize) -> bool {
    let start = frozen.max(1);
    for i in (start..rgs.len()).rev() {
        if rgs[i] <= maxes[i - 1] {
            rgs[i] += 1;
            maxes[i] = maxes[i - 1].max(rgs[i]);
            for j in i + 1..rgs.len() {
                rgs[j] = 0;
                maxes[j] = maxes[i];
            }
            return true;
        }
    }
    false
}

fn prefix_maxes(rgs: &[u8]) -> Vec<u8> {
    rgs.iter()
        .scan(0u8, |m, &v| {
            *m = (*m).max(v);
            Some(*m)
        })
        .collect()
}

/// All partitions of a `k`-set in lexicographic order of their growth strings.
#[derive(Debug, Clone)]
pub struct Partitions {
    rgs: Vec<u8>,
    maxes: Vec<u8>,
    started: bool,
    done: bool,
}

impl Partitions {
    pub fn new(k: usize) -> Self {
        Self {
            rgs: vec![0; k],
            maxes: vec![0; k],
            started: false,
            done: false,
        }
    }
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        if self.started && !advance(&mut self.rgs, &mut self.maxes, 0) {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(SetPartition {
            rgs: self.rgs.clone(),
        })
    }
}

/// Calls `visit` on every growth string of length `k` that starts with `prefix`.
fn for_each_completion(prefix: &[u8], k: usize, mut visit: impl FnMut(&[u8])) {
    let mut rgs = prefix.to_vec();
    rgs.resize(k, 0);
    let mut maxes = prefix_maxes(&rgs);
    loop {
        visit(&rgs);
        if !advance(&mut rgs, &mut maxes, prefix.len()) {
            break;
        }
    }
}

/// The partition obtained by carrying each element `i` to `perm[i]`.
pub fn apply_permutation(p: &SetPartition, perm: &[usize]) -> Result<SetPartition> {
    if perm.len() != p.len() {
        return Err(Error::Dimension(format!(
            "permutation of length {} applied to a partition of {} elements",
            perm.len(),
            p.len()
        )));
    }
    let mut moved = vec![0u8; p.len()];
    let mut hit = vec![false; p.len()];
    for (i, &j) in perm.iter().enumerate() {
        if j >= p.len() || hit[j] {
            return Err(Error::Domain(format!("{perm:?} is not a permutation")));
        }
        hit[j] = true;
        moved[j] = p.rgs[i];
    }
    Ok(SetPartition::from_labels(&moved))
}

/// Whether the involution `perm` maps every block onto a block.
#[inline]
fn is_fixed(rgs: &[u8], perm: &[u8]) -> bool {
    let mut image = [NO_LABEL; 16];
    for (i, &a) in rgs.iter().enumerate() {
        let b = rgs[perm[i] as usize];
        let slot = &mut image[a as usize];
        if *slot == NO_LABEL {
            *slot = b;
        } else if *slot != b {
            return false;
        }
    }
    true
}

/// Compares the canonical image of `rgs` under the involution `perm` with
/// `rgs` itself, stopping at the first difference.
#[inline]
fn image_cmp(rgs: &[u8], perm: &[u8]) -> Ordering {
    let mut relabel = [NO_LABEL; 16];
    let mut next = 0u8;
    for (j, &own) in rgs.iter().enumerate() {
        let raw = rgs[perm[j] as usize] as usize;
        if relabel[raw] == NO_LABEL {
            relabel[raw] = next;
            next += 1;
        }
        match relabel[raw].cmp(&own) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

/// Everything the oracle measures for one shape, in one pass.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Survey {
    pub total: u64,
    /// Indexed like [`SymmetryElement::ALL`].
    pub fixed: [u64; 4],
    pub klein: u64,
    pub orbits: u64,
}

impl AddAssign for Survey {
    fn add_assign(&mut self, rhs: Self) {
        self.total += rhs.total;
        for (a, b) in self.fixed.iter_mut().zip(rhs.fixed) {
            *a += b;
        }
        self.klein += rhs.klein;
        self.orbits += rhs.orbits;
    }
}

impl Survey {
    pub fn fixed_by(&self, g: SymmetryElement) -> u64 {
        self.fixed[SymmetryElement::ALL.iter().position(|&e| e == g).unwrap()]
    }
}

#[derive(Debug, Default, Clone, Copy)]
struct Count(u64);

impl AddAssign for Count {
    fn add_assign(&mut self, rhs: Self) {
        self.0 += rhs.0;
    }
}

/// Exhaustive counter with an enumeration cap and a worker count.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    cap: usize,
    jobs: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new()
    }
}

impl Oracle {
    /// Cap [`DEFAULT_CAP`], rayon's default thread count.
    pub fn new() -> Self {
        Self {
            cap: DEFAULT_CAP,
            jobs: 0,
        }
    }

    /// Raises (or lowers) the cap; anything above [`HARD_CAP`] is refused.
    pub fn with_cap(mut self, cap: usize) -> Result<Self> {
        if cap > HARD_CAP {
            return Err(Error::Capacity {
                cells: cap,
                cap: HARD_CAP,
            });
        }
        self.cap = cap;
        Ok(self)
    }

    /// Worker threads; `0` uses the global pool, `1` runs inline.
    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn admits(&self, cells: usize) -> bool {
        cells <= self.cap
    }

    fn check(&self, cells: usize) -> Result<()> {
        if self.admits(cells) {
            Ok(())
        } else {
            Err(Error::Capacity {
                cells,
                cap: self.cap,
            })
        }
    }

    pub fn enumerate_partitions(&self, k: usize) -> Result<Partitions> {
        self.check(k)?;
        Ok(Partitions::new(k))
    }

    fn fold<A, F>(&self, k: usize, visit: F) -> A
    where
        A: Default + AddAssign + Send,
        F: Fn(&[u8], &mut A) + Sync,
    {
        let prefixes: Vec<SetPartition> = Partitions::new(k.min(PREFIX_LEN)).collect();
        let chunk = |prefix: &SetPartition| {
            let mut acc = A::default();
            for_each_completion(prefix.rgs(), k, |rgs| visit(rgs, &mut acc));
            acc
        };
        let sum = |iter: &mut dyn Iterator<Item = A>| {
            iter.fold(A::default(), |mut a, b| {
                a += b;
                a
            })
        };
        match self.jobs {
            1 => sum(&mut prefixes.iter().map(chunk)),
            0 => prefixes
                .par_iter()
                .map(chunk)
                .reduce(A::default, |mut a, b| {
                    a += b;
                    a
                }),
            jobs => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build()
                    .expect("thread pool");
                pool.install(|| {
                    prefixes
                        .par_iter()
                        .map(chunk)
                        .reduce(A::default, |mut a, b| {
                            a += b;
                            a
                        })
                })
            }
        }
    }

    fn permutation(shape: GridShape, g: SymmetryElement) -> Vec<u8> {
        shape
            .cell_permutation(g)
            .into_iter()
            .map(|i| i as u8)
            .collect()
    }

    /// Number of partitions of a `k`-set, by counting them.
    pub fn count_partitions(&self, k: usize) -> Result<BigInt> {
        self.check(k)?;
        Ok(self.fold(k, |_, acc: &mut Count| acc.0 += 1).0.into())
    }

    /// Partitions of the grid fixed by `g`.
    pub fn count_invariant(&self, shape: GridShape, g: SymmetryElement) -> Result<BigInt> {
        self.check(shape.cells())?;
        let perm = Self::permutation(shape, g);
        let n = self.fold(shape.cells(), |rgs, acc: &mut Count| {
            if is_fixed(rgs, &perm) {
                acc.0 += 1;
            }
        });
        Ok(n.0.into())
    }

    /// Partitions of the grid fixed by both reflections, hence by the group.
    pub fn count_klein_invariant(&self, shape: GridShape) -> Result<BigInt> {
        self.check(shape.cells())?;
        let rows = Self::permutation(shape, SymmetryElement::ReflectRows);
        let cols = Self::permutation(shape, SymmetryElement::ReflectCols);
        let n = self.fold(shape.cells(), |rgs, acc: &mut Count| {
            if is_fixed(rgs, &rows) && is_fixed(rgs, &cols) {
                acc.0 += 1;
            }
        });
        Ok(n.0.into())
    }

    /// Orbits of the group on partitions, counted as the partitions that are
    /// lexicographically no larger than any of their images.
    pub fn count_orbits(&self, shape: GridShape) -> Result<BigInt> {
        self.check(shape.cells())?;
        let perms: Vec<Vec<u8>> = SymmetryElement::NONTRIVIAL
            .iter()
            .map(|&g| Self::permutation(shape, g))
            .collect();
        let n = self.fold(shape.cells(), |rgs, acc: &mut Count| {
            if perms.iter().all(|p| image_cmp(rgs, p) != Ordering::Less) {
                acc.0 += 1;
            }
        });
        Ok(n.0.into())
    }

    /// Every oracle quantity for `shape` in a single pass.
    pub fn survey(&self, shape: GridShape) -> Result<Survey> {
        self.check(shape.cells())?;
        let perms: Vec<Vec<u8>> = SymmetryElement::NONTRIVIAL
            .iter()
            .map(|&g| Self::permutation(shape, g))
            .collect();
        Ok(self.fold(shape.cells(), |rgs, acc: &mut Survey| {
            acc.total += 1;
            acc.fixed[0] += 1;
            let mut minimal = true;
            let mut fixed = [false; 3];
            for (k, p) in perms.iter().enumerate() {
                match image_cmp(rgs, p) {
                    Ordering::Equal => fixed[k] = true,
                    Ordering::Less => minimal = false,
                    Ordering::Greater => {}
                }
                if fixed[k] {
                    acc.fixed[k + 1] += 1;
                }
            }
            if fixed[0] && fixed[1] {
                acc.klein += 1;
            }
            if minimal {
                acc.orbits += 1;
            }
        }))
    }

    /// Partitions fixed by an explicit involution with the given cycle type
    /// (pairs `(0,1), (2,3), ...` followed by the fixed points).
    pub fn count_for_profile(&self, profile: InvolutionProfile) -> Result<BigInt> {
        let k = profile.points();
        self.check(k)?;
        let mut perm: Vec<u8> = (0..k as u8).collect();
        for p in 0..profile.pairs {
            perm.swap(2 * p, 2 * p + 1);
        }
        let n = self.fold(k, |rgs, acc: &mut Count| {
            if is_fixed(rgs, &perm) {
                acc.0 += 1;
            }
        });
        Ok(n.0.into())
    }
}

/// Partitions fixed by an involution with `t` pairs and `u` fixed points,
/// by conditioning on block structure rather than generating functions.
///
/// With no fixed points: a block orbit is either one invariant block made
/// of `j` whole pairs, or two swapped blocks sharing `j` pairs (`2^(j-1)`
/// ways), giving `a_j = 2^(j-1) + 1` and the convolution
/// `b(k+1) = sum_j C(k, j-1) a_j b(k+1-j)`. With fixed points: the block
/// holding the last fixed point is invariant and absorbs `a` other fixed
/// points and `b` whole pairs.
pub fn fixed_count_recurrence(profile: InvolutionProfile) -> BigInt {
    let (t, u) = (profile.pairs, profile.fixed);
    let mut table = vec![vec![BigInt::default(); u + 1]; t + 1];

    table[0][0] = BigInt::from(1);
    for k in 0..t {
        let mut next = BigInt::default();
        for j in 1..=k + 1 {
            let a_j = (BigInt::from(1) << (j - 1)) + 1;
            next += binomial(k, j - 1) * a_j * &table[k + 1 - j][0];
        }
        table[k + 1][0] = next;
    }
    for fixed in 1..=u {
        for pairs in 0..=t {
            let mut acc = BigInt::default();
            for a in 0..fixed {
                let ca = binomial(fixed - 1, a);
                for b in 0..=pairs {
                    acc += &ca * binomial(pairs, b) * &table[pairs - b][fixed - 1 - a];
                }
            }
            table[pairs][fixed] = acc;
        }
    }
    table[t][u].clone()
}
