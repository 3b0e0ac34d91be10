//! Rotation certificates for strict bounds on the sum of a cyclic list.
//!
//! For a list `x_1..x_n` with total `s` and a bound `h`, put `c = h/n`.
//! Then `s < h` holds exactly when some rotation start `k` keeps every
//! prefix sum `x_k + .. + x_{k+j-1}` strictly below `c*j`, and dually for
//! `s > h`. The non-strict forms (`s >= h`, `s <= h`) are characterised by
//! per-start windows, see [`prefix_condition_all_starts`].
//!
//! All indices exposed here (rotation starts, block starts) are 1-based.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicError {
    #[error("a cyclic list needs at least one entry")]
    Empty,
    #[error("rotation start {k} is outside 1..={n}")]
    IndexOutOfRange { k: usize, n: usize },
    #[error("epsilon must satisfy 0 < epsilon < 1, got {0}")]
    Epsilon(Rational),
    #[error("precondition failed: start {start} has no window meeting the bound")]
    NoWindow { start: usize },
}

/// The list `x_1..x_n`, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicList {
    values: Vec<Rational>,
}

impl CyclicList {
    pub fn new(values: Vec<Rational>) -> Result<Self, CyclicError> {
        if values.is_empty() {
            return Err(CyclicError::Empty);
        }
        Ok(CyclicList { values })
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(values: I) -> Result<Self, CyclicError> {
        Self::new(values.into_iter().map(Rational::from_integer).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `x_i` with 1-based, cyclic `i` (any `i >= 1`).
    pub fn get(&self, i: usize) -> Rational {
        self.values[(i - 1) % self.values.len()]
    }

    pub fn negated(&self) -> CyclicList {
        CyclicList {
            values: self.values.iter().map(|x| -*x).collect(),
        }
    }

    /// The list rotated so that `x_k` comes first.
    pub fn rotated(&self, k: usize) -> CyclicList {
        let n = self.len();
        CyclicList {
            values: (0..n).map(|j| self.get(k + j)).collect(),
        }
    }

    /// All `n` prefix sums of the rotation starting at `k`.
    pub fn rotation_prefix_sums(&self, k: usize) -> Vec<Rational> {
        let mut acc = Rational::ZERO;
        (0..self.len())
            .map(|j| {
                acc += self.get(k + j);
                acc
            })
            .collect()
    }
}

/// Sum of all entries.
pub fn total(xs: &CyclicList) -> Rational {
    xs.values.iter().sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Every prefix strictly below `c*j`; witnesses `total < h`.
    Below,
    /// Every prefix strictly above `c*j`; witnesses `total > h`.
    Above,
}

impl Direction {
    fn holds(self, prefix: Rational, slope: Rational, j: usize) -> bool {
        let line = slope * j as i64;
        match self {
            Direction::Below => prefix < line,
            Direction::Above => prefix > line,
        }
    }

    pub fn flipped(self) -> Direction {
        match self {
            Direction::Below => Direction::Above,
            Direction::Above => Direction::Below,
        }
    }
}

/// Bound `h` with the tolerance `epsilon` used by equality certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundSpec {
    pub h: Rational,
    pub epsilon: Rational,
}

impl BoundSpec {
    pub fn new(h: Rational, epsilon: Rational) -> Result<Self, CyclicError> {
        check_epsilon(epsilon)?;
        Ok(BoundSpec { h, epsilon })
    }

    pub fn with_default_epsilon(h: Rational) -> Self {
        BoundSpec {
            h,
            epsilon: Rational::HALF,
        }
    }
}

pub(crate) fn check_epsilon(epsilon: Rational) -> Result<(), CyclicError> {
    if epsilon.is_positive() && epsilon < Rational::ONE {
        Ok(())
    } else {
        Err(CyclicError::Epsilon(epsilon))
    }
}

/// A rotation start `k` together with the full prefix table it produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationCertificate {
    pub direction: Direction,
    pub k: usize,
    pub h: Rational,
    pub prefix_sums: Vec<Rational>,
}

impl RotationCertificate {
    pub fn n(&self) -> usize {
        self.prefix_sums.len()
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateRepr {
    direction: Direction,
    k: usize,
    n: usize,
    h: Rational,
    prefix: Vec<Rational>,
}

impl Serialize for RotationCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CertificateRepr {
            direction: self.direction,
            k: self.k,
            n: self.n(),
            h: self.h,
            prefix: self.prefix_sums.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RotationCertificate {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CertificateRepr::deserialize(deserializer)?;
        if repr.n != repr.prefix.len() {
            return Err(serde::de::Error::custom(format!(
                "certificate declares n = {} but carries {} prefix sums",
                repr.n,
                repr.prefix.len()
            )));
        }
        Ok(RotationCertificate {
            direction: repr.direction,
            k: repr.k,
            h: repr.h,
            prefix_sums: repr.prefix,
        })
    }
}

fn slope(h: Rational, n: usize) -> Rational {
    h / n as i64
}

fn rotation_satisfies(prefix: &[Rational], slope: Rational, direction: Direction) -> bool {
    prefix
        .iter()
        .enumerate()
        .all(|(j, p)| direction.holds(*p, slope, j + 1))
}

fn certificate_at(
    xs: &CyclicList,
    h: Rational,
    direction: Direction,
    k: usize,
) -> Option<RotationCertificate> {
    let prefix_sums = xs.rotation_prefix_sums(k);
    rotation_satisfies(&prefix_sums, slope(h, xs.len()), direction).then_some(RotationCertificate {
        direction,
        k,
        h,
        prefix_sums,
    })
}

/// Tries every rotation (O(n^2)) and returns the one with the smallest `k`.
pub fn scan_rotation(
    xs: &CyclicList,
    h: Rational,
    direction: Direction,
) -> Option<RotationCertificate> {
    (1..=xs.len()).find_map(|k| certificate_at(xs, h, direction, k))
}

/// Linear-time rotation search.
///
/// For `Below`, the candidate start is the position right after the last
/// maximum of the running sums of `x_i - c` (the empty sum included); for
/// `Above`, after the last minimum. The candidate is verified and, should
/// that ever fail, the full scan decides. The returned `k` need not be the smallest valid start.
pub fn find_rotation(
    xs: &CyclicList,
    h: Rational,
    direction: Direction,
) -> Option<RotationCertificate> {
    let n = xs.len();
    let c = slope(h, n);
    // Running sums P_0 = 0, P_1, .., P_{n-1}; the start goes right after
    // the last extreme one.
    let mut running = Rational::ZERO;
    let mut best = (Rational::ZERO, 0);
    for (i, x) in xs.values()[..n - 1].iter().enumerate() {
        running += *x - c;
        let better = match direction {
            Direction::Below => running >= best.0,
            Direction::Above => running <= best.0,
        };
        if better {
            best = (running, i + 1);
        }
    }
    let candidate = best.1 + 1;
    certificate_at(xs, h, direction, candidate).or_else(|| scan_rotation(xs, h, direction))
}

/// Recomputes the prefix table of `cert` from `xs` and checks every strict
/// inequality. A stored table or `h` that disagrees with the recomputation
/// makes the certificate invalid.
pub fn verify_certificate(
    xs: &CyclicList,
    h: Rational,
    cert: &RotationCertificate,
) -> Result<bool, CyclicError> {
    let n = xs.len();
    if cert.k == 0 || cert.k > n {
        return Err(CyclicError::IndexOutOfRange { k: cert.k, n });
    }
    if cert.h != h || cert.prefix_sums.len() != n {
        return Ok(false);
    }
    let recomputed = xs.rotation_prefix_sums(cert.k);
    Ok(recomputed == cert.prefix_sums
        && rotation_satisfies(&recomputed, slope(h, n), cert.direction))
}

/// Non-strict window bound used by the per-start characterisation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WindowBound {
    /// Some window from each start has sum `>= c * length`; iff `total >= h`.
    AtLeast,
    /// Some window from each start has sum `<= c * length`; iff `total <= h`.
    AtMost,
}

impl WindowBound {
    fn meets(self, sum: Rational, slope: Rational, len: usize) -> bool {
        let line = slope * len as i64;
        match self {
            WindowBound::AtLeast => sum >= line,
            WindowBound::AtMost => sum <= line,
        }
    }
}

fn shortest_window(
    xs: &CyclicList,
    slope: Rational,
    bound: WindowBound,
    start: usize,
) -> Option<usize> {
    let mut acc = Rational::ZERO;
    (1..=xs.len()).find(|&len| {
        acc += xs.get(start + len - 1);
        bound.meets(acc, slope, len)
    })
}

/// For each start `i`, the shortest window length `g_i` meeting the bound.
///
/// Returns `Some(g_1..g_n)` when every start has such a window, which
/// happens exactly when `total >= h` (resp. `total <= h`).
pub fn prefix_condition_all_starts(
    xs: &CyclicList,
    h: Rational,
    bound: WindowBound,
) -> Option<Vec<usize>> {
    let c = slope(h, xs.len());
    (1..=xs.len())
        .map(|start| shortest_window(xs, c, bound, start))
        .collect()
}

/// The first start whose shortest window is longest.
pub fn longest_window_start(windows: &[usize]) -> usize {
    let max = windows.iter().copied().max().unwrap_or(0);
    windows.iter().position(|&g| g == max).map_or(1, |i| i + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    /// 1-based position of the first entry, reduced modulo `n`.
    pub start: usize,
    pub len: usize,
    pub sum: Rational,
}

/// Consecutive shortest windows laid end to end from a chosen start.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCover {
    pub start: usize,
    pub blocks: Vec<Block>,
}

impl BlockCover {
    pub fn covered(&self) -> usize {
        self.blocks.iter().map(|b| b.len).sum()
    }

    /// True when the last block runs past position `start + n - 1`.
    pub fn wraps(&self, n: usize) -> bool {
        self.covered() > n
    }
}

/// Greedy chain of shortest windows: take `g_start`, then the shortest window
/// from the next uncovered position, until at least `n` positions are
/// covered. Only the final block may run past the starting point.
///
/// When `start` attains the longest shortest-window (see
/// [`longest_window_start`]) the blocks cover exactly `n` positions; other
/// starts are accepted and may produce a wrapping final block.
pub fn greedy_block_cover(
    xs: &CyclicList,
    c: Rational,
    start: usize,
    bound: WindowBound,
) -> Result<BlockCover, CyclicError> {
    let n = xs.len();
    if start == 0 || start > n {
        return Err(CyclicError::IndexOutOfRange { k: start, n });
    }
    let window_at = |offset: usize| {
        let pos = (start - 1 + offset) % n + 1;
        shortest_window(xs, c, bound, pos)
            .map(|len| Block {
                start: pos,
                len,
                sum: (0..len).map(|j| xs.get(pos + j)).sum(),
            })
            .ok_or(CyclicError::NoWindow { start: pos })
    };
    let first = window_at(0)?;
    let mut end = first.len;
    let mut blocks = vec![first];
    while end < n {
        let block = window_at(end)?;
        end += block.len;
        blocks.push(block);
    }
    Ok(BlockCover { start, blocks })
}

/// A pair of rotations certifying `h - eps < total < h + eps`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityCertificate {
    pub below: RotationCertificate,
    pub above: RotationCertificate,
}

impl EqualityCertificate {
    pub fn k1(&self) -> usize {
        self.below.k
    }

    pub fn k2(&self) -> usize {
        self.above.k
    }

    pub fn verify(&self, xs: &CyclicList, bound: &BoundSpec) -> Result<bool, CyclicError> {
        Ok(self.below.direction == Direction::Below
            && self.above.direction == Direction::Above
            && verify_certificate(xs, bound.h + bound.epsilon, &self.below)?
            && verify_certificate(xs, bound.h - bound.epsilon, &self.above)?)
    }
}

/// Some exactly when the total lies strictly within `epsilon` of `h`; for
/// integer-valued lists and integer `h` that means `total == h`.
pub fn equality_certificate(
    xs: &CyclicList,
    bound: &BoundSpec,
) -> Result<Option<EqualityCertificate>, CyclicError> {
    check_epsilon(bound.epsilon)?;
    let below = find_rotation(xs, bound.h + bound.epsilon, Direction::Below);
    let above = find_rotation(xs, bound.h - bound.epsilon, Direction::Above);
    Ok(below
        .zip(above)
        .map(|(below, above)| EqualityCertificate { below, above }))
}
