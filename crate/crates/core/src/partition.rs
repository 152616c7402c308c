//! Integer partitions, Young-diagram cell geometry and the scalar cell statistics.
//!
//! Cells are 1-based `(row, col)` pairs in English notation: row 1 is the top
//! row and column 1 the leftmost column.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A weakly decreasing list of positive parts. The empty list is the empty partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell of a Young diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Weights `(alpha, beta)` of the cell label `alpha * row + beta * col`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StatParams {
    alpha: u32,
    beta: u32,
}

impl StatParams {
    pub fn new(alpha: u32, beta: u32) -> Result<Self, Error> {
        if alpha == 0 && beta == 0 {
            return Err(Error::InvalidParams(
                "alpha and beta must not both be zero".into(),
            ));
        }
        Ok(StatParams { alpha, beta })
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    /// `alpha + beta`.
    pub fn modulus(&self) -> u32 {
        self.alpha + self.beta
    }

    pub fn label(&self, cell: Cell) -> usize {
        self.alpha as usize * cell.row + self.beta as usize * cell.col
    }

    /// Membership test for the hook set: `alpha * leg == beta * (arm + 1)` and
    /// `alpha + beta` divides the hook length.
    pub fn accepts(&self, arm: usize, leg: usize) -> bool {
        let (a, b) = (self.alpha as usize, self.beta as usize);
        a * leg == b * (arm + 1) && (arm + leg + 1).is_multiple_of(a + b)
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts increase.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Parse {
                input: join(&parts),
                reason: format!(
                    "parts must be weakly decreasing ({} < {} at position {})",
                    parts[i],
                    parts[i + 1],
                    i + 1
                ),
            });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Self {
        Partition {
            parts: (1..=k).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `i` (1-based); 0 beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    pub fn conjugate(&self) -> Partition {
        let mut parts = vec![0; self.largest()];
        for &p in &self.parts {
            for c in parts.iter_mut().take(p) {
                *c += 1;
            }
        }
        Partition { parts }
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |c| Cell::new(r + 1, c)))
    }

    /// Arm and leg lengths of `cell`.
    pub fn arm_leg(&self, cell: Cell) -> Result<(usize, usize), Error> {
        if !self.contains(cell) {
            return Err(Error::CellOutside(cell));
        }
        let conj = self.conjugate();
        Ok(self.arm_leg_with(&conj, cell))
    }

    fn arm_leg_with(&self, conj: &Partition, cell: Cell) -> (usize, usize) {
        (
            self.part(cell.row) - cell.col,
            conj.part(cell.col) - cell.row,
        )
    }

    /// `(cell, arm, leg)` for every cell, row-major.
    pub fn arm_legs(&self) -> Vec<(Cell, usize, usize)> {
        let conj = self.conjugate();
        self.cells()
            .map(|c| {
                let (a, l) = self.arm_leg_with(&conj, c);
                (c, a, l)
            })
            .collect()
    }

    /// Cells with `alpha * leg == beta * (arm + 1)` whose hook length is divisible
    /// by `alpha + beta`, in row-major order.
    pub fn hook_set(&self, p: StatParams) -> Vec<Cell> {
        self.arm_legs()
            .into_iter()
            .filter(|&(_, a, l)| p.accepts(a, l))
            .map(|(c, _, _)| c)
            .collect()
    }

    /// `h_{alpha,beta}`: the size of [`Partition::hook_set`].
    pub fn h_stat(&self, p: StatParams) -> usize {
        self.arm_legs()
            .into_iter()
            .filter(|&(_, a, l)| p.accepts(a, l))
            .count()
    }

    /// Number of cells whose arm and leg are equal.
    pub fn h_zero(&self) -> usize {
        self.arm_legs().into_iter().filter(|&(_, a, l)| a == l).count()
    }

    /// Largest part occurring at least `m` times, or 0 if there is none.
    pub fn largest_repeated(&self, m: usize) -> usize {
        assert!(m >= 1, "multiplicity threshold must be positive");
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&x| x == v).count();
            if run >= m {
                return v;
            }
            i += run;
        }
        0
    }

    /// No part repeated `m` or more times.
    pub fn is_m_regular(&self, m: usize) -> bool {
        self.largest_repeated(m) == 0
    }

    /// No column length repeated `m` or more times (`parts[i] - parts[i+1] < m`).
    pub fn is_m_restricted(&self, m: usize) -> bool {
        (1..=self.len()).all(|i| self.part(i) - self.part(i + 1) < m)
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Multiplicity of each part value, as `(value, count)` in decreasing value order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Diagonal lengths. Entry `k` (0-based) counts cells whose label equals
    /// `k + alpha + beta`, so the pattern starts at the label of the corner cell.
    /// Trailing zeros are trimmed.
    pub fn diagonal_pattern(&self, p: StatParams) -> Vec<usize> {
        let base = p.modulus() as usize;
        let mut out = Vec::new();
        for c in self.cells() {
            let idx = p.label(c) - base;
            if idx >= out.len() {
                out.resize(idx + 1, 0);
            }
            out[idx] += 1;
        }
        out
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// True when every cell of `self` lies in `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && (1..=self.len()).all(|i| self.part(i) <= other.part(i))
    }
}

fn join(parts: &[usize]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&join(&self.parts))
        }
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated nonnegative integers. `""` and `"-"` are the empty partition.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        if t.is_empty() || t == "-" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| Error::Parse {
                    input: s.to_string(),
                    reason: format!("`{}` is not a nonnegative integer", tok.trim()),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts).map_err(|e| match e {
            Error::Parse { reason, .. } => Error::Parse {
                input: s.to_string(),
                reason,
            },
            other => other,
        })
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self, Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

/// Parses a partition, accepting `""` and `"-"` as the empty partition.
pub fn parse_partition(text: &str) -> Result<Partition, Error> {
    text.parse()
}

/// Every partition of `n`, in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        current: if n == 0 { Some(Vec::new()) } else { Some(vec![n]) },
    }
}

/// Iterator returned by [`partitions_of`].
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        self.current = next_reverse_lex(&cur);
        Some(Partition { parts: cur })
    }
}

fn next_reverse_lex(parts: &[usize]) -> Option<Vec<usize>> {
    // Rightmost part greater than one.
    let k = parts.iter().rposition(|&p| p > 1)?;
    let mut next = parts[..k].to_vec();
    let v = parts[k] - 1;
    let mut rem = parts[k..].iter().sum::<usize>();
    while rem > 0 {
        let take = v.min(rem);
        next.push(take);
        rem -= take;
    }
    Some(next)
}

/// Every partition of size at most `max`, grouped by size in increasing order.
pub fn partitions_up_to(max: usize) -> impl Iterator<Item = Partition> {
    (0..=max).flat_map(partitions_of)
}

/// Every partition contained in `shape`, in no particular order.
pub fn subpartitions(shape: &Partition) -> Vec<Partition> {
    fn go(shape: &Partition, row: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: cur.clone() });
        if row > shape.len() {
            return;
        }
        let hi = cap.min(shape.part(row));
        for v in 1..=hi {
            cur.push(v);
            go(shape, row + 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(shape, 1, usize::MAX, &mut Vec::new(), &mut out);
    out
}
