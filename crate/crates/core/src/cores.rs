//! Edge sequences, m-quotients, m-shifts and m-cores, residue counts, addable and
//! removable cells, and the core-changing bijections.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition, StatParams};
use crate::walks::s_of;

/// A doubly infinite 0/1 sequence stored as a finite window. Bits before the
/// window are 0 (north steps) and bits after it are 1 (east steps).
///
/// The window always starts with 1 and ends with 0 (or is empty), and `anchor` is
/// the index of its first bit, chosen so that the number of 1s at negative indices
/// equals the number of 0s at nonnegative indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSequence {
    window: Vec<u8>,
    anchor: i64,
}

/// Strips a window placed at `start` and returns `(core window, index of canonical 0)`.
fn strip(window: &[u8], start: i64) -> (Vec<u8>, i64) {
    let Some(lead) = window.iter().position(|&b| b == 1) else {
        return (Vec::new(), start + window.len() as i64);
    };
    let Some(trail) = window.iter().rposition(|&b| b == 0).filter(|&t| t > lead) else {
        return (Vec::new(), start + lead as i64);
    };
    let core = window[lead..=trail].to_vec();
    let zeros = core.iter().filter(|&&b| b == 0).count() as i64;
    (core, start + lead as i64 + zeros)
}

impl EdgeSequence {
    /// Builds a sequence from any window placed at index `start`; the result is
    /// re-anchored to the canonical position.
    pub fn new(window: Vec<u8>, start: i64) -> Result<Self> {
        if let Some(&b) = window.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidSequence(format!("edge bit {b} is not 0 or 1")));
        }
        let (core, _) = strip(&window, start);
        let zeros = core.iter().filter(|&&b| b == 0).count() as i64;
        Ok(EdgeSequence { window: core, anchor: -zeros })
    }

    pub fn window(&self) -> &[u8] {
        &self.window
    }

    pub fn anchor(&self) -> i64 {
        self.anchor
    }

    /// The bit at index `i`.
    pub fn bit(&self, i: i64) -> u8 {
        if i < self.anchor {
            0
        } else if i >= self.anchor + self.window.len() as i64 {
            1
        } else {
            self.window[(i - self.anchor) as usize]
        }
    }
}

impl fmt::Display for EdgeSequence {
    /// Shows the window with two padding bits on each side, e.g. `...0,0,1,0,1,1,...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: Vec<String> = (self.anchor - 2..self.anchor + self.window.len() as i64 + 2)
            .map(|i| self.bit(i).to_string())
            .collect();
        write!(f, "...{},...", bits.join(","))
    }
}

/// Boundary steps of `lambda` from bottom-left to top-right: 0 north, 1 east.
pub fn edge_sequence(lambda: &Partition) -> EdgeSequence {
    let mut window = Vec::with_capacity(lambda.len() + lambda.largest());
    for r in (1..=lambda.len()).rev() {
        window.extend(std::iter::repeat_n(1, lambda.part(r) - lambda.part(r + 1)));
        window.push(0);
    }
    EdgeSequence {
        anchor: -(lambda.len() as i64),
        window,
    }
}

/// The partition traced by an edge sequence.
pub fn partition_from_edges(m: &EdgeSequence) -> Partition {
    partition_from_window(&m.window)
}

fn partition_from_window(window: &[u8]) -> Partition {
    let (core, _) = strip(window, 0);
    let mut ones = 0;
    let mut rows = Vec::new();
    for b in core {
        if b == 1 {
            ones += 1;
        } else {
            rows.push(ones);
        }
    }
    rows.reverse();
    Partition::new(rows).expect("boundary rows are weakly decreasing")
}

/// An m-quotient together with its m-shift.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuotientShift {
    pub quotient: Vec<Partition>,
    pub shift: Vec<i64>,
}

impl QuotientShift {
    /// Total size of the quotient components.
    pub fn quotient_size(&self) -> usize {
        self.quotient.iter().map(Partition::size).sum()
    }

    pub fn m(&self) -> usize {
        self.shift.len()
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidParams(format!("m must be at least 2, got {m}")));
    }
    Ok(())
}

/// The m-quotient and m-shift: component `i` is read from the bits at indices
/// `m*r + i`, and `shift[i]` is the `r` of that subsequence's canonical 0.
pub fn quotient_and_shift(lambda: &Partition, m: usize) -> Result<QuotientShift> {
    check_m(m)?;
    let edges = edge_sequence(lambda);
    let (lo, len) = (edges.anchor, edges.window.len() as i64);
    let mi = m as i64;
    let mut quotient = Vec::with_capacity(m);
    let mut shift = Vec::with_capacity(m);
    for i in 0..mi {
        let r_lo = (lo - i).div_euclid(mi) - 1;
        let r_hi = (lo + len - 1 - i).div_euclid(mi) + 1;
        let bits: Vec<u8> = (r_lo..=r_hi).map(|r| edges.bit(mi * r + i)).collect();
        let (core, zero) = strip(&bits, r_lo);
        quotient.push(partition_from_window(&core));
        shift.push(zero);
    }
    Ok(QuotientShift { quotient, shift })
}

/// Rebuilds a partition from its m-quotient and m-shift.
pub fn from_quotient_shift(qs: &QuotientShift) -> Result<Partition> {
    let m = qs.m();
    check_m(m)?;
    if qs.quotient.len() != m {
        return Err(Error::InvalidParams(format!(
            "{} quotient components for {m} shifts",
            qs.quotient.len()
        )));
    }
    if qs.shift.iter().sum::<i64>() != 0 {
        return Err(Error::InvalidParams("m-shift must sum to zero".into()));
    }
    let mi = m as i64;
    let comps: Vec<EdgeSequence> = qs.quotient.iter().map(edge_sequence).collect();
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for (i, (e, &k)) in comps.iter().zip(&qs.shift).enumerate() {
        let i = i as i64;
        lo = lo.min(mi * (e.anchor + k - 1) + i);
        hi = hi.max(mi * (e.anchor + e.window.len() as i64 + k + 1) + i);
    }
    let bits: Vec<u8> = (lo..=hi)
        .map(|x| {
            let (r, i) = (x.div_euclid(mi), x.rem_euclid(mi) as usize);
            comps[i].bit(r - qs.shift[i])
        })
        .collect();
    Ok(partition_from_window(&bits))
}

/// The m-core with the given m-shift.
pub fn core_from_shift(shift: &[i64]) -> Result<Partition> {
    from_quotient_shift(&QuotientShift {
        quotient: vec![Partition::empty(); shift.len()],
        shift: shift.to_vec(),
    })
}

/// What remains after removing m-rim-hooks until none is left.
pub fn m_core(lambda: &Partition, m: usize) -> Result<Partition> {
    core_from_shift(&quotient_and_shift(lambda, m)?.shift)
}

pub fn is_m_core(lambda: &Partition, m: usize) -> Result<bool> {
    Ok(quotient_and_shift(lambda, m)?.quotient.iter().all(Partition::is_empty))
}

/// The partition with m-core `core` and m-quotient `quotient`.
pub fn compose(core: &Partition, quotient: &[Partition], m: usize) -> Result<Partition> {
    let qs = quotient_and_shift(core, m)?;
    if qs.quotient.iter().any(|q| !q.is_empty()) {
        return Err(Error::NotACore {
            partition: core.to_string(),
            m,
        });
    }
    if quotient.len() != m {
        return Err(Error::InvalidParams(format!(
            "expected {m} quotient components, got {}",
            quotient.len()
        )));
    }
    from_quotient_shift(&QuotientShift {
        quotient: quotient.to_vec(),
        shift: qs.shift,
    })
}

/// Every partition obtained from `lambda` by removing one m-rim-hook.
pub fn rim_hook_removals(lambda: &Partition, m: usize) -> Vec<Partition> {
    let e = edge_sequence(lambda);
    let mi = m as i64;
    let lo = e.anchor - mi;
    let hi = e.anchor + e.window.len() as i64 + mi;
    let mut out = Vec::new();
    for p in lo..hi {
        if e.bit(p) == 1 && e.bit(p + mi) == 0 {
            let bits: Vec<u8> = (lo..=hi)
                .map(|i| if i == p { 0 } else if i == p + mi { 1 } else { e.bit(i) })
                .collect();
            out.push(partition_from_window(&bits));
        }
    }
    out
}

/// The m-shift computed from residues of `col - row` over the diagram.
pub fn shift_from_diagram(lambda: &Partition, m: usize) -> Result<Vec<i64>> {
    check_m(m)?;
    let mut n = vec![0i64; m];
    for c in lambda.cells() {
        let r = (c.col as i64 - c.row as i64).rem_euclid(m as i64) as usize;
        n[r] += 1;
    }
    Ok((0..m).map(|i| n[i] - n[(i + 1) % m]).collect())
}

/// The alternating sum of the 2-diagonal pattern `1, 2, ..., l_1, l_2, ..., l_k`
/// determined by `lambda`, computed three ways:
/// directly, as `(-1)^(l_1 - 1) (ceil(l_1/2) + sum_{i>=2} (-1)^(i-1) l_i)`, and as
/// `(-1)^(l_1) floor((e - o)/2)` with `e`, `o` the numbers of even and odd parts of
/// the conjugate.
pub fn alt_sum_forms(lambda: &Partition) -> [i64; 3] {
    let l1 = lambda.largest() as i64;
    let sign = |e: i64| if e.rem_euclid(2) == 0 { 1 } else { -1 };
    let mut direct = 0i64;
    let tail = lambda.parts().iter().skip(1).map(|&x| x as i64);
    for (idx, v) in (1..=l1).chain(tail).enumerate() {
        direct += sign(idx as i64) * v;
    }
    let rest: i64 = lambda
        .parts()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &x)| sign(i as i64) * x as i64)
        .sum();
    let closed = sign(l1 - 1) * ((l1 + 1) / 2 + rest);
    let conj = lambda.conjugate();
    let even = conj.parts().iter().filter(|&&x| x % 2 == 0).count() as i64;
    let odd = conj.len() as i64 - even;
    let parity = sign(l1) * (even - odd).div_euclid(2);
    [direct, closed, parity]
}

/// The alternating sum `|lambda|_a`.
pub fn alt_sum(lambda: &Partition) -> i64 {
    alt_sum_forms(lambda)[0]
}

/// The 2-core size of `mu`, `binom(2j, 2)` with `j` the alternating sum of its
/// diagonal-pattern tail.
pub fn two_core_size(mu: &Partition) -> usize {
    let j = alt_sum(&two_diagonal_tail(mu));
    (j * (2 * j - 1)) as usize
}

/// The partition `(l_1, l_2, ...)` for which the 2-diagonal pattern of `mu` reads
/// `1, 2, ..., l_1, l_2, ...`.
pub fn two_diagonal_tail(mu: &Partition) -> Partition {
    Partition::new(s_of(mu, 2).values().to_vec()).expect("S_2 sequences are partitions")
}

/// `w_k`: the number of cells with `row - col` congruent to `k` mod m.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueCounts {
    pub w: Vec<usize>,
}

impl ResidueCounts {
    pub fn total(&self) -> usize {
        self.w.iter().sum()
    }
}

/// `row - col` modulo `m`.
pub fn residue(cell: Cell, m: usize) -> usize {
    (cell.row as i64 - cell.col as i64).rem_euclid(m as i64) as usize
}

pub fn residue_counts(mu: &Partition, m: usize) -> Result<ResidueCounts> {
    check_m(m)?;
    let mut w = vec![0; m];
    for c in mu.cells() {
        w[residue(c, m)] += 1;
    }
    Ok(ResidueCounts { w })
}

/// `(m/2) sum_i (w_{i+1} - w_i)^2 + sum_{i>=1} w_i - (m-1) w_0`, indices mod m.
pub fn core_size_formula(w: &ResidueCounts, m: usize) -> i64 {
    let w: Vec<i64> = w.w.iter().map(|&x| x as i64).collect();
    let sq: i64 = (0..m).map(|i| (w[(i + 1) % m] - w[i]).pow(2)).sum();
    m as i64 * sq / 2 + w[1..].iter().sum::<i64>() - (m as i64 - 1) * w[0]
}

/// Cells that can be added to `mu`, top to bottom.
pub fn addable_cells(mu: &Partition) -> Vec<Cell> {
    (1..=mu.len() + 1)
        .filter(|&r| r == 1 || mu.part(r - 1) > mu.part(r))
        .map(|r| Cell::new(r, mu.part(r) + 1))
        .collect()
}

/// Corner cells that can be removed from `mu`, top to bottom.
pub fn removable_cells(mu: &Partition) -> Vec<Cell> {
    (1..=mu.len())
        .filter(|&r| mu.part(r) > mu.part(r + 1))
        .map(|r| Cell::new(r, mu.part(r)))
        .collect()
}

/// `(A_k, R_k)`: the numbers of addable and removable k-cells.
pub fn addable_removable(mu: &Partition, m: usize, k: usize) -> Result<(usize, usize)> {
    check_residue(m, k)?;
    let a = addable_cells(mu).into_iter().filter(|&c| residue(c, m) == k).count();
    let r = removable_cells(mu).into_iter().filter(|&c| residue(c, m) == k).count();
    Ok((a, r))
}

fn check_residue(m: usize, k: usize) -> Result<()> {
    check_m(m)?;
    if k >= m {
        return Err(Error::InvalidParams(format!("residue {k} is not below m = {m}")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CellKind {
    Addable,
    Removable,
}

/// Conormal k-cells, top to bottom.
///
/// An addable k-cell is conormal when (addable minus removable k-cells in the rows
/// above it) strictly exceeds the same count for every higher addable k-cell. A
/// removable k-cell is conormal when (removable minus addable k-cells in the rows
/// below it) strictly exceeds the same count for every lower removable k-cell.
pub fn conormal_cells(mu: &Partition, m: usize, k: usize, kind: CellKind) -> Result<Vec<Cell>> {
    check_residue(m, k)?;
    let add: Vec<Cell> = addable_cells(mu).into_iter().filter(|&c| residue(c, m) == k).collect();
    let rem: Vec<Cell> = removable_cells(mu).into_iter().filter(|&c| residue(c, m) == k).collect();
    let rows = |cells: &[Cell], pred: &dyn Fn(usize) -> bool| -> i64 {
        cells.iter().filter(|c| pred(c.row)).count() as i64
    };
    let out = match kind {
        CellKind::Addable => {
            let score = |c: &Cell| rows(&add, &|r| r < c.row) - rows(&rem, &|r| r < c.row);
            let mut best = i64::MIN;
            let mut out = Vec::new();
            for c in &add {
                let s = score(c);
                if s > best {
                    out.push(*c);
                }
                best = best.max(s);
            }
            out
        }
        CellKind::Removable => {
            let score = |c: &Cell| rows(&rem, &|r| r > c.row) - rows(&add, &|r| r > c.row);
            let mut best = i64::MIN;
            let mut out = Vec::new();
            for c in rem.iter().rev() {
                let s = score(c);
                if s > best {
                    out.push(*c);
                }
                best = best.max(s);
            }
            out.reverse();
            out
        }
    };
    Ok(out)
}

fn with_cells_added(mu: &Partition, cells: &[Cell]) -> Partition {
    let mut parts = mu.parts().to_vec();
    for c in cells {
        if c.row > parts.len() {
            parts.resize(c.row, 0);
        }
        parts[c.row - 1] += 1;
    }
    Partition::new(parts).expect("addable cells keep the shape a partition")
}

fn with_cells_removed(mu: &Partition, cells: &[Cell]) -> Partition {
    let mut parts = mu.parts().to_vec();
    for c in cells {
        parts[c.row - 1] -= 1;
    }
    Partition::new(parts).expect("removable cells keep the shape a partition")
}

/// Adds (or removes) `|A_l - R_l|` of the lowest addable (removable) l-cells.
pub fn residue_shift(mu: &Partition, m: usize, l: usize) -> Result<Partition> {
    let (a, r) = addable_removable(mu, m, l)?;
    if a >= r {
        let cells: Vec<Cell> = addable_cells(mu).into_iter().filter(|&c| residue(c, m) == l).collect();
        Ok(with_cells_added(mu, &cells[cells.len() - (a - r)..]))
    } else {
        let cells: Vec<Cell> = removable_cells(mu).into_iter().filter(|&c| residue(c, m) == l).collect();
        Ok(with_cells_removed(mu, &cells[cells.len() - (r - a)..]))
    }
}

/// Maps an m-restricted partition with core `kappa` to one whose core is `kappa`
/// with all its addable k-cells added, by adding the `A_k - R_k` lowest conormal
/// addable k-cells.
pub fn core_ladder_step(lambda: &Partition, m: usize, k: usize) -> Result<Partition> {
    check_residue(m, k)?;
    if !lambda.is_m_restricted(m) {
        return Err(Error::Precondition(format!("{lambda} is not {m}-restricted")));
    }
    let kappa = m_core(lambda, m)?;
    let (ak, _) = addable_removable(&kappa, m, k)?;
    if ak == 0 {
        return Err(Error::Precondition(format!(
            "the {m}-core {kappa} has no addable {k}-cells"
        )));
    }
    let (a, r) = addable_removable(lambda, m, k)?;
    let need = a.checked_sub(r).filter(|&d| d > 0).ok_or_else(|| {
        Error::Precondition(format!("{lambda} has A_{k} - R_{k} = {a} - {r}"))
    })?;
    let con = conormal_cells(lambda, m, k, CellKind::Addable)?;
    if con.len() < need {
        return Err(Error::Precondition(format!(
            "{lambda} has {} conormal {k}-cells, {need} needed",
            con.len()
        )));
    }
    Ok(with_cells_added(lambda, &con[con.len() - need..]))
}

/// Inverse of [`core_ladder_step`]: removes the `R_k - A_k` highest conormal
/// removable k-cells.
pub fn core_ladder_inverse(mu: &Partition, m: usize, k: usize) -> Result<Partition> {
    check_residue(m, k)?;
    if !mu.is_m_restricted(m) {
        return Err(Error::Precondition(format!("{mu} is not {m}-restricted")));
    }
    let (a, r) = addable_removable(mu, m, k)?;
    let need = r.checked_sub(a).filter(|&d| d > 0).ok_or_else(|| {
        Error::Precondition(format!("{mu} has R_{k} - A_{k} = {r} - {a}"))
    })?;
    let con = conormal_cells(mu, m, k, CellKind::Removable)?;
    if con.len() < need {
        return Err(Error::Precondition(format!(
            "{mu} has {} conormal removable {k}-cells, {need} needed",
            con.len()
        )));
    }
    Ok(with_cells_removed(mu, &con[..need]))
}

/// One copy of every part with odd multiplicity, and the rest.
fn split_odd(parts: &Partition) -> (Vec<usize>, Vec<usize>) {
    let mut singles = Vec::new();
    let mut rest = Vec::new();
    for (v, c) in parts.multiplicities() {
        if c % 2 == 1 {
            singles.push(v);
        }
        rest.extend(std::iter::repeat_n(v, c - c % 2));
    }
    (singles, rest)
}

/// A size- and 2-core-preserving bijection with `a_2(image) = h_{2,0}(lambda)`.
///
/// Works on the conjugate: keeps one copy of each part of odd multiplicity, merges
/// the remaining pairs `j, j` into parts `2j`, transposes those, and takes the
/// multiset union.
pub fn h20_a2_map(lambda: &Partition) -> Partition {
    let mu = lambda.conjugate();
    let (singles, rest) = split_odd(&mu);
    let merged: Vec<usize> = rest.chunks(2).map(|pair| pair[0] * 2).collect();
    let nu = Partition::new(merged).expect("sorted").conjugate();
    Partition::from_unsorted(singles).union(&nu)
}

/// Inverse of [`h20_a2_map`].
pub fn h20_a2_inverse(rho: &Partition) -> Partition {
    let (singles, rest) = split_odd(rho);
    let nu = Partition::new(rest).expect("sorted").conjugate();
    let halves: Vec<usize> = nu.parts().iter().flat_map(|&x| [x / 2, x / 2]).collect();
    Partition::from_unsorted(singles)
        .union(&Partition::from_unsorted(halves))
        .conjugate()
}

/// Result of checking `h_{l,m-l}(lambda) = a(lambda_{i_l})` for a composed partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BigCoreOutcome {
    Checked {
        lambda: Partition,
        component: usize,
        statistic: usize,
        predicted: usize,
    },
    HypothesisUnmet {
        lambda: Partition,
    },
}

impl BigCoreOutcome {
    /// True when the separation hypothesis held and the statistic matched.
    pub fn holds(&self) -> bool {
        matches!(self, BigCoreOutcome::Checked { statistic, predicted, .. } if statistic == predicted)
    }
}

/// Composes `core` and `quotient`, then, if the `l`-th smallest component offset
/// `m*k_j + j` is at least `m*n` away from all the others (`n` the largest size of
/// two quotient components), compares `h_{l,m-l}` with the largest part of that
/// component. `l` runs from 1 to m.
pub fn big_core_stat(core: &Partition, quotient: &[Partition], m: usize, l: usize) -> Result<BigCoreOutcome> {
    if l == 0 || l > m {
        return Err(Error::InvalidParams(format!("index l = {l} is not in 1..={m}")));
    }
    let lambda = compose(core, quotient, m)?;
    let shift = quotient_and_shift(core, m)?.shift;
    let mut offsets: Vec<(i64, usize)> = shift
        .iter()
        .enumerate()
        .map(|(j, &k)| (m as i64 * k + j as i64, j))
        .collect();
    offsets.sort_unstable();
    let sizes: Vec<usize> = quotient.iter().map(Partition::size).collect();
    let mut n = 0;
    for i in 0..m {
        for j in i + 1..m {
            n = n.max(sizes[i] + sizes[j]);
        }
    }
    let (s_l, comp) = offsets[l - 1];
    let separated = offsets
        .iter()
        .enumerate()
        .all(|(r, &(s, _))| r == l - 1 || s.abs_diff(s_l) >= (m * n) as u64);
    if !separated {
        return Ok(BigCoreOutcome::HypothesisUnmet { lambda });
    }
    let p = StatParams::new(l as u32, (m - l) as u32)?;
    Ok(BigCoreOutcome::Checked {
        statistic: lambda.h_stat(p),
        predicted: quotient[comp].largest(),
        component: comp,
        lambda,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn edge_example() {
        let e = edge_sequence(&p(&[5, 4, 1]));
        assert_eq!(e.window(), [1, 0, 1, 1, 1, 0, 1, 0]);
        assert_eq!(e.anchor(), -3);
        assert_eq!(partition_from_edges(&e), p(&[5, 4, 1]));
        assert!(edge_sequence(&Partition::empty()).window().is_empty());
        let shifted = EdgeSequence::new(vec![0, 0, 1, 0, 1, 1], 7).unwrap();
        assert_eq!(shifted.anchor(), -1);
        assert_eq!(partition_from_edges(&shifted), p(&[1]));
    }

    #[test]
    fn quotient_example() {
        let qs = quotient_and_shift(&p(&[5, 4, 1]), 2).unwrap();
        assert_eq!(qs.shift, [2, -2]);
        assert_eq!(qs.quotient, [p(&[1, 1]), Partition::empty()]);
        assert_eq!(m_core(&p(&[5, 4, 1]), 2).unwrap(), p(&[3, 2, 1]));
        assert_eq!(compose(&p(&[3, 2, 1]), &[p(&[1, 1]), Partition::empty()], 2).unwrap(), p(&[5, 4, 1]));
        assert_eq!(shift_from_diagram(&p(&[5, 4, 1]), 2).unwrap(), [2, -2]);
    }

    #[test]
    fn core_examples() {
        assert_eq!(m_core(&p(&[8, 7, 5, 3, 2, 1]), 2).unwrap(), p(&[4, 3, 2, 1]));
        assert_eq!(m_core(&Partition::empty(), 3).unwrap(), Partition::empty());
        assert!(matches!(
            compose(&p(&[2]), &[Partition::empty(), Partition::empty()], 2),
            Err(Error::NotACore { .. })
        ));
    }

    #[test]
    fn alt_sums() {
        assert_eq!(alt_sum_forms(&Partition::empty()), [0, 0, 0]);
        assert_eq!(two_diagonal_tail(&p(&[2, 2])), p(&[2, 1]));
        assert_eq!(two_core_size(&p(&[2, 2])), 0);
        assert_eq!(two_core_size(&p(&[2, 1])), 3);
    }

    #[test]
    fn residues() {
        assert_eq!(residue_counts(&p(&[2, 2]), 2).unwrap().w, [2, 2]);
        assert_eq!(core_size_formula(&ResidueCounts { w: vec![2, 2] }, 2), 0);
        assert_eq!(addable_removable(&Partition::empty(), 2, 0).unwrap(), (1, 0));
    }

    #[test]
    fn conormal_example() {
        let lam = p(&[3, 2, 2]);
        let c = conormal_cells(&lam, 2, 1, CellKind::Addable).unwrap();
        assert_eq!(c, [Cell::new(1, 4), Cell::new(2, 3)]);
        let e = conormal_cells(&Partition::empty(), 2, 0, CellKind::Addable).unwrap();
        assert_eq!(e, [Cell::new(1, 1)]);
    }

    #[test]
    fn ladder_examples() {
        assert_eq!(core_ladder_step(&Partition::empty(), 2, 0).unwrap(), p(&[1]));
        let table: [(&[usize], &[usize]); 5] = [
            (&[1; 9], &[2, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
            (&[2, 2, 1, 1, 1, 1, 1], &[2, 2, 2, 1, 1, 1, 1, 1]),
            (&[3, 2, 1, 1, 1, 1], &[3, 3, 2, 1, 1, 1]),
            (&[2, 2, 2, 2, 1], &[2, 2, 2, 2, 2, 1]),
            (&[3, 2, 2, 1, 1], &[4, 3, 2, 1, 1]),
        ];
        for (from, to) in table {
            let img = core_ladder_step(&p(from), 2, 1).unwrap();
            assert_eq!(img, p(to), "image of {from:?}");
            assert_eq!(core_ladder_inverse(&img, 2, 1).unwrap(), p(from));
        }
        assert!(matches!(core_ladder_step(&p(&[2]), 2, 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn h20_map_small() {
        let lam = p(&[3, 2, 1]);
        let img = h20_a2_map(&lam);
        assert_eq!(img.size(), 6);
        assert_eq!(img.largest_repeated(2), 0);
        assert_eq!(h20_a2_inverse(&img), lam);
        assert_eq!(h20_a2_map(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn big_core_example() {
        let out = big_core_stat(&p(&[3, 2, 1]), &[p(&[1]), Partition::empty()], 2, 1).unwrap();
        assert!(out.holds());
        if let BigCoreOutcome::Checked { lambda, statistic, .. } = &out {
            assert_eq!(*lambda, p(&[5, 2, 1]));
            assert_eq!(*statistic, 0);
        }
        let h20 = big_core_stat(&p(&[3, 2, 1]), &[p(&[1]), Partition::empty()], 2, 2).unwrap();
        assert!(h20.holds());
    }

    #[test]
    fn rim_hooks_of_domino() {
        assert_eq!(rim_hook_removals(&p(&[2]), 2), vec![Partition::empty()]);
        assert!(rim_hook_removals(&p(&[2, 1]), 2).is_empty());
    }
}
