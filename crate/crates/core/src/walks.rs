//! Border paths, departure words and diagonal classes.
//!
//! A partition of order `n` is drawn inside the `alpha*n` by `beta*n` rectangle
//! with its top-left corner at the origin. Its border path runs from
//! `(0, -beta*n)` to `(alpha*n, 0)`; a vertex `(x, y)` gets the label
//! `alpha*beta*n - (beta*x - alpha*y)`, so north steps raise the label by `alpha`
//! and east steps lower it by `beta`. Departure word `i` records, in order, the
//! direction of every step leaving a vertex labelled `i`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Partition, StatParams};
use crate::qseries::{gauss_binomial, Poly, QTSeries};

/// Coprime positive step weights `(alpha, beta)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WalkParams {
    alpha: u32,
    beta: u32,
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl WalkParams {
    pub fn new(alpha: u32, beta: u32) -> Result<Self> {
        if alpha == 0 || beta == 0 {
            return Err(Error::InvalidParams(format!(
                "walk weights must be positive, got ({alpha},{beta})"
            )));
        }
        if gcd(alpha, beta) != 1 {
            return Err(Error::InvalidParams(format!(
                "walk weights must be coprime, got ({alpha},{beta})"
            )));
        }
        Ok(WalkParams { alpha, beta })
    }

    /// The weights `(m-1, 1)`.
    pub fn for_m(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParams(format!("m must be at least 2, got {m}")));
        }
        WalkParams::new((m - 1) as u32, 1)
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    pub fn stat(&self) -> StatParams {
        StatParams::new(self.alpha, self.beta).expect("positive weights")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    North,
    East,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::North => 'N',
            Step::East => 'E',
        }
    }
}

/// `(n_lambda, k_lambda)`: the order and the largest cell label. Both are 0 for the
/// empty partition.
pub fn order_and_maxlabel(lambda: &Partition, p: WalkParams) -> (usize, usize) {
    let (a, b) = (p.alpha as usize, p.beta as usize);
    let k = (1..=lambda.len())
        .map(|i| a * i + b * lambda.part(i))
        .max()
        .unwrap_or(0);
    (k.div_ceil(a * b), k)
}

/// The border path as a list of steps, starting at `(0, -beta*n)`.
pub fn border_path(lambda: &Partition, p: WalkParams) -> Vec<Step> {
    let (n, _) = order_and_maxlabel(lambda, p);
    let (a, b) = (p.alpha as usize, p.beta as usize);
    let rows = lambda.len();
    let mut steps = vec![Step::North; b * n - rows];
    for r in (1..=rows).rev() {
        let run = lambda.part(r) - lambda.part(r + 1);
        steps.extend(std::iter::repeat_n(Step::East, run));
        steps.push(Step::North);
    }
    steps.extend(std::iter::repeat_n(Step::East, a * n - lambda.largest()));
    steps
}

/// Departure words indexed by vertex label. Trailing empty words are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DepartureWords {
    words: Vec<Vec<Step>>,
}

impl DepartureWords {
    pub fn new(mut words: Vec<Vec<Step>>) -> Self {
        while words.last().is_some_and(Vec::is_empty) {
            words.pop();
        }
        DepartureWords { words }
    }

    /// Parses words written over the letters `N` and `E`.
    pub fn from_strings<S: AsRef<str>>(words: &[S]) -> Result<Self> {
        let parsed = words
            .iter()
            .map(|w| {
                w.as_ref()
                    .chars()
                    .map(|c| match c {
                        'N' => Ok(Step::North),
                        'E' => Ok(Step::East),
                        other => Err(Error::InvalidWords(format!("unexpected letter `{other}`"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DepartureWords::new(parsed))
    }

    pub fn words(&self) -> &[Vec<Step>] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &[Step] {
        self.words.get(i).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.words
            .iter()
            .map(|w| w.iter().map(|s| s.letter()).collect())
            .collect()
    }

    fn count(&self, step: Step) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .words
            .iter()
            .map(|w| w.iter().filter(|&&s| s == step).count())
            .collect();
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Number of north letters in each word.
    pub fn north_counts(&self) -> Vec<usize> {
        self.count(Step::North)
    }

    /// Number of east letters in each word.
    pub fn east_counts(&self) -> Vec<usize> {
        self.count(Step::East)
    }

    /// Total number of pairs `E ... N` inside single words.
    pub fn inversion_total(&self) -> usize {
        self.words.iter().map(|w| word_inversions(w)).sum()
    }
}

impl fmt::Display for DepartureWords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, w) in self.to_strings().into_iter().enumerate() {
            if w.is_empty() {
                continue;
            }
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "w^{i}={w}")?;
        }
        Ok(())
    }
}

fn word_inversions(w: &[Step]) -> usize {
    let mut easts = 0;
    let mut inv = 0;
    for &s in w {
        match s {
            Step::East => easts += 1,
            Step::North => inv += easts,
        }
    }
    inv
}

/// Free-function form of [`DepartureWords::inversion_total`].
pub fn inversion_total(words: &DepartureWords) -> usize {
    words.inversion_total()
}

/// Departure words for general coprime weights.
pub fn departure_words_with(lambda: &Partition, p: WalkParams) -> DepartureWords {
    let (a, b) = (p.alpha as usize, p.beta as usize);
    let mut words: Vec<Vec<Step>> = Vec::new();
    let mut at = 0usize;
    for step in border_path(lambda, p) {
        if at >= words.len() {
            words.resize(at + 1, Vec::new());
        }
        words[at].push(step);
        at = match step {
            Step::North => at + a,
            Step::East => at - b,
        };
    }
    DepartureWords::new(words)
}

/// Departure words for the weights `(m-1, 1)`.
pub fn departure_words(lambda: &Partition, m: usize) -> Result<DepartureWords> {
    Ok(departure_words_with(lambda, WalkParams::for_m(m)?))
}

/// Recovers the partition whose departure words (for general weights) are `words`.
pub fn rebuild_with(words: &DepartureWords, p: WalkParams) -> Result<Partition> {
    let (a, b) = (p.alpha as usize, p.beta as usize);
    let mut cursor = vec![0usize; words.len()];
    let mut at = 0usize;
    let mut steps = Vec::new();
    while at < words.len() && cursor[at] < words.words[at].len() {
        let step = words.words[at][cursor[at]];
        cursor[at] += 1;
        steps.push(step);
        at = match step {
            Step::North => at + a,
            Step::East => at.checked_sub(b).ok_or_else(|| {
                Error::InvalidWords(format!("east step from vertex {at} leaves the triangle"))
            })?,
        };
    }
    if at != 0 {
        return Err(Error::InvalidWords(format!("tour stops at vertex {at}, not 0")));
    }
    if let Some(i) = (0..words.len()).find(|&i| cursor[i] < words.words[i].len()) {
        return Err(Error::InvalidWords(format!(
            "tour returns to 0 before using all of w^{i}"
        )));
    }
    let norths = steps.iter().filter(|&&s| s == Step::North).count();
    let easts = steps.len() - norths;
    if norths % b != 0 || easts != a * (norths / b) {
        return Err(Error::InvalidWords(format!(
            "{norths} north and {easts} east letters do not fill a triangle"
        )));
    }
    let mut x = 0usize;
    let mut rows = Vec::with_capacity(norths);
    for s in &steps {
        match s {
            Step::East => x += 1,
            Step::North => rows.push(x),
        }
    }
    rows.reverse();
    let lambda = Partition::new(rows)
        .map_err(|_| Error::InvalidWords("tour is not a staircase walk".into()))?;
    if departure_words_with(&lambda, p) != *words {
        return Err(Error::InvalidWords(format!(
            "words do not come from a border path of minimal order (nearest partition {lambda})"
        )));
    }
    Ok(lambda)
}

/// Recovers the partition whose `(m-1, 1)` departure words are `words`.
pub fn rebuild(words: &DepartureWords, m: usize) -> Result<Partition> {
    let p = WalkParams::for_m(m)?;
    if let Some(i) = (1..words.len()).find(|&i| words.words[i].last() == Some(&Step::North)) {
        return Err(Error::InvalidWords(format!("w^{i} ends with N")));
    }
    let (north, east) = (words.north_counts(), words.east_counts());
    let np = NorthEastPatterns::from_north(north, m)?;
    if np.east != east {
        return Err(Error::InvalidWords(
            "east letter counts do not match the north pattern".into(),
        ));
    }
    rebuild_with(words, p)
}

/// North and east patterns: `north[i]` and `east[i]` count the north and east
/// steps leaving vertex `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NorthEastPatterns {
    pub north: Vec<usize>,
    pub east: Vec<usize>,
}

fn trim(mut v: Vec<usize>) -> Vec<usize> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl NorthEastPatterns {
    /// Validates a north pattern for the weights `(m-1, 1)` and attaches its east
    /// pattern `E_i = N_{i-1} + ... + N_{i-m+1}`.
    pub fn from_north(north: Vec<usize>, m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParams(format!("m must be at least 2, got {m}")));
        }
        let north = trim(north);
        if north.is_empty() {
            return Ok(NorthEastPatterns::default());
        }
        let l = north.len() - 1;
        let n_at = |i: isize| -> usize {
            if i < 0 {
                0
            } else {
                north.get(i as usize).copied().unwrap_or(0)
            }
        };
        let east_at = |i: usize| -> usize { (1..m).map(|j| n_at(i as isize - j as isize)).sum() };
        if let Some(i) = (1..=l).find(|&i| east_at(i) == 0) {
            return Err(Error::InvalidPattern(format!("vertex {i} is unreachable")));
        }
        let lead = (0..m - 1)
            .map(|i| if i == 0 { n_at(0) as isize - 1 } else { n_at(i as isize) as isize })
            .max()
            .unwrap_or(0);
        if lead < 1 {
            return Err(Error::InvalidPattern(
                "pattern has an order smaller than its north count".into(),
            ));
        }
        let east = trim((0..=l + m - 1).map(east_at).collect());
        Ok(NorthEastPatterns { north, east })
    }

    /// Order of the partition: the total number of north steps divided by `beta`.
    pub fn order(&self) -> usize {
        self.north.iter().sum()
    }
}

/// North and east patterns of `lambda` for the weights `(m-1, 1)`.
pub fn patterns(lambda: &Partition, m: usize) -> Result<NorthEastPatterns> {
    let w = departure_words(lambda, m)?;
    Ok(NorthEastPatterns {
        north: w.north_counts(),
        east: w.east_counts(),
    })
}

/// The size of the partition with north pattern `np`, from the pattern alone.
pub fn size_from_pattern(np: &NorthEastPatterns, p: WalkParams) -> Result<usize> {
    let (a, b) = (p.alpha as i64, p.beta as i64);
    let total: i64 = np.north.iter().map(|&x| x as i64).sum();
    if total % b != 0 {
        return Err(Error::InvalidPattern(format!(
            "{total} north steps is not a multiple of beta = {b}"
        )));
    }
    let n = total / b;
    let full = a * b * n * (n - 1) / 2 + n * (0..b).map(|j| a * j / b).sum::<i64>();
    let missing: i64 = np
        .north
        .iter()
        .enumerate()
        .map(|(i, &c)| (i as i64 / b) * c as i64)
        .sum();
    usize::try_from(full - missing)
        .map_err(|_| Error::InvalidPattern("pattern encloses negative area".into()))
}

/// A sequence in `S_m`, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SSequence {
    s: Vec<usize>,
}

impl SSequence {
    pub fn new(s: Vec<usize>) -> Self {
        SSequence { s: trim(s) }
    }

    pub fn values(&self) -> &[usize] {
        &self.s
    }

    /// `s_i`, 1-based, zero beyond the stored entries.
    pub fn get(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.s.get(i - 1).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_empty()
    }

    /// Checks `s_i >= s_{i+1} - [m-1 divides i]` and `s_i >= s_{i+m-1}`.
    pub fn is_valid(&self, m: usize) -> bool {
        let len = self.s.len();
        (1..=len).all(|i| {
            let chi = usize::from(i.is_multiple_of(m - 1));
            self.get(i) + chi >= self.get(i + 1) && self.get(i) >= self.get(i + m - 1)
        })
    }

    /// `(m-1) * binom(s_1, 2) + sum s_i`, the size of every partition in the class.
    pub fn weight(&self, m: usize) -> usize {
        let s1 = self.get(1);
        (m - 1) * s1 * s1.saturating_sub(1) / 2 + self.s.iter().sum::<usize>()
    }

    /// The full diagonal pattern, entry 0 being label 1: the forced staircase prefix
    /// followed by the sequence itself.
    pub fn raw_diagonal(&self, m: usize) -> Vec<usize> {
        let mut d = Vec::new();
        for c in 0..self.get(1) {
            d.extend(std::iter::repeat_n(c, m - 1));
        }
        d.extend_from_slice(&self.s);
        d
    }
}

impl fmt::Display for SSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.s.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Splits a diagonal pattern (entry 0 = label 1) into its staircase prefix and the
/// `S_m` tail.
pub fn diagonal_to_s(raw: &[usize], m: usize) -> Result<SSequence> {
    let raw = trim(raw.to_vec());
    if raw.is_empty() {
        return Ok(SSequence::default());
    }
    let w = m - 1;
    let mut c = 0;
    while raw.len() > w * (c + 1)
        && raw[w * c..w * (c + 1)].iter().all(|&x| x == c)
        && raw[w * (c + 1)] == c + 1
    {
        c += 1;
    }
    let s = SSequence::new(raw[w * c..].to_vec());
    if s.get(1) != c || s.raw_diagonal(m) != raw || !s.is_valid(m) {
        return Err(Error::InvalidSequence(format!(
            "{raw:?} is not the {m}-diagonal pattern of a partition"
        )));
    }
    Ok(s)
}

/// The `S_m` sequence of a partition, read off its `(m-1, 1)` diagonal pattern.
pub fn s_of(lambda: &Partition, m: usize) -> SSequence {
    let p = StatParams::new((m - 1) as u32, 1).expect("m >= 2");
    let mut raw = vec![0; m - 1];
    raw.extend(lambda.diagonal_pattern(p));
    diagonal_to_s(&raw, m).expect("partitions have valid diagonal patterns")
}

/// Diagonal pattern, then its `S_m` tail, from a north pattern.
pub fn pattern_to_s(np: &NorthEastPatterns, m: usize) -> Result<SSequence> {
    let np = NorthEastPatterns::from_north(np.north.clone(), m)?;
    let w = m - 1;
    let n = np.order();
    let top = w * n;
    let n_at = |i: usize| np.north.get(i).copied().unwrap_or(0);
    let mut raw = Vec::with_capacity(top);
    let mut cum = 0usize;
    for k in 1..=top {
        cum += n_at(top - (k - 1));
        let d = ((k - 1) / w)
            .checked_sub(cum)
            .ok_or_else(|| Error::InvalidPattern("negative diagonal length".into()))?;
        raw.push(d);
    }
    diagonal_to_s(&raw, m)
}

/// The north pattern of the class represented by `s`.
pub fn s_to_pattern(s: &SSequence, m: usize) -> Result<NorthEastPatterns> {
    if m < 2 {
        return Err(Error::InvalidParams(format!("m must be at least 2, got {m}")));
    }
    if !s.is_valid(m) {
        return Err(Error::InvalidSequence(format!("{s} is not in S_{m}")));
    }
    let raw = s.raw_diagonal(m);
    let w = m - 1;
    let n = raw.len().div_ceil(w);
    let top = w * n;
    let d = |label: usize| -> isize {
        if label == 0 {
            0
        } else {
            raw.get(label - 1).copied().unwrap_or(0) as isize
        }
    };
    let mut north = Vec::with_capacity(top);
    for v in 0..top {
        let val = d(top - v) - d(top - v + 1) + isize::from(v % w == 0);
        let val = usize::try_from(val)
            .map_err(|_| Error::InvalidSequence(format!("{s} gives a negative north count")))?;
        north.push(val);
    }
    NorthEastPatterns::from_north(north, m)
}

/// Every sequence in `S_m` of weight at most `max_weight`, in lexicographic order.
pub fn enumerate_s(m: usize, max_weight: usize) -> Vec<SSequence> {
    assert!(m >= 2, "m must be at least 2");
    fn go(m: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<SSequence>) {
        let i = cur.len();
        if cur.len() >= m - 1 && cur[i + 1 - m..].iter().all(|&x| x == 0) {
            out.push(SSequence::new(cur.clone()));
            return;
        }
        // bound for s_{i+1}
        let mut hi = cur[i - 1] + usize::from(i.is_multiple_of(m - 1));
        if i + 2 > m {
            hi = hi.min(cur[i + 1 - m]);
        }
        for v in 0..=hi.min(budget) {
            cur.push(v);
            go(m, budget - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for s1 in 0.. {
        let base = (m - 1) * s1 * s1.saturating_sub(1) / 2 + s1;
        if base > max_weight {
            break;
        }
        let mut cur = vec![s1];
        go(m, max_weight - base, &mut cur, &mut out);
    }
    out
}

/// `sum t^{h_{m-1,1}}` over the class of `s`, as a product of `t`-binomials.
pub fn class_gen_poly(s: &SSequence, m: usize) -> Poly {
    let mut out = Poly::one();
    for j in 1..=s.values().len() {
        let chi = i64::from(j.is_multiple_of(m - 1));
        let (sj, sj1, sjm) = (s.get(j) as i64, s.get(j + 1) as i64, s.get(j + m) as i64);
        out = &out * &gauss_binomial(sj - sjm + chi, sj1 - sjm);
    }
    out
}

/// Number of partitions in the class of `s`: `prod_j binom(E_j + N_j - 1, N_j)`.
pub fn class_size(s: &SSequence, m: usize) -> Result<BigInt> {
    let np = s_to_pattern(s, m)?;
    let mut out = BigInt::from(1);
    for j in 1..np.north.len().max(np.east.len()) {
        let nj = np.north.get(j).copied().unwrap_or(0);
        let ej = np.east.get(j).copied().unwrap_or(0);
        if nj == 0 {
            continue;
        }
        if ej == 0 {
            return Ok(BigInt::from(0));
        }
        out *= binomial(ej + nj - 1, nj);
    }
    Ok(out)
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Words with `n` letters N and `e` letters E that end in E (or are empty), in
/// lexicographic order with N before E.
fn words_ending_in_e(n: usize, e: usize) -> Vec<Vec<Step>> {
    fn go(n: usize, e: usize, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if n == 0 && e == 0 {
            out.push(cur.clone());
            return;
        }
        if n > 0 {
            cur.push(Step::North);
            go(n - 1, e, cur, out);
            cur.pop();
        }
        if e > 0 {
            cur.push(Step::East);
            go(n, e - 1, cur, out);
            cur.pop();
        }
    }
    if n + e == 0 {
        return vec![Vec::new()];
    }
    if e == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    go(n, e - 1, &mut cur, &mut out);
    for w in &mut out {
        w.push(Step::East);
    }
    out
}

/// Every partition in the `m`-diagonal class of `s`, by enumerating valid
/// departure-word families in lexicographic order.
pub fn enumerate_class(s: &SSequence, m: usize) -> Result<Vec<Partition>> {
    let np = s_to_pattern(s, m)?;
    let len = np.north.len().max(np.east.len());
    if len == 0 {
        return Ok(vec![Partition::empty()]);
    }
    let n_at = |i: usize| np.north.get(i).copied().unwrap_or(0);
    let e_at = |i: usize| np.east.get(i).copied().unwrap_or(0);
    let first = vec![Step::North; n_at(0)];
    let choices: Vec<Vec<Vec<Step>>> = (1..len).map(|i| words_ending_in_e(n_at(i), e_at(i))).collect();
    if choices.iter().any(Vec::is_empty) {
        return Ok(Vec::new());
    }
    let p = WalkParams::for_m(m)?;
    let mut idx = vec![0usize; choices.len()];
    let mut out = Vec::new();
    loop {
        let mut words = Vec::with_capacity(len);
        words.push(first.clone());
        for (c, &k) in choices.iter().zip(&idx) {
            words.push(c[k].clone());
        }
        out.push(rebuild_with(&DepartureWords::new(words), p)?);
        // advance the last position fastest
        let mut pos = choices.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// `sum_{s in S_m} q^{weight(s)} * class_gen_poly(s, m)` up to `q^qmax`.
pub fn multisum(m: usize, qmax: usize) -> QTSeries {
    multisum_filtered(m, qmax, |_| true)
}

/// The multisum restricted to sequences accepted by `keep`.
pub fn multisum_filtered(m: usize, qmax: usize, keep: impl Fn(&SSequence) -> bool) -> QTSeries {
    let mut out = QTSeries::zero(qmax);
    for s in enumerate_s(m, qmax) {
        if keep(&s) {
            out.add_at(s.weight(m), &class_gen_poly(&s, m));
        }
    }
    out
}

/// The `m = 2` multisum over sequences with `s_1 + len(s) <= n`, i.e. over classes of
/// partitions of order at most `n`. Returned up to `q^binom(n,2)`.
pub fn restricted_multisum(n: usize) -> QTSeries {
    let top = n * n.saturating_sub(1) / 2;
    multisum_filtered(2, top, |s| s.get(1) + s.values().len() <= n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn order_examples() {
        let wp = WalkParams::new(3, 1).unwrap();
        let (n, k) = order_and_maxlabel(&p(&[16, 6, 6, 6, 5]), wp);
        assert_eq!(n, 7);
        assert_eq!(k, 20);
        assert_eq!(order_and_maxlabel(&Partition::empty(), wp), (0, 0));
        assert_eq!(order_and_maxlabel(&p(&[1]), WalkParams::new(1, 1).unwrap()), (2, 2));
    }

    #[test]
    fn walk_params_reject() {
        assert!(WalkParams::new(2, 4).is_err());
        assert!(WalkParams::new(0, 1).is_err());
        assert!(WalkParams::for_m(1).is_err());
    }

    #[test]
    fn example_words() {
        let w = departure_words(&p(&[16, 6, 6, 6, 5]), 4).unwrap();
        let expect = [
            "N", "NE", "ENE", "NENEE", "EEEE", "EEE", "ENE", "E", "E", "NE", "E", "E", "E",
        ];
        assert_eq!(w.to_strings(), expect);
        assert_eq!(w.inversion_total(), 3);
        assert_eq!(rebuild(&w, 4).unwrap(), p(&[16, 6, 6, 6, 5]));
        assert_eq!(
            w.to_string(),
            "w^0=N, w^1=NE, w^2=ENE, w^3=NENEE, w^4=EEEE, w^5=EEE, w^6=ENE, w^7=E, w^8=E, w^9=NE, w^10=E, w^11=E, w^12=E"
        );
    }

    #[test]
    fn empty_family() {
        let w = departure_words(&Partition::empty(), 3).unwrap();
        assert!(w.is_empty());
        assert_eq!(rebuild(&w, 3).unwrap(), Partition::empty());
    }

    #[test]
    fn rebuild_rejects() {
        let bad = DepartureWords::from_strings(&["N", "EN"]).unwrap();
        assert!(matches!(rebuild(&bad, 2), Err(Error::InvalidWords(_))));
        let counts = DepartureWords::from_strings(&["NN", "E"]).unwrap();
        assert!(rebuild(&counts, 2).is_err());
        assert!(DepartureWords::from_strings(&["NX"]).is_err());
    }

    #[test]
    fn small_inversions() {
        let w = departure_words(&p(&[2, 1, 1]), 2).unwrap();
        assert_eq!(w.inversion_total(), 2);
        let all_e = DepartureWords::from_strings(&["", "EEE"]).unwrap();
        assert_eq!(all_e.inversion_total(), 0);
    }

    #[test]
    fn size_examples() {
        let wp = WalkParams::new(3, 1).unwrap();
        let np = patterns(&p(&[16, 6, 6, 6, 5]), 4).unwrap();
        assert_eq!(size_from_pattern(&np, wp).unwrap(), 39);
        assert_eq!(size_from_pattern(&NorthEastPatterns::default(), wp).unwrap(), 0);
    }

    #[test]
    fn s_examples() {
        assert_eq!(s_of(&p(&[2, 2]), 2).values(), [2, 1]);
        assert_eq!(s_of(&p(&[1]), 2).values(), [1]);
        assert_eq!(s_of(&p(&[2, 1]), 2).values(), [2]);
        assert!(s_of(&Partition::empty(), 3).is_zero());
        let np = patterns(&p(&[2, 2]), 2).unwrap();
        assert_eq!(pattern_to_s(&np, 2).unwrap().values(), [2, 1]);
        assert_eq!(s_to_pattern(&SSequence::new(vec![2, 1]), 2).unwrap(), np);
    }

    #[test]
    fn class_polys() {
        assert_eq!(class_gen_poly(&SSequence::default(), 3), Poly::one());
        assert_eq!(class_gen_poly(&SSequence::new(vec![1, 1]), 2), Poly::from_i64s(&[1, 1]));
        assert_eq!(class_gen_poly(&SSequence::new(vec![2, 1]), 2), Poly::from_i64s(&[1, 1, 1]));
        let class = enumerate_class(&SSequence::new(vec![2, 1]), 2).unwrap();
        assert_eq!(class, vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]);
        assert_eq!(enumerate_class(&SSequence::default(), 2).unwrap(), vec![Partition::empty()]);
    }

    #[test]
    fn s_enumeration_matches_partitions() {
        for m in 2..=4 {
            let mut from_parts: Vec<SSequence> = partitions_up_to(10).map(|l| s_of(&l, m)).collect();
            from_parts.sort();
            from_parts.dedup();
            let mut listed = enumerate_s(m, 10);
            listed.sort();
            assert_eq!(listed, from_parts, "m = {m}");
        }
    }

    #[test]
    fn words_ending_in_e_counts() {
        assert_eq!(words_ending_in_e(0, 0), vec![Vec::<Step>::new()]);
        assert!(words_ending_in_e(2, 0).is_empty());
        assert_eq!(words_ending_in_e(1, 2).len(), 2);
    }
}
