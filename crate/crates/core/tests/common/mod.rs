//! Independent oracles used by the integration tests. Nothing here calls the
//! library's statistic or product code.
#![allow(dead_code)]

use hookdiff::QTSeries;

/// Arm and leg of the 1-based cell `(r, c)` by scanning the parts directly.
pub fn naive_arm_leg(parts: &[usize], r: usize, c: usize) -> (usize, usize) {
    let arm = parts[r - 1] - c;
    let leg = parts[r..].iter().filter(|&&x| x >= c).count();
    (arm, leg)
}

/// `h_{alpha,beta}` by a double loop over cells.
pub fn naive_h(parts: &[usize], alpha: usize, beta: usize) -> usize {
    let mut count = 0;
    for r in 1..=parts.len() {
        for c in 1..=parts[r - 1] {
            let (a, l) = naive_arm_leg(parts, r, c);
            if alpha * l == beta * (a + 1) && (a + l + 1) % (alpha + beta) == 0 {
                count += 1;
            }
        }
    }
    count
}

/// Largest part occurring at least `m` times, 0 if none.
pub fn naive_a(parts: &[usize], m: usize) -> usize {
    parts
        .iter()
        .copied()
        .filter(|&x| parts.iter().filter(|&&y| y == x).count() >= m)
        .max()
        .unwrap_or(0)
}

/// Hook lengths of all cells.
pub fn naive_hooks(parts: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for r in 1..=parts.len() {
        for c in 1..=parts[r - 1] {
            let (a, l) = naive_arm_leg(parts, r, c);
            out.push(a + l + 1);
        }
    }
    out
}

/// A partition is an m-core iff no hook length is divisible by m.
pub fn naive_is_core(parts: &[usize], m: usize) -> bool {
    naive_hooks(parts).iter().all(|h| h % m != 0)
}

/// Coefficient table `[q][t]` of `prod (1 - q^a t^b)^e` to `q^qmax`, in i128.
pub fn product_table(factors: &[(usize, usize, i32)], qmax: usize) -> Vec<Vec<i128>> {
    let tmax = qmax + 1;
    let mut s = vec![vec![0i128; tmax + 1]; qmax + 1];
    s[0][0] = 1;
    for &(a, b, e) in factors {
        if a > qmax {
            continue;
        }
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                for n in (a..=qmax).rev() {
                    for t in (b..=tmax).rev() {
                        s[n][t] -= s[n - a][t - b];
                    }
                }
            } else {
                for n in a..=qmax {
                    for t in b..=tmax {
                        s[n][t] += s[n - a][t - b];
                    }
                }
            }
        }
    }
    s
}

/// `q^shift * table`, keeping degrees up to the table's length.
pub fn shifted(table: &[Vec<i128>], shift: usize) -> Vec<Vec<i128>> {
    let mut out = vec![vec![0; table[0].len()]; table.len()];
    out[shift..].clone_from_slice(&table[..table.len() - shift]);
    out
}

/// Converts a library series into a coefficient table of the same shape.
pub fn table_of(s: &QTSeries, tmax: usize) -> Vec<Vec<i128>> {
    (0..=s.qmax())
        .map(|n| {
            (0..=tmax)
                .map(|t| i128::try_from(&s.coeff_qt(n, t)).expect("fits"))
                .collect()
        })
        .collect()
}

/// Table `[n][stat]` of counts over partitions from a list.
pub fn count_table<I: IntoIterator<Item = Vec<usize>>>(
    parts: I,
    qmax: usize,
    stat: impl Fn(&[usize]) -> usize,
) -> Vec<Vec<i128>> {
    let mut s = vec![vec![0i128; qmax + 2]; qmax + 1];
    for p in parts {
        let n: usize = p.iter().sum();
        if n <= qmax {
            s[n][stat(&p)] += 1;
        }
    }
    s
}

/// All partitions of size at most `qmax` as plain part vectors, generated by a
/// recursion independent of the library enumerator.
pub fn naive_partitions(qmax: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(qmax, qmax, &mut Vec::new(), &mut out);
    out
}

/// Number of Dyck paths of semilength `n` by a lattice-path count.
pub fn dyck_count(n: usize) -> u128 {
    let mut row = vec![0u128; n + 2];
    row[0] = 1;
    for _ in 0..2 * n {
        let mut next = vec![0u128; n + 2];
        for h in 0..=n {
            if row[h] == 0 {
                continue;
            }
            next[h + 1] += row[h];
            if h > 0 {
                next[h - 1] += row[h];
            }
        }
        row = next;
    }
    row[0]
}

/// Factors `1/(1 - q^(step i + offset) t^t)` for `i >= 1`, positive exponents only.
pub fn inverse_run(step: usize, offset: isize, t: usize, qmax: usize) -> Vec<(usize, usize, i32)> {
    (1..=qmax + 1)
        .map(|i| (step * i) as isize + offset)
        .filter(|&e| e >= 1 && e as usize <= qmax)
        .map(|e| (e as usize, t, -1))
        .collect()
}
