//! Exact polynomial and truncated bivariate series arithmetic, plus the closed-form
//! product sides of the partition identities.
//!
//! Coefficients are arbitrary-precision integers throughout; nothing here ever
//! touches floating point.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::Params;
use crate::partition::{subpartitions, Partition, StatParams};

/// A univariate polynomial with exact integer coefficients, lowest degree first.
///
/// Used for polynomials in `t` (class polynomials, rows of a bivariate series) and
/// for polynomials in `q` (Gaussian binomials in `q`, Catalan numbers).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * x^deg`.
    pub fn monomial(deg: usize, c: impl Into<BigInt>) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c.into();
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Poly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Substitutes `x -> x^k`.
    pub fn dilate(&self, k: usize) -> Poly {
        assert!(k >= 1);
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Poly { coeffs }
    }

    /// Value at `x = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficient list reflected against `top`: result coefficient `i` is
    /// coefficient `top - i` of `self`. Panics if `self` has degree above `top`.
    pub fn reflect(&self, top: usize) -> Poly {
        assert!(
            self.degree().is_none_or(|d| d <= top),
            "degree exceeds reflection point"
        );
        Poly::from_coeffs((0..=top).map(|i| self.coeff(top - i)).collect())
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.coeffs.len();
        (0..n).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        write!(f, "{var}")?;
                    } else {
                        write!(f, "{var}^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }

    /// Formats with the given variable name, ascending degree.
    pub fn display<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Poly, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(f, self.1)
            }
        }
        D(self, var)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "t")
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

/// Gaussian binomial coefficient `[n choose k]` as a polynomial.
///
/// Zero when `k < 0`, `n < 0` or `k > n`.
pub fn gauss_binomial(n: i64, k: i64) -> Poly {
    if n < 0 || k < 0 || k > n {
        return Poly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    // row[j] = [i choose j], built with [i, j] = [i-1, j-1] + x^j [i-1, j].
    let mut row: Vec<Poly> = vec![Poly::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity((i + 1).min(k + 1));
        for j in 0..=i.min(k) {
            let left = if j > 0 { row[j - 1].clone() } else { Poly::zero() };
            let up = row.get(j).map(|p| p.shift(j)).unwrap_or_default();
            next.push(&left + &up);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Number of size-`size` multisets over `kinds` kinds, as a Gaussian polynomial:
/// `[kinds + size - 1 choose size]`, with the empty multiset counted once even when
/// `kinds` is zero.
fn multichoose(kinds: i64, size: i64) -> Poly {
    if kinds < 0 || size < 0 {
        Poly::zero()
    } else if size == 0 {
        Poly::one()
    } else {
        gauss_binomial(kinds + size - 1, size)
    }
}

/// One factor `(1 - q^q t^t)^exponent` of an infinite product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub q: usize,
    pub t: usize,
    pub exponent: i32,
}

impl Factor {
    pub fn new(q: usize, t: usize, exponent: i32) -> Self {
        Factor { q, t, exponent }
    }

    /// `1 / (1 - q^q t^t)`.
    pub fn inverse(q: usize, t: usize) -> Self {
        Factor::new(q, t, -1)
    }
}

/// One coefficient at which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub q_exp: usize,
    pub t_exp: usize,
    pub lhs: String,
    pub rhs: String,
}

/// A power series in `q` truncated at `q^qmax` (inclusive) whose coefficients are
/// polynomials in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTSeries {
    qmax: usize,
    coeffs: Vec<Poly>,
}

impl QTSeries {
    pub fn zero(qmax: usize) -> Self {
        QTSeries {
            qmax,
            coeffs: vec![Poly::zero(); qmax + 1],
        }
    }

    pub fn one(qmax: usize) -> Self {
        let mut s = QTSeries::zero(qmax);
        s.coeffs[0] = Poly::one();
        s
    }

    /// `q^q_exp * poly(t)`, dropped entirely if `q_exp > qmax`.
    pub fn monomial(q_exp: usize, poly: Poly, qmax: usize) -> Self {
        let mut s = QTSeries::zero(qmax);
        s.add_at(q_exp, &poly);
        s
    }

    /// A `t`-free series from a polynomial in `q`.
    pub fn from_q_poly(poly: &Poly, qmax: usize) -> Self {
        let mut s = QTSeries::zero(qmax);
        for (i, c) in poly.coeffs().iter().enumerate().take(qmax + 1) {
            s.coeffs[i] = Poly::constant(c.clone());
        }
        s
    }

    pub fn qmax(&self) -> usize {
        self.qmax
    }

    /// The `t`-polynomial at `q^n`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Poly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn rows(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff_qt(&self, q: usize, t: usize) -> BigInt {
        self.coeffs.get(q).map(|p| p.coeff(t)).unwrap_or_default()
    }

    /// Adds `q^n * poly` in place, ignoring terms beyond the truncation order.
    pub fn add_at(&mut self, n: usize, poly: &Poly) {
        if n <= self.qmax {
            self.coeffs[n] += poly;
        }
    }

    /// Adds `c * q^q t^t` in place.
    pub fn add_term(&mut self, q: usize, t: usize, c: impl Into<BigInt>) {
        if q <= self.qmax {
            self.coeffs[q] += &Poly::monomial(t, c);
        }
    }

    pub fn truncate(&self, qmax: usize) -> QTSeries {
        let qmax = qmax.min(self.qmax);
        QTSeries {
            qmax,
            coeffs: self.coeffs[..=qmax].to_vec(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(&self, k: usize) -> QTSeries {
        let mut s = QTSeries::zero(self.qmax);
        for n in k..=self.qmax {
            s.coeffs[n] = self.coeffs[n - k].clone();
        }
        s
    }

    /// Sets `t = 1`.
    pub fn at_t_one(&self) -> QTSeries {
        QTSeries {
            qmax: self.qmax,
            coeffs: self
                .coeffs
                .iter()
                .map(|p| Poly::constant(p.eval_one()))
                .collect(),
        }
    }

    /// The `t^r` coefficient as a `t`-free series.
    pub fn t_coefficient(&self, r: usize) -> QTSeries {
        QTSeries {
            qmax: self.qmax,
            coeffs: self
                .coeffs
                .iter()
                .map(|p| Poly::constant(p.coeff(r)))
                .collect(),
        }
    }

    /// Multiplies in place by `(1 - q^a t^b)`.
    fn mul_binomial(&mut self, a: usize, b: usize) {
        for n in (a..=self.qmax).rev() {
            let sub = self.coeffs[n - a].shift(b);
            self.coeffs[n] = &self.coeffs[n] - &sub;
        }
    }

    /// Divides in place by `(1 - q^a t^b)`, `a >= 1`.
    fn div_binomial(&mut self, a: usize, b: usize) {
        for n in a..=self.qmax {
            let add = self.coeffs[n - a].shift(b);
            self.coeffs[n] += &add;
        }
    }

    /// Multiplies in place by one product factor.
    pub fn apply(&mut self, f: Factor) -> Result<()> {
        if f.q == 0 {
            return Err(Error::ConstantFactor { q: f.q, t: f.t });
        }
        if f.q > self.qmax {
            return Ok(());
        }
        for _ in 0..f.exponent.unsigned_abs() {
            if f.exponent > 0 {
                self.mul_binomial(f.q, f.t);
            } else {
                self.div_binomial(f.q, f.t);
            }
        }
        Ok(())
    }

    /// Nonzero coefficients as `(q_exponent, t_exponent, decimal)`, sorted.
    pub fn triples(&self) -> Vec<(usize, usize, String)> {
        let mut out = Vec::new();
        for (q, p) in self.coeffs.iter().enumerate() {
            for (t, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push((q, t, c.to_string()));
                }
            }
        }
        out
    }

    /// Rebuilds a series from triples. Repeated positions accumulate.
    pub fn from_triples(qmax: usize, triples: &[(usize, usize, String)]) -> Result<Self> {
        let mut s = QTSeries::zero(qmax);
        for (q, t, c) in triples {
            let c: BigInt = c
                .parse()
                .map_err(|_| Error::InvalidParams(format!("bad coefficient `{c}`")))?;
            s.add_term(*q, *t, c);
        }
        Ok(s)
    }

    /// Lowest `(q, t)` position where the two series differ, comparing up to the
    /// smaller truncation order.
    pub fn first_mismatch(&self, other: &QTSeries) -> Option<Mismatch> {
        let qmax = self.qmax.min(other.qmax);
        for n in 0..=qmax {
            let (a, b) = (&self.coeffs[n], &other.coeffs[n]);
            if a == b {
                continue;
            }
            let len = a.coeffs().len().max(b.coeffs().len());
            for t in 0..len {
                let (x, y) = (a.coeff(t), b.coeff(t));
                if x != y {
                    return Some(Mismatch {
                        q_exp: n,
                        t_exp: t,
                        lhs: x.to_string(),
                        rhs: y.to_string(),
                    });
                }
            }
        }
        None
    }

    /// Largest `t`-degree divided by the `q`-degree, over nonzero rows; `None` if
    /// some row of positive `q`-degree has `t`-degree above its `q`-degree.
    pub fn t_degree_bounded(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(n, p)| p.degree().is_none_or(|d| d <= n))
    }
}

impl Add<&QTSeries> for &QTSeries {
    type Output = QTSeries;

    fn add(self, rhs: &QTSeries) -> QTSeries {
        let qmax = self.qmax.min(rhs.qmax);
        QTSeries {
            qmax,
            coeffs: (0..=qmax)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl Sub<&QTSeries> for &QTSeries {
    type Output = QTSeries;

    fn sub(self, rhs: &QTSeries) -> QTSeries {
        let qmax = self.qmax.min(rhs.qmax);
        QTSeries {
            qmax,
            coeffs: (0..=qmax)
                .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl Mul<&QTSeries> for &QTSeries {
    type Output = QTSeries;

    fn mul(self, rhs: &QTSeries) -> QTSeries {
        let qmax = self.qmax.min(rhs.qmax);
        let mut out = QTSeries::zero(qmax);
        for i in 0..=qmax {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(qmax - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let prod = &self.coeffs[i] * &rhs.coeffs[j];
                out.coeffs[i + j] += &prod;
            }
        }
        out
    }
}

impl fmt::Display for QTSeries {
    /// Lowest `q`-degree first, `t`-polynomials in ascending `t`, then `O(q^(qmax+1))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let simple = p.coeffs().len() == 1 && !p.coeff(0).is_negative();
            let body = if simple {
                format!("{}", p.coeff(0))
            } else {
                format!("({})", p.display("t"))
            };
            match n {
                0 => write!(f, "{body}")?,
                _ => {
                    let qpow = if n == 1 {
                        "q".to_string()
                    } else {
                        format!("q^{n}")
                    };
                    if simple && p.coeff(0).is_one() {
                        write!(f, "{qpow}")?
                    } else {
                        write!(f, "{body}*{qpow}")?
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.qmax + 1)
    }
}

/// Expands `prod (1 - q^a t^b)^e` over the given factors up to `q^qmax`.
pub fn geometric_product(factors: &[Factor], qmax: usize) -> Result<QTSeries> {
    let mut s = QTSeries::one(qmax);
    for &f in factors {
        s.apply(f)?;
    }
    Ok(s)
}

/// Factors `1/(1 - q^(step*i + offset) t^t)` for every `i >= 1` with exponent at most `qmax`.
fn inverse_run(step: usize, offset: isize, t: usize, qmax: usize) -> Vec<Factor> {
    (1..)
        .map(|i| (step * i) as isize + offset)
        .take_while(|&e| e <= qmax as isize)
        .filter(|&e| e >= 1)
        .map(|e| Factor::inverse(e as usize, t))
        .collect()
}

/// `binom(2j, 2)`, the size of the 2-core indexed by `j`.
pub fn two_core_exponent(j: i64) -> usize {
    (j * (2 * j - 1)) as usize
}

/// `prod_{i>=1} 1/(1 - q^i)`.
pub fn euler_product(qmax: usize) -> QTSeries {
    geometric_product(&inverse_run(1, 0, 0, qmax), qmax).expect("positive exponents")
}

/// `prod_{i>=1} 1/((1 - q^(2i-1)) (1 - t q^(2i)))`.
pub fn odd_even_product(qmax: usize) -> QTSeries {
    odd_even_product_with(qmax, 0)
}

/// The same product with the even exponents shifted, `1/(1 - t q^(2i + shift))`.
/// A nonzero shift gives a deliberately wrong series for sensitivity tests.
pub fn odd_even_product_with(qmax: usize, even_shift: isize) -> QTSeries {
    let mut factors = inverse_run(2, -1, 0, qmax);
    factors.extend(inverse_run(2, even_shift, 1, qmax));
    geometric_product(&factors, qmax).expect("positive exponents")
}

/// `prod_{i>=1} 1/((1 - q^i)(1 - t q^i))`, whose coefficients are the `A(n, m)` table.
pub fn pair_product(qmax: usize) -> QTSeries {
    let mut factors = inverse_run(1, 0, 0, qmax);
    factors.extend(inverse_run(1, 0, 1, qmax));
    geometric_product(&factors, qmax).expect("positive exponents")
}

/// `q^shift / prod_{i>=1} (1 - q^(m i))^power (1 - t q^(m i))^t_power`.
pub fn core_product(m: usize, shift: usize, power: u32, t_power: u32, qmax: usize) -> QTSeries {
    let mut factors = Vec::new();
    for f in inverse_run(m, 0, 0, qmax) {
        factors.push(Factor::new(f.q, 0, -(power as i32)));
    }
    for f in inverse_run(m, 0, 1, qmax) {
        factors.push(Factor::new(f.q, 1, -(t_power as i32)));
    }
    geometric_product(&factors, qmax)
        .expect("positive exponents")
        .shift_q(shift)
}

/// `prod_{i>=1, m does not divide i} 1/(1 - q^i) * prod_{i>=1} 1/(1 - t q^(m i))`.
pub fn hook_stat_product(m: usize, qmax: usize) -> QTSeries {
    let mut factors: Vec<Factor> = inverse_run(1, 0, 0, qmax)
        .into_iter()
        .filter(|f| f.q % m != 0)
        .collect();
    factors.extend(inverse_run(m, 0, 1, qmax));
    geometric_product(&factors, qmax).expect("positive exponents")
}

/// Carlitz q-Catalan polynomial from `C_{n+1} = sum_l q^l C_l C_{n-l}`, `C_0 = 1`.
pub fn carlitz_poly(n: usize) -> Poly {
    let mut cs: Vec<Poly> = vec![Poly::one()];
    for k in 0..n {
        let mut next = Poly::zero();
        for l in 0..=k {
            next += &(&cs[l] * &cs[k - l]).shift(l);
        }
        cs.push(next);
    }
    cs.swap_remove(n)
}

/// Carlitz q-Catalan number `C_n(q)` as a `t`-free series truncated at `q^qmax`.
pub fn carlitz_catalan(n: usize, qmax: usize) -> QTSeries {
    QTSeries::from_q_poly(&carlitz_poly(n), qmax)
}

/// `q^binom(n,2) C_n(1/q)`: the Carlitz polynomial reflected against its top degree.
pub fn reflected_catalan(n: usize) -> Poly {
    carlitz_poly(n).reflect(n * n.saturating_sub(1) / 2)
}

/// The q,t-Catalan polynomial `sum q^|lambda| t^h11(lambda)` over partitions whose
/// cells all satisfy `row + col <= n`, returned up to its top degree `binom(n,2)`.
pub fn qt_catalan(n: usize) -> QTSeries {
    let top = n * n.saturating_sub(1) / 2;
    let h11 = StatParams::new(1, 1).expect("valid");
    let mut s = QTSeries::zero(top);
    for lam in subpartitions(&Partition::staircase(n.saturating_sub(1))) {
        s.add_term(lam.size(), lam.h_stat(h11), 1);
    }
    s
}

/// `prod_{i=1}^{len-1} [k_{i-1} + k_i - 1 choose k_i]` in `q`, where a factor with
/// `k_i = 0` is 1 and any negative entry makes the product vanish.
pub fn pq_product(k: &[i64]) -> Poly {
    if k.iter().any(|&x| x < 0) {
        return Poly::zero();
    }
    let mut out = Poly::one();
    for w in k.windows(2) {
        let f = multichoose(w[0], w[1]);
        if f.is_zero() {
            return Poly::zero();
        }
        out = &out * &f;
    }
    out
}

/// Checks the split of `pq_product(k)` over all `tau` with first entry `tau0`:
/// `P(k) = sum_tau P(tau) P(k - tau) q^{sum_i tau_i (k_{i+1} - tau_{i+1})}`.
pub fn vandermonde_convolution_check(k: &[i64], tau0: i64) -> bool {
    if k.is_empty() || tau0 < 0 || tau0 > k[0] {
        return false;
    }
    let lhs = pq_product(k);
    let mut rhs = Poly::zero();
    let mut tau = vec![0i64; k.len()];
    tau[0] = tau0;
    loop {
        let rest: Vec<i64> = k.iter().zip(&tau).map(|(a, b)| a - b).collect();
        let exp: i64 = (0..k.len() - 1).map(|i| tau[i] * rest[i + 1]).sum();
        let term = &pq_product(&tau) * &pq_product(&rest);
        if !term.is_zero() {
            rhs += &term.shift(exp as usize);
        }
        // odometer over tau[1..]
        let mut i = 1;
        loop {
            if i == k.len() {
                return lhs == rhs;
            }
            if tau[i] < k[i] {
                tau[i] += 1;
                break;
            }
            tau[i] = 0;
            i += 1;
        }
    }
}

/// Generating polynomial of distinct-part partitions with 2-core the `a`-staircase
/// and largest part at most `b`: `[b choose floor((b-a)/2)]_{q^2} q^binom(a+1, 2)`.
pub fn f_ab(a: usize, b: usize) -> Poly {
    if b < a {
        return Poly::zero();
    }
    let k = ((b - a) / 2) as i64;
    gauss_binomial(b as i64, k).dilate(2).shift(a * (a + 1) / 2)
}

/// The closed-form side of a registered identity, expanded to `q^qmax`.
pub fn rhs_series(id: &str, params: &Params, qmax: usize) -> Result<QTSeries> {
    let s = match id {
        "bf-main" | "a2-product" | "k012" | "k012-series" => odd_even_product(qmax),
        "euler" | "multisum-t1" => euler_product(qmax),
        "cj1-A" => pair_product(qmax),
        "two-core-count" => core_product(2, two_core_exponent(params.require_j()?), 2, 0, qmax),
        "distinct-two-core" => core_product(2, two_core_exponent(params.require_j()?), 1, 0, qmax),
        "h20-two-core" | "cj1" => core_product(2, two_core_exponent(params.require_j()?), 1, 1, qmax),
        "hook-product" => {
            let p = params.require_alpha_beta()?;
            hook_stat_product(p.modulus() as usize, qmax)
        }
        "restricted-core" => {
            let m = params.require_m()?;
            let core = params.require_core()?;
            core_product(m, core.size(), (m - 1) as u32, 0, qmax)
        }
        "hook-m0-core" | "mcore" => {
            let m = params.require_m()?;
            let core = params.require_core()?;
            core_product(m, core.size(), (m - 1) as u32, 1, qmax)
        }
        "catalan" => QTSeries::from_q_poly(&reflected_catalan(params.require_n()?), qmax),
        _ => return Err(Error::UnknownIdentity(id.to_string())),
    };
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &Poly) -> Vec<i64> {
        p.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn gauss_binomial_small() {
        assert_eq!(ints(&gauss_binomial(2, 1)), [1, 1]);
        assert_eq!(ints(&gauss_binomial(3, 1)), [1, 1, 1]);
        assert_eq!(ints(&gauss_binomial(4, 2)), [1, 1, 2, 1, 1]);
        assert_eq!(gauss_binomial(7, 0), Poly::one());
        assert_eq!(gauss_binomial(7, 7), Poly::one());
        assert!(gauss_binomial(2, 3).is_zero());
        assert!(gauss_binomial(-1, 0).is_zero());
        assert!(gauss_binomial(3, -1).is_zero());
    }

    #[test]
    fn product_examples() {
        let p = euler_product(10);
        let got: Vec<i64> = (0..=10).map(|n| p.coeff_qt(n, 0).try_into().unwrap()).collect();
        assert_eq!(got, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(geometric_product(&[], 5).unwrap(), QTSeries::one(5));
        assert_eq!(ints(&odd_even_product(4).coeff(4)), [2, 2, 1]);
        assert!(matches!(
            geometric_product(&[Factor::inverse(0, 1)], 3),
            Err(Error::ConstantFactor { .. })
        ));
    }

    #[test]
    fn factor_then_inverse_is_identity() {
        let mut s = pair_product(12);
        let orig = s.clone();
        s.apply(Factor::new(3, 2, 2)).unwrap();
        s.apply(Factor::new(3, 2, -2)).unwrap();
        assert_eq!(s, orig);
    }

    #[test]
    fn pair_product_rows() {
        let a = pair_product(3);
        assert_eq!(ints(&a.coeff(1)), [1, 1]);
        assert_eq!(ints(&a.coeff(2)), [2, 2, 1]);
    }

    #[test]
    fn carlitz_small() {
        assert_eq!(carlitz_poly(0), Poly::one());
        assert_eq!(ints(&carlitz_poly(2)), [1, 1]);
        assert_eq!(ints(&carlitz_poly(3)), [1, 2, 1, 1]);
        assert_eq!(ints(&reflected_catalan(3)), [1, 1, 2, 1]);
    }

    #[test]
    fn qt_catalan_small() {
        assert_eq!(qt_catalan(0), QTSeries::one(0));
        let two = qt_catalan(2);
        assert_eq!(two.triples(), vec![(0, 0, "1".into()), (1, 0, "1".into())]);
        assert_eq!(qt_catalan(3).at_t_one().coeff(3), Poly::one());
    }

    #[test]
    fn pq_examples() {
        assert_eq!(pq_product(&[1]), Poly::one());
        assert_eq!(pq_product(&[1, 1]), Poly::one());
        assert_eq!(ints(&pq_product(&[2, 1])), [1, 1]);
        assert_eq!(pq_product(&[1, 0, 0]), Poly::one());
        assert!(pq_product(&[1, 0, 1]).is_zero());
        assert!(pq_product(&[1, -1]).is_zero());
    }

    #[test]
    fn vandermonde_examples() {
        assert!(vandermonde_convolution_check(&[1, 1], 1));
        for t0 in 0..=2 {
            assert!(vandermonde_convolution_check(&[2, 1, 1], t0));
        }
        assert!(!vandermonde_convolution_check(&[1, 1], 2));
    }

    #[test]
    fn f_ab_examples() {
        assert_eq!(f_ab(0, 0), Poly::one());
        assert_eq!(f_ab(1, 2), Poly::monomial(1, 1));
        assert_eq!(f_ab(2, 3), Poly::monomial(3, 1));
        assert_eq!(ints(&f_ab(0, 2)), [1, 0, 1]);
        assert!(f_ab(3, 1).is_zero());
    }

    #[test]
    fn display_forms() {
        let s = odd_even_product(2);
        assert_eq!(s.to_string(), "1 + q + (1 + t)*q^2 + O(q^3)");
        assert_eq!(Poly::from_i64s(&[0, -2, 1]).to_string(), "-2*t + t^2");
    }

    #[test]
    fn truncation_mixes_to_minimum() {
        let a = euler_product(5);
        let b = euler_product(8);
        assert_eq!((&a * &b).qmax(), 5);
        assert_eq!((&a + &b).qmax(), 5);
    }

    #[test]
    fn rhs_unknown_id() {
        assert_eq!(
            rhs_series("nope", &Params::default(), 3),
            Err(Error::UnknownIdentity("nope".into()))
        );
    }

    #[test]
    fn two_core_rhs_leading_term() {
        let p = Params { j: Some(1), ..Params::default() };
        let s = rhs_series("two-core-count", &p, 6).unwrap();
        assert_eq!(s.coeff_qt(0, 0), BigInt::zero());
        assert_eq!(s.coeff_qt(1, 0), BigInt::one());
        assert_eq!(s.coeff_qt(3, 0), BigInt::from(2));
    }
}
