//! Brute-force statistic series, the identity registry, and conjecture scans.

use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cores::{alt_sum, is_m_core, m_core};
use crate::error::{Error, Result};
use crate::params::Params;
use crate::partition::{partitions_of, Partition, StatParams};
use crate::qseries::{
    core_product, euler_product, odd_even_product, reflected_catalan, rhs_series, two_core_exponent,
    Mismatch, QTSeries,
};
use crate::walks::{enumerate_class, enumerate_s, multisum, multisum_filtered, restricted_multisum};

/// A nonnegative statistic on partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statistic {
    /// `h_{alpha,beta}`.
    H(StatParams),
    /// Cells with arm equal to leg.
    HZero,
    /// `a_m`, the largest part repeated at least m times.
    A(usize),
    /// `h_{1,1} + h_0`.
    HookPlusZero,
    /// Always 0, for plain counting.
    Trivial,
}

impl Statistic {
    pub fn eval(&self, lambda: &Partition) -> usize {
        match *self {
            Statistic::H(p) => lambda.h_stat(p),
            Statistic::HZero => lambda.h_zero(),
            Statistic::A(m) => lambda.largest_repeated(m),
            Statistic::HookPlusZero => {
                lambda.h_stat(StatParams::new(1, 1).expect("valid")) + lambda.h_zero()
            }
            Statistic::Trivial => 0,
        }
    }

    pub fn h(alpha: u32, beta: u32) -> Result<Self> {
        Ok(Statistic::H(StatParams::new(alpha, beta)?))
    }
}

/// A set of partitions, selected by a predicate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    All,
    /// 2-core of size `binom(2j, 2)`.
    TwoCoreSize(i64),
    /// m-core equal to `core`.
    MCore { m: usize, core: Partition },
    /// Every cell satisfies `row + col <= n`.
    FitsStaircase(usize),
    DistinctParts,
    MRestricted(usize),
}

impl Filter {
    fn validate(&self) -> Result<()> {
        match self {
            Filter::MCore { m, core } => {
                if !is_m_core(core, *m)? {
                    return Err(Error::NotACore {
                        partition: core.to_string(),
                        m: *m,
                    });
                }
            }
            Filter::MRestricted(m) if *m < 1 => {
                return Err(Error::InvalidParams("m-restricted needs m >= 1".into()));
            }
            _ => {}
        }
        Ok(())
    }

    pub fn accepts(&self, lambda: &Partition) -> bool {
        match self {
            Filter::All => true,
            Filter::TwoCoreSize(j) => {
                m_core(lambda, 2).expect("m = 2").size() == two_core_exponent(*j)
            }
            Filter::MCore { m, core } => m_core(lambda, *m).is_ok_and(|c| &c == core),
            Filter::FitsStaircase(n) => (1..=lambda.len()).all(|r| r + lambda.part(r) <= *n),
            Filter::DistinctParts => lambda.has_distinct_parts(),
            Filter::MRestricted(m) => lambda.is_m_restricted(*m),
        }
    }
}

/// A statistic over the partitions accepted by every filter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatSpec {
    pub statistic: Statistic,
    pub filters: Vec<Filter>,
}

impl StatSpec {
    pub fn new(statistic: Statistic, filters: Vec<Filter>) -> Result<Self> {
        for f in &filters {
            f.validate()?;
        }
        Ok(StatSpec { statistic, filters })
    }

    pub fn all(statistic: Statistic) -> Self {
        StatSpec {
            statistic,
            filters: vec![Filter::All],
        }
    }

    pub fn accepts(&self, lambda: &Partition) -> bool {
        self.filters.iter().all(|f| f.accepts(lambda))
    }
}

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

/// `sum t^stat q^|lambda|` over accepted partitions of size at most `qmax`, by full
/// enumeration. Sizes are independent shards run on `threads` workers (0 picks a
/// default) and merged in order, so the result does not depend on `threads`.
pub fn statistic_series(spec: &StatSpec, qmax: usize, threads: usize) -> Result<QTSeries> {
    for f in &spec.filters {
        f.validate()?;
    }
    let shards: Vec<Vec<usize>> = pool(threads).install(|| {
        (0..=qmax)
            .into_par_iter()
            .map(|n| {
                let mut counts = Vec::new();
                for lam in partitions_of(n) {
                    if spec.accepts(&lam) {
                        let v = spec.statistic.eval(&lam);
                        if counts.len() <= v {
                            counts.resize(v + 1, 0);
                        }
                        counts[v] += 1;
                    }
                }
                counts
            })
            .collect()
    });
    let mut s = QTSeries::zero(qmax);
    for (n, counts) in shards.into_iter().enumerate() {
        for (t, c) in counts.into_iter().enumerate() {
            if c > 0 {
                s.add_term(n, t, c);
            }
        }
    }
    Ok(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    HoldsToBound,
    Counterexample,
    HypothesisUnmet,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::HoldsToBound => "holds-to-bound",
            Status::Counterexample => "counterexample",
            Status::HypothesisUnmet => "hypothesis-unmet",
        }
    }
}

type Triples = Vec<(usize, usize, String)>;

/// Outcome of one identity check or conjecture scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub qmax: usize,
    pub params: Params,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs_triples: Option<Triples>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs_triples: Option<Triples>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Verified | Status::HoldsToBound)
    }
}

/// Knobs that do not change what is computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Worker threads for enumeration; 0 picks a default.
    pub threads: usize,
    /// Record wall time in `elapsed_ms`; off gives byte-identical reports.
    pub timed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityKind {
    Theorem,
    Conjecture,
}

/// A registry entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Identity {
    pub id: &'static str,
    pub kind: IdentityKind,
    pub params: &'static str,
    pub anchor: &'static str,
}

const fn thm(id: &'static str, params: &'static str, anchor: &'static str) -> Identity {
    Identity {
        id,
        kind: IdentityKind::Theorem,
        params,
        anchor,
    }
}

const REGISTRY: &[Identity] = &[
    thm("bf-main", "", "sum t^h11(l) q^|l| = prod 1/((1-q^(2i-1))(1-tq^(2i)))"),
    thm("a2-product", "", "sum t^a2(l) q^|l| = prod 1/((1-q^(2i-1))(1-tq^(2i)))"),
    thm("multisum", "m", "sum t^h(m-1,1)(l) q^|l| = multisum over S_m of t-binomial products"),
    thm("multisum-t1", "m", "multisum over S_m at t=1 = prod 1/(1-q^i)"),
    thm("k012-series", "", "[t^r] multisum over partitions = [t^r] prod 1/((1-q^(2i-1))(1-tq^(2i))), r=0,1,2"),
    thm("k012", "", "alias of k012-series"),
    thm("k012-class", "", "#{h11 = r} = #{a2 = r} on every 2-diagonal class, r=0,1,2"),
    thm("catalan", "n", "q^binom(n,2) C_n(1/q) = multisum over classes fitting the n-staircase at t=1"),
    thm("qt-catalan", "n", "sum over l inside the n-staircase of t^h11 q^|l| = restricted multisum"),
    thm("two-core-count", "j", "multisum over |l|_a = j at t=1 = q^binom(2j,2) / prod (1-q^(2i))^2"),
    thm("h20-a2", "j", "h20 and a2 equidistributed on partitions with 2-core size binom(2j,2)"),
    thm("two-core-large", "", "h11 and a2 equidistributed on partitions of n with 2-core (k,...,1), 2k >= n - binom(k+1,2)"),
    thm("distinct-two-core", "j", "sum over distinct-part l with 2-core size binom(2j,2) = q^binom(2j,2) / prod (1-q^(2i))"),
    thm("genhook20", "j", "sum over 2-core size binom(2j,2) of t^h20 q^|l| = q^binom(2j,2) / prod (1-q^(2i))(1-tq^(2i))"),
    thm("bfn", "alpha,beta", "sum t^h(a,b)(l) q^|l| = prod_{(a+b) not | i} 1/(1-q^i) prod 1/(1-tq^((a+b)i))"),
    thm("prestrict", "m,core", "sum over m-restricted l with m-core c of q^|l| = q^|c| / prod (1-q^(mi))^(m-1)"),
    thm("hookp0", "m,core", "sum over l with m-core c of t^h(m,0) q^|l| = q^|c| / prod (1-q^(mi))^(m-1)(1-tq^(mi))"),
    Identity {
        id: "cj1",
        kind: IdentityKind::Conjecture,
        params: "[j]",
        anchor: "h11, h20, a2 equidistributed on 2-core size binom(2j,2), counts A((n-binom(2j,2))/2, r) from prod 1/((1-q^i)(1-tq^i))",
    },
    Identity {
        id: "mcore",
        kind: IdentityKind::Conjecture,
        params: "m,core,[alpha,beta]",
        anchor: "sum over l with m-core c of t^h(a,b) q^|l| = q^|c| / prod (1-q^(mi))^(m-1)(1-tq^(mi)), a+b=m",
    },
];

/// The registered identities in a fixed order.
pub fn list_identities() -> &'static [Identity] {
    REGISTRY
}

fn lookup(id: &str) -> Result<&'static Identity> {
    REGISTRY
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Builds a report comparing two series coefficientwise.
pub fn compare(id: &str, qmax: usize, params: &Params, lhs: &QTSeries, rhs: &QTSeries) -> VerificationReport {
    let mismatch = lhs.first_mismatch(rhs);
    let failed = mismatch.is_some();
    VerificationReport {
        id: id.to_string(),
        qmax,
        params: params.clone(),
        status: if failed {
            Status::Counterexample
        } else {
            Status::Verified
        },
        first_mismatch: mismatch,
        lhs_triples: failed.then(|| lhs.triples()),
        rhs_triples: failed.then(|| rhs.triples()),
        notes: Vec::new(),
        elapsed_ms: 0,
    }
}

/// Keeps the `t^0 .. t^r_max` part of a series.
fn t_truncated(s: &QTSeries, r_max: usize) -> QTSeries {
    let mut out = QTSeries::zero(s.qmax());
    for r in 0..=r_max {
        for n in 0..=s.qmax() {
            let c = s.coeff_qt(n, r);
            if !c.is_zero() {
                out.add_term(n, r, c);
            }
        }
    }
    out
}

fn series(stat: Statistic, filters: Vec<Filter>, qmax: usize, threads: usize) -> Result<QTSeries> {
    statistic_series(&StatSpec::new(stat, filters)?, qmax, threads)
}

fn h11() -> Statistic {
    Statistic::H(StatParams::new(1, 1).expect("valid"))
}

fn h20() -> Statistic {
    Statistic::H(StatParams::new(2, 0).expect("valid"))
}

/// Checks a registered theorem to `q^qmax`.
pub fn verify(id: &str, qmax: usize, params: &Params, opts: VerifyOptions) -> Result<VerificationReport> {
    let entry = lookup(id)?;
    if entry.kind == IdentityKind::Conjecture {
        return conjecture_scan(id, params, qmax, opts);
    }
    let start = Instant::now();
    let th = opts.threads;
    let mut report = match id {
        "bf-main" => {
            let lhs = series(h11(), vec![Filter::All], qmax, th)?;
            compare(id, qmax, params, &lhs, &rhs_series(id, params, qmax)?)
        }
        "a2-product" => {
            let lhs = series(Statistic::A(2), vec![Filter::All], qmax, th)?;
            compare(id, qmax, params, &lhs, &rhs_series(id, params, qmax)?)
        }
        "multisum" => {
            let m = params.require_m()?;
            let lhs = series(Statistic::h((m - 1) as u32, 1)?, vec![Filter::All], qmax, th)?;
            compare(id, qmax, params, &lhs, &multisum(m, qmax))
        }
        "multisum-t1" => {
            let m = params.require_m()?;
            compare(id, qmax, params, &multisum(m, qmax).at_t_one(), &euler_product(qmax))
        }
        "k012" | "k012-series" => {
            let lhs = multisum(2, qmax);
            let rhs = odd_even_product(qmax);
            let mut r = compare(id, qmax, params, &t_truncated(&lhs, 2), &t_truncated(&rhs, 2));
            let note = match lhs.first_mismatch(&rhs) {
                None => "full t-series also agree to the truncation".to_string(),
                Some(m) => format!("full t-series differ first at q^{} t^{}", m.q_exp, m.t_exp),
            };
            r.notes.push(note);
            r
        }
        "k012-class" => k012_class(qmax, params),
        "catalan" => {
            let n = params.require_n()?;
            let top = n * n.saturating_sub(1) / 2;
            let lhs = restricted_multisum(n).at_t_one();
            let rhs = QTSeries::from_q_poly(&reflected_catalan(n), top);
            let mut r = compare(id, top, params, &lhs, &rhs);
            r.notes.push(format!("C_{n}(1) = {}", reflected_catalan(n).eval_one()));
            r
        }
        "qt-catalan" => {
            let n = params.require_n()?;
            let top = n * n.saturating_sub(1) / 2;
            let brute = series(h11(), vec![Filter::FitsStaircase(n)], top, th)?;
            compare(id, top, params, &brute, &restricted_multisum(n))
        }
        "two-core-count" => {
            let j = params.require_j()?;
            let lhs = multisum_filtered(2, qmax, |s| {
                alt_sum(&Partition::new(s.values().to_vec()).expect("S_2 is P")) == j
            })
            .at_t_one();
            compare(id, qmax, params, &lhs, &rhs_series(id, params, qmax)?)
        }
        "h20-a2" => {
            let j = params.require_j()?;
            let lhs = series(h20(), vec![Filter::TwoCoreSize(j)], qmax, th)?;
            let rhs = series(Statistic::A(2), vec![Filter::TwoCoreSize(j)], qmax, th)?;
            compare(id, qmax, params, &lhs, &rhs)
        }
        "two-core-large" => two_core_large(qmax, params, th)?,
        "distinct-two-core" => {
            let j = params.require_j()?;
            let lhs = series(Statistic::Trivial, vec![Filter::TwoCoreSize(j), Filter::DistinctParts], qmax, th)?;
            compare(id, qmax, params, &lhs, &rhs_series(id, params, qmax)?)
        }
        "genhook20" => {
            let j = params.require_j()?;
            let lhs = series(h20(), vec![Filter::TwoCoreSize(j)], qmax, th)?;
            compare(id, qmax, params, &lhs, &rhs_series("h20-two-core", params, qmax)?)
        }
        "bfn" => {
            let p = params.require_alpha_beta()?;
            let lhs = series(Statistic::H(p), vec![Filter::All], qmax, th)?;
            compare(id, qmax, params, &lhs, &rhs_series("hook-product", params, qmax)?)
        }
        "prestrict" => {
            let (m, core) = (params.require_m()?, params.require_core()?.clone());
            let filters = vec![Filter::MCore { m, core }, Filter::MRestricted(m)];
            let lhs = series(Statistic::Trivial, filters, qmax, th)?;
            compare(id, qmax, params, &lhs, &rhs_series("restricted-core", params, qmax)?)
        }
        "hookp0" => {
            let (m, core) = (params.require_m()?, params.require_core()?.clone());
            let lhs = series(Statistic::h(m as u32, 0)?, vec![Filter::MCore { m, core }], qmax, th)?;
            compare(id, qmax, params, &lhs, &rhs_series("hook-m0-core", params, qmax)?)
        }
        _ => return Err(Error::UnknownIdentity(id.to_string())),
    };
    if opts.timed {
        report.elapsed_ms = start.elapsed().as_millis() as u64;
    }
    Ok(report)
}

/// Per-class counts of `h_{1,1} = r` and `a_2 = r` for `r <= 2`, over every
/// 2-diagonal class of weight at most `qmax`.
fn k012_class(qmax: usize, params: &Params) -> VerificationReport {
    let h = StatParams::new(1, 1).expect("valid");
    let mut report = compare("k012-class", qmax, params, &QTSeries::zero(qmax), &QTSeries::zero(qmax));
    let mut classes = 0usize;
    for s in enumerate_s(2, qmax) {
        classes += 1;
        let members = enumerate_class(&s, 2).expect("valid sequence");
        for r in 0..=2 {
            let by_h = members.iter().filter(|l| l.h_stat(h) == r).count();
            let by_a = members.iter().filter(|l| l.largest_repeated(2) == r).count();
            if by_h != by_a {
                report.status = Status::Counterexample;
                report.first_mismatch = Some(Mismatch {
                    q_exp: s.weight(2),
                    t_exp: r,
                    lhs: by_h.to_string(),
                    rhs: by_a.to_string(),
                });
                report.notes.push(format!("class {s}"));
                return report;
            }
        }
    }
    report.notes.push(format!("{classes} classes checked"));
    report
}

/// `h_{1,1}` against `a_2` on partitions of n with 2-core `(k, ..., 1)`, for all n, k
/// with `2k >= n - binom(k+1, 2)` and `n <= qmax`.
fn two_core_large(qmax: usize, params: &Params, threads: usize) -> Result<VerificationReport> {
    let mut report = compare("two-core-large", qmax, params, &QTSeries::zero(qmax), &QTSeries::zero(qmax));
    let mut k = 0;
    while k * (k + 1) / 2 <= qmax {
        let core = Partition::staircase(k);
        let base = core.size();
        let filters = vec![Filter::MCore { m: 2, core }];
        let lhs = series(h11(), filters.clone(), qmax, threads)?;
        let rhs = series(Statistic::A(2), filters, qmax, threads)?;
        for n in base..=qmax.min(base + 2 * k) {
            if lhs.coeff(n) != rhs.coeff(n) {
                let m = lhs.truncate(n).first_mismatch(&rhs.truncate(n)).expect("rows differ");
                report.status = Status::Counterexample;
                report.first_mismatch = Some(m);
                report.notes.push(format!("2-core staircase of height {k}"));
                return Ok(report);
            }
        }
        k += 1;
    }
    Ok(report)
}

/// Scans a conjecture for every size up to `nmax`. A failure is reported as a
/// counterexample, never as an error.
pub fn conjecture_scan(name: &str, params: &Params, nmax: usize, opts: VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = match name {
        "cj1" => scan_cj1(params, nmax, opts.threads)?,
        "mcore" => scan_mcore(params, nmax, opts.threads)?,
        _ => return Err(Error::UnknownIdentity(name.to_string())),
    };
    if report.status == Status::Verified {
        report.status = Status::HoldsToBound;
    }
    if opts.timed {
        report.elapsed_ms = start.elapsed().as_millis() as u64;
    }
    Ok(report)
}

/// `0, 1, -1, 2, -2, ...` while `binom(2j, 2) <= nmax`.
fn admissible_j(nmax: usize) -> Vec<i64> {
    let mut out = vec![0];
    for a in 1.. {
        let pair = [a, -a];
        let keep: Vec<i64> = pair.into_iter().filter(|&j| two_core_exponent(j) <= nmax).collect();
        if keep.is_empty() {
            break;
        }
        out.extend(keep);
    }
    out
}

fn scan_cj1(params: &Params, nmax: usize, threads: usize) -> Result<VerificationReport> {
    let js = match params.j {
        Some(j) => vec![j],
        None => admissible_j(nmax),
    };
    let mut report = compare("cj1", nmax, params, &QTSeries::zero(nmax), &QTSeries::zero(nmax));
    for j in js {
        let filters = vec![Filter::TwoCoreSize(j)];
        let by_h11 = series(h11(), filters.clone(), nmax, threads)?;
        let predicted = core_product(2, two_core_exponent(j), 1, 1, nmax);
        let others = [
            ("h20", series(h20(), filters.clone(), nmax, threads)?),
            ("a2", series(Statistic::A(2), filters, nmax, threads)?),
            ("A-row", predicted),
        ];
        for (what, other) in others {
            if let Some(m) = by_h11.first_mismatch(&other) {
                report.status = Status::Counterexample;
                report.first_mismatch = Some(m);
                report.notes.push(format!("j = {j}: h11 against {what}"));
                report.lhs_triples = Some(by_h11.triples());
                report.rhs_triples = Some(other.triples());
                return Ok(report);
            }
        }
    }
    Ok(report)
}

fn scan_mcore(params: &Params, nmax: usize, threads: usize) -> Result<VerificationReport> {
    let m = params.require_m()?;
    let core = params.require_core()?.clone();
    if !is_m_core(&core, m)? {
        return Err(Error::NotACore {
            partition: core.to_string(),
            m,
        });
    }
    let pairs: Vec<(u32, u32)> = match (params.alpha, params.beta) {
        (Some(a), Some(b)) => {
            if (a + b) as usize != m {
                return Err(Error::InvalidParams(format!("alpha + beta must equal m = {m}")));
            }
            vec![(a, b)]
        }
        (None, None) => (1..=m as u32).map(|a| (a, m as u32 - a)).collect(),
        _ => return Err(Error::InvalidParams("give both alpha and beta or neither".into())),
    };
    let rhs = rhs_series("mcore", params, nmax)?;
    let mut report = compare("mcore", nmax, params, &QTSeries::zero(nmax), &QTSeries::zero(nmax));
    for (a, b) in pairs {
        let lhs = series(Statistic::h(a, b)?, vec![Filter::MCore { m, core: core.clone() }], nmax, threads)?;
        if let Some(mm) = lhs.first_mismatch(&rhs) {
            report.status = Status::Counterexample;
            report.first_mismatch = Some(mm);
            report.notes.push(format!("(alpha, beta) = ({a}, {b})"));
            report.lhs_triples = Some(lhs.triples());
            report.rhs_triples = Some(rhs.triples());
            return Ok(report);
        }
    }
    Ok(report)
}

/// Compares the distributions of `f` and `g` over a shared set, size by size up to
/// `nmax`. With `t_max` set, only counts for values `0..=t_max` are compared.
pub fn equidistribution_check(
    f: &StatSpec,
    g: &StatSpec,
    nmax: usize,
    t_max: Option<usize>,
    opts: VerifyOptions,
) -> Result<VerificationReport> {
    if f.filters != g.filters {
        return Err(Error::InvalidParams("both statistics must use the same filter".into()));
    }
    let start = Instant::now();
    let mut lhs = statistic_series(f, nmax, opts.threads)?;
    let mut rhs = statistic_series(g, nmax, opts.threads)?;
    if let Some(r) = t_max {
        lhs = t_truncated(&lhs, r);
        rhs = t_truncated(&rhs, r);
    }
    let mut report = compare("equidistribution", nmax, &Params::default(), &lhs, &rhs);
    if opts.timed {
        report.elapsed_ms = start.elapsed().as_millis() as u64;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{odd_even_product_with, Poly};

    const QUIET: VerifyOptions = VerifyOptions { threads: 1, timed: false };

    #[test]
    fn series_q4_examples() {
        let s = statistic_series(&StatSpec::all(h11()), 4, 1).unwrap();
        assert_eq!(s.coeff(4), Poly::from_i64s(&[2, 2, 1]));
        let a = statistic_series(&StatSpec::all(Statistic::A(2)), 4, 1).unwrap();
        assert_eq!(a.coeff(4), Poly::from_i64s(&[2, 2, 1]));
        assert_eq!(statistic_series(&StatSpec::all(h11()), 0, 1).unwrap(), QTSeries::one(0));
    }

    #[test]
    fn bad_core_filter() {
        let err = StatSpec::new(Statistic::Trivial, vec![Filter::MCore { m: 2, core: Partition::new(vec![2]).unwrap() }]);
        assert!(matches!(err, Err(Error::NotACore { .. })));
    }

    #[test]
    fn bf_main_small() {
        let r = verify("bf-main", 10, &Params::default(), QUIET).unwrap();
        assert_eq!(r.status, Status::Verified);
        assert!(r.first_mismatch.is_none());
        assert_eq!(verify("bf-main", 0, &Params::default(), QUIET).unwrap().status, Status::Verified);
    }

    #[test]
    fn mutation_caught_at_q2() {
        let lhs = series(h11(), vec![Filter::All], 8, 1).unwrap();
        let r = compare("bf-main", 8, &Params::default(), &lhs, &odd_even_product_with(8, 1));
        assert_eq!(r.status, Status::Counterexample);
        assert_eq!(r.first_mismatch.unwrap().q_exp, 2);
    }

    #[test]
    fn unknown_and_missing() {
        assert!(matches!(verify("nope", 3, &Params::default(), QUIET), Err(Error::UnknownIdentity(_))));
        assert!(verify("multisum", 3, &Params::default(), QUIET).is_err());
    }

    #[test]
    fn cj1_j0_small() {
        let r = conjecture_scan("cj1", &Params::with_j(0), 8, QUIET).unwrap();
        assert_eq!(r.status, Status::HoldsToBound);
    }

    #[test]
    fn admissible_js() {
        assert_eq!(admissible_j(10), [0, 1, -1, 2, -2]);
        assert_eq!(admissible_j(0), [0]);
    }

    #[test]
    fn equidistribution_reflexive() {
        let f = StatSpec::all(h11());
        assert_eq!(equidistribution_check(&f, &f, 6, None, QUIET).unwrap().status, Status::Verified);
    }

    #[test]
    fn registry_ids_unique() {
        let mut ids: Vec<_> = list_identities().iter().map(|i| i.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), list_identities().len());
    }
}
