//! Exhaustive enumeration of monotone integer Galileo prefixes.
//!
//! Terms are assigned in index order. `a_2 = (k - 1) a_1` is forced; at each
//! odd index `i = 2n - 1` the free choice `x = a_i` ranges over
//! `a_{i-1} <= x <= floor(k a_n / 2)` and the sibling `a_{i+1} = k a_n - x`
//! follows from the local identity. The upper end keeps `a_{i+1} >= a_i`.
//! A length-`L` prefix counts as a survivor when it is non-decreasing,
//! satisfies the local identity on every complete pair and, for odd `L`,
//! leaves room for the sibling (`2 a_L <= k a_{(L+1)/2}`).

use rayon::prelude::*;

use crate::{Error, Result, SequencePrefix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub k: u64,
    pub a1: u64,
    pub length: usize,
    /// Any term above this value cuts the branch and marks the result incomplete.
    pub value_cap: Option<u64>,
    /// Survivors stored in the outcome; the count is always exact.
    pub max_survivors: usize,
    /// Cap on visited nodes in each top-level branch (the choices of `a_3`);
    /// exceeding it marks the result incomplete. Per-branch budgets keep a cut
    /// search deterministic under parallel execution.
    pub node_budget: Option<u64>,
    /// Prune a completed pair whose right child already blocks the next choice.
    pub lookahead: bool,
    /// Split the top-level branches across the rayon pool.
    pub parallel: bool,
}

impl SearchSpec {
    pub fn new(k: u64, a1: u64, length: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
        }
        if a1 == 0 {
            return Err(Error::InvalidParameter("a1 must be positive".into()));
        }
        if length < 2 {
            return Err(Error::InvalidParameter("length must be at least 2".into()));
        }
        Ok(Self {
            k,
            a1,
            length,
            value_cap: None,
            max_survivors: 1000,
            node_budget: Some(50_000_000),
            lookahead: true,
            parallel: true,
        })
    }

    pub fn with_value_cap(mut self, cap: Option<u64>) -> Self {
        self.value_cap = cap;
        self
    }

    pub fn with_max_survivors(mut self, m: usize) -> Self {
        self.max_survivors = m;
        self
    }

    pub fn with_node_budget(mut self, budget: Option<u64>) -> Self {
        self.node_budget = budget;
        self
    }

    pub fn with_lookahead(mut self, on: bool) -> Self {
        self.lookahead = on;
        self
    }

    pub fn with_parallel(mut self, on: bool) -> Self {
        self.parallel = on;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// `counts[L - 1]` is the number of survivors of length `L`.
    pub counts: Vec<u64>,
    /// Survivors of full length in lexicographic order, up to `max_survivors`.
    pub survivors: Vec<Vec<u64>>,
    /// Smallest length with no survivors. `None` when survivors reach the
    /// target length, or when the search was cut and zeros are unproven.
    pub extinction_depth: Option<usize>,
    /// False when a value cap, overflow or node budget cut the search.
    pub complete: bool,
    /// Prefixes expanded into their next pair, summed over branches.
    pub nodes: u64,
}

impl SearchOutcome {
    pub fn survivor_count(&self) -> u64 {
        *self.counts.last().expect("length >= 2")
    }

    /// Summary block: one `key: value` per line.
    pub fn summary(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        let _ = writeln!(out, "survivors: {}", self.survivor_count());
        let depth = match self.extinction_depth {
            Some(d) => d.to_string(),
            None if self.complete => "none".to_string(),
            None => "unknown".to_string(),
        };
        let _ = writeln!(out, "extinction_depth: {depth}");
        let _ = writeln!(out, "complete: {}", self.complete);
        let counts: Vec<String> = self.counts.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "counts_by_length: {}", counts.join(","));
        out
    }
}

/// Converts a survivor into a prefix for independent verification.
pub fn survivor_prefix(terms: &[u64], k: u64) -> Result<SequencePrefix> {
    SequencePrefix::new(
        terms.iter().map(|&t| crate::Rational::from_integer(t.into())).collect(),
        crate::Rational::from_integer(k.into()),
    )
}

struct Walker<'a> {
    spec: &'a SearchSpec,
    nodes: u64,
    terms: Vec<u64>,
    counts: Vec<u64>,
    survivors: Vec<Vec<u64>>,
    cut: bool,
}

impl Walker<'_> {
    fn record_survivor(&mut self) {
        if self.survivors.len() < self.spec.max_survivors {
            self.survivors.push(self.terms.clone());
        }
    }

    fn over_budget(&mut self) -> bool {
        self.nodes += 1;
        self.spec.node_budget.is_some_and(|b| self.nodes > b)
    }

    /// Feasible range for the next odd index, or `None` on overflow.
    fn choices(&self) -> Option<(u64, u64, u64)> {
        let i = self.terms.len() + 1;
        let parent = self.terms[i.div_ceil(2) - 1];
        let ka = self.spec.k.checked_mul(parent)?;
        Some((self.terms[i - 2], ka / 2, ka))
    }

    fn within_cap(&self, v: u64) -> bool {
        self.spec.value_cap.is_none_or(|cap| v <= cap)
    }

    /// Places `x` at the next odd index and explores below it.
    fn place(&mut self, x: u64, ka: u64) {
        let n = self.spec.length;
        let i = self.terms.len() + 1;
        let y = ka - x;
        if !self.within_cap(x) || (i < n && !self.within_cap(y)) {
            self.cut = true;
            return;
        }
        self.terms.push(x);
        self.counts[i - 1] += 1;
        if i == n {
            self.record_survivor();
            self.terms.pop();
            return;
        }
        self.terms.push(y);
        self.counts[i] += 1;
        if i + 1 == n {
            self.record_survivor();
        } else if !(self.spec.lookahead && self.next_blocked(y)) {
            self.descend();
        }
        self.terms.truncate(i - 1);
    }

    /// The next odd index needs `y <= floor(k a_{n+1} / 2)`.
    fn next_blocked(&self, y: u64) -> bool {
        let next_parent = self.terms[(self.terms.len() + 2) / 2 - 1];
        match self.spec.k.checked_mul(next_parent) {
            Some(ka) => y > ka / 2,
            None => false,
        }
    }

    fn descend(&mut self) {
        if self.over_budget() {
            self.cut = true;
            return;
        }
        let Some((lo, hi, ka)) = self.choices() else {
            self.cut = true;
            return;
        };
        for x in lo..=hi {
            self.place(x, ka);
            if self.cut && self.spec.node_budget.is_some_and(|b| self.nodes > b) {
                return;
            }
        }
    }
}

/// Enumerates every monotone integer prefix of the requested length that
/// satisfies the local identity, with per-length survivor counts.
///
/// The outcome does not depend on `parallel` or `lookahead`.
pub fn enumerate_monotone(spec: &SearchSpec) -> Result<SearchOutcome> {
    let n = spec.length;
    let a2 = (spec.k - 1)
        .checked_mul(spec.a1)
        .ok_or_else(|| Error::InvalidParameter("a_2 overflows u64".into()))?;
    let mut counts = vec![0u64; n];
    counts[0] = 1;
    counts[1] = 1;
    let root = vec![spec.a1, a2];
    let mut survivors = Vec::new();
    let mut cut = false;
    let mut nodes = 0;

    if n == 2 {
        survivors.push(root);
    } else {
        let walker = |terms: Vec<u64>| Walker {
            spec,
            nodes: 0,
            terms,
            counts: vec![0; n],
            survivors: Vec::new(),
            cut: false,
        };
        let probe = walker(root.clone());
        let (lo, hi, ka) = probe
            .choices()
            .ok_or_else(|| Error::InvalidParameter("k a_2 overflows u64".into()))?;
        let run = |x: u64| {
            let mut w = walker(root.clone());
            w.place(x, ka);
            (w.counts, w.survivors, w.cut, w.nodes)
        };
        let branches: Vec<_> = if spec.parallel {
            (lo..=hi).into_par_iter().map(run).collect()
        } else {
            (lo..=hi).map(run).collect()
        };
        for (branch_counts, branch_survivors, branch_cut, branch_nodes) in branches {
            nodes += branch_nodes;
            for (total, c) in counts.iter_mut().zip(branch_counts).skip(2) {
                *total += c;
            }
            let room = spec.max_survivors.saturating_sub(survivors.len());
            survivors.extend(branch_survivors.into_iter().take(room));
            cut |= branch_cut;
        }
    }
    survivors.truncate(spec.max_survivors);
    let complete = !cut;
    // counts of a cut search are lower bounds, so a zero proves nothing
    let extinction_depth = counts.iter().position(|&c| c == 0).map(|i| i + 1).filter(|_| complete);
    Ok(SearchOutcome {
        counts,
        survivors,
        extinction_depth,
        complete,
        nodes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtinctionRow {
    pub a1: u64,
    /// Smallest length with no survivors, `None` if survivors reach `max_length`.
    pub depth: Option<usize>,
    pub complete: bool,
}

/// Extinction depth for every seed `a1 = 1..=a1_max`, searching up to `max_length`.
pub fn extinction_depth(k: u64, a1_max: u64, max_length: usize) -> Result<Vec<ExtinctionRow>> {
    extinction_depth_with(k, a1_max, max_length, |spec| spec)
}

/// As [`extinction_depth`], with a hook to adjust each seed's [`SearchSpec`].
pub fn extinction_depth_with(
    k: u64,
    a1_max: u64,
    max_length: usize,
    adjust: impl Fn(SearchSpec) -> SearchSpec,
) -> Result<Vec<ExtinctionRow>> {
    if a1_max == 0 {
        return Err(Error::InvalidParameter("a1_max must be positive".into()));
    }
    (1..=a1_max)
        .map(|a1| {
            let spec = adjust(SearchSpec::new(k, a1, max_length)?.with_max_survivors(0));
            let out = enumerate_monotone(&spec)?;
            Ok(ExtinctionRow {
                a1,
                depth: out.extinction_depth,
                complete: out.complete,
            })
        })
        .collect()
}
