//! Binary-tree view of a Galileo sequence.
//!
//! Node `m >= 2` has children `2m - 1` (left) and `2m` (right); node 1 sits
//! outside the tree and is tied to the root only through `a_2 = (k - 1) a_1`.

use std::collections::BTreeMap;

use num_traits::{One, Signed};

use crate::generators::validate_pair;
use crate::{check_local, Error, Rational, Result, SequencePrefix};

/// Splitting factors `(b_n, c_n)` for nodes `n >= 2`, each pair summing to `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingFactors {
    k: Rational,
    pairs: BTreeMap<u64, (Rational, Rational)>,
}

impl SplittingFactors {
    pub fn new(k: Rational, pairs: BTreeMap<u64, (Rational, Rational)>) -> Result<Self> {
        if k <= Rational::one() {
            return Err(Error::RatioNotAboveOne { k: k.to_string() });
        }
        for (&n, (b, c)) in &pairs {
            if n < 2 {
                return Err(Error::NodeOutsideTree { n });
            }
            validate_pair(n, b, c, &k)?;
        }
        Ok(Self { k, pairs })
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }

    pub fn get(&self, n: u64) -> Option<&(Rational, Rational)> {
        self.pairs.get(&n)
    }

    pub fn pairs(&self) -> &BTreeMap<u64, (Rational, Rational)> {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Normalized factors at node 1, `(a_1 / a_1, a_2 / a_1) = (1, k - 1)`.
/// Reported for display only; [`SplittingFactors`] starts at node 2.
pub fn root_factors(prefix: &SequencePrefix) -> Option<(Rational, Rational)> {
    (prefix.len() >= 2).then(|| (Rational::one(), prefix.term(2) / prefix.term(1)))
}

/// Recovers `b_n = a_{2n-1} / a_n` and `c_n = a_{2n} / a_n` for every `n >= 2`
/// with `2n <= N`, after checking the root relation and the local identity.
pub fn extract_factors(prefix: &SequencePrefix) -> Result<SplittingFactors> {
    let k = prefix.k();
    if prefix.len() >= 2 && prefix.term(2) != &((k - Rational::one()) * prefix.term(1)) {
        return Err(Error::RootRelationViolated);
    }
    if let Some(f) = check_local(prefix).first_failure() {
        return Err(Error::LocalIdentityViolated { index: f.index });
    }
    let pairs = (2..=prefix.verifiable_up_to())
        .map(|n| {
            let parent = prefix.term(n);
            (n as u64, (prefix.term(2 * n - 1) / parent, prefix.term(2 * n) / parent))
        })
        .collect();
    Ok(SplittingFactors { k: k.clone(), pairs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    /// `m -> 2m - 1`, weight `b_m`
    Left,
    /// `m -> 2m`, weight `c_m`
    Right,
}

/// The unique path `2 = m_0 -> m_1 -> ... -> m_r = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePath {
    end: u64,
    moves: Vec<Move>,
}

impl TreePath {
    pub const START: u64 = 2;

    pub fn end(&self) -> u64 {
        self.end
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Nodes `m_0, ..., m_r` visited when replaying the moves from 2.
    pub fn nodes(&self) -> Vec<u64> {
        let mut nodes = Vec::with_capacity(self.moves.len() + 1);
        let mut m = Self::START;
        nodes.push(m);
        for mv in &self.moves {
            m = child(m, *mv);
            nodes.push(m);
        }
        nodes
    }
}

pub fn child(m: u64, mv: Move) -> u64 {
    match mv {
        Move::Left => 2 * m - 1,
        Move::Right => 2 * m,
    }
}

/// Parent of `m >= 3` in the tree rooted at 2.
///
/// Children of `p` are `2p - 1` and `2p`, so `m` odd gives `p = (m + 1) / 2`
/// and `m` even gives `p = m / 2 = (m + 1) / 2` under floor division.
pub fn parent(m: u64) -> u64 {
    m.div_ceil(2)
}

pub fn path_to(n: u64) -> Result<TreePath> {
    if n < 2 {
        return Err(Error::NodeOutsideTree { n });
    }
    let mut moves = Vec::new();
    let mut m = n;
    while m > TreePath::START {
        moves.push(if m % 2 == 1 { Move::Left } else { Move::Right });
        m = parent(m);
    }
    moves.reverse();
    Ok(TreePath { end: n, moves })
}

/// `a_n = (k - 1) a_1 * prod(omega_j)` along the path from 2 to `n`, with
/// `omega_j = b` on left steps and `c` on right steps.
pub fn product_form(n: u64, a1: &Rational, k: &Rational, factors: &SplittingFactors) -> Result<Rational> {
    if !a1.is_positive() {
        return Err(Error::NonPositiveTerm { index: 1 });
    }
    let path = path_to(n)?;
    let root = (k - Rational::one()) * a1;
    // multiply numerators and denominators apart and reduce once at the end
    let (mut num, mut den) = (root.numer().clone(), root.denom().clone());
    let mut m = TreePath::START;
    for &mv in path.moves() {
        let (b, c) = factors.get(m).ok_or(Error::MissingFactor { node: m })?;
        let w = match mv {
            Move::Left => b,
            Move::Right => c,
        };
        num *= w.numer();
        den *= w.denom();
        m = child(m, mv);
    }
    Ok(Rational::new(num, den))
}
