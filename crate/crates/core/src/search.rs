//! Pruned exhaustive enumeration of n-permutation semigroups, and the
//! conjecture-checking harness built on it.
//!
//! A candidate is an increasing n-tuple that could be the first block of
//! a semigroup's element sequence. The j-th smallest positive element of
//! any numerical semigroup is at most j times the multiplicity (the
//! first j multiples of the multiplicity are distinct elements), so the
//! candidate space for a fixed g₁ is the tuples with
//! `g₁ < g₂ ≤ 2g₁, …, g_{j−1} < g_j ≤ j·g₁`. A candidate is accepted
//! exactly when the semigroup it generates has the tuple as its n
//! smallest positive elements and every block up to the verification
//! horizon is a permutation.
//!
//! Results are complete per multiplicity: a query reports the semigroups
//! with `min_g1 ≤ g₁ ≤ ⌊max_gk / n⌋`, the window in which the bound
//! `max_gk` on the first block is exhaustive (`g_n ≤ n·g₁ ≤ max_gk`).
//!
//! Work shards by g₁; shards are independent, and the deterministic
//! merge makes the output identical for any worker count.

use alloc::vec::Vec;

use crate::error::Error;
use crate::families::{match_family, FamilyId};
use crate::permblock::{scan_blocks, verification_horizon, MAX_BLOCK_SIZE};
use crate::semigroup::{gcd, GeneratorSet, Semigroup};
use crate::Result;

/// Largest supported search bound; enumeration beyond this is not
/// tractable anyway.
pub const MAX_SEARCH_BOUND: i64 = 1 << 20;

/// A request to enumerate all n-permutation semigroups whose first block
/// fits the window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationQuery {
    /// Block size n ≥ 1.
    pub block_size: i64,
    /// Smallest admissible multiplicity.
    pub min_g1: i64,
    /// Bound on the largest of the first n elements. Only multiplicities
    /// with `n·g₁ ≤ max_gk` are reported, so the bound is exhaustive.
    pub max_gk: i64,
}

impl EnumerationQuery {
    pub fn new(block_size: i64, min_g1: i64, max_gk: i64) -> Result<Self> {
        if block_size < 1 {
            return Err(Error::ZeroBlockSize);
        }
        if block_size > MAX_BLOCK_SIZE {
            return Err(Error::TooLarge {
                what: "block size",
                value: block_size,
                max: MAX_BLOCK_SIZE,
            });
        }
        if min_g1 < 1 {
            return Err(Error::NonPositive { value: min_g1 });
        }
        if min_g1 > max_gk {
            return Err(Error::InvertedRange {
                lo: min_g1,
                hi: max_gk,
            });
        }
        if max_gk > MAX_SEARCH_BOUND {
            return Err(Error::TooLarge {
                what: "search bound",
                value: max_gk,
                max: MAX_SEARCH_BOUND,
            });
        }
        Ok(EnumerationQuery {
            block_size,
            min_g1,
            max_gk,
        })
    }

    /// The multiplicities this query covers exhaustively.
    pub fn g1_values(&self) -> impl Iterator<Item = i64> {
        self.min_g1..=self.max_gk / self.block_size
    }
}

/// Why a candidate tuple was discarded before the full check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PruneReason {
    /// Some g_j exceeds j·g₁, so the tuple cannot be a first block.
    ExceedsMultipleBound,
    /// Two entries share a residue mod n, so block 0 is no permutation.
    RepeatedResidue,
    /// gcd > 1: the tuple generates no numerical semigroup.
    CommonDivisor,
}

/// The pruning filter, exposed so that tests can audit it: a pruned
/// tuple must never pass [`is_accepted`]. The tuple must be non-empty.
pub fn prune(tuple: &[i64], block_size: i64) -> Option<PruneReason> {
    let g1 = tuple[0];
    for (j, &g) in tuple.iter().enumerate() {
        if g > (j as i64 + 1) * g1 {
            return Some(PruneReason::ExceedsMultipleBound);
        }
    }
    let mut seen = alloc::vec![false; block_size as usize];
    for &g in tuple {
        let r = (g % block_size) as usize;
        if seen[r] {
            return Some(PruneReason::RepeatedResidue);
        }
        seen[r] = true;
    }
    if tuple.iter().fold(0, |acc, &g| gcd(acc, g)) != 1 {
        return Some(PruneReason::CommonDivisor);
    }
    None
}

/// The unpruned acceptance check: the tuple is the first block of the
/// semigroup it generates, and every block up to the verification
/// horizon is a permutation. Tuples that generate no numerical semigroup
/// are simply not accepted.
pub fn is_accepted(tuple: &[i64], block_size: i64) -> Result<bool> {
    if block_size < 1 {
        return Err(Error::ZeroBlockSize);
    }
    if tuple.len() != block_size as usize {
        return Err(Error::BlockLength {
            expected: block_size as usize,
            actual: tuple.len(),
        });
    }
    let Ok(gens) = GeneratorSet::from_slice(tuple) else {
        return Ok(false);
    };
    let semigroup = Semigroup::from_generators(gens)?;
    let first_block: Vec<i64> = semigroup.positive_elements().take(tuple.len()).collect();
    if first_block != tuple {
        return Ok(false);
    }
    let horizon = verification_horizon(&semigroup, block_size)?;
    let (_, failure) = scan_blocks(&semigroup, block_size as usize, horizon);
    Ok(failure.is_none())
}

/// Output of one g₁ shard.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShardOutput {
    pub g1: i64,
    pub found: Vec<GeneratorSet>,
    pub candidates_examined: u64,
}

/// Enumeration output: accepted generator sets in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub query: EnumerationQuery,
    pub found: Vec<GeneratorSet>,
    pub candidates_examined: u64,
}

/// Runs the query for a single multiplicity. Candidates are generated in
/// lexicographic order within the prune-(a) bounds, then filtered.
pub fn enumerate_g1(query: &EnumerationQuery, g1: i64) -> Result<ShardOutput> {
    let n = query.block_size as usize;
    let mut tuple = Vec::with_capacity(n);
    tuple.push(g1);
    let mut shard = ShardOutput {
        g1,
        found: Vec::new(),
        candidates_examined: 0,
    };
    extend(query, &mut tuple, &mut shard)?;
    Ok(shard)
}

fn extend(query: &EnumerationQuery, tuple: &mut Vec<i64>, shard: &mut ShardOutput) -> Result<()> {
    let n = query.block_size as usize;
    if tuple.len() == n {
        shard.candidates_examined += 1;
        if prune(tuple, query.block_size).is_none() && is_accepted(tuple, query.block_size)? {
            shard.found.push(GeneratorSet::from_slice(tuple)?);
        }
        return Ok(());
    }
    let j = tuple.len() as i64 + 1;
    for g in tuple[tuple.len() - 1] + 1..=j * shard.g1 {
        tuple.push(g);
        extend(query, tuple, shard)?;
        tuple.pop();
    }
    Ok(())
}

/// Deterministic merge of shard outputs: ordered by g₁, which is the
/// global lexicographic order, independently of how shards were run.
pub fn combine_shards(query: EnumerationQuery, mut shards: Vec<ShardOutput>) -> EnumerationResult {
    shards.sort_by_key(|s| s.g1);
    let mut found = Vec::new();
    let mut candidates_examined = 0;
    for shard in shards {
        found.extend(shard.found);
        candidates_examined += shard.candidates_examined;
    }
    EnumerationResult {
        query,
        found,
        candidates_examined,
    }
}

/// Single-threaded enumeration over the whole multiplicity window.
pub fn enumerate(query: &EnumerationQuery) -> Result<EnumerationResult> {
    let mut shards = Vec::new();
    for g1 in query.g1_values() {
        shards.push(enumerate_g1(query, g1)?);
    }
    Ok(combine_shards(*query, shards))
}

/// One classified semigroup in a conjecture report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureRow {
    pub generators: GeneratorSet,
    pub multiplicity: i64,
    /// Families whose recipe produces this generator set.
    pub matches: Vec<(FamilyId, i64)>,
}

impl ConjectureRow {
    /// Whether the semigroup belongs to at least one catalogued family.
    pub fn confirmed(&self) -> bool {
        !self.matches.is_empty()
    }
}

/// Classification of every 3-permutation semigroup in a multiplicity
/// range against the sixteen families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub m_min: i64,
    pub m_max: i64,
    /// True when the range dips below multiplicity 12, where the
    /// classification is not expected to be complete.
    pub below_conjecture_floor: bool,
    pub rows: Vec<ConjectureRow>,
    pub unmatched: Vec<GeneratorSet>,
    pub candidates_examined: u64,
}

/// Classifies an enumeration result; the query must have covered
/// multiplicities `m_min..=m_max` with block size 3.
pub fn classify_enumeration(
    m_min: i64,
    m_max: i64,
    result: &EnumerationResult,
) -> ConjectureReport {
    let mut rows = Vec::with_capacity(result.found.len());
    let mut unmatched = Vec::new();
    for gens in &result.found {
        let matches = match_family(gens).matches;
        if matches.is_empty() {
            unmatched.push(gens.clone());
        }
        rows.push(ConjectureRow {
            generators: gens.clone(),
            multiplicity: gens.smallest(),
            matches,
        });
    }
    ConjectureReport {
        m_min,
        m_max,
        below_conjecture_floor: m_min < 12,
        rows,
        unmatched,
        candidates_examined: result.candidates_examined,
    }
}

/// Enumerates all 3-permutation semigroups with multiplicity in
/// `[m_min, m_max]` and classifies each against the family catalogue.
pub fn check_conjecture(m_min: i64, m_max: i64) -> Result<ConjectureReport> {
    if m_min < 1 {
        return Err(Error::NonPositive { value: m_min });
    }
    if m_min > m_max {
        return Err(Error::InvertedRange {
            lo: m_min,
            hi: m_max,
        });
    }
    let query = EnumerationQuery::new(3, m_min, 3 * m_max)?;
    let result = enumerate(&query)?;
    Ok(classify_enumeration(m_min, m_max, &result))
}
