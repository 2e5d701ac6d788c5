//! The n-permutation property.
//!
//! Cut the increasing sequence g₁ < g₂ < … of positive elements of a
//! numerical semigroup into consecutive blocks of length n. The
//! semigroup is an n-permutation semigroup when its first n positive
//! elements generate it and every block, reduced mod n, contains each
//! residue class exactly once.
//!
//! Only finitely many blocks need checking: past the Frobenius number
//! the element sequence is just the consecutive integers, and any n
//! consecutive integers hit every residue class once. The cut-off is
//! made explicit by [`verification_horizon`].

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::semigroup::{GeneratorSet, Semigroup};
use crate::Result;

/// Largest supported block size.
pub const MAX_BLOCK_SIZE: i64 = 1 << 16;

/// One length-n block of consecutive elements, with its residues mod n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub index: usize,
    pub entries: Vec<i64>,
    pub residues: Vec<i64>,
}

/// Outcome of an n-permutation check, with enough context to explain a
/// failure: which condition broke, and on which block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationReport {
    /// Block size the check ran with.
    pub n: i64,
    /// True iff the semigroup is an n-permutation semigroup.
    pub verdict: bool,
    /// Whether the first n positive elements generate the semigroup.
    pub generated_by_prefix: bool,
    /// Number of blocks actually examined.
    pub blocks_checked: usize,
    /// The lowest-index block whose residues repeat, if any.
    pub first_failure: Option<Block>,
    /// 1-based index of the largest element examined (`blocks_checked · n`).
    pub horizon_index: usize,
}

fn check_block_size(n: i64) -> Result<usize> {
    if n < 1 {
        return Err(Error::ZeroBlockSize);
    }
    if n > MAX_BLOCK_SIZE {
        return Err(Error::TooLarge {
            what: "block size",
            value: n,
            max: MAX_BLOCK_SIZE,
        });
    }
    Ok(n as usize)
}

fn residues_distinct(entries: &[i64], n: i64) -> bool {
    let mut seen = vec![false; n as usize];
    for &x in entries {
        let r = x.rem_euclid(n) as usize;
        if seen[r] {
            return false;
        }
        seen[r] = true;
    }
    true
}

/// True iff the entries are pairwise distinct mod n. Errors when the
/// number of entries is not exactly n.
pub fn is_block_permutation(entries: &[i64], n: i64) -> Result<bool> {
    let len = check_block_size(n)?;
    if entries.len() != len {
        return Err(Error::BlockLength {
            expected: len,
            actual: entries.len(),
        });
    }
    Ok(residues_distinct(entries, n))
}

/// Number of blocks that must be explicitly checked: with N the count of
/// positive elements not exceeding the Frobenius number, this is
/// `⌊N/n⌋ + 1`. Every block of higher index lies entirely above the
/// Frobenius number, consists of n consecutive integers, and is a
/// permutation automatically.
pub fn verification_horizon(semigroup: &Semigroup, n: i64) -> Result<usize> {
    let n = check_block_size(n)? as i64;
    let frobenius = semigroup.frobenius();
    let below = if frobenius >= 0 {
        semigroup.count_up_to(frobenius) - 1 // count_up_to includes 0
    } else {
        0
    };
    Ok((below / n + 1) as usize)
}

/// Scans blocks 0..limit and returns the lowest-index one that is not a
/// permutation, along with how many blocks were examined.
pub(crate) fn scan_blocks(semigroup: &Semigroup, n: usize, limit: usize) -> (usize, Option<Block>) {
    let mut stream = semigroup.positive_elements();
    for index in 0..limit {
        let entries: Vec<i64> = stream.by_ref().take(n).collect();
        if !residues_distinct(&entries, n as i64) {
            let residues = entries.iter().map(|x| x % n as i64).collect();
            return (
                index + 1,
                Some(Block {
                    index,
                    entries,
                    residues,
                }),
            );
        }
    }
    (limit, None)
}

/// Decides whether the semigroup is an n-permutation semigroup.
///
/// The prefix condition G = ⟨g₁, …, g_n⟩ is tested by membership of
/// G's original generators in the prefix-generated semigroup, which is
/// sufficient because the prefix is a subset of G. The block condition
/// is tested up to [`verification_horizon`]; scanning stops at the first
/// failing block, which is materialized in the report.
pub fn is_n_permutation(semigroup: &Semigroup, n: i64) -> Result<PermutationReport> {
    let block = check_block_size(n)?;
    let horizon = verification_horizon(semigroup, n)?;

    let prefix: Vec<i64> = semigroup.positive_elements().take(block).collect();
    let generated_by_prefix = match GeneratorSet::new(prefix) {
        Ok(gens) => {
            let by_prefix = Semigroup::from_generators(gens)?;
            semigroup
                .generators()
                .as_slice()
                .iter()
                .all(|&g| by_prefix.contains(g))
        }
        Err(Error::GcdNotOne { .. }) => false,
        Err(other) => return Err(other),
    };

    let (blocks_checked, first_failure) = scan_blocks(semigroup, block, horizon);
    let verdict = generated_by_prefix && first_failure.is_none();
    Ok(PermutationReport {
        n,
        verdict,
        generated_by_prefix,
        blocks_checked,
        first_failure,
        horizon_index: blocks_checked * block,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> Semigroup {
        Semigroup::from_slice(gens).unwrap()
    }

    #[test]
    fn block_permutation_shift_patterns() {
        for x in [0i64, 1, 2, 7, 30, 1001] {
            assert!(is_block_permutation(&[x, x + 1, x + 2], 3).unwrap());
            assert!(is_block_permutation(&[x, x + 2, x + 4], 3).unwrap());
        }
        assert!(!is_block_permutation(&[4, 5, 7], 3).unwrap());
        assert_eq!(
            is_block_permutation(&[4, 5], 3),
            Err(Error::BlockLength {
                expected: 3,
                actual: 2
            })
        );
        assert_eq!(is_block_permutation(&[], 0), Err(Error::ZeroBlockSize));
    }

    #[test]
    fn horizon_values() {
        assert_eq!(verification_horizon(&sg(&[1, 2]), 2).unwrap(), 1);
        // F(⟨3,4⟩) = 5, two positive elements below it.
        assert_eq!(verification_horizon(&sg(&[3, 4]), 2).unwrap(), 2);
        // F(⟨9,14,15,16⟩) = 35 with 16 positive elements below it.
        let g = sg(&[9, 14, 15, 16]);
        assert_eq!(g.frobenius(), 35);
        assert_eq!(g.count_up_to(35) - 1, 16);
        assert_eq!(verification_horizon(&g, 4).unwrap(), 5);
    }

    #[test]
    fn example_9_14_15_16_is_4_permutation() {
        let g = sg(&[9, 14, 15, 16]);
        let report = is_n_permutation(&g, 4).unwrap();
        assert!(report.verdict);
        assert!(report.generated_by_prefix);
        assert_eq!(report.blocks_checked, 5);
        assert_eq!(report.horizon_index, 20);

        let mods: Vec<i64> = g.positive_elements().take(16).map(|x| x % 4).collect();
        assert_eq!(mods, vec![1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2, 3, 0, 1, 2]);
    }

    #[test]
    fn five_six_seven_is_3_permutation() {
        assert!(is_n_permutation(&sg(&[5, 6, 7]), 3).unwrap().verdict);
    }

    #[test]
    fn four_five_seven_fails_at_block_zero() {
        let report = is_n_permutation(&sg(&[4, 5, 7]), 3).unwrap();
        assert!(!report.verdict);
        assert!(report.generated_by_prefix);
        let failure = report.first_failure.unwrap();
        assert_eq!(failure.index, 0);
        assert_eq!(failure.entries, vec![4, 5, 7]);
        assert_eq!(failure.residues, vec![1, 2, 1]);
    }

    #[test]
    fn block_size_one_only_accepts_naturals() {
        assert!(is_n_permutation(&sg(&[1, 3]), 1).unwrap().verdict);
        let report = is_n_permutation(&sg(&[2, 3]), 1).unwrap();
        assert!(!report.verdict);
        assert!(!report.generated_by_prefix);
        assert!(report.first_failure.is_none());
    }

    #[test]
    fn prefix_must_generate() {
        // First three elements of ⟨6,10,15⟩ are 6, 10, 12 with gcd 2.
        let report = is_n_permutation(&sg(&[6, 10, 15]), 3).unwrap();
        assert!(!report.generated_by_prefix);
        assert!(!report.verdict);
    }

    #[test]
    fn over_checking_past_the_horizon_stays_clean() {
        for gens in [&[9i64, 14, 15, 16][..], &[5, 6, 7], &[3, 4, 5], &[2, 3]] {
            let g = sg(gens);
            let n = gens.len() as i64;
            let report = is_n_permutation(&g, n).unwrap();
            if report.verdict {
                let horizon = verification_horizon(&g, n).unwrap();
                let (checked, failure) = scan_blocks(&g, n as usize, horizon + 5);
                assert_eq!(checked, horizon + 5);
                assert!(failure.is_none(), "{gens:?}");
            }
        }
    }
}
