//! Numerical semigroups: construction from generators, Apéry sets, the
//! Frobenius number, membership, and ordered element enumeration.
//!
//! A set of positive integers with gcd 1 generates a numerical semigroup
//! under addition. The whole semigroup is summarized by one table: the
//! Apéry set with respect to the multiplicity m, i.e. for every residue
//! class r mod m the least element of the semigroup congruent to r. From
//! that table membership is a single comparison (`x ≥ minima[x mod m]`)
//! and the Frobenius number is `max(minima) − m`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::Result;

/// Largest admissible generator. Keeps every intermediate product of the
/// crate (Apéry entries, arithmetic-sequence formulas, interval bounds)
/// below 2^62.
pub const MAX_GENERATOR: i64 = 1 << 30;

/// Largest admissible Apéry modulus; bounds the table allocation.
pub const MAX_MODULUS: i64 = 1 << 22;

/// Largest admissible enumeration bound for [`Semigroup::elements_up_to`].
pub const MAX_ENUMERATION_BOUND: i64 = 1 << 24;

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A strictly increasing set of positive generators with gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorSet {
    elements: Vec<i64>,
}

impl GeneratorSet {
    /// Validates and wraps a generator list.
    ///
    /// Rejects empty input, non-positive or non-increasing entries,
    /// entries above [`MAX_GENERATOR`], and sets with gcd ≠ 1.
    pub fn new(elements: Vec<i64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut g = 0;
        let mut prev = 0;
        for &x in &elements {
            if x < 1 {
                return Err(Error::NonPositive { value: x });
            }
            if x > MAX_GENERATOR {
                return Err(Error::TooLarge {
                    what: "generator",
                    value: x,
                    max: MAX_GENERATOR,
                });
            }
            if x <= prev {
                return Err(Error::NotIncreasing { prev, next: x });
            }
            prev = x;
            g = gcd(g, x);
        }
        if g != 1 {
            return Err(Error::GcdNotOne { gcd: g });
        }
        Ok(GeneratorSet { elements })
    }

    /// Convenience constructor from a slice.
    pub fn from_slice(elements: &[i64]) -> Result<Self> {
        Self::new(elements.to_vec())
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The smallest generator, which is the multiplicity of the generated
    /// semigroup.
    pub fn smallest(&self) -> i64 {
        self.elements[0]
    }

    pub fn largest(&self) -> i64 {
        *self.elements.last().expect("non-empty by construction")
    }
}

/// The Apéry set of a semigroup with respect to a positive element n,
/// stored as the table of residue minima: `minima[r]` is the least
/// element of the semigroup congruent to r mod n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyTable {
    modulus: i64,
    minima: Vec<i64>,
}

impl AperyTable {
    /// Shortest-path relaxation over the residue classes mod `modulus`:
    /// starting from 0, repeatedly add each generator to the current
    /// minima and keep the smaller representative per residue, until a
    /// fixed point. Exact, and converges in at most `modulus` passes.
    fn relax(modulus: i64, generators: &[i64]) -> Self {
        let m = modulus as usize;
        let mut minima = vec![i64::MAX; m];
        minima[0] = 0;
        loop {
            let mut changed = false;
            for r in 0..m {
                let base = minima[r];
                if base == i64::MAX {
                    continue;
                }
                for &g in generators {
                    let candidate = base + g;
                    let target = (candidate % modulus) as usize;
                    if candidate < minima[target] {
                        minima[target] = candidate;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        debug_assert!(
            minima.iter().all(|&v| v != i64::MAX),
            "gcd 1 must make every residue reachable"
        );
        AperyTable { modulus, minima }
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// Residue minima, indexed by residue class; `minima()[0] == 0`.
    pub fn minima(&self) -> &[i64] {
        &self.minima
    }

    /// The Apéry set as a sorted list of values.
    pub fn values(&self) -> Vec<i64> {
        let mut v = self.minima.clone();
        v.sort_unstable();
        v
    }

    pub fn max(&self) -> i64 {
        *self.minima.iter().max().expect("modulus ≥ 1")
    }
}

/// A numerical semigroup, built once from its generators and immutable
/// afterwards. Membership, the Frobenius number, and enumeration are all
/// answered from the stored Apéry table with respect to the multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    generators: GeneratorSet,
    multiplicity: i64,
    apery: AperyTable,
    frobenius: i64,
}

impl Semigroup {
    pub fn from_generators(generators: GeneratorSet) -> Result<Self> {
        let multiplicity = generators.smallest();
        if multiplicity > MAX_MODULUS {
            return Err(Error::TooLarge {
                what: "multiplicity",
                value: multiplicity,
                max: MAX_MODULUS,
            });
        }
        let apery = AperyTable::relax(multiplicity, generators.as_slice());
        let frobenius = apery.max() - multiplicity;
        Ok(Semigroup {
            generators,
            multiplicity,
            apery,
            frobenius,
        })
    }

    /// Convenience constructor: validate a slice of generators and build.
    pub fn from_slice(generators: &[i64]) -> Result<Self> {
        Self::from_generators(GeneratorSet::from_slice(generators)?)
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    /// The smallest positive element.
    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    /// The Apéry table with respect to the multiplicity.
    pub fn apery(&self) -> &AperyTable {
        &self.apery
    }

    /// The largest integer not in the semigroup; −1 for ℕ itself.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// The Apéry table with respect to an arbitrary positive element `n`.
    pub fn apery_set(&self, n: i64) -> Result<AperyTable> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::NotAnElement { value: n });
        }
        if n > MAX_MODULUS {
            return Err(Error::TooLarge {
                what: "apery modulus",
                value: n,
                max: MAX_MODULUS,
            });
        }
        Ok(AperyTable::relax(n, self.generators.as_slice()))
    }

    /// Membership test: negative integers are never elements, 0 always is.
    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let r = (x % self.multiplicity) as usize;
        x >= self.apery.minima[r]
    }

    /// All elements in `[0, bound]`, strictly increasing. Generated from
    /// the Apéry residue table rather than by re-sieving.
    pub fn elements_up_to(&self, bound: i64) -> Result<Vec<i64>> {
        if bound > MAX_ENUMERATION_BOUND {
            return Err(Error::TooLarge {
                what: "enumeration bound",
                value: bound,
                max: MAX_ENUMERATION_BOUND,
            });
        }
        let mut out = Vec::new();
        for x in 0..=bound {
            if x >= self.apery.minima[(x % self.multiplicity) as usize] {
                out.push(x);
            }
        }
        Ok(out)
    }

    /// How many elements lie in `[0, bound]` (including 0). O(multiplicity).
    pub fn count_up_to(&self, bound: i64) -> i64 {
        if bound < 0 {
            return 0;
        }
        self.apery
            .minima
            .iter()
            .filter(|&&least| least <= bound)
            .map(|&least| (bound - least) / self.multiplicity + 1)
            .sum()
    }

    /// The ordered stream g₁ < g₂ < … of positive elements.
    pub fn positive_elements(&self) -> Elements<'_> {
        Elements {
            semigroup: self,
            cursor: 0,
        }
    }

    /// The i-th positive element (1-based): `positive_element(1)` is the
    /// multiplicity.
    pub fn positive_element(&self, index: usize) -> i64 {
        assert!(index >= 1, "element indices are 1-based");
        let below_frobenius = if self.frobenius >= 0 {
            (self.count_up_to(self.frobenius) - 1) as usize
        } else {
            0
        };
        if index > below_frobenius {
            // Everything past the Frobenius number is consecutive.
            self.frobenius + (index - below_frobenius) as i64
        } else {
            self.positive_elements()
                .nth(index - 1)
                .expect("stream is infinite")
        }
    }
}

/// Infinite iterator over the positive elements of a semigroup in
/// increasing order.
#[derive(Debug, Clone)]
pub struct Elements<'a> {
    semigroup: &'a Semigroup,
    cursor: i64,
}

impl Iterator for Elements<'_> {
    type Item = i64;

    fn next(&mut self) -> Option<i64> {
        loop {
            self.cursor += 1;
            if self.semigroup.contains(self.cursor) {
                return Some(self.cursor);
            }
        }
    }
}

fn check_positive(value: i64, max: i64, what: &'static str) -> Result<()> {
    if value < 1 {
        return Err(Error::NonPositive { value });
    }
    if value > max {
        return Err(Error::TooLarge { what, value, max });
    }
    Ok(())
}

/// Membership in the semigroup generated by the arithmetic sequence
/// `a0, a0+e, …, a0+k·e`, decided through the representation
/// `x = a0·q + e·r` with `0 ≤ r ≤ k·q`.
pub fn arith_seq_contains(a0: i64, e: i64, k: i64, x: i64) -> Result<bool> {
    check_positive(a0, MAX_GENERATOR, "a0")?;
    check_positive(e, MAX_GENERATOR, "step")?;
    check_positive(k, MAX_GENERATOR, "length")?;
    if x < 0 {
        return Ok(false);
    }
    for q in 0..=x / a0 {
        let rest = x - a0 * q;
        if rest % e == 0 && rest / e <= k * q {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Closed-form Frobenius number of `⟨a0, a0+e, …, a0+k·e⟩`:
/// `a0·⌊(a0−2)/k⌋ + e·(a0−1)`. Requires gcd(a0, e) = 1.
pub fn arith_seq_frobenius(a0: i64, e: i64, k: i64) -> Result<i64> {
    check_positive(a0, MAX_GENERATOR, "a0")?;
    check_positive(e, MAX_GENERATOR, "step")?;
    check_positive(k, MAX_GENERATOR, "length")?;
    let g = gcd(a0, e);
    if g != 1 {
        return Err(Error::GcdNotOne { gcd: g });
    }
    // div_euclid: for a0 = 1 the numerator is negative and the floor
    // must round down so that F(ℕ) = −1.
    Ok(a0 * (a0 - 2).div_euclid(k) + e * (a0 - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> Semigroup {
        Semigroup::from_slice(gens).unwrap()
    }

    #[test]
    fn generator_set_rejects_bad_input() {
        assert_eq!(GeneratorSet::new(vec![]), Err(Error::EmptyGenerators));
        assert_eq!(
            GeneratorSet::from_slice(&[0, 3]),
            Err(Error::NonPositive { value: 0 })
        );
        assert_eq!(
            GeneratorSet::from_slice(&[3, 3]),
            Err(Error::NotIncreasing { prev: 3, next: 3 })
        );
        assert_eq!(
            GeneratorSet::from_slice(&[4, 3]),
            Err(Error::NotIncreasing { prev: 4, next: 3 })
        );
        assert_eq!(
            GeneratorSet::from_slice(&[2, 4]),
            Err(Error::GcdNotOne { gcd: 2 })
        );
        assert_eq!(GeneratorSet::from_slice(&[6, 10, 15]).map(|_| ()), Ok(()));
    }

    #[test]
    fn natural_numbers() {
        let g = sg(&[1, 2]);
        assert_eq!(g.multiplicity(), 1);
        assert_eq!(g.frobenius(), -1);
        assert_eq!(g.apery().minima(), &[0]);
        assert_eq!(g.elements_up_to(4).unwrap(), vec![0, 1, 2, 3, 4]);
        // The singleton generator 1 works too: Ap(ℕ, 1) = {0}.
        let n = sg(&[1]);
        assert_eq!(n.apery_set(1).unwrap().values(), vec![0]);
        assert_eq!(n.frobenius(), -1);
    }

    #[test]
    fn two_three() {
        let g = sg(&[2, 3]);
        assert_eq!(g.frobenius(), 1);
        assert_eq!(g.elements_up_to(5).unwrap(), vec![0, 2, 3, 4, 5]);
    }

    #[test]
    fn three_four() {
        let g = sg(&[3, 4]);
        assert_eq!(g.frobenius(), 5);
        assert_eq!(g.apery().values(), vec![0, 4, 8]);
        assert_eq!(g.elements_up_to(8).unwrap(), vec![0, 3, 4, 6, 7, 8]);
    }

    #[test]
    fn apery_five_seven_nine() {
        let g = sg(&[5, 7, 9]);
        assert_eq!(g.apery().values(), vec![0, 7, 9, 16, 18]);
        assert_eq!(g.frobenius(), 13);
        assert!(!g.contains(13));
        assert!(g.contains(14));
        // Apéry with respect to a non-multiplicity element.
        let ap7 = g.apery_set(7).unwrap();
        assert_eq!(ap7.modulus(), 7);
        assert_eq!(ap7.max() - 7, g.frobenius());
        assert_eq!(g.apery_set(6), Err(Error::NotAnElement { value: 6 }));
        assert_eq!(g.apery_set(0), Err(Error::NotAnElement { value: 0 }));
    }

    #[test]
    fn frobenius_five_six_seven() {
        assert_eq!(sg(&[5, 6, 7]).frobenius(), 9);
        assert_eq!(arith_seq_frobenius(5, 1, 2).unwrap(), 9);
    }

    #[test]
    fn membership_basics() {
        let g = sg(&[9, 14, 15, 16]);
        assert!(g.contains(0));
        assert!(g.contains(23));
        assert!(!g.contains(-3));
        assert_eq!(
            g.elements_up_to(36).unwrap(),
            vec![0, 9, 14, 15, 16, 18, 23, 24, 25, 27, 28, 29, 30, 31, 32, 33, 34, 36]
        );
    }

    #[test]
    fn element_stream_and_indexing() {
        let g = sg(&[9, 14, 15, 16]);
        let first: Vec<i64> = g.positive_elements().take(5).collect();
        assert_eq!(first, vec![9, 14, 15, 16, 18]);
        assert_eq!(g.positive_element(1), 9);
        assert_eq!(g.positive_element(5), 18);
        assert_eq!(g.positive_element(17), 36);
        assert_eq!(g.positive_element(100), 36 + 83);
    }

    #[test]
    fn count_up_to_matches_enumeration() {
        for gens in [&[3i64, 4][..], &[5, 7, 9], &[9, 14, 15, 16], &[1, 2]] {
            let g = sg(gens);
            for bound in [-1, 0, 5, 13, 36, 100] {
                let listed = if bound < 0 {
                    0
                } else {
                    g.elements_up_to(bound).unwrap().len() as i64
                };
                assert_eq!(g.count_up_to(bound), listed, "{gens:?} up to {bound}");
            }
        }
    }

    #[test]
    fn arith_seq_membership() {
        assert!(!arith_seq_contains(5, 2, 2, 13).unwrap());
        assert!(arith_seq_contains(5, 2, 2, 14).unwrap());
        assert!(arith_seq_contains(7, 3, 4, 0).unwrap());
        assert!(!arith_seq_contains(7, 3, 4, -2).unwrap());
        assert_eq!(
            arith_seq_contains(0, 2, 2, 5),
            Err(Error::NonPositive { value: 0 })
        );
        assert_eq!(
            arith_seq_contains(5, 0, 2, 5),
            Err(Error::NonPositive { value: 0 })
        );
        assert_eq!(
            arith_seq_contains(5, 2, 0, 5),
            Err(Error::NonPositive { value: 0 })
        );
    }

    #[test]
    fn arith_seq_frobenius_values() {
        assert_eq!(arith_seq_frobenius(2, 1, 1).unwrap(), 1);
        assert_eq!(arith_seq_frobenius(5, 2, 2).unwrap(), 13);
        assert_eq!(arith_seq_frobenius(1, 1, 1).unwrap(), -1);
        assert_eq!(
            arith_seq_frobenius(4, 2, 3),
            Err(Error::GcdNotOne { gcd: 2 })
        );
    }

    #[test]
    fn rejects_oversized_inputs() {
        assert!(matches!(
            GeneratorSet::from_slice(&[MAX_GENERATOR + 1]),
            Err(Error::TooLarge { .. })
        ));
        let g = sg(&[3, 4]);
        assert!(matches!(
            g.elements_up_to(MAX_ENUMERATION_BOUND + 1),
            Err(Error::TooLarge { .. })
        ));
    }
}
