//! The catalogue of 3-permutation families H1..H16 and the generic
//! n-family.
//!
//! Each family is a closed-form recipe: for a parameter k it produces a
//! three-element generating set (H1..H16) or an n-element one (the
//! n-family, block size n ≥ 3), and the generated semigroup is an
//! n-permutation semigroup throughout the family's validity domain.
//!
//! Beyond the generator recipes, every family carries an explicit
//! [`StructuralDescription`]: the semigroup written out as singletons
//! and step-1/step-2 intervals plus one infinite tail. [`FamilyId::verify`]
//! checks that description against independent element enumeration, and
//! for the families that admit one, [`FamilyId::parametric_members`]
//! enumerates the semigroup straight from a parametric membership form.

mod parametric;
mod structures;

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::semigroup::{GeneratorSet, Semigroup};
use crate::Result;

/// Identifier of one of the sixteen 3-permutation families, or of the
/// generic family `N(n)` with block size n ≥ 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    H7,
    H8,
    H9,
    H10,
    H11,
    H12,
    H13,
    H14,
    H15,
    H16,
    /// The generic family for block size n.
    N(i64),
}

/// The sixteen 3-permutation families in catalogue order.
pub const ALL_H: [FamilyId; 16] = [
    FamilyId::H1,
    FamilyId::H2,
    FamilyId::H3,
    FamilyId::H4,
    FamilyId::H5,
    FamilyId::H6,
    FamilyId::H7,
    FamilyId::H8,
    FamilyId::H9,
    FamilyId::H10,
    FamilyId::H11,
    FamilyId::H12,
    FamilyId::H13,
    FamilyId::H14,
    FamilyId::H15,
    FamilyId::H16,
];

/// Generator recipe of an H family: three linear forms `m·k + c` plus
/// the smallest admissible k.
struct HRow {
    forms: [(i64, i64); 3],
    k_min: i64,
}

#[rustfmt::skip]
const H_ROWS: [HRow; 16] = [
    HRow { forms: [(3, 0),  (3, 1),   (6, -1)],  k_min: 1 }, // H1
    HRow { forms: [(6, 1),  (6, 2),   (9, 3)],   k_min: 1 }, // H2
    HRow { forms: [(6, 1),  (9, 2),   (9, 3)],   k_min: 1 }, // H3
    HRow { forms: [(6, 1),  (6, 3),   (6, 5)],   k_min: 1 }, // H4
    HRow { forms: [(6, 1),  (12, -4), (12, 0)],  k_min: 2 }, // H5
    HRow { forms: [(3, 1),  (6, -1),  (6, 0)],   k_min: 1 }, // H6
    HRow { forms: [(3, 2),  (3, 3),   (3, 4)],   k_min: 1 }, // H7
    HRow { forms: [(12, 2), (12, 4),  (18, 3)],  k_min: 1 }, // H8
    HRow { forms: [(3, 2),  (6, 1),   (6, 3)],   k_min: 1 }, // H9
    HRow { forms: [(6, 3),  (6, 5),   (12, 4)],  k_min: 1 }, // H10
    HRow { forms: [(6, 4),  (6, 5),   (9, 6)],   k_min: 1 }, // H11
    HRow { forms: [(12, 4), (18, 3),  (18, 5)],  k_min: 1 }, // H12
    HRow { forms: [(6, 5),  (9, 6),   (9, 7)],   k_min: 1 }, // H13
    HRow { forms: [(6, 5),  (12, 4),  (12, 6)],  k_min: 1 }, // H14
    HRow { forms: [(12, 8), (12, 10), (18, 15)], k_min: 1 }, // H15
    HRow { forms: [(12, 8), (18, 13), (18, 15)], k_min: 1 }, // H16
];

impl FamilyId {
    fn h_index(self) -> Option<usize> {
        use FamilyId::*;
        match self {
            H1 => Some(0),
            H2 => Some(1),
            H3 => Some(2),
            H4 => Some(3),
            H5 => Some(4),
            H6 => Some(5),
            H7 => Some(6),
            H8 => Some(7),
            H9 => Some(8),
            H10 => Some(9),
            H11 => Some(10),
            H12 => Some(11),
            H13 => Some(12),
            H14 => Some(13),
            H15 => Some(14),
            H16 => Some(15),
            N(_) => None,
        }
    }

    /// Smallest k in the family's validity domain.
    pub fn k_min(self) -> i64 {
        match self.h_index() {
            Some(idx) => H_ROWS[idx].k_min,
            None => 1,
        }
    }

    fn check_domain(self, k: i64) -> Result<()> {
        if let FamilyId::N(n) = self {
            if n < 3 {
                return Err(Error::KOutOfDomain { family: self, k });
            }
            if n > crate::permblock::MAX_BLOCK_SIZE {
                return Err(Error::TooLarge {
                    what: "family block size",
                    value: n,
                    max: crate::permblock::MAX_BLOCK_SIZE,
                });
            }
        }
        if k < self.k_min() {
            return Err(Error::KOutOfDomain { family: self, k });
        }
        Ok(())
    }

    /// The family's generating set at parameter k: the exact closed-form
    /// row, sorted. Errors when k is outside the validity domain or the
    /// generators would overflow.
    pub fn generators(self, k: i64) -> Result<GeneratorSet> {
        self.check_domain(k)?;
        match self.h_index() {
            Some(idx) => {
                let row = &H_ROWS[idx];
                let gens: Vec<i64> = row.forms.iter().map(|&(m, c)| m * k + c).collect();
                GeneratorSet::new(gens)
            }
            None => {
                let FamilyId::N(n) = self else { unreachable!() };
                let a = n * k + 1;
                let mut gens = Vec::with_capacity(n as usize);
                gens.push(a);
                gens.extend(2 * a - n..=2 * a - 2);
                GeneratorSet::new(gens)
            }
        }
    }

    /// The family member at parameter k as an explicit set: finite
    /// pieces plus an infinite tail.
    pub fn structure(self, k: i64) -> Result<StructuralDescription> {
        // Validates the domain and the magnitude of the instance.
        self.generators(k)?;
        Ok(structures::build(self, k))
    }

    /// Checks the structural description against element enumeration of
    /// the generated semigroup, up to `tail_start + 2·(largest generator)`.
    pub fn verify(self, k: i64) -> Result<StructureCheck> {
        let generators = self.generators(k)?;
        let semigroup = Semigroup::from_generators(generators)?;
        let description = self.structure(k)?;
        let bound = description.tail_start() + 2 * semigroup.generators().largest();
        let materialized = description.materialize(bound)?;
        let enumerated = semigroup.elements_up_to(bound)?;
        Ok(StructureCheck {
            family: self,
            k,
            bound,
            mismatch: first_mismatch(&materialized, &enumerated),
        })
    }

    /// All members of the family instance up to `bound`, produced from
    /// the family's parametric membership form. Only a subset of the
    /// families admits a single such form; the others report
    /// [`Error::UnsupportedFamily`].
    pub fn parametric_members(self, k: i64, bound: i64) -> Result<Vec<i64>> {
        self.check_domain(k)?;
        parametric::members(self, k, bound)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.h_index() {
            Some(idx) => write!(f, "H{}", idx + 1),
            None => {
                let FamilyId::N(n) = self else { unreachable!() };
                write!(f, "N{n}")
            }
        }
    }
}

impl FromStr for FamilyId {
    type Err = &'static str;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let rest = s
            .strip_prefix(['H', 'h'])
            .map(|r| (false, r))
            .or_else(|| s.strip_prefix(['N', 'n']).map(|r| (true, r)));
        let Some((is_n, digits)) = rest else {
            return Err("expected H1..H16 or N<block size>");
        };
        let value: i64 = digits.parse().map_err(|_| "expected an integer")?;
        if is_n {
            if value < 3 {
                return Err("the n-family needs a block size of at least 3");
            }
            Ok(FamilyId::N(value))
        } else {
            match value {
                1..=16 => Ok(ALL_H[value as usize - 1]),
                _ => Err("expected H1..H16 or N<block size>"),
            }
        }
    }
}

/// A concrete family member: identifier, parameter, and the resulting
/// generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub id: FamilyId,
    pub k: i64,
    pub generators: GeneratorSet,
}

impl FamilyInstance {
    pub fn new(id: FamilyId, k: i64) -> Result<Self> {
        Ok(FamilyInstance {
            id,
            k,
            generators: id.generators(k)?,
        })
    }
}

/// An integer interval with step 1, or the sub-progression of step 2
/// starting at `lo`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntervalSpec {
    lo: i64,
    hi: i64,
    step: i64,
}

impl IntervalSpec {
    pub fn new(lo: i64, hi: i64, step: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvertedRange { lo, hi });
        }
        if !(step == 1 || step == 2) {
            return Err(Error::NonPositive { value: step });
        }
        if step == 2 && (hi - lo) % 2 != 0 {
            // A step-2 interval must end on its own parity.
            return Err(Error::InvertedRange { lo, hi });
        }
        Ok(IntervalSpec { lo, hi, step })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn step(&self) -> i64 {
        self.step
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        (self.lo..=self.hi).step_by(self.step as usize)
    }
}

/// One finite piece of a structural description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Piece {
    Single(i64),
    Interval(IntervalSpec),
}

/// A family member written out explicitly: finite pieces (singletons and
/// intervals, possibly overlapping each other or the tail) together with
/// the start of the final infinite interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralDescription {
    pieces: Vec<Piece>,
    tail_start: i64,
}

impl StructuralDescription {
    pub fn new(pieces: Vec<Piece>, tail_start: i64) -> Self {
        StructuralDescription { pieces, tail_start }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn tail_start(&self) -> i64 {
        self.tail_start
    }

    /// Sorted, deduplicated union of all pieces and the tail, truncated
    /// at `bound`.
    pub fn materialize(&self, bound: i64) -> Result<Vec<i64>> {
        if bound > crate::semigroup::MAX_ENUMERATION_BOUND {
            return Err(Error::TooLarge {
                what: "materialization bound",
                value: bound,
                max: crate::semigroup::MAX_ENUMERATION_BOUND,
            });
        }
        let mut set = alloc::collections::BTreeSet::new();
        for piece in &self.pieces {
            match *piece {
                Piece::Single(x) => {
                    if x <= bound {
                        set.insert(x);
                    }
                }
                Piece::Interval(iv) => {
                    for x in iv.iter().take_while(|&x| x <= bound) {
                        set.insert(x);
                    }
                }
            }
        }
        for x in self.tail_start..=bound {
            set.insert(x);
        }
        Ok(set.into_iter().collect())
    }
}

/// The smallest element on which a structural description and the
/// generated semigroup disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub value: i64,
    pub in_structure: bool,
    pub in_semigroup: bool,
}

/// Result of checking a family's structural description against element
/// enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureCheck {
    pub family: FamilyId,
    pub k: i64,
    /// Both sides were compared on `[0, bound]`.
    pub bound: i64,
    pub mismatch: Option<Mismatch>,
}

impl StructureCheck {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

fn first_mismatch(structure: &[i64], semigroup: &[i64]) -> Option<Mismatch> {
    let mut left = structure.iter().peekable();
    let mut right = semigroup.iter().peekable();
    loop {
        match (left.peek(), right.peek()) {
            (None, None) => return None,
            (Some(&&s), None) => {
                return Some(Mismatch {
                    value: s,
                    in_structure: true,
                    in_semigroup: false,
                })
            }
            (None, Some(&&g)) => {
                return Some(Mismatch {
                    value: g,
                    in_structure: false,
                    in_semigroup: true,
                })
            }
            (Some(&&s), Some(&&g)) => {
                if s == g {
                    left.next();
                    right.next();
                } else if s < g {
                    return Some(Mismatch {
                        value: s,
                        in_structure: true,
                        in_semigroup: false,
                    });
                } else {
                    return Some(Mismatch {
                        value: g,
                        in_structure: false,
                        in_semigroup: true,
                    });
                }
            }
        }
    }
}

/// All (family, k) pairs whose generator recipe produces the queried
/// set, found by inverting each row's linear forms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FamilyMatch {
    pub matches: Vec<(FamilyId, i64)>,
}

impl FamilyMatch {
    pub fn is_empty(&self) -> bool {
        self.matches.is_empty()
    }
}

/// Classifies a generator set against the sixteen H families: solves
/// each row's first linear form for k and validates the whole row.
/// Returns every match; an empty list is a valid result.
pub fn match_family(generators: &GeneratorSet) -> FamilyMatch {
    let mut matches = Vec::new();
    if generators.len() == 3 {
        let g1 = generators.smallest();
        for (idx, row) in H_ROWS.iter().enumerate() {
            let (m, c) = row.forms[0];
            if (g1 - c) % m != 0 {
                continue;
            }
            let k = (g1 - c) / m;
            if k < row.k_min {
                continue;
            }
            let id = ALL_H[idx];
            if let Ok(candidate) = id.generators(k) {
                if candidate == *generators {
                    matches.push((id, k));
                }
            }
        }
    }
    FamilyMatch { matches }
}
