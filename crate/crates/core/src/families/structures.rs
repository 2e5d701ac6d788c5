//! Explicit set decompositions for every family.
//!
//! Each family member is written out as a union of singletons, step-1
//! intervals, and step-2 intervals, followed by one infinite tail. The
//! decompositions are transcribed literally from each family's defining
//! recipe, including pieces that overlap each other or the tail;
//! [`StructuralDescription::materialize`] deduplicates. Interval bounds
//! that come out inverted denote empty pieces and are dropped.

use alloc::vec::Vec;

use super::{FamilyId, IntervalSpec, Piece, StructuralDescription};

struct Build {
    pieces: Vec<Piece>,
}

impl Build {
    fn new() -> Self {
        Build { pieces: Vec::new() }
    }

    fn single(&mut self, x: i64) {
        self.pieces.push(Piece::Single(x));
    }

    /// Step-1 interval [lo, hi]; empty when hi < lo.
    fn run(&mut self, lo: i64, hi: i64) {
        if lo == hi {
            self.single(lo);
        } else if lo < hi {
            self.pieces
                .push(Piece::Interval(IntervalSpec { lo, hi, step: 1 }));
        }
    }

    /// Step-2 interval [lo, hi]₂; empty when hi < lo.
    fn run2(&mut self, lo: i64, hi: i64) {
        debug_assert!((hi - lo) % 2 == 0, "step-2 interval must keep parity");
        if lo == hi {
            self.single(lo);
        } else if lo < hi {
            self.pieces
                .push(Piece::Interval(IntervalSpec { lo, hi, step: 2 }));
        }
    }

    fn finish(self, tail_start: i64) -> StructuralDescription {
        StructuralDescription::new(self.pieces, tail_start)
    }
}

/// Builds the description for a family member whose domain has already
/// been validated.
pub(super) fn build(id: FamilyId, k: i64) -> StructuralDescription {
    match id {
        FamilyId::H1 => h1(k),
        FamilyId::H2 => h2(k),
        FamilyId::H3 => h3(k),
        FamilyId::H4 => h4(k),
        FamilyId::H5 => h5(k),
        // H6 is the block-size-3 instance of the generic family.
        FamilyId::H6 => n_family(3, k),
        FamilyId::H7 => h7(k),
        FamilyId::H8 => h8(k),
        FamilyId::H9 => h9(k),
        FamilyId::H10 => h10(k),
        FamilyId::H11 => h11(k),
        FamilyId::H12 => h12(k),
        FamilyId::H13 => h13(k),
        FamilyId::H14 => h14(k),
        FamilyId::H15 => h15(k),
        FamilyId::H16 => h16(k),
        FamilyId::N(n) => n_family(n, k),
    }
}

/// {3k, 3k+1, 6k−1}: blocks A_i = [6ik−i, 6ik+2i], B_i = [(2i+1)3k−i,
/// (2i+1)3k+2i+1], tail from the start of B_{k−1}.
fn h1(k: i64) -> StructuralDescription {
    let m = 3 * k;
    let mut b = Build::new();
    for i in 0..=k {
        b.run(2 * i * m - i, 2 * i * m + 2 * i);
        b.run((2 * i + 1) * m - i, (2 * i + 1) * m + 2 * i + 1);
    }
    b.finish((2 * k - 1) * m - (k - 1))
}

/// {6k+1, 6k+2, 9k+3}: A_i = [ai, ai+i], B_i = A-shifted by 3k+2.
fn h2(k: i64) -> StructuralDescription {
    let a = 6 * k + 1;
    let mut b = Build::new();
    b.single(0);
    for i in 1..=3 * k {
        b.run(a * i, a * i + i);
        b.run(a * i + 3 * k + 2, a * i + 3 * k + 2 + i - 1);
    }
    b.finish(a * 3 * k + 3 * k + 2)
}

/// {6k+1, 9k+2, 9k+3}: nine pieces per layer i, three layers of the
/// shifts 0, a, 2a over the base triple.
fn h3(k: i64) -> StructuralDescription {
    let a = 6 * k + 1;
    let bb = 9 * k + 2;
    let c = 9 * k + 3;
    let mut b = Build::new();
    b.single(0);
    for s in [0, a] {
        b.single(a + s);
        b.single(bb + s);
        b.single(c + s);
    }
    for i in 1..=k {
        let base = 3 * i * a;
        b.single(base);
        b.run(base + 1, base + 3 * i);
        b.run(base + 3 * k + 1, base + 3 * k + 2 + 3 * (i - 1));
        b.single(base + a);
        b.run(base + a + 1, base + a + 3 * i);
        b.run(base + bb, base + c + 3 * i);
        b.single(base + 2 * a);
        b.run(base + 2 * a + 1, base + 2 * a + 3 * i);
        b.run(base + a + bb, base + a + c + 3 * i);
    }
    b.finish((3 * k + 1) * a)
}

/// {6k+1, 6k+3, 6k+5}: step-2 blocks up to t = ⌊3k/2⌋, then mixed
/// step-1/step-2 blocks up to 2t+ε.
fn h4(k: i64) -> StructuralDescription {
    let a = 6 * k + 1;
    let t = 3 * k / 2;
    let eps = k % 2;
    let mut b = Build::new();
    b.single(0);
    for i in 1..=t {
        b.run2(i * a, i * a + 4 * i);
    }
    for i in t + 1..=2 * t + eps {
        b.run(i * a, i * a + 2 * (2 * (i - t - 1) - eps));
        b.run2(
            i * a + 2 * (2 * (i - t - 1) - eps + 1),
            i * a + 2 * (2 * t + eps),
        );
    }
    b.finish((2 * t + eps + 1) * a)
}

/// {6k+1, 12k−4, 12k} for k ≥ 2: the most fragmented family, with
/// special blocks around index k.
fn h5(k: i64) -> StructuralDescription {
    let a = 6 * k + 1;
    let mut b = Build::new();
    b.single(0);
    for i in 0..=k - 2 {
        // A_i
        b.single((2 * i + 1) * a);
        b.single((2 * i + 2) * a - 6 * (i + 1));
        b.single((2 * i + 2) * a - 6 * (i + 1) + 4);
        b.run2((2 * i + 2) * a - 6 * i, (2 * i + 2) * a - 2);
        // B_i
        b.single((2 * i + 2) * a);
        b.single((2 * i + 3) * a - 6 * (i + 1));
        b.single((2 * i + 3) * a - 6 * (i + 1) + 4);
        b.run2((2 * i + 3) * a - 6 * i, (2 * i + 3) * a - 2);
    }
    // A_{k−1}
    b.single((2 * k - 1) * a);
    b.single(2 * k * a - 6 * k);
    b.single(2 * k * a - 6 * k + 4);
    b.run2(2 * k * a - 6 * k + 6, 2 * k * a - 2);
    // B_{k−1}
    b.single(2 * k * a);
    b.single((2 * k + 1) * a - 6 * k);
    b.single((2 * k + 1) * a - 6 * k + 4);
    b.run2((2 * k + 1) * a - 6 * k + 6, (2 * k + 1) * a - 8);
    b.run((2 * k + 1) * a - 6, (2 * k + 1) * a - 4);
    b.run((2 * k + 1) * a - 2, (2 * k + 1) * a);
    // D_k
    b.run2((2 * k + 1) * a + 1, (2 * k + 1) * a + 1 + 6 * k - 8);
    b.run((2 * k + 2) * a - 6, (2 * k + 2) * a - 4);
    b.run((2 * k + 2) * a - 2, (2 * k + 2) * a);
    // C_i and D_i
    for i in k + 1..=2 * k - 1 {
        for (base, end) in [
            (2 * i * a, (2 * i + 1) * a),
            ((2 * i + 1) * a, (2 * i + 2) * a),
        ] {
            b.run2(base + 1, base + 1 + 2 * (6 * k - 3 * i - 4));
            b.run(
                base + 1 + 2 * (6 * k - 3 * i - 3),
                base + 3 + 2 * (6 * k - 3 * i - 3),
            );
            b.run(base + 5 + 2 * (6 * k - 3 * i - 3), end);
        }
    }
    b.finish((4 * k - 1) * a + 5)
}

/// {3k+2, 3k+3, 3k+4}: I_i = [ia, ia+2i] up to t = ⌊3k/2⌋.
fn h7(k: i64) -> StructuralDescription {
    let a = 3 * k + 2;
    let t = 3 * k / 2;
    let mut b = Build::new();
    for i in 0..=t {
        b.run(i * a, i * a + 2 * i);
    }
    b.finish((t + 1) * a)
}

/// {12k+2, 12k+4, 18k+3}: even blocks A_i with shifted copies B_i, then
/// half-offset blocks C_i/D_i.
fn h8(k: i64) -> StructuralDescription {
    let a = 12 * k + 2;
    let half = a / 2;
    let c = a + half;
    let mut b = Build::new();
    b.single(0);
    for i in 1..=3 * k {
        b.run2(i * a, i * a + 2 * i);
        // B_i = A_{i−1} + (a + a/2)
        b.run2((i - 1) * a + c, (i - 1) * a + 2 * (i - 1) + c);
    }
    b.run2((3 * k + 1) * a, (3 * k + 1) * a + 6 * k);
    b.run2((3 * k + 2) * a, (3 * k + 2) * a + 6 * k);
    for i in 3 * k + 1..=6 * k {
        b.run(i * a + half, i * a + half + 2 * (i - 3 * k));
        b.run2(i * a + half + 2 * (i - 3 * k + 1), i * a + half + 6 * k);
    }
    // C_i = D_{i−2} + (a + a/2) for the remaining indices.
    for i in 3 * k + 3..=6 * k + 1 {
        let j = i - 2;
        b.run(j * a + half + c, j * a + half + 2 * (j - 3 * k) + c);
        b.run2(
            j * a + half + 2 * (j - 3 * k + 1) + c,
            j * a + half + 6 * k + c,
        );
    }
    b.finish((6 * k + 1) * a + half)
}

/// {3k+2, 6k+1, 6k+3}: I_i = {ia − 3⌊i/2⌋} ∪ [ia − 3⌊i/2⌋ + 2, ia].
fn h9(k: i64) -> StructuralDescription {
    let a = 3 * k + 2;
    let mut b = Build::new();
    for i in 0..=2 * k + 1 {
        let drop = 3 * (i / 2);
        b.single(i * a - drop);
        b.run(i * a - drop + 2, i * a);
    }
    b.finish(2 * k * a + 4)
}

/// {6k+3, 6k+5, 12k+4}: step-2 blocks below index t = k−1, mixed blocks
/// above.
fn h10(k: i64) -> StructuralDescription {
    let a = 6 * k + 3;
    let t = k - 1;
    let mut b = Build::new();
    b.single(0);
    for i in 0..=t {
        let lo_a = (1 + 2 * i) * a - 2 * i;
        b.run2(lo_a, lo_a + 6 * i + 2);
        let lo_b = (2 + 2 * i) * a - 2 * (i + 1);
        b.run2(lo_b, lo_b + 6 * i + 6);
    }
    for i in t + 1..=2 * k {
        let lo_c = (1 + 2 * i) * a - 2 * i;
        b.run(lo_c, lo_c + 6 * (i - t - 1) - 2);
        b.run2(lo_c + 6 * (i - t - 1), lo_c + 6 * k);
        let lo_d = (2 + 2 * i) * a - 2 * (i + 1);
        b.run(lo_d, lo_d + 6 * (i - t - 1) + 2);
        b.run2(lo_d + 6 * (i - t - 1) + 4, lo_d + 6 * k + 2);
    }
    b.finish((2 + 4 * k) * a - 2 * (2 * k + 1))
}

/// {6k+4, 6k+5, 9k+6}: A_i = [ia, ia+i] with B_i = A_{i−1} + c.
fn h11(k: i64) -> StructuralDescription {
    let a = 6 * k + 4;
    let t = (a - 2) / 2;
    let c = a + a / 2;
    let mut b = Build::new();
    b.single(0);
    for i in 1..=t {
        b.run(i * a, i * a + i);
        if i == 1 {
            b.single(c);
        } else {
            b.run((i - 1) * a + c, (i - 1) * a + (i - 1) + c);
        }
    }
    b.finish((t + 1) * a)
}

/// {12k+4, 18k+3, 18k+5}: step-2 blocks on both the whole and half
/// offsets, widening every third index.
fn h12(k: i64) -> StructuralDescription {
    let a = 12 * k + 4;
    let half = a / 2;
    let mut b = Build::new();
    b.single(0);
    for i in 1..=3 * k {
        b.run2(i * a - 6 * (i / 3), i * a);
        b.run2(i * a + half - 3 - 6 * ((i - 1) / 3), i * a + half - 1);
    }
    b.run2((3 * k + 1) * a - 6 * k, (3 * k + 1) * a - 4);
    b.run((3 * k + 1) * a - 2, (3 * k + 1) * a);
    b.run2((3 * k + 2) * a - 6 * k, (3 * k + 2) * a - 4);
    b.run((3 * k + 2) * a - 2, (3 * k + 2) * a);
    for j in 3..=3 * k + 1 {
        let base = (3 * k + j) * a;
        b.run2(base - (6 * k + 2), base - 4 - 6 * ((j - 1) / 3));
        b.run(base - 2 - 6 * ((j - 1) / 3), base);
    }
    for j in 1..=3 * k + 1 {
        let base = (3 * k + j) * a + half;
        b.run2(base + 1 - (6 * k + 2), base - 1 - 6 * ((j + 1) / 3));
        b.run(base + 1 - 6 * ((j + 1) / 3), base - 1);
    }
    b.finish((6 * k + 1) * a + 3)
}

/// {6k+5, 9k+6, 9k+7}: the base triple of intervals shifted by even and
/// odd multiples of b.
fn h13(k: i64) -> StructuralDescription {
    let a = 6 * k + 5;
    let bb = 9 * k + 6;
    let mut b = Build::new();
    b.single(0);
    for i in 0..=k {
        let s = 2 * i * bb;
        b.run(a + s, a + 3 * i + s);
        b.run(bb + s, bb + 1 + 3 * i + s);
        b.run(2 * a + s, 2 * a + 3 * i + s);
        let s = (2 * i + 1) * bb;
        b.run(a + s, a + 1 + 3 * i + s);
        b.run(bb + s, bb + 3 + 3 * i + s);
        b.run(2 * a + s, 2 * a + 1 + 3 * i + s);
    }
    b.finish(2 * a + 2 * k * bb)
}

/// {6k+5, 12k+4, 12k+6}: I_i = [ia − 6⌊i/2⌋, ia − 4]₂ ∪ {ia}.
fn h14(k: i64) -> StructuralDescription {
    let a = 6 * k + 5;
    let mut b = Build::new();
    for i in 0..=4 * k + 2 {
        b.run2(i * a - 6 * (i / 2), i * a - 4);
        b.single(i * a);
    }
    b.finish((4 * k + 1) * a + 3)
}

/// {12k+8, 12k+10, 18k+15}: step-2 blocks on the whole and half offsets.
fn h15(k: i64) -> StructuralDescription {
    let a = 12 * k + 8;
    let half = a / 2;
    let mut b = Build::new();
    b.single(0);
    for i in 1..=6 * k + 4 {
        b.run2(i * a, i * a + 2 * i);
        b.run2(i * a + half + 3, i * a + half + 3 + 2 * (i - 1));
    }
    b.finish((6 * k + 4) * a + half + 3)
}

/// {12k+8, 18k+13, 18k+15}: step-2 blocks A_i/B_i below index 3k+3, then
/// mixed blocks C_j/D_j.
fn h16(k: i64) -> StructuralDescription {
    let a = 12 * k + 8;
    let half = a / 2;
    let bb = a + half + 1;
    let c = a + half + 3;
    let mut b = Build::new();
    b.single(0);
    for i in 1..=3 * k + 2 {
        b.run2(i * a, i * a + 6 * (i / 3));
        // B_i = A_{i−1} + {b, c}
        if i == 1 {
            b.single(bb);
            b.single(c);
        } else {
            let lo = (i - 1) * a;
            let hi = lo + 6 * ((i - 1) / 3);
            b.run2(lo + bb, hi + bb);
            b.run2(lo + c, hi + c);
        }
    }
    for j in 0..=3 * k + 1 {
        let base = (3 * k + 3 + j) * a;
        b.run(base, base + 6 * ((j + 1) / 3));
        b.run2(base + 6 * ((j + 1) / 3) + 2, base + half);
        b.run(base + half + 1, base + half + 3 + 6 * (j / 3));
        b.run2(base + half + 5 + 6 * (j / 3), base + a - 1);
    }
    b.finish((6 * k + 4) * a + half + 1)
}

/// The generic family: a = nk+1 with generators {a} ∪ [2a−n, 2a−2];
/// paired blocks {(2i+1)a} ∪ [(2i+2)a − (i+1)n, (2i+2)a − 2] and the
/// same shifted by a, with tail [2ka, ∞).
fn n_family(n: i64, k: i64) -> StructuralDescription {
    let a = n * k + 1;
    let mut b = Build::new();
    b.single(0);
    for i in 0..=k - 1 {
        b.single((2 * i + 1) * a);
        b.run((2 * i + 2) * a - (i + 1) * n, (2 * i + 2) * a - 2);
        b.single((2 * i + 2) * a);
        b.run((2 * i + 3) * a - (i + 1) * n, (2 * i + 3) * a - 2);
    }
    b.finish(2 * k * a)
}
