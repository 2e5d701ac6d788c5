//! Parametric membership forms.
//!
//! Nine of the families admit a single closed representation of their
//! elements, e.g. `x = (s+2q)·a − 3q + 2r` with `0 ≤ r ≤ q` for H9.
//! Enumerating the bounded parameter ranges reproduces the semigroup
//! directly from the form, independently of the Apéry machinery.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::FamilyId;
use crate::error::Error;
use crate::semigroup::MAX_ENUMERATION_BOUND;
use crate::Result;

pub(super) fn members(id: FamilyId, k: i64, bound: i64) -> Result<Vec<i64>> {
    if bound > MAX_ENUMERATION_BOUND {
        return Err(Error::TooLarge {
            what: "membership bound",
            value: bound,
            max: MAX_ENUMERATION_BOUND,
        });
    }
    let mut out = BTreeSet::new();
    if bound >= 0 {
        collect(id, k, bound, &mut out)?;
    }
    Ok(out.into_iter().collect())
}

fn collect(id: FamilyId, k: i64, bound: i64, out: &mut BTreeSet<i64>) -> Result<()> {
    let mut push = |x: i64| {
        if (0..=bound).contains(&x) {
            out.insert(x);
        }
    };
    match id {
        // x = (p + 2q)·a + 4r − 6q, 0 ≤ r ≤ q
        FamilyId::H5 => {
            let a = 6 * k + 1;
            for p in 0..=bound / a {
                for q in 0..=(bound - p * a) / (2 * a - 6) {
                    for r in 0..=q {
                        push((p + 2 * q) * a + 4 * r - 6 * q);
                    }
                }
            }
        }
        // x = q·a + 2r + s·(a + a/2), 0 ≤ r ≤ q
        FamilyId::H8 => {
            let a = 12 * k + 2;
            let c = a + a / 2;
            for s in 0..=bound / c {
                for q in 0..=(bound - s * c) / a {
                    for r in 0..=q.min((bound - s * c - q * a) / 2) {
                        push(q * a + 2 * r + s * c);
                    }
                }
            }
        }
        // x = (s + 2q)·a − 3q + 2r, 0 ≤ r ≤ q
        FamilyId::H9 => {
            let a = 3 * k + 2;
            for s in 0..=bound / a {
                for q in 0..=(bound - s * a) / (2 * a - 3) {
                    for r in 0..=q {
                        push((s + 2 * q) * a - 3 * q + 2 * r);
                    }
                }
            }
        }
        // x = (q + 2u)·a + 2r − 2u, 0 ≤ r ≤ q
        FamilyId::H10 => {
            let a = 6 * k + 3;
            for q in 0..=bound / a {
                for u in 0..=(bound - q * a) / (2 * a - 2) {
                    for r in 0..=q {
                        push((q + 2 * u) * a + 2 * r - 2 * u);
                    }
                }
            }
        }
        // x = (q + u)·a + u·(a/2) + r, 0 ≤ r ≤ q
        FamilyId::H11 => {
            let a = 6 * k + 4;
            let c = a + a / 2;
            for q in 0..=bound / a {
                for u in 0..=(bound - q * a) / c {
                    for r in 0..=q {
                        push((q + u) * a + u * (a / 2) + r);
                    }
                }
            }
        }
        // x = (s + q)·a + q·(a/2) − 3q + 2r, 0 ≤ r ≤ q
        FamilyId::H12 => {
            let a = 12 * k + 4;
            let step = a + a / 2 - 3;
            for s in 0..=bound / a {
                for q in 0..=(bound - s * a) / step {
                    for r in 0..=q {
                        push((s + q) * a + q * (a / 2) - 3 * q + 2 * r);
                    }
                }
            }
        }
        // x = (s + 2q)·a − 6q + 2r, 0 ≤ r ≤ q
        FamilyId::H14 => {
            let a = 6 * k + 5;
            for s in 0..=bound / a {
                for q in 0..=(bound - s * a) / (2 * a - 6) {
                    for r in 0..=q {
                        push((s + 2 * q) * a - 6 * q + 2 * r);
                    }
                }
            }
        }
        // x = (q + 3v + ε)·a + ε·(a/2) + 6v + 3ε + 2r, ε ∈ {0,1}, 0 ≤ r ≤ q
        FamilyId::H15 => {
            let a = 12 * k + 8;
            for eps in 0..=1i64 {
                let offset = eps * (a / 2) + 3 * eps + eps * a;
                if offset > bound {
                    continue;
                }
                for v in 0..=(bound - offset) / (3 * a + 6) {
                    for q in 0..=(bound - offset - v * (3 * a + 6)) / a {
                        for r in 0..=q {
                            push((q + 3 * v + eps) * a + eps * (a / 2) + 6 * v + 3 * eps + 2 * r);
                        }
                    }
                }
            }
        }
        // x = (s + q)·a + q·(a/2) + q + 2r, 0 ≤ r ≤ q
        FamilyId::H16 => {
            let a = 12 * k + 8;
            let step = a + a / 2 + 1;
            for s in 0..=bound / a {
                for q in 0..=(bound - s * a) / step {
                    for r in 0..=q {
                        push((s + q) * a + q * (a / 2) + q + 2 * r);
                    }
                }
            }
        }
        other => return Err(Error::UnsupportedFamily { family: other }),
    }
    Ok(())
}
