//! Equivalence against brute-force oracles.
//!
//! The oracles here share no code with the library: membership comes
//! from a saturating dynamic program over an interval, the Frobenius
//! number from a downward gap scan, and the reference enumerator checks
//! candidate tuples with DP-derived element sequences only.

use persemi_core::search::{enumerate, EnumerationQuery};
use persemi_core::{arith_seq_contains, arith_seq_frobenius, Semigroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Membership table of ⟨gens⟩ on [0, bound] by saturating DP.
fn dp_members(gens: &[i64], bound: i64) -> Vec<bool> {
    let mut member = vec![false; bound as usize + 1];
    member[0] = true;
    for x in 1..=bound {
        member[x as usize] = gens.iter().any(|&g| x >= g && member[(x - g) as usize]);
    }
    member
}

/// A bound past every gap: for gcd-1 sets the Frobenius number is below
/// smallest·largest.
fn safe_bound(gens: &[i64]) -> i64 {
    gens[0] * gens[gens.len() - 1] + 2 * gens[gens.len() - 1]
}

fn dp_frobenius(member: &[bool]) -> i64 {
    member
        .iter()
        .rposition(|&m| !m)
        .map(|x| x as i64)
        .unwrap_or(-1)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn random_generator_set(rng: &mut ChaCha8Rng) -> Vec<i64> {
    loop {
        let len = rng.random_range(2..=5);
        let mut gens: Vec<i64> = (0..len).map(|_| rng.random_range(1..=60)).collect();
        gens.sort_unstable();
        gens.dedup();
        if gens.len() >= 2 && gens.iter().fold(0, |a, &b| gcd(a, b)) == 1 {
            return gens;
        }
    }
}

#[test]
fn membership_agrees_with_dp() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut cases: Vec<Vec<i64>> = vec![
        vec![1, 2],
        vec![2, 3],
        vec![3, 4],
        vec![5, 7, 9],
        vec![9, 14, 15, 16],
        vec![6, 10, 15],
        vec![31, 59, 60],
    ];
    for _ in 0..200 {
        cases.push(random_generator_set(&mut rng));
    }
    for gens in cases {
        let sg = Semigroup::from_slice(&gens).unwrap();
        let bound = safe_bound(&gens).max(sg.frobenius() + 2 * sg.multiplicity());
        let member = dp_members(&gens, bound);
        assert_eq!(sg.frobenius(), dp_frobenius(&member), "{gens:?}");
        for x in 0..=bound {
            assert_eq!(
                sg.contains(x),
                member[x as usize],
                "{gens:?} disagree at {x}"
            );
        }
        // The Apéry minima are the least DP members per residue class.
        let m = sg.multiplicity();
        for (r, &least) in sg.apery().minima().iter().enumerate() {
            let expected = (0..=bound)
                .find(|&x| x % m == r as i64 && member[x as usize])
                .unwrap();
            assert_eq!(least, expected, "{gens:?} residue {r}");
        }
    }
}

#[test]
fn arith_seq_ops_agree_with_semigroup() {
    for a0 in 1..=25i64 {
        for e in 1..=8i64 {
            if gcd(a0, e) != 1 {
                continue;
            }
            for k in 1..=4i64 {
                let gens: Vec<i64> = (0..=k).map(|i| a0 + i * e).collect();
                let mut dedup = gens.clone();
                dedup.dedup();
                let sg = Semigroup::from_slice(&dedup).unwrap();
                assert_eq!(
                    arith_seq_frobenius(a0, e, k).unwrap(),
                    sg.frobenius(),
                    "a0={a0} e={e} k={k}"
                );
                for x in 0..=sg.frobenius() + 2 * a0 {
                    assert_eq!(
                        arith_seq_contains(a0, e, k, x).unwrap(),
                        sg.contains(x),
                        "a0={a0} e={e} k={k} x={x}"
                    );
                }
            }
        }
    }
}

/// DP-only acceptance check: is the tuple the first block of the
/// semigroup it generates, with every block a permutation?
fn dp_is_accepted(tuple: &[i64], n: i64) -> bool {
    if tuple.iter().fold(0, |a, &b| gcd(a, b)) != 1 {
        return false;
    }
    let bound = safe_bound(tuple) + 3 * n * tuple[0];
    let member = dp_members(tuple, bound);
    let elements: Vec<i64> = (1..=bound).filter(|&x| member[x as usize]).collect();
    if elements[..tuple.len()] != *tuple {
        return false;
    }
    let frobenius = dp_frobenius(&member);
    let below = elements.iter().filter(|&&x| x <= frobenius).count() as i64;
    // Over-check a couple of blocks past the horizon.
    let blocks = below / n + 3;
    for b in 0..blocks {
        let mut seen = vec![false; n as usize];
        for i in 0..n {
            let x = elements[(b * n + i) as usize];
            let r = (x % n) as usize;
            if seen[r] {
                return false;
            }
            seen[r] = true;
        }
    }
    true
}

fn naive_enumerate(n: i64, min_g1: i64, max_gk: i64) -> Vec<Vec<i64>> {
    let mut found = Vec::new();
    let mut tuple = Vec::new();
    for g1 in min_g1..=max_gk / n {
        tuple.push(g1);
        naive_extend(n, max_gk, &mut tuple, &mut found);
        tuple.pop();
    }
    found
}

fn naive_extend(n: i64, max_gk: i64, tuple: &mut Vec<i64>, found: &mut Vec<Vec<i64>>) {
    if tuple.len() == n as usize {
        if dp_is_accepted(tuple, n) {
            found.push(tuple.clone());
        }
        return;
    }
    for g in tuple[tuple.len() - 1] + 1..=max_gk {
        tuple.push(g);
        naive_extend(n, max_gk, tuple, found);
        tuple.pop();
    }
}

#[test]
fn pruned_enumerator_matches_naive_reference() {
    for n in [2i64, 3] {
        let query = EnumerationQuery::new(n, 1, 40).unwrap();
        let pruned: Vec<Vec<i64>> = enumerate(&query)
            .unwrap()
            .found
            .iter()
            .map(|g| g.as_slice().to_vec())
            .collect();
        let naive = naive_enumerate(n, 1, 40);
        assert_eq!(pruned, naive, "n={n}");
    }
}
