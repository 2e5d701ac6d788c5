//! Sharded execution of enumeration queries.
//!
//! Shards are independent per multiplicity and merged deterministically,
//! so the worker count changes the wall time only, never the output.

use persemi_core::search::{
    combine_shards, enumerate, enumerate_g1, EnumerationQuery, EnumerationResult, ShardOutput,
};

/// Worker count: explicit flag, else the PERSEMI_WORKERS environment
/// variable, else 1.
pub fn resolve(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("PERSEMI_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(1)
    .max(1)
}

pub fn enumerate_parallel(
    query: &EnumerationQuery,
    workers: usize,
) -> persemi_core::Result<EnumerationResult> {
    let g1s: Vec<i64> = query.g1_values().collect();
    if workers <= 1 || g1s.len() <= 1 {
        return enumerate(query);
    }
    let workers = workers.min(g1s.len());
    let mut outputs: Vec<ShardOutput> = Vec::with_capacity(g1s.len());
    let results: Vec<persemi_core::Result<Vec<ShardOutput>>> = std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(workers);
        for w in 0..workers {
            let g1s = &g1s;
            handles.push(scope.spawn(move || {
                let mut shard_outputs = Vec::new();
                for &g1 in g1s.iter().skip(w).step_by(workers) {
                    shard_outputs.push(enumerate_g1(query, g1)?);
                }
                Ok(shard_outputs)
            }));
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("worker thread panicked"))
            .collect()
    });
    for result in results {
        outputs.extend(result?);
    }
    Ok(combine_shards(*query, outputs))
}
