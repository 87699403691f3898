//! Exhaustive searches that find no Hermitian LCD code: `[12,6,6]₄` and
//! `[n,n-3,3]₄` for `n = 19, 20, 21`. An empty, complete exhaustive run
//! certifies nonexistence.

use std::time::Instant;

use lcd4::search::{run_search, SearchConfig};

fn main() -> lcd4::Result<()> {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    for (n, k, d) in [(12, 6, 6), (19, 16, 3), (20, 17, 3), (21, 18, 3)] {
        let start = Instant::now();
        let out = run_search(&SearchConfig::new(n, k, d).parallel_width(jobs))?;
        println!(
            "[{n},{k},{d}]_4: found {} codes, complete={}, nodes={}, {:.2?}",
            out.found.len(),
            out.complete,
            out.nodes_visited,
            start.elapsed()
        );
        assert!(out.certifies_nonexistence());
    }
    Ok(())
}
