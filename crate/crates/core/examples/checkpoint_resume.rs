//! Runs the `[12,6,6]₄` search in slices of a fixed node budget, saving the
//! frontier to a checkpoint file after every slice and resuming from it.
//! The node count matches a single uninterrupted run.

use std::fs;

use lcd4::search::{resume, run_search, Checkpoint, SearchConfig};

fn main() -> lcd4::Result<()> {
    let path = std::env::temp_dir().join("lcd4-12-6-6.ckpt");
    let cfg = SearchConfig::new(12, 6, 6).node_budget(10_000);

    let mut out = run_search(&cfg)?;
    let mut slices = 1;
    while !out.complete {
        fs::write(&path, out.checkpoint().to_text()).expect("write checkpoint");
        let text = fs::read_to_string(&path).expect("read checkpoint");
        println!(
            "slice {slices}: {} nodes, frontier {:?}",
            out.nodes_visited, out.frontier
        );
        out = resume(&cfg, &Checkpoint::parse(&text)?)?;
        slices += 1;
    }
    let _ = fs::remove_file(&path);

    let whole = run_search(&SearchConfig::new(12, 6, 6))?;
    println!(
        "{slices} slices: {} nodes, {} found; single run: {} nodes, {} found",
        out.nodes_visited,
        out.found.len(),
        whole.nodes_visited,
        whole.found.len()
    );
    assert_eq!(out.nodes_visited, whole.nodes_visited);
    Ok(())
}
