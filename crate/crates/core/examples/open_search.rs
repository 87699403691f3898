//! A long search that can be stopped and restarted: each invocation runs a
//! slice of the tree and leaves the frontier in a checkpoint file, so the
//! work survives across sessions. The default target, an exhaustive
//! `[20,8,10]₄` search, is beyond a desktop budget; use it as a template.
//!
//! ```text
//! cargo run --release --example open_search -- 20 8 10 50000000 state.ckpt
//! ```

use std::fs;
use std::path::PathBuf;

use lcd4::search::{resume, run_search, Checkpoint, SearchConfig};

fn main() -> lcd4::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |i: usize, default: u64| args.get(i).map_or(default, |a| a.parse().expect("number"));
    let (n, k, d) = (num(0, 20) as usize, num(1, 8) as usize, num(2, 10) as usize);
    let budget = num(3, 1_000_000);
    let path = args.get(4).map_or_else(
        || std::env::temp_dir().join(format!("lcd4-{n}-{k}-{d}.ckpt")),
        PathBuf::from,
    );

    let cfg = SearchConfig::new(n, k, d).node_budget(budget);
    let out = match fs::read_to_string(&path) {
        Ok(text) => resume(&cfg, &Checkpoint::parse(&text)?)?,
        Err(_) => run_search(&cfg)?,
    };
    fs::write(&path, out.checkpoint().to_text()).expect("write checkpoint");
    println!(
        "[{n},{k},{d}]_4: {} nodes so far, {} found, complete={}, state in {}",
        out.nodes_visited,
        out.found.len(),
        out.complete,
        path.display()
    );
    Ok(())
}
