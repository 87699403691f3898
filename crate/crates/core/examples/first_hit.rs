//! Finds one Hermitian LCD code for each of several parameter sets by
//! stopping the search at its first accepted leaf.
//!
//! ```text
//! cargo run --release --example first_hit            # the fast cases
//! cargo run --release --example first_hit 19 7 9     # any (n, k, d)
//! ```

use std::time::Instant;

use lcd4::io;
use lcd4::search::{run_search, SearchConfig, SearchMode};

fn main() -> lcd4::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("arguments are n k d"))
        .collect();
    let targets = match args[..] {
        [n, k, d] => vec![(n, k, d)],
        [] => vec![(12, 6, 5), (15, 7, 7), (17, 7, 8), (17, 6, 9)],
        _ => panic!("usage: first_hit [n k d]"),
    };
    for (n, k, d) in targets {
        let start = Instant::now();
        let cfg = SearchConfig::new(n, k, d).mode(SearchMode::FirstHit);
        let out = run_search(&cfg)?;
        match out.found.first() {
            Some(code) => {
                let p = code.params();
                println!(
                    "{p} after {} nodes, {:.2?}; {}",
                    out.nodes_visited,
                    start.elapsed(),
                    code.eaqecc_params()?
                );
                print!("{}", io::format_code(code));
            }
            None => println!("[{n},{k},{d}]_4: none exists ({} nodes)", out.nodes_visited),
        }
    }
    Ok(())
}
