//! Serialized search frontier.
//!
//! ```text
//! lcd4-ckpt v1
//! 12 6 6
//! 3 17 40
//! visited 1523
//! found 0 5 9 12 30
//! ```
//!
//! Line 3 is the path of candidate indices (for `r_2, r_3, …`) of the next
//! node to visit; it is empty once the search is complete. `visited` carries
//! the node counter, and each `found` line one accepted code as the indices of
//! its rows `r_1, …, r_k`.

use std::fmt::Write;

use crate::error::{Error, Result};

pub const HEADER: &str = "lcd4-ckpt v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub frontier: Vec<u32>,
    pub nodes_visited: u64,
    pub found: Vec<Vec<u32>>,
}

impl Checkpoint {
    pub fn is_complete(&self) -> bool {
        self.frontier.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{HEADER}").unwrap();
        writeln!(out, "{} {} {}", self.n, self.k, self.d).unwrap();
        writeln!(out, "{}", join(&self.frontier)).unwrap();
        writeln!(out, "visited {}", self.nodes_visited).unwrap();
        for f in &self.found {
            writeln!(out, "found {}", join(f)).unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Checkpoint> {
        let bad = |what: &str| Error::Checkpoint(what.to_string());
        let mut lines = text.lines();
        if lines.next() != Some(HEADER) {
            return Err(bad("missing or unsupported header"));
        }
        let params = numbers::<usize>(lines.next().ok_or_else(|| bad("missing parameters"))?)
            .ok_or_else(|| bad("malformed parameters"))?;
        let [n, k, d] = params[..] else {
            return Err(bad("parameter line must be `n k d`"));
        };
        let frontier = numbers::<u32>(lines.next().ok_or_else(|| bad("missing frontier"))?)
            .ok_or_else(|| bad("malformed frontier"))?;
        let mut nodes_visited = None;
        let mut found = Vec::new();
        for line in lines {
            if let Some(rest) = line.strip_prefix("visited ") {
                nodes_visited = Some(rest.parse().map_err(|_| bad("malformed visited count"))?);
            } else if let Some(rest) = line.strip_prefix("found ") {
                let rows = numbers::<u32>(rest).ok_or_else(|| bad("malformed found line"))?;
                if rows.len() != k {
                    return Err(bad("found line has the wrong number of rows"));
                }
                found.push(rows);
            } else if !line.trim().is_empty() {
                return Err(bad("unexpected line"));
            }
        }
        Ok(Checkpoint {
            n,
            k,
            d,
            frontier,
            nodes_visited: nodes_visited.ok_or_else(|| bad("missing visited count"))?,
            found,
        })
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn numbers<T: std::str::FromStr>(line: &str) -> Option<Vec<T>> {
    line.split_whitespace().map(|t| t.parse().ok()).collect()
}
