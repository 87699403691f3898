//! Exhaustive search for Hermitian LCD codes with systematic generators.
//!
//! Generators have the form `(I_k | A)` and the rows `r_1 < r_2 < … < r_k`
//! of `A` satisfy:
//!
//! 1. `r_1 = (0, …, 0, 1, …, 1)` with `d - 1` ones,
//! 2. `wt(r_i) ≥ d - 1`,
//! 3. the first nonzero symbol of `r_i` is 1,
//! 4. rows increase strictly when `d ≥ 3` and weakly when `d ≤ 2`, in
//!    lexicographic order over `0 < 1 < ω < ω²`.
//!
//! Every `[n, k, d]` code is monomially equivalent to one of this shape, and
//! monomial maps preserve the Hermitian LCD property, so an exhaustive run
//! that accepts nothing shows that no Hermitian LCD `[n, k, d]₄` code exists.
//!
//! Rows are added depth first. A prefix is abandoned as soon as the code it
//! generates, `(I_m | r_1 … r_m)`, has a codeword of weight below `d`. Each
//! frame keeps the list of candidates still admissible after its prefix, so
//! a child only re-tests its parent's survivors against the combinations
//! involving the row just added. Complete matrices are accepted when
//! `G Ḡᵀ` is nonsingular.

mod checkpoint;
mod prefix;
mod rows;

pub use checkpoint::Checkpoint;
pub use rows::{enumerate_rows, first_row, RowCandidate, MAX_REDUNDANCY};

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf4::packed::MAX_LEN;
use crate::gf4::{Gf4, Gf4Matrix, Packed};
use prefix::PrefixState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchMode {
    /// Visit the whole tree; an empty result certifies nonexistence.
    Exhaustive,
    /// Stop at the first accepted code in traversal order.
    FirstHit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub mode: SearchMode,
    /// Number of depth-2 branches processed concurrently.
    pub parallel_width: usize,
    /// Stop after visiting this many nodes in one run and report a frontier.
    /// Budgeted runs are sequential.
    pub node_budget: Option<u64>,
}

impl SearchConfig {
    pub fn new(n: usize, k: usize, d: usize) -> SearchConfig {
        SearchConfig {
            n,
            k,
            d,
            mode: SearchMode::Exhaustive,
            parallel_width: 1,
            node_budget: None,
        }
    }

    pub fn mode(mut self, mode: SearchMode) -> SearchConfig {
        self.mode = mode;
        self
    }

    pub fn parallel_width(mut self, width: usize) -> SearchConfig {
        self.parallel_width = width;
        self
    }

    pub fn node_budget(mut self, budget: u64) -> SearchConfig {
        self.node_budget = Some(budget);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let SearchConfig { n, k, d, .. } = *self;
        let fail = |msg: String| Err(Error::InvalidParameters(msg));
        if k < 2 || k >= n {
            return fail(format!("need 2 ≤ k < n, got n = {n}, k = {k}"));
        }
        if n > MAX_LEN {
            return fail(format!("length {n} exceeds {MAX_LEN}"));
        }
        // d = 1 would need the zero row, which has no leading 1
        if d < 2 {
            return fail(format!("need d ≥ 2, got {d}"));
        }
        if n - k < d - 1 {
            return fail(format!(
                "need n - k ≥ d - 1, got n - k = {}, d = {d}",
                n - k
            ));
        }
        if n - k > MAX_REDUNDANCY {
            return fail(format!("n - k = {} exceeds {MAX_REDUNDANCY}", n - k));
        }
        if self.parallel_width == 0 {
            return fail("parallel width must be positive".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub config: SearchConfig,
    /// Accepted codes `(I_k | A)`, each Hermitian LCD with minimum weight `≥ d`.
    pub found: Vec<LinearCode>,
    /// Candidate indices of the rows of `A` for each accepted code.
    pub found_rows: Vec<Vec<u32>>,
    /// Prefixes of two or more rows that survived the weight test.
    pub nodes_visited: u64,
    /// Whether the whole tree was traversed.
    pub complete: bool,
    /// Next node to visit when the run stopped on its node budget.
    pub frontier: Vec<u32>,
}

impl SearchOutcome {
    /// An exhaustive, complete run with nothing found.
    pub fn certifies_nonexistence(&self) -> bool {
        self.config.mode == SearchMode::Exhaustive && self.complete && self.found.is_empty()
    }

    pub fn checkpoint(&self) -> Checkpoint {
        Checkpoint {
            n: self.config.n,
            k: self.config.k,
            d: self.config.d,
            frontier: self.frontier.clone(),
            nodes_visited: self.nodes_visited,
            found: self.found_rows.clone(),
        }
    }
}

/// Whether `(I_m | rows)` has minimum weight at least `d`.
pub fn partial_min_weight_ok(rows: &[RowCandidate], d: usize) -> bool {
    let Some((first, rest)) = rows.split_first() else {
        return true;
    };
    let r = first.vector().len();
    let d = d as u32;
    if first.weight() as u32 + 1 < d {
        return false;
    }
    let mut state = PrefixState::root(r, first.packed());
    for row in rest {
        if !state.admits(row.packed(), d) {
            return false;
        }
        state = state.extend(row.packed());
    }
    true
}

/// Runs a search from the root.
pub fn run_search(cfg: &SearchConfig) -> Result<SearchOutcome> {
    Searcher::new(cfg)?.run(None)
}

/// Continues a search from a checkpoint written by an earlier budgeted run.
pub fn resume(cfg: &SearchConfig, ckpt: &Checkpoint) -> Result<SearchOutcome> {
    if (ckpt.n, ckpt.k, ckpt.d) != (cfg.n, cfg.k, cfg.d) {
        return Err(Error::Checkpoint(format!(
            "checkpoint is for ({}, {}, {}), search is for ({}, {}, {})",
            ckpt.n, ckpt.k, ckpt.d, cfg.n, cfg.k, cfg.d
        )));
    }
    Searcher::new(cfg)?.run(Some(ckpt))
}

struct Frame {
    state: PrefixState,
    /// Admissible candidate indices for the next row, ascending.
    cands: Vec<u32>,
    next: usize,
    /// Candidate index of the row this frame added.
    chosen: u32,
}

enum Stop {
    Exhausted,
    Budget,
    FirstHit,
    Cancelled,
}

#[derive(Default)]
struct Progress {
    nodes: u64,
    hits: Vec<Vec<u32>>,
}

struct Searcher {
    cfg: SearchConfig,
    cands: Vec<RowCandidate>,
    first: u32,
    strict: bool,
}

impl Searcher {
    fn new(cfg: &SearchConfig) -> Result<Searcher> {
        cfg.validate()?;
        let cands = enumerate_rows(cfg.n - cfg.k, cfg.d)?;
        let r1 = first_row(cfg.n, cfg.k, cfg.d)?;
        let first = cands
            .iter()
            .position(|c| c == &r1)
            .expect("the first row is a candidate") as u32;
        Ok(Searcher {
            cfg: cfg.clone(),
            cands,
            first,
            strict: cfg.d >= 3,
        })
    }

    fn d(&self) -> u32 {
        self.cfg.d as u32
    }

    fn root(&self) -> Frame {
        let state = PrefixState::root(
            self.cfg.n - self.cfg.k,
            self.cands[self.first as usize].packed(),
        );
        let start = if self.strict {
            self.first + 1
        } else {
            self.first
        };
        let cands = (start..self.cands.len() as u32)
            .filter(|&i| state.admits(self.cands[i as usize].packed(), self.d()))
            .collect();
        Frame {
            state,
            cands,
            next: 0,
            chosen: self.first,
        }
    }

    /// Frame for the prefix `parent + cands[parent.next - 1]`.
    fn child(&self, parent: &Frame) -> Frame {
        let pos = parent.next - 1;
        let chosen = parent.cands[pos];
        let state = parent.state.extend(self.cands[chosen as usize].packed());
        let from = if self.strict { pos + 1 } else { pos };
        let cands = parent.cands[from..]
            .iter()
            .copied()
            .filter(|&i| state.admits_fresh(self.cands[i as usize].packed(), self.d()))
            .collect();
        Frame {
            state,
            cands,
            next: 0,
            chosen,
        }
    }

    fn is_lcd(&self, rows: &[u32]) -> bool {
        let packed: Vec<Packed> = rows
            .iter()
            .map(|&i| self.cands[i as usize].packed())
            .collect();
        let k = packed.len();
        let mut gram = Gf4Matrix::identity(k);
        for i in 0..k {
            for j in 0..k {
                let v = gram.get(i, j) + packed[i].hermitian_dot(packed[j]);
                gram.set(i, j, v);
            }
        }
        gram.is_nonsingular().expect("square")
    }

    fn code(&self, rows: &[u32]) -> LinearCode {
        let a: Vec<Vec<Gf4>> = rows
            .iter()
            .map(|&i| self.cands[i as usize].vector().as_slice().to_vec())
            .collect();
        LinearCode::systematic(&Gf4Matrix::from_rows(&a).expect("rows have equal length"))
            .expect("systematic generators have full rank")
    }

    /// Depth-first traversal of the subtree below `stack[base]`, leaving the
    /// stack as it was when stopped early.
    fn dfs(
        &self,
        stack: &mut Vec<Frame>,
        base: usize,
        progress: &mut Progress,
        budget: Option<u64>,
        cancelled: &dyn Fn() -> bool,
    ) -> Stop {
        let k = self.cfg.k;
        while stack.len() > base {
            let top = stack.last_mut().expect("nonempty");
            if top.next == top.cands.len() {
                stack.pop();
                continue;
            }
            if budget.is_some_and(|b| progress.nodes >= b) {
                return Stop::Budget;
            }
            if cancelled() {
                return Stop::Cancelled;
            }
            let idx = top.cands[top.next];
            top.next += 1;
            progress.nodes += 1;
            // the frame at stack position i holds i + 1 rows
            if stack.len() + 1 == k {
                let mut rows: Vec<u32> = stack.iter().map(|f| f.chosen).collect();
                rows.push(idx);
                if self.is_lcd(&rows) {
                    progress.hits.push(rows);
                    if self.cfg.mode == SearchMode::FirstHit {
                        return Stop::FirstHit;
                    }
                }
                continue;
            }
            let child = self.child(stack.last().expect("nonempty"));
            stack.push(child);
        }
        Stop::Exhausted
    }

    fn frontier(stack: &[Frame]) -> Vec<u32> {
        let mut path: Vec<u32> = stack.iter().skip(1).map(|f| f.chosen).collect();
        if let Some(top) = stack.last() {
            path.push(top.cands[top.next]);
        }
        path
    }

    /// Rebuilds the stack so that the next visited node is `frontier`.
    fn replay(&self, frontier: &[u32]) -> Result<Vec<Frame>> {
        let mut stack = vec![self.root()];
        let bad = |i: u32| Error::Checkpoint(format!("frontier index {i} is not admissible here"));
        let Some((last, path)) = frontier.split_last() else {
            return Ok(stack);
        };
        if frontier.len() >= self.cfg.k {
            return Err(Error::Checkpoint(
                "frontier deeper than the search tree".into(),
            ));
        }
        for &i in path {
            let top = stack.last_mut().expect("nonempty");
            let pos = top
                .cands
                .iter()
                .position(|&c| c == i)
                .ok_or_else(|| bad(i))?;
            top.next = pos + 1;
            let child = self.child(top);
            stack.push(child);
        }
        let top = stack.last_mut().expect("nonempty");
        top.next = top
            .cands
            .iter()
            .position(|&c| c == *last)
            .ok_or_else(|| bad(*last))?;
        Ok(stack)
    }

    fn run(&self, ckpt: Option<&Checkpoint>) -> Result<SearchOutcome> {
        let parallel =
            self.cfg.parallel_width > 1 && self.cfg.node_budget.is_none() && ckpt.is_none();
        if parallel {
            return self.run_parallel();
        }
        let mut progress = Progress::default();
        let mut stack = match ckpt {
            Some(c) => {
                progress.nodes = c.nodes_visited;
                progress.hits = c.found.clone();
                for rows in &c.found {
                    if rows.iter().any(|&i| i as usize >= self.cands.len()) {
                        return Err(Error::Checkpoint("found row index out of range".into()));
                    }
                }
                if c.is_complete() {
                    Vec::new()
                } else {
                    self.replay(&c.frontier)?
                }
            }
            None => vec![self.root()],
        };
        // The budget applies to this run, not to the total carried over.
        let limit = self
            .cfg
            .node_budget
            .map(|b| progress.nodes.saturating_add(b));
        let stop = self.dfs(&mut stack, 0, &mut progress, limit, &|| false);
        let frontier = match stop {
            Stop::Budget => Searcher::frontier(&stack),
            _ => Vec::new(),
        };
        Ok(self.outcome(progress, matches!(stop, Stop::Exhausted), frontier))
    }

    fn run_parallel(&self) -> Result<SearchOutcome> {
        let root = self.root();
        let best = AtomicUsize::new(usize::MAX);
        let first_hit = self.cfg.mode == SearchMode::FirstHit;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.cfg.parallel_width)
            .build()
            .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
        let branches: Vec<(Progress, Stop)> = pool.install(|| {
            (0..root.cands.len())
                .into_par_iter()
                .map(|b| {
                    let mut progress = Progress::default();
                    if first_hit && b > best.load(Ordering::Relaxed) {
                        return (progress, Stop::Cancelled);
                    }
                    let mut top = Frame {
                        state: root.state.clone(),
                        cands: root.cands.clone(),
                        next: b + 1,
                        chosen: root.chosen,
                    };
                    progress.nodes += 1;
                    let mut stack = if self.cfg.k == 2 {
                        let rows = vec![root.chosen, root.cands[b]];
                        if self.is_lcd(&rows) {
                            progress.hits.push(rows);
                        }
                        top.next = top.cands.len();
                        vec![top]
                    } else {
                        let child = self.child(&top);
                        vec![top, child]
                    };
                    let cancel = || first_hit && b > best.load(Ordering::Relaxed);
                    let stop = if progress.hits.is_empty() {
                        self.dfs(&mut stack, 1, &mut progress, None, &cancel)
                    } else {
                        Stop::FirstHit
                    };
                    let stop = match stop {
                        Stop::FirstHit if !first_hit => Stop::Exhausted,
                        s => s,
                    };
                    if matches!(stop, Stop::FirstHit) {
                        best.fetch_min(b, Ordering::Relaxed);
                    }
                    (progress, stop)
                })
                .collect()
        });
        let mut total = Progress::default();
        let mut complete = true;
        for (p, stop) in branches {
            total.nodes += p.nodes;
            match stop {
                Stop::FirstHit => {
                    total.hits.extend(p.hits);
                    complete = false;
                    break;
                }
                Stop::Exhausted => total.hits.extend(p.hits),
                Stop::Cancelled | Stop::Budget => complete = false,
            }
        }
        Ok(self.outcome(total, complete, Vec::new()))
    }

    fn outcome(&self, progress: Progress, complete: bool, frontier: Vec<u32>) -> SearchOutcome {
        let found = progress.hits.iter().map(|r| self.code(r)).collect();
        SearchOutcome {
            config: self.cfg.clone(),
            found,
            found_rows: progress.hits,
            nodes_visited: progress.nodes,
            complete,
            frontier,
        }
    }
}
