//! Isomorph-free generation of k-regular graphs.
//!
//! Rows of the adjacency matrix are filled in order. Before row `r` is chosen,
//! the undecided vertices `r+1..n` fall into classes of vertices with identical
//! adjacency to rows `0..r`; every class is a contiguous label interval and the
//! vertices of a class are interchangeable, so row `r` only ever takes a prefix
//! of each class. Every labelled k-regular graph is isomorphic to at least one
//! leaf of this search, and leaves are deduplicated by canonical form.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm, MAX_CANON_ORDER};
use crate::error::{Error, Result};
use crate::graph::{full_mask, Graph};

/// Smallest order the generator accepts.
pub const MIN_GEN_ORDER: usize = 1;

/// Validates an `(n, k)` request.
pub fn check_request(n: usize, k: usize) -> Result<()> {
    let bad = |reason: &str| Err(Error::BadSweep { n, k, reason: reason.to_string() });
    if !(MIN_GEN_ORDER..=MAX_CANON_ORDER).contains(&n) {
        return bad("order must lie in 1..=16");
    }
    if k >= n {
        return bad("valency must be below the order");
    }
    if n * k % 2 == 1 {
        return bad("n*k must be even");
    }
    Ok(())
}

/// Options for [`generate_regular_with`].
#[derive(Clone, Copy, Debug)]
pub struct GenOptions {
    pub connected_only: bool,
    /// Worker threads; `0` uses the global rayon pool.
    pub jobs: usize,
    /// Generate `(n-1-k)`-regular graphs and complement them when that is the
    /// smaller valency.
    pub complement_shortcut: bool,
}

impl Default for GenOptions {
    fn default() -> Self {
        GenOptions { connected_only: true, jobs: 0, complement_shortcut: true }
    }
}

/// Connected k-regular graphs on `n` vertices, one per isomorphism class,
/// sorted by canonical form.
pub fn generate_regular(n: usize, k: usize) -> Result<Vec<Graph>> {
    generate_regular_with(n, k, GenOptions::default())
}

pub fn generate_regular_with(n: usize, k: usize, opts: GenOptions) -> Result<Vec<Graph>> {
    Ok(generate_forms(n, k, opts)?.into_iter().map(|f| f.to_graph()).collect())
}

/// Canonical forms of the k-regular graphs on `n` vertices, ascending.
pub fn generate_forms(n: usize, k: usize, opts: GenOptions) -> Result<Vec<CanonicalForm>> {
    check_request(n, k)?;
    let co = n - 1 - k;
    if opts.complement_shortcut && co < k {
        // Complements of all (not only connected) co-regular graphs.
        let inner = GenOptions { connected_only: false, ..opts };
        let mut out = BTreeSet::new();
        for f in generate_forms(n, co, inner)? {
            let g = f.to_graph().complement();
            if opts.connected_only && !g.is_connected() {
                continue;
            }
            out.insert(canonical_form(&g)?);
        }
        return Ok(out.into_iter().collect());
    }
    let run = || search(n, k, opts.connected_only);
    let forms = if opts.jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(run)
    };
    Ok(forms)
}

/// All regular graphs of one order, generated lazily per valency.
///
/// Valencies above `(n-1)/2` are served by complementing the cached graphs of
/// the co-valency, so each search runs at most once per catalog.
pub struct RegularCatalog {
    n: usize,
    jobs: usize,
    // Every k-regular graph (connected or not), indexed by k <= (n-1)/2.
    cache: Vec<Option<Vec<CanonicalForm>>>,
}

impl RegularCatalog {
    pub fn new(n: usize, jobs: usize) -> Result<Self> {
        check_request(n, 0)?;
        Ok(RegularCatalog { n, jobs, cache: vec![None; n] })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn all_low(&mut self, k: usize) -> Result<&[CanonicalForm]> {
        if self.cache[k].is_none() {
            let opts = GenOptions { connected_only: false, jobs: self.jobs, complement_shortcut: false };
            self.cache[k] = Some(generate_forms(self.n, k, opts)?);
        }
        Ok(self.cache[k].as_deref().unwrap())
    }

    /// k-regular graphs on `n` vertices as canonical forms, ascending.
    pub fn forms(&mut self, k: usize, connected_only: bool) -> Result<Vec<CanonicalForm>> {
        check_request(self.n, k)?;
        let n = self.n;
        let co = n - 1 - k;
        let mut out: Vec<CanonicalForm> = if co < k {
            let low = self.all_low(co)?.to_vec();
            let mut v = Vec::with_capacity(low.len());
            for f in low {
                let g = f.to_graph().complement();
                if !connected_only || g.is_connected() {
                    v.push(canonical_form(&g)?);
                }
            }
            v
        } else {
            self.all_low(k)?.iter().filter(|f| !connected_only || f.to_graph().is_connected()).copied().collect()
        };
        out.sort();
        Ok(out)
    }
}

#[derive(Clone)]
struct State {
    n: usize,
    k: usize,
    connected_only: bool,
    rows: [u64; MAX_CANON_ORDER],
    deg: [u8; MAX_CANON_ORDER],
}

/// Partial search state at the start of some row, used as a unit of parallel work.
#[derive(Clone)]
struct Task {
    state: State,
    row: usize,
    // Class boundaries over r+1..n: class c is [bounds[c], bounds[c+1]).
    bounds: Vec<usize>,
}

// Rows decided sequentially before work is split among workers.
const SPLIT_DEPTH: usize = 2;

fn search(n: usize, k: usize, connected_only: bool) -> Vec<CanonicalForm> {
    let state = State { n, k, connected_only, rows: [0; MAX_CANON_ORDER], deg: [0; MAX_CANON_ORDER] };
    if n == 1 {
        return vec![canonical_form(&Graph::empty(1).unwrap()).unwrap()];
    }
    let root = Task { state, row: 0, bounds: vec![1, n] };
    let mut tasks = Vec::new();
    expand(root, SPLIT_DEPTH.min(n - 1), &mut |t| tasks.push(t));
    let sets: Vec<BTreeSet<CanonicalForm>> = tasks
        .into_par_iter()
        .map(|t| {
            let mut found = BTreeSet::new();
            expand(t, usize::MAX, &mut |leaf| {
                if let Some(f) = leaf_form(&leaf.state) {
                    found.insert(f);
                }
            });
            found
        })
        .collect();
    let mut all = BTreeSet::new();
    for s in sets {
        all.extend(s);
    }
    all.into_iter().collect()
}

fn leaf_form(s: &State) -> Option<CanonicalForm> {
    let g = Graph::from_rows_unchecked(s.rows[..s.n].to_vec());
    if s.connected_only && !g.is_connected() {
        return None;
    }
    Some(canonical_form(&g).expect("order checked"))
}

/// Runs the row search from `task`, handing each state reached at row
/// `stop_row` (or each complete graph, if earlier) to `emit`.
fn expand(task: Task, stop_row: usize, emit: &mut dyn FnMut(Task)) {
    let Task { mut state, row, bounds } = task;
    let n = state.n;
    if row == n - 1 || row >= stop_row {
        // The last row is forced: all its edges were placed by earlier rows.
        if row == n - 1 && state.deg[row] as usize != state.k {
            return;
        }
        emit(Task { state, row, bounds });
        return;
    }
    let need = state.k - state.deg[row] as usize;
    let nclasses = bounds.len() - 1;
    let mut take = vec![0usize; nclasses];
    choose(&mut state, row, &bounds, &mut take, 0, need, stop_row, emit);
}

#[allow(clippy::too_many_arguments)]
fn choose(
    state: &mut State,
    row: usize,
    bounds: &[usize],
    take: &mut Vec<usize>,
    class: usize,
    need: usize,
    stop_row: usize,
    emit: &mut dyn FnMut(Task),
) {
    let nclasses = bounds.len() - 1;
    if class == nclasses {
        if need == 0 {
            finish_row(state, row, bounds, take, stop_row, emit);
        }
        return;
    }
    // Remaining capacity in later classes bounds how few we may take here.
    let avail = |c: usize| -> usize {
        let v = bounds[c];
        if state.deg[v] as usize >= state.k {
            0
        } else {
            bounds[c + 1] - bounds[c]
        }
    };
    let later: usize = (class + 1..nclasses).map(avail).sum();
    let here = avail(class);
    let lo = need.saturating_sub(later);
    let hi = here.min(need);
    if lo > hi {
        return;
    }
    // Taking more ones earlier first gives a deterministic order; any order works.
    for m in (lo..=hi).rev() {
        take[class] = m;
        choose(state, row, bounds, take, class + 1, need - m, stop_row, emit);
    }
    take[class] = 0;
}

fn finish_row(
    state: &mut State,
    row: usize,
    bounds: &[usize],
    take: &[usize],
    stop_row: usize,
    emit: &mut dyn FnMut(Task),
) {
    let n = state.n;
    let k = state.k;
    let mut next = state.clone();
    let mut new_bounds = Vec::with_capacity(bounds.len() * 2);
    for (c, &m) in take.iter().enumerate() {
        let start = bounds[c];
        let end = bounds[c + 1];
        for v in start..start + m {
            next.rows[row] |= 1 << v;
            next.rows[v] |= 1 << row;
            next.deg[v] += 1;
        }
        next.deg[row] += m as u8;
        new_bounds.push(start);
        if m > 0 && m < end - start {
            new_bounds.push(start + m);
        }
    }
    new_bounds.push(n);
    // Vertices after row+1 must still be able to reach valency k.
    let slots_left = n - row - 2;
    for v in row + 1..n {
        if k - next.deg[v] as usize > slots_left {
            return;
        }
    }
    if next.connected_only && row + 1 < n {
        // Rows 0..=row are complete; if nothing later touches them they form a
        // closed component.
        let done = full_mask(row + 1);
        if (row + 1..n).all(|v| next.rows[v] & done == 0) {
            return;
        }
    }
    // Vertex row+1 leaves the undecided range; it heads the first class.
    debug_assert_eq!(new_bounds[0], row + 1);
    if new_bounds[1] == row + 2 {
        new_bounds.remove(0);
    } else {
        new_bounds[0] = row + 2;
    }
    if new_bounds.len() == 1 {
        // row+1 is the last vertex; keep a well-formed empty class list.
        new_bounds = vec![n];
    }
    expand(Task { state: next, row: row + 1, bounds: new_bounds }, stop_row, emit);
}
