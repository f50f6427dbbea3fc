//! Parallel LexBFS as four barrier phases per iteration.
//!
//! The unnumbered vertices are grouped into sets of equal label, linked by
//! `next` in ascending label order, so the last set holds the vertices of
//! largest label. Iteration `t` (1-based) numbers `current` and runs, with
//! one task per vertex `x`:
//!
//! 1. Active `x` saves `old_next = next(set(x))`, resets `counter(set(x))`
//!    and receives the fresh set id `t·n + x` as `new_next`. `current`
//!    records itself in the order and deactivates.
//! 2. Active neighbors of `current` link their `new_next` after their set.
//!    Several members of one set race; one insertion wins and the other
//!    fresh ids are never linked.
//! 3. Active neighbors of `current` move to `next(set(x))`, the winning new
//!    set. Every active `x` marks its set nonempty in `counter` and saves the
//!    successor of its set in `old_next`.
//! 4. Active `x` bypasses an empty successor, then claims `current` if its
//!    set is now last. All claimants share one set, so the race is benign.
//!
//! Step 4 follows the prose of the algorithm: it bypasses when
//! `counter(old_next) = 0`, as the pseudocode's test of the vertex's own
//! counter would always read 1 right after step 3.
//!
//! Set ids come from an `(n + 1) × n` table: id 0 is the initial set and
//! iteration `t` owns ids `t·n .. t·n + n`. Ids are never reused. `next` is a
//! flat array of that size, or a hash map when it would exceed
//! [`ParallelConfig::flat_table_limit`]. `counter` is a bit table of the same
//! shape, or, with [`ParallelConfig::reuse_adjacency`], lives in a working
//! copy of the adjacency matrix: the row of the vertex numbered in iteration
//! `t` is never read again as adjacency once step 3 of that iteration read
//! it, so it holds the counters of the ids of iteration `t`.

use rustc_hash::{FxHashMap, FxHashSet};

use super::engine::{run_phase_program, PhaseProgram, PhaseReport, WriteSet};
use super::ParallelConfig;
use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::search::LexLabel;

const NULL: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetListCell {
    Next(u32),
    Counter(u32),
    SetOf(u32),
    Active(u32),
    OldNext(u32),
    NewNext(u32),
    Order(u32),
    Current,
}

enum NextTable {
    /// `id + 1`, so the zero-initialized table starts out all NULL.
    Flat(Vec<u32>),
    Hashed(FxHashMap<u32, u32>),
}

impl NextTable {
    fn new(ids: usize, flat_limit: usize) -> Self {
        if ids <= flat_limit {
            Self::Flat(vec![0; ids])
        } else {
            Self::Hashed(FxHashMap::default())
        }
    }

    #[inline]
    fn get(&self, id: u32) -> u32 {
        match self {
            Self::Flat(table) => table[id as usize].wrapping_sub(1),
            Self::Hashed(map) => map.get(&id).copied().unwrap_or(NULL),
        }
    }

    fn set(&mut self, id: u32, next: u32) {
        match self {
            Self::Flat(table) => table[id as usize] = next.wrapping_add(1),
            Self::Hashed(map) => {
                if next == NULL {
                    map.remove(&id);
                } else {
                    map.insert(id, next);
                }
            }
        }
    }
}

enum CounterTable {
    Flat(BitMatrix),
    AdjacencyRows { initial: bool, adjacency: BitMatrix },
}

/// The list of labeled sets and the per-vertex bookkeeping.
pub struct SetList {
    n: usize,
    next: NextTable,
    counter: CounterTable,
    set_of: Vec<u32>,
    active: Vec<bool>,
    old_next: Vec<u32>,
    new_next: Vec<u32>,
    current: u32,
    order: Vec<u32>,
    audit: Option<Box<SetListAudit>>,
}

impl SetList {
    fn new(g: &Graph, config: &ParallelConfig) -> Self {
        let n = g.vertex_count();
        let counter = if config.reuse_adjacency {
            CounterTable::AdjacencyRows {
                initial: false,
                adjacency: g.adjacency_matrix().clone(),
            }
        } else {
            CounterTable::Flat(BitMatrix::new(n + 1, n))
        };
        Self {
            n,
            next: NextTable::new((n + 1) * n, config.flat_table_limit),
            counter,
            set_of: vec![0; n],
            active: vec![true; n],
            old_next: vec![NULL; n],
            new_next: vec![NULL; n],
            current: 0,
            order: vec![NULL; n],
            audit: config.audit.then(|| Box::new(SetListAudit::new(n))),
        }
    }

    #[inline]
    fn counter(&self, id: u32) -> bool {
        let (row, col) = self.counter_slot(id);
        match &self.counter {
            CounterTable::Flat(bits) => bits.get(row, col),
            CounterTable::AdjacencyRows { initial, adjacency } => {
                if id == 0 {
                    *initial
                } else {
                    adjacency.get(row, col)
                }
            }
        }
    }

    fn set_counter(&mut self, id: u32, value: bool) {
        let (row, col) = self.counter_slot(id);
        match &mut self.counter {
            CounterTable::Flat(bits) => bits.set(row, col, value),
            CounterTable::AdjacencyRows { initial, adjacency } => {
                if id == 0 {
                    *initial = value;
                } else {
                    adjacency.set(row, col, value);
                }
            }
        }
    }

    /// Where the counter of `id` lives: `(t, x)` in the flat table, or the
    /// adjacency row of the vertex numbered in iteration `t`.
    #[inline]
    fn counter_slot(&self, id: u32) -> (usize, usize) {
        let (t, x) = (id as usize / self.n, id as usize % self.n);
        match self.counter {
            CounterTable::Flat(_) => (t, x),
            CounterTable::AdjacencyRows { .. } if t == 0 => (0, 0),
            CounterTable::AdjacencyRows { .. } => (self.order[t - 1] as usize, x),
        }
    }

    fn into_adjacency(self) -> Option<BitMatrix> {
        match self.counter {
            CounterTable::AdjacencyRows { adjacency, .. } => Some(adjacency),
            CounterTable::Flat(_) => None,
        }
    }
}

/// Counts of what an audited run checked.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AuditSummary {
    pub iterations: usize,
    pub sets_inserted: usize,
    /// Iterations in which more than one vertex claimed `current`.
    pub contested_current: usize,
    /// Empty sets found on the list after step 3 (each must be followed by
    /// a nonempty one).
    pub empty_sets_seen: usize,
}

/// Shadow state for audited runs: a label for every linked set and the
/// label each vertex would carry in sequential LexBFS.
struct SetListAudit {
    set_labels: FxHashMap<u32, LexLabel>,
    vertex_labels: Vec<LexLabel>,
    allocated: FxHashSet<u32>,
    head: u32,
    summary: AuditSummary,
}

impl SetListAudit {
    fn new(n: usize) -> Self {
        let mut set_labels = FxHashMap::default();
        set_labels.insert(0, LexLabel::new());
        Self {
            set_labels,
            vertex_labels: vec![LexLabel::new(); n],
            allocated: FxHashSet::default(),
            head: 0,
            summary: AuditSummary::default(),
        }
    }
}

struct LexBfsProgram<'g> {
    graph: &'g Graph,
    n: usize,
}

impl LexBfsProgram<'_> {
    #[inline]
    fn adjacent(&self, st: &SetList, u: usize, v: usize) -> bool {
        match &st.counter {
            CounterTable::AdjacencyRows { adjacency, .. } => adjacency.get(u, v),
            CounterTable::Flat(_) => self.graph.is_adjacent(u, v),
        }
    }
}

type Out = WriteSet<SetListCell, u32>;

impl PhaseProgram for LexBfsProgram<'_> {
    type State = SetList;
    type Local = ();
    type Cell = SetListCell;
    type Value = u32;

    fn phase_count(&self) -> usize {
        4 * self.n
    }

    fn task_count(&self) -> usize {
        self.n
    }

    fn init_local(&self) {}

    fn run_task(&self, phase: usize, x: usize, st: &SetList, _: &mut (), out: &mut Out) {
        use SetListCell::*;
        if !st.active[x] {
            return;
        }
        let t = phase / 4 + 1;
        let xi = x as u32;
        let current = st.current as usize;
        match phase % 4 {
            0 => {
                let s = st.set_of[x];
                out.write_private(OldNext(xi), st.next.get(s));
                out.write(Counter(s), 0);
                out.write_private(NewNext(xi), (t * self.n + x) as u32);
                if x == current {
                    out.write_private(Order(t as u32 - 1), xi);
                    out.write_private(Active(xi), 0);
                    out.write_private(SetOf(xi), NULL);
                }
            }
            1 => {
                if self.adjacent(st, current, x) {
                    out.write(Next(st.set_of[x]), st.new_next[x]);
                    out.write_private(Next(st.new_next[x]), st.old_next[x]);
                }
            }
            2 => {
                let mut s = st.set_of[x];
                if self.adjacent(st, current, x) {
                    s = st.next.get(s);
                    out.write_private(SetOf(xi), s);
                }
                out.write(Counter(s), 1);
                out.write_private(OldNext(xi), st.next.get(s));
            }
            _ => {
                let s = st.set_of[x];
                let mut next = st.next.get(s);
                let old = st.old_next[x];
                if old != NULL && !st.counter(old) {
                    next = st.next.get(old);
                    out.write(Next(s), next);
                }
                if next == NULL {
                    out.write(Current, xi);
                }
            }
        }
    }

    fn apply(&self, st: &mut SetList, cell: SetListCell, value: u32) {
        use SetListCell::*;
        match cell {
            Next(id) => st.next.set(id, value),
            Counter(id) => st.set_counter(id, value != 0),
            SetOf(x) => st.set_of[x as usize] = value,
            Active(x) => st.active[x as usize] = value != 0,
            OldNext(x) => st.old_next[x as usize] = value,
            NewNext(x) => st.new_next[x as usize] = value,
            Order(i) => st.order[i as usize] = value,
            Current => st.current = value,
        }
    }

    fn after_phase(
        &self,
        phase: usize,
        st: &mut SetList,
        report: &PhaseReport<SetListCell, u32>,
    ) -> Result<(), String> {
        let t = phase / 4 + 1;
        let kernel = phase % 4;
        if kernel == 3 && t < self.n && !report.applied.iter().any(|(c, _)| *c == SetListCell::Current) {
            return Err(format!("no vertex claimed current in iteration {t}"));
        }
        if st.audit.is_some() {
            match kernel {
                0 => audit_after_create(st, report),
                1 => audit_after_insert(st, report, self, t),
                2 => audit_after_move(st, report),
                _ => audit_after_bypass(st, report, t),
            }?;
        }
        Ok(())
    }
}

fn all_candidates_equal(report: &PhaseReport<SetListCell, u32>, expected: u32) -> Result<(), String> {
    if let Some(candidates) = &report.candidates {
        for (cell, writes) in candidates {
            if let SetListCell::Counter(id) = cell {
                if let Some((writer, value)) = writes.iter().find(|(_, v)| *v != expected) {
                    return Err(format!(
                        "task {writer} wrote {value} to counter of set {id}, expected {expected}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn audit_after_create(st: &mut SetList, report: &PhaseReport<SetListCell, u32>) -> Result<(), String> {
    all_candidates_equal(report, 0)?;
    let audit = st.audit.as_mut().expect("audit enabled");
    for (cell, _) in &report.applied {
        if let SetListCell::NewNext(x) = cell {
            let id = st.new_next[*x as usize];
            if !audit.allocated.insert(id) {
                return Err(format!("set id {id} allocated twice"));
            }
        }
    }
    Ok(())
}

/// Walks the list from the audit head, returning the sets in order.
fn chain(st: &SetList, head: u32) -> Result<Vec<u32>, String> {
    let mut sets = Vec::new();
    let mut s = head;
    let limit = st.audit.as_ref().map_or(0, |a| a.set_labels.len());
    while s != NULL {
        if sets.len() > limit {
            return Err("the set list has a cycle".into());
        }
        sets.push(s);
        s = st.next.get(s);
    }
    Ok(sets)
}

fn audit_after_insert(
    st: &mut SetList,
    report: &PhaseReport<SetListCell, u32>,
    program: &LexBfsProgram<'_>,
    t: usize,
) -> Result<(), String> {
    let n = st.n;
    let digit = n - t;
    let current = st.current as usize;
    let neighbors: Vec<usize> = (0..n)
        .filter(|&y| st.active[y] && program.adjacent(st, current, y))
        .collect();
    let mut inserted = Vec::new();
    for (cell, _) in &report.applied {
        if let SetListCell::Next(s) = *cell {
            let new = st.next.get(s);
            if (s as usize) / n < t && new != NULL && (new as usize) / n == t {
                inserted.push((s, new));
            }
        }
    }
    let audit = st.audit.as_mut().expect("audit enabled");
    for y in neighbors {
        audit.vertex_labels[y].push(digit).map_err(|e| e.0)?;
    }
    for (s, new) in inserted {
        let label = audit
            .set_labels
            .get(&s)
            .ok_or_else(|| format!("set {s} gained a successor but was never linked"))?
            .extended(digit)
            .map_err(|e| e.0)?;
        if audit.set_labels.insert(new, label).is_some() {
            return Err(format!("set {new} linked twice"));
        }
        audit.summary.sets_inserted += 1;
    }
    let head = audit.head;
    let sets = chain(st, head)?;
    let audit = st.audit.as_ref().expect("audit enabled");
    let mut previous: Option<&LexLabel> = None;
    for s in sets {
        let label = audit
            .set_labels
            .get(&s)
            .ok_or_else(|| format!("unlabelled set {s} on the list"))?;
        if previous.is_some_and(|p| p >= label) {
            return Err(format!("labels not ascending at set {s} with label {label}"));
        }
        previous = Some(label);
    }
    Ok(())
}

fn members_per_set(st: &SetList) -> FxHashMap<u32, Vec<usize>> {
    let mut members: FxHashMap<u32, Vec<usize>> = FxHashMap::default();
    for x in (0..st.n).filter(|&x| st.active[x]) {
        members.entry(st.set_of[x]).or_default().push(x);
    }
    members
}

fn audit_after_move(st: &mut SetList, report: &PhaseReport<SetListCell, u32>) -> Result<(), String> {
    all_candidates_equal(report, 1)?;
    let members = members_per_set(st);
    let audit = st.audit.as_ref().expect("audit enabled");
    for (s, xs) in &members {
        let label = audit
            .set_labels
            .get(s)
            .ok_or_else(|| format!("vertices moved into unlinked set {s}"))?;
        if let Some(&x) = xs.iter().find(|&&x| audit.vertex_labels[x] != *label) {
            return Err(format!(
                "vertex {x} has label {} but sits in set {s} labelled {label}",
                audit.vertex_labels[x]
            ));
        }
    }
    let sets = chain(st, audit.head)?;
    let mut empties = 0;
    for pair in sets.windows(2) {
        if !members.contains_key(&pair[0]) {
            empties += 1;
            if !members.contains_key(&pair[1]) {
                return Err(format!("empty set {} is followed by empty set {}", pair[0], pair[1]));
            }
        }
    }
    if sets.last().is_some_and(|s| !members.contains_key(s)) {
        empties += 1;
    }
    st.audit.as_mut().expect("audit enabled").summary.empty_sets_seen += empties;
    Ok(())
}

fn audit_after_bypass(st: &mut SetList, report: &PhaseReport<SetListCell, u32>, t: usize) -> Result<(), String> {
    let claimants = report.candidates_for(&SetListCell::Current);
    if let Some((first, _)) = claimants.first() {
        let set = st.set_of[*first];
        if let Some((other, _)) = claimants.iter().find(|(w, _)| st.set_of[*w] != set) {
            return Err(format!(
                "vertices {first} and {other} both claimed current from different sets"
            ));
        }
    }
    let members = members_per_set(st);
    let mut head = st.audit.as_ref().expect("audit enabled").head;
    while head != NULL && !members.contains_key(&head) {
        head = st.next.get(head);
    }
    let sets = chain(st, head)?;
    if let Some(s) = sets.iter().find(|s| !members.contains_key(s)) {
        return Err(format!("empty set {s} is still reachable after bypassing"));
    }
    if sets.len() != members.len() {
        return Err(format!(
            "list reaches {} sets but active vertices occupy {}",
            sets.len(),
            members.len()
        ));
    }
    let audit = st.audit.as_mut().expect("audit enabled");
    audit.head = head;
    if !members.is_empty() {
        let current = st.current as usize;
        if sets.last() != Some(&st.set_of[current]) {
            return Err(format!("current {current} is not in the last set"));
        }
        let best = &audit.vertex_labels[current];
        if let Some(y) = (0..st.n).find(|&y| st.active[y] && audit.vertex_labels[y] > *best) {
            return Err(format!("vertex {y} has a larger label than current {current}"));
        }
    }
    if claimants.len() > 1 {
        audit.summary.contested_current += 1;
    }
    audit.summary.iterations = t;
    Ok(())
}

/// A parallel LexBFS ordering with run details.
#[derive(Debug)]
pub struct LexBfsRun {
    pub order: VertexOrdering,
    /// Present for audited runs.
    pub audit: Option<AuditSummary>,
    /// The working adjacency copy when counters reused it; its contents no
    /// longer match the graph.
    pub(crate) clobbered_adjacency: Option<BitMatrix>,
}

/// Parallel LexBFS starting at vertex 0.
pub fn parallel_lexbfs(g: &Graph, config: &ParallelConfig) -> Result<VertexOrdering> {
    parallel_lexbfs_run(g, config).map(|run| run.order)
}

pub fn parallel_lexbfs_run(g: &Graph, config: &ParallelConfig) -> Result<LexBfsRun> {
    let n = g.vertex_count();
    if (n + 1).saturating_mul(n) > u32::MAX as usize {
        return Err(Error::GraphTooLarge { n, limit: 65_535 });
    }
    let program = LexBfsProgram { graph: g, n };
    let state = run_phase_program(&program, SetList::new(g, config), &config.engine())?;
    let order = VertexOrdering::new(state.order.iter().map(|&v| v as usize).collect())
        .map_err(|e| Error::InvalidOrdering(format!("parallel LexBFS produced a non-permutation: {e}")))?;
    let audit = state.audit.as_ref().map(|a| a.summary);
    Ok(LexBfsRun {
        order,
        audit,
        clobbered_adjacency: state.into_adjacency(),
    })
}
