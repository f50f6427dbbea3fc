//! Barrier-phase execution of per-task programs.
//!
//! A [`PhaseProgram`] is a sequence of phases, each running one task per
//! index `0..task_count`. Within a phase every task reads the state as it
//! was when the phase began; writes go to a [`WriteSet`] and become visible
//! only after all tasks of the phase finished. Concurrent writes to one cell
//! are resolved by the configured [`Arbitration`], so a run is a function of
//! the program, the initial state and the arbitration, never of scheduling.
//!
//! Tasks are split into contiguous chunks over a pool of scoped threads that
//! meet at a barrier after every phase. Worker 0 merges the write sets,
//! applies the winners and runs the program's phase hook while the others
//! wait at a second barrier. With one worker everything runs inline.

use std::any::Any;
use std::collections::hash_map::Entry;
use std::fmt;
use std::hash::Hash;
use std::ops::Range;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Barrier, Mutex, RwLock};

use rustc_hash::{FxHashMap, FxHashSet};
use thiserror::Error;

use super::arbitration::{beats, Arbiter, Arbitration};

/// Environment variable read for the worker count when none is configured.
pub const WORKERS_ENV: &str = "CHORDAL_WORKERS";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("task {task} panicked in phase {phase}: {message}")]
    TaskPanicked { phase: usize, task: usize, message: String },
    #[error("invariant violated after phase {phase}: {message}")]
    InvariantViolated { phase: usize, message: String },
}

pub trait PhaseProgram: Sync {
    type State: Send + Sync;
    /// Per-worker scratch space, reused across tasks and phases.
    type Local: Send;
    type Cell: Copy + Eq + Hash + Send + fmt::Debug;
    type Value: Clone + PartialEq + Send + fmt::Debug;

    fn phase_count(&self) -> usize;
    fn task_count(&self) -> usize;
    fn init_local(&self) -> Self::Local;

    fn run_task(
        &self,
        phase: usize,
        task: usize,
        state: &Self::State,
        local: &mut Self::Local,
        out: &mut WriteSet<Self::Cell, Self::Value>,
    );

    fn apply(&self, state: &mut Self::State, cell: Self::Cell, value: Self::Value);

    /// Runs after the writes of `phase` were applied. An error ends the run
    /// with [`EngineError::InvariantViolated`].
    fn after_phase(
        &self,
        _phase: usize,
        _state: &mut Self::State,
        _report: &PhaseReport<Self::Cell, Self::Value>,
    ) -> Result<(), String> {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    pub arbitration: Arbitration,
    pub workers: usize,
    /// Record every shared write so phase hooks can inspect all candidates,
    /// and reject task-private cells written by more than one task.
    pub audit: bool,
}

impl EngineConfig {
    pub fn new(arbitration: Arbitration) -> Self {
        Self {
            arbitration,
            workers: default_workers(),
            audit: false,
        }
    }
}

/// Worker count from `CHORDAL_WORKERS`, else the available parallelism.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

#[derive(Debug, Clone)]
struct Candidate<V> {
    priority: u64,
    writer: usize,
    value: V,
}

/// Writes issued by the tasks of one worker during one phase.
pub struct WriteSet<C, V> {
    arbiter: Arbiter,
    task: usize,
    shared: FxHashMap<C, Candidate<V>>,
    private: Vec<(C, usize, V)>,
    log: Option<Vec<(C, usize, V)>>,
}

impl<C: Copy + Eq + Hash, V: Clone> WriteSet<C, V> {
    fn new(arbitration: Arbitration, audit: bool) -> Self {
        Self {
            arbiter: Arbiter::new(arbitration, 0),
            task: 0,
            shared: FxHashMap::default(),
            private: Vec::new(),
            log: audit.then(Vec::new),
        }
    }

    fn begin(&mut self, arbitration: Arbitration, phase: usize) {
        self.arbiter = Arbiter::new(arbitration, phase);
        self.shared.clear();
        self.private.clear();
        if let Some(log) = &mut self.log {
            log.clear();
        }
    }

    /// The task currently writing.
    pub fn task(&self) -> usize {
        self.task
    }

    /// Write to a cell other tasks may write in the same phase.
    #[inline]
    pub fn write(&mut self, cell: C, value: V) {
        let writer = self.task;
        if let Some(log) = &mut self.log {
            log.push((cell, writer, value.clone()));
        }
        let priority = self.arbiter.priority(&cell, writer);
        self.offer(
            cell,
            Candidate {
                priority,
                writer,
                value,
            },
        );
    }

    /// Write to a cell owned by the current task; no other task may write it
    /// in the same phase.
    #[inline]
    pub fn write_private(&mut self, cell: C, value: V) {
        self.private.push((cell, self.task, value));
    }

    fn offer(&mut self, cell: C, candidate: Candidate<V>) {
        match self.shared.entry(cell) {
            Entry::Vacant(e) => {
                e.insert(candidate);
            }
            Entry::Occupied(mut e) => {
                let held = e.get();
                if beats(candidate.priority, candidate.writer, held.priority, held.writer) {
                    e.insert(candidate);
                }
            }
        }
    }

    fn absorb(&mut self, other: &mut Self) {
        for (cell, candidate) in other.shared.drain() {
            self.offer(cell, candidate);
        }
        self.private.append(&mut other.private);
        if let (Some(log), Some(other_log)) = (&mut self.log, &mut other.log) {
            log.append(other_log);
        }
    }
}

/// What a phase wrote, handed to [`PhaseProgram::after_phase`].
#[derive(Debug)]
pub struct PhaseReport<C, V> {
    pub phase: usize,
    /// Every applied cell with the task whose value won.
    pub applied: Vec<(C, usize)>,
    /// In audit mode, all shared writes per cell, ordered by writer.
    pub candidates: Option<FxHashMap<C, Vec<(usize, V)>>>,
}

impl<C: Eq + Hash, V> PhaseReport<C, V> {
    pub fn candidates_for(&self, cell: &C) -> &[(usize, V)] {
        self.candidates
            .as_ref()
            .and_then(|c| c.get(cell))
            .map_or(&[], |v| v.as_slice())
    }
}

/// Runs every phase of `program` on `state`.
pub fn run_phase_program<P: PhaseProgram>(
    program: &P,
    state: P::State,
    config: &EngineConfig,
) -> Result<P::State, EngineError> {
    let tasks = program.task_count();
    let workers = config.workers.clamp(1, tasks.max(1));
    if workers == 1 {
        run_inline(program, state, config)
    } else {
        run_pooled(program, state, config, workers)
    }
}

fn run_inline<P: PhaseProgram>(
    program: &P,
    mut state: P::State,
    config: &EngineConfig,
) -> Result<P::State, EngineError> {
    let mut writes = WriteSet::new(config.arbitration, config.audit);
    let mut local = program.init_local();
    for phase in 0..program.phase_count() {
        writes.begin(config.arbitration, phase);
        run_chunk(program, phase, 0..program.task_count(), &state, &mut local, &mut writes)?;
        finish_phase(program, phase, &mut state, &mut writes, config.audit)?;
    }
    Ok(state)
}

fn run_pooled<P: PhaseProgram>(
    program: &P,
    state: P::State,
    config: &EngineConfig,
    workers: usize,
) -> Result<P::State, EngineError> {
    let tasks = program.task_count();
    let phases = program.phase_count();
    let state = RwLock::new(state);
    let slots: Vec<Mutex<WriteSet<P::Cell, P::Value>>> = (0..workers)
        .map(|_| Mutex::new(WriteSet::new(config.arbitration, config.audit)))
        .collect();
    let barrier = Barrier::new(workers);
    let stop = AtomicBool::new(false);
    let failure: Mutex<Option<EngineError>> = Mutex::new(None);

    let work = |w: usize| {
        let mut local = program.init_local();
        let range = w * tasks / workers..(w + 1) * tasks / workers;
        for phase in 0..phases {
            {
                let st = state.read().expect("state lock is never poisoned");
                let mut writes = slots[w].lock().expect("slot lock is never poisoned");
                writes.begin(config.arbitration, phase);
                if let Err(e) = run_chunk(program, phase, range.clone(), &st, &mut local, &mut writes) {
                    record_failure(&failure, e);
                }
            }
            barrier.wait();
            if w == 0 {
                let mut failed = failure.lock().expect("failure lock is never poisoned").is_some();
                if !failed {
                    let mut st = state.write().expect("state lock is never poisoned");
                    let mut guards: Vec<_> = slots
                        .iter()
                        .map(|s| s.lock().expect("slot lock is never poisoned"))
                        .collect();
                    let (first, rest) = guards.split_first_mut().expect("at least one worker");
                    for other in rest {
                        first.absorb(other);
                    }
                    if let Err(e) = finish_phase(program, phase, &mut st, first, config.audit) {
                        record_failure(&failure, e);
                        failed = true;
                    }
                }
                if failed {
                    stop.store(true, Ordering::SeqCst);
                }
            }
            barrier.wait();
            if stop.load(Ordering::SeqCst) {
                break;
            }
        }
    };

    std::thread::scope(|scope| {
        for w in 1..workers {
            let work = &work;
            scope.spawn(move || work(w));
        }
        work(0);
    });

    if let Some(e) = failure.into_inner().expect("failure lock is never poisoned") {
        return Err(e);
    }
    Ok(state.into_inner().expect("state lock is never poisoned"))
}

/// Keeps the failure of the lowest task so pooled runs report the same
/// error as inline ones.
fn record_failure(slot: &Mutex<Option<EngineError>>, e: EngineError) {
    let mut slot = slot.lock().expect("failure lock is never poisoned");
    let replace = match (&*slot, &e) {
        (None, _) => true,
        (Some(EngineError::TaskPanicked { task: held, .. }), EngineError::TaskPanicked { task, .. }) => task < held,
        _ => false,
    };
    if replace {
        *slot = Some(e);
    }
}

fn run_chunk<P: PhaseProgram>(
    program: &P,
    phase: usize,
    range: Range<usize>,
    state: &P::State,
    local: &mut P::Local,
    writes: &mut WriteSet<P::Cell, P::Value>,
) -> Result<(), EngineError> {
    let mut current = range.start;
    let outcome = catch_unwind(AssertUnwindSafe(|| {
        for task in range {
            current = task;
            writes.task = task;
            program.run_task(phase, task, state, local, writes);
        }
    }));
    outcome.map_err(|payload| EngineError::TaskPanicked {
        phase,
        task: current,
        message: panic_message(payload.as_ref()),
    })
}

fn panic_message(payload: &(dyn Any + Send)) -> String {
    if let Some(s) = payload.downcast_ref::<&str>() {
        (*s).to_string()
    } else if let Some(s) = payload.downcast_ref::<String>() {
        s.clone()
    } else {
        "non-string panic payload".to_string()
    }
}

fn finish_phase<P: PhaseProgram>(
    program: &P,
    phase: usize,
    state: &mut P::State,
    writes: &mut WriteSet<P::Cell, P::Value>,
    audit: bool,
) -> Result<(), EngineError> {
    let candidates = match writes.log.as_mut() {
        Some(log) => {
            let mut grouped: FxHashMap<P::Cell, Vec<(usize, P::Value)>> = FxHashMap::default();
            for (cell, writer, value) in log.drain(..) {
                grouped.entry(cell).or_default().push((writer, value));
            }
            for list in grouped.values_mut() {
                list.sort_by_key(|(writer, _)| *writer);
            }
            Some(grouped)
        }
        None => None,
    };
    if audit {
        let mut owned: FxHashSet<P::Cell> = FxHashSet::default();
        for (cell, writer, _) in &writes.private {
            if !owned.insert(*cell) || writes.shared.contains_key(cell) {
                return Err(EngineError::InvariantViolated {
                    phase,
                    message: format!("private cell {cell:?} written by task {writer} is also written elsewhere"),
                });
            }
        }
    }
    let mut applied = Vec::with_capacity(writes.shared.len() + writes.private.len());
    for (cell, candidate) in writes.shared.drain() {
        applied.push((cell, candidate.writer));
        program.apply(state, cell, candidate.value);
    }
    for (cell, writer, value) in writes.private.drain(..) {
        applied.push((cell, writer));
        program.apply(state, cell, value);
    }
    let report = PhaseReport {
        phase,
        applied,
        candidates,
    };
    program
        .after_phase(phase, state, &report)
        .map_err(|message| EngineError::InvariantViolated { phase, message })
}
