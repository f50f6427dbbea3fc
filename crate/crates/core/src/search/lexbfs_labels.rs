//! LexBFS with one doubly linked list per distinct label.
//!
//! The lists themselves are kept in a doubly linked chain sorted by
//! descending label, so the rank of a list encodes its label and no label is
//! ever materialized. When iteration `i` moves a vertex `y` out of list
//! `L_k`, the list for `k ∘ (n - i)` is created right in front of `L_k`:
//! that label is larger than `k` and smaller than the label of the list in
//! front of `L_k`. Each list remembers the iteration that last split it and
//! the list it split into, so every neighbor move costs O(1).

use super::{with_tie_break, LexLabel, TieBreak, NONE};
use crate::error::InvariantViolation;
use crate::graph::{Graph, VertexOrdering};

/// LexBFS ordering in O(n + m).
pub fn lexbfs_labels(g: &Graph, tie_break: TieBreak) -> VertexOrdering {
    with_tie_break(g, tie_break, |h| run(h, None).expect("unaudited runs never fail"))
}

/// Same as [`lexbfs_labels`], additionally materializing every label and
/// checking after each step that digits descend, the list chain is sorted
/// descending, every vertex sits in the list of its label, and the numbered
/// vertex carries the largest label.
pub fn lexbfs_labels_audited(g: &Graph, tie_break: TieBreak) -> Result<VertexOrdering, InvariantViolation> {
    let mut failure = None;
    let order = with_tie_break(g, tie_break, |h| {
        let mut audit = LabelAudit::new(h.vertex_count());
        match run(h, Some(&mut audit)) {
            Ok(order) => order,
            Err(e) => {
                failure = Some(e);
                Vec::new()
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(order),
    }
}

struct LabelLists {
    prev: Vec<usize>,
    next: Vec<usize>,
    head: Vec<usize>,
    tail: Vec<usize>,
    split_stamp: Vec<usize>,
    split_into: Vec<usize>,
    first: usize,
    vprev: Vec<usize>,
    vnext: Vec<usize>,
    list_of: Vec<usize>,
}

impl LabelLists {
    fn new(n: usize) -> Self {
        let mut lists = Self {
            prev: Vec::new(),
            next: Vec::new(),
            head: Vec::new(),
            tail: Vec::new(),
            split_stamp: Vec::new(),
            split_into: Vec::new(),
            first: NONE,
            vprev: vec![NONE; n],
            vnext: vec![NONE; n],
            list_of: vec![0; n],
        };
        if n > 0 {
            let l = lists.new_list_before(NONE);
            for v in 0..n {
                lists.append(l, v);
            }
        }
        lists
    }

    /// Creates an empty list in front of `at` (at the end when `at` is NONE).
    fn new_list_before(&mut self, at: usize) -> usize {
        let id = self.head.len();
        let before = if at == NONE { NONE } else { self.prev[at] };
        self.prev.push(before);
        self.next.push(at);
        self.head.push(NONE);
        self.tail.push(NONE);
        self.split_stamp.push(NONE);
        self.split_into.push(NONE);
        if before == NONE {
            self.first = id;
        } else {
            self.next[before] = id;
        }
        if at != NONE {
            self.prev[at] = id;
        }
        id
    }

    fn unlink_list(&mut self, l: usize) {
        let (p, q) = (self.prev[l], self.next[l]);
        if p == NONE {
            self.first = q;
        } else {
            self.next[p] = q;
        }
        if q != NONE {
            self.prev[q] = p;
        }
    }

    fn append(&mut self, l: usize, v: usize) {
        let t = self.tail[l];
        self.vprev[v] = t;
        self.vnext[v] = NONE;
        if t == NONE {
            self.head[l] = v;
        } else {
            self.vnext[t] = v;
        }
        self.tail[l] = v;
        self.list_of[v] = l;
    }

    /// Removes `v` from its list, unlinking the list when it empties.
    fn remove(&mut self, v: usize) {
        let l = self.list_of[v];
        let (p, q) = (self.vprev[v], self.vnext[v]);
        if p == NONE {
            self.head[l] = q;
        } else {
            self.vnext[p] = q;
        }
        if q == NONE {
            self.tail[l] = p;
        } else {
            self.vprev[q] = p;
        }
        if self.head[l] == NONE {
            self.unlink_list(l);
        }
    }
}

struct LabelAudit {
    list_label: Vec<LexLabel>,
    vertex_label: Vec<LexLabel>,
}

impl LabelAudit {
    fn new(n: usize) -> Self {
        Self {
            list_label: vec![LexLabel::new()],
            vertex_label: vec![LexLabel::new(); n],
        }
    }

    fn check_pick(&self, lists: &LabelLists, x: usize, numbered: &[bool]) -> Result<(), InvariantViolation> {
        let label = &self.vertex_label[x];
        if let Some(y) = (0..numbered.len()).find(|&y| !numbered[y] && self.vertex_label[y] > *label) {
            return Err(InvariantViolation(format!(
                "picked vertex {x} with label {label} while vertex {y} has larger label {}",
                self.vertex_label[y]
            )));
        }
        if self.list_label[lists.list_of[x]] != *label {
            return Err(InvariantViolation(format!(
                "vertex {x} is not in the list of its label"
            )));
        }
        Ok(())
    }

    fn check_lists(&self, lists: &LabelLists) -> Result<(), InvariantViolation> {
        let mut l = lists.first;
        let mut previous: Option<&LexLabel> = None;
        while l != NONE {
            let label = &self.list_label[l];
            if previous.is_some_and(|p| p <= label) {
                return Err(InvariantViolation(format!(
                    "list chain not strictly descending at label {label}"
                )));
            }
            let mut v = lists.head[l];
            while v != NONE {
                if self.vertex_label[v] != *label {
                    return Err(InvariantViolation(format!(
                        "vertex {v} with label {} stored in list labelled {label}",
                        self.vertex_label[v]
                    )));
                }
                v = lists.vnext[v];
            }
            previous = Some(label);
            l = lists.next[l];
        }
        Ok(())
    }
}

fn run(g: &Graph, mut audit: Option<&mut LabelAudit>) -> Result<Vec<usize>, InvariantViolation> {
    let n = g.vertex_count();
    let mut lists = LabelLists::new(n);
    let mut numbered = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for i in 0..n {
        let x = lists.head[lists.first];
        if let Some(a) = audit.as_deref() {
            a.check_pick(&lists, x, &numbered)?;
        }
        lists.remove(x);
        numbered[x] = true;
        order.push(x);
        let digit = n - (i + 1);
        for y in g.neighbors(x) {
            if numbered[y] {
                continue;
            }
            let from = lists.list_of[y];
            if lists.split_stamp[from] != i {
                lists.split_stamp[from] = i;
                lists.split_into[from] = lists.new_list_before(from);
                if let Some(a) = audit.as_deref_mut() {
                    let label = a.list_label[from].extended(digit)?;
                    a.list_label.push(label);
                }
            }
            let to = lists.split_into[from];
            lists.remove(y);
            lists.append(to, y);
            if let Some(a) = audit.as_deref_mut() {
                a.vertex_label[y].push(digit)?;
            }
        }
        if let Some(a) = audit.as_deref() {
            a.check_lists(&lists)?;
        }
    }
    Ok(order)
}
