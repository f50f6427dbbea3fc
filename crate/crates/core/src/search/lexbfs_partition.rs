//! LexBFS by partition refinement.
//!
//! The unnumbered vertices form one doubly linked sequence `V`, cut into
//! classes of consecutive elements. Classes are chained in sequence order and
//! each knows its first and last element. Numbering `x` splits every class
//! `C` that meets `N(x)` into `C ∩ N(x)` followed by the rest, so the class at
//! the front always holds the vertices of largest label.
//!
//! Neighbors are processed in ascending id. With `LowestIndex` the initial
//! sequence is ascending and every class stays ascending, so the output is
//! deterministic.

use super::{with_tie_break, TieBreak, NONE};
use crate::graph::{Graph, VertexOrdering};

/// LexBFS ordering; each refinement costs O(|C ∩ N(x)|).
pub fn lexbfs_partition(g: &Graph, tie_break: TieBreak) -> VertexOrdering {
    with_tie_break(g, tie_break, run)
}

struct PartitionList {
    vprev: Vec<usize>,
    vnext: Vec<usize>,
    class_of: Vec<usize>,
    first: Vec<usize>,
    last: Vec<usize>,
    len: Vec<usize>,
    cprev: Vec<usize>,
    cnext: Vec<usize>,
    split_stamp: Vec<usize>,
    split_into: Vec<usize>,
    head_class: usize,
}

impl PartitionList {
    fn new(n: usize) -> Self {
        let mut p = Self {
            vprev: (0..n).map(|v| if v == 0 { NONE } else { v - 1 }).collect(),
            vnext: (0..n).map(|v| if v + 1 == n { NONE } else { v + 1 }).collect(),
            class_of: vec![0; n],
            first: Vec::new(),
            last: Vec::new(),
            len: Vec::new(),
            cprev: Vec::new(),
            cnext: Vec::new(),
            split_stamp: Vec::new(),
            split_into: Vec::new(),
            head_class: NONE,
        };
        if n > 0 {
            let c = p.new_class_before(NONE);
            p.first[c] = 0;
            p.last[c] = n - 1;
            p.len[c] = n;
        }
        p
    }

    fn new_class_before(&mut self, at: usize) -> usize {
        let id = self.first.len();
        let before = if at == NONE { NONE } else { self.cprev[at] };
        self.first.push(NONE);
        self.last.push(NONE);
        self.len.push(0);
        self.cprev.push(before);
        self.cnext.push(at);
        self.split_stamp.push(NONE);
        self.split_into.push(NONE);
        if before == NONE {
            self.head_class = id;
        } else {
            self.cnext[before] = id;
        }
        if at != NONE {
            self.cprev[at] = id;
        }
        id
    }

    fn unlink_class(&mut self, c: usize) {
        let (p, q) = (self.cprev[c], self.cnext[c]);
        if p == NONE {
            self.head_class = q;
        } else {
            self.cnext[p] = q;
        }
        if q != NONE {
            self.cprev[q] = p;
        }
    }

    fn unlink_vertex(&mut self, v: usize) {
        let (p, q) = (self.vprev[v], self.vnext[v]);
        if p != NONE {
            self.vnext[p] = q;
        }
        if q != NONE {
            self.vprev[q] = p;
        }
    }

    fn insert_after(&mut self, anchor: usize, v: usize) {
        let q = self.vnext[anchor];
        self.vprev[v] = anchor;
        self.vnext[v] = q;
        self.vnext[anchor] = v;
        if q != NONE {
            self.vprev[q] = v;
        }
    }

    fn insert_before(&mut self, anchor: usize, v: usize) {
        let p = self.vprev[anchor];
        self.vnext[v] = anchor;
        self.vprev[v] = p;
        self.vprev[anchor] = v;
        if p != NONE {
            self.vnext[p] = v;
        }
    }

    /// Drops `v` from its class bookkeeping; returns true if the class emptied.
    fn detach_from_class(&mut self, v: usize) -> bool {
        let c = self.class_of[v];
        self.len[c] -= 1;
        if self.len[c] == 0 {
            self.first[c] = NONE;
            self.last[c] = NONE;
            self.unlink_class(c);
            return true;
        }
        if self.first[c] == v {
            self.first[c] = self.vnext[v];
        } else if self.last[c] == v {
            self.last[c] = self.vprev[v];
        }
        false
    }

    /// Removes the first vertex of the first class.
    fn pop_front(&mut self) -> usize {
        let x = self.first[self.head_class];
        self.detach_from_class(x);
        self.unlink_vertex(x);
        x
    }

    /// Moves `y` from its class `C` to the end of `C`'s split class `C_x`,
    /// which sits immediately before `C` in the sequence.
    fn move_to_split(&mut self, y: usize, iteration: usize) {
        let c = self.class_of[y];
        if self.split_stamp[c] != iteration {
            self.split_stamp[c] = iteration;
            self.split_into[c] = self.new_class_before(c);
        }
        let cx = self.split_into[c];
        let c_first = self.first[c];
        self.detach_from_class(y);
        if self.len[cx] > 0 {
            let anchor = self.last[cx];
            self.unlink_vertex(y);
            self.insert_after(anchor, y);
        } else {
            if c_first != y {
                self.unlink_vertex(y);
                self.insert_before(c_first, y);
            }
            self.first[cx] = y;
        }
        self.last[cx] = y;
        self.len[cx] += 1;
        self.class_of[y] = cx;
    }
}

fn run(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut partition = PartitionList::new(n);
    let mut numbered = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for i in 0..n {
        let x = partition.pop_front();
        numbered[x] = true;
        order.push(x);
        for y in g.neighbors(x) {
            if !numbered[y] {
                partition.move_to_split(y, i);
            }
        }
    }
    order
}
