//! Brute-force ground truth.
//!
//! Each checker is a direct translation of a definition with no cleverness,
//! meant for small graphs in tests.

use crate::error::{Error, Result};
use crate::graph::{left_neighborhoods, Graph, VertexOrdering};

/// Largest graph accepted by [`is_chordal_bruteforce`].
pub const CHORDAL_ORACLE_LIMIT: usize = 256;
/// Largest graph accepted by [`find_chordless_cycle`].
pub const CYCLE_SEARCH_LIMIT: usize = 64;

/// A failing position triple `a < b < c` (0-based positions) together with
/// the vertices placed there: `ac` is an edge, `ab` is not, and no earlier
/// `d` satisfies the existential of the property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderViolation {
    pub positions: (usize, usize, usize),
    pub vertices: (usize, usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropertyCheck {
    Holds,
    Violated(OrderViolation),
}

impl PropertyCheck {
    pub fn holds(&self) -> bool {
        matches!(self, Self::Holds)
    }

    pub fn violation(&self) -> Option<OrderViolation> {
        match self {
            Self::Holds => None,
            Self::Violated(v) => Some(*v),
        }
    }
}

/// BFS property: for positions `a < b < c` with `ac ∈ E` and `ab ∉ E` there
/// is `d < a` with `db ∈ E`.
pub fn satisfies_b_property(g: &Graph, ord: &VertexOrdering) -> Result<PropertyCheck> {
    check_triples(g, ord, |d, _a, b, _c| g.is_adjacent(d, b))
}

/// LexBFS property: for positions `a < b < c` with `ac ∈ E` and `ab ∉ E`
/// there is `d < a` with `db ∈ E` and `dc ∉ E`.
pub fn satisfies_lb_property(g: &Graph, ord: &VertexOrdering) -> Result<PropertyCheck> {
    check_triples(g, ord, |d, _a, b, c| g.is_adjacent(d, b) && !g.is_adjacent(d, c))
}

fn check_triples<F>(g: &Graph, ord: &VertexOrdering, witness: F) -> Result<PropertyCheck>
where
    F: Fn(usize, usize, usize, usize) -> bool,
{
    ord.ensure_covers(g)?;
    let n = g.vertex_count();
    let at = |i: usize| ord.vertex_at(i);
    for a in 0..n {
        for b in a + 1..n {
            if g.is_adjacent(at(a), at(b)) {
                continue;
            }
            for c in b + 1..n {
                if !g.is_adjacent(at(a), at(c)) {
                    continue;
                }
                if !(0..a).any(|d| witness(at(d), at(a), at(b), at(c))) {
                    return Ok(PropertyCheck::Violated(OrderViolation {
                        positions: (a, b, c),
                        vertices: (at(a), at(b), at(c)),
                    }));
                }
            }
        }
    }
    Ok(PropertyCheck::Holds)
}

/// PEO by definition: every left neighborhood is pairwise adjacent.
pub fn is_peo_bruteforce(g: &Graph, ord: &VertexOrdering) -> Result<bool> {
    let ln = left_neighborhoods(g, ord)?;
    for v in 0..g.vertex_count() {
        let members: Vec<usize> = ln.members(v).collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !g.is_adjacent(a, b) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn is_simplicial_in(g: &Graph, v: usize, alive: &[bool]) -> bool {
    let nbrs: Vec<usize> = g.neighbors(v).filter(|&u| alive[u]).collect();
    nbrs.iter()
        .enumerate()
        .all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| g.is_adjacent(a, b)))
}

/// Chordality by repeatedly deleting a simplicial vertex.
pub fn is_chordal_bruteforce(g: &Graph) -> Result<bool> {
    let n = g.vertex_count();
    if n > CHORDAL_ORACLE_LIMIT {
        return Err(Error::GraphTooLarge {
            n,
            limit: CHORDAL_ORACLE_LIMIT,
        });
    }
    let mut alive = vec![true; n];
    for _ in 0..n {
        match (0..n).find(|&v| alive[v] && is_simplicial_in(g, v, &alive)) {
            Some(v) => alive[v] = false,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Some chordless cycle of length at least four, if one exists.
///
/// Searches induced paths that start at the cycle's smallest vertex and only
/// use larger vertices; a path `s .. u` closes when the next vertex is
/// adjacent to both `u` and `s` and to nothing else on the path.
pub fn find_chordless_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    if n > CYCLE_SEARCH_LIMIT {
        return Err(Error::GraphTooLarge {
            n,
            limit: CYCLE_SEARCH_LIMIT,
        });
    }
    let mut on_path = vec![false; n];
    for s in 0..n {
        for u in g.neighbors(s).filter(|&u| u > s) {
            let mut path = vec![s, u];
            on_path[s] = true;
            on_path[u] = true;
            let found = extend_induced_path(g, &mut path, &mut on_path);
            on_path[s] = false;
            on_path[u] = false;
            if found {
                return Ok(Some(path));
            }
        }
    }
    Ok(None)
}

fn extend_induced_path(g: &Graph, path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
    let s = path[0];
    let last = *path.last().expect("path is never empty");
    for w in g.neighbors(last) {
        if w <= s || on_path[w] {
            continue;
        }
        let inner = &path[1..path.len() - 1];
        if inner.iter().any(|&p| g.is_adjacent(p, w)) {
            continue;
        }
        if g.is_adjacent(s, w) {
            if path.len() >= 3 {
                path.push(w);
                return true;
            }
            continue;
        }
        path.push(w);
        on_path[w] = true;
        let found = extend_induced_path(g, path, on_path);
        on_path[w] = false;
        if found {
            return true;
        }
        path.pop();
    }
    false
}
