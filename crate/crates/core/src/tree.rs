//! Rooted plane trees and their correspondence with dissections.
//!
//! A dissection of an `(m)`-gon maps to a plane tree by walking faces away
//! from the root edge `(m-1, 0)`: the face containing the root edge
//! becomes the root vertex, and each boundary segment of that face becomes
//! a child — a leaf for a polygon side, a subtree for a diagonal —
//! ordered counterclockwise. Under this map a face of size `s` becomes an
//! internal vertex of downdegree `s - 1`, so dissection types and
//! downdegree censuses carry over exactly.
//!
//! The inverse exists precisely for trees with no downdegree-1 vertex
//! (a face would need `s = 2`). The degenerate case pairs the single-node
//! tree with the digon's empty dissection.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::catalan::DowndegreeSequence;
use crate::dissection::Dissection;
use crate::error::Error;

/// A rooted plane tree: the root plus an ordered list of subtrees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlaneTree {
    children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        PlaneTree { children: Vec::new() }
    }

    pub fn with_children(children: Vec<PlaneTree>) -> Self {
        PlaneTree { children }
    }

    pub fn children(&self) -> &[PlaneTree] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::vertex_count).sum::<usize>()
    }

    /// True if any vertex has exactly one child.
    pub fn has_unary_vertex(&self) -> bool {
        self.children.len() == 1
            || self.children.iter().any(PlaneTree::has_unary_vertex)
    }

    /// Count vertices by number of children.
    pub fn downdegree_sequence(&self) -> DowndegreeSequence {
        let mut counts = Vec::new();
        self.census(&mut counts);
        DowndegreeSequence::new(counts)
    }

    fn census(&self, counts: &mut Vec<u64>) {
        let d = self.children.len();
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
        for child in &self.children {
            child.census(counts);
        }
    }

    /// Balanced-parenthesis form: every vertex is `(` children `)`, so the
    /// single node is `()` and a root with two leaf children is `(()())`.
    pub fn to_parens(&self) -> String {
        let mut s = String::new();
        self.write_parens(&mut s);
        s
    }

    fn write_parens(&self, s: &mut String) {
        s.push('(');
        for child in &self.children {
            child.write_parens(s);
        }
        s.push(')');
    }

    /// Parse the balanced-parenthesis form (one complete tree, nothing
    /// trailing).
    pub fn from_parens(s: &str) -> Result<Self, Error> {
        let parse_err = |detail: &str| Error::Parse {
            what: "plane tree",
            detail: String::from(detail),
        };
        let bytes = s.trim().as_bytes();
        let (tree, consumed) = parse_node(bytes, 0)
            .ok_or_else(|| parse_err("expected balanced parentheses"))?;
        if consumed != bytes.len() {
            return Err(parse_err("trailing input after the root"));
        }
        Ok(tree)
    }
}

impl core::fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.to_parens())
    }
}

fn parse_node(b: &[u8], mut pos: usize) -> Option<(PlaneTree, usize)> {
    if b.get(pos) != Some(&b'(') {
        return None;
    }
    pos += 1;
    let mut children = Vec::new();
    while b.get(pos) == Some(&b'(') {
        let (child, next) = parse_node(b, pos)?;
        children.push(child);
        pos = next;
    }
    if b.get(pos) != Some(&b')') {
        return None;
    }
    Some((PlaneTree { children }, pos + 1))
}

/// The plane tree of a dissection, rooted at the face containing the root
/// edge `(m-1, 0)`, children counterclockwise. The digon maps to the
/// single-node tree.
pub fn dissection_to_tree(d: &Dissection) -> PlaneTree {
    if d.m() == 2 {
        return PlaneTree::leaf();
    }
    build_region(0, d.m() - 1, d)
}

/// Subtree for the region spanned by vertices `lo ..= hi`, whose root edge
/// is the chord (or root edge) `(lo, hi)`.
fn build_region(lo: usize, hi: usize, d: &Dissection) -> PlaneTree {
    // The face incident to (lo, hi) consists of lo, hi and the vertices
    // between them not separated by any other diagonal inside the region.
    let mut face = vec![lo];
    for v in lo + 1..hi {
        let separated = d.diagonals().iter().any(|dg| {
            let (a, b) = dg.endpoints();
            a >= lo && b <= hi && (a, b) != (lo, hi) && a < v && v < b
        });
        if !separated {
            face.push(v);
        }
    }
    face.push(hi);
    let children = face
        .windows(2)
        .map(|w| {
            if w[1] == w[0] + 1 {
                PlaneTree::leaf()
            } else {
                build_region(w[0], w[1], d)
            }
        })
        .collect();
    PlaneTree { children }
}

/// The dissection of a plane tree with no unary vertices; inverse of
/// [`dissection_to_tree`]. The single node maps to the digon.
pub fn tree_to_dissection(t: &PlaneTree) -> Result<Dissection, Error> {
    if t.has_unary_vertex() {
        return Err(Error::UnaryVertex);
    }
    let m = span(t) + 1;
    let mut pairs = Vec::new();
    if !t.is_leaf() {
        place(t, 0, &mut pairs);
    }
    Dissection::new(m, &pairs)
}

/// Number of polygon sides a subtree accounts for: leaves are single
/// sides, internal vertices bundle their children.
fn span(t: &PlaneTree) -> usize {
    if t.is_leaf() {
        1
    } else {
        t.children.iter().map(span).sum()
    }
}

fn place(node: &PlaneTree, lo: usize, pairs: &mut Vec<(usize, usize)>) {
    let mut x = lo;
    for child in &node.children {
        let s = span(child);
        if !child.is_leaf() {
            pairs.push((x, x + s));
            place(child, x, pairs);
        }
        x += s;
    }
}

/// All plane trees with exactly the given downdegree census, sorted by
/// their parenthesis serialization. Rejects censuses no tree satisfies.
pub fn enumerate_trees(r: &DowndegreeSequence) -> Result<Vec<PlaneTree>, Error> {
    if !r.is_feasible() {
        return Err(r.feasibility_error());
    }
    let mut pool: Vec<u64> = r.counts().to_vec();
    let mut out = gen_tree(&mut pool);
    out.sort_by_key(PlaneTree::to_parens);
    Ok(out)
}

/// Can `pool` be used up exactly by an ordered forest of `t` trees?
fn forest_feasible(pool: &[u64], t: u64) -> bool {
    let vertices: u64 = pool.iter().sum();
    let slots: u64 = pool.iter().enumerate().map(|(i, &r)| i as u64 * r).sum();
    vertices >= t && slots == vertices - t
}

/// All trees consuming exactly `pool` (as a downdegree multiset).
fn gen_tree(pool: &mut Vec<u64>) -> Vec<PlaneTree> {
    let mut out = Vec::new();
    for j in 0..pool.len() {
        if pool[j] == 0 {
            continue;
        }
        pool[j] -= 1;
        if forest_feasible(pool, j as u64) {
            for forest in gen_forest(pool, j) {
                out.push(PlaneTree { children: forest });
            }
        }
        pool[j] += 1;
    }
    out
}

/// All ordered forests of exactly `t` trees consuming exactly `pool`.
fn gen_forest(pool: &mut Vec<u64>, t: usize) -> Vec<Vec<PlaneTree>> {
    if t == 0 {
        return if pool.iter().all(|&c| c == 0) { vec![Vec::new()] } else { Vec::new() };
    }
    if t == 1 {
        return gen_tree(pool).into_iter().map(|tree| vec![tree]).collect();
    }
    let mut out = Vec::new();
    // Choose the sub-multiset consumed by the first tree, then recurse on
    // the remainder; both sides are checked for feasibility so no branch
    // is a dead end.
    let mut first: Vec<u64> = vec![0; pool.len()];
    loop {
        let feasible_split = forest_feasible(&first, 1) && {
            let mut rest: Vec<u64> = pool.clone();
            for (r, f) in rest.iter_mut().zip(&first) {
                *r -= f;
            }
            forest_feasible(&rest, t as u64 - 1)
        };
        if feasible_split {
            let mut rest: Vec<u64> = pool.clone();
            for (r, f) in rest.iter_mut().zip(&first) {
                *r -= f;
            }
            for tree in gen_tree(&mut first.clone()) {
                for tail in gen_forest(&mut rest.clone(), t - 1) {
                    let mut forest = Vec::with_capacity(t);
                    forest.push(tree.clone());
                    forest.extend(tail);
                    out.push(forest);
                }
            }
        }
        // Odometer over sub-multisets of pool.
        let mut pos = 0;
        loop {
            if pos == first.len() {
                return out;
            }
            if first[pos] < pool[pos] {
                first[pos] += 1;
                break;
            }
            first[pos] = 0;
            pos += 1;
        }
    }
}
