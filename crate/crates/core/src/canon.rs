//! Canonical labelling, isomorphism and exhaustive enumeration of small graphs.
//!
//! Canonical forms come from colour refinement plus individualisation
//! search, keeping the lexicographically largest relabelled adjacency
//! matrix. Automorphisms discovered at equal leaves prune sibling branches
//! in the same orbit.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// Largest vertex count accepted by the canonical labelling.
pub const CANON_MAX: usize = 16;

/// Largest vertex count accepted by [`enumerate_graphs`].
pub const ENUM_MAX: usize = 7;

/// Isomorphism-invariant key: vertex count and the upper triangle of the
/// canonical adjacency matrix (column-major, first pair most significant).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    pub n: u8,
    pub bits: u128,
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > CANON_MAX {
        return Err(Error::Unsupported(format!("canonical form needs at most {CANON_MAX} vertices, got {}", g.n())));
    }
    Ok(())
}

/// Returns `perm` with `perm[v]` the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    check_size(g)?;
    Ok(search(g).1)
}

pub fn canonical_key(g: &Graph) -> Result<CanonKey> {
    check_size(g)?;
    Ok(CanonKey { n: g.n() as u8, bits: search(g).0 })
}

/// The canonical relabelling of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let perm = canonical_labeling(g)?;
    let mut c = g.relabel(&perm);
    if let Some(label) = g.label() {
        c = c.with_label(label);
    }
    Ok(c)
}

/// Canonical byte string: the graph6 encoding of the canonical relabelling.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(canonical_graph(g)?.to_graph6().into_bytes())
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.m() != h.m() {
        check_size(g)?;
        check_size(h)?;
        return Ok(false);
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        check_size(g)?;
        check_size(h)?;
        return Ok(false);
    }
    Ok(canonical_key(g)? == canonical_key(h)?)
}

/// One representative (in canonical labelling) of every isomorphism class of
/// graphs on `n` vertices satisfying `pred`, sorted by canonical key.
pub fn enumerate_graphs(n: usize, pred: impl Fn(&Graph) -> bool + Sync) -> Result<Vec<Graph>> {
    if n > ENUM_MAX {
        return Err(Error::Unsupported(format!("exhaustive enumeration supports n <= {ENUM_MAX}, got {n}")));
    }
    Ok(all_graphs(n).into_iter().filter(|g| pred(g)).collect())
}

/// Every isomorphism class on `n` vertices, grown one vertex at a time:
/// deleting the last vertex of any graph leaves a graph whose class is
/// already in the previous level, so joining a new vertex to every subset of
/// each representative reaches every class.
pub(crate) fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level: BTreeMap<CanonKey, Graph> = BTreeMap::new();
    let g0 = Graph::empty(0).unwrap();
    level.insert(canonical_key(&g0).unwrap(), g0);
    for size in 1..=n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            let base = g.with_new_vertex().unwrap();
            for nbrs in 0..(1u64 << (size - 1)) {
                let mut h = base.clone();
                for u in Bits(nbrs) {
                    h.add_edge_unchecked(u, size - 1);
                }
                let key = canonical_key(&h).unwrap();
                next.entry(key).or_insert_with(|| canonical_graph(&h).unwrap());
            }
        }
        level = next;
    }
    level.into_values().collect()
}

fn search(g: &Graph) -> (u128, Vec<usize>) {
    let n = g.n();
    if n <= 1 {
        return (0, (0..n).collect());
    }
    let mut s = Search { adj: g.adjacency(), n, best: None, autos: Vec::new() };
    let mut prefix = Vec::with_capacity(n);
    s.descend(vec![0u8; n], &mut prefix);
    let (key, perm) = s.best.unwrap();
    (key, perm.into_iter().map(usize::from).collect())
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    best: Option<(u128, Vec<u8>)>,
    autos: Vec<Vec<u8>>,
}

impl Search<'_> {
    /// Colour refinement to the coarsest equitable partition finer than `col`.
    /// New colours are ranks of (old colour, neighbour counts per colour), so
    /// the result does not depend on vertex names.
    fn refine(&self, col: &mut [u8]) {
        let n = self.n;
        let mut cells = col.iter().copied().max().map_or(0, |c| c as usize + 1);
        loop {
            let mut masks = [0u64; 16];
            for (v, &c) in col.iter().enumerate() {
                masks[c as usize] |= 1 << v;
            }
            let mut sig = [0u128; 16];
            for v in 0..n {
                let mut packed = 0u64;
                for (c, &mask) in masks.iter().enumerate().take(cells) {
                    packed |= ((self.adj[v] & mask).count_ones() as u64) << (4 * c);
                }
                sig[v] = (col[v] as u128) << 64 | packed as u128;
            }
            let mut sorted: Vec<u128> = sig[..n].to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() == cells {
                return;
            }
            cells = sorted.len();
            for v in 0..n {
                col[v] = sorted.binary_search(&sig[v]).unwrap() as u8;
            }
        }
    }

    fn leaf_key(&self, col: &[u8]) -> u128 {
        let mut inv = [0usize; 16];
        for (v, &c) in col.iter().enumerate() {
            inv[c as usize] = v;
        }
        let mut key = 0u128;
        for j in 1..self.n {
            let row = self.adj[inv[j]];
            for &vi in inv.iter().take(j) {
                key = key << 1 | (row >> vi & 1) as u128;
            }
        }
        key
    }

    fn descend(&mut self, mut col: Vec<u8>, prefix: &mut Vec<usize>) {
        self.refine(&mut col);
        let n = self.n;
        let mut size = [0usize; 16];
        for &c in &col {
            size[c as usize] += 1;
        }
        let target = (0..n).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c));
        let Some(target) = target else {
            let key = self.leaf_key(&col);
            match &self.best {
                Some((best, perm)) if *best == key => {
                    // same relabelled graph: best^-1 . this is an automorphism
                    let mut inv = [0u8; 16];
                    for (v, &p) in perm.iter().enumerate() {
                        inv[p as usize] = v as u8;
                    }
                    let auto: Vec<u8> = col.iter().map(|&p| inv[p as usize]).collect();
                    if auto.iter().enumerate().any(|(v, &w)| v != w as usize) {
                        self.autos.push(auto);
                    }
                }
                Some((best, _)) if *best > key => {}
                _ => self.best = Some((key, col)),
            }
            return;
        };
        let members: Vec<usize> = (0..n).filter(|&v| col[v] as usize == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if !explored.is_empty() && self.same_orbit_as_any(v, &explored, prefix) {
                continue;
            }
            let mut child = col.clone();
            for (u, c) in child.iter_mut().enumerate() {
                if *c as usize > target || (*c as usize == target && u != v) {
                    *c += 1;
                }
            }
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the group
    /// generated by known automorphisms that fix `prefix` pointwise.
    fn same_orbit_as_any(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for auto in &self.autos {
            if prefix.iter().any(|&x| auto[x] as usize != x) {
                continue;
            }
            any = true;
            for (x, &y) in auto.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y as usize));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }
}
