//! Maximum matchings across vertex cuts and the cut functions fed to the
//! width engine.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{full_mask, Bits, Graph, VertexSet};

/// Largest ground set tabulated densely.
pub const DENSE_LIMIT: usize = 26;

const UNMATCHED: u8 = u8::MAX;

/// A maximum matching of the cut graph `G[A, V∖A]` together with a vertex
/// cover of the same size, which proves maximality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingCertificate {
    pub matching: Vec<(usize, usize)>,
    pub cover: VertexSet,
}

impl MatchingCertificate {
    /// Checks the certificate against `g` and the side `a`.
    pub fn verify(&self, g: &Graph, a: VertexSet) -> Result<()> {
        let a = a.bits() & full_mask(g.n());
        let b = full_mask(g.n()) & !a;
        let mut used = 0u64;
        for &(u, v) in &self.matching {
            if !(g.has_edge(u, v) && a >> u & 1 == 1 && b >> v & 1 == 1) {
                return Err(Error::InvariantViolation(format!("{u}-{v} is not a cut edge")));
            }
            if used & (1 << u | 1 << v) != 0 {
                return Err(Error::InvariantViolation(format!("{u}-{v} shares an endpoint")));
            }
            used |= 1 << u | 1 << v;
        }
        if self.cover.len() != self.matching.len() {
            return Err(Error::InvariantViolation(format!(
                "cover has {} vertices, matching has {} edges",
                self.cover.len(),
                self.matching.len()
            )));
        }
        let cover = self.cover.bits();
        for u in Bits(a) {
            let open = g.adj_bits(u) & b & !cover;
            if cover >> u & 1 == 0 && open != 0 {
                let v = open.trailing_zeros();
                return Err(Error::InvariantViolation(format!("cut edge {u}-{v} is uncovered")));
            }
        }
        Ok(())
    }
}

fn augment(adj: &[u64], u: usize, side: u64, seen: &mut u64, mate: &mut [u8; 64]) -> bool {
    loop {
        let cand = adj[u] & side & !*seen;
        if cand == 0 {
            return false;
        }
        let w = cand.trailing_zeros() as usize;
        *seen |= 1 << w;
        let m = mate[w];
        if m == UNMATCHED || augment(adj, m as usize, side, seen, mate) {
            mate[w] = u as u8;
            return true;
        }
    }
}

/// Matching in `G[a, b]` as `mate[w]` for `w ∈ b`.
fn max_matching(adj: &[u64], a: u64, b: u64) -> (usize, [u8; 64]) {
    let mut mate = [UNMATCHED; 64];
    let mut size = 0;
    let mut free_b = b;
    let mut pending = 0u64;
    // greedy pass first, then augment from whatever is left unmatched
    for u in Bits(a) {
        let hit = adj[u] & free_b;
        if hit != 0 {
            let w = hit.trailing_zeros() as usize;
            mate[w] = u as u8;
            free_b &= !(1 << w);
            size += 1;
        } else if adj[u] & b != 0 {
            pending |= 1 << u;
        }
    }
    for u in Bits(pending) {
        let mut seen = 0u64;
        if augment(adj, u, b, &mut seen, &mut mate) {
            size += 1;
        }
    }
    (size, mate)
}

/// Size of a maximum matching between `a` and its complement.
pub fn mm_size(g: &Graph, a: u64) -> usize {
    let all = full_mask(g.n());
    let a = a & all;
    let b = all & !a;
    // match from the smaller side; the cut graph is symmetric
    let (a, b) = if a.count_ones() <= b.count_ones() { (a, b) } else { (b, a) };
    max_matching(g.adjacency(), a, b).0
}

/// `mm_G(A)` with a König certificate.
pub fn mm_value(g: &Graph, a: VertexSet) -> (usize, MatchingCertificate) {
    let adj = g.adjacency();
    let all = full_mask(g.n());
    let a = a.bits() & all;
    let b = all & !a;
    let (size, mate) = max_matching(adj, a, b);
    let mut matched_a = 0u64;
    let mut matching = Vec::with_capacity(size);
    for w in Bits(b) {
        if mate[w] != UNMATCHED {
            matched_a |= 1 << mate[w];
            matching.push((mate[w] as usize, w));
        }
    }
    matching.sort_unstable();
    // alternating reachability from the unmatched side-a vertices
    let mut za = a & !matched_a;
    let mut zb = 0u64;
    let mut frontier = za;
    while frontier != 0 {
        let mut nb = 0u64;
        for u in Bits(frontier) {
            nb |= adj[u] & b;
        }
        nb &= !zb;
        zb |= nb;
        let mut na = 0u64;
        for w in Bits(nb) {
            na |= 1 << mate[w];
        }
        na &= !za;
        za |= na;
        frontier = na;
    }
    let cover = VertexSet((a & !za) | zb);
    (size, MatchingCertificate { matching, cover })
}

/// A symmetric integer function on subsets of `0..ground_size`, given as bit
/// masks.
pub trait CutFunction: Sync {
    fn ground_size(&self) -> usize;
    fn eval(&self, set: u64) -> usize;
}

/// `mm_G` on vertex subsets.
#[derive(Clone, Debug)]
pub struct MmCut<'g> {
    g: &'g Graph,
}

pub fn mm_cut(g: &Graph) -> MmCut<'_> {
    MmCut { g }
}

impl CutFunction for MmCut<'_> {
    fn ground_size(&self) -> usize {
        self.g.n()
    }

    fn eval(&self, set: u64) -> usize {
        mm_size(self.g, set)
    }
}

/// Boundary-vertex count on edge subsets; edge `i` is `g.edges()[i]`.
#[derive(Clone, Debug)]
pub struct BrCut {
    m: usize,
    incident: Vec<u64>,
}

pub fn br_cut(g: &Graph) -> Result<BrCut> {
    let edges = g.edges();
    if edges.len() > 64 {
        return Err(Error::Unsupported(format!("{} edges exceed the 64-element ground cap", edges.len())));
    }
    let mut incident = vec![0u64; g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u] |= 1 << i;
        incident[v] |= 1 << i;
    }
    incident.retain(|&x| x != 0);
    Ok(BrCut { m: edges.len(), incident })
}

impl CutFunction for BrCut {
    fn ground_size(&self) -> usize {
        self.m
    }

    fn eval(&self, set: u64) -> usize {
        let rest = full_mask(self.m) & !set;
        self.incident.iter().filter(|&&inc| inc & set != 0 && inc & rest != 0).count()
    }
}

/// GF(2) rank of the biadjacency matrix between a set and its complement.
#[derive(Clone, Debug)]
pub struct RankCut<'g> {
    g: &'g Graph,
}

pub fn rank_cut(g: &Graph) -> RankCut<'_> {
    RankCut { g }
}

/// Rank over GF(2) of the given rows.
pub fn gf2_rank(rows: impl IntoIterator<Item = u64>) -> usize {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut row in rows {
        while row != 0 {
            let top = 63 - row.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = row;
                rank += 1;
                break;
            }
            row ^= basis[top];
        }
    }
    rank
}

impl CutFunction for RankCut<'_> {
    fn ground_size(&self) -> usize {
        self.g.n()
    }

    fn eval(&self, set: u64) -> usize {
        let all = full_mask(self.g.n());
        let set = set & all;
        let rest = all & !set;
        gf2_rank(Bits(set).map(|v| self.g.adj_bits(v) & rest))
    }
}

/// Every value of a cut function, indexed by subset mask.
#[derive(Clone, Debug)]
pub struct CutTable {
    n: usize,
    values: Vec<u8>,
}

impl CutTable {
    /// Tabulates `f` and checks `f(∅) = 0` and symmetry on every subset.
    pub fn build(f: &dyn CutFunction) -> Result<CutTable> {
        let n = f.ground_size();
        if n > DENSE_LIMIT {
            return Err(Error::Unsupported(format!(
                "ground set of {n} elements exceeds the dense table limit {DENSE_LIMIT}"
            )));
        }
        let size = 1usize << n;
        let mut values = vec![0u8; size];
        values.par_chunks_mut(1 << 12).enumerate().for_each(|(c, chunk)| {
            let base = c << 12;
            for (i, slot) in chunk.iter_mut().enumerate() {
                *slot = f.eval((base + i) as u64).min(u8::MAX as usize) as u8;
            }
        });
        if values[0] != 0 {
            return Err(Error::InvariantViolation(format!("f(empty set) = {}", values[0])));
        }
        let full = size - 1;
        if let Some(s) = (0..size).find(|&s| values[s] != values[full ^ s]) {
            return Err(Error::InvariantViolation(format!(
                "cut function is not symmetric at {s:#x}: {} vs {}",
                values[s],
                values[full ^ s]
            )));
        }
        Ok(CutTable { n, values })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, set: u64) -> usize {
        self.values[set as usize] as usize
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.values
    }
}

impl CutFunction for CutTable {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn eval(&self, set: u64) -> usize {
        self.get(set & full_mask(self.n))
    }
}
