//! Minor containment for small graphs.
//!
//! `h` is a minor of `g` iff `h` is a subgraph of some contraction of `g`, so
//! the search walks contractions of `g` depth first, testing for a subgraph
//! monomorphism at each state. Failed states are remembered by isomorphism
//! class, which is sound because whether `h` embeds in a contraction of a
//! state depends only on the state up to isomorphism.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_graph, canonical_key, CanonKey, CANON_MAX};
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph, VertexSet};
use crate::width::mmw_at_most;

/// Node expansions allowed per containment query unless overridden.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

/// `branch_sets[x]` is the connected set of `g`-vertices contracted onto
/// vertex `x` of `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub branch_sets: Vec<VertexSet>,
}

impl MinorModel {
    pub fn verify(&self, g: &Graph, h: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvariantViolation(msg));
        if self.branch_sets.len() != h.n() {
            return bad(format!("{} branch sets for {} vertices", self.branch_sets.len(), h.n()));
        }
        let mut used = 0u64;
        for (x, &b) in self.branch_sets.iter().enumerate() {
            if b.is_empty() || !b.is_subset(g.vertices()) {
                return bad(format!("branch set {x} is empty or outside the host"));
            }
            if b.bits() & used != 0 {
                return bad(format!("branch set {x} overlaps another"));
            }
            used |= b.bits();
            if g.reach(b.first().unwrap(), b.bits()) != b.bits() {
                return bad(format!("branch set {x} is not connected"));
            }
        }
        for (x, y) in h.edges() {
            let touch = Bits(self.branch_sets[x].bits()).any(|v| g.adj_bits(v) & self.branch_sets[y].bits() != 0);
            if !touch {
                return bad(format!("no host edge between branch sets {x} and {y}"));
            }
        }
        Ok(())
    }

    pub fn partition(&self) -> Vec<Vec<usize>> {
        self.branch_sets.iter().map(|b| b.iter().collect()).collect()
    }
}

/// A model of `h` in `g`, or `None` if `h` is not a minor of `g`. The model is
/// re-verified before it is returned.
pub fn has_minor(g: &Graph, h: &Graph, budget: u64) -> Result<Option<MinorModel>> {
    if g.n() > CANON_MAX {
        return Err(Error::Unsupported(format!("minor search needs at most {CANON_MAX} host vertices")));
    }
    if h.n() > g.n() || h.m() > g.m() {
        return Ok(None);
    }
    let mut s = Search { h: Pattern::new(h), budget, expanded: 0, failed: HashSet::new() };
    let sets: Vec<VertexSet> = (0..g.n()).map(VertexSet::singleton).collect();
    let found = s.dfs(g, &sets)?;
    let Some(branch_sets) = found else { return Ok(None) };
    let model = MinorModel { branch_sets };
    model.verify(g, h)?;
    Ok(Some(model))
}

struct Search {
    h: Pattern,
    budget: u64,
    expanded: u64,
    failed: HashSet<CanonKey>,
}

impl Search {
    fn tick(&mut self) -> Result<()> {
        self.expanded += 1;
        if self.expanded > self.budget {
            return Err(Error::Budget { what: "minor search".into(), expanded: self.expanded });
        }
        Ok(())
    }

    fn dfs(&mut self, g: &Graph, sets: &[VertexSet]) -> Result<Option<Vec<VertexSet>>> {
        self.tick()?;
        if let Some(map) = self.embed(g)? {
            return Ok(Some(map.into_iter().map(|v| sets[v]).collect()));
        }
        if g.n() == self.h.n {
            return Ok(None);
        }
        // undoing subdivisions first finds models of sparse patterns quickly;
        // contracting a pendant edge only deletes the leaf, which embedding covers
        let mut edges: Vec<(usize, usize)> =
            g.edges().into_iter().filter(|&(u, v)| g.degree(u) > 1 && g.degree(v) > 1).collect();
        edges.sort_by_key(|&(u, v)| g.degree(u).min(g.degree(v)));
        for (u, v) in edges {
            let c = g.contract_edge(u, v)?;
            if c.m() < self.h.m {
                continue;
            }
            if !self.failed.insert(canonical_key(&c)?) {
                continue;
            }
            let mut next: Vec<VertexSet> = sets.to_vec();
            next[u] = sets[u].union(sets[v]);
            next.remove(v);
            if let Some(found) = self.dfs(&c, &next)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    /// Injective map from pattern vertices to `g`-vertices keeping edges.
    fn embed(&mut self, g: &Graph) -> Result<Option<Vec<usize>>> {
        let mut gdeg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        gdeg.sort_unstable_by(|a, b| b.cmp(a));
        if self.h.sorted_degrees.iter().zip(&gdeg).any(|(a, b)| a > b) {
            return Ok(None);
        }
        let mut image = vec![usize::MAX; self.h.n];
        let found = self.extend(g, 0, 0, &mut image)?;
        Ok(found.then_some(image))
    }

    fn extend(&mut self, g: &Graph, depth: usize, used: u64, image: &mut [usize]) -> Result<bool> {
        if depth == self.h.n {
            return Ok(true);
        }
        self.tick()?;
        let x = self.h.order[depth];
        let mut cand = g.vertices().bits() & !used;
        for &y in &self.h.earlier[depth] {
            cand &= g.adj_bits(image[y]);
        }
        for v in Bits(cand) {
            if g.degree(v) < self.h.degree[x] {
                continue;
            }
            image[x] = v;
            if self.extend(g, depth + 1, used | 1 << v, image)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

struct Pattern {
    n: usize,
    m: usize,
    degree: Vec<usize>,
    sorted_degrees: Vec<usize>,
    /// Placement order: each vertex has as many placed neighbours as possible.
    order: Vec<usize>,
    /// Already placed neighbours of `order[i]`.
    earlier: Vec<Vec<usize>>,
}

impl Pattern {
    fn new(h: &Graph) -> Pattern {
        let n = h.n();
        let degree: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
        let mut sorted_degrees = degree.clone();
        sorted_degrees.sort_unstable_by(|a, b| b.cmp(a));
        let mut order = Vec::with_capacity(n);
        let mut placed = 0u64;
        while order.len() < n {
            let next = (0..n)
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| ((h.adj_bits(v) & placed).count_ones(), degree[v], std::cmp::Reverse(v)))
                .unwrap();
            placed |= 1 << next;
            order.push(next);
        }
        let earlier = order
            .iter()
            .enumerate()
            .map(|(i, &x)| order[..i].iter().copied().filter(|&y| h.has_edge(x, y)).collect())
            .collect();
        Pattern { n, m: h.m(), degree, sorted_degrees, order, earlier }
    }
}

/// All graphs one vertex deletion, edge deletion or edge contraction away
/// from `g`, one canonical representative per isomorphism class, sorted by
/// canonical key.
pub fn one_step_minors(g: &Graph) -> Result<Vec<Graph>> {
    let mut out: BTreeMap<CanonKey, Graph> = BTreeMap::new();
    let mut add = |m: Graph| -> Result<()> {
        let key = canonical_key(&m)?;
        if let std::collections::btree_map::Entry::Vacant(slot) = out.entry(key) {
            slot.insert(canonical_graph(&m)?);
        }
        Ok(())
    };
    for v in 0..g.n() {
        add(g.delete_vertex(v)?)?;
    }
    for (u, v) in g.edges() {
        add(g.delete_edge(u, v)?)?;
        add(g.contract_edge(u, v)?)?;
    }
    Ok(out.into_values().collect())
}

/// `pred(g)` holds and fails on every one-step minor. For a property whose
/// complement is minor-closed this is minor-minimality, by transitivity.
pub fn is_minor_minimal(g: &Graph, pred: &dyn Fn(&Graph) -> Result<bool>) -> Result<bool> {
    if !pred(g)? {
        return Ok(false);
    }
    for m in one_step_minors(g)? {
        if pred(&m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `mmw(g) ≤ 2` decided as "no catalog graph is a minor of `g`".
pub fn mmw_le2_by_obstructions(g: &Graph, catalog: &[Graph], budget: u64) -> Result<bool> {
    for o in catalog.iter().filter(|o| o.n() <= g.n()) {
        if has_minor(g, o, budget)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `mmw(g) ≥ k`, the predicate whose minimal graphs are the obstructions.
pub fn mmw_at_least(k: usize) -> impl Fn(&Graph) -> Result<bool> {
    move |g: &Graph| Ok(k == 0 || !mmw_at_most(g, k - 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{all_graphs, canonical_key};
    use std::collections::BTreeSet;

    fn named(id: &str) -> Graph {
        Graph::named(id).unwrap()
    }

    #[test]
    fn examples() {
        let grid = Graph::grid(3).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        let m = has_minor(&grid, &c4, DEFAULT_BUDGET).unwrap().unwrap();
        assert!(m.branch_sets.iter().all(|b| b.len() == 1));
        assert!(has_minor(&Graph::complete(3).unwrap(), &c4, DEFAULT_BUDGET).unwrap().is_none());
        let m = has_minor(&Graph::wheel(5).unwrap(), &Graph::complete(4).unwrap(), DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(m.branch_sets.iter().map(|b| b.len()).sum::<usize>(), 5);
        assert!(has_minor(&grid, &Graph::complete(5).unwrap(), DEFAULT_BUDGET).unwrap().is_none());
        assert!(has_minor(&grid, &grid, DEFAULT_BUDGET).unwrap().is_some());
        assert!(has_minor(&named("K6"), &Graph::grid(3).unwrap(), DEFAULT_BUDGET).unwrap().is_none());
    }

    #[test]
    fn budget_is_an_error() {
        let r = has_minor(&Graph::grid(4).unwrap(), &Graph::complete(5).unwrap(), 10);
        assert!(matches!(r, Err(Error::Budget { .. })));
    }

    #[test]
    fn model_verification_rejects_bad_models() {
        let g = Graph::path(3).unwrap();
        let h = Graph::path(2).unwrap();
        let ok = MinorModel { branch_sets: vec![VertexSet(0b001), VertexSet(0b110)] };
        assert!(ok.verify(&g, &h).is_ok());
        let apart = MinorModel { branch_sets: vec![VertexSet(0b001), VertexSet(0b100)] };
        assert!(apart.verify(&g, &h).is_err());
        let split = MinorModel { branch_sets: vec![VertexSet(0b101), VertexSet(0b010)] };
        assert!(split.verify(&g, &h).is_err());
        let overlap = MinorModel { branch_sets: vec![VertexSet(0b011), VertexSet(0b010)] };
        assert!(overlap.verify(&g, &h).is_err());
    }

    #[test]
    fn one_step_examples() {
        let k3 = one_step_minors(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(k3.iter().map(|g| (g.n(), g.m())).collect::<Vec<_>>().len(), 2);
        assert!(k3.iter().any(|g| (g.n(), g.m()) == (3, 2)));
        assert!(k3.iter().any(|g| (g.n(), g.m()) == (2, 1)));
        let c4 = one_step_minors(&Graph::cycle(4).unwrap()).unwrap();
        let mut shapes: Vec<_> = c4.iter().map(|g| (g.n(), g.m())).collect();
        shapes.sort();
        assert_eq!(shapes, vec![(3, 2), (3, 3), (4, 3)]);
        let e = one_step_minors(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!((e[0].n(), e[0].m()), (2, 0));
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minor_minimal(&Graph::cycle(4).unwrap(), &mmw_at_least(2)).unwrap());
        assert!(!is_minor_minimal(&Graph::cycle(5).unwrap(), &mmw_at_least(2)).unwrap());
        assert!(is_minor_minimal(&Graph::grid(3).unwrap(), &mmw_at_least(3)).unwrap());
        assert!(!is_minor_minimal(&Graph::grid(4).unwrap(), &mmw_at_least(3)).unwrap());
    }

    fn minor_closure(g: &Graph, memo: &mut BTreeMap<CanonKey, BTreeSet<CanonKey>>) -> BTreeSet<CanonKey> {
        let key = canonical_key(g).unwrap();
        if let Some(s) = memo.get(&key) {
            return s.clone();
        }
        let mut all = BTreeSet::from([key]);
        for m in one_step_minors(g).unwrap() {
            all.extend(minor_closure(&m, memo));
        }
        memo.insert(key, all.clone());
        all
    }

    #[test]
    fn agrees_with_operation_closure() {
        let graphs: Vec<Graph> = (0..=6).flat_map(all_graphs).collect();
        let mut memo = BTreeMap::new();
        let mut found = 0;
        for g in &graphs {
            let closure = minor_closure(g, &mut memo);
            for h in graphs.iter().filter(|h| h.n() <= g.n()) {
                let model = has_minor(g, h, DEFAULT_BUDGET).unwrap();
                assert_eq!(model.is_some(), closure.contains(&canonical_key(h).unwrap()), "{g:?} {h:?}");
                if let Some(m) = model {
                    m.verify(g, h).unwrap();
                    found += 1;
                }
            }
        }
        assert!(found > 1000);
    }

    fn small_blocks(g: &Graph) -> bool {
        g.blocks().iter().all(|b| b.graph.n() <= 3 && b.graph.m() * 2 == b.graph.n() * (b.graph.n() - 1))
    }

    #[test]
    fn width_one_equivalences() {
        let c4 = Graph::cycle(4).unwrap();
        let mut count = 0;
        let mut width_one = 0;
        for n in 0..=7 {
            for g in all_graphs(n) {
                let a = mmw_at_most(&g, 1).unwrap();
                let b = has_minor(&g, &c4, DEFAULT_BUDGET).unwrap().is_none();
                let c = small_blocks(&g);
                assert!(a == b && b == c, "{g:?}: {a} {b} {c}");
                count += 1;
                width_one += a as usize;
            }
        }
        assert_eq!(count, 1 + 1 + 2 + 4 + 11 + 34 + 156 + 1044);
        assert!(width_one > 100);
    }
}
