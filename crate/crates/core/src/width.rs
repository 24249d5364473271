//! Branch-decompositions and exact f-width by dynamic programming over
//! subsets.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{full_mask, Graph};
use crate::matching::{br_cut, mm_cut, rank_cut, CutFunction, CutTable};

/// Default ground-set cap of [`fwidth_exact`].
pub const GROUND_LIMIT: usize = 16;
/// Cap when the caller opts into larger instances.
pub const GROUND_LIMIT_OVERRIDE: usize = 20;

/// An unrooted tree on nodes `0..nodes`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tree {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Tree {
    /// Checks that the edges form a spanning tree of the nodes.
    pub fn new(nodes: usize, edges: Vec<(usize, usize)>) -> Result<Tree> {
        let t = Tree { nodes, edges };
        t.check()?;
        Ok(t)
    }

    pub fn check(&self) -> Result<()> {
        if self.nodes == 0 {
            return if self.edges.is_empty() { Ok(()) } else { invalid("edges on an empty tree") };
        }
        if self.edges.len() != self.nodes - 1 {
            return invalid(format!("{} nodes need {} edges, found {}", self.nodes, self.nodes - 1, self.edges.len()));
        }
        // union-find: n-1 edges and no cycle means spanning tree
        let mut parent: Vec<usize> = (0..self.nodes).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            if u >= self.nodes || v >= self.nodes {
                return invalid(format!("tree edge {u}-{v} leaves 0..{}", self.nodes));
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return invalid(format!("tree edge {u}-{v} closes a cycle"));
            }
            parent[ru] = rv;
        }
        Ok(())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Per node, the incident `(neighbour, edge index)` pairs.
    pub fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut inc = vec![Vec::new(); self.nodes];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push((v, i));
            inc[v].push((u, i));
        }
        inc
    }

    pub fn leaves(&self) -> Vec<usize> {
        let deg = self.degrees();
        (0..self.nodes).filter(|&x| deg[x] == 1).collect()
    }

    /// For every edge `(p, q)`, the nodes on the `q` side once it is removed.
    pub fn edge_sides(&self) -> Vec<Vec<bool>> {
        let inc = self.incidence();
        (0..self.edges.len())
            .map(|e| {
                let mut side = vec![false; self.nodes];
                let q = self.edges[e].1;
                side[q] = true;
                let mut stack = vec![q];
                while let Some(x) = stack.pop() {
                    for &(y, f) in &inc[x] {
                        if f != e && !side[y] {
                            side[y] = true;
                            stack.push(y);
                        }
                    }
                }
                side
            })
            .collect()
    }

    pub(crate) fn add_node(&mut self) -> usize {
        self.nodes += 1;
        self.nodes - 1
    }

    /// Splits edge `e = (p, q)` with a new node `x`: `e` becomes `(p, x)` and
    /// `(x, q)` is appended.
    pub(crate) fn subdivide(&mut self, e: usize) -> usize {
        let x = self.add_node();
        let (p, q) = self.edges[e];
        self.edges[e] = (p, x);
        self.edges.push((x, q));
        x
    }
}

/// A subcubic tree whose leaves are labelled by the ground set;
/// `leaf_map[x]` is the leaf carrying element `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchDecomposition {
    #[serde(flatten)]
    pub tree: Tree,
    pub leaf_map: Vec<usize>,
}

impl BranchDecomposition {
    pub fn ground_size(&self) -> usize {
        self.leaf_map.len()
    }

    pub fn validate(&self) -> Result<()> {
        self.tree.check()?;
        let n = self.leaf_map.len();
        let t = &self.tree;
        let expected = match n {
            0 => 0,
            1 => 1,
            _ => 2 * n - 2,
        };
        if t.nodes != expected {
            return invalid(format!("{n} leaves need {expected} tree nodes, found {}", t.nodes));
        }
        let deg = t.degrees();
        let mut owner = vec![usize::MAX; t.nodes];
        for (x, &node) in self.leaf_map.iter().enumerate() {
            if node >= t.nodes {
                return invalid(format!("element {x} sits on missing node {node}"));
            }
            if owner[node] != usize::MAX {
                return invalid(format!("elements {} and {x} share leaf {node}", owner[node]));
            }
            owner[node] = x;
        }
        if n >= 2 {
            for (node, &d) in deg.iter().enumerate() {
                let is_leaf = owner[node] != usize::MAX;
                if (is_leaf && d != 1) || (!is_leaf && d != 3) {
                    return invalid(format!("node {node} has degree {d}"));
                }
            }
        }
        Ok(())
    }

    /// For every tree edge `(p, q)`, the elements on the `q` side.
    pub fn edge_partitions(&self) -> Vec<u64> {
        self.tree
            .edge_sides()
            .iter()
            .map(|side| {
                self.leaf_map.iter().enumerate().filter(|&(_, &node)| side[node]).fold(0u64, |a, (x, _)| a | 1 << x)
            })
            .collect()
    }

    /// Parenthesised form rooted next to element 0, e.g. `((0,1),(2,3));`.
    pub fn to_newick(&self) -> String {
        let n = self.leaf_map.len();
        match n {
            0 => return "();".into(),
            1 => return "0;".into(),
            _ => {}
        }
        let t = &self.tree;
        let inc = t.incidence();
        let mut element = vec![usize::MAX; t.nodes];
        for (x, &node) in self.leaf_map.iter().enumerate() {
            element[node] = x;
        }
        fn write(out: &mut String, inc: &[Vec<(usize, usize)>], element: &[usize], x: usize, from: usize) {
            if element[x] != usize::MAX && from != usize::MAX {
                let _ = write!(out, "{}", element[x]);
                return;
            }
            out.push('(');
            let mut first = true;
            for &(y, _) in &inc[x] {
                if y != from {
                    if !first {
                        out.push(',');
                    }
                    first = false;
                    write(out, inc, element, y, x);
                }
            }
            out.push(')');
        }
        let mut out = String::new();
        if n == 2 {
            out.push_str("(0,1)");
        } else {
            write(&mut out, &inc, &element, inc[self.leaf_map[0]][0].0, usize::MAX);
        }
        out.push(';');
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FWidthResult {
    pub width: usize,
    pub witness: BranchDecomposition,
    pub per_edge_values: Vec<usize>,
}

/// `f` on the side of every tree edge, in edge order.
pub fn per_edge_values(d: &BranchDecomposition, f: &dyn CutFunction) -> Result<Vec<usize>> {
    if d.ground_size() != f.ground_size() {
        return invalid(format!(
            "decomposition has {} leaves, cut function has {} elements",
            d.ground_size(),
            f.ground_size()
        ));
    }
    d.validate()?;
    Ok(d.edge_partitions().into_iter().map(|s| f.eval(s)).collect())
}

pub fn width_of(d: &BranchDecomposition, f: &dyn CutFunction) -> Result<usize> {
    Ok(per_edge_values(d, f)?.into_iter().max().unwrap_or(0))
}

/// Exact f-width with a witness decomposition, ground sets up to
/// [`GROUND_LIMIT`].
pub fn fwidth_exact(f: &dyn CutFunction) -> Result<FWidthResult> {
    fwidth_exact_with(f, false)
}

/// As [`fwidth_exact`]; `allow_large` raises the cap to
/// [`GROUND_LIMIT_OVERRIDE`].
pub fn fwidth_exact_with(f: &dyn CutFunction, allow_large: bool) -> Result<FWidthResult> {
    let n = f.ground_size();
    check_limit(n, allow_large)?;
    let table = CutTable::build(f)?;
    let (opt, choice) = optimum_table(&table);
    let full = full_mask(n);
    let witness = reconstruct(n, &choice);
    let per_edge = per_edge_values(&witness, &table)?;
    let width = per_edge.iter().copied().max().unwrap_or(0);
    let expected = if n <= 1 { 0 } else { opt[full as usize] as usize };
    if width != expected {
        return Err(Error::InvariantViolation(format!("witness has width {width}, optimum is {expected}")));
    }
    Ok(FWidthResult { width, witness, per_edge_values: per_edge })
}

fn check_limit(n: usize, allow_large: bool) -> Result<()> {
    let cap = if allow_large { GROUND_LIMIT_OVERRIDE } else { GROUND_LIMIT };
    if n > cap {
        return Err(Error::Unsupported(format!("ground set of {n} elements exceeds the exact cap of {cap}")));
    }
    Ok(())
}

/// `opt[S]` is the least width of a rooted decomposition of `S`; `choice[S]`
/// the part of the optimal split that holds the lowest element of `S`.
fn optimum_table(table: &CutTable) -> (Vec<u8>, Vec<u32>) {
    let n = table.ground_size();
    let size = 1usize << n;
    let full = size - 1;
    let f = table.raw();
    let mut opt = vec![0u8; size];
    let mut choice = vec![0u32; size];
    for x in 0..n {
        opt[1 << x] = f[1 << x];
    }
    let mut layers: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for s in 0..size {
        layers[(s as u32).count_ones() as usize].push(s as u32);
    }
    for layer in layers.iter().skip(2) {
        let solved: Vec<(u8, u32)> = layer
            .par_iter()
            .map(|&s| {
                let s = s as usize;
                let fs = if s == full { 0 } else { f[s] };
                let low = s & s.wrapping_neg();
                let rest = s ^ low;
                let (mut best, mut arg) = (u8::MAX, 0usize);
                let mut sub = 0usize;
                while sub != rest {
                    let s1 = low | sub;
                    let v = fs.max(opt[s1]).max(opt[s ^ s1]);
                    if v < best {
                        best = v;
                        arg = s1;
                        if v == fs {
                            break;
                        }
                    }
                    sub = sub.wrapping_sub(rest) & rest;
                }
                (best, arg as u32)
            })
            .collect();
        for (&s, (v, c)) in layer.iter().zip(solved) {
            opt[s as usize] = v;
            choice[s as usize] = c;
        }
    }
    (opt, choice)
}

fn reconstruct(n: usize, choice: &[u32]) -> BranchDecomposition {
    let mut tree = Tree::default();
    let mut leaf_map = vec![0; n];
    fn build(s: usize, choice: &[u32], tree: &mut Tree, leaf_map: &mut [usize]) -> usize {
        if s.count_ones() == 1 {
            let node = tree.add_node();
            leaf_map[s.trailing_zeros() as usize] = node;
            return node;
        }
        let s1 = choice[s] as usize;
        let a = build(s1, choice, tree, leaf_map);
        let b = build(s ^ s1, choice, tree, leaf_map);
        let x = tree.add_node();
        tree.edges.push((x, a));
        tree.edges.push((x, b));
        x
    }
    match n {
        0 => {}
        1 => {
            tree.add_node();
        }
        _ => {
            let full = full_mask(n) as usize;
            let s1 = choice[full] as usize;
            let a = build(s1, choice, &mut tree, &mut leaf_map);
            let b = build(full ^ s1, choice, &mut tree, &mut leaf_map);
            tree.edges.push((a, b));
        }
    }
    BranchDecomposition { tree, leaf_map }
}

/// Whether the f-width of the tabulated function is at most `k`.
pub fn fwidth_at_most(table: &CutTable, k: usize) -> bool {
    let n = table.ground_size();
    if n <= 1 {
        return true;
    }
    let size = 1usize << n;
    let full = size - 1;
    let f = table.raw();
    let k = k.min(u8::MAX as usize) as u8;
    let mut ok = vec![false; size];
    for x in 0..n {
        ok[1 << x] = f[1 << x] <= k;
    }
    // proper subsets are numerically smaller, so ascending order is enough
    for s in 3..size {
        if s & (s - 1) == 0 || (s != full && f[s] > k) {
            continue;
        }
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut sub = 0usize;
        while sub != rest {
            let s1 = low | sub;
            if ok[s1] && ok[s ^ s1] {
                ok[s] = true;
                break;
            }
            sub = sub.wrapping_sub(rest) & rest;
        }
    }
    ok[full]
}

/// Maximum matching width, computed block by block; the witness spans the
/// whole graph.
pub fn mmw(g: &Graph) -> Result<FWidthResult> {
    mmw_with(g, false)
}

pub fn mmw_with(g: &Graph, allow_large: bool) -> Result<FWidthResult> {
    let blocks = g.blocks();
    for b in &blocks {
        check_limit(b.graph.n(), allow_large)?;
    }
    let mut merged = Merger::new(g.n());
    let mut block_width = 0;
    let mut done = vec![false; blocks.len()];
    for _ in 0..blocks.len() {
        // next block touching what is already placed, else a new component
        let pick = (0..blocks.len())
            .find(|&i| !done[i] && blocks[i].vertices.iter().any(|&v| merged.placed >> v & 1 == 1))
            .or_else(|| (0..blocks.len()).find(|&i| !done[i]))
            .expect("a block is left");
        done[pick] = true;
        let block = &blocks[pick];
        let r = fwidth_exact_with(&mm_cut(&block.graph), allow_large)?;
        block_width = block_width.max(r.width);
        merged.add(r.witness, &block.vertices);
    }
    let witness = merged.finish();
    let per_edge = per_edge_values(&witness, &mm_cut(g))?;
    let width = per_edge.iter().copied().max().unwrap_or(0);
    if width != block_width {
        return Err(Error::InvariantViolation(format!("merged witness has width {width}, blocks need {block_width}")));
    }
    Ok(FWidthResult { width, witness, per_edge_values: per_edge })
}

/// Whether `mmw(g) ≤ k`, without building a witness.
pub fn mmw_at_most(g: &Graph, k: usize) -> Result<bool> {
    for b in g.blocks() {
        check_limit(b.graph.n(), false)?;
        if b.graph.n() > 1 && !fwidth_at_most(&CutTable::build(&mm_cut(&b.graph))?, k) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `mmw(g)` as a number only.
pub fn mmw_value(g: &Graph) -> Result<usize> {
    let mut width = 0;
    while !mmw_at_most(g, width)? {
        width += 1;
    }
    Ok(width)
}

/// Branch-width: f-width of the boundary function on `E(g)`.
pub fn brw(g: &Graph) -> Result<FWidthResult> {
    fwidth_exact(&br_cut(g)?)
}

/// Rank-width: f-width of the GF(2) cut-rank function.
pub fn rw(g: &Graph) -> Result<FWidthResult> {
    fwidth_exact(&rank_cut(g))
}

/// Glues per-block decompositions into one decomposition of the host graph.
struct Merger {
    tree: Tree,
    leaf_of: Vec<usize>,
    placed: u64,
}

impl Merger {
    fn new(n: usize) -> Merger {
        Merger { tree: Tree::default(), leaf_of: vec![usize::MAX; n], placed: 0 }
    }

    /// Copies `t` in with shifted node ids and returns the shift.
    fn import(&mut self, t: &Tree) -> usize {
        let off = self.tree.nodes;
        self.tree.nodes += t.nodes;
        self.tree.edges.extend(t.edges.iter().map(|&(u, v)| (u + off, v + off)));
        off
    }

    /// A node to hang a new part from: a fresh subdivision node, or the only
    /// node of a one-node tree.
    fn attach_point(&mut self) -> usize {
        if self.tree.edges.is_empty() {
            0
        } else {
            self.tree.subdivide(0)
        }
    }

    fn add(&mut self, d: BranchDecomposition, host: &[usize]) {
        let mask = host.iter().fold(0u64, |a, &v| a | 1 << v);
        let shared = mask & self.placed;
        if shared == 0 {
            self.add_component(d, host);
        } else {
            debug_assert_eq!(shared.count_ones(), 1);
            let v = shared.trailing_zeros() as usize;
            let local = host.iter().position(|&h| h == v).expect("shared vertex in block");
            self.add_at_cut_vertex(d, host, local, v);
        }
        self.placed |= mask;
    }

    fn add_component(&mut self, d: BranchDecomposition, host: &[usize]) {
        if self.tree.nodes == 0 {
            let off = self.import(&d.tree);
            for (x, &node) in d.leaf_map.iter().enumerate() {
                self.leaf_of[host[x]] = node + off;
            }
            return;
        }
        let x = self.attach_point();
        let mut t = d.tree.clone();
        let y = if t.edges.is_empty() { 0 } else { t.subdivide(0) };
        let off = self.import(&t);
        self.tree.edges.push((x, y + off));
        for (i, &node) in d.leaf_map.iter().enumerate() {
            self.leaf_of[host[i]] = node + off;
        }
    }

    fn add_at_cut_vertex(&mut self, d: BranchDecomposition, host: &[usize], local: usize, v: usize) {
        // drop v's leaf from the block tree and suppress its neighbour
        let t = &d.tree;
        let l2 = d.leaf_map[local];
        let inc = t.incidence();
        let p = inc[l2][0].0;
        let mut keep = vec![true; t.nodes];
        keep[l2] = false;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut joined = None;
        if t.nodes > 2 {
            keep[p] = false;
            let others: Vec<usize> = inc[p].iter().map(|&(y, _)| y).filter(|&y| y != l2).collect();
            edges.extend(t.edges.iter().copied().filter(|&(a, b)| keep[a] && keep[b]));
            joined = Some(edges.len());
            edges.push((others[0], others[1]));
        }
        let mut renum = vec![usize::MAX; t.nodes];
        let mut count = 0;
        for (x, r) in renum.iter_mut().enumerate() {
            if keep[x] {
                *r = count;
                count += 1;
            }
        }
        let mut reduced = Tree { nodes: count, edges: edges.iter().map(|&(a, b)| (renum[a], renum[b])).collect() };
        let y = match joined {
            Some(e) => reduced.subdivide(e),
            None => 0,
        };
        let l1 = self.leaf_of[v];
        let e1 = self.tree.edges.iter().position(|&(a, b)| a == l1 || b == l1).expect("cut vertex leaf has an edge");
        let x = self.tree.subdivide(e1);
        let off = self.import(&reduced);
        self.tree.edges.push((x, y + off));
        for (i, &node) in d.leaf_map.iter().enumerate() {
            if i != local {
                self.leaf_of[host[i]] = renum[node] + off;
            }
        }
    }

    fn finish(self) -> BranchDecomposition {
        BranchDecomposition { tree: self.tree, leaf_map: self.leaf_of }
    }
}

/// Number of leaves on each side of tree edge `e`.
pub fn leaf_split(t: &Tree, e: usize) -> (usize, usize) {
    let deg = t.degrees();
    let side = &t.edge_sides()[e];
    let total = deg.iter().filter(|&&d| d == 1).count();
    let q = (0..t.nodes).filter(|&x| deg[x] == 1 && side[x]).count();
    (total - q, q)
}

/// The edge whose removal splits the leaves most evenly; the lowest edge index
/// wins ties.
pub fn balanced_leaf_edge(t: &Tree) -> Result<usize> {
    t.check()?;
    let deg = t.degrees();
    if deg.iter().any(|&d| d > 3) {
        return invalid("tree is not subcubic");
    }
    let leaves: Vec<usize> = (0..t.nodes).filter(|&x| deg[x] == 1).collect();
    if leaves.len() < 2 {
        return invalid(format!("{} leaves, need at least 2", leaves.len()));
    }
    let sides = t.edge_sides();
    let mut best = (0, 0);
    for (e, side) in sides.iter().enumerate() {
        let q = leaves.iter().filter(|&&x| side[x]).count();
        let balance = q.min(leaves.len() - q);
        if balance > best.1 {
            best = (e, balance);
        }
    }
    Ok(best.0)
}

/// All vertex sets given by the edges of a decomposition, normalised to the
/// side without the highest element. Handy for comparing witnesses.
pub fn canonical_cuts(d: &BranchDecomposition) -> Vec<u64> {
    let n = d.ground_size();
    let full = full_mask(n);
    let mut cuts: Vec<u64> =
        d.edge_partitions().into_iter().map(|s| if n > 0 && s >> (n - 1) & 1 == 1 { full & !s } else { s }).collect();
    cuts.sort_unstable();
    cuts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::enumerate_graphs;
    use crate::graph::VertexSet;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    // All unrooted leaf-labelled trees with internal degree 3, by inserting
    // leaf i on every edge of each tree for 0..i.
    fn all_trees(n: usize) -> Vec<BranchDecomposition> {
        if n < 3 {
            return vec![reconstruct(n, &vec![1; 1 << n])];
        }
        let mut out = vec![BranchDecomposition {
            tree: Tree { nodes: 4, edges: vec![(3, 0), (3, 1), (3, 2)] },
            leaf_map: vec![0, 1, 2],
        }];
        for i in 3..n {
            let mut next = Vec::new();
            for d in &out {
                for e in 0..d.tree.edges.len() {
                    let mut t = d.tree.clone();
                    let x = t.subdivide(e);
                    let leaf = t.add_node();
                    t.edges.push((x, leaf));
                    let mut leaf_map = d.leaf_map.clone();
                    leaf_map.push(leaf);
                    debug_assert_eq!(leaf_map.len(), i + 1);
                    next.push(BranchDecomposition { tree: t, leaf_map });
                }
            }
            out = next;
        }
        out
    }

    fn brute_width(f: &dyn CutFunction) -> usize {
        all_trees(f.ground_size()).iter().map(|d| width_of(d, f).unwrap()).min().unwrap()
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, max_m: usize) -> Graph {
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = rng.gen_range(0..=pairs.len().min(max_m));
        for i in 0..m {
            let j = rng.gen_range(i..pairs.len());
            pairs.swap(i, j);
        }
        Graph::from_edges(n, &pairs[..m]).unwrap()
    }

    fn one_step_minors(g: &Graph) -> Vec<Graph> {
        let mut out: Vec<Graph> = (0..g.n()).map(|v| g.delete_vertex(v).unwrap()).collect();
        for (u, v) in g.edges() {
            out.push(g.delete_edge(u, v).unwrap());
            out.push(g.contract_edge(u, v).unwrap());
        }
        out
    }

    #[test]
    fn tree_counts_match_double_factorial() {
        assert_eq!(all_trees(4).len(), 3);
        assert_eq!(all_trees(5).len(), 15);
        assert_eq!(all_trees(6).len(), 105);
        for d in all_trees(6) {
            d.validate().unwrap();
        }
    }

    #[test]
    fn width_of_examples() {
        struct Zero(usize);
        impl CutFunction for Zero {
            fn ground_size(&self) -> usize {
                self.0
            }
            fn eval(&self, _: u64) -> usize {
                0
            }
        }
        for d in all_trees(5) {
            assert_eq!(width_of(&d, &Zero(5)).unwrap(), 0);
        }
        let k2 = Graph::complete(2).unwrap();
        let edge = BranchDecomposition { tree: Tree { nodes: 2, edges: vec![(0, 1)] }, leaf_map: vec![0, 1] };
        assert_eq!(width_of(&edge, &mm_cut(&k2)).unwrap(), 1);
        // caterpillar 0,1 | 2,3 over C4 in cycle order
        let c4 = Graph::cycle(4).unwrap();
        let cat = BranchDecomposition {
            tree: Tree { nodes: 6, edges: vec![(4, 0), (4, 1), (4, 5), (5, 2), (5, 3)] },
            leaf_map: vec![0, 1, 2, 3],
        };
        assert_eq!(per_edge_values(&cat, &mm_cut(&c4)).unwrap(), [1, 1, 2, 1, 1]);
        assert!(width_of(&cat, &mm_cut(&Graph::cycle(5).unwrap())).is_err());
    }

    #[test]
    fn validate_rejects_bad_trees() {
        let mut d = reconstruct(4, &{
            let mut c = vec![0u32; 16];
            c[15] = 0b0011;
            c[0b0011] = 0b0001;
            c[0b1100] = 0b0100;
            c
        });
        d.validate().unwrap();
        assert_eq!(d.to_newick(), "(0,1,(2,3));");
        d.leaf_map.swap(0, 1);
        d.validate().unwrap();
        d.leaf_map[0] = d.leaf_map[1];
        assert!(d.validate().is_err());
        let path = BranchDecomposition { tree: Tree { nodes: 3, edges: vec![(0, 1), (1, 2)] }, leaf_map: vec![0, 2] };
        assert!(path.validate().is_err());
    }

    #[test]
    fn exact_examples() {
        let w = |g: Graph| mmw(&g).unwrap().width;
        assert_eq!(w(Graph::complete(3).unwrap()), 1);
        assert_eq!(w(Graph::cycle(4).unwrap()), 2);
        assert_eq!(w(Graph::complete(6).unwrap()), 2);
        assert_eq!(w(Graph::complete(9).unwrap()), 3);
        assert_eq!(w(Graph::grid(2).unwrap()), 2);
        assert_eq!(w(Graph::grid(3).unwrap()), 3);
        assert_eq!(w(Graph::complete(1).unwrap()), 0);
        assert_eq!(w(Graph::complete(2).unwrap()), 1);
        assert_eq!(w(Graph::empty(0).unwrap()), 0);
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(w(bowtie), 1);
        let grid = Graph::grid(3).unwrap();
        assert_eq!(brw(&grid).unwrap().width, 3);
        assert_eq!(rw(&grid).unwrap().width, 2);
        assert_eq!(brw(&Graph::grid(2).unwrap()).unwrap().width, 2);
        assert_eq!(rw(&Graph::grid(2).unwrap()).unwrap().width, 1);
    }

    #[test]
    fn size_limits() {
        let big = Graph::cycle(17).unwrap();
        assert!(matches!(fwidth_exact(&mm_cut(&big)), Err(Error::Unsupported(_))));
        assert_eq!(fwidth_exact_with(&mm_cut(&big), true).unwrap().width, 2);
        // blocks are what counts: a long path is cheap
        assert_eq!(mmw(&Graph::path(40).unwrap()).unwrap().width, 1);
    }

    #[test]
    fn dp_matches_tree_enumeration() {
        for n in 0..=6 {
            for g in enumerate_graphs(n, |_| true).unwrap() {
                let r = fwidth_exact(&mm_cut(&g)).unwrap();
                assert_eq!(r.width, brute_width(&mm_cut(&g)), "{g:?}");
                assert_eq!(width_of(&r.witness, &mm_cut(&g)).unwrap(), r.width);
                assert_eq!(r.width, mmw(&g).unwrap().width);
                assert_eq!(rw(&g).unwrap().width, brute_width(&rank_cut(&g)));
                assert!(mmw_at_most(&g, r.width).unwrap());
                assert!(r.width == 0 || !mmw_at_most(&g, r.width - 1).unwrap());
            }
        }
    }

    #[test]
    fn merged_witnesses_verify() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(1..=14);
            let g = random_graph(&mut rng, n, n + 3);
            let r = mmw(&g).unwrap();
            r.witness.validate().unwrap();
            assert_eq!(r.width, fwidth_exact(&mm_cut(&g)).unwrap().width, "{g:?}");
            assert_eq!(r.width, mmw_value(&g).unwrap());
        }
    }

    #[test]
    fn minor_monotone() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..500 {
            let n = rng.gen_range(1..=8);
            let g = random_graph(&mut rng, n, 28);
            let w = mmw(&g).unwrap().width;
            for m in one_step_minors(&g) {
                assert!(mmw(&m).unwrap().width <= w);
            }
        }
    }

    #[test]
    fn sandwich_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..250 {
            let n = rng.gen_range(1..=6);
            let g = random_graph(&mut rng, n, 13);
            let (r, m, b) = (rw(&g).unwrap().width, mmw(&g).unwrap().width, brw(&g).unwrap().width);
            assert!(r <= m && m <= b.max(1), "{g:?}: rw {r} mmw {m} brw {b}");
        }
    }

    #[test]
    fn three_connected_on_seven_vertices_have_width_three() {
        let graphs = enumerate_graphs(7, |g| g.is_k_connected(3)).unwrap();
        assert!(!graphs.is_empty());
        for g in graphs {
            assert!(!mmw_at_most(&g, 2).unwrap(), "{g:?}");
        }
    }

    #[test]
    fn every_six_vertex_graph_has_width_at_most_two() {
        for g in enumerate_graphs(6, |_| true).unwrap() {
            assert!(mmw_at_most(&g, 2).unwrap());
        }
    }

    #[test]
    fn balanced_edges() {
        let single = Tree::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(balanced_leaf_edge(&single).unwrap(), 0);
        assert_eq!(leaf_split(&single, 0), (1, 1));
        // complete subcubic tree with 8 leaves: the root edge joins 6 and 7
        let mut edges = vec![(6, 7)];
        for (parent, kids) in [(6, [4, 5]), (7, [8, 9]), (4, [10, 11]), (5, [12, 13]), (8, [0, 1]), (9, [2, 3])] {
            edges.extend(kids.iter().map(|&k| (parent, k)));
        }
        let t = Tree::new(14, edges).unwrap();
        let e = balanced_leaf_edge(&t).unwrap();
        assert_eq!(t.edges[e], (6, 7));
        assert_eq!(leaf_split(&t, e), (4, 4));
        let choice: Vec<u32> = (0..128usize).map(|s| if s < 3 { 0 } else { (s & s.wrapping_neg()) as u32 }).collect();
        let caterpillar = reconstruct(7, &choice);
        let e = balanced_leaf_edge(&caterpillar.tree).unwrap();
        let (a, b) = leaf_split(&caterpillar.tree, e);
        assert_eq!((a.min(b), a.max(b)), (3, 4));
        assert!(balanced_leaf_edge(&Tree::new(1, vec![]).unwrap()).is_err());
    }

    #[test]
    fn balanced_edge_bound_on_random_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..10_000 {
            let leaves = rng.gen_range(2..=24);
            // random subcubic tree by leaf insertion on a random edge
            let mut t = Tree::new(2, vec![(0, 1)]).unwrap();
            for _ in 2..leaves {
                let x = t.subdivide(rng.gen_range(0..t.edges.len()));
                let y = t.add_node();
                t.edges.push((x, y));
            }
            let e = balanced_leaf_edge(&t).unwrap();
            let (a, b) = leaf_split(&t, e);
            let small = a.min(b);
            assert!(3 * small >= leaves, "{leaves} leaves split {a}|{b}");
            if leaves >= 7 {
                assert!(small >= 3);
            }
        }
    }

    #[test]
    fn deterministic_across_pools() {
        let g = Graph::grid(3).unwrap();
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| serde_json::to_string(&mmw(&g).unwrap()).unwrap())
        };
        assert_eq!(run(1), run(4));
    }

    #[test]
    fn canonical_cuts_ignore_orientation() {
        let g = Graph::cycle(6).unwrap();
        let d = mmw(&g).unwrap().witness;
        let mut flipped = d.clone();
        flipped.tree.edges.iter_mut().for_each(|e| *e = (e.1, e.0));
        assert_eq!(canonical_cuts(&d), canonical_cuts(&flipped));
        assert!(canonical_cuts(&d).iter().all(|&s| !VertexSet(s).contains(5)));
    }
}
