//! Simple undirected graphs on at most 64 vertices with bit-set adjacency.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A subset of `0..n` packed into one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> VertexSet {
        VertexSet(full_mask(n))
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Complement within `0..n`.
    pub fn complement(self, n: usize) -> VertexSet {
        VertexSet(!self.0 & full_mask(n))
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().fold(0, |acc, v| acc | 1u64 << v))
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;
    fn into_iter(self) -> Bits {
        Bits(self.0)
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Position of a grid vertex: column `i` and row `j`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridCoord {
    pub i: usize,
    pub j: usize,
}

impl GridCoord {
    pub fn new(i: usize, j: usize) -> GridCoord {
        GridCoord { i, j }
    }

    /// Vertex index `(i-1)*k + (j-1)` in [`Graph::grid`].
    pub fn index(self, k: usize) -> usize {
        (self.i - 1) * k + (self.j - 1)
    }

    pub fn from_index(idx: usize, k: usize) -> GridCoord {
        GridCoord { i: idx / k + 1, j: idx % k + 1 }
    }
}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    label: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("Graph");
        if let Some(label) = &self.label {
            s.field("label", label);
        }
        s.field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

/// One block of a graph: a bridge, a maximal 2-connected subgraph, or an
/// isolated vertex. `vertices[i]` is the host vertex of block vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return invalid(format!("{n} vertices exceeds the cap of {MAX_VERTICES}"));
        }
        Ok(Graph { n, adj: vec![0; n], label: None })
    }

    /// Builds a simple graph. Duplicate edges collapse; self-loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return invalid(format!("edge {u}-{v} has an endpoint outside 0..{n}"));
            }
            if u == v {
                return invalid(format!("self-loop at vertex {u}"));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn adj_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < 64 && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in Bits(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn remove_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Graph with one extra isolated vertex appended.
    pub(crate) fn with_new_vertex(&self) -> Result<Graph> {
        if self.n >= MAX_VERTICES {
            return invalid("vertex cap reached");
        }
        let mut adj = self.adj.clone();
        adj.push(0);
        Ok(Graph { n: self.n + 1, adj, label: None })
    }

    /// Subgraph induced by `set`, relabelled in increasing order. Returns the
    /// graph together with the host vertex of each new vertex.
    pub fn induced(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = set.iter().filter(|&v| v < self.n).collect();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![0u64; map.len()];
        for (i, &v) in map.iter().enumerate() {
            for w in Bits(self.adj[v] & set.0) {
                adj[i] |= 1 << pos[w];
            }
        }
        (Graph { n: map.len(), adj, label: None }, map)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            for w in Bits(self.adj[v]) {
                adj[perm[v]] |= 1 << perm[w];
            }
        }
        Graph { n: self.n, adj, label: self.label.clone() }
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::NotFound(format!("vertex {v}")));
        }
        Ok(self.induced(self.vertices().without(v)).0)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotFound(format!("edge {u}-{v}")));
        }
        let mut g = Graph { n: self.n, adj: self.adj.clone(), label: None };
        g.remove_edge_unchecked(u, v);
        Ok(g)
    }

    /// Contracts `uv` into the lower of the two indices; the higher index is
    /// removed and later vertices shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotFound(format!("edge {u}-{v}")));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let mut adj = self.adj.clone();
        let merged = (adj[keep] | adj[gone]) & !(1 << keep) & !(1 << gone);
        for w in Bits(adj[gone]) {
            adj[w] &= !(1 << gone);
        }
        for w in Bits(merged) {
            adj[w] |= 1 << keep;
        }
        adj[keep] = merged;
        let g = Graph { n: self.n, adj, label: None };
        Ok(g.induced(self.vertices().without(gone)).0)
    }

    /// Vertices reachable from `start` using only vertices in `allowed`.
    pub fn reach(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within.0 & full_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach(left.trailing_zeros() as usize, left);
            out.push(VertexSet(c));
            left &= !c;
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, full_mask(self.n)) == full_mask(self.n)
    }

    /// `n >= k` and removing fewer than `k` vertices never disconnects.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if self.n < k {
            return false;
        }
        let all = full_mask(self.n);
        let connected_without = |x: u64| {
            let rest = all & !x;
            self.reach(rest.trailing_zeros() as usize, rest) == rest
        };
        (0..k).all(|size| for_each_combination(self.n, size, &mut |x| connected_without(x)))
    }

    /// Block-cut decomposition. Isolated vertices appear as single-vertex
    /// blocks; blocks are sorted by their vertex sets.
    pub fn blocks(&self) -> Vec<Block> {
        struct State {
            disc: Vec<usize>,
            low: Vec<usize>,
            time: usize,
            stack: Vec<(usize, usize)>,
            found: Vec<u64>,
        }
        fn dfs(g: &Graph, u: usize, parent: usize, st: &mut State) {
            st.disc[u] = st.time;
            st.low[u] = st.time;
            st.time += 1;
            for v in Bits(g.adj[u]) {
                if st.disc[v] == usize::MAX {
                    st.stack.push((u, v));
                    dfs(g, v, u, st);
                    st.low[u] = st.low[u].min(st.low[v]);
                    if st.low[v] >= st.disc[u] {
                        let mut set = 0u64;
                        while let Some((a, b)) = st.stack.pop() {
                            set |= 1 << a | 1 << b;
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        st.found.push(set);
                    }
                } else if v != parent && st.disc[v] < st.disc[u] {
                    st.stack.push((u, v));
                    st.low[u] = st.low[u].min(st.disc[v]);
                }
            }
        }
        let mut st = State {
            disc: vec![usize::MAX; self.n],
            low: vec![0; self.n],
            time: 0,
            stack: Vec::new(),
            found: Vec::new(),
        };
        for v in 0..self.n {
            if self.adj[v] == 0 {
                st.found.push(1 << v);
            } else if st.disc[v] == usize::MAX {
                dfs(self, v, usize::MAX, &mut st);
            }
        }
        let mut sets = st.found;
        sets.sort_by_key(|s| (s.trailing_zeros(), *s));
        sets.into_iter()
            .map(|s| {
                let (graph, vertices) = self.induced(VertexSet(s));
                Block { graph, vertices }
            })
            .collect()
    }

    /// Chordality via maximum cardinality search and a perfect elimination check.
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        let mut weight = vec![0usize; n];
        let mut numbered = 0u64;
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v =
                (0..n).filter(|&v| numbered >> v & 1 == 0).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
            for w in Bits(self.adj[v] & !numbered) {
                weight[w] += 1;
            }
            numbered |= 1 << v;
            order.push(v);
        }
        // Reverse visit order is a perfect elimination ordering iff chordal.
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut before = 0u64;
        for &v in &order {
            let earlier = self.adj[v] & before;
            if earlier != 0 {
                let u = Bits(earlier).max_by_key(|&w| pos[w]).unwrap();
                let rest = earlier & !(1 << u);
                if rest & !self.adj[u] != 0 {
                    return false;
                }
            }
            before |= 1 << v;
        }
        true
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            g.adj[u] = full_mask(n) & !(1 << u);
        }
        Ok(g.with_label(format!("K{n}")))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return invalid(format!("cycle needs at least 3 vertices, got {n}"));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Ok(Graph::from_edges(n, &edges)?.with_label(format!("C{n}")))
    }

    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return invalid("path needs at least 1 vertex");
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Ok(Graph::from_edges(n, &edges)?.with_label(format!("P{n}")))
    }

    /// Wheel on `n` vertices in total: hub 0 and rim cycle `1..n`.
    pub fn wheel(n: usize) -> Result<Graph> {
        if n < 4 {
            return invalid(format!("wheel needs at least 4 vertices, got {n}"));
        }
        let rim = n - 1;
        let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
        Ok(Graph::from_edges(n, &edges)?.with_label(format!("W{n}")))
    }

    /// The `k x k` grid; vertex `(i, j)` has index `(i-1)*k + (j-1)`.
    pub fn grid(k: usize) -> Result<Graph> {
        if k == 0 || k * k > MAX_VERTICES {
            return invalid(format!("grid side must be in 1..=8, got {k}"));
        }
        let mut g = Graph::empty(k * k)?;
        for i in 1..=k {
            for j in 1..=k {
                let v = GridCoord::new(i, j).index(k);
                if i < k {
                    g.add_edge_unchecked(v, GridCoord::new(i + 1, j).index(k));
                }
                if j < k {
                    g.add_edge_unchecked(v, GridCoord::new(i, j + 1).index(k));
                }
            }
        }
        Ok(g.with_label(format!("grid{k}")))
    }

    /// Catalog graphs by stable id.
    ///
    /// * `K<n>`, `C<n>`, `P<n>`, `W<n>`: complete graph, cycle `0..n`, path
    ///   `0..n`, wheel with hub 0 and rim `1..n` (n counts all vertices).
    /// * `W5_plus_e`: `W5` plus the rim chord 1-3.
    /// * `K33`: parts {0,1,2} and {3,4,5}; `K33_plus_e` adds 0-1.
    /// * `prism`: triangles 0-1-2 and 3-4-5 joined by 0-3, 1-4, 2-5;
    ///   `prism_plus_e` adds 0-4.
    pub fn named(id: &str) -> Result<Graph> {
        let not_found = || Error::NotFound(format!("unknown graph id {id:?}"));
        let g = match id {
            "K33" | "K3,3" => {
                let mut edges = Vec::new();
                for u in 0..3 {
                    for v in 3..6 {
                        edges.push((u, v));
                    }
                }
                Graph::from_edges(6, &edges)?
            }
            "K33_plus_e" => {
                let mut g = Graph::named("K33")?;
                g.add_edge_unchecked(0, 1);
                g
            }
            "prism" => Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])?,
            "prism_plus_e" => {
                let mut g = Graph::named("prism")?;
                g.add_edge_unchecked(0, 4);
                g
            }
            "W5_plus_e" => {
                let mut g = Graph::wheel(5)?;
                g.add_edge_unchecked(1, 3);
                g
            }
            _ => {
                let (kind, rest) = id.split_at(id.chars().next().map_or(0, |c| c.len_utf8()));
                let rest = rest.strip_prefix('_').unwrap_or(rest);
                let size: usize = rest.parse().map_err(|_| not_found())?;
                match kind {
                    "K" => Graph::complete(size)?,
                    "C" => Graph::cycle(size)?,
                    "P" => Graph::path(size)?,
                    "W" => Graph::wheel(size)?,
                    _ => return Err(not_found()),
                }
            }
        };
        Ok(g.with_label(id))
    }

    pub fn to_graph6(&self) -> String {
        let mut out = String::new();
        let n = self.n;
        if n <= 62 {
            out.push((n as u8 + 63) as char);
        } else {
            out.push('~');
            for shift in [12, 6, 0] {
                out.push((((n >> shift) & 63) as u8 + 63) as char);
            }
        }
        let mut acc = 0u8;
        let mut nbits = 0;
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | self.has_edge(i, j) as u8;
                nbits += 1;
                if nbits == 6 {
                    out.push((acc + 63) as char);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            out.push(((acc << (6 - nbits)) + 63) as char);
        }
        out
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        let text = text.trim_end_matches(['\n', '\r']);
        let (bytes, base) = match text.strip_prefix(">>graph6<<") {
            Some(rest) => (rest.as_bytes(), 10),
            None => (text.as_bytes(), 0),
        };
        let err = |offset: usize, msg: &str| Error::Parse { offset: base + offset, msg: msg.to_string() };
        for (i, &b) in bytes.iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(err(i, "byte outside the graph6 range 63..=126"));
            }
        }
        let (n, start) = match bytes.first() {
            None => return Err(err(0, "empty input")),
            Some(&126) => {
                if bytes.get(1) == Some(&126) {
                    return Err(err(1, "graphs above 258047 vertices are not supported"));
                }
                if bytes.len() < 4 {
                    return Err(err(bytes.len(), "truncated vertex count"));
                }
                let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
                (n, 4)
            }
            Some(&b) => ((b - 63) as usize, 1),
        };
        if n > MAX_VERTICES {
            return Err(err(0, &format!("{n} vertices exceeds the cap of {MAX_VERTICES}")));
        }
        let pairs = n * n.saturating_sub(1) / 2;
        let need = pairs.div_ceil(6);
        if bytes.len() != start + need {
            return Err(err(
                bytes.len().min(start + need),
                &format!("expected {} bytes for {n} vertices, got {}", start + need, bytes.len()),
            ));
        }
        let mut g = Graph::empty(n)?;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = bytes[start + k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    g.add_edge_unchecked(i, j);
                }
                k += 1;
            }
        }
        // padding bits must be zero
        if pairs % 6 != 0 {
            let last = bytes[start + need - 1] - 63;
            if last & ((1u8 << (6 - pairs % 6)) - 1) != 0 {
                return Err(err(start + need - 1, "nonzero padding bits"));
            }
        }
        Ok(g)
    }

    /// Edge-list text: `n m` followed by `m` lines `u v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut tokens = Vec::new();
        let mut start = None;
        for (i, c) in text.char_indices() {
            if c.is_whitespace() {
                if let Some(s) = start.take() {
                    tokens.push((s, &text[s..i]));
                }
            } else if start.is_none() {
                start = Some(i);
            }
        }
        if let Some(s) = start {
            tokens.push((s, &text[s..]));
        }
        let num = |k: usize| -> Result<usize> {
            let (offset, tok) = tokens
                .get(k)
                .copied()
                .ok_or(Error::Parse { offset: text.len(), msg: "unexpected end of input".into() })?;
            tok.parse().map_err(|_| Error::Parse { offset, msg: format!("expected an integer, found {tok:?}") })
        };
        let n = num(0)?;
        let m = num(1)?;
        if tokens.len() != 2 + 2 * m {
            let offset = tokens.get(2 + 2 * m).map_or(text.len(), |t| t.0);
            return Err(Error::Parse { offset, msg: format!("expected {m} edges") });
        }
        let mut edges = Vec::with_capacity(m);
        for e in 0..m {
            edges.push((num(2 + 2 * e)?, num(3 + 2 * e)?));
        }
        Graph::from_edges(n, &edges)
    }
}

/// Calls `f` on every `size`-subset of `0..n` as a bit mask, stopping early
/// (and returning false) as soon as `f` returns false.
pub fn for_each_combination(n: usize, size: usize, f: &mut dyn FnMut(u64) -> bool) -> bool {
    if size > n {
        return true;
    }
    if size == 0 {
        return f(0);
    }
    let mut x: u64 = full_mask(size);
    loop {
        if !f(x) {
            return false;
        }
        // Gosper's hack
        let c = x & x.wrapping_neg();
        let r = x.wrapping_add(c);
        if r == 0 {
            return true;
        }
        x = (((r ^ x) >> 2) / c) | r;
        if n < 64 && x >> n != 0 {
            return true;
        }
    }
}
