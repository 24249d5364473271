//! Tree-representations: a subcubic tree with one nontrivial subtree per
//! vertex such that adjacent vertices get intersecting subtrees. The width is
//! the largest number of subtrees sharing a tree edge.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matching::mm_value;
use crate::width::{mmw, BranchDecomposition, Tree};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRepresentation {
    pub tree: Tree,
    /// `subtrees[v]` holds the tree edge indices of `T_v`, sorted.
    pub subtrees: BTreeMap<usize, Vec<usize>>,
}

/// First problem found by [`verify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    Tree { msg: String },
    NotSubcubic { node: usize, degree: usize },
    TrivialSubtree { vertex: usize },
    MissingEdge { vertex: usize, edge: usize },
    DisconnectedSubtree { vertex: usize },
    Disjoint { u: usize, v: usize },
    Overloaded { edge: usize, load: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepReport {
    pub ok: bool,
    pub width: usize,
    pub violation: Option<Violation>,
}

impl TreeRepresentation {
    pub fn new(tree: Tree, subtrees: impl IntoIterator<Item = (usize, Vec<usize>)>) -> TreeRepresentation {
        let subtrees = subtrees
            .into_iter()
            .map(|(v, mut es)| {
                es.sort_unstable();
                es.dedup();
                (v, es)
            })
            .collect();
        TreeRepresentation { tree, subtrees }
    }

    fn nodes_of(&self, v: usize) -> Vec<bool> {
        let mut seen = vec![false; self.tree.nodes];
        for &e in &self.subtrees[&v] {
            let (p, q) = self.tree.edges[e];
            seen[p] = true;
            seen[q] = true;
        }
        seen
    }

    pub fn intersects(&self, u: usize, v: usize) -> bool {
        let a = self.nodes_of(u);
        let b = self.nodes_of(v);
        a.iter().zip(&b).any(|(&x, &y)| x && y)
    }

    /// Tree edges lying in both `T_u` and `T_v`.
    pub fn shared_edges(&self, u: usize, v: usize) -> Vec<usize> {
        let b = &self.subtrees[&v];
        self.subtrees[&u].iter().copied().filter(|e| b.binary_search(e).is_ok()).collect()
    }

    pub fn loads(&self) -> Vec<usize> {
        let mut load = vec![0; self.tree.edges.len()];
        for es in self.subtrees.values() {
            for &e in es {
                if e < load.len() {
                    load[e] += 1;
                }
            }
        }
        load
    }

    /// Splits tree edge `e` with a new node; every subtree through `e` keeps
    /// both halves. Returns the new node.
    fn subdivide(&mut self, e: usize) -> usize {
        let x = self.tree.subdivide(e);
        let half = self.tree.edges.len() - 1;
        for es in self.subtrees.values_mut() {
            if es.binary_search(&e).is_ok() {
                es.push(half);
            }
        }
        x
    }

    fn add_leaf(&mut self, at: usize) -> usize {
        let y = self.tree.add_node();
        self.tree.edges.push((at, y));
        y
    }

    fn push_edge(&mut self, v: usize, e: usize) {
        let es = self.subtrees.get_mut(&v).expect("vertex has a subtree");
        if let Err(i) = es.binary_search(&e) {
            es.insert(i, e);
        }
    }

    fn edge_connected(&self, v: usize) -> bool {
        let es = &self.subtrees[&v];
        let Some(&start) = es.first() else { return false };
        let mut reached = vec![start];
        let mut nodes = {
            let (p, q) = self.tree.edges[start];
            vec![p, q]
        };
        let mut grew = true;
        while grew {
            grew = false;
            for &e in es {
                if reached.contains(&e) {
                    continue;
                }
                let (p, q) = self.tree.edges[e];
                if nodes.contains(&p) || nodes.contains(&q) {
                    reached.push(e);
                    nodes.push(p);
                    nodes.push(q);
                    grew = true;
                }
            }
        }
        reached.len() == es.len()
    }
}

pub fn width(r: &TreeRepresentation) -> usize {
    r.loads().into_iter().max().unwrap_or(0)
}

/// Checks `r` against `g` with width bound `k`. The report carries the first
/// violation in a fixed order: tree shape, subtrees, adjacency, load.
pub fn verify(g: &Graph, r: &TreeRepresentation, k: usize) -> Result<RepReport> {
    if r.subtrees.len() != g.n() || r.subtrees.keys().enumerate().any(|(i, &v)| i != v) {
        return invalid(format!(
            "subtrees are keyed by {:?}, expected 0..{}",
            r.subtrees.keys().collect::<Vec<_>>(),
            g.n()
        ));
    }
    let fail = |violation| Ok(RepReport { ok: false, width: 0, violation: Some(violation) });
    if let Err(e) = r.tree.check() {
        return fail(Violation::Tree { msg: e.to_string() });
    }
    if let Some((node, &degree)) = r.tree.degrees().iter().enumerate().find(|&(_, &d)| d > 3) {
        return fail(Violation::NotSubcubic { node, degree });
    }
    for (&v, es) in &r.subtrees {
        if es.is_empty() {
            return fail(Violation::TrivialSubtree { vertex: v });
        }
        if let Some(&edge) = es.iter().find(|&&e| e >= r.tree.edges.len()) {
            return fail(Violation::MissingEdge { vertex: v, edge });
        }
        if !r.edge_connected(v) {
            return fail(Violation::DisconnectedSubtree { vertex: v });
        }
    }
    for (u, v) in g.edges() {
        if !r.intersects(u, v) {
            return fail(Violation::Disjoint { u, v });
        }
    }
    let loads = r.loads();
    let w = loads.iter().copied().max().unwrap_or(0);
    if let Some((edge, &load)) = loads.iter().enumerate().find(|&(_, &l)| l > k) {
        return Ok(RepReport { ok: false, width: w, violation: Some(Violation::Overloaded { edge, load }) });
    }
    Ok(RepReport { ok: true, width: w, violation: None })
}

fn expect_valid(g: &Graph, r: &TreeRepresentation, k: usize, what: &str) -> Result<()> {
    let report = verify(g, r, k)?;
    if report.ok {
        Ok(())
    } else {
        Err(Error::InvariantViolation(format!("{what}: {:?}", report.violation)))
    }
}

/// Representation of `g / uv`: the merged vertex gets `T_u ∪ T_v`, with the
/// same index shift as [`Graph::contract_edge`].
pub fn contract_rep(r: &TreeRepresentation, g: &Graph, u: usize, v: usize) -> Result<TreeRepresentation> {
    if !g.has_edge(u, v) {
        return invalid(format!("{u}-{v} is not an edge"));
    }
    let report = verify(g, r, usize::MAX)?;
    if !report.ok {
        return invalid(format!("input does not represent the graph: {:?}", report.violation));
    }
    let (keep, gone) = (u.min(v), u.max(v));
    let mut subtrees = BTreeMap::new();
    for (&x, es) in &r.subtrees {
        if x == gone {
            continue;
        }
        let mut es = es.clone();
        if x == keep {
            es.extend(&r.subtrees[&gone]);
        }
        subtrees.insert(if x > gone { x - 1 } else { x }, es);
    }
    let out = TreeRepresentation::new(r.tree.clone(), subtrees);
    expect_valid(&g.contract_edge(u, v)?, &out, report.width, "contracted representation")?;
    Ok(out)
}

fn check_good(g: &Graph, r: &TreeRepresentation, a: usize, b: usize) -> Result<usize> {
    if a >= g.n() || b >= g.n() {
        return invalid(format!("vertices {a}, {b} must lie below {}", g.n()));
    }
    let report = verify(g, r, 2)?;
    if !report.ok {
        return invalid(format!("not a width-2 representation: {:?}", report.violation));
    }
    let shared = r.shared_edges(a, b);
    match shared.first() {
        Some(&e) => Ok(e),
        None => invalid(format!("subtrees of {a} and {b} share no edge")),
    }
}

/// Makes the shared `a`/`b` edge pendant: if no shared edge ends in a leaf,
/// the lowest shared edge is subdivided and a leaf edge owned by `a` and `b`
/// is hung from the new node.
pub fn pendant_normalize(g: &Graph, r: &TreeRepresentation, a: usize, b: usize) -> Result<TreeRepresentation> {
    let first = check_good(g, r, a, b)?;
    if pendant_shared_edge(r, a, b).is_some() {
        return Ok(r.clone());
    }
    let mut out = r.clone();
    let x = out.subdivide(first);
    out.add_leaf(x);
    let e = out.tree.edges.len() - 1;
    out.push_edge(a, e);
    out.push_edge(b, e);
    expect_valid(g, &out, 2, "normalised representation")?;
    Ok(out)
}

/// A shared `a`/`b` edge with a leaf endpoint, as `(edge, inner, leaf)`.
pub fn pendant_shared_edge(r: &TreeRepresentation, a: usize, b: usize) -> Option<(usize, usize, usize)> {
    let deg = r.tree.degrees();
    r.shared_edges(a, b).into_iter().find_map(|e| {
        let (p, q) = r.tree.edges[e];
        if deg[q] == 1 {
            Some((e, p, q))
        } else if deg[p] == 1 {
            Some((e, q, p))
        } else {
            None
        }
    })
}

/// `G − ab` plus new vertices `c = n`, `d = n + 1` and the path `a c d b`.
pub fn aux_graph(g: &Graph, a: usize, b: usize) -> Result<Graph> {
    if a == b || a >= g.n() || b >= g.n() {
        return invalid(format!("need two distinct vertices below {}, got {a} and {b}", g.n()));
    }
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().filter(|&e| e != (a.min(b), a.max(b))).collect();
    edges.extend([(a, n), (n, n + 1), (n + 1, b)]);
    Graph::from_edges(n + 2, &edges)
}

/// Width-2 representation of [`aux_graph`] from a good one of `g`: the
/// pendant shared edge `p–q` becomes the path `p–r–s–q` with `T_c = {r–s}`,
/// `T_d = {s–q}` and `T_b` running along the whole path.
pub fn extend_to_aux(g: &Graph, r: &TreeRepresentation, a: usize, b: usize) -> Result<TreeRepresentation> {
    let mut out = pendant_normalize(g, r, a, b)?;
    let (e, p, q) = pendant_shared_edge(&out, a, b).expect("normalised");
    // orient e as p–q so that subdividing twice leaves e = p–r, then r–s and
    // s–q appended
    out.tree.edges[e] = (p, q);
    out.tree.subdivide(e);
    let rs = out.tree.edges.len() - 1;
    out.tree.subdivide(rs);
    let sq = out.tree.edges.len() - 1;
    let n = g.n();
    out.subtrees.insert(n, vec![rs]);
    out.subtrees.insert(n + 1, vec![sq]);
    out.push_edge(b, rs);
    out.push_edge(b, sq);
    expect_valid(&aux_graph(g, a, b)?, &out, 2, "auxiliary representation")?;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodPairVerdict {
    pub good: bool,
    pub aux_width: usize,
    pub witness: Option<TreeRepresentation>,
}

/// Decides goodness of `(g, {a, b})` as `mmw(aux_graph) ≤ 2` and tries to
/// attach an explicit good representation.
pub fn is_good_pair(g: &Graph, a: usize, b: usize) -> Result<GoodPairVerdict> {
    let h = aux_graph(g, a, b)?;
    let res = mmw(&h)?;
    let good = res.width <= 2;
    let witness =
        if good { rep_from_decomposition(&h, &res.witness).and_then(|rh| good_from_aux(g, &rh, a, b)) } else { None };
    Ok(GoodPairVerdict { good, aux_width: res.width, witness })
}

/// Best-effort width-minimal representation on the tree of `d`: `T_v` spans
/// the leaf of `v` and every tree edge whose König cover contains `v`. Both
/// cover orientations are tried; the result is verified, never assumed.
pub fn rep_from_decomposition(g: &Graph, d: &BranchDecomposition) -> Option<TreeRepresentation> {
    let n = g.n();
    if n < 2 || d.validate().is_err() {
        return None;
    }
    let t = &d.tree;
    let inc = t.incidence();
    let sides = d.edge_partitions();
    let mut best: Option<TreeRepresentation> = None;
    for flip in [false, true] {
        let mut anchors: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (v, anchor) in anchors.iter_mut().enumerate() {
            anchor.push(inc[d.leaf_map[v]][0].1);
        }
        for (e, &side) in sides.iter().enumerate() {
            let side = if flip { !side & crate::graph::full_mask(n) } else { side };
            let (_, cert) = mm_value(g, VertexSet(side));
            for v in cert.cover {
                anchors[v].push(e);
            }
        }
        let subtrees = anchors.iter().enumerate().map(|(v, es)| (v, steiner_edges(t, &inc, es)));
        let r = TreeRepresentation::new(t.clone(), subtrees);
        let ok = verify(g, &r, usize::MAX).map(|rep| rep.ok).unwrap_or(false);
        if ok && best.as_ref().is_none_or(|b| width(&r) < width(b)) {
            best = Some(r);
        }
    }
    best
}

/// Edges of the smallest subtree containing all `required` edges.
fn steiner_edges(t: &Tree, inc: &[Vec<(usize, usize)>], required: &[usize]) -> Vec<usize> {
    let mut alive = vec![true; t.edges.len()];
    let mut pinned = vec![false; t.nodes];
    for &e in required {
        let (p, q) = t.edges[e];
        pinned[p] = true;
        pinned[q] = true;
    }
    let mut deg: Vec<usize> = inc.iter().map(|l| l.len()).collect();
    let mut stack: Vec<usize> = (0..t.nodes).filter(|&x| deg[x] == 1 && !pinned[x]).collect();
    while let Some(x) = stack.pop() {
        if deg[x] != 1 {
            continue;
        }
        let Some(&(y, e)) = inc[x].iter().find(|&&(_, e)| alive[e]) else { continue };
        alive[e] = false;
        deg[x] = 0;
        deg[y] -= 1;
        if deg[y] == 1 && !pinned[y] {
            stack.push(y);
        }
    }
    (0..t.edges.len()).filter(|&e| alive[e]).collect()
}

/// A good representation of `g` for `{a, b}` from a width-2 representation of
/// its auxiliary graph. Merging `c`, `d` into `a` or `b` is tried first; when
/// `T_a` and `T_b` still share no edge, the first edge `v1–u` of the path from
/// `T_a ∩ T_c` to `T_d ∩ T_b` is subdivided with `v3`, a leaf `v4` is hung
/// from it, `T_a` gains `v1–v3` and `v3–v4`, and `T_b` gains `v3–v4` plus the
/// path from `v3` to `T_b`.
pub fn good_from_aux(g: &Graph, rh: &TreeRepresentation, a: usize, b: usize) -> Option<TreeRepresentation> {
    let (c, d) = (g.n(), g.n() + 1);
    if rh.subtrees.len() != g.n() + 2 {
        return None;
    }
    let project = |ta: &[usize], tb: &[usize]| {
        let mut subtrees: BTreeMap<usize, Vec<usize>> =
            rh.subtrees.iter().filter(|&(&v, _)| v < c).map(|(&v, es)| (v, es.clone())).collect();
        subtrees.insert(a, ta.to_vec());
        subtrees.insert(b, tb.to_vec());
        TreeRepresentation::new(rh.tree.clone(), subtrees)
    };
    let cat = |xs: &[usize]| -> Vec<usize> { xs.iter().flat_map(|&v| rh.subtrees[&v].clone()).collect() };
    for (ta, tb) in [(cat(&[a, c, d]), cat(&[b])), (cat(&[a, c]), cat(&[d, b])), (cat(&[a]), cat(&[c, d, b]))] {
        let r = project(&ta, &tb);
        if !r.shared_edges(a, b).is_empty() && verify(g, &r, 2).map(|x| x.ok).unwrap_or(false) {
            return Some(r);
        }
    }
    let nodes = |v: usize| rh.nodes_of(v);
    let meet = |x: usize, y: usize| {
        let (p, q) = (nodes(x), nodes(y));
        (0..rh.tree.nodes).find(|&i| p[i] && q[i])
    };
    let (v1, v2) = (meet(a, c)?, meet(d, b)?);
    if v1 == v2 {
        return None;
    }
    let path = tree_path(&rh.tree, v1, v2);
    let mut r = project(&rh.subtrees[&a], &rh.subtrees[&b]);
    let e = path[0];
    let v3 = r.subdivide(e);
    let half = r.tree.edges.len() - 1;
    // subdivision keeps v1 on edge e, the far half is the appended edge
    let (near, far) = if r.tree.edges[e].0 == v1 { (e, half) } else { (half, e) };
    r.add_leaf(v3);
    let leaf = r.tree.edges.len() - 1;
    for x in [near, leaf] {
        r.push_edge(a, x);
    }
    for x in std::iter::once(leaf).chain(std::iter::once(far)).chain(path[1..].iter().copied()) {
        r.push_edge(b, x);
    }
    (!r.shared_edges(a, b).is_empty() && verify(g, &r, 2).map(|x| x.ok).unwrap_or(false)).then_some(r)
}

/// Edge indices along the tree path from `from` to `to`.
fn tree_path(t: &Tree, from: usize, to: usize) -> Vec<usize> {
    let inc = t.incidence();
    let mut back = vec![None; t.nodes];
    let mut seen = vec![false; t.nodes];
    seen[from] = true;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for &(y, e) in &inc[x] {
            if !seen[y] {
                seen[y] = true;
                back[y] = Some((x, e));
                queue.push_back(y);
            }
        }
    }
    let mut path = Vec::new();
    let mut x = to;
    while let Some((p, e)) = back[x] {
        path.push(e);
        x = p;
    }
    path.reverse();
    path
}

/// A graph on which `{a, b}` has a good representation.
#[derive(Clone, Debug)]
pub struct GoodSide {
    pub graph: Graph,
    pub rep: TreeRepresentation,
    pub a: usize,
    pub b: usize,
}

/// Glues two good sides along `{a, b}`. The union graph takes the vertices of
/// `left` first, then those of `right` other than its `a`, `b`; the returned
/// map sends each `right` vertex to its union index. Shared edges of both
/// sides are subdivided and the new nodes joined by an edge owned by `a` and
/// `b`.
pub fn glue_good(left: &GoodSide, right: &GoodSide) -> Result<(GoodSide, Vec<usize>)> {
    let el = check_good(&left.graph, &left.rep, left.a, left.b)?;
    let er = check_good(&right.graph, &right.rep, right.a, right.b)?;
    if left.a == left.b || right.a == right.b {
        return invalid("glued pairs need two distinct vertices");
    }
    let nl = left.graph.n();
    let mut map = vec![usize::MAX; right.graph.n()];
    map[right.a] = left.a;
    map[right.b] = left.b;
    let mut next = nl;
    for slot in map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut edges = left.graph.edges();
    edges.extend(right.graph.edges().into_iter().map(|(u, v)| (map[u], map[v])));
    let graph = Graph::from_edges(next, &edges)?;

    let mut rep = left.rep.clone();
    let x = rep.subdivide(el);
    let mut rr = right.rep.clone();
    let y = rr.subdivide(er);
    let (off_n, off_e) = (rep.tree.nodes, rep.tree.edges.len());
    rep.tree.nodes += rr.tree.nodes;
    rep.tree.edges.extend(rr.tree.edges.iter().map(|&(p, q)| (p + off_n, q + off_n)));
    for (&v, es) in &rr.subtrees {
        let shifted = es.iter().map(|&e| e + off_e);
        rep.subtrees.entry(map[v]).or_default().extend(shifted);
    }
    rep.tree.edges.push((x, y + off_n));
    let bridge = rep.tree.edges.len() - 1;
    for es in rep.subtrees.values_mut() {
        es.sort_unstable();
    }
    rep.push_edge(left.a, bridge);
    rep.push_edge(left.b, bridge);
    expect_valid(&graph, &rep, 2, "glued representation")?;
    Ok((GoodSide { graph, rep, a: left.a, b: left.b }, map))
}

/// One part for [`glue_three`]: host vertex set, a good representation of
/// the induced subgraph (vertices in increasing host order) and the host
/// vertices `a`, `b` separating the part from the rest. A part of at most
/// two vertices may use `a == b` when it is a single vertex.
#[derive(Clone, Debug)]
pub struct Part {
    pub vertices: VertexSet,
    pub rep: TreeRepresentation,
    pub a: usize,
    pub b: usize,
}

/// Representation of a part with at most two vertices on a single edge.
pub fn trivial_part(vertices: VertexSet) -> Result<Part> {
    let vs: Vec<usize> = vertices.iter().collect();
    if vs.is_empty() || vs.len() > 2 {
        return invalid(format!("a trivial part has 1 or 2 vertices, got {}", vs.len()));
    }
    let tree = Tree::new(2, vec![(0, 1)])?;
    let rep = TreeRepresentation::new(tree, (0..vs.len()).map(|i| (i, vec![0])));
    Ok(Part { vertices, rep, a: vs[0], b: *vs.last().unwrap() })
}

/// Width-2 representation of `g` from three parts partitioning `V(g)`, each
/// separated from the rest by its `{a, b}`: the shared edges are made pendant
/// and the three leaves are identified.
pub fn glue_three(g: &Graph, parts: &[Part; 3]) -> Result<TreeRepresentation> {
    let all = g.vertices();
    let mut union = VertexSet::EMPTY;
    for p in parts {
        if p.vertices.is_empty() {
            return invalid("empty part");
        }
        if !union.intersection(p.vertices).is_empty() || !p.vertices.is_subset(all) {
            return invalid("parts must partition the vertex set");
        }
        union = union.union(p.vertices);
        if !p.vertices.contains(p.a) || !p.vertices.contains(p.b) {
            return invalid(format!("{} and {} must lie in their part", p.a, p.b));
        }
        let rest = all.difference(p.vertices);
        for v in p.vertices.iter().filter(|&v| v != p.a && v != p.b) {
            if !g.neighbors(v).intersection(rest).is_empty() {
                return invalid(format!("vertex {v} has neighbours outside its part"));
            }
        }
    }
    if union != all {
        return invalid("parts must cover the vertex set");
    }
    let mut rep = TreeRepresentation { tree: Tree::default(), subtrees: BTreeMap::new() };
    let mut leaves = Vec::new();
    for p in parts {
        let (sub, host) = g.induced(p.vertices);
        let local = |v: usize| host.iter().position(|&h| h == v).expect("in part");
        let (a, b) = (local(p.a), local(p.b));
        let norm = pendant_normalize(&sub, &p.rep, a, b)?;
        let (_, _, leaf) = pendant_shared_edge(&norm, a, b).expect("normalised");
        let (off_n, off_e) = (rep.tree.nodes, rep.tree.edges.len());
        rep.tree.nodes += norm.tree.nodes;
        rep.tree.edges.extend(norm.tree.edges.iter().map(|&(x, y)| (x + off_n, y + off_n)));
        for (&v, es) in &norm.subtrees {
            rep.subtrees.insert(host[v], es.iter().map(|&e| e + off_e).collect());
        }
        leaves.push(leaf + off_n);
    }
    // identify the three leaves with the first one, then drop the other two
    let z = leaves[0];
    for edge in rep.tree.edges.iter_mut() {
        for end in [&mut edge.0, &mut edge.1] {
            if leaves[1..].contains(end) {
                *end = z;
            }
        }
    }
    let mut renum = vec![usize::MAX; rep.tree.nodes];
    let mut count = 0;
    for (x, slot) in renum.iter_mut().enumerate() {
        if !leaves[1..].contains(&x) {
            *slot = count;
            count += 1;
        }
    }
    rep.tree.nodes = count;
    rep.tree.edges.iter_mut().for_each(|e| *e = (renum[e.0], renum[e.1]));
    expect_valid(g, &rep, 2, "three-part representation")?;
    Ok(rep)
}

/// Graph on the vertices of `r` with an edge wherever two subtrees meet.
pub fn intersection_graph(r: &TreeRepresentation) -> Result<Graph> {
    let keys: Vec<usize> = r.subtrees.keys().copied().collect();
    let mut edges = Vec::new();
    for (i, &u) in keys.iter().enumerate() {
        for &v in &keys[i + 1..] {
            if r.intersects(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(keys.len(), &edges)
}
