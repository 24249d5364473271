//! The minor obstructions for mm-width at most 2, regenerated by search.
//!
//! 3-connected obstructions are the edge-minimal 3-connected graphs on seven
//! vertices that pass the minimality filter. The rest come from 3-connected
//! bases on 4 to 6 vertices whose edges are replaced by small gadgets:
//!
//! * `S1`: `ab` becomes the path `a c b`,
//! * `S2`: `ab` becomes the path `a c d b`,
//! * `S11`: `ab` becomes the two paths `a c b` and `a d b`.
//!
//! Per edge the gadgets are ordered `None < S1 < S2` and `S1 < S11`, and a
//! dominated pattern yields a minor of the dominating one. Width at least 3
//! therefore propagates upwards, and an obstruction needs every immediate
//! predecessor of its pattern at width at most 2. The search only expands
//! patterns of width at most 2, which keeps it small.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{all_graphs, canonical_graph, canonical_key, is_isomorphic, CanonKey, CANON_MAX};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::minor::{has_minor, mmw_le2_by_obstructions, one_step_minors};
use crate::tangle::{obstruction_tangle, verify_tangle, TangleCertificate};
use crate::width::{mmw_at_most, mmw_value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeOp {
    None,
    S1,
    S2,
    S11,
}

impl EdgeOp {
    const ALL: [EdgeOp; 4] = [EdgeOp::None, EdgeOp::S1, EdgeOp::S2, EdgeOp::S11];

    pub fn added_vertices(self) -> usize {
        match self {
            EdgeOp::None => 0,
            EdgeOp::S1 => 1,
            EdgeOp::S2 | EdgeOp::S11 => 2,
        }
    }

    fn below(self) -> Option<EdgeOp> {
        match self {
            EdgeOp::None => None,
            EdgeOp::S1 => Some(EdgeOp::None),
            EdgeOp::S2 | EdgeOp::S11 => Some(EdgeOp::S1),
        }
    }

    fn above(self) -> &'static [EdgeOp] {
        match self {
            EdgeOp::None => &[EdgeOp::S1],
            EdgeOp::S1 => &[EdgeOp::S2, EdgeOp::S11],
            EdgeOp::S2 | EdgeOp::S11 => &[],
        }
    }

    /// The per-edge minor order.
    pub fn le(self, other: EdgeOp) -> bool {
        self == other || self == EdgeOp::None || (self == EdgeOp::S1 && other != EdgeOp::None)
    }

    fn code(self) -> u64 {
        self as u64
    }
}

/// `ops[i]` applies to `base.edges()[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionPattern {
    pub base: Graph,
    pub ops: Vec<EdgeOp>,
}

/// Where a gadget landed in the subdivided graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub a: usize,
    pub b: usize,
    pub op: EdgeOp,
    pub inner: Vec<usize>,
}

impl SubdivisionPattern {
    pub fn new(base: &Graph, ops: Vec<EdgeOp>) -> Result<SubdivisionPattern> {
        if ops.len() != base.m() {
            return invalid(format!("pattern has {} ops for {} edges", ops.len(), base.m()));
        }
        Ok(SubdivisionPattern { base: base.clone(), ops })
    }

    pub fn identity(base: &Graph) -> SubdivisionPattern {
        SubdivisionPattern { base: base.clone(), ops: vec![EdgeOp::None; base.m()] }
    }

    pub fn added_vertices(&self) -> usize {
        self.ops.iter().map(|o| o.added_vertices()).sum()
    }

    /// Componentwise `other ≤ self` on the same base.
    pub fn dominates(&self, other: &SubdivisionPattern) -> bool {
        self.base == other.base && other.ops.iter().zip(&self.ops).all(|(&o, &s)| o.le(s))
    }

    pub fn entries(&self) -> Vec<PatternEntry> {
        self.base
            .edges()
            .into_iter()
            .zip(&self.ops)
            .filter(|(_, &op)| op != EdgeOp::None)
            .map(|(edge, &op)| PatternEntry { edge, op })
            .collect()
    }

    fn code(&self) -> u64 {
        self.ops.iter().enumerate().fold(0, |acc, (i, o)| acc | o.code() << (2 * i))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternEntry {
    pub edge: (usize, usize),
    pub op: EdgeOp,
}

pub fn apply_pattern(p: &SubdivisionPattern) -> Result<Graph> {
    Ok(apply_pattern_with_gadgets(p)?.0)
}

/// Gadget vertices are appended in base edge order.
pub fn apply_pattern_with_gadgets(p: &SubdivisionPattern) -> Result<(Graph, Vec<Gadget>)> {
    let n = p.base.n() + p.added_vertices();
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::Unsupported(format!("pattern graph would have {n} vertices")));
    }
    let mut edges = Vec::new();
    let mut gadgets = Vec::new();
    let mut next = p.base.n();
    for (&(a, b), &op) in p.base.edges().iter().zip(&p.ops) {
        match op {
            EdgeOp::None => edges.push((a, b)),
            EdgeOp::S1 => {
                edges.extend([(a, next), (next, b)]);
                gadgets.push(Gadget { a, b, op, inner: vec![next] });
            }
            EdgeOp::S2 => {
                edges.extend([(a, next), (next, next + 1), (next + 1, b)]);
                gadgets.push(Gadget { a, b, op, inner: vec![next, next + 1] });
            }
            EdgeOp::S11 => {
                edges.extend([(a, next), (next, b), (a, next + 1), (next + 1, b)]);
                gadgets.push(Gadget { a, b, op, inner: vec![next, next + 1] });
            }
        }
        next += op.added_vertices();
    }
    Ok((Graph::from_edges(n, &edges)?, gadgets))
}

/// Every one of the `4^m` patterns on `base`, in lexicographic op order.
pub fn all_patterns(base: &Graph) -> impl Iterator<Item = SubdivisionPattern> + '_ {
    let m = base.m();
    (0..1u64 << (2 * m)).map(move |code| SubdivisionPattern {
        base: base.clone(),
        ops: (0..m).map(|i| EdgeOp::ALL[(code >> (2 * i) & 3) as usize]).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseGraphs {
    pub four: Vec<Graph>,
    pub five: Vec<Graph>,
    pub six: Vec<Graph>,
    /// 3-connected on seven vertices, losing 3-connectivity with any edge.
    pub seven_edge_minimal: Vec<Graph>,
}

impl BaseGraphs {
    pub fn group(&self, n: usize) -> &[Graph] {
        match n {
            4 => &self.four,
            5 => &self.five,
            6 => &self.six,
            7 => &self.seven_edge_minimal,
            _ => &[],
        }
    }
}

fn edge_minimal_3_connected(g: &Graph) -> bool {
    g.is_k_connected(3) && g.edges().iter().all(|&(u, v)| !g.delete_edge(u, v).unwrap().is_k_connected(3))
}

/// Canonical representatives sorted by canonical key.
pub fn base_graphs() -> Result<BaseGraphs> {
    let three = |n: usize| -> Vec<Graph> { all_graphs(n).into_iter().filter(|g| g.is_k_connected(3)).collect() };
    Ok(BaseGraphs {
        four: three(4),
        five: three(5),
        six: three(6),
        seven_edge_minimal: all_graphs(7).into_iter().filter(edge_minimal_3_connected).collect(),
    })
}

/// Recognised names of small bases, for reporting.
pub fn base_name(g: &Graph) -> Option<String> {
    const NAMES: [&str; 10] = ["K4", "W5", "W5_plus_e", "K5", "K33", "K33_plus_e", "prism", "prism_plus_e", "W6", "K6"];
    NAMES
        .iter()
        .find(|id| Graph::named(id).is_ok_and(|h| is_isomorphic(g, &h).unwrap_or(false)))
        .map(|id| id.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub pattern: SubdivisionPattern,
    /// Canonical form of the subdivided graph.
    pub graph: Graph,
}

/// Search statistics for one base.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontierStats {
    pub evaluated: usize,
    pub distinct_graphs: usize,
    pub width_le2: usize,
}

/// Patterns of width at least 3 whose immediate predecessors all have width
/// at most 2, one per isomorphism class, ordered by added vertices and then
/// canonical form. Every obstruction built on `base` is among them.
pub fn generate_candidates(base: &Graph) -> Result<(Vec<Candidate>, FrontierStats)> {
    let mut stats = FrontierStats::default();
    let mut cache: HashMap<CanonKey, bool> = HashMap::new();
    let mut low: HashSet<u64> = HashSet::new();
    let mut found: BTreeMap<(usize, String), Candidate> = BTreeMap::new();

    let mut tier = vec![SubdivisionPattern::identity(base)];
    while !tier.is_empty() {
        // evaluate the whole tier in parallel, each distinct class once
        let graphs: Vec<(Graph, CanonKey)> = tier
            .par_iter()
            .map(|p| {
                let g = apply_pattern(p)?;
                if g.n() > CANON_MAX {
                    return Err(Error::Unsupported(format!(
                        "candidate with {} vertices survived pruning on base {}",
                        g.n(),
                        base.to_graph6()
                    )));
                }
                let key = canonical_key(&g)?;
                Ok((g, key))
            })
            .collect::<Result<_>>()?;
        let mut fresh: Vec<(CanonKey, &Graph)> = Vec::new();
        let mut seen = HashSet::new();
        for (g, key) in &graphs {
            if !cache.contains_key(key) && seen.insert(*key) {
                fresh.push((*key, g));
            }
        }
        let verdicts: Vec<bool> = fresh.par_iter().map(|(_, g)| mmw_at_most(g, 2)).collect::<Result<_>>()?;
        for ((key, _), le2) in fresh.iter().zip(verdicts) {
            cache.insert(*key, le2);
        }
        stats.evaluated += tier.len();

        let mut next: BTreeSet<Vec<EdgeOp>> = BTreeSet::new();
        for (p, (g, key)) in tier.iter().zip(&graphs) {
            if cache[key] {
                low.insert(p.code());
                for i in 0..p.ops.len() {
                    for &up in p.ops[i].above() {
                        let mut ops = p.ops.clone();
                        ops[i] = up;
                        next.insert(ops);
                    }
                }
            } else {
                let c = canonical_graph(g)?;
                // tiers are added-vertex counts, so a class first met keeps
                // its smallest pattern
                let entry = (p.added_vertices(), c.to_graph6());
                found.entry(entry).or_insert(Candidate { pattern: p.clone(), graph: c });
            }
        }
        tier = next
            .into_iter()
            .map(|ops| SubdivisionPattern { base: base.clone(), ops })
            .filter(|p| {
                (0..p.ops.len()).all(|i| match p.ops[i].below() {
                    None => true,
                    Some(down) => {
                        let mut q = p.clone();
                        q.ops[i] = down;
                        low.contains(&q.code())
                    }
                })
            })
            .collect();
    }
    stats.distinct_graphs = cache.len();
    stats.width_le2 = cache.values().filter(|&&b| b).count();
    Ok((found.into_values().collect(), stats))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    O3,
    O4,
    O5,
    O6,
}

impl Family {
    pub fn for_base(n: usize) -> Option<Family> {
        match n {
            4 => Some(Family::O4),
            5 => Some(Family::O5),
            6 => Some(Family::O6),
            7 => Some(Family::O3),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub family: Family,
    /// graph6 of the base in canonical form; an O3 graph is its own base.
    pub base: String,
    pub base_name: Option<String>,
    pub pattern: Vec<PatternEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorCheck {
    pub g6: String,
    pub mmw_le2: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionRecord {
    /// graph6 of the canonical form.
    pub g6: String,
    pub n: usize,
    pub m: usize,
    #[serde(flatten)]
    pub provenance: Provenance,
    /// Exact mm-width from the subset DP.
    pub mmw: usize,
    /// Order-3 tangle from the good-side recipe, when it verifies.
    pub tangle: Option<TangleCertificate>,
    pub minimality: Vec<MinorCheck>,
}

impl ObstructionRecord {
    pub fn graph(&self) -> Result<Graph> {
        Graph::from_graph6(&self.g6)
    }
}

/// Pairs `{a, b}` whose removal disconnects `g`, with the components left.
pub fn two_cuts(g: &Graph) -> Vec<((usize, usize), Vec<VertexSet>)> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            let rest = g.vertices().without(a).without(b);
            let comps = g.components_within(rest);
            if comps.len() > 1 {
                out.push(((a, b), comps));
            }
        }
    }
    out
}

/// For each 2-cut with a unique largest component, everything but that
/// component.
pub fn good_sides(g: &Graph) -> Vec<VertexSet> {
    let mut sides = BTreeSet::new();
    for (_, comps) in two_cuts(g) {
        let big = comps.iter().map(|c| c.len()).max().unwrap();
        let mut largest = comps.iter().filter(|c| c.len() == big);
        let (Some(&bad), None) = (largest.next(), largest.next()) else { continue };
        sides.insert(g.vertices().difference(bad));
    }
    sides.into_iter().collect()
}

/// `[a, u, b]` and `[a, v, b]` for each pair of degree-2 vertices `u, v`
/// with the same two neighbours `a, b`.
pub fn eleven_triples(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let nu = g.neighbors(u);
            if nu.len() == 2 && nu == g.neighbors(v) && !g.has_edge(u, v) {
                let mut it = nu.iter();
                let (a, b) = (it.next().unwrap(), it.next().unwrap());
                out.push([a, u, b]);
                out.push([a, v, b]);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// A record iff `mmw(g) ≥ 3` and every one-step minor has `mmw ≤ 2`.
pub fn filter_obstruction(g: &Graph, provenance: Provenance) -> Result<Option<ObstructionRecord>> {
    if mmw_at_most(g, 2)? {
        return Ok(None);
    }
    let minors = one_step_minors(g)?;
    let verdicts: Vec<bool> = minors.par_iter().map(|m| mmw_at_most(m, 2)).collect::<Result<_>>()?;
    if verdicts.iter().any(|&le2| !le2) {
        return Ok(None);
    }
    let c = canonical_graph(g)?;
    let tangle = obstruction_tangle(&c, &good_sides(&c), &eleven_triples(&c));
    let tangle = verify_tangle(&c, &tangle)?.ok.then_some(tangle);
    Ok(Some(ObstructionRecord {
        g6: c.to_graph6(),
        n: c.n(),
        m: c.m(),
        provenance,
        mmw: mmw_value(&c)?,
        tangle,
        minimality: minors.iter().zip(verdicts).map(|(m, mmw_le2)| MinorCheck { g6: m.to_graph6(), mmw_le2 }).collect(),
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogSummary {
    pub per_family: BTreeMap<Family, usize>,
    pub total: usize,
    pub agrees_with_42: bool,
    pub agrees_with_45: bool,
    /// Base groups by size and the number of bases in each.
    pub bases: BTreeMap<usize, usize>,
    pub patterns_evaluated: usize,
    pub candidates: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub summary: CatalogSummary,
    pub records: Vec<ObstructionRecord>,
    /// Every 6-vertex base with two adjacent edges 1-subdivided, and what
    /// became of it.
    pub adjacent_pairs: Vec<AdjacentPairAudit>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum AuditVerdict {
    Obstruction,
    WidthAtMost2,
    /// Width 3 but a catalog member is a proper minor.
    ContainsMember {
        member: String,
    },
    /// Width 3, not in the catalog and no member found inside: the catalog
    /// would be incomplete.
    Unexplained,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacentPairAudit {
    pub base: String,
    pub base_name: Option<String>,
    pub edges: [(usize, usize); 2],
    pub g6: String,
    #[serde(flatten)]
    pub verdict: AuditVerdict,
}

/// One entry per isomorphism class of "6-vertex base with two adjacent edges
/// 1-subdivided", ordered by base then edge pair.
pub fn adjacent_pair_audit(bases: &[Graph], catalog: &[Graph], budget: u64) -> Result<Vec<AdjacentPairAudit>> {
    let members: HashMap<CanonKey, &Graph> =
        catalog.iter().map(|g| Ok((canonical_key(g)?, g))).collect::<Result<_>>()?;
    let mut seen = HashSet::new();
    let mut todo = Vec::new();
    for base in bases {
        let edges = base.edges();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (e, f) = (edges[i], edges[j]);
                if e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1 {
                    continue;
                }
                let mut ops = vec![EdgeOp::None; edges.len()];
                ops[i] = EdgeOp::S1;
                ops[j] = EdgeOp::S1;
                let g = canonical_graph(&apply_pattern(&SubdivisionPattern::new(base, ops)?)?)?;
                if seen.insert((base.to_graph6(), g.to_graph6())) {
                    todo.push((base, [e, f], g));
                }
            }
        }
    }
    todo.par_iter()
        .map(|(base, edges, g)| {
            let verdict = if members.contains_key(&canonical_key(g)?) {
                AuditVerdict::Obstruction
            } else if mmw_at_most(g, 2)? {
                AuditVerdict::WidthAtMost2
            } else {
                let mut inside = None;
                for m in catalog.iter().filter(|m| m.n() <= g.n() && m.m() <= g.m()) {
                    if has_minor(g, m, budget)?.is_some() {
                        inside = Some(m.to_graph6());
                        break;
                    }
                }
                inside.map_or(AuditVerdict::Unexplained, |member| AuditVerdict::ContainsMember { member })
            };
            Ok(AdjacentPairAudit {
                base: base.to_graph6(),
                base_name: base_name(base),
                edges: *edges,
                g6: g.to_graph6(),
                verdict,
            })
        })
        .collect()
}

impl Catalog {
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        self.records.iter().map(|r| r.graph()).collect()
    }

    /// One canonical graph6 per line, sorted.
    pub fn to_g6(&self) -> String {
        let mut lines: Vec<&str> = self.records.iter().map(|r| r.g6.as_str()).collect();
        lines.sort_unstable();
        lines.iter().map(|l| format!("{l}\n")).collect()
    }
}

pub fn assemble_catalog() -> Result<Catalog> {
    let bases = base_graphs()?;
    let mut records: BTreeMap<String, ObstructionRecord> = BTreeMap::new();
    let mut patterns_evaluated = 0;
    let mut candidates = 0;

    for g in &bases.seven_edge_minimal {
        candidates += 1;
        let prov = Provenance { family: Family::O3, base: g.to_graph6(), base_name: None, pattern: Vec::new() };
        if let Some(r) = filter_obstruction(g, prov)? {
            records.entry(r.g6.clone()).or_insert(r);
        }
    }
    for size in 4..=6 {
        let family = Family::for_base(size).unwrap();
        for base in bases.group(size) {
            let (cands, stats) = generate_candidates(base)?;
            patterns_evaluated += stats.evaluated;
            candidates += cands.len();
            let fresh: Vec<&Candidate> = cands.iter().filter(|c| !records.contains_key(&c.graph.to_graph6())).collect();
            let name = base_name(base);
            let found: Vec<Option<ObstructionRecord>> = fresh
                .par_iter()
                .map(|c| {
                    let prov = Provenance {
                        family,
                        base: base.to_graph6(),
                        base_name: name.clone(),
                        pattern: c.pattern.entries(),
                    };
                    filter_obstruction(&c.graph, prov)
                })
                .collect::<Result<_>>()?;
            for r in found.into_iter().flatten() {
                records.entry(r.g6.clone()).or_insert(r);
            }
        }
    }

    let mut records: Vec<ObstructionRecord> = records.into_values().collect();
    records.sort_by(|a, b| (a.provenance.family, a.n, a.m, &a.g6).cmp(&(b.provenance.family, b.n, b.m, &b.g6)));
    let mut per_family = BTreeMap::new();
    for r in &records {
        *per_family.entry(r.provenance.family).or_insert(0) += 1;
    }
    let total = records.len();
    let summary = CatalogSummary {
        per_family,
        total,
        agrees_with_42: total == 42,
        agrees_with_45: total == 45,
        bases: (4..=7).map(|n| (n, bases.group(n).len())).collect(),
        patterns_evaluated,
        candidates,
    };
    let graphs: Vec<Graph> = records.iter().map(|r| r.graph()).collect::<Result<_>>()?;
    let adjacent_pairs = adjacent_pair_audit(&bases.six, &graphs, crate::minor::DEFAULT_BUDGET)?;
    Ok(Catalog { summary, records, adjacent_pairs })
}

pub fn parse_g6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines().map(str::trim).filter(|l| !l.is_empty()).map(Graph::from_graph6).collect()
}

/// One failed re-verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckFailure {
    pub index: usize,
    pub g6: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub ok: bool,
    pub graphs: usize,
    pub minor_queries: usize,
    pub failures: Vec<CheckFailure>,
}

/// Re-verifies a catalog from scratch: width exactly 3, every one-step minor
/// at most 2, members pairwise non-isomorphic and minor-incomparable.
pub fn check_catalog(graphs: &[Graph], budget: u64) -> Result<CheckReport> {
    let per_graph: Vec<Vec<String>> = graphs
        .par_iter()
        .map(|g| -> Result<Vec<String>> {
            let mut reasons = Vec::new();
            let w = mmw_value(g)?;
            if w != 3 {
                reasons.push(format!("mm-width is {w}, not 3"));
            }
            for m in one_step_minors(g)? {
                if !mmw_at_most(&m, 2)? {
                    reasons.push(format!("one-step minor {} has mm-width above 2", m.to_graph6()));
                }
            }
            Ok(reasons)
        })
        .collect::<Result<_>>()?;
    let mut failures: Vec<CheckFailure> = Vec::new();
    for (i, reasons) in per_graph.into_iter().enumerate() {
        for reason in reasons {
            failures.push(CheckFailure { index: i, g6: graphs[i].to_graph6(), reason });
        }
    }
    let pairs: Vec<(usize, usize)> = (0..graphs.len())
        .flat_map(|i| (0..graphs.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && graphs[i].n() <= graphs[j].n() && graphs[i].m() <= graphs[j].m())
        .collect();
    let hits: Vec<Option<CheckFailure>> = pairs
        .par_iter()
        .map(|&(i, j)| -> Result<Option<CheckFailure>> {
            let (small, big) = (&graphs[i], &graphs[j]);
            if i < j && is_isomorphic(small, big)? {
                return Ok(Some(CheckFailure {
                    index: j,
                    g6: big.to_graph6(),
                    reason: format!("isomorphic to member {i}"),
                }));
            }
            Ok(has_minor(big, small, budget)?.map(|_| CheckFailure {
                index: j,
                g6: big.to_graph6(),
                reason: format!("contains member {i} as a minor"),
            }))
        })
        .collect::<Result<_>>()?;
    failures.extend(hits.into_iter().flatten());
    failures.sort_by(|a, b| (a.index, &a.reason).cmp(&(b.index, &b.reason)));
    Ok(CheckReport { ok: failures.is_empty(), graphs: graphs.len(), minor_queries: pairs.len(), failures })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub n_max: usize,
    /// Every class up to this many vertices was checked.
    pub exhaustive_up_to: usize,
    pub sampled: usize,
    pub seed: u64,
    pub classes: usize,
    pub width_le2: usize,
    pub counterexamples: Vec<String>,
}

/// Compares `mmw ≤ 2` with catalog-minor-freeness on every class with at most
/// `min(n_max, 7)` vertices, plus `sample` distinct pseudo-random classes on
/// `n_max` vertices when `n_max = 8`.
pub fn crosscheck_small(
    catalog: &[Graph],
    n_max: usize,
    sample: usize,
    seed: u64,
    budget: u64,
) -> Result<CrosscheckReport> {
    if n_max > 8 {
        return invalid(format!("crosscheck supports n <= 8, got {n_max}"));
    }
    let exhaustive = n_max.min(7);
    let mut classes: Vec<Graph> = (0..=exhaustive).flat_map(all_graphs).collect();
    let mut sampled = 0;
    if n_max == 8 {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut seen: BTreeSet<CanonKey> = BTreeSet::new();
        let mut attempts = 0usize;
        while seen.len() < sample {
            attempts += 1;
            if attempts > sample * 100 + 1000 {
                return Err(Error::InvariantViolation("could not draw enough distinct classes".into()));
            }
            let p: f64 = rng.gen_range(0.15..0.85);
            let mut edges = Vec::new();
            for u in 0..8 {
                for v in u + 1..8 {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(8, &edges)?;
            if seen.insert(canonical_key(&g)?) {
                classes.push(canonical_graph(&g)?);
            }
        }
        sampled = seen.len();
    }
    let verdicts: Vec<(bool, bool)> = classes
        .par_iter()
        .map(|g| Ok((mmw_at_most(g, 2)?, mmw_le2_by_obstructions(g, catalog, budget)?)))
        .collect::<Result<_>>()?;
    let counterexamples =
        classes.iter().zip(&verdicts).filter(|(_, (a, b))| a != b).map(|(g, _)| g.to_graph6()).collect();
    Ok(CrosscheckReport {
        n_max,
        exhaustive_up_to: exhaustive,
        sampled,
        seed,
        classes: classes.len(),
        width_le2: verdicts.iter().filter(|v| v.0).count(),
        counterexamples,
    })
}
