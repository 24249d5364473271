//! Tangles of the matching cut function as lower-bound certificates: a family
//! of "small sides" meeting axioms T1–T3 proves that the mm-width is at least
//! the order.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{for_each_combination, full_mask, Bits, Graph, GridCoord, VertexSet};
use crate::matching::{mm_cut, mm_size, CutTable};

/// Largest ground set the verifier enumerates.
pub const VERIFY_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TangleMode {
    /// Sorted, duplicate-free member list.
    Explicit(Vec<VertexSet>),
    /// All small sets of the `k × k` grid.
    GridSmall { k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CertificateJson", into = "CertificateJson")]
pub struct TangleCertificate {
    pub order: usize,
    pub mode: TangleMode,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    order: usize,
    mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sets: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleJson>,
}

#[derive(Serialize, Deserialize)]
struct OracleJson {
    kind: String,
    k: usize,
}

pub(crate) fn hex(set: VertexSet) -> String {
    format!("{:#x}", set.bits())
}

pub(crate) fn parse_hex(s: &str) -> Result<VertexSet> {
    let digits = s.strip_prefix("0x").unwrap_or(s);
    u64::from_str_radix(digits, 16).map(VertexSet).map_err(|e| Error::InvalidInput(format!("bad set {s:?}: {e}")))
}

impl From<TangleCertificate> for CertificateJson {
    fn from(c: TangleCertificate) -> Self {
        match c.mode {
            TangleMode::Explicit(sets) => CertificateJson {
                order: c.order,
                mode: "explicit".into(),
                sets: Some(sets.into_iter().map(hex).collect()),
                oracle: None,
            },
            TangleMode::GridSmall { k } => CertificateJson {
                order: c.order,
                mode: "oracle".into(),
                sets: None,
                oracle: Some(OracleJson { kind: "grid-small".into(), k }),
            },
        }
    }
}

impl TryFrom<CertificateJson> for TangleCertificate {
    type Error = Error;

    fn try_from(j: CertificateJson) -> Result<Self> {
        match (j.mode.as_str(), j.sets, j.oracle) {
            ("explicit", Some(sets), _) => {
                let sets = sets.iter().map(|s| parse_hex(s)).collect::<Result<Vec<_>>>()?;
                Ok(TangleCertificate::explicit(j.order, sets))
            }
            ("oracle", _, Some(o)) if o.kind == "grid-small" => {
                Ok(TangleCertificate { order: j.order, mode: TangleMode::GridSmall { k: o.k } })
            }
            (mode, _, _) => invalid(format!("unsupported certificate mode {mode:?}")),
        }
    }
}

impl TangleCertificate {
    pub fn explicit(order: usize, sets: impl IntoIterator<Item = VertexSet>) -> TangleCertificate {
        let mut sets: Vec<VertexSet> = sets.into_iter().collect();
        sets.sort_unstable();
        sets.dedup();
        TangleCertificate { order, mode: TangleMode::Explicit(sets) }
    }

    pub fn sets(&self) -> Option<&[VertexSet]> {
        match &self.mode {
            TangleMode::Explicit(s) => Some(s),
            TangleMode::GridSmall { .. } => None,
        }
    }
}

/// Small sets of the `k × k` grid: `mm(X) < k` and no full row inside `X`.
#[derive(Clone, Debug)]
pub struct SmallSetOracle {
    k: usize,
    grid: Graph,
    rows: Vec<u64>,
    columns: Vec<u64>,
}

impl SmallSetOracle {
    pub fn new(k: usize) -> Result<SmallSetOracle> {
        if k < 2 {
            return invalid(format!("grid tangles need k >= 2, got {k}"));
        }
        let grid = Graph::grid(k)?;
        let idx = |i, j| GridCoord::new(i, j).index(k);
        let rows = (1..=k).map(|j| (1..=k).fold(0u64, |a, i| a | 1 << idx(i, j))).collect();
        let columns = (1..=k).map(|i| (1..=k).fold(0u64, |a, j| a | 1 << idx(i, j))).collect();
        Ok(SmallSetOracle { k, grid, rows, columns })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn grid(&self) -> &Graph {
        &self.grid
    }

    /// Row `R_j` for `j` in `1..=k`.
    pub fn row(&self, j: usize) -> u64 {
        self.rows[j - 1]
    }

    /// Column `C_i` for `i` in `1..=k`.
    pub fn column(&self, i: usize) -> u64 {
        self.columns[i - 1]
    }

    pub fn contains_row(&self, x: u64) -> bool {
        self.rows.iter().any(|&r| r & !x == 0)
    }

    pub fn contains_column(&self, x: u64) -> bool {
        self.columns.iter().any(|&c| c & !x == 0)
    }

    pub fn is_small_with(&self, x: u64, mm: usize) -> bool {
        mm < self.k && !self.contains_row(x)
    }

    pub fn is_small(&self, x: u64) -> bool {
        !self.contains_row(x) && mm_size(&self.grid, x) < self.k
    }
}

pub fn grid_tangle(k: usize) -> Result<TangleCertificate> {
    SmallSetOracle::new(k)?;
    Ok(TangleCertificate { order: k, mode: TangleMode::GridSmall { k } })
}

/// The order-3 tangle of the 3 × 3 grid: every set of at most two vertices
/// plus four corner triples.
pub fn tangle3_example() -> TangleCertificate {
    let v = |i, j| GridCoord::new(i, j).index(3);
    let corners = [
        [v(1, 1), v(1, 2), v(2, 1)],
        [v(1, 2), v(1, 3), v(2, 3)],
        [v(2, 3), v(3, 2), v(3, 3)],
        [v(2, 1), v(3, 1), v(3, 2)],
    ];
    let mut sets = at_most_two(9);
    sets.extend(corners.iter().map(|c| c.iter().copied().collect::<VertexSet>()));
    TangleCertificate::explicit(3, sets)
}

fn at_most_two(n: usize) -> Vec<VertexSet> {
    let mut sets = Vec::new();
    for size in 0..=2.min(n) {
        for_each_combination(n, size, &mut |s| {
            sets.push(VertexSet(s));
            true
        });
    }
    sets
}

/// Order-3 candidate for an obstruction: sets of at most two vertices, the
/// given good sides, and for every 11-subdivision `a u b ∪ a v b` both
/// triples `{a, u, b}` and `{a, v, b}`, closed under taking subsets. Without
/// the closure `{a, u, v}` (matching number 2) would break T1.
pub fn obstruction_tangle(g: &Graph, good_sides: &[VertexSet], elevens: &[[usize; 3]]) -> TangleCertificate {
    let mut sets = at_most_two(g.n());
    let tops = good_sides.iter().copied().chain(elevens.iter().map(|t| t.iter().copied().collect::<VertexSet>()));
    for top in tops {
        let t = top.bits();
        let mut sub = t;
        loop {
            sets.push(VertexSet(sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & t;
        }
    }
    TangleCertificate::explicit(3, sets)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom")]
pub enum AxiomViolation {
    /// `set` has `mm ≤ order − 1` but neither it nor its complement is a member.
    T1 {
        #[serde(with = "hex_set")]
        set: VertexSet,
        mm: usize,
    },
    /// Three members cover the ground set.
    T2 {
        #[serde(with = "hex_sets")]
        sets: [VertexSet; 3],
    },
    /// A member misses only `vertex`.
    T3 { vertex: usize },
    /// A listed set is not a proper subset of the ground set.
    NotProper {
        #[serde(with = "hex_set")]
        set: VertexSet,
    },
}

impl AxiomViolation {
    pub fn axiom(&self) -> &'static str {
        match self {
            AxiomViolation::T1 { .. } => "T1",
            AxiomViolation::T2 { .. } => "T2",
            AxiomViolation::T3 { .. } => "T3",
            AxiomViolation::NotProper { .. } => "proper",
        }
    }
}

mod hex_set {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(set: &VertexSet, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&hex(*set))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<VertexSet, D::Error> {
        let text = String::deserialize(d)?;
        parse_hex(&text).map_err(serde::de::Error::custom)
    }
}

mod hex_sets {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(sets: &[VertexSet; 3], s: S) -> std::result::Result<S::Ok, S::Error> {
        sets.iter().map(|&x| hex(x)).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<[VertexSet; 3], D::Error> {
        let text = <[String; 3]>::deserialize(d)?;
        let mut out = [VertexSet::EMPTY; 3];
        for (slot, t) in out.iter_mut().zip(&text) {
            *slot = parse_hex(t).map_err(serde::de::Error::custom)?;
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangleReport {
    pub ok: bool,
    pub order: usize,
    pub members: usize,
    /// Subsets with `mm ≤ order − 1` examined for T1.
    pub t1_checked: usize,
    /// First violation of each failing axiom, T1 by increasing subset mask.
    pub violations: Vec<AxiomViolation>,
}

impl TangleReport {
    pub fn violates(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom() == axiom)
    }
}

/// Checks T1 over all subsets, T2 over all member triples and T3 over all
/// vertices. Needs at most [`VERIFY_LIMIT`] vertices.
pub fn verify_tangle(g: &Graph, cert: &TangleCertificate) -> Result<TangleReport> {
    let n = g.n();
    if n > VERIFY_LIMIT {
        return Err(Error::Unsupported(format!(
            "exhaustive tangle check needs at most {VERIFY_LIMIT} vertices, got {n}"
        )));
    }
    let mm = CutTable::build(&mm_cut(g))?;
    let size = 1usize << n;
    let full = size - 1;
    let mut member = vec![false; size];
    let mut violations = Vec::new();
    match &cert.mode {
        TangleMode::Explicit(sets) => {
            for &s in sets {
                if s.bits() & !(full as u64) != 0 || s.bits() == full as u64 {
                    violations.push(AxiomViolation::NotProper { set: s });
                } else {
                    member[s.bits() as usize] = true;
                }
            }
        }
        TangleMode::GridSmall { k } => {
            let oracle = SmallSetOracle::new(*k)?;
            if oracle.grid().n() != n || oracle.grid().edges() != g.edges() {
                return invalid(format!("grid-small oracle for k={k} needs the {k}x{k} grid"));
            }
            for (s, slot) in member.iter_mut().enumerate() {
                *slot = oracle.is_small_with(s as u64, mm.get(s as u64));
            }
        }
    }
    let members: Vec<usize> = (0..size).filter(|&s| member[s]).collect();

    let mut t1_checked = 0;
    for s in 0..size {
        if mm.get(s as u64) < cert.order {
            t1_checked += 1;
            if !member[s] && !member[full ^ s] {
                violations.push(AxiomViolation::T1 { set: VertexSet(s as u64), mm: mm.get(s as u64) });
                break;
            }
        }
    }

    if let Some(sets) = covering_triple(n, &member, &members) {
        violations.push(AxiomViolation::T2 { sets });
    }

    if let Some(vertex) = (0..n).find(|&x| member[full ^ 1 << x]) {
        violations.push(AxiomViolation::T3 { vertex });
    }
    Ok(TangleReport { ok: violations.is_empty(), order: cert.order, members: members.len(), t1_checked, violations })
}

/// Three members whose union is the ground set, if any. Sets covered by two
/// members are found by an OR-convolution of the down-closure of the family.
fn covering_triple(n: usize, member: &[bool], members: &[usize]) -> Option<[VertexSet; 3]> {
    let size = 1usize << n;
    let full = size - 1;
    // down[s]: s lies inside some member
    let mut down = member.to_vec();
    for i in 0..n {
        for s in 0..size {
            if s >> i & 1 == 0 && down[s | 1 << i] {
                down[s] = true;
            }
        }
    }
    // pairs[y] > 0 iff y = a ∪ b with a, b both in the down-closure
    let mut zeta: Vec<u64> = down.iter().map(|&d| d as u64).collect();
    for i in 0..n {
        for s in 0..size {
            if s >> i & 1 == 1 {
                zeta[s] += zeta[s ^ 1 << i];
            }
        }
    }
    for z in zeta.iter_mut() {
        *z *= *z;
    }
    for i in 0..n {
        for s in 0..size {
            if s >> i & 1 == 1 {
                zeta[s] -= zeta[s ^ 1 << i];
            }
        }
    }
    let pairs = zeta;
    let &s1 = members.iter().find(|&&s1| pairs[full ^ s1] > 0)?;
    let rest = full ^ s1;
    let &s2 = members.iter().find(|&&s2| down[rest & !s2])?;
    let &s3 = members.iter().find(|&&s3| (rest & !s2) & !s3 == 0)?;
    Some([VertexSet(s1 as u64), VertexSet(s2 as u64), VertexSet(s3 as u64)])
}

/// Counts over one pass of the grid small-set properties; every `*_fail`
/// field should stay zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSweep {
    pub k: usize,
    pub sets: u64,
    pub below_k: u64,
    pub row_column_fail: u64,
    pub complement_fail: u64,
    pub empty_line_fail: u64,
    pub triples: u64,
    pub triple_fail: u64,
}

impl GridSweep {
    pub fn ok(&self) -> bool {
        self.row_column_fail == 0 && self.complement_fail == 0 && self.empty_line_fail == 0 && self.triple_fail == 0
    }

    /// Checks one set `x` with `mm(x) = mm`:
    /// a row inside `x` iff a column inside `x` (when `mm < k`);
    /// `x` or its complement is small (when `mm < k`);
    /// a small `x` misses some row and some column entirely.
    pub fn check_set(&mut self, o: &SmallSetOracle, x: u64, mm: usize) {
        let full = full_mask(o.k * o.k);
        self.sets += 1;
        if mm >= o.k {
            return;
        }
        self.below_k += 1;
        if o.contains_row(x) != o.contains_column(x) {
            self.row_column_fail += 1;
        }
        let xc = full & !x;
        if !o.is_small_with(x, mm) && !o.is_small_with(xc, mm) {
            self.complement_fail += 1;
        }
        if o.is_small_with(x, mm) {
            let row_free = o.rows.iter().any(|&r| r & x == 0);
            let col_free = o.columns.iter().any(|&c| c & x == 0);
            if !(row_free && col_free) {
                self.empty_line_fail += 1;
            }
        }
    }
}

/// The set properties over all `2^(k²)` subsets, and the three-cover property
/// over all triples of small sets (exactly, by convolution).
pub fn grid_sweep_exhaustive(k: usize) -> Result<GridSweep> {
    let o = SmallSetOracle::new(k)?;
    let n = k * k;
    if n > VERIFY_LIMIT {
        return Err(Error::Unsupported(format!("exhaustive sweep needs k*k <= {VERIFY_LIMIT}")));
    }
    let table = CutTable::build(&mm_cut(o.grid()))?;
    let mut sweep = GridSweep { k, ..Default::default() };
    let size = 1usize << n;
    let mut member = vec![false; size];
    for (x, slot) in member.iter_mut().enumerate() {
        let mm = table.get(x as u64);
        sweep.check_set(&o, x as u64, mm);
        *slot = o.is_small_with(x as u64, mm);
    }
    let members: Vec<usize> = (0..size).filter(|&s| member[s]).collect();
    let m = members.len() as u64;
    sweep.triples = m * m * m;
    if covering_triple(n, &member, &members).is_some() {
        sweep.triple_fail = 1;
    }
    Ok(sweep)
}

/// Random version for larger grids: `sets` uniformly sized random subsets,
/// then `triples` attempts to cover the grid with three small sets, where
/// the third is forced to be the remainder of two random small sets.
pub fn grid_sweep_random(k: usize, sets: u64, triples: u64, seed: u64) -> Result<GridSweep> {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    let o = SmallSetOracle::new(k)?;
    let n = k * k;
    let full = full_mask(n);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    let mut sample = |rng: &mut rand_chacha::ChaCha8Rng| {
        let size = rng.gen_range(0..=n);
        order.shuffle(rng);
        order[..size].iter().fold(0u64, |a, &v| a | 1 << v)
    };
    let mut sweep = GridSweep { k, ..Default::default() };
    let mut small = Vec::new();
    for _ in 0..sets {
        let x = sample(&mut rng);
        let mm = mm_size(o.grid(), x);
        sweep.check_set(&o, x, mm);
        if o.is_small_with(x, mm) && small.len() < 1 << 16 {
            small.push(x);
        }
    }
    if small.is_empty() {
        return Ok(sweep);
    }
    for _ in 0..triples {
        let a = small[rng.gen_range(0..small.len())];
        let b = small[rng.gen_range(0..small.len())];
        let c = full & !(a | b);
        sweep.triples += 1;
        if o.is_small(c) {
            sweep.triple_fail += 1;
        }
    }
    Ok(sweep)
}

/// Members of an explicit certificate, for reporting.
pub fn member_list(cert: &TangleCertificate) -> Vec<String> {
    cert.sets().map(|s| s.iter().map(|&x| hex(x)).collect()).unwrap_or_default()
}

/// Vertices of `x` as grid coordinates, for reporting.
pub fn grid_coords(x: VertexSet, k: usize) -> Vec<GridCoord> {
    Bits(x.bits()).map(|v| GridCoord::from_index(v, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::width::mmw;

    fn set(k: usize, coords: &[(usize, usize)]) -> VertexSet {
        coords.iter().map(|&(i, j)| GridCoord::new(i, j).index(k)).collect()
    }

    #[test]
    fn grid3_example_is_a_tangle() {
        let g = Graph::grid(3).unwrap();
        let cert = tangle3_example();
        let sets = cert.sets().unwrap();
        assert_eq!(sets.len(), 1 + 9 + 36 + 4);
        assert_eq!(sets.iter().filter(|s| s.len() == 3).count(), 4);
        let centre = GridCoord::new(2, 2).index(3);
        assert!(sets.iter().filter(|s| s.len() == 3).all(|s| !s.contains(centre)));
        assert!(sets.contains(&set(3, &[(1, 2), (1, 3), (2, 3)])));
        let report = verify_tangle(&g, &cert).unwrap();
        assert!(report.ok, "{report:?}");
        assert_eq!(report.members, 50);
        assert!(mmw(&g).unwrap().width >= cert.order);
    }

    #[test]
    fn dropping_a_corner_breaks_t1() {
        let g = Graph::grid(3).unwrap();
        let full = tangle3_example();
        for drop in full.sets().unwrap().iter().filter(|s| s.len() == 3) {
            let cert = TangleCertificate::explicit(3, full.sets().unwrap().iter().copied().filter(|s| s != drop));
            let report = verify_tangle(&g, &cert).unwrap();
            assert!(!report.ok);
            let AxiomViolation::T1 { set, mm } = report.violations[0] else { panic!("{report:?}") };
            assert_eq!(mm, 2);
            assert!(set == *drop || set == drop.complement(9));
        }
        let first = set(3, &[(1, 1), (1, 2), (2, 1)]);
        let cert = TangleCertificate::explicit(3, full.sets().unwrap().iter().copied().filter(|&s| s != first));
        let report = verify_tangle(&g, &cert).unwrap();
        assert_eq!(report.violations, vec![AxiomViolation::T1 { set: first, mm: 2 }]);
    }

    #[test]
    fn everything_is_not_a_tangle() {
        let g = Graph::grid(3).unwrap();
        let cert = TangleCertificate::explicit(3, (0..511).map(VertexSet));
        let report = verify_tangle(&g, &cert).unwrap();
        assert!(report.violates("T2") && report.violates("T3"));
        assert!(!report.violates("T1"));
        let AxiomViolation::T2 { sets } = report.violations[0] else { panic!() };
        assert_eq!(sets.iter().fold(0, |a, s| a | s.bits()), 511);
    }

    #[test]
    fn small_sets_of_grid3_are_the_example() {
        let o = SmallSetOracle::new(3).unwrap();
        let ex = tangle3_example();
        let sets = ex.sets().unwrap();
        for x in 0u64..512 {
            assert_eq!(o.is_small(x), sets.contains(&VertexSet(x)), "{x:#b}");
        }
        let report = verify_tangle(o.grid(), &grid_tangle(3).unwrap()).unwrap();
        assert!(report.ok);
    }

    #[test]
    fn grid2_small_sets() {
        let o = SmallSetOracle::new(2).unwrap();
        for v in 0..4 {
            assert!(o.is_small(1 << v));
            assert!(!o.is_small(0b1111 & !(1 << v)));
        }
        for_each_combination(4, 3, &mut |x| {
            assert!(!o.is_small(x));
            true
        });
        assert!(verify_tangle(o.grid(), &grid_tangle(2).unwrap()).unwrap().ok);
        assert!(grid_tangle(1).is_err());
    }

    #[test]
    fn grid_tangles_verify_exhaustively() {
        for k in 2..=4 {
            let o = SmallSetOracle::new(k).unwrap();
            let report = verify_tangle(o.grid(), &grid_tangle(k).unwrap()).unwrap();
            assert!(report.ok, "k={k}: {report:?}");
            let full = full_mask(k * k);
            for v in 0..k * k {
                assert!(!o.is_small(full & !(1 << v)));
            }
        }
    }

    #[test]
    fn wrong_graph_for_oracle() {
        assert!(verify_tangle(&Graph::cycle(9).unwrap(), &grid_tangle(3).unwrap()).is_err());
        assert!(matches!(
            verify_tangle(&Graph::grid(5).unwrap(), &grid_tangle(5).unwrap()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn grid_properties_exhaustive() {
        for k in 2..=4 {
            let s = grid_sweep_exhaustive(k).unwrap();
            assert!(s.ok(), "{s:?}");
            assert_eq!(s.sets, 1 << (k * k));
            assert!(s.below_k > 0);
        }
    }

    #[test]
    fn grid_properties_random() {
        let s = grid_sweep_random(4, 100_000, 1_000_000, 1).unwrap();
        assert!(s.ok(), "{s:?}");
        assert!(s.below_k > 1000 && s.triples == 1_000_000);
        let s = grid_sweep_random(5, 20_000, 100_000, 2).unwrap();
        assert!(s.ok(), "{s:?}");
    }

    #[test]
    fn k6_recipe_is_not_a_tangle() {
        let g = Graph::complete(6).unwrap();
        let report = verify_tangle(&g, &obstruction_tangle(&g, &[], &[])).unwrap();
        assert!(!report.ok);
        // three pairs cover six vertices
        assert!(report.violates("T2"));
    }

    #[test]
    fn certificate_json_round_trip() {
        let cert = tangle3_example();
        let text = serde_json::to_string(&cert).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["mode"], "explicit");
        assert_eq!(v["sets"][1], "0x1");
        assert_eq!(serde_json::from_str::<TangleCertificate>(&text).unwrap(), cert);
        let oracle = serde_json::to_value(grid_tangle(4).unwrap()).unwrap();
        assert_eq!(oracle, serde_json::json!({"order": 4, "mode": "oracle", "oracle": {"kind": "grid-small", "k": 4}}));
        assert!(serde_json::from_str::<TangleCertificate>(r#"{"order":3,"mode":"magic"}"#).is_err());
    }

    #[test]
    fn improper_sets_are_reported() {
        let g = Graph::grid(2).unwrap();
        let cert = TangleCertificate::explicit(2, [VertexSet(0b1111), VertexSet(0)]);
        assert!(verify_tangle(&g, &cert).unwrap().violates("proper"));
    }
}
