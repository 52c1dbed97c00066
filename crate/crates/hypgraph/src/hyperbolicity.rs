//! Exact computation of the sharp Rips constant δ(G) with a witnessing
//! triangle, plus the block-accelerated variant and the sub-1 classifier.
//!
//! The search space is the corner grid (vertices plus edge midpoints in
//! standard mode, quarter-offset edge points in fine mode), all geodesics
//! between corner pairs, and sample points along each side. Because the two
//! far sides of a triangle are chosen independently, the maximum over side
//! choices of min(d(x, side1), d(x, side2)) equals min of the per-pair maxima,
//! which is memoized per (point, corner pair); the geodesic cross product is
//! never materialized.

use std::sync::atomic::{AtomicU16, AtomicU32, Ordering};

use rayon::prelude::*;
use thiserror::Error;

use crate::decompose::{canonical_t_decomposition, induced_subgraph};
use crate::geodesic::{
    enumerate_geodesics, point_to_set_distance, Geodesic, GeodesicError, GeodesicTriangle,
};
use crate::graph::{DistanceMatrix, Graph};
use crate::length::{EighthLength, UNITS_PER_EDGE};
use crate::point::{point_distance_units, GraphPoint};

/// Per-pair geodesic enumeration cap; overridable via `DeltaOptions` and the
/// CLI's HYP_GEODESIC_CAP.
pub const DEFAULT_GEODESIC_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Corners at vertices and edge midpoints, samples every 1/4 edge.
    Standard,
    /// Corners at vertices and 1/4-offset edge points, samples every 1/8.
    Fine,
}

impl Mode {
    fn corner_offsets(self) -> &'static [u32] {
        match self {
            Mode::Standard => &[4],
            Mode::Fine => &[2, 4, 6],
        }
    }

    fn sample_step(self) -> u32 {
        match self {
            Mode::Standard => 2,
            Mode::Fine => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Standard => "standard",
            Mode::Fine => "fine",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DeltaOptions {
    pub geodesic_cap: u64,
}

impl Default for DeltaOptions {
    fn default() -> Self {
        DeltaOptions { geodesic_cap: DEFAULT_GEODESIC_CAP }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeltaError {
    #[error(transparent)]
    Geodesics(#[from] GeodesicError),
    #[error("delta {0} is not a multiple of 1/4; the corner-grid assumption failed")]
    OffGrid(EighthLength),
}

/// A triangle, the side index the witness point lies on, and the point whose
/// distance to the union of the other two sides equals δ(G).
#[derive(Clone, Debug)]
pub struct Witness {
    pub triangle: GeodesicTriangle,
    pub side_index: usize,
    pub point: GraphPoint,
}

#[derive(Clone, Debug)]
pub struct DeltaResult {
    pub delta: EighthLength,
    pub mode: Mode,
    pub witness: Witness,
}

pub fn delta_exact(g: &Graph, mode: Mode) -> Result<DeltaResult, DeltaError> {
    delta_exact_with(g, mode, &DeltaOptions::default())
}

pub fn delta_exact_with(
    g: &Graph,
    mode: Mode,
    opts: &DeltaOptions,
) -> Result<DeltaResult, DeltaError> {
    let engine = Engine::new(g, mode, opts.geodesic_cap)?;
    let best = engine.search();
    let delta = EighthLength::from_units(best.value);
    if !delta.is_quarter_multiple() {
        return Err(DeltaError::OffGrid(delta));
    }
    let witness = engine.build_witness(&best);
    debug_assert!(witness.triangle.is_consistent(&engine.d));
    Ok(DeltaResult { delta, mode, witness })
}

/// δ via the canonical T-decomposition: δ(G) is the sup of δ over the blocks,
/// and single-edge blocks contribute 0. Returns the winning block's witness
/// translated back to the original labels.
pub fn delta_via_blocks(g: &Graph, mode: Mode) -> Result<DeltaResult, DeltaError> {
    delta_via_blocks_with(g, mode, &DeltaOptions::default())
}

pub fn delta_via_blocks_with(
    g: &Graph,
    mode: Mode,
    opts: &DeltaOptions,
) -> Result<DeltaResult, DeltaError> {
    let decomposition = canonical_t_decomposition(g);
    let mut best: Option<DeltaResult> = None;
    for block in &decomposition.blocks {
        if block.len() < 3 {
            continue;
        }
        let (sub, to_original) = induced_subgraph(g, block);
        let result = delta_exact_with(&sub, mode, opts)?;
        if best.as_ref().map_or(true, |b| result.delta > b.delta) {
            best = Some(relabel_result(result, &to_original));
        }
    }
    Ok(best.unwrap_or_else(|| zero_result(mode)))
}

fn zero_result(mode: Mode) -> DeltaResult {
    let p = GraphPoint::Vertex(0);
    let side = Geodesic::degenerate(p);
    DeltaResult {
        delta: EighthLength::ZERO,
        mode,
        witness: Witness {
            triangle: GeodesicTriangle {
                corners: [p; 3],
                sides: [side.clone(), side.clone(), side],
            },
            side_index: 0,
            point: p,
        },
    }
}

fn relabel_point(p: GraphPoint, map: &[u32]) -> GraphPoint {
    match p {
        GraphPoint::Vertex(v) => GraphPoint::Vertex(map[v as usize]),
        // The map is monotone (block vertex lists are sorted), so u < v holds.
        GraphPoint::Interior { u, v, offset } => {
            GraphPoint::Interior { u: map[u as usize], v: map[v as usize], offset }
        }
    }
}

fn relabel_result(r: DeltaResult, map: &[u32]) -> DeltaResult {
    let relabel_geo = |geo: &Geodesic| Geodesic {
        start: relabel_point(geo.start, map),
        end: relabel_point(geo.end, map),
        vertex_path: geo.vertex_path.iter().map(|&v| map[v as usize]).collect(),
        length: geo.length,
    };
    DeltaResult {
        delta: r.delta,
        mode: r.mode,
        witness: Witness {
            triangle: GeodesicTriangle {
                corners: r.witness.triangle.corners.map(|c| relabel_point(c, map)),
                sides: [
                    relabel_geo(&r.witness.triangle.sides[0]),
                    relabel_geo(&r.witness.triangle.sides[1]),
                    relabel_geo(&r.witness.triangle.sides[2]),
                ],
            },
            side_index: r.witness.side_index,
            point: relabel_point(r.witness.point, map),
        },
    }
}

/// Value bucket of δ below 1, decided structurally.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubOneClass {
    /// δ = 0: the graph is a tree.
    IsTree,
    /// δ = 3/4: cyclic, but every cycle has length 3 (every block is an edge
    /// or a triangle; a two-connected graph on 4+ vertices has a 4-cycle).
    DeltaThreeQuarters,
    /// δ ≥ 1: some cycle has length at least 4.
    AtLeastOne,
}

pub fn classify_sub_one(g: &Graph) -> SubOneClass {
    if g.edge_count() == g.vertex_count() - 1 {
        return SubOneClass::IsTree;
    }
    let decomposition = canonical_t_decomposition(g);
    if decomposition.blocks.iter().all(|b| b.len() <= 3) {
        SubOneClass::DeltaThreeQuarters
    } else {
        SubOneClass::AtLeastOne
    }
}

// ── engine internals ───────────────────────────────────────────────────────

/// Best (value, lexicographic key) seen: key is (corner triple, side index,
/// geodesic index, sample index) in iteration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Candidate {
    value: u32,
    key: [u32; 6],
}

struct PrepGeo {
    api: Geodesic,
    start_pid: u32,
    end_pid: u32,
    /// (edge, lo, hi, pid at lo, pid at hi) per covered edge interval.
    segs: Vec<(u32, u32, u32, u32, u32)>,
    /// pid of the sample at each step along the arc.
    samples: Vec<u32>,
}

struct PreparedPair {
    geos: Vec<PrepGeo>,
}

struct Engine<'a> {
    g: &'a Graph,
    d: DistanceMatrix,
    n: usize,
    pcount: usize,
    pp: Vec<u16>,
    pid_edge: Vec<u32>,
    pid_off: Vec<u32>,
    corners: Vec<u32>,
    pairs: Vec<PreparedPair>,
    memo: Vec<AtomicU16>,
}

const UNSET: u16 = u16::MAX;

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, mode: Mode, cap: u64) -> Result<Engine<'a>, GeodesicError> {
        let d = g.vertex_distances();
        let n = g.vertex_count();
        let m = g.edge_count();
        let pcount = n + 7 * m;

        let mut pid_edge = vec![u32::MAX; pcount];
        let mut pid_off = vec![0u32; pcount];
        for e in 0..m {
            for off in 1..UNITS_PER_EDGE {
                let pid = n + 7 * e + (off as usize - 1);
                pid_edge[pid] = e as u32;
                pid_off[pid] = off;
            }
        }

        let point_of = |pid: usize| -> GraphPoint {
            if pid < n {
                GraphPoint::Vertex(pid as u32)
            } else {
                let e = (pid - n) / 7;
                let off = ((pid - n) % 7 + 1) as u32;
                let (u, v) = g.edges()[e];
                GraphPoint::Interior { u, v, offset: EighthLength::from_units(off) }
            }
        };

        let mut pp = vec![0u16; pcount * pcount];
        for i in 0..pcount {
            let pi = point_of(i);
            for j in i..pcount {
                let units = point_distance_units(&d, pi, point_of(j));
                let units = u16::try_from(units).expect("distance fits in u16");
                pp[i * pcount + j] = units;
                pp[j * pcount + i] = units;
            }
        }

        let mut corners: Vec<u32> = (0..n as u32).collect();
        for e in 0..m {
            for &off in mode.corner_offsets() {
                corners.push((n + 7 * e + (off as usize - 1)) as u32);
            }
        }
        corners.sort_unstable();

        let step = mode.sample_step();
        let nc = corners.len();
        let mut pairs = Vec::with_capacity(nc * (nc + 1) / 2);
        for i in 0..nc {
            for j in i..nc {
                let p = point_of(corners[i] as usize);
                let q = point_of(corners[j] as usize);
                let geos = enumerate_geodesics(g, &d, p, q, cap)?;
                let prepared = geos
                    .into_iter()
                    .map(|geo| prepare_geo(g, geo, n, step))
                    .collect();
                pairs.push(PreparedPair { geos: prepared });
            }
        }

        let npairs = pairs.len();
        let memo = (0..pcount * npairs).map(|_| AtomicU16::new(UNSET)).collect();
        Ok(Engine { g, d, n, pcount, pp, pid_edge, pid_off, corners, pairs, memo })
    }

    fn point_of_pid(&self, pid: u32) -> GraphPoint {
        let pid = pid as usize;
        if pid < self.n {
            GraphPoint::Vertex(pid as u32)
        } else {
            let e = (pid - self.n) / 7;
            let off = ((pid - self.n) % 7 + 1) as u32;
            let (u, v) = self.g.edges()[e];
            GraphPoint::Interior { u, v, offset: EighthLength::from_units(off) }
        }
    }

    #[inline]
    fn dist(&self, a: u32, b: u32) -> u32 {
        self.pp[a as usize * self.pcount + b as usize] as u32
    }

    #[inline]
    fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i <= j);
        let nc = self.corners.len();
        // Row i starts after i rows of lengths nc, nc-1, ...
        i * (2 * nc - i + 1) / 2 + (j - i)
    }

    /// min over the points of one prepared geodesic of d(x, ·).
    fn geo_distance(&self, x: u32, geo: &PrepGeo) -> u32 {
        let mut dmin = self.dist(x, geo.start_pid).min(self.dist(x, geo.end_pid));
        let (xe, xo) = (self.pid_edge[x as usize], self.pid_off[x as usize]);
        for &(edge, lo, hi, pa, pb) in &geo.segs {
            if dmin == 0 {
                break;
            }
            if xe == edge && lo <= xo && xo <= hi {
                return 0;
            }
            dmin = dmin.min(self.dist(x, pa)).min(self.dist(x, pb));
        }
        dmin
    }

    /// max over the geodesics of a corner pair of the distance from x;
    /// memoized per (point, pair).
    fn side_max(&self, x: u32, pair_idx: usize) -> u32 {
        let slot = &self.memo[x as usize * self.pairs.len() + pair_idx];
        let cached = slot.load(Ordering::Relaxed);
        if cached != UNSET {
            return cached as u32;
        }
        let mut best = 0;
        for geo in &self.pairs[pair_idx].geos {
            best = best.max(self.geo_distance(x, geo));
        }
        slot.store(best as u16, Ordering::Relaxed);
        best
    }

    /// The corner pairs of the triangle (i,j,k) seen from side `side`:
    /// (own side, far pair 1, far pair 2).
    fn side_pairs(&self, i: usize, j: usize, k: usize, side: usize) -> (usize, usize, usize) {
        let ab = self.pair_index(i, j);
        let bc = self.pair_index(j, k);
        let ca = self.pair_index(i, k);
        match side {
            0 => (ab, bc, ca),
            1 => (bc, ca, ab),
            _ => (ca, ab, bc),
        }
    }

    fn scan_from(&self, i: usize, shared: &AtomicU32) -> Option<Candidate> {
        let nc = self.corners.len();
        let (ci, mut local): (u32, Option<Candidate>) = (self.corners[i], None);
        for j in i..nc {
            let cj = self.corners[j];
            let dij = self.dist(ci, cj);
            for k in j..nc {
                let ck = self.corners[k];
                let far = dij.max(self.dist(cj, ck)).max(self.dist(ci, ck));
                let bound = far / 2;
                if local.is_some_and(|c| bound <= c.value) || bound < shared.load(Ordering::Relaxed)
                {
                    continue;
                }
                for side in 0..3usize {
                    let (own, far1, far2) = self.side_pairs(i, j, k, side);
                    for (gi, geo) in self.pairs[own].geos.iter().enumerate() {
                        for (si, &x) in geo.samples.iter().enumerate() {
                            // d(x, far sides) can never beat the distance to
                            // the nearest corner: all three lie on them.
                            let cap = self
                                .dist(x, ci)
                                .min(self.dist(x, cj))
                                .min(self.dist(x, ck));
                            if local.is_some_and(|c| cap <= c.value)
                                || cap < shared.load(Ordering::Relaxed)
                            {
                                continue;
                            }
                            let f1 = self.side_max(x, far1);
                            if local.is_some_and(|c| f1 <= c.value) {
                                continue;
                            }
                            let value = f1.min(self.side_max(x, far2));
                            if local.map_or(true, |c| value > c.value) {
                                local = Some(Candidate {
                                    value,
                                    key: [
                                        i as u32, j as u32, k as u32, side as u32, gi as u32,
                                        si as u32,
                                    ],
                                });
                                shared.fetch_max(value, Ordering::Relaxed);
                            }
                        }
                    }
                }
            }
        }
        local
    }

    fn search(&self) -> Candidate {
        let nc = self.corners.len();
        let shared = AtomicU32::new(0);
        let locals: Vec<Option<Candidate>> = (0..nc)
            .into_par_iter()
            .map(|i| self.scan_from(i, &shared))
            .collect();
        locals
            .into_iter()
            .flatten()
            .reduce(|a, b| {
                if b.value > a.value || (b.value == a.value && b.key < a.key) {
                    b
                } else {
                    a
                }
            })
            .expect("at least the degenerate first triple is evaluated")
    }

    /// Reconstructs the witnessing triangle for a search candidate. The far
    /// sides are the first geodesics attaining the memoized maxima.
    fn build_witness(&self, cand: &Candidate) -> Witness {
        let [i, j, k, side, gi, si] = cand.key.map(|v| v as usize);
        let corners =
            [self.corners[i], self.corners[j], self.corners[k]].map(|pid| self.point_of_pid(pid));
        let (own, far1, far2) = self.side_pairs(i, j, k, side);
        let x_pid = self.pairs[own].geos[gi].samples[si];
        let point = self.point_of_pid(x_pid);

        let pick_far = |pair_idx: usize| -> Geodesic {
            let geos = &self.pairs[pair_idx].geos;
            let target = geos.iter().map(|geo| self.geo_distance(x_pid, geo)).max().unwrap();
            geos.iter()
                .find(|geo| self.geo_distance(x_pid, geo) == target)
                .unwrap()
                .api
                .clone()
        };
        // Triangle slots 0,1,2 carry the pairs (i,j), (j,k), (i,k); for side
        // s the far pairs land in slots s+1 and s+2 (mod 3). Stored geodesics
        // run low-to-high corner, so slot 2, which the triangle traverses as
        // c_k → c_i, is reversed.
        let own_slot = side;
        let mut slot_geos: [Option<Geodesic>; 3] = [None, None, None];
        slot_geos[own_slot] = Some(self.pairs[own].geos[gi].api.clone());
        slot_geos[(own_slot + 1) % 3] = Some(pick_far(far1));
        slot_geos[(own_slot + 2) % 3] = Some(pick_far(far2));
        let sides_out: Vec<Geodesic> = slot_geos
            .into_iter()
            .enumerate()
            .map(|(slot, geo)| {
                let geo = geo.unwrap();
                if slot == 2 {
                    geo.reversed()
                } else {
                    geo
                }
            })
            .collect();
        let triangle = GeodesicTriangle {
            corners,
            sides: [sides_out[0].clone(), sides_out[1].clone(), sides_out[2].clone()],
        };

        debug_assert_eq!(
            point_to_set_distance(
                self.g,
                &self.d,
                point,
                &[
                    triangle.sides[(own_slot + 1) % 3].clone(),
                    triangle.sides[(own_slot + 2) % 3].clone()
                ]
            )
            .units(),
            cand.value
        );
        Witness { triangle, side_index: own_slot, point }
    }
}

fn prepare_geo(g: &Graph, api: Geodesic, n: usize, step: u32) -> PrepGeo {
    let pid = |p: GraphPoint| -> u32 {
        match p {
            GraphPoint::Vertex(v) => v,
            GraphPoint::Interior { u, v, offset } => {
                let e = g.edge_index(u, v).expect("edge exists");
                (n + 7 * e + (offset.units() as usize - 1)) as u32
            }
        }
    };
    let segs = api
        .segments()
        .iter()
        .map(|s| {
            let e = g.edge_index(s.u, s.v).expect("edge exists") as u32;
            let pa = pid(GraphPoint::on_edge(s.u, s.v, EighthLength::from_units(s.lo)));
            let pb = pid(GraphPoint::on_edge(s.u, s.v, EighthLength::from_units(s.hi)));
            (e, s.lo, s.hi, pa, pb)
        })
        .collect();
    let total = api.length.units();
    let mut samples = Vec::with_capacity((total / step + 2) as usize);
    let mut s = 0;
    while s <= total {
        samples.push(pid(api.point_at(s)));
        s += step;
    }
    if total % step != 0 {
        samples.push(pid(api.point_at(total)));
    }
    let start_pid = pid(api.start);
    let end_pid = pid(api.end);
    PrepGeo { api, start_pid, end_pid, segs, samples }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete_graph, cycle_graph, path_graph, triangle_cactus};
    use crate::graph::Graph;

    fn delta_units(g: &Graph) -> u32 {
        delta_exact(g, Mode::Standard).unwrap().delta.units()
    }

    #[test]
    fn trees_have_delta_zero() {
        for g in [path_graph(1), path_graph(2), path_graph(6), tree_star()] {
            assert_eq!(delta_units(&g), 0, "{g:?}");
        }
    }

    fn tree_star() -> Graph {
        Graph::new(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap()
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(delta_units(&complete_graph(4)), 8); // δ(K4) = 1
        assert_eq!(delta_units(&complete_graph(5)), 8);
    }

    #[test]
    fn cycles_quarter_n() {
        for n in 3..=8u32 {
            assert_eq!(delta_units(&cycle_graph(n)), 2 * n, "C{n}");
        }
    }

    #[test]
    fn witness_is_consistent() {
        let g = cycle_graph(5);
        let d = g.vertex_distances();
        let r = delta_exact(&g, Mode::Standard).unwrap();
        assert!(r.witness.triangle.is_consistent(&d));
        let w = &r.witness;
        let own = &w.triangle.sides[w.side_index];
        assert_eq!(
            point_to_set_distance(&g, &d, w.point, std::slice::from_ref(own)),
            EighthLength::ZERO,
            "witness point must lie on its side"
        );
        let others = [
            w.triangle.sides[(w.side_index + 1) % 3].clone(),
            w.triangle.sides[(w.side_index + 2) % 3].clone(),
        ];
        assert_eq!(point_to_set_distance(&g, &d, w.point, &others), r.delta);
    }

    #[test]
    fn blocks_match_direct() {
        let graphs = vec![
            // Two triangles sharing a vertex.
            Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap(),
            // C5 with a pendant path.
            Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (4, 5), (5, 6)]).unwrap(),
            path_graph(5),
            triangle_cactus(7, 8).unwrap(),
        ];
        let expected_units = [6, 10, 0, 6];
        for (g, expected) in graphs.iter().zip(expected_units) {
            let direct = delta_exact(g, Mode::Standard).unwrap();
            let blocked = delta_via_blocks(g, Mode::Standard).unwrap();
            assert_eq!(direct.delta.units(), expected, "{g:?}");
            assert_eq!(blocked.delta, direct.delta, "{g:?}");
        }
    }

    #[test]
    fn standard_equals_fine_on_small_graphs() {
        let graphs = vec![
            cycle_graph(5),
            complete_graph(4),
            triangle_cactus(7, 9).unwrap(),
            Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]).unwrap(),
        ];
        for g in graphs {
            let s = delta_exact(&g, Mode::Standard).unwrap();
            let f = delta_exact(&g, Mode::Fine).unwrap();
            assert_eq!(s.delta, f.delta, "{g:?}");
        }
    }

    #[test]
    fn classification() {
        assert_eq!(classify_sub_one(&path_graph(6)), SubOneClass::IsTree);
        assert_eq!(
            classify_sub_one(&triangle_cactus(7, 9).unwrap()),
            SubOneClass::DeltaThreeQuarters
        );
        assert_eq!(classify_sub_one(&cycle_graph(4)), SubOneClass::AtLeastOne);
        // Classification matches the exact value bucket.
        for g in [path_graph(4), cycle_graph(3), cycle_graph(6), complete_graph(4)] {
            let units = delta_units(&g);
            let class = classify_sub_one(&g);
            match class {
                SubOneClass::IsTree => assert_eq!(units, 0),
                SubOneClass::DeltaThreeQuarters => assert_eq!(units, 6),
                SubOneClass::AtLeastOne => assert!(units >= 8),
            }
        }
    }

    #[test]
    fn cap_propagates() {
        let g = complete_graph(5);
        let err = delta_exact_with(&g, Mode::Standard, &DeltaOptions { geodesic_cap: 2 });
        assert!(matches!(err, Err(DeltaError::Geodesics(_))));
    }

    #[test]
    fn deterministic_witness() {
        let g = cycle_graph(6);
        let a = delta_exact(&g, Mode::Standard).unwrap();
        let b = delta_exact(&g, Mode::Standard).unwrap();
        assert_eq!(a.witness.triangle.corners, b.witness.triangle.corners);
        assert_eq!(a.witness.point, b.witness.point);
        assert_eq!(a.witness.side_index, b.witness.side_index);
    }
}
