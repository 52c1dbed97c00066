//! Complete enumeration of geodesics between metric-graph points, arc-length
//! sampling, and exact point-to-side distances.
//!
//! Geodesics are never unique in a graph, and the hyperbolicity constant is a
//! sup over all of them, so enumeration must be complete: for each fractional
//! endpoint we pick every exit vertex consistent with d(p,q), enumerate every
//! shortest vertex path in the shortest-path DAG between the chosen anchors,
//! and add the same-edge direct geodesic when the two points share an edge.

use thiserror::Error;

use crate::graph::{DistanceMatrix, Graph};
use crate::length::{EighthLength, UNITS_PER_EDGE};
use crate::point::{point_distance, point_distance_units, GraphPoint};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeodesicError {
    #[error("geodesic count {found} exceeds cap {cap}")]
    CapExceeded { found: u128, cap: u64 },
}

/// One geodesic between two points: the traversed vertices plus partial edge
/// segments at fractional endpoints. The vertex path is empty exactly for
/// degenerate interior points and for same-edge direct geodesics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Geodesic {
    pub start: GraphPoint,
    pub end: GraphPoint,
    pub vertex_path: Vec<u32>,
    pub length: EighthLength,
}

/// Interval [lo, hi] of offsets on edge (u, v) covered by a geodesic, with
/// u < v and offsets measured from u in 1/8 units.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub u: u32,
    pub v: u32,
    pub lo: u32,
    pub hi: u32,
}

impl Geodesic {
    /// The zero-length geodesic at a single point.
    pub fn degenerate(p: GraphPoint) -> Geodesic {
        let vertex_path = match p {
            GraphPoint::Vertex(v) => vec![v],
            GraphPoint::Interior { .. } => Vec::new(),
        };
        Geodesic { start: p, end: p, vertex_path, length: EighthLength::ZERO }
    }

    /// Start and end points swapped, vertex path reversed.
    pub fn reversed(&self) -> Geodesic {
        let mut vertex_path = self.vertex_path.clone();
        vertex_path.reverse();
        Geodesic { start: self.end, end: self.start, vertex_path, length: self.length }
    }

    /// Arc length from the start point to the first path vertex (0 when the
    /// start is itself a vertex).
    pub fn start_segment_units(&self) -> u32 {
        match (self.start, self.vertex_path.first()) {
            (GraphPoint::Interior { u, offset, .. }, Some(&a)) => {
                if a == u {
                    offset.units()
                } else {
                    UNITS_PER_EDGE - offset.units()
                }
            }
            _ => 0,
        }
    }

    pub fn end_segment_units(&self) -> u32 {
        match (self.end, self.vertex_path.last()) {
            (GraphPoint::Interior { u, offset, .. }, Some(&b)) => {
                if b == u {
                    offset.units()
                } else {
                    UNITS_PER_EDGE - offset.units()
                }
            }
            _ => 0,
        }
    }

    /// The edge intervals whose union is the geodesic's point set.
    pub fn segments(&self) -> Vec<Segment> {
        let mut segs = Vec::new();
        if self.length == EighthLength::ZERO {
            return segs;
        }
        if self.vertex_path.is_empty() {
            // Direct geodesic inside a single edge.
            let (GraphPoint::Interior { u, v, offset: o1 }, GraphPoint::Interior { offset: o2, .. }) =
                (self.start, self.end)
            else {
                unreachable!("pathless geodesics join interior points of one edge");
            };
            let (a, b) = (o1.units().min(o2.units()), o1.units().max(o2.units()));
            segs.push(Segment { u, v, lo: a, hi: b });
            return segs;
        }
        if let GraphPoint::Interior { u, v, offset } = self.start {
            let first = self.vertex_path[0];
            let t = offset.units();
            segs.push(if first == u {
                Segment { u, v, lo: 0, hi: t }
            } else {
                Segment { u, v, lo: t, hi: UNITS_PER_EDGE }
            });
        }
        for w in self.vertex_path.windows(2) {
            let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
            segs.push(Segment { u: a, v: b, lo: 0, hi: UNITS_PER_EDGE });
        }
        if let GraphPoint::Interior { u, v, offset } = self.end {
            let last = *self.vertex_path.last().unwrap();
            let t = offset.units();
            segs.push(if last == u {
                Segment { u, v, lo: 0, hi: t }
            } else {
                Segment { u, v, lo: t, hi: UNITS_PER_EDGE }
            });
        }
        segs
    }

    /// Point at arc length `s` (in 1/8 units) from the start.
    pub fn point_at(&self, s: u32) -> GraphPoint {
        assert!(s <= self.length.units());
        if self.length == EighthLength::ZERO {
            return self.start;
        }
        if self.vertex_path.is_empty() {
            let (GraphPoint::Interior { u, v, offset: o1 }, GraphPoint::Interior { offset: o2, .. }) =
                (self.start, self.end)
            else {
                unreachable!();
            };
            let (t1, t2) = (o1.units(), o2.units());
            let off = if t2 >= t1 { t1 + s } else { t1 - s };
            return GraphPoint::on_edge(u, v, EighthLength::from_units(off));
        }
        let s0 = self.start_segment_units();
        if s < s0 {
            let GraphPoint::Interior { u, v, offset } = self.start else { unreachable!() };
            let t = offset.units();
            let off = if self.vertex_path[0] == u { t - s } else { t + s };
            return GraphPoint::on_edge(u, v, EighthLength::from_units(off));
        }
        let rest = s - s0;
        let k = (rest / UNITS_PER_EDGE) as usize;
        let rem = rest % UNITS_PER_EDGE;
        if k + 1 < self.vertex_path.len() {
            let (a, b) = (self.vertex_path[k], self.vertex_path[k + 1]);
            return GraphPoint::on_edge(a, b, EighthLength::from_units(rem));
        }
        let last = *self.vertex_path.last().unwrap();
        if rem == 0 {
            return GraphPoint::Vertex(last);
        }
        let GraphPoint::Interior { u, v, .. } = self.end else { unreachable!() };
        if last == u {
            GraphPoint::on_edge(u, v, EighthLength::from_units(rem))
        } else {
            GraphPoint::on_edge(v, u, EighthLength::from_units(rem))
        }
    }
}

/// Number of shortest vertex paths between two vertices, by dynamic
/// programming over the shortest-path DAG. Saturates at u128::MAX.
pub fn count_shortest_paths(g: &Graph, d: &DistanceMatrix, a: u32, b: u32) -> u128 {
    let n = g.vertex_count();
    let mut memo: Vec<Option<u128>> = vec![None; n];
    fn rec(g: &Graph, d: &DistanceMatrix, x: u32, b: u32, memo: &mut Vec<Option<u128>>) -> u128 {
        if x == b {
            return 1;
        }
        if let Some(c) = memo[x as usize] {
            return c;
        }
        let mut total: u128 = 0;
        let dx = d.get(x, b);
        for &w in g.neighbors(x) {
            if d.get(w, b) + 1 == dx {
                total = total.saturating_add(rec(g, d, w, b, memo));
            }
        }
        memo[x as usize] = Some(total);
        total
    }
    rec(g, d, a, b, &mut memo)
}

fn anchors(p: GraphPoint) -> Vec<(u32, u32)> {
    match p {
        GraphPoint::Vertex(v) => vec![(v, 0)],
        GraphPoint::Interior { u, v, offset } => {
            vec![(u, offset.units()), (v, UNITS_PER_EDGE - offset.units())]
        }
    }
}

/// The complete set of distinct geodesics from p to q, sorted by vertex path.
/// Errors with `CapExceeded` before materializing when the count would blow
/// past `cap`.
pub fn enumerate_geodesics(
    g: &Graph,
    d: &DistanceMatrix,
    p: GraphPoint,
    q: GraphPoint,
    cap: u64,
) -> Result<Vec<Geodesic>, GeodesicError> {
    debug_assert!(p.is_valid_in(g) && q.is_valid_in(g));
    if p == q {
        return Ok(vec![Geodesic::degenerate(p)]);
    }
    let dist = point_distance_units(d, p, q);
    let length = EighthLength::from_units(dist);
    let mut geodesics: Vec<Geodesic> = Vec::new();

    if let (
        GraphPoint::Interior { u: u1, v: v1, offset: o1 },
        GraphPoint::Interior { u: u2, v: v2, offset: o2 },
    ) = (p, q)
    {
        if (u1, v1) == (u2, v2) && o1.abs_diff(o2).units() == dist {
            geodesics.push(Geodesic { start: p, end: q, vertex_path: Vec::new(), length });
        }
    }

    // Anchor pairs consistent with the distance, then a cap pre-check using
    // the DAG path counts.
    let mut active: Vec<(u32, u32)> = Vec::new();
    let mut total: u128 = geodesics.len() as u128;
    for &(a, ta) in &anchors(p) {
        for &(b, tb) in &anchors(q) {
            if ta + d.get(a, b) * UNITS_PER_EDGE + tb == dist {
                total = total.saturating_add(count_shortest_paths(g, d, a, b));
                active.push((a, b));
            }
        }
    }
    if total > cap as u128 {
        return Err(GeodesicError::CapExceeded { found: total, cap });
    }

    for (a, b) in active {
        let mut prefix = Vec::new();
        collect_paths(g, d, a, b, &mut prefix, &mut |path| {
            geodesics.push(Geodesic { start: p, end: q, vertex_path: path.to_vec(), length });
        });
    }

    geodesics.sort_by(|x, y| x.vertex_path.cmp(&y.vertex_path));
    geodesics.dedup_by(|x, y| x.vertex_path == y.vertex_path);
    Ok(geodesics)
}

fn collect_paths(
    g: &Graph,
    d: &DistanceMatrix,
    x: u32,
    b: u32,
    prefix: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32]),
) {
    prefix.push(x);
    if x == b {
        emit(prefix);
    } else {
        let dx = d.get(x, b);
        for &w in g.neighbors(x) {
            if d.get(w, b) + 1 == dx {
                collect_paths(g, d, w, b, prefix, emit);
            }
        }
    }
    prefix.pop();
}

/// Points at arc lengths 0, step, 2·step, ... along the side, with the far
/// endpoint always included. Offsets of 0 or a full edge collapse to vertices.
pub fn sample_side(side: &Geodesic, step: EighthLength) -> Vec<GraphPoint> {
    let step = step.units();
    assert!(step == 1 || step == 2, "sampling step must be 1 or 2 units");
    let total = side.length.units();
    let mut points = Vec::with_capacity((total / step + 2) as usize);
    let mut s = 0;
    while s <= total {
        points.push(side.point_at(s));
        s += step;
    }
    if (total % step) != 0 {
        points.push(side.point_at(total));
    }
    points
}

/// Exact distance from x to the union of the sides, per-segment in closed
/// form: within one segment the routed distance candidates are linear with
/// slopes ±1, so their minimum over the interval sits at an endpoint; the only
/// interior minimum is x itself when x lies on the segment.
pub fn point_to_set_distance(
    g: &Graph,
    d: &DistanceMatrix,
    x: GraphPoint,
    sides: &[Geodesic],
) -> EighthLength {
    assert!(!sides.is_empty());
    debug_assert!(x.is_valid_in(g));
    let mut best = u32::MAX;
    for side in sides {
        best = best.min(point_distance_units(d, x, side.start));
        best = best.min(point_distance_units(d, x, side.end));
        for seg in side.segments() {
            best = best.min(segment_distance_units(d, x, &seg));
        }
    }
    EighthLength::from_units(best)
}

pub(crate) fn segment_distance_units(d: &DistanceMatrix, x: GraphPoint, seg: &Segment) -> u32 {
    if let GraphPoint::Interior { u, v, offset } = x {
        if (u, v) == (seg.u, seg.v) && seg.lo <= offset.units() && offset.units() <= seg.hi {
            return 0;
        }
    }
    let pa = GraphPoint::on_edge(seg.u, seg.v, EighthLength::from_units(seg.lo));
    let pb = GraphPoint::on_edge(seg.u, seg.v, EighthLength::from_units(seg.hi));
    point_distance_units(d, x, pa).min(point_distance_units(d, x, pb))
}

/// Three corner points joined cyclically by geodesic sides: side i runs from
/// corner i to corner (i+1) mod 3. Degenerate triangles (repeated corners,
/// bigons) are allowed.
#[derive(Clone, Debug)]
pub struct GeodesicTriangle {
    pub corners: [GraphPoint; 3],
    pub sides: [Geodesic; 3],
}

impl GeodesicTriangle {
    /// Checks side endpoints against the corners and every side length
    /// against the point distance.
    pub fn is_consistent(&self, d: &DistanceMatrix) -> bool {
        (0..3).all(|i| {
            let s = &self.sides[i];
            s.start == self.corners[i]
                && s.end == self.corners[(i + 1) % 3]
                && s.length == point_distance(d, s.start, s.end)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete_graph, cycle_graph, path_graph};

    const CAP: u64 = 1_000_000;

    fn eighth(u: u32) -> EighthLength {
        EighthLength::from_units(u)
    }

    #[test]
    fn c4_opposite_vertices_two_geodesics() {
        let g = cycle_graph(4);
        let d = g.vertex_distances();
        let geos =
            enumerate_geodesics(&g, &d, GraphPoint::Vertex(0), GraphPoint::Vertex(2), CAP).unwrap();
        assert_eq!(geos.len(), 2);
        assert_eq!(geos[0].vertex_path, vec![0, 1, 2]);
        assert_eq!(geos[1].vertex_path, vec![0, 3, 2]);
        for geo in &geos {
            assert_eq!(geo.length, EighthLength::from_edges(2));
        }
    }

    #[test]
    fn trees_have_unique_geodesics() {
        let g = path_graph(6);
        let d = g.vertex_distances();
        for u in 0..6u32 {
            for v in 0..6u32 {
                let geos =
                    enumerate_geodesics(&g, &d, GraphPoint::Vertex(u), GraphPoint::Vertex(v), CAP)
                        .unwrap();
                assert_eq!(geos.len(), 1);
            }
        }
        let p = GraphPoint::on_edge(0, 1, eighth(3));
        let q = GraphPoint::on_edge(4, 5, eighth(6));
        let geos = enumerate_geodesics(&g, &d, p, q, CAP).unwrap();
        assert_eq!(geos.len(), 1);
        assert_eq!(geos[0].vertex_path, vec![1, 2, 3, 4]);
        assert_eq!(geos[0].length, eighth(5 + 8 * 3 + 6));
    }

    #[test]
    fn c6_antipodal_midpoints() {
        // Exhaustive path enumeration gives exactly the two length-3 arcs.
        let g = cycle_graph(6);
        let d = g.vertex_distances();
        let p = GraphPoint::midpoint(0, 1);
        let q = GraphPoint::midpoint(3, 4);
        let geos = enumerate_geodesics(&g, &d, p, q, CAP).unwrap();
        assert_eq!(geos.len(), 2);
        assert_eq!(geos[0].vertex_path, vec![0, 5, 4]);
        assert_eq!(geos[1].vertex_path, vec![1, 2, 3]);
        for geo in &geos {
            assert_eq!(geo.length, EighthLength::from_edges(3));
        }
    }

    #[test]
    fn lengths_match_point_distance_and_counts_match_dag() {
        let graphs = vec![
            cycle_graph(5),
            complete_graph(4),
            crate::graph::Graph::new(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap(),
        ];
        for g in graphs {
            let d = g.vertex_distances();
            for u in 0..g.vertex_count() as u32 {
                for v in 0..g.vertex_count() as u32 {
                    let geos = enumerate_geodesics(
                        &g,
                        &d,
                        GraphPoint::Vertex(u),
                        GraphPoint::Vertex(v),
                        CAP,
                    )
                    .unwrap();
                    assert_eq!(geos.len() as u128, count_shortest_paths(&g, &d, u, v));
                    for geo in &geos {
                        assert_eq!(
                            geo.length,
                            point_distance(&d, GraphPoint::Vertex(u), GraphPoint::Vertex(v))
                        );
                        for w in geo.vertex_path.windows(2) {
                            assert!(g.has_edge(w[0], w[1]));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cap_errors_instead_of_truncating() {
        let g = complete_graph(5);
        let d = g.vertex_distances();
        // Midpoints of disjoint edges have four geodesics; cap below that.
        let p = GraphPoint::midpoint(0, 1);
        let q = GraphPoint::midpoint(2, 3);
        let err = enumerate_geodesics(&g, &d, p, q, 3).unwrap_err();
        assert!(matches!(err, GeodesicError::CapExceeded { cap: 3, .. }));
        assert_eq!(enumerate_geodesics(&g, &d, p, q, 4).unwrap().len(), 4);
    }

    #[test]
    fn sampling_counts() {
        let g = path_graph(4);
        let d = g.vertex_distances();
        let side = &enumerate_geodesics(&g, &d, GraphPoint::Vertex(0), GraphPoint::Vertex(2), CAP)
            .unwrap()[0];
        assert_eq!(sample_side(side, eighth(2)).len(), 9);
        assert_eq!(sample_side(side, eighth(1)).len(), 17);

        let degenerate = &enumerate_geodesics(&g, &d, GraphPoint::Vertex(1), GraphPoint::Vertex(1), CAP)
            .unwrap()[0];
        assert_eq!(sample_side(degenerate, eighth(2)), vec![GraphPoint::Vertex(1)]);

        // Length 3/2 at step 1/4 gives 7 points.
        let p = GraphPoint::midpoint(0, 1);
        let q = GraphPoint::Vertex(2);
        let side = &enumerate_geodesics(&g, &d, p, q, CAP).unwrap()[0];
        assert_eq!(side.length, eighth(12));
        let pts = sample_side(side, eighth(2));
        assert_eq!(pts.len(), 7);
        assert_eq!(pts[0], p);
        assert_eq!(pts[6], q);
        // Sampled points are canonical: whole-edge offsets become vertices.
        assert_eq!(pts[2], GraphPoint::Vertex(1));
    }

    #[test]
    fn arc_length_parametrization() {
        let g = cycle_graph(6);
        let d = g.vertex_distances();
        let p = GraphPoint::on_edge(0, 1, eighth(5));
        let q = GraphPoint::midpoint(3, 4);
        for geo in enumerate_geodesics(&g, &d, p, q, CAP).unwrap() {
            for s in 0..=geo.length.units() {
                let x = geo.point_at(s);
                assert_eq!(
                    point_distance(&d, p, x),
                    eighth(s),
                    "prefix length must equal distance from start"
                );
            }
        }
    }

    #[test]
    fn point_on_side_distance_zero() {
        let g = cycle_graph(4);
        let d = g.vertex_distances();
        let sides =
            enumerate_geodesics(&g, &d, GraphPoint::Vertex(0), GraphPoint::Vertex(2), CAP).unwrap();
        let x = GraphPoint::Vertex(1);
        assert_eq!(point_to_set_distance(&g, &d, x, &sides[..1]), EighthLength::ZERO);
        // Midpoint of one side of the C4 bigon to the other side: 1.
        assert_eq!(point_to_set_distance(&g, &d, x, &sides[1..]), EighthLength::from_edges(1));
    }

    #[test]
    fn point_to_set_matches_dense_sampling() {
        let graphs = vec![
            cycle_graph(6),
            complete_graph(4),
            complete_graph(5),
            // Two triangles sharing a vertex.
            crate::graph::Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap(),
            // C8 with one chord.
            crate::graph::Graph::new(
                8,
                &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 7), (0, 3)],
            )
            .unwrap(),
        ];
        for g in graphs {
            let d = g.vertex_distances();
            let corners = [GraphPoint::Vertex(0), GraphPoint::midpoint(1, 2)];
            let sides = enumerate_geodesics(&g, &d, corners[0], corners[1], CAP).unwrap();
            let probes: Vec<GraphPoint> = (0..g.vertex_count() as u32)
                .map(GraphPoint::Vertex)
                .chain(g.edges().iter().flat_map(|&(u, v)| {
                    (1..8).map(move |off| GraphPoint::on_edge(u, v, eighth(off)))
                }))
                .collect();
            for &x in &probes {
                let exact = point_to_set_distance(&g, &d, x, &sides);
                let brute = sides
                    .iter()
                    .flat_map(|s| sample_side(s, eighth(1)))
                    .map(|y| point_distance(&d, x, y))
                    .min()
                    .unwrap();
                assert_eq!(exact, brute, "x = {x} in {g:?}");
                for side in &sides {
                    assert!(exact <= point_distance(&d, x, side.start));
                    assert!(exact <= point_distance(&d, x, side.end));
                }
            }
        }
    }
}
