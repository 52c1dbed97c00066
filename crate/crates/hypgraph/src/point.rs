//! Points of the metric graph (vertices and edge interiors) and exact
//! distances between them.

use crate::graph::{DistanceMatrix, Graph};
use crate::length::{EighthLength, UNITS_PER_EDGE};

/// A point of the metric graph: a vertex, or a point strictly inside an edge.
/// Interior points are stored on the canonical orientation u < v with the
/// offset measured from u, 0 < offset < 1 edge.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GraphPoint {
    Vertex(u32),
    Interior { u: u32, v: u32, offset: EighthLength },
}

impl GraphPoint {
    /// Point at `offset` from `a` along edge (a, b). Offsets of 0 or a full
    /// edge collapse to the corresponding vertex; the interior case is
    /// normalized to the u < v orientation.
    pub fn on_edge(a: u32, b: u32, offset: EighthLength) -> GraphPoint {
        assert!(a != b, "loop edges are excluded");
        let units = offset.units();
        assert!(units <= UNITS_PER_EDGE, "offset beyond edge length");
        if units == 0 {
            GraphPoint::Vertex(a)
        } else if units == UNITS_PER_EDGE {
            GraphPoint::Vertex(b)
        } else if a < b {
            GraphPoint::Interior { u: a, v: b, offset }
        } else {
            GraphPoint::Interior {
                u: b,
                v: a,
                offset: EighthLength::from_units(UNITS_PER_EDGE - units),
            }
        }
    }

    pub fn midpoint(a: u32, b: u32) -> GraphPoint {
        GraphPoint::on_edge(a, b, EighthLength::from_units(UNITS_PER_EDGE / 2))
    }

    /// True when the point is a vertex of the graph.
    pub fn is_vertex(&self) -> bool {
        matches!(self, GraphPoint::Vertex(_))
    }

    /// Checks the point against a specific graph: vertex label in range,
    /// hosting edge present.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        match *self {
            GraphPoint::Vertex(v) => (v as usize) < g.vertex_count(),
            GraphPoint::Interior { u, v, offset } => {
                u < v && offset.units() > 0 && offset.units() < UNITS_PER_EDGE && g.has_edge(u, v)
            }
        }
    }
}

impl std::fmt::Display for GraphPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            GraphPoint::Vertex(v) => write!(f, "v{v}"),
            GraphPoint::Interior { u, v, offset } => write!(f, "[{u},{v}]@{offset}"),
        }
    }
}

/// Exact distance between two points of the metric graph. Routes through the
/// endpoints of each hosting edge, plus the direct in-edge candidate when both
/// points share an edge.
pub fn point_distance(d: &DistanceMatrix, p: GraphPoint, q: GraphPoint) -> EighthLength {
    let units = point_distance_units(d, p, q);
    EighthLength::from_units(units)
}

pub(crate) fn point_distance_units(d: &DistanceMatrix, p: GraphPoint, q: GraphPoint) -> u32 {
    match (p, q) {
        (GraphPoint::Vertex(a), GraphPoint::Vertex(b)) => d.get(a, b) * UNITS_PER_EDGE,
        (GraphPoint::Vertex(a), GraphPoint::Interior { u, v, offset })
        | (GraphPoint::Interior { u, v, offset }, GraphPoint::Vertex(a)) => {
            let t = offset.units();
            let via_u = d.get(a, u) * UNITS_PER_EDGE + t;
            let via_v = d.get(a, v) * UNITS_PER_EDGE + (UNITS_PER_EDGE - t);
            via_u.min(via_v)
        }
        (
            GraphPoint::Interior { u: u1, v: v1, offset: o1 },
            GraphPoint::Interior { u: u2, v: v2, offset: o2 },
        ) => {
            let (t1, t2) = (o1.units(), o2.units());
            let mut best = u32::MAX;
            // Endpoint-routed candidates: leave p through a, enter q through b.
            for (a, ta) in [(u1, t1), (v1, UNITS_PER_EDGE - t1)] {
                for (b, tb) in [(u2, t2), (v2, UNITS_PER_EDGE - t2)] {
                    best = best.min(ta + d.get(a, b) * UNITS_PER_EDGE + tb);
                }
            }
            if (u1, v1) == (u2, v2) {
                best = best.min(t1.abs_diff(t2));
            }
            best
        }
    }
}

/// Maximum distance between two vertices, exact.
pub fn diam_vertices(g: &Graph, d: &DistanceMatrix) -> EighthLength {
    debug_assert_eq!(g.vertex_count(), d.n());
    EighthLength::from_edges(d.max())
}

/// Maximum distance between two points of the metric graph. Exact: the
/// pairwise distance of two edge points is a min of linear functions with
/// slopes ±1 and integer intercepts, so the maximum over a pair of edges is
/// attained on the half-integer grid; sampling at quarter offsets covers it
/// with margin. The 1/8 refinement equality is asserted by tests.
pub fn diam_graph(g: &Graph, d: &DistanceMatrix) -> EighthLength {
    diam_graph_sampled(g, d, 2)
}

/// Diameter over vertices plus edge points at every `step`-unit offset.
pub(crate) fn diam_graph_sampled(g: &Graph, d: &DistanceMatrix, step: u32) -> EighthLength {
    assert!(step > 0 && UNITS_PER_EDGE % step == 0);
    let mut points: Vec<GraphPoint> = (0..g.vertex_count() as u32).map(GraphPoint::Vertex).collect();
    for &(u, v) in g.edges() {
        let mut off = step;
        while off < UNITS_PER_EDGE {
            points.push(GraphPoint::on_edge(u, v, EighthLength::from_units(off)));
            off += step;
        }
    }
    let mut best = 0;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            best = best.max(point_distance_units(d, points[i], points[j]));
        }
    }
    EighthLength::from_units(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete_graph, cycle_graph, path_graph};
    use proptest::prelude::*;

    fn eighth(u: u32) -> EighthLength {
        EighthLength::from_units(u)
    }

    #[test]
    fn canonicalizes() {
        assert_eq!(GraphPoint::on_edge(2, 5, eighth(0)), GraphPoint::Vertex(2));
        assert_eq!(GraphPoint::on_edge(2, 5, eighth(8)), GraphPoint::Vertex(5));
        assert_eq!(
            GraphPoint::on_edge(5, 2, eighth(3)),
            GraphPoint::Interior { u: 2, v: 5, offset: eighth(5) }
        );
    }

    #[test]
    fn opposite_midpoints_on_c4() {
        // Enumerating all four endpoint routes gives 2.
        let g = cycle_graph(4);
        let d = g.vertex_distances();
        let p = GraphPoint::midpoint(0, 1);
        let q = GraphPoint::midpoint(2, 3);
        assert_eq!(point_distance(&d, p, q), EighthLength::from_edges(2));
    }

    #[test]
    fn same_point_is_zero() {
        let g = cycle_graph(5);
        let d = g.vertex_distances();
        let p = GraphPoint::on_edge(1, 2, eighth(3));
        assert_eq!(point_distance(&d, p, p), EighthLength::ZERO);
    }

    #[test]
    fn k4_midpoint_to_vertex() {
        // d(x, w) = d(x, u) + d(u, w) = 3/2 for the midpoint of an edge of K4
        // and a vertex outside it.
        let g = complete_graph(4);
        let d = g.vertex_distances();
        let x = GraphPoint::midpoint(0, 1);
        assert_eq!(point_distance(&d, x, GraphPoint::Vertex(2)), eighth(12));
    }

    #[test]
    fn diameters() {
        let c3 = cycle_graph(3);
        let d3 = c3.vertex_distances();
        assert_eq!(diam_vertices(&c3, &d3), EighthLength::from_edges(1));
        assert_eq!(diam_graph(&c3, &d3), eighth(12));

        // For n >= 4 the midpoints of two disjoint edges realize distance 2.
        for n in 4..=6 {
            let kn = complete_graph(n);
            let dk = kn.vertex_distances();
            assert_eq!(diam_vertices(&kn, &dk), EighthLength::from_edges(1));
            assert_eq!(diam_graph(&kn, &dk), EighthLength::from_edges(2));
        }

        let p3 = path_graph(3);
        let dp = p3.vertex_distances();
        assert_eq!(diam_vertices(&p3, &dp), EighthLength::from_edges(2));
        assert_eq!(diam_graph(&p3, &dp), EighthLength::from_edges(2));
    }

    fn small_corpus() -> Vec<crate::graph::Graph> {
        vec![
            path_graph(5),
            cycle_graph(3),
            cycle_graph(6),
            complete_graph(4),
            crate::graph::Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (2, 4)]).unwrap(),
        ]
    }

    #[test]
    fn refinement_stability_and_sandwich() {
        for g in small_corpus() {
            let d = g.vertex_distances();
            let quarter = diam_graph_sampled(&g, &d, 2);
            let eighthly = diam_graph_sampled(&g, &d, 1);
            assert_eq!(quarter, eighthly, "{g:?}");
            let dv = diam_vertices(&g, &d);
            assert!(dv <= quarter);
            assert!(quarter <= dv + EighthLength::EDGE);
        }
    }

    #[test]
    fn vertex_restriction_matches_matrix() {
        for g in small_corpus() {
            let d = g.vertex_distances();
            for u in 0..g.vertex_count() as u32 {
                for v in 0..g.vertex_count() as u32 {
                    assert_eq!(
                        point_distance(&d, GraphPoint::Vertex(u), GraphPoint::Vertex(v)),
                        EighthLength::from_edges(d.get(u, v))
                    );
                }
            }
        }
    }

    fn arbitrary_point(g: &crate::graph::Graph) -> impl Strategy<Value = GraphPoint> {
        let n = g.vertex_count() as u32;
        let edges = g.edges().to_vec();
        prop_oneof![
            (0..n).prop_map(GraphPoint::Vertex),
            (0..edges.len(), 1u32..8).prop_map(move |(e, off)| {
                let (u, v) = edges[e];
                GraphPoint::on_edge(u, v, eighth(off))
            }),
        ]
    }

    proptest! {
        #[test]
        fn symmetric_and_triangle(idx in 0usize..5, seed in proptest::array::uniform3(0u64..u64::MAX)) {
            let corpus = small_corpus();
            let g = &corpus[idx];
            let d = g.vertex_distances();
            // Deterministic pseudo-points from the seed triple.
            let pts: Vec<GraphPoint> = seed.iter().map(|&s| {
                let choice = s % (g.vertex_count() as u64 + g.edge_count() as u64 * 7);
                if choice < g.vertex_count() as u64 {
                    GraphPoint::Vertex(choice as u32)
                } else {
                    let r = choice - g.vertex_count() as u64;
                    let (u, v) = g.edges()[(r / 7) as usize];
                    GraphPoint::on_edge(u, v, eighth((r % 7) as u32 + 1))
                }
            }).collect();
            let (x, y, z) = (pts[0], pts[1], pts[2]);
            prop_assert_eq!(point_distance(&d, x, y), point_distance(&d, y, x));
            prop_assert!(point_distance(&d, x, z) <= point_distance(&d, x, y) + point_distance(&d, y, z));
            prop_assert_eq!(point_distance(&d, x, x), EighthLength::ZERO);
        }
    }
}
