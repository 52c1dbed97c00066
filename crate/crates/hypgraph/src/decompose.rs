//! Cut vertices, T-decompositions into blocks, effective diameters, and the
//! all-cycles-are-triangles structure check.

use serde::Serialize;

use crate::graph::Graph;
use crate::length::EighthLength;
use crate::point::diam_graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DecompositionKind {
    Canonical,
    Edge,
}

/// A T-decomposition: subgraphs covering G that pairwise intersect in at most
/// a cut vertex. Blocks are vertex sets of maximal two-connected subgraphs
/// (bridges included as two-vertex blocks), sorted lexicographically; the
/// induced subgraph on a block's vertex set is exactly the block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TDecomposition {
    pub cut_vertices: Vec<u32>,
    pub blocks: Vec<Vec<u32>>,
    pub kind: DecompositionKind,
}

struct BlockDfs {
    disc: Vec<u32>,
    low: Vec<u32>,
    parent: Vec<u32>,
    next_edge: Vec<usize>,
    is_cut: Vec<bool>,
    edge_stack: Vec<(u32, u32)>,
    components: Vec<Vec<(u32, u32)>>,
    timer: u32,
}

fn block_dfs(g: &Graph) -> BlockDfs {
    let n = g.vertex_count();
    let mut s = BlockDfs {
        disc: vec![0; n],
        low: vec![0; n],
        parent: vec![u32::MAX; n],
        next_edge: vec![0; n],
        is_cut: vec![false; n],
        edge_stack: Vec::new(),
        components: Vec::new(),
        timer: 1,
    };
    for root in 0..n as u32 {
        if s.disc[root as usize] != 0 {
            continue;
        }
        s.disc[root as usize] = s.timer;
        s.low[root as usize] = s.timer;
        s.timer += 1;
        let mut root_children = 0u32;
        let mut stack = vec![root];
        while let Some(&u) = stack.last() {
            let ui = u as usize;
            if s.next_edge[ui] < g.degree(u) {
                let v = g.neighbors(u)[s.next_edge[ui]];
                s.next_edge[ui] += 1;
                let vi = v as usize;
                if s.disc[vi] == 0 {
                    s.edge_stack.push((u, v));
                    s.parent[vi] = u;
                    s.disc[vi] = s.timer;
                    s.low[vi] = s.timer;
                    s.timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push(v);
                } else if v != s.parent[ui] && s.disc[vi] < s.disc[ui] {
                    s.edge_stack.push((u, v));
                    s.low[ui] = s.low[ui].min(s.disc[vi]);
                }
            } else {
                stack.pop();
                if let Some(&p) = stack.last() {
                    let pi = p as usize;
                    s.low[pi] = s.low[pi].min(s.low[ui]);
                    if s.low[ui] >= s.disc[pi] {
                        if p != root {
                            s.is_cut[pi] = true;
                        }
                        let mut comp = Vec::new();
                        while let Some(e) = s.edge_stack.pop() {
                            comp.push(e);
                            if e == (p, u) {
                                break;
                            }
                        }
                        s.components.push(comp);
                    }
                }
            }
        }
        if root_children >= 2 {
            s.is_cut[root as usize] = true;
        }
    }
    s
}

/// Exactly the articulation points, sorted.
pub fn cut_vertices(g: &Graph) -> Vec<u32> {
    block_dfs(g)
        .is_cut
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(v, _)| v as u32)
        .collect()
}

fn blocks_as_vertex_sets(components: &[Vec<(u32, u32)>]) -> Vec<Vec<u32>> {
    let mut blocks: Vec<Vec<u32>> = components
        .iter()
        .map(|comp| {
            let mut vs: Vec<u32> = comp.iter().flat_map(|&(u, v)| [u, v]).collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();
    blocks.sort();
    blocks
}

/// The canonical T-decomposition: maximal two-connected subgraphs.
pub fn canonical_t_decomposition(g: &Graph) -> TDecomposition {
    let dfs = block_dfs(g);
    TDecomposition {
        cut_vertices: dfs
            .is_cut
            .iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(|(v, _)| v as u32)
            .collect(),
        blocks: blocks_as_vertex_sets(&dfs.components),
        kind: DecompositionKind::Canonical,
    }
}

/// The T-edge-decomposition: each component is either a cut-edge or contains
/// no cut-edges. Cut-edges are their own components and the remaining
/// components are the bridgeless blocks, so the partition coincides with the
/// canonical one on simple graphs.
pub fn t_edge_decomposition(g: &Graph) -> TDecomposition {
    TDecomposition { kind: DecompositionKind::Edge, ..canonical_t_decomposition(g) }
}

/// Builds the subgraph induced by a sorted vertex set, relabeled to
/// 0..k-1 in the same order. Returns the graph and the local-to-original map.
pub fn induced_subgraph(g: &Graph, vertices: &[u32]) -> (Graph, Vec<u32>) {
    debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
    let mut local = std::collections::HashMap::new();
    for (i, &v) in vertices.iter().enumerate() {
        local.insert(v, i as u32);
    }
    let mut edges = Vec::new();
    for &(u, v) in g.edges() {
        if let (Some(&lu), Some(&lv)) = (local.get(&u), local.get(&v)) {
            edges.push((lu, lv));
        }
    }
    let sub = Graph::new(vertices.len(), &edges).expect("induced block subgraph is valid");
    (sub, vertices.to_vec())
}

/// Per-block diameters, in whole edges over vertices and exactly over points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EffectiveDiameters {
    pub diameff_v: u32,
    pub diameff_g: EighthLength,
}

/// Sup of the block diameters over the canonical T-decomposition.
pub fn effective_diameters(g: &Graph) -> EffectiveDiameters {
    let decomposition = canonical_t_decomposition(g);
    let mut diameff_v = 0;
    let mut diameff_g = EighthLength::ZERO;
    for block in &decomposition.blocks {
        let (sub, _) = induced_subgraph(g, block);
        let d = sub.vertex_distances();
        diameff_v = diameff_v.max(d.max());
        diameff_g = diameff_g.max(diam_graph(&sub, &d));
    }
    EffectiveDiameters { diameff_v, diameff_g }
}

/// Membership in Γ₃ (every cycle is a triangle and every edge lies on one):
/// true exactly when every block of the canonical T-decomposition is a
/// triangle. When true, k counts the triangles and n = 2k+1, m = 3k holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gamma3Check {
    pub in_gamma3: bool,
    pub k: Option<u64>,
}

pub fn gamma3_check(g: &Graph) -> Gamma3Check {
    let decomposition = canonical_t_decomposition(g);
    if decomposition.blocks.iter().all(|b| b.len() == 3) {
        let k = decomposition.blocks.len() as u64;
        assert_eq!(g.vertex_count() as u64, 2 * k + 1);
        assert_eq!(g.edge_count() as u64, 3 * k);
        Gamma3Check { in_gamma3: true, k: Some(k) }
    } else {
        Gamma3Check { in_gamma3: false, k: None }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete_graph, cycle_graph, path_graph, triangle_cactus};
    use crate::point::diam_vertices;

    fn bowtie() -> Graph {
        Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn articulation_points() {
        assert_eq!(cut_vertices(&bowtie()), vec![2]);
        assert_eq!(cut_vertices(&cycle_graph(5)), Vec::<u32>::new());
        assert_eq!(cut_vertices(&path_graph(4)), vec![1, 2]);
    }

    #[test]
    fn canonical_blocks() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let t = canonical_t_decomposition(&g);
        assert_eq!(t.blocks, vec![vec![0, 1, 2], vec![2, 3]]);
        assert_eq!(t.cut_vertices, vec![2]);

        let k5 = complete_graph(5);
        assert_eq!(canonical_t_decomposition(&k5).blocks.len(), 1);

        // k triangles and n₀ pendant edges glued at a hub: k + n₀ blocks.
        let cactus = triangle_cactus(9, 10).unwrap(); // k = 2, n₀ = 4
        assert_eq!(canonical_t_decomposition(&cactus).blocks.len(), 6);
    }

    #[test]
    fn blocks_partition_edges_and_interior_vertices() {
        for g in [bowtie(), cycle_graph(6), path_graph(5), triangle_cactus(7, 8).unwrap()] {
            let t = canonical_t_decomposition(&g);
            let mut edge_total = 0;
            for block in &t.blocks {
                let (sub, _) = induced_subgraph(&g, block);
                edge_total += sub.edge_count();
            }
            assert_eq!(edge_total, g.edge_count());
            for v in 0..g.vertex_count() as u32 {
                let containing = t.blocks.iter().filter(|b| b.contains(&v)).count();
                if t.cut_vertices.contains(&v) {
                    assert!(containing >= 2);
                } else {
                    assert_eq!(containing, 1);
                }
            }
        }
    }

    #[test]
    fn edge_decomposition() {
        let tree = path_graph(5);
        assert_eq!(t_edge_decomposition(&tree).blocks.len(), 4);
        assert_eq!(t_edge_decomposition(&cycle_graph(4)).blocks.len(), 1);
        assert_eq!(t_edge_decomposition(&bowtie()).blocks.len(), 2);
    }

    #[test]
    fn effective_diameter_examples() {
        let e = effective_diameters(&bowtie());
        assert_eq!(e.diameff_v, 1);
        assert_eq!(e.diameff_g, EighthLength::from_units(12));
        let d = bowtie().vertex_distances();
        assert_eq!(diam_vertices(&bowtie(), &d), EighthLength::from_edges(2));

        let e = effective_diameters(&cycle_graph(6));
        assert_eq!(e.diameff_v, 3);

        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(effective_diameters(&star).diameff_v, 1);
    }

    #[test]
    fn gamma3_examples() {
        let c3 = cycle_graph(3);
        assert_eq!(gamma3_check(&c3), Gamma3Check { in_gamma3: true, k: Some(1) });

        assert_eq!(gamma3_check(&bowtie()), Gamma3Check { in_gamma3: true, k: Some(2) });

        let c3_pendant = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(gamma3_check(&c3_pendant).in_gamma3, false);
    }

    #[test]
    fn triangle_cycle_edge_bound() {
        // Graphs whose cycles are all triangles satisfy 2m <= 3n-3, with
        // Γ₃ membership exactly when there are no pendant edges.
        for n in 3..=9u64 {
            for m in n..=(3 * n - 3) / 2 {
                let g = triangle_cactus(n, m).unwrap();
                assert!(2 * g.edge_count() as u64 <= 3 * g.vertex_count() as u64 - 3);
                assert_eq!(gamma3_check(&g).in_gamma3, 2 * m == 3 * n - 3);
            }
        }
    }

    #[test]
    fn decomposition_serializes() {
        let t = canonical_t_decomposition(&bowtie());
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.starts_with("{\"cut_vertices\":[2],\"blocks\":[[0,1,2],[2,3,4]]"));
    }
}
