//! Witness-graph constructions: triangle cacti, cliques with removed
//! sub-cliques, cycle-plus-clique graphs, paths, and the deficit partitions
//! that drive the clique removals.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("parameters out of range: {0}")]
    Range(String),
    #[error("invalid clique-removal spec: {0}")]
    Spec(String),
}

fn binom2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Path graph on n vertices (the minimal-δ witness for m = n − 1).
pub fn tree_witness(n: usize) -> Graph {
    path_graph(n as u32)
}

pub fn path_graph(n: u32) -> Graph {
    assert!(n >= 1);
    let edges: Vec<(u32, u32)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(n as usize, &edges).expect("path is valid")
}

pub fn cycle_graph(n: u32) -> Graph {
    assert!(n >= 3);
    let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n as usize, &edges).expect("cycle is valid")
}

pub fn complete_graph(n: u32) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n as usize, &edges).expect("complete graph is valid")
}

/// k = m+1−n triangles and n₀ = 3n−3−2m pendant edges glued at a single hub
/// vertex. Valid for m ≥ n and 2m ≤ 3n−3; the result has exactly n vertices,
/// m edges, and δ = 3/4.
pub fn triangle_cactus(n: u64, m: u64) -> Result<Graph, ConstructError> {
    if m < n || 2 * m > 3 * n - 3 {
        return Err(ConstructError::Range(format!(
            "triangle cactus needs n <= m and 2m <= 3n-3, got n={n}, m={m}"
        )));
    }
    let k = m + 1 - n;
    let pendants = 3 * n - 3 - 2 * m;
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(m as usize);
    let mut next = 1u32;
    for _ in 0..k {
        let (a, b) = (next, next + 1);
        next += 2;
        edges.push((0, a));
        edges.push((0, b));
        edges.push((a, b));
    }
    for _ in 0..pendants {
        edges.push((0, next));
        next += 1;
    }
    debug_assert_eq!(next as u64, n);
    Ok(Graph::new(n as usize, &edges).expect("cactus is valid"))
}

/// Vertex classes to strip from a complete graph: K_n minus all edges inside
/// each of the disjoint classes V_1, ..., V_s of sizes N_1, ..., N_s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueRemovalSpec {
    pub n: u64,
    pub parts: Vec<u64>,
}

impl CliqueRemovalSpec {
    pub fn new(n: u64, parts: Vec<u64>) -> Result<Self, ConstructError> {
        if parts.is_empty() {
            return Err(ConstructError::Spec("needs at least one class".into()));
        }
        for &p in &parts {
            if p < 2 {
                return Err(ConstructError::Spec(format!("class size {p} < 2")));
            }
            if p >= n {
                return Err(ConstructError::Spec(format!("class size {p} >= n = {n}")));
            }
        }
        let total: u64 = parts.iter().sum();
        if total > n {
            return Err(ConstructError::Spec(format!(
                "class sizes sum to {total} > n = {n}"
            )));
        }
        Ok(CliqueRemovalSpec { n, parts })
    }

    /// Edge count of the resulting graph.
    pub fn edge_count(&self) -> u64 {
        binom2(self.n) - self.parts.iter().map(|&p| binom2(p)).sum::<u64>()
    }
}

/// Complete graph minus the edges inside each class. Classes are placed as
/// consecutive label blocks starting at vertex 0.
pub fn kn_minus_cliques(spec: &CliqueRemovalSpec) -> Graph {
    let n = spec.n as u32;
    let mut class_of = vec![usize::MAX; n as usize];
    let mut start = 0u32;
    for (i, &size) in spec.parts.iter().enumerate() {
        for v in start..start + size as u32 {
            class_of[v as usize] = i;
        }
        start += size as u32;
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if class_of[u as usize] == usize::MAX || class_of[u as usize] != class_of[v as usize] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n as usize, &edges).expect("clique-removal graph is valid")
}

/// Sizes t_i ≥ 2 with Σ t_i ≤ t + 2 and Σ C(t_i, 2) = t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeficitPartition {
    pub t: u64,
    pub parts: Vec<u64>,
}

/// Deterministic partition realizing a removed-edge deficit of exactly t.
/// Base table for t ≤ 9; larger t recurses on t − 3 and appends a 3.
pub fn deficit_partition(t: u64) -> Result<DeficitPartition, ConstructError> {
    if t < 1 {
        return Err(ConstructError::Range("deficit must be at least 1".into()));
    }
    fn base_parts(t: u64) -> Vec<u64> {
        match t {
            1 => vec![2],
            2 => vec![2, 2],
            3 => vec![3],
            4 => vec![3, 2],
            5 => vec![3, 2, 2],
            6 => vec![4],
            7 => vec![4, 2],
            8 => vec![4, 2, 2],
            _ => vec![4, 3],
        }
    }
    // t > 9 recurses on t-3 and appends a 3; unrolled to stay off the stack.
    // The base case lands in {7, 8, 9} after (t-7)/3 subtractions.
    let threes = if t > 9 { (t - 7) / 3 } else { 0 };
    let mut parts = base_parts(t - 3 * threes);
    parts.extend(std::iter::repeat(3).take(threes as usize));
    debug_assert_eq!(parts.iter().map(|&p| binom2(p)).sum::<u64>(), t);
    debug_assert!(parts.iter().sum::<u64>() <= t + 2);
    Ok(DeficitPartition { t, parts })
}

/// A member of 𝒢(n,m) with δ = 1: a dense block (K_{n₀} minus a deficit
/// partition, or K₄ minus an edge for m = n+1, or K_n itself for the complete
/// case) glued at one vertex to a path absorbing the remaining vertices.
///
/// Defined for every m ≥ n+1 (n ≥ 4); it is the minimal-δ witness exactly
/// when 2m > 3n−3.
pub fn a_one_witness(n: u64, m: u64) -> Result<Graph, ConstructError> {
    if n < 4 || m < n + 1 || m > binom2(n) {
        return Err(ConstructError::Range(format!(
            "needs 4 <= n, n+1 <= m <= C(n,2), got n={n}, m={m}"
        )));
    }
    if m == binom2(n) {
        return Ok(complete_graph(n as u32));
    }
    if m == n + 1 {
        // Dense block: 4 vertices, 5 edges (K4 minus one edge), then a path.
        let mut edges = vec![(0u32, 1), (0, 2), (0, 3), (1, 2), (1, 3)];
        append_path_tail(&mut edges, 0, 4, n as u32);
        return Ok(Graph::new(n as usize, &edges).expect("witness is valid"));
    }
    // n₀-1 is the largest j in [4, n-1] with m - C(j,2) >= n - j; the deficit
    // T = C(n₀,2) + n - n₀ - m satisfies 1 <= T <= n₀-2.
    let j_max = (4..=n - 1)
        .filter(|&j| m >= binom2(j) && m - binom2(j) >= n - j)
        .max()
        .ok_or_else(|| ConstructError::Range(format!("no feasible block order for n={n}, m={m}")))?;
    let n0 = j_max + 1;
    let deficit = binom2(n0) + n - n0 - m;
    debug_assert!(deficit >= 1 && deficit <= n0 - 2);
    let partition = deficit_partition(deficit)?;
    let spec = CliqueRemovalSpec::new(n0, partition.parts)?;
    let core = kn_minus_cliques(&spec);
    let mut edges = core.edges().to_vec();
    append_path_tail(&mut edges, 0, n0 as u32, n as u32);
    Ok(Graph::new(n as usize, &edges).expect("witness is valid"))
}

/// Appends a path hub—first—first+1—…—(n−1) to the edge list.
fn append_path_tail(edges: &mut Vec<(u32, u32)>, hub: u32, first: u32, n: u32) {
    let mut prev = hub;
    for v in first..n {
        edges.push((prev, v));
        prev = v;
    }
}

/// Cycle C_n plus m − n chords inside the path {v₁..v_{n₀}} = {0..n₀−1},
/// inserted so that some v_i is adjacent to both path ends (giving the
/// geodesic bigon of length (n−n₀+3)/2), then lexicographically.
pub fn cycle_clique_witness(n: u64, n0: u64, m: u64) -> Result<Graph, ConstructError> {
    if n0 < 3 || n0 > n || n < 3 {
        return Err(ConstructError::Range(format!(
            "needs 3 <= n0 <= n, got n={n}, n0={n0}"
        )));
    }
    if m <= n || m > n + binom2(n0 - 1) || m > binom2(n) {
        return Err(ConstructError::Range(format!(
            "needs n < m <= n + C(n0-1,2) and m <= C(n,2), got n={n}, n0={n0}, m={m}"
        )));
    }
    let nu = n as u32;
    let n0u = n0 as u32;
    let is_cycle_edge = |a: u32, b: u32| -> bool {
        debug_assert!(a < b);
        b == a + 1 || (a == 0 && b == nu - 1)
    };
    let chords_needed = (m - n) as usize;
    let mut chords: Vec<(u32, u32)> = Vec::with_capacity(chords_needed);
    let push_chord = |chords: &mut Vec<(u32, u32)>, a: u32, b: u32| {
        let (a, b) = (a.min(b), a.max(b));
        if !is_cycle_edge(a, b) && !chords.contains(&(a, b)) {
            chords.push((a, b));
        }
    };
    // Priority chords guaranteeing a v_i adjacent to both v₁ and v_{n₀}.
    if n0u >= 4 {
        if chords_needed == 1 || n0u == 4 {
            push_chord(&mut chords, 1, n0u - 1);
        } else {
            let i = n0u.div_ceil(2);
            push_chord(&mut chords, 0, i - 1);
            push_chord(&mut chords, i - 1, n0u - 1);
        }
    }
    // For n₀ = 3, v₂ is cycle-adjacent to both ends already.
    'fill: for a in 0..n0u {
        for b in a + 1..n0u {
            if chords.len() >= chords_needed {
                break 'fill;
            }
            push_chord(&mut chords, a, b);
        }
    }
    chords.truncate(chords_needed);
    if chords.len() < chords_needed {
        return Err(ConstructError::Range(format!(
            "not enough chords inside the path for n={n}, n0={n0}, m={m}"
        )));
    }
    let mut edges: Vec<(u32, u32)> = (0..nu).map(|i| (i, (i + 1) % nu)).collect();
    edges.extend(chords);
    Ok(Graph::new(n as usize, &edges).expect("cycle-clique witness is valid"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cactus_parameters() {
        // n = 2k+1+n₀ and m = 3k+n₀.
        let g = triangle_cactus(7, 8).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 8));

        let c3 = triangle_cactus(3, 3).unwrap();
        assert_eq!(c3.edges(), cycle_graph(3).edges());

        let g = triangle_cactus(9, 12).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 12));

        assert!(matches!(triangle_cactus(7, 10), Err(ConstructError::Range(_))));
        assert!(matches!(triangle_cactus(5, 4), Err(ConstructError::Range(_))));
    }

    #[test]
    fn clique_removal() {
        let spec = CliqueRemovalSpec::new(5, vec![2, 2]).unwrap();
        assert_eq!(spec.edge_count(), 8);
        let g = kn_minus_cliques(&spec);
        assert_eq!(g.edge_count(), 8);
        assert!(!g.has_edge(0, 1));
        assert!(!g.has_edge(2, 3));
        assert!(g.has_edge(0, 2));

        let spec = CliqueRemovalSpec::new(4, vec![2]).unwrap();
        assert_eq!(kn_minus_cliques(&spec).edge_count(), 5);

        assert!(matches!(
            CliqueRemovalSpec::new(5, vec![3, 3]),
            Err(ConstructError::Spec(_))
        ));
    }

    #[test]
    fn deficit_base_and_recursion() {
        assert_eq!(deficit_partition(7).unwrap().parts, vec![4, 2]);
        assert_eq!(deficit_partition(1).unwrap().parts, vec![2]);
        let p = deficit_partition(12).unwrap();
        assert_eq!(p.parts, vec![4, 3, 3]);
        assert_eq!(p.parts.iter().sum::<u64>(), 10);
        assert!(matches!(deficit_partition(0), Err(ConstructError::Range(_))));
    }

    #[test]
    fn deficit_invariants_to_ten_thousand() {
        for t in 1..=10_000u64 {
            let p = deficit_partition(t).unwrap();
            assert!(p.parts.iter().all(|&x| x >= 2));
            assert!(p.parts.iter().sum::<u64>() <= t + 2);
            assert_eq!(p.parts.iter().map(|&x| binom2(x)).sum::<u64>(), t);
        }
    }

    #[test]
    fn a_one_witness_shapes() {
        // (5,8): K5 with two disjoint pairs removed.
        let g = a_one_witness(5, 8).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 8));

        // (6,7): the 4-vertex 5-edge block plus a path tail.
        let g = a_one_witness(6, 7).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 7));
        assert!(g.has_edge(0, 4) && g.has_edge(4, 5));

        // (4,6): complete graph.
        let g = a_one_witness(4, 6).unwrap();
        assert_eq!(g.edges(), complete_graph(4).edges());

        assert!(a_one_witness(5, 5).is_err());
        for n in 4..=9u64 {
            for m in n + 1..=binom2(n) {
                let g = a_one_witness(n, m).unwrap();
                assert_eq!((g.vertex_count() as u64, g.edge_count() as u64), (n, m));
            }
        }
    }

    #[test]
    fn cycle_clique_shapes() {
        let g = cycle_clique_witness(10, 5, 13).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 13));

        let g = cycle_clique_witness(6, 3, 7).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 7));
        assert!(g.has_edge(0, 2));

        let g = cycle_clique_witness(8, 4, 10).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 10));
        // v2 = vertex 1 is adjacent to both path ends 0 and 3.
        assert!(g.has_edge(1, 3));

        assert!(cycle_clique_witness(10, 5, 20).is_err());
        assert!(cycle_clique_witness(10, 5, 10).is_err());

        // Every feasible (n, n0, m) yields the requested parameters.
        for n in 4..=9u64 {
            for n0 in 3..=n {
                for m in n + 1..=(n + binom2(n0 - 1)).min(binom2(n)) {
                    let g = cycle_clique_witness(n, n0, m).unwrap();
                    assert_eq!((g.vertex_count() as u64, g.edge_count() as u64), (n, m));
                }
            }
        }
    }

    #[test]
    fn tree_witness_is_path() {
        assert_eq!(tree_witness(1).vertex_count(), 1);
        assert_eq!(tree_witness(2).edge_count(), 1);
        let p7 = tree_witness(7);
        assert_eq!((p7.vertex_count(), p7.edge_count()), (7, 6));
    }
}
