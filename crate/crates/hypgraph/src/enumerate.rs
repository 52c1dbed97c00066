//! Exhaustive small-graph corpora for the verification suites: all connected
//! labeled graphs on n vertices as edge bitmasks, canonical forms under
//! vertex relabeling, and one representative per isomorphism class.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Vertex pairs of K_n in lexicographic order; bit i of a mask is pairs[i].
pub fn edge_pairs(n: usize) -> Vec<(u32, u32)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            pairs.push((u, v));
        }
    }
    pairs
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = edge_pairs(n);
    let edges: Vec<(u32, u32)> = (0..pairs.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| pairs[i])
        .collect();
    Graph::new(n, &edges).expect("mask passed the connectivity filter")
}

pub fn mask_is_connected(n: usize, mask: u64) -> bool {
    if n == 0 {
        return false;
    }
    let pairs = edge_pairs(n);
    let mut adj = vec![0u32; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u as usize] |= 1 << v;
            adj[v as usize] |= 1 << u;
        }
    }
    let mut seen: u32 = 1;
    loop {
        let mut next = seen;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            next |= adj[v];
        }
        if next == seen {
            break;
        }
        seen = next;
    }
    seen == (1u32 << n) - 1
}

/// All connected labeled graphs on n vertices with m edges, as masks in
/// ascending order. n is capped at 7 (21 candidate edges).
pub fn connected_labeled_masks(n: usize, m: usize) -> Vec<u64> {
    assert!((1..=7).contains(&n), "labeled enumeration supports n <= 7");
    let bits = n * (n - 1) / 2;
    (0u64..1 << bits)
        .filter(|&mask| mask.count_ones() as usize == m && mask_is_connected(n, mask))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

/// Precomputed relabeling tables: canonical form = min over vertex
/// permutations of the remapped edge mask.
pub struct Canonicalizer {
    n: usize,
    /// Per permutation, the image bit of each edge bit.
    bit_maps: Vec<Vec<u8>>,
}

impl Canonicalizer {
    pub fn new(n: usize) -> Canonicalizer {
        assert!((1..=7).contains(&n));
        let pairs = edge_pairs(n);
        let mut bit_of = vec![vec![0u8; n]; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            bit_of[u as usize][v as usize] = i as u8;
            bit_of[v as usize][u as usize] = i as u8;
        }
        let bit_maps = permutations(n)
            .into_iter()
            .map(|perm| {
                pairs
                    .iter()
                    .map(|&(u, v)| bit_of[perm[u as usize]][perm[v as usize]])
                    .collect()
            })
            .collect();
        Canonicalizer { n, bit_maps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn canonical(&self, mask: u64) -> u64 {
        let mut best = u64::MAX;
        for map in &self.bit_maps {
            let mut image = 0u64;
            let mut rest = mask;
            while rest != 0 {
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                image |= 1 << map[bit];
            }
            best = best.min(image);
        }
        best
    }
}

/// One representative per isomorphism class of connected graphs on exactly n
/// vertices, generated by canonical augmentation level by level.
pub fn connected_class_masks(n: usize) -> Vec<u64> {
    assert!((1..=7).contains(&n));
    let canon = Canonicalizer::new(n);
    let bits = n * (n - 1) / 2;
    let mut level: BTreeSet<u64> = BTreeSet::from([0u64]);
    let mut connected = Vec::new();
    if n == 1 {
        return vec![0];
    }
    for _m in 1..=bits {
        let mut next = BTreeSet::new();
        for &g in &level {
            for bit in 0..bits {
                if g >> bit & 1 == 0 {
                    next.insert(canon.canonical(g | 1 << bit));
                }
            }
        }
        connected.extend(next.iter().copied().filter(|&g| mask_is_connected(n, g)));
        level = next;
    }
    connected
}

pub fn connected_class_reps(n: usize) -> Vec<Graph> {
    connected_class_masks(n)
        .into_iter()
        .map(|mask| graph_from_mask(n, mask))
        .collect()
}
