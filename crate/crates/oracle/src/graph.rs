//! Underlying multigraphs and the K4-minor test.

use std::collections::BTreeSet;

use crate::map::RotationMap;

/// Undirected multigraph on `0..n`, loops and parallel edges allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn of_map(m: &RotationMap) -> MultiGraph {
        let edges = m
            .edges()
            .into_iter()
            .map(|(a, b)| (m.vertex_of(a), m.vertex_of(b)))
            .collect();
        MultiGraph {
            n: m.vertex_count(),
            edges,
        }
    }

    /// True when the graph reduces to nothing under: drop loops and parallel copies,
    /// delete vertices of degree at most 1, suppress vertices of degree 2.
    pub fn is_k4_minor_free(&self) -> bool {
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.n];
        for &(a, b) in &self.edges {
            if a != b {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        let mut alive: BTreeSet<usize> = (0..self.n).collect();
        loop {
            let Some(&v) = alive.iter().find(|&&v| adj[v].len() <= 2) else {
                return alive.is_empty();
            };
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            for &w in &nb {
                adj[w].remove(&v);
            }
            adj[v].clear();
            alive.remove(&v);
            if let [a, b] = nb[..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
    }
}

pub fn is_k4_minor_free(m: &RotationMap) -> bool {
    MultiGraph::of_map(m).is_k4_minor_free()
}

#[cfg(test)]
mod tests {
    use super::*;

    // branch sets: assign every vertex to one of four sets or none, check connectivity and
    // pairwise adjacency
    fn brute_has_k4_minor(g: &MultiGraph) -> bool {
        let n = g.n;
        let total = 5usize.pow(n as u32);
        'outer: for code in 0..total {
            let mut part = vec![4usize; n];
            let mut c = code;
            for p in part.iter_mut() {
                *p = c % 5;
                c /= 5;
            }
            for s in 0..4 {
                let members: Vec<usize> = (0..n).filter(|&v| part[v] == s).collect();
                if members.is_empty() {
                    continue 'outer;
                }
                let mut seen = vec![members[0]];
                let mut i = 0;
                while i < seen.len() {
                    let v = seen[i];
                    for &(a, b) in &g.edges {
                        for (x, y) in [(a, b), (b, a)] {
                            if x == v && part[y] == s && !seen.contains(&y) {
                                seen.push(y);
                            }
                        }
                    }
                    i += 1;
                }
                if seen.len() != members.len() {
                    continue 'outer;
                }
            }
            for s in 0..4 {
                for t in s + 1..4 {
                    if !g.edges.iter().any(|&(a, b)| {
                        (part[a] == s && part[b] == t) || (part[a] == t && part[b] == s)
                    }) {
                        continue 'outer;
                    }
                }
            }
            return true;
        }
        false
    }

    #[test]
    fn small_graphs() {
        let k4 = MultiGraph {
            n: 4,
            edges: vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        };
        assert!(!k4.is_k4_minor_free());
        let c4 = MultiGraph {
            n: 4,
            edges: vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
        };
        assert!(c4.is_k4_minor_free());
        // octahedron
        let mut edges = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                if b != a + 3 {
                    edges.push((a, b));
                }
            }
        }
        let oct = MultiGraph { n: 6, edges };
        assert!(!oct.is_k4_minor_free());
        assert!(brute_has_k4_minor(&oct));
    }

    #[test]
    fn reduction_agrees_with_brute_force_on_maps() {
        for v in 1..=5 {
            for m in crate::enumerate::rooted_maps(v) {
                let g = MultiGraph::of_map(&m);
                assert_eq!(g.is_k4_minor_free(), !brute_has_k4_minor(&g), "{}", m);
            }
        }
    }

    #[test]
    fn k4_free_map_counts() {
        let expect = [2usize, 9, 54, 374, 2816];
        for (i, &e) in expect.iter().enumerate() {
            let c = crate::enumerate::rooted_maps(i + 1)
                .iter()
                .filter(|m| is_k4_minor_free(m))
                .count();
            assert_eq!(c, e);
        }
    }
}
