//! Exhaustive counts of rooted diagrams.

use crate::enumerate::par_fold;
use crate::factor::block_structure;
use crate::graph::is_k4_minor_free;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DiagramCounts {
    pub vertices: usize,
    /// Rooted planar 4-regular maps.
    pub maps: u64,
    pub k4_free: u64,
    /// K4-free maps times crossing choices.
    pub diagrams: u64,
    pub minimal: u64,
    pub unknot: u64,
}

impl DiagramCounts {
    fn merge(mut self, o: DiagramCounts) -> DiagramCounts {
        self.maps += o.maps;
        self.k4_free += o.k4_free;
        self.diagrams += o.diagrams;
        self.minimal += o.minimal;
        self.unknot += o.unknot;
        self
    }
}

/// Counts all rooted diagrams with `v` crossings, over every crossing assignment.
pub fn count_diagrams(v: usize) -> DiagramCounts {
    let parts = par_fold(
        v,
        || DiagramCounts {
            vertices: v,
            ..Default::default()
        },
        |acc, m| {
            acc.maps += 1;
            if !is_k4_minor_free(&m) {
                return;
            }
            acc.k4_free += 1;
            let s = block_structure(&m).expect("K4-free planar maps factorize");
            // position parity of every dart at its vertex decides which strand a bit lifts
            let mut even = vec![false; m.darts()];
            for k in 0..v {
                let ds = m.darts_at(k);
                even[ds[0]] = true;
                even[ds[2]] = true;
            }
            for bits in 0u64..(1 << v) {
                let f = s.factorize(|d| (bits >> m.vertex_of(d) & 1 == 1) == even[d]);
                acc.diagrams += 1;
                acc.minimal += f.is_minimal() as u64;
                acc.unknot += f.is_unknot() as u64;
            }
        },
    );
    parts.into_iter().fold(
        DiagramCounts {
            vertices: v,
            ..Default::default()
        },
        DiagramCounts::merge,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let expect = [
            (2, 2, 4, 0, 4),
            (9, 9, 36, 2, 32),
            (54, 54, 432, 4, 332),
            (378, 374, 5984, 20, 3968),
        ];
        for (i, e) in expect.into_iter().enumerate() {
            let c = count_diagrams(i + 1);
            assert_eq!(
                (c.maps, c.k4_free, c.diagrams, c.minimal, c.unknot),
                e,
                "v = {}",
                i + 1
            );
        }
    }
}

/// Unrooted K4-free maps with `v` vertices and how many have a nontrivial automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub vertices: usize,
    pub unrooted: u64,
    pub symmetric: u64,
}

impl SymmetryReport {
    pub fn fraction(&self) -> f64 {
        if self.unrooted == 0 {
            0.0
        } else {
            self.symmetric as f64 / self.unrooted as f64
        }
    }
}

pub fn symmetry_report(v: usize) -> SymmetryReport {
    let mut classes = std::collections::HashMap::new();
    crate::enumerate::for_each_rooted_map(v, &mut |m| {
        if !is_k4_minor_free(&m) {
            return;
        }
        let codes: Vec<Vec<usize>> = (0..m.darts()).map(|r| m.canonical_code(r)).collect();
        let min = codes.iter().min().cloned().unwrap_or_default();
        let aut = codes.iter().filter(|c| **c == min).count();
        classes.insert(min, aut);
    });
    SymmetryReport {
        vertices: v,
        unrooted: classes.len() as u64,
        symmetric: classes.values().filter(|&&a| a > 1).count() as u64,
    }
}
