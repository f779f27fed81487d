//! Splitting a diagram into loops and doubled-cycle blocks.
//!
//! Loops are stripped first (each is a Reidemeister I move). The remaining map is cut
//! along 2-edge cuts, reconnecting each side, until every piece is a cycle of doubled
//! edges. Such a piece with crossings is a twist region, i.e. a (2, q) torus link.

use crate::error::OracleError;
use crate::graph::is_k4_minor_free;
use crate::map::RotationMap;

/// Combinatorial shape of the factorization; crossings only affect the signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    pub loop_count: usize,
    /// For each block, one dart per vertex: the first of the two darts facing the
    /// previous vertex, in rotation order.
    pub chains: Vec<Vec<usize>>,
    pub components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusFactorization {
    /// Signed crossing sums, one per block, sorted.
    pub factors: Vec<i64>,
    /// Block lengths, in the same order as `factors`.
    pub lengths: Vec<usize>,
    pub loop_count: usize,
    pub components: usize,
}

/// Number of link components: cycles of "go along the edge, then straight through".
pub fn components(map: &RotationMap) -> usize {
    let n = map.darts();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for d in 0..n {
        if seen[d] {
            continue;
        }
        cycles += 1;
        let mut e = d;
        while !seen[e] {
            seen[e] = true;
            let a = map.alpha(e);
            e = map.sigma(map.sigma(a));
        }
    }
    cycles / 2
}

struct Splitter {
    alpha: Vec<usize>,
    loops: usize,
    chains: Vec<Vec<usize>>,
}

fn succ(d: usize) -> usize {
    4 * (d / 4) + (d + 1) % 4
}

impl Splitter {
    fn process(&mut self, mut piece: Vec<usize>) -> Result<(), OracleError> {
        while let Some((x, d)) = piece.iter().find_map(|&x| {
            (4 * x..4 * x + 4)
                .find(|&d| self.alpha[d] / 4 == x)
                .map(|d| (x, d))
        }) {
            self.loops += 1;
            let e = self.alpha[d];
            let rest: Vec<usize> = (4 * x..4 * x + 4).filter(|&t| t != d && t != e).collect();
            let (a, b) = (rest[0], rest[1]);
            if self.alpha[a] == b {
                if piece.len() != 1 {
                    return Err(OracleError::InvalidMap("disconnected piece".into()));
                }
                return Ok(());
            }
            let (pa, pb) = (self.alpha[a], self.alpha[b]);
            self.alpha[pa] = pb;
            self.alpha[pb] = pa;
            piece.retain(|&v| v != x);
        }
        if let Some((side_a, side_b)) = self.two_edge_cut(&piece) {
            self.process(side_a)?;
            return self.process(side_b);
        }
        let chain = self.chain(&piece)?;
        self.chains.push(chain);
        Ok(())
    }

    // finds a 2-edge cut, rewires both sides and returns their vertex sets
    fn two_edge_cut(&mut self, piece: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
        let edges: Vec<usize> = piece
            .iter()
            .flat_map(|&x| 4 * x..4 * x + 4)
            .filter(|&d| d < self.alpha[d])
            .collect();
        for (i, &e1) in edges.iter().enumerate() {
            for &e2 in &edges[i + 1..] {
                let cut =
                    |d: usize| d == e1 || d == e2 || self.alpha[d] == e1 || self.alpha[d] == e2;
                let mut side = vec![piece[0]];
                let mut k = 0;
                while k < side.len() {
                    let x = side[k];
                    for d in 4 * x..4 * x + 4 {
                        let y = self.alpha[d] / 4;
                        if !cut(d) && !side.contains(&y) {
                            side.push(y);
                        }
                    }
                    k += 1;
                }
                if side.len() == piece.len() {
                    continue;
                }
                let ends = |e: usize| {
                    if side.contains(&(e / 4)) {
                        (e, self.alpha[e])
                    } else {
                        (self.alpha[e], e)
                    }
                };
                let (a1, b1) = ends(e1);
                let (a2, b2) = ends(e2);
                self.alpha[a1] = a2;
                self.alpha[a2] = a1;
                self.alpha[b1] = b2;
                self.alpha[b2] = b1;
                let other = piece
                    .iter()
                    .copied()
                    .filter(|x| !side.contains(x))
                    .collect();
                return Some((side, other));
            }
        }
        None
    }

    // first dart of the pair facing `from` at vertex `x`
    fn facing(&self, x: usize, pair: [usize; 2]) -> Result<usize, OracleError> {
        let [u, w] = pair;
        debug_assert!(u / 4 == x && w / 4 == x);
        if succ(u) == w {
            Ok(u)
        } else if succ(w) == u {
            Ok(w)
        } else {
            Err(OracleError::UnexpectedBlock(format!(
                "parallel darts at vertex {x} are not adjacent"
            )))
        }
    }

    fn chain(&self, piece: &[usize]) -> Result<Vec<usize>, OracleError> {
        let j = piece.len();
        let x0 = piece[0];
        if j == 2 {
            let x1 = piece[1];
            if (4 * x0..4 * x0 + 4).any(|d| self.alpha[d] / 4 != x1) {
                return Err(OracleError::UnexpectedBlock(
                    "two vertices without four parallel edges".into(),
                ));
            }
            let p1 = self.facing(x1, [self.alpha[4 * x0 + 2], self.alpha[4 * x0 + 3]])?;
            return Ok(vec![4 * x0, p1]);
        }
        let mut out = Vec::with_capacity(j);
        let mut prev = self.alpha[4 * x0] / 4;
        let mut cur = x0;
        for _ in 0..j {
            let to_prev: Vec<usize> = (4 * cur..4 * cur + 4)
                .filter(|&d| self.alpha[d] / 4 == prev)
                .collect();
            let to_next: Vec<usize> = (4 * cur..4 * cur + 4)
                .filter(|&d| self.alpha[d] / 4 != prev)
                .collect();
            let next = self.alpha[to_next[0]] / 4;
            if to_prev.len() != 2 || self.alpha[to_next[1]] / 4 != next {
                return Err(OracleError::UnexpectedBlock(format!(
                    "vertex {cur} is not on a doubled cycle"
                )));
            }
            out.push(self.facing(cur, [to_prev[0], to_prev[1]])?);
            prev = cur;
            cur = next;
        }
        if cur != x0 {
            return Err(OracleError::UnexpectedBlock("cycle does not close".into()));
        }
        Ok(out)
    }
}

/// Loops, blocks and components of a planar K4-minor-free map.
pub fn block_structure(map: &RotationMap) -> Result<BlockStructure, OracleError> {
    if !map.is_planar() {
        return Err(OracleError::NotPlanar);
    }
    if !is_k4_minor_free(map) {
        return Err(OracleError::HasK4Minor);
    }
    let v = map.vertex_count();
    let orig: Vec<usize> = (0..v).flat_map(|k| map.darts_at(k)).collect();
    let mut internal = vec![0; orig.len()];
    for (i, &d) in orig.iter().enumerate() {
        internal[d] = i;
    }
    let alpha = orig.iter().map(|&d| internal[map.alpha(d)]).collect();
    let mut s = Splitter {
        alpha,
        loops: 0,
        chains: Vec::new(),
    };
    s.process((0..v).collect())?;
    let chains = s
        .chains
        .into_iter()
        .map(|c| c.into_iter().map(|d| orig[d]).collect())
        .collect();
    Ok(BlockStructure {
        loop_count: s.loops,
        chains,
        components: components(map),
    })
}

impl BlockStructure {
    /// Signs `+1` where the strand through the recorded dart is over.
    pub fn factorize(&self, over: impl Fn(usize) -> bool) -> TorusFactorization {
        let mut blocks: Vec<(i64, usize)> = self
            .chains
            .iter()
            .map(|c| {
                (
                    c.iter().map(|&d| if over(d) { 1 } else { -1 }).sum(),
                    c.len(),
                )
            })
            .collect();
        blocks.sort();
        TorusFactorization {
            factors: blocks.iter().map(|b| b.0).collect(),
            lengths: blocks.iter().map(|b| b.1).collect(),
            loop_count: self.loop_count,
            components: self.components,
        }
    }
}

pub fn factorize(map: &RotationMap) -> Result<TorusFactorization, OracleError> {
    let over = map.over_slice().ok_or(OracleError::NoCrossings)?;
    Ok(block_structure(map)?.factorize(|d| over[d]))
}

impl TorusFactorization {
    pub fn crossings(&self) -> usize {
        self.lengths.iter().sum::<usize>() + self.loop_count
    }

    /// Crossing number equals the number of vertices.
    pub fn is_minimal(&self) -> bool {
        self.loop_count == 0
            && self
                .factors
                .iter()
                .zip(&self.lengths)
                .all(|(&q, &l)| q.unsigned_abs() as usize == l && l >= 2)
    }

    pub fn is_unknot(&self) -> bool {
        self.components == 1 && self.factors.iter().all(|q| q.abs() <= 1)
    }
}

pub fn is_minimal(map: &RotationMap) -> Result<bool, OracleError> {
    factorize(map).map(|f| f.is_minimal())
}

pub fn is_unknot(map: &RotationMap) -> Result<bool, OracleError> {
    factorize(map).map(|f| f.is_unknot())
}

#[cfg(test)]
mod tests {
    use super::*;

    // cycle x0..x{j-1}, darts 0,1 face the previous vertex and 2,3 the next one
    fn doubled_cycle(j: usize) -> RotationMap {
        let mut alpha = vec![0; 4 * j];
        for k in 0..j {
            let n = (k + 1) % j;
            alpha[4 * k + 2] = 4 * n + 1;
            alpha[4 * n + 1] = 4 * k + 2;
            alpha[4 * k + 3] = 4 * n;
            alpha[4 * n] = 4 * k + 3;
        }
        RotationMap::from_alpha(alpha).unwrap()
    }

    #[test]
    fn trefoil() {
        let m = doubled_cycle(3).with_crossings(&[true; 3]).unwrap();
        let f = factorize(&m).unwrap();
        assert_eq!(
            f.factors.iter().map(|q| q.abs()).collect::<Vec<_>>(),
            vec![3]
        );
        assert_eq!(f.components, 1);
        assert!(f.is_minimal() && !f.is_unknot());
    }

    #[test]
    fn cancelling_pair_is_an_unlink() {
        let m = doubled_cycle(2);
        let f = factorize(&m.clone().with_crossings(&[true, false]).unwrap()).unwrap();
        let g = factorize(&m.with_crossings(&[true, true]).unwrap()).unwrap();
        // one of the two choices is the Hopf link, the other cancels
        let mut qs = vec![f.factors[0].abs(), g.factors[0].abs()];
        qs.sort();
        assert_eq!(qs, vec![0, 2]);
        assert_eq!(f.components, 2);
        let unlink = if f.factors[0] == 0 { f } else { g };
        assert!(!unlink.is_minimal());
        assert_eq!(unlink.crossings(), 2);
    }

    #[test]
    fn figure_eight_curve_is_a_loop() {
        for bit in [false, true] {
            let m = RotationMap::from_alpha(vec![1, 0, 3, 2])
                .unwrap()
                .with_crossings(&[bit])
                .unwrap();
            let f = factorize(&m).unwrap();
            assert!(f.factors.is_empty());
            assert_eq!((f.loop_count, f.components), (1, 1));
            assert!(f.is_unknot() && !f.is_minimal());
        }
    }

    #[test]
    fn rejects_bad_input() {
        let torus = RotationMap::from_alpha(vec![2, 3, 0, 1])
            .unwrap()
            .with_crossings(&[true])
            .unwrap();
        assert_eq!(factorize(&torus), Err(OracleError::NotPlanar));
        assert_eq!(factorize(&doubled_cycle(3)), Err(OracleError::NoCrossings));
    }

    #[test]
    fn lengths_and_loops_cover_all_vertices() {
        for v in 1..=5 {
            for m in crate::enumerate::rooted_maps(v) {
                if let Ok(s) = block_structure(&m) {
                    assert_eq!(
                        s.loop_count + s.chains.iter().map(Vec::len).sum::<usize>(),
                        v,
                        "{m}"
                    );
                }
            }
        }
    }
}
