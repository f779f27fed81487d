//! Rotation systems for 4-regular maps: darts, a vertex rotation and an edge involution.

use std::collections::VecDeque;
use std::fmt;

use crate::error::OracleError;

/// A rooted 4-regular map, optionally with over/under information at each vertex.
///
/// Dart `d` leaves vertex `vertex_of(d)`; `sigma` turns counter-clockwise around a vertex
/// and `alpha` pairs the two darts of an edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotationMap {
    sigma: Vec<usize>,
    alpha: Vec<usize>,
    vertex: Vec<usize>,
    vertex_count: usize,
    root: usize,
    /// `over[d]` is true when `d` lies on the overcrossing strand of its vertex.
    over: Option<Vec<bool>>,
}

impl RotationMap {
    /// Builds and validates a map from explicit permutations.
    pub fn new(sigma: Vec<usize>, alpha: Vec<usize>, root: usize) -> Result<Self, OracleError> {
        let n = sigma.len();
        if n == 0 || alpha.len() != n || root >= n {
            return Err(OracleError::InvalidMap(
                "dart count mismatch or bad root".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || seen[s] {
                return Err(OracleError::InvalidMap("sigma is not a permutation".into()));
            }
            seen[s] = true;
        }
        for d in 0..n {
            let a = alpha[d];
            if a >= n || a == d || alpha[a] != d {
                return Err(OracleError::InvalidMap(format!(
                    "alpha is not a fixed-point-free involution at {d}"
                )));
            }
        }
        let mut vertex = vec![usize::MAX; n];
        let mut vc = 0;
        for d in 0..n {
            if vertex[d] != usize::MAX {
                continue;
            }
            let mut e = d;
            let mut len = 0;
            loop {
                vertex[e] = vc;
                len += 1;
                e = sigma[e];
                if e == d {
                    break;
                }
            }
            if len != 4 {
                return Err(OracleError::InvalidMap(format!("vertex of degree {len}")));
            }
            vc += 1;
        }
        let m = RotationMap {
            sigma,
            alpha,
            vertex,
            vertex_count: vc,
            root,
            over: None,
        };
        if !m.is_connected() {
            return Err(OracleError::InvalidMap("map is not connected".into()));
        }
        Ok(m)
    }

    /// Map whose vertex `k` owns darts `4k..4k+3` in counter-clockwise order, rooted at dart 0.
    pub fn from_alpha(alpha: Vec<usize>) -> Result<Self, OracleError> {
        if !alpha.len().is_multiple_of(4) {
            return Err(OracleError::InvalidMap(
                "dart count is not a multiple of 4".into(),
            ));
        }
        let sigma = (0..alpha.len())
            .map(|d| 4 * (d / 4) + (d + 1) % 4)
            .collect();
        RotationMap::new(sigma, alpha, 0)
    }

    pub fn darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn sigma(&self, d: usize) -> usize {
        self.sigma[d]
    }

    pub fn alpha(&self, d: usize) -> usize {
        self.alpha[d]
    }

    pub fn alpha_slice(&self) -> &[usize] {
        &self.alpha
    }

    pub fn vertex_of(&self, d: usize) -> usize {
        self.vertex[d]
    }

    /// Darts of vertex `v` in rotation order, starting from its smallest dart.
    pub fn darts_at(&self, v: usize) -> [usize; 4] {
        let d0 = (0..self.darts())
            .find(|&d| self.vertex[d] == v)
            .expect("vertex exists");
        let d1 = self.sigma[d0];
        let d2 = self.sigma[d1];
        [d0, d1, d2, self.sigma[d2]]
    }

    /// Sets the crossing at each vertex: bit `true` puts the strand through the vertex's
    /// smallest dart on top.
    pub fn with_crossings(mut self, bits: &[bool]) -> Result<Self, OracleError> {
        if bits.len() != self.vertex_count {
            return Err(OracleError::InvalidMap(
                "one crossing bit per vertex expected".into(),
            ));
        }
        let mut over = vec![false; self.darts()];
        for v in 0..self.vertex_count {
            let [d0, d1, d2, d3] = self.darts_at(v);
            let (a, b) = if bits[v] { (d0, d2) } else { (d1, d3) };
            over[a] = true;
            over[b] = true;
        }
        self.over = Some(over);
        Ok(self)
    }

    /// Crossing bits in the convention of [`with_crossings`](Self::with_crossings).
    pub fn crossing_bits(&self) -> Option<Vec<bool>> {
        let over = self.over.as_ref()?;
        Some(
            (0..self.vertex_count)
                .map(|v| over[self.darts_at(v)[0]])
                .collect(),
        )
    }

    pub fn has_crossings(&self) -> bool {
        self.over.is_some()
    }

    pub fn is_over(&self, d: usize) -> Option<bool> {
        self.over.as_ref().map(|o| o[d])
    }

    pub fn over_slice(&self) -> Option<&[bool]> {
        self.over.as_deref()
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([self.vertex[0]]);
        seen[self.vertex[0]] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for d in 0..self.darts() {
                if self.vertex[d] == v {
                    let w = self.vertex[self.alpha[d]];
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        count == self.vertex_count
    }

    /// Number of faces: cycles of `sigma . alpha`.
    pub fn face_count(&self) -> usize {
        let n = self.darts();
        let mut seen = vec![false; n];
        let mut faces = 0;
        for d in 0..n {
            if seen[d] {
                continue;
            }
            faces += 1;
            let mut e = d;
            while !seen[e] {
                seen[e] = true;
                e = self.sigma[self.alpha[e]];
            }
        }
        faces
    }

    /// Euler genus `(2 - v + e - f) / 2`.
    pub fn genus(&self) -> usize {
        let v = self.vertex_count as isize;
        let e = (self.darts() / 2) as isize;
        let f = self.face_count() as isize;
        ((2 - v + e - f) / 2) as usize
    }

    pub fn is_planar(&self) -> bool {
        self.genus() == 0
    }

    /// Edges as dart pairs `(d, alpha d)` with `d < alpha d`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.darts())
            .filter(|&d| d < self.alpha[d])
            .map(|d| (d, self.alpha[d]))
            .collect()
    }

    // darts in breadth-first discovery order from `root`, and the inverse labelling
    fn bfs_order(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.darts();
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut start = Some(root);
        let mut i = 0;
        loop {
            if let Some(s) = start.take() {
                let mut e = s;
                for _ in 0..4 {
                    label[e] = order.len();
                    order.push(e);
                    e = self.sigma[e];
                }
            }
            if i == order.len() {
                break;
            }
            let a = self.alpha[order[i]];
            if label[a] == usize::MAX {
                start = Some(a);
            }
            i += 1;
        }
        (order, label)
    }

    /// Edge involution after relabelling darts in breadth-first order from `root`.
    ///
    /// Two rooted maps are isomorphic exactly when their codes agree; maps produced by
    /// [`crate::enumerate`] are already in this form.
    pub fn canonical_code(&self, root: usize) -> Vec<usize> {
        let (order, label) = self.bfs_order(root);
        order.iter().map(|&d| label[self.alpha[d]]).collect()
    }

    /// Same map rooted at another dart, relabelled canonically, crossings carried along.
    pub fn reroot(&self, root: usize) -> RotationMap {
        let (order, label) = self.bfs_order(root);
        let code = order.iter().map(|&d| label[self.alpha[d]]).collect();
        let mut m = RotationMap::from_alpha(code).expect("relabelling keeps validity");
        if let Some(over) = &self.over {
            m.over = Some(order.iter().map(|&d| over[d]).collect());
        }
        m
    }

    /// Text form `alpha[,alpha...][;bits]` for maps in block form rooted at dart 0.
    pub fn encode(&self) -> String {
        let a: Vec<String> = self.alpha.iter().map(|x| x.to_string()).collect();
        let mut s = a.join(",");
        if let Some(bits) = self.crossing_bits() {
            s.push(';');
            s.extend(bits.iter().map(|&b| if b { '1' } else { '0' }));
        }
        s
    }

    /// Parses the output of [`encode`](Self::encode).
    pub fn decode(text: &str) -> Result<RotationMap, OracleError> {
        let text = text.trim();
        let (a, bits) = match text.split_once(';') {
            Some((a, b)) => (a, Some(b)),
            None => (text, None),
        };
        let alpha = a
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| OracleError::Decode(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if alpha.len() > 4 * 64 {
            return Err(OracleError::Decode("too many darts".into()));
        }
        let m = RotationMap::from_alpha(alpha)?;
        match bits {
            None => Ok(m),
            Some(b) => {
                let bits = b
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(OracleError::Decode(format!("bad crossing bit {c:?}"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                m.with_crossings(&bits)
            }
        }
    }
}

impl fmt::Display for RotationMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}
