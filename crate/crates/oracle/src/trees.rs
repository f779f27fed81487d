//! Labelled trees: vertices carry multisets of signed odd twists, edges carry even twists.
//!
//! The size of a tree is the sum of absolute values of all labels. Edge labels are `2`
//! or `±s` for even `s >= 4`; vertex labels are multisets of `±q` with odd `q >= 3`,
//! possibly empty.

use std::collections::{BTreeSet, HashSet};

/// Unlabelled free trees on `k` vertices as edge lists, one per isomorphism class.
pub fn free_trees(k: usize) -> Vec<Vec<(usize, usize)>> {
    if k == 0 {
        return Vec::new();
    }
    if k == 1 {
        return vec![Vec::new()];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut code = vec![0usize; k - 2];
    loop {
        let edges = prufer_decode(&code, k);
        let shape = canonical(&edges, k, &|_| String::new(), &|_, _| String::new());
        if seen.insert(shape) {
            out.push(edges);
        }
        // next code in lexicographic order
        let mut i = 0;
        loop {
            if i == code.len() {
                return out;
            }
            code[i] += 1;
            if code[i] < k {
                break;
            }
            code[i] = 0;
            i += 1;
        }
    }
}

fn prufer_decode(code: &[usize], k: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; k];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(k - 1);
    for &c in code {
        let leaf = (0..k).find(|&x| degree[x] == 1).expect("a leaf exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..k).filter(|&x| degree[x] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn rooted_code(
    adj: &[Vec<(usize, usize)>],
    v: usize,
    parent: usize,
    vl: &dyn Fn(usize) -> String,
    el: &dyn Fn(usize, usize) -> String,
) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&(w, _)| w != parent)
        .map(|&(w, e)| format!("{}:{}", el(e, w), rooted_code(adj, w, v, vl, el)))
        .collect();
    kids.sort();
    format!("({}|{})", vl(v), kids.concat())
}

fn adjacency(edges: &[(usize, usize)], k: usize) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); k];
    for (i, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    adj
}

// smallest rooted code over all roots
fn canonical(
    edges: &[(usize, usize)],
    k: usize,
    vl: &dyn Fn(usize) -> String,
    el: &dyn Fn(usize, usize) -> String,
) -> String {
    let adj = adjacency(edges, k);
    (0..k)
        .map(|r| rooted_code(&adj, r, usize::MAX, vl, el))
        .min()
        .unwrap_or_default()
}

/// Multisets of signed odd parts `>= 3` with absolute sum `s`, each sorted.
pub fn vertex_labels(s: usize) -> Vec<Vec<i64>> {
    fn parts(s: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if s == 0 {
            out.push(acc.clone());
            return;
        }
        let mut p = max.min(s);
        if p.is_multiple_of(2) {
            p = p.saturating_sub(1);
        }
        while p >= 3 {
            acc.push(p);
            parts(s - p, p, acc, out);
            acc.pop();
            p -= 2;
        }
    }
    let mut ps = Vec::new();
    parts(s, s, &mut Vec::new(), &mut ps);
    let mut out = BTreeSet::new();
    for p in ps {
        // each part independently signed; the set removes repeats
        for mask in 0u32..(1 << p.len()) {
            let mut l: Vec<i64> = p
                .iter()
                .enumerate()
                .map(|(i, &q)| {
                    if mask >> i & 1 == 1 {
                        -(q as i64)
                    } else {
                        q as i64
                    }
                })
                .collect();
            l.sort();
            out.insert(l);
        }
    }
    out.into_iter().collect()
}

/// Edge labels of absolute value `s`.
pub fn edge_labels(s: usize) -> Vec<i64> {
    match s {
        2 => vec![2],
        s if s >= 4 && s % 2 == 0 => vec![s as i64, -(s as i64)],
        _ => Vec::new(),
    }
}

/// Isomorphism classes of labelled trees of size `n`: free trees, and trees with one
/// marked vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeCounts {
    pub size: usize,
    pub unrooted: u64,
    pub vertex_rooted: u64,
}

pub fn count_trees(n: usize) -> TreeCounts {
    let mut free = HashSet::new();
    let mut rooted = HashSet::new();
    for k in 1..=n / 2 + 1 {
        for edges in free_trees(k) {
            let adj = adjacency(&edges, k);
            let mut el = vec![0i64; k.saturating_sub(1)];
            let mut vl = vec![Vec::new(); k];
            assign(n, 0, &mut el, &mut vl, &mut |el, vl| {
                let vf = |v: usize| format!("{:?}", vl[v]);
                let ef = |e: usize, _| el[e].to_string();
                let codes: Vec<String> = (0..k)
                    .map(|r| rooted_code(&adj, r, usize::MAX, &vf, &ef))
                    .collect();
                free.insert(codes.iter().min().cloned().unwrap_or_default());
                rooted.extend(codes);
            });
        }
    }
    TreeCounts {
        size: n,
        unrooted: free.len() as u64,
        vertex_rooted: rooted.len() as u64,
    }
}

type Labelled<'a> = dyn FnMut(&[i64], &[Vec<i64>]) + 'a;

// fills edge labels first, then vertex labels, spending exactly `budget`
fn assign(
    budget: usize,
    slot: usize,
    el: &mut Vec<i64>,
    vl: &mut Vec<Vec<i64>>,
    done: &mut Labelled<'_>,
) {
    let ne = el.len();
    if slot == ne + vl.len() {
        if budget == 0 {
            done(el, vl);
        }
        return;
    }
    if slot < ne {
        // each later edge needs at least 2
        let reserve = 2 * (ne - slot - 1);
        let mut s = 2;
        while s + reserve <= budget {
            for l in edge_labels(s) {
                el[slot] = l;
                assign(budget - s, slot + 1, el, vl, done);
            }
            s += 2;
        }
        return;
    }
    let v = slot - ne;
    let last = v + 1 == vl.len();
    for s in 0..=budget {
        if last && s != budget {
            continue;
        }
        for l in vertex_labels(s) {
            vl[v] = l;
            assign(budget - s, slot + 1, el, vl, done);
        }
    }
    vl[v] = Vec::new();
}

/// Number of isomorphism classes of labelled trees of size `n`.
pub fn enumerate_t_trees(n: usize) -> u64 {
    count_trees(n).unrooted
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_tree_counts() {
        let counts: Vec<usize> = (1..=8).map(|k| free_trees(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn label_sets() {
        assert_eq!(vertex_labels(0), vec![Vec::<i64>::new()]);
        assert!(vertex_labels(1).is_empty() && vertex_labels(2).is_empty());
        assert_eq!(vertex_labels(3), vec![vec![-3], vec![3]]);
        assert_eq!(
            vertex_labels(6),
            vec![vec![-3, -3], vec![-3, 3], vec![3, 3]]
        );
        assert_eq!(edge_labels(2), vec![2]);
        assert_eq!(edge_labels(4), vec![4, -4]);
    }

    #[test]
    fn small_sizes() {
        let got: Vec<u64> = (0..=8).map(enumerate_t_trees).collect();
        assert_eq!(got, vec![1, 0, 1, 2, 3, 4, 9, 12, 26]);
    }
}
