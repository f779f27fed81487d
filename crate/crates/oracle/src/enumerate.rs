//! Exhaustive generation of rooted 4-regular planar maps.
//!
//! Darts are numbered in order of discovery: the smallest unpaired dart is glued either
//! to a later unpaired dart or to the first dart of a fresh vertex. Every rooted map
//! arises exactly once, already in canonical form.

use std::thread;

use crate::map::RotationMap;

struct Search {
    v: usize,
    alpha: Vec<usize>,
    vertices: usize,
}

impl Search {
    fn run(&mut self, out: &mut dyn FnMut(RotationMap)) {
        let Some(d) = (0..4 * self.vertices).find(|&d| self.alpha[d] == usize::MAX) else {
            if self.vertices == self.v {
                let m =
                    RotationMap::from_alpha(self.alpha.clone()).expect("generated maps are valid");
                if m.is_planar() {
                    out(m);
                }
            }
            return;
        };
        for e in d + 1..4 * self.vertices {
            if self.alpha[e] == usize::MAX {
                self.glue(d, e, out);
            }
        }
        if self.vertices < self.v {
            let e = 4 * self.vertices;
            self.vertices += 1;
            self.glue(d, e, out);
            self.vertices -= 1;
        }
    }

    fn glue(&mut self, d: usize, e: usize, out: &mut dyn FnMut(RotationMap)) {
        self.alpha[d] = e;
        self.alpha[e] = d;
        self.run(out);
        self.alpha[d] = usize::MAX;
        self.alpha[e] = usize::MAX;
    }
}

/// Calls `out` once per rooted planar 4-regular map with exactly `v` vertices.
pub fn for_each_rooted_map(v: usize, out: &mut dyn FnMut(RotationMap)) {
    if v == 0 {
        return;
    }
    let mut s = Search {
        v,
        alpha: vec![usize::MAX; 4 * v],
        vertices: 1,
    };
    s.run(out);
}

pub fn rooted_maps(v: usize) -> Vec<RotationMap> {
    let mut all = Vec::new();
    for_each_rooted_map(v, &mut |m| all.push(m));
    all
}

/// Applies `work` to every rooted map with `v` vertices on several threads and
/// returns the per-thread results; branches split on the partner of dart 0.
pub fn par_fold<T: Send>(
    v: usize,
    init: impl Fn() -> T + Sync,
    work: impl Fn(&mut T, RotationMap) + Sync,
) -> Vec<T> {
    if v == 0 {
        return Vec::new();
    }
    // partner of dart 0: another dart of vertex 0, or the first dart of vertex 1
    let firsts: Vec<usize> = if v == 1 {
        vec![1, 2, 3]
    } else {
        vec![1, 2, 3, 4]
    };
    thread::scope(|scope| {
        let handles: Vec<_> = firsts
            .into_iter()
            .map(|e| {
                let init = &init;
                let work = &work;
                scope.spawn(move || {
                    let mut acc = init();
                    let mut s = Search {
                        v,
                        alpha: vec![usize::MAX; 4 * v],
                        vertices: if e == 4 { 2 } else { 1 },
                    };
                    s.alpha[0] = e;
                    s.alpha[e] = 0;
                    s.run(&mut |m| work(&mut acc, m));
                    acc
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}
