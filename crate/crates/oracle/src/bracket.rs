//! Kauffman bracket by summing over all states, used as an independent check on the
//! factorization.

use std::collections::BTreeMap;

use crate::error::OracleError;
use crate::map::RotationMap;

/// Laurent polynomial in `A`, exponent to coefficient.
pub type Laurent = BTreeMap<i64, i64>;

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let n = p[y];
        p[y] = r;
        y = n;
    }
    r
}

fn mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (i, x) in a {
        for (j, y) in b {
            *out.entry(i + j).or_default() += x * y;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `<D>` normalised so that the crossingless circle is 1.
pub fn bracket(map: &RotationMap) -> Result<Laurent, OracleError> {
    map.over_slice().ok_or(OracleError::NoCrossings)?;
    let v = map.vertex_count();
    let n = map.darts();
    // rotation order at each vertex, starting from an over dart
    let corners: Vec<[usize; 4]> = (0..v)
        .map(|k| {
            let mut c = map.darts_at(k);
            if map.is_over(c[0]) != Some(true) {
                c.rotate_left(1);
            }
            c
        })
        .collect();
    let loop_poly: Laurent = [(2, -1), (-2, -1)].into_iter().collect();
    let mut powers = vec![Laurent::from([(0, 1)])];
    for _ in 0..=v {
        let next = mul(powers.last().unwrap(), &loop_poly);
        powers.push(next);
    }
    let mut total = Laurent::new();
    for state in 0u64..(1 << v) {
        let mut p: Vec<usize> = (0..n).collect();
        for d in 0..n {
            let (a, b) = (find(&mut p, d), find(&mut p, map.alpha(d)));
            p[a] = b;
        }
        let mut a_count = 0i64;
        for (k, c) in corners.iter().enumerate() {
            // A-smoothing joins the regions swept counter-clockwise by the over strand
            let pairs = if state >> k & 1 == 1 {
                a_count += 1;
                [(c[1], c[2]), (c[3], c[0])]
            } else {
                [(c[0], c[1]), (c[2], c[3])]
            };
            for (x, y) in pairs {
                let (a, b) = (find(&mut p, x), find(&mut p, y));
                p[a] = b;
            }
        }
        let loops = (0..n).filter(|&d| find(&mut p, d) == d).count();
        let exp = a_count - (v as i64 - a_count);
        for (e, c) in &powers[loops - 1] {
            *total.entry(e + exp).or_default() += c;
        }
    }
    total.retain(|_, c| *c != 0);
    Ok(total)
}

/// Difference between the highest and lowest exponent.
pub fn span(poly: &Laurent) -> i64 {
    match (poly.keys().next(), poly.keys().next_back()) {
        (Some(lo), Some(hi)) => hi - lo,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::factorize;

    #[test]
    fn curl_is_a_monomial() {
        let m = RotationMap::from_alpha(vec![1, 0, 3, 2])
            .unwrap()
            .with_crossings(&[true])
            .unwrap();
        let b = bracket(&m).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b.values().next().unwrap().abs(), 1);
    }

    #[test]
    fn bracket_agrees_with_factorization() {
        for v in 1..=4 {
            for m in crate::enumerate::rooted_maps(v) {
                if !crate::graph::is_k4_minor_free(&m) {
                    continue;
                }
                for bits in 0u32..(1 << v) {
                    let bits: Vec<bool> = (0..v).map(|k| bits >> k & 1 == 1).collect();
                    let d = m.clone().with_crossings(&bits).unwrap();
                    let f = factorize(&d).unwrap();
                    let b = bracket(&d).unwrap();
                    assert_eq!(f.is_minimal(), span(&b) == 4 * v as i64, "{d}");
                    assert_eq!(f.is_unknot(), f.components == 1 && b.len() == 1, "{d}");
                }
            }
        }
    }
}
