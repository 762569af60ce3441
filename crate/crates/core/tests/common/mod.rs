//! Naive reference implementations used as oracles.
#![allow(dead_code)]

/// All monochromatic `(a, b, c)` with `a <= b`, `a + b = c`, colouring
/// indexed from 1.
pub fn naive_triples(colouring: &[usize]) -> Vec<(usize, usize, usize)> {
    let n = colouring.len();
    let col = |x: usize| colouring[x - 1];
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a..=n {
            let c = a + b;
            if c <= n && col(a) == col(b) && col(b) == col(c) {
                out.push((a, b, c));
            }
        }
    }
    out
}

pub fn naive_is_schur(colouring: &[usize]) -> bool {
    naive_triples(colouring).is_empty()
}

pub fn naive_mod_sum_free(set: &[usize], m: usize) -> bool {
    for &a in set {
        for &b in set {
            for &c in set {
                if a + b == c || a + b == c + m {
                    return false;
                }
            }
        }
    }
    true
}

pub fn naive_sum_free(set: &[usize]) -> bool {
    set.iter()
        .all(|&a| set.iter().all(|&b| !set.contains(&(a + b))))
}

/// Every colouring of `[1, n]` with colours `1..=k`, lexicographic.
pub fn all_colourings(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (k as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        let mut v = vec![0; n];
        for slot in v.iter_mut() {
            *slot = (code % k as u64) as usize + 1;
            code /= k as u64;
        }
        v
    })
}

/// Whether some Schur colouring of `[1, n]` using all `k` colours has
/// `x` and `n + 1 - x` coloured alike for every `x` not paired with an
/// exception.
pub fn naive_exists(n: usize, k: usize, symmetric: bool, exceptions: &[usize]) -> bool {
    all_colourings(n, k).any(|c| {
        naive_is_schur(&c)
            && (1..=k).all(|col| c.contains(&col))
            && (!symmetric
                || (1..=n).all(|x| {
                    let m = n + 1 - x;
                    exceptions.contains(&x) || exceptions.contains(&m) || c[x - 1] == c[m - 1]
                }))
    })
}

/// Canonical relabelling: colours renumbered by first occurrence.
pub fn canonical(colouring: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    colouring
        .iter()
        .map(|&c| {
            let next = map.len() + 1;
            *map.entry(c).or_insert(next)
        })
        .collect()
}
