use std::collections::BTreeSet;

use super::FiniteSemigroup;

const NAMES: [&str; 3] = ["a", "b", "c"];

/// Every semigroup of order at most 3, one table per isomorphism class.
///
/// Elements are named `a`, `b`, `c`; generators are the lexicographically
/// first minimum generating set.
pub fn small_tables() -> Vec<FiniteSemigroup> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.extend(tables_of_order(n));
    }
    out
}

/// Representatives of the isomorphism classes of order `n` (n ≤ 3), in
/// order of their canonical forms.
pub fn tables_of_order(n: usize) -> Vec<FiniteSemigroup> {
    assert!((1..=NAMES.len()).contains(&n), "corpus covers orders 1 to 3");
    let perms = permutations(n);
    let cells = n * n;
    let mut seen = BTreeSet::new();
    let mut flat = vec![0usize; cells];
    loop {
        if associative(&flat, n) {
            let canon = perms.iter().map(|p| relabel(&flat, n, p)).min().expect("nonempty");
            seen.insert(canon);
        }
        // odometer over all n^(n^2) tables
        let mut i = 0;
        while i < cells && flat[i] == n - 1 {
            flat[i] = 0;
            i += 1;
        }
        if i == cells {
            break;
        }
        flat[i] += 1;
    }
    seen.into_iter()
        .map(|flat| {
            let rows = flat.chunks(n).map(<[usize]>::to_vec).collect();
            let names = NAMES[..n].iter().map(|s| s.to_string()).collect();
            FiniteSemigroup::new(names, rows, None).expect("associative table")
        })
        .collect()
}

fn associative(t: &[usize], n: usize) -> bool {
    let m = |x: usize, y: usize| t[x * n + y];
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| m(m(x, y), z) == m(x, m(y, z)))))
}

fn relabel(t: &[usize], n: usize, p: &[usize]) -> Vec<usize> {
    let mut out = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            out[p[x] * n + p[y]] = p[t[x * n + y]];
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        assert_eq!(tables_of_order(1).len(), 1);
        assert_eq!(tables_of_order(2).len(), 5);
        assert_eq!(tables_of_order(3).len(), 24);
        assert_eq!(small_tables().len(), 30);
    }
}
