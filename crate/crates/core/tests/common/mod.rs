//! Brute-force oracles that share no code with the library's canonical
//! labelling: plain permutation search over explicit edge lists.

#![allow(dead_code)]

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    // colex order: (0,1), (0,2), (1,2), (0,3), ...
    let mut out = Vec::new();
    for v in 1..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
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

/// Image of a pair bitset under a vertex permutation.
pub fn relabel(n: usize, bits: u64, perm: &[usize]) -> u64 {
    let ps = pairs(n);
    let mut out = 0u64;
    for (b, &(u, v)) in ps.iter().enumerate() {
        if bits >> b & 1 == 1 {
            let (a, c) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            let idx = ps.iter().position(|&p| p == (a, c)).unwrap();
            out |= 1 << idx;
        }
    }
    out
}

pub fn isomorphic(n: usize, a: u64, b: u64) -> bool {
    a.count_ones() == b.count_ones() && permutations(n).iter().any(|p| relabel(n, a, p) == b)
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Union-find over all labelled graphs on `n` vertices, merging each graph
/// with its images under every permutation. Returns the class count per edge
/// count.
pub fn class_counts_by_orbits(n: usize) -> Vec<usize> {
    let total = n * (n - 1) / 2;
    let size = 1usize << total;
    let mut parent: Vec<usize> = (0..size).collect();
    let perms = permutations(n);
    // pair-position tables per permutation
    let ps = pairs(n);
    let tables: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            ps.iter()
                .map(|&(u, v)| {
                    let (a, c) = (p[u].min(p[v]), p[u].max(p[v]));
                    ps.iter().position(|&q| q == (a, c)).unwrap()
                })
                .collect()
        })
        .collect();
    for g in 0..size {
        for t in &tables {
            let mut img = 0usize;
            for (b, &to) in t.iter().enumerate() {
                if g >> b & 1 == 1 {
                    img |= 1 << to;
                }
            }
            let (x, y) = (find(&mut parent, g), find(&mut parent, img));
            if x != y {
                parent[x] = y;
            }
        }
    }
    let mut counts = vec![0; total + 1];
    for g in 0..size {
        if find(&mut parent, g) == g {
            counts[g.count_ones() as usize] += 1;
        }
    }
    counts
}

pub fn binom(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    (0..b).fold(1, |acc, t| acc * (a - t) / (t + 1))
}
