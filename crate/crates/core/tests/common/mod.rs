//! Generators and brute-force oracles shared by the integration tests.
//! Nothing here calls into the library's algorithms except to build inputs.

#![allow(dead_code)]

use bratteli::{BratteliDiagram, OrderedLevels, StationaryOrderedDiagram};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn letters(k: usize) -> Vec<String> {
    (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

/// Random stationary ordered diagram on `k <= 4` symbols, words of length
/// `1..=max_word`, every symbol used as a source and as a top range.
pub fn random_stationary(rng: &mut ChaCha8Rng, k: usize, max_word: usize) -> Option<StationaryOrderedDiagram> {
    let words: Vec<Vec<usize>> = (0..k)
        .map(|_| {
            let len = rng.gen_range(1..=max_word);
            (0..len).map(|_| rng.gen_range(0..k)).collect()
        })
        .collect();
    let mut top: Vec<usize> = (0..k).collect();
    for _ in 0..rng.gen_range(0..=2) {
        top.push(rng.gen_range(0..k));
    }
    for i in (1..top.len()).rev() {
        top.swap(i, rng.gen_range(0..=i));
    }
    StationaryOrderedDiagram::new(letters(k), top, words).ok()
}

/// Random properly ordered stationary diagram, found by rejection.
pub fn random_proper(rng: &mut ChaCha8Rng, max_word: usize) -> StationaryOrderedDiagram {
    loop {
        let k = rng.gen_range(1..=4);
        if let Some(sd) = random_stationary(rng, k, max_word) {
            if sd.properly_ordered().is_yes() {
                return sd;
            }
        }
    }
}

pub fn fibonacci() -> StationaryOrderedDiagram {
    StationaryOrderedDiagram::from_words(&["a", "b"], "ab", &[("a", "ab"), ("b", "a")]).unwrap()
}

pub fn odometer() -> StationaryOrderedDiagram {
    StationaryOrderedDiagram::from_words(&["a"], "aa", &[("a", "aa")]).unwrap()
}

/// Random incidence data: `mats[n]` is `|V_{n+1}| x |V_n|`, entries `0..=max`,
/// patched so every vertex has an incoming edge and every vertex above the
/// last level an outgoing one.
pub fn random_matrices(rng: &mut ChaCha8Rng, depth: usize, max_size: usize, max: i64) -> Vec<Vec<Vec<i64>>> {
    let mut sizes = vec![1];
    sizes.extend((0..depth).map(|_| rng.gen_range(1..=max_size)));
    let mut mats = Vec::new();
    for n in 0..depth {
        let (rows, cols) = (sizes[n + 1], sizes[n]);
        let mut m: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(0..=max)).collect())
            .collect();
        for row in m.iter_mut() {
            if row.iter().all(|&x| x == 0) {
                let j = rng.gen_range(0..cols);
                row[j] = 1;
            }
        }
        for j in 0..cols {
            if m.iter().all(|r| r[j] == 0) {
                let i = rng.gen_range(0..rows);
                m[i][j] = 1;
            }
        }
        mats.push(m);
    }
    mats
}

pub fn diagram_from(mats: &[Vec<Vec<i64>>]) -> BratteliDiagram {
    let mut levels = vec![vec!["root".to_string()]];
    let mut edges = Vec::new();
    for m in mats {
        levels.push((0..m.len()).map(|i| format!("v{i}")).collect());
        let mut list = Vec::new();
        for (i, row) in m.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                for _ in 0..c {
                    list.push((j, i));
                }
            }
        }
        edges.push(list);
    }
    BratteliDiagram::from_edge_lists(levels, edges).unwrap()
}

/// Naive product `a * b`.
pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = b[0].len();
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect())
        .collect()
}

/// Every path into `v` at `level`, as `(range, ord)` pairs from level 1 down,
/// sorted with the deepest coordinate most significant.
pub fn brute_force_tower<D: OrderedLevels>(d: &D, level: usize, v: usize) -> Vec<Vec<(usize, usize)>> {
    fn extend<D: OrderedLevels>(d: &D, level: usize, v: usize) -> Vec<Vec<(usize, usize)>> {
        if level == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for k in 0..d.in_degree(level, v) {
            for mut p in extend(d, level - 1, d.in_source(level, v, k)) {
                p.push((v, k));
                out.push(p);
            }
        }
        out
    }
    let mut paths = extend(d, level, v);
    paths.sort_by(|a, b| {
        let ka: Vec<usize> = a.iter().rev().map(|e| e.1).collect();
        let kb: Vec<usize> = b.iter().rev().map(|e| e.1).collect();
        ka.cmp(&kb)
    });
    paths
}

/// Prefix of the fixed point of `σ` beginning with `start`, by rewriting.
pub fn rewrite_fixed_point(rules: &[(char, &str)], start: char, n: usize) -> String {
    let mut w = start.to_string();
    while w.len() < n {
        let next: String = w
            .chars()
            .map(|c| rules.iter().find(|r| r.0 == c).expect("rule").1)
            .collect();
        assert!(next.starts_with(&w), "not a fixed point prefix");
        w = next;
    }
    w.truncate(n);
    w
}

/// Boolean power iteration: the least `k <= n^2 - 2n + 2` with `C^k > 0`.
pub fn brute_primitive(c: &[[bool; 3]; 3]) -> Option<usize> {
    let mul = |a: &[[bool; 3]; 3], b: &[[bool; 3]; 3]| {
        let mut r = [[false; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                r[i][j] = (0..3).any(|k| a[i][k] && b[k][j]);
            }
        }
        r
    };
    let mut p = *c;
    for k in 1..=5 {
        if p.iter().all(|r| r.iter().all(|&x| x)) {
            return Some(k);
        }
        p = mul(&p, c);
    }
    None
}

/// Exact sign of `x φ + y` with `φ = (1 + √5) / 2`.
pub fn golden_sign(x: i128, y: i128) -> std::cmp::Ordering {
    use std::cmp::Ordering::*;
    // sign of x√5 + (x + 2y)
    let (a, b) = (x, x + 2 * y);
    match (a.signum(), b.signum()) {
        (0, s) | (s, 0) => s.cmp(&0),
        (1, 1) => Greater,
        (-1, -1) => Less,
        (1, -1) => (5 * a * a).cmp(&(b * b)),
        _ => (b * b).cmp(&(5 * a * a)),
    }
}
