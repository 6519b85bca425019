//! Graded isomorphism of finite diagram truncations.
//!
//! Vertices are matched level by level. At level `n` every vertex gets the
//! signature of its incoming edges, with sources translated through the
//! bijection already fixed at level `n - 1` (sorted for unordered diagrams,
//! in edge order for ordered ones). Vertices with equal signatures are
//! interchangeable at this level and are resolved by backtracking.

use std::collections::HashMap;

use crate::diagram::BratteliDiagram;
use crate::ordered::OrderedDiagram;

/// Graded isomorphism of unordered diagrams.
pub fn isomorphic(a: &BratteliDiagram, b: &BratteliDiagram) -> bool {
    let sig = |d: &BratteliDiagram, level: usize, v: usize, pi: &[usize]| {
        let edges = d.edges(level);
        let mut s: Vec<usize> = d
            .incoming(level, v)
            .into_iter()
            .map(|p| pi[edges[p].source.index])
            .collect();
        s.sort_unstable();
        s
    };
    matched(a, b) && search(a, 1, &[0], &|l, v, pi| sig(a, l, v, pi), &|l, v, pi| sig(b, l, v, pi))
}

/// Graded isomorphism of ordered diagrams: the bijections must also carry
/// the linear order of each `r^{-1}(v)` onto the corresponding one.
pub fn ordered_isomorphic(a: &OrderedDiagram, b: &OrderedDiagram) -> bool {
    let sig = |d: &OrderedDiagram, level: usize, v: usize, pi: &[usize]| {
        let edges = d.base().edges(level);
        d.ordered_incoming(level, v)
            .into_iter()
            .map(|p| pi[edges[p].source.index])
            .collect::<Vec<_>>()
    };
    matched(a.base(), b.base())
        && search(a.base(), 1, &[0], &|l, v, pi| sig(a, l, v, pi), &|l, v, pi| {
            sig(b, l, v, pi)
        })
}

fn matched(a: &BratteliDiagram, b: &BratteliDiagram) -> bool {
    a.depth() == b.depth() && (0..=a.depth()).all(|l| a.level_size(l) == b.level_size(l))
}

type Sig<'a> = &'a dyn Fn(usize, usize, &[usize]) -> Vec<usize>;

fn search(a: &BratteliDiagram, level: usize, pi_prev: &[usize], sig_a: Sig, sig_b: Sig) -> bool {
    if level > a.depth() {
        return true;
    }
    let n = a.level_size(level);
    let identity: Vec<usize> = (0..a.level_size(level - 1)).collect();
    let sa: Vec<Vec<usize>> = (0..n).map(|v| sig_a(level, v, pi_prev)).collect();
    let sb: Vec<Vec<usize>> = (0..n).map(|v| sig_b(level, v, &identity)).collect();
    let mut groups: HashMap<&[usize], Vec<usize>> = HashMap::new();
    for (v, s) in sb.iter().enumerate() {
        groups.entry(s.as_slice()).or_default().push(v);
    }
    let mut counts: HashMap<&[usize], usize> = HashMap::new();
    for s in &sa {
        *counts.entry(s.as_slice()).or_default() += 1;
    }
    if counts.len() != groups.len() || counts.iter().any(|(k, c)| groups.get(k).map(Vec::len) != Some(*c)) {
        return false;
    }
    let mut pi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    assign(a, level, 0, &sa, &groups, &mut pi, &mut used, sig_a, sig_b)
}

#[allow(clippy::too_many_arguments)]
fn assign(
    a: &BratteliDiagram,
    level: usize,
    v: usize,
    sa: &[Vec<usize>],
    groups: &HashMap<&[usize], Vec<usize>>,
    pi: &mut Vec<usize>,
    used: &mut Vec<bool>,
    sig_a: Sig,
    sig_b: Sig,
) -> bool {
    if v == sa.len() {
        return search(a, level + 1, pi, sig_a, sig_b);
    }
    for &cand in &groups[sa[v].as_slice()] {
        if used[cand] {
            continue;
        }
        used[cand] = true;
        pi[v] = cand;
        if assign(a, level, v + 1, sa, groups, pi, used, sig_a, sig_b) {
            return true;
        }
        used[cand] = false;
    }
    false
}
