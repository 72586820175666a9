//! Exhaustive ground truth used by the checkers and the tests.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::geometry::BaseKey;
use crate::graph::SimpleGraph;

type Bits = u128;
const MAX_BITS: usize = Bits::BITS as usize;

fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_BITS);
    if size > cap {
        return Err(Error::ResourceLimit { what, size, cap });
    }
    Ok(())
}

fn bit_rows(g: &SimpleGraph) -> Vec<Bits> {
    (0..g.n())
        .map(|v| g.neighbors(v).fold(0, |acc, u| acc | (1 << u)))
        .collect()
}

/// Size of a maximum clique.
pub fn clique_number(g: &SimpleGraph, caps: &Caps) -> Result<usize> {
    check_cap("clique search", g.n(), caps.clique)?;
    let rows = bit_rows(g);
    let all: Bits = if g.n() == MAX_BITS { Bits::MAX } else { (1 << g.n()) - 1 };
    let mut best = 0;
    expand(&rows, all, 0, &mut best);
    Ok(best)
}

// Branch and bound with a greedy colouring bound on the candidate set.
fn expand(rows: &[Bits], candidates: Bits, size: usize, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    let mut order = Vec::new();
    let mut uncolored = candidates;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut available = uncolored;
        while available != 0 {
            let v = available.trailing_zeros() as usize;
            available &= !(1 << v) & !rows[v];
            uncolored &= !(1 << v);
            order.push((v, color));
        }
    }
    let mut candidates = candidates;
    for &(v, bound) in order.iter().rev() {
        if size + bound <= *best {
            return;
        }
        expand(rows, candidates & rows[v], size + 1, best);
        candidates &= !(1 << v);
    }
}

/// Exact chromatic number.
pub fn chromatic_number(g: &SimpleGraph, caps: &Caps) -> Result<usize> {
    check_cap("chromatic number search", g.n(), caps.chromatic)?;
    if g.n() == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let lower = clique_number(g, &Caps { clique: g.n(), ..*caps })?;
    for k in lower.max(1)..=g.n() {
        let mut colors = vec![0usize; g.n()];
        if colorable(g, &order, 0, k, &mut colors) {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

fn colorable(g: &SimpleGraph, order: &[usize], idx: usize, k: usize, colors: &mut [usize]) -> bool {
    let Some(&v) = order.get(idx) else {
        return true;
    };
    // Colours are introduced in order, which removes colour-permutation symmetry.
    let used_max = order[..idx].iter().map(|&u| colors[u]).max().unwrap_or(0);
    for c in 1..=k.min(used_max + 1) {
        if g.neighbors(v).all(|u| colors[u] != c) {
            colors[v] = c;
            if colorable(g, order, idx + 1, k, colors) {
                return true;
            }
            colors[v] = 0;
        }
    }
    false
}

/// Whether some `2t` vertices induce exactly `K_{t,t}`.
pub fn has_induced_ktt(g: &SimpleGraph, t: usize, caps: &Caps) -> Result<bool> {
    check_cap("induced K_{t,t} search", g.n(), caps.ktt)?;
    if t == 0 {
        return Ok(true);
    }
    let rows = bit_rows(g);
    let all: Bits = if g.n() == MAX_BITS { Bits::MAX } else { (1 << g.n()) - 1 };
    // Side A: independent, listed in increasing order; side B: an independent
    // t-subset of the common neighbourhood of A.
    Ok(side_a(&rows, t, all, all, 0))
}

fn side_a(rows: &[Bits], t: usize, allowed: Bits, common: Bits, chosen: usize) -> bool {
    if chosen == t {
        return independent_subset(rows, t, common);
    }
    if (allowed.count_ones() as usize) < t - chosen || (common.count_ones() as usize) < t {
        return false;
    }
    let mut allowed = allowed;
    while allowed != 0 {
        let v = allowed.trailing_zeros() as usize;
        allowed &= !(1 << v);
        let next_allowed = allowed & !rows[v];
        if side_a(rows, t, next_allowed, common & rows[v], chosen + 1) {
            return true;
        }
    }
    false
}

fn independent_subset(rows: &[Bits], t: usize, pool: Bits) -> bool {
    if t == 0 {
        return true;
    }
    if (pool.count_ones() as usize) < t {
        return false;
    }
    let mut pool = pool;
    while pool != 0 {
        let v = pool.trailing_zeros() as usize;
        pool &= !(1 << v);
        if independent_subset(rows, t - 1, pool & !rows[v]) {
            return true;
        }
    }
    false
}

/// Which monotone sequences to measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceMode {
    /// Top coordinates non-decreasing, bottom coordinates non-increasing.
    Alpha,
    /// Top coordinates non-increasing, bottom coordinates non-decreasing.
    Beta,
}

/// Length of a longest sequence starting with `v` drawn from `v` and
/// `earlier`, by enumerating every subset of `earlier`.
///
/// A set can be arranged into such a sequence iff its members are pairwise
/// comparable in the coordinate order, and it starts with `v` iff `v` is
/// below all of them.
pub fn longest_sequence<O: BaseKey>(v: &O, earlier: &[O], mode: SequenceMode, caps: &Caps) -> Result<usize> {
    check_cap("longest sequence enumeration", earlier.len(), caps.sequence.min(24))?;
    let precedes = |a: (&_, &_), b: (&_, &_)| match mode {
        SequenceMode::Alpha => a.0 <= b.0 && a.1 >= b.1,
        SequenceMode::Beta => a.0 >= b.0 && a.1 <= b.1,
    };
    let vk = v.base_key();
    let keys: Vec<_> = earlier.iter().map(|o| o.base_key()).collect();
    let m = keys.len();
    let mut best = 1;
    for mask in 0u32..(1u32 << m) {
        let members: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        if members.len() < best {
            continue;
        }
        let starts = members.iter().all(|&i| precedes(vk, keys[i]));
        let chain = members.iter().enumerate().all(|(a, &i)| {
            members[a + 1..]
                .iter()
                .all(|&j| precedes(keys[i], keys[j]) || precedes(keys[j], keys[i]))
        });
        if starts && chain {
            best = members.len() + 1;
        }
    }
    Ok(best)
}

/// Pairs of adjacent vertices sharing a color.
pub fn conflicts<C: PartialEq>(g: &SimpleGraph, colors: &[C]) -> Vec<(usize, usize)> {
    assert_eq!(g.n(), colors.len());
    let mut out = Vec::new();
    for i in 0..g.n() {
        for j in (i + 1)..g.n() {
            if g.has_edge(i, j) && colors[i] == colors[j] {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn is_proper<C: PartialEq>(g: &SimpleGraph, colors: &[C]) -> bool {
    conflicts(g, colors).is_empty()
}

/// Whether some three vertices are pairwise adjacent; plain triple loop.
pub fn has_triangle(g: &SimpleGraph) -> bool {
    let n = g.n();
    (0..n).any(|a| {
        ((a + 1)..n).any(|b| g.has_edge(a, b) && ((b + 1)..n).any(|c| g.has_edge(a, c) && g.has_edge(b, c)))
    })
}
