//! Finite posets, linear extensions, cocomparability graphs and the convex
//! representation of height-2 posets.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::caps::Caps;
use crate::error::{invariant, Error, Result};
use crate::geometry::{left_of, BaseSegment, Order, Point, StripObject};
use crate::graph::SimpleGraph;
use crate::rational::{frac, int, one, zero, Rational};

/// Strict partial order on `0..n`. Transitivity is enforced on construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    less: Vec<bool>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset")
            .field("n", &self.n)
            .field("relations", &self.relations())
            .finish()
    }
}

impl Poset {
    pub fn antichain(n: usize) -> Self {
        Poset {
            n,
            less: vec![false; n * n],
        }
    }

    /// `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        let mut p = Poset::antichain(n);
        for i in 0..n {
            for j in (i + 1)..n {
                p.set(i, j);
            }
        }
        p
    }

    /// Transitive closure of the given pairs `(a, b)` meaning `a < b`.
    /// Fails if the pairs contain a cycle.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut p = Poset::antichain(n);
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!("relation ({a}, {b}) out of range")));
            }
            p.set(a, b);
        }
        p.close();
        if (0..n).any(|i| p.less(i, i)) {
            return Err(Error::InvalidInput("relations contain a cycle".into()));
        }
        Ok(p)
    }

    /// Accepts a full relation matrix only if it already is a strict partial order.
    pub fn from_matrix(n: usize, less: Vec<bool>) -> Result<Self> {
        assert_eq!(less.len(), n * n);
        let p = Poset { n, less };
        for i in 0..n {
            if p.less(i, i) {
                return Err(invariant(format!("relation is reflexive at {i}")));
            }
            for j in 0..n {
                if p.less(i, j) && p.less(j, i) {
                    return Err(invariant(format!("relation is not antisymmetric on {i}, {j}")));
                }
                for k in 0..n {
                    if p.less(i, j) && p.less(j, k) && !p.less(i, k) {
                        return Err(invariant(format!(
                            "relation is not transitive: {i} < {j} < {k}"
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    fn set(&mut self, a: usize, b: usize) {
        self.less[a * self.n + b] = true;
    }

    fn close(&mut self) {
        let n = self.n;
        for k in 0..n {
            for i in 0..n {
                if self.less(i, k) {
                    for j in 0..n {
                        if self.less(k, j) {
                            self.set(i, j);
                        }
                    }
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[a * self.n + b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.less(a, b) || self.less(b, a)
    }

    pub fn incomparable(&self, a: usize, b: usize) -> bool {
        a != b && !self.comparable(a, b)
    }

    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.less(i, j))
            .collect()
    }

    pub fn down_set(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.less(u, v)).collect()
    }

    pub fn up_set(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.less(v, u)).collect()
    }

    pub fn is_minimal(&self, v: usize) -> bool {
        (0..self.n).all(|u| !self.less(u, v))
    }

    pub fn is_maximal(&self, v: usize) -> bool {
        (0..self.n).all(|u| !self.less(v, u))
    }

    /// Adds element `n` with the given strict up- and down-sets (closed under
    /// the order). The existing order is left untouched, so every element of
    /// the closed down-set must already be below every element of the closed
    /// up-set. Returns the new poset with the closed sets.
    pub fn extended(&self, up: &[usize], down: &[usize]) -> Result<(Poset, Vec<usize>, Vec<usize>)> {
        let n = self.n;
        if let Some(&bad) = up.iter().chain(down).find(|&&v| v >= n) {
            return Err(Error::Precondition(format!("element {bad} does not exist")));
        }
        let mut in_down = vec![false; n];
        let mut in_up = vec![false; n];
        for &d in down {
            in_down[d] = true;
            for u in 0..n {
                if self.less(u, d) {
                    in_down[u] = true;
                }
            }
        }
        for &u in up {
            in_up[u] = true;
            for w in 0..n {
                if self.less(u, w) {
                    in_up[w] = true;
                }
            }
        }
        let down: Vec<usize> = (0..n).filter(|&v| in_down[v]).collect();
        let up: Vec<usize> = (0..n).filter(|&v| in_up[v]).collect();
        for &d in &down {
            for &u in &up {
                if !self.less(d, u) {
                    return Err(Error::Precondition(format!(
                        "new element would force {d} < {u}, which is not in the current order"
                    )));
                }
            }
        }
        let mut next = Poset::antichain(n + 1);
        for (a, b) in self.relations() {
            next.set(a, b);
        }
        for &d in &down {
            next.set(d, n);
        }
        for &u in &up {
            next.set(n, u);
        }
        Ok((next, down, up))
    }

    /// The same order with elements renamed by `perm` (old `i` becomes `perm[i]`).
    pub fn relabelled(&self, perm: &[usize]) -> Poset {
        let mut p = Poset::antichain(self.n);
        for (a, b) in self.relations() {
            p.set(perm[a], perm[b]);
        }
        p
    }

    /// Restriction to `elements`, relabelled `0..elements.len()` in order.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let mut p = Poset::antichain(elements.len());
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                if self.less(a, b) {
                    p.set(i, j);
                }
            }
        }
        p
    }

    /// Random poset: each pair `i < j` of a hidden linear order is related
    /// with probability `p` before closing; labels are then shuffled.
    pub fn random<R: Rng>(n: usize, p: f64, rng: &mut R) -> Poset {
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.gen_bool(p) {
                    pairs.push((i, j));
                }
            }
        }
        let base = Poset::from_relations(n, &pairs).expect("forward pairs are acyclic");
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        base.relabelled(&perm)
    }

    /// Random poset of height at most 2.
    pub fn random_height2<R: Rng>(n: usize, p: f64, rng: &mut R) -> Poset {
        let lower = rng.gen_range(0..=n);
        let mut pairs = Vec::new();
        for i in 0..lower {
            for j in lower..n {
                if rng.gen_bool(p) {
                    pairs.push((i, j));
                }
            }
        }
        let base = Poset::from_relations(n, &pairs).expect("bipartite pairs are acyclic");
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        base.relabelled(&perm)
    }
}

/// A total order of the elements compatible with the poset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearExtension(pub Vec<usize>);

impl LinearExtension {
    pub fn respects(&self, p: &Poset) -> bool {
        if self.0.len() != p.n() {
            return false;
        }
        let mut pos = vec![usize::MAX; p.n()];
        for (i, &v) in self.0.iter().enumerate() {
            if v >= p.n() || pos[v] != usize::MAX {
                return false;
            }
            pos[v] = i;
        }
        p.relations().iter().all(|&(a, b)| pos[a] < pos[b])
    }
}

/// Every linear extension of `p`.
pub fn linear_extensions(p: &Poset, caps: &Caps) -> Result<Vec<LinearExtension>> {
    if p.n() > caps.extensions {
        return Err(Error::ResourceLimit {
            what: "linear extension enumeration",
            size: p.n(),
            cap: caps.extensions,
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(p.n());
    let mut placed = vec![false; p.n()];
    extend(p, &mut prefix, &mut placed, &mut out);
    Ok(out)
}

fn extend(p: &Poset, prefix: &mut Vec<usize>, placed: &mut [bool], out: &mut Vec<LinearExtension>) {
    if prefix.len() == p.n() {
        out.push(LinearExtension(prefix.clone()));
        return;
    }
    for v in 0..p.n() {
        if placed[v] || (0..p.n()).any(|u| !placed[u] && p.less(u, v)) {
            continue;
        }
        placed[v] = true;
        prefix.push(v);
        extend(p, prefix, placed, out);
        prefix.pop();
        placed[v] = false;
    }
}

/// Edge `ij` iff `i` and `j` are incomparable.
pub fn cocomparability_graph(p: &Poset) -> SimpleGraph {
    SimpleGraph::from_fn(p.n(), |i, j| p.incomparable(i, j))
}

/// Number of elements in a longest chain (0 for the empty poset).
pub fn height(p: &Poset) -> usize {
    let n = p.n();
    // Elements sorted by down-set size form a linear extension.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| p.down_set(v).len());
    let mut longest = vec![1usize; n];
    for (idx, &v) in order.iter().enumerate() {
        for &u in &order[..idx] {
            if p.less(u, v) {
                longest[v] = longest[v].max(longest[u] + 1);
            }
        }
    }
    longest.into_iter().max().unwrap_or(0)
}

/// The left-of poset of a family: `i < j` iff object `i` lies left of `j`.
pub fn from_family(objects: &[StripObject]) -> Result<Poset> {
    let n = objects.len();
    let mut less = vec![false; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            match left_of(&objects[i], &objects[j]) {
                Order::Left => less[i * n + j] = true,
                Order::Right => less[j * n + i] = true,
                Order::Incomparable => {}
            }
        }
    }
    Poset::from_matrix(n, less)
}

/// Convex representation of a height-2 poset together with the left-envelope
/// witness point of every maximal element.
#[derive(Debug, Clone)]
pub struct Height2Representation {
    pub objects: Vec<StripObject>,
    /// `Some(r)` for elements drawn as segments of the upper layer.
    pub witnesses: Vec<Option<Point>>,
}

/// Builds convex sets whose left-of poset is `p` under the identity labelling.
///
/// Maximal elements (isolated ones included) become pairwise crossing
/// segments tangent to the parabola `x = -y^2`; segment `i` touches it at
/// height `h_i = (i + 1) / (m + 1)`, so every segment is alone on the left
/// envelope at its own height. Each remaining element is the convex hull of a
/// vertical segment far to the left and the witness points of the maximal
/// elements it is incomparable to.
pub fn height2_convex_representation(p: &Poset) -> Result<Height2Representation> {
    if height(p) > 2 {
        return Err(Error::Precondition(format!(
            "poset has height {}, expected at most 2",
            height(p)
        )));
    }
    let n = p.n();
    let upper: Vec<usize> = (0..n).filter(|&v| p.is_maximal(v)).collect();
    let m = upper.len() as i64;
    let mut objects: Vec<Option<StripObject>> = vec![None; n];
    let mut witnesses: Vec<Option<Point>> = vec![None; n];
    let mut min_x: Option<Rational> = None;
    for (i, &v) in upper.iter().enumerate() {
        let h = frac(i as i64 + 1, m + 1);
        let x_top = &h * &h - int(2) * &h;
        let x_bottom = &h * &h;
        let lowest = if x_bottom < x_top { &x_bottom } else { &x_top };
        if min_x.as_ref().map_or(true, |mx| lowest < mx) {
            min_x = Some(lowest.clone());
        }
        witnesses[v] = Some(Point::new(-(&h * &h), h.clone()));
        objects[v] = Some(StripObject::segment(x_top, x_bottom));
    }
    let px = min_x.unwrap_or_else(zero) - int(2);
    let apex_top = Point::new(px.clone(), one());
    let apex_bottom = Point::new(px.clone(), zero());
    for v in 0..n {
        if objects[v].is_some() {
            continue;
        }
        let mut points = vec![apex_top.clone(), apex_bottom.clone()];
        points.extend(
            upper
                .iter()
                .filter(|&&y| p.incomparable(v, y))
                .map(|&y| witnesses[y].clone().expect("upper elements have witnesses")),
        );
        let base = BaseSegment::new(px.clone(), px.clone());
        let object = if points.len() == 2 {
            StripObject::segment(px.clone(), px.clone())
        } else {
            StripObject::convex_hull(&points, base)?
        };
        objects[v] = Some(object);
    }
    Ok(Height2Representation {
        objects: objects.into_iter().map(|o| o.expect("all elements placed")).collect(),
        witnesses,
    })
}

/// Every poset on `n` elements, one per isomorphism class.
pub fn all_posets_up_to_isomorphism(n: usize) -> Vec<Poset> {
    assert!(n <= 6, "exhaustive poset enumeration is meant for tiny n");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let perms = permutations(n);
    let mut seen: BTreeSet<Vec<bool>> = BTreeSet::new();
    let mut out = Vec::new();
    // Every poset has a natural labelling, so forward relations suffice.
    for mask in 0u64..(1u64 << pairs.len()) {
        let chosen: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask & (1 << b) != 0)
            .map(|(_, &pr)| pr)
            .collect();
        let p = Poset::from_relations(n, &chosen).expect("forward relations are acyclic");
        if p.relations().len() != chosen.len() {
            continue; // not transitively closed; its closure appears under another mask
        }
        let canon = perms
            .iter()
            .map(|perm| p.relabelled(perm).less)
            .min()
            .unwrap_or_default();
        if seen.insert(canon) {
            out.push(p);
        }
    }
    out
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub mod fixtures {
    use super::Poset;

    /// Element names of [`layered_types`], in index order.
    pub const LAYERED_NAMES: [&str; 12] = ["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"];

    /// A 12-element height-3 poset of dimension 3.
    ///
    /// Bottom layer `a, b, c` and top layer `j, k, l` form the standard
    /// example (`a || j`, `b || k`, `c || l`, everything else in the two
    /// layers comparable). The middle elements `d..i` realise the six
    /// nonempty proper subsets `T` of `{0, 1, 2}`: the middle element for `T`
    /// lies above bottom element `t` for `t` in `T` and below top element `t`
    /// for `t` not in `T`.
    pub fn layered_types() -> Poset {
        let bottom = [0, 1, 2];
        let top = [9, 10, 11];
        let subsets: [u8; 6] = [0b001, 0b010, 0b100, 0b011, 0b101, 0b110];
        let mut pairs = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    pairs.push((bottom[i], top[j]));
                }
            }
        }
        for (offset, mask) in subsets.iter().enumerate() {
            let mid = 3 + offset;
            for t in 0..3 {
                if mask & (1 << t) != 0 {
                    pairs.push((bottom[t], mid));
                } else {
                    pairs.push((mid, top[t]));
                }
            }
        }
        Poset::from_relations(12, &pairs).expect("fixture is acyclic")
    }

    /// Standard example `S_k`: minimal `0..k`, maximal `k..2k`, `i < k + j` iff `i != j`.
    pub fn standard_example(k: usize) -> Poset {
        let mut pairs = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    pairs.push((i, k + j));
                }
            }
        }
        Poset::from_relations(2 * k, &pairs).expect("standard example is acyclic")
    }

    /// Two disjoint 2-chains `0 < 1`, `2 < 3`.
    pub fn two_plus_two() -> Poset {
        Poset::from_relations(4, &[(0, 1), (2, 3)]).expect("acyclic")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::intersects;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    // Independent counter: dynamic programming over down-closed subsets.
    fn count_extensions(p: &Poset) -> u64 {
        let n = p.n();
        let mut ways = vec![0u64; 1 << n];
        ways[0] = 1;
        for mask in 0usize..(1 << n) {
            if ways[mask] == 0 {
                continue;
            }
            for v in 0..n {
                if mask & (1 << v) != 0 {
                    continue;
                }
                let ready = (0..n).all(|u| !p.less(u, v) || mask & (1 << u) != 0);
                if ready {
                    ways[mask | (1 << v)] += ways[mask];
                }
            }
        }
        ways[(1 << n) - 1]
    }

    fn brute_force_extensions(p: &Poset) -> usize {
        permutations(p.n())
            .into_iter()
            .filter(|perm| LinearExtension(perm.clone()).respects(p))
            .count()
    }

    #[test]
    fn extension_counts() {
        let caps = Caps::default();
        assert_eq!(linear_extensions(&Poset::antichain(3), &caps).unwrap().len(), 6);
        assert_eq!(linear_extensions(&Poset::chain(4), &caps).unwrap().len(), 1);
        let two_two = fixtures::two_plus_two();
        assert_eq!(brute_force_extensions(&two_two), 6);
        assert_eq!(linear_extensions(&two_two, &caps).unwrap().len(), 6);
        assert!(matches!(
            linear_extensions(&Poset::antichain(9), &caps),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn extension_enumeration_matches_subset_counter() {
        let caps = Caps::default();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(0..=7);
            let p = Poset::random(n, rng.gen_range(0.0..0.8), &mut rng);
            let exts = linear_extensions(&p, &caps).unwrap();
            assert_eq!(exts.len() as u64, count_extensions(&p));
            assert!(exts.iter().all(|e| e.respects(&p)));
            let distinct: BTreeSet<_> = exts.iter().collect();
            assert_eq!(distinct.len(), exts.len());
        }
    }

    #[test]
    fn cocomparability_extremes() {
        assert_eq!(cocomparability_graph(&Poset::chain(5)).edge_count(), 0);
        assert_eq!(cocomparability_graph(&Poset::antichain(5)), SimpleGraph::complete(5));
    }

    #[test]
    fn heights() {
        assert_eq!(height(&Poset::antichain(4)), 1);
        assert_eq!(height(&Poset::chain(5)), 5);
        assert_eq!(height(&Poset::antichain(0)), 0);
        assert_eq!(height(&fixtures::layered_types()), 3);
        assert_eq!(height(&fixtures::standard_example(3)), 2);
    }

    #[test]
    fn layered_fixture_shape() {
        let q = fixtures::layered_types();
        assert_eq!(q.n(), 12);
        assert!(q.incomparable(0, 9) && q.incomparable(1, 10) && q.incomparable(2, 11));
        assert!(q.less(0, 10) && q.less(0, 3) && q.less(3, 10));
    }

    #[test]
    fn from_matrix_rejects_non_transitive() {
        let mut less = vec![false; 9];
        less[1] = true; // 0 < 1
        less[5] = true; // 1 < 2
        assert!(matches!(Poset::from_matrix(3, less), Err(Error::InvariantFailure(_))));
        assert!(Poset::from_relations(2, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn from_family_simple_cases() {
        let crossing = vec![
            StripObject::segment(int(0), int(10)),
            StripObject::segment(int(5), int(5)),
            StripObject::segment(int(10), int(0)),
        ];
        assert_eq!(from_family(&crossing).unwrap(), Poset::antichain(3));
        let slabs: Vec<_> = (0..3)
            .map(|i| StripObject::slab(int(3 * i), int(3 * i + 1), int(3 * i)).unwrap())
            .collect();
        assert_eq!(from_family(&slabs).unwrap(), Poset::chain(3));
    }

    #[test]
    fn extension_respects_relabelling() {
        let p = fixtures::two_plus_two();
        let q = p.relabelled(&[3, 2, 1, 0]);
        assert!(q.less(3, 2) && q.less(1, 0));
    }

    #[test]
    fn extended_rejects_inconsistent_sets() {
        let p = Poset::antichain(2);
        assert!(p.extended(&[1], &[0]).is_err());
        let c = Poset::chain(2);
        let (next, down, up) = c.extended(&[1], &[0]).unwrap();
        assert_eq!((down, up), (vec![0], vec![1]));
        assert!(next.less(0, 2) && next.less(2, 1) && next.less(0, 1));
        assert!(p.extended(&[5], &[]).is_err());
    }

    #[test]
    fn poset_counts_up_to_isomorphism() {
        // Known counts of unlabelled posets.
        let counts: Vec<usize> = (0..=5).map(|n| all_posets_up_to_isomorphism(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63]);
    }

    fn check_representation(p: &Poset) {
        let rep = height2_convex_representation(p).unwrap();
        assert_eq!(from_family(&rep.objects).unwrap(), *p);
        for obj in &rep.objects {
            assert_eq!(obj.kind(), crate::geometry::ObjectKind::Convex);
        }
        // Left envelope: at each witness height no other upper segment is further left.
        for (v, w) in rep.witnesses.iter().enumerate() {
            let Some(r) = w else { continue };
            for (u, other) in rep.witnesses.iter().enumerate() {
                if u != v && other.is_some() {
                    assert!(rep.objects[u].base().x_at(&r.y) > r.x);
                }
            }
        }
    }

    #[test]
    fn height2_small_cases() {
        let anti = Poset::antichain(3);
        let rep = height2_convex_representation(&anti).unwrap();
        assert!(rep.objects.iter().all(|o| o.is_bare_segment()));
        for i in 0..3 {
            for j in 0..3 {
                assert!(intersects(&rep.objects[i], &rep.objects[j]));
            }
        }
        check_representation(&anti);
        check_representation(&Poset::chain(2));
        check_representation(&fixtures::standard_example(3));
        check_representation(&Poset::antichain(0));
        assert!(height2_convex_representation(&Poset::chain(3)).is_err());
    }

    #[test]
    fn height2_random_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(1..=10);
            let p = Poset::random_height2(n, rng.gen_range(0.1..0.9), &mut rng);
            check_representation(&p);
        }
    }
}
