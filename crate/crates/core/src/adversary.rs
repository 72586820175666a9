//! Adaptive presenter that forces any on-line algorithm to use `k` colors on
//! segments attached to the line `y = 0`, while keeping the family
//! triangle-free.
//!
//! The strategy for `k` runs the strategy for `k - 1` twice: once in the given
//! region, and once in a thin box just right of the first witness line and
//! below every segment that line pierces. A final segment `d` then starts
//! between the two witness lines, climbs over the second batch of pierced
//! segments and crosses the first witness line underneath the first batch.
//! Either the two batches already carry `k` colors between them (second
//! witness), or they carry the same `k - 1` colors and `d` must use a new
//! one (first witness).
//!
//! Geometry bookkeeping: for a strategy of depth `k` in a region of width `W`,
//! every endpoint is at least `rho(k) * W` away from the region's sides, and
//! the nearest endpoint on either side of the witness line is at least
//! `rho(k) * W` away, where `rho(1) = 1/4` and `rho(k) = rho(k - 1)^2 / 8`.
//! That lower bound sizes the thin box so `d` clears it.

use std::collections::BTreeSet;

use crate::caps::Caps;
use crate::engine::{Game, OnlineColorer, Transcript};
use crate::error::{invariant, Error, Result};
use crate::geometry::{intersects_attached, pierced_by, AttachedSegment, Point, VerticalLine};
use crate::graph::SimpleGraph;
use crate::oracle::has_triangle;
use crate::rational::{frac, half, int, one, zero, Rational};

/// Box `[x_left, x_right] x [0, y_top]` whose bottom side lies on the line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub x_left: Rational,
    pub x_right: Rational,
    pub y_top: Rational,
}

impl Region {
    pub fn new(x_left: Rational, x_right: Rational, y_top: Rational) -> Result<Self> {
        if x_left >= x_right || y_top <= zero() {
            return Err(Error::Precondition(format!(
                "degenerate region [{x_left}, {x_right}] x [0, {y_top}]"
            )));
        }
        Ok(Region { x_left, x_right, y_top })
    }

    pub fn width(&self) -> Rational {
        &self.x_right - &self.x_left
    }

    /// Whether the segment lies strictly inside (the foot on the bottom side is allowed).
    pub fn holds(&self, s: &AttachedSegment) -> bool {
        let (lo, hi) = s.x_span();
        lo > &self.x_left && hi < &self.x_right && s.apex().y < self.y_top
    }
}

impl Default for Region {
    fn default() -> Self {
        Region {
            x_left: zero(),
            x_right: one(),
            y_top: one(),
        }
    }
}

/// Gap ratio guaranteed by the strategy of depth `k`.
pub fn rho(k: usize) -> Rational {
    let mut r = frac(1, 4);
    for _ in 1..k {
        r = &r * &r / int(8);
    }
    r
}

/// Result of a full adversary run.
#[derive(Debug, Clone)]
pub struct AdversaryOutcome<C> {
    pub k: usize,
    pub region: Region,
    /// Every presented segment, in presentation order.
    pub family: Vec<AttachedSegment>,
    /// Color the algorithm gave each segment.
    pub colors: Vec<C>,
    pub witness: VerticalLine,
    /// Indices into `family` of the segments meeting the witness line.
    pub pierced: Vec<usize>,
    pub colors_on_pierced: BTreeSet<C>,
}

/// A thin box next to a witness line, with the data the final segment needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subregion {
    pub region: Region,
    /// Lowest height of a pierced segment over `[witness - left_reach, region.x_right]`.
    pub clearance: Rational,
    /// How far left of the witness the final segment may reach.
    pub left_reach: Rational,
}

fn endpoints_x(family: &[AttachedSegment]) -> impl Iterator<Item = &Rational> {
    family.iter().flat_map(|s| [&s.foot().x, &s.apex().x])
}

/// Picks the box for the second recursive call.
///
/// `depth` is the depth of the strategy that will run inside the box; it
/// fixes the box height so that the final segment can pass over everything
/// that strategy leaves left of its witness.
pub fn choose_subregion(
    family: &[AttachedSegment],
    witness: &VerticalLine,
    region: &Region,
    depth: usize,
) -> Result<Subregion> {
    let a = &witness.x;
    if endpoints_x(family).any(|x| x == a) {
        return Err(Error::Precondition("an endpoint lies on the witness line".into()));
    }
    let right = endpoints_x(family)
        .filter(|x| *x > a)
        .min()
        .unwrap_or(&region.x_right);
    let left = endpoints_x(family)
        .filter(|x| *x < a)
        .max()
        .unwrap_or(&region.x_left);
    let delta = half(&(right - a));
    let left_reach = half(&(a - left)).min(delta.clone());
    let pierced = pierced_by(family, witness);
    if pierced.is_empty() {
        return Err(Error::Precondition("witness line pierces no segment".into()));
    }
    let x_lo = a - &left_reach;
    let x_hi = a + &delta;
    let mut clearance: Option<Rational> = None;
    for &i in &pierced {
        for x in [&x_lo, &x_hi] {
            let h = family[i]
                .height_at(x)
                .ok_or_else(|| invariant("pierced segment does not span the clearance window"))?;
            if clearance.as_ref().map_or(true, |c| &h < c) {
                clearance = Some(h);
            }
        }
    }
    let clearance = clearance.expect("pierced set is nonempty");
    let height = rho(depth) * &clearance / int(16);
    Ok(Subregion {
        region: Region::new(a.clone(), x_hi, height)?,
        clearance,
        left_reach,
    })
}

/// The segment that separates the two cases: foot between the witness lines,
/// crossing every segment pierced by `witness2` and passing under everything
/// pierced by `witness1`.
pub fn final_segment(
    witness1: &VerticalLine,
    sub: &Subregion,
    inner: &[AttachedSegment],
    witness2: &VerticalLine,
) -> Result<AttachedSegment> {
    let a = &witness1.x;
    let v2 = &witness2.x;
    let left = endpoints_x(inner).filter(|x| *x < v2).max().unwrap_or(a).max(a);
    let gap = v2 - left;
    if gap <= zero() {
        return Err(invariant("second witness does not lie right of the first"));
    }
    let foot = v2 - gap / int(4);
    let apex = Point::new(a - &sub.left_reach, half(&sub.clearance));
    AttachedSegment::new(foot, apex)
}

struct Built {
    members: Vec<usize>,
    witness: VerticalLine,
}

fn present<A: OnlineColorer<AttachedSegment>>(
    game: &mut Game<AttachedSegment, A>,
    s: AttachedSegment,
) -> Result<usize> {
    game.present(s)?;
    let t = game.transcript();
    if let Some(&(earlier, later)) = t.conflicts.first() {
        return Err(Error::ImproperColoring { earlier, later });
    }
    Ok(t.len() - 1)
}

fn strategy<A: OnlineColorer<AttachedSegment>>(
    game: &mut Game<AttachedSegment, A>,
    k: usize,
    region: &Region,
) -> Result<Built> {
    if k == 1 {
        let w = region.width();
        let foot = &region.x_left + frac(3, 4) * &w;
        let apex = Point::new(&region.x_left + frac(1, 4) * &w, half(&region.y_top));
        let index = present(game, AttachedSegment::new(foot, apex)?)?;
        return Ok(Built {
            members: vec![index],
            witness: VerticalLine::new(&region.x_left + half(&w)),
        });
    }
    let first = strategy(game, k - 1, region)?;
    let family: Vec<AttachedSegment> = first
        .members
        .iter()
        .map(|&i| game.transcript().objects[i].clone())
        .collect();
    let sub = choose_subregion(&family, &first.witness, region, k - 1)?;
    let second = strategy(game, k - 1, &sub.region)?;
    let inner: Vec<AttachedSegment> = second
        .members
        .iter()
        .map(|&i| game.transcript().objects[i].clone())
        .collect();
    let d = final_segment(&first.witness, &sub, &inner, &second.witness)?;

    let objects = &game.transcript().objects;
    let v1: Vec<usize> = pierced_by(&family, &first.witness)
        .into_iter()
        .map(|i| first.members[i])
        .collect();
    let v2: Vec<usize> = pierced_by(&inner, &second.witness)
        .into_iter()
        .map(|i| second.members[i])
        .collect();
    let mut hits: Vec<usize> = first
        .members
        .iter()
        .chain(&second.members)
        .copied()
        .filter(|&i| intersects_attached(&d, &objects[i]))
        .collect();
    hits.sort_unstable();
    let mut expected = v2.clone();
    expected.sort_unstable();
    if hits != expected || !region.holds(&d) {
        return Err(invariant(format!(
            "final segment of depth {k} meets {hits:?}, expected exactly {expected:?}"
        )));
    }
    let d_index = present(game, d)?;

    let colors = &game.transcript().colors;
    let union: BTreeSet<_> = v1.iter().chain(&v2).map(|&i| colors[i].clone()).collect();
    let witness = if union.len() >= k {
        second.witness
    } else {
        first.witness
    };
    let mut members = first.members;
    members.extend(second.members);
    members.push(d_index);
    Ok(Built { members, witness })
}

/// Plays the strategy of depth `k` against `algorithm` inside `region`.
pub fn run_adversary<A: OnlineColorer<AttachedSegment>>(
    k: usize,
    algorithm: A,
    region: &Region,
    caps: &Caps,
) -> Result<(AdversaryOutcome<A::Color>, Transcript<AttachedSegment, A::Color>)> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    Region::new(region.x_left.clone(), region.x_right.clone(), region.y_top.clone())?;
    let mut game = Game::new(algorithm, *caps);
    let built = strategy(&mut game, k, region)?;
    let (transcript, _) = game.finish();
    debug_assert_eq!(built.members.len(), transcript.len());
    let pierced = pierced_by(&transcript.objects, &built.witness);
    let colors_on_pierced = pierced.iter().map(|&i| transcript.colors[i].clone()).collect();
    let outcome = AdversaryOutcome {
        k,
        region: region.clone(),
        family: transcript.objects.clone(),
        colors: transcript.colors.clone(),
        witness: built.witness,
        pierced,
        colors_on_pierced,
    };
    Ok((outcome, transcript))
}

/// Independent check of everything the strategy promises. Returns a list of
/// violations (empty when the outcome is valid).
pub fn check_outcome<C: Ord + Clone>(outcome: &AdversaryOutcome<C>) -> Vec<String> {
    let mut problems = Vec::new();
    let family = &outcome.family;
    let expected = (1usize << outcome.k) - 1;
    if family.len() != expected {
        problems.push(format!("{} segments, expected {expected}", family.len()));
    }
    if family.iter().any(|s| !outcome.region.holds(s)) {
        problems.push("a segment leaves the region".into());
    }
    let g = SimpleGraph::from_fn(family.len(), |i, j| intersects_attached(&family[i], &family[j]));
    if has_triangle(&g) {
        problems.push("three segments pairwise intersect".into());
    }
    for (i, j) in g_edges(&g) {
        if outcome.colors[i] == outcome.colors[j] {
            problems.push(format!("segments {i} and {j} intersect and share a color"));
        }
    }
    let pierced = pierced_by(family, &outcome.witness);
    if pierced != outcome.pierced {
        problems.push("recorded pierced set differs from the recomputed one".into());
    }
    for (a, &i) in pierced.iter().enumerate() {
        if family[i].foot().x <= outcome.witness.x {
            problems.push(format!("segment {i} has its foot left of the witness"));
        }
        for &j in &pierced[a + 1..] {
            if g.has_edge(i, j) {
                problems.push(format!("pierced segments {i} and {j} intersect"));
            }
        }
    }
    let colors: BTreeSet<&C> = pierced.iter().map(|&i| &outcome.colors[i]).collect();
    if colors.len() < outcome.k {
        problems.push(format!("only {} colors on the pierced set", colors.len()));
    }
    problems
}

fn g_edges(g: &SimpleGraph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..g.n() {
        for j in g.neighbors(i).filter(|&j| j > i) {
            out.push((i, j));
        }
    }
    out
}
