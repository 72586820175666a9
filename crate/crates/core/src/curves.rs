//! On-line representation of a growing poset by y-monotone polylines spanning
//! the strip, where two curves cross iff their elements are incomparable.
//!
//! Alongside the curves the system keeps a set of horizontal lines such that
//! every linear extension of the poset appears as the left-to-right crossing
//! order on at least one line. A new element is drawn inside the free region
//! (right of every curve below it, left of every curve above it). Around each
//! stored line the curves are straight and do not cross within a thin tube;
//! there the new curve runs diagonally from just left of the lowest upper
//! neighbour (bottom of the tube) to just right of the highest lower neighbour
//! (top of the tube), so thin horizontal lines inside the tube see the new
//! element at every admissible position. Those lines replace the old one.
//! Between tubes the new curve hops through the free region, which is convex
//! between consecutive vertex heights of its boundary curves.

use std::collections::{BTreeSet, HashSet};

use num_traits::{Signed, Zero};

use crate::caps::Caps;
use crate::error::{invariant, Error, Result};
use crate::geometry::Point;
use crate::graph::SimpleGraph;
use crate::poset::{cocomparability_graph, linear_extensions, LinearExtension, Poset};
use crate::rational::{half, midpoint, one, simplest_between, zero, Rational};

/// Polyline from the bottom line to the top line with strictly increasing y.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolylineCurve {
    vertices: Vec<Point>,
}

impl PolylineCurve {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidInput("a curve needs at least two vertices".into()));
        }
        if vertices[0].y != zero() || vertices[vertices.len() - 1].y != one() {
            return Err(Error::InvalidInput("a curve must run from y = 0 to y = 1".into()));
        }
        if vertices.windows(2).any(|w| w[0].y >= w[1].y) {
            return Err(Error::InvalidInput("curve heights must strictly increase".into()));
        }
        Ok(PolylineCurve { vertices })
    }

    pub fn vertical(x: Rational) -> Self {
        PolylineCurve {
            vertices: vec![Point::new(x.clone(), zero()), Point::new(x, one())],
        }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Index `k` of the piece `[k, k + 1]` containing height `y` (the lower one at a vertex).
    fn piece(&self, y: &Rational) -> usize {
        let k = self.vertices.partition_point(|v| &v.y <= y);
        k.saturating_sub(1).min(self.vertices.len() - 2)
    }

    /// x-coordinate at height `y` in `[0, 1]`.
    pub fn x_at(&self, y: &Rational) -> Rational {
        let k = self.piece(y);
        let (a, b) = (&self.vertices[k], &self.vertices[k + 1]);
        &a.x + (&b.x - &a.x) * (y - &a.y) / (&b.y - &a.y)
    }

    /// dx/dy on the piece containing `y`.
    fn slope_at(&self, y: &Rational) -> Rational {
        let k = self.piece(y);
        let (a, b) = (&self.vertices[k], &self.vertices[k + 1]);
        (&b.x - &a.x) / (&b.y - &a.y)
    }

    fn has_vertex_at(&self, y: &Rational) -> bool {
        self.vertices.binary_search_by(|v| v.y.cmp(y)).is_ok()
    }

    /// Interior vertex heights strictly between `lo` and `hi`.
    fn heights_between<'a>(&'a self, lo: &'a Rational, hi: &'a Rational) -> impl Iterator<Item = &'a Rational> {
        let start = self.vertices.partition_point(|v| &v.y <= lo);
        self.vertices[start..].iter().map(|v| &v.y).take_while(move |y| *y < hi)
    }
}

/// Heights at which two curves meet. Touching counts; where the curves
/// overlap along a piece both ends of the overlap are reported.
pub fn crossing_heights(a: &PolylineCurve, b: &PolylineCurve) -> Vec<Rational> {
    let mut heights: Vec<&Rational> = a
        .vertices
        .iter()
        .chain(&b.vertices)
        .map(|v| &v.y)
        .collect();
    heights.sort();
    heights.dedup();
    let diff: Vec<Rational> = heights.iter().map(|y| a.x_at(y) - b.x_at(y)).collect();
    let mut out = Vec::new();
    for i in 0..heights.len() {
        if diff[i].is_zero() {
            out.push(heights[i].clone());
        }
        if i + 1 < heights.len() {
            let (d0, d1) = (&diff[i], &diff[i + 1]);
            if (d0.is_positive() && d1.is_negative()) || (d0.is_negative() && d1.is_positive()) {
                let t = d0 / (d0 - d1);
                out.push(heights[i] + (heights[i + 1] - heights[i]) * t);
            }
        }
    }
    out
}

pub fn curves_meet(a: &PolylineCurve, b: &PolylineCurve) -> bool {
    !crossing_heights(a, b).is_empty()
}

/// The open region strictly right of every curve in `left` and strictly left
/// of every curve in `right`.
#[derive(Debug, Clone)]
pub struct FreeRegion {
    pub down: Vec<usize>,
    pub up: Vec<usize>,
    left: Vec<PolylineCurve>,
    right: Vec<PolylineCurve>,
}

impl FreeRegion {
    /// Open interval of admissible x at height `y`; `None` means unbounded.
    pub fn bounds_at(&self, y: &Rational) -> (Option<Rational>, Option<Rational>) {
        let lo = self.left.iter().map(|c| c.x_at(y)).max();
        let hi = self.right.iter().map(|c| c.x_at(y)).min();
        (lo, hi)
    }

    pub fn contains(&self, p: &Point) -> bool {
        let (lo, hi) = self.bounds_at(&p.y);
        lo.map_or(true, |lo| lo < p.x) && hi.map_or(true, |hi| p.x < hi)
    }

    /// Heights where a boundary curve bends, strictly between `lo` and `hi`.
    fn breakpoints(&self, lo: &Rational, hi: &Rational) -> Vec<Rational> {
        let mut out: Vec<Rational> = self
            .left
            .iter()
            .chain(&self.right)
            .flat_map(|c| c.heights_between(lo, hi).cloned())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// A point of the region at height `y`, at `prefer` if that is inside.
    fn pick_at(&self, y: &Rational, prefer: &Rational) -> Result<Point> {
        let (lo, hi) = self.bounds_at(y);
        let inside = lo.as_ref().map_or(true, |lo| lo < prefer) && hi.as_ref().map_or(true, |hi| prefer < hi);
        let x = if inside {
            prefer.clone()
        } else {
            pick_between(lo.as_ref(), hi.as_ref())?
        };
        Ok(Point::new(x, y.clone()))
    }
}

/// Simplest rational in the open interval, either end possibly unbounded.
fn pick_between(lo: Option<&Rational>, hi: Option<&Rational>) -> Result<Rational> {
    match (lo, hi) {
        (Some(lo), Some(hi)) if lo >= hi => Err(invariant("free region is empty at some height")),
        (Some(lo), Some(hi)) => Ok(simplest_between(lo, hi)),
        (Some(lo), None) => Ok(lo.floor() + one()),
        (None, Some(hi)) => Ok(hi.ceil() - one()),
        (None, None) => Ok(zero()),
    }
}

/// Curves for a poset together with the lines realizing its linear extensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSystem {
    poset: Poset,
    curves: Vec<PolylineCurve>,
    lines: Vec<Rational>,
}

impl Default for CurveSystem {
    fn default() -> Self {
        CurveSystem::new()
    }
}

impl CurveSystem {
    pub fn new() -> Self {
        CurveSystem {
            poset: Poset::antichain(0),
            curves: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn curves(&self) -> &[PolylineCurve] {
        &self.curves
    }

    pub fn lines(&self) -> &[Rational] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.curves.iter().map(|c| c.vertices.len()).sum()
    }

    /// Left-to-right order of the curves on the horizontal line at `y`, or
    /// `None` if two curves meet there.
    pub fn order_at(&self, y: &Rational) -> Option<Vec<usize>> {
        let mut xs: Vec<(Rational, usize)> = self.curves.iter().map(|c| c.x_at(y)).zip(0..).collect();
        xs.sort();
        if xs.windows(2).any(|w| w[0].0 == w[1].0) {
            return None;
        }
        Some(xs.into_iter().map(|(_, i)| i).collect())
    }

    /// Free region for a new element with the given strict up- and down-sets.
    pub fn compute_free_region(&self, up: &[usize], down: &[usize]) -> Result<FreeRegion> {
        let (_, down, up) = self.poset.extended(up, down)?;
        let region = FreeRegion {
            left: down.iter().map(|&d| self.curves[d].clone()).collect(),
            right: up.iter().map(|&u| self.curves[u].clone()).collect(),
            down,
            up,
        };
        // Between bends the gap width is concave, so checking the bends suffices.
        let mut heights = region.breakpoints(&zero(), &one());
        heights.push(zero());
        heights.push(one());
        for y in &heights {
            if let (Some(lo), Some(hi)) = region.bounds_at(y) {
                if lo >= hi {
                    return Err(invariant(format!("free region is empty at height {y}")));
                }
            }
        }
        Ok(region)
    }

    /// Adds a new element (index `len()`) above `down` and below `up`.
    /// Existing curves are kept exactly as they are.
    pub fn insert_element(&self, up: &[usize], down: &[usize]) -> Result<CurveSystem> {
        let region = self.compute_free_region(up, down)?;
        let (poset, _, _) = self.poset.extended(up, down)?;
        if self.curves.is_empty() {
            return Ok(CurveSystem {
                poset,
                curves: vec![PolylineCurve::vertical(zero())],
                lines: vec![half(&one())],
            });
        }
        let mut in_down = vec![false; self.len()];
        let mut in_up = vec![false; self.len()];
        region.down.iter().for_each(|&d| in_down[d] = true);
        region.up.iter().for_each(|&u| in_up[u] = true);

        let mut diagonals: Vec<(Point, Point)> = Vec::new();
        let mut new_lines: Vec<Rational> = Vec::new();
        for (idx, line) in self.lines.iter().enumerate() {
            let (lo, hi) = self.tube(idx)?;
            let order = self
                .order_at(line)
                .ok_or_else(|| invariant(format!("curves meet on stored line {line}")))?;
            let y_p = simplest_between(&lo, line);
            let y_q = simplest_between(line, &hi);
            let xs_p: Vec<Rational> = self.curves.iter().map(|c| c.x_at(&y_p)).collect();
            let xs_q: Vec<Rational> = self.curves.iter().map(|c| c.x_at(&y_q)).collect();

            // Bottom end: just left of the lowest upper neighbour.
            let u_pos = order.iter().position(|&v| in_up[v]);
            let p_hi = u_pos.map(|i| &xs_p[order[i]]);
            let p_lo_idx = u_pos.unwrap_or(order.len()).checked_sub(1);
            let p_lo = p_lo_idx.map(|i| &xs_p[order[i]]);
            // Top end: just right of the highest lower neighbour.
            let d_pos = order.iter().rposition(|&v| in_down[v]);
            let q_lo = d_pos.map(|i| &xs_q[order[i]]);
            let q_hi_idx = d_pos.map_or(0, |i| i + 1);
            let q_hi = order.get(q_hi_idx).map(|&v| &xs_q[v]);
            let p = Point::new(pick_between(p_lo, p_hi)?, y_p.clone());
            let q = Point::new(pick_between(q_lo, q_hi)?, y_q.clone());

            // Heights where the diagonal crosses the curves strictly between the neighbours.
            let first = q_hi_idx;
            let last = u_pos.unwrap_or(order.len());
            let mut cuts = vec![y_p.clone()];
            for &v in order[first..last.max(first)].iter().rev() {
                let c = &self.curves[v];
                // Diagonal x(y) = p.x + s (y - y_p); curve x(y) = c(y_p) + t (y - y_p).
                let s = (&q.x - &p.x) / (&y_q - &y_p);
                let t = c.slope_at(line);
                let gap = &xs_p[v] - &p.x;
                let y = &y_p + gap / (&s - &t);
                cuts.push(y);
            }
            cuts.push(y_q.clone());
            if cuts.windows(2).any(|w| w[0] >= w[1]) {
                return Err(invariant(format!("diagonal crossings out of order near line {line}")));
            }
            for w in cuts.windows(2) {
                new_lines.push(simplest_between(&w[0], &w[1]));
            }
            diagonals.push((p, q));
        }

        let mut vertices = vec![region.pick_at(&zero(), &diagonals[0].0.x)?];
        for (p, q) in diagonals {
            let from = vertices.last().expect("nonempty").clone();
            for b in region.breakpoints(&from.y, &p.y) {
                vertices.push(region.pick_at(&b, &from.x)?);
            }
            vertices.push(p);
            vertices.push(q);
        }
        let from = vertices.last().expect("nonempty").clone();
        for b in region.breakpoints(&from.y, &one()) {
            vertices.push(region.pick_at(&b, &from.x)?);
        }
        vertices.push(region.pick_at(&one(), &from.x)?);
        let curve = PolylineCurve::new(vertices)?;

        let mut curves = self.curves.clone();
        curves.push(curve);
        let mut next = CurveSystem {
            poset,
            curves,
            lines: Vec::new(),
        };
        new_lines.sort();
        let mut seen = HashSet::new();
        for y in new_lines {
            let order = next
                .order_at(&y)
                .ok_or_else(|| invariant(format!("curves meet on new line {y}")))?;
            if seen.insert(order) {
                next.lines.push(y);
            }
        }
        Ok(next)
    }

    /// Open height interval around line `idx` containing no bend of any curve,
    /// no meeting of two curves and no other line's half-way point.
    fn tube(&self, idx: usize) -> Result<(Rational, Rational)> {
        let line = &self.lines[idx];
        if self.curves.iter().any(|c| c.has_vertex_at(line)) {
            return Err(invariant(format!("a curve bends on stored line {line}")));
        }
        let mut lo = idx.checked_sub(1).map_or_else(zero, |i| midpoint(&self.lines[i], line));
        let mut hi = self.lines.get(idx + 1).map_or_else(one, |next| midpoint(line, next));
        for c in &self.curves {
            let k = c.piece(line);
            lo = lo.max(c.vertices[k].y.clone());
            hi = hi.min(c.vertices[k + 1].y.clone());
        }
        let order = self
            .order_at(line)
            .ok_or_else(|| invariant(format!("curves meet on stored line {line}")))?;
        // Inside the window the curves are straight, so the nearest meeting
        // above or below is between neighbours on the line.
        for w in order.windows(2) {
            let (a, b) = (&self.curves[w[0]], &self.curves[w[1]]);
            let (sa, sb) = (a.slope_at(line), b.slope_at(line));
            if sa == sb {
                continue;
            }
            let y = line + (b.x_at(line) - a.x_at(line)) / (&sa - &sb);
            if &y > line && y < hi {
                hi = y;
            } else if &y < line && y > lo {
                lo = y;
            }
        }
        Ok((lo, hi))
    }

    /// Pairs of curves that meet.
    pub fn crossing_graph(&self) -> SimpleGraph {
        SimpleGraph::from_fn(self.len(), |i, j| curves_meet(&self.curves[i], &self.curves[j]))
    }

    /// Every left-to-right order realized by some horizontal line.
    pub fn realized_orders(&self) -> BTreeSet<Vec<usize>> {
        let mut heights: BTreeSet<Rational> = BTreeSet::new();
        heights.insert(zero());
        heights.insert(one());
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                heights.extend(crossing_heights(&self.curves[i], &self.curves[j]));
            }
        }
        let heights: Vec<Rational> = heights.into_iter().collect();
        heights
            .windows(2)
            .filter_map(|w| self.order_at(&midpoint(&w[0], &w[1])))
            .collect()
    }

    /// Whether every linear extension of the poset is the crossing order of
    /// some horizontal line, found by sweeping between all meeting heights.
    pub fn verify_star(&self, caps: &Caps) -> Result<bool> {
        let extensions = linear_extensions(&self.poset, caps)?;
        if self.is_empty() {
            return Ok(true);
        }
        let realized = self.realized_orders();
        Ok(extensions.iter().all(|LinearExtension(order)| realized.contains(order)))
    }

    /// Whether the stored lines alone realize every linear extension.
    pub fn lines_realize_extensions(&self, caps: &Caps) -> Result<bool> {
        let extensions = linear_extensions(&self.poset, caps)?;
        let on_lines: BTreeSet<Vec<usize>> = self.lines.iter().filter_map(|y| self.order_at(y)).collect();
        Ok(self.is_empty() || extensions.iter().all(|e| on_lines.contains(&e.0)))
    }

    /// Whether curves meet exactly for incomparable pairs.
    pub fn represents_poset(&self) -> bool {
        self.crossing_graph() == cocomparability_graph(&self.poset)
    }
}

/// Up- and down-sets of `order[t]` among the earlier elements `order[..t]`,
/// expressed as positions in `order`.
pub fn insertion_sets(p: &Poset, order: &[usize], t: usize) -> (Vec<usize>, Vec<usize>) {
    let v = order[t];
    let up = (0..t).filter(|&i| p.less(v, order[i])).collect();
    let down = (0..t).filter(|&i| p.less(order[i], v)).collect();
    (up, down)
}

/// Builds the curve system for `p`, inserting elements in `order`. Element
/// `order[t]` becomes curve `t`.
pub fn build(p: &Poset, order: &[usize]) -> Result<CurveSystem> {
    let mut sys = CurveSystem::new();
    for t in 0..order.len() {
        let (up, down) = insertion_sets(p, order, t);
        sys = sys.insert_element(&up, &down)?;
    }
    Ok(sys)
}

/// Like [`build`], but checks the system after every insertion: curves meet
/// exactly for incomparable pairs, earlier curves are untouched, and every
/// linear extension is realized. Returns the system and the problems found.
pub fn build_verified(p: &Poset, order: &[usize], caps: &Caps) -> Result<(CurveSystem, Vec<String>)> {
    let mut sys = CurveSystem::new();
    let mut problems = Vec::new();
    for t in 0..order.len() {
        let (up, down) = insertion_sets(p, order, t);
        let next = sys.insert_element(&up, &down)?;
        if next.curves()[..t] != *sys.curves() {
            problems.push(format!("insertion {t} modified an earlier curve"));
        }
        if !next.represents_poset() {
            problems.push(format!("after insertion {t} the crossing pattern differs from incomparability"));
        }
        if !next.verify_star(caps)? {
            problems.push(format!("after insertion {t} some linear extension is not realized"));
        }
        sys = next;
    }
    Ok((sys, problems))
}
