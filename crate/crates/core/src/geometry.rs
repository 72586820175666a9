//! Exact geometric kernel for the two-line strip model.
//!
//! The strip is bounded by the horizontal lines `y = 0` (bottom) and `y = 1`
//! (top). Every object spans the strip and carries a base segment with one
//! endpoint on each line. Attached segments live in the upper half-plane over
//! the line `y = 0`. All predicates are exact and treat sets as closed, so
//! boundary contact counts as intersection.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{invalid, Result};
use crate::rational::{one, zero, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of the cross product `(b - a) x (c - a)`.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    let lhs = (&b.x - &a.x) * (&c.y - &a.y);
    let rhs = (&b.y - &a.y) * (&c.x - &a.x);
    lhs.cmp(&rhs)
}

fn in_box(p: &Point, a: &Point, b: &Point) -> bool {
    let (lx, hx) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (ly, hy) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    lx <= &p.x && &p.x <= hx && ly <= &p.y && &p.y <= hy
}

/// Whether `p` lies on the closed segment `ab`.
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    orient(a, b, p) == Ordering::Equal && in_box(p, a, b)
}

fn boxes_overlap(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let max = |u: &Rational, v: &Rational| if u >= v { u.clone() } else { v.clone() };
    let min = |u: &Rational, v: &Rational| if u <= v { u.clone() } else { v.clone() };
    min(&a.x, &b.x) <= max(&c.x, &d.x)
        && min(&c.x, &d.x) <= max(&a.x, &b.x)
        && min(&a.y, &b.y) <= max(&c.y, &d.y)
        && min(&c.y, &d.y) <= max(&a.y, &b.y)
}

/// Closed segment intersection test, including touching and collinear overlap.
pub fn segments_intersect(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    if !boxes_overlap(a, b, c, d) {
        return false;
    }
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    let opposite = |s: Ordering, t: Ordering| {
        (s == Ordering::Greater && t == Ordering::Less)
            || (s == Ordering::Less && t == Ordering::Greater)
    };
    if opposite(d1, d2) && opposite(d3, d4) {
        return true;
    }
    (d1 == Ordering::Equal && in_box(a, c, d))
        || (d2 == Ordering::Equal && in_box(b, c, d))
        || (d3 == Ordering::Equal && in_box(c, a, b))
        || (d4 == Ordering::Equal && in_box(d, a, b))
}

/// The region between the two horizontal lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strip {
    pub y_bottom: Rational,
    pub y_top: Rational,
}

impl Strip {
    /// The strip used throughout the crate: bottom line `y = 0`, top line `y = 1`.
    pub fn unit() -> Self {
        Strip {
            y_bottom: zero(),
            y_top: one(),
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.y_bottom <= p.y && p.y <= self.y_top
    }
}

impl Default for Strip {
    fn default() -> Self {
        Strip::unit()
    }
}

/// A segment with one endpoint on each line of the strip.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseSegment {
    /// x-coordinate of the endpoint on the top line.
    pub x_top: Rational,
    /// x-coordinate of the endpoint on the bottom line.
    pub x_bottom: Rational,
}

impl BaseSegment {
    pub fn new(x_top: Rational, x_bottom: Rational) -> Self {
        BaseSegment { x_top, x_bottom }
    }

    pub fn top_point(&self) -> Point {
        Point::new(self.x_top.clone(), one())
    }

    pub fn bottom_point(&self) -> Point {
        Point::new(self.x_bottom.clone(), zero())
    }

    /// x-coordinate of the segment at height `y`.
    pub fn x_at(&self, y: &Rational) -> Rational {
        &self.x_bottom + (&self.x_top - &self.x_bottom) * y
    }

    /// Two spanning segments meet iff their order differs (or ties) on the lines.
    pub fn intersects(&self, other: &BaseSegment) -> bool {
        let top = self.x_top.cmp(&other.x_top);
        let bottom = self.x_bottom.cmp(&other.x_bottom);
        top != bottom || top == Ordering::Equal
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectKind {
    Convex,
    QuasiConvex,
}

impl ObjectKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ObjectKind::Convex => "convex",
            ObjectKind::QuasiConvex => "quasi_convex",
        }
    }
}

/// Position of a point relative to a closed polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// A simple polygon spanned between the two lines, with a designated base
/// segment inside it. Two-point polygons are bare segments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripObject {
    polygon: Vec<Point>,
    base: BaseSegment,
    kind: ObjectKind,
    min_x: Rational,
    max_x: Rational,
}

impl StripObject {
    /// Validates and builds an object. `polygon` lists the vertices of a closed
    /// simple polygon in either orientation.
    pub fn new(polygon: Vec<Point>, base: BaseSegment, kind: ObjectKind) -> Result<Self> {
        validate(&polygon, &base, kind)?;
        let min_x = polygon.iter().map(|p| &p.x).min().unwrap().clone();
        let max_x = polygon.iter().map(|p| &p.x).max().unwrap().clone();
        Ok(StripObject {
            polygon,
            base,
            kind,
            min_x,
            max_x,
        })
    }

    /// A bare segment from `(x_bottom, 0)` to `(x_top, 1)`; it is its own base.
    pub fn segment(x_top: Rational, x_bottom: Rational) -> Self {
        let base = BaseSegment::new(x_top, x_bottom);
        let polygon = vec![base.bottom_point(), base.top_point()];
        StripObject::new(polygon, base, ObjectKind::Convex).expect("bare segments are valid")
    }

    /// Axis-aligned slab `[x_left, x_right] x [0, 1]` with a vertical base at `base_x`.
    pub fn slab(x_left: Rational, x_right: Rational, base_x: Rational) -> Result<Self> {
        let polygon = vec![
            Point::new(x_left.clone(), zero()),
            Point::new(x_right.clone(), zero()),
            Point::new(x_right, one()),
            Point::new(x_left, one()),
        ];
        StripObject::new(polygon, BaseSegment::new(base_x.clone(), base_x), ObjectKind::Convex)
    }

    /// Convex hull of `points` (which must reach both lines) with the given base.
    pub fn convex_hull(points: &[Point], base: BaseSegment) -> Result<Self> {
        let hull = convex_hull(points);
        StripObject::new(hull, base, ObjectKind::Convex)
    }

    pub fn polygon(&self) -> &[Point] {
        &self.polygon
    }

    pub fn base(&self) -> &BaseSegment {
        &self.base
    }

    pub fn kind(&self) -> ObjectKind {
        self.kind
    }

    pub fn x_range(&self) -> (&Rational, &Rational) {
        (&self.min_x, &self.max_x)
    }

    pub fn is_bare_segment(&self) -> bool {
        self.polygon.len() == 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> + '_ {
        edges(&self.polygon)
    }

    pub fn locate(&self, p: &Point) -> Location {
        locate(&self.polygon, p)
    }
}

fn edges(polygon: &[Point]) -> impl Iterator<Item = (&Point, &Point)> + '_ {
    let n = polygon.len();
    let count = if n == 2 { 1 } else { n };
    (0..count).map(move |i| (&polygon[i], &polygon[(i + 1) % n]))
}

fn locate(polygon: &[Point], p: &Point) -> Location {
    if edges(polygon).any(|(a, b)| on_segment(p, a, b)) {
        return Location::Boundary;
    }
    if polygon.len() < 3 {
        return Location::Outside;
    }
    // Crossing number with a ray towards +x; half-open rule on y.
    let mut inside = false;
    for (a, b) in edges(polygon) {
        if (a.y > p.y) != (b.y > p.y) {
            let x = &a.x + (&p.y - &a.y) * (&b.x - &a.x) / (&b.y - &a.y);
            if p.x < x {
                inside = !inside;
            }
        }
    }
    if inside {
        Location::Inside
    } else {
        Location::Outside
    }
}

fn twice_signed_area(polygon: &[Point]) -> Rational {
    edges(polygon).fold(zero(), |acc, (a, b)| acc + (&a.x * &b.y - &b.x * &a.y))
}

fn validate(polygon: &[Point], base: &BaseSegment, kind: ObjectKind) -> Result<()> {
    let strip = Strip::unit();
    if polygon.len() < 2 {
        return Err(invalid("polygon needs at least two points"));
    }
    if let Some(p) = polygon.iter().find(|p| !strip.contains(p)) {
        return Err(invalid(format!("point {p} lies outside the strip")));
    }
    let min_y = polygon.iter().map(|p| &p.y).min().unwrap();
    let max_y = polygon.iter().map(|p| &p.y).max().unwrap();
    if *min_y != strip.y_bottom || *max_y != strip.y_top {
        return Err(invalid("polygon does not touch both lines"));
    }
    if polygon.len() == 2 {
        let (lo, hi) = if polygon[0].y < polygon[1].y {
            (&polygon[0], &polygon[1])
        } else {
            (&polygon[1], &polygon[0])
        };
        if lo.x != base.x_bottom || hi.x != base.x_top {
            return Err(invalid("a bare segment must coincide with its base"));
        }
        return Ok(());
    }
    let n = polygon.len();
    for i in 0..n {
        if polygon[i] == polygon[(i + 1) % n] {
            return Err(invalid("repeated consecutive vertex"));
        }
    }
    let edge_list: Vec<_> = edges(polygon).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = edge_list[i];
            let (c, d) = edge_list[j];
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                // Shared vertex only; reject folding back along the previous edge.
                let (shared, other_i, other_j) = if j == i + 1 { (b, a, d) } else { (a, b, c) };
                debug_assert!(shared == c || shared == d);
                if on_segment(other_i, c, d) || on_segment(other_j, a, b) {
                    return Err(invalid("polygon is not simple (overlapping edges)"));
                }
            } else if segments_intersect(a, b, c, d) {
                return Err(invalid("polygon is not simple (edges cross)"));
            }
        }
    }
    if twice_signed_area(polygon).is_zero() {
        return Err(invalid("polygon has zero area"));
    }
    if kind == ObjectKind::Convex && !is_convex(polygon) {
        return Err(invalid("polygon declared convex is not convex"));
    }
    if !segment_inside(polygon, base) {
        return Err(invalid("base segment is not contained in the polygon"));
    }
    Ok(())
}

fn is_convex(polygon: &[Point]) -> bool {
    let n = polygon.len();
    let mut sign = Ordering::Equal;
    for i in 0..n {
        let turn = orient(&polygon[i], &polygon[(i + 1) % n], &polygon[(i + 2) % n]);
        if turn == Ordering::Equal {
            continue;
        }
        if sign == Ordering::Equal {
            sign = turn;
        } else if sign != turn {
            return false;
        }
    }
    true
}

// The base is parametrised by y; split it at every height where it may touch
// the boundary and test one point per piece.
fn segment_inside(polygon: &[Point], base: &BaseSegment) -> bool {
    let mut ys: Vec<Rational> = polygon.iter().map(|p| p.y.clone()).collect();
    let slope = &base.x_top - &base.x_bottom;
    for (p, q) in edges(polygon) {
        let dx = &q.x - &p.x;
        let dy = &q.y - &p.y;
        let denom = &dx - &slope * &dy;
        if denom.is_zero() {
            continue;
        }
        let s = (&base.x_bottom + &slope * &p.y - &p.x) / denom;
        if !s.is_negative() && s <= one() {
            ys.push(&p.y + s * dy);
        }
    }
    ys.sort();
    ys.dedup();
    let at = |y: &Rational| Point::new(base.x_at(y), y.clone());
    let probes = ys
        .iter()
        .map(at)
        .chain(ys.windows(2).map(|w| at(&((&w[0] + &w[1]) / Rational::from_integer(2.into())))));
    for probe in probes {
        if locate(polygon, &probe) == Location::Outside {
            return false;
        }
    }
    true
}

/// Convex hull by monotone chain, counter-clockwise, collinear points dropped.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) != Ordering::Greater
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) != Ordering::Greater
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Closed-set intersection of two strip objects.
pub fn intersects(a: &StripObject, b: &StripObject) -> bool {
    if a.max_x < b.min_x || b.max_x < a.min_x {
        return false;
    }
    if a.base.intersects(&b.base) {
        return true;
    }
    for (p, q) in a.edges() {
        for (r, s) in b.edges() {
            if segments_intersect(p, q, r, s) {
                return true;
            }
        }
    }
    // No boundary contact: either nested or disjoint.
    a.locate(&b.polygon[0]) == Location::Inside || b.locate(&a.polygon[0]) == Location::Inside
}

/// Outcome of the left-of comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    /// The first object lies in the left component of the strip minus the second.
    Left,
    /// The first object lies to the right of the second.
    Right,
    Incomparable,
}

/// The left-of relation. Disjoint objects have disjoint bases, and disjoint
/// spanning segments are ordered the same way on both lines.
pub fn left_of(a: &StripObject, b: &StripObject) -> Order {
    if intersects(a, b) {
        return Order::Incomparable;
    }
    if a.base.x_top < b.base.x_top {
        Order::Left
    } else {
        Order::Right
    }
}

/// Something the on-line game can present: it must answer intersection queries.
pub trait Shape {
    fn intersects(&self, other: &Self) -> bool;
}

impl Shape for StripObject {
    fn intersects(&self, other: &Self) -> bool {
        intersects(self, other)
    }
}

impl Shape for AttachedSegment {
    fn intersects(&self, other: &Self) -> bool {
        intersects_attached(self, other)
    }
}

/// Top and bottom coordinates that drive the sequence indices of the strip
/// coloring. For strip objects these are the base endpoints; an attached
/// segment uses its apex and foot.
pub trait BaseKey {
    fn base_key(&self) -> (&Rational, &Rational);
}

impl BaseKey for StripObject {
    fn base_key(&self) -> (&Rational, &Rational) {
        (&self.base.x_top, &self.base.x_bottom)
    }
}

impl BaseKey for AttachedSegment {
    fn base_key(&self) -> (&Rational, &Rational) {
        (&self.apex.x, &self.foot.x)
    }
}

impl BaseKey for BaseSegment {
    fn base_key(&self) -> (&Rational, &Rational) {
        (&self.x_top, &self.x_bottom)
    }
}

/// Segment with its foot on the line `y = 0` and its apex strictly above.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AttachedSegment {
    foot: Point,
    apex: Point,
}

impl AttachedSegment {
    pub fn new(foot_x: Rational, apex: Point) -> Result<Self> {
        if !apex.y.is_positive() {
            return Err(invalid(format!("apex {apex} must lie strictly above the line")));
        }
        Ok(AttachedSegment {
            foot: Point::new(foot_x, zero()),
            apex,
        })
    }

    pub fn foot(&self) -> &Point {
        &self.foot
    }

    pub fn apex(&self) -> &Point {
        &self.apex
    }

    pub fn x_span(&self) -> (&Rational, &Rational) {
        if self.foot.x <= self.apex.x {
            (&self.foot.x, &self.apex.x)
        } else {
            (&self.apex.x, &self.foot.x)
        }
    }

    /// Height of the segment over `x`, if `x` is within its span and the
    /// segment is not vertical.
    pub fn height_at(&self, x: &Rational) -> Option<Rational> {
        let (lo, hi) = self.x_span();
        if x < lo || x > hi || self.foot.x == self.apex.x {
            return None;
        }
        Some(&self.apex.y * (x - &self.foot.x) / (&self.apex.x - &self.foot.x))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VerticalLine {
    pub x: Rational,
}

impl VerticalLine {
    pub fn new(x: Rational) -> Self {
        VerticalLine { x }
    }
}

pub fn intersects_attached(a: &AttachedSegment, b: &AttachedSegment) -> bool {
    segments_intersect(&a.foot, &a.apex, &b.foot, &b.apex)
}

/// Indices of the segments meeting the vertical line.
pub fn pierced_by(family: &[AttachedSegment], v: &VerticalLine) -> Vec<usize> {
    family
        .iter()
        .enumerate()
        .filter(|(_, s)| {
            let (lo, hi) = s.x_span();
            lo <= &v.x && &v.x <= hi
        })
        .map(|(i, _)| i)
        .collect()
}

/// Subset of three labelled points, as a bit mask (bit `i` = point `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeSet(pub u8);

impl TypeSet {
    pub const EMPTY: TypeSet = TypeSet(0);
    pub const FULL: TypeSet = TypeSet(0b111);

    pub fn singleton(i: usize) -> Self {
        TypeSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn complement(self) -> Self {
        TypeSet(!self.0 & 0b111)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

/// The points (by index) lying strictly left of the spanning segment `s`.
pub fn segment_type(s: &BaseSegment, pts: &[Point; 3]) -> Result<TypeSet> {
    let mut mask = 0u8;
    for (i, p) in pts.iter().enumerate() {
        if !(p.y.is_positive() && p.y < one()) {
            return Err(invalid(format!("point {p} is not in the open strip")));
        }
        match p.x.cmp(&s.x_at(&p.y)) {
            Ordering::Less => mask |= 1 << i,
            Ordering::Equal => return Err(invalid(format!("point {p} lies on the segment"))),
            Ordering::Greater => {}
        }
    }
    Ok(TypeSet(mask))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn p(x: i64, y: i64) -> Point {
        Point::new(int(x), int(y))
    }

    fn seg(top: i64, bottom: i64) -> StripObject {
        StripObject::segment(int(top), int(bottom))
    }

    fn slab(l: i64, r: i64) -> StripObject {
        StripObject::slab(int(l), int(r), frac(l + r, 2)).unwrap()
    }

    #[test]
    fn crossing_bare_segments_intersect() {
        assert!(intersects(&seg(0, 10), &seg(5, 5)));
        assert!(intersects(&seg(0, 10), &seg(10, 0)));
        assert!(!intersects(&seg(0, 0), &seg(1, 1)));
    }

    #[test]
    fn object_meets_itself() {
        let s = slab(0, 1);
        assert!(intersects(&s, &s));
        let t = seg(3, 4);
        assert!(intersects(&t, &t));
    }

    #[test]
    fn separated_slabs() {
        let a = slab(0, 1);
        let b = slab(2, 3);
        assert!(!intersects(&a, &b));
        assert_eq!(left_of(&a, &b), Order::Left);
        assert_eq!(left_of(&b, &a), Order::Right);
        assert_eq!(left_of(&seg(0, 10), &seg(10, 0)), Order::Incomparable);
    }

    #[test]
    fn touching_counts_as_intersection() {
        assert!(intersects(&slab(0, 1), &slab(1, 2)));
        // Bases sharing an endpoint on one line.
        assert!(intersects(&seg(0, 0), &seg(0, 5)));
    }

    #[test]
    fn nested_objects_intersect() {
        let outer = StripObject::slab(int(0), int(10), int(5)).unwrap();
        let inner = seg(4, 6);
        assert!(intersects(&outer, &inner));
        assert!(intersects(&inner, &outer));
    }

    #[test]
    fn rejects_malformed_polygons() {
        let base = BaseSegment::new(int(1), int(1));
        // Bow tie.
        let bow = vec![p(0, 0), p(2, 1), p(2, 0), p(0, 1)];
        assert!(StripObject::new(bow, base.clone(), ObjectKind::QuasiConvex).is_err());
        // Does not reach the top line.
        let low = vec![
            p(0, 0),
            p(2, 0),
            Point::new(int(2), frac(1, 2)),
            Point::new(int(0), frac(1, 2)),
        ];
        assert!(StripObject::new(low, base.clone(), ObjectKind::Convex).is_err());
        // Base outside.
        let sq = vec![p(0, 0), p(2, 0), p(2, 1), p(0, 1)];
        let far = BaseSegment::new(int(5), int(5));
        assert!(StripObject::new(sq.clone(), far, ObjectKind::Convex).is_err());
        assert!(StripObject::new(sq, base, ObjectKind::Convex).is_ok());
    }

    #[test]
    fn base_must_stay_inside_non_convex_polygon() {
        // U shape with a notch cut down from the top line.
        let u = vec![
            p(0, 0),
            p(6, 0),
            p(6, 1),
            p(4, 1),
            Point::new(int(4), frac(1, 2)),
            Point::new(int(2), frac(1, 2)),
            p(2, 1),
            p(0, 1),
        ];
        let through_notch = BaseSegment::new(int(3), int(3));
        assert!(StripObject::new(u.clone(), through_notch, ObjectKind::QuasiConvex).is_err());
        let side = BaseSegment::new(int(1), int(1));
        let obj = StripObject::new(u.clone(), side, ObjectKind::QuasiConvex).unwrap();
        assert_eq!(obj.kind(), ObjectKind::QuasiConvex);
        assert!(StripObject::new(u, BaseSegment::new(int(1), int(1)), ObjectKind::Convex).is_err());
    }

    #[test]
    fn attached_segment_examples() {
        let a = AttachedSegment::new(int(0), p(-1, 1)).unwrap();
        let b = AttachedSegment::new(int(1), p(2, 1)).unwrap();
        assert!(!intersects_attached(&a, &b));
        let c = AttachedSegment::new(int(1), p(-1, 2)).unwrap();
        let d = AttachedSegment::new(int(0), p(0, 3)).unwrap();
        assert!(intersects_attached(&c, &d));
        assert!(intersects_attached(&c, &c));
        assert!(AttachedSegment::new(int(0), p(1, 0)).is_err());
    }

    #[test]
    fn attached_crossing_point() {
        // c runs from (1,0) to (-1,2): at x = 0 its height is 1, on the line x = 0.
        let c = AttachedSegment::new(int(1), p(-1, 2)).unwrap();
        assert_eq!(c.height_at(&int(0)), Some(int(1)));
        assert!(on_segment(&p(0, 1), c.foot(), c.apex()));
    }

    #[test]
    fn piercing() {
        let family = vec![AttachedSegment::new(int(1), p(-1, 2)).unwrap()];
        assert_eq!(pierced_by(&family, &VerticalLine::new(int(0))), vec![0]);
        assert!(pierced_by(&family, &VerticalLine::new(int(5))).is_empty());
        assert_eq!(pierced_by(&family, &VerticalLine::new(int(-1))), vec![0]);
    }

    #[test]
    fn segment_type_extremes() {
        let pts = [
            Point::new(int(0), frac(1, 4)),
            Point::new(int(1), frac(1, 2)),
            Point::new(int(2), frac(3, 4)),
        ];
        let right = BaseSegment::new(int(100), int(100));
        assert_eq!(segment_type(&right, &pts).unwrap(), TypeSet::FULL);
        let left = BaseSegment::new(int(-100), int(-100));
        assert_eq!(segment_type(&left, &pts).unwrap(), TypeSet::EMPTY);
        let through = BaseSegment::new(int(1), int(1));
        assert!(segment_type(&through, &pts).is_err());
        let outside = [p(0, 0), pts[1].clone(), pts[2].clone()];
        assert!(segment_type(&right, &outside).is_err());
    }

    #[test]
    fn hull_of_square_with_interior_point() {
        let hull = convex_hull(&[p(0, 0), p(2, 0), p(2, 1), p(0, 1), Point::new(int(1), frac(1, 2))]);
        assert_eq!(hull.len(), 4);
    }
}
