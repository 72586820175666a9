//! Seeded random instances.
//!
//! Base endpoints are distinct integers on each line, so the sequence
//! indices never see ties. Shapes are built around the base with small
//! rational offsets. The clique number is capped by rejecting any candidate
//! that would push it over the cap.

use std::collections::HashSet;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::geometry::{
    convex_hull, intersects, intersects_attached, AttachedSegment, BaseSegment, ObjectKind, Point, StripObject,
};
use crate::graph::SimpleGraph;
use crate::instance::Instance;
use crate::oracle::clique_number;
use crate::rational::{frac, int, one, zero, Rational};

/// Candidates tried per object before giving up.
pub const MAX_RETRIES: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Bare segments (permutation graphs).
    Segments,
    /// Convex polygons of several shapes.
    Convex,
    /// Mix of convex polygons and non-convex polygons with an arm.
    QuasiConvex,
    /// Segments attached to the bottom line.
    Attached,
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "segments" => Ok(GeneratorKind::Segments),
            "convex" => Ok(GeneratorKind::Convex),
            "quasi_convex" | "quasi-convex" => Ok(GeneratorKind::QuasiConvex),
            "attached" => Ok(GeneratorKind::Attached),
            other => Err(Error::InvalidInput(format!("unknown instance kind {other:?}"))),
        }
    }
}

/// `n` objects of the given kind whose intersection graph has clique number
/// at most `omega_cap`.
pub fn generate(kind: GeneratorKind, n: usize, seed: u64, omega_cap: usize, caps: &Caps) -> Result<Instance> {
    if omega_cap == 0 && n > 0 {
        return Err(Error::GenerationFailed("clique cap 0 admits no objects".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spread = 8 * n.max(1) as i64;
    match kind {
        GeneratorKind::Attached => {
            let mut out: Vec<AttachedSegment> = Vec::with_capacity(n);
            let mut graph = Graph::default();
            for _ in 0..n {
                let s = retry(|| {
                    let c = random_attached(&mut rng, spread);
                    graph.admits(&out, &c, intersects_attached, omega_cap, caps).map(|ok| ok.then_some(c))
                })?;
                graph.add(&out, &s, intersects_attached);
                out.push(s);
            }
            Ok(Instance::Attached(out))
        }
        _ => {
            let mut out: Vec<StripObject> = Vec::with_capacity(n);
            let mut graph = Graph::default();
            let mut tops = HashSet::new();
            let mut bottoms = HashSet::new();
            for _ in 0..n {
                let o = retry(|| {
                    let c = random_object(&mut rng, kind, spread)?;
                    if tops.contains(&c.base().x_top) || bottoms.contains(&c.base().x_bottom) {
                        return Ok(None);
                    }
                    graph.admits(&out, &c, intersects, omega_cap, caps).map(|ok| ok.then_some(c))
                })?;
                tops.insert(o.base().x_top.clone());
                bottoms.insert(o.base().x_bottom.clone());
                graph.add(&out, &o, intersects);
                out.push(o);
            }
            Ok(Instance::Strip(out))
        }
    }
}

fn retry<T>(mut attempt: impl FnMut() -> Result<Option<T>>) -> Result<T> {
    for _ in 0..MAX_RETRIES {
        if let Some(v) = attempt()? {
            return Ok(v);
        }
    }
    Err(Error::GenerationFailed(format!(
        "no admissible object after {MAX_RETRIES} attempts; the clique cap may be too small"
    )))
}

/// Adjacency lists of the objects accepted so far.
#[derive(Default)]
struct Graph {
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    fn neighbors_of<O>(&self, accepted: &[O], candidate: &O, meet: fn(&O, &O) -> bool) -> Vec<usize> {
        (0..accepted.len()).filter(|&i| meet(&accepted[i], candidate)).collect()
    }

    fn admits<O>(&self, accepted: &[O], candidate: &O, meet: fn(&O, &O) -> bool, cap: usize, caps: &Caps) -> Result<bool> {
        let nb = self.neighbors_of(accepted, candidate, meet);
        if nb.len() < cap {
            return Ok(true);
        }
        let local = SimpleGraph::from_fn(nb.len(), |a, b| self.neighbors[nb[b]].contains(&nb[a]));
        Ok(clique_number(&local, caps)? < cap)
    }

    fn add<O>(&mut self, accepted: &[O], object: &O, meet: fn(&O, &O) -> bool) {
        let nb = self.neighbors_of(accepted, object, meet);
        for &i in &nb {
            self.neighbors[i].push(accepted.len());
        }
        self.neighbors.push(nb);
    }
}

/// Random quarter-integer in `[0, max]`.
fn quarter(rng: &mut ChaCha8Rng, max: i64) -> Rational {
    frac(rng.gen_range(0..=4 * max), 4)
}

fn random_base(rng: &mut ChaCha8Rng, spread: i64) -> BaseSegment {
    let top = rng.gen_range(0..=spread);
    let bottom = top + rng.gen_range(-12..=12);
    BaseSegment::new(int(top), int(bottom))
}

fn random_object(rng: &mut ChaCha8Rng, kind: GeneratorKind, spread: i64) -> Result<StripObject> {
    let base = random_base(rng, spread);
    let (t, b) = (base.x_top.clone(), base.x_bottom.clone());
    let shape = match kind {
        GeneratorKind::Segments => 0,
        GeneratorKind::Convex => rng.gen_range(0..5),
        _ => rng.gen_range(0..7),
    };
    match shape {
        0 => Ok(StripObject::segment(t, b)),
        1 => {
            // Trapezoid, possibly a parallelogram or rectangle-like slab.
            let (a1, a2, b1, b2) = (quarter(rng, 3), quarter(rng, 3), quarter(rng, 3), quarter(rng, 3));
            convex_from(
                vec![
                    Point::new(&b - a1, zero()),
                    Point::new(&b + a2, zero()),
                    Point::new(&t + b2, one()),
                    Point::new(&t - b1, one()),
                ],
                base,
            )
        }
        2 => {
            // Triangle with its apex on one line.
            let (w1, w2) = (quarter(rng, 4) + frac(1, 4), quarter(rng, 4));
            let pts = if rng.gen_bool(0.5) {
                vec![Point::new(&b - w1, zero()), Point::new(&b + w2, zero()), base.top_point()]
            } else {
                vec![Point::new(&t - w1, one()), Point::new(&t + w2, one()), base.bottom_point()]
            };
            convex_from(pts, base)
        }
        3 | 4 => {
            // Hull of the base and a few points near it.
            let mut pts = vec![base.top_point(), base.bottom_point()];
            for _ in 0..rng.gen_range(1..=3) {
                let y = frac(rng.gen_range(1..16), 16);
                let dx = quarter(rng, 4) - int(2);
                pts.push(Point::new(base.x_at(&y) + dx, y));
            }
            convex_from(pts, base)
        }
        _ => armed(rng, base),
    }
}

fn convex_from(points: Vec<Point>, base: BaseSegment) -> Result<StripObject> {
    let hull = convex_hull(&points);
    if hull.len() == 2 {
        return Ok(StripObject::segment(base.x_top, base.x_bottom));
    }
    StripObject::new(hull, base, ObjectKind::Convex)
}

/// Thin band around the base with a horizontal rectangular arm sticking out.
fn armed(rng: &mut ChaCha8Rng, base: BaseSegment) -> Result<StripObject> {
    let e = frac(rng.gen_range(1..=4), 4);
    let y1 = frac(rng.gen_range(1..8), 16);
    let y2 = &y1 + frac(rng.gen_range(1..8), 16);
    let reach = quarter(rng, 6) + one();
    let (x1, x2) = (base.x_at(&y1), base.x_at(&y2));
    let right = rng.gen_bool(0.5);
    let polygon = if right {
        let outer = x1.clone().max(x2.clone()) + &e + reach;
        vec![
            Point::new(&base.x_bottom - &e, zero()),
            Point::new(&base.x_bottom + &e, zero()),
            Point::new(&x1 + &e, y1.clone()),
            Point::new(outer.clone(), y1.clone()),
            Point::new(outer, y2.clone()),
            Point::new(&x2 + &e, y2.clone()),
            Point::new(&base.x_top + &e, one()),
            Point::new(&base.x_top - &e, one()),
        ]
    } else {
        let outer = x1.clone().min(x2.clone()) - &e - reach;
        vec![
            Point::new(&base.x_bottom - &e, zero()),
            Point::new(&base.x_bottom + &e, zero()),
            Point::new(&base.x_top + &e, one()),
            Point::new(&base.x_top - &e, one()),
            Point::new(&x2 - &e, y2.clone()),
            Point::new(outer.clone(), y2.clone()),
            Point::new(outer, y1.clone()),
            Point::new(&x1 - &e, y1.clone()),
        ]
    };
    StripObject::new(polygon, base, ObjectKind::QuasiConvex)
}

fn random_attached(rng: &mut ChaCha8Rng, spread: i64) -> AttachedSegment {
    let foot = int(rng.gen_range(0..=spread));
    let apex_x = &foot + quarter(rng, 24) - int(12);
    let apex_y = quarter(rng, 8) + frac(1, 4);
    AttachedSegment::new(foot, Point::new(apex_x, apex_y)).expect("apex is above the line")
}
