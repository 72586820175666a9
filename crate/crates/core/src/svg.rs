//! SVG 1.1 drawings. Coordinates are converted to floating point only here.

use std::fmt::Write as _;

use crate::curves::CurveSystem;
use crate::geometry::{AttachedSegment, Point, StripObject, VerticalLine};
use crate::rational::{to_f64, Rational};

const WIDTH: f64 = 900.0;
const MARGIN: f64 = 30.0;

struct Canvas {
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
    height: f64,
}

impl Canvas {
    fn new<'a>(xs: impl Iterator<Item = &'a Rational>, min_y: f64, max_y: f64, height: f64) -> Self {
        let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
        for x in xs {
            let v = to_f64(x);
            min_x = min_x.min(v);
            max_x = max_x.max(v);
        }
        if !min_x.is_finite() {
            (min_x, max_x) = (0.0, 1.0);
        }
        if max_x - min_x < 1e-12 {
            min_x -= 0.5;
            max_x += 0.5;
        }
        Canvas {
            min_x,
            max_x,
            min_y,
            max_y,
            height,
        }
    }

    fn x(&self, x: f64) -> f64 {
        MARGIN + (x - self.min_x) / (self.max_x - self.min_x) * (WIDTH - 2.0 * MARGIN)
    }

    fn y(&self, y: f64) -> f64 {
        MARGIN + (self.max_y - y) / (self.max_y - self.min_y) * (self.height - 2.0 * MARGIN)
    }

    fn point(&self, p: &Point) -> (f64, f64) {
        (self.x(to_f64(&p.x)), self.y(to_f64(&p.y)))
    }

    fn open(&self) -> String {
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" height=\"{h}\" viewBox=\"0 0 {WIDTH} {h}\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
            h = self.height
        )
    }

    fn hline(&self, out: &mut String, y: f64, dashed: bool) {
        let dash = if dashed { " stroke-dasharray=\"6,4\"" } else { "" };
        writeln!(
            out,
            "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"black\" stroke-width=\"1\"{dash}/>",
            MARGIN / 2.0,
            WIDTH - MARGIN / 2.0,
            y = self.y(y)
        )
        .unwrap();
    }
}

/// Distinct hues for small color ids.
pub fn palette(id: usize) -> String {
    let hue = (id as f64 * 137.508) % 360.0;
    format!("hsl({hue:.0},65%,50%)")
}

fn points_attr(c: &Canvas, pts: &[Point]) -> String {
    pts.iter()
        .map(|p| {
            let (x, y) = c.point(p);
            format!("{x:.2},{y:.2}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Strip objects filled by color id, with their base segments dashed.
pub fn render_strip(objects: &[StripObject], colors: &[usize]) -> String {
    let c = Canvas::new(objects.iter().flat_map(|o| o.polygon().iter().map(|p| &p.x)), 0.0, 1.0, 320.0);
    let mut out = c.open();
    c.hline(&mut out, 0.0, false);
    c.hline(&mut out, 1.0, false);
    for (o, &color) in objects.iter().zip(colors) {
        let fill = palette(color);
        if o.is_bare_segment() {
            writeln!(out, "<polyline points=\"{}\" fill=\"none\" stroke=\"{fill}\" stroke-width=\"2\"/>", points_attr(&c, o.polygon())).unwrap();
        } else {
            writeln!(
                out,
                "<polygon points=\"{}\" fill=\"{fill}\" fill-opacity=\"0.35\" stroke=\"{fill}\" stroke-width=\"1\"/>",
                points_attr(&c, o.polygon())
            )
            .unwrap();
            let base = [o.base().bottom_point(), o.base().top_point()];
            writeln!(
                out,
                "<polyline points=\"{}\" fill=\"none\" stroke=\"{fill}\" stroke-width=\"1\" stroke-dasharray=\"3,3\"/>",
                points_attr(&c, &base)
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Attached segments, the witness line, and the pierced segments drawn thicker.
pub fn render_attached(segments: &[AttachedSegment], colors: &[usize], witness: Option<&VerticalLine>, pierced: &[usize]) -> String {
    let max_y = segments.iter().map(|s| to_f64(&s.apex().y)).fold(0.0, f64::max).max(1e-9);
    let c = Canvas::new(
        segments
            .iter()
            .flat_map(|s| [&s.foot().x, &s.apex().x])
            .chain(witness.map(|w| &w.x)),
        0.0,
        max_y * 1.05,
        520.0,
    );
    let mut out = c.open();
    c.hline(&mut out, 0.0, false);
    if let Some(w) = witness {
        let x = c.x(to_f64(&w.x));
        writeln!(
            out,
            "<line x1=\"{x:.2}\" y1=\"{:.2}\" x2=\"{x:.2}\" y2=\"{:.2}\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>",
            c.y(max_y * 1.05),
            c.y(0.0)
        )
        .unwrap();
    }
    for (i, (s, &color)) in segments.iter().zip(colors).enumerate() {
        let width = if pierced.contains(&i) { 3 } else { 1 };
        writeln!(
            out,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{width}\"/>",
            points_attr(&c, &[s.foot().clone(), s.apex().clone()]),
            palette(color)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// Curves of a curve system, optionally with its stored lines dashed.
pub fn render_curves(sys: &CurveSystem, show_lines: bool) -> String {
    let c = Canvas::new(sys.curves().iter().flat_map(|k| k.vertices().iter().map(|p| &p.x)), 0.0, 1.0, 600.0);
    let mut out = c.open();
    c.hline(&mut out, 0.0, false);
    c.hline(&mut out, 1.0, false);
    if show_lines {
        for y in sys.lines() {
            c.hline(&mut out, to_f64(y), true);
        }
    }
    for (i, k) in sys.curves().iter().enumerate() {
        writeln!(
            out,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>",
            points_attr(&c, k.vertices()),
            palette(i + 1)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
