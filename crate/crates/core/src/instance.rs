//! Line-oriented text formats: instances, posets, transcripts and reports.
//!
//! Coordinates are always written as exact `p/q` rationals. Blank lines and
//! lines starting with `#` are ignored by the parsers.

use std::fmt::Write as _;

use crate::engine::Transcript;
use crate::error::{Error, Result};
use crate::geometry::{AttachedSegment, BaseSegment, ObjectKind, Point, StripObject};
use crate::poset::Poset;
use crate::rational::{format as fmt_q, parse as parse_q, Rational};
use crate::stripcolor::{flatten, TripleColor};

pub const INSTANCE_HEADER: &str = "stripcolor-instance v1";
pub const POSET_HEADER: &str = "poset v1";
pub const TRANSCRIPT_HEADER: &str = "stripcolor-transcript v1";

/// Objects in presentation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Strip(Vec<StripObject>),
    Attached(Vec<AttachedSegment>),
}

impl Instance {
    pub fn len(&self) -> usize {
        match self {
            Instance::Strip(v) => v.len(),
            Instance::Attached(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Instance::Strip(_) => "strip",
            Instance::Attached(_) => "attached",
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{INSTANCE_HEADER}").unwrap();
        writeln!(out, "kind {}", self.kind_name()).unwrap();
        writeln!(out, "n {}", self.len()).unwrap();
        match self {
            Instance::Strip(objects) => {
                for o in objects {
                    write!(
                        out,
                        "object {} base {} {} polygon",
                        o.kind().as_str(),
                        fmt_q(&o.base().x_top),
                        fmt_q(&o.base().x_bottom)
                    )
                    .unwrap();
                    for p in o.polygon() {
                        write!(out, " {}", point_text(p)).unwrap();
                    }
                    out.push('\n');
                }
            }
            Instance::Attached(segments) => {
                for s in segments {
                    writeln!(out, "segment foot {} apex {}", fmt_q(&s.foot().x), point_text(s.apex())).unwrap();
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Instance> {
        let mut lines = content_lines(text);
        expect_header(&mut lines, INSTANCE_HEADER)?;
        let (ln, kind_line) = lines.next().ok_or_else(|| parse_err(0, "missing kind line"))?;
        let kind = match kind_line.split_whitespace().collect::<Vec<_>>()[..] {
            ["kind", k] => k.to_string(),
            _ => return Err(parse_err(ln, "expected `kind strip` or `kind attached`")),
        };
        let (ln, n_line) = lines.next().ok_or_else(|| parse_err(ln, "missing count line"))?;
        let n = parse_count(ln, n_line)?;
        let instance = match kind.as_str() {
            "strip" => {
                let mut objects = Vec::with_capacity(n);
                for (ln, line) in lines.by_ref() {
                    objects.push(parse_object(ln, line)?);
                }
                Instance::Strip(objects)
            }
            "attached" => {
                let mut segments = Vec::with_capacity(n);
                for (ln, line) in lines.by_ref() {
                    segments.push(parse_segment(ln, line)?);
                }
                Instance::Attached(segments)
            }
            other => return Err(parse_err(ln, &format!("unknown kind {other:?}"))),
        };
        if instance.len() != n {
            return Err(parse_err(0, &format!("header announces {n} records, found {}", instance.len())));
        }
        Ok(instance)
    }
}

fn point_text(p: &Point) -> String {
    format!("{},{}", fmt_q(&p.x), fmt_q(&p.y))
}

fn parse_err(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn expect_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, header: &str) -> Result<()> {
    match lines.next() {
        Some((_, l)) if l == header => Ok(()),
        Some((ln, l)) => Err(parse_err(ln, &format!("expected header {header:?}, found {l:?}"))),
        None => Err(parse_err(0, "empty input")),
    }
}

fn parse_count(ln: usize, line: &str) -> Result<usize> {
    match line.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", v] => v.parse().map_err(|_| parse_err(ln, "bad count")),
        _ => Err(parse_err(ln, "expected `n <count>`")),
    }
}

fn rational_at(ln: usize, s: &str) -> Result<Rational> {
    parse_q(s).map_err(|e| parse_err(ln, &e.to_string()))
}

fn point_at(ln: usize, s: &str) -> Result<Point> {
    let (x, y) = s.split_once(',').ok_or_else(|| parse_err(ln, &format!("bad point {s:?}")))?;
    Ok(Point::new(rational_at(ln, x)?, rational_at(ln, y)?))
}

fn parse_object(ln: usize, line: &str) -> Result<StripObject> {
    let words: Vec<&str> = line.split_whitespace().collect();
    if words.len() < 7 || words[0] != "object" || words[2] != "base" || words[5] != "polygon" {
        return Err(parse_err(ln, "expected `object <kind> base <top> <bottom> polygon <x,y>...`"));
    }
    let kind = match words[1] {
        "convex" => ObjectKind::Convex,
        "quasi_convex" => ObjectKind::QuasiConvex,
        other => return Err(parse_err(ln, &format!("unknown object kind {other:?}"))),
    };
    let base = BaseSegment::new(rational_at(ln, words[3])?, rational_at(ln, words[4])?);
    let polygon = words[6..].iter().map(|w| point_at(ln, w)).collect::<Result<Vec<_>>>()?;
    StripObject::new(polygon, base, kind).map_err(|e| parse_err(ln, &e.to_string()))
}

fn parse_segment(ln: usize, line: &str) -> Result<AttachedSegment> {
    match line.split_whitespace().collect::<Vec<_>>()[..] {
        ["segment", "foot", foot, "apex", apex] => {
            AttachedSegment::new(rational_at(ln, foot)?, point_at(ln, apex)?).map_err(|e| parse_err(ln, &e.to_string()))
        }
        _ => Err(parse_err(ln, "expected `segment foot <x> apex <x,y>`")),
    }
}

pub fn poset_to_text(p: &Poset) -> String {
    let mut out = format!("{POSET_HEADER}\nn {}\n", p.n());
    for (a, b) in p.relations() {
        writeln!(out, "less {a} {b}").unwrap();
    }
    out
}

/// Reads a poset; the listed relations are closed transitively.
pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, POSET_HEADER)?;
    let (ln, n_line) = lines.next().ok_or_else(|| parse_err(0, "missing count line"))?;
    let n = parse_count(ln, n_line)?;
    let mut pairs = Vec::new();
    for (ln, line) in lines {
        match line.split_whitespace().collect::<Vec<_>>()[..] {
            ["less", a, b] => {
                let a: usize = a.parse().map_err(|_| parse_err(ln, "bad element"))?;
                let b: usize = b.parse().map_err(|_| parse_err(ln, "bad element"))?;
                pairs.push((a, b));
            }
            _ => return Err(parse_err(ln, "expected `less <i> <j>`")),
        }
    }
    Poset::from_relations(n, &pairs)
}

/// Transcript with integer colors.
pub fn transcript_to_text<O>(t: &Transcript<O, usize>) -> String {
    let mut out = format!("{TRANSCRIPT_HEADER}\nalgorithm {}\nn {}\n", t.algorithm, t.len());
    for i in 0..t.len() {
        writeln!(out, "step {i} color {} omega {}", t.colors[i], t.omega_running[i]).unwrap();
    }
    writeln!(out, "proper {}", t.proper).unwrap();
    out
}

/// Transcript with triple colors; each step carries the flattened id and the triple.
pub fn triple_transcript_to_text<O>(t: &Transcript<O, TripleColor>) -> String {
    let ids = flatten(&t.colors);
    let mut out = format!("{TRANSCRIPT_HEADER}\nalgorithm {}\nn {}\n", t.algorithm, t.len());
    for i in 0..t.len() {
        let c = &t.colors[i];
        writeln!(
            out,
            "step {i} color {} omega {} triple {},{},{}",
            ids[i], t.omega_running[i], c.alpha, c.beta, c.gamma
        )
        .unwrap();
    }
    writeln!(out, "proper {}", t.proper).unwrap();
    out
}

/// One row of an experiment report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub seed: u64,
    pub n: usize,
    pub omega: usize,
    pub algorithm: String,
    pub colors_used: usize,
    /// Proven bound on the colors used, when the algorithm has one.
    pub bound: Option<usize>,
    pub proper: bool,
}

impl ReportRow {
    /// Whether the row respects its bound (vacuous without one).
    pub fn within_bound(&self) -> bool {
        self.bound.map_or(true, |b| self.colors_used <= b)
    }
}

pub const REPORT_COLUMNS: [&str; 7] = ["seed", "n", "omega", "algorithm", "colors_used", "bound", "proper"];

pub fn report_to_tsv(rows: &[ReportRow]) -> String {
    let mut out = REPORT_COLUMNS.join("\t");
    out.push('\n');
    for r in rows {
        let bound = r.bound.map_or_else(|| "-".to_string(), |b| b.to_string());
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.seed, r.n, r.omega, r.algorithm, r.colors_used, bound, r.proper
        )
        .unwrap();
    }
    out
}

pub fn parse_report(text: &str) -> Result<Vec<ReportRow>> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    match lines.next() {
        Some((_, l)) if l.split('\t').eq(REPORT_COLUMNS.iter().copied()) => {}
        _ => return Err(parse_err(1, "missing report header")),
    }
    lines
        .map(|(i, l)| {
            let ln = i + 1;
            let f: Vec<&str> = l.split('\t').collect();
            if f.len() != REPORT_COLUMNS.len() {
                return Err(parse_err(ln, "wrong number of columns"));
            }
            let num = |s: &str| s.parse::<usize>().map_err(|_| parse_err(ln, &format!("bad number {s:?}")));
            Ok(ReportRow {
                seed: f[0].parse().map_err(|_| parse_err(ln, "bad seed"))?,
                n: num(f[1])?,
                omega: num(f[2])?,
                algorithm: f[3].to_string(),
                colors_used: num(f[4])?,
                bound: if f[5] == "-" { None } else { Some(num(f[5])?) },
                proper: f[6].parse().map_err(|_| parse_err(ln, "bad flag"))?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn strip_instance_round_trip() {
        let objects = vec![
            StripObject::segment(frac(1, 3), int(2)),
            StripObject::slab(int(4), frac(9, 2), int(4)).unwrap(),
        ];
        let inst = Instance::Strip(objects);
        let text = inst.to_text();
        assert!(text.starts_with(INSTANCE_HEADER));
        assert!(text.contains("1/3"));
        assert_eq!(Instance::parse(&text).unwrap(), inst);
    }

    #[test]
    fn attached_instance_round_trip() {
        let s = AttachedSegment::new(int(1), Point::new(frac(-1, 2), int(2))).unwrap();
        let inst = Instance::Attached(vec![s]);
        assert_eq!(Instance::parse(&inst.to_text()).unwrap(), inst);
        assert_eq!(Instance::parse(&Instance::Attached(vec![]).to_text()).unwrap().len(), 0);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let text = format!("{INSTANCE_HEADER}\nkind strip\nn 1\nobject convex base 0/1 0/1 polygon 0/1,0/1\n");
        match Instance::parse(&text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Instance::parse("nonsense").is_err());
        let wrong_count = format!("{INSTANCE_HEADER}\nkind attached\nn 2\nsegment foot 0 apex 1,1\n");
        assert!(Instance::parse(&wrong_count).is_err());
    }

    #[test]
    fn poset_round_trip() {
        let p = crate::poset::fixtures::standard_example(3);
        assert_eq!(parse_poset(&poset_to_text(&p)).unwrap(), p);
        assert!(parse_poset("poset v1\nn 2\nless 0 1\nless 1 0\n").is_err());
    }

    #[test]
    fn report_round_trip() {
        let rows = vec![
            ReportRow {
                seed: 7,
                n: 3,
                omega: 3,
                algorithm: "stripcolor".into(),
                colors_used: 3,
                bound: Some(432),
                proper: true,
            },
            ReportRow {
                seed: 8,
                n: 0,
                omega: 0,
                algorithm: "firstfit".into(),
                colors_used: 0,
                bound: None,
                proper: true,
            },
        ];
        assert_eq!(parse_report(&report_to_tsv(&rows)).unwrap(), rows);
    }
}
