//! On-line coloring of objects spanned between two lines with triples
//! `(alpha, beta, gamma)`.
//!
//! `alpha` and `beta` are the lengths of the longest monotone sequences of
//! base segments starting at the new object; objects with equal
//! `(alpha, beta)` form a class whose bases are pairwise disjoint, and each
//! class is colored by First-Fit to get `gamma`.

use std::collections::BTreeMap;
use std::fmt;

use crate::caps::Caps;
use crate::engine::{first_fit, Arrival, OnlineColorer, Transcript};
use crate::error::Result;
use crate::geometry::{BaseKey, StripObject};
use crate::oracle::{clique_number, has_induced_ktt};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TripleColor {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
}

impl TripleColor {
    pub fn class(&self) -> ClassKey {
        ClassKey {
            alpha: self.alpha,
            beta: self.beta,
        }
    }
}

impl fmt::Display for TripleColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.alpha, self.beta, self.gamma)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassKey {
    pub alpha: usize,
    pub beta: usize,
}

/// Maximum number of triples the algorithm may use when the clique number is
/// `omega`: `C(omega + 1, 2) * 24 * omega`.
pub fn triple_bound(omega: usize) -> usize {
    (omega + 1) * omega / 2 * 24 * omega
}

/// Replaces each triple by its rank (from 1) among the distinct triples of
/// `colors` in lexicographic order.
pub fn flatten(colors: &[TripleColor]) -> Vec<usize> {
    let mut distinct: Vec<TripleColor> = colors.to_vec();
    distinct.sort();
    distinct.dedup();
    colors
        .iter()
        .map(|c| distinct.binary_search(c).expect("present") + 1)
        .collect()
}

fn alpha_precedes(a: (&Rational, &Rational), b: (&Rational, &Rational)) -> bool {
    a.0 <= b.0 && a.1 >= b.1
}

/// Length of a longest chain starting at element `start` in the preorder
/// `step`, where `step(i, j)` means `j` may follow `i`. Equal elements
/// (mutually related) are ordered by `tiebreak` to break cycles.
fn longest_chain(n: usize, start: usize, step: impl Fn(usize, usize) -> bool, tiebreak: impl Fn(usize) -> usize) -> usize {
    let edge = |i: usize, j: usize| i != j && step(i, j) && (!step(j, i) || tiebreak(i) < tiebreak(j));
    let mut memo = vec![0usize; n];
    fn visit(v: usize, n: usize, edge: &dyn Fn(usize, usize) -> bool, memo: &mut [usize]) -> usize {
        if memo[v] == 0 {
            let mut best = 1;
            for w in 0..n {
                if edge(v, w) {
                    best = best.max(1 + visit(w, n, edge, memo));
                }
            }
            memo[v] = best;
        }
        memo[v]
    }
    visit(start, n, &edge, &mut memo)
}

/// `alpha` of the last element of `keys`: the longest sequence starting
/// there with top coordinates non-decreasing and bottom coordinates
/// non-increasing, drawn from all of `keys`.
pub fn schmerl_alpha(keys: &[(&Rational, &Rational)]) -> usize {
    let last = keys.len() - 1;
    let tb = |i: usize| if i == last { 0 } else { i + 1 };
    longest_chain(keys.len(), last, |i, j| alpha_precedes(keys[i], keys[j]), tb)
}

/// Mirror of [`schmerl_alpha`]: top non-increasing, bottom non-decreasing.
pub fn schmerl_beta(keys: &[(&Rational, &Rational)]) -> usize {
    let last = keys.len() - 1;
    let tb = |i: usize| if i == last { 0 } else { i + 1 };
    longest_chain(keys.len(), last, |i, j| alpha_precedes(keys[j], keys[i]), tb)
}

/// The triple-coloring algorithm. Works for any object type with a base key,
/// including attached segments (apex and foot stand in for the base).
#[derive(Debug, Clone, Default)]
pub struct StripColor {
    /// `precedes[i][j]`: `i` may be followed by `j` in an alpha sequence.
    precedes: Vec<Vec<bool>>,
    triples: Vec<TripleColor>,
    classes: BTreeMap<ClassKey, Vec<usize>>,
}

impl StripColor {
    pub fn new() -> Self {
        StripColor::default()
    }

    pub fn triples(&self) -> &[TripleColor] {
        &self.triples
    }

    /// Members of each class, in presentation order.
    pub fn classes(&self) -> &BTreeMap<ClassKey, Vec<usize>> {
        &self.classes
    }

    fn register<O: BaseKey>(&mut self, object: &O, history: &[O]) {
        let key = object.base_key();
        let n = history.len();
        let mut row = Vec::with_capacity(n + 1);
        for (i, earlier) in history.iter().enumerate() {
            let other = earlier.base_key();
            self.precedes[i].push(alpha_precedes(other, key));
            row.push(alpha_precedes(key, other));
        }
        row.push(false);
        self.precedes.push(row);
    }

    fn indices(&self) -> (usize, usize) {
        let n = self.precedes.len();
        let last = n - 1;
        let tb = |i: usize| if i == last { 0 } else { i + 1 };
        let p = &self.precedes;
        let alpha = longest_chain(n, last, |i, j| p[i][j], tb);
        let beta = longest_chain(n, last, |i, j| p[j][i], tb);
        (alpha, beta)
    }
}

impl<O: BaseKey> OnlineColorer<O> for StripColor {
    type Color = TripleColor;

    fn name(&self) -> String {
        "stripcolor".into()
    }

    fn color(&mut self, arrival: Arrival<'_, O>) -> TripleColor {
        debug_assert_eq!(arrival.history.len(), self.triples.len());
        self.register(arrival.object, arrival.history);
        let (alpha, beta) = self.indices();
        let key = ClassKey { alpha, beta };
        let members = self.classes.entry(key).or_default();
        let used: Vec<usize> = arrival
            .neighbors
            .iter()
            .filter(|u| members.binary_search(u).is_ok())
            .map(|&u| self.triples[u].gamma)
            .collect();
        let gamma = first_fit(&used);
        members.push(arrival.index);
        let triple = TripleColor { alpha, beta, gamma };
        self.triples.push(triple);
        triple
    }
}

/// Outcome of checking a finished strip-coloring game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Audit {
    pub proper: bool,
    pub omega: usize,
    pub colors_used: usize,
    pub bound: usize,
    /// Steps where `alpha + beta` exceeded the running clique number plus one.
    pub index_violations: Vec<usize>,
    /// Pairs in a common class whose bases meet.
    pub base_violations: Vec<(usize, usize)>,
    /// Classes containing an induced `K_{3,3}`; `None` when not checked.
    pub ktt_violations: Option<Vec<ClassKey>>,
    /// Largest `gamma` divided by the class clique number, over all classes.
    pub worst_gamma_ratio: (usize, usize),
}

impl Audit {
    pub fn passed(&self) -> bool {
        self.proper
            && self.colors_used <= self.bound
            && self.index_violations.is_empty()
            && self.base_violations.is_empty()
            && self.ktt_violations.as_ref().map_or(true, |v| v.is_empty())
    }
}

/// Checks a transcript produced by [`StripColor`] on strip objects. The
/// induced `K_{3,3}` search runs only when `check_ktt` is set.
pub fn audit(
    transcript: &Transcript<StripObject, TripleColor>,
    caps: &Caps,
    check_ktt: bool,
) -> Result<Audit> {
    let colors = &transcript.colors;
    let omega = transcript.omega();
    let index_violations = colors
        .iter()
        .zip(&transcript.omega_running)
        .enumerate()
        .filter(|(_, (c, &w))| c.alpha + c.beta > w + 1)
        .map(|(i, _)| i)
        .collect();
    let mut classes: BTreeMap<ClassKey, Vec<usize>> = BTreeMap::new();
    for (i, c) in colors.iter().enumerate() {
        classes.entry(c.class()).or_default().push(i);
    }
    let graph = transcript.graph();
    let mut base_violations = Vec::new();
    let mut ktt = Vec::new();
    let mut worst = (0, 1);
    for (key, members) in &classes {
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                if transcript.objects[i].base().intersects(transcript.objects[j].base()) {
                    base_violations.push((i, j));
                }
            }
        }
        let sub = graph.induced(members);
        let class_omega = clique_number(&sub, caps)?;
        let gamma = members.iter().map(|&i| colors[i].gamma).max().unwrap_or(0);
        if gamma * worst.1 > worst.0 * class_omega {
            worst = (gamma, class_omega);
        }
        if check_ktt && members.len() >= 6 && has_induced_ktt(&sub, 3, caps)? {
            ktt.push(*key);
        }
    }
    Ok(Audit {
        proper: transcript.proper,
        omega,
        colors_used: transcript.colors_used(),
        bound: triple_bound(omega),
        index_violations,
        base_violations,
        ktt_violations: check_ktt.then_some(ktt),
        worst_gamma_ratio: worst,
    })
}
