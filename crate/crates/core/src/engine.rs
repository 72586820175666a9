//! The on-line coloring game: objects arrive one at a time and the algorithm
//! fixes each color before seeing the next object.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Debug;
use std::hash::Hash;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::caps::Caps;
use crate::error::Result;
use crate::geometry::Shape;
use crate::graph::SimpleGraph;
use crate::oracle::clique_number;

/// What the algorithm sees when an object arrives.
#[derive(Debug)]
pub struct Arrival<'a, O> {
    /// Position in the presentation order.
    pub index: usize,
    pub object: &'a O,
    /// Every earlier object, in presentation order.
    pub history: &'a [O],
    /// Indices of the earlier objects that intersect `object`.
    pub neighbors: &'a [usize],
}

/// An on-line coloring algorithm. Implementations keep their own state and
/// must be deterministic given the presentation prefix.
pub trait OnlineColorer<O> {
    type Color: Clone + Eq + Ord + Hash + Debug + Send;

    fn name(&self) -> String;

    fn color(&mut self, arrival: Arrival<'_, O>) -> Self::Color;
}

impl<O, A: OnlineColorer<O> + ?Sized> OnlineColorer<O> for &mut A {
    type Color = A::Color;

    fn name(&self) -> String {
        (**self).name()
    }

    fn color(&mut self, arrival: Arrival<'_, O>) -> Self::Color {
        (**self).color(arrival)
    }
}

/// Full record of one game.
#[derive(Debug, Clone)]
pub struct Transcript<O, C> {
    pub algorithm: String,
    pub objects: Vec<O>,
    pub colors: Vec<C>,
    /// Clique number of the first `i + 1` objects.
    pub omega_running: Vec<usize>,
    /// Earlier intersecting objects, per object.
    pub neighbors: Vec<Vec<usize>>,
    /// Intersecting pairs `(earlier, later)` that share a color.
    pub conflicts: Vec<(usize, usize)>,
    pub proper: bool,
}

impl<O, C: Ord + Clone> Transcript<O, C> {
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn omega(&self) -> usize {
        self.omega_running.last().copied().unwrap_or(0)
    }

    pub fn distinct_colors(&self) -> BTreeSet<C> {
        self.colors.iter().cloned().collect()
    }

    pub fn colors_used(&self) -> usize {
        self.distinct_colors().len()
    }

    /// Intersection graph of the presented objects.
    pub fn graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.len());
        for (later, earlier) in self.neighbors.iter().enumerate() {
            for &e in earlier {
                g.add_edge(e, later);
            }
        }
        g
    }
}

/// A game in progress. Objects can be presented one by one, so adaptive
/// presenters can look at each color before choosing the next object.
pub struct Game<O, A: OnlineColorer<O>> {
    algorithm: A,
    caps: Caps,
    transcript: Transcript<O, A::Color>,
}

impl<O: Shape + Clone, A: OnlineColorer<O>> Game<O, A> {
    pub fn new(algorithm: A, caps: Caps) -> Self {
        let name = algorithm.name();
        Game {
            algorithm,
            caps,
            transcript: Transcript {
                algorithm: name,
                objects: Vec::new(),
                colors: Vec::new(),
                omega_running: Vec::new(),
                neighbors: Vec::new(),
                conflicts: Vec::new(),
                proper: true,
            },
        }
    }

    /// Presents `object`, records the color the algorithm commits to and returns it.
    pub fn present(&mut self, object: O) -> Result<A::Color> {
        let t = &mut self.transcript;
        let index = t.objects.len();
        let neighbors: Vec<usize> = t
            .objects
            .iter()
            .enumerate()
            .filter(|(_, o)| o.intersects(&object))
            .map(|(i, _)| i)
            .collect();
        // A new maximum clique must contain the new object.
        let local = SimpleGraph::from_fn(neighbors.len(), |a, b| {
            t.neighbors[neighbors[b]].binary_search(&neighbors[a]).is_ok()
        });
        let omega = (clique_number(&local, &self.caps)? + 1).max(t.omega());
        let color = self.algorithm.color(Arrival {
            index,
            object: &object,
            history: &t.objects,
            neighbors: &neighbors,
        });
        for &u in &neighbors {
            if t.colors[u] == color {
                t.conflicts.push((u, index));
                t.proper = false;
            }
        }
        t.objects.push(object);
        t.colors.push(color.clone());
        t.omega_running.push(omega);
        t.neighbors.push(neighbors);
        Ok(color)
    }

    pub fn transcript(&self) -> &Transcript<O, A::Color> {
        &self.transcript
    }

    pub fn algorithm(&self) -> &A {
        &self.algorithm
    }

    pub fn finish(self) -> (Transcript<O, A::Color>, A) {
        (self.transcript, self.algorithm)
    }
}

/// Presents every object of `presenter` in order.
pub fn play<O, A, I>(presenter: I, algorithm: A, caps: &Caps) -> Result<Transcript<O, A::Color>>
where
    O: Shape + Clone,
    A: OnlineColorer<O>,
    I: IntoIterator<Item = O>,
{
    let mut game = Game::new(algorithm, *caps);
    for object in presenter {
        game.present(object)?;
    }
    Ok(game.finish().0)
}

/// Least positive integer not in `used`.
pub fn first_fit<'a>(used: impl IntoIterator<Item = &'a usize>) -> usize {
    let used: BTreeSet<usize> = used.into_iter().copied().collect();
    (1..).find(|c| !used.contains(c)).expect("some positive integer is free")
}

/// Colors each object with the least color unused by its earlier neighbors.
#[derive(Debug, Clone, Default)]
pub struct FirstFit {
    colors: Vec<usize>,
}

impl FirstFit {
    pub fn new() -> Self {
        FirstFit::default()
    }
}

impl<O> OnlineColorer<O> for FirstFit {
    type Color = usize;

    fn name(&self) -> String {
        "firstfit".into()
    }

    fn color(&mut self, arrival: Arrival<'_, O>) -> usize {
        let c = first_fit(arrival.neighbors.iter().map(|&u| &self.colors[u]));
        self.colors.push(c);
        c
    }
}

/// Picks, among the admissible colors already in use, the one used least
/// often (smallest on ties); opens a new color only when none is admissible.
#[derive(Debug, Clone, Default)]
pub struct LeastUsed {
    colors: Vec<usize>,
    usage: HashMap<usize, usize>,
}

impl LeastUsed {
    pub fn new() -> Self {
        LeastUsed::default()
    }
}

impl<O> OnlineColorer<O> for LeastUsed {
    type Color = usize;

    fn name(&self) -> String {
        "leastused".into()
    }

    fn color(&mut self, arrival: Arrival<'_, O>) -> usize {
        let blocked: BTreeSet<usize> = arrival.neighbors.iter().map(|&u| self.colors[u]).collect();
        let opened = self.usage.len();
        let c = (1..=opened)
            .filter(|c| !blocked.contains(c))
            .min_by_key(|c| (self.usage[c], *c))
            .unwrap_or(opened + 1);
        *self.usage.entry(c).or_insert(0) += 1;
        self.colors.push(c);
        c
    }
}

/// Uniformly random admissible color among those opened so far plus one new
/// color, from a seeded generator.
#[derive(Debug, Clone)]
pub struct RandomProper {
    seed: u64,
    rng: ChaCha8Rng,
    colors: Vec<usize>,
}

impl RandomProper {
    pub fn new(seed: u64) -> Self {
        RandomProper {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
            colors: Vec::new(),
        }
    }
}

impl<O> OnlineColorer<O> for RandomProper {
    type Color = usize;

    fn name(&self) -> String {
        format!("random:{}", self.seed)
    }

    fn color(&mut self, arrival: Arrival<'_, O>) -> usize {
        let blocked: BTreeSet<usize> = arrival.neighbors.iter().map(|&u| self.colors[u]).collect();
        let opened = self.colors.iter().copied().max().unwrap_or(0);
        let choices: Vec<usize> = (1..=opened + 1).filter(|c| !blocked.contains(c)).collect();
        let c = *choices.choose(&mut self.rng).expect("a fresh color is always admissible");
        self.colors.push(c);
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::StripObject;
    use crate::oracle::is_proper;
    use crate::rational::int;

    fn crossing_triple() -> Vec<StripObject> {
        vec![
            StripObject::segment(int(0), int(10)),
            StripObject::segment(int(5), int(5)),
            StripObject::segment(int(10), int(0)),
        ]
    }

    fn chain(n: i64) -> Vec<StripObject> {
        (0..n)
            .map(|i| StripObject::slab(int(3 * i), int(3 * i + 1), int(3 * i)).unwrap())
            .collect()
    }

    /// Ignores the geometry and always answers 1.
    struct Constant;

    impl<O> OnlineColorer<O> for Constant {
        type Color = usize;
        fn name(&self) -> String {
            "constant".into()
        }
        fn color(&mut self, _: Arrival<'_, O>) -> usize {
            1
        }
    }

    #[test]
    fn empty_game() {
        let t = play(Vec::<StripObject>::new(), FirstFit::new(), &Caps::default()).unwrap();
        assert!(t.is_empty() && t.proper && t.omega() == 0);
    }

    #[test]
    fn first_fit_examples() {
        assert_eq!(first_fit(&[]), 1);
        assert_eq!(first_fit(&[1, 2, 4]), 3);
        let caps = Caps::default();
        let t = play(chain(3), FirstFit::new(), &caps).unwrap();
        assert_eq!(t.colors, vec![1, 1, 1]);
        assert_eq!(t.omega_running, vec![1, 1, 1]);
        let t = play(crossing_triple(), FirstFit::new(), &caps).unwrap();
        assert_eq!(t.colors, vec![1, 2, 3]);
        assert_eq!(t.omega_running, vec![1, 2, 3]);
        assert!(t.proper);
    }

    #[test]
    fn improper_algorithms_are_flagged() {
        let t = play(crossing_triple(), Constant, &Caps::default()).unwrap();
        assert!(!t.proper);
        assert_eq!(t.conflicts, vec![(0, 1), (0, 2), (1, 2)]);
        assert!(!is_proper(&t.graph(), &t.colors));
    }

    #[test]
    fn other_colorers_are_proper_and_replayable() {
        let caps = Caps::default();
        let objects: Vec<_> = crossing_triple().into_iter().chain(chain(4)).collect();
        let a = play(objects.clone(), RandomProper::new(5), &caps).unwrap();
        let b = play(objects[..5].to_vec(), RandomProper::new(5), &caps).unwrap();
        assert!(a.proper);
        assert_eq!(&a.colors[..5], &b.colors[..]);
        let l = play(objects, LeastUsed::new(), &caps).unwrap();
        assert!(l.proper);
        assert!(is_proper(&l.graph(), &l.colors));
    }
}
