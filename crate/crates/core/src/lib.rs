//! On-line coloring of objects spanned between two parallel lines.
//!
//! All geometry is exact over big rationals. The main pieces:
//!
//! * [`stripcolor::StripColor`], the three-index coloring of strip objects,
//!   and [`stripcolor::audit`] which re-checks its guarantees.
//! * [`adversary::run_adversary`], a strategy forcing any on-line algorithm
//!   to spend `k` colors on a triangle-free family of attached segments.
//! * [`curves::CurveSystem`], an on-line representation of a poset by
//!   polyline curves whose crossing graph is its cocomparability graph.
//! * [`oracle`], brute-force checkers used by tests and the CLI.

pub mod adversary;
pub mod caps;
pub mod curves;
pub mod engine;
pub mod error;
pub mod experiments;
pub mod generate;
pub mod geometry;
pub mod graph;
pub mod instance;
pub mod oracle;
pub mod poset;
pub mod rational;
pub mod stripcolor;
pub mod svg;

pub use caps::Caps;
pub use engine::{play, FirstFit, Game, LeastUsed, OnlineColorer, RandomProper, Transcript};
pub use error::{Error, Result};
pub use geometry::{AttachedSegment, BaseSegment, Point, StripObject};
pub use poset::Poset;
pub use rational::Rational;
pub use stripcolor::{StripColor, TripleColor};
