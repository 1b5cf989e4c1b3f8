//! Arrow diagrams and their pairing with Gauss diagrams.
//!
//! An arrow diagram is an unsigned Gauss diagram on one or two based
//! circles. The jump traversal walks a diagram from the basepoint of its
//! first circle; whenever travel reaches an arrow endpoint it jumps to the
//! other end of that arrow and carries on. It is the walk along the curve
//! obtained by smoothing every arrow.

mod conway;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::diagram::code::{assemble, tokenize, write_circle, SignMode};
use crate::diagram::{BasedGaussDiagram, End, Endpoint, ParseError};

pub use conway::{
    ascending_polynomial, conway_pairing, conway_set, descending_polynomial, pairing, polynomial, v2, ConwaySet, V2,
    Variant, MAX_ENUMERATED_DEGREE,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrowError {
    #[error("arrow diagram has {arrows} arrows on {circles} circles; Conway sets need an even count on one circle or an odd count on two")]
    Parity { arrows: usize, circles: usize },
    #[error("pattern has {pattern} circles but the Gauss diagram has {diagram}")]
    CircleMismatch { pattern: usize, diagram: usize },
    #[error("polynomials are defined for one or two circles, got {0}")]
    TooManyCircles(usize),
    #[error("enumerating {0} arrows is out of reach; the limit is {MAX_ENUMERATED_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("the diagram is not mod {0} numberable, so the certified value is undefined")]
    NotNumberable(u64),
    #[error("basepoint certification failed mod {modulus}: residues {residues:?}")]
    CertificationFailed { modulus: u64, residues: Vec<i64> },
    #[error(transparent)]
    Diagram(#[from] crate::diagram::DiagramError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// An arrow endpoint; arrows are numbered from 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowEnd {
    pub arrow: usize,
    pub end: End,
}

/// Unsigned arrows on based circles, stored with arrows numbered in order of
/// first appearance, so equality is isomorphism of based diagrams.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowDiagram {
    circles: Vec<Vec<ArrowEnd>>,
}

impl ArrowDiagram {
    /// Builds a diagram from based words; arrow ids are renumbered.
    ///
    /// Panics if an arrow lacks a head or a tail or has two of either.
    pub fn new(circles: Vec<Vec<ArrowEnd>>) -> Self {
        let mut map = BTreeMap::new();
        let mut ends: BTreeMap<usize, [u8; 2]> = BTreeMap::new();
        for e in circles.iter().flatten() {
            let next = map.len();
            map.entry(e.arrow).or_insert(next);
            ends.entry(e.arrow).or_default()[e.end as usize] += 1;
        }
        assert!(!circles.is_empty(), "an arrow diagram needs a circle");
        assert!(ends.values().all(|c| *c == [1, 1]), "every arrow needs exactly one head and one tail");
        let circles = circles
            .into_iter()
            .map(|w| w.into_iter().map(|e| ArrowEnd { arrow: map[&e.arrow], end: e.end }).collect())
            .collect();
        ArrowDiagram { circles }
    }

    /// One circle with the given endpoint word, written as (arrow, end) pairs.
    pub fn on_circle(word: &[(usize, End)]) -> Self {
        Self::new(vec![word.iter().map(|&(arrow, end)| ArrowEnd { arrow, end }).collect()])
    }

    pub fn empty(circles: usize) -> Self {
        ArrowDiagram { circles: vec![Vec::new(); circles.max(1)] }
    }

    /// Forgets the signs of a Gauss diagram.
    pub fn from_gauss(g: &BasedGaussDiagram) -> Self {
        Self::from_words(g.words())
    }

    pub(crate) fn from_words(words: &[Vec<Endpoint>]) -> Self {
        Self::new(
            words
                .iter()
                .map(|w| w.iter().map(|e| ArrowEnd { arrow: e.chord as usize, end: e.end }).collect())
                .collect(),
        )
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.circles.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn word(&self, circle: usize) -> &[ArrowEnd] {
        &self.circles[circle]
    }

    pub fn jump_traversal(&self) -> Traversal {
        traverse(&self.circles, |e: &ArrowEnd| (e.arrow, e.end))
    }

    pub fn is_one_component(&self) -> bool {
        self.jump_traversal().is_one_component()
    }

    pub fn is_ascending(&self) -> bool {
        self.jump_traversal().all_first_reached_at(End::Head)
    }

    pub fn is_descending(&self) -> bool {
        self.jump_traversal().all_first_reached_at(End::Tail)
    }

    /// Parses an arrow code: a Gauss code without signs.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let circles = tokenize(text, SignMode::Forbidden)?;
        let (words, _) = assemble(&circles)?;
        Ok(Self::from_words(&words))
    }

    /// Arrow code with arrows labelled from 1.
    pub fn to_code(&self) -> String {
        let mut out = String::new();
        for (ci, w) in self.circles.iter().enumerate() {
            if ci > 0 {
                out.push(';');
            }
            let word: Vec<Endpoint> = w.iter().map(|e| Endpoint { chord: e.arrow as u32 + 1, end: e.end }).collect();
            write_circle(&mut out, &word, 0, |_| None);
        }
        out
    }
}

impl fmt::Display for ArrowDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_code())
    }
}

/// Result of a jump traversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Traversal {
    /// Endpoints reached by travel (not by jumping), in order, as
    /// `(circle, position)`.
    pub reached: Vec<(usize, usize)>,
    /// Arrow and end of every reached endpoint, parallel to `reached`.
    pub reached_ends: Vec<(usize, End)>,
    /// For every circle, which gaps were walked; gap `i` ends at slot `i`.
    pub visited: Vec<Vec<bool>>,
    pub arrow_count: usize,
}

impl Traversal {
    pub fn is_one_component(&self) -> bool {
        self.visited.iter().flatten().all(|&v| v)
    }

    /// End at which each arrow is first reached by travel, if it is reached.
    pub fn first_reached(&self) -> BTreeMap<usize, End> {
        let mut out = BTreeMap::new();
        for &(arrow, end) in &self.reached_ends {
            out.entry(arrow).or_insert(end);
        }
        out
    }

    /// Every arrow is reached by travel, and first at `end`.
    pub fn all_first_reached_at(&self, end: End) -> bool {
        let first = self.first_reached();
        first.len() == self.arrow_count && first.values().all(|&e| e == end)
    }
}

/// Jump traversal over based words; `key` gives the arrow id and end of an endpoint.
pub(crate) fn traverse<T>(circles: &[Vec<T>], key: impl Fn(&T) -> (usize, End)) -> Traversal {
    let mut partner: BTreeMap<(usize, End), (usize, usize)> = BTreeMap::new();
    for (ci, w) in circles.iter().enumerate() {
        for (pos, e) in w.iter().enumerate() {
            partner.insert(key(e), (ci, pos));
        }
    }
    let arrow_count = partner.len() / 2;
    let mut visited: Vec<Vec<bool>> = circles.iter().map(|w| vec![false; w.len().max(1)]).collect();
    let mut reached = Vec::new();
    let mut reached_ends = Vec::new();
    let (mut ci, mut gap) = (0usize, 0usize);
    loop {
        visited[ci][gap] = true;
        let w = &circles[ci];
        if w.is_empty() {
            // Travel comes straight back round an empty circle.
            break;
        }
        let (arrow, end) = key(&w[gap]);
        reached.push((ci, gap));
        reached_ends.push((arrow, end));
        let (cj, pj) = partner[&(arrow, end.other())];
        ci = cj;
        gap = (pj + 1) % circles[cj].len();
        if (ci, gap) == (0, 0) {
            break;
        }
    }
    Traversal { reached, reached_ends, visited, arrow_count }
}
