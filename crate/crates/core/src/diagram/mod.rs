//! Based Gauss diagrams of virtual knots and links.
//!
//! A diagram is a list of oriented circles. Each circle carries a word of
//! chord endpoints read from its basepoint along the orientation; every
//! chord has one tail (the over-passage, `O` in a code) and one head (the
//! under-passage, `U` in a code) and a sign.

pub(crate) mod code;
mod index;
mod moves;

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

pub use code::{parse_gauss_code, ParseError};
pub use index::{IndexConvention, Numbering};
pub use moves::{Move, MoveKind};

pub type ChordId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    /// Over-passage.
    Tail,
    /// Under-passage.
    Head,
}

impl End {
    pub fn other(self) -> End {
        match self {
            End::Tail => End::Head,
            End::Head => End::Tail,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endpoint {
    pub chord: ChordId,
    pub end: End,
}

impl Endpoint {
    pub fn tail(chord: ChordId) -> Self {
        Endpoint { chord, end: End::Tail }
    }

    pub fn head(chord: ChordId) -> Self {
        Endpoint { chord, end: End::Head }
    }
}

/// Position of an endpoint slot: circle index and offset from that circle's basepoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub circle: usize,
    pub pos: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChordInfo {
    pub sign: Sign,
    pub tail: Slot,
    pub head: Slot,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("chord {0} does not exist")]
    UnknownChord(ChordId),
    #[error("chord {chord} has more than one {end:?} endpoint")]
    DuplicateEndpoint { chord: ChordId, end: End },
    #[error("chord {chord} is missing its {end:?} endpoint")]
    MissingEndpoint { chord: ChordId, end: End },
    #[error("chord {0} has endpoints but no sign")]
    Unsigned(ChordId),
    #[error("a diagram needs at least one circle")]
    NoCircles,
    #[error("operation needs a one-circle diagram, got {0} circles")]
    NotAKnot(usize),
    #[error("circle {circle} has no slot {gap}")]
    BadGap { circle: usize, gap: usize },
}

/// A Gauss diagram with one basepoint per circle.
///
/// Each circle's word starts right after its basepoint, so two diagrams
/// compare equal exactly when they agree as based diagrams. The position at
/// which a parsed code placed its basepoint marker is remembered for
/// printing only.
#[derive(Clone, Debug)]
pub struct BasedGaussDiagram {
    circles: Vec<Vec<Endpoint>>,
    chords: BTreeMap<ChordId, ChordInfo>,
    display_offsets: Vec<usize>,
}

impl PartialEq for BasedGaussDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.circles == other.circles
            && self.chords.len() == other.chords.len()
            && self.chords.iter().zip(&other.chords).all(|((a, x), (b, y))| a == b && x.sign == y.sign)
    }
}

impl Eq for BasedGaussDiagram {}

impl Hash for BasedGaussDiagram {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.circles.hash(state);
        for (id, info) in &self.chords {
            id.hash(state);
            info.sign.hash(state);
        }
    }
}

impl BasedGaussDiagram {
    /// Builds a diagram from based circle words and chord signs.
    pub fn new(circles: Vec<Vec<Endpoint>>, signs: BTreeMap<ChordId, Sign>) -> Result<Self, DiagramError> {
        if circles.is_empty() {
            return Err(DiagramError::NoCircles);
        }
        let mut tails: BTreeMap<ChordId, Slot> = BTreeMap::new();
        let mut heads: BTreeMap<ChordId, Slot> = BTreeMap::new();
        for (ci, word) in circles.iter().enumerate() {
            for (pos, ep) in word.iter().enumerate() {
                let slot = Slot { circle: ci, pos };
                let map = match ep.end {
                    End::Tail => &mut tails,
                    End::Head => &mut heads,
                };
                if map.insert(ep.chord, slot).is_some() {
                    return Err(DiagramError::DuplicateEndpoint { chord: ep.chord, end: ep.end });
                }
            }
        }
        let mut chords = BTreeMap::new();
        for (&id, &sign) in &signs {
            let tail = tails.remove(&id).ok_or(DiagramError::MissingEndpoint { chord: id, end: End::Tail })?;
            let head = heads.remove(&id).ok_or(DiagramError::MissingEndpoint { chord: id, end: End::Head })?;
            chords.insert(id, ChordInfo { sign, tail, head });
        }
        if let Some((&id, _)) = tails.iter().next().or(heads.iter().next()) {
            return Err(DiagramError::Unsigned(id));
        }
        let display_offsets = vec![0; circles.len()];
        Ok(BasedGaussDiagram { circles, chords, display_offsets })
    }

    /// The 0-chord unknot.
    pub fn unknot() -> Self {
        Self::trivial(1)
    }

    /// `n` disjoint circles without chords.
    pub fn trivial(n: usize) -> Self {
        Self::new(vec![Vec::new(); n.max(1)], BTreeMap::new()).unwrap()
    }

    pub(crate) fn with_display_offsets(mut self, offsets: Vec<usize>) -> Self {
        debug_assert_eq!(offsets.len(), self.circles.len());
        self.display_offsets = offsets;
        self
    }

    pub(crate) fn display_offsets(&self) -> &[usize] {
        &self.display_offsets
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn chord_count(&self) -> usize {
        self.chords.len()
    }

    /// Endpoint word of a circle, read from its basepoint.
    pub fn word(&self, circle: usize) -> &[Endpoint] {
        &self.circles[circle]
    }

    pub fn words(&self) -> &[Vec<Endpoint>] {
        &self.circles
    }

    pub fn chord_ids(&self) -> impl Iterator<Item = ChordId> + '_ {
        self.chords.keys().copied()
    }

    pub fn chords(&self) -> impl Iterator<Item = (ChordId, &ChordInfo)> + '_ {
        self.chords.iter().map(|(&id, info)| (id, info))
    }

    pub fn chord(&self, id: ChordId) -> Result<&ChordInfo, DiagramError> {
        self.chords.get(&id).ok_or(DiagramError::UnknownChord(id))
    }

    pub fn sign(&self, id: ChordId) -> Result<Sign, DiagramError> {
        self.chord(id).map(|c| c.sign)
    }

    pub fn signs(&self) -> BTreeMap<ChordId, Sign> {
        self.chords.iter().map(|(&id, c)| (id, c.sign)).collect()
    }

    pub fn is_knot(&self) -> bool {
        self.circles.len() == 1
    }

    pub(crate) fn require_knot(&self) -> Result<(), DiagramError> {
        if self.is_knot() {
            Ok(())
        } else {
            Err(DiagramError::NotAKnot(self.circles.len()))
        }
    }

    /// Largest chord label in use, 0 for a chordless diagram.
    pub fn max_label(&self) -> ChordId {
        self.chords.keys().next_back().copied().unwrap_or(0)
    }

    /// Whether both endpoints of the chord lie on the same circle.
    pub fn is_self_chord(&self, id: ChordId) -> Result<bool, DiagramError> {
        let c = self.chord(id)?;
        Ok(c.tail.circle == c.head.circle)
    }

    /// Sub-diagram on the given chords; circles and basepoints are kept.
    pub fn restrict(&self, keep: &[ChordId]) -> Result<Self, DiagramError> {
        for &id in keep {
            self.chord(id)?;
        }
        let circles = self
            .circles
            .iter()
            .map(|w| w.iter().copied().filter(|e| keep.contains(&e.chord)).collect())
            .collect();
        let signs = keep.iter().map(|&id| (id, self.chords[&id].sign)).collect();
        Self::new(circles, signs)
    }

    /// Relabels chords 1, 2, ... in order of first appearance.
    pub fn relabeled(&self) -> Self {
        let mut map = BTreeMap::new();
        for ep in self.circles.iter().flatten() {
            let next = map.len() as ChordId + 1;
            map.entry(ep.chord).or_insert(next);
        }
        let circles = self
            .circles
            .iter()
            .map(|w| w.iter().map(|e| Endpoint { chord: map[&e.chord], end: e.end }).collect())
            .collect();
        let signs = self.chords.iter().map(|(id, c)| (map[id], c.sign)).collect();
        Self::new(circles, signs).expect("relabeling preserves validity")
    }

    /// Moves the basepoint of `circle` forward past `gap` endpoints.
    pub fn with_basepoint(&self, circle: usize, gap: usize) -> Result<Self, DiagramError> {
        let len = self.circles.get(circle).ok_or(DiagramError::BadGap { circle, gap })?.len();
        if gap >= len.max(1) {
            return Err(DiagramError::BadGap { circle, gap });
        }
        let mut circles = self.circles.clone();
        circles[circle].rotate_left(gap);
        Self::new(circles, self.signs())
    }

    /// Every choice of basepoint on the first circle (other circles fixed).
    pub fn basepoint_variants(&self) -> Vec<Self> {
        let len = self.circles[0].len();
        (0..len.max(1)).map(|g| self.with_basepoint(0, g).unwrap()).collect()
    }

    /// Short arcs are named by the slot they end at: gap `i` precedes slot `i`.
    pub(crate) fn gap_after(&self, slot: Slot) -> Slot {
        let len = self.circles[slot.circle].len();
        Slot { circle: slot.circle, pos: (slot.pos + 1) % len }
    }

    /// Number of short arcs on a circle (a chordless circle has one).
    pub fn short_arc_count(&self, circle: usize) -> usize {
        self.circles[circle].len().max(1)
    }
}

impl fmt::Display for BasedGaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_code())
    }
}
