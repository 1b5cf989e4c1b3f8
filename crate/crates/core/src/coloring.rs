//! Coloring matrices and the determinant of checkerboard colorable diagrams.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::diagram::{BasedGaussDiagram, ChordId, DiagramError, End, Slot};
use crate::matrix::{IntMatrix, MatrixError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("diagram is not checkerboard colorable (no mod 2 Alexander numbering)")]
    NotCheckerboardColorable,
    #[error("component {0} has no under-passage")]
    UnderPassageFreeComponent(usize),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// A long arc: the stretch of a circle between two consecutive
/// under-passages (heads). It is named by the head it runs into; a circle
/// without heads is one closed arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LongArc {
    pub circle: usize,
    /// Chord whose head ends this arc, `None` for a closed circle.
    pub ends_at: Option<ChordId>,
}

impl fmt::Display for LongArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ends_at {
            Some(c) => write!(f, "to{c}"),
            None => write!(f, "circle{}", self.circle),
        }
    }
}

/// Long arcs circle by circle; on each circle the first arc is the one
/// running through the basepoint.
pub fn long_arcs(g: &BasedGaussDiagram) -> Vec<LongArc> {
    (0..g.circle_count())
        .flat_map(|ci| {
            let heads: Vec<ChordId> = g.word(ci).iter().filter(|e| e.end == End::Head).map(|e| e.chord).collect();
            if heads.is_empty() {
                vec![LongArc { circle: ci, ends_at: None }]
            } else {
                heads.into_iter().map(|c| LongArc { circle: ci, ends_at: Some(c) }).collect()
            }
        })
        .collect()
}

/// Crossing-by-long-arc matrix: +2 where the arc passes over, -1 for each
/// time it ends or starts at the under-passage. Rows follow chord order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringMatrix {
    pub entries: IntMatrix,
    pub rows: Vec<ChordId>,
    pub cols: Vec<LongArc>,
}

impl ColoringMatrix {
    /// The matrix in the plain text format with a provenance header.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# rows: chords {}\n", self.rows.iter().join(" ")));
        out.push_str(&format!("# cols: long arcs {}\n", self.cols.iter().join(" ")));
        out.push_str(&self.entries.to_text());
        out
    }
}

/// Which long arc of its circle contains `slot`, as an index into `long_arcs`.
fn arc_containing(g: &BasedGaussDiagram, offsets: &[usize], slot: Slot) -> usize {
    let word = g.word(slot.circle);
    let heads: Vec<usize> = word.iter().positions(|e| e.end == End::Head).collect();
    if heads.is_empty() {
        return offsets[slot.circle];
    }
    // The arc ending at the first head at or after the slot.
    let j = heads.iter().position(|&h| h >= slot.pos).unwrap_or(0);
    offsets[slot.circle] + j
}

pub fn coloring_matrix(g: &BasedGaussDiagram) -> Result<ColoringMatrix, ColoringError> {
    if g.alexander_numbering(2).is_none() {
        return Err(ColoringError::NotCheckerboardColorable);
    }
    if g.circle_count() > 1 {
        if let Some(ci) = (0..g.circle_count()).find(|&ci| g.word(ci).iter().all(|e| e.end != End::Head)) {
            return Err(ColoringError::UnderPassageFreeComponent(ci));
        }
    }
    Ok(coloring_matrix_unchecked(g))
}

/// The accumulated matrix without the colorability precondition.
pub fn coloring_matrix_unchecked(g: &BasedGaussDiagram) -> ColoringMatrix {
    let cols = long_arcs(g);
    let mut offsets = Vec::with_capacity(g.circle_count());
    let mut acc = 0;
    for ci in 0..g.circle_count() {
        offsets.push(acc);
        acc += g.word(ci).iter().filter(|e| e.end == End::Head).count().max(1);
    }
    let rows: Vec<ChordId> = g.chord_ids().collect();
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (i, &c) in rows.iter().enumerate() {
        let info = g.chord(c).unwrap();
        let over = arc_containing(g, &offsets, info.tail);
        let incoming = arc_containing(g, &offsets, info.head);
        let len = g.word(info.head.circle).len();
        let outgoing = arc_containing(g, &offsets, Slot { circle: info.head.circle, pos: (info.head.pos + 1) % len });
        m[(i, over)] += 2;
        m[(i, incoming)] -= 1;
        m[(i, outgoing)] -= 1;
    }
    ColoringMatrix { entries: m, rows, cols }
}

/// Absolute determinant of the minor obtained by deleting the last row and
/// column of the coloring matrix; 1 when there is at most one crossing.
pub fn determinant(g: &BasedGaussDiagram) -> Result<u128, ColoringError> {
    let b = coloring_matrix(g)?;
    minor_determinant(&b.entries)
}

pub(crate) fn minor_determinant(b: &IntMatrix) -> Result<u128, ColoringError> {
    if b.rows() <= 1 {
        return Ok(1);
    }
    let minor = b.minor(b.rows() - 1, b.cols() - 1);
    Ok(minor.det()?.unsigned_abs())
}

/// All `(n-1)x(n-1)` minors' absolute determinants, row-major over the
/// deleted (row, column).
pub fn all_minor_determinants(b: &IntMatrix) -> Result<Vec<u128>, ColoringError> {
    if b.rows() <= 1 {
        return Ok(vec![1]);
    }
    let mut out = Vec::new();
    for r in 0..b.rows() {
        for c in 0..b.cols() {
            out.push(b.minor(r, c).det()?.unsigned_abs());
        }
    }
    Ok(out)
}

/// Whether every `(n-1)x(n-1)` minor has the same absolute determinant.
pub fn minor_independence_check(g: &BasedGaussDiagram) -> Result<bool, ColoringError> {
    let b = coloring_matrix(g)?;
    Ok(all_minor_determinants(&b.entries)?.iter().all_equal())
}
