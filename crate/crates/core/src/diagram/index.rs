use std::collections::{BTreeMap, VecDeque};

use super::{BasedGaussDiagram, ChordId, DiagramError, Slot};

/// Which interleaved chords count as crossing "left to right".
///
/// Flipping the convention negates every index and leaves every
/// mod-p predicate unchanged.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IndexConvention {
    /// A chord crosses left to right when its tail lies on the arc running
    /// from the head of the reference chord to its tail.
    #[default]
    TailOnHeadToTailArc,
    Reversed,
}

/// A labelling of short arcs by residues mod `modulus` (integers when it is 0).
///
/// Arc `Slot { circle, pos }` is the gap that ends at endpoint slot `pos`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Numbering {
    pub modulus: u64,
    pub labels: BTreeMap<Slot, i64>,
}

fn reduce(x: i64, p: u64) -> i64 {
    if p == 0 {
        x
    } else {
        x.rem_euclid(p as i64)
    }
}

/// Strictly between `from` and `to` going forward around a circle of length `len`.
fn strictly_between(from: usize, to: usize, x: usize, len: usize) -> bool {
    let d = (x + len - from) % len;
    let span = (to + len - from) % len;
    d > 0 && d < span
}

impl BasedGaussDiagram {
    /// Index of a chord of a knot diagram.
    pub fn index(&self, c: ChordId) -> Result<i64, DiagramError> {
        self.index_with(c, IndexConvention::default())
    }

    pub fn index_with(&self, c: ChordId, convention: IndexConvention) -> Result<i64, DiagramError> {
        self.require_knot()?;
        let info = *self.chord(c)?;
        let len = self.word(0).len();
        let on_arc = |x: usize| strictly_between(info.head.pos, info.tail.pos, x, len);
        let mut right = 0;
        let mut left = 0;
        for (id, d) in self.chords() {
            if id == c {
                continue;
            }
            match (on_arc(d.tail.pos), on_arc(d.head.pos)) {
                (true, false) => right += d.sign.value(),
                (false, true) => left += d.sign.value(),
                _ => {}
            }
        }
        let i = info.sign.value() * (right - left);
        Ok(match convention {
            IndexConvention::TailOnHeadToTailArc => i,
            IndexConvention::Reversed => -i,
        })
    }

    /// Indices of all chords, in chord order.
    pub fn indices(&self) -> Result<Vec<(ChordId, i64)>, DiagramError> {
        self.chord_ids().map(|c| Ok((c, self.index(c)?))).collect()
    }

    /// Whether every chord index vanishes mod `p` (exactly, when `p` is 0).
    pub fn is_mod_p_numberable(&self, p: u64) -> Result<bool, DiagramError> {
        self.require_knot()?;
        for c in self.chord_ids() {
            if reduce(self.index(c)?, p) != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_checkerboard_colorable(&self) -> Result<bool, DiagramError> {
        self.is_mod_p_numberable(2)
    }

    /// The difference constraints a mod-p Alexander numbering must meet.
    ///
    /// Each entry `(u, v, w)` asks for `label(v) - label(u) = w`. At a chord of
    /// sign `e` the label goes up by `e` across the tail, down by `e` across
    /// the head, and the arc entering the head is `e` above the arc entering
    /// the tail. Around every crossing this puts the incoming over-arc and the
    /// outgoing under-arc on one value and the other two arcs one step away,
    /// in the direction fixed by the sign.
    fn numbering_constraints(&self) -> Vec<(Slot, Slot, i64)> {
        let mut out = Vec::with_capacity(3 * self.chord_count());
        for (_, c) in self.chords() {
            let e = c.sign.value();
            out.push((c.tail, self.gap_after(c.tail), e));
            out.push((c.head, self.gap_after(c.head), -e));
            out.push((c.tail, c.head, e));
        }
        out
    }

    /// Solves for a mod-p Alexander numbering; `None` when none exists.
    ///
    /// Works for links as well as knots.
    pub fn alexander_numbering(&self, p: u64) -> Option<Numbering> {
        let arcs: Vec<Slot> = (0..self.circle_count())
            .flat_map(|ci| (0..self.short_arc_count(ci)).map(move |pos| Slot { circle: ci, pos }))
            .collect();
        let mut adj: BTreeMap<Slot, Vec<(Slot, i64)>> = arcs.iter().map(|&a| (a, Vec::new())).collect();
        for (u, v, w) in self.numbering_constraints() {
            adj.get_mut(&u).unwrap().push((v, w));
            adj.get_mut(&v).unwrap().push((u, -w));
        }
        let mut labels: BTreeMap<Slot, i64> = BTreeMap::new();
        for &root in &arcs {
            if labels.contains_key(&root) {
                continue;
            }
            labels.insert(root, 0);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let lu = labels[&u];
                for &(v, w) in &adj[&u] {
                    let want = reduce(lu + w, p);
                    match labels.get(&v) {
                        Some(&lv) if lv != want => return None,
                        Some(_) => {}
                        None => {
                            labels.insert(v, want);
                            queue.push_back(v);
                        }
                    }
                }
            }
        }
        Some(Numbering { modulus: p, labels })
    }

    /// Number of chords met head first when travelling from the basepoint.
    pub fn warping_degree(&self) -> Result<usize, DiagramError> {
        self.require_knot()?;
        Ok(self.chords().filter(|(_, c)| c.head.pos < c.tail.pos).count())
    }

    /// Chords met head first from the basepoint.
    pub fn head_first_chords(&self) -> Result<Vec<ChordId>, DiagramError> {
        self.require_knot()?;
        Ok(self.chords().filter(|(_, c)| c.head.pos < c.tail.pos).map(|(id, _)| id).collect())
    }
}

impl Numbering {
    /// Checks the four-arc rule at every crossing of `g`: two arcs share a
    /// value and the other two sit one above it (mod the modulus), the
    /// incoming over-arc being paired with the outgoing under-arc.
    pub fn satisfies(&self, g: &BasedGaussDiagram) -> bool {
        let p = self.modulus;
        let get = |s: &Slot| self.labels.get(s).copied();
        if (0..g.circle_count()).any(|ci| (0..g.short_arc_count(ci)).any(|pos| get(&Slot { circle: ci, pos }).is_none())) {
            return false;
        }
        if self.labels.values().any(|&v| reduce(v, p) != v) {
            return false;
        }
        g.chords().all(|(_, c)| {
            let over_in = get(&c.tail).unwrap();
            let over_out = get(&g.gap_after(c.tail)).unwrap();
            let under_in = get(&c.head).unwrap();
            let under_out = get(&g.gap_after(c.head)).unwrap();
            let same = |a: i64, b: i64| reduce(a - b, p) == 0;
            let (low, high) = if same(over_out, over_in + 1) { (over_in, over_out) } else { (over_out, over_in) };
            same(over_in, under_out) && same(over_out, under_in) && same(high, low + 1)
        })
    }

    pub fn label(&self, arc: Slot) -> Option<i64> {
        self.labels.get(&arc).copied()
    }
}
