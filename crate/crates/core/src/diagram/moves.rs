//! Local moves: smoothing, crossing change, basepoint shifts and
//! Reidemeister moves on Gauss diagrams.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use itertools::Itertools;

use super::{BasedGaussDiagram, ChordId, DiagramError, End, Endpoint, Sign, Slot};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    R1Insert,
    R1Delete,
    R2Insert,
    R2Delete,
    R3,
    BasepointShift,
}

impl MoveKind {
    pub const ALL: [MoveKind; 6] = [
        MoveKind::R1Insert,
        MoveKind::R1Delete,
        MoveKind::R2Insert,
        MoveKind::R2Delete,
        MoveKind::R3,
        MoveKind::BasepointShift,
    ];
}

/// A single move together with the diagram it produces.
#[derive(Clone, Debug)]
pub struct Move {
    pub kind: MoveKind,
    pub result: BasedGaussDiagram,
}

impl BasedGaussDiagram {
    /// Oriented smoothing at chord `c`.
    ///
    /// A self-chord splits its circle in two: the part through the old
    /// basepoint keeps its place and basepoint, and the other part is inserted
    /// right after it with its basepoint just past the reconnection point. A
    /// chord between two circles merges them into one circle that takes the
    /// place and basepoint of the earlier of the two.
    pub fn smooth(&self, c: ChordId) -> Result<BasedGaussDiagram, DiagramError> {
        let info = *self.chord(c)?;
        let mut signs = self.signs();
        signs.remove(&c);
        let mut circles = self.words().to_vec();
        let (x, y) = if info.tail < info.head { (info.tail, info.head) } else { (info.head, info.tail) };
        if x.circle == y.circle {
            let w = &circles[x.circle];
            let inner: Vec<Endpoint> = w[x.pos + 1..y.pos].to_vec();
            let outer: Vec<Endpoint> = w[..x.pos].iter().chain(&w[y.pos + 1..]).copied().collect();
            circles[x.circle] = outer;
            circles.insert(x.circle + 1, inner);
        } else {
            let first = &circles[x.circle];
            let second = &circles[y.circle];
            let mut merged: Vec<Endpoint> = first[..x.pos].to_vec();
            merged.extend_from_slice(&second[y.pos + 1..]);
            merged.extend_from_slice(&second[..y.pos]);
            merged.extend_from_slice(&first[x.pos + 1..]);
            circles[x.circle] = merged;
            circles.remove(y.circle);
        }
        BasedGaussDiagram::new(circles, signs)
    }

    /// Swaps head and tail of `c` and negates its sign.
    pub fn crossing_change(&self, c: ChordId) -> Result<BasedGaussDiagram, DiagramError> {
        let info = *self.chord(c)?;
        let mut circles = self.words().to_vec();
        circles[info.tail.circle][info.tail.pos].end = End::Head;
        circles[info.head.circle][info.head.pos].end = End::Tail;
        let mut signs = self.signs();
        signs.insert(c, info.sign.flip());
        BasedGaussDiagram::new(circles, signs)
    }

    /// Moves the basepoint of `circle` across one endpoint.
    pub fn shift_basepoint(&self, circle: usize, forward: bool) -> Result<BasedGaussDiagram, DiagramError> {
        let len = self.words().get(circle).ok_or(DiagramError::BadGap { circle, gap: 1 })?.len();
        if len == 0 {
            return Ok(self.clone());
        }
        self.with_basepoint(circle, if forward { 1 } else { len - 1 })
    }

    fn rebuilt(&self, circles: Vec<Vec<Endpoint>>, signs: BTreeMap<ChordId, Sign>) -> BasedGaussDiagram {
        BasedGaussDiagram::new(circles, signs).expect("move keeps the diagram valid")
    }

    /// Insertion points: circle and position in its based word (0..=len).
    fn insertion_points(&self) -> Vec<(usize, usize)> {
        (0..self.circle_count()).flat_map(|ci| (0..=self.word(ci).len()).map(move |p| (ci, p))).collect()
    }

    /// Chords with both endpoints adjacent on a circle, in either order.
    fn kinks(&self) -> Vec<ChordId> {
        self.chords()
            .filter(|(_, c)| c.tail.circle == c.head.circle && c.tail.pos.abs_diff(c.head.pos) == 1)
            .map(|(id, _)| id)
            .collect()
    }

    pub fn r1_insertions(&self) -> Vec<BasedGaussDiagram> {
        let label = self.max_label() + 1;
        let mut out = Vec::new();
        for (ci, p) in self.insertion_points() {
            for first in [End::Tail, End::Head] {
                for sign in [Sign::Pos, Sign::Neg] {
                    let mut circles = self.words().to_vec();
                    let pair = [Endpoint { chord: label, end: first }, Endpoint { chord: label, end: first.other() }];
                    circles[ci].splice(p..p, pair);
                    let mut signs = self.signs();
                    signs.insert(label, sign);
                    out.push(self.rebuilt(circles, signs));
                }
            }
        }
        out
    }

    fn without_chords(&self, gone: &[ChordId]) -> BasedGaussDiagram {
        let circles = self.words().iter().map(|w| w.iter().copied().filter(|e| !gone.contains(&e.chord)).collect()).collect();
        let mut signs = self.signs();
        for c in gone {
            signs.remove(c);
        }
        self.rebuilt(circles, signs)
    }

    pub fn r1_deletions(&self) -> Vec<BasedGaussDiagram> {
        self.kinks().into_iter().map(|c| self.without_chords(&[c])).collect()
    }

    /// Two new chords of opposite sign whose tails are adjacent and whose
    /// heads are adjacent, on the same or on different arcs.
    pub fn r2_insertions(&self) -> Vec<BasedGaussDiagram> {
        let a = self.max_label() + 1;
        let b = a + 1;
        let points = self.insertion_points();
        let mut out = Vec::new();
        for &(tc, tp) in &points {
            for &(hc, hp) in &points {
                for parallel in [true, false] {
                    for sign_a in [Sign::Pos, Sign::Neg] {
                        let tails = [Endpoint::tail(a), Endpoint::tail(b)];
                        let heads = if parallel {
                            [Endpoint::head(a), Endpoint::head(b)]
                        } else {
                            [Endpoint::head(b), Endpoint::head(a)]
                        };
                        let mut signs = self.signs();
                        signs.insert(a, sign_a);
                        signs.insert(b, sign_a.flip());
                        let orders: &[bool] = if (tc, tp) == (hc, hp) { &[true, false] } else { &[true] };
                        for &tails_first in orders {
                            let mut circles = self.words().to_vec();
                            if (tc, tp) == (hc, hp) {
                                let block: Vec<Endpoint> = if tails_first {
                                    tails.iter().chain(&heads).copied().collect()
                                } else {
                                    heads.iter().chain(&tails).copied().collect()
                                };
                                circles[tc].splice(tp..tp, block);
                            } else if tc == hc {
                                // Insert the later block first so the earlier position stays valid.
                                let (first, second) = if tp < hp { ((hp, heads), (tp, tails)) } else { ((tp, tails), (hp, heads)) };
                                circles[tc].splice(first.0..first.0, first.1);
                                circles[tc].splice(second.0..second.0, second.1);
                            } else {
                                circles[tc].splice(tp..tp, tails);
                                circles[hc].splice(hp..hp, heads);
                            }
                            out.push(self.rebuilt(circles, signs.clone()));
                        }
                    }
                }
            }
        }
        out
    }

    fn adjacent(x: Slot, y: Slot) -> bool {
        x.circle == y.circle && x.pos.abs_diff(y.pos) == 1
    }

    /// Pairs of opposite-sign chords with adjacent tails and adjacent heads.
    pub fn r2_pairs(&self) -> Vec<(ChordId, ChordId)> {
        self.chords
            .iter()
            .map(|(&id, c)| (id, c))
            .tuple_combinations()
            .filter(|((_, x), (_, y))| x.sign != y.sign && Self::adjacent(x.tail, y.tail) && Self::adjacent(x.head, y.head))
            .map(|((a, _), (b, _))| (a, b))
            .collect()
    }

    pub fn r2_deletions(&self) -> Vec<BasedGaussDiagram> {
        self.r2_pairs().into_iter().map(|(a, b)| self.without_chords(&[a, b])).collect()
    }

    /// Third Reidemeister moves: three chords whose endpoints form three
    /// adjacent pairs, one per pair of chords, in a configuration realised
    /// by three straight strands; the move reverses each pair.
    pub fn r3_moves(&self) -> Vec<BasedGaussDiagram> {
        let mut out = Vec::new();
        for triple in self.chord_ids().combinations(3) {
            for swaps in self.r3_triangles(&triple) {
                let mut circles = self.words().to_vec();
                for (x, y) in swaps {
                    let (a, b) = (circles[x.circle][x.pos], circles[y.circle][y.pos]);
                    circles[x.circle][x.pos] = b;
                    circles[y.circle][y.pos] = a;
                }
                out.push(self.rebuilt(circles, self.signs()));
            }
        }
        out
    }

    /// For a chord triple, every choice of three adjacent endpoint pairs that
    /// forms a valid R3 triangle, as the slot pairs to swap.
    fn r3_triangles(&self, triple: &[ChordId]) -> Vec<[(Slot, Slot); 3]> {
        let ends: Vec<(Endpoint, Slot)> = triple
            .iter()
            .flat_map(|&c| {
                let i = self.chords[&c];
                [(Endpoint::tail(c), i.tail), (Endpoint::head(c), i.head)]
            })
            .collect();
        let candidates: Vec<(usize, usize)> = (0..6)
            .tuple_combinations()
            .filter(|&(i, j)| ends[i].0.chord != ends[j].0.chord && Self::adjacent(ends[i].1, ends[j].1))
            .collect();
        let mut found = Vec::new();
        for picks in candidates.iter().combinations(3) {
            let used: HashSet<usize> = picks.iter().flat_map(|&&(i, j)| [i, j]).collect();
            if used.len() != 6 {
                continue;
            }
            let chord_pairs: HashSet<(ChordId, ChordId)> = picks
                .iter()
                .map(|&&(i, j)| {
                    let (a, b) = (ends[i].0.chord, ends[j].0.chord);
                    (a.min(b), a.max(b))
                })
                .collect();
            if chord_pairs.len() != 3 {
                continue;
            }
            // Order each pair along the circle.
            let segs: Vec<[(Endpoint, Slot); 2]> = picks
                .iter()
                .map(|&&(i, j)| if ends[i].1 < ends[j].1 { [ends[i], ends[j]] } else { [ends[j], ends[i]] })
                .collect();
            if let Some(key) = self.r3_pattern(&segs) {
                if valid_r3_patterns().contains(&key) {
                    found.push([
                        (segs[0][0].1, segs[0][1].1),
                        (segs[1][0].1, segs[1][1].1),
                        (segs[2][0].1, segs[2][1].1),
                    ]);
                }
            }
        }
        found
    }

    /// Reads the local picture of a candidate triangle: which strand is on
    /// top (two tails), in the middle, and at the bottom (two heads), the
    /// order in which each strand meets its two crossings, and the signs.
    fn r3_pattern(&self, segs: &[[(Endpoint, Slot); 2]]) -> Option<R3Pattern> {
        let tails = |s: &[(Endpoint, Slot); 2]| s.iter().filter(|e| e.0.end == End::Tail).count();
        let top = segs.iter().find(|s| tails(s) == 2)?;
        let mid = segs.iter().find(|s| tails(s) == 1)?;
        let bot = segs.iter().find(|s| tails(s) == 0)?;
        let in_seg = |s: &[(Endpoint, Slot); 2], c: ChordId| s.iter().any(|e| e.0.chord == c);
        let chords: Vec<ChordId> = top.iter().map(|e| e.0.chord).collect();
        let tm = *chords.iter().find(|&&c| in_seg(mid, c))?;
        let tb = *chords.iter().find(|&&c| in_seg(bot, c))?;
        let mb = mid.iter().find(|e| e.0.end == End::Tail)?.0.chord;
        if !in_seg(bot, mb) || tm == tb {
            return None;
        }
        Some(R3Pattern {
            top_meets_tm_first: top[0].0.chord == tm,
            mid_meets_tm_first: mid[0].0.chord == tm,
            bot_meets_tb_first: bot[0].0.chord == tb,
            signs: [self.chords[&tm].sign, self.chords[&tb].sign, self.chords[&mb].sign],
        })
    }

    /// All diagrams one Reidemeister move or basepoint shift away.
    pub fn moves(&self) -> Vec<Move> {
        let tag = |kind: MoveKind, v: Vec<BasedGaussDiagram>| v.into_iter().map(move |result| Move { kind, result });
        let mut shifts = Vec::new();
        for ci in 0..self.circle_count() {
            if !self.word(ci).is_empty() {
                shifts.push(self.shift_basepoint(ci, true).unwrap());
                shifts.push(self.shift_basepoint(ci, false).unwrap());
            }
        }
        tag(MoveKind::R1Insert, self.r1_insertions())
            .chain(tag(MoveKind::R1Delete, self.r1_deletions()))
            .chain(tag(MoveKind::R2Insert, self.r2_insertions()))
            .chain(tag(MoveKind::R2Delete, self.r2_deletions()))
            .chain(tag(MoveKind::R3, self.r3_moves()))
            .chain(tag(MoveKind::BasepointShift, shifts))
            .collect()
    }

    /// Distinct diagrams reachable by one move.
    pub fn reidemeister_moves(&self) -> Vec<BasedGaussDiagram> {
        let mut seen = HashSet::new();
        self.moves().into_iter().map(|m| m.result).filter(|g| seen.insert(g.clone())).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct R3Pattern {
    top_meets_tm_first: bool,
    mid_meets_tm_first: bool,
    bot_meets_tb_first: bool,
    /// Signs of the top/middle, top/bottom and middle/bottom crossings.
    signs: [Sign; 3],
}

/// Patterns realised by three straight oriented strands around a triangle.
///
/// The strands lie on `y = 0`, `y = x` and `y = h - x` for `h = ±1`; every
/// assignment of top/middle/bottom roles and of directions is tried. The
/// sign of a crossing is the sign of `over × under`.
fn valid_r3_patterns() -> &'static HashSet<R3Pattern> {
    static PATTERNS: OnceLock<HashSet<R3Pattern>> = OnceLock::new();
    PATTERNS.get_or_init(|| {
        let mut set = HashSet::new();
        for h in [1.0f64, -1.0] {
            let dirs = [(1.0f64, 0.0f64), (1.0, 1.0), (1.0, -1.0)];
            // Intersection points of line pairs (0,1), (0,2), (1,2).
            let meet = |i: usize, j: usize| -> (f64, f64) {
                match (i.min(j), i.max(j)) {
                    (0, 1) => (0.0, 0.0),
                    (0, 2) => (h, 0.0),
                    _ => (h / 2.0, h / 2.0),
                }
            };
            for roles in (0..3).permutations(3) {
                let (top, mid, bot) = (roles[0], roles[1], roles[2]);
                for flips in 0..8u8 {
                    let d = |l: usize| {
                        let s = if flips >> l & 1 == 1 { -1.0 } else { 1.0 };
                        (dirs[l].0 * s, dirs[l].1 * s)
                    };
                    let along = |l: usize, p: (f64, f64)| p.0 * d(l).0 + p.1 * d(l).1;
                    let cross = |a: (f64, f64), b: (f64, f64)| a.0 * b.1 - a.1 * b.0;
                    let sign = |over: usize, under: usize| if cross(d(over), d(under)) > 0.0 { Sign::Pos } else { Sign::Neg };
                    let (tm, tb, mb) = (meet(top, mid), meet(top, bot), meet(mid, bot));
                    set.insert(R3Pattern {
                        top_meets_tm_first: along(top, tm) < along(top, tb),
                        mid_meets_tm_first: along(mid, tm) < along(mid, mb),
                        bot_meets_tb_first: along(bot, tb) < along(bot, mb),
                        signs: [sign(top, mid), sign(top, bot), sign(mid, bot)],
                    });
                }
            }
        }
        set
    })
}

#[cfg(test)]
mod tests {
    use super::super::parse_gauss_code;
    use super::*;

    fn code(s: &str) -> BasedGaussDiagram {
        parse_gauss_code(s).unwrap()
    }

    #[test]
    fn smoothing_a_kink_splits_off_a_circle() {
        let h = code("O1+U1+").smooth(1).unwrap();
        assert_eq!(h, BasedGaussDiagram::trivial(2));
    }

    #[test]
    fn smoothing_an_interleaved_chord_leaves_a_connecting_chord() {
        let g = code("O1+O2+U1+U2+");
        let h = g.smooth(1).unwrap();
        assert_eq!(h.circle_count(), 2);
        assert!(!h.is_self_chord(2).unwrap());
        assert_eq!(h.to_code(), "U2+;O2+");
        let back = h.smooth(2).unwrap();
        assert_eq!(back.circle_count(), 1);
        assert_eq!(back.chord_count(), 0);
    }

    #[test]
    fn merge_order() {
        // First circle A c B, second circle C c D with c = chord 9.
        let g = code("O1+O9+U1+;O2+U9+U2+");
        let h = g.smooth(9).unwrap();
        assert_eq!(h.to_code(), "O1+U2+O2+U1+");
    }

    #[test]
    fn crossing_change_examples() {
        let g = code("O1+U1+");
        assert_eq!(g.crossing_change(1).unwrap(), code("U1-O1-"));
        let t = code("O1+U2+O3+U1+O2+U3+");
        for c in 1..=3 {
            assert_eq!(t.crossing_change(c).unwrap().crossing_change(c).unwrap(), t);
        }
        assert_eq!(g.crossing_change(4), Err(DiagramError::UnknownChord(4)));
    }

    #[test]
    fn r1_on_unknot() {
        let ins = BasedGaussDiagram::unknot().r1_insertions();
        assert_eq!(ins.len(), 4);
        let set: HashSet<_> = ins.iter().map(|g| g.to_code()).collect();
        let want: HashSet<String> = ["O1+U1+", "O1-U1-", "U1+O1+", "U1-O1-"].iter().map(|s| s.to_string()).collect();
        assert_eq!(set, want);
        for g in &ins {
            assert_eq!(g.r1_deletions(), vec![BasedGaussDiagram::unknot()]);
        }
    }

    #[test]
    fn r2_insert_then_delete() {
        let t = code("O1+U2+O3+U1+O2+U3+");
        for g in t.r2_insertions() {
            assert_eq!(g.chord_count(), 5);
            assert!(g.r2_deletions().contains(&t), "{g}");
        }
    }

    #[test]
    fn r3_patterns_are_closed_under_the_move() {
        let pats = valid_r3_patterns();
        // 2 triangle orientations x 6 role assignments x 8 directions, with
        // repeats; the set must be symmetric under reversing all three orders.
        for p in pats {
            let q = R3Pattern {
                top_meets_tm_first: !p.top_meets_tm_first,
                mid_meets_tm_first: !p.mid_meets_tm_first,
                bot_meets_tb_first: !p.bot_meets_tb_first,
                signs: p.signs,
            };
            assert!(pats.contains(&q));
        }
    }

    #[test]
    fn braid_relation_is_an_r3_move() {
        // Closures of s1 s2 s1 and s2 s1 s2 on three strands with the same
        // labels; the braid relation is a single R3 move on the Gauss diagram.
        // Strand 1 goes over 1 and 2; the others follow.
        let g = code("O1+O2+;U1+O3+;U2+U3+");
        let moved = g.r3_moves();
        assert_eq!(moved.len(), 1);
        assert_eq!(moved[0].to_code(), "O2+O1+;O3+U1+;U3+U2+");
        assert_eq!(moved[0].r3_moves(), vec![g]);
    }
}
