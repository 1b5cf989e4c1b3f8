//! Shared test oracles: braid closures (classical diagrams) and an
//! independent skein-recursion Conway polynomial.
#![allow(dead_code)]

use std::collections::BTreeMap;

use vknot::diagram::{BasedGaussDiagram, ChordId, End, Endpoint, Sign};
use vknot::IntPolynomial;

/// Gauss diagram of the closure of a braid word on `strands` strands.
///
/// Generator `i` (1-based, negative for the inverse) crosses strands at
/// positions `i-1` and `i`; for a positive generator the strand moving right
/// passes over, which is a positive crossing. Components are read in order
/// of their lowest starting position, each based at its start.
pub fn braid_closure(strands: usize, word: &[i32]) -> BasedGaussDiagram {
    let mut circles: Vec<Vec<Endpoint>> = Vec::new();
    let mut signs = BTreeMap::new();
    let mut seen = vec![false; strands];
    for start in 0..strands {
        if seen[start] {
            continue;
        }
        let mut circle = Vec::new();
        let mut pos = start;
        loop {
            seen[pos] = true;
            for (k, &g) in word.iter().enumerate() {
                let i = g.unsigned_abs() as usize - 1;
                let chord = k as ChordId + 1;
                let moving_right = pos == i;
                if pos != i && pos != i + 1 {
                    continue;
                }
                let over = moving_right == (g > 0);
                circle.push(Endpoint { chord, end: if over { End::Tail } else { End::Head } });
                signs.insert(chord, if g > 0 { Sign::Pos } else { Sign::Neg });
                pos = if moving_right { i + 1 } else { i };
            }
            if pos == start {
                break;
            }
        }
        circles.push(circle);
    }
    BasedGaussDiagram::new(circles, signs).expect("braid closures are valid diagrams")
}

/// Conway polynomial by the skein relation `∇(L+) - ∇(L-) = z ∇(L0)`,
/// resolving towards a descending diagram.
///
/// A diagram is descending when, reading the components in order from
/// their basepoints, every crossing is met first as an over-passage. That
/// holds for a crossing inside one component met tail first, or between two
/// components whose tail lies on the earlier one. Descending diagrams of
/// classical links are split unlinks: ∇ = 1 for a knot, 0 otherwise.
pub fn skein_conway(g: &BasedGaussDiagram) -> IntPolynomial {
    let bad = g.chords().find(|(_, c)| (c.tail.circle, c.tail.pos) > (c.head.circle, c.head.pos)).map(|(id, c)| (id, c.sign));
    match bad {
        None => {
            if g.circle_count() == 1 {
                IntPolynomial::one()
            } else {
                IntPolynomial::zero()
            }
        }
        Some((c, sign)) => {
            let changed = skein_conway(&g.crossing_change(c).unwrap());
            let smoothed = skein_conway(&g.smooth(c).unwrap());
            // ∇(G) = ∇(G with c changed) ± z ∇(G0), + when c is positive.
            changed.add_shifted(&smoothed, 1, sign.value())
        }
    }
}
