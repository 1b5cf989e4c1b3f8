//! Diagram populations: exhaustive one-circle enumeration and seeded random
//! knots and two-component links.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::combinat::{double_factorial_odd, perfect_matchings};
use crate::diagram::{BasedGaussDiagram, ChordId, End, Endpoint, Sign};

/// `(2k-1)!! * 4^k`: the number of based one-circle diagrams with `k` chords.
pub fn raw_count(k: usize) -> u64 {
    double_factorial_odd(k) * 4u64.pow(k as u32)
}

/// Every based one-circle diagram built on one endpoint matching.
///
/// Chords are labelled `1..=k` in order of their first endpoint.
pub fn diagrams_for_matching(matching: &[(usize, usize)]) -> impl Iterator<Item = BasedGaussDiagram> + '_ {
    let k = matching.len();
    (0u32..1 << k).flat_map(move |orient| {
        let mut word = vec![Endpoint::tail(0); 2 * k];
        for (j, &(a, b)) in matching.iter().enumerate() {
            let (t, h) = if orient >> j & 1 == 0 { (a, b) } else { (b, a) };
            word[t] = Endpoint::tail(j as ChordId + 1);
            word[h] = Endpoint::head(j as ChordId + 1);
        }
        (0u32..1 << k).map(move |signs| {
            let signs: BTreeMap<ChordId, Sign> = (0..k)
                .map(|j| (j as ChordId + 1, if signs >> j & 1 == 0 { Sign::Pos } else { Sign::Neg }))
                .collect();
            BasedGaussDiagram::new(vec![word.clone()], signs).expect("enumerated words are valid")
        })
    })
}

/// All based one-circle diagrams with exactly `k` chords.
///
/// With `canonical`, only the representative of each class under basepoint
/// rotation and relabelling is kept (see [`canonical_form`]).
pub fn enumerate_diagrams(k: usize, canonical: bool) -> impl Iterator<Item = BasedGaussDiagram> {
    perfect_matchings(2 * k).into_iter().flat_map(move |m| {
        diagrams_for_matching(&m).filter(move |g| !canonical || is_canonical(g)).collect::<Vec<_>>()
    })
}

fn rotation_key(word: &[Endpoint], signs: &BTreeMap<ChordId, Sign>, shift: usize) -> Vec<(u32, End, Sign)> {
    let mut map = BTreeMap::new();
    let len = word.len();
    (0..len)
        .map(|i| {
            let e = word[(i + shift) % len];
            let next = map.len() as u32;
            let label = *map.entry(e.chord).or_insert(next);
            (label, e.end, signs[&e.chord])
        })
        .collect()
}

/// Lexicographically least relabelled rotation of a knot diagram.
pub fn canonical_form(g: &BasedGaussDiagram) -> BasedGaussDiagram {
    let signs = g.signs();
    let word = g.word(0);
    let best = (0..word.len().max(1)).min_by_key(|&s| rotation_key(word, &signs, s)).unwrap_or(0);
    g.with_basepoint(0, best).expect("rotation within range").relabeled()
}

fn is_canonical(g: &BasedGaussDiagram) -> bool {
    let signs = g.signs();
    let word = g.word(0);
    let own = rotation_key(word, &signs, 0);
    (1..word.len()).all(|s| rotation_key(word, &signs, s) >= own)
}

fn random_signs<R: Rng>(rng: &mut R, k: usize) -> BTreeMap<ChordId, Sign> {
    (1..=k as ChordId).map(|c| (c, if rng.gen() { Sign::Pos } else { Sign::Neg })).collect()
}

fn random_word<R: Rng>(rng: &mut R, k: usize) -> Vec<Endpoint> {
    let mut word: Vec<Endpoint> =
        (1..=k as ChordId).flat_map(|c| [Endpoint::tail(c), Endpoint::head(c)]).collect();
    word.shuffle(rng);
    word
}

/// A uniformly random based knot diagram with `k` chords.
pub fn random_knot<R: Rng>(rng: &mut R, k: usize) -> BasedGaussDiagram {
    let word = random_word(rng, k);
    let signs = random_signs(rng, k);
    BasedGaussDiagram::new(vec![word], signs).expect("random words are valid")
}

/// A random two-circle diagram with `k` chords and at least one chord
/// between the circles when `k > 0`.
pub fn random_two_component<R: Rng>(rng: &mut R, k: usize) -> BasedGaussDiagram {
    loop {
        let word = random_word(rng, k);
        let cut = rng.gen_range(0..=2 * k);
        let circles = vec![word[..cut].to_vec(), word[cut..].to_vec()];
        let signs = random_signs(rng, k);
        let g = BasedGaussDiagram::new(circles, signs).expect("random words are valid");
        if k == 0 || g.chord_ids().any(|c| !g.is_self_chord(c).unwrap()) {
            return g;
        }
    }
}
