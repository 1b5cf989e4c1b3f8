//! Structural properties of diagrams and moves, exhaustive on small chord
//! counts and sampled beyond.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vknot::arrow::{conway_pairing, Variant};
use vknot::diagram::{MoveKind, Slot};
use vknot::harness::{enumerate_diagrams, random_knot, random_two_component, raw_count};
use vknot::{coloring_matrix, determinant, parse_gauss_code, BasedGaussDiagram};

fn small_knots(max: usize) -> impl Iterator<Item = BasedGaussDiagram> {
    (0..=max).flat_map(|k| enumerate_diagrams(k, false))
}

#[test]
fn enumeration_matches_closed_form() {
    for k in 0..=4 {
        assert_eq!(enumerate_diagrams(k, false).count() as u64, raw_count(k));
    }
    assert_eq!(raw_count(4), 105 * 256);
}

#[test]
fn crossing_change_properties() {
    for g in small_knots(4) {
        for c in g.chord_ids() {
            let h = g.crossing_change(c).unwrap();
            assert_eq!(h.crossing_change(c).unwrap(), g);
            assert_eq!(h.smooth(c).unwrap(), g.smooth(c).unwrap());
            let d = g.warping_degree().unwrap() as i64 - h.warping_degree().unwrap() as i64;
            assert_eq!(d.abs(), 1, "{g} at {c}");
        }
    }
    let g = parse_gauss_code("O1+U1+").unwrap();
    assert_eq!(g.crossing_change(1).unwrap(), parse_gauss_code("U1-O1-").unwrap());
}

#[test]
fn smoothing_changes_component_count_by_one() {
    for g in small_knots(3) {
        for c in g.chord_ids() {
            let h = g.smooth(c).unwrap();
            assert_eq!(h.circle_count(), 2);
            assert_eq!(h.words().iter().map(Vec::len).sum::<usize>() + 2, g.word(0).len());
            // Smoothing any chord joining the two circles gives one circle back.
            for d in h.chord_ids().filter(|&d| !h.is_self_chord(d).unwrap()) {
                assert_eq!(h.smooth(d).unwrap().circle_count(), 1);
            }
        }
    }
}

#[test]
fn index_is_invariant_under_moves() {
    for g in small_knots(3) {
        let before = g.indices().unwrap();
        for m in g.moves() {
            let h = &m.result;
            let after: Vec<_> = h.indices().unwrap();
            for &(c, i) in &before {
                if let Some(&(_, j)) = after.iter().find(|(d, _)| *d == c) {
                    assert_eq!(i, j, "{:?} {g} -> {h}", m.kind);
                }
            }
            if m.kind == MoveKind::R1Insert {
                let new = h.max_label();
                assert_eq!(h.index(new).unwrap(), 0);
            }
        }
    }
}

#[test]
fn coloring_matrix_rows_sum_to_zero() {
    for g in small_knots(4).filter(|g| g.is_checkerboard_colorable().unwrap()) {
        let b = coloring_matrix(&g).unwrap();
        for i in 0..b.entries.rows() {
            assert_eq!(b.entries.row(i).iter().sum::<i64>(), 0, "{g}");
            assert!(b.entries.row(i).iter().all(|x| (-2..=2).contains(x)));
        }
        if b.entries.rows() > 0 {
            assert_eq!(b.entries.det().unwrap(), 0);
        }
    }
}

#[test]
fn numbering_labels_every_short_arc() {
    let g = parse_gauss_code("O1+U2+O3+U1+O2+U3+").unwrap();
    let n = g.alexander_numbering(2).unwrap();
    assert_eq!(n.labels.len(), 6);
    assert!(n.label(Slot { circle: 0, pos: 5 }).is_some());
}

/// A random walk through R-moves and basepoint shifts that stays on
/// checkerboard colorable diagrams (colorability belongs to the diagram, and
/// e.g. an R2 between unrelated arcs can destroy it), kept below
/// `max_chords` chords by only inserting when there is room.
fn orbit(start: &BasedGaussDiagram, steps: usize, max_chords: usize, seed: u64) -> Vec<BasedGaussDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = start.clone();
    let mut out = vec![cur.clone()];
    for _ in 0..steps {
        let moves: Vec<_> =
            cur.moves().into_iter().filter(|m| m.result.is_checkerboard_colorable().unwrap()).collect();
        let mut kinds: Vec<MoveKind> = moves.iter().map(|m| m.kind).collect();
        kinds.dedup();
        if cur.chord_count() + 2 > max_chords {
            kinds.retain(|k| !matches!(k, MoveKind::R1Insert | MoveKind::R2Insert));
        }
        let kind = *kinds.choose(&mut rng).unwrap();
        let options: Vec<_> = moves.into_iter().filter(|m| m.kind == kind).collect();
        cur = options[rng.gen_range(0..options.len())].result.clone();
        out.push(cur.clone());
    }
    out
}

#[test]
fn determinant_and_v2_are_constant_on_trefoil_orbits() {
    let trefoil = parse_gauss_code("O1+U2+O3+U1+O2+U3+").unwrap();
    for seed in 0..4 {
        let walk = orbit(&trefoil, 50, 9, seed);
        let mut kinds_seen = std::collections::HashSet::new();
        for (step, g) in walk.iter().enumerate() {
            assert_eq!(determinant(g).unwrap(), 3, "step {step}: {g}");
            assert_eq!(conway_pairing(g, 2, Variant::Ascending).unwrap().rem_euclid(2), 1, "step {step}: {g}");
            kinds_seen.insert(g.chord_count());
        }
        assert!(kinds_seen.len() > 1, "the walk should change the chord count");
    }
}

#[test]
fn r3_is_its_own_inverse_on_the_braid_relation() {
    // s1 s2 s1 = s2 s1 s2 as a single R3 move on three open strands.
    let g = parse_gauss_code("O1+O2+;U1+O3+;U2+U3+").unwrap();
    let moved = g.r3_moves();
    assert_eq!(moved, vec![parse_gauss_code("O2+O1+;O3+U1+;U3+U2+").unwrap()]);
    assert!(moved[0].r3_moves().contains(&g));
}

#[test]
fn r3_moves_preserve_determinant_and_indices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut tried = 0;
    while tried < 200 {
        let k = rng.gen_range(3..=7);
        let g = random_knot(&mut rng, k);
        if !g.is_checkerboard_colorable().unwrap() {
            continue;
        }
        for h in g.r3_moves() {
            tried += 1;
            assert_eq!(h.indices().unwrap(), g.indices().unwrap());
            assert_eq!(determinant(&h).unwrap(), determinant(&g).unwrap(), "{g} -> {h}");
        }
    }
}

fn any_diagram() -> impl Strategy<Value = BasedGaussDiagram> {
    (any::<u64>(), 0usize..8, any::<bool>()).prop_map(|(seed, k, link)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if link {
            random_two_component(&mut rng, k)
        } else {
            random_knot(&mut rng, k)
        }
    })
}

proptest! {
    #[test]
    fn serialize_then_parse_is_identity(g in any_diagram()) {
        let code = g.to_code();
        let back = parse_gauss_code(&code).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.to_code(), code);
    }

    #[test]
    fn basepoint_markers_round_trip(g in any_diagram(), shift in 0usize..16) {
        let len = g.word(0).len();
        prop_assume!(len > 0);
        let code = g.to_code();
        let first = code.split(';').next().unwrap();
        // Move the marker by splitting the first circle's tokens.
        let tokens: Vec<&str> = first.split_inclusive(['+', '-']).collect();
        let k = shift % tokens.len();
        let marked = if k == 0 { first.to_string() } else { format!("{}*{}", tokens[k..].concat(), tokens[..k].concat()) };
        let text = code.replacen(first, &marked, 1);
        let parsed = parse_gauss_code(&text).unwrap();
        prop_assert_eq!(parsed.to_code(), text);
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn index_ignores_the_basepoint(seed in any::<u64>(), k in 0usize..9) {
        let g = random_knot(&mut ChaCha8Rng::seed_from_u64(seed), k);
        let base = g.indices().unwrap();
        for h in g.basepoint_variants() {
            prop_assert_eq!(h.indices().unwrap(), base.clone());
        }
    }
}
