//! Per-diagram predicates behind each sweep. Every predicate is pure, so a
//! recorded counterexample code can be re-run on its own.

use crate::arrow::{conway_pairing, polynomial, v2, Variant};
use crate::coloring::{determinant, minor_independence_check};
use crate::diagram::{BasedGaussDiagram, ChordId};
use crate::matrix::{skein_block_check, IntMatrix};

/// Outcome of one predicate on one input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Outside the check's population (e.g. not numberable).
    Excluded,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

fn colorable(g: &BasedGaussDiagram) -> bool {
    g.is_knot() && g.is_checkerboard_colorable().unwrap_or(false)
}

/// `det` must lie in `{x, -x}` mod 8.
fn plus_minus_mod8(det: u128, x: i128) -> bool {
    let d = (det % 8) as i128;
    d == x.rem_euclid(8) || d == (-x).rem_euclid(8)
}

/// det ≡ ±(1 + 4 v2) mod 8 on checkerboard colorable knots.
pub fn cor_det(g: &BasedGaussDiagram) -> Verdict {
    if !colorable(g) {
        return Verdict::Excluded;
    }
    let (Ok(det), Ok(v)) = (determinant(g), v2(g, 2, false)) else { return Verdict::Fail };
    Verdict::from_bool(plus_minus_mod8(det, 1 + 4 * v.residue as i128))
}

/// det ≡ ±∇_asc(2) mod 8, with the ascending polynomial evaluated in full.
pub fn det_vs_ascending(g: &BasedGaussDiagram) -> Verdict {
    if !colorable(g) {
        return Verdict::Excluded;
    }
    let (Ok(det), Ok(p)) = (determinant(g), polynomial(g, Variant::Ascending, g.chord_count())) else {
        return Verdict::Fail;
    };
    Verdict::from_bool(plus_minus_mod8(det, p.eval(2)))
}

/// For every modulus the knot is numberable for: `<C_2>` mod p is the same
/// at every basepoint and agrees with `<C'_2>` mod p there.
pub fn main_theorem(g: &BasedGaussDiagram, moduli: &[u64]) -> Verdict {
    if !g.is_knot() {
        return Verdict::Excluded;
    }
    let active: Vec<u64> = moduli.iter().copied().filter(|&p| g.is_mod_p_numberable(p).unwrap_or(false)).collect();
    if active.is_empty() {
        return Verdict::Excluded;
    }
    let mut values = Vec::new();
    for h in g.basepoint_variants() {
        let a = conway_pairing(&h, 2, Variant::Ascending);
        let d = conway_pairing(&h, 2, Variant::Descending);
        match (a, d) {
            (Ok(a), Ok(d)) => values.push((a, d)),
            _ => return Verdict::Fail,
        }
    }
    let ok = active.iter().all(|&p| {
        let p = p as i64;
        let r = |x: i64| if p == 0 { x } else { x.rem_euclid(p) };
        let base = r(values[0].0);
        values.iter().all(|&(a, d)| r(a) == base && r(d) == base)
    });
    Verdict::from_bool(ok)
}

/// `<C_n, G+> - <C_n, G-> = <C_{n-1}, G0>` for every chord that changes the
/// component count by one, both variants, all degrees up to the chord count.
///
/// On a knot every chord is resolved; on a two-component diagram the chords
/// between the circles are (a self-chord there would give three circles).
pub fn skein(g: &BasedGaussDiagram) -> Verdict {
    let start = match g.circle_count() {
        1 => 2,
        2 => 1,
        _ => return Verdict::Excluded,
    };
    let chords: Vec<ChordId> = g.chord_ids().filter(|&c| g.is_knot() || !g.is_self_chord(c).unwrap()).collect();
    if chords.is_empty() {
        return Verdict::Excluded;
    }
    for c in chords {
        let Ok(flipped) = g.crossing_change(c) else { return Verdict::Fail };
        let (plus, minus) = if g.sign(c).unwrap().value() > 0 { (g, &flipped) } else { (&flipped, g) };
        let Ok(zero) = g.smooth(c) else { return Verdict::Fail };
        for variant in [Variant::Ascending, Variant::Descending] {
            for n in (start..=g.chord_count()).step_by(2) {
                let lhs = conway_pairing(plus, n, variant).and_then(|a| Ok(a - conway_pairing(minus, n, variant)?));
                let rhs = conway_pairing(&zero, n - 1, variant);
                match (lhs, rhs) {
                    (Ok(l), Ok(r)) if l == r => {}
                    _ => return Verdict::Fail,
                }
            }
        }
    }
    Verdict::Pass
}

/// Chords whose smoothing meets the hypothesis of the smoothing lemma: every
/// chord interleaved with it has its tail on the arc through the basepoint.
pub fn tails_outside(g: &BasedGaussDiagram, c: ChordId) -> bool {
    let info = g.chord(c).unwrap();
    let (x, y) = (info.tail.pos.min(info.head.pos), info.tail.pos.max(info.head.pos));
    let inside = |p: usize| x < p && p < y;
    g.chords().all(|(id, d)| id == c || inside(d.tail.pos) == inside(d.head.pos) || !inside(d.tail.pos))
}

/// Warping degree and smoothing identities on a knot diagram:
/// * warping degree 0 ⇒ every `<C_2n>`, `<C'_2n>` with n ≥ 1 vanishes, and
///   the determinant is 1 when colorable;
/// * for each modulus the knot is numberable for, smoothing a chord whose
///   crossers all have tails on the basepoint side gives `H` with
///   `<C_1, H> = 0`, `<C'_1, H> ≡ 0 mod p` and `<C_{2n-1}, H> = 0` for n ≥ 2.
pub fn warp_and_smoothing(g: &BasedGaussDiagram, moduli: &[u64]) -> Verdict {
    if !g.is_knot() {
        return Verdict::Excluded;
    }
    if g.warping_degree().unwrap() == 0 {
        for n in (2..=g.chord_count()).step_by(2) {
            for variant in [Variant::Ascending, Variant::Descending] {
                if conway_pairing(g, n, variant) != Ok(0) {
                    return Verdict::Fail;
                }
            }
        }
        if colorable(g) && determinant(g) != Ok(1) {
            return Verdict::Fail;
        }
    }
    let active: Vec<i64> =
        moduli.iter().copied().filter(|&p| g.is_mod_p_numberable(p).unwrap_or(false)).map(|p| p as i64).collect();
    if active.is_empty() {
        return Verdict::Pass;
    }
    for c in g.chord_ids().filter(|&c| tails_outside(g, c)).collect::<Vec<_>>() {
        let h = g.smooth(c).unwrap();
        if conway_pairing(&h, 1, Variant::Ascending) != Ok(0) {
            return Verdict::Fail;
        }
        let d1 = conway_pairing(&h, 1, Variant::Descending).unwrap();
        if active.iter().any(|&p| p != 0 && d1.rem_euclid(p) != 0 || p == 0 && d1 != 0) {
            return Verdict::Fail;
        }
        for n in (3..=h.chord_count()).step_by(2) {
            if conway_pairing(&h, n, Variant::Ascending) != Ok(0) {
                return Verdict::Fail;
            }
        }
    }
    Verdict::Pass
}

/// Two-component diagrams whose first circle passes over the second at every
/// crossing between them, has a self-crossing, and whose coloring matrix is
/// defined: the determinant is 0.
pub fn over_link(g: &BasedGaussDiagram) -> Verdict {
    if g.circle_count() != 2 {
        return Verdict::Excluded;
    }
    let inter_ok = g.chords().all(|(_, c)| c.tail.circle == c.head.circle || c.tail.circle == 0);
    let has_self = g.chords().any(|(_, c)| c.tail.circle == 0 && c.head.circle == 0);
    if !inter_ok || !has_self {
        return Verdict::Excluded;
    }
    match determinant(g) {
        Ok(d) => Verdict::from_bool(d == 0),
        Err(_) => Verdict::Excluded,
    }
}

/// Alexander numbering exists exactly when every index vanishes mod p, and
/// any numbering found satisfies the crossing rule; indices do not depend on
/// the basepoint.
pub fn numbering(g: &BasedGaussDiagram, moduli: &[u64]) -> Verdict {
    if !g.is_knot() {
        return Verdict::Excluded;
    }
    for &p in moduli {
        let predicted = g.is_mod_p_numberable(p).unwrap();
        match g.alexander_numbering(p) {
            Some(n) if predicted && n.satisfies(g) => {}
            None if !predicted => {}
            _ => return Verdict::Fail,
        }
    }
    let indices = g.indices().unwrap();
    Verdict::from_bool(g.basepoint_variants().iter().all(|h| h.indices().unwrap() == indices))
}

/// Every maximal minor of the coloring matrix has the same absolute value,
/// and every row sums to zero.
pub fn minors(g: &BasedGaussDiagram) -> Verdict {
    if !colorable(g) {
        return Verdict::Excluded;
    }
    let Ok(b) = crate::coloring::coloring_matrix(g) else { return Verdict::Fail };
    let rows_ok = (0..b.entries.rows()).all(|i| b.entries.row(i).iter().sum::<i64>() == 0);
    Verdict::from_bool(rows_ok && minor_independence_check(g) == Ok(true))
}

/// `det S+ - det S- = 2 det S0` for one bordered pair.
pub fn block(s0: &IntMatrix, x: &[i64], y: &[i64], a: i64) -> Verdict {
    Verdict::from_bool(skein_block_check(s0, x, y, a).unwrap_or(false))
}
