//! Conway combinations, the pairing, and the ascending/descending polynomials.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{traverse, ArrowDiagram, ArrowEnd, ArrowError};
use crate::combinat::perfect_matchings;
use crate::diagram::{BasedGaussDiagram, End};
use crate::poly::IntPolynomial;

/// Largest arrow count `conway_set` will enumerate.
pub const MAX_ENUMERATED_DEGREE: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Ascending,
    Descending,
}

impl Variant {
    fn first_end(self) -> End {
        match self {
            Variant::Ascending => End::Head,
            Variant::Descending => End::Tail,
        }
    }
}

/// All one-component ascending (or descending) arrow diagrams with a given
/// number of arrows: on one circle for an even count, on two for an odd one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConwaySet {
    pub degree: usize,
    pub variant: Variant,
    pub members: Vec<ArrowDiagram>,
}

impl ConwaySet {
    pub fn circles(&self) -> usize {
        circles_for(self.degree)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Sum of the pairings of every member with `g`.
    pub fn pairing(&self, g: &BasedGaussDiagram) -> Result<i64, ArrowError> {
        self.members.iter().map(|a| pairing(a, g)).sum()
    }
}

fn circles_for(degree: usize) -> usize {
    if degree.is_multiple_of(2) {
        1
    } else {
        2
    }
}

fn qualifies(words: &[Vec<ArrowEnd>], variant: Variant) -> bool {
    let t = traverse(words, |e| (e.arrow, e.end));
    t.is_one_component() && t.all_first_reached_at(variant.first_end())
}

/// Enumerates a Conway combination by brute force over all based arrow
/// diagrams with `n` arrows on `circles` circles.
pub fn conway_set(n: usize, circles: usize, variant: Variant) -> Result<ConwaySet, ArrowError> {
    if circles != circles_for(n) {
        return Err(ArrowError::Parity { arrows: n, circles });
    }
    if n > MAX_ENUMERATED_DEGREE {
        return Err(ArrowError::DegreeTooLarge(n));
    }
    let slots = 2 * n;
    let splits: Vec<usize> = if circles == 1 { vec![slots] } else { (0..=slots).collect() };
    let mut found = BTreeSet::new();
    for matching in perfect_matchings(slots) {
        for orient in 0u32..1 << n {
            let mut flat = vec![ArrowEnd { arrow: 0, end: End::Tail }; slots];
            for (a, &(i, j)) in matching.iter().enumerate() {
                let (ti, hi) = if orient >> a & 1 == 0 { (i, j) } else { (j, i) };
                flat[ti] = ArrowEnd { arrow: a, end: End::Tail };
                flat[hi] = ArrowEnd { arrow: a, end: End::Head };
            }
            for &k in &splits {
                let words = if circles == 1 { vec![flat.clone()] } else { vec![flat[..k].to_vec(), flat[k..].to_vec()] };
                if qualifies(&words, variant) {
                    found.insert(ArrowDiagram::new(words));
                }
            }
        }
    }
    Ok(ConwaySet { degree: n, variant, members: found.into_iter().collect() })
}

/// Endpoint words of `g` with chords renamed to their index in chord order.
fn indexed_words(g: &BasedGaussDiagram) -> (Vec<Vec<ArrowEnd>>, Vec<i64>) {
    let ids: Vec<u32> = g.chord_ids().collect();
    let words = g
        .words()
        .iter()
        .map(|w| w.iter().map(|e| ArrowEnd { arrow: ids.binary_search(&e.chord).unwrap(), end: e.end }).collect())
        .collect();
    let signs = ids.iter().map(|&c| g.sign(c).unwrap().value()).collect();
    (words, signs)
}

/// Calls `f(sub_words, sign_product)` for every `k`-element chord subset of `g`.
fn for_each_subdiagram(g: &BasedGaussDiagram, k: usize, mut f: impl FnMut(&[Vec<ArrowEnd>], i64)) {
    let (words, signs) = indexed_words(g);
    let mut keep = vec![false; signs.len()];
    for subset in (0..signs.len()).combinations(k) {
        keep.iter_mut().for_each(|x| *x = false);
        let mut sign = 1;
        for &i in &subset {
            keep[i] = true;
            sign *= signs[i];
        }
        let sub: Vec<Vec<ArrowEnd>> = words.iter().map(|w| w.iter().copied().filter(|e| keep[e.arrow]).collect()).collect();
        f(&sub, sign);
    }
}

/// `<A, G>`: signed count of based, order-preserving embeddings of the arrows
/// of `A` onto chords of `G`.
///
/// Each chord subset of the right size restricts to exactly one based arrow
/// diagram, so the homomorphisms are the subsets whose restriction is `A`.
pub fn pairing(a: &ArrowDiagram, g: &BasedGaussDiagram) -> Result<i64, ArrowError> {
    if a.circle_count() != g.circle_count() {
        return Err(ArrowError::CircleMismatch { pattern: a.circle_count(), diagram: g.circle_count() });
    }
    let mut total = 0;
    for_each_subdiagram(g, a.arrow_count(), |sub, sign| {
        if ArrowDiagram::new(sub.to_vec()) == *a {
            total += sign;
        }
    });
    Ok(total)
}

/// `<C_n, G>` (or `<C'_n, G>`) computed straight from the chord subsets of
/// `G`, without enumerating the Conway combination.
pub fn conway_pairing(g: &BasedGaussDiagram, n: usize, variant: Variant) -> Result<i64, ArrowError> {
    if g.circle_count() != circles_for(n) {
        return Err(ArrowError::CircleMismatch { pattern: circles_for(n), diagram: g.circle_count() });
    }
    let mut total = 0;
    for_each_subdiagram(g, n, |sub, sign| {
        if qualifies(sub, variant) {
            total += sign;
        }
    });
    Ok(total)
}

/// `sum_i <C_i, G> z^i` over the degrees matching the circle count (even
/// for knots, odd for two-component links), up to `max_degree`.
pub fn polynomial(g: &BasedGaussDiagram, variant: Variant, max_degree: usize) -> Result<IntPolynomial, ArrowError> {
    let start = match g.circle_count() {
        1 => 0,
        2 => 1,
        c => return Err(ArrowError::TooManyCircles(c)),
    };
    let top = max_degree.min(g.chord_count());
    let mut p = IntPolynomial::zero();
    for d in (start..=top).step_by(2) {
        p.add_term(d as u32, conway_pairing(g, d, variant)?);
    }
    Ok(p)
}

pub fn ascending_polynomial(g: &BasedGaussDiagram, max_degree: usize) -> Result<IntPolynomial, ArrowError> {
    polynomial(g, Variant::Ascending, max_degree)
}

pub fn descending_polynomial(g: &BasedGaussDiagram, max_degree: usize) -> Result<IntPolynomial, ArrowError> {
    polynomial(g, Variant::Descending, max_degree)
}

/// Coefficient of `z^2` of the ascending polynomial, reduced mod `modulus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct V2 {
    pub modulus: u64,
    /// `<C_2, G>` at the given basepoint.
    pub exact: i64,
    /// `exact` mod `modulus`, in `0..modulus` (equal to `exact` when the modulus is 0).
    pub residue: i64,
    pub certified: bool,
}

pub(crate) fn residue(x: i64, p: u64) -> i64 {
    if p == 0 {
        x
    } else {
        x.rem_euclid(p as i64)
    }
}

/// `v_2` of a knot diagram mod `p`.
///
/// With `certify`, the diagram must be mod-p numberable, and both the
/// ascending and descending coefficients at every basepoint are checked to
/// agree mod `p` before the value is returned.
pub fn v2(g: &BasedGaussDiagram, p: u64, certify: bool) -> Result<V2, ArrowError> {
    g.require_knot()?;
    let exact = conway_pairing(g, 2, Variant::Ascending)?;
    let value = residue(exact, p);
    if certify {
        if !g.is_mod_p_numberable(p)? {
            return Err(ArrowError::NotNumberable(p));
        }
        let mut residues = Vec::new();
        for h in g.basepoint_variants() {
            for variant in [Variant::Ascending, Variant::Descending] {
                residues.push(residue(conway_pairing(&h, 2, variant)?, p));
            }
        }
        if residues.iter().any(|&r| r != value) {
            return Err(ArrowError::CertificationFailed { modulus: p, residues });
        }
    }
    Ok(V2 { modulus: p, exact, residue: value, certified: certify })
}
