//! Classical diagrams from braid closures against the skein-recursion
//! Conway oracle.

mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vknot::arrow::{ascending_polynomial, descending_polynomial, polynomial, Variant};
use vknot::{determinant, BasedGaussDiagram};

use common::{braid_closure, skein_conway};

/// 20 classical diagrams with at most 8 crossings.
pub fn classical_codes() -> Vec<(String, BasedGaussDiagram)> {
    let named: Vec<(&str, usize, Vec<i32>)> = vec![
        ("unknot (one kink)", 2, vec![1]),
        ("unknot (two strands)", 3, vec![1, -2]),
        ("trefoil", 2, vec![1, 1, 1]),
        ("left trefoil", 2, vec![-1, -1, -1]),
        ("figure-eight", 3, vec![1, -2, 1, -2]),
        ("5_1", 2, vec![1, 1, 1, 1, 1]),
        ("5_2", 3, vec![1, 1, 1, 2, -1, 2]),
        ("6_1", 4, vec![1, 1, 2, -1, -3, 2, -3]),
        ("6_2", 3, vec![1, 1, 1, -2, 1, -2]),
        ("6_3", 3, vec![1, 1, -2, 1, -2, -2]),
        ("7_1", 2, vec![1; 7]),
        ("granny", 3, vec![1, 1, 1, 2, 2, 2]),
        ("square", 3, vec![1, 1, 1, -2, -2, -2]),
        ("8_19", 3, vec![1, 2, 1, 2, 1, 2, 1, 2]),
        ("8_20", 3, vec![1, 1, 1, -2, -1, -1, -1, -2]),
    ];
    let mut out: Vec<(String, BasedGaussDiagram)> =
        named.into_iter().map(|(n, s, w)| (n.to_string(), braid_closure(s, &w))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    while out.len() < 20 {
        let strands = rng.gen_range(2..=4);
        let len = rng.gen_range(2..=8);
        let word: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..strands as i32);
                if rng.gen() { g } else { -g }
            })
            .collect();
        let g = braid_closure(strands, &word);
        if g.is_knot() {
            out.push((format!("random braid {word:?}"), g));
        }
    }
    out
}

#[test]
fn polynomials_match_the_skein_oracle() {
    for (name, g) in classical_codes() {
        assert!(g.chord_count() <= 8, "{name}");
        let oracle = skein_conway(&g);
        let asc = ascending_polynomial(&g, 8).unwrap();
        let des = descending_polynomial(&g, 8).unwrap();
        assert_eq!(asc, oracle, "{name} {g}");
        assert_eq!(des, oracle, "{name} {g}");
        for h in g.basepoint_variants() {
            assert_eq!(ascending_polynomial(&h, 8).unwrap(), oracle, "{name} at {h}");
            assert_eq!(descending_polynomial(&h, 8).unwrap(), oracle, "{name} at {h}");
        }
    }
}

#[test]
fn classical_indices_vanish_and_determinant_is_alexander_at_minus_one() {
    for (name, g) in classical_codes() {
        assert!(g.indices().unwrap().iter().all(|&(_, i)| i == 0), "{name}");
        // For knots, |Δ(-1)| = |∇(2i)| = |Σ (-4)^k a_2k|.
        let oracle = skein_conway(&g);
        let delta: i128 = oracle.terms().map(|(d, c)| c as i128 * (-4i128).pow(d / 2)).sum();
        assert_eq!(determinant(&g).unwrap() as i128, delta.abs(), "{name}");
    }
}

#[test]
fn two_component_closures_match_the_oracle() {
    for (s, w) in [(2, vec![1, 1]), (2, vec![1, 1, 1, 1]), (2, vec![-1, -1]), (3, vec![1, 2, 1, 2, 2, -1])] {
        let g = braid_closure(s, &w);
        if g.circle_count() != 2 {
            continue;
        }
        let oracle = skein_conway(&g);
        for variant in [Variant::Ascending, Variant::Descending] {
            assert_eq!(polynomial(&g, variant, 8).unwrap(), oracle, "{g} {variant:?}");
        }
    }
}

#[test]
fn oracle_sanity() {
    let hopf = braid_closure(2, &[1, 1]);
    assert_eq!(hopf.circle_count(), 2);
    assert_eq!(skein_conway(&hopf).coefficient(1), 1);
    assert_eq!(skein_conway(&braid_closure(3, &[1, -2, 1, -2])).to_string(), "1 - z^2");
}
