//! The ten acceptance criteria. Each test prints one `PASS`/`FAIL` line.

mod common;

use std::time::{Duration, Instant};

use itertools::Itertools;
use vknot::arrow::{ascending_polynomial, conway_pairing, conway_set, descending_polynomial, v2, Variant};
use vknot::catalog;
use vknot::coloring::{all_minor_determinants, coloring_matrix};
use vknot::harness::{enumerate_diagrams, run_check, CheckName, CheckReport, SweepConfig};
use vknot::matrix::{mock_det, skein_block_check};
use vknot::{determinant, parse_gauss_code, IntMatrix};

use common::{braid_closure, skein_conway};

fn verdict(n: u32, title: &str, limit: Duration, body: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let outcome = match outcome {
        Ok(detail) if elapsed <= limit => Ok(detail),
        Ok(detail) => Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}")),
        Err(e) => Err(e),
    };
    match &outcome {
        Ok(detail) => println!("criterion {n:>2} PASS  {title}: {detail} ({elapsed:.2?})"),
        Err(e) => println!("criterion {n:>2} FAIL  {title}: {e} ({elapsed:.2?})"),
    }
    assert!(outcome.is_ok(), "criterion {n} failed: {}", outcome.unwrap_err());
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sweep(check: CheckName, config: &SweepConfig) -> Result<String, String> {
    let r: CheckReport = run_check(check, config);
    ensure(r.population > 0, || format!("{check}: empty population"))?;
    ensure(r.passes + r.failures == r.population, || format!("{check}: counts do not add up"))?;
    ensure(r.is_clean(), || format!("{check}: {} counterexamples, first {:?}", r.failures, r.counterexamples.first()))?;
    Ok(format!("{} inputs, 0 counterexamples", r.population))
}

/// Same multiset of rows after some column permutation.
fn equal_up_to_permutation(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let n = a.first().map_or(0, Vec::len);
    if a.len() != b.len() || b.iter().any(|r| r.len() != n) {
        return false;
    }
    let sorted = |m: &[Vec<i64>]| m.iter().cloned().sorted().collect::<Vec<_>>();
    let target = sorted(b);
    (0..n).permutations(n).any(|p| {
        let permuted: Vec<Vec<i64>> = a.iter().map(|r| p.iter().map(|&j| r[j]).collect()).collect();
        sorted(&permuted) == target
    })
}

#[test]
fn criterion_01_coloring_matrix_of_4_90() {
    verdict(1, "4.90 coloring matrix and determinant", Duration::from_secs(1), || {
        let printed = vec![vec![1, -1, 0, 0], vec![1, 0, 0, -1], vec![2, 0, -1, -1], vec![2, -1, -1, 0]];
        let entry = catalog::find("4.90").ok_or("4.90 missing from the catalog")?;
        let b = coloring_matrix(&entry.diagram).map_err(|e| e.to_string())?;
        ensure(equal_up_to_permutation(&b.entries.to_rows(), &printed), || format!("matrix {:?}", b.entries.to_rows()))?;
        let det = determinant(&entry.diagram).map_err(|e| e.to_string())?;
        ensure(det == 1, || format!("det {det}"))?;
        let minors = all_minor_determinants(&IntMatrix::from_rows(&printed)).map_err(|e| e.to_string())?;
        ensure(minors.iter().all(|&m| m == 1), || format!("printed minors {minors:?}"))?;
        Ok("matrix matches up to permutation, det 1".into())
    });
}

#[test]
fn criterion_02_6_87548() {
    verdict(2, "6.87548 z^2 coefficients, mock Seifert det, classification", Duration::from_secs(5), || {
        let entry = catalog::find("6.87548").ok_or("6.87548 missing from the catalog")?;
        let g = &entry.diagram;
        for h in g.basepoint_variants() {
            let a = ascending_polynomial(&h, 6).map_err(|e| e.to_string())?.coefficient(2);
            let d = descending_polynomial(&h, 6).map_err(|e| e.to_string())?.coefficient(2);
            ensure(a == -2 && d == -2, || format!("at {h}: asc {a}, des {d}"))?;
        }
        let s = IntMatrix::from_rows(&[vec![-2, -1, 0, 0], vec![-1, 2, 1, 0], vec![0, -1, 0, 1], vec![0, 0, 1, 2]]);
        let mock = mock_det(&s).map_err(|e| e.to_string())?;
        ensure(mock == 1, || format!("mock det {mock}"))?;
        let det = determinant(g).map_err(|e| e.to_string())?;
        ensure(det == mock, || format!("coloring det {det} vs mock det {mock}"))?;
        let v = v2(g, 2, true).map_err(|e| e.to_string())?;
        ensure(v.residue == 0 && [1, 7].contains(&(det % 8)), || format!("v2 {} with det {det}", v.residue))?;
        Ok(format!("<C2> = <C'2> = -2 at all {} basepoints, |det S| = 1, v2 = 0, det ≡ ±1 mod 8", g.word(0).len()))
    });
}

#[test]
fn criterion_03_classical_sanity() {
    verdict(3, "classical knots against the skein oracle", Duration::from_secs(30), || {
        let table = [("unknot", 1u128, 0i64), ("trefoil", 3, 1), ("figure-eight", 5, -1)];
        for (name, det, c2) in table {
            let g = &catalog::find(name).ok_or(format!("{name} missing"))?.diagram;
            let d = determinant(g).map_err(|e| e.to_string())?;
            let c = conway_pairing(g, 2, Variant::Ascending).map_err(|e| e.to_string())?;
            ensure(d == det && c == c2, || format!("{name}: det {d}, v2 {c}"))?;
        }
        let words: Vec<(usize, Vec<i32>)> = vec![
            (2, vec![1]),
            (3, vec![1, -2]),
            (2, vec![1, 1, 1]),
            (2, vec![-1, -1, -1]),
            (3, vec![1, -2, 1, -2]),
            (2, vec![1; 5]),
            (3, vec![1, 1, 1, 2, -1, 2]),
            (4, vec![1, 1, 2, -1, -3, 2, -3]),
            (3, vec![1, 1, 1, -2, 1, -2]),
            (3, vec![1, 1, -2, 1, -2, -2]),
            (2, vec![1; 7]),
            (3, vec![1, 1, 1, 2, 2, 2]),
            (3, vec![1, 1, 1, -2, -2, -2]),
            (3, vec![1, 2, 1, 2, 1, 2, 1, 2]),
            (3, vec![1, 1, 1, -2, -1, -1, -1, -2]),
            (3, vec![-1, -1, 2, -1, 2, 2]),
            (4, vec![1, 2, 3, -2, -1, 3, 2]),
            (3, vec![1, 1, 2, 2, -1, 2]),
            (4, vec![1, -2, 3, 1, -2, 3, -2]),
            (3, vec![1, -2, 1, 1, -2, -2]),
        ];
        let mut count = 0;
        for (strands, w) in &words {
            let g = braid_closure(*strands, w);
            if !g.is_knot() {
                return Err(format!("braid {w:?} closes to {} components", g.circle_count()));
            }
            ensure(g.chord_count() <= 8, || format!("{g} has too many crossings"))?;
            let oracle = skein_conway(&g);
            let asc = ascending_polynomial(&g, 8).map_err(|e| e.to_string())?;
            let des = descending_polynomial(&g, 8).map_err(|e| e.to_string())?;
            ensure(asc == oracle && des == oracle, || format!("{g}: asc {asc}, des {des}, oracle {oracle}"))?;
            count += 1;
        }
        ensure(count == 20, || format!("{count} codes"))?;
        Ok("det/v2 of unknot, trefoil, figure-eight; asc = des = oracle on 20 braid closures".into())
    });
}

#[test]
fn criterion_04_basepoint_independence_sweep() {
    verdict(4, "<C2> mod p basepoint-independent and equal to <C'2> (p = 2, 3)", Duration::from_secs(120), || {
        sweep(CheckName::Main, &SweepConfig { max_chords: 4, moduli: vec![2, 3], ..SweepConfig::default() })
    });
}

#[test]
fn criterion_05_corollary_sweep() {
    verdict(5, "det ≡ ±(1 + 4 v2) mod 8", Duration::from_secs(300), || {
        sweep(CheckName::CorDet, &SweepConfig { max_chords: 4, ..SweepConfig::default() })
    });
}

#[test]
fn criterion_06_det_vs_ascending_sweep() {
    verdict(6, "det ≡ ±∇_asc(2) mod 8", Duration::from_secs(300), || {
        sweep(CheckName::DetAsc, &SweepConfig { max_chords: 4, ..SweepConfig::default() })
    });
}

#[test]
fn criterion_07_skein_lemmas() {
    verdict(7, "pairing skein identities on random diagrams", Duration::from_secs(120), || {
        let config = SweepConfig { samples: 1000, sample_max_chords: 8, ..SweepConfig::default() };
        sweep(CheckName::Skein, &config)
    });
}

#[test]
fn criterion_08_block_identity() {
    verdict(8, "det S+ - det S- = 2 det S0", Duration::from_secs(10), || {
        let r = sweep(CheckName::Block, &SweepConfig { samples: 1000, ..SweepConfig::default() })?;
        let s0 = IntMatrix::from_rows(&[vec![2]]);
        ensure(skein_block_check(&s0, &[0], &[0], 0) == Ok(true), || "1x1 example".into())?;
        ensure(skein_block_check(&IntMatrix::zeros(0, 0), &[], &[], 5) == Ok(true), || "empty S0".into())?;
        Ok(r)
    });
}

#[test]
fn criterion_09_descending_diagrams() {
    verdict(9, "warping degree 0 ⇒ pairings vanish and det 1", Duration::from_secs(60), || {
        let (mut seen, mut colorable) = (0, 0);
        for k in 0..=4 {
            for g in enumerate_diagrams(k, false).filter(|g| g.warping_degree().unwrap() == 0) {
                seen += 1;
                for n in (2..=k).step_by(2) {
                    for variant in [Variant::Ascending, Variant::Descending] {
                        let c = conway_pairing(&g, n, variant).map_err(|e| e.to_string())?;
                        ensure(c == 0, || format!("{g}: <C_{n}> {variant:?} = {c}"))?;
                    }
                }
                if g.is_checkerboard_colorable().unwrap() {
                    colorable += 1;
                    let d = determinant(&g).map_err(|e| e.to_string())?;
                    ensure(d == 1, || format!("{g}: det {d}"))?;
                }
            }
        }
        Ok(format!("{seen} descending diagrams ({colorable} colorable)"))
    });
}

#[test]
fn criterion_10_conway_combinations() {
    verdict(10, "|C2| = |C'2| = |C1| = |C'1| = 1 with the expected members", Duration::from_secs(10), || {
        let expected = [
            (2, 1, Variant::Ascending, "U1O2O1U2"),
            (2, 1, Variant::Descending, "O1U2U1O2"),
            (1, 2, Variant::Ascending, "U1;O1"),
            (1, 2, Variant::Descending, "O1;U1"),
        ];
        for (n, circles, variant, code) in expected {
            let set = conway_set(n, circles, variant).map_err(|e| e.to_string())?;
            let members: Vec<String> = set.members.iter().map(|a| a.to_code()).collect();
            ensure(members == [code], || format!("C_{n} {variant:?}: {members:?}"))?;
        }
        let trefoil = parse_gauss_code("O1+U2+O3+U1+O2+U3+").map_err(|e| e.to_string())?;
        let c2 = conway_set(2, 1, Variant::Ascending).map_err(|e| e.to_string())?;
        let via_set = c2.pairing(&trefoil).map_err(|e| e.to_string())?;
        ensure(via_set == 1, || format!("<C2, trefoil> = {via_set}"))?;
        Ok("each set has the single expected member".into())
    });
}
