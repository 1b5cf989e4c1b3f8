//! `vknot`: invariants of virtual knots from signed Gauss codes.
//!
//! Exit status: 0 on success, 1 on unreadable input (bad code, bad matrix,
//! unknown name), 2 when a precondition fails (e.g. the determinant of a
//! diagram that is not checkerboard colorable), 3 when a verification sweep
//! or catalog check finds a counterexample.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use vknot::arrow::{conway_set, polynomial, v2, Variant};
use vknot::catalog::{self, CatalogEntry};
use vknot::coloring::{coloring_matrix, determinant};
use vknot::harness::{self, CheckName, SweepConfig};
use vknot::{parse_gauss_code, BasedGaussDiagram, IntMatrix};

#[derive(Parser)]
#[command(name = "vknot", version, about = "Invariants of virtual knots and links given by signed Gauss codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Index, colorability, warping degree, polynomials, v2 and determinant.
    Invariants {
        /// A signed Gauss code such as "O1+U2+O3+U1+O2+U3+", or a catalog name.
        knot: String,
        /// Moduli to test numberability for (repeatable).
        #[arg(short = 'p', long = "modulus", default_values_t = [0u64, 2, 3])]
        moduli: Vec<u64>,
        /// Highest polynomial degree (defaults to the chord count).
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run verification sweeps (all of them when none is named).
    Verify {
        /// cor-det, det-asc, main, skein, warp-smooth, over-link, block, numbering, minors.
        checks: Vec<CheckName>,
        #[command(flatten)]
        sweep: SweepArgs,
        #[arg(long)]
        json: bool,
    },
    /// Print every based one-circle diagram with k chords, one code per line.
    Enumerate {
        k: usize,
        /// One diagram per rotation class.
        #[arg(long)]
        canonical: bool,
        /// Keep only diagrams that are mod-p numberable for this p.
        #[arg(short = 'p', long = "modulus")]
        modulus: Option<u64>,
        /// Keep only diagrams with this warping degree.
        #[arg(long)]
        warping: Option<usize>,
    },
    /// Print the members of a Conway combination as arrow codes.
    Conway {
        /// Number of arrows (even: one circle, odd: two).
        n: usize,
        #[arg(long)]
        descending: bool,
    },
    /// Coloring matrix of a diagram, with its provenance header.
    Matrix { knot: String },
    /// Determinant of an integer matrix read from a file (or stdin with "-").
    Det {
        file: PathBuf,
        /// Delete the last row and column first (the knot determinant of a coloring matrix).
        #[arg(long)]
        minor: bool,
    },
    /// List the catalog and re-derive its expected values.
    Catalog {
        /// Catalog file to use instead of the built-in one.
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 4)]
    max_chords: usize,
    /// Moduli for the numbering-dependent checks (repeatable).
    #[arg(short = 'p', long = "modulus", default_values_t = [2u64, 3])]
    moduli: Vec<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    sample_max_chords: Option<usize>,
    /// Sweep one diagram per rotation class.
    #[arg(long)]
    canonical: bool,
}

impl SweepArgs {
    fn config(&self, checks: &[CheckName]) -> SweepConfig {
        let d = SweepConfig::default();
        SweepConfig {
            max_chords: self.max_chords,
            moduli: self.moduli.clone(),
            seed: self.seed.unwrap_or(d.seed),
            samples: self.samples.unwrap_or(d.samples),
            sample_max_chords: self.sample_max_chords.unwrap_or(d.sample_max_chords),
            workers: self.workers.unwrap_or(d.workers),
            canonicalize: self.canonical,
            checks: if checks.is_empty() { d.checks } else { checks.to_vec() },
        }
    }
}

/// How a command ended when it did not simply succeed.
enum Failure {
    Input(anyhow::Error),
    Precondition,
    Counterexamples,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

fn resolve(knot: &str) -> anyhow::Result<(Option<&'static CatalogEntry>, BasedGaussDiagram)> {
    if let Some(entry) = catalog::find(knot) {
        return Ok((Some(entry), entry.diagram.clone()));
    }
    let g = parse_gauss_code(knot).with_context(|| format!("{knot:?} is neither a catalog name nor a valid Gauss code"))?;
    Ok((None, g))
}

fn invariants(knot: &str, moduli: &[u64], degree: Option<usize>, as_json: bool) -> Result<(), Failure> {
    let (entry, g) = resolve(knot)?;
    let mut refused = false;
    let mut out = serde_json::Map::new();
    let mut lines: Vec<String> = Vec::new();
    let mut put = |key: &str, value: Value, text: String| {
        out.insert(key.to_string(), value);
        lines.push(format!("{key:<18}{text}"));
    };
    if let Some(e) = entry {
        put("name", json!(e.name), e.name.clone());
    }
    put("code", json!(g.to_code()), g.to_code());
    put("circles", json!(g.circle_count()), g.circle_count().to_string());
    put("chords", json!(g.chord_count()), g.chord_count().to_string());

    if g.is_knot() {
        let idx = g.indices().expect("knot");
        let text = idx.iter().map(|(c, i)| format!("{c}:{i}")).collect::<Vec<_>>().join(" ");
        put("index", json!(idx.iter().map(|(c, i)| json!({"chord": c, "index": i})).collect::<Vec<_>>()), text);
        for &p in moduli {
            let yes = g.is_mod_p_numberable(p).expect("knot");
            put(&format!("mod{p}_numberable"), json!(yes), if yes { "yes".into() } else { "no".into() });
        }
        let w = g.warping_degree().expect("knot");
        put("warping_degree", json!(w), w.to_string());
    } else {
        for &p in moduli {
            let yes = g.alexander_numbering(p).is_some();
            put(&format!("mod{p}_numberable"), json!(yes), if yes { "yes".into() } else { "no".into() });
        }
    }

    if g.circle_count() <= 2 {
        let top = degree.unwrap_or(g.chord_count());
        for (key, variant) in [("ascending", Variant::Ascending), ("descending", Variant::Descending)] {
            let poly = polynomial(&g, variant, top).map_err(|e| Failure::Input(e.into()))?;
            let coeffs: Value = poly.terms().map(|(d, c)| (d.to_string(), json!(c))).collect::<serde_json::Map<_, _>>().into();
            put(key, coeffs, poly.to_string());
        }
    }

    let mut v2_mod2 = None;
    if g.is_knot() {
        let colorable = g.is_checkerboard_colorable().expect("knot");
        let v = v2(&g, 2, colorable).map_err(|e| Failure::Input(e.into()))?;
        v2_mod2 = colorable.then_some(v.residue);
        let note = if colorable { "certified over all basepoints" } else { "basepoint-dependent: not checkerboard colorable" };
        put(
            "v2",
            json!({"exact": v.exact, "mod2": v.residue, "certified": v.certified}),
            format!("{} (mod 2: {}; {note})", v.exact, v.residue),
        );
    }

    match determinant(&g) {
        Ok(d) => {
            put("determinant", json!(d.to_string()), d.to_string());
            let class = match d % 8 {
                1 | 7 => Some("±1"),
                3 | 5 => Some("±3"),
                _ => None,
            };
            if let Some(class) = class {
                let consistent = v2_mod2.map(|v| (v == 0) == (class == "±1"));
                let text = match consistent {
                    Some(true) => format!("{class} mod 8 (consistent with v2)"),
                    Some(false) => format!("{class} mod 8 (INCONSISTENT with v2)"),
                    None => format!("{class} mod 8"),
                };
                put("class_mod8", json!({"class": class, "consistent_with_v2": consistent}), text);
            }
        }
        Err(e) => {
            refused = true;
            put("determinant", json!({"refused": e.to_string()}), format!("refused: {e}"));
        }
    }

    if as_json {
        println!("{}", serde_json::to_string_pretty(&Value::Object(out)).expect("serializable"));
    } else {
        for l in lines {
            println!("{l}");
        }
    }
    if refused {
        Err(Failure::Precondition)
    } else {
        Ok(())
    }
}

fn verify(checks: &[CheckName], sweep: &SweepArgs, as_json: bool) -> Result<(), Failure> {
    let config = sweep.config(checks);
    let reports = harness::run(&config);
    if as_json {
        println!("{}", serde_json::to_string_pretty(&reports).expect("serializable"));
    } else {
        for r in &reports {
            println!("{r}");
        }
    }
    if reports.iter().all(|r| r.is_clean()) {
        Ok(())
    } else {
        Err(Failure::Counterexamples)
    }
}

fn enumerate(k: usize, canonical: bool, modulus: Option<u64>, warping: Option<usize>) -> Result<(), Failure> {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    for g in harness::enumerate_diagrams(k, canonical) {
        if let Some(p) = modulus {
            if !g.is_mod_p_numberable(p).expect("knot") {
                continue;
            }
        }
        if warping.is_some_and(|w| g.warping_degree().expect("knot") != w) {
            continue;
        }
        if writeln!(out, "{g}").is_err() {
            break;
        }
    }
    Ok(())
}

fn conway(n: usize, descending: bool) -> Result<(), Failure> {
    let variant = if descending { Variant::Descending } else { Variant::Ascending };
    let circles = if n.is_multiple_of(2) { 1 } else { 2 };
    let set = conway_set(n, circles, variant).map_err(|e| Failure::Input(e.into()))?;
    for a in &set.members {
        println!("{a}");
    }
    Ok(())
}

fn matrix(knot: &str) -> Result<(), Failure> {
    let (_, g) = resolve(knot)?;
    match coloring_matrix(&g) {
        Ok(b) => {
            print!("{}", b.to_text());
            Ok(())
        }
        Err(e) => {
            eprintln!("error: {e}");
            Err(Failure::Precondition)
        }
    }
}

fn det(file: &PathBuf, minor: bool) -> Result<(), Failure> {
    let text = if file.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?
    };
    let mut m: IntMatrix = text.parse().map_err(|e| anyhow!("{e}"))?;
    if minor {
        if m.rows() == 0 || m.cols() == 0 {
            return Err(anyhow!("--minor needs a non-empty matrix").into());
        }
        m = m.minor(m.rows() - 1, m.cols() - 1);
    }
    match m.det() {
        Ok(d) => {
            println!("det  {d}");
            println!("|det| {}", d.unsigned_abs());
            Ok(())
        }
        Err(e) => {
            eprintln!("error: {e}");
            Err(Failure::Precondition)
        }
    }
}

fn show_catalog(file: &Option<PathBuf>) -> Result<(), Failure> {
    let loaded;
    let entries: &[CatalogEntry] = match file {
        Some(path) => {
            loaded = catalog::load_catalog(path).map_err(|e| anyhow!("{e}"))?;
            &loaded
        }
        None => catalog::builtin(),
    };
    let mut bad = 0;
    for e in entries {
        let mismatches = e.verify();
        let status = if mismatches.is_empty() { "ok" } else { "MISMATCH" };
        println!("{:<16}{:<9}{}", e.name, status, if e.code.is_empty() { "(no chords)" } else { &e.code });
        for m in &mismatches {
            println!("    {m}");
        }
        bad += mismatches.len();
    }
    if bad == 0 {
        Ok(())
    } else {
        Err(Failure::Counterexamples)
    }
}

fn main() -> ExitCode {
    // Usage errors are input errors (1); clap's own default of 2 is reserved.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::Invariants { knot, moduli, degree, json } => invariants(knot, moduli, *degree, *json),
        Command::Verify { checks, sweep, json } => verify(checks, sweep, *json),
        Command::Enumerate { k, canonical, modulus, warping } => enumerate(*k, *canonical, *modulus, *warping),
        Command::Conway { n, descending } => conway(*n, *descending),
        Command::Matrix { knot } => matrix(knot),
        Command::Det { file, minor } => det(file, *minor),
        Command::Catalog { file } => show_catalog(file),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Precondition) => ExitCode::from(2),
        Err(Failure::Counterexamples) => ExitCode::from(3),
    }
}
