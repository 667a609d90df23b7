//! Command-line front-end.
//!
//! Exit codes: 0 success, 2 invalid input (including malformed decks),
//! 3 a failed exact identity or assertion, 4 a deck that no collection of
//! graphs realizes.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use edgedeck_core::algebra::Identity;
use edgedeck_core::arith::pair_count;
use edgedeck_core::deck::{edge_deck, modified_deck, perturbed_deck};
use edgedeck_core::johnson::{
    intertwine_check, k_edge_eigenvalue, minus_m_criterion, search_vanishing, verify_spectrum,
    JohnsonParams, DEFAULT_SIZE_GUARD,
};
use edgedeck_core::reconstruct::{edge_deck_from_modified, kernel_report, reconstruct_from_delta1};
use edgedeck_core::{Engine, Limits, MultiVector, OperatorKind};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::graph6;
use crate::json::{self, FormatError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_ASSERTION: i32 = 3;
pub const EXIT_NOT_REALIZABLE: i32 = 4;

/// Seed used by `verify --identity lovasz` when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser, Debug)]
#[command(
    name = "edgedeck",
    version,
    about = "Exact edge-deck operators, reconstruction and Johnson spectra"
)]
pub struct Cli {
    /// Output format; reconstruct and scan default to json, everything else to text.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Allow seven-vertex graphs (slow: 5040 relabelings per canonical form).
    #[arg(long = "allow-n7", global = true)]
    pub allow_n7: bool,

    /// Largest order C(N, m) of an explicit Johnson matrix.
    #[arg(long, global = true, env = "EDGEDECK_SIZE_GUARD", default_value_t = DEFAULT_SIZE_GUARD)]
    pub size_guard: usize,

    /// Write the result to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<std::path::PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum DeckKind {
    Edge,
    Perturbed,
    Modified,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    Delta,
    Perturbed,
    Edge,
    Lift,
}

impl From<MatrixKind> for OperatorKind {
    fn from(k: MatrixKind) -> Self {
        match k {
            MatrixKind::Delta => OperatorKind::Delta,
            MatrixKind::Perturbed => OperatorKind::Perturbed,
            MatrixKind::Edge => OperatorKind::EdgeDeck,
            MatrixKind::Lift => OperatorKind::Lift,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentityArg {
    DeckSum,
    Recursion,
    Inversion,
    DeltaPolynomial,
    LkPolynomial,
    Intertwine,
    Kernel,
    Lovasz,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the isomorphism classes of m-edge graphs on n vertices (graph6, ascending canonical code).
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Print a deck of one graph as a multiset of classes.
    Deck {
        /// The host graph in graph6.
        graph: String,
        #[arg(long, value_enum)]
        kind: DeckKind,
        #[arg(long)]
        i: usize,
    },
    /// Print an operator matrix over the class catalogs.
    Matrix {
        #[arg(long, value_enum)]
        kind: MatrixKind,
        #[arg(long)]
        n: usize,
        /// Edge count of the columns (of the rows for `lift`).
        #[arg(long)]
        m: usize,
        #[arg(long)]
        i: usize,
    },
    /// Check operator identities exactly for every m (or one m) on n vertices.
    Verify {
        #[arg(long, value_enum)]
        identity: IdentityArg,
        #[arg(long)]
        n: usize,
        /// Restrict to one edge count.
        #[arg(long)]
        m: Option<usize>,
        /// Largest deck index checked.
        #[arg(long, default_value_t = 4)]
        max_index: usize,
        /// Seed for randomized checks.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random collections per edge count for `lovasz`.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Build the one-edge deck from a modified one-deck given as JSON.
    Reconstruct {
        /// Deck document {"n","m","r","multiset"}; `-` reads standard input.
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Closed-form spectrum of the k-edge operator on labelled m-subsets, checked by annihilation.
    Spectrum {
        #[arg(long = "N")]
        ground: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
    /// Search for zeros of the closed-form eigenvalue where 2m - k + 1 > N; writes JSON lines.
    Scan {
        #[arg(long = "Nmax")]
        ground_max: usize,
        #[arg(long = "kmax")]
        k_max: usize,
        /// Emit every evaluated tuple, not only the zeros.
        #[arg(long)]
        all: bool,
        /// Refuse to run when more tuples than this would be evaluated.
        #[arg(long, default_value_t = 5_000_000)]
        budget: usize,
    },
}

/// A failed command and its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }

    fn assertion(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_ASSERTION,
            message: message.into(),
        }
    }
}

impl From<edgedeck_core::Error> for Failure {
    fn from(e: edgedeck_core::Error) -> Self {
        use edgedeck_core::Error::*;
        let code = match e {
            NotRealizable(_) => EXIT_NOT_REALIZABLE,
            InexactDivision(_) | FormulaMismatch { .. } | AssertionFailed(_) => EXIT_ASSERTION,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Core(inner) => inner.into(),
            other => Failure::invalid(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::invalid(format!("i/o error: {e}"))
    }
}

/// What a command produced: text or JSON documents, plus an exit status for
/// reports that completed but contain failures.
struct Outcome {
    body: String,
    code: i32,
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn multiset_lines(v: &MultiVector) -> String {
    let mut s = String::new();
    for (idx, count) in v.counts().iter().enumerate() {
        if *count != BigInt::from(0) {
            s.push_str(&format!(
                "{} ×{count}\n",
                graph6::encode(&v.catalog().graph(idx))
            ));
        }
    }
    s
}

fn check_m(n: usize, m: usize) -> Result<(), Failure> {
    let total = pair_count(n);
    if m > total {
        return Err(Failure::invalid(format!(
            "m = {m} exceeds C(n,2) = {total} for n = {n}"
        )));
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(
    args: I,
    input: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, input, out, err),
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            code
        }
    }
}

pub fn run(cli: &Cli, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let limits = if cli.allow_n7 {
        let _ = writeln!(
            err,
            "warning: seven-vertex graphs enabled; each canonical form tries 5040 relabelings and large catalogs can take minutes"
        );
        Limits::extended()
    } else {
        Limits::default()
    };
    let mut engine = Engine::with_limits(limits);
    let result = dispatch(cli, &mut engine, input);
    match result {
        Ok(outcome) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, outcome.body.as_bytes()),
                None => out.write_all(outcome.body.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return EXIT_INVALID;
            }
            outcome.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, engine: &mut Engine, input: &mut dyn Read) -> Result<Outcome, Failure> {
    let json_default = matches!(
        cli.command,
        Command::Reconstruct { .. } | Command::Scan { .. }
    );
    let format = cli.format.unwrap_or(if json_default {
        Format::Json
    } else {
        Format::Text
    });
    let ok = |body: String| {
        Ok(Outcome {
            body,
            code: EXIT_OK,
        })
    };
    match &cli.command {
        Command::Enumerate { n, m } => {
            engine.canonicalizer(*n)?;
            check_m(*n, *m)?;
            let cat = engine.catalog(*n, *m)?;
            match format {
                Format::Json => ok(pretty(&json::catalog_to_json(&cat))),
                Format::Text => ok((0..cat.len())
                    .map(|k| graph6::encode(&cat.graph(k)) + "\n")
                    .collect()),
            }
        }
        Command::Deck { graph, kind, i } => {
            let g = graph6::decode(graph)
                .map_err(|e| Failure::invalid(format!("graph {graph:?}: {e}")))?;
            let deck = match kind {
                DeckKind::Edge => edge_deck(engine, &g, *i)?,
                DeckKind::Perturbed => perturbed_deck(engine, &g, *i)?,
                DeckKind::Modified => modified_deck(engine, &g, *i)?,
            };
            match format {
                Format::Json => ok(pretty(&json::deck_to_json(&deck, 1))),
                Format::Text => ok(multiset_lines(&deck)),
            }
        }
        Command::Matrix { kind, n, m, i } => {
            engine.canonicalizer(*n)?;
            check_m(*n, *m)?;
            let op = engine.operator((*kind).into(), *n, *m, *i)?;
            match format {
                Format::Json => ok(pretty(&json::matrix_to_json(&op))),
                Format::Text => {
                    let mut s = format!(
                        "{} i={}: rows {} x cols {}\n",
                        op.kind.name(),
                        op.depth,
                        op.rows.key(),
                        op.cols.key()
                    );
                    for r in 0..op.entries.rows() {
                        let row: Vec<String> =
                            op.entries.row(r).iter().map(|x| x.to_string()).collect();
                        s.push_str(&row.join(" "));
                        s.push('\n');
                    }
                    ok(s)
                }
            }
        }
        Command::Verify {
            identity,
            n,
            m,
            max_index,
            seed,
            samples,
        } => verify(
            engine, format, *identity, *n, *m, *max_index, *seed, *samples,
        ),
        Command::Reconstruct { input: path } => {
            let mut text = String::new();
            if path == "-" {
                input.read_to_string(&mut text)?;
            } else {
                text = fs::read_to_string(path)
                    .map_err(|e| Failure::invalid(format!("cannot read {path}: {e}")))?;
            }
            let doc: Value = serde_json::from_str(&text).map_err(FormatError::from)?;
            let deck = json::deck_from_json(engine, &doc)?;
            let result = edge_deck_from_modified(engine, &deck.vector, deck.r)?;
            match format {
                Format::Json => ok(pretty(&json::reconstruction_json(&result, deck.r))),
                Format::Text => ok(format!(
                    "route: {}\n{}",
                    result.route.name(),
                    multiset_lines(&result.recovered)
                )),
            }
        }
        Command::Spectrum { ground, m, k } => {
            let params = JohnsonParams::new(*ground, *m, *k)?;
            let report = verify_spectrum(params, cli.size_guard)?;
            let criterion = if *k == 1 {
                Some(minus_m_criterion(*ground, *m)?)
            } else {
                None
            };
            if let Some(c) = &criterion {
                if c.holds != report.zero_eigenvalue.is_some() {
                    return Err(Failure::assertion(format!(
                        "zero eigenvalue present = {} but m <= N/2 is {}",
                        report.zero_eigenvalue.is_some(),
                        c.holds
                    )));
                }
            }
            match format {
                Format::Json => ok(pretty(&json::spectrum_json(&report, criterion.as_ref()))),
                Format::Text => {
                    let values: Vec<String> =
                        report.eigenvalues.iter().map(|x| x.to_string()).collect();
                    let mut s = format!(
                        "N={} m={} k={}\neigenvalues: {}\nannihilated: {}\nregular: {}\n",
                        ground,
                        m,
                        k,
                        values.join(" "),
                        report.annihilated,
                        report.regular
                    );
                    match report.zero_eigenvalue {
                        Some(j) => s.push_str(&format!("singular: theta_{j} = 0\n")),
                        None => s.push_str("singular: no\n"),
                    }
                    ok(s)
                }
            }
        }
        Command::Scan {
            ground_max,
            k_max,
            all,
            budget,
        } => scan(format, *ground_max, *k_max, *all, *budget),
    }
}

fn table_row(cells: &[String]) -> String {
    format!(
        "{:<17} {:>3} {:>3} {:>5}  {}\n",
        cells[0], cells[1], cells[2], cells[3], cells[4]
    )
}

#[allow(clippy::too_many_arguments)]
fn verify(
    engine: &mut Engine,
    format: Format,
    identity: IdentityArg,
    n: usize,
    only_m: Option<usize>,
    max_index: usize,
    seed: u64,
    samples: usize,
) -> Result<Outcome, Failure> {
    engine.canonicalizer(n)?;
    let total = pair_count(n);
    if let Some(m) = only_m {
        check_m(n, m)?;
    }
    let ms: Vec<usize> = match only_m {
        Some(m) => vec![m],
        None => (0..=total).collect(),
    };
    let selected: Vec<IdentityArg> = if identity == IdentityArg::All {
        vec![
            IdentityArg::DeckSum,
            IdentityArg::Recursion,
            IdentityArg::Inversion,
            IdentityArg::DeltaPolynomial,
            IdentityArg::LkPolynomial,
            IdentityArg::Intertwine,
            IdentityArg::Kernel,
            IdentityArg::Lovasz,
        ]
    } else {
        vec![identity]
    };

    let mut docs = Vec::new();
    let mut rows = Vec::new();
    let mut failed = false;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for which in selected {
        for &m in &ms {
            let exact = match which {
                IdentityArg::DeckSum => Some(Identity::DeckSum),
                IdentityArg::Recursion => Some(Identity::Recursion),
                IdentityArg::Inversion => Some(Identity::Inversion),
                IdentityArg::DeltaPolynomial => Some(Identity::DeltaPolynomial),
                IdentityArg::LkPolynomial => Some(Identity::LkPolynomial),
                _ => None,
            };
            if let Some(id) = exact {
                for index in 0..=m.min(max_index) {
                    if !id.applies(n, m, index) {
                        continue;
                    }
                    let report = id.check(engine, n, m, index)?;
                    failed |= !report.holds();
                    let verdict = if report.holds() {
                        "exact-equal".to_string()
                    } else {
                        format!("{:?}", report.verdict)
                    };
                    rows.push([
                        id.name().into(),
                        n.to_string(),
                        m.to_string(),
                        index.to_string(),
                        verdict,
                    ]);
                    docs.push(json::identity_report_json(&report));
                }
                continue;
            }
            match which {
                IdentityArg::Intertwine => match intertwine_check(engine, n, m) {
                    Ok(r) => {
                        rows.push([
                            "intertwine".into(),
                            n.to_string(),
                            m.to_string(),
                            "-".into(),
                            "exact-equal".into(),
                        ]);
                        docs.push(json::intertwine_json(&r));
                    }
                    Err(e @ edgedeck_core::Error::AssertionFailed(_)) => {
                        failed = true;
                        rows.push([
                            "intertwine".into(),
                            n.to_string(),
                            m.to_string(),
                            "-".into(),
                            e.to_string(),
                        ]);
                        docs.push(json!({ "identity": "intertwine", "n": n, "m": m, "verdict": "mismatch", "detail": e.to_string() }));
                    }
                    Err(e) => return Err(e.into()),
                },
                IdentityArg::Kernel => {
                    let r = kernel_report(engine, n, m)?;
                    let verdict = format!(
                        "rank(Δ1) = {}/{}{}",
                        r.delta1_rank,
                        r.classes,
                        r.d1.map(|(_, rank)| format!(", rank(d1) = {rank}/{}", r.classes))
                            .unwrap_or_default()
                    );
                    rows.push([
                        "kernel".into(),
                        n.to_string(),
                        m.to_string(),
                        "1".into(),
                        verdict,
                    ]);
                    docs.push(json::kernel_report_json(&r));
                }
                IdentityArg::Lovasz => {
                    if 2 * m <= total {
                        continue;
                    }
                    let (agreed, detail) = lovasz_trials(engine, n, m, samples, &mut rng)?;
                    failed |= !agreed;
                    let verdict = if agreed {
                        "exact-equal".to_string()
                    } else {
                        detail.clone()
                    };
                    rows.push([
                        "lovasz".into(),
                        n.to_string(),
                        m.to_string(),
                        samples.to_string(),
                        verdict,
                    ]);
                    docs.push(json!({
                        "identity": "lovasz", "n": n, "m": m, "samples": samples, "seed": seed,
                        "verdict": if agreed { "exact-equal" } else { "mismatch" },
                        "detail": detail,
                    }));
                }
                _ => unreachable!("exact identities handled above"),
            }
        }
    }
    let code = if failed { EXIT_ASSERTION } else { EXIT_OK };
    let body = match format {
        Format::Json => pretty(&Value::from(docs)),
        Format::Text => {
            let mut s = table_row(&[
                "identity".into(),
                "n".into(),
                "m".into(),
                "index".into(),
                "verdict".into(),
            ]);
            for r in &rows {
                s.push_str(&table_row(r));
            }
            s
        }
    };
    Ok(Outcome { body, code })
}

/// Reconstructs `samples` random multi-class collections from `Δ_1 X`;
/// returns whether every one came back exactly, with a description of the
/// first failure.
pub fn lovasz_trials(
    engine: &mut Engine,
    n: usize,
    m: usize,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<(bool, String), edgedeck_core::Error> {
    let delta1 = engine.operator(OperatorKind::Delta, n, m, 1)?;
    let cat = delta1.cols.clone();
    for trial in 0..samples {
        let mut counts = vec![BigInt::from(0); cat.len()];
        let picks = rng.gen_range(1..=cat.len().min(4));
        for _ in 0..picks {
            counts[rng.gen_range(0..cat.len())] += rng.gen_range(1..=3u32);
        }
        let x = MultiVector::new(cat.clone(), counts)?;
        let got = reconstruct_from_delta1(engine, &delta1.apply(&x)?)?;
        if got.recovered != x || got.certificate.routes_agree != Some(true) {
            return Ok((
                false,
                format!(
                    "trial {trial}: recovered {:?}, expected {:?}",
                    got.recovered.counts(),
                    x.counts()
                ),
            ));
        }
    }
    Ok((true, String::new()))
}

fn scan(
    format: Format,
    ground_max: usize,
    k_max: usize,
    all: bool,
    budget: usize,
) -> Result<Outcome, Failure> {
    if ground_max > 62 {
        return Err(Failure::invalid("--Nmax is limited to 62"));
    }
    let mut planned = 0usize;
    for ground in 1..=ground_max {
        for m in 0..=ground {
            for k in 1..=k_max.min(m) {
                if 2 * m + 1 > ground + k {
                    planned += m.min(ground - m) + 1;
                }
            }
        }
    }
    if planned > budget {
        return Err(Failure::invalid(format!(
            "scan would evaluate {planned} tuples, over the budget of {budget}"
        )));
    }
    let report = search_vanishing(ground_max, k_max);
    let mut lines: Vec<Value> = vec![json::scan_header(ground_max, k_max)];
    if all {
        for ground in 1..=ground_max {
            for m in 0..=ground {
                for k in 1..=k_max.min(m) {
                    if 2 * m < ground + k {
                        continue;
                    }
                    let params = JohnsonParams { ground, m, k };
                    for j in 0..=params.max_index() {
                        lines.push(json::scan_line(
                            ground,
                            m,
                            k,
                            j,
                            &k_edge_eigenvalue(params, j)?,
                        ));
                    }
                }
            }
        }
    } else {
        for h in &report.hits {
            lines.push(json::scan_line(h.ground, h.m, h.k, h.j, &BigInt::from(0)));
        }
    }
    lines.push(json::scan_summary(&report));
    let body = match format {
        Format::Json => lines.iter().map(|l| l.to_string() + "\n").collect(),
        Format::Text => {
            let mut s = format!(
                "scanned {} tuples (N <= {ground_max}, k <= {k_max})\n",
                report.tuples
            );
            for h in &report.hits {
                s.push_str(&format!(
                    "zero at N={} m={} k={} j={}\n",
                    h.ground, h.m, h.k, h.j
                ));
            }
            s.push_str(&format!("{} zero(s)\n", report.hits.len()));
            s
        }
    };
    Ok(Outcome {
        body,
        code: EXIT_OK,
    })
}
