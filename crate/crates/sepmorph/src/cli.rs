//! Command-line front end. Every subcommand recomputes its numbers from
//! the library at print time; `--format records` emits one `key=value`
//! record per line with a fixed key order, so identical invocations are
//! byte-identical.
//!
//! Exit codes: 0 for any computed result (including "does not apply"),
//! 1 for invalid input, 2 for an internal consistency failure.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::construct::{
    admissible_pairs, construct_trace, parse_trace, reachability_counterexample, step_options,
    trace_to_text, verify_trace, witness_no_pencil, ConstructionTrace,
};
use crate::decomp::{adjoint_divisor_class, enumerate_decompositions, maximize_decomposition};
use crate::lattice::{builtin_surface, DivisorClass, SurfaceLattice};
use crate::obstruct::{
    brill_noether_block, enumerate_obstructed_l, generic_obstruction, min_sep_degree_bound,
    nest_pencil_exists, pencil_bound, quintic_special_case, CurveData, ObstructionVerdict,
};
use crate::scheme::{
    check_plane_scheme, check_quadric_scheme, parse_scheme, print_scheme, print_scheme_compact,
    scheme_stats, table1,
};
use crate::surface_file::{find_surface, load_surfaces};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable report.
    Text,
    /// One `key=value` record per line, stable key order.
    Records,
}

impl Display for Format {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Format::Text => f.write_str("text"),
            Format::Records => f.write_str("records"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "sepmorph",
    version,
    about = "Obstruction bounds for separating morphisms and totally real pencils on real curves"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Show a surface lattice and its setup conditions.
    #[command(name = "surface")]
    Surface(SurfaceArgs),
    /// Adjoint class of a curve and its maximizing decomposition.
    #[command(name = "decompose")]
    Decompose(DecomposeArgs),
    /// Obstruction verdict for one curve, or a composite report per degree.
    #[command(name = "obstruct")]
    Obstruct(ObstructArgs),
    /// All obstructed component counts for a degree on a built-in surface.
    #[command(name = "enumerate")]
    Enumerate(EnumerateArgs),
    /// Parse and check real-scheme bracket notation.
    #[command(name = "scheme")]
    Scheme(SchemeArgs),
    /// Degree-induction states, traces, and reachability.
    #[command(name = "construct")]
    Construct(ConstructArgs),
    /// The three obstructed bidegree (d,d) scheme rows, recomputed.
    #[command(name = "table1")]
    Table1,
    /// Morphism-degree window left open by dimension counts alone.
    #[command(name = "brill-noether")]
    BrillNoether(BrillNoetherArgs),
    /// Constructed curve whose verdict excludes a totally real pencil.
    #[command(name = "witness")]
    Witness(WitnessArgs),
}

#[derive(Debug, clap::Args)]
struct SurfaceArgs {
    /// Surface name: built-in or from --surface-file.
    #[arg(long)]
    surface: String,
    /// TOML file with additional surface lattices.
    #[arg(long)]
    surface_file: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct DecomposeArgs {
    #[arg(long)]
    surface: String,
    /// Curve class coordinates, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    class: Option<String>,
    /// Degree shorthand: class (d) on P2, (d,d) on the quadric.
    #[arg(long)]
    degree: Option<i64>,
    /// List every decomposition within the bound, not just the maximum.
    #[arg(long)]
    all: bool,
    /// Coordinate search bound for --all (default: largest adjoint coordinate).
    #[arg(long)]
    bound: Option<i64>,
    #[arg(long)]
    surface_file: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct ObstructArgs {
    #[arg(long)]
    surface: String,
    /// Degree shorthand: class (d) on P2, (d,d) on the quadric.
    #[arg(long)]
    degree: Option<i64>,
    /// Curve class coordinates, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    class: Option<String>,
    /// Real component count; omit for the composite per-degree report.
    #[arg(long)]
    l: Option<i64>,
    #[arg(long)]
    surface_file: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct EnumerateArgs {
    /// Built-in surface name.
    #[arg(long)]
    surface: String,
    #[arg(long)]
    degree: i64,
}

#[derive(Debug, clap::Args)]
struct SchemeArgs {
    #[command(subcommand)]
    action: SchemeAction,
}

#[derive(Debug, Subcommand)]
enum SchemeAction {
    /// Parse a scheme and print its canonical form and counts.
    Parse {
        scheme: String,
    },
    /// Check a scheme against a curve degree; violations exit 1.
    Check {
        /// Check against a plane curve of the given degree.
        #[arg(long)]
        plane: bool,
        /// Check against a bidegree (d,d) curve on the quadric ellipsoid.
        #[arg(long)]
        quadric: bool,
        #[arg(long)]
        degree: i64,
        /// Treat the curve as separating (quadric parity check).
        #[arg(long)]
        type_one: bool,
        scheme: String,
    },
    /// Whether the scheme's deepest nest yields a totally real pencil.
    Pencil {
        #[arg(long)]
        degree: i64,
        scheme: String,
    },
}

#[derive(Debug, clap::Args)]
struct ConstructArgs {
    /// Target degree.
    #[arg(long)]
    degree: Option<i64>,
    /// Target component count; with --degree, emit a trace.
    #[arg(long)]
    l: Option<i64>,
    /// Component count at degree - 1; with --degree, show both step options.
    #[arg(long)]
    from_l: Option<i64>,
    /// Check that every admissible state up to this degree is reachable.
    #[arg(long)]
    reachability: Option<i64>,
    /// Replay a serialized trace from a file, or `-` for stdin.
    #[arg(long)]
    verify: Option<String>,
}

#[derive(Debug, clap::Args)]
struct BrillNoetherArgs {
    /// Half-degree parameter: the plane curve has degree 2s + 1.
    #[arg(long)]
    s: i64,
}

#[derive(Debug, clap::Args)]
struct WitnessArgs {
    /// Plane curve degree, at least 5.
    #[arg(long)]
    degree: i64,
}

/// Run the CLI on the given argv (including the program name), writing to
/// the given streams, and return the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                1
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match dispatch(&cli) {
        Ok((lines, code)) => {
            for line in lines {
                let _ = writeln!(out, "{line}");
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(Vec<String>, i32)> {
    let f = cli.format;
    match &cli.command {
        Command::Surface(args) => surface_cmd(args, f),
        Command::Decompose(args) => decompose_cmd(args, f),
        Command::Obstruct(args) => obstruct_cmd(args, f),
        Command::Enumerate(args) => enumerate_cmd(args, f),
        Command::Scheme(args) => scheme_cmd(args, f),
        Command::Construct(args) => construct_cmd(args, f),
        Command::Table1 => table1_cmd(f),
        Command::BrillNoether(args) => brill_noether_cmd(args, f),
        Command::Witness(args) => witness_cmd(args, f),
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn csv<T: Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn csv_or_dash<T: Display>(items: &[T]) -> String {
    if items.is_empty() {
        "-".into()
    } else {
        csv(items)
    }
}

fn spaced<T: Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn opt_or_dash<T: Display>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_else(|| "-".into())
}

fn gram_records(s: &SurfaceLattice) -> String {
    s.gram
        .iter()
        .map(|row| csv(row))
        .collect::<Vec<_>>()
        .join(";")
}

fn class_list_records(classes: &[Vec<i64>]) -> String {
    classes
        .iter()
        .map(|c| csv(c))
        .collect::<Vec<_>>()
        .join(";")
}

fn d1_text(c: &DivisorClass) -> String {
    if c.is_zero() {
        "empty".into()
    } else {
        c.to_string()
    }
}

fn steps_records(t: &ConstructionTrace) -> String {
    if t.steps.is_empty() {
        return "-".into();
    }
    t.steps
        .iter()
        .map(|s| format!("{}:{}:{}", s.to_degree, s.option, s.resulting_l))
        .collect::<Vec<_>>()
        .join(";")
}

fn parse_coords(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("class coordinate `{part}` is not an integer")))
        })
        .collect()
}

fn resolve_surface(name: &str, file: Option<&Path>) -> Result<Arc<SurfaceLattice>> {
    if let Some(path) = file {
        let surfaces = load_surfaces(path)?;
        if let Ok(found) = find_surface(&surfaces, name) {
            return Ok(found);
        }
    }
    builtin_surface(name)
}

/// Curve class from --class or the --degree shorthand on a built-in.
fn curve_coords(
    surface: &Arc<SurfaceLattice>,
    class: Option<&str>,
    degree: Option<i64>,
) -> Result<Vec<i64>> {
    match (class, degree) {
        (Some(_), Some(_)) => Err(Error::InvalidInput(
            "pass either --class or --degree, not both".into(),
        )),
        (Some(text), None) => parse_coords(text),
        (None, Some(d)) => {
            if surface.is_builtin_p2() {
                Ok(vec![d])
            } else if surface.is_builtin_quadric() {
                Ok(vec![d, d])
            } else {
                Err(Error::InvalidInput(
                    "--degree is a built-in shorthand; custom surfaces need --class".into(),
                ))
            }
        }
        (None, None) => Err(Error::InvalidInput(
            "pass --class (or --degree on a built-in surface)".into(),
        )),
    }
}

fn surface_cmd(args: &SurfaceArgs, f: Format) -> Result<(Vec<String>, i32)> {
    let s = resolve_surface(&args.surface, args.surface_file.as_deref())?;
    let setup = s.setup_conditions();
    let failures = setup.failures();
    let k = s.canonical_class();
    let k_square = k.self_intersection();
    let mut lines = Vec::new();
    match f {
        Format::Text => {
            lines.push(format!("surface: {}", s.name));
            lines.push(format!("rank: {}", s.rank));
            lines.push(format!(
                "gram: [{}]",
                s.gram
                    .iter()
                    .map(|row| spaced(row))
                    .collect::<Vec<_>>()
                    .join("; ")
            ));
            lines.push(format!("canonical: {k}"));
            lines.push(format!("chi: {}", s.chi));
            lines.push(format!("K^2: {k_square}"));
            lines.push(format!(
                "effective generators: {}",
                s.effective_generators
                    .iter()
                    .map(|g| format!("({})", csv(g)))
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            if failures.is_empty() {
                lines.push("setup: ok".into());
            } else {
                lines.push(format!("setup: failed ({})", failures.join(", ")));
            }
        }
        Format::Records => {
            lines.push(format!(
                "kind=surface name={} rank={} gram={} canonical={} chi={} k_square={} generators={} chi_ok={} k_square_ok={} nef_anticanonical_ok={} setup={}",
                s.name,
                s.rank,
                gram_records(&s),
                csv(&k.coords),
                s.chi,
                k_square,
                class_list_records(&s.effective_generators),
                yn(setup.chi_ok),
                yn(setup.k_square_ok),
                yn(setup.nef_anticanonical_ok),
                yn(setup.overall),
            ));
        }
    }
    Ok((lines, 0))
}

fn decompose_cmd(args: &DecomposeArgs, f: Format) -> Result<(Vec<String>, i32)> {
    let s = resolve_surface(&args.surface, args.surface_file.as_deref())?;
    let coords = curve_coords(&s, args.class.as_deref(), args.degree)?;
    let curve = s.divisor(&coords)?;
    let adjoint = adjoint_divisor_class(&curve)?;
    let mut lines = Vec::new();
    if f == Format::Text {
        lines.push(format!("surface: {}", s.name));
        lines.push(format!("curve class: {curve}"));
        lines.push(format!("adjoint class: {adjoint}"));
    } else {
        lines.push(format!(
            "kind=adjoint surface={} curve={} adjoint={}",
            s.name,
            csv(&curve.coords),
            csv(&adjoint.coords)
        ));
    }
    let decompositions = if args.all {
        let bound = args
            .bound
            .unwrap_or_else(|| adjoint.coords.iter().map(|c| c.abs()).max().unwrap_or(0));
        enumerate_decompositions(&adjoint, bound)?
    } else {
        vec![maximize_decomposition(&adjoint)?]
    };
    match f {
        Format::Text => {
            if args.all {
                lines.push(format!("decompositions: {}", decompositions.len()));
            }
            for dec in &decompositions {
                lines.push(format!(
                    "d0 = {}, d1 = {}, objective = {}",
                    dec.d0,
                    d1_text(&dec.d1),
                    dec.objective
                ));
            }
        }
        Format::Records => {
            for (i, dec) in decompositions.iter().enumerate() {
                lines.push(format!(
                    "kind=decomposition surface={} curve={} index={} d0={} d1={} objective={}",
                    s.name,
                    csv(&curve.coords),
                    i + 1,
                    csv(&dec.d0.coords),
                    csv(&dec.d1.coords),
                    dec.objective
                ));
            }
        }
    }
    Ok((lines, 0))
}

fn verdict_bounds_text(v: &ObstructionVerdict) -> String {
    if v.applies {
        format!("bounds: {} < {} < {}", v.left_bound, v.middle, v.right_bound)
    } else {
        format!(
            "bounds: left={} middle={} right={}",
            v.left_bound, v.middle, v.right_bound
        )
    }
}

fn obstruct_cmd(args: &ObstructArgs, f: Format) -> Result<(Vec<String>, i32)> {
    let s = resolve_surface(&args.surface, args.surface_file.as_deref())?;
    let Some(l) = args.l else {
        return bundle_cmd(&s, args, f);
    };
    let coords = curve_coords(&s, args.class.as_deref(), args.degree)?;
    let curve = CurveData::new(s.divisor(&coords)?, l, true)?;
    let (dec, v) = generic_obstruction(&curve)?;
    let min_sep = min_sep_degree_bound(&curve, &v);
    let mut lines = Vec::new();
    match f {
        Format::Text => {
            lines.push(format!("surface: {}", s.name));
            lines.push(format!(
                "curve: class {}, l = {}, separating",
                curve.curve_class, l
            ));
            lines.push(format!("genus: {}", curve.genus()));
            lines.push(format!(
                "decomposition: d0 = {}, d1 = {}, objective = {}",
                dec.d0,
                d1_text(&dec.d1),
                dec.objective
            ));
            lines.push(format!("applies: {}", yn(v.applies)));
            lines.push(format!("rule: {}", v.rule));
            lines.push(format!("epsilon: {}", v.epsilon));
            if let Some(m) = v.m {
                lines.push(format!("m: {m}"));
            }
            lines.push(verdict_bounds_text(&v));
            if !v.failed_hypotheses.is_empty() {
                lines.push(format!("failed: {}", v.failed_hypotheses.join(", ")));
            }
            lines.push(format!("min separating degree >= {min_sep}"));
        }
        Format::Records => {
            lines.push(format!(
                "kind=verdict surface={} class={} l={} genus={} d0={} d1={} objective={} applies={} rule={} epsilon={} m={} left={} middle={} right={} failed={} min_sep_degree={}",
                s.name,
                csv(&curve.curve_class.coords),
                l,
                curve.genus(),
                csv(&dec.d0.coords),
                csv(&dec.d1.coords),
                dec.objective,
                yn(v.applies),
                v.rule,
                v.epsilon,
                opt_or_dash(&v.m),
                v.left_bound,
                v.middle,
                v.right_bound,
                csv_or_dash(&v.failed_hypotheses),
                min_sep,
            ));
        }
    }
    if s.is_builtin_p2() && coords == [5] {
        let qv = quintic_special_case(&curve)?;
        match f {
            Format::Text => {
                if qv.applies {
                    lines.push(
                        "quintic special case: applies (degree-5 morphisms excluded beyond the closed forms)"
                            .into(),
                    );
                } else {
                    lines.push(format!(
                        "quintic special case: does not apply (failed: {})",
                        qv.failed_hypotheses.join(", ")
                    ));
                }
            }
            Format::Records => {
                lines.push(format!(
                    "kind=quintic-special l={} applies={} left={} middle={} right={} failed={} beyond_closed_forms={}",
                    l,
                    yn(qv.applies),
                    qv.left_bound,
                    qv.middle,
                    qv.right_bound,
                    csv_or_dash(&qv.failed_hypotheses),
                    yn(qv.beyond_closed_forms),
                ));
            }
        }
    }
    Ok((lines, 0))
}

/// Composite per-degree report: decomposition, obstructed component
/// counts, pencil bounds and witness on the plane, table rows on the
/// quadric.
fn bundle_cmd(
    s: &Arc<SurfaceLattice>,
    args: &ObstructArgs,
    f: Format,
) -> Result<(Vec<String>, i32)> {
    if !s.is_builtin_p2() && !s.is_builtin_quadric() {
        return Err(Error::InvalidInput(
            "the composite report covers the built-in surfaces; pass --l for a single verdict"
                .into(),
        ));
    }
    let coords = curve_coords(s, args.class.as_deref(), args.degree)?;
    let degree = if s.is_builtin_quadric() {
        if coords.len() != 2 || coords[0] != coords[1] {
            return Err(Error::InvalidInput(format!(
                "quadric curves have bidegree (d,d); got ({})",
                csv(&coords)
            )));
        }
        coords[0]
    } else {
        coords[0]
    };
    if degree < 1 {
        return Err(Error::InvalidInput(format!(
            "curve degree must be positive, got {degree}"
        )));
    }
    let mut lines = Vec::new();
    if f == Format::Text {
        lines.push(format!("surface: {}", s.name));
        lines.push(format!("degree: {degree}"));
    }
    let curve = s.divisor(&coords)?;
    match adjoint_divisor_class(&curve) {
        Ok(adjoint) => {
            let dec = maximize_decomposition(&adjoint)?;
            match f {
                Format::Text => lines.push(format!(
                    "adjoint decomposition: d0 = {}, d1 = {}, objective = {}",
                    dec.d0,
                    d1_text(&dec.d1),
                    dec.objective
                )),
                Format::Records => lines.push(format!(
                    "kind=decomposition surface={} curve={} index=1 d0={} d1={} objective={}",
                    s.name,
                    csv(&coords),
                    csv(&dec.d0.coords),
                    csv(&dec.d1.coords),
                    dec.objective
                )),
            }
        }
        Err(Error::NotEffective(_)) => match f {
            Format::Text => {
                lines.push("adjoint decomposition: none (adjoint class not effective)".into())
            }
            Format::Records => lines.push(format!(
                "kind=note surface={} degree={degree} message=adjoint-not-effective",
                s.name
            )),
        },
        Err(other) => return Err(other),
    }
    let obstructed = match enumerate_obstructed_l(&s.name, degree) {
        Ok(list) => list,
        Err(Error::DegreeOutOfRange(_)) => {
            match f {
                Format::Text => lines.push(
                    "no closed-form rule in range (plane rules start at degree 5 odd, 6 even; quadric at 4)"
                        .into(),
                ),
                Format::Records => lines.push(format!(
                    "kind=note surface={} degree={degree} message=no-closed-form-rule-in-range",
                    s.name
                )),
            }
            return Ok((lines, 0));
        }
        Err(other) => return Err(other),
    };
    match f {
        Format::Text => {
            if obstructed.is_empty() {
                lines.push("obstructed l: none".into());
            } else {
                lines.push(format!("obstructed l: {}", spaced(&obstructed)));
            }
        }
        Format::Records => lines.push(format!(
            "kind=obstructed surface={} degree={degree} l={}",
            s.name,
            csv_or_dash(&obstructed)
        )),
    }
    if s.is_builtin_p2() {
        for &l in &obstructed {
            let bound = pencil_bound(degree, l)?;
            match f {
                Format::Text => lines.push(format!("pencil bound at l = {l}: {bound}")),
                Format::Records => lines.push(format!(
                    "kind=pencil surface=P2 degree={degree} l={l} bound={bound}"
                )),
            }
        }
        match witness_no_pencil(degree) {
            Ok(w) => {
                let bound = pencil_bound(degree, w.l)?;
                match f {
                    Format::Text => {
                        lines.push(format!(
                            "witness: l = {}, rule {}, pencil bound {bound}",
                            w.l, w.verdict.rule
                        ));
                        lines.push(format!(
                            "trace: {}",
                            trace_to_text(&w.trace).trim_end().replace('\n', "; ")
                        ));
                    }
                    Format::Records => lines.push(format!(
                        "kind=witness degree={degree} l={} rule={} left={} middle={} right={} base={},{} steps={} pencil_bound={bound}",
                        w.l,
                        w.verdict.rule,
                        w.verdict.left_bound,
                        w.verdict.middle,
                        w.verdict.right_bound,
                        w.trace.base.d,
                        w.trace.base.l,
                        steps_records(&w.trace),
                    )),
                }
            }
            Err(Error::DegreeOutOfRange(_) | Error::NoWitnessCandidate(_)) => match f {
                Format::Text => lines.push("witness: none".into()),
                Format::Records => lines.push(format!(
                    "kind=note surface=P2 degree={degree} message=no-witness"
                )),
            },
            Err(other) => return Err(other),
        }
    }
    if s.is_builtin_quadric() {
        let rows = table1()?;
        let matching: Vec<(usize, _)> = rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.d == degree)
            .collect();
        for (idx, row) in matching {
            match f {
                Format::Text => lines.push(format!(
                    "table row {}: {}, bounds {} < {} < {}",
                    idx + 1,
                    row.scheme_family,
                    row.left_bound,
                    row.middle,
                    row.right_bound
                )),
                Format::Records => lines.push(format!(
                    "kind=table-ref index={} d={} left={} middle={} right={} members={}",
                    idx + 1,
                    row.d,
                    row.left_bound,
                    row.middle,
                    row.right_bound,
                    csv(&row.members.iter().map(print_scheme_compact).collect::<Vec<_>>()),
                )),
            }
        }
    }
    Ok((lines, 0))
}

fn enumerate_cmd(args: &EnumerateArgs, f: Format) -> Result<(Vec<String>, i32)> {
    let obstructed = enumerate_obstructed_l(&args.surface, args.degree)?;
    let lines = match f {
        Format::Text => {
            if obstructed.is_empty() {
                vec![format!(
                    "obstructed l for {} degree {}: none",
                    args.surface, args.degree
                )]
            } else {
                vec![format!(
                    "obstructed l for {} degree {}: {}",
                    args.surface,
                    args.degree,
                    spaced(&obstructed)
                )]
            }
        }
        Format::Records => vec![format!(
            "kind=obstructed surface={} degree={} l={}",
            args.surface,
            args.degree,
            csv_or_dash(&obstructed)
        )],
    };
    Ok((lines, 0))
}

fn scheme_cmd(args: &SchemeArgs, f: Format) -> Result<(Vec<String>, i32)> {
    match &args.action {
        SchemeAction::Parse { scheme } => {
            let s = parse_scheme(scheme)?;
            let stats = scheme_stats(&s);
            let lines = match f {
                Format::Text => vec![
                    format!("canonical: {}", print_scheme(&s)),
                    format!("l: {}", stats.l),
                    format!("depth: {}", stats.depth),
                    format!("injective pairs: {}", stats.injective_pairs),
                    format!("pseudoline: {}", yn(s.pseudoline())),
                ],
                Format::Records => vec![format!(
                    "kind=scheme scheme={} l={} depth={} injective_pairs={} pseudoline={}",
                    print_scheme_compact(&s),
                    stats.l,
                    stats.depth,
                    stats.injective_pairs,
                    yn(s.pseudoline())
                )],
            };
            Ok((lines, 0))
        }
        SchemeAction::Check {
            plane,
            quadric,
            degree,
            type_one,
            scheme,
        } => {
            if plane == quadric {
                return Err(Error::InvalidInput(
                    "pass exactly one of --plane or --quadric".into(),
                ));
            }
            let s = parse_scheme(scheme)?;
            let violations = if *plane {
                check_plane_scheme(&s, *degree)
            } else {
                check_quadric_scheme(&s, *degree, *type_one)?
            };
            let target = if *plane { "plane" } else { "quadric" };
            let lines = match f {
                Format::Text => {
                    let mut lines = vec![
                        format!("scheme: {}", print_scheme(&s)),
                        format!("target: {target} degree {degree}"),
                    ];
                    if violations.is_empty() {
                        lines.push("violations: none".into());
                    } else {
                        lines.push(format!("violations: {}", violations.join(", ")));
                    }
                    lines
                }
                Format::Records => vec![format!(
                    "kind=scheme-check target={target} degree={degree} type_one={} scheme={} violations={}",
                    if *plane { "-".into() } else { yn(*type_one).to_string() },
                    print_scheme_compact(&s),
                    csv_or_dash(&violations)
                )],
            };
            Ok((lines, i32::from(!violations.is_empty())))
        }
        SchemeAction::Pencil { degree, scheme } => {
            let s = parse_scheme(scheme)?;
            let exists = nest_pencil_exists(&s, *degree)?;
            let needed = degree.div_euclid(2);
            let lines = match f {
                Format::Text => vec![
                    format!("scheme: {}", print_scheme(&s)),
                    format!("needed nest depth: {needed}"),
                    format!("nest pencil exists: {}", yn(exists)),
                ],
                Format::Records => vec![format!(
                    "kind=nest-pencil degree={degree} scheme={} needed_depth={needed} exists={}",
                    print_scheme_compact(&s),
                    yn(exists)
                )],
            };
            Ok((lines, 0))
        }
    }
}

fn construct_cmd(args: &ConstructArgs, f: Format) -> Result<(Vec<String>, i32)> {
    if let Some(source) = &args.verify {
        let text = if source == "-" {
            let mut buf = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf)
                .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?;
            buf
        } else {
            std::fs::read_to_string(source)
                .map_err(|e| Error::InvalidInput(format!("cannot read {source}: {e}")))?
        };
        let trace = parse_trace(&text)?;
        let ok = verify_trace(&trace);
        let target = trace.target();
        let lines = match f {
            Format::Text => vec![format!("trace valid: {}", yn(ok))],
            Format::Records => vec![format!(
                "kind=trace-verify valid={} base={},{} steps={} target_d={} target_l={}",
                yn(ok),
                trace.base.d,
                trace.base.l,
                steps_records(&trace),
                target.d,
                target.l
            )],
        };
        return Ok((lines, i32::from(!ok)));
    }
    if let Some(d_max) = args.reachability {
        let counterexample = reachability_counterexample(d_max)?;
        let lines = match f {
            Format::Text => match counterexample {
                None => vec![format!("reachable through degree {d_max}: yes")],
                Some(state) => vec![format!(
                    "reachable through degree {d_max}: no (first unreachable state: ({}, {}))",
                    state.d, state.l
                )],
            },
            Format::Records => vec![format!(
                "kind=reachability max_degree={d_max} ok={} counterexample={}",
                yn(counterexample.is_none()),
                counterexample
                    .map(|st| format!("{},{}", st.d, st.l))
                    .unwrap_or_else(|| "-".into())
            )],
        };
        return Ok((lines, 0));
    }
    let Some(d) = args.degree else {
        return Err(Error::InvalidInput(
            "pass --degree (with --l for a trace), --reachability, or --verify".into(),
        ));
    };
    if let Some(l) = args.l {
        if args.from_l.is_some() {
            return Err(Error::InvalidInput(
                "pass either --l or --from-l, not both".into(),
            ));
        }
        let trace = construct_trace(d, l)?;
        let verified = verify_trace(&trace);
        let lines = match f {
            Format::Text => {
                let mut lines: Vec<String> = trace_to_text(&trace)
                    .lines()
                    .map(|s| s.to_string())
                    .collect();
                lines.push(format!("verified: {}", yn(verified)));
                lines
            }
            Format::Records => vec![format!(
                "kind=trace degree={d} l={l} base={},{} steps={} verified={}",
                trace.base.d,
                trace.base.l,
                steps_records(&trace),
                yn(verified)
            )],
        };
        return Ok((lines, 0));
    }
    if let Some(from_l) = args.from_l {
        let (option_i, option_ii) = step_options(d, from_l)?;
        let lines = match f {
            Format::Text => vec![format!(
                "step options from ({}, {from_l}): i -> {option_i}, ii -> {option_ii}",
                d - 1
            )],
            Format::Records => vec![format!(
                "kind=step-options degree={d} from_l={from_l} option_i={option_i} option_ii={option_ii}"
            )],
        };
        return Ok((lines, 0));
    }
    let admissible = admissible_pairs(d)?;
    let lines = match f {
        Format::Text => vec![format!(
            "admissible l at degree {d}: {}",
            spaced(&admissible)
        )],
        Format::Records => vec![format!(
            "kind=admissible degree={d} l={}",
            csv_or_dash(&admissible)
        )],
    };
    Ok((lines, 0))
}

fn table1_cmd(f: Format) -> Result<(Vec<String>, i32)> {
    let rows = table1()?;
    let mut lines = Vec::new();
    match f {
        Format::Text => {
            let headers = ["row", "d", "scheme", "bounds", "d0", "d1"];
            let body: Vec<[String; 6]> = rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    [
                        (i + 1).to_string(),
                        r.d.to_string(),
                        r.scheme_family.clone(),
                        format!("{} < {} < {}", r.left_bound, r.middle, r.right_bound),
                        format!("({},{})", r.d0.0, r.d0.1),
                        r.d1
                            .map(|(a, b)| format!("({a},{b})"))
                            .unwrap_or_else(|| "empty".into()),
                    ]
                })
                .collect();
            let widths: Vec<usize> = (0..headers.len())
                .map(|col| {
                    body.iter()
                        .map(|row| row[col].len())
                        .chain(std::iter::once(headers[col].len()))
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let render = |cells: &[String]| {
                cells
                    .iter()
                    .enumerate()
                    .map(|(col, cell)| format!("{cell:<width$}", width = widths[col]))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            let header_cells: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
            lines.push(render(&header_cells));
            for (row, cells) in rows.iter().zip(&body) {
                lines.push(render(cells));
                if row.members.len() > 1 {
                    lines.push(format!(
                        "     members: {}",
                        row.members
                            .iter()
                            .map(print_scheme)
                            .collect::<Vec<_>>()
                            .join(" | ")
                    ));
                }
            }
        }
        Format::Records => {
            for (i, r) in rows.iter().enumerate() {
                let l = crate::scheme::scheme_stats(&r.members[0]).l;
                lines.push(format!(
                    "kind=table-row index={} d={} l={} left={} middle={} right={} d0={},{} d1={} members={}",
                    i + 1,
                    r.d,
                    l,
                    r.left_bound,
                    r.middle,
                    r.right_bound,
                    r.d0.0,
                    r.d0.1,
                    r.d1
                        .map(|(a, b)| format!("{a},{b}"))
                        .unwrap_or_else(|| "-".into()),
                    csv(&r.members.iter().map(print_scheme_compact).collect::<Vec<_>>()),
                ));
            }
        }
    }
    Ok((lines, 0))
}

fn brill_noether_cmd(args: &BrillNoetherArgs, f: Format) -> Result<(Vec<String>, i32)> {
    let block = brill_noether_block(args.s)?;
    let lines = match f {
        Format::Text => {
            let mut lines = vec![
                format!("s: {} (plane curve degree {})", block.s, 2 * block.s + 1),
                format!("epsilon: {}", block.epsilon),
                format!("genus: {}", block.genus),
                format!(
                    "bounds on s^2 + n: {} < s^2 + n < {}",
                    block.lower, block.upper
                ),
            ];
            if block.n_values.is_empty() {
                lines.push("odd n: none".into());
            } else {
                lines.push(format!("odd n: {}", spaced(&block.n_values)));
            }
            lines
        }
        Format::Records => vec![format!(
            "kind=brill-noether s={} epsilon={} genus={} lower={} upper={} n={}",
            block.s,
            block.epsilon,
            block.genus,
            block.lower,
            block.upper,
            csv_or_dash(&block.n_values)
        )],
    };
    Ok((lines, 0))
}

fn witness_cmd(args: &WitnessArgs, f: Format) -> Result<(Vec<String>, i32)> {
    let w = witness_no_pencil(args.degree)?;
    let bound = pencil_bound(args.degree, w.l)?;
    let lines = match f {
        Format::Text => {
            let mut lines = vec![
                format!("degree: {}", args.degree),
                format!("l: {}", w.l),
                format!("rule: {}", w.verdict.rule),
                format!(
                    "bounds: {} < {} < {}",
                    w.verdict.left_bound, w.verdict.middle, w.verdict.right_bound
                ),
                format!("pencil bound: {bound}"),
            ];
            lines.extend(trace_to_text(&w.trace).lines().map(|s| s.to_string()));
            lines
        }
        Format::Records => vec![format!(
            "kind=witness degree={} l={} rule={} left={} middle={} right={} base={},{} steps={} pencil_bound={bound}",
            args.degree,
            w.l,
            w.verdict.rule,
            w.verdict.left_bound,
            w.verdict.middle,
            w.verdict.right_bound,
            w.trace.base.d,
            w.trace.base.l,
            steps_records(&w.trace),
        )],
    };
    Ok((lines, 0))
}
