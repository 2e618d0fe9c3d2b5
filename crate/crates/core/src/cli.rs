//! Command-line front end. [`run`] never touches the process: it returns the
//! exit code and both output streams, so it can be driven in-process.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::census::{load_census, quotient_report, Census, FactKind};
use crate::hyperbolic::{
    classify, complex_length, conjugation_residual, core_geodesic_length, core_loop,
    dual_exponents, filling_family, format_complex, format_real, FillingFamily,
};
use crate::involution::{extend_involution, QuotientKnot, SymmetryType};
use crate::seifert::{
    euler_number, quotient_h1_order, quotient_invariants, sfs_h1_order, SeifertInvariants,
};
use crate::slope::{canonical_exponents_bounded, exponents_to_matrix, format_exponents, Slope};
use crate::surgery::{h1_order, rolfsen_twist, FramedLink};
use crate::tangle::{diagram_determinant, two_bridge_diagram, TwistVector};

/// Largest diagram the `tangle` commands will build.
pub const MAX_CROSSINGS: u128 = 500;
/// Longest canonical word `slope decompose` will print, in `S` letters.
pub const MAX_WORD_RUNS: usize = 10_000;
/// Environment variable naming a census file to use instead of the embedded one.
pub const CENSUS_ENV: &str = "BRANCH2_CENSUS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Parser)]
#[command(
    name = "branch2",
    version,
    about = "Two-fold branched covers of Dehn surgeries"
)]
struct Cli {
    /// Output style: human-readable text or key=value lines.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Census file to use instead of the embedded table.
    #[arg(long, global = true, value_name = "FILE")]
    census: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Slopes as S/T words.
    #[command(subcommand)]
    Slope(SlopeCmd),
    /// Rational tangles and two-bridge branch loci.
    #[command(subcommand)]
    Tangle(TangleCmd),
    /// Framed-link surgery descriptions.
    #[command(subcommand)]
    Surgery(SurgeryCmd),
    /// Seifert invariants.
    #[command(subcommand)]
    Seifert(SeifertCmd),
    /// Involution types and fillings.
    #[command(subcommand)]
    Involution(InvolutionCmd),
    /// Symmetry census queries.
    #[command(subcommand)]
    Census(CensusCmd),
    /// Dehn filling space numerics.
    #[command(subcommand)]
    Hyperbolic(HyperbolicCmd),
}

#[derive(Debug, Subcommand)]
enum SlopeCmd {
    /// Canonical word W with W(1,0) = (p,q).
    Decompose {
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
}

#[derive(Debug, Subcommand)]
enum TangleCmd {
    /// Planar diagram of the two-bridge link b(p,q).
    Bridge {
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Goeritz determinant of b(p,q).
    Det {
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
}

#[derive(Debug, Subcommand)]
enum SurgeryCmd {
    /// Order of first homology of the surgered manifold.
    H1 { file: String },
    /// Rolfsen twist along a component (name, or 0-based index).
    Twist {
        file: String,
        component: String,
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
}

#[derive(Debug, Subcommand)]
enum SeifertCmd {
    /// Quotient of r/s filling on the (p,q) torus knot by the free involution.
    Quotient {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(allow_hyphen_values = true)]
        filling: String,
    },
    /// First homology and Euler number of "{b,(Oo,0),(a1,b1),...}".
    H1 {
        #[arg(allow_hyphen_values = true)]
        invariants: String,
    },
}

#[derive(Debug, Subcommand)]
enum InvolutionCmd {
    /// Whether an involution type extends over a filling, and its quotient.
    Extend {
        #[arg(value_name = "TYPE")]
        kind: String,
        #[arg(allow_hyphen_values = true)]
        slope: String,
        /// Image of the knot for type S1E: a knot name or "unknot".
        #[arg(long, value_name = "NAME")]
        quotient_knot: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum CensusCmd {
    /// Manifolds that the filling two-fold (branched) covers.
    Report {
        knot: String,
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
}

#[derive(Debug, Subcommand)]
enum HyperbolicCmd {
    /// Core geodesic length 2π/(p²+q²) of the p/q filling.
    Length {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// One CSV row describing the filling family at w.
    Family {
        #[arg(allow_hyphen_values = true)]
        w: String,
        /// Torus modulus, as a+bi.
        #[arg(long, default_value = "i", allow_hyphen_values = true)]
        zeta: String,
    },
}

/// Accumulates `key=value` pairs and renders them in either format.
struct Report {
    format: Format,
    out: String,
}

impl Report {
    fn new(format: Format) -> Report {
        Report {
            format,
            out: String::new(),
        }
    }

    /// A value shown in both formats.
    fn kv(&mut self, key: &str, value: impl std::fmt::Display) {
        match self.format {
            Format::Machine => writeln!(self.out, "{key}={value}"),
            Format::Text => writeln!(self.out, "{}: {value}", key.replace('_', " ")),
        }
        .expect("writing to a String");
    }

    /// Text-only prose.
    fn text(&mut self, line: impl std::fmt::Display) {
        if self.format == Format::Text {
            writeln!(self.out, "{line}").expect("writing to a String");
        }
    }

    /// Machine-only field.
    fn machine(&mut self, key: &str, value: impl std::fmt::Display) {
        if self.format == Format::Machine {
            writeln!(self.out, "{key}={value}").expect("writing to a String");
        }
    }
}

type CmdResult = Result<String, String>;

fn slope_arg(s: &str) -> Result<Slope, String> {
    s.parse().map_err(|e| format!("invalid slope {s:?}: {e}"))
}

fn int_arg(name: &str, s: &str) -> Result<i64, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("{name} must be an integer, got {s:?}"))
}

fn complex_arg(name: &str, s: &str) -> Result<Complex64, String> {
    let z: Complex64 = match s.trim() {
        "i" => Complex64::new(0.0, 1.0),
        "-i" => Complex64::new(0.0, -1.0),
        t => t
            .parse()
            .map_err(|_| format!("{name} must be a complex number a+bi, got {s:?}"))?,
    };
    if !z.is_finite() {
        return Err(format!("{name} must be finite, got {s:?}"));
    }
    Ok(z)
}

fn read_file(path: &str) -> Result<String, String> {
    std::fs::read_to_string(Path::new(path)).map_err(|e| format!("cannot read {path:?}: {e}"))
}

fn bounded_exponents(s: Slope) -> Result<Vec<i64>, String> {
    canonical_exponents_bounded(s, MAX_WORD_RUNS)
        .ok_or_else(|| format!("canonical word for {s} has more than {MAX_WORD_RUNS} S letters"))
}

fn slope_decompose(fmt: Format, slope: &str) -> CmdResult {
    let s = slope_arg(slope)?;
    let exps = bounded_exponents(s)?;
    let m = exponents_to_matrix(&exps).ok_or("matrix entries overflow")?;
    let mut r = Report::new(fmt);
    match fmt {
        Format::Text => r.text(format_exponents(&exps)),
        Format::Machine => {
            r.machine("slope", s);
            r.machine("word", format_exponents(&exps));
            let [[a, b], [c, d]] = m.0;
            r.machine("matrix", format!("{a},{b},{c},{d}"));
        }
    }
    Ok(r.out)
}

fn bounded_twists(s: Slope) -> Result<TwistVector, String> {
    let exps = canonical_exponents_bounded(s, MAX_CROSSINGS as usize + 2)
        .ok_or_else(|| format!("b({s}) needs more than {MAX_CROSSINGS} crossings"))?;
    let tv = TwistVector::new(exps);
    if tv.crossing_count() > MAX_CROSSINGS {
        return Err(format!(
            "b({s}) needs {} crossings, limit is {MAX_CROSSINGS}",
            tv.crossing_count()
        ));
    }
    Ok(tv)
}

fn tangle_cmd(fmt: Format, cmd: &TangleCmd) -> CmdResult {
    let (TangleCmd::Bridge { slope } | TangleCmd::Det { slope }) = cmd;
    let s = slope_arg(slope)?;
    let tv = bounded_twists(s)?;
    let d = two_bridge_diagram(s).map_err(|e| e.to_string())?;
    let mut r = Report::new(fmt);
    match cmd {
        TangleCmd::Bridge { .. } => {
            r.machine("slope", s);
            r.machine("twist_vector", &tv);
            r.machine("crossings", d.crossing_count());
            r.machine("components", d.component_count());
            match fmt {
                Format::Text => r.out.push_str(&d.to_string()),
                Format::Machine => {
                    for line in d.to_string().lines() {
                        r.machine("pd", line);
                    }
                }
            }
        }
        TangleCmd::Det { .. } => {
            let det = diagram_determinant(&d).map_err(|e| e.to_string())?;
            r.kv("slope", s);
            r.kv("twist_vector", &tv);
            r.kv("crossings", d.crossing_count());
            r.kv("components", d.component_count());
            r.kv("determinant", det);
        }
    }
    Ok(r.out)
}

fn load_link(path: &str) -> Result<FramedLink, String> {
    read_file(path)?.parse().map_err(|e| format!("{path}: {e}"))
}

fn surgery_cmd(fmt: Format, cmd: &SurgeryCmd) -> CmdResult {
    let mut r = Report::new(fmt);
    match cmd {
        SurgeryCmd::H1 { file } => {
            let link = load_link(file)?;
            r.kv("components", link.len());
            r.kv("h1_order", h1_order(&link).map_err(|e| e.to_string())?);
        }
        SurgeryCmd::Twist { file, component, n } => {
            let link = load_link(file)?;
            let n = int_arg("n", n)?;
            let j = link
                .components()
                .iter()
                .position(|c| c.name == *component)
                .or_else(|| component.parse::<usize>().ok())
                .ok_or_else(|| format!("no component named {component:?}"))?;
            let before = h1_order(&link).map_err(|e| e.to_string())?;
            let twisted = rolfsen_twist(&link, j, n).map_err(|e| e.to_string())?;
            let after = h1_order(&twisted).map_err(|e| e.to_string())?;
            r.kv("h1_order_before", before);
            r.kv("h1_order_after", after);
            match fmt {
                Format::Text => r.out.push_str(&twisted.to_string()),
                Format::Machine => {
                    for (k, c) in twisted.components().iter().enumerate() {
                        r.machine(
                            &format!("component.{k}"),
                            format!("{} {} {}", c.name, c.framing, c.unknotted),
                        );
                    }
                    for i in 0..twisted.len() {
                        let row: Vec<String> = (0..twisted.len())
                            .map(|k| twisted.linking(i, k).to_string())
                            .collect();
                        r.machine(&format!("linking.{i}"), row.join(" "));
                    }
                }
            }
        }
    }
    Ok(r.out)
}

fn seifert_cmd(fmt: Format, cmd: &SeifertCmd) -> CmdResult {
    let mut r = Report::new(fmt);
    match cmd {
        SeifertCmd::Quotient { p, q, filling } => {
            let (p, q) = (int_arg("p", p)?, int_arg("q", q)?);
            let s = slope_arg(filling)?;
            let inv = quotient_invariants(p, q, s).map_err(|e| e.to_string())?;
            r.kv("invariants", &inv);
            r.kv(
                "h1_order",
                quotient_h1_order(p, q, s).map_err(|e| e.to_string())?,
            );
            r.kv(
                "sfs_h1_order",
                sfs_h1_order(&inv).map_err(|e| e.to_string())?,
            );
        }
        SeifertCmd::H1 { invariants } => {
            let inv: SeifertInvariants = invariants
                .parse()
                .map_err(|e: crate::seifert::SeifertError| e.to_string())?;
            r.kv("invariants", &inv);
            r.kv("h1_order", sfs_h1_order(&inv).map_err(|e| e.to_string())?);
            r.kv(
                "euler_number",
                euler_number(&inv).map_err(|e| e.to_string())?,
            );
        }
    }
    Ok(r.out)
}

fn involution_cmd(fmt: Format, cmd: &InvolutionCmd) -> CmdResult {
    let InvolutionCmd::Extend {
        kind,
        slope,
        quotient_knot,
    } = cmd;
    let t: SymmetryType = kind
        .parse()
        .map_err(|e: crate::involution::InvolutionError| e.to_string())?;
    let s = slope_arg(slope)?;
    let qk = quotient_knot
        .as_deref()
        .map(str::parse::<QuotientKnot>)
        .transpose()
        .map_err(|e| e.to_string())?;
    let res = extend_involution(t, s, qk.as_ref()).map_err(|e| e.to_string())?;
    let mut r = Report::new(fmt);
    r.kv("type", t);
    r.kv("slope", s);
    r.kv("extends", res.extends);
    r.kv("free", res.free);
    r.kv("quotient", &res.quotient.kind);
    r.kv("orientable", res.quotient.orientable);
    r.kv("branch_components", res.branch_components);
    r.kv("degenerate", res.degenerate);
    Ok(r.out)
}

fn census_source(path: Option<&str>) -> Result<Option<Census>, String> {
    let env = std::env::var(CENSUS_ENV).ok().filter(|p| !p.is_empty());
    let Some(path) = path.map(str::to_string).or(env) else {
        return Ok(None);
    };
    let text = read_file(&path)?;
    load_census(text.as_bytes())
        .map(Some)
        .map_err(|e| format!("{path}: {e}"))
}

fn census_cmd(fmt: Format, census: Option<&str>, cmd: &CensusCmd) -> CmdResult {
    let CensusCmd::Report { knot, slope } = cmd;
    let s = slope_arg(slope)?;
    let loaded = census_source(census)?;
    let table = loaded.as_ref().unwrap_or_else(|| Census::embedded());
    let rep = quotient_report(table, knot, s).map_err(|e| e.to_string())?;
    let mut r = Report::new(fmt);
    r.text(format!("{}({})", rep.knot, rep.slope));
    r.machine("knot", &rep.knot);
    r.machine("slope", rep.slope);
    r.machine("quotient_count", rep.lines.len());
    if rep.lines.is_empty() {
        r.text("no two-fold branched quotients");
    }
    for (k, line) in rep.lines.iter().enumerate() {
        let res = &line.result;
        let via = line.via.as_ref().map(|(k, s)| format!("{k}({s})"));
        let mut text = format!("quotient {}: {}", line.class, res.quotient.kind);
        if res.free {
            text.push_str(" [free]");
        } else {
            let _ = write!(text, " [branch components {}]", res.branch_components);
        }
        if !res.quotient.orientable {
            text.push_str(" [non-orientable]");
        }
        if let Some(v) = &via {
            let _ = write!(text, " via {v}");
        }
        r.text(text);
        r.machine(&format!("quotient.{k}.class"), line.class);
        r.machine(&format!("quotient.{k}.kind"), &res.quotient.kind);
        r.machine(&format!("quotient.{k}.orientable"), res.quotient.orientable);
        r.machine(&format!("quotient.{k}.free"), res.free);
        r.machine(
            &format!("quotient.{k}.branch_components"),
            res.branch_components,
        );
        r.machine(&format!("quotient.{k}.via"), via.as_deref().unwrap_or("-"));
    }
    r.kv("covers_s3", rep.covers_three_sphere());
    if let Some(g) = rep.symmetry_group {
        r.kv("symmetry_group", g);
    }
    for (k, f) in rep.facts.iter().enumerate() {
        if let FactKind::SymmetryGroup(_) = f.fact {
            continue;
        }
        r.text(format!("fact: {}", f.fact));
        r.machine(&format!("fact.{k}"), &f.fact);
    }
    Ok(r.out)
}

fn length_cell(f: &crate::hyperbolic::MobiusMap) -> String {
    complex_length(f)
        .map(format_complex)
        .unwrap_or_else(|_| classify(f).to_string())
}

fn family_row(fam: &FillingFamily) -> String {
    let w = fam.w.map(format_complex).unwrap_or_else(|| "inf".into());
    let (ra, rb) = match conjugation_residual(fam) {
        Ok((a, b)) => (format_real(a), format_real(b)),
        Err(_) => ("-".into(), "-".into()),
    };
    format!(
        "{w},{},{},{ra},{rb},{},{}",
        format_complex(fam.a.trace()),
        format_complex(fam.b.trace()),
        length_cell(&fam.a),
        length_cell(&fam.b)
    )
}

fn hyperbolic_cmd(fmt: Format, cmd: &HyperbolicCmd) -> CmdResult {
    let mut r = Report::new(fmt);
    match cmd {
        HyperbolicCmd::Length { p, q } => {
            let (p, q) = (int_arg("p", p)?, int_arg("q", q)?);
            let len = core_geodesic_length(p, q).map_err(|e| e.to_string())?;
            match fmt {
                Format::Text => r.text(format_real(len)),
                Format::Machine => {
                    r.machine("length", format_real(len));
                    if let Ok((m, n)) = dual_exponents(p, q) {
                        r.machine("m", m);
                        r.machine("n", n);
                    }
                    let ell = core_loop(p, q, Complex64::new(0.0, 1.0))
                        .ok()
                        .and_then(|f| complex_length(&f).ok());
                    r.machine(
                        "complex_length",
                        ell.map(format_complex).unwrap_or_else(|| "-".into()),
                    );
                }
            }
        }
        HyperbolicCmd::Family { w, zeta } => {
            let w = match w.trim() {
                "inf" | "∞" => None,
                other => Some(complex_arg("w", other)?),
            };
            let zeta = complex_arg("zeta", zeta)?;
            let fam = filling_family(w, zeta).map_err(|e| e.to_string())?;
            r.out
                .push_str("w,trace_a,trace_b,residual_a,residual_b,length_a,length_b\n");
            r.out.push_str(&family_row(&fam));
            r.out.push('\n');
        }
    }
    Ok(r.out)
}

/// Parses `args` (program name first) and runs the command.
///
/// Exit codes: 0 on success, 1 when a value is malformed or violates a
/// precondition, 2 on usage errors.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    let fmt = cli.format;
    let result = match &cli.command {
        Command::Slope(SlopeCmd::Decompose { slope }) => slope_decompose(fmt, slope),
        Command::Tangle(cmd) => tangle_cmd(fmt, cmd),
        Command::Surgery(cmd) => surgery_cmd(fmt, cmd),
        Command::Seifert(cmd) => seifert_cmd(fmt, cmd),
        Command::Involution(cmd) => involution_cmd(fmt, cmd),
        Command::Census(cmd) => census_cmd(fmt, cli.census.as_deref(), cmd),
        Command::Hyperbolic(cmd) => hyperbolic_cmd(fmt, cmd),
    };
    match result {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(msg) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}
