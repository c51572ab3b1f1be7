//! Command-line frontend. [`run`] is the whole program minus process exit.

pub mod cache;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use pfaffschub::complexes::subword_complex;
use pfaffschub::coxeter::{
    dominant_component, essential_set, parse_fpf, rank_table, rothe_diagram, ss_rothe_diagram,
    Diagram, Permutation,
};
use pfaffschub::groebner::{Budget, GroebnerError, KPolynomial, MonomialIdeal};
use pfaffschub::grothendieck::{
    dream_ideal_intersection, groth_sp_dreams, groth_sp_inclusion_exclusion, groth_sp_kpoly,
    GrothError,
};
use pfaffschub::pipedreams::{enumerate_fp, enumerate_fp_plus, enumerate_rp, render};
use pfaffschub::polyring::{TermOrder, VarSpace};
use pfaffschub::schubert_ideals::{
    classical_generators, groebner_generators_ss, ssi_generators, ssj_generators_of, GeneratorSet,
};
use pfaffschub::tableaux::rank_table_of_monomial;
use pfaffschub::verify::{
    cached_basis, run_suite, BasisCache, Replay, Suite, VerificationReport, VerifyConfig,
    DEFAULT_SEED,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "pfaffschub",
    version,
    about = "Skew-symmetric matrix Schubert ideals, pipe dreams and K-polynomials"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Ascii,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Rothe diagram, essential set and dominant component.
    Diagram(Target),
    /// Rank table of an involution, a permutation, or a set of cells.
    RankTable(RankArgs),
    /// Generators of the ideal: Pfaffians, block Pfaffians, minors or monomials.
    Ideal(IdealArgs),
    /// Reduced Gröbner basis.
    Groebner(GroebnerArgs),
    /// Pipe dreams.
    Dreams(DreamArgs),
    /// Subword complex on a cell set (default the lower triangle).
    Complex(ComplexArgs),
    /// Symplectic Grothendieck polynomial.
    Kpoly(KpolyArgs),
    /// Decomposition of the monomial ideal as an intersection over pipe dreams.
    Decompose(Target),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// ASCII picture of a cell set or diagram.
    Render(RenderArgs),
}

#[derive(Args, Debug, Clone)]
struct Target {
    /// Involution in cycle notation, taken in `FPF_n`.
    #[arg(long, conflicts_with = "perm")]
    fpf: Option<String>,
    /// Permutation in one-line notation.
    #[arg(long)]
    perm: Option<String>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Debug)]
struct RankArgs {
    #[command(flatten)]
    target: Target,
    /// Cells `r,c;r,c;...` of a 0/1 matrix, used with `--m --n`.
    #[arg(long, conflicts_with_all = ["fpf", "perm"])]
    cells: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum IdealKind {
    Pfaffian,
    Block,
    Minor,
    Monomial,
}

#[derive(Args, Debug)]
struct IdealArgs {
    #[command(flatten)]
    target: Target,
    /// Default: `pfaffian` for `--fpf`, `minor` for `--perm`.
    #[arg(long, value_enum)]
    kind: Option<IdealKind>,
    #[arg(long)]
    essential_only: bool,
}

#[derive(Args, Debug, Clone)]
struct GbOpts {
    #[arg(long)]
    no_cache: bool,
    /// Use cache hits without re-checking them.
    #[arg(long)]
    no_paranoid: bool,
    #[arg(long)]
    budget_pairs: Option<usize>,
    #[arg(long)]
    budget_steps: Option<usize>,
    #[arg(long)]
    essential_only: bool,
}

impl GbOpts {
    fn budget(&self) -> Budget {
        let d = Budget::default();
        Budget {
            max_pairs: self.budget_pairs.unwrap_or(d.max_pairs),
            max_steps: self.budget_steps.unwrap_or(d.max_steps),
        }
    }

    fn cache(&self) -> Option<cache::DiskCache> {
        if self.no_cache {
            return None;
        }
        cache::default_dir().map(|d| cache::DiskCache::new(d, !self.no_paranoid))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Revlex,
    Deglex,
}

#[derive(Args, Debug)]
struct GroebnerArgs {
    #[command(flatten)]
    target: Target,
    /// A generator set in JSON as printed by `ideal`.
    #[arg(long, conflicts_with_all = ["fpf", "perm"])]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OrderArg::Revlex)]
    order: OrderArg,
    #[command(flatten)]
    opts: GbOpts,
}

#[derive(Args, Debug)]
struct DreamArgs {
    #[command(flatten)]
    target: Target,
    /// Extended dreams inside `--cells` (default the lower triangle).
    #[arg(long)]
    plus: bool,
    #[arg(long, requires = "plus")]
    cells: Option<String>,
}

#[derive(Args, Debug)]
struct ComplexArgs {
    #[arg(long)]
    fpf: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    cells: Option<String>,
    /// Also search for a vertex decomposition.
    #[arg(long)]
    vd: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Route {
    Ideal,
    Dreams,
    InclusionExclusion,
}

#[derive(Args, Debug)]
struct KpolyArgs {
    #[arg(long)]
    fpf: String,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Route::Ideal)]
    route: Route,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, required_unless_present = "replay")]
    suite: Option<String>,
    #[arg(long, required_unless_present = "replay")]
    n: Option<usize>,
    /// Row window for classical suites (default `--n`).
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    exhaustive: bool,
    /// Rerun a single instance from a replay file.
    #[arg(long, conflicts_with = "suite")]
    replay: Option<PathBuf>,
    /// Where replay files of failing instances are written.
    #[arg(long, default_value = "pfaffschub-replays")]
    replay_dir: PathBuf,
    #[command(flatten)]
    opts: GbOpts,
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[command(flatten)]
    target: Target,
    #[arg(long, conflicts_with_all = ["fpf", "perm"])]
    cells: Option<String>,
}

/// Usage errors exit 2, budget errors 3, verification failures 1.
#[derive(Debug)]
enum CliError {
    Usage(String),
    Budget(String),
    Failed(String),
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::PairBudget(_)
            | GroebnerError::StepBudget(_)
            | GroebnerError::DimensionBudget { .. } => CliError::Budget(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

type Res<T> = Result<T, CliError>;

// JSON output shapes. Cell sets are written as `r,c;r,c;...`.

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramOut {
    pub kind: String,
    pub input: String,
    pub length: usize,
    pub diagram: String,
    pub essential: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dominant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub corners: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTableOut {
    pub rows: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdealOut {
    pub ideal: MonomialIdeal,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerOut {
    pub order: TermOrder,
    pub space: VarSpace,
    pub basis: Vec<String>,
    pub initial_ideal: MonomialIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DreamsOut {
    pub flavor: String,
    pub count: usize,
    pub dreams: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexOut {
    pub vertices: String,
    pub facets: Vec<String>,
    pub minimal_nonfaces: Vec<String>,
    pub reduced_euler: i64,
    pub dimension: Option<i64>,
    pub pure: bool,
    /// `ball` when the reduced Euler characteristic vanishes, else `sphere`;
    /// `void` without facets.
    pub shape: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertex_decomposable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    /// Pivots of the decomposition in preorder.
    pub shedding_order: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KpolyOut {
    pub z: String,
    pub n: usize,
    pub kpoly: KPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeOut {
    pub ideal: MonomialIdeal,
    pub components: Vec<String>,
    pub intersection: MonomialIdeal,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderOut {
    pub rows: Vec<String>,
}

fn cells_text(d: &Diagram) -> String {
    d.to_cells_string()
}

fn parse_cells(s: &str) -> Res<Diagram> {
    Diagram::parse_cells(s).map_err(usage)
}

enum Resolved {
    Fpf(Permutation, usize),
    Perm(Permutation, usize, usize),
}

fn resolve(t: &Target) -> Res<Resolved> {
    match (&t.fpf, &t.perm) {
        (Some(z), None) => {
            let n = t.n.ok_or_else(|| usage("--fpf needs --n"))?;
            Ok(Resolved::Fpf(parse_fpf(z, n).map_err(usage)?, n))
        }
        (None, Some(w)) => {
            let w = Permutation::parse_one_line(w).map_err(usage)?;
            let n = t.n.unwrap_or(w.window());
            let m = t.m.unwrap_or(n);
            Ok(Resolved::Perm(w, m, n))
        }
        _ => Err(usage("give exactly one of --fpf or --perm")),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn groth_err(e: GrothError) -> CliError {
    usage(e)
}

/// Runs the program on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let format = cli.format;
    let result = match cli.cmd {
        Cmd::Diagram(t) => cmd_diagram(&t, format),
        Cmd::RankTable(a) => cmd_rank_table(&a, format),
        Cmd::Ideal(a) => cmd_ideal(&a, format),
        Cmd::Groebner(a) => cmd_groebner(&a, format),
        Cmd::Dreams(a) => cmd_dreams(&a, format),
        Cmd::Complex(a) => cmd_complex(&a, format),
        Cmd::Kpoly(a) => cmd_kpoly(&a, format),
        Cmd::Decompose(t) => cmd_decompose(&t, format),
        Cmd::Verify(a) => return cmd_verify(&a, format, out, err),
        Cmd::Render(a) => cmd_render(&a, format),
    };
    match result {
        Ok(s) => {
            let _ = out.write_all(s.as_bytes());
            EXIT_OK
        }
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(CliError::Budget(m)) => {
            let _ = writeln!(err, "budget exceeded: {m}");
            EXIT_BUDGET
        }
        Err(CliError::Failed(s)) => {
            let _ = out.write_all(s.as_bytes());
            EXIT_FAIL
        }
    }
}

fn cmd_diagram(t: &Target, format: Format) -> Res<String> {
    let (o, window) = match resolve(t)? {
        Resolved::Fpf(z, n) => {
            let d = ss_rothe_diagram(&z).map_err(usage)?;
            let (dom, corners) = dominant_component(&z);
            let o = DiagramOut {
                kind: "fpf".into(),
                input: z.to_cycle_string(),
                length: z.fpf_length().map_err(usage)?,
                essential: cells_text(&essential_set(&d)),
                diagram: cells_text(&d),
                dominant: Some(cells_text(&dom)),
                corners: Some(cells_text(&corners)),
            };
            (o, n.max(z.window()))
        }
        Resolved::Perm(w, m, n) => {
            let d = rothe_diagram(&w).map_err(usage)?;
            let o = DiagramOut {
                kind: "permutation".into(),
                input: w.to_one_line(),
                length: w.length().map_err(usage)?,
                essential: cells_text(&essential_set(&d)),
                diagram: cells_text(&d),
                dominant: None,
                corners: None,
            };
            (o, m.max(n).max(w.window()))
        }
    };
    Ok(match format {
        Format::Json => json(&o),
        Format::Text => format!(
            "diagram: {}\nessential: {}\nlength: {}\n{}{}",
            o.diagram,
            o.essential,
            o.length,
            o.dominant
                .as_ref()
                .map(|d| format!("dominant: {d}\n"))
                .unwrap_or_default(),
            o.corners
                .as_ref()
                .map(|d| format!("corners: {d}\n"))
                .unwrap_or_default()
        ),
        Format::Ascii => render(&Diagram::parse_cells(&o.diagram).map_err(usage)?, window),
    })
}

fn cmd_rank_table(a: &RankArgs, format: Format) -> Res<String> {
    let table = if let Some(c) = &a.cells {
        let d = parse_cells(c)?;
        let m = a.target.m.unwrap_or(d.max_row());
        let n = a.target.n.unwrap_or(d.max_col());
        if d.max_row() > m || d.max_col() > n {
            return Err(usage("cells outside the m x n window"));
        }
        let mono = pfaffschub::polyring::Monomial::product_of(d.iter().map(|c| (c.row, c.col)));
        rank_table_of_monomial(&mono, m, n)
    } else {
        match resolve(&a.target)? {
            Resolved::Fpf(z, n) => rank_table(&z, n, n),
            Resolved::Perm(w, m, n) => rank_table(&w, m, n),
        }
    };
    let o = RankTableOut { rows: table.rows() };
    Ok(match format {
        Format::Json => json(&o),
        _ => o
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
                    + "\n"
            })
            .collect(),
    })
}

fn generator_text(g: &GeneratorSet) -> String {
    g.generators
        .iter()
        .map(|f| f.to_text(TermOrder::RevLex) + "\n")
        .collect()
}

fn monomial_out(j: MonomialIdeal, format: Format) -> String {
    let o = MonomialIdealOut {
        text: j.to_text(),
        ideal: j,
    };
    match format {
        Format::Json => json(&o),
        _ => o.text + "\n",
    }
}

fn cmd_ideal(a: &IdealArgs, format: Format) -> Res<String> {
    let gens = match (resolve(&a.target)?, a.kind) {
        (Resolved::Fpf(z, n), None | Some(IdealKind::Pfaffian)) => {
            ssi_generators(&z, n, a.essential_only).map_err(usage)?
        }
        (Resolved::Fpf(z, n), Some(IdealKind::Block)) => {
            groebner_generators_ss(&z, n).map_err(usage)?
        }
        (Resolved::Fpf(z, n), Some(IdealKind::Monomial)) => {
            return Ok(monomial_out(
                ssj_generators_of(&z, n).map_err(usage)?,
                format,
            ))
        }
        (Resolved::Perm(w, m, n), None | Some(IdealKind::Minor)) => {
            classical_generators(&w, m, n).map_err(usage)?.0
        }
        (Resolved::Perm(w, m, n), Some(IdealKind::Monomial)) => {
            return Ok(monomial_out(
                classical_generators(&w, m, n).map_err(usage)?.1,
                format,
            ))
        }
        (_, Some(k)) => return Err(usage(format!("--kind {k:?} does not apply to this input"))),
    };
    Ok(match format {
        Format::Json => gens.to_json() + "\n",
        _ => generator_text(&gens),
    })
}

fn cmd_groebner(a: &GroebnerArgs, format: Format) -> Res<String> {
    let gens = if let Some(p) = &a.input {
        let s = fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
        GeneratorSet::from_json(&s).map_err(usage)?
    } else {
        match resolve(&a.target)? {
            Resolved::Fpf(z, n) => ssi_generators(&z, n, a.opts.essential_only).map_err(usage)?,
            Resolved::Perm(w, m, n) => classical_generators(&w, m, n).map_err(usage)?.0,
        }
    };
    let order = match a.order {
        OrderArg::Revlex => TermOrder::RevLex,
        OrderArg::Deglex => TermOrder::DegLex,
    };
    let cache = a.opts.cache();
    let space = gens.space();
    let basis = cached_basis(
        &gens.generators,
        space,
        order,
        a.opts.budget(),
        cache.as_ref().map(|c| c as &dyn BasisCache),
    )?;
    let o = GroebnerOut {
        order,
        space,
        basis: basis.iter().map(|f| f.to_text(order)).collect(),
        initial_ideal: MonomialIdeal::new(
            basis.iter().filter_map(|f| f.leading_monomial(order)),
            space,
        ),
    };
    Ok(match format {
        Format::Json => json(&o),
        _ => o.basis.iter().map(|s| format!("{s}\n")).collect(),
    })
}

fn dreams_output(flavor: &str, dreams: &[Diagram], window: usize, format: Format) -> String {
    let o = DreamsOut {
        flavor: flavor.into(),
        count: dreams.len(),
        dreams: dreams.iter().map(cells_text).collect(),
    };
    match format {
        Format::Json => json(&o),
        Format::Text => o.dreams.iter().map(|d| format!("{d}\n")).collect(),
        Format::Ascii => dreams
            .iter()
            .map(|d| render(d, window))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn cmd_dreams(a: &DreamArgs, format: Format) -> Res<String> {
    match resolve(&a.target)? {
        Resolved::Fpf(z, n) => {
            if a.plus {
                let q = match &a.cells {
                    Some(c) => parse_cells(c)?,
                    None => Diagram::lower_triangle(n),
                };
                let d = enumerate_fp_plus(&z, n, &q).map_err(usage)?;
                Ok(dreams_output("extended_fpf", &d, n, format))
            } else {
                let d = enumerate_fp(&z, n).map_err(usage)?;
                Ok(dreams_output("fpf", &d, n, format))
            }
        }
        Resolved::Perm(w, m, n) => {
            if a.plus {
                return Err(usage("--plus needs --fpf"));
            }
            let d = enumerate_rp(&w, m, n).map_err(usage)?;
            Ok(dreams_output("classical", &d, m.max(n), format))
        }
    }
}

fn cmd_complex(a: &ComplexArgs, format: Format) -> Res<String> {
    let z = parse_fpf(&a.fpf, a.n).map_err(usage)?;
    let q = match &a.cells {
        Some(c) => parse_cells(c)?,
        None => Diagram::lower_triangle(a.n),
    };
    let delta = subword_complex(&z, a.n, &q);
    let r = delta.report();
    let cert = if a.vd {
        Some(delta.vertex_decomposition())
    } else {
        None
    };
    let o = ComplexOut {
        vertices: cells_text(&r.vertices),
        facets: r.facets.iter().map(cells_text).collect(),
        minimal_nonfaces: r.minimal_nonfaces.iter().map(cells_text).collect(),
        reduced_euler: r.euler,
        dimension: r.dimension,
        pure: r.pure,
        shape: if delta.is_void() {
            "void".into()
        } else if r.euler == 0 {
            "ball".into()
        } else {
            "sphere".into()
        },
        vertex_decomposable: cert.as_ref().map(|c| c.is_some()),
        shedding_order: cert.as_ref().and_then(|c| c.as_ref()).map(|c| {
            c.pivots()
                .iter()
                .map(|v| format!("{},{}", v.row, v.col))
                .collect()
        }),
    };
    Ok(match format {
        Format::Json => json(&o),
        _ => {
            let mut s = format!("vertices: {}\n", o.vertices);
            s += &format!(
                "facets: {}\n",
                o.facets
                    .iter()
                    .map(|f| format!("{{{f}}}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            s += &format!(
                "minimal non-faces: {}\n",
                o.minimal_nonfaces
                    .iter()
                    .map(|f| format!("{{{f}}}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            s += &format!("reduced euler: {}\nshape: {}\n", o.reduced_euler, o.shape);
            if let Some(v) = o.vertex_decomposable {
                s += &format!("vertex decomposable: {v}\n");
            }
            s
        }
    })
}

fn cmd_kpoly(a: &KpolyArgs, format: Format) -> Res<String> {
    let z = parse_fpf(&a.fpf, a.n).map_err(usage)?;
    let k = match a.route {
        Route::Ideal => groth_sp_kpoly(&z, a.n),
        Route::Dreams => groth_sp_dreams(&z, a.n),
        Route::InclusionExclusion => groth_sp_inclusion_exclusion(&z, a.n),
    }
    .map_err(groth_err)?;
    Ok(match format {
        Format::Json => json(&KpolyOut {
            z: z.to_cycle_string(),
            n: a.n,
            kpoly: k,
        }),
        _ => k.to_text() + "\n",
    })
}

fn cmd_decompose(t: &Target, format: Format) -> Res<String> {
    let (ideal, dreams, intersection) = match resolve(t)? {
        Resolved::Fpf(z, n) => (
            ssj_generators_of(&z, n).map_err(usage)?,
            enumerate_fp(&z, n).map_err(usage)?,
            dream_ideal_intersection(&z, n).map_err(groth_err)?,
        ),
        Resolved::Perm(w, m, n) => {
            let j = classical_generators(&w, m, n).map_err(usage)?.1;
            let rp = enumerate_rp(&w, m, n).map_err(usage)?;
            let parts: Vec<MonomialIdeal> = rp
                .iter()
                .map(|d| {
                    MonomialIdeal::of_variables(d.iter().map(|c| (c.row, c.col)), VarSpace::General)
                })
                .collect();
            let meet = MonomialIdeal::intersect_all(&parts, VarSpace::General);
            (j, rp, meet)
        }
    };
    let o = DecomposeOut {
        equal: ideal == intersection,
        components: dreams.iter().map(cells_text).collect(),
        ideal,
        intersection,
    };
    let s = match format {
        Format::Json => json(&o),
        _ => format!(
            "{}\n= {}\n{}",
            o.ideal.to_text(),
            o.components
                .iter()
                .map(|c| format!("({c})"))
                .collect::<Vec<_>>()
                .join(" & "),
            if o.equal { "equal\n" } else { "NOT EQUAL\n" }
        ),
    };
    if o.equal {
        Ok(s)
    } else {
        Err(CliError::Failed(s))
    }
}

fn cmd_render(a: &RenderArgs, format: Format) -> Res<String> {
    let (d, window) = if let Some(c) = &a.cells {
        let d = parse_cells(c)?;
        let n = a.target.n.unwrap_or(d.max_row().max(d.max_col()));
        (d, n)
    } else {
        match resolve(&a.target)? {
            Resolved::Fpf(z, n) => (ss_rothe_diagram(&z).map_err(usage)?, n.max(z.window())),
            Resolved::Perm(w, m, n) => {
                (rothe_diagram(&w).map_err(usage)?, m.max(n).max(w.window()))
            }
        }
    };
    let pic = render(&d, window);
    Ok(match format {
        Format::Json => json(&RenderOut {
            rows: pic.lines().map(String::from).collect(),
        }),
        _ => pic,
    })
}

fn cmd_verify(a: &VerifyArgs, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cache = a.opts.cache();
    let cache_ref = cache.as_ref().map(|c| c as &dyn BasisCache);
    if let Some(p) = &a.replay {
        let replay = match fs::read_to_string(p)
            .map_err(|e| e.to_string())
            .and_then(|s| Replay::from_json(&s).map_err(|e| e.to_string()))
        {
            Ok(r) => r,
            Err(e) => {
                let _ = writeln!(err, "error: {}: {e}", p.display());
                return EXIT_USAGE;
            }
        };
        let outcome = replay.run(cache_ref);
        let _ = match format {
            Format::Json => out.write_all(json(&outcome).as_bytes()),
            _ => writeln!(out, "{outcome:?}"),
        };
        return match outcome {
            pfaffschub::verify::Outcome::Pass => EXIT_OK,
            pfaffschub::verify::Outcome::Fail { .. } => EXIT_FAIL,
            pfaffschub::verify::Outcome::Error { budget: true, .. } => EXIT_BUDGET,
            pfaffschub::verify::Outcome::Error { .. } => EXIT_FAIL,
        };
    }
    let name = a.suite.as_deref().unwrap_or_default();
    let suites: Vec<Suite> = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        match name.parse() {
            Ok(s) => vec![s],
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        }
    };
    let n = a.n.unwrap_or_default();
    let cfg = VerifyConfig {
        seed: a.seed,
        exhaustive: a.exhaustive,
        jobs: a.jobs,
        budget: a.opts.budget(),
        essential_only: a.opts.essential_only,
        ..VerifyConfig::default()
    };
    let mut reports: Vec<VerificationReport> = Vec::new();
    for s in suites {
        match run_suite(s, a.m.unwrap_or(n), n, &cfg, cache_ref) {
            Ok(r) => reports.push(r),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        }
    }
    let _ = match format {
        Format::Json if reports.len() == 1 => out
            .write_all(reports[0].to_json().as_bytes())
            .and_then(|_| out.write_all(b"\n")),
        Format::Json => out.write_all(json(&reports).as_bytes()),
        _ => {
            let mut s = VerificationReport::summary_header();
            for r in &reports {
                s += &r.summary();
            }
            out.write_all(s.as_bytes())
        }
    };
    let mut written = 0;
    for r in &reports {
        for (k, rep) in r.replays().enumerate() {
            let path = a.replay_dir.join(format!("{}-n{}-{k}.json", r.suite, r.n));
            let res =
                fs::create_dir_all(&a.replay_dir).and_then(|_| fs::write(&path, rep.to_json()));
            match res {
                Ok(()) => written += 1,
                Err(e) => {
                    let _ = writeln!(err, "could not write {}: {e}", path.display());
                }
            }
        }
    }
    if written > 0 {
        let _ = writeln!(
            err,
            "wrote {written} replay file(s) to {}",
            a.replay_dir.display()
        );
    }
    let failed: usize = reports
        .iter()
        .map(|r| r.instances - r.passed - r.budget_errors())
        .sum();
    let budget: usize = reports.iter().map(|r| r.budget_errors()).sum();
    if failed > 0 {
        EXIT_FAIL
    } else if budget > 0 {
        EXIT_BUDGET
    } else {
        EXIT_OK
    }
}
