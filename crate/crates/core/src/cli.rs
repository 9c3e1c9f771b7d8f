//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariant::{discriminant, saito_discriminant, InvariantMatrix, InvariantMatrixJson};
use crate::mf::{
    all_blocks, mf_for_partition, pushforward_matrix, pushforward_partner, reconcile, verify_mf, young_subgroup_mf, MatrixFactorization,
    PushforwardMode,
};
use crate::render::{latex_matrix, latex_mtableau, latex_poly};
use crate::specht::{degree_indices, generators_for, BasisElementJson, SpechtKind};
use crate::symmetric::BasisKind;
use crate::tableaux::{mtableau_types, natural_standard_tableaux, partitions, standard_tableaux, MTableau, Partition};

/// Largest `n` accepted without `--allow-large`.
pub const DESK_SCALE: usize = 6;
/// Largest `n` for the full pushforward without `--allow-large`.
pub const PUSHFORWARD_SCALE: usize = 5;
/// Environment variable holding the worker thread count.
pub const WORKERS_ENV: &str = "SPECHT_MF_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "specht-mf", version, about = "Matrix factorizations of the S_n discriminant from higher Specht polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write output to this file instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for block computations.
    #[arg(long, env = WORKERS_ENV, global = true)]
    pub workers: Option<usize>,

    /// Lift the desk-scale bound on n by one.
    #[arg(long, global = true)]
    pub allow_large: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List partitions and standard tableaux with words and indices.
    Tableaux(Selection),
    /// Print higher Specht polynomials F and modified polynomials H.
    Specht(SpechtArgs),
    /// Print the discriminant in the chosen coordinates.
    Discriminant(DiscriminantArgs),
    /// Build one block (A, B) of the matrix factorization.
    Mf(MfArgs),
    /// Build the full matrix of multiplication by z from B_H to B_F.
    Pushforward(PushforwardArgs),
    /// Build and check every block for n; exits 1 on any failure.
    Verify(Selection),
}

#[derive(Args, Debug, Clone)]
pub struct Selection {
    #[arg(long)]
    pub n: usize,
    /// Partition like `2,2,1`; for `--subgroup`, a tuple like `1|2`.
    #[arg(long)]
    pub partition: Option<String>,
    /// Tableau T: 1-based position in last letter order, or text like `1 2/3`.
    #[arg(long)]
    pub tableau: Option<String>,
    /// Young subgroup type, e.g. `1,2`.
    #[arg(long)]
    pub subgroup: Option<String>,
}

#[derive(Args, Debug)]
pub struct SpechtArgs {
    #[command(flatten)]
    pub sel: Selection,
    #[arg(long, value_enum, default_value_t = KindArg::Both)]
    pub kind: KindArg,
}

#[derive(Args, Debug)]
pub struct DiscriminantArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Coords::E)]
    pub coords: Coords,
    /// Also compute det(J J^T) in power sums and its ratio to the discriminant.
    #[arg(long)]
    pub saito_check: bool,
}

#[derive(Args, Debug)]
pub struct MfArgs {
    #[command(flatten)]
    pub sel: Selection,
    #[arg(long, value_enum, default_value_t = Coords::E)]
    pub coords: Coords,
    /// Matrix file (rows per line, entries separated by `;`) to reconcile A against.
    #[arg(long)]
    pub compare: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PushforwardArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Coords::E)]
    pub coords: Coords,
    /// Expand each column over all of B_F instead of the expected block.
    #[arg(long)]
    pub full: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coords {
    E,
    S,
    T,
}

impl Coords {
    pub fn kind(self) -> BasisKind {
        match self {
            Coords::E => BasisKind::Elementary,
            Coords::S => BasisKind::PowerSum,
            Coords::T => BasisKind::SlicedT,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KindArg {
    F,
    H,
    Both,
}

/// Rendered output plus whether every check passed.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Integrity(_) | Error::Internal(_) | Error::NotInSpan(_) | Error::RankDeficient(_) => 1,
        _ => 2,
    }
}

fn check_n(n: usize, allow_large: bool, bound: usize) -> Result<()> {
    if n == 0 {
        return Err(usage("n must be positive"));
    }
    let limit = if allow_large { bound + 1 } else { bound };
    if n > limit.min(crate::poly::MAX_VARS) {
        return Err(usage(format!(
            "n = {n} exceeds the desk-scale bound {limit}{}",
            if allow_large { "" } else { " (use --allow-large to raise it by one)" }
        )));
    }
    Ok(())
}

fn parse_partition(s: &str, n: usize) -> Result<Partition> {
    let p = Partition::parse(s)?;
    if p.n() != n {
        return Err(Error::InvalidPartition(format!("{p} is not a partition of {n}")));
    }
    Ok(p)
}

fn parse_type(s: &str, n: usize) -> Result<Vec<usize>> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| usage(format!("bad subgroup part '{x}'"))))
        .collect::<Result<_>>()?;
    if parts.iter().sum::<usize>() != n || parts.contains(&0) {
        return Err(usage(format!("subgroup type {s} does not sum to {n}")));
    }
    Ok(parts)
}

fn parse_shape_tuple(s: &str, type_: &[usize]) -> Result<Vec<Partition>> {
    let shape: Vec<Partition> = s.split('|').map(|x| Partition::parse(x.trim())).collect::<Result<_>>()?;
    let sizes: Vec<usize> = shape.iter().map(Partition::n).collect();
    if sizes != type_ {
        return Err(usage(format!("shape {s} does not have type {type_:?}")));
    }
    Ok(shape)
}

fn select<T: Clone + PartialEq>(list: &[T], selector: Option<&str>, parse: impl Fn(&str) -> Result<T>) -> Result<T> {
    match selector {
        None => list.first().cloned().ok_or_else(|| usage("nothing to select")),
        Some(s) => {
            if let Ok(k) = s.trim().parse::<usize>() {
                if k == 0 || k > list.len() {
                    return Err(Error::IndexOutOfRange { index: k, max: list.len() });
                }
                return Ok(list[k - 1].clone());
            }
            let t = parse(s)?;
            if list.contains(&t) {
                Ok(t)
            } else {
                Err(usage(format!("tableau '{s}' is not among the candidates")))
            }
        }
    }
}

/// The tableaux selected by `--partition`/`--subgroup`/`--tableau`: all of
/// them when no tableau is given.
fn selected_tableaux(sel: &Selection) -> Result<Vec<MTableau>> {
    let single = |t: crate::tableaux::Tableau| MTableau::single(t);
    let candidates: Vec<MTableau> = match (&sel.subgroup, &sel.partition) {
        (Some(ty), shape) => {
            let type_ = parse_type(ty, sel.n)?;
            let shapes = match shape {
                Some(s) => vec![parse_shape_tuple(s, &type_)?],
                None => mtableau_types(&type_)?,
            };
            let mut out = Vec::new();
            for s in shapes {
                out.extend(natural_standard_tableaux(&s)?);
            }
            out
        }
        (None, Some(p)) => standard_tableaux(&parse_partition(p, sel.n)?).into_iter().map(single).collect::<Result<_>>()?,
        (None, None) => {
            let mut out = Vec::new();
            for lam in partitions(sel.n)? {
                for t in standard_tableaux(&lam) {
                    out.push(single(t)?);
                }
            }
            out
        }
    };
    match &sel.tableau {
        None => Ok(candidates),
        Some(s) => Ok(vec![select(&candidates, Some(s), MTableau::parse)?]),
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct TableauJson {
    shape: Vec<Partition>,
    tableau: String,
    word: Vec<usize>,
    index: Vec<u32>,
    i_hat: Vec<u32>,
    degree: u32,
}

fn cmd_tableaux(sel: &Selection, format: Format) -> Result<Outcome> {
    if sel.n == 0 {
        return Err(usage("n must be positive"));
    }
    let list = selected_tableaux(sel)?;
    let rows: Vec<TableauJson> = list
        .iter()
        .map(|t| {
            let index = t.index();
            TableauJson {
                shape: t.shape(),
                tableau: t.to_text(),
                word: t.word(),
                index: index.letters,
                i_hat: index.i_hat,
                degree: index.i_total,
            }
        })
        .collect();
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&rows).map_err(|e| Error::Internal(e.to_string()))? + "\n",
        Format::Latex => list.iter().map(|t| latex_mtableau(t) + "\n").collect(),
        Format::Text => {
            let mut out = String::new();
            let mut current: Option<Vec<Partition>> = None;
            let mut k = 0;
            for r in &rows {
                if current.as_ref() != Some(&r.shape) {
                    let count = rows.iter().filter(|x| x.shape == r.shape).count();
                    let name: Vec<String> = r.shape.iter().map(ToString::to_string).collect();
                    let _ = writeln!(out, "{}: {count} tableaux", name.join(" x "));
                    current = Some(r.shape.clone());
                    k = 0;
                }
                k += 1;
                let _ = writeln!(
                    out,
                    "  {k}. {}  word [{}]  index [{}]  i_hat [{}]  degree {}",
                    r.tableau,
                    join(&r.word),
                    join(&r.index),
                    join(&r.i_hat),
                    r.degree
                );
            }
            let _ = writeln!(out, "total: {}", rows.len());
            out
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_specht(args: &SpechtArgs, format: Format) -> Result<Outcome> {
    if args.sel.n == 0 {
        return Err(usage("n must be positive"));
    }
    let kinds: &[SpechtKind] = match args.kind {
        KindArg::F => &[SpechtKind::F],
        KindArg::H => &[SpechtKind::H],
        KindArg::Both => &[SpechtKind::F, SpechtKind::H],
    };
    let mut elements = Vec::new();
    for t in selected_tableaux(&args.sel)? {
        let indices = degree_indices(&t)?;
        for &kind in kinds {
            elements.extend(generators_for(kind, &t, &indices)?);
        }
    }
    let text = match format {
        Format::Json => {
            let json: Vec<BasisElementJson> = elements.iter().map(|e| e.to_json()).collect();
            serde_json::to_string_pretty(&json).map_err(|e| Error::Internal(e.to_string()))? + "\n"
        }
        _ => elements
            .iter()
            .map(|e| format!("{:?}[T={}; P={}] (degree {}) = {}\n", e.kind, e.index.t, e.index.p, e.degree, e.poly))
            .collect(),
    };
    Ok(Outcome::ok(text))
}

#[derive(Serialize)]
struct SaitoJson {
    determinant: String,
    constant: String,
}

#[derive(Serialize)]
struct DiscriminantJson {
    delta: crate::symmetric::InvariantPolyJson,
    text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    saito: Option<SaitoJson>,
}

fn cmd_discriminant(args: &DiscriminantArgs, format: Format, allow_large: bool) -> Result<Outcome> {
    check_n(args.n, allow_large, DESK_SCALE)?;
    if args.n < 2 {
        return Err(usage("the discriminant needs n >= 2"));
    }
    let delta = discriminant(args.n, args.coords.kind())?;
    let saito = if args.saito_check { Some(saito_discriminant(args.n)?) } else { None };
    let text = match format {
        Format::Json => {
            let json = DiscriminantJson {
                delta: delta.to_json(),
                text: delta.to_text(),
                saito: saito.map(|s| SaitoJson { determinant: s.determinant.to_text(), constant: s.constant.to_string() }),
            };
            serde_json::to_string_pretty(&json).map_err(|e| Error::Internal(e.to_string()))? + "\n"
        }
        Format::Latex => {
            let mut out = format!("\\Delta = {}\n", latex_poly(&delta));
            if let Some(s) = saito {
                let _ = writeln!(out, "\\det(JJ^T) = {}", latex_poly(&s.determinant));
            }
            out
        }
        Format::Text => {
            let mut out = format!("{delta}\n");
            if let Some(s) = saito {
                let _ = writeln!(out, "det(J J^T) = {}", s.determinant);
                let _ = writeln!(out, "det(J J^T) / delta = {}", s.constant);
            }
            out
        }
    };
    Ok(Outcome::ok(text))
}

fn build_block(t: &MTableau, sel: &Selection) -> Result<MatrixFactorization> {
    if sel.subgroup.is_some() {
        young_subgroup_mf(&t.type_(), t)
    } else {
        let comp = &t.components()[0];
        mf_for_partition(sel.n, &comp.shape(), comp)
    }
}

fn render_block(mf: &MatrixFactorization, format: Format) -> Result<String> {
    let verified = verify_mf(mf);
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&mf.to_json()).map_err(|e| Error::Internal(e.to_string()))? + "\n",
        Format::Latex => format!("A = {}\n\nB = {}\n", latex_matrix(&mf.a), latex_matrix(&mf.b)),
        Format::Text => {
            let mut out = String::new();
            if let Some(l) = &mf.label {
                let shape: Vec<String> = l.shape.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "lambda {}; T {}; coords {}", shape.join(" x "), l.t, mf.delta.kind().symbol());
            }
            let _ = writeln!(out, "delta = {}", mf.delta);
            let _ = writeln!(out, "rows: {}", mf.a.row_labels.join(", "));
            let _ = writeln!(out, "columns: {}", mf.a.col_labels.join(", "));
            let _ = write!(out, "A:\n{}B:\n{}", mf.a.to_text(), mf.b.to_text());
            let _ = writeln!(out, "verified: {}", verified.passed());
            out
        }
    })
}

fn cmd_mf(args: &MfArgs, format: Format, allow_large: bool) -> Result<Outcome> {
    check_n(args.sel.n, allow_large, DESK_SCALE)?;
    if args.sel.subgroup.is_none() && args.sel.partition.is_none() {
        return Err(usage("mf needs --partition or --subgroup"));
    }
    let mut sel = args.sel.clone();
    if sel.tableau.is_none() {
        sel.tableau = Some("1".into());
    }
    let t = selected_tableaux(&sel)?.remove(0);
    let mf = build_block(&t, &sel)?.to_coords(args.coords.kind())?;
    let report = verify_mf(&mf);
    let mut text = render_block(&mf, format)?;
    let mut ok = report.passed();
    if let Some(path) = &args.compare {
        let raw = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        let theirs = InvariantMatrix::from_text(mf.delta.kind(), mf.delta.n(), &raw)?;
        match reconcile(&mf.a, &theirs) {
            Some(r) => {
                let moved =
                    MatrixFactorization { a: r.apply_a(&mf.a)?, b: r.apply_b(&mf.b)?, delta: mf.delta.clone(), label: None };
                let passed = verify_mf(&moved).passed();
                ok &= passed;
                let q = |v: &[crate::poly::Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
                let _ = writeln!(text, "reconciled: rows [{}] columns [{}]", join(&r.row_perm), join(&r.col_perm));
                let _ = writeln!(text, "row scales: {}", q(&r.row_scale));
                let _ = writeln!(text, "column scales: {}", q(&r.col_scale));
                let _ = writeln!(text, "transformed pair verified: {passed}");
            }
            None => {
                ok = false;
                let _ = writeln!(text, "reconciled: no row/column permutation with diagonal rescaling matches");
            }
        }
    }
    Ok(Outcome { text, ok })
}

#[derive(Serialize)]
struct BlockRangeJson {
    lambda: Partition,
    start: usize,
    end: usize,
}

#[derive(Serialize)]
struct OppositeJson {
    lambda: Partition,
    /// partner block times forward block
    paired_product_is_delta_identity: bool,
    /// forward block times forward block, F read as H
    literal_product_is_delta_identity: bool,
}

#[derive(Serialize)]
struct PushforwardJson {
    n: usize,
    block_index: Vec<BlockRangeJson>,
    matrix: InvariantMatrixJson,
    off_block_entries: Vec<(usize, usize)>,
    opposite_products: Vec<OppositeJson>,
}

fn cmd_pushforward(args: &PushforwardArgs, format: Format, allow_large: bool) -> Result<Outcome> {
    check_n(args.n, allow_large, PUSHFORWARD_SCALE)?;
    let mode = if args.full { PushforwardMode::Full } else { PushforwardMode::Restricted };
    let p = pushforward_matrix(args.n, mode)?;
    let partner = pushforward_partner(args.n, mode)?;
    let kind = args.coords.kind();
    let delta = discriminant(args.n, BasisKind::Elementary)?;
    let mut opposite = Vec::new();
    for (lam, _) in &p.block_index {
        let paired = p.paired_block_product(&partner, lam)?.scalar_defects(&delta).is_empty();
        let literal = p.opposite_block_product(lam)?.scalar_defects(&delta).is_empty();
        opposite.push((lam.clone(), paired, literal));
    }
    let off = p.off_block_entries();
    let full = if kind == BasisKind::SlicedT {
        p.full.convert(kind)?.scale(&crate::poly::Rational::new(1.into(), (1..=args.n).product::<usize>().into()))
    } else {
        p.full.convert(kind)?
    };
    let text = match format {
        Format::Json => {
            let json = PushforwardJson {
                n: args.n,
                block_index: p
                    .block_index
                    .iter()
                    .map(|(l, r)| BlockRangeJson { lambda: l.clone(), start: r.start, end: r.end })
                    .collect(),
                matrix: full.to_json(args.n),
                off_block_entries: off.clone(),
                opposite_products: opposite
                    .iter()
                    .map(|(l, a, b)| OppositeJson {
                        lambda: l.clone(),
                        paired_product_is_delta_identity: *a,
                        literal_product_is_delta_identity: *b,
                    })
                    .collect(),
            };
            serde_json::to_string_pretty(&json).map_err(|e| Error::Internal(e.to_string()))? + "\n"
        }
        Format::Latex => latex_matrix(&full) + "\n",
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "n = {}; size {}; coords {}", args.n, full.rows(), kind.symbol());
            for (lam, r) in &p.block_index {
                let _ = writeln!(out, "block {lam}: rows/columns {}..{}", r.start + 1, r.end);
            }
            let _ = writeln!(out, "entries outside the anti-diagonal blocks: {}", off.len());
            for (lam, paired, literal) in &opposite {
                let c = lam.conjugate();
                let _ = writeln!(out, "block {lam}: z on F then on H gives delta*I: {paired}; M({lam}, {c})*M({c}, {lam}) = delta*I: {literal}");
            }
            for i in 0..full.rows() {
                for j in 0..full.cols() {
                    let e = full.get(i, j);
                    if !e.is_zero() {
                        let _ = writeln!(out, "({},{}) {}", i + 1, j + 1, e);
                    }
                }
            }
            out
        }
    };
    let paired_ok = opposite.iter().all(|(_, a, _)| *a);
    Ok(Outcome { text, ok: off.is_empty() && paired_ok })
}

fn cmd_verify(sel: &Selection, format: Format, allow_large: bool) -> Result<Outcome> {
    check_n(sel.n, allow_large, DESK_SCALE)?;
    let blocks: Vec<MatrixFactorization> = if sel.subgroup.is_none() && sel.partition.is_none() && sel.tableau.is_none() {
        all_blocks(sel.n)?
    } else {
        use rayon::prelude::*;
        selected_tableaux(sel)?.par_iter().map(|t| build_block(t, sel)).collect::<Result<_>>()?
    };
    let mut ok = true;
    let mut lines = Vec::new();
    for b in &blocks {
        let report = verify_mf(b);
        let graded = b.graded_defects().is_empty();
        ok &= report.passed() && graded;
        let label = b.label.as_ref().map(|l| {
            let shape: Vec<String> = l.shape.iter().map(ToString::to_string).collect();
            format!("{} T={}", shape.join(" x "), l.t)
        });
        lines.push((label.unwrap_or_default(), report, graded));
    }
    let text = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Line<'a> {
                block: &'a str,
                report: &'a crate::mf::VerifyReport,
                graded: bool,
            }
            let json: Vec<Line> = lines.iter().map(|(l, r, g)| Line { block: l, report: r, graded: *g }).collect();
            serde_json::to_string_pretty(&json).map_err(|e| Error::Internal(e.to_string()))? + "\n"
        }
        _ => {
            let mut out = String::new();
            for (l, r, g) in &lines {
                let status = if r.passed() && *g { "ok" } else { "FAILED" };
                let _ = writeln!(out, "{status}  {l}  {r}{}", if *g { "" } else { "; degree mismatch" });
            }
            let _ = writeln!(out, "{} blocks, {}", lines.len(), if ok { "all verified" } else { "failures present" });
            out
        }
    };
    Ok(Outcome { text, ok })
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Tableaux(sel) => cmd_tableaux(sel, cli.format),
        Command::Specht(a) => {
            check_n(a.sel.n, cli.allow_large, DESK_SCALE)?;
            cmd_specht(a, cli.format)
        }
        Command::Discriminant(a) => cmd_discriminant(a, cli.format, cli.allow_large),
        Command::Mf(a) => cmd_mf(a, cli.format, cli.allow_large),
        Command::Pushforward(a) => cmd_pushforward(a, cli.format, cli.allow_large),
        Command::Verify(sel) => cmd_verify(sel, cli.format, cli.allow_large),
    }
}

/// Parse arguments, run, write output; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(w) = cli.workers {
        // a second initialisation (e.g. in tests) keeps the existing pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build_global();
    }
    match execute(&cli) {
        Ok(outcome) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &outcome.text).map_err(|e| e.to_string()),
                None => {
                    print!("{}", outcome.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return 2;
            }
            if outcome.ok {
                0
            } else {
                eprintln!("verification failed");
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
