use std::fmt::Write as _;
use std::path::Path;

use bondle_core::algebra::affine::search_m_values;
use bondle_core::algebra::axioms::{
    check_involutory_bondle, check_kei, check_oriented_bondle, check_oriented_singquandle, check_quandle,
    check_singquandle,
};
use bondle_core::algebra::{search_affine_bondles, AxiomReport, Bondle, BondleTable};
use bondle_core::coloring::{count_best, distinguish, search_distinguisher, AffineSearchSpace, ColoringError, Verdict};
use bondle_core::diagram::{build_diagram, Diagram};
use bondle_core::gausscode::{parse, GaussCode};
use bondle_core::rewrite::{
    normalize, normalize_helices, reduce_ends, segment_sheets, HelixMode, MoveSpec, RewriteError, RewriteTrace,
};
use serde::Deserialize;
use serde_json::json;

use super::config::load_bondle;
use super::{
    read_input, read_path, write_path, AlgebraCommand, CliError, Command, Config, Format, Input, Kind, MakeCommand,
    Outcome, EXIT_INCONCLUSIVE, EXIT_INVALID,
};

pub struct Ctx {
    pub format: Format,
    pub config: Config,
}

impl Ctx {
    /// Picks the rendering for the configured format.
    fn emit(&self, json: impl FnOnce() -> String, text: impl FnOnce() -> String) -> String {
        let mut s = match self.format {
            Format::Json => json(),
            Format::Text => text(),
        };
        if !s.ends_with('\n') {
            s.push('\n');
        }
        s
    }
}

pub fn dispatch(ctx: &Ctx, command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Parse { input, dump_diagram } => cmd_parse(ctx, &input, dump_diagram.as_deref()),
        Command::Validate { input } => cmd_validate(ctx, &input),
        Command::Normalize { input, keep_helices, kinks, no_end_reduce } => {
            let mode = if keep_helices { HelixMode::Kinks(kinks) } else { HelixMode::Drop };
            cmd_normalize(ctx, &input, mode, !no_end_reduce)
        }
        Command::Move { input, script, trace } => cmd_move(ctx, &input, &script, trace.as_deref()),
        Command::Algebra { action } => match action {
            AlgebraCommand::Check { file, kind } => cmd_algebra_check(ctx, &file, kind),
            AlgebraCommand::Make { what, out } => cmd_algebra_make(ctx, what, out.as_deref()),
            AlgebraCommand::Search { n } => cmd_algebra_search(ctx, n),
        },
        Command::Color { input, bondle, normalize, dump_diagram } => {
            cmd_color(ctx, &input, &bondle, normalize, dump_diagram.as_deref())
        }
        Command::Distinguish { first, second, bondles, normalize } => {
            cmd_distinguish(ctx, &first, &second, &bondles, normalize)
        }
        Command::Search { first, second, min_n, max_n, normalize } => {
            let space = AffineSearchSpace { min_n, max_n: max_n.unwrap_or(ctx.config.max_n) };
            cmd_search(ctx, &first, &second, space, normalize)
        }
    }
}

fn parse_code(text: &str) -> Result<GaussCode, CliError> {
    parse(text).map_err(|e| CliError::validation(e.to_string()))
}

fn rewrite_error(e: RewriteError) -> CliError {
    match e {
        RewriteError::NotApplicable(_) => CliError::not_applicable(e.to_string()),
        _ => CliError::validation(e.to_string()),
    }
}

fn coloring_error(e: ColoringError) -> CliError {
    CliError::validation(e.to_string())
}

fn diagram_of(code: &GaussCode, max_arcs: Option<usize>) -> Result<Diagram, CliError> {
    let d = build_diagram(code).map_err(|e| CliError::validation(e.to_string()))?;
    if let Some(max) = max_arcs {
        if d.arc_count() > max {
            return Err(CliError::validation(format!("{} arcs exceeds the limit of {max}", d.arc_count())));
        }
    }
    Ok(d)
}

fn load_diagram(ctx: &Ctx, path: &Path, normalized: bool) -> Result<Diagram, CliError> {
    let mut code = parse_code(&read_path(path)?)?;
    if normalized {
        code = normalize(&code).map_err(rewrite_error)?;
    }
    diagram_of(&code, Some(ctx.config.max_arcs))
}

fn cmd_parse(ctx: &Ctx, input: &Input, dump: Option<&Path>) -> Result<Outcome, CliError> {
    let code = parse_code(&read_input(input)?)?;
    let report = code.validate();
    if let (Some(path), true) = (dump, report.is_well_formed()) {
        write_path(path, &diagram_of(&code, None)?.to_json())?;
    }
    let stdout = ctx.emit(
        || json!({"schema": 1, "code": code.to_string(), "well_formed": report.is_well_formed()}).to_string(),
        || code.to_string(),
    );
    let code = if report.is_well_formed() { 0 } else { EXIT_INVALID };
    Ok(Outcome { stdout, code })
}

fn cmd_validate(ctx: &Ctx, input: &Input) -> Result<Outcome, CliError> {
    let code = parse_code(&read_input(input)?)?;
    let report = code.validate();
    let stdout = ctx.emit(
        || report.to_json(),
        || {
            let mut s = String::from(if report.is_well_formed() { "well-formed\n" } else { "malformed\n" });
            for f in &report.errors {
                let _ = writeln!(s, "error {}: {}", f.code, f.message);
            }
            for f in &report.warnings {
                let _ = writeln!(s, "warning {}: {}", f.code, f.message);
            }
            s
        },
    );
    let code = if report.is_well_formed() { 0 } else { EXIT_INVALID };
    Ok(Outcome { stdout, code })
}

fn cmd_normalize(ctx: &Ctx, input: &Input, mode: HelixMode, end_reduce: bool) -> Result<Outcome, CliError> {
    let code = parse_code(&read_input(input)?)?;
    let mut out = normalize_helices(&segment_sheets(&code).map_err(rewrite_error)?, mode).map_err(rewrite_error)?;
    if end_reduce {
        out = reduce_ends(&out).map_err(rewrite_error)?;
    }
    Ok(Outcome::ok(ctx.emit(|| json!({"schema": 1, "code": out.to_string()}).to_string(), || out.to_string())))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Script {
    List(Vec<MoveSpec>),
    Object { moves: Vec<MoveSpec> },
}

fn cmd_move(ctx: &Ctx, input: &Input, script: &Path, trace_out: Option<&Path>) -> Result<Outcome, CliError> {
    let code = parse_code(&read_input(input)?)?;
    let text = read_path(script)?;
    let specs = match serde_json::from_str::<Script>(&text) {
        Ok(Script::List(v)) | Ok(Script::Object { moves: v }) => v,
        Err(e) => return Err(CliError::validation(format!("{}: {e}", script.display()))),
    };
    let (trace, out) = RewriteTrace::record(&code, &specs).map_err(rewrite_error)?;
    if let Some(path) = trace_out {
        write_path(path, &trace.to_json())?;
    }
    let stdout = ctx.emit(
        || json!({"schema": 1, "code": out.to_string(), "moves": specs.len()}).to_string(),
        || out.to_string(),
    );
    Ok(Outcome::ok(stdout))
}

fn report_text(report: &AxiomReport) -> String {
    let mut s = format!(
        "{} of order {}: {}\n",
        report.structure,
        report.order,
        if report.passed { "pass" } else { "FAIL" }
    );
    for r in &report.relations {
        let _ = write!(s, "  {:<6} {}", r.relation, if r.holds { "ok" } else { "fails" });
        if !r.holds {
            let _ = write!(s, " ({} assignments)", r.failures);
        }
        if let Some(note) = &r.note {
            let _ = write!(s, " [{note}]");
        }
        s.push('\n');
    }
    s
}

fn cmd_algebra_check(ctx: &Ctx, file: &Path, kind: Kind) -> Result<Outcome, CliError> {
    let text = read_path(file)?;
    let bad = |e: bondle_core::algebra::AlgebraError| CliError::validation(format!("{}: {e}", file.display()));
    let table = BondleTable::from_json(&text).map_err(bad)?;
    let q = table.quandle().map_err(bad)?;
    let maps = || {
        table.bond_maps().map_err(bad)?.ok_or_else(|| CliError::validation("R1 and R2 tables are required"))
    };
    let report = match kind {
        Kind::Quandle => check_quandle(&q),
        Kind::Kei => check_kei(&q),
        Kind::Singquandle => check_singquandle(&q, &maps()?),
        Kind::InvolutoryBondle => check_involutory_bondle(&q, &maps()?),
        Kind::OrientedSingquandle => check_oriented_singquandle(&q, &maps()?),
        Kind::OrientedBondle => check_oriented_bondle(&q, &maps()?),
    };
    let stdout = ctx.emit(|| report.to_json(), || report_text(&report));
    Ok(Outcome { stdout, code: if report.passed { 0 } else { EXIT_INVALID } })
}

fn cmd_algebra_make(ctx: &Ctx, what: MakeCommand, out: Option<&Path>) -> Result<Outcome, CliError> {
    let spec = match what {
        MakeCommand::Affine { n, a, b, m } => format!("affine:{n},{a},{b},{m}"),
        MakeCommand::Group { group, family, n, r3 } => format!("group:{group},{family},{n},{r3}"),
    };
    let bondle: Bondle = load_bondle(&spec)?;
    let table = bondle.to_table().to_json();
    match out {
        Some(path) => {
            write_path(path, &table)?;
            let stdout = ctx.emit(
                || json!({"schema": 1, "bondle": bondle.name, "order": bondle.order(), "written": path}).to_string(),
                || format!("wrote {} ({}) to {}", bondle.name, bondle.order(), path.display()),
            );
            Ok(Outcome::ok(stdout))
        }
        None => Ok(Outcome::ok(format!("{table}\n"))),
    }
}

fn cmd_algebra_search(ctx: &Ctx, n: u64) -> Result<Outcome, CliError> {
    if n < 2 {
        return Err(CliError::validation("modulus must be at least 2"));
    }
    let found = search_affine_bondles(n);
    let ms = search_m_values(n);
    let stdout = ctx.emit(
        || json!({"schema": 1, "n": n, "m_values": ms, "bondles": found}).to_string(),
        || {
            let list: Vec<String> = ms.iter().map(u64::to_string).collect();
            format!("n = {n}: m in {{{}}}, {} bondles", list.join(", "), found.len())
        },
    );
    Ok(Outcome::ok(stdout))
}

fn cmd_color(
    ctx: &Ctx,
    input: &Input,
    spec: &str,
    normalized: bool,
    dump: Option<&Path>,
) -> Result<Outcome, CliError> {
    let mut code = parse_code(&read_input(input)?)?;
    if normalized {
        code = normalize(&code).map_err(rewrite_error)?;
    }
    let d = diagram_of(&code, Some(ctx.config.max_arcs))?;
    if let Some(path) = dump {
        write_path(path, &d.to_json())?;
    }
    let bondle = load_bondle(spec)?;
    let count = count_best(&d, &bondle).map_err(coloring_error)?.with_diagram(code.to_string());
    let stdout = ctx.emit(
        || count.to_json(),
        || format!("{} colorings ({} trivial) by {}", count.total, count.trivial, count.bondle),
    );
    Ok(Outcome::ok(stdout))
}

fn verdict_outcome(ctx: &Ctx, verdict: &Verdict) -> Outcome {
    let stdout = ctx.emit(
        || verdict.to_json(),
        || match verdict {
            Verdict::Distinct { witness } => {
                format!("distinct: {} gives {} and {}", witness.bondle, witness.first, witness.second)
            }
            Verdict::Inconclusive { counts } => {
                let mut s = String::from("inconclusive\n");
                for c in counts {
                    let _ = writeln!(s, "  {}: {} / {}", c.bondle, c.first, c.second);
                }
                s
            }
        },
    );
    Outcome { stdout, code: if verdict.is_distinct() { 0 } else { EXIT_INCONCLUSIVE } }
}

fn cmd_distinguish(
    ctx: &Ctx,
    first: &Path,
    second: &Path,
    specs: &[String],
    normalized: bool,
) -> Result<Outcome, CliError> {
    let d1 = load_diagram(ctx, first, normalized)?;
    let d2 = load_diagram(ctx, second, normalized)?;
    let battery = if specs.is_empty() {
        ctx.config.battery()?
    } else {
        specs.iter().map(|s| load_bondle(s)).collect::<Result<Vec<_>, _>>()?
    };
    let verdict = distinguish(&d1, &d2, &battery).map_err(coloring_error)?;
    Ok(verdict_outcome(ctx, &verdict))
}

fn cmd_search(ctx: &Ctx, first: &Path, second: &Path, space: AffineSearchSpace, normalized: bool) -> Result<Outcome, CliError> {
    let d1 = load_diagram(ctx, first, normalized)?;
    let d2 = load_diagram(ctx, second, normalized)?;
    let verdict = search_distinguisher(&d1, &d2, space).map_err(coloring_error)?;
    Ok(verdict_outcome(ctx, &verdict))
}
