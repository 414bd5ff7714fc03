//! The `abelian-lcd` command line.
//!
//! Every command produces a [`Report`]: scalar fields plus lists of records.
//! Text output prints list records as `tag<TAB>key=value...` lines and
//! scalars as `key=value` lines (or one `summary<TAB>...` line); `--json`
//! prints the same fields as one object with every value a string.
//! `table` text output is the raw tab-separated table instead.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{Map, Value};

use crate::algebra::{ideal_entries, oracle_algebra, verify_counts, Capacity, VerificationReport};
use crate::counting::{
    count_lcd, diff_tables, generate_table, golden_table, render_table, OrderFilter,
};
use crate::cyclotomic::{classify, DualityContext, Variant};
use crate::error::Error;
use crate::group::{parse_group_spec, AbelianGroup};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_DISAGREEMENT: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "abelian-lcd",
    version,
    about = "Complementary dual abelian codes: classify, count, tabulate, verify"
)]
struct Cli {
    /// Print one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cyclotomic classes of a group with their types.
    Classify {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Number of complementary dual codes in F[G].
    Count {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// r_one + r_two for every abelian group up to an order.
    Table {
        #[command(flatten)]
        ctx: ContextArgs,
        /// Largest group order listed.
        #[arg(long, value_name = "N")]
        max_order: u64,
        /// Odd orders only.
        #[arg(long, conflicts_with = "coprime_only")]
        odd_only: bool,
        /// Orders not divisible by p only.
        #[arg(long)]
        coprime_only: bool,
        /// Append the code count 2^r as a fourth column.
        #[arg(long)]
        with_count: bool,
        /// Compare against the stored table; exit 2 on any difference.
        #[arg(long = "paper-check", conflicts_with = "with_count")]
        check_stored: bool,
    },
    /// Every ideal of the group algebra with LCD and direct-summand flags.
    Ideals {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        ctx: ContextArgs,
        #[command(flatten)]
        capacity: CapacityArg,
    },
    /// Exhaustive LCD count against the closed form; exit 2 on disagreement.
    Verify {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        ctx: ContextArgs,
        #[command(flatten)]
        capacity: CapacityArg,
    },
}

#[derive(Debug, Args)]
struct GroupArg {
    /// Cyclic factors, e.g. `3,3` for Z_3 x Z_3, or `1` for the trivial group.
    #[arg(long = "group", value_name = "SPEC")]
    spec: String,
}

#[derive(Debug, Args)]
#[group(id = "variant", required = true, multiple = false)]
struct VariantFlags {
    /// Euclidean duality over GF(p^nu).
    #[arg(long)]
    euclidean: bool,
    /// Hermitian duality over GF(p^(2 nu)).
    #[arg(long)]
    hermitian: bool,
}

#[derive(Debug, Args)]
struct ContextArgs {
    /// Characteristic of the field.
    #[arg(long)]
    p: u64,
    /// The field is GF(p^nu), or GF(p^(2 nu)) for Hermitian duality.
    #[arg(long, default_value_t = 1)]
    nu: u32,
    #[command(flatten)]
    variant: VariantFlags,
}

impl ContextArgs {
    fn context(&self) -> Result<DualityContext, Error> {
        let variant = if self.variant.hermitian {
            Variant::Hermitian
        } else {
            Variant::Euclidean
        };
        DualityContext::new(self.p, self.nu, variant)
    }
}

#[derive(Debug, Args)]
struct CapacityArg {
    /// Enumerate only when |F|^|G| <= 2^BITS.
    #[arg(long = "capacity", value_name = "BITS", default_value_t = Capacity::ENUMERATION.log2())]
    log2: u32,
}

type Record = Vec<(&'static str, String)>;

/// Output of one command.
#[derive(Debug, Default)]
pub struct Report {
    command: &'static str,
    lists: Vec<(&'static str, &'static str, Vec<Record>)>,
    scalars: Record,
    summary_line: bool,
    exit: i32,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Report {
            command,
            ..Default::default()
        }
    }

    fn scalar(&mut self, key: &'static str, value: impl ToString) {
        self.scalars.push((key, value.to_string()));
    }

    fn list(&mut self, plural: &'static str, tag: &'static str, records: Vec<Record>) {
        self.lists.push((plural, tag, records));
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (_, tag, records) in &self.lists {
            for r in records {
                out.push_str(tag);
                for (k, v) in r {
                    out.push_str(&format!("\t{k}={v}"));
                }
                out.push('\n');
            }
        }
        if self.summary_line {
            out.push_str("summary");
            for (k, v) in &self.scalars {
                out.push_str(&format!("\t{k}={v}"));
            }
            out.push('\n');
        } else {
            for (k, v) in &self.scalars {
                out.push_str(&format!("{k}={v}\n"));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let object = |r: &Record| -> Map<String, Value> {
            r.iter()
                .map(|(k, v)| (k.to_string(), Value::String(v.clone())))
                .collect()
        };
        let mut top = Map::new();
        top.insert("command".into(), Value::String(self.command.into()));
        top.extend(object(&self.scalars));
        for (plural, _, records) in &self.lists {
            debug_assert!(
                !top.contains_key(*plural),
                "`{plural}` is both a scalar and a list"
            );
            top.insert(
                plural.to_string(),
                Value::Array(records.iter().map(|r| Value::Object(object(r))).collect()),
            );
        }
        Value::Object(top)
    }
}

fn push_context(report: &mut Report, ctx: DualityContext) {
    report.scalar("p", ctx.p());
    report.scalar("nu", ctx.nu());
    report.scalar("variant", ctx.variant());
}

fn parse_group(arg: &GroupArg) -> Result<AbelianGroup, Error> {
    parse_group_spec(&arg.spec)
}

fn run_classify(group: &AbelianGroup, ctx: DualityContext) -> Result<Report, Error> {
    if group.order().is_multiple_of(ctx.p()) {
        return Err(Error::Domain(format!(
            "p = {} divides |G| = {}; classify the p'-part, or use `count`, which splits it off",
            ctx.p(),
            group.order()
        )));
    }
    let partition = classify(group, ctx)?;
    let mut report = Report::new("classify");
    let records = partition
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let members: Vec<String> = c.members.iter().map(ToString::to_string).collect();
            let partner = partition.pairing.get(&i).map_or_else(
                || c.representative.to_string(),
                |&j| partition.classes[j].representative.to_string(),
            );
            vec![
                ("representative", c.representative.to_string()),
                ("size", c.size().to_string()),
                ("type", c.type_tag.label().to_string()),
                ("partner", partner),
                ("members", members.join(" ")),
            ]
        })
        .collect();
    report.list("classes", "class", records);
    report.scalar("group", group);
    push_context(&mut report, ctx);
    report.scalar("class_count", partition.classes.len());
    report.scalar("r_one", partition.r_one());
    report.scalar("r_two", partition.r_two());
    report.scalar("r", partition.counts.total());
    report.scalar(
        "count",
        crate::counting::power_of_two(partition.counts.total()),
    );
    Ok(report)
}

fn run_count(group: &AbelianGroup, ctx: DualityContext) -> Result<Report, Error> {
    let r = count_lcd(group, ctx)?;
    let mut report = Report::new("count");
    report.scalar("group", group);
    push_context(&mut report, ctx);
    report.scalar("p_prime_part", &r.p_prime_part);
    report.scalar("sylow_part", &r.sylow_part);
    report.scalar("r_one", r.r_one());
    report.scalar("r_two", r.r_two());
    report.scalar("r", r.r_total());
    report.scalar("count", &r.lcd_count);
    Ok(report)
}

struct TableOutcome {
    text: String,
    report: Report,
    diagnostics: Vec<String>,
}

fn run_table(
    ctx: DualityContext,
    max_order: u64,
    filter: OrderFilter,
    with_count: bool,
    check_stored: bool,
) -> Result<TableOutcome, Error> {
    let rows = generate_table(ctx, max_order, filter)?;
    let text = render_table(&rows, with_count);
    let mut report = Report::new("table");
    let records = rows
        .iter()
        .map(|row| {
            let mut r = vec![
                ("order", row.order.to_string()),
                ("group", row.group.to_string()),
                ("r", row.r_total.to_string()),
            ];
            if with_count {
                r.push(("count", row.lcd_count.to_string()));
            }
            r
        })
        .collect();
    report.list("rows", "row", records);
    push_context(&mut report, ctx);
    report.scalar("max_order", max_order);
    report.scalar("row_count", rows.len());

    let mut diagnostics = Vec::new();
    if check_stored {
        let golden = golden_table(ctx).ok_or_else(|| {
            Error::Domain(format!(
                "no stored table for p = {}, nu = {}, {}",
                ctx.p(),
                ctx.nu(),
                ctx.variant()
            ))
        })?;
        let mismatches = diff_tables(golden, &text);
        let records = mismatches
            .iter()
            .map(|m| {
                vec![
                    ("line", m.line.to_string()),
                    ("expected", m.expected.clone().unwrap_or_default()),
                    ("actual", m.actual.clone().unwrap_or_default()),
                ]
            })
            .collect();
        for m in &mismatches {
            diagnostics.push(format!(
                "line {}: stored `{}`, computed `{}`",
                m.line,
                m.expected.as_deref().unwrap_or("<none>"),
                m.actual.as_deref().unwrap_or("<none>")
            ));
        }
        diagnostics.push(format!(
            "stored table check: {} mismatched line(s)",
            mismatches.len()
        ));
        report.list("mismatches", "mismatch", records);
        report.scalar(
            "stored_table",
            if mismatches.is_empty() {
                "match"
            } else {
                "mismatch"
            },
        );
        if !mismatches.is_empty() {
            report.exit = EXIT_DISAGREEMENT;
        }
    }
    Ok(TableOutcome {
        text,
        report,
        diagnostics,
    })
}

fn run_ideals(
    group: &AbelianGroup,
    ctx: DualityContext,
    capacity: Capacity,
) -> Result<Report, Error> {
    let alg = oracle_algebra(group, ctx, capacity)?;
    let ideals = alg.enumerate_ideals()?;
    let entries = ideal_entries(&alg, &ideals, ctx)?;
    let mut report = Report::new("ideals");
    let records = ideals
        .iter()
        .zip(&entries)
        .enumerate()
        .map(|(i, (ideal, e))| {
            let rows: Vec<String> = ideal
                .basis()
                .row_iter()
                .map(|r| {
                    r.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            vec![
                ("index", i.to_string()),
                ("dim", e.dimension.to_string()),
                ("lcd", e.lcd.to_string()),
                ("summand", e.summand.to_string()),
                ("basis", format!("[{}]", rows.join("; "))),
            ]
        })
        .collect();
    report.list("ideals", "ideal", records);
    report.summary_line = true;
    report.scalar("group", group);
    push_context(&mut report, ctx);
    report.scalar("field", alg.field().size());
    report.scalar("ideal_total", ideals.len());
    report.scalar("lcd_total", entries.iter().filter(|e| e.lcd).count());
    report.scalar(
        "summand_total",
        entries.iter().filter(|e| e.summand).count(),
    );
    Ok(report)
}

/// The CLI form of a verification report; its text rendering equals
/// [`VerificationReport::render_text`].
pub fn verification_report(v: &VerificationReport) -> Report {
    let mut report = Report::new("verify");
    let records = v
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            vec![
                ("index", i.to_string()),
                ("dim", e.dimension.to_string()),
                ("lcd", e.lcd.to_string()),
                ("summand", e.summand.to_string()),
            ]
        })
        .collect();
    report.list("ideals", "ideal", records);
    let witnesses = v
        .witnesses
        .iter()
        .map(|w| {
            vec![
                ("dim", w.dimension().to_string()),
                ("basis", format!("{:?}", w.basis())),
            ]
        })
        .collect();
    report.list("witnesses", "witness", witnesses);
    report.summary_line = true;
    report.scalar("group", &v.group);
    push_context(&mut report, v.context);
    report.scalar("field", v.field_size);
    report.scalar("ideal_total", v.ideal_total);
    report.scalar("lcd_total", v.lcd_total);
    report.scalar("summand_total", v.summand_total);
    report.scalar("formula_lcd", &v.formula_lcd);
    report.scalar("agreement", v.agreement);
    if !v.agreement {
        report.exit = EXIT_DISAGREEMENT;
    }
    report
}

pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Parse { .. } | Error::Domain(_) => EXIT_ERROR,
        Error::Capacity(_) => EXIT_CAPACITY,
        Error::Consistency(_) => EXIT_DISAGREEMENT,
    }
}

fn emit(out: &mut dyn Write, json: bool, report: &Report) -> std::io::Result<()> {
    if json {
        writeln!(out, "{}", report.to_json())
    } else {
        write!(out, "{}", report.render_text())
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    let report = match &cli.command {
        Command::Classify { group, ctx } => run_classify(&parse_group(group)?, ctx.context()?)?,
        Command::Count { group, ctx } => run_count(&parse_group(group)?, ctx.context()?)?,
        Command::Table {
            ctx,
            max_order,
            odd_only,
            coprime_only,
            with_count,
            check_stored,
        } => {
            let filter = match (odd_only, coprime_only) {
                (true, _) => OrderFilter::OddOnly,
                (_, true) => OrderFilter::CoprimeToP,
                _ => OrderFilter::All,
            };
            let outcome = run_table(
                ctx.context()?,
                *max_order,
                filter,
                *with_count,
                *check_stored,
            )?;
            for d in &outcome.diagnostics {
                let _ = writeln!(err, "{d}");
            }
            if cli.json {
                let _ = emit(out, true, &outcome.report);
            } else {
                let _ = write!(out, "{}", outcome.text);
            }
            return Ok(outcome.report.exit);
        }
        Command::Ideals {
            group,
            ctx,
            capacity,
        } => run_ideals(
            &parse_group(group)?,
            ctx.context()?,
            Capacity::from_log2(capacity.log2),
        )?,
        Command::Verify {
            group,
            ctx,
            capacity,
        } => {
            let v = verify_counts(
                &parse_group(group)?,
                ctx.context()?,
                Capacity::from_log2(capacity.log2),
            )?;
            if !v.agreement {
                let _ = writeln!(
                    err,
                    "disagreement: oracle {} vs formula {}",
                    v.lcd_total, v.formula_lcd
                );
            }
            verification_report(&v)
        }
    };
    let _ = emit(out, cli.json, &report);
    Ok(report.exit)
}

/// Runs the CLI on `args` (program name first) and returns the exit status.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_ERROR
                }
            };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
