use std::collections::BTreeSet;
use std::fmt;

use clap::ValueEnum;
use dyck_frames::counting::{
    catalan, count_colored_dyck, count_colored_motzkin, count_k_motzkin, count_motzkin,
    frame_cardinality, up_steps_per_level,
};
use dyck_frames::paths::{enumerate_dyck, enumerate_motzkin};
use dyck_frames::verify::{self, VerifyOptions};
use dyck_frames::{ColorSpec, Enumeration, Error, FootTable, Frame, Limits, RawSequence};
use serde_json::{json, Map, Value};

use crate::render::{count_json, csv_list, json_document, OutputFormat, Table};
use crate::{CountArgs, CountKind, EnumerateArgs, PathKind};

pub struct Output {
    pub text: String,
    pub status: u8,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, status: 0 }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Library(Error),
}

impl CliError {
    /// 2 for usage and parse errors, 3 for resource limits.
    pub fn exit_status(&self) -> u8 {
        match self {
            CliError::Library(Error::ResourceLimit { .. }) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(message) => f.write_str(message),
            CliError::Library(err) => err.fmt(f),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> CliError {
        CliError::Library(err)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

fn emit(table: &Table, json: Value, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => table.to_text(),
        OutputFormat::Csv => table.to_csv(),
        OutputFormat::Json => json_document(&json),
    }
}

/// Foot counts at level 0 start at one foot; higher levels at zero.
pub fn feet_table(
    max_half_length: usize,
    level: usize,
    limits: &Limits,
    format: OutputFormat,
) -> Result<Output> {
    limits.check(Enumeration::DyckHalfLength, max_half_length)?;
    let table = FootTable::new(level, max_half_length);
    let feet: Vec<usize> = if level == 0 {
        (1..=max_half_length + 1).collect()
    } else {
        (0..=max_half_length).collect()
    };

    let mut rendered = Table::new(
        std::iter::once("steps".to_string()).chain(feet.iter().map(|j| format!("{j}-ped"))),
    );
    let mut rows = Vec::new();
    for n in 0..=max_half_length {
        let counts: Vec<_> = feet
            .iter()
            .map(|&j| table.get(n, level, j).into_owned())
            .collect();
        rendered.push(
            std::iter::once((2 * n).to_string()).chain(counts.iter().map(ToString::to_string)),
        );
        rows.push(json!({
            "steps": 2 * n,
            "counts": counts.iter().map(count_json).collect::<Vec<_>>(),
        }));
    }
    let json = json!({
        "level": level,
        "max_half_length": max_half_length,
        "feet": feet,
        "rows": rows,
    });
    Ok(Output::ok(emit(&rendered, json, format)))
}

pub fn frame_info(text: &str, format: OutputFormat) -> Result<Output> {
    let raw: RawSequence = text.parse()?;
    let mut fields: Vec<(&str, String, Value)> = vec![(
        "frame",
        raw.to_string().replace(',', ";"),
        json!(raw.to_string()),
    )];
    match Frame::try_from(raw) {
        Ok(frame) => {
            let cardinality = frame_cardinality(&frame);
            let canonical = frame.canonical_representative().to_string();
            let up_steps = up_steps_per_level(&frame);
            fields.extend([
                ("admissible", "true".into(), json!(true)),
                ("length", frame.length().to_string(), json!(frame.length())),
                ("degree", frame.degree().to_string(), json!(frame.degree())),
                (
                    "cardinality",
                    cardinality.to_string(),
                    count_json(&cardinality),
                ),
                ("canonical", canonical.clone(), json!(canonical)),
                ("up_steps", csv_list(&up_steps), json!(up_steps)),
            ]);
        }
        Err(Error::NotAdmissible(_)) => fields.push(("admissible", "false".into(), json!(false))),
        Err(err) => return Err(err.into()),
    }

    let mut table = Table::new(["field", "value"]);
    let mut json = Map::new();
    for (name, cell, value) in fields {
        table.push([name.to_string(), cell]);
        json.insert(name.to_string(), value);
    }
    Ok(Output::ok(emit(&table, Value::Object(json), format)))
}

fn require_colors<'a>(name: &str, colors: &'a Option<Vec<u64>>) -> Result<&'a [u64]> {
    colors
        .as_deref()
        .ok_or_else(|| usage(format!("--{name} is required when coloring steps")))
}

pub fn count(args: &CountArgs, limits: &Limits, format: OutputFormat) -> Result<Output> {
    let colored = args.colors_h.is_some() || args.colors_u.is_some() || args.colors_d.is_some();
    let mut json = Map::new();
    json.insert(
        "kind".into(),
        json!(args
            .kind
            .to_possible_value()
            .map(|v| v.get_name().to_string())),
    );
    json.insert("n".into(), json!(args.n));

    let value = match args.kind {
        CountKind::Dyck | CountKind::Motzkin if args.k.is_some() => {
            return Err(usage("--k only applies to k-motzkin"));
        }
        CountKind::Dyck if args.colors_h.is_some() => {
            return Err(usage("--colors-h does not apply to Dyck paths"));
        }
        CountKind::Dyck if colored => {
            let colors = ColorSpec {
                horizontal: Vec::new(),
                up: require_colors("colors-u", &args.colors_u)?.to_vec(),
                down: require_colors("colors-d", &args.colors_d)?.to_vec(),
            };
            json.insert("colors_u".into(), json!(colors.up));
            json.insert("colors_d".into(), json!(colors.down));
            count_colored_dyck(args.n, &colors, limits)?
        }
        CountKind::Dyck => catalan(args.n),
        CountKind::Motzkin if colored => {
            let colors = ColorSpec {
                horizontal: require_colors("colors-h", &args.colors_h)?.to_vec(),
                up: require_colors("colors-u", &args.colors_u)?.to_vec(),
                down: require_colors("colors-d", &args.colors_d)?.to_vec(),
            };
            json.insert("colors_h".into(), json!(colors.horizontal));
            json.insert("colors_u".into(), json!(colors.up));
            json.insert("colors_d".into(), json!(colors.down));
            count_colored_motzkin(args.n, &colors, limits)?
        }
        CountKind::Motzkin => count_motzkin(args.n, limits)?,
        CountKind::KMotzkin => {
            let k = args.k.ok_or_else(|| usage("k-motzkin requires --k"))?;
            if args.colors_u.is_some() || args.colors_d.is_some() {
                return Err(usage("k-motzkin only takes --colors-h"));
            }
            let r = match args.colors_h.as_deref() {
                None => 1,
                Some([r]) if *r >= 1 => *r,
                Some(_) => return Err(usage("k-motzkin takes a single --colors-h value r >= 1")),
            };
            json.insert("k".into(), json!(k));
            json.insert("r".into(), json!(r));
            count_k_motzkin(args.n, k, r)
        }
    };
    json.insert("count".into(), count_json(&value));

    let mut table = Table::new(["count"]);
    table.push([value.to_string()]);
    Ok(Output::ok(emit(&table, Value::Object(json), format)))
}

pub fn enumerate(args: &EnumerateArgs, limits: &Limits, format: OutputFormat) -> Result<Output> {
    let filter = match &args.frame {
        Some(_) if args.kind == PathKind::Motzkin => {
            return Err(usage("--frame only applies to Dyck paths"));
        }
        Some(text) => Some(text.parse::<RawSequence>()?),
        None => None,
    };
    if args.show_frame && args.kind == PathKind::Motzkin {
        return Err(usage("--show-frame only applies to Dyck paths"));
    }
    let paths: Vec<_> = match args.kind {
        PathKind::Dyck => {
            if args.levels.is_some() {
                return Err(usage("--levels only applies to Motzkin paths"));
            }
            enumerate_dyck(args.n, limits)?
                .filter(|p| {
                    filter
                        .as_ref()
                        .is_none_or(|f| p.frame().is_ok_and(|pf| pf.as_raw() == f))
                })
                .collect()
        }
        PathKind::Motzkin => {
            let levels: Option<BTreeSet<usize>> =
                args.levels.as_ref().map(|l| l.iter().copied().collect());
            enumerate_motzkin(args.n, levels.as_ref(), limits)?.collect()
        }
    };

    let mut table = Table::new(if args.show_frame {
        vec!["path", "frame"]
    } else {
        vec!["path"]
    });
    let mut listed = Vec::with_capacity(paths.len());
    for path in &paths {
        let text = path.to_string();
        if args.show_frame {
            let frame = path.frame()?;
            table.push([text.clone(), csv_list(frame.counts())]);
            listed.push(json!({ "path": text, "frame": frame.to_string() }));
        } else {
            table.push([text.clone()]);
            listed.push(json!(text));
        }
    }
    let json = json!({
        "kind": match args.kind { PathKind::Dyck => "dyck", PathKind::Motzkin => "motzkin" },
        "n": args.n,
        "frame": filter.map(|f| f.to_string()),
        "count": paths.len(),
        "paths": listed,
    });
    Ok(Output::ok(emit(&table, json, format)))
}

pub fn verify(
    max_n: usize,
    inject_fault: bool,
    limits: Limits,
    format: OutputFormat,
) -> Result<Output> {
    let report = verify::run(&VerifyOptions {
        max_n,
        limits,
        inject_fault,
    })?;
    let mut table = Table::new(["check", "parameters", "expected", "actual", "pass"]);
    let mut checks = Vec::with_capacity(report.checks.len());
    for check in &report.checks {
        table.push([
            check.name.to_string(),
            check.parameters.replace(',', ";"),
            check.expected.to_string(),
            check.actual.to_string(),
            check.pass.to_string(),
        ]);
        checks.push(json!({
            "name": check.name,
            "parameters": check.parameters,
            "expected": count_json(&check.expected),
            "actual": count_json(&check.actual),
            "pass": check.pass,
        }));
    }
    let json = json!({
        "max_n": max_n,
        "passed": report.passed(),
        "failed": report.failed(),
        "checks": checks,
    });
    let mut text = emit(&table, json, format);
    if format == OutputFormat::Table {
        text.push_str(&format!(
            "\n{} passed, {} failed\n",
            report.passed(),
            report.failed()
        ));
    }
    Ok(Output {
        text,
        status: if report.all_passed() { 0 } else { 1 },
    })
}
