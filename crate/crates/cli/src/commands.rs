use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use anyhow::Context;
use pathpower_core::formula::{closed_form_span, HypothesisCheck, Variant};
use pathpower_core::sweep::{parse_range, run_sweep, KMode, SweepSpec};
use pathpower_core::{
    check_coloring, construct::construct_unchecked, construct_optimal, decompose,
    lower_bound_certificate, rc_exact, CaseTag, ColoringFile, Error, Layering, OracleConfig,
    OracleOutcome, Parity, PathPowerGraph,
};
use serde::Serialize;
use serde_json::json;

use crate::{Command, Format, InstanceArgs, OracleArgs, VariantArg};

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        Failure::domain(format!("{err:#}"))
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn graph(instance: InstanceArgs) -> Result<PathPowerGraph, Failure> {
    PathPowerGraph::new(instance.n, instance.m).map_err(|e| match e {
        Error::PowerExceedsLength { n, .. } => {
            Failure::usage(format!("{e}\nhint: rerun with --m {n}"))
        }
        other => Failure::usage(other.to_string()),
    })
}

fn domain(e: Error) -> Failure {
    Failure::domain(e.to_string())
}

fn variant(v: VariantArg) -> Variant {
    match v {
        VariantArg::Consistent => Variant::Consistent,
        VariantArg::AsPrinted => Variant::AsPrinted,
    }
}

fn oracle_config(args: &OracleArgs) -> OracleConfig {
    OracleConfig {
        max_vertices: args.max_vertices,
        node_budget: args.node_budget,
        parallel: args.parallel,
        ..OracleConfig::default()
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(Failure::from),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .context("writing to stdout")
                .map_err(Failure::from)
        }
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

pub fn run(command: Command) -> CmdResult {
    match command {
        Command::Color {
            instance,
            k,
            unchecked,
            out,
        } => color(instance, k, unchecked, out.as_deref()),
        Command::Formula {
            instance,
            k,
            variant: v,
            unchecked,
        } => formula(instance, k, v, unchecked),
        Command::Verify { input, decompose } => verify(&input, decompose),
        Command::Layers { instance } => {
            let layering = Layering::new(graph(instance)?);
            emit(&pretty(&layering.to_json()), None)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Exact {
            instance,
            k,
            oracle,
        } => exact(instance, k, &oracle),
        Command::Sweep {
            n,
            m,
            k,
            variant: v,
            oracle,
            oracle_args,
            jobs,
            format,
            out,
        } => {
            let spec = SweepSpec {
                n_range: parse_range(&n).map_err(Failure::usage)?,
                m_range: parse_range(&m).map_err(Failure::usage)?,
                k_mode: k.parse::<KMode>().map_err(Failure::usage)?,
                variant: variant(v),
                oracle: oracle.then(|| oracle_config(&oracle_args)),
                parallel: jobs,
            };
            sweep(&spec, format, out.as_deref())
        }
    }
}

fn color(instance: InstanceArgs, k: u64, unchecked: bool, out: Option<&Path>) -> CmdResult {
    let g = graph(instance)?;
    if k == 0 {
        return Err(Failure::usage("k must be at least 1"));
    }
    let coloring = if unchecked {
        let c = construct_unchecked(&g, k).map_err(domain)?;
        if !pathpower_core::hypothesis_holds(&g, k) {
            eprintln!(
                "warning: k = {k} is outside the closed-form regime; result is not certified"
            );
        }
        c
    } else {
        construct_optimal(&g, k).map_err(domain)?
    };
    let file = coloring.to_file().map_err(domain)?;
    emit(&pretty(&file), out)?;
    Ok(ExitCode::SUCCESS)
}

fn formula(instance: InstanceArgs, k: u64, v: VariantArg, unchecked: bool) -> CmdResult {
    let g = graph(instance)?;
    let check = if unchecked {
        HypothesisCheck::Unchecked
    } else {
        HypothesisCheck::Strict
    };
    let result = closed_form_span(&g, k, variant(v), check).map_err(domain)?;
    let case = CaseTag::of(&g);
    if result.variant == Variant::AsPrinted && case.parity == Parity::Even && !case.divides {
        let fixed = closed_form_span(&g, k, Variant::Consistent, check).map_err(domain)?;
        eprintln!(
            "warning: as-printed fourth case uses (m+s)^2; the lower and upper bounds both give (m-s)^2 = {}",
            fixed.value
        );
    }
    if !result.hypothesis_holds {
        eprintln!("warning: k = {k} is outside the closed-form regime; value is not certified");
    }
    emit(&pretty(&result), None)?;
    Ok(ExitCode::SUCCESS)
}

fn verify(input: &Path, with_decomposition: bool) -> CmdResult {
    let text = fs::read_to_string(input)
        .map_err(|e| Failure::usage(format!("reading {}: {e}", input.display())))?;
    let file: ColoringFile = serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("{}: {e}", input.display())))?;
    let declared_span = file.span;
    let declared_sequence = file.sequence.clone();
    let coloring = file
        .into_coloring()
        .map_err(|e| Failure::usage(format!("{}: {e}", input.display())))?;

    let report = check_coloring(&coloring);
    let sequence = coloring.sequence();
    if let Err(e @ Error::ColorTie { .. }) = &sequence {
        eprintln!("distinctness error: {e}");
    }
    if declared_span.is_some_and(|s| s != report.span) {
        eprintln!("warning: declared span does not match the colors");
    }
    if let (Some(declared), Ok(actual)) = (&declared_sequence, &sequence) {
        if declared.as_slice() != actual.order() {
            eprintln!("warning: declared sequence does not match the color order");
        }
    }

    let mut body = serde_json::to_value(&report).expect("serializable");
    if with_decomposition && report.valid {
        let layering = Layering::new(*coloring.graph());
        let d = decompose(&layering, &coloring).map_err(domain)?;
        let certificate = lower_bound_certificate(&layering, &coloring).map_err(domain)?;
        body["decomposition"] = serde_json::to_value(&d).expect("serializable");
        body["certificate"] = json!(certificate);
    }
    emit(&pretty(&body), None)?;
    Ok(if report.valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn exact(instance: InstanceArgs, k: u64, args: &OracleArgs) -> CmdResult {
    let g = graph(instance)?;
    let outcome = rc_exact(&g, k, &oracle_config(args)).map_err(|e| match e {
        Error::OracleTooLarge { .. } | Error::OracleNeedsDistinctColors { .. } => {
            Failure::usage(e.to_string())
        }
        other => domain(other),
    })?;
    let body = match &outcome {
        OracleOutcome::Exact {
            value,
            witness,
            nodes,
        } => json!({
            "n": g.n(), "m": g.m(), "k": k,
            "status": "exact",
            "value": value,
            "nodes": nodes,
            "witness": witness.to_file().map_err(domain)?,
        }),
        OracleOutcome::Inconclusive {
            lower_bound,
            incumbent,
            witness,
            nodes,
        } => {
            eprintln!(
                "warning: node budget exhausted; optimum lies in {lower_bound}..={incumbent}"
            );
            json!({
                "n": g.n(), "m": g.m(), "k": k,
                "status": "inconclusive",
                "lowerBound": lower_bound,
                "incumbent": incumbent,
                "nodes": nodes,
                "witness": witness.to_file().map_err(domain)?,
            })
        }
    };
    emit(&pretty(&body), None)?;
    Ok(ExitCode::SUCCESS)
}

fn sweep(spec: &SweepSpec, format: Format, out: Option<&Path>) -> CmdResult {
    let report = run_sweep(spec).map_err(domain)?;
    let text = match format {
        Format::Json => {
            let mut text = report.to_json().context("serializing report")?;
            text.push('\n');
            text
        }
        Format::Csv => {
            let mut buf = Vec::new();
            report.write_csv(&mut buf).context("writing CSV")?;
            String::from_utf8(buf).expect("CSV is UTF-8")
        }
    };
    emit(&text, out)?;
    let failures = report.failures();
    if failures > 0 {
        eprintln!("{failures} of {} row(s) failed", report.rows.len());
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}
