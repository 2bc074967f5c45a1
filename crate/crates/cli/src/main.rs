use std::process::ExitCode;

use ctforge::{
    run_classify_nakayama, run_classify_trivext, run_emit_ar_quiver, run_verify_example, Budgets,
    CliError, CommandOutput, DiagramFormat, ReportFormat,
};

const USAGE: &str = "\
ctforge - cluster-tilting classification for trivial extensions of Dynkin
path algebras and symmetric Nakayama algebras

USAGE:
    ctforge classify-trivext  <FAMILY> <RANK> <D_MIN> <D_MAX>   [--format text|json]
    ctforge classify-nakayama <A> <N> <D_MAX> <numeric|bruteforce|both>
                                                                [--format text|json]
    ctforge verify-example    <cta1:N|cta2|cta3|ctd|d4-derived> [--format text|json]
    ctforge emit-ar-quiver    <FAMILY> <RANK> <WINDOW> <CERT|none>
                                                                [--format dot|json|ascii]

OPTIONS:
    --format <F>   output format (default: text, or dot for emit-ar-quiver)
    --out <FILE>   write the payload to FILE instead of stdout
    --timing       include wall-clock timing in JSON reports
    --seedless     reserved (the engine has no randomness); rejected if given

ENVIRONMENT:
    CTFORGE_BUDGET   override both search budgets (1..=128)

EXIT CODES:
    0 success, 2 usage or input error, 3 mathematical verification failure";

struct ParsedArgs {
    positionals: Vec<String>,
    format: Option<String>,
    out: Option<String>,
    timing: bool,
}

fn parse_args(args: &[String]) -> Result<ParsedArgs, CliError> {
    let mut parsed = ParsedArgs {
        positionals: Vec::new(),
        format: None,
        out: None,
        timing: false,
    };
    let mut it = args.iter().peekable();
    while let Some(arg) = it.next() {
        let take_value = |it: &mut std::iter::Peekable<std::slice::Iter<String>>,
                          flag: &str|
         -> Result<String, CliError> {
            it.next()
                .cloned()
                .ok_or_else(|| CliError::Usage(format!("{flag} requires a value")))
        };
        match arg.as_str() {
            "--seedless" => {
                return Err(CliError::Usage(
                    "--seedless is reserved: the engine has no randomness to seed".into(),
                ))
            }
            "--timing" => parsed.timing = true,
            "--format" => parsed.format = Some(take_value(&mut it, "--format")?),
            "--out" => parsed.out = Some(take_value(&mut it, "--out")?),
            _ if arg.starts_with("--format=") => {
                parsed.format = Some(arg["--format=".len()..].to_string())
            }
            _ if arg.starts_with("--out=") => parsed.out = Some(arg["--out=".len()..].to_string()),
            "--help" | "-h" => {
                return Err(CliError::Usage(USAGE.into()));
            }
            _ if arg.starts_with("--") => {
                return Err(CliError::Usage(format!("unknown flag {arg}")));
            }
            _ => parsed.positionals.push(arg.clone()),
        }
    }
    Ok(parsed)
}

fn parse_int<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, CliError> {
    s.parse()
        .map_err(|_| CliError::Usage(format!("{what} must be an integer, got {s:?}")))
}

fn expect_args<'a>(p: &'a ParsedArgs, n: usize, usage: &str) -> Result<&'a [String], CliError> {
    let rest = &p.positionals[1..];
    if rest.len() != n {
        return Err(CliError::Usage(format!(
            "expected {n} arguments: {usage} (got {})",
            rest.len()
        )));
    }
    Ok(rest)
}

fn report_format(p: &ParsedArgs) -> Result<ReportFormat, CliError> {
    match &p.format {
        None => Ok(ReportFormat::Text),
        Some(s) => ReportFormat::parse(s)
            .ok_or_else(|| CliError::Usage(format!("unknown format {s:?}; expected text or json"))),
    }
}

fn run(args: &[String]) -> Result<CommandOutput, CliError> {
    let parsed = parse_args(args)?;
    let Some(command) = parsed.positionals.first() else {
        return Err(CliError::Usage(USAGE.into()));
    };
    let budgets = Budgets::from_env()?;
    match command.as_str() {
        "classify-trivext" => {
            let a = expect_args(&parsed, 4, "<FAMILY> <RANK> <D_MIN> <D_MAX>")?;
            run_classify_trivext(
                &a[0],
                parse_int(&a[1], "rank")?,
                parse_int(&a[2], "d_min")?,
                parse_int(&a[3], "d_max")?,
                report_format(&parsed)?,
                parsed.timing,
                budgets,
            )
        }
        "classify-nakayama" => {
            let a = expect_args(&parsed, 4, "<A> <N> <D_MAX> <MODE>")?;
            run_classify_nakayama(
                parse_int(&a[0], "a")?,
                parse_int(&a[1], "n")?,
                parse_int(&a[2], "d_max")?,
                &a[3],
                report_format(&parsed)?,
                parsed.timing,
                budgets,
            )
        }
        "verify-example" => {
            let a = expect_args(&parsed, 1, "<NAME>")?;
            run_verify_example(&a[0], report_format(&parsed)?, parsed.timing)
        }
        "emit-ar-quiver" => {
            let a = expect_args(&parsed, 4, "<FAMILY> <RANK> <WINDOW> <CERT|none>")?;
            let format = match &parsed.format {
                None => DiagramFormat::Dot,
                Some(s) => DiagramFormat::parse(s).ok_or_else(|| {
                    CliError::Usage(format!("unknown format {s:?}; expected dot, json or ascii"))
                })?,
            };
            run_emit_ar_quiver(
                &a[0],
                parse_int(&a[1], "rank")?,
                parse_int(&a[2], "window")?,
                &a[3],
                format,
            )
        }
        other => Err(CliError::Usage(format!(
            "unknown command {other:?}\n\n{USAGE}"
        ))),
    }
    .map(|mut out| {
        if let Some(path) = &parsed.out {
            if let Err(e) = std::fs::write(path, &out.payload) {
                return Err(CliError::Usage(format!("cannot write {path}: {e}")));
            }
            out.payload = String::new();
        }
        Ok(out)
    })?
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(out) => {
            for warning in &out.warnings {
                eprintln!("warning: {warning}");
            }
            print!("{}", out.payload);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("ctforge: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
