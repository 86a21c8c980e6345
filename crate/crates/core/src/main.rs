use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use regen_core::cli::{
    cmd_functional, cmd_oracle, cmd_point, cmd_region, cmd_verify, Construction, Format, Series,
    VerifyOptions,
};
use regen_core::codes::DEFAULT_FIELD_ORDER;
use regen_core::exactmath::parse_rational;
use regen_core::SystemParams;

/// Exact-repair storage/bandwidth tradeoff bounds and concrete code checks.
#[derive(Parser)]
#[command(name = "regen", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SystemArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
}

impl SystemArgs {
    fn params(&self) -> Result<SystemParams> {
        Ok(SystemParams::new(self.n, self.k, self.d)?)
    }
}

#[derive(Args)]
struct OutputArgs {
    /// csv or json
    #[arg(long, default_value = "csv")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl OutputArgs {
    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => {
                fs::write(path, text).with_context(|| format!("writing {}", path.display()))
            }
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// A single tradeoff point.
    Point {
        #[command(flatten)]
        system: SystemArgs,
        /// msr, mbr, c1, c2 or baseline
        #[arg(long)]
        construction: Option<Construction>,
        #[arg(long)]
        khat: Option<usize>,
        /// Minimum functional-repair bandwidth at this storage ("p/q").
        #[arg(long, conflicts_with = "construction")]
        alpha: Option<String>,
        /// Report unnormalized storage and bandwidth.
        #[arg(long)]
        raw: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Curves and the combined inner-bound hull.
    Region {
        #[command(flatten)]
        system: SystemArgs,
        /// Comma-separated: functional, space-share, baseline, c1, c2, hull, or all.
        #[arg(long, default_value = "all")]
        series: String,
        #[arg(long)]
        raw: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build, glue and exhaustively check a concrete code.
    Verify {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        khat: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Prime field order.
        #[arg(long, default_value_t = DEFAULT_FIELD_ORDER)]
        field: u32,
        /// Lift the node-count cap on n! gluing.
        #[arg(long)]
        cap_override: bool,
        /// Corrupt one stored subsymbol as NODE,COPY before checking.
        #[arg(long, hide = true, value_parser = parse_pair)]
        tamper: Option<(usize, usize)>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Brute-force information oracle against the closed-form file size.
    Oracle {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        khat: usize,
        #[arg(long)]
        cap_override: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected NODE,COPY")?;
    Ok((
        a.trim().parse().map_err(|e| format!("{e}"))?,
        b.trim().parse().map_err(|e| format!("{e}"))?,
    ))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Point {
            system,
            construction,
            khat,
            alpha,
            raw,
            output,
        } => {
            let params = system.params()?;
            let record = match (construction, alpha) {
                (_, Some(a)) => cmd_functional(&params, &parse_rational(&a)?)?,
                (Some(c), None) => cmd_point(&params, c, khat, raw)?,
                (None, None) => anyhow::bail!("point needs --construction or --alpha"),
            };
            output.emit(&record.render(output.format))?;
            Ok(true)
        }
        Command::Region {
            system,
            series,
            raw,
            output,
        } => {
            let params = system.params()?;
            let series = Series::parse_list(&series).map_err(anyhow::Error::msg)?;
            let record = cmd_region(&params, &series, raw)?;
            output.emit(&record.render(output.format))?;
            Ok(true)
        }
        Command::Verify {
            system,
            khat,
            seed,
            field,
            cap_override,
            tamper,
            output,
        } => {
            let params = system.params()?;
            let opts = VerifyOptions {
                seed,
                field,
                cap_override,
                tamper,
            };
            let report = cmd_verify(&params, khat, &opts)?;
            output.emit(&report.render(output.format))?;
            Ok(report.passed())
        }
        Command::Oracle {
            system,
            khat,
            cap_override,
            output,
        } => {
            let params = system.params()?;
            let report = cmd_oracle(&params, khat, cap_override)?;
            output.emit(&report.render(output.format))?;
            Ok(report.agrees())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
