//! `g2coh`: boundary and Eisenstein cohomology tables for `G2(Z)`.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use g2coh::oracles::verify_all;
use g2coh::record::{OutputRecord, What};
use g2coh::{HighestWeight, LOracle};

const USAGE: u8 = 2;
const MISMATCH: u8 = 1;

#[derive(Parser)]
#[command(name = "g2coh", version, about = "Boundary and Eisenstein cohomology of G2(Z)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology of a single highest weight.
    Table {
        #[arg(long, allow_negative_numbers = true)]
        m1: i64,
        #[arg(long, allow_negative_numbers = true)]
        m2: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, value_enum, default_value_t = WhatArg::Both)]
        what: WhatArg,
        /// symbolic, all-nonzero, all-zero, sign or file:PATH
        #[arg(long, env = "G2COH_L_ORACLE", default_value = "symbolic")]
        l_oracle: String,
    },
    /// JSON-lines records for every weight in a box, in lexicographic order.
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        m1_max: i64,
        #[arg(long, allow_negative_numbers = true)]
        m2_max: i64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, env = "G2COH_L_ORACLE", default_value = "symbolic")]
        l_oracle: String,
    },
    /// Cross-check the engine against the closed-form tables.
    Verify {
        #[arg(long, default_value_t = 10)]
        grid: u32,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhatArg {
    Boundary,
    Eisenstein,
    Both,
}

impl From<WhatArg> for What {
    fn from(w: WhatArg) -> What {
        match w {
            WhatArg::Boundary => What::Boundary,
            WhatArg::Eisenstein => What::Eisenstein,
            WhatArg::Both => What::Both,
        }
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn weight(m1: i64, m2: i64) -> Result<HighestWeight, String> {
    HighestWeight::try_new(m1, m2).ok_or_else(|| format!("highest weight must be dominant, got m1 = {m1}, m2 = {m2}"))
}

fn table(m1: i64, m2: i64, format: Format, what: WhatArg, l_oracle: &str) -> ExitCode {
    let lambda = match weight(m1, m2) {
        Ok(l) => l,
        Err(e) => return usage_error(e),
    };
    let oracle = match LOracle::from_spec(l_oracle) {
        Ok(o) => o,
        Err(e) => return usage_error(e),
    };
    let record = match OutputRecord::build(lambda, what.into(), &oracle) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    let text = match format {
        Format::Json => record.to_json_pretty() + "\n",
        Format::Markdown => record.to_markdown(),
        Format::Latex => record.to_latex(),
    };
    print!("{text}");
    ExitCode::SUCCESS
}

fn sweep(m1_max: i64, m2_max: i64, out: &PathBuf, l_oracle: &str) -> ExitCode {
    let bounds = match weight(m1_max, m2_max) {
        Ok(l) => l,
        Err(e) => return usage_error(e),
    };
    let oracle = match LOracle::from_spec(l_oracle) {
        Ok(o) => o,
        Err(e) => return usage_error(e),
    };
    let weights: Vec<HighestWeight> = HighestWeight::grid(bounds.m1, bounds.m2).collect();
    let lines: Result<Vec<String>, _> = weights
        .par_iter()
        .map(|&lambda| OutputRecord::build(lambda, What::Both, &oracle).map(|r| r.to_json()))
        .collect();
    let lines = match lines {
        Ok(l) => l,
        Err(e) => return usage_error(e),
    };
    let file = match File::create(out) {
        Ok(f) => f,
        Err(e) => return usage_error(format!("{}: {e}", out.display())),
    };
    let mut w = BufWriter::new(file);
    for line in &lines {
        if let Err(e) = writeln!(w, "{line}") {
            return usage_error(format!("{}: {e}", out.display()));
        }
    }
    if let Err(e) = w.flush() {
        return usage_error(format!("{}: {e}", out.display()));
    }
    ExitCode::SUCCESS
}

fn verify(grid: u32, inject_fault: bool) -> ExitCode {
    if grid == 0 {
        return usage_error("--grid must be at least 1");
    }
    let report = verify_all(grid, inject_fault);
    println!("{report}");
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(MISMATCH)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Table { m1, m2, format, what, l_oracle } => table(m1, m2, format, what, &l_oracle),
        Command::Sweep { m1_max, m2_max, out, l_oracle } => sweep(m1_max, m2_max, &out, &l_oracle),
        Command::Verify { grid, inject_fault } => verify(grid, inject_fault),
    }
}
