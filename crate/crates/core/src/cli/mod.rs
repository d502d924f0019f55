//! The `largevars` command line: `test`, `quantiles`, `simulate` and
//! `airy-sim`.
//!
//! Each subcommand returns its human-readable report; JSON and other files
//! are written as side effects. Exit codes: 0 completed, 2 input validation,
//! 3 numerical failure, 4 I/O.

mod input;
mod report;

pub use input::{parse_timeseries_csv, parse_timeseries_str, CsvOptions};
pub use report::{quantile_grid, quantiles_json, test_json, test_report};

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::coint::{run_test, TestOptions};
use crate::diagnostics::{self, default_bins, eigen_histogram, PlotFormat};
use crate::error::{Error, Result};
use crate::sim::{
    airy_partial_sums, average_quantile_tables, empirical_p_value, estimate_quantile_table,
    AirySimBatch, AirySimConfig, H0SimConfig,
};
use crate::tables::quantile_table;

#[derive(Debug, Parser)]
#[command(name = "largevars", version, about = "Cointegration test for high-dimensional VAR(k)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the cointegration test on a CSV data set.
    Test(TestArgs),
    /// Print the quantile table of the sum of the top r Airy_1 points.
    Quantiles(QuantilesArgs),
    /// Empirical p-value from simulated null data sets.
    Simulate(SimulateArgs),
    /// Regenerate quantile tables by tridiagonal Monte Carlo.
    AirySim(AirySimArgs),
}

#[derive(Debug, Args)]
pub struct TestArgs {
    #[arg(long)]
    pub data: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[arg(long)]
    pub fin_sample_corr: bool,
    /// Take natural logs of the data.
    #[arg(long)]
    pub log: bool,
    /// The first CSV line is a header.
    #[arg(long)]
    pub header: bool,
    /// Drop the first CSV column (dates).
    #[arg(long)]
    pub date_col: bool,
    /// Write the eigenvalue histogram with the Wachter density (.svg or .csv).
    #[arg(long)]
    pub plot: Option<PathBuf>,
    /// Histogram bins; defaults to max(10, round(sqrt(N))).
    #[arg(long)]
    pub bins: Option<usize>,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct QuantilesArgs {
    #[arg(long)]
    pub r: usize,
    /// Emit level -> value pairs as JSON instead of the grid.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub tau: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub stat: f64,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    #[arg(long)]
    pub fin_sample_corr: bool,
    #[arg(long, default_value_t = 1000)]
    pub sims: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// CSV of simulated statistics.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// CSV histogram of simulated statistics.
    #[arg(long)]
    pub hist: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AirySimArgs {
    #[arg(long)]
    pub n_full: u64,
    #[arg(long)]
    pub sims: usize,
    #[arg(long, default_value_t = 10)]
    pub r_max: usize,
    /// Corner size; defaults to floor(sqrt(n_full)).
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Split the runs into this many groups and average their quantiles.
    #[arg(long, default_value_t = 1)]
    pub batches: usize,
    /// Also dump every run's partial sums as CSV.
    #[arg(long)]
    pub batch_csv: Option<PathBuf>,
    #[arg(long)]
    pub out_dir: PathBuf,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotPositiveDefinite { .. } | Error::NotSymmetric { .. } | Error::Numerical(_) => 3,
        Error::Io { .. } => 4,
        _ => 2,
    }
}

pub fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Test(a) => cmd_test(&a),
        Command::Quantiles(a) => cmd_quantiles(&a),
        Command::Simulate(a) => cmd_simulate(&a),
        Command::AirySim(a) => cmd_airy_sim(&a),
    }
}

fn write_file(path: &Path, body: &str) -> Result<()> {
    fs::write(path, body).map_err(|e| Error::io(path, e))
}

pub fn cmd_test(args: &TestArgs) -> Result<String> {
    let plot_format = args.plot.as_deref().map(PlotFormat::from_path).transpose()?;
    let ts = parse_timeseries_csv(
        &args.data,
        CsvOptions {
            header: args.header,
            date_col: args.date_col,
            log: args.log,
        },
    )?;
    let result = run_test(
        &ts,
        &TestOptions {
            k: args.k,
            r: args.r,
            alpha: args.alpha,
            fin_sample_corr: args.fin_sample_corr,
        },
    )?;
    if let Some(path) = &args.json {
        let body = serde_json::to_string_pretty(&test_json(&result)).expect("json value");
        write_file(path, &(body + "\n"))?;
    }
    if let (Some(path), Some(format)) = (&args.plot, plot_format) {
        let bins = args.bins.unwrap_or_else(|| default_bins(result.n));
        let hist = eigen_histogram(&result.eigenvalues, bins, &result.params)?;
        diagnostics::render_diagnostic(&hist, &result.params, path, format)?;
    }
    Ok(test_report(&result))
}

pub fn cmd_quantiles(args: &QuantilesArgs) -> Result<String> {
    let table = quantile_table(args.r)?;
    if args.json {
        Ok(serde_json::to_string_pretty(&quantiles_json(table)).expect("json value") + "\n")
    } else {
        Ok(quantile_grid(table))
    }
}

pub fn cmd_simulate(args: &SimulateArgs) -> Result<String> {
    let cfg = H0SimConfig {
        n: args.n,
        tau: args.tau,
        k: args.k,
        r: args.r,
        fin_sample_corr: args.fin_sample_corr,
        sim_num: args.sims,
        seed: args.seed,
    };
    let res = empirical_p_value(&cfg, args.stat)?;
    if let Some(path) = &args.out {
        let mut body = String::from("statistic\n");
        for s in &res.samples {
            body.push_str(&format!("{s}\n"));
        }
        write_file(path, &body)?;
    }
    if let Some(path) = &args.hist {
        let finite: Vec<f64> = res.samples.iter().copied().filter(|v| v.is_finite()).collect();
        let lo = finite.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = finite.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let (lo, hi) = if hi > lo { (lo, hi) } else { (lo - 0.5, lo + 0.5) };
        let hist = diagnostics::histogram(&finite, default_bins(finite.len()), lo, hi)?;
        let mut body = String::from("bin,left,right,density\n");
        for (d, w) in hist.densities.iter().zip(hist.bin_edges.windows(2)) {
            body.push_str(&format!("bin,{},{},{}\n", w[0], w[1], d));
        }
        write_file(path, &body)?;
    }
    Ok(report::simulate_report(&cfg, args.stat, &res))
}

pub fn cmd_airy_sim(args: &AirySimArgs) -> Result<String> {
    let mut cfg = AirySimConfig::new(args.n_full, args.r_max, args.sims, args.seed);
    if let Some(m) = args.m {
        cfg.m = m;
    }
    cfg.validate()?;
    if args.batches == 0 || args.sims / args.batches < crate::sim::MIN_SAMPLES {
        return Err(Error::InvalidInput(format!(
            "each of the {} batches needs at least {} runs",
            args.batches,
            crate::sim::MIN_SAMPLES
        )));
    }
    fs::create_dir_all(&args.out_dir).map_err(|e| Error::io(&args.out_dir, e))?;
    let start = Instant::now();
    let batch = airy_partial_sums(&cfg)?;
    let wall = start.elapsed().as_secs_f64();

    let per = args.sims / args.batches;
    let groups: Vec<AirySimBatch> = (0..args.batches)
        .map(|b| {
            let end = if b + 1 == args.batches { args.sims } else { (b + 1) * per };
            let rows: Vec<Vec<f64>> = batch.rows().skip(b * per).take(end - b * per).map(<[f64]>::to_vec).collect();
            AirySimBatch::from_rows(cfg.r_max, &rows)
        })
        .collect::<Result<_>>()?;

    let mut files = Vec::new();
    for r in 1..=cfg.r_max {
        let estimates = groups
            .iter()
            .map(|g| estimate_quantile_table(g, r))
            .collect::<Result<Vec<_>>>()?;
        let table = average_quantile_tables(&estimates)?;
        let header = vec![
            format!("Regenerated quantiles of the sum of the top r = {r} Airy_1 points."),
            format!(
                "n_full={} m={} runs={} batches={} seed={}",
                cfg.n_full, cfg.m, cfg.num_sims, args.batches, cfg.seed
            ),
        ];
        let name = format!("airy_r{r:02}.txt");
        write_file(&args.out_dir.join(&name), &table.to_text(&header))?;
        files.push(name);
    }
    if let Some(path) = &args.batch_csv {
        let f = fs::File::create(path).map_err(|e| Error::io(path, e))?;
        batch
            .write_csv(std::io::BufWriter::new(f))
            .map_err(|e| Error::io(path, e))?;
    }
    let manifest = json!({
        "n_full": cfg.n_full,
        "m": cfg.m,
        "r_max": cfg.r_max,
        "num_sims": cfg.num_sims,
        "seed": cfg.seed,
        "batches": args.batches,
        "samples": batch.num_sims(),
        "wall_time_secs": wall,
        "files": files,
    });
    write_file(
        &args.out_dir.join("manifest.json"),
        &(serde_json::to_string_pretty(&manifest).expect("json value") + "\n"),
    )?;
    Ok(format!(
        "Airy_1 partial-sum simulation\nn_full: {}\nm: {}\nr_max: {}\nruns: {}\nseed: {}\nwall_time_secs: {wall:.2}\nout_dir: {}\n",
        cfg.n_full,
        cfg.m,
        cfg.r_max,
        cfg.num_sims,
        cfg.seed,
        args.out_dir.display()
    ))
}
