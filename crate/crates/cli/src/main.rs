//! `hk`: exact Hilbert-Kunz multiplicities and the bounds that hold them.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hk_cli::cache::Cache;
use hk_cli::pipeline::{
    corpus_exit_code, corpus_sweep, recompute_cache_entry, ring_exit_code, run_pipeline,
    PipelineOptions,
};
use hk_cli::report::{corpus_csv, ring_reports_csv, to_json, EstimateJson, SampleJson};
use hk_cli::spec_file::parse_ring_spec;
use hk_core::groebner::BuchbergerConfig;
use hk_core::hk::{hk_estimate, hk_function, hs_multiplicity};
use hk_core::ideal::IdealPresentation;
use hk_core::monomial::MonomialOrder;
use hk_core::parse::parse_polynomial;
use hk_core::poly::PolyRing;
use hk_core::rational::rat_to_string;
use hk_core::staircase::StaircaseRegion;

#[derive(Parser)]
#[command(
    name = "hk",
    version,
    about = "Exact Hilbert-Kunz multiplicities over prime fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Largest Frobenius exponent e (samples q = p^1 .. p^e)
    #[arg(long, default_value_t = 3)]
    e_max: u32,

    /// Depth of the Hilbert-Samuel difference table
    #[arg(long, default_value_t = 8)]
    n_max: u32,

    /// Monomial order: lex, grlex, grevlex
    #[arg(long, default_value = "grevlex")]
    order: String,

    /// Directory for the content-addressed result cache
    #[arg(long)]
    cache_dir: Option<PathBuf>,

    /// Disable the cache even when --cache-dir is set
    #[arg(long)]
    no_cache: bool,

    /// Output format: json or csv
    #[arg(long, default_value = "json")]
    format: String,

    /// Cap on processed S-pairs per Groebner run
    #[arg(long, default_value_t = 1_000_000)]
    max_pairs: usize,
}

impl CommonOpts {
    fn order(&self) -> Result<MonomialOrder, String> {
        self.order.parse()
    }

    fn pipeline_options(&self) -> Result<PipelineOptions, String> {
        Ok(PipelineOptions {
            e_max: self.e_max,
            n_max: self.n_max,
            order: self.order()?,
            config: BuchbergerConfig {
                max_pairs: self.max_pairs,
                ..BuchbergerConfig::default()
            },
        })
    }

    fn open_cache(&self) -> Result<Option<Cache>, String> {
        if self.no_cache {
            return Ok(None);
        }
        match &self.cache_dir {
            None => Ok(None),
            Some(dir) => Cache::open(dir).map(Some).map_err(|e| e.to_string()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Sample the Hilbert-Kunz function of an ideal (default: the maximal ideal)
    Fn {
        /// Path to a .ring spec file
        spec: PathBuf,
        /// Comma-separated generator expressions for the ideal
        #[arg(long)]
        ideal: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Estimate the Hilbert-Kunz multiplicity by Richardson extrapolation
    Est {
        spec: PathBuf,
        #[arg(long)]
        ideal: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Hilbert-Samuel multiplicity by stabilized finite differences
    Mult {
        spec: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Exact Hilbert-Kunz multiplicity of an m-primary monomial ideal
    Vol {
        /// Comma-separated variable names, e.g. x,y
        #[arg(long)]
        vars: String,
        /// Monomial generators, e.g. "x^2" "x*y" "y^2"
        #[arg(required = true)]
        generators: Vec<String>,
    },
    /// Full bound report for one ring spec
    Verify {
        spec: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Corpus sweep: per-ring reports plus the epsilon table
    Report {
        /// Directory of .ring spec files
        corpus: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
        /// Re-verify a sample of cache entries against recomputation
        #[arg(long)]
        verify_cache: bool,
    },
}

fn parse_ideal_arg(
    text: &str,
    ring: &std::sync::Arc<PolyRing>,
    order: MonomialOrder,
) -> Result<IdealPresentation, String> {
    let gens = text
        .split(',')
        .map(|s| parse_polynomial(s.trim(), ring, order).map_err(|e| format!("--ideal: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    IdealPresentation::new(ring, order, gens).map_err(|e| e.to_string())
}

fn run() -> Result<i32, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Fn { spec, ideal, common } => {
            let order = common.order()?;
            let opts = common.pipeline_options()?;
            let text = fs::read_to_string(&spec).map_err(|e| format!("{}: {e}", spec.display()))?;
            let loaded = parse_ring_spec(&text, &spec.display().to_string(), order)
                .map_err(|e| e.to_string())?;
            let analysis = loaded
                .presentation
                .analyze(order, &opts.config)
                .map_err(|e| e.to_string())?;
            let (ideal, label) = match &ideal {
                None => (loaded.presentation.maximal_ideal(order), "m".to_string()),
                Some(t) => (
                    parse_ideal_arg(t, loaded.presentation.ring(), order)?,
                    t.clone(),
                ),
            };
            let f = hk_function(
                &loaded.presentation,
                &ideal,
                &label,
                common.e_max,
                analysis.dimension,
                order,
                &opts.config,
            )
            .map_err(|e| e.to_string())?;
            let samples: Vec<SampleJson> = f.samples.iter().map(SampleJson::from_sample).collect();
            if common.format == "csv" {
                println!("e,q,colength,normalized");
                for s in &samples {
                    println!("{},{},{},{}", s.e, s.q, s.colength, s.normalized);
                }
            } else {
                print!("{}", to_json(&samples));
            }
            Ok(0)
        }
        Command::Est { spec, ideal, common } => {
            let order = common.order()?;
            let opts = common.pipeline_options()?;
            let text = fs::read_to_string(&spec).map_err(|e| format!("{}: {e}", spec.display()))?;
            let loaded = parse_ring_spec(&text, &spec.display().to_string(), order)
                .map_err(|e| e.to_string())?;
            let analysis = loaded
                .presentation
                .analyze(order, &opts.config)
                .map_err(|e| e.to_string())?;
            let (ideal, label) = match &ideal {
                None => (loaded.presentation.maximal_ideal(order), "m".to_string()),
                Some(t) => (
                    parse_ideal_arg(t, loaded.presentation.ring(), order)?,
                    t.clone(),
                ),
            };
            let f = hk_function(
                &loaded.presentation,
                &ideal,
                &label,
                common.e_max,
                analysis.dimension,
                order,
                &opts.config,
            )
            .map_err(|e| e.to_string())?;
            let est = hk_estimate(&f, analysis.dimension).map_err(|e| e.to_string())?;
            print!("{}", to_json(&EstimateJson::from_estimate(&est)));
            Ok(0)
        }
        Command::Mult { spec, common } => {
            let order = common.order()?;
            let opts = common.pipeline_options()?;
            let text = fs::read_to_string(&spec).map_err(|e| format!("{}: {e}", spec.display()))?;
            let loaded = parse_ring_spec(&text, &spec.display().to_string(), order)
                .map_err(|e| e.to_string())?;
            let est = hs_multiplicity(&loaded.presentation, common.n_max, order, &opts.config)
                .map_err(|e| e.to_string())?;
            print!("{}", to_json(&EstimateJson::from_estimate(&est)));
            Ok(0)
        }
        Command::Vol { vars, generators } => {
            let var_list: Vec<&str> = vars.split(',').map(|s| s.trim()).collect();
            // the characteristic is irrelevant to the staircase volume
            let ring = PolyRing::new(65521, &var_list).map_err(|e| e.to_string())?;
            let mut exps = Vec::new();
            for g in &generators {
                let poly = parse_polynomial(g, &ring, MonomialOrder::GrevLex)
                    .map_err(|e| format!("{g}: {e}"))?;
                let terms = poly.terms();
                if terms.len() != 1 {
                    return Err(format!("{g}: staircase generators must be single monomials"));
                }
                exps.push(terms[0].monomial.exps().to_vec());
            }
            let region = StaircaseRegion::new(exps).map_err(|e| e.to_string())?;
            let volume = region.exact_hk_multiplicity().map_err(|e| e.to_string())?;
            println!("{}", rat_to_string(&volume));
            Ok(0)
        }
        Command::Verify { spec, common } => {
            let order = common.order()?;
            let opts = common.pipeline_options()?;
            let cache = common.open_cache()?;
            let text = fs::read_to_string(&spec).map_err(|e| format!("{}: {e}", spec.display()))?;
            let loaded = parse_ring_spec(&text, &spec.display().to_string(), order)
                .map_err(|e| e.to_string())?;
            let outcome = run_pipeline(&loaded, &opts, cache.as_ref());
            if common.format == "csv" {
                print!("{}", ring_reports_csv(std::slice::from_ref(&outcome.report)));
            } else {
                print!("{}", to_json(&outcome.report));
            }
            Ok(ring_exit_code(&outcome.report))
        }
        Command::Report {
            corpus,
            common,
            verify_cache,
        } => {
            let opts = common.pipeline_options()?;
            let cache = common.open_cache()?;
            let report =
                corpus_sweep(&corpus, &opts, cache.as_ref()).map_err(|e| e.to_string())?;
            if common.format == "csv" {
                print!("{}", corpus_csv(&report));
            } else {
                print!("{}", to_json(&report));
            }
            if verify_cache {
                match &cache {
                    None => eprintln!("cache-verify: no cache configured"),
                    Some(c) => {
                        let n = c
                            .verify(20, recompute_cache_entry)
                            .map_err(|e| e.to_string())?;
                        eprintln!("cache-verify: {n} entries recomputed, all exact");
                    }
                }
            }
            Ok(corpus_exit_code(&report))
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(message) => {
            eprintln!("hk: {message}");
            ExitCode::from(3)
        }
    }
}
