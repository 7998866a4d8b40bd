//! The per-ring verification pipeline and the corpus sweep.
//!
//! A pipeline run is deterministic: identical inputs and engine version
//! produce byte-identical reports, with or without the cache. Stage errors
//! are attached to the report as structured failures rather than aborting
//! the sweep.

use std::cell::RefCell;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use hk_core::bounds::{
    check_cm_threshold, check_colength_gap, check_f_monotonicity, check_known_value,
    check_lambda_floor, check_lower_bound_theorem, check_regularity_consistency, check_sandwich,
    check_trivial_bound, epsilon_table, CheckOutcome, CheckStatus, EpsilonEntry, FStatistic,
    f_statistic,
};
use hk_core::groebner::{buchberger, normal_form, BuchbergerConfig};
use hk_core::hk::{
    colength_with_stats, frobenius_power, hk_estimate, hk_function_via, hs_multiplicity_with,
    EngineError, MultiplicityEstimate, RingPresentation,
};
use hk_core::ideal::IdealPresentation;
use hk_core::monomial::MonomialOrder;
use hk_core::parse::parse_polynomial;
use hk_core::poly::PolyRing;
use hk_core::rational::{rat_to_string, rat_u64};

use crate::cache::{Cache, CacheEntry, CacheError, CacheInputs, ENGINE_VERSION};
use crate::report::{
    CheckJson, CorpusReport, EpsilonJson, EstimateJson, FStatJson, RingReport, SampleJson,
};
use crate::spec_file::{parse_ring_spec, LoadedSpec, SpecError};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Spec(#[from] SpecError),

    #[error(transparent)]
    Cache(#[from] CacheError),

    #[error("corpus I/O at {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("corpus directory {0} contains no .ring files")]
    EmptyCorpus(String),
}

#[derive(Debug, Clone)]
pub struct PipelineOptions {
    pub e_max: u32,
    pub n_max: u32,
    pub order: MonomialOrder,
    pub config: BuchbergerConfig,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            e_max: 3,
            n_max: 8,
            order: MonomialOrder::GrevLex,
            config: BuchbergerConfig::default(),
        }
    }
}

/// The full outcome of one ring pipeline: the serialized report plus the
/// epsilon-table contribution for nonregular rings.
#[derive(Debug, Clone)]
pub struct PipelineOutcome {
    pub report: RingReport,
    pub epsilon: Option<EpsilonEntry>,
}

fn canonical_gens(ideal: &IdealPresentation) -> Vec<String> {
    ideal.generators().iter().map(|g| g.to_string()).collect()
}

/// A colength source that consults the cache when one is configured.
struct Sampler<'a> {
    presentation: &'a RingPresentation,
    order: MonomialOrder,
    config: &'a BuchbergerConfig,
    cache: Option<&'a Cache>,
    relations: Vec<String>,
    cache_fault: RefCell<Option<CacheError>>,
}

impl<'a> Sampler<'a> {
    fn new(
        presentation: &'a RingPresentation,
        order: MonomialOrder,
        config: &'a BuchbergerConfig,
        cache: Option<&'a Cache>,
    ) -> Self {
        Sampler {
            presentation,
            order,
            config,
            cache,
            relations: canonical_gens(presentation.defining_ideal()),
            cache_fault: RefCell::new(None),
        }
    }

    fn colength(&self, frobenius_ideal: &IdealPresentation, q: u64) -> Result<u64, EngineError> {
        let inputs = CacheInputs {
            p: self.presentation.prime(),
            vars: self.presentation.ring().vars().to_vec(),
            relations: self.relations.clone(),
            ideal: canonical_gens(frobenius_ideal),
            order: self.order.to_string(),
            q,
        };
        if let Some(cache) = self.cache {
            if let Some(entry) = cache.get(&inputs) {
                return Ok(entry.colength);
            }
        }
        let (colength, basis_size) =
            colength_with_stats(self.presentation, frobenius_ideal, self.order, self.config)?;
        if let Some(cache) = self.cache {
            let entry = CacheEntry {
                engine: ENGINE_VERSION.to_string(),
                inputs,
                colength,
                basis_size,
            };
            if let Err(fault) = cache.put(&entry) {
                self.cache_fault.borrow_mut().get_or_insert(fault);
            }
        }
        Ok(colength)
    }
}

/// Recomputes a cache entry from its stored inputs; the verification hook.
pub fn recompute_cache_entry(inputs: &CacheInputs) -> Result<(u64, usize), String> {
    let var_refs: Vec<&str> = inputs.vars.iter().map(|s| s.as_str()).collect();
    let ring = PolyRing::new(inputs.p, &var_refs).map_err(|e| e.to_string())?;
    let order: MonomialOrder = inputs.order.parse()?;
    let parse_all = |texts: &[String]| -> Result<Vec<_>, String> {
        texts
            .iter()
            .map(|t| parse_polynomial(t, &ring, order).map_err(|e| e.to_string()))
            .collect()
    };
    let relations = IdealPresentation::new(&ring, order, parse_all(&inputs.relations)?)
        .map_err(|e| e.to_string())?;
    let ideal = IdealPresentation::new(&ring, order, parse_all(&inputs.ideal)?)
        .map_err(|e| e.to_string())?;
    let meta = hk_core::hk::RingMetadata::bare("cache-verify");
    let presentation =
        RingPresentation::new(&ring, relations, meta).map_err(|e| e.to_string())?;
    colength_with_stats(&presentation, &ideal, order, &BuchbergerConfig::default())
        .map_err(|e| e.to_string())
}

struct ChainIdeal {
    label: &'static str,
    ideal: IdealPresentation,
}

fn error_report(spec_name: &str, p: u32, vars: Vec<String>, opts: &PipelineOptions, message: String) -> RingReport {
    RingReport {
        engine_version: ENGINE_VERSION.to_string(),
        ring: spec_name.to_string(),
        p,
        vars,
        order: opts.order.to_string(),
        e_max: opts.e_max,
        n_max: opts.n_max,
        dimension: None,
        regular: None,
        e_hk: None,
        e_r: None,
        hk_samples: Vec::new(),
        lambda_p: None,
        convergence_monotone: None,
        checks: Vec::new(),
        f_stats: Vec::new(),
        epsilon_contribution: None,
        error: Some(message),
    }
}

/// Runs the full verification pipeline for one ring spec.
pub fn run_pipeline(
    spec: &LoadedSpec,
    opts: &PipelineOptions,
    cache: Option<&Cache>,
) -> PipelineOutcome {
    let presentation = &spec.presentation;
    let p = presentation.prime();
    let vars = presentation.ring().vars().to_vec();
    let name = spec.name().to_string();
    let fail = |message: String| PipelineOutcome {
        report: error_report(&name, p, vars.clone(), opts, message),
        epsilon: None,
    };

    // stage 1: defining-ideal basis and dimension
    let analysis = match presentation.analyze(spec.order, &opts.config) {
        Ok(a) => a,
        Err(e) => return fail(e.to_string()),
    };
    let d = analysis.dimension;

    // stage 2: Hilbert-Kunz samples for the maximal ideal
    let e_max = opts.e_max.min(spec.max_e.unwrap_or(u32::MAX)).max(1);
    let sampler = Sampler::new(presentation, spec.order, &opts.config, cache);
    let m = presentation.maximal_ideal(spec.order);
    let function = match hk_function_via(presentation, &m, "m", e_max, d, |ideal, q| {
        sampler.colength(ideal, q)
    }) {
        Ok(f) => f,
        Err(e) => return fail(e.to_string()),
    };
    let lambda_p = function.samples[0].colength;
    let regular = rat_u64(lambda_p) == hk_core::rational::pow_u64(u64::from(p), d);

    let e_hk = match hk_estimate(&function, d) {
        Ok(e) => e,
        Err(e) => return fail(e.to_string()),
    };

    // stage 3: Hilbert-Samuel multiplicity
    let e_r = match hs_multiplicity_with(presentation, &analysis, opts.n_max) {
        Ok(e) => e,
        Err(e) => return fail(e.to_string()),
    };

    // stage 4: checks
    let declared = presentation.declared();
    let mut checks: Vec<CheckOutcome> = Vec::new();
    checks.push(check_lambda_floor(&function, d));
    checks.push(check_regularity_consistency(&function, d, regular));
    checks.push(check_sandwich(&e_hk, &e_r, d));
    let hypotheses_hold = declared.unmixed && declared.cm_image;
    if regular {
        checks.push(
            not_applicable("nonregular_lower_bound", "ring is regular"),
        );
        checks.push(not_applicable("colength_gap_bound", "ring is regular"));
    } else if !hypotheses_hold {
        let note = "requires declared unmixed and cm_image flags";
        checks.push(not_applicable("nonregular_lower_bound", note));
        checks.push(not_applicable("colength_gap_bound", note));
    } else {
        checks.push(check_lower_bound_theorem(&e_hk, &e_r, d, p));
        checks.push(check_colength_gap(&e_hk, &e_r, d, p, lambda_p));
    }
    if hypotheses_hold {
        checks.push(check_cm_threshold(&e_hk, &e_r, d, declared.cohen_macaulay));
    } else {
        checks.push(not_applicable(
            "cm_f_rational_advisory",
            "requires declared unmixed and cm_image flags",
        ));
    }
    checks.push(check_trivial_bound(&e_hk, &e_r, d));

    // stage 5: the f-statistic chain m, m^2, m^[p]
    let mut f_stats: Vec<FStatistic> = Vec::new();
    if spec.f_chain {
        match compute_f_chain(spec, opts, &sampler, &m, &e_hk, d) {
            Ok((stats, chain_checks)) => {
                f_stats = stats;
                checks.extend(chain_checks);
            }
            Err(e) => return fail(e.to_string()),
        }
    }

    if let Some(known) = &declared.known_e_hk {
        checks.push(check_known_value(&e_hk, known));
    }

    let epsilon = if regular {
        None
    } else {
        Some(EpsilonEntry {
            ring_name: name.clone(),
            d,
            p,
            e_hk: e_hk.clone(),
            e_r: e_r.value.clone(),
        })
    };

    let error = sampler
        .cache_fault
        .borrow()
        .as_ref()
        .map(|f| format!("cache fault (results computed without cache): {f}"));

    let report = RingReport {
        engine_version: ENGINE_VERSION.to_string(),
        ring: name,
        p,
        vars,
        order: spec.order.to_string(),
        e_max,
        n_max: opts.n_max,
        dimension: Some(d),
        regular: Some(regular),
        e_hk: Some(EstimateJson::from_estimate(&e_hk)),
        e_r: Some(EstimateJson::from_estimate(&e_r)),
        hk_samples: function.samples.iter().map(SampleJson::from_sample).collect(),
        lambda_p: Some(lambda_p),
        convergence_monotone: normalized_gaps_decrease(&function),
        checks: checks.iter().map(CheckJson::from_outcome).collect(),
        f_stats: f_stats
            .iter()
            .map(|f| FStatJson {
                ideal: f.label.clone(),
                colength: f.ideal_colength,
                value: rat_to_string(&f.value),
                uncertainty: rat_to_string(&f.uncertainty),
            })
            .collect(),
        epsilon_contribution: epsilon
            .as_ref()
            .map(|e| rat_to_string(&(e.e_hk.value.clone() - hk_core::rational::rat_int(1)))),
        error,
    };
    PipelineOutcome { report, epsilon }
}

/// |normalized(e+1) - normalized(e)| should shrink as e grows; `None` when
/// there are too few samples to tell.
fn normalized_gaps_decrease(function: &hk_core::hk::HKFunction) -> Option<bool> {
    let normalized: Vec<_> = function.samples.iter().map(|s| s.normalized.clone()).collect();
    if normalized.len() < 3 {
        return None;
    }
    let gaps: Vec<_> = normalized
        .windows(2)
        .map(|w| {
            use num::Signed;
            (w[1].clone() - w[0].clone()).abs()
        })
        .collect();
    Some(gaps.windows(2).all(|w| w[1] <= w[0]))
}

fn not_applicable(id: &str, note: &str) -> CheckOutcome {
    CheckOutcome {
        id: id.to_string(),
        status: CheckStatus::NotApplicable,
        slack: None,
        note: Some(note.to_string()),
    }
}

fn compute_f_chain(
    spec: &LoadedSpec,
    opts: &PipelineOptions,
    sampler: &Sampler<'_>,
    m: &IdealPresentation,
    ring_e_hk: &MultiplicityEstimate,
    d: usize,
) -> Result<(Vec<FStatistic>, Vec<CheckOutcome>), EngineError> {
    let presentation = &spec.presentation;
    let p = u64::from(presentation.prime());
    // deeper chain samples are quadratically more expensive; two suffice
    let chain_e_max = 2;

    let chain: Vec<ChainIdeal> = vec![
        ChainIdeal {
            label: "m",
            ideal: m.clone(),
        },
        ChainIdeal {
            label: "m^2",
            ideal: m.power(2)?,
        },
        ChainIdeal {
            label: "m^[p]",
            ideal: frobenius_power(m, p)?,
        },
    ];

    // verify the containments down the chain by Groebner membership
    for pair in chain.windows(2) {
        let outer_plus_defining = presentation
            .defining_ideal()
            .with_order(spec.order)
            .joined(&pair[0].ideal)?;
        let gb = buchberger(&outer_plus_defining, spec.order, &opts.config)?;
        for g in pair[1].ideal.generators() {
            let nf = normal_form(g, &gb)?;
            if !nf.is_zero() {
                return Err(EngineError::Groebner(
                    hk_core::groebner::GroebnerError::Internal(format!(
                        "containment violation: `{g}` of {} is not in {}",
                        pair[1].label, pair[0].label
                    )),
                ));
            }
        }
    }

    let mut stats = Vec::with_capacity(chain.len());
    for link in &chain {
        let lam = sampler.colength(&link.ideal, 1)?;
        let ideal_e_hk = if link.label == "m" {
            ring_e_hk.clone()
        } else {
            let f = hk_function_via(
                presentation,
                &link.ideal,
                link.label,
                chain_e_max,
                d,
                |ideal, q| sampler.colength(ideal, q),
            )?;
            hk_estimate(&f, d)?
        };
        stats.push(f_statistic(link.label, lam, ring_e_hk, &ideal_e_hk));
    }

    let mut checks = Vec::new();
    for w in stats.windows(2) {
        checks.push(check_f_monotonicity(&w[0], &w[1]));
    }
    Ok((stats, checks))
}

/// Runs the pipeline over every `.ring` file in a corpus directory.
/// Per-ring pipelines fan out in parallel; output order is the sorted
/// file-name order, so reports are deterministic.
pub fn corpus_sweep(
    dir: &Path,
    opts: &PipelineOptions,
    cache: Option<&Cache>,
) -> Result<CorpusReport, PipelineError> {
    let mut paths: Vec<_> = fs::read_dir(dir)
        .map_err(|source| PipelineError::Io {
            path: dir.display().to_string(),
            source,
        })?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|ext| ext == "ring"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(PipelineError::EmptyCorpus(dir.display().to_string()));
    }

    let outcomes: Vec<PipelineOutcome> = paths
        .par_iter()
        .map(|path| {
            let origin = path.display().to_string();
            let name_guess = path
                .file_stem()
                .map(|s| s.to_string_lossy().to_string())
                .unwrap_or_else(|| origin.clone());
            let text = match fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => {
                    return PipelineOutcome {
                        report: error_report(&name_guess, 0, Vec::new(), opts, e.to_string()),
                        epsilon: None,
                    }
                }
            };
            match parse_ring_spec(&text, &origin, opts.order) {
                Ok(spec) => run_pipeline(&spec, opts, cache),
                Err(e) => PipelineOutcome {
                    report: error_report(&name_guess, 0, Vec::new(), opts, e.to_string()),
                    epsilon: None,
                },
            }
        })
        .collect();

    let entries: Vec<EpsilonEntry> = outcomes.iter().filter_map(|o| o.epsilon.clone()).collect();
    let cells = epsilon_table(&entries);
    let epsilon_valid = cells.iter().all(|c| c.bound_satisfied);
    Ok(CorpusReport {
        engine_version: ENGINE_VERSION.to_string(),
        ring_count: outcomes.len(),
        rings: outcomes.into_iter().map(|o| o.report).collect(),
        epsilon_table: cells.iter().map(EpsilonJson::from_cell).collect(),
        epsilon_valid,
    })
}

/// Exit-code policy: 3 on any operational error, 1 on any failed check or
/// a violated epsilon floor, 2 when indeterminate checks remain, else 0.
pub fn corpus_exit_code(report: &CorpusReport) -> i32 {
    if report.rings.iter().any(|r| r.error.is_some()) {
        return 3;
    }
    let failed = report
        .rings
        .iter()
        .flat_map(|r| &r.checks)
        .any(|c| c.status == "fail");
    if failed || !report.epsilon_valid {
        return 1;
    }
    let indeterminate = report
        .rings
        .iter()
        .flat_map(|r| &r.checks)
        .any(|c| c.status == "indeterminate");
    if indeterminate {
        return 2;
    }
    0
}

pub fn ring_exit_code(report: &RingReport) -> i32 {
    if report.error.is_some() {
        return 3;
    }
    if report.checks.iter().any(|c| c.status == "fail") {
        return 1;
    }
    if report.checks.iter().any(|c| c.status == "indeterminate") {
        return 2;
    }
    0
}
