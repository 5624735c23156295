//! Family sweeps: certify the theorem bound for every shape of a family
//! over a range of `n`.

use clap::{Args, ValueEnum};
use hookgrowth::certify::Certifier;
use hookgrowth::families::{balanced, row_cap, staircase};
use hookgrowth::partition::enumerate_partitions;
use hookgrowth::sampling::PartitionSampler;
use hookgrowth::{log_degree, Partition, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::report::{FamilySpec, GrowthReport, GrowthRow};
use crate::{usage, CliError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `⌈√n⌉` parts differing by at most one
    Balanced,
    /// the strict staircase with the largest Durfee square
    Staircase,
    /// every `λ ⊢ n` with `λ_1, λ'_1 <= n/α`
    Enumerate,
    /// uniform draws from the same constrained set
    Sample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepFormat {
    Csv,
    Json,
}

#[derive(Clone, Debug, Args)]
pub struct SweepArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long)]
    pub alpha: Rational,
    #[arg(long)]
    pub beta: Rational,
    #[arg(long)]
    pub n_from: usize,
    #[arg(long)]
    pub n_to: usize,
    /// Draws per `n` for the sample family.
    #[arg(long, default_value_t = 1)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: SweepFormat,
    /// Largest `n` the enumerate family accepts.
    #[arg(long, default_value_t = 40)]
    pub max_enumerate_n: usize,
}

/// The shapes of `family` at size `n`, in a fixed order.
///
/// Samples for `n` come from the ChaCha8 stream `n` under `seed`, so each
/// size is reproducible on its own.
pub fn family_members(
    family: Family,
    n: usize,
    alpha: &Rational,
    samples: usize,
    seed: u64,
) -> Vec<Partition> {
    let cap = row_cap(n, alpha);
    match family {
        Family::Balanced => vec![balanced(n)],
        Family::Staircase => vec![staircase(n)],
        Family::Enumerate => enumerate_partitions(n, Some(cap), Some(cap)).collect(),
        Family::Sample => {
            let Ok(mut sampler) = PartitionSampler::new(n, cap, cap) else {
                return Vec::new();
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(n as u64);
            (0..samples).map(|_| sampler.sample(&mut rng)).collect()
        }
    }
}

pub fn run_sweep(args: &SweepArgs, certifier: &Certifier) -> Result<GrowthReport, CliError> {
    if args.n_from > args.n_to {
        return Err(usage(format!(
            "empty range: --n-from {} exceeds --n-to {}",
            args.n_from, args.n_to
        )));
    }
    if args.family == Family::Enumerate && args.n_to > args.max_enumerate_n {
        return Err(usage(format!(
            "enumerate is capped at n = {}; use the sample family for n = {}",
            args.max_enumerate_n, args.n_to
        )));
    }
    if args.family == Family::Sample && args.samples == 0 {
        return Err(usage("--samples must be at least 1"));
    }
    let one = Rational::one();
    if args.alpha <= one || args.beta <= one || args.beta >= args.alpha {
        return Err(hookgrowth::Error::Hypothesis(format!(
            "need 1 < beta < alpha, got alpha = {}, beta = {}",
            args.alpha, args.beta
        ))
        .into());
    }

    let per_n: Vec<(usize, Vec<Partition>)> = (args.n_from..=args.n_to)
        .into_par_iter()
        .map(|n| {
            let members = family_members(args.family, n, &args.alpha, args.samples, args.seed);
            (n, members)
        })
        .collect();
    let empty_n = per_n
        .iter()
        .filter(|(_, m)| m.is_empty())
        .map(|&(n, _)| n)
        .collect();
    let shapes: Vec<Partition> = per_n.into_iter().flat_map(|(_, m)| m).collect();

    let rows = shapes
        .par_iter()
        .map(
            |lam| match certifier.theorem_classify(lam, &args.alpha, &args.beta) {
                Ok(cert) => Ok(GrowthRow::from_certificate(&cert)),
                Err(e) if e.is_hypothesis() => {
                    Ok(GrowthRow::hypothesis(lam, log_degree(lam), e.to_string()))
                }
                Err(e) => Err(CliError::from(e)),
            },
        )
        .collect::<Result<Vec<_>, _>>()?;

    let sampled = args.family == Family::Sample;
    let spec = FamilySpec {
        family: args.family,
        alpha: args.alpha.clone(),
        beta: args.beta.clone(),
        n_from: args.n_from,
        n_to: args.n_to,
        samples: sampled.then_some(args.samples),
        seed: sampled.then_some(args.seed),
    };
    Ok(GrowthReport::new(spec, rows, empty_n))
}
