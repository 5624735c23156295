use hookgrowth::sampling::{count_partitions, PartitionSampler};
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// 10^5 draws from partitions of 50 in a 25 x 25 box, binned by the first
/// part, against the exact bin sizes.
#[test]
fn first_part_frequencies_are_uniform() {
    let (n, side, draws) = (50usize, 25usize, 100_000usize);
    let mut sampler = PartitionSampler::new(n, side, side).unwrap();
    let total = sampler.count().to_f64().unwrap();
    // λ_1 = k leaves n - k in a box of (side - 1) rows and k columns
    let expected: Vec<f64> = (0..=side)
        .map(|k| {
            if k == 0 {
                return 0.0;
            }
            count_partitions(n - k, k, side - 1).to_f64().unwrap() / total
        })
        .collect();
    assert!((expected.iter().sum::<f64>() - 1.0).abs() < 1e-12);

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut observed = vec![0usize; side + 1];
    for _ in 0..draws {
        observed[sampler.sample(&mut rng).first_part()] += 1;
    }
    let mut chi2 = 0.0;
    let mut bins = 0;
    for (k, &p) in expected.iter().enumerate() {
        let mean = p * draws as f64;
        let sigma = (draws as f64 * p * (1.0 - p)).sqrt();
        let obs = observed[k] as f64;
        assert!(
            (obs - mean).abs() <= 4.0 * sigma.max(1e-9),
            "lambda_1 = {k}: observed {obs}, expected {mean:.1} +- {sigma:.1}"
        );
        if mean > 0.0 {
            chi2 += (obs - mean).powi(2) / mean;
            bins += 1;
        }
    }
    // loose upper tail for a chi-square with bins - 1 degrees of freedom
    let dof = (bins - 1) as f64;
    assert!(
        chi2 < dof + 4.0 * (2.0 * dof).sqrt(),
        "chi2 = {chi2} on {dof} dof"
    );
}
