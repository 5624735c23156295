use hookgrowth::degree::{
    count_syt_bruteforce, robbins_bounds, sum_squares_identity, verify_hook_dominance,
};
use hookgrowth::partition::{contains, enumerate_partitions};
use hookgrowth::{degree, log_degree, Partition};
use num_bigint::BigUint;
use num_traits::ToPrimitive;

fn all_of(n: usize) -> Vec<Partition> {
    enumerate_partitions(n, None, None).collect()
}

#[test]
fn hook_formula_counts_tableaux() {
    for n in 0..=8 {
        for lam in all_of(n) {
            assert_eq!(degree(&lam), count_syt_bruteforce(&lam).unwrap(), "{lam}");
        }
    }
}

#[test]
fn squares_of_degrees_sum_to_factorial() {
    for n in 1..=11 {
        assert!(sum_squares_identity(n).unwrap(), "n = {n}");
    }
}

#[test]
fn conjugate_has_the_same_degree() {
    for n in 0..=12 {
        for lam in all_of(n) {
            assert_eq!(degree(&lam), degree(&lam.conjugate()), "{lam}");
        }
    }
}

#[test]
fn reversed_entries_dominate_hooks() {
    for n in 1..=7 {
        for lam in all_of(n) {
            assert!(verify_hook_dominance(&lam).unwrap(), "{lam}");
        }
    }
}

#[test]
fn degree_grows_with_containment() {
    let shapes: Vec<Partition> = (0..=10).flat_map(all_of).collect();
    let degrees: Vec<BigUint> = shapes.iter().map(degree).collect();
    for (mu, f_mu) in shapes.iter().zip(&degrees) {
        for (lam, f_lam) in shapes.iter().zip(&degrees) {
            if contains(mu, lam) {
                assert!(f_mu <= f_lam, "{mu} in {lam}");
            }
        }
    }
}

#[test]
fn log_degree_is_accurate() {
    for n in 1..=12 {
        for lam in all_of(n) {
            // every degree here is below 2^53, so the float is exact
            let exact = degree(&lam).to_f64().unwrap().ln();
            let ours = log_degree(&lam);
            assert!((ours - exact).abs() <= 1e-12 * exact.max(1.0), "{lam}");
        }
    }
    // a large square, against a sum of logs of hooks
    let big = Partition::rectangle(30, 30);
    let by_hooks: f64 = (1..=900u32).map(|k| f64::from(k).ln()).sum::<f64>()
        - big
            .hook_lengths()
            .iter()
            .flatten()
            .map(|&h| (h as f64).ln())
            .sum::<f64>();
    assert!((log_degree(&big) - by_hooks).abs() < 1e-9 * by_hooks);
}

#[test]
fn robbins_brackets_factorials() {
    let mut fact = BigUint::from(1u8);
    for n in 1..=170u64 {
        fact *= n;
        let ln = hookgrowth::bigmath::ln_biguint(&fact);
        let b = robbins_bounds(n);
        assert!(b.brackets(ln), "n = {n}");
        assert!(b.ln_weak <= ln);
    }
}
