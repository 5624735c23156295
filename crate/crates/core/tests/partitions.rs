use std::collections::BTreeSet;

use hookgrowth::partition::{contains, enumerate_partitions};
use hookgrowth::{Cell, Partition};
use proptest::prelude::*;

fn all_up_to(max_n: usize) -> impl Iterator<Item = Partition> {
    (0..=max_n).flat_map(|n| enumerate_partitions(n, None, None))
}

fn partition_counts(max_n: usize) -> Vec<u64> {
    let mut p = vec![0u64; max_n + 1];
    p[0] = 1;
    for part in 1..=max_n {
        for total in part..=max_n {
            p[total] += p[total - part];
        }
    }
    p
}

#[test]
fn enumeration_matches_partition_numbers() {
    let p = partition_counts(40);
    for (n, &count) in p.iter().enumerate() {
        assert_eq!(
            enumerate_partitions(n, None, None).count() as u64,
            count,
            "n = {n}"
        );
    }
}

#[test]
fn enumeration_is_reverse_lexicographic_and_distinct() {
    for n in 0..=15 {
        let all: Vec<Partition> = enumerate_partitions(n, None, None).collect();
        for w in all.windows(2) {
            assert!(w[0].parts() > w[1].parts(), "{} before {}", w[0], w[1]);
        }
    }
    let listed: Vec<String> = enumerate_partitions(4, None, Some(2))
        .map(|p| p.to_string())
        .collect();
    assert_eq!(listed, ["4", "3,1", "2,2"]);
}

#[test]
fn conjugation_is_an_involution() {
    for lam in all_up_to(15) {
        assert_eq!(lam.conjugate().conjugate(), lam);
    }
}

#[test]
fn hooks_transpose_with_the_diagram() {
    for lam in all_up_to(15) {
        let conj = lam.conjugate();
        let mut ours = Vec::new();
        for cell in lam.cells() {
            let h = lam.hook_length(cell).unwrap();
            assert_eq!(h, conj.hook_length(cell.transpose()).unwrap());
            ours.push(h);
        }
        let mut theirs: Vec<usize> = conj.cells().map(|c| conj.hook_length(c).unwrap()).collect();
        ours.sort_unstable();
        theirs.sort_unstable();
        assert_eq!(ours, theirs, "{lam}");
    }
}

#[test]
fn peeling_corners_leaves_one_corner_per_distinct_part() {
    for lam in all_up_to(15) {
        let corners = lam.corner_cells();
        for c in &corners {
            assert_eq!(lam.hook_length(*c).unwrap(), 1);
        }
        let peeled = lam.remove_cells(&corners).unwrap();
        assert_eq!(peeled.size() + corners.len(), lam.size());
        let distinct: BTreeSet<usize> = peeled.parts().iter().copied().collect();
        assert_eq!(
            peeled.corner_cells().len(),
            distinct.len(),
            "{lam} -> {peeled}"
        );
    }
}

#[test]
fn worked_example_shape() {
    let lam: Partition = "9,6,4,2,2,1".parse().unwrap();
    assert_eq!(lam.conjugate().parts(), &[6, 5, 3, 3, 2, 2, 1, 1, 1]);
    assert_eq!(lam.hook_length(Cell::new(1, 1)).unwrap(), 14);
    assert_eq!(lam.diagonal(), 3);
    assert!(lam.in_hook_class(4, 3));
    assert!(!lam.in_hook_class(1, 1));
    let corners: Vec<(usize, usize)> = lam.corner_cells().iter().map(|c| (c.row, c.col)).collect();
    assert_eq!(corners, [(1, 9), (2, 6), (3, 4), (5, 2), (6, 1)]);
    assert_eq!(
        lam.remove_cells(&lam.corner_cells()).unwrap().parts(),
        &[8, 5, 3, 2, 1]
    );
    assert!(contains(&"3,3".parse().unwrap(), &lam));
    assert!(!contains(&"4,4".parse().unwrap(), &"9,3".parse().unwrap()));
}

#[test]
fn non_corner_removal_is_rejected() {
    let lam: Partition = "3,3".parse().unwrap();
    assert!(lam.remove_cells(&[Cell::new(1, 3)]).is_err());
    assert!(lam.hook_length(Cell::new(3, 1)).is_err());
    assert_eq!(
        lam.remove_cells(&[Cell::new(2, 3)]).unwrap().parts(),
        &[3, 2]
    );
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..30, 0..30).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn text_round_trip(lam in arb_partition()) {
        let back: Partition = lam.to_string().parse().unwrap();
        prop_assert_eq!(back, lam);
    }

    #[test]
    fn conjugate_preserves_size_and_diagonal(lam in arb_partition()) {
        let conj = lam.conjugate();
        prop_assert_eq!(conj.size(), lam.size());
        prop_assert_eq!(conj.diagonal(), lam.diagonal());
        prop_assert_eq!(conj.conjugate(), lam.clone());
        prop_assert_eq!(conj.first_part(), lam.len());
    }

    #[test]
    fn hook_class_matches_definition(lam in arb_partition(), k in 0usize..10, l in 0usize..10) {
        prop_assert_eq!(lam.in_hook_class(k, l), lam.part(k + 1) <= l);
        prop_assert_eq!(lam.in_hook_class(k, l), lam.conjugate().in_hook_class(l, k));
    }

    #[test]
    fn containment_is_cellwise(a in arb_partition(), b in arb_partition()) {
        let cellwise = a.cells().all(|c| b.contains_cell(c));
        prop_assert_eq!(contains(&a, &b), cellwise);
    }
}
