use partition_lab::{
    ell, hooks, lift_from_m0, matrix_to_partition, matrix_to_path, partition_to_matrix,
    project_to_m0, solve_system, tsquared_from_matrix, weight_p, OddPartition, Partition,
};
use proptest::prelude::*;

fn partition_strategy() -> impl Strategy<Value = Partition> {
    partitions_bounded(60, 25)
}

fn partitions_bounded(max_part: u64, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u64..=max_part, 1..=max_len).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

proptest! {
    #[test]
    fn codec_round_trip(p in partition_strategy()) {
        let m = partition_to_matrix(&p).unwrap();
        prop_assert_eq!(&matrix_to_partition(&m), &p);
        prop_assert_eq!(ell(&m), p.weight());
        let json = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<partition_lab::TwoLineMatrix>(&json).unwrap(), m);
    }

    #[test]
    fn hooks_are_distinct_odd_and_bounded(p in partition_strategy()) {
        let m = partition_to_matrix(&p).unwrap();
        let h = hooks(&m).unwrap();
        prop_assert!(OddPartition::new(h.parts().to_vec()).is_ok());
        let n = p.weight();
        prop_assert!(h.parts().iter().all(|&x| x < 2 * n));
        prop_assert!(weight_p(&m).unwrap() < n * n);
        let path = matrix_to_path(&m);
        prop_assert_eq!(path.points.len(), 2 * m.columns());
        prop_assert_eq!(path.start().0 + path.start().1, n);
    }

    #[test]
    fn shifting_d1_keeps_hooks(p in partition_strategy(), delta in 0u64..10_000) {
        let m = partition_to_matrix(&p).unwrap();
        let shifted = m.with_d1(m.d1() + delta).unwrap();
        prop_assert_eq!(hooks(&shifted).unwrap(), hooks(&m).unwrap());
    }

    #[test]
    // The solution set of (a, b) grows quickly with b, so keep b small here.
    fn projection_lifts_back(p in partitions_bounded(9, 6).prop_filter("two parts", |p| p.len() >= 2)) {
        let m0 = project_to_m0(&p).unwrap();
        prop_assert!(ell(&m0) <= p.weight());
        prop_assert_eq!(lift_from_m0(&m0, p.weight()).unwrap(), p);
        let sp = tsquared_from_matrix(&m0).unwrap();
        prop_assert_eq!(sp.m().unwrap(), weight_p(&m0).unwrap());
        let set = solve_system(sp.a(), sp.b()).unwrap();
        prop_assert!(set.solutions.contains(&sp.to_solution()));
    }

    #[test]
    fn solutions_satisfy_both_equations(b in 1u64..14, k in 0u64..200) {
        let a = b + 2 * (k % ((b * b - b) / 2 + 1));
        let set = solve_system(a, b).unwrap();
        for t in &set.solutions {
            prop_assert_eq!(t.iter().sum::<u64>(), b);
            prop_assert_eq!(t.iter().map(|x| x * x).sum::<u64>(), a);
        }
        prop_assert!(set.solutions.windows(2).all(|w| w[0] > w[1]));
    }
}
