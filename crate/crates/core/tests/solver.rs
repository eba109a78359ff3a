mod common;

use optcs::games::{GameInstance, GraphGame, MwcGame, Scg, Wtsg, Wvg};
use optcs::solve::{validate_type_partition, Guarantee, Method, TypeCheck};
use optcs::{brute_force_optcs, sample, solve_optcs, welfare, Coalition, Error, SolverConfig, Strategy};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn auto(game: &GameInstance) -> optcs::SolveResult {
    solve_optcs(game, Strategy::Auto, &SolverConfig::default()).unwrap()
}

#[test]
fn brute_force_visits_bell_many_partitions() {
    for n in 0..=9 {
        let g = GameInstance::Wvg(Wvg::new(1, vec![1; n]).unwrap());
        let r = brute_force_optcs(&g, 12).unwrap();
        assert_eq!(r.stats.partitions, common::count_partitions(n));
        assert_eq!(r.welfare, n as i64);
    }
}

#[test]
fn brute_force_matches_reference_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let g = GameInstance::Graph(sample::graph_game(&mut rng, 7, 0.6, 4));
        let table = common::table_of(&g);
        let (best, optima) = common::all_optima(7, &table);
        let r = brute_force_optcs(&g, 12).unwrap();
        assert_eq!(r.welfare, best);
        let blocks: Vec<u64> = r.structure.blocks().iter().map(|b| b.to_mask().unwrap()).collect();
        assert!(optima.iter().any(|o| {
            let mut o = o.clone();
            o.sort_unstable_by_key(|m| m.trailing_zeros());
            o == blocks
        }));
    }
}

#[test]
fn negative_graph_games_are_brute_forced() {
    let g = GameInstance::Graph(GraphGame::new(3, vec![(0, 1, 2), (1, 2, -5)], false).unwrap());
    let r = auto(&g);
    assert_eq!((r.method, r.welfare), (Method::BruteForce, 2));
    assert_eq!(r.structure.to_lists(), vec![vec![0, 1], vec![2]]);
}

#[test]
fn wtsg_through_dispatcher() {
    let s = |xs: &[usize]| xs.iter().copied().collect();
    let tasks = vec![optcs::games::Task { skills: s(&[0, 1]), weight: 7 }];
    let g = GameInstance::Wtsg(Wtsg::new(2, vec![s(&[0]), s(&[1]), s(&[0])], tasks).unwrap());
    let r = auto(&g);
    assert_eq!((r.method, r.welfare), (Method::TypedDp, 7));
}

#[test]
fn mwc_small_instances_are_exact() {
    let g = GameInstance::Mwc(MwcGame::new(4, vec![[0, 1].into(), [2].into(), [1, 3].into()]).unwrap());
    let r = auto(&g);
    assert_eq!((r.method, r.guarantee), (Method::BruteForce, Guarantee::Optimal));
    assert_eq!(r.welfare, 2);
}

#[test]
fn threshold_games_are_brute_forced() {
    let w = GameInstance::Wvg(Wvg::new(4, vec![3, 3, 1, 1]).unwrap());
    let t = w.make_threshold(1).unwrap();
    assert_eq!(auto(&t).method, Method::BruteForce);
    assert_eq!(auto(&t).welfare, 2);
    let r = solve_optcs(&t, Strategy::Dp, &SolverConfig::default()).unwrap();
    assert_eq!(r.welfare, 2);
}

#[test]
fn env_style_cap_override_is_respected() {
    let g = GameInstance::Mwc(MwcGame::new(14, vec![[0].into()]).unwrap());
    let cfg = SolverConfig { brute_cap: 13, ..SolverConfig::default() };
    assert!(matches!(solve_optcs(&g, Strategy::Auto, &cfg), Err(Error::Unsolvable { .. })));
    assert_eq!(
        solve_optcs(&g, Strategy::Brute, &cfg).unwrap_err(),
        Error::TooManyPlayers { n: 14, cap: 13 }
    );
}

#[test]
fn extracted_types_pass_exhaustive_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=8 {
        for g in [
            GameInstance::Wvg(sample::wvg_with_types(&mut rng, n, 3, 6)),
            GameInstance::Wtsg(sample::wtsg(&mut rng, n, 2, 3)),
        ] {
            let t = g.extract_type_partition().unwrap();
            assert_eq!(validate_type_partition(&g, &t, 16), Ok(TypeCheck::Valid));
        }
    }
}

#[test]
fn validate_types_witness_example() {
    let g = GameInstance::Wvg(Wvg::new(4, vec![3, 3, 1, 1]).unwrap());
    let t = optcs::TypePartition::from_lists(4, vec![vec![0, 2], vec![1, 3]]).unwrap();
    let TypeCheck::Violated { i, j, coalition, .. } = validate_type_partition(&g, &t, 16).unwrap() else {
        panic!("expected a witness")
    };
    assert_ne!(g.evaluate(&coalition.union(&Coalition::singleton(i))), g.evaluate(&coalition.union(&Coalition::singleton(j))));
}

#[test]
fn scg_with_parallel_edges() {
    let g = GameInstance::Scg(Scg::new(2, vec![(0, 1), (0, 1), (1, 0)]).unwrap());
    let r = auto(&g);
    assert_eq!(r.welfare, 3);
    assert_eq!(r.structure.len(), 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn every_strategy_returns_a_verified_partition(seed in any::<u64>(), n in 1usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let wvg = sample::wvg(&mut rng, n, 9);
        let g = GameInstance::Wvg(wvg);
        let brute = brute_force_optcs(&g, 12).unwrap().welfare;
        for strategy in [Strategy::Auto, Strategy::Brute, Strategy::Dp, Strategy::Approx] {
            let r = solve_optcs(&g, strategy, &SolverConfig::default()).unwrap();
            prop_assert_eq!(welfare(&r.structure, &g).unwrap(), r.welfare);
            match r.guarantee {
                Guarantee::Optimal => prop_assert_eq!(r.welfare, brute),
                Guarantee::TwoApprox => prop_assert!(2 * r.welfare >= brute),
            }
        }
    }

    #[test]
    fn graph_game_dispatch_is_optimal(seed in any::<u64>(), n in 1usize..=7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = GameInstance::Graph(sample::graph_game(&mut rng, n, 0.5, 3));
        let best = common::max_partition_welfare(n, &common::table_of(&g));
        prop_assert_eq!(auto(&g).welfare, best);
    }

    #[test]
    fn positive_graph_games_take_grand(seed in any::<u64>(), n in 1usize..=7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges = sample::pairs(&mut rng, n, 0.5).into_iter().map(|(u, v)| (u, v, (u + v) as i64 % 4)).collect();
        let g = GameInstance::Graph(GraphGame::new(n, edges, true).unwrap());
        let table = common::table_of(&g);
        let r = auto(&g);
        prop_assert_eq!(r.method, Method::ExactClass);
        prop_assert_eq!(r.welfare, table[(1 << n) - 1]);
        prop_assert_eq!(r.welfare, common::max_partition_welfare(n, &table));
    }
}
