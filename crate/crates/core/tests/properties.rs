mod common;

use proptest::prelude::*;

use prefrev::analysis::{random_instance, DistanceTable, Policy};
use prefrev::io::{parse_instance, parse_moves, write_instance, write_moves};
use prefrev::solve;
use prefrev::{move_parity, Dims, Mode, Move, MoveSequence, MultiArray, SearchBudget};

fn arb_dims(max_cells: usize) -> impl Strategy<Value = Dims> {
    (1usize..=3)
        .prop_flat_map(move |rank| prop::collection::vec(1usize..=4, rank))
        .prop_filter("too many cells", move |d| {
            d.iter().product::<usize>() <= max_cells
        })
        .prop_map(|d| Dims::new(&d).unwrap())
}

fn arb_mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Unsigned), Just(Mode::Signed)]
}

fn arb_array(max_cells: usize) -> impl Strategy<Value = MultiArray> {
    (arb_dims(max_cells), arb_mode(), any::<u64>())
        .prop_map(|(d, mode, seed)| random_instance(d, mode, seed, Policy::Uniform))
}

fn arb_array_and_moves(max_cells: usize) -> impl Strategy<Value = (MultiArray, MoveSequence)> {
    (
        arb_array(max_cells),
        prop::collection::vec(any::<prop::sample::Index>(), 0..12),
    )
        .prop_map(|(a, picks)| {
            let legal = a.legal_moves();
            let seq = picks.iter().map(|ix| *ix.get(&legal)).collect();
            (a, seq)
        })
}

fn sorted_ids(a: &MultiArray) -> Vec<u32> {
    let mut ids: Vec<u32> = a.cells().iter().map(|t| t.id).collect();
    ids.sort_unstable();
    ids
}

proptest! {
    #[test]
    fn every_move_is_an_involution(a in arb_array(24)) {
        for mv in a.legal_moves() {
            prop_assert_eq!(a.apply_move(mv).unwrap().apply_move(mv).unwrap(), a.clone());
        }
    }

    #[test]
    fn reverse_block_is_self_inverse(a in arb_array(64)) {
        prop_assert_eq!(a.reverse_block().reverse_block(), a.clone());
    }

    #[test]
    fn full_depth_move_is_reverse_block(a in arb_array(64)) {
        let d = a.dims();
        for axis in 0..d.rank() {
            prop_assert_eq!(a.apply_move(Move::new(axis, d.extent(axis))).unwrap(), a.reverse_block());
        }
    }

    #[test]
    fn moves_preserve_the_id_multiset((a, seq) in arb_array_and_moves(32)) {
        let b = a.apply_moves(seq.iter()).unwrap();
        prop_assert_eq!(sorted_ids(&b), sorted_ids(&a));
        prop_assert_eq!(b.mode(), a.mode());
    }

    #[test]
    fn unsigned_stays_upright((a, seq) in arb_array_and_moves(32)) {
        prop_assume!(a.mode() == Mode::Unsigned);
        let b = a.apply_moves(seq.iter()).unwrap();
        prop_assert!(b.cells().iter().all(|t| t.orientation.is_up()));
    }

    #[test]
    fn parity_is_a_homomorphism((a, seq) in arb_array_and_moves(16)) {
        let mut expected = a.id_parity();
        for &mv in seq.iter() {
            expected = expected.compose(move_parity(a.dims(), mv).unwrap());
        }
        prop_assert_eq!(a.apply_moves(seq.iter()).unwrap().id_parity(), expected);
    }

    #[test]
    fn move_parity_matches_cycle_count(d in arb_dims(16)) {
        for mv in d.legal_moves() {
            let perm = common::move_permutation(d, mv);
            prop_assert_eq!(move_parity(d, mv).unwrap(), common::inversion_parity(&perm));
        }
    }

    #[test]
    fn line_is_a_row_of_the_grid((a, seq) in arb_array_and_moves(12)) {
        // Embed a rank-1 line as a 1 x n grid: H_k maps to V_k.
        prop_assume!(a.dims().rank() == 1);
        let n = a.cell_count();
        let grid = a.reshape(Dims::new(&[1, n]).unwrap()).unwrap();
        let lifted: MoveSequence = seq.iter().map(|m| Move::v(m.depth)).collect();
        let left = a.apply_moves(seq.iter()).unwrap().reshape(grid.dims()).unwrap();
        prop_assert_eq!(grid.apply_moves(lifted.iter()).unwrap(), left);
    }

    #[test]
    fn state_key_round_trips(a in arb_array(64)) {
        let key = a.canonical_key();
        prop_assert_eq!(key.decode(a.dims(), a.mode()).unwrap(), a.clone());
    }

    #[test]
    fn state_keys_are_injective(d in arb_dims(20), mode in arb_mode(), s in any::<u64>(), t in any::<u64>()) {
        let a = random_instance(d, mode, s, Policy::Uniform);
        let b = random_instance(d, mode, t, Policy::Uniform);
        prop_assert_eq!(a.canonical_key() == b.canonical_key(), a == b);
        // neighbours differ in few cells, which is where a lossy packing would collide
        for mv in a.legal_moves() {
            let c = a.apply_move(mv).unwrap();
            prop_assert_eq!(a.canonical_key() == c.canonical_key(), a == c);
        }
    }

    #[test]
    fn instance_text_round_trips(a in arb_array(64)) {
        prop_assert_eq!(parse_instance(&write_instance(&a)).unwrap(), a.clone());
    }

    #[test]
    fn move_text_round_trips((_, seq) in arb_array_and_moves(64)) {
        prop_assert_eq!(parse_moves(&write_moves(&seq)).unwrap(), seq.clone());
    }

    #[test]
    fn verify_accepts_the_reversed_walk((a, seq) in arb_array_and_moves(64)) {
        // Walking from the standard array and replaying backwards solves it.
        let e = MultiArray::standard(a.dims(), a.mode());
        let scrambled = e.apply_moves(seq.iter()).unwrap();
        let back: MoveSequence = seq.iter().rev().copied().collect();
        let v = solve::verify(&scrambled, &back);
        prop_assert!(v.valid && v.solved);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_solvers_agree_and_verify(
        d in arb_dims(7),
        mode in arb_mode(),
        seed in any::<u64>(),
        k in 0u32..15,
    ) {
        let a = random_instance(d, mode, seed, Policy::Walk(k));
        let budget = SearchBudget::unlimited();
        let x = solve::bfs_solve(&a, &budget).unwrap();
        let y = solve::bidirectional_bfs_solve(&a, &budget).unwrap();
        let z = solve::ida_solve(&a, &budget).unwrap();
        prop_assert!(x.length() <= k as usize);
        prop_assert_eq!(x.length(), y.length());
        prop_assert_eq!(x.length(), z.length());
        for s in [&x, &y, &z] {
            prop_assert!(solve::verify(&a, &s.moves).solved);
        }
    }
}

#[test]
fn bfs_layers_differ_by_at_most_one_across_an_edge() {
    for (d, mode) in [
        (&[2, 3][..], Mode::Signed),
        (&[3, 3], Mode::Unsigned),
        (&[2, 2, 2], Mode::Signed),
    ] {
        let table =
            DistanceTable::build(Dims::new(d).unwrap(), mode, &SearchBudget::unlimited()).unwrap();
        for (a, da) in table.iter() {
            for mv in a.legal_moves() {
                let db = table
                    .distance(&a.apply_move(mv).unwrap())
                    .expect("orbit closed under moves");
                assert!(da.abs_diff(db) <= 1, "{d:?}: {da} -> {db} via {mv}");
            }
        }
    }
}

#[test]
fn orbit_symmetry_under_reverse_block() {
    // Full reversals are moves, so the orbit is closed under reverse_block.
    for d in [&[2, 3][..], &[3, 2], &[2, 2, 2]] {
        let table = DistanceTable::build(
            Dims::new(d).unwrap(),
            Mode::Signed,
            &SearchBudget::unlimited(),
        )
        .unwrap();
        for (a, _) in table.iter() {
            assert!(table.distance(&a.reverse_block()).is_some());
        }
    }
}

#[test]
fn results_do_not_depend_on_thread_count() {
    use prefrev::analysis::orbit_stats;

    let grid = MultiArray::from_signed(&[2, 3], Mode::Signed, &[-3, -6, -5, -2, 4, 1]).unwrap();
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| {
                let budget = SearchBudget::unlimited();
                let sol = solve::bfs_solve(&grid, &budget).unwrap();
                let bi = solve::bidirectional_bfs_solve(&grid, &budget).unwrap();
                let orbit =
                    orbit_stats(Dims::new(&[3, 3]).unwrap(), Mode::Unsigned, &budget).unwrap();
                let hashed =
                    orbit_stats(Dims::new(&[2, 3]).unwrap(), Mode::Signed, &budget).unwrap();
                (
                    sol.moves,
                    sol.nodes_expanded,
                    bi.moves,
                    orbit.histogram,
                    hashed.histogram,
                )
            })
    };
    let one = run(1);
    assert_eq!(one, run(2));
    assert_eq!(one, run(5));
}
