//! Library results against naive, kernel-free oracles and against
//! well-known pancake and burnt-pancake network diameters.

mod common;

use prefrev::analysis::{orbit_stats, random_instance, DistanceTable, Policy};
use prefrev::solve::{self, breakpoint_bound};
use prefrev::{move_parity, permutation_parity, Dims, Mode, MultiArray, SearchBudget};

fn dims(d: &[usize]) -> Dims {
    Dims::new(d).unwrap()
}

fn unlimited() -> SearchBudget {
    SearchBudget::unlimited()
}

#[test]
fn golden_grid_2x3_optimal_length() {
    let a = MultiArray::from_signed(&[2, 3], Mode::Signed, &[-3, -6, -5, -2, 4, 1]).unwrap();
    let sol = solve::bfs_solve(&a, &unlimited()).unwrap();
    assert_eq!(sol.length(), 6);
    assert_eq!(sol.moves.to_string(), "H1 V2 H2 H1 H2 V1");
    let table = common::naive_distances(dims(&[2, 3]), Mode::Signed);
    assert_eq!(table[&a.signed_values()], 6);
}

#[test]
fn golden_cube_orbits() {
    for (mode, size, ecc) in [(Mode::Unsigned, 192u64, 6u32), (Mode::Signed, 384, 10)] {
        let naive = common::naive_distances(dims(&[2, 2, 2]), mode);
        let report = orbit_stats(dims(&[2, 2, 2]), mode, &unlimited()).unwrap();
        assert_eq!(naive.len() as u64, size);
        assert_eq!(report.orbit_size, size);
        assert_eq!(*naive.values().max().unwrap(), ecc);
        assert_eq!(report.eccentricity, ecc);
        for &(d, count) in &report.histogram {
            assert_eq!(
                naive.values().filter(|&&x| x == d).count() as u64,
                count,
                "{mode} layer {d}"
            );
        }
    }
}

#[test]
fn unsigned_three_line_distance() {
    let a = MultiArray::from_signed(&[3], Mode::Unsigned, &[1, 3, 2]).unwrap();
    let sol = solve::bfs_solve(&a, &unlimited()).unwrap();
    assert_eq!(sol.length(), 3);
    assert_eq!(sol.moves.to_string(), "H2 H3 H2");
}

#[test]
fn orbit_matches_naive_bfs_on_small_shapes() {
    let shapes: &[&[usize]] = &[
        &[4],
        &[2, 2],
        &[2, 3],
        &[3, 2],
        &[1, 2, 3],
        &[2, 1, 2],
        &[1, 1, 5],
    ];
    for d in shapes {
        for mode in [Mode::Unsigned, Mode::Signed] {
            let naive = common::naive_distances(dims(d), mode);
            let report = orbit_stats(dims(d), mode, &unlimited()).unwrap();
            assert_eq!(report.orbit_size, naive.len() as u64, "{d:?} {mode}");
            assert_eq!(
                report.eccentricity,
                *naive.values().max().unwrap(),
                "{d:?} {mode}"
            );
        }
    }
}

#[test]
fn distance_table_matches_naive_bfs() {
    for d in [&[2, 3][..], &[5], &[2, 2, 2]] {
        for mode in [Mode::Unsigned, Mode::Signed] {
            let naive = common::naive_distances(dims(d), mode);
            let table = DistanceTable::build(dims(d), mode, &unlimited()).unwrap();
            assert_eq!(table.len(), naive.len());
            for (a, dist) in table.iter() {
                assert_eq!(naive.get(&a.signed_values()), Some(&dist));
            }
        }
    }
}

#[test]
fn pancake_network_diameters() {
    // Known flip diameters of the n-pancake graph.
    for (n, diameter) in [
        (1, 0),
        (2, 1),
        (3, 3),
        (4, 4),
        (5, 5),
        (6, 7),
        (7, 8),
        (8, 9),
        (9, 10),
    ] {
        let r = orbit_stats(dims(&[n]), Mode::Unsigned, &unlimited()).unwrap();
        assert!(r.complete);
        assert_eq!(r.eccentricity, diameter, "n = {n}");
    }
}

#[test]
fn burnt_pancake_network_diameters() {
    for (n, diameter) in [(1, 1), (2, 4), (3, 6), (4, 8), (5, 10), (6, 12)] {
        let r = orbit_stats(dims(&[n]), Mode::Signed, &unlimited()).unwrap();
        assert_eq!(r.eccentricity, diameter, "n = {n}");
    }
}

#[test]
fn signed_line_orbit_is_full_space() {
    for n in 1..=6 {
        let r = orbit_stats(dims(&[n]), Mode::Signed, &unlimited()).unwrap();
        assert_eq!(
            Some(r.orbit_size),
            prefrev::state_space_size(n, Mode::Signed)
        );
    }
}

#[test]
fn parity_oracles_agree() {
    for p in common::permutations(7) {
        assert_eq!(permutation_parity(&p), common::inversion_parity(&p));
    }
    for rank in 1..=3 {
        for cells in 1..=16 {
            for d in common::shapes_with_cells(rank, cells) {
                let dd = dims(&d);
                for mv in dd.legal_moves() {
                    let perm = common::move_permutation(dd, mv);
                    assert_eq!(
                        move_parity(dd, mv).unwrap(),
                        common::inversion_parity(&perm),
                        "{d:?} {mv}"
                    );
                }
            }
        }
    }
}

#[test]
fn parity_homomorphism_exhaustive_small() {
    for cells in 1..=6 {
        for rank in 1..=3 {
            for d in common::shapes_with_cells(rank, cells) {
                let dd = dims(&d);
                for a in common::all_arrays(&d, Mode::Unsigned) {
                    for mv in dd.legal_moves() {
                        let b = a.apply_move(mv).unwrap();
                        assert_eq!(
                            b.id_parity(),
                            a.id_parity().compose(move_parity(dd, mv).unwrap())
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn breakpoint_bound_on_small_lines_against_naive() {
    for n in 1..=5 {
        for mode in [Mode::Unsigned, Mode::Signed] {
            let naive = common::naive_distances(dims(&[n]), mode);
            for a in common::all_arrays(&[n], mode) {
                let d = naive[&a.signed_values()];
                let h = breakpoint_bound(&a).unwrap();
                assert!(h <= d, "{mode} {:?}: {h} > {d}", a.signed_values());
                assert_eq!(h == 0, d == 0);
            }
        }
    }
}

#[test]
fn solvers_match_naive_distances() {
    for (d, mode) in [
        (&[2, 3][..], Mode::Unsigned),
        (&[2, 3], Mode::Signed),
        (&[6], Mode::Signed),
        (&[2, 2, 2], Mode::Signed),
    ] {
        let naive = common::naive_distances(dims(d), mode);
        for seed in 0..25 {
            let a = random_instance(dims(d), mode, seed, Policy::Walk(20));
            let want = naive[&a.signed_values()] as usize;
            for (name, sol) in [
                ("bfs", solve::bfs_solve(&a, &unlimited())),
                ("bibfs", solve::bidirectional_bfs_solve(&a, &unlimited())),
                ("ida", solve::ida_solve(&a, &unlimited())),
            ] {
                let sol = sol.unwrap();
                assert_eq!(sol.length(), want, "{name} {d:?} {mode} seed {seed}");
                assert!(solve::verify(&a, &sol.moves).solved);
            }
        }
    }
}
