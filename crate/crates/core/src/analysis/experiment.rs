//! Desk-scale experiments checking the rank-2 rearrangeability theorem.

use std::fmt;

use crate::analysis::orbit::orbit_stats;
use crate::analysis::random::{random_walk, seeded_rng};
use crate::analysis::reachability::{decide_dims, Verdict};
use crate::error::AnalysisError;
use crate::model::{move_parity, permutation_parity, Dims, Mode, Move, MultiArray, Parity};
use crate::solve::SearchBudget;

/// Shapes always included in the theorem experiment: one extent divisible
/// by 4 and the other exempting it.
pub const FORCED_SHAPES: [(usize, usize); 2] = [(2, 4), (1, 8)];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The orbit could not be enumerated within the budget.
    Incomplete,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Incomplete => "INCOMPLETE",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremRow {
    pub rows: usize,
    pub cols: usize,
    pub predicted: Verdict,
    /// `(n m)!` for always-reachable shapes, `(n m)! / 2` otherwise (an
    /// upper bound only).
    pub expected: u64,
    pub orbit_size: u64,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub max_cells: usize,
    pub rows: Vec<TheoremRow>,
}

impl TheoremReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.status == Status::Pass)
    }
}

fn factorial(n: usize) -> Option<u64> {
    (2..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// Every `n x m` shape with `n m <= max_cells`, plus [`FORCED_SHAPES`],
/// ordered by cell count then rows.
pub fn theorem_shapes(max_cells: usize) -> Vec<(usize, usize)> {
    let mut shapes: Vec<(usize, usize)> = (1..=max_cells)
        .flat_map(|n| (1..=max_cells / n).map(move |m| (n, m)))
        .collect();
    for forced in FORCED_SHAPES {
        if !shapes.contains(&forced) {
            shapes.push(forced);
        }
    }
    shapes.sort_by_key(|&(n, m)| (n * m, n));
    shapes
}

/// Compares the unsigned orbit size of every shape with the theorem's
/// prediction.
pub fn theorem_experiment(
    max_cells: usize,
    budget: &SearchBudget,
) -> Result<TheoremReport, AnalysisError> {
    let mut rows = Vec::new();
    for (n, m) in theorem_shapes(max_cells) {
        let dims = Dims::new(&[n, m])?;
        let predicted = decide_dims(dims).verdict;
        let full = factorial(n * m).ok_or_else(|| {
            AnalysisError::Precondition(format!("{n}x{m}: ({})! overflows u64", n * m))
        })?;
        let report = orbit_stats(dims, Mode::Unsigned, budget)?;
        let (expected, status) = match predicted {
            Verdict::AlwaysReachable => {
                let ok = report.orbit_size == full;
                (full, ok)
            }
            // only the necessity direction is checked
            _ => (full / 2, report.orbit_size <= full / 2),
        };
        let status = match (report.complete, status) {
            (false, _) => Status::Incomplete,
            (true, true) => Status::Pass,
            (true, false) => Status::Fail,
        };
        rows.push(TheoremRow {
            rows: n,
            cols: m,
            predicted,
            expected,
            orbit_size: report.orbit_size,
            status,
        });
    }
    Ok(TheoremReport { max_cells, rows })
}

/// Parity of every generator, by closed form and by cycle decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorParity {
    pub mv: Move,
    pub closed_form: Parity,
    pub cycles: Parity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityWalkReport {
    pub dims: Dims,
    pub steps: u64,
    pub seed: u64,
    pub generators: Vec<GeneratorParity>,
    /// First step whose state is odd, with that state.
    pub violation: Option<(u64, MultiArray)>,
}

impl ParityWalkReport {
    pub fn pass(&self) -> bool {
        self.violation.is_none()
            && self
                .generators
                .iter()
                .all(|g| g.closed_form == Parity::Even && g.cycles == Parity::Even)
    }
}

/// Checks that every generator of an `n x m` array with `4 | n` and `4 | m`
/// is even, and that a seeded random walk never leaves the even arrangements.
pub fn parity_walk_check(
    dims: Dims,
    steps: u64,
    seed: u64,
) -> Result<ParityWalkReport, AnalysisError> {
    if dims.rank() != 2 || !dims.extent(0).is_multiple_of(4) || !dims.extent(1).is_multiple_of(4) {
        return Err(AnalysisError::Precondition(format!(
            "parity walk needs rank-2 dims with both extents divisible by 4, got {dims}"
        )));
    }
    let standard = MultiArray::standard(dims, Mode::Unsigned);
    let generators = dims
        .legal_moves()
        .into_iter()
        .map(|mv| {
            let image = standard.apply_move(mv).expect("legal move");
            let perm: Vec<usize> = image.cells().iter().map(|t| t.id as usize - 1).collect();
            Ok(GeneratorParity {
                mv,
                closed_form: move_parity(dims, mv)?,
                cycles: permutation_parity(&perm),
            })
        })
        .collect::<Result<Vec<_>, AnalysisError>>()?;

    let mut rng = seeded_rng(seed);
    let mut state = standard;
    let mut violation = None;
    for step in 1..=steps {
        state = random_walk(state, 1, &mut rng);
        if state.id_parity() != Parity::Even {
            violation = Some((step, state));
            break;
        }
    }
    Ok(ParityWalkReport {
        dims,
        steps,
        seed,
        generators,
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_include_forced() {
        let s = theorem_shapes(4);
        assert_eq!(s[0], (1, 1));
        assert!(s.contains(&(2, 2)));
        assert!(s.contains(&(2, 4)));
        assert!(s.contains(&(1, 8)));
        assert!(!s.contains(&(3, 2)));
        assert_eq!(
            theorem_shapes(9)
                .iter()
                .filter(|&&(n, m)| n * m == 8)
                .count(),
            4
        );
    }

    #[test]
    fn small_theorem_run() {
        let r = theorem_experiment(6, &SearchBudget::unlimited()).unwrap();
        assert!(r.all_pass(), "{r:?}");
        let row = r
            .rows
            .iter()
            .find(|row| (row.rows, row.cols) == (2, 3))
            .unwrap();
        assert_eq!(row.orbit_size, 720);
        let row = r
            .rows
            .iter()
            .find(|row| (row.rows, row.cols) == (1, 2))
            .unwrap();
        assert_eq!(row.orbit_size, 2);
    }

    #[test]
    fn walk_precondition() {
        let err = parity_walk_check(Dims::new(&[4, 6]).unwrap(), 10, 1).unwrap_err();
        assert!(matches!(err, AnalysisError::Precondition(_)));
        assert!(parity_walk_check(Dims::new(&[16]).unwrap(), 10, 1).is_err());
    }

    #[test]
    fn walk_4x8() {
        let r = parity_walk_check(Dims::new(&[4, 8]).unwrap(), 500, 9).unwrap();
        assert_eq!(r.generators.len(), 12);
        assert!(r.pass());
    }
}
