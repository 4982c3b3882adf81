use crate::cayley::Generators;
use crate::frontier::LayeredBfs;
use crate::key::{Codec, PackedCodec, WideCodec, PACKED_MAX_CELLS};
use crate::model::{MoveSequence, MultiArray};
use crate::solve::{
    parity_obstruction, BudgetClock, SearchBudget, SearchFailure, Solution, UnreachableProof,
};

/// Exact breadth-first solver.
///
/// Distances are layered outward from the standard array (every move is an
/// involution, so distance to and from the standard array coincide) until
/// the instance is discovered. The move sequence is then read off forwards,
/// taking at each step the first move in canonical order that lowers the
/// distance, which yields the lexicographically smallest optimal sequence.
pub fn bfs_solve(ma: &MultiArray, budget: &SearchBudget) -> Result<Solution, SearchFailure> {
    let gens = Generators::new(ma.dims(), ma.mode())?;
    if ma.cell_count() <= PACKED_MAX_CELLS {
        run(&gens, PackedCodec, ma, budget)
    } else {
        run(&gens, WideCodec, ma, budget)
    }
}

fn run<C: Codec>(
    gens: &Generators,
    codec: C,
    ma: &MultiArray,
    budget: &SearchBudget,
) -> Result<Solution, SearchFailure> {
    let clock = BudgetClock::start(*budget);
    if ma.is_standard() {
        return Ok(Solution {
            moves: MoveSequence::new(),
            optimal: true,
            nodes_expanded: 0,
            elapsed: clock.elapsed(),
        });
    }
    if parity_obstruction(gens, ma) {
        return Err(SearchFailure::Unreachable {
            proof: UnreachableProof::Parity,
            nodes_expanded: 0,
        });
    }

    let mut codes = gens.codes_of(ma);
    let target = codec.pack(&codes);
    let mut bfs = LayeredBfs::new(gens, codec, &gens.standard_codes());
    let length = loop {
        clock.check(bfs.expanded(), bfs.depth() + 1)?;
        if !bfs.step() {
            return Err(SearchFailure::Unreachable {
                proof: UnreachableProof::Exhausted {
                    component_size: bfs.visited(),
                },
                nodes_expanded: bfs.expanded(),
            });
        }
        if let Some(d) = bfs.distance(&target) {
            break d;
        }
    };

    let mut moves = Vec::with_capacity(length as usize);
    for remaining in (1..=length).rev() {
        let step = gens
            .distinct_indices()
            .find(|&i| {
                gens.apply(i, &mut codes);
                let hit = bfs.distance(&codec.pack(&codes)) == Some(remaining - 1);
                if !hit {
                    gens.apply(i, &mut codes);
                }
                hit
            })
            .expect("a distance-lowering neighbour exists");
        moves.push(gens.moves()[step]);
    }
    Ok(Solution {
        moves: MoveSequence(moves),
        optimal: true,
        nodes_expanded: bfs.expanded(),
        elapsed: clock.elapsed(),
    })
}
