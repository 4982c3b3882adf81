use std::collections::HashMap;

use crate::cayley::Generators;
use crate::key::{Codec, PackedCodec, WideCodec, PACKED_MAX_CELLS};
use crate::model::{Move, MoveSequence, MultiArray};
use crate::solve::{
    parity_obstruction, BudgetClock, SearchBudget, SearchFailure, Solution, UnreachableProof,
};

/// Meet-in-the-middle exact solver. Returns some optimal sequence, not
/// necessarily the lexicographically smallest one.
pub fn bidirectional_bfs_solve(
    ma: &MultiArray,
    budget: &SearchBudget,
) -> Result<Solution, SearchFailure> {
    let gens = Generators::new(ma.dims(), ma.mode())?;
    if ma.cell_count() <= PACKED_MAX_CELLS {
        run(&gens, PackedCodec, ma, budget)
    } else {
        run(&gens, WideCodec, ma, budget)
    }
}

/// One side of the search: distance and the generator that led there.
struct Side<K> {
    seen: HashMap<K, (u32, u8)>,
    frontier: Vec<K>,
    depth: u32,
}

impl<K: Clone + Eq + std::hash::Hash> Side<K> {
    fn new(root: K) -> Self {
        let mut seen = HashMap::new();
        seen.insert(root.clone(), (0, u8::MAX));
        Side {
            seen,
            frontier: vec![root],
            depth: 0,
        }
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

    let n = ma.cell_count();
    let mut forward = Side::new(codec.pack(&gens.codes_of(ma)));
    let mut backward = Side::new(codec.pack(&gens.standard_codes()));
    let mut expanded = 0u64;
    let mut buf = vec![0u16; n];

    let meet = loop {
        clock.check(expanded, forward.depth + backward.depth + 1)?;
        let forward_turn = forward.frontier.len() <= backward.frontier.len();
        let (grow, other) = if forward_turn {
            (&mut forward, &backward)
        } else {
            (&mut backward, &forward)
        };
        let depth = grow.depth + 1;
        let mut next = Vec::new();
        // best meeting point in this layer: (total length, key)
        let mut best: Option<(u32, C::Key)> = None;
        for key in std::mem::take(&mut grow.frontier) {
            codec.unpack(&key, &mut buf);
            expanded += 1;
            for i in gens.distinct_indices() {
                gens.apply(i, &mut buf);
                let child = codec.pack(&buf);
                gens.apply(i, &mut buf);
                if grow.seen.contains_key(&child) {
                    continue;
                }
                if let Some(&(d, _)) = other.seen.get(&child) {
                    if best.as_ref().is_none_or(|(b, _)| depth + d < *b) {
                        best = Some((depth + d, child.clone()));
                    }
                }
                grow.seen.insert(child.clone(), (depth, i as u8));
                next.push(child);
            }
        }
        grow.frontier = next;
        grow.depth = depth;
        if let Some((_, key)) = best {
            break key;
        }
        if grow.frontier.is_empty() {
            return Err(SearchFailure::Unreachable {
                proof: UnreachableProof::Exhausted {
                    component_size: grow.seen.len() as u64,
                },
                nodes_expanded: expanded,
            });
        }
    };

    // forward half: walk back from the meeting point to the instance
    let mut moves: Vec<Move> = Vec::new();
    let mut key = meet.clone();
    while let Some(&(d, via)) = forward.seen.get(&key) {
        if d == 0 {
            break;
        }
        moves.push(gens.moves()[via as usize]);
        codec.unpack(&key, &mut buf);
        gens.apply(via as usize, &mut buf);
        key = codec.pack(&buf);
    }
    moves.reverse();
    // backward half: walk from the meeting point to the standard array
    let mut key = meet;
    while let Some(&(d, via)) = backward.seen.get(&key) {
        if d == 0 {
            break;
        }
        moves.push(gens.moves()[via as usize]);
        codec.unpack(&key, &mut buf);
        gens.apply(via as usize, &mut buf);
        key = codec.pack(&buf);
    }

    Ok(Solution {
        moves: MoveSequence(moves),
        optimal: true,
        nodes_expanded: expanded,
        elapsed: clock.elapsed(),
    })
}
