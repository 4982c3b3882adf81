use crate::cayley::{is_standard_codes, Generators};
use crate::model::{Mode, MoveSequence, MultiArray};
use crate::solve::heuristic::breakpoints_codes;
use crate::solve::{
    parity_obstruction, BudgetClock, SearchBudget, SearchFailure, Solution, UnreachableProof,
};

/// Iterative-deepening A*.
///
/// Rank-1 lines use the breakpoint bound; higher ranks fall back to the 0/1
/// bound, which makes this plain iterative deepening. Without a parity
/// obstruction IDA* cannot prove unreachability, so such instances run
/// until the budget is exhausted.
pub fn ida_solve(ma: &MultiArray, budget: &SearchBudget) -> Result<Solution, SearchFailure> {
    let gens = Generators::new(ma.dims(), ma.mode())?;
    let clock = BudgetClock::start(*budget);
    if parity_obstruction(&gens, ma) {
        return Err(SearchFailure::Unreachable {
            proof: UnreachableProof::Parity,
            nodes_expanded: 0,
        });
    }
    let heuristic: fn(&[u16], Mode) -> u32 = if ma.dims().rank() == 1 {
        breakpoints_codes
    } else {
        |codes, _| u32::from(!is_standard_codes(codes))
    };

    let mut search = Dfs {
        gens: &gens,
        mode: ma.mode(),
        heuristic,
        clock: &clock,
        codes: gens.codes_of(ma),
        path: Vec::new(),
        nodes: 0,
    };
    let mut bound = heuristic(&search.codes, ma.mode());
    loop {
        clock.check(search.nodes, bound)?;
        match search.probe(0, bound, usize::MAX)? {
            Probe::Found => break,
            Probe::Exceeded(next) => bound = next,
        }
    }
    Ok(Solution {
        moves: search
            .path
            .iter()
            .map(|&i| gens.moves()[i])
            .collect::<MoveSequence>(),
        optimal: true,
        nodes_expanded: search.nodes,
        elapsed: clock.elapsed(),
    })
}

enum Probe {
    Found,
    /// Smallest f-value beyond the bound.
    Exceeded(u32),
}

struct Dfs<'a> {
    gens: &'a Generators,
    mode: Mode,
    heuristic: fn(&[u16], Mode) -> u32,
    clock: &'a BudgetClock,
    codes: Vec<u16>,
    path: Vec<usize>,
    nodes: u64,
}

impl Dfs<'_> {
    fn probe(&mut self, g: u32, bound: u32, last: usize) -> Result<Probe, SearchFailure> {
        let f = g + (self.heuristic)(&self.codes, self.mode);
        if f > bound {
            return Ok(Probe::Exceeded(f));
        }
        if is_standard_codes(&self.codes) {
            return Ok(Probe::Found);
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(65_536) {
            self.clock.check(self.nodes, bound)?;
        }
        let mut next = u32::MAX;
        for i in self.gens.distinct_indices() {
            // every move is an involution: repeating it undoes it
            if i == last {
                continue;
            }
            self.gens.apply(i, &mut self.codes);
            self.path.push(i);
            let r = self.probe(g + 1, bound, i)?;
            if let Probe::Found = r {
                return Ok(Probe::Found);
            }
            self.path.pop();
            self.gens.apply(i, &mut self.codes);
            if let Probe::Exceeded(f) = r {
                next = next.min(f);
            }
        }
        Ok(Probe::Exceeded(next))
    }
}
