use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{Dims, Mode, MultiArray, Orientation, Token};

/// How a random instance is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    /// Uniform ids (and orientations in signed mode); may be unreachable.
    Uniform,
    /// `k` random legal moves from the standard array; always reachable.
    Walk(u32),
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Policy::Uniform => f.write_str("uniform"),
            Policy::Walk(k) => write!(f, "walk:{k}"),
        }
    }
}

impl FromStr for Policy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "uniform" {
            return Ok(Policy::Uniform);
        }
        s.strip_prefix("walk:")
            .and_then(|k| k.parse().ok())
            .map(Policy::Walk)
            .ok_or_else(|| format!("unknown policy {s:?} (expected `uniform` or `walk:K`)"))
    }
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Deterministic per seed.
pub fn random_instance(dims: Dims, mode: Mode, seed: u64, policy: Policy) -> MultiArray {
    let mut rng = seeded_rng(seed);
    match policy {
        Policy::Uniform => {
            let mut ids: Vec<u32> = (1..=dims.cell_count() as u32).collect();
            ids.shuffle(&mut rng);
            let cells = ids
                .into_iter()
                .map(|id| Token {
                    id,
                    orientation: if mode.is_signed() && rng.gen::<bool>() {
                        Orientation::Down
                    } else {
                        Orientation::Up
                    },
                })
                .collect();
            MultiArray::new(dims, mode, cells).expect("shuffled ids form a permutation")
        }
        Policy::Walk(steps) => random_walk(MultiArray::standard(dims, mode), steps, &mut rng),
    }
}

/// Applies `steps` uniformly chosen legal moves.
pub fn random_walk<R: Rng>(start: MultiArray, steps: u32, rng: &mut R) -> MultiArray {
    let moves = start.legal_moves();
    (0..steps).fold(start, |ma, _| {
        let mv = moves[rng.gen_range(0..moves.len())];
        ma.apply_move(mv).expect("legal move")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn walk_zero_is_standard() {
        let d = Dims::new(&[2, 3]).unwrap();
        assert!(random_instance(d, Mode::Signed, 7, Policy::Walk(0)).is_standard());
    }

    #[test]
    fn same_seed_same_instance() {
        let d = Dims::new(&[3, 3]).unwrap();
        for policy in [Policy::Uniform, Policy::Walk(20)] {
            let a = random_instance(d, Mode::Signed, 42, policy);
            let b = random_instance(d, Mode::Signed, 42, policy);
            assert_eq!(a, b);
        }
        assert_ne!(
            random_instance(d, Mode::Signed, 1, Policy::Uniform),
            random_instance(d, Mode::Signed, 2, Policy::Uniform)
        );
    }

    #[test]
    fn unsigned_uniform_stays_up() {
        let d = Dims::new(&[10]).unwrap();
        let a = random_instance(d, Mode::Unsigned, 3, Policy::Uniform);
        assert!(a.cells().iter().all(|t| t.orientation.is_up()));
    }

    #[test]
    fn policy_parsing() {
        assert_eq!("uniform".parse(), Ok(Policy::Uniform));
        assert_eq!("walk:12".parse(), Ok(Policy::Walk(12)));
        assert!("walk:".parse::<Policy>().is_err());
        assert!("random".parse::<Policy>().is_err());
        assert_eq!(Policy::Walk(3).to_string(), "walk:3");
    }
}
