//! Rearrangeability of rank-2 arrays under prefix reversals.
//!
//! An unsigned `n x m` array can always be rearranged into the standard
//! array if and only if `n` or `m` is not divisible by 4. When both are,
//! every generator is an even permutation, so only even arrangements are
//! reachable. Whether every even arrangement is reachable is not decided
//! here; such instances get [`Verdict::EvenParityUndetermined`].

use std::fmt;

use crate::model::{Dims, Mode, MultiArray, Parity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    AlwaysReachable,
    UnreachableOddParity,
    EvenParityUndetermined,
    EmpiricalOnly,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::AlwaysReachable => "AlwaysReachable",
            Verdict::UnreachableOddParity => "UnreachableOddParity",
            Verdict::EvenParityUndetermined => "EvenParityUndetermined",
            Verdict::EmpiricalOnly => "EmpiricalOnly",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reachability {
    pub verdict: Verdict,
    pub parity: Option<Parity>,
    pub reason: String,
}

pub const THEOREM: &str = "an unsigned n x m array can always be rearranged iff n or m is not \
divisible by 4; if both are, only even permutations can be realized";

pub const SUFFICIENCY_CAVEAT: &str = "even parity is necessary but is not claimed to be \
sufficient; use an exact solver for a certificate";

fn empirical(reason: &str) -> Reachability {
    Reachability {
        verdict: Verdict::EmpiricalOnly,
        parity: None,
        reason: reason.to_string(),
    }
}

/// Verdict from the extents alone (rank 2, unsigned semantics).
///
/// When both extents are divisible by 4 the outcome depends on the
/// instance; this returns [`Verdict::EvenParityUndetermined`] with no
/// parity, and [`decide_instance`] must be consulted.
pub fn decide_dims(dims: Dims) -> Reachability {
    if dims.rank() != 2 {
        return empirical(
            "no rearrangeability characterization for this rank; empirical orbit data only",
        );
    }
    let (n, m) = (dims.extent(0), dims.extent(1));
    if n % 4 != 0 || m % 4 != 0 {
        let which = if n % 4 != 0 { "rows" } else { "columns" };
        return Reachability {
            verdict: Verdict::AlwaysReachable,
            parity: None,
            reason: format!("the number of {which} is not divisible by 4"),
        };
    }
    Reachability {
        verdict: Verdict::EvenParityUndetermined,
        parity: None,
        reason: "both extents divisible by 4: only even permutations can be realized; \
                 the verdict depends on the instance"
            .to_string(),
    }
}

/// Verdict for a concrete unsigned rank-2 instance.
pub fn decide_instance(ma: &MultiArray) -> Reachability {
    if ma.mode() == Mode::Signed {
        return empirical(
            "no rearrangeability characterization for signed arrays; empirical orbit data only",
        );
    }
    let by_dims = decide_dims(ma.dims());
    if by_dims.verdict != Verdict::EvenParityUndetermined {
        return by_dims;
    }
    match ma.id_parity() {
        Parity::Odd => Reachability {
            verdict: Verdict::UnreachableOddParity,
            parity: Some(Parity::Odd),
            reason: "both extents divisible by 4 and the instance is an odd permutation"
                .to_string(),
        },
        Parity::Even => Reachability {
            verdict: Verdict::EvenParityUndetermined,
            parity: Some(Parity::Even),
            reason: format!(
                "both extents divisible by 4 and the instance is even; {SUFFICIENCY_CAVEAT}"
            ),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Move, Token};

    fn dims(d: &[usize]) -> Dims {
        Dims::new(d).unwrap()
    }

    #[test]
    fn dims_verdicts() {
        assert_eq!(decide_dims(dims(&[2, 3])).verdict, Verdict::AlwaysReachable);
        assert_eq!(decide_dims(dims(&[4, 6])).verdict, Verdict::AlwaysReachable);
        assert_eq!(
            decide_dims(dims(&[8, 4])).verdict,
            Verdict::EvenParityUndetermined
        );
        assert_eq!(decide_dims(dims(&[4, 4])).parity, None);
        let r = decide_dims(dims(&[4]));
        assert_eq!(r.verdict, Verdict::EmpiricalOnly);
        assert!(r.reason.contains("no rearrangeability characterization"));
        assert_eq!(
            decide_dims(dims(&[2, 2, 2])).verdict,
            Verdict::EmpiricalOnly
        );
    }

    #[test]
    fn instance_verdicts() {
        let e = MultiArray::standard(dims(&[2, 3]), Mode::Unsigned);
        assert_eq!(
            decide_instance(&e.apply_move(Move::v(2)).unwrap()).verdict,
            Verdict::AlwaysReachable
        );

        let std44 = MultiArray::standard(dims(&[4, 4]), Mode::Unsigned);
        let r = decide_instance(&std44);
        assert_eq!(r.verdict, Verdict::EvenParityUndetermined);
        assert_eq!(r.parity, Some(Parity::Even));

        let mut cells = std44.cells().to_vec();
        cells.swap(5, 10);
        let odd = MultiArray::new(dims(&[4, 4]), Mode::Unsigned, cells).unwrap();
        let r = decide_instance(&odd);
        assert_eq!(r.verdict, Verdict::UnreachableOddParity);
        assert_eq!(r.parity, Some(Parity::Odd));
    }

    #[test]
    fn signed_is_empirical() {
        let a = MultiArray::new(
            dims(&[1, 2]),
            Mode::Signed,
            vec![Token::down(1), Token::up(2)],
        )
        .unwrap();
        assert_eq!(decide_instance(&a).verdict, Verdict::EmpiricalOnly);
    }
}
