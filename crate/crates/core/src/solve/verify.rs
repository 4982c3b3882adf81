use crate::error::ModelError;
use crate::model::{MoveSequence, MultiArray};

/// Outcome of replaying a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub valid: bool,
    pub solved: bool,
    /// State after the last legal move.
    pub final_state: MultiArray,
    /// Index of the first illegal move and why it is illegal.
    pub failure: Option<(usize, ModelError)>,
}

/// Replays `moves` from `ma`. Illegal moves are reported, not raised.
pub fn verify(ma: &MultiArray, moves: &MoveSequence) -> Verification {
    let mut state = ma.clone();
    for (index, &mv) in moves.iter().enumerate() {
        match state.apply_move(mv) {
            Ok(next) => state = next,
            Err(err) => {
                return Verification {
                    valid: false,
                    solved: false,
                    final_state: state,
                    failure: Some((index, err)),
                }
            }
        }
    }
    Verification {
        valid: true,
        solved: state.is_standard(),
        final_state: state,
        failure: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Dims, Mode, Move};

    #[test]
    fn worked_grid_certificate() {
        // [c f e / b D A]
        let a = MultiArray::from_signed(&[2, 3], Mode::Signed, &[-3, -6, -5, -2, 4, 1]).unwrap();
        let seq = MoveSequence(vec![
            Move::h(1),
            Move::v(2),
            Move::h(2),
            Move::h(1),
            Move::h(2),
            Move::v(1),
        ]);
        let v = verify(&a, &seq);
        assert!(v.valid && v.solved);
        assert!(v.failure.is_none());
    }

    #[test]
    fn empty_sequence_on_standard() {
        let e = MultiArray::standard(Dims::new(&[3, 2]).unwrap(), Mode::Signed);
        let v = verify(&e, &MoveSequence::new());
        assert!(v.valid && v.solved);
    }

    #[test]
    fn out_of_range_move() {
        let e = MultiArray::standard(Dims::new(&[2, 3]).unwrap(), Mode::Unsigned);
        let v = verify(&e, &MoveSequence(vec![Move::v(4)]));
        assert!(!v.valid);
        assert!(!v.solved);
        assert_eq!(v.failure.as_ref().map(|f| f.0), Some(0));
        assert_eq!(v.final_state, e);
    }

    #[test]
    fn legal_but_unsolved() {
        let e = MultiArray::standard(Dims::new(&[4]).unwrap(), Mode::Unsigned);
        let v = verify(&e, &MoveSequence(vec![Move::h(2)]));
        assert!(v.valid && !v.solved);
    }
}
