//! The full pipeline from Motzkin numbers to Fibonacci numbers.
//!
//! Motzkin numbers split into even- and odd-path counts; their difference is
//! the shadow sequence. Shifting the shadow generating function to x*S(x)
//! makes it revertible, and from there Fibonacci numbers are reached two
//! commuting ways: sign-invert then revert, or revert then sign-invert. Both
//! directions of both routes are exposed here, together with generators for
//! all nine sequences of the cluster at their canonical offsets.
//!
//! Sequences with negative offsets (A214649, A039834) are assembled at the
//! sequence layer by attaching head terms; the series work itself never
//! leaves ordinary power series.

use num::{BigInt, Zero};

use crate::motzkin::{
    self, expand_closed_form, motzkin_by_recurrence, parity_split_from_closed_forms, ClosedForm,
};
use crate::sequence::{IntegerSequence, SequenceId};
use crate::series::{ExactRational, PowerSeries};

/// Order of the two pipeline steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainRoute {
    InvertThenReverse,
    ReverseThenInvert,
}

impl ChainRoute {
    pub const BOTH: [ChainRoute; 2] = [ChainRoute::InvertThenReverse, ChainRoute::ReverseThenInvert];

    fn apply(self, series: &PowerSeries) -> PowerSeries {
        match self {
            ChainRoute::InvertThenReverse => series
                .sign_invert()
                .reversion()
                .expect("series admissible for reversion"),
            ChainRoute::ReverseThenInvert => series
                .reversion()
                .expect("series admissible for reversion")
                .sign_invert(),
        }
    }
}

/// x * S(x): the shadow generating function shifted so reversion applies.
fn shifted_shadow_series(order: usize) -> PowerSeries {
    expand_closed_form(ClosedForm::Shadow, order - 1)
        .expect("shadow closed form expands")
        .shift(1)
        .expect("non-negative shift")
}

/// Shadow terms s(0) ..= s(count - 1) via the recurrence.
fn shadow_terms(count: usize) -> Vec<BigInt> {
    motzkin::shadow_by_recurrence(count - 1)
        .expect("shadow recurrence divides exactly")
        .terms()
        .to_vec()
}

/// The Fibonacci generating function x + x^2 + 2x^3 + 3x^4 + ..., built from
/// the recurrence.
fn fibonacci_series(order: usize) -> PowerSeries {
    let mut coeffs = vec![ExactRational::zero(); order + 1];
    let mut previous = BigInt::from(0);
    let mut current = BigInt::from(1);
    for coeff in coeffs.iter_mut().skip(1) {
        *coeff = ExactRational::from_integer(current.clone());
        let next = &previous + &current;
        previous = std::mem::replace(&mut current, next);
    }
    PowerSeries::from_rationals(coeffs)
}

fn integer_window(series: &PowerSeries, first: usize, count: usize) -> Vec<BigInt> {
    let ints = series
        .integer_coefficients()
        .expect("pipeline series have integer coefficients");
    ints[first..first + count].to_vec()
}

/// Coefficients of the reversion of x*S(x), indexed from 1. These are the
/// alternating-sign Fibonacci numbers 1, -1, 2, -3, 5, -8, ...
pub fn reverse_shadows(order: usize) -> IntegerSequence {
    assert!(order >= 1, "order must be at least 1");
    let reversed = shifted_shadow_series(order + 2)
        .reversion()
        .expect("x*S(x) is admissible for reversion");
    IntegerSequence::new(1, integer_window(&reversed, 1, order))
}

/// Run the two-step pipeline from the shadows to the Fibonacci numbers.
/// Both routes yield F(1), F(2), ... = 1, 1, 2, 3, 5, 8, ... indexed from 1.
pub fn run_forward(route: ChainRoute, n_terms: usize) -> IntegerSequence {
    assert!(n_terms >= 1, "n_terms must be at least 1");
    let result = route.apply(&shifted_shadow_series(n_terms + 2));
    IntegerSequence::new(1, integer_window(&result, 1, n_terms))
}

/// Run the two-step pipeline backwards, from the Fibonacci numbers to the
/// shadows. Both routes yield s(0), s(1), ... indexed from 0.
pub fn run_backward(route: ChainRoute, n_terms: usize) -> IntegerSequence {
    assert!(n_terms >= 1, "n_terms must be at least 1");
    let result = route.apply(&fibonacci_series(n_terms + 2));
    IntegerSequence::new(0, integer_window(&result, 1, n_terms))
}

/// Shadow terms prefixed by extra head values, as an offset sequence.
fn with_head(head: &[i64], offset: i64, n_terms: usize) -> IntegerSequence {
    let mut terms: Vec<BigInt> = head
        .iter()
        .take(n_terms)
        .copied()
        .map(BigInt::from)
        .collect();
    if n_terms > head.len() {
        terms.extend(shadow_terms(n_terms - head.len()));
    }
    IntegerSequence::new(offset, terms)
}

/// First `n_terms` terms of the chosen sequence, starting at its canonical
/// offset.
pub fn generate(id: SequenceId, n_terms: usize) -> IntegerSequence {
    assert!(n_terms >= 1, "n_terms must be at least 1");
    match id {
        SequenceId::A001006 => motzkin_by_recurrence(n_terms - 1),
        SequenceId::A107587 => {
            parity_split_from_closed_forms(n_terms - 1)
                .expect("parity closed forms expand")
                .0
        }
        SequenceId::A343386 => {
            parity_split_from_closed_forms(n_terms - 1)
                .expect("parity closed forms expand")
                .1
        }
        SequenceId::A343773 => motzkin::shadow_by_recurrence(n_terms - 1)
            .expect("shadow recurrence divides exactly"),
        SequenceId::A100223 => with_head(&[1, 0], 0, n_terms),
        SequenceId::A214649 => with_head(&[1, -1], -1, n_terms),
        SequenceId::A007440 => {
            // A007440(n+1) = (-1)^n * s(n), indexed from 1.
            let terms = shadow_terms(n_terms)
                .into_iter()
                .enumerate()
                .map(|(n, s)| if n % 2 == 0 { s } else { -s })
                .collect();
            IntegerSequence::new(1, terms)
        }
        SequenceId::A039834 => {
            // Head 1, 1 at indices -2, -1; from index 0 the coefficients of
            // the reversion of x*S(x) (whose constant term is 0).
            let mut terms = vec![BigInt::from(1); 2.min(n_terms)];
            if n_terms > 2 {
                let reversed = shifted_shadow_series(n_terms + 2)
                    .reversion()
                    .expect("x*S(x) is admissible for reversion");
                terms.extend(integer_window(&reversed, 0, n_terms - 2));
            }
            IntegerSequence::new(-2, terms)
        }
        SequenceId::A000045 => {
            // F(n) = -(-1)^n * A039834(n): strip the signs off the signed
            // Fibonacci numbers.
            let signed = generate(SequenceId::A039834, n_terms + 2);
            let terms = (0..n_terms as i64)
                .map(|n| {
                    let term = signed.term(n).expect("term in range");
                    if n % 2 == 0 {
                        -term
                    } else {
                        term.clone()
                    }
                })
                .collect();
            IntegerSequence::new(0, terms)
        }
    }
}
