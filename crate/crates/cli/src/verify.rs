//! Named identity checks run by the `verify` subcommand.
//!
//! Each identity is verified in exact arithmetic up to a caller-chosen order;
//! a failure reports the first index (or coefficient) at which it breaks.

use std::fmt;
use std::str::FromStr;

use motzkin_shadows::chain::{self, ChainRoute};
use motzkin_shadows::motzkin::{
    self, expand_closed_form, functional_equation_residual, ClosedForm, FunctionalEquationKind,
};
use motzkin_shadows::sequence::SequenceId;
use motzkin_shadows::series::PowerSeries;
use num::{BigInt, Integer};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// Even plus odd path counts give the Motzkin numbers.
    Sum,
    /// Even minus odd path counts give the shadows.
    ShadowDiff,
    /// M = 1 + xM + x^2 M^2
    FunctionalEqM,
    /// A = 1 + xA + 2x^2 AB
    FunctionalEqA,
    /// B = xB + x^2 A^2 + x^2 B^2
    FunctionalEqB,
    /// S = 1 + xS - x^2 S^2
    FunctionalEqS,
    /// Every even-path count is odd, and the binomial-Catalan formula
    /// reproduces it.
    Proposition2,
    /// A343773 and A007440 are sign inversions of each other.
    Inversion,
    /// Reversion composes back to x and is an involution.
    ReversionRoundtrip,
    /// Both chain routes agree, forward and backward, and round-trip.
    ChainCommute,
    /// The unsigned chain output is the canonical Fibonacci sequence.
    Fibonacci,
}

impl Identity {
    pub const ALL: [Identity; 11] = [
        Identity::Sum,
        Identity::ShadowDiff,
        Identity::FunctionalEqM,
        Identity::FunctionalEqA,
        Identity::FunctionalEqB,
        Identity::FunctionalEqS,
        Identity::Proposition2,
        Identity::Inversion,
        Identity::ReversionRoundtrip,
        Identity::ChainCommute,
        Identity::Fibonacci,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Sum => "sum",
            Identity::ShadowDiff => "shadow-diff",
            Identity::FunctionalEqM => "functional-eq-M",
            Identity::FunctionalEqA => "functional-eq-A",
            Identity::FunctionalEqB => "functional-eq-B",
            Identity::FunctionalEqS => "functional-eq-S",
            Identity::Proposition2 => "proposition2",
            Identity::Inversion => "inversion",
            Identity::ReversionRoundtrip => "reversion-roundtrip",
            Identity::ChainCommute => "chain-commute",
            Identity::Fibonacci => "fibonacci",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Identity::Sum => "even + odd path counts equal the Motzkin numbers",
            Identity::ShadowDiff => "even - odd path counts equal the shadows",
            Identity::FunctionalEqM => "M = 1 + xM + x^2*M^2",
            Identity::FunctionalEqA => "A = 1 + xA + 2x^2*A*B",
            Identity::FunctionalEqB => "B = xB + x^2*A^2 + x^2*B^2",
            Identity::FunctionalEqS => "S = 1 + xS - x^2*S^2",
            Identity::Proposition2 => {
                "every even-path count is odd and matches the binomial-Catalan sum"
            }
            Identity::Inversion => "A343773(n) = (-1)^n * A007440(n+1), both directions",
            Identity::ReversionRoundtrip => "reversion composes to x and reverts back",
            Identity::ChainCommute => "both chain routes agree forward and backward",
            Identity::Fibonacci => "the chain output is the canonical Fibonacci sequence",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown identity {0:?}; run with --help for the list")]
pub struct UnknownIdentity(pub String);

impl FromStr for Identity {
    type Err = UnknownIdentity;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lowered = s.to_ascii_lowercase();
        Identity::ALL
            .into_iter()
            .find(|identity| identity.name().to_ascii_lowercase() == lowered)
            .ok_or_else(|| UnknownIdentity(s.to_owned()))
    }
}

/// First point at which an identity fails, with context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyFailure {
    pub identity: Identity,
    pub detail: String,
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.identity, self.detail)
    }
}

fn fail(identity: Identity, detail: String) -> Result<(), VerifyFailure> {
    Err(VerifyFailure { identity, detail })
}

fn check_zero_series(identity: Identity, residual: &PowerSeries) -> Result<(), VerifyFailure> {
    if let Some(index) = residual
        .coefficients()
        .iter()
        .position(|c| !num::Zero::is_zero(c))
    {
        return fail(
            identity,
            format!(
                "residual coefficient of x^{index} is {}",
                residual.coeff(index)
            ),
        );
    }
    Ok(())
}

/// Run one identity check to the requested order.
pub fn run_identity(identity: Identity, order: usize) -> Result<(), VerifyFailure> {
    match identity {
        Identity::Sum => {
            let motzkin = motzkin::motzkin_by_recurrence(order);
            let (even, odd) = motzkin::parity_split_from_closed_forms(order)
                .expect("parity closed forms expand");
            for n in 0..=order as i64 {
                let sum = even.term(n).unwrap() + odd.term(n).unwrap();
                if &sum != motzkin.term(n).unwrap() {
                    return fail(identity, format!("first failure at n={n}"));
                }
            }
            Ok(())
        }
        Identity::ShadowDiff => {
            let shadow = motzkin::shadow_by_recurrence(order)
                .map_err(|e| VerifyFailure {
                    identity,
                    detail: e.to_string(),
                })?;
            let (even, odd) = motzkin::parity_split_from_closed_forms(order)
                .expect("parity closed forms expand");
            for n in 0..=order as i64 {
                let diff = even.term(n).unwrap() - odd.term(n).unwrap();
                if &diff != shadow.term(n).unwrap() {
                    return fail(identity, format!("first failure at n={n}"));
                }
            }
            Ok(())
        }
        Identity::FunctionalEqM => check_zero_series(
            identity,
            &functional_equation_residual(FunctionalEquationKind::Motzkin, order),
        ),
        Identity::FunctionalEqA => check_zero_series(
            identity,
            &functional_equation_residual(FunctionalEquationKind::Even, order),
        ),
        Identity::FunctionalEqB => check_zero_series(
            identity,
            &functional_equation_residual(FunctionalEquationKind::Odd, order),
        ),
        Identity::FunctionalEqS => check_zero_series(
            identity,
            &functional_equation_residual(FunctionalEquationKind::Shadow, order),
        ),
        Identity::Proposition2 => {
            let even = expand_closed_form(ClosedForm::Even, order)
                .expect("even closed form expands")
                .integer_coefficients()
                .expect("even closed form is integral");
            for (n, term) in even.iter().enumerate() {
                if !term.is_odd() {
                    return fail(identity, format!("even-path count at n={n} is even"));
                }
                if &motzkin::even_count_formula(n) != term {
                    return fail(
                        identity,
                        format!("binomial-Catalan formula disagrees at n={n}"),
                    );
                }
            }
            Ok(())
        }
        Identity::Inversion => {
            let shadow = chain::generate(SequenceId::A343773, order + 1);
            let inverted = chain::generate(SequenceId::A007440, order + 1);
            for n in 0..=order as i64 {
                let signed = inverted.term(n + 1).unwrap();
                let back = if n % 2 == 0 { signed.clone() } else { -signed };
                if shadow.term(n).unwrap() != &back {
                    return fail(identity, format!("first failure at n={n}"));
                }
                let forward = {
                    let s = shadow.term(n).unwrap();
                    if n % 2 == 0 {
                        s.clone()
                    } else {
                        -s
                    }
                };
                if &forward != inverted.term(n + 1).unwrap() {
                    return fail(identity, format!("first failure at n={n}"));
                }
            }
            Ok(())
        }
        Identity::ReversionRoundtrip => {
            let shadow = expand_closed_form(ClosedForm::Shadow, order.max(2) - 1)
                .expect("shadow closed form expands");
            let xs = shadow.shift(1).expect("non-negative shift");
            let reversed = xs.reversion().expect("x*S(x) is admissible");
            let composed = xs.compose(&reversed).expect("reversion has zero constant");
            if composed != PowerSeries::x(composed.order()) {
                return check_zero_series(identity, &composed.sub(&PowerSeries::x(composed.order())));
            }
            if reversed.reversion().expect("reversion is admissible") != xs {
                return fail(identity, "double reversion did not return x*S(x)".into());
            }
            Ok(())
        }
        Identity::ChainCommute => {
            let forward_a = chain::run_forward(ChainRoute::InvertThenReverse, order);
            let forward_b = chain::run_forward(ChainRoute::ReverseThenInvert, order);
            if forward_a != forward_b {
                return fail(identity, "forward routes disagree".into());
            }
            let backward_a = chain::run_backward(ChainRoute::InvertThenReverse, order);
            let backward_b = chain::run_backward(ChainRoute::ReverseThenInvert, order);
            if backward_a != backward_b {
                return fail(identity, "backward routes disagree".into());
            }
            let shadow = motzkin::shadow_by_recurrence(order - 1)
                .expect("shadow recurrence divides exactly");
            if backward_a.terms() != shadow.terms() {
                return fail(identity, "backward run did not recover the shadows".into());
            }
            Ok(())
        }
        Identity::Fibonacci => {
            let fib = chain::generate(SequenceId::A000045, order + 1);
            // A039834 starts at index -2; cover indices up to `order`.
            let signed = chain::generate(SequenceId::A039834, order + 3);
            if fib.term(0).unwrap() != &BigInt::from(0) || fib.term(1).unwrap() != &BigInt::from(1)
            {
                return fail(identity, "seeds are not F(0)=0, F(1)=1".into());
            }
            for n in 0..=order as i64 {
                let term = fib.term(n).unwrap();
                if term < &BigInt::from(0) {
                    return fail(identity, format!("negative term at n={n}"));
                }
                if n >= 2 {
                    let sum = fib.term(n - 1).unwrap() + fib.term(n - 2).unwrap();
                    if &sum != term {
                        return fail(identity, format!("recurrence fails at n={n}"));
                    }
                }
                let from_signed = {
                    let s = signed.term(n).unwrap();
                    if n % 2 == 0 {
                        -s
                    } else {
                        s.clone()
                    }
                };
                if &from_signed != term {
                    return fail(identity, format!("sign rule fails at n={n}"));
                }
            }
            Ok(())
        }
    }
}
