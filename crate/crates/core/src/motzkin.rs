//! Motzkin numbers, their parity split, and the shadow sequence, generated
//! three independent ways: recurrence, closed-form expansion, and the
//! binomial-Catalan formula.
//!
//! The closed forms are quotients by `2x^2` or `4x^2` whose numerators vanish
//! to order two; they are expanded by square root, head cancellation, and a
//! downward shift rather than by general series division.

use num::{BigInt, Integer, One, Zero};
use thiserror::Error;

use crate::sequence::IntegerSequence;
use crate::series::{ratio, ExactRational, PowerSeries, SeriesError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("recurrence division is inexact at n={n} (remainder {remainder})")]
    InexactDivision { n: usize, remainder: BigInt },
    #[error("closed-form numerator has a non-zero coefficient at x^{index}: {value}")]
    HeadCoefficientNonzero { index: usize, value: ExactRational },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Selects one of the four closed-form generating functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// M(x) = (1 - x - sqrt(1-2x-3x^2)) / (2x^2), Motzkin numbers.
    Motzkin,
    /// A(x) = (sqrt(1-2x+5x^2) - sqrt(1-2x-3x^2)) / (4x^2), even-path counts.
    Even,
    /// B(x) = (2 - 2x - sqrt(1-2x-3x^2) - sqrt(1-2x+5x^2)) / (4x^2), odd-path counts.
    Odd,
    /// S(x) = (-1 + x + sqrt(1-2x+5x^2)) / (2x^2), shadows.
    Shadow,
}

/// The four functional equations satisfied by the generating functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunctionalEquationKind {
    /// M = 1 + xM + x^2 M^2
    Motzkin,
    /// A = 1 + xA + 2x^2 AB
    Even,
    /// B = xB + x^2 A^2 + x^2 B^2
    Odd,
    /// S = 1 + xS - x^2 S^2
    Shadow,
}

/// Motzkin numbers m_0 ..= m_{n_max} by the three-term recurrence
/// `(n+2) m_n = (2n+1) m_{n-1} + 3(n-1) m_{n-2}` with m_0 = m_1 = 1.
///
/// Panics if the division is ever inexact; that cannot happen for the Motzkin
/// recurrence and would signal an implementation bug.
pub fn motzkin_by_recurrence(n_max: usize) -> IntegerSequence {
    let mut terms = Vec::with_capacity(n_max + 1);
    terms.push(BigInt::one());
    if n_max >= 1 {
        terms.push(BigInt::one());
    }
    for n in 2..=n_max {
        let numerator = BigInt::from(2 * n as i64 + 1) * &terms[n - 1]
            + BigInt::from(3 * (n as i64 - 1)) * &terms[n - 2];
        let (quotient, remainder) = numerator.div_rem(&BigInt::from(n as i64 + 2));
        assert!(
            remainder.is_zero(),
            "Motzkin recurrence division inexact at n={n}"
        );
        terms.push(quotient);
    }
    IntegerSequence::new(0, terms)
}

/// Shadows s_0 ..= s_{n_max} by the recurrence
/// `s(n) = ((2n+1) s(n-1) - 5(n-1) s(n-2)) / (n+2)` with s(0) = s(1) = 1.
///
/// Unlike the Motzkin recurrence, an inexact division here is a checked
/// error: it would falsify the recurrence itself, not just this code.
pub fn shadow_by_recurrence(n_max: usize) -> Result<IntegerSequence, EngineError> {
    let mut terms = Vec::with_capacity(n_max + 1);
    terms.push(BigInt::one());
    if n_max >= 1 {
        terms.push(BigInt::one());
    }
    for n in 2..=n_max {
        let numerator = BigInt::from(2 * n as i64 + 1) * &terms[n - 1]
            - BigInt::from(5 * (n as i64 - 1)) * &terms[n - 2];
        let (quotient, remainder) = numerator.div_rem(&BigInt::from(n as i64 + 2));
        if !remainder.is_zero() {
            return Err(EngineError::InexactDivision { n, remainder });
        }
        terms.push(quotient);
    }
    Ok(IntegerSequence::new(0, terms))
}

/// sqrt(1 - 2x - 3x^2), the radical in the Motzkin closed form.
fn motzkin_radical(order: usize) -> PowerSeries {
    PowerSeries::polynomial(&[1, -2, -3], order)
        .sqrt()
        .expect("radicand has unit constant term")
}

/// sqrt(1 - 2x + 5x^2), the radical in the parity-split closed forms.
fn shadow_radical(order: usize) -> PowerSeries {
    PowerSeries::polynomial(&[1, -2, 5], order)
        .sqrt()
        .expect("radicand has unit constant term")
}

/// Expand a closed-form generating function to the requested order.
///
/// All four numerators vanish through x^1, so the division by `2x^2` or
/// `4x^2` reduces to a verified head cancellation, a shift by -2, and a
/// scalar division. Every coefficient must come out integral.
pub fn expand_closed_form(which: ClosedForm, order: usize) -> Result<PowerSeries, EngineError> {
    let work = order + 2;
    let (numerator, divisor) = match which {
        ClosedForm::Motzkin => (
            PowerSeries::polynomial(&[1, -1], work).sub(&motzkin_radical(work)),
            2,
        ),
        ClosedForm::Even => (shadow_radical(work).sub(&motzkin_radical(work)), 4),
        ClosedForm::Odd => (
            PowerSeries::polynomial(&[2, -2], work)
                .sub(&motzkin_radical(work))
                .sub(&shadow_radical(work)),
            4,
        ),
        ClosedForm::Shadow => (
            PowerSeries::polynomial(&[-1, 1], work).add(&shadow_radical(work)),
            2,
        ),
    };
    for index in 0..2 {
        let value = numerator.coeff(index);
        if !value.is_zero() {
            return Err(EngineError::HeadCoefficientNonzero {
                index,
                value: value.clone(),
            });
        }
    }
    let series = numerator
        .shift(-2)
        .expect("head coefficients verified zero")
        .scale(&ratio(1, divisor));
    series.integer_coefficients()?;
    Ok(series)
}

/// Difference between the two sides of the chosen functional equation, with
/// every series expanded from its closed form. Identically zero when the
/// equation holds; a non-zero residual is a finding for the caller to report.
pub fn functional_equation_residual(kind: FunctionalEquationKind, order: usize) -> PowerSeries {
    let expand = |which| expand_closed_form(which, order).expect("closed form expands");
    let raise = |series: &PowerSeries, k: i64| series.shift(k).expect("non-negative shift");
    let one = PowerSeries::one(order);
    match kind {
        FunctionalEquationKind::Motzkin => {
            let m = expand(ClosedForm::Motzkin);
            let rhs = one.add(&raise(&m, 1)).add(&raise(&m.mul(&m), 2));
            m.sub(&rhs)
        }
        FunctionalEquationKind::Even => {
            let a = expand(ClosedForm::Even);
            let b = expand(ClosedForm::Odd);
            let cross = raise(&a.mul(&b), 2).scale(&ratio(2, 1));
            let rhs = one.add(&raise(&a, 1)).add(&cross);
            a.sub(&rhs)
        }
        FunctionalEquationKind::Odd => {
            let a = expand(ClosedForm::Even);
            let b = expand(ClosedForm::Odd);
            let rhs = raise(&b, 1)
                .add(&raise(&a.mul(&a), 2))
                .add(&raise(&b.mul(&b), 2));
            b.sub(&rhs)
        }
        FunctionalEquationKind::Shadow => {
            let s = expand(ClosedForm::Shadow);
            let rhs = one.add(&raise(&s, 1)).sub(&raise(&s.mul(&s), 2));
            s.sub(&rhs)
        }
    }
}

/// n-th Catalan number via `Cat(n) = Cat(n-1) * 2(2n-1) / (n+1)`.
pub fn catalan(n: usize) -> BigInt {
    let mut value = BigInt::one();
    for i in 1..=n {
        value *= BigInt::from(2 * (2 * i as i64 - 1));
        let (quotient, remainder) = value.div_rem(&BigInt::from(i as i64 + 1));
        debug_assert!(remainder.is_zero());
        value = quotient;
    }
    value
}

/// Binomial coefficient by the multiplicative formula; every intermediate
/// division is exact.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut value = BigInt::one();
    for d in 1..=k {
        value *= BigInt::from((n - k + d) as u64);
        let (quotient, remainder) = value.div_rem(&BigInt::from(d as u64));
        debug_assert!(remainder.is_zero());
        value = quotient;
    }
    value
}

/// Number of even Motzkin paths of length n by the binomial-Catalan sum
/// `sum_k C(n, 4k) * Cat(2k)`. Every summand past k=0 is even, which is why
/// the total is always odd.
pub fn even_count_formula(n: usize) -> BigInt {
    let mut total = BigInt::zero();
    for k in 0..=(n / 4) {
        total += binomial(n, 4 * k) * catalan(2 * k);
    }
    total
}

/// Even- and odd-path counts for lengths 0 ..= n_max, extracted from the
/// closed-form expansions.
pub fn parity_split_from_closed_forms(
    n_max: usize,
) -> Result<(IntegerSequence, IntegerSequence), EngineError> {
    let even = expand_closed_form(ClosedForm::Even, n_max)?.integer_coefficients()?;
    let odd = expand_closed_form(ClosedForm::Odd, n_max)?.integer_coefficients()?;
    Ok((
        IntegerSequence::new(0, even),
        IntegerSequence::new(0, odd),
    ))
}
