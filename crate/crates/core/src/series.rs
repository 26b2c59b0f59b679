//! Truncated formal power series over exact rational coefficients.
//!
//! A [`PowerSeries`] stores the coefficients of `x^0 ..= x^order` densely and
//! carries its truncation order explicitly. Binary operations truncate to the
//! minimum order of their inputs, so a result never claims a coefficient an
//! input could not guarantee. All arithmetic is exact; there is no floating
//! point anywhere in this crate.

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, kept in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

/// The integer `n` as an exact rational.
pub fn rational(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

/// The fraction `n/d` as an exact rational. Panics if `d` is zero.
pub fn ratio(n: i64, d: i64) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(d))
}

/// Product of two rationals. When both are integers the result is already in
/// lowest terms, so the reduction pass (a full big-integer gcd per operation)
/// is skipped; that path dominates the running time of high-order expansions.
/// A product with exactly one integer factor needs a single reduction.
fn mul_exact(a: &ExactRational, b: &ExactRational) -> ExactRational {
    match (a.denom().is_one(), b.denom().is_one()) {
        (true, true) => ExactRational::new_raw(a.numer() * b.numer(), BigInt::one()),
        (true, false) => ExactRational::new(a.numer() * b.numer(), b.denom().clone()),
        (false, true) => ExactRational::new(a.numer() * b.numer(), a.denom().clone()),
        (false, false) => a * b,
    }
}

/// `target += value` with the same integer fast path as [`mul_exact`].
fn add_assign_exact(target: &mut ExactRational, value: ExactRational) {
    if target.denom().is_one() && value.denom().is_one() {
        let sum = target.numer() + value.numer();
        *target = ExactRational::new_raw(sum, BigInt::one());
    } else {
        *target += value;
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("square root requires constant term 1, found {found}")]
    SqrtConstantTerm { found: ExactRational },
    #[error("composition requires the inner series to have a zero constant term")]
    ComposeConstantTerm,
    #[error("reversion requires a zero constant term")]
    ReversionNonzeroConstant,
    #[error("reversion requires a non-zero linear coefficient")]
    ReversionZeroLinear,
    #[error("negative shift would drop the non-zero coefficient of x^{index}")]
    ShiftAcrossNonzero { index: usize },
    #[error("shift by {shift} exceeds the series order {order}")]
    ShiftBeyondOrder { shift: i64, order: usize },
    #[error("coefficient of x^{index} is not an integer: {value}")]
    NonIntegralCoefficient { index: usize, value: ExactRational },
}

/// A formal power series truncated at an explicit order (inclusive).
///
/// The coefficient list always has length `order + 1`; coefficients past the
/// order are unknown, not zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<ExactRational>,
}

impl PowerSeries {
    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    pub fn from_rationals(coeffs: Vec<ExactRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a power series stores at least the constant coefficient"
        );
        Self { coeffs }
    }

    /// Series with small integer coefficients; the order is `values.len() - 1`.
    pub fn from_integers(values: &[i64]) -> Self {
        Self::from_rationals(values.iter().copied().map(rational).collect())
    }

    /// Polynomial with the given low-order integer coefficients, zero-padded
    /// (or truncated) to the requested order.
    pub fn polynomial(values: &[i64], order: usize) -> Self {
        let mut coeffs: Vec<ExactRational> = values
            .iter()
            .take(order + 1)
            .copied()
            .map(rational)
            .collect();
        coeffs.resize(order + 1, ExactRational::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![ExactRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::polynomial(&[1], order)
    }

    /// The identity series `x`.
    pub fn x(order: usize) -> Self {
        Self::polynomial(&[0, 1], order)
    }

    pub fn constant(value: ExactRational, order: usize) -> Self {
        let mut series = Self::zero(order);
        series.coeffs[0] = value;
        series
    }

    /// Inclusive truncation order.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`. Panics past the truncation order: those
    /// coefficients are unknown, not zero.
    pub fn coeff(&self, k: usize) -> &ExactRational {
        assert!(
            k <= self.order(),
            "coefficient of x^{k} requested from a series truncated at order {}",
            self.order()
        );
        &self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Copy truncated to a smaller (or equal) order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot extend a series from order {} to {order}",
            self.order()
        );
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Termwise sum, truncated to the minimum order of the inputs.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order]
            .iter()
            .zip(&other.coeffs[..=order])
            .map(|(a, b)| a + b)
            .collect();
        Self { coeffs }
    }

    /// Termwise difference, truncated to the minimum order of the inputs.
    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order]
            .iter()
            .zip(&other.coeffs[..=order])
            .map(|(a, b)| a - b)
            .collect();
        Self { coeffs }
    }

    /// Termwise negation.
    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Termwise multiplication by a scalar.
    pub fn scale(&self, factor: &ExactRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Cauchy product, truncated to the minimum order of the inputs.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![ExactRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                add_assign_exact(&mut coeffs[i + j], mul_exact(a, b));
            }
        }
        Self { coeffs }
    }

    /// Square root with constant term `+1`.
    ///
    /// Solves `s*s = self` coefficient by coefficient:
    /// `s_n = (f_n - sum_{i=1}^{n-1} s_i s_{n-i}) / 2`. The result satisfies
    /// `s.mul(&s) == *self` exactly to the truncation order.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::SqrtConstantTerm {
                found: self.coeffs[0].clone(),
            });
        }
        let order = self.order();
        let two = rational(2);
        let mut root = vec![ExactRational::zero(); order + 1];
        root[0] = ExactRational::one();
        for n in 1..=order {
            let mut convolution = ExactRational::zero();
            for i in 1..n {
                add_assign_exact(&mut convolution, mul_exact(&root[i], &root[n - i]));
            }
            root[n] = (&self.coeffs[n] - convolution) / &two;
        }
        Ok(Self { coeffs: root })
    }

    /// Substitution `self(inner(x))`; `inner` must have a zero constant term.
    ///
    /// Truncates to the minimum order of the inputs. Evaluated by Horner's
    /// scheme from the highest non-zero coefficient of `self`.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::ComposeConstantTerm);
        }
        let order = self.order().min(inner.order());
        let inner = if inner.order() > order {
            inner.truncated(order)
        } else {
            inner.clone()
        };
        let top = match (0..=order).rev().find(|&i| !self.coeffs[i].is_zero()) {
            Some(top) => top,
            None => return Ok(Self::zero(order)),
        };
        let mut acc = Self::constant(self.coeffs[top].clone(), order);
        for i in (0..top).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[i];
        }
        Ok(acc)
    }

    /// Compositional inverse: the series `r` with `self(r(x)) = x` and
    /// `r(self(x)) = x` to the truncation order.
    ///
    /// Requires a zero constant term and a non-zero linear coefficient. The
    /// coefficients are found by matching the composition `r(self) = x`
    /// degree by degree, which is triangular in the unknowns: the degree-n
    /// equation involves `r_1 ..= r_n` and is solved for `r_n` using the
    /// precomputed powers of `self`.
    pub fn reversion(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ReversionNonzeroConstant);
        }
        if self.order() == 0 || self.coeffs[1].is_zero() {
            return Err(SeriesError::ReversionZeroLinear);
        }
        let order = self.order();
        let linear = &self.coeffs[1];

        // powers[k - 1] = self^k, each truncated at `order`
        let mut powers: Vec<PowerSeries> = Vec::with_capacity(order);
        powers.push(self.clone());
        for _ in 2..=order {
            let next = powers.last().unwrap().mul(self);
            powers.push(next);
        }

        let mut coeffs = vec![ExactRational::zero(); order + 1];
        coeffs[1] = linear.recip();
        let mut linear_power = linear.clone();
        for n in 2..=order {
            linear_power *= linear;
            let mut sum = ExactRational::zero();
            for k in 1..n {
                if !coeffs[k].is_zero() {
                    add_assign_exact(&mut sum, mul_exact(&coeffs[k], &powers[k - 1].coeffs[n]));
                }
            }
            coeffs[n] = -(sum / &linear_power);
        }
        Ok(Self { coeffs })
    }

    /// Sign inversion `f(x) -> -f(-x)`: negates the coefficients of even
    /// exponents. An involution.
    pub fn sign_invert(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { -c } else { c.clone() })
            .collect();
        Self { coeffs }
    }

    /// Argument negation `f(x) -> f(-x)`: negates the coefficients of odd
    /// exponents. An involution; `sign_invert` is its termwise negation.
    pub fn negate_argument(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self { coeffs }
    }

    /// Multiplication by `x^k`.
    ///
    /// A non-negative shift prepends zeros and raises the order by `k`. A
    /// negative shift drops the lowest `|k|` coefficients, which must all be
    /// zero, and lowers the order by `|k|`.
    pub fn shift(&self, k: i64) -> Result<Self, SeriesError> {
        if k >= 0 {
            let k = k as usize;
            let mut coeffs = vec![ExactRational::zero(); k];
            coeffs.extend_from_slice(&self.coeffs);
            Ok(Self { coeffs })
        } else {
            let drop = k.unsigned_abs() as usize;
            if drop > self.order() {
                return Err(SeriesError::ShiftBeyondOrder {
                    shift: k,
                    order: self.order(),
                });
            }
            if let Some(index) = (0..drop).find(|&i| !self.coeffs[i].is_zero()) {
                return Err(SeriesError::ShiftAcrossNonzero { index });
            }
            Ok(Self {
                coeffs: self.coeffs[drop..].to_vec(),
            })
        }
    }

    /// Extract the coefficients as integers, failing on the first coefficient
    /// that is not integral.
    pub fn integer_coefficients(&self) -> Result<Vec<BigInt>, SeriesError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(SeriesError::NonIntegralCoefficient {
                        index,
                        value: c.clone(),
                    })
                }
            })
            .collect()
    }
}
