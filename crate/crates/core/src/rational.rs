//! Exact scalars.
//!
//! Every coefficient in this crate is a reduced `i64` fraction. Arithmetic is
//! checked: an overflow aborts with a panic instead of silently wrapping, so a
//! result that comes back is always exact.

use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Zero};

pub type Rational = num_rational::Rational64;

pub fn q(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(value)
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

#[track_caller]
pub fn add(a: Rational, b: Rational) -> Rational {
    a.checked_add(&b).expect("rational overflow in addition")
}

#[track_caller]
pub fn sub(a: Rational, b: Rational) -> Rational {
    a.checked_sub(&b).expect("rational overflow in subtraction")
}

#[track_caller]
pub fn mul(a: Rational, b: Rational) -> Rational {
    a.checked_mul(&b)
        .expect("rational overflow in multiplication")
}

#[track_caller]
pub fn div(a: Rational, b: Rational) -> Rational {
    assert!(!b.is_zero(), "division by zero");
    a.checked_div(&b).expect("rational overflow in division")
}

/// `p/q` with `q > 0`, integers included (`3/1`).
pub fn fmt_pq(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Integer value of `value` if it has denominator one.
pub fn as_integer(value: &Rational) -> Option<i64> {
    value.is_integer().then(|| *value.numer())
}
