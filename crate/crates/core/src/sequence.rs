//! Exact integer sequences and their log-concavity verdicts.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntSeq(pub Vec<BigInt>);

impl IntSeq {
    pub fn from_i64(v: &[i64]) -> Self {
        IntSeq(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        IntSeq(vec![BigInt::zero(); len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[BigInt] {
        &self.0
    }

    pub fn get(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn sum(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn abs(&self) -> IntSeq {
        IntSeq(self.0.iter().map(|x| x.abs()).collect())
    }

    /// Pad with trailing zeros up to `len`.
    pub fn padded(&self, len: usize) -> IntSeq {
        let mut v = self.0.clone();
        if v.len() < len {
            v.resize(len, BigInt::zero());
        }
        IntSeq(v)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|x| x.to_string()).collect()
    }
}

impl fmt::Debug for IntSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<BigInt>> for IntSeq {
    fn from(v: Vec<BigInt>) -> Self {
        IntSeq(v)
    }
}

/// First interior index `i` with `s[i-1] * s[i+1] > s[i]^2`, if any.
pub fn log_concavity_violation(s: &IntSeq) -> Option<usize> {
    let v = &s.0;
    (1..v.len().saturating_sub(1)).find(|&i| &v[i - 1] * &v[i + 1] > &v[i] * &v[i])
}

pub fn is_log_concave(s: &IntSeq) -> bool {
    log_concavity_violation(s).is_none()
}

pub fn strict_log_concavity_violation(s: &IntSeq) -> Option<usize> {
    let v = &s.0;
    (1..v.len().saturating_sub(1)).find(|&i| &v[i - 1] * &v[i + 1] >= &v[i] * &v[i])
}

pub fn is_strictly_log_concave(s: &IntSeq) -> bool {
    strict_log_concavity_violation(s).is_none()
}

/// True iff some zero sits strictly between two nonzero entries.
pub fn has_internal_zeros(s: &IntSeq) -> bool {
    let nz: Vec<usize> = s.0.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect();
    match (nz.first(), nz.last()) {
        (Some(&a), Some(&b)) => b - a + 1 != nz.len(),
        _ => false,
    }
}

pub fn is_nonnegative(s: &IntSeq) -> bool {
    s.0.iter().all(|x| !x.is_negative())
}

/// Nonzero entries alternate in sign starting positive, and zeros appear
/// only as a suffix.
pub fn is_sign_alternating(s: &IntSeq) -> bool {
    let v = &s.0;
    let support = v.iter().rposition(|x| !x.is_zero()).map_or(0, |i| i + 1);
    v[..support].iter().enumerate().all(|(i, x)| {
        if i % 2 == 0 {
            x.is_positive()
        } else {
            x.is_negative()
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogConcavityVerdict {
    pub log_concave: bool,
    pub strictly_log_concave: bool,
    pub internal_zeros: bool,
    pub nonnegative: bool,
    pub sign_alternating: bool,
    pub first_violation: Option<usize>,
    pub first_strict_violation: Option<usize>,
}

impl LogConcavityVerdict {
    pub fn of(s: &IntSeq) -> Self {
        let first_violation = log_concavity_violation(s);
        let first_strict_violation = strict_log_concavity_violation(s);
        Self {
            log_concave: first_violation.is_none(),
            strictly_log_concave: first_strict_violation.is_none(),
            internal_zeros: has_internal_zeros(s),
            nonnegative: is_nonnegative(s),
            sign_alternating: is_sign_alternating(s),
            first_violation,
            first_strict_violation,
        }
    }

    /// Nonnegative, log-concave, no internal zeros.
    pub fn h_vector_ok(&self) -> bool {
        self.nonnegative && self.log_concave && !self.internal_zeros
    }

    /// Nonnegative, strictly log-concave, no internal zeros.
    pub fn f_vector_ok(&self) -> bool {
        self.nonnegative && self.strictly_log_concave && !self.internal_zeros
    }
}
