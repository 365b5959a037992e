//! Arbitrary-precision rationals and their text form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("zero denominator in \"{0}\"")]
    ZeroDenominator(String),
    #[error("not an exact rational: \"{0}\"")]
    Malformed(String),
}

/// Parses `"a"` or `"a/b"` with decimal integers `a`, `b` (optional sign).
pub fn parse_rational(text: &str) -> Result<BigRational, ParseRationalError> {
    let malformed = || ParseRationalError::Malformed(text.to_string());
    let int = |s: &str| -> Result<BigInt, ParseRationalError> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        BigInt::from_str(s).map_err(|_| malformed())
    };
    match text.split_once('/') {
        None => Ok(BigRational::from_integer(int(text)?)),
        Some((n, d)) => {
            let (n, d) = (int(n)?, int(d)?);
            if d.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(text.to_string()));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// `"n/d"` in lowest terms with positive `d`, or `"n"` when `d = 1`.
pub fn format_rational(q: &BigRational) -> String {
    q.to_string()
}
