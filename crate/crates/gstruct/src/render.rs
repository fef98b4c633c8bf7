//! Human-readable rendering of big and factored integers.

use gstruct_core::FactoredInteger;
use num_bigint::BigUint;

/// Decimal expansions longer than this are replaced by an order of magnitude.
pub const MAX_DECIMAL_DIGITS: usize = 40;

/// `"24 (2^3 · 3)"`, or `"≈10^52 (2^175 · ...)"` once the decimal form
/// exceeds [`MAX_DECIMAL_DIGITS`] digits.
pub fn factored(f: &FactoredInteger) -> String {
    format!("{} ({})", magnitude(&f.to_biguint()), f.factor_string())
}

pub fn magnitude(n: &BigUint) -> String {
    let decimal = n.to_str_radix(10);
    if decimal.len() > MAX_DECIMAL_DIGITS {
        format!("≈10^{}", decimal.len() - 1)
    } else {
        decimal
    }
}
