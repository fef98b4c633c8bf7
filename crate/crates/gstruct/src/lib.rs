//! Text, JSON and CSV front end for `gstruct-core`.

pub mod atlas;
pub mod battery;
pub mod render;
pub mod schema;

use gstruct_core::enumerate::DEFAULT_CAP;

/// Environment variable overriding the enumeration safety cap.
pub const CAP_VAR: &str = "GSTRUCT_ENUM_CAP";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{CAP_VAR} must be a positive integer, got {0:?}")]
pub struct BadCap(pub String);

/// The enumeration cap from `value` (the contents of [`CAP_VAR`]), or the
/// default when unset.
pub fn parse_cap(value: Option<&str>) -> Result<usize, BadCap> {
    match value {
        None => Ok(DEFAULT_CAP),
        Some(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(BadCap(s.to_string())),
        },
    }
}

/// Parses `"1,0,2"` into coefficients; an empty string is the rank-zero list.
pub fn parse_weight(s: &str) -> Result<Vec<u32>, std::num::ParseIntError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse()).collect()
}

/// Parses `"a..b"` or `"a..=b"` as an inclusive range.
pub fn parse_range(s: &str) -> Option<std::ops::RangeInclusive<u64>> {
    let (a, b) = s.split_once("..")?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
    (a <= b).then_some(a..=b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps() {
        assert_eq!(parse_cap(None), Ok(DEFAULT_CAP));
        assert_eq!(parse_cap(Some("500")), Ok(500));
        assert!(parse_cap(Some("0")).is_err());
        assert!(parse_cap(Some("lots")).is_err());
    }

    #[test]
    fn weights_and_ranges() {
        assert_eq!(parse_weight("1, 0,2"), Ok(vec![1, 0, 2]));
        assert!(parse_weight("1,-1").is_err());
        assert_eq!(parse_range("9..31"), Some(9..=31));
        assert_eq!(parse_range("9..=31"), Some(9..=31));
        assert_eq!(parse_range("31..9"), None);
        assert_eq!(parse_range("9"), None);
    }
}
