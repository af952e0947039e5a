//! Size guards for the exponential parts of the library.

use crate::error::{Error, Result};

/// Environment variable that overrides [`DEFAULT_MAX_ENUM`].
pub const MAX_ENUM_ENV: &str = "HYPERSPECTRA_MAX_ENUM";
/// Default cap on the total vertex count of a join or corona enumeration.
pub const DEFAULT_MAX_ENUM: usize = 20;
pub const MAX_ORACLE_VERTICES: usize = 14;
pub const MAX_ISO_VERTICES: usize = 10;
pub const MAX_ORBIT_VERTICES: usize = 8;
pub const MAX_CHARPOLY_ORDER: usize = 40;

pub fn max_enum() -> usize {
    std::env::var(MAX_ENUM_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ENUM)
}

pub(crate) fn check(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::TooLarge { what, size, limit })
    } else {
        Ok(())
    }
}

pub(crate) fn check_enum(what: &'static str, size: usize) -> Result<()> {
    check(what, size, max_enum())
}
