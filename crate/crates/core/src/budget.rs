use crate::error::{Error, Result};

/// Environment variable overriding [`Budget::DEFAULT_MAX_CELLS`].
pub const MAX_CELLS_ENV: &str = "WYTHOFF_MAX_CELLS";

/// Upper bound on the number of cells (box positions or sponge points) a
/// single computation may materialize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_cells: u64,
}

impl Budget {
    pub const DEFAULT_MAX_CELLS: u64 = 1 << 24;

    pub const fn new(max_cells: u64) -> Self {
        Budget { max_cells }
    }

    /// Reads `WYTHOFF_MAX_CELLS`, falling back to the default when unset or
    /// unparsable.
    pub fn from_env() -> Self {
        std::env::var(MAX_CELLS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map_or_else(Budget::default, Budget::new)
    }

    pub fn check(&self, requested: u128) -> Result<()> {
        if requested > u128::from(self.max_cells) {
            Err(Error::BudgetExceeded {
                requested,
                limit: self.max_cells,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_MAX_CELLS)
    }
}

/// `base^exp` without overflow, saturating at `u128::MAX`.
pub(crate) fn saturating_pow(base: u64, exp: usize) -> u128 {
    let exp = u32::try_from(exp).unwrap_or(u32::MAX);
    u128::from(base).checked_pow(exp).unwrap_or(u128::MAX)
}
