//! Optional process-wide cap on completion work.
//!
//! The completion search is the only unbounded loop in the crate. Front ends
//! (notably the CLI's `--max-steps` flag) may install a cap on the number of
//! node expansions; when the cap is hit the search aborts with
//! [`Error::StepLimitExceeded`](crate::error::Error::StepLimitExceeded)
//! instead of ever returning a truncated answer. By default there is no cap.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

static LIMIT: AtomicU64 = AtomicU64::new(0);
static USED: AtomicU64 = AtomicU64::new(0);

/// Installs a cap on completion steps for the whole process (`None` removes
/// it) and resets the step counter.
pub fn set_step_limit(limit: Option<u64>) {
    LIMIT.store(limit.unwrap_or(0), Ordering::SeqCst);
    USED.store(0, Ordering::SeqCst);
}

/// Number of completion steps consumed since the last [`set_step_limit`].
pub fn steps_used() -> u64 {
    USED.load(Ordering::Relaxed)
}

#[inline]
pub(crate) fn consume() -> Result<()> {
    let limit = LIMIT.load(Ordering::Relaxed);
    let used = USED.fetch_add(1, Ordering::Relaxed) + 1;
    if limit != 0 && used > limit {
        return Err(Error::StepLimitExceeded);
    }
    Ok(())
}
