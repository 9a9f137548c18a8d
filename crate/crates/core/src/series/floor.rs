use std::sync::atomic::{AtomicI64, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_Q_FLOOR: i64 = -64;
pub const Q_FLOOR_ENV: &str = "CYLQ_QFLOOR";

static Q_FLOOR: AtomicI64 = AtomicI64::new(DEFAULT_Q_FLOOR);

pub fn q_floor() -> i64 {
    Q_FLOOR.load(Ordering::Relaxed)
}

pub fn set_q_floor(floor: i64) {
    Q_FLOOR.store(floor, Ordering::Relaxed);
}

/// Reads `CYLQ_QFLOOR` and installs it as the process-wide floor.
pub fn init_q_floor_from_env() -> Result<i64> {
    if let Ok(raw) = std::env::var(Q_FLOOR_ENV) {
        let value: i64 = raw
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("{Q_FLOOR_ENV}={raw} is not an integer")))?;
        if value > 0 {
            return Err(Error::InvalidArgument(format!("{Q_FLOOR_ENV} must be <= 0")));
        }
        set_q_floor(value);
    }
    Ok(q_floor())
}

pub fn check_exponent(exponent: i64) -> Result<()> {
    let limit = q_floor();
    if exponent < limit {
        Err(Error::FloorUnderflow { exponent, limit })
    } else {
        Ok(())
    }
}
