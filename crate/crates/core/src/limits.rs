//! Process-wide guard on the number of points enumeration may hold.

use core::sync::atomic::{AtomicUsize, Ordering};

const DEFAULT_MAX_POINTS: usize = 1 << 26;

static MAX_POINTS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_POINTS);

/// Caps the number of stored lattice points across one enumeration.
pub fn set_max_points(points: usize) {
    MAX_POINTS.store(points.max(1), Ordering::Relaxed);
}

pub fn max_points() -> usize {
    MAX_POINTS.load(Ordering::Relaxed)
}

/// Converts a memory budget in MiB to a point budget.
pub fn points_for_megabytes(mb: usize) -> usize {
    mb.saturating_mul(1 << 20) / 48
}
