//! JSON documents, the `wlim` command surface and the invariant suite.

pub mod commands;
pub mod doc;
pub mod suite;
pub mod workspace;

use wlim_core::Error as CoreError;

/// Exit status for a failed run: 3 when the enumeration cap was hit, 2 otherwise.
pub fn error_code(e: &anyhow::Error) -> i32 {
    let capped = e.chain().any(|c| matches!(c.downcast_ref::<CoreError>(), Some(CoreError::CapExceeded(_))));
    if capped {
        3
    } else {
        2
    }
}
