//! Reference values for the acceptance runner in `tests/acceptance.rs`.
//!
//! Run it with `cargo test -p fracpow-validation --test acceptance`; it
//! prints one `PASS`/`FAIL` line per criterion and exits nonzero when any
//! criterion fails.

pub mod published;
