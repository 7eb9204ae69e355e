//! Holds the `acceptance` test target, which checks every numbered
//! acceptance criterion and prints one PASS/FAIL line for each:
//!
//! ```text
//! cargo test -p lmbraid-verification --test acceptance
//! ```
