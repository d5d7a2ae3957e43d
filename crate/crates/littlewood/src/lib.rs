//! Standard-library companion to `littlewood-core`: seeded evaluation
//! points, parallel verification batches, JSON/CSV records and the
//! `littlewood` command-line tool.

pub mod batch;
pub mod cli;
pub mod format;
pub mod points;
