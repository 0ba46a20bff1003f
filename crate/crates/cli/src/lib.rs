//! The `prelie` command line: argument grammar, execution and rendering.

pub mod args;
pub mod output;
pub mod registry;
mod run;

pub use run::{
    execute, exit_code, Outcome, EXIT_CAP, EXIT_CHECK_FAILED, EXIT_DISAGREEMENT, EXIT_OK,
    EXIT_USAGE,
};
