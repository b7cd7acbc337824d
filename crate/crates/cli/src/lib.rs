//! Script front end for reeskit: parse a session script, run it, and render
//! the results as text or JSON.

pub mod output;
pub mod run;
pub mod script;

pub use output::{exit, Report, Status};
pub use run::{run, Settings};
pub use script::{parse, render, ParseError, SessionScript};
