//! Front end for `lietriple`: the algebra-description format, command
//! implementations and report rendering.

pub mod app;
pub mod commands;
pub mod format;
pub mod output;
