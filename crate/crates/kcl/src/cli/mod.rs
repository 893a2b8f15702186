//! Command-line front end. Thin: every subcommand parses flags, calls the
//! library, and prints a report.

pub fn run() -> i32 {
    eprintln!("not yet wired");
    1
}
