mod commands;

use std::process::ExitCode;

use clap::Parser;

/// Die quietly when a downstream pipe closes instead of panicking on the
/// next write.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = commands::Cli::parse();
    commands::run(cli)
}
