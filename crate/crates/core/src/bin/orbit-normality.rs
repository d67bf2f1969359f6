use std::io::Write;

use orbit_normality::cli::{run, MAX_SIZE_ENV};

fn main() {
    let env_max = std::env::var(MAX_SIZE_ENV).ok();
    let outcome = run(std::env::args_os(), env_max.as_deref());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(outcome.code);
}
