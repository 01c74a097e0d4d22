use std::io;

fn main() {
    let budget = std::env::var(torskit::cli::BUDGET_VAR).ok();
    let code = torskit::cli::run(std::env::args_os(), budget.as_deref(), &mut io::stdout().lock(), &mut io::stderr());
    std::process::exit(code);
}
