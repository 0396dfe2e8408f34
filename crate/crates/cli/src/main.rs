use clap::Parser;
use presmat_cli::{render, run, Cli};

fn main() {
    let cli = Cli::parse();
    let report = run(&cli);
    print!("{}", render(&report, cli.format));
    if let Some(e) = &report.error {
        eprintln!("presmat: {e}");
    }
    std::process::exit(report.outcome.exit_code());
}
