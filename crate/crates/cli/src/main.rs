use clap::Parser;
use proxi_cli::Cli;

fn main() {
    let cli = Cli::parse();
    if let Err(e) = proxi_cli::run(&cli) {
        eprintln!("proxi: {e}");
        std::process::exit(e.exit_code());
    }
}
