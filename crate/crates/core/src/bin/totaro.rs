use clap::Parser;

fn main() {
    let cli = totaro::cli::Cli::parse();
    std::process::exit(totaro::cli::main_with(cli));
}
